//! Integer factorization of Mersenne numbers `2^m - 1`, `m <= 64`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1 << 20;
const RHO_ATTEMPTS: u64 = 64;
const RHO_MAX_ITERS: u64 = 1 << 26;

/// First 40 primes. The first twelve already make the test deterministic
/// below 2^64.
const WITNESSES: [u64; 40] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

#[inline]
fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite `n`, or `None` if every attempt cycles out.
fn pollard_rho(n: u64) -> Option<u64> {
    for c in 1..=RHO_ATTEMPTS {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        let m = 128u64;
        let mut iters = 0u64;
        while g == 1 && iters < RHO_MAX_ITERS {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            iters += r;
            r *= 2;
        }
        if g == n {
            // backtrack one step at a time
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g > 1 && g < n {
            return Some(g);
        }
    }
    None
}

fn push_factor(out: &mut Vec<(u64, u32)>, p: u64) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    }
}

/// Full factorization of `n`, sorted by prime. On failure returns the
/// cofactor that resisted.
pub fn factorize(mut n: u64) -> std::result::Result<Vec<(u64, u32)>, u64> {
    let mut out = Vec::new();
    while n % 2 == 0 && n > 0 {
        push_factor(&mut out, 2);
        n /= 2;
    }
    let mut p = 3u64;
    while p <= TRIAL_LIMIT && p.saturating_mul(p) <= n {
        while n % p == 0 {
            push_factor(&mut out, p);
            n /= p;
        }
        if n > 1 && is_prime(n) {
            break;
        }
        p += 2;
    }
    let mut pending = if n > 1 { vec![n] } else { Vec::new() };
    while let Some(c) = pending.pop() {
        if is_prime(c) {
            push_factor(&mut out, c);
            continue;
        }
        let d = pollard_rho(c).ok_or(c)?;
        pending.push(d);
        pending.push(c / d);
    }
    out.sort_unstable();
    Ok(out)
}

static MEMO: [OnceLock<Result<Vec<(u64, u32)>>>; 65] = [const { OnceLock::new() }; 65];

/// Prime factorization of `2^m - 1` as `(prime, exponent)` pairs in
/// increasing prime order. Results are memoized per `m`.
pub fn factorize_mersenne(m: u32) -> Result<Vec<(u64, u32)>> {
    if !(1..=64).contains(&m) {
        return Err(Error::MersenneRange { m });
    }
    MEMO[m as usize]
        .get_or_init(|| {
            let n = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
            factorize(n).map_err(|cofactor| Error::FactorizationIncomplete { m, cofactor })
        })
        .clone()
}
