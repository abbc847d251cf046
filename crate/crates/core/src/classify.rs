//! Irreducibility, primitivity and period of polynomials over GF(2).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::factorize_mersenne;
use crate::poly::Poly;

/// Step budget for the brute-force period search.
pub const DEFAULT_PERIOD_CAP: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PeriodMethod {
    OrderComputation,
    BruteForceStepping,
    /// No period exists because `x` divides the polynomial.
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub input: Poly,
    pub degree: isize,
    pub weight: usize,
    pub irreducible: bool,
    pub primitive: bool,
    pub period: Option<u64>,
    pub method: PeriodMethod,
}

fn require_degree(f: &Poly, op: &'static str) -> Result<usize> {
    match f.deg() {
        Some(m) if m >= 1 => Ok(m),
        _ => Err(Error::DegreeTooSmall {
            op,
            min: 1,
            degree: f.degree(),
        }),
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mersenne(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Rabin's test: `x^(2^m) = x (mod f)` and `gcd(x^(2^(m/q)) - x, f) = 1`
/// for every prime `q | m`.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let m = require_degree(f, "is_irreducible")?;
    if m == 1 {
        return Ok(true);
    }
    let x = Poly::x();
    if Poly::pow2k_x_mod(m, f)? != x {
        return Ok(false);
    }
    for q in prime_divisors(m) {
        let h = Poly::pow2k_x_mod(m / q, f)?.add(&x);
        if !f.gcd(&h)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn order_of_x(f: &Poly, m: usize) -> Result<Option<u64>> {
    if m > 64 {
        return Ok(None);
    }
    let factors = match factorize_mersenne(m as u32) {
        Ok(fs) => fs,
        Err(Error::FactorizationIncomplete { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut e = mersenne(m);
    for (p, _) in factors {
        while e % p == 0 && Poly::powmod_x(e / p, f)?.is_one() {
            e /= p;
        }
    }
    Ok(Some(e))
}

fn period_by_stepping(f: &Poly, cap: u64) -> Option<u64> {
    let mut r = Poly::x().rem(f).expect("deg f >= 1");
    for e in 1..=cap {
        if r.is_one() {
            return Some(e);
        }
        r.mul_x_mod_assign(f);
    }
    None
}

/// Least `e >= 1` with `f | x^e - 1`, together with how it was found.
/// Irreducible inputs use the order of `x` in the multiplicative group;
/// everything else steps `r <- r*x mod f` at most `cap` times.
pub fn period_with_method(f: &Poly, cap: u64) -> Result<(Option<u64>, PeriodMethod)> {
    let m = require_degree(f, "period")?;
    if !f.constant_term() {
        return Err(Error::ConstantTermZero { op: "period" });
    }
    if is_irreducible(f)? {
        if let Some(e) = order_of_x(f, m)? {
            return Ok((Some(e), PeriodMethod::OrderComputation));
        }
    }
    Ok((period_by_stepping(f, cap), PeriodMethod::BruteForceStepping))
}

pub fn period(f: &Poly, cap: u64) -> Result<Option<u64>> {
    period_with_method(f, cap).map(|(e, _)| e)
}

/// Irreducible with period `2^m - 1`. A Mersenne factorization that cannot
/// be completed is reported as [`Error::FactorizationIncomplete`] rather
/// than a negative answer.
pub fn is_primitive(f: &Poly) -> Result<bool> {
    let m = require_degree(f, "is_primitive")?;
    if !f.constant_term() {
        return Err(Error::ConstantTermZero { op: "is_primitive" });
    }
    if !is_irreducible(f)? {
        return Ok(false);
    }
    if m > 64 {
        return Err(Error::Unverifiable {
            degree: m,
            reason: "2^m-1 factorization supported only for m <= 64".into(),
        });
    }
    let order = mersenne(m);
    for (q, _) in factorize_mersenne(m as u32)? {
        if Poly::powmod_x(order / q, f)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn classify(f: &Poly, cap: u64) -> Result<ClassifyReport> {
    let irreducible = is_irreducible(f)?;
    let (primitive, period, method) = if f.constant_term() {
        let (period, method) = period_with_method(f, cap)?;
        (is_primitive(f)?, period, method)
    } else {
        (false, None, PeriodMethod::Undefined)
    };
    Ok(ClassifyReport {
        input: f.clone(),
        degree: f.degree(),
        weight: f.weight(),
        irreducible,
        primitive,
        period,
        method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maxweight::MaxWeightPoly;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn all_polys_of_degree(d: usize) -> impl Iterator<Item = Poly> {
        (0u64..(1 << d)).map(move |low| Poly::from_u64(low | (1 << d)))
    }

    /// Trial division by every polynomial of degree 1..=m/2.
    fn irreducible_oracle(f: &Poly) -> bool {
        let m = f.deg().unwrap();
        (1..=m / 2).all(|d| all_polys_of_degree(d).all(|g| !f.rem(&g).unwrap().is_zero()))
    }

    fn period_oracle(f: &Poly) -> u64 {
        let mut e = 1u64;
        loop {
            let xe_plus_1 = Poly::from_exponents([e as usize, 0]);
            if xe_plus_1.rem(f).unwrap().is_zero() {
                return e;
            }
            e += 1;
        }
    }

    #[test]
    fn irreducible_examples() {
        assert!(is_irreducible(&p("x^3+x+1")).unwrap());
        assert!(!is_irreducible(&p("x^2+1")).unwrap());
        assert!(!is_irreducible(&MaxWeightPoly::new(9, 3).unwrap().expand()).unwrap());
        assert!(is_irreducible(&p("x")).unwrap());
        assert!(is_irreducible(&Poly::one()).is_err());
        assert!(is_irreducible(&Poly::zero()).is_err());
    }

    #[test]
    fn irreducible_matches_trial_division_exhaustively() {
        for d in 1..=12 {
            for f in all_polys_of_degree(d) {
                assert_eq!(is_irreducible(&f).unwrap(), irreducible_oracle(&f), "{f}");
            }
        }
    }

    #[test]
    fn period_examples() {
        assert_eq!(period(&p("x+1"), DEFAULT_PERIOD_CAP).unwrap(), Some(1));
        assert_eq!(period(&p("x^3+x+1"), DEFAULT_PERIOD_CAP).unwrap(), Some(7));
        assert_eq!(period(&p("x^4+x^3+x^2+x+1"), DEFAULT_PERIOD_CAP).unwrap(), Some(5));
        assert!(p("x^5+1").rem(&p("x^4+x^3+x^2+x+1")).unwrap().is_zero());
        assert!(matches!(
            period(&p("x^2+x"), DEFAULT_PERIOD_CAP),
            Err(Error::ConstantTermZero { .. })
        ));
        // (x+1)^2 has period 2, reached by stepping
        assert_eq!(
            period_with_method(&p("x^2+1"), DEFAULT_PERIOD_CAP).unwrap(),
            (Some(2), PeriodMethod::BruteForceStepping)
        );
        assert_eq!(period(&p("x^7+1"), 3).unwrap(), None);
    }

    #[test]
    fn period_matches_oracle_for_small_polys() {
        for d in 1..=9 {
            for f in all_polys_of_degree(d).filter(|f| f.constant_term()) {
                assert_eq!(period(&f, DEFAULT_PERIOD_CAP).unwrap(), Some(period_oracle(&f)), "{f}");
            }
        }
    }

    #[test]
    fn irreducible_period_divides_mersenne() {
        for d in 1..=16usize {
            let step = if d > 12 { 97 } else { 1 };
            for f in all_polys_of_degree(d).step_by(step).filter(|f| f.constant_term()) {
                if is_irreducible(&f).unwrap() {
                    let (e, method) = period_with_method(&f, DEFAULT_PERIOD_CAP).unwrap();
                    assert_eq!(method, PeriodMethod::OrderComputation);
                    assert_eq!(mersenne(d) % e.unwrap(), 0, "{f}");
                }
            }
        }
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive(&p("x^3+x+1")).unwrap());
        assert!(!is_primitive(&p("x^4+x^3+x^2+x+1")).unwrap());
        assert!(!is_primitive(&MaxWeightPoly::new(9, 3).unwrap().expand()).unwrap());
        assert!(is_primitive(&p("x+1")).unwrap());
        assert!(is_primitive(&p("x^2+x")).is_err());
    }

    #[test]
    fn primitive_iff_full_stepping_period() {
        for d in 2..=16usize {
            let step = if d > 11 { 61 } else { 1 };
            for f in all_polys_of_degree(d).step_by(step).filter(|f| f.constant_term()) {
                let prim = is_primitive(&f).unwrap();
                let stepped = period_by_stepping(&f, DEFAULT_PERIOD_CAP).unwrap();
                let full = stepped == mersenne(d);
                assert_eq!(prim, full && is_irreducible(&f).unwrap(), "{f}");
                // a period of 2^m-1 on its own already forces irreducibility
                assert_eq!(prim, full, "{f}");
            }
        }
    }

    #[test]
    fn report_invariants() {
        let r = classify(&p("x^5+x^2+1"), DEFAULT_PERIOD_CAP).unwrap();
        assert!(r.irreducible && r.primitive);
        assert_eq!(r.period, Some(31));
        let r = classify(&p("x^3+x"), DEFAULT_PERIOD_CAP).unwrap();
        assert_eq!((r.irreducible, r.primitive, r.period), (false, false, None));
        assert_eq!(r.method, PeriodMethod::Undefined);
    }

    #[test]
    fn degree_above_64() {
        // x^127+x+1 is irreducible, but 2^127-1 is beyond the factoring range
        let f = p("x^127+x+1");
        assert!(is_irreducible(&f).unwrap());
        assert!(matches!(is_primitive(&f), Err(Error::Unverifiable { .. })));
    }
}
