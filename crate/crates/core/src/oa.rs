//! The window code `C_n^f` of a shift-register sequence and its
//! orthogonal-array strength, certified two ways:
//!
//! * directly, by counting patterns on every `t`-subset of columns;
//! * through the dual code, whose words are the multiples of `f` of degree
//!   below `n`: the strength is the dual minimum weight minus one.
//!
//! Rows are stored as `u64` with bit `j` holding `a_(i+j)`, which reports
//! call column `j + 1`. The coefficient of `x^j` in a dual word sits in the
//! same column.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{period, DEFAULT_PERIOD_CAP};
use crate::error::{Error, Result};
use crate::lfsr::{Bits, LfsrSequence};
use crate::poly::Poly;

/// Widest window a row can hold.
pub const MAX_WINDOW: usize = 64;

/// Largest `n - m` the dual enumeration accepts.
pub const DUAL_ENUMERATION_BOUND: usize = 28;

/// Default `t_max` for direct counting.
pub const DEFAULT_T_MAX: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowCode {
    f: Poly,
    n: usize,
    period: u64,
    rows: Vec<u64>,
    /// `columns[j]` has bit `r` set when row `r` has a one in column `j`.
    columns: Vec<Vec<u64>>,
}

fn transpose(rows: &[u64], n: usize) -> Vec<Vec<u64>> {
    let words = rows.len().div_ceil(64);
    let mut columns = vec![vec![0u64; words]; n];
    for (r, &row) in rows.iter().enumerate() {
        let mut rest = row;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            columns[j][r / 64] |= 1 << (r % 64);
            rest &= rest - 1;
        }
    }
    columns
}

fn check_divisor(f: &Poly) -> Result<usize> {
    let m = match f.deg() {
        Some(m) if m >= 1 => m,
        _ => {
            return Err(Error::DegreeTooSmall {
                op: "window code",
                min: 1,
                degree: f.degree(),
            })
        }
    };
    if !f.constant_term() {
        return Err(Error::ConstantTermZero { op: "window code" });
    }
    if !f.is_squarefree()? {
        return Err(Error::NotSquarefree { poly: f.to_string() });
    }
    Ok(m)
}

impl WindowCode {
    /// All `n`-windows of one period of the sequence with characteristic
    /// polynomial `f` and the given seed, taken cyclically, plus the zero
    /// vector. Windows are kept as a multiset in sequence order, so for
    /// `n < m` repeated windows stay repeated.
    ///
    /// The seed must generate a sequence of full period `period(f)`.
    pub fn build(f: &Poly, n: usize, seed: &Bits) -> Result<WindowCode> {
        let m = check_divisor(f)?;
        if seed.is_zero() {
            return Err(Error::ZeroSeed);
        }
        let rho = period(f, DEFAULT_PERIOD_CAP)?.ok_or_else(|| Error::PeriodCapExceeded {
            poly: f.to_string(),
            cap: DEFAULT_PERIOD_CAP,
        })?;
        let max = rho.min(MAX_WINDOW as u64);
        if n < 2 || n as u64 > max {
            return Err(Error::WindowLength { n, min: 2, max });
        }
        let rho_len = rho as usize;
        let seq = LfsrSequence::generate(f, seed, rho_len + n.max(m) - 1)?;
        let window = |i: usize, width: usize| -> u64 {
            (0..width).fold(0u64, |acc, j| acc | (seq.bit(i + j) as u64) << j)
        };
        // the m-bit states must all differ, i.e. this seed reaches period rho
        let states: HashSet<u64> = if m <= 64 {
            (0..rho_len).map(|i| window(i, m)).collect()
        } else {
            HashSet::new()
        };
        if m <= 64 && states.len() != rho_len {
            return Err(Error::SeedNotMaximal {
                windows: states.len(),
                period: rho,
            });
        }
        let mut rows: Vec<u64> = (0..rho_len).map(|i| window(i, n)).collect();
        rows.push(0);
        Ok(WindowCode {
            f: f.clone(),
            n,
            period: rho,
            columns: transpose(&rows, n),
            rows,
        })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Row `i` as bits `b_1..b_n`.
    pub fn row_bits(&self, i: usize) -> Vec<bool> {
        (0..self.n).map(|j| (self.rows[i] >> j) & 1 == 1).collect()
    }

    /// Whether every `t` columns show each of the `2^t` patterns exactly
    /// `|rows| / 2^t` times.
    pub fn is_oa_of_strength(&self, t: usize) -> bool {
        if t == 0 {
            return true;
        }
        if t > self.n || t >= usize::BITS as usize {
            return false;
        }
        let total = self.rows.len();
        if total % (1usize << t) != 0 {
            return false;
        }
        let expected = total >> t;
        let mut valid = vec![u64::MAX; total.div_ceil(64)];
        if total % 64 != 0 {
            *valid.last_mut().expect("nonempty") = (1u64 << (total % 64)) - 1;
        }
        column_subsets(self.n, t).par_iter().all(|cols| {
            let mut scratch = vec![vec![0u64; valid.len()]; t];
            balanced(&self.columns, cols, &valid, &mut scratch, expected << t)
        })
    }
}

/// Counts rows matching every pattern on `cols` by intersecting column
/// bitsets one column at a time; each prefix of `k` fixed bits must match
/// `|rows| / 2^k` rows.
fn balanced(
    columns: &[Vec<u64>],
    cols: &[usize],
    acc: &[u64],
    scratch: &mut [Vec<u64>],
    want: usize,
) -> bool {
    let have: usize = acc.iter().map(|w| w.count_ones() as usize).sum();
    if have != want {
        return false;
    }
    let Some((&c, rest_cols)) = cols.split_first() else {
        return true;
    };
    let (cur, rest) = scratch.split_first_mut().expect("one buffer per column");
    let column = &columns[c];
    for one in [true, false] {
        for ((dst, &a), &col) in cur.iter_mut().zip(acc).zip(column) {
            *dst = a & if one { col } else { !col };
        }
        if !balanced(columns, rest_cols, cur, rest, want / 2) {
            return false;
        }
    }
    true
}

/// All `t`-subsets of `0..n` in lexicographic order.
fn column_subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..t).collect();
    if t > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..t).rev().find(|&i| cur[i] < n - t + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..t {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Largest `t <= t_max` for which the rows form an orthogonal array of
/// strength `t`; 0 when even single columns are unbalanced.
pub fn strength_direct(code: &WindowCode, t_max: usize) -> usize {
    (1..=t_max.min(code.n))
        .take_while(|&t| code.is_oa_of_strength(t))
        .last()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualStrength {
    pub strength: usize,
    pub min_weight: usize,
    /// Lightest multiple `f * h` of degree below `n`.
    pub witness: Poly,
    pub cofactor: Poly,
    /// 1-indexed columns of the witness's support.
    pub witness_columns: Vec<usize>,
}

/// Carry-less product of words whose product fits in 64 bits.
fn clmul_low(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut rest = b;
    while rest != 0 {
        acc ^= a << rest.trailing_zeros();
        rest &= rest - 1;
    }
    acc
}

/// Minimum weight of the nonzero multiples of `f` with degree below `n`,
/// found by enumerating every cofactor `h` with `deg h < n - m` in
/// increasing numeric order (degree first, then lexicographic). Stops early
/// once the weight floor is reached: 2 when `period(f) < n`, else 3.
///
/// For `n = m` the dual code is `{0}`; the result is strength `n` with
/// minimum weight `n + 1` and a zero witness.
pub fn strength_dual(f: &Poly, n: usize) -> Result<DualStrength> {
    let m = check_divisor(f)?;
    if n < m || n > MAX_WINDOW {
        return Err(Error::WindowLength {
            n,
            min: m,
            max: MAX_WINDOW as u64,
        });
    }
    if n == m {
        return Ok(DualStrength {
            strength: n,
            min_weight: n + 1,
            witness: Poly::zero(),
            cofactor: Poly::zero(),
            witness_columns: Vec::new(),
        });
    }
    let free = n - m;
    if free > DUAL_ENUMERATION_BOUND {
        return Err(Error::EnumerationBound {
            bound: DUAL_ENUMERATION_BOUND,
            got: free,
        });
    }
    let fw = f.to_u64().expect("deg f < 64");
    // a weight-2 multiple x^b (x^(a-b) + 1) needs period(f) | a - b < n
    let floor = match period(f, n as u64)? {
        Some(rho) if rho < n as u64 => 2,
        _ => 3,
    };
    // f * (2^(k+1) - 1): the xor to apply when h -> h + 1 clears k low ones
    let ramps: Vec<u64> = (0..free)
        .map(|k| clmul_low(fw, (1u64 << (k + 1)) - 1))
        .collect();
    let mut g = 0u64;
    let mut best = (u32::MAX, 0u64, 0u64);
    for h in 1u64..(1u64 << free) {
        g ^= ramps[(h - 1).trailing_ones() as usize];
        let w = g.count_ones();
        if w < best.0 {
            best = (w, h, g);
            if w as usize <= floor {
                break;
            }
        }
    }
    let (w, h, g) = best;
    debug_assert_eq!(clmul_low(fw, h), g);
    let witness = Poly::from_u64(g);
    let cofactor = Poly::from_u64(h);
    if !witness.rem(f)?.is_zero() {
        unreachable!("dual witness {witness} is not a multiple of {f}");
    }
    Ok(DualStrength {
        strength: w as usize - 1,
        min_weight: w as usize,
        witness_columns: witness.exponents().map(|i| i + 1).collect(),
        witness,
        cofactor,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    Dual,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrengthReport {
    pub f: Poly,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strength_direct: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strength_dual: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_min_weight: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_columns: Option<Vec<usize>>,
}

impl StrengthReport {
    /// Direct counting stops at `t_max`, so it agrees with the dual method
    /// when it equals `min(strength_dual, t_max)`.
    pub fn agree(&self) -> bool {
        match (self.strength_direct, self.strength_dual, self.t_max) {
            (Some(d), Some(s), Some(t_max)) => d == s.min(t_max),
            _ => true,
        }
    }
}

/// Runs the requested methods on `C_n^f` built from `seed`.
pub fn strength_report(
    f: &Poly,
    n: usize,
    seed: &Bits,
    method: Method,
    t_max: usize,
) -> Result<StrengthReport> {
    let mut report = StrengthReport {
        f: f.clone(),
        n,
        strength_direct: None,
        t_max: None,
        strength_dual: None,
        dual_min_weight: None,
        witness: None,
        witness_columns: None,
    };
    if matches!(method, Method::Dual | Method::Both) {
        let dual = strength_dual(f, n)?;
        report.strength_dual = Some(dual.strength);
        report.dual_min_weight = Some(dual.min_weight);
        report.witness_columns = Some(dual.witness_columns);
        report.witness = Some(dual.witness);
    }
    if matches!(method, Method::Direct | Method::Both) {
        let code = WindowCode::build(f, n, seed)?;
        report.strength_direct = Some(strength_direct(&code, t_max));
        report.t_max = Some(t_max);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::is_primitive;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    /// Direct count over explicit bit rows, independent of the packed path.
    fn oracle_strength(rows: &[Vec<bool>], n: usize, t_max: usize) -> usize {
        let mut best = 0;
        'outer: for t in 1..=t_max.min(n) {
            if rows.len() % (1 << t) != 0 {
                break;
            }
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != t {
                    continue;
                }
                let cols: Vec<usize> = (0..n).filter(|&c| mask >> c & 1 == 1).collect();
                for pat in 0..(1 << t) {
                    let c = rows
                        .iter()
                        .filter(|r| cols.iter().enumerate().all(|(k, &c)| r[c] == (pat >> k & 1 == 1)))
                        .count();
                    if c != rows.len() >> t {
                        break 'outer;
                    }
                }
            }
            best = t;
        }
        best
    }

    #[test]
    fn code_of_cubic_width_4() {
        let code = WindowCode::build(&p("x^3+x+1"), 4, &Bits::impulse(3)).unwrap();
        assert_eq!(code.rows().len(), 8);
        let distinct: HashSet<_> = code.rows().iter().collect();
        assert_eq!(distinct.len(), 8);
        // windows of the cyclic stream 0010111
        let stream = [0, 0, 1, 0, 1, 1, 1];
        for i in 0..7 {
            let expect: Vec<bool> = (0..4).map(|j| stream[(i + j) % 7] == 1).collect();
            assert_eq!(code.row_bits(i), expect);
        }
        assert_eq!(strength_direct(&code, 3), 2);
    }

    #[test]
    fn code_of_cubic_width_3_is_full_space() {
        let code = WindowCode::build(&p("x^3+x+1"), 3, &Bits::impulse(3)).unwrap();
        let mut rows = code.rows().to_vec();
        rows.sort_unstable();
        assert_eq!(rows, (0..8).collect::<Vec<u64>>());
        assert_eq!(strength_direct(&code, 3), 3);
    }

    #[test]
    fn build_rejects() {
        assert!(matches!(
            WindowCode::build(&p("x^2+1"), 2, &Bits::impulse(2)),
            Err(Error::NotSquarefree { .. })
        ));
        assert!(matches!(
            WindowCode::build(&p("x^3+x+1"), 8, &Bits::impulse(3)),
            Err(Error::WindowLength { .. })
        ));
        assert!(matches!(
            WindowCode::build(&p("x^3+x+1"), 1, &Bits::impulse(3)),
            Err(Error::WindowLength { .. })
        ));
        assert_eq!(
            WindowCode::build(&p("x^3+x+1"), 4, &Bits::from_u64(0, 3)),
            Err(Error::ZeroSeed)
        );
        // x^3+1 = (x+1)(x^2+x+1): the all-ones seed is a fixed point
        assert!(matches!(
            WindowCode::build(&p("x^3+1"), 2, &Bits::from_u64(0b111, 3)),
            Err(Error::SeedNotMaximal { .. })
        ));
    }

    #[test]
    fn dual_of_cubic_width_4() {
        let d = strength_dual(&p("x^3+x+1"), 4).unwrap();
        assert_eq!((d.strength, d.min_weight), (2, 3));
        assert_eq!(d.cofactor, Poly::one());
        assert_eq!(d.witness, p("x^3+x+1"));
        assert_eq!(d.witness_columns, vec![1, 2, 4]);
    }

    #[test]
    fn dual_rejects() {
        assert!(strength_dual(&p("x^3+x+1"), 2).is_err());
        assert!(strength_dual(&p("x^2+1"), 4).is_err());
        assert!(matches!(
            strength_dual(&p("x^3+x+1"), 32),
            Err(Error::EnumerationBound { .. })
        ));
    }

    #[test]
    fn dual_of_width_m_is_trivial() {
        let f = p("x^3+x+1");
        let d = strength_dual(&f, 3).unwrap();
        assert_eq!((d.strength, d.min_weight), (3, 4));
        assert!(d.witness.is_zero());
        let code = WindowCode::build(&f, 3, &Bits::impulse(3)).unwrap();
        assert_eq!(strength_direct(&code, 4), 3);
    }

    #[test]
    fn dual_weight_two_when_period_is_short() {
        // period 5 < n = 7, so x^5 + 1 is in the dual
        let d = strength_dual(&p("x^4+x^3+x^2+x+1"), 7).unwrap();
        assert_eq!(d.min_weight, 2);
        assert_eq!(d.witness, p("x^5+1"));
        let code = WindowCode::build(&p("x^4+x^3+x^2+x+1"), 5, &Bits::impulse(4)).unwrap();
        assert_eq!(code.period(), 5);
    }

    #[test]
    fn direct_matches_bitwise_oracle() {
        for (f, n) in [("x^3+x+1", 5), ("x^4+x+1", 6), ("x^5+x^2+1", 7), ("x^4+x^3+x^2+x+1", 5)] {
            let f = p(f);
            let code = WindowCode::build(&f, n, &Bits::impulse(f.deg().unwrap())).unwrap();
            let rows: Vec<Vec<bool>> = (0..code.rows().len()).map(|i| code.row_bits(i)).collect();
            assert_eq!(strength_direct(&code, 5), oracle_strength(&rows, n, 5), "{f} n={n}");
        }
    }

    #[test]
    fn methods_agree_on_small_primitives() {
        for d in 2..=7usize {
            for low in 0u64..(1 << d) {
                let f = Poly::from_u64(low | 1 << d);
                if !f.constant_term() || !is_primitive(&f).unwrap() {
                    continue;
                }
                for n in d + 1..=(2 * d).min((1 << d) - 1) {
                    let dual = strength_dual(&f, n).unwrap();
                    assert!(dual.min_weight <= f.weight());
                    let code = WindowCode::build(&f, n, &Bits::impulse(d)).unwrap();
                    let direct = strength_direct(&code, dual.strength + 1);
                    assert_eq!(direct, dual.strength, "{f} n={n}");
                }
            }
        }
    }

    #[test]
    fn report_agreement_respects_cap() {
        let r = strength_report(&p("x^5+x^4+x^3+x^2+1"), 6, &Bits::impulse(5), Method::Both, 2).unwrap();
        assert_eq!(r.strength_dual, Some(4));
        assert_eq!(r.strength_direct, Some(2));
        assert!(r.agree());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["witness"], "x^5+x^4+x^3+x^2+1");
    }

    #[test]
    fn subsets_enumerate_binomially() {
        assert_eq!(column_subsets(5, 2).len(), 10);
        assert_eq!(column_subsets(6, 3).len(), 20);
        assert_eq!(column_subsets(4, 4), vec![vec![0, 1, 2, 3]]);
        assert_eq!(column_subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
