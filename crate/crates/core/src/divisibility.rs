//! Trinomial multiples of a polynomial, the exception table for
//! maximum-weight divisors of degree 3, 5 and 7, and the exhaustive sweep
//! showing that larger maximum-weight polynomials have no trinomial multiple
//! of degree at most `2m`.
//!
//! Trinomials are always canonical, `g = x^a + x^b + 1` with `0 < b < a`.
//! Since `f(0) = 1`, `x` never divides `f`, so any trinomial multiple
//! `x^c (x^a + x^b + 1)` already yields the canonical one.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::maxweight::MaxWeightPoly;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TrinomialHit {
    pub g: Poly,
    pub f: Poly,
    pub h: Poly,
}

impl TrinomialHit {
    /// Divides `g` by `f` and keeps the triple only if the division is exact
    /// and the product re-multiplies to `g`.
    pub fn verified(g: Poly, f: Poly) -> Result<Option<TrinomialHit>> {
        if g.weight() != 3 || !g.constant_term() {
            return Ok(None);
        }
        let (h, r) = g.div_rem(&f)?;
        if !r.is_zero() || f.mul(&h) != g {
            return Ok(None);
        }
        Ok(Some(TrinomialHit { g, f, h }))
    }

    /// `(a, b)` of `g = x^a + x^b + 1`.
    pub fn exponents(&self) -> (usize, usize) {
        let mut e = self.g.exponents().skip(1);
        let b = e.next().expect("trinomial");
        let a = e.next().expect("trinomial");
        (a, b)
    }

    pub fn reciprocal(&self) -> TrinomialHit {
        TrinomialHit {
            g: self.g.reciprocal().expect("nonzero"),
            f: self.f.reciprocal().expect("nonzero"),
            h: self.h.reciprocal().expect("nonzero"),
        }
    }

    /// `g = f`, so `h = 1`.
    pub fn is_trivial(&self) -> bool {
        self.h.is_one()
    }
}

/// Every canonical trinomial `x^a + x^b + 1` with `0 < b < a <= max_deg`
/// divisible by `f`, ordered by `(a, b)`.
///
/// Tabulates `r_k = x^k mod f` once and looks up, for each `a`, all earlier
/// `b` whose residue equals `r_a + 1`.
pub fn trinomial_multiples(f: &Poly, max_deg: usize) -> Result<Vec<TrinomialHit>> {
    let m = match f.deg() {
        Some(m) if m >= 1 => m,
        _ => {
            return Err(Error::DegreeTooSmall {
                op: "trinomial_multiples",
                min: 1,
                degree: f.degree(),
            })
        }
    };
    if !f.constant_term() {
        return Err(Error::ConstantTermZero { op: "trinomial_multiples" });
    }
    if max_deg < m {
        return Err(Error::InvalidArgument(format!(
            "max_deg {max_deg} is below deg f = {m}"
        )));
    }
    let one = Poly::one();
    let mut by_residue: HashMap<Poly, Vec<usize>> = HashMap::new();
    let mut residue = Poly::one();
    let mut hits = Vec::new();
    for a in 1..=max_deg {
        residue.mul_x_mod_assign(f);
        let target = residue.add(&one);
        if let Some(bs) = by_residue.get(&target) {
            for &b in bs {
                let g = Poly::from_exponents([a, b, 0]);
                let hit = TrinomialHit::verified(g, f.clone())?.expect("residue match implies divisibility");
                hits.push(hit);
            }
        }
        by_residue.entry(residue.clone()).or_default().push(a);
    }
    Ok(hits)
}

/// `(g, f, h)` rows of the published exception table.
pub const TABLE1_ROWS: [(&str, &str, &str); 7] = [
    ("x^5+x^4+1", "x^3+x+1", "x^2+x+1"),
    ("x^6+x^4+1", "x^3+x^2+1", "x^3+x^2+1"),
    ("x^9+x^7+1", "x^5+x^3+x^2+x+1", "x^4+x+1"),
    ("x^7+x^5+1", "x^5+x^4+x^3+x+1", "x^2+x+1"),
    ("x^8+x^5+1", "x^5+x^4+x^3+x^2+1", "x^3+x^2+1"),
    ("x^14+x^13+1", "x^7+x^6+x^5+x^4+x^3+x+1", "x^7+x^5+x^2+x+1"),
    ("x^13+x^10+1", "x^7+x^6+x^5+x^4+x^3+x^2+1", "x^6+x^5+x^3+x^2+1"),
];

/// Degrees covered by the exception table.
pub const TABLE1_DEGREES: [u32; 3] = [3, 5, 7];

fn sort_hits(hits: &mut [TrinomialHit]) {
    hits.sort_by_key(|hit| {
        let (a, b) = hit.exponents();
        (hit.f.degree(), hit.f.to_u64(), a, b)
    });
}

fn dedup_on_g_f(hits: Vec<TrinomialHit>) -> Vec<TrinomialHit> {
    let mut seen = BTreeSet::new();
    hits.into_iter()
        .filter(|hit| seen.insert((hit.g.to_string(), hit.f.to_string())))
        .collect()
}

/// Published rows together with their reciprocal images, deduplicated on
/// `(g, f)` and sorted by `(deg f, f, a, b)`.
pub fn table1_reference() -> Vec<TrinomialHit> {
    let mut rows = Vec::new();
    for (g, f, h) in TABLE1_ROWS {
        let hit = TrinomialHit {
            g: g.parse().expect("table literal"),
            f: f.parse().expect("table literal"),
            h: h.parse().expect("table literal"),
        };
        rows.push(hit.reciprocal());
        rows.push(hit);
    }
    let mut rows = dedup_on_g_f(rows);
    sort_hits(&mut rows);
    rows
}

/// Searches every `MW(m, l)` with `m` in {3, 5, 7} for trinomial multiples of
/// degree at most `2m`, returning the proper ones (`h != 1`) deduplicated on
/// `(g, f)` and sorted like [`table1_reference`].
///
/// For `m = 3` the divisor is itself a trinomial, which shows up as the
/// trivial hit `g = f`; those are dropped here and kept by
/// [`table1_sweep_all`].
pub fn verify_table1() -> Vec<TrinomialHit> {
    let mut hits: Vec<TrinomialHit> = table1_sweep_all()
        .into_iter()
        .filter(|hit| !hit.is_trivial())
        .collect();
    hits = dedup_on_g_f(hits);
    sort_hits(&mut hits);
    hits
}

/// All hits for `m` in {3, 5, 7}, trivial ones included.
pub fn table1_sweep_all() -> Vec<TrinomialHit> {
    TABLE1_DEGREES
        .iter()
        .flat_map(|&m| MaxWeightPoly::enumerate(m).expect("odd m >= 3"))
        .flat_map(|mw| {
            trinomial_multiples(&mw.expand(), 2 * mw.m() as usize).expect("valid divisor")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepHit {
    pub m: u32,
    pub l: u32,
    #[serde(flatten)]
    pub hit: TrinomialHit,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub m_min: u32,
    pub m_max: u32,
    pub pairs: Vec<(u32, u32)>,
    pub pairs_checked: usize,
    pub hits: Vec<SweepHit>,
    /// Wall-clock time; kept out of the serialized report so that output is
    /// reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn falsified(&self) -> bool {
        !self.hits.is_empty()
    }
}

/// Checks that no `MW(m, l)` with odd `m` in `m_min..=m_max` (and
/// `m_min > 7`) has a trinomial multiple of degree at most `2m`.
pub fn corollary1_sweep(m_min: u32, m_max: u32, jobs: usize) -> Result<SweepReport> {
    if m_min <= 7 {
        return Err(Error::InvalidArgument(format!(
            "m_min must exceed 7, got {m_min}"
        )));
    }
    sweep_with(m_min, m_max, jobs, |mw| mw.expand())
}

/// Sweep driver parameterized by the divisor built from each `(m, l)`;
/// lets tests swap in corrupted divisors.
pub fn sweep_with<F>(m_min: u32, m_max: u32, jobs: usize, divisor: F) -> Result<SweepReport>
where
    F: Fn(&MaxWeightPoly) -> Poly + Sync,
{
    if m_min > m_max {
        return Err(Error::InvalidArgument(format!(
            "m_min {m_min} exceeds m_max {m_max}"
        )));
    }
    let start = Instant::now();
    let first = if m_min % 2 == 0 { m_min + 1 } else { m_min };
    let pairs: Vec<MaxWeightPoly> = (first..=m_max)
        .step_by(2)
        .flat_map(|m| MaxWeightPoly::enumerate(m).expect("odd m >= 3"))
        .collect();

    let search = |mw: &MaxWeightPoly| -> Result<Vec<SweepHit>> {
        let hits = trinomial_multiples(&divisor(mw), 2 * mw.m() as usize)?;
        Ok(hits
            .into_iter()
            .map(|hit| SweepHit { m: mw.m(), l: mw.l(), hit })
            .collect())
    };
    let per_pair: Vec<Vec<SweepHit>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        pool.install(|| pairs.par_iter().map(search).collect::<Result<_>>())?
    } else {
        pairs.iter().map(search).collect::<Result<_>>()?
    };

    Ok(SweepReport {
        m_min,
        m_max,
        pairs: pairs.iter().map(|mw| (mw.m(), mw.l())).collect(),
        pairs_checked: pairs.len(),
        hits: per_pair.into_iter().flatten().collect(),
        elapsed: start.elapsed(),
    })
}
