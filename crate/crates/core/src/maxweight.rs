//! Maximum-weight polynomials: degree `m` (odd), weight `m`, every
//! coefficient set except the interior term `x^l`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaxWeightPoly {
    m: u32,
    l: u32,
}

fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_degree(m: u32, l: u32) -> Result<()> {
    if m < 3 {
        return Err(Error::MaxWeightDomain { m, l, reason: "m must be at least 3" });
    }
    if m % 2 == 0 {
        return Err(Error::MaxWeightDomain { m, l, reason: "m must be odd" });
    }
    Ok(())
}

impl MaxWeightPoly {
    pub fn new(m: u32, l: u32) -> Result<Self> {
        check_degree(m, l)?;
        if l == 0 || l >= m {
            return Err(Error::MaxWeightDomain { m, l, reason: "l must satisfy 1 <= l <= m-1" });
        }
        Ok(MaxWeightPoly { m, l })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn expand(&self) -> Poly {
        let (m, l) = (self.m as usize, self.l as usize);
        Poly::from_exponents((0..=m).filter(|&k| k != l))
    }

    /// `(x+1) f(x) = x^(m+1) + x^(l+1) + x^l + 1`.
    pub fn times_x_plus_1(&self) -> Poly {
        let (m, l) = (self.m as usize, self.l as usize);
        Poly::from_exponents([m + 1, l + 1, l, 0])
    }

    pub fn reciprocal(&self) -> MaxWeightPoly {
        MaxWeightPoly { m: self.m, l: self.m - self.l }
    }

    /// When `d = gcd(m, l) > 1`, the factor `(x^d+1)/(x+1) = x^(d-1)+...+x+1`
    /// of the expansion; `None` when `m` and `l` are coprime.
    pub fn gcd_obstruction(&self) -> Option<Poly> {
        let d = gcd_u32(self.m, self.l) as usize;
        (d > 1).then(|| Poly::from_exponents(0..d))
    }

    /// All `MW(m, l)` for `l = 1..m-1` in increasing `l`.
    pub fn enumerate(m: u32) -> Result<Vec<MaxWeightPoly>> {
        check_degree(m, 0)?;
        Ok((1..m).map(|l| MaxWeightPoly { m, l }).collect())
    }

    /// Recognizes an expanded polynomial as a maximum-weight one.
    pub fn from_poly(p: &Poly) -> Option<MaxWeightPoly> {
        let m = p.deg()?;
        if m < 3 || m % 2 == 0 || p.weight() != m {
            return None;
        }
        let l = (1..m).find(|&k| !p.coeff(k))?;
        (p.constant_term()).then_some(MaxWeightPoly { m: m as u32, l: l as u32 })
    }
}

impl fmt::Display for MaxWeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mw:{},{}", self.m, self.l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn construct_examples() {
        assert_eq!(MaxWeightPoly::new(3, 2).unwrap().expand(), p("x^3+x+1"));
        assert_eq!(MaxWeightPoly::new(5, 4).unwrap().expand(), p("x^5+x^3+x^2+x+1"));
        assert_eq!(
            MaxWeightPoly::new(7, 2).unwrap().expand(),
            p("x^7+x^6+x^5+x^4+x^3+x+1")
        );
    }

    #[test]
    fn construct_rejects_bad_domain() {
        assert!(MaxWeightPoly::new(4, 1).is_err());
        assert!(MaxWeightPoly::new(1, 0).is_err());
        assert!(MaxWeightPoly::new(5, 0).is_err());
        assert!(MaxWeightPoly::new(5, 5).is_err());
        assert!(MaxWeightPoly::enumerate(6).is_err());
        assert!(MaxWeightPoly::enumerate(1).is_err());
    }

    #[test]
    fn times_x_plus_1_examples() {
        let mw = |m, l| MaxWeightPoly::new(m, l).unwrap();
        assert_eq!(mw(3, 2).times_x_plus_1(), p("x^4+x^3+x^2+1"));
        assert_eq!(mw(5, 4).times_x_plus_1(), p("x^6+x^5+x^4+1"));
        assert_eq!(mw(7, 1).times_x_plus_1(), p("x^8+x^2+x+1"));
    }

    #[test]
    fn reciprocal_examples() {
        let mw = |m, l| MaxWeightPoly::new(m, l).unwrap();
        assert_eq!(mw(3, 2).reciprocal(), mw(3, 1));
        assert_eq!(mw(7, 2).reciprocal(), mw(7, 5));
        assert_eq!(mw(9, 4).reciprocal().reciprocal(), mw(9, 4));
    }

    #[test]
    fn gcd_obstruction_examples() {
        let mw = |m, l| MaxWeightPoly::new(m, l).unwrap();
        let w = mw(9, 3).gcd_obstruction().unwrap();
        assert_eq!(w, p("x^2+x+1"));
        assert!(mw(9, 3).expand().rem(&w).unwrap().is_zero());
        assert_eq!(mw(5, 4).gcd_obstruction(), None);
        let w = mw(15, 5).gcd_obstruction().unwrap();
        assert_eq!(w, p("x^4+x^3+x^2+x+1"));
        assert!(mw(15, 5).expand().rem(&w).unwrap().is_zero());
    }

    #[test]
    fn enumerate_examples() {
        let e3 = MaxWeightPoly::enumerate(3).unwrap();
        assert_eq!(e3, vec![MaxWeightPoly::new(3, 1).unwrap(), MaxWeightPoly::new(3, 2).unwrap()]);
        assert_eq!(MaxWeightPoly::enumerate(5).unwrap().len(), 4);
        let e7 = MaxWeightPoly::enumerate(7).unwrap();
        assert_eq!(e7.len(), 6);
        assert!(e7.contains(&MaxWeightPoly::new(7, 2).unwrap()));
        assert!(e7.contains(&MaxWeightPoly::new(7, 1).unwrap()));
    }

    #[test]
    fn exhaustive_identities_up_to_25() {
        let x1 = p("x+1");
        for m in (3..=25).step_by(2) {
            for f in MaxWeightPoly::enumerate(m).unwrap() {
                let e = f.expand();
                assert_eq!(e.degree(), m as isize);
                assert_eq!(e.weight(), m as usize);
                assert!(!e.coeff(f.l() as usize));
                assert_eq!(x1.mul(&e), f.times_x_plus_1(), "{f}");
                assert_eq!(e.reciprocal().unwrap(), f.reciprocal().expand(), "{f}");
                assert_eq!(MaxWeightPoly::from_poly(&e), Some(f));
                if let Some(w) = f.gcd_obstruction() {
                    assert!(e.rem(&w).unwrap().is_zero(), "{f}");
                }
            }
        }
    }
}
