//! Dense bit-packed polynomials over GF(2).
//!
//! Bit `i` of the word array is the coefficient of `x^i`; word 0 holds the
//! constant term in its least significant bit. The word array never carries
//! trailing zero words, so structural equality and hashing agree with
//! polynomial equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = u64::BITS as usize;

/// Largest exponent accepted by the text parser.
pub const MAX_PARSE_EXPONENT: usize = 1 << 24;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    words: Vec<u64>,
    degree: isize,
}

/// 64x64 -> 128 bit carry-less product, returned as (low, high).
#[inline]
fn clmul64(a: u64, b: u64) -> (u64, u64) {
    let mut lo = 0u64;
    let mut hi = 0u64;
    let mut rest = b;
    while rest != 0 {
        let i = rest.trailing_zeros();
        lo ^= a << i;
        if i != 0 {
            hi ^= a >> (64 - i);
        }
        rest &= rest - 1;
    }
    (lo, hi)
}

/// `dst ^= src << shift`, growing `dst` as needed.
fn xor_shifted(dst: &mut Vec<u64>, src: &[u64], shift: usize) {
    if src.is_empty() {
        return;
    }
    let word_shift = shift / WORD_BITS;
    let bit_shift = shift % WORD_BITS;
    let needed = src.len() + word_shift + 1;
    if dst.len() < needed {
        dst.resize(needed, 0);
    }
    if bit_shift == 0 {
        for (i, &w) in src.iter().enumerate() {
            dst[i + word_shift] ^= w;
        }
    } else {
        for (i, &w) in src.iter().enumerate() {
            dst[i + word_shift] ^= w << bit_shift;
            dst[i + word_shift + 1] ^= w >> (WORD_BITS - bit_shift);
        }
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            words: Vec::new(),
            degree: -1,
        }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0u64; k / WORD_BITS + 1];
        words[k / WORD_BITS] = 1u64 << (k % WORD_BITS);
        Poly {
            words,
            degree: k as isize,
        }
    }

    /// Builds a polynomial from exponents; repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut words = Vec::new();
        for k in exps {
            let w = k / WORD_BITS;
            if words.len() <= w {
                words.resize(w + 1, 0);
            }
            words[w] ^= 1u64 << (k % WORD_BITS);
        }
        Self::from_words(words)
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = Poly { words, degree: -1 };
        p.normalize();
        p
    }

    /// Polynomial whose coefficient bits are the bits of `bits` (bit i = x^i).
    pub fn from_u64(bits: u64) -> Self {
        Self::from_words(vec![bits])
    }

    /// Coefficient bits packed into one word, or `None` if the degree is above 63.
    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
        self.degree = match self.words.last() {
            None => -1,
            Some(&top) => {
                ((self.words.len() - 1) * WORD_BITS + (WORD_BITS - 1 - top.leading_zeros() as usize))
                    as isize
            }
        };
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.degree
    }

    /// Degree as an unsigned value, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        (self.degree >= 0).then_some(self.degree as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.degree < 0
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD_BITS)
            .is_some_and(|w| (w >> (i % WORD_BITS)) & 1 == 1)
    }

    pub fn constant_term(&self) -> bool {
        self.coeff(0)
    }

    /// Copy with the coefficient of `x^i` flipped.
    pub fn flip(&self, i: usize) -> Self {
        let mut words = self.words.clone();
        let w = i / WORD_BITS;
        if words.len() <= w {
            words.resize(w + 1, 0);
        }
        words[w] ^= 1u64 << (i % WORD_BITS);
        Self::from_words(words)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents of the nonzero terms in ascending order.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + b)
            })
        })
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (d, s) in words.iter_mut().zip(&short.words) {
            *d ^= s;
        }
        Self::from_words(words)
    }

    /// Carry-less product.
    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u64; self.words.len() + other.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.words.iter().enumerate() {
                let (lo, hi) = clmul64(a, b);
                out[i + j] ^= lo;
                out[i + j + 1] ^= hi;
            }
        }
        Self::from_words(out)
    }

    pub fn square(&self) -> Poly {
        self.mul(self)
    }

    /// Multiplication by `x^k`.
    pub fn shl(&self, k: usize) -> Poly {
        let mut out = Vec::new();
        xor_shifted(&mut out, &self.words, k);
        Self::from_words(out)
    }

    /// Quotient and remainder with `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.deg().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        if rem.degree < dd as isize {
            return Ok((Poly::zero(), rem));
        }
        let mut quot = vec![0u64; (rem.degree as usize - dd) / WORD_BITS + 1];
        while rem.degree >= dd as isize {
            let shift = rem.degree as usize - dd;
            quot[shift / WORD_BITS] |= 1u64 << (shift % WORD_BITS);
            xor_shifted(&mut rem.words, &divisor.words, shift);
            rem.normalize();
        }
        Ok((Self::from_words(quot), rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        let dd = divisor.deg().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        while rem.degree >= dd as isize {
            let shift = rem.degree as usize - dd;
            xor_shifted(&mut rem.words, &divisor.words, shift);
            rem.normalize();
        }
        Ok(rem)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// `self * other mod modulus`.
    pub fn mulmod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        self.mul(other).rem(modulus)
    }

    /// In-place `r <- r * x mod f`, for `deg r < deg f`.
    pub(crate) fn mul_x_mod_assign(&mut self, f: &Poly) {
        let m = f.degree as usize;
        let mut carry = 0u64;
        for w in self.words.iter_mut() {
            let next = *w >> (WORD_BITS - 1);
            *w = (*w << 1) | carry;
            carry = next;
        }
        if carry != 0 {
            self.words.push(carry);
        }
        if self.coeff(m) {
            for (d, s) in self.words.iter_mut().zip(&f.words) {
                *d ^= s;
            }
        }
        self.normalize();
    }

    /// `x^e mod f` by square-and-multiply.
    pub fn powmod_x(e: u64, f: &Poly) -> Result<Poly> {
        if f.degree < 1 {
            return Err(Error::DegreeTooSmall {
                op: "powmod_x",
                min: 1,
                degree: f.degree,
            });
        }
        let mut acc = Poly::one();
        if e == 0 {
            return Ok(acc);
        }
        for bit in (0..(64 - e.leading_zeros())).rev() {
            acc = acc.square().rem(f)?;
            if (e >> bit) & 1 == 1 {
                acc.mul_x_mod_assign(f);
            }
        }
        Ok(acc)
    }

    /// `x^(2^k) mod f` by `k` repeated squarings.
    pub fn pow2k_x_mod(k: usize, f: &Poly) -> Result<Poly> {
        let mut acc = Poly::x().rem(f)?;
        for _ in 0..k {
            acc = acc.square().rem(f)?;
        }
        Ok(acc)
    }

    /// Coefficient reversal over positions `0..=deg`, i.e. `x^deg * f(1/x)`.
    pub fn reciprocal(&self) -> Result<Poly> {
        let d = self.deg().ok_or(Error::ZeroPolynomial { op: "reciprocal" })?;
        Ok(Poly::from_exponents(self.exponents().map(|k| d - k)))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        // only odd exponents survive, each dropping by one; an odd bit never
        // crosses a word boundary when shifted down
        let words = self
            .words
            .iter()
            .map(|w| (w & 0xAAAA_AAAA_AAAA_AAAA) >> 1)
            .collect();
        Self::from_words(words)
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial { op: "is_squarefree" });
        }
        Ok(self.gcd(&self.derivative())?.degree == 0)
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> bool {
        self.weight() % 2 == 1
    }

    /// Hexadecimal form, bit i of the number = coefficient of `x^i`.
    pub fn to_hex(&self) -> String {
        match self.words.split_last() {
            None => "0x0".to_string(),
            Some((top, rest)) => {
                let mut s = format!("0x{top:x}");
                for w in rest.iter().rev() {
                    s.push_str(&format!("{w:016x}"));
                }
                s
            }
        }
    }

    pub fn from_hex(s: &str) -> Result<Poly> {
        let body = s
            .strip_prefix("0x")
            .or_else(|| s.strip_prefix("0X"))
            .ok_or_else(|| Error::Parse {
                token: s.to_string(),
                offset: 0,
                reason: "hex literal must start with 0x",
            })?;
        if body.is_empty() {
            return Err(Error::Parse {
                token: s.to_string(),
                offset: 2,
                reason: "empty hex literal",
            });
        }
        if let Some(pos) = body.find(|c: char| !c.is_ascii_hexdigit()) {
            let c = body[pos..].chars().next().unwrap_or_default();
            return Err(Error::Parse {
                token: c.to_string(),
                offset: pos + 2,
                reason: "not a hex digit",
            });
        }
        let digits = body.as_bytes();
        let mut words = Vec::with_capacity(digits.len() / 16 + 1);
        let mut end = digits.len();
        while end > 0 {
            let start = end.saturating_sub(16);
            let chunk = std::str::from_utf8(&digits[start..end]).expect("ascii");
            words.push(u64::from_str_radix(chunk, 16).expect("validated hex digits"));
            end = start;
        }
        Ok(Poly::from_words(words))
    }

    /// Parses the `x^K+x+1` text form. Terms may come in any order and
    /// repeated terms cancel; whitespace around terms is ignored.
    pub fn parse_text(s: &str) -> Result<Poly> {
        if s.trim() == "0" {
            return Ok(Poly::zero());
        }
        let mut exps = Vec::new();
        let mut offset = 0;
        for raw in s.split('+') {
            let lead = raw.len() - raw.trim_start().len();
            let term = raw.trim();
            let at = offset + lead;
            offset += raw.len() + 1;
            let err = |reason| Error::Parse {
                token: term.to_string(),
                offset: at,
                reason,
            };
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let k = match term {
                "1" => 0,
                "x" => 1,
                _ => {
                    let digits = term.strip_prefix("x^").ok_or_else(|| err("expected 1, x or x^K"))?;
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(err("exponent must be a decimal integer"));
                    }
                    let k: usize = digits.parse().map_err(|_| err("exponent out of range"))?;
                    if k > MAX_PARSE_EXPONENT {
                        return Err(err("exponent out of range"));
                    }
                    k
                }
            };
            exps.push(k);
        }
        Ok(Poly::from_exponents(exps))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut exps: Vec<usize> = self.exponents().collect();
        exps.reverse();
        for (i, k) in exps.into_iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match k {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with("0x") || t.starts_with("0X") {
            Poly::from_hex(t)
        } else {
            Poly::parse_text(s)
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (d, s) in self.words.iter_mut().zip(&rhs.words) {
            *d ^= s;
        }
        self.normalize();
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
