//! Shift-register sequences and the three-term identity satisfied by
//! sequences whose characteristic polynomial is a primitive maximum-weight
//! polynomial.

use rand::Rng;

use crate::classify::is_primitive;
use crate::error::{Error, Result};
use crate::maxweight::MaxWeightPoly;
use crate::poly::Poly;

/// Word-packed bit vector, bit `i` in word `i / 64`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn with_capacity(len: usize) -> Self {
        Bits {
            words: Vec::with_capacity(len.div_ceil(64)),
            len: 0,
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut out = Bits::with_capacity(bits.len());
        for &b in bits {
            out.push(b);
        }
        out
    }

    /// Low `len` bits of `value`, bit `i` first.
    pub fn from_u64(value: u64, len: usize) -> Self {
        Bits::from_bools(&(0..len).map(|i| i < 64 && (value >> i) & 1 == 1).collect::<Vec<_>>())
    }

    /// Single one in the last of `len` positions.
    pub fn impulse(len: usize) -> Self {
        let mut out = Bits::with_capacity(len);
        for i in 0..len {
            out.push(i + 1 == len);
        }
        out
    }

    pub fn random_nonzero<R: Rng>(len: usize, rng: &mut R) -> Self {
        assert!(len > 0);
        loop {
            let bits: Vec<bool> = (0..len).map(|_| rng.gen()).collect();
            if bits.iter().any(|&b| b) {
                return Bits::from_bools(&bits);
            }
        }
    }

    pub fn push(&mut self, bit: bool) {
        if self.len % 64 == 0 {
            self.words.push(0);
        }
        if bit {
            self.words[self.len / 64] |= 1 << (self.len % 64);
        }
        self.len += 1;
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        self.iter().collect()
    }

    /// `0`/`1` characters in index order.
    pub fn to_text(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Hex number whose bit `i` is element `i`.
    pub fn to_hex(&self) -> String {
        Poly::from_words(self.words.clone()).to_hex()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfsrSequence {
    characteristic: Poly,
    seed: Bits,
    stream: Bits,
}

impl LfsrSequence {
    /// Runs `a_(n+m) = sum_(i<m) c_i a_(n+i)` from the seed until `len`
    /// bits exist, where `f = x^m + sum c_i x^i`.
    pub fn generate(f: &Poly, seed: &Bits, len: usize) -> Result<Self> {
        let m = match f.deg() {
            Some(m) if m >= 1 => m,
            _ => {
                return Err(Error::DegreeTooSmall {
                    op: "lfsr generate",
                    min: 1,
                    degree: f.degree(),
                })
            }
        };
        if seed.len() != m {
            return Err(Error::SeedLength { expected: m, got: seed.len() });
        }
        if len < m {
            return Err(Error::LengthTooShort { len, m });
        }
        let taps: Vec<usize> = f.exponents().filter(|&i| i < m).collect();
        let mut stream = seed.clone();
        for n in 0..len - m {
            let next = taps.iter().fold(false, |acc, &i| acc ^ stream.get(n + i));
            stream.push(next);
        }
        Ok(LfsrSequence {
            characteristic: f.clone(),
            seed: seed.clone(),
            stream,
        })
    }

    pub fn characteristic(&self) -> &Poly {
        &self.characteristic
    }

    pub fn seed(&self) -> &Bits {
        &self.seed
    }

    pub fn stream(&self) -> &Bits {
        &self.stream
    }

    pub fn len(&self) -> usize {
        self.stream.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stream.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.stream.get(i)
    }

    /// Least `p >= 1` such that the generated stream satisfies
    /// `a_(i+p) = a_i` wherever both are present, or `None` if no shift
    /// below `len - m` works.
    pub fn observed_period(&self) -> Option<usize> {
        let m = self.seed.len();
        let n = self.stream.len();
        // shifting the m-bit state is enough: the recurrence determines the rest
        (1..=n.saturating_sub(m)).find(|&p| (0..m).all(|i| self.stream.get(i) == self.stream.get(i + p)))
    }
}

/// Checks `a_(n+lhs) = XOR_j a_(n+rhs_j)` for every `n` in `ns`.
pub fn linear_identity_holds(
    seq: &LfsrSequence,
    lhs: usize,
    rhs: &[isize],
    ns: std::ops::RangeInclusive<usize>,
) -> bool {
    ns.into_iter().all(|n| {
        let right = rhs.iter().fold(false, |acc, &off| {
            let idx = n as isize + off;
            assert!(idx >= 0, "identity offset {off} reaches below index 0 at n={n}");
            acc ^ seq.bit(idx as usize)
        });
        seq.bit(n + lhs) == right
    })
}

/// Right-hand offsets `(-1, l-1, l)` of `a_(n+m) = a_(n-1) + a_(n-1+l) + a_(n+l)`.
pub fn prop2_offsets(p: &MaxWeightPoly) -> [isize; 3] {
    let l = p.l() as isize;
    [-1, l - 1, l]
}

/// Generates the sequence of a primitive `MW(m, l)` up to index
/// `horizon + m` and checks the three-term identity for `n = 1..=horizon`.
pub fn prop2_check(p: &MaxWeightPoly, seed: &Bits, horizon: usize) -> Result<bool> {
    prop2_check_with(p, seed, horizon, &prop2_offsets(p))
}

/// [`prop2_check`] with caller-chosen right-hand offsets.
pub fn prop2_check_with(
    p: &MaxWeightPoly,
    seed: &Bits,
    horizon: usize,
    rhs: &[isize],
) -> Result<bool> {
    let f = p.expand();
    let m = p.m() as usize;
    if horizon < m + 2 {
        return Err(Error::InvalidArgument(format!(
            "horizon {horizon} must be at least m + 2 = {}",
            m + 2
        )));
    }
    if seed.is_zero() {
        return Err(Error::ZeroSeed);
    }
    if !is_primitive(&f)? {
        return Err(Error::NotPrimitive { poly: f.to_string() });
    }
    let seq = LfsrSequence::generate(&f, seed, horizon + m + 1)?;
    let holds = linear_identity_holds(&seq, m, rhs, 1..=horizon);
    if m <= 20 && rhs.iter().any(|&o| o < 0) {
        log_identity_at_zero(p, seed, rhs);
    }
    Ok(holds)
}

// n = 0 needs a_(-1); on a periodic stream that is a_(period-1)
fn log_identity_at_zero(p: &MaxWeightPoly, seed: &Bits, rhs: &[isize]) {
    let m = p.m() as usize;
    let period = (1usize << m) - 1;
    let Ok(seq) = LfsrSequence::generate(&p.expand(), seed, period + m + 1) else {
        return;
    };
    let right = rhs.iter().fold(false, |acc, &off| {
        let idx = (off + period as isize) as usize % period;
        acc ^ seq.bit(idx)
    });
    log::debug!(
        "{p}: identity at n=0 (a_-1 read as a_{}) {}",
        period - 1,
        if seq.bit(m) == right { "holds" } else { "fails" }
    );
}
