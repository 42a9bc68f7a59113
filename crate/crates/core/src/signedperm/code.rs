//! Length-7 binary vectors and linear codes over GF(2).

use std::fmt;
use std::ops::{BitAnd, BitXor};
use std::str::FromStr;

use crate::error::{Error, Result};

const MASK: u8 = 0x7f;

/// A vector in GF(2)^7. Bit `i` is coordinate `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2Vec(u8);

impl Gf2Vec {
    pub const ZERO: Gf2Vec = Gf2Vec(0);
    pub const ALL_ONES: Gf2Vec = Gf2Vec(MASK);

    pub const fn new(bits: u8) -> Self {
        Gf2Vec(bits & MASK)
    }

    pub const fn unit(i: usize) -> Self {
        Gf2Vec(1 << i)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn bit(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Inner product over GF(2).
    pub fn dot(self, other: Gf2Vec) -> bool {
        (self.0 & other.0).count_ones() & 1 == 1
    }

    /// Cyclic shift moving coordinate `i` to `i + 1 mod 7`.
    pub fn shift(self) -> Self {
        Gf2Vec(((self.0 << 1) | (self.0 >> 6)) & MASK)
    }

    /// Moves coordinate `i` to `perm[i]`.
    pub fn permute(self, perm: &[u8; 7]) -> Self {
        let mut out = 0u8;
        for (i, &p) in perm.iter().enumerate() {
            out |= (self.0 >> i & 1) << p;
        }
        Gf2Vec(out)
    }

    /// Index of the highest set bit. Must not be called on zero.
    fn pivot(self) -> usize {
        7 - self.0.leading_zeros() as usize
    }

    pub fn all() -> impl Iterator<Item = Gf2Vec> {
        (0..=MASK).map(Gf2Vec)
    }
}

impl BitXor for Gf2Vec {
    type Output = Gf2Vec;
    fn bitxor(self, rhs: Gf2Vec) -> Gf2Vec {
        Gf2Vec(self.0 ^ rhs.0)
    }
}

impl BitAnd for Gf2Vec {
    type Output = Gf2Vec;
    fn bitand(self, rhs: Gf2Vec) -> Gf2Vec {
        Gf2Vec(self.0 & rhs.0)
    }
}

impl fmt::Display for Gf2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..7 {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vec({self})")
    }
}

impl FromStr for Gf2Vec {
    type Err = Error;

    /// Parses seven `0`/`1` characters, coordinate 0 first.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "GF(2) vector",
            input: s.to_string(),
        };
        if s.len() != 7 {
            return Err(err());
        }
        let mut bits = 0u8;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(err()),
            }
        }
        Ok(Gf2Vec(bits))
    }
}

/// A linear binary code of length 7.
///
/// The basis is kept in reduced echelon form, so two codes are equal iff their
/// bases are equal. The full codeword set is cached as a 128-bit membership mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Code {
    basis: Vec<Gf2Vec>,
    words: u128,
}

impl Gf2Code {
    pub fn zero() -> Self {
        Gf2Code {
            basis: Vec::new(),
            words: 1,
        }
    }

    /// The smallest code containing every vector in `vectors`.
    pub fn span<I: IntoIterator<Item = Gf2Vec>>(vectors: I) -> Self {
        let mut basis: Vec<Gf2Vec> = Vec::new();
        for v in vectors {
            let mut v = v;
            for b in &basis {
                if v.bit(b.pivot()) {
                    v = v ^ *b;
                }
            }
            if v.is_zero() {
                continue;
            }
            let pivot = v.pivot();
            for b in basis.iter_mut() {
                if b.bit(pivot) {
                    *b = *b ^ v;
                }
            }
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
        let mut words = 0u128;
        for mask in 0..(1u32 << basis.len()) {
            let w = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .fold(Gf2Vec::ZERO, |acc, (_, b)| acc ^ *b);
            words |= 1u128 << w.0;
        }
        Gf2Code { basis, words }
    }

    /// All vectors of even weight: the dimension-6 code.
    pub fn even_weight() -> Self {
        Gf2Code::span((0..6).map(|i| Gf2Vec::unit(i) ^ Gf2Vec::unit(i + 1)))
    }

    pub fn basis(&self) -> &[Gf2Vec] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Number of codewords, `2^dimension`.
    pub fn order(&self) -> usize {
        1 << self.basis.len()
    }

    pub fn contains(&self, v: Gf2Vec) -> bool {
        self.words >> v.0 & 1 == 1
    }

    /// All codewords in increasing bit order.
    pub fn enumerate(&self) -> Vec<Gf2Vec> {
        Gf2Vec::all().filter(|v| self.contains(*v)).collect()
    }

    pub fn is_subcode_of(&self, other: &Gf2Code) -> bool {
        self.words & !other.words == 0
    }

    pub fn is_shift_invariant(&self) -> bool {
        self.basis.iter().all(|b| self.contains(b.shift()))
    }

    pub fn is_invariant_under(&self, perm: &[u8; 7]) -> bool {
        self.basis.iter().all(|b| self.contains(b.permute(perm)))
    }

    /// The dual code `{y : y·a = 0 for all a}`.
    pub fn annihilator(&self) -> Gf2Code {
        Gf2Code::span(Gf2Vec::all().filter(|y| self.basis.iter().all(|b| !y.dot(*b))))
    }

    /// Weight distribution indexed by weight 0..=7.
    pub fn weight_distribution(&self) -> [usize; 8] {
        let mut dist = [0; 8];
        for w in self.enumerate() {
            dist[w.weight() as usize] += 1;
        }
        dist
    }
}

impl fmt::Debug for Gf2Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Gf2Code")
            .field("dimension", &self.dimension())
            .field("basis", &self.basis)
            .finish()
    }
}

/// The smallest code containing all seven cyclic shifts of `generator`.
pub fn cyclic_code(generator: Gf2Vec) -> Gf2Code {
    Gf2Code::span(std::iter::successors(Some(generator), |v| Some(v.shift())).take(7))
}
