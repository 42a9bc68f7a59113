//! Degree-7 signed permutation matrices packed into a single machine word.
//!
//! A [`SignedPerm`] with image map `perm` and sign vector `signs` stands for the
//! matrix `M` with `M[perm[i]][i] = (-1)^signs[i]` and zeros elsewhere, so
//! `M e_i = ±e_{perm[i]}`. Products are matrix products: `(a * b)` applies `b`
//! first.

mod code;

pub use code::{cyclic_code, Gf2Code, Gf2Vec};

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const DEGREE: usize = 7;

/// Order of the full signed permutation group `2^7 · 7!`, which is also the
/// size of the dense index space.
pub const AMBIENT_ORDER: usize = 128 * 5040;

/// A 7×7 integer matrix.
pub type Matrix7 = [[i32; DEGREE]; DEGREE];

const PERM_BITS: u32 = 21;
const PERM_MASK: u32 = (1 << PERM_BITS) - 1;

const FACTORIALS: [usize; 7] = [720, 120, 24, 6, 2, 1, 1];

/// One monomial ±1 matrix of degree 7.
///
/// Layout: bits `3i..3i+3` hold `perm[i]`, bit `21 + i` holds `signs[i]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm(u32);

impl SignedPerm {
    pub const IDENTITY: SignedPerm = SignedPerm(1 << 3 | 2 << 6 | 3 << 9 | 4 << 12 | 5 << 15 | 6 << 18);

    pub fn new(perm: [u8; 7], signs: Gf2Vec) -> Result<Self> {
        let mut seen = 0u8;
        for &p in &perm {
            if p > 6 || seen >> p & 1 == 1 {
                return Err(Error::InvalidPermutation(perm));
            }
            seen |= 1 << p;
        }
        Ok(Self::pack(&perm, signs))
    }

    /// Plain permutation matrix.
    pub fn from_perm(perm: [u8; 7]) -> Result<Self> {
        Self::new(perm, Gf2Vec::ZERO)
    }

    /// `p ↦ sgn(p)·p`: the permutation matrix, negated when `p` is odd. The
    /// result always has determinant +1.
    pub fn sign_twisted(perm: [u8; 7]) -> Result<Self> {
        let plain = Self::from_perm(perm)?;
        Ok(if plain.perm_parity_odd() { plain.negate() } else { plain })
    }

    pub fn diag(signs: Gf2Vec) -> Self {
        SignedPerm(Self::IDENTITY.0 | (signs.bits() as u32) << PERM_BITS)
    }

    pub fn neg_identity() -> Self {
        Self::diag(Gf2Vec::ALL_ONES)
    }

    fn pack(perm: &[u8; 7], signs: Gf2Vec) -> Self {
        let mut w = (signs.bits() as u32) << PERM_BITS;
        for (i, &p) in perm.iter().enumerate() {
            w |= (p as u32) << (3 * i);
        }
        SignedPerm(w)
    }

    /// The packed 28-bit word.
    pub fn raw(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn image(self, i: usize) -> usize {
        (self.0 >> (3 * i) & 7) as usize
    }

    #[inline]
    pub fn sign_bit(self, i: usize) -> bool {
        self.0 >> (PERM_BITS as usize + i) & 1 == 1
    }

    pub fn perm(self) -> [u8; 7] {
        std::array::from_fn(|i| self.image(i) as u8)
    }

    pub fn signs(self) -> Gf2Vec {
        Gf2Vec::new((self.0 >> PERM_BITS) as u8)
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    pub fn is_diagonal(self) -> bool {
        self.0 & PERM_MASK == Self::IDENTITY.0
    }

    /// Underlying permutation with all signs cleared.
    pub fn permutation_part(self) -> Self {
        SignedPerm(self.0 & PERM_MASK)
    }

    /// `-M`.
    pub fn negate(self) -> Self {
        SignedPerm(self.0 ^ (0x7f << PERM_BITS))
    }

    /// Matrix product `self · other`.
    #[inline]
    pub fn compose(self, other: Self) -> Self {
        let (a, b) = (self.0, other.0);
        let mut w = 0u32;
        for i in 0..7 {
            let pb = b >> (3 * i) & 7;
            let pa = a >> (3 * pb) & 7;
            let s = (b >> (PERM_BITS + i) ^ a >> (PERM_BITS + pb)) & 1;
            w |= pa << (3 * i) | s << (PERM_BITS + i);
        }
        SignedPerm(w)
    }

    #[inline]
    pub fn inverse(self) -> Self {
        let a = self.0;
        let mut w = 0u32;
        for i in 0..7 {
            let p = a >> (3 * i) & 7;
            let s = a >> (PERM_BITS + i) & 1;
            w |= i << (3 * p) | s << (PERM_BITS + p);
        }
        SignedPerm(w)
    }

    /// `h · self · h⁻¹`.
    #[inline]
    pub fn conjugate_by(self, h: Self) -> Self {
        h.compose(self).compose(h.inverse())
    }

    pub fn commutes_with(self, other: Self) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn pow(self, mut n: u64) -> Self {
        let mut base = self;
        let mut acc = Self::IDENTITY;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(base);
            }
            base = base.compose(base);
            n >>= 1;
        }
        acc
    }

    fn perm_parity_odd(self) -> bool {
        let mut visited = 0u8;
        let mut odd = false;
        for start in 0..7 {
            if visited >> start & 1 == 1 {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while visited >> i & 1 == 0 {
                visited |= 1 << i;
                i = self.image(i);
                len += 1;
            }
            if len % 2 == 0 {
                odd = !odd;
            }
        }
        odd
    }

    /// Sign of the underlying permutation.
    pub fn perm_sign(self) -> i32 {
        if self.perm_parity_odd() {
            -1
        } else {
            1
        }
    }

    pub fn det(self) -> i32 {
        let s = if self.signs().weight() % 2 == 1 { -1 } else { 1 };
        self.perm_sign() * s
    }

    pub fn trace(self) -> i32 {
        (0..7)
            .filter(|&i| self.image(i) == i)
            .map(|i| if self.sign_bit(i) { -1 } else { 1 })
            .sum()
    }

    /// Least `n ≥ 1` with `selfⁿ = id`, read off the signed cycle type: a cycle
    /// of length `l` whose sign product is −1 contributes order `2l`.
    pub fn order(self) -> u64 {
        let mut visited = 0u8;
        let mut order = 1u64;
        for start in 0..7 {
            if visited >> start & 1 == 1 {
                continue;
            }
            let mut len = 0u64;
            let mut neg = false;
            let mut i = start;
            while visited >> i & 1 == 0 {
                visited |= 1 << i;
                neg ^= self.sign_bit(i);
                i = self.image(i);
                len += 1;
            }
            let cycle_order = if neg { 2 * len } else { len };
            order = lcm(order, cycle_order);
        }
        order
    }

    #[allow(clippy::needless_range_loop)]
    pub fn to_matrix(self) -> Matrix7 {
        let mut m = [[0; 7]; 7];
        for i in 0..7 {
            let r = self.image(i);
            m[r][i] = if self.sign_bit(i) { -1 } else { 1 };
        }
        m
    }

    pub fn from_matrix(m: &Matrix7) -> Result<Self> {
        let mut perm = [0u8; 7];
        let mut signs = 0u8;
        for col in 0..7 {
            let mut found = None;
            for (row, r) in m.iter().enumerate() {
                match r[col] {
                    0 => {}
                    1 | -1 if found.is_none() => found = Some((row, r[col])),
                    _ => return Err(Error::NotMonomial),
                }
            }
            let (row, val) = found.ok_or(Error::NotMonomial)?;
            perm[col] = row as u8;
            if val == -1 {
                signs |= 1 << col;
            }
        }
        Self::new(perm, Gf2Vec::new(signs)).map_err(|_| Error::NotMonomial)
    }

    /// Bijection onto `0..AMBIENT_ORDER`: Lehmer rank of the permutation times
    /// 128 plus the sign bits.
    #[inline]
    pub fn dense_index(self) -> usize {
        let mut used = 0u32;
        let mut rank = 0usize;
        for (i, f) in FACTORIALS.iter().enumerate() {
            let p = self.image(i) as u32;
            let smaller_unused = p - (used & ((1 << p) - 1)).count_ones();
            rank += smaller_unused as usize * f;
            used |= 1 << p;
        }
        rank * 128 + (self.0 >> PERM_BITS) as usize
    }

    pub fn from_dense_index(index: usize) -> Self {
        assert!(index < AMBIENT_ORDER, "dense index out of range");
        let signs = Gf2Vec::new((index % 128) as u8);
        let mut rank = index / 128;
        let mut free: Vec<u8> = (0..7).collect();
        let mut perm = [0u8; 7];
        for (i, f) in FACTORIALS.iter().enumerate() {
            let k = rank / f;
            rank %= f;
            perm[i] = free.remove(k);
        }
        Self::pack(&perm, signs)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Default for SignedPerm {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Mul for SignedPerm {
    type Output = SignedPerm;
    fn mul(self, rhs: SignedPerm) -> SignedPerm {
        self.compose(rhs)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.perm();
        write!(
            f,
            "p=[{},{},{},{},{},{},{}];s={}",
            p[0],
            p[1],
            p[2],
            p[3],
            p[4],
            p[5],
            p[6],
            self.signs()
        )
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPerm {
    type Err = Error;

    /// Parses `p=[p0,...,p6];s=bbbbbbb`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "signed permutation",
            input: s.to_string(),
        };
        let (p, signs) = s.trim().split_once(";s=").ok_or_else(err)?;
        let p = p
            .strip_prefix("p=[")
            .and_then(|p| p.strip_suffix(']'))
            .ok_or_else(err)?;
        let images: Vec<u8> = p
            .split(',')
            .map(|x| x.trim().parse::<u8>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err())?;
        let perm: [u8; 7] = images.try_into().map_err(|_| err())?;
        let signs: Gf2Vec = signs.parse().map_err(|_| err())?;
        SignedPerm::new(perm, signs).map_err(|_| err())
    }
}

/// Seven lines of seven space-separated integers.
pub fn format_matrix(m: &Matrix7) -> String {
    let mut out = String::new();
    for row in m {
        let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the block written by [`format_matrix`].
pub fn parse_matrix(text: &str) -> Result<Matrix7> {
    let err = || Error::Parse {
        what: "7x7 matrix",
        input: text.to_string(),
    };
    let rows: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if rows.len() != 7 {
        return Err(err());
    }
    let mut m = [[0; 7]; 7];
    for (r, line) in rows.iter().enumerate() {
        let vals: Vec<i32> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err())?;
        if vals.len() != 7 {
            return Err(err());
        }
        m[r].copy_from_slice(&vals);
    }
    Ok(m)
}
