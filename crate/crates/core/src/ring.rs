//! The ring `R2 = F2 + uF2 + vF2 + uvF2` with `u^2 = v^2 = 0`, `uv = vu`.
//!
//! An element `a + ub + vc + uvd` is a nibble whose bits, from most to least
//! significant, are `(d, c, b, a)`. That nibble is also its hexadecimal digit,
//! so `1 + u + v` is `0111`, i.e. `7`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BitVector, MAX_LEN};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct R2(u8);

const A: u8 = 1;
const B: u8 = 2;
const C: u8 = 4;
const D: u8 = 8;

const fn bit(x: u8, m: u8) -> u8 {
    (x & m != 0) as u8
}

/// Product from the expansion of `(a + ub + vc + uvd)(a' + ub' + vc' + uvd')`.
const fn mul_formula(x: u8, y: u8) -> u8 {
    let (xa, xb, xc, xd) = (bit(x, A), bit(x, B), bit(x, C), bit(x, D));
    let (ya, yb, yc, yd) = (bit(y, A), bit(y, B), bit(y, C), bit(y, D));
    let a = xa & ya;
    let b = (xa & yb) ^ (xb & ya);
    let c = (xa & yc) ^ (xc & ya);
    let d = (xa & yd) ^ (xb & yc) ^ (xc & yb) ^ (xd & ya);
    a | (b << 1) | (c << 2) | (d << 3)
}

const fn build_table() -> [[u8; 16]; 16] {
    let mut t = [[0u8; 16]; 16];
    let mut x = 0;
    while x < 16 {
        let mut y = 0;
        while y < 16 {
            t[x][y] = mul_formula(x as u8, y as u8);
            y += 1;
        }
        x += 1;
    }
    t
}

static MUL_TABLE: [[u8; 16]; 16] = build_table();

impl R2 {
    pub const ZERO: R2 = R2(0);
    pub const ONE: R2 = R2(A);
    pub const U: R2 = R2(B);
    pub const V: R2 = R2(C);
    pub const UV: R2 = R2(D);

    /// All 16 elements in nibble order.
    pub fn all() -> impl Iterator<Item = R2> {
        (0..16u8).map(R2)
    }

    pub fn from_parts(a: bool, b: bool, c: bool, d: bool) -> Self {
        R2(a as u8 | (b as u8) << 1 | (c as u8) << 2 | (d as u8) << 3)
    }

    /// From the `(d, c, b, a)` nibble; upper bits are ignored.
    pub const fn from_nibble(n: u8) -> Self {
        R2(n & 0xF)
    }

    pub const fn nibble(self) -> u8 {
        self.0
    }

    pub fn a(self) -> bool {
        self.0 & A != 0
    }
    pub fn b(self) -> bool {
        self.0 & B != 0
    }
    pub fn c(self) -> bool {
        self.0 & C != 0
    }
    pub fn d(self) -> bool {
        self.0 & D != 0
    }

    pub fn is_unit(self) -> bool {
        self.a()
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn from_hex(h: char) -> Result<Self> {
        hex_decode(h)
    }

    pub fn to_hex(self) -> char {
        hex_encode(self)
    }
}

impl Add for R2 {
    type Output = R2;
    #[inline]
    fn add(self, rhs: R2) -> R2 {
        R2(self.0 ^ rhs.0)
    }
}

impl AddAssign for R2 {
    #[inline]
    fn add_assign(&mut self, rhs: R2) {
        self.0 ^= rhs.0;
    }
}

impl Mul for R2 {
    type Output = R2;
    #[inline]
    fn mul(self, rhs: R2) -> R2 {
        mul(self, rhs)
    }
}

impl From<bool> for R2 {
    fn from(b: bool) -> Self {
        R2(b as u8)
    }
}

impl fmt::Debug for R2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R2({})", self.to_hex())
    }
}

impl fmt::Display for R2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("0");
        }
        let names = ["1", "u", "v", "uv"];
        let terms: Vec<&str> = (0..4)
            .filter(|i| self.0 >> i & 1 == 1)
            .map(|i| names[i])
            .collect();
        f.write_str(&terms.join("+"))
    }
}

#[inline]
pub fn mul(x: R2, y: R2) -> R2 {
    R2(MUL_TABLE[x.0 as usize][y.0 as usize])
}

pub fn hex_encode(x: R2) -> char {
    char::from_digit(x.0 as u32, 16)
        .unwrap()
        .to_ascii_uppercase()
}

pub fn hex_decode(h: char) -> Result<R2> {
    h.to_digit(16)
        .map(|d| R2(d as u8))
        .ok_or(Error::InvalidHex(h))
}

/// A vector over R2.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct R2Vector(pub Vec<R2>);

impl R2Vector {
    pub fn zeros(n: usize) -> Self {
        Self(vec![R2::ZERO; n])
    }

    /// Binary vector embedded in R2 (all `b, c, d` parts zero).
    pub fn embed(v: &BitVector) -> Self {
        Self((0..v.len()).map(|i| R2::from(v.get(i))).collect())
    }

    /// One hex digit per entry, entry 0 first.
    pub fn from_hex(s: &str) -> Result<Self> {
        s.trim().chars().map(hex_decode).collect::<Result<_>>().map(Self)
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|x| x.to_hex()).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, s: R2) -> Self {
        Self(self.0.iter().map(|&x| s * x).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(&x, &y)| x + y).collect(),
        ))
    }

    pub fn dot(&self, other: &Self) -> Result<R2> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(dot(&self.0, &other.0))
    }
}

#[inline]
pub(crate) fn dot(x: &[R2], y: &[R2]) -> R2 {
    x.iter().zip(y).fold(R2::ZERO, |acc, (&a, &b)| acc + a * b)
}

/// Gray map `a + ub + vc + uvd -> (d, b + d, c + d, a + b + c + d)`, four
/// `n`-coordinate blocks in that order.
///
/// This is the orthogonality-preserving map usually written
/// `(d, c + d, b + d, a + b + c + d)` with the roles of `u` and `v`
/// exchanged. Both lay out the same code up to a block swap, but the
/// published extension vectors only give the listed codes with this layout.
pub fn gray_map(x: &R2Vector) -> Result<BitVector> {
    let n = x.len();
    if 4 * n > MAX_LEN {
        return Err(Error::TooLong(4 * n));
    }
    let (mut a, mut b, mut c, mut d) = (0u128, 0u128, 0u128, 0u128);
    for (i, e) in x.0.iter().enumerate() {
        a |= (e.a() as u128) << i;
        b |= (e.b() as u128) << i;
        c |= (e.c() as u128) << i;
        d |= (e.d() as u128) << i;
    }
    let blocks = [d, b ^ d, c ^ d, a ^ b ^ c ^ d];
    let bits = blocks
        .iter()
        .enumerate()
        .fold(0u128, |acc, (j, &blk)| acc | (blk << (j * n)));
    BitVector::from_bits(bits, 4 * n)
}

/// Projection onto the `a` parts.
pub fn projection(x: &R2Vector) -> BitVector {
    let bits: Vec<bool> = x.0.iter().map(|e| e.a()).collect();
    BitVector::from_bools(&bits).expect("projection longer than 128")
}

/// Dense row-major matrix over R2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct R2Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<R2>,
}

impl R2Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            data: vec![R2::ZERO; nrows * ncols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, R2::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<R2Vector>) -> Result<Self> {
        let ncols = rows.first().map_or(0, R2Vector::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(Error::LengthMismatch {
                    left: ncols,
                    right: r.len(),
                });
            }
            data.extend(r.0);
        }
        Ok(Self { nrows, ncols, data })
    }

    /// One hex string per row.
    pub fn from_hex_rows(rows: &[&str]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| R2Vector::from_hex(r))
                .collect::<Result<_>>()?,
        )
    }

    /// Binary matrix embedded entry-wise.
    pub fn embed(m: &BinaryMatrix) -> Self {
        let mut out = Self::zeros(m.nrows(), m.ncols());
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                out.set(i, j, R2::from(m.get(i, j)));
            }
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> R2 {
        self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: R2) {
        self.data[i * self.ncols + j] = x;
    }

    pub fn row_slice(&self, i: usize) -> &[R2] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn row(&self, i: usize) -> R2Vector {
        R2Vector(self.row_slice(i).to_vec())
    }

    pub fn to_hex_rows(&self) -> Vec<String> {
        (0..self.nrows).map(|i| self.row(i).to_hex()).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols != other.nrows {
            return Err(Error::LengthMismatch {
                left: self.ncols,
                right: other.nrows,
            });
        }
        let mut out = Self::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for j in 0..other.ncols {
                let mut acc = R2::ZERO;
                for t in 0..self.ncols {
                    acc += self.get(i, t) * other.get(t, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// `K K^T`.
    pub fn gram(&self) -> Self {
        let mut out = Self::zeros(self.nrows, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.nrows {
                out.set(i, j, dot(self.row_slice(i), self.row_slice(j)));
            }
        }
        out
    }

    /// `[I_k | self]`.
    pub fn with_identity(&self) -> Self {
        let k = self.nrows;
        let mut out = Self::zeros(k, k + self.ncols);
        for i in 0..k {
            out.set(i, i, R2::ONE);
            for j in 0..self.ncols {
                out.set(i, k + j, self.get(i, j));
            }
        }
        out
    }

    /// Entry-wise projection to GF(2).
    pub fn projection(&self) -> BinaryMatrix {
        let rows: Vec<BitVector> = (0..self.nrows).map(|i| projection(&self.row(i))).collect();
        BinaryMatrix::from_rows(&rows).expect("rows have equal length")
    }
}

impl fmt::Debug for R2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "R2Matrix {}x{} [", self.nrows, self.ncols)?;
        for r in self.to_hex_rows() {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// True iff `K K^T = I` over R2, i.e. `[I | K]` generates a self-dual code.
pub fn is_self_dual_r2(k: &R2Matrix) -> bool {
    k.nrows() == k.ncols() && k.gram() == R2Matrix::identity(k.nrows())
}

/// Free code over R2 generated by `[I_k | K]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R2Code {
    redundancy: R2Matrix,
}

impl R2Code {
    pub fn new(redundancy: R2Matrix) -> Self {
        Self { redundancy }
    }

    pub fn redundancy(&self) -> &R2Matrix {
        &self.redundancy
    }

    pub fn generator(&self) -> R2Matrix {
        self.redundancy.with_identity()
    }

    pub fn k(&self) -> usize {
        self.redundancy.nrows()
    }

    pub fn n(&self) -> usize {
        self.redundancy.nrows() + self.redundancy.ncols()
    }

    pub fn is_self_dual(&self) -> bool {
        is_self_dual_r2(&self.redundancy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::inner_product;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent multiplication: expand as polynomials in u, v with
    /// monomials indexed by exponent bitmask (bit 0: u, bit 1: v); any
    /// monomial with a repeated variable vanishes.
    fn poly_mul(x: R2, y: R2) -> R2 {
        // nibble bit i <-> monomial: 0 -> 1, 1 -> u, 2 -> v, 3 -> uv
        let mono = [0b00u8, 0b01, 0b10, 0b11];
        let mut out = 0u8;
        for i in 0..4 {
            for j in 0..4 {
                if x.0 >> i & 1 == 1 && y.0 >> j & 1 == 1 && mono[i] & mono[j] == 0 {
                    let m = mono[i] | mono[j];
                    let idx = mono.iter().position(|&t| t == m).unwrap();
                    out ^= 1 << idx;
                }
            }
        }
        R2(out)
    }

    #[test]
    fn table_matches_polynomial_expansion() {
        for x in R2::all() {
            for y in R2::all() {
                assert_eq!(x * y, poly_mul(x, y), "{x:?} * {y:?}");
            }
        }
    }

    #[test]
    fn mul_examples() {
        assert_eq!(R2::U * R2::U, R2::ZERO);
        assert_eq!(R2::V * R2::V, R2::ZERO);
        assert_eq!(R2::U * R2::V, R2::UV);
        let one_u = R2::ONE + R2::U;
        assert_eq!(one_u * one_u, R2::ONE);
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for x in R2::all() {
            for y in R2::all() {
                assert_eq!(x * y, y * x);
                for z in R2::all() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn squares_and_units() {
        for x in R2::all() {
            assert_eq!(x * x, R2::from(x.a()));
        }
        let units: Vec<R2> = R2::all().filter(|x| x.is_unit()).collect();
        assert_eq!(units.len(), 8);
        for x in R2::all() {
            let has_inverse = R2::all().any(|y| x * y == R2::ONE);
            assert_eq!(has_inverse, x.is_unit());
        }
        assert!(units.iter().all(|&x| x * x == R2::ONE));
    }

    #[test]
    fn hex_codec() {
        assert_eq!(hex_decode('7').unwrap(), R2::ONE + R2::U + R2::V);
        assert_eq!(hex_decode('0').unwrap(), R2::ZERO);
        assert_eq!(hex_decode('9').unwrap(), R2::ONE + R2::UV);
        assert_eq!(hex_decode('c').unwrap(), hex_decode('C').unwrap());
        assert!(matches!(hex_decode('G'), Err(Error::InvalidHex('G'))));
        for x in R2::all() {
            assert_eq!(hex_decode(hex_encode(x)).unwrap(), x);
        }
    }

    #[test]
    fn gray_map_examples() {
        let g = |x: R2| gray_map(&R2Vector(vec![x])).unwrap().to_string();
        assert_eq!(g(R2::ONE), "0001");
        assert_eq!(g(R2::UV), "1111");
        assert_eq!(g(R2::ONE + R2::U + R2::V), "0111");
        assert_eq!(g(R2::U), "0101");
        assert_eq!(g(R2::V), "0011");
    }

    #[test]
    fn gray_map_is_additive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=16);
            let x = random_vec(&mut rng, n);
            let y = random_vec(&mut rng, n);
            let lhs = gray_map(&x.add(&y).unwrap()).unwrap();
            let rhs = gray_map(&x).unwrap().xor(&gray_map(&y).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> R2Vector {
        R2Vector((0..n).map(|_| R2::from_nibble(rng.gen())).collect())
    }

    #[test]
    fn gray_map_preserves_orthogonality() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 1000 {
            let n = rng.gen_range(1..=32);
            let x = random_vec(&mut rng, n);
            let mut y = random_vec(&mut rng, n);
            // Force <x, y> = 0 by adjusting one coordinate where x is a unit.
            let Some(p) = x.0.iter().position(|e| e.is_unit()) else {
                continue;
            };
            let r = x.dot(&y).unwrap();
            let inv = R2::all().find(|&t| t * x.0[p] == R2::ONE).unwrap();
            y.0[p] += inv * r;
            assert_eq!(x.dot(&y).unwrap(), R2::ZERO);
            let (gx, gy) = (gray_map(&x).unwrap(), gray_map(&y).unwrap());
            assert!(!inner_product(&gx, &gy).unwrap());
            checked += 1;
        }
    }

    #[test]
    fn projection_examples() {
        let w = R2Vector::from_hex("E2C8").unwrap();
        assert!(projection(&w.scale(R2::U)).is_zero());
        assert!(projection(&R2Vector::from_hex("9").unwrap()).get(0));
        let k1 = crate::tables::k1_full();
        assert_eq!(projection(&k1.row(0)), crate::tables::a1().row(0));
    }

    #[test]
    fn projection_is_ring_homomorphism() {
        for x in R2::all() {
            for y in R2::all() {
                assert_eq!((x * y).a(), x.a() & y.a());
                assert_eq!((x + y).a(), x.a() ^ y.a());
            }
        }
        assert!(!R2::from(false).a());
        assert!(R2::from(true).a());
    }

    #[test]
    fn self_dual_r2_examples() {
        assert!(is_self_dual_r2(&R2Matrix::identity(1)));
        let k1 = crate::tables::k1_full();
        assert!(is_self_dual_r2(&k1));
        let printed = crate::tables::k1_printed();
        assert!(!is_self_dual_r2(&printed));
        // The defect is confined to row and column 3.
        let gram = printed.gram();
        let ok = |i: usize, j: usize| gram.get(i, j) == if i == j { R2::ONE } else { R2::ZERO };
        for i in 0..8 {
            for j in 0..8 {
                if i != 3 && j != 3 {
                    assert!(ok(i, j), "{i} {j}");
                }
            }
        }
        assert!((0..8).any(|j| !ok(3, j)));
        for i in 0..8 {
            let mut bad = k1.clone();
            for j in 0..8 {
                bad.set(i, j, R2::ZERO);
            }
            assert!(!is_self_dual_r2(&bad));
        }
    }
}
