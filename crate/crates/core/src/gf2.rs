//! Bit-packed linear algebra over GF(2).
//!
//! Vectors hold at most [`MAX_LEN`] coordinates in a single `u128`; coordinate
//! `i` is bit `i`. The text form writes coordinate 0 first.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Hard limit on code length.
pub const MAX_LEN: usize = 128;

#[inline]
fn mask(len: usize) -> u128 {
    if len == 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    bits: u128,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::TooLong(len));
        }
        Ok(Self { bits: 0, len })
    }

    /// Builds a vector from packed bits; bits at or above `len` are dropped.
    pub fn from_bits(bits: u128, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::TooLong(len));
        }
        Ok(Self {
            bits: bits & mask(len),
            len,
        })
    }

    pub fn from_bools(bits: &[bool]) -> Result<Self> {
        let mut v = Self::zeros(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        Ok(v)
    }

    pub fn ones(len: usize) -> Result<Self> {
        Self::from_bits(u128::MAX, len)
    }

    #[inline]
    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "coordinate {i} out of range for length {}", self.len);
        (self.bits >> i) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "coordinate {i} out of range for length {}", self.len);
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        check_len(self.len, other.len)?;
        Ok(Self {
            bits: self.bits ^ other.bits,
            len: self.len,
        })
    }

    /// Concatenation, `self` occupying the low coordinates.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let len = self.len + other.len;
        if len > MAX_LEN {
            return Err(Error::TooLong(len));
        }
        Ok(Self {
            bits: self.bits | (other.bits << self.len),
            len,
        })
    }

    pub fn inner_product(&self, other: &Self) -> Result<bool> {
        inner_product(self, other)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl std::str::FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = Self::zeros(s.len())?;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        Ok(v)
    }
}

fn check_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LengthMismatch { left, right });
    }
    Ok(())
}

/// Standard inner product `sum x_i y_i mod 2`.
pub fn inner_product(x: &BitVector, y: &BitVector) -> Result<bool> {
    check_len(x.len, y.len)?;
    Ok((x.bits & y.bits).count_ones() & 1 == 1)
}

/// Dense matrix over GF(2) with rows packed into `u128`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: Vec<u128>,
    ncols: usize,
}

/// Result of [`BinaryMatrix::standard_form`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    /// The matrix `[I_k | A]`.
    pub matrix: BinaryMatrix,
    /// `permutation[j]` is the input column now found at position `j`.
    pub permutation: Vec<usize>,
}

impl StandardForm {
    /// The redundancy block `A` of `[I_k | A]`.
    pub fn redundancy(&self) -> BinaryMatrix {
        let k = self.matrix.nrows();
        self.matrix.columns(k..self.matrix.ncols())
    }

    pub fn is_identity_permutation(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| i == p)
    }
}

impl BinaryMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Result<Self> {
        if ncols > MAX_LEN {
            return Err(Error::TooLong(ncols));
        }
        Ok(Self {
            rows: vec![0; nrows],
            ncols,
        })
    }

    pub fn identity(k: usize) -> Result<Self> {
        let mut m = Self::zeros(k, k)?;
        for i in 0..k {
            m.rows[i] = 1 << i;
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[BitVector]) -> Result<Self> {
        let ncols = rows.first().map_or(0, BitVector::len);
        for r in rows {
            check_len(ncols, r.len())?;
        }
        Ok(Self {
            rows: rows.iter().map(BitVector::bits).collect(),
            ncols,
        })
    }

    /// Rows given as packed words; bits at or above `ncols` are dropped.
    pub fn from_packed(rows: Vec<u128>, ncols: usize) -> Result<Self> {
        if ncols > MAX_LEN {
            return Err(Error::TooLong(ncols));
        }
        let m = mask(ncols);
        Ok(Self {
            rows: rows.into_iter().map(|r| r & m).collect(),
            ncols,
        })
    }

    /// Parses rows of `0`/`1` characters; entries may be separated by spaces.
    pub fn from_rows_str(rows: &[&str]) -> Result<Self> {
        let vs = rows
            .iter()
            .map(|r| r.replace(' ', "").parse::<BitVector>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&vs)
    }

    /// Parses the matrix text format: one row per line, `0`/`1` characters,
    /// `#` comment lines and blank lines ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut ncols = None;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let v: BitVector = line.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: idx + 1, msg },
                other => other,
            })?;
            match ncols {
                None => ncols = Some(v.len()),
                Some(n) if n != v.len() => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("row has {} entries, expected {n}", v.len()),
                    })
                }
                _ => {}
            }
            rows.push(v);
        }
        Self::from_rows(&rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.nrows() * (self.ncols + 1));
        for i in 0..self.nrows() {
            out.push_str(&self.row(i).to_string());
            out.push('\n');
        }
        out
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn packed_rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> BitVector {
        BitVector {
            bits: self.rows[i],
            len: self.ncols,
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = BitVector> + '_ {
        (0..self.nrows()).map(|i| self.row(i))
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(j < self.ncols);
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(j < self.ncols);
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<()> {
        check_len(self.ncols, row.len())?;
        self.rows.push(row.bits());
        Ok(())
    }

    /// Returns a copy without the listed rows.
    pub fn without_rows(&self, drop: &[usize]) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .enumerate()
                .filter(|(i, _)| !drop.contains(i))
                .map(|(_, &r)| r)
                .collect(),
            ncols: self.ncols,
        }
    }

    pub fn select_rows(&self, keep: &[usize]) -> Self {
        Self {
            rows: keep.iter().map(|&i| self.rows[i]).collect(),
            ncols: self.ncols,
        }
    }

    /// Column range as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Self {
        let width = range.end - range.start;
        Self {
            rows: self
                .rows
                .iter()
                .map(|&r| (r >> range.start) & mask(width))
                .collect(),
            ncols: width,
        }
    }

    /// Upper-left `k x k` block.
    pub fn leading_minor(&self, k: usize) -> Self {
        let mut m = self.columns(0..k);
        m.rows.truncate(k);
        m
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        check_len(self.nrows(), other.nrows())?;
        let ncols = self.ncols + other.ncols;
        if ncols > MAX_LEN {
            return Err(Error::TooLong(ncols));
        }
        Ok(Self {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(&a, &b)| a | (b << self.ncols))
                .collect(),
            ncols,
        })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self {
            rows: vec![0; self.ncols],
            ncols: self.nrows(),
        };
        for (i, &r) in self.rows.iter().enumerate() {
            for j in 0..self.ncols {
                if (r >> j) & 1 == 1 {
                    t.rows[j] |= 1 << i;
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_len(self.ncols, other.nrows())?;
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut acc = 0u128;
                let mut bits = r;
                while bits != 0 {
                    let j = bits.trailing_zeros() as usize;
                    acc ^= other.rows[j];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        Ok(Self {
            rows,
            ncols: other.ncols,
        })
    }

    /// True iff every pair of rows (including a row with itself) is orthogonal.
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &a)| {
            self.rows[i..]
                .iter()
                .all(|&b| (a & b).count_ones() & 1 == 0)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Applies a column permutation: column `j` of the result is column
    /// `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        check_len(self.ncols, perm.len())?;
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                perm.iter()
                    .enumerate()
                    .fold(0u128, |acc, (j, &src)| acc | (((r >> src) & 1) << j))
            })
            .collect();
        Ok(Self {
            rows,
            ncols: self.ncols,
        })
    }

    pub fn rank(&self) -> usize {
        let mut basis = reduce_rows(self.rows.clone());
        basis.retain(|&r| r != 0);
        basis.len()
    }

    /// Gaussian elimination to `[I_k | A]`.
    ///
    /// Pivots are taken row by row; when the current diagonal column has no
    /// 1 in the remaining rows, the leftmost column that does is swapped in.
    /// Fails when the rows are dependent.
    pub fn standard_form(&self) -> Result<StandardForm> {
        let k = self.nrows();
        let n = self.ncols;
        let mut rows = self.rows.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for r in 0..k {
            let region = rows[r..].iter().fold(0u128, |acc, &x| acc | x);
            let avail = region & !mask(r);
            if avail == 0 {
                return Err(Error::RankDeficient {
                    rank: r,
                    expected: k,
                });
            }
            let c = avail.trailing_zeros() as usize;
            if c != r {
                for row in rows.iter_mut() {
                    let bit_c = (*row >> c) & 1;
                    let bit_r = (*row >> r) & 1;
                    if bit_c != bit_r {
                        *row ^= (1 << c) | (1 << r);
                    }
                }
                perm.swap(r, c);
            }
            let p = (r..k).find(|&i| (rows[i] >> r) & 1 == 1).unwrap();
            rows.swap(r, p);
            let pivot = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && (*row >> r) & 1 == 1 {
                    *row ^= pivot;
                }
            }
        }
        Ok(StandardForm {
            matrix: Self { rows, ncols: n },
            permutation: perm,
        })
    }

    /// GF(2) determinant of a square matrix (true = invertible).
    pub fn is_invertible(&self) -> Result<bool> {
        if self.nrows() != self.ncols {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols,
            });
        }
        Ok(self.rank() == self.ncols)
    }
}

/// Reduced row echelon form of the given rows (zero rows kept at the end).
pub(crate) fn reduce_rows(mut rows: Vec<u128>) -> Vec<u128> {
    let mut r = 0;
    let len = rows.len();
    for col in 0..MAX_LEN {
        if r == len {
            break;
        }
        let Some(p) = (r..len).find(|&i| (rows[i] >> col) & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && (*row >> col) & 1 == 1 {
                *row ^= pivot;
            }
        }
        r += 1;
    }
    rows
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.nrows(), self.ncols)?;
        for r in self.rows() {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A binary linear code given by a generator matrix with independent rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    generator: BinaryMatrix,
}

impl BinaryCode {
    /// Wraps a generator matrix, rejecting dependent rows.
    pub fn new(generator: BinaryMatrix) -> Result<Self> {
        let rank = generator.rank();
        if rank != generator.nrows() {
            return Err(Error::RankDeficient {
                rank,
                expected: generator.nrows(),
            });
        }
        Ok(Self { generator })
    }

    /// Code spanned by the rows of `m`, reduced to a basis.
    pub fn span(m: &BinaryMatrix) -> Self {
        let mut rows = reduce_rows(m.rows.clone());
        rows.retain(|&r| r != 0);
        Self {
            generator: BinaryMatrix {
                rows,
                ncols: m.ncols,
            },
        }
    }

    pub fn generator(&self) -> &BinaryMatrix {
        &self.generator
    }

    pub fn n(&self) -> usize {
        self.generator.ncols()
    }

    pub fn k(&self) -> usize {
        self.generator.nrows()
    }

    /// `C = C^perp`: the generator is self-orthogonal and `k = n / 2`.
    pub fn is_self_dual(&self) -> bool {
        is_self_dual(self)
    }

    /// Canonical basis (reduced echelon form); equal iff the row spaces are equal.
    pub fn canonical_basis(&self) -> Vec<u128> {
        reduce_rows(self.generator.rows.clone())
    }

    pub fn same_row_space(&self, other: &Self) -> bool {
        self.n() == other.n() && self.canonical_basis() == other.canonical_basis()
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        if v.len() != self.n() {
            return false;
        }
        let mut rows = self.generator.rows.clone();
        rows.push(v.bits());
        let mut reduced = reduce_rows(rows);
        reduced.retain(|&r| r != 0);
        reduced.len() == self.k()
    }

    /// All codewords as a sorted set. Only for small dimensions.
    pub fn codeword_set(&self) -> BTreeSet<u128> {
        assert!(self.k() <= 24, "codeword_set is for small codes");
        let mut out = BTreeSet::new();
        for m in 0u64..(1 << self.k()) {
            out.insert(self.encode(m));
        }
        out
    }

    /// Encodes message `m` (bit `i` selects generator row `i`).
    pub fn encode(&self, m: u64) -> u128 {
        let mut acc = 0;
        let mut bits = m;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc ^= self.generator.rows[i];
            bits &= bits - 1;
        }
        acc
    }
}

/// True iff `G G^T = 0` and `k = n / 2`.
pub fn is_self_dual(code: &BinaryCode) -> bool {
    let n = code.n();
    n % 2 == 0 && code.k() * 2 == n && code.generator.is_self_orthogonal()
}
