//! Binary linear algebra over the two-element field.
//!
//! [`BitVec`] is a fixed-width bit vector packed into `u64` words,
//! [`BinaryMatrix`] a list of equal-width rows, and [`Gf2Span`] an
//! incrementally echelonized basis used for rank and membership queries.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;

use crate::{Error, Result};

const WORD_BITS: usize = 64;

/// Fixed-width bit vector; width is set at construction and never changes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    /// Bit vector with ones exactly at `indices`.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = BitVec::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    /// Parses a string of '0'/'1' characters, index 0 first.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let mut v = BitVec::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid bit character {other:?} in {s:?}"
                    )))
                }
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for width {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for width {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn xor_in_place(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor width mismatch");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_in_place(other);
        out
    }

    /// Parity of the AND of two vectors: the GF(2) inner product.
    pub fn dot(&self, other: &BitVec) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch(format!(
                "inner product of widths {} and {}",
                self.len, other.len
            )));
        }
        let mut acc = 0u32;
        for (w, o) in self.words.iter().zip(&other.words) {
            acc ^= (w & o).count_ones() & 1;
        }
        Ok(acc & 1 == 1)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the first set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of set bits in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// '0'/'1' string, index 0 first.
    pub fn bit_string(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }

    /// Concatenation: `self` occupies the low indices.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.ones() {
            out.set(i, true);
        }
        for i in other.ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Copy of the bits in `range` as a new vector.
    pub fn section(&self, range: Range<usize>) -> BitVec {
        assert!(range.end <= self.len, "section out of range");
        let mut out = BitVec::zeros(range.len());
        for (j, i) in range.enumerate() {
            if self.get(i) {
                out.set(j, true);
            }
        }
        out
    }
}

impl Ord for BitVec {
    /// Bit-string lexicographic order: the first differing index decides,
    /// a zero bit sorting before a one bit; ties broken by width.
    fn cmp(&self, other: &Self) -> Ordering {
        let words = self.words.len().min(other.words.len());
        for wi in 0..words {
            let diff = self.words[wi] ^ other.words[wi];
            if diff != 0 {
                let bit = diff.trailing_zeros();
                let mine = self.words[wi] >> bit & 1;
                return if mine == 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({})", self.bit_string())
    }
}

/// Dense matrix over GF(2): a list of equal-width rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    width: usize,
    rows: Vec<BitVec>,
}

impl BinaryMatrix {
    pub fn new(width: usize) -> Self {
        BinaryMatrix { width, rows: Vec::new() }
    }

    pub fn from_rows(width: usize, rows: Vec<BitVec>) -> Result<Self> {
        for r in &rows {
            if r.len() != width {
                return Err(Error::DimensionMismatch(format!(
                    "row of width {} in matrix of width {width}",
                    r.len()
                )));
            }
        }
        Ok(BinaryMatrix { width, rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| BitVec::from_indices(n, &[i])).collect();
        BinaryMatrix { width: n, rows }
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<()> {
        if row.len() != self.width {
            return Err(Error::DimensionMismatch(format!(
                "row of width {} pushed into matrix of width {}",
                row.len(),
                self.width
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        Gf2Span::from_rows(self.width, self.rows.iter()).rank()
    }

    /// True iff `v` is a GF(2) linear combination of the rows.
    pub fn in_span(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.width {
            return Err(Error::DimensionMismatch(format!(
                "membership query of width {} against matrix of width {}",
                v.len(),
                self.width
            )));
        }
        Ok(Gf2Span::from_rows(self.width, self.rows.iter()).contains(v))
    }

    /// True iff the two matrices generate the same row space.
    pub fn row_space_equals(&self, other: &BinaryMatrix) -> bool {
        if self.width != other.width {
            return false;
        }
        let a = Gf2Span::from_rows(self.width, self.rows.iter());
        let b = Gf2Span::from_rows(other.width, other.rows.iter());
        a.rank() == b.rank() && self.rows.iter().all(|r| b.contains(r))
    }

    /// True iff every row of `self` is orthogonal to every row of `other`.
    pub fn orthogonal_to(&self, other: &BinaryMatrix) -> Result<bool> {
        for a in &self.rows {
            for b in &other.rows {
                if a.dot(b)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Echelonized basis supporting incremental insertion and membership queries.
///
/// Rows are kept reduced with distinct pivot positions, so `contains` is a
/// single reduction pass. Insertion order does not affect the answers.
#[derive(Clone, Debug)]
pub struct Gf2Span {
    width: usize,
    basis: Vec<BitVec>, // sorted by pivot index, pairwise distinct pivots
}

impl Gf2Span {
    pub fn new(width: usize) -> Self {
        Gf2Span { width, basis: Vec::new() }
    }

    pub fn from_rows<'a, I: IntoIterator<Item = &'a BitVec>>(width: usize, rows: I) -> Self {
        let mut span = Gf2Span::new(width);
        for r in rows {
            span.insert(r);
        }
        span
    }

    /// Reduces `v` against the basis; a nonzero residue extends the span.
    /// Returns true iff the rank increased.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.width, "span width mismatch");
        let residue = self.reduce(v);
        match residue.first_one() {
            None => false,
            Some(pivot) => {
                let at = self
                    .basis
                    .partition_point(|b| b.first_one().unwrap() < pivot);
                self.basis.insert(at, residue);
                true
            }
        }
    }

    /// Residue of `v` after elimination by the basis; zero iff `v` is spanned.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut cur = v.clone();
        for b in &self.basis {
            let pivot = b.first_one().unwrap();
            if pivot >= cur.len() {
                break;
            }
            if cur.get(pivot) {
                cur.xor_in_place(b);
            }
        }
        cur
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank() {
        assert_eq!(BinaryMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn zero_vector_always_in_span() {
        let m = BinaryMatrix::from_rows(
            5,
            vec![BitVec::from_indices(5, &[0, 1]), BitVec::from_indices(5, &[3])],
        )
        .unwrap();
        assert!(m.in_span(&BitVec::zeros(5)).unwrap());
    }

    #[test]
    fn span_membership() {
        // rows {110, 011}: span = {000, 110, 011, 101}
        let m = BinaryMatrix::from_rows(
            3,
            vec![BitVec::from_bit_str("110").unwrap(), BitVec::from_bit_str("011").unwrap()],
        )
        .unwrap();
        assert!(m.in_span(&BitVec::from_bit_str("101").unwrap()).unwrap());
        assert!(!m.in_span(&BitVec::from_bit_str("100").unwrap()).unwrap());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let r1 = BitVec::from_bit_str("1100").unwrap();
        let r2 = BitVec::from_bit_str("0110").unwrap();
        let r3 = r1.xor(&r2);
        let m = BinaryMatrix::from_rows(4, vec![r1, r2, r3]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn row_space_equality_ignores_presentation() {
        let star = BinaryMatrix::from_rows(
            3,
            vec![BitVec::from_bit_str("110").unwrap(), BitVec::from_bit_str("101").unwrap()],
        )
        .unwrap();
        let chain = BinaryMatrix::from_rows(
            3,
            vec![BitVec::from_bit_str("110").unwrap(), BitVec::from_bit_str("011").unwrap()],
        )
        .unwrap();
        assert!(star.row_space_equals(&chain));
        let smaller = BinaryMatrix::from_rows(3, vec![BitVec::from_bit_str("110").unwrap()]).unwrap();
        assert!(!star.row_space_equals(&smaller));
    }

    #[test]
    fn dot_width_mismatch_is_an_error() {
        let a = BitVec::zeros(3);
        let b = BitVec::zeros(4);
        assert!(a.dot(&b).is_err());
    }

    #[test]
    fn lexicographic_order_reads_low_indices_first() {
        let a = BitVec::from_bit_str("0110").unwrap();
        let b = BitVec::from_bit_str("1000").unwrap();
        assert!(a < b); // index 0: a has 0, b has 1
        let c = BitVec::from_bit_str("0111").unwrap();
        assert!(a < c);
    }

    #[test]
    fn bit_string_round_trip() {
        let s = "10110010011";
        assert_eq!(BitVec::from_bit_str(s).unwrap().bit_string(), s);
    }

    #[test]
    fn section_and_concat() {
        let v = BitVec::from_bit_str("101100").unwrap();
        let lo = v.section(0..3);
        let hi = v.section(3..6);
        assert_eq!(lo.bit_string(), "101");
        assert_eq!(hi.bit_string(), "100");
        assert_eq!(lo.concat(&hi), v);
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.count_ones(), 3);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.first_one(), Some(0));
    }
}
