//! Classical repetition and overlapped-repetition codes.
//!
//! The overlapped code merges k independent [d,1,d] repetition codes so that
//! they share the last `ell` bits, giving a [k(d-ell)+ell, k, d] code. The
//! shared bits carry the parity of all message bits; this is the unique
//! codeword map consistent with both weight facts the construction relies on
//! (a single flipped message bit costs weight d, two flipped bits cost
//! 2(d-ell) >= d).

use crate::gf2::{BinaryMatrix, BitVec};
use crate::{Error, Result};

/// Block layout of an overlapped code: k unshared blocks of size d-ell in
/// message order, then one shared block of size ell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapLayout {
    pub k: usize,
    pub d: usize,
    pub ell: usize,
}

impl OverlapLayout {
    pub fn new(k: usize, d: usize, ell: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParameter(format!("k = {k} violates k >= 1")));
        }
        if d < 2 {
            return Err(Error::InvalidParameter(format!("d = {d} violates d >= 2")));
        }
        if ell < 1 || ell > d / 2 {
            return Err(Error::InvalidParameter(format!(
                "ell = {ell} violates 1 <= ell <= floor(d/2) = {}",
                d / 2
            )));
        }
        Ok(OverlapLayout { k, d, ell })
    }

    pub fn block_size(&self) -> usize {
        self.d - self.ell
    }

    pub fn len(&self) -> usize {
        self.k * self.block_size() + self.ell
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Bit indices of unshared block `i`.
    pub fn unshared_range(&self, i: usize) -> std::ops::Range<usize> {
        assert!(i < self.k);
        let s = self.block_size();
        i * s..(i + 1) * s
    }

    /// Bit indices of the shared block.
    pub fn shared_range(&self) -> std::ops::Range<usize> {
        let start = self.k * self.block_size();
        start..start + self.ell
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckGroupRole {
    /// Adjacent-pair checks inside unshared block `block`.
    Unshared { block: usize },
    /// Adjacent-pair checks inside the shared block.
    Shared,
    /// The single check connecting every unshared block to the shared block.
    Bridge,
}

#[derive(Clone, Debug)]
pub struct CheckGroup {
    pub label: String,
    pub role: CheckGroupRole,
    pub row_indices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    pub n: usize,
    pub k: usize,
    pub claimed_distance: usize,
    pub generator: BinaryMatrix,
    pub checks: BinaryMatrix,
    pub layout: Option<OverlapLayout>,
    pub check_groups: Vec<CheckGroup>,
}

impl LinearCode {
    /// The [d,1,d] repetition code: all-ones generator, adjacent-pair checks.
    pub fn build_repetition(d: usize) -> Result<LinearCode> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!("d = {d} violates d >= 2")));
        }
        let all: Vec<usize> = (0..d).collect();
        let generator = BinaryMatrix::from_rows(d, vec![BitVec::from_indices(d, &all)])?;
        let mut checks = BinaryMatrix::new(d);
        for i in 0..d - 1 {
            checks.push_row(BitVec::from_indices(d, &[i, i + 1]))?;
        }
        Ok(LinearCode {
            n: d,
            k: 1,
            claimed_distance: d,
            generator,
            checks,
            layout: None,
            check_groups: vec![CheckGroup {
                label: "pairs".into(),
                role: CheckGroupRole::Unshared { block: 0 },
                row_indices: (0..d - 1).collect(),
            }],
        })
    }

    /// The [k(d-ell)+ell, k, d] overlapped repetition code.
    ///
    /// Message bit i fills unshared block i; every shared bit equals the
    /// parity of all message bits. Checks are adjacent pairs within each
    /// unshared block, adjacent pairs within the shared block, and one bridge
    /// row covering the last bit of each unshared block and the first shared
    /// bit (weight k+1).
    pub fn build_overlapped(k: usize, d: usize, ell: usize) -> Result<LinearCode> {
        let layout = OverlapLayout::new(k, d, ell)?;
        let n = layout.len();
        let shared: Vec<usize> = layout.shared_range().collect();

        let mut generator = BinaryMatrix::new(n);
        for i in 0..k {
            let mut row: Vec<usize> = layout.unshared_range(i).collect();
            row.extend_from_slice(&shared);
            generator.push_row(BitVec::from_indices(n, &row))?;
        }

        let mut checks = BinaryMatrix::new(n);
        let mut check_groups = Vec::new();
        for i in 0..k {
            let range = layout.unshared_range(i);
            let start = checks.row_count();
            for q in range.start..range.end - 1 {
                checks.push_row(BitVec::from_indices(n, &[q, q + 1]))?;
            }
            check_groups.push(CheckGroup {
                label: format!("unshared-{i}"),
                role: CheckGroupRole::Unshared { block: i },
                row_indices: (start..checks.row_count()).collect(),
            });
        }
        let shared_start = checks.row_count();
        for w in shared.windows(2) {
            checks.push_row(BitVec::from_indices(n, &[w[0], w[1]]))?;
        }
        check_groups.push(CheckGroup {
            label: "shared".into(),
            role: CheckGroupRole::Shared,
            row_indices: (shared_start..checks.row_count()).collect(),
        });
        let mut bridge: Vec<usize> = (0..k).map(|i| layout.unshared_range(i).end - 1).collect();
        bridge.push(shared[0]);
        let bridge_index = checks.row_count();
        checks.push_row(BitVec::from_indices(n, &bridge))?;
        check_groups.push(CheckGroup {
            label: "bridge".into(),
            role: CheckGroupRole::Bridge,
            row_indices: vec![bridge_index],
        });

        Ok(LinearCode {
            n,
            k,
            claimed_distance: d,
            generator,
            checks,
            layout: Some(layout),
            check_groups,
        })
    }

    /// Codeword for `message` (length k).
    pub fn encode(&self, message: &BitVec) -> Result<BitVec> {
        if message.len() != self.k {
            return Err(Error::DimensionMismatch(format!(
                "message of length {} for a k = {} code",
                message.len(),
                self.k
            )));
        }
        let mut word = BitVec::zeros(self.n);
        for i in message.ones() {
            word.xor_in_place(self.generator.row(i));
        }
        Ok(word)
    }

    /// True iff `word` satisfies every check row.
    pub fn is_codeword(&self, word: &BitVec) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "word of length {} for an n = {} code",
                word.len(),
                self.n
            )));
        }
        for row in self.checks.rows() {
            if word.dot(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimum Hamming weight over all nonzero codewords, by exhaustive
    /// enumeration of the 2^k - 1 nonzero messages.
    pub fn min_distance(&self) -> Result<usize> {
        if self.k > 20 {
            return Err(Error::Capacity(format!(
                "min_distance enumerates 2^k - 1 messages; k = {} exceeds the k <= 20 cap",
                self.k
            )));
        }
        let mut best = usize::MAX;
        for m in 1u64..1 << self.k {
            let msg_bits: Vec<usize> = (0..self.k).filter(|i| m >> i & 1 == 1).collect();
            let message = BitVec::from_indices(self.k, &msg_bits);
            let weight = self.encode(&message)?.count_ones();
            best = best.min(weight);
        }
        Ok(best)
    }
}

/// Pieces of information needed by the grouped decoder of an overlapped code:
/// k sub-tables of size 2^(d-ell-1), one of size 2^(ell-1), and a two-entry
/// bridge table.
pub fn classical_rule_count(k: usize, d: usize, ell: usize) -> Result<u128> {
    OverlapLayout::new(k, d, ell)?;
    Ok(k as u128 * (1u128 << (d - ell - 1)) + (1u128 << (ell - 1)) + 2)
}

/// Exponent of the naive full syndrome table size: k(d-ell-1) + ell.
pub fn naive_table_exponent(k: usize, d: usize, ell: usize) -> Result<u32> {
    OverlapLayout::new(k, d, ell)?;
    Ok((k * (d - ell - 1) + ell) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitVec {
        BitVec::from_bit_str(s).unwrap()
    }

    #[test]
    fn repetition_code_structure() {
        let code = LinearCode::build_repetition(3).unwrap();
        assert_eq!((code.n, code.k), (3, 1));
        let rows: Vec<String> = code.checks.rows().iter().map(|r| r.bit_string()).collect();
        assert_eq!(rows, vec!["110", "011"]);
        assert_eq!(code.min_distance().unwrap(), 3);

        let d2 = LinearCode::build_repetition(2).unwrap();
        assert_eq!((d2.n, d2.k), (2, 1));
        assert_eq!(d2.checks.row_count(), 1);
        assert_eq!(d2.min_distance().unwrap(), 2);

        let d5 = LinearCode::build_repetition(5).unwrap();
        assert_eq!(d5.checks.row_count(), 4);
        assert_eq!(d5.min_distance().unwrap(), 5);
        assert!(LinearCode::build_repetition(1).is_err());
    }

    #[test]
    fn overlapped_5_2_3_matches_lexicode_parameters() {
        let code = LinearCode::build_overlapped(2, 3, 1).unwrap();
        assert_eq!((code.n, code.k), (5, 2));
        assert_eq!(code.min_distance().unwrap(), 3);
        // two overlapping triples: blocks {0,1}, {2,3}, shared {4}
        assert_eq!(code.encode(&bits("10")).unwrap().bit_string(), "11001");
        assert_eq!(code.encode(&bits("01")).unwrap().bit_string(), "00111");
        assert_eq!(code.encode(&bits("11")).unwrap().bit_string(), "11110");
        assert_eq!(code.encode(&bits("00")).unwrap().bit_string(), "00000");
    }

    #[test]
    fn overlapped_reduces_to_repetition_at_k_1() {
        let code = LinearCode::build_overlapped(1, 3, 1).unwrap();
        assert_eq!((code.n, code.k), (3, 1));
        assert_eq!(code.min_distance().unwrap(), 3);
        let rep = LinearCode::build_repetition(3).unwrap();
        assert!(code.checks.row_space_equals(&rep.checks));
    }

    #[test]
    fn overlapped_7_3_3_check_groups() {
        let code = LinearCode::build_overlapped(3, 3, 1).unwrap();
        assert_eq!((code.n, code.k), (7, 3));
        assert_eq!(code.min_distance().unwrap(), 3);
        let sizes: Vec<usize> = code.check_groups.iter().map(|g| g.row_indices.len()).collect();
        assert_eq!(sizes, vec![1, 1, 1, 0, 1]); // 3 unshared rows, 0 shared, 1 bridge
        let bridge = code.checks.row(code.check_groups.last().unwrap().row_indices[0]);
        assert_eq!(bridge.count_ones(), 4);
        assert_eq!(code.encode(&bits("111")).unwrap().bit_string(), "1111111");
    }

    #[test]
    fn encode_rejects_wrong_length() {
        let code = LinearCode::build_overlapped(2, 3, 1).unwrap();
        assert!(code.encode(&bits("101")).is_err());
    }

    #[test]
    fn parameter_validation() {
        assert!(LinearCode::build_overlapped(0, 3, 1).is_err());
        assert!(LinearCode::build_overlapped(2, 3, 0).is_err());
        assert!(LinearCode::build_overlapped(2, 3, 2).is_err()); // ell > floor(d/2)
        assert!(LinearCode::build_overlapped(2, 1, 1).is_err());
    }

    #[test]
    fn degenerate_blocks_of_size_one() {
        // d = 2, ell = 1: blocks of one bit, no in-block checks, bridge only.
        let code = LinearCode::build_overlapped(3, 2, 1).unwrap();
        assert_eq!((code.n, code.k), (4, 3));
        assert_eq!(code.checks.row_count(), 1);
        assert_eq!(code.checks.row(0).count_ones(), 4);
        assert_eq!(code.min_distance().unwrap(), 2);
    }

    #[test]
    fn min_distance_examples() {
        let code = LinearCode::build_overlapped(2, 4, 2).unwrap();
        let weights: Vec<usize> = (1u64..4)
            .map(|m| {
                let msg = BitVec::from_indices(2, &(0..2).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>());
                code.encode(&msg).unwrap().count_ones()
            })
            .collect();
        assert_eq!(weights, vec![4, 4, 4]);
        assert_eq!(code.min_distance().unwrap(), 4);
    }

    #[test]
    fn generator_and_checks_are_orthogonal_complements() {
        for (k, d, ell) in [(1, 3, 1), (2, 3, 1), (3, 4, 2), (4, 5, 2), (2, 2, 1)] {
            let code = LinearCode::build_overlapped(k, d, ell).unwrap();
            assert!(code.generator.orthogonal_to(&code.checks).unwrap());
            assert_eq!(code.generator.rank(), code.k);
            assert_eq!(code.checks.rank(), code.n - code.k);
        }
    }

    #[test]
    fn exhaustive_distance_sweep() {
        // Single flips cost d; j >= 2 simultaneous flips cost >= 2(d-ell) >= d.
        for k in 1..=6 {
            for d in 2..=6 {
                for ell in 1..=d / 2 {
                    let code = LinearCode::build_overlapped(k, d, ell).unwrap();
                    assert_eq!(
                        code.min_distance().unwrap(),
                        d,
                        "distance mismatch at k={k} d={d} ell={ell}"
                    );
                    let expected_rows = k * (d - ell - 1) + ell;
                    assert_eq!(code.checks.row_count(), expected_rows);
                }
            }
        }
    }

    #[test]
    fn codeword_membership_is_exactly_the_check_kernel() {
        // Exhaustive over all words for small n.
        for (k, d, ell) in [(2, 3, 1), (3, 3, 1), (2, 4, 1), (2, 4, 2)] {
            let code = LinearCode::build_overlapped(k, d, ell).unwrap();
            assert!(code.n <= 16);
            let mut codewords = std::collections::HashSet::new();
            for m in 0u64..1 << code.k {
                let msg_bits: Vec<usize> = (0..code.k).filter(|i| m >> i & 1 == 1).collect();
                let message = BitVec::from_indices(code.k, &msg_bits);
                codewords.insert(code.encode(&message).unwrap().bit_string());
            }
            for w in 0u64..1 << code.n {
                let word_bits: Vec<usize> = (0..code.n).filter(|i| w >> i & 1 == 1).collect();
                let word = BitVec::from_indices(code.n, &word_bits);
                let passes = code.is_codeword(&word).unwrap();
                assert_eq!(passes, codewords.contains(&word.bit_string()));
            }
        }
    }

    #[test]
    fn rule_count_formula() {
        assert_eq!(classical_rule_count(2, 3, 1).unwrap(), 7);
        assert_eq!(naive_table_exponent(2, 3, 1).unwrap(), 3);
        assert_eq!(classical_rule_count(1, 3, 1).unwrap(), 5);
        assert_eq!(classical_rule_count(4, 5, 2).unwrap(), 20);
        assert_eq!(naive_table_exponent(4, 5, 2).unwrap(), 10);
    }

    #[test]
    fn min_distance_refuses_oversized_codes() {
        let code = LinearCode::build_overlapped(21, 2, 1).unwrap();
        assert!(matches!(code.min_distance(), Err(Error::Capacity(_))));
    }
}
