//! Phase-free Pauli operators in the GF(2) symplectic representation.
//!
//! An n-qubit operator is a pair of width-n bit vectors: `x_bits` marks
//! positions carrying an X factor, `z_bits` positions carrying a Z factor,
//! and a position set in both denotes Y. Global phase is not represented;
//! products and commutation depend only on the bit vectors.

use std::cmp::Ordering;
use std::fmt;

use crate::gf2::BitVec;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PauliKind {
    I,
    X,
    Y,
    Z,
}

impl PauliKind {
    pub fn letter(self) -> char {
        match self {
            PauliKind::I => 'I',
            PauliKind::X => 'X',
            PauliKind::Y => 'Y',
            PauliKind::Z => 'Z',
        }
    }

    fn bits(self) -> (bool, bool) {
        match self {
            PauliKind::I => (false, false),
            PauliKind::X => (true, false),
            PauliKind::Y => (true, true),
            PauliKind::Z => (false, true),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x_bits: BitVec,
    z_bits: BitVec,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator { x_bits: BitVec::zeros(n), z_bits: BitVec::zeros(n) }
    }

    pub fn new(x_bits: BitVec, z_bits: BitVec) -> Result<Self> {
        if x_bits.len() != z_bits.len() {
            return Err(Error::DimensionMismatch(format!(
                "x half of width {} paired with z half of width {}",
                x_bits.len(),
                z_bits.len()
            )));
        }
        Ok(PauliOperator { x_bits, z_bits })
    }

    /// Operator with the given single-qubit factors; unspecified qubits are I.
    pub fn from_factors(n: usize, factors: &[(usize, PauliKind)]) -> Result<Self> {
        let mut op = PauliOperator::identity(n);
        for &(q, kind) in factors {
            if q >= n {
                return Err(Error::InvalidParameter(format!(
                    "qubit index {q} out of range for {n} qubits"
                )));
            }
            let (x, z) = kind.bits();
            op.x_bits.set(q, x);
            op.z_bits.set(q, z);
        }
        Ok(op)
    }

    pub fn single(n: usize, q: usize, kind: PauliKind) -> Result<Self> {
        PauliOperator::from_factors(n, &[(q, kind)])
    }

    /// X on every listed qubit.
    pub fn x_on(n: usize, qubits: &[usize]) -> Self {
        PauliOperator { x_bits: BitVec::from_indices(n, qubits), z_bits: BitVec::zeros(n) }
    }

    /// Z on every listed qubit.
    pub fn z_on(n: usize, qubits: &[usize]) -> Self {
        PauliOperator { x_bits: BitVec::zeros(n), z_bits: BitVec::from_indices(n, qubits) }
    }

    pub fn n(&self) -> usize {
        self.x_bits.len()
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x_bits
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z_bits
    }

    pub fn kind_at(&self, q: usize) -> PauliKind {
        match (self.x_bits.get(q), self.z_bits.get(q)) {
            (false, false) => PauliKind::I,
            (true, false) => PauliKind::X,
            (true, true) => PauliKind::Y,
            (false, true) => PauliKind::Z,
        }
    }

    /// Number of qubits acted on nontrivially.
    pub fn weight(&self) -> usize {
        (0..self.n())
            .filter(|&q| self.x_bits.get(q) || self.z_bits.get(q))
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.x_bits.is_zero() && self.z_bits.is_zero()
    }

    /// Qubits in the support, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&q| self.x_bits.get(q) || self.z_bits.get(q))
            .collect()
    }

    /// True iff the symplectic inner product is even.
    pub fn commutes(&self, other: &PauliOperator) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(format!(
                "commutation of operators on {} and {} qubits",
                self.n(),
                other.n()
            )));
        }
        let a = self.x_bits.dot(&other.z_bits)?;
        let b = self.z_bits.dot(&other.x_bits)?;
        Ok(a == b)
    }

    /// Phase-free product: componentwise xor of the x and z halves.
    pub fn product(&self, other: &PauliOperator) -> Result<PauliOperator> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(format!(
                "product of operators on {} and {} qubits",
                self.n(),
                other.n()
            )));
        }
        Ok(PauliOperator {
            x_bits: self.x_bits.xor(&other.x_bits),
            z_bits: self.z_bits.xor(&other.z_bits),
        })
    }

    /// Symplectic row: X half then Z half, width 2n.
    pub fn symplectic_row(&self) -> BitVec {
        self.x_bits.concat(&self.z_bits)
    }

    pub fn from_symplectic_row(row: &BitVec) -> Result<PauliOperator> {
        if !row.len().is_multiple_of(2) {
            return Err(Error::DimensionMismatch(format!(
                "symplectic row of odd width {}",
                row.len()
            )));
        }
        let n = row.len() / 2;
        Ok(PauliOperator { x_bits: row.section(0..n), z_bits: row.section(n..2 * n) })
    }

    /// Parses strings like "X0Z3" or "Z6Z7"; "I" alone is the identity.
    ///
    /// An indexed "I" token is accepted as a no-op. Repeating a qubit with the
    /// same letter is idempotent; repeating it with a different letter is a
    /// parse error.
    pub fn parse(text: &str, n: usize) -> Result<PauliOperator> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse("empty operator string".into()));
        }
        if trimmed == "I" {
            return Ok(PauliOperator::identity(n));
        }
        let mut op = PauliOperator::identity(n);
        let mut chars = trimmed.chars().peekable();
        while let Some(letter) = chars.next() {
            let kind = match letter {
                'I' => PauliKind::I,
                'X' => PauliKind::X,
                'Y' => PauliKind::Y,
                'Z' => PauliKind::Z,
                other => {
                    return Err(Error::Parse(format!(
                        "unknown Pauli letter {other:?} in {trimmed:?}"
                    )))
                }
            };
            let mut digits = String::new();
            while let Some(c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(*c);
                    chars.next();
                } else {
                    break;
                }
            }
            if digits.is_empty() {
                return Err(Error::Parse(format!(
                    "letter {letter:?} without qubit index in {trimmed:?}"
                )));
            }
            let q: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad qubit index {digits:?}")))?;
            if q >= n {
                return Err(Error::Parse(format!(
                    "qubit index {q} out of range for {n} qubits in {trimmed:?}"
                )));
            }
            let existing = op.kind_at(q);
            if existing != PauliKind::I && kind != PauliKind::I && existing != kind {
                return Err(Error::Parse(format!(
                    "conflicting letters {}{q} and {}{q} in {trimmed:?}",
                    existing.letter(),
                    kind.letter()
                )));
            }
            if kind != PauliKind::I {
                let (x, z) = kind.bits();
                op.x_bits.set(q, x);
                op.z_bits.set(q, z);
            }
        }
        Ok(op)
    }

    /// Canonical string: ascending qubit index, no I tokens; identity is "I".
    pub fn canonical_string(&self) -> String {
        if self.is_identity() {
            return "I".to_string();
        }
        let mut out = String::new();
        for q in self.support() {
            out.push(self.kind_at(q).letter());
            out.push_str(&q.to_string());
        }
        out
    }

    /// Letter-major presentation: X factors in ascending qubit order, then Y
    /// factors, then Z factors, the way cross errors are conventionally
    /// written (X0Z3, Y8Z3). Identity is "I".
    pub fn letter_major_string(&self) -> String {
        if self.is_identity() {
            return "I".to_string();
        }
        let mut out = String::new();
        for letter in [PauliKind::X, PauliKind::Y, PauliKind::Z] {
            for q in 0..self.n() {
                if self.kind_at(q) == letter {
                    out.push(letter.letter());
                    out.push_str(&q.to_string());
                }
            }
        }
        out
    }

    /// Total order used for deterministic tie-breaking: string comparison of
    /// the letter-major presentation. Any operator carrying only X factors
    /// sorts before Y- and Z-led ones regardless of qubit indices; decoders
    /// rely on this to prefer X-then-Z corrections among degenerate
    /// same-weight candidates.
    pub fn cmp_canonical(&self, other: &PauliOperator) -> Ordering {
        self.letter_major_string().cmp(&other.letter_major_string())
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli[{}]({})", self.n(), self.canonical_string())
    }
}

/// Calls `f` with every weight-`w` operator on `n` qubits, supports in
/// combination order and letters in X < Y < Z order at each position.
pub fn for_each_pauli_of_weight<F: FnMut(&PauliOperator)>(n: usize, w: usize, mut f: F) {
    if w == 0 {
        f(&PauliOperator::identity(n));
        return;
    }
    if w > n {
        return;
    }
    let kinds = [PauliKind::X, PauliKind::Y, PauliKind::Z];
    let mut support: Vec<usize> = (0..w).collect();
    loop {
        let mut choice = vec![0usize; w];
        'letters: loop {
            let factors: Vec<(usize, PauliKind)> = support
                .iter()
                .zip(&choice)
                .map(|(&q, &c)| (q, kinds[c]))
                .collect();
            let op = PauliOperator::from_factors(n, &factors).expect("support in range");
            f(&op);
            let mut i = w;
            while i > 0 {
                i -= 1;
                if choice[i] < 2 {
                    choice[i] += 1;
                    for c in choice.iter_mut().skip(i + 1) {
                        *c = 0;
                    }
                    continue 'letters;
                }
            }
            break;
        }
        // next support combination
        let mut advanced = false;
        let mut i = w;
        while i > 0 {
            i -= 1;
            if support[i] < n - (w - i) {
                support[i] += 1;
                for j in i + 1..w {
                    support[j] = support[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
}

/// Number of weight-`w` operators on `n` qubits: C(n, w) * 3^w.
pub fn pauli_count(n: usize, w: usize) -> u128 {
    binomial(n, w).saturating_mul(3u128.saturating_pow(w as u32))
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> PauliOperator {
        PauliOperator::parse(s, n).unwrap()
    }

    #[test]
    fn same_qubit_x_z_anticommute() {
        assert!(!p("X0", 2).commutes(&p("Z0", 2)).unwrap());
    }

    #[test]
    fn disjoint_supports_commute() {
        assert!(p("X0", 2).commutes(&p("Z1", 2)).unwrap());
    }

    #[test]
    fn y_z_anticommute_on_same_qubit() {
        assert!(!p("Y0", 1).commutes(&p("Z0", 1)).unwrap());
    }

    #[test]
    fn product_of_x_and_z_is_y() {
        let prod = p("X0", 1).product(&p("Z0", 1)).unwrap();
        assert_eq!(prod, p("Y0", 1));
    }

    #[test]
    fn every_operator_is_an_involution() {
        let op = p("X0Y3Z5", 6);
        assert!(op.product(&op).unwrap().is_identity());
    }

    #[test]
    fn product_xors_supports() {
        let prod = p("X0X1", 3).product(&p("X1X2", 3)).unwrap();
        assert_eq!(prod, p("X0X2", 3));
    }

    #[test]
    fn weights() {
        assert_eq!(PauliOperator::identity(4).weight(), 0);
        assert_eq!(p("Y0", 1).weight(), 1);
        assert_eq!(p("X0X1X2X3X4X5", 9).weight(), 6);
    }

    #[test]
    fn parse_shor_generator() {
        let g1 = p("X0X1X2X6X7X8", 9);
        assert_eq!(g1.support(), vec![0, 1, 2, 6, 7, 8]);
        assert_eq!(g1.kind_at(6), PauliKind::X);
    }

    #[test]
    fn identity_string_round_trip() {
        assert_eq!(p("I", 5), PauliOperator::identity(5));
        assert_eq!(PauliOperator::identity(5).canonical_string(), "I");
    }

    #[test]
    fn format_normalizes_to_ascending_index() {
        assert_eq!(p("Z7Z6", 9).canonical_string(), "Z6Z7");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(PauliOperator::parse("A0", 3).is_err());
        assert!(PauliOperator::parse("X5", 3).is_err());
        assert!(PauliOperator::parse("X0Z0", 3).is_err()); // conflicting letters
        assert!(PauliOperator::parse("X", 3).is_err()); // missing index
    }

    #[test]
    fn parse_accepts_idempotent_repeat_and_indexed_identity() {
        assert_eq!(p("X0X0", 3), p("X0", 3));
        assert_eq!(p("I1X0", 3), p("X0", 3));
    }

    #[test]
    fn symplectic_row_layout() {
        let op = p("X0Z2", 3);
        assert_eq!(op.symplectic_row().bit_string(), "100001");
        let back = PauliOperator::from_symplectic_row(&op.symplectic_row()).unwrap();
        assert_eq!(back, op);
    }

    #[test]
    fn tie_break_order_is_letter_major() {
        assert!(p("X0X1X2", 9).cmp_canonical(&p("Z0Z3Z6", 9)).is_lt());
        assert!(p("X0", 9).cmp_canonical(&p("X0X1", 9)).is_lt());
        assert!(p("X3", 9).cmp_canonical(&p("Y3", 9)).is_lt());
        // an X-carrying pair beats the Y-carrying one on both index orders
        assert!(p("X3Z6", 9).cmp_canonical(&p("Z0Y3", 9)).is_lt());
        assert!(p("Z0X3", 9).cmp_canonical(&p("Y3Z6", 9)).is_lt());
        assert_eq!(p("Z0X3", 9).letter_major_string(), "X3Z0");
        assert_eq!(p("Y4", 9).letter_major_string(), "Y4");
        assert_eq!(PauliOperator::identity(3).letter_major_string(), "I");
    }

    #[test]
    fn weight_enumeration_counts() {
        let mut count = 0u128;
        for_each_pauli_of_weight(5, 2, |_| count += 1);
        assert_eq!(count, pauli_count(5, 2));
        assert_eq!(pauli_count(5, 2), 90);
        let mut seen = std::collections::HashSet::new();
        for_each_pauli_of_weight(4, 3, |op| {
            assert_eq!(op.weight(), 3);
            assert!(seen.insert(op.canonical_string()));
        });
        assert_eq!(seen.len() as u128, pauli_count(4, 3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 2), 36);
        assert_eq!(binomial(24, 3), 2024);
        assert_eq!(binomial(4, 5), 0);
    }
}
