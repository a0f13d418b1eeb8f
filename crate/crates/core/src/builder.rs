//! Builders for the four stabilizer-code constructions.
//!
//! All four are CSS concatenations of an outer classical code with an inner
//! X-carrier per classical position:
//!
//! - `shor` / `outer`: each classical position becomes a block of d physical
//!   qubits; Z stabilizers are adjacent pairs inside blocks, X stabilizers
//!   are classical check rows lifted block-wise.
//! - `inner` / `double`: the physical qubits form one overlapped repetition
//!   code; its check rows become the Z stabilizers, and each outer check row
//!   lifts to a product of inner codeword X operators (the inner shared block
//!   cancels in even products, which is where the 2(d-ell) pair weights and
//!   the parity-dependent bridge weight come from).
//!
//! Builders record the claimed distance as a claim only; confirming or
//! refuting it is the verifier's job.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::classical::{CheckGroupRole, LinearCode, OverlapLayout};
use crate::gf2::{BinaryMatrix, BitVec};
use crate::pauli::PauliOperator;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Shor { d: usize },
    Outer { k: usize, d: usize, ell: usize },
    Inner { t: usize, d: usize, ell: usize },
    Double { ko: usize, d: usize, ell: usize },
}

impl Construction {
    pub fn tag(&self) -> &'static str {
        match self {
            Construction::Shor { .. } => "shor",
            Construction::Outer { .. } => "outer",
            Construction::Inner { .. } => "inner",
            Construction::Double { .. } => "double",
        }
    }
}

/// Asymptotic-rate queries identify a construction family without its
/// multiplicity parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionTag {
    Shor,
    Outer,
    Inner,
    Double,
}

impl ConstructionTag {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "shor" => Ok(ConstructionTag::Shor),
            "outer" => Ok(ConstructionTag::Outer),
            "inner" => Ok(ConstructionTag::Inner),
            "double" => Ok(ConstructionTag::Double),
            other => Err(Error::InvalidParameter(format!(
                "unknown construction {other:?}; expected shor, outer, inner, or double"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupRole {
    OuterPair,
    OuterBridge,
    InnerPair,
    SharedPair,
    InnerBridge,
}

impl GroupRole {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupRole::OuterPair => "outer-pair",
            GroupRole::OuterBridge => "outer-bridge",
            GroupRole::InnerPair => "inner-pair",
            GroupRole::SharedPair => "shared-pair",
            GroupRole::InnerBridge => "inner-bridge",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "outer-pair" => Ok(GroupRole::OuterPair),
            "outer-bridge" => Ok(GroupRole::OuterBridge),
            "inner-pair" => Ok(GroupRole::InnerPair),
            "shared-pair" => Ok(GroupRole::SharedPair),
            "inner-bridge" => Ok(GroupRole::InnerBridge),
            other => Err(Error::Malformed(format!("unknown group role {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerGroup {
    pub label: String,
    pub role: GroupRole,
    pub generators: Vec<PauliOperator>,
}

/// A CSS stabilizer code with grouped generators and logical representatives.
///
/// Generator order for syndrome extraction is all X groups first (outer
/// groups before any bridge), then all Z groups.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    pub n: usize,
    pub k: usize,
    pub claimed_distance: usize,
    pub construction: Option<Construction>,
    pub x_groups: Vec<StabilizerGroup>,
    pub z_groups: Vec<StabilizerGroup>,
    pub logical_x: Vec<PauliOperator>,
    pub logical_z: Vec<PauliOperator>,
}

impl StabilizerCode {
    /// Generators in syndrome order.
    pub fn generators(&self) -> impl Iterator<Item = &PauliOperator> {
        self.x_groups
            .iter()
            .chain(self.z_groups.iter())
            .flat_map(|g| g.generators.iter())
    }

    pub fn generator_count(&self) -> usize {
        self.x_groups
            .iter()
            .chain(self.z_groups.iter())
            .map(|g| g.generators.len())
            .sum()
    }

    /// Symplectic rows of the generators, in syndrome order (width 2n).
    pub fn symplectic_matrix(&self) -> BinaryMatrix {
        let mut m = BinaryMatrix::new(2 * self.n);
        for g in self.generators() {
            m.push_row(g.symplectic_row()).expect("uniform width");
        }
        m
    }

    /// True iff every generator is pure X-type or pure Z-type.
    pub fn is_css(&self) -> bool {
        self.generators()
            .all(|g| g.x_bits().is_zero() || g.z_bits().is_zero())
    }

    /// Histogram of generator weights split by X/Z type.
    pub fn weight_census(&self) -> WeightCensus {
        let mut census = WeightCensus::default();
        for g in &self.x_groups {
            for op in &g.generators {
                *census.x.entry(op.weight()).or_insert(0) += 1;
            }
        }
        for g in &self.z_groups {
            for op in &g.generators {
                *census.z.entry(op.weight()).or_insert(0) += 1;
            }
        }
        census
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightCensus {
    pub x: BTreeMap<usize, usize>,
    pub z: BTreeMap<usize, usize>,
}

/// Closed-form (n, k, claimed distance) for a construction.
pub fn predicted_parameters(construction: &Construction) -> Result<(usize, usize, usize)> {
    match *construction {
        Construction::Shor { d } => {
            if d < 2 {
                return Err(Error::InvalidParameter(format!("d = {d} violates d >= 2")));
            }
            Ok((d * d, 1, d))
        }
        Construction::Outer { k, d, ell } => {
            OverlapLayout::new(k, d, ell)?;
            Ok((k * d * (d - ell) + d * ell, k, d))
        }
        Construction::Inner { t, d, ell } => {
            OverlapLayout::new(t * d, d, ell)?;
            Ok((t * d * (d - ell) + ell, t, d))
        }
        Construction::Double { ko, d, ell } => {
            OverlapLayout::new(ko, d, ell)?;
            let s = d - ell;
            Ok((ko * s * s + ell * (s + 1), ko, d))
        }
    }
}

/// X on every qubit of each listed block of `block_size` consecutive qubits.
fn x_on_blocks(n: usize, block_size: usize, blocks: &[usize]) -> PauliOperator {
    let qubits: Vec<usize> = blocks
        .iter()
        .flat_map(|&b| b * block_size..(b + 1) * block_size)
        .collect();
    PauliOperator::x_on(n, &qubits)
}

/// Adjacent-pair Z generators inside one block of consecutive qubits.
fn z_pairs_in_block(n: usize, start: usize, size: usize) -> Vec<PauliOperator> {
    (start..start + size - 1)
        .map(|q| PauliOperator::z_on(n, &[q, q + 1]))
        .collect()
}

/// The [[d^2, 1, d]] Shor code with the textbook generator list: (d-1)
/// X generators pairing block 0 with block j, then d(d-1) adjacent-pair
/// Z generators block by block.
pub fn build_shor(d: usize) -> Result<StabilizerCode> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("d = {d} violates d >= 2")));
    }
    let n = d * d;
    let x_group = StabilizerGroup {
        label: "outer".into(),
        role: GroupRole::OuterPair,
        generators: (1..d).map(|j| x_on_blocks(n, d, &[0, j])).collect(),
    };
    let z_groups: Vec<StabilizerGroup> = (0..d)
        .map(|b| StabilizerGroup {
            label: format!("inner-{b}"),
            role: GroupRole::InnerPair,
            generators: z_pairs_in_block(n, b * d, d),
        })
        .collect();
    let logical_x = vec![x_on_blocks(n, d, &[0])];
    let first_qubits: Vec<usize> = (0..d).map(|b| b * d).collect();
    let logical_z = vec![PauliOperator::z_on(n, &first_qubits)];
    let code = StabilizerCode {
        n,
        k: 1,
        claimed_distance: d,
        construction: Some(Construction::Shor { d }),
        x_groups: vec![x_group],
        z_groups,
        logical_x,
        logical_z,
    };
    debug_assert_eq!(code.generator_count(), n - 1);
    Ok(code)
}

fn role_for_outer(role: CheckGroupRole) -> GroupRole {
    match role {
        CheckGroupRole::Unshared { .. } => GroupRole::OuterPair,
        CheckGroupRole::Shared => GroupRole::SharedPair,
        CheckGroupRole::Bridge => GroupRole::OuterBridge,
    }
}

fn role_for_inner(role: CheckGroupRole) -> GroupRole {
    match role {
        CheckGroupRole::Unshared { .. } => GroupRole::InnerPair,
        CheckGroupRole::Shared => GroupRole::SharedPair,
        CheckGroupRole::Bridge => GroupRole::InnerBridge,
    }
}

/// Unit vector message for logical index `i` of a k-message code.
fn unit_codeword(code: &LinearCode, i: usize) -> BitVec {
    let msg = BitVec::from_indices(code.k, &[i]);
    code.encode(&msg).expect("unit message has length k")
}

/// Overlapped repetition code as the outer code over [d,1,d] inner blocks:
/// [[kd(d-ell) + d ell, k, d]].
pub fn build_outer_overlap(k: usize, d: usize, ell: usize) -> Result<StabilizerCode> {
    let outer = LinearCode::build_overlapped(k, d, ell)?;
    let layout = outer.layout.clone().expect("overlapped code has a layout");
    let n = outer.n * d;

    let x_groups: Vec<StabilizerGroup> = outer
        .check_groups
        .iter()
        .map(|g| StabilizerGroup {
            label: format!("outer-{}", g.label),
            role: role_for_outer(g.role),
            generators: g
                .row_indices
                .iter()
                .map(|&ri| {
                    let blocks: Vec<usize> = outer.checks.row(ri).ones().collect();
                    x_on_blocks(n, d, &blocks)
                })
                .collect(),
        })
        .collect();

    let z_groups: Vec<StabilizerGroup> = (0..outer.n)
        .map(|b| StabilizerGroup {
            label: format!("inner-{b}"),
            role: GroupRole::InnerPair,
            generators: z_pairs_in_block(n, b * d, d),
        })
        .collect();

    let logical_x: Vec<PauliOperator> = (0..k)
        .map(|i| x_on_blocks(n, d, &[layout.unshared_range(i).start]))
        .collect();
    let logical_z: Vec<PauliOperator> = (0..k)
        .map(|i| {
            let qubits: Vec<usize> = unit_codeword(&outer, i).ones().map(|b| b * d).collect();
            PauliOperator::z_on(n, &qubits)
        })
        .collect();

    let code = StabilizerCode {
        n,
        k,
        claimed_distance: d,
        construction: Some(Construction::Outer { k, d, ell }),
        x_groups,
        z_groups,
        logical_x,
        logical_z,
    };
    debug_assert_eq!(code.generator_count(), code.n - code.k);
    Ok(code)
}

/// Shared scaffolding for the inner and double constructions: physical
/// qubits carry one overlapped repetition code whose check rows become the
/// Z stabilizers; classical outer check rows lift through the inner codeword
/// X operators.
struct InnerCarrier {
    n: usize,
    inner: LinearCode,
    /// X support of the inner codeword for each inner logical position.
    codeword_x: Vec<BitVec>,
}

impl InnerCarrier {
    fn build(inner_k: usize, d: usize, ell: usize) -> Result<Self> {
        let inner = LinearCode::build_overlapped(inner_k, d, ell)?;
        let codeword_x = (0..inner_k).map(|j| unit_codeword(&inner, j)).collect();
        Ok(InnerCarrier { n: inner.n, inner, codeword_x })
    }

    fn z_groups(&self) -> Vec<StabilizerGroup> {
        self.inner
            .check_groups
            .iter()
            .map(|g| StabilizerGroup {
                label: format!("inner-{}", g.label),
                role: role_for_inner(g.role),
                generators: g
                    .row_indices
                    .iter()
                    .map(|&ri| {
                        let qs: Vec<usize> = self.inner.checks.row(ri).ones().collect();
                        PauliOperator::z_on(self.n, &qs)
                    })
                    .collect(),
            })
            .collect()
    }

    /// X operator for a product of inner codewords over `positions`.
    fn lift(&self, positions: impl IntoIterator<Item = usize>) -> PauliOperator {
        let mut bits = BitVec::zeros(self.n);
        for j in positions {
            bits.xor_in_place(&self.codeword_x[j]);
        }
        PauliOperator::new(bits, BitVec::zeros(self.n)).expect("equal widths")
    }

    /// First physical qubit of inner unshared block `j`: the representative
    /// carrying the single-qubit Z that pairs with the j-th codeword lift.
    fn z_rep_qubit(&self, j: usize) -> usize {
        let layout = self.inner.layout.as_ref().expect("overlapped layout");
        layout.unshared_range(j).start
    }

    fn logical_z_over(&self, positions: impl IntoIterator<Item = usize>) -> PauliOperator {
        let qubits: Vec<usize> = positions.into_iter().map(|j| self.z_rep_qubit(j)).collect();
        PauliOperator::z_on(self.n, &qubits)
    }
}

/// Overlapped repetition code as the inner code under t repetition outer
/// codes: [[td(d-ell) + ell, t, d]].
pub fn build_inner_overlap(t: usize, d: usize, ell: usize) -> Result<StabilizerCode> {
    if t < 1 {
        return Err(Error::InvalidParameter(format!("t = {t} violates t >= 1")));
    }
    let carrier = InnerCarrier::build(t * d, d, ell)?;

    // t outer [d,1,d] repetition codes over consecutive runs of d inner
    // positions; each adjacent-pair check lifts to a weight-2(d-ell) operator.
    let x_groups: Vec<StabilizerGroup> = (0..t)
        .map(|s| StabilizerGroup {
            label: format!("outer-{s}"),
            role: GroupRole::OuterPair,
            generators: (0..d - 1)
                .map(|a| carrier.lift([s * d + a, s * d + a + 1]))
                .collect(),
        })
        .collect();

    let logical_x: Vec<PauliOperator> = (0..t).map(|s| carrier.lift([s * d])).collect();
    let logical_z: Vec<PauliOperator> =
        (0..t).map(|s| carrier.logical_z_over(s * d..(s + 1) * d)).collect();

    let code = StabilizerCode {
        n: carrier.n,
        k: t,
        claimed_distance: d,
        construction: Some(Construction::Inner { t, d, ell }),
        x_groups,
        z_groups: carrier.z_groups(),
        logical_x,
        logical_z,
    };
    debug_assert_eq!(code.generator_count(), code.n - code.k);
    Ok(code)
}

/// Overlapped repetition codes in both roles:
/// [[ko(d-ell)^2 + ell(d-ell+1), ko, d]].
pub fn build_double_overlap(ko: usize, d: usize, ell: usize) -> Result<StabilizerCode> {
    let outer = LinearCode::build_overlapped(ko, d, ell)?;
    let outer_layout = outer.layout.clone().expect("overlapped layout");
    let inner_k = outer.n;
    let carrier = InnerCarrier::build(inner_k, d, ell)?;

    let x_groups: Vec<StabilizerGroup> = outer
        .check_groups
        .iter()
        .map(|g| StabilizerGroup {
            label: format!("outer-{}", g.label),
            role: role_for_outer(g.role),
            generators: g
                .row_indices
                .iter()
                .map(|&ri| carrier.lift(outer.checks.row(ri).ones()))
                .collect(),
        })
        .collect();

    let logical_x: Vec<PauliOperator> = (0..ko)
        .map(|i| carrier.lift([outer_layout.unshared_range(i).start]))
        .collect();
    let logical_z: Vec<PauliOperator> = (0..ko)
        .map(|i| carrier.logical_z_over(unit_codeword(&outer, i).ones()))
        .collect();

    let code = StabilizerCode {
        n: carrier.n,
        k: ko,
        claimed_distance: d,
        construction: Some(Construction::Double { ko, d, ell }),
        x_groups,
        z_groups: carrier.z_groups(),
        logical_x,
        logical_z,
    };
    debug_assert_eq!(code.generator_count(), code.n - code.k);
    Ok(code)
}

/// Builds a code from its construction record.
pub fn build(construction: &Construction) -> Result<StabilizerCode> {
    match *construction {
        Construction::Shor { d } => build_shor(d),
        Construction::Outer { k, d, ell } => build_outer_overlap(k, d, ell),
        Construction::Inner { t, d, ell } => build_inner_overlap(t, d, ell),
        Construction::Double { ko, d, ell } => build_double_overlap(ko, d, ell),
    }
}

/// Exact asymptotic code rate of a construction family as the multiplicity
/// parameter grows without bound.
pub fn asymptotic_rate(tag: ConstructionTag, d: usize, ell: usize) -> Result<Ratio<u64>> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("d = {d} violates d >= 2")));
    }
    if tag != ConstructionTag::Shor {
        OverlapLayout::new(1, d, ell)?;
    }
    let d = d as u64;
    let ell = ell as u64;
    Ok(match tag {
        ConstructionTag::Shor => Ratio::new(1, d * d),
        ConstructionTag::Outer | ConstructionTag::Inner => Ratio::new(1, d * (d - ell)),
        ConstructionTag::Double => Ratio::new(1, (d - ell) * (d - ell)),
    })
}

/// Ratio of a family's asymptotic rate to the Shor rate 1/d^2.
pub fn rate_ratio_vs_shor(tag: ConstructionTag, d: usize, ell: usize) -> Result<Ratio<u64>> {
    let rate = asymptotic_rate(tag, d, ell)?;
    Ok(rate * Ratio::from_integer((d * d) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(group: &StabilizerGroup) -> Vec<String> {
        group.generators.iter().map(|g| g.canonical_string()).collect()
    }

    fn all_strings(code: &StabilizerCode) -> Vec<String> {
        code.generators().map(|g| g.canonical_string()).collect()
    }

    #[test]
    fn shor_3_has_the_textbook_generators_in_order() {
        let code = build_shor(3).unwrap();
        assert_eq!((code.n, code.k), (9, 1));
        assert_eq!(
            all_strings(&code),
            vec![
                "X0X1X2X3X4X5",
                "X0X1X2X6X7X8",
                "Z0Z1",
                "Z1Z2",
                "Z3Z4",
                "Z4Z5",
                "Z6Z7",
                "Z7Z8",
            ]
        );
        assert_eq!(code.logical_x[0].canonical_string(), "X0X1X2");
        assert_eq!(code.logical_z[0].canonical_string(), "Z0Z3Z6");
    }

    #[test]
    fn shor_census() {
        let c3 = build_shor(3).unwrap().weight_census();
        assert_eq!(c3.x, BTreeMap::from([(6, 2)]));
        assert_eq!(c3.z, BTreeMap::from([(2, 6)]));
        let c5 = build_shor(5).unwrap().weight_census();
        assert_eq!(c5.x, BTreeMap::from([(10, 4)]));
        assert_eq!(c5.z, BTreeMap::from([(2, 20)]));
    }

    #[test]
    fn outer_overlap_at_k_1_spans_the_shor_group() {
        for d in 2..=4 {
            for ell in 1..=d / 2 {
                let outer = build_outer_overlap(1, d, ell).unwrap();
                let shor = build_shor(d).unwrap();
                assert_eq!(outer.n, shor.n);
                assert!(outer
                    .symplectic_matrix()
                    .row_space_equals(&shor.symplectic_matrix()));
            }
        }
    }

    #[test]
    fn outer_overlap_parameters_and_counts() {
        let code = build_outer_overlap(2, 3, 1).unwrap();
        assert_eq!((code.n, code.k, code.claimed_distance), (15, 2, 3));

        let code = build_outer_overlap(2, 4, 2).unwrap();
        let z_count: usize = code.z_groups.iter().map(|g| g.generators.len()).sum();
        let x_count: usize = code.x_groups.iter().map(|g| g.generators.len()).sum();
        assert_eq!(z_count, 18); // (k(d-ell)+ell)(d-1)
        assert_eq!(x_count, 4); // k(d-ell-1)+ell
        assert!(code.weight_census().z.iter().all(|(&w, _)| w == 2));
    }

    #[test]
    fn inner_overlap_7_1_3_generators() {
        let code = build_inner_overlap(1, 3, 1).unwrap();
        assert_eq!((code.n, code.k), (7, 1));
        assert_eq!(strings(&code.x_groups[0]), vec!["X0X1X2X3", "X2X3X4X5"]);
        let z: Vec<String> = code.z_groups.iter().flat_map(strings).collect();
        assert_eq!(z, vec!["Z0Z1", "Z2Z3", "Z4Z5", "Z1Z3Z5Z6"]);
        let census = code.weight_census();
        assert_eq!(census.z, BTreeMap::from([(2, 3), (4, 1)]));
        assert_eq!(census.x, BTreeMap::from([(4, 2)]));
        assert_eq!(code.logical_x[0].canonical_string(), "X0X1X6");
        assert_eq!(code.logical_z[0].canonical_string(), "Z0Z2Z4");
    }

    #[test]
    fn inner_overlap_parameter_formula() {
        let code = build_inner_overlap(2, 3, 1).unwrap();
        assert_eq!((code.n, code.k), (13, 2));
        // one bridge of weight td+1 = 7, the remaining six of weight two
        let census = code.weight_census();
        assert_eq!(census.z, BTreeMap::from([(2, 6), (7, 1)]));
        assert_eq!(census.x, BTreeMap::from([(4, 4)]));
    }

    #[test]
    fn double_overlap_bridge_weight_depends_on_parity() {
        let even = build_double_overlap(2, 3, 1).unwrap();
        assert_eq!((even.n, even.k), (11, 2));
        let bridge = even
            .x_groups
            .iter()
            .find(|g| g.role == GroupRole::OuterBridge)
            .unwrap();
        assert_eq!(bridge.generators[0].weight(), 7); // (ko+1)(d-ell)+ell, ko even
        let census = even.weight_census();
        assert_eq!(census.x, BTreeMap::from([(4, 2), (7, 1)]));

        let odd = build_double_overlap(3, 3, 1).unwrap();
        let bridge = odd
            .x_groups
            .iter()
            .find(|g| g.role == GroupRole::OuterBridge)
            .unwrap();
        assert_eq!(bridge.generators[0].weight(), 8); // (ko+1)(d-ell), ko odd
    }

    #[test]
    fn double_overlap_reduces_at_ko_1() {
        let code = build_double_overlap(1, 3, 1).unwrap();
        assert_eq!((code.n, code.k), (7, 1)); // d(d-ell)+ell
    }

    #[test]
    fn predicted_parameters_match_built_codes() {
        let cases = vec![
            Construction::Shor { d: 3 },
            Construction::Shor { d: 5 },
            Construction::Outer { k: 2, d: 3, ell: 1 },
            Construction::Outer { k: 3, d: 4, ell: 2 },
            Construction::Inner { t: 1, d: 3, ell: 1 },
            Construction::Inner { t: 2, d: 4, ell: 2 },
            Construction::Double { ko: 2, d: 3, ell: 1 },
            Construction::Double { ko: 3, d: 5, ell: 2 },
        ];
        for c in cases {
            let (n, k, d) = predicted_parameters(&c).unwrap();
            let built = build(&c).unwrap();
            assert_eq!((built.n, built.k, built.claimed_distance), (n, k, d), "{c:?}");
            assert_eq!(built.generator_count(), built.n - built.k, "{c:?}");
        }
        assert_eq!(
            predicted_parameters(&Construction::Inner { t: 1, d: 3, ell: 1 }).unwrap(),
            (7, 1, 3)
        );
        assert_eq!(predicted_parameters(&Construction::Shor { d: 3 }).unwrap(), (9, 1, 3));
        assert_eq!(
            predicted_parameters(&Construction::Double { ko: 4, d: 5, ell: 2 }).unwrap(),
            (44, 4, 5)
        );
    }

    #[test]
    fn generator_count_formulas() {
        for d in 3..=5 {
            for ell in 1..=d / 2 {
                for m in 1..=3 {
                    let outer = build_outer_overlap(m, d, ell).unwrap();
                    let x: usize = outer.x_groups.iter().map(|g| g.generators.len()).sum();
                    let z: usize = outer.z_groups.iter().map(|g| g.generators.len()).sum();
                    assert_eq!(x, m * (d - ell - 1) + ell);
                    assert_eq!(z, (m * (d - ell) + ell) * (d - 1));

                    let inner = build_inner_overlap(m, d, ell).unwrap();
                    let x: usize = inner.x_groups.iter().map(|g| g.generators.len()).sum();
                    let z: usize = inner.z_groups.iter().map(|g| g.generators.len()).sum();
                    assert_eq!(x, m * (d - 1));
                    assert_eq!(z, m * d * (d - ell - 1) + ell);

                    let double = build_double_overlap(m, d, ell).unwrap();
                    let ki = m * (d - ell) + ell;
                    let x: usize = double.x_groups.iter().map(|g| g.generators.len()).sum();
                    let z: usize = double.z_groups.iter().map(|g| g.generators.len()).sum();
                    assert_eq!(x, m * (d - ell - 1) + ell);
                    assert_eq!(z, ki * (d - ell - 1) + ell);
                }
            }
        }
    }

    #[test]
    fn rates_and_ratios() {
        assert_eq!(
            asymptotic_rate(ConstructionTag::Outer, 4, 2).unwrap(),
            Ratio::new(1, 8)
        );
        assert_eq!(
            rate_ratio_vs_shor(ConstructionTag::Outer, 4, 2).unwrap(),
            Ratio::from_integer(2)
        );
        // odd d with ell = (d-1)/2: rate 2/(d(d+1))
        assert_eq!(
            asymptotic_rate(ConstructionTag::Outer, 5, 2).unwrap(),
            Ratio::new(2, 30)
        );
        assert_eq!(
            asymptotic_rate(ConstructionTag::Double, 4, 2).unwrap(),
            Ratio::new(1, 4)
        );
        assert_eq!(
            rate_ratio_vs_shor(ConstructionTag::Double, 4, 2).unwrap(),
            Ratio::from_integer(4)
        );
        assert_eq!(
            asymptotic_rate(ConstructionTag::Inner, 4, 2).unwrap(),
            asymptotic_rate(ConstructionTag::Outer, 4, 2).unwrap()
        );
        assert!(asymptotic_rate(ConstructionTag::Outer, 3, 2).is_err());
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(build_shor(1).is_err());
        assert!(build_outer_overlap(0, 3, 1).is_err());
        assert!(build_inner_overlap(0, 3, 1).is_err());
        assert!(build_double_overlap(2, 3, 2).is_err());
    }
}
