//! Independent brute-force verification of stabilizer codes.
//!
//! Nothing here trusts the builders: validity is checked pairwise, the
//! distance is found by enumerating Pauli operators in increasing weight,
//! and error classification reduces against an echelonized span of the
//! generators. Claimed distances are confirmed or refuted, never assumed.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::builder::StabilizerCode;
use crate::gf2::{BitVec, Gf2Span};
use crate::pauli::{for_each_pauli_of_weight, pauli_count, PauliOperator};
use crate::{Error, Result};

/// Enumeration budget for exhaustive searches: sum over w of C(n,w) * 3^w
/// elementary checks. Keeps every verification run at desk scale.
pub const ENUMERATION_BUDGET: u128 = 1_000_000_000;

/// Total enumeration cost of searching weights 1..=w_max on n qubits.
pub fn enumeration_cost(n: usize, w_max: usize) -> u128 {
    (1..=w_max).map(|w| pauli_count(n, w)).sum()
}

fn check_budget(n: usize, w_max: usize) -> Result<()> {
    let cost = enumeration_cost(n, w_max);
    if cost > ENUMERATION_BUDGET {
        return Err(Error::Capacity(format!(
            "enumerating weights 1..={w_max} on {n} qubits costs {cost} elementary checks, \
             over the budget of {ENUMERATION_BUDGET}"
        )));
    }
    Ok(())
}

/// Reusable classification context: the echelonized generator span plus the
/// logical representatives of a code.
pub struct Classifier<'a> {
    code: &'a StabilizerCode,
    span: Gf2Span,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Identity,
    Stabilizer,
    Detectable,
    Logical,
}

#[derive(Clone, Debug)]
pub struct ErrorClass {
    pub classification: Classification,
    pub syndrome: BitVec,
    /// Commutation bits against the 2k stored representatives, ordered
    /// logical X first then logical Z. Well defined for any operator given
    /// fixed representatives; for syndrome-free operators it identifies the
    /// logical action.
    pub logical_action: BitVec,
}

impl<'a> Classifier<'a> {
    pub fn new(code: &'a StabilizerCode) -> Self {
        let span = Gf2Span::from_rows(
            2 * code.n,
            code.symplectic_matrix().rows().iter(),
        );
        Classifier { code, span }
    }

    pub fn syndrome_bits(&self, e: &PauliOperator) -> Result<BitVec> {
        if e.n() != self.code.n {
            return Err(Error::DimensionMismatch(format!(
                "operator on {} qubits against a code on {} qubits",
                e.n(),
                self.code.n
            )));
        }
        let mut bits = BitVec::zeros(self.code.generator_count());
        for (i, g) in self.code.generators().enumerate() {
            if !e.commutes(g)? {
                bits.set(i, true);
            }
        }
        Ok(bits)
    }

    pub fn logical_action(&self, e: &PauliOperator) -> Result<BitVec> {
        let mut bits = BitVec::zeros(2 * self.code.k);
        for (i, l) in self
            .code
            .logical_x
            .iter()
            .chain(self.code.logical_z.iter())
            .enumerate()
        {
            if !e.commutes(l)? {
                bits.set(i, true);
            }
        }
        Ok(bits)
    }

    pub fn in_stabilizer_span(&self, e: &PauliOperator) -> bool {
        self.span.contains(&e.symplectic_row())
    }

    pub fn classify(&self, e: &PauliOperator) -> Result<ErrorClass> {
        let syndrome = self.syndrome_bits(e)?;
        let logical_action = self.logical_action(e)?;
        let classification = if !syndrome.is_zero() {
            Classification::Detectable
        } else if e.is_identity() {
            Classification::Identity
        } else if self.in_stabilizer_span(e) {
            Classification::Stabilizer
        } else {
            Classification::Logical
        };
        Ok(ErrorClass { classification, syndrome, logical_action })
    }
}

/// Classification of a single operator against a code.
pub fn classify_error(code: &StabilizerCode, e: &PauliOperator) -> Result<ErrorClass> {
    Classifier::new(code).classify(e)
}

#[derive(Clone, Debug)]
pub struct ValidityReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

/// Checks that generators pairwise commute and are independent, and that the
/// logical representatives commute with every generator, lie outside the
/// stabilizer span, and satisfy the symplectic pairing contract.
pub fn check_valid(code: &StabilizerCode) -> ValidityReport {
    let mut violations = Vec::new();
    let gens: Vec<&PauliOperator> = code.generators().collect();

    for g in &gens {
        if g.n() != code.n {
            violations.push(format!(
                "generator {} acts on {} qubits, code has {}",
                g,
                g.n(),
                code.n
            ));
        }
    }
    if violations.is_empty() {
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if !gens[i].commutes(gens[j]).unwrap_or(false) {
                    violations.push(format!(
                        "generators g{i} = {} and g{j} = {} anticommute",
                        gens[i], gens[j]
                    ));
                }
            }
        }
        let mut span = Gf2Span::new(2 * code.n);
        for (i, g) in gens.iter().enumerate() {
            if !span.insert(&g.symplectic_row()) {
                violations.push(format!("generator g{i} = {} is dependent on earlier rows", gens[i]));
            }
        }
        if gens.len() != code.n - code.k {
            violations.push(format!(
                "generator count {} differs from n - k = {}",
                gens.len(),
                code.n - code.k
            ));
        }
        if code.logical_x.len() != code.k || code.logical_z.len() != code.k {
            violations.push(format!(
                "expected {} logical X and Z representatives, found {} and {}",
                code.k,
                code.logical_x.len(),
                code.logical_z.len()
            ));
        } else {
            for (name, ops) in [("logical_x", &code.logical_x), ("logical_z", &code.logical_z)] {
                for (i, l) in ops.iter().enumerate() {
                    for (j, g) in gens.iter().enumerate() {
                        if !l.commutes(g).unwrap_or(false) {
                            violations.push(format!(
                                "{name}[{i}] = {l} anticommutes with generator g{j} = {g}"
                            ));
                        }
                    }
                    if span.contains(&l.symplectic_row()) {
                        violations.push(format!("{name}[{i}] = {l} lies in the stabilizer span"));
                    }
                }
            }
            for i in 0..code.k {
                for j in 0..code.k {
                    let commutes = code.logical_x[i]
                        .commutes(&code.logical_z[j])
                        .unwrap_or(true);
                    if i == j && commutes {
                        violations.push(format!(
                            "logical_x[{i}] = {} commutes with logical_z[{i}] = {}",
                            code.logical_x[i], code.logical_z[i]
                        ));
                    }
                    if i != j && !commutes {
                        violations.push(format!(
                            "logical_x[{i}] = {} anticommutes with logical_z[{j}] = {}",
                            code.logical_x[i], code.logical_z[j]
                        ));
                    }
                    if i != j
                        && !code.logical_x[i]
                            .commutes(&code.logical_x[j])
                            .unwrap_or(true)
                    {
                        violations.push(format!("logical_x[{i}] anticommutes with logical_x[{j}]"));
                    }
                }
            }
        }
    }

    ValidityReport { valid: violations.is_empty(), violations }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Refuted,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub enum ComputedDistance {
    /// Minimum weight of an undetectable operator outside the stabilizer
    /// group, together with the smallest such witness in canonical order.
    Found(usize),
    /// No witness up to the search cap.
    GreaterThan(usize),
}

#[derive(Clone, Debug)]
pub struct DistanceReport {
    pub computed: ComputedDistance,
    pub claimed_distance: usize,
    pub verdict: Verdict,
    pub witness: Option<PauliOperator>,
}

/// Exhaustive minimum-distance search up to `w_max`.
///
/// Scans weights in increasing order; at each weight every candidate that
/// commutes with all generators and lies outside their span is a witness, and
/// the canonically smallest one is reported. For CSS codes only pure-X and
/// pure-Z candidates are scanned (the minimum is attained on a pure sector:
/// the halves of a mixed undetectable operator are themselves undetectable,
/// no heavier, and at least one lies outside the span whenever the mixed
/// operator does).
///
/// Verdict semantics: `refuted` means a witness strictly below the claimed
/// distance exists; `confirmed` means the search covered every weight below
/// the claim and found nothing there (the claim holds as a lower bound, with
/// equality whenever a witness at the claim itself was found); `inconclusive`
/// means the cap was too small to decide.
pub fn compute_distance(code: &StabilizerCode, w_max: usize) -> Result<DistanceReport> {
    check_budget(code.n, w_max)?;
    let classifier = Classifier::new(code);
    let css = code.is_css();

    let mut found: Option<(usize, PauliOperator)> = None;
    for w in 1..=w_max {
        let mut best: Option<PauliOperator> = None;
        let mut consider = |op: &PauliOperator| {
            let syndrome_free = code
                .generators()
                .all(|g| op.commutes(g).expect("equal widths"));
            if syndrome_free && !classifier.in_stabilizer_span(op) {
                let smaller = match &best {
                    None => true,
                    Some(b) => op.cmp_canonical(b).is_lt(),
                };
                if smaller {
                    best = Some(op.clone());
                }
            }
        };
        if css {
            for_each_pure_pattern_of_weight(code.n, w, true, &mut consider);
            for_each_pure_pattern_of_weight(code.n, w, false, &mut consider);
        } else {
            for_each_pauli_of_weight(code.n, w, &mut consider);
        }
        if let Some(witness) = best {
            found = Some((w, witness));
            break;
        }
    }

    let report = match found {
        Some((w, witness)) => {
            let verdict = if w < code.claimed_distance {
                Verdict::Refuted
            } else {
                Verdict::Confirmed
            };
            DistanceReport {
                computed: ComputedDistance::Found(w),
                claimed_distance: code.claimed_distance,
                verdict,
                witness: Some(witness),
            }
        }
        None => {
            let verdict = if w_max >= code.claimed_distance {
                // every weight below (and at) the claim was covered
                Verdict::Confirmed
            } else {
                Verdict::Inconclusive
            };
            DistanceReport {
                computed: ComputedDistance::GreaterThan(w_max),
                claimed_distance: code.claimed_distance,
                verdict,
                witness: None,
            }
        }
    };
    Ok(report)
}

/// Pure-X (or pure-Z) operators of weight w: one per support combination.
fn for_each_pure_pattern_of_weight<F: FnMut(&PauliOperator)>(
    n: usize,
    w: usize,
    x_sector: bool,
    f: &mut F,
) {
    if w == 0 || w > n {
        return;
    }
    let mut support: Vec<usize> = (0..w).collect();
    loop {
        let op = if x_sector {
            PauliOperator::x_on(n, &support)
        } else {
            PauliOperator::z_on(n, &support)
        };
        f(&op);
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
            return;
        }
    }
}

#[derive(Clone, Debug)]
pub struct DegeneracyClass {
    pub syndrome: BitVec,
    pub logical_action: BitVec,
    pub members: Vec<PauliOperator>,
}

/// Partition of all weight-w operators by (syndrome, logical action): two
/// errors in one class differ by a stabilizer and are interchangeable for
/// decoding. Classes are ordered by key, members canonically.
pub fn degeneracy_classes(code: &StabilizerCode, w: usize) -> Result<Vec<DegeneracyClass>> {
    check_budget(code.n, w)?;
    let classifier = Classifier::new(code);
    let mut classes: BTreeMap<(BitVec, BitVec), Vec<PauliOperator>> = BTreeMap::new();
    let mut failure: Option<Error> = None;
    for_each_pauli_of_weight(code.n, w, |op| {
        if failure.is_some() {
            return;
        }
        match (classifier.syndrome_bits(op), classifier.logical_action(op)) {
            (Ok(s), Ok(a)) => classes.entry((s, a)).or_default().push(op.clone()),
            (Err(e), _) | (_, Err(e)) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(classes
        .into_iter()
        .map(|((syndrome, logical_action), mut members)| {
            members.sort_by(|a, b| a.cmp_canonical(b));
            DegeneracyClass { syndrome, logical_action, members }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::{
        build_double_overlap, build_inner_overlap, build_outer_overlap, build_shor,
        StabilizerGroup,
    };

    fn p(s: &str, n: usize) -> PauliOperator {
        PauliOperator::parse(s, n).unwrap()
    }

    #[test]
    fn built_codes_are_valid() {
        for code in [
            build_shor(3).unwrap(),
            build_shor(4).unwrap(),
            build_outer_overlap(2, 3, 1).unwrap(),
            build_outer_overlap(3, 4, 2).unwrap(),
            build_inner_overlap(1, 3, 1).unwrap(),
            build_inner_overlap(2, 4, 2).unwrap(),
            build_double_overlap(2, 3, 1).unwrap(),
            build_double_overlap(3, 4, 2).unwrap(),
            build_double_overlap(2, 5, 2).unwrap(),
        ] {
            let report = check_valid(&code);
            assert!(report.valid, "{:?}: {:?}", code.construction, report.violations);
        }
    }

    #[test]
    fn anticommuting_generators_are_named() {
        let mut code = build_shor(2).unwrap();
        code.x_groups.push(StabilizerGroup {
            label: "broken".into(),
            role: crate::builder::GroupRole::OuterPair,
            generators: vec![p("Z0", 4)],
        });
        code.k = 0; // keep the count bookkeeping quiet; commutation must trip first
        let report = check_valid(&code);
        assert!(!report.valid);
        assert!(report.violations.iter().any(|v| v.contains("anticommute")));
    }

    #[test]
    fn classify_shor_examples() {
        let code = build_shor(3).unwrap();
        let stab = classify_error(&code, &p("Z0Z1", 9)).unwrap();
        assert_eq!(stab.classification, Classification::Stabilizer);

        let det = classify_error(&code, &p("Z1", 9)).unwrap();
        assert_eq!(det.classification, Classification::Detectable);
        assert_eq!(det.syndrome.bit_string(), "11000000");

        let logical = classify_error(&code, &p("Z0Z3Z6", 9)).unwrap();
        assert_eq!(logical.classification, Classification::Logical);
        assert!(logical.syndrome.is_zero());
        // anticommutes with logical X = X0X1X2
        assert!(logical.logical_action.get(0));

        let id = classify_error(&code, &PauliOperator::identity(9)).unwrap();
        assert_eq!(id.classification, Classification::Identity);
    }

    #[test]
    fn classify_rejects_dimension_mismatch() {
        let code = build_shor(3).unwrap();
        assert!(classify_error(&code, &p("X0", 4)).is_err());
    }

    #[test]
    fn shor_3_distance_confirmed_with_witness() {
        let code = build_shor(3).unwrap();
        let report = compute_distance(&code, 3).unwrap();
        assert!(matches!(report.computed, ComputedDistance::Found(3)));
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert_eq!(report.witness.unwrap().canonical_string(), "X0X1X2");
    }

    #[test]
    fn small_budget_is_inconclusive() {
        let code = build_shor(3).unwrap();
        let report = compute_distance(&code, 2).unwrap();
        assert!(matches!(report.computed, ComputedDistance::GreaterThan(2)));
        assert_eq!(report.verdict, Verdict::Inconclusive);
        assert!(report.witness.is_none());
    }

    #[test]
    fn outer_overlap_2_3_1_distance_confirmed() {
        let code = build_outer_overlap(2, 3, 1).unwrap();
        let report = compute_distance(&code, 3).unwrap();
        assert!(matches!(report.computed, ComputedDistance::Found(3)));
        assert_eq!(report.verdict, Verdict::Confirmed);
    }

    #[test]
    fn inner_overlap_claim_is_refuted_by_a_shared_qubit_z() {
        let code = build_inner_overlap(1, 3, 1).unwrap();
        let report = compute_distance(&code, 3).unwrap();
        assert!(matches!(report.computed, ComputedDistance::Found(1)));
        assert_eq!(report.verdict, Verdict::Refuted);
        let witness = report.witness.unwrap();
        assert_eq!(witness.canonical_string(), "Z6");
        // the witness must commute with everything, sit outside the span,
        // and weigh less than the claim
        let class = classify_error(&code, &witness).unwrap();
        assert_eq!(class.classification, Classification::Logical);
        assert!(witness.weight() < code.claimed_distance);
    }

    #[test]
    fn double_overlap_2_3_1_claim_is_refuted_at_weight_two() {
        let code = build_double_overlap(2, 3, 1).unwrap();
        let report = compute_distance(&code, 3).unwrap();
        assert!(matches!(report.computed, ComputedDistance::Found(2)));
        assert_eq!(report.verdict, Verdict::Refuted);
        assert_eq!(report.witness.unwrap().canonical_string(), "Z8Z10");
    }

    #[test]
    fn budget_refusal_names_the_cap() {
        let code = build_outer_overlap(4, 5, 1).unwrap(); // n = 85
        let err = compute_distance(&code, 6).unwrap_err();
        match err {
            Error::Capacity(msg) => assert!(msg.contains("budget")),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn z_pair_row_lies_in_the_z_generator_span() {
        // row-reduce the six Z-generator symplectic rows of the [[9,1,3]]
        // code and test membership of the Z0Z1 row
        let code = build_shor(3).unwrap();
        let mut m = crate::gf2::BinaryMatrix::new(18);
        for g in code.z_groups.iter().flat_map(|g| g.generators.iter()) {
            m.push_row(g.symplectic_row()).unwrap();
        }
        assert_eq!(m.row_count(), 6);
        let z0z1 = p("Z0Z1", 9).symplectic_row();
        assert!(m.in_span(&z0z1).unwrap());
        let z0 = p("Z0", 9).symplectic_row();
        assert!(!m.in_span(&z0).unwrap());
    }

    #[test]
    fn outer_codes_have_no_light_pure_sector_logicals() {
        // X-only and Z-only sector search below d finds nothing for the
        // outer family at small parameters
        for k in 1..=2usize {
            for d in 2..=4usize {
                for ell in 1..=(d / 2).min(2) {
                    let code = build_outer_overlap(k, d, ell).unwrap();
                    if code.n > 24 {
                        continue;
                    }
                    assert!(code.is_css());
                    if d > 1 {
                        let report = compute_distance(&code, d - 1).unwrap();
                        assert!(
                            matches!(report.computed, ComputedDistance::GreaterThan(_)),
                            "light logical in outer({k},{d},{ell})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn degeneracy_classes_of_shor_3() {
        let code = build_shor(3).unwrap();
        let classes = degeneracy_classes(&code, 1).unwrap();
        // Z errors collapse into 3 classes of 3; X and Y errors stay singletons.
        let z_classes: Vec<&DegeneracyClass> = classes
            .iter()
            .filter(|c| c.members[0].canonical_string().starts_with('Z'))
            .collect();
        assert_eq!(z_classes.len(), 3);
        for c in &z_classes {
            assert_eq!(c.members.len(), 3);
        }
        let singletons = classes.iter().filter(|c| c.members.len() == 1).count();
        assert_eq!(singletons, 18); // 9 X + 9 Y
        assert_eq!(classes.len(), 21);

        let identity_classes = degeneracy_classes(&code, 0).unwrap();
        assert_eq!(identity_classes.len(), 1);
        assert!(identity_classes[0].members[0].is_identity());
    }

    #[test]
    fn stabilizer_products_classify_as_stabilizers() {
        let code = build_inner_overlap(1, 3, 1).unwrap();
        let gens: Vec<PauliOperator> = code.generators().cloned().collect();
        // fuzz over subsets via a small counter
        for mask in 1u32..(1 << gens.len()) {
            if mask.count_ones() > 3 && mask % 7 != 0 {
                continue; // thin the sweep, keep it quick
            }
            let mut prod = PauliOperator::identity(code.n);
            for (i, g) in gens.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    prod = prod.product(g).unwrap();
                }
            }
            let class = classify_error(&code, &prod).unwrap();
            assert!(matches!(
                class.classification,
                Classification::Stabilizer | Classification::Identity
            ));
        }
    }

    #[test]
    fn classification_is_stable_under_stabilizer_multiplication() {
        let code = build_shor(3).unwrap();
        let classifier = Classifier::new(&code);
        let g = p("Z0Z1", 9);
        for e in [p("X4", 9), p("Z0Z3Z6", 9), p("Y2X7", 9)] {
            let shifted = e.product(&g).unwrap();
            assert_eq!(
                classifier.syndrome_bits(&e).unwrap(),
                classifier.syndrome_bits(&shifted).unwrap()
            );
            assert_eq!(
                classifier.logical_action(&e).unwrap(),
                classifier.logical_action(&shifted).unwrap()
            );
        }
    }
}
