//! Syndrome extraction and decoding.
//!
//! Two decoders share one interface: [`LookupDecoder`] stores the exhaustive
//! minimal-weight table up to a weight cap, and [`GroupedDecoder`] keeps one
//! small sub-table per generator group plus a two-entry bridge rule, so its
//! total rule count is a sum of per-group table sizes instead of 2^(n-k).
//!
//! All ties are broken by minimal weight first, then canonical operator
//! order, so both decoders are deterministic.

use std::collections::HashMap;

use crate::builder::{self, Construction, StabilizerCode};
use crate::classical::OverlapLayout;
use crate::gf2::BitVec;
use crate::pauli::{for_each_pauli_of_weight, PauliOperator};
use crate::verifier::{enumeration_cost, Classifier, Classification, ENUMERATION_BUDGET};
use crate::{Error, Result};

/// Anticommutation indicators against the code's generators, in export order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syndrome {
    bits: BitVec,
}

impl Syndrome {
    pub fn new(bits: BitVec) -> Self {
        Syndrome { bits }
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn bit_string(&self) -> String {
        self.bits.bit_string()
    }
}

/// Syndrome of `e`: bit i set iff `e` anticommutes with generator i.
pub fn extract_syndrome(code: &StabilizerCode, e: &PauliOperator) -> Result<Syndrome> {
    if e.n() != code.n {
        return Err(Error::DimensionMismatch(format!(
            "operator on {} qubits against a code on {} qubits",
            e.n(),
            code.n
        )));
    }
    let mut bits = BitVec::zeros(code.generator_count());
    for (i, g) in code.generators().enumerate() {
        if !e.commutes(g)? {
            bits.set(i, true);
        }
    }
    Ok(Syndrome { bits })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome {
    NoError,
    Correction(PauliOperator),
    /// The syndrome is flagged but no correction is known: a detection
    /// outcome, useful under retransmission but not forward-correctable.
    DetectedUnrecoverable,
}

pub trait Decoder {
    fn decode(&self, s: &Syndrome) -> Result<DecodeOutcome>;
    fn syndrome_len(&self) -> usize;
    fn descriptor(&self) -> String;
}

fn check_syndrome_len(expected: usize, s: &Syndrome) -> Result<()> {
    if s.len() != expected {
        return Err(Error::DimensionMismatch(format!(
            "syndrome of length {} against a decoder expecting {}",
            s.len(),
            expected
        )));
    }
    Ok(())
}

/// Exhaustive minimal-weight lookup table over errors of weight <= w_max.
#[derive(Clone, Debug)]
pub struct LookupDecoder {
    pub w_max: usize,
    syndrome_len: usize,
    table: HashMap<BitVec, PauliOperator>,
}

impl LookupDecoder {
    pub fn entry_count(&self) -> usize {
        self.table.len()
    }

    pub fn correction_for(&self, s: &Syndrome) -> Option<&PauliOperator> {
        self.table.get(&s.bits)
    }

    /// Table entries sorted by syndrome bit string.
    pub fn entries(&self) -> Vec<(Syndrome, PauliOperator)> {
        let mut rows: Vec<(Syndrome, PauliOperator)> = self
            .table
            .iter()
            .map(|(s, c)| (Syndrome::new(s.clone()), c.clone()))
            .collect();
        rows.sort_by(|a, b| a.0.bits.cmp(&b.0.bits));
        rows
    }
}

/// Builds the lookup table: for each syndrome reachable by weight <= w_max,
/// the minimal-weight error producing it, canonical order breaking ties.
pub fn build_lookup(code: &StabilizerCode, w_max: usize) -> Result<LookupDecoder> {
    let cost = enumeration_cost(code.n, w_max);
    if cost > ENUMERATION_BUDGET {
        return Err(Error::Capacity(format!(
            "lookup build enumerates {cost} errors, over the budget of {ENUMERATION_BUDGET}"
        )));
    }
    let mut table: HashMap<BitVec, PauliOperator> = HashMap::new();
    let mut failure: Option<Error> = None;
    for w in 0..=w_max {
        for_each_pauli_of_weight(code.n, w, |op| {
            if failure.is_some() {
                return;
            }
            match extract_syndrome(code, op) {
                Ok(s) => {
                    // weights ascend, so an existing entry can only be beaten
                    // canonically at equal weight
                    let replace = match table.get(&s.bits) {
                        Some(existing) => {
                            existing.weight() == w && existing.cmp_canonical(op).is_gt()
                        }
                        None => true,
                    };
                    if replace {
                        table.insert(s.bits, op.clone());
                    }
                }
                Err(e) => failure = Some(e),
            }
        });
    }
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(LookupDecoder { w_max, syndrome_len: code.generator_count(), table })
}

impl Decoder for LookupDecoder {
    fn decode(&self, s: &Syndrome) -> Result<DecodeOutcome> {
        check_syndrome_len(self.syndrome_len, s)?;
        if s.is_zero() {
            return Ok(DecodeOutcome::NoError);
        }
        match self.table.get(&s.bits) {
            Some(c) => Ok(DecodeOutcome::Correction(c.clone())),
            None => Ok(DecodeOutcome::DetectedUnrecoverable),
        }
    }

    fn syndrome_len(&self) -> usize {
        self.syndrome_len
    }

    fn descriptor(&self) -> String {
        format!("lookup(wmax={})", self.w_max)
    }
}

/// How a group's sub-syndrome determines a cell pattern up to one free bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum GroupStructure {
    /// Bit i sits between cells i and i+1: adjacent-pair checks.
    Chain,
    /// Bit i compares cell 0 with cell i+1: the block-0-versus-block-j
    /// X generators of the plain Shor code.
    Star,
}

/// One selectable cell: a single-qubit correction fragment.
#[derive(Clone, Debug)]
struct Cell {
    fragment: PauliOperator,
    in_bridge: bool,
}

/// One of the two cell patterns consistent with a sub-syndrome.
#[derive(Clone, Debug)]
struct Candidate {
    mask: u64,
    weight: u32,
    bridge_parity: bool,
}

#[derive(Clone, Debug)]
struct DecodeGroup {
    label: String,
    /// Global syndrome bit indices in the group's internal order.
    bit_indices: Vec<usize>,
    cells: Vec<Cell>,
    /// Indexed by sub-syndrome value: (minimal candidate, alternate).
    table: Vec<(Candidate, Candidate)>,
}

impl DecodeGroup {
    fn build(
        label: String,
        structure: GroupStructure,
        bit_indices: Vec<usize>,
        cells: Vec<Cell>,
    ) -> Result<Self> {
        if cells.len() > 64 {
            return Err(Error::Capacity(format!(
                "decode group {label} has {} cells, over the 64-cell cap",
                cells.len()
            )));
        }
        let bits = bit_indices.len();
        assert_eq!(bits + 1, cells.len(), "one fewer bit than cells in {label}");
        let mut table = Vec::with_capacity(1 << bits);
        for sub in 0u64..1 << bits {
            let candidate = |a: bool| -> Candidate {
                let mut mask = 0u64;
                let mut prev = a;
                for (i, _) in cells.iter().enumerate() {
                    let selected = if i == 0 {
                        a
                    } else {
                        let bit = sub >> (i - 1) & 1 == 1;
                        match structure {
                            GroupStructure::Chain => prev ^ bit,
                            GroupStructure::Star => a ^ bit,
                        }
                    };
                    prev = selected;
                    if selected {
                        mask |= 1 << i;
                    }
                }
                let weight = mask.count_ones();
                let bridge_parity = cells
                    .iter()
                    .enumerate()
                    .filter(|(i, c)| mask >> i & 1 == 1 && c.in_bridge)
                    .count()
                    % 2
                    == 1;
                Candidate { mask, weight, bridge_parity }
            };
            let c0 = candidate(false);
            let c1 = candidate(true);
            let pick_c0 = match c0.weight.cmp(&c1.weight) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    let f0 = compose_fragment(&cells, c0.mask);
                    let f1 = compose_fragment(&cells, c1.mask);
                    f0.cmp_canonical(&f1).is_le()
                }
            };
            table.push(if pick_c0 { (c0, c1) } else { (c1, c0) });
        }
        Ok(DecodeGroup { label, bit_indices, cells, table })
    }

    fn sub_syndrome(&self, s: &Syndrome) -> u64 {
        let mut sub = 0u64;
        for (i, &bit) in self.bit_indices.iter().enumerate() {
            if s.bits.get(bit) {
                sub |= 1 << i;
            }
        }
        sub
    }

    fn entry_count(&self) -> u128 {
        self.table.len() as u128
    }
}

fn compose_fragment(cells: &[Cell], mask: u64) -> PauliOperator {
    let n = cells[0].fragment.n();
    let mut op = PauliOperator::identity(n);
    for (i, cell) in cells.iter().enumerate() {
        if mask >> i & 1 == 1 {
            op = op.product(&cell.fragment).expect("uniform width");
        }
    }
    op
}

/// The groups decoding one CSS error sector, with an optional bridge bit
/// reconciled across them.
#[derive(Clone, Debug)]
struct Sector {
    groups: Vec<DecodeGroup>,
    bridge_bit: Option<usize>,
}

impl Sector {
    fn decode(&self, s: &Syndrome) -> PauliOperator {
        let mut picks: Vec<&Candidate> = Vec::with_capacity(self.groups.len());
        let mut subs: Vec<u64> = Vec::with_capacity(self.groups.len());
        for g in &self.groups {
            let sub = g.sub_syndrome(s);
            subs.push(sub);
            picks.push(&g.table[sub as usize].0);
        }
        if let Some(bit) = self.bridge_bit {
            let parity = picks.iter().fold(false, |acc, c| acc ^ c.bridge_parity);
            if parity != s.bits.get(bit) {
                // Flip exactly one group to its alternate pattern; every group
                // meets the bridge in one cell, so any flip toggles the bit.
                // Pick the cheapest flip, canonical order breaking ties.
                let mut best: Option<(u32, PauliOperator, usize)> = None;
                for (gi, g) in self.groups.iter().enumerate() {
                    let alt = &g.table[subs[gi] as usize].1;
                    let delta = alt.weight - picks[gi].weight;
                    let total = self.compose(&picks, Some((gi, alt)));
                    let better = match &best {
                        None => true,
                        Some((bd, bt, _)) => {
                            delta < *bd || (delta == *bd && total.cmp_canonical(bt).is_lt())
                        }
                    };
                    if better {
                        best = Some((delta, total, gi));
                    }
                }
                let (_, _, gi) = best.expect("sector has at least one group");
                picks[gi] = &self.groups[gi].table[subs[gi] as usize].1;
            }
        }
        self.compose(&picks, None)
    }

    fn compose(&self, picks: &[&Candidate], flip: Option<(usize, &Candidate)>) -> PauliOperator {
        let n = self.groups[0].cells[0].fragment.n();
        let mut op = PauliOperator::identity(n);
        for (gi, g) in self.groups.iter().enumerate() {
            let pick = match flip {
                Some((f, alt)) if f == gi => alt,
                _ => picks[gi],
            };
            op = op
                .product(&compose_fragment(&g.cells, pick.mask))
                .expect("uniform width");
        }
        op
    }

    fn rule_count(&self) -> u128 {
        let groups: u128 = self.groups.iter().map(|g| g.entry_count()).sum();
        groups + if self.bridge_bit.is_some() { 2 } else { 0 }
    }
}

/// Rule-based decoder over per-group sub-tables.
///
/// The X-error sector is read off the Z generator groups, the Z-error sector
/// off the X generator groups; each sector resolves its bridge bit (when the
/// construction has one) by the minimum-total-weight consistent assignment.
#[derive(Clone, Debug)]
pub struct GroupedDecoder {
    construction: Construction,
    syndrome_len: usize,
    x_error_sector: Sector,
    z_error_sector: Sector,
}

impl GroupedDecoder {
    /// Total pieces of information: the sum of per-group sub-table sizes plus
    /// two entries per bridge.
    pub fn rule_count(&self) -> u128 {
        self.x_error_sector.rule_count() + self.z_error_sector.rule_count()
    }

    /// Sub-table sizes by group label, in syndrome order.
    pub fn sub_table_sizes(&self) -> Vec<(String, u128)> {
        let mut out = Vec::new();
        for sector in [&self.z_error_sector, &self.x_error_sector] {
            for g in &sector.groups {
                out.push((g.label.clone(), g.entry_count()));
            }
            if sector.bridge_bit.is_some() {
                out.push(("bridge".into(), 2));
            }
        }
        out
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }
}

impl Decoder for GroupedDecoder {
    fn decode(&self, s: &Syndrome) -> Result<DecodeOutcome> {
        check_syndrome_len(self.syndrome_len, s)?;
        if s.is_zero() {
            return Ok(DecodeOutcome::NoError);
        }
        let x_part = self.x_error_sector.decode(s);
        let z_part = self.z_error_sector.decode(s);
        Ok(DecodeOutcome::Correction(x_part.product(&z_part)?))
    }

    fn syndrome_len(&self) -> usize {
        self.syndrome_len
    }

    fn descriptor(&self) -> String {
        "grouped".into()
    }
}

/// Builds the grouped decoder for a code produced by this crate's builders.
///
/// The group layout is rederived from the construction record and checked
/// generator-by-generator against the code, so a code without construction
/// metadata (or with tampered generators) is rejected.
pub fn build_grouped(code: &StabilizerCode) -> Result<GroupedDecoder> {
    let construction = code.construction.ok_or_else(|| {
        Error::UnsupportedCode(
            "grouped decoding needs construction metadata; this code has none".into(),
        )
    })?;
    let reference = builder::build(&construction)?;
    let matches = reference.n == code.n
        && reference.k == code.k
        && reference.generator_count() == code.generator_count()
        && reference.generators().zip(code.generators()).all(|(a, b)| a == b);
    if !matches {
        return Err(Error::UnsupportedCode(format!(
            "generators do not match the {} construction they claim",
            construction.tag()
        )));
    }

    let n = code.n;
    let x_fragment = |q: usize| PauliOperator::single(n, q, crate::pauli::PauliKind::X).unwrap();
    let z_fragment = |q: usize| PauliOperator::single(n, q, crate::pauli::PauliKind::Z).unwrap();

    // Chain groups over the physical blocks of the block-lifted family.
    let block_chains = |bit_base: usize, blocks: usize, d: usize| -> Result<Sector> {
        let mut groups = Vec::new();
        for b in 0..blocks {
            let cells = (b * d..(b + 1) * d)
                .map(|q| Cell { fragment: x_fragment(q), in_bridge: false })
                .collect();
            let bits = (bit_base + b * (d - 1)..bit_base + (b + 1) * (d - 1)).collect();
            groups.push(DecodeGroup::build(
                format!("inner-{b}"),
                GroupStructure::Chain,
                bits,
                cells,
            )?);
        }
        Ok(Sector { groups, bridge_bit: None })
    };

    // Chains + shared chain + bridge over an overlapped layout, generic over
    // what a cell index means (physical qubit or classical position).
    let overlapped_sector = |layout: &OverlapLayout,
                             bit_base: usize,
                             label: &str,
                             cell: &dyn Fn(usize) -> Cell|
     -> Result<Sector> {
        let s = layout.block_size();
        let mut groups = Vec::new();
        let mut bit = bit_base;
        for i in 0..layout.k {
            let range = layout.unshared_range(i);
            let cells = range.map(&cell).collect();
            let bits = (bit..bit + s - 1).collect();
            bit += s - 1;
            groups.push(DecodeGroup::build(
                format!("{label}-unshared-{i}"),
                GroupStructure::Chain,
                bits,
                cells,
            )?);
        }
        let cells = layout.shared_range().map(&cell).collect();
        let bits = (bit..bit + layout.ell - 1).collect();
        bit += layout.ell - 1;
        groups.push(DecodeGroup::build(
            format!("{label}-shared"),
            GroupStructure::Chain,
            bits,
            cells,
        )?);
        Ok(Sector { groups, bridge_bit: Some(bit) })
    };

    let (z_error_sector, x_error_sector) = match construction {
        Construction::Shor { d } => {
            let hub_cells: Vec<Cell> = (0..d)
                .map(|b| Cell { fragment: z_fragment(b * d), in_bridge: false })
                .collect();
            let star = DecodeGroup::build(
                "outer".into(),
                GroupStructure::Star,
                (0..d - 1).collect(),
                hub_cells,
            )?;
            let z_sector = Sector { groups: vec![star], bridge_bit: None };
            (z_sector, block_chains(d - 1, d, d)?)
        }
        Construction::Outer { k, d, ell } => {
            let layout = OverlapLayout::new(k, d, ell)?;
            let bridge_row = outer_bridge_cells(&layout);
            let cell = |pos: usize| Cell {
                fragment: z_fragment(pos * d),
                in_bridge: bridge_row.contains(&pos),
            };
            let z_sector = overlapped_sector(&layout, 0, "outer", &cell)?;
            let x_bits = k * (d - ell - 1) + ell;
            (z_sector, block_chains(x_bits, layout.len(), d)?)
        }
        Construction::Inner { t, d, ell } => {
            let layout = OverlapLayout::new(t * d, d, ell)?;
            let s = layout.block_size();
            let mut groups = Vec::new();
            for run in 0..t {
                let cells = (run * d..(run + 1) * d)
                    .map(|j| Cell { fragment: z_fragment(j * s), in_bridge: false })
                    .collect();
                let bits = (run * (d - 1)..(run + 1) * (d - 1)).collect();
                groups.push(DecodeGroup::build(
                    format!("outer-{run}"),
                    GroupStructure::Chain,
                    bits,
                    cells,
                )?);
            }
            let z_sector = Sector { groups, bridge_bit: None };
            let bridge_row = outer_bridge_cells(&layout);
            let cell = |q: usize| Cell { fragment: x_fragment(q), in_bridge: bridge_row.contains(&q) };
            let x_sector = overlapped_sector(&layout, t * (d - 1), "inner", &cell)?;
            (z_sector, x_sector)
        }
        Construction::Double { ko, d, ell } => {
            let outer_layout = OverlapLayout::new(ko, d, ell)?;
            let inner_layout = OverlapLayout::new(outer_layout.len(), d, ell)?;
            let s = inner_layout.block_size();
            let outer_bridge = outer_bridge_cells(&outer_layout);
            let outer_cell = |j: usize| Cell {
                fragment: z_fragment(j * s),
                in_bridge: outer_bridge.contains(&j),
            };
            let z_sector = overlapped_sector(&outer_layout, 0, "outer", &outer_cell)?;
            let inner_bridge = outer_bridge_cells(&inner_layout);
            let inner_cell = |q: usize| Cell {
                fragment: x_fragment(q),
                in_bridge: inner_bridge.contains(&q),
            };
            let x_bits = ko * (d - ell - 1) + ell;
            let x_sector = overlapped_sector(&inner_layout, x_bits, "inner", &inner_cell)?;
            (z_sector, x_sector)
        }
    };

    Ok(GroupedDecoder {
        construction,
        syndrome_len: code.generator_count(),
        x_error_sector,
        z_error_sector,
    })
}

/// Bridge support of an overlapped layout: the last cell of each unshared
/// block and the first shared cell.
fn outer_bridge_cells(layout: &OverlapLayout) -> Vec<usize> {
    let mut cells: Vec<usize> = (0..layout.k)
        .map(|i| layout.unshared_range(i).end - 1)
        .collect();
    cells.push(layout.shared_range().start);
    cells
}

/// The paper's closed-form rule count for a construction, equal by design to
/// the sum of sub-table sizes the grouped decoder materializes.
pub fn paper_rule_count(construction: &Construction) -> Result<u128> {
    builder::predicted_parameters(construction)?;
    let pow = |e: usize| 1u128 << e;
    Ok(match *construction {
        Construction::Shor { d } => (1 + d as u128) * pow(d - 1),
        Construction::Outer { k, d, ell } => {
            k as u128 * pow(d - ell - 1)
                + pow(ell - 1)
                + 2
                + (k * (d - ell) + ell) as u128 * pow(d - 1)
        }
        Construction::Inner { t, d, ell } => {
            (t * d) as u128 * pow(d - ell - 1) + pow(ell - 1) + 2 + t as u128 * pow(d - 1)
        }
        Construction::Double { ko, d, ell } => {
            let ki = ko * (d - ell) + ell;
            (ki + ko) as u128 * pow(d - ell - 1) + pow(ell) + 4
        }
    })
}

/// Naive full-table size 2^(n-k), when it fits in 128 bits.
pub fn naive_table_size(code: &StabilizerCode) -> Option<u128> {
    let r = code.generator_count();
    if r < 128 {
        Some(1u128 << r)
    } else {
        None
    }
}

/// Per-weight classification of every error against a decoder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub w: usize,
    pub corrected: u64,
    pub detected_only: u64,
    pub miscorrected: u64,
    pub acts_trivially: u64,
    pub decoder: String,
}

impl CensusReport {
    pub fn total(&self) -> u64 {
        self.corrected + self.detected_only + self.miscorrected + self.acts_trivially
    }
}

/// Injects every weight-w error, decodes, and classifies the residual:
/// trivial residual counts as corrected (or acts_trivially when the error
/// itself is a stabilizer), an unknown syndrome as detected_only, and a
/// logical residual (including silent zero-syndrome logicals) as
/// miscorrected.
pub fn correctability_census<D: Decoder>(
    code: &StabilizerCode,
    decoder: &D,
    w: usize,
) -> Result<CensusReport> {
    let cost = enumeration_cost(code.n, w);
    if cost > ENUMERATION_BUDGET {
        return Err(Error::Capacity(format!(
            "census enumerates {cost} errors, over the budget of {ENUMERATION_BUDGET}"
        )));
    }
    let classifier = Classifier::new(code);
    let mut report = CensusReport {
        w,
        corrected: 0,
        detected_only: 0,
        miscorrected: 0,
        acts_trivially: 0,
        decoder: decoder.descriptor(),
    };
    let mut failure: Option<Error> = None;
    for_each_pauli_of_weight(code.n, w, |e| {
        if failure.is_some() {
            return;
        }
        if let Err(err) = census_one(code, decoder, &classifier, e, &mut report) {
            failure = Some(err);
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(report)
}

fn census_one<D: Decoder>(
    code: &StabilizerCode,
    decoder: &D,
    classifier: &Classifier,
    e: &PauliOperator,
    report: &mut CensusReport,
) -> Result<()> {
    let s = extract_syndrome(code, e)?;
    match decoder.decode(&s)? {
        DecodeOutcome::NoError => {
            let class = classifier.classify(e)?;
            match class.classification {
                Classification::Identity | Classification::Stabilizer => {
                    report.acts_trivially += 1
                }
                Classification::Logical => report.miscorrected += 1,
                Classification::Detectable => unreachable!("zero syndrome"),
            }
        }
        DecodeOutcome::Correction(c) => {
            let residual = e.product(&c)?;
            let class = classifier.classify(&residual)?;
            match class.classification {
                Classification::Identity | Classification::Stabilizer => report.corrected += 1,
                Classification::Logical => report.miscorrected += 1,
                Classification::Detectable => {
                    unreachable!("correction reproduces the error syndrome")
                }
            }
        }
        DecodeOutcome::DetectedUnrecoverable => report.detected_only += 1,
    }
    Ok(())
}

/// No-error probability gain (1-p)^{-(c' - c)} from replacing a complexity-c'
/// decode step with a complexity-c one.
pub fn noerror_gain(c: u128, c_prime: u128, p: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "probability p = {p} outside [0, 1)"
        )));
    }
    if c > c_prime {
        return Err(Error::InvalidParameter(format!(
            "c = {c} exceeds c' = {c_prime}"
        )));
    }
    let diff = (c_prime - c) as f64;
    Ok((1.0 - p).powf(-diff))
}

/// All (error, syndrome) rows of a given weight, canonically ordered.
pub fn tabulate(code: &StabilizerCode, w: usize) -> Result<Vec<(PauliOperator, Syndrome)>> {
    let cost = enumeration_cost(code.n, w);
    if cost > ENUMERATION_BUDGET {
        return Err(Error::Capacity(format!(
            "tabulation enumerates {cost} errors, over the budget of {ENUMERATION_BUDGET}"
        )));
    }
    let mut rows = Vec::new();
    let mut failure: Option<Error> = None;
    for_each_pauli_of_weight(code.n, w, |e| {
        if failure.is_some() {
            return;
        }
        match extract_syndrome(code, e) {
            Ok(s) => rows.push((e.clone(), s)),
            Err(err) => failure = Some(err),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    rows.sort_by(|a, b| a.0.cmp_canonical(&b.0));
    Ok(rows)
}
