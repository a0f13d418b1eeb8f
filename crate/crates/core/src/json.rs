//! JSON documents for codes and reports.
//!
//! Every document carries a top-level `"schema": "overlap-shor/1"` field.
//! The generator array order in a code document defines the syndrome bit
//! order, so loading requires the X-type entries to precede the Z-type
//! entries exactly as this crate exports them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::builder::{Construction, GroupRole, StabilizerCode, StabilizerGroup};
use crate::classical::LinearCode;
use crate::decoder::CensusReport;
use crate::pauli::PauliOperator;
use crate::verifier::{ComputedDistance, DistanceReport, Verdict};
use crate::{Error, Result, SCHEMA};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstructionDoc {
    pub tag: String,
    pub params: BTreeMap<String, u64>,
}

impl ConstructionDoc {
    pub fn from_construction(c: &Construction) -> Self {
        let mut params = BTreeMap::new();
        match *c {
            Construction::Shor { d } => {
                params.insert("d".into(), d as u64);
            }
            Construction::Outer { k, d, ell } => {
                params.insert("k".into(), k as u64);
                params.insert("d".into(), d as u64);
                params.insert("ell".into(), ell as u64);
            }
            Construction::Inner { t, d, ell } => {
                params.insert("t".into(), t as u64);
                params.insert("d".into(), d as u64);
                params.insert("ell".into(), ell as u64);
            }
            Construction::Double { ko, d, ell } => {
                params.insert("ko".into(), ko as u64);
                params.insert("d".into(), d as u64);
                params.insert("ell".into(), ell as u64);
            }
        }
        ConstructionDoc { tag: c.tag().into(), params }
    }

    pub fn to_construction(&self) -> Result<Construction> {
        let get = |key: &str| -> Result<usize> {
            self.params
                .get(key)
                .map(|&v| v as usize)
                .ok_or_else(|| Error::Malformed(format!("construction missing parameter {key:?}")))
        };
        match self.tag.as_str() {
            "shor" => Ok(Construction::Shor { d: get("d")? }),
            "outer" => Ok(Construction::Outer { k: get("k")?, d: get("d")?, ell: get("ell")? }),
            "inner" => Ok(Construction::Inner { t: get("t")?, d: get("d")?, ell: get("ell")? }),
            "double" => Ok(Construction::Double { ko: get("ko")?, d: get("d")?, ell: get("ell")? }),
            other => Err(Error::Malformed(format!("unknown construction tag {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub label: String,
    pub group: String,
    pub role: String,
    #[serde(rename = "type")]
    pub pauli_type: String,
    pub pauli: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeDoc {
    pub schema: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionDoc>,
    pub n: usize,
    pub k: usize,
    pub claimed_distance: usize,
    pub generators: Vec<GeneratorDoc>,
    pub logical_x: Vec<String>,
    pub logical_z: Vec<String>,
}

impl CodeDoc {
    pub fn from_code(code: &StabilizerCode) -> Self {
        let mut generators = Vec::new();
        let mut index = 0;
        for (groups, pauli_type) in [(&code.x_groups, "X"), (&code.z_groups, "Z")] {
            for group in groups.iter() {
                for op in &group.generators {
                    generators.push(GeneratorDoc {
                        label: format!("g{index}"),
                        group: group.label.clone(),
                        role: group.role.as_str().into(),
                        pauli_type: pauli_type.into(),
                        pauli: op.canonical_string(),
                    });
                    index += 1;
                }
            }
        }
        CodeDoc {
            schema: SCHEMA.into(),
            construction: code.construction.as_ref().map(ConstructionDoc::from_construction),
            n: code.n,
            k: code.k,
            claimed_distance: code.claimed_distance,
            generators,
            logical_x: code.logical_x.iter().map(|l| l.canonical_string()).collect(),
            logical_z: code.logical_z.iter().map(|l| l.canonical_string()).collect(),
        }
    }

    pub fn to_code(&self) -> Result<StabilizerCode> {
        if self.schema != SCHEMA {
            return Err(Error::Malformed(format!(
                "unsupported schema {:?}, expected {SCHEMA:?}",
                self.schema
            )));
        }
        let mut x_groups: Vec<StabilizerGroup> = Vec::new();
        let mut z_groups: Vec<StabilizerGroup> = Vec::new();
        let mut seen_z = false;
        for entry in &self.generators {
            let op = PauliOperator::parse(&entry.pauli, self.n)?;
            let role = GroupRole::parse(&entry.role)?;
            let target = match entry.pauli_type.as_str() {
                "X" => {
                    if seen_z {
                        return Err(Error::Malformed(
                            "X-type generators must precede Z-type generators; \
                             the array order defines the syndrome bit order"
                                .into(),
                        ));
                    }
                    if !op.z_bits().is_zero() {
                        return Err(Error::Malformed(format!(
                            "generator {} declared X-type but carries Z factors",
                            entry.pauli
                        )));
                    }
                    &mut x_groups
                }
                "Z" => {
                    seen_z = true;
                    if !op.x_bits().is_zero() {
                        return Err(Error::Malformed(format!(
                            "generator {} declared Z-type but carries X factors",
                            entry.pauli
                        )));
                    }
                    &mut z_groups
                }
                other => {
                    return Err(Error::Malformed(format!("unknown generator type {other:?}")))
                }
            };
            match target.last_mut() {
                Some(g) if g.label == entry.group => g.generators.push(op),
                _ => target.push(StabilizerGroup {
                    label: entry.group.clone(),
                    role,
                    generators: vec![op],
                }),
            }
        }
        let parse_all = |strings: &[String]| -> Result<Vec<PauliOperator>> {
            strings.iter().map(|s| PauliOperator::parse(s, self.n)).collect()
        };
        let code = StabilizerCode {
            n: self.n,
            k: self.k,
            claimed_distance: self.claimed_distance,
            construction: match &self.construction {
                Some(doc) => Some(doc.to_construction()?),
                None => None,
            },
            x_groups,
            z_groups,
            logical_x: parse_all(&self.logical_x)?,
            logical_z: parse_all(&self.logical_z)?,
        };
        if code.generator_count() != code.n - code.k {
            return Err(Error::Malformed(format!(
                "{} generators for an [[{}, {}]] code; expected n - k = {}",
                code.generator_count(),
                code.n,
                code.k,
                code.n - code.k
            )));
        }
        Ok(code)
    }
}

pub fn code_to_json(code: &StabilizerCode) -> String {
    serde_json::to_string_pretty(&CodeDoc::from_code(code)).expect("serializable document")
}

pub fn code_from_json(text: &str) -> Result<StabilizerCode> {
    let doc: CodeDoc =
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("code JSON: {e}")))?;
    doc.to_code()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinearCodeDoc {
    pub schema: String,
    pub n: usize,
    pub k: usize,
    pub claimed_distance: usize,
    pub generator_rows: Vec<String>,
    pub check_rows: Vec<String>,
    pub groups: Vec<LinearGroupDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinearGroupDoc {
    pub label: String,
    pub row_indices: Vec<usize>,
}

impl LinearCodeDoc {
    pub fn from_code(code: &LinearCode) -> Self {
        LinearCodeDoc {
            schema: SCHEMA.into(),
            n: code.n,
            k: code.k,
            claimed_distance: code.claimed_distance,
            generator_rows: code.generator.rows().iter().map(|r| r.bit_string()).collect(),
            check_rows: code.checks.rows().iter().map(|r| r.bit_string()).collect(),
            groups: code
                .check_groups
                .iter()
                .map(|g| LinearGroupDoc {
                    label: g.label.clone(),
                    row_indices: g.row_indices.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DistanceReportDoc {
    pub schema: String,
    pub computed: serde_json::Value,
    pub claimed: usize,
    pub verdict: Verdict,
    pub witness: Option<String>,
}

impl DistanceReportDoc {
    pub fn from_report(report: &DistanceReport) -> Self {
        let computed = match report.computed {
            ComputedDistance::Found(w) => serde_json::json!(w),
            ComputedDistance::GreaterThan(w) => serde_json::json!(format!("greater than {w}")),
        };
        DistanceReportDoc {
            schema: SCHEMA.into(),
            computed,
            claimed: report.claimed_distance,
            verdict: report.verdict.clone(),
            witness: report.witness.as_ref().map(|w| w.canonical_string()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReportDoc {
    pub schema: String,
    pub w: usize,
    pub corrected: u64,
    pub detected_only: u64,
    pub miscorrected: u64,
    pub acts_trivially: u64,
    pub decoder: String,
}

impl CensusReportDoc {
    pub fn from_report(report: &CensusReport) -> Self {
        CensusReportDoc {
            schema: SCHEMA.into(),
            w: report.w,
            corrected: report.corrected,
            detected_only: report.detected_only,
            miscorrected: report.miscorrected,
            acts_trivially: report.acts_trivially,
            decoder: report.decoder.clone(),
        }
    }
}
