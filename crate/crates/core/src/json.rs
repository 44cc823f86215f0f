//! Stable JSON interchange formats.
//!
//! A series is exported as
//!
//! ```json
//! {"dim": 2, "order": 2, "coeffs": [[{"i":0,"j":0,"k":0,"l":0,"c":"1"}, …], …]}
//! ```
//!
//! with one entry list per ℏ-order, omitted entries zero, and entry values
//! in the canonical polynomial string form. Entries are sorted by
//! `(i, j, k, l)` and key order is fixed, so output is deterministic and
//! round-trips bit-exactly. A classical operator uses the same shape with
//! `order = 1`: slot 0 is written empty and ignored on input, slot 1 holds
//! the operator.

use crate::op::Op2;
use crate::poly::Poly;
use crate::quantize::{MembershipReport, QuantizationResult};
use crate::series::HSeries;
use crate::verify::{ClassicalR, ResidualReport};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("json syntax: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("entry ({i},{j},{k},{l}) out of range for dim {dim}")]
    IndexOutOfRange {
        dim: usize,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    #[error("coefficient list has {got} slots but order {order} needs {want}")]
    CoeffCountMismatch {
        order: usize,
        want: usize,
        got: usize,
    },
    #[error("dim must be at least 1")]
    ZeroDim,
    #[error("a classical operator needs order ≥ 1 (slot 1 holds the entries)")]
    MissingClassicalSlot,
    #[error("entry value `{value}`: {message}")]
    BadPoly { value: String, message: String },
}

/// One nonzero operator entry: `R^{kl}_{ij} = c`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub c: String,
}

/// A truncated ℏ-series of operators.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesJson {
    pub dim: usize,
    pub order: usize,
    pub coeffs: Vec<Vec<EntryJson>>,
}

fn op_to_entries(op: &Op2) -> Vec<EntryJson> {
    op.nonzero_entries()
        .map(|((i, j, k, l), p)| EntryJson {
            i,
            j,
            k,
            l,
            c: p.to_string(),
        })
        .collect()
}

fn op_from_entries(dim: usize, entries: &[EntryJson]) -> Result<Op2, JsonError> {
    let mut op = Op2::zero(dim);
    for e in entries {
        if e.i >= dim || e.j >= dim || e.k >= dim || e.l >= dim {
            return Err(JsonError::IndexOutOfRange {
                dim,
                i: e.i,
                j: e.j,
                k: e.k,
                l: e.l,
            });
        }
        let p: Poly = e.c.parse().map_err(|err| JsonError::BadPoly {
            value: e.c.clone(),
            message: format!("{err}"),
        })?;
        let cur = op.entry(e.i, e.j, e.k, e.l).add(&p);
        op.set_entry(e.i, e.j, e.k, e.l, cur);
    }
    Ok(op)
}

/// Export a series. Entries come out sorted by `(i, j, k, l)`.
pub fn series_to_json(s: &HSeries) -> SeriesJson {
    SeriesJson {
        dim: s.dim(),
        order: s.order(),
        coeffs: s.coeffs().iter().map(op_to_entries).collect(),
    }
}

/// Import a series; repeated indices within one slot accumulate.
pub fn series_from_json(j: &SeriesJson) -> Result<HSeries, JsonError> {
    if j.dim == 0 {
        return Err(JsonError::ZeroDim);
    }
    if j.coeffs.len() != j.order + 1 {
        return Err(JsonError::CoeffCountMismatch {
            order: j.order,
            want: j.order + 1,
            got: j.coeffs.len(),
        });
    }
    let coeffs = j
        .coeffs
        .iter()
        .map(|entries| op_from_entries(j.dim, entries))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HSeries::from_coeffs(coeffs))
}

/// Export a classical operator in the series shape: slot 0 empty, slot 1
/// holds the entries.
pub fn classical_to_json(r: &ClassicalR) -> SeriesJson {
    SeriesJson {
        dim: r.dim(),
        order: 1,
        coeffs: vec![Vec::new(), op_to_entries(&r.op)],
    }
}

/// Import a classical operator from the series shape; the ℏ⁰ slot is
/// ignored, slot 1 is the operator.
pub fn classical_from_json(j: &SeriesJson) -> Result<ClassicalR, JsonError> {
    if j.dim == 0 {
        return Err(JsonError::ZeroDim);
    }
    if j.order < 1 || j.coeffs.len() < 2 {
        return Err(JsonError::MissingClassicalSlot);
    }
    Ok(ClassicalR::new(op_from_entries(j.dim, &j.coeffs[1])?))
}

/// A residual report: `{"identity": …, "is_zero": …, "witnesses": […]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportJson {
    pub identity: String,
    pub is_zero: bool,
    pub witnesses: Vec<WitnessJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    pub index: Vec<usize>,
    pub value: String,
}

pub fn report_to_json(r: &ResidualReport) -> ReportJson {
    ReportJson {
        identity: r.identity.clone(),
        is_zero: r.is_zero,
        witnesses: r
            .witnesses
            .iter()
            .map(|w| WitnessJson {
                index: w.index.clone(),
                value: w.value.to_string(),
            })
            .collect(),
    }
}

/// One per-order record of a quantization run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrderRecordJson {
    pub order: usize,
    pub kernel_dim: usize,
    pub new_parameters: Vec<String>,
    pub obstructions: Vec<String>,
}

/// A full quantization run: per-order records plus the constructed family.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuantizationJson {
    pub constraints: String,
    pub per_order: Vec<OrderRecordJson>,
    pub total_new_parameters: usize,
    pub stopped_at: Option<usize>,
    pub series: SeriesJson,
}

pub fn quantization_to_json(q: &QuantizationResult) -> QuantizationJson {
    QuantizationJson {
        constraints: q.constraints.describe(),
        per_order: q
            .per_order
            .iter()
            .map(|r| OrderRecordJson {
                order: r.order,
                kernel_dim: r.kernel_dim,
                new_parameters: r.new_parameters.clone(),
                obstructions: r.obstructions.iter().map(|p| p.to_string()).collect(),
            })
            .collect(),
        total_new_parameters: q.total_new_parameters,
        stopped_at: q.stopped_at,
        series: series_to_json(&q.series),
    }
}

/// Outcome of a membership check against a quantization family.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MembershipJson {
    pub member: bool,
    /// Parameter name → canonical polynomial string, in name order.
    pub bindings: std::collections::BTreeMap<String, String>,
    pub free_directions: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<MembershipFailureJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MembershipFailureJson {
    pub order: usize,
    pub index: Vec<usize>,
    pub difference: String,
}

pub fn membership_to_json(m: &MembershipReport) -> MembershipJson {
    MembershipJson {
        member: m.is_member(),
        bindings: m
            .bindings
            .iter()
            .map(|(k, v)| (k.clone(), v.to_string()))
            .collect(),
        free_directions: m.free_directions,
        failure: m.failure.as_ref().map(|f| MembershipFailureJson {
            order: f.order,
            index: vec![f.index.0, f.index.1, f.index.2, f.index.3],
            difference: f.difference.to_string(),
        }),
    }
}
