//! JSON matroid input and canonical serialization.
//!
//! A matroid file gives the ground-set size plus exactly one presentation:
//! `circuits`, `bases`, `lines` (rank-3 line presentation), or `matrix`
//! (rows of rational strings, columns = points).  Element lists may be
//! 0-based (default) or 1-based via `"labeling"`; an optional `"base"` marks
//! a point.  Serialization is always canonical: 0-based circuits, sorted.

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::linalg::Matrix;
use crate::matroid::Matroid;
use crate::subsets::{elements, mask_from_elements, Subset};
use serde::{Deserialize, Serialize};

#[derive(Deserialize)]
struct RawMatroid {
    n: usize,
    #[serde(default)]
    labeling: Option<String>,
    #[serde(default)]
    rank: Option<usize>,
    #[serde(default)]
    base: Option<usize>,
    #[serde(default)]
    circuits: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    bases: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    lines: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    matrix: Option<Vec<Vec<String>>>,
}

pub struct MatroidInput {
    pub matroid: Matroid,
    pub base: Option<usize>,
}

pub fn parse_matroid_json(text: &str) -> Result<MatroidInput> {
    let raw: RawMatroid = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid matroid JSON: {e}")))?;
    let offset = match raw.labeling.as_deref() {
        None | Some("0-based") => 0,
        Some("1-based") => 1,
        Some(other) => {
            return Err(Error::Parse(format!(
                "unknown labeling {other:?}; expected \"0-based\" or \"1-based\""
            )))
        }
    };

    let shift = |lists: Vec<Vec<usize>>| -> Result<Vec<Subset>> {
        lists
            .into_iter()
            .map(|els| {
                let shifted: Vec<usize> = els
                    .iter()
                    .map(|&e| {
                        e.checked_sub(offset).ok_or_else(|| {
                            Error::Parse(format!("element {e} invalid under {offset}-shift"))
                        })
                    })
                    .collect::<Result<_>>()?;
                mask_from_elements(&shifted, raw.n)
            })
            .collect()
    };

    let presentations = usize::from(raw.circuits.is_some())
        + usize::from(raw.bases.is_some())
        + usize::from(raw.lines.is_some())
        + usize::from(raw.matrix.is_some());
    if presentations != 1 {
        return Err(Error::Parse(
            "exactly one of \"circuits\", \"bases\", \"lines\", \"matrix\" must be given".into(),
        ));
    }

    let matroid = if let Some(c) = raw.circuits {
        Matroid::from_circuits(raw.n, shift(c)?, raw.rank)?
    } else if let Some(b) = raw.bases {
        Matroid::from_bases(raw.n, shift(b)?, raw.rank)?
    } else if let Some(l) = raw.lines {
        let m = Matroid::from_rank3_lines(raw.n, shift(l)?)?;
        if let Some(r) = raw.rank {
            if r != m.rank() {
                return Err(Error::RankMismatch {
                    declared: r,
                    computed: m.rank(),
                });
            }
        }
        m
    } else {
        let rows_in = raw.matrix.expect("checked above");
        let q = Rationals;
        let mut rows = Vec::with_capacity(rows_in.len());
        for (i, row) in rows_in.iter().enumerate() {
            if row.len() != raw.n {
                return Err(Error::Parse(format!(
                    "matrix row {i} has {} entries, expected n = {}",
                    row.len(),
                    raw.n
                )));
            }
            rows.push(row.iter().map(|s| q.parse(s)).collect::<Result<Vec<_>>>()?);
        }
        let mat = Matrix::from_rows(raw.n, rows)?;
        Matroid::from_matrix(&mat, raw.rank)?
    };

    let base = match raw.base {
        None => None,
        Some(b) => {
            let b0 = b.checked_sub(offset).ok_or_else(|| {
                Error::Parse(format!("base point {b} invalid under {offset}-shift"))
            })?;
            if b0 >= matroid.n() {
                return Err(Error::ElementOutOfRange {
                    element: b0,
                    n: matroid.n(),
                });
            }
            Some(b0)
        }
    };

    Ok(MatroidInput { matroid, base })
}

#[derive(Serialize)]
struct CanonicalMatroid {
    n: usize,
    labeling: &'static str,
    rank: usize,
    circuits: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    base: Option<usize>,
}

/// Canonical JSON: 0-based labels, circuits in colex order.
pub fn matroid_to_json(m: &Matroid, base: Option<usize>) -> String {
    let doc = CanonicalMatroid {
        n: m.n(),
        labeling: "0-based",
        rank: m.rank(),
        circuits: m.circuits().iter().map(|&c| elements(c)).collect(),
        base,
    };
    serde_json::to_string_pretty(&doc).expect("serializable struct")
}

/// A stable one-line description of the matroid (and base point, if any),
/// suitable for hashing.
pub fn canonical_description(m: &Matroid, base: Option<usize>) -> String {
    let circuits: Vec<String> = m
        .circuits()
        .iter()
        .map(|&c| {
            elements(c)
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    match base {
        Some(b) => format!(
            "n={};rank={};base={};circuits=[{}]",
            m.n(),
            m.rank(),
            b,
            circuits.join("|")
        ),
        None => format!(
            "n={};rank={};circuits=[{}]",
            m.n(),
            m.rank(),
            circuits.join("|")
        ),
    }
}
