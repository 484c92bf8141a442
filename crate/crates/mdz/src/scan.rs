//! Invertibility scan of E on T_{N,r} for r ≥ 3.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use mdz_core::higherdepth::{analyze_instance, scan_weights, t_count};

/// Default bound on |T_{N,r}| above which an instance is skipped.
pub const DEFAULT_ORDER_CAP: u128 = 200;

/// A singular E written out in full.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularDump {
    pub index: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

/// One JSON line of scan output. `rank` and `invertible` are absent when the
/// instance is over the cap.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Finding {
    pub r: usize,
    #[serde(rename = "N")]
    pub n: u32,
    pub order: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invertible: Option<bool>,
    pub millis: u128,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singular: Option<SingularDump>,
}

impl Finding {
    /// The finding without wall time, for comparing runs.
    pub fn without_timing(&self) -> Finding {
        Finding { millis: 0, ..self.clone() }
    }
}

fn scan_one(depth: usize, weight: u32, cap: u128) -> Finding {
    let order = t_count(weight, depth);
    let skipped = Finding { r: depth, n: weight, order, rank: None, invertible: None, millis: 0, skipped: true, singular: None };
    if order > cap {
        return skipped;
    }
    let start = Instant::now();
    let Ok(inst) = analyze_instance(depth, weight) else {
        return skipped;
    };
    Finding {
        r: depth,
        n: weight,
        order,
        rank: Some(inst.rank),
        invertible: Some(inst.invertible),
        millis: start.elapsed().as_millis(),
        skipped: false,
        singular: inst.singular_matrix.map(|e| SingularDump {
            index: e.index.iter().map(|t| t.to_string()).collect(),
            matrix: e.matrix.to_cells(),
        }),
    }
}

/// Findings for every weight r+2, r+4, … ≤ `max_weight`, in weight order.
pub fn scan(depth: usize, max_weight: u32, cap: u128) -> Vec<Finding> {
    scan_weights(depth, max_weight).par_iter().map(|&w| scan_one(depth, w, cap)).collect()
}
