//! Machine-readable summary of a tree's metrics, bounds and results.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundReport, Certification, ComparisonBound, Stage};
use crate::error::{Error, Result};
use crate::labelling::RadioLabelling;
use crate::metrics::TreeMetrics;
use crate::solver::SolveResult;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationSummary {
    pub certified: bool,
    /// Stage that failed; absent when certified.
    pub stage: Option<Stage>,
    /// Span of the certified labelling.
    pub span: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSummary {
    pub rn: u64,
    pub completed: bool,
    pub nodes: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// JSON report. Keys serialize in declaration order; optional sections are omitted
/// when absent, while `bound_improved` and `strict_gap` are `null` for trees that
/// are not two-branch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub p: usize,
    pub diameter: usize,
    pub weight_centers: Vec<usize>,
    pub epsilon: usize,
    pub total_level: usize,
    pub remote_count: usize,
    pub xi: usize,
    pub two_branch: bool,
    pub bound_basic: i64,
    pub bound_improved: Option<i64>,
    pub strict_gap: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonBound>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certification: Option<CertificationSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<usize, u64>>,
}

impl Report {
    pub fn new(metrics: &TreeMetrics) -> Result<Report> {
        let bounds = BoundReport::new(metrics)?;
        Ok(Report {
            family: None,
            p: bounds.p,
            diameter: bounds.d,
            weight_centers: metrics.weight_centers().to_vec(),
            epsilon: bounds.epsilon,
            total_level: bounds.total_level,
            remote_count: bounds.remote_count,
            xi: bounds.xi,
            two_branch: metrics.two_branch(),
            bound_basic: bounds.basic,
            bound_improved: bounds.improved,
            strict_gap: bounds.strict_gap,
            comparison: bounds.comparison,
            certification: None,
            exact: None,
            labels: None,
        })
    }

    pub fn with_family(mut self, family: impl ToString) -> Report {
        self.family = Some(family.to_string());
        self
    }

    pub fn with_comparison(mut self, comparison: ComparisonBound) -> Report {
        self.comparison = Some(comparison);
        self
    }

    pub fn with_certification(mut self, certification: &Certification) -> Report {
        self.certification = Some(match certification {
            Certification::Certified(f) => CertificationSummary {
                certified: true,
                stage: None,
                span: Some(f.span()),
            },
            Certification::Failed(e) => CertificationSummary {
                certified: false,
                stage: Some(e.stage),
                span: None,
            },
        });
        self
    }

    /// Adds the exact result; `stats` also records the wall-clock time.
    pub fn with_exact(mut self, result: &SolveResult, stats: bool) -> Report {
        self.exact = Some(ExactSummary {
            rn: result.rn,
            completed: result.stats.completed,
            nodes: result.stats.nodes,
            elapsed_ms: stats.then_some(result.stats.elapsed.as_millis() as u64),
        });
        self
    }

    pub fn with_labels(mut self, labelling: &RadioLabelling) -> Report {
        self.labels = Some(labelling.labels().iter().copied().enumerate().collect());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    /// Two-column human-readable table.
    pub fn to_table(&self) -> String {
        let mut rows: Vec<(&str, String)> = Vec::new();
        if let Some(family) = &self.family {
            rows.push(("family", family.clone()));
        }
        let centers: Vec<String> = self.weight_centers.iter().map(|c| c.to_string()).collect();
        rows.extend([
            ("order", self.p.to_string()),
            ("diameter", self.diameter.to_string()),
            ("weight centers", centers.join(" ")),
            ("epsilon", self.epsilon.to_string()),
            ("total level", self.total_level.to_string()),
            ("remote vertices", self.remote_count.to_string()),
            ("xi", self.xi.to_string()),
            ("two-branch", self.two_branch.to_string()),
            ("basic bound", self.bound_basic.to_string()),
        ]);
        if let Some(v) = self.bound_improved {
            rows.push(("improved bound", v.to_string()));
        }
        if let Some(v) = self.strict_gap {
            rows.push(("strict gap", v.to_string()));
        }
        if let Some(c) = &self.comparison {
            rows.push(("comparison bound", format!("{} at {} ({:?})", c.value, c.x, c.line)));
        }
        if let Some(c) = &self.certification {
            let value = match (c.span, c.stage) {
                (Some(span), _) => format!("certified, span {span}"),
                (None, Some(stage)) => format!("failed at {stage}"),
                (None, None) => "failed".to_string(),
            };
            rows.push(("certification", value));
        }
        if let Some(e) = &self.exact {
            let status = if e.completed { "exact" } else { "upper bound, search stopped" };
            rows.push(("radio number", format!("{} ({status}, {} nodes)", e.rn, e.nodes)));
        }
        let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (key, value) in rows {
            let _ = writeln!(out, "{key:<width$}  {value}");
        }
        out
    }
}
