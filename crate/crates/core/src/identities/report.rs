//! Verification reports and their JSON form.

use serde::Serialize;

/// Version tag written at the top of every JSON report.
pub const SCHEMA: &str = "ffhyper/1";

/// One assignment at which the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// `A=1 B1=2 ...` rendering.
    pub assignment: String,
    pub chars: Vec<u32>,
    pub points: Vec<u32>,
    /// Command line that re-evaluates this assignment.
    pub replay: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of evaluating the assignments excluded by the domain constraints.
/// Mismatches here are recorded but never count as failures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryReport {
    pub tested: u64,
    pub agreed: u64,
    pub mismatched: u64,
    /// One side could not be evaluated (e.g. a division by zero).
    pub undefined: u64,
    pub examples: Vec<Failure>,
}

/// Result of checking one identity at one (q, n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub q: u32,
    /// `None` for identities without a variable count.
    pub n: Option<usize>,
    pub mode: &'static str,
    pub seed: Option<u64>,
    pub tested: u64,
    pub excluded: u64,
    pub failed: u64,
    /// Sorted by assignment; at most the configured limit.
    pub failures: Vec<Failure>,
    pub failures_truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<BoundaryReport>,
    /// Wall time, only when timing was requested (keeps output reproducible).
    pub ms: Option<u64>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// One-line human summary.
    pub fn text_line(&self) -> String {
        let n = self.n.map_or(String::new(), |n| format!(" n={n}"));
        let status = if self.passed() { "ok" } else { "FAIL" };
        let mut line = format!(
            "{status:4} {} q={}{n} {} tested={} excluded={} failed={}",
            self.id, self.q, self.mode, self.tested, self.excluded, self.failed
        );
        if let Some(b) = &self.boundary {
            line.push_str(&format!(
                " boundary(tested={} agreed={} mismatched={} undefined={})",
                b.tested, b.agreed, b.mismatched, b.undefined
            ));
        }
        if let Some(ms) = self.ms {
            line.push_str(&format!(" {ms}ms"));
        }
        line
    }
}

/// The top-level JSON document.
#[derive(Debug, Clone, Serialize)]
pub struct ReportSet {
    pub schema: &'static str,
    pub reports: Vec<TheoremReport>,
}

impl ReportSet {
    pub fn new(reports: Vec<TheoremReport>) -> ReportSet {
        ReportSet {
            schema: SCHEMA,
            reports,
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(TheoremReport::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
