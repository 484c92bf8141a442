use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One named check, e.g. `exact-sequence N=12`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    /// Witnesses and computed quantities; rationals are `"p/q"` strings.
    pub detail: Value,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Output of one `verify` run. Everything except `timing` is a pure function
/// of the command line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub results: Vec<CheckResult>,
    pub totals: Totals,
    pub timing: Timing,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_millis: u128,
}

impl Report {
    pub fn new(command: Vec<String>, results: Vec<CheckResult>, wall_millis: u128) -> Self {
        let passed = results.iter().filter(|r| r.pass).count();
        let totals = Totals { checks: results.len(), passed, failed: results.len() - passed };
        Report { command, results, totals, timing: Timing { wall_millis } }
    }

    pub fn all_passed(&self) -> bool {
        self.totals.failed == 0
    }

    /// The report without its timing field, for determinism comparisons.
    pub fn body(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = &mut v {
            map.remove("timing");
        }
        v
    }

    /// Plain-text table: one line per check, then totals.
    pub fn table(&self) -> String {
        let width = self.results.iter().map(|r| r.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for r in &self.results {
            let mark = if r.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{:width$}  {mark}  {}\n", r.name, r.detail));
        }
        out.push_str(&format!(
            "{} checks, {} passed, {} failed ({} ms)\n",
            self.totals.checks, self.totals.passed, self.totals.failed, self.timing.wall_millis
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn totals_and_body() {
        let results = vec![
            CheckResult { name: "a".into(), pass: true, detail: json!({}) },
            CheckResult { name: "b".into(), pass: false, detail: json!({"x": "1/2"}) },
        ];
        let r = Report::new(vec!["verify".into()], results, 17);
        assert_eq!(r.totals, Totals { checks: 2, passed: 1, failed: 1 });
        assert!(!r.all_passed());
        assert!(r.body().get("timing").is_none());
        assert_eq!(Report::new(vec!["verify".into()], r.results.clone(), 99).body(), r.body());
        assert!(r.table().contains("FAIL"));
    }
}
