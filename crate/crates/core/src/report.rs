use serde::Serialize;

/// Outcome of one exhaustive law check.
///
/// `passed + witnesses.len() + skipped == instances_tried` always holds.
#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub law: String,
    pub instances_tried: usize,
    pub passed: usize,
    pub skipped: usize,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(law: impl Into<String>) -> Self {
        CheckReport {
            law: law.into(),
            instances_tried: 0,
            passed: 0,
            skipped: 0,
            witnesses: Vec::new(),
            notes: Vec::new(),
            wall_time_ms: None,
        }
    }

    pub fn pass(&mut self) {
        self.instances_tried += 1;
        self.passed += 1;
    }

    pub fn fail(&mut self, witness: String) {
        self.instances_tried += 1;
        self.witnesses.push(witness);
    }

    pub fn skip(&mut self) {
        self.skip_many(1);
    }

    pub fn skip_many(&mut self, n: usize) {
        self.instances_tried += n;
        self.skipped += n;
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(witness())
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn failures(&self) -> usize {
        self.witnesses.len()
    }

    /// No non-skipped instance failed.
    pub fn ok(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: tried {}, passed {}, failed {}, skipped {}",
            self.law,
            self.instances_tried,
            self.passed,
            self.failures(),
            self.skipped
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bookkeeping_adds_up() {
        let mut r = CheckReport::new("x");
        r.pass();
        r.skip();
        r.check(false, || "w".into());
        assert_eq!(r.instances_tried, r.passed + r.skipped + r.failures());
        assert!(!r.ok());
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("wall_time_ms"));
    }
}
