use serde::{Deserialize, Serialize};

/// One named residual compared against a tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Named residuals (max-entry norms) with an overall verdict.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self {
            checks: Vec::new(),
            pass: true,
        }
    }

    /// Records a residual. NaN never passes.
    pub fn push(&mut self, name: impl Into<String>, residual: f64, tol: f64) {
        let pass = residual <= tol;
        self.pass &= pass;
        self.checks.push(Check {
            name: name.into(),
            residual,
            tol,
            pass,
        });
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
