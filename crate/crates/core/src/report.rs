//! Named pass/fail checks with residuals.

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub residual: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, residual: f64) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            residual,
        });
    }

    /// Records a check that passes when `residual <= tol`; NaN never passes.
    pub fn within(&mut self, name: impl Into<String>, residual: f64, tol: f64) {
        self.push(name, residual <= tol, residual);
    }

    pub fn flag(&mut self, name: impl Into<String>, pass: bool) {
        self.push(name, pass, if pass { 0.0 } else { 1.0 });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
