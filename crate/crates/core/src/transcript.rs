use std::fmt;

/// Maximum failures recorded per check.
pub const MAX_FAILURES: usize = 10;

/// One `CHECK name PASS|FAIL [witness]` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {}",
            self.name,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Ordered log of criterion checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    lines: Vec<CheckLine>,
    failures: usize,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, name: impl Into<String>, witness: Option<String>) {
        self.lines.push(CheckLine {
            name: name.into(),
            pass: true,
            witness,
        });
    }

    /// Records a failure; only the first [`MAX_FAILURES`] are kept.
    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.failures += 1;
        if self.failures <= MAX_FAILURES {
            self.lines.push(CheckLine {
                name: name.into(),
                pass: false,
                witness: Some(witness.into()),
            });
        }
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, witness: impl Into<String>) {
        if ok {
            self.pass(name, None);
        } else {
            self.fail(name, witness);
        }
    }

    pub fn lines(&self) -> &[CheckLine] {
        &self.lines
    }

    pub fn failures(&self) -> usize {
        self.failures
    }

    pub fn all_pass(&self) -> bool {
        self.failures == 0
    }

    pub fn extend(&mut self, other: Transcript) {
        self.failures += other.failures;
        self.lines.extend(other.lines);
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}
