//! Structured pass/fail reports for the verification suites.

use std::fmt;

/// One verified relation instance.
#[derive(Clone, Debug)]
pub struct CheckLine {
    /// Relation name plus the indices it was instantiated at.
    pub name: String,
    pub pass: bool,
    /// Residual `LHS - RHS` rendered in canonical form, present on failure.
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), lines: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.lines.push(CheckLine { name: name.into(), pass, residual: None });
    }

    /// Records a check together with the residual when it fails.
    pub fn check_residual<T: fmt::Display>(
        &mut self,
        name: impl Into<String>,
        pass: bool,
        residual: T,
    ) {
        let residual = if pass { None } else { Some(residual.to_string()) };
        self.lines.push(CheckLine { name: name.into(), pass, residual });
    }

    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn merge(&mut self, other: Report) {
        for mut line in other.lines {
            line.name = format!("{}: {}", other.title, line.name);
            self.lines.push(line);
        }
    }

    /// One tab-separated record per line, stable field order.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&l.name);
            out.push('\t');
            out.push_str(if l.pass { "pass" } else { "fail" });
            if let Some(r) = &l.residual {
                out.push('\t');
                out.push_str(&format!("residual={r}"));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({}/{} checks pass)",
            self.title,
            if self.all_pass() { "PASS" } else { "FAIL" },
            self.lines.iter().filter(|l| l.pass).count(),
            self.lines.len()
        )?;
        for l in &self.lines {
            if l.pass {
                writeln!(f, "  {}: pass", l.name)?;
            } else {
                match &l.residual {
                    Some(r) => writeln!(f, "  {}: FAIL residual={}", l.name, r)?,
                    None => writeln!(f, "  {}: FAIL", l.name)?,
                }
            }
        }
        Ok(())
    }
}
