//! Verification reports with deterministic witness order.

use std::fmt;

use crate::kernel::{is_zero_vec, Field, Q};

/// One failing instance of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<S = Q> {
    pub label: String,
    /// Basis indices the identity was evaluated on.
    pub indices: Vec<usize>,
    /// Coefficients of the nonzero residual.
    pub residual: Vec<S>,
}

/// Outcome of a check. It passes iff there are no witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport<S = Q> {
    witnesses: Vec<Witness<S>>,
}

impl<S: Field> Default for VerificationReport<S> {
    fn default() -> Self {
        Self::pass()
    }
}

impl<S: Field> VerificationReport<S> {
    pub fn pass() -> Self {
        VerificationReport { witnesses: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn witnesses(&self) -> &[Witness<S>] {
        &self.witnesses
    }

    /// Witnesses carrying `label`.
    pub fn with_label<'a>(&'a self, label: &'a str) -> impl Iterator<Item = &'a Witness<S>> + 'a {
        self.witnesses.iter().filter(move |w| w.label == label)
    }

    pub fn first(&self) -> Option<&Witness<S>> {
        self.witnesses.first()
    }

    /// Concatenates reports whose labels are already in declaration order.
    pub fn concat(parts: impl IntoIterator<Item = VerificationReport<S>>) -> Self {
        let witnesses = parts.into_iter().flat_map(|r| r.witnesses).collect();
        VerificationReport { witnesses }
    }

    /// Prefixes every label, used when nesting sub-reports.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for w in &mut self.witnesses {
            w.label = format!("{prefix}/{}", w.label);
        }
        self
    }
}

impl<S: Field> fmt::Display for Witness<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        let res: Vec<String> = self.residual.iter().map(|c| c.to_string()).collect();
        write!(f, "{} ({}): [{}]", self.label, idx.join(", "), res.join(", "))
    }
}

impl<S: Field> fmt::Display for VerificationReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "passed");
        }
        writeln!(f, "failed with {} witness(es)", self.witnesses.len())?;
        for w in &self.witnesses {
            writeln!(f, "  {w}")?;
        }
        Ok(())
    }
}

/// Collects residuals and sorts them by label declaration order, then indices.
pub struct ReportBuilder<S = Q> {
    labels: Vec<String>,
    entries: Vec<(usize, Witness<S>)>,
}

impl<S: Field> ReportBuilder<S> {
    pub fn new<I, L>(labels: I) -> Self
    where
        I: IntoIterator<Item = L>,
        L: Into<String>,
    {
        ReportBuilder {
            labels: labels.into_iter().map(Into::into).collect(),
            entries: Vec::new(),
        }
    }

    fn rank(&mut self, label: &str) -> usize {
        match self.labels.iter().position(|l| l == label) {
            Some(r) => r,
            None => {
                self.labels.push(label.to_string());
                self.labels.len() - 1
            }
        }
    }

    /// Records a witness if the residual is nonzero.
    pub fn check(&mut self, label: &str, indices: &[usize], residual: Vec<S>) {
        if is_zero_vec(&residual) {
            return;
        }
        let rank = self.rank(label);
        self.entries.push((
            rank,
            Witness {
                label: label.to_string(),
                indices: indices.to_vec(),
                residual,
            },
        ));
    }

    /// Records a witness for a failed boolean condition.
    pub fn fail(&mut self, label: &str, indices: &[usize]) {
        let rank = self.rank(label);
        self.entries.push((
            rank,
            Witness {
                label: label.to_string(),
                indices: indices.to_vec(),
                residual: Vec::new(),
            },
        ));
    }

    pub fn finish(mut self) -> VerificationReport<S> {
        self.entries
            .sort_by(|(ra, wa), (rb, wb)| ra.cmp(rb).then_with(|| wa.indices.cmp(&wb.indices)));
        VerificationReport {
            witnesses: self.entries.into_iter().map(|(_, w)| w).collect(),
        }
    }
}
