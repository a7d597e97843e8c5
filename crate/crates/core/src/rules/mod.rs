//! The equation catalog, its soundness checker, directed rewriting and the
//! generalized-CNOT identity probe.

mod catalog;
mod probe;
mod rewrite;

use serde::Serialize;

use crate::diagram::{first_disallowed, Diagram, Fragment, FragmentId};
use crate::error::{Error, Result};
use crate::semantics::{equal_under, SemanticsKind};

pub use catalog::{catalog, catalog_with, rule_set, CatalogConfig};
pub use probe::{probe_cnot_conjecture, probe_with, Gate, GcxCircuit, ProbeConfig, ProbeReport, Witness};
pub use rewrite::{apply_rule, find_matches, normalize_zero, zero_normal_form, Position};

/// A named equation between two parallel diagrams of a fragment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub fragment: FragmentId,
    pub lhs: Diagram,
    pub rhs: Diagram,
    /// Where the equation comes from, in words.
    pub source: String,
}

impl RewriteRule {
    /// Checks that both sides have the same type and lie in the fragment.
    pub fn new(
        name: impl Into<String>,
        fragment: FragmentId,
        lhs: Diagram,
        rhs: Diagram,
        source: impl Into<String>,
    ) -> Result<Self> {
        let rule = RewriteRule { name: name.into(), fragment, lhs, rhs, source: source.into() };
        rule.check_well_formed()?;
        Ok(rule)
    }

    pub fn check_well_formed(&self) -> Result<()> {
        if (self.lhs.dom(), self.lhs.cod()) != (self.rhs.dom(), self.rhs.cod()) {
            return Err(Error::shape(format!(
                "rule `{}` relates a {}->{} diagram to a {}->{} diagram",
                self.name,
                self.lhs.dom(),
                self.lhs.cod(),
                self.rhs.dom(),
                self.rhs.cod()
            )));
        }
        let f = self.fragment.fragment();
        for side in [&self.lhs, &self.rhs] {
            if let Some(g) = first_disallowed(side, f) {
                return Err(Error::Disallowed { generator: g.name().into(), context: f.name.into() });
            }
        }
        Ok(())
    }

    /// The same equation read right to left.
    pub fn reversed(&self) -> RewriteRule {
        RewriteRule {
            name: format!("{}.rev", self.name),
            fragment: self.fragment,
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
            source: self.source.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleReport {
    pub name: String,
    pub fragment: FragmentId,
    pub verified: bool,
    pub semantics_checked: Vec<SemanticsKind>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

/// Evaluates both sides under every semantics applicable to the rule's
/// fragment.
pub fn check_rule(r: &RewriteRule) -> RuleReport {
    let f: &Fragment = r.fragment.fragment();
    let mut failures = Vec::new();
    if let Err(e) = r.check_well_formed() {
        failures.push(e.to_string());
    }
    let mut checked = Vec::new();
    if failures.is_empty() {
        for &s in f.semantics {
            checked.push(s);
            match equal_under(&r.lhs, &r.rhs, s, f) {
                Ok(true) => {}
                Ok(false) => failures.push(format!("sides differ under {s}")),
                Err(e) => failures.push(format!("{s}: {e}")),
            }
        }
    }
    RuleReport {
        name: r.name.clone(),
        fragment: r.fragment,
        verified: failures.is_empty(),
        semantics_checked: checked,
        failures,
    }
}

pub fn verify_rule(r: &RewriteRule) -> bool {
    check_rule(r).verified
}

/// Checks every rule, on `jobs` worker threads when given. Reports come
/// back in catalog order whatever the schedule.
pub fn verify_catalog(rules: &[RewriteRule], jobs: Option<usize>) -> Result<Vec<RuleReport>> {
    use rayon::prelude::*;
    let run = || rules.par_iter().map(check_rule).collect::<Vec<_>>();
    match jobs {
        None => Ok(run()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Invalid(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(run))
        }
    }
}
