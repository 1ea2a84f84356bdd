//! Verification harness: named checks over single graphs and graph streams.

pub mod checks;
pub mod repro;
pub mod scan;

use crate::canon::{canonical_form, Certificate};
use crate::census::{census, SubtreeCensus};
use crate::error::{Error, Result};
use crate::families::{build_family, FamilySpec};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::numeric::{ratio_string, sig12, to_f64, Ratio};
use serde::{Deserialize, Serialize};
use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub use checks::*;

/// Outcome class of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The statement was confirmed on this input.
    Holds,
    /// A proven statement was contradicted: an implementation bug.
    Fails,
    /// Informational, or an open statement (see `violation`).
    ReportOnly,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::ReportOnly => "report-only",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One check applied to one graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckVerdict {
    pub check: String,
    pub graph: String,
    pub status: Status,
    /// The checked statement is contradicted on this input. Always set with
    /// `Fails`; with `ReportOnly` it marks a finding against an open statement.
    pub violation: bool,
    pub witness: serde_json::Value,
    /// `μ(G)` as an exact `p/q` string, when defined.
    pub mu: Option<String>,
    pub mu_float: Option<f64>,
    pub runtime_ms: u64,
}

/// The checks available to scans and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    MinPath,
    MaxClique,
    EdgeDeletion,
    EdgeAddition,
    EdgeAdditionClasses,
    Matchings,
    Contraction,
    LocalGlobal,
    LocalBound,
    DensityBound,
    Transitive,
    RatioChain,
    MuVsAv,
}

impl CheckKind {
    pub const ALL: [CheckKind; 13] = [
        CheckKind::MinPath,
        CheckKind::MaxClique,
        CheckKind::EdgeDeletion,
        CheckKind::EdgeAddition,
        CheckKind::EdgeAdditionClasses,
        CheckKind::Matchings,
        CheckKind::Contraction,
        CheckKind::LocalGlobal,
        CheckKind::LocalBound,
        CheckKind::DensityBound,
        CheckKind::Transitive,
        CheckKind::RatioChain,
        CheckKind::MuVsAv,
    ];

    /// Checks that apply to any connected graph and stay cheap at small orders.
    pub const DEFAULT_SCAN: [CheckKind; 10] = [
        CheckKind::MinPath,
        CheckKind::MaxClique,
        CheckKind::EdgeDeletion,
        CheckKind::EdgeAddition,
        CheckKind::Contraction,
        CheckKind::LocalGlobal,
        CheckKind::LocalBound,
        CheckKind::DensityBound,
        CheckKind::RatioChain,
        CheckKind::MuVsAv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::MinPath => "min-path",
            CheckKind::MaxClique => "max-clique",
            CheckKind::EdgeDeletion => "edge-deletion",
            CheckKind::EdgeAddition => "edge-addition",
            CheckKind::EdgeAdditionClasses => "edge-addition-classes",
            CheckKind::Matchings => "matchings",
            CheckKind::Contraction => "contraction",
            CheckKind::LocalGlobal => "local-global",
            CheckKind::LocalBound => "local-bound",
            CheckKind::DensityBound => "density-bound",
            CheckKind::Transitive => "transitive",
            CheckKind::RatioChain => "ratio-chain",
            CheckKind::MuVsAv => "mu-vs-av",
        }
    }

    pub fn run(self, a: &Analysis) -> Result<CheckVerdict> {
        match self {
            CheckKind::MinPath => checks::min_path(a),
            CheckKind::MaxClique => checks::max_clique(a),
            CheckKind::EdgeDeletion => checks::edge_deletion_exists(a),
            CheckKind::EdgeAddition => checks::edge_addition_exists(a),
            CheckKind::EdgeAdditionClasses => checks::edge_addition_classes(a),
            CheckKind::Matchings => checks::matchings(a),
            CheckKind::Contraction => checks::contraction(a),
            CheckKind::LocalGlobal => checks::local_global(a),
            CheckKind::LocalBound => checks::local_bound(a),
            CheckKind::DensityBound => checks::density_bound(a),
            CheckKind::Transitive => checks::transitive_inequalities(a),
            CheckKind::RatioChain => checks::ratio_chain(a),
            CheckKind::MuVsAv => checks::mu_vs_av(a),
        }
    }

    /// Parses a comma-separated list; `all` and `default` are accepted.
    pub fn parse_list(s: &str) -> Result<Vec<CheckKind>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "all" => out.extend(CheckKind::ALL),
                "default" => out.extend(CheckKind::DEFAULT_SCAN),
                name => out.push(name.parse()?),
            }
        }
        let mut seen = std::collections::HashSet::new();
        out.retain(|k| seen.insert(*k));
        if out.is_empty() {
            return Err(Error::InvalidParameter("no checks selected".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('_', "-");
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::Unknown {
                kind: "check",
                name: s.to_string(),
            })
    }
}

/// A graph with lazily computed, shared derived data.
pub struct Analysis<'a> {
    g: &'a Graph,
    id: String,
    census: OnceCell<SubtreeCensus>,
    certificate: OnceCell<Certificate>,
    record_runtime: bool,
}

impl<'a> Analysis<'a> {
    /// Identifies the graph by its graph6 string.
    pub fn new(g: &'a Graph) -> Result<Self> {
        Ok(Analysis::with_id(g, to_graph6(g)?))
    }

    pub fn with_id(g: &'a Graph, id: impl Into<String>) -> Self {
        Analysis {
            g,
            id: id.into(),
            census: OnceCell::new(),
            certificate: OnceCell::new(),
            record_runtime: true,
        }
    }

    /// With `false`, verdicts report `runtime_ms = 0` so output is reproducible.
    pub fn record_runtime(mut self, on: bool) -> Self {
        self.record_runtime = on;
        self
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn census(&self) -> Result<&SubtreeCensus> {
        if let Some(c) = self.census.get() {
            return Ok(c);
        }
        let c = census(self.g)?;
        Ok(self.census.get_or_init(|| c))
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.g.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn mu(&self) -> Result<Ratio> {
        self.require_connected()?;
        self.census()?.mu()
    }

    pub fn certificate(&self) -> Result<&Certificate> {
        if let Some(c) = self.certificate.get() {
            return Ok(c);
        }
        let c = canonical_form(self.g)?;
        Ok(self.certificate.get_or_init(|| c))
    }

    /// Isomorphism with a named family member of the same order.
    pub fn is_isomorphic_to(&self, spec: FamilySpec) -> Result<bool> {
        if spec.order() != self.order() {
            return Ok(false);
        }
        let h = build_family(&spec)?;
        if h.edge_count() != self.g.edge_count() {
            return Ok(false);
        }
        Ok(*self.certificate()? == canonical_form(&h)?)
    }

    pub fn is_path(&self) -> Result<bool> {
        self.is_isomorphic_to(FamilySpec::Path { n: self.order() })
    }

    pub fn is_complete(&self) -> bool {
        2 * self.g.edge_count() == self.order() * (self.order() - 1)
    }

    pub fn is_star(&self) -> Result<bool> {
        self.is_isomorphic_to(FamilySpec::Star { n: self.order() })
    }

    pub(crate) fn verdict(
        &self,
        check: &str,
        outcome: Outcome,
        witness: serde_json::Value,
        started: Instant,
    ) -> CheckVerdict {
        let mu = self.mu().ok();
        CheckVerdict {
            check: check.to_string(),
            graph: self.id.clone(),
            status: outcome.status,
            violation: outcome.violation,
            witness,
            mu: mu.as_ref().map(ratio_string),
            mu_float: mu.as_ref().map(|m| sig12(to_f64(m)).parse().expect("decimal")),
            runtime_ms: if self.record_runtime {
                started.elapsed().as_millis() as u64
            } else {
                0
            },
        }
    }
}

/// Status and violation flag of a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Outcome {
    pub status: Status,
    pub violation: bool,
}

impl Outcome {
    /// A proven statement: a violation is a failure.
    pub fn theorem(ok: bool) -> Self {
        Outcome {
            status: if ok { Status::Holds } else { Status::Fails },
            violation: !ok,
        }
    }

    /// An open statement: a violation is a finding, reported only.
    pub fn conjecture(ok: bool) -> Self {
        Outcome {
            status: if ok { Status::Holds } else { Status::ReportOnly },
            violation: !ok,
        }
    }

    /// A statement verified up to some order: fails below it, reports above.
    pub fn verified_up_to(ok: bool, verified: bool) -> Self {
        if verified {
            Outcome::theorem(ok)
        } else {
            Outcome::conjecture(ok)
        }
    }

    pub fn report() -> Self {
        Outcome {
            status: Status::ReportOnly,
            violation: false,
        }
    }
}
