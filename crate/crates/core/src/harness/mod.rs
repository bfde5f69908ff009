//! Exhaustive checks of structural statements about the absorbing
//! predicates. Each registered property pairs a hypothesis with a
//! conclusion and is evaluated on every instance of a [`Desk`]; the verdict
//! keeps counts of instances scanned, hypothesis hits and failures, plus a
//! few replayable failure witnesses.
//!
//! ```no_run
//! use hyperideal::harness::{run_all, Desk, DeskSpec};
//!
//! let desk = Desk::build(&DeskSpec::default(), 0).unwrap();
//! let verdicts = run_all(&desk);
//! print!("{}", hyperideal::harness::report(&desk, &verdicts));
//! ```

mod desk;
mod properties;

use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use desk::{Desk, DeskSpec, MatrixGrid, ProductCase, ProductGrid, RingCase, ZmtGrid, ZmtSpec, ZtGrid, ZtSpec};
pub use properties::registry;

/// A registered statement: hypothesis and conclusion in words, and the scan
/// that checks it.
#[derive(Clone, Copy)]
pub struct TheoremProperty {
    pub id: &'static str,
    pub hypothesis: &'static str,
    pub conclusion: &'static str,
    pub(crate) run: fn(&Desk, &mut Scan),
}

impl fmt::Debug for TheoremProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TheoremProperty").field("id", &self.id).finish()
    }
}

/// What one instance contributed.
pub enum Outcome {
    /// The hypothesis does not hold.
    Skip,
    Pass,
    /// The conclusion failed; the string locates the instance.
    Fail(String),
}

impl Outcome {
    pub fn check(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(witness())
        }
    }
}

/// Running counts for one property.
pub struct Scan {
    budget: u64,
    limit: usize,
    scanned: u64,
    hits: u64,
    failures: u64,
    witnesses: Vec<String>,
    incomplete: bool,
}

impl Scan {
    fn new(budget: u64, limit: usize) -> Self {
        Scan {
            budget,
            limit,
            scanned: 0,
            hits: 0,
            failures: 0,
            witnesses: Vec::new(),
            incomplete: false,
        }
    }

    /// Evaluate one instance. Once the budget is spent the closure is no
    /// longer called and the verdict is marked incomplete.
    pub fn visit(&mut self, instance: impl FnOnce() -> Outcome) {
        if self.scanned >= self.budget {
            self.incomplete = true;
            return;
        }
        self.scanned += 1;
        match instance() {
            Outcome::Skip => {}
            Outcome::Pass => self.hits += 1,
            Outcome::Fail(w) => {
                self.hits += 1;
                self.failures += 1;
                if self.witnesses.len() < self.limit {
                    self.witnesses.push(w);
                }
            }
        }
    }

    pub fn exhausted(&self) -> bool {
        self.incomplete
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    Incomplete,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
            Status::Incomplete => "INCOMPLETE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub id: &'static str,
    pub hypothesis: &'static str,
    pub conclusion: &'static str,
    pub scanned: u64,
    pub hits: u64,
    pub failures: u64,
    pub witnesses: Vec<String>,
    pub incomplete: bool,
}

impl TheoremVerdict {
    /// Failures dominate; a cut-short scan is never reported as passing.
    pub fn status(&self) -> Status {
        if self.failures > 0 {
            Status::Fail
        } else if self.incomplete {
            Status::Incomplete
        } else if self.hits == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        }
    }
}

pub fn find(id: &str) -> Result<TheoremProperty> {
    registry()
        .iter()
        .find(|p| p.id == id)
        .copied()
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

pub fn run(property: &TheoremProperty, desk: &Desk) -> TheoremVerdict {
    let mut scan = Scan::new(desk.spec.budget, desk.spec.witness_limit);
    (property.run)(desk, &mut scan);
    TheoremVerdict {
        id: property.id,
        hypothesis: property.hypothesis,
        conclusion: property.conclusion,
        scanned: scan.scanned,
        hits: scan.hits,
        failures: scan.failures,
        witnesses: scan.witnesses,
        incomplete: scan.incomplete,
    }
}

pub fn run_property(id: &str, desk: &Desk) -> Result<TheoremVerdict> {
    Ok(run(&find(id)?, desk))
}

/// Every registered property, in registry order.
pub fn run_all(desk: &Desk) -> Vec<TheoremVerdict> {
    registry().par_iter().map(|p| run(p, desk)).collect()
}

/// The plain-text report: a header describing the desk, one block per
/// verdict and a summary line. Contains no timings, so equal desks and
/// seeds give byte-identical reports.
pub fn report(desk: &Desk, verdicts: &[TheoremVerdict]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "hyperideal verify report");
    let _ = writeln!(out, "seed: {}", desk.seed);
    let _ = writeln!(
        out,
        "desk: {} rings ({} base, {} products), {} matrix bases, {} ZT contexts, max_u = {}",
        desk.rings.len(),
        desk.base_count,
        desk.products.len(),
        desk.matrix_bases.len(),
        desk.zt.len(),
        desk.spec.max_u
    );
    for v in verdicts {
        let _ = writeln!(out);
        let _ = writeln!(out, "[{}] {}", v.id, v.status());
        let _ = writeln!(out, "  hypothesis: {}", v.hypothesis);
        let _ = writeln!(out, "  conclusion: {}", v.conclusion);
        let _ = writeln!(
            out,
            "  scanned: {}  hits: {}  failures: {}{}",
            v.scanned,
            v.hits,
            v.failures,
            if v.incomplete { "  (budget exhausted)" } else { "" }
        );
        for w in &v.witnesses {
            let _ = writeln!(out, "  witness: {w}");
        }
    }
    let count = |s: Status| verdicts.iter().filter(|v| v.status() == s).count();
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "summary: {} properties, {} PASS, {} FAIL, {} VACUOUS, {} INCOMPLETE",
        verdicts.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Vacuous),
        count(Status::Incomplete)
    );
    out
}
