//! Named verification suites over every partition up to a size bound.
//!
//! Every partition touched by a suite, including partitions reached by adding
//! cells, has size at most `max_size`. A check that raises an error counts as
//! a failure and its message becomes the witness.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::rat;
use crate::partition::{factorial, partitions_of, partitions_up_to, skew_syt_count, vandermonde, Partition};
use crate::plancherel;
use crate::symfunc::{
    dual_jacobi_trudi, mn_multiply_p, p_gen, schur, schur_combination, schur_newton_lhs_rhs,
};
use crate::wapoly::{rho_transform, Integrality, Route, WapEngine};

const MAX_HOOK: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    Appell,
    Routes,
    Derivative,
    Topdown,
    Genrec,
    Dual,
    DoubleDual,
    SelfDual,
    Integrality,
    Mean,
    SecondMoment,
    VarianceBound,
    NewtonSchur,
    HookFormula,
    MnRule,
    DualJacobiTrudi,
    RhoTransform,
}

impl Identity {
    pub const ALL: [Identity; 17] = [
        Identity::Appell,
        Identity::Routes,
        Identity::Derivative,
        Identity::Topdown,
        Identity::Genrec,
        Identity::Dual,
        Identity::DoubleDual,
        Identity::SelfDual,
        Identity::Integrality,
        Identity::Mean,
        Identity::SecondMoment,
        Identity::VarianceBound,
        Identity::NewtonSchur,
        Identity::HookFormula,
        Identity::MnRule,
        Identity::DualJacobiTrudi,
        Identity::RhoTransform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Appell => "appell",
            Identity::Routes => "routes",
            Identity::Derivative => "derivative",
            Identity::Topdown => "topdown",
            Identity::Genrec => "genrec",
            Identity::Dual => "dual",
            Identity::DoubleDual => "double-dual",
            Identity::SelfDual => "self-dual",
            Identity::Integrality => "integrality",
            Identity::Mean => "mean",
            Identity::SecondMoment => "second-moment",
            Identity::VarianceBound => "variance-bound",
            Identity::NewtonSchur => "newton-schur",
            Identity::HookFormula => "hook-formula",
            Identity::MnRule => "mn-rule",
            Identity::DualJacobiTrudi => "dual-jacobi-trudi",
            Identity::RhoTransform => "rho-transform",
        }
    }

    /// Parses a suite name or `all`.
    pub fn parse_selector(s: &str) -> Result<Vec<Identity>> {
        if s.trim() == "all" {
            Ok(Identity::ALL.to_vec())
        } else {
            Ok(vec![s.parse()?])
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown identity '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = &self.partition {
            write!(f, "λ = {p}")?;
        } else if let Some(n) = self.n {
            write!(f, "n = {n}")?;
        }
        if let Some(k) = self.k {
            write!(f, ", k = {k}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub identity: &'static str,
    pub status: Status,
    pub checked: usize,
    pub passed: usize,
    pub skipped: usize,
    pub witnesses: Vec<Witness>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// One unit of work: its label and the outcome (`None` = not applicable).
#[derive(Clone)]
struct Item {
    partition: Option<Partition>,
    n: Option<usize>,
    k: Option<usize>,
}

impl Item {
    fn lambda(p: Partition) -> Self {
        Item { partition: Some(p), n: None, k: None }
    }
    fn size(n: usize) -> Self {
        Item { partition: None, n: Some(n), k: None }
    }
    fn hook(p: Partition, k: usize) -> Self {
        Item { partition: Some(p), n: None, k: Some(k) }
    }
    fn part(&self) -> &Partition {
        self.partition.as_ref().expect("item indexed by a partition")
    }
}

fn run_items(
    identity: Identity,
    items: Vec<Item>,
    check: impl Fn(&Item) -> Result<Option<bool>> + Sync,
) -> SuiteReport {
    let outcomes: Vec<(Item, Result<Option<bool>>)> = items
        .into_par_iter()
        .map(|item| {
            let out = check(&item);
            (item, out)
        })
        .collect();
    let mut report = SuiteReport {
        identity: identity.name(),
        status: Status::Pass,
        checked: 0,
        passed: 0,
        skipped: 0,
        witnesses: Vec::new(),
    };
    for (item, outcome) in outcomes {
        let detail = match outcome {
            Ok(None) => {
                report.skipped += 1;
                continue;
            }
            Ok(Some(true)) => {
                report.checked += 1;
                report.passed += 1;
                continue;
            }
            Ok(Some(false)) => "identity does not hold".to_string(),
            Err(e) => e.to_string(),
        };
        report.checked += 1;
        report.witnesses.push(Witness {
            partition: item.partition,
            n: item.n,
            k: item.k,
            detail,
        });
    }
    if !report.witnesses.is_empty() {
        report.status = Status::Fail;
    }
    report
}

fn lambdas(max_size: usize, min_size: usize) -> Vec<Item> {
    partitions_up_to(max_size)
        .into_iter()
        .filter(|l| l.size() >= min_size)
        .map(Item::lambda)
        .collect()
}

fn sizes(range: impl Iterator<Item = usize>) -> Vec<Item> {
    range.map(Item::size).collect()
}

/// Pairs `(λ, k)` with `1 ≤ k ≤ 4` and `|λ| + k ≤ max_size`.
fn hooks(max_size: usize) -> Vec<Item> {
    let mut out = Vec::new();
    for lambda in partitions_up_to(max_size) {
        for k in 1..=MAX_HOOK {
            if lambda.size() + k <= max_size {
                out.push(Item::hook(lambda.clone(), k));
            }
        }
    }
    out
}

fn appell_item(engine: &WapEngine, n: usize) -> Result<Option<bool>> {
    let spec = engine.spec();
    let a = spec.appell_poly(n)?;
    let shape = a.degree() == Some(n) && a.is_monic();
    let derivative = n == 0 || a.derivative(1) == spec.appell_poly(n - 1)?.scale(&rat(n as i64));
    let row = engine.get(&Partition::row(n))? == a;
    Ok(Some(shape && derivative && row))
}

fn routes_item(engine: &WapEngine, lambda: &Partition) -> Result<Option<bool>> {
    let direct = engine.compute(lambda, Route::Direct)?;
    let phi = engine.compute(lambda, Route::Phi)?;
    let rec = engine.compute(lambda, Route::Recurrence)?;
    if direct != phi || direct != rec {
        return Err(Error::RouteDisagreement {
            partition: lambda.to_string(),
            first: "direct",
            second: if direct != phi { "phi" } else { "recurrence" },
            first_value: direct.to_string(),
            second_value: if direct != phi { phi } else { rec }.to_string(),
        });
    }
    Ok(Some(direct.degree() == Some(lambda.size()) && direct.is_monic()))
}

fn hook_formula_item(n: usize) -> Result<Option<bool>> {
    let mut sum_sq = BigUint::from(0u32);
    for lambda in partitions_of(n) {
        let f = lambda.syt_count();
        if f != skew_syt_count(&lambda, &Partition::empty()) {
            return Ok(Some(false));
        }
        let degrees = lambda.degree_vector();
        let signed: Vec<i64> = degrees.iter().map(|&d| d as i64).collect();
        let lhs = BigInt::from(lambda.hook_product()) * vandermonde(&signed);
        let rhs: BigUint = degrees.iter().map(|&d| factorial(d)).product();
        if lhs != BigInt::from(rhs) {
            return Ok(Some(false));
        }
        sum_sq += &f * &f;
    }
    Ok(Some(sum_sq == factorial(n)))
}

/// Runs one suite for the engine's sequence.
pub fn run_suite(engine: &WapEngine, identity: Identity, max_size: usize) -> SuiteReport {
    match identity {
        Identity::Appell => run_items(identity, sizes(0..=max_size), |it| {
            appell_item(engine, it.n.expect("size item"))
        }),
        Identity::Routes => run_items(identity, lambdas(max_size, 0), |it| {
            routes_item(engine, it.part())
        }),
        Identity::Derivative => run_items(identity, lambdas(max_size, 1), |it| {
            engine.derivative_identity_check(it.part()).map(Some)
        }),
        Identity::Topdown => run_items(identity, hooks(max_size), |it| {
            engine
                .topdown_check(it.part(), it.k.expect("hook item"))
                .map(Some)
        }),
        Identity::Genrec => run_items(identity, lambdas(max_size, 0), |it| {
            engine.genrec_check(it.part()).map(Some)
        }),
        Identity::Dual => run_items(identity, lambdas(max_size, 0), |it| {
            engine.dual_check(it.part()).map(Some)
        }),
        Identity::DoubleDual => run_items(identity, lambdas(max_size, 0), |it| {
            engine.double_dual_check(it.part()).map(Some)
        }),
        Identity::SelfDual => run_items(identity, sizes(std::iter::once(max_size)), |it| {
            engine
                .self_duality(it.n.expect("size item"))
                .map(|s| Some(s.consistent()))
        }),
        Identity::Integrality => run_items(identity, lambdas(max_size, 0), |it| {
            engine.integrality_check(it.part()).map(|r| match r {
                Integrality::HypothesisFails => None,
                other => Some(other.passes()),
            })
        }),
        Identity::Mean => run_items(identity, sizes(0..=max_size), |it| {
            plancherel::mean(engine, it.n.expect("size item")).map(|_| Some(true))
        }),
        Identity::SecondMoment => run_items(identity, sizes(0..=max_size), |it| {
            plancherel::second_moment(engine, it.n.expect("size item")).map(|_| Some(true))
        }),
        Identity::VarianceBound => run_items(identity, sizes(2.min(max_size + 1)..=max_size), |it| {
            plancherel::variance(engine, it.n.expect("size item")).map(|(_, ok)| Some(ok))
        }),
        Identity::NewtonSchur => run_items(identity, lambdas(max_size, 1), |it| {
            let (lhs, rhs) = schur_newton_lhs_rhs(it.part());
            Ok(Some(lhs == rhs))
        }),
        Identity::HookFormula => run_items(identity, sizes(0..=max_size), |it| {
            hook_formula_item(it.n.expect("size item"))
        }),
        Identity::MnRule => run_items(identity, hooks(max_size), |it| {
            let k = it.k.expect("hook item");
            let direct = &p_gen(k)? * &schur(it.part());
            Ok(Some(schur_combination(&mn_multiply_p(k, it.part())) == direct))
        }),
        Identity::DualJacobiTrudi => run_items(identity, lambdas(max_size, 0), |it| {
            let conj = schur(&it.part().conjugate());
            Ok(Some(dual_jacobi_trudi(it.part()) == conj && schur(it.part()).omega() == conj))
        }),
        Identity::RhoTransform => {
            let params = engine.spec().exp_rt_params(max_size);
            run_items(identity, lambdas(max_size, 0), |it| {
                let Some((_, r)) = params.clone()? else {
                    return Ok(None);
                };
                let lambda = it.part();
                let a = engine.get(lambda)?;
                let conj = engine.get(&lambda.conjugate())?;
                Ok(Some(rho_transform(&a, &conj, r, lambda.size())))
            })
        }
    }
}

/// Runs the selected suites in the given order.
pub fn run_suites(engine: &WapEngine, identities: &[Identity], max_size: usize) -> Vec<SuiteReport> {
    identities
        .iter()
        .map(|&id| run_suite(engine, id, max_size))
        .collect()
}
