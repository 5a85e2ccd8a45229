//! Exhaustive consistency sweeps over small parameters. Each suite compares
//! two or more independent computations and reports every disagreement as a
//! one-line reproducer.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cfun::{pole_order_pair, pole_order_short_blockwise, pole_order_short_direct, PairSign};
use crate::error::Result;
use crate::oracle::{brute_force, OracleConfig};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::Rational;
use crate::rgroup::{
    can_glue_split, generator, gluable_lengths, glue_strip_geometric, restricted_root_system, InductionDatum,
};
use crate::splitting::{is_residual_point, split};
use crate::symbols::{
    component_group_order_m1, interval_comparison, residual_class, springer_correspondents_for, symbol,
    truncated_induct, SymbolVariant,
};
use crate::weyl::is_elementary_abelian_2_group;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    /// Largest `|λ|` in the split/residual suite.
    pub residual_l: usize,
    /// Largest `|μ|` in the gluing suite.
    pub gluing_l: usize,
    /// Largest strip length in the gluing and pair suites.
    pub strip_p: usize,
    /// Largest `2m` in the split/residual and gluing suites.
    pub twice_m: u32,
    /// Largest `n` in the oracle and symbol suites.
    pub n: usize,
    /// Largest `2m` in the oracle and symbol suites.
    pub oracle_twice_m: u32,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            residual_l: 12,
            gluing_l: 10,
            strip_p: 12,
            twice_m: 12,
            n: 8,
            oracle_twice_m: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Suite {
    Residual,
    Gluing,
    Pairs,
    Oracle,
    Symbols,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Residual,
        Suite::Gluing,
        Suite::Pairs,
        Suite::Oracle,
        Suite::Symbols,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Residual => "residual",
            Suite::Gluing => "gluing",
            Suite::Pairs => "pairs",
            Suite::Oracle => "oracle",
            Suite::Symbols => "symbols",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `0, 1/2, 1, …, max_twice / 2`.
pub fn half_steps(max_twice: u32) -> Vec<Rational> {
    (0..=max_twice as i64).map(|t| Rational::new(t, 2)).collect()
}

fn all_partitions_up_to(max: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for l in 0..=max {
        out.extend(enumerate_partitions(l)?);
    }
    Ok(out)
}

fn finish(suite: Suite, start: Instant, results: Vec<(usize, Vec<String>)>) -> SweepReport {
    let cases = results.iter().map(|(c, _)| c).sum();
    let failures = results.into_iter().flat_map(|(_, f)| f).collect();
    SweepReport {
        suite: suite.name().to_string(),
        cases,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Split defined exactly on residual points.
pub fn residual_suite(bounds: &SweepBounds) -> Result<SweepReport> {
    let start = Instant::now();
    let lambdas: Vec<Partition> = all_partitions_up_to(bounds.residual_l)?
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect();
    let ms = half_steps(bounds.twice_m);
    let results = lambdas
        .par_iter()
        .map(|lambda| {
            let mut failures = Vec::new();
            for m in &ms {
                let defined = split(lambda, m).is_some();
                let residual = is_residual_point(lambda, m);
                if defined != residual {
                    failures.push(format!(
                        "residual: lambda={lambda} m={m} split_defined={defined} residual={residual}"
                    ));
                }
            }
            (ms.len(), failures)
        })
        .collect();
    Ok(finish(Suite::Residual, start, results))
}

/// Gluing rule, direct pole order and geometric search agree; the blockwise
/// pole order equals the direct one and never exceeds one.
pub fn gluing_suite(bounds: &SweepBounds) -> Result<SweepReport> {
    let start = Instant::now();
    let mus = all_partitions_up_to(bounds.gluing_l)?;
    let ms = half_steps(bounds.twice_m);
    let jobs: Vec<(Partition, Rational)> = mus
        .iter()
        .flat_map(|mu| ms.iter().map(move |m| (mu.clone(), m.clone())))
        .collect();
    let results = jobs
        .par_iter()
        .map(|(mu, m)| {
            let Some(s) = split(mu, m) else {
                return (0, Vec::new());
            };
            let mut failures = Vec::new();
            for p in 1..=bounds.strip_p {
                let rule = can_glue_split(p, &s, m);
                let direct = pole_order_short_direct(p, mu, m);
                let blockwise = pole_order_short_blockwise(p, &s, m);
                let geometric = !glue_strip_geometric(mu, p, m).is_empty();
                if rule != (direct == 0) || rule != geometric || blockwise != direct || !(0..=1).contains(&direct) {
                    failures.push(format!(
                        "gluing: p={p} mu={mu} m={m} rule={rule} direct={direct} blockwise={blockwise} geometric={geometric}"
                    ));
                }
            }
            (bounds.strip_p, failures)
        })
        .collect();
    Ok(finish(Suite::Gluing, start, results))
}

/// Pair pole order is one exactly for equal block sizes.
pub fn pairs_suite(bounds: &SweepBounds) -> Result<SweepReport> {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for p1 in 1..=bounds.strip_p {
        for p2 in 1..=bounds.strip_p {
            for sign in [PairSign::Plus, PairSign::Minus] {
                cases += 1;
                let got = pole_order_pair(p1, p2, sign);
                let want = i64::from(p1 == p2);
                if got != want {
                    failures.push(format!("pairs: p1={p1} p2={p2} sign={sign:?} order={got} expected={want}"));
                }
            }
        }
    }
    Ok(finish(Suite::Pairs, start, vec![(cases, failures)]))
}

/// Every valid datum with rank `1..=max_n` and the given `m` values.
pub fn valid_data(max_n: usize, ms: &[Rational]) -> Result<Vec<InductionDatum>> {
    let mut out = Vec::new();
    for m in ms {
        for n in 1..=max_n {
            for l in 0..=n {
                let residual: Vec<Partition> = enumerate_partitions(l)?
                    .into_iter()
                    .filter(|mu| mu.is_empty() || is_residual_point(mu, m))
                    .collect();
                let kappas = enumerate_partitions(n - l)?;
                for mu in &residual {
                    for kappa in &kappas {
                        out.push(InductionDatum::new(n, m.clone(), kappa.clone(), mu.clone())?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Checks one datum against the exhaustive enumeration.
pub fn oracle_failures(datum: &InductionDatum, config: &OracleConfig) -> Result<Vec<String>> {
    let outcome = brute_force(datum, config)?;
    let d = gluable_lengths(datum).len();
    let tag = format!("oracle: n={} m={} kappa={} mu={}", datum.n, datum.m, datum.kappa, datum.mu);
    let mut failures = Vec::new();
    if outcome.r_group.len() != 1 << d || !is_elementary_abelian_2_group(&outcome.r_group) {
        failures.push(format!("{tag} |R|={} expected elementary abelian of order 2^{d}", outcome.r_group.len()));
    }
    for k in 0..d {
        let g = generator(datum, k)?;
        if outcome.r_group.binary_search(&g).is_err() {
            failures.push(format!("{tag} generator {g} not in R"));
        }
    }
    let w0 = restricted_root_system(datum).weyl_group_order();
    let expected = w0 << d;
    if num_bigint::BigUint::from(outcome.w_xi_xi_order) != expected {
        failures.push(format!("{tag} |W_xi_xi|={} expected {expected}", outcome.w_xi_xi_order));
    }
    Ok(failures)
}

/// Exhaustive R-group and `𝒲_{ξ,ξ}` cardinality over all small data.
pub fn oracle_suite(bounds: &SweepBounds, config: &OracleConfig) -> Result<SweepReport> {
    let start = Instant::now();
    let data = valid_data(bounds.n.min(config.bound), &half_steps(bounds.oracle_twice_m))?;
    let results = data
        .iter()
        .map(|datum| oracle_failures(datum, config).map(|f| (1, f)))
        .collect::<Result<Vec<_>>>()?;
    Ok(finish(Suite::Oracle, start, results))
}

/// Symbol-side checks for one datum: class cardinality, interval relation,
/// the `m = 1` component-group quotient and agreement of the two zero variants.
pub fn symbol_failures(datum: &InductionDatum) -> Result<Vec<String>> {
    let tag = format!("symbols: n={} m={} kappa={} mu={}", datum.n, datum.m, datum.kappa, datum.mu);
    let mut failures = Vec::new();
    let variants = SymbolVariant::all_for_m(&datum.m)?;
    let variant = variants[0];
    let d = gluable_lengths(datum).len();
    let seed = residual_class(datum, variant)?;
    let full = truncated_induct(datum.kappa.parts(), &seed);
    if full.len() != seed.len() << d {
        failures.push(format!("{tag} |class|={} expected 2^{d}*{}", full.len(), seed.len()));
    }
    let a_values: std::collections::BTreeSet<i64> = full.a_values().into_iter().collect();
    if a_values.len() != 1 {
        failures.push(format!("{tag} a-values {a_values:?} not constant"));
    }
    let cmp = interval_comparison(datum)?;
    if !cmp.holds() {
        failures.push(format!("{tag} intervals full={:?} part={} d={}", cmp.full, cmp.part, cmp.d));
    }
    if variant == SymbolVariant::IntM(1) {
        if let Some(full_count) = cmp.full.filter(|&c| c >= 1 && cmp.part >= 1) {
            let rep = full.representative().expect("non-empty class");
            let big = component_group_order_m1(&symbol(rep, variant))?;
            let small = component_group_order_m1(&symbol(&datum.split().bipartition, variant))?;
            if big != small << d {
                failures.push(format!(
                    "{tag} component groups {big}/{small} != 2^{d} (intervals {full_count}/{})",
                    cmp.part
                ));
            }
        }
    }
    for &other in &variants[1..] {
        if springer_correspondents_for(datum, other)?.members != full.members {
            failures.push(format!("{tag} variants {variant} and {other} disagree"));
        }
    }
    Ok(failures)
}

pub fn symbols_suite(bounds: &SweepBounds) -> Result<SweepReport> {
    let start = Instant::now();
    let data = valid_data(bounds.n, &half_steps(bounds.oracle_twice_m))?;
    let results = data
        .par_iter()
        .map(|datum| symbol_failures(datum).map(|f| (1, f)))
        .collect::<Result<Vec<_>>>()?;
    Ok(finish(Suite::Symbols, start, results))
}

pub fn run_suite(suite: Suite, bounds: &SweepBounds, config: &OracleConfig) -> Result<SweepReport> {
    match suite {
        Suite::Residual => residual_suite(bounds),
        Suite::Gluing => gluing_suite(bounds),
        Suite::Pairs => pairs_suite(bounds),
        Suite::Oracle => oracle_suite(bounds, config),
        Suite::Symbols => symbols_suite(bounds),
    }
}
