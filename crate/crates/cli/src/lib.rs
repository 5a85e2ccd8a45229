//! Commands behind the `hecke-rgroup` binary. Each command returns a plain
//! serializable record; formatting and exit codes live in `main.rs` and
//! [`text`].

pub mod report;
pub mod text;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use hecke_rgroup::cfun::{pole_order_pair, pole_order_short_blockwise, pole_order_short_direct, PairSign};
use hecke_rgroup::oracle::{brute_force, in_w_xi_xi, CosetCondition, OracleConfig};
use hecke_rgroup::partition::enumerate_partitions;
use hecke_rgroup::rgroup::{
    can_glue_split, convert_c_labels, glue_strip_geometric, r_group, restricted_root_system,
};
use hecke_rgroup::splitting::{central_character, is_residual_point, residual_diagnostics};
use hecke_rgroup::sweeps::{self, Suite, SweepBounds, SweepReport};
use hecke_rgroup::symbols::{
    a_m, cardinality_check, interval_comparison, intervals, residual_class, similarity_class,
    springer_correspondents, symbol, SymbolVariant,
};
use hecke_rgroup::tableau::m_tableau;
use hecke_rgroup::weyl::{is_elementary_abelian_2_group, SignedPermutation};
use hecke_rgroup::{split, Bipartition, Error, InductionDatum, Partition, Rational, Result};

use report::*;

fn symbol_echo(b: &Bipartition, variant: SymbolVariant) -> SymbolEcho {
    let s = symbol(b, variant);
    SymbolEcho {
        bipartition: b.clone(),
        intervals: intervals(&s),
        a_value: a_m(b, variant),
        top: s.top,
        bottom: s.bottom,
    }
}

fn generator_echo(length: usize, g: &SignedPermutation) -> GeneratorEcho {
    GeneratorEcho {
        length,
        one_line: g.one_line(),
        word: g.reduced_word(),
        images: g.image_table(),
    }
}

fn root_label(root: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in root.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&format!("E{}", i + 1));
    }
    out
}

/// Pole orders for every candidate restricted root: `E_i ± E_j` from the pair
/// factor, `E_i` from the short factor against `μ`.
fn pole_orders(datum: &InductionDatum) -> Vec<PoleOrder> {
    let parts = datum.kappa.parts();
    let system = restricted_root_system(datum);
    let r = parts.len();
    let mut out = Vec::new();
    let mut push = |root: Vec<i64>, order: i64| {
        out.push(PoleOrder {
            label: root_label(&root),
            in_restricted_system: system.contains_positive(&root),
            root,
            order,
        });
    };
    for i in 0..r {
        for j in i + 1..r {
            for (sign, c) in [(PairSign::Minus, -1), (PairSign::Plus, 1)] {
                let mut root = vec![0; r];
                root[i] = 1;
                root[j] = c;
                push(root, pole_order_pair(parts[i], parts[j], sign));
            }
        }
    }
    for (i, &p) in parts.iter().enumerate() {
        let mut root = vec![0; r];
        root[i] = 1;
        push(root, pole_order_short_direct(p, &datum.mu, &datum.m));
    }
    out
}

/// Gluing rule, direct and blockwise pole orders and the geometric search
/// agree for every part length of κ.
fn gluing_agrees(datum: &InductionDatum) -> bool {
    let s = datum.split();
    let lengths: BTreeSet<usize> = datum.kappa.parts().iter().copied().collect();
    lengths.into_iter().all(|p| {
        let rule = can_glue_split(p, &s, &datum.m);
        let direct = pole_order_short_direct(p, &datum.mu, &datum.m);
        let blockwise = pole_order_short_blockwise(p, &s, &datum.m);
        let geometric = !glue_strip_geometric(&datum.mu, p, &datum.m).is_empty();
        rule == (direct == 0) && rule == geometric && blockwise == direct
    })
}

fn generators_well_formed(datum: &InductionDatum, generators: &[SignedPermutation]) -> bool {
    let identity = SignedPermutation::identity(datum.n);
    generators.iter().all(|g| {
        g.compose(g) == identity
            && in_w_xi_xi(datum, g, CosetCondition::PositiveSystem)
            && generators.iter().all(|h| g.compose(h) == h.compose(g))
    })
}

/// Full report for one induction datum. With `oracle`, data of rank at most
/// the oracle bound are also enumerated exhaustively and compared.
pub fn cmd_rgroup(datum: &InductionDatum, oracle: Option<&OracleConfig>) -> Result<Report> {
    let result = r_group(datum);
    let system = restricted_root_system(datum);
    let pole_orders = pole_orders(datum);
    let mut checks = BTreeMap::new();
    let mut notes = Vec::new();

    checks.insert(
        "poleOrdersMatchRootSystem".to_string(),
        pole_orders.iter().all(|p| p.in_restricted_system == (p.order == 1)),
    );
    checks.insert("gluingAgreement".to_string(), gluing_agrees(datum));
    checks.insert(
        "generatorsCommuteAndFixXi".to_string(),
        generators_well_formed(datum, &result.generators),
    );

    let springer_class = match SymbolVariant::from_m(&datum.m) {
        Ok(variant) => {
            let class = springer_correspondents(datum)?;
            let seed = residual_class(datum, variant)?;
            checks.insert("cardinality".to_string(), cardinality_check(datum)?);
            checks.insert("intervals".to_string(), interval_comparison(datum)?.holds());
            Some(SpringerClass {
                variant: variant.to_string(),
                members: class.members.iter().map(|b| symbol_echo(b, variant)).collect(),
                seed_size: seed.len(),
            })
        }
        Err(Error::NoSymbolVariant(_)) => {
            notes.push(format!("no symbols for m = {}", datum.m));
            None
        }
        Err(e) => return Err(e),
    };

    let oracle = match oracle {
        Some(config) if datum.n <= config.bound => {
            let outcome = brute_force(datum, config)?;
            let expected_r = 1usize << result.d;
            checks.insert(
                "oracleRGroup".to_string(),
                outcome.r_group.len() == expected_r
                    && is_elementary_abelian_2_group(&outcome.r_group)
                    && result.generators.iter().all(|g| outcome.r_group.binary_search(g).is_ok()),
            );
            let expected_w = system.weyl_group_order() << result.d;
            checks.insert(
                "oracleWxixiOrder".to_string(),
                expected_w == outcome.w_xi_xi_order.into(),
            );
            Some(OracleSummary {
                bound: config.bound,
                w_xi_xi_order: outcome.w_xi_xi_order,
                r_group_order: outcome.r_group.len(),
                r_group: outcome.r_group.iter().map(SignedPermutation::one_line).collect(),
            })
        }
        Some(config) => {
            notes.push(format!("oracle skipped: n = {} exceeds bound {}", datum.n, config.bound));
            None
        }
        None => None,
    };

    let generators = result
        .gluable_lengths
        .iter()
        .zip(&result.generators)
        .map(|(&len, g)| generator_echo(len, g))
        .collect();

    Ok(Report {
        schema_version: SCHEMA_VERSION,
        datum: DatumEcho {
            n: datum.n,
            m: datum.m.clone(),
            kappa: datum.kappa.clone(),
            mu: datum.mu.clone(),
        },
        central_character: central_character(&datum.kappa, &datum.mu, &datum.m)?.exponents,
        residual_diagnostics: (!datum.mu.is_empty()).then(|| residual_diagnostics(&datum.mu, &datum.m)),
        split_result: datum.split(),
        pole_orders,
        weyl_group_order: system.weyl_group_order().to_string(),
        root_system_factors: system.factors,
        d: result.d,
        gluable_lengths: result.gluable_lengths,
        component_count: result.component_count,
        generators,
        component_labels: result.component_labels,
        springer_class,
        oracle,
        notes,
        checks,
    })
}

/// Every residual partition of `l` at `m`, with split and symbol.
pub fn cmd_residual(l: usize, m: &Rational) -> Result<ResidualListing> {
    let variant = SymbolVariant::from_m(m).ok();
    let points = enumerate_partitions(l)?
        .into_iter()
        .filter(|lambda| l == 0 || is_residual_point(lambda, m))
        .map(|lambda| {
            let bip = split(&lambda, m).expect("residual points split").bipartition;
            ResidualEntry {
                symbol: variant.map(|v| symbol_echo(&bip, v)),
                split: bip,
                lambda,
            }
        })
        .collect();
    Ok(ResidualListing {
        schema_version: SCHEMA_VERSION,
        l,
        m: m.clone(),
        points,
    })
}

/// Tableau, residual test and split of a single partition.
pub fn cmd_split(lambda: &Partition, m: &Rational) -> Result<SplitReport> {
    if m.is_negative() {
        return Err(Error::NegativeM(m.clone()));
    }
    let split_result = split(lambda, m);
    let variant = SymbolVariant::from_m(m).ok();
    Ok(SplitReport {
        schema_version: SCHEMA_VERSION,
        lambda: lambda.clone(),
        m: m.clone(),
        tableau: m_tableau(lambda, m).rows().to_vec(),
        diagnostics: residual_diagnostics(lambda, m),
        symbol: match (&split_result, variant) {
            (Some(s), Some(v)) => Some(symbol_echo(&s.bipartition, v)),
            _ => None,
        },
        split_result,
    })
}

/// Symbol, a-value, intervals and similarity class of a bipartition.
pub fn cmd_symbols(b: &Bipartition, m: &Rational) -> Result<SymbolsReport> {
    let variants = SymbolVariant::all_for_m(m)?
        .into_iter()
        .map(|v| {
            let class = similarity_class(b, v)?;
            Ok(VariantSymbols {
                variant: v.to_string(),
                symbol: symbol_echo(b, v),
                class: class.members.iter().map(|c| symbol_echo(c, v)).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymbolsReport {
        schema_version: SCHEMA_VERSION,
        bipartition: b.clone(),
        m: m.clone(),
        variants,
    })
}

fn table_row(datum: &InductionDatum) -> Result<TableRow> {
    let result = r_group(datum);
    let (class_size, cardinality, intervals) = match SymbolVariant::from_m(&datum.m) {
        Ok(_) => (
            Some(springer_correspondents(datum)?.len()),
            Some(cardinality_check(datum)?),
            Some(interval_comparison(datum)?.holds()),
        ),
        Err(_) => (None, None, None),
    };
    Ok(TableRow {
        n: datum.n,
        m: datum.m.clone(),
        kappa: datum.kappa.clone(),
        mu: datum.mu.clone(),
        d: result.d,
        component_count: result.component_count,
        gluable_lengths: result.gluable_lengths,
        class_size,
        cardinality,
        intervals,
        gluing: gluing_agrees(datum),
    })
}

/// One row per valid datum of rank exactly `n`, for each `m` in turn. Rows
/// are computed in parallel and returned in enumeration order.
pub fn cmd_table(n: usize, ms: &[Rational]) -> Result<Table> {
    let mut data = Vec::new();
    for m in ms {
        if m.is_negative() {
            return Err(Error::NegativeM(m.clone()));
        }
        for l in 0..=n {
            let kappas = enumerate_partitions(n - l)?;
            for mu in enumerate_partitions(l)? {
                if l > 0 && !is_residual_point(&mu, m) {
                    continue;
                }
                for kappa in &kappas {
                    data.push(InductionDatum::new(n, m.clone(), kappa.clone(), mu.clone())?);
                }
            }
        }
    }
    let rows = data.par_iter().map(table_row).collect::<Result<Vec<_>>>()?;
    Ok(Table {
        schema_version: SCHEMA_VERSION,
        n,
        ms: ms.to_vec(),
        rows,
    })
}

/// Runs the named suites (all when empty) in a fixed order.
pub fn cmd_selftest(suites: &[Suite], bounds: &SweepBounds, config: &OracleConfig) -> Result<Vec<SweepReport>> {
    let chosen: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        Suite::ALL.into_iter().filter(|s| suites.contains(s)).collect()
    };
    chosen
        .into_iter()
        .map(|s| sweeps::run_suite(s, bounds, config))
        .collect()
}

/// Type C labels to the `(k1, k2)` used here, with `m = k2 / k1`.
pub fn cmd_convert_c(k1c: &Rational, k2c: &Rational) -> Result<ConvertReport> {
    let (k1, k2) = convert_c_labels(k1c, k2c)?;
    Ok(ConvertReport {
        schema_version: SCHEMA_VERSION,
        m: &k2 / &k1,
        k1,
        k2,
    })
}
