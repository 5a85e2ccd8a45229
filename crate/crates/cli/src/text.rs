//! Plain-text rendering for terminals. Partitions print in increasing order.

use std::fmt::Write;

use hecke_rgroup::sweeps::SweepReport;

use crate::report::*;

fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn symbol_line(s: &SymbolEcho) -> String {
    let row = |r: &[u64]| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let ivs: Vec<String> = s
        .intervals
        .iter()
        .map(|&(lo, hi)| if lo == hi { format!("{lo}") } else { format!("{lo}..{hi}") })
        .collect();
    format!(
        "{}  ({} / {})  a={}  intervals [{}]",
        s.bipartition,
        row(&s.top),
        row(&s.bottom),
        s.a_value,
        ivs.join(" ")
    )
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn report(r: &Report) -> String {
    let mut out = String::new();
    let d = &r.datum;
    let _ = writeln!(out, "datum        n={} m={} kappa={} mu={}", d.n, d.m, d.kappa, d.mu);
    let _ = writeln!(out, "central char {}", list(&r.central_character));
    let _ = writeln!(out, "split of mu  {}", r.split_result.bipartition);
    let factors: Vec<String> = r
        .root_system_factors
        .iter()
        .map(|f| format!("{} (length {})", f.label(), f.length))
        .collect();
    let _ = writeln!(out, "R0 factors   {}", if factors.is_empty() { "none".into() } else { factors.join(" x ") });
    let _ = writeln!(out, "|W0(xi)|     {}", r.weyl_group_order);
    if !r.pole_orders.is_empty() {
        let _ = writeln!(out, "pole orders");
        for p in &r.pole_orders {
            let mark = if p.in_restricted_system { "  in R0" } else { "" };
            let _ = writeln!(out, "  {:<10} {}{}", p.label, p.order, mark);
        }
    }
    let _ = writeln!(out, "gluable      [{}]", list(&r.gluable_lengths));
    let _ = writeln!(out, "d            {}", r.d);
    let _ = writeln!(out, "components   {}", r.component_count);
    for g in &r.generators {
        let _ = writeln!(out, "generator    length {}: {}  ({})", g.length, g.one_line, g.images.join(", "));
    }
    for label in &r.component_labels {
        let mu = label.mu.as_ref().map(ToString::to_string).unwrap_or_else(|| "-".into());
        let _ = writeln!(out, "label        [{}] -> {}", list(&label.lengths), mu);
    }
    if let Some(class) = &r.springer_class {
        let _ = writeln!(
            out,
            "springer     {} members (seed class {}), variant {}",
            class.members.len(),
            class.seed_size,
            class.variant
        );
        for s in &class.members {
            let _ = writeln!(out, "  {}", symbol_line(s));
        }
    }
    if let Some(o) = &r.oracle {
        let _ = writeln!(
            out,
            "oracle       |W_xi,xi|={} |R|={} (bound {})",
            o.w_xi_xi_order, o.r_group_order, o.bound
        );
    }
    for note in &r.notes {
        let _ = writeln!(out, "note         {note}");
    }
    let _ = writeln!(out, "checks");
    for (name, ok) in &r.checks {
        let _ = writeln!(out, "  {:<26} {}", name, pass(*ok));
    }
    out
}

pub fn residual(r: &ResidualListing) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} residual partitions of {} at m={}", r.points.len(), r.l, r.m);
    for p in &r.points {
        match &p.symbol {
            Some(s) => {
                let _ = writeln!(out, "  {:<16} -> {}", p.lambda.to_string(), symbol_line(s));
            }
            None => {
                let _ = writeln!(out, "  {:<16} -> {}", p.lambda.to_string(), p.split);
            }
        }
    }
    out
}

pub fn split(r: &SplitReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "T_{}{}", r.m, r.lambda);
    for row in &r.tableau {
        let _ = writeln!(out, "  {}", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    }
    let diag = &r.diagnostics;
    let _ = writeln!(
        out,
        "residual     {} (pole roots {}, zero roots {}, rank {})",
        diag.residual, diag.pole_roots, diag.zero_roots, diag.rank
    );
    match &r.split_result {
        Some(s) => {
            for b in &s.blocks {
                let segs: Vec<String> = b.segments.iter().map(|g| format!("{}..{}", g.low, g.high)).collect();
                let _ = writeln!(out, "  {:?} block of {} entries {}", b.orientation, b.len(), segs.join(" + "));
            }
            let _ = writeln!(out, "split        {}", s.bipartition);
        }
        None => {
            let _ = writeln!(out, "split        undefined");
        }
    }
    if let Some(s) = &r.symbol {
        let _ = writeln!(out, "symbol       {}", symbol_line(s));
    }
    out
}

pub fn symbols(r: &SymbolsReport) -> String {
    let mut out = String::new();
    for v in &r.variants {
        let _ = writeln!(out, "variant {}: {}", v.variant, symbol_line(&v.symbol));
        let _ = writeln!(out, "  class of {}", v.class.len());
        for s in &v.class {
            let _ = writeln!(out, "    {}", symbol_line(s));
        }
    }
    out
}

pub fn table(t: &Table) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<5} {:<14} {:<14} {:>2} {:>5} {:<10} {:>5}  checks",
        "m", "kappa", "mu", "d", "2^d", "gluable", "class"
    );
    for row in &t.rows {
        let _ = writeln!(
            out,
            "{:<5} {:<14} {:<14} {:>2} {:>5} {:<10} {:>5}  {}",
            row.m.to_string(),
            row.kappa.to_string(),
            row.mu.to_string(),
            row.d,
            row.component_count,
            list(&row.gluable_lengths),
            row.class_size.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
            pass(row.passed())
        );
    }
    out
}

pub fn selftest(reports: &[SweepReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(
            out,
            "{:<10} {} {:>7} cases  {:>10.2?}",
            r.suite,
            pass(r.passed()),
            r.cases,
            r.elapsed
        );
        for f in &r.failures {
            let _ = writeln!(out, "  {f}");
        }
    }
    out
}

pub fn convert(c: &ConvertReport) -> String {
    format!("k1={} k2={} m={}\n", c.k1, c.k2, c.m)
}
