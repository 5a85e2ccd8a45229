use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::select;

use hecke_rgroup::cfun::{pole_order_short_blockwise, pole_order_short_direct};
use hecke_rgroup::partition::enumerate_partitions;
use hecke_rgroup::rgroup::can_glue;
use hecke_rgroup::splitting::{central_character, is_residual_point};
use hecke_rgroup::sweeps::{half_steps, valid_data};
use hecke_rgroup::symbols::{a_m, intervals, similar, similarity_class, symbol, truncated_induct};
use hecke_rgroup::tableau::{entry, m_tableau, strip};
use hecke_rgroup::weyl::from_word;
use hecke_rgroup::{r_group, split, Bipartition, InductionDatum, Partition, Rational, SymbolVariant};

fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(Partition::new)
}

fn half_integer_m() -> impl Strategy<Value = Rational> {
    (0i64..=10).prop_map(|k| Rational::new(k, 2))
}

fn variant() -> impl Strategy<Value = SymbolVariant> {
    half_integer_m().prop_flat_map(|m| select(SymbolVariant::all_for_m(&m).unwrap()))
}

fn data() -> &'static [InductionDatum] {
    static DATA: OnceLock<Vec<InductionDatum>> = OnceLock::new();
    DATA.get_or_init(|| valid_data(7, &half_steps(8)).unwrap())
}

/// Residual partitions with the same tableau entries as `lambda`.
fn same_orbit(lambda: &Partition, m: &Rational) -> Vec<Partition> {
    let target = m_tableau(lambda, m).entry_multiset();
    enumerate_partitions(lambda.weight())
        .unwrap()
        .into_iter()
        .filter(|other| m_tableau(other, m).entry_multiset() == target && is_residual_point(other, m))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn strip_entries_pair_up(p in 1usize..60) {
        let s = strip(p);
        prop_assert_eq!(s.abs_entries.len(), p);
        for (i, x) in s.abs_entries.iter().enumerate() {
            let expected = if p % 2 == 1 {
                Rational::from_int((i.div_ceil(2)) as i64)
            } else {
                Rational::new(2 * (i / 2) as i64 + 1, 2)
            };
            prop_assert_eq!(x, &expected);
        }
        prop_assert_eq!(s.signed_entries.iter().cloned().sum::<Rational>(), Rational::zero());
    }

    #[test]
    fn addable_boxes_in_distinct_rows_and_columns(lambda in partition(8, 8)) {
        let boxes = lambda.addable_boxes();
        let rows: BTreeSet<usize> = boxes.iter().map(|b| b.row).collect();
        let cols: BTreeSet<usize> = boxes.iter().map(|b| b.col).collect();
        prop_assert_eq!(rows.len(), boxes.len());
        prop_assert_eq!(cols.len(), boxes.len());
        for b in boxes {
            prop_assert!(!lambda.contains(b));
            prop_assert_eq!(lambda.with_box(b).weight(), lambda.weight() + 1);
        }
    }

    #[test]
    fn rationals_are_exact(a in -10_000i64..10_000, b in 1i64..500, c in -10_000i64..10_000, d in 1i64..500) {
        let x = Rational::new(a, b);
        let y = Rational::new(c, d);
        prop_assert_eq!(&x + &y, Rational::new(a * d + c * b, b * d));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        let text = x.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), x);
    }

    #[test]
    fn tableau_entries_depend_on_content_only(lambda in partition(6, 6), m in half_integer_m()) {
        let t = m_tableau(&lambda, &m);
        for (b, e) in t.iter() {
            prop_assert!(!e.is_negative());
            prop_assert_eq!(e, &(Rational::from_int(b.content()) + &m).abs());
            prop_assert_eq!(e, &entry(b, &m));
        }
    }

    #[test]
    fn split_defined_exactly_on_residual_points(lambda in partition(5, 5), m in half_integer_m()) {
        prop_assert_eq!(split(&lambda, &m).is_some(), is_residual_point(&lambda, &m));
    }

    #[test]
    fn split_blocks_cover_the_diagram(lambda in partition(5, 6), m in half_integer_m()) {
        let Some(s) = split(&lambda, &m) else { return Ok(()) };
        let covered: BTreeSet<_> = s.blocks.iter().flat_map(|b| b.boxes.iter().copied()).collect();
        let all: BTreeSet<_> = lambda.boxes().collect();
        prop_assert_eq!(covered, all);
        prop_assert_eq!(s.bipartition.weight(), lambda.weight());
        prop_assert_eq!(s.bipartition.first.len() + s.bipartition.second.len(), s.blocks.len());
        for b in &s.blocks {
            prop_assert!(!(b.len() == 1 && b.entry_high.is_zero()));
            let spanned: i64 = b
                .segments
                .iter()
                .map(|g| {
                    let width = &g.high - &g.low;
                    assert!(width.is_integer() && !width.is_negative());
                    width.to_i64().unwrap() + 1
                })
                .sum();
            prop_assert_eq!(spanned, b.len() as i64);
        }
    }

    #[test]
    fn split_far_above_the_diagonal_is_all_rows(lambda in partition(5, 5), extra in 0i64..3) {
        let bound = lambda.parts().first().copied().unwrap_or(0) + lambda.len();
        let m = Rational::from_int(bound as i64 - 1 + extra);
        let s = split(&lambda, &m).expect("defined above the diagonal");
        prop_assert_eq!(s.bipartition, Bipartition::new(lambda.clone(), Partition::empty()));
    }

    #[test]
    fn orbit_mates_split_to_similar_bipartitions(lambda in partition(4, 4), m in half_integer_m()) {
        prop_assume!(is_residual_point(&lambda, &m));
        let here = split(&lambda, &m).unwrap().bipartition;
        for v in SymbolVariant::all_for_m(&m).unwrap() {
            for other in same_orbit(&lambda, &m) {
                let there = split(&other, &m).unwrap().bipartition;
                prop_assert!(similar(&here, &there, v), "{} vs {} ({})", lambda, other, v);
            }
        }
    }

    #[test]
    fn pole_order_is_orbit_invariant(lambda in partition(4, 4), m in half_integer_m(), p in 1usize..9) {
        prop_assume!(is_residual_point(&lambda, &m));
        let order = pole_order_short_direct(p, &lambda, &m);
        prop_assert!((0..=1).contains(&order));
        prop_assert_eq!(order, pole_order_short_blockwise(p, &split(&lambda, &m).unwrap(), &m));
        let glue = can_glue(p, &lambda, &m).unwrap();
        for other in same_orbit(&lambda, &m) {
            prop_assert_eq!(pole_order_short_direct(p, &other, &m), order);
            prop_assert_eq!(can_glue(p, &other, &m).unwrap(), glue);
        }
    }

    #[test]
    fn generators_are_commuting_involutions(datum in select(data())) {
        let result = r_group(&datum);
        let gamma = central_character(&datum.kappa, &datum.mu, &datum.m).unwrap().exponents;
        prop_assert_eq!(result.generators.len(), result.d);
        prop_assert_eq!(result.component_count, 1u64 << result.d);
        for g in &result.generators {
            prop_assert!(g.compose(g).is_identity());
            prop_assert_eq!(g.apply(&gamma), gamma.clone());
            prop_assert_eq!(&from_word(datum.n, &g.reduced_word()), g);
            prop_assert_eq!(g.reduced_word().len(), g.length());
            for h in &result.generators {
                prop_assert_eq!(g.compose(h), h.compose(g));
            }
        }
    }

    #[test]
    fn symbol_rows_strictly_increase(xi in partition(4, 4), eta in partition(4, 4), v in variant()) {
        let s = symbol(&Bipartition::new(xi, eta), v);
        prop_assert!(s.top.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(s.bottom.windows(2).all(|w| w[0] < w[1]));
        let entries = s.entries();
        prop_assert!(entries.windows(3).all(|w| w[0] != w[2]));
    }

    #[test]
    fn a_value_is_a_class_invariant(xi in partition(3, 3), eta in partition(3, 3), v in variant()) {
        let b = Bipartition::new(xi, eta);
        let class = similarity_class(&b, v).unwrap();
        prop_assert!(class.members.contains(&b));
        let a = a_m(&b, v);
        prop_assert!(class.a_values().iter().all(|&x| x == a));
    }

    #[test]
    fn intervals_partition_the_singles(xi in partition(4, 5), eta in partition(4, 5), v in variant()) {
        let s = symbol(&Bipartition::new(xi, eta), v);
        let entries = s.entries();
        let count = |x: u64| entries.iter().filter(|&&e| e == x).count();
        let ivs = intervals(&s);
        let mut seen = BTreeSet::new();
        for &(lo, hi) in &ivs {
            prop_assert!(lo <= hi);
            for x in lo..=hi {
                prop_assert_eq!(count(x), 1);
                prop_assert!(seen.insert(x));
            }
        }
        for w in ivs.windows(2) {
            prop_assert!(w[0].1 + 1 < w[1].0);
        }
        let mut singles: Vec<u64> = entries.iter().copied().filter(|&x| count(x) == 1).collect();
        if matches!(v, SymbolVariant::HalfM { twice_m: 1 }) {
            // The run through 0 is dropped.
            let mut zero_run = BTreeSet::new();
            let mut x = 0;
            while count(x) == 1 {
                zero_run.insert(x);
                x += 1;
            }
            singles.retain(|x| !zero_run.contains(x));
        }
        prop_assert_eq!(seen.into_iter().collect::<Vec<_>>(), singles);
    }

    #[test]
    fn truncated_induction_gives_one_closed_class(datum in select(data())) {
        for v in SymbolVariant::all_for_m(&datum.m).unwrap_or_default() {
            let seed = similarity_class(&datum.split().bipartition, v).unwrap();
            let out = truncated_induct(datum.kappa.parts(), &seed);
            prop_assert!(!out.is_empty());
            let a_values: BTreeSet<i64> = out.a_values().into_iter().collect();
            prop_assert_eq!(a_values.len(), 1);
            let members: BTreeSet<&Bipartition> = out.members.iter().collect();
            let closure = similarity_class(out.representative().unwrap(), v).unwrap();
            prop_assert!(closure.members.iter().all(|b| members.contains(b)));
            prop_assert!(out.members.iter().all(|b| b.weight() == datum.n));
        }
    }

    #[test]
    fn residual_symbols_are_spread_out(lambda in partition(5, 5), m in half_integer_m()) {
        prop_assume!(is_residual_point(&lambda, &m));
        let b = split(&lambda, &m).unwrap().bipartition;
        for v in SymbolVariant::all_for_m(&m).unwrap() {
            let entries = symbol(&b, v).entries();
            for w in entries.windows(2) {
                let gap = w[1] - w[0];
                let forced = v == SymbolVariant::HalfM { twice_m: 1 } && gap == 0;
                prop_assert!(gap >= 2 || forced, "{} at {}: {:?}", lambda, v, entries);
            }
        }
    }
}
