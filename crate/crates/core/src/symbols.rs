//! m-symbols of bipartitions, the a-function, truncated induction and
//! interval counts.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{enumerate_bipartitions, Bipartition, Partition};
use crate::rational::Rational;
use crate::rgroup::{gluable_lengths, InductionDatum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymbolVariant {
    /// Integer `m ≠ 0`.
    IntM(i64),
    PlusZero,
    MinusZero,
    /// `m = twice_m / 2` with `twice_m` odd.
    HalfM { twice_m: i64 },
}

impl SymbolVariant {
    /// The variant for `m`; `m = 0` gives [`SymbolVariant::PlusZero`].
    pub fn from_m(m: &Rational) -> Result<Self> {
        let twice = m.scaled(2).ok_or_else(|| Error::NoSymbolVariant(m.clone()))?;
        Ok(match twice {
            0 => SymbolVariant::PlusZero,
            t if t % 2 == 0 => SymbolVariant::IntM(t / 2),
            t => SymbolVariant::HalfM { twice_m: t },
        })
    }

    /// Both zero variants for `m = 0`, otherwise the single variant.
    pub fn all_for_m(m: &Rational) -> Result<Vec<Self>> {
        Ok(match Self::from_m(m)? {
            SymbolVariant::PlusZero => vec![SymbolVariant::PlusZero, SymbolVariant::MinusZero],
            v => vec![v],
        })
    }

    /// Required `l(top) - l(bottom)`.
    fn length_difference(self) -> i64 {
        match self {
            SymbolVariant::IntM(k) => k,
            SymbolVariant::PlusZero | SymbolVariant::MinusZero => 0,
            SymbolVariant::HalfM { twice_m } => (twice_m + twice_m.signum()) / 2,
        }
    }

    fn bottom_offset(self) -> u64 {
        match self {
            SymbolVariant::HalfM { .. } => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for SymbolVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolVariant::IntM(k) => write!(f, "{k}"),
            SymbolVariant::PlusZero => write!(f, "+0"),
            SymbolVariant::MinusZero => write!(f, "-0"),
            SymbolVariant::HalfM { twice_m } => write!(f, "{twice_m}/2"),
        }
    }
}

/// Two strictly increasing rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub variant: SymbolVariant,
    pub top: Vec<u64>,
    pub bottom: Vec<u64>,
}

impl Symbol {
    /// Entries of both rows, ascending.
    pub fn entries(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self.top.iter().chain(&self.bottom).copied().collect();
        all.sort_unstable();
        all
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u64]| r.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} / {})", row(&self.top), row(&self.bottom))
    }
}

/// Padded row lengths `(l(top), l(bottom))` for parts of lengths `k` and `j`.
fn padded_lengths(k: usize, j: usize, variant: SymbolVariant) -> (usize, usize) {
    let diff = variant.length_difference();
    if k as i64 - j as i64 >= diff {
        (k, (k as i64 - diff) as usize)
    } else {
        ((j as i64 + diff) as usize, j)
    }
}

fn padded_row(parts: &Partition, len: usize, offset: u64) -> Vec<u64> {
    let inc = parts.increasing();
    let zeros = len - inc.len();
    (0..len)
        .map(|i| {
            let part = if i < zeros { 0 } else { inc[i - zeros] as u64 };
            part + 2 * i as u64 + offset
        })
        .collect()
}

/// Top row `ξ_1, ξ_2 + 2, ξ_3 + 4, …`; bottom row `η_1, η_2 + 2, …` (shifted by
/// one more for half-integer `m`), parts increasing and padded with the fewest
/// zeros that give the variant's length difference.
pub fn symbol(b: &Bipartition, variant: SymbolVariant) -> Symbol {
    let (lt, lb) = padded_lengths(b.first.len(), b.second.len(), variant);
    Symbol {
        variant,
        top: padded_row(&b.first, lt, 0),
        bottom: padded_row(&b.second, lb, variant.bottom_offset()),
    }
}

pub fn similar(b1: &Bipartition, b2: &Bipartition, variant: SymbolVariant) -> bool {
    symbol(b1, variant).entries() == symbol(b2, variant).entries()
}

/// Sum of `min(x, y)` over unordered pairs of positions.
fn pair_min_sum(sorted: &[u64]) -> i64 {
    let n = sorted.len();
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| x as i64 * (n - 1 - i) as i64)
        .sum()
}

/// Pair-min sum of the symbol minus that of the all-zero bipartition with the
/// same padded row lengths.
pub fn a_m(b: &Bipartition, variant: SymbolVariant) -> i64 {
    let s = symbol(b, variant);
    let zero = Symbol {
        variant,
        top: padded_row(&Partition::empty(), s.top.len(), 0),
        bottom: padded_row(&Partition::empty(), s.bottom.len(), variant.bottom_offset()),
    };
    pair_min_sum(&s.entries()) - pair_min_sum(&zero.entries())
}

/// Induction from `W(B_{|b|}) × S_p` of `b ⊗ trivial`: all `(α', β')` with
/// `α'/α` and `β'/β` horizontal strips of total size `p`.
pub fn pieri_induct(p: usize, b: &Bipartition) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in 0..=p {
        let firsts = b.first.horizontal_strip_extensions(a);
        let seconds = b.second.horizontal_strip_extensions(p - a);
        for x in &firsts {
            for y in &seconds {
                out.push(Bipartition::new(x.clone(), y.clone()));
            }
        }
    }
    out.sort();
    out
}

/// A set of bipartitions of one weight, with the variant used to compare them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterSet {
    pub members: BTreeSet<Bipartition>,
    pub variant: SymbolVariant,
}

impl CharacterSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn representative(&self) -> Option<&Bipartition> {
        self.members.iter().next()
    }

    /// a-value of each member.
    pub fn a_values(&self) -> Vec<i64> {
        self.members.iter().map(|b| a_m(b, self.variant)).collect()
    }
}

/// All bipartitions of `|b|` whose symbol has the same entries as that of `b`.
pub fn similarity_class(b: &Bipartition, variant: SymbolVariant) -> Result<CharacterSet> {
    let target = symbol(b, variant).entries();
    let members = enumerate_bipartitions(b.weight())?
        .into_iter()
        .filter(|c| symbol(c, variant).entries() == target)
        .collect();
    Ok(CharacterSet { members, variant })
}

/// Induces by one part at a time, keeping only the bipartitions of maximal
/// a-value among everything induced from the current set.
pub fn truncated_induct(parts: &[usize], seed: &CharacterSet) -> CharacterSet {
    let variant = seed.variant;
    let mut current = seed.members.clone();
    for &p in parts {
        let induced: BTreeSet<Bipartition> = current.iter().flat_map(|b| pieri_induct(p, b)).collect();
        let scored: Vec<(i64, Bipartition)> = induced.into_iter().map(|b| (a_m(&b, variant), b)).collect();
        let best = scored.iter().map(|(a, _)| *a).max().unwrap_or(0);
        current = scored
            .into_iter()
            .filter(|(a, _)| *a == best)
            .map(|(_, b)| b)
            .collect();
    }
    CharacterSet {
        members: current,
        variant,
    }
}

/// Class of the split of `μ` (of `((),())` when `μ` is empty).
pub fn residual_class(datum: &InductionDatum, variant: SymbolVariant) -> Result<CharacterSet> {
    similarity_class(&datum.split().bipartition, variant)
}

/// Truncated induction of the residual class over the parts of `κ`, largest
/// first.
pub fn springer_correspondents(datum: &InductionDatum) -> Result<CharacterSet> {
    let variant = SymbolVariant::from_m(&datum.m)?;
    springer_correspondents_for(datum, variant)
}

pub fn springer_correspondents_for(datum: &InductionDatum, variant: SymbolVariant) -> Result<CharacterSet> {
    let seed = residual_class(datum, variant)?;
    Ok(truncated_induct(datum.kappa.parts(), &seed))
}

/// Maximal runs of consecutive values among the entries occurring exactly
/// once. For `m = 1/2` runs containing 0 are dropped.
pub fn intervals(s: &Symbol) -> Vec<(u64, u64)> {
    let entries = s.entries();
    let singles: Vec<u64> = entries
        .iter()
        .enumerate()
        .filter(|&(i, x)| {
            (i == 0 || entries[i - 1] != *x) && entries.get(i + 1) != Some(x)
        })
        .map(|(_, &x)| x)
        .collect();
    let mut runs: Vec<(u64, u64)> = Vec::new();
    for x in singles {
        match runs.last_mut() {
            Some((_, hi)) if *hi + 1 == x => *hi = x,
            _ => runs.push((x, x)),
        }
    }
    if s.variant == (SymbolVariant::HalfM { twice_m: 1 }) {
        runs.retain(|&(lo, _)| lo > 0);
    }
    runs
}

/// Interval counts before and after induction, and the number of gluable
/// length classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalComparison {
    /// Interval count of every member of the induced class (`None` if the
    /// members disagree).
    pub full: Option<usize>,
    pub part: usize,
    pub d: usize,
}

impl IntervalComparison {
    pub fn holds(&self) -> bool {
        self.full == Some(self.part + self.d)
    }
}

pub fn interval_comparison(datum: &InductionDatum) -> Result<IntervalComparison> {
    let variant = SymbolVariant::from_m(&datum.m)?;
    let full_class = springer_correspondents_for(datum, variant)?;
    let counts: BTreeSet<usize> = full_class
        .members
        .iter()
        .map(|b| intervals(&symbol(b, variant)).len())
        .collect();
    let full = if counts.len() == 1 {
        counts.into_iter().next()
    } else {
        None
    };
    let part = intervals(&symbol(&datum.split().bipartition, variant)).len();
    Ok(IntervalComparison {
        full,
        part,
        d: gluable_lengths(datum).len(),
    })
}

/// Interval count after induction equals the count for the B-part plus `d`.
pub fn interval_count_check(datum: &InductionDatum) -> Result<bool> {
    Ok(interval_comparison(datum)?.holds())
}

/// `2^(max(I - 1, 0))` for a symbol with `I` intervals; only meaningful for
/// `m = 1`.
pub fn component_group_order_m1(s: &Symbol) -> Result<u64> {
    if s.variant != SymbolVariant::IntM(1) {
        return Err(Error::NoSymbolVariant(Rational::from_int(1)));
    }
    let count = intervals(s).len();
    Ok(1 << count.saturating_sub(1))
}

/// `|Σ(ξ)| = 2^d · |class of the split of μ|`.
pub fn cardinality_check(datum: &InductionDatum) -> Result<bool> {
    let variant = SymbolVariant::from_m(&datum.m)?;
    let seed = residual_class(datum, variant)?;
    let full = truncated_induct(datum.kappa.parts(), &seed);
    let d = gluable_lengths(datum).len();
    Ok(full.len() == seed.len() << d)
}
