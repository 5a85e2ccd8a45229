//! Induction data, the gluing criterion, the restricted root system and the
//! R-group with explicit generators.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::Rational;
use crate::splitting::{is_residual_point, split, SplitResult};
use crate::tableau::half_width;
use crate::weyl::{order_b, order_d, SignedPermutation};

/// `(n, m, κ, μ)`: the Levi `A_{κ_1-1} × … × B_{|μ|}` inside `B_n` with the
/// discrete series given by the residual point `μ` of the `B` factor.
///
/// Coordinates `1..=|κ|` belong to the A-factors, largest part first; the
/// last `|μ|` coordinates belong to the B-factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InductionDatum {
    pub n: usize,
    pub m: Rational,
    pub kappa: Partition,
    pub mu: Partition,
}

impl InductionDatum {
    pub fn new(n: usize, m: Rational, kappa: Partition, mu: Partition) -> Result<Self> {
        if m.is_negative() {
            return Err(Error::NegativeM(m));
        }
        let actual = kappa.weight() + mu.weight();
        if actual != n {
            return Err(Error::WeightMismatch { n, actual });
        }
        if !mu.is_empty() && !is_residual_point(&mu, &m) {
            return Err(Error::NotResidual { mu, m });
        }
        Ok(InductionDatum { n, m, kappa, mu })
    }

    /// Rank of the B-factor.
    pub fn l(&self) -> usize {
        self.mu.weight()
    }

    /// Split of `μ`; always defined for a valid datum.
    pub fn split(&self) -> SplitResult {
        split(&self.mu, &self.m).expect("residual points split")
    }

    /// `(start, length)` of each A-block, 0-based start, in coordinate order.
    pub fn a_blocks(&self) -> Vec<(usize, usize)> {
        let mut start = 0;
        self.kappa
            .parts()
            .iter()
            .map(|&len| {
                let block = (start, len);
                start += len;
                block
            })
            .collect()
    }

    /// Distinct parts of `κ`, largest first.
    pub fn length_classes(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.kappa.parts().to_vec();
        out.dedup();
        out
    }
}

/// Gluing criterion for a strip of length `p` against the split of `μ`, with
/// `z = (p-1)/2`: `z - m` must be an integer and
/// `[m > z] + #{y = z} + #{x = 0 when z = 0} - #{x = z + 1}` must vanish,
/// where the block segments have entries `x..=y`.
pub fn can_glue_split(p: usize, split: &SplitResult, m: &Rational) -> bool {
    let z = half_width(p);
    if !(&z - m).is_integer() {
        return false;
    }
    let above = &z + 1;
    let mut order: i64 = if m > &z { 1 } else { 0 };
    for s in split.segments() {
        if s.high == z {
            order += 1;
        }
        if z.is_zero() && s.low.is_zero() {
            order += 1;
        }
        if s.low == above {
            order -= 1;
        }
    }
    order == 0
}

/// Whether a strip of length `p` glues to `T_m(μ)`. Fails if `μ` is not
/// residual.
pub fn can_glue(p: usize, mu: &Partition, m: &Rational) -> Result<bool> {
    if p == 0 {
        return Err(Error::EmptyStrip);
    }
    let s = split(mu, m).ok_or_else(|| Error::NotResidual {
        mu: mu.clone(),
        m: m.clone(),
    })?;
    Ok(can_glue_split(p, &s, m))
}

/// All `μ' ⊃ μ` with `|μ'| = |μ| + p` whose m-tableau entries exceed those of
/// `T_m(μ)` by exactly the absolute strip entries of length `p`. The result is
/// sorted and free of duplicates.
pub fn glue_strip_geometric(mu: &Partition, p: usize, m: &Rational) -> Vec<Partition> {
    if p == 0 {
        return vec![mu.clone()];
    }
    // Strip entries lie in (1/2)Z; box entries only do when m does.
    let Some(twice_m) = m.scaled(2) else {
        return Vec::new();
    };
    // Doubled absolute strip entries are |2i - (p-1)| for i in 0..p.
    let mut needed = vec![0u8; p];
    for i in 0..p as i64 {
        needed[(2 * i - (p as i64 - 1)).unsigned_abs() as usize] += 1;
    }
    let mut found = BTreeSet::new();
    let mut seen = HashSet::new();
    glue_search(mu.clone(), &mut needed, p, twice_m, &mut seen, &mut found);
    found.into_iter().collect()
}

fn glue_search(
    current: Partition,
    needed: &mut Vec<u8>,
    left: usize,
    twice_m: i64,
    seen: &mut HashSet<(Partition, Vec<u8>)>,
    found: &mut BTreeSet<Partition>,
) {
    if left == 0 {
        found.insert(current);
        return;
    }
    if !seen.insert((current.clone(), needed.clone())) {
        return;
    }
    for b in current.addable_boxes() {
        let e = (2 * b.content() + twice_m).unsigned_abs() as usize;
        if e < needed.len() && needed[e] > 0 {
            needed[e] -= 1;
            glue_search(current.with_box(b), needed, left - 1, twice_m, seen, found);
            needed[e] += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorType {
    B,
    D,
    /// `D_1`, the empty root system.
    Empty,
}

/// One irreducible factor of `R₀(ξ)`: all `rank` A-blocks of one length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemFactor {
    pub kind: FactorType,
    pub rank: usize,
    /// Common size of the A-blocks in this factor.
    pub length: usize,
    pub gluable: bool,
}

impl RootSystemFactor {
    pub fn weyl_group_order(&self) -> BigUint {
        match self.kind {
            FactorType::B => order_b(self.rank),
            FactorType::D => order_d(self.rank),
            FactorType::Empty => BigUint::one(),
        }
    }

    /// `B3`, `D2`, `D1(empty)`.
    pub fn label(&self) -> String {
        match self.kind {
            FactorType::B => format!("B{}", self.rank),
            FactorType::D => format!("D{}", self.rank),
            FactorType::Empty => "D1(empty)".to_string(),
        }
    }
}

/// Positive restricted roots in the basis `E_1..E_r` (one `E_i` per A-block).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedRootSystem {
    pub rank: usize,
    pub positive_roots: Vec<Vec<i64>>,
    pub factors: Vec<RootSystemFactor>,
}

impl RestrictedRootSystem {
    pub fn weyl_group_order(&self) -> BigUint {
        self.factors
            .iter()
            .map(RootSystemFactor::weyl_group_order)
            .product()
    }

    pub fn contains_positive(&self, root: &[i64]) -> bool {
        self.positive_roots.iter().any(|r| r == root)
    }
}

/// `E_i ± E_j` (`i < j`) when `κ_i = κ_j`; `E_i` when the strip of length `κ_i`
/// does not glue.
pub fn restricted_root_system(datum: &InductionDatum) -> RestrictedRootSystem {
    let split = datum.split();
    let parts = datum.kappa.parts();
    let rank = parts.len();
    let gluable: Vec<bool> = parts
        .iter()
        .map(|&p| can_glue_split(p, &split, &datum.m))
        .collect();
    let unit = |i: usize| {
        let mut v = vec![0i64; rank];
        v[i] = 1;
        v
    };
    let mut positive_roots = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            if parts[i] == parts[j] {
                let mut minus = unit(i);
                minus[j] = -1;
                let mut plus = unit(i);
                plus[j] = 1;
                positive_roots.push(minus);
                positive_roots.push(plus);
            }
        }
        if !gluable[i] {
            positive_roots.push(unit(i));
        }
    }
    let factors = datum
        .length_classes()
        .into_iter()
        .map(|length| {
            let rank = parts.iter().filter(|&&p| p == length).count();
            let glues = can_glue_split(length, &split, &datum.m);
            let kind = match (glues, rank) {
                (false, _) => FactorType::B,
                (true, 1) => FactorType::Empty,
                (true, _) => FactorType::D,
            };
            RootSystemFactor {
                kind,
                rank,
                length,
                gluable: glues,
            }
        })
        .collect();
    RestrictedRootSystem {
        rank,
        positive_roots,
        factors,
    }
}

/// Distinct part lengths of `κ` whose strip glues, largest first.
pub fn gluable_lengths(datum: &InductionDatum) -> Vec<usize> {
    let split = datum.split();
    datum
        .length_classes()
        .into_iter()
        .filter(|&p| can_glue_split(p, &split, &datum.m))
        .collect()
}

/// The generator attached to the `class_index`-th gluable length: the
/// involution reversing the last A-block of that length with a sign,
/// `e_{s+j} ↦ -e_{s+len-1-j}`, and fixing every other coordinate.
pub fn generator(datum: &InductionDatum, class_index: usize) -> Result<SignedPermutation> {
    let classes = gluable_lengths(datum);
    let &length = classes.get(class_index).ok_or(Error::UnknownLengthClass {
        index: class_index,
        count: classes.len(),
    })?;
    Ok(block_flip(datum, length))
}

fn block_flip(datum: &InductionDatum, length: usize) -> SignedPermutation {
    let (start, len) = datum
        .a_blocks()
        .into_iter()
        .rev()
        .find(|&(_, len)| len == length)
        .expect("length is a part of kappa");
    let mut images: Vec<i32> = (1..=datum.n as i32).collect();
    for j in 0..len {
        images[start + j] = -((start + len - j) as i32);
    }
    SignedPermutation::from_images(images).expect("block flip is a signed permutation")
}

/// The tempered summand indexed by a subset of the gluable lengths, with the
/// partition obtained by gluing one strip of each chosen length onto `μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentLabel {
    /// Chosen gluable lengths, largest first.
    pub lengths: Vec<usize>,
    /// `None` if some strip failed to glue onto the already enlarged diagram.
    pub mu: Option<Partition>,
    /// Largest number of distinct extensions met at any gluing step.
    pub alternatives: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RGroupResult {
    pub d: usize,
    pub gluable_lengths: Vec<usize>,
    pub generators: Vec<SignedPermutation>,
    pub component_count: u64,
    pub component_labels: Vec<ComponentLabel>,
}

pub fn r_group(datum: &InductionDatum) -> RGroupResult {
    let lengths = gluable_lengths(datum);
    let d = lengths.len();
    let generators = lengths.iter().map(|&len| block_flip(datum, len)).collect();
    let component_labels = (0..1u64 << d)
        .map(|mask| {
            let chosen: Vec<usize> = lengths
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &len)| len)
                .collect();
            component_label(&datum.mu, &datum.m, chosen)
        })
        .collect();
    RGroupResult {
        d,
        gluable_lengths: lengths,
        generators,
        component_count: 1 << d,
        component_labels,
    }
}

fn component_label(mu: &Partition, m: &Rational, lengths: Vec<usize>) -> ComponentLabel {
    let mut current = Some(mu.clone());
    let mut alternatives = 1;
    for &p in &lengths {
        let Some(base) = current.take() else { break };
        let options = glue_strip_geometric(&base, p, m);
        alternatives = alternatives.max(options.len());
        current = options.into_iter().next();
        if current.is_none() {
            log::warn!("strip of length {p} does not glue onto {base} at m = {m}");
        }
    }
    if alternatives > 1 {
        log::warn!(
            "gluing {lengths:?} onto {mu} at m = {m} is not unique; using the least extension"
        );
    }
    ComponentLabel {
        lengths,
        mu: current,
        alternatives,
    }
}

/// Remark on type C labels: doubling the short roots `±e_i` to `±2e_i` halves
/// the second label. Returns `(k1, k2)`; the parameter used here is `k2 / k1`.
pub fn convert_c_labels(k1c: &Rational, k2c: &Rational) -> Result<(Rational, Rational)> {
    if k1c.is_zero() {
        return Err(Error::ZeroLabel);
    }
    Ok((k1c.clone(), k2c / &Rational::from_int(2)))
}
