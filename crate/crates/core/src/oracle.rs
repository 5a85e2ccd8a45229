//! Exhaustive Weyl-group computations used to cross-check the R-group.
//!
//! Elements of `W(B_n)` are enumerated coordinate by coordinate; a partial
//! assignment is abandoned as soon as a root of the Levi whose support is
//! already assigned leaves the allowed set, or a fully covered Levi block
//! breaks the projection condition.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rgroup::{restricted_root_system, InductionDatum};
use crate::splitting::central_character;
use crate::rational::Rational;
use crate::weyl::SignedPermutation;

/// Default rank bound for the exhaustive enumeration.
pub const DEFAULT_ORACLE_BOUND: usize = 8;

/// How an element must act on the Levi root system `R_L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CosetCondition {
    /// `w` maps the positive roots of `R_L` onto themselves.
    PositiveSystem,
    /// `w` maps `R_L` onto itself as a set. Admits extra elements when the
    /// residual point of the B-factor has a non-trivial stabilizer.
    RootSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub bound: usize,
    pub condition: CosetCondition,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            bound: DEFAULT_ORACLE_BOUND,
            condition: CosetCondition::PositiveSystem,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BlockKind {
    A,
    B,
}

/// Levi data in integer form.
struct Levi {
    n: usize,
    /// Block index of each coordinate.
    block_of: Vec<usize>,
    blocks: Vec<(usize, usize, BlockKind)>,
    /// Central character scaled to integers.
    gamma: Vec<i64>,
    condition: CosetCondition,
}

type SparseRoot = [(usize, i32); 2];

impl Levi {
    fn new(datum: &InductionDatum, condition: CosetCondition) -> Levi {
        let n = datum.n;
        let mut blocks: Vec<(usize, usize, BlockKind)> = datum
            .a_blocks()
            .into_iter()
            .map(|(s, len)| (s, len, BlockKind::A))
            .collect();
        if datum.l() > 0 {
            blocks.push((n - datum.l(), datum.l(), BlockKind::B));
        }
        let mut block_of = vec![0; n];
        for (k, &(s, len, _)) in blocks.iter().enumerate() {
            block_of[s..s + len].fill(k);
        }
        let cc = central_character(&datum.kappa, &datum.mu, &datum.m)
            .expect("datum is valid")
            .exponents;
        let scale = Rational::common_denominator(&cc).expect("denominators fit in i64");
        let gamma = cc
            .iter()
            .map(|x| x.scaled(scale).expect("scaled exponent fits in i64"))
            .collect();
        Levi {
            n,
            block_of,
            blocks,
            gamma,
            condition,
        }
    }

    /// Positive roots of `R_L` whose largest coordinate is `i`, as
    /// `e_i` or `e_a ± e_i` with `a < i`.
    fn roots_ending_at(&self, i: usize) -> Vec<SparseRoot> {
        let (start, _, kind) = self.blocks[self.block_of[i]];
        let mut out = Vec::new();
        if kind == BlockKind::B {
            out.push([(i, 1), (i, 0)]);
        }
        for a in start..i {
            out.push([(a, 1), (i, -1)]);
            if kind == BlockKind::B {
                out.push([(a, 1), (i, 1)]);
            }
        }
        out
    }

    /// Whether a vector with at most two non-zero `±1` coordinates is a root of
    /// `R_L` (positive, under [`CosetCondition::PositiveSystem`]).
    fn allows(&self, root: SparseRoot) -> bool {
        let [(x, cx), (y, cy)] = root;
        let positive_only = self.condition == CosetCondition::PositiveSystem;
        if cy == 0 {
            let kind = self.blocks[self.block_of[x]].2;
            return kind == BlockKind::B && (!positive_only || cx > 0);
        }
        if self.block_of[x] != self.block_of[y] {
            return false;
        }
        let lead = if x < y { cx } else { cy };
        if positive_only && lead < 0 {
            return false;
        }
        match self.blocks[self.block_of[x]].2 {
            BlockKind::A => cx == -cy,
            BlockKind::B => true,
        }
    }

    fn image(images: &[i32], root: SparseRoot) -> SparseRoot {
        let map = |(i, c): (usize, i32)| {
            if c == 0 {
                (0, 0)
            } else {
                let v = images[i];
                (v.unsigned_abs() as usize - 1, c * v.signum())
            }
        };
        [map(root[0]), map(root[1])]
    }

    /// Compares the projections of `wγ` and `γ` onto the span of block `k`'s
    /// roots; `moved` holds `wγ`.
    fn projection_agrees(&self, k: usize, moved: &[i64]) -> bool {
        let (s, len, kind) = self.blocks[k];
        let target = &moved[s..s + len];
        let source = &self.gamma[s..s + len];
        match kind {
            BlockKind::B => target == source,
            BlockKind::A => {
                let len = len as i64;
                let ts: i64 = target.iter().sum();
                let ss: i64 = source.iter().sum();
                target
                    .iter()
                    .zip(source)
                    .all(|(&t, &g)| len * t - ts == len * g - ss)
            }
        }
    }
}

struct Search<'a, F> {
    levi: &'a Levi,
    roots: Vec<Vec<SparseRoot>>,
    images: Vec<i32>,
    used: Vec<bool>,
    moved: Vec<i64>,
    filled: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[i32])> Search<'_, F> {
    fn run(&mut self, i: usize) {
        if i == self.levi.n {
            (self.visit)(&self.images);
            return;
        }
        for target in 0..self.levi.n {
            if self.used[target] {
                continue;
            }
            for sign in [1i32, -1] {
                self.assign(i, target, sign);
            }
        }
    }

    fn assign(&mut self, i: usize, target: usize, sign: i32) {
        self.images[i] = sign * (target as i32 + 1);
        let ok = self.roots[i]
            .iter()
            .all(|&root| self.levi.allows(Levi::image(&self.images, root)));
        if !ok {
            return;
        }
        let k = self.levi.block_of[target];
        self.moved[target] = sign as i64 * self.levi.gamma[i];
        self.filled[k] += 1;
        if self.filled[k] < self.levi.blocks[k].1 || self.levi.projection_agrees(k, &self.moved) {
            self.used[target] = true;
            self.run(i + 1);
            self.used[target] = false;
        }
        self.filled[k] -= 1;
    }
}

fn check_bound(datum: &InductionDatum, bound: usize) -> Result<()> {
    if datum.n > bound {
        return Err(Error::BoundExceeded {
            what: "oracle rank n",
            value: datum.n,
            bound,
        });
    }
    Ok(())
}

/// Calls `visit` with the signed images of every element of `𝒲_{ξ,ξ}`. The
/// first coordinate's image is fanned out over the rayon pool; `make_visitor`
/// builds one visitor per branch, and the per-branch states are returned in
/// branch order.
fn enumerate<S, M, F>(datum: &InductionDatum, config: &OracleConfig, make_visitor: M) -> Result<Vec<S>>
where
    S: Send,
    M: Fn() -> (S, F) + Sync,
    F: FnMut(&mut S, &[i32]),
{
    check_bound(datum, config.bound)?;
    let levi = Levi::new(datum, config.condition);
    let n = levi.n;
    if n == 0 {
        let (mut state, mut visit) = make_visitor();
        visit(&mut state, &[]);
        return Ok(vec![state]);
    }
    let roots: Vec<Vec<SparseRoot>> = (0..n).map(|i| levi.roots_ending_at(i)).collect();
    let branches: Vec<(usize, i32)> = (0..n).flat_map(|t| [(t, 1), (t, -1)]).collect();
    let states = branches
        .into_par_iter()
        .map(|(target, sign)| {
            let (mut state, mut visit) = make_visitor();
            Search {
                levi: &levi,
                roots: roots.clone(),
                images: vec![0; n],
                used: vec![false; n],
                moved: vec![0; n],
                filled: vec![0; levi.blocks.len()],
                visit: |images: &[i32]| visit(&mut state, images),
            }
            .assign(0, target, sign);
            state
        })
        .collect();
    Ok(states)
}

/// Every `w ∈ W(B_n)` stabilizing the Levi (per `config.condition`) whose
/// image of the central character has the same projection onto the span of
/// the Levi roots. Sorted.
pub fn brute_force_w_xi_xi_with(datum: &InductionDatum, config: &OracleConfig) -> Result<Vec<SignedPermutation>> {
    let parts = enumerate(datum, config, || {
        (Vec::new(), |acc: &mut Vec<SignedPermutation>, images: &[i32]| {
            acc.push(SignedPermutation::from_images(images.to_vec()).expect("valid images"))
        })
    })?;
    let mut out: Vec<_> = parts.into_iter().flatten().collect();
    out.sort();
    Ok(out)
}

pub fn brute_force_w_xi_xi(datum: &InductionDatum) -> Result<Vec<SignedPermutation>> {
    brute_force_w_xi_xi_with(datum, &OracleConfig::default())
}

/// Restricted-root test: keeps elements mapping every positive root of
/// `R₀(ξ)` to a positive root of `R₀(ξ)`.
struct RestrictedFilter {
    /// Representative roots in `R` for each positive restricted root.
    representatives: Vec<SparseRoot>,
    /// A-block index of each coordinate (`usize::MAX` for the B-block).
    a_block_of: Vec<usize>,
    positives: HashSet<Vec<i64>>,
    rank: usize,
}

impl RestrictedFilter {
    fn new(datum: &InductionDatum) -> Self {
        let rs = restricted_root_system(datum);
        let blocks = datum.a_blocks();
        let mut a_block_of = vec![usize::MAX; datum.n];
        for (k, &(s, len)) in blocks.iter().enumerate() {
            a_block_of[s..s + len].fill(k);
        }
        let representatives = rs
            .positive_roots
            .iter()
            .map(|v| {
                let mut terms = v
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| (blocks[k].0, c as i32));
                let first = terms.next().expect("restricted roots are non-zero");
                [first, terms.next().unwrap_or((0, 0))]
            })
            .collect();
        RestrictedFilter {
            representatives,
            a_block_of,
            positives: rs.positive_roots.into_iter().collect(),
            rank: rs.rank,
        }
    }

    fn preserves(&self, images: &[i32]) -> bool {
        let mut restricted = vec![0i64; self.rank];
        self.representatives.iter().all(|&root| {
            restricted.fill(0);
            for (i, c) in Levi::image(images, root) {
                if c != 0 && self.a_block_of[i] != usize::MAX {
                    restricted[self.a_block_of[i]] += c as i64;
                }
            }
            self.positives.contains(&restricted)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    /// `|𝒲_{ξ,ξ}|`.
    pub w_xi_xi_order: u64,
    /// `R(ξ)`, sorted.
    pub r_group: Vec<SignedPermutation>,
}

/// Counts `𝒲_{ξ,ξ}` and collects `R(ξ)` in a single pass.
pub fn brute_force(datum: &InductionDatum, config: &OracleConfig) -> Result<OracleOutcome> {
    let filter = RestrictedFilter::new(datum);
    let parts = enumerate(datum, config, || {
        ((0u64, Vec::new()), |acc: &mut (u64, Vec<SignedPermutation>), images: &[i32]| {
            acc.0 += 1;
            if filter.preserves(images) {
                acc.1.push(SignedPermutation::from_images(images.to_vec()).expect("valid images"));
            }
        })
    })?;
    let mut w_xi_xi_order = 0;
    let mut r_group = Vec::new();
    for (count, members) in parts {
        w_xi_xi_order += count;
        r_group.extend(members);
    }
    r_group.sort();
    Ok(OracleOutcome {
        w_xi_xi_order,
        r_group,
    })
}

/// `R(ξ)`: elements of `𝒲_{ξ,ξ}` preserving the positive restricted roots.
pub fn brute_force_r(datum: &InductionDatum) -> Result<Vec<SignedPermutation>> {
    Ok(brute_force(datum, &OracleConfig::default())?.r_group)
}

/// Whether a single element satisfies the conditions defining `𝒲_{ξ,ξ}`.
pub fn in_w_xi_xi(datum: &InductionDatum, w: &SignedPermutation, condition: CosetCondition) -> bool {
    if w.rank() != datum.n {
        return false;
    }
    let levi = Levi::new(datum, condition);
    let images = w.images();
    let roots_ok = (0..levi.n).all(|i| {
        levi.roots_ending_at(i)
            .into_iter()
            .all(|root| levi.allows(Levi::image(images, root)))
    });
    let moved = w.apply(&levi.gamma);
    roots_ok && (0..levi.blocks.len()).all(|k| levi.projection_agrees(k, &moved))
}
