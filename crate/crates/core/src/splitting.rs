//! The splitting map of an m-tableau into horizontal and vertical blocks,
//! the root-count residual test, and central characters.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Bipartition, BoxCoord, Partition};
use crate::rational::Rational;
use crate::tableau::{entry, strip};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// Consecutive entries `low ..= high` carried by part of a block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub low: Rational,
    pub high: Rational,
}

/// A row or column segment of the tableau enclosed in one step of the split.
///
/// Along the block `c(□) + m` moves by one per box, so its entries are
/// consecutive unless the block crosses the zero diagonal. `segments` cuts the
/// block at that crossing into at most two runs of consecutive entries; the
/// zero box goes with the negative side when there is one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub orientation: Orientation,
    /// From the box nearest the corner `(1,1)` outward.
    pub boxes: Vec<BoxCoord>,
    /// Entry of the outermost box, the largest in the block.
    pub entry_high: Rational,
    pub segments: Vec<Segment>,
}

impl Block {
    fn new(orientation: Orientation, boxes: Vec<BoxCoord>, m: &Rational) -> Self {
        let shifted: Vec<Rational> = boxes.iter().map(|b| Rational::from_int(b.content()) + m).collect();
        let has_negative = shifted.iter().any(Rational::is_negative);
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for s in &shifted {
            if s.is_negative() || (s.is_zero() && has_negative) {
                negative.push(s.abs());
            } else {
                positive.push(s.abs());
            }
        }
        let segments = [positive, negative]
            .into_iter()
            .filter(|side| !side.is_empty())
            .map(|side| Segment {
                low: side.iter().min().cloned().expect("non-empty"),
                high: side.iter().max().cloned().expect("non-empty"),
            })
            .collect();
        let entry_high = entry(*boxes.last().expect("blocks are non-empty"), m);
        Block {
            orientation,
            boxes,
            entry_high,
            segments,
        }
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitResult {
    /// Blocks in the order they were selected.
    pub blocks: Vec<Block>,
    /// Horizontal block lengths, vertical block lengths.
    pub bipartition: Bipartition,
}

impl SplitResult {
    pub fn empty() -> Self {
        SplitResult {
            blocks: Vec::new(),
            bipartition: Bipartition::default(),
        }
    }

    pub fn segments(&self) -> impl Iterator<Item = &Segment> {
        self.blocks.iter().flat_map(|b| b.segments.iter())
    }
}

/// Splits `T_m(λ)` from the corner outward. Each step takes the unique box `b`
/// with the largest remaining entry and encloses every remaining box weakly
/// above and left of it, so the enclosed region stays a partition diagram.
/// That set must lie in one row (horizontal block) or one column (vertical
/// block); a single box is horizontal above the zero diagonal and vertical
/// below it.
///
/// Returns `None` if the largest entry is not unique, the enclosed set is not
/// a line, or a single box sits on the zero diagonal.
pub fn split(lambda: &Partition, m: &Rational) -> Option<SplitResult> {
    let mut remaining: BTreeSet<BoxCoord> = lambda.boxes().collect();
    let mut blocks = Vec::new();
    while !remaining.is_empty() {
        let mut best: Option<(BoxCoord, Rational)> = None;
        let mut tied = false;
        for &b in &remaining {
            let e = entry(b, m);
            match &best {
                Some((_, top)) if &e < top => {}
                Some((_, top)) if &e == top => tied = true,
                _ => {
                    best = Some((b, e));
                    tied = false;
                }
            }
        }
        if tied {
            return None;
        }
        let (top, _) = best.expect("remaining is non-empty");
        let enclosed: Vec<BoxCoord> = remaining
            .iter()
            .filter(|b| b.row <= top.row && b.col <= top.col)
            .copied()
            .collect();
        let orientation = if enclosed.len() == 1 {
            let shifted = Rational::from_int(top.content()) + m;
            if shifted.is_zero() {
                return None;
            }
            if shifted.is_negative() {
                Orientation::Vertical
            } else {
                Orientation::Horizontal
            }
        } else if enclosed.iter().all(|b| b.row == top.row) {
            Orientation::Horizontal
        } else if enclosed.iter().all(|b| b.col == top.col) {
            Orientation::Vertical
        } else {
            return None;
        };
        for b in &enclosed {
            remaining.remove(b);
        }
        blocks.push(Block::new(orientation, enclosed, m));
    }
    let lengths = |o: Orientation| {
        Partition::new(
            blocks
                .iter()
                .filter(|b| b.orientation == o)
                .map(Block::len)
                .collect(),
        )
    };
    let bipartition = Bipartition::new(lengths(Orientation::Horizontal), lengths(Orientation::Vertical));
    Some(SplitResult {
        blocks,
        bipartition,
    })
}

/// Counts behind the residual test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualDiagnostics {
    /// Roots with `α(γ) = k_α`.
    pub pole_roots: usize,
    /// Roots with `α(γ) = 0`.
    pub zero_roots: usize,
    pub rank: usize,
    pub residual: bool,
}

/// Root counts for the point `γ_i = c(□_i) + m` (boxes in row-major order)
/// over all `2l²` roots of `B_l`; long roots have label 1, short roots label `m`.
pub fn residual_diagnostics(lambda: &Partition, m: &Rational) -> ResidualDiagnostics {
    let gamma: Vec<Rational> = lambda
        .boxes()
        .map(|b| Rational::from_int(b.content()) + m)
        .collect();
    let one = Rational::one();
    let mut pole_roots = 0;
    let mut zero_roots = 0;
    let mut tally = |value: Rational, label: &Rational| {
        if &value == label {
            pole_roots += 1;
        }
        if value.is_zero() {
            zero_roots += 1;
        }
    };
    for (i, gi) in gamma.iter().enumerate() {
        tally(gi.clone(), m);
        tally(-gi, m);
        for gj in &gamma[i + 1..] {
            let sum = gi + gj;
            let diff = gi - gj;
            tally(-&sum, &one);
            tally(sum, &one);
            tally(-&diff, &one);
            tally(diff, &one);
        }
    }
    let rank = gamma.len();
    ResidualDiagnostics {
        pole_roots,
        zero_roots,
        rank,
        residual: pole_roots == zero_roots + rank,
    }
}

pub fn is_residual_point(lambda: &Partition, m: &Rational) -> bool {
    residual_diagnostics(lambda, m).residual
}

/// Exponents of `q₁` of the central character: the strips of the parts of `κ`
/// (largest first), then `c(□) + m` over the boxes of `μ` in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralCharacter {
    pub exponents: Vec<Rational>,
}

pub fn central_character(kappa: &Partition, mu: &Partition, m: &Rational) -> Result<CentralCharacter> {
    if !mu.is_empty() && !is_residual_point(mu, m) {
        return Err(Error::NotResidual {
            mu: mu.clone(),
            m: m.clone(),
        });
    }
    let mut exponents: Vec<Rational> = kappa
        .parts()
        .iter()
        .flat_map(|&p| strip(p).signed_entries)
        .collect();
    exponents.extend(mu.boxes().map(|b| Rational::from_int(b.content()) + m));
    Ok(CentralCharacter { exponents })
}

/// `|κ| + |μ| = n` and `μ` is empty or residual at `m`.
pub fn validate_datum(n: usize, m: &Rational, kappa: &Partition, mu: &Partition) -> bool {
    kappa.weight() + mu.weight() == n && (mu.is_empty() || is_residual_point(mu, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn split_examples() {
        let s = split(&p(&[4, 3, 2, 1, 1]), &r(3, 1)).unwrap();
        assert_eq!(s.bipartition, Bipartition::new(p(&[4, 3, 2]), p(&[2])));
        let s = split(&p(&[2]), &r(1, 1)).unwrap();
        assert_eq!(s.bipartition, Bipartition::new(p(&[2]), p(&[])));
        assert!(split(&p(&[1, 1]), &r(1, 1)).is_none());
        assert_eq!(split(&p(&[]), &r(1, 1)), Some(SplitResult::empty()));
    }

    #[test]
    fn split_blocks_of_worked_example() {
        let s = split(&p(&[4, 3, 2, 1, 1]), &r(3, 1)).unwrap();
        let summary: Vec<_> = s
            .blocks
            .iter()
            .map(|b| (b.orientation, b.segments[0].low.clone(), b.segments[0].high.clone()))
            .collect();
        use Orientation::*;
        assert_eq!(
            summary,
            vec![
                (Horizontal, r(3, 1), r(6, 1)),
                (Horizontal, r(2, 1), r(4, 1)),
                (Horizontal, r(1, 1), r(2, 1)),
                (Vertical, r(0, 1), r(1, 1)),
            ]
        );
        assert_eq!(s.blocks[3].boxes, vec![BoxCoord::new(4, 1), BoxCoord::new(5, 1)]);
    }

    #[test]
    fn block_crossing_the_zero_diagonal() {
        // Entries 1,0,1,2 down one column: a single vertical block with two segments.
        let s = split(&p(&[1, 1, 1, 1]), &r(1, 1)).unwrap();
        assert_eq!(s.bipartition, Bipartition::new(p(&[]), p(&[4])));
        let segs: Vec<_> = s.segments().map(|g| (g.low.clone(), g.high.clone())).collect();
        assert_eq!(segs, vec![(r(1, 1), r(1, 1)), (r(0, 1), r(2, 1))]);
    }

    #[test]
    fn same_orbit_gives_similar_splits() {
        // (2,2) and (1,1,1,1) have the same central character at m = 1.
        let a = split(&p(&[2, 2]), &r(1, 1)).unwrap().bipartition;
        let b = split(&p(&[1, 1, 1, 1]), &r(1, 1)).unwrap().bipartition;
        assert_eq!(a, Bipartition::new(p(&[2, 2]), p(&[])));
        assert_eq!(b, Bipartition::new(p(&[]), p(&[4])));
    }

    #[test]
    fn enclosed_set_must_be_a_line() {
        assert!(split(&p(&[2, 2]), &r(0, 1)).is_none());
    }

    #[test]
    fn residual_examples() {
        assert!(is_residual_point(&p(&[1]), &r(1, 1)));
        let d = residual_diagnostics(&p(&[1, 1]), &r(1, 1));
        assert_eq!((d.pole_roots, d.zero_roots, d.residual), (3, 2, false));
        assert!(is_residual_point(&p(&[2]), &r(1, 2)));
        assert!(!is_residual_point(&p(&[1, 1]), &r(1, 2)));
        assert!(is_residual_point(&p(&[]), &r(1, 1)));
    }

    #[test]
    fn central_characters() {
        let cc = central_character(&p(&[3]), &p(&[]), &r(5, 1)).unwrap();
        assert_eq!(cc.exponents, vec![r(-1, 1), r(0, 1), r(1, 1)]);
        let cc = central_character(&p(&[]), &p(&[1]), &r(2, 1)).unwrap();
        assert_eq!(cc.exponents, vec![r(2, 1)]);
        let cc = central_character(&p(&[2, 2]), &p(&[1]), &r(1, 1)).unwrap();
        assert_eq!(
            cc.exponents,
            vec![r(-1, 2), r(1, 2), r(-1, 2), r(1, 2), r(1, 1)]
        );
        assert!(central_character(&p(&[]), &p(&[1, 1]), &r(1, 1)).is_err());
    }

    #[test]
    fn datum_validation() {
        assert!(validate_datum(36, &r(3, 1), &p(&[11, 7, 4, 3]), &p(&[4, 3, 2, 1, 1])));
        assert!(validate_datum(2, &r(0, 1), &p(&[1, 1]), &p(&[])));
        assert!(!validate_datum(3, &r(1, 1), &p(&[1]), &p(&[1, 1])));
        assert!(!validate_datum(4, &r(0, 1), &p(&[1, 1]), &p(&[])));
    }
}
