//! m-tableaux and A-strips.

use serde::{Deserialize, Serialize};

use crate::partition::{BoxCoord, Partition};
use crate::rational::Rational;

/// The diagram of a partition filled with `|content + m|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MTableau {
    pub shape: Partition,
    pub m: Rational,
    rows: Vec<Vec<Rational>>,
}

impl MTableau {
    pub fn entry(&self, b: BoxCoord) -> Option<&Rational> {
        self.rows.get(b.row.checked_sub(1)?)?.get(b.col.checked_sub(1)?)
    }

    /// Rows of entries, row 1 first.
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Boxes with their entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (BoxCoord, &Rational)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, e)| (BoxCoord::new(r + 1, c + 1), e))
        })
    }

    /// All entries, sorted ascending.
    pub fn entry_multiset(&self) -> Vec<Rational> {
        let mut out: Vec<_> = self.rows.iter().flatten().cloned().collect();
        out.sort();
        out
    }
}

/// Entry of `b` in the m-tableau: `|c(b) + m|`.
pub fn entry(b: BoxCoord, m: &Rational) -> Rational {
    (Rational::from_int(b.content()) + m).abs()
}

pub fn m_tableau(shape: &Partition, m: &Rational) -> MTableau {
    let rows = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            (1..=len)
                .map(|c| entry(BoxCoord::new(r + 1, c), m))
                .collect()
        })
        .collect();
    MTableau {
        shape: shape.clone(),
        m: m.clone(),
        rows,
    }
}

/// A row of `length` boxes with entries `-(p-1)/2, ..., (p-1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AStrip {
    pub length: usize,
    pub signed_entries: Vec<Rational>,
    /// Absolute values of the signed entries, ascending.
    pub abs_entries: Vec<Rational>,
}

impl AStrip {
    /// Largest entry, `(p-1)/2`.
    pub fn top(&self) -> Rational {
        half_width(self.length)
    }
}

/// `(p-1)/2`.
pub fn half_width(p: usize) -> Rational {
    Rational::new(p as i64 - 1, 2)
}

/// Panics if `p == 0`.
pub fn strip(p: usize) -> AStrip {
    assert!(p >= 1, "strip length must be positive");
    let z = half_width(p);
    let signed_entries: Vec<Rational> = (0..p as i64).map(|i| &z * -1 + i).collect();
    let mut abs_entries: Vec<Rational> = signed_entries.iter().map(Rational::abs).collect();
    abs_entries.sort();
    AStrip {
        length: p,
        signed_entries,
        abs_entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn tableau_entries() {
        let t = m_tableau(&Partition::new(vec![1]), &r(3, 1));
        assert_eq!(t.entry(BoxCoord::new(1, 1)), Some(&r(3, 1)));

        let t = m_tableau(&Partition::new(vec![4, 3, 2, 1, 1]), &r(3, 1));
        let ints = |v: &[i64]| v.iter().map(|&x| r(x, 1)).collect::<Vec<_>>();
        assert_eq!(t.rows()[0], ints(&[3, 4, 5, 6]));
        assert_eq!(t.rows()[3], ints(&[0]));
        assert_eq!(t.rows()[4], ints(&[1]));

        let t = m_tableau(&Partition::new(vec![2]), &r(1, 2));
        assert_eq!(t.rows()[0], vec![r(1, 2), r(3, 2)]);
    }

    #[test]
    fn strips() {
        let s = strip(3);
        assert_eq!(s.signed_entries, vec![r(-1, 1), r(0, 1), r(1, 1)]);
        assert_eq!(s.abs_entries, vec![r(0, 1), r(1, 1), r(1, 1)]);
        assert_eq!(strip(1).signed_entries, vec![r(0, 1)]);
        let s = strip(4);
        assert_eq!(
            s.signed_entries,
            vec![r(-3, 2), r(-1, 2), r(1, 2), r(3, 2)]
        );
        assert_eq!(s.abs_entries, vec![r(1, 2), r(1, 2), r(3, 2), r(3, 2)]);
    }
}
