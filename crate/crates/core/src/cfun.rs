//! Pole orders of restricted c-functions at real central characters.
//!
//! A c-function factor is `(1 - q^a)` in the numerator or `(1 - q^b)` in the
//! denominator, with `q > 1` generic, so a factor vanishes exactly when its
//! exponent is zero. Everything here is bookkeeping of exponents.

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::rational::Rational;
use crate::splitting::SplitResult;
use crate::tableau::{entry, half_width, strip};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorProduct {
    pub numerator: Vec<Rational>,
    pub denominator: Vec<Rational>,
}

impl FactorProduct {
    /// Vanishing denominator factors minus vanishing numerator factors.
    /// Positive values are pole orders, negative values zero orders.
    pub fn order(&self) -> i64 {
        let zeros = |v: &[Rational]| v.iter().filter(|e| e.is_zero()).count() as i64;
        zeros(&self.denominator) - zeros(&self.numerator)
    }

    pub fn extend(&mut self, other: FactorProduct) {
        self.numerator.extend(other.numerator);
        self.denominator.extend(other.denominator);
    }
}

pub fn order(fp: &FactorProduct) -> i64 {
    fp.order()
}

/// Which of the two restricted roots `E_i - E_j` (`Minus`) or `E_i + E_j`
/// (`Plus`) between two A-blocks is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairSign {
    Plus,
    Minus,
}

/// Factors for a pair of A-blocks of sizes `p1` and `p2`.
pub fn pair_factors(p1: usize, p2: usize, sign: PairSign) -> FactorProduct {
    let mut fp = FactorProduct::default();
    let s1 = strip(p1).signed_entries;
    let s2 = strip(p2).signed_entries;
    for a in &s1 {
        for b in &s2 {
            let e = match sign {
                PairSign::Plus => a + b,
                PairSign::Minus => a - b,
            };
            fp.numerator.push(&e - 1);
            fp.denominator.push(e);
        }
    }
    fp
}

pub fn pole_order_pair(p1: usize, p2: usize, sign: PairSign) -> i64 {
    pair_factors(p1, p2, sign).order()
}

/// Factors of the short restricted root of an A-block of size `p` that only
/// involve the block itself.
pub fn a_part_factors(p: usize, m: &Rational) -> FactorProduct {
    let s = strip(p).signed_entries;
    let mut fp = FactorProduct::default();
    for e in &s {
        fp.numerator.push(e - m);
        fp.denominator.push(e.clone());
    }
    for (i, a) in s.iter().enumerate() {
        for b in &s[i + 1..] {
            let sum = a + b;
            fp.numerator.push(&sum - 1);
            fp.denominator.push(sum);
        }
    }
    fp
}

pub fn pole_order_a_part(p: usize, m: &Rational) -> i64 {
    a_part_factors(p, m).order()
}

/// Closed form for the contribution of one block with entries `x..=y` of the
/// split of `μ` to the pole order of a strip of length `p` (`z = (p-1)/2`):
/// `-1` if `z = x - 1`, `+1` if `z = y`, otherwise `0`, and `0` whenever
/// `z - x` is not an integer. A strip of length 1 against a block starting at
/// entry 0 picks up one more pole, from the doubled zero of that box.
pub fn pole_order_block(p: usize, x: &Rational, y: &Rational) -> i64 {
    let z = half_width(p);
    if !(&z - x).is_integer() {
        return 0;
    }
    let mut order = 0;
    if z == x - 1 {
        order -= 1;
    }
    if &z == y {
        order += 1;
    }
    if z.is_zero() && x.is_zero() {
        order += 1;
    }
    order
}

/// All factors of the short restricted root of an A-block of size `p` against
/// the B-part `μ`: the A-part plus, for every strip entry `e` and box entry
/// `f = |c + m|`, numerators `-1 - e ± f` and denominators `-e ± f`.
pub fn short_factors(p: usize, mu: &Partition, m: &Rational) -> FactorProduct {
    let mut fp = a_part_factors(p, m);
    let s = strip(p).signed_entries;
    for b in mu.boxes() {
        let f = entry(b, m);
        for e in &s {
            let base = -e;
            fp.numerator.push(&base - 1 + &f);
            fp.numerator.push(&base - 1 - &f);
            fp.denominator.push(&base + &f);
            fp.denominator.push(&base - &f);
        }
    }
    fp
}

pub fn pole_order_short_direct(p: usize, mu: &Partition, m: &Rational) -> i64 {
    short_factors(p, mu, m).order()
}

/// A-part order plus the closed-form block contributions.
pub fn pole_order_short_blockwise(p: usize, split: &SplitResult, m: &Rational) -> i64 {
    pole_order_a_part(p, m)
        + split
            .segments()
            .map(|s| pole_order_block(p, &s.low, &s.high))
            .sum::<i64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splitting::split;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn fp(num: &[i64], den: &[i64]) -> FactorProduct {
        FactorProduct {
            numerator: num.iter().map(|&x| r(x, 1)).collect(),
            denominator: den.iter().map(|&x| r(x, 1)).collect(),
        }
    }

    #[test]
    fn orders() {
        assert_eq!(fp(&[1], &[0]).order(), 1);
        assert_eq!(fp(&[0], &[0]).order(), 0);
        assert_eq!(fp(&[0, 0], &[]).order(), -2);
    }

    #[test]
    fn pair_orders() {
        assert_eq!(pole_order_pair(2, 2, PairSign::Plus), 1);
        assert_eq!(pole_order_pair(2, 3, PairSign::Plus), 0);
        assert_eq!(pole_order_pair(1, 1, PairSign::Plus), 1);
        assert_eq!(pole_order_pair(3, 3, PairSign::Minus), 1);
        assert_eq!(pole_order_pair(3, 5, PairSign::Minus), 0);
    }

    #[test]
    fn a_part_orders() {
        assert_eq!(pole_order_a_part(3, &r(1, 1)), 0);
        assert_eq!(pole_order_a_part(3, &r(2, 1)), 1);
        assert_eq!(pole_order_a_part(1, &r(0, 1)), 0);
    }

    #[test]
    fn block_orders() {
        assert_eq!(pole_order_block(3, &r(2, 1), &r(4, 1)), -1);
        assert_eq!(pole_order_block(7, &r(1, 1), &r(3, 1)), 1);
        assert_eq!(pole_order_block(4, &r(1, 1), &r(2, 1)), 0);
        assert_eq!(pole_order_block(1, &r(0, 1), &r(1, 1)), 1);
        assert_eq!(pole_order_block(1, &r(0, 1), &r(0, 1)), 2);
    }

    #[test]
    fn short_orders() {
        let mu = Partition::new(vec![4, 3, 2, 1, 1]);
        assert_eq!(pole_order_short_direct(3, &Partition::empty(), &r(1, 1)), 0);
        assert_eq!(pole_order_short_direct(2, &Partition::new(vec![2]), &r(1, 2)), 0);
        assert_eq!(pole_order_short_direct(3, &mu, &r(3, 1)), 1);
        let s = split(&mu, &r(3, 1)).unwrap();
        assert_eq!(pole_order_short_blockwise(7, &s, &r(3, 1)), 0);
        assert_eq!(pole_order_short_blockwise(11, &s, &r(3, 1)), 0);
        assert_eq!(pole_order_short_blockwise(4, &s, &r(3, 1)), 1);
    }

    #[test]
    fn length_one_strip_against_zero_block() {
        // μ = (2) at m = 0 is a single horizontal block with entries 0..1.
        let mu = Partition::new(vec![2]);
        let s = split(&mu, &r(0, 1)).unwrap();
        assert_eq!(pole_order_short_direct(1, &mu, &r(0, 1)), 1);
        assert_eq!(pole_order_short_blockwise(1, &s, &r(0, 1)), 1);
    }
}
