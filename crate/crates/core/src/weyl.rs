//! Signed permutations: the hyperoctahedral group `W(B_n)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// `w(e_i) = sign_i * e_{σ(i)}`, stored as the signed 1-based images
/// `sign_i * σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    /// Returns `None` unless the absolute values form a permutation of `1..=n`.
    pub fn from_images(images: Vec<i32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let idx = v.unsigned_abs() as usize;
            if idx == 0 || idx > n || seen[idx - 1] {
                return None;
            }
            seen[idx - 1] = true;
        }
        Some(SignedPermutation { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Signed 1-based images.
    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Image of `e_i` (0-based) as `(target index, sign)`.
    pub fn image(&self, i: usize) -> (usize, i32) {
        let v = self.images[i];
        (v.unsigned_abs() as usize - 1, v.signum())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let images = other
            .images
            .iter()
            .map(|&v| {
                let (j, s) = (v.unsigned_abs() as usize - 1, v.signum());
                s * self.images[j]
            })
            .collect();
        SignedPermutation { images }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0; self.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v.unsigned_abs() as usize - 1] = v.signum() * (i as i32 + 1);
        }
        SignedPermutation { images }
    }

    /// Image of a coordinate vector.
    pub fn apply<T>(&self, v: &[T]) -> Vec<T>
    where
        T: Clone + std::ops::Neg<Output = T>,
    {
        assert_eq!(v.len(), self.rank(), "rank mismatch");
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            let (j, s) = self.image(i);
            out[j] = if s < 0 { -x.clone() } else { x.clone() };
        }
        out
    }

    /// Number of positive roots (`e_i ± e_j` with `i < j`, and `e_i`) sent to
    /// negative roots.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut count = 0;
        for i in 0..n {
            let (_, s) = self.image(i);
            if s < 0 {
                count += 1;
            }
            for j in i + 1..n {
                for t in [1, -1] {
                    let mut v = vec![0i32; n];
                    let (a, sa) = self.image(i);
                    let (b, sb) = self.image(j);
                    v[a] += sa;
                    v[b] += t * sb;
                    if !is_positive(&v) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// Reduced expression in the simple reflections: `k < n` swaps `e_k` and
    /// `e_{k+1}`, `n` negates `e_n` (1-based). The returned word `[i_1, …, i_r]`
    /// means `w = s_{i_1} ∘ … ∘ s_{i_r}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: while !w.is_identity() {
            for k in 1..=n {
                let alpha = simple_root(n, k);
                if !is_positive(&w.apply(&alpha)) {
                    w = w.compose(&simple_reflection(n, k));
                    word.push(k);
                    continue 'outer;
                }
            }
            unreachable!("a non-identity element has a descent");
        }
        word.reverse();
        word
    }

    /// One-line notation, e.g. `[1 2 -4 -3]`.
    pub fn one_line(&self) -> String {
        let body: Vec<String> = self.images.iter().map(i32::to_string).collect();
        format!("[{}]", body.join(" "))
    }

    /// Non-trivial images as `e3->-e4`, identity coordinates omitted.
    pub fn image_table(&self) -> Vec<String> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| v != *i as i32 + 1)
            .map(|(i, &v)| {
                let sign = if v < 0 { "-" } else { "" };
                format!("e{}->{}e{}", i + 1, sign, v.unsigned_abs())
            })
            .collect()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

fn is_positive(v: &[i32]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

fn simple_root(n: usize, k: usize) -> Vec<i32> {
    let mut v = vec![0; n];
    v[k - 1] = 1;
    if k < n {
        v[k] = -1;
    }
    v
}

/// Simple reflection `s_k` (1-based, `k = n` is the sign change of `e_n`).
pub fn simple_reflection(n: usize, k: usize) -> SignedPermutation {
    assert!((1..=n).contains(&k), "no simple reflection {k} in rank {n}");
    let mut images: Vec<i32> = (1..=n as i32).collect();
    if k < n {
        images.swap(k - 1, k);
    } else {
        images[n - 1] = -(n as i32);
    }
    SignedPermutation { images }
}

/// Product of the simple reflections in `word`, leftmost outermost.
pub fn from_word(n: usize, word: &[usize]) -> SignedPermutation {
    word.iter().fold(SignedPermutation::identity(n), |acc, &k| {
        acc.compose(&simple_reflection(n, k))
    })
}

/// `2^r r!`.
pub fn order_b(r: usize) -> BigUint {
    factorial(r) << r
}

/// `2^(r-1) r!` for `r ≥ 1`; the rank-0 group is trivial.
pub fn order_d(r: usize) -> BigUint {
    if r == 0 {
        BigUint::one()
    } else {
        factorial(r) << (r - 1)
    }
}

pub fn factorial(r: usize) -> BigUint {
    (1..=r).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// True if `elements` is a group in which every element squares to the
/// identity (hence abelian of order a power of two).
pub fn is_elementary_abelian_2_group(elements: &[SignedPermutation]) -> bool {
    let Some(first) = elements.first() else {
        return false;
    };
    let n = first.rank();
    let set: std::collections::HashSet<&SignedPermutation> = elements.iter().collect();
    if set.len() != elements.len() || !set.contains(&SignedPermutation::identity(n)) {
        return false;
    }
    if !elements.len().is_power_of_two() {
        return false;
    }
    for a in elements {
        if !a.compose(a).is_identity() {
            return false;
        }
        for b in elements {
            let ab = a.compose(b);
            if ab != b.compose(a) || !set.contains(&ab) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(images: &[i32]) -> SignedPermutation {
        SignedPermutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(SignedPermutation::from_images(vec![1, 1]).is_none());
        assert!(SignedPermutation::from_images(vec![0, 1]).is_none());
        assert!(SignedPermutation::from_images(vec![3, 1]).is_none());
    }

    #[test]
    fn compose_and_inverse() {
        let w = sp(&[2, -3, 1]);
        assert!(w.compose(&w.inverse()).is_identity());
        assert!(w.inverse().compose(&w).is_identity());
        let v = w.apply(&[10, 20, 30]);
        assert_eq!(v, vec![30, 10, -20]);
        let u = sp(&[-1, 3, 2]);
        assert_eq!(w.compose(&u).apply(&[1, 2, 3]), w.apply(&u.apply(&[1, 2, 3])));
    }

    #[test]
    fn reduced_words() {
        let w = sp(&[1, 2, -4, -3]);
        let word = w.reduced_word();
        assert_eq!(word.len(), w.length());
        assert_eq!(from_word(4, &word), w);
        assert_eq!(sp(&[-1]).reduced_word(), vec![1]);
        // Longest element of B_3 has length 9.
        assert_eq!(sp(&[-1, -2, -3]).length(), 9);
    }

    #[test]
    fn group_orders() {
        assert_eq!(order_b(2), BigUint::from(8u32));
        assert_eq!(order_d(2), BigUint::from(4u32));
        assert_eq!(order_d(1), BigUint::one());
        assert_eq!(order_b(8), BigUint::from(10_321_920u32));
    }

    #[test]
    fn elementary_abelian() {
        let e = SignedPermutation::identity(2);
        let a = sp(&[-1, 2]);
        let b = sp(&[1, -2]);
        let ab = a.compose(&b);
        assert!(is_elementary_abelian_2_group(&[e.clone(), a.clone(), b.clone(), ab]));
        assert!(!is_elementary_abelian_2_group(&[e.clone(), a.clone(), b]));
        assert!(!is_elementary_abelian_2_group(&[e, sp(&[2, 1]), sp(&[-2, -1]), sp(&[-1, -2]), a]));
    }
}
