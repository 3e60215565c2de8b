//! PBW-shaped basis monomials `x^e · σ · c_γ` and exact Clifford mask algebra.
//!
//! The Clifford part is stored as a bitmask (bit `i − 1` set means `c_i`
//! occurs), with the product always written in increasing index order.

use crate::error::{AlgebraError, Result};
use crate::perm::Perm;

pub type CliffordMask = u32;

/// Multiplies two canonically ordered Clifford products. Returns the
/// resulting mask and the accumulated sign from anticommutation and
/// `c_i^2 = 1`.
pub fn clifford_mul(a: CliffordMask, b: CliffordMask) -> (CliffordMask, i32) {
    let mut acc = a;
    let mut sign = 1i32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        // c_{j+1} moves left past every factor of acc with a larger index
        let above = (acc as u64) & !((1u64 << (j + 1)) - 1);
        if above.count_ones() % 2 == 1 {
            sign = -sign;
        }
        acc ^= 1 << j;
    }
    (acc, sign)
}

/// Relabels a canonically ordered Clifford product through an index map and
/// re-sorts, tracking the sign. `map(i)` gives the new 1-based index of `c_i`.
pub fn relabel_mask(mask: CliffordMask, map: impl Fn(usize) -> usize) -> (CliffordMask, i32) {
    let mut seq = Vec::new();
    let mut m = mask;
    while m != 0 {
        let j = m.trailing_zeros() as usize;
        m &= m - 1;
        seq.push(map(j + 1));
    }
    sort_sign(&seq)
}

/// The canonical product `c_{i_1}^{α_1} ··· c_{i_a}^{α_a}` for an ordered index
/// list, as (mask, sign) relative to increasing-order normal form.
pub fn clifford_of_ordered(entries: &[usize], alpha_bits: &[u8]) -> (CliffordMask, i32) {
    debug_assert_eq!(entries.len(), alpha_bits.len());
    let seq: Vec<usize> = entries
        .iter()
        .zip(alpha_bits)
        .filter(|(_, &b)| b == 1)
        .map(|(&i, _)| i)
        .collect();
    sort_sign(&seq)
}

/// Sign of sorting a sequence of distinct indices into increasing order, and
/// the resulting mask.
fn sort_sign(seq: &[usize]) -> (CliffordMask, i32) {
    let mut inversions = 0usize;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            debug_assert_ne!(seq[a], seq[b]);
            if seq[a] > seq[b] {
                inversions += 1;
            }
        }
    }
    let mut mask = 0u32;
    for &i in seq {
        mask |= 1 << (i - 1);
    }
    (mask, if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// A basis monomial `x^e · σ · c_γ`. In both algebras the normal form keeps
/// every exponent below the level `l` and the Clifford product in increasing
/// index order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub exps: Vec<u8>,
    pub perm: Perm,
    pub cliff: CliffordMask,
}

impl Monomial {
    pub fn identity(d: usize) -> Self {
        Monomial { exps: vec![0; d], perm: Perm::identity(d), cliff: 0 }
    }

    pub fn strands(&self) -> usize {
        self.exps.len()
    }

    /// Total x-degree.
    pub fn x_degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// Superparity is the Clifford length mod 2.
    pub fn is_even(&self) -> bool {
        self.cliff.count_ones().is_multiple_of(2)
    }

    pub fn clifford_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut m = self.cliff;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            out.push(j + 1);
        }
        out
    }

    pub fn validate(&self, d: usize, l: usize) -> Result<()> {
        if self.exps.len() != d || self.perm.len() != d {
            return Err(AlgebraError::ConfigMismatch(format!(
                "monomial over {} strands used with d = {d}",
                self.exps.len()
            )));
        }
        if self.exps.iter().any(|&e| e as usize >= l) {
            return Err(AlgebraError::ConfigMismatch(format!(
                "exponent exceeds level {l} in {:?}",
                self.exps
            )));
        }
        if self.cliff >> d != 0 {
            return Err(AlgebraError::ConfigMismatch("Clifford index exceeds d".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_squares_to_one() {
        let (m, s) = clifford_mul(0b1, 0b1);
        assert_eq!((m, s), (0, 1));
    }

    #[test]
    fn clifford_anticommutes() {
        // c_2 c_1 = -c_1 c_2
        let (m, s) = clifford_mul(0b10, 0b01);
        assert_eq!((m, s), (0b11, -1));
        let (m, s) = clifford_mul(0b01, 0b10);
        assert_eq!((m, s), (0b11, 1));
    }

    #[test]
    fn clifford_mul_matches_naive() {
        // compare against a naive sequence-based product for all 4-index masks
        fn naive(a: u32, b: u32) -> (u32, i32) {
            let mut seq: Vec<usize> = Vec::new();
            for m in [a, b] {
                for j in 0..4 {
                    if m >> j & 1 == 1 {
                        seq.push(j);
                    }
                }
            }
            let mut sign = 1;
            // bubble to sorted order, cancelling equal neighbours
            loop {
                let mut changed = false;
                let mut k = 0;
                while k + 1 < seq.len() {
                    if seq[k] == seq[k + 1] {
                        seq.drain(k..k + 2);
                        changed = true;
                    } else if seq[k] > seq[k + 1] {
                        seq.swap(k, k + 1);
                        sign = -sign;
                        changed = true;
                    } else {
                        k += 1;
                    }
                }
                if !changed {
                    break;
                }
            }
            let mut mask = 0;
            for &j in &seq {
                mask |= 1 << j;
            }
            (mask, sign)
        }
        for a in 0u32..16 {
            for b in 0u32..16 {
                assert_eq!(clifford_mul(a, b), naive(a, b), "a={a:04b} b={b:04b}");
            }
        }
    }

    #[test]
    fn ordered_product_sign() {
        // c_2 c_1 written over the ordered set (2, 1) with alpha = (1, 1)
        let (mask, sign) = clifford_of_ordered(&[2, 1], &[1, 1]);
        assert_eq!((mask, sign), (0b11, -1));
        let (mask, sign) = clifford_of_ordered(&[3, 1, 2], &[1, 0, 1]);
        assert_eq!((mask, sign), (0b110, -1)); // c_3 c_2 = -c_2 c_3
    }

    #[test]
    fn relabel_sign() {
        // swap 1 <-> 2 inside c_1 c_2: becomes c_2 c_1 = -c_1 c_2
        let swap = |i: usize| match i {
            1 => 2,
            2 => 1,
            other => other,
        };
        assert_eq!(relabel_mask(0b11, swap), (0b11, -1));
        assert_eq!(relabel_mask(0b01, swap), (0b10, 1));
    }
}
