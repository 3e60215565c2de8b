//! The named element families of the graded algebra: the polynomials
//! `h_r^α(A)`, X-cycles, CX-cycles, odd skew cycles, colored Jucys-Murphy
//! elements, and the candidate central sums `z(λ)` and `m(μ)`.

use std::collections::BTreeMap;

use crate::element::GrElement;
use crate::error::{AlgebraError, Result};
use crate::graded::GrAlgebra;
use crate::monomial::{clifford_of_ordered, Monomial};
use crate::parity::{ParityClass, ParityVector};
use crate::partitions::{distinct_permutations, Multipartition, Partition};
use crate::perm::Perm;
use crate::scalar::{self};

/// An ordered list of distinct strand indices `A = (i_1, ..., i_a)`. The order
/// matters: it fixes the cycle `σ_A` and the Clifford product `c_α(A)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrderedIndexSet {
    entries: Vec<usize>,
}

impl OrderedIndexSet {
    pub fn new(entries: Vec<usize>, d: usize) -> Result<Self> {
        if entries.is_empty() {
            return Err(AlgebraError::BadIndexSet("empty index set".into()));
        }
        let mut seen = vec![false; d];
        for &i in &entries {
            if i == 0 || i > d {
                return Err(AlgebraError::IndexOutOfRange { index: i, max: d });
            }
            if seen[i - 1] {
                return Err(AlgebraError::BadIndexSet(format!("repeated index {i}")));
            }
            seen[i - 1] = true;
        }
        Ok(OrderedIndexSet { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// One place to the right: `(i_a, i_1, ..., i_{a−1})`.
    pub fn rotated(&self) -> OrderedIndexSet {
        let a = self.entries.len();
        let mut entries = Vec::with_capacity(a);
        entries.push(self.entries[a - 1]);
        entries.extend_from_slice(&self.entries[..a - 1]);
        OrderedIndexSet { entries }
    }

    /// The cycle `σ_A` with `σ_A(i_j) = i_{j+1}` and `σ_A(i_a) = i_1`.
    pub fn sigma(&self, d: usize) -> Perm {
        Perm::cycle(&self.entries, d).expect("validated entries")
    }

    pub fn is_disjoint(&self, other: &OrderedIndexSet) -> bool {
        self.entries.iter().all(|i| !other.entries.contains(i))
    }

    /// The ordered junction union `(i_1, ..., i_{a−1}, k, j_2, ..., j_b)` for
    /// `A = (i_1, ..., i_{a−1}, k)` and `B = (k, j_2, ..., j_b)`; requires
    /// that the last entry of `A` equal the first of `B` and that there be no
    /// other overlap.
    pub fn junction_union(&self, other: &OrderedIndexSet, d: usize) -> Result<OrderedIndexSet> {
        let k = *self.entries.last().unwrap();
        if other.entries[0] != k {
            return Err(AlgebraError::BadIndexSet(format!(
                "junction mismatch: {:?} does not start with {k}",
                other.entries
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries[1..]);
        OrderedIndexSet::new(entries, d)
    }
}

impl std::fmt::Display for OrderedIndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// All ordered index sets of size `a` inside `I_d`.
pub fn ordered_subsets(d: usize, a: usize) -> Vec<OrderedIndexSet> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        if cur.len() == a {
            out.push(OrderedIndexSet { entries: cur });
            continue;
        }
        for i in (1..=d).rev() {
            if !cur.contains(&i) {
                let mut next = cur.clone();
                next.push(i);
                stack.push(next);
            }
        }
    }
    out
}

/// All unordered `a`-subsets of a pool of indices.
pub fn subsets(pool: &[usize], a: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(pool: &[usize], start: usize, a: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == a {
            out.push(cur.clone());
            return;
        }
        for idx in start..pool.len() {
            cur.push(pool[idx]);
            rec(pool, idx + 1, a, cur, out);
            cur.pop();
        }
    }
    rec(pool, 0, a, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn compositions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(total: usize, parts: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = total.min(cap);
        // remaining parts must be able to absorb the rest
        for v in 0..=hi {
            if total - v <= cap * (parts - 1) {
                cur.push(v);
                rec(total - v, parts - 1, cap, cur, out);
                cur.pop();
            }
        }
    }
    rec(total, parts, cap, &mut Vec::new(), &mut out);
    out
}

/// `h_r^α(A) = Σ_{r_1+···+r_a = (a−1)(l−1)+r} Π_j (ε^α_j x_{i_j})^{r_j}`, with
/// exponents at or above `l` discarded by truncation. Zero whenever `r > l−1`.
pub fn h_poly(alg: &GrAlgebra, a_set: &OrderedIndexSet, r: usize, alpha: &ParityVector) -> Result<GrElement> {
    let a = a_set.size();
    let d = alg.d();
    let l = alg.l();
    if alpha.len() != a {
        return Err(AlgebraError::BadIndexSet(format!(
            "parity vector length {} does not match |A| = {a}",
            alpha.len()
        )));
    }
    if !alpha.is_even() {
        return Err(AlgebraError::OddParityVector { weight: alpha.weight() });
    }
    for &i in a_set.entries() {
        if i > d {
            return Err(AlgebraError::IndexOutOfRange { index: i, max: d });
        }
    }
    let degree = (a - 1) * (l - 1) + r;
    let eps = alpha.epsilon_signs();
    let mut out = GrElement::zero();
    for comp in compositions(degree, a, l - 1) {
        let mut m = Monomial::identity(d);
        let mut sign = 1i32;
        for (j, &rj) in comp.iter().enumerate() {
            m.exps[a_set.entries()[j] - 1] = rj as u8;
            if eps[j] < 0 && rj % 2 == 1 {
                sign = -sign;
            }
        }
        out.add_term(m, scalar::sign_scalar(sign));
    }
    Ok(out)
}

/// The X-cycle `A^{(r,α)} = h_r^α(A) · σ_A · c_α(A)` in normal form.
pub fn xcycle(alg: &GrAlgebra, a_set: &OrderedIndexSet, r: usize, alpha: &ParityVector) -> Result<GrElement> {
    let h = h_poly(alg, a_set, r, alpha)?;
    let sigma = a_set.sigma(alg.d());
    let (mask, csign) = clifford_of_ordered(a_set.entries(), alpha.bits());
    let mut out = GrElement::zero();
    for (m, c) in h.terms() {
        let nm = Monomial { exps: m.exps.clone(), perm: sigma.clone(), cliff: mask };
        out.add_term(nm, c.clone() * scalar::sign_scalar(csign));
    }
    Ok(out)
}

/// Whether the element `A^{(r)}` with `|A| = a` lands in the even Clifford
/// centralizer: `(a−1)l + r` must be even.
pub fn is_cx(a: usize, r: usize, l: usize) -> bool {
    ((a - 1) * l + r).is_multiple_of(2)
}

/// `A^{(r)} = Σ_{α ∈ eZ^a} τ_α A^{(r,α)}`. Defined for every `r >= 0` (and
/// needed with the parity condition violated, e.g. inside Jucys-Murphy sums
/// for odd degrees); it is a CX-cycle precisely when `is_cx(|A|, r, l)`.
pub fn cxcycle(alg: &GrAlgebra, a_set: &OrderedIndexSet, r: usize) -> Result<GrElement> {
    let a = a_set.size();
    let mut out = GrElement::zero();
    for alpha in ParityVector::enumerate(a, ParityClass::Even) {
        let tau = alpha.tau().expect("even vector");
        let term = xcycle(alg, a_set, r, &alpha)?;
        out.add_assign(&term.scale(&scalar::sign_scalar(tau)));
    }
    Ok(out)
}

/// The odd skew cycle on `A`: `F · σ_A · Σ_{α ∈ oZ^a} θ_α c_α(A)` with
/// `F = Π_{i∈A} x_i^{l−1}`, normalized by `θ_{1_1} = 1` and extended along
/// `θ_{α^{(j)}} = (−1)^{l−1}(−1)^{α_j+α_{j−1}} θ_α` (cyclically at `j = 1`).
/// Exists if and only if `l·|A|` is even.
pub fn odd_skew_cycle(alg: &GrAlgebra, a_set: &OrderedIndexSet) -> Result<GrElement> {
    let a = a_set.size();
    let l = alg.l();
    let d = alg.d();
    if l % 2 == 1 && a % 2 == 1 {
        return Err(AlgebraError::NoOddSkewCycle { l, a });
    }
    let base = ParityVector::unit(a, 1)?;
    let mut theta: BTreeMap<ParityVector, i32> = BTreeMap::new();
    theta.insert(base.clone(), 1);
    let mut queue = vec![base];
    let l_sign = if (l - 1).is_multiple_of(2) { 1 } else { -1 };
    // the coefficient recursion links α to α^{(j)}; it is derived from the
    // skew-commutation with two distinct Clifford generators, so it only
    // applies for a >= 2 (a single strand has the one odd vector (1))
    while let Some(alpha) = queue.pop() {
        if a < 2 {
            break;
        }
        let t = theta[&alpha];
        for j in 1..=a {
            let next = alpha.shift(j)?;
            let flip = if j > 1 {
                (alpha.bit(j) + alpha.bit(j - 1)) % 2
            } else {
                (alpha.bit(1) + alpha.bit(a)) % 2
            };
            let t_next = t * l_sign * if flip == 0 { 1 } else { -1 };
            match theta.get(&next) {
                Some(&known) => {
                    if known != t_next {
                        return Err(AlgebraError::Internal(format!(
                            "inconsistent skew coefficients at {next} (l = {l}, a = {a})"
                        )));
                    }
                }
                None => {
                    theta.insert(next.clone(), t_next);
                    queue.push(next);
                }
            }
        }
    }

    let sigma = a_set.sigma(d);
    let mut exps = vec![0u8; d];
    for &i in a_set.entries() {
        exps[i - 1] = (l - 1) as u8;
    }
    let mut out = GrElement::zero();
    for alpha in ParityVector::enumerate(a, ParityClass::Odd) {
        let t = *theta.get(&alpha).ok_or_else(|| {
            AlgebraError::Internal("odd parity vector missed by the coefficient recursion".into())
        })?;
        let (mask, csign) = clifford_of_ordered(a_set.entries(), alpha.bits());
        let m = Monomial { exps: exps.clone(), perm: sigma.clone(), cliff: mask };
        out.add_term(m, scalar::sign_scalar(t * csign));
    }
    Ok(out)
}

/// The colored Jucys-Murphy element `y_i(k)` for `k = (a−1)l + r`,
/// `0 <= r < l`: the sum of `(i i_1 ... i_{a−1})^{(r)}` over ordered tuples of
/// distinct indices below `i`. Odd `k` is permitted; the summands are
/// CX-cycles only when `k` is even.
pub fn jucys_murphy(alg: &GrAlgebra, i: usize, k: usize) -> Result<GrElement> {
    let d = alg.d();
    let l = alg.l();
    if i == 0 || i > d {
        return Err(AlgebraError::IndexOutOfRange { index: i, max: d });
    }
    let a = k / l + 1;
    let r = k % l;
    let mut out = GrElement::zero();
    let below: Vec<usize> = (1..i).collect();
    for subset in subsets(&below, a - 1) {
        for tail in distinct_permutations(&subset) {
            let mut entries = Vec::with_capacity(a);
            entries.push(i);
            entries.extend_from_slice(&tail);
            let a_set = OrderedIndexSet::new(entries, d)?;
            out.add_assign(&cxcycle(alg, &a_set, r)?);
        }
    }
    Ok(out)
}

/// The sum of all products of disjoint CX-cycles with cycle type `λ`, for
/// `λ ∈ M^ev_d(l)` of total size exactly `d`. Rotation classes of each block
/// are counted once, so each product appears exactly once.
pub fn z_element(alg: &GrAlgebra, lam: &Multipartition) -> Result<GrElement> {
    let d = alg.d();
    let l = alg.l();
    if lam.levels() != l {
        return Err(AlgebraError::BadMultipartition(format!(
            "{lam} has {} components, expected l = {l}",
            lam.levels()
        )));
    }
    if lam.size() != d || !lam.is_mev() {
        return Err(AlgebraError::NotInIndexingSet(format!("{lam}"), format!("M^ev_{d}({l})")));
    }
    let mut shapes = lam.cycle_shapes();
    shapes.sort_unstable();

    // one factor per block: the sum of the block's rotation-class CX-cycles
    fn block_factor(alg: &GrAlgebra, block: &[usize], degree: usize) -> Result<GrElement> {
        let mut out = GrElement::zero();
        let lead = block[0];
        let rest = &block[1..];
        for tail in distinct_permutations(rest) {
            let mut entries = Vec::with_capacity(block.len());
            entries.push(lead);
            entries.extend_from_slice(&tail);
            let a_set = OrderedIndexSet::new(entries, alg.d())?;
            out.add_assign(&cxcycle(alg, &a_set, degree)?);
        }
        Ok(out)
    }

    fn rec(
        alg: &GrAlgebra,
        shapes: &[(usize, usize)],
        idx: usize,
        free: &[usize],
        prev_min: Option<usize>,
        partial: &GrElement,
        out: &mut GrElement,
    ) -> Result<()> {
        if idx == shapes.len() {
            out.add_assign(partial);
            return Ok(());
        }
        let (a, degree) = shapes[idx];
        let same_as_prev = idx > 0 && shapes[idx - 1] == shapes[idx];
        for block in subsets(free, a) {
            if same_as_prev {
                // identical blocks are listed with increasing minima
                if let Some(pm) = prev_min {
                    if block[0] <= pm {
                        continue;
                    }
                }
            }
            let factor = block_factor(alg, &block, degree)?;
            let next_partial = alg.mul(partial, &factor)?;
            if next_partial.is_zero() {
                continue;
            }
            let remaining: Vec<usize> = free.iter().copied().filter(|i| !block.contains(i)).collect();
            rec(alg, shapes, idx + 1, &remaining, Some(block[0]), &next_partial, out)?;
        }
        Ok(())
    }

    let mut out = GrElement::zero();
    let all: Vec<usize> = (1..=d).collect();
    rec(alg, &shapes, 0, &all, None, &GrElement::one(d), &mut out)?;
    Ok(out)
}

/// `m(μ) = Σ_{ν ∼ μ} y_1(ν_1) ··· y_d(ν_d)` over distinct rearrangements of
/// the zero-padded `d`-tuple of `μ ∈ P^ev_d(l)`.
pub fn m_element(alg: &GrAlgebra, mu: &Partition) -> Result<GrElement> {
    let d = alg.d();
    let l = alg.l();
    if !mu.in_pev(d, l) {
        return Err(AlgebraError::NotInIndexingSet(format!("{mu}"), format!("P^ev_{d}({l})")));
    }
    let mut out = GrElement::zero();
    for tuple in distinct_permutations(&mu.as_tuple(d)) {
        let mut prod = GrElement::one(d);
        for (i, &k) in tuple.iter().enumerate() {
            if k == 0 {
                continue;
            }
            prod = alg.mul(&prod, &jucys_murphy(alg, i + 1, k)?)?;
            if prod.is_zero() {
                break;
            }
        }
        out.add_assign(&prod);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::AlgebraConfig;

    fn alg(d: usize, l: usize) -> GrAlgebra {
        GrAlgebra::new(AlgebraConfig::power(d, l))
    }

    fn oset(entries: &[usize], d: usize) -> OrderedIndexSet {
        OrderedIndexSet::new(entries.to_vec(), d).unwrap()
    }

    fn even(bits: &[u8]) -> ParityVector {
        let v = ParityVector::new(bits.to_vec());
        assert!(v.is_even());
        v
    }

    #[test]
    fn h_poly_single_strand() {
        let a = alg(2, 3);
        for r in 0..3 {
            let h = h_poly(&a, &oset(&[1], 2), r, &even(&[0])).unwrap();
            assert_eq!(h, a.x_power(1, r).unwrap());
        }
    }

    #[test]
    fn h_poly_two_strands() {
        let a2 = alg(2, 2);
        let h = h_poly(&a2, &oset(&[1, 2], 2), 0, &even(&[0, 0])).unwrap();
        assert_eq!(h, a2.x(1).unwrap().add(&a2.x(2).unwrap()));

        let a3 = alg(2, 3);
        let h = h_poly(&a3, &oset(&[1, 2], 2), 0, &even(&[0, 0])).unwrap();
        let expect = a3
            .x_power(1, 2)
            .unwrap()
            .add(&a3.mul(&a3.x(1).unwrap(), &a3.x(2).unwrap()).unwrap())
            .add(&a3.x_power(2, 2).unwrap());
        assert_eq!(h, expect);
    }

    #[test]
    fn h_poly_vanishes_above_top_degree() {
        let a = alg(3, 3);
        for aa in 1..=3usize {
            let set = oset(&(1..=aa).collect::<Vec<_>>(), 3);
            let alpha = ParityVector::zeros(aa);
            assert!(h_poly(&a, &set, 3, &alpha).unwrap().is_zero());
        }
    }

    #[test]
    fn h_poly_rejects_odd_alpha() {
        let a = alg(2, 3);
        let odd = ParityVector::new(vec![1, 0]);
        assert!(h_poly(&a, &oset(&[1, 2], 2), 0, &odd).is_err());
    }

    #[test]
    fn xcycle_examples() {
        let a = alg(2, 2);
        // one-cycles of degree 0 are the identity
        assert_eq!(xcycle(&a, &oset(&[1], 2), 0, &even(&[0])).unwrap(), a.one());
        // l = 2: (1 2)^{(0,(1,1))} = (x_1 − x_2) s c_1 c_2
        let z = xcycle(&a, &oset(&[1, 2], 2), 0, &even(&[1, 1])).unwrap();
        let s = a.s(1).unwrap();
        let c12 = a.mul(&a.c(1).unwrap(), &a.c(2).unwrap()).unwrap();
        let expect = a
            .mul(&a.mul(&a.x(1).unwrap().sub(&a.x(2).unwrap()), &s).unwrap(), &c12)
            .unwrap();
        assert_eq!(z, expect);
    }

    #[test]
    fn cxcycle_examples() {
        // single strand: A = {i}, r >= 1 gives x_i^r, r = 0 the identity
        let a = alg(2, 3);
        assert_eq!(cxcycle(&a, &oset(&[1], 2), 2).unwrap(), a.x_power(1, 2).unwrap());
        assert_eq!(cxcycle(&a, &oset(&[2], 2), 0).unwrap(), a.one());
        // l = 2: (1 2)^{(0)} = (x_1+x_2)s + (x_1−x_2)s c_1c_2
        let a = alg(2, 2);
        let z = cxcycle(&a, &oset(&[1, 2], 2), 0).unwrap();
        let s = a.s(1).unwrap();
        let c12 = a.mul(&a.c(1).unwrap(), &a.c(2).unwrap()).unwrap();
        let plus = a.mul(&a.x(1).unwrap().add(&a.x(2).unwrap()), &s).unwrap();
        let minus = a
            .mul(&a.mul(&a.x(1).unwrap().sub(&a.x(2).unwrap()), &s).unwrap(), &c12)
            .unwrap();
        assert_eq!(z, plus.add(&minus));
    }

    #[test]
    fn is_cx_examples() {
        assert!(!is_cx(2, 0, 3));
        assert!(is_cx(3, 0, 3));
        assert!(is_cx(2, 0, 2));
        assert!(is_cx(4, 2, 2));
    }

    #[test]
    fn odd_skew_examples() {
        // l odd, A = (1,2): x_1^{l−1} x_2^{l−1} s (c_1 − c_2)
        let a = alg(2, 3);
        let z = odd_skew_cycle(&a, &oset(&[1, 2], 2)).unwrap();
        let f = a.mul(&a.x_power(1, 2).unwrap(), &a.x_power(2, 2).unwrap()).unwrap();
        let s = a.s(1).unwrap();
        let expect = a
            .mul(&a.mul(&f, &s).unwrap(), &a.c(1).unwrap().sub(&a.c(2).unwrap()))
            .unwrap();
        assert_eq!(z, expect);
        // l and a both odd: no such element
        let a3 = alg(3, 3);
        assert!(odd_skew_cycle(&a3, &oset(&[1, 2, 3], 3)).is_err());
        // l even: single strands carry x_i^{l−1} c_i
        let ae = alg(2, 2);
        let z1 = odd_skew_cycle(&ae, &oset(&[1], 2)).unwrap();
        assert_eq!(z1, ae.mul(&ae.x(1).unwrap(), &ae.c(1).unwrap()).unwrap());
    }

    #[test]
    fn jucys_murphy_examples() {
        let a = alg(2, 3);
        // k < l: plain powers
        for k in 0..3 {
            assert_eq!(jucys_murphy(&a, 1, k).unwrap(), a.x_power(1, k).unwrap());
        }
        // y_1(l) = 0
        assert!(jucys_murphy(&a, 1, 3).unwrap().is_zero());
        // y_2(l) = (2 1)^{(0)}
        let y = jucys_murphy(&a, 2, 3).unwrap();
        assert_eq!(y, cxcycle(&a, &oset(&[2, 1], 2), 0).unwrap());
    }

    #[test]
    fn z_element_examples() {
        use crate::partitions::{enumerate_mev, phi_inv};
        // d = l = 3, λ = ((3)|-|-): two rotation classes
        let a = alg(3, 3);
        let lam = phi_inv(&Partition::new(vec![6]).unwrap(), 3, 3).unwrap();
        let z = z_element(&a, &lam).unwrap();
        let expect = cxcycle(&a, &oset(&[1, 2, 3], 3), 0)
            .unwrap()
            .add(&cxcycle(&a, &oset(&[1, 3, 2], 3), 0).unwrap());
        assert_eq!(z, expect);
        // the all-ones multipartition gives the identity
        for lam in enumerate_mev(3, 3) {
            if lam.redundancy() == 3 {
                assert_eq!(z_element(&a, &lam).unwrap(), a.one());
            }
        }
        // wrong size rejected
        let small = phi_inv(&Partition::empty(), 3, 2).unwrap();
        assert!(z_element(&a, &small).is_err());
    }

    #[test]
    fn m_element_examples() {
        let a = alg(2, 3);
        assert_eq!(m_element(&a, &Partition::empty()).unwrap(), a.one());
        let m2 = m_element(&a, &Partition::new(vec![2]).unwrap()).unwrap();
        assert_eq!(m2, a.x_power(1, 2).unwrap().add(&a.x_power(2, 2).unwrap()));
        let m4 = m_element(&a, &Partition::new(vec![4]).unwrap()).unwrap();
        let expect = jucys_murphy(&a, 1, 4).unwrap().add(&jucys_murphy(&a, 2, 4).unwrap());
        assert_eq!(m4, expect);
    }

    #[test]
    fn ordered_subset_counts() {
        assert_eq!(ordered_subsets(4, 1).len(), 4);
        assert_eq!(ordered_subsets(4, 2).len(), 12);
        assert_eq!(ordered_subsets(4, 3).len(), 24);
        assert_eq!(ordered_subsets(4, 4).len(), 24);
    }

    #[test]
    fn z_element_counts_repeated_blocks_once() {
        use crate::partitions::Multipartition;
        // d = 4, l = 2, λ = ((2,2)|-): the three pairings of I_4 into two
        // transpositions, each product carrying 4 × 4 distinct monomials
        let a = alg(4, 2);
        let lam = Multipartition::new(vec![
            Partition::new(vec![2, 2]).unwrap(),
            Partition::empty(),
        ]);
        let z = z_element(&a, &lam).unwrap();
        assert_eq!(z.num_terms(), 48);
        let by_hand = [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))]
            .iter()
            .fold(GrElement::zero(), |acc, &((i, j), (k, l))| {
                let p = a
                    .mul(
                        &cxcycle(&a, &oset(&[i, j], 4), 0).unwrap(),
                        &cxcycle(&a, &oset(&[k, l], 4), 0).unwrap(),
                    )
                    .unwrap();
                acc.add(&p)
            });
        assert_eq!(z, by_hand);
        // four 1-blocks of degree 0 collapse to a single identity product
        let ones = Multipartition::new(vec![
            Partition::new(vec![1, 1, 1, 1]).unwrap(),
            Partition::empty(),
        ]);
        assert_eq!(z_element(&a, &ones).unwrap(), a.one());
    }

    #[test]
    fn jucys_murphy_rejects_bad_strand() {
        let a = alg(2, 3);
        assert!(jucys_murphy(&a, 0, 1).is_err());
        assert!(jucys_murphy(&a, 3, 1).is_err());
    }
}
