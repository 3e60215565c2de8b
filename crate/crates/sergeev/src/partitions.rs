//! Partitions, `l`-multipartitions, and the indexing sets for central elements.
//!
//! `P_d(l)` is the set of partitions `μ` with `r + |μ/l| <= d` (`r` the number
//! of parts, `μ/l` the entrywise floor-divided partition); `P^ev_d(l)` its
//! even-part members. `M_d(l)` is the set of `l`-multipartitions of total size
//! exactly `d`; `M^ev_d(l)` the cycle types of products of disjoint CX-cycles,
//! characterized componentwise by part parity. The bijection `φ` sends the
//! part `a` of component `r` to the value `(a−1)l + r − 1`, dropping zeros;
//! its inverse pads the first component with parts equal to 1 until the total
//! size reaches `d`.

use crate::error::{AlgebraError, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    /// Weakly decreasing, strictly positive.
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(AlgebraError::BadPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `μ/l`: the entrywise floor-divided partition, zero entries dropped.
    pub fn floor_div(&self, l: usize) -> Partition {
        Partition::new(self.parts.iter().map(|&p| p / l).filter(|&p| p > 0).collect())
            .expect("positive parts")
    }

    /// `|μ/l| = Σ_i ⌊μ_i/l⌋`.
    pub fn floor_div_size(&self, l: usize) -> usize {
        self.parts.iter().map(|&p| p / l).sum()
    }

    pub fn all_parts_even(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 0)
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// Membership in `P_d(l)`.
    pub fn in_pdl(&self, d: usize, l: usize) -> bool {
        self.num_parts() + self.floor_div_size(l) <= d
    }

    /// Membership in `P^ev_d(l)`.
    pub fn in_pev(&self, d: usize, l: usize) -> bool {
        self.all_parts_even() && self.in_pdl(d, l)
    }

    /// The partition padded with zeros to a `d`-tuple.
    pub fn as_tuple(&self, d: usize) -> Vec<usize> {
        let mut t = self.parts.clone();
        t.resize(d, 0);
        t
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    pub fn empty(l: usize) -> Self {
        Multipartition { components: vec![Partition::empty(); l] }
    }

    pub fn levels(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, r: usize) -> &Partition {
        &self.components[r - 1]
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(|p| p.size()).sum()
    }

    /// The number of parts of the first component equal to 1. These index the
    /// degree-0 one-cycles, each of which multiplies to the identity.
    pub fn redundancy(&self) -> usize {
        self.components
            .first()
            .map(|p| p.parts().iter().filter(|&&x| x == 1).count())
            .unwrap_or(0)
    }

    /// The part-parity characterization of cycle types of products of disjoint
    /// CX-cycles: a part `a` in component `r` satisfies `(a−1)l + (r−1)` even.
    pub fn is_mev(&self) -> bool {
        let l = self.components.len();
        for (k, comp) in self.components.iter().enumerate() {
            let r = k + 1;
            if l.is_multiple_of(2) {
                if r % 2 == 0 && comp.num_parts() > 0 {
                    return false;
                }
            } else if r % 2 == 1 {
                if !comp.all_parts_odd() {
                    return false;
                }
            } else if !comp.all_parts_even() {
                return false;
            }
        }
        true
    }

    /// All (size, degree) pairs: a part `a` of component `r` is a cycle of
    /// size `a` and degree `r − 1`.
    pub fn cycle_shapes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, comp) in self.components.iter().enumerate() {
            for &a in comp.parts() {
                out.push((a, k));
            }
        }
        out
    }
}

impl std::fmt::Display for Multipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join("|"))
    }
}

/// `φ : M_d(l) → P_d(l)`; the part `a` of component `r` becomes `(a−1)l + r − 1`,
/// zero values dropped.
pub fn phi(lam: &Multipartition) -> Partition {
    let l = lam.levels();
    let mut parts = Vec::new();
    for (k, comp) in lam.components().iter().enumerate() {
        let r = k + 1;
        for &a in comp.parts() {
            let v = (a - 1) * l + r - 1;
            if v > 0 {
                parts.push(v);
            }
        }
    }
    Partition::new(parts).expect("phi produces positive parts")
}

/// Inverse of `φ` at level `l` with total size `d`: a part `μ_i ≡ r−1 (mod l)`
/// contributes `⌊μ_i/l⌋ + 1` to component `r`, and the first component is then
/// padded with 1s up to total size `d`.
pub fn phi_inv(mu: &Partition, l: usize, d: usize) -> Result<Multipartition> {
    if !mu.in_pdl(d, l) {
        return Err(AlgebraError::NotInIndexingSet(
            format!("{mu}"),
            format!("P_{d}({l})"),
        ));
    }
    let mut comps: Vec<Vec<usize>> = vec![Vec::new(); l];
    for &p in mu.parts() {
        let r = p % l; // component index r+1 holds values ≡ r mod l
        comps[r].push(p / l + 1);
    }
    let used: usize = comps.iter().flatten().sum();
    debug_assert!(used <= d);
    for _ in 0..(d - used) {
        comps[0].push(1);
    }
    let components = comps
        .into_iter()
        .map(Partition::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(Multipartition::new(components))
}

/// All partitions of every total in `0..=max_total`, lexicographically sorted.
pub fn enumerate_partitions_up_to(max_total: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut stack: Vec<(Vec<usize>, usize, usize)> = Vec::new(); // (parts, remaining, cap)
    for n in 1..=max_total {
        stack.push((Vec::new(), n, n));
        while let Some((parts, rem, cap)) = stack.pop() {
            if rem == 0 {
                out.push(Partition { parts });
                continue;
            }
            for next in (1..=rem.min(cap)).rev() {
                let mut p = parts.clone();
                p.push(next);
                stack.push((p, rem - next, next));
            }
        }
    }
    out.sort();
    out
}

/// `P_d(l)`: those partitions with `r + |μ/l| <= d`. The total size of any
/// member is at most `d·l`, which bounds the search.
pub fn enumerate_pdl(d: usize, l: usize) -> Vec<Partition> {
    enumerate_partitions_up_to(d * l)
        .into_iter()
        .filter(|p| p.in_pdl(d, l))
        .collect()
}

/// `P^ev_d(l)`: the even-part members of `P_d(l)`.
pub fn enumerate_pev(d: usize, l: usize) -> Vec<Partition> {
    enumerate_pdl(d, l).into_iter().filter(|p| p.all_parts_even()).collect()
}

fn partitions_of(n: usize, part_filter: &dyn Fn(usize) -> bool) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize, usize)> = vec![(Vec::new(), n, n)];
    while let Some((parts, rem, cap)) = stack.pop() {
        if rem == 0 {
            out.push(Partition { parts });
            continue;
        }
        for next in (1..=rem.min(cap)).rev() {
            if part_filter(next) {
                let mut p = parts.clone();
                p.push(next);
                stack.push((p, rem - next, next));
            }
        }
    }
    out.sort();
    out
}

/// All `l`-multipartitions of total size exactly `d`.
pub fn enumerate_multipartitions(d: usize, l: usize) -> Vec<Multipartition> {
    fn rec(d_left: usize, comps_left: usize, acc: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if comps_left == 0 {
            if d_left == 0 {
                out.push(Multipartition::new(acc.clone()));
            }
            return;
        }
        for s in 0..=d_left {
            for p in partitions_of(s, &|_| true) {
                acc.push(p);
                rec(d_left - s, comps_left - 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(d, l, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `M^ev_d(l)`: multipartitions of total size exactly `d` obeying the
/// part-parity rules of `is_mev`. Exact total size `d` makes every member
/// realizable as a product of disjoint CX-cycles filling `I_d`.
pub fn enumerate_mev(d: usize, l: usize) -> Vec<Multipartition> {
    fn rec(
        l: usize,
        r: usize,
        d_left: usize,
        acc: &mut Vec<Partition>,
        out: &mut Vec<Multipartition>,
    ) {
        if r > l {
            if d_left == 0 {
                out.push(Multipartition::new(acc.clone()));
            }
            return;
        }
        let filter: Box<dyn Fn(usize) -> bool> = if l.is_multiple_of(2) {
            if r.is_multiple_of(2) {
                Box::new(|_| false)
            } else {
                Box::new(|_| true)
            }
        } else if r % 2 == 1 {
            Box::new(|a: usize| a % 2 == 1)
        } else {
            Box::new(|a: usize| a.is_multiple_of(2))
        };
        for s in 0..=d_left {
            for p in partitions_of(s, filter.as_ref()) {
                acc.push(p);
                rec(l, r + 1, d_left - s, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(l, 1, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The distinct rearrangements of a multiset tuple, in lexicographic order.
pub fn distinct_permutations(t: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = t.to_vec();
    cur.sort_unstable();
    let n = cur.len();
    let mut out = vec![cur.clone()];
    if n < 2 {
        return out;
    }
    loop {
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(comps: &[&[usize]]) -> Multipartition {
        Multipartition::new(comps.iter().map(|c| part(c)).collect())
    }

    #[test]
    fn phi_example() {
        // l = 3: ((2),(1),-) -> (3,1)
        let lam = mp(&[&[2], &[1], &[]]);
        assert_eq!(phi(&lam), part(&[3, 1]));
        assert_eq!(phi(&Multipartition::empty(4)), Partition::empty());
    }

    #[test]
    fn phi_roundtrip_exhaustive() {
        for d in 1..=4 {
            for l in 1..=4 {
                for lam in enumerate_multipartitions(d, l) {
                    let mu = phi(&lam);
                    assert!(mu.in_pdl(d, l), "phi({lam}) = {mu} outside P_{d}({l})");
                    assert_eq!(phi_inv(&mu, l, d).unwrap(), lam, "roundtrip {lam}");
                }
                for mu in enumerate_pdl(d, l) {
                    let lam = phi_inv(&mu, l, d).unwrap();
                    assert_eq!(lam.size(), d);
                    assert_eq!(phi(&lam), mu, "roundtrip {mu}");
                }
            }
        }
    }

    #[test]
    fn phi_maps_mev_onto_pev() {
        for d in 1..=4 {
            for l in [1, 2, 3] {
                let mev = enumerate_mev(d, l);
                let mut image: Vec<Partition> = mev.iter().map(phi).collect();
                image.sort();
                image.dedup();
                let pev = enumerate_pev(d, l);
                assert_eq!(image, pev, "d={d} l={l}");
                assert_eq!(mev.len(), pev.len(), "phi must be injective on M^ev");
            }
        }
    }

    #[test]
    fn pev_examples() {
        assert_eq!(enumerate_pev(1, 3), vec![Partition::empty(), part(&[2])]);
        assert_eq!(
            enumerate_pev(2, 3),
            vec![Partition::empty(), part(&[2]), part(&[2, 2]), part(&[4])]
        );
        assert_eq!(enumerate_pev(2, 1), vec![Partition::empty()]);
        assert_eq!(enumerate_pev(3, 3).len(), 8);
    }

    #[test]
    fn mev_examples() {
        assert!(mp(&[&[1, 1, 1], &[], &[]]).is_mev());
        assert!(!mp(&[&[2], &[], &[]]).is_mev());
        assert_eq!(enumerate_mev(3, 3).len(), enumerate_pev(3, 3).len());
        // l even: even-index components must vanish
        assert!(mp(&[&[2, 1], &[]]).is_mev());
        assert!(!mp(&[&[1], &[1]]).is_mev());
    }

    #[test]
    fn redundancy_examples() {
        assert_eq!(Multipartition::empty(3).redundancy(), 0);
        assert_eq!(mp(&[&[1, 1], &[2], &[]]).redundancy(), 2);
        assert_eq!(mp(&[&[3, 1], &[], &[]]).redundancy(), 1);
    }

    #[test]
    fn pdl_membership() {
        // (8) in P_3(3): 1 + 2 <= 3
        assert!(part(&[8]).in_pdl(3, 3));
        // (6,2) not in P_3(3): 2 + 2 > 3
        assert!(!part(&[6, 2]).in_pdl(3, 3));
    }

    #[test]
    fn floor_div_examples() {
        assert_eq!(part(&[7, 3, 2]).floor_div(3), part(&[2, 1]));
        assert_eq!(part(&[7, 3, 2]).floor_div_size(3), 3);
        assert_eq!(part(&[2]).floor_div(3), Partition::empty());
    }

    #[test]
    fn partition_rejects_zero_parts() {
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn distinct_permutations_counts() {
        assert_eq!(distinct_permutations(&[2, 0]), vec![vec![0, 2], vec![2, 0]]);
        assert_eq!(distinct_permutations(&[2, 2]).len(), 1);
        assert_eq!(distinct_permutations(&[4, 2, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[2, 2, 0, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }
}
