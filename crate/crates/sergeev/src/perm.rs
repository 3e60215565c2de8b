//! Permutations of the strand set `{1, ..., d}` in one-line notation.
//!
//! Composition follows `(s ∘ t)(i) = s(t(i))`, and the cycle built from an
//! ordered index list `(i_1, ..., i_a)` sends `i_j` to `i_{j+1}` and `i_a`
//! back to `i_1`.

use crate::error::{AlgebraError, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    /// `img[i - 1] = σ(i)`, values in `1..=d`.
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm { img: (1..=d).collect() }
    }

    /// One-line notation `[σ(1), ..., σ(d)]` with 1-based values.
    pub fn from_one_line(img: Vec<usize>) -> Result<Self> {
        let d = img.len();
        let mut seen = vec![false; d];
        for &v in &img {
            if v == 0 || v > d || seen[v - 1] {
                return Err(AlgebraError::BadIndexSet(format!(
                    "{img:?} is not a permutation of 1..={d}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { img })
    }

    /// The adjacent transposition `s_i = (i, i+1)`, `1 <= i <= d-1`.
    pub fn adjacent(i: usize, d: usize) -> Result<Self> {
        if i == 0 || i + 1 > d {
            return Err(AlgebraError::IndexOutOfRange { index: i, max: d.saturating_sub(1) });
        }
        let mut p = Perm::identity(d);
        p.img.swap(i - 1, i);
        Ok(p)
    }

    /// The cycle `(i_1 i_2 ... i_a)` mapping `i_j` to `i_{j+1}` cyclically.
    pub fn cycle(entries: &[usize], d: usize) -> Result<Self> {
        let mut p = Perm::identity(d);
        let mut seen = vec![false; d];
        for (k, &i) in entries.iter().enumerate() {
            if i == 0 || i > d {
                return Err(AlgebraError::IndexOutOfRange { index: i, max: d });
            }
            if seen[i - 1] {
                return Err(AlgebraError::BadIndexSet(format!("repeated cycle entry {i}")));
            }
            seen[i - 1] = true;
            let next = entries[(k + 1) % entries.len()];
            p.img[i - 1] = next;
        }
        Perm::from_one_line(p.img)
    }

    /// The size of the underlying strand set.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.img
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (k, &v) in self.img.iter().enumerate() {
            img[v - 1] = k + 1;
        }
        Perm { img }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        let img = other.img.iter().map(|&v| self.img[v - 1]).collect();
        Perm { img }
    }

    /// Coxeter length: the number of inversions.
    pub fn coxeter_length(&self) -> usize {
        let mut n = 0;
        for a in 0..self.img.len() {
            for b in a + 1..self.img.len() {
                if self.img[a] > self.img[b] {
                    n += 1;
                }
            }
        }
        n
    }

    /// The lexicographically least reduced word, as generator subscripts.
    ///
    /// `σ = s_{w_1} ∘ s_{w_2} ∘ ... ∘ s_{w_k}` with `k` the Coxeter length.
    /// Greedy on left descents: the smallest `i` with `σ^{-1}(i) > σ^{-1}(i+1)`
    /// always starts some reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let d = self.len();
        let mut w = self.clone();
        let mut out = Vec::with_capacity(self.coxeter_length());
        loop {
            let inv = w.inverse();
            match (1..d).find(|&i| inv.apply(i) > inv.apply(i + 1)) {
                None => break,
                Some(i) => {
                    out.push(i);
                    let s = Perm::adjacent(i, d).unwrap();
                    w = s.compose(&w);
                }
            }
        }
        out
    }

    /// All permutations of `1..=d` in lexicographic one-line order.
    pub fn enumerate(d: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=d).collect();
        loop {
            out.push(Perm { img: cur.clone() });
            // next_permutation
            if d < 2 {
                break;
            }
            let mut i = d - 1;
            while i > 0 && cur[i - 1] >= cur[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = d - 1;
            while cur[j] <= cur[i - 1] {
                j -= 1;
            }
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.img.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
