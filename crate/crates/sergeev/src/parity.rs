//! Parity vectors `α ∈ Z_2^a` and their sign functions.

use crate::error::{AlgebraError, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParityClass {
    Even,
    Odd,
}

/// An element of `Z_2^a`. Length 0 is permitted (the empty vector is even).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ParityVector {
    bits: Vec<u8>,
}

impl ParityVector {
    pub fn new(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        ParityVector { bits }
    }

    pub fn zeros(a: usize) -> Self {
        ParityVector { bits: vec![0; a] }
    }

    /// `1_i`: single set bit at (1-based) position `i`.
    pub fn unit(a: usize, i: usize) -> Result<Self> {
        if i == 0 || i > a {
            return Err(AlgebraError::IndexOutOfRange { index: i, max: a });
        }
        let mut bits = vec![0; a];
        bits[i - 1] = 1;
        Ok(ParityVector { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i - 1]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// `|α|`: the number of set bits.
    pub fn weight(&self) -> usize {
        self.bits.iter().map(|&b| b as usize).sum()
    }

    pub fn is_even(&self) -> bool {
        self.weight().is_multiple_of(2)
    }

    pub fn class(&self) -> ParityClass {
        if self.is_even() {
            ParityClass::Even
        } else {
            ParityClass::Odd
        }
    }

    /// The associated sign tuple `ε^α_i = Π_{j<i} (−1)^{α_j}`, with `ε^α_1 = 1`.
    pub fn epsilon_signs(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.bits.len());
        let mut sign = 1i32;
        for &b in &self.bits {
            out.push(sign);
            if b == 1 {
                sign = -sign;
            }
        }
        out
    }

    /// `ε^α_i` for a single 1-based position.
    pub fn epsilon(&self, i: usize) -> i32 {
        let mut sign = 1i32;
        for &b in &self.bits[..i - 1] {
            if b == 1 {
                sign = -sign;
            }
        }
        sign
    }

    /// `τ_α = (−1)^{|α|/2 + Σ_i i·α_i}`, defined for even `α` only.
    pub fn tau(&self) -> Result<i32> {
        let w = self.weight();
        if !w.is_multiple_of(2) {
            return Err(AlgebraError::OddParityVector { weight: w });
        }
        let mut exp = w / 2;
        for (k, &b) in self.bits.iter().enumerate() {
            if b == 1 {
                exp += k + 1;
            }
        }
        Ok(if exp.is_multiple_of(2) { 1 } else { -1 })
    }

    /// `α^{(j)} = α + 1_j + 1_{j−1}` for `j > 1`, and `α^{(1)} = α + 1_1 + 1_a`.
    pub fn shift(&self, j: usize) -> Result<ParityVector> {
        let a = self.bits.len();
        if j == 0 || j > a {
            return Err(AlgebraError::IndexOutOfRange { index: j, max: a });
        }
        let mut bits = self.bits.clone();
        if j > 1 {
            bits[j - 1] ^= 1;
            bits[j - 2] ^= 1;
        } else {
            bits[0] ^= 1;
            bits[a - 1] ^= 1;
        }
        Ok(ParityVector { bits })
    }

    /// Rotation one place to the right: `(α_a, α_1, ..., α_{a−1})`.
    pub fn rotated(&self) -> ParityVector {
        if self.bits.is_empty() {
            return self.clone();
        }
        let mut bits = Vec::with_capacity(self.bits.len());
        bits.push(*self.bits.last().unwrap());
        bits.extend_from_slice(&self.bits[..self.bits.len() - 1]);
        ParityVector { bits }
    }

    /// All vectors of the given length and parity, in lexicographic bit order.
    ///
    /// For `a >= 1` each class has exactly `2^{a−1}` members; for `a = 0` the
    /// even class is `{()}` and the odd class is empty.
    pub fn enumerate(a: usize, class: ParityClass) -> Vec<ParityVector> {
        let want_even = matches!(class, ParityClass::Even);
        let mut out = Vec::new();
        for code in 0u64..(1u64 << a) {
            // lexicographic order on bit tuples = numeric order with bit 1 as MSB
            let bits: Vec<u8> = (0..a).map(|k| ((code >> (a - 1 - k)) & 1) as u8).collect();
            let v = ParityVector::new(bits);
            if v.is_even() == want_even {
                out.push(v);
            }
        }
        out
    }
}

impl std::fmt::Display for ParityVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, b) in self.bits.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}
