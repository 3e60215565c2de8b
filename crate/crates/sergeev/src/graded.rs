//! The graded algebra: a twisted tensor product of the truncated polynomial
//! ring `R_l[x_1, ..., x_d]`, the symmetric group algebra, and the Clifford
//! algebra `C_d`. Multiplication is the exact kernel on PBW monomials
//! `x^e · σ · c_γ` with all exponents below `l`.

use num::One;

use crate::element::GrElement;
use crate::error::{AlgebraError, Result};
use crate::monomial::{clifford_mul, relabel_mask, Monomial};
use crate::perm::Perm;
use crate::scalar::{self, Scalar};

/// Shared identity of the ambient algebras: `d` strands, level `l`, and the
/// monic polynomial `f` whose lower terms all share the parity of its degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraConfig {
    d: usize,
    l: usize,
    /// Coefficients in descending degree order, length `l + 1`, leading 1.
    f_coeffs: Vec<Scalar>,
}

impl AlgebraConfig {
    pub fn new(d: usize, l: usize, f_coeffs: Vec<Scalar>) -> Result<Self> {
        if d == 0 || l == 0 {
            return Err(AlgebraError::InvalidPolynomial(format!("d = {d}, l = {l} must be >= 1")));
        }
        if d > 16 {
            return Err(AlgebraError::InvalidPolynomial(format!("d = {d} too large (max 16)")));
        }
        if l > 200 {
            return Err(AlgebraError::InvalidPolynomial(format!("l = {l} too large (max 200)")));
        }
        if f_coeffs.len() != l + 1 {
            return Err(AlgebraError::InvalidPolynomial(format!(
                "need {} coefficients for a degree-{l} polynomial, got {}",
                l + 1,
                f_coeffs.len()
            )));
        }
        if !f_coeffs[0].is_one() {
            return Err(AlgebraError::InvalidPolynomial("f must be monic".into()));
        }
        for (idx, c) in f_coeffs.iter().enumerate().skip(1) {
            let deg = l - idx;
            if deg % 2 != l % 2 && !num::Zero::is_zero(c) {
                return Err(AlgebraError::InvalidPolynomial(format!(
                    "terms of f must all have degree of the same parity as {l}; \
                     found nonzero coefficient in degree {deg}"
                )));
            }
        }
        Ok(AlgebraConfig { d, l, f_coeffs })
    }

    /// `f = x^l`.
    pub fn power(d: usize, l: usize) -> Self {
        let mut coeffs = vec![scalar::zero(); l + 1];
        coeffs[0] = scalar::one();
        AlgebraConfig::new(d, l, coeffs).expect("x^l is always valid")
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn f_coeffs(&self) -> &[Scalar] {
        &self.f_coeffs
    }

    /// Coefficient of `x^k` in `f`.
    pub fn f_coeff(&self, k: usize) -> &Scalar {
        &self.f_coeffs[self.l - k]
    }

    /// Full PBW dimension `l^d · d! · 2^d`.
    pub fn dimension(&self) -> usize {
        let mut dim = 1usize;
        for i in 1..=self.d {
            dim = dim.saturating_mul(self.l).saturating_mul(i).saturating_mul(2);
        }
        dim
    }

    pub fn f_string(&self) -> String {
        let mut parts = Vec::new();
        for (idx, c) in self.f_coeffs.iter().enumerate() {
            if num::Zero::is_zero(c) {
                continue;
            }
            let deg = self.l - idx;
            let cs = scalar::render(c);
            parts.push(match deg {
                0 => cs,
                1 if cs == "1" => "x".to_string(),
                1 => format!("{cs}x"),
                _ if cs == "1" => format!("x^{deg}"),
                _ => format!("{cs}x^{deg}"),
            });
        }
        parts.join(" + ")
    }
}

pub struct GrAlgebra {
    cfg: AlgebraConfig,
}

impl GrAlgebra {
    pub fn new(cfg: AlgebraConfig) -> Self {
        GrAlgebra { cfg }
    }

    pub fn config(&self) -> &AlgebraConfig {
        &self.cfg
    }

    pub fn d(&self) -> usize {
        self.cfg.d
    }

    pub fn l(&self) -> usize {
        self.cfg.l
    }

    pub fn zero(&self) -> GrElement {
        GrElement::zero()
    }

    pub fn one(&self) -> GrElement {
        GrElement::one(self.cfg.d)
    }

    /// The polynomial generator `x_i` (zero when `l = 1`).
    pub fn x(&self, i: usize) -> Result<GrElement> {
        self.x_power(i, 1)
    }

    /// `x_i^k`, truncated to zero for `k >= l`.
    pub fn x_power(&self, i: usize, k: usize) -> Result<GrElement> {
        self.check_strand(i)?;
        if k >= self.cfg.l {
            return Ok(GrElement::zero());
        }
        let mut m = Monomial::identity(self.cfg.d);
        m.exps[i - 1] = k as u8;
        Ok(GrElement::from_monomial(m, scalar::one()))
    }

    pub fn s(&self, i: usize) -> Result<GrElement> {
        Ok(self.perm_element(&Perm::adjacent(i, self.cfg.d)?))
    }

    pub fn c(&self, i: usize) -> Result<GrElement> {
        self.check_strand(i)?;
        let mut m = Monomial::identity(self.cfg.d);
        m.cliff = 1 << (i - 1);
        Ok(GrElement::from_monomial(m, scalar::one()))
    }

    pub fn perm_element(&self, p: &Perm) -> GrElement {
        debug_assert_eq!(p.len(), self.cfg.d);
        let mut m = Monomial::identity(self.cfg.d);
        m.perm = p.clone();
        GrElement::from_monomial(m, scalar::one())
    }

    fn check_strand(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.cfg.d {
            return Err(AlgebraError::IndexOutOfRange { index: i, max: self.cfg.d });
        }
        Ok(())
    }

    fn check_element(&self, e: &GrElement) -> Result<()> {
        for (m, _) in e.terms() {
            m.validate(self.cfg.d, self.cfg.l)?;
        }
        Ok(())
    }

    pub fn mul(&self, u: &GrElement, v: &GrElement) -> Result<GrElement> {
        self.check_element(u)?;
        self.check_element(v)?;
        let mut out = GrElement::zero();
        for (mu, cu) in u.terms() {
            for (mv, cv) in v.terms() {
                if let Some((m, sign)) = self.mul_mono(mu, mv) {
                    let c = cu.clone() * cv * scalar::sign_scalar(sign);
                    out.add_term(m, c);
                }
            }
        }
        Ok(out)
    }

    /// Product of two normal-form monomials; `None` when truncation kills it.
    ///
    /// `x^e σ c_γ · x^f τ c_δ`: the right x-part moves left past `c_γ` with the
    /// sign `(−1)^{Σ_{j∈γ} f_j}`, is relabeled through `σ`, and is added to `e`
    /// (zero if any exponent reaches `l`); `c_γ` then moves right through `τ`
    /// (indices through `τ^{-1}`), the Clifford parts merge with anticommutation
    /// signs, and the permutations compose as `σ∘τ`.
    fn mul_mono(&self, u: &Monomial, v: &Monomial) -> Option<(Monomial, i32)> {
        let d = self.cfg.d;
        let l = self.cfg.l as u8;
        let mut sign = 1i32;

        let mut moved: usize = 0;
        for i in 1..=d {
            if u.cliff >> (i - 1) & 1 == 1 {
                moved += v.exps[i - 1] as usize;
            }
        }
        if moved % 2 == 1 {
            sign = -sign;
        }

        let mut exps = u.exps.clone();
        for i in 1..=d {
            let target = u.perm.apply(i);
            let sum = exps[target - 1] + v.exps[i - 1];
            if sum >= l {
                return None;
            }
            exps[target - 1] = sum;
        }

        let v_perm_inv = v.perm.inverse();
        let (mask1, s4) = relabel_mask(u.cliff, |j| v_perm_inv.apply(j));
        sign *= s4;
        let (cliff, s5) = clifford_mul(mask1, v.cliff);
        sign *= s5;

        let perm = u.perm.compose(&v.perm);
        Some((Monomial { exps, perm, cliff }, sign))
    }

    /// `π · z · π^{-1}`.
    pub fn conjugate(&self, z: &GrElement, p: &Perm) -> Result<GrElement> {
        let pe = self.perm_element(p);
        let pe_inv = self.perm_element(&p.inverse());
        self.mul(&self.mul(&pe, z)?, &pe_inv)
    }

    /// Commutator `[u, v] = uv − vu`.
    pub fn commutator(&self, u: &GrElement, v: &GrElement) -> Result<GrElement> {
        Ok(self.mul(u, v)?.sub(&self.mul(v, u)?))
    }
}
