//! Order-preserving maps between the systems: `χ` and its Cantor normal form variant,
//! `d_i`, `ᾱ` and `ψ` into the unary terms, and the collapsing `τ_m` into tuples
//! `Ω_m·α + ω^{f(α)}·δ + γ`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::cnf::{f_hat, omega_n, CnfOrdinal};
use crate::error::{Error, Result};
use crate::pi::PiTerm;
use crate::theta1::{k_slice, theta_validate, ThetaSystem, ThetaTerm};
use crate::veblen::VeblenTerm;

pub use crate::theta1::to_tprime as psi_prime;

/// `χ0 = 0`, `χ φ_k α = ϑ_0 ϑ_1^k χα`.
pub fn chi(a: &VeblenTerm<usize>) -> ThetaTerm {
    let mut w = Vec::new();
    for &k in a.subscripts() {
        w.push(0);
        w.extend(std::iter::repeat_n(1, k));
    }
    ThetaTerm::from_indices(w).expect("images of chi are wellformed")
}

/// The map from `ω^{ω^ω}` to `T_2[0]` read off the Cantor normal form.
///
/// For the least `n` with `a < ω^{ω^n}`, write `a = Σ_q ω^{ω^{n-1}·q}·a_q` with digits
/// `a_q < ω^{ω^{n-1}}`; the image is the word `ϑ_0ϑ_1ⁿ χ(a_0) ⋯ ϑ_0ϑ_1ⁿ χ(a_m)` closed by `0`.
/// A natural number `k` maps to `ϑ_0^k 0`.
pub fn chi_std(a: &CnfOrdinal) -> Result<ThetaTerm> {
    let mut w = Vec::new();
    chi_std_word(a, &mut w)?;
    ThetaTerm::from_indices(w)
}

fn chi_std_word(a: &CnfOrdinal, w: &mut Vec<usize>) -> Result<()> {
    if a.is_finite() {
        let k = a
            .as_u64()
            .and_then(|k| usize::try_from(k).ok())
            .ok_or_else(|| Error::Precondition(format!("{a} is too large to unfold")))?;
        w.extend(std::iter::repeat_n(0, k));
        return Ok(());
    }
    let lead = a.leading_exponent().expect("infinite ordinals are nonzero");
    let n = if lead.is_finite() {
        1
    } else {
        let d = lead
            .leading_exponent()
            .and_then(CnfOrdinal::as_u64)
            .ok_or_else(|| Error::Precondition(format!("{a} is not below w^(w^(w))")))?;
        d as usize + 1
    };
    let mut digits: Vec<Vec<(CnfOrdinal, BigUint)>> = Vec::new();
    for t in a.terms() {
        let (q, r) = split_exponent(t.exponent(), n)?;
        if digits.len() <= q {
            digits.resize_with(q + 1, Vec::new);
        }
        digits[q].push((r, t.coeff().clone()));
    }
    for d in digits {
        w.push(0);
        w.extend(std::iter::repeat_n(1, n));
        // Terms arrive in decreasing order of exponent, so each digit is already normal.
        chi_std_word(&CnfOrdinal::from_terms(d)?, w)?;
    }
    Ok(())
}

/// `e = ω^{n-1}·q + r` with `r < ω^{n-1}`, for `e < ω^n`.
fn split_exponent(e: &CnfOrdinal, n: usize) -> Result<(usize, CnfOrdinal)> {
    let too_big = || Error::Precondition(format!("exponent {e} is too large to unfold"));
    if n == 1 {
        let q = e.as_u64().ok_or_else(too_big)?;
        return Ok((usize::try_from(q).map_err(|_| too_big())?, CnfOrdinal::zero()));
    }
    let top = CnfOrdinal::nat((n - 1) as u64);
    let mut q = 0usize;
    let mut rest = Vec::new();
    for t in e.terms() {
        if t.exponent() == &top {
            q = t.coeff().to_usize().ok_or_else(too_big)?;
        } else {
            rest.push((t.exponent().clone(), t.coeff().clone()));
        }
    }
    Ok((q, CnfOrdinal::from_terms(rest)?))
}

/// `d_i(a) = ϑ_i a` if `S(a) ≤ i`, else `ϑ_i d_{i+1}(a)`.
pub fn d_op(i: usize, a: &ThetaTerm) -> ThetaTerm {
    let top = a.level().map_or(i, |s| s.max(i));
    let mut w: Vec<usize> = (i..=top).collect();
    w.extend_from_slice(a.indices());
    ThetaTerm::from_indices(w).expect("d_i produces wellformed terms")
}

/// `0̄ = 0`, `(D_i α)‾ = d_{i+1}(ᾱ)`.
pub fn bar(a: &PiTerm) -> ThetaTerm {
    a.indices()
        .iter()
        .rev()
        .fold(ThetaTerm::zero(), |acc, &i| d_op(i + 1, &acc))
}

/// `ψ0 = 0`, `ψ φ_{D_0 α} β = d_0(ᾱ)[ψβ]`.
pub fn psi_map(a: &VeblenTerm<PiTerm>) -> Result<ThetaTerm> {
    let mut w = Vec::new();
    for sub in a.subscripts() {
        if sub.head() != Some(0) {
            return Err(Error::Precondition(format!(
                "psi needs subscripts of the form D0(..), found {sub}"
            )));
        }
        let inner = sub.arg().expect("head exists");
        w.extend_from_slice(d_op(0, &bar(&inner)).indices());
    }
    ThetaTerm::from_indices(w)
}

/// An element `Ω_m·α + ω^{f(α)}·δ + γ` of `T_m^all`, with `δ ∈ T[m-1]` and `γ < ω^{f(α)}`.
/// The scale `ω^{f(α)}` is implied by `α` and not stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OmegaTuple {
    omega_coeff: CnfOrdinal,
    theta_part: ThetaTerm,
    tail: CnfOrdinal,
    level: usize,
    n: usize,
}

impl OmegaTuple {
    pub fn new(
        omega_coeff: CnfOrdinal,
        theta_part: ThetaTerm,
        tail: CnfOrdinal,
        level: usize,
        n: usize,
    ) -> Result<Self> {
        if level == 0 {
            return Err(Error::Precondition(
                "level 0 tuples are plain ordinals".into(),
            ));
        }
        if !theta_part.level().is_none_or(|s| s < level) {
            return Err(Error::Precondition(format!(
                "middle part {theta_part} must lie in T[{}]",
                level - 1
            )));
        }
        let bound = CnfOrdinal::omega_pow(f_hat(&omega_coeff));
        if tail >= bound {
            return Err(Error::Precondition(format!(
                "tail {tail} is not below {bound}"
            )));
        }
        Ok(OmegaTuple {
            omega_coeff,
            theta_part,
            tail,
            level,
            n,
        })
    }

    pub fn omega_coeff(&self) -> &CnfOrdinal {
        &self.omega_coeff
    }

    pub fn theta_part(&self) -> &ThetaTerm {
        &self.theta_part
    }

    pub fn tail(&self) -> &CnfOrdinal {
        &self.tail
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The exponent `f(α)` of the implied scale.
    pub fn scale_exponent(&self) -> CnfOrdinal {
        f_hat(&self.omega_coeff)
    }
}

impl fmt::Display for OmegaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.omega_coeff, self.theta_part, self.tail)
    }
}

/// Lexicographic on `(α, δ, γ)`.
pub fn tuple_compare(x: &OmegaTuple, y: &OmegaTuple) -> Result<Ordering> {
    if x.level != y.level {
        return Err(Error::LevelMismatch {
            left: x.level,
            right: y.level,
        });
    }
    Ok(x.omega_coeff
        .cmp(&y.omega_coeff)
        .then_with(|| x.theta_part.cmp(&y.theta_part))
        .then_with(|| x.tail.cmp(&y.tail)))
}

/// The value of `τ_m`: a plain ordinal at `m = 0`, a tuple above.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TauValue {
    Ordinal(CnfOrdinal),
    Tuple(OmegaTuple),
}

impl fmt::Display for TauValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauValue::Ordinal(o) => write!(f, "{o}"),
            TauValue::Tuple(t) => write!(f, "{t}"),
        }
    }
}

/// `τ_m a` for `a ∈ T_{n+1}[m]`.
pub fn tau(m: usize, a: &ThetaTerm, n: usize) -> Result<TauValue> {
    if !theta_validate(a.indices(), &ThetaSystem::t_nm(n + 1, m)) {
        return Err(Error::not_member(
            ThetaSystem::t_nm(n + 1, m).to_string(),
            a,
        ));
    }
    let mut ctx = TauCtx {
        word: a.indices(),
        n,
        memo: HashMap::new(),
    };
    let raw = ctx.tau(m, 0)?;
    if m == 0 {
        return Ok(TauValue::Ordinal(raw.tail));
    }
    if !raw.theta.is_empty() && raw.scale != f_hat(&raw.coeff) {
        return Err(Error::Internal(format!(
            "scale w^({}) differs from w^(f({}))",
            raw.scale, raw.coeff
        )));
    }
    let theta = ThetaTerm::from_indices(raw.theta)?;
    OmegaTuple::new(raw.coeff, theta, raw.tail, m, n)
        .map(TauValue::Tuple)
        .map_err(|e| Error::Internal(e.to_string()))
}

/// `τ_m a` for `m ≥ 1`.
pub fn tau_tuple(m: usize, a: &ThetaTerm, n: usize) -> Result<OmegaTuple> {
    match tau(m, a, n)? {
        TauValue::Tuple(t) => Ok(t),
        TauValue::Ordinal(_) => Err(Error::Precondition("tau_0 yields an ordinal".into())),
    }
}

/// `τ_0 a`.
pub fn tau0(a: &ThetaTerm, n: usize) -> Result<CnfOrdinal> {
    match tau(0, a, n)? {
        TauValue::Ordinal(o) => Ok(o),
        TauValue::Tuple(_) => unreachable!("level 0 yields an ordinal"),
    }
}

/// Whether `τ_0 a < ω_{n+2}`.
pub fn tau0_bound(a: &ThetaTerm, n: usize) -> Result<bool> {
    Ok(tau0(a, n)? < omega_n(n + 2))
}

/// The four components `(α, δ, ω^scale, γ)` before normalization.
#[derive(Clone, Debug)]
struct Raw {
    coeff: CnfOrdinal,
    theta: Vec<usize>,
    scale: CnfOrdinal,
    tail: CnfOrdinal,
}

impl Raw {
    fn ordinal(tail: CnfOrdinal) -> Raw {
        Raw {
            coeff: CnfOrdinal::zero(),
            theta: Vec::new(),
            scale: CnfOrdinal::zero(),
            tail,
        }
    }

    fn middle(theta: &[usize]) -> Raw {
        Raw {
            theta: theta.to_vec(),
            ..Raw::ordinal(CnfOrdinal::zero())
        }
    }

    /// `ω^z · (α, δ, γ, η) = (α, δ, ω^z·γ, ω^z·η)`.
    fn scaled(self, z: &CnfOrdinal) -> Raw {
        Raw {
            scale: z.add(&self.scale),
            tail: CnfOrdinal::omega_pow_mul(z, &self.tail),
            ..self
        }
    }

    /// Tuple sum at level `m`.
    fn plus(self, rhs: Raw, m: usize) -> Result<Raw> {
        if m == 0 {
            return Ok(Raw::ordinal(self.tail.add(&rhs.tail)));
        }
        if !rhs.coeff.is_zero() {
            return Ok(Raw {
                coeff: self.coeff.add(&rhs.coeff),
                ..rhs
            });
        }
        if rhs.theta.is_empty() {
            return Ok(Raw {
                tail: self.tail.add(&rhs.tail),
                ..self
            });
        }
        // `Ω_m·α + δ'·γ' + η'`: only sound when the left summand ends at `Ω_m·α`.
        if self.theta.is_empty() && self.tail.is_zero() {
            return Ok(Raw {
                coeff: self.coeff,
                ..rhs
            });
        }
        Err(Error::Internal(
            "tuple sum with a zero Omega part on the right and a nonzero middle".into(),
        ))
    }
}

struct TauCtx<'a> {
    word: &'a [usize],
    n: usize,
    memo: HashMap<(usize, usize), Raw>,
}

impl TauCtx<'_> {
    /// `τ_m` of the suffix starting at `start`.
    fn tau(&mut self, m: usize, start: usize) -> Result<Raw> {
        if let Some(r) = self.memo.get(&(m, start)) {
            return Ok(r.clone());
        }
        let suffix = &self.word[start..];
        let r = match suffix.first() {
            _ if m > self.n => Raw::middle(suffix),
            None => Raw::ordinal(CnfOrdinal::zero()),
            Some(&j) if j < m => Raw::middle(suffix),
            Some(&j) if j == m => self.tau_head(m, start + 1)?,
            Some(&j) => {
                return Err(Error::Internal(format!(
                    "v{j} heads a term handed to tau_{m}"
                )))
            }
        };
        self.memo.insert((m, start), r.clone());
        Ok(r)
    }

    /// `τ_m ϑ_m α = Ω_m·ω^β + ω^{ω^β}·(ω^{f(β)}·τ_m(k_m α) + η) + 1`
    /// where `τ_{m+1} α = Ω_{m+1}·β + … + η`, and `α` starts at `arg`.
    fn tau_head(&mut self, m: usize, arg: usize) -> Result<Raw> {
        let upper = self.tau(m + 1, arg)?;
        let (beta, eta) = (upper.coeff, upper.tail);
        let k_start = self.word.len() - k_slice(m, &self.word[arg..]).len();
        let inner = self.tau(m, k_start)?;
        let w_beta = CnfOrdinal::omega_pow(beta.clone());
        let lead = Raw {
            coeff: w_beta.clone(),
            ..Raw::ordinal(CnfOrdinal::zero())
        };
        let body = inner
            .scaled(&f_hat(&beta))
            .plus(Raw::ordinal(eta), m)?
            .scaled(&w_beta);
        let mut r = lead
            .plus(body, m)?
            .plus(Raw::ordinal(CnfOrdinal::one()), m)?;
        if r.theta.is_empty() {
            r.scale = f_hat(&r.coeff);
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> ThetaTerm {
        s.parse().unwrap()
    }

    fn c(s: &str) -> CnfOrdinal {
        s.parse().unwrap()
    }

    #[test]
    fn chi_examples() {
        let v = |s: &str| s.parse::<VeblenTerm<usize>>().unwrap();
        assert_eq!(chi(&v("0")), t("0"));
        assert_eq!(chi(&v("phi(0, 0)")), t("v0 0"));
        assert_eq!(chi(&v("phi(2, phi(0, 0))")), t("v0 v1 v1 v0 0"));
    }

    #[test]
    fn chi_std_examples() {
        assert_eq!(chi_std(&c("0")).unwrap(), t("0"));
        assert_eq!(chi_std(&c("2")).unwrap(), t("v0 v0 0"));
        assert_eq!(chi_std(&c("w")).unwrap(), t("v0 v1 v0 v1 v0 0"));
        assert_eq!(chi_std(&c("w^(w)")).unwrap(), t("v0 v1 v1 v0 v1 v1 v0 0"));
        assert!(chi_std(&c("w^(w^(w))")).is_err());
    }

    #[test]
    fn d_and_bar_examples() {
        assert_eq!(d_op(1, &t("0")), t("v1 0"));
        assert_eq!(d_op(0, &t("v1 0")), t("v0 v1 v1 0"));
        assert_eq!(d_op(0, &t("v0 0")), t("v0 v0 0"));
        let p = |s: &str| s.parse::<PiTerm>().unwrap();
        assert_eq!(bar(&p("0")), t("0"));
        assert_eq!(bar(&p("D0(0)")), t("v1 0"));
        // d_1 pads once more because S(v2 0) = 2 exceeds 1.
        assert_eq!(bar(&p("D0(D1(0))")), t("v1 v2 v2 0"));
    }

    #[test]
    fn psi_examples() {
        let v = |s: &str| s.parse::<VeblenTerm<PiTerm>>().unwrap();
        assert_eq!(psi_map(&v("0")).unwrap(), t("0"));
        assert_eq!(psi_map(&v("phi(D0(0), 0)")).unwrap(), t("v0 0"));
        assert_eq!(
            psi_map(&v("phi(D0(0), phi(D0(0), 0))")).unwrap(),
            t("v0 v0 0")
        );
        assert!(psi_map(&v("phi(D1(0), 0)")).is_err());
        assert!(psi_map(&v("phi(0, 0)")).is_err());
    }

    #[test]
    fn tau_anchors() {
        assert_eq!(tau0(&t("0"), 1).unwrap(), c("0"));
        assert_eq!(tau0(&t("v0 0"), 1).unwrap(), c("1"));
        assert_eq!(tau0(&t("v0 v0 0"), 1).unwrap(), c("w + 1"));
        let x = tau_tuple(1, &t("v1 0"), 1).unwrap();
        assert_eq!(x.to_string(), "(1, 0, 1)");
        assert!(tau(0, &t("v1 0"), 1).is_err());
        assert!(tau0_bound(&t("v0 v0 0"), 1).unwrap());
    }

    #[test]
    fn tuple_order() {
        let mk = |a: &str, d: &str, g: &str| {
            OmegaTuple::new(c(a), t(d), c(g), 1, 1).unwrap()
        };
        let cmp = |x: &OmegaTuple, y: &OmegaTuple| tuple_compare(x, y).unwrap();
        assert_eq!(cmp(&mk("0", "0", "0"), &mk("1", "0", "1")), Ordering::Less);
        assert_eq!(cmp(&mk("1", "0", "1"), &mk("1", "0", "2")), Ordering::Less);
        assert_eq!(
            cmp(&mk("1", "0", "0"), &mk("1", "v0 0", "0")),
            Ordering::Less
        );
        let other = OmegaTuple::new(c("0"), t("0"), c("0"), 2, 1).unwrap();
        assert!(tuple_compare(&mk("0", "0", "0"), &other).is_err());
        assert!(OmegaTuple::new(c("0"), t("0"), c("1"), 1, 1).is_err());
    }
}
