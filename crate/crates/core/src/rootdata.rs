//! Root data of `osp(1,2l)` in the orthonormal realization.
//!
//! With `β₁,…,β_l` orthonormal:
//!
//! * `π = {β₁−β₂, …, β_{l−1}−β_l, β_l}`
//! * `Δ₀⁺ = {β_i±β_j (i<j), 2β_i}`, `Δ₁⁺ = {β_i}`, `Δ̄₀⁺ = {β_i±β_j (i<j)}`
//! * `ρ = Σ(l−i+½)β_i`, `ρ₀ = Σ(l−i+1)β_i`, `ρ₁ = ½Σβ_i`
//! * `ω_r = β₁+…+β_r`
//!
//! Root lists are in a fixed order: pairs `(i,j)` lexicographically with
//! `β_i−β_j` before `β_i+β_j`, then the doubled odd roots.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::weight::{int, rat, Rational, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystem {
    pub rank: usize,
    pub even_pos: Vec<Weight>,
    pub odd_pos: Vec<Weight>,
    pub even_bar_pos: Vec<Weight>,
    pub simple: Vec<Weight>,
    pub rho: Weight,
    pub rho0: Weight,
    pub rho1: Weight,
    pub fundamental: Vec<Weight>,
}

pub fn build_root_system(l: i64) -> Result<RootSystem> {
    if l < 1 {
        return Err(Error::InvalidRank(l));
    }
    let l = l as usize;
    let b = |i: usize| Weight::basis(l, i);

    let mut even_bar_pos = Vec::with_capacity(l * (l - 1));
    for i in 0..l {
        for j in i + 1..l {
            even_bar_pos.push(&b(i) - &b(j));
            even_bar_pos.push(&b(i) + &b(j));
        }
    }
    let odd_pos: Vec<Weight> = (0..l).map(b).collect();
    let mut even_pos = even_bar_pos.clone();
    even_pos.extend(odd_pos.iter().map(|beta| beta.scale_int(2)));

    let mut simple: Vec<Weight> = (0..l - 1).map(|i| &b(i) - &b(i + 1)).collect();
    simple.push(b(l - 1));

    let rho = Weight::from_halves(&(0..l).map(|i| 2 * (l - i) as i64 - 1).collect::<Vec<_>>());
    let rho0 = Weight::from_ints(&(0..l).map(|i| (l - i) as i64).collect::<Vec<_>>());
    let rho1 = Weight::from_halves(&vec![1; l]);

    let fundamental = (1..=l)
        .map(|r| Weight::from_ints(&(0..l).map(|i| i64::from(i < r)).collect::<Vec<_>>()))
        .collect();

    Ok(RootSystem { rank: l, even_pos, odd_pos, even_bar_pos, simple, rho, rho0, rho1, fundamental })
}

pub fn bilinear(a: &Weight, b: &Weight) -> Result<Rational> {
    a.dot(b)
}

/// `⟨λ,μ⟩ = 2(λ,μ)/(μ,μ)`.
pub fn integral_pairing(lambda: &Weight, mu: &Weight) -> Result<Rational> {
    let norm = mu.dot(mu)?;
    if norm.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(int(2) * lambda.dot(mu)? / norm)
}

/// `x ∈ ℕ⁺`
pub(crate) fn is_pos_int(x: &Rational) -> bool {
    x.is_integer() && x.is_positive()
}

/// `x ∈ 2ℕ+1`
pub(crate) fn is_pos_odd(x: &Rational) -> bool {
    x.is_integer() && x.is_positive() && x.to_integer().is_odd()
}

impl RootSystem {
    /// `Δ_irr⁺ = Δ̄₀⁺ ∪ Δ₁⁺`
    pub fn irreducible_pos(&self) -> Vec<Weight> {
        self.even_bar_pos.iter().chain(&self.odd_pos).cloned().collect()
    }

    /// All positive roots `Δ⁺ = Δ₀⁺ ∪ Δ₁⁺`.
    pub fn positive_roots(&self) -> Vec<Weight> {
        self.even_pos.iter().chain(&self.odd_pos).cloned().collect()
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: w.dim() });
        }
        Ok(())
    }

    pub fn shifted(&self, lambda: &Weight) -> Result<Weight> {
        self.check_rank(lambda)?;
        Ok(lambda + &self.rho)
    }

    /// Membership in `P⁺(π)`: `⟨λ,β_l⟩ ∈ 2ℕ` and `⟨λ,β_i−β_{i+1}⟩ ∈ ℕ`.
    pub fn is_dominant_integral(&self, lambda: &Weight) -> Result<bool> {
        self.check_rank(lambda)?;
        let l = self.rank;
        let last = integral_pairing(lambda, &self.odd_pos[l - 1])?;
        let half = last / int(2);
        if !(half.is_integer() && !half.is_negative()) {
            return Ok(false);
        }
        for alpha in &self.simple[..l - 1] {
            let p = integral_pairing(lambda, alpha)?;
            if !(p.is_integer() && !p.is_negative()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn require_dominant_integral(&self, lambda: &Weight) -> Result<()> {
        if self.is_dominant_integral(lambda)? {
            Ok(())
        } else {
            Err(Error::NotDominantIntegral(lambda.clone()))
        }
    }

    /// Dominance in the sense used for the category of `ad`-finite modules:
    /// `⟨λ+ρ,α⟩ ∉ −ℕ⁺` on `Δ̄₀⁺` and `⟨λ+ρ,β⟩ ∉ −2ℕ−1` on `Δ₁⁺`.
    pub fn is_dominant(&self, lambda: &Weight) -> Result<bool> {
        let shifted = self.shifted(lambda)?;
        for alpha in &self.even_bar_pos {
            if is_pos_int(&-integral_pairing(&shifted, alpha)?) {
                return Ok(false);
            }
        }
        for beta in &self.odd_pos {
            if is_pos_odd(&-integral_pairing(&shifted, beta)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Roots `α ∈ Δ_λ` paired with the positive integer `⟨λ+ρ,α⟩`.
    pub fn delta_lambda(&self, lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
        let shifted = self.shifted(lambda)?;
        let mut out = Vec::new();
        for alpha in &self.even_bar_pos {
            let p = integral_pairing(&shifted, alpha)?;
            if is_pos_int(&p) {
                out.push((alpha.clone(), to_u64(&p)?));
            }
        }
        for beta in &self.odd_pos {
            let p = integral_pairing(&shifted, beta)?;
            if is_pos_odd(&p) {
                out.push((beta.clone(), to_u64(&p)?));
            }
        }
        Ok(out)
    }

    /// Simplicity of the Verma module `M̃(λ)`.
    pub fn verma_is_simple(&self, lambda: &Weight) -> Result<bool> {
        Ok(self.delta_lambda(lambda)?.is_empty())
    }

    /// True iff `(λ+ρ, β) = 0` for some odd positive root.
    pub fn on_odd_hyperplane(&self, lambda: &Weight) -> Result<bool> {
        Ok(self.shifted(lambda)?.coords().iter().any(Zero::is_zero))
    }

    /// `ρ` recomputed from its defining half-sums.
    pub fn rho_from_roots(&self) -> Weight {
        let half = rat(1, 2);
        let mut acc = Weight::zero(self.rank);
        for a in &self.even_pos {
            acc = &acc + &a.scale(&half);
        }
        for b in &self.odd_pos {
            acc = &acc - &b.scale(&half);
        }
        acc
    }
}

fn to_u64(r: &Rational) -> Result<u64> {
    use num_traits::ToPrimitive;
    r.to_integer().to_u64().ok_or(Error::Overflow("pairing"))
}
