//! Shapovalov and PRV determinants, kept as multisets of linear factors
//! `φ(α)+c` (the functional `μ ↦ (α,μ)+c`). Determinants are only defined
//! up to a nonzero scalar, so two of them are equal iff their factor
//! multisets are.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::charmult::{KacCharacter, PartitionFunction, PartitionKind};
use crate::error::{Error, Result};
use crate::rootdata::{bilinear, RootSystem};
use crate::weight::{format_rational, rat, Rational, Weight};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearFactor {
    pub alpha: Weight,
    pub c: Rational,
}

impl LinearFactor {
    pub fn new(alpha: Weight, c: Rational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::Internal("linear factor with zero root".into()));
        }
        Ok(LinearFactor { alpha, c })
    }

    pub fn eval(&self, mu: &Weight) -> Result<Rational> {
        Ok(bilinear(&self.alpha, mu)? + &self.c)
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(φ({})", self.alpha.beta_expr())?;
        if self.c > Rational::zero() {
            write!(f, "+{}", format_rational(&self.c))?;
        } else if self.c < Rational::zero() {
            write!(f, "{}", format_rational(&self.c))?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorFamily {
    EvenStandard,
    OddStandard,
    Exotic,
}

impl FactorFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorFamily::EvenStandard => "even-standard",
            FactorFamily::OddStandard => "odd-standard",
            FactorFamily::Exotic => "exotic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DeterminantKind {
    Shapovalov,
    Prv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorEntry {
    pub factor: LinearFactor,
    pub exp: u64,
    pub family: FactorFamily,
}

#[derive(Debug, Clone)]
pub struct FactoredDeterminant {
    pub kind: DeterminantKind,
    pub label: Weight,
    factors: Vec<FactorEntry>,
}

impl FactoredDeterminant {
    /// Merges repeated factors and drops zero exponents. Entries are kept
    /// sorted by family, then root, then constant.
    pub fn new(kind: DeterminantKind, label: Weight, raw: impl IntoIterator<Item = (LinearFactor, u64, FactorFamily)>) -> Self {
        let mut merged: BTreeMap<(FactorFamily, LinearFactor), u64> = BTreeMap::new();
        for (factor, exp, family) in raw {
            if exp > 0 {
                *merged.entry((family, factor)).or_default() += exp;
            }
        }
        let factors = merged.into_iter().map(|((family, factor), exp)| FactorEntry { factor, exp, family }).collect();
        FactoredDeterminant { kind, label, factors }
    }

    pub fn factors(&self) -> &[FactorEntry] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.factors.iter().map(|e| e.exp).sum()
    }

    /// Factor multiset, ignoring families.
    pub fn multiset(&self) -> BTreeMap<LinearFactor, u64> {
        let mut out = BTreeMap::new();
        for e in &self.factors {
            *out.entry(e.factor.clone()).or_default() += e.exp;
        }
        out
    }

    pub fn same_factors(&self, other: &FactoredDeterminant) -> bool {
        self.multiset() == other.multiset()
    }

    pub fn to_json(&self) -> Value {
        let factors: Vec<Value> = self
            .factors
            .iter()
            .map(|e| {
                json!({
                    "alpha": e.factor.alpha,
                    "c": format_rational(&e.factor.c),
                    "exp": e.exp,
                    "family": e.family.as_str(),
                })
            })
            .collect();
        json!({ "kind": self.kind, "label": self.label, "factors": factors })
    }
}

impl fmt::Display for FactoredDeterminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, e) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " · ")?;
            }
            write!(f, "{}^{}", e.factor, e.exp)?;
        }
        Ok(())
    }
}

/// Value of a factored determinant at `μ` (meaningful up to the scalar the
/// determinant is defined up to) and the order of vanishing there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: Rational,
    pub vanishing_order: u64,
}

pub fn evaluate_factored(d: &FactoredDeterminant, mu: &Weight) -> Result<Evaluation> {
    let mut value = Rational::one();
    let mut vanishing_order = 0;
    for e in d.factors() {
        let v = e.factor.eval(mu)?;
        if v.is_zero() {
            vanishing_order += e.exp;
        }
        let exp = i32::try_from(e.exp).map_err(|_| Error::Overflow("factor exponent"))?;
        value *= num_traits::pow::Pow::pow(&v, exp);
    }
    Ok(Evaluation { value, vanishing_order })
}

/// `det S_ν` for `ν ∈ ℕπ`:
/// `∏_{α∈Δ̄₀⁺} ∏_m (φ(α)+(ρ,α)−m(α,α)/2)^{τ(ν−mα)}`
/// `· ∏_{β∈Δ₁⁺} ∏_m (φ(β)+(ρ,β)−(2m−1)(β,β)/2)^{τ(ν−(2m−1)β)}`.
///
/// The exponents use the Kostant function `τ` with odd roots unrestricted,
/// as the factorization is usually stated, even though a PBW basis of
/// `𝒰(𝔫⁻)_ν` uses each odd root at most once.
pub fn shapovalov_factorization(rs: &RootSystem, nu: &Weight) -> Result<FactoredDeterminant> {
    rs.check_rank(nu)?;
    nu.lattice_coords()?;
    if !nu.in_positive_cone() {
        return Err(Error::NotInPositiveCone(nu.clone()));
    }
    let mut tau = PartitionFunction::new(rs, PartitionKind::Kostant);
    let mut raw = Vec::new();
    for alpha in &rs.even_bar_pos {
        let base = bilinear(&rs.rho, alpha)?;
        let half_norm = bilinear(alpha, alpha)? / Rational::from_integer(2.into());
        for m in 1.. {
            let rest = nu - &alpha.scale_int(m);
            if !rest.in_positive_cone() {
                break;
            }
            let c = &base - &half_norm * Rational::from_integer(m.into());
            raw.push((LinearFactor::new(alpha.clone(), c)?, tau.eval(&rest)?, FactorFamily::EvenStandard));
        }
    }
    for beta in &rs.odd_pos {
        let base = bilinear(&rs.rho, beta)?;
        let half_norm = bilinear(beta, beta)? / Rational::from_integer(2.into());
        for m in 1.. {
            let k = 2 * m - 1;
            let rest = nu - &beta.scale_int(k);
            if !rest.in_positive_cone() {
                break;
            }
            let c = &base - &half_norm * Rational::from_integer(k.into());
            raw.push((LinearFactor::new(beta.clone(), c)?, tau.eval(&rest)?, FactorFamily::OddStandard));
        }
    }
    Ok(FactoredDeterminant::new(DeterminantKind::Shapovalov, nu.clone(), raw))
}

/// Alternating sum `Σ_{i≥1} (−1)^{i+1} dim Ṽ(λ)_{iβ}`.
fn alternating_ray_sum(ch: &mut KacCharacter, beta: &Weight) -> Result<i64> {
    let mut total = 0i64;
    for i in 1..=ch.ray_extent(beta) {
        let m = i64::try_from(ch.multiplicity(&beta.scale_int(i as i64))?).map_err(|_| Error::Overflow("multiplicity"))?;
        total += if i % 2 == 1 { m } else { -m };
    }
    Ok(total)
}

fn exotic_from(rs: &RootSystem, ch: &mut KacCharacter) -> Result<u64> {
    let mut value = None;
    for beta in &rs.odd_pos {
        let e = alternating_ray_sum(ch, beta)?;
        match value {
            None => value = Some(e),
            Some(v) if v != e => {
                return Err(Error::Internal(format!("exotic exponent differs between odd roots: {v} vs {e} at {beta}")));
            }
            _ => {}
        }
    }
    let e = value.unwrap_or(0);
    u64::try_from(e).map_err(|_| Error::Internal(format!("negative exotic exponent {e}")))
}

/// `Σ_{m≥1} (−1)^{m+1} dim Ṽ(λ)_{mβ}`; the same for every odd positive `β`.
pub fn exotic_exponent(rs: &RootSystem, lambda: &Weight, beta: &Weight, cap: usize) -> Result<u64> {
    if !rs.odd_pos.contains(beta) {
        return Err(Error::NotOddRoot(beta.clone()));
    }
    let mut ch = KacCharacter::new(rs, lambda, cap)?;
    let own = alternating_ray_sum(&mut ch, beta)?;
    let common = exotic_from(rs, &mut ch)?;
    debug_assert_eq!(own, common as i64);
    Ok(common)
}

/// `det PRV^λ` for `λ ∈ P⁺(π)`: standard factors
/// `(φ(α)+(ρ,α)−m)^{dim Ṽ(λ)_{mα}}`, `α ∈ Δ̄₀⁺`,
/// `(φ(β)+(ρ,β)−(2m−1)/2)^{dim Ṽ(λ)_{(2m−1)β}}`, `β ∈ Δ₁⁺`,
/// and exotic factors `(φ(β)+(ρ,β))^E` with `E` the exotic exponent.
pub fn prv_factorization(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<FactoredDeterminant> {
    let mut ch = KacCharacter::new(rs, lambda, cap)?;
    let mut raw = Vec::new();
    for alpha in &rs.even_bar_pos {
        let base = bilinear(&rs.rho, alpha)?;
        let half_norm = bilinear(alpha, alpha)? / Rational::from_integer(2.into());
        for m in 1..=ch.ray_extent(alpha) as i64 {
            let c = &base - &half_norm * Rational::from_integer(m.into());
            let exp = ch.multiplicity(&alpha.scale_int(m))?;
            raw.push((LinearFactor::new(alpha.clone(), c)?, exp, FactorFamily::EvenStandard));
        }
    }
    for beta in &rs.odd_pos {
        let base = bilinear(&rs.rho, beta)?;
        let half_norm = bilinear(beta, beta)? / Rational::from_integer(2.into());
        let extent = ch.ray_extent(beta) as i64;
        for m in 1.. {
            let k = 2 * m - 1;
            if k > extent {
                break;
            }
            let c = &base - &half_norm * Rational::from_integer(k.into());
            let exp = ch.multiplicity(&beta.scale_int(k))?;
            raw.push((LinearFactor::new(beta.clone(), c)?, exp, FactorFamily::OddStandard));
        }
    }
    let e = exotic_from(rs, &mut ch)?;
    for beta in &rs.odd_pos {
        raw.push((LinearFactor::new(beta.clone(), bilinear(&rs.rho, beta)?)?, e, FactorFamily::Exotic));
    }
    Ok(FactoredDeterminant::new(DeterminantKind::Prv, lambda.clone(), raw))
}

/// `Σ_{m≥1} (Σ_{α∈Δ₀⁺} dim Ṽ(λ)_{mα} + 2l(−1)^{m+1} dim Ṽ(λ)_{mβ₁})`.
pub fn prv_degree_bound(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<u64> {
    let mut ch = KacCharacter::new(rs, lambda, cap)?;
    let mut total: i64 = 0;
    for alpha in &rs.even_pos {
        for m in 1..=ch.ray_extent(alpha) as i64 {
            total += ch.multiplicity(&alpha.scale_int(m))? as i64;
        }
    }
    total += 2 * rs.rank as i64 * alternating_ray_sum(&mut ch, &rs.odd_pos[0])?;
    u64::try_from(total).map_err(|_| Error::Internal(format!("negative degree bound {total}")))
}

/// The closed forms for `l = 1`: `λ = 2nβ` gives `∏_{k<n}(φ(β)−k)` and
/// `λ = (2n+1)β` gives `(φ(β)+1/2)∏_{k≤n}(φ(β)−k)`.
pub fn rank_one_prv_closed_form(k: u64) -> FactoredDeterminant {
    let beta = Weight::from_ints(&[1]);
    let n = (k / 2) as i64;
    let mut raw = Vec::new();
    let top = if k.is_multiple_of(2) { n } else { n + 1 };
    for j in 0..top {
        raw.push((LinearFactor { alpha: beta.clone(), c: Rational::from_integer((-j).into()) }, 1, FactorFamily::OddStandard));
    }
    if k % 2 == 1 {
        raw.push((LinearFactor { alpha: beta.clone(), c: rat(1, 2) }, 1, FactorFamily::Exotic));
    }
    FactoredDeterminant::new(DeterminantKind::Prv, Weight::from_ints(&[k as i64]), raw)
}
