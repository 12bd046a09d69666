//! The group ring `ℤ[𝔥*]` and the truncated series ring `ℤ[𝔥*][[q]]`.
//!
//! Series are truncated at a fixed `q`-order `N`; every product discards
//! degrees above `N`, so a product of two series that are exact to order `N`
//! is again exact to order `N`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::bigint_value;
use crate::poly::IntPoly;
use crate::rootdata::RootSystem;
use crate::weight::Weight;
use crate::weyl::{enumerate_weyl, WeylElement};

/// A finite sum `Σ c_λ e^λ` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupRingElement {
    dim: usize,
    terms: HashMap<Weight, BigInt>,
}

impl GroupRingElement {
    pub fn zero(dim: usize) -> Self {
        GroupRingElement { dim, terms: HashMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(Weight::zero(dim), 1)
    }

    /// `c·e^λ`
    pub fn monomial(lambda: Weight, c: i64) -> Self {
        let mut out = Self::zero(lambda.dim());
        out.add_term(lambda, BigInt::from(c));
        out
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Weight, BigInt)>) -> Result<Self> {
        let mut out = Self::zero(dim);
        for (w, c) in terms {
            if w.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: w.dim() });
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, lambda: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// `π_μ`: the coefficient of `e^μ`.
    pub fn coeff(&self, mu: &Weight) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    /// Terms in canonical order.
    pub fn sorted_terms(&self) -> Vec<(&Weight, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.dim);
        }
        GroupRingElement { dim: self.dim, terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_filtered(other, &|_| true)
    }

    pub(crate) fn mul_filtered(&self, other: &Self, keep: &dyn Fn(&Weight) -> bool) -> Self {
        assert_eq!(self.dim, other.dim, "group ring dimension mismatch");
        let mut out = Self::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let s = a + b;
                if keep(&s) {
                    out.add_term(s, ca * cb);
                }
            }
        }
        out
    }

    /// Multiplication by `e^μ`.
    pub fn shift(&self, mu: &Weight) -> Self {
        GroupRingElement { dim: self.dim, terms: self.terms.iter().map(|(w, c)| (w + mu, c.clone())).collect() }
    }

    /// `w(e^λ) = e^{wλ}`
    pub fn apply_weyl(&self, w: &WeylElement) -> Self {
        GroupRingElement { dim: self.dim, terms: self.terms.iter().map(|(x, c)| (w.act_unchecked(x), c.clone())).collect() }
    }

    /// `ι: e^λ ↦ e^{−λ}`
    pub fn iota(&self) -> Self {
        GroupRingElement { dim: self.dim, terms: self.terms.iter().map(|(x, c)| (-x, c.clone())).collect() }
    }

    /// `J = Σ_{w∈W} sgn(w)·w`
    pub fn j_apply(&self, cap: usize) -> Result<Self> {
        let group = enumerate_weyl(self.dim, cap)?;
        let mut out = Self::zero(self.dim);
        for w in group.iter() {
            let sgn = BigInt::from(w.sign());
            for (x, c) in &self.terms {
                out.add_term(w.act_unchecked(x), c * &sgn);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms().into_iter().map(|(w, c)| json!({"w": w, "c": bigint_value(c)})).collect(),
        )
    }
}

/// `Σ_{r=0}^{N} a_r q^r` with `a_r ∈ ℤ[𝔥*]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<GroupRingElement>,
}

impl QSeries {
    pub fn zero(dim: usize, order: usize) -> Self {
        QSeries { order, coeffs: vec![GroupRingElement::zero(dim); order + 1] }
    }

    pub fn one(dim: usize, order: usize) -> Self {
        Self::from_element(GroupRingElement::one(dim), 0, order)
    }

    /// `a·q^r`, empty if `r` exceeds the order.
    pub fn from_element(a: GroupRingElement, r: usize, order: usize) -> Self {
        let mut out = Self::zero(a.dim(), order);
        if r <= order {
            out.coeffs[r] = a;
        }
        out
    }

    /// An integer polynomial in `q` as a series with constant coefficients.
    pub fn from_poly(p: &IntPoly, dim: usize, order: usize) -> Self {
        let mut out = Self::zero(dim, order);
        for r in 0..=order {
            let c = p.coeff(r);
            if !c.is_zero() {
                out.coeffs[r].add_term(Weight::zero(dim), c);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].dim()
    }

    /// The coefficient of `q^r`.
    pub fn coeff(&self, r: usize) -> &GroupRingElement {
        &self.coeffs[r]
    }

    pub fn coeffs(&self) -> &[GroupRingElement] {
        &self.coeffs
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().map(GroupRingElement::len).sum()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        QSeries { order, coeffs: self.coeffs[..=order].to_vec() }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "series order mismatch");
        assert_eq!(self.dim(), other.dim(), "series dimension mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        QSeries { order: self.order, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        QSeries { order: self.order, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_filtered(other, &|_| true)
    }

    fn mul_filtered(&self, other: &Self, keep: &dyn Fn(&Weight) -> bool) -> Self {
        self.check(other);
        let mut out = Self::zero(self.dim(), self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                let prod = a.mul_filtered(b, keep);
                let slot = &mut out.coeffs[i + j];
                *slot = slot.add(&prod);
            }
        }
        out
    }

    /// Multiplication by a `q`-free group ring element.
    pub fn mul_element(&self, a: &GroupRingElement) -> Self {
        QSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| c.mul(a)).collect() }
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        self.mul(&QSeries::from_poly(p, self.dim(), self.order))
    }

    pub fn iota(&self) -> Self {
        QSeries { order: self.order, coeffs: self.coeffs.iter().map(GroupRingElement::iota).collect() }
    }

    pub fn apply_weyl(&self, w: &WeylElement) -> Self {
        QSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| c.apply_weyl(w)).collect() }
    }

    pub fn j_apply(&self, cap: usize) -> Result<Self> {
        Ok(QSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| c.j_apply(cap)).collect::<Result<_>>()? })
    }

    /// `π_μ` applied degree by degree.
    pub fn project_coeff(&self, mu: &Weight) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c.coeff(mu)).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "coeffs": self.coeffs.iter().enumerate()
                .map(|(r, c)| json!({"q": r, "terms": c.to_json()}))
                .collect::<Vec<_>>(),
        })
    }
}

/// One factor `(1 + sign·q^{q_power}·e^{shift})`, or its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFactor {
    pub sign: i8,
    pub shift: Weight,
    pub q_power: usize,
    pub inverted: bool,
}

impl ProductFactor {
    /// `(1 + q^k e^μ)`
    pub fn plus(shift: Weight, q_power: usize) -> Self {
        ProductFactor { sign: 1, shift, q_power, inverted: false }
    }

    /// `(1 − q^k e^μ)`
    pub fn minus(shift: Weight, q_power: usize) -> Self {
        ProductFactor { sign: -1, shift, q_power, inverted: false }
    }

    /// `(1 − q^k e^μ)^{−1}`
    pub fn geometric(shift: Weight, q_power: usize) -> Self {
        ProductFactor { sign: -1, shift, q_power, inverted: true }
    }
}

/// Depth of `ν ∈ −ℕπ` below zero, i.e. the height of `−ν`.
fn depth_of(nu: &Weight) -> Option<u64> {
    let neg = -nu;
    if !neg.in_positive_cone() {
        return None;
    }
    neg.height().to_integer().to_u64()
}

/// Expand `∏ factors` exactly to `q`-order `order`.
///
/// Without `depth`, every inverted factor must carry a positive power of
/// `q`. With `depth = Some(H)`, every shift must lie in `−ℕπ` and all terms
/// `e^ν` with `height(−ν) > H` are discarded; this is the regime for
/// `q`-free products such as the Kac denominator.
pub fn expand_product(dim: usize, factors: &[ProductFactor], order: usize, depth: Option<u64>) -> Result<QSeries> {
    for f in factors {
        if f.shift.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: f.shift.dim() });
        }
        if f.sign != 1 && f.sign != -1 {
            return Err(Error::Parse(format!("factor sign must be ±1, got {}", f.sign)));
        }
        if depth.is_none() && f.inverted && f.q_power == 0 {
            return Err(Error::NonTerminatingExpansion(format!(
                "(1{}e^{})^-1 carries no q and no height bound was given",
                if f.sign < 0 { "-" } else { "+" },
                f.shift
            )));
        }
        if depth.is_some() {
            if depth_of(&f.shift).is_none() {
                return Err(Error::NonTerminatingExpansion(format!(
                    "height truncation needs shifts in the negative cone, got {}",
                    f.shift
                )));
            }
            if f.inverted && f.q_power == 0 && f.shift.is_zero() {
                return Err(Error::NonTerminatingExpansion("inverted factor with zero shift".into()));
            }
        }
    }

    let keep = |w: &Weight| match depth {
        None => true,
        Some(h) => depth_of(w).is_some_and(|d| d <= h),
    };

    let mut acc = QSeries::one(dim, order);
    for f in factors {
        let mut fs = QSeries::zero(dim, order);
        fs.coeffs[0].add_term(Weight::zero(dim), BigInt::one());
        if f.inverted {
            // (1 + s x)^{-1} = Σ (−s x)^n
            let ratio = -i64::from(f.sign);
            let mut n: u64 = 1;
            loop {
                let qdeg = f.q_power as u64 * n;
                if qdeg > order as u64 {
                    break;
                }
                let exp = f.shift.scale_int(n as i64);
                if !keep(&exp) {
                    break;
                }
                let c = BigInt::from(ratio).pow(n as u32);
                fs.coeffs[qdeg as usize].add_term(exp, c);
                n += 1;
            }
        } else if f.q_power <= order {
            fs.coeffs[f.q_power].add_term(f.shift.clone(), BigInt::from(f.sign));
        }
        acc = acc.mul_filtered(&fs, &keep);
    }
    Ok(acc)
}

/// `ch_q Λ𝔤₁ = ∏_{β∈Δ₁} (1 + q e^β)`
pub fn chq_exterior_odd(rs: &RootSystem, order: usize) -> Result<QSeries> {
    let factors: Vec<_> = rs
        .odd_pos
        .iter()
        .flat_map(|b| [ProductFactor::plus(b.clone(), 1), ProductFactor::plus(-b, 1)])
        .collect();
    expand_product(rs.rank, &factors, order, None)
}

/// `ch_q H = ∏_{α∈Δ₀} (1−qe^α)^{−1} · ch_q Λ𝔤₁ · Σ_{w∈W} q^{l(w)}`
pub fn build_chq_h(rs: &RootSystem, order: usize, cap: usize) -> Result<QSeries> {
    let mut factors: Vec<_> = rs
        .even_pos
        .iter()
        .flat_map(|a| [ProductFactor::geometric(a.clone(), 1), ProductFactor::geometric(-a, 1)])
        .collect();
    factors.extend(rs.odd_pos.iter().flat_map(|b| [ProductFactor::plus(b.clone(), 1), ProductFactor::plus(-b, 1)]));
    let poincare = crate::weyl::poincare_polynomial(rs.rank, cap)?;
    Ok(expand_product(rs.rank, &factors, order, None)?.mul_poly(&poincare))
}

/// `Σ_r ch(Λ^r𝔤₁)` split by degree: `ch Λ^r𝔤₁` is the `q^r` coefficient.
pub fn exterior_power_character(rs: &RootSystem, r: usize) -> Result<GroupRingElement> {
    let series = chq_exterior_odd(rs, 2 * rs.rank)?;
    Ok(if r <= 2 * rs.rank { series.coeff(r).clone() } else { GroupRingElement::zero(rs.rank) })
}

/// Coefficient sum of a group ring element.
pub fn augmentation(a: &GroupRingElement) -> BigInt {
    a.iter().map(|(_, c)| c.clone()).sum()
}

/// True when all coefficients are `±1`.
pub fn is_signed_unit_support(a: &GroupRingElement) -> bool {
    a.iter().all(|(_, c)| c.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn monomials_multiply() {
        let a = GroupRingElement::monomial(w("1,0"), 2);
        let b = GroupRingElement::monomial(w("0,1/2"), 3);
        let p = a.mul(&b);
        assert_eq!(p.coeff(&w("1,1/2")), BigInt::from(6));
        assert_eq!(p.len(), 1);
        let z = a.sub(&a);
        assert!(z.is_zero());
    }

    #[test]
    fn j_kills_nontrivial_stabilizer() {
        let a = GroupRingElement::monomial(w("1,1"), 1);
        assert!(a.j_apply(6).unwrap().is_zero());
        let b = GroupRingElement::monomial(w("0,3/2"), 1);
        assert!(b.j_apply(6).unwrap().is_zero());
    }

    #[test]
    fn j_of_rho_is_free_orbit() {
        for l in 1..=3 {
            let rs = build_root_system(l).unwrap();
            let j = GroupRingElement::monomial(rs.rho.clone(), 1).j_apply(6).unwrap();
            let order = (1usize << l) * (1..=l as usize).product::<usize>();
            assert_eq!(j.len(), order);
            assert!(is_signed_unit_support(&j));
        }
    }

    #[test]
    fn j_is_antisymmetric() {
        let a = GroupRingElement::from_terms(2, [(w("2,1/2"), BigInt::from(3)), (w("-1,0"), BigInt::from(-2))]).unwrap();
        let ja = a.j_apply(6).unwrap();
        for g in enumerate_weyl(2, 6).unwrap().iter() {
            assert_eq!(a.apply_weyl(g).j_apply(6).unwrap(), ja.scale(&BigInt::from(g.sign())));
        }
    }

    #[test]
    fn iota_properties() {
        let a = GroupRingElement::from_terms(2, [(w("1,0"), BigInt::from(3)), (w("0,0"), BigInt::from(5))]).unwrap();
        assert_eq!(a.iota().iota(), a);
        assert_eq!(a.iota().coeff(&Weight::zero(2)), a.coeff(&Weight::zero(2)));
        let rho = w("3/2,1/2");
        assert_eq!(GroupRingElement::monomial(rho.clone(), 1).iota(), GroupRingElement::monomial(-&rho, 1));
        assert_eq!(GroupRingElement::one(2).coeff(&Weight::zero(2)), BigInt::from(1));
    }

    #[test]
    fn exterior_rank_one() {
        let rs = build_root_system(1).unwrap();
        let s = chq_exterior_odd(&rs, 2).unwrap();
        assert_eq!(s.coeff(0), &GroupRingElement::one(1));
        let deg1 = GroupRingElement::monomial(w("1"), 1).add(&GroupRingElement::monomial(w("-1"), 1));
        assert_eq!(s.coeff(1), &deg1);
        assert_eq!(s.coeff(2), &GroupRingElement::one(1));
    }

    #[test]
    fn geometric_series() {
        let alpha = w("2");
        let s = expand_product(1, &[ProductFactor::geometric(-&alpha, 1)], 2, None).unwrap();
        assert_eq!(s.coeff(0), &GroupRingElement::one(1));
        assert_eq!(s.coeff(1), &GroupRingElement::monomial(w("-2"), 1));
        assert_eq!(s.coeff(2), &GroupRingElement::monomial(w("-4"), 1));
    }

    #[test]
    fn non_terminating_is_refused() {
        let f = ProductFactor { sign: -1, shift: w("-1"), q_power: 0, inverted: true };
        assert!(matches!(expand_product(1, std::slice::from_ref(&f), 3, None), Err(Error::NonTerminatingExpansion(_))));
        // with a height bound the same factor expands
        let s = expand_product(1, &[f], 0, Some(3)).unwrap();
        assert_eq!(s.coeff(0).len(), 4);
        // a positive shift cannot be height truncated
        let g = ProductFactor::plus(w("1"), 1);
        assert!(matches!(expand_product(1, &[g], 3, Some(3)), Err(Error::NonTerminatingExpansion(_))));
    }

    #[test]
    fn symmetric_algebra_factorizes() {
        // ch_q S(n⁺⊕n⁻) = ch_q S(n₀⁺⊕n₀⁻) · ch_q Λ𝔤₁
        for l in 1..=2 {
            let rs = build_root_system(l).unwrap();
            let n = 4;
            let mut even = Vec::new();
            for a in &rs.even_pos {
                even.push(ProductFactor::geometric(a.clone(), 1));
                even.push(ProductFactor::geometric(-a, 1));
            }
            let mut full = even.clone();
            for b in &rs.odd_pos {
                full.push(ProductFactor::plus(b.clone(), 1));
                full.push(ProductFactor::plus(-b, 1));
            }
            let lhs = expand_product(rs.rank, &full, n, None).unwrap();
            let rhs = expand_product(rs.rank, &even, n, None).unwrap().mul(&chq_exterior_odd(&rs, n).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn chq_h_rank_one_constant_term() {
        let rs = build_root_system(1).unwrap();
        let h = build_chq_h(&rs, 2, 6).unwrap();
        assert_eq!(h.coeff(0), &GroupRingElement::one(1));
    }

    #[test]
    fn json_is_canonical() {
        let s = expand_product(1, &[ProductFactor::plus(w("1"), 1), ProductFactor::plus(w("-1"), 1)], 1, None).unwrap();
        let text = s.to_json().to_string();
        assert_eq!(
            text,
            r#"{"order":1,"coeffs":[{"q":0,"terms":[{"w":["0"],"c":1}]},{"q":1,"terms":[{"w":["1"],"c":1},{"w":["-1"],"c":1}]}]}"#
        );
    }
}
