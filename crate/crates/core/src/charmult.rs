//! Partition functions, Kac character multiplicities and the graded
//! multiplicities `P_λ(q) = Σ_n [Hⁿ : Ṽ(λ)] qⁿ` of the harmonic space.
//!
//! Weight multiplicities come from the finite alternating sum
//! `dim Ṽ(λ)_μ = Σ_w sgn(w) τ̄(w(λ+ρ) − (μ+ρ))`, where `τ̄` counts ways to
//! write a weight with unrestricted even positive roots and each odd
//! positive root used at most once.

use std::collections::{BTreeMap, HashMap};

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formal::{expand_product, GroupRingElement, ProductFactor, QSeries};
use crate::poly::IntPoly;
use crate::rootdata::RootSystem;
use crate::weight::Weight;
use crate::weyl::{enumerate_weyl, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    /// `τ`: every positive root with unrestricted multiplicity.
    Kostant,
    /// `τ̄`: even positive roots unrestricted, odd positive roots at most once.
    Super,
}

/// Memoized counter over a fixed list of roots given in simple-root
/// coordinates. Results are the same with or without the memo.
#[derive(Debug, Clone)]
pub struct PartitionFunction {
    rank: usize,
    roots: Vec<Vec<i64>>,
    at_most_once: Vec<bool>,
    memo: HashMap<(usize, Vec<i64>), u64>,
}

impl PartitionFunction {
    pub fn new(rs: &RootSystem, kind: PartitionKind) -> Self {
        let mut roots = Vec::new();
        let mut at_most_once = Vec::new();
        for a in &rs.even_pos {
            roots.push(a.lattice_coords().expect("roots are integral"));
            at_most_once.push(false);
        }
        for b in &rs.odd_pos {
            roots.push(b.lattice_coords().expect("roots are integral"));
            at_most_once.push(kind == PartitionKind::Super);
        }
        PartitionFunction { rank: rs.rank, roots, at_most_once, memo: HashMap::new() }
    }

    /// The count for `ν`; zero outside `ℕπ`, an error off `ℤπ`.
    pub fn eval(&mut self, nu: &Weight) -> Result<u64> {
        if nu.dim() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: nu.dim() });
        }
        let target = nu.lattice_coords()?;
        self.eval_coords(&target)
    }

    pub fn eval_coords(&mut self, target: &[i64]) -> Result<u64> {
        if target.iter().any(|&c| c < 0) {
            return Ok(0);
        }
        self.count(0, target.to_vec())
    }

    fn count(&mut self, i: usize, target: Vec<i64>) -> Result<u64> {
        if i == self.roots.len() {
            return Ok(u64::from(target.iter().all(|&c| c == 0)));
        }
        if let Some(&hit) = self.memo.get(&(i, target.clone())) {
            return Ok(hit);
        }
        let root = self.roots[i].clone();
        let max_k = if self.at_most_once[i] { 1 } else { u64::MAX };
        let mut total: u64 = 0;
        let mut rest = target.clone();
        let mut k = 0;
        while k <= max_k && rest.iter().all(|&c| c >= 0) {
            total = total.checked_add(self.count(i + 1, rest.clone())?).ok_or(Error::Overflow("partition count"))?;
            for (r, d) in rest.iter_mut().zip(&root) {
                *r -= d;
            }
            k += 1;
        }
        self.memo.insert((i, target), total);
        Ok(total)
    }
}

/// Kostant partition function `τ(ν)`.
pub fn kostant_tau(rs: &RootSystem, nu: &Weight) -> Result<u64> {
    PartitionFunction::new(rs, PartitionKind::Kostant).eval(nu)
}

/// `τ̄(ν)`: coefficient of `e^{−ν}` in `∏_{Δ₀⁺}(1−e^{−α})^{−1}∏_{Δ₁⁺}(1+e^{−β})`.
pub fn super_partition(rs: &RootSystem, nu: &Weight) -> Result<u64> {
    PartitionFunction::new(rs, PartitionKind::Super).eval(nu)
}

/// Weight multiplicities of one finite-dimensional `Ṽ(λ)`.
#[derive(Debug, Clone)]
pub struct KacCharacter {
    rs: RootSystem,
    lambda: Weight,
    shifted_orbit: Vec<(Weight, i64)>,
    tau_bar: PartitionFunction,
}

impl KacCharacter {
    pub fn new(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<Self> {
        rs.require_dominant_integral(lambda)?;
        let shifted = lambda + &rs.rho;
        let shifted_orbit = enumerate_weyl(rs.rank, cap)?.iter().map(|w| (w.act_unchecked(&shifted), w.sign())).collect();
        Ok(KacCharacter {
            rs: rs.clone(),
            lambda: lambda.clone(),
            shifted_orbit,
            tau_bar: PartitionFunction::new(rs, PartitionKind::Super),
        })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// `dim Ṽ(λ)_μ`
    pub fn multiplicity(&mut self, mu: &Weight) -> Result<u64> {
        self.rs.check_rank(mu)?;
        if !(&self.lambda - mu).is_integral() {
            return Ok(0);
        }
        let target = mu + &self.rs.rho;
        let mut total: i64 = 0;
        for (wx, sgn) in &self.shifted_orbit {
            let c = self.tau_bar.eval(&(wx - &target))?;
            let c = i64::try_from(c).map_err(|_| Error::Overflow("weight multiplicity"))?;
            total += sgn * c;
        }
        u64::try_from(total).map_err(|_| Error::Internal(format!("negative multiplicity {total} at {mu}")))
    }

    /// Largest `m ≥ 0` for which `mα` may be a weight: `mα` stays in the
    /// convex hull of `Wλ`, i.e. its dominant conjugate lies below `λ`
    /// in the real cone spanned by `π`.
    pub fn ray_extent(&self, alpha: &Weight) -> u64 {
        let mut m = 0;
        loop {
            let next = alpha.scale_int(m as i64 + 1);
            if !in_weight_polytope(&self.lambda, &next) {
                return m;
            }
            m += 1;
        }
    }
}

/// Whether `μ` lies in the convex hull of `Wλ`.
pub fn in_weight_polytope(lambda: &Weight, mu: &Weight) -> bool {
    let dominant = dominant_conjugate(mu);
    let diff = lambda - &dominant;
    diff.simple_coords().iter().all(|c| *c >= num_rational::BigRational::zero())
}

/// The `W`-conjugate with coordinates `|μ|` sorted decreasingly.
pub fn dominant_conjugate(mu: &Weight) -> Weight {
    use num_traits::Signed;
    let mut abs: Vec<_> = mu.coords().iter().map(|c| c.abs()).collect();
    abs.sort_by(|a, b| b.cmp(a));
    Weight::new(abs)
}

pub fn weight_multiplicity(rs: &RootSystem, lambda: &Weight, mu: &Weight, cap: usize) -> Result<u64> {
    KacCharacter::new(rs, lambda, cap)?.multiplicity(mu)
}

/// All nonzero multiplicities of `Ṽ(λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityTable {
    pub lambda: Weight,
    #[serde(serialize_with = "serialize_entries")]
    pub entries: BTreeMap<Weight, u64>,
}

fn serialize_entries<S: serde::Serializer>(entries: &BTreeMap<Weight, u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        w: &'a Weight,
        m: u64,
    }
    s.collect_seq(entries.iter().map(|(w, &m)| Entry { w, m }))
}

impl MultiplicityTable {
    pub fn get(&self, mu: &Weight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// Every `ν ∈ ℕπ` of height at most `max_height`, in β-coordinates.
pub fn cone_points(rank: usize, max_height: u64) -> Vec<Weight> {
    fn rec(rank: usize, left: u64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == rank {
            let mut coords = Vec::with_capacity(rank);
            let mut prev = 0;
            for &c in cur.iter() {
                coords.push(c - prev);
                prev = c;
            }
            out.push(Weight::from_ints(&coords));
            return;
        }
        for c in 0..=left {
            cur.push(c as i64);
            rec(rank, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, max_height, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn height_u64(w: &Weight) -> Result<u64> {
    let h = w.height();
    if !h.is_integer() {
        return Err(Error::NotInRootLattice(w.clone()));
    }
    h.to_integer().to_u64().ok_or(Error::Overflow("height"))
}

pub fn full_table(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<MultiplicityTable> {
    let mut ch = KacCharacter::new(rs, lambda, cap)?;
    let bound = height_u64(&lambda.scale_int(2))?;
    let mut entries = BTreeMap::new();
    for nu in cone_points(rs.rank, bound) {
        let mu = lambda - &nu;
        let m = ch.multiplicity(&mu)?;
        if m > 0 {
            entries.insert(mu, m);
        }
    }
    Ok(MultiplicityTable { lambda: lambda.clone(), entries })
}

/// `dim Ṽ(λ)₀`, which equals `P_λ(1)`.
pub fn h_total_multiplicity(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<u64> {
    weight_multiplicity(rs, lambda, &Weight::zero(rs.rank), cap)
}

/// `e^{−ρ}J(e^{λ+ρ})`
pub fn weyl_numerator(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<GroupRingElement> {
    let shifted = rs.shifted(lambda)?;
    Ok(GroupRingElement::monomial(shifted, 1).j_apply(cap)?.shift(&-&rs.rho))
}

/// `∏_{Δ₀⁺}(1−q e^{−α})^{−1} · (1+q^{2l}e^{−β₁}) · ∏_{Δ₁⁺∖{β₁}}(1+e^{−β})`
pub fn hesselink_kernel(rs: &RootSystem, order: usize) -> Result<QSeries> {
    expand_product(rs.rank, &hesselink_factors(rs, -1), order, None)
}

/// The same product with all exponents negated (the generating function
/// of the coefficients `P_r(ν)`).
pub fn hesselink_kernel_positive(rs: &RootSystem, order: usize) -> Result<QSeries> {
    expand_product(rs.rank, &hesselink_factors(rs, 1), order, None)
}

fn hesselink_factors(rs: &RootSystem, dir: i64) -> Vec<ProductFactor> {
    let mut factors: Vec<_> = rs.even_pos.iter().map(|a| ProductFactor::geometric(a.scale_int(dir), 1)).collect();
    factors.push(ProductFactor::plus(rs.odd_pos[0].scale_int(dir), 2 * rs.rank));
    factors.extend(rs.odd_pos[1..].iter().map(|b| ProductFactor::plus(b.scale_int(dir), 0)));
    factors
}

/// `P_λ(q)` to order `N` as the constant term `π₀(Q_λ(q))` with
/// `Q_λ(q) = e^{−ρ}J(e^{λ+ρ}) · hesselink_kernel`.
pub fn hesselink_series(rs: &RootSystem, lambda: &Weight, order: usize, cap: usize) -> Result<IntPoly> {
    rs.require_dominant_integral(lambda)?;
    let kernel = hesselink_kernel(rs, order)?;
    hesselink_from_kernel(rs, lambda, &kernel, cap)
}

pub fn hesselink_from_kernel(rs: &RootSystem, lambda: &Weight, kernel: &QSeries, cap: usize) -> Result<IntPoly> {
    rs.require_dominant_integral(lambda)?;
    let q = kernel.mul_element(&weyl_numerator(rs, lambda, cap)?);
    Ok(q.project_coeff(&Weight::zero(rs.rank)))
}

/// `[Hⁿ:Ṽ(λ)] = Σ_w (−1)^{l(w)} P_n(w.λ)` to order `N`.
pub fn hesselink_series_alt(rs: &RootSystem, lambda: &Weight, order: usize, cap: usize) -> Result<IntPoly> {
    rs.require_dominant_integral(lambda)?;
    let kernel = hesselink_kernel_positive(rs, order)?;
    hesselink_alt_from_kernel(rs, lambda, &kernel, cap)
}

pub fn hesselink_alt_from_kernel(rs: &RootSystem, lambda: &Weight, kernel: &QSeries, cap: usize) -> Result<IntPoly> {
    rs.require_dominant_integral(lambda)?;
    let group = enumerate_weyl(rs.rank, cap)?;
    let mut total = IntPoly::zero();
    for w in group.iter() {
        let nu = shifted_dot(rs, w, lambda);
        if !nu.in_positive_cone() {
            continue;
        }
        let p = kernel.project_coeff(&nu);
        total = if w.sign() > 0 { &total + &p } else { &total - &p };
    }
    Ok(total)
}

/// Dot action using the root system's `ρ`.
fn shifted_dot(rs: &RootSystem, w: &WeylElement, lambda: &Weight) -> Weight {
    &w.act_unchecked(&(lambda + &rs.rho)) - &rs.rho
}

/// `height(2λ) + 2l`, the order at which `P_λ(q)` is taken as stabilized.
///
/// This is an empirical bound; the test suite checks it against `dim Ṽ(λ)₀`.
pub fn stabilization_order(rs: &RootSystem, lambda: &Weight) -> Result<usize> {
    Ok(height_u64(&lambda.scale_int(2))? as usize + 2 * rs.rank)
}

/// `ch Ṽ(λ)` from the Kac formula, expanded with height truncation. Exact
/// on every weight `μ` with `height(λ−μ) ≤ depth`; other terms are dropped.
pub fn kac_character_expansion(rs: &RootSystem, lambda: &Weight, depth: u64, cap: usize) -> Result<GroupRingElement> {
    rs.require_dominant_integral(lambda)?;
    let mut factors: Vec<_> = rs.even_pos.iter().map(|a| ProductFactor { sign: -1, shift: -a, q_power: 0, inverted: true }).collect();
    factors.extend(rs.odd_pos.iter().map(|b| ProductFactor::plus(-b, 0)));
    let denom = expand_product(rs.rank, &factors, 0, Some(depth))?;
    let full = denom.coeff(0).mul(&weyl_numerator(rs, lambda, cap)?);
    let mut out = GroupRingElement::zero(rs.rank);
    for (mu, c) in full.iter() {
        let below = lambda - mu;
        if below.in_positive_cone() && height_u64(&below)? <= depth {
            out = out.add(&GroupRingElement::from_terms(rs.rank, [(mu.clone(), c.clone())])?);
        }
    }
    Ok(out)
}

/// Coefficients of `IntPoly` as a vector of `i64` (for compact reports).
pub fn poly_to_i64(p: &IntPoly) -> Vec<i64> {
    p.coeffs().iter().map(|c| c.to_i64().unwrap_or(i64::MAX)).collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn tau_examples() {
        let r1 = build_root_system(1).unwrap();
        assert_eq!(kostant_tau(&r1, &w("0")).unwrap(), 1);
        assert_eq!(kostant_tau(&r1, &w("2")).unwrap(), 2);
        assert_eq!(kostant_tau(&r1, &w("-1")).unwrap(), 0);
        assert!(matches!(kostant_tau(&r1, &w("1/2")), Err(Error::NotInRootLattice(_))));
    }

    #[test]
    fn tau_bar_examples() {
        let r1 = build_root_system(1).unwrap();
        assert_eq!(super_partition(&r1, &w("0")).unwrap(), 1);
        assert_eq!(super_partition(&r1, &w("2")).unwrap(), 1);
        assert_eq!(super_partition(&r1, &w("3")).unwrap(), 1);
        assert_eq!(super_partition(&r1, &w("-2")).unwrap(), 0);
    }

    #[test]
    fn rank_one_multiplicities() {
        let r1 = build_root_system(1).unwrap();
        for n in 0..8 {
            let mut ch = KacCharacter::new(&r1, &Weight::from_ints(&[n]), 6).unwrap();
            for m in -(n + 3)..=(n + 3) {
                let expect = u64::from(m.abs() <= n);
                assert_eq!(ch.multiplicity(&Weight::from_ints(&[m])).unwrap(), expect, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn adjoint_of_rank_one() {
        let r1 = build_root_system(1).unwrap();
        let t = full_table(&r1, &w("2"), 6).unwrap();
        assert_eq!(t.entries.len(), 5);
        assert_eq!(t.dimension(), 5);
    }

    #[test]
    fn natural_module() {
        for l in 1..=3 {
            let rs = build_root_system(l).unwrap();
            let omega1 = rs.fundamental[0].clone();
            let t = full_table(&rs, &omega1, 6).unwrap();
            let mut expect = BTreeMap::new();
            expect.insert(Weight::zero(rs.rank), 1);
            for b in &rs.odd_pos {
                expect.insert(b.clone(), 1);
                expect.insert(-b, 1);
            }
            assert_eq!(t.entries, expect, "l={l}");
            assert_eq!(h_total_multiplicity(&rs, &omega1, 6).unwrap(), 1);
        }
    }

    #[test]
    fn not_dominant_is_domain_error() {
        let r2 = build_root_system(2).unwrap();
        assert!(matches!(weight_multiplicity(&r2, &w("0,1"), &w("0,0"), 6), Err(Error::NotDominantIntegral(_))));
        assert!(matches!(hesselink_series(&r2, &w("1/2,1/2"), 3, 6), Err(Error::NotDominantIntegral(_))));
    }

    #[test]
    fn rank_one_hesselink() {
        let r1 = build_root_system(1).unwrap();
        assert_eq!(hesselink_series(&r1, &w("0"), 6, 6).unwrap(), IntPoly::one());
        assert_eq!(hesselink_series(&r1, &w("1"), 6, 6).unwrap(), IntPoly::monomial(1, 2));
        assert_eq!(hesselink_series(&r1, &w("2"), 6, 6).unwrap(), IntPoly::monomial(1, 1));
        assert_eq!(hesselink_series_alt(&r1, &w("4"), 3, 6).unwrap(), IntPoly::monomial(1, 2));
    }

    #[test]
    fn polytope_membership() {
        let lam = w("2,1");
        assert!(in_weight_polytope(&lam, &w("-1,2")));
        assert!(in_weight_polytope(&lam, &w("0,0")));
        assert!(!in_weight_polytope(&lam, &w("3,0")));
        assert!(!in_weight_polytope(&lam, &w("2,2")));
    }

    #[test]
    fn cone_points_count() {
        // C(H+l, l) cone points of height ≤ H
        assert_eq!(cone_points(2, 4).len(), 15);
        assert_eq!(cone_points(1, 3).len(), 4);
        assert!(cone_points(3, 3).iter().all(|p| p.in_positive_cone()));
    }
}
