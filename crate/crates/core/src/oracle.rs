//! The annihilator criterion, the explicit `l = 1` picture, brute-force
//! reference implementations, and the verification suite that re-checks
//! the quantitative identities by exact truncated expansion.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::charmult::{
    cone_points, h_total_multiplicity, hesselink_alt_from_kernel, hesselink_from_kernel, hesselink_kernel,
    hesselink_kernel_positive, stabilization_order, PartitionFunction, PartitionKind,
};
use crate::determinants::{
    evaluate_factored, exotic_exponent, prv_degree_bound, prv_factorization, rank_one_prv_closed_form,
    shapovalov_factorization, FactorFamily, FactoredDeterminant,
};
use crate::error::{Error, Result};
use crate::formal::{chq_exterior_odd, expand_product, GroupRingElement, ProductFactor, QSeries};
use crate::poly::IntPoly;
use crate::rootdata::{bilinear, build_root_system, RootSystem};
use crate::weight::{format_rational, rat, Rational, Weight};
use crate::weyl::{enumerate_weyl, heslem_candidates, heslem_data, poincare_polynomial, DEFAULT_ENUMERATION_CAP};

pub const MAX_SUITE_ORDER: usize = 64;
pub const MAX_SUITE_DEPTH: u64 = 32;
/// Half-integer test grid `[−GRID_BOUND, GRID_BOUND]^l`.
pub const GRID_BOUND: i64 = 4;

/// Whether `Ann M̃(λ)` is generated by its intersection with the centre:
/// true iff `(λ+ρ, β) ≠ 0` for every odd root `β`.
pub fn annihilator_centrally_generated(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    Ok(!rs.on_odd_hyperplane(lambda)?)
}

/// Lower bound for `corank PRV^λ(μ)`: the exotic exponent of `λ` when `μ`
/// lies on an odd hyperplane, else `0`.
pub fn corank_lower_bound(rs: &RootSystem, lambda: &Weight, mu: &Weight, cap: usize) -> Result<u64> {
    rs.require_dominant_integral(lambda)?;
    if rs.on_odd_hyperplane(mu)? {
        exotic_exponent(rs, lambda, &rs.odd_pos[0], cap)
    } else {
        Ok(0)
    }
}

/// Highest weights of the summands of `Hⁿ` for `l = 1`:
/// `H⁰ = Ṽ(0)`, `H¹ = Ṽ(2)`, `Hⁿ = Ṽ(2n) ⊕ Ṽ(2n−3)` for `n ≥ 2`.
pub fn l1_h_decomposition(n: u64) -> Vec<Weight> {
    let n = n as i64;
    match n {
        0 => vec![Weight::from_ints(&[0])],
        1 => vec![Weight::from_ints(&[2])],
        _ => vec![Weight::from_ints(&[2 * n]), Weight::from_ints(&[2 * n - 3])],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum L1Annihilator {
    /// `Ann_H M̃(μ) = 0`
    Zero,
    /// `Ann_H M̃(−ρ) = ⊕_{i≥0} Ṽ(2i+1)`
    OddModules,
}

impl L1Annihilator {
    pub fn describe(self) -> &'static str {
        match self {
            L1Annihilator::Zero => "zero",
            L1Annihilator::OddModules => "all odd modules V(2i+1), i >= 0",
        }
    }
}

/// `Ann_H M̃(μ)` for `osp(1,2)`.
pub fn l1_annihilator_in_h(mu: &Weight) -> Result<L1Annihilator> {
    if mu.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: mu.dim() });
    }
    Ok(if *mu.coord(0) == -rat(1, 2) { L1Annihilator::OddModules } else { L1Annihilator::Zero })
}

/// Partition count by exhaustive enumeration of exponent vectors, with no
/// memoization or recursion shared with [`PartitionFunction`].
pub fn naive_partition_count(rs: &RootSystem, nu: &Weight, kind: PartitionKind) -> Result<u64> {
    rs.check_rank(nu)?;
    let target = nu.lattice_coords()?;
    if target.iter().any(|&c| c < 0) {
        return Ok(0);
    }
    let height: i64 = target.iter().sum();
    let mut roots = Vec::new();
    for a in &rs.even_pos {
        let c = a.lattice_coords()?;
        let h: i64 = c.iter().sum();
        roots.push((c, height / h));
    }
    for b in &rs.odd_pos {
        let c = b.lattice_coords()?;
        let h: i64 = c.iter().sum();
        let bound = if kind == PartitionKind::Super { (height / h).min(1) } else { height / h };
        roots.push((c, bound));
    }
    let mut exps = vec![0i64; roots.len()];
    let mut count = 0u64;
    loop {
        let mut sum = vec![0i64; target.len()];
        for ((c, _), k) in roots.iter().zip(&exps) {
            for (s, x) in sum.iter_mut().zip(c) {
                *s += k * x;
            }
        }
        if sum == target {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == exps.len() {
                return Ok(count);
            }
            if exps[i] < roots[i].1 {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(matrix: &[Vec<i64>]) -> Rational {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational>> = matrix.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            let (top, bottom) = m.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst -= &f * src;
            }
        }
    }
    det
}

/// Dominant integral weights with `height(λ) ≤ depth`.
pub fn dominant_weights_by_height(l: usize, depth: u64) -> Vec<Weight> {
    decreasing_tuples(l, depth as i64).into_iter().map(|c| Weight::from_ints(&c)).filter(|w| w.height() <= Rational::from_integer(depth.into())).collect()
}

/// Dominant integral weights with every coordinate at most `max`.
pub fn dominant_weights_in_box(l: usize, max: i64) -> Vec<Weight> {
    decreasing_tuples(l, max).into_iter().map(|c| Weight::from_ints(&c)).collect()
}

fn decreasing_tuples(l: usize, max: i64) -> Vec<Vec<i64>> {
    if l == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for head in (0..=max).rev() {
        for mut tail in decreasing_tuples(l - 1, head) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out.sort();
    out
}

/// All weights with coordinates in `½ℤ ∩ [−bound, bound]`.
pub fn half_integer_grid(l: usize, bound: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-2 * bound..=2 * bound).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|d| Weight::from_halves(&d)).collect()
}

/// The two sides of the key Weyl-antisymmetrization identity, truncated at
/// `q`-order `order`:
/// `J(e^ρ ∏_{Δ₀⁺}(1−qe^{−α}) (1+q^{2l}e^{β₁}) ∏_{Δ₁⁺∖β₁}(1+e^β))` and
/// `J(e^ρ) ch_q Λ𝔤₁ Σ_w q^{l(w)}`.
pub fn antisymmetrization_sides(rs: &RootSystem, order: usize, cap: usize) -> Result<(QSeries, QSeries)> {
    let mut factors: Vec<_> = rs.even_pos.iter().map(|a| ProductFactor::minus(-a, 1)).collect();
    factors.push(ProductFactor::plus(rs.odd_pos[0].clone(), 2 * rs.rank));
    factors.extend(rs.odd_pos[1..].iter().map(|b| ProductFactor::plus(b.clone(), 0)));
    let e_rho = GroupRingElement::monomial(rs.rho.clone(), 1);
    let lhs = expand_product(rs.rank, &factors, order, None)?.mul_element(&e_rho).j_apply(cap)?;
    let j_rho = QSeries::from_element(e_rho.j_apply(cap)?, 0, order);
    let rhs = j_rho.mul(&chq_exterior_odd(rs, order)?).mul_poly(&poincare_polynomial(rs.rank, cap)?);
    Ok((lhs, rhs))
}

/// First `q`-degree and weight where two series differ.
pub fn series_difference(a: &QSeries, b: &QSeries) -> Option<(usize, Weight, BigInt, BigInt)> {
    for r in 0..=a.order().min(b.order()) {
        let diff = a.coeff(r).sub(b.coeff(r));
        if let Some((w, _)) = diff.sorted_terms().first() {
            return Some((r, (*w).clone(), a.coeff(r).coeff(w), b.coeff(r).coeff(w)));
        }
    }
    None
}

/// One named check; a failing check carries a concrete witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub params: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub l: usize,
    pub depth: u64,
    pub order: usize,
    #[serde(rename = "allPass")]
    pub all_pass: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// `None` on success, `Some(witness)` on failure.
pub type Outcome = Result<Option<String>>;

fn fail<T: Into<String>>(msg: T) -> Outcome {
    Ok(Some(msg.into()))
}

fn weights_json(ws: &[Weight]) -> Value {
    Value::Array(ws.iter().map(|w| json!(w)).collect())
}

pub fn check_antisymmetrization(rs: &RootSystem, order: usize, cap: usize) -> Outcome {
    let (lhs, rhs) = antisymmetrization_sides(rs, order, cap)?;
    Ok(series_difference(&lhs, &rhs).map(|(r, w, a, b)| format!("q^{r}: coefficient of e^({w}) is {a} on the left, {b} on the right")))
}

/// Enumerated `Σ q^{l(w)}` against `(1−q)^{−l} ∏(1−q^{2i})`.
pub fn check_poincare(l: usize, cap: usize) -> Outcome {
    let enumerated = poincare_polynomial(l, cap)?;
    let mut numerator = IntPoly::one();
    for i in 1..=l {
        numerator = &numerator * &(&IntPoly::one() - &IntPoly::monomial(1, 2 * i));
    }
    let denom = IntPoly::from_i64(&[1, -1]).pow(l as u32);
    match numerator.div_exact(&denom) {
        Some(p) if p == enumerated => Ok(None),
        Some(p) => fail(format!("enumerated {enumerated}, product {p}")),
        None => fail("product does not divide"),
    }
}

/// `sgn(w) = det(w) = (−1)^{l(w)}` for every element.
pub fn check_sign_det(l: usize, cap: usize) -> Outcome {
    for w in enumerate_weyl(l, cap)?.iter() {
        let det = determinant(&w.matrix());
        let by_length = if w.length() % 2 == 0 { 1 } else { -1 };
        if det != Rational::from_integer(w.sign().into()) || w.sign() != by_length {
            return fail(format!("{w}: sign {}, det {}, length {}", w.sign(), format_rational(&det), w.length()));
        }
    }
    Ok(None)
}

/// Brute force over `Γ_•` finds exactly the tabulated `γ_r`, with `sgn(w_r) = (−1)^r`.
pub fn check_regular_shift_table(l: usize) -> Outcome {
    for r in 0..2 * l {
        let found = heslem_candidates(l, r);
        if found.len() != 1 {
            return fail(format!("r={r}: {} regular candidates", found.len()));
        }
        let entry = match heslem_data(l, r) {
            Ok(e) => e,
            Err(e) => return fail(format!("r={r}: {e}")),
        };
        if found[0] != entry.gamma {
            return fail(format!("r={r}: search gives γ={}, table gives {}", found[0], entry.gamma));
        }
        let expect = if r % 2 == 0 { 1 } else { -1 };
        if entry.element.sign() != expect {
            return fail(format!("r={r}: sgn(w_r)={}", entry.element.sign()));
        }
    }
    Ok(None)
}

/// Direct and alternating-sum forms of `P_λ(q)` agree.
pub fn check_hesselink_double(rs: &RootSystem, lambdas: &[Weight], order: usize, cap: usize) -> Outcome {
    let direct = hesselink_kernel(rs, order)?;
    let alt = hesselink_kernel_positive(rs, order)?;
    for lambda in lambdas {
        let a = hesselink_from_kernel(rs, lambda, &direct, cap)?;
        let b = hesselink_alt_from_kernel(rs, lambda, &alt, cap)?;
        if a != b {
            return fail(format!("λ={lambda}: direct {a}, alternating {b}"));
        }
    }
    Ok(None)
}

/// `P_λ(1) = dim Ṽ(λ)₀` once `P_λ` is taken to its stabilization order.
pub fn check_total_multiplicity(rs: &RootSystem, lambdas: &[Weight], cap: usize) -> Outcome {
    let mut top = 0;
    for lambda in lambdas {
        top = top.max(stabilization_order(rs, lambda)?);
    }
    let kernel = hesselink_kernel(rs, top)?;
    for lambda in lambdas {
        let p = hesselink_from_kernel(rs, lambda, &kernel, cap)?.truncate(stabilization_order(rs, lambda)?);
        let dim0 = h_total_multiplicity(rs, lambda, cap)?;
        if p.sum() != BigInt::from(dim0) {
            return fail(format!("λ={lambda}: P_λ(1)={} from {p}, dim Ṽ(λ)₀={dim0}", p.sum()));
        }
    }
    Ok(None)
}

/// `l = 1`: PRV factorizations against the closed forms for `λ = kβ`.
pub fn check_rank_one_closed_forms(rs: &RootSystem, max_k: u64, cap: usize) -> Outcome {
    for k in 0..=max_k {
        let d = prv_factorization(rs, &Weight::from_ints(&[k as i64]), cap)?;
        let expect = rank_one_prv_closed_form(k);
        if !d.same_factors(&expect) {
            return fail(format!("λ={k}β: computed {d}, closed form {expect}"));
        }
    }
    Ok(None)
}

/// `l = 1`: graded multiplicities `[Hⁿ:Ṽ(k)]` against the decomposition
/// `Hⁿ = Ṽ(2n) ⊕ Ṽ(2n−3)` for `n ≤ max_n`.
pub fn check_rank_one_h_decomposition(rs: &RootSystem, min_n: usize, max_n: usize, cap: usize) -> Outcome {
    let kernel = hesselink_kernel(rs, max_n)?;
    let series: Vec<IntPoly> = (0..=2 * max_n as i64 + 2)
        .map(|k| hesselink_from_kernel(rs, &Weight::from_ints(&[k]), &kernel, cap))
        .collect::<Result<_>>()?;
    for n in min_n..=max_n {
        let expect = l1_h_decomposition(n as u64);
        for (k, p) in series.iter().enumerate() {
            let want = u64::from(expect.contains(&Weight::from_ints(&[k as i64])));
            if p.coeff(n) != BigInt::from(want) {
                return fail(format!("[H^{n}:V({k})] = {}, expected {want}", p.coeff(n)));
            }
        }
    }
    Ok(None)
}

/// Sum of PRV exponents equals the degree bound.
pub fn check_degree_saturation(rs: &RootSystem, lambdas: &[Weight], cap: usize) -> Outcome {
    for lambda in lambdas {
        let d = prv_factorization(rs, lambda, cap)?;
        let bound = prv_degree_bound(rs, lambda, cap)?;
        if d.total_degree() != bound {
            return fail(format!("λ={lambda}: degree {} vs bound {bound}", d.total_degree()));
        }
    }
    Ok(None)
}

/// Standard PRV factors have the Shapovalov shapes `φ(α)+(ρ,α)−m(α,α)/2`
/// (`α ∈ Δ̄₀⁺`) and `φ(β)+(ρ,β)−(2m−1)(β,β)/2` (`β ∈ Δ₁⁺`), `m ≥ 1`.
pub fn check_standard_factor_shapes(rs: &RootSystem, lambdas: &[Weight], cap: usize) -> Outcome {
    for lambda in lambdas {
        let d = prv_factorization(rs, lambda, cap)?;
        for e in d.factors() {
            let alpha = &e.factor.alpha;
            let half_norm = bilinear(alpha, alpha)? / Rational::from_integer(2.into());
            let steps = (bilinear(&rs.rho, alpha)? - &e.factor.c) / half_norm;
            let ok = match e.family {
                FactorFamily::EvenStandard => rs.even_bar_pos.contains(alpha) && steps.is_integer() && steps.is_positive(),
                FactorFamily::OddStandard => {
                    rs.odd_pos.contains(alpha)
                        && steps.is_integer()
                        && steps.is_positive()
                        && num_integer::Integer::is_odd(&steps.to_integer())
                }
                FactorFamily::Exotic => rs.odd_pos.contains(alpha) && steps.is_zero(),
            };
            if !ok {
                return fail(format!("λ={lambda}: factor {} in family {}", e.factor, e.family.as_str()));
            }
        }
    }
    Ok(None)
}

/// The main-theorem zero locus on the half-integer grid:
/// on an odd hyperplane `det PRV^{ω₁}` vanishes and every tested `λ` vanishes
/// to at least its exotic exponent; off the hyperplanes, at simple-Verma `μ`,
/// no tested PRV determinant vanishes; and the annihilator criterion agrees.
pub fn check_zero_locus(rs: &RootSystem, lambdas: &[Weight], grid_bound: i64, cap: usize) -> Outcome {
    let omega = prv_factorization(rs, &rs.fundamental[0], cap)?;
    let mut dets: Vec<(FactoredDeterminant, u64)> = Vec::new();
    for lambda in lambdas {
        dets.push((prv_factorization(rs, lambda, cap)?, exotic_exponent(rs, lambda, &rs.odd_pos[0], cap)?));
    }
    for mu in half_integer_grid(rs.rank, grid_bound) {
        let shifted = &mu + &rs.rho;
        let mut on_plane = false;
        for beta in &rs.odd_pos {
            on_plane |= bilinear(&shifted, beta)?.is_zero();
        }
        if annihilator_centrally_generated(rs, &mu)? == on_plane {
            return fail(format!("μ={mu}: criterion disagrees with the hyperplane test"));
        }
        if on_plane {
            if evaluate_factored(&omega, &mu)?.vanishing_order == 0 {
                return fail(format!("μ={mu}: det PRV^ω₁ does not vanish on the hyperplane"));
            }
            for (d, e) in &dets {
                let order = evaluate_factored(d, &mu)?.vanishing_order;
                if order < *e {
                    return fail(format!("μ={mu}, λ={}: vanishing order {order} below exotic exponent {e}", d.label));
                }
            }
        } else if rs.verma_is_simple(&mu)? {
            for (d, _) in dets.iter().chain([(omega.clone(), 0)].iter()) {
                if evaluate_factored(d, &mu)?.vanishing_order > 0 {
                    return fail(format!("μ={mu}: det PRV^{} vanishes off the hyperplanes", d.label));
                }
            }
        }
    }
    Ok(None)
}

/// The dot orbit of `μ` meets an odd hyperplane iff `μ` lies on one.
pub fn check_dot_orbit_hyperplanes(rs: &RootSystem, grid_bound: i64, cap: usize) -> Outcome {
    let group = enumerate_weyl(rs.rank, cap)?;
    for mu in half_integer_grid(rs.rank, grid_bound) {
        let here = rs.on_odd_hyperplane(&mu)?;
        for w in group.iter() {
            let moved = &w.act(&(&mu + &rs.rho))? - &rs.rho;
            if rs.on_odd_hyperplane(&moved)? != here {
                return fail(format!("μ={mu}, w={w}"));
            }
        }
    }
    Ok(None)
}

/// `M̃(μ)` simple iff no Shapovalov determinant vanishes at `μ`: every
/// non-simple `μ` is caught by the witness `ν = ⟨μ+ρ,α⟩α`, and at simple `μ`
/// no `det S_ν` with `height(ν) ≤ window` vanishes.
pub fn check_shapovalov_simplicity(rs: &RootSystem, grid_bound: i64, window: u64) -> Outcome {
    let mut cache: HashMap<Weight, FactoredDeterminant> = HashMap::new();
    let mut det_for = |nu: &Weight| -> Result<FactoredDeterminant> {
        if let Some(d) = cache.get(nu) {
            return Ok(d.clone());
        }
        let d = shapovalov_factorization(rs, nu)?;
        cache.insert(nu.clone(), d.clone());
        Ok(d)
    };
    let window_points = cone_points(rs.rank, window);
    for mu in half_integer_grid(rs.rank, grid_bound) {
        let witnesses = rs.delta_lambda(&mu)?;
        if witnesses.is_empty() {
            for nu in &window_points {
                if evaluate_factored(&det_for(nu)?, &mu)?.vanishing_order > 0 {
                    return fail(format!("μ={mu} is simple but det S_{nu} vanishes"));
                }
            }
        } else {
            for (alpha, k) in witnesses {
                let nu = alpha.scale_int(k as i64);
                if evaluate_factored(&det_for(&nu)?, &mu)?.vanishing_order == 0 {
                    return fail(format!("μ={mu}: det S_{nu} does not vanish"));
                }
            }
        }
    }
    Ok(None)
}

/// Memoized `τ`, `τ̄` against exhaustive enumeration for `height(ν) ≤ max_height`.
pub fn check_partition_oracles(rs: &RootSystem, max_height: u64) -> Outcome {
    for kind in [PartitionKind::Kostant, PartitionKind::Super] {
        let mut dp = PartitionFunction::new(rs, kind);
        for nu in cone_points(rs.rank, max_height) {
            let a = dp.eval(&nu)?;
            let b = naive_partition_count(rs, &nu, kind)?;
            if a != b {
                return fail(format!("{kind:?} at ν={nu}: memoized {a}, exhaustive {b}"));
            }
        }
    }
    Ok(None)
}

/// Facts about `Ṽ(ω₁)`: one copy in `H^{2l}`, `dim Ṽ(ω₁)₀ = 1`, exotic
/// exponent `1` at every odd root, degree `2l`.
pub fn check_omega_one(rs: &RootSystem, cap: usize) -> Outcome {
    let l = rs.rank;
    let omega = &rs.fundamental[0];
    let p = hesselink_from_kernel(rs, omega, &hesselink_kernel(rs, 2 * l + 1)?, cap)?;
    if p != IntPoly::monomial(1, 2 * l) {
        return fail(format!("P_ω₁ = {p}"));
    }
    let dim0 = h_total_multiplicity(rs, omega, cap)?;
    if dim0 != 1 {
        return fail(format!("dim Ṽ(ω₁)₀ = {dim0}"));
    }
    for beta in &rs.odd_pos {
        let e = exotic_exponent(rs, omega, beta, cap)?;
        if e != 1 {
            return fail(format!("exotic exponent at {beta} is {e}"));
        }
    }
    let bound = prv_degree_bound(rs, omega, cap)?;
    if bound != 2 * l as u64 {
        return fail(format!("degree bound {bound}"));
    }
    Ok(None)
}

pub fn check_rho(rs: &RootSystem) -> Outcome {
    let from_roots = rs.rho_from_roots();
    if from_roots != rs.rho || &rs.rho0 - &rs.rho1 != rs.rho {
        return fail(format!("ρ={}, half-sum of roots {from_roots}", rs.rho));
    }
    Ok(None)
}

pub fn verify_suite(l: usize, depth: u64, order: usize) -> Result<VerificationReport> {
    verify_suite_with(&build_root_system(l as i64)?, depth, order, DEFAULT_ENUMERATION_CAP)
}

/// The suite against explicit root data, so that corrupted data can be
/// fed in to confirm that the checks detect it. Dominant weights tested are
/// those with `height(λ) ≤ depth`; series are truncated at `q^order`.
pub fn verify_suite_with(rs: &RootSystem, depth: u64, order: usize, cap: usize) -> Result<VerificationReport> {
    let l = rs.rank;
    if order > MAX_SUITE_ORDER {
        return Err(Error::ResourceLimit { what: "order", value: order as u64, max: MAX_SUITE_ORDER as u64 });
    }
    if depth > MAX_SUITE_DEPTH {
        return Err(Error::ResourceLimit { what: "depth", value: depth, max: MAX_SUITE_DEPTH });
    }
    enumerate_weyl(l, cap)?;
    let lambdas = dominant_weights_by_height(l, depth);
    let lambda_json = weights_json(&lambdas);

    type Runner<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let mut plan: Vec<(&str, Value, Runner)> = vec![
        ("antisymmetrization-identity", json!({"l": l, "order": order}), Box::new(|| check_antisymmetrization(rs, order, cap))),
        ("poincare-product", json!({"l": l}), Box::new(|| check_poincare(l, cap))),
        ("sign-det-length", json!({"l": l}), Box::new(|| check_sign_det(l, cap))),
        ("regular-shift-table", json!({"l": l}), Box::new(|| check_regular_shift_table(l))),
        ("rho-half-sum", json!({"l": l}), Box::new(|| check_rho(rs))),
        (
            "hesselink-double",
            json!({"l": l, "order": order, "lambdas": lambda_json}),
            Box::new(|| check_hesselink_double(rs, &lambdas, order, cap)),
        ),
        (
            "total-multiplicity",
            json!({"l": l, "lambdas": lambda_json}),
            Box::new(|| check_total_multiplicity(rs, &lambdas, cap)),
        ),
        (
            "degree-saturation",
            json!({"l": l, "lambdas": lambda_json}),
            Box::new(|| check_degree_saturation(rs, &lambdas, cap)),
        ),
        (
            "standard-factor-shapes",
            json!({"l": l, "lambdas": lambda_json}),
            Box::new(|| check_standard_factor_shapes(rs, &lambdas, cap)),
        ),
        (
            "zero-locus",
            json!({"l": l, "grid": GRID_BOUND, "lambdas": lambda_json}),
            Box::new(|| check_zero_locus(rs, &lambdas, GRID_BOUND, cap)),
        ),
        ("dot-orbit-hyperplanes", json!({"l": l, "grid": GRID_BOUND}), Box::new(|| check_dot_orbit_hyperplanes(rs, GRID_BOUND, cap))),
        (
            "shapovalov-simplicity",
            json!({"l": l, "grid": GRID_BOUND, "window": depth.min(6)}),
            Box::new(|| check_shapovalov_simplicity(rs, GRID_BOUND, depth.min(6))),
        ),
        ("partition-oracles", json!({"l": l, "height": depth}), Box::new(|| check_partition_oracles(rs, depth))),
        ("omega-one", json!({"l": l}), Box::new(|| check_omega_one(rs, cap))),
    ];
    if l == 1 {
        let max_k = 2 * depth + 1;
        plan.push(("rank-one-prv-closed-forms", json!({"kmax": max_k}), Box::new(move || check_rank_one_closed_forms(rs, max_k, cap))));
        plan.push(("rank-one-h-decomposition", json!({"order": order}), Box::new(|| check_rank_one_h_decomposition(rs, 0, order, cap))));
    }

    let mut checks = Vec::with_capacity(plan.len());
    for (name, params, run) in plan {
        let witness = match run() {
            Ok(w) => w,
            Err(e @ (Error::EnumerationCap { .. } | Error::ResourceLimit { .. } | Error::Overflow(_))) => return Err(e),
            Err(e) => Some(format!("error: {e}")),
        };
        checks.push(Check { name: name.to_string(), params, pass: witness.is_none(), witness });
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(VerificationReport { l, depth, order, all_pass, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn criterion_examples() {
        let r1 = build_root_system(1).unwrap();
        let r2 = build_root_system(2).unwrap();
        assert!(annihilator_centrally_generated(&r2, &w("0,0")).unwrap());
        assert!(!annihilator_centrally_generated(&r2, &-&r2.rho).unwrap());
        assert!(!annihilator_centrally_generated(&r2, &w("0,-1/2")).unwrap());
        assert_eq!(corank_lower_bound(&r1, &w("3"), &w("-1/2"), 6).unwrap(), 1);
        assert_eq!(corank_lower_bound(&r2, &r2.fundamental[0], &w("1,-1/2"), 6).unwrap(), 1);
        assert_eq!(corank_lower_bound(&r2, &r2.fundamental[0], &w("0,0"), 6).unwrap(), 0);
    }

    #[test]
    fn rank_one_world() {
        assert_eq!(l1_h_decomposition(0), vec![w("0")]);
        assert_eq!(l1_h_decomposition(1), vec![w("2")]);
        assert_eq!(l1_h_decomposition(4), vec![w("8"), w("5")]);
        assert_eq!(l1_annihilator_in_h(&w("-1/2")).unwrap(), L1Annihilator::OddModules);
        assert_eq!(l1_annihilator_in_h(&w("0")).unwrap(), L1Annihilator::Zero);
        assert_eq!(l1_annihilator_in_h(&w("5")).unwrap(), L1Annihilator::Zero);
        assert!(l1_annihilator_in_h(&w("0,0")).is_err());
    }

    #[test]
    fn weight_ranges() {
        assert_eq!(dominant_weights_in_box(2, 1), vec![w("0,0"), w("1,0"), w("1,1")]);
        assert_eq!(dominant_weights_by_height(2, 3), vec![w("0,0"), w("1,0"), w("1,1")]);
        assert_eq!(half_integer_grid(2, 1).len(), 25);
    }

    #[test]
    fn determinant_by_elimination() {
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), Rational::from_integer((-1).into()));
        assert_eq!(determinant(&[vec![2, 1], vec![4, 2]]), Rational::zero());
    }

    #[test]
    fn naive_counts() {
        let r2 = build_root_system(2).unwrap();
        assert_eq!(naive_partition_count(&r2, &w("0,0"), PartitionKind::Kostant).unwrap(), 1);
        assert_eq!(
            naive_partition_count(&r2, &w("1,1"), PartitionKind::Super).unwrap(),
            crate::charmult::super_partition(&r2, &w("1,1")).unwrap()
        );
    }

    #[test]
    fn suite_rank_one() {
        let report = verify_suite(1, 8, 10).unwrap();
        let failed: Vec<_> = report.failures().collect();
        assert!(report.all_pass, "{failed:?}");
        let names: Vec<_> = report.checks.iter().map(|c| c.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn corrupted_rho_is_caught() {
        let mut rs = build_root_system(2).unwrap();
        rs.rho = &rs.rho + &w("1,0");
        let report = verify_suite_with(&rs, 2, 6, 6).unwrap();
        assert!(!report.all_pass);
        let identity = report.checks.iter().find(|c| c.name == "antisymmetrization-identity").unwrap();
        assert!(!identity.pass);
        assert!(identity.witness.as_ref().unwrap().starts_with("q^"));
    }

    #[test]
    fn limits_are_resource_errors() {
        assert!(matches!(verify_suite(1, 2, 1000), Err(Error::ResourceLimit { .. })));
        assert_eq!(verify_suite(1, 2, 1000).unwrap_err().exit_code(), 4);
    }
}
