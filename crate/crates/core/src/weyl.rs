//! The Weyl group of `osp(1,2l)`: signed permutations of `β₁,…,β_l`.
//!
//! Elements are stored in one-line notation: `images[i] = ±(j+1)` means
//! `β_{i+1} ↦ ±β_{j+1}`, printed as e.g. `[+2,-1]`. Products compose right
//! to left: `(u·v)(λ) = u(v(λ))`. The simple reflections are `s_i` for
//! `β_i−β_{i+1}` (`i<l`) and `s_l` for `β_l`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::weight::{rat, Weight};

pub const DEFAULT_ENUMERATION_CAP: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
    length: usize,
}

impl WeylElement {
    pub fn identity(l: usize) -> Self {
        WeylElement { perm: (0..l).collect(), signs: vec![1; l], length: 0 }
    }

    /// Build from one-line images; `[2, -1]` sends `β₁ ↦ β₂`, `β₂ ↦ −β₁`.
    pub fn from_images(images: &[i64]) -> Result<Self> {
        let l = images.len();
        let mut seen = vec![false; l];
        let mut perm = Vec::with_capacity(l);
        let mut signs = Vec::with_capacity(l);
        for &im in images {
            let j = im.unsigned_abs() as usize;
            if j == 0 || j > l || seen[j - 1] {
                return Err(Error::Parse(format!("{images:?} is not a signed permutation")));
            }
            seen[j - 1] = true;
            perm.push(j - 1);
            signs.push(if im < 0 { -1 } else { 1 });
        }
        Ok(Self::from_parts(perm, signs))
    }

    fn from_parts(perm: Vec<usize>, signs: Vec<i8>) -> Self {
        let mut w = WeylElement { perm, signs, length: 0 };
        w.length = w.descent_length();
        w
    }

    /// The simple reflection `s_i`, `1 ≤ i ≤ l`.
    pub fn simple_reflection(l: usize, i: usize) -> Result<Self> {
        if i == 0 || i > l {
            return Err(Error::OutOfRange { value: i as i64, min: 1, max: l as i64 });
        }
        let mut perm: Vec<usize> = (0..l).collect();
        let mut signs = vec![1; l];
        if i < l {
            perm.swap(i - 1, i);
        } else {
            signs[l - 1] = -1;
        }
        Ok(WeylElement { perm, signs, length: 1 })
    }

    /// `s_{a₁}·s_{a₂}·…` for a word of simple-reflection indices.
    pub fn from_word(l: usize, word: &[usize]) -> Result<Self> {
        let mut w = WeylElement::identity(l);
        for &i in word {
            w = w.compose(&WeylElement::simple_reflection(l, i)?);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// `(−1)^{l(w)}`
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn images(&self) -> Vec<i64> {
        self.perm.iter().zip(&self.signs).map(|(&p, &s)| i64::from(s) * (p as i64 + 1)).collect()
    }

    /// The `l×l` integer matrix with `w(β_j)` in column `j`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank();
        let mut m = vec![vec![0; l]; l];
        for j in 0..l {
            m[self.perm[j]][j] = i64::from(self.signs[j]);
        }
        m
    }

    /// `u.compose(v)` is `u·v`, acting as `v` first.
    pub fn compose(&self, v: &WeylElement) -> WeylElement {
        assert_eq!(self.rank(), v.rank(), "Weyl element rank mismatch");
        let perm = v.perm.iter().map(|&p| self.perm[p]).collect();
        let signs = v.perm.iter().zip(&v.signs).map(|(&p, &s)| s * self.signs[p]).collect();
        Self::from_parts(perm, signs)
    }

    pub fn inverse(&self) -> WeylElement {
        let l = self.rank();
        let mut perm = vec![0; l];
        let mut signs = vec![1; l];
        for i in 0..l {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { perm, signs, length: self.length }
    }

    pub fn act(&self, lambda: &Weight) -> Result<Weight> {
        if lambda.dim() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: lambda.dim() });
        }
        Ok(self.act_unchecked(lambda))
    }

    pub(crate) fn act_unchecked(&self, lambda: &Weight) -> Weight {
        let mut out = vec![Default::default(); self.rank()];
        for (i, c) in lambda.coords().iter().enumerate() {
            out[self.perm[i]] = if self.signs[i] < 0 { -c } else { c.clone() };
        }
        Weight::new(out)
    }

    /// `w.λ = w(λ+ρ) − ρ`
    pub fn dot_act(&self, lambda: &Weight) -> Result<Weight> {
        let rho = rho_for_rank(self.rank());
        Ok(&self.act(&(&rho + lambda))? - &rho)
    }

    /// Length by greedy descent: while some simple root `α` has `w(α) < 0`,
    /// replace `w` by `w·s_α`.
    fn descent_length(&self) -> usize {
        let l = self.rank();
        let simples: Vec<(usize, Weight)> = (1..=l).map(|i| (i, simple_root(l, i))).collect();
        let mut cur = WeylElement { perm: self.perm.clone(), signs: self.signs.clone(), length: 0 };
        let mut length = 0;
        'outer: loop {
            for (i, alpha) in &simples {
                if is_negative_root(&cur.act_unchecked(alpha)) {
                    let s = WeylElement::simple_reflection(l, *i).expect("index in range");
                    let perm = s.perm.iter().map(|&p| cur.perm[p]).collect();
                    let signs = s.perm.iter().zip(&s.signs).map(|(&p, &sg)| sg * cur.signs[p]).collect();
                    cur = WeylElement { perm, signs, length: 0 };
                    length += 1;
                    continue 'outer;
                }
            }
            break;
        }
        length
    }

    pub fn fixes_first_basis_vector(&self) -> bool {
        self.perm[0] == 0 && self.signs[0] == 1
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|i| format!("{i:+}")).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("WeylElement", 3)?;
        st.serialize_field("element", &self.to_string())?;
        st.serialize_field("length", &self.length)?;
        st.serialize_field("sign", &self.sign())?;
        st.end()
    }
}

pub(crate) fn rho_for_rank(l: usize) -> Weight {
    Weight::from_halves(&(0..l).map(|i| 2 * (l - i) as i64 - 1).collect::<Vec<_>>())
}

fn simple_root(l: usize, i: usize) -> Weight {
    if i < l {
        &Weight::basis(l, i - 1) - &Weight::basis(l, i)
    } else {
        Weight::basis(l, l - 1)
    }
}

/// A root is negative iff its first nonzero β-coordinate is negative.
fn is_negative_root(v: &Weight) -> bool {
    v.coords().iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<WeylElement>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<WeylElement>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All `2^l·l!` elements, sorted by length and then by one-line notation.
pub fn enumerate_weyl(l: usize, cap: usize) -> Result<Arc<Vec<WeylElement>>> {
    if l == 0 {
        return Err(Error::InvalidRank(0));
    }
    if l > cap {
        return Err(Error::EnumerationCap { rank: l, cap });
    }
    if let Some(hit) = cache().lock().expect("weyl cache poisoned").get(&l) {
        return Ok(hit.clone());
    }
    let mut elems = Vec::with_capacity((1usize << l) * (1..=l).product::<usize>());
    for perm in permutations(l) {
        for mask in 0..(1u32 << l) {
            let signs = (0..l).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            elems.push(WeylElement::from_parts(perm.clone(), signs));
        }
    }
    elems.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.images().cmp(&b.images())));
    let elems = Arc::new(elems);
    cache().lock().expect("weyl cache poisoned").entry(l).or_insert_with(|| elems.clone());
    Ok(elems)
}

/// Trivial stabilizer iff the `|λ_i|` are pairwise distinct and nonzero.
pub fn stabilizer_trivial(lambda: &Weight) -> bool {
    let abs: Vec<_> = lambda.coords().iter().map(|c| c.abs()).collect();
    abs.iter().enumerate().all(|(i, a)| !a.is_zero() && abs[i + 1..].iter().all(|b| b != a))
}

/// `Stab_W λ` by brute force over the group.
pub fn stabilizer(lambda: &Weight, cap: usize) -> Result<Vec<WeylElement>> {
    let group = enumerate_weyl(lambda.dim(), cap)?;
    Ok(group.iter().filter(|w| w.act_unchecked(lambda) == *lambda).cloned().collect())
}

/// `Σ_{w∈W} q^{l(w)}` by enumeration.
pub fn poincare_polynomial(l: usize, cap: usize) -> Result<IntPoly> {
    let group = enumerate_weyl(l, cap)?;
    Ok(length_generating_function(group.iter()))
}

pub(crate) fn length_generating_function<'a>(elems: impl Iterator<Item = &'a WeylElement>) -> IntPoly {
    let mut counts: Vec<i64> = Vec::new();
    for w in elems {
        if counts.len() <= w.length {
            counts.resize(w.length + 1, 0);
        }
        counts[w.length] += 1;
    }
    IntPoly::from_i64(&counts)
}

/// `(1−q)^{−l} ∏_{i=1}^{l} (1−q^{2i}) = ∏_{i=1}^{l} (1+q+…+q^{2i−1})`.
pub fn poincare_product(l: usize) -> IntPoly {
    (1..=l).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::from_i64(&vec![1; 2 * i]))
}

/// The subgroup `W_•` generated by `s₂,…,s_l`, i.e. the stabilizer of `β₁`.
pub fn parabolic_subgroup(l: usize, cap: usize) -> Result<Vec<WeylElement>> {
    let group = enumerate_weyl(l, cap)?;
    Ok(group.iter().filter(|w| w.fixes_first_basis_vector()).cloned().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeslemEntry {
    pub r: usize,
    pub gamma: Weight,
    /// Indices of the simple reflections in `w_r = s_{a₁}…s_{a_k}`.
    pub word: Vec<usize>,
    pub element: WeylElement,
}

/// The unique `γ_r ∈ Γ_•` with `ρ−rβ₁+γ_r` regular, and `w_r` with
/// `w_r ρ = ρ−rβ₁+γ_r`, for `0 ≤ r ≤ 2l−1`.
pub fn heslem_data(l: usize, r: usize) -> Result<HeslemEntry> {
    if l == 0 {
        return Err(Error::InvalidRank(0));
    }
    if r >= 2 * l {
        return Err(Error::OutOfRange { value: r as i64, min: 0, max: 2 * l as i64 - 1 });
    }
    let (top, word): (usize, Vec<usize>) = if r == 0 {
        (1, Vec::new())
    } else if r < l {
        (r + 1, (1..=r).collect())
    } else {
        // the trailing descending block s_{l−1}…s_{2l−r} is empty for r = l
        let tail = (2 * l - r..l).rev();
        (2 * l - r, (1..=l).chain(tail).collect())
    };
    let mut gamma = Weight::zero(l);
    for i in 2..=top {
        gamma = &gamma + &Weight::basis(l, i - 1);
    }
    let element = WeylElement::from_word(l, &word)?;

    let rho = rho_for_rank(l);
    let expected = &(&rho - &Weight::basis(l, 0).scale_int(r as i64)) + &gamma;
    if element.act_unchecked(&rho) != expected {
        return Err(Error::Internal(format!("w_{r} ρ ≠ ρ − {r}β₁ + γ_{r} at rank {l}")));
    }
    if element.sign() != if r.is_multiple_of(2) { 1 } else { -1 } {
        return Err(Error::Internal(format!("sgn(w_{r}) ≠ (−1)^{r} at rank {l}")));
    }
    Ok(HeslemEntry { r, gamma, word, element })
}

/// All `γ ∈ Γ_• = {Σ_{i≥2} k_iβ_i : k_i ∈ {0,1}}` making `ρ−rβ₁+γ` regular.
pub fn heslem_candidates(l: usize, r: usize) -> Vec<Weight> {
    let rho = rho_for_rank(l);
    let base = &rho - &Weight::basis(l, 0).scale_int(r as i64);
    let free = l - 1;
    (0..(1u32 << free))
        .map(|mask| {
            Weight::new(
                (0..l).map(|i| if i > 0 && mask >> (i - 1) & 1 == 1 { rat(1, 1) } else { rat(0, 1) }).collect(),
            )
        })
        .filter(|gamma| stabilizer_trivial(&(&base + gamma)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn small_groups() {
        let g1 = enumerate_weyl(1, 6).unwrap();
        assert_eq!(g1.len(), 2);
        assert_eq!(g1.iter().map(|w| w.length()).collect::<Vec<_>>(), vec![0, 1]);
        let g2 = enumerate_weyl(2, 6).unwrap();
        assert_eq!(g2.len(), 8);
        assert_eq!(g2.iter().map(|w| w.length()).max(), Some(4));
        assert_eq!(enumerate_weyl(3, 6).unwrap().len(), 48);
        assert_eq!(enumerate_weyl(7, 6).unwrap_err(), Error::EnumerationCap { rank: 7, cap: 6 });
    }

    #[test]
    fn simple_reflections_have_length_one() {
        for l in 1..=4 {
            assert_eq!(WeylElement::identity(l).length(), 0);
            for i in 1..=l {
                let s = WeylElement::simple_reflection(l, i).unwrap();
                assert_eq!(WeylElement::from_parts(s.perm.clone(), s.signs.clone()).length(), 1);
            }
        }
    }

    #[test]
    fn one_line_notation() {
        let x = WeylElement::from_images(&[2, -1]).unwrap();
        assert_eq!(x.to_string(), "[+2,-1]");
        assert_eq!(x.act(&w("1,0")).unwrap(), w("0,1"));
        assert_eq!(x.act(&w("0,1")).unwrap(), w("-1,0"));
        assert!(WeylElement::from_images(&[1, 1]).is_err());
        assert!(WeylElement::from_images(&[0]).is_err());
    }

    #[test]
    fn dot_action_rank_one() {
        let s = WeylElement::simple_reflection(1, 1).unwrap();
        for m in 0..6 {
            assert_eq!(s.dot_act(&Weight::from_ints(&[m])).unwrap(), Weight::from_ints(&[-(m + 1)]));
        }
        for l in 1..=3 {
            let minus_rho = -&rho_for_rank(l);
            for g in enumerate_weyl(l, 6).unwrap().iter() {
                assert_eq!(g.dot_act(&minus_rho).unwrap(), minus_rho);
            }
        }
        let lam = w("1,2");
        assert_eq!(WeylElement::identity(2).dot_act(&lam).unwrap(), lam);
        assert!(matches!(s.act(&lam), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn stabilizers() {
        assert!(stabilizer_trivial(&rho_for_rank(3)));
        assert!(!stabilizer_trivial(&Weight::zero(3)));
        assert!(!stabilizer_trivial(&w("1,1")));
        assert!(!stabilizer_trivial(&w("1,-1")));
    }

    #[test]
    fn poincare_small() {
        assert_eq!(poincare_polynomial(1, 6).unwrap(), IntPoly::from_i64(&[1, 1]));
        assert_eq!(poincare_polynomial(2, 6).unwrap(), IntPoly::from_i64(&[1, 2, 2, 2, 1]));
    }

    #[test]
    fn regular_shift_table_rank_two() {
        let e0 = heslem_data(2, 0).unwrap();
        assert_eq!(e0.gamma, Weight::zero(2));
        assert_eq!(e0.element, WeylElement::identity(2));
        let e1 = heslem_data(2, 1).unwrap();
        assert_eq!(e1.gamma, w("0,1"));
        assert_eq!(e1.word, vec![1]);
        assert_eq!(e1.element.sign(), -1);
        let e3 = heslem_data(2, 3).unwrap();
        assert_eq!(e3.gamma, Weight::zero(2));
        assert_eq!(e3.word, vec![1, 2, 1]);
        assert_eq!(e3.element.sign(), -1);
        assert!(matches!(heslem_data(2, 4), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn regular_shift_table_at_r_equals_l() {
        for l in 1..=5 {
            let e = heslem_data(l, l).unwrap();
            assert_eq!(e.word, (1..=l).collect::<Vec<_>>());
        }
    }
}
