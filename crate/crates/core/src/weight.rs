//! Exact weights in the orthonormal basis `β₁,…,β_l` of `𝔥*`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse `"3/2"`, `"-1"`, `"0"`. Decimal notation is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!("{s:?}: only integers or p/q are accepted")));
    }
    let r = BigRational::from_str(s).map_err(|_| Error::Parse(format!("{s:?} is not a rational")))?;
    Ok(r)
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A vector of exact rational coordinates in the β-basis.
///
/// The total order is the canonical term order used for every serialized
/// output: larger coordinate sum first, then lexicographically larger first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Weight { coords: vec![Rational::zero(); dim] }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| int(c)).collect() }
    }

    /// Coordinates given as numerators over 2, i.e. `[3, 1]` is `(3/2, 1/2)`.
    pub fn from_halves(doubled: &[i64]) -> Self {
        Weight { coords: doubled.iter().map(|&c| rat(c, 2)).collect() }
    }

    /// `β_{i+1}`, zero-indexed.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut w = Weight::zero(dim);
        w.coords[i] = Rational::one();
        w
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, k: &Rational) -> Weight {
        Weight { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Weight {
        self.scale(&int(k))
    }

    pub fn check_dim(&self, other: &Weight) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    /// The standard scalar product; the β_i are orthonormal.
    pub fn dot(&self, other: &Weight) -> Result<Rational> {
        self.check_dim(other)?;
        Ok(self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum())
    }

    pub fn try_add(&self, other: &Weight) -> Result<Weight> {
        self.check_dim(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_dim(other)?;
        Ok(self - other)
    }

    /// Coordinates in the simple-root basis `β₁−β₂,…,β_{l−1}−β_l, β_l`:
    /// the j-th coordinate is `ν₁+…+ν_j`.
    pub fn simple_coords(&self) -> Vec<Rational> {
        let mut acc = Rational::zero();
        self.coords
            .iter()
            .map(|c| {
                acc += c;
                acc.clone()
            })
            .collect()
    }

    /// Integer simple-root coordinates; errors off the root lattice `ℤπ = ℤ^l`.
    pub fn lattice_coords(&self) -> Result<Vec<i64>> {
        if !self.is_integral() {
            return Err(Error::NotInRootLattice(self.clone()));
        }
        self.simple_coords()
            .iter()
            .map(|c| c.to_integer().to_i64().ok_or(Error::Overflow("lattice coordinates")))
            .collect()
    }

    /// Membership in `ℕπ`.
    pub fn in_positive_cone(&self) -> bool {
        self.is_integral() && self.simple_coords().iter().all(|c| !c.is_negative())
    }

    /// Sum of simple-root coordinates.
    pub fn height(&self) -> Rational {
        self.simple_coords().into_iter().sum()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }

    /// Render as `β1-β2`, `2β1`, `0`, ... for factor labels.
    pub fn beta_expr(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let a = c.abs();
            if !a.is_one() {
                out.push_str(&format_rational(&a));
            }
            out.push_str(&format!("β{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        let sa: Rational = self.coords.iter().sum();
        let sb: Rational = other.coords.iter().sum();
        sb.cmp(&sa)
            .then_with(|| other.coords.len().cmp(&self.coords.len()))
            .then_with(|| other.coords.cmp(&self.coords))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_strings().join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated β-coordinates, e.g. `"3/2,1/2"`.
    fn from_str(s: &str) -> Result<Weight> {
        let coords = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Ok(Weight { coords })
    }
}

impl serde::Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.to_strings())
    }
}
