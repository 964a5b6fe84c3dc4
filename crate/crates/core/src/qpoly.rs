//! Dense univariate polynomials in `q` with exact integer coefficients.

use std::fmt;

use serde::de::Deserializer;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::scalar::Coeff;

/// Polynomial `c_0 + c_1 q + ... + c_n q^n`, stored densely in ascending degree.
///
/// The coefficient vector is always canonical: the last entry is nonzero and
/// the zero polynomial is the empty vector, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = C::one();
        Self { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Ascending coefficients in canonical form.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^degree` (zero beyond the stored range).
    pub fn coeff(&self, degree: usize) -> C {
        self.coeffs.get(degree).copied().unwrap_or_else(C::zero)
    }

    /// Highest degree with a nonzero coefficient, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree with a nonzero coefficient, `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, C::add_checked)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, C::sub_checked)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.neg_checked()).collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }

    /// Adds `sign * rhs` where `sign` is `+1` or `-1`.
    pub fn checked_add_signed(&self, rhs: &Self, negative: bool) -> Result<Self> {
        if negative {
            self.checked_sub(rhs)
        } else {
            self.checked_add(rhs)
        }
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> Result<C> {
        self.coeffs.iter().try_fold(C::zero(), |acc, &c| acc.add_checked(c))
    }

    /// Value at an arbitrary integer `q`, by Horner's rule with checked arithmetic.
    pub fn eval_at(&self, q: C) -> Result<C> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(C::zero(), |acc, &c| acc.mul_checked(q)?.add_checked(c))
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Converts the coefficients to another scalar type.
    pub fn convert<D: Coeff>(&self) -> Result<Poly<D>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| D::from_i128(c.to_i128().expect("primitive integer fits i128")))
            .collect::<Option<Vec<_>>>()
            .ok_or(crate::Error::Overflow("coefficient conversion"))?;
        Ok(Poly { coeffs })
    }

    /// LaTeX rendering in descending powers, e.g. `q^{5} + q`.
    pub fn to_latex(&self) -> String {
        self.render(|d| format!("q^{{{d}}}"))
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(C, C) -> Result<C>) -> Result<Self> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| op(self.coeff(i), rhs.coeff(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    fn render(&self, power: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (degree, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let var = match degree {
                0 => String::new(),
                1 => "q".to_string(),
                d => power(d),
            };
            if degree == 0 || magnitude != "1" {
                out.push_str(&magnitude);
            }
            out.push_str(&var);
        }
        out
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|d| format!("q^{d}")))
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<C: Coeff + Serialize> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff + Deserialize<'de>> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<C>::deserialize(deserializer).map(Self::from_coeffs)
    }
}

/// Tallies monomials `q^z` one at a time; the workhorse behind every
/// partition-function evaluator.
#[derive(Debug, Clone)]
pub struct MonomialCounter<C> {
    coeffs: Vec<C>,
}

/// Largest degree a [`MonomialCounter`] will preallocate.
pub const MAX_DEGREE: usize = 1 << 24;

impl<C: Coeff> MonomialCounter<C> {
    /// Fails with [`crate::Error::Overflow`] when `max_degree` exceeds [`MAX_DEGREE`].
    pub fn with_max_degree(max_degree: usize) -> Result<Self> {
        if max_degree > MAX_DEGREE {
            return Err(crate::Error::Overflow("polynomial degree"));
        }
        Ok(Self { coeffs: vec![C::zero(); max_degree + 1] })
    }

    /// Adds one to the coefficient of `q^degree`.
    pub fn bump(&mut self, degree: usize) -> Result<()> {
        if degree >= self.coeffs.len() {
            self.coeffs.resize(degree + 1, C::zero());
        }
        self.coeffs[degree] = self.coeffs[degree].add_checked(C::one())?;
        Ok(())
    }

    pub fn finish(self) -> Poly<C> {
        Poly::from_coeffs(self.coeffs)
    }
}
