//! Weight q-multiplicities `m_q(λ, μ)` for g2.
//!
//! Only the group elements `1, s1, s2, s2s1, s1s2` can send `λ+ρ` to a weight
//! whose difference from `μ+ρ` has nonnegative root coordinates, so the
//! alternating sum collapses to at most five partition terms `P, Q, R, S, T`.
//! Which of them survive is decided by the signs of six affine forms
//! `a, b, c, d, e, f` in `(m, n, x, y)`, and only eight sign patterns occur.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::g2::{partition_tarski, qpartition};
use crate::qpoly::Poly;
use crate::rootsys::g2_data::{sigma_shift, weyl_group};
use crate::rootsys::{FundCoord, RootCoord};
use crate::scalar::{self, Coeff};

/// One of the five contributing partition terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    /// `σ = 1`, argument `aα1 + bα2`.
    P,
    /// `σ = s1`, argument `cα1 + bα2`.
    Q,
    /// `σ = s2`, argument `aα1 + dα2`.
    R,
    /// `σ = s2s1`, argument `cα1 + eα2`.
    S,
    /// `σ = s1s2`, argument `fα1 + dα2`.
    T,
}

impl Term {
    pub const ALL: [Term; 5] = [Term::P, Term::Q, Term::R, Term::S, Term::T];

    /// Q and R come from odd-length elements.
    pub fn is_negative(self) -> bool {
        matches!(self, Term::Q | Term::R)
    }

    pub fn weyl_element(self) -> &'static str {
        match self {
            Term::P => "1",
            Term::Q => "s1",
            Term::R => "s2",
            Term::S => "s2s1",
            Term::T => "s1s2",
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Term::P => 'P',
            Term::Q => 'Q',
            Term::R => 'R',
            Term::S => 'S',
            Term::T => 'T',
        }
    }

    pub fn argument(self, case: &CaseData) -> RootCoord {
        match self {
            Term::P => RootCoord::new(case.a, case.b),
            Term::Q => RootCoord::new(case.c, case.b),
            Term::R => RootCoord::new(case.a, case.d),
            Term::S => RootCoord::new(case.c, case.e),
            Term::T => RootCoord::new(case.f, case.d),
        }
    }

    /// The term is nonzero exactly when both coordinates of its argument are nonnegative.
    pub fn is_nontrivial(self, case: &CaseData) -> bool {
        self.argument(case).is_nonnegative()
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// A subset of `{P, Q, R, S, T}`, displayed as e.g. `PQR`, or `ZERO` when empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Signature(u8);

impl Signature {
    pub const EMPTY: Signature = Signature(0);

    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        Signature(terms.into_iter().fold(0, |bits, t| bits | 1 << t.index()))
    }

    /// Parses `"PQR"`-style strings; `"ZERO"` or `""` is the empty set.
    pub fn parse(s: &str) -> Option<Self> {
        if s == "ZERO" {
            return Some(Self::EMPTY);
        }
        let mut terms = Vec::new();
        for ch in s.chars() {
            terms.push(*Term::ALL.iter().find(|t| t.symbol() == ch)?);
        }
        Some(Self::from_terms(terms))
    }

    pub fn contains(self, t: Term) -> bool {
        self.0 & (1 << t.index()) != 0
    }

    pub fn terms(self) -> impl Iterator<Item = Term> {
        Term::ALL.into_iter().filter(move |&t| self.contains(t))
    }

    /// All 32 subsets.
    pub fn all() -> impl Iterator<Item = Signature> {
        (0u8..32).map(Signature)
    }

    /// The signed formula, e.g. `P - Q - R + S`.
    pub fn formula(self) -> String {
        let mut out = String::new();
        for t in self.terms() {
            match (out.is_empty(), t.is_negative()) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push(t.symbol());
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("ZERO");
        }
        self.terms().try_for_each(|t| write!(f, "{}", t.symbol()))
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature({self})")
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The eight q-multiplicity formulas that actually occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    Pqrst,
    Pqrs,
    Pqrt,
    Pqr,
    Pq,
    Pr,
    P,
    Zero,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 8] = [
        Self::Pqrst,
        Self::Pqrs,
        Self::Pqrt,
        Self::Pqr,
        Self::Pq,
        Self::Pr,
        Self::P,
        Self::Zero,
    ];

    /// Selects the formula from membership of `a..f` in ℕ.
    pub fn from_membership(in_n: [bool; 6]) -> Self {
        match in_n {
            [true, true, true, true, true, true] => Self::Pqrst,
            [true, true, true, true, true, false] => Self::Pqrs,
            [true, true, true, true, false, true] => Self::Pqrt,
            [true, true, true, true, false, false] => Self::Pqr,
            [true, true, true, false, false, false] => Self::Pq,
            [true, true, false, true, false, false] => Self::Pr,
            [true, true, false, false, false, false] => Self::P,
            _ => Self::Zero,
        }
    }

    pub fn signature(self) -> Signature {
        use Term::*;
        match self {
            Self::Pqrst => Signature::from_terms([P, Q, R, S, T]),
            Self::Pqrs => Signature::from_terms([P, Q, R, S]),
            Self::Pqrt => Signature::from_terms([P, Q, R, T]),
            Self::Pqr => Signature::from_terms([P, Q, R]),
            Self::Pq => Signature::from_terms([P, Q]),
            Self::Pr => Signature::from_terms([P, R]),
            Self::P => Signature::from_terms([P]),
            Self::Zero => Signature::EMPTY,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pqrst => "PQRST",
            Self::Pqrs => "PQRS",
            Self::Pqrt => "PQRT",
            Self::Pqr => "PQR",
            Self::Pq => "PQ",
            Self::Pr => "PR",
            Self::P => "P",
            Self::Zero => "ZERO",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// The six affine forms for one `(λ, μ)`, their membership in ℕ, and the
/// formula they select.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CaseData {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
    pub in_n: [bool; 6],
    pub label: CaseLabel,
}

impl CaseData {
    pub fn values(&self) -> [i64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    /// Terms whose arguments lie in the nonnegative cone, independent of the label.
    pub fn contributing(&self) -> Signature {
        Signature::from_terms(Term::ALL.into_iter().filter(|t| t.is_nontrivial(self)))
    }
}

/// Computes `a..f` for `λ = mϖ1 + nϖ2`, `μ = xϖ1 + yϖ2` and selects the case.
pub fn compute_abcdef(lambda: FundCoord, mu: FundCoord) -> CaseData {
    let (m, n, x, y) = (lambda.m(), lambda.n(), mu.m(), mu.n());
    let a = 2 * m + 3 * n - 2 * x - 3 * y;
    let b = m + 2 * n - x - 2 * y;
    let c = m + 3 * n - 2 * x - 3 * y - 1;
    let d = m + n - x - 2 * y - 1;
    let e = n - x - 2 * y - 2;
    let f = m - 2 * x - 3 * y - 4;
    let in_n = [a, b, c, d, e, f].map(|v| v >= 0);
    CaseData { a, b, c, d, e, f, in_n, label: CaseLabel::from_membership(in_n) }
}

/// `m_q(λ, μ)` together with how it was assembled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "C: Coeff + Serialize"))]
pub struct MultiplicityResult<C: Coeff> {
    pub lambda: FundCoord,
    pub mu: FundCoord,
    pub case_data: CaseData,
    /// `P, Q, R, S, T` in order; `None` for terms the case leaves out.
    pub terms: [Option<Poly<C>>; 5],
    pub mq: Poly<C>,
    pub m_at_one: C,
}

impl<C: Coeff> MultiplicityResult<C> {
    pub fn term(&self, t: Term) -> Option<&Poly<C>> {
        self.terms[t.index()].as_ref()
    }
}

/// `m_q(λ, μ)` from the case formula: only the terms selected by the case
/// label are evaluated, then combined as `+P - Q - R + S + T`.
pub fn qmultiplicity_closed<C: Coeff>(lambda: FundCoord, mu: FundCoord) -> Result<MultiplicityResult<C>> {
    let case_data = compute_abcdef(lambda, mu);
    let mut terms: [Option<Poly<C>>; 5] = Default::default();
    let mut mq = Poly::zero();
    for t in case_data.label.signature().terms() {
        let value = qpartition::<C>(t.argument(&case_data))?;
        mq = mq.checked_add_signed(&value, t.is_negative())?;
        terms[t.index()] = Some(value);
    }
    if !mq.is_nonnegative() {
        return Err(Error::Consistency(format!(
            "m_q({lambda}, {mu}) = {mq} has a negative coefficient"
        )));
    }
    let m_at_one = mq.eval_at_one()?;
    Ok(MultiplicityResult { lambda, mu, case_data, terms, mq, m_at_one })
}

/// `m_q(λ, μ)` as the full alternating sum over the twelve group elements,
/// with every shift computed from the group matrices.
pub fn qmultiplicity_weyl_sum<C: Coeff>(lambda: FundCoord, mu: FundCoord) -> Result<Poly<C>> {
    weyl_group().iter().try_fold(Poly::zero(), |acc, sigma| {
        let shift = sigma_shift(sigma, lambda, mu)?;
        acc.checked_add_signed(&qpartition::<C>(shift)?, sigma.sign() < 0)
    })
}

/// How the partition values in a q = 1 multiplicity are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Evaluate the q-analog and set `q = 1`.
    QPoly,
    /// Use the Tarski closed forms for each term.
    Tarski,
}

/// The classical multiplicity `m(λ, μ)`.
pub fn multiplicity(lambda: FundCoord, mu: FundCoord, method: Method) -> Result<i64> {
    match method {
        Method::QPoly => Ok(qmultiplicity_closed::<i64>(lambda, mu)?.m_at_one),
        Method::Tarski => {
            let case = compute_abcdef(lambda, mu);
            case.label.signature().terms().try_fold(0i64, |acc, t| {
                let value = partition_tarski(t.argument(&case))?;
                if t.is_negative() {
                    scalar::sub(acc, value)
                } else {
                    scalar::add(acc, value)
                }
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;

    fn fc(m: u32, n: u32) -> FundCoord {
        FundCoord::new(m, n)
    }

    #[test]
    fn abcdef_examples() {
        let case = compute_abcdef(fc(5, 6), fc(0, 0));
        assert_eq!(case.values(), [28, 17, 22, 10, 4, 1]);
        assert_eq!(case.label, CaseLabel::Pqrst);
        let case = compute_abcdef(fc(0, 0), fc(8, 0));
        assert_eq!(case.values(), [-16, -8, -17, -9, -10, -20]);
        assert_eq!(case.label, CaseLabel::Zero);
        let case = compute_abcdef(fc(2, 0), fc(1, 0));
        assert_eq!(case.values(), [2, 1, -1, 0, -3, -4]);
        assert_eq!(case.label, CaseLabel::Pr);
    }

    #[test]
    fn worked_examples() {
        let r = qmultiplicity_closed::<i64>(fc(0, 1), fc(0, 0)).unwrap();
        assert_eq!(r.case_data.values(), [3, 2, 2, 0, -1, -4]);
        assert_eq!(r.case_data.label, CaseLabel::Pqr);
        assert_eq!(r.term(Term::P).unwrap(), &QPoly::from_coeffs(vec![0, 1, 2, 2, 1, 1]));
        assert_eq!(r.term(Term::Q).unwrap(), &QPoly::from_coeffs(vec![0, 0, 2, 1, 1]));
        assert_eq!(r.term(Term::R).unwrap(), &QPoly::monomial(3));
        assert!(r.term(Term::S).is_none());
        assert_eq!(r.mq, QPoly::from_coeffs(vec![0, 1, 0, 0, 0, 1]));
        assert_eq!(r.m_at_one, 2);

        let r = qmultiplicity_closed::<i64>(fc(0, 3), fc(1, 2)).unwrap();
        assert_eq!(r.case_data.values(), [1, 1, 0, -3, -4, -12]);
        assert_eq!(r.case_data.label, CaseLabel::Pq);
        assert_eq!(r.mq, QPoly::monomial(2));
        assert_eq!(r.m_at_one, 1);

        let r = qmultiplicity_closed::<i64>(fc(4, 7), fc(4, 7)).unwrap();
        assert_eq!(r.case_data.label, CaseLabel::P);
        assert_eq!(r.mq, QPoly::one());
    }

    #[test]
    fn weyl_sum_examples() {
        assert_eq!(
            qmultiplicity_weyl_sum::<i64>(fc(0, 1), fc(0, 0)).unwrap(),
            QPoly::from_coeffs(vec![0, 1, 0, 0, 0, 1])
        );
        assert_eq!(qmultiplicity_weyl_sum::<i64>(fc(0, 0), fc(0, 0)).unwrap(), QPoly::one());
        let closed = qmultiplicity_closed::<i64>(fc(3, 2), fc(1, 1)).unwrap();
        assert_eq!(qmultiplicity_weyl_sum::<i64>(fc(3, 2), fc(1, 1)).unwrap(), closed.mq);
    }

    #[test]
    fn multiplicity_examples() {
        for method in [Method::QPoly, Method::Tarski] {
            assert_eq!(multiplicity(fc(0, 1), fc(0, 0), method).unwrap(), 2);
            assert_eq!(multiplicity(fc(0, 3), fc(1, 2), method).unwrap(), 1);
            assert_eq!(multiplicity(fc(0, 0), fc(0, 1), method).unwrap(), 0);
        }
    }

    #[test]
    fn signature_parse_and_display() {
        let s = Signature::parse("PQRT").unwrap();
        assert_eq!(s.to_string(), "PQRT");
        assert_eq!(s.formula(), "P - Q - R + T");
        assert_eq!(Signature::parse("ZERO").unwrap(), Signature::EMPTY);
        assert_eq!(Signature::parse("").unwrap().to_string(), "ZERO");
        assert_eq!(Signature::parse("QRS").unwrap().formula(), "-Q - R + S");
        assert!(Signature::parse("PX").is_none());
        assert_eq!(Signature::all().count(), 32);
        for label in CaseLabel::ALL {
            assert_eq!(label.signature().to_string(), label.as_str());
        }
    }

    #[test]
    fn label_is_determined_by_membership() {
        let mut seen = std::collections::BTreeSet::new();
        for bits in 0u8..64 {
            let flags: [bool; 6] = std::array::from_fn(|i| bits & (1 << i) != 0);
            seen.insert(CaseLabel::from_membership(flags));
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn highest_weight_has_multiplicity_one() {
        for m in 0..=8 {
            for n in 0..=8 {
                let r = qmultiplicity_closed::<i64>(fc(m, n), fc(m, n)).unwrap();
                assert_eq!(r.mq, QPoly::one());
            }
        }
    }

    #[test]
    fn closed_matches_weyl_sum_in_wide_coefficients() {
        for (lambda, mu) in [(fc(6, 6), fc(0, 0)), (fc(5, 4), fc(0, 4)), (fc(0, 50), fc(51, 0))] {
            let closed = qmultiplicity_closed::<i128>(lambda, mu).unwrap();
            assert_eq!(closed.mq, qmultiplicity_weyl_sum::<i128>(lambda, mu).unwrap());
        }
    }

    #[test]
    fn serializes_result() {
        let r = qmultiplicity_closed::<i64>(fc(0, 1), fc(0, 0)).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["mq"], serde_json::json!([0, 1, 0, 0, 0, 1]));
        assert_eq!(json["case_data"]["label"], "PQR");
        assert_eq!(json["lambda"], serde_json::json!([0, 1]));
        assert!(json["terms"][3].is_null());
    }
}
