//! Partition function and weight multiplicities for sp4 (type C2).
//!
//! Simple roots: `α1` short, `α2` long; positive roots `α1, α2, α1+α2, 2α1+α2`.
//! Fundamental weights are half-integral in the root basis (`ϖ1 = α1 + α2/2`),
//! so the Weyl-sum oracle works in coordinates scaled by the determinant of the
//! Cartan matrix and drops any shift that is not in the root lattice.

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qpoly::{MonomialCounter, Poly};
use crate::rootsys::{generate_weyl_group, scaled_fundamental_weights, FundCoord, Mat2, RootCoord, WeylElement};
use crate::scalar::{self, exact_div, Coeff};

/// `s1`: `α1 ↦ -α1`, `α2 ↦ α2 + 2α1`.
pub const S1: Mat2 = Mat2::from_columns(RootCoord::new(-1, 0), RootCoord::new(2, 1));
/// `s2`: `α1 ↦ α1 + α2`, `α2 ↦ -α2`.
pub const S2: Mat2 = Mat2::from_columns(RootCoord::new(1, 1), RootCoord::new(0, -1));

pub const POSITIVE_ROOTS: [RootCoord; 4] =
    [RootCoord::new(1, 0), RootCoord::new(0, 1), RootCoord::new(1, 1), RootCoord::new(2, 1)];

/// Group and weight data derived from [`S1`], [`S2`].
#[derive(Debug)]
pub struct C2Data {
    pub group: Vec<WeylElement>,
    /// Denominator of the fundamental weights in the root basis.
    pub scale: i64,
    /// Columns are `scale · ϖ1`, `scale · ϖ2`.
    pub fundamental: Mat2,
    /// `scale · ρ`.
    pub rho: RootCoord,
}

impl C2Data {
    /// `scale · (mϖ1 + nϖ2)` in root coordinates.
    pub fn fund_to_root_scaled(&self, w: FundCoord) -> Result<RootCoord> {
        self.fundamental.apply(RootCoord::new(w.m(), w.n()))
    }

    /// `mϖ1 + nϖ2` in root coordinates, or `None` off the root lattice.
    pub fn fund_to_root(&self, w: FundCoord) -> Result<Option<RootCoord>> {
        let v = self.fund_to_root_scaled(w)?;
        Ok((v.c1 % self.scale == 0 && v.c2 % self.scale == 0)
            .then(|| RootCoord::new(v.c1 / self.scale, v.c2 / self.scale)))
    }

    /// Fundamental coordinates of a root-lattice vector, or `None` if it is not dominant.
    pub fn root_to_fund(&self, v: RootCoord) -> Result<Option<FundCoord>> {
        let inv = self.fundamental.adjugate();
        let det = self.fundamental.det();
        let w = inv.apply(RootCoord::new(v.c1 * self.scale, v.c2 * self.scale))?;
        if w.c1 % det != 0 || w.c2 % det != 0 {
            return Ok(None);
        }
        Ok(FundCoord::try_new(w.c1 / det, w.c2 / det).ok())
    }
}

pub fn c2_data() -> &'static C2Data {
    static DATA: OnceLock<C2Data> = OnceLock::new();
    DATA.get_or_init(|| {
        let group = generate_weyl_group(S1, S2, 8).expect("C2 reflections generate a finite group");
        let (scale, fundamental) = scaled_fundamental_weights(&S1, &S2);
        let (w1, w2) = (fundamental.column(0), fundamental.column(1));
        let rho = RootCoord::new(w1.c1 + w2.c1, w1.c2 + w2.c2);
        C2Data { group, scale, fundamental, rho }
    })
}

fn degree_bound(v: RootCoord) -> Result<usize> {
    usize::try_from(scalar::add(v.c1, v.c2)?).map_err(|_| Error::Overflow("polynomial degree"))
}

/// `℘_q(mα1 + nα2)` for C2 as a double sum: `i` copies of `2α1+α2`, and the
/// inner index runs over the possible total root counts.
pub fn qpartition_c2<C: Coeff>(v: RootCoord) -> Result<Poly<C>> {
    if !v.is_nonnegative() {
        return Ok(Poly::zero());
    }
    let (m, n) = (v.c1, v.c2);
    let mut acc = MonomialCounter::with_max_degree(degree_bound(v)?)?;
    for i in 0..=(m / 2).min(n) {
        for j in (m - i).max(n)..=(m + n - 2 * i) {
            acc.bump(j as usize)?;
        }
    }
    Ok(acc.finish())
}

/// `℘_q(v)` for C2 by enumerating multiplicities of `2α1+α2` and `α1+α2`;
/// the simple roots absorb the remainder.
pub fn qpartition_c2_bruteforce<C: Coeff>(v: RootCoord) -> Result<Poly<C>> {
    if !v.is_nonnegative() {
        return Ok(Poly::zero());
    }
    let mut acc = MonomialCounter::with_max_degree(degree_bound(v)?)?;
    let [_, _, r3, r4] = POSITIVE_ROOTS;
    let mut n4 = 0;
    while v.c1 - n4 * r4.c1 >= 0 && v.c2 - n4 * r4.c2 >= 0 {
        let mut n3 = 0;
        loop {
            let rest1 = v.c1 - n4 * r4.c1 - n3 * r3.c1;
            let rest2 = v.c2 - n4 * r4.c2 - n3 * r3.c2;
            if rest1 < 0 || rest2 < 0 {
                break;
            }
            acc.bump((rest1 + rest2 + n3 + n4) as usize)?;
            n3 += 1;
        }
        n4 += 1;
    }
    Ok(acc.finish())
}

/// Regions of the closed form for `℘(mα1 + nα2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sp4Region {
    /// `n ≥ m`
    NAtLeastM,
    /// `2n - 1 > m > n`
    Middle,
    /// `2n > m ≥ 2n - 1 > n`, i.e. `m = 2n - 1` with `n ≥ 2`
    Edge,
    /// `m ≥ 2n`
    MAtLeastTwiceN,
}

impl Sp4Region {
    pub const ALL: [Sp4Region; 4] = [Self::NAtLeastM, Self::Middle, Self::Edge, Self::MAtLeastTwiceN];

    pub fn contains(self, m: i64, n: i64) -> bool {
        match self {
            Self::NAtLeastM => n >= m,
            Self::Middle => 2 * n - 1 > m && m > n,
            Self::Edge => 2 * n > m && m >= 2 * n - 1 && 2 * n - 1 > n,
            Self::MAtLeastTwiceN => m >= 2 * n,
        }
    }

    pub fn evaluate(self, m: i64, n: i64) -> Result<i64> {
        if m < 0 || n < 0 || !self.contains(m, n) {
            return Err(Error::Domain(format!("({m},{n}) is not in region {self:?}")));
        }
        use scalar::{add, mul, sub};
        let half = m / 2;
        match self {
            Self::NAtLeastM => mul(half + 1, m - half + 1),
            Self::Middle => {
                let quad = add(sub(sub(mul(2 * m, n)?, mul(m, m)?)?, mul(n, n)?)?, m + n)?;
                add(add(exact_div(quad, 2, "sp4 middle region")?, mul(half, m - half)?)?, 1)
            }
            Self::Edge => exact_div(mul(half + 1, 2 * n - half + 2)?, 2, "sp4 edge region"),
            Self::MAtLeastTwiceN => exact_div(mul(n + 1, n + 2)?, 2, "sp4 outer region"),
        }
    }
}

/// Which regions the closed form may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionRule {
    /// All four regions.
    Corrected,
    /// Without [`Sp4Region::Edge`]: the line `m = 2n - 1 > n` is then uncovered.
    WithoutEdge,
}

/// `℘(v)` for C2 from the four-region closed form.
pub fn partition_c2_closed(v: RootCoord) -> Result<i64> {
    partition_c2_closed_with(v, RegionRule::Corrected)
}

pub fn partition_c2_closed_with(v: RootCoord, rule: RegionRule) -> Result<i64> {
    if !v.is_nonnegative() {
        return Err(Error::Domain(format!("closed form needs nonnegative coordinates, got {v}")));
    }
    let region = Sp4Region::ALL
        .into_iter()
        .filter(|r| rule == RegionRule::Corrected || *r != Sp4Region::Edge)
        .find(|r| r.contains(v.c1, v.c2))
        .ok_or_else(|| Error::Consistency(format!("no region of the closed form covers {v}")))?;
    region.evaluate(v.c1, v.c2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sp4CaseLabel {
    Pqr,
    Pq,
    Pr,
    P,
    Zero,
}

impl Sp4CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pqr => "PQR",
            Self::Pq => "PQ",
            Self::Pr => "PR",
            Self::P => "P",
            Self::Zero => "ZERO",
        }
    }
}

impl fmt::Display for Sp4CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Sp4CaseLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// `a = m+n-x-y`, `b = n-y+(m-x)/2`, `c = n-x-y-1`, `d = -y-1+(m-x)/2`,
/// with the half-integral `b`, `d` stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Sp4CaseData {
    pub a: i64,
    pub two_b: i64,
    pub c: i64,
    pub two_d: i64,
    pub a_in_n: bool,
    pub b_in_n: bool,
    pub c_in_n: bool,
    pub d_in_n: bool,
    pub label: Sp4CaseLabel,
}

fn doubled_in_n(v: i64) -> bool {
    v >= 0 && v % 2 == 0
}

pub fn compute_sp4_case(lambda: FundCoord, mu: FundCoord) -> Sp4CaseData {
    let (m, n, x, y) = (lambda.m(), lambda.n(), mu.m(), mu.n());
    let a = m + n - x - y;
    let two_b = 2 * n - 2 * y + m - x;
    let c = n - x - y - 1;
    let two_d = -2 * y - 2 + m - x;
    let (a_in_n, b_in_n, c_in_n, d_in_n) = (a >= 0, doubled_in_n(two_b), c >= 0, doubled_in_n(two_d));
    let label = match (a_in_n && b_in_n, c_in_n, d_in_n) {
        (false, _, _) => Sp4CaseLabel::Zero,
        (true, true, true) => Sp4CaseLabel::Pqr,
        (true, true, false) => Sp4CaseLabel::Pq,
        (true, false, true) => Sp4CaseLabel::Pr,
        (true, false, false) => Sp4CaseLabel::P,
    };
    Sp4CaseData { a, two_b, c, two_d, a_in_n, b_in_n, c_in_n, d_in_n, label }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sp4Multiplicity {
    pub lambda: FundCoord,
    pub mu: FundCoord,
    pub case_data: Sp4CaseData,
    pub p: Option<i64>,
    pub q: Option<i64>,
    pub r: Option<i64>,
    pub value: i64,
}

/// `m(λ, μ)` for sp4 from the case formula `P - Q - R`.
///
/// `P = ℘(aα1 + bα2)` via [`partition_c2_closed`]. `Q = ℘(cα1 + bα2)` always
/// falls in the region `n ≥ m` (as `b - c = (m+x)/2 + 1 > 0`), giving
/// `⌊(c+2)/2⌋·⌊(c+3)/2⌋`; `R = ℘(aα1 + dα2)` always falls in `m ≥ 2n`,
/// giving `(d+1)(d+2)/2`.
pub fn multiplicity_c2_closed(lambda: FundCoord, mu: FundCoord) -> Result<Sp4Multiplicity> {
    use scalar::{mul, sub};
    let case_data = compute_sp4_case(lambda, mu);
    let (mut p, mut q, mut r) = (None, None, None);
    let mut value = 0;
    if case_data.label != Sp4CaseLabel::Zero {
        let pv = partition_c2_closed(RootCoord::new(case_data.a, case_data.two_b / 2))?;
        value = pv;
        p = Some(pv);
        if case_data.c_in_n {
            let c = case_data.c;
            let qv = mul((c + 2) / 2, (c + 3) / 2)?;
            value = sub(value, qv)?;
            q = Some(qv);
        }
        if case_data.d_in_n {
            let d = case_data.two_d / 2;
            let rv = exact_div(mul(d + 1, d + 2)?, 2, "sp4 R term")?;
            value = sub(value, rv)?;
            r = Some(rv);
        }
    }
    if value < 0 {
        return Err(Error::Consistency(format!("m({lambda}, {mu}) = {value} is negative")));
    }
    Ok(Sp4Multiplicity { lambda, mu, case_data, p, q, r, value })
}

/// `m_q(λ, μ)` for sp4 as the alternating sum over the eight group elements.
pub fn multiplicity_c2_weyl_sum<C: Coeff>(lambda: FundCoord, mu: FundCoord) -> Result<Poly<C>> {
    let data = c2_data();
    let lr = data.fund_to_root_scaled(lambda)?.checked_add(data.rho)?;
    let mr = data.fund_to_root_scaled(mu)?.checked_add(data.rho)?;
    data.group.iter().try_fold(Poly::zero(), |acc, sigma| {
        let shift = sigma.apply(lr)?.checked_sub(mr)?;
        if shift.c1 % data.scale != 0 || shift.c2 % data.scale != 0 {
            return Ok(acc);
        }
        let v = RootCoord::new(shift.c1 / data.scale, shift.c2 / data.scale);
        acc.checked_add_signed(&qpartition_c2::<C>(v)?, sigma.sign() < 0)
    })
}
