//! Rank-two root data: coordinates, simple reflections as integer matrices in
//! the simple-root basis, and Weyl groups generated from them.
//!
//! The g2 constants live in [`g2`](crate::rootsys::g2_data); the C2 data used
//! by [`sp4`](crate::sp4) is produced by the same generator.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weight in the simple-root basis, `c1 α1 + c2 α2`. Any integers allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct RootCoord {
    pub c1: i64,
    pub c2: i64,
}

impl RootCoord {
    pub const ZERO: RootCoord = RootCoord { c1: 0, c2: 0 };

    pub const fn new(c1: i64, c2: i64) -> Self {
        Self { c1, c2 }
    }

    /// Both coordinates nonnegative, i.e. inside the cone spanned by the simple roots.
    pub fn is_nonnegative(self) -> bool {
        self.c1 >= 0 && self.c2 >= 0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Ok(Self::new(crate::scalar::add(self.c1, rhs.c1)?, crate::scalar::add(self.c2, rhs.c2)?))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Ok(Self::new(crate::scalar::sub(self.c1, rhs.c1)?, crate::scalar::sub(self.c2, rhs.c2)?))
    }
}

impl From<[i64; 2]> for RootCoord {
    fn from([c1, c2]: [i64; 2]) -> Self {
        Self { c1, c2 }
    }
}

impl From<RootCoord> for [i64; 2] {
    fn from(v: RootCoord) -> Self {
        [v.c1, v.c2]
    }
}

impl fmt::Display for RootCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}α1 + {}α2", self.c1, self.c2)
    }
}

/// Dominant integral weight `m ϖ1 + n ϖ2`. Unsigned fields make non-dominant
/// weights unrepresentable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct FundCoord {
    pub m: u32,
    pub n: u32,
}

impl FundCoord {
    pub const ZERO: FundCoord = FundCoord { m: 0, n: 0 };

    pub const fn new(m: u32, n: u32) -> Self {
        Self { m, n }
    }

    /// Validating constructor for signed input.
    pub fn try_new(m: i64, n: i64) -> Result<Self> {
        let conv = |v: i64| {
            u32::try_from(v).map_err(|_| {
                Error::Domain(format!(
                    "fundamental-weight coordinates must be nonnegative and fit in 32 bits, got ({m},{n})"
                ))
            })
        };
        Ok(Self { m: conv(m)?, n: conv(n)? })
    }

    pub fn m(self) -> i64 {
        i64::from(self.m)
    }

    pub fn n(self) -> i64 {
        i64::from(self.n)
    }
}

impl TryFrom<[i64; 2]> for FundCoord {
    type Error = Error;

    fn try_from([m, n]: [i64; 2]) -> Result<Self> {
        Self::try_new(m, n)
    }
}

impl From<FundCoord> for [i64; 2] {
    fn from(w: FundCoord) -> Self {
        [w.m(), w.n()]
    }
}

impl fmt::Display for FundCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}ϖ1 + {}ϖ2", self.m, self.n)
    }
}

/// 2×2 integer matrix acting on column vectors of root coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub rows: [[i64; 2]; 2],
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { rows: [[1, 0], [0, 1]] };

    /// Matrix whose columns are the images of `α1` and `α2`.
    pub const fn from_columns(col1: RootCoord, col2: RootCoord) -> Self {
        Self { rows: [[col1.c1, col2.c1], [col1.c2, col2.c2]] }
    }

    pub fn column(&self, j: usize) -> RootCoord {
        RootCoord::new(self.rows[0][j], self.rows[1][j])
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let mut rows = [[0; 2]; 2];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.rows[i][0] * rhs.rows[0][j] + self.rows[i][1] * rhs.rows[1][j];
            }
        }
        Mat2 { rows }
    }

    pub fn apply(&self, v: RootCoord) -> Result<RootCoord> {
        let dot = |r: [i64; 2]| -> Result<i64> {
            crate::scalar::add(crate::scalar::mul(r[0], v.c1)?, crate::scalar::mul(r[1], v.c2)?)
        };
        Ok(RootCoord::new(dot(self.rows[0])?, dot(self.rows[1])?))
    }

    pub fn det(&self) -> i64 {
        self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
    }

    pub fn adjugate(&self) -> Mat2 {
        let [[a, b], [c, d]] = self.rows;
        Mat2 { rows: [[d, -b], [-c, a]] }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    S1,
    S2,
}

impl Generator {
    pub fn other(self) -> Self {
        match self {
            Generator::S1 => Generator::S2,
            Generator::S2 => Generator::S1,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Generator::S1 => "s1",
            Generator::S2 => "s2",
        }
    }
}

/// A Weyl group element together with a reduced word.
///
/// The word is read as a composition: `[S2, S1]` is `s2s1`, which applies `s1`
/// first. Its matrix is the product of the generator matrices in word order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub word: Vec<Generator>,
    pub matrix: Mat2,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `(-1)^length`.
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, v: RootCoord) -> Result<RootCoord> {
        self.matrix.apply(v)
    }

    /// Word spelled out letter by letter, e.g. `s1s2s1`; `1` for the identity.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "1".to_string();
        }
        self.word.iter().map(|g| g.label()).collect()
    }

    /// Compact name with powers of the alternating pair, e.g. `s1(s2s1)^2`, `(s1s2)^3`.
    pub fn name(&self) -> String {
        let len = self.word.len();
        if len <= 3 {
            return self.word_string();
        }
        let first = self.word[0];
        if len.is_multiple_of(2) {
            format!("({}{})^{}", first.label(), first.other().label(), len / 2)
        } else {
            let second = first.other();
            format!("{}({}{})^{}", first.label(), second.label(), first.label(), len / 2)
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Generates the finite group spanned by two simple reflections, breadth-first
/// by word length. Each element keeps the first reduced word found, preferring
/// words that start with `s1`; the result is sorted by `(length, word)`.
///
/// Fails if the group exceeds `limit` elements (the reflections are then not
/// those of a finite rank-two root system).
pub fn generate_weyl_group(s1: Mat2, s2: Mat2, limit: usize) -> Result<Vec<WeylElement>> {
    let gens = [(Generator::S1, s1), (Generator::S2, s2)];
    let mut elements = vec![WeylElement { word: Vec::new(), matrix: Mat2::IDENTITY }];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &(g, gm) in &gens {
            for &idx in &frontier {
                let matrix = gm.mul(&elements[idx].matrix);
                if elements.iter().any(|e| e.matrix == matrix) {
                    continue;
                }
                let mut word = Vec::with_capacity(elements[idx].word.len() + 1);
                word.push(g);
                word.extend_from_slice(&elements[idx].word);
                elements.push(WeylElement { word, matrix });
                next.push(elements.len() - 1);
                if elements.len() > limit {
                    return Err(Error::Consistency(format!(
                        "reflection group exceeds {limit} elements"
                    )));
                }
            }
        }
        frontier = next;
    }
    elements.sort_by(|a, b| (a.length(), &a.word).cmp(&(b.length(), &b.word)));
    Ok(elements)
}

/// Cartan integers `⟨α_j, α_i^∨⟩` read off the simple reflections:
/// `s_i(α_j) = α_j - A[i][j] α_i`.
pub fn cartan_matrix(s1: &Mat2, s2: &Mat2) -> Mat2 {
    let a12 = -s1.column(1).c1;
    let a21 = -s2.column(0).c2;
    Mat2 { rows: [[2, a12], [a21, 2]] }
}

/// Fundamental weights in the simple-root basis, scaled by `det(A)` so they are
/// integral. Returns `(scale, columns)` where column `k` is `scale · ϖ_k`.
pub fn scaled_fundamental_weights(s1: &Mat2, s2: &Mat2) -> (i64, Mat2) {
    let cartan = cartan_matrix(s1, s2);
    (cartan.det(), cartan.adjugate())
}

/// g2 root data.
pub mod g2_data {
    use super::*;

    /// `s1`: `α1 ↦ -α1`, `α2 ↦ 3α1 + α2`.
    pub const S1: Mat2 = Mat2::from_columns(RootCoord::new(-1, 0), RootCoord::new(3, 1));
    /// `s2`: `α1 ↦ α1 + α2`, `α2 ↦ -α2`.
    pub const S2: Mat2 = Mat2::from_columns(RootCoord::new(1, 1), RootCoord::new(0, -1));

    /// `α1, α2, α1+α2, 2α1+α2, 3α1+α2, 3α1+2α2`.
    pub const POSITIVE_ROOTS: [RootCoord; 6] = [
        RootCoord::new(1, 0),
        RootCoord::new(0, 1),
        RootCoord::new(1, 1),
        RootCoord::new(2, 1),
        RootCoord::new(3, 1),
        RootCoord::new(3, 2),
    ];

    /// Half-sum of the positive roots, `ϖ1 + ϖ2 = 5α1 + 3α2`.
    pub const RHO: RootCoord = RootCoord::new(5, 3);

    /// Columns are `ϖ1 = 2α1 + α2` and `ϖ2 = 3α1 + 2α2`.
    pub const FUNDAMENTAL_TO_ROOT: Mat2 =
        Mat2::from_columns(RootCoord::new(2, 1), RootCoord::new(3, 2));

    /// Hard-coded action of every group element on the simple roots:
    /// `(name, length, σ(α1), σ(α2))`.
    pub const WEYL_TABLE: [(&str, usize, [i64; 2], [i64; 2]); 12] = [
        ("1", 0, [1, 0], [0, 1]),
        ("s1", 1, [-1, 0], [3, 1]),
        ("s2s1", 2, [-1, -1], [3, 2]),
        ("s1s2s1", 3, [-2, -1], [3, 2]),
        ("(s2s1)^2", 4, [-2, -1], [3, 1]),
        ("s1(s2s1)^2", 5, [-1, -1], [0, 1]),
        ("s2", 1, [1, 1], [0, -1]),
        ("s1s2", 2, [2, 1], [-3, -1]),
        ("s2s1s2", 3, [2, 1], [-3, -2]),
        ("(s1s2)^2", 4, [1, 1], [-3, -2]),
        ("s2(s1s2)^2", 5, [1, 0], [-3, -1]),
        ("(s1s2)^3", 6, [-1, 0], [0, -1]),
    ];

    /// Affine form `Σ coeffs[i] · (m, n, x, y, 1)[i]`.
    #[derive(Clone, Copy, Debug, PartialEq, Eq)]
    pub struct AffineForm(pub [i64; 5]);

    impl AffineForm {
        pub fn eval(&self, m: i64, n: i64, x: i64, y: i64) -> i64 {
            let v = [m, n, x, y, 1];
            self.0.iter().zip(v).map(|(c, t)| c * t).sum()
        }
    }

    /// Closed forms of `σ(λ+ρ) - (μ+ρ)` for `λ = mϖ1 + nϖ2`, `μ = xϖ1 + yϖ2`:
    /// `(name, length, α1 coefficient, α2 coefficient)`.
    pub const SHIFT_TABLE: [(&str, usize, AffineForm, AffineForm); 12] = [
        ("1", 0, AffineForm([2, 3, -2, -3, 0]), AffineForm([1, 2, -1, -2, 0])),
        ("s1", 1, AffineForm([1, 3, -2, -3, -1]), AffineForm([1, 2, -1, -2, 0])),
        ("s2", 1, AffineForm([2, 3, -2, -3, 0]), AffineForm([1, 1, -1, -2, -1])),
        ("s2s1", 2, AffineForm([1, 3, -2, -3, -1]), AffineForm([0, 1, -1, -2, -2])),
        ("s1s2", 2, AffineForm([1, 0, -2, -3, -4]), AffineForm([1, 1, -1, -2, -1])),
        ("s1s2s1", 3, AffineForm([-1, 0, -2, -3, -6]), AffineForm([0, 1, -1, -2, -2])),
        ("s2s1s2", 3, AffineForm([1, 0, -2, -3, -4]), AffineForm([0, -1, -1, -2, -4])),
        ("(s1s2)^2", 4, AffineForm([-1, -3, -2, -3, -9]), AffineForm([0, -1, -1, -2, -4])),
        ("(s2s1)^2", 4, AffineForm([-1, 0, -2, -3, -6]), AffineForm([-1, -1, -1, -2, -5])),
        ("s1(s2s1)^2", 5, AffineForm([-2, -3, -2, -3, -10]), AffineForm([-1, -1, -1, -2, -5])),
        ("s2(s1s2)^2", 5, AffineForm([-1, -3, -2, -3, -9]), AffineForm([-1, -2, -1, -2, -6])),
        ("(s1s2)^3", 6, AffineForm([-2, -3, -2, -3, -10]), AffineForm([-1, -2, -1, -2, -6])),
    ];

    /// Checks generated elements against [`WEYL_TABLE`].
    pub fn check_against_table(elements: &[WeylElement]) -> Result<()> {
        if elements.len() != WEYL_TABLE.len() {
            return Err(Error::Consistency(format!(
                "generated {} group elements, table lists {}",
                elements.len(),
                WEYL_TABLE.len()
            )));
        }
        for (name, length, img1, img2) in WEYL_TABLE {
            let el = elements.iter().find(|e| e.name() == name).ok_or_else(|| {
                Error::Consistency(format!("table element {name} was not generated"))
            })?;
            let expected = Mat2::from_columns(img1.into(), img2.into());
            if el.length() != length || el.matrix != expected {
                return Err(Error::Consistency(format!(
                    "element {name}: generated {:?} (length {}), table {:?} (length {length})",
                    el.matrix.rows,
                    el.length(),
                    expected.rows
                )));
            }
        }
        Ok(())
    }

    /// The twelve elements of the g2 Weyl group, generated once and validated
    /// against [`WEYL_TABLE`].
    pub fn weyl_group() -> &'static [WeylElement] {
        static GROUP: OnceLock<Vec<WeylElement>> = OnceLock::new();
        GROUP.get_or_init(|| {
            let group = generate_weyl_group(S1, S2, 12).expect("g2 reflections generate a finite group");
            check_against_table(&group).expect("generated g2 Weyl group matches the table");
            group
        })
    }

    /// Looks up a group element by its compact name (`"s2s1"`, `"(s1s2)^3"`, ...).
    pub fn element(name: &str) -> Option<&'static WeylElement> {
        weyl_group().iter().find(|e| e.name() == name)
    }

    /// `(2m+3n, m+2n)`.
    pub fn fund_to_root(w: FundCoord) -> RootCoord {
        RootCoord::new(2 * w.m() + 3 * w.n(), w.m() + 2 * w.n())
    }

    /// Inverse of [`fund_to_root`]; `None` when the weight is not dominant.
    pub fn root_to_fund(v: RootCoord) -> Option<FundCoord> {
        let m = 2 * v.c1 - 3 * v.c2;
        let n = 2 * v.c2 - v.c1;
        FundCoord::try_new(m, n).ok()
    }

    /// `σ(λ+ρ) - (μ+ρ)`, computed numerically from the group matrix.
    pub fn sigma_shift(sigma: &WeylElement, lambda: FundCoord, mu: FundCoord) -> Result<RootCoord> {
        let lr = fund_to_root(lambda).checked_add(RHO)?;
        let mr = fund_to_root(mu).checked_add(RHO)?;
        sigma.apply(lr)?.checked_sub(mr)
    }
}
