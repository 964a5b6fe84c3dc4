//! Kostant's partition function for g2 and its q-analog.
//!
//! Three independent evaluators:
//! - [`qpartition`]: nested sum over the multiplicities of the four non-simple
//!   roots, the simple-root multiplicities being forced.
//! - [`qpartition_bruteforce`]: explicit enumeration of [`PartitionWitness`]es.
//! - [`partition_tarski`]: piecewise quasi-polynomial closed forms at `q = 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoly::{MonomialCounter, Poly};
use crate::rootsys::g2_data::POSITIVE_ROOTS;
use crate::rootsys::RootCoord;
use crate::scalar::{self, exact_div, Coeff};

/// Multiplicities of the six positive roots in one expression of a weight, in
/// the order `α1, α2, α1+α2, 2α1+α2, 3α1+α2, 3α1+2α2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionWitness {
    pub counts: [u64; 6],
}

impl PartitionWitness {
    pub fn total_roots(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `Σ counts[i] · root[i]`.
    pub fn weight(&self) -> RootCoord {
        let (c1, c2) = self
            .counts
            .iter()
            .zip(POSITIVE_ROOTS)
            .fold((0i64, 0i64), |(a, b), (&k, r)| (a + k as i64 * r.c1, b + k as i64 * r.c2));
        RootCoord::new(c1, c2)
    }
}

fn degree_bound(v: RootCoord) -> Result<usize> {
    usize::try_from(scalar::add(v.c1, v.c2)?).map_err(|_| Error::Overflow("polynomial degree"))
}

/// `℘_q(c1 α1 + c2 α2)`; zero if either coordinate is negative, `1` at the origin.
pub fn qpartition<C: Coeff>(v: RootCoord) -> Result<Poly<C>> {
    if !v.is_nonnegative() {
        return Ok(Poly::zero());
    }
    let (m, n) = (v.c1, v.c2);
    let mut acc = MonomialCounter::with_max_degree(degree_bound(v)?)?;
    // i: 3α1+2α2, j: 3α1+α2, k: 2α1+α2, l: α1+α2
    for i in 0..=(m / 3).min(n / 2) {
        for j in 0..=((m - 3 * i) / 3).min(n - 2 * i) {
            for k in 0..=((m - 3 * i - 3 * j) / 2).min(n - 2 * i - j) {
                for l in 0..=(m - 3 * i - 3 * j - 2 * k).min(n - 2 * i - j - k) {
                    let z = m + n - 4 * i - 3 * j - 2 * k - l;
                    acc.bump(z as usize)?;
                }
            }
        }
    }
    Ok(acc.finish())
}

/// Every way of writing `v` as a nonnegative combination of the positive roots.
///
/// Loops run over each non-simple root with a bound taken from that root alone;
/// the leftover is checked directly and assigned to `α1`, `α2`.
pub fn witnesses(v: RootCoord) -> Vec<PartitionWitness> {
    let mut out = Vec::new();
    if !v.is_nonnegative() {
        return out;
    }
    let [_, _, r3, r4, r5, r6] = POSITIVE_ROOTS;
    let fits = |rest: RootCoord, r: RootCoord, k: i64| rest.c1 - k * r.c1 >= 0 && rest.c2 - k * r.c2 >= 0;
    let take = |rest: RootCoord, r: RootCoord, k: i64| RootCoord::new(rest.c1 - k * r.c1, rest.c2 - k * r.c2);
    let mut n6 = 0;
    while fits(v, r6, n6) {
        let rest6 = take(v, r6, n6);
        let mut n5 = 0;
        while fits(rest6, r5, n5) {
            let rest5 = take(rest6, r5, n5);
            let mut n4 = 0;
            while fits(rest5, r4, n4) {
                let rest4 = take(rest5, r4, n4);
                let mut n3 = 0;
                while fits(rest4, r3, n3) {
                    let rest3 = take(rest4, r3, n3);
                    let counts = [rest3.c1, rest3.c2, n3, n4, n5, n6].map(|c| c as u64);
                    out.push(PartitionWitness { counts });
                    n3 += 1;
                }
                n4 += 1;
            }
            n5 += 1;
        }
        n6 += 1;
    }
    out
}

/// `℘_q(v)` by enumerating witnesses and summing `q^(total roots)`.
pub fn qpartition_bruteforce<C: Coeff>(v: RootCoord) -> Result<Poly<C>> {
    if !v.is_nonnegative() {
        return Ok(Poly::zero());
    }
    let mut acc = MonomialCounter::with_max_degree(degree_bound(v)?)?;
    for w in witnesses(v) {
        debug_assert_eq!(w.weight(), v);
        acc.bump(w.total_roots() as usize)?;
    }
    Ok(acc.finish())
}

fn check_tarski_arg(k: i64) -> Result<()> {
    if k < -2 {
        return Err(Error::Domain(format!("Tarski quasi-polynomials are defined for k >= -2, got {k}")));
    }
    Ok(())
}

/// Tarski's `g(k)`, one quartic per residue of `k` mod 6, divided by 432.
pub fn tarski_g(k: i64) -> Result<i64> {
    check_tarski_arg(k)?;
    use scalar::{add, mul};
    let sq = |a: i64| mul(a, a);
    let numerator = match k.rem_euclid(6) {
        // (k+6)(k³+14k²+54k+72)
        0 => mul(k + 6, add(add(mul(sq(k)?, k)?, mul(14, sq(k)?)?)?, add(mul(54, k)?, 72)?)?)?,
        // (k+5)²(k²+10k+13)
        1 => mul(sq(k + 5)?, add(sq(k)?, add(mul(10, k)?, 13)?)?)?,
        // (k+4)(k³+16k²+74k+68)
        2 => mul(k + 4, add(add(mul(sq(k)?, k)?, mul(16, sq(k)?)?)?, add(mul(74, k)?, 68)?)?)?,
        // (k+3)²(k+5)(k+9)
        3 => mul(mul(sq(k + 3)?, k + 5)?, k + 9)?,
        // (k+2)(k+8)(k²+10k+22)
        4 => mul(mul(k + 2, k + 8)?, add(sq(k)?, add(mul(10, k)?, 22)?)?)?,
        // (k+1)(k+5)(k+7)²
        _ => mul(mul(k + 1, k + 5)?, sq(k + 7)?)?,
    };
    exact_div(numerator, 432, "tarski g")
}

/// Tarski's `h(k)`, one quartic per parity of `k`, divided by 48.
pub fn tarski_h(k: i64) -> Result<i64> {
    check_tarski_arg(k)?;
    use scalar::{add, mul};
    let numerator = if k.rem_euclid(2) == 0 {
        // (k+2)(k+4)(k²+6k+6)
        mul(mul(k + 2, k + 4)?, add(mul(k, k)?, add(mul(6, k)?, 6)?)?)?
    } else {
        // (k+1)(k+3)²(k+5)
        mul(mul(k + 1, mul(k + 3, k + 3)?)?, k + 5)?
    };
    exact_div(numerator, 48, "tarski h")
}

/// The five overlapping regions of the `(m, n)` quadrant used by the Tarski formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TarskiRegion {
    /// `m ≤ n`
    A,
    /// `n ≤ m ≤ 3n/2`
    B,
    /// `3n/2 ≤ m ≤ 2n`
    C,
    /// `2n ≤ m ≤ 3n`
    D,
    /// `3n ≤ m`
    E,
}

impl TarskiRegion {
    pub const ALL: [TarskiRegion; 5] = [Self::A, Self::B, Self::C, Self::D, Self::E];

    pub fn contains(self, m: i64, n: i64) -> bool {
        match self {
            Self::A => m <= n,
            Self::B => n <= m && 2 * m <= 3 * n,
            Self::C => 3 * n <= 2 * m && m <= 2 * n,
            Self::D => 2 * n <= m && m <= 3 * n,
            Self::E => 3 * n <= m,
        }
    }

    /// Regions containing `(m, n)`; more than one on a boundary.
    pub fn containing(m: i64, n: i64) -> Vec<TarskiRegion> {
        Self::ALL.into_iter().filter(|r| r.contains(m, n)).collect()
    }

    /// This region's formula at `(m, n)`, which must lie in the region.
    pub fn evaluate(self, m: i64, n: i64) -> Result<i64> {
        if m < 0 || n < 0 || !self.contains(m, n) {
            return Err(Error::Domain(format!("({m},{n}) is not in Tarski region {self:?}")));
        }
        use scalar::{add, sub};
        match self {
            Self::A => tarski_g(m),
            Self::B => sub(tarski_g(m)?, tarski_h(m - n - 1)?),
            Self::C => add(sub(tarski_h(n)?, tarski_g(3 * n - m - 1)?)?, tarski_h(2 * n - m - 2)?),
            // h(n); with h(m) this region disagrees with enumeration.
            Self::D => sub(tarski_h(n)?, tarski_g(3 * n - m - 1)?),
            Self::E => tarski_h(n),
        }
    }
}

/// `℘(v)` from the Tarski closed forms, taking the first region (in order
/// `A..E`) that contains `v`. Zero when a coordinate is negative.
pub fn partition_tarski(v: RootCoord) -> Result<i64> {
    if !v.is_nonnegative() {
        return Ok(0);
    }
    let region = TarskiRegion::ALL
        .into_iter()
        .find(|r| r.contains(v.c1, v.c2))
        .expect("the five regions cover the quadrant");
    region.evaluate(v.c1, v.c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;

    fn rc(c1: i64, c2: i64) -> RootCoord {
        RootCoord::new(c1, c2)
    }

    /// Independent count of `℘(v)` by dynamic programming over the roots,
    /// unbounded-knapsack style.
    fn knapsack_count(v: RootCoord) -> i64 {
        if !v.is_nonnegative() {
            return 0;
        }
        let (w, h) = (v.c1 as usize + 1, v.c2 as usize + 1);
        let mut table = vec![0i64; w * h];
        table[0] = 1;
        for r in POSITIVE_ROOTS {
            let (dr1, dr2) = (r.c1 as usize, r.c2 as usize);
            for a in dr1..w {
                for b in dr2..h {
                    table[a * h + b] += table[(a - dr1) * h + (b - dr2)];
                }
            }
        }
        table[w * h - 1]
    }

    #[test]
    fn qpartition_examples() {
        assert_eq!(qpartition::<i64>(rc(3, 2)).unwrap(), QPoly::from_coeffs(vec![0, 1, 2, 2, 1, 1]));
        assert_eq!(qpartition::<i64>(rc(0, 0)).unwrap(), QPoly::one());
        assert_eq!(qpartition::<i64>(rc(1, 1)).unwrap(), QPoly::from_coeffs(vec![0, 1, 1]));
        assert_eq!(qpartition::<i64>(rc(-1, 5)).unwrap(), QPoly::zero());
        assert_eq!(qpartition::<i64>(rc(3, 0)).unwrap(), QPoly::monomial(3));
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(qpartition_bruteforce::<i64>(rc(2, 2)).unwrap(), QPoly::from_coeffs(vec![0, 0, 2, 1, 1]));
        assert_eq!(qpartition_bruteforce::<i64>(rc(0, 1)).unwrap(), QPoly::monomial(1));
        assert_eq!(qpartition_bruteforce::<i64>(rc(5, -1)).unwrap(), QPoly::zero());
        // ℘_q(7α1+4α2), frozen from the enumerator.
        let oracle = qpartition_bruteforce::<i64>(rc(7, 4)).unwrap();
        assert_eq!(oracle.coeffs(), &[0, 0, 0, 3, 6, 7, 5, 5, 3, 2, 1, 1]);
        assert_eq!(qpartition::<i64>(rc(7, 4)).unwrap(), oracle);
    }

    #[test]
    fn witnesses_reconstruct_their_weight() {
        for v in [rc(0, 0), rc(3, 2), rc(9, 5), rc(12, 1)] {
            let ws = witnesses(v);
            assert_eq!(ws.len() as i64, knapsack_count(v));
            for w in ws {
                assert_eq!(w.weight(), v);
            }
        }
    }

    #[test]
    fn lowest_degree_is_minimal_root_count() {
        for m in 0..=15 {
            for n in 0..=15 {
                let v = rc(m, n);
                let p = qpartition::<i64>(v).unwrap();
                let min = witnesses(v).iter().map(|w| w.total_roots()).min().unwrap();
                assert_eq!(p.low_degree(), Some(min as usize), "{v}");
                assert!(p.is_nonnegative());
            }
        }
    }

    #[test]
    fn tarski_g_h_values() {
        assert_eq!(tarski_g(0).unwrap(), 1);
        assert_eq!(tarski_g(1).unwrap(), 2);
        assert_eq!(tarski_g(2).unwrap(), 4);
        assert_eq!(tarski_g(3).unwrap(), 8);
        assert_eq!(tarski_h(0).unwrap(), 1);
        assert_eq!(tarski_h(-1).unwrap(), 0);
        assert_eq!(tarski_g(-1).unwrap(), 0);
        assert_eq!(tarski_g(-2).unwrap(), 0);
        assert_eq!(tarski_h(-2).unwrap(), 0);
        assert!(matches!(tarski_g(-3), Err(Error::Domain(_))));
        assert!(matches!(tarski_h(-7), Err(Error::Domain(_))));
    }

    #[test]
    fn tarski_h2_matches_enumeration() {
        // h(n) = ℘(mα1 + nα2) whenever m ≥ 3n; the enumerator fixes h(2).
        let oracle = knapsack_count(rc(6, 2));
        assert_eq!(oracle, 11);
        assert_eq!(tarski_h(2).unwrap(), oracle);
    }

    #[test]
    fn tarski_g_h_are_partition_counts() {
        // g(k) = ℘(kα1 + kα2) and h(k) = ℘(3kα1 + kα2), for every residue class.
        for k in 0..=30 {
            assert_eq!(tarski_g(k).unwrap(), knapsack_count(rc(k, k)), "g({k})");
            assert_eq!(tarski_h(k).unwrap(), knapsack_count(rc(3 * k, k)), "h({k})");
        }
    }

    #[test]
    fn tarski_examples() {
        assert_eq!(partition_tarski(rc(3, 2)).unwrap(), 7);
        assert_eq!(partition_tarski(rc(2, 2)).unwrap(), 4);
        assert_eq!(partition_tarski(rc(3, 0)).unwrap(), 1);
        assert_eq!(partition_tarski(rc(-3, 0)).unwrap(), 0);
        assert_eq!(TarskiRegion::containing(3, 2), vec![TarskiRegion::B, TarskiRegion::C]);
    }

    #[test]
    fn tarski_regions_agree_with_knapsack() {
        for m in 0..=40 {
            for n in 0..=40 {
                let expected = knapsack_count(rc(m, n));
                for r in TarskiRegion::containing(m, n) {
                    assert_eq!(r.evaluate(m, n).unwrap(), expected, "region {r:?} at ({m},{n})");
                }
            }
        }
    }

    #[test]
    fn region_evaluate_rejects_outside_points() {
        assert!(TarskiRegion::E.evaluate(1, 1).is_err());
        assert!(TarskiRegion::A.evaluate(-1, 1).is_err());
    }

    #[test]
    fn support_is_contiguous() {
        for m in 0..=25 {
            for n in 0..=25 {
                let p = qpartition::<i64>(rc(m, n)).unwrap();
                let lo = p.low_degree().unwrap();
                assert!(p.coeffs()[lo..].iter().all(|&c| c > 0), "gap in support at ({m},{n})");
            }
        }
    }

    #[test]
    fn wide_coefficients_agree() {
        let narrow = qpartition::<i64>(rc(20, 13)).unwrap();
        let wide = qpartition::<i128>(rc(20, 13)).unwrap();
        assert_eq!(wide, narrow.convert::<i128>().unwrap());
    }

    #[test]
    fn narrow_coefficients_overflow_loudly() {
        let err = qpartition::<i8>(rc(30, 20)).unwrap_err();
        assert!(err.is_overflow());
    }
}
