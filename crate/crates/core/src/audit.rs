//! Grid audit of the case selection for g2 q-multiplicities.
//!
//! Of the 32 subsets of `{P, Q, R, S, T}`, eight occur as the set of
//! nontrivially contributing terms; the other 24 are forbidden. The audit
//! enumerates `(m, n, x, y)` over a cube and reports the observed subsets,
//! a witness tuple for each, and every tuple where the selected case
//! disagrees with the contributing terms or an impossible sign pattern shows up.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::qkwmf::{compute_abcdef, CaseData, CaseLabel, Signature};
use crate::rootsys::FundCoord;

/// The 24 forbidden subsets: eleven ruled out by a direct conflict between a
/// term's inclusion and exclusion conditions, thirteen by the sign-pattern
/// contradictions of [`IMPOSSIBLE_PATTERNS`].
pub const FORBIDDEN_SIGNATURES: [&str; 24] = [
    // direct conflicts
    "PQST", "PRST", "QRST", "PST", "PRS", "PQT", "QRS", "QRT", "PS", "PT", "QR",
    // sign-pattern contradictions
    "PRT", "PQS", "QST", "RST", "QS", "QT", "RS", "RT", "ST", "Q", "R", "S", "T",
];

/// A conjunction of sign conditions on `a..f` with no solution in ℕ⁴.
pub struct ImpossiblePattern {
    pub name: &'static str,
    pub description: &'static str,
    pub holds: fn(&CaseData) -> bool,
}

pub const IMPOSSIBLE_PATTERNS: [ImpossiblePattern; 6] = [
    ImpossiblePattern { name: "A", description: "e >= 0 and d < 0", holds: |c| c.e >= 0 && c.d < 0 },
    ImpossiblePattern { name: "B", description: "f >= 0 and c < 0", holds: |c| c.f >= 0 && c.c < 0 },
    ImpossiblePattern { name: "C", description: "c >= 0 and a < 0", holds: |c| c.c >= 0 && c.a < 0 },
    ImpossiblePattern { name: "D", description: "d >= 0 and b < 0", holds: |c| c.d >= 0 && c.b < 0 },
    ImpossiblePattern {
        name: "E",
        description: "a >= 0 and f >= 0 and d < 0",
        holds: |c| c.a >= 0 && c.f >= 0 && c.d < 0,
    },
    ImpossiblePattern { name: "F", description: "e >= 0 and c < 0", holds: |c| c.e >= 0 && c.c < 0 },
];

pub fn allowed_signatures() -> [Signature; 8] {
    CaseLabel::ALL.map(CaseLabel::signature)
}

pub fn forbidden_signatures() -> [Signature; 24] {
    FORBIDDEN_SIGNATURES.map(|s| Signature::parse(s).expect("valid signature literal"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// `(m, n, x, y)`.
    pub tuple: [u32; 4],
    pub signature: Signature,
    pub label: CaseLabel,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub grid_max: u32,
    pub observed_signatures: Vec<Signature>,
    pub counterexamples: Vec<Counterexample>,
    /// First tuple (in lexicographic order) realizing each observed signature.
    pub witnesses: BTreeMap<String, [u32; 4]>,
    pub signature_counts: BTreeMap<String, u64>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Number of tuples examined.
    pub fn cases(&self) -> u64 {
        self.signature_counts.values().sum()
    }
}

/// Audits every `(m, n, x, y) ∈ [0, max]⁴`.
pub fn audit_cases(max: u32) -> AuditReport {
    let allowed = allowed_signatures();
    let mut counts: BTreeMap<Signature, u64> = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            for x in 0..=max {
                for y in 0..=max {
                    let tuple = [m, n, x, y];
                    let case = compute_abcdef(FundCoord::new(m, n), FundCoord::new(x, y));
                    let sig = case.contributing();
                    *counts.entry(sig).or_default() += 1;
                    witnesses.entry(sig.to_string()).or_insert(tuple);
                    let mut flag = |reason: String| {
                        counterexamples.push(Counterexample { tuple, signature: sig, label: case.label, reason })
                    };
                    if !allowed.contains(&sig) {
                        flag(format!("signature {sig} is not one of the eight formulas"));
                    }
                    if sig != case.label.signature() {
                        flag(format!("case {} selected but terms {sig} contribute", case.label));
                    }
                    for p in &IMPOSSIBLE_PATTERNS {
                        if (p.holds)(&case) {
                            flag(format!("pattern {} ({}) holds", p.name, p.description));
                        }
                    }
                }
            }
        }
    }
    AuditReport {
        grid_max: max,
        observed_signatures: counts.keys().copied().collect(),
        counterexamples,
        witnesses,
        signature_counts: counts.iter().map(|(s, c)| (s.to_string(), *c)).collect(),
    }
}
