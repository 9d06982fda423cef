//! Hand-worked rank-3 computations for six of the defining relations, kept
//! step by step: for each `K_j` the chain lists the image after each factor,
//! rightmost factor first.

use std::fmt;

use num_bigint::BigInt;

use crate::artin::{evaluate, generator};
use crate::braid::BraidWord;
use crate::error::Result;
use crate::modring::Module;

const RANK: usize = 3;

pub struct GoldenSide {
    pub word: &'static str,
    /// `chains[j][s]`: image of `K_{j+1}` after `s + 1` factors.
    pub chains: [&'static [&'static str]; RANK],
}

pub struct GoldenRelation {
    pub name: &'static str,
    pub lhs: GoldenSide,
    pub rhs: GoldenSide,
}

pub const GOLDEN: [GoldenRelation; 6] = [
    GoldenRelation {
        name: "S1 S2 S1 = S2 S1 S2",
        lhs: GoldenSide {
            word: "s1 s2 s1",
            chains: [
                &[
                    "K1 + K2 - (x2^-1 > K1)",
                    "K1 + K2 + K3 - (x3^-1 > K2) - (x3^-1 > K1)",
                    "K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)",
                ],
                &[
                    "(x2^-1 > K1)",
                    "(x3^-1 > K1)",
                    "(x3^-1 > K1) + (x3^-1 > K2) - (x3^-1 x2^-1 > K1)",
                ],
                &["K3", "(x3^-1 > K2)", "(x3^-1 x2^-1 > K1)"],
            ],
        },
        rhs: GoldenSide {
            word: "s2 s1 s2",
            chains: [
                &[
                    "K1",
                    "K1 + K2 - (x2^-1 > K1)",
                    "K1 + K2 + K3 - (x3^-1 > K2) - (x3^-1 > K1)",
                ],
                &[
                    "K2 + K3 - (x3^-1 > K2)",
                    "(x2^-1 > K1) + K3 - (x3^-1 x2^-1 > K1)",
                    "(x3^-1 > K1) + (x3^-1 > K2) - (x3^-1 x2^-1 > K1)",
                ],
                &["(x3^-1 > K2)", "(x3^-1 x2^-1 > K1)", "(x3^-1 x2^-1 > K1)"],
            ],
        },
    },
    GoldenRelation {
        name: "R2 R1 S2 = S1 R2 R1",
        lhs: GoldenSide {
            word: "r2 r1 s2",
            chains: [
                &["K1", "K2", "K3"],
                &[
                    "K2 + K3 - (x3^-1 > K2)",
                    "K1 + K3 - (x3^-1 > K1)",
                    "K1 + K2 - (x2^-1 > K1)",
                ],
                &["(x3^-1 > K2)", "(x3^-1 > K1)", "(x2^-1 > K1)"],
            ],
        },
        rhs: GoldenSide {
            word: "s1 r2 r1",
            chains: [
                &["K2", "K3", "K3"],
                &["K1", "K1", "K1 + K2 - (x2^-1 > K1)"],
                &["K3", "K2", "(x2^-1 > K1)"],
            ],
        },
    },
    GoldenRelation {
        name: "S2 S1 R2 = R1 S2 S1",
        lhs: GoldenSide {
            word: "s2 s1 r2",
            chains: [
                &[
                    "K1",
                    "K1 + K2 - (x2^-1 > K1)",
                    "K1 + K2 + K3 - (x3^-1 > K2) - (x3^-1 > K1)",
                ],
                &["K3", "K3", "(x3^-1 > K2)"],
                &["K2", "(x2^-1 > K1)", "(x3^-1 > K1)"],
            ],
        },
        rhs: GoldenSide {
            word: "r1 s2 s1",
            chains: [
                &[
                    "K1 + K2 - (x2^-1 > K1)",
                    "K1 + K2 + K3 - (x3^-1 > K2) - (x3^-1 > K1)",
                    "K2 + K1 + K3 - (x3^-1 > K1) - (x3^-1 > K2)",
                ],
                &["(x2^-1 > K1)", "(x3^-1 > K1)", "(x3^-1 > K2)"],
                &["K3", "(x3^-1 > K2)", "(x3^-1 > K1)"],
            ],
        },
    },
    GoldenRelation {
        name: "T1 R1 = R1 T2",
        lhs: GoldenSide {
            word: "t1 r1",
            chains: [&["K2", "K2"], &["K1", "K1"], &["K3", "K3"]],
        },
        rhs: GoldenSide {
            word: "r1 t2",
            chains: [&["K1", "K2"], &["K2", "K1"], &["K3", "K3"]],
        },
    },
    GoldenRelation {
        name: "T1 S1 = S1 T2",
        lhs: GoldenSide {
            word: "t1 s1",
            chains: [
                &["K1 + K2 - (x2^-1 > K1)", "K1 + K2 - (x2^-1 > K1)"],
                &["(x2^-1 > K1)", "(x2^-1 > K1)"],
                &["K3", "K3"],
            ],
        },
        rhs: GoldenSide {
            word: "s1 t2",
            chains: [
                &["K1", "K1 + K2 - (x2^-1 > K1)"],
                &["K2", "(x2^-1 > K1)"],
                &["K3", "K3"],
            ],
        },
    },
    GoldenRelation {
        name: "T2 S1 = R1 S1^-1 R1 T1",
        lhs: GoldenSide {
            word: "t2 s1",
            chains: [
                &["K1 + K2 - (x2^-1 > K1)", "K1 + K2 - (x2 > K1)"],
                &["(x2^-1 > K1)", "(x2 > K1)"],
                &["K3", "K3"],
            ],
        },
        rhs: GoldenSide {
            word: "r1 s1^-1 r1 t1",
            chains: [
                &["K1", "K2", "K1 + K2 - (x1 > K2)", "K2 + K1 - (x2 > K1)"],
                &["K2", "K1", "(x1 > K2)", "(x2 > K1)"],
                &["K3", "K3", "K3", "K3"],
            ],
        },
    },
];

/// One compared step of a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenStep {
    pub relation: &'static str,
    pub word: &'static str,
    pub basis: usize,
    pub step: usize,
    pub expected: String,
    pub computed: String,
}

impl GoldenStep {
    pub fn ok(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Debug, Clone, Default)]
pub struct GoldenReport {
    pub steps: Vec<GoldenStep>,
    /// Relations whose two sides do not evaluate to the same automorphism.
    pub unequal_sides: Vec<&'static str>,
}

impl GoldenReport {
    pub fn all_ok(&self) -> bool {
        self.unequal_sides.is_empty() && self.steps.iter().all(GoldenStep::ok)
    }
}

impl fmt::Display for GoldenReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut last = "";
        for s in &self.steps {
            if s.relation != last {
                writeln!(f, "{}", s.relation)?;
                last = s.relation;
            }
            let status = if s.ok() { "ok  " } else { "FAIL" };
            write!(
                f,
                "  {status} {} : K{} step {} -> {}",
                s.word, s.basis, s.step, s.computed
            )?;
            if !s.ok() {
                write!(f, " (expected {})", s.expected)?;
            }
            writeln!(f)?;
        }
        for name in &self.unequal_sides {
            writeln!(f, "FAIL {name}: sides differ")?;
        }
        let passed = self.steps.iter().filter(|s| s.ok()).count();
        writeln!(f, "{passed}/{} golden steps reproduced", self.steps.len())
    }
}

fn run_side(relation: &'static str, side: &GoldenSide, report: &mut GoldenReport) -> Result<()> {
    let word = BraidWord::parse(side.word, RANK)?;
    let factors = word
        .tokens()
        .iter()
        .rev()
        .map(|t| {
            let g = generator::<BigInt>(t.kind, t.index, RANK)?;
            Ok(if t.exponent < 0 { g.inverse() } else { g })
        })
        .collect::<Result<Vec<_>>>()?;
    for (j, chain) in side.chains.iter().enumerate() {
        let mut current = Module::<BigInt>::basis(j + 1, RANK)?;
        for (step, (factor, expected)) in factors.iter().zip(chain.iter()).enumerate() {
            current = factor.forward().apply_f2(&current)?;
            let expected = Module::<BigInt>::parse(expected, RANK)?;
            report.steps.push(GoldenStep {
                relation,
                word: side.word,
                basis: j + 1,
                step: step + 1,
                expected: expected.to_string(),
                computed: current.to_string(),
            });
        }
    }
    Ok(())
}

/// Recomputes every chain and compares it term by term.
pub fn run_golden() -> Result<GoldenReport> {
    let mut report = GoldenReport::default();
    for rel in &GOLDEN {
        run_side(rel.name, &rel.lhs, &mut report)?;
        run_side(rel.name, &rel.rhs, &mut report)?;
        let lhs = evaluate::<BigInt>(&BraidWord::parse(rel.lhs.word, RANK)?)?;
        let rhs = evaluate::<BigInt>(&BraidWord::parse(rel.rhs.word, RANK)?)?;
        if lhs.forward() != rhs.forward() {
            report.unequal_sides.push(rel.name);
        }
    }
    Ok(report)
}
