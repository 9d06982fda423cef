//! Every defining relation of the extended loop braid group, instantiated at
//! all admissible indices and checked through the representation.

use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::aggmorph::Morphism;
use crate::artin::evaluate_morphism;
use crate::braid::{BraidToken, BraidWord};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// Relation schemas, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Schema {
    /// σ_i σ_j = σ_j σ_i, |i − j| > 1
    SigmaCommute,
    /// σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}
    SigmaBraid,
    /// ρ_i ρ_j = ρ_j ρ_i, |i − j| > 1
    RhoCommute,
    /// ρ_i ρ_{i+1} ρ_i = ρ_{i+1} ρ_i ρ_{i+1}
    RhoBraid,
    /// ρ_i² = 1
    RhoInvolution,
    /// ρ_i σ_j = σ_j ρ_i, |i − j| > 1
    RhoSigmaCommute,
    /// ρ_{i+1} ρ_i σ_{i+1} = σ_i ρ_{i+1} ρ_i
    RhoRhoSigma,
    /// σ_{i+1} σ_i ρ_{i+1} = ρ_i σ_{i+1} σ_i
    SigmaSigmaRho,
    /// τ_i τ_j = τ_j τ_i, i ≠ j
    TauCommute,
    /// τ_i² = 1
    TauInvolution,
    /// σ_i τ_j = τ_j σ_i, |i − j| > 1
    SigmaTauCommute,
    /// ρ_i τ_j = τ_j ρ_i, |i − j| > 1
    RhoTauCommute,
    /// τ_i ρ_i = ρ_i τ_{i+1}
    TauRho,
    /// τ_i σ_i = σ_i τ_{i+1}
    TauSigma,
    /// τ_{i+1} σ_i = ρ_i σ_i⁻¹ ρ_i τ_i
    TauSigmaFlip,
}

impl Schema {
    pub const ALL: [Schema; 15] = [
        Schema::SigmaCommute,
        Schema::SigmaBraid,
        Schema::RhoCommute,
        Schema::RhoBraid,
        Schema::RhoInvolution,
        Schema::RhoSigmaCommute,
        Schema::RhoRhoSigma,
        Schema::SigmaSigmaRho,
        Schema::TauCommute,
        Schema::TauInvolution,
        Schema::SigmaTauCommute,
        Schema::RhoTauCommute,
        Schema::TauRho,
        Schema::TauSigma,
        Schema::TauSigmaFlip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Schema::SigmaCommute => "sigma-commute",
            Schema::SigmaBraid => "sigma-braid",
            Schema::RhoCommute => "rho-commute",
            Schema::RhoBraid => "rho-braid",
            Schema::RhoInvolution => "rho-involution",
            Schema::RhoSigmaCommute => "rho-sigma-commute",
            Schema::RhoRhoSigma => "rho-rho-sigma",
            Schema::SigmaSigmaRho => "sigma-sigma-rho",
            Schema::TauCommute => "tau-commute",
            Schema::TauInvolution => "tau-involution",
            Schema::SigmaTauCommute => "sigma-tau-commute",
            Schema::RhoTauCommute => "rho-tau-commute",
            Schema::TauRho => "tau-rho",
            Schema::TauSigma => "tau-sigma",
            Schema::TauSigmaFlip => "tau-sigma-flip",
        }
    }

    /// Whether the schema only involves σ and ρ (a loop braid relation).
    pub fn is_loop_braid(self) -> bool {
        self <= Schema::SigmaSigmaRho
    }

    /// All admissible `(lhs, rhs)` token lists with their index tuples.
    fn instantiate(self, n: usize) -> Vec<(Vec<usize>, Vec<BraidToken>, Vec<BraidToken>)> {
        use BraidToken as B;
        let strands = 1..n; // σ_i, ρ_i
        let circles = 1..=n; // τ_j
        let far = |i: usize, j: usize| i.abs_diff(j) > 1;
        let mut out = Vec::new();
        match self {
            Schema::SigmaCommute | Schema::RhoCommute => {
                let g = if self == Schema::SigmaCommute {
                    B::sigma
                } else {
                    B::rho
                };
                for i in strands.clone() {
                    for j in (i + 1)..n {
                        if far(i, j) {
                            out.push((vec![i, j], vec![g(i), g(j)], vec![g(j), g(i)]));
                        }
                    }
                }
            }
            Schema::SigmaBraid | Schema::RhoBraid => {
                let g = if self == Schema::SigmaBraid {
                    B::sigma
                } else {
                    B::rho
                };
                for i in 1..n.saturating_sub(1) {
                    out.push((
                        vec![i],
                        vec![g(i), g(i + 1), g(i)],
                        vec![g(i + 1), g(i), g(i + 1)],
                    ));
                }
            }
            Schema::RhoInvolution => {
                for i in strands {
                    out.push((vec![i], vec![B::rho(i), B::rho(i)], vec![]));
                }
            }
            Schema::RhoSigmaCommute => {
                for i in strands.clone() {
                    for j in strands.clone() {
                        if far(i, j) {
                            out.push((
                                vec![i, j],
                                vec![B::rho(i), B::sigma(j)],
                                vec![B::sigma(j), B::rho(i)],
                            ));
                        }
                    }
                }
            }
            Schema::RhoRhoSigma => {
                for i in 1..n.saturating_sub(1) {
                    out.push((
                        vec![i],
                        vec![B::rho(i + 1), B::rho(i), B::sigma(i + 1)],
                        vec![B::sigma(i), B::rho(i + 1), B::rho(i)],
                    ));
                }
            }
            Schema::SigmaSigmaRho => {
                for i in 1..n.saturating_sub(1) {
                    out.push((
                        vec![i],
                        vec![B::sigma(i + 1), B::sigma(i), B::rho(i + 1)],
                        vec![B::rho(i), B::sigma(i + 1), B::sigma(i)],
                    ));
                }
            }
            Schema::TauCommute => {
                for i in circles.clone() {
                    for j in (i + 1)..=n {
                        out.push((
                            vec![i, j],
                            vec![B::tau(i), B::tau(j)],
                            vec![B::tau(j), B::tau(i)],
                        ));
                    }
                }
            }
            Schema::TauInvolution => {
                for i in circles {
                    out.push((vec![i], vec![B::tau(i), B::tau(i)], vec![]));
                }
            }
            Schema::SigmaTauCommute | Schema::RhoTauCommute => {
                let g = if self == Schema::SigmaTauCommute {
                    B::sigma
                } else {
                    B::rho
                };
                for i in strands.clone() {
                    for j in circles.clone() {
                        if far(i, j) {
                            out.push((vec![i, j], vec![g(i), B::tau(j)], vec![B::tau(j), g(i)]));
                        }
                    }
                }
            }
            Schema::TauRho | Schema::TauSigma => {
                let g = if self == Schema::TauRho {
                    B::rho
                } else {
                    B::sigma
                };
                for i in strands {
                    out.push((vec![i], vec![B::tau(i), g(i)], vec![g(i), B::tau(i + 1)]));
                }
            }
            Schema::TauSigmaFlip => {
                for i in strands {
                    out.push((
                        vec![i],
                        vec![B::tau(i + 1), B::sigma(i)],
                        vec![B::rho(i), B::sigma(i).inv(), B::rho(i), B::tau(i)],
                    ));
                }
            }
        }
        out
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One relation `lhs = rhs` at specific indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub schema: Schema,
    pub indices: Vec<usize>,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

impl RelationInstance {
    /// `lhs · rhs⁻¹`, trivial in the group.
    pub fn relator(&self) -> BraidWord {
        self.lhs
            .concat(&self.rhs.inverse())
            .expect("both sides share a rank")
    }

    fn index_label(&self) -> String {
        let names = ["i", "j"];
        self.indices
            .iter()
            .zip(names)
            .map(|(v, name)| format!("{name}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Every relation instance at rank `n`, sorted by schema then indices.
pub fn relation_instances(n: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for schema in Schema::ALL {
        for (indices, lhs, rhs) in schema.instantiate(n) {
            out.push(RelationInstance {
                schema,
                indices,
                lhs: BraidWord::new(n, lhs).expect("admissible indices"),
                rhs: BraidWord::new(n, rhs).expect("admissible indices"),
            });
        }
    }
    out
}

/// First generator on which the two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub generator: String,
    pub lhs_image: String,
    pub rhs_image: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationOutcome {
    pub instance: RelationInstance,
    pub counterexample: Option<Counterexample>,
}

impl RelationOutcome {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn first_difference<C: Coefficient>(a: &Morphism<C>, b: &Morphism<C>) -> Option<Counterexample> {
    let x = a
        .f1()
        .images()
        .iter()
        .zip(b.f1().images())
        .enumerate()
        .find(|(_, (u, v))| u != v)
        .map(|(i, (u, v))| Counterexample {
            generator: format!("x{}", i + 1),
            lhs_image: u.to_string(),
            rhs_image: v.to_string(),
        });
    x.or_else(|| {
        a.f2()
            .iter()
            .zip(b.f2())
            .enumerate()
            .find(|(_, (u, v))| u != v)
            .map(|(i, (u, v))| Counterexample {
                generator: format!("K{}", i + 1),
                lhs_image: u.to_string(),
                rhs_image: v.to_string(),
            })
    })
}

/// Checks one instance as an exact equality of morphisms of `M_n`.
pub fn check_instance<C: Coefficient>(instance: &RelationInstance) -> Result<RelationOutcome> {
    let lhs = evaluate_morphism::<C>(&instance.lhs)?;
    let rhs = evaluate_morphism::<C>(&instance.rhs)?;
    Ok(RelationOutcome {
        instance: instance.clone(),
        counterexample: first_difference(&lhs, &rhs),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub rank: usize,
    pub outcomes: Vec<RelationOutcome>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(RelationOutcome::holds)
    }

    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.holds()).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "all_hold": self.all_hold(),
            "relations": self.outcomes.iter().map(|o| {
                let mut v = json!({
                    "relation": o.instance.schema.name(),
                    "indices": o.instance.indices,
                    "lhs": o.instance.lhs.to_string(),
                    "rhs": o.instance.rhs.to_string(),
                    "holds": o.holds(),
                });
                if let Some(c) = &o.counterexample {
                    v["counterexample"] = json!({
                        "generator": c.generator,
                        "lhs": c.lhs_image,
                        "rhs": c.rhs_image,
                    });
                }
                v
            }).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let status = if o.holds() { "ok  " } else { "FAIL" };
            writeln!(
                f,
                "{status} {} [{}]: {} = {}",
                o.instance.schema,
                o.instance.index_label(),
                o.instance.lhs,
                o.instance.rhs
            )?;
            if let Some(c) = &o.counterexample {
                writeln!(
                    f,
                    "     {}: {} != {}",
                    c.generator, c.lhs_image, c.rhs_image
                )?;
            }
        }
        writeln!(
            f,
            "{}/{} relation instances hold at rank {}",
            self.passed(),
            self.outcomes.len(),
            self.rank
        )
    }
}

/// Checks every relation instance at rank `n`, in parallel. The report is
/// ordered by schema then index tuple regardless of scheduling.
pub fn verify_relations<C: Coefficient>(n: usize) -> Result<RelationReport> {
    if n < 2 {
        return Err(Error::RankTooSmall { rank: n, min: 2 });
    }
    let outcomes = relation_instances(n)
        .par_iter()
        .map(check_instance::<C>)
        .collect::<Result<Vec<_>>>()?;
    Ok(RelationReport { rank: n, outcomes })
}

/// Reports for every rank in `2..=max_rank`.
pub fn verify_up_to<C: Coefficient>(max_rank: usize) -> Result<Vec<RelationReport>> {
    (2..=max_rank).map(verify_relations::<C>).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::evaluate;
    use crate::modring::Module;
    use num_bigint::BigInt;

    #[test]
    fn rank_two_has_no_far_commutations() {
        let instances = relation_instances(2);
        for inst in &instances {
            assert!(!matches!(
                inst.schema,
                Schema::SigmaCommute
                    | Schema::RhoCommute
                    | Schema::RhoSigmaCommute
                    | Schema::SigmaTauCommute
                    | Schema::RhoTauCommute
                    | Schema::SigmaBraid
                    | Schema::RhoBraid
            ));
        }
        // ρ1², τ1², τ2², τ1τ2, and the three τ-mixing relations at i = 1
        assert_eq!(instances.len(), 7);
    }

    #[test]
    fn instance_counts_rank_four() {
        let count = |s: Schema| {
            relation_instances(4)
                .iter()
                .filter(|r| r.schema == s)
                .count()
        };
        assert_eq!(count(Schema::SigmaCommute), 1);
        assert_eq!(count(Schema::SigmaBraid), 2);
        assert_eq!(count(Schema::RhoSigmaCommute), 2);
        assert_eq!(count(Schema::TauCommute), 6);
        // (i, j) with i in 1..=3, j in 1..=4, |i-j| > 1: (1,3) (1,4) (2,4) (3,1)
        assert_eq!(count(Schema::SigmaTauCommute), 4);
        assert_eq!(count(Schema::TauSigmaFlip), 3);
    }

    #[test]
    fn tau_sigma_flip_images_rank_three() {
        let inst = relation_instances(3)
            .into_iter()
            .find(|r| r.schema == Schema::TauSigmaFlip && r.indices == [1])
            .unwrap();
        let expected = Module::<BigInt>::parse("K1 + K2 - (x2 > K1)", 3).unwrap();
        let lhs = evaluate::<BigInt>(&inst.lhs).unwrap();
        let rhs = evaluate::<BigInt>(&inst.rhs).unwrap();
        assert_eq!(lhs.forward().k_image(1), &expected);
        assert_eq!(rhs.forward().k_image(1), &expected);
    }

    #[test]
    fn sigma_sigma_rho_images_rank_three() {
        let inst = relation_instances(3)
            .into_iter()
            .find(|r| r.schema == Schema::SigmaSigmaRho)
            .unwrap();
        assert_eq!(inst.lhs.to_string(), "s2 s1 r2");
        assert_eq!(inst.rhs.to_string(), "r1 s2 s1");
        let expected = Module::<BigInt>::parse("(x3^-1 > K1)", 3).unwrap();
        for side in [&inst.lhs, &inst.rhs] {
            assert_eq!(
                evaluate::<BigInt>(side).unwrap().forward().k_image(3),
                &expected
            );
        }
    }

    #[test]
    fn all_relations_hold_rank_three() {
        let report = verify_relations::<BigInt>(3).unwrap();
        assert!(report.all_hold(), "{report}");
        assert!(report.to_string().ends_with(&format!(
            "{0}/{0} relation instances hold at rank 3\n",
            report.outcomes.len()
        )));
    }

    #[test]
    fn false_relation_yields_counterexample() {
        let inst = RelationInstance {
            schema: Schema::TauSigma,
            indices: vec![1],
            lhs: BraidWord::parse("t1 s1", 2).unwrap(),
            rhs: BraidWord::parse("s1 t1", 2).unwrap(),
        };
        let outcome = check_instance::<BigInt>(&inst).unwrap();
        let c = outcome.counterexample.unwrap();
        assert_eq!(c.generator, "x1");
        assert_eq!(c.lhs_image, "x2");
        assert_eq!(c.rhs_image, "x2^-1");
    }

    #[test]
    fn rank_below_two_rejected() {
        assert!(verify_relations::<BigInt>(1).is_err());
    }
}
