//! Decision procedures for the compactly supported homeomorphism property
//! (CSHP) on the ordinal fragment: single ordinal spaces, finite products,
//! and binary coproducts.
//!
//! Every verdict names the rule it was decided by and, for every negative
//! verdict, carries machine-checkable witnesses (the cardinal κ, the
//! cofinality τ, the offending factor indices, or the sum split used).

use std::fmt;

use thiserror::Error;

use crate::arith::{add, cofinality, is_regular_uncountable, successor};
use crate::term::{OrdinalClass, OrdinalTerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CshpError {
    #[error("0 denotes the empty space; CSHP is decided for ordinals ≥ 1 only")]
    ZeroSpace,
    #[error("a product needs at least one factor")]
    EmptyProduct,
    #[error("factor {index} is 0; a zero factor collapses the product to the empty space")]
    ZeroFactor { index: usize },
    #[error("summand {index} is 0; coproduct summands must be ≥ 1")]
    ZeroSummand { index: usize },
}

/// The rule a verdict was decided by. `tag()` is the stable string used in
/// text and JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictRule {
    /// The space is compact, and every homeomorphism of a compact space is
    /// compactly supported.
    Compact,
    /// Positive clause of the product criterion: all limit factors equal one
    /// uncountable regular cardinal κ and all successor factors are ≤ κ.
    TheoremAPositive,
    /// Negative clause of the product criterion.
    TheoremANegative,
    /// A limit with CSHP must be an uncountable regular cardinal; fails via
    /// the fixed-point split τ + λ = λ.
    Theorem51,
    /// Sum rule: α + ξ with ξ a positive limit and α ≥ cf(ξ) fails CSHP.
    Corollary45,
    /// Coproduct clause (a): both summands are successors.
    Corollary52a,
    /// Coproduct clause (b): the larger summand is an uncountable regular
    /// cardinal and the smaller equals it or is a successor.
    Corollary52b,
    /// An infinite discrete clopen subspace rules CSHP out.
    Lemma24b,
}

impl VerdictRule {
    pub fn tag(&self) -> &'static str {
        match self {
            VerdictRule::Compact => "compact",
            VerdictRule::TheoremAPositive => "theorem-a-positive",
            VerdictRule::TheoremANegative => "theorem-a-negative",
            VerdictRule::Theorem51 => "theorem-5.1",
            VerdictRule::Corollary45 => "corollary-4.5",
            VerdictRule::Corollary52a => "corollary-5.2a",
            VerdictRule::Corollary52b => "corollary-5.2b",
            VerdictRule::Lemma24b => "lemma-2.4b",
        }
    }
}

impl fmt::Display for VerdictRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A sum split `whole = prefix + tail` used as a negative witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSplit {
    pub prefix: OrdinalTerm,
    pub tail: OrdinalTerm,
}

/// Witness data accompanying a verdict. Offending factor indices refer to
/// positions in the caller's input list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerdictWitnesses {
    pub kappa: Option<OrdinalTerm>,
    pub tau: Option<OrdinalTerm>,
    pub offending_factors: Vec<usize>,
    pub decomposition: Option<SumSplit>,
}

/// Outcome of a CSHP decision: the boolean, the rule, optional witnesses
/// (always present when `has_cshp` is false), and a prose narrative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CshpVerdict {
    pub has_cshp: bool,
    pub rule: VerdictRule,
    pub witnesses: Option<VerdictWitnesses>,
    pub narrative: String,
}

/// Decides CSHP for the ordinal space `[0, λ)` with the order topology.
///
/// Successors are compact; a limit has CSHP exactly when it is an uncountable
/// regular cardinal. Negative verdicts split by cofinality: countable
/// cofinality yields an infinite discrete clopen subspace, and uncountable
/// cofinality yields a sum split violating the sum rule.
pub fn decide_ordinal(lambda: &OrdinalTerm) -> Result<CshpVerdict, CshpError> {
    match lambda.classify() {
        OrdinalClass::Zero => Err(CshpError::ZeroSpace),
        OrdinalClass::Successor => Ok(CshpVerdict {
            has_cshp: true,
            rule: VerdictRule::Compact,
            witnesses: None,
            narrative: format!(
                "{lambda} is a successor ordinal, so the space [0, {lambda}) is compact \
                 and every homeomorphism of it is compactly supported."
            ),
        }),
        OrdinalClass::Limit => Ok(decide_limit_ordinal(lambda)),
    }
}

fn decide_limit_ordinal(lambda: &OrdinalTerm) -> CshpVerdict {
    if is_regular_uncountable(lambda) {
        return CshpVerdict {
            has_cshp: true,
            rule: VerdictRule::TheoremAPositive,
            witnesses: Some(VerdictWitnesses {
                kappa: Some(lambda.clone()),
                ..VerdictWitnesses::default()
            }),
            narrative: format!(
                "{lambda} is an uncountable regular cardinal; such ordinal spaces have CSHP \
                 (the one-factor positive case of the product criterion)."
            ),
        };
    }
    let tau = cofinality(lambda);
    if tau == OrdinalTerm::omega() {
        // Three sample isolated points cofinal in λ illustrate the infinite
        // discrete clopen subspace.
        let points: Vec<String> = (0..3u64)
            .map(|n| {
                let p = crate::arith::canonical_cofinal(lambda, &OrdinalTerm::nat(n))
                    .expect("λ is a limit and n < ω = cf(λ)");
                successor(&p).to_string()
            })
            .collect();
        return CshpVerdict {
            has_cshp: false,
            rule: VerdictRule::Lemma24b,
            witnesses: Some(VerdictWitnesses {
                tau: Some(tau),
                ..VerdictWitnesses::default()
            }),
            narrative: format!(
                "{lambda} has countable cofinality: the isolated points {}, {}, {}, … \
                 (successors of a canonical cofinal sequence) form an infinite discrete \
                 clopen subspace, which rules CSHP out (lemma-2.4b).",
                points[0], points[1], points[2]
            ),
        };
    }
    // Uncountable cofinality. A single summand with coefficient 1 is a power
    // of ω that is not a cardinal; anything else yields a sum split directly
    // from its normal form.
    let cnf = lambda.cnf();
    let is_monic = cnf.summands.len() == 1 && cnf.summands[0].coefficient == 1u32.into();
    if is_monic {
        let split = SumSplit {
            prefix: tau.clone(),
            tail: lambda.clone(),
        };
        debug_assert_eq!(add(&split.prefix, &split.tail), *lambda);
        CshpVerdict {
            has_cshp: false,
            rule: VerdictRule::Theorem51,
            witnesses: Some(VerdictWitnesses {
                tau: Some(tau.clone()),
                decomposition: Some(split),
                ..VerdictWitnesses::default()
            }),
            narrative: format!(
                "{lambda} is a power of ω with uncountable cofinality τ = {tau}, but it is \
                 not a regular uncountable cardinal: τ < {lambda} and τ + {lambda} = {lambda}, \
                 so the split (prefix τ, tail {lambda}) already violates the sum rule \
                 (corollary-4.5 shape: prefix ≥ cf(tail)); hence no CSHP (theorem-5.1)."
            ),
        }
    } else {
        // Drop one copy of the last summand: λ = prefix + ω^{last exponent}.
        let last = cnf.summands.last().expect("limits are non-zero").clone();
        let xi = OrdinalTerm::omega_pow(&last.exponent);
        let mut items: Vec<(OrdinalTerm, num_bigint::BigUint)> = cnf
            .summands
            .iter()
            .map(|s| (s.exponent.clone(), s.coefficient.clone()))
            .collect();
        let last_index = items.len() - 1;
        items[last_index].1 -= 1u32;
        let prefix =
            crate::arith::from_summands(items.into_iter().filter(|(_, c)| c > &0u32.into()));
        let tau_xi = cofinality(&xi);
        let split = SumSplit {
            prefix: prefix.clone(),
            tail: xi.clone(),
        };
        debug_assert_eq!(add(&split.prefix, &split.tail), *lambda);
        CshpVerdict {
            has_cshp: false,
            rule: VerdictRule::Corollary45,
            witnesses: Some(VerdictWitnesses {
                tau: Some(tau_xi.clone()),
                decomposition: Some(split),
                ..VerdictWitnesses::default()
            }),
            narrative: format!(
                "{lambda} splits as {prefix} + {xi} by dropping one copy of its last normal-form \
                 summand; the tail {xi} is a positive limit with cf({xi}) = {tau_xi} ≤ {prefix}, \
                 so the sum rule applies and CSHP fails (corollary-4.5)."
            ),
        }
    }
}

/// Decides CSHP for a finite product of ordinal spaces (given as factors,
/// each ≥ 1). The product has CSHP exactly when either no factor is a limit
/// (compactness) or there is an uncountable regular cardinal κ with every
/// limit factor equal to κ and every successor factor ≤ κ.
pub fn decide_product(factors: &[OrdinalTerm]) -> Result<CshpVerdict, CshpError> {
    if factors.is_empty() {
        return Err(CshpError::EmptyProduct);
    }
    for (index, f) in factors.iter().enumerate() {
        if f.is_zero() {
            return Err(CshpError::ZeroFactor { index });
        }
    }
    let limit_indices: Vec<usize> = (0..factors.len())
        .filter(|&i| factors[i].is_limit())
        .collect();
    if limit_indices.is_empty() {
        return Ok(CshpVerdict {
            has_cshp: true,
            rule: VerdictRule::Compact,
            witnesses: None,
            narrative: "every factor is a successor ordinal, so the product is compact \
                        and has CSHP."
                .to_string(),
        });
    }
    let kappa_index = *limit_indices
        .iter()
        .min_by(|&&i, &&j| factors[i].cmp(&factors[j]))
        .expect("at least one limit factor");
    let kappa = &factors[kappa_index];
    if !is_regular_uncountable(kappa) {
        let inner = decide_limit_ordinal(kappa);
        let mut witnesses = inner.witnesses.unwrap_or_default();
        witnesses.kappa = Some(kappa.clone());
        witnesses.offending_factors = vec![kappa_index];
        return Ok(CshpVerdict {
            has_cshp: false,
            rule: VerdictRule::TheoremANegative,
            witnesses: Some(witnesses),
            narrative: format!(
                "the smallest limit factor {kappa} (factor {kappa_index}) embeds as a clopen \
                 subspace of the product, and it fails CSHP on its own: {}",
                inner.narrative
            ),
        });
    }
    for &j in &limit_indices {
        if factors[j] != *kappa {
            return Ok(CshpVerdict {
                has_cshp: false,
                rule: VerdictRule::TheoremANegative,
                witnesses: Some(VerdictWitnesses {
                    kappa: Some(kappa.clone()),
                    tau: Some(kappa.clone()),
                    offending_factors: vec![kappa_index, j],
                    decomposition: None,
                }),
                narrative: format!(
                    "limit factors must all equal κ = {kappa}, but factor {j} is {}; since \
                     κ + 1 ≤ {}, the clopen subspace (κ+1) × κ fails the product criterion \
                     (theorem-B with Y = κ+1, Z = κ, τ = κ).",
                    factors[j], factors[j]
                ),
            });
        }
    }
    for (j, f) in factors.iter().enumerate() {
        if f.is_successor() && *f > *kappa {
            return Ok(CshpVerdict {
                has_cshp: false,
                rule: VerdictRule::TheoremANegative,
                witnesses: Some(VerdictWitnesses {
                    kappa: Some(kappa.clone()),
                    tau: Some(kappa.clone()),
                    offending_factors: vec![kappa_index, j],
                    decomposition: None,
                }),
                narrative: format!(
                    "successor factor {f} (factor {j}) exceeds κ = {kappa}; since κ + 1 ≤ {f}, \
                     the clopen subspace (κ+1) × κ fails the product criterion \
                     (theorem-B with Y = κ+1, Z = κ, τ = κ)."
                ),
            });
        }
    }
    Ok(CshpVerdict {
        has_cshp: true,
        rule: VerdictRule::TheoremAPositive,
        witnesses: Some(VerdictWitnesses {
            kappa: Some(kappa.clone()),
            ..VerdictWitnesses::default()
        }),
        narrative: format!(
            "all limit factors equal the uncountable regular cardinal κ = {kappa} and every \
             successor factor is ≤ κ, so the product has CSHP."
        ),
    })
}

/// Decides CSHP for the disjoint union of two ordinal spaces (summands ≥ 1).
/// Positive exactly when (a) both summands are successors, or (b) the larger
/// is an uncountable regular cardinal and the smaller equals it or is a
/// successor.
pub fn decide_coproduct(alpha: &OrdinalTerm, beta: &OrdinalTerm) -> Result<CshpVerdict, CshpError> {
    if alpha.is_zero() {
        return Err(CshpError::ZeroSummand { index: 0 });
    }
    if beta.is_zero() {
        return Err(CshpError::ZeroSummand { index: 1 });
    }
    // Normalise to a ≤ b, remembering each side's position in the input.
    let (a, b, a_index, b_index) = if alpha <= beta {
        (alpha, beta, 0usize, 1usize)
    } else {
        (beta, alpha, 1usize, 0usize)
    };

    // Clopen heredity: a summand failing alone sinks the coproduct.
    for (side, index) in [(a, a_index), (b, b_index)] {
        let verdict = decide_ordinal(side)?;
        if !verdict.has_cshp {
            let mut witnesses = verdict.witnesses.unwrap_or_default();
            witnesses.offending_factors = vec![index];
            return Ok(CshpVerdict {
                has_cshp: false,
                rule: verdict.rule,
                witnesses: Some(witnesses),
                narrative: format!(
                    "summand {index} ({side}) is clopen in the coproduct and fails CSHP \
                     on its own: {}",
                    verdict.narrative
                ),
            });
        }
    }

    // Both summands pass individually, so each is a successor or an
    // uncountable regular cardinal.
    if a.is_successor() && b.is_successor() {
        return Ok(CshpVerdict {
            has_cshp: true,
            rule: VerdictRule::Corollary52a,
            witnesses: None,
            narrative: format!(
                "both summands ({a} and {b}) are successor ordinals, so the coproduct is \
                 compact and has CSHP (clause a)."
            ),
        });
    }
    if is_regular_uncountable(b) {
        if a == b {
            return Ok(CshpVerdict {
                has_cshp: true,
                rule: VerdictRule::Corollary52b,
                witnesses: Some(VerdictWitnesses {
                    kappa: Some(b.clone()),
                    ..VerdictWitnesses::default()
                }),
                narrative: format!(
                    "both summands equal the uncountable regular cardinal {b}; the coproduct \
                     is homeomorphic to {b} × 2, which has CSHP by the product criterion \
                     (clause b)."
                ),
            });
        }
        if a.is_successor() {
            return Ok(CshpVerdict {
                has_cshp: true,
                rule: VerdictRule::Corollary52b,
                witnesses: Some(VerdictWitnesses {
                    kappa: Some(b.clone()),
                    ..VerdictWitnesses::default()
                }),
                narrative: format!(
                    "{a} is a successor and {b} is an uncountable regular cardinal, so the \
                     coproduct is homeomorphic to {a} + {b} = {b}, which has CSHP (clause b)."
                ),
            });
        }
    }
    // Remaining case: a is an uncountable regular cardinal with a < b.
    let tau = cofinality(a);
    let double = add(a, a);
    let split = SumSplit {
        prefix: a.clone(),
        tail: a.clone(),
    };
    Ok(CshpVerdict {
        has_cshp: false,
        rule: VerdictRule::Corollary45,
        witnesses: Some(VerdictWitnesses {
            kappa: None,
            tau: Some(tau.clone()),
            offending_factors: vec![a_index, b_index],
            decomposition: Some(split),
        }),
        narrative: format!(
            "neither clause applies: {a} is an uncountable regular cardinal below {b}, so \
             {a} ⨿ ({a}+1) ≅ {double} sits as a clopen subspace of the coproduct; the sum \
             {a} + {a} has prefix ≥ cf(tail) = {tau} with a positive limit tail, violating \
             the sum rule (corollary-4.5, whose proof instantiates the coproduct criterion \
             theorem-C with Y = {}, Z = {a}).",
            successor(&tau)
        ),
    })
}

/// Renders a verdict as a deterministic multi-line report: boolean, rule tag,
/// witnesses, narrative.
pub fn explain(v: &CshpVerdict) -> String {
    let mut out = String::new();
    out.push_str(if v.has_cshp {
        "CSHP: yes\n"
    } else {
        "CSHP: no\n"
    });
    out.push_str(&format!("rule: {}\n", v.rule.tag()));
    if let Some(w) = &v.witnesses {
        if let Some(k) = &w.kappa {
            out.push_str(&format!("kappa: {k}\n"));
        }
        if let Some(t) = &w.tau {
            out.push_str(&format!("tau: {t}\n"));
        }
        if !w.offending_factors.is_empty() {
            let list: Vec<String> = w.offending_factors.iter().map(|i| i.to_string()).collect();
            out.push_str(&format!("offending factors: {}\n", list.join(", ")));
        }
        if let Some(d) = &w.decomposition {
            out.push_str(&format!(
                "decomposition: prefix {} + tail {}\n",
                d.prefix, d.tail
            ));
        }
    }
    out.push_str(&v.narrative);
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::left_subtract;

    fn parse(s: &str) -> OrdinalTerm {
        crate::parse::parse(s).unwrap()
    }

    fn decide(s: &str) -> CshpVerdict {
        decide_ordinal(&parse(s)).unwrap()
    }

    #[test]
    fn zero_is_rejected_everywhere() {
        assert_eq!(decide_ordinal(&parse("0")), Err(CshpError::ZeroSpace));
        assert_eq!(decide_product(&[]), Err(CshpError::EmptyProduct));
        assert_eq!(
            decide_product(&[parse("w"), parse("0")]),
            Err(CshpError::ZeroFactor { index: 1 })
        );
        assert_eq!(
            decide_coproduct(&parse("0"), &parse("w")),
            Err(CshpError::ZeroSummand { index: 0 })
        );
    }

    #[test]
    fn successors_are_compact() {
        for s in ["1", "5", "w + 1", "w_1 + 1", "w^w + 3"] {
            let v = decide(s);
            assert!(v.has_cshp, "{s}");
            assert_eq!(v.rule, VerdictRule::Compact);
        }
    }

    #[test]
    fn atoms_have_cshp() {
        for s in ["w_1", "w_2", "w_64"] {
            let v = decide(s);
            assert!(v.has_cshp);
            assert_eq!(v.rule, VerdictRule::TheoremAPositive);
            assert_eq!(v.witnesses.unwrap().kappa.unwrap(), parse(s));
        }
    }

    #[test]
    fn countable_cofinality_fails_with_a_discrete_clopen_witness() {
        for s in ["w", "w^2", "w^w", "w*2", "w^(w_1 + 1)", "w_2 + w"] {
            let v = decide(s);
            assert!(!v.has_cshp, "{s}");
            assert_eq!(v.rule, VerdictRule::Lemma24b, "{s}");
            let w = v.witnesses.expect("negative verdicts carry witnesses");
            assert_eq!(w.tau.unwrap(), parse("w"));
        }
        // the narrative shows concrete isolated points for ω: 2, 3, 4
        let v = decide("w");
        assert!(v.narrative.contains("2, 3, 4"));
    }

    #[test]
    fn non_monic_uncountable_splits_by_dropping_the_last_summand() {
        let v = decide("w_2 + w_1");
        assert!(!v.has_cshp);
        assert_eq!(v.rule, VerdictRule::Corollary45);
        let w = v.witnesses.unwrap();
        let d = w.decomposition.unwrap();
        assert_eq!(d.prefix, parse("w_2"));
        assert_eq!(d.tail, parse("w_1"));
        assert_eq!(w.tau.unwrap(), parse("w_1"));

        let v = decide("w_1*2");
        let d = v.witnesses.unwrap().decomposition.unwrap();
        assert_eq!(d.prefix, parse("w_1"));
        assert_eq!(d.tail, parse("w_1"));
    }

    #[test]
    fn monic_uncountable_non_cardinals_fail_via_the_fixed_point_split() {
        for s in ["w^(w_1*2)", "w^(w_2*5)", "w^(w^(w_1*2))"] {
            let v = decide(s);
            assert!(!v.has_cshp, "{s}");
            assert_eq!(v.rule, VerdictRule::Theorem51, "{s}");
            let w = v.witnesses.unwrap();
            let tau = w.tau.unwrap();
            assert_eq!(tau, cofinality(&parse(s)));
            let d = w.decomposition.unwrap();
            assert_eq!(d.prefix, tau);
            assert_eq!(d.tail, parse(s));
        }
    }

    #[test]
    fn negative_ordinal_witnesses_revalidate() {
        for s in ["w_2 + w_1", "w_1*2", "w^(w_1*2)", "w_2*3 + w_1*7"] {
            let lambda = parse(s);
            let v = decide_ordinal(&lambda).unwrap();
            assert!(!v.has_cshp);
            let w = v.witnesses.expect("negative verdicts carry witnesses");
            let d = w
                .decomposition
                .expect("sum-split rules carry a decomposition");
            // tail is a positive limit
            assert!(d.tail.is_limit());
            // prefix dominates the tail's cofinality
            assert!(d.prefix >= cofinality(&d.tail));
            // and the split really reassembles λ
            assert_eq!(add(&d.prefix, &d.tail), lambda);
            // the prefix is recoverable by left subtraction too
            assert!(left_subtract(&d.prefix, &lambda).is_ok());
        }
    }

    #[test]
    fn product_examples() {
        let v = decide_product(&[parse("w_1"), parse("w_2")]).unwrap();
        assert!(!v.has_cshp);
        assert_eq!(v.rule, VerdictRule::TheoremANegative);
        assert_eq!(v.witnesses.unwrap().offending_factors, vec![0, 1]);

        let v = decide_product(&[parse("w_1"), parse("w_1 + 1")]).unwrap();
        assert!(!v.has_cshp);
        assert_eq!(v.witnesses.unwrap().offending_factors, vec![0, 1]);

        let v = decide_product(&[parse("w_1"), parse("w_1"), parse("w + 1")]).unwrap();
        assert!(v.has_cshp);
        assert_eq!(v.rule, VerdictRule::TheoremAPositive);
        assert_eq!(v.witnesses.unwrap().kappa.unwrap(), parse("w_1"));
    }

    #[test]
    fn all_successor_products_are_compact() {
        let v = decide_product(&[parse("w + 1"), parse("5"), parse("1")]).unwrap();
        assert!(v.has_cshp);
        assert_eq!(v.rule, VerdictRule::Compact);
    }

    #[test]
    fn product_blames_the_smallest_limit_factor() {
        // the smallest limit factor is at index 1 and fails alone
        let v = decide_product(&[parse("w_1"), parse("w")]).unwrap();
        assert!(!v.has_cshp);
        assert_eq!(v.rule, VerdictRule::TheoremANegative);
        assert_eq!(v.witnesses.unwrap().offending_factors, vec![1]);

        // κ is the min limit factor even when listed later
        let v = decide_product(&[parse("w_2"), parse("w_1")]).unwrap();
        assert_eq!(v.witnesses.unwrap().offending_factors, vec![1, 0]);
    }

    #[test]
    fn product_monotone_in_successor_factors() {
        let base = vec![parse("w_1"), parse("w_1")];
        assert!(decide_product(&base).unwrap().has_cshp);
        // appending μ ≤ κ keeps the verdict
        let mut ok = base.clone();
        ok.push(parse("w^2 + 1"));
        assert!(decide_product(&ok).unwrap().has_cshp);
        let mut ok2 = base.clone();
        ok2.push(parse("w_1"));
        assert!(decide_product(&ok2).unwrap().has_cshp);
        // appending μ > κ flips it
        let mut bad = base.clone();
        bad.push(parse("w_1 + 1"));
        let v = decide_product(&bad).unwrap();
        assert!(!v.has_cshp);
        assert_eq!(v.witnesses.unwrap().offending_factors, vec![0, 2]);
    }

    #[test]
    fn singleton_products_agree_with_the_ordinal_rule() {
        for s in [
            "1",
            "w + 1",
            "w",
            "w^w",
            "w_1",
            "w_2 + w_1",
            "w^(w_1*2)",
            "w_1*2",
        ] {
            let one = decide_ordinal(&parse(s)).unwrap();
            let prod = decide_product(&[parse(s)]).unwrap();
            assert_eq!(one.has_cshp, prod.has_cshp, "{s}");
        }
    }

    #[test]
    fn coproduct_examples() {
        let v = decide_coproduct(&parse("w_1"), &parse("w_2")).unwrap();
        assert!(!v.has_cshp);
        assert_eq!(v.rule, VerdictRule::Corollary45);
        let w = v.witnesses.unwrap();
        assert_eq!(w.offending_factors, vec![0, 1]);
        let d = w.decomposition.unwrap();
        assert_eq!(d.prefix, parse("w_1"));
        assert_eq!(d.tail, parse("w_1"));
        assert!(v.narrative.contains("theorem-C"));

        let v = decide_coproduct(&parse("w + 1"), &parse("w*2 + 5")).unwrap();
        assert!(v.has_cshp);
        assert_eq!(v.rule, VerdictRule::Corollary52a);

        let v = decide_coproduct(&parse("w_1"), &parse("w_1")).unwrap();
        assert!(v.has_cshp);
        assert_eq!(v.rule, VerdictRule::Corollary52b);
        assert!(v.narrative.contains("× 2"));
    }

    #[test]
    fn coproduct_absorbs_a_small_successor_into_an_atom() {
        let v = decide_coproduct(&parse("w + 1"), &parse("w_1")).unwrap();
        assert!(v.has_cshp);
        assert_eq!(v.rule, VerdictRule::Corollary52b);
        assert_eq!(v.has_cshp, decide_ordinal(&parse("w_1")).unwrap().has_cshp);
        // order of arguments does not matter
        let v2 = decide_coproduct(&parse("w_1"), &parse("w + 1")).unwrap();
        assert!(v2.has_cshp);
        assert_eq!(v2.rule, VerdictRule::Corollary52b);
    }

    #[test]
    fn coproduct_atom_below_successor_fails_as_a_pair() {
        // Ω₁ ⨿ (Ω₁+1): both fine alone, pair fails
        let v = decide_coproduct(&parse("w_1"), &parse("w_1 + 1")).unwrap();
        assert!(!v.has_cshp);
        assert_eq!(v.rule, VerdictRule::Corollary45);
        assert_eq!(v.witnesses.unwrap().offending_factors, vec![0, 1]);
    }

    #[test]
    fn coproduct_inherits_a_failing_summand_with_its_rule() {
        let v = decide_coproduct(&parse("w"), &parse("w_1")).unwrap();
        assert!(!v.has_cshp);
        assert_eq!(v.rule, VerdictRule::Lemma24b);
        assert_eq!(v.witnesses.unwrap().offending_factors, vec![0]);

        // swapped arguments report the original position
        let v = decide_coproduct(&parse("w_1"), &parse("w")).unwrap();
        assert_eq!(v.rule, VerdictRule::Lemma24b);
        assert_eq!(v.witnesses.unwrap().offending_factors, vec![1]);

        // a non-monic failure keeps its sum-split rule through the coproduct
        let v = decide_coproduct(&parse("w_2 + w_1"), &parse("w_2 + w_1")).unwrap();
        assert_eq!(v.rule, VerdictRule::Corollary45);
    }

    #[test]
    fn coproduct_product_bridge() {
        // κ ⨿ κ ≅ κ × 2
        for s in ["w_1", "w_3"] {
            let kappa = parse(s);
            let co = decide_coproduct(&kappa, &kappa).unwrap();
            let pr = decide_product(&[kappa.clone(), parse("2")]).unwrap();
            assert!(co.has_cshp);
            assert_eq!(co.has_cshp, pr.has_cshp);
        }
    }

    #[test]
    fn explain_renders_rule_and_witnesses() {
        let v = decide_ordinal(&parse("w_2 + w_1")).unwrap();
        let text = explain(&v);
        assert!(text.starts_with("CSHP: no\n"));
        assert!(text.contains("rule: corollary-4.5"));
        assert!(text.contains("tau: w_1"));
        assert!(text.contains("decomposition: prefix w_2 + tail w_1"));
        // deterministic
        assert_eq!(text, explain(&v));

        let v = decide_product(&[parse("w_1"), parse("w_2")]).unwrap();
        let text = explain(&v);
        assert!(text.contains("offending factors: 0, 1"));
    }
}
