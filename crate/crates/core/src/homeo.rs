//! Evaluators for explicit homeomorphisms of ordinal intervals `[0, α]` with
//! compact support: neighbour transpositions, the base-shuffling maps `f_δ`
//! driven by a finite-support permutation of ω, their conjugates `Ψ_δ(f)`
//! shifted above `ω^{β_δ}`, and a sampled convergence-hypothesis check for
//! families of such maps.
//!
//! Everything here is a pure, exact evaluator: a map is represented by its
//! defining parameters plus a direction flag, never by a table of values.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{
    add, canonical_cofinal, decompose_base, left_subtract, mul, successor, ArithmeticError,
};
use crate::term::{compare, OrdinalTerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomeoError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{point} lies outside the interval [0, {bound}]")]
    PointOutOfRange {
        point: OrdinalTerm,
        bound: OrdinalTerm,
    },
    #[error("probe point {index} must satisfy {lower} ≤ point < {upper}")]
    ProbeIndexOutOfRange {
        index: OrdinalTerm,
        lower: OrdinalTerm,
        upper: OrdinalTerm,
    },
    #[error("{beta} is not a limit, so it indexes no interval map")]
    BetaNotLimit { beta: OrdinalTerm },
    #[error("base point {base} is not cofinally below {beta}")]
    BaseNotBelow {
        base: OrdinalTerm,
        beta: OrdinalTerm,
    },
    #[error("shift by w^{exponent} + 1 is not absorbed by the interval bound {alpha}")]
    ShiftNotAbsorbed {
        exponent: OrdinalTerm,
        alpha: OrdinalTerm,
    },
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

/// A bijection φ: ω → ω moving only finitely many points, with φ(0) ≠ 0.
///
/// Built from disjoint cycles; everything not mentioned is fixed. The
/// requirement that 0 moves is what makes the `f_δ` maps built on φ
/// distinguishable by a single probe point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSupportPermutation {
    forward: BTreeMap<u64, u64>,
    inverse: BTreeMap<u64, u64>,
}

impl FiniteSupportPermutation {
    /// Builds φ from disjoint cycles, each of length ≥ 2. Fails if cycles
    /// overlap, repeat a point, or leave 0 fixed.
    pub fn from_cycles(cycles: &[Vec<u64>]) -> Result<Self, HomeoError> {
        let mut forward = BTreeMap::new();
        let mut inverse = BTreeMap::new();
        for cycle in cycles {
            if cycle.len() < 2 {
                return Err(HomeoError::InvalidPermutation(
                    "every cycle must have length at least 2".to_string(),
                ));
            }
            for i in 0..cycle.len() {
                let a = cycle[i];
                let b = cycle[(i + 1) % cycle.len()];
                if forward.insert(a, b).is_some() {
                    return Err(HomeoError::InvalidPermutation(format!(
                        "point {a} appears in more than one position"
                    )));
                }
                inverse.insert(b, a);
            }
        }
        if forward.get(&0).copied().unwrap_or(0) == 0 {
            return Err(HomeoError::InvalidPermutation(
                "the permutation must move 0".to_string(),
            ));
        }
        Ok(FiniteSupportPermutation { forward, inverse })
    }

    /// The transposition (a b).
    pub fn swap(a: u64, b: u64) -> Result<Self, HomeoError> {
        Self::from_cycles(&[vec![a, b]])
    }

    pub fn apply(&self, m: &BigUint) -> BigUint {
        self.map_with(&self.forward, m)
    }

    pub fn apply_inverse(&self, m: &BigUint) -> BigUint {
        self.map_with(&self.inverse, m)
    }

    fn map_with(&self, table: &BTreeMap<u64, u64>, m: &BigUint) -> BigUint {
        match u64::try_from(m) {
            Ok(small) => BigUint::from(table.get(&small).copied().unwrap_or(small)),
            Err(_) => m.clone(),
        }
    }

    /// The finitely many points φ moves, in increasing order.
    pub fn support(&self) -> Vec<u64> {
        self.forward
            .iter()
            .filter(|(a, b)| a != b)
            .map(|(a, _)| *a)
            .collect()
    }
}

/// Evaluation direction for a parameterised map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Parameters of one map `f_δ` on `[0, ω^β]`: the limit exponent `β`, the
/// family index `δ`, the split point `β_δ < β`, and the permutation φ that
/// shuffles the `ω^{β_δ}`-scale digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FDeltaSpec {
    beta: OrdinalTerm,
    delta: OrdinalTerm,
    beta_delta: OrdinalTerm,
    phi: FiniteSupportPermutation,
    alpha: OrdinalTerm,
}

impl FDeltaSpec {
    /// Accepts an explicitly chosen split point `beta_delta < beta`.
    pub fn new(
        beta: OrdinalTerm,
        delta: OrdinalTerm,
        beta_delta: OrdinalTerm,
        phi: FiniteSupportPermutation,
    ) -> Result<Self, HomeoError> {
        if !beta.is_limit() {
            return Err(HomeoError::BetaNotLimit { beta });
        }
        if compare(&beta_delta, &beta) != Ordering::Less {
            return Err(HomeoError::BaseNotBelow {
                base: beta_delta,
                beta,
            });
        }
        let alpha = OrdinalTerm::omega_pow(&beta);
        Ok(FDeltaSpec {
            beta,
            delta,
            beta_delta,
            phi,
            alpha,
        })
    }

    /// Derives the split point from the canonical cofinal family of `beta`
    /// at index `delta`.
    pub fn from_index(
        beta: OrdinalTerm,
        delta: OrdinalTerm,
        phi: FiniteSupportPermutation,
    ) -> Result<Self, HomeoError> {
        let beta_delta = canonical_cofinal(&beta, &delta)?;
        Self::new(beta, delta, beta_delta, phi)
    }

    pub fn beta(&self) -> &OrdinalTerm {
        &self.beta
    }

    pub fn delta(&self) -> &OrdinalTerm {
        &self.delta
    }

    pub fn beta_delta(&self) -> &OrdinalTerm {
        &self.beta_delta
    }

    /// The right endpoint `α = ω^β` of the interval the map acts on.
    pub fn alpha(&self) -> &OrdinalTerm {
        &self.alpha
    }

    pub fn phi(&self) -> &FiniteSupportPermutation {
        &self.phi
    }
}

/// Swaps `α_n + 1 ↔ α_n + 2` and fixes every other point. Bounds are the
/// caller's concern: the map is well-defined on any interval containing
/// `α_n + 2`.
pub fn transposition_eval(alpha_n: &OrdinalTerm, x: &OrdinalTerm) -> OrdinalTerm {
    let first = add(alpha_n, &OrdinalTerm::nat(1));
    let second = add(alpha_n, &OrdinalTerm::nat(2));
    if *x == first {
        second
    } else if *x == second {
        first
    } else {
        x.clone()
    }
}

/// Evaluates `f_δ` (or its inverse) at `x ≤ ω^β`. Writing
/// `x = ω^{β_δ+1}·ε + ω^{β_δ}·m + η` with `m < ω` and `η < ω^{β_δ}`:
///
/// * `η > 0` → `ω^{β_δ+1}·ε + ω^{β_δ}·φ(m) + η`
/// * `η = 0`, `m > 0` → `ω^{β_δ+1}·ε + ω^{β_δ}·(φ(m−1)+1)`
/// * `η = m = 0` → `ω^{β_δ+1}·ε`
/// * `x = ω^β` → `ω^β`
///
/// The inverse runs the same schema with φ⁻¹.
pub fn f_delta_eval(
    spec: &FDeltaSpec,
    x: &OrdinalTerm,
    direction: Direction,
) -> Result<OrdinalTerm, HomeoError> {
    match compare(x, &spec.alpha) {
        Ordering::Greater => {
            return Err(HomeoError::PointOutOfRange {
                point: x.clone(),
                bound: spec.alpha.clone(),
            })
        }
        Ordering::Equal => return Ok(spec.alpha.clone()),
        Ordering::Less => {}
    }
    let parts = decompose_base(x, &spec.beta_delta);
    let map = |m: &BigUint| match direction {
        Direction::Forward => spec.phi.apply(m),
        Direction::Inverse => spec.phi.apply_inverse(m),
    };
    let high = mul(
        &OrdinalTerm::omega_pow(&successor(&spec.beta_delta)),
        &parts.epsilon,
    );
    let scale = OrdinalTerm::omega_pow(&spec.beta_delta);
    if !parts.eta.is_zero() {
        let mid = mul(&scale, &OrdinalTerm::nat_big(map(&parts.finite)));
        Ok(add(&add(&high, &mid), &parts.eta))
    } else if !parts.finite.is_zero() {
        let shifted = map(&(&parts.finite - BigUint::one())) + BigUint::one();
        let mid = mul(&scale, &OrdinalTerm::nat_big(shifted));
        Ok(add(&high, &mid))
    } else {
        Ok(high)
    }
}

/// Evaluates `f_δ` at the probe point `ω^{β_γ+1} + 1`, the single point that
/// separates members of a family sharing `β_γ`: the image is
/// `ω^{β_γ+1} + ω^{β_δ}·φ(0) + 1`-shaped and pins down `β_δ` and `φ(0)`.
/// Requires `β_δ ≤ β_γ < β`.
pub fn probe_image(spec: &FDeltaSpec, beta_gamma: &OrdinalTerm) -> Result<OrdinalTerm, HomeoError> {
    if compare(&spec.beta_delta, beta_gamma) == Ordering::Greater
        || compare(beta_gamma, &spec.beta) != Ordering::Less
    {
        return Err(HomeoError::ProbeIndexOutOfRange {
            index: beta_gamma.clone(),
            lower: spec.beta_delta.clone(),
            upper: spec.beta.clone(),
        });
    }
    let probe = successor(&OrdinalTerm::omega_pow(&successor(beta_gamma)));
    f_delta_eval(spec, &probe, Direction::Forward)
}

/// Conjugates `inner` by the shift `ψ(x) = ω^{β_δ} + 1 + x`: identity on
/// `[0, ω^{β_δ}]`, and `ψ(inner(ψ⁻¹(x)))` above it. Requires the shift to be
/// absorbed by the interval bound (`ω^{β_δ} + 1 + α = α`), which the
/// [`HomeoValue::psi_conjugate`] constructor checks once.
pub fn psi_conjugate_eval(
    beta_delta: &OrdinalTerm,
    inner: &HomeoValue,
    x: &OrdinalTerm,
) -> Result<OrdinalTerm, HomeoError> {
    let alpha = inner.alpha();
    if compare(x, alpha) == Ordering::Greater {
        return Err(HomeoError::PointOutOfRange {
            point: x.clone(),
            bound: alpha.clone(),
        });
    }
    let pivot = OrdinalTerm::omega_pow(beta_delta);
    if compare(x, &pivot) != Ordering::Greater {
        return Ok(x.clone());
    }
    let shift = successor(&pivot);
    let y = left_subtract(&shift, x)?;
    let z = inner.eval(&y)?;
    Ok(add(&shift, &z))
}

/// A concrete compactly supported homeomorphism of `[0, α]`, represented by
/// its defining parameters. `eval` runs the map, `inverse` produces the
/// reversed map, and `alpha` reports the interval bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomeoValue {
    Identity {
        alpha: OrdinalTerm,
    },
    /// Swaps `α_n+1 ↔ α_n+2` inside `[0, α]`.
    Transposition {
        alpha_n: OrdinalTerm,
        alpha: OrdinalTerm,
    },
    FDelta {
        spec: FDeltaSpec,
        direction: Direction,
    },
    /// `inner` conjugated above `ω^{β_δ}` by `x ↦ ω^{β_δ}+1+x`.
    PsiConjugate {
        beta_delta: OrdinalTerm,
        inner: Box<HomeoValue>,
    },
}

impl HomeoValue {
    pub fn identity(alpha: OrdinalTerm) -> Self {
        HomeoValue::Identity { alpha }
    }

    /// A transposition needs `α_n + 2 ≤ α` so both swapped points exist.
    pub fn transposition(alpha_n: OrdinalTerm, alpha: OrdinalTerm) -> Result<Self, HomeoError> {
        let second = add(&alpha_n, &OrdinalTerm::nat(2));
        if compare(&second, &alpha) == Ordering::Greater {
            return Err(HomeoError::PointOutOfRange {
                point: second,
                bound: alpha,
            });
        }
        Ok(HomeoValue::Transposition { alpha_n, alpha })
    }

    pub fn f_delta(spec: FDeltaSpec) -> Self {
        HomeoValue::FDelta {
            spec,
            direction: Direction::Forward,
        }
    }

    /// Wraps `inner`, checking that the shift `ω^{β_δ}+1` is absorbed by the
    /// interval bound, so the conjugate maps `[0, α]` onto itself.
    pub fn psi_conjugate(beta_delta: OrdinalTerm, inner: HomeoValue) -> Result<Self, HomeoError> {
        let alpha = inner.alpha().clone();
        let shift = successor(&OrdinalTerm::omega_pow(&beta_delta));
        if add(&shift, &alpha) != alpha {
            return Err(HomeoError::ShiftNotAbsorbed {
                exponent: beta_delta,
                alpha,
            });
        }
        Ok(HomeoValue::PsiConjugate {
            beta_delta,
            inner: Box::new(inner),
        })
    }

    /// The right endpoint of the interval `[0, α]` the map acts on.
    pub fn alpha(&self) -> &OrdinalTerm {
        match self {
            HomeoValue::Identity { alpha } => alpha,
            HomeoValue::Transposition { alpha, .. } => alpha,
            HomeoValue::FDelta { spec, .. } => spec.alpha(),
            HomeoValue::PsiConjugate { inner, .. } => inner.alpha(),
        }
    }

    pub fn eval(&self, x: &OrdinalTerm) -> Result<OrdinalTerm, HomeoError> {
        match self {
            HomeoValue::Identity { alpha } => {
                if compare(x, alpha) == Ordering::Greater {
                    Err(HomeoError::PointOutOfRange {
                        point: x.clone(),
                        bound: alpha.clone(),
                    })
                } else {
                    Ok(x.clone())
                }
            }
            HomeoValue::Transposition { alpha_n, alpha } => {
                if compare(x, alpha) == Ordering::Greater {
                    Err(HomeoError::PointOutOfRange {
                        point: x.clone(),
                        bound: alpha.clone(),
                    })
                } else {
                    Ok(transposition_eval(alpha_n, x))
                }
            }
            HomeoValue::FDelta { spec, direction } => f_delta_eval(spec, x, *direction),
            HomeoValue::PsiConjugate { beta_delta, inner } => {
                psi_conjugate_eval(beta_delta, inner, x)
            }
        }
    }

    /// The inverse map, as a value of the same shape.
    pub fn inverse(&self) -> HomeoValue {
        match self {
            HomeoValue::Identity { .. } | HomeoValue::Transposition { .. } => self.clone(),
            HomeoValue::FDelta { spec, direction } => HomeoValue::FDelta {
                spec: spec.clone(),
                direction: match direction {
                    Direction::Forward => Direction::Inverse,
                    Direction::Inverse => Direction::Forward,
                },
            },
            HomeoValue::PsiConjugate { beta_delta, inner } => HomeoValue::PsiConjugate {
                beta_delta: beta_delta.clone(),
                inner: Box::new(inner.inverse()),
            },
        }
    }
}

/// Sampled form of the convergence hypothesis for a listed family: looks for
/// an index `j₀` such that every member from `j₀` on fixes every sample point
/// `≤ ξ`. Returns `Some(j₀)` with the smallest such index (0 for an empty
/// family), or `None` when the final member itself moves a sample.
///
/// Each member carries the threshold ordinal it was constructed at; the
/// verdict is computed purely by evaluation, the threshold is reporting
/// metadata for callers.
pub fn prop41_hypothesis_check(
    family: &[(OrdinalTerm, HomeoValue)],
    xi: &OrdinalTerm,
    samples: &[OrdinalTerm],
) -> Result<Option<usize>, HomeoError> {
    let in_range: Vec<&OrdinalTerm> = samples
        .iter()
        .filter(|s| compare(s, xi) != Ordering::Greater)
        .collect();
    let mut last_offender: Option<usize> = None;
    for (j, (_, h)) in family.iter().enumerate() {
        for sample in &in_range {
            if h.eval(sample)? != **sample {
                last_offender = Some(j);
                break;
            }
        }
    }
    Ok(match last_offender {
        None => Some(0),
        Some(k) if k + 1 < family.len() => Some(k + 1),
        Some(_) => None,
    })
}
