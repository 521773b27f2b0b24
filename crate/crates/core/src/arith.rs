//! Exact arithmetic on Cantor-normal-form terms: sum, product, power, left
//! subtraction, cofinality, base-ω^b decomposition, and canonical cofinal
//! sequences. All operations are total except where a precondition is part of
//! the mathematical contract (left subtraction, cofinal indexing).

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::term::{cmp_exp, compare, Exponent, OrdinalClass, OrdinalTerm, Summand};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("left subtraction undefined: {subtrahend} exceeds {minuend}")]
    LeftSubtractUnderflow {
        subtrahend: OrdinalTerm,
        minuend: OrdinalTerm,
    },
    #[error("{term} is not a limit ordinal")]
    NotALimit { term: OrdinalTerm },
    #[error("index {index} is not below the cofinality {cofinality} of {term}")]
    IndexNotBelowCofinality {
        index: OrdinalTerm,
        cofinality: OrdinalTerm,
        term: OrdinalTerm,
    },
}

/// Ordinal sum `a + b`. Low-order summands of `a` are absorbed by `b`'s
/// leading term: `1 + ω = ω`, `ω + Ω_1 = Ω_1`.
pub fn add(a: &OrdinalTerm, b: &OrdinalTerm) -> OrdinalTerm {
    let Some(lead_b) = b.summands.first() else {
        return a.clone();
    };
    let mut out: Vec<Summand> = Vec::with_capacity(a.summands.len() + b.summands.len());
    let mut merged = false;
    for s in &a.summands {
        match cmp_exp(&s.exp, &lead_b.exp) {
            Ordering::Greater => out.push(s.clone()),
            Ordering::Equal => {
                out.push(Summand {
                    exp: s.exp.clone(),
                    coeff: &s.coeff + &lead_b.coeff,
                });
                merged = true;
                break;
            }
            Ordering::Less => break,
        }
    }
    if merged {
        out.extend(b.summands[1..].iter().cloned());
    } else {
        out.extend(b.summands.iter().cloned());
    }
    OrdinalTerm::from_raw(out)
}

/// Ordinal product `a · b`, distributing over `b`'s CNF: for `f > 0`,
/// `a · ω^f·d = ω^{e1+f}·d` where `e1` leads `a`; the finite part of `b`
/// multiplies `a`'s leading coefficient and keeps `a`'s tail.
pub fn mul(a: &OrdinalTerm, b: &OrdinalTerm) -> OrdinalTerm {
    if a.is_zero() || b.is_zero() {
        return OrdinalTerm::zero();
    }
    let lead_a = &a.summands[0];
    let mut out: Vec<Summand> = Vec::with_capacity(a.summands.len() + b.summands.len());
    for s in &b.summands {
        if s.exp.is_zero() {
            out.push(Summand {
                exp: lead_a.exp.clone(),
                coeff: &lead_a.coeff * &s.coeff,
            });
            out.extend(a.summands[1..].iter().cloned());
        } else {
            let e = add(&lead_a.exp.to_term(), &s.exp.to_term());
            out.push(Summand {
                exp: Exponent::from_term(e),
                coeff: s.coeff.clone(),
            });
        }
    }
    OrdinalTerm::from_raw(out)
}

/// Ordinal power `a ^ b` with the convention `pow(0, 0) = 1`.
pub fn pow(a: &OrdinalTerm, b: &OrdinalTerm) -> OrdinalTerm {
    if b.is_zero() {
        return OrdinalTerm::one();
    }
    if a.is_zero() {
        return OrdinalTerm::zero();
    }
    if a.as_natural().map(One::is_one).unwrap_or(false) {
        return OrdinalTerm::one();
    }
    // a^b = Π_j (a^{ω^{f_j}})^{d_j} over b's CNF, multiplied left to right.
    let mut result = OrdinalTerm::one();
    for s in &b.summands {
        let block = pow_natural(&pow_omega_exp(a, &s.exp), &s.coeff);
        result = mul(&result, &block);
    }
    result
}

/// `a^{ω^f}` for `a ≥ 2`. Finite bases climb one exponent step:
/// `n^{ω^f} = ω^{ω^{f'}}` with `1 + f' = f` (so `n^ω = ω`); infinite bases
/// absorb everything but their leading exponent: `a^{ω^f} = ω^{e1·ω^f}`.
fn pow_omega_exp(a: &OrdinalTerm, f: &Exponent) -> OrdinalTerm {
    if f.is_zero() {
        return a.clone();
    }
    let f_term = f.to_term();
    let lead = &a.summands[0];
    if lead.exp.is_zero() {
        let f_shift =
            left_subtract(&OrdinalTerm::one(), &f_term).expect("f ≥ 1, so 1 left-divides it");
        OrdinalTerm::omega_pow(&OrdinalTerm::omega_pow(&f_shift))
    } else {
        let e = mul(&lead.exp.to_term(), &OrdinalTerm::omega_pow(&f_term));
        OrdinalTerm::omega_pow(&e)
    }
}

/// `p^d` for a natural exponent. Monomials with positive exponent close in
/// one step (`(ω^e·c)^d = ω^{e·d}·c`); everything else runs square-and-multiply.
fn pow_natural(p: &OrdinalTerm, d: &BigUint) -> OrdinalTerm {
    if d.is_zero() {
        return OrdinalTerm::one();
    }
    if d.is_one() {
        return p.clone();
    }
    if let [s] = p.summands.as_slice() {
        if !s.exp.is_zero() {
            let e = mul(&s.exp.to_term(), &OrdinalTerm::nat_big(d.clone()));
            return OrdinalTerm::monomial(Exponent::from_term(e), s.coeff.clone());
        }
    }
    let mut result = OrdinalTerm::one();
    for i in (0..d.bits()).rev() {
        result = mul(&result, &result);
        if d.bit(i) {
            result = mul(&result, p);
        }
    }
    result
}

/// The unique `y` with `a + y = x`; requires `a ≤ x`.
pub fn left_subtract(a: &OrdinalTerm, x: &OrdinalTerm) -> Result<OrdinalTerm, ArithmeticError> {
    match compare(a, x) {
        Ordering::Greater => Err(ArithmeticError::LeftSubtractUnderflow {
            subtrahend: a.clone(),
            minuend: x.clone(),
        }),
        Ordering::Equal => Ok(OrdinalTerm::zero()),
        Ordering::Less => {
            // Walk the common prefix; at the first difference the remainder of
            // x (with one coefficient adjusted) is the difference, because
            // adding it back absorbs a's smaller tail.
            for i in 0..a.summands.len() {
                let sa = &a.summands[i];
                let sx = x
                    .summands
                    .get(i)
                    .expect("a < x rules out x being a strict prefix of a");
                match cmp_exp(&sa.exp, &sx.exp) {
                    Ordering::Less => {
                        return Ok(OrdinalTerm::from_raw(x.summands[i..].to_vec()));
                    }
                    Ordering::Greater => {
                        unreachable!("a < x rules out a larger exponent at the first difference")
                    }
                    Ordering::Equal => match sa.coeff.cmp(&sx.coeff) {
                        Ordering::Less => {
                            let mut out = vec![Summand {
                                exp: sx.exp.clone(),
                                coeff: &sx.coeff - &sa.coeff,
                            }];
                            out.extend(x.summands[i + 1..].iter().cloned());
                            return Ok(OrdinalTerm::from_raw(out));
                        }
                        Ordering::Greater => {
                            unreachable!(
                                "a < x rules out a larger coefficient at the first difference"
                            )
                        }
                        Ordering::Equal => {}
                    },
                }
            }
            Ok(OrdinalTerm::from_raw(
                x.summands[a.summands.len()..].to_vec(),
            ))
        }
    }
}

/// Predecessor of a successor ordinal (right subtraction of 1), `None` otherwise.
pub fn pred(t: &OrdinalTerm) -> Option<OrdinalTerm> {
    if !t.is_successor() {
        return None;
    }
    let mut out = t.summands.clone();
    let last = out.last_mut().expect("successors are non-zero");
    if last.coeff.is_one() {
        out.pop();
    } else {
        last.coeff -= BigUint::one();
    }
    Some(OrdinalTerm::from_raw(out))
}

/// Successor `t + 1`.
pub fn successor(t: &OrdinalTerm) -> OrdinalTerm {
    add(t, &OrdinalTerm::one())
}

/// Cofinality: 0 for zero, 1 for successors; a limit inherits the cofinality
/// of its last CNF summand, where `cf(ω^{γ+1}) = ω`, `cf(ω^γ) = cf(γ)` for
/// limit `γ`, and `cf(Ω_k) = Ω_k`. The result is always 0, 1, ω, or an atom.
pub fn cofinality(a: &OrdinalTerm) -> OrdinalTerm {
    match a.classify() {
        OrdinalClass::Zero => OrdinalTerm::zero(),
        OrdinalClass::Successor => OrdinalTerm::one(),
        OrdinalClass::Limit => {
            let last = a.summands.last().expect("limits are non-zero");
            match &last.exp {
                Exponent::Atom(k) => OrdinalTerm::atom(*k).expect("stored atom index is valid"),
                Exponent::Ord(g) => match g.classify() {
                    OrdinalClass::Zero => {
                        unreachable!("limit ordinals have positive last exponent")
                    }
                    OrdinalClass::Successor => OrdinalTerm::omega(),
                    OrdinalClass::Limit => cofinality(g),
                },
            }
        }
    }
}

/// True iff the term is an uncountable regular cardinal — syntactically,
/// exactly an atom `Ω_k`.
pub fn is_regular_uncountable(a: &OrdinalTerm) -> bool {
    a.as_atom().is_some()
}

/// The unique split `x = ω^{b+1}·ε + ω^b·m + η` with `m < ω` and `η < ω^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseDecomposition {
    pub epsilon: OrdinalTerm,
    pub finite: BigUint,
    pub eta: OrdinalTerm,
}

impl BaseDecomposition {
    /// Rebuilds `ω^{b+1}·ε + ω^b·m + η` for the base `b` it was taken at.
    pub fn reassemble(&self, b: &OrdinalTerm) -> OrdinalTerm {
        let high = mul(&OrdinalTerm::omega_pow(&successor(b)), &self.epsilon);
        let mid = mul(
            &OrdinalTerm::omega_pow(b),
            &OrdinalTerm::nat_big(self.finite.clone()),
        );
        add(&add(&high, &mid), &self.eta)
    }
}

/// Splits `x` at the exponent `b`: summands above `b` shift down into ε
/// (via `e = (b+1) + μ`), the summand at `b` supplies the finite part, and
/// the rest is η. Total on all inputs.
pub fn decompose_base(x: &OrdinalTerm, b: &OrdinalTerm) -> BaseDecomposition {
    let b_exp = Exponent::from_term(b.clone());
    let b_succ = successor(b);
    let mut eps: Vec<Summand> = Vec::new();
    let mut finite = BigUint::zero();
    let mut eta: Vec<Summand> = Vec::new();
    for s in &x.summands {
        match cmp_exp(&s.exp, &b_exp) {
            Ordering::Greater => {
                let mu = left_subtract(&b_succ, &s.exp.to_term())
                    .expect("an exponent above b is at least b+1");
                eps.push(Summand {
                    exp: Exponent::from_term(mu),
                    coeff: s.coeff.clone(),
                });
            }
            Ordering::Equal => finite = s.coeff.clone(),
            Ordering::Less => eta.push(s.clone()),
        }
    }
    BaseDecomposition {
        epsilon: OrdinalTerm::from_raw(eps),
        finite,
        eta: OrdinalTerm::from_raw(eta),
    }
}

/// The δ-th member of the canonical strictly increasing cofinal family below
/// the limit `beta`:
///
/// * `Ω_k[δ] = δ + 1`;
/// * `(λ + ω^{γ+1})[n] = λ + ω^γ·(n+1)` (so the index must be finite);
/// * `(λ + ω^γ)[δ] = λ + ω^{γ[δ]}` for limit `γ`.
///
/// Requires `beta` limit and `delta < cofinality(beta)`.
pub fn canonical_cofinal(
    beta: &OrdinalTerm,
    delta: &OrdinalTerm,
) -> Result<OrdinalTerm, ArithmeticError> {
    if !beta.is_limit() {
        return Err(ArithmeticError::NotALimit { term: beta.clone() });
    }
    let cf = cofinality(beta);
    if compare(delta, &cf) != Ordering::Less {
        return Err(ArithmeticError::IndexNotBelowCofinality {
            index: delta.clone(),
            cofinality: cf,
            term: beta.clone(),
        });
    }
    Ok(cofinal_step(beta, delta))
}

fn cofinal_step(beta: &OrdinalTerm, delta: &OrdinalTerm) -> OrdinalTerm {
    if beta.as_atom().is_some() {
        return successor(delta);
    }
    // Peel the last ω^γ, folding any surplus coefficient into the prefix λ.
    let mut lambda = beta.summands[..beta.summands.len() - 1].to_vec();
    let last = beta.summands.last().expect("limits are non-zero");
    if !last.coeff.is_one() {
        lambda.push(Summand {
            exp: last.exp.clone(),
            coeff: &last.coeff - BigUint::one(),
        });
    }
    let lambda = OrdinalTerm::from_raw(lambda);
    let gamma = last.exp.to_term();
    let step = match gamma.classify() {
        OrdinalClass::Zero => unreachable!("limit ordinals have positive last exponent"),
        OrdinalClass::Successor => {
            let n = delta
                .natural_value()
                .expect("successor-exponent limits have cofinality ω, so the index is finite");
            let g = pred(&gamma).expect("gamma is a successor");
            OrdinalTerm::monomial(Exponent::from_term(g), n + BigUint::one())
        }
        OrdinalClass::Limit => OrdinalTerm::omega_pow(&cofinal_step(&gamma, delta)),
    };
    add(&lambda, &step)
}

/// One summand of the Cantor normal form, exponent exposed as a full term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfSummand {
    pub exponent: OrdinalTerm,
    pub coefficient: BigUint,
}

/// Read-only view of a term's CNF; `reassemble` restores the term exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfView {
    pub summands: Vec<CnfSummand>,
}

impl OrdinalTerm {
    pub fn cnf(&self) -> CnfView {
        CnfView {
            summands: self
                .summands
                .iter()
                .map(|s| CnfSummand {
                    exponent: s.exp.to_term(),
                    coefficient: s.coeff.clone(),
                })
                .collect(),
        }
    }
}

impl CnfView {
    pub fn reassemble(&self) -> OrdinalTerm {
        from_summands(
            self.summands
                .iter()
                .map(|s| (s.exponent.clone(), s.coefficient.clone())),
        )
    }
}

/// Evaluates the ordinal sum `Σ ω^{e_i}·c_i` in the given order (so the usual
/// absorption rules apply when exponents are not decreasing).
pub fn from_summands(items: impl IntoIterator<Item = (OrdinalTerm, BigUint)>) -> OrdinalTerm {
    let mut acc = OrdinalTerm::zero();
    for (e, c) in items {
        let monomial = OrdinalTerm::monomial(Exponent::from_term(e), c);
        acc = add(&acc, &monomial);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> OrdinalTerm {
        OrdinalTerm::omega()
    }

    fn atom(k: u32) -> OrdinalTerm {
        OrdinalTerm::atom(k).unwrap()
    }

    fn n(v: u64) -> OrdinalTerm {
        OrdinalTerm::nat(v)
    }

    fn parse(s: &str) -> OrdinalTerm {
        crate::parse::parse(s).unwrap()
    }

    #[test]
    fn add_absorbs_dominated_left_part() {
        assert_eq!(add(&n(1), &w()), w());
        assert_eq!(add(&w(), &atom(1)), atom(1));
        assert_eq!(add(&w(), &n(1)).render(), "w + 1");
        assert_eq!(add(&atom(1), &w()).render(), "w_1 + w");
    }

    #[test]
    fn add_merges_equal_exponents() {
        // (ω·3 + 5) + ω·2 = ω·5
        let a = parse("w*3 + 5");
        let b = parse("w*2");
        assert_eq!(add(&a, &b), parse("w*5"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(mul(&w(), &n(2)).render(), "w*2");
        assert_eq!(mul(&n(2), &w()), w());
        // ω^{β_δ+1} · ω = ω^{β_δ+2} at β_δ = 1
        assert_eq!(mul(&parse("w^2"), &w()), parse("w^3"));
        assert_eq!(mul(&w(), &OrdinalTerm::zero()), OrdinalTerm::zero());
        assert_eq!(mul(&atom(1), &w()), parse("w^(w_1 + 1)"));
        assert_eq!(mul(&atom(1), &atom(1)), parse("w^(w_1*2)"));
    }

    #[test]
    fn pow_conventions_and_fixed_points() {
        assert_eq!(pow(&OrdinalTerm::zero(), &OrdinalTerm::zero()), n(1));
        assert_eq!(pow(&OrdinalTerm::zero(), &w()), OrdinalTerm::zero());
        assert_eq!(pow(&n(1), &atom(3)), n(1));
        assert_eq!(pow(&w(), &atom(1)), atom(1));
        assert_eq!(pow(&n(2), &w()), w());
    }

    #[test]
    fn pow_worked_examples() {
        // (ω+1)² = ω² + ω + 1
        assert_eq!(pow(&parse("w + 1"), &n(2)), parse("w^2 + w + 1"));
        // 2^(ω+3) = ω·8
        assert_eq!(pow(&n(2), &parse("w + 3")), parse("w*8"));
        // 2^(ω²) = ω^ω
        assert_eq!(pow(&n(2), &parse("w^2")), parse("w^w"));
        // (ω·2)³ = ω³·2
        assert_eq!(pow(&parse("w*2"), &n(3)), parse("w^3*2"));
        // Ω₁² = ω^(Ω₁·2)
        assert_eq!(pow(&atom(1), &n(2)), parse("w^(w_1*2)"));
        // ω^ω via the general path
        assert_eq!(pow(&w(), &w()), parse("w^w"));
        // 5^100 stays exact
        let big = pow(&n(5), &n(100));
        assert_eq!(
            big.natural_value().unwrap(),
            BigUint::from(5u32).pow(100u32)
        );
    }

    #[test]
    fn left_subtract_examples() {
        assert_eq!(left_subtract(&n(5), &w()).unwrap(), w());
        assert_eq!(left_subtract(&w(), &parse("w + 5")).unwrap(), n(5));
        // (ω^ω + 1) + y = ω^ω + ω²  ⇒  y = ω²
        assert_eq!(
            left_subtract(&parse("w^w + 1"), &parse("w^w + w^2")).unwrap(),
            parse("w^2")
        );
        assert!(matches!(
            left_subtract(&w(), &n(5)),
            Err(ArithmeticError::LeftSubtractUnderflow { .. })
        ));
    }

    #[test]
    fn left_subtract_inverts_add() {
        for (a, x) in [
            (parse("w^w + w*2"), parse("w^w + w*2 + 5")),
            (parse("w_1"), parse("w_1 + w^3")),
            (parse("w*2"), parse("w*2")),
            (parse("3"), parse("w_2 + w_1 + w + 1")),
        ] {
            let y = left_subtract(&a, &x).unwrap();
            assert_eq!(add(&a, &y), x, "a={a}, x={x}, y={y}");
        }
    }

    #[test]
    fn pred_and_successor() {
        assert_eq!(pred(&n(1)).unwrap(), OrdinalTerm::zero());
        assert_eq!(pred(&parse("w + 3")).unwrap(), parse("w + 2"));
        assert_eq!(pred(&w()), None);
        assert_eq!(successor(&w()).render(), "w + 1");
    }

    #[test]
    fn cofinality_table() {
        assert_eq!(cofinality(&OrdinalTerm::zero()), OrdinalTerm::zero());
        assert_eq!(cofinality(&parse("w + 1")), n(1));
        assert_eq!(cofinality(&w()), w());
        assert_eq!(cofinality(&parse("w^2")), w());
        assert_eq!(cofinality(&parse("w^w")), w());
        assert_eq!(cofinality(&atom(1)), atom(1));
        assert_eq!(cofinality(&parse("w_2 + w_1")), atom(1));
        // Ω₁·ω = ω^{Ω₁+1} has countable cofinality
        assert_eq!(cofinality(&parse("w^(w_1 + 1)")), w());
        // ω^{Ω₁·2} inherits cf(Ω₁·2) = Ω₁
        assert_eq!(cofinality(&parse("w^(w_1*2)")), atom(1));
    }

    #[test]
    fn regular_uncountable_is_syntactic() {
        assert!(is_regular_uncountable(&atom(1)));
        assert!(is_regular_uncountable(&atom(64)));
        assert!(!is_regular_uncountable(&w()));
        assert!(!is_regular_uncountable(&parse("w_1*2")));
        assert!(!is_regular_uncountable(&parse("w_1 + 1")));
        assert!(!is_regular_uncountable(&parse("w_2 + w_1")));
    }

    #[test]
    fn decompose_splits_at_the_base_exponent() {
        // x = ω² + 3 at b = 1: ε = 1, m = 0, η = 3
        let d = decompose_base(&parse("w^2 + 3"), &n(1));
        assert_eq!(d.epsilon, n(1));
        assert_eq!(d.finite, BigUint::zero());
        assert_eq!(d.eta, n(3));
        assert_eq!(d.reassemble(&n(1)), parse("w^2 + 3"));

        // x = ω^{β_γ+1} + 1 at b = β_δ with β_δ < β_γ: ε = ω^ζ, β_γ+1 = β_δ+1+ζ
        let d = decompose_base(&parse("w^(w*2 + 1) + 1"), &w());
        assert_eq!(d.epsilon, parse("w^(w + 1)"));
        assert_eq!(d.finite, BigUint::zero());
        assert_eq!(d.eta, n(1));
        assert_eq!(d.reassemble(&w()), parse("w^(w*2 + 1) + 1"));
    }

    #[test]
    fn decompose_handles_atoms_above_the_base() {
        // Ω₁ at b = ω: ε = Ω₁ because (ω+1) + Ω₁ = Ω₁
        let d = decompose_base(&atom(1), &w());
        assert_eq!(d.epsilon, atom(1));
        assert_eq!(d.finite, BigUint::zero());
        assert!(d.eta.is_zero());
        assert_eq!(d.reassemble(&w()), atom(1));
    }

    #[test]
    fn decompose_collects_middle_and_tail() {
        // x = ω³·2 + ω²·7 + ω·4 + 9 at b = 2: ε = 2, m = 7, η = ω·4 + 9
        let d = decompose_base(&parse("w^3*2 + w^2*7 + w*4 + 9"), &n(2));
        assert_eq!(d.epsilon, n(2));
        assert_eq!(d.finite, BigUint::from(7u32));
        assert_eq!(d.eta, parse("w*4 + 9"));
        assert_eq!(d.reassemble(&n(2)), parse("w^3*2 + w^2*7 + w*4 + 9"));
    }

    #[test]
    fn canonical_cofinal_examples() {
        assert_eq!(
            canonical_cofinal(&parse("w^2"), &n(3)).unwrap(),
            parse("w*4")
        );
        assert_eq!(canonical_cofinal(&atom(1), &w()).unwrap(), parse("w + 1"));
        // β_δ below ω^ω at δ = 2 is ω³
        assert_eq!(
            canonical_cofinal(&parse("w^w"), &n(2)).unwrap(),
            parse("w^3")
        );
        assert_eq!(canonical_cofinal(&w(), &n(0)).unwrap(), n(1));
        // surplus coefficient folds into the prefix: (ω²·2)[1] = ω² + ω·2
        assert_eq!(
            canonical_cofinal(&parse("w^2*2"), &n(1)).unwrap(),
            parse("w^2 + w*2")
        );
        // atom in the last summand: (Ω₁·2)[ω] = Ω₁ + ω^{ω+1}
        assert_eq!(
            canonical_cofinal(&parse("w_1*2"), &w()).unwrap(),
            parse("w_1 + w^(w + 1)")
        );
    }

    #[test]
    fn canonical_cofinal_rejects_bad_inputs() {
        assert!(matches!(
            canonical_cofinal(&parse("w + 1"), &n(0)),
            Err(ArithmeticError::NotALimit { .. })
        ));
        // cf(ω²) = ω, so an infinite index is out of range
        assert!(matches!(
            canonical_cofinal(&parse("w^2"), &w()),
            Err(ArithmeticError::IndexNotBelowCofinality { .. })
        ));
        assert!(matches!(
            canonical_cofinal(&atom(1), &atom(1)),
            Err(ArithmeticError::IndexNotBelowCofinality { .. })
        ));
    }

    #[test]
    fn canonical_cofinal_is_strictly_increasing_and_below_beta() {
        for beta in [
            parse("w"),
            parse("w^2"),
            parse("w^w"),
            parse("w_1"),
            parse("w_2 + w^w*3"),
        ] {
            let mut prev: Option<OrdinalTerm> = None;
            for d in 0..6u64 {
                let v = canonical_cofinal(&beta, &n(d)).unwrap();
                assert!(v < beta, "beta_delta must stay below beta");
                if let Some(p) = prev {
                    assert!(p < v, "family must be strictly increasing");
                }
                prev = Some(v);
            }
        }
    }

    #[test]
    fn cnf_view_round_trips() {
        for t in [
            OrdinalTerm::zero(),
            n(7),
            parse("w^w*2 + w*3 + 5"),
            parse("w_2 + w^(w_1 + 1) + w_1*4 + w^2"),
        ] {
            assert_eq!(t.cnf().reassemble(), t);
        }
    }

    #[test]
    fn from_summands_applies_sum_semantics() {
        // 1 + ω given in ascending order collapses to ω
        let t = from_summands(vec![
            (OrdinalTerm::zero(), BigUint::one()),
            (n(1), BigUint::one()),
        ]);
        assert_eq!(t, w());
    }
}
