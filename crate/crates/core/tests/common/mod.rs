//! Shared test support: seeded random canonical terms, and an independent
//! coefficient-vector model of the ordinals below ω^ω used as an arithmetic
//! oracle. The model stores the coefficient of ω^i at index i and implements
//! addition, multiplication, and natural powers directly from the textbook
//! recursions — deliberately not via the engine under test.
#![allow(dead_code)]

use cshp_core::{from_summands, OrdinalTerm};
use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random canonical term of the given height. Height 0 yields naturals and
/// (optionally) atoms; height `d+1` yields sums of up to three monomials
/// whose exponents are random terms of height `d`. Canonicality comes from
/// assembling through ordinal addition, so any generated sequence is legal.
pub fn random_term(rng: &mut ChaCha8Rng, height: usize, allow_atoms: bool) -> OrdinalTerm {
    if height == 0 {
        if allow_atoms && rng.gen_range(0..10) == 9 {
            return OrdinalTerm::atom(rng.gen_range(1..=3)).expect("small index");
        }
        return OrdinalTerm::nat(rng.gen_range(0..6));
    }
    let count = rng.gen_range(1..=3);
    let items: Vec<(OrdinalTerm, BigUint)> = (0..count)
        .map(|_| {
            let exp = random_term(rng, height - 1, allow_atoms);
            let coeff = BigUint::from(rng.gen_range(1u64..=4));
            (exp, coeff)
        })
        .collect();
    from_summands(items)
}

/// Coefficient vector for an ordinal below ω^ω: `p[i]` is the coefficient of
/// ω^i. No trailing zeros; the empty vector is 0.
pub type Poly = Vec<u64>;

pub fn poly_trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Ordinal addition in the model: the right operand's leading power absorbs
/// everything strictly below it on the left, the coefficients at that power
/// add, and the right operand's lower part is appended unchanged.
pub fn poly_add(a: &Poly, b: &Poly) -> Poly {
    if b.is_empty() {
        return a.clone();
    }
    let d = b.len() - 1;
    let mut out = vec![0u64; a.len().max(b.len())];
    out[..=d].copy_from_slice(&b[..=d]);
    if a.len() > d + 1 {
        out[d + 1..a.len()].copy_from_slice(&a[d + 1..]);
    }
    out[d] += a.get(d).copied().unwrap_or(0);
    poly_trim(out)
}

/// Ordinal multiplication in the model: distribute over the right factor's
/// monomials from the highest power down; `a·ω^j = ω^{deg a + j}` for `j ≥ 1`,
/// and multiplying by a natural scales only the leading coefficient.
pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let e = a.len() - 1;
    let mut acc: Poly = Vec::new();
    for j in (0..b.len()).rev() {
        let c = b[j];
        if c == 0 {
            continue;
        }
        let piece: Poly = if j > 0 {
            let mut p = vec![0u64; e + j + 1];
            p[e + j] = c;
            p
        } else {
            let mut p = a.clone();
            p[e] *= c;
            p
        };
        acc = poly_add(&acc, &piece);
    }
    acc
}

/// Natural power in the model, by literal repeated multiplication.
pub fn poly_pow_nat(a: &Poly, n: u64) -> Poly {
    let mut out: Poly = vec![1];
    for _ in 0..n {
        out = poly_mul(&out, a);
    }
    out
}

/// Embeds a model value into the engine's term type.
pub fn poly_to_term(p: &Poly) -> OrdinalTerm {
    from_summands(
        p.iter()
            .enumerate()
            .rev()
            .filter(|&(_, &c)| c > 0)
            .map(|(i, &c)| (OrdinalTerm::nat(i as u64), BigUint::from(c))),
    )
}

/// A random model value with degree below `max_len` and small coefficients
/// (zero coefficients, including an all-zero result, are possible).
pub fn random_poly(rng: &mut ChaCha8Rng, max_len: usize) -> Poly {
    let len = rng.gen_range(0..=max_len);
    poly_trim((0..len).map(|_| rng.gen_range(0..5)).collect())
}
