//! Ordinal terms in Cantor normal form with base ω.
//!
//! A term is either zero (the empty sum) or a strictly decreasing sum
//! `ω^e1·c1 + … + ω^en·cn` with positive natural coefficients. On top of the
//! countable fragment the notation carries uncountable-cardinal atoms
//! `Ω_1 < Ω_2 < …` (rendered `w_1`, `w_2`, …), each an ε-number fixed point:
//! `ω^{Ω_k} = Ω_k`. An atom is stored as the summand whose exponent is the
//! atom itself, so regularity checks stay syntactic. Countable ε-numbers
//! (ε₀, …) and singular cardinals (ω_ω, …) are deliberately not representable.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Largest supported atom index; `w_65` and beyond are rejected at parse time.
pub const MAX_ATOM_INDEX: u32 = 64;

/// Exponent of ω in one CNF summand.
///
/// `Atom(k)` marks the fixed point `ω^{Ω_k} = Ω_k`; a term-valued exponent
/// that happens to equal an atom must be collapsed to `Atom` (see
/// [`Exponent::from_term`]), so each ordinal has exactly one representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Exponent {
    Atom(u32),
    Ord(OrdinalTerm),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Summand {
    pub(crate) exp: Exponent,
    pub(crate) coeff: BigUint,
}

/// An ordinal in Cantor normal form. Construct via [`OrdinalTerm::zero`],
/// [`OrdinalTerm::nat`], [`OrdinalTerm::omega`], [`OrdinalTerm::atom`],
/// [`OrdinalTerm::omega_pow`], the arithmetic operations, or the parser.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrdinalTerm {
    /// Strictly decreasing exponents; empty means zero.
    pub(crate) summands: Vec<Summand>,
}

/// Zero / successor / limit classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrdinalClass {
    Zero,
    Successor,
    Limit,
}

impl fmt::Display for OrdinalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdinalClass::Zero => write!(f, "zero"),
            OrdinalClass::Successor => write!(f, "successor"),
            OrdinalClass::Limit => write!(f, "limit"),
        }
    }
}

impl Exponent {
    /// Wraps a term as an exponent, collapsing `ω^{Ω_k} = Ω_k`.
    pub(crate) fn from_term(t: OrdinalTerm) -> Exponent {
        match t.as_atom() {
            Some(k) => Exponent::Atom(k),
            None => Exponent::Ord(t),
        }
    }

    /// The exponent as an ordinal value.
    pub(crate) fn to_term(&self) -> OrdinalTerm {
        match self {
            Exponent::Atom(k) => OrdinalTerm::atom(*k).expect("stored atom index is valid"),
            Exponent::Ord(t) => t.clone(),
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        matches!(self, Exponent::Ord(t) if t.is_zero())
    }
}

/// Total order on exponents, agreeing with the ordinal order of their values.
///
/// `Atom(k)` vs. a term exponent is decided against the term's leading
/// summand: `Ω_k = ω^{Ω_k}` dominates any `ω^e·c + …` with `e < Ω_k` and is
/// dominated by any with `e > Ω_k`; on equal leading exponent the remaining
/// summands tip the balance. The recursion always descends into structurally
/// smaller terms, so it terminates.
pub(crate) fn cmp_exp(a: &Exponent, b: &Exponent) -> Ordering {
    match (a, b) {
        (Exponent::Atom(j), Exponent::Atom(k)) => j.cmp(k),
        (Exponent::Ord(s), Exponent::Ord(t)) => cmp_term(s, t),
        (Exponent::Atom(k), Exponent::Ord(t)) => cmp_atom_term(*k, t),
        (Exponent::Ord(t), Exponent::Atom(k)) => cmp_atom_term(*k, t).reverse(),
    }
}

fn cmp_atom_term(k: u32, t: &OrdinalTerm) -> Ordering {
    let Some(lead) = t.summands.first() else {
        return Ordering::Greater; // Ω_k > 0
    };
    match cmp_exp(&Exponent::Atom(k), &lead.exp) {
        Ordering::Less => Ordering::Less,
        Ordering::Greater => Ordering::Greater,
        Ordering::Equal => {
            // t = ω^{Ω_k}·c + rest = Ω_k·c + rest; the atom alone is smaller
            // unless t is exactly Ω_k (excluded by canonical form, but kept
            // total for safety).
            if lead.coeff.is_one() && t.summands.len() == 1 {
                Ordering::Equal
            } else {
                Ordering::Less
            }
        }
    }
}

/// Lexicographic comparison of CNF summand lists: the first differing
/// (exponent, coefficient) pair decides; a proper prefix is smaller.
pub(crate) fn cmp_term(a: &OrdinalTerm, b: &OrdinalTerm) -> Ordering {
    for (x, y) in a.summands.iter().zip(b.summands.iter()) {
        match cmp_exp(&x.exp, &y.exp) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match x.coeff.cmp(&y.coeff) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    a.summands.len().cmp(&b.summands.len())
}

impl Ord for OrdinalTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_term(self, other)
    }
}

impl PartialOrd for OrdinalTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Three-way comparison in the ordinal order.
pub fn compare(a: &OrdinalTerm, b: &OrdinalTerm) -> Ordering {
    a.cmp(b)
}

impl OrdinalTerm {
    pub fn zero() -> OrdinalTerm {
        OrdinalTerm {
            summands: Vec::new(),
        }
    }

    pub fn one() -> OrdinalTerm {
        OrdinalTerm::nat(1)
    }

    /// The finite ordinal `n`.
    pub fn nat(n: u64) -> OrdinalTerm {
        OrdinalTerm::nat_big(BigUint::from(n))
    }

    pub fn nat_big(n: BigUint) -> OrdinalTerm {
        if n.is_zero() {
            OrdinalTerm::zero()
        } else {
            OrdinalTerm {
                summands: vec![Summand {
                    exp: Exponent::Ord(OrdinalTerm::zero()),
                    coeff: n,
                }],
            }
        }
    }

    /// The least infinite ordinal ω.
    pub fn omega() -> OrdinalTerm {
        OrdinalTerm::omega_pow(&OrdinalTerm::one())
    }

    /// The atom `Ω_k` (`w_k`), an uncountable regular cardinal;
    /// `k` must lie in `1..=MAX_ATOM_INDEX`.
    pub fn atom(k: u32) -> Option<OrdinalTerm> {
        if k == 0 || k > MAX_ATOM_INDEX {
            return None;
        }
        Some(OrdinalTerm {
            summands: vec![Summand {
                exp: Exponent::Atom(k),
                coeff: BigUint::one(),
            }],
        })
    }

    /// `ω^e`, collapsing atom fixed points (`ω^{Ω_k} = Ω_k`).
    pub fn omega_pow(e: &OrdinalTerm) -> OrdinalTerm {
        OrdinalTerm {
            summands: vec![Summand {
                exp: Exponent::from_term(e.clone()),
                coeff: BigUint::one(),
            }],
        }
    }

    /// `ω^e · c`; zero when `c = 0`.
    pub(crate) fn monomial(exp: Exponent, coeff: BigUint) -> OrdinalTerm {
        if coeff.is_zero() {
            OrdinalTerm::zero()
        } else {
            OrdinalTerm {
                summands: vec![Summand { exp, coeff }],
            }
        }
    }

    pub(crate) fn from_raw(summands: Vec<Summand>) -> OrdinalTerm {
        let t = OrdinalTerm { summands };
        debug_assert!(t.is_canonical(), "constructed non-canonical term {t:?}");
        t
    }

    /// True when the structural invariants hold: strictly decreasing
    /// exponents, positive coefficients, and no term-wrapped atoms.
    pub(crate) fn is_canonical(&self) -> bool {
        for pair in self.summands.windows(2) {
            if cmp_exp(&pair[0].exp, &pair[1].exp) != Ordering::Greater {
                return false;
            }
        }
        self.summands.iter().all(|s| {
            !s.coeff.is_zero()
                && match &s.exp {
                    Exponent::Atom(k) => *k >= 1 && *k <= MAX_ATOM_INDEX,
                    Exponent::Ord(t) => t.as_atom().is_none() && t.is_canonical(),
                }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// `Some(n)` iff the term is the finite ordinal `n`.
    pub fn as_natural(&self) -> Option<&BigUint> {
        match self.summands.as_slice() {
            [] => None, // zero handled by the caller via is_zero, see natural_value
            [s] if s.exp.is_zero() => Some(&s.coeff),
            _ => None,
        }
    }

    /// The term's value as a natural number, if it is finite (including 0).
    pub fn natural_value(&self) -> Option<BigUint> {
        if self.is_zero() {
            Some(BigUint::zero())
        } else {
            self.as_natural().cloned()
        }
    }

    /// `Some(k)` iff the term is exactly the atom `Ω_k`.
    pub fn as_atom(&self) -> Option<u32> {
        match self.summands.as_slice() {
            [Summand {
                exp: Exponent::Atom(k),
                coeff,
            }] if coeff.is_one() => Some(*k),
            _ => None,
        }
    }

    /// Zero / successor / limit, read off the last CNF exponent.
    pub fn classify(&self) -> OrdinalClass {
        match self.summands.last() {
            None => OrdinalClass::Zero,
            Some(s) if s.exp.is_zero() => OrdinalClass::Successor,
            Some(_) => OrdinalClass::Limit,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.classify() == OrdinalClass::Successor
    }

    pub fn is_limit(&self) -> bool {
        self.classify() == OrdinalClass::Limit
    }

    /// Renders in the input grammar (`w`, `w_k`, `^`, `*`, `+`); the result
    /// parses back to the same term.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn is_single_token_exponent(t: &OrdinalTerm) -> bool {
    if t.natural_value().is_some() {
        return true;
    }
    // ω itself renders as the bare token `w`.
    match t.summands.as_slice() {
        [s] => {
            s.coeff.is_one()
                && matches!(&s.exp, Exponent::Ord(e) if e.as_natural().map(One::is_one).unwrap_or(false))
        }
        _ => false,
    }
}

impl fmt::Display for OrdinalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let coeff_suffix = !s.coeff.is_one();
            match &s.exp {
                Exponent::Atom(k) => write!(f, "w_{k}")?,
                Exponent::Ord(t) if t.is_zero() => {
                    write!(f, "{}", s.coeff)?;
                    continue;
                }
                Exponent::Ord(t) if t.as_natural().map(One::is_one).unwrap_or(false) => {
                    write!(f, "w")?
                }
                Exponent::Ord(t) if is_single_token_exponent(t) => write!(f, "w^{t}")?,
                Exponent::Ord(t) => write!(f, "w^({t})")?,
            }
            if coeff_suffix {
                write!(f, "*{}", s.coeff)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrdinalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrdinalTerm({self})")
    }
}
