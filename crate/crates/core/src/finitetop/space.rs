//! Finite topological spaces as bitmask families, and the exhaustive
//! checks built on them.

use std::collections::BTreeSet;

use super::{FiniteTopError, MAX_POINTS};

/// A topology on the points `0..n`: subsets are `u32` bitmasks, and the open
/// family is validated to contain ∅ and the full set and to be closed under
/// pairwise union and intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    n: usize,
    opens: BTreeSet<u32>,
}

impl FiniteSpace {
    /// Validating constructor. ∅ and the full set are required members.
    pub fn new(n: usize, opens: impl IntoIterator<Item = u32>) -> Result<Self, FiniteTopError> {
        if n > MAX_POINTS {
            return Err(FiniteTopError::TooManyPoints { n, max: MAX_POINTS });
        }
        let full = full_mask(n);
        let opens: BTreeSet<u32> = opens.into_iter().collect();
        for &u in &opens {
            if u & !full != 0 {
                return Err(FiniteTopError::SetOutOfRange { mask: u });
            }
        }
        if !opens.contains(&0) || !opens.contains(&full) {
            return Err(FiniteTopError::MissingEmptyOrFull);
        }
        for &a in &opens {
            for &b in &opens {
                if !opens.contains(&(a | b)) {
                    return Err(FiniteTopError::NotClosedUnderUnion { a, b });
                }
                if !opens.contains(&(a & b)) {
                    return Err(FiniteTopError::NotClosedUnderIntersection { a, b });
                }
            }
        }
        Ok(FiniteSpace { n, opens })
    }

    /// Internal constructor for families that are topologies by construction
    /// (final topologies, the discrete topology).
    fn from_computed(n: usize, opens: BTreeSet<u32>) -> Self {
        debug_assert!(n <= MAX_POINTS);
        FiniteSpace { n, opens }
    }

    pub fn discrete(n: usize) -> Result<Self, FiniteTopError> {
        if n > MAX_POINTS {
            return Err(FiniteTopError::TooManyPoints { n, max: MAX_POINTS });
        }
        Ok(Self::from_computed(n, (0..=full_mask(n)).collect()))
    }

    pub fn indiscrete(n: usize) -> Result<Self, FiniteTopError> {
        if n > MAX_POINTS {
            return Err(FiniteTopError::TooManyPoints { n, max: MAX_POINTS });
        }
        Ok(Self::from_computed(
            n,
            [0, full_mask(n)].into_iter().collect(),
        ))
    }

    /// Two points `{0, 1}` with opens `{∅, {0}, X}`: the smallest space with
    /// a non-closed singleton.
    pub fn sierpinski() -> Self {
        Self::from_computed(2, [0b00, 0b01, 0b11].into_iter().collect())
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> u32 {
        full_mask(self.n)
    }

    pub fn is_open(&self, set: u32) -> bool {
        self.opens.contains(&set)
    }

    pub fn is_closed(&self, set: u32) -> bool {
        self.opens.contains(&(self.full_mask() & !set))
    }

    pub fn opens(&self) -> impl Iterator<Item = u32> + '_ {
        self.opens.iter().copied()
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    /// Smallest closed superset: the complement of the union of all opens
    /// disjoint from `set`.
    pub fn closure(&self, set: u32) -> u32 {
        let mut exterior = 0u32;
        for &u in &self.opens {
            if u & set == 0 {
                exterior |= u;
            }
        }
        self.full_mask() & !exterior
    }

    /// `set ∩ piece` is open in the subspace `piece`, i.e. agrees on `piece`
    /// with some open of the whole space.
    pub fn relatively_open(&self, set: u32, piece: u32) -> bool {
        self.opens.iter().any(|&v| v & piece == set & piece)
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates all submasks of `s`, including 0 and `s` itself.
fn submasks(s: u32) -> impl Iterator<Item = u32> {
    let mut current = s;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = current;
        if current == 0 {
            done = true;
        } else {
            current = (current - 1) & s;
        }
        Some(out)
    })
}

/// `S` is τ-discrete in `X`: every subset of `S` with fewer than `τ` points
/// is closed in `X`. Decided by enumerating all submasks of `S`. Requires
/// `τ ≥ 1` and `S` within the space.
pub fn is_tau_discrete(x: &FiniteSpace, s: u32, tau: usize) -> bool {
    debug_assert!(tau >= 1, "τ must be at least 1");
    debug_assert_eq!(s & !x.full_mask(), 0, "S must lie inside the space");
    submasks(s).all(|a| (a.count_ones() as usize) >= tau || x.is_closed(a))
}

/// The refinement `T_{<τ}`: the final topology with respect to the
/// inclusions of all subspaces with fewer than `τ` points. A set is open
/// exactly when its trace on every such subspace is relatively open. For
/// `τ = 1` only the empty subspace constrains, so the result is discrete.
pub fn subtau_topology(x: &FiniteSpace, tau: usize) -> FiniteSpace {
    debug_assert!(tau >= 1, "τ must be at least 1");
    let full = x.full_mask();
    let pieces: Vec<u32> = submasks(full)
        .filter(|p| (p.count_ones() as usize) < tau)
        .collect();
    let opens: BTreeSet<u32> = (0..=full)
        .filter(|&u| pieces.iter().all(|&p| x.relatively_open(u, p)))
        .collect();
    FiniteSpace::from_computed(x.points(), opens)
}

/// Compares the two sides of the τ-discreteness reflection: the left side is
/// `is_tau_discrete(X, S, τ)`, the right side is "S is closed and discrete in
/// `(X, T_{<τ})`". Returns whether the biconditional holds for this instance.
pub fn check_prop21(x: &FiniteSpace, s: u32, tau: usize) -> bool {
    let lhs = is_tau_discrete(x, s, tau);
    let refined = subtau_topology(x, tau);
    let closed = refined.is_closed(s);
    let discrete = (0..x.points())
        .filter(|&i| s & (1 << i) != 0)
        .all(|i| refined.opens().any(|u| u & s == 1 << i));
    lhs == (closed && discrete)
}

/// Checks the pullback implication "if `f(S)` is τ-discrete in `Y` then `S`
/// is τ-discrete in `X`" for a concrete continuous map `f` (given pointwise)
/// that is injective on `S`. Continuity and injectivity are validated.
pub fn check_prop22(
    x: &FiniteSpace,
    y: &FiniteSpace,
    f: &[usize],
    s: u32,
    tau: usize,
) -> Result<bool, FiniteTopError> {
    if f.len() != x.points() {
        return Err(FiniteTopError::PointOutOfRange { point: f.len() });
    }
    for (point, &value) in f.iter().enumerate() {
        if value >= y.points() {
            return Err(FiniteTopError::MapValueOutOfRange { point, value });
        }
    }
    for v in y.opens() {
        let preimage = (0..x.points())
            .filter(|&i| v & (1 << f[i]) != 0)
            .fold(0u32, |m, i| m | (1 << i));
        if !x.is_open(preimage) {
            return Err(FiniteTopError::MapNotContinuous { open: v, preimage });
        }
    }
    let s_points: Vec<usize> = (0..x.points()).filter(|&i| s & (1 << i) != 0).collect();
    for (k, &i) in s_points.iter().enumerate() {
        for &j in &s_points[k + 1..] {
            if f[i] == f[j] {
                return Err(FiniteTopError::MapNotInjectiveOnSubset { x: i, y: j });
            }
        }
    }
    let image = s_points.iter().fold(0u32, |m, &i| m | (1 << f[i]));
    Ok(!is_tau_discrete(y, image, tau) || is_tau_discrete(x, s, tau))
}

fn validate_cover_range_and_union(x: &FiniteSpace, cover: &[u32]) -> Result<(), FiniteTopError> {
    let full = x.full_mask();
    let mut union = 0u32;
    for &p in cover {
        if p & !full != 0 {
            return Err(FiniteTopError::SetOutOfRange { mask: p });
        }
        union |= p;
    }
    if union != full {
        return Err(FiniteTopError::CoverDoesNotCover { union });
    }
    Ok(())
}

fn final_topology(x: &FiniteSpace, pieces: &[u32]) -> FiniteSpace {
    let full = x.full_mask();
    let opens: BTreeSet<u32> = (0..=full)
        .filter(|&u| pieces.iter().all(|&p| x.relatively_open(u, p)))
        .collect();
    FiniteSpace::from_computed(x.points(), opens)
}

/// The final topology on `X` with respect to the inclusions of a directed
/// covering family of subsets (each carrying the subspace topology). Rejects
/// families that are not directed under ⊆ or do not cover `X`.
pub fn colimit_topology(x: &FiniteSpace, cover: &[u32]) -> Result<FiniteSpace, FiniteTopError> {
    validate_cover_range_and_union(x, cover)?;
    for &a in cover {
        for &b in cover {
            if !cover.iter().any(|&c| (a | b) & !c == 0) {
                return Err(FiniteTopError::CoverNotDirected { a, b });
            }
        }
    }
    Ok(final_topology(x, cover))
}

/// Evidence that gluing over a covering family genuinely refines the base
/// topology: a witness set closed in every piece but not closed in `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColimitCertificate {
    /// The witness set S.
    pub witness: u32,
    /// For each piece, whether `S ∩ piece` is relatively closed (all true by
    /// construction).
    pub piece_flags: Vec<bool>,
    /// The closure of S in the base topology — strictly larger than S.
    pub base_closure: u32,
}

impl ColimitCertificate {
    /// Re-derives every field from scratch and confirms the certificate.
    pub fn validate(&self, x: &FiniteSpace, cover: &[u32]) -> bool {
        if self.piece_flags.len() != cover.len() {
            return false;
        }
        let full = x.full_mask();
        for (&p, &flag) in cover.iter().zip(&self.piece_flags) {
            let closed_in_piece = x.relatively_open(full & !self.witness, p);
            if !flag || !closed_in_piece {
                return false;
            }
        }
        x.closure(self.witness) == self.base_closure && self.base_closure != self.witness
    }
}

/// Searches for a set witnessing that the glued topology over `cover` differs
/// from the base topology: `S` closed in every piece yet not closed in `X`.
/// Returns `None` when gluing reproduces the base topology exactly.
///
/// Only the covering condition is validated here. (For *finite* families,
/// directedness forces the full space to be a member of the cover, which
/// makes the glued topology equal to the base one; certificates live
/// precisely in the non-directed case.)
pub fn notcolim_witness(
    x: &FiniteSpace,
    cover: &[u32],
) -> Result<Option<ColimitCertificate>, FiniteTopError> {
    validate_cover_range_and_union(x, cover)?;
    let glued = final_topology(x, cover);
    let full = x.full_mask();
    for u in 0..=full {
        if glued.is_open(u) && !x.is_open(u) {
            let witness = full & !u;
            let piece_flags = cover
                .iter()
                .map(|&p| x.relatively_open(u, p))
                .collect::<Vec<bool>>();
            let certificate = ColimitCertificate {
                witness,
                piece_flags,
                base_closure: x.closure(witness),
            };
            debug_assert!(certificate.validate(x, cover));
            return Ok(Some(certificate));
        }
    }
    Ok(None)
}

/// Enumerates every topology on `n` labeled points (n ≤ 4) by brute force
/// over families of subsets. The counts for n = 0..4 are 1, 1, 4, 29, 355.
pub fn all_topologies(n: usize) -> Vec<FiniteSpace> {
    assert!(
        n <= 4,
        "exhaustive topology enumeration is capped at 4 points"
    );
    let full = full_mask(n);
    // Candidate families always contain ∅ and X; choose any subset of the
    // remaining 2^n − 2 proper nonempty subsets and keep the lattice-closed
    // ones.
    let middles: Vec<u32> = (1..full).collect();
    let mut out = Vec::new();
    for choice in 0u32..(1 << middles.len()) {
        let mut opens: BTreeSet<u32> = [0, full].into_iter().collect();
        for (bit, &m) in middles.iter().enumerate() {
            if choice & (1 << bit) != 0 {
                opens.insert(m);
            }
        }
        let closed = opens.iter().all(|&a| {
            opens
                .iter()
                .all(|&b| opens.contains(&(a | b)) && opens.contains(&(a & b)))
        });
        if closed {
            out.push(FiniteSpace::from_computed(n, opens));
        }
    }
    out
}
