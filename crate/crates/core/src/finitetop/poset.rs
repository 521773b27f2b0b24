//! Finite posets with a designated enumerated cofinal subset, and the
//! index-greedy thinning that extracts a subfamily on which domination never
//! points forward in pick order.

use super::FiniteTopError;

/// A partial order on `0..n` plus an enumeration of a designated subset `C`.
///
/// The order is given by generating pairs; the constructor takes the
/// reflexive–transitive closure and validates antisymmetry, so the stored
/// relation is always a genuine partial order. The enumeration is caller
/// data: the thinning's output depends on its order, so it is never derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedPoset {
    n: usize,
    le: Vec<bool>,
    enumeration: Vec<usize>,
}

impl EnumeratedPoset {
    pub fn new(
        n: usize,
        relations: &[(usize, usize)],
        enumeration: Vec<usize>,
    ) -> Result<Self, FiniteTopError> {
        for &(a, b) in relations {
            if a >= n {
                return Err(FiniteTopError::PointOutOfRange { point: a });
            }
            if b >= n {
                return Err(FiniteTopError::PointOutOfRange { point: b });
            }
        }
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for &(a, b) in relations {
            le[a * n + b] = true;
        }
        // Floyd–Warshall-style transitive closure.
        for k in 0..n {
            for i in 0..n {
                if le[i * n + k] {
                    for j in 0..n {
                        if le[k * n + j] {
                            le[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if le[a * n + b] && le[b * n + a] {
                    return Err(FiniteTopError::OrderNotAntisymmetric { a, b });
                }
            }
        }
        let mut seen = vec![false; n];
        for &e in &enumeration {
            if e >= n {
                return Err(FiniteTopError::PointOutOfRange { point: e });
            }
            if seen[e] {
                return Err(FiniteTopError::EnumerationNotInjective { element: e });
            }
            seen[e] = true;
        }
        Ok(EnumeratedPoset { n, le, enumeration })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a * self.n + b]
    }

    /// The enumerated subset `C = [c_0, c_1, …]` in enumeration order.
    pub fn enumeration(&self) -> &[usize] {
        &self.enumeration
    }
}

/// Output of [`cofinal_thin`]: the chosen elements `c_{α_γ}` in pick order,
/// together with the indices `α_γ` into the enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinResult {
    pub elements: Vec<usize>,
    pub picked_indices: Vec<usize>,
}

/// Greedy thinning of the enumerated cofinal set: repeatedly pick the least
/// enumeration index whose element is not dominated by any earlier pick, and
/// stop when no candidate remains.
///
/// The result is again cofinal, and satisfies the index-monotonicity
/// property: whenever `c_{α_γ} ≤ c_{α_β}` for picks `γ`, `β`, then `γ ≤ β`.
/// Requires the enumerated set to be cofinal in the whole poset.
pub fn cofinal_thin(p: &EnumeratedPoset) -> Result<ThinResult, FiniteTopError> {
    let c = p.enumeration();
    for x in 0..p.len() {
        if !c.iter().any(|&e| p.le(x, e)) {
            return Err(FiniteTopError::EnumerationNotCofinal { element: x });
        }
    }
    let mut elements = Vec::new();
    let mut picked_indices = Vec::new();
    loop {
        let candidate =
            (0..c.len()).find(|&alpha| elements.iter().all(|&picked| !p.le(c[alpha], picked)));
        match candidate {
            Some(alpha) => {
                picked_indices.push(alpha);
                elements.push(c[alpha]);
            }
            None => break,
        }
    }
    Ok(ThinResult {
        elements,
        picked_indices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_closes_and_validates_the_order() {
        // chain 0 < 1 < 2 given by covers only: closure supplies 0 ≤ 2
        let p = EnumeratedPoset::new(3, &[(0, 1), (1, 2)], vec![0, 1, 2]).unwrap();
        assert!(p.le(0, 2));
        assert!(p.le(1, 1));
        assert!(!p.le(2, 0));

        assert_eq!(
            EnumeratedPoset::new(2, &[(0, 1), (1, 0)], vec![0]),
            Err(FiniteTopError::OrderNotAntisymmetric { a: 0, b: 1 })
        );
        assert_eq!(
            EnumeratedPoset::new(2, &[(0, 3)], vec![0]),
            Err(FiniteTopError::PointOutOfRange { point: 3 })
        );
        assert_eq!(
            EnumeratedPoset::new(2, &[], vec![0, 0]),
            Err(FiniteTopError::EnumerationNotInjective { element: 0 })
        );
    }

    #[test]
    fn thinning_keeps_an_antichain() {
        let p = EnumeratedPoset::new(2, &[], vec![0, 1]).unwrap();
        let r = cofinal_thin(&p).unwrap();
        assert_eq!(r.elements, vec![0, 1]);
        assert_eq!(r.picked_indices, vec![0, 1]);
    }

    #[test]
    fn thinning_keeps_an_increasing_chain() {
        let p = EnumeratedPoset::new(3, &[(0, 1), (1, 2)], vec![0, 1, 2]).unwrap();
        let r = cofinal_thin(&p).unwrap();
        assert_eq!(r.elements, vec![0, 1, 2]);
    }

    #[test]
    fn thinning_stops_after_a_top_element_listed_first() {
        // diamond: 0, 1 < 2, enumerated top-first
        let p = EnumeratedPoset::new(3, &[(0, 2), (1, 2)], vec![2, 0, 1]).unwrap();
        let r = cofinal_thin(&p).unwrap();
        assert_eq!(r.elements, vec![2]);
        assert_eq!(r.picked_indices, vec![0]);
    }

    #[test]
    fn thinning_depends_on_the_enumeration_order() {
        // same diamond, bottoms first: the bottoms are picked before the top
        // appears, and the top still qualifies since it is below neither
        let p = EnumeratedPoset::new(3, &[(0, 2), (1, 2)], vec![0, 1, 2]).unwrap();
        let r = cofinal_thin(&p).unwrap();
        assert_eq!(r.elements, vec![0, 1, 2]);
    }

    #[test]
    fn thinning_rejects_a_non_cofinal_enumeration() {
        // 2 is maximal but not enumerated
        let p = EnumeratedPoset::new(3, &[(0, 1)], vec![0, 1]).unwrap();
        assert_eq!(
            cofinal_thin(&p),
            Err(FiniteTopError::EnumerationNotCofinal { element: 2 })
        );
    }

    #[test]
    fn thinning_output_is_cofinal_and_index_monotone() {
        // all posets on ≤ 4 elements via random-ish generating relations,
        // several enumerations each
        let cases: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (1, vec![]),
            (2, vec![]),
            (2, vec![(0, 1)]),
            (3, vec![(0, 1), (1, 2)]),
            (3, vec![(0, 2), (1, 2)]),
            (3, vec![(0, 1), (0, 2)]),
            (4, vec![(0, 1), (1, 3), (0, 2), (2, 3)]),
            (4, vec![(0, 1), (2, 3)]),
            (4, vec![]),
        ];
        for (n, rels) in cases {
            let full: Vec<usize> = (0..n).collect();
            let mut enumerations = vec![full.clone()];
            enumerations.push(full.iter().rev().copied().collect());
            if n >= 3 {
                let mut rotated = full.clone();
                rotated.rotate_left(1);
                enumerations.push(rotated);
            }
            for enumeration in enumerations {
                let p = EnumeratedPoset::new(n, &rels, enumeration.clone()).unwrap();
                let r = cofinal_thin(&p).unwrap();
                // (i) cofinal
                for x in 0..n {
                    assert!(
                        r.elements.iter().any(|&j| p.le(x, j)),
                        "n={n} rels={rels:?} enum={enumeration:?}: {x} not dominated"
                    );
                }
                // (ii) index-monotone: later picks are never below earlier picks
                for g in 0..r.elements.len() {
                    for b in 0..g {
                        assert!(
                            !p.le(r.elements[g], r.elements[b]),
                            "pick {g} is dominated by earlier pick {b}"
                        );
                    }
                }
                // (iii) picks come from the enumeration
                for (&e, &i) in r.elements.iter().zip(&r.picked_indices) {
                    assert_eq!(p.enumeration()[i], e);
                }
            }
        }
    }
}
