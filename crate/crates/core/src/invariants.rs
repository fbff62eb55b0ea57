//! Scalar invariants of 2-forms in four dimensions, the representative
//! classifier, and distance-labelled vertex graphs of supports.
//!
//! For a 2-form `φ` the two independent rotation invariants are
//! `I1 = Σ_{a,b} φ_{ab} φ_{ba}` and `I2 = Σ ε_{abcd} φ_{ab} φ_{cd}`, summed
//! over all ordered index tuples. In sorted storage this gives
//! `I1 = -2·Σ φ_s²` and `I2 = 8·(φ_12 φ_34 - φ_13 φ_24 + φ_14 φ_23)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Error;
use crate::exterior::IndexTuple;
use crate::symmetry::{permutation_census, Transitivity};
use crate::{Form, Result};

/// `I1 = Σ φ_{ab} φ_{ba}` over ordered pairs; defined for any 2-form.
pub fn invariant_i1(f: &Form) -> Result<i64> {
    if f.degree() != 2 {
        return Err(Error::Degree(format!(
            "I1 needs a 2-form, got degree {}",
            f.degree()
        )));
    }
    Ok(-2 * f.components().map(|(_, c)| c * c).sum::<i64>())
}

/// `I2 = Σ ε_{abcd} φ_{ab} φ_{cd}` over ordered quadruples; needs `d = 4`.
/// Flips sign under orientation reversal.
pub fn invariant_i2(f: &Form) -> Result<i64> {
    if f.degree() != 2 || f.dim() != 4 {
        return Err(Error::Dimension(format!(
            "I2 needs a 2-form in four dimensions, got degree {} in d = {}",
            f.degree(),
            f.dim()
        )));
    }
    let c = |a: u8, b: u8| f.component(&[a, b]);
    Ok(8 * (c(1, 2) * c(3, 4) - c(1, 3) * c(2, 4) + c(1, 4) * c(2, 3)))
}

/// One row of the representative table of special 2-forms in four
/// dimensions.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationEntry {
    pub label: &'static str,
    /// Components in the order (12, 13, 14, 23, 24, 34).
    pub components: [i64; 6],
    pub i1: i64,
    pub i2: i64,
    pub democratic: bool,
}

impl ClassificationEntry {
    pub fn representative(&self) -> Form {
        let pairs: [(u8, u8); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        Form::from_components(
            4,
            2,
            pairs
                .iter()
                .zip(self.components)
                .filter(|(_, c)| *c != 0)
                .map(|(&(a, b), c)| (vec![a, b], c)),
        )
        .expect("table rows are well-formed")
    }
}

/// The 19 representative special 2-forms in four dimensions with their
/// invariant values and democracy flags.
pub const TABLE_2FORMS_4D: [ClassificationEntry; 19] = [
    ClassificationEntry { label: "A",  components: [1, 0, 0, 0, 0, 0],    i1: -2,  i2: 0,   democratic: false },
    ClassificationEntry { label: "B1", components: [1, 1, 0, 0, 0, 0],    i1: -4,  i2: 0,   democratic: false },
    ClassificationEntry { label: "B2", components: [1, 0, 0, 0, 0, 1],    i1: -4,  i2: 8,   democratic: true },
    ClassificationEntry { label: "B3", components: [1, 0, 0, 0, 0, -1],   i1: -4,  i2: -8,  democratic: true },
    ClassificationEntry { label: "C1", components: [1, 1, 1, 0, 0, 0],    i1: -6,  i2: 0,   democratic: false },
    ClassificationEntry { label: "C2", components: [1, 1, 0, 0, -1, 0],   i1: -6,  i2: 8,   democratic: false },
    ClassificationEntry { label: "C3", components: [1, 1, 0, 0, 1, 0],    i1: -6,  i2: -8,  democratic: false },
    ClassificationEntry { label: "D1", components: [1, 1, 1, 1, 0, 0],    i1: -8,  i2: 8,   democratic: false },
    ClassificationEntry { label: "D2", components: [1, 1, 1, -1, 0, 0],   i1: -8,  i2: -8,  democratic: false },
    ClassificationEntry { label: "D3", components: [1, 1, 0, 0, -1, 1],   i1: -8,  i2: 16,  democratic: true },
    ClassificationEntry { label: "D4", components: [1, 1, 0, 0, 1, 1],    i1: -8,  i2: 0,   democratic: true },
    ClassificationEntry { label: "D5", components: [1, 1, 0, 0, 1, -1],   i1: -8,  i2: -16, democratic: true },
    ClassificationEntry { label: "E1", components: [1, 1, 1, 1, -1, 0],   i1: -10, i2: 16,  democratic: false },
    ClassificationEntry { label: "E2", components: [1, 1, 1, 1, 1, 0],    i1: -10, i2: 0,   democratic: false },
    ClassificationEntry { label: "E3", components: [1, 1, 1, -1, 1, 0],   i1: -10, i2: -16, democratic: false },
    ClassificationEntry { label: "F1", components: [1, 1, 1, 1, -1, 1],   i1: -12, i2: 24,  democratic: true },
    ClassificationEntry { label: "F2", components: [1, 1, 1, 1, 1, 1],    i1: -12, i2: 8,   democratic: true },
    ClassificationEntry { label: "F3", components: [1, 1, 1, -1, -1, -1], i1: -12, i2: -8,  democratic: true },
    ClassificationEntry { label: "F4", components: [1, 1, 1, -1, 1, -1],  i1: -12, i2: -24, democratic: true },
];

/// Classifies a 2-form in four dimensions by its invariant pair; `None` when
/// no table row matches (the form is then not special).
pub fn classify_2form_4d(f: &Form) -> Result<Option<&'static ClassificationEntry>> {
    let i1 = invariant_i1(f)?;
    let i2 = invariant_i2(f)?;
    Ok(TABLE_2FORMS_4D
        .iter()
        .find(|row| row.i1 == i1 && row.i2 == i2))
}

/// The metric graph on the support: vertices are the support sets, edges
/// carry `dist(s, s̃) = p - |s ∩ s̃|` for distances strictly below `p`;
/// distance-p (disjoint) pairs are kept out of the edge list but counted in
/// the valence profiles.
#[derive(Clone, Debug)]
pub struct VertexGraph {
    pub degree: u8,
    pub vertices: Vec<IndexTuple>,
    /// Edges as (vertex index, vertex index, distance), distance < p.
    pub edges: Vec<(usize, usize, u8)>,
    /// Per-vertex map distance → neighbour count, distances `1..=p`.
    pub profiles: Vec<BTreeMap<u8, usize>>,
}

pub fn vertex_graph(f: &Form) -> VertexGraph {
    let p = f.degree();
    let vertices: Vec<IndexTuple> = f.supports().cloned().collect();
    let masks: Vec<u16> = vertices.iter().map(IndexTuple::mask).collect();
    let n = vertices.len();
    let mut edges = Vec::new();
    let mut profiles = vec![BTreeMap::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            let overlap = (masks[i] & masks[j]).count_ones() as u8;
            let dist = p - overlap;
            if dist < p {
                edges.push((i, j, dist));
            }
            *profiles[i].entry(dist).or_insert(0) += 1;
            *profiles[j].entry(dist).or_insert(0) += 1;
        }
    }
    VertexGraph {
        degree: p,
        vertices,
        edges,
        profiles,
    }
}

/// Vertices grouped by identical valence profiles, largest class first.
#[derive(Clone, Debug, Serialize)]
pub struct ProfileSummary {
    pub vertex_count: usize,
    /// (profile, number of vertices sharing it), profile as distance → count.
    pub classes: Vec<(BTreeMap<u8, usize>, usize)>,
}

pub fn valence_profile(f: &Form) -> ProfileSummary {
    let graph = vertex_graph(f);
    let mut classes: BTreeMap<Vec<(u8, usize)>, usize> = BTreeMap::new();
    for profile in &graph.profiles {
        let key: Vec<(u8, usize)> = profile.iter().map(|(&k, &v)| (k, v)).collect();
        *classes.entry(key).or_insert(0) += 1;
    }
    let mut classes: Vec<(BTreeMap<u8, usize>, usize)> = classes
        .into_iter()
        .map(|(k, v)| (k.into_iter().collect(), v))
        .collect();
    classes.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    ProfileSummary {
        vertex_count: graph.vertices.len(),
        classes,
    }
}

/// Democracy flag recomputed through the census (used to cross-check the
/// table's flags).
pub fn democracy_details(f: &Form) -> Result<(bool, Transitivity)> {
    let census = permutation_census(f)?;
    Ok((census.democratic, census.transitive_under))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::Index;

    fn form(dim: u8, deg: u8, comps: &[(i64, &[Index])]) -> Form {
        Form::from_components(dim, deg, comps.iter().map(|(c, idx)| (idx.to_vec(), *c))).unwrap()
    }

    #[test]
    fn invariants_of_table_rows() {
        for row in &TABLE_2FORMS_4D {
            let f = row.representative();
            assert_eq!(invariant_i1(&f).unwrap(), row.i1, "I1 of {}", row.label);
            assert_eq!(invariant_i2(&f).unwrap(), row.i2, "I2 of {}", row.label);
        }
    }

    #[test]
    fn invariant_pairs_pairwise_distinct() {
        for (i, a) in TABLE_2FORMS_4D.iter().enumerate() {
            for b in &TABLE_2FORMS_4D[i + 1..] {
                assert!(
                    (a.i1, a.i2) != (b.i1, b.i2),
                    "rows {} and {} collide",
                    a.label,
                    b.label
                );
            }
        }
    }

    #[test]
    fn classify_examples() {
        let e2 = TABLE_2FORMS_4D.iter().find(|r| r.label == "E2").unwrap();
        let f = e2.representative();
        assert_eq!(invariant_i1(&f).unwrap(), -10);
        assert_eq!(invariant_i2(&f).unwrap(), 0);
        assert_eq!(classify_2form_4d(&f).unwrap().unwrap().label, "E2");

        let zero = Form::zero(4, 2).unwrap();
        assert!(classify_2form_4d(&zero).unwrap().is_none());
    }

    #[test]
    fn table_democracy_flags_match_census() {
        for row in &TABLE_2FORMS_4D {
            let f = row.representative();
            let (democratic, _) = democracy_details(&f).unwrap();
            assert_eq!(democratic, row.democratic, "row {}", row.label);
        }
    }

    #[test]
    fn spin7_profile() {
        let phi = crate::construct::spin7();
        let summary = valence_profile(&phi);
        assert_eq!(summary.vertex_count, 14);
        assert_eq!(summary.classes.len(), 1);
        let (profile, count) = &summary.classes[0];
        assert_eq!(*count, 14);
        let expected: BTreeMap<u8, usize> = [(2, 12), (4, 1)].into_iter().collect();
        assert_eq!(*profile, expected);
    }

    #[test]
    fn invariants_constant_on_orbits() {
        use crate::symmetry::SignedPermutation;
        // |I2| is constant on O(4,Z) orbits, I2 itself on SO(4,Z) orbits
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            state >> 33
        };
        for row in &TABLE_2FORMS_4D {
            let f = row.representative();
            for _ in 0..20 {
                let mut images: Vec<u8> = (1..=4).collect();
                for i in (1..4).rev() {
                    let j = (next() % (i as u64 + 1)) as usize;
                    images.swap(i, j);
                }
                let etas: Vec<i8> = (0..4).map(|_| if next() % 2 == 0 { 1 } else { -1 }).collect();
                let g = SignedPermutation::new(images, &etas).unwrap();
                let moved = g.act(&f).unwrap();
                assert_eq!(invariant_i1(&moved).unwrap(), row.i1);
                let i2 = invariant_i2(&moved).unwrap();
                if g.in_so() {
                    assert_eq!(i2, row.i2);
                } else {
                    assert_eq!(i2, -row.i2);
                }
            }
        }
    }

    #[test]
    fn graph_edges_exclude_disjoint_pairs() {
        let f = form(4, 2, &[(1, &[1, 2]), (1, &[3, 4])]);
        let graph = vertex_graph(&f);
        assert!(graph.edges.is_empty());
        let expected: BTreeMap<u8, usize> = [(2, 1)].into_iter().collect();
        assert_eq!(graph.profiles[0], expected);
    }
}
