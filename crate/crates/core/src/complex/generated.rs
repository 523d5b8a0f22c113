use super::{check_simplicial_identities, SimplexKey, SimplicialSet};
use crate::error::{Error, Result};

/// A finite simplicial set given by nondegenerate generators per dimension
/// and a face table `(generator, i) -> SimplexKey`.
///
/// Dimension-0 generators are the vertices. Faces may be degenerate
/// simplices; the table is validated against the simplicial identities on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedComplex {
    counts: Vec<usize>,
    /// `faces[d][g][i]` is `d_i` of generator `g` of dimension `d` (`d >= 1`).
    faces: Vec<Vec<Vec<SimplexKey>>>,
    labels: Vec<Vec<String>>,
}

impl GeneratedComplex {
    pub fn empty() -> Self {
        Self { counts: Vec::new(), faces: Vec::new(), labels: Vec::new() }
    }

    /// Builds and validates a complex with default labels `x{dim}_{index}`.
    pub fn new(counts: Vec<usize>, faces: Vec<Vec<Vec<SimplexKey>>>) -> Result<Self> {
        let labels = counts
            .iter()
            .enumerate()
            .map(|(d, &n)| (0..n).map(|g| format!("x{d}_{g}")).collect())
            .collect();
        Self::from_parts(counts, faces, labels)
    }

    pub fn from_parts(
        mut counts: Vec<usize>,
        mut faces: Vec<Vec<Vec<SimplexKey>>>,
        mut labels: Vec<Vec<String>>,
    ) -> Result<Self> {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        faces.truncate(counts.len());
        labels.truncate(counts.len());
        faces.resize(counts.len(), Vec::new());
        if labels.len() != counts.len() || labels.iter().zip(&counts).any(|(l, &n)| l.len() != n) {
            return Err(Error::InvalidFaceTable("label table does not match generator counts".into()));
        }
        for (d, &n) in counts.iter().enumerate() {
            if d == 0 {
                faces[0] = vec![Vec::new(); n];
                continue;
            }
            if faces[d].len() != n {
                return Err(Error::InvalidFaceTable(format!(
                    "dimension {d}: {} face rows for {n} generators",
                    faces[d].len()
                )));
            }
            for (g, row) in faces[d].iter().enumerate() {
                if row.len() != d + 1 {
                    return Err(Error::InvalidFaceTable(format!(
                        "generator {g} of dimension {d} has {} faces",
                        row.len()
                    )));
                }
                for key in row {
                    let ok = key.dim == d - 1
                        && key.word.indices().iter().all(|&i| i < key.dim)
                        && key.gen < counts.get(key.gen_dim()).copied().unwrap_or(0);
                    if !ok {
                        return Err(Error::InvalidFaceTable(format!(
                            "face {key} of generator {g} (dimension {d}) is not a simplex"
                        )));
                    }
                }
            }
        }
        let complex = Self { counts, faces, labels };
        // d_i d_j on generators is what the table controls; the rest follows
        // from the normal-form representation.
        for d in 2..complex.counts.len() {
            for g in 0..complex.counts[d] {
                let x = SimplexKey::nondegenerate(d, g);
                for j in 0..=d {
                    for i in 0..j {
                        let lhs = complex.face(&complex.face(&x, j)?, i)?;
                        let rhs = complex.face(&complex.face(&x, i)?, j - 1)?;
                        if lhs != rhs {
                            return Err(Error::SimplicialIdentity(format!(
                                "d_{i} d_{j} != d_{} d_{i} on {}",
                                j - 1,
                                complex.labels[d][g]
                            )));
                        }
                    }
                }
            }
        }
        Ok(complex)
    }

    pub fn label(&self, dim: usize, gen: usize) -> &str {
        &self.labels[dim][gen]
    }

    pub fn labels(&self, dim: usize) -> &[String] {
        self.labels.get(dim).map_or(&[], |l| l.as_slice())
    }

    pub fn faces_of(&self, dim: usize, gen: usize) -> &[SimplexKey] {
        &self.faces[dim][gen]
    }

    /// Full identity check including degenerate simplices up to `max_dim`.
    pub fn validate_identities(&self, max_dim: usize) -> Result<()> {
        check_simplicial_identities(self, max_dim)
    }
}

impl SimplicialSet for GeneratedComplex {
    fn vertex_count(&self) -> usize {
        self.counts.first().copied().unwrap_or(0)
    }

    fn generator_count(&self, dim: usize) -> usize {
        self.counts.get(dim).copied().unwrap_or(0)
    }

    fn max_dim(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    fn generator_face(&self, dim: usize, gen: usize, i: usize) -> SimplexKey {
        self.faces[dim][gen][i].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DegeneracyWord;

    fn circle() -> GeneratedComplex {
        GeneratedComplex::new(vec![1, 1], vec![vec![], vec![vec![SimplexKey::vertex(0); 2]]]).unwrap()
    }

    #[test]
    fn quotient_faces_coincide() {
        let c = circle();
        let e = SimplexKey::nondegenerate(1, 0);
        assert_eq!(c.face(&e, 0).unwrap(), SimplexKey::vertex(0));
        assert_eq!(c.face(&e, 1).unwrap(), SimplexKey::vertex(0));
        assert_eq!(c.vertices(&e), vec![0, 0]);
    }

    #[test]
    fn identities_hold_on_circle() {
        circle().validate_identities(3).unwrap();
    }

    #[test]
    fn inconsistent_table_rejected() {
        // a "triangle" whose edges do not glue
        let v = SimplexKey::vertex;
        let e = |g| SimplexKey::nondegenerate(1, g);
        let err = GeneratedComplex::new(
            vec![3, 3, 1],
            vec![
                vec![],
                vec![vec![v(1), v(0)], vec![v(2), v(1)], vec![v(2), v(0)]],
                vec![vec![e(1), e(1), e(0)]],
            ],
        );
        assert!(matches!(err, Err(Error::SimplicialIdentity(_))));
    }

    #[test]
    fn face_of_degenerate_on_loop() {
        let c = circle();
        let e = SimplexKey::nondegenerate(1, 0);
        let s0e = c.degeneracy(&e, 0).unwrap();
        assert_eq!(s0e.word, DegeneracyWord::from_word(&[0], 1).unwrap());
        // d_2 s_0 e = s_0 d_1 e
        let lhs = c.face(&s0e, 2).unwrap();
        let rhs = c.degeneracy(&c.face(&e, 1).unwrap(), 0).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wrong_face_dimension_rejected() {
        let err = GeneratedComplex::new(vec![1, 1], vec![vec![], vec![vec![SimplexKey::nondegenerate(1, 0); 2]]]);
        assert!(matches!(err, Err(Error::InvalidFaceTable(_))));
    }
}
