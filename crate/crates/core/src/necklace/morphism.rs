use super::Necklace;
use crate::error::{Error, Result};

/// A map of necklaces, determined by its vertex map.
///
/// Valid vertex maps are monotone, send `α` to `α` and `ω` to `ω`, and send
/// every bead of the source into a single bead of the target.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NecklaceMorphism {
    source: Necklace,
    target: Necklace,
    vertex_map: Vec<usize>,
}

impl NecklaceMorphism {
    pub fn new(source: Necklace, target: Necklace, vertex_map: Vec<usize>) -> Result<Self> {
        if vertex_map.len() != source.vertex_count() {
            return Err(Error::LengthMismatch { left: vertex_map.len(), right: source.vertex_count() });
        }
        if vertex_map[0] != 0 || *vertex_map.last().unwrap() != target.omega() {
            return Err(Error::InvalidMorphism(format!("{vertex_map:?} does not preserve endpoints")));
        }
        if vertex_map.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMorphism(format!("{vertex_map:?} is not monotone")));
        }
        for i in 0..source.bead_count() {
            let (s, e) = source.bead_range(i);
            if target.common_bead(vertex_map[s], vertex_map[e]).is_none() {
                return Err(Error::InvalidMorphism(format!("bead {i} of {:?} is not sent into one bead", source.beads())));
            }
        }
        Ok(Self { source, target, vertex_map })
    }

    pub fn identity(t: &Necklace) -> Self {
        Self { source: t.clone(), target: t.clone(), vertex_map: (0..t.vertex_count()).collect() }
    }

    pub fn source(&self) -> &Necklace {
        &self.source
    }

    pub fn target(&self) -> &Necklace {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &NecklaceMorphism) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::InvalidMorphism("composable morphisms must share a necklace".into()));
        }
        let vertex_map = self.vertex_map.iter().map(|&v| other.vertex_map[v]).collect();
        Self::new(self.source.clone(), other.target.clone(), vertex_map)
    }

    pub fn is_injective(&self) -> bool {
        self.vertex_map.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.vertex_map.windows(2).all(|w| w[1] <= w[0] + 1)
    }

    /// Every morphism `source -> target`, in lexicographic order of vertex maps.
    pub fn enumerate(source: &Necklace, target: &Necklace) -> Vec<Self> {
        let n = source.vertex_count();
        let mut out = Vec::new();
        let mut current = vec![0usize];
        fn rec(source: &Necklace, target: &Necklace, n: usize, current: &mut Vec<usize>, out: &mut Vec<NecklaceMorphism>) {
            if current.len() == n {
                if let Ok(m) = NecklaceMorphism::new(source.clone(), target.clone(), current.clone()) {
                    out.push(m);
                }
                return;
            }
            let last = *current.last().unwrap();
            for v in last..=target.omega() {
                current.push(v);
                rec(source, target, n, current, out);
                current.pop();
            }
        }
        rec(source, target, n, &mut current, &mut out);
        out
    }
}
