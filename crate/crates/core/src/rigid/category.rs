use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::{compose, mapping_space, MappingSimplex, MappingSpace};
use crate::complex::{OrderedComplex, SimplexKey, SimplicialSet, VertexId};
use crate::error::{Error, Result};

/// Index into the composition table: generator `g` of `(b, c)` after
/// generator `f` of `(a, b)`, both of dimension `dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositionKey {
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub dim: usize,
    pub g: usize,
    pub f: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub detail: String,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.detail)
    }
}

/// `𝔠(S)` for an ordered `S`: every nonempty mapping space plus the
/// composition table on generators.
#[derive(Debug, Clone)]
pub struct SimplicialCategoryPresentation {
    complex: OrderedComplex,
    spaces: BTreeMap<(VertexId, VertexId), MappingSpace>,
    composition: HashMap<CompositionKey, SimplexKey>,
}

pub fn categorify(s: &OrderedComplex) -> Result<SimplicialCategoryPresentation> {
    let n = s.vertex_count();
    let mut spaces = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            if s.order().leq(a, b) {
                spaces.insert((a, b), mapping_space(s, a, b)?);
            }
        }
    }
    let mut cat = SimplicialCategoryPresentation { complex: s.clone(), spaces, composition: HashMap::new() };
    let mut table = HashMap::new();
    for (&(a, b), first) in &cat.spaces {
        for (&(b2, c), second) in cat.spaces.range((b, 0)..=(b, usize::MAX)) {
            debug_assert_eq!(b, b2);
            let target = &cat.spaces[&(a, c)];
            for dim in 0..first.f_vector().len().min(second.f_vector().len()) {
                for (fi, f) in first.simplices(dim).iter().enumerate() {
                    for (gi, g) in second.simplices(dim).iter().enumerate() {
                        let h = compose(s, g, f)?;
                        let key = target
                            .key_of(&h)
                            .ok_or_else(|| Error::InvalidMorphism(format!("composite {h} missing from ({a},{c})")))?;
                        table.insert(CompositionKey { a, b, c, dim, g: gi, f: fi }, key);
                    }
                }
            }
        }
    }
    cat.composition = table;
    Ok(cat)
}

impl SimplicialCategoryPresentation {
    pub fn complex(&self) -> &OrderedComplex {
        &self.complex
    }

    pub fn object_count(&self) -> usize {
        self.complex.vertex_count()
    }

    /// `𝔠(S)(a, b)`, or `None` when it is empty.
    pub fn space(&self, a: VertexId, b: VertexId) -> Option<&MappingSpace> {
        self.spaces.get(&(a, b))
    }

    pub fn spaces(&self) -> impl Iterator<Item = (&(VertexId, VertexId), &MappingSpace)> {
        self.spaces.iter()
    }

    pub fn composition_table(&self) -> &HashMap<CompositionKey, SimplexKey> {
        &self.composition
    }

    pub fn compose(&self, g: &MappingSimplex, f: &MappingSimplex) -> Result<MappingSimplex> {
        compose(&self.complex, g, f)
    }

    pub fn face(&self, m: &MappingSimplex, i: usize) -> Result<MappingSimplex> {
        m.face(&self.complex, i)
    }

    /// Associativity, units and compatibility of composition with faces and
    /// degeneracies, over all composable generators of equal dimension.
    pub fn check_laws(&self) -> Result<Vec<LawViolation>> {
        let mut out = Vec::new();
        let mut report = |law: &'static str, detail: String| out.push(LawViolation { law, detail });
        for (&(a, b), sp) in &self.spaces {
            for d in 0..sp.f_vector().len() {
                for f in sp.simplices(d) {
                    if self.compose(&MappingSimplex::identity(b, d), f)? != *f {
                        report("left unit", format!("id_{b} ∘ {f}"));
                    }
                    if self.compose(f, &MappingSimplex::identity(a, d))? != *f {
                        report("right unit", format!("{f} ∘ id_{a}"));
                    }
                }
            }
        }
        for (&(a, b), first) in &self.spaces {
            for (&(_, c), second) in self.spaces.range((b, 0)..=(b, usize::MAX)) {
                let dims = first.f_vector().len().min(second.f_vector().len());
                for d in 0..dims {
                    for f in first.simplices(d) {
                        for g in second.simplices(d) {
                            let gf = self.compose(g, f)?;
                            for i in 0..=d {
                                let lhs = gf.degeneracy(i)?;
                                let rhs = self.compose(&g.degeneracy(i)?, &f.degeneracy(i)?)?;
                                if lhs != rhs {
                                    report("degeneracy", format!("s_{i}({g} ∘ {f})"));
                                }
                                if d > 0 {
                                    let lhs = self.face(&gf, i)?;
                                    let rhs = self.compose(&self.face(g, i)?, &self.face(f, i)?)?;
                                    if lhs != rhs {
                                        report("face", format!("d_{i}({g} ∘ {f})"));
                                    }
                                }
                            }
                            for (&(_, e), third) in self.spaces.range((c, 0)..=(c, usize::MAX)) {
                                for h in third.simplices(d) {
                                    let lhs = self.compose(h, &gf)?;
                                    let rhs = self.compose(&self.compose(h, g)?, f)?;
                                    if lhs != rhs {
                                        report("associativity", format!("{a}->{b}->{c}->{e}: ({h} ∘ {g}) ∘ {f}"));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}
