//! Named standard complexes, looked up through a registry of builders.

use super::{product, GeneratedComplex, OrderedComplex, SimplexKey, SimplicialSet, VertexId};
use crate::error::{Error, Result};

/// Either presentation of a finite simplicial set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Complex {
    Ordered(OrderedComplex),
    Generated(GeneratedComplex),
}

impl Complex {
    pub fn as_ordered(&self) -> Option<&OrderedComplex> {
        match self {
            Complex::Ordered(c) => Some(c),
            Complex::Generated(_) => None,
        }
    }

    pub fn to_generated(&self) -> GeneratedComplex {
        match self {
            Complex::Ordered(c) => c.to_generated(),
            Complex::Generated(c) => c.clone(),
        }
    }

    fn inner(&self) -> &dyn SimplicialSet {
        match self {
            Complex::Ordered(c) => c,
            Complex::Generated(c) => c,
        }
    }
}

impl SimplicialSet for Complex {
    fn vertex_count(&self) -> usize {
        self.inner().vertex_count()
    }
    fn generator_count(&self, dim: usize) -> usize {
        self.inner().generator_count(dim)
    }
    fn max_dim(&self) -> Option<usize> {
        self.inner().max_dim()
    }
    fn generator_face(&self, dim: usize, gen: usize, i: usize) -> SimplexKey {
        self.inner().generator_face(dim, gen, i)
    }
    fn generator_vertices(&self, dim: usize, gen: usize) -> Vec<VertexId> {
        self.inner().generator_vertices(dim, gen)
    }
}

/// A named family of standard complexes.
pub trait FixtureBuilder: Sync {
    fn name(&self) -> &'static str;
    /// Human-readable parameter synopsis, e.g. `n:k`.
    fn params(&self) -> &'static str;
    fn build(&self, params: &[usize]) -> Result<Complex>;
}

fn invalid(name: &str, reason: impl Into<String>) -> Error {
    Error::InvalidFixtureParams { name: name.to_string(), reason: reason.into() }
}

fn expect_params<'a>(name: &str, params: &'a [usize], n: usize) -> Result<&'a [usize]> {
    if params.len() == n {
        Ok(params)
    } else {
        Err(invalid(name, format!("expected {n} parameter(s), got {}", params.len())))
    }
}

/// Maximal chains of `Δⁿ` with the vertices in `drop` (one each) removed.
fn faces_of_simplex(n: usize, drop: impl Iterator<Item = usize>) -> Vec<Vec<VertexId>> {
    drop.map(|i| (0..=n).filter(|&v| v != i).collect()).collect()
}

struct SimplexFixture;
impl FixtureBuilder for SimplexFixture {
    fn name(&self) -> &'static str {
        "simplex"
    }
    fn params(&self) -> &'static str {
        "n"
    }
    fn build(&self, params: &[usize]) -> Result<Complex> {
        let [n] = expect_params(self.name(), params, 1)? else { unreachable!() };
        Ok(Complex::Ordered(OrderedComplex::simplex(*n)))
    }
}

struct BoundaryFixture;
impl FixtureBuilder for BoundaryFixture {
    fn name(&self) -> &'static str {
        "boundary"
    }
    fn params(&self) -> &'static str {
        "n (n >= 1)"
    }
    fn build(&self, params: &[usize]) -> Result<Complex> {
        let [n] = expect_params(self.name(), params, 1)? else { unreachable!() };
        let n = *n;
        if n == 0 {
            return Err(invalid(self.name(), "∂Δ⁰ is empty; need n >= 1"));
        }
        let chains = faces_of_simplex(n, 0..=n);
        Ok(Complex::Ordered(OrderedComplex::with_vertex_count(n + 1, &chains)?))
    }
}

struct HornFixture;
impl FixtureBuilder for HornFixture {
    fn name(&self) -> &'static str {
        "horn"
    }
    fn params(&self) -> &'static str {
        "n:k (n >= 2, 0 <= k <= n)"
    }
    fn build(&self, params: &[usize]) -> Result<Complex> {
        let [n, k] = expect_params(self.name(), params, 2)? else { unreachable!() };
        let (n, k) = (*n, *k);
        if n < 2 || k > n {
            return Err(invalid(self.name(), format!("need n >= 2 and k <= n, got n={n}, k={k}")));
        }
        let chains = faces_of_simplex(n, (0..=n).filter(|&i| i != k));
        Ok(Complex::Ordered(OrderedComplex::with_vertex_count(n + 1, &chains)?))
    }
}

/// `Δ¹/∂Δ¹`: one vertex and one nondegenerate loop.
struct LoopFixture;
impl FixtureBuilder for LoopFixture {
    fn name(&self) -> &'static str {
        "loop"
    }
    fn params(&self) -> &'static str {
        ""
    }
    fn build(&self, params: &[usize]) -> Result<Complex> {
        expect_params(self.name(), params, 0)?;
        let v = SimplexKey::vertex(0);
        let c = GeneratedComplex::from_parts(
            vec![1, 1],
            vec![vec![], vec![vec![v.clone(), v]]],
            vec![vec!["v".into()], vec!["e".into()]],
        )?;
        Ok(Complex::Generated(c))
    }
}

/// Two triangles `[0,1,2]` and `[1,2,3]` glued along the edge `[1,2]`.
struct TwoTrianglesFixture;
impl FixtureBuilder for TwoTrianglesFixture {
    fn name(&self) -> &'static str {
        "two_triangles"
    }
    fn params(&self) -> &'static str {
        ""
    }
    fn build(&self, params: &[usize]) -> Result<Complex> {
        expect_params(self.name(), params, 0)?;
        Ok(Complex::Ordered(OrderedComplex::from_maximal_chains(&[vec![0, 1, 2], vec![1, 2, 3]])?))
    }
}

/// Product of standard simplices `Δ^{n1} x Δ^{n2} x ...`.
struct PrismFixture;
impl FixtureBuilder for PrismFixture {
    fn name(&self) -> &'static str {
        "prism"
    }
    fn params(&self) -> &'static str {
        "n1:n2:... (at least one factor)"
    }
    fn build(&self, params: &[usize]) -> Result<Complex> {
        let (first, rest) = params
            .split_first()
            .ok_or_else(|| invalid(self.name(), "need at least one factor"))?;
        let mut acc = OrderedComplex::simplex(*first);
        for &n in rest {
            acc = product(&acc, &OrderedComplex::simplex(n)).complex;
        }
        Ok(Complex::Ordered(acc))
    }
}

static REGISTRY: &[&dyn FixtureBuilder] = &[
    &SimplexFixture,
    &BoundaryFixture,
    &HornFixture,
    &LoopFixture,
    &TwoTrianglesFixture,
    &PrismFixture,
];

pub fn fixture_names() -> Vec<(&'static str, &'static str)> {
    REGISTRY.iter().map(|b| (b.name(), b.params())).collect()
}

/// Builds a named fixture.
pub fn standard(name: &str, params: &[usize]) -> Result<Complex> {
    REGISTRY
        .iter()
        .find(|b| b.name() == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?
        .build(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::is_ordered;

    #[test]
    fn delta_two() {
        let c = standard("simplex", &[2]).unwrap();
        assert_eq!(c.f_vector(), vec![3, 3, 1]);
    }

    #[test]
    fn horn_two_one() {
        let c = standard("horn", &[2, 1]).unwrap();
        let o = c.as_ordered().unwrap();
        assert_eq!(o.f_vector(), vec![3, 2]);
        assert!(o.contains_chain(&[0, 1]) && o.contains_chain(&[1, 2]));
        assert!(!o.contains_chain(&[0, 2]));
    }

    #[test]
    fn loop_is_not_ordered() {
        let c = standard("loop", &[]).unwrap();
        assert_eq!(c.f_vector(), vec![1, 1]);
        assert!(!is_ordered(&c).holds());
    }

    #[test]
    fn boundary_counts() {
        let c = standard("boundary", &[3]).unwrap();
        assert_eq!(c.f_vector(), vec![4, 6, 4]);
        let c = standard("boundary", &[1]).unwrap();
        assert_eq!(c.f_vector(), vec![2]);
    }

    #[test]
    fn bad_params() {
        assert!(matches!(standard("nope", &[]), Err(Error::UnknownFixture(_))));
        assert!(matches!(standard("horn", &[1, 0]), Err(Error::InvalidFixtureParams { .. })));
        assert!(matches!(standard("simplex", &[]), Err(Error::InvalidFixtureParams { .. })));
        assert!(matches!(standard("boundary", &[0]), Err(Error::InvalidFixtureParams { .. })));
    }
}
