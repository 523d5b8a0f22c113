use super::{OrderedComplex, VertexId};

/// A product complex with its two vertex projections.
#[derive(Debug, Clone)]
pub struct Product {
    pub complex: OrderedComplex,
    /// Vertex `(x, y)` is numbered `x * right_count + y`.
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
}

impl Product {
    pub fn pair(&self, x: VertexId, y: VertexId) -> VertexId {
        x * self.right_count() + y
    }

    fn right_count(&self) -> usize {
        self.right.iter().max().map_or(0, |m| m + 1)
    }
}

/// Is `seq` a (possibly degenerate) simplex of `x`?
fn is_simplex(x: &OrderedComplex, seq: &[VertexId]) -> bool {
    x.key_of_sequence(seq).is_some()
}

/// Categorical product of two ordered complexes.
///
/// A nondegenerate simplex is a sequence of distinct vertex pairs whose two
/// coordinate projections are (possibly degenerate) simplices of the factors.
pub fn product(x: &OrderedComplex, y: &OrderedComplex) -> Product {
    use super::SimplicialSet;
    let (nx, ny) = (x.vertex_count(), y.vertex_count());
    let n = nx * ny;
    let left: Vec<VertexId> = (0..n).map(|p| p / ny).collect();
    let right: Vec<VertexId> = (0..n).map(|p| p % ny).collect();

    let mut chains = Vec::new();
    let mut stack: Vec<Vec<VertexId>> = (0..n).map(|p| vec![p]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().unwrap();
        for p in 0..n {
            if chain.contains(&p) || !x.order().leq(left[last], left[p]) || !y.order().leq(right[last], right[p]) {
                continue;
            }
            let mut next = chain.clone();
            next.push(p);
            let xs: Vec<_> = next.iter().map(|&q| left[q]).collect();
            let ys: Vec<_> = next.iter().map(|&q| right[q]).collect();
            if is_simplex(x, &xs) && is_simplex(y, &ys) {
                stack.push(next);
            }
        }
        chains.push(chain);
    }
    let complex = OrderedComplex::from_face_closed(n, chains).expect("products of ordered complexes are ordered");
    Product { complex, left, right }
}
