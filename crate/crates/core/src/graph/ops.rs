//! Graph products.
//!
//! Labeling is block-major throughout: the vertices of the left operand keep
//! their labels and any copies of the right operand follow in block order.

use super::{CliqueCover, Graph};
use crate::error::{Error, Result};

impl Graph {
    /// Disjoint union of `self` and `other` plus every edge between them.
    /// Vertices of `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.order();
        let n = n1 + other.order();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + n1, v + n1)))
            .chain((0..n1).flat_map(|u| (n1..n).map(move |v| (u, v))));
        Graph::from_edges_unchecked(n, edges)
    }

    /// Disjoint union; `other` is shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.order();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + n1, v + n1)));
        Graph::from_edges_unchecked(n1 + other.order(), edges)
    }

    /// Lexicographic product `G[H]`: `(a, x)` gets label `a * |H| + x` and
    /// `(a, x) ~ (b, y)` iff `a ~ b` in `G`, or `a = b` and `x ~ y` in `H`.
    pub fn lexicographic(&self, h: &Graph) -> Result<Graph> {
        let m = h.order();
        if m == 0 {
            return Err(Error::NullGraph);
        }
        let mut edges = Vec::new();
        for a in 0..self.order() {
            edges.extend(h.edges().map(|(x, y)| (a * m + x, a * m + y)));
        }
        for (a, b) in self.edges() {
            for x in 0..m {
                edges.extend((0..m).map(|y| (a * m + x, b * m + y)));
            }
        }
        Ok(Graph::from_edges_unchecked(self.order() * m, edges))
    }

    /// Corona `G ∘ H`: a private copy of `H` joined to each vertex of `G`.
    pub fn corona(&self, h: &Graph) -> Graph {
        compound_unchecked(self, CliqueCover::singletons(self).blocks(), h)
    }

    /// Compound graph: for each block of the cover, a private copy of `h`
    /// joined to every vertex of the block. Copy `i` occupies labels
    /// `n_G + i * n_H ..`.
    pub fn compound(&self, cover: &CliqueCover, h: &Graph) -> Result<Graph> {
        cover.validate(self)?;
        if h.is_null() {
            return Err(Error::NullGraph);
        }
        Ok(compound_unchecked(self, cover.blocks(), h))
    }

    /// Replaces every vertex by `K_r`; identical to `lexicographic(K_r)`.
    pub fn expansion(&self, r: usize) -> Result<Graph> {
        if r == 0 {
            return Err(Error::InvalidParameters {
                family: "expansion".into(),
                msg: "clique size must be at least 1".into(),
            });
        }
        self.lexicographic(&Graph::complete(r))
    }
}

fn compound_unchecked(g: &Graph, blocks: &[Vec<usize>], h: &Graph) -> Graph {
    let n = g.order();
    let m = h.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, block) in blocks.iter().enumerate() {
        let base = n + i * m;
        edges.extend(h.edges().map(|(x, y)| (base + x, base + y)));
        for &v in block {
            edges.extend((0..m).map(|x| (v, base + x)));
        }
    }
    Graph::from_edges_unchecked(n + blocks.len() * m, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_examples() {
        let k1 = Graph::complete(1);
        assert_eq!(k1.join(&k1), Graph::complete(2));
        let c4 = Graph::empty(2).join(&Graph::empty(2));
        // 0,1 | 2,3 : the 4-cycle 0-2-1-3
        assert_eq!(c4, Graph::cycle(4).relabel(&[0, 2, 1, 3]).unwrap());
        let wheel = k1.join(&Graph::cycle(4));
        assert_eq!(wheel.order(), 5);
        assert_eq!(wheel.size(), 8);
        assert_eq!(wheel.degree(0), 4);
        assert!((1..5).all(|v| wheel.degree(v) == 3));
    }

    #[test]
    fn lexicographic_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.lexicographic(&k2).unwrap(), Graph::complete(4));
        let p3 = Graph::path(3);
        assert_eq!(
            Graph::empty(2).lexicographic(&p3).unwrap(),
            p3.disjoint_union(&p3)
        );
        assert_eq!(
            Graph::path(2).lexicographic(&Graph::empty(2)).unwrap(),
            Graph::empty(2).join(&Graph::empty(2))
        );
        assert_eq!(k2.lexicographic(&Graph::null()), Err(Error::NullGraph));
    }

    #[test]
    fn corona_examples() {
        // 2 - 0 - 1 - 3
        let c = Graph::path(2).corona(&Graph::complete(1));
        assert_eq!(c, Graph::path(4).relabel(&[2, 0, 1, 3]).unwrap());
        let h = Graph::path(3);
        assert_eq!(Graph::complete(1).corona(&h), Graph::complete(1).join(&h));
        let sunlet = Graph::cycle(3).corona(&Graph::complete(1));
        assert_eq!(sunlet.order(), 6);
        assert_eq!(sunlet.size(), 6);
        assert!((3..6).all(|v| sunlet.degree(v) == 1));
    }

    #[test]
    fn compound_examples() {
        let p4 = Graph::path(4);
        let cover = CliqueCover::new(&p4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let h4 = p4.compound(&cover, &Graph::empty(2)).unwrap();
        assert_eq!(h4.order(), 8);
        assert_eq!(h4, Graph::h_graph(4));
        assert_eq!(h4.size(), 3 + 8);

        let k2 = Graph::complete(2);
        let cover = CliqueCover::new(&k2, vec![vec![0, 1]]).unwrap();
        assert_eq!(k2.compound(&cover, &Graph::complete(1)).unwrap(), Graph::complete(3));

        let g = Graph::cycle(5);
        let h = Graph::path(2);
        assert_eq!(g.compound(&CliqueCover::singletons(&g), &h).unwrap(), g.corona(&h));
        assert_eq!(g.compound(&CliqueCover::singletons(&g), &Graph::null()), Err(Error::NullGraph));
        let foreign = CliqueCover::singletons(&Graph::path(4));
        assert!(matches!(g.compound(&foreign, &h), Err(Error::InvalidCover(_))));
    }

    #[test]
    fn expansion_examples() {
        let g = Graph::cycle(5);
        assert_eq!(g.expansion(1).unwrap(), g);
        assert_eq!(Graph::complete(2).expansion(2).unwrap(), Graph::complete(4));
        assert!(g.expansion(0).is_err());
        assert_eq!(Graph::path(3).expansion(2).unwrap().order(), 6);
    }
}
