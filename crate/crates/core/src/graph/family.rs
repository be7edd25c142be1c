//! Parameterized graph families.

use std::fmt;

use super::{CliqueCover, Graph};
use crate::error::{Error, Result};

/// A named graph family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteMultipartite { parts: Vec<usize> },
    /// `(k, n)`-path: the `k`-th power of `P_n`.
    KPath { k: usize, n: usize },
    Book { n: usize },
    GeneralizedBook { n: usize, m: usize },
    Friendship { n: usize },
    GeneralizedFriendship { q: usize, n: usize },
    /// `P_n` compounded with two isolated vertices over the standard cover.
    HGraph { n: usize },
    /// `K_{1,n}`.
    Star { n: usize },
}

pub const FAMILY_NAMES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "complete_multipartite",
    "k_path",
    "book",
    "generalized_book",
    "friendship",
    "generalized_friendship",
    "h_graph",
    "star",
];

impl FamilySpec {
    /// Builds a spec from a family name and named parameters. Missing
    /// parameters are reported as errors; `parts` is only read for
    /// `complete_multipartite`.
    pub fn from_parts(
        name: &str,
        n: Option<usize>,
        m: Option<usize>,
        q: Option<usize>,
        k: Option<usize>,
        parts: Option<&[usize]>,
    ) -> Result<Self> {
        let need = |v: Option<usize>, p: &str| {
            v.ok_or_else(|| Error::InvalidParameters {
                family: name.to_string(),
                msg: format!("missing parameter {p}"),
            })
        };
        let spec = match name {
            "path" => FamilySpec::Path { n: need(n, "n")? },
            "cycle" => FamilySpec::Cycle { n: need(n, "n")? },
            "complete" => FamilySpec::Complete { n: need(n, "n")? },
            "complete_multipartite" => FamilySpec::CompleteMultipartite {
                parts: parts
                    .ok_or_else(|| Error::InvalidParameters {
                        family: name.to_string(),
                        msg: "missing parameter parts".into(),
                    })?
                    .to_vec(),
            },
            "k_path" => FamilySpec::KPath { k: need(k, "k")?, n: need(n, "n")? },
            "book" => FamilySpec::Book { n: need(n, "n")? },
            "generalized_book" => FamilySpec::GeneralizedBook { n: need(n, "n")?, m: need(m, "m")? },
            "friendship" => FamilySpec::Friendship { n: need(n, "n")? },
            "generalized_friendship" => {
                FamilySpec::GeneralizedFriendship { q: need(q, "q")?, n: need(n, "n")? }
            }
            "h_graph" => FamilySpec::HGraph { n: need(n, "n")? },
            "star" => FamilySpec::Star { n: need(n, "n")? },
            other => {
                return Err(Error::InvalidParameters {
                    family: other.to_string(),
                    msg: format!("unknown family; expected one of {}", FAMILY_NAMES.join(", ")),
                })
            }
        };
        Ok(spec)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteMultipartite { .. } => "complete_multipartite",
            FamilySpec::KPath { .. } => "k_path",
            FamilySpec::Book { .. } => "book",
            FamilySpec::GeneralizedBook { .. } => "generalized_book",
            FamilySpec::Friendship { .. } => "friendship",
            FamilySpec::GeneralizedFriendship { .. } => "generalized_friendship",
            FamilySpec::HGraph { .. } => "h_graph",
            FamilySpec::Star { .. } => "star",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Book { n }
            | FamilySpec::Friendship { n }
            | FamilySpec::HGraph { n }
            | FamilySpec::Star { n } => vec![*n],
            FamilySpec::CompleteMultipartite { parts } => parts.clone(),
            FamilySpec::KPath { k, n } => vec![*k, *n],
            FamilySpec::GeneralizedBook { n, m } => vec![*n, *m],
            FamilySpec::GeneralizedFriendship { q, n } => vec![*q, *n],
        }
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: &str| {
            Err(Error::InvalidParameters {
                family: self.name().to_string(),
                msg: msg.to_string(),
            })
        };
        match *self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } if n < 1 => bad("requires n >= 1"),
            FamilySpec::Book { n } | FamilySpec::Friendship { n } | FamilySpec::Star { n } if n < 1 => {
                bad("requires n >= 1")
            }
            FamilySpec::Cycle { n } if n < 3 => bad("requires n >= 3"),
            FamilySpec::CompleteMultipartite { ref parts } if parts.is_empty() || parts.contains(&0) => {
                bad("requires at least one part, every part nonempty")
            }
            FamilySpec::KPath { k, n } if k < 1 || k > n => bad("requires 1 <= k <= n"),
            FamilySpec::GeneralizedBook { n, m } if n < 1 || m < 3 => bad("requires n >= 1 and m >= 3"),
            FamilySpec::GeneralizedFriendship { q, n } if q < 3 || n < 1 => bad("requires q >= 3 and n >= 1"),
            _ => Ok(()),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.check()?;
        Ok(match *self {
            FamilySpec::Path { n } => Graph::path(n),
            FamilySpec::Cycle { n } => Graph::cycle(n),
            FamilySpec::Complete { n } => Graph::complete(n),
            FamilySpec::CompleteMultipartite { ref parts } => Graph::complete_multipartite(parts),
            FamilySpec::KPath { k, n } => Graph::k_path(k, n),
            FamilySpec::Book { n } => Graph::book(n),
            FamilySpec::GeneralizedBook { n, m } => Graph::generalized_book(n, m),
            FamilySpec::Friendship { n } => Graph::friendship(n),
            FamilySpec::GeneralizedFriendship { q, n } => Graph::generalized_friendship(q, n),
            FamilySpec::HGraph { n } => Graph::h_graph(n),
            FamilySpec::Star { n } => Graph::star(n),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(ToString::to_string).collect();
        write!(f, "{}({})", self.name(), params.join(","))
    }
}

// Unchecked constructors. Labels follow the order in which the family
// description lists vertices.
impl Graph {
    /// `P_n` on `0..n`; `path(0)` is the null graph.
    pub fn path(n: usize) -> Graph {
        Graph::from_edges_unchecked(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges_unchecked(n, (1..n).map(|v| (v - 1, v)).chain([(0, n - 1)]))
    }

    /// `K_{1,n}` with hub 0.
    pub fn star(n: usize) -> Graph {
        Graph::from_edges_unchecked(n + 1, (1..=n).map(|v| (0, v)))
    }

    /// Parts occupy consecutive label ranges.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let total: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(total);
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, p));
        }
        let edges = (0..total)
            .flat_map(|u| (u + 1..total).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v]);
        Graph::from_edges_unchecked(total, edges)
    }

    /// `P_n^k`: starts with a `k`-clique, then each vertex is adjacent to
    /// the `k` vertices before it.
    pub fn k_path(k: usize, n: usize) -> Graph {
        let edges = (0..n).flat_map(|v| (v.saturating_sub(k)..v).map(move |u| (u, v)));
        Graph::from_edges_unchecked(n, edges)
    }

    /// Book `B_n`: spine `u1 = 0`, `u2 = 1`; page `i` (1-based) has
    /// `v_i = 2i`, `w_i = 2i + 1` with edges `u1 v_i`, `u2 w_i`, `v_i w_i`.
    pub fn book(n: usize) -> Graph {
        let mut edges = vec![(0, 1)];
        for i in 1..=n {
            edges.extend([(0, 2 * i), (1, 2 * i + 1), (2 * i, 2 * i + 1)]);
        }
        Graph::from_edges_unchecked(2 * n + 2, edges)
    }

    /// Generalized book `B_{n,m}`: a path `u_1 .. u_{m-2}` on labels
    /// `0..m-2`, then pages `v_i, w_i` with `u_1 v_i`, `v_i w_i` and
    /// `u_{m-2} w_i`. For `m = 4` this is exactly [`Graph::book`].
    pub fn generalized_book(n: usize, m: usize) -> Graph {
        assert!(m >= 3, "generalized book needs m >= 3");
        let spine = m - 2;
        let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
        for i in 0..n {
            let v = spine + 2 * i;
            let w = v + 1;
            edges.extend([(0, v), (v, w), (spine - 1, w)]);
        }
        Graph::from_edges_unchecked(spine + 2 * n, edges)
    }

    /// `n` triangles sharing vertex 0.
    pub fn friendship(n: usize) -> Graph {
        Graph::generalized_friendship(3, n)
    }

    /// `n` cycles of length `q` sharing vertex 0; cycle `i` runs through
    /// labels `1 + i(q-1) .. 1 + (i+1)(q-1)` in order.
    pub fn generalized_friendship(q: usize, n: usize) -> Graph {
        assert!(q >= 3, "generalized friendship needs q >= 3");
        let len = q - 1;
        let mut edges = Vec::new();
        for i in 0..n {
            let first = 1 + i * len;
            let last = first + len - 1;
            edges.extend((first + 1..=last).map(|v| (v - 1, v)));
            edges.extend([(0, first), (0, last)]);
        }
        Graph::from_edges_unchecked(1 + n * len, edges)
    }

    /// The cover of `P_n` used for `H_n`: pairs `{0,1},{2,3},..` for even
    /// `n`; `{0},{1,2},..` for odd `n`.
    pub fn h_graph_cover(n: usize) -> CliqueCover {
        let p = Graph::path(n);
        let start = n % 2;
        let mut blocks: Vec<Vec<usize>> = if start == 1 { vec![vec![0]] } else { Vec::new() };
        blocks.extend((start..n).step_by(2).map(|v| vec![v, v + 1]));
        CliqueCover::new(&p, blocks).expect("pair cover of a path is valid")
    }

    /// `H_n = P_n^Δ(K̄_2)` over [`Graph::h_graph_cover`]; `H_0` is null.
    pub fn h_graph(n: usize) -> Graph {
        let p = Graph::path(n);
        p.compound(&Graph::h_graph_cover(n), &Graph::empty(2))
            .expect("h_graph cover is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn book_two() {
        let b = Graph::book(2);
        assert_eq!(b.order(), 6);
        assert_eq!(
            b.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (4, 5)]
        );
    }

    #[test]
    fn bowtie() {
        let f = Graph::friendship(2);
        assert_eq!(
            f.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]
        );
    }

    #[test]
    fn three_path_on_seven() {
        let g = Graph::k_path(3, 7);
        assert_eq!(g.size(), 3 + 3 * 4);
        assert!(g.has_edge(0, 3) && !g.has_edge(0, 4));
        assert_eq!(Graph::k_path(1, 5), Graph::path(5));
        assert_eq!(Graph::k_path(4, 4), Graph::complete(4));
    }

    #[test]
    fn generalized_families_contain_base_families() {
        for n in 1..=5 {
            assert_eq!(Graph::generalized_book(n, 4), Graph::book(n));
            assert_eq!(Graph::generalized_friendship(3, n), Graph::friendship(n));
        }
    }

    #[test]
    fn generalized_book_three() {
        // u1 adjacent to every v and w
        let g = Graph::generalized_book(2, 3);
        assert_eq!(g.order(), 5);
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn h_graph_covers() {
        assert_eq!(Graph::h_graph_cover(4).blocks(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(Graph::h_graph_cover(5).blocks(), &[vec![0], vec![1, 2], vec![3, 4]]);
        assert_eq!(Graph::h_graph(0), Graph::null());
        assert_eq!(Graph::h_graph(5).order(), 5 + 6);
    }

    #[test]
    fn spec_validation() {
        let bad = [
            FamilySpec::Path { n: 0 },
            FamilySpec::Cycle { n: 2 },
            FamilySpec::KPath { k: 4, n: 3 },
            FamilySpec::GeneralizedBook { n: 2, m: 2 },
            FamilySpec::GeneralizedFriendship { q: 2, n: 2 },
            FamilySpec::CompleteMultipartite { parts: vec![2, 0] },
        ];
        for spec in bad {
            assert!(spec.graph().is_err(), "{spec}");
        }
        let spec = FamilySpec::from_parts("generalized_book", Some(2), Some(6), None, None, None).unwrap();
        assert_eq!(spec.to_string(), "generalized_book(2,6)");
        assert_eq!(spec.graph().unwrap().order(), 8);
        assert!(FamilySpec::from_parts("book", None, None, None, None, None).is_err());
        assert!(FamilySpec::from_parts("wheel", Some(3), None, None, None, None).is_err());
    }
}
