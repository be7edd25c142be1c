use super::Graph;
use crate::error::{Error, Result};

/// A partition of `V(G)` into cliques.
///
/// Only constructible through validation against a graph, so every value
/// holds a disjoint, covering family of complete blocks. The cover records
/// the order of the graph it was validated for; [`CliqueCover::validate`]
/// rechecks it against any other graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    order: usize,
    blocks: Vec<Vec<usize>>,
}

impl CliqueCover {
    pub fn new(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        let cover = CliqueCover { order: g.order(), blocks };
        cover.validate(g)?;
        Ok(cover)
    }

    /// One block per vertex.
    pub fn singletons(g: &Graph) -> Self {
        CliqueCover {
            order: g.order(),
            blocks: (0..g.order()).map(|v| vec![v]).collect(),
        }
    }

    /// Greedy cover: repeatedly start a clique at the smallest uncovered
    /// vertex and add the smallest uncovered vertex adjacent to every member.
    pub fn greedy(g: &Graph) -> Self {
        let n = g.order();
        let mut covered = vec![false; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if covered[start] {
                continue;
            }
            covered[start] = true;
            let mut block = vec![start];
            for (v, done) in covered.iter_mut().enumerate().skip(start + 1) {
                if !*done && block.iter().all(|&u| g.has_edge(u, v)) {
                    *done = true;
                    block.push(v);
                }
            }
            blocks.push(block);
        }
        CliqueCover { order: n, blocks }
    }

    /// Parses one block per line, labels separated by whitespace.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let block = body
                .split_whitespace()
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidCover(format!("line {}: bad label {s:?}", i + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
        }
        CliqueCover::new(g, blocks)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        let mut seen = vec![false; n];
        for block in &self.blocks {
            if block.is_empty() {
                return Err(Error::InvalidCover("empty block".into()));
            }
            for (i, &v) in block.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidCover(format!("vertex {v} out of range for order {n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidCover(format!("vertex {v} appears twice")));
                }
                if let Some(&u) = block[..i].iter().find(|&&u| !g.has_edge(u, v)) {
                    return Err(Error::InvalidCover(format!("block vertices {u} and {v} are not adjacent")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidCover(format!("vertex {v} is not covered")));
        }
        Ok(())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks, `q`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greedy_examples() {
        assert_eq!(CliqueCover::greedy(&Graph::complete(3)).blocks(), &[vec![0, 1, 2]]);
        assert_eq!(
            CliqueCover::greedy(&Graph::empty(3)).blocks(),
            &[vec![0], vec![1], vec![2]]
        );
        assert_eq!(CliqueCover::greedy(&Graph::path(4)).blocks(), &[vec![0, 1], vec![2, 3]]);
        assert!(CliqueCover::greedy(&Graph::null()).is_empty());
    }

    #[test]
    fn validation_errors() {
        let p4 = Graph::path(4);
        assert!(CliqueCover::new(&p4, vec![vec![0, 1], vec![2, 3]]).is_ok());
        for bad in [
            vec![vec![0, 1], vec![2]],
            vec![vec![0, 1], vec![1, 2, 3]],
            vec![vec![0, 2], vec![1], vec![3]],
            vec![vec![0, 1], vec![2, 3], vec![]],
            vec![vec![0, 1], vec![2, 3, 4]],
        ] {
            assert!(matches!(CliqueCover::new(&p4, bad), Err(Error::InvalidCover(_))));
        }
    }

    #[test]
    fn parse_cover_file() {
        let p4 = Graph::path(4);
        let c = CliqueCover::parse(&p4, "# blocks\n1 0\n\n2 3\n").unwrap();
        assert_eq!(c.blocks(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(c.len(), 2);
        assert!(CliqueCover::parse(&p4, "0 1\n2 x\n").is_err());
    }
}
