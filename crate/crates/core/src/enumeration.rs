//! Exhaustive and branch-and-bound enumeration: independent dominating
//! sets, independence polynomials and the parameters `γ`, `γᵢ`, `α`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parallel::map_ordered;
use crate::poly::IntPoly;

/// Largest order accepted by the `2^n` subset sweeps.
pub const EXHAUSTIVE_LIMIT: usize = 25;
/// Largest order accepted by bitset enumeration (one machine word).
pub const ENUMERATION_LIMIT: usize = 64;

/// Number of independent subtrees the maximal independent set search is
/// split into before handing work to the pool.
const TARGET_TASKS: usize = 64;

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub fn from_slice(vertices: &[usize]) -> Result<Self> {
        vertices.iter().try_fold(VertexSet(0), |acc, &v| {
            if v >= 64 {
                Err(Error::VertexOutOfRange { vertex: v, order: 64 })
            } else {
                Ok(VertexSet(acc.0 | 1 << v))
            }
        })
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    /// Labels in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            (m != 0).then(|| {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                v
            })
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

fn check_limit(g: &Graph, limit: usize, what: &'static str) -> Result<()> {
    if g.order() > limit {
        Err(Error::TooLarge { what, order: g.order(), limit })
    } else {
        Ok(())
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Independent and dominating: no two members adjacent and every vertex in
/// or next to `set`.
pub fn is_independent_dominating(g: &Graph, set: &[usize]) -> Result<bool> {
    let n = g.order();
    let mut member = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, order: n });
        }
        member[v] = true;
    }
    for v in 0..n {
        let adjacent_member = g.neighbors(v).iter().any(|&u| member[u]);
        if member[v] && adjacent_member || !member[v] && !adjacent_member {
            return Ok(false);
        }
    }
    Ok(true)
}

fn mask_is_independent_dominating(closed: &[u64], all: u64, set: u64) -> bool {
    let mut covered = 0u64;
    let mut m = set;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        // another member in N[v] besides v itself
        if closed[v] & set & !(1u64 << v) != 0 {
            return false;
        }
        covered |= closed[v];
    }
    covered == all
}

/// One pending branch of the search: candidates, excluded, chosen.
#[derive(Clone, Copy)]
struct Branch {
    cand: u64,
    excl: u64,
    chosen: u64,
}

impl Branch {
    /// Children in increasing label order of the branching vertex. The
    /// pivot minimizes `|cand ∩ N[u]|` over `cand ∪ excl` (ties to the
    /// smaller label), which is Tomita pivoting on the complement.
    fn children(self, closed: &[u64]) -> Vec<Branch> {
        let mut pivot_set = u64::MAX;
        let mut best = u32::MAX;
        let mut m = self.cand | self.excl;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            let hits = (self.cand & closed[u]).count_ones();
            if hits < best {
                best = hits;
                pivot_set = self.cand & closed[u];
            }
        }
        let mut out = Vec::with_capacity(best as usize);
        let (mut cand, mut excl) = (self.cand, self.excl);
        let mut todo = pivot_set;
        while todo != 0 {
            let v = todo.trailing_zeros() as usize;
            todo &= todo - 1;
            let bit = 1u64 << v;
            out.push(Branch {
                cand: cand & !closed[v],
                excl: excl & !closed[v],
                chosen: self.chosen | bit,
            });
            cand &= !bit;
            excl |= bit;
        }
        out
    }

    fn walk(self, closed: &[u64], visit: &mut impl FnMut(u64)) {
        if self.cand == 0 {
            if self.excl == 0 {
                visit(self.chosen);
            }
            return;
        }
        for child in self.children(closed) {
            child.walk(closed, visit);
        }
    }
}

/// Splits the search tree breadth-first into roughly [`TARGET_TASKS`]
/// subtrees, preserving depth-first output order.
fn split_tasks(closed: &[u64], root: Branch) -> Vec<Branch> {
    let mut tasks = vec![root];
    loop {
        if tasks.len() >= TARGET_TASKS || tasks.iter().all(|t| t.cand == 0) {
            return tasks;
        }
        tasks = tasks
            .into_iter()
            .flat_map(|t| if t.cand == 0 { vec![t] } else { t.children(closed) })
            .collect();
    }
}

fn root_branch(g: &Graph) -> Result<(Vec<u64>, Branch)> {
    let closed = g.closed_masks("maximal independent set enumeration")?;
    let root = Branch { cand: full_mask(g.order()), excl: 0, chosen: 0 };
    Ok((closed, root))
}

/// Streams every maximal independent set exactly once, in a fixed
/// depth-first order (smallest branching vertex first).
pub fn for_each_maximal_independent_set(g: &Graph, mut visit: impl FnMut(VertexSet)) -> Result<()> {
    let (closed, root) = root_branch(g)?;
    root.walk(&closed, &mut |m| visit(VertexSet(m)));
    Ok(())
}

/// All maximal independent sets, in the order of
/// [`for_each_maximal_independent_set`] whatever the worker count.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let (closed, root) = root_branch(g)?;
    let tasks = split_tasks(&closed, root);
    let parts = map_ordered(tasks, |t| {
        let mut found = Vec::new();
        t.walk(&closed, &mut |m| found.push(VertexSet(m)));
        found
    });
    Ok(parts.into_iter().flatten().collect())
}

fn counts_to_poly(counts: &[u64]) -> IntPoly {
    IntPoly::new(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// `D_i(G, x)` by maximal independent set enumeration. The null graph gives
/// the constant 1.
pub fn di_polynomial(g: &Graph) -> Result<IntPoly> {
    if g.is_null() {
        return Ok(IntPoly::one());
    }
    check_limit(g, ENUMERATION_LIMIT, "maximal independent set enumeration")?;
    let n = g.order();
    let (closed, root) = root_branch(g)?;
    let tasks = split_tasks(&closed, root);
    let partial = map_ordered(tasks, |t| {
        let mut counts = vec![0u64; n + 1];
        t.walk(&closed, &mut |m| counts[m.count_ones() as usize] += 1);
        counts
    });
    let mut counts = vec![0u64; n + 1];
    for part in partial {
        for (acc, c) in counts.iter_mut().zip(part) {
            *acc += c;
        }
    }
    Ok(counts_to_poly(&counts))
}

/// `D_i(G, x)` by testing all `2^n` subsets; the independent oracle for
/// [`di_polynomial`]. Limited to [`EXHAUSTIVE_LIMIT`] vertices.
pub fn di_polynomial_bruteforce(g: &Graph) -> Result<IntPoly> {
    di_polynomial_bruteforce_with_limit(g, EXHAUSTIVE_LIMIT)
}

pub fn di_polynomial_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<IntPoly> {
    check_limit(g, limit.min(ENUMERATION_LIMIT - 1), "exhaustive subset sweep")?;
    let n = g.order();
    let closed = g.closed_masks("exhaustive subset sweep")?;
    let all = full_mask(n);
    let total = 1u64 << n;
    let chunk = 1u64 << 16;
    let starts: Vec<u64> = (0..total.div_ceil(chunk)).map(|i| i * chunk).collect();
    let partial = map_ordered(starts, |start| {
        let mut counts = vec![0u64; n + 1];
        for set in start..(start + chunk).min(total) {
            if mask_is_independent_dominating(&closed, all, set) {
                counts[set.count_ones() as usize] += 1;
            }
        }
        counts
    });
    let mut counts = vec![0u64; n + 1];
    for part in partial {
        for (acc, c) in counts.iter_mut().zip(part) {
            *acc += c;
        }
    }
    Ok(counts_to_poly(&counts))
}

/// `I(G, x)` by the deletion recursion `I(S) = I(S - v) + x I(S - N[v])`,
/// memoized on vertex subsets.
pub fn independence_polynomial(g: &Graph) -> Result<IntPoly> {
    check_limit(g, ENUMERATION_LIMIT, "independence polynomial")?;
    let closed = g.closed_masks("independence polynomial")?;
    let mut memo = HashMap::new();
    Ok(independence_rec(&closed, full_mask(g.order()), &mut memo))
}

fn independence_rec(closed: &[u64], set: u64, memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if set == 0 {
        return IntPoly::one();
    }
    if let Some(p) = memo.get(&set) {
        return p.clone();
    }
    // branch on the vertex with the most neighbors inside `set`
    let mut best = (0u32, 0usize);
    let mut m = set;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let d = (closed[v] & set).count_ones() - 1;
        if d > best.0 {
            best = (d, v);
        }
    }
    let result = if best.0 == 0 {
        IntPoly::from_i64s(&[1, 1]).pow(set.count_ones())
    } else {
        let v = best.1;
        let without = independence_rec(closed, set & !(1u64 << v), memo);
        let with = independence_rec(closed, set & !closed[v], memo);
        &without + &(&IntPoly::x() * &with)
    };
    memo.insert(set, result.clone());
    result
}

fn nonempty(g: &Graph) -> Result<()> {
    if g.is_null() {
        Err(Error::NullGraph)
    } else {
        Ok(())
    }
}

/// Independence number: the degree of `D_i(G, x)`.
pub fn alpha(g: &Graph) -> Result<usize> {
    nonempty(g)?;
    Ok(di_polynomial(g)?.degree().expect("nonempty graphs have a maximal independent set"))
}

/// Independent domination number: the lowest exponent of `D_i(G, x)`.
pub fn gamma_i(g: &Graph) -> Result<usize> {
    nonempty(g)?;
    Ok(di_polynomial(g)?.lowest_degree().expect("nonempty graphs have a maximal independent set"))
}

/// Domination number by increasing-size subset search.
pub fn gamma(g: &Graph) -> Result<usize> {
    gamma_with_limit(g, EXHAUSTIVE_LIMIT)
}

pub fn gamma_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    nonempty(g)?;
    check_limit(g, limit.min(ENUMERATION_LIMIT), "domination number search")?;
    let n = g.order();
    let closed = g.closed_masks("domination number search")?;
    let all = full_mask(n);
    for k in 1..=n {
        // Gosper's hack over k-subsets
        let mut set = full_mask(k);
        loop {
            let mut covered = 0u64;
            let mut m = set;
            while m != 0 {
                covered |= closed[m.trailing_zeros() as usize];
                m &= m - 1;
            }
            if covered == all {
                return Ok(k);
            }
            let c = set & set.wrapping_neg();
            let r = set.wrapping_add(c);
            if r == 0 || r > all {
                break;
            }
            set = (((r ^ set) >> 2) / c) | r;
            if set > all {
                break;
            }
        }
    }
    unreachable!("the full vertex set dominates")
}

/// All maximal independent sets have the same size, i.e. `D_i` is a
/// monomial.
pub fn is_well_covered(g: &Graph) -> Result<bool> {
    nonempty(g)?;
    Ok(di_polynomial(g)?.term_count() == 1)
}
