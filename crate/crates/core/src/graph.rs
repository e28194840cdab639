//! The commuting graph of a group and exact maximum noncommuting sets.
//!
//! Vertices are bit-packed; the noncommuting graph is the complement view.
//! `n(G)` is the clique number of the complement, computed by a
//! Tomita-style branch-and-bound with a greedy-coloring upper bound.
//! Vertex order is group element index order throughout, so optimal
//! witnesses are reproducible.

use crate::error::{Error, Result};
use crate::group::GroupTable;

/// Bit-packed adjacency of the commuting graph on a vertex subset.
#[derive(Debug, Clone)]
pub struct CommGraph {
    pub n_vertices: usize,
    words: usize,
    /// row-major commuting adjacency (no loops)
    adj: Vec<u64>,
    /// graph vertex -> group element index
    pub vertex_map: Vec<u32>,
}

/// Blocks claimed to split a graph into independent and complete parts.
#[derive(Debug, Clone)]
pub struct SplitPartitionClaim {
    pub independent_blocks: Vec<Vec<u32>>,
    pub complete_blocks: Vec<Vec<u32>>,
}

/// Outcome of the exact clique search on the noncommuting graph.
#[derive(Debug, Clone)]
pub struct CliqueResult {
    pub size: usize,
    /// witness as group element indices, sorted
    pub witness: Vec<u32>,
    /// false when the node budget ran out; `size` is then a lower bound
    pub exact: bool,
    pub nodes: u64,
}

pub const DEFAULT_CLIQUE_BUDGET: u64 = 50_000_000;
/// Exact-mode guard on the vertex count.
pub const EXACT_MODE_VERTEX_CAP: usize = 5_000;

impl CommGraph {
    /// Build the commuting graph on `vertices` (default: all of G).
    pub fn build(g: &GroupTable, vertices: Option<&[u32]>) -> CommGraph {
        let vertex_map: Vec<u32> = match vertices {
            Some(v) => v.to_vec(),
            None => (0..g.size() as u32).collect(),
        };
        let n = vertex_map.len();
        let words = n.div_ceil(64);
        let mut adj = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..i {
                if g.commutes(vertex_map[i], vertex_map[j]) {
                    adj[i * words + j / 64] |= 1 << (j % 64);
                    adj[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        CommGraph {
            n_vertices: n,
            words,
            adj,
            vertex_map,
        }
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Adjacency in the complement (noncommuting) view.
    pub fn non_adjacent_edge(&self, i: usize, j: usize) -> bool {
        i != j && !self.adjacent(i, j)
    }

    fn complement_rows(&self) -> Vec<u64> {
        let (n, w) = (self.n_vertices, self.words);
        let mut rows = vec![0u64; n * w];
        for i in 0..n {
            for wd in 0..w {
                rows[i * w + wd] = !self.adj[i * w + wd];
            }
            // clear the loop bit and the tail beyond n
            rows[i * w + i / 64] &= !(1u64 << (i % 64));
            let tail = n % 64;
            if tail != 0 {
                rows[i * w + w - 1] &= (1u64 << tail) - 1;
            }
        }
        rows
    }

    /// Exact maximum clique in the complement graph: a maximum
    /// noncommuting set when the graph was built on a group.
    pub fn max_complement_clique(&self, budget: u64) -> CliqueResult {
        let rows = self.complement_rows();
        let mut search = CliqueSearch {
            n: self.n_vertices,
            words: self.words,
            rows,
            best: Vec::new(),
            current: Vec::new(),
            nodes: 0,
            budget,
            exhausted: true,
        };
        let all: Vec<u64> = {
            let mut p = vec![!0u64; self.words];
            let tail = self.n_vertices % 64;
            if tail != 0 {
                p[self.words - 1] = (1u64 << tail) - 1;
            }
            p
        };
        search.expand(&all);
        let mut witness: Vec<u32> = search.best.iter().map(|&v| self.vertex_map[v]).collect();
        witness.sort_unstable();
        CliqueResult {
            size: search.best.len(),
            witness,
            exact: search.exhausted,
            nodes: search.nodes,
        }
    }

    /// True iff each independent block is edge-free, each complete block a
    /// clique, the blocks are disjoint, and their union covers the graph.
    pub fn verify_mn_split(&self, claim: &SplitPartitionClaim) -> Result<bool> {
        let mut seen = vec![false; self.n_vertices];
        for block in claim
            .independent_blocks
            .iter()
            .chain(claim.complete_blocks.iter())
        {
            for &v in block {
                let v = v as usize;
                if v >= self.n_vertices {
                    return Err(Error::MalformedClaim(format!("vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(Error::MalformedClaim(format!("vertex {v} in two blocks")));
                }
                seen[v] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Ok(false);
        }
        for block in &claim.independent_blocks {
            for (i, &a) in block.iter().enumerate() {
                for &b in &block[..i] {
                    if self.adjacent(a as usize, b as usize) {
                        return Ok(false);
                    }
                }
            }
        }
        for block in &claim.complete_blocks {
            for (i, &a) in block.iter().enumerate() {
                for &b in &block[..i] {
                    if !self.adjacent(a as usize, b as usize) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// DIMACS-like edge list (1-based) for cross-checking with external
    /// solvers; `complement` exports the noncommuting graph.
    pub fn to_dimacs(&self, complement: bool) -> String {
        let mut edges = Vec::new();
        for i in 0..self.n_vertices {
            for j in 0..i {
                let e = if complement {
                    self.non_adjacent_edge(i, j)
                } else {
                    self.adjacent(i, j)
                };
                if e {
                    edges.push((j + 1, i + 1));
                }
            }
        }
        let mut out = format!("p edge {} {}\n", self.n_vertices, edges.len());
        for (a, b) in edges {
            out.push_str(&format!("e {a} {b}\n"));
        }
        out
    }
}

struct CliqueSearch {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl CliqueSearch {
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn expand(&mut self, cand: &[u64]) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = false;
            return;
        }
        let verts: Vec<usize> = bits(cand, self.n).collect();
        if verts.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        // greedy sequential coloring in vertex order; color number is an
        // upper bound on the clique size within the class prefix
        let mut color_of = vec![0usize; verts.len()];
        let mut classes: Vec<Vec<u64>> = Vec::new();
        for (vi, &v) in verts.iter().enumerate() {
            let mut c = 0;
            while c < classes.len() && intersects(self.row(v), &classes[c]) {
                c += 1;
            }
            if c == classes.len() {
                classes.push(vec![0u64; self.words]);
            }
            classes[c][v / 64] |= 1 << (v % 64);
            color_of[vi] = c + 1;
        }
        // branch in descending color order; ties keep vertex order
        let mut order: Vec<usize> = (0..verts.len()).collect();
        order.sort_by_key(|&vi| color_of[vi]);
        let mut cand = cand.to_vec();
        for &vi in order.iter().rev() {
            if self.current.len() + color_of[vi] <= self.best.len() {
                return;
            }
            let v = verts[vi];
            self.current.push(v);
            let next: Vec<u64> = cand
                .iter()
                .zip(self.row(v))
                .map(|(a, b)| a & b)
                .collect();
            self.expand(&next);
            self.current.pop();
            cand[v / 64] &= !(1u64 << (v % 64));
            if !self.exhausted {
                return;
            }
        }
    }
}

fn bits<'a>(words: &'a [u64], n: usize) -> impl Iterator<Item = usize> + 'a {
    words.iter().enumerate().flat_map(move |(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(w * 64 + b)
        })
        .filter(move |&v| v < n)
    })
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Maximum noncommuting set of a group: exact clique number of the
/// noncommuting graph plus a canonical witness.
pub fn max_noncommuting_set(g: &GroupTable) -> Result<CliqueResult> {
    max_noncommuting_set_budgeted(g, DEFAULT_CLIQUE_BUDGET)
}

pub fn max_noncommuting_set_budgeted(g: &GroupTable, budget: u64) -> Result<CliqueResult> {
    if g.size() > EXACT_MODE_VERTEX_CAP {
        return Err(Error::SearchBudgetExceeded(format!(
            "|G| = {} exceeds exact clique cap {}",
            g.size(),
            EXACT_MODE_VERTEX_CAP
        )));
    }
    let graph = CommGraph::build(g, None);
    Ok(graph.max_complement_clique(budget))
}
