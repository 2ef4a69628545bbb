//! Maximum fooling-set submatrices of a zero/nonzero pattern.
//!
//! Cells `(i, j)` and `(k, l)` of the support can sit together on the diagonal
//! of a fooling-set submatrix iff `i != k`, `j != l`, and not both `(i, l)`
//! and `(k, j)` are in the support. A fooling-set submatrix is therefore a
//! clique in the compatibility graph on support cells, and the search is an
//! exact maximum-clique branch and bound.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Default node budget for [`max_fooling_submatrix`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Cell cap for [`brute_force_fooling`].
pub const BRUTE_FORCE_CELL_CAP: usize = 24;

/// Candidate sets at or below this size get a greedy-coloring bound.
const COLORING_LIMIT: usize = 384;

/// Boolean support of a matrix (`true` = nonzero).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PatternMatrix {
    rows: usize,
    cols: usize,
    support: Vec<bool>,
}

impl PatternMatrix {
    pub fn new(rows: usize, cols: usize, support: Vec<bool>) -> Result<PatternMatrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix(format!("dimensions must be positive, got {rows}x{cols}")));
        }
        if support.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{rows}x{cols} pattern needs {} cells, got {}",
                rows * cols,
                support.len()
            )));
        }
        Ok(PatternMatrix { rows, cols, support })
    }

    /// Panics if either dimension is zero.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(rows > 0 && cols > 0, "pattern dimensions must be positive");
        let support = (0..rows * cols).map(|x| f(x / cols, x % cols)).collect();
        PatternMatrix { rows, cols, support }
    }

    pub fn from_matrix(m: &Matrix) -> PatternMatrix {
        PatternMatrix {
            rows: m.rows(),
            cols: m.cols(),
            support: m.entries().iter().map(|&v| v != 0).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.support[i * self.cols + j]
    }

    /// Support cells in row-major (lexicographic) order.
    pub fn support_cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows * self.cols)
            .filter(|&x| self.support[x])
            .map(|x| (x / self.cols, x % self.cols))
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.support.iter().filter(|&&s| s).count()
    }

    /// `None` when the pattern has a single row.
    pub fn without_row(&self, i: usize) -> Option<PatternMatrix> {
        (self.rows > 1).then(|| {
            PatternMatrix::from_fn(self.rows - 1, self.cols, |a, b| {
                self.get(if a < i { a } else { a + 1 }, b)
            })
        })
    }

    /// `None` when the pattern has a single column.
    pub fn without_col(&self, j: usize) -> Option<PatternMatrix> {
        (self.cols > 1).then(|| {
            PatternMatrix::from_fn(self.rows, self.cols - 1, |a, b| {
                self.get(a, if b < j { b } else { b + 1 })
            })
        })
    }
}

impl fmt::Debug for PatternMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PatternMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Compatibility graph on the support cells of a pattern. Vertex ids follow
/// the row-major order of the cells, so comparing ids compares cells
/// lexicographically. Adjacency is evaluated on demand from the pattern.
#[derive(Debug, Clone)]
pub struct CompatibilityGraph {
    pattern: PatternMatrix,
    vertices: Vec<(usize, usize)>,
}

impl CompatibilityGraph {
    pub fn new(pattern: &PatternMatrix) -> CompatibilityGraph {
        CompatibilityGraph { pattern: pattern.clone(), vertices: pattern.support_cells() }
    }

    pub fn vertices(&self) -> &[(usize, usize)] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let (i, j) = self.vertices[u];
        let (k, l) = self.vertices[v];
        i != k && j != l && !(self.pattern.get(i, l) && self.pattern.get(k, j))
    }

    pub fn edge_count(&self) -> usize {
        let n = self.vertices.len();
        (0..n).map(|u| (u + 1..n).filter(|&v| self.adjacent(u, v)).count()).sum()
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.vertices.len()).filter(|&v| v != u && self.adjacent(u, v)).count()
    }

    /// Smallest-last (degeneracy) order of the subgraph induced by `set`:
    /// repeatedly remove a minimum-degree vertex, then reverse. Returns
    /// indices into `set`.
    fn degeneracy_order(&self, set: &[u32]) -> Vec<usize> {
        let n = set.len();
        let adj = |x: usize, y: usize| self.adjacent(set[x] as usize, set[y] as usize);
        let mut degree: Vec<usize> =
            (0..n).map(|x| (0..n).filter(|&y| y != x && adj(x, y)).count()).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            // Ties go to the earliest entry, keeping the order deterministic.
            let x = (0..n).filter(|&y| !removed[y]).min_by_key(|&y| (degree[y], y)).unwrap();
            removed[x] = true;
            order.push(x);
            for y in 0..n {
                if !removed[y] && adj(x, y) {
                    degree[y] -= 1;
                }
            }
        }
        order.reverse();
        order
    }
}

pub fn compatibility_graph(a: &PatternMatrix) -> CompatibilityGraph {
    CompatibilityGraph::new(a)
}

/// A fooling-set submatrix of a host pattern, given by its diagonal cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// Diagonal cells, sorted lexicographically.
    pub cells: Vec<(usize, usize)>,
    pub size: usize,
    /// The search finished, so `size` is the maximum.
    pub optimal: bool,
    pub nodes_explored: u64,
}

impl fmt::Display for SearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size {}", self.size)?;
        for (i, j) in &self.cells {
            writeln!(f, "{i} {j}")?;
        }
        Ok(())
    }
}

struct Solver<'g> {
    graph: &'g CompatibilityGraph,
    budget: u64,
    nodes: u64,
    best: Vec<u32>,
    /// No clique can exceed this: every cell uses its own row and column.
    global_bound: usize,
    finished: bool,
    aborted: bool,
    col_stamp: Vec<u64>,
    color_stamp: Vec<u64>,
    generation: u64,
}

impl<'g> Solver<'g> {
    fn new(graph: &'g CompatibilityGraph, budget: u64) -> Self {
        let cells = graph.vertices();
        let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
        let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        let n = cells.len();
        Solver {
            graph,
            budget: budget.max(1),
            nodes: 0,
            best: Vec::new(),
            global_bound: rows.len().min(cols.len()),
            finished: false,
            aborted: false,
            col_stamp: vec![0; graph.pattern.cols],
            color_stamp: vec![0; n + 1],
            generation: 0,
        }
    }

    fn next_generation(&mut self) -> u64 {
        self.generation += 1;
        self.generation
    }

    /// `bounds[idx]` is an upper bound on the clique number of `cand[idx..]`:
    /// the least of its distinct rows, distinct columns and (for small sets)
    /// greedy colors.
    fn suffix_bounds(&mut self, cand: &[u32]) -> Vec<usize> {
        let cells = self.graph.vertices();
        let len = cand.len();
        let mut bounds = vec![0; len];

        let gen = self.next_generation();
        let (mut rows, mut cols) = (0, 0);
        let mut last_row = usize::MAX;
        for idx in (0..len).rev() {
            let (i, j) = cells[cand[idx] as usize];
            // Candidates are row-major sorted, so equal rows are adjacent.
            if i != last_row {
                rows += 1;
                last_row = i;
            }
            if self.col_stamp[j] != gen {
                self.col_stamp[j] = gen;
                cols += 1;
            }
            bounds[idx] = rows.min(cols);
        }

        if len <= COLORING_LIMIT {
            let colors = self.greedy_colors(cand);
            let gen = self.next_generation();
            let mut used = 0;
            for idx in (0..len).rev() {
                let c = colors[idx];
                if self.color_stamp[c] != gen {
                    self.color_stamp[c] = gen;
                    used += 1;
                }
                bounds[idx] = bounds[idx].min(used);
            }
        }
        bounds
    }

    /// Greedy sequential coloring of `cand` in smallest-last order.
    /// Returns the color of each entry of `cand`.
    fn greedy_colors(&self, cand: &[u32]) -> Vec<usize> {
        let order = self.graph.degeneracy_order(cand);
        let mut classes: Vec<Vec<u32>> = Vec::new();
        let mut colors = vec![0; cand.len()];
        for x in order {
            let v = cand[x] as usize;
            let slot = classes
                .iter()
                .position(|class| class.iter().all(|&w| !self.graph.adjacent(v, w as usize)));
            let c = match slot {
                Some(c) => c,
                None => {
                    classes.push(Vec::new());
                    classes.len() - 1
                }
            };
            classes[c].push(v as u32);
            colors[x] = c;
        }
        colors
    }

    fn expand(&mut self, clique: &mut Vec<u32>, cand: &[u32]) {
        if self.nodes >= self.budget {
            self.aborted = true;
            return;
        }
        self.nodes += 1;
        if clique.len() > self.best.len() {
            self.best = clique.clone();
            if self.best.len() >= self.global_bound {
                self.finished = true;
                return;
            }
        }
        if cand.is_empty() {
            return;
        }
        let bounds = self.suffix_bounds(cand);
        // Candidates are visited in increasing order and the incumbent is only
        // replaced by strictly larger cliques, so the first maximum clique
        // reached is the lexicographically smallest one.
        for idx in 0..cand.len() {
            if self.finished || self.aborted {
                return;
            }
            if clique.len() + bounds[idx] <= self.best.len() {
                return;
            }
            let v = cand[idx];
            let next: Vec<u32> = cand[idx + 1..]
                .iter()
                .copied()
                .filter(|&w| self.graph.adjacent(v as usize, w as usize))
                .collect();
            clique.push(v);
            self.expand(clique, &next);
            clique.pop();
        }
    }
}

/// Exact maximum fooling-set submatrix by branch and bound.
///
/// Among maximum solutions the lexicographically smallest cell list is
/// returned. `budget` caps the number of search nodes; when it runs out the
/// best solution found so far comes back with `optimal = false`.
pub fn max_fooling_submatrix(a: &PatternMatrix, budget: u64) -> SearchResult {
    let graph = CompatibilityGraph::new(a);
    let mut solver = Solver::new(&graph, budget);
    let all: Vec<u32> = (0..graph.vertex_count() as u32).collect();
    solver.expand(&mut Vec::new(), &all);
    let cells: Vec<(usize, usize)> =
        solver.best.iter().map(|&v| graph.vertices()[v as usize]).collect();
    let optimal = !solver.aborted || solver.best.len() >= solver.global_bound;
    SearchResult { size: cells.len(), cells, optimal, nodes_explored: solver.nodes }
}

#[inline]
fn pair_fools(a: &PatternMatrix, (i, j): (usize, usize), (k, l): (usize, usize)) -> bool {
    i != k && j != l && !(a.get(i, l) && a.get(k, j))
}

/// Exhaustive oracle: walks every subset of support cells in lexicographic
/// order, skipping supersets of subsets that already fail (the property is
/// hereditary), and keeps the first subset of maximum size.
pub fn brute_force_fooling(a: &PatternMatrix) -> Result<SearchResult> {
    let cells = a.support_cells();
    if cells.len() > BRUTE_FORCE_CELL_CAP {
        return Err(Error::TooLarge { cells: cells.len(), cap: BRUTE_FORCE_CELL_CAP });
    }

    fn walk(
        a: &PatternMatrix,
        cells: &[(usize, usize)],
        from: usize,
        chosen: &mut Vec<(usize, usize)>,
        best: &mut Vec<(usize, usize)>,
        visited: &mut u64,
    ) {
        *visited += 1;
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        for idx in from..cells.len() {
            let c = cells[idx];
            if chosen.iter().all(|&d| pair_fools(a, c, d)) {
                chosen.push(c);
                walk(a, cells, idx + 1, chosen, best, visited);
                chosen.pop();
            }
        }
    }

    let mut best = Vec::new();
    let mut visited = 0;
    walk(a, &cells, 0, &mut Vec::new(), &mut best, &mut visited);
    Ok(SearchResult { size: best.len(), cells: best, optimal: true, nodes_explored: visited })
}

/// True iff the selected rows and columns, with `cells[i]` aligned on the
/// diagonal, form a fooling-set submatrix of `a`.
pub fn is_fooling_submatrix(a: &PatternMatrix, cells: &[(usize, usize)]) -> bool {
    let n = cells.len();
    let in_bounds = cells.iter().all(|&(i, j)| i < a.rows() && j < a.cols());
    if !in_bounds {
        return false;
    }
    let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
    let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
    rows.sort_unstable();
    rows.dedup();
    cols.sort_unstable();
    cols.dedup();
    if rows.len() != n || cols.len() != n {
        return false;
    }
    let sub = |x: usize, y: usize| a.get(cells[x].0, cells[y].1);
    (0..n).all(|x| sub(x, x)) && (0..n).all(|x| (x + 1..n).all(|y| !(sub(x, y) && sub(y, x))))
}

/// Whether the edges `{(row_i, col_i)}` of the bipartite graph with
/// biadjacency `a` form a cross-free matching: a matching in which no two
/// edges induce a 4-cycle.
pub fn cross_free_check(a: &PatternMatrix, cells: &[(usize, usize)]) -> Result<bool> {
    for &(row, col) in cells {
        if row >= a.rows() || col >= a.cols() || !a.get(row, col) {
            return Err(Error::CellOutsideSupport { row, col });
        }
    }
    for (x, &(i, j)) in cells.iter().enumerate() {
        for &(k, l) in &cells[x + 1..] {
            if i == k || j == l {
                return Ok(false);
            }
            if a.get(i, l) && a.get(k, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
