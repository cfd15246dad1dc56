//! Compatibility graphs over extension points and maximal clique
//! enumeration: maximal cliques of the graph of an embedded triangle
//! correspond to the maximal integral point sets containing it.

use num_traits::Zero;

use crate::canon::{self, CanonicalForm};
use crate::exactmath::perfect_square_root;
use crate::extension::extension_points;
use crate::geometry::{collinear, concyclic, diameter, dist2, GridPoint, PointSet};
use crate::heronian::EmbeddedTriangle;
use crate::{Error, Int, Result};

/// Graph on the extension points of a seed triangle; two vertices are
/// adjacent iff their distance is a positive integer.
#[derive(Debug, Clone)]
pub struct ExtensionGraph {
    seed: EmbeddedTriangle,
    vertices: Vec<GridPoint>,
    adj: Vec<Vec<bool>>,
}

impl ExtensionGraph {
    pub fn seed(&self) -> &EmbeddedTriangle {
        &self.seed
    }

    pub fn vertices(&self) -> &[GridPoint] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    /// Graph over an explicit vertex list; exposed so that tests can pit the
    /// enumerator against brute force on hand-made graphs.
    pub fn from_vertices(seed: EmbeddedTriangle, vertices: Vec<GridPoint>) -> Self {
        let n = vertices.len();
        let mut adj = vec![vec![false; n]; n];
        for u in 0..n {
            for v in u + 1..n {
                let d2 = dist2(&vertices[u], &vertices[v]);
                let edge = !d2.is_zero() && perfect_square_root(&d2).is_some();
                adj[u][v] = edge;
                adj[v][u] = edge;
            }
        }
        ExtensionGraph { seed, vertices, adj }
    }
}

/// A maximal integral point set discovered as seed + maximal clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalSet {
    pub points: PointSet,
    pub cardinality: usize,
    pub diameter: Int,
    pub canonical: CanonicalForm,
}

impl MaximalSet {
    pub fn from_points(points: PointSet) -> Result<Self> {
        let canonical = canon::normal_form(&points)?;
        let diameter = diameter(&points)?;
        Ok(MaximalSet { cardinality: points.len(), diameter, canonical, points })
    }

    /// Full maximality re-verification against the whole grid; not run in
    /// the enumeration hot path.
    pub fn verify(&self) -> Result<bool> {
        crate::extension::is_maximal(&self.points)
    }
}

/// Vertices = extension points of E in canonical order; edges by the
/// positive-integral-distance rule.
pub fn build_graph(e: &EmbeddedTriangle) -> Result<ExtensionGraph> {
    let vertices = extension_points(e)?;
    Ok(ExtensionGraph::from_vertices(e.clone(), vertices))
}

/// All maximal cliques of G via Bron-Kerbosch with pivoting, each returned
/// as seed + clique. Output sorted by (cardinality, canonical form).
pub fn maximal_cliques(g: &ExtensionGraph) -> Result<Vec<MaximalSet>> {
    let cliques = bron_kerbosch(g);
    let mut out = Vec::with_capacity(cliques.len());
    for clique in cliques {
        let mut pts: Vec<GridPoint> =
            g.seed.points().iter().map(|p| (*p).clone()).collect();
        pts.extend(clique.into_iter().map(|v| g.vertices[v].clone()));
        out.push(MaximalSet::from_points(PointSet::new(pts)?)?);
    }
    out.sort_by(|a, b| a.cardinality.cmp(&b.cardinality).then(a.canonical.cmp(&b.canonical)));
    Ok(out)
}

/// Raw maximal cliques as sorted vertex index lists.
pub fn maximal_clique_indices(g: &ExtensionGraph) -> Vec<Vec<usize>> {
    bron_kerbosch(g)
}

fn bron_kerbosch(g: &ExtensionGraph) -> Vec<Vec<usize>> {
    bron_kerbosch_matrix(&g.adj)
}

/// Maximal cliques of an arbitrary adjacency matrix, sorted; reused by the
/// circle-scaling construction.
pub(crate) fn bron_kerbosch_matrix(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p: Vec<usize> = (0..n).collect();
    bk_recurse(adj, &mut r, p, Vec::new(), &mut out);
    out.sort();
    out
}

fn bk_recurse(
    adj: &[Vec<bool>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort();
        out.push(clique);
        return;
    }
    // Pivot: vertex of P union X with most neighbours in P.
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
        .unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np: Vec<usize> = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let nx: Vec<usize> = x.iter().copied().filter(|&u| adj[v][u]).collect();
        r.push(v);
        bk_recurse(adj, r, np, nx, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// Position filter for constrained enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionFilter {
    /// No three points collinear.
    SemiGeneral,
    /// Additionally no four points concyclic.
    General,
}

/// A clique maximal among those whose union with the seed satisfies the
/// position filter.
#[derive(Debug, Clone)]
pub struct ConstrainedSet {
    pub points: PointSet,
    pub canonical: CanonicalForm,
    /// Always true by construction: no filtered vertex extends the set.
    pub maximal_within_filter: bool,
    /// Whether the set is maximal against the whole grid, ignoring the
    /// filter.
    pub unconditionally_maximal: bool,
}

/// All maximal-by-inclusion cliques whose union with the seed stays in the
/// requested position class. Backtracking with an excluded set guarantees
/// completeness and no duplicates; feasibility is monotone (a collinearity
/// or concyclicity violation never disappears in supersets), so the
/// Bron-Kerbosch bookkeeping remains sound.
pub fn constrained_maximal_cliques(
    g: &ExtensionGraph,
    filter: PositionFilter,
) -> Result<Vec<ConstrainedSet>> {
    let seed_pts: Vec<GridPoint> = g.seed.points().iter().map(|p| (*p).clone()).collect();
    if !filter_ok_internal(&seed_pts, filter) {
        return Err(Error::domain("seed triangle violates the position filter"));
    }
    let feasible = |chosen: &[usize], v: usize| -> bool {
        let mut pts = seed_pts.clone();
        pts.extend(chosen.iter().map(|&u| g.vertices[u].clone()));
        candidate_ok(&pts, &g.vertices[v], filter)
    };
    let p: Vec<usize> = (0..g.vertex_count()).filter(|&v| feasible(&[], v)).collect();
    let mut cliques = Vec::new();
    constrained_recurse(g, &feasible, &mut Vec::new(), p, Vec::new(), &mut cliques);
    cliques.sort();
    cliques.dedup();
    let mut out = Vec::with_capacity(cliques.len());
    for clique in cliques {
        let mut pts = seed_pts.clone();
        pts.extend(clique.into_iter().map(|v| g.vertices[v].clone()));
        let points = PointSet::new(pts)?;
        out.push(ConstrainedSet {
            canonical: canon::normal_form(&points)?,
            unconditionally_maximal: crate::extension::is_maximal(&points)?,
            maximal_within_filter: true,
            points,
        });
    }
    out.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    Ok(out)
}

fn constrained_recurse(
    g: &ExtensionGraph,
    feasible: &dyn Fn(&[usize], usize) -> bool,
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort();
        out.push(clique);
        return;
    }
    let mut p = p;
    let mut x = x;
    while let Some(v) = p.first().copied() {
        r.push(v);
        let np: Vec<usize> =
            p.iter().copied().filter(|&u| u != v && g.adjacent(v, u) && feasible(r, u)).collect();
        let nx: Vec<usize> =
            x.iter().copied().filter(|&u| g.adjacent(v, u) && feasible(r, u)).collect();
        constrained_recurse(g, feasible, r, np, nx, out);
        r.pop();
        p.remove(0);
        x.push(v);
    }
}

fn filter_ok_internal(pts: &[GridPoint], filter: PositionFilter) -> bool {
    match filter {
        PositionFilter::SemiGeneral => crate::geometry::no_three_collinear(pts),
        PositionFilter::General => {
            crate::geometry::no_three_collinear(pts) && crate::geometry::no_four_concyclic(pts)
        }
    }
}

/// Would adding `cand` to `pts` keep the position class? Only the new
/// triples/quadruples through `cand` need checking.
fn candidate_ok(pts: &[GridPoint], cand: &GridPoint, filter: PositionFilter) -> bool {
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            if collinear(&pts[i], &pts[j], cand) {
                return false;
            }
        }
    }
    if filter == PositionFilter::General {
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if concyclic(&pts[i], &pts[j], &pts[k], cand) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
