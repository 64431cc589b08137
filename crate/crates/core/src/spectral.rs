//! The signless Laplacian `Q = D + A` of a digraph and its spectral radius.
//!
//! `Q` is nonnegative, so its spectral radius is a real eigenvalue. For a
//! reducible digraph the matrix is block triangular under the strongly
//! connected component order, and the radius is the largest radius of a
//! diagonal block. Each non-trivial block is irreducible with a positive
//! diagonal, hence primitive, which is what makes power iteration converge.
//!
//! The iteration tracks the Collatz–Wielandt enclosure
//! `min_i (Qx)_i / x_i <= ρ <= max_i (Qx)_i / x_i` for the positive iterate
//! `x` and stops when the enclosure is narrower than the tolerance.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

/// Relative slack used by [`oval_containment`] when comparing a product of
/// distances with a product of radii.
pub const OVAL_TOL: f64 = 1e-9;

/// Dense row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        DenseMatrix { n, data: rows.concat() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }
}

/// `Q(G) = D(G) + A(G)` with the outdegree diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SignlessLaplacian(DenseMatrix);

impl SignlessLaplacian {
    pub fn of(g: &Digraph) -> Self {
        let n = g.vertex_count();
        let mut m = DenseMatrix::zeros(n);
        for v in 0..n {
            m.set(v, v, g.outdegree(v) as f64);
        }
        for &(i, j) in g.arcs() {
            m.set(i, j, 1.0);
        }
        SignlessLaplacian(m)
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> DenseMatrix {
        self.0
    }
}

pub fn build_q(g: &Digraph) -> SignlessLaplacian {
    SignlessLaplacian::of(g)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub q: f64,
    /// `‖Qx - qx‖∞ / ‖x‖∞` of the block that attains `q`.
    pub residual: f64,
    /// Iterations summed over all blocks.
    pub iterations: usize,
    /// `(component id, block spectral radius)` in component order.
    pub per_component: Vec<(usize, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { tol: DEFAULT_TOL, max_iter: DEFAULT_MAX_ITER }
    }
}

/// Spectral radius of `Q(G)` with the default tolerance.
pub fn q_of(g: &Digraph) -> Result<f64> {
    spectral_radius(g, SolverOptions::default()).map(|r| r.q)
}

/// Spectral radius of `Q(G)`, computed block by block over the strongly
/// connected components.
///
/// The stopping rule is `hi - lo <= tol · max(1, hi)` on the Collatz–Wielandt
/// enclosure; the returned value is its midpoint.
pub fn spectral_radius(g: &Digraph, opts: SolverOptions) -> Result<SpectralResult> {
    if opts.tol.is_nan() || opts.tol <= 0.0 || opts.max_iter == 0 {
        return Err(Error::InvalidParameter(format!(
            "need tol > 0 and max_iter >= 1, got tol={} max_iter={}",
            opts.tol, opts.max_iter
        )));
    }
    let scc = g.scc();
    let mut per_component = Vec::with_capacity(scc.len());
    let mut iterations = 0;
    let mut best = (f64::NEG_INFINITY, 0.0);
    for (id, members) in scc.components.iter().enumerate() {
        let (rho, residual, iters) =
            if members.len() == 1 { (g.outdegree(members[0]) as f64, 0.0, 0) } else { block_radius(g, members, opts)? };
        iterations += iters;
        per_component.push((id, rho));
        if rho > best.0 {
            best = (rho, residual);
        }
    }
    Ok(SpectralResult { q: best.0, residual: best.1, iterations, per_component })
}

/// Power iteration on `Q[S] = D_S + A[S]` where `D_S` keeps the outdegrees of
/// the whole digraph.
fn block_radius(g: &Digraph, members: &[usize], opts: SolverOptions) -> Result<(f64, f64, usize)> {
    let k = members.len();
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (pos, &v) in members.iter().enumerate() {
        local[v] = pos;
    }
    let mut block = DenseMatrix::zeros(k);
    for (pos, &v) in members.iter().enumerate() {
        block.set(pos, pos, g.outdegree(v) as f64);
        for &w in g.out_neighbors(v) {
            if local[w] != usize::MAX {
                block.set(pos, local[w], 1.0);
            }
        }
    }

    let mut x = vec![1.0; k];
    let mut y = vec![0.0; k];
    let mut gap = f64::INFINITY;
    for iter in 1..=opts.max_iter {
        block.mul_vec(&x, &mut y);
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (yi, xi) in y.iter().zip(&x) {
            let ratio = yi / xi;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        gap = hi - lo;
        if gap <= opts.tol * hi.max(1.0) {
            let rho = 0.5 * (lo + hi);
            let xnorm = x.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
            let defect = y.iter().zip(&x).fold(0.0f64, |a, (yi, xi)| a.max((yi - rho * xi).abs()));
            return Ok((rho, defect / xnorm, iter));
        }
        let ymax = y.iter().fold(0.0f64, |a, &b| a.max(b));
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / ymax;
        }
    }
    Err(Error::NotConverged { iterations: opts.max_iter, gap })
}

/// Minimum and maximum row sum of a nonnegative matrix. The spectral radius
/// lies between them.
pub fn row_sum_bracket(m: &DenseMatrix) -> (f64, f64) {
    m.row_sums().into_iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| (lo.min(s), hi.max(s)))
}

/// Diagonal similarity applied to `Q(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Similarity {
    /// `Q` itself; row sums `2 d_i`.
    PlainQ,
    /// `D^{-1} Q D`; row sums `d_i + m_i`.
    DegInverse,
    /// `D^{-1/2} Q D^{1/2}`; row sums `d_i + Σ_{j ∈ N_i⁺} √(d_j / d_i)`.
    DegSqrt,
}

/// The matrix `S^{-1} Q S` for the diagonal scaling picked by `kind`.
pub fn similarity_transform(g: &Digraph, kind: Similarity) -> Result<DenseMatrix> {
    let n = g.vertex_count();
    if kind != Similarity::PlainQ {
        if let Some(v) = (0..n).find(|&v| g.outdegree(v) == 0) {
            return Err(Error::ZeroOutdegree(v));
        }
    }
    let scale = |v: usize| -> f64 {
        let d = g.outdegree(v) as f64;
        match kind {
            Similarity::PlainQ => 1.0,
            Similarity::DegInverse => d,
            Similarity::DegSqrt => d.sqrt(),
        }
    };
    let q = SignlessLaplacian::of(g).into_matrix();
    let mut out = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let v = q.get(i, j);
            if v != 0.0 {
                out.set(i, j, v * scale(j) / scale(i));
            }
        }
    }
    Ok(out)
}

pub fn similarity_row_sums(g: &Digraph, kind: Similarity) -> Result<Vec<f64>> {
    similarity_transform(g, kind).map(|m| m.row_sums())
}

/// The oval `{z : |z - a_ii|·|z - a_jj| <= r_i·r_j}` attached to an
/// off-diagonal nonzero `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OvalRegion {
    pub arc: (usize, usize),
    pub center_i: f64,
    pub center_j: f64,
    pub radius_i: f64,
    pub radius_j: f64,
}

impl OvalRegion {
    pub fn contains_real(&self, z: f64, rel_tol: f64) -> bool {
        let lhs = (z - self.center_i).abs() * (z - self.center_j).abs();
        let rhs = self.radius_i * self.radius_j;
        lhs <= rhs + rel_tol * rhs.max(1.0)
    }
}

/// Ovals of `P = D^{-1/2} Q D^{1/2}`, one per arc, with the deleted row sums
/// of `P` as radii.
pub fn ovals(g: &Digraph) -> Result<Vec<OvalRegion>> {
    let p = similarity_transform(g, Similarity::DegSqrt)?;
    let radius: Vec<f64> = (0..p.dim()).map(|i| p.row(i).iter().sum::<f64>() - p.get(i, i)).collect();
    Ok(g.arcs()
        .iter()
        .map(|&(i, j)| OvalRegion {
            arc: (i, j),
            center_i: p.get(i, i),
            center_j: p.get(j, j),
            radius_i: radius[i],
            radius_j: radius[j],
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OvalContainment {
    pub contained: bool,
    /// First arc, in lexicographic order, whose oval holds the value.
    pub witness: Option<(usize, usize)>,
}

/// Whether a real value lies in the union of the ovals of
/// `D^{-1/2} Q D^{1/2}`, up to the relative slack [`OVAL_TOL`].
pub fn oval_containment(g: &Digraph, value: f64) -> Result<OvalContainment> {
    oval_containment_with_tol(g, value, OVAL_TOL)
}

pub fn oval_containment_with_tol(g: &Digraph, value: f64, rel_tol: f64) -> Result<OvalContainment> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let witness = ovals(g)?.into_iter().find(|o| o.contains_real(value, rel_tol)).map(|o| o.arc);
    Ok(OvalContainment { contained: witness.is_some(), witness })
}
