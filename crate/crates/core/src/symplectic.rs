//! Covariance matrices, symplectic transforms and the linear algebra on top of them.
//!
//! Quadratures are ordered mode by mode, `(x1, p1, x2, p2, ..., xn, pn)`, and the
//! vacuum covariance matrix is the identity. Every routine in the crate assumes
//! this convention; there is no way to select another one.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{invalid, Error, Result};

/// Entrywise tolerance for symmetry and symplectic-form checks.
pub const STRUCTURE_TOL: f64 = 1e-12;

/// Slack allowed below 1 for the smallest symplectic eigenvalue of a physical state.
pub const PHYSICAL_TOL: f64 = 1e-9;

/// The single-mode symplectic form `((0, 1), (-1, 0))`.
fn omega_block() -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0])
}

/// Symplectic form of `n` modes: the direct sum of `n` single-mode blocks.
pub fn symplectic_form(n: usize) -> Result<DMatrix<f64>> {
    if n == 0 {
        return invalid("symplectic form needs at least one mode");
    }
    let mut out = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        out.view_mut((2 * k, 2 * k), (2, 2)).copy_from(&omega_block());
    }
    Ok(out)
}

/// `diag(1, -1)`, the reflection appearing in squeezed-state blocks.
pub fn z2() -> DMatrix<f64> {
    DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, -1.0]))
}

/// Quadrature row indices for an ordered list of modes.
pub(crate) fn quadrature_indices(modes: &[usize]) -> Vec<usize> {
    modes.iter().flat_map(|&m| [2 * m, 2 * m + 1]).collect()
}

fn select(m: &DMatrix<f64>, rows: &[usize], cols: &[usize]) -> DMatrix<f64> {
    DMatrix::from_fn(rows.len(), cols.len(), |i, j| m[(rows[i], cols[j])])
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
}

fn symmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

fn check_modes(modes: &[usize], n_modes: usize) -> Result<()> {
    if modes.is_empty() {
        return invalid("mode selection is empty");
    }
    for (i, &m) in modes.iter().enumerate() {
        if m >= n_modes {
            return invalid(format!("mode {m} out of range for {n_modes}-mode state"));
        }
        if modes[..i].contains(&m) {
            return invalid(format!("mode {m} selected twice"));
        }
    }
    Ok(())
}

/// Real symmetric `2n x 2n` matrix of quadrature second moments.
///
/// Construction only enforces shape and symmetry so that unphysical matrices
/// can still be diagnosed with [`check_physical`]. Operations that need a
/// physical state check it themselves.
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceMatrix {
    n_modes: usize,
    entries: DMatrix<f64>,
}

impl CovarianceMatrix {
    pub fn new(entries: DMatrix<f64>) -> Result<Self> {
        let (rows, cols) = entries.shape();
        if rows != cols || rows == 0 || rows % 2 != 0 {
            return invalid(format!("covariance matrix must be 2n x 2n, got {rows} x {cols}"));
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return invalid("covariance matrix has non-finite entries");
        }
        let asym = max_abs(&(&entries - entries.transpose()));
        if asym > STRUCTURE_TOL * max_abs(&entries).max(1.0) {
            return invalid(format!("covariance matrix is not symmetric (max |s_ij - s_ji| = {asym:e})"));
        }
        Ok(Self { n_modes: rows / 2, entries: symmetrize(&entries) })
    }

    pub fn vacuum(n_modes: usize) -> Result<Self> {
        if n_modes == 0 {
            return invalid("state needs at least one mode");
        }
        Ok(Self { n_modes, entries: DMatrix::identity(2 * n_modes, 2 * n_modes) })
    }

    /// Product of thermal modes, `diag(nu_1 I2, ..., nu_n I2)`.
    pub fn thermal(nus: &[f64]) -> Result<Self> {
        if nus.is_empty() {
            return invalid("state needs at least one mode");
        }
        if let Some(nu) = nus.iter().find(|nu| !(**nu > 0.0) || !nu.is_finite()) {
            return invalid(format!("thermal noise must be positive and finite, got {nu}"));
        }
        let diag: Vec<f64> = nus.iter().flat_map(|&nu| [nu, nu]).collect();
        Ok(Self { n_modes: nus.len(), entries: DMatrix::from_diagonal(&nalgebra::DVector::from_vec(diag)) })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.entries
    }

    /// The 2x2 block coupling mode `i` (rows) to mode `j` (columns).
    pub fn block(&self, i: usize, j: usize) -> DMatrix<f64> {
        self.entries.view((2 * i, 2 * j), (2, 2)).into_owned()
    }

    pub fn determinant(&self) -> f64 {
        self.entries.determinant()
    }

    pub fn direct_sum(&self, other: &CovarianceMatrix) -> CovarianceMatrix {
        let (a, b) = (self.entries.nrows(), other.entries.nrows());
        let mut out = DMatrix::zeros(a + b, a + b);
        out.view_mut((0, 0), (a, a)).copy_from(&self.entries);
        out.view_mut((a, a), (b, b)).copy_from(&other.entries);
        CovarianceMatrix { n_modes: self.n_modes + other.n_modes, entries: out }
    }
}

/// Real `2n x 2n` matrix preserving the symplectic form.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticTransform {
    n_modes: usize,
    entries: DMatrix<f64>,
}

impl SymplecticTransform {
    /// Validates `S Omega S^T = Omega` and `det S = 1`.
    ///
    /// Both checks scale with the magnitude of `S` so that strongly squeezing
    /// transforms are not rejected for ordinary rounding.
    pub fn new(entries: DMatrix<f64>) -> Result<Self> {
        let (rows, cols) = entries.shape();
        if rows != cols || rows == 0 || rows % 2 != 0 {
            return invalid(format!("symplectic transform must be 2n x 2n, got {rows} x {cols}"));
        }
        let n_modes = rows / 2;
        let omega = symplectic_form(n_modes)?;
        let scale = max_abs(&entries).powi(2).max(1.0);
        let dev = max_abs(&(&entries * &omega * entries.transpose() - &omega));
        if dev > STRUCTURE_TOL * scale {
            return invalid(format!("matrix does not preserve the symplectic form (deviation {dev:e})"));
        }
        let det = entries.determinant();
        if (det - 1.0).abs() > 1e-10 * scale.powi(n_modes as i32) {
            return invalid(format!("symplectic transform must have unit determinant, got {det}"));
        }
        Ok(Self { n_modes, entries })
    }

    pub fn identity(n_modes: usize) -> Result<Self> {
        if n_modes == 0 {
            return invalid("transform needs at least one mode");
        }
        Ok(Self { n_modes, entries: DMatrix::identity(2 * n_modes, 2 * n_modes) })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.entries
    }

    /// `S Omega S^T - Omega`, largest entry in absolute value.
    pub fn form_deviation(&self) -> f64 {
        let omega = symplectic_form(self.n_modes).expect("n_modes >= 1");
        max_abs(&(&self.entries * &omega * self.entries.transpose() - omega))
    }

    /// Lift onto `n_modes` total modes, acting on `targets` (in order) and as
    /// the identity everywhere else.
    pub fn embed(&self, n_modes: usize, targets: &[usize]) -> Result<SymplecticTransform> {
        check_modes(targets, n_modes)?;
        if targets.len() != self.n_modes {
            return invalid(format!("{}-mode transform cannot act on {} target modes", self.n_modes, targets.len()));
        }
        let idx = quadrature_indices(targets);
        let mut out = DMatrix::identity(2 * n_modes, 2 * n_modes);
        for &i in &idx {
            out[(i, i)] = 0.0;
        }
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out[(i, j)] = self.entries[(a, b)];
            }
        }
        Ok(SymplecticTransform { n_modes, entries: out })
    }

    pub fn compose(&self, other: &SymplecticTransform) -> Result<SymplecticTransform> {
        if self.n_modes != other.n_modes {
            return invalid("cannot compose transforms on different mode counts");
        }
        Ok(SymplecticTransform { n_modes: self.n_modes, entries: &self.entries * &other.entries })
    }
}

/// Two-mode squeezer with `cosh r I2` on the diagonal and `sinh r Z2` off it.
pub fn two_mode_squeezer(r: f64) -> Result<SymplecticTransform> {
    if !(r >= 0.0) || !r.is_finite() {
        return invalid(format!("two-mode squeezing must be finite and nonnegative, got {r}"));
    }
    let (c, s) = (r.cosh(), r.sinh());
    #[rustfmt::skip]
    let m = DMatrix::from_row_slice(4, 4, &[
        c,   0.0, s,   0.0,
        0.0, c,   0.0, -s,
        s,   0.0, c,   0.0,
        0.0, -s,  0.0, c,
    ]);
    Ok(SymplecticTransform { n_modes: 2, entries: m })
}

/// Single-mode phase rotation by `theta`.
pub fn phase_rotation(theta: f64) -> SymplecticTransform {
    let (c, s) = (theta.cos(), theta.sin());
    SymplecticTransform { n_modes: 1, entries: DMatrix::from_row_slice(2, 2, &[c, s, -s, c]) }
}

/// Single-mode squeezer `diag(e^{-r}, e^{r})`.
pub fn single_mode_squeezer(r: f64) -> SymplecticTransform {
    SymplecticTransform {
        n_modes: 1,
        entries: DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![(-r).exp(), r.exp()])),
    }
}

/// Beam splitter of transmissivity `cos^2 theta` between two modes.
pub fn beam_splitter(theta: f64) -> SymplecticTransform {
    let (c, s) = (theta.cos(), theta.sin());
    #[rustfmt::skip]
    let m = DMatrix::from_row_slice(4, 4, &[
        c,   0.0, s,   0.0,
        0.0, c,   0.0, s,
        -s,  0.0, c,   0.0,
        0.0, -s,  0.0, c,
    ]);
    SymplecticTransform { n_modes: 2, entries: m }
}

/// Congruence `sigma -> S sigma S^T` with `S` acting on `targets`.
pub fn conjugate(
    sigma: &CovarianceMatrix,
    transform: &SymplecticTransform,
    targets: &[usize],
) -> Result<CovarianceMatrix> {
    let full = transform.embed(sigma.n_modes, targets)?;
    let out = &full.entries * &sigma.entries * full.entries.transpose();
    Ok(CovarianceMatrix { n_modes: sigma.n_modes, entries: symmetrize(&out) })
}

/// Principal submatrix on the selected modes, in the order given.
pub fn reduce(sigma: &CovarianceMatrix, modes: &[usize]) -> Result<CovarianceMatrix> {
    check_modes(modes, sigma.n_modes)?;
    let idx = quadrature_indices(modes);
    Ok(CovarianceMatrix { n_modes: modes.len(), entries: select(&sigma.entries, &idx, &idx) })
}

/// `0.5 ln det sigma`, in nats.
pub fn renyi2_entropy(sigma: &CovarianceMatrix) -> Result<f64> {
    let det = sigma.determinant();
    if !(det > 0.0) {
        return Err(Error::NumericalDegeneracy(format!("Renyi-2 entropy needs a positive determinant, got {det}")));
    }
    Ok(0.5 * det.ln())
}

/// `block^{-1} rhs`; closed form for a 2x2 block, LU solve otherwise.
fn solve_block(block: &DMatrix<f64>, rhs: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = block.nrows();
    let scale = max_abs(block).max(f64::MIN_POSITIVE);
    let singular = || Error::SingularBlock(format!("{n} x {n} steering block is not invertible"));
    if n == 2 {
        let (a, b, c, d) = (block[(0, 0)], block[(0, 1)], block[(1, 0)], block[(1, 1)]);
        let det = a * d - b * c;
        if det.abs() <= 1e-14 * scale * scale {
            return Err(singular());
        }
        let inv = DMatrix::from_row_slice(2, 2, &[d / det, -b / det, -c / det, a / det]);
        return Ok(inv * rhs);
    }
    let lu = block.clone().lu();
    if lu.determinant().abs() <= 1e-14 * scale.powi(n as i32) {
        return Err(singular());
    }
    lu.solve(rhs).ok_or_else(singular)
}

fn uncorrelated(m: &DMatrix<f64>, mode: usize, others: impl Iterator<Item = usize>) -> bool {
    let mut others = others;
    others.all(|o| o == mode || (0..2).all(|a| (0..2).all(|b| m[(2 * mode + a, 2 * o + b)] == 0.0)))
}

/// Conditional covariance `sigma_y - E^T sigma_x^{-1} E` of the `steered`
/// modes after measuring the `steerer` modes.
///
/// Modes not named on either side are traced out first.
pub fn schur_complement_between(
    sigma: &CovarianceMatrix,
    steerer: &[usize],
    steered: &[usize],
) -> Result<DMatrix<f64>> {
    check_modes(steerer, sigma.n_modes)?;
    check_modes(steered, sigma.n_modes)?;
    if steerer.iter().any(|m| steered.contains(m)) {
        return invalid("steering and steered modes overlap");
    }
    // A steering mode with no correlations to the rest factors out exactly.
    let involved = || steerer.iter().chain(steered).copied();
    let (dropped, kept): (Vec<usize>, Vec<usize>) =
        steerer.iter().partition(|&&m| uncorrelated(&sigma.entries, m, involved()));
    for m in dropped {
        let idx = quadrature_indices(&[m]);
        solve_block(&select(&sigma.entries, &idx, &idx), &DMatrix::zeros(2, 0))?;
    }
    let yi = quadrature_indices(steered);
    let sy = select(&sigma.entries, &yi, &yi);
    if kept.is_empty() {
        return Ok(symmetrize(&sy));
    }
    let xi = quadrature_indices(&kept);
    let sx = select(&sigma.entries, &xi, &xi);
    let exy = select(&sigma.entries, &xi, &yi);
    let m = sy - exy.transpose() * solve_block(&sx, &exy)?;
    Ok(symmetrize(&m))
}

/// Schur complement of the `steerer` block; the remaining modes, in
/// ascending order, form the conditioned party.
pub fn schur_complement(sigma: &CovarianceMatrix, steerer: &[usize]) -> Result<DMatrix<f64>> {
    check_modes(steerer, sigma.n_modes)?;
    let rest: Vec<usize> = (0..sigma.n_modes).filter(|m| !steerer.contains(m)).collect();
    if rest.is_empty() {
        return invalid("steering party must be a proper subset of the modes");
    }
    schur_complement_between(sigma, steerer, &rest)
}

/// Symplectic eigenvalues of a symmetric positive-definite `2m x 2m` matrix,
/// ascending.
///
/// Uses the real symmetric matrix `M^{1/2} Omega M Omega^T M^{1/2}`, whose
/// eigenvalues are the squared symplectic eigenvalues, each appearing twice.
pub fn symplectic_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    let (rows, cols) = m.shape();
    if rows != cols || rows == 0 || rows % 2 != 0 {
        return invalid(format!("symplectic spectrum needs a 2m x 2m matrix, got {rows} x {cols}"));
    }
    let scale = max_abs(m).max(1.0);
    if max_abs(&(m - m.transpose())) > 1e-10 * scale {
        return invalid("symplectic spectrum needs a symmetric matrix");
    }
    let sym = symmetrize(m);
    let eig = SymmetricEigen::new(sym.clone());
    if eig.eigenvalues.iter().any(|&l| !(l > 0.0)) {
        return invalid("symplectic spectrum needs a positive-definite matrix");
    }
    let mut nus = Vec::with_capacity(rows / 2);
    for component in decoupled_components(&sym) {
        let idx = quadrature_indices(&component);
        nus.extend(connected_spectrum(&select(&sym, &idx, &idx))?);
    }
    nus.sort_by(f64::total_cmp);
    Ok(nus)
}

/// Modes grouped by exactly nonzero 2x2 cross blocks.
fn decoupled_components(m: &DMatrix<f64>) -> Vec<Vec<usize>> {
    let n = m.nrows() / 2;
    let mut seen = vec![false; n];
    let mut groups = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut group = vec![start];
        seen[start] = true;
        let mut next = 0;
        while next < group.len() {
            let i = group[next];
            next += 1;
            for (j, done) in seen.iter_mut().enumerate() {
                if !*done && !uncorrelated(m, i, std::iter::once(j)) {
                    *done = true;
                    group.push(j);
                }
            }
        }
        group.sort_unstable();
        groups.push(group);
    }
    groups
}

fn connected_spectrum(sym: &DMatrix<f64>) -> Result<Vec<f64>> {
    let rows = sym.nrows();
    if rows == 2 {
        let det = sym[(0, 0)] * sym[(1, 1)] - sym[(0, 1)] * sym[(1, 0)];
        return Ok(vec![det.sqrt()]);
    }
    let eig = SymmetricEigen::new(sym.clone());
    let sqrt_diag = eig.eigenvalues.map(f64::sqrt);
    let root = &eig.eigenvectors * DMatrix::from_diagonal(&sqrt_diag) * eig.eigenvectors.transpose();
    let omega = symplectic_form(rows / 2)?;
    let k = &root * &omega * sym * omega.transpose() * &root;
    let mut squares: Vec<f64> = SymmetricEigen::new(symmetrize(&k)).eigenvalues.iter().copied().collect();
    squares.sort_by(f64::total_cmp);
    Ok(squares.chunks(2).map(|pair| (0.5 * (pair[0] + pair[1])).max(0.0).sqrt()).collect())
}

/// Outcome of a physicality check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Physicality {
    pub physical: bool,
    /// `None` when the matrix is not positive definite.
    pub min_symplectic_eigenvalue: Option<f64>,
}

/// Bona fide test: smallest symplectic eigenvalue at least `1 - PHYSICAL_TOL`.
pub fn check_physical(sigma: &CovarianceMatrix) -> Physicality {
    match symplectic_eigenvalues(&sigma.entries) {
        Ok(nus) => {
            let min = nus.iter().copied().fold(f64::INFINITY, f64::min);
            Physicality { physical: min >= 1.0 - PHYSICAL_TOL, min_symplectic_eigenvalue: Some(min) }
        }
        Err(_) => Physicality { physical: false, min_symplectic_eigenvalue: None },
    }
}

/// Returns an error unless `sigma` passes [`check_physical`].
pub fn ensure_physical(sigma: &CovarianceMatrix) -> Result<()> {
    let check = check_physical(sigma);
    if check.physical {
        Ok(())
    } else {
        invalid(match check.min_symplectic_eigenvalue {
            Some(nu) => format!("state is not physical: smallest symplectic eigenvalue {nu}"),
            None => "state is not physical: covariance matrix is not positive definite".to_string(),
        })
    }
}
