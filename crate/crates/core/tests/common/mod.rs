//! Shared helpers for the integration tests: random physical states and
//! linear-algebra routes that avoid the library's own code paths.

#![allow(dead_code)]

use nalgebra::DMatrix;
use rand::rngs::StdRng;
use rand::Rng;

use steerbh::symplectic::{
    beam_splitter, conjugate, phase_rotation, single_mode_squeezer, symplectic_form, two_mode_squeezer,
};
use steerbh::CovarianceMatrix;

/// Thermal state with symplectic eigenvalues in `[1, 3)`, scrambled by a few
/// layers of random passive and active Gaussian gates.
pub fn random_physical_state(rng: &mut StdRng, n_modes: usize) -> CovarianceMatrix {
    let nus: Vec<f64> = (0..n_modes).map(|_| rng.random_range(1.0..3.0)).collect();
    let mut cm = CovarianceMatrix::thermal(&nus).unwrap();
    for _ in 0..2 {
        for m in 0..n_modes {
            let rot = phase_rotation(rng.random_range(0.0..std::f64::consts::TAU));
            cm = conjugate(&cm, &rot, &[m]).unwrap();
            let sq = single_mode_squeezer(rng.random_range(-0.8..0.8));
            cm = conjugate(&cm, &sq, &[m]).unwrap();
        }
        if n_modes >= 2 {
            let (i, j) = random_pair(rng, n_modes);
            let bs = beam_splitter(rng.random_range(0.0..std::f64::consts::PI));
            cm = conjugate(&cm, &bs, &[i, j]).unwrap();
            let (i, j) = random_pair(rng, n_modes);
            let tms = two_mode_squeezer(rng.random_range(0.0..0.8)).unwrap();
            cm = conjugate(&cm, &tms, &[i, j]).unwrap();
        }
    }
    cm
}

fn random_pair(rng: &mut StdRng, n: usize) -> (usize, usize) {
    let i = rng.random_range(0..n);
    let mut j = rng.random_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    (i, j)
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    match n {
        0 => 1.0,
        1 => m[(0, 0)],
        2 => m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)],
        _ => (0..n)
            .map(|j| {
                let minor = m.clone().remove_row(0).remove_column(j);
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * m[(0, j)] * laplace_det(&minor)
            })
            .sum(),
    }
}

/// Principal submatrix on `modes` (interleaved quadratures).
pub fn sub_block(m: &DMatrix<f64>, modes: &[usize]) -> DMatrix<f64> {
    let idx: Vec<usize> = modes.iter().flat_map(|&k| [2 * k, 2 * k + 1]).collect();
    DMatrix::from_fn(idx.len(), idx.len(), |i, j| m[(idx[i], idx[j])])
}

/// Symplectic eigenvalues from the spectrum `{+-i nu}` of `Omega M`, computed
/// by nalgebra's general (non-symmetric) eigenvalue routine.
pub fn symplectic_spectrum_oracle(m: &DMatrix<f64>) -> Vec<f64> {
    let omega = symplectic_form(m.nrows() / 2).unwrap();
    let mut mags: Vec<f64> = (omega * m).complex_eigenvalues().iter().map(|z| z.im.abs()).collect();
    mags.sort_by(f64::total_cmp);
    mags.chunks(2).map(|p| 0.5 * (p[0] + p[1])).collect()
}

/// `max{0, S(x) - S(xy)}` with Renyi-2 entropies from [`laplace_det`].
pub fn entropy_route_steering(m: &DMatrix<f64>, steerer: &[usize], steered: usize) -> f64 {
    let mut joint = steerer.to_vec();
    joint.push(steered);
    let s_x = 0.5 * laplace_det(&sub_block(m, steerer)).ln();
    let s_xy = 0.5 * laplace_det(&sub_block(m, &joint)).ln();
    (s_x - s_xy).max(0.0)
}
