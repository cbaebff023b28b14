//! Covariance matrices, Gaussian gates and symplectic spectra.

use steerbh::symplectic::{
    beam_splitter, check_physical, conjugate, reduce, renyi2_entropy, symplectic_eigenvalues, two_mode_squeezer,
};
use steerbh::CovarianceMatrix;

fn main() -> steerbh::Result<()> {
    let thermal = CovarianceMatrix::thermal(&[1.0, 2.0])?;
    let squeezed = conjugate(&thermal, &two_mode_squeezer(0.6)?, &[0, 1])?;
    let mixed = conjugate(&squeezed, &beam_splitter(0.4), &[0, 1])?;

    println!("sigma =\n{}", mixed.matrix());
    println!("symplectic eigenvalues: {:?}", symplectic_eigenvalues(mixed.matrix())?);
    println!("physical: {:?}", check_physical(&mixed));
    println!("det sigma = {:.12} (unchanged by gates: {:.12})", mixed.determinant(), thermal.determinant());

    let first = reduce(&mixed, &[0])?;
    println!("S2(mode 0) = {:.9}, S2(both) = {:.9}", renyi2_entropy(&first)?, renyi2_entropy(&mixed)?);
    Ok(())
}
