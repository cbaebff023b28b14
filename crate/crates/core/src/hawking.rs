//! Hawking radiation as a two-mode squeezing channel on Bob's mode.
//!
//! Natural units throughout (`k_B = hbar = c = 1`), so temperature and mode
//! frequency share a unit and only their ratio enters the channel strength.

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::error::{invalid, Result};
use crate::symplectic::{conjugate, ensure_physical, two_mode_squeezer, z2, CovarianceMatrix};

/// Metric derivatives `f'(r+)` and `h'(r+)` at the outer horizon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorizonDerivatives {
    pub fprime: f64,
    pub hprime: f64,
}

/// `T = sqrt(f'(r+) h'(r+)) / 4 pi`, i.e. surface gravity over `2 pi`.
pub fn temperature_from_surface_gravity(fprime: f64, hprime: f64) -> Result<f64> {
    if !(fprime >= 0.0) || !(hprime >= 0.0) || !fprime.is_finite() || !hprime.is_finite() {
        return invalid(format!("metric derivatives must be finite and nonnegative, got f'={fprime}, h'={hprime}"));
    }
    Ok((fprime * hprime).sqrt() / (4.0 * PI))
}

fn check_frequency(omega: f64) -> Result<()> {
    if !(omega > 0.0) || !omega.is_finite() {
        return invalid(format!("mode frequency must be positive and finite, got {omega}"));
    }
    Ok(())
}

/// Channel squeezing `r` with `sinh r = (e^{omega/T} - 1)^{-1/2}`.
///
/// `T = 0` returns exactly 0. The form `e^{-x/2} / sqrt(1 - e^{-x})` with
/// `x = omega/T` stays finite for arbitrarily cold baths and uses `expm1`
/// so hot baths do not cancel.
pub fn squeezing_from_temperature(temperature: f64, omega: f64) -> Result<f64> {
    check_frequency(omega)?;
    if !(temperature >= 0.0) || !temperature.is_finite() {
        return invalid(format!("temperature must be finite and nonnegative, got {temperature}"));
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    let x = omega / temperature;
    let sinh_r = (-0.5 * x).exp() / (-(-x).exp_m1()).sqrt();
    Ok(sinh_r.asinh())
}

/// Inverse of [`squeezing_from_temperature`]: `T = omega / ln(1 + 1/sinh^2 r)`.
pub fn temperature_from_squeezing(r: f64, omega: f64) -> Result<f64> {
    check_frequency(omega)?;
    if !(r >= 0.0) || !r.is_finite() {
        return invalid(format!("squeezing must be finite and nonnegative, got {r}"));
    }
    if r == 0.0 {
        return Ok(0.0);
    }
    let sh = r.sinh();
    // ln(1 + 1/u) with u = sinh^2 r, split so tiny r does not overflow 1/u.
    let log_ratio = if sh >= 1.0 { (1.0 / (sh * sh)).ln_1p() } else { (sh * sh).ln_1p() - 2.0 * sh.ln() };
    Ok(omega / log_ratio)
}

/// Hawking temperature, field frequency and the derived channel squeezing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HawkingParams {
    temperature: f64,
    omega: f64,
    squeezing: f64,
    horizon: Option<HorizonDerivatives>,
}

impl HawkingParams {
    pub fn from_temperature(temperature: f64, omega: f64) -> Result<Self> {
        let squeezing = squeezing_from_temperature(temperature, omega)?;
        Ok(Self { temperature, omega, squeezing, horizon: None })
    }

    pub fn from_squeezing(squeezing: f64, omega: f64) -> Result<Self> {
        let temperature = temperature_from_squeezing(squeezing, omega)?;
        Ok(Self { temperature, omega, squeezing, horizon: None })
    }

    pub fn from_horizon(fprime: f64, hprime: f64, omega: f64) -> Result<Self> {
        let temperature = temperature_from_surface_gravity(fprime, hprime)?;
        let mut params = Self::from_temperature(temperature, omega)?;
        params.horizon = Some(HorizonDerivatives { fprime, hprime });
        Ok(params)
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn squeezing(&self) -> f64 {
        self.squeezing
    }

    pub fn horizon(&self) -> Option<HorizonDerivatives> {
        self.horizon
    }
}

/// Squeezing of the Alice-Bob two-mode squeezed vacuum before the channel acts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialState {
    s: f64,
}

impl InitialState {
    pub fn new(s: f64) -> Result<Self> {
        if !(s >= 0.0) || !s.is_finite() {
            return invalid(format!("initial squeezing must be finite and nonnegative, got {s}"));
        }
        Ok(Self { s })
    }

    pub fn squeezing(&self) -> f64 {
        self.s
    }

    pub fn covariance(&self) -> CovarianceMatrix {
        initial_tmsv(self.s).expect("validated squeezing")
    }
}

/// Two-mode squeezed vacuum: `cosh(2s) I2` on the diagonal, `sinh(2s) Z2` off it.
pub fn initial_tmsv(s: f64) -> Result<CovarianceMatrix> {
    InitialState::new(s)?;
    let (c, sh) = ((2.0 * s).cosh(), (2.0 * s).sinh());
    let mut m = DMatrix::identity(4, 4) * c;
    let off = z2() * sh;
    m.view_mut((0, 2), (2, 2)).copy_from(&off);
    m.view_mut((2, 0), (2, 2)).copy_from(&off);
    CovarianceMatrix::new(m)
}

/// Apply the Hawking channel to Bob's mode: append a vacuum interior mode and
/// squeeze it together with Bob by `r`. Output modes are ordered `A, B, Bbar`.
pub fn hawking_extend(sigma_ab: &CovarianceMatrix, r: f64) -> Result<CovarianceMatrix> {
    if sigma_ab.n_modes() != 2 {
        return invalid(format!("expected a two-mode state, got {} modes", sigma_ab.n_modes()));
    }
    ensure_physical(sigma_ab)?;
    let squeezer = two_mode_squeezer(r)?;
    let padded = sigma_ab.direct_sum(&CovarianceMatrix::vacuum(1)?);
    conjugate(&padded, &squeezer, &[1, 2])
}

/// Three-mode state for initial squeezing `s` at the given Hawking parameters.
pub fn three_mode_state(s: f64, params: &HawkingParams) -> Result<CovarianceMatrix> {
    hawking_extend(&initial_tmsv(s)?, params.squeezing())
}
