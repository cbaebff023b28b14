//! Closed-form steering values for the three-mode Hawking state and the exact
//! sudden-death point of `A -> B` steering.
//!
//! With `a = cosh 2s`, `b = cosh 2s cosh^2 r + sinh^2 r` and
//! `c = cosh^2 r + cosh 2s sinh^2 r` the single-mode reduced states are
//! `a I2`, `b I2` and `c I2`. Because the global state is pure, every
//! two-mode reduction has the entropy of its complementary mode, and each
//! steering value is a log-ratio of these three scalars.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::party::Party;

/// Directions with a closed-form steering expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormDirection {
    ABToBbar,
    AToBbar,
    BToBbar,
    AToBBbar,
    AToB,
    BToA,
    BbarToB,
    BbarToA,
    ABbarToB,
    BBbarToA,
    BToABbar,
    BbarToAB,
}

impl ClosedFormDirection {
    pub const ALL: [ClosedFormDirection; 12] = [
        Self::ABToBbar,
        Self::AToBbar,
        Self::BToBbar,
        Self::AToBBbar,
        Self::AToB,
        Self::BToA,
        Self::BbarToB,
        Self::BbarToA,
        Self::ABbarToB,
        Self::BBbarToA,
        Self::BToABbar,
        Self::BbarToAB,
    ];

    /// The five directions whose expressions are the published ones; the rest
    /// follow from the block determinants.
    pub const PUBLISHED: [ClosedFormDirection; 5] =
        [Self::ABToBbar, Self::AToBbar, Self::BToBbar, Self::AToBBbar, Self::AToB];

    pub fn parties(self) -> (&'static [Party], &'static [Party]) {
        use Party::{Bbar, A, B};
        match self {
            Self::ABToBbar => (&[A, B], &[Bbar]),
            Self::AToBbar => (&[A], &[Bbar]),
            Self::BToBbar => (&[B], &[Bbar]),
            Self::AToBBbar => (&[A], &[B, Bbar]),
            Self::AToB => (&[A], &[B]),
            Self::BToA => (&[B], &[A]),
            Self::BbarToB => (&[Bbar], &[B]),
            Self::BbarToA => (&[Bbar], &[A]),
            Self::ABbarToB => (&[A, Bbar], &[B]),
            Self::BBbarToA => (&[B, Bbar], &[A]),
            Self::BToABbar => (&[B], &[A, Bbar]),
            Self::BbarToAB => (&[Bbar], &[A, B]),
        }
    }

    /// Same encoding as the report columns, e.g. `AB_to_Bbar`.
    pub fn name(self) -> String {
        let (x, y) = self.parties();
        let join = |ps: &[Party]| ps.iter().map(|p| p.label()).collect::<String>();
        format!("{}_to_{}", join(x), join(y))
    }
}

impl fmt::Display for ClosedFormDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for ClosedFormDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.strip_prefix("G_").unwrap_or(s);
        Self::ALL
            .into_iter()
            .find(|d| d.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("no closed form for direction `{s}`")))
    }
}

/// Scalars of the three-mode covariance matrix in block form.
///
/// Diagonal blocks are `scalar * I2`. `e_ab` and `e_bbbar` multiply `Z2`;
/// `e_abbar` multiplies `I2`, since the `Z2` of the squeezer meets the `Z2`
/// of the input correlations and `Z2 Z2 = I2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockScalars {
    pub sigma_a: f64,
    pub sigma_b: f64,
    pub sigma_bbar: f64,
    pub e_ab: f64,
    pub e_bbbar: f64,
    pub e_abbar: f64,
}

pub fn block_scalars(s: f64, r: f64) -> BlockScalars {
    let c2s = (2.0 * s).cosh();
    let (ch2, sh2) = (r.cosh().powi(2), r.sinh().powi(2));
    BlockScalars {
        sigma_a: c2s,
        sigma_b: c2s * ch2 + sh2,
        sigma_bbar: ch2 + c2s * sh2,
        e_ab: r.cosh() * (2.0 * s).sinh(),
        e_bbbar: s.cosh().powi(2) * (2.0 * r).sinh(),
        e_abbar: (2.0 * s).sinh() * r.sinh(),
    }
}

fn clamp_ln(x: f64) -> f64 {
    x.ln().max(0.0)
}

/// Closed-form steering for `tag` at initial squeezing `s` and channel squeezing `r`.
pub fn closed_form_steering(tag: ClosedFormDirection, s: f64, r: f64) -> Result<f64> {
    if !(s >= 0.0) || !(r >= 0.0) || !s.is_finite() || !r.is_finite() {
        return invalid(format!("squeezing parameters must be finite and nonnegative, got s={s}, r={r}"));
    }
    let BlockScalars { sigma_a: a, sigma_b: b, sigma_bbar: c, .. } = block_scalars(s, r);
    let c2s = a;
    let (ch2, sh2) = (r.cosh().powi(2), r.sinh().powi(2));
    use ClosedFormDirection::*;
    Ok(match tag {
        ABToBbar => clamp_ln(ch2 + c2s * sh2),
        AToBbar => clamp_ln(c2s / (sh2 + c2s * ch2)),
        BToBbar => clamp_ln(ch2 + sh2 / c2s),
        AToBBbar => clamp_ln(c2s),
        AToB => clamp_ln(c2s / (ch2 + c2s * sh2)),
        BToA => clamp_ln(b / c),
        BbarToB => clamp_ln(c / a),
        BbarToA => clamp_ln(c / b),
        ABbarToB => clamp_ln(b),
        BBbarToA => clamp_ln(a),
        BToABbar => clamp_ln(b),
        BbarToAB => clamp_ln(c),
    })
}

/// Channel squeezing at the sudden death of `A -> B` steering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionPoint {
    pub squeezing: f64,
    /// Set for `s = 0`, where there is no steering to lose.
    pub degenerate: bool,
}

/// Root of `cosh 2s (1 - sinh^2 r) = cosh^2 r`, i.e. `sinh r* = tanh s`.
pub fn transition_squeezing(s: f64) -> Result<TransitionPoint> {
    if !(s >= 0.0) || !s.is_finite() {
        return invalid(format!("initial squeezing must be finite and nonnegative, got {s}"));
    }
    Ok(TransitionPoint { squeezing: s.tanh().asinh(), degenerate: s == 0.0 })
}

/// Root of `cosh s = cosh^2 r / (1 - sinh^2 r)`, i.e. `sinh r = tanh(s/2)`.
///
/// This is the `cosh s` reading of the maximizing condition. It does not
/// coincide with the asymmetry peak or with [`transition_squeezing`]; it is
/// kept so that the comparison can be reproduced.
pub fn half_angle_condition_squeezing(s: f64) -> Result<f64> {
    Ok(transition_squeezing(0.5 * s)?.squeezing)
}

/// Hawking temperature at which `A -> B` steering dies and `Bbar -> B` is born:
/// `T* = omega / ln(1 + 1/tanh^2 s)`.
pub fn transition_temperature(s: f64, omega: f64) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return invalid(format!("transition temperature needs s > 0, got {s}"));
    }
    if !(omega > 0.0) || !omega.is_finite() {
        return invalid(format!("mode frequency must be positive and finite, got {omega}"));
    }
    let t = s.tanh();
    Ok(omega / (1.0 / (t * t)).ln_1p())
}
