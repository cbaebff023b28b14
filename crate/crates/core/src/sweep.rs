//! Hawking-temperature sweeps, transition bisection and oracle verification.

use rayon::prelude::*;

use crate::analytic::{closed_form_steering, ClosedFormDirection};
use crate::error::{invalid, Error, Result};
use crate::hawking::{hawking_extend, initial_tmsv, squeezing_from_temperature, temperature_from_squeezing};
use crate::party::{Party, PartySet};
use crate::steering::{SteeringDirection, SteeringReport, ThreePartyState, DEFICIT_TOL};

/// Default absolute tolerance for oracle agreement.
pub const ORACLE_TOL: f64 = 1e-9;

/// Absolute bisection tolerance on the temperature.
pub const TRANSITION_TOL: f64 = 1e-10;

/// Which variable the grid is uniform in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SweepAxis {
    #[default]
    Temperature,
    /// Uniform in channel squeezing between `r(t_min)` and `r(t_max)`.
    Squeezing,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub s: f64,
    pub omega: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub n_points: usize,
    pub tolerance: f64,
    pub axis: SweepAxis,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            s: 1.0,
            omega: 1.0,
            t_min: 0.05,
            t_max: 3.0,
            n_points: 60,
            tolerance: ORACLE_TOL,
            axis: SweepAxis::Temperature,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.s >= 0.0) || !self.s.is_finite() {
            return invalid(format!("initial squeezing must be finite and nonnegative, got {}", self.s));
        }
        if !(self.omega > 0.0) || !self.omega.is_finite() {
            return invalid(format!("mode frequency must be positive, got {}", self.omega));
        }
        if !(self.t_min > 0.0) || !(self.t_max > self.t_min) || !self.t_max.is_finite() {
            return invalid(format!("need 0 < t_min < t_max, got [{}, {}]", self.t_min, self.t_max));
        }
        if self.n_points < 2 {
            return invalid(format!("a sweep needs at least 2 points, got {}", self.n_points));
        }
        if !(self.tolerance >= 0.0) {
            return invalid(format!("tolerance must be nonnegative, got {}", self.tolerance));
        }
        Ok(())
    }

    /// `(T, r)` for every grid point, ascending in `T`.
    pub fn grid(&self) -> Result<Vec<(f64, f64)>> {
        self.validate()?;
        let n = self.n_points;
        let lerp = |lo: f64, hi: f64, i: usize| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        };
        match self.axis {
            SweepAxis::Temperature => (0..n)
                .map(|i| {
                    let t = lerp(self.t_min, self.t_max, i);
                    Ok((t, squeezing_from_temperature(t, self.omega)?))
                })
                .collect(),
            SweepAxis::Squeezing => {
                let r_lo = squeezing_from_temperature(self.t_min, self.omega)?;
                let r_hi = squeezing_from_temperature(self.t_max, self.omega)?;
                (0..n)
                    .map(|i| {
                        let r = lerp(r_lo, r_hi, i);
                        Ok((temperature_from_squeezing(r, self.omega)?, r))
                    })
                    .collect()
            }
        }
    }

    /// Temperature spacing of a uniform temperature grid.
    pub fn step(&self) -> f64 {
        (self.t_max - self.t_min) / (self.n_points - 1) as f64
    }
}

/// One grid point: temperature, channel squeezing and the full report.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub temperature: f64,
    pub squeezing: f64,
    pub report: SteeringReport,
}

fn state_at(s: f64, r: f64) -> Result<ThreePartyState> {
    ThreePartyState::standard(hawking_extend(&initial_tmsv(s)?, r)?)
}

fn row_at(s: f64, temperature: f64, squeezing: f64, tolerance: f64) -> Result<SweepRow> {
    let report = state_at(s, squeezing)?.ckw_report_with_tolerance(tolerance)?;
    Ok(SweepRow { temperature, squeezing, report })
}

/// Evaluate a single `(s, omega, T)` point; `T = 0` gives the unchanneled state.
pub fn evaluate_point(s: f64, omega: f64, temperature: f64) -> Result<SweepRow> {
    let r = squeezing_from_temperature(temperature, omega)?;
    row_at(s, temperature, r, DEFICIT_TOL)
}

/// The `T = 0` boundary row, kept off sweep grids.
pub fn zero_temperature_row(s: f64, omega: f64) -> Result<SweepRow> {
    evaluate_point(s, omega, 0.0)
}

/// One row per grid point, ascending in temperature. Rows are evaluated in
/// parallel; the result does not depend on scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    let grid = config.grid()?;
    grid.par_iter().map(|&(t, r)| row_at(config.s, t, r, DEFICIT_TOL)).collect()
}

/// Temperature and value of the largest entry of asymmetry column `k`
/// (ordered as [`crate::steering::ASYMMETRY_COLUMNS`]).
pub fn asymmetry_peak(rows: &[SweepRow], k: usize) -> Option<(f64, f64)> {
    rows.iter().map(|row| (row.temperature, row.report.asymmetry[k])).fold(None, |best: Option<(f64, f64)>, cur| {
        match best {
            Some(b) if b.1 >= cur.1 => Some(b),
            _ => Some(cur),
        }
    })
}

/// The two simultaneous steering transitions of the Hawking state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionKind {
    /// `A -> B` steering drops to zero.
    AToBDeath,
    /// `Bbar -> B` steering appears.
    BbarToBBirth,
}

impl TransitionKind {
    pub fn direction(self) -> SteeringDirection {
        let (x, y) = match self {
            Self::AToBDeath => (Party::A, Party::B),
            Self::BbarToBBirth => (Party::Bbar, Party::B),
        };
        SteeringDirection::new(PartySet::from(x), PartySet::from(y)).expect("distinct parties")
    }
}

/// Bisect the numeric steering of `kind` in temperature.
///
/// The bracket starts at `[1e-3, 10]` and is widened by decades until the
/// steering margin changes sign; bisection stops at [`TRANSITION_TOL`].
pub fn find_transition(s: f64, omega: f64, kind: TransitionKind) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return invalid(format!("transition search needs s > 0, got {s}"));
    }
    if !(omega > 0.0) || !omega.is_finite() {
        return invalid(format!("mode frequency must be positive, got {omega}"));
    }
    let dir = kind.direction();
    let margin = |t: f64| -> Result<f64> { state_at(s, squeezing_from_temperature(t, omega)?)?.steering_margin(dir) };
    let (mut lo, mut hi) = (1e-3_f64, 10.0_f64);
    let (mut f_lo, mut f_hi) = (margin(lo)?, margin(hi)?);
    let mut widenings = 0;
    while f_lo.signum() == f_hi.signum() {
        if widenings == 8 {
            return Err(Error::NotFound(format!("no sign change of {dir} steering for T in [{lo:e}, {hi:e}]")));
        }
        lo /= 10.0;
        hi *= 10.0;
        f_lo = margin(lo)?;
        f_hi = margin(hi)?;
        widenings += 1;
    }
    for _ in 0..200 {
        if hi - lo <= TRANSITION_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = margin(mid)?;
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Largest deviation between the numeric pipeline and one closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct TagDeviation {
    pub tag: ClosedFormDirection,
    pub published: bool,
    pub max_abs_deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub tolerance: f64,
    pub deviations: Vec<TagDeviation>,
    /// Largest `|G(x -> yz) - G(yz -> x)|` over the grid.
    pub collective_symmetry_gap: f64,
    /// Largest `|det sigma - 1|` over the grid.
    pub purity_deviation: f64,
    pub pass: bool,
}

/// Compare every closed form against the numeric sweep of `config`.
pub fn verify_oracle(config: &SweepConfig) -> Result<OracleReport> {
    let grid = config.grid()?;
    let per_row: Vec<(Vec<f64>, f64, f64)> = grid
        .par_iter()
        .map(|&(_, r)| -> Result<_> {
            let state = state_at(config.s, r)?;
            let report = state.ckw_report()?;
            let devs = ClosedFormDirection::ALL
                .iter()
                .map(|&tag| {
                    let (x, y) = tag.parties();
                    let numeric = report.steering_of(x, y).expect("tabulated direction");
                    Ok((numeric - closed_form_steering(tag, config.s, r)?).abs())
                })
                .collect::<Result<Vec<f64>>>()?;
            let purity = (state.covariance().determinant() - 1.0).abs();
            Ok((devs, report.collective_symmetry_gap(), purity))
        })
        .collect::<Result<_>>()?;

    let deviations: Vec<TagDeviation> = ClosedFormDirection::ALL
        .iter()
        .enumerate()
        .map(|(k, &tag)| TagDeviation {
            tag,
            published: ClosedFormDirection::PUBLISHED.contains(&tag),
            max_abs_deviation: per_row.iter().map(|(d, _, _)| d[k]).fold(0.0, f64::max),
        })
        .collect();
    let collective_symmetry_gap = per_row.iter().map(|(_, g, _)| *g).fold(0.0, f64::max);
    let purity_deviation = per_row.iter().map(|(_, _, p)| *p).fold(0.0, f64::max);
    let pass = deviations.iter().all(|d| d.max_abs_deviation <= config.tolerance)
        && collective_symmetry_gap <= config.tolerance;
    Ok(OracleReport { tolerance: config.tolerance, deviations, collective_symmetry_gap, purity_deviation, pass })
}
