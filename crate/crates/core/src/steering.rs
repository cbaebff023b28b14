//! Gaussian EPR steering, CKW-type monogamy deficits and monogamy asymmetry.
//!
//! The steering `x -> y` is `max{0, -sum_{nu_j < 1} ln nu_j}` over the
//! symplectic eigenvalues of the Schur complement of `x` in the reduced state
//! of `xy`. That single route serves every direction, including collective
//! steerers and collective steered parties.

use std::fmt;

use crate::error::{invalid, Result};
use crate::party::{Party, PartyMap, PartySet};
use crate::symplectic::{ensure_physical, schur_complement_between, symplectic_eigenvalues, CovarianceMatrix};

/// Steering values below this are reported as exactly zero.
pub const STEERING_FLOOR: f64 = 1e-12;

/// Default slack for the monogamy pass flag.
pub const DEFICIT_TOL: f64 = 1e-10;

/// An ordered pair of disjoint, nonempty party sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SteeringDirection {
    steerer: PartySet,
    steered: PartySet,
}

impl SteeringDirection {
    pub fn new(steerer: impl Into<PartySet>, steered: impl Into<PartySet>) -> Result<Self> {
        let (steerer, steered) = (steerer.into(), steered.into());
        if steerer.is_empty() || steered.is_empty() {
            return invalid("steering direction needs nonempty parties on both sides");
        }
        if !steerer.is_disjoint(steered) {
            return invalid(format!("steering parties overlap: {steerer} -> {steered}"));
        }
        Ok(Self { steerer, steered })
    }

    pub fn steerer(&self) -> PartySet {
        self.steerer
    }

    pub fn steered(&self) -> PartySet {
        self.steered
    }

    /// Column name, e.g. `G_AB_to_Bbar`.
    pub fn column(&self) -> String {
        format!("G_{}_to_{}", self.steerer, self.steered)
    }
}

impl fmt::Display for SteeringDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.steerer, self.steered)
    }
}

fn raw_steering(nus: &[f64]) -> f64 {
    -nus.iter().filter(|&&nu| nu < 1.0).map(|nu| nu.ln()).sum::<f64>()
}

/// Steering from the `steerer` modes to the `steered` modes, in nats.
pub fn gaussian_steering_modes(sigma: &CovarianceMatrix, steerer: &[usize], steered: &[usize]) -> Result<f64> {
    let m = schur_complement_between(sigma, steerer, steered)?;
    let value = raw_steering(&symplectic_eigenvalues(&m)?);
    Ok(if value < STEERING_FLOOR { 0.0 } else { value })
}

/// `-ln` of the smallest conditional symplectic eigenvalue, unclamped.
///
/// Positive exactly when the steering is nonzero, and crosses zero smoothly at
/// sudden death or birth, which makes it the bracketing function for
/// transition searches.
pub fn steering_margin_modes(sigma: &CovarianceMatrix, steerer: &[usize], steered: &[usize]) -> Result<f64> {
    let m = schur_complement_between(sigma, steerer, steered)?;
    let nus = symplectic_eigenvalues(&m)?;
    Ok(-nus[0].ln())
}

/// A three-party covariance matrix together with its party assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreePartyState {
    cm: CovarianceMatrix,
    parties: PartyMap,
}

impl ThreePartyState {
    pub fn new(cm: CovarianceMatrix, parties: PartyMap) -> Result<Self> {
        if parties.n_modes() != cm.n_modes() {
            return invalid(format!("party map covers {} modes but the state has {}", parties.n_modes(), cm.n_modes()));
        }
        for p in Party::ALL {
            if parties.modes_of(p).is_none() {
                return invalid(format!("party {p} is not mapped"));
            }
        }
        ensure_physical(&cm)?;
        Ok(Self { cm, parties })
    }

    /// Modes ordered `A, B, Bbar`.
    pub fn standard(cm: CovarianceMatrix) -> Result<Self> {
        Self::new(cm, PartyMap::standard())
    }

    pub fn covariance(&self) -> &CovarianceMatrix {
        &self.cm
    }

    pub fn parties(&self) -> &PartyMap {
        &self.parties
    }

    pub fn steering(&self, dir: SteeringDirection) -> Result<f64> {
        let x = self.parties.resolve(dir.steerer)?;
        let y = self.parties.resolve(dir.steered)?;
        gaussian_steering_modes(&self.cm, &x, &y)
    }

    pub fn steering_margin(&self, dir: SteeringDirection) -> Result<f64> {
        let x = self.parties.resolve(dir.steerer)?;
        let y = self.parties.resolve(dir.steered)?;
        steering_margin_modes(&self.cm, &x, &y)
    }

    fn g(&self, steerer: &[Party], steered: &[Party]) -> Result<f64> {
        self.steering(SteeringDirection::new(PartySet::of(steerer), PartySet::of(steered))?)
    }

    /// `G(xy -> z) - G(x -> z) - G(y -> z)`, signed.
    pub fn deficit_2to1(&self, x: Party, y: Party, z: Party) -> Result<f64> {
        check_permutation(x, y, z)?;
        Ok(self.g(&[x, y], &[z])? - self.g(&[x], &[z])? - self.g(&[y], &[z])?)
    }

    /// `G(x -> yz) - G(x -> y) - G(x -> z)`, signed.
    pub fn deficit_1to2(&self, x: Party, y: Party, z: Party) -> Result<f64> {
        check_permutation(x, y, z)?;
        Ok(self.g(&[x], &[y, z])? - self.g(&[x], &[y])? - self.g(&[x], &[z])?)
    }

    /// `|D(xy:z) - D(z:xy)|`.
    pub fn monogamy_asymmetry(&self, x: Party, y: Party, z: Party) -> Result<f64> {
        Ok((self.deficit_2to1(x, y, z)? - self.deficit_1to2(z, x, y)?).abs())
    }

    pub fn ckw_report(&self) -> Result<SteeringReport> {
        self.ckw_report_with_tolerance(DEFICIT_TOL)
    }

    pub fn ckw_report_with_tolerance(&self, tolerance: f64) -> Result<SteeringReport> {
        let mut steering = [0.0; 12];
        for (slot, (steerer, steered)) in steering.iter_mut().zip(STEERING_DIRECTIONS) {
            *slot = self.g(steerer, steered)?;
        }
        let get = |steerer: &[Party], steered: &[Party]| {
            let idx = STEERING_DIRECTIONS
                .iter()
                .position(|(a, b)| PartySet::of(a) == PartySet::of(steerer) && PartySet::of(b) == PartySet::of(steered))
                .expect("all twelve directions are tabulated");
            steering[idx]
        };
        let mut deficits = [0.0; 6];
        for (k, &(x, y, z)) in SPLITS.iter().enumerate() {
            deficits[k] = get(&[x, y], &[z]) - get(&[x], &[z]) - get(&[y], &[z]);
            deficits[paired_1to2(k)] = get(&[z], &[x, y]) - get(&[z], &[x]) - get(&[z], &[y]);
        }
        let mut asymmetry = [0.0; 3];
        for k in 0..3 {
            asymmetry[k] = (deficits[k] - deficits[paired_1to2(k)]).abs();
        }
        let monogamous = deficits.iter().all(|&d| d >= -tolerance);
        Ok(SteeringReport { steering, deficits, asymmetry, tolerance, monogamous })
    }
}

fn check_permutation(x: Party, y: Party, z: Party) -> Result<()> {
    if x == y || y == z || x == z {
        return invalid(format!("({x}, {y}, {z}) is not a permutation of the three parties"));
    }
    Ok(())
}

const A: Party = Party::A;
const B: Party = Party::B;
const BB: Party = Party::Bbar;

/// The twelve directions in report (and CSV column) order.
pub const STEERING_DIRECTIONS: [(&[Party], &[Party]); 12] = [
    (&[A], &[B]),
    (&[B], &[A]),
    (&[A], &[BB]),
    (&[BB], &[A]),
    (&[B], &[BB]),
    (&[BB], &[B]),
    (&[A, B], &[BB]),
    (&[A, BB], &[B]),
    (&[B, BB], &[A]),
    (&[A], &[B, BB]),
    (&[B], &[A, BB]),
    (&[BB], &[A, B]),
];

/// `(x, y, z)` splits `xy | z`, in report order. The 1->2 deficit paired with
/// split `k` is `D(z : xy)`, stored at [`paired_1to2`]`(k)`.
pub const SPLITS: [(Party, Party, Party); 3] = [(A, B, BB), (A, BB, B), (B, BB, A)];

/// Index in [`SteeringReport::deficits`] of the 1->2 deficit `D(z : xy)` for split `k`.
pub const fn paired_1to2(k: usize) -> usize {
    5 - k
}

pub const STEERING_COLUMNS: [&str; 12] = [
    "G_A_to_B",
    "G_B_to_A",
    "G_A_to_Bbar",
    "G_Bbar_to_A",
    "G_B_to_Bbar",
    "G_Bbar_to_B",
    "G_AB_to_Bbar",
    "G_ABbar_to_B",
    "G_BBbar_to_A",
    "G_A_to_BBbar",
    "G_B_to_ABbar",
    "G_Bbar_to_AB",
];

pub const DEFICIT_COLUMNS: [&str; 6] =
    ["D21_AB_Bbar", "D21_ABbar_B", "D21_BBbar_A", "D12_A_BBbar", "D12_B_ABbar", "D12_Bbar_AB"];

pub const ASYMMETRY_COLUMNS: [&str; 3] = ["Dasym_AB_Bbar", "Dasym_ABbar_B", "Dasym_BBbar_A"];

/// Every directional steering, deficit and asymmetry of a three-party state.
///
/// Deficits are stored signed; a violation would show up as a negative entry
/// and clear `monogamous`.
#[derive(Debug, Clone, PartialEq)]
pub struct SteeringReport {
    /// Ordered as [`STEERING_COLUMNS`].
    pub steering: [f64; 12],
    /// Ordered as [`DEFICIT_COLUMNS`]: the three 2->1 deficits, then the three
    /// 1->2 deficits with steering parties `A`, `B`, `Bbar`.
    pub deficits: [f64; 6],
    /// Ordered as [`ASYMMETRY_COLUMNS`].
    pub asymmetry: [f64; 3],
    pub tolerance: f64,
    pub monogamous: bool,
}

impl SteeringReport {
    pub fn steering_of(&self, steerer: &[Party], steered: &[Party]) -> Option<f64> {
        let (x, y) = (PartySet::of(steerer), PartySet::of(steered));
        STEERING_DIRECTIONS
            .iter()
            .position(|(a, b)| PartySet::of(a) == x && PartySet::of(b) == y)
            .map(|i| self.steering[i])
    }

    pub fn named_steering(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        STEERING_COLUMNS.into_iter().zip(self.steering.iter().copied())
    }

    pub fn named_deficits(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        DEFICIT_COLUMNS.into_iter().zip(self.deficits.iter().copied())
    }

    pub fn named_asymmetry(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        ASYMMETRY_COLUMNS.into_iter().zip(self.asymmetry.iter().copied())
    }

    /// Look up any column by name.
    pub fn column(&self, name: &str) -> Option<f64> {
        self.named_steering()
            .chain(self.named_deficits())
            .chain(self.named_asymmetry())
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }

    /// Largest `|G(x -> yz) - G(yz -> x)|` over the three bipartitions.
    pub fn collective_symmetry_gap(&self) -> f64 {
        SPLITS
            .iter()
            .map(|&(x, y, z)| {
                let forward = self.steering_of(&[z], &[x, y]).expect("tabulated");
                let back = self.steering_of(&[x, y], &[z]).expect("tabulated");
                (forward - back).abs()
            })
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hawking::{hawking_extend, initial_tmsv, squeezing_from_temperature};
    use crate::symplectic::reduce;
    use crate::symplectic::renyi2_entropy;

    fn state(s: f64, t: f64) -> ThreePartyState {
        let r = squeezing_from_temperature(t, 1.0).unwrap();
        ThreePartyState::standard(hawking_extend(&initial_tmsv(s).unwrap(), r).unwrap()).unwrap()
    }

    fn dir(x: &[Party], y: &[Party]) -> SteeringDirection {
        SteeringDirection::new(PartySet::of(x), PartySet::of(y)).unwrap()
    }

    #[test]
    fn column_names_follow_directions() {
        for ((x, y), name) in STEERING_DIRECTIONS.iter().zip(STEERING_COLUMNS) {
            assert_eq!(dir(x, y).column(), name);
        }
    }

    #[test]
    fn direction_validation() {
        assert!(SteeringDirection::new(Party::A, PartySet::of(&[Party::A, Party::B])).is_err());
        assert!(SteeringDirection::new(PartySet::EMPTY, Party::B).is_err());
    }

    #[test]
    fn product_state_has_no_steering() {
        let cm = CovarianceMatrix::thermal(&[1.5, 2.0, 1.0]).unwrap();
        let st = ThreePartyState::standard(cm).unwrap();
        let rep = st.ckw_report().unwrap();
        assert!(rep.steering.iter().all(|&g| g == 0.0));
        assert!(rep.monogamous);
    }

    #[test]
    fn tmsv_steering() {
        let ab = initial_tmsv(1.0).unwrap();
        let g = gaussian_steering_modes(&ab, &[0], &[1]).unwrap();
        assert!((g - 2.0_f64.cosh().ln()).abs() < 1e-12);
        assert!((g - 1.325_002_747_357_864_5).abs() < 1e-12);
    }

    #[test]
    fn unit_temperature_values() {
        let st = state(1.0, 1.0);
        let r = squeezing_from_temperature(1.0, 1.0).unwrap();
        let (c2, ch, sh) = (2.0_f64.cosh(), r.cosh().powi(2), r.sinh().powi(2));
        let ab_bbar = st.steering(dir(&[A, B], &[BB])).unwrap();
        assert!((ab_bbar - (ch + c2 * sh).ln()).abs() < 1e-12);
        assert!((ab_bbar - 1.327_469_344_323_648).abs() < 1e-10);
        assert_eq!(st.steering(dir(&[A], &[BB])).unwrap(), 0.0);
        let b_bbar = st.steering(dir(&[B], &[BB])).unwrap();
        assert!((b_bbar - 0.551_967_996_666_005_8).abs() < 1e-10);

        let d = st.deficit_2to1(A, B, BB).unwrap();
        assert!((d - 0.775_501_347_657_642_7).abs() < 1e-10);
        let d = st.deficit_1to2(A, B, BB).unwrap();
        assert!((d - c2.ln()).abs() < 1e-10);
        let asym = st.monogamy_asymmetry(A, B, BB).unwrap();
        assert!((asym - 0.549_501_399_700_225_8).abs() < 1e-10);
        // With G(A -> Bbar) = G(Bbar -> A) = 0 the asymmetry reduces to
        // |G(Bbar -> B) - G(B -> Bbar)|.
        let reduced = (st.steering(dir(&[BB], &[B])).unwrap() - b_bbar).abs();
        assert!((asym - reduced).abs() < 1e-10);
    }

    #[test]
    fn entropy_form_matches_for_single_mode_steered() {
        let st = state(0.8, 1.7);
        let cm = st.covariance();
        for (x, y) in STEERING_DIRECTIONS {
            if y.len() != 1 {
                continue;
            }
            let xm = PartyMap::standard().resolve(PartySet::of(x)).unwrap();
            let mut xy = xm.clone();
            xy.extend(PartyMap::standard().resolve(PartySet::of(y)).unwrap());
            xy.sort_unstable();
            let sx = renyi2_entropy(&reduce(cm, &xm).unwrap()).unwrap();
            let sxy = renyi2_entropy(&reduce(cm, &xy).unwrap()).unwrap();
            let expect = (sx - sxy).max(0.0);
            let got = st.steering(dir(x, y)).unwrap();
            assert!((got - expect).abs() < 1e-10, "{x:?}->{y:?}: {got} vs {expect}");
        }
    }

    #[test]
    fn zero_temperature_report() {
        let rep = state(1.0, 0.0).ckw_report().unwrap();
        let l = 2.0_f64.cosh().ln();
        for (name, v) in rep.named_steering() {
            // Bbar is vacuum and uncorrelated: it only adds to collectives
            // without changing them.
            let nonzero = ["G_A_to_B", "G_B_to_A", "G_ABbar_to_B", "G_BBbar_to_A", "G_A_to_BBbar", "G_B_to_ABbar"];
            if nonzero.contains(&name) {
                assert!((v - l).abs() < 1e-12, "{name}");
            } else {
                assert_eq!(v, 0.0, "{name}");
            }
        }
        assert!(rep.monogamous);
        assert!(rep.deficits.iter().all(|d| d.abs() < 1e-12));
        assert!(rep.asymmetry.iter().all(|d| d.abs() < 1e-12));
    }

    #[test]
    fn report_agrees_with_methods() {
        let st = state(0.5, 2.3);
        let rep = st.ckw_report().unwrap();
        for (k, &(x, y, z)) in SPLITS.iter().enumerate() {
            assert_eq!(rep.deficits[k], st.deficit_2to1(x, y, z).unwrap());
            assert_eq!(rep.deficits[paired_1to2(k)], st.deficit_1to2(z, x, y).unwrap());
            assert_eq!(rep.asymmetry[k], st.monogamy_asymmetry(x, y, z).unwrap());
        }
        assert_eq!(rep.column("D12_A_BBbar"), Some(st.deficit_1to2(A, B, BB).unwrap()));
        assert!(rep.collective_symmetry_gap() < 1e-9);
    }

    #[test]
    fn deficit_needs_permutation() {
        let st = state(1.0, 1.0);
        assert!(st.deficit_2to1(A, A, B).is_err());
        assert!(st.deficit_1to2(A, B, B).is_err());
    }

    #[test]
    fn party_map_must_match_state() {
        let cm = CovarianceMatrix::vacuum(2).unwrap();
        assert!(ThreePartyState::standard(cm).is_err());
        let sub = CovarianceMatrix::thermal(&[0.5, 1.0, 1.0]).unwrap();
        assert!(ThreePartyState::standard(sub).is_err());
    }

    #[test]
    fn pass_flag_uses_tolerance() {
        let st = state(1.0, 1.0);
        let rep = st.ckw_report_with_tolerance(0.0).unwrap();
        assert!(rep.monogamous);
        assert_eq!(rep.tolerance, 0.0);
    }

    #[test]
    fn collective_pair_is_accurate_at_strong_squeezing() {
        // sigma_BBbar is poorly conditioned here.
        let st = state(1.5, 4.651758793969849);
        let l = 3.0_f64.cosh().ln();
        assert!((st.steering(dir(&[B, BB], &[A])).unwrap() - l).abs() < 1e-11);
        assert!((st.steering(dir(&[A], &[B, BB])).unwrap() - l).abs() < 1e-11);
    }

    #[test]
    fn vacuum_partner_factors_out_exactly() {
        let st = state(0.8, 0.0);
        let pair = st.steering(dir(&[A], &[B])).unwrap();
        assert_eq!(st.steering(dir(&[A, BB], &[B])).unwrap(), pair);
        assert_eq!(st.steering(dir(&[A], &[B, BB])).unwrap(), pair);
    }
}
