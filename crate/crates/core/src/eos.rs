//! Ideal-gas equation of state and primitive/conservative conversions.

use crate::error::{Error, Location, Result};

pub const DEFAULT_GAMMA: f64 = 1.4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasParams {
    gamma: f64,
}

impl Default for GasParams {
    fn default() -> Self {
        Self { gamma: DEFAULT_GAMMA }
    }
}

impl GasParams {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 1.0 && gamma.is_finite()) {
            return Err(Error::InvalidParameter(format!("gamma = {gamma} must exceed 1")));
        }
        Ok(Self { gamma })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Unchecked `p = (gamma - 1) (E - |m|^2 / (2 rho))` for the hot loops.
    #[inline]
    pub fn pressure(&self, rho: f64, mom_sq: f64, energy: f64) -> f64 {
        (self.gamma - 1.0) * (energy - 0.5 * mom_sq / rho)
    }

    /// Unchecked `E = p / (gamma - 1) + rho |u|^2 / 2`.
    #[inline]
    pub fn energy(&self, rho: f64, vel_sq: f64, p: f64) -> f64 {
        p / (self.gamma - 1.0) + 0.5 * rho * vel_sq
    }

    #[inline]
    pub fn sound_speed_unchecked(&self, rho: f64, p: f64) -> f64 {
        (self.gamma * p / rho).sqrt()
    }
}

/// Pressure from density, momentum components and (de-augmented) total energy.
pub fn pressure_from_conserved(rho: f64, mom: &[f64], energy: f64, gas: &GasParams) -> Result<f64> {
    if !(rho > 0.0) {
        return Err(Error::NonPositiveDensity { at: Location::Unlocated, value: rho });
    }
    let m2: f64 = mom.iter().map(|m| m * m).sum();
    Ok(gas.pressure(rho, m2, energy))
}

pub fn energy_from_pressure(rho: f64, mom: &[f64], p: f64, gas: &GasParams) -> Result<f64> {
    if !(rho > 0.0) {
        return Err(Error::NonPositiveDensity { at: Location::Unlocated, value: rho });
    }
    if !(p > 0.0) {
        return Err(Error::NonPositivePressure { at: Location::Unlocated, value: p });
    }
    let m2: f64 = mom.iter().map(|m| m * m).sum();
    Ok(p / (gas.gamma - 1.0) + 0.5 * m2 / rho)
}

pub fn sound_speed(rho: f64, p: f64, gas: &GasParams) -> Result<f64> {
    if !(rho > 0.0) {
        return Err(Error::NonPositiveDensity { at: Location::Unlocated, value: rho });
    }
    if !(p > 0.0) {
        return Err(Error::NonPositivePressure { at: Location::Unlocated, value: p });
    }
    Ok(gas.sound_speed_unchecked(rho, p))
}

/// Cell averages of `E + rho*phi` from averages of `E` and `rho`, using the
/// centre value of the potential.
pub fn augment_energy(energy: &[f64], rho: &[f64], phi_center: &[f64]) -> Vec<f64> {
    energy.iter().zip(rho).zip(phi_center).map(|((e, r), p)| e + r * p).collect()
}

pub fn deaugment_energy(etot: &[f64], rho: &[f64], phi_center: &[f64]) -> Vec<f64> {
    etot.iter().zip(rho).zip(phi_center).map(|((e, r), p)| e - r * p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gas() -> GasParams {
        GasParams::default()
    }

    #[test]
    fn pressure_examples() {
        assert!((pressure_from_conserved(1.0, &[0.0], 2.5, &gas()).unwrap() - 1.0).abs() < 1e-15);
        let p = pressure_from_conserved(1.0, &[1.0], 3.0, &gas()).unwrap();
        assert!((p - 1.0).abs() < 1e-15);
        let p = pressure_from_conserved(0.125, &[0.0], 0.25, &gas()).unwrap();
        assert!((p - 0.1).abs() < 1e-15);
        assert!(matches!(
            pressure_from_conserved(0.0, &[0.0], 1.0, &gas()),
            Err(Error::NonPositiveDensity { .. })
        ));
    }

    #[test]
    fn energy_examples() {
        assert!((energy_from_pressure(1.0, &[0.0], 1.0, &gas()).unwrap() - 2.5).abs() < 1e-15);
        assert!((energy_from_pressure(1.0, &[1.0], 1.0, &gas()).unwrap() - 3.0).abs() < 1e-15);
        assert!(energy_from_pressure(1.0, &[0.0], 0.0, &gas()).is_err());
        assert!(energy_from_pressure(-1.0, &[0.0], 1.0, &gas()).is_err());
    }

    #[test]
    fn sound_speed_examples() {
        assert!((sound_speed(1.0, 1.0, &gas()).unwrap() - 1.183_215_956_62).abs() < 1e-11);
        assert!((sound_speed(1.4, 1.0, &gas()).unwrap() - 1.0).abs() < 1e-15);
        assert!((sound_speed(0.125, 0.1, &gas()).unwrap() - 1.058_300_524_4).abs() < 1e-9);
        assert!(sound_speed(1.0, -1.0, &gas()).is_err());
    }

    #[test]
    fn augment_examples() {
        let e = vec![2.5, 1.0];
        let r = vec![1.0, 2.0];
        assert_eq!(augment_energy(&e, &r, &[0.0, 0.0]), e);
        let aug = augment_energy(&[2.5], &[1.0], &[0.5]);
        assert_eq!(aug, vec![3.0]);
        let phi = vec![0.3, -0.7];
        assert_eq!(deaugment_energy(&augment_energy(&e, &r, &phi), &r, &phi), e);
    }

    #[test]
    fn gamma_validation() {
        assert!(GasParams::new(1.0).is_err());
        assert!(GasParams::new(f64::NAN).is_err());
        assert_eq!(GasParams::new(5.0 / 3.0).unwrap().gamma(), 5.0 / 3.0);
    }

    proptest! {
        #[test]
        fn pressure_energy_round_trip(rho in 1e-3f64..1e3, mx in -10.0f64..10.0, my in -10.0f64..10.0, p in 1e-3f64..1e3) {
            let e = energy_from_pressure(rho, &[mx, my], p, &gas()).unwrap();
            let p2 = pressure_from_conserved(rho, &[mx, my], e, &gas()).unwrap();
            prop_assert!((p2 - p).abs() <= 1e-9 * (p + 0.5 * (mx * mx + my * my) / rho));
        }

        #[test]
        fn sound_speed_is_homogeneous(rho in 1e-3f64..1e3, p in 1e-3f64..1e3, s in 1e-3f64..1e3) {
            let c1 = sound_speed(rho, p, &gas()).unwrap();
            let c2 = sound_speed(s * rho, s * p, &gas()).unwrap();
            prop_assert!((c1 - c2).abs() <= 1e-12 * c1);
        }
    }
}
