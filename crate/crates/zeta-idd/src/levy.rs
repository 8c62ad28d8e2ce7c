//! The atomic Lévy measure built from a zero table, and its
//! Lévy–Khintchine admissibility diagnostics.
//!
//! The measure places mass m_γ/γ² at both -γ and +γ for every table
//! ordinate γ; storing the symmetric pair explicitly makes the realness
//! of the characteristic exponent structural rather than numerical.

use serde::Serialize;

use num_complex::Complex64;

use crate::accum::{ComplexNeumaier, Neumaier};
use crate::error::{Error, Result};
use crate::zeros::ZeroTable;

/// One atom (location, mass) with location ≠ 0 and mass > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LevyAtom {
    pub location: f64,
    pub mass: f64,
}

/// A finite symmetric atomic measure, atoms sorted by location.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevyMeasure {
    atoms: Vec<LevyAtom>,
    truncation_height: f64,
}

/// The Lévy–Khintchine admissibility integrals, evaluated exactly over
/// the atom set. For finite atomic measures both are finite by
/// construction; the numbers themselves (and their trend in the
/// truncation height) are the point of the report.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AdmissibilityReport {
    pub total_mass: f64,
    /// Σ mass · min(1, λ²)
    pub min1_lambda2_integral: f64,
    /// Σ_{|λ| ≤ 1} mass · |λ|
    pub abs_lambda_small_integral: f64,
    pub passed: bool,
}

/// Build the measure with atoms at ±γ, each of mass m_γ/γ².
pub fn build_levy_measure(zeros: &ZeroTable) -> LevyMeasure {
    let ordinates = zeros.ordinates();
    let multiplicities = zeros.multiplicities();
    let mut atoms = Vec::with_capacity(2 * ordinates.len());
    for (&gamma, &m) in ordinates.iter().rev().zip(multiplicities.iter().rev()) {
        atoms.push(LevyAtom {
            location: -gamma,
            mass: m as f64 / (gamma * gamma),
        });
    }
    for (&gamma, &m) in ordinates.iter().zip(multiplicities) {
        atoms.push(LevyAtom {
            location: gamma,
            mass: m as f64 / (gamma * gamma),
        });
    }
    LevyMeasure {
        atoms,
        truncation_height: zeros.height(),
    }
}

impl LevyMeasure {
    /// Build from explicit atoms (validated: finite, nonzero locations,
    /// positive masses, symmetric under λ ↦ -λ, sorted ascending).
    /// An empty atom list is the legitimate zero measure.
    pub fn from_atoms(mut atoms: Vec<LevyAtom>, truncation_height: f64) -> Result<LevyMeasure> {
        for atom in &atoms {
            if !atom.location.is_finite() || atom.location == 0.0 {
                return Err(Error::Validation(format!(
                    "atom location must be finite and nonzero, got {}",
                    atom.location
                )));
            }
            if !atom.mass.is_finite() || atom.mass <= 0.0 {
                return Err(Error::Validation(format!(
                    "atom mass must be finite and positive, got {}",
                    atom.mass
                )));
            }
        }
        atoms.sort_by(|a, b| a.location.total_cmp(&b.location));
        for (lo, hi) in atoms.iter().zip(atoms.iter().rev()) {
            if lo.location != -hi.location || lo.mass != hi.mass {
                return Err(Error::Validation(
                    "atoms must be symmetric about zero".into(),
                ));
            }
        }
        Ok(LevyMeasure {
            atoms,
            truncation_height,
        })
    }

    pub fn atoms(&self) -> &[LevyAtom] {
        &self.atoms
    }

    pub fn truncation_height(&self) -> f64 {
        self.truncation_height
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Compensated Σ mass (the compound Poisson rate λ_tot).
    pub fn total_mass(&self) -> f64 {
        let mut acc = Neumaier::new();
        for atom in &self.atoms {
            acc.add(atom.mass);
        }
        acc.total()
    }

    /// Σ mass · λ², the variance of one compound Poisson draw.
    pub fn second_moment(&self) -> f64 {
        let mut acc = Neumaier::new();
        for atom in &self.atoms {
            acc.add(atom.mass * atom.location * atom.location);
        }
        acc.total()
    }

    /// The characteristic exponent Σ mass · (e^{itλ} - 1), summed over
    /// atoms in ascending location with compensated accumulation. For
    /// the symmetric measures built here it is real up to rounding and
    /// coincides with the zero-sum route for g.
    pub fn characteristic_exponent(&self, t: f64) -> Complex64 {
        let mut acc = ComplexNeumaier::new();
        for atom in &self.atoms {
            let half = 0.5 * t * atom.location;
            let s = half.sin();
            acc.add(Complex64::new(
                -2.0 * atom.mass * s * s,
                atom.mass * (t * atom.location).sin(),
            ));
        }
        acc.total()
    }
}

/// Evaluate the admissibility integrals exactly over the atoms.
pub fn admissibility(measure: &LevyMeasure) -> AdmissibilityReport {
    let mut min1 = Neumaier::new();
    let mut small = Neumaier::new();
    for atom in measure.atoms() {
        let lambda = atom.location;
        min1.add(atom.mass * (lambda * lambda).min(1.0));
        if lambda.abs() <= 1.0 {
            small.add(atom.mass * lambda.abs());
        }
    }
    let total_mass = measure.total_mass();
    let min1_lambda2_integral = min1.total();
    let abs_lambda_small_integral = small.total();
    AdmissibilityReport {
        total_mass,
        min1_lambda2_integral,
        abs_lambda_small_integral,
        passed: total_mass.is_finite()
            && min1_lambda2_integral.is_finite()
            && abs_lambda_small_integral.is_finite(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfun::g_zero_sum;
    use crate::zeros::bundled;

    #[test]
    fn single_zero_gives_a_symmetric_pair() {
        let gamma = 14.134_725_141_734_7;
        let table = ZeroTable::from_ordinates(vec![gamma], "single").unwrap();
        let measure = build_levy_measure(&table);
        assert_eq!(measure.len(), 2);
        let atoms = measure.atoms();
        assert_eq!(atoms[0].location, -gamma);
        assert_eq!(atoms[1].location, gamma);
        assert_eq!(atoms[0].mass.to_bits(), (1.0 / (gamma * gamma)).to_bits());
        assert_eq!(atoms[0].mass.to_bits(), atoms[1].mass.to_bits());
        assert_eq!(measure.truncation_height(), gamma);
    }

    #[test]
    fn total_mass_matches_direct_summation() {
        let measure = build_levy_measure(bundled::first_100());
        // Oracle: direct summation over the fixture ordinates.
        let direct = 2.0 * bundled::first_100().sum_inv_gamma_sq();
        assert!((measure.total_mass() - direct).abs() < 1e-15);
        // 30-digit reference value for the bundled fixture.
        assert!((measure.total_mass() - 0.039_988_265_195_290_64).abs() < 1e-13);
    }

    #[test]
    fn no_atom_inside_the_unit_interval() {
        let measure = build_levy_measure(bundled::first_100());
        assert!(measure.atoms().iter().all(|a| a.location.abs() > 14.0));
    }

    #[test]
    fn symmetry_under_negation_of_locations() {
        let measure = build_levy_measure(bundled::first_100());
        let mut mirrored: Vec<LevyAtom> = measure
            .atoms()
            .iter()
            .map(|a| LevyAtom {
                location: -a.location,
                mass: a.mass,
            })
            .collect();
        mirrored.sort_by(|a, b| a.location.total_cmp(&b.location));
        assert_eq!(mirrored, measure.atoms());
    }

    #[test]
    fn admissibility_on_the_zero_measure() {
        let empty = LevyMeasure::from_atoms(vec![], 0.0).unwrap();
        let report = admissibility(&empty);
        assert_eq!(report.total_mass, 0.0);
        assert_eq!(report.min1_lambda2_integral, 0.0);
        assert_eq!(report.abs_lambda_small_integral, 0.0);
        assert!(report.passed);
    }

    #[test]
    fn admissibility_structural_identities() {
        for table in [bundled::first_100(), bundled::first_1000()] {
            let measure = build_levy_measure(table);
            let report = admissibility(&measure);
            // No atoms with |λ| ≤ 1 exist, so the small-jump integral is 0
            // and min(1, λ²) = 1 everywhere, collapsing to the total mass.
            assert_eq!(report.abs_lambda_small_integral, 0.0);
            assert!((report.min1_lambda2_integral - report.total_mass).abs() < 1e-15);
            assert!(report.passed);
        }
    }

    #[test]
    fn mass_grows_with_truncation_height_but_stays_bounded() {
        let small = build_levy_measure(bundled::first_100());
        let big = build_levy_measure(bundled::first_1000());
        assert!(big.total_mass() > small.total_mass());
        assert!(big.total_mass() < 2.0 * 0.024);
    }

    #[test]
    fn characteristic_exponent_equals_zero_sum_route() {
        let zeros = bundled::first_1000();
        let measure = build_levy_measure(zeros);
        for t in [0.0, 0.3, 1.0, 5.5, -12.0] {
            let exponent = measure.characteristic_exponent(t);
            let g = g_zero_sum(t, zeros).unwrap().value;
            assert!(
                (exponent.re - g).abs() < 1e-12,
                "t = {t}: {} vs {g}",
                exponent.re
            );
            assert!(exponent.im.abs() < 1e-14);
        }
    }

    #[test]
    fn from_atoms_validates() {
        assert!(LevyMeasure::from_atoms(
            vec![LevyAtom { location: 0.0, mass: 1.0 }],
            1.0
        )
        .is_err());
        assert!(LevyMeasure::from_atoms(
            vec![LevyAtom { location: 2.0, mass: -1.0 }],
            1.0
        )
        .is_err());
        // Asymmetric sets are rejected.
        assert!(LevyMeasure::from_atoms(
            vec![LevyAtom { location: 2.0, mass: 1.0 }],
            1.0
        )
        .is_err());
        assert!(LevyMeasure::from_atoms(
            vec![
                LevyAtom { location: -2.0, mass: 1.0 },
                LevyAtom { location: 2.0, mass: 1.0 },
            ],
            2.0
        )
        .is_ok());
    }
}
