//! Eigenvalue and Schrödinger residuals for truncated waves.
//!
//! Residual checks assert emptiness strictly below the truncation boundary;
//! terms at the boundary are expected garbage of the finite series.

use super::{GeometrySpec, TensorSeries};
use crate::ncalg::{Gen, NcElement, Space};
use crate::qcalc::{DerivativeAction, EIdx, Side};
use crate::qfield::QScalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Observable {
    /// P₁ on the line, P_A in three dimensions
    Momentum(Option<EIdx>),
    /// H₀ = p²(2m)⁻¹
    Energy,
}

impl Observable {
    pub fn degree(&self) -> i64 {
        match self {
            Observable::Momentum(_) => 1,
            Observable::Energy => 2,
        }
    }
}

fn position_actions(geom: &GeometrySpec) -> Vec<(Option<EIdx>, DerivativeAction)> {
    let side = if geom.conjugate { Side::Right } else { Side::Left };
    match geom.space {
        Space::Line => {
            let alg = geom.position_algebra();
            vec![(None, DerivativeAction::line(&alg, geom.calculus, side))]
        }
        Space::Euclid3 => EIdx::ALL
            .iter()
            .map(|&idx| {
                (
                    Some(idx),
                    DerivativeAction::e3_position(geom.calculus, side, idx),
                )
            })
            .collect(),
    }
}

fn action_for(geom: &GeometrySpec, idx: Option<EIdx>) -> DerivativeAction {
    let side = if geom.conjugate { Side::Right } else { Side::Left };
    match geom.space {
        Space::Line => DerivativeAction::line(&geom.position_algebra(), geom.calculus, side),
        Space::Euclid3 => {
            DerivativeAction::e3_position(geom.calculus, side, idx.expect("3D needs an index"))
        }
    }
}

fn momentum_gen(geom: &GeometrySpec, idx: Option<EIdx>) -> Gen {
    match geom.space {
        Space::Line => Gen::P1,
        Space::Euclid3 => idx.expect("3D needs an index").momentum_gen(),
    }
}

/// H₀ ▷ u (or u ◁ H₀ for conjugate waves): g^{AB}(i∂_B)(i∂_A) applied to the
/// position factor, with the (2m)⁻¹ grade raised by one.
pub fn apply_h0(wave: &TensorSeries) -> TensorSeries {
    let geom = wave.geom;
    let applied = match geom.space {
        Space::Line => {
            let d = action_for(&geom, None);
            d.apply_series_twice(wave)
        }
        Space::Euclid3 => {
            let alg = geom.momentum_algebra();
            let (gpm, gmp, g33) = alg.metric();
            // g^{AB} P_B P_A = g^{+−}P₋P₊ + g^{−+}P₊P₋ + g^{33}P₃P₃;
            // left action: P_B P_A ▷ u = P_B ▷ (P_A ▷ u);
            // right action: u ◁ P_B P_A = (u ◁ P_B) ◁ P_A.
            let mut acc = TensorSeries::zero(geom, wave.n_max, wave.k_max);
            for (ga, gb, w) in [
                (EIdx::Plus, EIdx::Minus, gpm),
                (EIdx::Minus, EIdx::Plus, gmp),
                (EIdx::Three, EIdx::Three, g33),
            ] {
                // pair (A,B) with metric g^{AB}: inner index A, outer B
                let (inner, outer) = (ga, gb);
                let d_inner = action_for(&geom, Some(inner));
                let d_outer = action_for(&geom, Some(outer));
                let term = if geom.conjugate {
                    // (u ◁ P_B) ◁ P_A: apply outer B first, then inner A
                    d_inner.apply_series(&d_outer.apply_series(wave))
                } else {
                    // P_B ▷ (P_A ▷ u): apply inner A first, then outer B
                    d_outer.apply_series(&d_inner.apply_series(wave))
                };
                acc = acc.add(&term.scale(&w));
            }
            acc
        }
    };
    // two factors of i from P = i∂, one (2m)⁻¹
    applied
        .scale(&(-&QScalar::one()))
        .mom_map(|m| {
            let mut m2 = *m;
            m2.im += 1;
            vec![(m2, QScalar::one())]
        })
}

impl DerivativeAction {
    fn apply_series(&self, wave: &TensorSeries) -> TensorSeries {
        wave.apply_position_action(self)
    }

    fn apply_series_twice(&self, wave: &TensorSeries) -> TensorSeries {
        self.apply_series(&self.apply_series(wave))
    }
}

/// i∂_A ▷ u − u ⊛ p_A (left families) or u ◁ (i∂_A) − p_A ⊛ u (conjugate
/// families); for `Energy`, H₀ against u ⊛ p²(2m)⁻¹ scaled by
/// `energy_scale` (1 for plane waves, q^{±ζ} for inverse waves).
pub fn eigen_residual(
    wave: &TensorSeries,
    observable: Observable,
    energy_scale: &QScalar,
) -> TensorSeries {
    let geom = wave.geom;
    match observable {
        Observable::Momentum(idx) => {
            let d = action_for(&geom, idx);
            let lhs = d.apply_series(wave).scale(&QScalar::i());
            let p = NcElement::gen_pow(&geom.momentum_algebra(), momentum_gen(&geom, idx), 1);
            let rhs = if geom.conjugate {
                wave.mom_star_left(&p)
            } else {
                wave.mom_star_right(&p)
            };
            lhs.sub(&rhs)
        }
        Observable::Energy => {
            let lhs = apply_h0(wave);
            let alg = geom.momentum_algebra();
            let h = crate::ncalg::p_squared(&alg)
                .star(&NcElement::gen_pow(&alg, Gen::Inv2m, 1))
                .expect("central symbol")
                .scale(energy_scale);
            let rhs = if geom.conjugate {
                wave.mom_star_left(&h)
            } else {
                wave.mom_star_right(&h)
            };
            lhs.sub(&rhs)
        }
    }
}

/// All momentum components' residuals for the geometry.
pub fn eigen_residuals_momentum(wave: &TensorSeries) -> Vec<(Option<EIdx>, TensorSeries)> {
    position_actions(&wave.geom)
        .into_iter()
        .map(|(idx, _)| {
            (
                idx,
                eigen_residual(wave, Observable::Momentum(idx), &QScalar::one()),
            )
        })
        .collect()
}

/// i∂₀ ▷ u − H₀ ▷ u (left families) or u ◁ (i∂₀) − u ◁ H₀ (conjugate
/// families). `energy_scale` handles the inverse waves' q^{±ζ} Hamiltonian
/// scaling (their Schrödinger equation is the plain one; the scale belongs
/// to eigen checks and is 1 here unless testing scaled variants).
pub fn schrodinger_residual(wave: &TensorSeries) -> TensorSeries {
    let geom = wave.geom;
    let side = if geom.conjugate { Side::Right } else { Side::Left };
    let dt = DerivativeAction::time(&geom.position_algebra(), side);
    let lhs = wave.apply_position_action(&dt).scale(&QScalar::i());
    let rhs = apply_h0(wave);
    lhs.sub(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcalc::Calculus;
    use crate::waves::{
        inverse_wave_line, line::inverse_wave_energy_scale, plane_wave_3d_closed, plane_wave_line,
    };

    #[test]
    fn line_momentum_eigen_all_geometries() {
        for geom in GeometrySpec::all(Space::Line) {
            let wave = plane_wave_line(geom, 6, 2);
            let r = eigen_residual(&wave, Observable::Momentum(None), &QScalar::one());
            assert!(r.empty_below(5, 2), "{}: {:?}", geom.label(), r.witness_below(5, 2));
        }
    }

    #[test]
    fn line_energy_eigen() {
        for geom in GeometrySpec::all(Space::Line) {
            let wave = plane_wave_line(geom, 6, 2);
            let r = eigen_residual(&wave, Observable::Energy, &QScalar::one());
            assert!(r.empty_below(4, 2), "{}", geom.label());
        }
    }

    #[test]
    fn line_schrodinger_all_geometries() {
        for geom in GeometrySpec::all(Space::Line) {
            let wave = plane_wave_line(geom, 6, 4);
            let r = schrodinger_residual(&wave);
            assert!(r.empty_below(4, 3), "{}: {:?}", geom.label(), r.witness_below(4, 3));
        }
    }

    #[test]
    fn inverse_wave_scaled_energy_and_schrodinger() {
        for geom in GeometrySpec::all(Space::Line) {
            let wave = inverse_wave_line(geom, 6, 3);
            let scale = inverse_wave_energy_scale(geom);
            let r = eigen_residual(&wave, Observable::Energy, &scale);
            assert!(r.empty_below(4, 3), "{} energy", geom.label());
            let rs = schrodinger_residual(&wave);
            assert!(rs.empty_below(4, 2), "{} schrodinger", geom.label());
            // with the wrong scale the energy residual is NOT empty
            let bad = eigen_residual(&wave, Observable::Energy, &QScalar::one());
            assert!(!bad.empty_below(4, 3), "{} negative control", geom.label());
        }
    }

    #[test]
    fn euclid3_momentum_eigen() {
        for geom in GeometrySpec::all(Space::Euclid3) {
            let wave = plane_wave_3d_closed(geom, 3, 1);
            for (idx, r) in eigen_residuals_momentum(&wave) {
                assert!(
                    r.empty_below(2, 1),
                    "{} {:?}: {:?}",
                    geom.label(),
                    idx,
                    r.witness_below(2, 1)
                );
            }
        }
    }

    #[test]
    fn euclid3_energy_and_schrodinger() {
        for geom in GeometrySpec::all(Space::Euclid3) {
            let wave = plane_wave_3d_closed(geom, 3, 2);
            let re = eigen_residual(&wave, Observable::Energy, &QScalar::one());
            assert!(re.empty_below(1, 2), "{} energy: {:?}", geom.label(), re.witness_below(1, 2));
            let rs = schrodinger_residual(&wave);
            assert!(rs.empty_below(1, 1), "{} schrodinger: {:?}", geom.label(), rs.witness_below(1, 1));
        }
    }

    #[test]
    fn zero_wave_zero_residual() {
        let geom = GeometrySpec::new(Space::Line, Calculus::Unhatted, false);
        let z = TensorSeries::zero(geom, 4, 2);
        assert!(schrodinger_residual(&z).is_zero());
    }
}
