//! Plane waves on the braided line, including the inverse-momentum family.

use super::{GeometrySpec, MomMono, PosMono, TensorSeries};
use crate::ncalg::Space;
use crate::qcalc::Calculus;
use crate::qcombi::{factorial, qfactorial};
use crate::qfield::QScalar;
use crate::ncalg::ThetaVariant;

/// The on-shell line plane wave truncated at position degree N and time
/// order K: coefficients (i⁻¹)^{n₀+n₁}/(n₀!·[[n₁]]_{q^{±1}}!) on
/// (x⁰)^{n₀}(x¹)^{n₁} ⊗ (p₁)^{2n₀+n₁}(2m)^{−n₀}; conjugate variants carry
/// (−i⁻¹)-powers and the reversed tensor-factor bookkeeping.
pub fn plane_wave_line(geom: GeometrySpec, n_max: i64, k_max: i64) -> TensorSeries {
    assert_eq!(geom.space, Space::Line);
    let base = geom.calculus.base_sign();
    let unit = if geom.conjugate {
        QScalar::i() // −i⁻¹ = i
    } else {
        QScalar::i_inv()
    };
    let mut out = TensorSeries::zero(geom, n_max, k_max);
    for n0 in 0..=k_max {
        for n1 in 0..=n_max {
            let denom = &factorial(n0 as u32) * &qfactorial(n1 as u32, base);
            let coeff = &unit.pow(n0 + n1).unwrap() * &denom.inv().expect("nonzero factorial");
            out.insert(
                PosMono {
                    t: n0,
                    x: [n1, 0, 0],
                },
                MomMono {
                    p: [2 * n0 + n1, 0, 0],
                    im: n0,
                },
                coeff,
            );
        }
    }
    out
}

/// Inverse-momentum eigenfunction: the plane wave with ⊖ applied to the
/// momentum factor. Its energy eigenvalue carries the extra factor
/// q^{ζ·(base sign)} (ζ = −1 on the line).
pub fn inverse_wave_line(geom: GeometrySpec, n_max: i64, k_max: i64) -> TensorSeries {
    assert_eq!(geom.space, Space::Line, "3D braided antipode is out of scope");
    let wave = plane_wave_line(geom, n_max, k_max);
    let variant = match geom.calculus {
        Calculus::Unhatted => ThetaVariant::L,
        Calculus::Hatted => ThetaVariant::R,
    };
    apply_theta(&wave, variant)
}

/// The monomial map ⊖: p₁ⁿ ↦ (−1)ⁿ q^{∓⌊n/2⌋} p₁ⁿ on the momentum factor.
pub(crate) fn apply_theta(wave: &TensorSeries, variant: ThetaVariant) -> TensorSeries {
    wave.mom_map(|mom| {
        let n = mom.p[0];
        let half = n.div_euclid(2);
        let exp = match variant {
            ThetaVariant::L => -half,
            ThetaVariant::R => half,
        };
        let sign = if n % 2 == 0 {
            QScalar::one()
        } else {
            -&QScalar::one()
        };
        vec![(*mom, &sign * &QScalar::q_pow(exp))]
    })
}

/// The q^{ζ·base} factor scaling the energy eigenvalue of an inverse wave.
pub fn inverse_wave_energy_scale(geom: GeometrySpec) -> QScalar {
    QScalar::q_pow(geom.zeta() * geom.calculus.base_sign())
}
