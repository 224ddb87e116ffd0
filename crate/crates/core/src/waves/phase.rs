//! Time-dependent phase factors and their algebra: factorization of full
//! waves into (x⁰=0 slice) ⊛ phase, and forward/backward cancellation.

use super::{GeometrySpec, MomMono, PosMono, TensorSeries};
use crate::ncalg::{p_squared, Gen, NcElement, Space};
use crate::qcombi::factorial;
use crate::qfield::QScalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// exp(−i t p²(2m)⁻¹): the unconjugate families' evolution
    Forward,
    /// exp(+i (2m)⁻¹ p² t): the conjugate families traverse backwards
    Backward,
}

/// A series in t with momentum-monomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhaseFactor {
    pub direction: Direction,
    pub geom: GeometrySpec,
    pub series: TensorSeries,
}

/// Σ (∓it)ⁿ/n! · (p²(2m)⁻¹)^{⊛n}, the momentum part expanded in the
/// geometry's normal-ordered basis. An `energy_scale` of q^{±ζ} builds the
/// inverse-wave phases.
pub fn phase_factor_scaled(
    direction: Direction,
    geom: GeometrySpec,
    k_max: i64,
    energy_scale: &QScalar,
) -> PhaseFactor {
    let alg = geom.momentum_algebra();
    let h = match geom.space {
        Space::Line => NcElement::gen_pow(&alg, Gen::P1, 2),
        Space::Euclid3 => p_squared(&alg),
    }
    .star(&NcElement::gen_pow(&alg, Gen::Inv2m, 1))
    .expect("central symbol")
    .scale(energy_scale);
    let it = match direction {
        Direction::Forward => -&QScalar::i(),
        Direction::Backward => QScalar::i(),
    };
    let mut series = TensorSeries::zero(geom, 0, k_max);
    let mut h_pow = NcElement::one(&alg);
    for n in 0..=k_max {
        let pref = &it.pow(n).unwrap() * &factorial(n as u32).inv().expect("nonzero factorial");
        for (m, c) in h_pow.terms() {
            series.insert(
                PosMono { t: n, x: [0, 0, 0] },
                MomMono { p: m.g, im: m.im },
                &pref * c,
            );
        }
        if n < k_max {
            h_pow = h_pow.star(&h).expect("same algebra");
        }
    }
    PhaseFactor {
        direction,
        geom,
        series,
    }
}

pub fn phase_factor(direction: Direction, geom: GeometrySpec, k_max: i64) -> PhaseFactor {
    phase_factor_scaled(direction, geom, k_max, &QScalar::one())
}

/// u ≟ (u at x⁰=0) ⊛ phase (unconjugate) or phase ⊛ (slice) (conjugate);
/// returns the residual, which must be exactly empty at the wave's orders.
pub fn factorization_check(wave: &TensorSeries, phase: &PhaseFactor) -> TensorSeries {
    let geom = wave.geom;
    let slice = wave.slice_t0();
    let mut product = TensorSeries::zero(geom, wave.n_max, wave.k_max);
    let alg = geom.momentum_algebra();
    for ((ppos, pmom), pc) in phase.series.terms() {
        let ph_el = NcElement::from_monomial(
            &alg,
            crate::ncalg::Monomial {
                g: pmom.p,
                t: 0,
                im: pmom.im,
                a: 0,
            },
            &QScalar::one(),
        );
        let shifted = if geom.conjugate {
            slice.mom_star_left(&ph_el)
        } else {
            slice.mom_star_right(&ph_el)
        };
        for ((pos, mom), c) in shifted.terms() {
            product.insert(
                PosMono {
                    t: pos.t + ppos.t,
                    x: pos.x,
                },
                *mom,
                &(c * pc) * &QScalar::one(),
            );
        }
    }
    wave.sub(&product)
}

/// phase(backward) ⊛ phase(forward) = 1 + O(t^{K+1}); returns the residual
/// of t-degree ≤ K, which must be zero apart from the constant term 1.
pub fn phase_cancellation(geom: GeometrySpec, k_max: i64) -> TensorSeries {
    let fwd = phase_factor(Direction::Forward, geom, k_max);
    let bwd = phase_factor(Direction::Backward, geom, k_max);
    let alg = geom.momentum_algebra();
    let mut prod = TensorSeries::zero(geom, 0, k_max);
    for ((bp, bm), bc) in bwd.series.terms() {
        for ((fp, fm), fc) in fwd.series.terms() {
            if bp.t + fp.t > k_max {
                continue;
            }
            let b_el = NcElement::from_monomial(
                &alg,
                crate::ncalg::Monomial {
                    g: bm.p,
                    t: 0,
                    im: bm.im,
                    a: 0,
                },
                &QScalar::one(),
            );
            let f_el = NcElement::from_monomial(
                &alg,
                crate::ncalg::Monomial {
                    g: fm.p,
                    t: 0,
                    im: fm.im,
                    a: 0,
                },
                &QScalar::one(),
            );
            let m_prod = b_el.star(&f_el).expect("same algebra");
            for (m, c) in m_prod.terms() {
                prod.insert(
                    PosMono {
                        t: bp.t + fp.t,
                        x: [0, 0, 0],
                    },
                    MomMono { p: m.g, im: m.im },
                    &(bc * fc) * c,
                );
            }
        }
    }
    let mut one = TensorSeries::zero(geom, 0, k_max);
    one.insert(PosMono::ONE, MomMono::ONE, QScalar::one());
    prod.sub(&one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Space;
    use crate::qcalc::Calculus;
    use crate::qcombi::cq_closed;
    use crate::waves::{plane_wave_3d_closed, plane_wave_line};

    #[test]
    fn k0_phase_is_one() {
        let geom = GeometrySpec::new(Space::Line, Calculus::Unhatted, false);
        let p = phase_factor(Direction::Forward, geom, 0);
        assert_eq!(p.series.num_terms(), 1);
        assert!(p
            .series
            .coeff(&PosMono::ONE, &MomMono::ONE)
            .is_one());
    }

    #[test]
    fn line_phase_n2_slice() {
        // (−it)²/2 · p₁⁴ (2m)⁻²
        let geom = GeometrySpec::new(Space::Line, Calculus::Unhatted, false);
        let p = phase_factor(Direction::Forward, geom, 2);
        let c = p.series.coeff(
            &PosMono { t: 2, x: [0, 0, 0] },
            &MomMono { p: [4, 0, 0], im: 2 },
        );
        assert_eq!(c, &QScalar::from_ratio(-1, 2) * &QScalar::one());
    }

    #[test]
    fn euclid3_phase_n1_slice_is_cq_table() {
        // −it·(−λ₊ p₋p₊ + q⁻² p₃²)(2m)⁻¹
        let geom = GeometrySpec::new(Space::Euclid3, Calculus::Unhatted, false);
        let p = phase_factor(Direction::Forward, geom, 1);
        let c0 = p.series.coeff(
            &PosMono { t: 1, x: [0, 0, 0] },
            &MomMono { p: [1, 0, 1], im: 1 },
        );
        let c1 = p.series.coeff(
            &PosMono { t: 1, x: [0, 0, 0] },
            &MomMono { p: [0, 2, 0], im: 1 },
        );
        let mi = -&QScalar::i();
        assert_eq!(c0, &mi * &cq_closed(1, 0));
        assert_eq!(c1, &mi * &cq_closed(1, 1));
    }

    #[test]
    fn line_factorization_all_geometries() {
        for geom in GeometrySpec::all(Space::Line) {
            let wave = plane_wave_line(geom, 6, 4);
            let dir = if geom.conjugate {
                Direction::Backward
            } else {
                Direction::Forward
            };
            let phase = phase_factor(dir, geom, 4);
            let resid = factorization_check(&wave, &phase);
            assert!(resid.is_zero(), "{}: {resid}", geom.label());
        }
    }

    #[test]
    fn euclid3_factorization() {
        for geom in GeometrySpec::all(Space::Euclid3) {
            let wave = plane_wave_3d_closed(geom, 3, 2);
            let dir = if geom.conjugate {
                Direction::Backward
            } else {
                Direction::Forward
            };
            let phase = phase_factor(dir, geom, 2);
            let resid = factorization_check(&wave, &phase);
            assert!(resid.is_zero(), "{}: {resid}", geom.label());
        }
    }

    #[test]
    fn cancellation_line_and_euclid3() {
        let line = GeometrySpec::new(Space::Line, Calculus::Unhatted, false);
        assert!(phase_cancellation(line, 8).is_zero());
        let e3 = GeometrySpec::new(Space::Euclid3, Calculus::Hatted, false);
        assert!(phase_cancellation(e3, 4).is_zero());
        assert!(phase_cancellation(line, 0).is_zero());
    }
}
