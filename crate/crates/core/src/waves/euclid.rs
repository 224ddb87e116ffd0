//! Plane waves on the 3D q-deformed Euclidean space: the x⁰ = 0 series, the
//! on-shell substitution via star powers of p², and the closed-form series
//! the substitution must reproduce (the module's central acceptance check).

use super::{GeometrySpec, MomMono, PosMono, TensorSeries};
use crate::ncalg::{p_squared, Gen, NcElement, Space};
use crate::qcombi::{factorial, qbinomial, qfactorial};
use crate::qfield::QScalar;

fn bases(geom: &GeometrySpec) -> [i64; 3] {
    let s = geom.calculus.base_sign();
    [4 * s, 2 * s, 4 * s]
}

/// i-unit carried by each momentum letter: i⁻¹, or −i⁻¹ = i for conjugates.
fn unit(geom: &GeometrySpec) -> QScalar {
    if geom.conjugate {
        QScalar::i()
    } else {
        QScalar::i_inv()
    }
}

/// The x⁰ = 0 plane wave: coefficients (±i⁻¹)^{|n|}/∏[[n_i]]!, position
/// slots paired with the reversed momentum slots.
pub fn plane_wave_3d_offshell(geom: GeometrySpec, n_max: i64) -> TensorSeries {
    assert_eq!(geom.space, Space::Euclid3);
    let b = bases(&geom);
    let u = unit(&geom);
    let mut out = TensorSeries::zero(geom, n_max, 0);
    for d in 0..=n_max {
        for e0 in 0..=d {
            for e1 in 0..=(d - e0) {
                let e2 = d - e0 - e1;
                let x = [e0, e1, e2];
                let denom = &(&qfactorial(e0 as u32, b[0]) * &qfactorial(e1 as u32, b[1]))
                    * &qfactorial(e2 as u32, b[2]);
                let coeff = &u.pow(d).unwrap() * &denom.inv().expect("nonzero q-factorial");
                out.insert(
                    PosMono { t: 0, x },
                    MomMono {
                        p: [e2, e1, e0],
                        im: 0,
                    },
                    coeff,
                );
            }
        }
    }
    out
}

/// Replaces the energy exponents by star powers of p²(2m)⁻¹: term (t = n₀)
/// gets the momentum factor (p²(2m)⁻¹)^{⊛n₀} ⊛ (original factor), with the
/// time-slot coefficient (i⁻¹)^{n₀}/n₀!.
pub fn onshell_substitute(offshell: &TensorSeries, k_max: i64) -> TensorSeries {
    let geom = offshell.geom;
    let alg = geom.momentum_algebra();
    let p2 = p_squared(&alg);
    let im = NcElement::gen_pow(&alg, Gen::Inv2m, 1);
    let h = p2.star(&im).expect("central symbol");
    let mut out = TensorSeries::zero(geom, offshell.n_max, k_max);
    let mut h_pow = NcElement::one(&alg);
    let time_unit = unit(&geom); // the (i⁻¹p₀) slot is conjugated with the rest
    for n0 in 0..=k_max {
        let pref = &time_unit.pow(n0).unwrap()
            * &factorial(n0 as u32).inv().expect("nonzero factorial");
        let slab = offshell.mom_star_left(&h_pow).scale(&pref);
        for ((pos, mom), c) in slab.terms() {
            out.insert(
                PosMono { t: n0, x: pos.x },
                *mom,
                c.clone(),
            );
        }
        if n0 < k_max {
            h_pow = h_pow.star(&h).expect("same algebra");
        }
    }
    out
}

/// The printed closed form: k-sum over 0..n₀ with prefactor
/// (−λ₊)^{n₀−k} q^{∓(2k−2n₃(n₀−k))} [n₀ k]_{q^{±4}}, momentum exponents
/// shifted by (n₀−k, 2k, n₀−k), mass grade n₀.
pub fn plane_wave_3d_closed(geom: GeometrySpec, n_max: i64, k_max: i64) -> TensorSeries {
    assert_eq!(geom.space, Space::Euclid3);
    let b = bases(&geom);
    let s = geom.calculus.base_sign();
    let u = unit(&geom);
    let neg_lp = -&QScalar::lambda_plus();
    let mut out = TensorSeries::zero(geom, n_max, k_max);
    for n0 in 0..=k_max {
        for d in 0..=n_max {
            for e0 in 0..=d {
                for e1 in 0..=(d - e0) {
                    let e2 = d - e0 - e1;
                    let x = [e0, e1, e2];
                    // n₃ is the middle slot in either orientation
                    let n3 = e1;
                    let denom = &(&(&factorial(n0 as u32) * &qfactorial(e0 as u32, b[0]))
                        * &qfactorial(e1 as u32, b[1]))
                        * &qfactorial(e2 as u32, b[2]);
                    let denom_inv = denom.inv().expect("nonzero factorial");
                    let i_pow = u.pow(d + n0).unwrap();
                    for k in 0..=n0 {
                        let q_exp = s * (-2 * k + 2 * n3 * (n0 - k));
                        let coeff = &(&(&(&i_pow * &denom_inv)
                            * &neg_lp.pow(n0 - k).unwrap())
                            * &QScalar::q_pow(q_exp))
                            * &qbinomial(n0 as u32, k, 4 * s);
                        let p = [
                            x[2] + n0 - k,
                            x[1] + 2 * k,
                            x[0] + n0 - k,
                        ];
                        out.insert(
                            PosMono { t: n0, x },
                            MomMono { p, im: n0 },
                            coeff,
                        );
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcalc::Calculus;

    fn g(calculus: Calculus, conj: bool) -> GeometrySpec {
        GeometrySpec::new(Space::Euclid3, calculus, conj)
    }

    #[test]
    fn offshell_basics() {
        let w = plane_wave_3d_offshell(g(Calculus::Unhatted, false), 3);
        assert!(w.coeff(&PosMono::ONE, &MomMono::ONE).is_one());
        // (n₊,n₃,n₋) = (1,0,0): coefficient i⁻¹ with momentum factor p₊
        let c = w.coeff(
            &PosMono { t: 0, x: [1, 0, 0] },
            &MomMono { p: [0, 0, 1], im: 0 },
        );
        assert_eq!(c, QScalar::i_inv());
    }

    #[test]
    fn offshell_classical_limit() {
        let w = plane_wave_3d_offshell(g(Calculus::Unhatted, false), 4);
        for ((pos, _), c) in w.terms() {
            let mag = &c.limit_q_to_1().unwrap() * &c.limit_q_to_1().unwrap().conj();
            let f = &(&factorial(pos.x[0] as u32) * &factorial(pos.x[1] as u32))
                * &factorial(pos.x[2] as u32);
            let expect = (&f * &f).inv().unwrap().limit_q_to_1().unwrap();
            assert_eq!(mag, expect);
        }
    }

    #[test]
    fn closed_t0_slice_is_offshell() {
        for geom in [g(Calculus::Unhatted, false), g(Calculus::Hatted, true)] {
            let closed = plane_wave_3d_closed(geom, 3, 2);
            let off = plane_wave_3d_offshell(geom, 3);
            assert_eq!(closed.slice_t0(), off);
        }
    }

    #[test]
    fn closed_matches_onshell_substitution_small() {
        // the full N ≤ 4, K ≤ 3 comparison lives in the acceptance suite
        for geom in [
            g(Calculus::Unhatted, false),
            g(Calculus::Hatted, false),
            g(Calculus::Unhatted, true),
            g(Calculus::Hatted, true),
        ] {
            let off = plane_wave_3d_offshell(geom, 2);
            let sub = onshell_substitute(&off, 2);
            let closed = plane_wave_3d_closed(geom, 2, 2);
            assert_eq!(sub, closed, "{}", geom.label());
        }
    }

    #[test]
    fn mirror_maps_tables() {
        let a = plane_wave_3d_closed(g(Calculus::Unhatted, false), 3, 2);
        let b = plane_wave_3d_closed(g(Calculus::Hatted, false), 3, 2);
        assert_eq!(a.mirror(), b);
    }
}
