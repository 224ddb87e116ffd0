//! Derivative actions on the quantum spaces.
//!
//! Line and time actions are the Jackson-type formulas pinned by the
//! eigenvalue relations. The 3D actions are constructed from the plane-wave
//! pairing: the position action ∂_A is the unique degree-lowering map with
//! i∂_A ▷ exp = exp ⊛ p_A, and the momentum action ∂_p^B is the unique map
//! with x^B ⊛ exp = (i∂_p^B applied to the momentum slots of exp); right
//! actions come from the conjugate pairing and carry a global minus sign.

use crate::ncalg::{Algebra, Gen, Monomial, NcElement, Orientation, Sector, Space};
use crate::qcombi::{qfactorial, qnum};
use crate::qfield::QScalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// The two dual differential calculi: `Unhatted` is ∂ with ▷/◁̄ (the (R̄,L)
/// family), `Hatted` is ∂̂ with ▷̄/◁ (the (R,L̄) family).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Calculus {
    Unhatted,
    Hatted,
}

impl Calculus {
    pub fn orientation(&self) -> Orientation {
        match self {
            Calculus::Unhatted => Orientation::Canonical,
            Calculus::Hatted => Orientation::Reversed,
        }
    }

    /// Sign on the bracket-base exponents (q^{+a} vs q^{−a}).
    pub fn base_sign(&self) -> i64 {
        match self {
            Calculus::Unhatted => 1,
            Calculus::Hatted => -1,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Calculus::Unhatted => "(Rbar,L)",
            Calculus::Hatted => "(R,Lbar)",
        }
    }
}

/// Spatial index A of the 3D space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EIdx {
    Plus,
    Three,
    Minus,
}

impl EIdx {
    pub const ALL: [EIdx; 3] = [EIdx::Plus, EIdx::Three, EIdx::Minus];

    pub fn position_gen(&self) -> Gen {
        match self {
            EIdx::Plus => Gen::XPlus,
            EIdx::Three => Gen::X3,
            EIdx::Minus => Gen::XMinus,
        }
    }

    pub fn momentum_gen(&self) -> Gen {
        match self {
            EIdx::Plus => Gen::PPlus,
            EIdx::Three => Gen::P3,
            EIdx::Minus => Gen::PMinus,
        }
    }
}

#[derive(Clone, Debug)]
enum ActionKind {
    /// Jackson derivative on the line coordinate (position or momentum
    /// sector); `grading_twist` scales by q^{twist·(n−1)} (0 for the
    /// eigen-normalized action).
    LineSpace { grading_twist: i64 },
    /// Classical time derivative (hatted and unhatted coincide).
    Time,
    /// Pairing-derived ∂_A (lower index) on 3D position monomials.
    E3Position { index: EIdx },
    /// Pairing-derived ∂_p^B (upper index) on 3D momentum monomials.
    E3Momentum { index: EIdx },
}

/// A linear degree-lowering action on one algebra's monomials.
#[derive(Clone, Debug)]
pub struct DerivativeAction {
    alg: Algebra,
    kind: ActionKind,
    side: Side,
    calculus: Calculus,
    /// factor picked up per unit of (2m)⁻¹ grade when the derivative crosses
    /// the mass symbol (braiding bookkeeping; 1 = transparent)
    im_weight: QScalar,
    /// same for the potential constant a
    a_weight: QScalar,
}

impl DerivativeAction {
    /// ∂ or ∂̂ on the line; `alg` selects position vs momentum sector.
    pub fn line(alg: &Algebra, calculus: Calculus, side: Side) -> Self {
        assert_eq!(alg.space, Space::Line);
        DerivativeAction {
            alg: *alg,
            kind: ActionKind::LineSpace { grading_twist: 0 },
            side,
            calculus,
            im_weight: QScalar::one(),
            a_weight: QScalar::one(),
        }
    }

    /// Graded variant of the line derivative (used by the continuity flux).
    pub fn line_graded(alg: &Algebra, calculus: Calculus, side: Side, twist: i64) -> Self {
        let mut d = Self::line(alg, calculus, side);
        d.kind = ActionKind::LineSpace {
            grading_twist: twist,
        };
        d
    }

    /// ∂₀: left action d/dt, right action −d/dt, on any algebra's elements.
    pub fn time(alg: &Algebra, side: Side) -> Self {
        DerivativeAction {
            alg: *alg,
            kind: ActionKind::Time,
            side,
            calculus: Calculus::Unhatted,
            im_weight: QScalar::one(),
            a_weight: QScalar::one(),
        }
    }

    /// Pairing-derived ∂_A on 3D position monomials of the given calculus.
    pub fn e3_position(calculus: Calculus, side: Side, index: EIdx) -> Self {
        let alg = Algebra::euclid3(Sector::Position, calculus.orientation());
        DerivativeAction {
            alg,
            kind: ActionKind::E3Position { index },
            side,
            calculus,
            im_weight: QScalar::one(),
            a_weight: QScalar::one(),
        }
    }

    /// Pairing-derived ∂_p^B (upper index) on 3D momentum monomials.
    pub fn e3_momentum(calculus: Calculus, side: Side, index: EIdx) -> Self {
        let alg = Algebra::euclid3(Sector::Momentum, calculus.orientation());
        DerivativeAction {
            alg,
            kind: ActionKind::E3Momentum { index },
            side,
            calculus,
            im_weight: QScalar::one(),
            a_weight: QScalar::one(),
        }
    }

    pub fn with_weights(mut self, im_weight: QScalar, a_weight: QScalar) -> Self {
        self.im_weight = im_weight;
        self.a_weight = a_weight;
        self
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Image of a single monomial.
    pub fn apply_monomial(&self, m: &Monomial) -> Vec<(Monomial, QScalar)> {
        let weight = &self
            .im_weight
            .pow(m.im)
            .expect("nonzero weight")
            * &self.a_weight.pow(m.a).expect("nonzero weight");
        let side_sign = match self.side {
            Side::Left => QScalar::one(),
            Side::Right => -&QScalar::one(),
        };
        let pref = &weight * &side_sign;
        match &self.kind {
            ActionKind::Time => {
                if m.t == 0 {
                    return vec![];
                }
                let mut out = *m;
                out.t -= 1;
                vec![(out, &pref * &QScalar::from_int(m.t))]
            }
            ActionKind::LineSpace { grading_twist } => {
                let n = m.g[0];
                if n == 0 {
                    return vec![];
                }
                let base = self.calculus.base_sign();
                let mut c = qnum(n, base);
                if *grading_twist != 0 {
                    c = &c * &QScalar::q_pow(grading_twist * (n - 1));
                }
                let mut out = *m;
                out.g[0] = n - 1;
                vec![(out, &pref * &c)]
            }
            ActionKind::E3Position { index } => {
                let bases = self.bases();
                let n = m.g;
                let deg: i64 = n.iter().sum();
                if deg == 0 {
                    return vec![];
                }
                let mom_alg = Algebra::euclid3(Sector::Momentum, self.calculus.orientation());
                let p_gen = NcElement::gen_pow(&mom_alg, index.momentum_gen(), 1);
                let b_n = Monomial {
                    g: [n[2], n[1], n[0]],
                    ..Monomial::ONE
                };
                let mut out = Vec::new();
                for cand in tuples_of_degree(deg - 1) {
                    let b_m = NcElement::from_monomial(
                        &mom_alg,
                        Monomial {
                            g: [cand[2], cand[1], cand[0]],
                            ..Monomial::ONE
                        },
                        &QScalar::one(),
                    );
                    let prod = match self.side {
                        Side::Left => b_m.star(&p_gen).expect("same algebra"),
                        Side::Right => p_gen.star(&b_m).expect("same algebra"),
                    };
                    let s = prod.coeff(&b_n);
                    if s.is_zero() {
                        continue;
                    }
                    let ratio = coeff_ratio(&cand, &n, &bases);
                    let mut target = *m;
                    target.g = cand;
                    out.push((target, &(&pref * &ratio) * &s));
                }
                out
            }
            ActionKind::E3Momentum { index } => {
                let bases = self.bases();
                // paired position tuple of this momentum monomial
                let np = [m.g[2], m.g[1], m.g[0]];
                let deg: i64 = np.iter().sum();
                if deg == 0 {
                    return vec![];
                }
                // The conjugate pairing raises the right action's index with
                // the transposed metric; convert to the g^{AB}∂_B convention
                // the displayed table uses.
                let pref = match self.side {
                    Side::Left => pref,
                    Side::Right => {
                        let (gpm, gmp, _) = self.alg.metric();
                        let ratio = match index {
                            EIdx::Plus => &gpm * &gmp.inv().expect("metric entry"),
                            EIdx::Three => QScalar::one(),
                            EIdx::Minus => &gmp * &gpm.inv().expect("metric entry"),
                        };
                        &pref * &ratio
                    }
                };
                let pos_alg = Algebra::euclid3(Sector::Position, self.calculus.orientation());
                let x_gen = NcElement::gen_pow(&pos_alg, index.position_gen(), 1);
                let x_np = Monomial {
                    g: np,
                    ..Monomial::ONE
                };
                let mut out = Vec::new();
                for cand in tuples_of_degree(deg - 1) {
                    let x_n = NcElement::from_monomial(
                        &pos_alg,
                        Monomial {
                            g: cand,
                            ..Monomial::ONE
                        },
                        &QScalar::one(),
                    );
                    let prod = match self.side {
                        Side::Left => x_gen.star(&x_n).expect("same algebra"),
                        Side::Right => x_n.star(&x_gen).expect("same algebra"),
                    };
                    let u = prod.coeff(&x_np);
                    if u.is_zero() {
                        continue;
                    }
                    let ratio = coeff_ratio(&cand, &np, &bases);
                    let mut target = *m;
                    target.g = [cand[2], cand[1], cand[0]];
                    out.push((target, &(&pref * &ratio) * &u));
                }
                out
            }
        }
    }

    /// Applies the action to every term of an element.
    pub fn apply(&self, e: &NcElement) -> NcElement {
        assert_eq!(*e.algebra(), self.alg, "action/algebra mismatch");
        let mut out = NcElement::zero(&self.alg);
        for (m, c) in e.terms() {
            for (m2, c2) in self.apply_monomial(m) {
                out = out.add(&NcElement::from_monomial(&self.alg, m2, &(c * &c2)));
            }
        }
        out
    }

    /// Per-slot bracket bases of the plane-wave factorial coefficients.
    fn bases(&self) -> [i64; 3] {
        let s = self.calculus.base_sign();
        [4 * s, 2 * s, 4 * s]
    }
}

/// 1/∏[[n_i]]_{q^{b_i}}! ratio: coeff_m / coeff_n = ∏ [[n_i]]!/[[m_i]]!.
fn coeff_ratio(m: &[i64; 3], n: &[i64; 3], bases: &[i64; 3]) -> QScalar {
    let mut acc = QScalar::one();
    for i in 0..3 {
        let num = qfactorial(n[i] as u32, bases[i]);
        let den = qfactorial(m[i] as u32, bases[i]);
        acc = &acc * &(&num * &den.inv().expect("nonzero q-factorial"));
    }
    acc
}

fn tuples_of_degree(d: i64) -> Vec<[i64; 3]> {
    let mut v = Vec::new();
    if d < 0 {
        return v;
    }
    for a in 0..=d {
        for b in 0..=(d - a) {
            v.push([a, b, d - a - b]);
        }
    }
    v
}

/// The WirParHam table: applies the derivative to p² and attaches (2m)⁻¹.
/// Line: the single ∂¹; 3D: the raised-index ∂^A for the given index.
pub fn act_on_p2(space: Space, calculus: Calculus, side: Side, index: Option<EIdx>) -> NcElement {
    match space {
        Space::Line => {
            let alg = Algebra::line(Sector::Momentum);
            let action = DerivativeAction::line(&alg, calculus, side);
            let p2 = crate::ncalg::p_squared(&alg);
            attach_inv2m(&action.apply(&p2))
        }
        Space::Euclid3 => {
            let idx = index.expect("3D act_on_p2 needs an index");
            let alg = Algebra::euclid3(Sector::Momentum, calculus.orientation());
            let action = DerivativeAction::e3_momentum(calculus, side, idx);
            let p2 = crate::ncalg::p_squared(&alg);
            attach_inv2m(&action.apply(&p2))
        }
    }
}

fn attach_inv2m(e: &NcElement) -> NcElement {
    let im = NcElement::gen_pow(e.algebra(), Gen::Inv2m, 1);
    e.star(&im).expect("central symbol")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::p_squared;
    use crate::qfield::GaussRat;

    #[test]
    fn line_left_actions() {
        let alg = Algebra::line(Sector::Position);
        let d = DerivativeAction::line(&alg, Calculus::Unhatted, Side::Left);
        // ∂ ▷ 1 = 0
        assert!(d.apply(&NcElement::one(&alg)).is_zero());
        // ∂ ▷ x³ = [[3]]_q x²
        let x3 = NcElement::gen_pow(&alg, Gen::X1, 3);
        let expect = NcElement::gen_pow(&alg, Gen::X1, 2).scale(&qnum(3, 1));
        assert_eq!(d.apply(&x3), expect);
        // ∂ ▷ x⁻² = [[−2]]_q x⁻³, with classical limit −2x⁻³
        let xm2 = NcElement::gen_pow(&alg, Gen::X1, -2);
        let img = d.apply(&xm2);
        let coeff = img.coeff(&Monomial {
            g: [-3, 0, 0],
            ..Monomial::ONE
        });
        assert_eq!(coeff, qnum(-2, 1));
        assert_eq!(coeff.limit_q_to_1().unwrap(), GaussRat::from_int(-2));
    }

    #[test]
    fn line_hatted_and_right() {
        let alg = Algebra::line(Sector::Position);
        let dh = DerivativeAction::line(&alg, Calculus::Hatted, Side::Left);
        let x2 = NcElement::gen_pow(&alg, Gen::X1, 2);
        assert_eq!(
            dh.apply(&x2),
            NcElement::gen_pow(&alg, Gen::X1, 1).scale(&qnum(2, -1))
        );
        let dr = DerivativeAction::line(&alg, Calculus::Unhatted, Side::Right);
        assert_eq!(
            dr.apply(&x2),
            NcElement::gen_pow(&alg, Gen::X1, 1).scale(&(-&qnum(2, 1)))
        );
    }

    #[test]
    fn time_action() {
        let alg = Algebra::line(Sector::Position);
        let t2 = NcElement::gen_pow(&alg, Gen::T, 2);
        let dl = DerivativeAction::time(&alg, Side::Left);
        let dr = DerivativeAction::time(&alg, Side::Right);
        let t1 = NcElement::gen_pow(&alg, Gen::T, 1);
        assert_eq!(dl.apply(&t2), t1.scale(&QScalar::from_int(2)));
        assert_eq!(dr.apply(&t2), t1.scale(&QScalar::from_int(-2)));
        assert!(dl.apply(&NcElement::one(&alg)).is_zero());
    }

    #[test]
    fn e3_position_degree_one_is_kronecker() {
        // ∂_A ▷ x^B = δ_A^B on degree-1 monomials (∝ g^{AB} after raising)
        for index in EIdx::ALL {
            let d = DerivativeAction::e3_position(Calculus::Unhatted, Side::Left, index);
            let alg = *d.algebra();
            for g in [Gen::XPlus, Gen::X3, Gen::XMinus] {
                let x = NcElement::gen_pow(&alg, g, 1);
                let img = d.apply(&x);
                if g == index.position_gen() {
                    assert_eq!(img, NcElement::one(&alg), "∂_{index:?} on {g}");
                } else {
                    assert!(img.is_zero(), "∂_{index:?} on {g}");
                }
            }
        }
    }

    #[test]
    fn e3_actions_lower_degree_and_are_linear() {
        let d = DerivativeAction::e3_position(Calculus::Unhatted, Side::Left, EIdx::Minus);
        let alg = *d.algebra();
        let e = NcElement::word(
            &alg,
            &[(Gen::XPlus, 1), (Gen::X3, 2), (Gen::XMinus, 1)],
            &QScalar::lambda_plus(),
        )
        .unwrap();
        let img = d.apply(&e);
        for (m, _) in img.terms() {
            assert_eq!(m.gen_degree(), 3);
        }
        // linearity: action of a sum = sum of actions
        let f = NcElement::gen_pow(&alg, Gen::X3, 4);
        let lhs = d.apply(&e.add(&f));
        let rhs = d.apply(&e).add(&d.apply(&f));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wirparham_line_values() {
        // ∂¹ ▷ P²(2m)⁻¹ = [[2]]_q P¹(2m)⁻¹ and companions
        let alg = Algebra::line(Sector::Momentum);
        let p_im = |c: &QScalar| {
            let p = NcElement::gen_pow(&alg, Gen::P1, 1);
            attach_inv2m(&p).scale(c)
        };
        assert_eq!(
            act_on_p2(Space::Line, Calculus::Unhatted, Side::Left, None),
            p_im(&qnum(2, 1))
        );
        assert_eq!(
            act_on_p2(Space::Line, Calculus::Hatted, Side::Left, None),
            p_im(&qnum(2, -1))
        );
        assert_eq!(
            act_on_p2(Space::Line, Calculus::Hatted, Side::Right, None),
            p_im(&(-&qnum(2, -1)))
        );
        assert_eq!(
            act_on_p2(Space::Line, Calculus::Unhatted, Side::Right, None),
            p_im(&(-&qnum(2, 1)))
        );
    }

    #[test]
    fn wirparham_euclid3_values() {
        // ∂^A ▷ P²(2m)⁻¹ = [[2]]_{q^{−2}} P^A (2m)⁻¹ with P^A = g^{AB}P_B,
        // hatted [[2]]_{q^{2}}, right actions with minus signs.
        for (calculus, side, bracket_base, sign) in [
            (Calculus::Unhatted, Side::Left, -2i64, 1i64),
            (Calculus::Hatted, Side::Left, 2, 1),
            (Calculus::Hatted, Side::Right, 2, -1),
            (Calculus::Unhatted, Side::Right, -2, -1),
        ] {
            let alg = Algebra::euclid3(Sector::Momentum, calculus.orientation());
            let (gpm, gmp, g33) = alg.metric();
            let bracket = qnum(2, bracket_base);
            let s = QScalar::from_int(sign);
            for (idx, metric_entry, gen) in [
                (EIdx::Plus, &gpm, Gen::PMinus),
                (EIdx::Three, &g33, Gen::P3),
                (EIdx::Minus, &gmp, Gen::PPlus),
            ] {
                let got = act_on_p2(Space::Euclid3, calculus, side, Some(idx));
                let expect = attach_inv2m(&NcElement::gen_pow(&alg, gen, 1))
                    .scale(&(&(&bracket * metric_entry) * &s));
                assert_eq!(got, expect, "{calculus:?} {side:?} {idx:?}");
            }
        }
    }

    #[test]
    fn classical_limits_of_e3_actions() {
        // q→1 of ∂_A on x⁺x³ equals the classical partial action
        let d = DerivativeAction::e3_position(Calculus::Unhatted, Side::Left, EIdx::Plus);
        let alg = *d.algebra();
        let e = NcElement::word(&alg, &[(Gen::XPlus, 1), (Gen::X3, 1)], &QScalar::one()).unwrap();
        let img = d.apply(&e);
        // classically ∂₊(x⁺x³) = x³
        let x3 = Monomial {
            g: [0, 1, 0],
            ..Monomial::ONE
        };
        assert_eq!(img.coeff(&x3).limit_q_to_1().unwrap(), GaussRat::from_int(1));
        for (m, c) in img.terms() {
            if *m != x3 {
                assert_eq!(c.limit_q_to_1().unwrap(), GaussRat::zero());
            }
        }
    }

    #[test]
    fn hatted_action_mirrors_unhatted() {
        // the hatted table is the q↔q⁻¹ mirror of the unhatted one
        let du = DerivativeAction::e3_position(Calculus::Unhatted, Side::Left, EIdx::Three);
        let dh = DerivativeAction::e3_position(Calculus::Hatted, Side::Left, EIdx::Three);
        let alg_u = *du.algebra();
        let e = NcElement::word(&alg_u, &[(Gen::X3, 2)], &QScalar::one()).unwrap();
        let img_u = du.apply(&e);
        let img_h = dh.apply(&e.mirror());
        assert_eq!(img_u.mirror(), img_h);
    }

    #[test]
    fn p2_is_killed_consistently() {
        // sanity: applying ∂^3 twice to p² lands in degree 0
        let d = DerivativeAction::e3_momentum(Calculus::Unhatted, Side::Left, EIdx::Three);
        let alg = *d.algebra();
        let img = d.apply(&d.apply(&p_squared(&alg)));
        for (m, _) in img.terms() {
            assert_eq!(m.gen_degree(), 0);
        }
        assert!(!img.is_zero());
    }
}
