//! Truncated q-plane waves in all four geometries and their residual checks.

mod euclid;
mod line;
mod phase;
mod residual;

pub use euclid::{onshell_substitute, plane_wave_3d_closed, plane_wave_3d_offshell};
pub use line::{inverse_wave_line, plane_wave_line};
pub use phase::{factorization_check, phase_cancellation, phase_factor, Direction, PhaseFactor};
pub use residual::{eigen_residual, schrodinger_residual, Observable};

use crate::ncalg::{Algebra, Monomial, NcElement, Orientation, Sector, Space};
use crate::qcalc::{Calculus, DerivativeAction};
use crate::qfield::QScalar;
use std::collections::BTreeMap;
use std::fmt;

/// Which of the four wave families: calculus pair × conjugation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GeometrySpec {
    pub space: Space,
    pub calculus: Calculus,
    pub conjugate: bool,
}

impl GeometrySpec {
    pub fn new(space: Space, calculus: Calculus, conjugate: bool) -> Self {
        GeometrySpec {
            space,
            calculus,
            conjugate,
        }
    }

    pub fn all(space: Space) -> [GeometrySpec; 4] {
        [
            GeometrySpec::new(space, Calculus::Unhatted, false),
            GeometrySpec::new(space, Calculus::Hatted, false),
            GeometrySpec::new(space, Calculus::Unhatted, true),
            GeometrySpec::new(space, Calculus::Hatted, true),
        ]
    }

    /// ζ: −1 on the line, +2 in three dimensions.
    pub fn zeta(&self) -> i64 {
        match self.space {
            Space::Line => -1,
            Space::Euclid3 => 2,
        }
    }

    pub fn position_algebra(&self) -> Algebra {
        match self.space {
            Space::Line => Algebra::line(Sector::Position),
            Space::Euclid3 => Algebra::euclid3(Sector::Position, self.orientation()),
        }
    }

    pub fn momentum_algebra(&self) -> Algebra {
        match self.space {
            Space::Line => Algebra::line(Sector::Momentum),
            Space::Euclid3 => Algebra::euclid3(Sector::Momentum, self.orientation()),
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.calculus.orientation()
    }

    /// Swap the two calculi (the geometry mirror); an involution.
    pub fn mirrored(&self) -> Self {
        let calculus = match self.calculus {
            Calculus::Unhatted => Calculus::Hatted,
            Calculus::Hatted => Calculus::Unhatted,
        };
        GeometrySpec {
            calculus,
            ..*self
        }
    }

    pub fn label(&self) -> String {
        format!(
            "{}{}",
            self.calculus.label(),
            if self.conjugate { " conj" } else { "" }
        )
    }
}

/// Position-factor exponents: time plus the coordinates in the geometry's
/// slot order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct PosMono {
    pub t: i64,
    pub x: [i64; 3],
}

impl PosMono {
    pub const ONE: PosMono = PosMono { t: 0, x: [0, 0, 0] };

    pub fn degree(&self) -> i64 {
        self.x.iter().sum()
    }
}

/// Momentum-factor exponents in the geometry's slot order, with the
/// (2m)⁻¹ grade.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct MomMono {
    pub p: [i64; 3],
    pub im: i64,
}

impl MomMono {
    pub const ONE: MomMono = MomMono {
        p: [0, 0, 0],
        im: 0,
    };

    pub fn degree(&self) -> i64 {
        self.p.iter().sum()
    }
}

/// A truncated plane-wave object: finite map from (position monomial,
/// momentum monomial) pairs to scalars. Conjugate series are bookkept with
/// momentum factors standing left of position factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSeries {
    pub geom: GeometrySpec,
    pub n_max: i64,
    pub k_max: i64,
    terms: BTreeMap<(PosMono, MomMono), QScalar>,
}

impl TensorSeries {
    pub fn zero(geom: GeometrySpec, n_max: i64, k_max: i64) -> Self {
        TensorSeries {
            geom,
            n_max,
            k_max,
            terms: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, pos: PosMono, mom: MomMono, c: QScalar) {
        if c.is_zero() {
            return;
        }
        let key = (pos, mom);
        let entry = self.terms.entry(key).or_insert_with(QScalar::zero);
        let sum = &*entry + &c;
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            *entry = sum;
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PosMono, MomMono), &QScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, pos: &PosMono, mom: &MomMono) -> QScalar {
        self.terms
            .get(&(*pos, *mom))
            .cloned()
            .unwrap_or_else(QScalar::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((p, m), c) in &rhs.terms {
            out.insert(*p, *m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&(-&QScalar::one())))
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut out = Self::zero(self.geom, self.n_max, self.k_max);
        for ((p, m), v) in &self.terms {
            out.insert(*p, *m, v * c);
        }
        out
    }

    /// Applies a derivative action to the position/time factor of each term.
    pub fn apply_position_action(&self, action: &DerivativeAction) -> Self {
        assert_eq!(
            *action.algebra(),
            self.geom.position_algebra(),
            "action acts on the wrong algebra"
        );
        let mut out = Self::zero(self.geom, self.n_max, self.k_max);
        for ((pos, mom), c) in &self.terms {
            let m = Monomial {
                g: pos.x,
                t: pos.t,
                im: 0,
                a: 0,
            };
            for (m2, c2) in action.apply_monomial(&m) {
                let pos2 = PosMono { t: m2.t, x: m2.g };
                out.insert(pos2, *mom, c * &c2);
            }
        }
        out
    }

    /// Momentum factor star-multiplied from the right by `e`.
    pub fn mom_star_right(&self, e: &NcElement) -> Self {
        self.mom_star(e, false)
    }

    /// Momentum factor star-multiplied from the left by `e`.
    pub fn mom_star_left(&self, e: &NcElement) -> Self {
        self.mom_star(e, true)
    }

    fn mom_star(&self, e: &NcElement, left: bool) -> Self {
        let alg = self.geom.momentum_algebra();
        assert_eq!(*e.algebra(), alg, "momentum algebra mismatch");
        let mut out = Self::zero(self.geom, self.n_max, self.k_max);
        for ((pos, mom), c) in &self.terms {
            let f = NcElement::from_monomial(
                &alg,
                Monomial {
                    g: mom.p,
                    t: 0,
                    im: mom.im,
                    a: 0,
                },
                &QScalar::one(),
            );
            let prod = if left {
                e.star(&f).expect("same algebra")
            } else {
                f.star(e).expect("same algebra")
            };
            for (m2, c2) in prod.terms() {
                let mom2 = MomMono {
                    p: m2.g,
                    im: m2.im,
                };
                out.insert(*pos, mom2, c * c2);
            }
        }
        out
    }

    /// Applies a linear monomial map to the momentum factor.
    pub fn mom_map<F>(&self, f: F) -> Self
    where
        F: Fn(&MomMono) -> Vec<(MomMono, QScalar)>,
    {
        let mut out = Self::zero(self.geom, self.n_max, self.k_max);
        for ((pos, mom), c) in &self.terms {
            for (m2, c2) in f(mom) {
                out.insert(*pos, m2, c * &c2);
            }
        }
        out
    }

    /// t ↦ s·t reparametrization: scales each term by s^{t-exponent}.
    pub fn time_rescale(&self, s: &QScalar) -> Self {
        let mut out = Self::zero(self.geom, self.n_max, self.k_max);
        for ((pos, mom), c) in &self.terms {
            out.insert(*pos, *mom, &s.pow(pos.t).expect("nonzero scale") * c);
        }
        out
    }

    /// The x⁰ = 0 slice.
    pub fn slice_t0(&self) -> Self {
        let mut out = Self::zero(self.geom, self.n_max, 0);
        for ((pos, mom), c) in &self.terms {
            if pos.t == 0 {
                out.insert(*pos, *mom, c.clone());
            }
        }
        out
    }

    /// Geometry mirror: coefficients under q ↦ q⁻¹, calculus tag flipped;
    /// exponent slots keep their positions (their generator roles flip with
    /// the orientation).
    pub fn mirror(&self) -> Self {
        let mut out = Self::zero(self.geom.mirrored(), self.n_max, self.k_max);
        for ((pos, mom), c) in &self.terms {
            out.insert(*pos, *mom, c.substitute_q_inverse());
        }
        out
    }

    /// Complex conjugation of the series (line bookkeeping: toggles the
    /// conjugate flag, conjugates coefficients; generators self-conjugate).
    pub fn conjugate(&self) -> Self {
        assert_eq!(self.geom.space, Space::Line, "3D conjugation is out of scope");
        let geom = GeometrySpec {
            conjugate: !self.geom.conjugate,
            ..self.geom
        };
        let mut out = Self::zero(geom, self.n_max, self.k_max);
        for ((pos, mom), c) in &self.terms {
            out.insert(*pos, *mom, c.conjugate());
        }
        out
    }

    /// Restricts to terms with position degree ≤ n and time degree ≤ k.
    pub fn truncate(&self, n: i64, k: i64) -> Self {
        let mut out = Self::zero(self.geom, n.min(self.n_max), k.min(self.k_max));
        for ((pos, mom), c) in &self.terms {
            if pos.degree() <= n && pos.t <= k {
                out.insert(*pos, *mom, c.clone());
            }
        }
        out
    }

    /// True when no term has position degree ≤ n and time degree ≤ k
    /// (emptiness strictly below the truncation boundary).
    pub fn empty_below(&self, n: i64, k: i64) -> bool {
        self.terms
            .keys()
            .all(|(pos, _)| pos.degree() > n || pos.t > k)
    }

    /// A term violating `empty_below`, if any, rendered for reports.
    pub fn witness_below(&self, n: i64, k: i64) -> Option<String> {
        self.terms
            .iter()
            .find(|((pos, _), _)| pos.degree() <= n && pos.t <= k)
            .map(|((pos, mom), c)| format!("{} at {}", c, format_pair(&self.geom, pos, mom)))
    }
}

fn format_pair(geom: &GeometrySpec, pos: &PosMono, mom: &MomMono) -> String {
    let pos_alg = geom.position_algebra();
    let mom_alg = geom.momentum_algebra();
    let pos_el = NcElement::from_monomial(
        &pos_alg,
        Monomial {
            g: pos.x,
            t: pos.t,
            im: 0,
            a: 0,
        },
        &QScalar::one(),
    );
    let mom_el = NcElement::from_monomial(
        &mom_alg,
        Monomial {
            g: mom.p,
            t: 0,
            im: mom.im,
            a: 0,
        },
        &QScalar::one(),
    );
    let pos_text = pos_el.monomial_text(&Monomial {
        g: pos.x,
        t: pos.t,
        im: 0,
        a: 0,
    });
    let mom_text = mom_el.monomial_text(&Monomial {
        g: mom.p,
        t: 0,
        im: mom.im,
        a: 0,
    });
    if geom.conjugate {
        format!("{mom_text} ⊗ {pos_text}")
    } else {
        format!("{pos_text} ⊗ {mom_text}")
    }
}

impl fmt::Display for TensorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((pos, mom), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{} {}", c, format_pair(&self.geom, pos, mom))?;
            first = false;
        }
        Ok(())
    }
}
