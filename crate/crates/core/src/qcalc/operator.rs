//! Exact linear operators on truncated monomial basis windows.
//!
//! Windows are finite monomial sets; operators are sparse exact matrices.
//! An operator column is marked `escaped` when some image term fell outside
//! the window; identity checks compare columns only where neither side
//! escaped (the window interior), which is the truncation contract.

use super::action::DerivativeAction;
use crate::ncalg::{Algebra, Monomial, NcElement};
use crate::qfield::QScalar;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Window {
    alg: Algebra,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Window {
    /// Line window: coordinate exponents in [g_lo, g_hi], symbol grades in
    /// [0, im_max] × [0, a_max].
    pub fn line(alg: &Algebra, g_lo: i64, g_hi: i64, im_max: i64, a_max: i64) -> Arc<Window> {
        assert!(alg.rank() == 1);
        let mut basis = Vec::new();
        for g in g_lo..=g_hi {
            for im in 0..=im_max {
                for a in 0..=a_max {
                    basis.push(Monomial {
                        g: [g, 0, 0],
                        t: 0,
                        im,
                        a,
                    });
                }
            }
        }
        Self::build(alg, basis)
    }

    /// 3D window: all monomials of total degree ≤ deg_max with bounded
    /// symbol grades.
    pub fn euclid3(alg: &Algebra, deg_max: i64, im_max: i64, a_max: i64) -> Arc<Window> {
        assert!(alg.rank() == 3);
        let mut basis = Vec::new();
        for d in 0..=deg_max {
            for e0 in 0..=d {
                for e1 in 0..=(d - e0) {
                    let e2 = d - e0 - e1;
                    for im in 0..=im_max {
                        for a in 0..=a_max {
                            basis.push(Monomial {
                                g: [e0, e1, e2],
                                t: 0,
                                im,
                                a,
                            });
                        }
                    }
                }
            }
        }
        Self::build(alg, basis)
    }

    fn build(alg: &Algebra, basis: Vec<Monomial>) -> Arc<Window> {
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (*m, i))
            .collect::<HashMap<_, _>>();
        Arc::new(Window {
            alg: *alg,
            basis,
            index,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Sparse column: image of one basis monomial.
#[derive(Clone, Debug, Default)]
struct Column {
    entries: Vec<(usize, QScalar)>,
    escaped: bool,
}

#[derive(Clone, Debug)]
pub struct LinearOperator {
    window: Arc<Window>,
    cols: Vec<Column>,
}

impl LinearOperator {
    pub fn zero(window: &Arc<Window>) -> Self {
        LinearOperator {
            window: window.clone(),
            cols: vec![Column::default(); window.dim()],
        }
    }

    pub fn identity(window: &Arc<Window>) -> Self {
        let mut op = Self::zero(window);
        for (j, col) in op.cols.iter_mut().enumerate() {
            col.entries.push((j, QScalar::one()));
        }
        op
    }

    pub fn window(&self) -> &Arc<Window> {
        &self.window
    }

    /// Operator from a map on monomials given as a closure returning the
    /// image terms.
    pub fn from_map<F>(window: &Arc<Window>, f: F) -> Self
    where
        F: Fn(&Monomial) -> Vec<(Monomial, QScalar)>,
    {
        let mut op = Self::zero(window);
        for (j, m) in window.basis().iter().enumerate() {
            let mut col = Column::default();
            for (m2, c) in f(m) {
                if c.is_zero() {
                    continue;
                }
                match window.index_of(&m2) {
                    Some(i) => col.entries.push((i, c)),
                    None => col.escaped = true,
                }
            }
            col.entries.sort_by_key(|(i, _)| *i);
            op.cols[j] = col;
        }
        op
    }

    /// Operator realizing a derivative action.
    pub fn from_action(window: &Arc<Window>, action: &DerivativeAction) -> Self {
        assert_eq!(window.algebra(), action.algebra());
        Self::from_map(window, |m| action.apply_monomial(m))
    }

    /// Left star-multiplication f ↦ e ⊛ f.
    pub fn from_mult_left(window: &Arc<Window>, e: &NcElement) -> Self {
        let alg = *window.algebra();
        Self::from_map(window, move |m| {
            let f = NcElement::from_monomial(&alg, *m, &QScalar::one());
            e.star(&f)
                .expect("same algebra")
                .terms()
                .map(|(m2, c)| (*m2, c.clone()))
                .collect()
        })
    }

    /// Right star-multiplication f ↦ f ⊛ e.
    pub fn from_mult_right(window: &Arc<Window>, e: &NcElement) -> Self {
        let alg = *window.algebra();
        Self::from_map(window, move |m| {
            let f = NcElement::from_monomial(&alg, *m, &QScalar::one());
            f.star(e)
                .expect("same algebra")
                .terms()
                .map(|(m2, c)| (*m2, c.clone()))
                .collect()
        })
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut out = self.clone();
        for col in &mut out.cols {
            for (_, v) in &mut col.entries {
                *v = &*v * c;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert!(Arc::ptr_eq(&self.window, &rhs.window), "window mismatch");
        let mut out = Self::zero(&self.window);
        for j in 0..self.cols.len() {
            let mut acc: HashMap<usize, QScalar> = HashMap::new();
            for (i, c) in self.cols[j].entries.iter().chain(&rhs.cols[j].entries) {
                let e = acc.entry(*i).or_insert_with(QScalar::zero);
                *e = &*e + c;
            }
            let mut entries: Vec<(usize, QScalar)> =
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            entries.sort_by_key(|(i, _)| *i);
            out.cols[j] = Column {
                entries,
                escaped: self.cols[j].escaped || rhs.cols[j].escaped,
            };
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&(-&QScalar::one())))
    }

    /// self ∘ rhs (apply rhs first).
    pub fn compose(&self, rhs: &Self) -> Self {
        assert!(Arc::ptr_eq(&self.window, &rhs.window), "window mismatch");
        let mut out = Self::zero(&self.window);
        for j in 0..rhs.cols.len() {
            let mut escaped = rhs.cols[j].escaped;
            let mut acc: HashMap<usize, QScalar> = HashMap::new();
            for (k, c) in &rhs.cols[j].entries {
                let col = &self.cols[*k];
                escaped |= col.escaped;
                for (i, v) in &col.entries {
                    let e = acc.entry(*i).or_insert_with(QScalar::zero);
                    *e = &*e + &(c * v);
                }
            }
            let mut entries: Vec<(usize, QScalar)> =
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            entries.sort_by_key(|(i, _)| *i);
            out.cols[j] = Column { entries, escaped };
        }
        out
    }

    /// compose(self, rhs) − compose(rhs, self).
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.compose(rhs).sub(&rhs.compose(self))
    }

    pub fn apply_element(&self, e: &NcElement) -> Option<NcElement> {
        let alg = *self.window.algebra();
        let mut out = NcElement::zero(&alg);
        for (m, c) in e.terms() {
            let j = self.window.index_of(m)?;
            if self.cols[j].escaped {
                return None;
            }
            for (i, v) in &self.cols[j].entries {
                out = out.add(&NcElement::from_monomial(
                    &alg,
                    self.window.basis()[*i],
                    &(c * v),
                ));
            }
        }
        Some(out)
    }

    /// Columns where this operator is exact (no image term escaped).
    pub fn interior(&self) -> Vec<usize> {
        (0..self.cols.len())
            .filter(|&j| !self.cols[j].escaped)
            .collect()
    }

    /// First difference against `rhs` on columns where both are exact.
    /// `None` means the operators agree on the common interior.
    pub fn first_mismatch(&self, rhs: &Self) -> Option<OperatorMismatch> {
        assert!(Arc::ptr_eq(&self.window, &rhs.window), "window mismatch");
        for j in 0..self.cols.len() {
            if self.cols[j].escaped || rhs.cols[j].escaped {
                continue;
            }
            let a: HashMap<usize, QScalar> = self.cols[j].entries.iter().cloned().collect();
            let b: HashMap<usize, QScalar> = rhs.cols[j].entries.iter().cloned().collect();
            for i in a.keys().chain(b.keys()) {
                let va = a.get(i).cloned().unwrap_or_else(QScalar::zero);
                let vb = b.get(i).cloned().unwrap_or_else(QScalar::zero);
                if va != vb {
                    return Some(OperatorMismatch {
                        source: self.window.basis()[j],
                        target: self.window.basis()[*i],
                        lhs: va,
                        rhs: vb,
                    });
                }
            }
        }
        None
    }

    /// True when every non-escaped column is zero.
    pub fn is_zero_on_interior(&self) -> bool {
        self.cols
            .iter()
            .all(|c| c.escaped || c.entries.is_empty())
    }

    /// Count of interior columns (diagnostic: an identity verified on an
    /// empty interior is vacuous).
    pub fn interior_size(&self) -> usize {
        self.cols.iter().filter(|c| !c.escaped).count()
    }
}

#[derive(Clone, Debug)]
pub struct OperatorMismatch {
    pub source: Monomial,
    pub target: Monomial,
    pub lhs: QScalar,
    pub rhs: QScalar,
}

impl fmt::Display for OperatorMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "on {:?} at {:?}: {} vs {}",
            self.source, self.target, self.lhs, self.rhs
        )
    }
}
