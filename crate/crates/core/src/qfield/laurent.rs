//! Laurent polynomials in q over the Gaussian rationals.

use super::gauss::GaussRat;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial Σ c_k q^k with Gaussian-rational coefficients.
/// Invariant: no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    pub(crate) coeffs: BTreeMap<i64, GaussRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(GaussRat::one(), 0)
    }

    pub fn monomial(c: GaussRat, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map(GaussRat::is_one).unwrap_or(false)
    }

    pub fn coeff(&self, k: i64) -> GaussRat {
        self.coeffs.get(&k).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn insert_term(&mut self, k: i64, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(GaussRat::zero);
        let sum = &*entry + &c;
        if sum.is_zero() {
            self.coeffs.remove(&k);
        } else {
            *entry = sum;
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.insert_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                out.insert_term(ka + kb, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    /// Substitute q ↦ q⁻¹.
    pub fn invert_q(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Coefficientwise complex conjugation (q is fixed).
    pub fn conj(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }

    /// Evaluate at an exact rational point.
    pub fn eval_rat(&self, q0: &BigRational) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (k, c) in &self.coeffs {
            let mut p = BigRational::from_integer(1.into());
            let e = k.unsigned_abs();
            for _ in 0..e {
                p *= q0;
            }
            let p = if *k < 0 { p.recip() } else { p };
            acc = &acc + &(c * &GaussRat::from_big(p));
        }
        acc
    }

    /// Evaluate at a real double.
    pub fn eval_f64(&self, q0: f64) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in &self.coeffs {
            let p = q0.powi(*k as i32);
            let (cr, ci) = c.to_f64_pair();
            re += cr * p;
            im += ci * p;
        }
        (re, im)
    }

    /// True division assuming `self = q·rhs` exactly for some polynomial q
    /// (both shifted to ordinary polynomials). Panics if not divisible.
    pub(crate) fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        assert!(r.is_zero(), "non-exact Laurent division");
        q
    }

    /// Polynomial division with remainder after normalizing both operands to
    /// ordinary polynomials (lowest degree 0); the q-unit is tracked exactly.
    pub(crate) fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return (LaurentPoly::zero(), LaurentPoly::zero());
        }
        let a_shift = self.min_deg().unwrap();
        let b_shift = rhs.min_deg().unwrap();
        let mut rem = self.shift(-a_shift);
        let b = rhs.shift(-b_shift);
        let b_deg = b.max_deg().unwrap();
        let b_lead = b.coeff(b_deg);
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() && rem.max_deg().unwrap() >= b_deg {
            let r_deg = rem.max_deg().unwrap();
            let factor = &rem.coeff(r_deg) / &b_lead;
            let k = r_deg - b_deg;
            quot.insert_term(k, factor.clone());
            let sub = b.shift(k).scale(&factor);
            rem = rem.sub(&sub);
        }
        // Restore the q-units: self = q^{a_shift}(quot·b + rem), b = q^{-b_shift}·rhs.
        (quot.shift(a_shift - b_shift), rem.shift(a_shift))
    }

    /// Monic-normalized gcd of the polynomial parts (q-units stripped).
    pub(crate) fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.normalized_poly();
        }
        if rhs.is_zero() {
            return self.normalized_poly();
        }
        let mut a = self.normalized_poly();
        let mut b = rhs.normalized_poly();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.normalized_poly();
        }
        a
    }

    /// Shift to an ordinary polynomial with nonzero constant term and
    /// unit lowest coefficient.
    pub(crate) fn normalized_poly(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let shifted = self.shift(-self.min_deg().unwrap());
        let low = shifted.coeff(0);
        shifted.scale(&low.inv())
    }

    /// Multiplicity of the root q = 1.
    pub(crate) fn order_at_one(&self) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let one = BigRational::from_integer(1.into());
        let mut p = self.clone();
        let mut n = 0;
        while p.eval_rat(&one).is_zero() {
            p = p.div_exact(&q_minus_one());
            n += 1;
        }
        n
    }
}

pub(crate) fn q_minus_one() -> LaurentPoly {
    let mut p = LaurentPoly::monomial(GaussRat::one(), 1);
    p.insert_term(0, GaussRat::from_int(-1));
    p
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0*q^0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{}*q^{}", c, k)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::monomial(GaussRat::one(), 1)
    }

    #[test]
    fn mul_and_shift() {
        // (1+q)(1+q⁻¹) = q⁻¹(1+q)²  = q⁻¹ + 2 + q
        let one_plus_q = LaurentPoly::one().add(&q());
        let one_plus_qinv = LaurentPoly::one().add(&q().invert_q());
        let prod = one_plus_q.mul(&one_plus_qinv);
        let mut expect = LaurentPoly::one().add(&LaurentPoly::one());
        expect.insert_term(1, GaussRat::one());
        expect.insert_term(-1, GaussRat::one());
        assert_eq!(prod, expect);
    }

    #[test]
    fn div_rem_exact() {
        // (q² − 1) / (q − 1) = q + 1
        let q2m1 = q().mul(&q()).sub(&LaurentPoly::one());
        let (quot, rem) = q2m1.div_rem(&q_minus_one());
        assert!(rem.is_zero());
        assert_eq!(quot, LaurentPoly::one().add(&q()));
    }

    #[test]
    fn gcd_cancels() {
        let a = q_minus_one().mul(&LaurentPoly::one().add(&q()));
        let b = q_minus_one();
        let g = a.gcd(&b);
        // gcd normalized with unit lowest coefficient: q − 1 normalized is −(1 − q) → (1 - q)... lowest coeff −1 scaled to 1.
        let expect = q_minus_one().scale(&GaussRat::from_int(-1));
        assert_eq!(g, expect);
    }

    #[test]
    fn order_at_one_counts() {
        let p = q_minus_one().mul(&q_minus_one()).mul(&LaurentPoly::one().add(&q()));
        assert_eq!(p.order_at_one(), 2);
    }
}
