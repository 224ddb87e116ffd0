//! Exact arithmetic in ℚ(i)(q): ratios of Laurent polynomials in the
//! deformation parameter q with Gaussian-rational coefficients.
//!
//! Canonical form: numerator and denominator share no polynomial factor, the
//! denominator is an ordinary polynomial with nonzero constant term, and its
//! lowest-degree coefficient is 1. Zero is represented as 0/1, so equality is
//! plain representation equality.

mod gauss;
mod laurent;

pub use gauss::GaussRat;
pub use laurent::LaurentPoly;

use laurent::q_minus_one;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QFieldError {
    DivisionByZero,
    /// Evaluation hit a zero of the denominator; carries the canonical
    /// denominator text.
    Pole(String),
    /// q → 1 limit does not exist; carries the offending denominator text.
    NonRemovablePole(String),
    Parse(String),
}

impl fmt::Display for QFieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QFieldError::DivisionByZero => write!(f, "division by zero"),
            QFieldError::Pole(d) => write!(f, "pole: denominator ({d}) vanishes"),
            QFieldError::NonRemovablePole(d) => {
                write!(f, "non-removable pole at q=1: denominator ({d})")
            }
            QFieldError::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for QFieldError {}

/// An element of ℚ(i)(q) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct QScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QScalar {
    fn make(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut s = QScalar { num, den };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // Strip q-units: make both ordinary polynomials, moving the unit to num.
        let nu = self.num.min_deg().unwrap();
        let du = self.den.min_deg().unwrap();
        let mut num = self.num.shift(-nu);
        let mut den = self.den.shift(-du);
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.div_exact(&g);
            den = den.div_exact(&g);
        }
        // Denominator's lowest-degree (constant) coefficient normalized to 1.
        let low = den.coeff(0);
        if !low.is_one() {
            let inv = low.inv();
            den = den.scale(&inv);
            num = num.scale(&inv);
        }
        self.num = num.shift(nu - du);
        self.den = den;
    }

    pub fn zero() -> Self {
        QScalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        QScalar {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QScalar {
            num: LaurentPoly::monomial(GaussRat::from_int(n), 0),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::make(
            LaurentPoly::monomial(GaussRat::from_ratio(n, d), 0),
            LaurentPoly::one(),
        )
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        QScalar {
            num: LaurentPoly::monomial(c, 0),
            den: LaurentPoly::one(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_gauss(GaussRat::i())
    }

    /// i⁻¹ = −i.
    pub fn i_inv() -> Self {
        Self::from_gauss(&GaussRat::zero() - &GaussRat::i())
    }

    /// q^k.
    pub fn q_pow(k: i64) -> Self {
        QScalar {
            num: LaurentPoly::monomial(GaussRat::one(), k),
            den: LaurentPoly::one(),
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// λ = q − q⁻¹.
    pub fn lambda() -> Self {
        &Self::q_pow(1) - &Self::q_pow(-1)
    }

    /// λ₊ = q + q⁻¹.
    pub fn lambda_plus() -> Self {
        &Self::q_pow(1) + &Self::q_pow(-1)
    }

    pub fn big_int(n: BigInt) -> Self {
        Self::from_gauss(GaussRat::from_big(BigRational::from_integer(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the canonical denominator is 1 (the element is a Laurent
    /// polynomial in q).
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn inv(&self) -> Result<Self, QFieldError> {
        if self.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        Ok(Self::make(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Result<Self, QFieldError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut acc = QScalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// i ↦ −i coefficientwise; q is fixed. An involution.
    pub fn conjugate(&self) -> Self {
        // Conjugating num and den preserves canonicality up to the leading
        // unit of den, which is real only if den's low coefficient is real;
        // it is 1 by canonical form, so no renormalization is needed.
        QScalar {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }

    /// q ↦ q⁻¹, a field automorphism (used by geometry mirroring).
    pub fn substitute_q_inverse(&self) -> Self {
        Self::make(self.num.invert_q(), self.den.invert_q())
    }

    /// Exact evaluation at rational q₀ ≠ 0.
    pub fn eval_rat(&self, q0: &BigRational) -> Result<GaussRat, QFieldError> {
        if q0.is_zero() {
            return Err(QFieldError::Pole("q=0".into()));
        }
        let d = self.den.eval_rat(q0);
        if d.is_zero() {
            return Err(QFieldError::Pole(self.den.to_string()));
        }
        Ok(&self.num.eval_rat(q0) / &d)
    }

    /// Numeric evaluation at real double q₀; returns (re, im).
    pub fn eval_f64(&self, q0: f64) -> Result<(f64, f64), QFieldError> {
        let (dr, di) = self.den.eval_f64(q0);
        if dr == 0.0 && di == 0.0 {
            return Err(QFieldError::Pole(self.den.to_string()));
        }
        let (nr, ni) = self.num.eval_f64(q0);
        let d2 = dr * dr + di * di;
        Ok(((nr * dr + ni * di) / d2, (ni * dr - nr * di) / d2))
    }

    /// q → 1 limit: cancels common (q−1) factors, then evaluates.
    pub fn limit_q_to_1(&self) -> Result<GaussRat, QFieldError> {
        if self.is_zero() {
            return Ok(GaussRat::zero());
        }
        let k_num = self.num.order_at_one();
        let k_den = self.den.order_at_one();
        if k_den > k_num {
            return Err(QFieldError::NonRemovablePole(self.den.to_string()));
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for _ in 0..k_den {
            num = num.div_exact(&q_minus_one());
            den = den.div_exact(&q_minus_one());
        }
        let one = BigRational::one();
        let d = den.eval_rat(&one);
        Ok(&num.eval_rat(&one) / &d)
    }
}

impl std::ops::Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        QScalar::make(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl std::ops::Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        QScalar::make(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl std::ops::Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        QScalar::make(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl std::ops::Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

// ---- parsing ---------------------------------------------------------

fn parse_rat(s: &str) -> Result<BigRational, QFieldError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num = BigInt::from_str(n.trim()).map_err(|_| QFieldError::Parse(format!("bad integer {n:?}")))?;
    let den = BigInt::from_str(d.trim()).map_err(|_| QFieldError::Parse(format!("bad integer {d:?}")))?;
    if den.is_zero() {
        return Err(QFieldError::Parse("zero denominator in coefficient".into()));
    }
    Ok(BigRational::new(num, den))
}

fn parse_coeff(s: &str) -> Result<GaussRat, QFieldError> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        // (re±imi) with the imaginary part always last and suffixed by i.
        let body = inner.trim().strip_suffix('i').ok_or_else(|| {
            QFieldError::Parse(format!("expected complex coefficient, got {s:?}"))
        })?;
        // Split at the final +/- that is not at position 0.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            if bytes[idx] == b'+' || bytes[idx] == b'-' {
                // Don't split a fraction numerator's sign like "-1/2".
                if bytes[idx - 1] != b'/' {
                    split = Some(idx);
                    break;
                }
            }
        }
        let idx = split.ok_or_else(|| QFieldError::Parse(format!("bad complex {s:?}")))?;
        let re = parse_rat(&body[..idx])?;
        let sign = if bytes[idx] == b'-' { -1 } else { 1 };
        let im_str = body[idx + 1..].trim();
        let im_mag = if im_str.is_empty() {
            BigRational::one()
        } else {
            parse_rat(im_str)?
        };
        let im = im_mag * BigRational::from_integer(sign.into());
        return Ok(GaussRat::new(re, im));
    }
    if let Some(rest) = s.strip_suffix('i') {
        let rest = rest.trim();
        let mag = match rest {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rat(other)?,
        };
        return Ok(GaussRat::new(BigRational::zero(), mag));
    }
    Ok(GaussRat::from_big(parse_rat(s)?))
}

fn parse_poly(s: &str) -> Result<LaurentPoly, QFieldError> {
    let s = s.trim();
    let mut poly = LaurentPoly::zero();
    // Terms are joined by '+'; a term's coefficient may itself start with '-'.
    for term in split_top_level(s, '+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(QFieldError::Parse("empty term".into()));
        }
        let (c_str, k_str) = term
            .rsplit_once("*q^")
            .ok_or_else(|| QFieldError::Parse(format!("term {term:?} lacks *q^k")))?;
        let c = parse_coeff(c_str)?;
        let k = i64::from_str(k_str.trim())
            .map_err(|_| QFieldError::Parse(format!("bad exponent {k_str:?}")))?;
        poly.insert_term(k, c);
    }
    Ok(poly)
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl FromStr for QScalar {
    type Err = QFieldError;

    /// Parses the canonical textual form "(<num>)/(<den>)".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .ok_or_else(|| QFieldError::Parse("expected leading (".into()))?;
        // Find the ")/(" separator at top level.
        let mut depth = 1usize;
        let mut sep = None;
        let bytes = inner.as_bytes();
        for i in 0..bytes.len() {
            match bytes[i] {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        if inner[i..].starts_with(")/(") {
                            sep = Some(i);
                        }
                        break;
                    }
                }
                _ => {}
            }
        }
        let i = sep.ok_or_else(|| QFieldError::Parse("expected )/( separator".into()))?;
        let num = parse_poly(&inner[..i])?;
        let den_part = &inner[i + 3..];
        let den_str = den_part
            .strip_suffix(')')
            .ok_or_else(|| QFieldError::Parse("expected trailing )".into()))?;
        let den = parse_poly(den_str)?;
        if den.is_zero() {
            return Err(QFieldError::Parse("zero denominator".into()));
        }
        Ok(QScalar::make(num, den))
    }
}
