//! q-brackets, q-factorials, Gaussian binomials, and the star-product power
//! coefficients (C_q)_k^n.
//!
//! Bracket convention: [[n]]_{q^a} = (q^{an} − 1)/(q^a − 1), so [[2]]_q = 1+q
//! stays distinct from λ₊ = q+q⁻¹.

use crate::qfield::QScalar;
use num_bigint::BigInt;

/// q-bracket [[n]]_{q^a} for any integer n; `a` must be nonzero.
///
/// For n ≥ 0 this is the sum 1 + q^a + … + q^{a(n−1)}; the closed formula
/// extends it to negative n ([[−n]]_{q^a} = −q^{−an}[[n]]_{q^a}).
pub fn qnum(n: i64, a: i64) -> QScalar {
    assert!(a != 0, "qnum: bracket base exponent must be nonzero");
    if n == 0 {
        return QScalar::zero();
    }
    if n > 0 {
        let mut acc = QScalar::zero();
        for k in 0..n {
            acc = &acc + &QScalar::q_pow(a * k);
        }
        acc
    } else {
        // (q^{an} − 1)/(q^a − 1) for n < 0; exact division in the field.
        let num = &QScalar::q_pow(a * n) - &QScalar::one();
        let den = &QScalar::q_pow(a) - &QScalar::one();
        &num * &den.inv().expect("q^a - 1 is nonzero")
    }
}

/// q-factorial [[n]]_{q^a}! = ∏_{k=1..n} [[k]]_{q^a}; [[0]]! = 1.
pub fn qfactorial(n: u32, a: i64) -> QScalar {
    let mut acc = QScalar::one();
    for k in 1..=n as i64 {
        acc = &acc * &qnum(k, a);
    }
    acc
}

/// Ordinary factorial n! as an exact scalar.
pub fn factorial(n: u32) -> QScalar {
    let mut acc = BigInt::from(1);
    for k in 2..=n as u64 {
        acc *= BigInt::from(k);
    }
    QScalar::big_int(acc)
}

/// Gaussian binomial coefficient [n k]_{q^a}; zero outside 0 ≤ k ≤ n.
/// The result is always a Laurent polynomial (the denominator cancels).
pub fn qbinomial(n: u32, k: i64, a: i64) -> QScalar {
    if k < 0 || k > n as i64 {
        return QScalar::zero();
    }
    let k = k as u32;
    let num = qfactorial(n, a);
    let den = &qfactorial(k, a) * &qfactorial(n - k, a);
    &num * &den.inv().expect("q-factorials are nonzero")
}

/// (C_q)_k^n by the recursion
/// (C_q)_k^n = q^{4k}(−λ₊)(C_q)_k^{n−1} + q^{−2}(C_q)_{k−1}^{n−1},
/// base (C_q)_0^0 = 1, zero outside 0 ≤ k ≤ n.
pub fn cq_recursive(n: u32, k: i64) -> QScalar {
    fn go(n: u32, k: i64, memo: &mut std::collections::HashMap<(u32, i64), QScalar>) -> QScalar {
        if k < 0 || k > n as i64 {
            return QScalar::zero();
        }
        if n == 0 {
            return QScalar::one();
        }
        if let Some(v) = memo.get(&(n, k)) {
            return v.clone();
        }
        let t1 = &(&QScalar::q_pow(4 * k) * &(-&QScalar::lambda_plus())) * &go(n - 1, k, memo);
        let t2 = &QScalar::q_pow(-2) * &go(n - 1, k - 1, memo);
        let v = &t1 + &t2;
        memo.insert((n, k), v.clone());
        v
    }
    go(n, k, &mut std::collections::HashMap::new())
}

/// (C_q)_k^n in closed form: q^{−2k}(−λ₊)^{n−k}·[n k]_{q⁴}.
pub fn cq_closed(n: u32, k: i64) -> QScalar {
    if k < 0 || k > n as i64 {
        return QScalar::zero();
    }
    let m = (n as i64 - k) as i64;
    let neg_lp = -&QScalar::lambda_plus();
    let pow = neg_lp.pow(m).expect("nonnegative power");
    &(&QScalar::q_pow(-2 * k) * &pow) * &qbinomial(n, k, 4)
}
