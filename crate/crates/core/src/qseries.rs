//! q-shifted factorials, q-numbers, terminating basic hypergeometric
//! series and q-Racah polynomials, plus a battery of classical q-series
//! identities used as self-checks.
//!
//! Series evaluators take the base q as a plain scalar, so the same code
//! runs in base q, q^2, 1/q or u = q^(1/2) as needed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::report::{params_of, Checker, VerificationReport};
use crate::scalar::{Mode, QPoint, QScalar};

/// Hard cap on series length; every series in this crate terminates far
/// below it, so hitting the cap means a non-terminating parameter list.
/// Kept small: past the cap the exact rationals only grow without bound.
const MAX_PHI_TERMS: usize = 64;

/// Binomial coefficient C(k, 2) as an exponent.
pub fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// q-Pochhammer symbol (z; q)_k = prod_{i=1}^{k} (1 - z q^(i-1)).
pub fn qpochhammer(z: &QScalar, q: &QScalar, k: u32) -> QScalar {
    let mut acc = QScalar::one();
    let mut zq = z.clone();
    for _ in 0..k {
        acc = acc * (QScalar::one() - &zq);
        zq = zq * q;
    }
    acc
}

/// Multi-argument convenience (z_1, ..., z_r; q)_k.
pub fn qpochhammer_multi(zs: &[QScalar], q: &QScalar, k: u32) -> QScalar {
    zs.iter()
        .map(|z| qpochhammer(z, q, k))
        .fold(QScalar::one(), |acc, p| acc * p)
}

/// [x]_q = (q^x - q^(-x)) / (q - q^(-1)) for integer x.
pub fn qnumber_int(x: i64, q: &QScalar) -> Result<QScalar> {
    let d = q - &q.inv();
    if d.is_structural_zero() {
        return Err(Error::DivisionByZero("[x]_q needs q^2 != 1".into()));
    }
    Ok((q.pow(x) - q.pow(-x)) / d)
}

/// [x]_q for half-integer x, computed through u = q^(1/2).
pub fn qnumber(x: HalfInt, point: &QPoint) -> Result<QScalar> {
    let d = point.q_minus_qinv()?;
    Ok((point.q_pow_half(x) - point.q_pow_half(-x)) / d)
}

/// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
pub fn qfactorial(n: u32, q: &QScalar) -> Result<QScalar> {
    let mut acc = QScalar::one();
    for k in 1..=n as i64 {
        acc = acc * qnumber_int(k, q)?;
    }
    Ok(acc)
}

/// Casimir eigenvalue chi_j = q^(2j+1) + q^(-2j-1); the exponent 2j + 1
/// is an integer for every spin j.
pub fn chi(j: HalfInt, q: &QScalar) -> QScalar {
    let e = j.twice() + 1;
    q.pow(e) + q.pow(-e)
}

/// Terminating basic hypergeometric series
/// r_phi_s(a_1..a_r; b_1..b_s; q, z) with the standard (Gasper-Rahman)
/// term [(a_1..a_r;q)_k / ((q;q)_k (b_1..b_s;q)_k)]
/// [(-1)^k q^C(k,2)]^(1+s-r) z^k.
///
/// The sum stops at the first vanishing upper-parameter factor; a
/// parameter list that never vanishes within [`MAX_PHI_TERMS`] is
/// rejected, as is a lower-parameter factor vanishing inside the
/// summation range.
pub fn phi(upper: &[QScalar], lower: &[QScalar], q: &QScalar, z: &QScalar) -> Result<QScalar> {
    phi_with_scale(upper, lower, q, z).map(|(value, _)| value)
}

/// As [`phi`], but also reports the largest |term| of the sum in
/// binary64. Small polynomial values arise from cancellation between
/// terms of this size, so the scale bounds the absolute accuracy
/// attainable in float mode.
pub fn phi_with_scale(
    upper: &[QScalar],
    lower: &[QScalar],
    q: &QScalar,
    z: &QScalar,
) -> Result<(QScalar, f64)> {
    let extra = 1 + lower.len() as i64 - upper.len() as i64;
    // A factor 1 - a q^k vanishes when a q^k = 1; in float mode the test
    // must be relative to |a q^k|, since other huge factors in the same
    // product would mask an absolute epsilon.
    let vanishes = |aq: &QScalar| -> bool {
        let factor = QScalar::one() - aq;
        match factor {
            QScalar::Exact(_) => factor.is_zero(),
            QScalar::Float(f) => f.abs() <= 1e-12 * aq.abs_f64().max(1.0),
        }
    };
    let mut sum = QScalar::one();
    let mut term = QScalar::one();
    let mut scale = 1f64;
    let mut q_k = QScalar::one(); // q^k
    for k in 0..MAX_PHI_TERMS {
        // Factor carried from term k to term k+1.
        let mut up = QScalar::one();
        let mut terminated = false;
        for a in upper {
            let aq = a * &q_k;
            if vanishes(&aq) {
                terminated = true;
                break;
            }
            up = up * (QScalar::one() - aq);
        }
        if terminated {
            return Ok((sum, scale));
        }
        let mut low = QScalar::one();
        for b in lower.iter().chain(std::iter::once(q)) {
            let bq = b * &q_k;
            if vanishes(&bq) {
                return Err(Error::VanishingLowerParameter { term: k + 1 });
            }
            low = low * (QScalar::one() - bq);
        }
        let sign_factor = (-&q_k).pow(extra);
        term = term * up / low * sign_factor * z;
        scale = scale.max(term.abs_f64());
        sum = sum + &term;
        q_k = q_k * q;
    }
    Err(Error::NonTerminatingSeries {
        max_terms: MAX_PHI_TERMS,
    })
}

/// Parameters of a q-Racah polynomial R_n(mu(x); alpha, beta, gamma,
/// delta | q) truncated at N.
#[derive(Clone, Debug)]
pub struct QRacahParams {
    pub degree: u32,
    pub var: u32,
    pub alpha: QScalar,
    pub beta: QScalar,
    pub gamma: QScalar,
    pub delta: QScalar,
    pub q: QScalar,
    pub truncation: u32,
}

impl QRacahParams {
    /// Validates 0 <= n, x <= N and that exactly one of
    /// alpha = q^(-N-1), beta delta = q^(-N-1), gamma = q^(-N-1) holds.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        degree: u32,
        var: u32,
        alpha: QScalar,
        beta: QScalar,
        gamma: QScalar,
        delta: QScalar,
        q: QScalar,
        truncation: u32,
    ) -> Result<Self> {
        if degree > truncation || var > truncation {
            return Err(Error::Config(format!(
                "q-Racah indices n={degree}, x={var} must lie in 0..={truncation}"
            )));
        }
        let target = q.pow(-(truncation as i64) - 1);
        let hits_target = |c: &QScalar| -> bool {
            let diff = c - &target;
            match diff {
                QScalar::Exact(_) => diff.is_zero(),
                QScalar::Float(d) => d.abs() <= 1e-12 * target.abs_f64().max(1.0),
            }
        };
        let matches = [alpha.clone(), &beta * &delta, gamma.clone()]
            .iter()
            .filter(|c| hits_target(c))
            .count();
        if matches != 1 {
            return Err(Error::TruncationCondition(matches));
        }
        Ok(QRacahParams {
            degree,
            var,
            alpha,
            beta,
            gamma,
            delta,
            q,
            truncation,
        })
    }

    /// mu(x) = q^(-x) + gamma delta q^(x+1).
    pub fn mu(&self, x: u32) -> QScalar {
        self.q.pow(-(x as i64)) + &self.gamma * &self.delta * self.q.pow(x as i64 + 1)
    }
}

/// The terminating 4_phi_3 defining the q-Racah polynomial.
pub fn qracah(p: &QRacahParams) -> Result<QScalar> {
    qracah_with_scale(p).map(|(value, _)| value)
}

/// q-Racah value together with the series term scale (see
/// [`phi_with_scale`]).
pub fn qracah_with_scale(p: &QRacahParams) -> Result<(QScalar, f64)> {
    let n = p.degree as i64;
    let x = p.var as i64;
    let q = &p.q;
    let upper = [
        q.pow(-n),
        &p.alpha * &p.beta * q.pow(n + 1),
        q.pow(-x),
        &p.gamma * &p.delta * q.pow(x + 1),
    ];
    let lower = [
        &p.alpha * q,
        &p.beta * &p.delta * q,
        &p.gamma * q,
    ];
    phi_with_scale(&upper, &lower, q, q)
}

/// Both sides of the 6_phi_4 summation (the limit of Jackson's formula
/// for a terminating very-well-poised 6_phi_5):
/// 6_phi_4(q w, -q w, w^2, a_2, 0, q^(-n); w, -w, q w^2 / a_2, w^2 q^(n+1); q, q^n / a_2)
///   = (q w^2; q)_n / (q w^2 / a_2; q)_n * a_2^(-n)
/// where w = a_1^(1/2) is passed explicitly so no square roots are taken.
pub fn six_phi_four_sides(
    q: &QScalar,
    sqrt_a1: &QScalar,
    a2: &QScalar,
    n: u32,
) -> Result<(QScalar, QScalar)> {
    let a1 = sqrt_a1 * sqrt_a1;
    let qw = q * sqrt_a1;
    let upper = [
        qw.clone(),
        -&qw,
        a1.clone(),
        a2.clone(),
        QScalar::zero(),
        q.pow(-(n as i64)),
    ];
    let lower = [
        sqrt_a1.clone(),
        -sqrt_a1,
        q * &a1 / a2,
        &a1 * q.pow(n as i64 + 1),
    ];
    let z = q.pow(n as i64) / a2;
    let lhs = phi(&upper, &lower, q, &z)?;
    let denom = qpochhammer(&(q * &a1 / a2), q, n);
    if denom.is_structural_zero() {
        return Err(Error::DivisionByZero(
            "6phi4 closed form: (q a1 / a2; q)_n vanishes".into(),
        ));
    }
    let rhs = qpochhammer(&(q * &a1), q, n) / denom * a2.pow(-(n as i64));
    Ok((lhs, rhs))
}

fn admissible_z(z: &QScalar, q: &QScalar, n_max: u32) -> bool {
    if z.is_structural_zero() {
        return false;
    }
    let mut zq = z.clone();
    for _ in 0..n_max.max(1) {
        // Guards the (z, -z; q)_n and (z^2; q^2)_n denominators and 1 - z^2.
        if (QScalar::one() - &zq).is_structural_zero()
            || (QScalar::one() + &zq).is_structural_zero()
        {
            return false;
        }
        zq = zq * q;
    }
    true
}

fn draw_z(rng: &mut ChaCha8Rng, q: &QScalar, n_max: u32, mode: Mode) -> QScalar {
    loop {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=9);
        if num == 0 {
            continue;
        }
        let z = match mode {
            Mode::Exact => QScalar::ratio(num, den),
            Mode::Float => QScalar::float(num as f64 / den as f64),
        };
        if admissible_z(&z, q, n_max) {
            return z;
        }
    }
}

/// Runs the q-Pochhammer identity battery, the q-binomial theorem and the
/// 6_phi_4 summation for all degrees up to `n_max`, with randomized
/// admissible arguments drawn from the given seed.
pub fn check_qseries_identities(point: &QPoint, n_max: u32, seed: u64) -> VerificationReport {
    let mode = point.mode();
    let mut c = Checker::new(mode);
    let q = point.q();
    let qi = q.inv();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for n in 0..=n_max {
        let z = draw_z(&mut rng, &q, n_max + 1, mode);
        let minus_z = -&z;
        let zi = z.inv();

        // (z; 1/q)_n = (1/z; q)_n (-z)^n q^(-C(n,2))
        let lhs = qpochhammer(&z, &qi, n);
        let rhs = qpochhammer(&zi, &q, n) * minus_z.pow(n as i64) * q.pow(-binom2(n as i64));
        c.eq_scalar(&format!("base-inversion pochhammer identity, n={n}"), &lhs, &rhs);

        // (q^(1-n)/z; q)_n = (z; q)_n (-1/z)^n q^(-C(n,2))
        let lhs = qpochhammer(&(&zi * q.pow(1 - n as i64)), &q, n);
        let rhs = qpochhammer(&z, &q, n) * (-&zi).pow(n as i64) * q.pow(-binom2(n as i64));
        c.eq_scalar(&format!("argument-reversal pochhammer identity, n={n}"), &lhs, &rhs);

        // (z^2; q^2)_n = (z, -z; q)_n
        let lhs = qpochhammer(&(&z * &z), &(&q * &q), n);
        let rhs = qpochhammer_multi(&[z.clone(), minus_z.clone()], &q, n);
        c.eq_scalar(&format!("square-splitting pochhammer identity, n={n}"), &lhs, &rhs);

        // (qz, -qz; q)_n / (z, -z; q)_n = (q^2 z^2; q^2)_n / (z^2; q^2)_n
        //                               = (1 - z^2 q^(2n)) / (1 - z^2)
        let z2 = &z * &z;
        let q2 = &q * &q;
        let ratio1 = qpochhammer_multi(&[&q * &z, -&(&q * &z)], &q, n)
            / qpochhammer_multi(&[z.clone(), minus_z.clone()], &q, n);
        let ratio2 = qpochhammer(&(&q2 * &z2), &q2, n) / qpochhammer(&z2, &q2, n);
        let closed = (QScalar::one() - &z2 * q.pow(2 * n as i64)) / (QScalar::one() - &z2);
        c.eq_scalar(&format!("shift-ratio identity (series form), n={n}"), &ratio1, &ratio2);
        c.eq_scalar(&format!("shift-ratio identity (closed form), n={n}"), &ratio1, &closed);

        // q-binomial theorem:
        // (ab; q)_n = sum_k [(q;q)_n / ((q;q)_k (q;q)_{n-k})] b^k (a;q)_k (b;q)_{n-k}
        let a = draw_z(&mut rng, &q, n_max + 1, mode);
        let b = draw_z(&mut rng, &q, n_max + 1, mode);
        let lhs = qpochhammer(&(&a * &b), &q, n);
        let qq_n = qpochhammer(&q, &q, n);
        let mut rhs = QScalar::zero();
        for k in 0..=n {
            let weight = &qq_n / (qpochhammer(&q, &q, k) * qpochhammer(&q, &q, n - k));
            rhs = rhs
                + weight
                    * b.pow(k as i64)
                    * qpochhammer(&a, &q, k)
                    * qpochhammer(&b, &q, n - k);
        }
        c.eq_scalar(&format!("q-binomial theorem, n={n}"), &lhs, &rhs);

        // 6phi4 summation in both admissible parameter regimes.
        let e: i64 = rng.gen_range(1..=4);
        let shrink: i64 = rng.gen_range(0..=e - 1);
        let w = point.u_pow(e);
        for a2_exp in [e - shrink, e + n as i64 + 1] {
            let a2 = point.q_pow(a2_exp);
            match six_phi_four_sides(&q, &w, &a2, n) {
                Ok((lhs, rhs)) => c.eq_scalar(
                    &format!("6phi4 summation, n={n}, a1=q^{e}, a2=q^{a2_exp}"),
                    &lhs,
                    &rhs,
                ),
                Err(err) => c.fail(&format!("6phi4 summation, n={n}: {err}")),
            }
        }
    }

    c.into_report(
        "qseries",
        params_of([
            ("u", point.to_string()),
            ("n_max", n_max.to_string()),
            ("seed", seed.to_string()),
        ]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point() -> QPoint {
        QPoint::exact(3, 5).unwrap()
    }

    #[test]
    fn pochhammer_basics() {
        let q = QScalar::ratio(1, 2);
        assert_eq!(qpochhammer(&QScalar::int(17), &q, 0), QScalar::one());
        assert_eq!(qpochhammer(&QScalar::int(2), &q, 2), QScalar::zero());
        // (1/2; 1/2)_2 = (1 - 1/2)(1 - 1/4)
        assert_eq!(qpochhammer(&QScalar::ratio(1, 2), &q, 2), QScalar::ratio(3, 8));
    }

    #[test]
    fn qnumbers() {
        let p = point();
        let q = p.q();
        assert_eq!(qnumber(HalfInt::ONE, &p).unwrap(), QScalar::one());
        assert_eq!(
            qnumber(HalfInt::from_int(2), &p).unwrap(),
            &q + &q.inv()
        );
        // [3]_q at q = 1/2 is q^2 + 1 + q^(-2) = 21/4.
        assert_eq!(
            qnumber_int(3, &QScalar::ratio(1, 2)).unwrap(),
            QScalar::ratio(21, 4)
        );
        assert_eq!(qfactorial(0, &q).unwrap(), QScalar::one());
        let expected = qnumber_int(1, &q).unwrap()
            * qnumber_int(2, &q).unwrap()
            * qnumber_int(3, &q).unwrap();
        assert_eq!(qfactorial(3, &q).unwrap(), expected);
        assert!(qnumber_int(2, &QScalar::int(1)).is_err());
        assert!(qnumber_int(2, &QScalar::int(-1)).is_err());
    }

    #[test]
    fn chi_values() {
        let p = point();
        let q = p.q();
        assert_eq!(chi(HalfInt::ZERO, &q), &q + &q.inv());
        assert_eq!(chi(HalfInt::HALF, &q), q.pow(2) + q.pow(-2));
        // chi_{a+1} - chi_a = q^(-2a-3)(1 - q^2)(1 - q^(4(a+1)))
        for a in 0..4i64 {
            let lhs = chi(HalfInt::from_int(a + 1), &q) - chi(HalfInt::from_int(a), &q);
            let rhs = q.pow(-2 * a - 3)
                * (QScalar::one() - q.pow(2))
                * (QScalar::one() - q.pow(4 * (a + 1)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn phi_with_unit_upper_parameter_is_one() {
        let p = point();
        let q = p.q();
        let value = phi(
            &[QScalar::one(), QScalar::ratio(7, 3)],
            &[QScalar::ratio(1, 9)],
            &q,
            &QScalar::ratio(2, 5),
        )
        .unwrap();
        assert_eq!(value, QScalar::one());
    }

    #[test]
    fn phi_rejects_nonterminating_and_vanishing_lower() {
        let p = point();
        let q = p.q();
        assert!(matches!(
            phi(&[QScalar::ratio(1, 7)], &[QScalar::ratio(1, 3)], &q, &QScalar::ratio(1, 2)),
            Err(Error::NonTerminatingSeries { .. })
        ));
        // Lower parameter q^(-1) vanishes at term 2 while the sum still runs.
        assert!(matches!(
            phi(&[q.pow(-3)], &[q.pow(-1)], &q, &QScalar::ratio(1, 2)),
            Err(Error::VanishingLowerParameter { .. })
        ));
    }

    fn model_qracah(p: &QPoint, a: i64, cap: u32, n: u32, x: u32) -> QScalar {
        let q2 = p.q_pow(2);
        let nn = cap as i64;
        let params = QRacahParams::new(
            n,
            x,
            p.q_pow(2 * a),
            p.q_pow(2 * a),
            p.q_pow(2 * (3 * a + nn + 1)),
            p.q_pow(-2 * (a + nn + 1)),
            q2,
            cap,
        )
        .unwrap();
        qracah(&params).unwrap()
    }

    #[test]
    fn qracah_degenerate_indices_give_one() {
        let p = point();
        for x in 0..=3 {
            assert_eq!(model_qracah(&p, 1, 3, 0, x), QScalar::one());
        }
        for n in 0..=3 {
            assert_eq!(model_qracah(&p, 1, 3, n, 0), QScalar::one());
        }
    }

    #[test]
    fn qracah_degree_one_closed_form() {
        // R_1(mu(1)) = 1 - (1 - q^(4(a+1)))(1 + q^(2(a+1)))/(1 - q^(6(a+1)))
        let p = point();
        for a in 0..=3i64 {
            let value = model_qracah(&p, a, 1, 1, 1);
            let e = a + 1;
            let expected = QScalar::one()
                - (QScalar::one() - p.q_pow(4 * e)) * (QScalar::one() + p.q_pow(2 * e))
                    / (QScalar::one() - p.q_pow(6 * e));
            assert_eq!(value, expected);
        }
    }

    #[test]
    fn qracah_truncation_condition_enforced() {
        let p = point();
        let q = p.q();
        // No branch holds.
        assert!(matches!(
            QRacahParams::new(
                0,
                0,
                QScalar::ratio(1, 7),
                QScalar::ratio(1, 7),
                QScalar::ratio(1, 7),
                QScalar::ratio(1, 7),
                q.clone(),
                2
            ),
            Err(Error::TruncationCondition(0))
        ));
        // Two branches hold: alpha = gamma = q^(-N-1) and beta delta generic.
        assert!(matches!(
            QRacahParams::new(
                0,
                0,
                q.pow(-3),
                QScalar::ratio(1, 7),
                q.pow(-3),
                QScalar::ratio(1, 7),
                q.clone(),
                2
            ),
            Err(Error::TruncationCondition(2))
        ));
        // Out-of-range degree.
        assert!(QRacahParams::new(
            3,
            0,
            q.pow(-3),
            QScalar::one(),
            QScalar::ratio(1, 7),
            QScalar::ratio(1, 7),
            q,
            2
        )
        .is_err());
    }

    #[test]
    fn six_phi_four_summation_instances() {
        let p = point();
        let q = p.q();
        // n = 0 is the empty identity.
        let (lhs, rhs) = six_phi_four_sides(&q, &p.u_pow(3), &p.q_pow(2), 0).unwrap();
        assert_eq!(lhs, QScalar::one());
        assert_eq!(rhs, QScalar::one());
        // Both admissible regimes at n = 4: a2 below a1 and at the
        // boundary a2 = a1 q^(n+1).
        for (e, a2_exp) in [(3i64, 2i64), (3, 8), (7, 3)] {
            let (lhs, rhs) = six_phi_four_sides(&q, &p.u_pow(e), &p.q_pow(a2_exp), 4).unwrap();
            assert_eq!(lhs, rhs);
        }
        // Half-integer a1 exponents exercise the u tower: a1 = q^3 via w = u^3.
        let (lhs, rhs) = six_phi_four_sides(&q, &p.u_pow(5), &p.q_pow(1), 3).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_battery_passes_and_is_deterministic() {
        let p = point();
        let r1 = check_qseries_identities(&p, 5, 0xfeed);
        assert!(r1.passed, "{:?}", r1.detail);
        let r2 = check_qseries_identities(&p, 5, 0xfeed);
        assert_eq!(r1.params, r2.params);
        let fp = QPoint::float(0.6).unwrap();
        let rf = check_qseries_identities(&fp, 5, 0xfeed);
        assert!(rf.passed, "{:?}", rf.detail);
    }
}
