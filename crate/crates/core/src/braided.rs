//! Representation of the universal R-matrix on a tensor square, the
//! braided R-matrix, Yang-Baxter checks and the spectral decomposition
//! over the isotypic projectors.

use crate::error::Result;
use crate::halfint::HalfInt;
use crate::matrix::QMatrix;
use crate::qseries::qfactorial;
use crate::report::{guarded, params_of, VerificationReport};
use crate::scalar::QScalar;
use crate::uqsl2::{
    coproduct_op_rep, coproduct_rep, omega_plus, pair_casimir_projectors, Generator, SpinRep,
};

/// The flip sigma(v (x) w) = w (x) v on a d (x) d square.
pub fn swap(d: usize) -> QMatrix {
    let mut m = QMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            m.set(j * d + i, i * d + j, QScalar::one());
        }
    }
    m
}

/// Image of the universal R-matrix on the tensor square:
///   R = sum_n [(q - 1/q)^n / [n]_q!] q^(-n(n+1)/2)
///       (E (x) F)^n (q^(-nH) (x) q^(nH)) q^(2 H(x)H),
/// truncated at n = 2s; the n = 2s + 1 term vanishes by nilpotency of E,
/// which is asserted.
pub fn universal_r_rep(rep: &SpinRep) -> Result<QMatrix> {
    let point = rep.point();
    let t = rep.spin().twice();
    let d = rep.dim();
    let q = point.q();
    let qdiff = point.q_minus_qinv()?;

    let mut weight_twist = QMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for k in 0..d {
            // q^(2(s-i)(s-k)) = u^((2s-2i)(2s-2k))
            let exp = (t - 2 * i as i64) * (t - 2 * k as i64);
            weight_twist.set(i * d + k, i * d + k, point.u_pow(exp));
        }
    }

    let ef = rep.e().kron(rep.f());
    let mut sum = QMatrix::zeros(d * d, d * d);
    let mut ef_pow = QMatrix::identity(d * d);
    for n in 0..=t {
        let coeff = qdiff.pow(n) / qfactorial(n as u32, &q)? * q.pow(-n * (n + 1) / 2);
        let kshift = rep.k_inv().pow(n as usize).kron(&rep.k().pow(n as usize));
        sum = &sum + &(&(&ef_pow * &kshift) * &weight_twist).scale(&coeff);
        ef_pow = &ef_pow * &ef;
    }
    // ef_pow now holds (E (x) F)^(2s+1), the first dropped term.
    assert!(
        ef_pow.is_zero_matrix(),
        "truncation of the R-matrix sum must be exact"
    );
    Ok(sum)
}

/// The braided R-matrix bundle on a tensor square: R, Rcheck = R sigma,
/// the flip, the eigenvalues xi_r and the isotypic projectors.
#[derive(Clone, Debug)]
pub struct BraidedR {
    pub spin: HalfInt,
    pub r_mat: QMatrix,
    pub r_check: QMatrix,
    pub sigma: QMatrix,
    pub xi: Vec<QScalar>,
    pub projectors: Vec<QMatrix>,
}

/// xi_r = (-1)^(2s) q^(-2s(s+1)) (-1)^r q^(r(r+1)).
pub fn braided_eigenvalue(rep: &SpinRep, r: i64) -> QScalar {
    let t = rep.spin().twice();
    let sign = if (t + r) % 2 == 0 { 1 } else { -1 };
    QScalar::int(sign) * rep.point().u_pow(2 * r * (r + 1) - t * (t + 2))
}

pub fn braided_r(rep: &SpinRep) -> Result<BraidedR> {
    let r_mat = universal_r_rep(rep)?;
    let sigma = swap(rep.dim());
    let r_check = &r_mat * &sigma;
    let xi = (0..=rep.spin().twice())
        .map(|r| braided_eigenvalue(rep, r))
        .collect();
    let projectors = pair_casimir_projectors(rep)?;
    Ok(BraidedR {
        spin: rep.spin(),
        r_mat,
        r_check,
        sigma,
        xi,
        projectors,
    })
}

/// R acting on legs (1,2) of the cube.
pub fn leg12(m: &QMatrix, d: usize) -> QMatrix {
    m.kron(&QMatrix::identity(d))
}

/// R acting on legs (2,3) of the cube.
pub fn leg23(m: &QMatrix, d: usize) -> QMatrix {
    QMatrix::identity(d).kron(m)
}

/// R acting on legs (1,3): conjugate the (1,2) placement by the flip of
/// legs 2 and 3.
pub fn leg13(m: &QMatrix, d: usize) -> QMatrix {
    let flip23 = leg23(&swap(d), d);
    &(&flip23 * &leg12(m, d)) * &flip23
}

/// Intertwining of the coproduct: Delta(x) R = R Delta^op(x) for every
/// generator, and Rcheck commutes with every Delta(x).
pub fn check_intertwining(rep: &SpinRep) -> VerificationReport {
    guarded(
        rep.point().mode(),
        "intertwining",
        params_of([("s", rep.spin().to_string()), ("u", rep.point().to_string())]),
        |c| {
            let r = universal_r_rep(rep)?;
            let sigma = swap(rep.dim());
            let r_check = &r * &sigma;
            for g in Generator::ALL {
                let direct = coproduct_rep(rep, rep, g);
                let opposite = coproduct_op_rep(rep, rep, g);
                c.eq_matrix_scaled(
                    &format!("Delta({}) R = R Delta_op({})", g.name(), g.name()),
                    &(&direct * &r),
                    &(&r * &opposite),
                    direct.product_scale(&r).max(r.product_scale(&opposite)),
                );
                c.eq_matrix_scaled(
                    &format!("Rcheck Delta({}) = Delta({}) Rcheck", g.name(), g.name()),
                    &(&r_check * &direct),
                    &(&direct * &r_check),
                    r_check.product_scale(&direct).max(direct.product_scale(&r_check)),
                );
            }
            Ok(())
        },
    )
}

/// Yang-Baxter on the cube: R12 R13 R23 = R23 R13 R12, and the braided
/// form Rcheck1 Rcheck2 Rcheck1 = Rcheck2 Rcheck1 Rcheck2.
pub fn check_ybe(rep: &SpinRep) -> VerificationReport {
    guarded(
        rep.point().mode(),
        "yang_baxter",
        params_of([("s", rep.spin().to_string()), ("u", rep.point().to_string())]),
        |c| {
            let d = rep.dim();
            let r = universal_r_rep(rep)?;
            let r12 = leg12(&r, d);
            let r23 = leg23(&r, d);
            let r13 = leg13(&r, d);
            let left_pair = &r12 * &r13;
            let right_pair = &r23 * &r13;
            c.eq_matrix_scaled(
                "R12 R13 R23 = R23 R13 R12",
                &(&left_pair * &r23),
                &(&right_pair * &r12),
                left_pair.product_scale(&r23).max(right_pair.product_scale(&r12)),
            );
            let rc = &r * &swap(d);
            let rc1 = leg12(&rc, d);
            let rc2 = leg23(&rc, d);
            let lc = &rc1 * &rc2;
            let rcp = &rc2 * &rc1;
            c.eq_matrix_scaled(
                "Rc1 Rc2 Rc1 = Rc2 Rc1 Rc2",
                &(&lc * &rc1),
                &(&rcp * &rc2),
                lc.product_scale(&rc1).max(rcp.product_scale(&rc2)),
            );
            Ok(())
        },
    )
}

/// Spectral decomposition of the braided R-matrix:
/// Rcheck = sum_r xi_r P(M_r), the minimal polynomial
/// prod_r (Rcheck - xi_r I) = 0, the eigenvector property on the
/// highest-weight vectors, the inverse expansion and the trace identity.
pub fn check_spectral_decomposition(rep: &SpinRep) -> VerificationReport {
    guarded(
        rep.point().mode(),
        "spectral_decomposition",
        params_of([("s", rep.spin().to_string()), ("u", rep.point().to_string())]),
        |c| {
            let braided = braided_r(rep)?;
            let n = braided.r_check.rows();
            let q = rep.point().q();
            let eigenvalues: Vec<crate::scalar::QScalar> = (0..=rep.spin().twice())
                .map(|r| crate::qseries::chi(HalfInt::from_int(r), &q))
                .collect();
            let pair_casimir = crate::uqsl2::coproduct_casimir(rep, rep)?;
            let proj_scales = pair_casimir.idempotent_scales(&eigenvalues);

            let mut expansion = QMatrix::zeros(n, n);
            let mut inverse_expansion = QMatrix::zeros(n, n);
            let mut completeness = QMatrix::zeros(n, n);
            let mut trace_sum = QScalar::zero();
            let mut expansion_scale = 0f64;
            let mut inv_expansion_scale = 0f64;
            for (r, proj) in braided.projectors.iter().enumerate() {
                expansion = &expansion + &proj.scale(&braided.xi[r]);
                inverse_expansion = &inverse_expansion + &proj.scale(&braided.xi[r].inv());
                completeness = &completeness + proj;
                trace_sum = trace_sum + &braided.xi[r] * QScalar::int(2 * r as i64 + 1);
                expansion_scale = expansion_scale.max(braided.xi[r].abs_f64() * proj_scales[r]);
                inv_expansion_scale =
                    inv_expansion_scale.max(braided.xi[r].inv().abs_f64() * proj_scales[r]);
            }
            c.eq_matrix_scaled(
                "Rcheck = sum xi_r P(M_r)",
                &braided.r_check,
                &expansion,
                expansion_scale,
            );
            c.eq_matrix_scaled(
                "sum P(M_r) = I",
                &completeness,
                &QMatrix::identity(n),
                proj_scales.iter().fold(0.0f64, |acc, s| acc.max(*s)),
            );

            let mut min_poly = QMatrix::identity(n);
            let mut poly_scale = 1f64;
            let r_norm = braided.r_check.max_abs_f64();
            for xi in &braided.xi {
                let factor = &braided.r_check - &QMatrix::scalar(n, xi);
                min_poly = &min_poly * &factor;
                poly_scale *= (r_norm + xi.abs_f64()) * n as f64;
            }
            c.zero_matrix_scaled("prod (Rcheck - xi_r I) = 0", &min_poly, poly_scale);

            for r in 0..=rep.spin().twice() {
                let omega = omega_plus(rep, r)?;
                let image = braided.r_check.apply(&omega);
                let scaled: Vec<QScalar> =
                    omega.iter().map(|x| x * &braided.xi[r as usize]).collect();
                c.eq_matrix(
                    &format!("Rcheck omega_{r}+ = xi_{r} omega_{r}+"),
                    &QMatrix::from_columns(&[image]),
                    &QMatrix::from_columns(&[scaled]),
                );
            }

            match rep.point().mode() {
                crate::scalar::Mode::Exact => c.eq_matrix(
                    "Rcheck^-1 = sum xi_r^-1 P(M_r)",
                    &braided.r_check.inverse()?,
                    &inverse_expansion,
                ),
                crate::scalar::Mode::Float => c.eq_matrix_scaled(
                    "Rcheck (sum xi_r^-1 P(M_r)) = I",
                    &(&braided.r_check * &inverse_expansion),
                    &QMatrix::identity(n),
                    braided
                        .r_check
                        .product_scale(&inverse_expansion)
                        .max(braided.r_check.max_abs_f64() * inv_expansion_scale * n as f64),
                ),
            }
            c.eq_scalar_scaled(
                "trace Rcheck = sum xi_r (2r+1)",
                &braided.r_check.trace(),
                &trace_sum,
                expansion_scale * n as f64,
            );
            Ok(())
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QPoint;

    fn point() -> QPoint {
        QPoint::exact(3, 5).unwrap()
    }

    #[test]
    fn swap_is_an_involution() {
        for d in 1..=4 {
            let s = swap(d);
            assert_eq!(&s * &s, QMatrix::identity(d * d));
        }
    }

    #[test]
    fn spin_zero_r_is_one() {
        let rep = SpinRep::new(HalfInt::ZERO, &point()).unwrap();
        let r = universal_r_rep(&rep).unwrap();
        assert_eq!(r, QMatrix::identity(1));
    }

    #[test]
    fn spin_half_r_matches_hand_expansion() {
        // Two-term sum written out by hand in the weight basis
        // (w0 w0, w0 w1, w1 w0, w1 w1):
        //   n = 0: diag(u, 1/u, 1/u, u)
        //   n = 1: (q - 1/q)/u in entry ((0,1), (1,0)).
        let p = point();
        let rep = SpinRep::new(HalfInt::HALF, &p).unwrap();
        let r = universal_r_rep(&rep).unwrap();
        let u = p.u_pow(1);
        let mut expected = QMatrix::diagonal(&[u.clone(), u.inv(), u.inv(), u.clone()]);
        expected.set(1, 2, (p.q_pow(1) - p.q_pow(-1)) * p.u_pow(-1));
        assert_eq!(r, expected);
    }

    #[test]
    fn spin_half_eigenvalues() {
        let p = point();
        let rep = SpinRep::new(HalfInt::HALF, &p).unwrap();
        assert_eq!(braided_eigenvalue(&rep, 0), -p.u_pow(-3));
        assert_eq!(braided_eigenvalue(&rep, 1), p.u_pow(1));
    }

    #[test]
    fn intertwining_small_spins() {
        let p = point();
        for st in [1i64, 2] {
            let rep = SpinRep::new(HalfInt::from_twice(st), &p).unwrap();
            let report = check_intertwining(&rep);
            assert!(report.passed, "{:?}", report.detail);
        }
    }

    #[test]
    fn yang_baxter_small_spins() {
        let p = point();
        for st in [0i64, 1, 2] {
            let rep = SpinRep::new(HalfInt::from_twice(st), &p).unwrap();
            let report = check_ybe(&rep);
            assert!(report.passed, "s = {st}: {:?}", report.detail);
        }
    }

    #[test]
    fn spectral_decomposition_small_spins() {
        let p = point();
        for st in [0i64, 1, 2] {
            let rep = SpinRep::new(HalfInt::from_twice(st), &p).unwrap();
            let report = check_spectral_decomposition(&rep);
            assert!(report.passed, "s = {st}: {:?}", report.detail);
        }
    }

    #[test]
    fn spin_half_hecke_quadratic() {
        // (Rcheck - xi_0)(Rcheck - xi_1) = 0: the Hecke/Temperley-Lieb
        // quadratic at spin 1/2.
        let p = point();
        let rep = SpinRep::new(HalfInt::HALF, &p).unwrap();
        let braided = braided_r(&rep).unwrap();
        let f0 = &braided.r_check - &QMatrix::scalar(4, &braided.xi[0]);
        let f1 = &braided.r_check - &QMatrix::scalar(4, &braided.xi[1]);
        assert!((&f0 * &f1).is_zero_matrix());
    }

    #[test]
    fn float_mode_spectral_decomposition() {
        let p = QPoint::float(0.6).unwrap();
        let rep = SpinRep::new(HalfInt::ONE, &p).unwrap();
        let report = check_spectral_decomposition(&rep);
        assert!(report.passed, "{:?}", report.detail);
    }
}
