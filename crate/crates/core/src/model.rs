//! The two-parameter matrix model: the diagonal and tridiagonal
//! intermediate-Casimir representatives X1 and X2 on an (N+1)-dimensional
//! space, the braid matrices S1 and S2 built from their spectral
//! idempotents, the q-Racah transition matrix P and the scalar m_q tying
//! them together, plus every identity check relating them.

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::matrix::QMatrix;
use crate::qseries::{binom2, chi, qpochhammer, qpochhammer_multi, qracah_with_scale, QRacahParams};
use crate::report::{guarded, params_of, Checker, VerificationReport};
use crate::scalar::{Mode, QPoint, QScalar};

/// Model parameters from a spin pair: a = |s - l|,
/// N = min(2s, s + l) - |s - l|, defined whenever l lies in the
/// admissible spin set of the cube of spin s.
pub fn model_params(s: HalfInt, l: HalfInt) -> Result<(u32, u32)> {
    let j_min = if s.is_integer() { 0 } else { 1 };
    let in_range = l.twice() >= j_min
        && l.twice() <= 3 * s.twice()
        && (l.twice() - j_min) % 2 == 0;
    if !in_range {
        return Err(Error::SpinNotInRange(format!("l = {l} for s = {s}")));
    }
    let a = (s - l).abs();
    let n = (s + s).min(s + l) - a;
    Ok((a.as_integer().unwrap() as u32, n.as_integer().unwrap() as u32))
}

/// gamma_r = (-1)^r q^(r(r + 2a + 1)).
pub fn gamma_coefficient(point: &QPoint, a: u32, r: u32) -> QScalar {
    let (a, r) = (a as i64, r as i64);
    let sign = if r % 2 == 0 { 1 } else { -1 };
    QScalar::int(sign) * point.q_pow(r * (r + 2 * a + 1))
}

/// Eigenvalue ladder chi_a, chi_(a+1), ..., chi_(a+N).
pub fn chi_ladder(point: &QPoint, a: u32, len: usize) -> Vec<QScalar> {
    let q = point.q();
    (0..len)
        .map(|j| chi(HalfInt::from_int(a as i64 + j as i64), &q))
        .collect()
}

/// Off-diagonal recurrence coefficient alpha_(j-1,j) for 1 <= j <= N.
pub fn alpha_upper(point: &QPoint, a: u32, n: u32, j: u32) -> QScalar {
    let (a, nn, j) = (a as i64, n as i64, j as i64);
    let one = QScalar::one;
    let num = (one() - point.q_pow(2 * (j + a)))
        * (one() - point.q_pow(2 * (j + 2 * a)))
        * (one() - point.q_pow(2 * (j - nn - 1)))
        * (one() - point.q_pow(2 * (j + 3 * a + nn + 1)));
    let den = (one() - point.q_pow(2 * (2 * j + 2 * a - 1)))
        * (one() - point.q_pow(2 * (2 * j + 2 * a)));
    point.q_pow(-2 * a - 1) * num / den
}

/// Off-diagonal recurrence coefficient alpha_(j,j-1) for 1 <= j <= N.
pub fn alpha_lower(point: &QPoint, a: u32, n: u32, j: u32) -> QScalar {
    let (a, nn, j) = (a as i64, n as i64, j as i64);
    let one = QScalar::one;
    let num = (one() - point.q_pow(2 * (j + a)))
        * (one() - point.q_pow(2 * j))
        * (one() - point.q_pow(2 * (j + 2 * a + nn + 1)))
        * (one() - point.q_pow(2 * (j - a - nn - 1)));
    let den = (one() - point.q_pow(2 * (2 * j + 2 * a)))
        * (one() - point.q_pow(2 * (2 * j + 2 * a + 1)));
    point.q_pow(2 * a + 1) * num / den
}

/// Squared normalizations beta_0^2, ..., beta_N^2: the closed
/// q-Pochhammer form
///   beta_j^2 = q^(-2j(2a+1))
///     (q^(2a+3), -q^(2a+3), q^(2(2a+1)), q^(2(3a+N+2)), q^(-2N); q^2)_j
///   / (q^2, q^(2a+1), -q^(2a+1), q^(-2(a+N)), q^(2(2a+N+2)); q^2)_j,
/// evaluated as a running product of per-step factor ratios so the
/// intermediates stay as bounded as the values (the raw Pochhammer
/// numerators overflow binary64 on the larger grid cells).
pub fn beta_squared_all(point: &QPoint, a: u32, n: u32) -> Vec<QScalar> {
    let (a, nn) = (a as i64, n as i64);
    let numerator_bases = [
        point.q_pow(2 * a + 3),
        -point.q_pow(2 * a + 3),
        point.q_pow(2 * (2 * a + 1)),
        point.q_pow(2 * (3 * a + nn + 2)),
        point.q_pow(-2 * nn),
    ];
    let denominator_bases = [
        point.q_pow(2),
        point.q_pow(2 * a + 1),
        -point.q_pow(2 * a + 1),
        point.q_pow(-2 * (a + nn)),
        point.q_pow(2 * (2 * a + nn + 2)),
    ];
    let prefactor_step = point.q_pow(-2 * (2 * a + 1));
    let mut values = Vec::with_capacity(n as usize + 1);
    let mut current = QScalar::one();
    values.push(current.clone());
    let mut q2_pow = QScalar::one(); // q^(2(j-1)) as factors advance
    for _ in 1..=n {
        let mut step = prefactor_step.clone();
        for base in &numerator_bases {
            step = step * (QScalar::one() - base * &q2_pow);
        }
        for base in &denominator_bases {
            step = step / (QScalar::one() - base * &q2_pow);
        }
        current = current * step;
        values.push(current.clone());
        q2_pow = q2_pow * point.q_pow(2);
    }
    values
}

/// Single value beta_j^2 (see [`beta_squared_all`]).
pub fn beta_squared(point: &QPoint, a: u32, n: u32, j: u32) -> QScalar {
    beta_squared_all(point, a, n)[j as usize].clone()
}

/// The scalar m_q = q^(2N(3a+N+2)) (q^(-2(a+N)); q^2)_N / (q^(4(a+1)); q^2)_N.
pub fn m_factor(point: &QPoint, a: u32, n: u32) -> QScalar {
    let (a, nn) = (a as i64, n as i64);
    let q2 = point.q_pow(2);
    point.q_pow(2 * nn * (3 * a + nn + 2))
        * qpochhammer(&point.q_pow(-2 * (a + nn)), &q2, n)
        / qpochhammer(&point.q_pow(4 * (a + 1)), &q2, n)
}

/// q-Racah value R_i(mu(j)) in the model parameterization
/// (q^(2a), q^(2a), q^(2(3a+N+1)), q^(-2(a+N+1)) | q^2).
pub fn qracah_model_value(point: &QPoint, a: u32, n: u32, i: u32, j: u32) -> Result<QScalar> {
    qracah_model_with_scale(point, a, n, i, j).map(|(value, _)| value)
}

/// As [`qracah_model_value`], with the series term scale for float-mode
/// error budgets.
pub fn qracah_model_with_scale(
    point: &QPoint,
    a: u32,
    n: u32,
    i: u32,
    j: u32,
) -> Result<(QScalar, f64)> {
    let (ai, nn) = (a as i64, n as i64);
    let params = QRacahParams::new(
        i,
        j,
        point.q_pow(2 * ai),
        point.q_pow(2 * ai),
        point.q_pow(2 * (3 * ai + nn + 1)),
        point.q_pow(-2 * (ai + nn + 1)),
        point.q_pow(2),
        n,
    )?;
    qracah_with_scale(&params)
}

/// The same polynomial after the base change q -> q^(1/2): parameters
/// (u^a, u^a, u^(3a+N+1), u^(-a-N-1) | u). Identities stated in this
/// convention are verified directly in the native u variable.
pub fn qracah_halved_value(point: &QPoint, a: u32, n: u32, i: u32, j: u32) -> Result<QScalar> {
    qracah_halved_with_scale(point, a, n, i, j).map(|(value, _)| value)
}

/// As [`qracah_halved_value`], with the series term scale.
pub fn qracah_halved_with_scale(
    point: &QPoint,
    a: u32,
    n: u32,
    i: u32,
    j: u32,
) -> Result<(QScalar, f64)> {
    let (ai, nn) = (a as i64, n as i64);
    let params = QRacahParams::new(
        i,
        j,
        point.u_pow(ai),
        point.u_pow(ai),
        point.u_pow(3 * ai + nn + 1),
        point.u_pow(-ai - nn - 1),
        point.u_pow(1),
        n,
    )?;
    qracah_with_scale(&params)
}

/// Entrywise evaluation scale of the transition matrix in binary64:
/// |beta_j^2| times the series term scale of R_i(mu(j)). Absolute float
/// errors in P are bounded by this scale times machine epsilon.
pub fn transition_scale(model: &ModelRep) -> Result<Vec<f64>> {
    let dim = model.dim();
    let mut scales = vec![0f64; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let (_, s) =
                qracah_model_with_scale(&model.point, model.a, model.n, i as u32, j as u32)?;
            scales[i * dim + j] = model.beta_sq[j].abs_f64() * s;
        }
    }
    Ok(scales)
}

fn scale_product_norm(scales: &[f64], dim: usize) -> f64 {
    let mut worst = 0f64;
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = 0f64;
            for k in 0..dim {
                acc += scales[i * dim + k] * scales[k * dim + j];
            }
            worst = worst.max(acc);
        }
    }
    worst
}

/// Entrywise binary64 error scale of [`braid_from_casimir_matrix`]: the
/// idempotent construction bound weighted by the gamma coefficients.
pub fn braid_construction_scale(m: &QMatrix, point: &QPoint, a: u32) -> f64 {
    let scales = m.idempotent_scales(&chi_ladder(point, a, m.rows()));
    scales
        .iter()
        .enumerate()
        .map(|(r, s)| gamma_coefficient(point, a, r as u32).abs_f64() * s)
        .fold(0.0f64, f64::max)
        * m.rows() as f64
}

/// Braid matrix sum_r gamma_r E^(r) from the spectral idempotents of a
/// matrix whose spectrum is chi_a, ..., chi_(a+N).
pub fn braid_from_casimir_matrix(m: &QMatrix, point: &QPoint, a: u32) -> Result<QMatrix> {
    let eigenvalues = chi_ladder(point, a, m.rows());
    let idempotents = m.spectral_idempotents(&eigenvalues)?;
    let mut sum = QMatrix::zeros(m.rows(), m.cols());
    for (r, proj) in idempotents.iter().enumerate() {
        sum = &sum + &proj.scale(&gamma_coefficient(point, a, r as u32));
    }
    Ok(sum)
}

/// The assembled model at parameters (a, N): recurrence coefficients,
/// X1, X2, normalizations, braid matrices, transition matrix and m_q.
#[derive(Clone, Debug)]
pub struct ModelRep {
    pub a: u32,
    pub n: u32,
    pub point: QPoint,
    alpha_up: Vec<QScalar>,
    alpha_down: Vec<QScalar>,
    alpha_diag: Vec<QScalar>,
    pub x1: QMatrix,
    pub x2: QMatrix,
    pub beta_sq: Vec<QScalar>,
    pub gamma: Vec<QScalar>,
    pub s1: QMatrix,
    pub s2: QMatrix,
    pub transition: QMatrix,
    pub m_q: QScalar,
    /// Spectral idempotents of X2 over the eigenvalue ladder, kept for
    /// the checks that reuse the construction.
    x2_idempotents: Vec<QMatrix>,
}

impl ModelRep {
    pub fn new(a: u32, n: u32, point: &QPoint) -> Result<ModelRep> {
        point.ensure_admissible(4 * (3 * a + n + 2))?;
        let dim = n as usize + 1;

        let alpha_up: Vec<QScalar> = (1..=n).map(|j| alpha_upper(point, a, n, j)).collect();
        let alpha_down: Vec<QScalar> = (1..=n).map(|j| alpha_lower(point, a, n, j)).collect();
        let chi_a = chi(HalfInt::from_int(a as i64), &point.q());
        let alpha_diag: Vec<QScalar> = (0..=n)
            .map(|j| {
                let above = if j < n {
                    alpha_up[j as usize].clone()
                } else {
                    QScalar::zero()
                };
                let below = if j > 0 {
                    alpha_down[j as usize - 1].clone()
                } else {
                    QScalar::zero()
                };
                &chi_a - &(above + below)
            })
            .collect();

        let x1 = QMatrix::diagonal(&chi_ladder(point, a, dim));
        let mut x2 = QMatrix::zeros(dim, dim);
        for j in 0..dim {
            x2.set(j, j, alpha_diag[j].clone());
        }
        for j in 1..dim {
            x2.set(j - 1, j, alpha_up[j - 1].clone());
            x2.set(j, j - 1, alpha_down[j - 1].clone());
        }

        let beta_sq = beta_squared_all(point, a, n);
        let gamma: Vec<QScalar> = (0..=n).map(|r| gamma_coefficient(point, a, r)).collect();

        let s1 = braid_from_casimir_matrix(&x1, point, a)?;
        let x2_idempotents = x2.spectral_idempotents(&chi_ladder(point, a, dim))?;
        let mut s2 = QMatrix::zeros(dim, dim);
        for (r, proj) in x2_idempotents.iter().enumerate() {
            s2 = &s2 + &proj.scale(&gamma[r]);
        }

        let mut transition = QMatrix::zeros(dim, dim);
        for i in 0..=n {
            for j in 0..=n {
                let value = &beta_sq[j as usize] * qracah_model_value(point, a, n, i, j)?;
                transition.set(i as usize, j as usize, value);
            }
        }

        Ok(ModelRep {
            a,
            n,
            point: point.clone(),
            alpha_up,
            alpha_down,
            alpha_diag,
            x1,
            x2,
            beta_sq,
            gamma,
            s1,
            s2,
            transition,
            m_q: m_factor(point, a, n),
            x2_idempotents,
        })
    }

    /// Spectral idempotents of X2 (eigenvalue index ascending).
    pub fn x2_idempotents(&self) -> &[QMatrix] {
        &self.x2_idempotents
    }

    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }

    /// Recurrence coefficient alpha_(i,j) for |i - j| <= 1, with the
    /// boundary values alpha_(0,-1) = alpha_(N,N+1) = 0.
    pub fn alpha(&self, i: i64, j: i64) -> QScalar {
        let n = self.n as i64;
        if i < 0 || j < 0 || i > n || j > n {
            return QScalar::zero();
        }
        match j - i {
            0 => self.alpha_diag[i as usize].clone(),
            1 => self.alpha_up[i as usize].clone(),
            -1 => self.alpha_down[j as usize].clone(),
            _ => QScalar::zero(),
        }
    }

    fn params(&self) -> std::collections::BTreeMap<String, String> {
        params_of([
            ("a", self.a.to_string()),
            ("N", self.n.to_string()),
            ("u", self.point.to_string()),
        ])
    }

    /// The model at the inverted point (the q -> 1/q substitution).
    pub fn inverted(&self) -> Result<ModelRep> {
        ModelRep::new(self.a, self.n, &self.point.inverted())
    }
}

/// Structural invariants of the assembled model: row sums and trace of
/// X2, the telescoping form of beta^2, the symmetrizability relation,
/// the diagonal braid matrix and the idempotent axioms.
pub fn check_model_invariants(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "model_invariants", model.params(), |c| {
        let dim = model.dim();
        let chi_a = chi(HalfInt::from_int(model.a as i64), &model.point.q());

        let ones = vec![QScalar::one(); dim];
        let row_sums = model.x2.apply(&ones);
        for (j, sum) in row_sums.iter().enumerate() {
            let row_scale = (0..dim)
                .map(|k| model.x2[(j, k)].abs_f64())
                .fold(0.0, f64::max);
            c.eq_scalar_scaled(
                &format!("row {j} of X2 sums to chi_a"),
                sum,
                &chi_a,
                row_scale,
            );
        }
        c.eq_scalar("trace X2 = trace X1", &model.x2.trace(), &model.x1.trace());

        c.eq_scalar("beta_0^2 = 1", &model.beta_sq[0], &QScalar::one());
        let mut telescoped = QScalar::one();
        for j in 1..dim {
            telescoped = telescoped * &model.alpha_up[j - 1] / &model.alpha_down[j - 1];
            c.eq_scalar(
                &format!("beta_{j}^2 telescopes through the alpha ratios"),
                &model.beta_sq[j],
                &telescoped,
            );
        }
        for i in 0..dim - 1 {
            c.eq_scalar(
                &format!("beta_{i}^2 alpha_({i},{}) = beta_{}^2 alpha_({},{i})", i + 1, i + 1, i + 1),
                &(&model.beta_sq[i] * model.alpha(i as i64, i as i64 + 1)),
                &(&model.beta_sq[i + 1] * model.alpha(i as i64 + 1, i as i64)),
            );
        }

        c.eq_matrix("S1 = diag(gamma_r)", &model.s1, &QMatrix::diagonal(&model.gamma));

        let eigenvalues = chi_ladder(&model.point, model.a, dim);
        for (which, x) in [("X1", &model.x1), ("X2", &model.x2)] {
            let projectors = if which == "X2" {
                model.x2_idempotents.clone()
            } else {
                x.spectral_idempotents(&eigenvalues)?
            };
            // Construction-error scale of each Lagrange projector in
            // binary64, from the factor bound rather than the computed
            // entries.
            let idem_scales = x.idempotent_scales(&eigenvalues);
            let x_norm = x.max_abs_f64();
            let mut completeness = QMatrix::zeros(dim, dim);
            for (r, e_r) in projectors.iter().enumerate() {
                completeness = &completeness + e_r;
                for (p, e_p) in projectors.iter().enumerate() {
                    let product = e_r * e_p;
                    let hint = e_r
                        .product_scale(e_p)
                        .max(idem_scales[r] * e_p.max_abs_f64())
                        .max(idem_scales[p] * e_r.max_abs_f64());
                    if p == r {
                        c.eq_matrix_scaled(&format!("{which}: E_{r} idempotent"), &product, e_r, hint);
                    } else {
                        c.zero_matrix_scaled(&format!("{which}: E_{r} E_{p} = 0"), &product, hint);
                    }
                }
                let eigen_hint = e_r
                    .product_scale(x)
                    .max(idem_scales[r] * (x_norm + eigenvalues[r].abs_f64()));
                c.eq_matrix_scaled(
                    &format!("{which}: E_{r} eigen-relation"),
                    &(e_r * x),
                    &e_r.scale(&eigenvalues[r]),
                    eigen_hint,
                );
                c.eq_matrix_scaled(
                    &format!("{which}: eigen-relation commutes"),
                    &(e_r * x),
                    &(x * e_r),
                    eigen_hint.max(x.product_scale(e_r)),
                );
            }
            c.eq_matrix_scaled(
                &format!("{which}: sum E_r = I"),
                &completeness,
                &QMatrix::identity(dim),
                idem_scales.iter().fold(0.0f64, |acc, s| acc.max(*s)),
            );
        }
        Ok(())
    })
}

/// The similarity X2 P = P X1 (the three-term recurrence, column by
/// column) and invertibility of P.
pub fn check_prop31(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "transition_similarity", model.params(), |c| {
        let dim = model.dim();
        let p_scales = match model.point.mode() {
            Mode::Exact => vec![0f64; dim * dim],
            Mode::Float => transition_scale(model)?,
        };
        // Scale of X2 P and P X1 built from the evaluation scales of P.
        let mut sim_hint = 0f64;
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = 0f64;
                for k in 0..dim {
                    acc += model.x2[(i, k)].abs_f64() * p_scales[k * dim + j];
                }
                sim_hint = sim_hint
                    .max(acc)
                    .max(p_scales[i * dim + j] * model.x1[(j, j)].abs_f64());
            }
        }
        c.eq_matrix_scaled(
            "X2 P = P X1",
            &(&model.x2 * &model.transition),
            &(&model.transition * &model.x1),
            sim_hint,
        );
        match model.point.mode() {
            Mode::Exact => {
                let inv = model.transition.inverse()?;
                c.eq_matrix(
                    "P P^-1 = I",
                    &(&model.transition * &inv),
                    &QMatrix::identity(model.dim()),
                );
            }
            Mode::Float => {
                // Inverse-free invertibility witness: the closed-form
                // inverse from the orthogonality relation.
                let m_both = &model.m_q * m_factor(&model.point.inverted(), model.a, model.n);
                let witness = model.transition.scale(&m_both);
                c.eq_matrix_scaled(
                    "P (m_q m_(1/q) P) = I",
                    &(&model.transition * &witness),
                    &QMatrix::identity(model.dim()),
                    scale_product_norm(&p_scales, dim) * m_both.abs_f64(),
                );
            }
        }
        Ok(())
    })
}

/// The braid relation S1 S2 S1 = S2 S1 S2 and the two conjugation
/// identities moving X1 to X2.
pub fn check_prop33(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "braid_relation", model.params(), |c| {
        let s1s2 = &model.s1 * &model.s2;
        let s1s2s1 = &s1s2 * &model.s1;
        let s2s1 = &model.s2 * &model.s1;
        let s2s1s2 = &s2s1 * &model.s2;
        // Construction noise of S2 amplified through the products.
        let s2_noise = braid_construction_scale(&model.x2, &model.point, model.a);
        let dim2 = (model.dim() * model.dim()) as f64;
        let s1_norm = model.s1.max_abs_f64();
        let s2_norm = model.s2.max_abs_f64();
        let x_norm = model.x1.max_abs_f64().max(model.x2.max_abs_f64());
        let braid_noise = dim2 * s2_noise * (s1_norm * s1_norm + s1_norm * s2_norm);
        c.eq_matrix_scaled(
            "S1 S2 S1 = S2 S1 S2",
            &s1s2s1,
            &s2s1s2,
            s1s2
                .product_scale(&model.s1)
                .max(s2s1.product_scale(&model.s2))
                .max(braid_noise),
        );

        // Inverse-free forms of the two conjugations, equivalent because
        // the braid matrices are invertible.
        let conj_noise = dim2 * s2_noise * s1_norm * x_norm;
        c.eq_matrix_scaled(
            "X2 S1 S2 = S1 S2 X1",
            &(&model.x2 * &s1s2),
            &(&s1s2 * &model.x1),
            model
                .x2
                .product_scale(&s1s2)
                .max(s1s2.product_scale(&model.x1))
                .max(conj_noise),
        );
        c.eq_matrix_scaled(
            "S2 S1 X2 = X1 S2 S1",
            &(&s2s1 * &model.x2),
            &(&model.x1 * &s2s1),
            s2s1
                .product_scale(&model.x2)
                .max(model.x1.product_scale(&s2s1))
                .max(conj_noise),
        );

        if model.point.mode() == Mode::Exact {
            let s1_inv = model.s1.inverse()?;
            let s2_inv = model.s2.inverse()?;
            let forward = &(&(&s1s2 * &model.x1) * &s2_inv) * &s1_inv;
            c.eq_matrix("X2 = S1 S2 X1 S2^-1 S1^-1", &model.x2, &forward);
            let backward = &(&(&(&s1_inv * &s2_inv) * &model.x1) * &model.s2) * &model.s1;
            c.eq_matrix("X2 = S1^-1 S2^-1 X1 S2 S1", &model.x2, &backward);
            c.eq_scalar(
                "conjugation preserves the trace",
                &forward.trace(),
                &model.x1.trace(),
            );
        }
        Ok(())
    })
}

/// S1 S2 S1 = m_q P, the inverse form with m_(1/q), and the three
/// expressions for the normalization constant: the closed form, the
/// idempotent sum, and the very-well-poised series summation.
pub fn check_theorem34(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "braid_transition", model.params(), |c| {
        let dim = model.dim();
        let s1s2 = &model.s1 * &model.s2;
        let s1s2s1 = &s1s2 * &model.s1;
        let p_value_scale = match model.point.mode() {
            Mode::Exact => 0.0,
            Mode::Float => transition_scale(model)?.into_iter().fold(0.0, f64::max),
        };
        let s2_noise = braid_construction_scale(&model.x2, &model.point, model.a);
        let dim2 = (dim * dim) as f64;
        let s1_norm = model.s1.max_abs_f64();
        c.eq_matrix_scaled(
            "S1 S2 S1 = m_q P",
            &s1s2s1,
            &model.transition.scale(&model.m_q),
            s1s2
                .product_scale(&model.s1)
                .max(p_value_scale * model.m_q.abs_f64())
                .max(dim2 * s2_noise * s1_norm * s1_norm),
        );

        let m_inv_point = m_factor(&model.point.inverted(), model.a, model.n);
        let scaled_p = model.transition.scale(&m_inv_point);
        match model.point.mode() {
            Mode::Exact => {
                c.eq_matrix("(S1 S2 S1)^-1 = m_(1/q) P", &s1s2s1.inverse()?, &scaled_p);
                c.eq_matrix(
                    "(S1 S2 S1) m_(1/q) P = I",
                    &(&s1s2s1 * &scaled_p),
                    &QMatrix::identity(dim),
                );
            }
            Mode::Float => {
                // The inverse form evaluated through the substituted
                // point, where every factor is well scaled: the braid
                // product at 1/q equals m_(1/q) times the (invariant)
                // transition matrix.
                let inverted = model.inverted()?;
                let braid_inv = &(&inverted.s1 * &inverted.s2) * &inverted.s1;
                let expected = inverted.transition.scale(&m_inv_point);
                let p_bar_scale = transition_scale(&inverted)?
                    .into_iter()
                    .fold(0.0, f64::max);
                let s2_bar_noise =
                    braid_construction_scale(&inverted.x2, &inverted.point, inverted.a);
                let s1_bar_norm = inverted.s1.max_abs_f64();
                let hint = (&inverted.s1 * &inverted.s2)
                    .product_scale(&inverted.s1)
                    .max(p_bar_scale * m_inv_point.abs_f64())
                    .max(dim2 * s2_bar_noise * s1_bar_norm * s1_bar_norm);
                c.eq_matrix_scaled(
                    "S1 S2 S1 at 1/q = m_(1/q) P",
                    &braid_inv,
                    &expected,
                    hint,
                );
            }
        }

        let mut idempotent_sum = QScalar::zero();
        let mut term_scale = 0f64;
        for r in 0..dim {
            let term = &model.beta_sq[r] / &model.gamma[r];
            term_scale = term_scale.max(term.abs_f64());
            idempotent_sum = idempotent_sum + term;
        }
        c.eq_scalar_scaled(
            "m_q sum_r gamma_r^-1 beta_r^2 = 1",
            &(&model.m_q * &idempotent_sum),
            &QScalar::one(),
            term_scale * model.m_q.abs_f64(),
        );

        // The same sum through the very-well-poised summation formula.
        let (a, nn) = (model.a as i64, model.n as i64);
        let q2 = model.point.q_pow(2);
        let (series, closed) = crate::qseries::six_phi_four_sides(
            &q2,
            &model.point.q_pow(2 * a + 1),
            &model.point.q_pow(2 * (3 * a + nn + 2)),
            model.n,
        )?;
        c.eq_scalar_scaled("series form of the sum", &idempotent_sum, &series, term_scale);
        c.eq_scalar("summed series equals 1/m_q", &closed, &model.m_q.inv());
        Ok(())
    })
}

/// Entry formula for the second braid matrix:
/// (S2)_(i,j) = m_q gamma_i^-1 gamma_j^-1 beta_j^2 R_i(mu(j)).
pub fn check_corollary35(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "braid_entries", model.params(), |c| {
        let dim = model.dim();
        let expected = QMatrix::from_fn(dim, dim, |i, j| {
            &model.m_q * &model.transition[(i, j)] / (&model.gamma[i] * &model.gamma[j])
        });
        let hint = match model.point.mode() {
            Mode::Exact => 0.0,
            Mode::Float => {
                let p_scales = transition_scale(model)?;
                let mut hint = model
                    .x2
                    .idempotent_scales(&chi_ladder(&model.point, model.a, dim))
                    .into_iter()
                    .fold(0.0f64, f64::max);
                for i in 0..dim {
                    for j in 0..dim {
                        let weight = model.m_q.abs_f64()
                            / (model.gamma[i].abs_f64() * model.gamma[j].abs_f64());
                        hint = hint.max(weight * p_scales[i * dim + j]);
                    }
                }
                hint
            }
        };
        c.eq_matrix_scaled("S2 entries from q-Racah values", &model.s2, &expected, hint);
        Ok(())
    })
}

fn orthogonality_weight(point: &QPoint, a: i64, nn: i64, k: u32) -> QScalar {
    let num = qpochhammer_multi(
        &[
            point.u_pow(2 * a + 1),
            point.u_pow(3 * a + nn + 2),
            point.u_pow(-nn),
        ],
        &point.u_pow(1),
        k,
    );
    let den = qpochhammer_multi(
        &[
            point.u_pow(1),
            point.u_pow(-(a + nn)),
            point.u_pow(2 * a + nn + 2),
        ],
        &point.u_pow(1),
        k,
    );
    let k = k as i64;
    (QScalar::one() - point.u_pow(2 * a + 1 + 2 * k))
        / (point.u_pow(k * (2 * a + 1)) * (QScalar::one() - point.u_pow(2 * a + 1)))
        * num
        / den
}

/// Orthogonality: m_q m_(1/q) P^2 = I, and the normalized entrywise
/// relation in the halved-base convention, verified in the native u
/// variable.
pub fn check_orthogonality(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "orthogonality", model.params(), |c| {
        let dim = model.dim();
        let m_both = &model.m_q * m_factor(&model.point.inverted(), model.a, model.n);
        let p_sq_hint = match model.point.mode() {
            Mode::Exact => 0.0,
            Mode::Float => {
                scale_product_norm(&transition_scale(model)?, dim) * m_both.abs_f64()
            }
        };
        c.eq_matrix_scaled(
            "m_q m_(1/q) P^2 = I",
            &(&model.transition * &model.transition).scale(&m_both),
            &QMatrix::identity(dim),
            p_sq_hint,
        );

        let point = &model.point;
        let (a, nn) = (model.a as i64, model.n as i64);
        let u = point.u_pow(1);
        let mut racah = vec![vec![QScalar::zero(); dim]; dim];
        let mut racah_scale = vec![vec![0f64; dim]; dim];
        for i in 0..dim {
            for k in 0..dim {
                let (value, scale) =
                    qracah_halved_with_scale(point, model.a, model.n, i as u32, k as u32)?;
                racah[i][k] = value;
                racah_scale[i][k] = scale;
            }
        }
        let weights: Vec<QScalar> = (0..dim)
            .map(|k| orthogonality_weight(point, a, nn, k as u32))
            .collect();

        let norm_prefactor = qpochhammer_multi(
            &[point.u_pow(2 * a + 2), point.u_pow(-2 * a - nn - 1)],
            &u,
            model.n,
        ) / qpochhammer_multi(
            &[point.u_pow(-(a + nn)), point.u_pow(a + 1)],
            &u,
            model.n,
        );

        for i in 0..dim {
            let ii = i as i64;
            let norm_i = &norm_prefactor
                * point.u_pow(ii * (2 * a + 1))
                * (QScalar::one() - point.u_pow(2 * a + 1))
                / (QScalar::one() - point.u_pow(2 * a + 1 + 2 * ii))
                * qpochhammer_multi(
                    &[
                        point.u_pow(1),
                        point.u_pow(-(a + nn)),
                        point.u_pow(2 * a + nn + 2),
                    ],
                    &u,
                    i as u32,
                )
                / qpochhammer_multi(
                    &[
                        point.u_pow(2 * a + 1),
                        point.u_pow(3 * a + nn + 2),
                        point.u_pow(-nn),
                    ],
                    &u,
                    i as u32,
                );
            for j in 0..dim {
                let mut sum = QScalar::zero();
                let mut term_scale = 0f64;
                for k in 0..dim {
                    let term = &weights[k] * &racah[i][k] * &racah[j][k];
                    term_scale = term_scale
                        .max(weights[k].abs_f64() * racah_scale[i][k] * racah_scale[j][k]);
                    sum = sum + term;
                }
                let expected = if i == j { norm_i.clone() } else { QScalar::zero() };
                c.eq_scalar_scaled(
                    &format!("orthogonality entry ({i}, {j})"),
                    &sum,
                    &expected,
                    term_scale,
                );
            }
        }
        Ok(())
    })
}

/// The linearization identity: for all i, j,
/// sum_k c_k R_i(mu(k)) R_j(mu(k)) equals the stated closed-form multiple
/// of R_i(mu(j)), in the halved-base convention.
pub fn check_addition(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "addition_formula", model.params(), |c| {
        let dim = model.dim();
        let point = &model.point;
        let (a, nn) = (model.a as i64, model.n as i64);
        let u = point.u_pow(1);

        let mut racah = vec![vec![QScalar::zero(); dim]; dim];
        let mut racah_scale = vec![vec![0f64; dim]; dim];
        for i in 0..dim {
            for k in 0..dim {
                let (value, scale) =
                    qracah_halved_with_scale(point, model.a, model.n, i as u32, k as u32)?;
                racah[i][k] = value;
                racah_scale[i][k] = scale;
            }
        }

        let coeffs: Vec<QScalar> = (0..dim)
            .map(|k| {
                let kk = k as i64;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                QScalar::int(sign)
                    * point.u_pow(-binom2(kk) - kk * (3 * a + 2))
                    * (QScalar::one() - point.u_pow(2 * a + 1 + 2 * kk))
                    / (QScalar::one() - point.u_pow(2 * a + 1))
                    * qpochhammer_multi(
                        &[
                            point.u_pow(2 * a + 1),
                            point.u_pow(3 * a + nn + 2),
                            point.u_pow(-nn),
                        ],
                        &u,
                        k as u32,
                    )
                    / qpochhammer_multi(
                        &[
                            point.u_pow(1),
                            point.u_pow(-(a + nn)),
                            point.u_pow(2 * a + nn + 2),
                        ],
                        &u,
                        k as u32,
                    )
            })
            .collect();

        let pochhammer_ratio = qpochhammer(&point.u_pow(2 * a + 2), &u, model.n)
            / qpochhammer(&point.u_pow(a + 1), &u, model.n);

        for i in 0..dim {
            for j in 0..dim {
                let (ii, jj) = (i as i64, j as i64);
                let mut sum = QScalar::zero();
                let mut term_scale = 0f64;
                for k in 0..dim {
                    let term = &coeffs[k] * &racah[i][k] * &racah[j][k];
                    term_scale = term_scale
                        .max(coeffs[k].abs_f64() * racah_scale[i][k] * racah_scale[j][k]);
                    sum = sum + term;
                }
                let sign = if (ii + jj - nn).rem_euclid(2) == 0 { 1 } else { -1 };
                let prefactor = QScalar::int(sign)
                    * point.u_pow(binom2(ii) + binom2(jj) - binom2(nn) + (ii + jj - 2 * nn) * (a + 1))
                    * &pochhammer_ratio;
                let expected = &prefactor * &racah[i][j];
                let rhs_scale = prefactor.abs_f64() * racah_scale[i][j];
                c.eq_scalar_scaled(
                    &format!("linearization entry ({i}, {j})"),
                    &sum,
                    &expected,
                    term_scale.max(rhs_scale),
                );
            }
        }
        Ok(())
    })
}

/// P recovered from the recurrence operator:
/// P = m_q^-1 S1 (sum_r gamma_r prod_(k != r) (X2 - chi_(a+k)) /
/// (chi_(a+r) - chi_(a+k))) S1. At N = 1 the scalar closed forms and the
/// two-step recurrence expression are checked as well.
pub fn check_recurrence_transition(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "recurrence_transition", model.params(), |c| {
        let mut rebuilt = QMatrix::zeros(model.dim(), model.dim());
        for (r, proj) in model.x2_idempotents.iter().enumerate() {
            rebuilt = &rebuilt + &proj.scale(&model.gamma[r]);
        }
        let product = &(&model.s1 * &rebuilt) * &model.s1;
        let rhs = product.scale(&model.m_q.inv());
        let first = &model.s1 * &rebuilt;
        let hint = match model.point.mode() {
            Mode::Exact => 0.0,
            Mode::Float => {
                let mid_noise = braid_construction_scale(&model.x2, &model.point, model.a);
                let s1_norm = model.s1.max_abs_f64();
                let dim2 = (model.dim() * model.dim()) as f64;
                (first.product_scale(&model.s1) * model.m_q.inv().abs_f64())
                    .max(transition_scale(model)?.into_iter().fold(0.0, f64::max))
                    .max(dim2 * mid_noise * s1_norm * s1_norm * model.m_q.inv().abs_f64())
            }
        };
        c.eq_matrix_scaled(
            "P = m_q^-1 S1 (gamma-weighted idempotents of X2) S1",
            &model.transition,
            &rhs,
            hint,
        );
        if model.n == 1 {
            check_degree_one_forms(model, c)?;
        }
        Ok(())
    })
}

/// Degree-one closed forms: the braid-derived and recurrence-derived
/// expressions for R_1(mu(1)) agree with the polynomial value, and the
/// N = 1 recurrence coefficients have their product closed forms.
fn check_degree_one_forms(model: &ModelRep, c: &mut Checker) -> Result<()> {
    debug_assert_eq!(model.n, 1);
    let point = &model.point;
    let a = model.a as i64;
    let q = point.q();
    let chi_gap = chi(HalfInt::from_int(a + 1), &q) - chi(HalfInt::from_int(a), &q);
    let alpha01 = model.alpha(0, 1);
    let alpha10 = model.alpha(1, 0);

    let one_plus = QScalar::one() + point.q_pow(2 * (a + 1));
    let closed_alpha01 = -point.q_pow(-2 * a - 3)
        * (QScalar::one() - point.q_pow(2))
        * (QScalar::one() - point.q_pow(6 * (a + 1)))
        / &one_plus;
    c.eq_scalar("alpha_(0,1) closed form", &alpha01, &closed_alpha01);
    let closed_alpha10 = -point.q_pow(-1)
        * (QScalar::one() - point.q_pow(2))
        * (QScalar::one() - point.q_pow(2 * (a + 1)))
        / &one_plus;
    c.eq_scalar("alpha_(1,0) closed form", &alpha10, &closed_alpha10);
    let closed_gap = point.q_pow(-2 * a - 3)
        * (QScalar::one() - point.q_pow(2))
        * (QScalar::one() - point.q_pow(4 * (a + 1)));
    c.eq_scalar("chi gap closed form", &chi_gap, &closed_gap);

    let racah11 = qracah_model_value(point, model.a, 1, 1, 1)?;
    let braid_form = -&one_plus * &alpha10 / &alpha01 * (&one_plus * &alpha10 / &chi_gap + QScalar::one());
    c.eq_scalar("degree-one braid-derived form", &racah11, &braid_form);
    let recurrence_form = &chi_gap / &alpha01 + QScalar::one();
    c.eq_scalar("degree-one recurrence-derived form", &racah11, &recurrence_form);
    c.eq_scalar("the two degree-one forms agree", &braid_form, &recurrence_form);
    Ok(())
}

/// Appendix-style degree-one regression across the model: at N = 1 both
/// scalar routes to R_1(mu(1)) agree for the given a.
pub fn check_degree_one_regression(point: &QPoint, a: u32) -> VerificationReport {
    guarded(
        point.mode(),
        "degree_one_regression",
        params_of([
            ("a", a.to_string()),
            ("N", "1".to_string()),
            ("u", point.to_string()),
        ]),
        |c| {
            let model = ModelRep::new(a, 1, point)?;
            check_degree_one_forms(&model, c)
        },
    )
}

/// Invariance under q -> 1/q: P is unchanged and each S_i maps to its
/// inverse.
pub fn check_q_inversion(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "q_inversion", model.params(), |c| {
        let inverted = model.inverted()?;
        let p_hint = match model.point.mode() {
            Mode::Exact => 0.0,
            Mode::Float => transition_scale(model)?
                .into_iter()
                .chain(transition_scale(&inverted)?)
                .fold(0.0f64, f64::max),
        };
        c.eq_matrix_scaled(
            "P(1/q) = P(q)",
            &inverted.transition,
            &model.transition,
            p_hint,
        );
        match model.point.mode() {
            Mode::Exact => {
                c.eq_matrix("S1(1/q) = S1(q)^-1", &inverted.s1, &model.s1.inverse()?);
                c.eq_matrix("S2(1/q) = S2(q)^-1", &inverted.s2, &model.s2.inverse()?);
            }
            Mode::Float => {
                // Product form avoids inverting the badly scaled braid
                // matrices in binary64.
                let noise_here = braid_construction_scale(&model.x2, &model.point, model.a);
                let noise_there =
                    braid_construction_scale(&inverted.x2, &inverted.point, inverted.a);
                let dim2 = (model.dim() * model.dim()) as f64;
                for (label, there, back, noise) in [
                    ("S1(1/q) S1(q) = I", &inverted.s1, &model.s1, 0.0),
                    (
                        "S2(1/q) S2(q) = I",
                        &inverted.s2,
                        &model.s2,
                        dim2 * (noise_there * model.s2.max_abs_f64()
                            + noise_here * inverted.s2.max_abs_f64()),
                    ),
                ] {
                    c.eq_matrix_scaled(
                        label,
                        &(there * back),
                        &QMatrix::identity(model.dim()),
                        there.product_scale(back).max(noise),
                    );
                }
            }
        }
        Ok(())
    })
}

/// Self-duality of the transition entries: P_(i,j) / beta_j^2 =
/// P_(j,i) / beta_i^2, i.e. R_i(mu(j)) = R_j(mu(i)).
pub fn check_duality(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "qracah_duality", model.params(), |c| {
        for i in 0..model.dim() {
            for j in 0..i {
                let (there, scale_there) =
                    qracah_model_with_scale(&model.point, model.a, model.n, i as u32, j as u32)?;
                let (back, scale_back) =
                    qracah_model_with_scale(&model.point, model.a, model.n, j as u32, i as u32)?;
                c.eq_scalar_scaled(
                    &format!("duality at ({i}, {j})"),
                    &there,
                    &back,
                    scale_there.max(scale_back),
                );
                c.eq_scalar_scaled(
                    &format!("renormalized entries at ({i}, {j})"),
                    &(&model.transition[(i, j)] / &model.beta_sq[j]),
                    &(&model.transition[(j, i)] / &model.beta_sq[i]),
                    scale_there.max(scale_back),
                );
            }
        }
        Ok(())
    })
}

/// The quadratic-algebra relations with the central values substituted:
/// C_i -> chi_s I, C_123 -> chi_l I, C_12 -> X1, C_23 -> X2, for the spin
/// pair (s, l) realizing (a, N).
pub fn check_aw_model(model: &ModelRep) -> VerificationReport {
    guarded(model.point.mode(), "aw_model", model.params(), |c| {
        let point = &model.point;
        let q = point.q();
        let dim = model.dim();
        // s = (N + a)/2 and l = s + a always realize (a, N).
        let s = HalfInt::from_twice((model.n + model.a) as i64);
        let l = HalfInt::from_twice((model.n + 3 * model.a) as i64);
        let chi_s = chi(s, &q);
        let chi_l = chi(l, &q);

        let qdiff_sq = {
            let d = point.q_minus_qinv()?;
            &d * &d
        };
        let qsum = point.q_plus_qinv();
        let qsum_sq = &qsum * &qsum;
        let pair = &(&chi_s * &chi_s) + &(&chi_s * &chi_l);

        let qscale = q.abs_f64() + q.inv().abs_f64();
        let inner = model.x1.q_commutator(&model.x2, &q);
        let comm_scale = |left: &QMatrix, right: &QMatrix| {
            qscale * left.product_scale(right).max(right.product_scale(left))
        };
        let lhs1 = model.x2.q_commutator(&inner, &q).scale(&qdiff_sq.inv());
        let rhs1 = &(&model.x1.scale(&qsum_sq) + &model.x2.scale(&pair))
            - &QMatrix::scalar(dim, &(&qsum * &pair));
        let hint1 = comm_scale(&model.x2, &inner) * qdiff_sq.inv().abs_f64();
        c.eq_matrix_scaled("first quadratic relation", &lhs1, &rhs1, hint1);

        let lhs2 = inner.q_commutator(&model.x1, &q).scale(&qdiff_sq.inv());
        let rhs2 = &(&model.x2.scale(&qsum_sq) + &model.x1.scale(&pair))
            - &QMatrix::scalar(dim, &(&qsum * &pair));
        let hint2 = comm_scale(&inner, &model.x1) * qdiff_sq.inv().abs_f64();
        c.eq_matrix_scaled("second quadratic relation", &lhs2, &rhs2, hint2);
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point() -> QPoint {
        QPoint::exact(3, 5).unwrap()
    }

    #[test]
    fn model_params_examples() {
        assert_eq!(model_params(HalfInt::HALF, HalfInt::HALF).unwrap(), (0, 1));
        assert_eq!(
            model_params(HalfInt::ONE, HalfInt::from_int(3)).unwrap(),
            (2, 0)
        );
        assert_eq!(
            model_params(HalfInt::ONE, HalfInt::from_int(2)).unwrap(),
            (1, 1)
        );
        // l outside the admissible set: wrong parity or out of range.
        assert!(model_params(HalfInt::HALF, HalfInt::ONE).is_err());
        assert!(model_params(HalfInt::HALF, HalfInt::from_twice(5)).is_err());
    }

    #[test]
    fn gamma_values() {
        let p = point();
        for a in 0..3 {
            assert_eq!(gamma_coefficient(&p, a, 0), QScalar::one());
            assert_eq!(
                gamma_coefficient(&p, a, 1),
                -p.q_pow(2 * a as i64 + 2)
            );
            for r in 0..4 {
                let inv_point = gamma_coefficient(&p.inverted(), a, r);
                assert_eq!(inv_point, gamma_coefficient(&p, a, r).inv());
            }
        }
    }

    #[test]
    fn trivial_model_at_n_zero() {
        let p = point();
        for a in [0u32, 2] {
            let model = ModelRep::new(a, 0, &p).unwrap();
            let chi_a = chi(HalfInt::from_int(a as i64), &p.q());
            assert_eq!(model.x1, QMatrix::scalar(1, &chi_a));
            assert_eq!(model.x2, QMatrix::scalar(1, &chi_a));
            assert_eq!(model.s1, QMatrix::identity(1));
            assert_eq!(model.s2, QMatrix::identity(1));
            assert_eq!(model.transition, QMatrix::identity(1));
            assert_eq!(model.m_q, QScalar::one());
        }
    }

    #[test]
    fn appendix_values_at_a0_n1() {
        let p = point();
        let model = ModelRep::new(0, 1, &p).unwrap();
        let q = p.q();
        let one = QScalar::one();

        // alpha_(0,1) = -q^-3 (1-q^2)(1-q^6)/(1+q^2)
        let expected01 = -q.pow(-3) * (&one - &q.pow(2)) * (&one - &q.pow(6)) / (&one + &q.pow(2));
        assert_eq!(model.alpha(0, 1), expected01);
        // alpha_(1,0) = -q^-1 (1-q^2)^2/(1+q^2)
        let expected10 =
            -q.pow(-1) * (&one - &q.pow(2)) * (&one - &q.pow(2)) / (&one + &q.pow(2));
        assert_eq!(model.alpha(1, 0), expected10);
        // m_q = -q^4/(1+q^2)
        assert_eq!(model.m_q, -q.pow(4) / (&one + &q.pow(2)));
        // sum gamma_r^-1 beta_r^2 = -(1+q^2)/q^4
        let sum = &model.beta_sq[0] / &model.gamma[0] + &model.beta_sq[1] / &model.gamma[1];
        assert_eq!(sum, -(&one + &q.pow(2)) / q.pow(4));
        // S1 = diag(1, -q^2)
        assert_eq!(
            model.s1,
            QMatrix::diagonal(&[QScalar::one(), -q.pow(2)])
        );
        // First column of P is all ones.
        assert_eq!(model.transition.column(0), vec![QScalar::one(); 2]);
    }

    #[test]
    fn transition_inverse_at_a0_n1() {
        // P^-1 = m_q m_(1/q) P, from the orthogonality relation.
        let p = point();
        let model = ModelRep::new(0, 1, &p).unwrap();
        let m_both = &model.m_q * m_factor(&p.inverted(), 0, 1);
        assert_eq!(
            model.transition.inverse().unwrap(),
            model.transition.scale(&m_both)
        );
    }

    #[test]
    fn boundary_alphas_are_zero() {
        let model = ModelRep::new(1, 2, &point()).unwrap();
        assert!(model.alpha(0, -1).is_zero());
        assert!(model.alpha(2, 3).is_zero());
        assert!(model.alpha(0, 2).is_zero());
    }

    fn assert_passes(report: VerificationReport) {
        assert!(
            report.passed,
            "{} failed: {:?}",
            report.identity, report.detail
        );
    }

    #[test]
    fn model_checks_on_sample_points() {
        let p = point();
        for (a, n) in [(0, 1), (1, 2), (2, 3), (0, 4)] {
            let model = ModelRep::new(a, n, &p).unwrap();
            assert_passes(check_model_invariants(&model));
            assert_passes(check_prop31(&model));
            assert_passes(check_prop33(&model));
            assert_passes(check_theorem34(&model));
            assert_passes(check_corollary35(&model));
            assert_passes(check_orthogonality(&model));
            assert_passes(check_addition(&model));
            assert_passes(check_recurrence_transition(&model));
            assert_passes(check_q_inversion(&model));
            assert_passes(check_duality(&model));
            assert_passes(check_aw_model(&model));
        }
    }

    #[test]
    fn degree_one_regression_over_a() {
        let p = point();
        for a in 0..=3 {
            assert_passes(check_degree_one_regression(&p, a));
        }
    }

    #[test]
    fn float_mode_model_checks() {
        let p = QPoint::float(0.6).unwrap();
        let model = ModelRep::new(1, 3, &p).unwrap();
        assert_passes(check_prop33(&model));
        assert_passes(check_theorem34(&model));
        assert_passes(check_orthogonality(&model));
    }

    #[test]
    fn inadmissible_point_is_rejected() {
        let bad = QPoint::exact(1, 1).unwrap();
        assert!(matches!(
            ModelRep::new(0, 1, &bad),
            Err(Error::InadmissiblePoint(_))
        ));
    }
}
