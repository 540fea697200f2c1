//! Closed-form (eta, a_ij) pairs for each metric family, as tabulated for
//! that family, used to cross-check the detector's canonical factorization.
//!
//! Where a published table is suspected of a transcription slip the literal
//! variant is kept alongside the derivation-consistent one; the verifier
//! evaluates the literal form first and localizes any mismatch to a term
//! family instead of failing outright.

use super::{Family, MetricInstance};
use crate::algext::FieldElem;
use crate::error::{Error, Result};
use crate::ratfield::{var_x, var_y, RatFn};
use num_rational::BigRational;

/// A closed-form factorization candidate g_ij = eta * a_ij.
#[derive(Clone)]
pub struct PrintedPair {
    pub eta: FieldElem,
    pub a: Vec<Vec<FieldElem>>,
}

/// A variant of a printed formula: the identifier names the coefficient
/// choice, `note` the term family it differs in from the literal table.
#[derive(Clone)]
pub struct PrintedVariant {
    pub id: &'static str,
    pub note: &'static str,
    pub pair: PrintedPair,
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// y_i = alpha_ij y^j.
fn lower_y(alpha: &[Vec<RatFn>]) -> Vec<RatFn> {
    let n = alpha.len();
    (0..n)
        .map(|i| {
            let mut acc = RatFn::zero(n);
            for j in 0..n {
                acc = acc.add(&alpha[i][j].mul(&RatFn::var(n, var_y(n, j))));
            }
            acc
        })
        .collect()
}

fn rational_matrix_to_field(inst: &MetricInstance, m: Vec<Vec<RatFn>>) -> Vec<Vec<FieldElem>> {
    m.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| FieldElem::from_ratfn(&inst.kernel, e))
                .collect()
        })
        .collect()
}

/// The generalized Kropina factorization
/// eta = 1/s^{2k},
/// a_ij = (k+1) alpha_ij + k(2k+1)/s^2 b_i b_j - C/(alpha s) (b_i y_j + b_j y_i - s/alpha y_i y_j)
/// with the mixed coefficient C as a parameter: the tabulated value is
/// k(k+2); the value consistent with the metric-tensor derivation is 2k(k+1).
fn gen_kropina_pair(inst: &MetricInstance, k: u32, mixed_coef: BigRational) -> Result<PrintedPair> {
    let rd = inst.riemann_data.as_ref().unwrap();
    let of = inst.one_form.as_ref().unwrap();
    let n = rd.dim();
    let alpha = rd.alpha();
    let a2 = rd.alpha_sq();
    let beta = of.beta();
    let ylow = lower_y(alpha);
    // eta = (alpha^2)^k / beta^(2k)
    let eta_r = a2.powi(k as i64)?.div(&beta.powi(2 * k as i64)?)?;
    let eta = FieldElem::from_ratfn(&inst.kernel, eta_r);
    let s2_inv = a2.div(&beta.powi(2)?)?; // 1/s^2
    let inv_alpha_s = beta.inv()?; // 1/(alpha s) = 1/beta
    let s_over_alpha = beta.div(&a2)?; // s/alpha = beta/alpha^2
    let kq = BigRational::from_integer(k.into());
    let mut a = vec![vec![RatFn::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut e = alpha[i][j].scale(&(&kq + q(1, 1)));
            e = e.add(
                &s2_inv
                    .mul(&of.b()[i])
                    .mul(&of.b()[j])
                    .scale(&(&kq * (&kq + &kq + q(1, 1)))),
            );
            let mixed = of.b()[i]
                .mul(&ylow[j])
                .add(&of.b()[j].mul(&ylow[i]))
                .sub(&s_over_alpha.mul(&ylow[i]).mul(&ylow[j]));
            e = e.sub(&inv_alpha_s.mul(&mixed).scale(&mixed_coef));
            a[i][j] = e;
        }
    }
    Ok(PrintedPair {
        eta,
        a: rational_matrix_to_field(inst, a),
    })
}

/// The special polynomial (alpha,beta) table in its constant-block form:
/// alpha row  -(a^2(m-1) s^{2m} + b^2(k-1) s^{2k} + ab(m+k-2) s^{m+k})
/// b b row    (A s^{2m} + B s^{2k} + H s^{m+k})/s^2
/// mixed row  -(O s^{2m} + Z s^{2k} + U s^{m+k})/(s alpha) (b_i y_j + y_i b_j - s/alpha y_i y_j)
/// with H as a parameter: the first tabulation uses ab(m+k-1)(m+n) where n
/// is the manifold dimension, the restated block uses ab(m+k-1)(m+k).
fn poly_ab_pair(inst: &MetricInstance, k: u32, m: u32, h_coef: BigRational) -> Result<PrintedPair> {
    let rd = inst.riemann_data.as_ref().unwrap();
    let of = inst.one_form.as_ref().unwrap();
    let (ca, cb) = inst.poly_ab_coef.clone().unwrap();
    let n = rd.dim();
    let alpha = rd.alpha();
    let a2 = rd.alpha_sq();
    let beta = of.beta();
    let ylow = lower_y(alpha);
    let (ki, mi) = (k as i64, m as i64);
    // s^e for even e as a rational function
    let s_pow = |e: i64| -> Result<RatFn> {
        debug_assert!(e % 2 == 0);
        beta.powi(e)?.div(&a2.powi(e / 2)?)
    };
    let s2m = s_pow(2 * mi)?;
    let s2k = s_pow(2 * ki)?;
    let smk = s_pow(mi + ki)?;
    let aa = &ca * &ca;
    let bb = &cb * &cb;
    let ab = &ca * &cb;
    // alpha row
    let alpha_coef = s2m
        .scale(&(&aa * q(mi - 1, 1)))
        .add(&s2k.scale(&(&bb * q(ki - 1, 1))))
        .add(&smk.scale(&(&ab * q(mi + ki - 2, 1))))
        .neg();
    // b_i b_j row: (A s^{2m} + B s^{2k} + H s^{m+k})/s^2, 1/s^2 = alpha^2/beta^2
    let cap_a = &aa * q(mi * (2 * mi - 1), 1);
    let cap_b = &bb * q(ki * (2 * ki - 1), 1);
    let s2_inv = a2.div(&beta.powi(2)?)?;
    let bb_coef = s2m
        .scale(&cap_a)
        .add(&s2k.scale(&cap_b))
        .add(&smk.scale(&h_coef))
        .mul(&s2_inv);
    // mixed row: coefficients O, Z, U over (s alpha) = beta
    let cap_o = &aa * q(2 * mi * (mi - 1), 1);
    let cap_z = &bb * q(ki * (ki - 1), 1);
    let cap_u = &ab * q((mi + ki - 2) * (mi + ki), 1);
    let mixed_coef = s2m
        .scale(&cap_o)
        .add(&s2k.scale(&cap_z))
        .add(&smk.scale(&cap_u))
        .div(&beta)?
        .neg();
    let s_over_alpha = beta.div(&a2)?;
    let mut a = vec![vec![RatFn::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut e = alpha_coef.mul(&alpha[i][j]);
            e = e.add(&bb_coef.mul(&of.b()[i]).mul(&of.b()[j]));
            let mixed = of.b()[i]
                .mul(&ylow[j])
                .add(&of.b()[j].mul(&ylow[i]))
                .sub(&s_over_alpha.mul(&ylow[i]).mul(&ylow[j]));
            e = e.add(&mixed_coef.mul(&mixed));
            a[i][j] = e;
        }
    }
    Ok(PrintedPair {
        eta: FieldElem::one(&inst.kernel),
        a: rational_matrix_to_field(inst, a),
    })
}

/// m-th root factorization from the closed metric-tensor form:
/// eta = (1/m) A^{2/m - 2}, a_ij = A d_i d_j A + (2-m)/m d_i A d_j A.
fn mth_root_pair(inst: &MetricInstance) -> Result<PrintedPair> {
    let kernel = &inst.kernel;
    let m = kernel.m() as i64;
    let n = kernel.dim();
    let a_def = kernel.defining();
    let eta = FieldElem::theta_pow(kernel, 2 - 2 * m)?
        .mul_ratfn(&RatFn::constant(n, q(1, m)));
    let mut a = vec![vec![RatFn::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let di = a_def.pdiff(var_y(n, i));
            let dj = a_def.pdiff(var_y(n, j));
            a[i][j] = a_def
                .mul(&di.pdiff(var_y(n, j)))
                .add(&di.mul(&dj).scale(&q(2 - m, m)));
        }
    }
    Ok(PrintedPair {
        eta,
        a: rational_matrix_to_field(inst, a),
    })
}

/// Extended root factorization:
/// eta = A^{(2-2m)/m}, a_ij = (1/m) A d_i d_j A + (2-m)/m^2 d_i A d_j A.
fn extended_root_pair(inst: &MetricInstance) -> Result<PrintedPair> {
    let kernel = &inst.kernel;
    let m = kernel.m() as i64;
    let n = kernel.dim();
    let a_def = kernel.defining();
    let eta = FieldElem::theta_pow(kernel, 2 - 2 * m)?;
    let mut a = vec![vec![RatFn::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let di = a_def.pdiff(var_y(n, i));
            let dj = a_def.pdiff(var_y(n, j));
            a[i][j] = a_def
                .mul(&di.pdiff(var_y(n, j)))
                .scale(&q(1, m))
                .add(&di.mul(&dj).scale(&q(2 - m, m * m)));
        }
    }
    Ok(PrintedPair {
        eta,
        a: rational_matrix_to_field(inst, a),
    })
}

/// Kropina-change factorization:
/// eta = A^{(2k+2-m)/m}/beta^{2k},
/// a_ij = k(2k+1) A b_i b_j / beta^2 + (k+1)/m d_i d_j A
///      + (k+1)(2k+2-m)/(m^2 A) d_i A d_j A
///      - 2k(k+1)/(m beta) (b_j d_i A + b_i d_j A).
fn kropina_change_pair(inst: &MetricInstance, k: u32) -> Result<PrintedPair> {
    let kernel = &inst.kernel;
    let m = kernel.m() as i64;
    let ki = k as i64;
    let n = kernel.dim();
    let a_def = kernel.defining();
    let of = inst.one_form.as_ref().unwrap();
    let beta = of.beta();
    let eta = FieldElem::theta_pow(kernel, 2 * ki + 2 - m)?
        .mul_ratfn(&beta.powi(-2 * ki)?);
    let mut a = vec![vec![RatFn::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let di = a_def.pdiff(var_y(n, i));
            let dj = a_def.pdiff(var_y(n, j));
            let mut e = a_def
                .mul(&of.b()[i])
                .mul(&of.b()[j])
                .div(&beta.powi(2)?)?
                .scale(&q(ki * (2 * ki + 1), 1));
            e = e.add(&di.pdiff(var_y(n, j)).scale(&q(ki + 1, m)));
            e = e.add(
                &di.mul(&dj)
                    .div(a_def)?
                    .scale(&q((ki + 1) * (2 * ki + 2 - m), m * m)),
            );
            e = e.sub(
                &of.b()[j]
                    .mul(&di)
                    .add(&of.b()[i].mul(&dj))
                    .div(&beta)?
                    .scale(&q(2 * ki * (ki + 1), m)),
            );
            a[i][j] = e;
        }
    }
    Ok(PrintedPair {
        eta,
        a: rational_matrix_to_field(inst, a),
    })
}

/// The self-consistent closed-form pair for a family; None when the family
/// has no tabulated factorization (Randers is proved to admit none).
pub fn printed_pair(inst: &MetricInstance) -> Result<Option<PrintedPair>> {
    match inst.family {
        Family::Riemannian => {
            let rd = inst.riemann_data.as_ref().unwrap();
            Ok(Some(PrintedPair {
                eta: FieldElem::one(&inst.kernel),
                a: rational_matrix_to_field(inst, rd.alpha().to_vec()),
            }))
        }
        Family::GenKropina { k } => Ok(Some(gen_kropina_pair(
            inst,
            k,
            q(2 * k as i64 * (k as i64 + 1), 1),
        )?)),
        Family::PolyAb { k, m } => {
            let (ca, cb) = inst.poly_ab_coef.clone().unwrap();
            let h = &ca * &cb * q((m as i64 + k as i64 - 1) * (m as i64 + k as i64), 1);
            Ok(Some(poly_ab_pair(inst, k, m, h)?))
        }
        Family::MthRoot => Ok(Some(mth_root_pair(inst)?)),
        Family::ExtendedMthRoot => Ok(Some(extended_root_pair(inst)?)),
        Family::KropinaChange { k } => Ok(Some(kropina_change_pair(inst, k)?)),
        Family::Randers | Family::Raw => Ok(None),
    }
}

/// Literal tabulated variants that differ from the derivation-consistent
/// pair; used to localize suspected transcription slips to a term family.
pub fn printed_literal_variants(inst: &MetricInstance) -> Result<Vec<PrintedVariant>> {
    match inst.family {
        Family::GenKropina { k } => {
            let ki = k as i64;
            Ok(vec![PrintedVariant {
                id: "mixed-coefficient k(k+2)",
                note: "mixed (b_i y_j + b_j y_i - s/alpha y_i y_j) term family",
                pair: gen_kropina_pair(inst, k, q(ki * (ki + 2), 1))?,
            }])
        }
        Family::PolyAb { k, m } => {
            let (ca, cb) = inst.poly_ab_coef.clone().unwrap();
            let n = inst.dim() as i64;
            let h = &ca * &cb * q((m as i64 + k as i64 - 1) * (m as i64 + n), 1);
            Ok(vec![PrintedVariant {
                id: "b_i b_j coefficient with (m+n)",
                note: "b_i b_j term family",
                pair: poly_ab_pair(inst, k, m, h)?,
            }])
        }
        _ => Ok(vec![]),
    }
}

/// Printed logarithmic-derivative formulas (fiber and base) where the
/// family tabulates them; each entry is (claim id, formula values, whether
/// the tabulated constant is derivation-consistent).
pub struct PrintedDlog {
    pub id: &'static str,
    pub fiber: Vec<FieldElem>,
    pub base: Vec<FieldElem>,
    /// A known inconsistent scale between the tabulated constant and the
    /// derivative of the tabulated eta: the factor to multiply the literal
    /// value by to recover the consistent one (1 when the table is exact).
    pub literal_scale_to_consistent: BigRational,
}

pub fn printed_dlog(inst: &MetricInstance) -> Result<Option<PrintedDlog>> {
    let n = inst.dim();
    match inst.family {
        Family::GenKropina { k } => {
            let rd = inst.riemann_data.as_ref().unwrap();
            let of = inst.one_form.as_ref().unwrap();
            let a2 = rd.alpha_sq();
            let beta = of.beta();
            let kq = q(2 * k as i64, 1);
            let mut fiber = Vec::new();
            let mut base = Vec::new();
            for r in 0..n {
                // -2k b_r/beta + 2k alpha_ir y^i / alpha^2
                let da = a2.pdiff(var_y(n, r)); // 2 alpha_ir y^i
                let f = of.b()[r]
                    .div(&beta)?
                    .scale(&-kq.clone())
                    .add(&da.div(&a2)?.scale(&q(k as i64, 1)));
                fiber.push(FieldElem::from_ratfn(&inst.kernel, f));
                // -2k y^i d_r b_i / beta + k y^i y^j d_r alpha_ij / alpha^2
                let dbeta = beta.pdiff(var_x(n, r));
                let da2 = a2.pdiff(var_x(n, r));
                let b = dbeta
                    .div(&beta)?
                    .scale(&-kq.clone())
                    .add(&da2.div(&a2)?.scale(&q(k as i64, 1)));
                base.push(FieldElem::from_ratfn(&inst.kernel, b));
            }
            Ok(Some(PrintedDlog {
                id: "gen-kropina dlog eta",
                fiber,
                base,
                literal_scale_to_consistent: q(1, 1),
            }))
        }
        Family::MthRoot => {
            // tabulated: 2(1-m)/m^2 dA/A; the derivative of the tabulated
            // eta = (1/m)A^{2/m-2} is 2(1-m)/m dA/A, a factor m larger.
            let m = inst.kernel.m() as i64;
            let a_def = inst.kernel.defining();
            let c = q(2 * (1 - m), m * m);
            let mut fiber = Vec::new();
            let mut base = Vec::new();
            for r in 0..n {
                let f = a_def.pdiff(var_y(n, r)).div(a_def)?.scale(&c);
                fiber.push(FieldElem::from_ratfn(&inst.kernel, f));
                let b = a_def.pdiff(var_x(n, r)).div(a_def)?.scale(&c);
                base.push(FieldElem::from_ratfn(&inst.kernel, b));
            }
            Ok(Some(PrintedDlog {
                id: "m-th root dlog eta",
                fiber,
                base,
                literal_scale_to_consistent: q(m, 1),
            }))
        }
        Family::ExtendedMthRoot => {
            let m = inst.kernel.m() as i64;
            let a_def = inst.kernel.defining();
            let c = q(2 - 2 * m, m);
            let mut fiber = Vec::new();
            let mut base = Vec::new();
            for r in 0..n {
                let f = a_def.pdiff(var_y(n, r)).div(a_def)?.scale(&c);
                fiber.push(FieldElem::from_ratfn(&inst.kernel, f));
                let b = a_def.pdiff(var_x(n, r)).div(a_def)?.scale(&c);
                base.push(FieldElem::from_ratfn(&inst.kernel, b));
            }
            Ok(Some(PrintedDlog {
                id: "extended root dlog eta",
                fiber,
                base,
                literal_scale_to_consistent: q(1, 1),
            }))
        }
        _ => Ok(None),
    }
}

/// eta * a_ij as a field-element matrix, for comparison against g.
pub fn pair_product(pair: &PrintedPair) -> Result<Vec<Vec<FieldElem>>> {
    let mut out = Vec::with_capacity(pair.a.len());
    for row in &pair.a {
        let mut r = Vec::with_capacity(row.len());
        for e in row {
            r.push(pair.eta.mul(e)?);
        }
        out.push(r);
    }
    Ok(out)
}

#[allow(unused)]
fn _err_is_unused(_: Error) {}
