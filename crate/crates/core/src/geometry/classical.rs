//! Classical Riemannian computations from alpha_ij(x) alone: Christoffel
//! symbols, the curvature tensor R^i_{jkl}, and its spray contraction.
//! These never touch the Finslerian pipeline, so they serve as an
//! independent oracle for the Riemannian specialization.

use crate::error::{Error, Result};
use crate::ratfield::{var_x, var_y, RatFn};
use num_rational::BigRational;

/// Inverse of an x-only symmetric matrix of rational functions by adjugate.
pub fn invert_ratfn_matrix(m: &[Vec<RatFn>]) -> Result<Vec<Vec<RatFn>>> {
    let n = m.len();
    let det = det_ratfn(m);
    if det.is_zero() {
        return Err(Error::Degenerate);
    }
    let det_inv = det.inv()?;
    let mut out = vec![vec![RatFn::zero(m[0][0].n()); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor = minor(m, j, i);
            let mut c = det_ratfn(&minor);
            if (i + j) % 2 == 1 {
                c = c.neg();
            }
            out[i][j] = c.mul(&det_inv);
        }
    }
    Ok(out)
}

fn minor(m: &[Vec<RatFn>], row: usize, col: usize) -> Vec<Vec<RatFn>> {
    let n = m.len();
    let mut out = Vec::with_capacity(n - 1);
    for i in 0..n {
        if i == row {
            continue;
        }
        let mut r = Vec::with_capacity(n - 1);
        for j in 0..n {
            if j == col {
                continue;
            }
            r.push(m[i][j].clone());
        }
        out.push(r);
    }
    out
}

pub fn det_ratfn(m: &[Vec<RatFn>]) -> RatFn {
    let n = m.len();
    match n {
        0 => panic!("empty matrix"),
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let nvars = m[0][0].n();
            let mut acc = RatFn::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let d = det_ratfn(&minor(m, 0, j));
                let t = m[0][j].mul(&d);
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

/// Christoffel symbols gamma^i_{jk} of alpha_ij(x).
pub fn christoffel(alpha: &[Vec<RatFn>]) -> Result<Vec<Vec<Vec<RatFn>>>> {
    let n = alpha.len();
    let nv = alpha[0][0].n();
    let inv = invert_ratfn_matrix(alpha)?;
    let half = BigRational::new(1.into(), 2.into());
    let mut out = vec![vec![vec![RatFn::zero(nv); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let mut acc = RatFn::zero(nv);
                for s in 0..n {
                    let t = alpha[s][k]
                        .pdiff(var_x(nv, j))
                        .add(&alpha[s][j].pdiff(var_x(nv, k)))
                        .sub(&alpha[j][k].pdiff(var_x(nv, s)));
                    acc = acc.add(&inv[i][s].mul(&t));
                }
                let v = acc.scale(&half);
                out[i][j][k] = v.clone();
                out[i][k][j] = v;
            }
        }
    }
    Ok(out)
}

/// Classical curvature tensor
/// R^i_{jkl} = d gamma^i_{jl}/dx^k - d gamma^i_{jk}/dx^l
///           + gamma^i_{ks} gamma^s_{jl} - gamma^i_{ls} gamma^s_{jk}.
pub fn riemann_tensor(alpha: &[Vec<RatFn>]) -> Result<Vec<Vec<Vec<Vec<RatFn>>>>> {
    let n = alpha.len();
    let nv = alpha[0][0].n();
    let gamma = christoffel(alpha)?;
    let mut out = vec![vec![vec![vec![RatFn::zero(nv); n]; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut acc = gamma[i][j][l]
                        .pdiff(var_x(nv, k))
                        .sub(&gamma[i][j][k].pdiff(var_x(nv, l)));
                    for s in 0..n {
                        acc = acc.add(&gamma[i][k][s].mul(&gamma[s][j][l]));
                        acc = acc.sub(&gamma[i][l][s].mul(&gamma[s][j][k]));
                    }
                    out[i][j][k][l] = acc;
                }
            }
        }
    }
    Ok(out)
}

/// The spray contraction R^i_k(x,y) = R^i_{jkl} y^j y^l of the classical
/// tensor; for a Riemannian metric this must equal the Finslerian Riemann
/// curvature exactly.
pub fn riemann_spray_contraction(alpha: &[Vec<RatFn>]) -> Result<Vec<Vec<RatFn>>> {
    let n = alpha.len();
    let nv = alpha[0][0].n();
    let r = riemann_tensor(alpha)?;
    let mut out = vec![vec![RatFn::zero(nv); n]; n];
    for i in 0..n {
        for k in 0..n {
            let mut acc = RatFn::zero(nv);
            for j in 0..n {
                for l in 0..n {
                    let yj = RatFn::var(nv, var_y(n, j));
                    let yl = RatFn::var(nv, var_y(n, l));
                    acc = acc.add(&r[i][j][k][l].mul(&yj).mul(&yl));
                }
            }
            out[i][k] = acc;
        }
    }
    Ok(out)
}

/// Classical quadratic spray G^i = 1/2 gamma^i_{jk} y^j y^k.
pub fn classical_spray(alpha: &[Vec<RatFn>]) -> Result<Vec<RatFn>> {
    let n = alpha.len();
    let nv = alpha[0][0].n();
    let gamma = christoffel(alpha)?;
    let half = BigRational::new(1.into(), 2.into());
    let mut out = vec![RatFn::zero(nv); n];
    for i in 0..n {
        let mut acc = RatFn::zero(nv);
        for j in 0..n {
            for k in 0..n {
                let yj = RatFn::var(nv, var_y(n, j));
                let yk = RatFn::var(nv, var_y(n, k));
                acc = acc.add(&gamma[i][j][k].mul(&yj).mul(&yk));
            }
        }
        out[i] = acc.scale(&half);
    }
    Ok(out)
}
