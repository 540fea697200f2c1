//! The hyper-dual oracle: every tensor of the pipeline rebuilt numerically
//! from the floating evaluation of F^2 alone, by nesting first-order dual
//! numbers for derivatives and inverting matrices numerically. Symbolic
//! results are then compared entry by entry at random rational points.

use super::{eval_fieldelem, eval_ratfn, rel_close, Dual, Prec, Scalar};
use crate::algext::FieldElem;
use crate::error::{Error, Result};
use crate::geometry::{Session, WeylVariant};
use crate::metrics::validity::{draw_point, point_admissible};
use crate::metrics::MetricInstance;
use crate::ratfield::RatFn;
use num_rational::BigRational;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

/// Lift a point one dual level, seeding nothing.
fn lift<S: Scalar>(pt: &[S]) -> Vec<Dual<S>> {
    pt.iter().map(|v| Dual::lift(v.clone())).collect()
}

/// Lift and seed the derivative direction at variable slot `slot`.
fn lift_seed<S: Scalar>(pt: &[S], slot: usize) -> Vec<Dual<S>> {
    let mut out = lift(pt);
    out[slot].b = out[slot].a.one_like();
    out
}

/// Generic matrix inverse by adjugate over any scalar.
fn mat_inv<S: Scalar>(m: &[Vec<S>]) -> Vec<Vec<S>> {
    let n = m.len();
    let det = mat_det(m);
    let mut out = vec![vec![m[0][0].zero_like(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<S>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| m[r][c].clone())
                        .collect()
                })
                .collect();
            let mut c = mat_det(&minor);
            if (i + j) % 2 == 1 {
                c = c.neg();
            }
            out[i][j] = c.div(&det);
        }
    }
    out
}

fn mat_det<S: Scalar>(m: &[Vec<S>]) -> S {
    let n = m.len();
    match n {
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let mut acc = m[0][0].zero_like();
            for j in 0..n {
                let minor: Vec<Vec<S>> = (1..n)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| m[r][c].clone())
                            .collect()
                    })
                    .collect();
                let t = m[0][j].mul(&mat_det(&minor));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

/// The numeric pipeline over one squared metric.
pub struct NumericPipeline<'a> {
    f2: &'a FieldElem,
    sigma: &'a RatFn,
    n: usize,
}

impl<'a> NumericPipeline<'a> {
    pub fn new(f2: &'a FieldElem, sigma: &'a RatFn) -> Self {
        NumericPipeline {
            f2,
            sigma,
            n: f2.kernel().dim(),
        }
    }

    fn half<S: Scalar>(&self, tpl: &S) -> S {
        tpl.from_rat(&BigRational::new(1.into(), 2.into()))
    }

    /// g_ij = 1/2 d^2 F2/dy^i dy^j through two dual levels.
    pub fn g<S: Scalar>(&self, pt: &[S]) -> Vec<Vec<S>> {
        let n = self.n;
        let mut out = vec![vec![pt[0].zero_like(); n]; n];
        for i in 0..n {
            for j in i..n {
                let inner = lift_seed(pt, n + i);
                let mut outer = lift(&inner);
                outer[n + j].b = outer[n + j].a.one_like();
                let v = eval_fieldelem(self.f2, &outer);
                let h = self.half(&pt[0]).mul(&v.b.b);
                out[i][j] = h.clone();
                out[j][i] = h;
            }
        }
        out
    }

    pub fn ginv<S: Scalar>(&self, pt: &[S]) -> Vec<Vec<S>> {
        mat_inv(&self.g(pt))
    }

    /// C_ijk = 1/4 d^3 F2/dy^i dy^j dy^k.
    pub fn cartan<S: Scalar>(&self, pt: &[S]) -> Vec<Vec<Vec<S>>> {
        let n = self.n;
        let quarter = pt[0].from_rat(&BigRational::new(1.into(), 4.into()));
        let mut out = vec![vec![vec![pt[0].zero_like(); n]; n]; n];
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let l1 = lift_seed(pt, n + i);
                    let mut l2 = lift(&l1);
                    l2[n + j].b = l2[n + j].a.one_like();
                    let mut l3 = lift(&l2);
                    l3[n + k].b = l3[n + k].a.one_like();
                    let v = eval_fieldelem(self.f2, &l3);
                    let c = quarter.mul(&v.b.b.b);
                    for (a, b, cc) in [
                        (i, j, k),
                        (i, k, j),
                        (j, i, k),
                        (j, k, i),
                        (k, i, j),
                        (k, j, i),
                    ] {
                        out[a][b][cc] = c.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mean_cartan<S: Scalar>(&self, pt: &[S]) -> Vec<S> {
        let n = self.n;
        let ginv = self.ginv(pt);
        let c = self.cartan(pt);
        (0..n)
            .map(|k| {
                let mut acc = pt[0].zero_like();
                for i in 0..n {
                    for j in 0..n {
                        acc = acc.add(&ginv[i][j].mul(&c[i][j][k]));
                    }
                }
                acc
            })
            .collect()
    }

    /// G^i = 1/4 g^{ir} (y^k d^2 F2/dy^r dx^k - d F2/dx^r).
    pub fn spray<S: Scalar>(&self, pt: &[S]) -> Vec<S> {
        let n = self.n;
        let ginv = self.ginv(pt);
        let quarter = pt[0].from_rat(&BigRational::new(1.into(), 4.into()));
        let mut t = Vec::with_capacity(n);
        for r in 0..n {
            let mut acc = pt[0].zero_like();
            for k in 0..n {
                let inner = lift_seed(pt, n + r);
                let mut outer = lift(&inner);
                outer[k].b = outer[k].a.one_like();
                let v = eval_fieldelem(self.f2, &outer);
                acc = acc.add(&pt[n + k].mul(&v.b.b));
            }
            let d1 = eval_fieldelem(self.f2, &lift_seed(pt, r));
            t.push(acc.sub(&d1.b));
        }
        (0..n)
            .map(|i| {
                let mut acc = pt[0].zero_like();
                for r in 0..n {
                    acc = acc.add(&ginv[i][r].mul(&t[r]));
                }
                quarter.mul(&acc)
            })
            .collect()
    }

    /// N^i_j = d G^i / dy^j.
    pub fn barthel<S: Scalar>(&self, pt: &[S]) -> Vec<Vec<S>> {
        let n = self.n;
        let mut out = vec![vec![pt[0].zero_like(); n]; n];
        for j in 0..n {
            let g = self.spray(&lift_seed(pt, n + j));
            for i in 0..n {
                out[i][j] = g[i].b.clone();
            }
        }
        out
    }

    /// G^i_{jk} = d^2 G^i / dy^j dy^k.
    pub fn berwald_connection<S: Scalar>(&self, pt: &[S]) -> Vec<Vec<Vec<S>>> {
        let n = self.n;
        let mut out = vec![vec![vec![pt[0].zero_like(); n]; n]; n];
        for j in 0..n {
            for k in j..n {
                let l1 = lift_seed(pt, n + j);
                let mut l2 = lift(&l1);
                l2[n + k].b = l2[n + k].a.one_like();
                let g = self.spray(&l2);
                for i in 0..n {
                    out[i][j][k] = g[i].b.b.clone();
                    out[i][k][j] = g[i].b.b.clone();
                }
            }
        }
        out
    }

    /// G^i_{jkl} = d^3 G^i / dy^j dy^k dy^l.
    pub fn berwald_curvature<S: Scalar>(&self, pt: &[S]) -> Vec<Vec<Vec<Vec<S>>>> {
        let n = self.n;
        let mut out = vec![vec![vec![vec![pt[0].zero_like(); n]; n]; n]; n];
        for j in 0..n {
            for k in j..n {
                for l in k..n {
                    let l1 = lift_seed(pt, n + j);
                    let mut l2 = lift(&l1);
                    l2[n + k].b = l2[n + k].a.one_like();
                    let mut l3 = lift(&l2);
                    l3[n + l].b = l3[n + l].a.one_like();
                    let g = self.spray(&l3);
                    for i in 0..n {
                        let v = g[i].b.b.b.clone();
                        for (a, b, c) in [
                            (j, k, l),
                            (j, l, k),
                            (k, j, l),
                            (k, l, j),
                            (l, j, k),
                            (l, k, j),
                        ] {
                            out[i][a][b][c] = v.clone();
                        }
                    }
                }
            }
        }
        out
    }

    /// D^i_{jkl} = G^i_{jkl} - d^3(y^i N^s_s)/dy^j dy^k dy^l / (n+1).
    pub fn douglas<S: Scalar>(&self, pt: &[S]) -> Vec<Vec<Vec<Vec<S>>>> {
        let n = self.n;
        let bc = self.berwald_curvature(pt);
        let frac = pt[0].from_rat(&BigRational::new(1.into(), (n as i64 + 1).into()));
        let mut out = bc;
        for i in 0..n {
            for j in 0..n {
                for k in j..n {
                    for l in k..n {
                        let l1 = lift_seed(pt, n + j);
                        let mut l2 = lift(&l1);
                        l2[n + k].b = l2[n + k].a.one_like();
                        let mut l3 = lift(&l2);
                        l3[n + l].b = l3[n + l].a.one_like();
                        let nb = self.barthel(&l3);
                        let mut tr = l3[0].zero_like();
                        for s in 0..n {
                            tr = tr.add(&nb[s][s]);
                        }
                        let u = l3[n + i].mul(&tr);
                        let corr = frac.mul(&u.b.b.b);
                        let val = out[i][j][k][l].sub(&corr);
                        for (a, b, c) in [
                            (j, k, l),
                            (j, l, k),
                            (k, j, l),
                            (k, l, j),
                            (l, j, k),
                            (l, k, j),
                        ] {
                            out[i][a][b][c] = val.clone();
                        }
                    }
                }
            }
        }
        out
    }

    /// L_ijk = 1/2 y^m g_ms G^s_{ijk}.
    pub fn landsberg<S: Scalar>(&self, pt: &[S]) -> Vec<Vec<Vec<S>>> {
        let n = self.n;
        let g = self.g(pt);
        let bc = self.berwald_curvature(pt);
        let half = self.half(&pt[0]);
        let ylow: Vec<S> = (0..n)
            .map(|s| {
                let mut acc = pt[0].zero_like();
                for m in 0..n {
                    acc = acc.add(&pt[n + m].mul(&g[m][s]));
                }
                acc
            })
            .collect();
        let mut out = vec![vec![vec![pt[0].zero_like(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = pt[0].zero_like();
                    for s in 0..n {
                        acc = acc.add(&ylow[s].mul(&bc[s][i][j][k]));
                    }
                    out[i][j][k] = half.mul(&acc);
                }
            }
        }
        out
    }

    pub fn mean_landsberg<S: Scalar>(&self, pt: &[S]) -> Vec<S> {
        let n = self.n;
        let ginv = self.ginv(pt);
        let l = self.landsberg(pt);
        (0..n)
            .map(|k| {
                let mut acc = pt[0].zero_like();
                for i in 0..n {
                    for j in 0..n {
                        acc = acc.add(&ginv[i][j].mul(&l[i][j][k]));
                    }
                }
                acc
            })
            .collect()
    }

    /// R^i_k = 2 dG^i/dx^k - y^j dN^i_k/dx^j + 2 G^j G^i_{jk} - N^i_j N^j_k.
    pub fn riemann<S: Scalar>(&self, pt: &[S]) -> Vec<Vec<S>> {
        let n = self.n;
        let two = pt[0].from_rat(&BigRational::from_integer(2.into()));
        let spray = self.spray(pt);
        let nb = self.barthel(pt);
        let bc = self.berwald_connection(pt);
        // base derivatives of the spray and of N
        let mut dspray = vec![vec![pt[0].zero_like(); n]; n]; // [i][k] = dG^i/dx^k
        let mut dn = vec![vec![vec![pt[0].zero_like(); n]; n]; n]; // [i][k][j] = dN^i_k/dx^j
        for b in 0..n {
            let lp = lift_seed(pt, b);
            let g = self.spray(&lp);
            for i in 0..n {
                dspray[i][b] = g[i].b.clone();
            }
            let nbb = self.barthel(&lp);
            for i in 0..n {
                for k in 0..n {
                    dn[i][k][b] = nbb[i][k].b.clone();
                }
            }
        }
        let mut out = vec![vec![pt[0].zero_like(); n]; n];
        for i in 0..n {
            for k in 0..n {
                let mut acc = two.mul(&dspray[i][k]);
                for j in 0..n {
                    acc = acc.sub(&pt[n + j].mul(&dn[i][k][j]));
                    acc = acc.add(&two.mul(&spray[j]).mul(&bc[i][j][k]));
                    acc = acc.sub(&nb[i][j].mul(&nb[j][k]));
                }
                out[i][k] = acc;
            }
        }
        out
    }

    pub fn ricci<S: Scalar>(&self, pt: &[S]) -> S {
        let r = self.riemann(pt);
        let mut acc = pt[0].zero_like();
        for m in 0..self.n {
            acc = acc.add(&r[m][m]);
        }
        acc
    }

    pub fn weyl<S: Scalar>(&self, pt: &[S], variant: WeylVariant) -> Vec<Vec<S>> {
        let n = self.n;
        let frac = pt[0].from_rat(&BigRational::new(1.into(), (n as i64 + 1).into()));
        let q_at = |p: &[S]| -> Vec<Vec<S>> {
            let r = self.riemann(p);
            let mut ric = p[0].zero_like();
            for m in 0..n {
                ric = ric.add(&r[m][m]);
            }
            let f = p[0].from_rat(&BigRational::new(1.into(), (n as i64 + 1).into()));
            let mut q = r;
            for i in 0..n {
                q[i][i] = q[i][i].sub(&f.mul(&ric));
            }
            q
        };
        let q0 = q_at(pt);
        // dq[i][j][s] = d Q^i_j / dy^s
        let mut dq = vec![vec![vec![pt[0].zero_like(); n]; n]; n];
        for s in 0..n {
            let lp = lift_seed(pt, n + s);
            let r = self.riemann(&lp);
            let mut ric = lp[0].zero_like();
            for m in 0..n {
                ric = ric.add(&r[m][m]);
            }
            let f = lp[0].from_rat(&BigRational::new(1.into(), (n as i64 + 1).into()));
            for i in 0..n {
                for j in 0..n {
                    let mut v = r[i][j].clone();
                    if i == j {
                        v = v.sub(&f.mul(&ric));
                    }
                    dq[i][j][s] = v.b.clone();
                }
            }
        }
        let mut out = q0;
        for i in 0..n {
            for j in 0..n {
                let corr = match variant {
                    WeylVariant::Paper => {
                        let mut acc = pt[0].zero_like();
                        for s in 0..n {
                            acc = acc.add(&dq[i][s][s]);
                        }
                        acc
                    }
                    WeylVariant::Standard => {
                        let mut acc = pt[0].zero_like();
                        for s in 0..n {
                            acc = acc.add(&dq[s][j][s]);
                        }
                        acc
                    }
                };
                out[i][j] = out[i][j].sub(&frac.mul(&pt[n + i]).mul(&corr));
            }
        }
        out
    }

    pub fn chi<S: Scalar>(&self, pt: &[S]) -> Vec<S> {
        let n = self.n;
        let minus_sixth = pt[0].from_rat(&BigRational::new((-1i64).into(), 6.into()));
        let two = pt[0].from_rat(&BigRational::from_integer(2.into()));
        // dr[i][l][s] = d R^i_l/dy^s
        let mut dr = vec![vec![vec![pt[0].zero_like(); n]; n]; n];
        for s in 0..n {
            let lp = lift_seed(pt, n + s);
            let r = self.riemann(&lp);
            for i in 0..n {
                for l in 0..n {
                    dr[i][l][s] = r[i][l].b.clone();
                }
            }
        }
        (0..n)
            .map(|l| {
                let mut acc = pt[0].zero_like();
                for i in 0..n {
                    acc = acc.add(&two.mul(&dr[i][l][i]));
                }
                // d Ric/dy^l
                let mut dric = pt[0].zero_like();
                for m in 0..n {
                    dric = dric.add(&dr[m][m][l]);
                }
                minus_sixth.mul(&acc.add(&dric))
            })
            .collect()
    }

    /// S = N^m_m - y^m (d sigma/dx^m)/sigma.
    pub fn s_curvature<S: Scalar>(&self, pt: &[S]) -> S {
        let n = self.n;
        let nb = self.barthel(pt);
        let mut acc = pt[0].zero_like();
        for m in 0..n {
            acc = acc.add(&nb[m][m]);
        }
        let sig = eval_ratfn(self.sigma, pt);
        for m in 0..n {
            let ds = eval_ratfn(self.sigma, &lift_seed(pt, m)).b;
            acc = acc.sub(&pt[n + m].mul(&ds.div(&sig)));
        }
        acc
    }

    pub fn e_curvature<S: Scalar>(&self, pt: &[S]) -> Vec<Vec<S>> {
        let n = self.n;
        let half = self.half(&pt[0]);
        let mut out = vec![vec![pt[0].zero_like(); n]; n];
        for i in 0..n {
            for j in i..n {
                let l1 = lift_seed(pt, n + i);
                let mut l2 = lift(&l1);
                l2[n + j].b = l2[n + j].a.one_like();
                let s = self.s_curvature(&l2);
                let v = half.mul(&s.b.b);
                out[i][j] = v.clone();
                out[j][i] = v;
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub points_used: usize,
    pub tol_digits: i32,
    pub precision_digits: u32,
    pub max_rel_err: f64,
    pub per_object_max_err: BTreeMap<String, f64>,
    pub geodesic_residual_ok: bool,
    pub failures: Vec<String>,
}

impl OracleReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.points_used > 0
    }
}

fn err_of(a: &Prec, b: &Prec) -> f64 {
    let diff = a.sub(b).abs().to_f64();
    let scale = a.abs().to_f64().max(b.abs().to_f64()).max(1.0);
    diff / scale
}

/// Compare every symbolic tensor against the hyper-dual pipeline at seeded
/// random admissible points, and validate the symbolic spray against the
/// geodesic-equation residual 4 g_ir G^r = y^k d^2F2/dy^i dx^k - dF2/dx^i.
pub fn run_oracle(
    session: &Session,
    inst: &MetricInstance,
    points: usize,
    digits: u32,
    tol_digits: i32,
    seed: u64,
) -> Result<OracleReport> {
    let n = session.dim();
    let md = session.metric();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Vec<BigRational>> = Vec::new();
    let mut attempts = 0;
    while pts.len() < points && attempts < points * 500 {
        attempts += 1;
        let p = draw_point(&mut rng, n);
        if point_admissible(inst, md, &p) {
            pts.push(p);
        }
    }
    if pts.is_empty() {
        return Err(Error::Spec("no admissible oracle points found".into()));
    }
    let tpl = Prec::template_digits(digits);
    let num = NumericPipeline::new(md.f2(), session.volume().sigma());
    let mut report = OracleReport {
        points_used: pts.len(),
        tol_digits,
        precision_digits: digits,
        max_rel_err: 0.0,
        per_object_max_err: BTreeMap::new(),
        geodesic_residual_ok: true,
        failures: Vec::new(),
    };
    let (j_tensor, _) = session.mean_landsberg()?;

    for pt in &pts {
        let lifted: Vec<Prec> = pt.iter().map(|r| tpl.from_rat(r)).collect();
        let mut record = |name: &str, sym: &FieldElem, num_v: &Prec| {
            let sym_v = eval_fieldelem(sym, &lifted);
            let e = err_of(&sym_v, num_v);
            let slot = report.per_object_max_err.entry(name.to_string()).or_insert(0.0);
            if e > *slot {
                *slot = e;
            }
            if e > report.max_rel_err {
                report.max_rel_err = e;
            }
            if !rel_close(&sym_v, num_v, tol_digits) {
                report
                    .failures
                    .push(format!("{} at {:?}: rel err {:.3e}", name, pt, e));
            }
        };

        let g = num.g(&lifted);
        let ginv = num.ginv(&lifted);
        let cartan = num.cartan(&lifted);
        let mean_cartan = num.mean_cartan(&lifted);
        let spray = num.spray(&lifted);
        let barthel = num.barthel(&lifted);
        let bconn = num.berwald_connection(&lifted);
        let bcurv = num.berwald_curvature(&lifted);
        let douglas = num.douglas(&lifted);
        let lands = num.landsberg(&lifted);
        let mean_lands = num.mean_landsberg(&lifted);
        let riem = num.riemann(&lifted);
        let ricci = num.ricci(&lifted);
        let weyl_p = num.weyl(&lifted, WeylVariant::Paper);
        let weyl_s = num.weyl(&lifted, WeylVariant::Standard);
        let chi = num.chi(&lifted);
        let s_curv = num.s_curvature(&lifted);
        let e_curv = num.e_curvature(&lifted);

        for i in 0..n {
            record("mean_cartan", session.mean_cartan().entry(&[i]), &mean_cartan[i]);
            record("spray", session.spray().entry(&[i]), &spray[i]);
            record("mean_landsberg", j_tensor.entry(&[i]), &mean_lands[i]);
            record("chi", session.chi().entry(&[i]), &chi[i]);
            for j in 0..n {
                record("g", md.g().entry(&[i, j]), &g[i][j]);
                record("ginv", md.ginv().entry(&[i, j]), &ginv[i][j]);
                record("barthel", session.barthel().entry(&[i, j]), &barthel[i][j]);
                record("riemann", session.riemann().entry(&[i, j]), &riem[i][j]);
                record(
                    "weyl_paper",
                    session.weyl(WeylVariant::Paper).entry(&[i, j]),
                    &weyl_p[i][j],
                );
                record(
                    "weyl_standard",
                    session.weyl(WeylVariant::Standard).entry(&[i, j]),
                    &weyl_s[i][j],
                );
                record("e_curvature", session.e_curvature().entry(&[i, j]), &e_curv[i][j]);
                for k in 0..n {
                    record("cartan", session.cartan().entry(&[i, j, k]), &cartan[i][j][k]);
                    record(
                        "berwald_connection",
                        session.berwald_connection().entry(&[i, j, k]),
                        &bconn[i][j][k],
                    );
                    record("landsberg", session.landsberg().entry(&[i, j, k]), &lands[i][j][k]);
                    for l in 0..n {
                        record(
                            "berwald_curvature",
                            session.berwald_curvature().entry(&[i, j, k, l]),
                            &bcurv[i][j][k][l],
                        );
                        record(
                            "douglas",
                            session.douglas().entry(&[i, j, k, l]),
                            &douglas[i][j][k][l],
                        );
                    }
                }
            }
        }
        record("ricci", session.ricci(), &ricci);
        record("s_curvature", session.s_curvature(), &s_curv);

        // geodesic-equation residual for the symbolic spray
        for i in 0..n {
            let mut lhs = tpl.zero_like();
            for r in 0..n {
                let g_ir = eval_fieldelem(md.g().entry(&[i, r]), &lifted);
                let spray_r = eval_fieldelem(session.spray().entry(&[r]), &lifted);
                lhs = lhs.add(&g_ir.mul(&spray_r));
            }
            lhs = lhs.mul(&tpl.from_rat(&BigRational::from_integer(4.into())));
            let mut rhs = tpl.zero_like();
            for k in 0..n {
                let inner = lift_seed(&lifted, n + i);
                let mut outer = lift(&inner);
                outer[k].b = outer[k].a.one_like();
                let v = eval_fieldelem(md.f2(), &outer);
                rhs = rhs.add(&lifted[n + k].mul(&v.b.b));
            }
            let d1 = eval_fieldelem(md.f2(), &lift_seed(&lifted, i));
            rhs = rhs.sub(&d1.b);
            if !rel_close(&lhs, &rhs, tol_digits) {
                report.geodesic_residual_ok = false;
                report.failures.push(format!(
                    "geodesic residual at {:?}, direction {}: {} vs {}",
                    pt,
                    i,
                    lhs.to_f64(),
                    rhs.to_f64()
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{fundamental_tensor, Session, VolumeForm};
    use crate::metrics::{make_gen_kropina, OneFormData, RiemannData};

    #[test]
    fn oracle_on_x_dependent_kropina() {
        let n = 2;
        let mut alpha = vec![
            vec![RatFn::one(n), RatFn::zero(n)],
            vec![RatFn::zero(n), RatFn::one(n)],
        ];
        alpha[1][1] = RatFn::one(n).add(
            &RatFn::var(n, crate::ratfield::var_x(n, 0))
                .powi(2)
                .unwrap(),
        );
        let rd = RiemannData::new(alpha).unwrap();
        let of = OneFormData::new(vec![RatFn::one(n), RatFn::zero(n)]).unwrap();
        let inst = make_gen_kropina(rd, of, 1).unwrap();
        let md = fundamental_tensor(inst.f2.clone()).unwrap();
        let session = Session::new(md, VolumeForm::unit(n));
        let rep = run_oracle(&session, &inst, 3, 50, 20, 7).unwrap();
        assert!(rep.ok(), "failures: {:?}", rep.failures);
        assert!(rep.max_rel_err < 1e-20, "max err {}", rep.max_rel_err);
        assert!(rep.geodesic_residual_ok);
    }
}
