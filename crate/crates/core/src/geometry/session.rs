//! The tensor pipeline: from F^2 to every connection and curvature object,
//! computed lazily and cached once per session.

use super::{invert_matrix, Tensor, Variance};
use crate::algext::{FieldElem, KernelRef};
use crate::error::{Error, Result};
use crate::ratfield::{var_x, RatFn};
use std::sync::OnceLock;

use Variance::{Lower, Upper};

/// A volume form dV = sigma(x) dx^1 ^ ... ^ dx^n.
#[derive(Clone, Debug)]
pub struct VolumeForm {
    sigma: RatFn,
}

impl VolumeForm {
    pub fn new(sigma: RatFn) -> Result<VolumeForm> {
        if sigma.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !sigma.is_x_only() {
            return Err(Error::HomogeneityViolation(
                "volume form must depend on the base variables only".into(),
            ));
        }
        Ok(VolumeForm { sigma })
    }

    pub fn unit(n: usize) -> VolumeForm {
        VolumeForm {
            sigma: RatFn::one(n),
        }
    }

    pub fn sigma(&self) -> &RatFn {
        &self.sigma
    }
}

/// The fundamental tensor bundle of one squared metric.
#[derive(Clone)]
pub struct MetricData {
    f2: FieldElem,
    g: Tensor,
    ginv: Tensor,
    det_g: FieldElem,
}

/// g_ij = 1/2 d^2 F^2 / dy^i dy^j, with the inverse computed by adjugate
/// and determinant over K. Errors: NotHomogeneous when F^2 is not PH 2,
/// Degenerate when det g = 0.
pub fn fundamental_tensor(f2: FieldElem) -> Result<MetricData> {
    let kernel = f2.kernel().clone();
    let n = kernel.dim();
    if f2.is_zero() {
        return Err(Error::ZeroInput);
    }
    if f2.k_homogeneity_degree()? != 2 {
        return Err(Error::NotHomogeneous);
    }
    let half = num_rational::BigRational::new(1.into(), 2.into());
    let g = Tensor::from_fn_sym(n, vec![Lower, Lower], &[0, 1], |idx| {
        Ok(f2.pdiff_fiber(idx[0]).pdiff_fiber(idx[1]).scale(&half))
    })?;
    let rows: Vec<Vec<FieldElem>> = (0..n)
        .map(|i| (0..n).map(|j| g.entry(&[i, j]).clone()).collect())
        .collect();
    let (inv, det) = invert_matrix(&rows, &kernel)?;
    let ginv = Tensor::from_fn(n, vec![Upper, Upper], |idx| Ok(inv[idx[0]][idx[1]].clone()))?;
    Ok(MetricData {
        f2,
        g,
        ginv,
        det_g: det,
    })
}

impl MetricData {
    pub fn f2(&self) -> &FieldElem {
        &self.f2
    }

    pub fn g(&self) -> &Tensor {
        &self.g
    }

    pub fn ginv(&self) -> &Tensor {
        &self.ginv
    }

    pub fn det_g(&self) -> &FieldElem {
        &self.det_g
    }

    pub fn kernel(&self) -> &KernelRef {
        self.f2.kernel()
    }

    pub fn dim(&self) -> usize {
        self.f2.kernel().dim()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeylVariant {
    /// W^i_j = Q^i_j - y^i (sum_s d Q^i_s/dy^s)/(n+1), with i free in both
    /// factors of the correction.
    Paper,
    /// W^i_j = Q^i_j - y^i (sum_s d Q^s_j/dy^s)/(n+1).
    Standard,
}

/// Agreement status of the two mean-Landsberg routes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JAgreement {
    /// g^{ij} L_ijk equals the covariant route exactly.
    Exact,
    /// The two routes are exact negatives of each other (a sign-convention
    /// clash between the Landsberg contraction and the covariant route).
    SignFlipped,
}

/// One metric session: formulas are computed at most once and shared.
pub struct Session {
    md: MetricData,
    vol: VolumeForm,
    cartan: OnceLock<Tensor>,
    mean_cartan: OnceLock<Tensor>,
    spray: OnceLock<Tensor>,
    barthel: OnceLock<Tensor>,
    berwald_conn: OnceLock<Tensor>,
    berwald_curv: OnceLock<Tensor>,
    douglas: OnceLock<Tensor>,
    landsberg: OnceLock<Tensor>,
    mean_landsberg: OnceLock<std::result::Result<(Tensor, JAgreement), Error>>,
    riemann: OnceLock<Tensor>,
    ricci: OnceLock<FieldElem>,
    weyl_paper: OnceLock<Tensor>,
    weyl_standard: OnceLock<Tensor>,
    chi: OnceLock<Tensor>,
    s_curv: OnceLock<FieldElem>,
    e_curv: OnceLock<Tensor>,
}

impl Session {
    pub fn new(md: MetricData, vol: VolumeForm) -> Session {
        Session {
            md,
            vol,
            cartan: OnceLock::new(),
            mean_cartan: OnceLock::new(),
            spray: OnceLock::new(),
            barthel: OnceLock::new(),
            berwald_conn: OnceLock::new(),
            berwald_curv: OnceLock::new(),
            douglas: OnceLock::new(),
            landsberg: OnceLock::new(),
            mean_landsberg: OnceLock::new(),
            riemann: OnceLock::new(),
            ricci: OnceLock::new(),
            weyl_paper: OnceLock::new(),
            weyl_standard: OnceLock::new(),
            chi: OnceLock::new(),
            s_curv: OnceLock::new(),
            e_curv: OnceLock::new(),
        }
    }

    pub fn metric(&self) -> &MetricData {
        &self.md
    }

    pub fn volume(&self) -> &VolumeForm {
        &self.vol
    }

    pub fn dim(&self) -> usize {
        self.md.dim()
    }

    pub fn kernel(&self) -> &KernelRef {
        self.md.kernel()
    }

    fn y(&self, i: usize) -> FieldElem {
        FieldElem::y(self.kernel(), i)
    }

    /// Cartan torsion C_ijk = 1/2 d g_ij / dy^k, totally symmetric.
    pub fn cartan(&self) -> &Tensor {
        self.cartan.get_or_init(|| {
            let g = self.md.g();
            let half = num_rational::BigRational::new(1.into(), 2.into());
            Tensor::from_fn_sym(self.dim(), vec![Lower, Lower, Lower], &[0, 1, 2], |idx| {
                Ok(g.entry(&[idx[0], idx[1]]).pdiff_fiber(idx[2]).scale(&half))
            })
            .expect("cartan build")
        })
    }

    /// Mean Cartan torsion I_k = g^{ij} C_ijk.
    pub fn mean_cartan(&self) -> &Tensor {
        self.mean_cartan.get_or_init(|| {
            let n = self.dim();
            let c = self.cartan();
            let ginv = self.md.ginv();
            Tensor::from_fn(n, vec![Lower], |idx| {
                let k = idx[0];
                let mut acc = FieldElem::zero(self.kernel());
                for i in 0..n {
                    for j in 0..n {
                        acc = &acc + &(ginv.entry(&[i, j]) * c.entry(&[i, j, k]));
                    }
                }
                Ok(acc)
            })
            .expect("mean cartan build")
        })
    }

    /// Spray coefficients G^i = 1/4 g^{ir} (y^k d^2F^2/dy^r dx^k - dF^2/dx^r).
    pub fn spray(&self) -> &Tensor {
        self.spray.get_or_init(|| {
            let n = self.dim();
            let f2 = self.md.f2();
            let ginv = self.md.ginv();
            let quarter = num_rational::BigRational::new(1.into(), 4.into());
            // t_r = y^k d/dy^r d/dx^k F2 - d/dx^r F2
            let t: Vec<FieldElem> = (0..n)
                .map(|r| {
                    let mut acc = FieldElem::zero(self.kernel());
                    for k in 0..n {
                        let d2 = f2.pdiff_base(k).pdiff_fiber(r);
                        acc = &acc + &(&self.y(k) * &d2);
                    }
                    &acc - &f2.pdiff_base(r)
                })
                .collect();
            Tensor::from_fn(n, vec![Upper], |idx| {
                let i = idx[0];
                let mut acc = FieldElem::zero(self.kernel());
                for r in 0..n {
                    acc = &acc + &(ginv.entry(&[i, r]) * &t[r]);
                }
                Ok(acc.scale(&quarter))
            })
            .expect("spray build")
        })
    }

    /// Barthel (nonlinear) connection N^i_j = d G^i / dy^j.
    pub fn barthel(&self) -> &Tensor {
        self.barthel.get_or_init(|| {
            let mut t = self.spray().fiber_derivative();
            t = Tensor::from_fn(self.dim(), vec![Upper, Lower], |idx| {
                Ok(t.entry(idx).clone())
            })
            .expect("barthel variance");
            t
        })
    }

    /// Berwald connection G^i_{jk} = d N^i_j / dy^k, symmetric in (j,k).
    pub fn berwald_connection(&self) -> &Tensor {
        self.berwald_conn.get_or_init(|| self.barthel().fiber_derivative())
    }

    /// Berwald curvature G^i_{jkl}, totally symmetric in the lower indices.
    pub fn berwald_curvature(&self) -> &Tensor {
        self.berwald_curv
            .get_or_init(|| self.berwald_connection().fiber_derivative())
    }

    /// Douglas curvature
    /// D^i_{jkl} = G^i_{jkl} - d^3( y^i N^s_s )/dy^j dy^k dy^l / (n+1).
    pub fn douglas(&self) -> &Tensor {
        self.douglas.get_or_init(|| {
            let n = self.dim();
            let bc = self.berwald_curvature();
            let ntr = self.barthel_trace();
            let corr: Vec<Tensor> = (0..n)
                .map(|i| {
                    let base = &self.y(i) * &ntr;
                    let mut t = Tensor::from_fn(n, vec![], |_| Ok(base.clone())).unwrap();
                    t = t.fiber_derivative();
                    t = t.fiber_derivative();
                    t.fiber_derivative()
                })
                .collect();
            Tensor::from_fn(n, vec![Upper, Lower, Lower, Lower], |idx| {
                let c = corr[idx[0]].entry(&idx[1..]);
                let scaled = c.scale(&num_rational::BigRational::new(1.into(), (n as i64 + 1).into()));
                bc.entry(idx).sub(&scaled)
            })
            .expect("douglas build")
        })
    }

    fn barthel_trace(&self) -> FieldElem {
        let n = self.dim();
        let nb = self.barthel();
        let mut acc = FieldElem::zero(self.kernel());
        for s in 0..n {
            acc = &acc + nb.entry(&[s, s]);
        }
        acc
    }

    /// Landsberg curvature L_ijk = 1/2 y^m g_ms G^s_{ijk}.
    pub fn landsberg(&self) -> &Tensor {
        self.landsberg.get_or_init(|| {
            let n = self.dim();
            let g = self.md.g();
            let bc = self.berwald_curvature();
            // y_s = y^m g_ms
            let ylow: Vec<FieldElem> = (0..n)
                .map(|s| {
                    let mut acc = FieldElem::zero(self.kernel());
                    for m in 0..n {
                        acc = &acc + &(&self.y(m) * g.entry(&[m, s]));
                    }
                    acc
                })
                .collect();
            let half = num_rational::BigRational::new(1.into(), 2.into());
            Tensor::from_fn_sym(n, vec![Lower, Lower, Lower], &[0, 1, 2], |idx| {
                let mut acc = FieldElem::zero(self.kernel());
                for s in 0..n {
                    acc = &acc + &(&ylow[s] * bc.entry(&[s, idx[0], idx[1], idx[2]]));
                }
                Ok(acc.scale(&half))
            })
            .expect("landsberg build")
        })
    }

    /// Mean Landsberg curvature, computed both as g^{ij} L_ijk and through
    /// the covariant route y^s dI_k/dx^s - 2 G^s dI_k/dy^s - N^s_k I_s.
    /// The two must agree exactly; an overall sign flip between them is
    /// reported as a convention finding, anything else is an internal error.
    pub fn mean_landsberg(&self) -> Result<(&Tensor, JAgreement)> {
        let r = self.mean_landsberg.get_or_init(|| {
            let n = self.dim();
            let ginv = self.md.ginv();
            let l = self.landsberg();
            let j_g = Tensor::from_fn(n, vec![Lower], |idx| {
                let k = idx[0];
                let mut acc = FieldElem::zero(self.kernel());
                for i in 0..n {
                    for j in 0..n {
                        acc = &acc + &(ginv.entry(&[i, j]) * l.entry(&[i, j, k]));
                    }
                }
                Ok(acc)
            })?;
            let i_t = self.mean_cartan();
            let spray = self.spray();
            let nb = self.barthel();
            let j_cov = Tensor::from_fn(n, vec![Lower], |idx| {
                let k = idx[0];
                let ik = i_t.entry(&[k]);
                let mut acc = FieldElem::zero(self.kernel());
                for s in 0..n {
                    acc = &acc + &(&self.y(s) * &ik.pdiff_base(s));
                    let two = spray.entry(&[s]).scale(&num_rational::BigRational::from_integer(2.into()));
                    acc = &acc - &(&two * &ik.pdiff_fiber(s));
                    acc = &acc - &(nb.entry(&[s, k]) * i_t.entry(&[s]));
                }
                Ok(acc)
            })?;
            if j_g == j_cov {
                return Ok((j_g, JAgreement::Exact));
            }
            let neg = Tensor::from_fn(n, vec![Lower], |idx| Ok(j_cov.entry(idx).neg()))?;
            if j_g == neg {
                return Ok((j_g, JAgreement::SignFlipped));
            }
            Err(Error::InternalInconsistency {
                claim: "mean Landsberg dual formula".into(),
                detail: "the contraction route and the covariant route disagree beyond a global sign".into(),
            })
        });
        match r {
            Ok((t, a)) => Ok((t, *a)),
            Err(e) => Err(e.clone()),
        }
    }

    /// Riemann curvature
    /// R^i_k = 2 dG^i/dx^k - y^j d(N^i_k)/dx^j + 2 G^j G^i_{jk} - N^i_j N^j_k.
    pub fn riemann(&self) -> &Tensor {
        self.riemann.get_or_init(|| {
            let n = self.dim();
            let spray = self.spray();
            let nb = self.barthel();
            let bc = self.berwald_connection();
            let two = num_rational::BigRational::from_integer(2.into());
            Tensor::from_fn(n, vec![Upper, Lower], |idx| {
                let (i, k) = (idx[0], idx[1]);
                let mut acc = spray.entry(&[i]).pdiff_base(k).scale(&two);
                for j in 0..n {
                    acc = &acc - &(&self.y(j) * &nb.entry(&[i, k]).pdiff_base(j));
                    acc = &acc + &(&spray.entry(&[j]).scale(&two) * bc.entry(&[i, j, k]));
                    acc = &acc - &(nb.entry(&[i, j]) * nb.entry(&[j, k]));
                }
                Ok(acc)
            })
            .expect("riemann build")
        })
    }

    /// Ricci scalar Ric = R^m_m.
    pub fn ricci(&self) -> &FieldElem {
        self.ricci.get_or_init(|| {
            let n = self.dim();
            let r = self.riemann();
            let mut acc = FieldElem::zero(self.kernel());
            for m in 0..n {
                acc = &acc + r.entry(&[m, m]);
            }
            acc
        })
    }

    fn q_tensor(&self) -> Tensor {
        let n = self.dim();
        let r = self.riemann();
        let ric = self.ricci();
        let frac = ric.scale(&num_rational::BigRational::new(1.into(), (n as i64 + 1).into()));
        Tensor::from_fn(n, vec![Upper, Lower], |idx| {
            let e = r.entry(idx).clone();
            if idx[0] == idx[1] {
                e.sub(&frac)
            } else {
                Ok(e)
            }
        })
        .expect("projective part build")
    }

    /// Weyl projective curvature in the requested variant.
    pub fn weyl(&self, variant: WeylVariant) -> &Tensor {
        let slot = match variant {
            WeylVariant::Paper => &self.weyl_paper,
            WeylVariant::Standard => &self.weyl_standard,
        };
        slot.get_or_init(|| {
            let n = self.dim();
            let q = self.q_tensor();
            let c = num_rational::BigRational::new(1.into(), (n as i64 + 1).into());
            match variant {
                WeylVariant::Paper => {
                    // correction uses d Q^i_s / dy^s with the upper index i
                    // repeated, exactly as the defining equation is printed
                    let corr: Vec<FieldElem> = (0..n)
                        .map(|i| {
                            let mut acc = FieldElem::zero(self.kernel());
                            for s in 0..n {
                                acc = &acc + &q.entry(&[i, s]).pdiff_fiber(s);
                            }
                            acc
                        })
                        .collect();
                    Tensor::from_fn(n, vec![Upper, Lower], |idx| {
                        let (i, j) = (idx[0], idx[1]);
                        q.entry(&[i, j]).sub(&(&self.y(i) * &corr[i]).scale(&c))
                    })
                    .expect("weyl build")
                }
                WeylVariant::Standard => {
                    let corr: Vec<FieldElem> = (0..n)
                        .map(|j| {
                            let mut acc = FieldElem::zero(self.kernel());
                            for s in 0..n {
                                acc = &acc + &q.entry(&[s, j]).pdiff_fiber(s);
                            }
                            acc
                        })
                        .collect();
                    Tensor::from_fn(n, vec![Upper, Lower], |idx| {
                        let (i, j) = (idx[0], idx[1]);
                        q.entry(&[i, j]).sub(&(&self.y(i) * &corr[j]).scale(&c))
                    })
                    .expect("weyl build")
                }
            }
        })
    }

    /// chi_l = -(2 dR^i_l/dy^i + dRic/dy^l)/6.
    pub fn chi(&self) -> &Tensor {
        self.chi.get_or_init(|| {
            let n = self.dim();
            let r = self.riemann();
            let ric = self.ricci();
            let minus_sixth = num_rational::BigRational::new((-1i64).into(), 6.into());
            let two = num_rational::BigRational::from_integer(2.into());
            Tensor::from_fn(n, vec![Lower], |idx| {
                let l = idx[0];
                let mut acc = FieldElem::zero(self.kernel());
                for i in 0..n {
                    acc = &acc + &r.entry(&[i, l]).pdiff_fiber(i).scale(&two);
                }
                acc = &acc + &ric.pdiff_fiber(l);
                Ok(acc.scale(&minus_sixth))
            })
            .expect("chi build")
        })
    }

    /// S-curvature S = N^m_m - y^m (d sigma/dx^m)/sigma for the session
    /// volume form. The logarithmic term is rational, no symbolic log enters.
    pub fn s_curvature(&self) -> &FieldElem {
        self.s_curv
            .get_or_init(|| self.s_curvature_with(&self.vol.clone()))
    }

    /// S-curvature against an arbitrary volume form (uncached).
    pub fn s_curvature_with(&self, vol: &VolumeForm) -> FieldElem {
        let n = self.dim();
        let mut acc = self.barthel_trace();
        for m in 0..n {
            let dsig = vol.sigma().pdiff(var_x(n, m));
            if dsig.is_zero() {
                continue;
            }
            let ratio = dsig.div(vol.sigma()).expect("volume form is nonzero");
            let term = FieldElem::from_ratfn(self.kernel(), ratio);
            acc = &acc - &(&self.y(m) * &term);
        }
        acc
    }

    /// E-curvature E_ij = 1/2 d^2 S / dy^i dy^j.
    pub fn e_curvature(&self) -> &Tensor {
        self.e_curv.get_or_init(|| {
            let s = self.s_curvature().clone();
            let half = num_rational::BigRational::new(1.into(), 2.into());
            Tensor::from_fn_sym(self.dim(), vec![Lower, Lower], &[0, 1], |idx| {
                Ok(s.pdiff_fiber(idx[0]).pdiff_fiber(idx[1]).scale(&half))
            })
            .expect("e-curvature build")
        })
    }

    /// Horizontal basis derivative delta_k = d/dx^k - N^r_k d/dy^r.
    pub fn delta(&self, e: &FieldElem, k: usize) -> FieldElem {
        let n = self.dim();
        let nb = self.barthel();
        let mut acc = e.pdiff_base(k);
        for r in 0..n {
            acc = &acc - &(nb.entry(&[r, k]) * &e.pdiff_fiber(r));
        }
        acc
    }

    /// Berwald horizontal covariant derivative of a (0,2) tensor:
    /// T_{ij|k} = delta_k T_ij - T_sj G^s_{ik} - T_is G^s_{jk}.
    pub fn berwald_hcov(&self, t: &Tensor) -> Result<Tensor> {
        if t.rank() != 2 || t.variance() != [Lower, Lower] {
            return Err(Error::DimMismatch(
                "horizontal covariant derivative expects a (0,2) tensor".into(),
            ));
        }
        let n = self.dim();
        let bc = self.berwald_connection();
        Tensor::from_fn(n, vec![Lower, Lower, Lower], |idx| {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let mut acc = self.delta(t.entry(&[i, j]), k);
            for s in 0..n {
                acc = &acc - &(t.entry(&[s, j]) * bc.entry(&[s, i, k]));
                acc = &acc - &(t.entry(&[i, s]) * bc.entry(&[s, j, k]));
            }
            Ok(acc)
        })
    }
}
