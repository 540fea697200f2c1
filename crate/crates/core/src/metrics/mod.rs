//! Constructors for the metric families handled by the engine. Each returns
//! a `MetricInstance` holding the kernel, the squared metric F^2 as an
//! element of K, and enough family data to run printed-form cross-checks
//! and validity sampling.

pub mod printed;
pub mod validity;

use crate::algext::{FieldElem, KernelDesc, KernelRef};
use crate::error::{Error, Result};
use crate::geometry::classical::invert_ratfn_matrix;
use crate::ratfield::{var_y, RatFn};
use num_rational::BigRational;
use std::collections::BTreeMap;

/// Symmetric Riemannian data alpha_ij(x).
#[derive(Clone, Debug)]
pub struct RiemannData {
    n: usize,
    alpha: Vec<Vec<RatFn>>,
}

impl RiemannData {
    pub fn new(alpha: Vec<Vec<RatFn>>) -> Result<RiemannData> {
        let n = alpha.len();
        if n == 0 || alpha.iter().any(|r| r.len() != n) {
            return Err(Error::Arity("alpha must be a square matrix".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if !alpha[i][j].is_x_only() {
                    return Err(Error::Spec("alpha entries must depend on x only".into()));
                }
                if alpha[i][j] != alpha[j][i] {
                    return Err(Error::Spec("alpha must be symmetric".into()));
                }
            }
        }
        Ok(RiemannData { n, alpha })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &[Vec<RatFn>] {
        &self.alpha
    }

    /// alpha^2(x,y) = alpha_ij y^i y^j.
    pub fn alpha_sq(&self) -> RatFn {
        let n = self.n;
        let mut acc = RatFn::zero(n);
        for i in 0..n {
            for j in 0..n {
                acc = acc.add(
                    &self.alpha[i][j]
                        .mul(&RatFn::var(n, var_y(n, i)))
                        .mul(&RatFn::var(n, var_y(n, j))),
                );
            }
        }
        acc
    }

    pub fn inverse(&self) -> Result<Vec<Vec<RatFn>>> {
        invert_ratfn_matrix(&self.alpha)
    }
}

/// One-form data b_i(x).
#[derive(Clone, Debug)]
pub struct OneFormData {
    n: usize,
    b: Vec<RatFn>,
}

impl OneFormData {
    pub fn new(b: Vec<RatFn>) -> Result<OneFormData> {
        let n = b.len();
        if n == 0 {
            return Err(Error::Arity("empty one-form".into()));
        }
        for c in &b {
            if !c.is_x_only() {
                return Err(Error::Spec("one-form entries must depend on x only".into()));
            }
        }
        Ok(OneFormData { n, b })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn b(&self) -> &[RatFn] {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.b.iter().all(|c| c.is_zero())
    }

    /// beta(x,y) = b_i y^i.
    pub fn beta(&self) -> RatFn {
        let n = self.n;
        let mut acc = RatFn::zero(n);
        for i in 0..n {
            acc = acc.add(&self.b[i].mul(&RatFn::var(n, var_y(n, i))));
        }
        acc
    }
}

/// Coefficients of an m-way symmetric form. For the plain root metric the
/// entries depend on x only; the extended variant admits rational entries of
/// fiber homogeneity degree 0.
#[derive(Clone, Debug)]
pub struct RootData {
    n: usize,
    m: u32,
    coeffs: BTreeMap<Vec<usize>, RatFn>,
}

impl RootData {
    /// Entries are keyed by sorted index tuples of length m (0-based);
    /// unspecified entries are zero and symmetrization is implicit.
    pub fn new(n: usize, m: u32, entries: Vec<(Vec<usize>, RatFn)>) -> Result<RootData> {
        if m < 2 {
            return Err(Error::Spec("root order must be at least 2".into()));
        }
        let mut coeffs = BTreeMap::new();
        for (mut idx, c) in entries {
            if idx.len() != m as usize {
                return Err(Error::Arity(format!(
                    "coefficient index must have length {}",
                    m
                )));
            }
            if idx.iter().any(|&i| i >= n) {
                return Err(Error::Arity("coefficient index out of range".into()));
            }
            idx.sort_unstable();
            if coeffs.insert(idx, c).is_some() {
                return Err(Error::Spec("duplicate coefficient after symmetrization".into()));
            }
        }
        Ok(RootData { n, m, coeffs })
    }

    /// Build RootData from the full contraction A = a_{i1..im} y^{i1}..y^{im}
    /// given as a fiber-homogeneous polynomial of degree m with x-only
    /// coefficients: monomial y^e of multinomial multiplicity mu contributes
    /// the symmetric coefficient coeff/mu.
    pub fn from_contraction(n: usize, m: u32, a: &RatFn) -> Result<RootData> {
        if !a.is_poly() {
            return Err(Error::Spec(
                "root coefficients from a contraction require a polynomial".into(),
            ));
        }
        let mut entries = Vec::new();
        for (mono, c) in a.num().terms() {
            let mut idx = Vec::new();
            for i in 0..n {
                for _ in 0..mono[n + i] {
                    idx.push(i);
                }
            }
            if idx.len() != m as usize {
                return Err(Error::HomogeneityViolation(format!(
                    "term of fiber degree {} in a degree-{} form",
                    idx.len(),
                    m
                )));
            }
            let mut xpart = smallvec::SmallVec::<[u32; 8]>::from_slice(mono);
            for i in 0..n {
                xpart[n + i] = 0;
            }
            let mult = multiplicity(&idx);
            let coef = crate::ratfield::MPoly::monomial(
                n,
                xpart,
                c / BigRational::from_integer(mult.into()),
            );
            entries.push((idx, RatFn::from_poly(coef)));
        }
        // merge duplicate sorted tuples
        let mut merged: BTreeMap<Vec<usize>, RatFn> = BTreeMap::new();
        for (idx, c) in entries {
            let cur = merged.remove(&idx).unwrap_or_else(|| RatFn::zero(n));
            merged.insert(idx, cur.add(&c));
        }
        RootData::new(n, m, merged.into_iter().collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coeff(&self, idx: &[usize]) -> RatFn {
        let mut key = idx.to_vec();
        key.sort_unstable();
        self.coeffs
            .get(&key)
            .cloned()
            .unwrap_or_else(|| RatFn::zero(self.n))
    }

    /// The defining contraction mu_{i1..im} y^{i1} .. y^{im}, summed over
    /// all index tuples.
    pub fn contraction(&self) -> RatFn {
        let n = self.n;
        let mut acc = RatFn::zero(n);
        for (idx, c) in &self.coeffs {
            let mut term = c.scale(&BigRational::from_integer(multiplicity(idx).into()));
            for &i in idx {
                term = term.mul(&RatFn::var(n, var_y(n, i)));
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// True when all coefficients depend on x only.
    pub fn is_x_only(&self) -> bool {
        self.coeffs.values().all(|c| c.is_x_only())
    }
}

/// Number of distinct permutations of a sorted multiset of indices.
fn multiplicity(sorted_idx: &[usize]) -> i64 {
    let m = sorted_idx.len();
    let mut fact = vec![1i64; m + 1];
    for k in 1..=m {
        fact[k] = fact[k - 1] * k as i64;
    }
    let mut denom = 1i64;
    let mut run = 1usize;
    for k in 1..=m {
        if k < m && sorted_idx[k] == sorted_idx[k - 1] {
            run += 1;
        } else {
            denom *= fact[run];
            run = 1;
        }
    }
    fact[m] / denom
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Riemannian,
    Randers,
    GenKropina { k: u32 },
    PolyAb { k: u32, m: u32 },
    MthRoot,
    ExtendedMthRoot,
    KropinaChange { k: u32 },
    Raw,
}

/// A constructed metric: the kernel, F^2 in K, and the data needed by the
/// printed-form checks.
#[derive(Clone)]
pub struct MetricInstance {
    pub family: Family,
    pub kernel: KernelRef,
    pub f2: FieldElem,
    /// Accept nondegeneracy instead of positive definiteness when sampling.
    pub conic: bool,
    pub riemann_data: Option<RiemannData>,
    pub one_form: Option<OneFormData>,
    pub root_data: Option<RootData>,
    pub poly_ab_coef: Option<(BigRational, BigRational)>,
}

impl MetricInstance {
    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }
}

/// F^2 = alpha_ij y^i y^j over the trivial kernel.
pub fn make_riemannian(rd: RiemannData) -> Result<MetricInstance> {
    let n = rd.dim();
    let a2 = rd.alpha_sq();
    if a2.is_zero() {
        return Err(Error::Degenerate);
    }
    let kernel = KernelDesc::trivial(n);
    Ok(MetricInstance {
        family: Family::Riemannian,
        kernel: kernel.clone(),
        f2: FieldElem::from_ratfn(&kernel, a2),
        conic: false,
        riemann_data: Some(rd),
        one_form: None,
        root_data: None,
        poly_ab_coef: None,
    })
}

/// Randers metric F = alpha + beta with kernel theta = alpha (m = 2,
/// A = alpha^2): F^2 = A + 2 beta theta + beta^2. The norm bound
/// ||beta||_alpha < 1 is validated exactly at the given sample points.
pub fn make_randers(
    rd: RiemannData,
    of: OneFormData,
    sample_points_x: &[Vec<BigRational>],
) -> Result<MetricInstance> {
    let n = rd.dim();
    if of.dim() != n {
        return Err(Error::DimMismatch("one-form dimension".into()));
    }
    let a2 = rd.alpha_sq();
    let kernel = KernelDesc::new(2, a2.clone(), n)?;
    let beta = of.beta();
    // ||beta||^2_alpha = alpha^{ij} b_i b_j, an x-only rational function
    let inv = rd.inverse()?;
    let mut norm2 = RatFn::zero(n);
    for i in 0..n {
        for j in 0..n {
            norm2 = norm2.add(&inv[i][j].mul(&of.b()[i]).mul(&of.b()[j]));
        }
    }
    for px in sample_points_x {
        let mut pt = px.clone();
        pt.resize(2 * n, BigRational::from_integer(1.into()));
        let v = norm2
            .eval_rat(&pt)
            .ok_or_else(|| Error::NormViolation("norm undefined at sample point".into()))?;
        if v >= BigRational::from_integer(1.into()) {
            return Err(Error::NormViolation(format!(
                "||beta||^2 = {} at x = {:?}",
                v, px
            )));
        }
    }
    let mut f2 = FieldElem::from_ratfn(&kernel, a2.add(&beta.powi(2)?));
    let theta = FieldElem::theta(&kernel)?;
    let two_beta = FieldElem::from_ratfn(&kernel, beta.scale(&BigRational::from_integer(2.into())));
    f2 = f2.add(&two_beta.mul(&theta)?)?;
    Ok(MetricInstance {
        family: Family::Randers,
        kernel,
        f2,
        conic: false,
        riemann_data: Some(rd),
        one_form: Some(of),
        root_data: None,
        poly_ab_coef: None,
    })
}

/// Generalized Kropina F = alpha^{k+1}/beta^k with a positive integer k, so
/// F^2 = (alpha^2)^{k+1}/beta^{2k} is rational (trivial kernel). k = 1 is
/// the Kropina metric.
pub fn make_gen_kropina(rd: RiemannData, of: OneFormData, k: u32) -> Result<MetricInstance> {
    let n = rd.dim();
    if of.dim() != n {
        return Err(Error::DimMismatch("one-form dimension".into()));
    }
    if k == 0 {
        return Err(Error::Spec("generalized Kropina requires k >= 1".into()));
    }
    if of.is_zero() {
        return Err(Error::ZeroOneForm);
    }
    let a2 = rd.alpha_sq();
    let beta = of.beta();
    let f2 = a2.powi(k as i64 + 1)?.div(&beta.powi(2 * k as i64)?)?;
    let kernel = KernelDesc::trivial(n);
    Ok(MetricInstance {
        family: Family::GenKropina { k },
        kernel: kernel.clone(),
        f2: FieldElem::from_ratfn(&kernel, f2),
        conic: true,
        riemann_data: Some(rd),
        one_form: Some(of),
        root_data: None,
        poly_ab_coef: None,
    })
}

/// Special polynomial (alpha,beta)-metric with phi(s) = a s^k + b s^m and
/// k = m (mod 2), so F^2 expands with even alpha powers only and is
/// rational. The regularity inequality is sampled, not proven.
pub fn make_poly_ab(
    rd: RiemannData,
    of: OneFormData,
    ca: BigRational,
    cb: BigRational,
    k: u32,
    m: u32,
) -> Result<MetricInstance> {
    use num_traits::Zero;
    let n = rd.dim();
    if of.dim() != n {
        return Err(Error::DimMismatch("one-form dimension".into()));
    }
    if k % 2 != m % 2 {
        return Err(Error::ParityViolation(format!(
            "k = {} and m = {} must have equal parity",
            k, m
        )));
    }
    let a2 = rd.alpha_sq();
    let beta = of.beta();
    if (ca.is_zero() || k > 0) && of.is_zero() {
        return Err(Error::ZeroOneForm);
    }
    // F = ca beta^k alpha^{1-k} + cb beta^m alpha^{1-m}; square termwise so
    // only even alpha powers appear.
    let t2 = |c: &BigRational, e: u32| -> Result<RatFn> {
        // (c beta^e alpha^{1-e})^2 = c^2 beta^{2e} (alpha^2)^{1-e}
        Ok(beta
            .powi(2 * e as i64)?
            .mul(&a2.powi(1 - e as i64)?)
            .scale(&(c * c)))
    };
    let cross = beta
        .powi(k as i64 + m as i64)?
        .mul(&a2.powi((2 - k as i64 - m as i64) / 2)?)
        .scale(&(BigRational::from_integer(2.into()) * &ca * &cb));
    let f2 = t2(&ca, k)?.add(&cross).add(&t2(&cb, m)?);
    if f2.is_zero() {
        return Err(Error::ZeroInput);
    }
    let kernel = KernelDesc::trivial(n);
    Ok(MetricInstance {
        family: Family::PolyAb { k, m },
        kernel: kernel.clone(),
        f2: FieldElem::from_ratfn(&kernel, f2),
        conic: true,
        riemann_data: Some(rd),
        one_form: Some(of),
        root_data: None,
        poly_ab_coef: Some((ca, cb)),
    })
}

/// m-th root metric F = A^{1/m} with A = a_{i1..im}(x) y^{i1}..y^{im}:
/// kernel order m, F^2 = theta^2. Conic/pseudo data is accepted with a
/// nondegeneracy-only flag.
pub fn make_mth_root(root: RootData) -> Result<MetricInstance> {
    if root.order() < 3 {
        return Err(Error::Spec(
            "m-th root metrics require m >= 3; m = 2 is Riemannian".into(),
        ));
    }
    if !root.is_x_only() {
        return Err(Error::Spec(
            "m-th root coefficients must depend on x only; use the extended variant".into(),
        ));
    }
    let a = root.contraction();
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = root.dim();
    let kernel = KernelDesc::new(root.order(), a, n)?;
    let f2 = FieldElem::theta_pow(&kernel, 2)?;
    Ok(MetricInstance {
        family: Family::MthRoot,
        kernel,
        f2,
        conic: true,
        riemann_data: None,
        one_form: None,
        root_data: Some(root),
        poly_ab_coef: None,
    })
}

/// Extended m-th root metric: coefficients mu(x,y) rational of fiber
/// homogeneity 0, kernel A = mu_{i1..im} y^{i1}..y^{im}, F^2 = theta^2.
pub fn make_extended_mth_root(root: RootData) -> Result<MetricInstance> {
    if root.order() < 3 {
        return Err(Error::Spec("extended root metrics require m >= 3".into()));
    }
    for (idx, c) in root.coeffs.iter() {
        if c.is_zero() {
            continue;
        }
        let d = c.y_homogeneity_degree().map_err(|_| {
            Error::HomogeneityViolation(format!("mu{:?} is not fiber-homogeneous", idx))
        })?;
        if d != 0 {
            return Err(Error::HomogeneityViolation(format!(
                "mu{:?} has fiber degree {}, expected 0",
                idx, d
            )));
        }
    }
    let a = root.contraction();
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = root.dim();
    let kernel = KernelDesc::new(root.order(), a, n)?;
    let f2 = FieldElem::theta_pow(&kernel, 2)?;
    Ok(MetricInstance {
        family: Family::ExtendedMthRoot,
        kernel,
        f2,
        conic: true,
        riemann_data: None,
        one_form: None,
        root_data: Some(root),
        poly_ab_coef: None,
    })
}

/// Generalized Kropina change F~ = F^{k+1}/beta^k of a root metric:
/// F~^2 = theta^{2k+2}/beta^{2k} in the same kernel.
pub fn make_kropina_change(base: &MetricInstance, of: OneFormData, k: u32) -> Result<MetricInstance> {
    if !matches!(base.family, Family::MthRoot | Family::ExtendedMthRoot) {
        return Err(Error::Spec(
            "the Kropina change is applied to an (extended) m-th root base".into(),
        ));
    }
    if k == 0 {
        return Err(Error::Spec("Kropina change requires k >= 1".into()));
    }
    if of.is_zero() {
        return Err(Error::ZeroOneForm);
    }
    let n = base.dim();
    if of.dim() != n {
        return Err(Error::DimMismatch("one-form dimension".into()));
    }
    let beta = of.beta();
    let theta_pow = FieldElem::theta_pow(&base.kernel, 2 * k as i64 + 2)?;
    let f2 = theta_pow.mul_ratfn(&beta.powi(-2 * (k as i64))?);
    Ok(MetricInstance {
        family: Family::KropinaChange { k },
        kernel: base.kernel.clone(),
        f2,
        conic: true,
        riemann_data: base.riemann_data.clone(),
        one_form: Some(of),
        root_data: base.root_data.clone(),
        poly_ab_coef: None,
    })
}

/// Arbitrary F^2 in an explicitly given kernel.
pub fn make_raw(kernel: KernelRef, f2: FieldElem) -> Result<MetricInstance> {
    if f2.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(MetricInstance {
        family: Family::Raw,
        kernel,
        f2,
        conic: true,
        riemann_data: None,
        one_form: None,
        root_data: None,
        poly_ab_coef: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfield::var_x;

    fn euclid(n: usize) -> RiemannData {
        RiemannData::new(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { RatFn::one(n) } else { RatFn::zero(n) })
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn riemannian_f2() {
        let inst = make_riemannian(euclid(2)).unwrap();
        let n = 2;
        let expect = RatFn::var(n, var_y(n, 0))
            .powi(2)
            .unwrap()
            .add(&RatFn::var(n, var_y(n, 1)).powi(2).unwrap());
        assert_eq!(inst.f2.as_ratfn().unwrap(), &expect);
        // diag(1, x1^2+1)
        let mut a = euclid(2).alpha;
        a[1][1] = RatFn::var(n, var_x(n, 0)).powi(2).unwrap().add(&RatFn::one(n));
        let inst2 = make_riemannian(RiemannData::new(a).unwrap()).unwrap();
        let expect2 = RatFn::var(n, var_y(n, 0)).powi(2).unwrap().add(
            &RatFn::var(n, var_x(n, 0))
                .powi(2)
                .unwrap()
                .add(&RatFn::one(n))
                .mul(&RatFn::var(n, var_y(n, 1)).powi(2).unwrap()),
        );
        assert_eq!(inst2.f2.as_ratfn().unwrap(), &expect2);
    }

    #[test]
    fn randers_f2_expansion() {
        let n = 2;
        let of = OneFormData::new(vec![RatFn::constant(n, q(1, 2)), RatFn::zero(n)]).unwrap();
        let inst = make_randers(euclid(2), of, &[vec![q(0, 1), q(0, 1)]]).unwrap();
        // F2 = (y1^2 + y2^2) + theta*y1 + 1/4 y1^2
        let y1 = RatFn::var(n, var_y(n, 0));
        let y2 = RatFn::var(n, var_y(n, 1));
        let c0 = y1
            .powi(2)
            .unwrap()
            .add(&y2.powi(2).unwrap())
            .add(&y1.powi(2).unwrap().scale(&q(1, 4)));
        assert_eq!(inst.f2.coeff(0), &c0);
        assert_eq!(inst.f2.coeff(1), &y1);
        assert_eq!(
            inst.f2.theta_support().into_iter().collect::<Vec<_>>(),
            vec![0, 1]
        );
        // b = 0 reduces to the Riemannian support {0}
        let zero_of = OneFormData::new(vec![RatFn::zero(n), RatFn::zero(n)]).unwrap();
        let inst0 = make_randers(euclid(2), zero_of, &[]).unwrap();
        assert_eq!(
            inst0.f2.theta_support().into_iter().collect::<Vec<_>>(),
            vec![0]
        );
        // norm violation
        let big = OneFormData::new(vec![RatFn::from_int(n, 2), RatFn::zero(n)]).unwrap();
        assert!(matches!(
            make_randers(euclid(2), big, &[vec![q(0, 1), q(0, 1)]]),
            Err(Error::NormViolation(_))
        ));
    }

    #[test]
    fn gen_kropina_f2() {
        let n = 2;
        let of = OneFormData::new(vec![RatFn::one(n), RatFn::zero(n)]).unwrap();
        let k1 = make_gen_kropina(euclid(2), of.clone(), 1).unwrap();
        let y1 = RatFn::var(n, var_y(n, 0));
        let y2 = RatFn::var(n, var_y(n, 1));
        let a2 = y1.powi(2).unwrap().add(&y2.powi(2).unwrap());
        assert_eq!(
            k1.f2.as_ratfn().unwrap(),
            &a2.powi(2).unwrap().div(&y1.powi(2).unwrap()).unwrap()
        );
        let k2 = make_gen_kropina(euclid(2), of, 2).unwrap();
        assert_eq!(
            k2.f2.as_ratfn().unwrap(),
            &a2.powi(3).unwrap().div(&y1.powi(4).unwrap()).unwrap()
        );
        let zero_of = OneFormData::new(vec![RatFn::zero(n), RatFn::zero(n)]).unwrap();
        assert!(matches!(
            make_gen_kropina(euclid(2), zero_of, 1),
            Err(Error::ZeroOneForm)
        ));
    }

    #[test]
    fn poly_ab_f2() {
        let n = 2;
        let of = OneFormData::new(vec![RatFn::constant(n, q(1, 2)), RatFn::zero(n)]).unwrap();
        // (k,m) = (0,2): F = alpha + beta^2/alpha, F2 = (alpha^2 + beta^2)^2/alpha^2
        let inst = make_poly_ab(euclid(2), of.clone(), q(1, 1), q(1, 1), 0, 2).unwrap();
        let a2 = RatFn::var(n, var_y(n, 0))
            .powi(2)
            .unwrap()
            .add(&RatFn::var(n, var_y(n, 1)).powi(2).unwrap());
        let beta = RatFn::var(n, var_y(n, 0)).scale(&q(1, 2));
        let expect = a2
            .add(&beta.powi(2).unwrap())
            .powi(2)
            .unwrap()
            .div(&a2)
            .unwrap();
        assert_eq!(inst.f2.as_ratfn().unwrap(), &expect);
        // (k,m) = (1,3): F = beta + beta^3/alpha^2
        let inst2 = make_poly_ab(euclid(2), of, q(1, 1), q(1, 1), 1, 3).unwrap();
        let expect2 = beta
            .add(&beta.powi(3).unwrap().div(&a2).unwrap())
            .powi(2)
            .unwrap();
        assert_eq!(inst2.f2.as_ratfn().unwrap(), &expect2);
        // parity violation
        assert!(matches!(
            make_poly_ab(
                euclid(2),
                OneFormData::new(vec![RatFn::one(n), RatFn::zero(n)]).unwrap(),
                q(1, 1),
                q(1, 1),
                1,
                2
            ),
            Err(Error::ParityViolation(_))
        ));
    }

    #[test]
    fn mth_root_and_change() {
        let n = 3;
        // A = y1 y2 y3 via the contraction constructor
        let a = RatFn::var(n, var_y(n, 0))
            .mul(&RatFn::var(n, var_y(n, 1)))
            .mul(&RatFn::var(n, var_y(n, 2)));
        let root = RootData::from_contraction(n, 3, &a).unwrap();
        assert_eq!(root.coeff(&[0, 1, 2]), RatFn::constant(n, q(1, 6)));
        assert_eq!(root.contraction(), a);
        let inst = make_mth_root(root).unwrap();
        assert_eq!(
            inst.f2.theta_support().into_iter().collect::<Vec<_>>(),
            vec![2]
        );
        // Kropina change k=1, b=(1,1,1): F~2 = theta^4/beta^2 = A theta / beta^2
        let of = OneFormData::new(vec![RatFn::one(n); 3]).unwrap();
        let tilde = make_kropina_change(&inst, of, 1).unwrap();
        assert_eq!(
            tilde.f2.theta_support().into_iter().collect::<Vec<_>>(),
            vec![1]
        );
        let beta = RatFn::var(n, var_y(n, 0))
            .add(&RatFn::var(n, var_y(n, 1)))
            .add(&RatFn::var(n, var_y(n, 2)));
        assert_eq!(
            tilde.f2.coeff(1),
            &a.div(&beta.powi(2).unwrap()).unwrap()
        );
    }

    #[test]
    fn extended_root_checks() {
        let n = 2;
        // mu_111 = y2/(y1+y2) (PH 0), mu_112 = mu_122 = mu_222 = 1
        let y1 = RatFn::var(n, var_y(n, 0));
        let y2 = RatFn::var(n, var_y(n, 1));
        let mu111 = y2.div(&y1.add(&y2)).unwrap();
        let root = RootData::new(
            n,
            3,
            vec![
                (vec![0, 0, 0], mu111),
                (vec![0, 0, 1], RatFn::one(n)),
                (vec![0, 1, 1], RatFn::one(n)),
                (vec![1, 1, 1], RatFn::one(n)),
            ],
        )
        .unwrap();
        let inst = make_extended_mth_root(root).unwrap();
        assert_eq!(inst.kernel.m(), 3);
        assert_eq!(inst.f2.k_homogeneity_degree().unwrap(), 2);
        // non-homogeneous mu rejected
        let bad = RootData::new(n, 3, vec![(vec![0, 0, 0], RatFn::var(n, var_y(n, 1)))]).unwrap();
        assert!(matches!(
            make_extended_mth_root(bad),
            Err(Error::HomogeneityViolation(_))
        ));
        // constant mu reduces to the plain constructor
        let c = RootData::new(n, 3, vec![(vec![0, 0, 1], RatFn::one(n))]).unwrap();
        let plain = make_mth_root(c.clone()).unwrap();
        let ext = make_extended_mth_root(c).unwrap();
        assert_eq!(plain.f2.kernel().defining(), ext.f2.kernel().defining());
    }
}
