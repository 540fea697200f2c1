//! The working field K = Q(x,y)[theta]/(theta^m - A).
//!
//! Every computation session has exactly one kernel theta, positively
//! homogeneous of degree 1 in y, with theta^m = A for a rational A. Elements
//! are stored reduced, as m rational-function coefficients of theta^0 ..
//! theta^(m-1), which makes "rational in y" a decidable support question.

use crate::error::{Error, Result};
use crate::ratfield::{var_x, var_y, Coef, RatFn};
use num_rational::BigRational;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
pub struct KernelDesc {
    m: u32,
    a: RatFn,
    n: usize,
}

pub type KernelRef = Arc<KernelDesc>;

impl KernelDesc {
    /// A kernel of order m with defining element A. A must be nonzero and
    /// positively homogeneous of degree m in y so that theta has degree 1.
    pub fn new(m: u32, a: RatFn, n: usize) -> Result<KernelRef> {
        if m == 0 {
            return Err(Error::Spec("kernel order m must be positive".into()));
        }
        if a.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if a.y_homogeneity_degree()? != m as i64 {
            return Err(Error::HomogeneityViolation(format!(
                "kernel element must have fiber homogeneity degree {}",
                m
            )));
        }
        Ok(Arc::new(KernelDesc { m, a, n }))
    }

    /// The trivial kernel: K = Q(x,y). The defining element is never used
    /// in degree-0 arithmetic; y1 keeps the homogeneity invariant.
    pub fn trivial(n: usize) -> KernelRef {
        Arc::new(KernelDesc {
            m: 1,
            a: RatFn::var(n, var_y(n, 0)),
            n,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn defining(&self) -> &RatFn {
        &self.a
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn same(a: &KernelRef, b: &KernelRef) -> bool {
        Arc::ptr_eq(a, b) || (a.m == b.m && a.n == b.n && a.a == b.a)
    }
}

#[derive(Clone)]
pub struct FieldElem {
    kernel: KernelRef,
    coeffs: Vec<RatFn>,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        KernelDesc::same(&self.kernel, &other.kernel) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElem {}

impl FieldElem {
    pub fn from_coeffs(kernel: KernelRef, coeffs: Vec<RatFn>) -> Self {
        assert_eq!(coeffs.len(), kernel.m as usize);
        FieldElem { kernel, coeffs }
    }

    pub fn from_ratfn(kernel: &KernelRef, r: RatFn) -> Self {
        let m = kernel.m as usize;
        let n = kernel.n;
        let mut coeffs = vec![RatFn::zero(n); m];
        coeffs[0] = r;
        FieldElem {
            kernel: kernel.clone(),
            coeffs,
        }
    }

    pub fn zero(kernel: &KernelRef) -> Self {
        Self::from_ratfn(kernel, RatFn::zero(kernel.n))
    }

    pub fn one(kernel: &KernelRef) -> Self {
        Self::from_ratfn(kernel, RatFn::one(kernel.n))
    }

    pub fn constant(kernel: &KernelRef, c: Coef) -> Self {
        Self::from_ratfn(kernel, RatFn::constant(kernel.n, c))
    }

    pub fn from_int(kernel: &KernelRef, v: i64) -> Self {
        Self::from_ratfn(kernel, RatFn::from_int(kernel.n, v))
    }

    pub fn var(kernel: &KernelRef, v: usize) -> Self {
        Self::from_ratfn(kernel, RatFn::var(kernel.n, v))
    }

    pub fn y(kernel: &KernelRef, i: usize) -> Self {
        Self::var(kernel, var_y(kernel.n, i))
    }

    pub fn x(kernel: &KernelRef, i: usize) -> Self {
        Self::var(kernel, var_x(kernel.n, i))
    }

    /// theta^e for any integer e, reduced via theta^m = A; negative powers of
    /// theta stay in K because A is rational and invertible.
    pub fn theta_pow(kernel: &KernelRef, e: i64) -> Result<Self> {
        let m = kernel.m as i64;
        let r = e.rem_euclid(m);
        let q = (e - r) / m;
        let apow = kernel.a.powi(q)?;
        let n = kernel.n;
        let mut coeffs = vec![RatFn::zero(n); kernel.m as usize];
        coeffs[r as usize] = apow;
        Ok(FieldElem {
            kernel: kernel.clone(),
            coeffs,
        })
    }

    pub fn theta(kernel: &KernelRef) -> Result<Self> {
        Self::theta_pow(kernel, 1)
    }

    pub fn kernel(&self) -> &KernelRef {
        &self.kernel
    }

    pub fn coeff(&self, d: usize) -> &RatFn {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[RatFn] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn theta_support(&self) -> BTreeSet<u32> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, _)| d as u32)
            .collect()
    }

    /// Rational in the fiber coordinates: no positive theta power survives.
    pub fn is_rational_in_y(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_ratfn(&self) -> Option<&RatFn> {
        if self.is_rational_in_y() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_kernel(&self, o: &FieldElem) -> Result<()> {
        if KernelDesc::same(&self.kernel, &o.kernel) {
            Ok(())
        } else {
            Err(Error::KernelMismatch)
        }
    }

    pub fn add(&self, o: &FieldElem) -> Result<FieldElem> {
        self.check_kernel(o)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(FieldElem {
            kernel: self.kernel.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, o: &FieldElem) -> Result<FieldElem> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem {
            kernel: self.kernel.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Product in K: convolution in theta followed by reduction theta^m -> A.
    pub fn mul(&self, o: &FieldElem) -> Result<FieldElem> {
        self.check_kernel(o)?;
        let m = self.kernel.m as usize;
        let n = self.kernel.n;
        if m == 1 {
            return Ok(FieldElem {
                kernel: self.kernel.clone(),
                coeffs: vec![self.coeffs[0].mul(&o.coeffs[0])],
            });
        }
        let mut conv = vec![RatFn::zero(n); 2 * m - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] = conv[i + j].add(&a.mul(b));
            }
        }
        let mut coeffs: Vec<RatFn> = conv[..m].to_vec();
        for (k, c) in conv.into_iter().enumerate().skip(m) {
            if !c.is_zero() {
                coeffs[k - m] = coeffs[k - m].add(&c.mul(&self.kernel.a));
            }
        }
        Ok(FieldElem {
            kernel: self.kernel.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, c: &Coef) -> FieldElem {
        FieldElem {
            kernel: self.kernel.clone(),
            coeffs: self.coeffs.iter().map(|k| k.scale(c)).collect(),
        }
    }

    pub fn mul_ratfn(&self, r: &RatFn) -> FieldElem {
        FieldElem {
            kernel: self.kernel.clone(),
            coeffs: self.coeffs.iter().map(|k| k.mul(r)).collect(),
        }
    }

    /// Inverse via the extended Euclidean algorithm on a(theta) and
    /// theta^m - A over Q(x,y). A nontrivial gcd means theta^m - A is
    /// reducible and the element is a zero divisor; that is reported, never
    /// silently ignored.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.kernel.m as usize;
        let n = self.kernel.n;
        if m == 1 {
            return Ok(FieldElem {
                kernel: self.kernel.clone(),
                coeffs: vec![self.coeffs[0].inv()?],
            });
        }
        // single-term fast path: (c theta^d)^-1 = theta^(-d)/c
        let support = self.theta_support();
        if support.len() == 1 {
            let d = *support.iter().next().unwrap() as i64;
            let c = self.coeffs[d as usize].inv()?;
            return Ok(Self::theta_pow(&self.kernel, -d)?.mul_ratfn(&c));
        }
        // modulus theta^m - A
        let mut modulus = vec![RatFn::zero(n); m + 1];
        modulus[0] = self.kernel.a.neg();
        modulus[m] = RatFn::one(n);
        let (g, s) = upoly_half_xgcd(self.coeffs.clone(), modulus, n)?;
        let gd = upoly_deg(&g);
        if gd != 0 {
            return Err(Error::NotInvertible(format!(
                "gcd with theta^{} - A has degree {}; the modulus is reducible",
                m, gd
            )));
        }
        let ginv = g[0].inv()?;
        let mut coeffs = vec![RatFn::zero(n); m];
        for (d, c) in s.into_iter().enumerate() {
            if d < m {
                coeffs[d] = c.mul(&ginv);
            } else if !c.is_zero() {
                // cannot happen: deg s < deg modulus in the half gcd
                return Err(Error::InternalInconsistency {
                    claim: "field inverse".into(),
                    detail: "Bezout cofactor degree exceeded the modulus degree".into(),
                });
            }
        }
        Ok(FieldElem {
            kernel: self.kernel.clone(),
            coeffs,
        })
    }

    pub fn div(&self, o: &FieldElem) -> Result<FieldElem> {
        self.mul(&o.inv()?)
    }

    pub fn pow(&self, e: u32) -> Result<FieldElem> {
        let mut acc = Self::one(&self.kernel);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The derivation with respect to variable slot v, extended to theta by
    /// d(theta) = theta * dA / (m A). Differentiation never moves theta
    /// support: coefficient d maps to d(c_d) + c_d * d * dA/(mA).
    fn pdiff_slot(&self, v: usize) -> FieldElem {
        let m = self.kernel.m;
        let n = self.kernel.n;
        let da = self.kernel.a.pdiff(v);
        let dlog = if da.is_zero() {
            None
        } else {
            Some(
                da.div(&self.kernel.a)
                    .unwrap()
                    .scale(&BigRational::new(1.into(), i64::from(m).into())),
            )
        };
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| {
                let mut out = c.pdiff(v);
                if d > 0 && !c.is_zero() {
                    if let Some(dl) = &dlog {
                        out = out.add(&c.mul(dl).scale(&BigRational::from_integer((d as i64).into())));
                    }
                }
                out
            })
            .collect();
        let _ = n;
        FieldElem {
            kernel: self.kernel.clone(),
            coeffs,
        }
    }

    pub fn pdiff_fiber(&self, i: usize) -> FieldElem {
        self.pdiff_slot(var_y(self.kernel.n, i))
    }

    pub fn pdiff_base(&self, i: usize) -> FieldElem {
        self.pdiff_slot(var_x(self.kernel.n, i))
    }

    /// Homogeneity degree across the theta expansion: coefficient d must be
    /// fiber-homogeneous with degree(coeffs[d]) + d constant over the support.
    pub fn k_homogeneity_degree(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut deg: Option<i64> = None;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let h = c.y_homogeneity_degree()? + d as i64;
            match deg {
                None => deg = Some(h),
                Some(p) if p == h => {}
                Some(_) => return Err(Error::NotHomogeneous),
            }
        }
        Ok(deg.unwrap())
    }
}

fn upoly_deg(p: &[RatFn]) -> usize {
    for d in (0..p.len()).rev() {
        if !p[d].is_zero() {
            return d;
        }
    }
    0
}

fn upoly_is_zero(p: &[RatFn]) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Division with remainder for univariate polynomials over the rational
/// function field; returns (quotient, remainder).
fn upoly_divmod(a: &[RatFn], b: &[RatFn], n: usize) -> Result<(Vec<RatFn>, Vec<RatFn>)> {
    let db = upoly_deg(b);
    if upoly_is_zero(b) {
        return Err(Error::DivisionByZero);
    }
    let lb_inv = b[db].inv()?;
    let mut r = a.to_vec();
    let mut q = vec![RatFn::zero(n); a.len().max(1)];
    loop {
        if upoly_is_zero(&r) {
            break;
        }
        let dr = upoly_deg(&r);
        if dr < db && !(dr == 0 && db == 0) {
            break;
        }
        if dr < db {
            break;
        }
        let c = r[dr].mul(&lb_inv);
        let k = dr - db;
        q[k] = q[k].add(&c);
        for j in 0..=db {
            let t = b[j].mul(&c);
            r[j + k] = r[j + k].sub(&t);
        }
        if !r[dr].is_zero() {
            // exact cancellation is guaranteed by construction
            r[dr] = RatFn::zero(n);
        }
    }
    Ok((q, r))
}

/// Half-extended gcd: returns (g, s) with s*a = g modulo b.
fn upoly_half_xgcd(a: Vec<RatFn>, b: Vec<RatFn>, n: usize) -> Result<(Vec<RatFn>, Vec<RatFn>)> {
    let mut r0 = a;
    let mut r1 = b;
    let mut s0 = vec![RatFn::one(n)];
    let mut s1 = vec![RatFn::zero(n)];
    while !upoly_is_zero(&r1) {
        let (q, r) = upoly_divmod(&r0, &r1, n)?;
        // s_new = s0 - q*s1
        let mut qs = vec![RatFn::zero(n); upoly_deg(&q) + upoly_deg(&s1) + 2];
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, sj) in s1.iter().enumerate() {
                if sj.is_zero() {
                    continue;
                }
                qs[i + j] = qs[i + j].add(&qi.mul(sj));
            }
        }
        let len = s0.len().max(qs.len());
        let mut snew = vec![RatFn::zero(n); len];
        for d in 0..len {
            let a0 = s0.get(d).cloned().unwrap_or_else(|| RatFn::zero(n));
            let b0 = qs.get(d).cloned().unwrap_or_else(|| RatFn::zero(n));
            snew[d] = a0.sub(&b0);
        }
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = snew;
    }
    Ok((r0, s0))
}

// Operator forms panic on kernel mismatch; the checked methods are the
// public contract and internal pipeline code only mixes same-kernel values.
impl std::ops::Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::add(self, rhs).expect("kernel mismatch")
    }
}

impl std::ops::Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::sub(self, rhs).expect("kernel mismatch")
    }
}

impl std::ops::Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::mul(self, rhs).expect("kernel mismatch")
    }
}

impl std::ops::Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}

impl fmt::Display for FieldElem {
    /// Coefficients of ascending theta powers; "th" denotes the kernel.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*th", c)?,
                _ => write!(f, "{}*th^{}", c, d)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfield::MPoly;

    fn cubic_kernel() -> KernelRef {
        // m = 3, A = y1 y2 y3 on n = 3
        let n = 3;
        let a = RatFn::var(n, var_y(n, 0))
            .mul(&RatFn::var(n, var_y(n, 1)))
            .mul(&RatFn::var(n, var_y(n, 2)));
        KernelDesc::new(3, a, n).unwrap()
    }

    fn euclid_kernel() -> KernelRef {
        // m = 2, A = y1^2 + y2^2 on n = 2
        let n = 2;
        let a = RatFn::var(n, var_y(n, 0))
            .powi(2)
            .unwrap()
            .add(&RatFn::var(n, var_y(n, 1)).powi(2).unwrap());
        KernelDesc::new(2, a, n).unwrap()
    }

    #[test]
    fn defining_relation() {
        let k = euclid_kernel();
        let th = FieldElem::theta(&k).unwrap();
        let t2 = th.mul(&th).unwrap();
        assert_eq!(t2.coeff(0), k.defining());
        assert!(t2.coeff(1).is_zero());
    }

    #[test]
    fn theta_fourth_power_cubic() {
        let k = cubic_kernel();
        let th = FieldElem::theta(&k).unwrap();
        let t4 = th.pow(4).unwrap();
        // theta^4 = A * theta
        assert!(t4.coeff(0).is_zero());
        assert_eq!(t4.coeff(1), k.defining());
        assert!(t4.coeff(2).is_zero());
        assert_eq!(t4.theta_support().into_iter().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn difference_of_squares() {
        let k = euclid_kernel();
        let one = FieldElem::one(&k);
        let th = FieldElem::theta(&k).unwrap();
        let prod = one.add(&th).unwrap().mul(&one.sub(&th).unwrap()).unwrap();
        let expect = one
            .sub(&FieldElem::from_ratfn(&k, k.defining().clone()))
            .unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn inverse_of_theta() {
        let k = cubic_kernel();
        let th = FieldElem::theta(&k).unwrap();
        let inv = th.inv().unwrap();
        // theta^-1 = theta^2 / A
        let expect = FieldElem::theta_pow(&k, 2)
            .unwrap()
            .mul_ratfn(&k.defining().inv().unwrap());
        assert_eq!(inv, expect);
        assert_eq!(th.mul(&inv).unwrap(), FieldElem::one(&k));
    }

    #[test]
    fn inverse_of_one_plus_theta() {
        // (1+theta)^-1 = (1-theta)/(1-A) for m = 2, verified by multiplying back
        let n = 2;
        let a = RatFn::var(n, var_y(n, 0))
            .powi(2)
            .unwrap()
            .add(&RatFn::var(n, var_y(n, 1)).powi(2).unwrap())
            .add(&RatFn::var(n, var_y(n, 0)).mul(&RatFn::var(n, var_y(n, 1))));
        let k = KernelDesc::new(2, a, n).unwrap();
        let e = FieldElem::one(&k).add(&FieldElem::theta(&k).unwrap()).unwrap();
        let inv = e.inv().unwrap();
        assert_eq!(e.mul(&inv).unwrap(), FieldElem::one(&k));
        // closed form
        let denom = RatFn::one(n).sub(k.defining());
        let expect = FieldElem::one(&k)
            .sub(&FieldElem::theta(&k).unwrap())
            .unwrap()
            .mul_ratfn(&denom.inv().unwrap());
        assert_eq!(inv, expect);
    }

    #[test]
    fn inverse_of_rational_constant() {
        let k = cubic_kernel();
        let c = FieldElem::from_int(&k, 5);
        assert_eq!(
            c.inv().unwrap(),
            FieldElem::constant(&k, BigRational::new(1.into(), 5.into()))
        );
    }

    #[test]
    fn fiber_derivation_of_theta() {
        let k = cubic_kernel();
        let th = FieldElem::theta(&k).unwrap();
        let d = th.pdiff_fiber(0);
        // d theta / d y1 = theta/(3 y1)
        let n = 3;
        let expect = th.mul_ratfn(
            &RatFn::from_int(n, 3)
                .mul(&RatFn::var(n, var_y(n, 0)))
                .inv()
                .unwrap(),
        );
        assert_eq!(d, expect);
        // support is preserved
        assert_eq!(d.theta_support(), th.theta_support());
    }

    #[test]
    fn euler_identity_for_theta() {
        let k = cubic_kernel();
        let th = FieldElem::theta(&k).unwrap();
        let mut acc = FieldElem::zero(&k);
        for i in 0..3 {
            acc = acc
                .add(&FieldElem::y(&k, i).mul(&th.pdiff_fiber(i)).unwrap())
                .unwrap();
        }
        assert_eq!(acc, th);
        assert_eq!(th.k_homogeneity_degree().unwrap(), 1);
    }

    #[test]
    fn base_derivation_chain_rule() {
        // A = (1 + x1^2) y1 y2 y3, d theta/dx1 = theta * 2 x1/(3 (1+x1^2))
        let n = 3;
        let f = RatFn::one(n).add(&RatFn::var(n, var_x(n, 0)).powi(2).unwrap());
        let p = RatFn::var(n, var_y(n, 0))
            .mul(&RatFn::var(n, var_y(n, 1)))
            .mul(&RatFn::var(n, var_y(n, 2)));
        let k = KernelDesc::new(3, f.mul(&p), n).unwrap();
        let th = FieldElem::theta(&k).unwrap();
        let d = th.pdiff_base(0);
        let fp = f.pdiff(var_x(n, 0));
        let expect = th.mul_ratfn(
            &fp.div(&f.scale(&BigRational::from_integer(3.into())))
                .unwrap(),
        );
        assert_eq!(d, expect);
        // x-free elements have zero base derivative
        let e = FieldElem::y(&k, 1);
        assert!(e.pdiff_base(2).is_zero());
    }

    #[test]
    fn derivations_commute() {
        let k = cubic_kernel();
        let n = 3;
        // a representative mixed element
        let e = FieldElem::theta(&k)
            .unwrap()
            .mul_ratfn(&RatFn::var(n, var_x(n, 0)))
            .add(&FieldElem::from_ratfn(
                &k,
                RatFn::var(n, var_y(n, 1))
                    .div(&RatFn::var(n, var_y(n, 0)))
                    .unwrap(),
            ))
            .unwrap();
        let ab = e.pdiff_base(0).pdiff_fiber(1);
        let ba = e.pdiff_fiber(1).pdiff_base(0);
        assert_eq!(ab, ba);
    }

    #[test]
    fn support_and_homogeneity() {
        let k = cubic_kernel();
        let th2 = FieldElem::theta_pow(&k, 2).unwrap();
        let e = th2.add(&FieldElem::one(&k)).unwrap();
        assert_eq!(
            e.theta_support().into_iter().collect::<Vec<_>>(),
            vec![0, 2]
        );
        assert!(matches!(
            e.k_homogeneity_degree(),
            Err(Error::NotHomogeneous)
        ));
        // theta + y1 is homogeneous of degree 1
        let s = FieldElem::theta(&k)
            .unwrap()
            .add(&FieldElem::y(&k, 0))
            .unwrap();
        assert_eq!(s.k_homogeneity_degree().unwrap(), 1);
        // F^2 of an m-th root metric is theta^2, degree 2
        assert_eq!(th2.k_homogeneity_degree().unwrap(), 2);
    }

    #[test]
    fn trivial_kernel_is_rational() {
        let k = KernelDesc::trivial(2);
        let e = FieldElem::from_ratfn(&k, RatFn::var(2, var_y(2, 0)));
        assert!(e.is_rational_in_y());
        let p = e.mul(&e).unwrap();
        assert_eq!(
            p.as_ratfn().unwrap(),
            &RatFn::var(2, var_y(2, 0)).powi(2).unwrap()
        );
        assert_eq!(e.inv().unwrap().mul(&e).unwrap(), FieldElem::one(&k));
    }

    #[test]
    fn zero_has_empty_support() {
        let k = cubic_kernel();
        assert!(FieldElem::zero(&k).theta_support().is_empty());
        let _ = MPoly::zero(3);
    }
}
