//! High-precision numeric evaluation: a precision-carrying wrapper around
//! arbitrary-precision floats and nested first-order dual numbers on top of
//! it. Nesting duals in distinct directions yields exact mixed partial
//! derivatives of any order through the chain rule, which is what the
//! hyper-dual oracle uses to rebuild every tensor from the floating
//! evaluation of F^2 alone.

pub mod oracle;

use astro_float::{BigFloat, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

const RM: RoundingMode = RoundingMode::ToEven;

/// Field-like scalar with an m-th root, enough for evaluating elements of K
/// and differentiating through them.
pub trait Scalar: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rat(&self, q: &BigRational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn nth_root(&self, m: u32) -> Self;
}

/// Arbitrary-precision float with its working precision in bits.
#[derive(Clone, Debug)]
pub struct Prec {
    v: BigFloat,
    p: usize,
}

fn bigint_to_bigfloat(i: &BigInt, p: usize) -> BigFloat {
    let (sign, digits) = i.to_u32_digits();
    let work = p.max(32 * digits.len() + 64);
    let base = BigFloat::from_u64(1u64 << 32, work);
    let mut acc = BigFloat::from_i8(0, work);
    for d in digits.iter().rev() {
        acc = acc.mul(&base, work, RM);
        acc = acc.add(&BigFloat::from_u64(*d as u64, work), work, RM);
    }
    if sign == num_bigint::Sign::Minus {
        acc = acc.neg();
    }
    acc
}

impl Prec {
    /// A zero value carrying the precision context, used as the template
    /// for lifting rational data.
    pub fn template(bits: usize) -> Prec {
        Prec {
            v: BigFloat::from_i8(0, bits),
            p: bits,
        }
    }

    /// Template sized for roughly `digits` significant decimal digits.
    pub fn template_digits(digits: u32) -> Prec {
        // 10^d needs about 3.33 d bits; add generous guard bits
        Prec::template(((digits as usize) * 10) / 3 + 96)
    }

    pub fn from_rational(q: &BigRational, bits: usize) -> Prec {
        Prec::template(bits).from_rat(q)
    }

    pub fn bits(&self) -> usize {
        self.p
    }

    pub fn raw(&self) -> &BigFloat {
        &self.v
    }

    pub fn to_f64(&self) -> f64 {
        format!("{}", self.v).parse::<f64>().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Prec {
        Prec {
            v: self.v.abs(),
            p: self.p,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative()
    }

    /// self <= 10^exp10, decided through f64 magnitude (used only for
    /// tolerance comparisons, never for exact decisions).
    pub fn below_pow10(&self, exp10: i32) -> bool {
        let m = self.to_f64().abs();
        m.is_finite() && m <= 10f64.powi(exp10)
    }
}

impl Scalar for Prec {
    fn zero_like(&self) -> Self {
        Prec::template(self.p)
    }

    fn one_like(&self) -> Self {
        Prec {
            v: BigFloat::from_i8(1, self.p),
            p: self.p,
        }
    }

    fn from_rat(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return self.zero_like();
        }
        let n = bigint_to_bigfloat(q.numer(), self.p);
        let d = bigint_to_bigfloat(q.denom(), self.p);
        Prec {
            v: n.div(&d, self.p, RM),
            p: self.p,
        }
    }

    fn add(&self, o: &Self) -> Self {
        Prec {
            v: self.v.add(&o.v, self.p, RM),
            p: self.p,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        Prec {
            v: self.v.sub(&o.v, self.p, RM),
            p: self.p,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        Prec {
            v: self.v.mul(&o.v, self.p, RM),
            p: self.p,
        }
    }

    fn div(&self, o: &Self) -> Self {
        Prec {
            v: self.v.div(&o.v, self.p, RM),
            p: self.p,
        }
    }

    fn neg(&self) -> Self {
        Prec {
            v: self.v.neg(),
            p: self.p,
        }
    }

    /// Positive m-th root by Newton iteration seeded from an f64 estimate;
    /// convergence is quadratic, so a handful of steps reach full precision.
    fn nth_root(&self, m: u32) -> Self {
        assert!(m >= 1);
        if m == 1 {
            return self.clone();
        }
        if self.v.is_zero() {
            return self.zero_like();
        }
        assert!(
            !self.v.is_negative(),
            "nth_root of a negative value; sample points must keep A > 0"
        );
        if m == 2 {
            return Prec {
                v: self.v.sqrt(self.p, RM),
                p: self.p,
            };
        }
        let seed = self.to_f64();
        assert!(seed.is_finite() && seed > 0.0, "root seed out of f64 range");
        let mut z = Prec {
            v: BigFloat::from_f64(seed.powf(1.0 / m as f64), self.p),
            p: self.p,
        };
        let mf = self.from_rat(&BigRational::from_integer(m.into()));
        let m1 = self.from_rat(&BigRational::from_integer((m - 1).into()));
        let iters = 6 + (self.p / 50);
        for _ in 0..iters {
            // z <- ((m-1) z + x / z^(m-1)) / m
            let mut zp = z.one_like();
            for _ in 0..(m - 1) {
                zp = zp.mul(&z);
            }
            z = m1.mul(&z).add(&self.div(&zp)).div(&mf);
        }
        z
    }
}

/// First-order dual number a + b eps with eps^2 = 0 over any scalar.
#[derive(Clone, Debug)]
pub struct Dual<T: Scalar> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> Dual<T> {
    pub fn lift(v: T) -> Dual<T> {
        let b = v.zero_like();
        Dual { a: v, b }
    }

    pub fn seeded(v: T) -> Dual<T> {
        let b = v.one_like();
        Dual { a: v, b }
    }
}

impl<T: Scalar> Scalar for Dual<T> {
    fn zero_like(&self) -> Self {
        Dual {
            a: self.a.zero_like(),
            b: self.a.zero_like(),
        }
    }

    fn one_like(&self) -> Self {
        Dual {
            a: self.a.one_like(),
            b: self.a.zero_like(),
        }
    }

    fn from_rat(&self, q: &BigRational) -> Self {
        Dual {
            a: self.a.from_rat(q),
            b: self.a.zero_like(),
        }
    }

    fn add(&self, o: &Self) -> Self {
        Dual {
            a: self.a.add(&o.a),
            b: self.b.add(&o.b),
        }
    }

    fn sub(&self, o: &Self) -> Self {
        Dual {
            a: self.a.sub(&o.a),
            b: self.b.sub(&o.b),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        Dual {
            a: self.a.mul(&o.a),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.a)),
        }
    }

    fn div(&self, o: &Self) -> Self {
        let q = self.a.div(&o.a);
        Dual {
            b: self.b.sub(&q.mul(&o.b)).div(&o.a),
            a: q,
        }
    }

    fn neg(&self) -> Self {
        Dual {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    fn nth_root(&self, m: u32) -> Self {
        let r = self.a.nth_root(m);
        // d(x^{1/m}) = x^{1/m} / (m x)
        let mf = self.a.from_rat(&BigRational::from_integer(m.into()));
        let fprime = r.div(&mf.mul(&self.a));
        Dual {
            a: r,
            b: self.b.mul(&fprime),
        }
    }
}

/// Evaluate a polynomial at a generic scalar point; pt is x1..xn,y1..yn.
pub fn eval_mpoly<S: Scalar>(p: &crate::ratfield::MPoly, pt: &[S]) -> S {
    let template = pt[0].zero_like();
    let nv = p.nvars();
    assert_eq!(pt.len(), nv);
    // power tables
    let mut max_e = vec![0u32; nv];
    for (m, _) in p.terms() {
        for v in 0..nv {
            max_e[v] = max_e[v].max(m[v]);
        }
    }
    let mut pows: Vec<Vec<S>> = Vec::with_capacity(nv);
    for v in 0..nv {
        let mut col = Vec::with_capacity(max_e[v] as usize + 1);
        col.push(pt[0].one_like());
        for e in 1..=max_e[v] as usize {
            let prev = col[e - 1].clone();
            col.push(prev.mul(&pt[v]));
        }
        pows.push(col);
    }
    let mut acc = template;
    for (m, c) in p.terms() {
        let mut t = pt[0].from_rat(c);
        for v in 0..nv {
            if m[v] > 0 {
                t = t.mul(&pows[v][m[v] as usize]);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

pub fn eval_ratfn<S: Scalar>(f: &crate::ratfield::RatFn, pt: &[S]) -> S {
    let n = eval_mpoly(f.num(), pt);
    if f.is_poly() {
        return n;
    }
    let d = eval_mpoly(f.den(), pt);
    n.div(&d)
}

/// Evaluate a field element: theta is the real positive m-th root of A at
/// the point.
pub fn eval_fieldelem<S: Scalar>(e: &crate::algext::FieldElem, pt: &[S]) -> S {
    let kernel = e.kernel();
    let m = kernel.m();
    let mut acc = eval_ratfn(e.coeff(0), pt);
    if m == 1 || e.is_rational_in_y() {
        return acc;
    }
    let theta = eval_ratfn(kernel.defining(), pt).nth_root(m);
    let mut tp = theta.clone();
    for d in 1..m as usize {
        if !e.coeff(d).is_zero() {
            acc = acc.add(&eval_ratfn(e.coeff(d), pt).mul(&tp));
        }
        if d + 1 < m as usize {
            tp = tp.mul(&theta);
        }
    }
    acc
}

/// |a - b| <= 10^-tol_digits * max(|a|, |b|, 1), the relative comparison
/// used by the numeric cross-checks.
pub fn rel_close(a: &Prec, b: &Prec, tol_digits: i32) -> bool {
    let diff = a.sub(b).abs().to_f64();
    let ma = a.abs().to_f64().max(b.abs().to_f64()).max(1.0);
    diff <= ma * 10f64.powi(-tol_digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfield::{var_y, MPoly, RatFn};

    fn tpl() -> Prec {
        Prec::template_digits(60)
    }

    #[test]
    fn root_round_trip() {
        let t = tpl();
        let x = t.from_rat(&BigRational::new(17.into(), 5.into()));
        for m in [2u32, 3, 4, 5] {
            let r = x.nth_root(m);
            let mut back = r.clone();
            for _ in 1..m {
                back = back.mul(&r);
            }
            assert!(rel_close(&back, &x, 50), "m = {}", m);
        }
    }

    #[test]
    fn dual_derivative_matches_symbolic() {
        // f = y1^2 y2 + y2^3 at (y1,y2) = (3/2, 2/3); df/dy1 via dual
        let n = 2;
        let y1 = MPoly::var(n, var_y(n, 0));
        let y2 = MPoly::var(n, var_y(n, 1));
        let f = y1.pow(2).mul(&y2).add(&y2.pow(3));
        let t = tpl();
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let px = [q(1, 1), q(1, 1), q(3, 2), q(2, 3)];
        let lifted: Vec<Dual<Prec>> = px
            .iter()
            .enumerate()
            .map(|(v, r)| {
                if v == 2 {
                    Dual::seeded(t.from_rat(r))
                } else {
                    Dual::lift(t.from_rat(r))
                }
            })
            .collect();
        let out = eval_mpoly(&f, &lifted);
        let sym = f.pdiff(var_y(n, 0));
        let expect = sym.eval_rat(&px);
        assert!(rel_close(&out.b, &t.from_rat(&expect), 50));
    }

    #[test]
    fn second_derivative_through_nested_duals() {
        // d^2/dy1^2 of y1^4 at y1 = 7/5 is 12*(7/5)^2
        let n = 1;
        let f = MPoly::var(n, var_y(n, 0)).pow(4);
        let t = tpl();
        let v = t.from_rat(&BigRational::new(7.into(), 5.into()));
        let x0: Dual<Dual<Prec>> = Dual {
            a: Dual::seeded(v.clone()),
            b: Dual::lift(v.one_like()),
        };
        let one = Dual::lift(Dual::lift(v.one_like()));
        let out = eval_mpoly(&f, &[one, x0]);
        let expect = t.from_rat(&BigRational::new((12 * 49).into(), 25.into()));
        assert!(rel_close(&out.b.b, &expect, 50));
    }

    #[test]
    fn fieldelem_eval_uses_root() {
        use crate::algext::{FieldElem, KernelDesc};
        let n = 3;
        let a = RatFn::var(n, var_y(n, 0))
            .mul(&RatFn::var(n, var_y(n, 1)))
            .mul(&RatFn::var(n, var_y(n, 2)));
        let k = KernelDesc::new(3, a, n).unwrap();
        let th = FieldElem::theta(&k).unwrap();
        let t = tpl();
        let q = |v: i64| BigRational::from_integer(v.into());
        let pt: Vec<Prec> = [q(1), q(1), q(1), q(2), q(3), q(4)]
            .iter()
            .map(|r| t.from_rat(r))
            .collect();
        let v = eval_fieldelem(&th, &pt);
        // theta = 24^(1/3)
        let expect = t.from_rat(&q(24)).nth_root(3);
        assert!(rel_close(&v, &expect, 50));
        // theta^2 evaluates to the square
        let th2 = th.mul(&th).unwrap();
        let v2 = eval_fieldelem(&th2, &pt);
        assert!(rel_close(&v2, &expect.mul(&expect), 50));
    }
}
