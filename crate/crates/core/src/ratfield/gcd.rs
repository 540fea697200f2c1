//! Multivariate polynomial gcd via content extraction and the subresultant
//! polynomial remainder sequence.
//!
//! The result is monic under the global graded-lex order, so gcd output is
//! canonical and `gcd(p, 0) = monic(p)`.

use super::poly::{Mono, MPoly};

/// Univariate view of a polynomial in one chosen main variable; index d holds
/// the coefficient of v^d, itself a polynomial free of v.
struct UPoly {
    coeffs: Vec<MPoly>,
}

impl UPoly {
    fn decompose(p: &MPoly, v: usize) -> UPoly {
        let n = p.n();
        let d = p.degree_in(v) as usize;
        let mut coeffs = vec![MPoly::zero(n); d + 1];
        for (m, c) in p.terms() {
            let e = m[v] as usize;
            let mut m2 = Mono::from_slice(m);
            m2[v] = 0;
            coeffs[e] = coeffs[e].add(&MPoly::monomial(n, m2, c.clone()));
        }
        UPoly { coeffs }
    }

    fn recompose(&self, v: usize, n: usize) -> MPoly {
        let var = MPoly::var(n, v);
        let mut acc = MPoly::zero(n);
        let mut vp = MPoly::one(n);
        for (d, c) in self.coeffs.iter().enumerate() {
            if d > 0 {
                vp = vp.mul(&var);
            }
            if !c.is_zero() {
                acc = acc.add(&c.mul(&vp));
            }
        }
        acc
    }

    fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn trim(mut self) -> UPoly {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
        self
    }

    fn lead(&self) -> &MPoly {
        self.coeffs.last().unwrap()
    }

    fn scale(&self, c: &MPoly) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|k| k.mul(c)).collect(),
        }
    }

    fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs[0].n();
        let len = self.coeffs.len().max(o.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for d in 0..len {
            let a = self.coeffs.get(d).cloned().unwrap_or_else(|| MPoly::zero(n));
            let b = o.coeffs.get(d).cloned().unwrap_or_else(|| MPoly::zero(n));
            coeffs.push(a.sub(&b));
        }
        UPoly { coeffs }.trim()
    }

    /// Multiply by c * v^k.
    fn shift_scale(&self, c: &MPoly, k: usize) -> UPoly {
        let n = self.coeffs[0].n();
        let mut coeffs = vec![MPoly::zero(n); k];
        for q in &self.coeffs {
            coeffs.push(q.mul(c));
        }
        UPoly { coeffs }
    }

    fn coeff_exact_div(&self, d: &MPoly) -> UPoly {
        UPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    c.exact_div(d)
                        .expect("subresultant invariant: coefficient division must be exact")
                })
                .collect(),
        }
    }
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced modulo b.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let lb = b.lead().clone();
    let db = b.deg();
    let mut e = (a.deg() as i64) - (db as i64) + 1;
    let mut r = UPoly { coeffs: a.coeffs.clone() };
    while !r.is_zero() && r.deg() >= db {
        let k = r.deg() - db;
        let lr = r.lead().clone();
        r = r.scale(&lb).sub(&b.shift_scale(&lr, k));
        e -= 1;
    }
    let mut scale = MPoly::one(lb.n());
    for _ in 0..e.max(0) {
        scale = scale.mul(&lb);
    }
    r.scale(&scale).trim()
}

/// Gcd of the coefficient list (used for contents w.r.t. a main variable).
fn coeff_gcd(coeffs: &[MPoly]) -> MPoly {
    let n = coeffs[0].n();
    let mut acc = MPoly::zero(n);
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        acc = if acc.is_zero() { c.monic() } else { gcd(&acc, c) };
        if acc.is_one() {
            break;
        }
    }
    if acc.is_zero() {
        MPoly::one(n)
    } else {
        acc
    }
}

fn subres_gcd(mut a: UPoly, mut b: UPoly, n: usize) -> UPoly {
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = MPoly::one(n);
    let mut h = MPoly::one(n);
    loop {
        let d = a.deg() - b.deg();
        let r = prem(&a, &b);
        if r.is_zero() {
            return b;
        }
        if r.deg() == 0 {
            return UPoly { coeffs: vec![MPoly::one(n)] };
        }
        a = b;
        let mut denom = g.clone();
        for _ in 0..d {
            denom = denom.mul(&h);
        }
        b = r.coeff_exact_div(&denom);
        g = a.lead().clone();
        h = if d == 0 {
            h
        } else {
            let mut gd = g.clone();
            for _ in 1..d {
                gd = gd.mul(&g);
            }
            let mut hd = MPoly::one(n);
            for _ in 1..d {
                hd = hd.mul(&h);
            }
            gd.exact_div(&hd)
                .expect("subresultant invariant: h update must divide exactly")
        };
    }
}

fn gcd_inner(p: &MPoly, q: &MPoly) -> MPoly {
    let n = p.n();
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let common: Mono = (0..2 * n).map(|k| mp[k].min(mq[k])).collect();
    let p1 = p.div_monomial(&mp);
    let q1 = q.div_monomial(&mq);
    let mono_gcd = MPoly::monomial(n, common, num_traits::One::one());
    if p1.is_constant() || q1.is_constant() {
        return mono_gcd;
    }
    // quick exits: equal polynomials and direct divisibility
    if p1 == q1 {
        return mono_gcd.mul(&p1);
    }
    if p1.num_terms() <= q1.num_terms() {
        if q1.exact_div(&p1).is_some() {
            return mono_gcd.mul(&p1);
        }
    } else if p1.exact_div(&q1).is_some() {
        return mono_gcd.mul(&q1);
    }
    // main variable: smallest worst-case degree among shared variables
    let mut main: Option<(usize, u32)> = None;
    for v in 0..2 * n {
        let dp = p1.degree_in(v);
        let dq = q1.degree_in(v);
        if dp > 0 && dq > 0 {
            let w = dp.max(dq);
            if main.map_or(true, |(_, best)| w < best) {
                main = Some((v, w));
            }
        }
    }
    let v = match main {
        Some((v, _)) => v,
        None => return mono_gcd,
    };
    let up = UPoly::decompose(&p1, v);
    let uq = UPoly::decompose(&q1, v);
    let cp = coeff_gcd(&up.coeffs);
    let cq = coeff_gcd(&uq.coeffs);
    let upp = up.coeff_exact_div(&cp);
    let uqq = uq.coeff_exact_div(&cq);
    let cont = gcd(&cp, &cq);
    let gv = subres_gcd(upp, uqq, n);
    let gv_cont = coeff_gcd(&gv.coeffs);
    let gvp = gv.coeff_exact_div(&gv_cont);
    mono_gcd.mul(&cont).mul(&gvp.recompose(v, n))
}

/// Greatest common divisor; monic under the global order, `gcd(p,0) = monic(p)`.
pub fn gcd(p: &MPoly, q: &MPoly) -> MPoly {
    assert_eq!(p.n(), q.n());
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    // single-monomial fast path
    if p.num_terms() == 1 || q.num_terms() == 1 {
        let mp = p.monomial_content();
        let mq = q.monomial_content();
        let common: Mono = (0..p.nvars()).map(|k| mp[k].min(mq[k])).collect();
        return MPoly::monomial(p.n(), common, num_traits::One::one());
    }
    let g = gcd_inner(&p.primitive_int(), &q.primitive_int()).monic();
    debug_assert!(p.exact_div(&g).is_some() && q.exact_div(&g).is_some());
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfield::poly::{var_x, var_y};

    #[test]
    fn gcd_spec_examples() {
        let n = 2;
        let y1 = MPoly::var(n, var_y(n, 0));
        let y2 = MPoly::var(n, var_y(n, 1));
        // gcd(y1 y2, y2) = y2
        assert_eq!(gcd(&y1.mul(&y2), &y2), y2);
        // gcd(p, 0) = monic(p)
        let p = y1.add(&y2).scale(&num_rational::BigRational::new(
            num_bigint::BigInt::from(3),
            num_bigint::BigInt::from(2),
        ));
        assert_eq!(gcd(&p, &MPoly::zero(n)), y1.add(&y2));
        // gcd((y1+y2)^2, (y1+y2) y1) = y1+y2, checked by exact division
        let s = y1.add(&y2);
        let a = s.pow(2);
        let b = s.mul(&y1);
        let g = gcd(&a, &b);
        assert_eq!(g, s);
        assert!(a.exact_div(&g).is_some());
        assert!(b.exact_div(&g).is_some());
    }

    #[test]
    fn gcd_mixed_vars() {
        let n = 2;
        let x1 = MPoly::var(n, var_x(n, 0));
        let y1 = MPoly::var(n, var_y(n, 0));
        let y2 = MPoly::var(n, var_y(n, 1));
        // common factor with x-dependence
        let f = x1.mul(&y1).add(&y2.pow(2)).add(&MPoly::one(n));
        let a = f.pow(2).mul(&y1.add(&x1));
        let b = f.mul(&y2.add(&MPoly::one(n)));
        let g = gcd(&a, &b);
        assert_eq!(g, f.monic());
    }

    #[test]
    fn gcd_coprime() {
        let n = 1;
        let x = MPoly::var(n, 0);
        let y = MPoly::var(n, 1);
        let a = x.pow(2).add(&MPoly::one(n));
        let b = y.pow(3).add(&y).add(&MPoly::one(n));
        assert!(gcd(&a, &b).is_one());
    }
}
