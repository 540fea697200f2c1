//! Sparse multivariate polynomials over Q in the 2n variables x1..xn, y1..yn.
//!
//! Terms are kept as a vector of (monomial, coefficient) pairs sorted in
//! strictly ascending graded-lexicographic order with no zero coefficients,
//! so structural equality is semantic equality. The variable order is
//! x1 < ... < xn < y1 < ... < yn; slot i holds x(i+1) for i < n and
//! y(i-n+1) for i >= n.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub type Coef = BigRational;
pub type Mono = SmallVec<[u32; 8]>;

/// Index of the base variable x(i+1) in exponent vectors.
pub fn var_x(_n: usize, i: usize) -> usize {
    i
}

/// Index of the fiber variable y(i+1) in exponent vectors.
pub fn var_y(n: usize, i: usize) -> usize {
    n + i
}

/// Graded lexicographic comparison; higher-index variables are more
/// significant in the lexicographic tiebreak.
pub fn cmp_mono(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    n: usize,
    terms: Vec<(Mono, Coef)>,
}

impl MPoly {
    fn from_map(n: usize, map: BTreeMap<Vec<u32>, Coef>) -> Self {
        let mut terms: Vec<(Mono, Coef)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (Mono::from_vec(m), c))
            .collect();
        terms.sort_by(|a, b| cmp_mono(&a.0, &b.0));
        MPoly { n, terms }
    }

    pub fn zero(n: usize) -> Self {
        MPoly { n, terms: Vec::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, BigRational::one())
    }

    pub fn constant(n: usize, c: Coef) -> Self {
        if c.is_zero() {
            return Self::zero(n);
        }
        let mono = Mono::from_elem(0, 2 * n);
        MPoly { n, terms: vec![(mono, c)] }
    }

    pub fn from_int(n: usize, v: i64) -> Self {
        Self::constant(n, BigRational::from_integer(BigInt::from(v)))
    }

    /// The variable with exponent-slot index `v` (0..2n).
    pub fn var(n: usize, v: usize) -> Self {
        assert!(v < 2 * n, "variable index out of range");
        let mut mono = Mono::from_elem(0, 2 * n);
        mono[v] = 1;
        MPoly {
            n,
            terms: vec![(mono, BigRational::one())],
        }
    }

    pub fn monomial(n: usize, mono: Mono, c: Coef) -> Self {
        if c.is_zero() {
            return Self::zero(n);
        }
        assert_eq!(mono.len(), 2 * n);
        MPoly { n, terms: vec![(mono, c)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        2 * self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one() && self.terms[0].0.iter().all(|&e| e == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<Coef> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Coef)> {
        self.terms.iter().map(|(m, c)| (&m[..], c))
    }

    /// Leading term under the global graded-lex order.
    pub fn leading(&self) -> Option<(&[u32], &Coef)> {
        self.terms.last().map(|(m, c)| (&m[..], c))
    }

    pub fn leading_coef(&self) -> Coef {
        self.terms
            .last()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Divide by the leading coefficient so the leading term is 1.
    pub fn monic(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coef();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&(BigRational::one() / lc))
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coef) -> MPoly {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.n, other.n);
        // merge two sorted term lists
        let mut out: Vec<(Mono, Coef)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_mono(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MPoly { n: self.n, terms: out }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.n, other.n);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.n);
        }
        let mut map: BTreeMap<Vec<u32>, Coef> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = Vec::with_capacity(ma.len());
                for k in 0..ma.len() {
                    m.push(ma[k] + mb[k]);
                }
                let c = ca * cb;
                match map.get_mut(&m) {
                    Some(acc) => *acc += c,
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(self.n, map)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = Self::one(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Partial derivative with respect to exponent slot `v`.
    pub fn pdiff(&self, v: usize) -> MPoly {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m[v];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[v] = e - 1;
            terms.push((m2, c * BigRational::from_integer(BigInt::from(e))));
        }
        terms.sort_by(|a, b| cmp_mono(&a.0, &b.0));
        MPoly { n: self.n, terms }
    }

    /// Exact evaluation at a rational point; slot order x1..xn,y1..yn.
    pub fn eval_rat(&self, pt: &[BigRational]) -> BigRational {
        assert_eq!(pt.len(), 2 * self.n);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t *= &pt[v];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m[v]).max().unwrap_or(0)
    }

    /// Fiber degree when all terms share it; the homogeneity test for
    /// polynomials.
    pub fn y_homogeneous_degree(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let deg = |m: &Mono| -> u32 { m[self.n..].iter().sum() };
        let d0 = deg(&self.terms[0].0);
        for (m, _) in &self.terms[1..] {
            if deg(m) != d0 {
                return None;
            }
        }
        Some(d0 as i64)
    }

    /// True when no fiber variable appears.
    pub fn is_x_only(&self) -> bool {
        self.terms.iter().all(|(m, _)| m[self.n..].iter().all(|&e| e == 0))
    }

    /// Componentwise minimum of all exponent vectors (the monomial content).
    pub fn monomial_content(&self) -> Mono {
        let mut out = Mono::from_elem(u32::MAX, 2 * self.n);
        for (m, _) in &self.terms {
            for k in 0..m.len() {
                out[k] = out[k].min(m[k]);
            }
        }
        if self.is_zero() {
            out = Mono::from_elem(0, 2 * self.n);
        }
        out
    }

    pub fn div_monomial(&self, d: &[u32]) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m2 = m.clone();
                for k in 0..m2.len() {
                    debug_assert!(m2[k] >= d[k]);
                    m2[k] -= d[k];
                }
                (m2, c.clone())
            })
            .collect();
        MPoly { n: self.n, terms }
    }

    /// Multivariate exact division; None when `d` does not divide exactly.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.n));
        }
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (Mono::from_slice(m), c.clone())
        };
        let mut rem = self.clone();
        let mut quo: Vec<(Mono, Coef)> = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (Mono::from_slice(m), c.clone())
            };
            let mut qm = Mono::with_capacity(rm.len());
            for k in 0..rm.len() {
                if rm[k] < dm[k] {
                    return None;
                }
                qm.push(rm[k] - dm[k]);
            }
            let qc = rc / &dc;
            let t = MPoly::monomial(self.n, qm.clone(), qc.clone());
            rem = rem.sub(&t.mul(d));
            quo.push((qm, qc));
        }
        quo.sort_by(|a, b| cmp_mono(&a.0, &b.0));
        Some(MPoly { n: self.n, terms: quo })
    }

    /// Scale so coefficients are coprime integers with positive leading
    /// coefficient. Returns the primitive polynomial; the dropped rational
    /// factor is irrelevant for gcd computation over Q.
    pub fn primitive_int(&self) -> MPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        if num_gcd.is_zero() {
            num_gcd = BigInt::one();
        }
        let mut scale = BigRational::new(den_lcm, num_gcd);
        if self.leading_coef().is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Exact square root by descending leading-term recursion; None when the
    /// polynomial is not a perfect square.
    pub fn sqrt_exact(&self) -> Option<MPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lm, lc) = self.leading().unwrap();
        if lm.iter().any(|&e| e % 2 != 0) || lc.is_negative() {
            return None;
        }
        let ns = lc.numer().sqrt();
        let ds = lc.denom().sqrt();
        if &(&ns * &ns) != lc.numer() || &(&ds * &ds) != lc.denom() {
            return None;
        }
        let half: Mono = lm.iter().map(|&e| e / 2).collect();
        let mut root = MPoly::monomial(self.n, half, BigRational::new(ns, ds));
        let two = BigRational::from_integer(BigInt::from(2));
        for _ in 0..100_000 {
            let rem = self.sub(&root.mul(&root));
            if rem.is_zero() {
                return Some(root);
            }
            let (rm, rc) = rem.leading().unwrap();
            let (am, ac) = root.leading().unwrap();
            let mut qm = Mono::with_capacity(rm.len());
            for k in 0..rm.len() {
                if rm[k] < am[k] {
                    return None;
                }
                qm.push(rm[k] - am[k]);
            }
            if cmp_mono(&qm, am) != Ordering::Less {
                return None;
            }
            let qc = rc / (&two * ac);
            root = root.add(&MPoly::monomial(self.n, qm, qc));
        }
        None
    }

    /// Render one variable name.
    pub fn var_name(n: usize, v: usize) -> String {
        if v < n {
            format!("x{}", v + 1)
        } else {
            format!("y{}", v - n + 1)
        }
    }
}

impl fmt::Display for MPoly {
    /// Canonical printing: descending graded-lex term order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            let is_const_mono = m.iter().all(|&e| e == 0);
            if !abs.is_one() || is_const_mono {
                if abs.denom().is_one() {
                    parts.push(abs.numer().to_string());
                } else {
                    parts.push(format!("{}/{}", abs.numer(), abs.denom()));
                }
            }
            for (v, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = Self::var_name(self.n, v);
                if e == 1 {
                    parts.push(name);
                } else {
                    parts.push(format!("{}^{}", name, e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Coef {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn ring_basics() {
        let n = 2;
        let y1 = MPoly::var(n, var_y(n, 0));
        let y2 = MPoly::var(n, var_y(n, 1));
        let s = y1.add(&y2);
        let p = s.mul(&s);
        // (y1+y2)^2 = y1^2 + 2 y1 y2 + y2^2
        let expect = y1
            .mul(&y1)
            .add(&y1.mul(&y2).scale(&q(2, 1)))
            .add(&y2.mul(&y2));
        assert_eq!(p, expect);
        assert_eq!(p.sub(&expect), MPoly::zero(n));
    }

    #[test]
    fn grlex_leading_term() {
        let n = 1;
        // order with x1 < y1: y1 beats x1 at equal degree
        let x = MPoly::var(n, 0);
        let y = MPoly::var(n, 1);
        let p = x.mul(&x).add(&y.mul(&x)); // x^2 + x y
        let (m, _) = p.leading().unwrap();
        assert_eq!(m, &[1, 1][..]);
    }

    #[test]
    fn pdiff_examples() {
        let n = 2;
        let y1 = MPoly::var(n, var_y(n, 0));
        let p = y1.mul(&y1);
        assert_eq!(p.pdiff(var_y(n, 0)), y1.scale(&q(2, 1)));
        let x1 = MPoly::var(n, var_x(n, 0));
        let xy = x1.mul(&y1);
        assert_eq!(xy.pdiff(var_x(n, 0)), y1);
        assert_eq!(xy.pdiff(var_y(n, 1)), MPoly::zero(n));
    }

    #[test]
    fn exact_div_and_sqrt() {
        let n = 2;
        let y1 = MPoly::var(n, var_y(n, 0));
        let y2 = MPoly::var(n, var_y(n, 1));
        let s = y1.add(&y2);
        let p = s.pow(2).mul(&y1);
        assert_eq!(p.exact_div(&s).unwrap(), s.mul(&y1));
        assert_eq!(p.exact_div(&y2), None);
        let sq = s.pow(2).scale(&q(9, 4));
        let r = sq.sqrt_exact().unwrap();
        assert_eq!(r.mul(&r), sq);
        assert_eq!(s.mul(&y1).sqrt_exact(), None);
    }

    #[test]
    fn homogeneity() {
        let n = 2;
        let y1 = MPoly::var(n, var_y(n, 0));
        let y2 = MPoly::var(n, var_y(n, 1));
        let x1 = MPoly::var(n, var_x(n, 0));
        let p = y1.pow(2).add(&y2.pow(2));
        assert_eq!(p.y_homogeneous_degree(), Some(2));
        let q1 = y1.add(&x1);
        assert_eq!(q1.y_homogeneous_degree(), None);
        assert!(x1.pow(3).is_x_only());
    }
}
