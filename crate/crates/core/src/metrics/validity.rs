//! Positivity and nondegeneracy sampling. Regularity is never certified
//! symbolically; metrics are probed at random rational points in a positive
//! cone (all y^i > 0), with conic instances held only to nondegeneracy.

use super::MetricInstance;
use crate::geometry::MetricData;
use crate::numeric::{eval_fieldelem, Prec, Scalar};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct ValidityReport {
    pub points_tested: usize,
    pub f2_positive: bool,
    pub positive_definite: bool,
    pub nondegenerate: bool,
    pub conic_only: bool,
    pub notes: Vec<String>,
}

impl ValidityReport {
    /// Overall verdict: conic instances need F2 > 0 and nondegeneracy,
    /// regular ones also positive leading principal minors.
    pub fn ok(&self) -> bool {
        self.points_tested > 0
            && self.f2_positive
            && self.nondegenerate
            && (self.conic_only || self.positive_definite)
    }
}

pub(crate) fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Draw a candidate point with x in [-1, 1] and y in (0, 2].
pub(crate) fn draw_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    let mut pt = Vec::with_capacity(2 * n);
    for _ in 0..n {
        pt.push(rat(rng.gen_range(-8..=8), 8));
    }
    for _ in 0..n {
        pt.push(rat(rng.gen_range(1..=16), 8));
    }
    pt
}

/// The point is usable when the kernel element is defined and positive and
/// every metric entry has a nonvanishing denominator there.
pub(crate) fn point_admissible(inst: &MetricInstance, md: &MetricData, pt: &[BigRational]) -> bool {
    match inst.kernel.defining().eval_rat(pt) {
        Some(v) if v > BigRational::zero() => {}
        _ => return false,
    }
    let defined = |e: &crate::algext::FieldElem| e.coeffs().iter().all(|c| c.eval_rat(pt).is_some());
    if !defined(md.f2()) {
        return false;
    }
    let n = inst.dim();
    for i in 0..n {
        for j in 0..n {
            if !defined(md.g().entry(&[i, j])) {
                return false;
            }
        }
    }
    defined(md.det_g())
}

fn numeric_det(m: &[Vec<Prec>]) -> Prec {
    let n = m.len();
    match n {
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let mut acc = m[0][0].zero_like();
            for j in 0..n {
                let sub: Vec<Vec<Prec>> = (1..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| m[i][c].clone())
                            .collect()
                    })
                    .collect();
                let t = m[0][j].mul(&numeric_det(&sub));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

/// Sample validity at `count` seeded random points plus any user-declared
/// points that pass the admissibility precheck.
pub fn sample_validity(
    inst: &MetricInstance,
    md: &MetricData,
    declared: &[Vec<BigRational>],
    seed: u64,
    count: usize,
) -> ValidityReport {
    let n = inst.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<BigRational>> = Vec::new();
    for p in declared {
        if p.len() == 2 * n && point_admissible(inst, md, p) {
            points.push(p.clone());
        }
    }
    let mut attempts = 0;
    while points.len() < count && attempts < count * 200 {
        attempts += 1;
        let p = draw_point(&mut rng, n);
        if point_admissible(inst, md, &p) {
            points.push(p);
        }
    }
    let tpl = Prec::template_digits(50);
    let mut report = ValidityReport {
        points_tested: points.len(),
        f2_positive: true,
        positive_definite: true,
        nondegenerate: true,
        conic_only: inst.conic,
        notes: Vec::new(),
    };
    let floor = |v: &Prec| v.below_pow10(-30);
    for pt in &points {
        let lifted: Vec<Prec> = pt.iter().map(|r| tpl.from_rat(r)).collect();
        let f2 = eval_fieldelem(md.f2(), &lifted);
        if f2.is_negative() || floor(&f2) {
            report.f2_positive = false;
            report.notes.push(format!("F2 not positive at {:?}", pt));
        }
        let g: Vec<Vec<Prec>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| eval_fieldelem(md.g().entry(&[i, j]), &lifted))
                    .collect()
            })
            .collect();
        for k in 1..=n {
            let lead: Vec<Vec<Prec>> = (0..k)
                .map(|i| (0..k).map(|j| g[i][j].clone()).collect())
                .collect();
            let d = numeric_det(&lead);
            if k == n && floor(&d) {
                report.nondegenerate = false;
                report.notes.push(format!("det g ~ 0 at {:?}", pt));
            }
            if d.is_negative() || floor(&d) {
                report.positive_definite = false;
            }
        }
    }
    report
}
