//! Property tests for the exact-arithmetic invariants: ring and field laws,
//! canonical-form uniqueness, derivation rules, homogeneity, and the
//! high-precision numeric cross-check of field arithmetic.

use arfinsler::algext::{FieldElem, KernelDesc, KernelRef};
use arfinsler::numeric::{eval_fieldelem, rel_close, Dual, Prec, Scalar};
use arfinsler::ratfield::{gcd, var_x, var_y, MPoly, RatFn};
use num_rational::BigRational;
use proptest::prelude::*;

const N: usize = 2;

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

prop_compose! {
    fn arb_mono()(exps in proptest::collection::vec(0u32..3, 2 * N)) -> Vec<u32> {
        exps
    }
}

prop_compose! {
    fn arb_poly()(terms in proptest::collection::vec((arb_mono(), -9i64..10), 0..4)) -> MPoly {
        let mut acc = MPoly::zero(N);
        for (m, c) in terms {
            acc = acc.add(&MPoly::monomial(N, m.into_iter().collect(), q(c, 1)));
        }
        acc
    }
}

prop_compose! {
    fn arb_nonzero_poly()(p in arb_poly()) -> MPoly {
        if p.is_zero() { MPoly::one(N) } else { p }
    }
}

prop_compose! {
    fn arb_ratfn()(num in arb_poly(), den in arb_nonzero_poly()) -> RatFn {
        RatFn::new(num, den).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn gcd_divides_both(a in arb_nonzero_poly(), b in arb_nonzero_poly(), c in arb_nonzero_poly()) {
        let g = gcd(&a.mul(&c), &b.mul(&c));
        prop_assert!(a.mul(&c).exact_div(&g).is_some());
        prop_assert!(b.mul(&c).exact_div(&g).is_some());
        // common factor is captured
        prop_assert!(g.exact_div(&gcd(&c, &c)).is_some() || !c.is_constant());
        let gm = gcd(&c, &MPoly::zero(N));
        prop_assert_eq!(gm, c.monic());
    }

    #[test]
    fn canonical_quotient(f in arb_ratfn(), c in arb_nonzero_poly()) {
        let num = f.num().mul(&c);
        let den = f.den().mul(&c);
        prop_assert_eq!(RatFn::new(num, den).unwrap(), f);
    }

    #[test]
    fn pdiff_linearity_and_leibniz(f in arb_ratfn(), g in arb_ratfn()) {
        for v in 0..2 * N {
            prop_assert_eq!(f.add(&g).pdiff(v), f.pdiff(v).add(&g.pdiff(v)));
            prop_assert_eq!(
                f.mul(&g).pdiff(v),
                f.pdiff(v).mul(&g).add(&f.mul(&g.pdiff(v)))
            );
        }
    }

    #[test]
    fn pdiff_commutes(f in arb_ratfn()) {
        let ab = f.pdiff(var_x(N, 0)).pdiff(var_y(N, 1));
        let ba = f.pdiff(var_y(N, 1)).pdiff(var_x(N, 0));
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn eval_is_homomorphism(f in arb_ratfn(), g in arb_ratfn()) {
        let pt = [q(3, 2), q(-1, 3), q(5, 4), q(7, 5)];
        let (fv, gv) = (f.eval_rat(&pt), g.eval_rat(&pt));
        if let (Some(fv), Some(gv)) = (fv, gv) {
            if let Some(s) = f.add(&g).eval_rat(&pt) {
                prop_assert_eq!(s, &fv + &gv);
            }
            if let Some(p) = f.mul(&g).eval_rat(&pt) {
                prop_assert_eq!(p, &fv * &gv);
            }
        }
    }

    #[test]
    fn euler_homogeneity(deg in 0u32..4, p in arb_nonzero_poly()) {
        // build a fiber-homogeneous function of known degree and check both
        // the structural test and the literal Euler contraction
        let y1 = RatFn::var(N, var_y(N, 0));
        let y2 = RatFn::var(N, var_y(N, 1));
        let h = y1.powi(deg as i64).unwrap().add(&y2.powi(deg as i64).unwrap());
        let xpart = {
            // x-only factor from p by zeroing fiber exponents
            let mut acc = MPoly::zero(N);
            for (m, c) in p.terms() {
                let mut m2: Vec<u32> = m.to_vec();
                m2[N] = 0;
                m2[N + 1] = 0;
                acc = acc.add(&MPoly::monomial(N, m2.into_iter().collect(), c.clone()));
            }
            if acc.is_zero() { MPoly::one(N) } else { acc }
        };
        let f = h.mul(&RatFn::from_poly(xpart));
        if !f.is_zero() {
            prop_assert_eq!(f.y_homogeneity_degree().unwrap(), deg as i64);
            // Euler: y^i df/dy^i = deg * f
            let euler = RatFn::var(N, var_y(N, 0)).mul(&f.pdiff(var_y(N, 0)))
                .add(&RatFn::var(N, var_y(N, 1)).mul(&f.pdiff(var_y(N, 1))));
            prop_assert_eq!(euler, f.scale(&q(deg as i64, 1)));
        }
    }
}

// ---- field extension laws over the cubic kernel ----

const NK: usize = 3;

fn cubic_kernel() -> KernelRef {
    let a = RatFn::var(NK, var_y(NK, 0))
        .mul(&RatFn::var(NK, var_y(NK, 1)))
        .mul(&RatFn::var(NK, var_y(NK, 2)));
    KernelDesc::new(3, a, NK).unwrap()
}

prop_compose! {
    fn arb_small_ratfn3()(terms in proptest::collection::vec(
        (proptest::collection::vec(0u32..2, 2 * NK), -5i64..6), 0..3
    ), dens in proptest::collection::vec((0usize..2 * NK, -3i64..4), 0..2)) -> RatFn {
        let mut num = MPoly::zero(NK);
        for (m, c) in terms {
            num = num.add(&MPoly::monomial(NK, m.into_iter().collect(), q(c, 1)));
        }
        let mut den = MPoly::one(NK);
        for (v, c) in dens {
            den = den.mul(&MPoly::var(NK, v).add(&MPoly::constant(NK, q(c.abs() + 1, 1))));
        }
        RatFn::new(num, den).unwrap()
    }
}

prop_compose! {
    fn arb_elem()(c0 in arb_small_ratfn3(), c1 in arb_small_ratfn3(), c2 in arb_small_ratfn3()) -> FieldElem {
        FieldElem::from_coeffs(cubic_kernel(), vec![c0, c1, c2])
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn field_laws(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(a.mul(&inv).unwrap(), FieldElem::one(a.kernel()));
        }
    }

    #[test]
    fn derivation_laws(a in arb_elem(), b in arb_elem()) {
        for i in 0..NK {
            // Leibniz for both derivations
            let prod = a.mul(&b).unwrap();
            prop_assert_eq!(
                prod.pdiff_fiber(i),
                a.pdiff_fiber(i).mul(&b).unwrap().add(&a.mul(&b.pdiff_fiber(i)).unwrap()).unwrap()
            );
            prop_assert_eq!(
                prod.pdiff_base(i),
                a.pdiff_base(i).mul(&b).unwrap().add(&a.mul(&b.pdiff_base(i)).unwrap()).unwrap()
            );
            // support never grows under differentiation
            prop_assert!(a.pdiff_fiber(i).theta_support().is_subset(&a.theta_support()));
            // commutation
            prop_assert_eq!(
                a.pdiff_base(i).pdiff_fiber((i + 1) % NK),
                a.pdiff_fiber((i + 1) % NK).pdiff_base(i)
            );
        }
    }

    #[test]
    fn numeric_cross_check(a in arb_elem(), b in arb_elem()) {
        // 100-digit evaluation with a real cube root; field operations and
        // derivations must agree with numeric arithmetic to 1e-25
        let tpl = Prec::template_digits(100);
        let pt_q = [q(1, 2), q(-1, 3), q(2, 5), q(3, 2), q(5, 3), q(7, 4)];
        let defined = |e: &FieldElem| e.coeffs().iter().all(|c| c.eval_rat(&pt_q).is_some());
        prop_assume!(defined(&a) && defined(&b));
        let pt: Vec<Prec> = pt_q.iter().map(|r| tpl.from_rat(r)).collect();
        let av = eval_fieldelem(&a, &pt);
        let bv = eval_fieldelem(&b, &pt);
        let prod = eval_fieldelem(&a.mul(&b).unwrap(), &pt);
        prop_assert!(rel_close(&prod, &av.mul(&bv), 25));
        if !a.is_zero() {
            let inv_v = eval_fieldelem(&a.inv().unwrap(), &pt);
            let one = tpl.one_like();
            if av.abs().to_f64() > 1e-12 {
                prop_assert!(rel_close(&inv_v.mul(&av), &one, 25));
            }
        }
        // hyper-dual derivative of the evaluation matches the symbolic derivative
        let lifted: Vec<Dual<Prec>> = pt
            .iter()
            .enumerate()
            .map(|(v, x)| {
                if v == NK {
                    Dual::seeded(x.clone())
                } else {
                    Dual::lift(x.clone())
                }
            })
            .collect();
        let dual_v = eval_fieldelem(&a, &lifted);
        let sym_d = eval_fieldelem(&a.pdiff_fiber(0), &pt);
        prop_assert!(rel_close(&dual_v.b, &sym_d, 25));
    }
}
