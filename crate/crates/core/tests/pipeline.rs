//! Pipeline checks on hand-built metrics: the Riemannian specialization
//! against the classical curvature oracle, contraction identities, and the
//! homogeneity ladder.

use arfinsler::algext::{FieldElem, KernelDesc, KernelRef};
use arfinsler::geometry::classical;
use arfinsler::geometry::{fundamental_tensor, JAgreement, Session, VolumeForm, WeylVariant};
use arfinsler::ratfield::{var_x, var_y, RatFn};

fn ratfn_y(n: usize, i: usize) -> RatFn {
    RatFn::var(n, var_y(n, i))
}

fn ratfn_x(n: usize, i: usize) -> RatFn {
    RatFn::var(n, var_x(n, i))
}

/// F2 = alpha_ij(x) y^i y^j on the trivial kernel.
fn riemannian_session(alpha: &[Vec<RatFn>]) -> (Session, KernelRef) {
    let n = alpha.len();
    let kernel = KernelDesc::trivial(n);
    let mut f2 = RatFn::zero(n);
    for i in 0..n {
        for j in 0..n {
            f2 = f2.add(&alpha[i][j].mul(&ratfn_y(n, i)).mul(&ratfn_y(n, j)));
        }
    }
    let md = fundamental_tensor(FieldElem::from_ratfn(&kernel, f2)).unwrap();
    (Session::new(md, VolumeForm::unit(n)), kernel)
}

fn euclidean_alpha(n: usize) -> Vec<Vec<RatFn>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RatFn::one(n) } else { RatFn::zero(n) })
                .collect()
        })
        .collect()
}

/// diag(1, 1 + x1^2) on n = 2.
fn curved_alpha_2d() -> Vec<Vec<RatFn>> {
    let n = 2;
    let mut a = euclidean_alpha(n);
    a[1][1] = RatFn::one(n).add(&ratfn_x(n, 0).powi(2).unwrap());
    a
}

/// Non-diagonal x-dependent metric on n = 3.
fn curved_alpha_3d() -> Vec<Vec<RatFn>> {
    let n = 3;
    let mut a = euclidean_alpha(n);
    a[1][1] = RatFn::one(n).add(&ratfn_x(n, 0).powi(2).unwrap());
    a[2][2] = RatFn::one(n).add(&ratfn_x(n, 1).powi(2).unwrap());
    let half = RatFn::constant(n, num_rational::BigRational::new(1.into(), 2.into()));
    a[0][1] = half.mul(&ratfn_x(n, 2));
    a[1][0] = a[0][1].clone();
    a
}

#[test]
fn euclidean_everything_vanishes() {
    let (s, kernel) = riemannian_session(&euclidean_alpha(2));
    assert!(s.cartan().is_zero());
    assert!(s.spray().is_zero());
    assert!(s.berwald_curvature().is_zero());
    assert!(s.douglas().is_zero());
    assert!(s.landsberg().is_zero());
    assert!(s.riemann().is_zero());
    assert!(s.ricci().is_zero());
    assert!(s.s_curvature().is_zero());
    assert!(s.e_curvature().is_zero());
    assert!(s.chi().is_zero());
    let _ = kernel;
}

#[test]
fn riemannian_matches_classical_oracle() {
    for alpha in [curved_alpha_2d(), curved_alpha_3d()] {
        let n = alpha.len();
        let (s, kernel) = riemannian_session(&alpha);
        // Cartan vanishes and the spray is the classical quadratic one
        assert!(s.cartan().is_zero());
        let cs = classical::classical_spray(&alpha).unwrap();
        for i in 0..n {
            assert_eq!(
                s.spray().entry(&[i]),
                &FieldElem::from_ratfn(&kernel, cs[i].clone())
            );
        }
        // Berwaldian: curvature of the Berwald connection vanishes
        assert!(s.berwald_curvature().is_zero());
        assert!(s.douglas().is_zero());
        assert!(s.landsberg().is_zero());
        let (j, agree) = s.mean_landsberg().unwrap();
        assert!(j.is_zero());
        assert_eq!(agree, JAgreement::Exact);
        // Riemann curvature equals the classical contraction R^i_{jkl} y^j y^l
        let rc = classical::riemann_spray_contraction(&alpha).unwrap();
        for i in 0..n {
            for k in 0..n {
                assert_eq!(
                    s.riemann().entry(&[i, k]),
                    &FieldElem::from_ratfn(&kernel, rc[i][k].clone()),
                    "riemann mismatch at ({}, {})",
                    i,
                    k
                );
            }
        }
        assert!(!s.riemann().is_zero(), "oracle should be nontrivial");
    }
}

#[test]
fn homogeneity_ladder_and_contractions() {
    let alpha = curved_alpha_2d();
    let n = alpha.len();
    let (s, kernel) = riemannian_session(&alpha);
    s.metric().g().check_homogeneity(0).unwrap();
    s.spray().check_homogeneity(2).unwrap();
    s.barthel().check_homogeneity(1).unwrap();
    s.berwald_connection().check_homogeneity(0).unwrap();
    s.riemann().check_homogeneity(2).unwrap();
    // y^j N^i_j = 2 G^i
    for i in 0..n {
        let mut acc = FieldElem::zero(&kernel);
        for j in 0..n {
            acc = acc
                .add(
                    &FieldElem::y(&kernel, j)
                        .mul(s.barthel().entry(&[i, j]))
                        .unwrap(),
                )
                .unwrap();
        }
        assert_eq!(acc, s.spray().entry(&[i]).scale(&num_rational::BigRational::from_integer(2.into())));
    }
    // y^k G^i_{jk} = N^i_j
    for i in 0..n {
        for j in 0..n {
            let mut acc = FieldElem::zero(&kernel);
            for k in 0..n {
                acc = acc
                    .add(
                        &FieldElem::y(&kernel, k)
                            .mul(s.berwald_connection().entry(&[i, j, k]))
                            .unwrap(),
                    )
                    .unwrap();
            }
            assert_eq!(&acc, s.barthel().entry(&[i, j]));
        }
    }
    // g . ginv = identity
    for i in 0..n {
        for j in 0..n {
            let mut acc = FieldElem::zero(&kernel);
            for k in 0..n {
                acc = acc
                    .add(&s.metric().g().entry(&[i, k]).mul(s.metric().ginv().entry(&[k, j])).unwrap())
                    .unwrap();
            }
            let expect = if i == j {
                FieldElem::one(&kernel)
            } else {
                FieldElem::zero(&kernel)
            };
            assert_eq!(acc, expect);
        }
    }
    // weyl variants exist and are PH 2 where nonzero
    s.weyl(WeylVariant::Paper).check_homogeneity(2).unwrap();
    s.weyl(WeylVariant::Standard).check_homogeneity(2).unwrap();
}

/// Kropina-type data with x-dependence: F = alpha^2/beta with
/// alpha = diag(1, 1+x1^2), b = (1, 0). Pins the sign relationship between
/// the two mean-Landsberg routes and the Berwald h-derivative of g.
#[test]
fn kropina_pins_conventions() {
    let n = 2;
    let alpha = curved_alpha_2d();
    let kernel = KernelDesc::trivial(n);
    let mut a2 = RatFn::zero(n);
    for i in 0..n {
        for j in 0..n {
            a2 = a2.add(&alpha[i][j].mul(&ratfn_y(n, i)).mul(&ratfn_y(n, j)));
        }
    }
    let beta = ratfn_y(n, 0);
    let f2 = a2.powi(2).unwrap().div(&beta.powi(2).unwrap()).unwrap();
    let md = fundamental_tensor(FieldElem::from_ratfn(&kernel, f2)).unwrap();
    let s = Session::new(md, VolumeForm::unit(n));

    // Cartan is nonzero with vanishing y-contraction
    assert!(!s.cartan().is_zero());
    for j in 0..n {
        for k in 0..n {
            let mut acc = FieldElem::zero(&kernel);
            for i in 0..n {
                acc = acc
                    .add(&FieldElem::y(&kernel, i).mul(s.cartan().entry(&[i, j, k])).unwrap())
                    .unwrap();
            }
            assert!(acc.is_zero(), "y^i C_ijk must vanish");
        }
    }

    // dual-route mean Landsberg: record the empirical agreement
    let (j, agree) = s.mean_landsberg().unwrap();
    assert!(!j.is_zero(), "x-dependent Kropina should not be weakly Landsberg");
    println!("mean-landsberg dual-route agreement: {:?}", agree);

    // Berwald h-derivative of g versus the Landsberg tensor
    let ghcov = s.berwald_hcov(s.metric().g()).unwrap();
    let l = s.landsberg();
    let plus2 = l.scale_int(2, 1);
    let minus2 = l.scale_int(-2, 1);
    let zero = ghcov.is_zero();
    let is_plus = ghcov == plus2;
    let is_minus = ghcov == minus2;
    println!(
        "g_ij|k: zero={} +2L={} -2L={}",
        zero, is_plus, is_minus
    );
    assert!(zero || is_plus || is_minus);
}
