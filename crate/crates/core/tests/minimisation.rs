mod common;

use common::{lifted_identity, lifted_levi_civita, random_22, random_hypercube};
use g1min::constructions::{critical_model, oracle_minimality_22};
use g1min::exactnum::LocalContext;
use g1min::invariants::{discriminant, invariant_set};
use g1min::minimiser::{minimise_22, minimise_global, minimise_hypercube, minimise_local, MinimisationReport};
use g1min::models::{act, cubics_of_cube, forms_of_hypercube, Model, ModelKind, TwoTwoForm};
use g1min::weierstrass::level;
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check(r: &MinimisationReport) {
    assert_eq!(act(&r.transform, &r.input).unwrap().to_integral().unwrap(), r.final_model);
}

#[test]
fn oracle_agrees_with_minimiser() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in [2, 3] {
        let ctx = LocalContext::new(p).unwrap();
        let mut non_minimal = 0;
        for _ in 0..40 {
            let f = random_22(&ctx, &mut rng);
            let r = minimise_22(&f, &ctx).unwrap();
            check(&r);
            let o = oracle_minimality_22(&f, &ctx).unwrap();
            assert_eq!(o.minimal, r.already_minimal(), "p={} f={:?} oracle {:?}", p, f, o);
            non_minimal += usize::from(!o.minimal);
        }
        assert!(non_minimal >= 5);
    }
}

#[test]
fn hypercube_verdict_matches_derived_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for p in [2, 3, 5] {
        let ctx = LocalContext::new(p).unwrap();
        for _ in 0..15 {
            let h = random_hypercube(&ctx, &mut rng);
            let r = minimise_hypercube(&h, &ctx).unwrap();
            check(&r);
            let forms = forms_of_hypercube(&h).unwrap();
            let some_minimal = forms.f.iter().any(|f| minimise_22(f, &ctx).unwrap().already_minimal());
            assert_eq!(r.already_minimal(), some_minimal, "p={} h={:?}", p, h);
        }
    }
}

#[test]
fn critical_models_are_minimal_with_positive_level() {
    for p in [5, 7] {
        let ctx = LocalContext::new(p).unwrap();
        for kind in [ModelKind::Form22, ModelKind::Cube, ModelKind::Hypercube] {
            for seed in 0..4 {
                let m = critical_model(kind, p, seed).unwrap();
                let r = minimise_local(&m, &ctx).unwrap();
                assert!(r.already_minimal(), "{:?} {:?}", m, r.steps);
                assert_eq!(r.reducing_steps(), 0);
                let inv = invariant_set(&m).unwrap();
                assert!(ctx.val(&inv.c4).at_least(4));
                assert!(ctx.val(&inv.c6).at_least(6));
                assert!(ctx.val(&inv.disc).at_least(12));
                if let Some(md) = &inv.marked {
                    assert!(ctx.val(&md.u).at_least(2));
                    assert!(ctx.val(&md.v).at_least(3));
                }
                assert!(level(&m, &ctx).unwrap().level >= 1);
            }
        }
    }
}

#[test]
fn lifted_patterns_are_fixpoints() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for p in [2, 3, 5] {
        let ctx = LocalContext::new(p).unwrap();
        for _ in 0..5 {
            let s = lifted_levi_civita(p, &mut rng);
            for f in cubics_of_cube(&s) {
                assert!(f.coeffs.iter().all(|c| ctx.val(c).at_least(1)));
            }
            let r = minimise_local(&Model::Cube(s), &ctx).unwrap();
            assert!(r.already_minimal());

            let h = lifted_identity(p, &mut rng);
            for g in forms_of_hypercube(&h).unwrap().g {
                assert!(g.coeffs.iter().all(|c| ctx.val(c).at_least(2)));
            }
            let r = minimise_hypercube(&h, &ctx).unwrap();
            assert!(r.already_minimal());
        }
    }
}

#[test]
fn global_minimisation() {
    // construct_22(0,0,0,1) scaled by 36 = 2^2 3^2
    let base = TwoTwoForm::new([[1, 0, 0], [0, 0, -1], [1, 0, 0]].map(|r| r.map(BigInt::from)));
    let m = Model::Form22(base.clone()).scale(&BigInt::from(36));
    let r = minimise_global(&m).unwrap();
    assert_eq!(r.local.iter().map(|(p, _)| *p).collect::<Vec<_>>(), vec![2, 3]);
    assert_eq!(r.delta_initial, &r.delta_final * BigInt::from(36).pow(12));
    assert_eq!(discriminant(&r.final_model).unwrap(), r.delta_final);
    assert_eq!(act(&r.transform, &m).unwrap().to_integral().unwrap(), r.final_model);
    assert!(minimise_global(&Model::Form22(base)).unwrap().already_minimal());
}
