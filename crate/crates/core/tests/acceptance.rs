//! Acceptance suite: one PASS/FAIL line per criterion. Counts and tolerances
//! below are fixed; all comparisons are exact.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use g1min::constructions::{
    construct_22, construct_cube, construct_cube_point, convert_2to3, convert_3to2, critical_model,
    enumerate_minimal_weights, oracle_minimality_22, symmetry_filter, CubeWeight, TAUS,
};
use g1min::exactnum::LocalContext;
use g1min::invariants::{discriminant, invariant_set, MarkedData};
use g1min::minimiser::{minimise_22, minimise_hypercube, minimise_local, minimise_quartic, MinimisationReport};
use g1min::models::{cubics_of_cube, forms_of_hypercube, BinaryQuartic, Cube, Model, ModelKind, TwoTwoForm};
use g1min::weierstrass::{level, WeierstrassCurve};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SYZYGY_SAMPLES: usize = 1000;
const SYZYGY_ENTRY_BOUND: i64 = 20;
const CONSTRUCTION_SAMPLES: usize = 100;
const CONSTRUCTION_A_BOUND: i64 = 10;
const ROUND_TRIP_PRIMES: [u64; 3] = [2, 3, 5];
const ROUND_TRIP_TRIALS: usize = 50;
const ORACLE_SAMPLES: usize = 200;
const DERIVED_FORM_SAMPLES: usize = 100;
const CRITICAL_PRIMES: [u64; 2] = [5, 7];
const CRITICAL_SEEDS: u64 = 20;
const FIXPOINT_SAMPLES: usize = 10;
const QUARTIC_SAMPLES: usize = 100;

/// Longest chains seen across every randomized run, per model kind.
#[derive(Default)]
struct Chains {
    form22: usize,
    cube: usize,
    hypercube: usize,
    quartic: Vec<usize>,
    runs: usize,
}

impl Chains {
    fn record(&mut self, r: &MinimisationReport) {
        self.runs += 1;
        let m = r.max_chain();
        match r.input.kind() {
            ModelKind::Form22 => self.form22 = self.form22.max(m),
            ModelKind::Cube => self.cube = self.cube.max(m),
            ModelKind::Hypercube => self.hypercube = self.hypercube.max(m),
            ModelKind::Quartic => self.quartic.extend(&r.chains),
            ModelKind::Cubic => {}
        }
    }
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_weights() -> Outcome {
    let all = enumerate_minimal_weights();
    let kept = symmetry_filter(&all);
    ensure(all.len() == 81, || format!("{} minimal weights, expected 81", all.len()))?;
    ensure(kept.len() == 8, || format!("{} after symmetry, expected 8", kept.len()))?;
    for t in TAUS {
        ensure(kept.contains(&CubeWeight::from_tuple(t)), || format!("tau {:?} missing", t))?;
    }
    Ok("81 minimal, 8 after symmetry, tau_1..tau_6 present".into())
}

fn on_curve(md: &MarkedData) -> bool {
    let e = &md.curve;
    let (x, y) = (&md.xi, &md.eta);
    y * y + &e.a1 * x * y + &e.a3 * y == x * x * x + &e.a2 * x * x + &e.a4 * x + &e.a6
}

fn syzygy(c4: &BigInt, c6: &BigInt, md: &MarkedData) -> bool {
    let (x, y) = (3 * &md.u, 108 * &md.v);
    &y * &y == &x * &x * &x - 27 * c4 * &x - 54 * c6
}

fn c2_syzygy() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut entry = || BigInt::from(rng.gen_range(-SYZYGY_ENTRY_BOUND..=SYZYGY_ENTRY_BOUND));
    let mut checked = [0; 2];
    for n in 0..2 * SYZYGY_SAMPLES {
        let m = if n % 2 == 0 {
            Model::Form22(TwoTwoForm::new(std::array::from_fn(|_| std::array::from_fn(|_| entry()))))
        } else {
            Model::Cube(Cube::new(std::array::from_fn(|_| entry())))
        };
        let inv = invariant_set(&m).map_err(|e| format!("{:?}: {}", m, e))?;
        let md = inv.marked.as_ref().ok_or("no marked data")?;
        ensure(syzygy(&inv.c4, &inv.c6, md), || format!("syzygy fails for {:?}", m))?;
        ensure(on_curve(md), || format!("(xi, eta) off the curve for {:?}", m))?;
        checked[n % 2] += 1;
    }
    Ok(format!("{} (2,2)-forms and {} cubes, exact", checked[0], checked[1]))
}

fn c3_constructions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..CONSTRUCTION_SAMPLES {
        let [a1, a2, a3, a4] = random_a(CONSTRUCTION_A_BOUND, &mut rng);
        let e = WeierstrassCurve::new(a1.clone(), a2.clone(), a3.clone(), a4.clone(), BigInt::zero());
        let d = e.discriminant();
        let f = construct_22(&a1, &a2, &a3, &a4);
        let s = construct_cube(&a1, &a2, &a3, &a4);
        let disc = |m: Model| discriminant(&m).map_err(|e| e.to_string());
        ensure(disc(Model::Form22(f.clone()))? == d, || format!("construct_22 {:?}", e))?;
        ensure(disc(Model::Cube(s.clone()))? == d, || format!("construct_cube {:?}", e))?;
        // swapping y1, y2 puts a13 = 0 in the a11 slot
        let mut g = f.clone();
        for row in g.a.iter_mut() {
            row.swap(0, 2);
        }
        let cube = convert_2to3(&g).map_err(|e| e.to_string())?;
        ensure(disc(Model::Cube(cube))? == d, || format!("convert_2to3 {:?}", e))?;
        let (x, y) = construct_cube_point();
        let (back, _) = convert_3to2(&s, &x, &y).map_err(|e| e.to_string())?;
        ensure(disc(Model::Form22(back))? == d, || format!("convert_3to2 {:?}", e))?;
    }
    Ok(format!("{} curves, constructions and conversions preserve Delta", CONSTRUCTION_SAMPLES))
}

fn c4_round_trip(chains: &mut Chains) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut runs = 0;
    for p in ROUND_TRIP_PRIMES {
        let ctx = LocalContext::new(p).unwrap();
        for _ in 0..ROUND_TRIP_TRIALS {
            let [a1, a2, a3, a4] = random_a(6, &mut rng);
            let bases = [
                Model::Form22(construct_22(&a1, &a2, &a3, &a4)),
                Model::Cube(construct_cube(&a1, &a2, &a3, &a4)),
                level0_hypercube(&ctx, &mut rng),
            ];
            for base in bases {
                let m = raise(&base, &ctx, &mut rng);
                let r = minimise_local(&m, &ctx).map_err(|e| format!("p={} {:?}: {}", p, m, e))?;
                chains.record(&r);
                let l = level(&r.final_model, &ctx).map_err(|e| e.to_string())?;
                ensure(l.level == 0 && l.v_delta_model == l.v_delta_min + 12 * l.kappa, || {
                    format!("p={} {:?} ended at level {}", p, m, l.level)
                })?;
                runs += 1;
            }
        }
    }
    Ok(format!("{} runs restored level 0", runs))
}

fn c5_oracle(chains: &mut Chains) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut non_minimal = 0;
    for p in [2, 3] {
        let ctx = LocalContext::new(p).unwrap();
        for _ in 0..ORACLE_SAMPLES {
            let f = random_22(&ctx, &mut rng);
            let r = minimise_22(&f, &ctx).map_err(|e| e.to_string())?;
            chains.record(&r);
            let o = oracle_minimality_22(&f, &ctx).map_err(|e| e.to_string())?;
            ensure(o.minimal == r.already_minimal(), || format!("p={} disagreement on {:?}", p, f))?;
            non_minimal += usize::from(!o.minimal);
        }
    }
    Ok(format!("{} forms agree ({} non-minimal)", 2 * ORACLE_SAMPLES, non_minimal))
}

fn c6_derived_forms(chains: &mut Chains) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut minimal = 0;
    for p in [2, 3, 5] {
        let ctx = LocalContext::new(p).unwrap();
        for _ in 0..DERIVED_FORM_SAMPLES {
            let h = random_hypercube(&ctx, &mut rng);
            let r = minimise_hypercube(&h, &ctx).map_err(|e| e.to_string())?;
            chains.record(&r);
            let forms = forms_of_hypercube(&h).map_err(|e| e.to_string())?;
            let mut some = false;
            for f in &forms.f {
                let rf = minimise_22(f, &ctx).map_err(|e| e.to_string())?;
                chains.record(&rf);
                some |= rf.already_minimal();
            }
            ensure(r.already_minimal() == some, || format!("p={} disagreement on {:?}", p, h))?;
            minimal += usize::from(some);
        }
    }
    Ok(format!("{} hypercubes agree ({} minimal)", 3 * DERIVED_FORM_SAMPLES, minimal))
}

fn c7_critical() -> Outcome {
    let mut n = 0;
    for p in CRITICAL_PRIMES {
        let ctx = LocalContext::new(p).unwrap();
        for kind in [ModelKind::Form22, ModelKind::Cube, ModelKind::Hypercube] {
            for seed in 0..CRITICAL_SEEDS {
                let m = critical_model(kind, p, seed).map_err(|e| e.to_string())?;
                let r = minimise_local(&m, &ctx).map_err(|e| e.to_string())?;
                ensure(r.already_minimal() && r.reducing_steps() == 0, || format!("p={} {:?} reduced", p, m))?;
                let inv = invariant_set(&m).map_err(|e| e.to_string())?;
                let v = |x: &BigInt, k| ctx.val(x).at_least(k);
                ensure(v(&inv.c4, 4) && v(&inv.c6, 6) && v(&inv.disc, 12), || format!("p={} {:?} valuations", p, m))?;
                if let Some(md) = &inv.marked {
                    ensure(v(&md.u, 2) && v(&md.v, 3), || format!("p={} {:?} u, v valuations", p, m))?;
                }
                let l = level(&m, &ctx).map_err(|e| e.to_string())?;
                ensure(l.level >= 1, || format!("p={} {:?} has level 0", p, m))?;
                n += 1;
            }
        }
    }
    Ok(format!("{} critical models minimal with positive level", n))
}

fn c8_bounds(chains: &mut Chains) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for p in [2, 3, 5] {
        let ctx = LocalContext::new(p).unwrap();
        for _ in 0..QUARTIC_SAMPLES {
            let g = loop {
                let g = Model::Quartic(BinaryQuartic::new(std::array::from_fn(|_| BigInt::from(rng.gen_range(-5..=5)))));
                if !discriminant(&g).unwrap().is_zero() {
                    break g;
                }
            };
            let Model::Quartic(q) = raise(&g, &ctx, &mut rng) else { unreachable!() };
            let r = minimise_quartic(&q, &ctx).map_err(|e| e.to_string())?;
            chains.record(&r);
        }
    }
    ensure(chains.form22 <= 2, || format!("(2,2) chain of length {}", chains.form22))?;
    ensure(chains.cube <= 3, || format!("cube chain of length {}", chains.cube))?;
    ensure(chains.hypercube <= 2, || format!("hypercube procedure (i) chain of length {}", chains.hypercube))?;
    ensure(chains.quartic.iter().all(|&s| s <= 2), || format!("quartic slopes {:?}", chains.quartic))?;
    Ok(format!(
        "{} runs; longest chains (2,2) {}, cube {}, hypercube {}, quartic {}",
        chains.runs,
        chains.form22,
        chains.cube,
        chains.hypercube,
        chains.quartic.iter().max().unwrap_or(&0)
    ))
}

fn c9_fixpoints() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for p in [2, 3, 5, 7] {
        let ctx = LocalContext::new(p).unwrap();
        for _ in 0..FIXPOINT_SAMPLES {
            let s = lifted_levi_civita(p, &mut rng);
            ensure(cubics_of_cube(&s).iter().all(|f| f.coeffs.iter().all(|c| ctx.val(c).at_least(1))), || {
                format!("derived cubics of {:?} not 0 mod p", s)
            })?;
            let r = minimise_local(&Model::Cube(s.clone()), &ctx).map_err(|e| e.to_string())?;
            ensure(r.already_minimal(), || format!("p={} Levi-Civita lift {:?} reduced", p, s))?;
            let h = lifted_identity(p, &mut rng);
            let forms = forms_of_hypercube(&h).map_err(|e| e.to_string())?;
            ensure(forms.g.iter().all(|g| g.coeffs.iter().all(|c| ctx.val(c).at_least(2))), || {
                format!("derived quartics of {:?} not 0 mod p^2", h)
            })?;
            let r = minimise_hypercube(&h, &ctx).map_err(|e| e.to_string())?;
            ensure(r.already_minimal(), || format!("p={} identity lift {:?} reduced", p, h))?;
        }
    }
    Ok(format!("{} lifted cubes and hypercubes at p = 2, 3, 5, 7 declared minimal", 4 * FIXPOINT_SAMPLES))
}

fn main() {
    let mut chains = Chains::default();
    let mut failed = 0;
    let start = Instant::now();
    let mut run = |n: usize, name: &str, f: &mut dyn FnMut(&mut Chains) -> Outcome| {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(|| f(&mut chains))).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {} {}: PASS ({}; {:.1}s)", n, name, detail, secs),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {}: FAIL ({}; {:.1}s)", n, name, detail, secs);
            }
        }
    };
    run(1, "weights", &mut |_| c1_weights());
    run(2, "syzygy", &mut |_| c2_syzygy());
    run(3, "constructions", &mut |_| c3_constructions());
    run(4, "round trip", &mut c4_round_trip);
    run(5, "oracle", &mut c5_oracle);
    run(6, "hypercube vs derived forms", &mut c6_derived_forms);
    run(7, "critical models", &mut |_| c7_critical());
    run(8, "iteration bounds", &mut c8_bounds);
    run(9, "lifted patterns", &mut |_| c9_fixpoints());
    println!("acceptance: {} of 9 passed in {:.1}s", 9 - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
