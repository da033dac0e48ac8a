use super::*;
use crate::exactnum::int;

fn form(a: [[i64; 3]; 3]) -> TwoTwoForm {
    TwoTwoForm::new(a.map(|r| r.map(BigInt::from)))
}

fn cubic(terms: &[(usize, i64)]) -> TernaryCubic {
    let mut c = TernaryCubic::zero();
    for &(k, v) in terms {
        c.coeffs[k] = int(v);
    }
    c
}

#[test]
fn classify_22_examples() {
    let ctx = LocalContext::new(5).unwrap();
    // x2^2 y2^2
    let f = form([[0, 0, 0], [0, 0, 0], [0, 0, 1]]);
    assert_eq!(classify_22_residue(&f, &ctx), Ok(Residue22Class::ProductBothRepeated { x: [1, 0], y: [1, 0] }));
    // x2 y2 (a x1 y2 + b x2 y1 + c x2 y2) with a = 1, b = 2, c = 3:
    // x1x2 y2^2 + 2 x2^2 y1y2 + 3 x2^2 y2^2
    let f = form([[0, 0, 0], [0, 0, 1], [0, 2, 3]]);
    assert_eq!(classify_22_residue(&f, &ctx), Ok(Residue22Class::UniqueSingularPoint { x: [1, 0], y: [1, 0] }));
    // x2^2 (y1^2 - y2^2)
    let f = form([[0, 0, 0], [0, 0, 0], [1, 0, -1]]);
    assert_eq!(classify_22_residue(&f, &ctx), Ok(Residue22Class::ProductOneRepeated { side: Side::X, root: [1, 0] }));
    // (x1^2 - x2^2) y1^2
    let f = form([[1, 0, 0], [0, 0, 0], [-1, 0, 0]]);
    assert_eq!(classify_22_residue(&f, &ctx), Ok(Residue22Class::ProductOneRepeated { side: Side::Y, root: [0, 1] }));
    // x1 x2 y1 y2
    let f = form([[0, 0, 0], [0, 1, 0], [0, 0, 0]]);
    assert_eq!(classify_22_residue(&f, &ctx), Ok(Residue22Class::ProductNoneRepeated));
    assert_eq!(classify_22_residue(&form([[5, 0, 10], [0, 0, 0], [0, 0, 0]]), &ctx), Ok(Residue22Class::Zero));
    // (x1 y1 + x2 y2)^2 is not a product and is singular along a whole curve
    let f = form([[1, 0, 0], [0, 2, 0], [0, 0, 1]]);
    assert_eq!(classify_22_residue(&f, &ctx), Ok(Residue22Class::Other));
    // a smooth curve
    let f = form([[1, 0, 1], [0, 1, 0], [1, 0, 2]]);
    let cls = classify_22_residue(&f, &ctx).unwrap();
    assert!(singular_points_22(&reduce_22(&f, &ctx), &ctx, 5).unwrap().is_empty() || cls == Residue22Class::Other);
}

#[test]
fn witnesses_reverify() {
    for p in [2u64, 3, 5, 7] {
        let ctx = LocalContext::new(p).unwrap();
        let mut seed = 17u64;
        for _ in 0..300 {
            let a: [[i64; 3]; 3] = std::array::from_fn(|_| {
                std::array::from_fn(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    // sparse entries give more degenerate residues
                    if (seed >> 60) < 7 { 0 } else { ((seed >> 33) % 7) as i64 - 3 }
                })
            });
            let f = form(a);
            let r = reduce_22(&f, &ctx);
            match classify_22_residue(&f, &ctx).unwrap() {
                Residue22Class::UniqueSingularPoint { x, y } => {
                    assert!(is_singular_22(&r, x, y, &ctx));
                    assert_eq!(singular_points_22(&r, &ctx, 3).unwrap().len(), 1);
                }
                Residue22Class::ProductBothRepeated { x, y } => {
                    assert!(is_singular_22(&r, x, y, &ctx));
                }
                _ => {}
            }
        }
    }
}

#[test]
fn classify_cubic_examples() {
    let ctx = LocalContext::new(5).unwrap();
    // z^2 (x + y) = x z^2 + y z^2
    let f = cubic(&[(5, 1), (8, 1)]);
    assert_eq!(classify_cubic_residue(&f, &ctx), Ok(ResidueCubicClass::RepeatedLinearFactor { form: [0, 0, 1] }));
    // y^2 z - x^3
    let f = cubic(&[(7, 1), (0, -1)]);
    assert_eq!(classify_cubic_residue(&f, &ctx), Ok(ResidueCubicClass::UniqueSingularPoint { point: [0, 0, 1] }));
    // xyz
    let f = cubic(&[(4, 1)]);
    assert_eq!(classify_cubic_residue(&f, &ctx), Ok(ResidueCubicClass::Other));
    assert_eq!(classify_cubic_residue(&cubic(&[(0, 5)]), &ctx), Ok(ResidueCubicClass::Zero));
    // x (y^2 - 2 z^2): 2 is not a square mod 5, so the vertex (1:0:0) is the only
    // rational singular point but the triangle has two more over F_25
    let f = cubic(&[(3, 1), (5, -2)]);
    assert_eq!(classify_cubic_residue(&f, &ctx), Ok(ResidueCubicClass::Other));
    // three concurrent lines y z (y + z): unique singular point (1:0:0)
    let f = cubic(&[(7, 1), (8, 1)]);
    assert_eq!(classify_cubic_residue(&f, &ctx), Ok(ResidueCubicClass::UniqueSingularPoint { point: [1, 0, 0] }));
}

#[test]
fn repeated_factor_in_small_characteristic() {
    for p in [2u64, 3] {
        let ctx = LocalContext::new(p).unwrap();
        // x^2 (y + z)
        let f = cubic(&[(1, 1), (2, 1)]);
        assert_eq!(classify_cubic_residue(&f, &ctx), Ok(ResidueCubicClass::RepeatedLinearFactor { form: [1, 0, 0] }));
    }
}

fn levi_civita() -> Cube {
    let mut s = Cube::zero();
    for (i, j, k, e) in [(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1), (0, 2, 1, -1), (2, 1, 0, -1), (1, 0, 2, -1)] {
        s.set(i, j, k, int(e));
    }
    s
}

#[test]
fn saturation_examples() {
    let ctx = LocalContext::new(3).unwrap();
    assert_eq!(saturation_defect(&Model::Cube(levi_civita()), &ctx), Ok(None));
    let mut s = levi_civita();
    for j in 0..3 {
        for k in 0..3 {
            s.set(0, j, k, int(3) * s.get(0, j, k));
        }
    }
    assert_eq!(
        saturation_defect(&Model::Cube(s), &ctx),
        Ok(Some(SaturationDefect { slicing: 0, vector: vec![1, 0, 0] }))
    );
    let mut h = Hypercube::zero();
    for f in 0..8 {
        h.h[f] = int(f as i64 + 1);
        h.h[8 + f] = int(f as i64 + 1 + 3 * (f as i64 % 2));
    }
    assert_eq!(
        saturation_defect(&Model::Hypercube(h), &ctx),
        Ok(Some(SaturationDefect { slicing: 0, vector: vec![1, 2] }))
    );
}
