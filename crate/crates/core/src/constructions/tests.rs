use super::*;
use crate::invariants::discriminant;
use crate::weierstrass::WeierstrassCurve;

fn curve_disc(a: [i64; 4]) -> BigInt {
    WeierstrassCurve::from_i64([a[0], a[1], a[2], a[3], 0]).discriminant()
}

#[test]
fn constructions_keep_the_discriminant() {
    for a in [[0, 0, 0, 1], [1, -1, 1, -3], [0, 2, 1, 0], [1, 0, 0, -45]] {
        let [a1, a2, a3, a4] = a.map(BigInt::from);
        let d = curve_disc(a);
        assert_eq!(discriminant(&Model::Form22(construct_22(&a1, &a2, &a3, &a4))).unwrap(), d, "{:?}", a);
        let s = construct_cube(&a1, &a2, &a3, &a4);
        assert_eq!(discriminant(&Model::Cube(s.clone())).unwrap(), d, "{:?}", a);
        let (x, y) = construct_cube_point();
        let (f, _) = convert_3to2(&s, &x, &y).unwrap();
        assert_eq!(discriminant(&Model::Form22(f)).unwrap(), d, "{:?}", a);
    }
}

#[test]
fn weights() {
    let w = enumerate_minimal_weights();
    assert_eq!(w.len(), 81);
    let f = symmetry_filter(&w);
    assert_eq!(f.len(), 8);
    for t in TAUS {
        assert!(f.iter().any(|x| x.tuple() == t), "{:?}", t);
    }
}
