use num_bigint::BigInt;

use crate::exactnum::poly::Coeff;
use crate::exactnum::MPoly;

/// Binary quartic a x1^4 + b x1^3 x2 + c x1^2 x2^2 + d x1 x2^3 + e x2^4.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryQuartic<T = BigInt> {
    pub coeffs: [T; 5],
}

/// (2,2)-form (x1^2, x1x2, x2^2) A (y1^2, y1y2, y2^2)^T; `a[i][j]` is the
/// coefficient of the i-th x-monomial times the j-th y-monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoTwoForm<T = BigInt> {
    pub a: [[T; 3]; 3],
}

/// Ternary cubic with coefficients in the order
/// x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryCubic<T = BigInt> {
    pub coeffs: [T; 10],
}

/// 3x3x3 cube; `s[9i + 3j + k]` is the coefficient of x_i y_j z_k (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cube<T = BigInt> {
    pub s: [T; 27],
}

/// 2x2x2x2 hypercube; `h[8i + 4j + 2k + l]` is the coefficient of x_i y_j z_k t_l.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypercube<T = BigInt> {
    pub h: [T; 16],
}

pub const CUBIC_MONOMIALS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

fn arr<T: Clone, const N: usize>(v: &[T]) -> [T; N] {
    std::array::from_fn(|i| v[i].clone())
}

impl<T: Coeff> BinaryQuartic<T> {
    pub fn new(c: [T; 5]) -> Self {
        BinaryQuartic { coeffs: c }
    }

    pub fn zero() -> Self {
        BinaryQuartic { coeffs: std::array::from_fn(|_| T::zero()) }
    }

    /// As a polynomial in two variables.
    pub fn to_poly(&self) -> MPoly<T> {
        let mut p = MPoly::zero(2);
        for (i, c) in self.coeffs.iter().enumerate() {
            p.add_term(vec![4 - i as u32, i as u32], c.clone());
        }
        p
    }

    /// Reads the quartic off a polynomial in variables (v0, v1) of `p`.
    pub fn from_poly(p: &MPoly<T>, v0: usize, v1: usize) -> Self {
        let n = p.nvars();
        BinaryQuartic {
            coeffs: std::array::from_fn(|i| {
                let mut e = vec![0; n];
                e[v0] = 4 - i as u32;
                e[v1] = i as u32;
                p.coeff(&e)
            }),
        }
    }
}

impl<T: Coeff> TwoTwoForm<T> {
    pub fn new(a: [[T; 3]; 3]) -> Self {
        TwoTwoForm { a }
    }

    pub fn zero() -> Self {
        TwoTwoForm { a: std::array::from_fn(|_| std::array::from_fn(|_| T::zero())) }
    }

    pub fn from_flat(c: &[T]) -> Self {
        TwoTwoForm { a: std::array::from_fn(|i| std::array::from_fn(|j| c[3 * i + j].clone())) }
    }

    pub fn flat(&self) -> Vec<T> {
        self.a.iter().flatten().cloned().collect()
    }

    /// Polynomial in (x1, x2, y1, y2).
    pub fn to_poly(&self) -> MPoly<T> {
        let mut p = MPoly::zero(4);
        for i in 0..3u32 {
            for j in 0..3u32 {
                p.add_term(vec![2 - i, i, 2 - j, j], self.a[i as usize][j as usize].clone());
            }
        }
        p
    }

    /// Reads a (2,2)-form from a polynomial; `x` and `y` name the variable indices.
    pub fn from_poly(p: &MPoly<T>, x: [usize; 2], y: [usize; 2]) -> Self {
        let n = p.nvars();
        TwoTwoForm {
            a: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    let mut e = vec![0; n];
                    e[x[0]] += 2 - i as u32;
                    e[x[1]] += i as u32;
                    e[y[0]] += 2 - j as u32;
                    e[y[1]] += j as u32;
                    p.coeff(&e)
                })
            }),
        }
    }

    /// The same form with the two sets of variables exchanged.
    pub fn swap_variables(&self) -> Self {
        TwoTwoForm { a: std::array::from_fn(|i| std::array::from_fn(|j| self.a[j][i].clone())) }
    }
}

impl<T: Coeff> TernaryCubic<T> {
    pub fn new(c: [T; 10]) -> Self {
        TernaryCubic { coeffs: c }
    }

    pub fn zero() -> Self {
        TernaryCubic { coeffs: std::array::from_fn(|_| T::zero()) }
    }

    pub fn to_poly(&self) -> MPoly<T> {
        let mut p = MPoly::zero(3);
        for (m, c) in CUBIC_MONOMIALS.iter().zip(&self.coeffs) {
            p.add_term(m.to_vec(), c.clone());
        }
        p
    }

    pub fn from_poly(p: &MPoly<T>) -> Self {
        TernaryCubic { coeffs: std::array::from_fn(|i| p.coeff(&CUBIC_MONOMIALS[i])) }
    }
}

impl<T: Coeff> Cube<T> {
    pub fn new(s: [T; 27]) -> Self {
        Cube { s }
    }

    pub fn zero() -> Self {
        Cube { s: std::array::from_fn(|_| T::zero()) }
    }

    pub fn from_flat(c: &[T]) -> Self {
        Cube { s: arr(c) }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.s[9 * i + 3 * j + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        self.s[9 * i + 3 * j + k] = v;
    }

    /// Builds a cube from three 3x3 matrices, one per value of the third index:
    /// `s[i][j][k] = mats[k][i][j]` (the coefficients of bilinear forms B_k in x_i y_j).
    pub fn from_bilinear(mats: [[[T; 3]; 3]; 3]) -> Self {
        let mut c = Self::zero();
        for (k, m) in mats.iter().enumerate() {
            for i in 0..3 {
                for j in 0..3 {
                    c.set(i, j, k, m[i][j].clone());
                }
            }
        }
        c
    }

    /// The three 3x3 slices of slicing `axis` (0, 1 or 2); each slice is indexed by
    /// the remaining two indices in their natural order.
    pub fn slices(&self, axis: usize) -> [[[T; 3]; 3]; 3] {
        std::array::from_fn(|t| {
            std::array::from_fn(|a| {
                std::array::from_fn(|b| {
                    let idx = match axis {
                        0 => (t, a, b),
                        1 => (a, t, b),
                        _ => (a, b, t),
                    };
                    self.get(idx.0, idx.1, idx.2).clone()
                })
            })
        })
    }

    /// Permutes the three index positions: result[i_{perm[0]}, ...] ... concretely the
    /// new axis `n` is old axis `perm[n]`.
    pub fn permute_axes(&self, perm: [usize; 3]) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let new = [i, j, k];
                    let mut old = [0; 3];
                    for n in 0..3 {
                        old[perm[n]] = new[n];
                    }
                    out.set(i, j, k, self.get(old[0], old[1], old[2]).clone());
                }
            }
        }
        out
    }
}

impl<T: Coeff> Hypercube<T> {
    pub fn new(h: [T; 16]) -> Self {
        Hypercube { h }
    }

    pub fn zero() -> Self {
        Hypercube { h: std::array::from_fn(|_| T::zero()) }
    }

    pub fn from_flat(c: &[T]) -> Self {
        Hypercube { h: arr(c) }
    }

    pub fn idx(i: [usize; 4]) -> usize {
        8 * i[0] + 4 * i[1] + 2 * i[2] + i[3]
    }

    pub fn get(&self, i: [usize; 4]) -> &T {
        &self.h[Self::idx(i)]
    }

    pub fn set(&mut self, i: [usize; 4], v: T) {
        self.h[Self::idx(i)] = v;
    }

    /// The 4x4 display with rows (k,i) and columns (l,j):
    /// row 2k+i, column 2l+j holds H_{ijkl}.
    pub fn to_matrix(&self) -> [[T; 4]; 4] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.get([r % 2, c % 2, r / 2, c / 2]).clone()))
    }

    pub fn from_matrix(m: &[[T; 4]; 4]) -> Self {
        let mut h = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                h.set([r % 2, c % 2, r / 2, c / 2], m[r][c].clone());
            }
        }
        h
    }

    /// New axis `n` is old axis `perm[n]`.
    pub fn permute_axes(&self, perm: [usize; 4]) -> Self {
        let mut out = Self::zero();
        for f in 0..16 {
            let new = [f >> 3 & 1, f >> 2 & 1, f >> 1 & 1, f & 1];
            let mut old = [0; 4];
            for n in 0..4 {
                old[perm[n]] = new[n];
            }
            out.h[f] = self.get(old).clone();
        }
        out
    }

    /// The pair of 2x2x2 cubes (A_axis, B_axis) as flat 8-vectors in lexicographic order
    /// of the remaining indices.
    pub fn halves(&self, axis: usize) -> [[T; 8]; 2] {
        std::array::from_fn(|t| {
            std::array::from_fn(|r| {
                let mut rest = [r >> 2 & 1, r >> 1 & 1, r & 1].into_iter();
                let idx: [usize; 4] =
                    std::array::from_fn(|n| if n == axis { t } else { rest.next().unwrap() });
                self.get(idx).clone()
            })
        })
    }
}
