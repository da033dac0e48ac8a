//! Degree 4 and 6 invariants of a ternary cubic, as (coefficient, exponent vector)
//! over the coefficients in the order x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z,
//! yz^2, z^3. Scaled so that c4(xyz) = 1 and c6(xyz) = -1.

pub(super) const C4_TERMS: [(i64, [u8; 10]); 25] = [
    (144, [1, 0, 0, 1, 0, 0, 0, 1, 0, 1]),
    (-48, [1, 0, 0, 1, 0, 0, 0, 0, 2, 0]),
    (-216, [1, 0, 0, 0, 1, 0, 1, 0, 0, 1]),
    (24, [1, 0, 0, 0, 1, 0, 0, 1, 1, 0]),
    (144, [1, 0, 0, 0, 0, 1, 1, 0, 1, 0]),
    (-48, [1, 0, 0, 0, 0, 1, 0, 2, 0, 0]),
    (-48, [0, 2, 0, 0, 0, 0, 0, 1, 0, 1]),
    (16, [0, 2, 0, 0, 0, 0, 0, 0, 2, 0]),
    (144, [0, 1, 1, 0, 0, 0, 1, 0, 0, 1]),
    (-16, [0, 1, 1, 0, 0, 0, 0, 1, 1, 0]),
    (24, [0, 1, 0, 1, 1, 0, 0, 0, 0, 1]),
    (-16, [0, 1, 0, 1, 0, 1, 0, 0, 1, 0]),
    (-8, [0, 1, 0, 0, 2, 0, 0, 0, 1, 0]),
    (24, [0, 1, 0, 0, 1, 1, 0, 1, 0, 0]),
    (-48, [0, 1, 0, 0, 0, 2, 1, 0, 0, 0]),
    (-48, [0, 0, 2, 0, 0, 0, 1, 0, 1, 0]),
    (16, [0, 0, 2, 0, 0, 0, 0, 2, 0, 0]),
    (-48, [0, 0, 1, 2, 0, 0, 0, 0, 0, 1]),
    (24, [0, 0, 1, 1, 1, 0, 0, 0, 1, 0]),
    (-16, [0, 0, 1, 1, 0, 1, 0, 1, 0, 0]),
    (-8, [0, 0, 1, 0, 2, 0, 0, 1, 0, 0]),
    (24, [0, 0, 1, 0, 1, 1, 1, 0, 0, 0]),
    (16, [0, 0, 0, 2, 0, 2, 0, 0, 0, 0]),
    (-8, [0, 0, 0, 1, 2, 1, 0, 0, 0, 0]),
    (1, [0, 0, 0, 0, 4, 0, 0, 0, 0, 0]),
];

pub(super) const C6_TERMS: [(i64, [u8; 10]); 103] = [
    (5832, [2, 0, 0, 0, 0, 0, 2, 0, 0, 2]),
    (-3888, [2, 0, 0, 0, 0, 0, 1, 1, 1, 1]),
    (864, [2, 0, 0, 0, 0, 0, 1, 0, 3, 0]),
    (864, [2, 0, 0, 0, 0, 0, 0, 3, 0, 1]),
    (-216, [2, 0, 0, 0, 0, 0, 0, 2, 2, 0]),
    (-3888, [1, 1, 0, 1, 0, 0, 1, 0, 0, 2]),
    (1296, [1, 1, 0, 1, 0, 0, 0, 1, 1, 1]),
    (-288, [1, 1, 0, 1, 0, 0, 0, 0, 3, 0]),
    (1296, [1, 1, 0, 0, 1, 0, 1, 0, 1, 1]),
    (-864, [1, 1, 0, 0, 1, 0, 0, 2, 0, 1]),
    (144, [1, 1, 0, 0, 1, 0, 0, 1, 2, 0]),
    (1296, [1, 1, 0, 0, 0, 1, 1, 1, 0, 1]),
    (-864, [1, 1, 0, 0, 0, 1, 1, 0, 2, 0]),
    (144, [1, 1, 0, 0, 0, 1, 0, 2, 1, 0]),
    (1296, [1, 0, 1, 1, 0, 0, 1, 0, 1, 1]),
    (-864, [1, 0, 1, 1, 0, 0, 0, 2, 0, 1]),
    (144, [1, 0, 1, 1, 0, 0, 0, 1, 2, 0]),
    (1296, [1, 0, 1, 0, 1, 0, 1, 1, 0, 1]),
    (-864, [1, 0, 1, 0, 1, 0, 1, 0, 2, 0]),
    (144, [1, 0, 1, 0, 1, 0, 0, 2, 1, 0]),
    (-3888, [1, 0, 1, 0, 0, 1, 2, 0, 0, 1]),
    (1296, [1, 0, 1, 0, 0, 1, 1, 1, 1, 0]),
    (-288, [1, 0, 1, 0, 0, 1, 0, 3, 0, 0]),
    (864, [1, 0, 0, 3, 0, 0, 0, 0, 0, 2]),
    (-864, [1, 0, 0, 2, 1, 0, 0, 0, 1, 1]),
    (-864, [1, 0, 0, 2, 0, 1, 0, 1, 0, 1]),
    (576, [1, 0, 0, 2, 0, 1, 0, 0, 2, 0]),
    (648, [1, 0, 0, 1, 2, 0, 0, 1, 0, 1]),
    (72, [1, 0, 0, 1, 2, 0, 0, 0, 2, 0]),
    (1296, [1, 0, 0, 1, 1, 1, 1, 0, 0, 1]),
    (-720, [1, 0, 0, 1, 1, 1, 0, 1, 1, 0]),
    (-864, [1, 0, 0, 1, 0, 2, 1, 0, 1, 0]),
    (576, [1, 0, 0, 1, 0, 2, 0, 2, 0, 0]),
    (-540, [1, 0, 0, 0, 3, 0, 1, 0, 0, 1]),
    (-36, [1, 0, 0, 0, 3, 0, 0, 1, 1, 0]),
    (648, [1, 0, 0, 0, 2, 1, 1, 0, 1, 0]),
    (72, [1, 0, 0, 0, 2, 1, 0, 2, 0, 0]),
    (-864, [1, 0, 0, 0, 1, 2, 1, 1, 0, 0]),
    (864, [1, 0, 0, 0, 0, 3, 2, 0, 0, 0]),
    (864, [0, 3, 0, 0, 0, 0, 1, 0, 0, 2]),
    (-288, [0, 3, 0, 0, 0, 0, 0, 1, 1, 1]),
    (64, [0, 3, 0, 0, 0, 0, 0, 0, 3, 0]),
    (-864, [0, 2, 1, 0, 0, 0, 1, 0, 1, 1]),
    (576, [0, 2, 1, 0, 0, 0, 0, 2, 0, 1]),
    (-96, [0, 2, 1, 0, 0, 0, 0, 1, 2, 0]),
    (-216, [0, 2, 0, 2, 0, 0, 0, 0, 0, 2]),
    (144, [0, 2, 0, 1, 1, 0, 0, 0, 1, 1]),
    (144, [0, 2, 0, 1, 0, 1, 0, 1, 0, 1]),
    (-96, [0, 2, 0, 1, 0, 1, 0, 0, 2, 0]),
    (72, [0, 2, 0, 0, 2, 0, 0, 1, 0, 1]),
    (-48, [0, 2, 0, 0, 2, 0, 0, 0, 2, 0]),
    (-864, [0, 2, 0, 0, 1, 1, 1, 0, 0, 1]),
    (144, [0, 2, 0, 0, 1, 1, 0, 1, 1, 0]),
    (576, [0, 2, 0, 0, 0, 2, 1, 0, 1, 0]),
    (-216, [0, 2, 0, 0, 0, 2, 0, 2, 0, 0]),
    (-864, [0, 1, 2, 0, 0, 0, 1, 1, 0, 1]),
    (576, [0, 1, 2, 0, 0, 0, 1, 0, 2, 0]),
    (-96, [0, 1, 2, 0, 0, 0, 0, 2, 1, 0]),
    (144, [0, 1, 1, 2, 0, 0, 0, 0, 1, 1]),
    (-720, [0, 1, 1, 1, 1, 0, 0, 1, 0, 1]),
    (144, [0, 1, 1, 1, 1, 0, 0, 0, 2, 0]),
    (1296, [0, 1, 1, 1, 0, 1, 1, 0, 0, 1]),
    (-48, [0, 1, 1, 1, 0, 1, 0, 1, 1, 0]),
    (648, [0, 1, 1, 0, 2, 0, 1, 0, 0, 1]),
    (-24, [0, 1, 1, 0, 2, 0, 0, 1, 1, 0]),
    (-720, [0, 1, 1, 0, 1, 1, 1, 0, 1, 0]),
    (144, [0, 1, 1, 0, 1, 1, 0, 2, 0, 0]),
    (144, [0, 1, 1, 0, 0, 2, 1, 1, 0, 0]),
    (144, [0, 1, 0, 2, 1, 1, 0, 0, 0, 1]),
    (-96, [0, 1, 0, 2, 0, 2, 0, 0, 1, 0]),
    (-36, [0, 1, 0, 1, 3, 0, 0, 0, 0, 1]),
    (-24, [0, 1, 0, 1, 2, 1, 0, 0, 1, 0]),
    (144, [0, 1, 0, 1, 1, 2, 0, 1, 0, 0]),
    (-288, [0, 1, 0, 1, 0, 3, 1, 0, 0, 0]),
    (12, [0, 1, 0, 0, 4, 0, 0, 0, 1, 0]),
    (-36, [0, 1, 0, 0, 3, 1, 0, 1, 0, 0]),
    (72, [0, 1, 0, 0, 2, 2, 1, 0, 0, 0]),
    (864, [0, 0, 3, 0, 0, 0, 2, 0, 0, 1]),
    (-288, [0, 0, 3, 0, 0, 0, 1, 1, 1, 0]),
    (64, [0, 0, 3, 0, 0, 0, 0, 3, 0, 0]),
    (576, [0, 0, 2, 2, 0, 0, 0, 1, 0, 1]),
    (-216, [0, 0, 2, 2, 0, 0, 0, 0, 2, 0]),
    (-864, [0, 0, 2, 1, 1, 0, 1, 0, 0, 1]),
    (144, [0, 0, 2, 1, 1, 0, 0, 1, 1, 0]),
    (144, [0, 0, 2, 1, 0, 1, 1, 0, 1, 0]),
    (-96, [0, 0, 2, 1, 0, 1, 0, 2, 0, 0]),
    (72, [0, 0, 2, 0, 2, 0, 1, 0, 1, 0]),
    (-48, [0, 0, 2, 0, 2, 0, 0, 2, 0, 0]),
    (144, [0, 0, 2, 0, 1, 1, 1, 1, 0, 0]),
    (-216, [0, 0, 2, 0, 0, 2, 2, 0, 0, 0]),
    (-288, [0, 0, 1, 3, 0, 1, 0, 0, 0, 1]),
    (72, [0, 0, 1, 2, 2, 0, 0, 0, 0, 1]),
    (144, [0, 0, 1, 2, 1, 1, 0, 0, 1, 0]),
    (-96, [0, 0, 1, 2, 0, 2, 0, 1, 0, 0]),
    (-36, [0, 0, 1, 1, 3, 0, 0, 0, 1, 0]),
    (-24, [0, 0, 1, 1, 2, 1, 0, 1, 0, 0]),
    (144, [0, 0, 1, 1, 1, 2, 1, 0, 0, 0]),
    (12, [0, 0, 1, 0, 4, 0, 0, 1, 0, 0]),
    (-36, [0, 0, 1, 0, 3, 1, 1, 0, 0, 0]),
    (64, [0, 0, 0, 3, 0, 3, 0, 0, 0, 0]),
    (-48, [0, 0, 0, 2, 2, 2, 0, 0, 0, 0]),
    (12, [0, 0, 0, 1, 4, 1, 0, 0, 0, 0]),
    (-1, [0, 0, 0, 0, 6, 0, 0, 0, 0, 0]),
];
