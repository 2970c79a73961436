//! Expanded polynomial coefficients of the two Tschirnhausen stages, as
//! sparse term lists `(coefficient, exponents)`.
//!
//! The quartic-stage tables use the variable order (quadratic, linear,
//! constant) of `x⁵ + c2 x² + c1 x + c0`.

/// One monomial: integer coefficient and per-variable exponents.
pub(crate) type Term<const N: usize> = (i64, [u8; N]);

/// Coefficient of x² in the principal form, monomials in (a, b, c, d, e, A, B).
pub(crate) const PRINCIPAL_QUADRATIC: &[Term<7>] = &[
    (-6, [2, 0, 0, 0, 0, 0, 2]),
    (3, [1, 1, 0, 0, 0, 1, 1]),
    (-1, [1, 0, 1, 0, 0, 2, 0]),
    (6, [1, 0, 1, 0, 0, 0, 1]),
    (-3, [1, 0, 0, 1, 0, 1, 0]),
    (-2, [1, 0, 0, 0, 1, 0, 0]),
    (6, [1, 0, 0, 0, 0, 1, 2]),
    (-3, [0, 2, 0, 0, 0, 0, 1]),
    (1, [0, 1, 1, 0, 0, 1, 0]),
    (2, [0, 1, 0, 1, 0, 0, 0]),
    (-3, [0, 1, 0, 0, 0, 2, 1]),
    (12, [0, 1, 0, 0, 0, 0, 2]),
    (-1, [0, 0, 2, 0, 0, 0, 0]),
    (1, [0, 0, 1, 0, 0, 3, 0]),
    (-9, [0, 0, 1, 0, 0, 1, 1]),
    (4, [0, 0, 0, 1, 0, 2, 0]),
    (-6, [0, 0, 0, 1, 0, 0, 1]),
    (5, [0, 0, 0, 0, 1, 1, 0]),
    (-10, [0, 0, 0, 0, 0, 0, 3]),
];

/// Coefficient of x in the principal form.
pub(crate) const PRINCIPAL_LINEAR: &[Term<7>] = &[
    (4, [2, 0, 0, 0, 0, 0, 3]),
    (-3, [1, 1, 0, 0, 0, 1, 2]),
    (2, [1, 0, 1, 0, 0, 2, 1]),
    (-6, [1, 0, 1, 0, 0, 0, 2]),
    (-1, [1, 0, 0, 1, 0, 3, 0]),
    (6, [1, 0, 0, 1, 0, 1, 1]),
    (-4, [1, 0, 0, 0, 1, 2, 0]),
    (4, [1, 0, 0, 0, 1, 0, 1]),
    (-4, [1, 0, 0, 0, 0, 1, 3]),
    (3, [0, 2, 0, 0, 0, 0, 2]),
    (-2, [0, 1, 1, 0, 0, 1, 1]),
    (1, [0, 1, 0, 1, 0, 2, 0]),
    (-4, [0, 1, 0, 1, 0, 0, 1]),
    (3, [0, 1, 0, 0, 1, 1, 0]),
    (3, [0, 1, 0, 0, 0, 2, 2]),
    (-8, [0, 1, 0, 0, 0, 0, 3]),
    (2, [0, 0, 2, 0, 0, 0, 1]),
    (-1, [0, 0, 1, 1, 0, 1, 0]),
    (-2, [0, 0, 1, 0, 1, 0, 0]),
    (-2, [0, 0, 1, 0, 0, 3, 1]),
    (9, [0, 0, 1, 0, 0, 1, 2]),
    (1, [0, 0, 0, 2, 0, 0, 0]),
    (1, [0, 0, 0, 1, 0, 4, 0]),
    (-8, [0, 0, 0, 1, 0, 2, 1]),
    (6, [0, 0, 0, 1, 0, 0, 2]),
    (5, [0, 0, 0, 0, 1, 3, 0]),
    (-10, [0, 0, 0, 0, 1, 1, 1]),
    (5, [0, 0, 0, 0, 0, 0, 4]),
];

/// Constant term of the principal form.
pub(crate) const PRINCIPAL_CONSTANT: &[Term<7>] = &[
    (-1, [2, 0, 0, 0, 0, 0, 4]),
    (1, [1, 1, 0, 0, 0, 1, 3]),
    (-1, [1, 0, 1, 0, 0, 2, 2]),
    (2, [1, 0, 1, 0, 0, 0, 3]),
    (1, [1, 0, 0, 1, 0, 3, 1]),
    (-3, [1, 0, 0, 1, 0, 1, 2]),
    (-1, [1, 0, 0, 0, 1, 4, 0]),
    (4, [1, 0, 0, 0, 1, 2, 1]),
    (-2, [1, 0, 0, 0, 1, 0, 2]),
    (1, [1, 0, 0, 0, 0, 1, 4]),
    (-1, [0, 2, 0, 0, 0, 0, 3]),
    (1, [0, 1, 1, 0, 0, 1, 2]),
    (-1, [0, 1, 0, 1, 0, 2, 1]),
    (2, [0, 1, 0, 1, 0, 0, 2]),
    (1, [0, 1, 0, 0, 1, 3, 0]),
    (-3, [0, 1, 0, 0, 1, 1, 1]),
    (-1, [0, 1, 0, 0, 0, 2, 3]),
    (2, [0, 1, 0, 0, 0, 0, 4]),
    (-1, [0, 0, 2, 0, 0, 0, 2]),
    (1, [0, 0, 1, 1, 0, 1, 1]),
    (-1, [0, 0, 1, 0, 1, 2, 0]),
    (2, [0, 0, 1, 0, 1, 0, 1]),
    (1, [0, 0, 1, 0, 0, 3, 2]),
    (-3, [0, 0, 1, 0, 0, 1, 3]),
    (-1, [0, 0, 0, 2, 0, 0, 1]),
    (1, [0, 0, 0, 1, 1, 1, 0]),
    (-1, [0, 0, 0, 1, 0, 4, 1]),
    (4, [0, 0, 0, 1, 0, 2, 2]),
    (-2, [0, 0, 0, 1, 0, 0, 3]),
    (-1, [0, 0, 0, 0, 2, 0, 0]),
    (1, [0, 0, 0, 0, 1, 5, 0]),
    (-5, [0, 0, 0, 0, 1, 3, 1]),
    (5, [0, 0, 0, 0, 1, 1, 2]),
    (-1, [0, 0, 0, 0, 0, 0, 5]),
];

/// `M1` of the cubic for m, monomials in (quadratic, linear, constant).
pub(crate) const M1: &[Term<3>] = &[
    (162, [7, 0, 0]),
    (2295, [4, 1, 1]),
    (-1104, [3, 3, 0]),
    (1875, [2, 0, 3]),
];

/// `N1` of the cubic for m, monomials in (quadratic, linear, constant).
pub(crate) const N1: &[Term<3>] = &[
    (-15, [1, 0, 1]),
    (16, [0, 2, 0]),
];

/// `M2` of the cubic for m, monomials in (quadratic, linear, constant).
pub(crate) const M2: &[Term<3>] = &[
    (4374, [12, 0, 0]),
    (124902, [9, 1, 1]),
    (-59859, [8, 3, 0]),
    (81000, [7, 0, 3]),
    (946350, [6, 2, 2]),
    (-869760, [5, 4, 1]),
    (205440, [4, 6, 0]),
    (1040625, [4, 1, 4]),
    (510000, [3, 3, 3]),
    (-688000, [2, 5, 2]),
    (102400, [1, 7, 1]),
    (1250000, [1, 2, 5]),
];

/// `N2` of the cubic for m, monomials in (quadratic, linear, constant).
pub(crate) const N2: &[Term<3>] = &[
    (486, [6, 0, 1]),
    (-783, [5, 2, 0]),
    (4725, [3, 1, 2]),
    (-12960, [2, 3, 1]),
    (5120, [1, 5, 0]),
    (-10000, [0, 2, 3]),
];

/// `M3` of the cubic for m, monomials in (quadratic, linear, constant).
pub(crate) const M3: &[Term<3>] = &[
    (-196830, [17, 0, 0]),
    (-8496495, [14, 1, 1]),
    (4056885, [13, 3, 0]),
    (-4829625, [12, 0, 3]),
    (-126918900, [11, 2, 2]),
    (117564615, [10, 4, 1]),
    (-27812160, [9, 6, 0]),
    (-133650000, [9, 1, 4]),
    (-651358125, [8, 3, 3]),
    (909441000, [7, 5, 2]),
    (-10546875, [7, 0, 6]),
    (-400708800, [6, 7, 1]),
    (-1065234375, [6, 2, 5]),
    (61649920, [5, 9, 0]),
    (130500000, [5, 4, 4]),
    (426800000, [4, 6, 3]),
    (-263671875, [4, 1, 7]),
    (-35200000, [3, 8, 2]),
    (-828125000, [3, 3, 6]),
    (-73728000, [2, 10, 1]),
    (125000000, [2, 5, 5]),
    (13107200, [1, 12, 0]),
    (160000000, [1, 7, 4]),
];

/// `N3` of the cubic for m, monomials in (quadratic, linear, constant).
pub(crate) const N3: &[Term<3>] = &[
    (-22599, [11, 0, 1]),
    (50301, [10, 2, 0]),
    (-516375, [8, 1, 2]),
    (1658475, [7, 3, 1]),
    (-675648, [6, 5, 0]),
    (-84375, [6, 0, 4]),
    (-2362500, [5, 2, 3]),
    (13329000, [4, 4, 2]),
    (-10376000, [3, 6, 1]),
    (-2109375, [3, 1, 5]),
    (2298880, [2, 8, 0]),
    (13375000, [2, 3, 4]),
    (-4600000, [1, 5, 3]),
    (-640000, [0, 7, 2]),
];

/// Linear coefficient of the Bring-Jerrard image, monomials in (k, l, m, n, quadratic, linear, constant).
pub(crate) const BJ_LINEAR: &[Term<7>] = &[
    (-3, [4, 0, 0, 0, 1, 1, 1]),
    (1, [4, 0, 0, 0, 0, 3, 0]),
    (2, [3, 1, 0, 0, 2, 0, 1]),
    (-1, [3, 1, 0, 0, 1, 2, 0]),
    (1, [3, 0, 1, 0, 2, 1, 0]),
    (-5, [3, 0, 1, 0, 0, 0, 2]),
    (-2, [3, 0, 0, 1, 3, 0, 0]),
    (6, [3, 0, 0, 1, 0, 1, 1]),
    (-2, [3, 0, 0, 0, 1, 0, 2]),
    (1, [3, 0, 0, 0, 0, 2, 1]),
    (5, [2, 2, 0, 0, 0, 0, 2]),
    (-7, [2, 1, 1, 0, 0, 1, 1]),
    (-14, [2, 1, 0, 1, 1, 0, 1]),
    (8, [2, 1, 0, 1, 0, 2, 0]),
    (11, [2, 1, 0, 0, 1, 1, 1]),
    (-4, [2, 1, 0, 0, 0, 3, 0]),
    (3, [2, 0, 2, 0, 1, 0, 1]),
    (2, [2, 0, 2, 0, 0, 2, 0]),
    (-10, [2, 0, 1, 1, 1, 1, 0]),
    (1, [2, 0, 1, 0, 1, 2, 0]),
    (9, [2, 0, 0, 2, 2, 0, 0]),
    (-2, [2, 0, 0, 1, 2, 1, 0]),
    (10, [2, 0, 0, 1, 0, 0, 2]),
    (1, [2, 0, 0, 0, 0, 1, 2]),
    (1, [1, 3, 0, 0, 0, 1, 1]),
    (6, [1, 2, 1, 0, 1, 0, 1]),
    (-4, [1, 2, 1, 0, 0, 2, 0]),
    (2, [1, 2, 0, 1, 1, 1, 0]),
    (-6, [1, 2, 0, 0, 2, 0, 1]),
    (3, [1, 2, 0, 0, 1, 2, 0]),
    (3, [1, 1, 2, 0, 1, 1, 0]),
    (-6, [1, 1, 1, 1, 2, 0, 0]),
    (-3, [1, 1, 1, 0, 2, 1, 0]),
    (-5, [1, 1, 1, 0, 0, 0, 2]),
    (15, [1, 1, 0, 2, 0, 0, 1]),
    (6, [1, 1, 0, 1, 3, 0, 0]),
    (-4, [1, 1, 0, 1, 0, 1, 1]),
    (4, [1, 1, 0, 0, 1, 0, 2]),
    (-3, [1, 1, 0, 0, 0, 2, 1]),
    (-10, [1, 0, 2, 1, 0, 0, 1]),
    (13, [1, 0, 2, 0, 0, 1, 1]),
    (12, [1, 0, 1, 2, 0, 1, 0]),
    (2, [1, 0, 1, 1, 1, 0, 1]),
    (-16, [1, 0, 1, 1, 0, 2, 0]),
    (-10, [1, 0, 1, 0, 1, 1, 1]),
    (4, [1, 0, 1, 0, 0, 3, 0]),
    (-12, [1, 0, 0, 3, 1, 0, 0]),
    (15, [1, 0, 0, 2, 1, 1, 0]),
    (2, [1, 0, 0, 1, 2, 0, 1]),
    (-2, [1, 0, 0, 1, 1, 2, 0]),
    (3, [1, 0, 0, 0, 2, 1, 1]),
    (-1, [1, 0, 0, 0, 1, 3, 0]),
    (5, [1, 0, 0, 0, 0, 0, 3]),
    (-2, [0, 4, 0, 0, 1, 0, 1]),
    (1, [0, 4, 0, 0, 0, 2, 0]),
    (-1, [0, 3, 1, 0, 1, 1, 0]),
    (2, [0, 3, 0, 1, 2, 0, 0]),
    (-5, [0, 3, 0, 0, 0, 0, 2]),
    (-10, [0, 2, 1, 1, 0, 0, 1]),
    (3, [0, 2, 1, 0, 0, 1, 1]),
    (6, [0, 2, 0, 2, 0, 1, 0]),
    (16, [0, 2, 0, 1, 1, 0, 1]),
    (-8, [0, 2, 0, 1, 0, 2, 0]),
    (-4, [0, 2, 0, 0, 1, 1, 1]),
    (2, [0, 2, 0, 0, 0, 3, 0]),
    (5, [0, 1, 3, 0, 0, 0, 1]),
    (-8, [0, 1, 2, 1, 0, 1, 0]),
    (-9, [0, 1, 2, 0, 1, 0, 1]),
    (4, [0, 1, 2, 0, 0, 2, 0]),
    (9, [0, 1, 1, 2, 1, 0, 0]),
    (4, [0, 1, 1, 1, 1, 1, 0]),
    (6, [0, 1, 1, 0, 2, 0, 1]),
    (-5, [0, 1, 1, 0, 1, 2, 0]),
    (-9, [0, 1, 0, 2, 2, 0, 0]),
    (4, [0, 1, 0, 1, 2, 1, 0]),
    (10, [0, 1, 0, 1, 0, 0, 2]),
    (-2, [0, 1, 0, 0, 3, 0, 1]),
    (1, [0, 1, 0, 0, 2, 2, 0]),
    (-6, [0, 1, 0, 0, 0, 1, 2]),
    (1, [0, 0, 4, 0, 0, 1, 0]),
    (-2, [0, 0, 3, 1, 1, 0, 0]),
    (-3, [0, 0, 3, 0, 1, 1, 0]),
    (6, [0, 0, 2, 1, 2, 0, 0]),
    (3, [0, 0, 2, 0, 2, 1, 0]),
    (5, [0, 0, 2, 0, 0, 0, 2]),
    (15, [0, 0, 1, 2, 0, 0, 1]),
    (-6, [0, 0, 1, 1, 3, 0, 0]),
    (-22, [0, 0, 1, 1, 0, 1, 1]),
    (-1, [0, 0, 1, 0, 3, 1, 0]),
    (-7, [0, 0, 1, 0, 1, 0, 2]),
    (7, [0, 0, 1, 0, 0, 2, 1]),
    (5, [0, 0, 0, 4, 0, 0, 0]),
    (-16, [0, 0, 0, 3, 0, 1, 0]),
    (-12, [0, 0, 0, 2, 1, 0, 1]),
    (18, [0, 0, 0, 2, 0, 2, 0]),
    (2, [0, 0, 0, 1, 4, 0, 0]),
    (16, [0, 0, 0, 1, 1, 1, 1]),
    (-8, [0, 0, 0, 1, 0, 3, 0]),
    (2, [0, 0, 0, 0, 2, 0, 2]),
    (-4, [0, 0, 0, 0, 1, 2, 1]),
    (1, [0, 0, 0, 0, 0, 4, 0]),
];

/// Constant coefficient of the Bring-Jerrard image.
pub(crate) const BJ_CONSTANT: &[Term<7>] = &[
    (1, [5, 0, 0, 0, 0, 0, 3]),
    (-1, [4, 1, 0, 0, 0, 1, 2]),
    (-2, [4, 0, 1, 0, 1, 0, 2]),
    (1, [4, 0, 1, 0, 0, 2, 1]),
    (3, [4, 0, 0, 1, 1, 1, 1]),
    (-1, [4, 0, 0, 1, 0, 3, 0]),
    (1, [3, 2, 0, 0, 1, 0, 2]),
    (-1, [3, 1, 1, 0, 1, 1, 1]),
    (-2, [3, 1, 0, 1, 2, 0, 1]),
    (1, [3, 1, 0, 1, 1, 2, 0]),
    (-5, [3, 1, 0, 0, 0, 0, 3]),
    (1, [3, 0, 2, 0, 2, 0, 1]),
    (-1, [3, 0, 1, 1, 2, 1, 0]),
    (5, [3, 0, 1, 1, 0, 0, 2]),
    (1, [3, 0, 1, 0, 0, 1, 2]),
    (1, [3, 0, 0, 2, 3, 0, 0]),
    (-3, [3, 0, 0, 2, 0, 1, 1]),
    (2, [3, 0, 0, 1, 1, 0, 2]),
    (-1, [3, 0, 0, 1, 0, 2, 1]),
    (-5, [2, 2, 0, 1, 0, 0, 2]),
    (4, [2, 2, 0, 0, 0, 1, 2]),
    (-5, [2, 1, 2, 0, 0, 0, 2]),
    (7, [2, 1, 1, 1, 0, 1, 1]),
    (6, [2, 1, 1, 0, 1, 0, 2]),
    (-4, [2, 1, 1, 0, 0, 2, 1]),
    (7, [2, 1, 0, 2, 1, 0, 1]),
    (-4, [2, 1, 0, 2, 0, 2, 0]),
    (-11, [2, 1, 0, 1, 1, 1, 1]),
    (4, [2, 1, 0, 1, 0, 3, 0]),
    (2, [2, 0, 3, 0, 0, 1, 1]),
    (-3, [2, 0, 2, 1, 1, 0, 1]),
    (-2, [2, 0, 2, 1, 0, 2, 0]),
    (1, [2, 0, 2, 0, 1, 1, 1]),
    (5, [2, 0, 1, 2, 1, 1, 0]),
    (-1, [2, 0, 1, 1, 1, 2, 0]),
    (5, [2, 0, 1, 0, 0, 0, 3]),
    (-3, [2, 0, 0, 3, 2, 0, 0]),
    (1, [2, 0, 0, 2, 2, 1, 0]),
    (-5, [2, 0, 0, 2, 0, 0, 2]),
    (-1, [2, 0, 0, 1, 0, 1, 2]),
    (-1, [2, 0, 0, 0, 1, 0, 3]),
    (5, [1, 3, 1, 0, 0, 0, 2]),
    (-1, [1, 3, 0, 1, 0, 1, 1]),
    (-3, [1, 3, 0, 0, 1, 0, 2]),
    (-4, [1, 2, 2, 0, 0, 1, 1]),
    (-6, [1, 2, 1, 1, 1, 0, 1]),
    (4, [1, 2, 1, 1, 0, 2, 0]),
    (3, [1, 2, 1, 0, 1, 1, 1]),
    (-1, [1, 2, 0, 2, 1, 1, 0]),
    (6, [1, 2, 0, 1, 2, 0, 1]),
    (-3, [1, 2, 0, 1, 1, 2, 0]),
    (5, [1, 2, 0, 0, 0, 0, 3]),
    (3, [1, 1, 3, 0, 1, 0, 1]),
    (-3, [1, 1, 2, 1, 1, 1, 0]),
    (-3, [1, 1, 2, 0, 2, 0, 1]),
    (3, [1, 1, 1, 2, 2, 0, 0]),
    (3, [1, 1, 1, 1, 2, 1, 0]),
    (5, [1, 1, 1, 1, 0, 0, 2]),
    (-7, [1, 1, 1, 0, 0, 1, 2]),
    (-5, [1, 1, 0, 3, 0, 0, 1]),
    (-3, [1, 1, 0, 2, 3, 0, 0]),
    (2, [1, 1, 0, 2, 0, 1, 1]),
    (-4, [1, 1, 0, 1, 1, 0, 2]),
    (3, [1, 1, 0, 1, 0, 2, 1]),
    (1, [1, 1, 0, 0, 1, 1, 2]),
    (5, [1, 0, 3, 0, 0, 0, 2]),
    (5, [1, 0, 2, 2, 0, 0, 1]),
    (-13, [1, 0, 2, 1, 0, 1, 1]),
    (-7, [1, 0, 2, 0, 1, 0, 2]),
    (4, [1, 0, 2, 0, 0, 2, 1]),
    (-4, [1, 0, 1, 3, 0, 1, 0]),
    (-1, [1, 0, 1, 2, 1, 0, 1]),
    (8, [1, 0, 1, 2, 0, 2, 0]),
    (10, [1, 0, 1, 1, 1, 1, 1]),
    (-4, [1, 0, 1, 1, 0, 3, 0]),
    (2, [1, 0, 1, 0, 2, 0, 2]),
    (-1, [1, 0, 1, 0, 1, 2, 1]),
    (3, [1, 0, 0, 4, 1, 0, 0]),
    (-5, [1, 0, 0, 3, 1, 1, 0]),
    (-1, [1, 0, 0, 2, 2, 0, 1]),
    (1, [1, 0, 0, 2, 1, 2, 0]),
    (-3, [1, 0, 0, 1, 2, 1, 1]),
    (1, [1, 0, 0, 1, 1, 3, 0]),
    (-5, [1, 0, 0, 1, 0, 0, 3]),
    (1, [1, 0, 0, 0, 0, 1, 3]),
    (-1, [0, 5, 0, 0, 0, 0, 2]),
    (1, [0, 4, 1, 0, 0, 1, 1]),
    (2, [0, 4, 0, 1, 1, 0, 1]),
    (-1, [0, 4, 0, 1, 0, 2, 0]),
    (-1, [0, 3, 2, 0, 1, 0, 1]),
    (1, [0, 3, 1, 1, 1, 1, 0]),
    (-1, [0, 3, 0, 2, 2, 0, 0]),
    (5, [0, 3, 0, 1, 0, 0, 2]),
    (-2, [0, 3, 0, 0, 0, 1, 2]),
    (-5, [0, 2, 2, 0, 0, 0, 2]),
    (5, [0, 2, 1, 2, 0, 0, 1]),
    (-3, [0, 2, 1, 1, 0, 1, 1]),
    (3, [0, 2, 1, 0, 1, 0, 2]),
    (2, [0, 2, 1, 0, 0, 2, 1]),
    (-2, [0, 2, 0, 3, 0, 1, 0]),
    (-8, [0, 2, 0, 2, 1, 0, 1]),
    (4, [0, 2, 0, 2, 0, 2, 0]),
    (4, [0, 2, 0, 1, 1, 1, 1]),
    (-2, [0, 2, 0, 1, 0, 3, 0]),
    (-1, [0, 2, 0, 0, 2, 0, 2]),
    (-5, [0, 1, 3, 1, 0, 0, 1]),
    (4, [0, 1, 3, 0, 0, 1, 1]),
    (4, [0, 1, 2, 2, 0, 1, 0]),
    (9, [0, 1, 2, 1, 1, 0, 1]),
    (-4, [0, 1, 2, 1, 0, 2, 0]),
    (-5, [0, 1, 2, 0, 1, 1, 1]),
    (-3, [0, 1, 1, 3, 1, 0, 0]),
    (-2, [0, 1, 1, 2, 1, 1, 0]),
    (-6, [0, 1, 1, 1, 2, 0, 1]),
    (5, [0, 1, 1, 1, 1, 2, 0]),
    (1, [0, 1, 1, 0, 2, 1, 1]),
    (-5, [0, 1, 1, 0, 0, 0, 3]),
    (3, [0, 1, 0, 3, 2, 0, 0]),
    (-2, [0, 1, 0, 2, 2, 1, 0]),
    (-5, [0, 1, 0, 2, 0, 0, 2]),
    (2, [0, 1, 0, 1, 3, 0, 1]),
    (-1, [0, 1, 0, 1, 2, 2, 0]),
    (6, [0, 1, 0, 1, 0, 1, 2]),
    (2, [0, 1, 0, 0, 1, 0, 3]),
    (-1, [0, 1, 0, 0, 0, 2, 2]),
    (1, [0, 0, 5, 0, 0, 0, 1]),
    (-1, [0, 0, 4, 1, 0, 1, 0]),
    (-3, [0, 0, 4, 0, 1, 0, 1]),
    (1, [0, 0, 3, 2, 1, 0, 0]),
    (3, [0, 0, 3, 1, 1, 1, 0]),
    (3, [0, 0, 3, 0, 2, 0, 1]),
    (-3, [0, 0, 2, 2, 2, 0, 0]),
    (-3, [0, 0, 2, 1, 2, 1, 0]),
    (-5, [0, 0, 2, 1, 0, 0, 2]),
    (-1, [0, 0, 2, 0, 3, 0, 1]),
    (3, [0, 0, 2, 0, 0, 1, 2]),
    (-5, [0, 0, 1, 3, 0, 0, 1]),
    (3, [0, 0, 1, 2, 3, 0, 0]),
    (11, [0, 0, 1, 2, 0, 1, 1]),
    (1, [0, 0, 1, 1, 3, 1, 0]),
    (7, [0, 0, 1, 1, 1, 0, 2]),
    (-7, [0, 0, 1, 1, 0, 2, 1]),
    (-3, [0, 0, 1, 0, 1, 1, 2]),
    (1, [0, 0, 1, 0, 0, 3, 1]),
    (-1, [0, 0, 0, 5, 0, 0, 0]),
    (4, [0, 0, 0, 4, 0, 1, 0]),
    (4, [0, 0, 0, 3, 1, 0, 1]),
    (-6, [0, 0, 0, 3, 0, 2, 0]),
    (-1, [0, 0, 0, 2, 4, 0, 0]),
    (-8, [0, 0, 0, 2, 1, 1, 1]),
    (4, [0, 0, 0, 2, 0, 3, 0]),
    (-2, [0, 0, 0, 1, 2, 0, 2]),
    (4, [0, 0, 0, 1, 1, 2, 1]),
    (-1, [0, 0, 0, 1, 0, 4, 0]),
    (-1, [0, 0, 0, 0, 0, 0, 4]),
];
