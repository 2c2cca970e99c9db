//! Published S_4 and S_6 data, transcribed verbatim (including misprints) for comparison.

pub const S6_CHARACTERS: [[i64; 11]; 11] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1],
    [5, 3, 0, -1, 1, -1, 1, 2, 0, -1, -1],
    [5, -3, 0, 1, -1, 1, 1, 2, 0, -1, -1],
    [9, 3, 0, 3, -1, 0, 1, 0, -1, 1, 0],
    [9, -3, 0, -3, 1, 0, 1, 0, -1, 1, 0],
    [10, 2, -1, -2, 0, 1, -2, 1, 0, 0, 1],
    [10, -2, 1, 2, 0, -1, -2, 1, 0, 0, 1],
    [5, 1, 1, -3, -1, 0, 1, -1, 0, -1, 2],
    [5, -1, -1, 3, 1, 0, 1, -1, 0, -1, 2],
    [16, 0, 0, 0, 0, 0, 0, -2, 1, 0, -2],
];

pub const S6_CLASS_SIZES: [u64; 11] = [1, 15, 120, 15, 90, 120, 45, 40, 144, 90, 40];

pub const S4_CHARACTERS: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, -1, 1, -1, 1],
    [2, 0, -1, 0, 2],
    [3, 1, 0, -1, -1],
    [3, -1, 0, 1, -1],
];

/// `(i, j, multiplicities)` with 1-based `i <= j`.
pub const S6_PRODUCTS: [(usize, usize, [u64; 11]); 66] = [
    (1, 1, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (1, 2, [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (1, 3, [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (1, 4, [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    (1, 5, [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (1, 6, [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    (1, 7, [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (1, 8, [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (1, 9, [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (1, 10, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    (1, 11, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 2, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 3, [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    (2, 4, [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 5, [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    (2, 6, [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (2, 7, [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (2, 8, [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (2, 9, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    (2, 10, [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (2, 11, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 3, [1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0]),
    (3, 4, [0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0]),
    (3, 5, [0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]),
    (3, 6, [0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1]),
    (3, 7, [0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1]),
    (3, 8, [0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1]),
    (3, 9, [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
    (3, 10, [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (3, 11, [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2]),
    (4, 4, [1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0]),
    (4, 5, [0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1]),
    (4, 6, [0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]),
    (4, 7, [0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1]),
    (4, 8, [0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1]),
    (4, 9, [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (4, 10, [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
    (4, 11, [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2]),
    (5, 5, [1, 0, 1, 0, 2, 0, 1, 1, 0, 1, 2]),
    (5, 6, [0, 1, 0, 1, 0, 2, 1, 1, 1, 0, 2]),
    (5, 7, [0, 0, 1, 0, 1, 1, 2, 1, 1, 0, 2]),
    (5, 8, [0, 0, 0, 1, 1, 1, 1, 2, 0, 1, 2]),
    (5, 9, [0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1]),
    (5, 10, [0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1]),
    (5, 11, [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 3]),
    (6, 6, [1, 0, 1, 0, 2, 0, 1, 1, 0, 1, 2]),
    (6, 7, [0, 0, 0, 1, 1, 1, 1, 2, 0, 1, 2]),
    (6, 8, [0, 0, 1, 0, 1, 1, 2, 1, 1, 0, 2]),
    (6, 9, [0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1]),
    (6, 10, [0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1]),
    (6, 11, [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 3]),
    (7, 7, [1, 0, 1, 1, 2, 1, 1, 1, 1, 1, 2]),
    (7, 8, [0, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2]),
    (7, 9, [0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1]),
    (7, 10, [0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1]),
    (7, 11, [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 4]),
    (8, 8, [1, 0, 1, 1, 2, 1, 1, 1, 1, 1, 2]),
    (8, 9, [0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1]),
    (8, 10, [0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1]),
    (8, 11, [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 4]),
    (9, 9, [1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0]),
    (9, 10, [0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 0]),
    (9, 11, [0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 2]),
    (10, 10, [1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0]),
    (10, 11, [0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 2]),
    (11, 11, [1, 1, 2, 2, 3, 3, 4, 4, 2, 2, 5]),
];

pub struct PowerTable {
    pub base_irrep: usize,
    /// Eigenvalue base of each numerator column.
    pub bases: &'static [i64],
    /// Per target irrep: numerator coefficients, then the denominator.
    pub rows: [&'static [i64]; 11],
}

pub const S6_POWER_TABLES: [PowerTable; 9] = [
    PowerTable {
        base_irrep: 3,
        bases: &[-1, 2, 3, 5, 1],
        rows: [
            &[265, 40, 15, 1, 135, 720],
            &[-5, 40, -15, 1, -45, 720],
            &[-53, 16, 9, 1, 27, 144],
            &[1, 16, -9, 1, -9, 144],
            &[15, 0, 5, 1, -5, 80],
            &[5, 0, -5, 1, 15, 80],
            &[13, 4, 3, 1, -9, 72],
            &[-5, 4, -3, 1, -9, 72],
            &[-11, -8, 3, 1, -9, 144],
            &[7, -8, -3, 1, 27, 144],
            &[-5, -5, 0, 1, 0, 45],
        ],
    },
    PowerTable {
        base_irrep: 4,
        bases: &[-1, 2, -3, 5, 1],
        rows: [
            &[220, 40, 15, 1, 180, 720],
            &[40, 40, -15, 1, -90, 720],
            &[-8, 16, 9, 1, -18, 144],
            &[-44, 16, -9, 1, 36, 144],
            &[0, 0, 5, 1, 10, 80],
            &[20, 0, -5, 1, 0, 80],
            &[4, 4, 3, 1, 0, 72],
            &[4, 4, -3, 1, -18, 72],
            &[-20, -8, 3, 1, 0, 144],
            &[16, -8, -3, 1, 18, 144],
            &[-5, -5, 0, 1, 0, 45],
        ],
    },
    PowerTable {
        base_irrep: 5,
        bases: &[-1, 9, 3, 1],
        rows: [
            &[234, 1, 30, 135, 720],
            &[54, 1, -30, 135, 720],
            &[18, 1, 6, -9, 144],
            &[-18, 1, -6, -9, 144],
            &[-26, 1, 10, 15, 80],
            &[-6, 1, -10, 15, 80],
            &[0, 1, 0, -9, 72],
            &[0, 1, 0, -9, 72],
            &[-18, 1, -6, -9, 144],
            &[18, 1, 6, -9, 144],
            &[9, 1, 0, 0, 45],
        ],
    },
    PowerTable {
        base_irrep: 6,
        bases: &[-1, 9, -3, 1],
        rows: [
            &[144, 1, 30, 225, 720],
            &[144, 1, -30, 45, 720],
            &[0, 1, 6, 9, 144],
            &[0, 1, -6, -27, 144],
            &[-16, 1, 10, 5, 80],
            &[-16, 1, -10, 25, 80],
            &[0, 1, 0, -9, 72],
            &[0, 1, 0, -9, 72],
            &[0, 1, -6, -27, 144],
            &[0, 1, 6, 9, 144],
            &[9, 1, 0, 0, 45],
        ],
    },
    PowerTable {
        base_irrep: 7,
        bases: &[-1, -2, 2, 10, 1],
        rows: [
            &[120, 60, 15, 1, 200, 720],
            &[-120, 30, -15, 1, -40, 720],
            &[0, 6, 9, 1, -16, 144],
            &[0, 12, -9, 1, 32, 144],
            &[0, 10, 5, 1, 0, 80],
            &[0, 0, -5, 1, 0, 80],
            &[-12, -12, 3, 1, 20, 72],
            &[12, -6, -3, 1, -4, 72],
            &[24, 0, 3, 1, 8, 144],
            &[-24, 18, -3, 1, 8, 144],
            &[0, 0, 0, 1, -10, 45],
        ],
    },
    PowerTable {
        base_irrep: 8,
        bases: &[-1, -2, 2, 10, 1],
        rows: [
            &[120, 60, 15, 1, 200, 720],
            &[-120, 30, -15, 1, -40, 720],
            &[-24, 18, -3, 1, 8, 144],
            &[24, 0, 3, 1, 8, 144],
            &[0, 10, 5, 1, 0, 80],
            &[0, 0, -5, 1, 0, 80],
            &[12, -6, -3, 1, -4, 72],
            &[-12, -12, 3, 1, 20, 72],
            &[0, 12, -9, 1, 32, 144],
            &[0, 6, 9, 1, -16, 144],
            &[0, 0, 0, 1, -10, 45],
        ],
    },
    PowerTable {
        base_irrep: 9,
        bases: &[-1, 2, -3, 5, 1],
        rows: [
            &[220, 40, 15, 1, 180, 720],
            &[40, 40, -15, 1, -90, 720],
            &[16, -8, -3, 1, 18, 144],
            &[-20, -8, 3, 1, 0, 144],
            &[0, 0, 5, 1, 10, 80],
            &[20, 0, -5, 1, 0, 80],
            &[4, 4, -3, 1, -18, 72],
            &[4, 4, 3, 1, 0, 72],
            &[-44, 16, -9, 1, 36, 144],
            &[-8, 16, 9, 1, -18, 144],
            &[-5, -5, 0, 1, 0, 45],
        ],
    },
    PowerTable {
        base_irrep: 10,
        bases: &[-1, 2, 3, 5, 1],
        rows: [
            &[265, 40, 15, 1, 135, 720],
            &[-5, 40, -15, 1, -45, 720],
            &[7, -8, -3, 1, 27, 144],
            &[-11, -8, 3, 1, -9, 144],
            &[15, 0, 5, 1, -5, 80],
            &[5, 0, -5, 1, 15, 80],
            &[-5, 4, -3, 1, -9, 72],
            &[13, 4, 3, 1, -9, 72],
            &[1, 16, -9, 1, -9, 144],
            &[-53, 16, 9, 1, 27, 144],
            &[-5, -5, 0, 1, 0, 45],
        ],
    },
    PowerTable {
        base_irrep: 11,
        bases: &[16, -2, 1],
        rows: [
            &[1, 80, 144, 720],
            &[1, 80, 144, 720],
            &[1, 8, 0, 144],
            &[1, 8, 0, 144],
            &[1, 0, -16, 80],
            &[1, 0, -16, 80],
            &[1, 8, 0, 72],
            &[1, 8, 0, 72],
            &[1, 8, 0, 144],
            &[1, 8, 0, 144],
            &[1, -10, 9, 45],
        ],
    },
];

/// `X_2..X_11`; `X_1` is the identity.
pub const S6_MATRICES: [[[u64; 11]; 11]; 10] = [
    [
        [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1],
        [0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0],
        [1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1],
        [0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1],
        [1, 0, 1, 0, 2, 0, 1, 1, 0, 1, 2],
        [0, 1, 0, 1, 0, 2, 1, 1, 1, 0, 2],
        [0, 0, 1, 0, 1, 1, 2, 1, 1, 0, 2],
        [0, 0, 0, 1, 1, 1, 1, 2, 0, 1, 2],
        [0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1],
        [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 3],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
        [0, 1, 0, 1, 0, 2, 1, 1, 1, 0, 2],
        [1, 0, 1, 0, 2, 0, 1, 1, 0, 1, 2],
        [0, 0, 0, 1, 1, 1, 1, 2, 0, 1, 2],
        [0, 0, 1, 0, 1, 1, 2, 1, 1, 0, 2],
        [0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1],
        [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 3],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1],
        [0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1],
        [0, 0, 1, 0, 1, 1, 2, 1, 1, 0, 2],
        [0, 0, 0, 1, 1, 1, 1, 2, 0, 1, 2],
        [1, 0, 1, 1, 2, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2],
        [0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
        [0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1],
        [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 4],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1],
        [0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1],
        [0, 0, 0, 1, 1, 1, 1, 2, 0, 1, 2],
        [0, 0, 1, 0, 1, 1, 2, 1, 1, 0, 2],
        [0, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2],
        [1, 0, 1, 1, 2, 1, 1, 1, 1, 1, 2],
        [0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1],
        [0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
        [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 4],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
        [0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1],
        [0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
        [0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1],
        [1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0],
        [0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 0],
        [0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 2],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1],
        [0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
        [0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 0],
        [1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0],
        [0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 2],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2],
        [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2],
        [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 3],
        [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 3],
        [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 4],
        [0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 4],
        [0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 2],
        [0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 2],
        [1, 1, 2, 2, 3, 3, 4, 4, 2, 2, 5],
    ],
];

pub const S6_GRAM: [[u64; 11]; 11] = [
    [11, 1, 8, 4, 15, 5, 10, 10, 4, 8, 13],
    [1, 11, 4, 8, 5, 15, 10, 10, 8, 4, 13],
    [8, 4, 44, 20, 50, 40, 56, 42, 28, 18, 78],
    [4, 8, 20, 44, 40, 50, 42, 56, 18, 28, 78],
    [15, 5, 50, 40, 103, 65, 88, 88, 40, 50, 143],
    [5, 15, 40, 50, 65, 103, 88, 88, 50, 40, 143],
    [10, 10, 56, 42, 88, 88, 116, 96, 56, 42, 156],
    [10, 10, 42, 56, 88, 88, 96, 116, 42, 56, 156],
    [4, 8, 28, 18, 40, 50, 56, 42, 44, 20, 78],
    [8, 4, 18, 28, 50, 40, 42, 56, 20, 44, 78],
    [13, 13, 78, 78, 143, 143, 156, 156, 78, 78, 265],
];

/// Entries as `(numerator, denominator)`.
pub const S6_GRAM_INVERSE: [[(i64, i64); 11]; 11] = [
    [
        (5951, 43200),
        (-137, 21600),
        (-43, 2160),
        (23, 8640),
        (-241, 7200),
        (-107, 14400),
        (-7, 4320),
        (-7, 4320),
        (23, 8640),
        (-43, 2160),
        (299, 10800),
    ],
    [
        (-137, 21600),
        (5951, 43200),
        (23, 8640),
        (-43, 2160),
        (-107, 14400),
        (-241, 7200),
        (-7, 4320),
        (-7, 4320),
        (-43, 2160),
        (23, 8640),
        (299, 10800),
    ],
    [
        (-43, 2160),
        (23, 8640),
        (143, 1728),
        (-11, 864),
        (-71, 2880),
        (1, 720),
        (-25, 864),
        (17, 864),
        (-5, 864),
        (35, 1728),
        (-13, 2160),
    ],
    [
        (23, 8640),
        (-43, 2160),
        (-11, 864),
        (143, 1728),
        (1, 720),
        (-71, 2880),
        (17, 864),
        (-25, 864),
        (35, 1728),
        (-5, 864),
        (-13, 2160),
    ],
    [
        (-241, 7200),
        (-107, 14400),
        (-71, 2880),
        (1, 720),
        (133, 1600),
        (29, 800),
        (-11, 1440),
        (-11, 1440),
        (1, 720),
        (-71, 2880),
        (-143, 3600),
    ],
    [
        (-107, 14400),
        (-241, 7200),
        (1, 720),
        (-71, 2880),
        (29, 800),
        (133, 1600),
        (-11, 1440),
        (-11, 1440),
        (-71, 2880),
        (1, 720),
        (-143, 3600),
    ],
    [
        (-7, 4320),
        (-7, 4320),
        (-25, 864),
        (17, 864),
        (-11, 1440),
        (-11, 1440),
        (35, 432),
        (-1, 27),
        (-25, 864),
        (17, 864),
        (-13, 1080),
    ],
    [
        (-7, 4320),
        (-7, 4320),
        (17, 864),
        (-25, 864),
        (-11, 1440),
        (-11, 1440),
        (-1, 27),
        (35, 432),
        (17, 864),
        (-25, 864),
        (-13, 1080),
    ],
    [
        (23, 8640),
        (-43, 2160),
        (-5, 864),
        (35, 1728),
        (1, 720),
        (-71, 2880),
        (-25, 864),
        (17, 864),
        (143, 1728),
        (-11, 864),
        (-13, 2160),
    ],
    [
        (-43, 2160),
        (23, 8640),
        (35, 1728),
        (-5, 864),
        (-71, 2880),
        (1, 720),
        (17, 864),
        (-25, 864),
        (-11, 864),
        (143, 1728),
        (-13, 2160),
    ],
    [
        (299, 10800),
        (299, 10800),
        (-13, 2160),
        (-13, 2160),
        (-143, 3600),
        (-143, 3600),
        (-13, 1080),
        (-13, 1080),
        (-13, 2160),
        (-13, 2160),
        (44, 675),
    ],
];

pub const S6_ALPHAS: [[i64; 11]; 11] = [
    [1, 1, 5, 5, 9, 9, 10, 10, 5, 5, 16],
    [1, -1, 3, -3, 3, -3, 2, -2, 1, -1, 0],
    [1, -1, 0, 0, 0, 0, -1, 1, 1, -1, 0],
    [1, -1, -1, 1, 3, -3, -2, 2, -3, 3, 0],
    [1, -1, 1, -1, -1, 1, 0, 0, -1, 1, 0],
    [1, -1, -1, 1, 0, 0, 1, -1, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, -2, -2, 1, 1, 0],
    [1, 1, 2, 2, 0, 0, 1, 1, -1, -1, -2],
    [1, 1, 0, 0, -1, -1, 0, 0, 0, 0, 1],
    [1, 1, -1, -1, 1, 1, 0, 0, -1, -1, 0],
    [1, 1, -1, -1, 0, 0, 1, 1, 2, 2, -2],
];

pub const S6_ALPHA_DENOMINATORS: [u64; 11] = [720, 48, 6, 48, 8, 6, 16, 18, 5, 8, 18];

pub const S6_RELATIONS: [&str; 55] = [
    "x1^2-1",
    "x2x1-x3",
    "x3x1-x2",
    "x4x1-x5",
    "x5x1-x4",
    "x6x1-x7",
    "x7x1-x6",
    "x8x6",
    "x9x1-x8",
    "x10x1-x10",
    "x10x1-x9",
    "x3x2-x7-x5-x3-x1",
    "x4x2-x10-x8-x6-x4-x2",
    "x5x2-x10-x9-x7-x5-x3",
    "x6x2-x10-x7-x6-x4-x2",
    "x7x2-x10-x7-x6-x5-x3",
    "x8x2-x10-x4",
    "x9x2-x10-x5",
    "x10x2-2x10-x-9-x8-x7-x7-x6-x5-x4",
    "x3^2-x6-x4-x2-1",
    "x4x3-x10-x9-x7-x5-x3",
    "x5x3-x10-x8-x6-x4-x2",
    "x6x3-x10-x7-x6-x5-x3",
    "x7x3-x10-x7-x6-x4-x2",
    "x8x3-x10-x5",
    "x9x3-x10-x4",
    "x10x3-2x10-x9-x8-x7-x6-x5-x4",
    "x4^2-2x10-x9-x7-x6-2x4-x2-1",
    "x5x4-2x10-x8-x7-x6-2x5-x3-x1",
    "x6x4-2x10-x8-x7-2x6-x5-x4-x2",
    "x7x4-2x10-x9-2x7-x6-x5-x4-x3",
    "x8x4-x10-x8-x6-x5-x2",
    "x9x4-x10-x9-x7-x4-x3",
    "x10x4-3x10-x9-x8-2x7-2x6-2x5-2x4-x3-x2",
    "x5^2-2x10-x9-x7-x6-2x4-2x4-x2-1",
    "x6x5-2x10-x9-2x7-x6-x5-x4-x3",
    "x7x5-2x10-x8-x7-2x6-x5-x4-x2",
    "x8x5-x10-x9-x7-x4-x3",
    "x9x5-x10-x8-x6-x5-x2",
    "x10x5-3x10-x9-x8-2x7-2x6-2x5-2x4-x3-x2",
    "x6^2-2x10-x9-x8-x7-x6-x5-2x4-x3-x2-1",
    "x7x6-2x10-x9-x8-x7-x6-2x5-x4-x3-x2-x1",
    "x8x6-x10-x9-x7-x6-x4",
    "x9x6-x10-x8-x7-x6-x5",
    "x10x6-4x10-x9-x8-2x7-2x6-2x5-2x4-x3-x2",
    "x7^2-2x10-x9-x8-x7-x6-x5-2x4-x3-x2-1",
    "x8x7-x10-x8-x7-x6-x5",
    "x9x7-x10-x9-x7-x6-x4",
    "x10x7-4x10-x9-x8-2x7-2x6-2x5-2x4-x3-x2",
    "x8^2-x9-x7-x4-1",
    "x9x8-x8-x6-x5-x1",
    "x10x8-2x10-x7-x6-x5-x4-x3-x2",
    "x9^2-x9-x7-x4-1",
    "x10x9-2x10-x7-x6-x5-x4-x3-x2",
    "x10^2-5x10-2x9-2x8-4x7-4x6-3x5-3x4-2x3-2x2-x1-1",
];

/// Terms of the cubic form of R(S_4) as `(coeff, [i, j, k])`, 1-based.
pub const S4_CUBIC: [(u64, [usize; 3]); 15] = [
    (1, [1, 1, 1]),
    (1, [3, 3, 3]),
    (1, [4, 4, 4]),
    (1, [5, 5, 5]),
    (3, [1, 2, 2]),
    (3, [1, 3, 3]),
    (3, [1, 4, 4]),
    (3, [1, 5, 5]),
    (3, [2, 3, 3]),
    (3, [3, 4, 4]),
    (3, [3, 5, 5]),
    (3, [4, 4, 5]),
    (3, [4, 5, 5]),
    (6, [2, 4, 5]),
    (6, [3, 4, 5]),
];

/// Hessian of the S_4 cubic divided by 6; each entry lists the variables
/// (1-based) of a sum.
pub const S4_HESSIAN: [[&str; 5]; 5] = [
    ["1", "2", "3", "4", "5"],
    ["2", "1", "3", "5", "4"],
    ["3", "3", "1+2+3", "4+5", "4+5"],
    ["4", "5", "4+5", "1+3+4+5", "2+3+4+5"],
    ["5", "4", "4+5", "2+3+4+5", "1+3+4+5"],
];

/// Generic element of Z(f_{S_4}) with free parameters a..e.
pub const S4_CENTER_GENERIC: [[&str; 5]; 5] = [
    ["a", "b", "c", "d", "e"],
    ["b", "a", "c", "e", "d"],
    ["c", "c", "a+b+c", "d+e", "d+e"],
    ["d", "e", "d+e", "a+c+d+e", "b+c+d+e"],
    ["e", "d", "d+e", "b+c+d+e", "a+c+d+e"],
];
