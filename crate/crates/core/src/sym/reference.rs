//! Published character tables used to pin the conventional `V_1..V_s`
//! numbering of irreducibles (and `g_1..g_s` numbering of classes).
//!
//! Rows are irreducibles in the published order, columns are classes in the
//! published order.

pub struct ReferenceTable {
    pub n: usize,
    pub values: &'static [&'static [i64]],
    /// Class sizes per column when the published table lists them.
    pub class_sizes: Option<&'static [u64]>,
}

pub const S4: ReferenceTable = ReferenceTable {
    n: 4,
    values: &[
        &[1, 1, 1, 1, 1],
        &[1, -1, 1, -1, 1],
        &[2, 0, -1, 0, 2],
        &[3, 1, 0, -1, -1],
        &[3, -1, 0, 1, -1],
    ],
    class_sizes: None,
};

pub const S6: ReferenceTable = ReferenceTable {
    n: 6,
    values: &[
        &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        &[1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1],
        &[5, 3, 0, -1, 1, -1, 1, 2, 0, -1, -1],
        &[5, -3, 0, 1, -1, 1, 1, 2, 0, -1, -1],
        &[9, 3, 0, 3, -1, 0, 1, 0, -1, 1, 0],
        &[9, -3, 0, -3, 1, 0, 1, 0, -1, 1, 0],
        &[10, 2, -1, -2, 0, 1, -2, 1, 0, 0, 1],
        &[10, -2, 1, 2, 0, -1, -2, 1, 0, 0, 1],
        &[5, 1, 1, -3, -1, 0, 1, -1, 0, -1, 2],
        &[5, -1, -1, 3, 1, 0, 1, -1, 0, -1, 2],
        &[16, 0, 0, 0, 0, 0, 0, -2, 1, 0, -2],
    ],
    class_sizes: Some(&[1, 15, 120, 15, 90, 120, 45, 40, 144, 90, 40]),
};

pub fn reference_table(n: usize) -> Option<&'static ReferenceTable> {
    match n {
        4 => Some(&S4),
        6 => Some(&S6),
        _ => None,
    }
}
