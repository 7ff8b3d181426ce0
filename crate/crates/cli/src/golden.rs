//! Published reference values. These are data, never recomputed: every
//! diff compares a fresh computation against them.

pub struct GoldenRow {
    pub id: &'static str,
    pub label: &'static str,
    pub citation: &'static str,
    /// Values for k = 1, 2, ...
    pub values: &'static [u64],
}

pub const O_SEQUENCES: GoldenRow = GoldenRow {
    id: "o_sequences",
    label: "number of Hilbert functions H, arbitrary H(1)",
    citation: "reference table of Hilbert function counts by length",
    values: &[1, 1, 2, 3, 5, 8, 12, 18, 27, 40, 57],
};

pub const N3_MONOMIAL: GoldenRow = GoldenRow {
    id: "n3_monomial",
    label: "number of monomial ideals (MacMahon), n=3",
    citation: "reference table for n=3, plane partition counts",
    values: &[1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859],
};

pub const N3_BOREL: GoldenRow = GoldenRow {
    id: "n3_borel",
    label: "number of Borel-fixed ideals, n=3",
    citation: "reference table for n=3",
    values: &[1, 1, 2, 3, 4, 6, 9, 12, 17, 24, 32],
};

pub const N3_THRESHOLD: GoldenRow = GoldenRow {
    id: "n3_threshold",
    label: "Borel-fixed with dim T>=0 >= 2(k-1), n=3",
    citation: "reference table for n=3",
    values: &[1, 1, 1, 1, 1, 1, 1, 2, 2, 4, 6],
};

pub const NK_BOREL: GoldenRow = GoldenRow {
    id: "nk_borel",
    label: "number of Borel-fixed ideals, n=k",
    citation: "reference table for n=k",
    values: &[1, 1, 2, 3, 5, 8, 13, 20, 32, 50, 77],
};

pub const NK_THRESHOLD: GoldenRow = GoldenRow {
    id: "nk_threshold",
    label: "Borel-fixed with dim T>=0 >= (n-1)(k-1), n=k",
    citation: "reference table for n=k",
    values: &[1, 1, 1, 1, 1, 1, 1, 4, 8, 16, 33],
};

/// Borel-fixed ideals in three variables of colength at most 11, other
/// than `(x1, x2, x3^k)`, whose nonnegative tangent space reaches
/// `2(k-1)`: generators, `D`, Hilbert function.
pub const EXCEPTIONAL_IDEALS: &[(&str, i64, &[u64])] = &[
    ("x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^4", 0, &[1, 3, 3, 1]),
    ("x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^5", 0, &[1, 3, 3, 1, 1]),
    ("x1*x3, x1*x2, x1^2, x2^2*x3, x2^3, x2*x3^3, x3^5", 0, &[1, 3, 3, 2, 1]),
    ("x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^6", 0, &[1, 3, 3, 1, 1, 1]),
    ("x2^2, x1*x2, x1^2, x1*x3^2, x2*x3^3, x3^5", 2, &[1, 3, 3, 2, 1]),
    ("x1*x3, x1*x2, x1^2, x2^2*x3, x2^3, x2*x3^3, x3^6", 0, &[1, 3, 3, 2, 1, 1]),
    ("x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^7", 0, &[1, 3, 3, 1, 1, 1, 1]),
    ("x2^2, x1*x2, x1^2, x1*x3^2, x2*x3^3, x3^6", 2, &[1, 3, 3, 2, 1, 1]),
    ("x2^2, x1*x2, x1^2, x2*x3^3, x1*x3^3, x3^5", 0, &[1, 3, 3, 3, 1]),
    ("x1*x2, x1^2, x1*x3^2, x2^2*x3, x2^3, x2*x3^3, x3^5", 1, &[1, 3, 4, 2, 1]),
];

pub const EXCEPTIONAL_CITATION: &str = "reference list of exceptional Borel-fixed ideals in three variables";

/// Worked example `(x1^3, x2^2, x1*x3, x1*x2, x3^4)`.
pub const WORKED_IDEAL: &str = "x1^3, x2^2, x1*x3, x1*x2, x3^4";
pub const WORKED_HOM: &[(i64, u64)] = &[(1, 5), (2, 3), (3, 0), (4, 0)];
pub const WORKED_SERIES: &str = "5T+3T^2";

/// Positive tangent dimensions at apolar ideals of these systems.
pub const WITNESS_TANGENTS: &[(&str, u64)] = &[
    ("y1^4, y2^3, y3*y4", 17),
    ("y1^4 + y2^4, y3^2, y4", 14),
    ("y1^3*y2, y3^2, y4", 14),
    ("y1^4, y2^3, y3^2, y4", 18),
    ("y1^4, y2^3 + y3^3, y4", 18),
    ("y1^4, y2^2*y3, y4", 18),
];

/// Degree-zero tangent dimensions at two of the exceptional ideals.
pub const WITNESS_T_ZERO: &[(&str, u64)] = &[
    ("x2^2, x1*x2, x1^2, x1*x3^2, x2*x3^3, x3^5", 10),
    ("x1*x2, x1^2, x1*x3^2, x2^2*x3, x2^3, x2*x3^3, x3^5", 12),
];

pub const LOCI_13421: [i64; 5] = [8, 9, 10, 8, 9];
pub const H14321_BOUND: i64 = 30;

/// `(tau, k, n, N)`.
pub const N_BOUND_VALUES: &[(u64, u64, u64, u64)] = &[(1, 8, 3, 22), (2, 11, 4, 52), (3, 9, 5, 71)];

pub const H3EQ1_SHARP: (&str, i64, i64) = ("(1,5,6,1)", 52, 48);
pub const TAU2_LOCUS: (i64, i64, i64) = (43, 52, 48);
