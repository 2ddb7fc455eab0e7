//! Published reference values that `table` and `verify tables` reproduce.

/// Ordered factorizations of 6 and the perfect partitions of 5 they map to.
pub const TABLE1: [(&str, &str); 3] = [("6", "(1^5)"), ("2*3", "(1, 2^2)"), ("3*2", "(1^2, 3)")];

/// Rows `v = 0..=5` of `(f_v(480)_1, f_v(480)_2, f_v(480)_3, f_v(480))`.
pub const TABLE2_FV: [[u64; 4]; 6] = [
    [13, 38, 87, 138],
    [32, 102, 132, 266],
    [51, 72, 132, 255],
    [64, 140, 0, 204],
    [65, 0, 0, 65],
    [48, 0, 0, 48],
];
pub const TABLE2_F480: u64 = 976;
/// `p̄(479, r)` for `r = 0..=5`.
pub const TABLE2_POP: [u64; 6] = [976, 1888, 1737, 944, 305, 48];
pub const TABLE2_POP_TOTAL: u64 = 5898;

/// `(n, [p̄(n, r) for r = 0..=5], p̄(n))`, both printed panels merged, with
/// absent columns zero-filled.
pub const TABLE3: [(u64, [u64; 6], u64); 50] = [
    (1, [1, 1, 0, 0, 0, 0], 2),
    (2, [1, 0, 0, 0, 0, 0], 1),
    (3, [2, 2, 1, 0, 0, 0], 5),
    (4, [1, 0, 0, 0, 0, 0], 1),
    (5, [3, 2, 0, 0, 0, 0], 5),
    (6, [1, 0, 0, 0, 0, 0], 1),
    (7, [4, 5, 3, 1, 0, 0], 13),
    (8, [2, 0, 0, 0, 0, 0], 2),
    (9, [3, 2, 0, 0, 0, 0], 5),
    (10, [1, 0, 0, 0, 0, 0], 1),
    (11, [8, 8, 3, 0, 0, 0], 19),
    (12, [1, 0, 0, 0, 0, 0], 1),
    (13, [3, 2, 0, 0, 0, 0], 5),
    (14, [3, 0, 0, 0, 0, 0], 3),
    (15, [8, 12, 9, 4, 1, 0], 34),
    (16, [1, 0, 0, 0, 0, 0], 1),
    (17, [8, 5, 0, 0, 0, 0], 13),
    (18, [1, 0, 0, 0, 0, 0], 1),
    (19, [8, 8, 3, 0, 0, 0], 19),
    (20, [3, 0, 0, 0, 0, 0], 3),
    (21, [3, 2, 0, 0, 0, 0], 5),
    (22, [1, 0, 0, 0, 0, 0], 1),
    (23, [20, 26, 15, 4, 0, 0], 65),
    (24, [2, 0, 0, 0, 0, 0], 2),
    (25, [3, 2, 0, 0, 0, 0], 5),
    (26, [4, 0, 0, 0, 0, 0], 4),
    (27, [8, 8, 3, 0, 0, 0], 19),
    (28, [1, 0, 0, 0, 0, 0], 1),
    (29, [13, 8, 0, 0, 0, 0], 21),
    (30, [1, 0, 0, 0, 0, 0], 1),
    (31, [16, 28, 25, 14, 5, 1], 89),
    (32, [3, 0, 0, 0, 0, 0], 3),
    (33, [3, 2, 0, 0, 0, 0], 5),
    (34, [3, 0, 0, 0, 0, 0], 3),
    (35, [26, 26, 9, 0, 0, 0], 61),
    (36, [1, 0, 0, 0, 0, 0], 1),
    (37, [3, 2, 0, 0, 0, 0], 5),
    (38, [3, 0, 0, 0, 0, 0], 3),
    (39, [20, 26, 15, 4, 0, 0], 65),
    (40, [1, 0, 0, 0, 0, 0], 1),
    (41, [13, 8, 0, 0, 0, 0], 21),
    (42, [1, 0, 0, 0, 0, 0], 1),
    (43, [8, 8, 3, 0, 0, 0], 19),
    (44, [8, 0, 0, 0, 0, 0], 8),
    (45, [3, 2, 0, 0, 0, 0], 5),
    (46, [1, 0, 0, 0, 0, 0], 1),
    (47, [48, 76, 57, 24, 5, 0], 210),
    (48, [2, 0, 0, 0, 0, 0], 2),
    (49, [8, 5, 0, 0, 0, 0], 13),
    (50, [3, 0, 0, 0, 0, 0], 3),
];

/// `p̄(n)` for `n ≥ 1`.
pub const SEQ_POP: [u64; 25] = [
    2, 1, 5, 1, 5, 1, 13, 2, 5, 1, 19, 1, 5, 3, 34, 1, 13, 1, 19, 3, 5, 1, 65, 2, 5,
];
/// `p̄(2n)` for `n ≥ 1`.
pub const SEQ_POP_EVEN: [u64; 12] = [1, 1, 1, 2, 1, 1, 3, 1, 1, 3, 1, 2];
/// `p̄(2n − 1)` for `n ≥ 1`.
pub const SEQ_POP_ODD: [u64; 13] = [2, 5, 5, 13, 5, 19, 5, 34, 13, 19, 5, 65, 5];

/// The perfect overpartitions of 11 by number of overlined parts.
pub const POP11: [&[&str]; 3] = [
    &[
        "(1^11)",
        "(1, 2^5)",
        "(1^2, 3^3)",
        "(1^3, 4^2)",
        "(1, 2, 4^2)",
        "(1^5, 6)",
        "(1, 2^2, 6)",
        "(1^2, 3, 6)",
    ],
    &[
        "(1~, 2^5)",
        "(1~, 2, 4^2)",
        "(1, 2~, 4^2)",
        "(1^5, 6~)",
        "(1~, 2^2, 6)",
        "(1, 2^2, 6~)",
        "(1^2, 3~, 6)",
        "(1^2, 3, 6~)",
    ],
    &["(1~, 2~, 4^2)", "(1~, 2^2, 6~)", "(1^2, 3~, 6~)"],
];
