//! Published reference values, row `n` holding the entries for `r = 0..=n`.

pub const MOTZKIN_TRIANGLE: &[&[u64]] = &[
    &[1],
    &[1, 1],
    &[2, 2, 1],
    &[4, 5, 3, 1],
    &[9, 12, 9, 4, 1],
    &[21, 30, 25, 14, 5, 1],
    &[51, 76, 69, 44, 20, 6, 1],
    &[127, 196, 189, 133, 70, 27, 7, 1],
    &[323, 512, 518, 392, 230, 104, 35, 8, 1],
    &[835, 1353, 1422, 1140, 726, 369, 147, 44, 9, 1],
    &[2188, 3610, 3915, 3288, 2235, 1242, 560, 200, 54, 10, 1],
];

/// Projections of `D_r(M_n)` with no unnested singleton.
pub const RIORDAN_TRIANGLE: &[&[u64]] = &[
    &[1],
    &[0, 1],
    &[1, 0, 1],
    &[1, 2, 0, 1],
    &[3, 2, 3, 0, 1],
    &[6, 7, 3, 4, 0, 1],
    &[15, 14, 12, 4, 5, 0, 1],
    &[36, 37, 24, 18, 5, 6, 0, 1],
    &[91, 90, 67, 36, 25, 6, 7, 0, 1],
    &[232, 233, 165, 106, 50, 33, 7, 8, 0, 1],
    &[603, 602, 438, 264, 155, 66, 42, 8, 9, 0, 1],
];

pub const PB_IDEAL_SIZES: &[&[u64]] = &[
    &[1],
    &[1, 2],
    &[4, 8, 10],
    &[16, 52, 70, 76],
    &[100, 356, 644, 740, 764],
    &[676, 3176, 6376, 8776, 9376, 9496],
    &[5776, 30112, 75112, 113512, 135112, 139432, 140152],
    &[53824, 336848, 933080, 1668080, 2138480, 2350160, 2385440, 2390480],
];

pub const M_IDEAL_SIZES: &[&[u64]] = &[
    &[1],
    &[1, 2],
    &[4, 8, 9],
    &[16, 41, 50, 51],
    &[81, 225, 306, 322, 323],
    &[441, 1341, 1966, 2162, 2187, 2188],
    &[2601, 8377, 13138, 15074, 15474, 15510, 15511],
    &[16129, 54545, 90266, 107955, 112855, 113584, 113633, 113634],
];

pub const PB_IDEAL_RANKS: &[&[u64]] = &[
    &[1],
    &[1, 2],
    &[2, 3, 3],
    &[4, 6, 6, 4],
    &[10, 19, 12, 11, 4],
    &[26, 50, 55, 20, 16, 4],
    &[76, 171, 150, 125, 30, 22, 4],
    &[232, 532, 651, 350, 245, 42, 29, 4],
    &[764, 1961, 2128, 1876, 700, 434, 56, 37, 4],
    &[2620, 6876, 9297, 6384, 4536, 1260, 714, 72, 46, 4],
    &[9496, 27145, 34380, 32565, 15960, 9702, 2100, 1110, 90, 56, 4],
];

pub const M_IDEAL_RANKS: &[&[u64]] = &[
    &[1],
    &[1, 2],
    &[2, 3, 4],
    &[4, 6, 5, 6],
    &[9, 15, 11, 7, 8],
    &[21, 36, 32, 17, 9, 10],
    &[51, 91, 83, 56, 24, 11, 12],
    &[127, 232, 226, 157, 88, 32, 13, 14],
    &[323, 603, 608, 459, 266, 129, 41, 15, 16],
    &[835, 1585, 1655, 1305, 832, 419, 180, 51, 17, 18],
    &[2188, 4213, 4517, 3726, 2499, 1397, 626, 242, 62, 19, 20],
];

/// Rank of the idempotent-generated submonoid, `n = 0..=20`.
pub const PB_IDEMPOTENT_GENERATED_RANKS: &[u64] =
    &[1, 2, 4, 7, 11, 16, 22, 29, 37, 46, 56, 67, 79, 92, 106, 121, 137, 154, 172, 191, 211];

pub const M_IDEMPOTENT_GENERATED_RANKS: &[u64] =
    &[1, 2, 4, 7, 10, 13, 16, 19, 22, 25, 28, 31, 34, 37, 40, 43, 46, 49, 52, 55, 58];
