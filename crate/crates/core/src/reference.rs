//! Published reference values, transcribed verbatim including their typos.
//!
//! Nothing here is used by the computation; these are the values the
//! computed tables are compared against. Rationals are kept as `"P/Q"`
//! strings so the transcription stays literal.

use crate::series::{parse_rational, Rational};

pub fn parse(s: &str) -> Rational {
    parse_rational(s).unwrap_or_else(|| panic!("malformed reference rational {s:?}"))
}

/// Table 1: `(type, a, b, c)`.
pub const TABLE1: [(&str, &str, &str, &str); 11] = [
    ("A1", "-1/24", "5/24", "1"),
    ("A2", "-1/12", "1/4", "2"),
    ("G2", "-7/6", "17/60", "14/5"),
    ("D4", "-1/6", "1/3", "4"),
    ("F4", "-13/60", "23/60", "26/5"),
    ("E6", "-1/4", "5/12", "6"),
    ("E7", "-7/24", "11/24", "7"),
    ("Yang-Lee", "11/60", "-1/60", "-22/5"),
    ("??", "1/4", "-1/12", "-6"),
    ("??", "1/3", "-1/6", "-8"),
    ("??", "5/12", "-1/4", "-10"),
];

/// Table 2: unordered pairs `{m1, m2}` in printed order.
pub const TABLE2: [(&str, &str); 9] = [
    ("5/6", "1/3"),
    ("3/4", "5/12"),
    ("11/12", "1/4"),
    ("23/24", "5/24"),
    ("17/24", "11/24"),
    ("53/60", "17/60"),
    ("47/60", "23/60"),
    ("41/60", "29/60"),
    ("59/60", "11/60"),
];

/// Table 3 row: `(s, m, [c+, c-], [a+, a-])`, with the two central charges
/// in printed order.
pub type Table3Row = (u64, u64, [&'static str; 2], [&'static str; 2]);

pub const TABLE3: [Table3Row; 22] = [
    (3599, 3479, ["-710", "49/5"], ["355/12", "-49/120"]),
    (896, 782, ["-170", "46/5"], ["85/12", "-23/60"]),
    (391, 287, ["-70", "41/5"], ["35/12", "-41/120"]),
    (209, 119, ["-35", "34/5"], ["35/24", "-17/60"]),
    (119, 47, ["-94/5", "5"], ["47/60", "-5/24"]),
    (64, 14, ["-10", "14/5"], ["5/12", "-7/60"]),
    (1798, 1680, ["-350", "48/5"], ["175/12", "-2/5"]),
    (442, 336, ["-80", "42/5"], ["10/3", "-7/20"]),
    (182, 96, ["-30", "32/5"], ["5/4", "-4/15"]),
    (22, 0, ["0", "-22/5"], ["0", "11/60"]),
    (1197, 1081, ["-230", "47/5"], ["115/12", "-47/120"]),
    (288, 190, ["-50", "38/5"], ["25/12", "-19/60"]),
    (27, 1, ["-5", "2/5"], ["5/24", "-1/60"]),
    (715, 603, ["-134", "9"], ["67/12", "-3/8"]),
    (35, 3, ["-6", "1"], ["1/4", "-1/24"]),
    (594, 484, ["-110", "44/5"], ["55/12", "-11/30"]),
    (126, 52, ["-20", "26/5"], ["5/6", "-13/60"]),
    (350, 248, ["-62", "8"], ["31/12", "-1/3"]),
    (50, 8, ["-8", "2"], ["1/3", "-1/12"]),
    (225, 33, ["-38", "7"], ["19/12", "-7/24"]),
    (160, 78, ["-26", "6"], ["13/12", "-1/4"]),
    (0, 28, ["-14", "4"], ["7/12", "-1/6"]),
];

/// One row of Table 4: the printed leading exponent and the coefficients
/// shown, in position order (printed `q^k` labels are not trusted).
#[derive(Debug, Clone, Copy)]
pub struct PrintedExpansion {
    pub a: &'static str,
    pub exponent: &'static str,
    pub coeffs: &'static [&'static str],
}

pub const TABLE4: [PrintedExpansion; 20] = [
    PrintedExpansion {
        a: "35/12",
        exponent: "35/12",
        coeffs: &["1", "287", "847903/23"],
    },
    PrintedExpansion {
        a: "35/24",
        exponent: "35/24",
        coeffs: &["1", "119", "113358/19"],
    },
    PrintedExpansion {
        a: "47/60",
        exponent: "47/60",
        coeffs: &["1", "47", "15369/17"],
    },
    PrintedExpansion {
        a: "5/12",
        exponent: "5/12",
        coeffs: &[
            "1", "14", "92", "456", "1848", "6580", "21141", "62806", "174777",
        ],
    },
    PrintedExpansion {
        a: "-7/60",
        exponent: "-7/60",
        coeffs: &["1", "14", "42", "140", "350", "840", "1827", "3858", "7637"],
    },
    PrintedExpansion {
        a: "10/3",
        exponent: "10/3",
        coeffs: &[
            "1",
            "336",
            "868136/17",
            "1541266112/323",
            "5323642484/17",
            "264979509920/17",
        ],
    },
    PrintedExpansion {
        a: "5/4",
        exponent: "5/4",
        coeffs: &["1", "96", "49869/13"],
    },
    PrintedExpansion {
        a: "5/6",
        exponent: "-6/5",
        coeffs: &[
            "1",
            "1292",
            "701246",
            "207599288",
            "36592296829",
            "3988939885028",
        ],
    },
    PrintedExpansion {
        a: "11/60",
        exponent: "11/60",
        coeffs: &["1", "0", "1", "1", "1", "1", "2", "2", "3"],
    },
    PrintedExpansion {
        a: "-19/60",
        exponent: "-19/60",
        coeffs: &["1", "190", "2831", "22306", "129276", "611724", "2511667"],
    },
    PrintedExpansion {
        a: "5/24",
        exponent: "5/24",
        coeffs: &["1", "1", "3", "4", "7", "10", "17", "23", "35"],
    },
    PrintedExpansion {
        a: "-1/60",
        exponent: "-1/60",
        coeffs: &["1", "1", "1", "1", "2", "2", "3", "3", "4"],
    },
    PrintedExpansion {
        a: "1/4",
        exponent: "1/4",
        coeffs: &["1", "3", "9", "19", "42", "81", "155", "276", "486"],
    },
    PrintedExpansion {
        a: "-1/24",
        exponent: "-1/24",
        coeffs: &["1", "3", "4", "7", "13", "19", "29", "43", "62"],
    },
    PrintedExpansion {
        a: "-13/60",
        exponent: "-13/60",
        coeffs: &["1", "52", "377", "1976", "7852", "27404", "84981", "243230"],
    },
    PrintedExpansion {
        a: "1/3",
        exponent: "1/3",
        coeffs: &[
            "1", "8", "36", "128", "394", "1088", "2776", "6656", "15155",
        ],
    },
    PrintedExpansion {
        a: "-1/12",
        exponent: "-1/12",
        coeffs: &["1", "8", "17", "46", "98", "198", "371", "692", "1205"],
    },
    PrintedExpansion {
        a: "-7/24",
        exponent: "-7/24",
        coeffs: &["1", "133", "1673", "11914", "63252", "278313", "1070006"],
    },
    PrintedExpansion {
        a: "-1/4",
        exponent: "-1/4",
        coeffs: &[
            "1", "78", "729", "4382", "19917", "77274", "264664", "827388",
        ],
    },
    PrintedExpansion {
        a: "-1/6",
        exponent: "-1/6",
        coeffs: &["1", "28", "134", "568", "1809", "5316", "13990", "34696"],
    },
];

/// The partner `f2` printed for `a = 5/6` (up to scalar).
pub const PARTNER_FIVE_SIXTHS: PrintedExpansion = PrintedExpansion {
    a: "5/6",
    exponent: "-2/3",
    coeffs: &["1", "-272", "-34696", "-1058368"],
};

/// Table 5 flattened to `(s, m, c, a, b, c~)`, in printed order.
pub const TABLE5: [(u64, u64, &str, &str, &str, &str); 14] = [
    (64, 14, "-10", "5/12", "-1/4", "6"),
    (64, 14, "14/5", "-7/60", "17/60", "14/5"),
    (22, 0, "-22/5", "11/60", "-1/60", "2/5"),
    (288, 190, "38/5", "-19/60", "29/60", "38/5"),
    (27, 1, "-5", "5/24", "-1/24", "1"),
    (27, 1, "2/5", "-1/60", "11/60", "2/5"),
    (35, 3, "-6", "1/4", "-1/12", "2"),
    (35, 3, "1", "-1/24", "5/24", "1"),
    (126, 52, "26/5", "-13/60", "23/60", "26/5"),
    (50, 8, "-8", "1/3", "-1/6", "4"),
    (50, 8, "2", "-1/12", "1/4", "2"),
    (225, 133, "7", "-7/24", "11/24", "7"),
    (160, 78, "6", "-1/4", "5/12", "6"),
    (90, 28, "4", "-1/6", "1/3", "4"),
];

/// Printed S-matrices as `(c, prefactor, entries)` with
/// `prefactor = (sign, radicand)` meaning `sign / sqrt(radicand)`.
pub type PrintedSMatrix = (i64, (f64, f64), [[f64; 2]; 2]);

pub const S_MATRICES: [PrintedSMatrix; 3] = [
    (-6, (-1.0, 3.0), [[1.0, -1.0 / 3.0], [6.0, 1.0]]),
    (-8, (1.0, 4.0), [[-1.0, 1.0 / 8.0], [24.0, 1.0]]),
    (-10, (1.0, 3.0), [[-1.0, -1.0 / 27.0], [54.0, 1.0]]),
];

/// Printed S-matrix for `c`, prefactor applied.
pub fn printed_s_matrix(c: i64) -> Option<[[f64; 2]; 2]> {
    S_MATRICES
        .iter()
        .find(|(k, _, _)| *k == c)
        .map(|(_, (sign, rad), m)| {
            let p = sign / rad.sqrt();
            [[p * m[0][0], p * m[0][1]], [p * m[1][0], p * m[1][1]]]
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcriptions_parse() {
        for (_, a, b, c) in TABLE1 {
            parse(a);
            parse(b);
            parse(c);
        }
        for row in TABLE4.iter().chain([&PARTNER_FIVE_SIXTHS]) {
            parse(row.a);
            parse(row.exponent);
            row.coeffs.iter().for_each(|c| {
                parse(c);
            });
        }
        assert!(printed_s_matrix(-8).is_some() && printed_s_matrix(4).is_none());
    }
}
