//! Published tables, transcribed verbatim, used by the `tables` verification
//! suite. Compositions are written compactly (`211` for `[2,1,1]`); all
//! matrices are in paper layout (rows indexed by the statistic).

/// Genocchi classes of `S_2`, `S_3`, `S_4`: `(GC, permutations)`.
pub const GC_CLASSES: &[(&str, &[&str])] = &[
    ("2", &["12"]),
    ("11", &["21"]),
    ("3", &["123"]),
    ("21", &["132", "231", "312"]),
    ("12", &["213"]),
    ("111", &["321"]),
    ("4", &["1234"]),
    (
        "31",
        &["1243", "1342", "1423", "2341", "2413", "3412", "4123"],
    ),
    ("22", &["1324", "2314", "3124"]),
    (
        "211",
        &["1432", "2431", "3142", "3241", "4132", "4231", "4312"],
    ),
    ("13", &["2134"]),
    ("121", &["2143", "3421", "4213"]),
    ("112", &["3214"]),
    ("1111", &["4321"]),
];

/// Word-composition classes of `PW_2` and `PW_3`.
pub const WC_CLASSES: &[(&str, &[&str])] = &[
    ("2", &["11"]),
    ("11", &["12", "21"]),
    ("3", &["111"]),
    ("21", &["112", "121", "212", "221"]),
    ("12", &["122", "211"]),
    ("111", &["123", "132", "213", "231", "312", "321"]),
];

pub const M3_RL: &[&[u64]] = &[&[1, 0, 0, 0], &[0, 2, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]];

pub const M4_RL: &[&[u64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[0, 3, 2, 0, 1, 1, 0, 0],
    &[0, 0, 2, 0, 1, 0, 0, 0],
    &[0, 0, 1, 3, 0, 2, 1, 0],
    &[0, 0, 0, 0, 1, 0, 0, 0],
    &[0, 0, 0, 0, 0, 2, 1, 0],
    &[0, 0, 0, 0, 0, 0, 1, 0],
    &[0, 0, 0, 0, 0, 0, 0, 1],
];

pub const M3_RPSI: &[&[u64]] = &[&[1, 0, 0, 0], &[1, 2, 1, 0], &[1, 0, 1, 0], &[1, 2, 2, 1]];

pub const M4_RPSI: &[&[u64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[1, 3, 2, 0, 1, 1, 0, 0],
    &[1, 0, 2, 0, 1, 0, 0, 0],
    &[1, 3, 5, 3, 2, 3, 1, 0],
    &[1, 0, 0, 0, 1, 0, 0, 0],
    &[1, 3, 2, 0, 2, 3, 1, 0],
    &[1, 0, 2, 0, 2, 0, 1, 0],
    &[1, 3, 5, 3, 3, 5, 3, 1],
];

/// Filled matrix for `S_3`: `(GC, Rec, permutations)`.
pub const FILLED_M3: &[(&str, &str, &[&str])] = &[
    ("3", "3", &["123"]),
    ("21", "21", &["132", "312"]),
    ("21", "12", &["231"]),
    ("12", "12", &["213"]),
    ("111", "111", &["321"]),
];

pub const FILLED_M4: &[(&str, &str, &[&str])] = &[
    ("4", "4", &["1234"]),
    ("31", "31", &["1243", "1423", "4123"]),
    ("31", "22", &["1342", "3412"]),
    ("31", "13", &["2341"]),
    ("31", "121", &["2413"]),
    ("22", "22", &["1324", "3124"]),
    ("22", "13", &["2314"]),
    ("211", "22", &["3142"]),
    ("211", "211", &["1432", "4132", "4312"]),
    ("211", "121", &["2431", "4231"]),
    ("211", "112", &["3241"]),
    ("13", "13", &["2134"]),
    ("121", "121", &["2143", "4213"]),
    ("121", "112", &["3421"]),
    ("112", "112", &["3214"]),
    ("1111", "1111", &["4321"]),
];

/// Filled matrix for `PW_3`: `(WC, D, packed words)`.
pub const FILLED_M3_WORDS: &[(&str, &str, &[&str])] = &[
    ("3", "3", &["111"]),
    ("21", "3", &["112"]),
    ("21", "21", &["121", "221"]),
    ("21", "12", &["212"]),
    ("12", "3", &["122"]),
    ("12", "12", &["211"]),
    ("111", "3", &["123"]),
    ("111", "21", &["132", "231"]),
    ("111", "12", &["312", "213"]),
    ("111", "111", &["321"]),
];

pub const FILLED_M4_WORDS: &[(&str, &str, &[&str])] = &[
    ("4", "4", &["1111"]),
    ("31", "4", &["1112"]),
    ("31", "31", &["1121", "1221", "2221"]),
    ("31", "22", &["2212", "1212"]),
    ("31", "13", &["2112"]),
    ("31", "121", &["2121"]),
    ("22", "4", &["1122"]),
    ("22", "22", &["1211", "2211"]),
    ("22", "13", &["2122"]),
    ("211", "4", &["1123"]),
    ("211", "31", &["1132", "1231", "2231"]),
    ("211", "22", &["1213", "1312", "2213", "2312", "3312"]),
    ("211", "211", &["1321", "2321", "3321"]),
    ("211", "13", &["2123", "3123"]),
    ("211", "121", &["2132", "3132", "3231"]),
    ("211", "112", &["3213"]),
    ("13", "4", &["1222"]),
    ("13", "13", &["2111"]),
    ("121", "4", &["1223"]),
    ("121", "31", &["1232", "1332", "2331"]),
    ("121", "22", &["1323", "2313"]),
    ("121", "13", &["2113", "3112"]),
    ("121", "121", &["2131", "3121", "3221"]),
    ("121", "112", &["3212"]),
    ("112", "4", &["1233"]),
    ("112", "22", &["1322", "2311"]),
    ("112", "13", &["2133", "3122"]),
    ("112", "112", &["3211"]),
    ("1111", "4", &["1234"]),
    ("1111", "31", &["1243", "1342", "2341"]),
    ("1111", "22", &["1324", "1423", "2314", "2413", "3412"]),
    ("1111", "211", &["1432", "2431", "3421"]),
    ("1111", "13", &["2134", "3124", "4123"]),
    ("1111", "121", &["2143", "3142", "3241", "4132", "4231"]),
    ("1111", "112", &["3214", "4213", "4312"]),
    ("1111", "1111", &["4321"]),
];

/// Worked example for `T`: `sigma`, `tau`, `I`, `J`, `K` and the outputs of
/// the shifted shuffle with Genocchi composition `K`.
pub const T_EXAMPLE: (&str, &str, &str, &str, &str, &[&str]) = (
    "32514",
    "2134",
    "221",
    "13",
    "42111",
    &[
        "372685194",
        "376825194",
        "376829514",
        "736825194",
        "736829514",
        "768392514",
    ],
);

/// Worked example for `T'`: the convolution `11223 * 1222` restricted to
/// word composition `K = 4113`.
pub const U_EXAMPLE: (&str, &str, &str, &str, &str, &[&str]) = (
    "11223",
    "1222",
    "221",
    "13",
    "4113",
    &["112241333", "113341222", "112231444", "223341222"],
);

/// The coefficient printed next to the `T'` worked example, which lists
/// only four words.
pub const U_EXAMPLE_PRINTED_COEFFICIENT: u64 = 6;

/// `(word, WC)` spot value.
pub const WC_EXAMPLE: (&str, &str) = ("1543421323", "23221");
