//! Verification suites: every published table and identity recomputed, each
//! by two independent routes where one exists.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{expand_in_basis, integer, l_basis, psi_monomial, ribbon, BasisId};
use crate::composition::{all_compositions, Composition};
use crate::error::{Error, Result};
use crate::matrices::{
    expected_genocchi_class_size, genocchi_class_composition, transition_matrix,
    transition_matrix_with_witnesses, Layout, Pair, TransitionMatrix,
};
use crate::quotients::{
    brute_t_product, brute_u_product, certify_ideal, d_coefficient, t_product, u_product, Quotient,
    QuotientExpansion,
};
use crate::reference;
use crate::sequences;
use crate::words::{
    convolution, packed_words_of, permutations_of, shifted_shuffle, PackedWord, Permutation,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// `- expected` / `+ actual` lines for failures.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diff: Vec<String>,
}

impl Check {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            detail: detail.into(),
            diff: Vec::new(),
        }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>, diff: Vec<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            detail: detail.into(),
            diff,
        }
    }

    fn from_mismatches(
        name: impl Into<String>,
        ok_detail: impl Into<String>,
        diff: Vec<String>,
    ) -> Self {
        if diff.is_empty() {
            Check::pass(name, ok_detail)
        } else {
            let n = diff.len() / 2;
            Check::fail(name, format!("{n} mismatch(es)"), diff)
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)?;
        for line in &self.diff {
            write!(f, "\n    {line}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tables,
    Ideal,
    Products,
    Oracle,
    Sequences,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Tables,
        Suite::Sequences,
        Suite::Oracle,
        Suite::Products,
        Suite::Ideal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Ideal => "ideal",
            Suite::Products => "products",
            Suite::Oracle => "oracle",
            Suite::Sequences => "sequences",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Semantic(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    /// Observations that do not affect the verdict.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.suite.name())?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        for n in &self.notes {
            writeln!(f, "NOTE {n}")?;
        }
        Ok(())
    }
}

/// Runs one suite. `max_degree` bounds the degrees of the exhaustive checks;
/// `golden` adds a byte comparison of the text matrices against the files
/// `rl_3.txt`, `rl_4.txt`, `rpsi_3.txt`, `rpsi_4.txt` in that directory.
pub fn run_suite(suite: Suite, max_degree: usize, golden: Option<&Path>) -> Result<SuiteReport> {
    let mut notes = Vec::new();
    let checks = match suite {
        Suite::Tables => {
            let mut c = check_matrix_tables()?;
            c.extend(check_filled_tables()?);
            c.extend(check_class_tables()?);
            c.extend(check_worked_examples()?);
            c.push(check_wc_example()?);
            if let Some(dir) = golden {
                c.extend(check_golden(dir)?);
            }
            c
        }
        Suite::Sequences => {
            let mut c = check_masses(max_degree)?;
            c.extend(check_genocchi_rows(max_degree)?);
            c
        }
        Suite::Oracle => {
            let mut c = check_two_path(max_degree)?;
            c.push(check_lambda(max_degree)?);
            c
        }
        Suite::Products => {
            let mut c = vec![check_t_products(max_degree)?, check_u_products(max_degree)?];
            let (check, note) = check_u_example()?;
            c.push(check);
            notes.push(note);
            c.extend(check_phi(max_degree)?);
            c
        }
        Suite::Ideal => check_ideal(max_degree)?,
    };
    Ok(SuiteReport {
        suite,
        checks,
        notes,
    })
}

fn compact(c: &Composition) -> String {
    if c.parts().iter().all(|&p| p <= 9) {
        c.parts().iter().map(|p| p.to_string()).collect()
    } else {
        c.to_string()
    }
}

fn parse_compact(s: &str) -> Composition {
    s.parse().expect("reference tables hold valid compositions")
}

fn fmt_row(row: &[u64]) -> String {
    row.iter()
        .map(|&x| {
            if x == 0 {
                ".".to_string()
            } else {
                x.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn compare_rows(m: &TransitionMatrix, expected: &[&[u64]]) -> Vec<String> {
    let mut diff = Vec::new();
    for (r, (got, want)) in m.rows(Layout::Paper).iter().zip(expected).enumerate() {
        if got.as_slice() != *want {
            diff.push(format!("- row {}: {}", compact(&m.order[r]), fmt_row(want)));
            diff.push(format!("+ row {}: {}", compact(&m.order[r]), fmt_row(got)));
        }
    }
    diff
}

/// The four printed transition matrices, cell by cell.
pub fn check_matrix_tables() -> Result<Vec<Check>> {
    let cases: [(Pair, usize, &[&[u64]]); 4] = [
        (Pair::RL, 3, reference::M3_RL),
        (Pair::RL, 4, reference::M4_RL),
        (Pair::RPsi, 3, reference::M3_RPSI),
        (Pair::RPsi, 4, reference::M4_RPSI),
    ];
    cases
        .into_iter()
        .map(|(pair, n, expected)| {
            let m = transition_matrix(pair, n)?;
            Ok(Check::from_mismatches(
                format!("matrix {pair} {n}"),
                format!("{}x{} cells identical", m.dim(), m.dim()),
                compare_rows(&m, expected),
            ))
        })
        .collect()
}

/// `(row, column, words)` cells of a filled table.
type FilledTable = &'static [(&'static str, &'static str, &'static [&'static str])];

fn compare_filled(m: &TransitionMatrix, cells: FilledTable) -> Vec<String> {
    let mut expected: BTreeMap<(Composition, Composition), BTreeSet<String>> = BTreeMap::new();
    for (row, col, words) in cells {
        expected.insert(
            (parse_compact(row), parse_compact(col)),
            words.iter().map(|w| w.to_string()).collect(),
        );
    }
    let mut diff = Vec::new();
    for r in 0..m.dim() {
        for c in 0..m.dim() {
            let key = (m.order[r].clone(), m.order[c].clone());
            let got: BTreeSet<String> = m
                .witness_cell(Layout::Paper, r, c)
                .unwrap()
                .iter()
                .cloned()
                .collect();
            let want = expected.remove(&key).unwrap_or_default();
            if got != want {
                let label = format!("({}, {})", compact(&key.0), compact(&key.1));
                diff.push(format!(
                    "- {label}: {}",
                    want.into_iter().collect::<Vec<_>>().join(" ")
                ));
                diff.push(format!(
                    "+ {label}: {}",
                    got.into_iter().collect::<Vec<_>>().join(" ")
                ));
            }
        }
    }
    diff
}

/// The matrices filled with their witness permutations and packed words.
pub fn check_filled_tables() -> Result<Vec<Check>> {
    let cases: [(Pair, usize, FilledTable); 4] = [
        (Pair::RL, 3, reference::FILLED_M3),
        (Pair::RL, 4, reference::FILLED_M4),
        (Pair::RPsi, 3, reference::FILLED_M3_WORDS),
        (Pair::RPsi, 4, reference::FILLED_M4_WORDS),
    ];
    cases
        .into_iter()
        .map(|(pair, n, cells)| {
            let m = transition_matrix_with_witnesses(pair, n)?;
            Ok(Check::from_mismatches(
                format!("witnesses {pair} {n}"),
                format!("{} nonempty cells identical as sets", cells.len()),
                compare_filled(&m, cells),
            ))
        })
        .collect()
}

/// Genocchi classes of `S_2..S_4` and word classes of `PW_2`, `PW_3`.
pub fn check_class_tables() -> Result<Vec<Check>> {
    let mut gc_diff = Vec::new();
    for (label, words) in reference::GC_CLASSES {
        let c = parse_compact(label);
        let want: BTreeSet<String> = words.iter().map(|w| w.to_string()).collect();
        let got: BTreeSet<String> = permutations_of(c.weight())?
            .filter(|s| s.genocchi_composition() == c)
            .map(|s| s.to_string())
            .collect();
        if got != want {
            gc_diff.push(format!("- GC {label}: {want:?}"));
            gc_diff.push(format!("+ GC {label}: {got:?}"));
        }
    }
    let mut wc_diff = Vec::new();
    for (label, words) in reference::WC_CLASSES {
        let c = parse_compact(label);
        let want: BTreeSet<String> = words.iter().map(|w| w.to_string()).collect();
        let got: BTreeSet<String> = packed_words_of(c.weight())?
            .filter(|u| u.word_composition() == c)
            .map(|u| u.to_string())
            .collect();
        if got != want {
            wc_diff.push(format!("- WC {label}: {want:?}"));
            wc_diff.push(format!("+ WC {label}: {got:?}"));
        }
    }
    Ok(vec![
        Check::from_mismatches("GC classes of S2..S4", "all 14 classes identical", gc_diff),
        Check::from_mismatches("WC classes of PW2..PW3", "all 6 classes identical", wc_diff),
    ])
}

/// The six shuffles of the `T` example and the four convolution words of the
/// `T'` example.
pub fn check_worked_examples() -> Result<Vec<Check>> {
    let (s, t, i, j, k, words) = reference::T_EXAMPLE;
    let sigma: Permutation = s.parse()?;
    let tau: Permutation = t.parse()?;
    let k = parse_compact(k);
    let mut diff = Vec::new();
    if sigma.genocchi_composition() != parse_compact(i)
        || tau.genocchi_composition() != parse_compact(j)
    {
        diff.push(format!("- GC({s}), GC({t}) = {i}, {j}"));
        diff.push(format!(
            "+ GC({s}), GC({t}) = {}, {}",
            compact(&sigma.genocchi_composition()),
            compact(&tau.genocchi_composition())
        ));
    }
    let got: BTreeSet<String> = shifted_shuffle(&sigma, &tau)
        .into_iter()
        .filter(|m| m.genocchi_composition() == k)
        .map(|m| m.to_string())
        .collect();
    let want: BTreeSet<String> = words.iter().map(|w| w.to_string()).collect();
    if got != want {
        diff.push(format!(
            "- {}",
            want.iter().cloned().collect::<Vec<_>>().join(" ")
        ));
        diff.push(format!(
            "+ {}",
            got.iter().cloned().collect::<Vec<_>>().join(" ")
        ));
    }
    let t_check = Check::from_mismatches(
        format!("shifted shuffle {s} x {t} at GC {}", compact(&k)),
        format!("{} permutations reproduced", want.len()),
        diff,
    );

    let (u, v, i, j, k, words) = reference::U_EXAMPLE;
    let u: PackedWord = u.parse()?;
    let v: PackedWord = v.parse()?;
    let k = parse_compact(k);
    let mut diff = Vec::new();
    if u.word_composition() != parse_compact(i) || v.word_composition() != parse_compact(j) {
        diff.push(format!("- WC({u}), WC({v}) = {i}, {j}"));
        diff.push(format!(
            "+ WC({u}), WC({v}) = {}, {}",
            compact(&u.word_composition()),
            compact(&v.word_composition())
        ));
    }
    let got: BTreeSet<String> = convolution(&u, &v)
        .into_iter()
        .filter(|w| w.word_composition() == k)
        .map(|w| w.to_string())
        .collect();
    let want: BTreeSet<String> = words.iter().map(|w| w.to_string()).collect();
    if got != want {
        diff.push(format!(
            "- {}",
            want.iter().cloned().collect::<Vec<_>>().join(" ")
        ));
        diff.push(format!(
            "+ {}",
            got.iter().cloned().collect::<Vec<_>>().join(" ")
        ));
    }
    let u_check = Check::from_mismatches(
        format!("convolution {u} * {v} at WC {}", compact(&k)),
        format!("{} packed words reproduced", want.len()),
        diff,
    );
    Ok(vec![t_check, u_check])
}

pub fn check_wc_example() -> Result<Check> {
    let (word, expected) = reference::WC_EXAMPLE;
    let got = word.parse::<PackedWord>()?.word_composition();
    let expected = parse_compact(expected);
    let name = format!("WC({word})");
    Ok(if got == expected {
        Check::pass(name, format!("= {expected}"))
    } else {
        Check::fail(
            name,
            "wrong value",
            vec![format!("- {expected}"), format!("+ {got}")],
        )
    })
}

/// Byte comparison of `matrix <pair> <n>` text output with golden files.
pub fn check_golden(dir: &Path) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (pair, n, file) in [
        (Pair::RL, 3, "rl_3.txt"),
        (Pair::RL, 4, "rl_4.txt"),
        (Pair::RPsi, 3, "rpsi_3.txt"),
        (Pair::RPsi, 4, "rpsi_4.txt"),
    ] {
        let path = dir.join(file);
        let name = format!("golden {}", path.display());
        let got = transition_matrix(pair, n)?.to_text(Layout::Paper);
        match std::fs::read_to_string(&path) {
            Err(e) => out.push(Check::fail(name, format!("cannot read: {e}"), Vec::new())),
            Ok(want) if want == got => out.push(Check::pass(name, "byte-identical")),
            Ok(want) => {
                let mut diff = Vec::new();
                for (w, g) in want.lines().zip(got.lines()) {
                    if w != g {
                        diff.push(format!("- {w}"));
                        diff.push(format!("+ {g}"));
                    }
                }
                if diff.is_empty() {
                    diff.push(format!("- {} bytes", want.len()));
                    diff.push(format!("+ {} bytes", got.len()));
                }
                out.push(Check::fail(name, "differs", diff));
            }
        }
    }
    Ok(out)
}

/// Total of `M_n(R,L)` is `n!` and total of `M_n(R,Psi)` the ordered Bell
/// number, for `n = 1..=n_max`.
pub fn check_masses(n_max: usize) -> Result<Vec<Check>> {
    let fact = sequences::factorials(n_max);
    let bell = sequences::ordered_bell(n_max);
    let mut rl_diff = Vec::new();
    let mut psi_diff = Vec::new();
    let mut rl_seen = Vec::new();
    let mut psi_seen = Vec::new();
    for n in 1..=n_max {
        let rl = transition_matrix(Pair::RL, n)?.total();
        let psi = transition_matrix(Pair::RPsi, n)?.total();
        rl_seen.push(rl.to_string());
        psi_seen.push(psi.to_string());
        if rl as u128 != fact[n] {
            rl_diff.push(format!("- n={n}: {}", fact[n]));
            rl_diff.push(format!("+ n={n}: {rl}"));
        }
        if psi as u128 != bell[n] {
            psi_diff.push(format!("- n={n}: {}", bell[n]));
            psi_diff.push(format!("+ n={n}: {psi}"));
        }
    }
    Ok(vec![
        Check::from_mismatches(
            format!("mass of M(R,L), n <= {n_max}"),
            format!("totals {} = n!", rl_seen.join(", ")),
            rl_diff,
        ),
        Check::from_mismatches(
            format!("mass of M(R,Psi), n <= {n_max}"),
            format!("totals {} = ordered Bell", psi_seen.join(", ")),
            psi_diff,
        ),
    ])
}

/// Sizes of the Genocchi classes `(2^k)` and `(2^k 1)` against the Seidel
/// triangle, for degrees `2..=n_max`.
pub fn check_genocchi_rows(n_max: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let class = genocchi_class_composition(n);
        let size = permutations_of(n)?
            .filter(|s| s.genocchi_composition() == class)
            .count() as u128;
        let expected = expected_genocchi_class_size(n);
        let name = format!("Genocchi class {class}");
        out.push(if size == expected {
            Check::pass(name, format!("{size} permutations = Genocchi number"))
        } else {
            Check::fail(
                name,
                "class size differs",
                vec![format!("- {expected}"), format!("+ {size}")],
            )
        });
    }
    Ok(out)
}

fn coordinates_match(
    coords: &BTreeMap<Composition, BigRational>,
    m: &TransitionMatrix,
    row: usize,
    diff: &mut Vec<String>,
    label: &str,
) {
    for (col, j) in m.order.iter().enumerate() {
        let got = coords.get(j).cloned().unwrap_or_else(BigRational::zero);
        let want = integer(m.entries[row][col] as i64);
        if got != want || !got.is_integer() || got.is_negative() {
            diff.push(format!("- {label} {} at {j}: {}", m.order[row], want));
            diff.push(format!(
                "+ {label} {} at {j}: {}",
                m.order[row],
                crate::format::rational(&got)
            ));
        }
    }
}

/// Expansion of every ribbon of degree `<= n_max` in the L and Psi bases
/// (exact linear algebra) against the counts on permutations and packed
/// words.
pub fn check_two_path(n_max: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let rl = transition_matrix(Pair::RL, n)?;
        let rpsi = transition_matrix(Pair::RPsi, n)?;
        let mut l_diff = Vec::new();
        let mut psi_diff = Vec::new();
        for (row, i) in rl.order.iter().enumerate() {
            let r = ribbon(i);
            coordinates_match(
                &expand_in_basis(&r, BasisId::L)?,
                &rl,
                row,
                &mut l_diff,
                "R->L",
            );
            coordinates_match(
                &expand_in_basis(&r, BasisId::PsiMonomial)?,
                &rpsi,
                row,
                &mut psi_diff,
                "R->Psi",
            );
        }
        out.push(Check::from_mismatches(
            format!("R in L equals G counts, n = {n}"),
            format!("{} ribbons, nonnegative integer coordinates", rl.dim()),
            l_diff,
        ));
        out.push(Check::from_mismatches(
            format!("R in Psi equals K counts, n = {n}"),
            format!("{} ribbons, nonnegative integer coordinates", rl.dim()),
            psi_diff,
        ));
    }
    Ok(out)
}

/// `Psi_(1^r) = R_(1^r)` for `r = 1..=r_max`.
pub fn check_lambda(r_max: usize) -> Result<Check> {
    let mut diff = Vec::new();
    for r in 1..=r_max {
        let ones = Composition::ones(r);
        let (a, b) = (psi_monomial(&ones), ribbon(&ones));
        if a != b {
            diff.push(format!("- Psi_(1^{r}) = {a}"));
            diff.push(format!("+ R_(1^{r}) = {b}"));
        }
    }
    Ok(Check::from_mismatches(
        format!("Psi_(1^r) = R_(1^r), r <= {r_max}"),
        "exact equality",
        diff,
    ))
}

fn compare_products<F, G>(name: String, max_total: usize, closed: F, brute: G) -> Result<Check>
where
    F: Fn(&Composition, &Composition) -> Result<QuotientExpansion>,
    G: Fn(&Composition, &Composition) -> Result<QuotientExpansion>,
{
    let mut diff = Vec::new();
    let mut pairs = 0;
    for total in 2..=max_total {
        for m in 1..total {
            for i in all_compositions(m) {
                for j in all_compositions(total - m) {
                    pairs += 1;
                    let (a, b) = (closed(&i, &j)?, brute(&i, &j)?);
                    if a != b {
                        diff.push(format!("- {i} x {j} = {a}"));
                        diff.push(format!("+ {i} x {j} = {b}"));
                    }
                }
            }
        }
    }
    Ok(Check::from_mismatches(
        name,
        format!("{pairs} products identical"),
        diff,
    ))
}

/// Closed-form `C_{I,J}^K` against shifted shuffles, `|I| + |J| <= max_total`.
pub fn check_t_products(max_total: usize) -> Result<Check> {
    compare_products(
        format!("T products: formula = shuffle, |I|+|J| <= {max_total}"),
        max_total,
        t_product,
        brute_t_product,
    )
}

/// Closed-form `D_{I,J}^K` against convolutions, `|I| + |J| <= max_total`.
pub fn check_u_products(max_total: usize) -> Result<Check> {
    compare_products(
        format!("U products: formula = convolution, |I|+|J| <= {max_total}"),
        max_total,
        u_product,
        brute_u_product,
    )
}

/// The coefficient of `U_(4,1,1,3)` in `U_(2,2,1) U_(1,3)`, with a note on
/// the printed value.
pub fn check_u_example() -> Result<(Check, String)> {
    let (_, _, i, j, k, words) = reference::U_EXAMPLE;
    let (i, j, k) = (parse_compact(i), parse_compact(j), parse_compact(k));
    let formula = d_coefficient(&i, &j, &k)?;
    let brute = brute_u_product(&i, &j)?.coefficient(&k);
    let listed = words.len() as u64;
    let name = format!("coefficient of U{k} in U{i} U{j}");
    let check = if formula == 4 && brute == 4 && listed == 4 {
        Check::pass(
            name,
            "formula C(4,3) = 4, convolution = 4, listed words = 4",
        )
    } else {
        Check::fail(
            name,
            "values disagree",
            vec![
                "- 4".to_string(),
                format!("+ formula {formula}, convolution {brute}, listed {listed}"),
            ],
        )
    };
    let note = format!(
        "erratum: the worked example for U{i} U{j} prints the coefficient of U{k} as binom(4,2) = {}, \
         but lists {listed} words; formula and convolution both give {brute}",
        reference::U_EXAMPLE_PRINTED_COEFFICIENT
    );
    Ok((check, note))
}

fn expansion_to_rational(e: &QuotientExpansion) -> BTreeMap<Composition, BigRational> {
    e.terms
        .iter()
        .map(|(k, &c)| (k.clone(), integer(c as i64)))
        .collect()
}

/// `L_I L_J` expanded in L against `T_I T_J`, and `Psi_I Psi_J` expanded in
/// Psi against `U_I U_J`, for `|I| + |J| <= max_total`.
pub fn check_phi(max_total: usize) -> Result<Vec<Check>> {
    let mut l_diff = Vec::new();
    let mut psi_diff = Vec::new();
    let mut pairs = 0;
    for total in 2..=max_total {
        for m in 1..total {
            for i in all_compositions(m) {
                let (li, pi) = (l_basis(&i), psi_monomial(&i));
                for j in all_compositions(total - m) {
                    pairs += 1;
                    let l = expand_in_basis(&li.multiply(&l_basis(&j)), BasisId::L)?;
                    let t = expansion_to_rational(&t_product(&i, &j)?);
                    if l != t {
                        l_diff.push(format!("- T{i} T{j} = {}", t_product(&i, &j)?));
                        l_diff.push(format!("+ L{i} L{j} = {:?}", l));
                    }
                    let p = expand_in_basis(&pi.multiply(&psi_monomial(&j)), BasisId::PsiMonomial)?;
                    let u = expansion_to_rational(&u_product(&i, &j)?);
                    if p != u {
                        psi_diff.push(format!("- U{i} U{j} = {}", u_product(&i, &j)?));
                        psi_diff.push(format!("+ Psi{i} Psi{j} = {:?}", p));
                    }
                }
            }
        }
    }
    Ok(vec![
        Check::from_mismatches(
            format!("L_I L_J in L = T_I T_J, |I|+|J| <= {max_total}"),
            format!("{pairs} products identical"),
            l_diff,
        ),
        Check::from_mismatches(
            format!("Psi_I Psi_J in Psi = U_I U_J, |I|+|J| <= {max_total}"),
            format!("{pairs} products identical"),
            psi_diff,
        ),
    ])
}

/// Representative independence for both quotients, total degree `<= n_max`.
pub fn check_ideal(n_max: usize) -> Result<Vec<Check>> {
    [Quotient::T, Quotient::U]
        .into_iter()
        .map(|q| {
            let report = certify_ideal(q, n_max)?;
            let name = format!("{} is a two-sided ideal quotient, m+n <= {n_max}", q.name());
            Ok(if report.passed() {
                Check::pass(
                    name,
                    format!(
                        "{} representative pairs over {} class pairs agree",
                        report.pairs_checked, report.class_pairs
                    ),
                )
            } else {
                let diff = report
                    .violations
                    .iter()
                    .take(10)
                    .flat_map(|v| {
                        [
                            format!(
                                "- {} x {} via {} {}",
                                v.left_class, v.right_class, v.reference.0, v.reference.1
                            ),
                            format!(
                                "+ {} x {} via {} {}",
                                v.left_class, v.right_class, v.witness.0, v.witness.1
                            ),
                        ]
                    })
                    .collect();
                Check::fail(
                    name,
                    format!("{} violation(s)", report.violations.len()),
                    diff,
                )
            })
        })
        .collect()
}
