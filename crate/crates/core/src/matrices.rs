//! Transition matrices from the ribbon basis, counted on permutations
//! (`R -> L`, recoil composition against Genocchi composition) and on packed
//! words (`R -> Psi`, descent composition against word composition).
//!
//! Entries are stored as `entry[I][J]`: row `I` is the recoil (resp.
//! descent) composition, column `J` the statistic value. The printed tables
//! use the transpose, which is what [`Layout::Paper`] emits.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{compositions_of, Composition};
use crate::error::{Error, Result};
use crate::sequences;
use crate::words::{packed_words_of, permutations_of};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pair {
    /// Ribbon to L, counted on permutations.
    RL,
    /// Ribbon to Psi, counted on packed words.
    RPsi,
}

impl Pair {
    pub fn name(self) -> &'static str {
        match self {
            Pair::RL => "RL",
            Pair::RPsi => "RPsi",
        }
    }

    /// Labels of the statistic and of the ribbon index.
    fn labels(self) -> (&'static str, &'static str) {
        match self {
            Pair::RL => ("GC", "Rec"),
            Pair::RPsi => ("WC", "D"),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "RL" | "rl" => Ok(Pair::RL),
            "RPsi" | "rpsi" | "RPSI" => Ok(Pair::RPsi),
            other => Err(Error::Semantic(format!("unknown matrix pair {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    /// Rows indexed by the statistic value, as in the printed tables.
    #[default]
    Paper,
    /// Rows indexed by the ribbon composition, `entry[I][J]`.
    Theorem,
}

impl FromStr for Layout {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Layout::Paper),
            "theorem" => Ok(Layout::Theorem),
            other => Err(Error::Semantic(format!("unknown layout {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub degree: usize,
    pub pair: Pair,
    pub order: Vec<Composition>,
    /// `entries[I][J]`, indices into `order`.
    pub entries: Vec<Vec<u64>>,
    /// Witness words per cell, same indexing as `entries`, sorted.
    pub witnesses: Option<Vec<Vec<Vec<String>>>>,
}

/// `(ribbon index, statistic)` of every object of size `n`, with its text.
fn tally<F>(pair: Pair, n: usize, mut visit: F) -> Result<()>
where
    F: FnMut(Composition, Composition, &dyn Fn() -> String),
{
    match pair {
        Pair::RL => {
            for sigma in permutations_of(n)? {
                visit(
                    sigma.recoil_composition(),
                    sigma.genocchi_composition(),
                    &|| sigma.to_string(),
                );
            }
        }
        Pair::RPsi => {
            for u in packed_words_of(n)? {
                visit(u.descent_composition(), u.word_composition(), &|| {
                    u.to_string()
                });
            }
        }
    }
    Ok(())
}

fn build(pair: Pair, n: usize, with_witnesses: bool) -> Result<TransitionMatrix> {
    let order = compositions_of(n)?;
    let position: HashMap<&Composition, usize> =
        order.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let dim = order.len();
    let mut entries = vec![vec![0u64; dim]; dim];
    let mut witnesses = with_witnesses.then(|| vec![vec![Vec::new(); dim]; dim]);
    tally(pair, n, |ribbon, stat, text| {
        let (i, j) = (position[&ribbon], position[&stat]);
        entries[i][j] += 1;
        if let Some(w) = witnesses.as_mut() {
            w[i][j].push(text());
        }
    })?;
    if let Some(w) = witnesses.as_mut() {
        w.iter_mut().flatten().for_each(|cell| cell.sort());
    }
    Ok(TransitionMatrix {
        degree: n,
        pair,
        order,
        entries,
        witnesses,
    })
}

/// One enumeration pass over `S_n` or `PW_n`.
pub fn transition_matrix(pair: Pair, n: usize) -> Result<TransitionMatrix> {
    build(pair, n, false)
}

pub fn transition_matrix_with_witnesses(pair: Pair, n: usize) -> Result<TransitionMatrix> {
    build(pair, n, true)
}

fn check_weights(i: &Composition, j: &Composition) -> Result<usize> {
    if i.weight() != j.weight() || i.is_empty() {
        return Err(Error::WeightMismatch(format!("{i} and {j}")));
    }
    Ok(i.weight())
}

/// `G_{IJ}`: permutations with recoil composition `I` and Genocchi
/// composition `J`.
pub fn g_coefficient(i: &Composition, j: &Composition) -> Result<u64> {
    let n = check_weights(i, j)?;
    Ok(permutations_of(n)?
        .filter(|s| &s.recoil_composition() == i && &s.genocchi_composition() == j)
        .count() as u64)
}

/// `K_{IJ}`: packed words with descent composition `I` and word composition
/// `J`.
pub fn k_coefficient(i: &Composition, j: &Composition) -> Result<u64> {
    let n = check_weights(i, j)?;
    Ok(packed_words_of(n)?
        .filter(|u| &u.descent_composition() == i && &u.word_composition() == j)
        .count() as u64)
}

/// Serializable form of a matrix in a chosen layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub degree: usize,
    pub pair: Pair,
    pub layout: Layout,
    pub order: Vec<String>,
    /// Row-major.
    pub entries: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessCell>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCell {
    pub row: String,
    pub column: String,
    pub words: Vec<String>,
}

impl TransitionMatrix {
    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn index_of(&self, c: &Composition) -> Option<usize> {
        self.order.iter().position(|x| x == c)
    }

    /// `G_{IJ}` or `K_{IJ}`.
    pub fn coefficient(&self, i: &Composition, j: &Composition) -> u64 {
        match (self.index_of(i), self.index_of(j)) {
            (Some(a), Some(b)) => self.entries[a][b],
            _ => 0,
        }
    }

    /// Entry at `(row, col)` of the given layout.
    pub fn entry(&self, layout: Layout, row: usize, col: usize) -> u64 {
        match layout {
            Layout::Theorem => self.entries[row][col],
            Layout::Paper => self.entries[col][row],
        }
    }

    pub fn rows(&self, layout: Layout) -> Vec<Vec<u64>> {
        (0..self.dim())
            .map(|r| (0..self.dim()).map(|c| self.entry(layout, r, c)).collect())
            .collect()
    }

    pub fn witness_cell(&self, layout: Layout, row: usize, col: usize) -> Option<&[String]> {
        let w = self.witnesses.as_ref()?;
        Some(match layout {
            Layout::Theorem => &w[row][col],
            Layout::Paper => &w[col][row],
        })
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().flatten().sum()
    }

    /// Row and column labels of the layout.
    fn axis_labels(&self, layout: Layout) -> (&'static str, &'static str) {
        let (stat, ribbon) = self.pair.labels();
        match layout {
            Layout::Paper => (stat, ribbon),
            Layout::Theorem => (ribbon, stat),
        }
    }

    /// The bare matrix block, zeros shown as `.`, entries right-aligned.
    pub fn to_text(&self, layout: Layout) -> String {
        let rows = self.rows(layout);
        let width = rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in rows {
            let cells: Vec<String> = row
                .iter()
                .map(|&x| {
                    let s = if x == 0 {
                        ".".to_string()
                    } else {
                        x.to_string()
                    };
                    format!("{s:>width$}")
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// One line per nonempty cell: `GC [3,1] | Rec [3,1]: 1243 1423 4123`.
    pub fn witnesses_text(&self, layout: Layout) -> Option<String> {
        self.witnesses.as_ref()?;
        let (row_label, col_label) = self.axis_labels(layout);
        let mut out = String::new();
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                let words = self.witness_cell(layout, r, c).unwrap();
                if !words.is_empty() {
                    out.push_str(&format!(
                        "{row_label} {} | {col_label} {}: {}\n",
                        self.order[r],
                        self.order[c],
                        words.join(" ")
                    ));
                }
            }
        }
        Some(out)
    }

    pub fn to_csv(&self, layout: Layout) -> String {
        let (row_label, col_label) = self.axis_labels(layout);
        let mut writer = csv::Writer::from_writer(Vec::new());
        let mut header = vec![format!("{row_label}\\{col_label}")];
        header.extend(self.order.iter().map(|c| c.to_string()));
        writer.write_record(&header).expect("in-memory write");
        for (r, row) in self.rows(layout).into_iter().enumerate() {
            let mut record = vec![self.order[r].to_string()];
            record.extend(row.iter().map(|x| x.to_string()));
            writer.write_record(&record).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_record(&self, layout: Layout) -> MatrixRecord {
        let witnesses = self.witnesses.as_ref().map(|_| {
            let mut cells = Vec::new();
            for r in 0..self.dim() {
                for c in 0..self.dim() {
                    let words = self.witness_cell(layout, r, c).unwrap();
                    if !words.is_empty() {
                        cells.push(WitnessCell {
                            row: self.order[r].to_string(),
                            column: self.order[c].to_string(),
                            words: words.to_vec(),
                        });
                    }
                }
            }
            cells
        });
        MatrixRecord {
            degree: self.degree,
            pair: self.pair,
            layout,
            order: self.order.iter().map(|c| c.to_string()).collect(),
            entries: self.rows(layout).into_iter().flatten().collect(),
            witnesses,
        }
    }

    pub fn to_json(&self, layout: Layout) -> String {
        serde_json::to_string_pretty(&self.to_record(layout)).expect("serializable")
    }
}

/// Size of the Genocchi class that the Genocchi numbers count in degree `n`:
/// `(2,...,2)` for even `n`, `(2,...,2,1)` for odd `n`.
pub fn genocchi_class_composition(n: usize) -> Composition {
    let mut parts = vec![2; n / 2];
    if n % 2 == 1 {
        parts.push(1);
    }
    Composition::new(parts).expect("positive parts")
}

/// The Genocchi number expected for [`genocchi_class_composition`]`(n)`:
/// `G_{n+2}` for even `n`, `G_{n+3}` for odd `n`.
pub fn expected_genocchi_class_size(n: usize) -> u128 {
    let index = if n.is_multiple_of(2) { n + 2 } else { n + 3 };
    sequences::genocchi_number(index / 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceRow {
    pub degree: usize,
    pub rl_total: u64,
    pub factorial: u128,
    pub rpsi_total: u64,
    pub ordered_bell: u128,
    pub genocchi_class: String,
    pub genocchi_class_size: u64,
    pub genocchi_expected: u128,
}

impl SequenceRow {
    pub fn passed(&self) -> bool {
        self.rl_total as u128 == self.factorial
            && self.rpsi_total as u128 == self.ordered_bell
            && self.genocchi_class_size as u128 == self.genocchi_expected
    }
}

/// Mass and Genocchi checks for every degree `1..=n_max`.
pub fn sequence_checks(n_max: usize) -> Result<Vec<SequenceRow>> {
    let factorials = sequences::factorials(n_max);
    let bell = sequences::ordered_bell(n_max);
    (1..=n_max)
        .map(|n| {
            let rl = transition_matrix(Pair::RL, n)?;
            let rpsi = transition_matrix(Pair::RPsi, n)?;
            let class = genocchi_class_composition(n);
            let size = rl.order.iter().map(|i| rl.coefficient(i, &class)).sum();
            Ok(SequenceRow {
                degree: n,
                rl_total: rl.total(),
                factorial: factorials[n],
                rpsi_total: rpsi.total(),
                ordered_bell: bell[n],
                genocchi_class: class.to_string(),
                genocchi_class_size: size,
                genocchi_expected: expected_genocchi_class_size(n),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::comp;

    #[test]
    fn g_coefficients() {
        assert_eq!(g_coefficient(&comp(&[2, 1]), &comp(&[2, 1])).unwrap(), 2);
        assert_eq!(g_coefficient(&comp(&[1, 2]), &comp(&[2, 1])).unwrap(), 1);
        assert_eq!(g_coefficient(&comp(&[4]), &comp(&[4])).unwrap(), 1);
        assert!(matches!(
            g_coefficient(&comp(&[2]), &comp(&[2, 1])),
            Err(Error::WeightMismatch(_))
        ));
    }

    #[test]
    fn k_coefficients() {
        assert_eq!(k_coefficient(&comp(&[2, 1]), &comp(&[2, 1])).unwrap(), 2);
        assert_eq!(k_coefficient(&comp(&[3]), &comp(&[2, 1])).unwrap(), 1);
        assert_eq!(k_coefficient(&comp(&[2, 2]), &comp(&[2, 1, 1])).unwrap(), 5);
        assert!(k_coefficient(&comp(&[1]), &comp(&[1, 1])).is_err());
    }

    #[test]
    fn small_matrices_in_paper_layout() {
        let m = transition_matrix(Pair::RL, 3).unwrap();
        assert_eq!(
            m.rows(Layout::Paper),
            vec![
                vec![1, 0, 0, 0],
                vec![0, 2, 1, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1]
            ]
        );
        let m = transition_matrix(Pair::RPsi, 3).unwrap();
        assert_eq!(
            m.rows(Layout::Paper),
            vec![
                vec![1, 0, 0, 0],
                vec![1, 2, 1, 0],
                vec![1, 0, 1, 0],
                vec![1, 2, 2, 1]
            ]
        );
        assert_eq!(
            m.to_text(Layout::Paper),
            "1 . . .\n1 2 1 .\n1 . 1 .\n1 2 2 1\n"
        );
    }

    #[test]
    fn single_pass_agrees_with_per_cell_counts() {
        for n in 1..=4 {
            let rl = transition_matrix(Pair::RL, n).unwrap();
            let rpsi = transition_matrix(Pair::RPsi, n).unwrap();
            for i in &rl.order {
                for j in &rl.order {
                    assert_eq!(rl.coefficient(i, j), g_coefficient(i, j).unwrap());
                    assert_eq!(rpsi.coefficient(i, j), k_coefficient(i, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn witnesses_cover_cells() {
        let m = transition_matrix_with_witnesses(Pair::RL, 4).unwrap();
        let (r, c) = (
            m.index_of(&comp(&[3, 1])).unwrap(),
            m.index_of(&comp(&[3, 1])).unwrap(),
        );
        assert_eq!(
            m.witness_cell(Layout::Paper, r, c).unwrap(),
            ["1243", "1423", "4123"]
        );
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                assert_eq!(
                    m.witness_cell(Layout::Theorem, i, j).unwrap().len() as u64,
                    m.entries[i][j]
                );
            }
        }
        let text = m.witnesses_text(Layout::Paper).unwrap();
        assert!(text.contains("GC [3,1] | Rec [3,1]: 1243 1423 4123"));
    }

    #[test]
    fn serializers() {
        let m = transition_matrix_with_witnesses(Pair::RL, 3).unwrap();
        let csv = m.to_csv(Layout::Paper);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "GC\\Rec,[3],\"[2,1]\",\"[1,2]\",\"[1,1,1]\""
        );
        assert_eq!(lines.next().unwrap(), "[3],1,0,0,0");
        let record = m.to_record(Layout::Theorem);
        assert_eq!(
            record.entries,
            vec![1, 0, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1]
        );
        let json = m.to_json(Layout::Paper);
        let back: MatrixRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m.to_record(Layout::Paper));
        assert!(json.contains("\"layout\": \"paper\""));
    }

    #[test]
    fn masses_and_row_sums() {
        let bell = sequences::ordered_bell(7);
        for n in 1..=7 {
            let rl = transition_matrix(Pair::RL, n).unwrap();
            assert_eq!(rl.total() as u128, sequences::factorials(n)[n]);
            // packed words counted independently of the matrix build
            assert_eq!(packed_words_of(n).unwrap().count() as u128, bell[n]);
            let mut recoil_counts: HashMap<Composition, u64> = HashMap::new();
            for s in permutations_of(n).unwrap() {
                *recoil_counts.entry(s.recoil_composition()).or_default() += 1;
            }
            for (r, i) in rl.order.iter().enumerate() {
                let row: u64 = rl.entries[r].iter().sum();
                assert_eq!(row, recoil_counts.get(i).copied().unwrap_or(0));
            }
        }
    }

    #[test]
    fn psi_matrix_factors_through_refinement() {
        for n in 1..=6 {
            let rl = transition_matrix(Pair::RL, n).unwrap();
            let rpsi = transition_matrix(Pair::RPsi, n).unwrap();
            let dim = rl.dim();
            for a in 0..dim {
                for c in 0..dim {
                    // L_J = sum of Psi_K over K finer than J
                    let via: u64 = (0..dim)
                        .filter(|&b| rl.order[c].is_finer(&rl.order[b]))
                        .map(|b| rl.entries[a][b])
                        .sum();
                    assert_eq!(via, rpsi.entries[a][c], "n = {n}");
                }
            }
        }
    }

    #[test]
    fn genocchi_class_sizes() {
        let rows = sequence_checks(5).unwrap();
        let sizes: Vec<(String, u64)> = rows
            .iter()
            .map(|r| (r.genocchi_class.clone(), r.genocchi_class_size))
            .collect();
        assert_eq!(
            sizes,
            vec![
                ("[1]".into(), 1),
                ("[2]".into(), 1),
                ("[2,1]".into(), 3),
                ("[2,2]".into(), 3),
                ("[2,2,1]".into(), 17)
            ]
        );
        assert!(rows.iter().all(SequenceRow::passed));
        assert_eq!(rows[2].rpsi_total, 13);
        assert_eq!(rows[3].rpsi_total, 75);
    }
}
