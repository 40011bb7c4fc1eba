//! Sparse graded Betti tables with exact rational entries.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A finite table `β_{i,j}` of strictly positive rationals over a polynomial
/// ring with `vars` variables. `i` is the homological degree, `j` the
/// internal degree. Absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiTable {
    vars: usize,
    entries: BTreeMap<(usize, i64), Rational>,
}

impl BettiTable {
    pub fn new(vars: usize) -> Result<Self> {
        if vars == 0 {
            return Err(Error::NoVariables);
        }
        Ok(Self {
            vars,
            entries: BTreeMap::new(),
        })
    }

    /// Builds a table from `(i, j, value)` triples. Repeated positions are
    /// summed; zero results are dropped.
    pub fn from_entries<I>(vars: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut table = Self::new(vars)?;
        for (i, j, value) in entries {
            table.add_to(i, j, &value)?;
        }
        table.check_nonnegative()?;
        Ok(table)
    }

    /// Convenience constructor from integer entries.
    pub fn from_ints(vars: usize, entries: &[(usize, i64, i64)]) -> Result<Self> {
        Self::from_entries(
            vars,
            entries.iter().map(|&(i, j, v)| (i, j, rational::int(v))),
        )
    }

    fn add_to(&mut self, i: usize, j: i64, value: &Rational) -> Result<()> {
        if i > self.vars {
            return Err(Error::ColumnOutOfRange {
                index: i,
                vars: self.vars,
            });
        }
        if value.is_zero() {
            return Ok(());
        }
        let slot = self.entries.entry((i, j)).or_insert_with(Rational::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
        Ok(())
    }

    fn check_nonnegative(&self) -> Result<()> {
        match self.entries.iter().find(|(_, v)| v.is_negative()) {
            Some((&(i, j), _)) => Err(Error::NegativeEntry { i, j }),
            None => Ok(()),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Same entries over a different number of variables.
    pub fn with_vars(&self, vars: usize) -> Result<Self> {
        Self::from_entries(vars, self.iter().map(|(i, j, v)| (i, j, v.clone())))
    }

    pub fn get(&self, i: usize, j: i64) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of nonzero entries.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// Entries in `(i, j)` ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, &Rational)> + '_ {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Nonzero entries of column `i`, ascending in `j`.
    pub fn column(&self, i: usize) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), v)| (j, v))
    }

    /// Indices of the nonempty columns, ascending.
    pub fn columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.entries.keys().map(|&(i, _)| i).collect();
        cols.dedup();
        cols
    }

    pub fn max_column(&self) -> Option<usize> {
        self.entries.keys().next_back().map(|&(i, _)| i)
    }

    /// Smallest and largest internal degree in the table.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let mut js = self.entries.keys().map(|&(_, j)| j);
        let first = js.next()?;
        Some(js.fold((first, first), |(lo, hi), j| (lo.min(j), hi.max(j))))
    }

    /// `self + q * other`, failing if any entry would become negative.
    pub fn axpy(&self, q: &Rational, other: &BettiTable) -> Result<BettiTable> {
        if self.vars != other.vars {
            return Err(Error::VarsMismatch {
                left: self.vars,
                right: other.vars,
            });
        }
        let mut out = self.clone();
        if !q.is_zero() {
            for (i, j, v) in other.iter() {
                out.add_to(i, j, &(q * v))?;
            }
        }
        out.check_nonnegative()?;
        Ok(out)
    }

    /// `q * self` for `q > 0`; a zero scale gives the empty table.
    pub fn scaled(&self, q: &Rational) -> Result<BettiTable> {
        BettiTable::new(self.vars)?.axpy(q, self)
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            vars: self.vars,
            entries: self
                .iter()
                .map(|(i, j, v)| EntryJson(i, j, v.clone()))
                .collect(),
        }
    }

    pub fn from_json(json: &TableJson) -> Result<Self> {
        Self::from_entries(
            json.vars,
            json.entries.iter().map(|e| (e.0, e.1, e.2.clone())),
        )
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("table serializes")
    }

    /// Parses the first JSON document in `text`; anything after it is ignored.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let json: TableJson = crate::first_json_document(text)?;
        Self::from_json(&json)
    }

    /// The conventional layout: column `i`, row `j - i`, with a totals line.
    pub fn layout(&self) -> String {
        self.to_string()
    }
}

/// Wire form `{"vars": n, "entries": [[i, j, "num/den"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub vars: usize,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson(
    pub usize,
    pub i64,
    #[serde(with = "rational::serde_str")] pub Rational,
);

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(max_col) = self.max_column() else {
            return writeln!(f, "(zero table)");
        };
        let rows: Vec<i64> = self.iter().map(|(i, j, _)| j - i as i64).collect();
        let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());

        let cell = |i: usize, row: i64| -> String {
            match self.entries.get(&(i, row + i as i64)) {
                Some(v) => rational::format(v),
                None => ".".to_string(),
            }
        };
        let totals: Vec<String> = (0..=max_col)
            .map(|i| {
                let t: Rational = self.column(i).map(|(_, v)| v.clone()).sum();
                rational::format(&t)
            })
            .collect();
        let widths: Vec<usize> = (0..=max_col)
            .map(|i| {
                (lo..=hi)
                    .map(|row| cell(i, row).len())
                    .chain([totals[i].len(), i.to_string().len()])
                    .max()
                    .unwrap()
            })
            .collect();
        let label_width = (lo..=hi)
            .map(|r| r.to_string().len() + 1)
            .chain(["total:".len()])
            .max()
            .unwrap();

        write!(f, "{:>label_width$}", "")?;
        for (i, w) in widths.iter().enumerate() {
            write!(f, " {i:>w$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label_width$}", "total:")?;
        for (t, w) in totals.iter().zip(&widths) {
            write!(f, " {t:>w$}")?;
        }
        writeln!(f)?;
        for row in lo..=hi {
            write!(f, "{:>label_width$}", format!("{row}:"))?;
            for (i, w) in widths.iter().enumerate() {
                write!(f, " {:>w$}", cell(i, row))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    pub(crate) fn example_table() -> BettiTable {
        BettiTable::from_ints(
            3,
            &[(0, 0, 1), (1, 2, 2), (1, 3, 1), (2, 3, 1), (2, 4, 2), (3, 5, 1)],
        )
        .unwrap()
    }

    #[test]
    fn get_reads_entries_or_zero() {
        assert_eq!(BettiTable::new(3).unwrap().get(0, 0), int(0));
        let t = example_table();
        assert_eq!(t.get(1, 2), int(2));
        assert_eq!(t.get(3, 5), int(1));
        assert_eq!(t.get(3, 4), int(0));
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(matches!(BettiTable::new(0), Err(Error::NoVariables)));
        assert!(matches!(
            BettiTable::from_ints(2, &[(3, 3, 1)]),
            Err(Error::ColumnOutOfRange { index: 3, vars: 2 })
        ));
        assert!(matches!(
            BettiTable::from_ints(2, &[(0, 0, -1)]),
            Err(Error::NegativeEntry { i: 0, j: 0 })
        ));
        let t = BettiTable::from_ints(2, &[(0, 0, 1), (1, 1, 0)]).unwrap();
        assert_eq!(t.support_len(), 1);
    }

    #[test]
    fn axpy_zero_is_identity() {
        let t = example_table();
        assert_eq!(t.axpy(&int(0), &example_table()).unwrap(), t);
    }

    #[test]
    fn axpy_removes_zeroed_entries() {
        let pure = BettiTable::from_ints(3, &[(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)]).unwrap();
        let rest = example_table().axpy(&frac(-1, 5), &pure).unwrap();
        assert_eq!(rest.get(2, 3), int(0));
        assert_eq!(rest.get(0, 0), frac(4, 5));
        assert_eq!(rest.get(1, 2), int(1));
        assert_eq!(rest.support_len(), 5);
    }

    #[test]
    fn axpy_detects_negative_entries() {
        let one = BettiTable::from_ints(1, &[(0, 0, 1)]).unwrap();
        assert!(matches!(
            one.axpy(&int(-2), &one),
            Err(Error::NegativeEntry { i: 0, j: 0 })
        ));
        let other = BettiTable::from_ints(2, &[(0, 0, 1)]).unwrap();
        assert!(matches!(one.axpy(&int(1), &other), Err(Error::VarsMismatch { .. })));
    }

    #[test]
    fn json_is_sorted_and_round_trips() {
        let t = BettiTable::from_entries(
            2,
            vec![(1, 3, frac(1, 3)), (0, 0, int(1)), (1, 1, frac(2, 4))],
        )
        .unwrap();
        let s = t.to_json_string();
        assert_eq!(s, r#"{"vars":2,"entries":[[0,0,"1"],[1,1,"1/2"],[1,3,"1/3"]]}"#);
        assert_eq!(BettiTable::from_json_str(&s).unwrap(), t);
        let bare = r#"{"vars":2,"entries":[[0,0,1]]} trailing text"#;
        assert_eq!(BettiTable::from_json_str(bare).unwrap().get(0, 0), int(1));
    }

    #[test]
    fn layout_puts_entries_in_row_j_minus_i() {
        let expected = "       0 1 2 3
total: 1 3 3 1
    0: 1 . . .
    1: . 2 1 .
    2: . 1 2 1
";
        assert_eq!(example_table().layout(), expected);
    }
}
