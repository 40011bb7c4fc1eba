//! Greedy decomposition of a Betti table into pure diagrams.
//!
//! At each step the minimal shift of every nonzero column gives a degree
//! sequence `d`; the largest multiple of the canonical pure diagram `β(d)`
//! that keeps the table nonnegative is subtracted. For tables in the cone
//! the sequences produced form a strictly increasing chain and the process
//! ends with the zero table.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pure::{pure_diagram, PureDiagram};
use crate::rational::{self, Rational};
use crate::sequence::DegreeSequence;
use crate::table::{BettiTable, TableJson};

/// One summand `coefficient · canonical(diagram)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub coefficient: Rational,
    pub diagram: PureDiagram,
}

impl Part {
    /// Coefficient against the `∏ 1/|d_j - d_i|` normalization.
    pub fn normalized_coefficient(&self) -> Rational {
        &self.coefficient * self.diagram.scale()
    }

    pub fn degrees(&self) -> &DegreeSequence {
        self.diagram.degrees()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    parts: Vec<Part>,
    source: BettiTable,
}

/// Result of one greedy subtraction.
#[derive(Clone, Debug)]
pub struct GreedyStep {
    pub coefficient: Rational,
    pub diagram: PureDiagram,
    pub remainder: BettiTable,
}

/// `d_i = min { j : β_{i,j} > 0 }` over the columns `0..=p` of `table`.
pub fn top_degree_sequence(table: &BettiTable) -> Result<DegreeSequence> {
    if table.is_empty() {
        return Err(Error::EmptyTable);
    }
    let mut degrees = Vec::new();
    for (expected, col) in table.columns().into_iter().enumerate() {
        if col != expected {
            return Err(Error::ColumnGap(expected));
        }
        let (j, _) = table.column(col).next().expect("listed columns are nonempty");
        if let Some(&prev) = degrees.last() {
            if j <= prev {
                return Err(Error::NotIncreasing(col));
            }
        }
        degrees.push(j);
    }
    DegreeSequence::new(degrees)
}

pub fn greedy_step(table: &BettiTable) -> Result<GreedyStep> {
    let d = top_degree_sequence(table)?;
    let diagram = pure_diagram(&d, table.vars())?;
    let coefficient = d
        .degrees()
        .iter()
        .enumerate()
        .map(|(i, &j)| table.get(i, j) / diagram.canonical().get(i, j))
        .min()
        .expect("degree sequences are nonempty");
    let remainder = table.axpy(&-coefficient.clone(), diagram.canonical())?;
    debug_assert!(remainder.support_len() < table.support_len());
    Ok(GreedyStep {
        coefficient,
        diagram,
        remainder,
    })
}

pub fn decompose(table: &BettiTable) -> Result<Decomposition> {
    let cap = table.support_len() + 1;
    let mut parts: Vec<Part> = Vec::new();
    let mut rest = table.clone();
    while !rest.is_empty() {
        assert!(parts.len() < cap, "greedy decomposition failed to shrink the support");
        let step = match greedy_step(&rest) {
            Ok(step) => step,
            Err(cause) => return Err(not_in_cone(cause, parts)),
        };
        if let Some(prev) = parts.last() {
            if prev.degrees().partial_cmp(step.diagram.degrees()) != Some(Ordering::Less) {
                let cause = Error::BadChain(format!(
                    "{} does not follow {} in the chain",
                    step.diagram.degrees(),
                    prev.degrees()
                ));
                return Err(not_in_cone(cause, parts));
            }
        }
        rest = step.remainder;
        parts.push(Part {
            coefficient: step.coefficient,
            diagram: step.diagram,
        });
    }
    let decomposition = Decomposition {
        parts,
        source: table.clone(),
    };
    debug_assert!(verify_decomposition(&decomposition).is_valid());
    Ok(decomposition)
}

fn not_in_cone(cause: Error, partial: Vec<Part>) -> Error {
    Error::NotInCone {
        cause: Box::new(cause),
        partial,
    }
}

/// Outcome of [`verify_decomposition`]; empty `problems` means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verification {
    pub problems: Vec<String>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Re-checks positivity, the chain condition and exact re-summation.
pub fn verify_decomposition(d: &Decomposition) -> Verification {
    let mut problems = Vec::new();
    for (k, part) in d.parts.iter().enumerate() {
        if !part.coefficient.is_positive() {
            problems.push(format!("part {k} has nonpositive coefficient {}", part.coefficient));
        }
    }
    for (k, pair) in d.parts.windows(2).enumerate() {
        if pair[0].degrees().partial_cmp(pair[1].degrees()) != Some(Ordering::Less) {
            problems.push(format!(
                "parts {k} and {} are out of chain order: {} vs {}",
                k + 1,
                pair[0].degrees(),
                pair[1].degrees()
            ));
        }
    }
    let mut diff = d.source.iter().map(|(i, j, v)| ((i, j), v.clone())).collect::<std::collections::BTreeMap<_, _>>();
    for part in &d.parts {
        for (i, j, v) in part.diagram.canonical().iter() {
            *diff.entry((i, j)).or_insert_with(Rational::zero) -= &part.coefficient * v;
        }
    }
    if let Some(((i, j), v)) = diff.iter().find(|(_, v)| !v.is_zero()) {
        problems.push(format!("sum of parts differs from source at ({i}, {j}) by {v}"));
    }
    Verification { problems }
}

impl Decomposition {
    /// Assembles a decomposition without checking it.
    pub fn from_parts(source: BettiTable, parts: Vec<Part>) -> Self {
        Self { parts, source }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn source(&self) -> &BettiTable {
        &self.source
    }

    /// `Σ coefficient · canonical`.
    pub fn reconstruct(&self) -> Result<BettiTable> {
        self.parts
            .iter()
            .try_fold(BettiTable::new(self.source.vars())?, |acc, p| {
                acc.axpy(&p.coefficient, p.diagram.canonical())
            })
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            vars: self.source.vars(),
            source: self.source.to_json(),
            parts: self
                .parts
                .iter()
                .map(|p| PartJson {
                    coefficient: p.coefficient.clone(),
                    normalized_coefficient: p.normalized_coefficient(),
                    degrees: p.degrees().clone(),
                    table: p.diagram.canonical().to_json(),
                })
                .collect(),
        }
    }

    /// Rebuilds a decomposition from its wire form; the pure tables are
    /// recomputed from the degree sequences and must match.
    pub fn from_json(json: &DecompositionJson) -> Result<Self> {
        let source = BettiTable::from_json(&json.source)?;
        let parts = json
            .parts
            .iter()
            .map(|p| {
                let diagram = pure_diagram(&p.degrees, json.vars)?;
                if diagram.canonical().to_json() != p.table {
                    return Err(Error::Parse(format!(
                        "table listed for {} is not its canonical pure diagram",
                        p.degrees
                    )));
                }
                Ok(Part {
                    coefficient: p.coefficient.clone(),
                    diagram,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { parts, source })
    }

    /// One-line form such as `1/5·β(0,2,3,5) + 1/3·β(0,3)`.
    pub fn summary(&self, normalized: bool) -> String {
        if self.parts.is_empty() {
            return "0".to_string();
        }
        self.parts
            .iter()
            .map(|p| {
                let q = if normalized {
                    p.normalized_coefficient()
                } else {
                    p.coefficient.clone()
                };
                format!("{}·β{}", rational::format(&q), p.degrees())
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary(false))?;
        writeln!(f)?;
        write!(f, "{}", self.source)?;
        for (k, p) in self.parts.iter().enumerate() {
            writeln!(f)?;
            let sign = if k == 0 { "=" } else { "+" };
            writeln!(
                f,
                "{sign} {} * {}",
                rational::format(&p.coefficient),
                p.degrees()
            )?;
            write!(f, "{}", p.diagram.canonical())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub vars: usize,
    pub source: TableJson,
    pub parts: Vec<PartJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartJson {
    #[serde(with = "rational::serde_str")]
    pub coefficient: Rational,
    #[serde(with = "rational::serde_str")]
    pub normalized_coefficient: Rational,
    pub degrees: DegreeSequence,
    pub table: TableJson,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn example_table() -> BettiTable {
        BettiTable::from_ints(
            3,
            &[(0, 0, 1), (1, 2, 2), (1, 3, 1), (2, 3, 1), (2, 4, 2), (3, 5, 1)],
        )
        .unwrap()
    }

    fn seq(d: &[i64]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    #[test]
    fn top_sequences() {
        assert_eq!(top_degree_sequence(&example_table()).unwrap(), seq(&[0, 2, 3, 5]));
        let single = BettiTable::from_ints(2, &[(0, 0, 1)]).unwrap();
        assert_eq!(top_degree_sequence(&single).unwrap(), seq(&[0]));
        let stair = BettiTable::from_ints(2, &[(0, 0, 1), (1, 1, 1), (2, 2, 1)]).unwrap();
        assert_eq!(top_degree_sequence(&stair).unwrap(), seq(&[0, 1, 2]));
    }

    #[test]
    fn top_sequence_errors() {
        let gap = BettiTable::from_ints(3, &[(0, 0, 1), (2, 2, 1)]).unwrap();
        assert!(matches!(top_degree_sequence(&gap), Err(Error::ColumnGap(1))));
        let flat = BettiTable::from_ints(3, &[(0, 1, 1), (1, 1, 1)]).unwrap();
        assert!(matches!(top_degree_sequence(&flat), Err(Error::NotIncreasing(1))));
        let empty = BettiTable::new(3).unwrap();
        assert!(matches!(top_degree_sequence(&empty), Err(Error::EmptyTable)));
    }

    #[test]
    fn first_greedy_step_on_example() {
        let step = greedy_step(&example_table()).unwrap();
        assert_eq!(step.coefficient, frac(1, 5));
        assert_eq!(step.diagram.degrees(), &seq(&[0, 2, 3, 5]));
        assert_eq!(step.remainder.get(0, 0), frac(4, 5));
        assert_eq!(step.remainder.get(2, 3), int(0));
    }

    #[test]
    fn greedy_step_on_single_ray() {
        let pi = pure_diagram(&seq(&[0, 2, 3, 5]), 3).unwrap();
        let table = pi.canonical().scaled(&int(7)).unwrap();
        let step = greedy_step(&table).unwrap();
        assert_eq!(step.coefficient, int(7));
        assert!(step.remainder.is_empty());

        let one = BettiTable::from_ints(1, &[(0, 0, 1)]).unwrap();
        let step = greedy_step(&one).unwrap();
        assert_eq!(step.coefficient, int(1));
        assert_eq!(step.diagram.degrees(), &seq(&[0]));
        assert!(step.remainder.is_empty());
    }

    #[test]
    fn decomposes_example_table() {
        let d = decompose(&example_table()).unwrap();
        let got: Vec<(Rational, Vec<i64>)> = d
            .parts()
            .iter()
            .map(|p| (p.coefficient.clone(), p.degrees().degrees().to_vec()))
            .collect();
        assert_eq!(
            got,
            vec![
                (frac(1, 5), vec![0, 2, 3, 5]),
                (frac(1, 10), vec![0, 2, 4, 5]),
                (frac(1, 6), vec![0, 3, 4]),
                (frac(1, 3), vec![0, 3]),
            ]
        );
        assert!(verify_decomposition(&d).is_valid());
        assert_eq!(d.summary(false), "1/5·β(0,2,3,5) + 1/10·β(0,2,4,5) + 1/6·β(0,3,4) + 1/3·β(0,3)");
        // against ∏ 1/|d_j - d_i|: 1/5·30, 1/10·120, 1/6·12, 1/3·3
        assert_eq!(d.summary(true), "6·β(0,2,3,5) + 12·β(0,2,4,5) + 2·β(0,3,4) + 1·β(0,3)");
    }

    /// Direct transcription of the greedy rule for the table
    /// β_{0,0}=1, β_{1,1}=2, β_{2,3}=1, worked by hand:
    /// top row (0,1,3), β((0,1,3)) = (2,3,1), q = min(1/2, 2/3, 1) = 1/2,
    /// remainder β_{1,1}=1/2, β_{2,3}=1/2 which has no column 0.
    #[test]
    fn hand_simulated_failure() {
        let t = BettiTable::from_ints(2, &[(0, 0, 1), (1, 1, 2), (2, 3, 1)]).unwrap();
        match decompose(&t) {
            Err(Error::NotInCone { cause, partial }) => {
                assert!(matches!(*cause, Error::ColumnGap(0)));
                assert_eq!(partial.len(), 1);
                assert_eq!(partial[0].coefficient, frac(1, 2));
                assert_eq!(partial[0].diagram.canonical_values(), vec![int(2), int(3), int(1)]);
            }
            other => panic!("expected NotInCone, got {other:?}"),
        }
    }

    #[test]
    fn lopsided_table_is_not_in_cone() {
        let t = BettiTable::from_ints(2, &[(0, 0, 1), (1, 1, 100)]).unwrap();
        assert!(matches!(decompose(&t), Err(Error::NotInCone { .. })));
    }

    #[test]
    fn verification_catches_tampering() {
        let d = decompose(&example_table()).unwrap();
        let mut parts = d.parts().to_vec();
        parts[1].coefficient = -parts[1].coefficient.clone();
        assert!(!verify_decomposition(&Decomposition::from_parts(example_table(), parts)).is_valid());

        let mut parts = d.parts().to_vec();
        parts.swap(0, 2);
        let v = verify_decomposition(&Decomposition::from_parts(example_table(), parts));
        assert!(!v.is_valid());
        assert!(v.problems.iter().any(|p| p.contains("chain order")));
    }

    #[test]
    fn json_round_trip() {
        let d = decompose(&example_table()).unwrap();
        let text = serde_json::to_string(&d.to_json()).unwrap();
        let back: DecompositionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Decomposition::from_json(&back).unwrap(), d);
    }

    fn any_seq() -> impl Strategy<Value = DegreeSequence> {
        prop::collection::btree_set(-6i64..8, 1..=5)
            .prop_map(|s| DegreeSequence::new(s.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn rays_are_fixed_points(d in any_seq(), num in 1i64..50, den in 1i64..50) {
            let q = frac(num, den);
            let pi = pure_diagram(&d, 4).unwrap();
            let table = pi.canonical().scaled(&q).unwrap();
            let dec = decompose(&table).unwrap();
            prop_assert_eq!(dec.parts().len(), 1);
            prop_assert_eq!(&dec.parts()[0].coefficient, &q);
            prop_assert_eq!(dec.parts()[0].degrees(), &d);
        }
    }
}
