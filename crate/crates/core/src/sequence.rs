//! Degree sequences and their partial order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly increasing integer tuple `(d_0, ..., d_r)`.
///
/// Positions past the end are treated as `+∞`, which is what makes sequences
/// of different lengths comparable: `d ≤ e` iff `d` is at least as long as
/// `e` and `d_i ≤ e_i` wherever `e` is finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() || degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(degrees));
        }
        Ok(Self(degrees))
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    /// Number of entries, `r + 1`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The index `r` of the last entry: the codimension of a pure module of
    /// this type.
    pub fn last_index(&self) -> usize {
        self.0.len() - 1
    }

    /// Entry at position `i`, or `None` for the implicit `+∞` padding.
    pub fn get(&self, i: usize) -> Option<i64> {
        self.0.get(i).copied()
    }

    /// Positions at which the two `∞`-padded sequences disagree.
    pub fn differing_positions(&self, other: &Self) -> Vec<usize> {
        (0..self.len().max(other.len()))
            .filter(|&i| self.get(i) != other.get(i))
            .collect()
    }
}

/// `a ≤ b` under the termwise order with `∞` padding; `None` when
/// incomparable. Equality means identical sequences.
pub fn compare_sequences(a: &DegreeSequence, b: &DegreeSequence) -> Option<Ordering> {
    let le = |x: &DegreeSequence, y: &DegreeSequence| {
        x.len() >= y.len() && x.0.iter().zip(&y.0).all(|(p, q)| p <= q)
    };
    match (le(a, b), le(b, a)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

impl PartialOrd for DegreeSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        compare_sequences(self, other)
    }
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DegreeSequence> for Vec<i64> {
    fn from(d: DegreeSequence) -> Self {
        d.0
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Accepts `0,2,3,5`, optionally wrapped in parentheses or brackets.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let degrees = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad degree {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(degrees)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Three degree sequences `a > b > c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTriple {
    pub a: DegreeSequence,
    pub b: DegreeSequence,
    pub c: DegreeSequence,
}

impl ChainTriple {
    pub fn new(a: DegreeSequence, b: DegreeSequence, c: DegreeSequence) -> Result<Self> {
        if a.partial_cmp(&b) != Some(Ordering::Greater) {
            return Err(Error::BadChain(format!("{a} is not above {b}")));
        }
        if b.partial_cmp(&c) != Some(Ordering::Greater) {
            return Err(Error::BadChain(format!("{b} is not above {c}")));
        }
        Ok(Self { a, b, c })
    }
}

impl fmt::Display for ChainTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} > {} > {}", self.a, self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(d: &[i64]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(DegreeSequence::new(vec![]).is_err());
        assert!(DegreeSequence::new(vec![0, 2, 2]).is_err());
        assert!(DegreeSequence::new(vec![-1, 1, 2, 3, 4]).is_ok());
        assert_eq!("(0, 2,3,5)".parse::<DegreeSequence>().unwrap(), seq(&[0, 2, 3, 5]));
        assert_eq!(seq(&[-1, 4]).to_string(), "(-1,4)");
    }

    #[test]
    fn ordering_examples() {
        let d = seq(&[0, 2, 3, 5]);
        assert_eq!(compare_sequences(&d, &d), Some(Ordering::Equal));
        assert!(seq(&[0, 1, 3, 4]) <= seq(&[0, 2, 3, 4]));
        assert!(seq(&[0, 2, 3, 5]) <= seq(&[0, 3, 4]));
        assert!(seq(&[0, 3, 4]) < seq(&[0, 3]));
        assert_eq!(compare_sequences(&seq(&[0, 3]), &seq(&[1, 2])), None);
        // shorter but termwise smaller is still incomparable
        assert_eq!(compare_sequences(&seq(&[0, 1]), &seq(&[0, 2, 3])), None);
    }

    #[test]
    fn chain_triple_requires_strict_order() {
        assert!(ChainTriple::new(seq(&[0, 2, 3, 4]), seq(&[0, 1, 3, 4]), seq(&[0, 1, 2, 4])).is_ok());
        assert!(ChainTriple::new(seq(&[0, 1, 3, 4]), seq(&[0, 1, 3, 4]), seq(&[0, 1, 2, 4])).is_err());
    }

    fn any_seq() -> impl Strategy<Value = DegreeSequence> {
        prop::collection::btree_set(-4i64..6, 1..5)
            .prop_map(|s| DegreeSequence::new(s.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn partial_order_laws(a in any_seq(), b in any_seq(), c in any_seq()) {
            prop_assert!(a <= a);
            if a <= b && b <= a {
                prop_assert_eq!(&a, &b);
            }
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
            let flipped = compare_sequences(&b, &a).map(Ordering::reverse);
            prop_assert_eq!(compare_sequences(&a, &b), flipped);
        }
    }
}
