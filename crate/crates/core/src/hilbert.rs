//! Hilbert series data read off a Betti table, and the multiplicity bounds
//! that follow from the decomposition.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::pure::pure_diagram;
use crate::rational::{self, Rational};
use crate::sequence::DegreeSequence;
use crate::table::BettiTable;

/// The Laurent polynomial `N(t) = Σ (-1)^i β_{i,j} t^j`, so that the Hilbert
/// series is `N(t) / (1-t)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertNumerator {
    coeffs: BTreeMap<i64, Rational>,
    vars: usize,
}

impl HilbertNumerator {
    pub fn coefficient(&self, exp: i64) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn at_one(&self) -> Rational {
        self.coeffs.values().sum()
    }

    /// `N / (1 - t)`, assuming `N(1) = 0`: the coefficients are the partial
    /// sums of those of `N`.
    fn divide_by_one_minus_t(&self) -> Self {
        let mut coeffs = BTreeMap::new();
        if let (Some(&lo), Some(&hi)) = (self.coeffs.keys().next(), self.coeffs.keys().next_back()) {
            let mut acc = Rational::zero();
            for e in lo..hi {
                acc += self.coefficient(e);
                if !acc.is_zero() {
                    coeffs.insert(e, acc.clone());
                }
            }
        }
        Self {
            coeffs,
            vars: self.vars,
        }
    }

    /// Vanishing order `s` at `t = 1` together with `Q = N / (1-t)^s`.
    fn split_at_one(&self) -> (usize, Self) {
        let mut order = 0;
        let mut q = self.clone();
        while !q.is_zero() && q.at_one().is_zero() {
            q = q.divide_by_one_minus_t();
            order += 1;
        }
        (order, q)
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.coeffs.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag_s = rational::format(&mag);
            match e {
                0 => write!(f, "{mag_s}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag_s}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn hilbert_numerator(beta: &BettiTable) -> HilbertNumerator {
    let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
    for (i, j, v) in beta.iter() {
        let term = if i % 2 == 0 { v.clone() } else { -v.clone() };
        *coeffs.entry(j).or_insert_with(Rational::zero) += term;
    }
    coeffs.retain(|_, v| !v.is_zero());
    HilbertNumerator {
        coeffs,
        vars: beta.vars(),
    }
}

/// Order of vanishing of the numerator at `t = 1`. The zero table reports
/// the number of variables.
pub fn codimension(beta: &BettiTable) -> usize {
    let n = hilbert_numerator(beta);
    if n.is_zero() {
        return beta.vars();
    }
    n.split_at_one().0
}

/// `Q(1)` where `N(t) = (1-t)^s Q(t)` and `s` is the codimension.
pub fn multiplicity(beta: &BettiTable) -> Rational {
    hilbert_numerator(beta).split_at_one().1.at_one()
}

/// `h(k) = Σ_i (-1)^i Σ_j β_{i,j} C(k - j + n - 1, n - 1)` with the
/// combinatorial binomial (zero when the top is below the bottom).
pub fn hilbert_function(beta: &BettiTable, k: i64) -> Rational {
    let bottom = beta.vars() as i64 - 1;
    beta.iter()
        .map(|(i, j, v)| {
            let term = v * Rational::from_integer(rational::binomial(k - j + bottom, bottom));
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Hilbert function values `h(0), ..., h(max_k)`.
pub fn hilbert_series(beta: &BettiTable, max_k: i64) -> Vec<Rational> {
    (0..=max_k).map(|k| hilbert_function(beta, k)).collect()
}

/// Coefficients, in increasing powers of `k`, of the Hilbert polynomial:
/// `Σ_i (-1)^i Σ_j β_{i,j} (k - j + 1)(k - j + 2)...(k - j + n - 1)/(n-1)!`.
pub fn hilbert_polynomial(beta: &BettiTable) -> Vec<Rational> {
    let n = beta.vars();
    let factorial: BigInt = (1..n as i64).map(BigInt::from).product();
    let mut total = vec![Rational::zero(); n];
    for (i, j, v) in beta.iter() {
        // ∏_{t=1}^{n-1} (k + (t - j))
        let mut poly = vec![Rational::one()];
        for t in 1..n as i64 {
            let c = rational::int(t - j);
            let mut next = vec![Rational::zero(); poly.len() + 1];
            for (e, p) in poly.iter().enumerate() {
                next[e] += p * &c;
                next[e + 1] += p;
            }
            poly = next;
        }
        let scale = Rational::new(BigInt::one(), factorial.clone()) * v;
        let scale = if i % 2 == 0 { scale } else { -scale };
        for (e, p) in poly.iter().enumerate() {
            total[e] += p * &scale;
        }
    }
    while total.len() > 1 && total.last().is_some_and(|c| c.is_zero()) {
        total.pop();
    }
    total
}

/// Minimal and maximal shifts of a table generated in degree zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftBounds {
    /// `(0, a_1, ..., a_r)`.
    pub minimal: Vec<i64>,
    /// `(0, b_1, ..., b_s)`.
    pub maximal: Vec<i64>,
    pub projective_dimension: usize,
    pub codimension: usize,
}

impl ShiftBounds {
    pub fn of(beta: &BettiTable) -> Result<Self> {
        check_degree_zero(beta)?;
        let r = beta.max_column().expect("nonempty");
        let s = codimension(beta);
        let minimal = (0..=r)
            .map(|i| beta.column(i).next().map(|(j, _)| j).ok_or(Error::ColumnGap(i)))
            .collect::<Result<Vec<_>>>()?;
        let maximal = (0..=s.min(r))
            .map(|i| beta.column(i).last().map(|(j, _)| j).ok_or(Error::ColumnGap(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            minimal,
            maximal,
            projective_dimension: r,
            codimension: s,
        })
    }
}

fn check_degree_zero(beta: &BettiTable) -> Result<()> {
    let mut col0 = beta.column(0);
    match (col0.next(), col0.next()) {
        (Some((0, _)), None) => Ok(()),
        _ => Err(Error::NotDegreeZero),
    }
}

/// Outcome of the multiplicity and Hilbert series bound checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub shifts: ShiftBounds,
    #[serde(serialize_with = "ser_q")]
    pub multiplicity: Rational,
    /// `β_{0,0} · b_1 ⋯ b_s / s!`.
    #[serde(serialize_with = "ser_q")]
    pub upper_bound: Rational,
    pub bound_holds: bool,
    pub equality: bool,
    /// The decomposition has a single part.
    pub pure: bool,
    /// Hilbert series are compared on `k = 0..=window`.
    pub window: i64,
    /// `(∏ a_i) H(β(a)) ≤ H(M)/β_{0,0}` on the window.
    pub lower_series_holds: bool,
    /// `H(M)/β_{0,0} ≤ (∏ b_i) H(β(b))` on the window; `None` when the
    /// maximal shifts are not strictly increasing.
    pub upper_series_holds: Option<bool>,
}

fn ser_q<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational::format(q))
}

/// `(∏_{i≥1} d_i) · β(d)`, the pure table on `d` with `β_{0,0} = 1`.
fn unit_pure(d: &[i64], vars: usize) -> Result<Option<BettiTable>> {
    let Ok(seq) = DegreeSequence::new(d.to_vec()) else {
        return Ok(None);
    };
    let prod: i64 = d[1..].iter().product();
    let pure = pure_diagram(&seq, vars)?;
    Ok(Some(pure.normalized().scaled(&rational::int(prod))?))
}

/// Checks `mult ≤ β_{0,0} b_1⋯b_s / s!` and the two-sided Hilbert series
/// bound on `k ∈ [0, window]` (default: largest shift plus `2n`).
pub fn multiplicity_bounds_check(beta: &BettiTable, window: Option<i64>) -> Result<BoundsReport> {
    check_degree_zero(beta)?;
    let parts = decompose(beta)?.parts().len();
    let shifts = ShiftBounds::of(beta)?;
    let n = beta.vars();
    let b00 = beta.get(0, 0);

    let mult = multiplicity(beta);
    let s = shifts.codimension;
    let s_factorial: BigInt = (1..=s as i64).map(BigInt::from).product();
    let prod_b: BigInt = shifts.maximal[1..].iter().map(|&b| BigInt::from(b)).product();
    let upper_bound = &b00 * Rational::new(prod_b, s_factorial);

    let max_shift = beta.degree_range().map_or(0, |(_, hi)| hi);
    let window = window.unwrap_or(max_shift + 2 * n as i64);
    let normalized: Vec<Rational> = hilbert_series(beta, window).into_iter().map(|h| h / &b00).collect();

    let lower = unit_pure(&shifts.minimal, n)?.expect("minimal shifts increase for decomposable tables");
    let lower_series_holds = hilbert_series(&lower, window)
        .iter()
        .zip(&normalized)
        .all(|(l, h)| l <= h);
    let upper_series_holds = unit_pure(&shifts.maximal, n)?.map(|upper| {
        hilbert_series(&upper, window)
            .iter()
            .zip(&normalized)
            .all(|(u, h)| h <= u)
    });

    Ok(BoundsReport {
        bound_holds: mult <= upper_bound,
        equality: mult == upper_bound,
        multiplicity: mult,
        upper_bound,
        pure: parts == 1,
        window,
        lower_series_holds,
        upper_series_holds,
        shifts,
    })
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.shifts.maximal[1..];
        writeln!(
            f,
            "multiplicity {} {} {} = beta00 * {:?} / {}!",
            rational::format(&self.multiplicity),
            if self.equality { "=" } else if self.bound_holds { "<" } else { ">" },
            rational::format(&self.upper_bound),
            b,
            self.shifts.codimension
        )?;
        writeln!(f, "bound holds: {}", self.bound_holds)?;
        writeln!(f, "equality: {}", self.equality)?;
        writeln!(f, "pure: {}", self.pure)?;
        writeln!(f, "minimal shifts: {:?}", self.shifts.minimal)?;
        writeln!(f, "maximal shifts: {:?}", self.shifts.maximal)?;
        writeln!(f, "series window: 0..={}", self.window)?;
        writeln!(f, "lower series bound holds: {}", self.lower_series_holds)?;
        match self.upper_series_holds {
            Some(v) => writeln!(f, "upper series bound holds: {v}"),
            None => writeln!(f, "upper series bound: not applicable"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn example_table() -> BettiTable {
        BettiTable::from_ints(
            3,
            &[(0, 0, 1), (1, 2, 2), (1, 3, 1), (2, 3, 1), (2, 4, 2), (3, 5, 1)],
        )
        .unwrap()
    }

    fn pure(d: &[i64], n: usize) -> BettiTable {
        pure_diagram(&DegreeSequence::new(d.to_vec()).unwrap(), n)
            .unwrap()
            .canonical()
            .clone()
    }

    #[test]
    fn numerators() {
        assert_eq!(hilbert_numerator(&example_table()).to_string(), "1 - 2t^2 + 2t^4 - t^5");
        let one = BettiTable::from_ints(3, &[(0, 0, 1)]).unwrap();
        assert_eq!(hilbert_numerator(&one).to_string(), "1");
        let hyp = BettiTable::from_ints(3, &[(0, 0, 1), (1, 1, 1)]).unwrap();
        assert_eq!(hilbert_numerator(&hyp).to_string(), "1 - t");
    }

    #[test]
    fn codimension_examples() {
        assert_eq!(codimension(&example_table()), 1);
        assert_eq!(codimension(&pure(&[0, 2, 3, 5], 3)), 3);
        assert_eq!(codimension(&BettiTable::from_ints(3, &[(0, 0, 1)]).unwrap()), 0);
    }

    #[test]
    fn multiplicity_examples() {
        // Q(t) = 1 + t - t^2 - t^3 + t^4
        assert_eq!(multiplicity(&example_table()), int(1));
        assert_eq!(multiplicity(&pure(&[0, 2, 3, 5], 3)), int(5));
        assert_eq!(multiplicity(&BettiTable::from_ints(3, &[(0, 0, 1)]).unwrap()), int(1));
    }

    #[test]
    fn hilbert_function_examples() {
        // xz, y^2, yz, z^2
        assert_eq!(hilbert_function(&example_table(), 2), int(4));
        assert_eq!(hilbert_function(&example_table(), 0), int(1));
        assert_eq!(hilbert_function(&BettiTable::from_ints(3, &[(0, 0, 1)]).unwrap(), 1), int(3));
        assert_eq!(hilbert_function(&example_table(), -1), int(0));
    }

    #[test]
    fn polynomial_agrees_for_large_k() {
        for t in [example_table(), pure(&[0, 2, 3, 5], 3), pure(&[0, 1, 3], 4)] {
            let poly = hilbert_polynomial(&t);
            for k in 10..20 {
                let at_k: Rational = poly
                    .iter()
                    .enumerate()
                    .map(|(e, c)| c * Rational::from_integer(BigInt::from(k).pow(e as u32)))
                    .sum();
                assert_eq!(at_k, hilbert_function(&t, k));
            }
        }
        // S/(x^2,xy,xz^2) has Hilbert polynomial k + 1 (dimension 2, projectively a line)
        assert_eq!(hilbert_polynomial(&example_table()), vec![int(1), int(1)]);
    }

    #[test]
    fn bounds_on_example() {
        let r = multiplicity_bounds_check(&example_table(), None).unwrap();
        assert_eq!(r.multiplicity, int(1));
        assert_eq!(r.upper_bound, int(3));
        assert!(r.bound_holds && !r.equality && !r.pure);
        assert_eq!(r.shifts.maximal, vec![0, 3]);
        assert!(r.lower_series_holds);
        assert_eq!(r.upper_series_holds, Some(true));
        assert_eq!(r.window, 5 + 6);
    }

    #[test]
    fn bounds_equality_on_pure_table() {
        let r = multiplicity_bounds_check(&pure(&[0, 2, 3, 5], 3), None).unwrap();
        assert_eq!(r.multiplicity, int(5));
        assert_eq!(r.upper_bound, int(5));
        assert!(r.equality && r.pure);

        let r = multiplicity_bounds_check(&BettiTable::from_ints(2, &[(0, 0, 1)]).unwrap(), None).unwrap();
        assert_eq!((r.multiplicity.clone(), r.upper_bound.clone()), (int(1), int(1)));
        assert!(r.equality && r.pure);
    }

    #[test]
    fn bounds_errors() {
        let shifted = BettiTable::from_ints(2, &[(0, 1, 1)]).unwrap();
        assert!(matches!(multiplicity_bounds_check(&shifted, None), Err(Error::NotDegreeZero)));
        let bad = BettiTable::from_ints(2, &[(0, 0, 1), (1, 1, 100)]).unwrap();
        assert!(matches!(multiplicity_bounds_check(&bad, None), Err(Error::NotInCone { .. })));
    }
}
