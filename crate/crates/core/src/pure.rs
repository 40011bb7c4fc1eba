//! Pure diagrams: the extremal rays of the cone of Betti tables.
//!
//! For a degree sequence `d = (d_0, ..., d_r)` the pure diagram `β(d)` has a
//! single entry in each column `i`, at internal degree `d_i`, with value
//! `∏_{j≠i} 1/|d_j - d_i|`. Every Betti table of a pure module of type `d` is
//! a positive multiple of it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::sequence::DegreeSequence;
use crate::table::BettiTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureDiagram {
    degrees: DegreeSequence,
    normalized: BettiTable,
    canonical: BettiTable,
    scale: Rational,
}

impl PureDiagram {
    pub fn degrees(&self) -> &DegreeSequence {
        &self.degrees
    }

    /// The table with entries `∏_{j≠i} 1/|d_j - d_i|`.
    pub fn normalized(&self) -> &BettiTable {
        &self.normalized
    }

    /// The smallest table on the ray with positive integer entries.
    pub fn canonical(&self) -> &BettiTable {
        &self.canonical
    }

    /// The factor `λ` with `canonical = λ · normalized`.
    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    /// Canonical entries in column order.
    pub fn canonical_values(&self) -> Vec<Rational> {
        self.degrees
            .degrees()
            .iter()
            .enumerate()
            .map(|(i, &d)| self.canonical.get(i, d))
            .collect()
    }
}

/// Builds `β(d)` over a ring with `vars` variables.
pub fn pure_diagram(d: &DegreeSequence, vars: usize) -> Result<PureDiagram> {
    if d.last_index() > vars {
        return Err(Error::TooLong {
            len: d.len(),
            vars,
        });
    }
    let degs = d.degrees();
    let values: Vec<Rational> = degs
        .iter()
        .enumerate()
        .map(|(i, &di)| {
            let prod: i64 = degs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &dj)| (dj - di).abs())
                .product();
            Rational::new(BigInt::one(), BigInt::from(prod))
        })
        .collect();

    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let gcd = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
    let scale = Rational::new(lcm, gcd);

    let entry = |i: usize, v: Rational| (i, degs[i], v);
    let normalized = BettiTable::from_entries(
        vars,
        values.iter().enumerate().map(|(i, v)| entry(i, v.clone())),
    )?;
    let canonical = BettiTable::from_entries(
        vars,
        values.iter().enumerate().map(|(i, v)| entry(i, v * &scale)),
    )?;
    Ok(PureDiagram {
        degrees: d.clone(),
        normalized,
        canonical,
        scale,
    })
}

/// The signed Vandermonde residuals `Σ_i (-1)^i β_{i,d_i} d_i^s` for
/// `s = 0..r`, evaluated on the canonical table. All are zero for a genuine
/// pure diagram.
pub fn herzog_kuhl_residuals(pi: &PureDiagram) -> Vec<Rational> {
    let degs = pi.degrees.degrees();
    let r = pi.degrees.last_index();
    (0..r as u32)
        .map(|s| {
            degs.iter()
                .enumerate()
                .map(|(i, &d)| {
                    let term = pi.canonical.get(i, d) * Rational::from_integer(BigInt::from(d).pow(s));
                    if i % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

/// For `a > c` differing exactly at positions `tau < k`, the two sequences
/// `b = (.., a_tau, .., c_k, ..)` and `b' = (.., c_tau, .., a_k, ..)` lying
/// between them.
pub fn mixed_sequences(
    a: &DegreeSequence,
    c: &DegreeSequence,
    tau: usize,
    k: usize,
) -> Result<(DegreeSequence, DegreeSequence)> {
    if !(a > c) {
        return Err(Error::BadChain(format!("{a} is not above {c}")));
    }
    if a.differing_positions(c) != [tau, k] || k <= tau {
        return Err(Error::BadChain(format!(
            "{a} and {c} must differ exactly at positions {tau} < {k}"
        )));
    }
    let a_tau = a
        .get(tau)
        .ok_or_else(|| Error::BadChain(format!("{a} is infinite at position {tau}")))?;
    let c_tau = c.get(tau).expect("c is at least as long as a");

    let mut b = c.degrees().to_vec();
    b[tau] = a_tau;
    let mut b_prime = a.degrees().to_vec();
    b_prime[tau] = c_tau;
    let check = |v: Vec<i64>| {
        DegreeSequence::new(v.clone())
            .map_err(|_| Error::BadChain(format!("mixed sequence {v:?} is not increasing")))
    };
    Ok((check(b)?, check(b_prime)?))
}

type Combination = BTreeMap<(usize, i64), Rational>;

fn combine(terms: &[(Rational, &BettiTable)]) -> Combination {
    let mut out = Combination::new();
    for (q, table) in terms {
        for (i, j, v) in table.iter() {
            *out.entry((i, j)).or_insert_with(Rational::zero) += q * v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Checks the linear relation among the normalized diagrams of `a`, `b`,
/// `b'`, `c` that shows a facet through `b` is interior:
///
/// `(a_k - a_τ)β(a) + (c_k - c_τ)β(c) = (c_k - a_τ)β(b) + (a_k - c_τ)β(b')`,
///
/// or `β(a) + (c_k - c_τ)β(c) = (c_k - a_τ)β(b) + β(b')` when `a_k = ∞`.
pub fn facet_identity_check(
    a: &DegreeSequence,
    b: &DegreeSequence,
    b_prime: &DegreeSequence,
    c: &DegreeSequence,
    tau: usize,
    k: usize,
) -> Result<bool> {
    let (expect_b, expect_b_prime) = mixed_sequences(a, c, tau, k)?;
    if *b != expect_b || *b_prime != expect_b_prime {
        return Err(Error::BadChain(format!(
            "expected mixed sequences {expect_b} and {expect_b_prime}, got {b} and {b_prime}"
        )));
    }
    let vars = c.last_index().max(1);
    let beta = |d: &DegreeSequence| pure_diagram(d, vars).map(|p| p.normalized);
    let (ba, bb, bbp, bc) = (beta(a)?, beta(b)?, beta(b_prime)?, beta(c)?);

    let at = |d: &DegreeSequence, i: usize| d.get(i).map(rational::int);
    let (a_tau, c_tau, c_k) = (at(a, tau).unwrap(), at(c, tau).unwrap(), at(c, k).unwrap());
    let (lhs, rhs) = match at(a, k) {
        Some(a_k) => (
            combine(&[(&a_k - &a_tau, &ba), (&c_k - &c_tau, &bc)]),
            combine(&[(&c_k - &a_tau, &bb), (&a_k - &c_tau, &bbp)]),
        ),
        None => (
            combine(&[(Rational::one(), &ba), (&c_k - &c_tau, &bc)]),
            combine(&[(&c_k - &a_tau, &bb), (Rational::one(), &bbp)]),
        ),
    };
    debug_assert!(lhs.values().all(|v| v.is_positive()));
    Ok(lhs == rhs)
}
