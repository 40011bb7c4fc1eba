//! Betti tables of monomial quotients `S/I` from multigraded Koszul
//! homology.
//!
//! For a multidegree `b`, `β_{i,b}(S/I)` (for `i ≥ 1`) is the dimension of
//! the reduced homology `H̃_{i-2}` of the simplicial complex
//! `K^b = { F ⊆ {1..n} squarefree : x^{b-F} ∈ I }`. Only multidegrees below
//! the lcm of the generators can contribute.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::rational::{self, Rational};
use crate::table::BettiTable;

pub type Exponents = Vec<u32>;

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    names: Vec<String>,
    generators: Vec<Exponents>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Variables are named `x1, ..., xn`.
    pub fn new(vars: usize, generators: Vec<Exponents>) -> Result<Self> {
        let names = (1..=vars).map(|k| format!("x{k}")).collect();
        Self::with_names(names, generators)
    }

    /// Builds the ideal, discarding generators divisible by others.
    pub fn with_names(names: Vec<String>, generators: Vec<Exponents>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::NoVariables);
        }
        for g in &generators {
            if g.len() != names.len() {
                return Err(Error::Parse(format!(
                    "exponent vector {g:?} does not have {} entries",
                    names.len()
                )));
            }
            if g.iter().all(|&e| e == 0) {
                return Err(Error::Parse("the unit ideal is not supported".into()));
            }
        }
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Exponents> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        Ok(Self {
            names,
            generators: minimal,
        })
    }

    /// Parses `"x^2,x*y,x*z^2"` over the comma separated variable names.
    pub fn parse(ideal: &str, vars: &str) -> Result<Self> {
        let names: Vec<String> = vars
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
        let generators = ideal
            .split(',')
            .map(|mono| parse_monomial(mono, &names))
            .collect::<Result<Vec<_>>>()?;
        Self::with_names(names, generators)
    }

    pub fn vars(&self) -> usize {
        self.names.len()
    }

    pub fn generators(&self) -> &[Exponents] {
        &self.generators
    }

    pub fn contains(&self, monomial: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, monomial))
    }

    /// Componentwise maximum of the generators.
    pub fn lcm(&self) -> Exponents {
        let mut out = vec![0; self.vars()];
        for g in &self.generators {
            for (o, &e) in out.iter_mut().zip(g) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.iter().sum()).max().unwrap_or(0)
    }

    fn format_monomial(&self, m: &[u32]) -> String {
        let factors: Vec<String> = self
            .names
            .iter()
            .zip(m)
            .filter(|(_, &e)| e > 0)
            .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        factors.join("*")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| self.format_monomial(g)).collect();
        write!(f, "({})", gens.join(","))
    }
}

fn parse_monomial(text: &str, names: &[String]) -> Result<Exponents> {
    let mut exps = vec![0u32; names.len()];
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty generator".into()));
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
            ),
            None => (factor, 1),
        };
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
        exps[idx] += exp;
    }
    Ok(exps)
}

/// Size bounds the oracle refuses to exceed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vars: usize,
    pub max_degree: u32,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_vars: 5,
            max_degree: 8,
        }
    }
}

/// The minimal graded Betti table of `S/I` with the default limits.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_table_with(ideal, OracleLimits::default())
}

pub fn betti_table_with(ideal: &MonomialIdeal, limits: OracleLimits) -> Result<BettiTable> {
    let n = ideal.vars();
    if n > limits.max_vars {
        return Err(Error::TooLarge(format!(
            "{n} variables exceeds the limit of {}",
            limits.max_vars
        )));
    }
    if ideal.max_generator_degree() > limits.max_degree {
        return Err(Error::TooLarge(format!(
            "generator degree {} exceeds the limit of {}",
            ideal.max_generator_degree(),
            limits.max_degree
        )));
    }

    let lcm = ideal.lcm();
    let total: usize = lcm.iter().map(|&e| e as usize + 1).product();
    let counts: Vec<(usize, i64, usize)> = (0..total)
        .into_par_iter()
        .flat_map_iter(|index| {
            let b = unrank(index, &lcm);
            let degree: i64 = b.iter().map(|&e| e as i64).sum();
            koszul_homology(ideal, &b)
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                // faces of size s carry H̃_{s-1}, which gives β_{s+1}
                .map(move |(size, h)| (size + 1, degree, h))
                .collect::<Vec<_>>()
        })
        .collect();

    let mut entries: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    entries.insert((0, 0), 1);
    for (i, j, h) in counts {
        *entries.entry((i, j)).or_default() += h;
    }
    BettiTable::from_entries(
        n,
        entries
            .into_iter()
            .map(|((i, j), h)| (i, j, rational::int(h as i64))),
    )
}

fn unrank(mut index: usize, bound: &[u32]) -> Exponents {
    bound
        .iter()
        .map(|&e| {
            let base = e as usize + 1;
            let digit = index % base;
            index /= base;
            digit as u32
        })
        .collect()
}

/// Dimensions of `H̃_{s-1}(K^b)` indexed by face size `s = 0..=n`.
fn koszul_homology(ideal: &MonomialIdeal, b: &[u32]) -> Vec<usize> {
    let n = b.len();
    if !ideal.contains(b) {
        return Vec::new();
    }
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << n) {
        let fits = (0..n).all(|v| mask & (1 << v) == 0 || b[v] > 0);
        if !fits {
            continue;
        }
        let shifted: Exponents = (0..n)
            .map(|v| b[v] - ((mask >> v) & 1))
            .collect();
        if ideal.contains(&shifted) {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    // rank of ∂ from faces of size s to faces of size s - 1
    let ranks: Vec<usize> = (0..=n + 1)
        .map(|s| {
            if s == 0 || s > n {
                0
            } else {
                boundary(&by_size[s], &by_size[s - 1]).rank()
            }
        })
        .collect();
    (0..=n)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

fn boundary(faces: &[u32], facets: &[u32]) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(facets.len(), faces.len());
    for (col, &face) in faces.iter().enumerate() {
        let mut sign = 1;
        for v in 0..32 {
            if face & (1 << v) == 0 {
                continue;
            }
            let smaller = face & !(1 << v);
            let row = facets
                .iter()
                .position(|&f| f == smaller)
                .expect("complex is closed under taking faces");
            m.set(row, col, rational::int(sign));
            sign = -sign;
        }
    }
    m
}

/// Number of degree `k` monomials outside `I`.
pub fn standard_monomial_count(ideal: &MonomialIdeal, k: i64) -> Result<u64> {
    if k < 0 {
        return Ok(0);
    }
    let n = ideal.vars() as i64;
    let total = rational::binomial(k + n - 1, n - 1);
    if total > num_bigint::BigInt::from(5_000_000) {
        return Err(Error::TooLarge(format!("{total} monomials of degree {k}")));
    }
    let mut count = 0u64;
    let mut mono = vec![0u32; ideal.vars()];
    visit_compositions(&mut mono, 0, k as u32, &mut |m| {
        if !ideal.contains(m) {
            count += 1;
        }
    });
    Ok(count)
}

fn visit_compositions(mono: &mut [u32], pos: usize, left: u32, f: &mut dyn FnMut(&[u32])) {
    if pos + 1 == mono.len() {
        mono[pos] = left;
        f(mono);
        return;
    }
    for e in 0..=left {
        mono[pos] = e;
        visit_compositions(mono, pos + 1, left - e, f);
    }
}

/// A deterministic pseudo-random ideal: between one and `max_gens`
/// generators, each of total degree between one and `max_deg`.
pub fn random_ideal(seed: u64, vars: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    assert!(vars >= 1 && max_gens >= 1 && max_deg >= 1, "parameters out of range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=max_deg);
            let mut g = vec![0u32; vars];
            for _ in 0..deg {
                g[rng.gen_range(0..vars)] += 1;
            }
            g
        })
        .collect();
    MonomialIdeal::new(vars, gens).expect("generated exponents are well formed")
}

/// Values as exact rationals, for comparison with [`hilbert_function`](crate::hilbert::hilbert_function).
pub fn standard_monomial_counts(ideal: &MonomialIdeal, max_k: i64) -> Result<Vec<Rational>> {
    (0..=max_k)
        .map(|k| standard_monomial_count(ideal, k).map(|c| rational::int(c as i64)))
        .collect()
}
