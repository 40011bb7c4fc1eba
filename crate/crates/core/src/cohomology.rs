//! Cohomology tables on projective space and their pairing with Betti tables.
//!
//! A supernatural table on `P^m` is determined by its root sequence
//! `z_1 > ... > z_m` and a rank: the Euler characteristic is
//! `χ(k) = rank/m! · ∏ (k - z_j)` and for each twist `k` at most one
//! cohomology group is nonzero, namely `h^j` with `z_j > k > z_{j+1}`
//! (reading `z_0 = +∞`, `z_{m+1} = -∞`).
//!
//! The pairing `⟨β, γ⟩ = Σ_{i≥j} (-1)^{i-j} Σ_k β_{i,k} γ_{j,-k}` and its
//! truncations `⟨β, γ⟩_{τ,κ}` are nonnegative on Betti tables of (minimal)
//! free resolutions. Suitable truncations against supernatural tables cut out
//! the outer facets of the cone of Betti tables.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pure::pure_diagram;
use crate::rational::{self, Rational};
use crate::sequence::{ChainTriple, DegreeSequence};
use crate::table::BettiTable;

/// Anything that can report `γ_{j,k} = h^j(E(k))` on `P^m`.
pub trait CohomologyTable {
    /// The dimension `m` of the projective space.
    fn dim(&self) -> usize;

    fn gamma(&self, j: usize, k: i64) -> Rational;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupernaturalTable {
    roots: Vec<i64>,
    rank: Rational,
}

impl SupernaturalTable {
    pub fn new(roots: Vec<i64>, rank: Rational) -> Result<Self> {
        if roots.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSequence(roots));
        }
        if !rank.is_positive() {
            return Err(Error::Parse(format!("rank must be positive, got {rank}")));
        }
        Ok(Self { roots, rank })
    }

    /// The smallest rank for which every `χ(k)` is an integer, i.e.
    /// `m! / gcd_k ∏ (k - z_j)`. The gcd over all integers equals the gcd
    /// over any `m + 1` consecutive ones.
    pub fn integral(roots: Vec<i64>) -> Result<Self> {
        let m = roots.len() as i64;
        let g = (0..=m)
            .map(|k| {
                roots
                    .iter()
                    .map(|z| BigInt::from(k - z))
                    .product::<BigInt>()
            })
            .fold(BigInt::zero(), |acc, v| acc.gcd(&v));
        let factorial: BigInt = (1..=m).map(BigInt::from).product();
        Self::new(roots, Rational::new(factorial, g))
    }

    pub fn roots(&self) -> &[i64] {
        &self.roots
    }

    pub fn rank(&self) -> &Rational {
        &self.rank
    }

    /// `χ(E(k)) = rank/m! · ∏ (k - z_j)`.
    pub fn euler(&self, k: i64) -> Rational {
        let factorial: BigInt = (1..=self.roots.len() as i64).map(BigInt::from).product();
        let prod: BigInt = self.roots.iter().map(|z| BigInt::from(k - z)).product();
        &self.rank * Rational::new(prod, factorial)
    }
}

pub fn supernatural_gamma(table: &SupernaturalTable, j: usize, k: i64) -> Rational {
    let m = table.roots.len();
    if j > m {
        return Rational::zero();
    }
    let above = j == 0 || table.roots[j - 1] > k;
    let below = j == m || k > table.roots[j];
    if above && below {
        table.euler(k).abs()
    } else {
        Rational::zero()
    }
}

impl CohomologyTable for SupernaturalTable {
    fn dim(&self) -> usize {
        self.roots.len()
    }

    fn gamma(&self, j: usize, k: i64) -> Rational {
        supernatural_gamma(self, j, k)
    }
}

/// A cohomology table known explicitly on a window of twists `lo..=hi`,
/// extended outside by its Hilbert polynomial: above the window only `h^0`
/// survives, below it only `h^m` (as for a vector bundle).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowedTable {
    dim: usize,
    lo: i64,
    hi: i64,
    window: BTreeMap<(usize, i64), Rational>,
    /// Coefficients of `χ(k)` in increasing powers of `k`.
    hilbert_polynomial: Vec<Rational>,
}

impl WindowedTable {
    pub fn new(
        dim: usize,
        lo: i64,
        hi: i64,
        window: BTreeMap<(usize, i64), Rational>,
        hilbert_polynomial: Vec<Rational>,
    ) -> Result<Self> {
        if lo > hi || window.keys().any(|&(j, k)| j > dim || k < lo || k > hi) {
            return Err(Error::Parse("window entries outside the declared range".into()));
        }
        if window.values().any(|v| v.is_negative()) {
            return Err(Error::Parse("cohomology dimensions must be nonnegative".into()));
        }
        Ok(Self {
            dim,
            lo,
            hi,
            window,
            hilbert_polynomial,
        })
    }

    /// Sum of finitely many tables on the same `P^m`, materialized on a window.
    pub fn sum_of<T: CohomologyTable>(tables: &[T], lo: i64, hi: i64, euler: Vec<Rational>) -> Result<Self> {
        let dim = tables.first().map_or(0, |t| t.dim());
        let mut window = BTreeMap::new();
        for k in lo..=hi {
            for j in 0..=dim {
                let v: Rational = tables.iter().map(|t| t.gamma(j, k)).sum();
                if !v.is_zero() {
                    window.insert((j, k), v);
                }
            }
        }
        Self::new(dim, lo, hi, window, euler)
    }

    fn chi(&self, k: i64) -> Rational {
        let k = rational::int(k);
        self.hilbert_polynomial
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &k + c)
    }
}

impl CohomologyTable for WindowedTable {
    fn dim(&self) -> usize {
        self.dim
    }

    fn gamma(&self, j: usize, k: i64) -> Rational {
        if k > self.hi {
            if j == 0 {
                self.chi(k)
            } else {
                Rational::zero()
            }
        } else if k < self.lo {
            if j == self.dim {
                let chi = self.chi(k);
                if self.dim % 2 == 0 {
                    chi
                } else {
                    -chi
                }
            } else {
                Rational::zero()
            }
        } else {
            self.window.get(&(j, k)).cloned().unwrap_or_else(Rational::zero)
        }
    }
}

/// Homological position `τ` and degree cutoff `κ` of a truncated pairing;
/// `kappa: None` means no cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationSpec {
    pub tau: usize,
    pub kappa: Option<i64>,
}

impl TruncationSpec {
    pub fn new(tau: usize, kappa: i64) -> Self {
        Self {
            tau,
            kappa: Some(kappa),
        }
    }

    pub fn untruncated(tau: usize) -> Self {
        Self { tau, kappa: None }
    }

    fn admits(&self, k: i64, offset: i64) -> bool {
        self.kappa.map_or(true, |kappa| k <= kappa + offset)
    }
}

fn signed(exp: usize, v: Rational) -> Rational {
    if exp % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `⟨β, γ⟩ = Σ_{i≥j} (-1)^{i-j} Σ_k β_{i,k} γ_{j,-k}`.
pub fn pairing<T: CohomologyTable + ?Sized>(beta: &BettiTable, gamma: &T) -> Rational {
    let m = gamma.dim();
    let mut total = Rational::zero();
    for (i, k, b) in beta.iter() {
        for j in 0..=i.min(m) {
            total += signed(i - j, b * gamma.gamma(j, -k));
        }
    }
    total
}

/// The truncated pairing `⟨β, γ⟩_{τ,κ}`:
///
/// ```text
///   Σ_{k≤κ} β_{τ,k} γ_{τ,-k}     + Σ_{j<τ} Σ_k β_{j,k} γ_{j,-k}
/// - Σ_{k≤κ+1} β_{τ+1,k} γ_{τ,-k} - Σ_{j<τ} Σ_k β_{j+1,k} γ_{j,-k}
/// + Σ_{i>j+1} (-1)^{i-j} Σ_k β_{i,k} γ_{j,-k}
/// ```
///
/// The last line runs over every `j ≥ 0`, including `j > τ`.
pub fn truncated_pairing<T: CohomologyTable + ?Sized>(
    beta: &BettiTable,
    gamma: &T,
    spec: &TruncationSpec,
) -> Rational {
    let m = gamma.dim();
    let tau = spec.tau;
    let mut total = Rational::zero();

    // diagonal, i = j
    for (i, k, b) in beta.iter() {
        if i > m {
            continue;
        }
        if i < tau || (i == tau && spec.admits(k, 0)) {
            total += b * gamma.gamma(i, -k);
        }
    }
    // superdiagonal, i = j + 1
    for (i, k, b) in beta.iter() {
        let Some(j) = i.checked_sub(1) else { continue };
        if j > m {
            continue;
        }
        if j < tau || (j == tau && spec.admits(k, 1)) {
            total -= b * gamma.gamma(j, -k);
        }
    }
    // everything at distance two or more from the diagonal
    for (i, k, b) in beta.iter() {
        for j in 0..=m.min(i.saturating_sub(2)) {
            if i > j + 1 {
                total += signed(i - j, b * gamma.gamma(j, -k));
            }
        }
    }
    total
}

/// Coefficients `δ_{i,k}` of a (possibly truncated) pairing against `gamma`,
/// laid out with column `i` and row `k - i` for `rows` and `0..=max_col`.
/// Each coefficient is obtained by evaluating on the unit table at `(i, k)`.
pub fn coefficient_grid<T: CohomologyTable + ?Sized>(
    gamma: &T,
    spec: Option<&TruncationSpec>,
    max_col: usize,
    rows: std::ops::RangeInclusive<i64>,
) -> Vec<Vec<Rational>> {
    rows.map(|row| {
        (0..=max_col)
            .map(|i| {
                let k = row + i as i64;
                let unit = BettiTable::from_entries(max_col.max(1), [(i, k, Rational::one())])
                    .expect("unit table is valid");
                match spec {
                    Some(s) => truncated_pairing(&unit, gamma, s),
                    None => pairing(&unit, gamma),
                }
            })
            .collect()
    })
    .collect()
}

/// How a facet functional evaluates a Betti table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FacetKind {
    /// `β ↦ β_{i,j}`.
    Coordinate { i: usize, j: i64 },
    /// `β ↦ ⟨β, γ⟩_{τ,κ}` for a supernatural `γ`.
    Truncated {
        table: SupernaturalTable,
        trunc: TruncationSpec,
    },
}

/// A linear functional vanishing on every pure diagram of a chain through
/// `a > b > c` except `β(b)`, where it is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetFunctional {
    pub kind: FacetKind,
    pub provenance: ChainTriple,
}

impl FacetFunctional {
    pub fn evaluate(&self, beta: &BettiTable) -> Rational {
        match &self.kind {
            FacetKind::Coordinate { i, j } => beta.get(*i, *j),
            FacetKind::Truncated { table, trunc } => truncated_pairing(beta, table, trunc),
        }
    }

    pub fn supernatural(&self) -> Option<(&SupernaturalTable, &TruncationSpec)> {
        match &self.kind {
            FacetKind::Truncated { table, trunc } => Some((table, trunc)),
            FacetKind::Coordinate { .. } => None,
        }
    }
}

/// Where `a` and `c` differ, and the value `b` must take for the triple to
/// describe an outer facet.
enum ChainShape {
    One { tau: usize },
    Two { tau: usize },
}

fn chain_shape(chain: &ChainTriple) -> Result<ChainShape> {
    let ChainTriple { a, b, c } = chain;
    let bad = |msg: String| Err(Error::BadChain(msg));
    let positions = a.differing_positions(c);
    match positions[..] {
        [tau] => {
            let (lo, hi) = (c.get(tau), a.get(tau));
            let b_tau = b.get(tau);
            let strictly_between = match (lo, b_tau, hi) {
                (Some(l), Some(x), Some(h)) => l < x && x < h,
                (Some(l), Some(x), None) => l < x,
                _ => false,
            };
            let mut expected = c.degrees().to_vec();
            if let Some(x) = b_tau {
                expected[tau] = x;
            }
            if !strictly_between || b.degrees() != &expected[..] {
                return bad(format!("{b} must differ from {c} only at position {tau}, strictly between"));
            }
            Ok(ChainShape::One { tau })
        }
        [tau, k] if k == tau + 1 => {
            let c_next = c.get(k).expect("c is at least as long as a");
            if let Some(a_tau) = a.get(tau) {
                if a_tau < c_next {
                    return bad(format!(
                        "a_{tau} = {a_tau} < c_{k} = {c_next}: the facet through {b} is interior"
                    ));
                }
            }
            let mut expected = c.degrees().to_vec();
            match a.get(k) {
                Some(x) => expected[k] = x,
                None => expected.truncate(k),
            }
            if b.degrees() != &expected[..] {
                return bad(format!("middle sequence must be {expected:?}, got {b}"));
            }
            Ok(ChainShape::Two { tau })
        }
        _ => bad(format!(
            "{a} and {c} must differ in one position or two consecutive positions, not {positions:?}"
        )),
    }
}

/// Builds the functional cutting out the facet opposite `b` for a chain
/// `a > b > c` over a ring with `vars` variables.
///
/// When `a` and `c` differ at one position `τ` this is `β ↦ β_{τ,b_τ}`. When
/// they differ at `τ, τ+1` with `a_τ ≥ c_{τ+1}`, it is the truncated pairing
/// with the supernatural table on `P^{r-1}` (`r` the last index of `c`) whose
/// roots are `-c_j` for `j ∉ {τ, τ+1}`, with `κ = c_{τ+1} - 1`.
///
/// # Panics
///
/// If the constructed functional fails to vanish on `β(a)`, `β(c)` or to be
/// positive on `β(b)`.
pub fn facet_functional(chain: &ChainTriple, vars: usize) -> Result<FacetFunctional> {
    let r = chain.c.last_index();
    if r > vars {
        return Err(Error::TooLong {
            len: chain.c.len(),
            vars,
        });
    }
    let kind = match chain_shape(chain)? {
        ChainShape::One { tau } => FacetKind::Coordinate {
            i: tau,
            j: chain.b.get(tau).expect("checked finite"),
        },
        ChainShape::Two { tau } => {
            let c = chain.c.degrees();
            let roots: Vec<i64> = (0..=r)
                .filter(|&j| j != tau && j != tau + 1)
                .map(|j| -c[j])
                .collect();
            FacetKind::Truncated {
                table: SupernaturalTable::integral(roots)?,
                trunc: TruncationSpec::new(tau, c[tau + 1] - 1),
            }
        }
    };
    let functional = FacetFunctional {
        kind,
        provenance: chain.clone(),
    };
    certify(&functional, chain, vars)?;
    Ok(functional)
}

fn certify(f: &FacetFunctional, chain: &ChainTriple, vars: usize) -> Result<()> {
    let eval = |d: &DegreeSequence| -> Result<Rational> {
        Ok(f.evaluate(pure_diagram(d, vars)?.canonical()))
    };
    let (va, vb, vc) = (eval(&chain.a)?, eval(&chain.b)?, eval(&chain.c)?);
    assert!(
        va.is_zero() && vc.is_zero() && vb.is_positive(),
        "facet functional for {chain} evaluates to ({va}, {vb}, {vc})"
    );
    Ok(())
}

/// Replaces a two-position chain by one whose entries at `τ, τ+1` are
/// `(x, x+1) > (x-1, x+1) > (x-1, x)` with `x = c_{τ+1}`, keeping everything
/// else. The facet functional of the new chain is asserted to certify the
/// original facet as well.
pub fn normalize_chain(chain: &ChainTriple) -> Result<ChainTriple> {
    let tau = match chain_shape(chain)? {
        ChainShape::Two { tau } => tau,
        ChainShape::One { .. } => {
            return Err(Error::BadChain(
                "normalization needs a chain differing in two positions".into(),
            ))
        }
    };
    let c = chain.c.degrees();
    let x = c[tau + 1];
    let build = |p: i64, q: i64| {
        let mut v = c[..tau].to_vec();
        v.extend([p, q]);
        v.extend_from_slice(&c[tau + 2..]);
        DegreeSequence::new(v)
    };
    let normalized = ChainTriple::new(build(x, x + 1)?, build(x - 1, x + 1)?, build(x - 1, x)?)?;

    let vars = chain.c.last_index().max(1);
    let functional = facet_functional(&normalized, vars)?;
    certify(&functional, chain, vars)?;
    Ok(normalized)
}
