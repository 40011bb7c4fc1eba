#![allow(dead_code)]

use boij_soderberg::koszul::{random_ideal, MonomialIdeal};
use boij_soderberg::{DegreeSequence, SupernaturalTable};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const IDEALS: u64 = 200;
pub const TABLES: u64 = 50;

/// Ideal number `i` of the shared corpus: 1 to 4 variables, at most six
/// generators of total degree at most five.
pub fn corpus_ideal(i: u64) -> MonomialIdeal {
    let vars = 1 + (i % 4) as usize;
    random_ideal(0x5eed_0000 + i, vars, 6, 5)
}

/// Supernatural table number `i`: up to three distinct roots in [-6, 6],
/// integral rank.
pub fn corpus_supernatural(i: u64) -> SupernaturalTable {
    let mut rng = ChaCha8Rng::seed_from_u64(0xcafe_0000 + i);
    let m = rng.gen_range(0..=3);
    let mut pool: Vec<i64> = (-6..=6).collect();
    pool.shuffle(&mut rng);
    let mut roots = pool[..m].to_vec();
    roots.sort_unstable_by(|a, b| b.cmp(a));
    SupernaturalTable::integral(roots).unwrap()
}

/// A strictly increasing sequence of length `1..=max_len` with entries in `lo..=hi`.
pub fn random_sequence(rng: &mut impl Rng, max_len: usize, lo: i64, hi: i64) -> DegreeSequence {
    let len = rng.gen_range(1..=max_len);
    let mut pool: Vec<i64> = (lo..=hi).collect();
    pool.shuffle(rng);
    let mut d = pool[..len].to_vec();
    d.sort_unstable();
    DegreeSequence::new(d).unwrap()
}

pub fn seq(d: &[i64]) -> DegreeSequence {
    DegreeSequence::new(d.to_vec()).unwrap()
}

/// A random quadruple `(a, c, tau, k)` for the interior facet identity,
/// with `b` and `b'` increasing. `a` may end before `k` (an infinite entry).
pub fn random_facet_quadruple(rng: &mut impl Rng) -> (DegreeSequence, DegreeSequence, usize, usize) {
    loop {
        let c = random_sequence(rng, 6, -10, 10);
        let len = c.len();
        if len < 2 {
            continue;
        }
        let tau = rng.gen_range(0..len - 1);
        let k = rng.gen_range(tau + 1..len);
        let mut a = c.degrees().to_vec();
        a[tau] += rng.gen_range(1..=4);
        let infinite = k == len - 1 && rng.gen_bool(0.3);
        if infinite {
            a.truncate(k);
        } else {
            a[k] += rng.gen_range(1..=4);
        }
        let Ok(a) = DegreeSequence::new(a) else { continue };
        let a_tau = a.get(tau).unwrap();
        let interior = k > tau + 1 || a_tau < c.get(tau + 1).unwrap();
        let mut b = c.degrees().to_vec();
        b[tau] = a_tau;
        let mut b_prime = a.degrees().to_vec();
        b_prime[tau] = c.get(tau).unwrap();
        if interior && DegreeSequence::new(b).is_ok() && DegreeSequence::new(b_prime).is_ok() {
            return (a, c, tau, k);
        }
    }
}
