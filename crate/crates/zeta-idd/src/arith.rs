//! Prime-power sieving, the von Mangoldt function Λ(n), and the weighted
//! prime sum Σ_{n ≤ e^t} Λ(n)/√n · (t − log n).

use crate::accum::Neumaier;
use crate::error::{Error, Result};

/// Hard cap on sieve size; above this the dense bitmap and entry vector
/// stop being desk-scale.
pub const SIEVE_LIMIT_GUARD: u64 = 1_000_000_000;

const SEGMENT_SIZE: u64 = 1 << 20;

/// One prime power n = p^k with Λ(n) = log p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VonMangoldtEntry {
    pub n: u64,
    pub log_p: f64,
}

/// All prime powers up to `limit`, sorted by n, with per-entry caches for
/// the quantities the evaluators need in their inner loops.
#[derive(Debug, Clone)]
pub struct VonMangoldtTable {
    limit: u64,
    entries: Vec<VonMangoldtEntry>,
    /// ln n per entry.
    ln_n: Vec<f64>,
    /// Λ(n)/√n per entry.
    weight: Vec<f64>,
    /// Compensated Σ Λ(n) over the whole table (Chebyshev ψ(limit)).
    chebyshev_total: f64,
}

/// Simple sieve of Eratosthenes, used for the root primes.
fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    primes
}

/// Sieve all prime powers n ≤ `limit` and tabulate Λ.
///
/// Segmented Eratosthenes over blocks of 2^20; memory is O(π(limit))
/// for the output plus one block. log p is taken once per prime and
/// reused for its higher powers.
pub fn sieve_von_mangoldt(limit: u64) -> Result<VonMangoldtTable> {
    if limit < 1 {
        return Err(Error::Domain("sieve limit must be at least 1".into()));
    }
    if limit > SIEVE_LIMIT_GUARD {
        return Err(Error::Capacity(format!(
            "sieve limit {limit} exceeds the guard {SIEVE_LIMIT_GUARD}"
        )));
    }

    let root = (limit as f64).sqrt() as u64 + 1;
    let root_primes = primes_up_to(root);
    let root_logs: Vec<f64> = root_primes.iter().map(|&p| (p as f64).ln()).collect();

    let mut entries = Vec::new();

    // Primes in [2, limit], one segment at a time.
    let mut lo = 2u64;
    let mut mark = vec![false; SEGMENT_SIZE as usize];
    while lo <= limit {
        let hi = (lo + SEGMENT_SIZE - 1).min(limit);
        let span = (hi - lo + 1) as usize;
        mark[..span].fill(false);
        for &p in &root_primes {
            // Starting at max(p^2, first multiple >= lo) keeps p itself
            // unmarked when it falls inside the segment.
            let mut q = (p * p).max(lo.div_ceil(p) * p);
            while q <= hi {
                mark[(q - lo) as usize] = true;
                q += p;
            }
        }
        for (i, &composite) in mark[..span].iter().enumerate() {
            if !composite {
                let n = lo + i as u64;
                if n >= 2 {
                    let log_p = match root_primes.binary_search(&n) {
                        Ok(idx) => root_logs[idx],
                        Err(_) => (n as f64).ln(),
                    };
                    entries.push(VonMangoldtEntry { n, log_p });
                }
            }
        }
        lo = hi + 1;
    }

    // Proper prime powers p^k, k >= 2; only primes up to sqrt(limit)
    // contribute, reusing the log already taken for p.
    for (&p, &log_p) in root_primes.iter().zip(&root_logs) {
        let mut q = p.checked_mul(p);
        while let Some(value) = q {
            if value > limit {
                break;
            }
            entries.push(VonMangoldtEntry { n: value, log_p });
            q = value.checked_mul(p);
        }
    }

    entries.sort_unstable_by_key(|e| e.n);

    let ln_n: Vec<f64> = entries.iter().map(|e| (e.n as f64).ln()).collect();
    let weight: Vec<f64> = entries
        .iter()
        .map(|e| e.log_p / (e.n as f64).sqrt())
        .collect();
    let mut total = Neumaier::new();
    for e in &entries {
        total.add(e.log_p);
    }

    Ok(VonMangoldtTable {
        limit,
        entries,
        ln_n,
        weight,
        chebyshev_total: total.total(),
    })
}

impl VonMangoldtTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn entries(&self) -> &[VonMangoldtEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Chebyshev ψ(limit) = Σ_{n ≤ limit} Λ(n).
    pub fn chebyshev_total(&self) -> f64 {
        self.chebyshev_total
    }

    pub(crate) fn ln_n(&self) -> &[f64] {
        &self.ln_n
    }
}

/// The weighted prime sum Σ_{n ≤ e^t} Λ(n)/√n · (t − log n).
///
/// Terms are added in ascending n with compensated accumulation. The
/// cutoff is floor(e^t · (1 + 4ε)): widening by a few ulps makes the
/// inclusion of a boundary prime power n = e^t deterministic, and is
/// harmless because such a term carries the factor t − log n = 0.
pub fn prime_term_sum(t: f64, table: &VonMangoldtTable) -> Result<f64> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::Domain(format!(
            "prime_term_sum requires finite t >= 0, got {t}"
        )));
    }
    let cutoff_real = (t.exp() * (1.0 + 4.0 * f64::EPSILON)).floor();
    if cutoff_real > table.limit as f64 {
        return Err(Error::Capacity(format!(
            "table sieved to {} cannot cover e^t = {:.3e}",
            table.limit,
            t.exp()
        )));
    }
    let cutoff = cutoff_real as u64;
    let end = table.entries.partition_point(|e| e.n <= cutoff);

    let mut acc = Neumaier::new();
    for i in 0..end {
        acc.add(table.weight[i] * (t - table.ln_n[i]));
    }
    Ok(acc.total())
}
