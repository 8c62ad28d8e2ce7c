//! Deterministic compound Poisson sampling from an atomic Lévy measure,
//! with empirical characteristic-function validation.
//!
//! Randomness comes from SplitMix64 streams split per draw index:
//! draw i uses a generator seeded by `mix64(seed ^ mix64((i+1)·γ₆₄))`
//! where γ₆₄ is the 64-bit golden-ratio constant and `mix64` the
//! SplitMix64 finalizer. Results therefore depend only on (seed, i),
//! never on batching or thread count, and a batch's prefix is stable
//! under enlarging n.

use num_complex::Complex64;
use serde::Serialize;

use crate::accum::pairwise_sum_complex;
use crate::error::{Error, Result};
use crate::gfun::g_zero_sum;
use crate::levy::LevyMeasure;
use crate::zeros::ZeroTable;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Largest batch the sampler will produce in one call.
pub const MAX_BATCH: usize = 100_000_000;

/// SplitMix64: state advances by the golden-ratio increment and each
/// output is the finalizer mix of the new state.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

#[inline]
fn mix64(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// The per-index stream for draw `index` under `seed`.
    pub fn stream(seed: u64, index: u64) -> Self {
        SplitMix64 {
            state: mix64(seed ^ mix64(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA))),
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Walker/Vose alias table for O(1) draws from a finite discrete
/// distribution. Construction feeds indices in ascending order, so the
/// table (and every draw) is deterministic.
#[derive(Debug, Clone)]
pub struct AliasTable {
    prob: Vec<f64>,
    alias: Vec<usize>,
}

impl AliasTable {
    pub fn new(weights: &[f64]) -> Result<AliasTable> {
        if weights.is_empty() {
            return Err(Error::Domain("alias table needs at least one weight".into()));
        }
        let total: f64 = weights.iter().sum();
        if total.is_nan() || total <= 0.0 || weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::Domain(
                "alias weights must be finite, non-negative, with positive total".into(),
            ));
        }
        let n = weights.len();
        let mut scaled: Vec<f64> = weights.iter().map(|w| w * n as f64 / total).collect();
        let mut prob = vec![0.0f64; n];
        let mut alias = vec![0usize; n];
        let mut small: Vec<usize> = Vec::with_capacity(n);
        let mut large: Vec<usize> = Vec::with_capacity(n);
        for (i, &s) in scaled.iter().enumerate() {
            if s < 1.0 {
                small.push(i);
            } else {
                large.push(i);
            }
        }
        while let (Some(&s), Some(&l)) = (small.last(), large.last()) {
            small.pop();
            prob[s] = scaled[s];
            alias[s] = l;
            scaled[l] = (scaled[l] + scaled[s]) - 1.0;
            if scaled[l] < 1.0 {
                large.pop();
                small.push(l);
            }
        }
        for &i in small.iter().chain(large.iter()) {
            prob[i] = 1.0;
            alias[i] = i;
        }
        Ok(AliasTable { prob, alias })
    }

    #[inline]
    pub fn sample(&self, rng: &mut SplitMix64) -> usize {
        let n = self.prob.len();
        let scaled = rng.next_f64() * n as f64;
        let mut column = scaled as usize;
        if column == n {
            column = n - 1;
        }
        if scaled - (column as f64) < self.prob[column] {
            column
        } else {
            self.alias[column]
        }
    }
}

/// A reproducible batch of compound Poisson draws.
#[derive(Debug, Clone, Serialize)]
pub struct SampleBatch {
    pub values: Vec<f64>,
    pub seed: u64,
    pub n: usize,
    /// Truncation height of the measure that produced the batch.
    pub measure_height: f64,
}

/// Draw `n` independent samples X = Σ_{j≤K} J_j with K ~ Poisson(λ_tot)
/// and jumps J from the normalized atom distribution (alias method).
/// K is drawn by CDF inversion, fine for the tiny rates these measures
/// carry (λ_tot < 0.05 for every bundled table; guarded at 500 where
/// e^{-λ} underflows the inversion).
pub fn sample(measure: &LevyMeasure, n: usize, seed: u64) -> Result<SampleBatch> {
    if measure.is_empty() {
        return Err(Error::Domain("cannot sample from an empty measure".into()));
    }
    if n == 0 {
        return Err(Error::Domain("sample count must be positive".into()));
    }
    if n > MAX_BATCH {
        return Err(Error::Capacity(format!(
            "sample count {n} exceeds the {MAX_BATCH} cap"
        )));
    }
    let rate = measure.total_mass();
    if rate > 500.0 {
        return Err(Error::Capacity(format!(
            "total mass {rate} too large for inversion sampling"
        )));
    }
    let masses: Vec<f64> = measure.atoms().iter().map(|a| a.mass).collect();
    let alias = AliasTable::new(&masses)?;
    let p_zero = (-rate).exp();

    let mut values = Vec::with_capacity(n);
    for index in 0..n {
        let mut rng = SplitMix64::stream(seed, index as u64);
        let u = rng.next_f64();
        if u < p_zero {
            values.push(0.0);
            continue;
        }
        // Invert the Poisson CDF past the zero class.
        let mut k = 0u32;
        let mut pmf = p_zero;
        let mut cdf = p_zero;
        while u >= cdf && k < 20_000 {
            k += 1;
            pmf *= rate / k as f64;
            cdf += pmf;
        }
        let mut x = 0.0;
        for _ in 0..k {
            x += measure.atoms()[alias.sample(&mut rng)].location;
        }
        values.push(x);
    }

    Ok(SampleBatch {
        values,
        seed,
        n,
        measure_height: measure.truncation_height(),
    })
}

/// Empirical vs. theoretical characteristic function over a t-grid.
#[derive(Debug, Clone, Serialize)]
pub struct EcfReport {
    pub tgrid: Vec<f64>,
    pub ecf: Vec<Complex64>,
    /// exp(g(t)) by the zero-sum route over the same truncated table.
    pub theoretical: Vec<Complex64>,
    pub sup_error: f64,
    /// 3/√n
    pub clt_tolerance: f64,
}

impl EcfReport {
    pub fn passed(&self) -> bool {
        self.sup_error <= self.clt_tolerance
    }
}

/// Compare the batch's empirical characteristic function with
/// exp(g_zero_sum) on `tgrid`. The zero table must be the one whose
/// measure produced the batch (same truncation height), otherwise the
/// comparison is meaningless and rejected.
pub fn ecf_compare(batch: &SampleBatch, zeros: &ZeroTable, tgrid: &[f64]) -> Result<EcfReport> {
    if batch.measure_height != zeros.height() {
        return Err(Error::Consistency(format!(
            "batch sampled at truncation height {} but the table reaches {}",
            batch.measure_height,
            zeros.height()
        )));
    }

    let n = batch.values.len() as f64;
    let mut terms = vec![Complex64::new(0.0, 0.0); batch.values.len()];
    let mut ecf = Vec::with_capacity(tgrid.len());
    let mut theoretical = Vec::with_capacity(tgrid.len());
    let mut sup_error = 0.0f64;
    for &t in tgrid {
        for (term, &x) in terms.iter_mut().zip(&batch.values) {
            *term = if x == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                let phase = t * x;
                Complex64::new(phase.cos(), phase.sin())
            };
        }
        let empirical = pairwise_sum_complex(&terms) / n;
        let reference = Complex64::new(g_zero_sum(t, zeros)?.value.exp(), 0.0);
        sup_error = sup_error.max((empirical - reference).norm());
        ecf.push(empirical);
        theoretical.push(reference);
    }

    Ok(EcfReport {
        tgrid: tgrid.to_vec(),
        ecf,
        theoretical,
        sup_error,
        clt_tolerance: 3.0 / n.sqrt(),
    })
}
