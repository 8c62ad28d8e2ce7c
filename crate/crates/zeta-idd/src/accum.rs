//! Compensated floating-point accumulation.
//!
//! Every series and sum in this crate is accumulated with Neumaier's
//! variant of Kahan summation, which keeps the rounding error of an
//! n-term sum at O(ε) instead of O(nε) regardless of term ordering or
//! magnitude spread.

use num_complex::Complex64;

/// Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Compensated sum of an iterator of f64 terms.
pub fn sum_compensated<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut acc = Neumaier::new();
    for v in terms {
        acc.add(v);
    }
    acc.total()
}

/// Compensated accumulator for complex values (independent re/im lanes).
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexNeumaier {
    re: Neumaier,
    im: Neumaier,
}

impl ComplexNeumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Complex64) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    #[inline]
    pub fn total(&self) -> Complex64 {
        Complex64::new(self.re.total(), self.im.total())
    }
}

/// Pairwise (fixed-tree) sum of complex values.
///
/// The reduction tree depends only on the slice length, so the result is
/// independent of how callers might split the work. Chunks of at most 64
/// elements are summed linearly at the leaves.
pub fn pairwise_sum_complex(values: &[Complex64]) -> Complex64 {
    if values.len() <= 64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for v in values {
            acc += v;
        }
        return acc;
    }
    let mid = values.len() / 2;
    pairwise_sum_complex(&values[..mid]) + pairwise_sum_complex(&values[mid..])
}
