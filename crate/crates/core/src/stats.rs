//! Streaming sample statistics and the chunked Monte Carlo driver.
//!
//! Trials are split into fixed-size chunks independent of the worker count.
//! Each chunk is reduced sequentially and chunk results are merged in chunk
//! order, so a run is bit-identical for any thread pool size.

use rayon::prelude::*;

use crate::rng::{StreamRng, StreamSeed};
use crate::scalar::Scalar;

/// Trials per reduction chunk.
pub const CHUNK_TRIALS: usize = 4096;

/// A sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T> {
    pub mean: T,
    pub stderr: T,
    pub count: usize,
}

impl<T: Scalar> Estimate<T> {
    /// `|mean - target| / stderr`. Infinite when stderr is zero and the mean is off target.
    pub fn z_score(&self, target: T) -> T {
        let d = (self.mean - target).abs();
        if self.stderr > T::zero() {
            d / self.stderr
        } else if d == T::zero() {
            T::zero()
        } else {
            T::infinity()
        }
    }

    /// True if `target` lies within `k` standard errors of the mean.
    pub fn within(&self, target: T, k: T) -> bool {
        self.z_score(target) <= k
    }
}

/// Welford accumulator with Chan's pairwise merge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunningStats<T> {
    n: usize,
    mean: T,
    m2: T,
}

impl<T: Scalar> Default for RunningStats<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> RunningStats<T> {
    pub fn new() -> Self {
        Self {
            n: 0,
            mean: T::zero(),
            m2: T::zero(),
        }
    }

    #[inline]
    pub fn push(&mut self, x: T) {
        self.n += 1;
        let d = x - self.mean;
        self.mean = self.mean + d / T::from_count(self.n);
        self.m2 = self.m2 + d * (x - self.mean);
    }

    pub fn merge(&mut self, other: &Self) {
        if other.n == 0 {
            return;
        }
        if self.n == 0 {
            *self = *other;
            return;
        }
        let n = self.n + other.n;
        let (na, nb, nt) = (
            T::from_count(self.n),
            T::from_count(other.n),
            T::from_count(n),
        );
        let d = other.mean - self.mean;
        self.mean = self.mean + d * nb / nt;
        self.m2 = self.m2 + other.m2 + d * d * na * nb / nt;
        self.n = n;
    }

    pub fn count(&self) -> usize {
        self.n
    }

    pub fn mean(&self) -> T {
        self.mean
    }

    /// Unbiased sample variance; zero for fewer than two samples.
    pub fn variance(&self) -> T {
        if self.n < 2 {
            T::zero()
        } else {
            self.m2 / T::from_count(self.n - 1)
        }
    }

    pub fn estimate(&self) -> Estimate<T> {
        let stderr = if self.n < 2 {
            T::zero()
        } else {
            (self.variance() / T::from_count(self.n)).sqrt()
        };
        Estimate {
            mean: self.mean,
            stderr,
            count: self.n,
        }
    }
}

/// Bivariate accumulator: both marginals plus the co-moment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairStats<T> {
    pub x: RunningStats<T>,
    pub y: RunningStats<T>,
    c: T,
}

impl<T: Scalar> Default for PairStats<T> {
    fn default() -> Self {
        Self {
            x: RunningStats::new(),
            y: RunningStats::new(),
            c: T::zero(),
        }
    }
}

impl<T: Scalar> PairStats<T> {
    #[inline]
    pub fn push(&mut self, x: T, y: T) {
        let dx = x - self.x.mean;
        self.x.push(x);
        self.y.push(y);
        self.c = self.c + dx * (y - self.y.mean);
    }

    pub fn merge(&mut self, other: &Self) {
        if other.x.n == 0 {
            return;
        }
        if self.x.n == 0 {
            *self = *other;
            return;
        }
        let (na, nb) = (T::from_count(self.x.n), T::from_count(other.x.n));
        let nt = na + nb;
        let dx = other.x.mean - self.x.mean;
        let dy = other.y.mean - self.y.mean;
        self.c = self.c + other.c + dx * dy * na * nb / nt;
        self.x.merge(&other.x);
        self.y.merge(&other.y);
    }

    /// Unbiased sample covariance.
    pub fn covariance(&self) -> T {
        if self.x.n < 2 {
            T::zero()
        } else {
            self.c / T::from_count(self.x.n - 1)
        }
    }

    /// Sample correlation coefficient; zero when either marginal is constant.
    pub fn correlation(&self) -> T {
        let v = self.x.variance() * self.y.variance();
        if v > T::zero() {
            self.covariance() / v.sqrt()
        } else {
            T::zero()
        }
    }
}

/// Something that can absorb another accumulator of the same kind.
pub trait Mergeable: Send {
    fn merge_from(&mut self, other: &Self);
}

impl<T: Scalar> Mergeable for RunningStats<T> {
    fn merge_from(&mut self, other: &Self) {
        self.merge(other);
    }
}

impl<T: Scalar> Mergeable for PairStats<T> {
    fn merge_from(&mut self, other: &Self) {
        self.merge(other);
    }
}

impl<A: Mergeable, const N: usize> Mergeable for [A; N] {
    fn merge_from(&mut self, other: &Self) {
        for (a, b) in self.iter_mut().zip(other) {
            a.merge_from(b);
        }
    }
}

/// Runs `trials` independent trials in parallel. Trial `t` draws from
/// `seed.stream(t)`; `trial` folds its result into the chunk accumulator.
pub fn run_trials<A, F>(
    trials: usize,
    seed: &StreamSeed,
    init: impl Fn() -> A + Sync,
    trial: F,
) -> A
where
    A: Mergeable,
    F: Fn(&mut A, &mut StreamRng, usize) + Sync,
{
    let chunks = trials.div_ceil(CHUNK_TRIALS);
    let partials: Vec<A> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = init();
            let lo = c * CHUNK_TRIALS;
            let hi = (lo + CHUNK_TRIALS).min(trials);
            for t in lo..hi {
                let mut rng = seed.stream(t as u64);
                trial(&mut acc, &mut rng, t);
            }
            acc
        })
        .collect();
    let mut total = init();
    for p in &partials {
        total.merge_from(p);
    }
    total
}
