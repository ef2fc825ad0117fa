use crate::error::RunDistError;

/// Ordered per-trial success probabilities `p_1 .. p_n`.
///
/// A constant series models i.i.d. trials; a varying one feeds the
/// nonhomogeneous Markov-chain imbedding.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialSeries {
    probs: Vec<f64>,
}

impl TrialSeries {
    pub fn new(probs: Vec<f64>) -> Result<TrialSeries, RunDistError> {
        if let Some(&bad) = probs
            .iter()
            .find(|p| !(0.0..=1.0).contains(*p) || p.is_nan())
        {
            return Err(RunDistError::InvalidProbability(bad));
        }
        Ok(TrialSeries { probs })
    }

    pub fn constant(p: f64, n: usize) -> Result<TrialSeries, RunDistError> {
        TrialSeries::new(vec![p; n])
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Pointwise complement 1 - p_i: the same trials with success and
    /// failure swapped.
    pub fn complement(&self) -> TrialSeries {
        TrialSeries {
            probs: self.probs.iter().map(|p| 1.0 - p).collect(),
        }
    }
}

/// Parameters of a run-count query: the probability of seeing exactly `x`
/// nonoverlapping success runs of length `k` in `n` i.i.d. trials with
/// success probability `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunCountQuery {
    pub n: usize,
    pub k: usize,
    pub x: usize,
    pub p: f64,
}

impl RunCountQuery {
    pub fn new(n: usize, k: usize, x: usize, p: f64) -> Result<RunCountQuery, RunDistError> {
        if k == 0 {
            return Err(RunDistError::ZeroRunLength);
        }
        if !(0.0..=1.0).contains(&p) || p.is_nan() {
            return Err(RunDistError::InvalidProbability(p));
        }
        if x > n / k {
            return Err(RunDistError::RunCountTooLarge { x, max: n / k });
        }
        Ok(RunCountQuery { n, k, x, p })
    }
}

/// Probability mass function of the longest run `L_n` over `k = 0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct RunDistribution {
    n: usize,
    pmf: Vec<f64>,
}

impl RunDistribution {
    pub(crate) fn from_pmf(pmf: Vec<f64>) -> RunDistribution {
        debug_assert!(!pmf.is_empty());
        RunDistribution {
            n: pmf.len() - 1,
            pmf,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `P(L_n = k)`; zero outside `0..=n`.
    pub fn prob(&self, k: usize) -> f64 {
        self.pmf.get(k).copied().unwrap_or(0.0)
    }

    pub fn pmf(&self) -> &[f64] {
        &self.pmf
    }

    /// `P(L_n >= k)`.
    pub fn tail(&self, k: usize) -> f64 {
        self.pmf.iter().skip(k).sum()
    }

    /// Index of the largest pmf entry (smallest index on ties).
    pub fn mode(&self) -> usize {
        let mut best = 0;
        for (k, &mass) in self.pmf.iter().enumerate() {
            if mass > self.pmf[best] {
                best = k;
            }
        }
        best
    }
}
