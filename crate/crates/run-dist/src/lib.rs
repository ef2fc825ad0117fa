//! Distributions of success runs in Bernoulli trials: exact, approximate,
//! asymptotic and nonhomogeneous, plus multiplicity corrections.
//!
//! The central quantities are the longest success run `L_n` in `n` trials
//! and the number `N_{n,k}` of nonoverlapping success runs of length `k`
//! (counted greedily left to right, so a maximal run of length `l`
//! contributes `l / k` rounded down). The two are linked by the equivalence
//! `L_n < k  <=>  N_{n,k} = 0`, which this crate exploits throughout.
//!
//! Four routes to the same tail probability are provided, each with its own
//! domain of applicability:
//!
//! * [`exact_run_count_pmf`] evaluates the closed-form pmf of `N_{n,k}` in
//!   exact big-integer arithmetic (binomials overflow 64-bit integers and
//!   the alternating inner sum rules out naive floating point);
//! * [`feller_longest_run_cdf`] uses the recurrent-event approximation,
//!   highly accurate once `n` is moderately larger than `k`;
//! * [`imbed_longest_run_tail`] evolves a small Markov chain through the
//!   trials and is the general-purpose engine: `O(n k)` time, `O(k)` space,
//!   and per-trial success probabilities may vary;
//! * [`poisson_run_approx`] gives the limiting Poisson probability for run
//!   counts under `n q p^k -> lambda` asymptotics.
//!
//! A brute-force enumeration oracle ([`brute_force_longest_run_tail`]) is
//! exported for verification at small `n`.
//!
//! ```
//! use run_dist::{imbed_longest_run_tail, longest_run_tail_exact, TrialSeries};
//!
//! let exact = longest_run_tail_exact(63, 18, 0.5).unwrap();
//! let series = TrialSeries::constant(0.5, 63).unwrap();
//! let imbed = imbed_longest_run_tail(&series, 18);
//! assert!((exact - imbed).abs() < 1e-12);
//! assert!((exact - 8.9644e-5).abs() < 1e-8);
//! ```

mod adjust;
mod brute;
mod error;
mod exact;
mod feller;
mod imbed;
mod poisson;
mod series;
mod smooth;

pub use adjust::{bonferroni_adjust, holm_adjust};
pub use brute::{brute_force_longest_run_tail, BRUTE_FORCE_MAX_TRIALS};
pub use error::RunDistError;
pub use exact::{exact_run_count_pmf, longest_run_tail_exact, EXACT_MAX_TRIALS};
pub use feller::{feller_longest_run_cdf, solve_feller_theta};
pub use imbed::{imbed_longest_run_tail, longest_run_pmf};
pub use poisson::poisson_run_approx;
pub use series::{RunCountQuery, RunDistribution, TrialSeries};
pub use smooth::{smooth_pmf, smooth_pmf_with_step, DEFAULT_GRID_STEP};
