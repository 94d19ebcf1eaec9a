#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ceopt/rng.hpp"

namespace ceopt {

/// Tolerance for "probabilities sum to one" invariants.
inline constexpr double kProbSumTolerance = 1e-9;

/// Thrown when sampling a stopping law that cannot terminate (continuation
/// probability at 1 with no horizon); the sampler gives up after
/// GeometricStoppingParams::kLengthCap steps.
class NonTerminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A batch of outcomes with nonnegative update weights. Zero weights are
/// allowed per entry, but an update is only defined when at least one weight
/// is strictly positive.
template <typename Outcome>
struct WeightedSamples {
  std::vector<Outcome> outcomes;
  std::vector<double> weights;

  double total_weight() const {
    double sum = 0.0;
    for (double w : weights) sum += w;
    return sum;
  }

  void validate() const {
    if (outcomes.size() != weights.size())
      throw std::invalid_argument("weighted samples: outcomes and weights lengths differ");
    if (outcomes.empty()) throw std::invalid_argument("weighted samples: empty batch");
    bool any_positive = false;
    for (double w : weights) {
      if (!(w >= 0.0)) throw std::invalid_argument("weighted samples: negative weight");
      any_positive = any_positive || w > 0.0;
    }
    if (!any_positive) throw std::invalid_argument("weighted samples: all weights are zero");
  }
};

/// Probability vector over a finite decision set {0, ..., n-1}.
/// Immutable after construction; the constructor enforces nonnegative entries
/// summing to one within kProbSumTolerance.
class CategoricalParams {
 public:
  explicit CategoricalParams(std::vector<double> probs);
  static CategoricalParams uniform(std::size_t n_decisions);

  std::size_t size() const { return probs_.size(); }
  const std::vector<double>& probs() const { return probs_; }
  double prob(std::size_t decision) const;

  std::size_t sample(Rng& rng) const;

  /// Exact log density. Zero-probability decisions return -infinity rather
  /// than erroring; decisions outside {0,...,n-1} are a domain error.
  double log_prob(std::size_t decision) const;

 private:
  std::vector<double> probs_;
};

/// Maximizer of the weighted log-likelihood: prob(d) = weight mass on d
/// divided by the total weight.
CategoricalParams update_categorical(const WeightedSamples<std::size_t>& samples,
                                     std::size_t n_decisions);

/// Convex smoothing: result = alpha * previous + (1 - alpha) * fitted,
/// computed as fitted + alpha * (previous - fitted) so that alpha = 0 returns
/// `fitted` bit-exactly and mixing equal inputs is a bit-exact fixed point.
CategoricalParams mix(const CategoricalParams& previous, const CategoricalParams& fitted,
                      double alpha);

double max_abs_diff(const CategoricalParams& a, const CategoricalParams& b);

/// One (condition, decision) pair drawn against a conditional law.
struct ConditionalOutcome {
  std::size_t condition = 0;
  std::size_t decision = 0;
};

/// One categorical row per condition; all rows share the same decision set.
class ConditionalCategoricalParams {
 public:
  explicit ConditionalCategoricalParams(std::vector<CategoricalParams> rows);
  static ConditionalCategoricalParams uniform(std::size_t n_conditions, std::size_t n_decisions);

  std::size_t n_conditions() const { return rows_.size(); }
  std::size_t n_decisions() const { return rows_.front().size(); }
  const CategoricalParams& row(std::size_t condition) const;

  std::size_t sample(std::size_t condition, Rng& rng) const;
  double log_prob(std::size_t condition, std::size_t decision) const;

 private:
  std::vector<CategoricalParams> rows_;
};

/// Per-row weighted maximum likelihood. Rows that receive zero total weight
/// are copied bit-identically from `current`.
ConditionalCategoricalParams update_conditional(const ConditionalCategoricalParams& current,
                                                const WeightedSamples<ConditionalOutcome>& samples);

ConditionalCategoricalParams mix(const ConditionalCategoricalParams& previous,
                                 const ConditionalCategoricalParams& fitted, double alpha);

double max_abs_diff(const ConditionalCategoricalParams& a, const ConditionalCategoricalParams& b);

/// Stopping-time law over sequence lengths t >= 1: a run of t-1 "continue"
/// steps followed by "end", each step continuing with probability lambda.
/// The untruncated density of length t is lambda^(t-1) * (1 - lambda).
///
/// With a horizon T the law is conditioned on t <= T:
///   lambda^(t-1) * (1 - lambda) / (1 - lambda^T),
/// whose lambda -> 1 limit is uniform over {1, ..., T}. Boundary parameters
/// are legitimate update outputs, so both boundaries evaluate to their limit
/// laws instead of erroring.
class GeometricStoppingParams {
 public:
  /// Steps allowed before sample() declares the law non-terminating.
  static constexpr std::int64_t kLengthCap = 10'000'000;

  explicit GeometricStoppingParams(double lambda);
  GeometricStoppingParams(double lambda, std::int64_t horizon);

  double lambda() const { return lambda_; }
  bool truncated() const { return horizon_.has_value(); }
  std::optional<std::int64_t> horizon() const { return horizon_; }

  /// Draws a sequence length. Untruncated sampling walks the per-step
  /// continue/end process and throws NonTerminationError past kLengthCap;
  /// truncated sampling inverts the conditional CDF and always terminates.
  std::int64_t sample(Rng& rng) const;

  /// Log density of a length; -infinity for zero-probability lengths,
  /// domain error for lengths outside the support (t < 1, or t > T when
  /// truncated).
  double log_prob(std::int64_t length) const;

 private:
  double lambda_;
  std::optional<std::int64_t> horizon_;
};

/// Closed-form weighted update of the untruncated law:
///   lambda = 1 - sum(w) / sum(w * t).
GeometricStoppingParams update_geometric(const WeightedSamples<std::int64_t>& samples);

/// Weighted update of the horizon-conditioned law: the maximizer over
/// lambda in [0, 1] of lambda^(tbar-1) * (1 - lambda) / (1 - lambda^T) with
/// tbar the weighted mean length. When tbar >= T the maximizer is exactly 1.
/// Interior maximizers are located by a 1000-point grid scan refined by
/// golden section to 1e-9, evaluated through the expanded geometric sum so
/// the objective stays finite at lambda = 1.
GeometricStoppingParams update_truncated_geometric(const WeightedSamples<std::int64_t>& samples,
                                                   std::int64_t horizon);

GeometricStoppingParams mix(const GeometricStoppingParams& previous,
                            const GeometricStoppingParams& fitted, double alpha);

double max_abs_diff(const GeometricStoppingParams& a, const GeometricStoppingParams& b);

}  // namespace ceopt
