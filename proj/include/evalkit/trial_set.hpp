#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace evalkit {

// Tolerance knobs for validation.
//   kPosteriorSumTol: a posterior row whose sum is further than this from 1 is
//     rejected; closer rows are renormalized. Rows already within floating
//     accumulation error of 1 are left untouched so that save/load round trips
//     are bit-exact.
//   kPriorsSumTol: priors must sum to 1 within this.
inline constexpr double kPosteriorSumTol = 1e-6;
inline constexpr double kPosteriorSkipRenormTol = 1e-13;
inline constexpr double kPriorsSumTol = 1e-9;

// Evaluation set for classification/regression systems. One row per sample.
// Immutable by convention after create() returns: nothing in the toolkit
// mutates a TrialSet.
struct TrialSet {
  std::vector<std::string> sample_ids;
  std::vector<int> labels;                                    // class indices in [0, K)
  std::optional<std::vector<std::vector<double>>> posteriors; // N rows of K probabilities
  std::optional<std::vector<int>> decisions;                  // class indices in [0, K)
  std::optional<std::vector<double>> predictions;             // regression outputs
  std::optional<std::vector<double>> targets;                 // regression ground truth
  std::optional<std::vector<std::string>> groups;             // correlation-inducing unit per sample
  int num_classes = 0;
  // When class labels in the source file were strings, index -> original name
  // (sorted lexicographically). Empty for integer-labeled data.
  std::vector<std::string> label_names;

  std::size_t size() const { return sample_ids.size(); }

  // Validates every invariant and renormalizes posterior rows; throws
  // ValidationError with a specific message on the first violation.
  static TrialSet create(TrialSet fields);

  bool operator==(const TrialSet&) const = default;
};

// Evaluation set for sequence tasks (ASR-style): reference and hypothesis
// token sequences per sample.
struct SequenceTrialSet {
  std::vector<std::string> sample_ids;
  std::vector<std::vector<std::string>> references;
  std::vector<std::vector<std::string>> hypotheses;
  std::optional<std::vector<std::string>> groups;

  std::size_t size() const { return sample_ids.size(); }

  static SequenceTrialSet create(SequenceTrialSet fields);

  bool operator==(const SequenceTrialSet&) const = default;
};

// K x K decision costs: entry (i, j) is the cost of deciding class j when the
// true class is i. Diagonal must be zero, all entries non-negative, at least
// one off-diagonal entry positive.
struct CostMatrix {
  std::vector<std::vector<double>> costs;

  std::size_t num_classes() const { return costs.size(); }
  double at(std::size_t true_class, std::size_t decision) const {
    return costs[true_class][decision];
  }

  static CostMatrix create(std::vector<std::vector<double>> costs);
  // All off-diagonal costs 1 (the total-error cost matrix).
  static CostMatrix zero_one(std::size_t num_classes);

  bool operator==(const CostMatrix&) const = default;
};

enum class PriorsSource { empirical, user_specified };

struct Priors {
  std::vector<double> p;
  PriorsSource source = PriorsSource::empirical;

  std::size_t num_classes() const { return p.size(); }

  static Priors user(std::vector<double> p);

  bool operator==(const Priors&) const = default;
};

// Per-class label frequencies of the trial set.
Priors empirical_priors(const TrialSet& trials);

// Same, restricted to an index multiset (used by the bootstrap engine, where
// resamples repeat samples).
Priors empirical_priors(const TrialSet& trials, const std::vector<std::size_t>& indices);

void validate_priors(const Priors& priors);

}  // namespace evalkit
