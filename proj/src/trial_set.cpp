#include "evalkit/trial_set.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

#include "evalkit/error.hpp"

namespace evalkit {

namespace {

void check_length(std::size_t n, std::size_t got, const char* what) {
  if (got != n) {
    std::ostringstream msg;
    msg << what << " has " << got << " entries, expected " << n;
    throw ValidationError(msg.str());
  }
}

void check_class_index(int value, int num_classes, const char* what, std::size_t row) {
  if (value < 0 || value >= num_classes) {
    std::ostringstream msg;
    msg << what << " " << value << " out of range [0, " << num_classes
        << ") at sample index " << row;
    throw ValidationError(msg.str());
  }
}

}  // namespace

TrialSet TrialSet::create(TrialSet t) {
  const std::size_t n = t.sample_ids.size();
  if (n == 0) throw ValidationError("trial set is empty");
  if (t.num_classes <= 0) throw ValidationError("num_classes must be positive");

  check_length(n, t.labels.size(), "labels");
  if (t.posteriors) check_length(n, t.posteriors->size(), "posteriors");
  if (t.decisions) check_length(n, t.decisions->size(), "decisions");
  if (t.predictions) check_length(n, t.predictions->size(), "predictions");
  if (t.targets) check_length(n, t.targets->size(), "targets");
  if (t.groups) check_length(n, t.groups->size(), "groups");

  if (!t.posteriors && !t.decisions && !t.predictions) {
    throw ValidationError(
        "trial set needs at least one of posteriors, decisions, predictions");
  }

  std::unordered_set<std::string> seen;
  seen.reserve(n);
  for (const auto& id : t.sample_ids) {
    if (!seen.insert(id).second) {
      throw ValidationError("duplicate sample_id \"" + id + "\"");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    check_class_index(t.labels[i], t.num_classes, "label", i);
  }
  if (t.decisions) {
    for (std::size_t i = 0; i < n; ++i) {
      check_class_index((*t.decisions)[i], t.num_classes, "decision", i);
    }
  }

  if (t.posteriors) {
    for (std::size_t i = 0; i < n; ++i) {
      auto& row = (*t.posteriors)[i];
      if (row.size() != static_cast<std::size_t>(t.num_classes)) {
        std::ostringstream msg;
        msg << "posterior row at sample index " << i << " has " << row.size()
            << " entries, expected " << t.num_classes;
        throw ValidationError(msg.str());
      }
      double sum = 0.0;
      for (double v : row) {
        if (!(v >= 0.0) || v > 1.0 + kPosteriorSumTol || !std::isfinite(v)) {
          std::ostringstream msg;
          msg << "posterior entry " << v << " outside [0, 1] at sample index " << i;
          throw ValidationError(msg.str());
        }
        sum += v;
      }
      if (std::fabs(sum - 1.0) > kPosteriorSumTol) {
        std::ostringstream msg;
        msg << "posterior row does not sum to 1 (sum=" << sum
            << ") at sample index " << i;
        throw ValidationError(msg.str());
      }
      // Renormalize serialization noise; leave rows that are already within
      // accumulation error of 1 untouched so reloading a saved set is exact.
      if (std::fabs(sum - 1.0) > kPosteriorSkipRenormTol) {
        for (double& v : row) v /= sum;
      }
    }
  }

  if (!t.label_names.empty() &&
      t.label_names.size() != static_cast<std::size_t>(t.num_classes)) {
    throw ValidationError("label_names size does not match num_classes");
  }

  return t;
}

SequenceTrialSet SequenceTrialSet::create(SequenceTrialSet t) {
  const std::size_t n = t.sample_ids.size();
  if (n == 0) throw ValidationError("sequence trial set is empty");
  check_length(n, t.references.size(), "references");
  check_length(n, t.hypotheses.size(), "hypotheses");
  if (t.groups) check_length(n, t.groups->size(), "groups");

  std::unordered_set<std::string> seen;
  seen.reserve(n);
  for (const auto& id : t.sample_ids) {
    if (!seen.insert(id).second) {
      throw ValidationError("duplicate sample_id \"" + id + "\"");
    }
  }
  return t;
}

CostMatrix CostMatrix::create(std::vector<std::vector<double>> costs) {
  const std::size_t k = costs.size();
  if (k < 2) throw ValidationError("cost matrix must be at least 2x2");
  bool any_positive = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (costs[i].size() != k) {
      throw ValidationError("cost matrix is not square");
    }
    for (std::size_t j = 0; j < k; ++j) {
      const double c = costs[i][j];
      if (!std::isfinite(c) || c < 0.0) {
        throw ValidationError("cost matrix entries must be finite and >= 0");
      }
      if (i == j && c != 0.0) {
        throw ValidationError("cost matrix diagonal must be zero");
      }
      if (i != j && c > 0.0) any_positive = true;
    }
  }
  if (!any_positive) {
    throw ValidationError("cost matrix needs at least one positive off-diagonal entry");
  }
  CostMatrix m;
  m.costs = std::move(costs);
  return m;
}

CostMatrix CostMatrix::zero_one(std::size_t num_classes) {
  std::vector<std::vector<double>> c(num_classes, std::vector<double>(num_classes, 1.0));
  for (std::size_t i = 0; i < num_classes; ++i) c[i][i] = 0.0;
  CostMatrix m;
  m.costs = std::move(c);
  return m;
}

void validate_priors(const Priors& priors) {
  if (priors.p.empty()) throw ValidationError("priors are empty");
  double sum = 0.0;
  for (double v : priors.p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("prior entries must be finite and >= 0");
    }
    sum += v;
  }
  if (std::fabs(sum - 1.0) > kPriorsSumTol) {
    std::ostringstream msg;
    msg << "priors sum to " << sum << ", expected 1";
    throw ValidationError(msg.str());
  }
}

Priors Priors::user(std::vector<double> p) {
  Priors out;
  out.p = std::move(p);
  out.source = PriorsSource::user_specified;
  validate_priors(out);
  return out;
}

Priors empirical_priors(const TrialSet& trials) {
  std::vector<double> p(static_cast<std::size_t>(trials.num_classes), 0.0);
  const double n = static_cast<double>(trials.size());
  for (int label : trials.labels) p[static_cast<std::size_t>(label)] += 1.0;
  for (double& v : p) v /= n;
  Priors out;
  out.p = std::move(p);
  out.source = PriorsSource::empirical;
  return out;
}

Priors empirical_priors(const TrialSet& trials, const std::vector<std::size_t>& indices) {
  std::vector<double> p(static_cast<std::size_t>(trials.num_classes), 0.0);
  const double n = static_cast<double>(indices.size());
  for (std::size_t idx : indices) p[static_cast<std::size_t>(trials.labels[idx])] += 1.0;
  for (double& v : p) v /= n;
  Priors out;
  out.p = std::move(p);
  out.source = PriorsSource::empirical;
  return out;
}

}  // namespace evalkit
