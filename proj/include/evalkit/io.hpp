#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evalkit/trial_set.hpp"

namespace evalkit {

enum class TrialFormat { jsonl, csv };

// .csv -> csv, everything else -> jsonl.
TrialFormat trial_format_from_path(const std::string& path);

// Loads and validates a trial file. K is inferred (posterior width, else max
// class index + 1) unless num_classes is given, in which case it wins and out
// of range labels are errors. String class labels are mapped to indices by
// sorted lexicographic order; the mapping is kept in TrialSet::label_names.
// Errors carry "path:line:" context.
TrialSet load_trials(const std::string& path, TrialFormat format,
                     std::optional<int> num_classes = std::nullopt);
TrialSet load_trials(const std::string& path,
                     std::optional<int> num_classes = std::nullopt);

// One JSON object per line, fields in schema order. Loading the written file
// reproduces the TrialSet exactly (pass the same explicit num_classes if the
// original load needed one).
void save_trials_jsonl(const TrialSet& trials, const std::string& path);

SequenceTrialSet load_sequence_trials(const std::string& path);
void save_sequence_trials_jsonl(const SequenceTrialSet& trials, const std::string& path);

// One sample id per line; blank lines ignored.
std::vector<std::string> load_id_list(const std::string& path);

}  // namespace evalkit
