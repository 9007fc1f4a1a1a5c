#pragma once

#include "wsel/dataset.hpp"
#include "wsel/selection.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace wsel {

inline constexpr const char* kToolVersion = "0.1.0";

struct DatasetFingerprint {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  int classes = 0;
  // FNV-1a 64 over values (row-major doubles), labels, and names.
  std::string content_hash;
};

DatasetFingerprint fingerprint(const LabeledDataset& ds);

// Everything needed to reproduce a run: the full config echo, the selection
// itself, optional held-out accuracy, timing, and the input fingerprint.
struct RunReport {
  std::string method;
  SelectionConfig config;
  bool standardized = true;
  std::string input;  // path, "stdin", or a caller-supplied tag
  double test_frac = 0.0;
  std::optional<std::uint64_t> split_seed;
  std::vector<int> selected;
  std::vector<std::string> selected_names;
  std::vector<double> scores;
  std::optional<double> accuracy;
  double wall_ms = 0.0;
  DatasetFingerprint dataset;
};

// Key-sorted JSON (two-space indent, trailing newline) so identical runs
// produce byte-identical reports up to the wall_ms field.
std::string report_to_json(const RunReport& report);

}  // namespace wsel
