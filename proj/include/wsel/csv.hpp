#pragma once

#include "wsel/dataset.hpp"

#include <iosfwd>
#include <string>

namespace wsel {

struct CsvOptions {
  // Header name or zero-based column index (as a decimal string) of the
  // label column. Name matching runs first, so a header cell that looks like
  // a number still wins over index interpretation.
  std::string label_column = "label";
  bool has_header = true;
};

// Parses RFC-4180-style CSV (quoted fields, escaped quotes, embedded commas
// and newlines, optional CRLF) into a labeled dataset. Every non-label cell
// must parse fully as a finite number; errors name the offending 1-based data
// row. Without a header, features are named f0..f{d-1} by their position
// among the non-label columns.
LabeledDataset load_csv(std::istream& in, const CsvOptions& options);

LabeledDataset load_csv_file(const std::string& path, const CsvOptions& options);

// Writes header + rows; feature cells use shortest round-trip formatting so a
// reload reproduces the values bit for bit. The label column is written last
// under the name "label", holding class names.
void write_csv(const LabeledDataset& ds, std::ostream& out);

}  // namespace wsel
