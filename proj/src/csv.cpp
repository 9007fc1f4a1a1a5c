#include "wsel/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace wsel {

namespace {

// State-machine CSV reader: handles quoted fields, doubled quotes, commas and
// newlines inside quotes, CRLF line ends, and a missing final newline.
std::vector<std::vector<std::string>> parse_rows(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;  // distinguishes an empty line from one empty field
  char c;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    if (field_started || !row.empty()) {
      end_field();
      rows.push_back(std::move(row));
      row.clear();
    }
  };

  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        field_started = true;  // a comma implies a field on both sides
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        break;
      default:
        field += c;
        field_started = true;
        break;
    }
  }
  if (in_quotes) {
    throw std::runtime_error("unterminated quoted field at end of input");
  }
  end_row();
  return rows;
}

bool parse_cell(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

std::size_t resolve_label_column(const std::vector<std::string>& header,
                                 std::size_t n_cols, const CsvOptions& options) {
  if (options.has_header) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == options.label_column) return i;
    }
  }
  // Fall back to interpreting the option as a zero-based column index.
  int idx = -1;
  const char* last = options.label_column.data() + options.label_column.size();
  auto [ptr, ec] = std::from_chars(options.label_column.data(), last, idx);
  if (ec != std::errc() || ptr != last || idx < 0 ||
      static_cast<std::size_t>(idx) >= n_cols) {
    throw std::runtime_error("label column '" + options.label_column +
                             "' not found" +
                             (options.has_header ? " in header"
                                                 : "; expected a column index"));
  }
  return static_cast<std::size_t>(idx);
}

}  // namespace

LabeledDataset load_csv(std::istream& in, const CsvOptions& options) {
  const auto rows = parse_rows(in);
  if (rows.empty()) {
    throw std::runtime_error("input contains no rows");
  }
  std::size_t first_data = 0;
  std::vector<std::string> header;
  if (options.has_header) {
    header = rows[0];
    first_data = 1;
  }
  if (first_data >= rows.size()) {
    throw std::runtime_error("input contains a header but no data rows");
  }
  const std::size_t n_cols = rows[first_data].size();
  if (n_cols < 2) {
    throw std::runtime_error("need at least one feature column plus the label");
  }
  if (options.has_header && header.size() != n_cols) {
    throw std::runtime_error("header has " + std::to_string(header.size()) +
                             " columns but data rows have " +
                             std::to_string(n_cols));
  }
  const std::size_t label_col = resolve_label_column(header, n_cols, options);

  std::vector<std::string> feature_names;
  for (std::size_t c = 0; c < n_cols; ++c) {
    if (c == label_col) continue;
    feature_names.push_back(options.has_header
                                ? header[c]
                                : "f" + std::to_string(feature_names.size()));
  }

  const std::size_t n = rows.size() - first_data;
  const std::size_t d = n_cols - 1;
  Matrix values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  std::vector<std::string> raw_labels(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[first_data + r];
    if (row.size() != n_cols) {
      throw std::runtime_error("row " + std::to_string(r + 1) + " has " +
                               std::to_string(row.size()) + " columns, expected " +
                               std::to_string(n_cols));
    }
    std::size_t w = 0;
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (c == label_col) {
        raw_labels[r] = row[c];
        continue;
      }
      double value = 0.0;
      if (!parse_cell(row[c], value)) {
        throw std::runtime_error("row " + std::to_string(r + 1) + ", column '" +
                                 feature_names[w] + "': cannot parse '" + row[c] +
                                 "' as a finite number");
      }
      values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(w)) = value;
      ++w;
    }
  }
  return LabeledDataset::from_raw_labels(std::move(values), raw_labels,
                                         std::move(feature_names));
}

LabeledDataset load_csv_file(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  return load_csv(in, options);
}

namespace {

void write_field(std::ostream& out, const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) {
    throw std::runtime_error("failed to format a value");
  }
  return std::string(buf, ptr);
}

}  // namespace

void write_csv(const LabeledDataset& ds, std::ostream& out) {
  for (int j = 0; j < ds.n_features(); ++j) {
    const std::string name = ds.feature_names().empty()
                                 ? "f" + std::to_string(j)
                                 : ds.feature_names()[static_cast<std::size_t>(j)];
    write_field(out, name);
    out << ',';
  }
  out << "label\n";
  for (int i = 0; i < ds.n_samples(); ++i) {
    for (int j = 0; j < ds.n_features(); ++j) {
      out << format_double(ds.values()(i, j)) << ',';
    }
    write_field(out, ds.class_names()[static_cast<std::size_t>(ds.labels()[static_cast<std::size_t>(i)])]);
    out << '\n';
  }
}

}  // namespace wsel
