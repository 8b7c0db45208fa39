#include "explorer/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string_view>

#include "explorer/num_format.hpp"

namespace explorer {

namespace {

constexpr std::string_view kHeader = "bin,t_start,t_end,novel_cells,crossings";

template <typename Row>
std::string write_rows(int bin_width, std::size_t count, Row row_values) {
  std::string out(kHeader);
  out.push_back('\n');
  for (std::size_t bin = 0; bin < count; ++bin) {
    const std::int64_t t_start = static_cast<std::int64_t>(bin) * bin_width;
    out += format_int(static_cast<std::int64_t>(bin));
    out.push_back(',');
    out += format_int(t_start);
    out.push_back(',');
    out += format_int(t_start + bin_width);
    out.push_back(',');
    auto [novel, crossings] = row_values(bin);
    out += novel;
    out.push_back(',');
    out += crossings;
    out.push_back('\n');
  }
  return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::int64_t parse_int(std::string_view field, std::size_t row) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::BadRow, "row " + std::to_string(row) + ": '" +
                                       std::string(field) + "' is not an integer");
  }
  return value;
}

double parse_real(std::string_view field, std::size_t row) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::BadRow, "row " + std::to_string(row) + ": '" +
                                       std::string(field) + "' is not a finite number");
  }
  return value;
}

// Shared scaffold for the strict and real readers: header check, row
// structure, bin contiguity, bin-width consistency.
template <typename Value, typename ParseValue>
void read_rows(const std::string& text, ParseValue parse_value, int& bin_width,
               std::vector<Value>& novel, std::vector<Value>& crossings) {
  std::string_view rest(text);
  std::size_t line_end = rest.find('\n');
  std::string_view header = rest.substr(0, line_end);
  if (header != kHeader) {
    throw Error(ErrorKind::BadHeader,
                "expected header '" + std::string(kHeader) + "', got '" +
                    std::string(header) + "'");
  }
  rest = line_end == std::string_view::npos ? std::string_view{} : rest.substr(line_end + 1);

  bin_width = 0;
  std::size_t row = 0;
  while (!rest.empty()) {
    line_end = rest.find('\n');
    std::string_view line = rest.substr(0, line_end);
    rest = line_end == std::string_view::npos ? std::string_view{} : rest.substr(line_end + 1);
    if (line.empty() && rest.empty()) break;  // trailing newline

    auto fields = split(line, ',');
    if (fields.size() != 5) {
      throw Error(ErrorKind::BadRow,
                  "row " + std::to_string(row) + ": expected 5 fields, got " +
                      std::to_string(fields.size()));
    }
    const std::int64_t bin = parse_int(fields[0], row);
    const std::int64_t t_start = parse_int(fields[1], row);
    const std::int64_t t_end = parse_int(fields[2], row);
    const Value novel_value = parse_value(fields[3], row);
    const Value crossings_value = parse_value(fields[4], row);

    if (bin != static_cast<std::int64_t>(row)) {
      throw Error(ErrorKind::BadRow, "row " + std::to_string(row) +
                                         ": bin index " + std::to_string(bin) +
                                         " out of order or gapped");
    }
    const std::int64_t width = t_end - t_start;
    if (width < 1) {
      throw Error(ErrorKind::BadRow,
                  "row " + std::to_string(row) + ": non-positive bin width");
    }
    if (row == 0) {
      bin_width = static_cast<int>(width);
    } else if (width != bin_width) {
      throw Error(ErrorKind::InconsistentBinWidth,
                  "row " + std::to_string(row) + ": bin width " + std::to_string(width) +
                      " != " + std::to_string(bin_width));
    }
    if (t_start != static_cast<std::int64_t>(row) * bin_width) {
      throw Error(ErrorKind::BadRow,
                  "row " + std::to_string(row) + ": t_start " + std::to_string(t_start) +
                      " does not match bin index");
    }
    if (novel_value < 0 || crossings_value < 0 || novel_value > crossings_value) {
      throw Error(ErrorKind::BadRow,
                  "row " + std::to_string(row) +
                      " violates 0 <= novel_cells <= crossings");
    }
    novel.push_back(novel_value);
    crossings.push_back(crossings_value);
    ++row;
  }
}

}  // namespace

std::string write_csv(const ExplorationCurve& curve) {
  return write_rows(curve.bin_width, curve.novel.size(), [&](std::size_t bin) {
    return std::pair<std::string, std::string>{format_int(curve.novel[bin]),
                                               format_int(curve.crossings[bin])};
  });
}

std::string write_csv(const MeanCurve& curve) {
  return write_rows(curve.bin_width, curve.novel.size(), [&](std::size_t bin) {
    return std::pair<std::string, std::string>{format_double(curve.novel[bin]),
                                               format_double(curve.crossings[bin])};
  });
}

ExplorationCurve read_csv(const std::string& text) {
  ExplorationCurve curve;
  read_rows<std::int64_t>(text, parse_int, curve.bin_width, curve.novel, curve.crossings);
  if (curve.bin_width == 0) curve.bin_width = 1;  // empty curve: width unknowable
  validate_curve(curve);
  return curve;
}

RealCurve read_csv_real(const std::string& text) {
  RealCurve curve;
  read_rows<double>(text, parse_real, curve.bin_width, curve.novel, curve.crossings);
  if (curve.bin_width == 0) curve.bin_width = 1;
  return curve;
}

}  // namespace explorer
