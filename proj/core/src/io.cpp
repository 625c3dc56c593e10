#include "ggentropy/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ggentropy/errors.hpp"

namespace ggentropy {

std::string format_double(double x) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  if (ec != std::errc()) throw ParseError("failed to format a double");
  return std::string(buffer, ptr);
}

void write_sample_csv(const Sample& sample, const std::string& path,
                      const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  for (const std::string& comment : comments) {
    out << "# " << comment << "\n";
  }
  for (std::size_t i = 0; i < sample.n(); ++i) {
    const auto row = sample.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ',';
      out << format_double(row[j]);
    }
    out << '\n';
  }
  if (!out) throw ParseError("failed writing '" + path + "'");
}

namespace {

double parse_field(const std::string& field, std::size_t line_number) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end != begin && (*(end - 1) == ' ' || *(end - 1) == '\t' ||
                          *(end - 1) == '\r')) {
    --end;
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_number) +
                     ": cannot parse '" + field + "' as a number");
  }
  return value;
}

}  // namespace

Sample read_sample_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");

  std::vector<double> coords;
  std::size_t dim = 0;
  std::size_t line_number = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#' || line == "\r") continue;

    std::size_t columns = 0;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) comma = line.size();
      coords.push_back(
          parse_field(line.substr(start, comma - start), line_number));
      ++columns;
      start = comma + 1;
      if (comma == line.size()) break;
    }
    if (dim == 0) {
      dim = columns;
    } else if (columns != dim) {
      throw ParseError("line " + std::to_string(line_number) + ": expected " +
                       std::to_string(dim) + " columns, found " +
                       std::to_string(columns));
    }
  }
  if (coords.empty()) throw ParseError("'" + path + "' contains no data rows");
  return Sample(std::move(coords), dim);
}

}  // namespace ggentropy
