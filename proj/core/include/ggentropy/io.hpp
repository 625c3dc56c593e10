#pragma once

#include <string>
#include <vector>

#include "ggentropy/sample.hpp"

namespace ggentropy {

// Shortest round-trip decimal form of x (locale-independent).
std::string format_double(double x);

// Coordinate CSV: one row per observation, comma-separated columns, with
// `comments` emitted first as '#'-prefixed header lines.
void write_sample_csv(const Sample& sample, const std::string& path,
                      const std::vector<std::string>& comments = {});

// Reads a coordinate CSV, skipping blank and '#' lines. All rows must
// have the same column count.
Sample read_sample_csv(const std::string& path);

}  // namespace ggentropy
