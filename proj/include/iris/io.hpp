#pragma once

// JSON encodings for instances and selections (0-based indices):
//   instance:  {"sets": [{"p": 2, "items": [[lo, hi], ...]}, ...],
//               "forbidden": [[i, k, j, l], ...]}
//   selection: {"chosen": [[j, ...], ...]}

#include <stdexcept>
#include <string>

#include "iris/model.hpp"

namespace iris {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

Selection parse_selection(const Instance& instance, const std::string& text);
std::string serialize_selection(const Instance& instance, const Selection& x);

// Per-set cost arrays, e.g. [[3, 1], [2]].
std::string serialize_scenario(const Instance& instance, const Scenario& scenario);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace iris
