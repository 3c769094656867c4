#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsg/oversemigroups.hpp"

namespace nsg::repro {

struct Row {
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

// The reproduction harness: recomputes the headline family results
// (prime-square instances, the skn lower-bound instances, the Frobenius
// Frobenius pinning of components, the half-line witnesses, and the
// two-generator Frobenius formula). Deterministic apart from elapsed_ms.
std::vector<Row> run_rows(std::uint64_t cap = kDefaultEnumerationCap);

} // namespace nsg::repro
