#pragma once

// Closed-form invariants checked at a given q, used by `psp4 selftest`.

#include <string>
#include <vector>

#include "psp4/sympl.hpp"

namespace psp4::selftest {

struct Result {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Partition identity, class table against counts, class counts per family,
/// divisibility of counts, prime graph shape and end-to-end recognition.
std::vector<Result> run(const sympl::FieldSize& q);

}  // namespace psp4::selftest
