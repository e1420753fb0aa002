#pragma once

#include <string>
#include <vector>

namespace lefschetz::cli {

struct PaperCheck {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Every published value the library can recompute, in a fixed order.
std::vector<PaperCheck> paper_checks();

}  // namespace lefschetz::cli
