#pragma once

#include <string>

namespace sgc {

/// One formula-versus-oracle mismatch.
struct Discrepancy {
  std::string check;     // which identity was tested
  std::string inputs;    // rendered inputs, enough to reproduce
  std::string expected;  // oracle value
  std::string got;       // formula value
  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

}  // namespace sgc
