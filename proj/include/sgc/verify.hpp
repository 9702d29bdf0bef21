#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sgc/discrepancy.hpp"

namespace sgc {

struct VerifyOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// Both factors get between 1 and max_n nodes.
  std::size_t max_n = 5;
};

/// How often one identity was exercised and how often it failed.
struct CheckTally {
  std::string check;
  std::size_t runs = 0;
  std::size_t failures = 0;
};

/// A printed formula that the oracle contradicts, with the number of trials
/// where the printed and corrected forms gave different answers. These are
/// expected and do not make the run fail.
struct KnownDeviation {
  std::string id;
  std::string description;
  std::size_t occurrences = 0;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckTally> checks;
  std::vector<Discrepancy> discrepancies;
  std::vector<KnownDeviation> known_deviations;
  bool ok() const noexcept { return discrepancies.empty(); }
};

/// Random trials over every identity that has an independent oracle:
/// block matrices, edge and triad census, balance, coronals, assembled
/// characteristic polynomials, closed-form spectra, cospectral pairs and
/// trace identities. Trial t draws from its own engine seeded from
/// (seed, t), so results do not depend on evaluation order.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace sgc
