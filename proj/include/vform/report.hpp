#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vform/exact.hpp"

namespace vf::report {

struct LevelEntry {
  std::string level;  // rational, "p/q" or "p"
  std::size_t dim = 0;
  std::string det;
  std::string verdict;  // PositiveDefinite | PositiveSemidefinite | Indefinite
  std::size_t radical_dim = 0;
  std::vector<std::string> witness;  // empty unless Indefinite
  std::string witness_value;         // empty unless Indefinite
  std::vector<std::string> basis;    // labels of the basis, only for the refuting level

  bool operator==(const LevelEntry&) const = default;
};

struct IdentityEntry {
  std::string name;
  std::string anchor;  // the identity being checked, as a formula
  std::string window;
  std::size_t pairs = 0;
  std::size_t failures = 0;
  bool pass = true;

  bool operator==(const IdentityEntry&) const = default;
};

// Overall verdicts: Consistent, RefutedAt(n), PredictUnitary, PredictNonUnitary, Pass, Fail
struct Report {
  std::string command;
  std::map<std::string, std::string> params;
  std::vector<LevelEntry> levels;
  std::vector<IdentityEntry> identities;
  std::map<std::string, std::string> outputs;  // command-specific scalars
  std::string verdict;
  std::int64_t wall_time_ms = 0;

  bool operator==(const Report&) const = default;
};

LevelEntry level_entry(const LevelRecord& r);

std::string to_json(const Report& r);  // keys sorted, indented
Report from_json(const std::string& s);
std::string to_csv(const Report& r);
std::string to_text(const Report& r);

}  // namespace vf::report
