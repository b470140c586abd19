#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frobsys::cli {

struct PropertyOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;  // first few failing instances
};

/// Names accepted by run_property.
const std::vector<std::string>& property_names();

/// Runs `cases` seeded random instances of a named property.
PropertyOutcome run_property(const std::string& name, std::size_t cases, std::uint64_t seed);

}  // namespace frobsys::cli
