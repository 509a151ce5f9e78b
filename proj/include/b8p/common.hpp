#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace b8p {

// Thrown when an input exceeds a configured size bound (group order,
// closure size, oracle allowlist).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Hard cap on the order of an abelian group we materialize tables for.
inline constexpr int kMaxGroupOrder = 10000;

// Worker count for the parallel enumeration loops. Reads BRACES8P_THREADS,
// clamped to [1, 64]; unset or unparsable means 1. Results never depend on
// this value, only wall time does.
int thread_count();

}  // namespace b8p
