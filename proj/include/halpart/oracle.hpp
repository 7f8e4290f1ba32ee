#pragma once

// Brute-force reference implementations. Deliberately naive: nothing here
// uses the calculation method, partitions, or residual mappings.

#include <cstddef>
#include <optional>
#include <vector>

#include "halpart/core.hpp"
#include "halpart/kernel.hpp"
#include "halpart/partition.hpp"

namespace halpart::oracle {

inline constexpr std::size_t selection_cap = 12;
inline constexpr std::size_t subset_scan_cap = 20;

/// Every alldifferent selection, by depth-first assignment over X in
/// position order, trying values in position order.
[[nodiscard]] std::vector<Selection> enumerate_selections(const FiniteMapping& f);

/// F*(x) = { s(x) : s an alldifferent selection }.
[[nodiscard]] KernelMapping oracle_kernel(const FiniteMapping& f);

/// Scans all nonempty subsets by increasing size, then lexicographically, and
/// returns the first with ♯F(W) < ♯W.
[[nodiscard]] std::optional<HallViolation> oracle_hall_check(const FiniteMapping& f);

/// Every critical subset of X, in the same scan order.
[[nodiscard]] std::vector<XSubset> critical_sets(const FiniteMapping& f);

} // namespace halpart::oracle
