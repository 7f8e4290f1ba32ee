#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "halpart/core.hpp"
#include "halpart/partition.hpp"

namespace halpart {

/// The alldifferent kernel F* of a mapping: for each x, the values s(x) over
/// all alldifferent selections s of F.
///
/// Either every kernel image is nonempty or every one is empty; the latter
/// exactly when F has no alldifferent selection, in which case `violation`
/// carries a Hall-condition witness when one was computed.
struct KernelMapping {
    FiniteMapping base;
    std::vector<YSubset> kernel_images;
    bool empty = false;
    std::optional<HallViolation> violation;

    /// The kernel as a mapping over the same X and Y as `base`.
    [[nodiscard]] FiniteMapping as_mapping() const { return FiniteMapping(base.x_labels(), base.y_labels(), kernel_images); }
};

/// An injective choice x |-> s(x) ∈ F(x). `values[x]` is a position in Y.
struct Selection {
    std::vector<std::size_t> values;
    friend bool operator==(const Selection&, const Selection&) = default;
};

/// Checks totality, membership s(x) ∈ F(x), and injectivity.
[[nodiscard]] bool is_valid_selection(const FiniteMapping& f, const Selection& s);

/// F^p for a Hall partition P: on block W_i, x |-> F(x) \ F(W_1 ∪ ... ∪ W_{i-1}).
/// Throws ContractError unless verify_partition(F, P).
[[nodiscard]] KernelMapping kernel_from_partition(const FiniteMapping& f, const HallPartition& p);

/// F*, computed as F^p of the Hall partition found by the calculation method.
[[nodiscard]] KernelMapping alldifferent_kernel(const FiniteMapping& f);

/// All images nonempty and F* = F.
[[nodiscard]] bool is_alldifferent(const FiniteMapping& f);

/// F has exactly one alldifferent selection, i.e. the Hall partition has
/// ♯F(X) blocks.
[[nodiscard]] bool has_unique_selection(const FiniteMapping& f);

/// Chooses the point x_i within a block and the value y_i for it during
/// selection extraction. Both must return members of the set they are given.
struct SelectionPicker {
    std::function<std::size_t(XSubset block)> pick_x = [](XSubset block) { return block.front(); };
    std::function<std::size_t(std::size_t x, YSubset candidates)> pick_y =
        [](std::size_t, YSubset candidates) { return candidates.front(); };
};

/// One alldifferent selection of F, or the Hall violation if none exists.
///
/// Each block of the Hall partition is handled in order: pick x in the block
/// and y in its kernel image, then rerun the method on the block with x and y
/// removed, recursing into the resulting partition.
[[nodiscard]] std::variant<Selection, HallViolation> extract_selection(const FiniteMapping& f,
                                                                       const SelectionPicker& picker = {});

/// F_{{x},{y}}: F without x, and with y removed from every image. Throws
/// DomainError if y ∉ F(x) or X = {x}.
[[nodiscard]] FiniteMapping punctured_mapping(const FiniteMapping& f, std::size_t x, std::size_t y);

} // namespace halpart
