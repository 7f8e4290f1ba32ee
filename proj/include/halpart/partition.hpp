#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "halpart/core.hpp"

namespace halpart {

/// How the calculation method ended when it found a Hall partition.
enum class ExitKind {
    /// Every block, including the last, is critical in its residual mapping: ♯F(X) = ♯X.
    LastBlockCritical,
    /// The remaining elements contained no critical set and became the last block: ♯F(X) > ♯X.
    LastBlockNonCritical,
};

[[nodiscard]] std::string_view to_string(ExitKind kind);

/// Ordered blocks (W_1, ..., W_m) partitioning X, where each W_i is a
/// non-reducible set of the residual mapping F_{W_1 ∪ ... ∪ W_{i-1}} and all
/// blocks but possibly the last are critical there.
///
/// `residual_images[i]` is R_i, the image of block i under that residual
/// mapping. Positions refer to the mapping the partition was computed for.
struct HallPartition {
    std::vector<XSubset> blocks;
    std::vector<YSubset> residual_images;
    ExitKind exit_kind = ExitKind::LastBlockCritical;

    [[nodiscard]] std::size_t size() const { return blocks.size(); }
    friend bool operator==(const HallPartition&, const HallPartition&) = default;
};

/// A subset W of X with ♯F(W) < ♯W.
struct HallViolation {
    XSubset witness;
    friend bool operator==(const HallViolation&, const HallViolation&) = default;
};

using PartitionResult = std::variant<HallPartition, HallViolation>;

struct PartitionOptions {
    /// Skip candidate sizes below the smallest residual image size; no
    /// critical set can be that small.
    bool prune_by_min_image = true;
};

/// Runs the calculation method on F.
///
/// Candidate subsets of the remaining domain are tried in increasing size and,
/// within a size, in lexicographic order of positions. The first critical set
/// found becomes the next block and the scan restarts on the new residual
/// mapping. A deficient candidate W stops the method; the reported witness is
/// W joined with all blocks found so far, which is deficient for F itself.
///
/// Throws SizeLimitError when the remaining domain exceeds subset_enumeration_cap.
[[nodiscard]] PartitionResult compute_hall_partition(const FiniteMapping& f, PartitionOptions options = {});

/// nullopt when F satisfies the Hall condition.
[[nodiscard]] std::optional<HallViolation> check_hall(const FiniteMapping& f);

/// Checks P against the definition directly: the blocks partition X, and for
/// each block, in the residual mapping of the blocks before it, the block has
/// nonempty images, is non-reducible, is critical (except the last), and its
/// image equals the recorded residual image. The exit kind must match
/// whether the last block is critical.
[[nodiscard]] bool verify_partition(const FiniteMapping& f, const HallPartition& p);

/// Block families (and their residual images) agree up to reordering.
[[nodiscard]] bool partitions_equal_up_to_renumbering(const HallPartition& a, const HallPartition& b);

namespace detail {

/// F viewed on a subdomain with some values already taken away:
/// x |-> F(x) \ removed for x in domain.
struct MappingView {
    const FiniteMapping* mapping;
    XSubset domain;
    YSubset removed;

    [[nodiscard]] YSubset image(std::size_t x) const { return mapping->image(x) - removed; }
    [[nodiscard]] YSubset image(XSubset w) const {
        YSubset out;
        for (auto p : w.positions())
            out |= mapping->image(p);
        return out - removed;
    }
};

/// The calculation method on a view. Blocks and witnesses are subsets of
/// view.domain; the witness is relative to the view.
PartitionResult hall_partition(const MappingView& view, PartitionOptions options);

} // namespace detail

} // namespace halpart
