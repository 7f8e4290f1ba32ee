#include "halpart/partition.hpp"

#include <algorithm>
#include <string>

namespace halpart {

std::string_view to_string(ExitKind kind) {
    switch (kind) {
    case ExitKind::LastBlockCritical:
        return "LastBlockCritical";
    case ExitKind::LastBlockNonCritical:
        return "LastBlockNonCritical";
    }
    return "?";
}

namespace detail {

PartitionResult hall_partition(const MappingView& view, PartitionOptions options) {
    HallPartition out;
    XSubset taken;
    YSubset removed = view.removed;

    while (taken != view.domain) {
        const XSubset remaining = view.domain - taken;
        const std::size_t n = remaining.size();
        if (n > subset_enumeration_cap)
            throw SizeLimitError("calculation method is limited to " + std::to_string(subset_enumeration_cap) +
                                 " remaining elements, got " + std::to_string(n));

        const MappingView current{view.mapping, remaining, removed};
        std::size_t first_size = 1;
        if (options.prune_by_min_image) {
            std::size_t smallest = n + 1;
            for (auto p : remaining.positions())
                smallest = std::min(smallest, current.image(p).size());
            first_size = std::max<std::size_t>(first_size, smallest);
        }

        std::optional<XSubset> block;
        std::optional<XSubset> deficient;
        for (std::size_t k = first_size; k <= n && !block && !deficient; ++k) {
            for_each_subset_of_size(remaining, k, [&](XSubset w) {
                const auto img = current.image(w).size();
                if (img < k) {
                    deficient = w;
                    return false;
                }
                if (img == k) {
                    block = w;
                    return false;
                }
                return true;
            });
        }

        if (deficient)
            return HallViolation{*deficient | taken};

        if (!block) {
            // No critical set remains: everything left is the final block.
            out.blocks.push_back(remaining);
            out.residual_images.push_back(current.image(remaining));
            out.exit_kind = ExitKind::LastBlockNonCritical;
            return out;
        }

        const YSubset r = current.image(*block);
        out.blocks.push_back(*block);
        out.residual_images.push_back(r);
        taken |= *block;
        removed |= r;
    }
    out.exit_kind = ExitKind::LastBlockCritical;
    return out;
}

} // namespace detail

PartitionResult compute_hall_partition(const FiniteMapping& f, PartitionOptions options) {
    return detail::hall_partition(detail::MappingView{&f, f.all_x(), YSubset{}}, options);
}

std::optional<HallViolation> check_hall(const FiniteMapping& f) {
    auto result = compute_hall_partition(f);
    if (auto* v = std::get_if<HallViolation>(&result))
        return *v;
    return std::nullopt;
}

bool verify_partition(const FiniteMapping& f, const HallPartition& p) {
    if (p.blocks.empty() || p.blocks.size() != p.residual_images.size())
        return false;

    XSubset covered;
    for (auto w : p.blocks) {
        if (w.empty() || !w.is_subset_of(f.all_x()) || !w.disjoint_from(covered))
            return false;
        covered |= w;
    }
    if (covered != f.all_x())
        return false;

    XSubset prefix;
    bool last_critical = false;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const XSubset w = p.blocks[i];
        const bool last = i + 1 == p.blocks.size();

        // Work in the residual mapping F_prefix, translating by label.
        const FiniteMapping g = prefix.empty() ? f : residual(f, prefix);
        const auto labels = f.labels_of(w);
        const XSubset wg = g.x_subset(labels);

        for (auto x : wg.positions())
            if (g.image(x).empty())
                return false;
        if (!is_non_reducible(g, wg))
            return false;
        const bool critical = is_critical(g, wg);
        if (!last && !critical)
            return false;
        if (last)
            last_critical = critical;

        const auto recorded = f.labels_of(p.residual_images[i]);
        auto actual = g.labels_of(image_of_set(g, wg));
        if (f.y_subset(recorded) != f.y_subset(actual))
            return false;

        prefix |= w;
    }
    const auto expected = last_critical ? ExitKind::LastBlockCritical : ExitKind::LastBlockNonCritical;
    return p.exit_kind == expected;
}

bool partitions_equal_up_to_renumbering(const HallPartition& a, const HallPartition& b) {
    if (a.blocks.size() != b.blocks.size() || a.residual_images.size() != b.residual_images.size())
        return false;
    std::vector<bool> used(b.blocks.size(), false);
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        bool matched = false;
        for (std::size_t j = 0; j < b.blocks.size() && !matched; ++j) {
            if (!used[j] && a.blocks[i] == b.blocks[j]) {
                if (a.residual_images[i] != b.residual_images[j])
                    return false;
                used[j] = matched = true;
            }
        }
        if (!matched)
            return false;
    }
    return true;
}

} // namespace halpart
