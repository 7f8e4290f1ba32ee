#include "halpart/oracle.hpp"

#include <string>

namespace halpart::oracle {

namespace {

void require_cap(const FiniteMapping& f, std::size_t cap, const char* what) {
    if (f.x_size() > cap)
        throw SizeLimitError(std::string(what) + " is limited to " + std::to_string(cap) + " elements, got " +
                             std::to_string(f.x_size()));
}

void assign(const FiniteMapping& f, std::size_t x, std::vector<bool>& used, std::vector<std::size_t>& current,
            std::vector<Selection>& out) {
    if (x == f.x_size()) {
        out.push_back(Selection{current});
        return;
    }
    for (std::size_t y = 0; y < f.y_size(); ++y) {
        if (!f.image(x).contains(y) || used[y])
            continue;
        used[y] = true;
        current[x] = y;
        assign(f, x + 1, used, current, out);
        used[y] = false;
    }
}

template <typename Visit>
void scan_subsets(const FiniteMapping& f, Visit&& visit) {
    const auto all = f.all_x();
    for (std::size_t k = 1; k <= f.x_size(); ++k)
        if (!for_each_subset_of_size(all, k, visit))
            return;
}

} // namespace

std::vector<Selection> enumerate_selections(const FiniteMapping& f) {
    require_cap(f, selection_cap, "selection enumeration");
    std::vector<Selection> out;
    std::vector<bool> used(f.y_size(), false);
    std::vector<std::size_t> current(f.x_size(), 0);
    assign(f, 0, used, current, out);
    return out;
}

KernelMapping oracle_kernel(const FiniteMapping& f) {
    const auto selections = enumerate_selections(f);
    KernelMapping k{f, std::vector<YSubset>(f.x_size()), selections.empty(), std::nullopt};
    for (const auto& s : selections)
        for (std::size_t x = 0; x < f.x_size(); ++x)
            k.kernel_images[x].insert(s.values[x]);
    return k;
}

std::optional<HallViolation> oracle_hall_check(const FiniteMapping& f) {
    require_cap(f, subset_scan_cap, "Hall condition scan");
    std::optional<HallViolation> found;
    scan_subsets(f, [&](XSubset w) {
        if (image_of_set(f, w).size() < w.size()) {
            found = HallViolation{w};
            return false;
        }
        return true;
    });
    return found;
}

std::vector<XSubset> critical_sets(const FiniteMapping& f) {
    require_cap(f, subset_scan_cap, "critical set scan");
    std::vector<XSubset> out;
    scan_subsets(f, [&](XSubset w) {
        if (is_critical(f, w))
            out.push_back(w);
        return true;
    });
    return out;
}

} // namespace halpart::oracle
