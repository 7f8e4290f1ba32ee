#include "halpart/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace halpart {

namespace {

void require_distinct(const std::vector<std::string>& labels, const char* which) {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw DomainError(std::string("duplicate label '") + l + "' in " + which);
}

std::optional<std::size_t> find_label(const std::vector<std::string>& labels, std::string_view label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
}

// Renumbers the members of `s` that survive in `kept` to their rank among `kept`.
template <typename Tag>
Subset<Tag> compress(Subset<Tag> s, Subset<Tag> kept) {
    Subset<Tag> out;
    std::size_t rank = 0;
    for (auto p : kept.positions()) {
        if (s.contains(p))
            out.insert(rank);
        ++rank;
    }
    return out;
}

} // namespace

FiniteMapping::FiniteMapping(std::vector<std::string> x_labels, std::vector<std::string> y_labels,
                             std::vector<YSubset> images)
    : x_labels_(std::move(x_labels)), y_labels_(std::move(y_labels)), images_(std::move(images)) {
    if (x_labels_.empty())
        throw DomainError("mapping domain X must be nonempty");
    if (x_labels_.size() > max_ground_set_size || y_labels_.size() > max_ground_set_size)
        throw SizeLimitError("ground sets are limited to " + std::to_string(max_ground_set_size) + " elements");
    if (images_.size() != x_labels_.size())
        throw DomainError("expected one image per element of X");
    require_distinct(x_labels_, "X");
    require_distinct(y_labels_, "Y");
    const auto y = all_y();
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (!images_[i].is_subset_of(y))
            throw DomainError("image of '" + x_labels_[i] + "' is not a subset of Y");
}

FiniteMapping FiniteMapping::from_labels(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
    std::vector<std::string> xs;
    std::vector<std::string> ys;
    for (const auto& [x, image] : rows) {
        xs.push_back(x);
        for (const auto& y : image)
            if (!find_label(ys, y))
                ys.push_back(y);
    }
    if (ys.size() > max_ground_set_size)
        throw SizeLimitError("ground sets are limited to " + std::to_string(max_ground_set_size) + " elements");
    std::vector<YSubset> images;
    for (const auto& row : rows) {
        YSubset img;
        for (const auto& y : row.second)
            img.insert(*find_label(ys, y));
        images.push_back(img);
    }
    return FiniteMapping(std::move(xs), std::move(ys), std::move(images));
}

std::optional<std::size_t> FiniteMapping::find_x(std::string_view label) const { return find_label(x_labels_, label); }
std::optional<std::size_t> FiniteMapping::find_y(std::string_view label) const { return find_label(y_labels_, label); }

std::size_t FiniteMapping::x_index(std::string_view label) const {
    if (auto i = find_x(label))
        return *i;
    throw DomainError("'" + std::string(label) + "' is not an element of X");
}

std::size_t FiniteMapping::y_index(std::string_view label) const {
    if (auto i = find_y(label))
        return *i;
    throw DomainError("'" + std::string(label) + "' is not an element of Y");
}

XSubset FiniteMapping::x_subset(std::span<const std::string> labels) const {
    XSubset w;
    for (const auto& l : labels)
        w.insert(x_index(l));
    return w;
}

YSubset FiniteMapping::y_subset(std::span<const std::string> labels) const {
    YSubset z;
    for (const auto& l : labels)
        z.insert(y_index(l));
    return z;
}

std::vector<std::string> FiniteMapping::labels_of(XSubset w) const {
    require_x_subset(*this, w);
    std::vector<std::string> out;
    for (auto p : w.positions())
        out.push_back(x_labels_[p]);
    return out;
}

std::vector<std::string> FiniteMapping::labels_of(YSubset z) const {
    require_y_subset(*this, z);
    std::vector<std::string> out;
    for (auto p : z.positions())
        out.push_back(y_labels_[p]);
    return out;
}

void require_x_subset(const FiniteMapping& f, XSubset w) {
    if (!w.is_subset_of(f.all_x()))
        throw DomainError("subset contains positions outside X");
}

void require_y_subset(const FiniteMapping& f, YSubset z) {
    if (!z.is_subset_of(f.all_y()))
        throw DomainError("subset contains positions outside Y");
}

YSubset image_of_set(const FiniteMapping& f, XSubset w) {
    require_x_subset(f, w);
    YSubset out;
    for (auto p : w.positions())
        out |= f.image(p);
    return out;
}

FiniteMapping complement(const FiniteMapping& f, XSubset w, YSubset z) {
    require_x_subset(f, w);
    require_y_subset(f, z);
    const XSubset kept_x = f.all_x() - w;
    if (kept_x.empty())
        throw DomainError("complement of the whole domain is empty");
    const YSubset kept_y = f.all_y() - z;

    std::vector<std::string> xs;
    std::vector<YSubset> images;
    for (auto p : kept_x.positions()) {
        xs.push_back(f.x_labels()[p]);
        images.push_back(compress(f.image(p) - z, kept_y));
    }
    std::vector<std::string> ys;
    for (auto q : kept_y.positions())
        ys.push_back(f.y_labels()[q]);
    return FiniteMapping(std::move(xs), std::move(ys), std::move(images));
}

FiniteMapping residual(const FiniteMapping& f, XSubset w) { return complement(f, w, image_of_set(f, w)); }

bool is_critical(const FiniteMapping& f, XSubset w) {
    return !w.empty() && image_of_set(f, w).size() == w.size();
}

bool is_non_reducible(const FiniteMapping& f, XSubset w) {
    require_x_subset(f, w);
    if (w.empty())
        return false;
    if (w.size() > subset_enumeration_cap)
        throw SizeLimitError("non-reducibility check is limited to " + std::to_string(subset_enumeration_cap) +
                             " elements");
    // Walk all proper nonempty submasks of w.
    const auto full = w.bits();
    for (auto sub = (full - 1) & full; sub != 0; sub = (sub - 1) & full)
        if (is_critical(f, XSubset{sub}))
            return false;
    return true;
}

std::size_t min_image_size(const FiniteMapping& f) {
    std::size_t best = f.image(0).size();
    for (const auto& img : f.images())
        best = std::min(best, img.size());
    return best;
}

FiniteMapping restrict_to(const FiniteMapping& f, XSubset w) {
    require_x_subset(f, w);
    if (w.empty())
        throw DomainError("restriction to the empty set");
    std::vector<std::string> xs;
    std::vector<YSubset> images;
    for (auto p : w.positions()) {
        xs.push_back(f.x_labels()[p]);
        images.push_back(f.image(p));
    }
    return FiniteMapping(std::move(xs), f.y_labels(), std::move(images));
}

} // namespace halpart
