#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halpart/errors.hpp"
#include "halpart/subset.hpp"

namespace halpart {

/// Cap on ♯X for operations that enumerate every subset of the domain.
inline constexpr std::size_t subset_enumeration_cap = 24;

/// A set-valued mapping F: X -> 2^Y between finite, labelled ground sets.
///
/// Labels are opaque strings; their order is the order the mapping was built
/// with, and every enumeration in the library follows it. X must be
/// nonempty. Y may be empty, which happens for residual mappings that have
/// used up every value.
class FiniteMapping {
public:
    /// Validates and builds a mapping. `images[i]` is the image of `x_labels[i]`.
    /// Throws DomainError on empty X, duplicate labels, or an image outside Y,
    /// and SizeLimitError when a ground set exceeds max_ground_set_size.
    FiniteMapping(std::vector<std::string> x_labels, std::vector<std::string> y_labels,
                  std::vector<YSubset> images);

    /// Builds a mapping from label lists. Y is taken in order of first
    /// appearance across the images.
    static FiniteMapping from_labels(const std::vector<std::pair<std::string, std::vector<std::string>>>& rows);

    [[nodiscard]] std::size_t x_size() const { return x_labels_.size(); }
    [[nodiscard]] std::size_t y_size() const { return y_labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& x_labels() const { return x_labels_; }
    [[nodiscard]] const std::vector<std::string>& y_labels() const { return y_labels_; }
    [[nodiscard]] const std::vector<YSubset>& images() const { return images_; }
    [[nodiscard]] YSubset image(std::size_t x) const { return images_.at(x); }

    [[nodiscard]] XSubset all_x() const { return XSubset::first_n(x_size()); }
    [[nodiscard]] YSubset all_y() const { return YSubset::first_n(y_size()); }

    [[nodiscard]] std::optional<std::size_t> find_x(std::string_view label) const;
    [[nodiscard]] std::optional<std::size_t> find_y(std::string_view label) const;
    /// Like find_x / find_y but throws DomainError for unknown labels.
    [[nodiscard]] std::size_t x_index(std::string_view label) const;
    [[nodiscard]] std::size_t y_index(std::string_view label) const;

    [[nodiscard]] XSubset x_subset(std::span<const std::string> labels) const;
    [[nodiscard]] YSubset y_subset(std::span<const std::string> labels) const;
    [[nodiscard]] std::vector<std::string> labels_of(XSubset w) const;
    [[nodiscard]] std::vector<std::string> labels_of(YSubset z) const;

    /// True when both mappings have the same X and Y (in order) and equal images.
    friend bool operator==(const FiniteMapping&, const FiniteMapping&) = default;

private:
    std::vector<std::string> x_labels_;
    std::vector<std::string> y_labels_;
    std::vector<YSubset> images_;
};

/// Throws DomainError unless every member of `w` is a position of X.
void require_x_subset(const FiniteMapping& f, XSubset w);
void require_y_subset(const FiniteMapping& f, YSubset z);

/// F(W), the union of the images of the members of W. F(∅) = ∅.
[[nodiscard]] YSubset image_of_set(const FiniteMapping& f, XSubset w);

/// The complement mapping F_{W,Z}: X\W -> 2^(Y\Z), x |-> F(x)\Z.
///
/// Element labels and their relative order carry over. Throws DomainError
/// when W = X, since the result would have an empty domain.
[[nodiscard]] FiniteMapping complement(const FiniteMapping& f, XSubset w, YSubset z);

/// F_W = F_{W, F(W)}. residual(F, ∅) = F.
[[nodiscard]] FiniteMapping residual(const FiniteMapping& f, XSubset w);

/// W is nonempty and ♯F(W) = ♯W.
[[nodiscard]] bool is_critical(const FiniteMapping& f, XSubset w);

/// W is nonempty and has no proper critical subset. Checks every proper
/// subset, so ♯W is capped at subset_enumeration_cap.
[[nodiscard]] bool is_non_reducible(const FiniteMapping& f, XSubset w);

/// min over x of ♯F(x). No critical set is smaller than this.
[[nodiscard]] std::size_t min_image_size(const FiniteMapping& f);

/// F restricted to W, with Y unchanged. Throws DomainError on W = ∅.
[[nodiscard]] FiniteMapping restrict_to(const FiniteMapping& f, XSubset w);

} // namespace halpart
