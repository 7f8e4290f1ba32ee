#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace halpart {

/// Largest ground set a mapping may declare. Subsets are single machine words.
inline constexpr std::size_t max_ground_set_size = 64;

/// A subset of a ground set, stored as a bitmask over element positions.
///
/// The tag keeps subsets of X and subsets of Y from being mixed up. Positions
/// are meaningful only relative to the mapping the subset was built for.
template <typename Tag>
class Subset {
public:
    using word_type = std::uint64_t;

    constexpr Subset() = default;
    constexpr explicit Subset(word_type bits) : bits_(bits) {}
    /// The subset with the given member positions.
    static constexpr Subset of(std::initializer_list<std::size_t> positions) {
        Subset out;
        for (auto p : positions)
            out.insert(p);
        return out;
    }

    static constexpr Subset first_n(std::size_t n) {
        return Subset{n >= 64 ? ~word_type{0} : ((word_type{1} << n) - 1)};
    }
    static constexpr Subset singleton(std::size_t p) { return Subset{word_type{1} << p}; }

    [[nodiscard]] constexpr word_type bits() const { return bits_; }
    [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr bool contains(std::size_t p) const { return p < 64 && ((bits_ >> p) & 1U) != 0; }
    [[nodiscard]] constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr bool is_proper_subset_of(Subset other) const {
        return is_subset_of(other) && bits_ != other.bits_;
    }
    [[nodiscard]] constexpr bool disjoint_from(Subset other) const { return (bits_ & other.bits_) == 0; }

    /// Position of the least member; undefined on the empty set.
    [[nodiscard]] constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    constexpr void insert(std::size_t p) { bits_ |= word_type{1} << p; }
    constexpr void erase(std::size_t p) { bits_ &= ~(word_type{1} << p); }

    /// Member positions in increasing order.
    [[nodiscard]] std::vector<std::size_t> positions() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (word_type rest = bits_; rest != 0; rest &= rest - 1)
            out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
        return out;
    }

    constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
    constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
    constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits_ | b.bits_}; }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits_ & b.bits_}; }
    /// Set difference.
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits_ & ~b.bits_}; }
    friend constexpr bool operator==(Subset, Subset) = default;

private:
    word_type bits_ = 0;
};

struct XTag;
struct YTag;

/// A subset W of the domain X.
using XSubset = Subset<XTag>;
/// A subset Z of the codomain Y.
using YSubset = Subset<YTag>;

/// Calls `visit(W)` for every `k`-element subset W of `universe`, in
/// lexicographic order of member positions. Stops early when `visit` returns
/// false; returns false in that case.
template <typename Tag, typename Visit>
bool for_each_subset_of_size(Subset<Tag> universe, std::size_t k, Visit&& visit) {
    const auto members = universe.positions();
    const std::size_t n = members.size();
    if (k > n)
        return true;
    if (k == 0)
        return visit(Subset<Tag>{});

    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    for (;;) {
        Subset<Tag> w;
        for (auto i : pick)
            w.insert(members[i]);
        if (!visit(w))
            return false;

        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return true;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

} // namespace halpart
