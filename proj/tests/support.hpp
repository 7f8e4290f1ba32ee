#pragma once

// Shared builders and generators for the test suites.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "halpart/core.hpp"
#include "halpart/partition.hpp"

namespace halpart::test {

/// Mapping over integer labels; Y is the sorted union of the images unless
/// `y_size` declares Y = {1..y_size}.
inline FiniteMapping mapping(const std::vector<std::pair<int, std::vector<int>>>& rows, int y_size = 0) {
    std::set<int> ys;
    for (int y = 1; y <= y_size; ++y)
        ys.insert(y);
    for (const auto& row : rows)
        ys.insert(row.second.begin(), row.second.end());
    std::vector<std::string> y_labels;
    for (int y : ys)
        y_labels.push_back(std::to_string(y));
    std::vector<std::string> x_labels;
    std::vector<YSubset> images;
    for (const auto& [x, image] : rows) {
        x_labels.push_back(std::to_string(x));
        YSubset img;
        for (int y : image)
            img.insert(static_cast<std::size_t>(std::distance(ys.begin(), ys.find(y))));
        images.push_back(img);
    }
    return FiniteMapping(std::move(x_labels), std::move(y_labels), std::move(images));
}

/// F(i) = {i} for i = 1..n.
inline FiniteMapping permutation_mapping(int n) {
    std::vector<std::pair<int, std::vector<int>>> rows;
    for (int i = 1; i <= n; ++i)
        rows.push_back({i, {i}});
    return mapping(rows);
}

/// The example mapping {1:{1,2}, 2:{1,2}, 3:{1,2,3}} used throughout.
inline FiniteMapping m1() { return mapping({{1, {1, 2}}, {2, {1, 2}}, {3, {1, 2, 3}}}); }

inline XSubset xs(const FiniteMapping& f, std::initializer_list<int> labels) {
    XSubset w;
    for (int l : labels)
        w.insert(f.x_index(std::to_string(l)));
    return w;
}

inline YSubset ys(const FiniteMapping& f, std::initializer_list<int> labels) {
    YSubset z;
    for (int l : labels)
        z.insert(f.y_index(std::to_string(l)));
    return z;
}

inline FiniteMapping random_mapping(std::mt19937_64& rng, std::size_t nx, std::size_t ny, double density) {
    std::bernoulli_distribution member(density);
    std::vector<std::string> x_labels;
    std::vector<std::string> y_labels;
    std::vector<YSubset> images(nx);
    for (std::size_t x = 0; x < nx; ++x)
        x_labels.push_back("x" + std::to_string(x + 1));
    for (std::size_t y = 0; y < ny; ++y)
        y_labels.push_back("y" + std::to_string(y + 1));
    for (auto& img : images)
        for (std::size_t y = 0; y < ny; ++y)
            if (member(rng))
                img.insert(y);
    return FiniteMapping(std::move(x_labels), std::move(y_labels), std::move(images));
}

/// Random sizes in [1, max_x] x [1, max_y] with density drawn uniformly.
inline FiniteMapping random_instance(std::mt19937_64& rng, std::size_t max_x, std::size_t max_y) {
    std::uniform_int_distribution<std::size_t> nx(1, max_x);
    std::uniform_int_distribution<std::size_t> ny(1, max_y);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    const auto a = nx(rng);
    const auto b = ny(rng);
    return random_mapping(rng, a, b, density(rng));
}

/// All 512 mappings X = Y = {1, 2, 3}.
inline std::vector<FiniteMapping> universe3() {
    std::vector<FiniteMapping> out;
    for (unsigned code = 0; code < 512; ++code) {
        std::vector<YSubset> images;
        for (unsigned x = 0; x < 3; ++x)
            images.emplace_back((code >> (3 * x)) & 7U);
        out.emplace_back(std::vector<std::string>{"1", "2", "3"}, std::vector<std::string>{"1", "2", "3"}, images);
    }
    return out;
}

/// The same mapping with X and Y enumerated in the given orders:
/// new position i holds old element order[i].
inline FiniteMapping reordered(const FiniteMapping& f, const std::vector<std::size_t>& x_order,
                               const std::vector<std::size_t>& y_order) {
    std::vector<std::string> x_labels;
    std::vector<std::string> y_labels;
    std::vector<std::size_t> y_new(y_order.size());
    for (std::size_t i = 0; i < y_order.size(); ++i) {
        y_labels.push_back(f.y_labels()[y_order[i]]);
        y_new[y_order[i]] = i;
    }
    std::vector<YSubset> images;
    for (auto old : x_order) {
        x_labels.push_back(f.x_labels()[old]);
        YSubset img;
        for (auto y : f.image(old).positions())
            img.insert(y_new[y]);
        images.push_back(img);
    }
    return FiniteMapping(std::move(x_labels), std::move(y_labels), std::move(images));
}

inline FiniteMapping shuffled(const FiniteMapping& f, std::mt19937_64& rng) {
    std::vector<std::size_t> xo(f.x_size());
    std::vector<std::size_t> yo(f.y_size());
    for (std::size_t i = 0; i < xo.size(); ++i)
        xo[i] = i;
    for (std::size_t i = 0; i < yo.size(); ++i)
        yo[i] = i;
    std::shuffle(xo.begin(), xo.end(), rng);
    std::shuffle(yo.begin(), yo.end(), rng);
    return reordered(f, xo, yo);
}

using LabelFamily = std::set<std::pair<std::set<std::string>, std::set<std::string>>>;

/// Blocks paired with their residual images, as labels, ignoring order.
inline LabelFamily block_family(const FiniteMapping& f, const HallPartition& p) {
    LabelFamily out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto b = f.labels_of(p.blocks[i]);
        auto r = f.labels_of(p.residual_images[i]);
        out.emplace(std::set<std::string>(b.begin(), b.end()), std::set<std::string>(r.begin(), r.end()));
    }
    return out;
}

/// Rejection-samples a mapping that satisfies the Hall condition.
template <typename HallCheck>
FiniteMapping random_hall_instance(std::mt19937_64& rng, std::size_t max_x, std::size_t max_y, HallCheck&& ok) {
    for (;;) {
        auto f = random_instance(rng, max_x, max_y);
        if (ok(f))
            return f;
    }
}

} // namespace halpart::test
