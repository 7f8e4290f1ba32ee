#include "halpart/kernel.hpp"

#include <string>

namespace halpart {

namespace {

std::vector<YSubset> partition_images(const FiniteMapping& f, const HallPartition& p) {
    std::vector<YSubset> images(f.x_size());
    YSubset earlier;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        for (auto x : p.blocks[i].positions())
            images[x] = f.image(x) - earlier;
        earlier |= image_of_set(f, p.blocks[i]);
    }
    return images;
}

KernelMapping empty_kernel(const FiniteMapping& f, std::optional<HallViolation> v) {
    return KernelMapping{f, std::vector<YSubset>(f.x_size()), true, v};
}

// Assigns every element of view.domain, writing into `values`.
void select_into(const detail::MappingView& view, const SelectionPicker& picker, std::vector<std::size_t>& values) {
    auto result = detail::hall_partition(view, PartitionOptions{});
    auto* p = std::get_if<HallPartition>(&result);
    if (p == nullptr)
        throw ContractError("block mapping lost the Hall condition during selection");

    YSubset removed = view.removed;
    for (auto block : p->blocks) {
        const detail::MappingView block_view{view.mapping, block, removed};
        const std::size_t x = picker.pick_x(block);
        if (!block.contains(x))
            throw ContractError("picker returned a point outside the block");
        const YSubset candidates = block_view.image(x);
        const std::size_t y = picker.pick_y(x, candidates);
        if (!candidates.contains(y))
            throw ContractError("picker returned a value outside the kernel image");
        values[x] = y;

        XSubset rest = block;
        rest.erase(x);
        if (!rest.empty())
            select_into(detail::MappingView{view.mapping, rest, removed | YSubset::singleton(y)}, picker, values);
        removed |= block_view.image(block);
    }
}

} // namespace

bool is_valid_selection(const FiniteMapping& f, const Selection& s) {
    if (s.values.size() != f.x_size())
        return false;
    YSubset used;
    for (std::size_t x = 0; x < s.values.size(); ++x) {
        const auto y = s.values[x];
        if (!f.image(x).contains(y) || used.contains(y))
            return false;
        used.insert(y);
    }
    return true;
}

KernelMapping kernel_from_partition(const FiniteMapping& f, const HallPartition& p) {
    if (!verify_partition(f, p))
        throw ContractError("kernel_from_partition requires a Hall partition of the mapping");
    return KernelMapping{f, partition_images(f, p), false, std::nullopt};
}

KernelMapping alldifferent_kernel(const FiniteMapping& f) {
    auto result = compute_hall_partition(f);
    if (auto* v = std::get_if<HallViolation>(&result))
        return empty_kernel(f, *v);
    return KernelMapping{f, partition_images(f, std::get<HallPartition>(result)), false, std::nullopt};
}

bool is_alldifferent(const FiniteMapping& f) {
    for (const auto& img : f.images())
        if (img.empty())
            return false;
    const auto k = alldifferent_kernel(f);
    return !k.empty && k.kernel_images == f.images();
}

bool has_unique_selection(const FiniteMapping& f) {
    auto result = compute_hall_partition(f);
    auto* p = std::get_if<HallPartition>(&result);
    return p != nullptr && p->size() == image_of_set(f, f.all_x()).size();
}

std::variant<Selection, HallViolation> extract_selection(const FiniteMapping& f, const SelectionPicker& picker) {
    if (auto v = check_hall(f))
        return *v;
    Selection s;
    s.values.assign(f.x_size(), 0);
    select_into(detail::MappingView{&f, f.all_x(), YSubset{}}, picker, s.values);
    return s;
}

FiniteMapping punctured_mapping(const FiniteMapping& f, std::size_t x, std::size_t y) {
    if (x >= f.x_size())
        throw DomainError("point is not an element of X");
    if (!f.image(x).contains(y))
        throw DomainError("value '" + (y < f.y_size() ? f.y_labels()[y] : std::to_string(y)) +
                          "' is not in the image of '" + f.x_labels()[x] + "'");
    return complement(f, XSubset::singleton(x), YSubset::singleton(y));
}

} // namespace halpart
