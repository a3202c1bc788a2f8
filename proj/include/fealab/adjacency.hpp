#pragma once

#include <span>
#include <vector>

namespace fealab {

/// Compressed adjacency (offsets + flat item array), the layout shared by
/// node->element maps, element adjacency and chunk graphs.
struct AdjacencyList {
    std::vector<int> offsets; // size() == n + 1
    std::vector<int> items;

    int size() const { return static_cast<int>(offsets.empty() ? 0 : offsets.size() - 1); }

    std::span<const int> operator[](int i) const {
        return {items.data() + offsets[i], items.data() + offsets[i + 1]};
    }

    int degree(int i) const { return offsets[i + 1] - offsets[i]; }
};

/// Build a compressed list from per-index buckets.
AdjacencyList compress(const std::vector<std::vector<int>>& buckets);

} // namespace fealab
