#pragma once

#include <cstdint>
#include <vector>

#include "stabreg/weighted_part.hpp"

namespace stabreg {

// Mixed-radix indexing of a product of finite grounds. Tuples are flat
// row-major indices; coordinate 0 is the most significant digit.
class TupleSpace {
public:
    TupleSpace() = default;
    explicit TupleSpace(std::vector<int> sizes);

    int arity() const { return static_cast<int>(sizes_.size()); }
    std::int64_t count() const { return total_; }
    int size(int coord) const { return sizes_.at(coord); }

    std::int64_t encode(const std::vector<int>& tuple) const;
    std::vector<int> decode(std::int64_t flat) const;
    int coord(std::int64_t flat, int pos) const;

private:
    std::vector<int> sizes_;
    std::vector<std::int64_t> strides_;
    std::int64_t total_ = 1;
};

// All d-element subsets of {0,...,k-1} in lexicographic order.
std::vector<std::vector<int>> index_subsets(int k, int d);

// Projection of flat indices of a k-ary space onto the sub-space of the
// coordinates in `coords` (sorted ascending).
class TupleProjector {
public:
    TupleProjector(const TupleSpace& full, std::vector<int> coords);

    const TupleSpace& sub_space() const { return sub_; }
    const std::vector<int>& coords() const { return coords_; }
    std::int64_t project(std::int64_t full_flat) const;

private:
    const TupleSpace* full_ = nullptr;
    std::vector<int> coords_;
    TupleSpace sub_;
};

// Product weight of a tuple across per-coordinate grounds.
Rat tuple_weight(const std::vector<WeightedPart>& parts, const std::vector<int>& tuple);
Rat tuple_weight(const std::vector<WeightedPart>& parts, const TupleSpace& space, std::int64_t flat);

} // namespace stabreg
