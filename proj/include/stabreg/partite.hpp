#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stabreg/tuple_space.hpp"

namespace stabreg {

// f: X_1 x ... x X_k -> [0,1], dense, exact.
class PartiteFunction {
public:
    PartiteFunction() = default;
    PartiteFunction(std::vector<WeightedPart> parts, std::vector<Rat> values);

    int arity() const { return static_cast<int>(parts_.size()); }
    const std::vector<WeightedPart>& parts() const { return parts_; }
    const WeightedPart& part(int i) const { return parts_.at(i); }
    const TupleSpace& space() const { return space_; }

    const Rat& value(std::int64_t flat) const { return values_.at(flat); }
    const Rat& value(const std::vector<int>& tuple) const { return values_.at(space_.encode(tuple)); }
    const std::vector<Rat>& values() const { return values_; }

    bool is_indicator() const;

private:
    std::vector<WeightedPart> parts_;
    TupleSpace space_;
    std::vector<Rat> values_;
};

// Evaluation view used by verifiers so that large instances need not
// materialize dense value tables.
using ValueFn = std::function<Rat(std::int64_t flat)>;

// For each index set e in C([k],d), a partition of the e-tuples into indexed
// parts; index 0 is reserved for the exceptional side and may be empty.
class GradedPartition {
public:
    GradedPartition() = default;
    GradedPartition(int k, int d, std::vector<int> part_sizes);

    int k() const { return k_; }
    int d() const { return d_; }
    const std::vector<std::vector<int>>& edge_sets() const { return edge_sets_; }
    int edge_count() const { return static_cast<int>(edge_sets_.size()); }

    const TupleSpace& edge_space(int ei) const { return spaces_.at(ei); }
    int part_count(int ei) const { return part_counts_.at(ei); }
    int assignment(int ei, std::int64_t tuple_flat) const { return assign_.at(ei).at(tuple_flat); }

    // Number of non-exceptional parts b_e for edge set ei.
    int b(int ei) const { return part_counts_.at(ei) - 1; }
    int max_b() const;

    void set_assignment(int ei, std::int64_t tuple_flat, int part);
    void set_part_count(int ei, int count);

    // Tuple lists per part, index 0 first.
    std::vector<std::vector<std::int64_t>> parts_of(int ei) const;

    // Disjointness and coverage; throws StructuralError on violation.
    void validate() const;

private:
    int k_ = 0;
    int d_ = 1;
    std::vector<int> part_sizes_;
    std::vector<std::vector<int>> edge_sets_;
    std::vector<TupleSpace> spaces_;
    std::vector<std::vector<int>> assign_;
    std::vector<int> part_counts_;
};

// A cylinder intersection cell: one non-exceptional part index per edge set,
// plus the materialized member set of k-tuples.
struct CylinderCell {
    std::vector<int> part_indices;          // per edge set, same order as GradedPartition
    std::vector<std::int64_t> members;      // flat k-tuple indices
};

// Sum over member tuples of the product of per-coordinate weights; exact.
Rat cell_measure(const CylinderCell& cell, const std::vector<WeightedPart>& parts,
                 const TupleSpace& space);

// Measure of one part of one edge-set partition.
Rat side_measure(const GradedPartition& gp, int ei, int part,
                 const std::vector<WeightedPart>& parts);

// All nonempty cylinder cells of a graded partition (including those touching
// the exceptional side only if include_exceptional is set).
std::vector<CylinderCell> enumerate_cells(const GradedPartition& gp,
                                          const std::vector<WeightedPart>& parts,
                                          bool include_exceptional = false);

} // namespace stabreg
