#pragma once

#include <map>
#include <string>
#include <vector>

#include "stabreg/errors.hpp"
#include "stabreg/rational.hpp"

namespace stabreg {

// A finite labeled ground set with exact nonnegative rational weights summing
// to 1. Zero-weight points are allowed and carry null support.
class WeightedPart {
public:
    WeightedPart() = default;
    WeightedPart(std::vector<std::string> labels, std::vector<Rat> weights);

    static WeightedPart uniform(const std::vector<std::string>& labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }
    const Rat& weight(int i) const { return weights_.at(i); }
    const std::vector<Rat>& weights() const { return weights_; }

    // Structural error if the label is unknown.
    int index_of(const std::string& label) const;
    bool has_label(const std::string& label) const { return index_.count(label) > 0; }

private:
    void validate() const;

    std::vector<std::string> labels_;
    std::vector<Rat> weights_;
    std::map<std::string, int> index_;
};

} // namespace stabreg
