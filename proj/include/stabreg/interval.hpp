#pragma once

#include <utility>
#include <vector>

#include "stabreg/rational.hpp"

namespace stabreg {

struct ValueMass {
    Rat value;
    Rat mass;
};

struct CoveringInterval {
    Rat lo;
    Rat hi;
    Rat exceptional_mass;   // mass strictly outside [lo, hi]

    Rat length() const { return hi - lo; }
};

// Shortest closed interval covering mass >= total - budget; leftmost among
// ties. Requires total mass > 0 and 0 <= budget <= total.
CoveringInterval shortest_covering_interval(std::vector<ValueMass> values, const Rat& budget);

// F: N -> (0,1].
class BudgetFn {
public:
    enum class Kind { Constant, Reciprocal, Exponential };

    BudgetFn() : kind_(Kind::Constant), c_(1) {}
    BudgetFn(Kind kind, Rat c);

    // constant c | c/m | c * 2^-m, for positive integer m.
    Rat eval(int m) const;

    Kind kind() const { return kind_; }
    const Rat& c() const { return c_; }

    // Spec strings: "const:<rat>", "recip:<rat>", "exp:<rat>".
    static BudgetFn parse(const std::string& spec);
    std::string str() const;

private:
    Kind kind_;
    Rat c_;
};

} // namespace stabreg
