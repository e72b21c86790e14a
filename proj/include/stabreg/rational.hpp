#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace stabreg {

// Exact rational arithmetic everywhere; no floating point in any verifier.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rat_str(const Rat& r) {
    return r.str();
}

// Accepts "num/den" or "num"; whitespace is not tolerated.
Rat parse_rat(const std::string& s);

// 2^-n as an exact rational, n >= 0.
inline Rat pow2_inv(int n) {
    BigInt d = BigInt(1) << n;
    return Rat(BigInt(1), d);
}

// floor(r * 2^n) for r >= 0.
inline BigInt floor_scaled(const Rat& r, int n) {
    BigInt num = numerator(r) << n;
    return num / denominator(r);
}

inline bool is_zero(const Rat& r) { return r.is_zero(); }

} // namespace stabreg
