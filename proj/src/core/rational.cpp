#include "stabreg/rational.hpp"

#include "stabreg/errors.hpp"

namespace stabreg {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw StructuralError("empty rational literal");
    for (char ch : s) {
        if (!(ch == '/' || ch == '-' || ch == '+' || (ch >= '0' && ch <= '9')))
            throw StructuralError("bad rational literal: " + s);
    }
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw StructuralError("zero denominator: " + s);
        return Rat(num, den);
    } catch (const StructuralError&) {
        throw;
    } catch (const std::exception&) {
        throw StructuralError("bad rational literal: " + s);
    }
}

} // namespace stabreg
