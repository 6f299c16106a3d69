#include "hexflip/lattice.hpp"

namespace hexflip {

std::string to_string(const ExtRational& r) {
    if (r.is_infinity()) return "inf";
    if (r.den == 1) return r.num.get_str();
    return r.num.get_str() + "/" + r.den.get_str();
}

ExtRational parse_rational(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "1/0")
        return ExtRational::infinity();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return ExtRational(Int(text), 1);
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw BadInput("finite rationals need a nonzero denominator");
        return ExtRational(num, den);
    } catch (const std::invalid_argument&) {
        throw BadInput("cannot parse rational '" + text + "' (want p/q, an integer, or inf)");
    }
}

} // namespace hexflip
