#include "vjac/rational.hpp"

#include <stdexcept>

namespace vjac {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int num(s);
            Rat q(num);
            q.canonicalize();
            return q;
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    }
}

std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace vjac
