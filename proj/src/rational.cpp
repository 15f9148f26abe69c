#include "covercheck/rational.hpp"

#include <cctype>

#include "covercheck/errors.hpp"

namespace covercheck {

Rational rational_of(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den))
        throw InputError("malformed rational literal '" + text + "'");
    Rational q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw InputError("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace covercheck
