#include "ford/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ford {

u64 gcd(u64 a, u64 b) {
    if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    // std::sqrt can be off by one ulp near 2^53; fix with exact division tests.
    while (r > 0 && r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

Rational parse_rational(std::string_view text) {
    auto parse_uint = [](std::string_view s) -> Int {
        if (s.empty()) throw std::domain_error("empty integer in rational literal");
        for (char c : s) {
            if (c < '0' || c > '9')
                throw std::domain_error("rational literals are unsigned p or p/q, got '" +
                                        std::string(s) + "'");
        }
        return Int(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_uint(text));
    Int num = parse_uint(text.substr(0, slash));
    Int den = parse_uint(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator in rational literal");
    return Rational(num, den);
}

}  // namespace ford
