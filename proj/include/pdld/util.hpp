#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace pdld {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();
inline constexpr double pos_inf = std::numeric_limits<double>::infinity();

// error taxonomy used across the library; the CLI maps usage errors to exit code 2
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct complexity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// log(e^a + e^b); tolerates -inf on either side
inline double log_add(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

// log(e^a - e^b); requires a >= b
inline double log_sub(double a, double b) {
    if (b == neg_inf) return a;
    if (b > a) throw domain_error("log_sub: negative difference");
    if (a == b) return neg_inf;
    return a + std::log(-std::expm1(b - a));
}

// shortest decimal that round-trips through IEEE-754 binary64
inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw usage_error("trailing characters in number: " + s);
        return v;
    } catch (const std::invalid_argument&) {
        throw usage_error("not a number: " + s);
    } catch (const std::out_of_range&) {
        throw usage_error("number out of range: " + s);
    }
}

}  // namespace pdld
