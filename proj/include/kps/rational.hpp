#ifndef KPS_RATIONAL_HPP
#define KPS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <optional>
#include <sstream>
#include <string>

namespace kps {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

inline Int binom(long long n, long long k) {
    if (k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// Extended rational: an absent value means infinity (used for APL).
using ExtRational = std::optional<Rational>;

inline std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << "/" << r.denominator();
    return out.str();
}

inline std::string to_string(const ExtRational& r) {
    return r ? to_string(*r) : std::string("inf");
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace kps

#endif
