#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace hharm6 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }

inline Int int_pow(Int base, unsigned exp) {
    Int result(1);
    while (exp) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

inline Int factorial(unsigned n) {
    Int r(1);
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// (n)!! for n >= -1; (-1)!! = 0!! = 1
inline Int double_factorial(int n) {
    if (n <= 0) return Int(1);
    Int r(1);
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int r(1);
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt_floor(n);
    return root * root == n;
}

// n = square * squarefree with squarefree >= 1; returns {square_root, squarefree}
inline std::pair<Int, Int> squarefree_split(Int n) {
    if (n <= 0) throw std::domain_error("squarefree_split: argument must be positive");
    Int outer(1), inner(1);
    for (Int p(2); p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e >= 2) outer *= int_pow(p, e / 2);
        if (e & 1u) inner *= p;
    }
    inner *= n; // leftover prime
    return {outer, inner};
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("rat_parse: zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::domain_error("rat_parse: malformed rational '" + s + "'");
    }
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

} // namespace hharm6
