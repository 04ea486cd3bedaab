#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mukai {

// et_off: plain value semantics; mixed expressions with the wrapper rings
// (Gaussian rationals, quadratic extensions) stay well typed.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline Int numerator(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Positive generator of the subgroup ZZa + ZZb of QQ (0 if both vanish).
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return rat_abs(b);
    if (b == 0) return rat_abs(a);
    const Int da = denominator(a), db = denominator(b);
    const Int common = da / int_gcd(da, db) * db;
    const Int na = numerator(a) * (common / da);
    const Int nb = numerator(b) * (common / db);
    return Rat(int_gcd(na, nb), common);
}

inline Int rat_floor(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (x < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

inline Int rat_ceil(const Rat& x) { return -rat_floor(Rat(-x)); }

/// "p" or "p/q" with q > 0 after normalization.
inline std::string rat_str(const Rat& x) { return x.str(); }

/// Parses "p", "-p", or "p/q". Anything else (floats in particular) is rejected.
inline Rat parse_rat(const std::string& s) {
    auto fail = [&] { throw std::invalid_argument("not an exact rational: '" + s + "'"); };
    if (s.empty()) fail();
    std::size_t i = 0;
    auto scan_int = [&](bool allow_sign) {
        std::size_t start = i;
        if (allow_sign && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
        if (digits == 0) fail();
        return s.substr(start, i - start);
    };
    const std::string num = scan_int(true);
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/') fail();
        ++i;
        den = scan_int(false);
        if (i != s.size()) fail();
    }
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return Rat(Int(num), d);
}

/// Display-only float rendering; never feeds back into computations.
inline double rat_double(const Rat& x) { return static_cast<double>(x); }

}  // namespace mukai
