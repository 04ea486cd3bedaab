#pragma once

#include "mukai/rational.hpp"

#include <stdexcept>

namespace mukai {

/// Element a + b*sqrt(d) of QQ(sqrt(d)), d > 0 fixed per computation.
/// A value with b == 0 acts as a plain rational and is compatible with any d.
struct Quad {
    Rat a{};
    Rat b{};
    Rat d{};

    Quad() = default;
    Quad(Rat a_, Rat b_, Rat d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {}
    explicit Quad(Rat a_) : a(std::move(a_)) {}

    bool rational() const { return b == 0; }
};

inline Rat unify_d(const Quad& x, const Quad& y) {
    if (x.rational()) return y.d;
    if (y.rational()) return x.d;
    if (x.d != y.d) throw std::domain_error("mixed quadratic extensions");
    return x.d;
}

inline Quad operator+(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b, unify_d(x, y)}; }
inline Quad operator-(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b, unify_d(x, y)}; }
inline Quad operator-(const Quad& x) { return {-x.a, -x.b, x.d}; }

inline Quad operator*(const Quad& x, const Quad& y) {
    const Rat d = unify_d(x, y);
    return {x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d};
}

inline Quad operator*(const Quad& x, const Rat& c) { return {x.a * c, x.b * c, x.d}; }
inline Quad operator*(const Rat& c, const Quad& x) { return x * c; }

inline Quad inverse(const Quad& x) {
    const Rat norm = x.a * x.a - x.b * x.b * x.d;
    if (norm == 0) throw std::domain_error("non-invertible quadratic scalar");
    return {x.a / norm, -x.b / norm, x.d};
}

inline bool operator==(const Quad& x, const Quad& y) {
    return x.a == y.a && x.b == y.b && (x.b == 0 || x.d == y.d);
}
inline bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

/// re + i*im over a commutative coefficient ring K.
template <class K>
struct Cx {
    K re{};
    K im{};

    Cx() = default;
    Cx(K re_, K im_) : re(std::move(re_)), im(std::move(im_)) {}
    explicit Cx(K re_) : re(std::move(re_)) {}
};

template <class K> Cx<K> operator+(const Cx<K>& x, const Cx<K>& y) { return {x.re + y.re, x.im + y.im}; }
template <class K> Cx<K> operator-(const Cx<K>& x, const Cx<K>& y) { return {x.re - y.re, x.im - y.im}; }
template <class K> Cx<K> operator-(const Cx<K>& x) { return {-x.re, -x.im}; }

template <class K>
Cx<K> operator*(const Cx<K>& x, const Cx<K>& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

template <class K> Cx<K> operator*(const Cx<K>& x, const Rat& c) { return {x.re * c, x.im * c}; }
template <class K> Cx<K> operator*(const Rat& c, const Cx<K>& x) { return x * c; }

template <class K> bool operator==(const Cx<K>& x, const Cx<K>& y) { return x.re == y.re && x.im == y.im; }
template <class K> bool operator!=(const Cx<K>& x, const Cx<K>& y) { return !(x == y); }

template <class K> Cx<K> conj(const Cx<K>& x) { return {x.re, -x.im}; }

using Gauss = Cx<Rat>;

inline bool is_zero(const Gauss& z) { return z.re == 0 && z.im == 0; }

inline Gauss inverse(const Gauss& z) {
    const Rat norm = z.re * z.re + z.im * z.im;
    if (norm == 0) throw std::domain_error("division by zero Gaussian rational");
    return {z.re / norm, -z.im / norm};
}

inline Gauss operator/(const Gauss& x, const Gauss& y) { return x * inverse(y); }

inline std::string gauss_str(const Gauss& z) {
    return rat_str(z.re) + (z.im < 0 ? " - " : " + ") + rat_str(rat_abs(z.im)) + "i";
}

/// Scalar-ring embeddings of QQ, used by the generic cohomology operations.
template <class K>
struct RingOf;

template <>
struct RingOf<Rat> {
    static Rat from(const Rat& x) { return x; }
};

template <>
struct RingOf<Gauss> {
    static Gauss from(const Rat& x) { return Gauss{x}; }
};

template <>
struct RingOf<Quad> {
    static Quad from(const Rat& x) { return Quad{x}; }
};

template <>
struct RingOf<Cx<Quad>> {
    static Cx<Quad> from(const Rat& x) { return Cx<Quad>{Quad{x}}; }
};

}  // namespace mukai
