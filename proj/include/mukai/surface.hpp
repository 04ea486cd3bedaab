#pragma once

#include "mukai/linalg.hpp"
#include "mukai/rational.hpp"
#include "mukai/rings.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mukai {

using NsVec = QVec;

/// Failed hypotheses of the regime / large-volume propositions.
struct RegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

/// Neron-Severi data of the configured elliptic surface: a declared basis with
/// its Gram matrix, the fiber class f, a polarization direction H normalized to
/// (H.H) = 0, (H.f) = 1, the canonical class K, and chi(O_X).
struct Surface {
    std::string name;
    Int chi = 0;
    std::size_t ns_rank = 0;
    QMat gram;
    NsVec f;
    NsVec H;
    NsVec K;
    std::vector<NsVec> minus2_fiber_classes;
    Int integrality_scale_l = 1;
};

inline void require_rank(const Surface& s, const NsVec& x, const char* what) {
    if (x.size() != s.ns_rank)
        throw std::invalid_argument(std::string(what) + ": NS rank mismatch");
}

template <class K>
K ns_pair(const Surface& s, const std::vector<K>& x, const std::vector<K>& y) {
    if (x.size() != s.ns_rank || y.size() != s.ns_rank)
        throw std::invalid_argument("ns_pair: NS rank mismatch");
    K acc{};
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (s.gram[i][j] != 0) acc = acc + x[i] * y[j] * s.gram[i][j];
    return acc;
}

inline Rat ns_pair(const Surface& s, const NsVec& x, const NsVec& y) {
    return ns_pair<Rat>(s, x, y);
}

inline NsVec ns_zero(const Surface& s) { return NsVec(s.ns_rank, Rat(0)); }

inline NsVec ns_add(const NsVec& x, const NsVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("ns_add: NS rank mismatch");
    NsVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

inline NsVec ns_sub(const NsVec& x, const NsVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("ns_sub: NS rank mismatch");
    NsVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

inline NsVec ns_scale(const Rat& c, const NsVec& x) {
    NsVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = c * x[i];
    return z;
}

inline bool ns_is_zero(const NsVec& x) {
    for (const auto& c : x)
        if (c != 0) return false;
    return true;
}

inline bool ns_is_integral(const NsVec& x) {
    for (const auto& c : x)
        if (!is_integer(c)) return false;
    return true;
}

inline std::vector<Check> validate_surface(const Surface& s) {
    std::vector<Check> out;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        out.push_back({std::move(name), pass, std::move(detail)});
    };

    bool shape_ok = s.ns_rank > 0 && s.gram.size() == s.ns_rank;
    for (const auto& row : s.gram) shape_ok = shape_ok && row.size() == s.ns_rank;
    shape_ok = shape_ok && s.f.size() == s.ns_rank && s.H.size() == s.ns_rank && s.K.size() == s.ns_rank;
    for (const auto& d : s.minus2_fiber_classes) shape_ok = shape_ok && d.size() == s.ns_rank;
    add("gram and class vectors have shape ns_rank", shape_ok);
    if (!shape_ok) return out;

    bool sym = true;
    for (std::size_t i = 0; i < s.ns_rank; ++i)
        for (std::size_t j = i + 1; j < s.ns_rank; ++j) sym = sym && s.gram[i][j] == s.gram[j][i];
    add("gram matrix is symmetric", sym);

    add("fiber class is isotropic: (f.f) = 0", ns_pair(s, s.f, s.f) == 0,
        rat_str(ns_pair(s, s.f, s.f)));
    add("normalization (H.f) = 1", ns_pair(s, s.H, s.f) == 1, rat_str(ns_pair(s, s.H, s.f)));
    add("normalization (H.H) = 0", ns_pair(s, s.H, s.H) == 0, rat_str(ns_pair(s, s.H, s.H)));
    add("canonical class is vertical: (K.f) = 0", ns_pair(s, s.K, s.f) == 0,
        rat_str(ns_pair(s, s.K, s.f)));

    for (std::size_t i = 0; i < s.minus2_fiber_classes.size(); ++i) {
        const auto& d = s.minus2_fiber_classes[i];
        const std::string tag = "minus2_fiber_classes[" + std::to_string(i) + "]";
        add(tag + " has (D.D) = -2", ns_pair(s, d, d) == -2, rat_str(ns_pair(s, d, d)));
        add(tag + " has (D.f) = 0", ns_pair(s, d, s.f) == 0, rat_str(ns_pair(s, d, s.f)));
    }

    add("integrality_scale_l is positive", s.integrality_scale_l > 0);
    bool lH_integral = true;
    for (const auto& c : s.H) lH_integral = lH_integral && is_integer(Rat(c * s.integrality_scale_l));
    add("l*H is integral", lH_integral);
    return out;
}

/// Rational basis of the sublattice f-perp /\ H-perp (the "D part" of beta
/// expansions). Dimension is ns_rank - 2 since (f, H) span a hyperbolic plane.
inline std::vector<NsVec> d_sublattice_basis(const Surface& s) {
    QMat rows(2, QVec(s.ns_rank, Rat(0)));
    for (std::size_t j = 0; j < s.ns_rank; ++j) {
        NsVec e(s.ns_rank, Rat(0));
        e[j] = 1;
        rows[0][j] = ns_pair(s, s.f, e);
        rows[1][j] = ns_pair(s, s.H, e);
    }
    return mat_nullspace(rows);
}

}  // namespace mukai
