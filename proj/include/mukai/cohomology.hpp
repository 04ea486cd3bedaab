#pragma once

#include "mukai/rational.hpp"
#include "mukai/rings.hpp"
#include "mukai/surface.hpp"

#include <stdexcept>
#include <vector>

namespace mukai {

/// Element r + xi + s*rho of the algebraic cohomology, with coefficients in a
/// commutative ring K (rationals, Gaussian rationals, or QQ(sqrt(d)) flavors).
/// rho is the point class with integral 1; it is not an NS basis element.
template <class K>
struct Coh {
    K r{};
    std::vector<K> ns;
    K s{};

    Coh() = default;
    Coh(K r_, std::vector<K> ns_, K s_) : r(std::move(r_)), ns(std::move(ns_)), s(std::move(s_)) {}
};

using CohQ = Coh<Rat>;
using CohC = Coh<Gauss>;

template <class K>
bool operator==(const Coh<K>& u, const Coh<K>& w) {
    return u.r == w.r && u.ns == w.ns && u.s == w.s;
}
template <class K>
bool operator!=(const Coh<K>& u, const Coh<K>& w) {
    return !(u == w);
}

template <class K>
Coh<K> operator+(const Coh<K>& u, const Coh<K>& w) {
    if (u.ns.size() != w.ns.size()) throw std::invalid_argument("coh add: NS rank mismatch");
    Coh<K> z{u.r + w.r, u.ns, u.s + w.s};
    for (std::size_t i = 0; i < z.ns.size(); ++i) z.ns[i] = z.ns[i] + w.ns[i];
    return z;
}

template <class K>
Coh<K> operator-(const Coh<K>& u, const Coh<K>& w) {
    if (u.ns.size() != w.ns.size()) throw std::invalid_argument("coh sub: NS rank mismatch");
    Coh<K> z{u.r - w.r, u.ns, u.s - w.s};
    for (std::size_t i = 0; i < z.ns.size(); ++i) z.ns[i] = z.ns[i] - w.ns[i];
    return z;
}

template <class K>
Coh<K> operator-(const Coh<K>& u) {
    Coh<K> z{-u.r, u.ns, -u.s};
    for (auto& c : z.ns) c = -c;
    return z;
}

template <class K, class C>
Coh<K> scale(const C& c, const Coh<K>& u) {
    Coh<K> z{u.r * c, u.ns, u.s * c};
    for (auto& x : z.ns) x = x * c;
    return z;
}

template <class K>
Coh<K> coh_zero(const Surface& s) {
    return Coh<K>{K{}, std::vector<K>(s.ns_rank), K{}};
}

inline CohQ coh(const Surface& s, Rat r, NsVec ns, Rat rho) {
    require_rank(s, ns, "coh");
    return CohQ{std::move(r), std::move(ns), std::move(rho)};
}

inline CohQ coh_rho(const Surface& s) { return coh(s, 0, ns_zero(s), 1); }
inline CohQ coh_unit(const Surface& s) { return coh(s, 1, ns_zero(s), 0); }
inline CohQ coh_ns(const Surface& s, NsVec ns) { return coh(s, 0, std::move(ns), 0); }

template <class K>
Coh<K> lift(const Surface& s, const CohQ& u) {
    Coh<K> z = coh_zero<K>(s);
    z.r = RingOf<K>::from(u.r);
    for (std::size_t i = 0; i < u.ns.size(); ++i) z.ns[i] = RingOf<K>::from(u.ns[i]);
    z.s = RingOf<K>::from(u.s);
    return z;
}

inline CohC complexify(const CohQ& re, const CohQ& im) {
    if (re.ns.size() != im.ns.size()) throw std::invalid_argument("complexify: NS rank mismatch");
    CohC z{Gauss{re.r, im.r}, std::vector<Gauss>(re.ns.size()), Gauss{re.s, im.s}};
    for (std::size_t i = 0; i < re.ns.size(); ++i) z.ns[i] = Gauss{re.ns[i], im.ns[i]};
    return z;
}

inline CohQ re_part(const CohC& z) {
    CohQ u{z.r.re, NsVec(z.ns.size()), z.s.re};
    for (std::size_t i = 0; i < z.ns.size(); ++i) u.ns[i] = z.ns[i].re;
    return u;
}

inline CohQ im_part(const CohC& z) {
    CohQ u{z.r.im, NsVec(z.ns.size()), z.s.im};
    for (std::size_t i = 0; i < z.ns.size(); ++i) u.ns[i] = z.ns[i].im;
    return u;
}

inline bool coh_is_integral(const CohQ& u) {
    if (!is_integer(u.r) || !is_integer(u.s)) return false;
    return ns_is_integral(u.ns);
}

/// u* = x0 - x1 + x2*rho.
template <class K>
Coh<K> dual(const Coh<K>& u) {
    Coh<K> z = u;
    for (auto& c : z.ns) c = -c;
    return z;
}

/// Mukai pairing <u,w> = (x1.y1) - x0*y2 - x2*y0.
template <class K>
K pair(const Surface& s, const Coh<K>& u, const Coh<K>& w) {
    return ns_pair<K>(s, u.ns, w.ns) - u.r * w.s - u.s * w.r;
}

inline Rat pair(const Surface& s, const CohQ& u, const CohQ& w) { return pair<Rat>(s, u, w); }

/// Truncated cup product (r1r2, r1*xi2 + r2*xi1, r1*a2 + r2*a1 + (xi1.xi2)).
template <class K>
Coh<K> mul(const Surface& s, const Coh<K>& u, const Coh<K>& w) {
    if (u.ns.size() != s.ns_rank || w.ns.size() != s.ns_rank)
        throw std::invalid_argument("mul: NS rank mismatch");
    Coh<K> z = coh_zero<K>(s);
    z.r = u.r * w.r;
    for (std::size_t i = 0; i < s.ns_rank; ++i) z.ns[i] = u.r * w.ns[i] + w.r * u.ns[i];
    z.s = u.r * w.s + w.r * u.s + ns_pair<K>(s, u.ns, w.ns);
    return z;
}

inline CohQ mul(const Surface& s, const CohQ& u, const CohQ& w) { return mul<Rat>(s, u, w); }

/// Reads off the degree-4 coefficient (the integral against rho).
template <class K>
K integral(const Coh<K>& u) {
    return u.s;
}

/// e^beta = (1, beta, (beta.beta)/2) over any coefficient ring.
template <class K>
Coh<K> exp_ns(const Surface& s, std::vector<K> z) {
    if (z.size() != s.ns_rank) throw std::invalid_argument("exp_ns: NS rank mismatch");
    K half_sq = ns_pair<K>(s, z, z) * Rat(1, 2);
    return Coh<K>{RingOf<K>::from(Rat(1)), std::move(z), std::move(half_sq)};
}

inline CohQ exp_class(const Surface& s, const NsVec& beta) { return exp_ns<Rat>(s, beta); }

/// e^{beta + i*omega}: re = (1, beta, ((b^2)-(w^2))/2), im = (0, omega, (b.w)).
inline CohC exp_class_complex(const Surface& s, const NsVec& beta, const NsVec& omega) {
    require_rank(s, beta, "exp_class_complex beta");
    require_rank(s, omega, "exp_class_complex omega");
    std::vector<Gauss> z(s.ns_rank);
    for (std::size_t i = 0; i < s.ns_rank; ++i) z[i] = Gauss{beta[i], omega[i]};
    return exp_ns<Gauss>(s, std::move(z));
}

/// v(E) = ch(E)(1 + (chi/2) rho).
inline CohQ mukai_vector(const Surface& s, const CohQ& ch) {
    CohQ v = ch;
    v.s += ch.r * Rat(s.chi, 2);
    return v;
}

inline CohQ chern_of(const Surface& s, const CohQ& v) {
    CohQ ch = v;
    ch.s -= v.r * Rat(s.chi, 2);
    return ch;
}

enum class CohBasis { chern, mukai };

/// v = e^beta (r + pH + qf + D + a*rho) with D in f-perp /\ H-perp.
struct BetaExpansion {
    NsVec beta;
    Rat r;
    Rat p;
    Rat q;
    NsVec D;
    Rat a;
    CohBasis basis = CohBasis::mukai;

    NsVec xi(const Surface& s) const {
        return ns_add(ns_add(ns_scale(p, s.H), ns_scale(q, s.f)), D);
    }
};

inline CohQ untwist(const Surface& s, const CohQ& v, const NsVec& beta) {
    return mul(s, exp_class(s, ns_scale(-1, beta)), v);
}

inline BetaExpansion beta_expand(const Surface& s, const CohQ& v, const NsVec& beta,
                                 CohBasis basis = CohBasis::mukai) {
    const CohQ w = untwist(s, v, beta);
    BetaExpansion e;
    e.beta = beta;
    e.basis = basis;
    e.r = w.r;
    e.a = w.s;
    e.p = ns_pair(s, w.ns, s.f);
    e.q = ns_pair(s, w.ns, s.H);
    e.D = ns_sub(ns_sub(w.ns, ns_scale(e.p, s.H)), ns_scale(e.q, s.f));
    return e;
}

inline CohQ reassemble(const Surface& s, const BetaExpansion& e) {
    CohQ core{e.r, e.xi(s), e.a};
    return mul(s, exp_class(s, e.beta), core);
}

/// delta = min{(D.L) > 0 | D in NS(X)} / (L^2). The minimum positive value of
/// the linear form (.L) on the integral lattice is the gcd of its values on a
/// basis.
inline Rat delta_min(const Surface& s, const NsVec& L) {
    require_rank(s, L, "delta_min");
    const Rat L2 = ns_pair(s, L, L);
    if (L2 <= 0) throw std::domain_error("delta_min requires (L.L) > 0");
    Rat g(0);
    for (std::size_t i = 0; i < s.ns_rank; ++i) {
        NsVec e(s.ns_rank, Rat(0));
        e[i] = 1;
        g = rat_gcd(g, ns_pair(s, e, L));
    }
    if (g == 0) throw std::domain_error("delta_min: pairing with L vanishes on the lattice");
    return g / L2;
}

/// Solves <e^beta, v0> = 0 for beta = beta0 + yH, where v0 = eta + b*rho.
/// <e^{beta0 + yH}, v0> = <e^{beta0}, v0> + y (H.eta), so y = -<e^{beta0}, v0>/(H.eta).
inline NsVec beta_solve(const Surface& s, const NsVec& eta, const Rat& b, const NsVec& beta0) {
    require_rank(s, eta, "beta_solve eta");
    require_rank(s, beta0, "beta_solve beta0");
    const Rat h_eta = ns_pair(s, s.H, eta);
    if (h_eta == 0) throw std::domain_error("beta_solve: (H.eta) = 0, not solvable along H");
    const CohQ v0 = coh(s, 0, eta, b);
    const Rat y = -pair(s, exp_class(s, beta0), v0) / h_eta;
    return ns_add(beta0, ns_scale(y, s.H));
}

}  // namespace mukai
