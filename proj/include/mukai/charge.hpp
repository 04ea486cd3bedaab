#pragma once

#include "mukai/cohomology.hpp"
#include "mukai/rings.hpp"
#include "mukai/surface.hpp"

#include <compare>
#include <stdexcept>

namespace mukai {

struct StabilityParams {
    NsVec beta;
    NsVec omega;
};

/// <e^{beta+i*omega}, v> with no regime check; shared by the checked charges.
inline Gauss eval_charge(const Surface& s, const NsVec& beta, const NsVec& omega, const CohQ& v) {
    return pair<Gauss>(s, exp_class_complex(s, beta, omega), lift<Gauss>(s, v));
}

/// Z-hat: the charge against a Mukai vector. Requires (omega^2) > chi(O_X).
inline Gauss z_hat(const Surface& s, const StabilityParams& p, const CohQ& v) {
    if (ns_pair(s, p.omega, p.omega) <= s.chi)
        throw RegimeError("z_hat requires (omega^2) > chi(O_X), got (omega^2) = " +
                          rat_str(ns_pair(s, p.omega, p.omega)));
    return eval_charge(s, p.beta, p.omega, v);
}

/// The geometric-side charge, evaluated against a Chern character.
inline Gauss z_geo(const Surface& s, const StabilityParams& p, const CohQ& ch) {
    return eval_charge(s, p.beta, p.omega, ch);
}

/// Sector of the phase phi in (-1, 1], z = m exp(i pi phi). Ordered so that
/// larger sector means larger phase; the negative real axis (phi = 1) is top.
inline int phase_sector(const Gauss& z) {
    if (z.im == 0) return z.re > 0 ? 4 : 8;
    if (z.im > 0) {
        if (z.re > 0) return 5;
        return z.re == 0 ? 6 : 7;
    }
    if (z.re < 0) return 1;
    return z.re == 0 ? 2 : 3;
}

/// Exact comparison of phases in (-1, 1]: sector first, then the sign of the
/// cross product re(z1)im(z2) - im(z1)re(z2) inside a common open quadrant.
inline std::strong_ordering phase_cmp(const Gauss& z1, const Gauss& z2) {
    if (is_zero(z1) || is_zero(z2)) throw std::domain_error("phase_cmp: zero has no phase");
    const int s1 = phase_sector(z1), s2 = phase_sector(z2);
    if (s1 != s2) return s1 <=> s2;
    const Rat cross = z1.re * z2.im - z1.im * z2.re;
    if (cross > 0) return std::strong_ordering::less;
    if (cross < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// exp(-pi i lambda) restricted to Gaussian-rational values: a quarter-turn
/// power of -i times a positive rational scale. quarter_turns = 2 Re(lambda),
/// scale = exp(pi Im(lambda)).
inline Gauss act_scale_rot(long quarter_turns, const Rat& scale, const Gauss& z) {
    if (scale <= 0) throw std::domain_error("act_scale_rot: scale must be positive");
    const Gauss w = z * scale;
    switch (((quarter_turns % 4) + 4) % 4) {
        case 0: return w;
        case 1: return Gauss{w.im, -w.re};   // * (-i)
        case 2: return Gauss{-w.re, -w.im};  // * (-1)
        default: return Gauss{-w.im, w.re};  // * (i)
    }
}

/// Charge-level identity behind the GL2+ equivalence: in QQ(sqrt(d)) with
/// d = t^2 - chi/(A^2), the geometric charge Z_{(beta, sqrt(d) A)}(ch) equals
/// x + y sqrt(d) i; stretching the imaginary axis by t/sqrt(d) must reproduce
/// Z-hat_{(beta, tA)}(v(ch)) exactly.
inline bool hat_geo_check(const Surface& s, const NsVec& beta, const NsVec& A, const Rat& t,
                          const CohQ& ch) {
    require_rank(s, beta, "hat_geo_check beta");
    require_rank(s, A, "hat_geo_check A");
    const Rat A2 = ns_pair(s, A, A);
    if (A2 <= 0) throw RegimeError("hat_geo_check requires (A^2) > 0");
    const Rat d = t * t - Rat(s.chi) / A2;
    if (d <= 0) throw RegimeError("hat_geo_check requires t^2 > chi/(A^2)");

    // e^{beta + i sqrt(d) A} with exact coefficients in QQ(sqrt(d)).
    std::vector<Cx<Quad>> z(s.ns_rank);
    for (std::size_t i = 0; i < s.ns_rank; ++i)
        z[i] = Cx<Quad>{Quad{beta[i], 0, d}, Quad{0, A[i], d}};
    const Coh<Cx<Quad>> e = exp_ns<Cx<Quad>>(s, std::move(z));
    Cx<Quad> geo = pair<Cx<Quad>>(s, e, lift<Cx<Quad>>(s, ch));

    // T^{-1} scales the imaginary part by t/s = (t/d) sqrt(d).
    geo.im = geo.im * Quad{0, t / d, d};

    const Gauss hat = eval_charge(s, beta, ns_scale(t, A), mukai_vector(s, ch));
    return geo == Cx<Quad>{Quad{hat.re}, Quad{hat.im}};
}

/// Large-volume-limit test: for v = e^beta(r + xi + a rho) and omega = tL the
/// strict inequality under which Z-hat-semistable moduli equal twisted-sheaf
/// moduli. Case r > 0 and case r = 0 as displayed; r < 0 is unsupported.
inline bool lvl_check(const Surface& s, const CohQ& v, const NsVec& beta, const NsVec& L,
                      const Rat& t) {
    const Rat L2 = ns_pair(s, L, L);
    if (L2 <= 0) throw std::domain_error("lvl_check requires (L.L) > 0");
    const CohQ w = untwist(s, v, beta);
    if (w.r < 0) throw std::domain_error("lvl_check: rank < 0 unsupported");
    const Rat d = ns_pair(s, w.ns, L) / L2;
    const Rat delta = delta_min(s, L);
    const Rat lhs = (t * t * L2 - Rat(s.chi)) / 2;
    Rat rhs;
    if (w.r > 0)
        rhs = d / delta * (d * d * L2 / 2 - w.r * w.s + w.r * w.r * Rat(s.chi, 2));
    else
        rhs = d / delta * (rat_abs(w.s) + d * d * L2);
    return lhs > rhs;
}

}  // namespace mukai
