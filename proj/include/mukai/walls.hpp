#pragma once

#include "mukai/cohomology.hpp"
#include "mukai/surface.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai {

/// Wall-and-chamber data for v = 1 - ell*rho on an elliptic K3 surface.
/// v-perp = ZZ nu + NS(X) with nu = 1 + ell*rho.
struct WallProblem {
    Surface S;
    Int ell = 1;
    CohQ v;
    CohQ nu;
};

inline WallProblem make_wall_problem(Surface S, Int ell) {
    if (S.chi != 2) throw std::invalid_argument("wall problem requires a K3 surface: chi(O) = 2");
    if (!ns_is_zero(S.K)) throw std::invalid_argument("wall problem requires K_X = 0");
    if (ell < 1) throw std::invalid_argument("wall problem requires ell >= 1");
    WallProblem p;
    p.v = coh(S, 1, ns_zero(S), Rat(-ell));
    p.nu = coh(S, 1, ns_zero(S), Rat(ell));
    p.S = std::move(S);
    p.ell = std::move(ell);
    return p;
}

/// Primitive sign-normalized projection of u to v-perp, in coordinates
/// (nu coefficient, NS coordinates). Zero iff u is proportional to v.
using WallKey = std::vector<Int>;

inline WallKey wall_key(const WallProblem& p, const CohQ& u) {
    // proj(u) = u - (<u,v>/<v,v>) v has nu-coefficient (r*ell + a)/(2*ell) and NS part u.ns.
    QVec coords(1 + p.S.ns_rank);
    coords[0] = (u.r * Rat(p.ell) + u.s) / (2 * Rat(p.ell));
    for (std::size_t i = 0; i < p.S.ns_rank; ++i) coords[1 + i] = u.ns[i];

    Int lcm(1);
    for (const auto& c : coords) lcm = lcm / int_gcd(lcm, denominator(c)) * denominator(c);
    WallKey key(coords.size());
    Int g(0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        key[i] = numerator(coords[i]) * (lcm / denominator(coords[i]));
        g = int_gcd(g, int_abs(key[i]));
    }
    if (g == 0) return WallKey(coords.size(), Int(0));
    int sign = 0;
    for (const auto& k : key) {
        if (k != 0) {
            sign = k > 0 ? 1 : -1;
            break;
        }
    }
    for (auto& k : key) k = k * sign / g;
    return key;
}

inline bool key_is_zero(const WallKey& k) {
    return std::all_of(k.begin(), k.end(), [](const Int& x) { return x == 0; });
}

inline std::string key_str(const WallKey& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + k[i].str();
    return s + ")";
}

enum class WallTag { case1, case2, bm_minus2, bm_isotropic, bm_positive };

inline const char* tag_str(WallTag t) {
    switch (t) {
        case WallTag::case1: return "case1";
        case WallTag::case2: return "case2";
        case WallTag::bm_minus2: return "bm_minus2";
        case WallTag::bm_isotropic: return "bm_isotropic";
        default: return "bm_positive";
    }
}

struct Wall {
    CohQ u;
    WallKey key;
    WallTag tag;
};

/// Bayer-Macri candidate test for integral u:
///   <u^2> = -2 and 0 <= <v,u> <= ell, or
///   <u^2> =  0 and 0 <  <v,u> <= ell, or
///   <u^2> >  0 and 2<u^2> + 1 <= <v,u> <= ell.
inline std::optional<WallTag> bm_class(const WallProblem& p, const CohQ& u) {
    if (!coh_is_integral(u)) throw std::domain_error("bm_class requires an integral Mukai vector");
    const Rat uu = pair(p.S, u, u);
    const Rat vu = pair(p.S, p.v, u);
    const Rat ell(p.ell);
    if (uu == -2 && 0 <= vu && vu <= ell) return WallTag::bm_minus2;
    if (uu == 0 && 0 < vu && vu <= ell) return WallTag::bm_isotropic;
    if (uu > 0 && 2 * uu + 1 <= vu && vu <= ell) return WallTag::bm_positive;
    return std::nullopt;
}

/// A candidate u defines a wall iff u or v - u is a Bayer-Macri vector; walls
/// are identified by key, and (v-u)-perp = u-perp.
inline bool defines_wall(const WallProblem& p, const CohQ& u) {
    return bm_class(p, u).has_value() || bm_class(p, p.v - u).has_value();
}

/// Walls through [f]: case (1) u = kf + a rho with -ell-1 <= a <= 0; case (2)
/// u = (+-D + kf) + a rho with -ell <= a <= 0 for each declared fiber
/// (-2)-class. Candidates that neither are nor complement a Bayer-Macri vector
/// (the pure kf multiples) are dropped. Deduplicated and ordered by key.
inline std::vector<Wall> classify_f_walls(const WallProblem& p, int k_bound) {
    if (k_bound < 1) throw std::invalid_argument("classify_f_walls requires k_bound >= 1");
    std::map<WallKey, Wall> walls;
    auto emit = [&](const CohQ& u, WallTag tag) {
        WallKey key = wall_key(p, u);
        if (key_is_zero(key) || !defines_wall(p, u)) return;
        walls.emplace(key, Wall{u, key, tag});
    };

    const Int ell = p.ell;
    for (int k = -k_bound; k <= k_bound; ++k) {
        for (Int a = -ell - 1; a <= 0; ++a) {
            const CohQ u = coh(p.S, 0, ns_scale(Rat(k), p.S.f), Rat(a));
            if (u.s == 0 && ns_is_zero(u.ns)) continue;
            emit(u, WallTag::case1);
        }
    }
    for (const auto& D : p.S.minus2_fiber_classes) {
        for (int eps : {1, -1}) {
            for (int k = -k_bound; k <= k_bound; ++k) {
                for (Int a = -ell; a <= 0; ++a) {
                    const NsVec xi = ns_add(ns_scale(Rat(eps), D), ns_scale(Rat(k), p.S.f));
                    emit(coh(p.S, 0, xi, Rat(a)), WallTag::case2);
                }
            }
        }
    }

    std::vector<Wall> out;
    out.reserve(walls.size());
    for (auto& [key, w] : walls) out.push_back(std::move(w));
    return out;
}

/// Closed form of xi(beta, omega) for v = 1 - ell*rho:
/// (b.w) nu + (b.w) beta + (ell + (w^2)/2 - (b^2)/2) omega.
inline CohQ xi_class(const WallProblem& p, const NsVec& beta, const NsVec& omega) {
    require_rank(p.S, beta, "xi_class beta");
    require_rank(p.S, omega, "xi_class omega");
    const Rat bw = ns_pair(p.S, beta, omega);
    const Rat c = Rat(p.ell) + ns_pair(p.S, omega, omega) / 2 - ns_pair(p.S, beta, beta) / 2;
    return scale(bw, p.nu) + coh_ns(p.S, ns_add(ns_scale(bw, beta), ns_scale(c, omega)));
}

/// Definition-level evaluation Im(conj(<e^{b+iw}, v>) e^{b+iw}); the oracle for
/// xi_class.
inline CohQ xi_direct(const WallProblem& p, const NsVec& beta, const NsVec& omega) {
    const CohC e = exp_class_complex(p.S, beta, omega);
    const Gauss z = pair<Gauss>(p.S, e, lift<Gauss>(p.S, p.v));
    return scale(z.re, im_part(e)) - scale(z.im, re_part(e));
}

inline NsVec scan_omega_prime(const WallProblem& p, const Rat& r0, const Rat& m, const Rat& n) {
    return ns_add(ns_scale(1 / (r0 * r0 * m), p.S.H), ns_scale(m * n, p.S.f));
}

struct WallHit {
    enum class Kind { none, all_t, value } kind = Kind::none;
    Rat t2;
};

/// Solves <xi(beta', t omega'), u> = 0 along the family omega' scaled by t.
/// After dividing by t the pairing is linear in t^2:
///   ((w'^2)/2)(w'.xi) t^2 + [(b'.w')((b'.xi) - a) + (ell - (b'^2)/2)(w'.xi)] = 0.
inline WallHit wall_hit_t2(const WallProblem& p, const CohQ& u, const NsVec& beta_p, const Int& r0,
                           const Rat& m, const Rat& n) {
    if (u.r != 0) throw std::domain_error("wall_hit_t2 expects u of the form xi + a*rho");
    if (ns_pair(p.S, beta_p, p.S.f) >= 0)
        throw RegimeError("wall_hit_t2 requires (beta'.f') < 0");
    const NsVec omega = scan_omega_prime(p, Rat(r0), m, n);
    const Rat w2 = ns_pair(p.S, omega, omega);
    const Rat wxi = ns_pair(p.S, omega, u.ns);
    const Rat bw = ns_pair(p.S, beta_p, omega);
    const Rat bxi = ns_pair(p.S, beta_p, u.ns);
    const Rat lin = w2 / 2 * wxi;
    const Rat cst = bw * (bxi - u.s) + (Rat(p.ell) - ns_pair(p.S, beta_p, beta_p) / 2) * wxi;
    if (lin == 0) {
        if (cst == 0) return {WallHit::Kind::all_t, Rat(0)};
        return {WallHit::Kind::none, Rat(0)};
    }
    const Rat root = -cst / lin;
    if (root <= 0) return {WallHit::Kind::none, Rat(0)};
    return {WallHit::Kind::value, root};
}

struct ScanHit {
    Rat t2;
    Wall wall;
};

struct ScanParams {
    NsVec beta_prime;
    Int r0 = 1;
    Rat m;
    Rat n;
    Rat t_max;
};

/// k range outside which no candidate can satisfy the eq:f-u inequalities:
/// with (beta'.f') < 0 a hit needs (H'.xi) and a - (beta'.xi) of opposite sign,
/// which bounds |k| by the fiber degree of the candidate family.
inline int scan_k_bound(const WallProblem& p, const NsVec& beta_p) {
    const Rat bf = ns_pair(p.S, beta_p, p.S.f);
    Rat bound = (Rat(p.ell) + 1) / rat_abs(bf);
    for (const auto& D : p.S.minus2_fiber_classes) {
        bound = std::max(bound, rat_abs(ns_pair(p.S, p.S.H, D)));
        bound = std::max(bound, (Rat(p.ell) + rat_abs(ns_pair(p.S, beta_p, D))) / rat_abs(bf));
    }
    return static_cast<int>(rat_ceil(bound)) + 1;
}

/// Ordered wall crossings of the family t -> (beta', t omega'), t in [1, t_max]:
/// candidates from classify_f_walls at the derived k bound, kept when both
/// eq:f-u inequalities hold strictly and the hit lands in [1, t_max^2].
inline std::vector<ScanHit> scan(const WallProblem& p, const ScanParams& sp) {
    const Rat bf = ns_pair(p.S, sp.beta_prime, p.S.f);
    if (bf >= 0)
        throw RegimeError("scan requires (beta'.f') < 0, got " + rat_str(bf));
    const Rat r0(sp.r0);
    const Rat r2m2n = r0 * r0 * sp.m * sp.m * sp.n;
    const Rat drift = ns_pair(p.S, sp.beta_prime, p.S.H) / r2m2n + bf;
    if (drift >= 0)
        throw RegimeError("scan requires (beta'.H')/(r0^2 m^2 n) + (beta'.f') < 0, got " +
                          rat_str(drift));
    const Rat denom0 = Rat(p.ell) + sp.n / (r0 * r0) - ns_pair(p.S, sp.beta_prime, sp.beta_prime) / 2;
    if (denom0 <= 0)
        throw RegimeError("scan requires ell + n/r0^2 - (beta'^2)/2 > 0, got " + rat_str(denom0));
    const Rat lhs0 = drift / denom0;

    std::vector<ScanHit> hits;
    for (const auto& wall : classify_f_walls(p, scan_k_bound(p, sp.beta_prime))) {
        const Rat hxi = ns_pair(p.S, p.S.H, wall.u.ns);
        const Rat denom = wall.u.s - ns_pair(p.S, sp.beta_prime, wall.u.ns);
        if (denom == 0) continue;
        const Rat mid = hxi / (r2m2n * denom);
        if (!(mid < 0) || !(lhs0 < mid)) continue;
        const WallHit hit = wall_hit_t2(p, wall.u, sp.beta_prime, sp.r0, sp.m, sp.n);
        if (hit.kind != WallHit::Kind::value) continue;
        if (hit.t2 < 1 || hit.t2 > sp.t_max * sp.t_max) continue;
        hits.push_back({hit.t2, wall});
    }
    std::sort(hits.begin(), hits.end(), [](const ScanHit& a, const ScanHit& b) {
        if (a.t2 != b.t2) return a.t2 < b.t2;
        return a.wall.key < b.wall.key;
    });
    return hits;
}

struct ChamberSignature {
    Rat c_nu_beta;  // coefficient of (nu + beta')
    Rat c_H;        // 1/(r0^2 m^2 n)
    Rat c_f;        // identically 1
    CohQ vec;
};

/// Exact representative of xi(beta', omega') in the normalization of the
/// limit-behavior formula; the (nu + beta') coefficient measures the distance
/// from [f'].
inline ChamberSignature chamber_signature(const WallProblem& p, const NsVec& beta_p, const Int& r0,
                                          const Rat& m, const Rat& n) {
    const Rat r0q(r0);
    const Rat r2m2n = r0q * r0q * m * m * n;
    const Rat bf = ns_pair(p.S, beta_p, p.S.f);
    if (bf >= 0) throw RegimeError("chamber_signature requires (beta'.f') < 0");
    const Rat denom = Rat(p.ell) + n / (r0q * r0q) - ns_pair(p.S, beta_p, beta_p) / 2;
    if (denom <= 0)
        throw RegimeError("chamber_signature requires ell + n/r0^2 - (beta'^2)/2 > 0");

    ChamberSignature out;
    out.c_nu_beta = (ns_pair(p.S, beta_p, p.S.H) / r2m2n + bf) / denom;
    out.c_H = 1 / r2m2n;
    out.c_f = 1;
    const CohQ nu_beta = p.nu + coh_ns(p.S, beta_p);
    out.vec = scale(out.c_nu_beta, nu_beta) +
              coh_ns(p.S, ns_add(ns_scale(out.c_H, p.S.H), p.S.f));
    return out;
}

/// Independent enumeration: all integral u with coordinates in [-bound, bound],
/// f in u-perp, and a Bayer-Macri class; returns the deduplicated key set.
inline std::set<WallKey> brute_oracle(const WallProblem& p, int bound) {
    std::set<WallKey> keys;
    const std::size_t rank = p.S.ns_rank;
    std::vector<long> c(2 + rank, -bound);
    const std::size_t dims = c.size();
    while (true) {
        CohQ u = coh_zero<Rat>(p.S);
        u.r = c[0];
        for (std::size_t i = 0; i < rank; ++i) u.ns[i] = c[1 + i];
        u.s = c[1 + rank];
        if (ns_pair(p.S, u.ns, p.S.f) == 0 && bm_class(p, u).has_value()) {
            WallKey key = wall_key(p, u);
            if (!key_is_zero(key)) keys.insert(std::move(key));
        }
        std::size_t i = 0;
        while (i < dims && c[i] == bound) c[i++] = -bound;
        if (i == dims) break;
        ++c[i];
    }
    return keys;
}

}  // namespace mukai
