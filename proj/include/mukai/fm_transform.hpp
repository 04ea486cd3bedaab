#pragma once

#include "mukai/charge.hpp"
#include "mukai/cohomology.hpp"
#include "mukai/linalg.hpp"
#include "mukai/surface.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mukai {

/// Cohomological Fourier-Mukai transform determined by the primitive isotropic
/// vector v0 = e^beta (r0 f) = r0 f + b rho. The transform is axiomatized by its
/// images of the rank-4 sublattice span{e^beta, H e^beta, f e^beta, rho} plus a
/// user-supplied isometry of the D sublattices.
struct FMData {
    Surface source;
    Surface target;
    Int r0 = 1;
    Rat b = 0;
    NsVec beta;
    NsVec beta_prime;
    QMat d_map;  // target ns_rank x source ns_rank; restricts to the D-part isometry

    CohQ v0() const { return coh(source, 0, ns_scale(Rat(r0), source.f), b); }

    /// Lemma-level formula: beta-expand v as e^beta(r + pH + qf + D + a rho) and
    /// map to e^{beta'}((r/r0)H' - p r0 + (q/r0) rho + D' - a r0 f').
    CohQ apply(const CohQ& v) const {
        const BetaExpansion e = beta_expand(source, v, beta);
        const Rat rr(r0);
        NsVec ns = ns_scale(e.r / rr, target.H);
        ns = ns_sub(ns, ns_scale(e.a * rr, target.f));
        ns = ns_add(ns, mat_vec(d_map, e.D));
        const CohQ core = coh(target, -e.p * rr, std::move(ns), e.q / rr);
        return mul(target, exp_class(target, beta_prime), core);
    }

    /// QQ-linear extension to Gaussian coefficients.
    CohC apply_c(const CohC& v) const {
        return complexify(apply(re_part(v)), apply(im_part(v)));
    }
};

inline FMData make_fm(Surface source, Surface target, Int r0, const NsVec& beta,
                      const NsVec& beta_prime, QMat d_map = {}) {
    FMData fm;
    fm.source = std::move(source);
    fm.target = std::move(target);
    fm.r0 = std::move(r0);
    fm.beta = beta;
    fm.beta_prime = beta_prime;
    fm.b = Rat(fm.r0) * ns_pair(fm.source, beta, fm.source.f);
    fm.d_map = d_map.empty() ? identity_mat(fm.target.ns_rank) : std::move(d_map);
    return fm;
}

inline std::vector<Check> validate(const FMData& fm) {
    std::vector<Check> out;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        out.push_back({std::move(name), pass, std::move(detail)});
    };
    const Surface& src = fm.source;
    const Surface& tgt = fm.target;

    add("r0 is positive", fm.r0 > 0);
    add("source and target have equal chi(O)", src.chi == tgt.chi);
    add("target normalization (H'.H') = 0", ns_pair(tgt, tgt.H, tgt.H) == 0);
    add("target normalization (H'.f') = 1", ns_pair(tgt, tgt.H, tgt.f) == 1);

    const CohQ v0 = fm.v0();
    add("v0 is isotropic: <v0,v0> = 0", pair(src, v0, v0) == 0, rat_str(pair(src, v0, v0)));

    bool integral = coh_is_integral(v0);
    add("v0 is integral", integral);
    if (integral) {
        Int g = int_abs(numerator(v0.r));
        for (const auto& c : v0.ns) g = int_gcd(g, int_abs(numerator(c)));
        g = int_gcd(g, int_abs(numerator(v0.s)));
        add("v0 is primitive", g == 1, "coordinate gcd " + g.str());
    }

    const Rat orth = pair(src, exp_class(src, fm.beta), v0);
    add("<e^beta, v0> = 0", orth == 0, rat_str(orth));
    add("b matches r0 (beta.f)", fm.b == Rat(fm.r0) * ns_pair(src, fm.beta, src.f));

    bool shape = fm.d_map.size() == tgt.ns_rank;
    for (const auto& row : fm.d_map) shape = shape && row.size() == src.ns_rank;
    add("d_map has shape target_rank x source_rank", shape);
    if (shape) {
        const auto dbasis = d_sublattice_basis(src);
        bool lands = true, isom = true;
        std::vector<NsVec> images;
        images.reserve(dbasis.size());
        for (const auto& d : dbasis) images.push_back(mat_vec(fm.d_map, d));
        for (const auto& img : images) {
            lands = lands && ns_pair(tgt, img, tgt.f) == 0 && ns_pair(tgt, img, tgt.H) == 0;
        }
        for (std::size_t i = 0; i < dbasis.size(); ++i)
            for (std::size_t j = 0; j < dbasis.size(); ++j)
                isom = isom && ns_pair(tgt, images[i], images[j]) == ns_pair(src, dbasis[i], dbasis[j]);
        add("d_map lands in f'-perp /\\ H'-perp", lands);
        add("d_map is an isometry of D sublattices", isom);
    }

    // Pairing preservation on span{e^beta, H e^beta, f e^beta, rho}.
    const CohQ eb = exp_class(src, fm.beta);
    const std::vector<CohQ> basis = {eb, mul(src, coh_ns(src, src.H), eb),
                                     mul(src, coh_ns(src, src.f), eb), coh_rho(src)};
    bool gram_ok = true;
    for (const auto& u : basis)
        for (const auto& w : basis)
            gram_ok = gram_ok && pair(tgt, fm.apply(u), fm.apply(w)) == pair(src, u, w);
    add("images of the rank-4 sublattice preserve the pairing", gram_ok);

    return out;
}

struct FMMatrix {
    QMat M;      // on basis (e^beta, H e^beta, f e^beta, rho) -> (e^beta', H'e^beta', f'e^beta', rho)
    QMat M_inv;
    Rat det;
    QMat d_block;
};

inline FMMatrix matrix(const FMData& fm) {
    const Rat r0(fm.r0);
    QMat m(4, QVec(4, Rat(0)));
    m[0][1] = -r0;
    m[1][0] = 1 / r0;
    m[2][3] = -r0;
    m[3][2] = 1 / r0;
    auto [inv, det] = mat_inverse(m);
    return {std::move(m), std::move(inv), std::move(det), fm.d_map};
}

struct ComplexImage {
    Gauss scale;  // -r0 z
    CohC image;   // e^{beta' - (1/(r0^2 z))H' + w f'}
};

/// Image of the exponential class e^{beta + zH + wf} for Gaussian-rational z, w:
/// Phi(e^{beta+zH+wf}) = -r0 z e^{beta' + (-1/(r0^2 z))H' + w f'}.
inline ComplexImage apply_complex(const FMData& fm, const Gauss& z, const Gauss& w) {
    if (is_zero(z)) throw std::domain_error("apply_complex: z = 0 is a singular parameter");
    const Surface& src = fm.source;
    const Surface& tgt = fm.target;
    const Rat r0(fm.r0);

    std::vector<Gauss> zsrc(src.ns_rank);
    for (std::size_t i = 0; i < src.ns_rank; ++i)
        zsrc[i] = Gauss{fm.beta[i]} + z * src.H[i] + w * src.f[i];
    const CohC source_exp = exp_ns<Gauss>(src, std::move(zsrc));

    const Gauss u = -(inverse(z) * (Rat(1) / (r0 * r0)));
    std::vector<Gauss> ztgt(tgt.ns_rank);
    for (std::size_t i = 0; i < tgt.ns_rank; ++i)
        ztgt[i] = Gauss{fm.beta_prime[i]} + u * tgt.H[i] + w * tgt.f[i];
    CohC image = exp_ns<Gauss>(tgt, std::move(ztgt));

    const Gauss sc = -(z * r0);
    if (fm.apply_c(source_exp) != scale(sc, image))
        throw std::logic_error("apply_complex: closed form disagrees with the linear map");
    return {sc, std::move(image)};
}

struct StabilityImage {
    long quarter_turns = 1;  // the alpha action: exp(-pi i alpha) = (-i) * r0 m
    Rat scale;
    NsVec beta_prime;
    NsVec omega_prime;  // (1/(r0^2 m))(H' + r0^2 m^2 n f')
    bool hyp_volume = false;  // n > (r0^2/2) chi
    bool hyp_twist = false;   // n > l r0^3/(2n) + chi/2
};

/// Transported stability parameters of the FM image, with the proposition's
/// two hypotheses evaluated and the charge identity
/// Z-hat_{(beta, m H_n)} = (-i r0 m) Z-hat_{(beta', omega')} o Phi asserted on
/// a fixed sample.
inline StabilityImage stability_image(const FMData& fm, const Rat& m, const Rat& n) {
    if (m <= 0 || n <= 0) throw std::domain_error("stability_image requires m, n > 0");
    const Surface& src = fm.source;
    const Surface& tgt = fm.target;
    const Rat r0(fm.r0);
    const Rat r0sq_m = r0 * r0 * m;

    StabilityImage out;
    out.quarter_turns = 1;
    out.scale = r0 * m;
    out.beta_prime = fm.beta_prime;
    out.omega_prime =
        ns_add(ns_scale(1 / r0sq_m, tgt.H), ns_scale(m * n, tgt.f));
    out.hyp_volume = n > r0 * r0 * Rat(src.chi) / 2;
    out.hyp_twist = n > Rat(src.integrality_scale_l) * r0 * r0 * r0 / (2 * n) + Rat(src.chi) / 2;

    const NsVec omega_src = ns_scale(m, ns_add(src.H, ns_scale(n, src.f)));
    const Gauss factor{0, -(r0 * m)};
    std::vector<CohQ> sample = {exp_class(src, fm.beta),
                                mul(src, coh_ns(src, src.H), exp_class(src, fm.beta)),
                                mul(src, coh_ns(src, src.f), exp_class(src, fm.beta)),
                                coh_rho(src)};
    for (std::size_t i = 0; i < src.ns_rank; ++i) {
        NsVec e = ns_zero(src);
        e[i] = 1;
        sample.push_back(coh(src, 2, e, 3));
    }
    for (const auto& v : sample) {
        const Gauss lhs = eval_charge(src, fm.beta, omega_src, v);
        const Gauss rhs = factor * eval_charge(tgt, fm.beta_prime, out.omega_prime, fm.apply(v));
        if (lhs != rhs) throw std::logic_error("stability_image: charge identity failed");
    }
    return out;
}

struct Dim1Image {
    CohQ image;  // -Phi(v), the shift by [-1]
    Rat d;       // a r0 / (2 r0^2 m^2 n)
    bool regime_ok = false;
};

/// The rank-0 transport: for v = e^beta(xi + a rho) with a > 0, returns -Phi(v)
/// together with the displayed large-volume inequality on the target side.
inline Dim1Image dim1_image(const FMData& fm, const CohQ& v, const Rat& m, const Rat& n) {
    if (m <= 0 || n <= 0) throw std::domain_error("dim1_image requires m, n > 0");
    const BetaExpansion e = beta_expand(fm.source, v, fm.beta);
    if (e.r != 0) throw RegimeError("dim1_image requires rank 0 in the beta expansion");
    if (e.a <= 0) throw RegimeError("dim1_image requires a > 0 in the beta expansion");
    const Surface& tgt = fm.target;
    const Rat r0(fm.r0);
    const Rat r0sq_m2_n = r0 * r0 * m * m * n;

    Dim1Image out;
    out.image = -fm.apply(v);
    out.d = e.a * r0 / (2 * r0sq_m2_n);

    const NsVec L = ns_add(tgt.H, ns_scale(r0sq_m2_n, tgt.f));
    const Rat L2 = ns_pair(tgt, L, L);
    const Rat omega2 = 2 * n / (r0 * r0);
    const Rat lhs = (omega2 - Rat(tgt.chi)) / 2;
    const Rat rhs = out.d / delta_min(tgt, L) * (out.d * out.d * L2 - 2 * e.p * e.q) / 2;
    out.regime_ok = lhs > rhs;
    return out;
}

}  // namespace mukai
