#pragma once

#include "mukai/cohomology.hpp"
#include "mukai/surface.hpp"

#include <random>

namespace fixtures {

// Elliptic K3 with a section sigma: basis (sigma, f), H = sigma + f.
inline mukai::Surface k3_with_section() {
    mukai::Surface s;
    s.name = "k3-with-section";
    s.chi = 2;
    s.ns_rank = 2;
    s.gram = {{-2, 1}, {1, 0}};
    s.f = {0, 1};
    s.H = {1, 1};
    s.K = {0, 0};
    s.integrality_scale_l = 1;
    return s;
}

// Same surface with an I2 fiber: extra component class C with (C^2) = -2,
// (C.f) = (C.H) = (C.sigma) = 0. Basis (sigma, f, C).
inline mukai::Surface k3_with_i2_fiber() {
    mukai::Surface s;
    s.name = "k3-with-i2-fiber";
    s.chi = 2;
    s.ns_rank = 3;
    s.gram = {{-2, 1, 0}, {1, 0, 0}, {0, 0, -2}};
    s.f = {0, 1, 0};
    s.H = {1, 1, 0};
    s.K = {0, 0, 0};
    s.minus2_fiber_classes = {{0, 0, 1}};
    s.integrality_scale_l = 1;
    return s;
}

struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

    mukai::Rat rat(long lo = -9, long hi = 9, long max_den = 3) {
        return mukai::Rat(pick(lo, hi), pick(1, max_den));
    }

    mukai::NsVec ns(const mukai::Surface& s, long lo = -9, long hi = 9, long max_den = 3) {
        mukai::NsVec v(s.ns_rank);
        for (auto& c : v) c = rat(lo, hi, max_den);
        return v;
    }

    mukai::CohQ coh(const mukai::Surface& s, long lo = -9, long hi = 9, long max_den = 3) {
        return mukai::coh(s, rat(lo, hi, max_den), ns(s, lo, hi, max_den), rat(lo, hi, max_den));
    }
};

}  // namespace fixtures
