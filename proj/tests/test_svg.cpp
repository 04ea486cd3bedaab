#include "mukai/svg_plot.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mukai;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("empty scan renders axes only") {
    const std::string svg = svg_scan_plot({}, 10);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(count_of(svg, "crimson") == 0);
    CHECK(svg.find("<script") == std::string::npos);
    CHECK(svg_scan_plot({}, 10) == svg);
}

TEST_CASE("hits render as labeled vertical lines ordered left to right") {
    // ell = 3 puts three distinct crossings inside t <= 10 at these parameters.
    const WallProblem p = make_wall_problem(fixtures::k3_with_section(), 3);
    ScanParams sp;
    sp.beta_prime = {-1, 0};
    sp.r0 = 1;
    sp.m = 10;
    sp.n = 5;
    sp.t_max = 10;
    auto hits = scan(p, sp);
    REQUIRE(hits.size() == 3);

    const std::string svg = svg_scan_plot(hits, sp.t_max);
    CHECK(count_of(svg, "crimson") == 3);
    for (const auto& h : hits) {
        CHECK(svg.find("t^2=" + rat_str(h.t2)) != std::string::npos);
        CHECK(svg.find(key_str(h.wall.key)) != std::string::npos);
    }

    // Left-to-right order follows the sorted t^2 values.
    std::size_t prev = 0;
    for (const auto& h : hits) {
        const std::size_t at = svg.find("t^2=" + rat_str(h.t2));
        CHECK(at > prev);
        prev = at;
    }

    CHECK(svg_scan_plot(hits, sp.t_max) == svg);
}
