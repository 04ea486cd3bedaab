#pragma once

#include "mukai/fm_transform.hpp"
#include "mukai/surface.hpp"
#include "mukai/walls.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mukai {

using Json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    std::vector<std::string> violations;

    explicit ConfigError(std::vector<std::string> v)
        : std::runtime_error(join(v)), violations(std::move(v)) {}

    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid configuration:";
        for (const auto& line : v) s += "\n  " + line;
        return s;
    }
};

struct WallConfig {
    Int ell = 1;
    NsVec beta_prime;
    Rat m;
    Rat n;
    Rat t_max;
    int k_bound = 3;

    friend bool operator==(const WallConfig&, const WallConfig&) = default;
};

struct ConfigFile {
    Surface surface;
    std::optional<FMData> fm;  // fm.source duplicates `surface`
    std::optional<WallConfig> wall;
};

inline bool operator==(const Surface& a, const Surface& b) {
    return a.name == b.name && a.chi == b.chi && a.ns_rank == b.ns_rank && a.gram == b.gram &&
           a.f == b.f && a.H == b.H && a.K == b.K &&
           a.minus2_fiber_classes == b.minus2_fiber_classes &&
           a.integrality_scale_l == b.integrality_scale_l;
}

inline bool operator==(const FMData& a, const FMData& b) {
    return a.source == b.source && a.target == b.target && a.r0 == b.r0 && a.b == b.b &&
           a.beta == b.beta && a.beta_prime == b.beta_prime && a.d_map == b.d_map;
}

inline bool operator==(const ConfigFile& a, const ConfigFile& b) {
    return a.surface == b.surface && a.fm == b.fm && a.wall == b.wall;
}

namespace detail {

struct Loader {
    std::vector<std::string> errors;

    void fail(const std::string& path, const std::string& msg) { errors.push_back(path + ": " + msg); }

    void reject_unknown(const Json& j, const std::string& path, std::set<std::string> known) {
        for (const auto& [key, value] : j.items())
            if (!known.count(key)) fail(path + "." + key, "unknown field");
    }

    Rat rat(const Json& j, const std::string& path) {
        if (j.is_number_float()) {
            fail(path, "exact rationals required, floats are rejected");
            return 0;
        }
        if (j.is_number_integer()) return Rat(j.get<long long>());
        if (j.is_string()) {
            try {
                return parse_rat(j.get<std::string>());
            } catch (const std::exception& e) {
                fail(path, e.what());
                return 0;
            }
        }
        fail(path, "expected an integer or a \"p/q\" string");
        return 0;
    }

    Int integer(const Json& j, const std::string& path) {
        const Rat r = rat(j, path);
        if (!is_integer(r)) {
            fail(path, "expected an integer");
            return 0;
        }
        return numerator(r);
    }

    NsVec vec(const Json& j, const std::string& path) {
        if (!j.is_array()) {
            fail(path, "expected an array of rationals");
            return {};
        }
        NsVec v;
        for (std::size_t i = 0; i < j.size(); ++i)
            v.push_back(rat(j[i], path + "[" + std::to_string(i) + "]"));
        return v;
    }

    QMat mat(const Json& j, const std::string& path) {
        if (!j.is_array()) {
            fail(path, "expected a matrix (array of arrays)");
            return {};
        }
        QMat m;
        for (std::size_t i = 0; i < j.size(); ++i)
            m.push_back(vec(j[i], path + "[" + std::to_string(i) + "]"));
        return m;
    }

    Surface surface(const Json& j, const std::string& path) {
        Surface s;
        if (!j.is_object()) {
            fail(path, "expected a surface object");
            return s;
        }
        reject_unknown(j, path,
                       {"name", "chi", "ns_rank", "gram", "f", "H", "K", "minus2_fiber_classes",
                        "integrality_scale_l"});
        for (const char* key : {"chi", "ns_rank", "gram", "f", "H", "K"})
            if (!j.contains(key)) fail(path + "." + key, "missing required field");
        if (!errors.empty()) return s;

        if (j.contains("name")) s.name = j["name"].get<std::string>();
        s.chi = integer(j["chi"], path + ".chi");
        const Int rank = integer(j["ns_rank"], path + ".ns_rank");
        if (rank < 1) fail(path + ".ns_rank", "must be a positive integer");
        s.ns_rank = static_cast<std::size_t>(rank);
        s.gram = mat(j["gram"], path + ".gram");
        s.f = vec(j["f"], path + ".f");
        s.H = vec(j["H"], path + ".H");
        s.K = vec(j["K"], path + ".K");
        if (j.contains("minus2_fiber_classes")) {
            const Json& list = j["minus2_fiber_classes"];
            if (!list.is_array()) {
                fail(path + ".minus2_fiber_classes", "expected an array");
            } else {
                for (std::size_t i = 0; i < list.size(); ++i)
                    s.minus2_fiber_classes.push_back(
                        vec(list[i], path + ".minus2_fiber_classes[" + std::to_string(i) + "]"));
            }
        }
        if (j.contains("integrality_scale_l"))
            s.integrality_scale_l = integer(j["integrality_scale_l"], path + ".integrality_scale_l");
        return s;
    }
};

inline Json rat_json(const Rat& x) {
    if (is_integer(x) && rat_abs(x) < 1000000000) return numerator(x).convert_to<long long>();
    return rat_str(x);
}

inline Json vec_json(const NsVec& v) {
    Json j = Json::array();
    for (const auto& c : v) j.push_back(rat_json(c));
    return j;
}

inline Json mat_json(const QMat& m) {
    Json j = Json::array();
    for (const auto& row : m) j.push_back(vec_json(row));
    return j;
}

inline Json surface_json(const Surface& s) {
    Json j;
    j["name"] = s.name;
    j["chi"] = s.chi.convert_to<long long>();
    j["ns_rank"] = s.ns_rank;
    j["gram"] = mat_json(s.gram);
    j["f"] = vec_json(s.f);
    j["H"] = vec_json(s.H);
    j["K"] = vec_json(s.K);
    Json fibers = Json::array();
    for (const auto& d : s.minus2_fiber_classes) fibers.push_back(vec_json(d));
    j["minus2_fiber_classes"] = fibers;
    j["integrality_scale_l"] = s.integrality_scale_l.convert_to<long long>();
    return j;
}

}  // namespace detail

inline ConfigFile parse_config(const Json& j) {
    detail::Loader L;
    ConfigFile cfg;
    if (!j.is_object()) throw ConfigError({"top level: expected an object"});
    L.reject_unknown(j, "config", {"surface", "fm", "wall"});
    if (!j.contains("surface")) L.fail("config.surface", "missing required field");
    if (!L.errors.empty()) throw ConfigError(std::move(L.errors));

    cfg.surface = L.surface(j["surface"], "surface");
    if (!L.errors.empty()) throw ConfigError(std::move(L.errors));
    for (const auto& c : validate_surface(cfg.surface))
        if (!c.pass) L.fail("surface", c.name + (c.detail.empty() ? "" : " (got " + c.detail + ")"));

    if (j.contains("fm")) {
        const Json& jf = j["fm"];
        L.reject_unknown(jf, "fm", {"r0", "b", "beta", "target", "beta_prime", "d_map"});
        for (const char* key : {"r0", "beta", "target", "beta_prime"})
            if (!jf.contains(key)) L.fail(std::string("fm.") + key, "missing required field");
        if (!L.errors.empty()) throw ConfigError(std::move(L.errors));

        FMData fm;
        fm.source = cfg.surface;
        fm.target = L.surface(jf["target"], "fm.target");
        if (L.errors.empty())
            for (const auto& c : validate_surface(fm.target))
                if (!c.pass)
                    L.fail("fm.target", c.name + (c.detail.empty() ? "" : " (got " + c.detail + ")"));
        fm.r0 = L.integer(jf["r0"], "fm.r0");
        fm.beta = L.vec(jf["beta"], "fm.beta");
        fm.beta_prime = L.vec(jf["beta_prime"], "fm.beta_prime");
        fm.b = jf.contains("b") ? L.rat(jf["b"], "fm.b")
                                : (L.errors.empty()
                                       ? Rat(fm.r0) * ns_pair(fm.source, fm.beta, fm.source.f)
                                       : Rat(0));
        fm.d_map = jf.contains("d_map") ? L.mat(jf["d_map"], "fm.d_map")
                                        : identity_mat(fm.target.ns_rank);
        if (!L.errors.empty()) throw ConfigError(std::move(L.errors));
        for (const auto& c : validate(fm))
            if (!c.pass) L.fail("fm", c.name + (c.detail.empty() ? "" : " (got " + c.detail + ")"));
        cfg.fm = std::move(fm);
    }

    if (j.contains("wall")) {
        const Json& jw = j["wall"];
        L.reject_unknown(jw, "wall", {"ell", "beta_prime", "m", "n", "t_max", "k_bound"});
        for (const char* key : {"ell", "beta_prime", "m", "n", "t_max"})
            if (!jw.contains(key)) L.fail(std::string("wall.") + key, "missing required field");
        if (!L.errors.empty()) throw ConfigError(std::move(L.errors));

        WallConfig w;
        w.ell = L.integer(jw["ell"], "wall.ell");
        if (w.ell < 1) L.fail("wall.ell", "must be >= 1");
        w.beta_prime = L.vec(jw["beta_prime"], "wall.beta_prime");
        w.m = L.rat(jw["m"], "wall.m");
        w.n = L.rat(jw["n"], "wall.n");
        w.t_max = L.rat(jw["t_max"], "wall.t_max");
        if (w.m <= 0) L.fail("wall.m", "must be positive");
        if (w.n <= 0) L.fail("wall.n", "must be positive");
        if (w.t_max <= 0) L.fail("wall.t_max", "must be positive");
        if (jw.contains("k_bound")) {
            const Int kb = L.integer(jw["k_bound"], "wall.k_bound");
            if (kb < 1)
                L.fail("wall.k_bound", "must be >= 1");
            else
                w.k_bound = static_cast<int>(kb);
        }
        cfg.wall = std::move(w);
    }

    if (!L.errors.empty()) throw ConfigError(std::move(L.errors));
    return cfg;
}

inline ConfigFile load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file: " + path});
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError({std::string("JSON parse error: ") + e.what()});
    }
    return parse_config(j);
}

inline Json config_json(const ConfigFile& cfg) {
    Json j;
    j["surface"] = detail::surface_json(cfg.surface);
    if (cfg.fm) {
        Json jf;
        jf["r0"] = cfg.fm->r0.convert_to<long long>();
        jf["b"] = detail::rat_json(cfg.fm->b);
        jf["beta"] = detail::vec_json(cfg.fm->beta);
        jf["target"] = detail::surface_json(cfg.fm->target);
        jf["beta_prime"] = detail::vec_json(cfg.fm->beta_prime);
        jf["d_map"] = detail::mat_json(cfg.fm->d_map);
        j["fm"] = jf;
    }
    if (cfg.wall) {
        Json jw;
        jw["ell"] = cfg.wall->ell.convert_to<long long>();
        jw["beta_prime"] = detail::vec_json(cfg.wall->beta_prime);
        jw["m"] = detail::rat_json(cfg.wall->m);
        jw["n"] = detail::rat_json(cfg.wall->n);
        jw["t_max"] = detail::rat_json(cfg.wall->t_max);
        jw["k_bound"] = cfg.wall->k_bound;
        j["wall"] = jw;
    }
    return j;
}

}  // namespace mukai
