// mukai-kit: exact computations in the algebraic Mukai lattice of an elliptic
// surface. All results are exact rationals; floats appear only under
// "display".

#include "mukai/charge.hpp"
#include "mukai/cohomology.hpp"
#include "mukai/config.hpp"
#include "mukai/fm_transform.hpp"
#include "mukai/report.hpp"
#include "mukai/svg_plot.hpp"
#include "mukai/walls.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace mukai;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitRegime = 2;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

NsVec parse_ns(const Surface& s, const std::string& text, const char* what) {
    const auto parts = split_commas(text);
    if (parts.size() != s.ns_rank)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(s.ns_rank) + " comma-separated rationals");
    NsVec v;
    for (const auto& p : parts) v.push_back(parse_rat(p));
    return v;
}

// "r,<ns coords>,rho"
CohQ parse_coh(const Surface& s, const std::string& text, const char* what) {
    const auto parts = split_commas(text);
    if (parts.size() != s.ns_rank + 2)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(s.ns_rank + 2) + " comma-separated rationals");
    NsVec ns;
    for (std::size_t i = 1; i + 1 < parts.size(); ++i) ns.push_back(parse_rat(parts[i]));
    return coh(s, parse_rat(parts.front()), std::move(ns), parse_rat(parts.back()));
}

const FMData& need_fm(const ConfigFile& cfg) {
    if (!cfg.fm) throw std::invalid_argument("this command needs an \"fm\" block in the config");
    return *cfg.fm;
}

const WallConfig& need_wall(const ConfigFile& cfg) {
    if (!cfg.wall) throw std::invalid_argument("this command needs a \"wall\" block in the config");
    return *cfg.wall;
}

void set_rat(Json& j, const std::string& key, const Rat& x) { j[key] = detail::rat_json(x); }

struct Cli {
    std::string config_path;
    std::string format = "json";
    std::string plot_path;

    // Per-command raw option strings; parsed lazily against the loaded surface.
    std::string u_text, v_text, ch_text, beta_text, omega_text, L_text;
    std::string m_text, n_text, t_text, t_max_text;
    std::optional<long long> ell_flag;
    std::optional<int> k_bound_flag;

    ConfigFile cfg;

    Rat rat_flag(const std::string& text, const char* what) const {
        if (text.empty()) throw std::invalid_argument(std::string(what) + " is required");
        return parse_rat(text);
    }

    WallProblem wall_problem() const {
        Int ell = ell_flag ? Int(*ell_flag) : (cfg.wall ? cfg.wall->ell : Int(1));
        return make_wall_problem(cfg.surface, ell);
    }

    int run_validate(Json& report) {
        std::vector<Check> checks;
        for (auto c : validate_surface(cfg.surface)) {
            c.name = "surface: " + c.name;
            checks.push_back(c);
        }
        if (cfg.fm)
            for (auto c : validate(*cfg.fm)) {
                c.name = "fm: " + c.name;
                checks.push_back(c);
            }
        for (const auto& c : checks) add_check(report, c);
        const bool ok = all_pass(checks);
        report["results"]["valid"] = ok;
        return ok ? kExitOk : kExitInput;
    }

    int run_pair(Json& report) {
        const CohQ u = parse_coh(cfg.surface, u_text, "--u");
        const CohQ w = parse_coh(cfg.surface, v_text, "--v");
        report["inputs"]["u"] = coh_json(u);
        report["inputs"]["v"] = coh_json(w);
        const Rat val = pair(cfg.surface, u, w);
        set_rat(report["results"], "pair", val);
        report["display"]["pair"] = display_float(val);
        return kExitOk;
    }

    int run_charge(Json& report) {
        if (u_text.empty() == ch_text.empty())
            throw std::invalid_argument("charge needs exactly one of --v (Mukai) or --ch (Chern)");
        const StabilityParams p{parse_ns(cfg.surface, beta_text, "--beta"),
                                parse_ns(cfg.surface, omega_text, "--omega")};
        report["inputs"]["beta"] = detail::vec_json(p.beta);
        report["inputs"]["omega"] = detail::vec_json(p.omega);
        Gauss z;
        if (!u_text.empty()) {
            const CohQ v = parse_coh(cfg.surface, u_text, "--v");
            report["inputs"]["v"] = coh_json(v);
            report["inputs"]["kind"] = "mukai";
            z = z_hat(cfg.surface, p, v);
        } else {
            const CohQ ch = parse_coh(cfg.surface, ch_text, "--ch");
            report["inputs"]["ch"] = coh_json(ch);
            report["inputs"]["kind"] = "chern";
            z = z_geo(cfg.surface, p, ch);
        }
        report["results"]["charge"] = gauss_json(z);
        report["display"]["charge"] = display_float(z.re) + " + " + display_float(z.im) + "i";
        return kExitOk;
    }

    int run_fm_apply(Json& report) {
        const FMData& fm = need_fm(cfg);
        const CohQ v = parse_coh(fm.source, v_text, "--v");
        report["inputs"]["v"] = coh_json(v);
        report["results"]["image"] = coh_json(fm.apply(v));
        return kExitOk;
    }

    int run_fm_stability(Json& report) {
        const FMData& fm = need_fm(cfg);
        const Rat m = rat_flag(m_text, "--m"), n = rat_flag(n_text, "--n");
        set_rat(report["inputs"], "m", m);
        set_rat(report["inputs"], "n", n);
        const StabilityImage si = stability_image(fm, m, n);
        Json alpha;
        alpha["quarter_turns"] = si.quarter_turns;
        set_rat(alpha, "scale", si.scale);
        report["results"]["alpha"] = alpha;
        report["results"]["beta_prime"] = detail::vec_json(si.beta_prime);
        report["results"]["omega_prime"] = detail::vec_json(si.omega_prime);
        report["results"]["hyp_volume"] = si.hyp_volume;
        report["results"]["hyp_twist"] = si.hyp_twist;
        add_check(report, {"n > (r0^2/2) chi", si.hyp_volume, ""});
        add_check(report, {"n > l r0^3/(2n) + chi/2", si.hyp_twist, ""});
        return si.hyp_volume && si.hyp_twist ? kExitOk : kExitRegime;
    }

    int run_lvl_check(Json& report) {
        const CohQ v = parse_coh(cfg.surface, v_text, "--v");
        const NsVec beta = parse_ns(cfg.surface, beta_text, "--beta");
        const NsVec L = parse_ns(cfg.surface, L_text, "--L");
        const Rat t = rat_flag(t_text, "--t");
        report["inputs"]["v"] = coh_json(v);
        report["inputs"]["beta"] = detail::vec_json(beta);
        report["inputs"]["L"] = detail::vec_json(L);
        set_rat(report["inputs"], "t", t);
        const bool holds = lvl_check(cfg.surface, v, beta, L, t);
        report["results"]["holds"] = holds;
        set_rat(report["results"], "delta", delta_min(cfg.surface, L));
        return holds ? kExitOk : kExitRegime;
    }

    int run_walls_classify(Json& report) {
        const WallProblem p = wall_problem();
        const int k_bound = k_bound_flag ? *k_bound_flag : (cfg.wall ? cfg.wall->k_bound : 3);
        report["inputs"]["ell"] = p.ell.convert_to<long long>();
        report["inputs"]["k_bound"] = k_bound;
        const auto walls = classify_f_walls(p, k_bound);
        Json list = Json::array();
        for (const auto& w : walls) list.push_back(wall_json(p, w));
        report["results"]["count"] = walls.size();
        report["results"]["walls"] = list;
        return kExitOk;
    }

    int run_walls_scan(Json& report) {
        const WallConfig& wc = need_wall(cfg);
        const WallProblem p = wall_problem();
        ScanParams sp;
        sp.beta_prime = wc.beta_prime;
        sp.r0 = cfg.fm ? cfg.fm->r0 : Int(1);
        sp.m = m_text.empty() ? wc.m : parse_rat(m_text);
        sp.n = n_text.empty() ? wc.n : parse_rat(n_text);
        sp.t_max = t_max_text.empty() ? wc.t_max : parse_rat(t_max_text);
        report["inputs"]["ell"] = p.ell.convert_to<long long>();
        report["inputs"]["beta_prime"] = detail::vec_json(sp.beta_prime);
        report["inputs"]["r0"] = sp.r0.convert_to<long long>();
        set_rat(report["inputs"], "m", sp.m);
        set_rat(report["inputs"], "n", sp.n);
        set_rat(report["inputs"], "t_max", sp.t_max);

        const auto hits = scan(p, sp);
        Json list = Json::array();
        for (const auto& h : hits) {
            Json row;
            set_rat(row, "t2", h.t2);
            row["t2_display"] = display_float(h.t2);
            row["key"] = key_json(h.wall.key);
            row["tag"] = tag_str(h.wall.tag);
            row["u"] = coh_json(h.wall.u);
            list.push_back(row);
        }
        report["results"]["count"] = hits.size();
        report["results"]["hits"] = list;
        if (!plot_path.empty()) {
            write_file(plot_path, svg_scan_plot(hits, sp.t_max));
            report["results"]["plot"] = plot_path;
        }
        return kExitOk;
    }

    int run_chamber(Json& report) {
        const WallConfig& wc = need_wall(cfg);
        const WallProblem p = wall_problem();
        const Rat m = m_text.empty() ? wc.m : parse_rat(m_text);
        const Rat n = n_text.empty() ? wc.n : parse_rat(n_text);
        const Int r0 = cfg.fm ? cfg.fm->r0 : Int(1);
        report["inputs"]["beta_prime"] = detail::vec_json(wc.beta_prime);
        report["inputs"]["r0"] = r0.convert_to<long long>();
        set_rat(report["inputs"], "m", m);
        set_rat(report["inputs"], "n", n);
        const ChamberSignature c = chamber_signature(p, wc.beta_prime, r0, m, n);
        set_rat(report["results"], "coeff_nu_beta", c.c_nu_beta);
        set_rat(report["results"], "coeff_H", c.c_H);
        set_rat(report["results"], "coeff_f", c.c_f);
        report["results"]["vec"] = coh_json(c.vec);
        report["display"]["coeff_nu_beta"] = display_float(c.c_nu_beta);
        report["display"]["coeff_H"] = display_float(c.c_H);
        return kExitOk;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mukai-kit: exact Mukai-lattice computations on elliptic surfaces"};
    app.fallthrough();
    Cli cli;

    app.add_option("--config", cli.config_path, "JSON configuration file")->required();
    app.add_option("--format", cli.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    std::string command;
    auto remember = [&command](const std::string& name) {
        return [&command, name]() { command = name; };
    };

    app.add_subcommand("validate", "Check all configured invariants")
        ->callback(remember("validate"));

    auto* c_pair = app.add_subcommand("pair", "Mukai pairing of two vectors");
    c_pair->add_option("--u", cli.u_text, "First vector: r,<ns>,rho")->required();
    c_pair->add_option("--v", cli.v_text, "Second vector: r,<ns>,rho")->required();
    c_pair->callback(remember("pair"));

    auto* c_charge = app.add_subcommand("charge", "Central charge Z-hat (Mukai) or Z (Chern)");
    c_charge->add_option("--beta", cli.beta_text, "beta NS coordinates")->required();
    c_charge->add_option("--omega", cli.omega_text, "omega NS coordinates")->required();
    c_charge->add_option("--v", cli.u_text, "Mukai vector: r,<ns>,rho");
    c_charge->add_option("--ch", cli.ch_text, "Chern character: r,<ns>,rho");
    c_charge->callback(remember("charge"));

    auto* c_fma = app.add_subcommand("fm-apply", "Cohomological Fourier-Mukai image");
    c_fma->add_option("--v", cli.v_text, "Vector on the source: r,<ns>,rho")->required();
    c_fma->callback(remember("fm-apply"));

    auto* c_fms = app.add_subcommand("fm-stability", "Transported stability parameters");
    c_fms->add_option("--m", cli.m_text, "m > 0")->required();
    c_fms->add_option("--n", cli.n_text, "n > 0")->required();
    c_fms->callback(remember("fm-stability"));

    auto* c_lvl = app.add_subcommand("lvl-check", "Large-volume-limit inequality");
    c_lvl->add_option("--v", cli.v_text, "Mukai vector: r,<ns>,rho")->required();
    c_lvl->add_option("--beta", cli.beta_text, "beta NS coordinates")->required();
    c_lvl->add_option("--L", cli.L_text, "Ample class L")->required();
    c_lvl->add_option("--t", cli.t_text, "Scale t")->required();
    c_lvl->callback(remember("lvl-check"));

    auto* c_wcl = app.add_subcommand("walls-classify", "Walls through [f] for v = 1 - ell rho");
    c_wcl->add_option("--ell", cli.ell_flag, "ell >= 1");
    c_wcl->add_option("--k-bound", cli.k_bound_flag, "fiber-degree bound");
    c_wcl->callback(remember("walls-classify"));

    auto* c_wsc = app.add_subcommand("walls-scan", "Ordered wall crossings along t");
    c_wsc->add_option("--ell", cli.ell_flag, "ell >= 1");
    c_wsc->add_option("--m", cli.m_text, "override wall.m");
    c_wsc->add_option("--n", cli.n_text, "override wall.n");
    c_wsc->add_option("--t-max", cli.t_max_text, "override wall.t_max");
    c_wsc->add_option("--plot", cli.plot_path, "write an SVG diagram");
    c_wsc->callback(remember("walls-scan"));

    auto* c_chb = app.add_subcommand("chamber", "Chamber signature near [f']");
    c_chb->add_option("--ell", cli.ell_flag, "ell >= 1");
    c_chb->add_option("--m", cli.m_text, "override wall.m");
    c_chb->add_option("--n", cli.n_text, "override wall.n");
    c_chb->callback(remember("chamber"));

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    Json report = report_skeleton(command);
    int rc = kExitOk;
    try {
        cli.cfg = load_config(cli.config_path);
        report["inputs"]["surface"] = cli.cfg.surface.name;
        if (command == "validate") rc = cli.run_validate(report);
        else if (command == "pair") rc = cli.run_pair(report);
        else if (command == "charge") rc = cli.run_charge(report);
        else if (command == "fm-apply") rc = cli.run_fm_apply(report);
        else if (command == "fm-stability") rc = cli.run_fm_stability(report);
        else if (command == "lvl-check") rc = cli.run_lvl_check(report);
        else if (command == "walls-classify") rc = cli.run_walls_classify(report);
        else if (command == "walls-scan") rc = cli.run_walls_scan(report);
        else if (command == "chamber") rc = cli.run_chamber(report);
    } catch (const RegimeError& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    std::cout << (cli.format == "csv" ? render_csv(report) : render_json(report));
    return rc;
}
