#pragma once

// Command-line front end. Subcommands: knead, markov, theta, verify,
// enumerate, laps, scan. Exit codes: 0 success, 2 parse/usage error,
// 3 structured domain error, 4 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bimodal/maps.hpp"
#include "bimodal/serialize.hpp"

namespace bimodal {

namespace cli_detail {

struct Options {
    std::string format = "text"; // text | json | csv
    std::string out_path;
    double tol = 1e-12;
    int jobs = 1;
};

inline void emit(const Options& opt, std::ostream& fallback, const std::string& payload) {
    if (opt.out_path.empty()) {
        fallback << payload;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file " + opt.out_path);
    f << payload;
}

inline MapFamily make_family(const std::string& name, double param) {
    if (name == "g_beta") return make_g_beta(param);
    if (name == "G_alpha") return make_G_alpha_conjugated(param);
    throw DomainError("unknown family '" + name + "' (expected g_beta or G_alpha)");
}

inline Json family_json(const std::string& name, double param) {
    Json j;
    j["family"] = name;
    j[name == "g_beta" ? "beta" : "alpha"] = param;
    return j;
}

inline std::string knead_text(const Json& j) {
    std::ostringstream os;
    os << "sequence: " << j["sequence"].get<std::string>() << "\n";
    os << "period: " << j["period"].get<int>() << "\n";
    os << "admissible: " << (j["admissible"].get<bool>() ? "yes" : "no") << "\n";
    if (!j["admissible"].get<bool>()) return os.str();
    os << "bistable: " << (j["bistable"].get<bool>() ? "yes" : "no") << "\n";
    os << "u_p: " << j["u_p"].get<std::string>() << "\n";
    os << "D: " << j["kneading_determinant"].get<std::string>() << "\n";
    if (j.contains("t0")) os << "t0: " << j["t0"].get<std::string>() << "\n";
    os << "rho: " << j["rho"].get<std::string>() << "\n";
    if (j.contains("lap_series")) {
        os << "lap_series:";
        for (const auto& v : j["lap_series"]) os << " " << v.get<std::string>();
        os << "\n";
    }
    if (j.contains("d_series")) {
        os << "d_series:";
        for (const auto& v : j["d_series"]) os << " " << v.get<std::string>();
        os << "\n";
    }
    return os.str();
}

inline int cmd_knead(const std::string& seq_text, int lap_terms, std::optional<int> order,
                     const Options& opt, std::ostream& out) {
    PeriodicSequence s = parse_sequence(seq_text);
    Json j;
    j["sequence"] = to_string(s);
    j["period"] = s.period();
    bool admissible = is_admissible(s);
    j["admissible"] = admissible;
    int rc = 0;
    if (!admissible) {
        rc = 3;
    } else {
        bool bist = is_bistable(s);
        j["bistable"] = bist;
        j["u_p"] = to_string(u_poly(s));
        RationalFunction d = bist ? kneading_determinant_bistable(s) : kneading_determinant(s);
        j["kneading_determinant"] = to_string(d);
        GrowthNumber g = growth_number(d, opt.tol);
        if (g.t0) j["t0"] = format_double(*g.t0, 12);
        j["rho"] = format_double(g.rho, 12);
        if (lap_terms > 0) {
            Json lam = Json::array();
            for (const auto& c : lap_series(d, lap_terms)) lam.push_back(c.get_str());
            j["lap_series"] = std::move(lam);
        }
        if (order) {
            Json ds = Json::array();
            for (const auto& c : series_of_rational(d, *order).coeffs) ds.push_back(c.get_str());
            j["d_series"] = std::move(ds);
        }
    }
    emit(opt, out, opt.format == "json" ? j.dump(2) + "\n" : knead_text(j));
    return rc;
}

inline int cmd_markov(const std::string& seq_text, const Options& opt, std::ostream& out) {
    PeriodicSequence s = parse_sequence(seq_text);
    OrbitTable t = build_orbit_table(s);
    TransitionMatrix tm = transition_matrix(t);
    IntPolynomial cp = char_poly_det_I_minus_tM(tm.psi);
    double rho = spectral_radius(tm, opt.tol);
    if (opt.format == "json") {
        Json j;
        j["sequence"] = to_string(s);
        j["period"] = t.p;
        Json ws = Json::array();
        for (int k = 0; k < 2 * t.p; ++k)
            ws.push_back(to_string(t.v[static_cast<std::size_t>(t.sorted_to_v[static_cast<std::size_t>(k)])]));
        j["sorted_itineraries"] = std::move(ws);
        j["pi"] = to_json(t.pi);
        j["psi"] = to_json(tm.psi);
        j["charpoly"] = to_string(cp);
        j["spectral_radius"] = format_double(rho, 12);
        emit(opt, out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "sequence: " << to_string(s) << "\n";
        os << "pi:\n" << t.pi.to_text();
        os << "psi:\n" << tm.psi.to_text();
        os << "det(I - t*Psi): " << to_string(cp) << "\n";
        os << "spectral_radius: " << format_double(rho, 12) << "\n";
        emit(opt, out, os.str());
    }
    return 0;
}

inline int cmd_theta(const std::string& seq_text, const Options& opt, std::ostream& out) {
    PeriodicSequence s = parse_sequence(seq_text);
    HomologyData h = build_theta(s);
    IntPolynomial cp = char_poly_det_I_minus_tM(h.Theta);
    if (opt.format == "json") {
        Json j;
        j["sequence"] = to_string(s);
        j["period"] = h.p;
        Json sv = Json::array();
        for (int v : h.s) sv.push_back(v);
        j["s"] = std::move(sv);
        j["eta"] = to_json(h.eta);
        j["gamma"] = to_json(h.gamma);
        j["theta"] = to_json(h.Theta);
        j["charpoly"] = to_string(cp);
        emit(opt, out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "sequence: " << to_string(s) << "\n";
        os << "s:";
        for (int v : h.s) os << " " << v;
        os << "\n";
        os << "eta:\n" << h.eta.to_text();
        os << "gamma:\n" << h.gamma.to_text();
        os << "theta:\n" << h.Theta.to_text();
        os << "det(I - t*Theta): " << to_string(cp) << "\n";
        emit(opt, out, os.str());
    }
    return 0;
}

inline int cmd_verify_one(const std::string& seq_text, const Options& opt, std::ostream& out) {
    PeriodicSequence s = parse_sequence(seq_text);
    VerificationReport rep = verify_identities(s, opt.tol);
    if (opt.format == "json") {
        emit(opt, out, to_json(rep).dump(2) + "\n");
    } else {
        std::ostringstream os;
        Json j = to_json(rep);
        os << "sequence: " << rep.sequence << "\n";
        for (auto& [k, v] : j["identities"].items())
            os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : std::string(v.get<bool>() ? "ok" : "FAIL"))
               << "\n";
        os << "P_Theta: " << to_string(rep.theta_charpoly) << "\n";
        os << "det(I - t*Psi): " << to_string(rep.psi_charpoly) << "\n";
        os << (rep.all_passed() ? "all identities hold\n" : "IDENTITY FAILURE\n");
        emit(opt, out, os.str());
    }
    return rep.all_passed() ? 0 : 4;
}

inline int cmd_verify_sweep(int p_max, const Options& opt, std::ostream& out) {
    SweepResult res = verify_all_upto(p_max, opt.tol, opt.jobs);
    if (opt.format == "json") {
        emit(opt, out, sweep_to_json(res).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << res.checked << " sequences checked, " << res.failures << " failures";
        if (res.growth_skipped) os << " (" << res.growth_skipped << " growth checks skipped: no root)";
        os << "\n";
        for (const auto& rep : res.failed_reports) os << "  FAILED: " << rep.sequence << "\n";
        emit(opt, out, os.str());
    }
    return res.failures == 0 ? 0 : 4;
}

inline int cmd_enumerate(int p, bool full, int max_period, const Options& opt, std::ostream& out) {
    EnumerateOptions eo;
    eo.max_period = max_period;
    auto seqs = enumerate_admissible(p, !full, eo);
    if (opt.format == "json") {
        Json j;
        j["period"] = p;
        j["markov_form"] = !full;
        j["count"] = static_cast<int>(seqs.size());
        Json arr = Json::array();
        for (const auto& s : seqs) arr.push_back(to_string(s));
        j["sequences"] = std::move(arr);
        emit(opt, out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& s : seqs) os << to_string(s) << "\n";
        os << "count: " << seqs.size() << "\n";
        emit(opt, out, os.str());
    }
    return 0;
}

inline int cmd_laps(const std::string& family, double param, int n, double eps, const Options& opt,
                    std::ostream& out) {
    MapFamily m = make_family(family, param);
    std::vector<int> counts;
    LapCountStats stats;
    for (int k = 1; k <= n; ++k) counts.push_back(lap_count(m, k, eps, &stats));
    if (opt.format == "json") {
        Json j;
        j["family"] = family_json(family, param);
        Json arr = Json::array();
        for (int c : counts) arr.push_back(c);
        j["lap_counts"] = std::move(arr);
        j["growth_estimate"] =
            format_double(std::pow(static_cast<double>(counts.back()), 1.0 / n), 10);
        emit(opt, out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (int k = 1; k <= n; ++k) os << "l(F^" << k << ") = " << counts[static_cast<std::size_t>(k - 1)] << "\n";
        os << "growth_estimate: "
           << format_double(std::pow(static_cast<double>(counts.back()), 1.0 / n), 10) << "\n";
        emit(opt, out, os.str());
    }
    return 0;
}

inline int cmd_scan(const std::string& family, double from, double to, double step, int n_laps,
                    int depth, double eps, const Options& opt, std::ostream& out) {
    if (step <= 0) throw CLI::ValidationError("--step must be positive");
    std::ostringstream os;
    os << "param,word,period,rho_kneading,rho_laps,status\n";
    for (double x = from; x <= to + 0.5 * step; x += step) {
        os << format_double(x, 10) << ",";
        try {
            MapFamily m = make_family(family, x);
            DetectResult det = detect_kneading(m, depth, eps);
            std::string word = to_string(det.word);
            if (!det.periodic && word.size() > 24) word = word.substr(0, 24);
            double rho_laps =
                std::pow(static_cast<double>(lap_count(m, n_laps, eps)), 1.0 / n_laps);
            if (det.periodic) {
                PeriodicSequence s{det.word};
                RationalFunction d = is_bistable(s) ? kneading_determinant_bistable(s)
                                                    : kneading_determinant(s);
                GrowthNumber g = growth_number(d, opt.tol);
                os << word << "," << det.period << "," << format_double(g.rho, 8) << ","
                   << format_double(rho_laps, 8) << ",ok\n";
            } else {
                os << word << ",0,," << format_double(rho_laps, 8) << ",aperiodic\n";
            }
        } catch (const DomainError& e) {
            os << ",,,," << "error: " << e.what() << "\n";
        }
    }
    emit(opt, out, os.str());
    return 0;
}

} // namespace cli_detail

// Returns the process exit code; all output goes through `out` / `err`.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"symbolic dynamics toolkit for odd discontinuous bimodal interval maps"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Options opt;
    app.add_option("--tol", opt.tol, "root isolation tolerance")->capture_default_str();
    app.add_option("--format", opt.format, "output format: text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", opt.out_path, "write the report to a file");
    app.add_option("--jobs", opt.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

    std::string seq;
    int lap_terms = 6;
    auto* knead = app.add_subcommand("knead", "kneading determinant, growth number, lap series");
    knead->add_option("sequence", seq, "periodic word, e.g. RMB")->required();
    knead->add_option("--laps", lap_terms, "number of lap-series terms");
    int order_val = -1;
    knead->add_option("--order", order_val, "also print the D(t) series through t^order");

    std::string mseq;
    auto* markov = app.add_subcommand("markov", "orbit permutation and transition matrix");
    markov->add_option("sequence", mseq, "markov-form word, e.g. RMB")->required();

    std::string tseq;
    auto* theta = app.add_subcommand("theta", "gamma/theta endomorphism and its char poly");
    theta->add_option("sequence", tseq, "markov-form word")->required();

    std::string vseq;
    int all_upto = 0;
    auto* verify = app.add_subcommand("verify", "verify the spectral identities");
    verify->add_option("sequence", vseq, "markov-form word");
    verify->add_option("--all-upto", all_upto, "verify every admissible markov-form word, period 2..P");

    int ep = 0;
    bool full = false;
    int max_period = 10;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate admissible periodic words");
    enumerate->add_option("--p", ep, "period")->required();
    enumerate->add_flag("--full", full, "all admissible words, not only markov form");
    enumerate->add_option("--max-period", max_period, "enumeration period cap");

    std::string family;
    double param = 0;
    int lap_n = 6;
    double eps = 1e-9;
    auto* laps = app.add_subcommand("laps", "numeric lap counts of a map family");
    laps->add_option("--family", family, "g_beta | G_alpha")->required();
    laps->add_option("--param", param, "family parameter")->required();
    laps->add_option("--n", lap_n, "count laps of F^1..F^n");
    laps->add_option("--eps", eps, "discontinuity snap (relative to |c2|)");

    std::string sfamily;
    double from = 0, to = 0, step = 0;
    int scan_laps = 6, depth = 400;
    double seps = 1e-9;
    auto* scan = app.add_subcommand("scan", "parameter scan: detected word and growth, CSV");
    scan->add_option("--family", sfamily, "g_beta | G_alpha")->required();
    scan->add_option("--from", from, "range start")->required();
    scan->add_option("--to", to, "range end")->required();
    scan->add_option("--step", step, "range step")->required();
    scan->add_option("--n-laps", scan_laps, "lap iterate for the numeric growth column");
    scan->add_option("--depth", depth, "detection horizon");
    scan->add_option("--eps", seps, "discontinuity snap (relative to |c2|)");

    try {
        std::vector<const char*> argv;
        argv.push_back("bimodal");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*knead)
            return cmd_knead(seq, lap_terms, order_val >= 0 ? std::optional<int>(order_val) : std::nullopt,
                             opt, out);
        if (*markov) return cmd_markov(mseq, opt, out);
        if (*theta) return cmd_theta(tseq, opt, out);
        if (*verify) {
            if (all_upto > 0 && !vseq.empty())
                throw CLI::ValidationError("give either a sequence or --all-upto, not both");
            if (all_upto > 0) return cmd_verify_sweep(all_upto, opt, out);
            if (vseq.empty()) throw CLI::ValidationError("verify needs a sequence or --all-upto");
            return cmd_verify_one(vseq, opt, out);
        }
        if (*enumerate) return cmd_enumerate(ep, full, max_period, opt, out);
        if (*laps) return cmd_laps(family, param, lap_n, eps, opt, out);
        if (*scan) return cmd_scan(sfamily, from, to, step, scan_laps, depth, seps, opt, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace bimodal
