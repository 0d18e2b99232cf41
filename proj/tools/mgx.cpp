// mgx: command-line front end for the multigraph extremal-density toolkit.
//
// Subcommands: sigma, pi, blowup-max, turan, bounds (fk-m|flat|gate),
// admissible, oracle, survey, verify.  Exit codes: 0 success, 1 check or
// constraint failure, 2 input error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgx/admissibility.hpp"
#include "mgx/blowup.hpp"
#include "mgx/bounds.hpp"
#include "mgx/catalog.hpp"
#include "mgx/common.hpp"
#include "mgx/density.hpp"
#include "mgx/io.hpp"
#include "mgx/oracle.hpp"
#include "mgx/search.hpp"
#include "mgx/turan.hpp"
#include "mgx/verify.hpp"

namespace {

using nlohmann::json;

struct Globals {
    bool json_out = false;
    int threads = 0;  // 0 = resolve from MGX_THREADS, then hardware
    double budget = 1e9;

    int resolved_threads() const {
        if (threads > 0) return threads;
        if (const char* env = std::getenv("MGX_THREADS")) {
            const int t = std::atoi(env);
            if (t > 0) return t;
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }
    std::uint64_t resolved_budget() const {
        if (budget < 1) throw mgx::input_error("--budget must be at least 1");
        return static_cast<std::uint64_t>(budget);
    }
};

std::string flt(double x) {
    std::ostringstream os;
    os.precision(15);
    os << x;
    return os.str();
}

std::string rat(const mgx::Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

json profile_to_json(const mgx::MultiplicityProfile& p) {
    json j = json::object();
    for (const auto& [value, count] : p.counts()) j[std::to_string(value)] = count;
    return j;
}

mgx::Objective parse_objective(const std::string& s) {
    if (s == "sum") return mgx::Objective::sum;
    if (s == "product") return mgx::Objective::product;
    throw mgx::input_error("objective must be 'sum' or 'product'");
}

int cmd_sigma(const Globals& g, const std::string& pattern_path) {
    const mgx::SigmaResult r = mgx::sigma_density(mgx::load_pattern(pattern_path));
    if (g.json_out) {
        json j;
        j["sigma"] = mgx::rational_to_json(r.sigma);
        json w = json::array();
        for (const mgx::Rational& x : r.weighting) w.push_back(mgx::rational_to_json(x));
        j["weighting"] = w;
        j["support"] = r.support;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "sigma = " << rat(r.sigma) << "\nweighting =";
        for (const mgx::Rational& x : r.weighting) std::cout << " " << rat(x);
        std::cout << "\n";
    }
    return 0;
}

int cmd_pi(const Globals& g, const std::string& pattern_path, double tol) {
    const mgx::PiResult r = mgx::pi_density(mgx::load_pattern(pattern_path), tol);
    if (g.json_out) {
        json j;
        j["pi"] = r.pi;
        j["kkt_residual"] = r.kkt_residual;
        j["weighting"] = r.weighting;
        j["support"] = r.support;
        j["minus_infinity"] = r.minus_infinity;
        std::cout << j.dump(2) << "\n";
    } else {
        if (r.minus_infinity) {
            std::cout << "pi = -infinity (every admissible support has a zero edge)\n";
            return 0;
        }
        std::cout << "pi = " << flt(r.pi) << "  (density " << flt(std::exp(r.pi))
                  << ", kkt residual " << flt(r.kkt_residual) << ")\nweighting =";
        for (double x : r.weighting) std::cout << " " << flt(x);
        std::cout << "\n";
    }
    return 0;
}

int cmd_blowup_max(const Globals& g, const std::string& pattern_path, int n,
                   const std::string& objective, const std::string& mode) {
    const mgx::Pattern p = mgx::load_pattern(pattern_path);
    const mgx::Objective obj = parse_objective(objective);
    const mgx::OptMode m = mode == "local" ? mgx::OptMode::local : mgx::OptMode::exact;
    if (mode != "local" && mode != "exact") throw mgx::input_error("mode must be exact|local");
    const mgx::BlowupOptimum opt = mgx::optimize_blowup(p, n, obj, m, g.resolved_budget());
    if (g.json_out) {
        json j;
        j["sum_value"] = opt.sum_value;
        j["profile"] = profile_to_json(opt.profile);
        j["product"] = opt.profile.product().str();
        j["witness"] = opt.witness;
        j["exact"] = opt.exact;
        j["nodes"] = opt.nodes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (opt.exact ? "maximum" : "local value (not certified)") << ": sum "
                  << opt.sum_value << ", product " << opt.profile.product() << "\nwitness =";
        for (int c : opt.witness) std::cout << " " << c;
        std::cout << "\n";
    }
    return 0;
}

int cmd_turan(const Globals& g, const std::vector<int>& r, long a, int n) {
    mgx::TuranSpec spec;
    spec.r = r;
    spec.a = a;
    if (!spec.valid()) throw mgx::input_error("turan: invalid block sizes or a < d");
    const std::int64_t sigma_n = mgx::turan_sigma_value(spec, n);
    const std::int64_t delta_n = mgx::turan_sigma_value(spec, n + 1) - sigma_n;
    json j;
    j["s0"] = mgx::turan_s0(spec);
    j["sigma_n"] = sigma_n;
    j["delta_n"] = delta_n;
    if (spec.d() > 0) {
        j["s1"] = mgx::turan_s1(spec);
        const auto [lo, hi] = mgx::turan_light_count_range(spec, n);
        j["light_count_range"] = {lo, hi};
    }
    if (g.json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Sigma_T(" << n << ") = " << sigma_n << "\nSigma_T(" << n + 1
                  << ") - Sigma_T(" << n << ") = " << delta_n << "\ns0 = " << j["s0"];
        if (j.contains("s1"))
            std::cout << ", s1 = " << j["s1"] << ", light-part total in "
                      << j["light_count_range"];
        std::cout << "\n";
    }
    return 0;
}

int cmd_bounds_fkm(const Globals& g, int s, std::int64_t q) {
    const mgx::Rational m = mgx::fk_m(s, q);
    if (g.json_out)
        std::cout << json{{"m", mgx::rational_to_json(m)}}.dump(2) << "\n";
    else
        std::cout << "m(" << s << "," << q << ") = " << rat(m) << "\n";
    return 0;
}

int cmd_bounds_flat(const Globals& g, int r, long a, int s) {
    const mgx::FlatInterval f = mgx::flat_interval(r, a, s);
    if (g.json_out) {
        json j;
        j["q_low"] = f.q_low;
        j["q_high"] = f.q_high;
        j["value"] = f.value;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "flat interval q in [" << f.q_low << ", " << f.q_high
                  << "], density value " << flt(f.value) << "\n";
    }
    return 0;
}

int cmd_bounds_gate(const Globals& g, int r0, int rd, int d, long a) {
    const mgx::GateResult r = mgx::large_a_gate(r0, rd, d, a);
    if (g.json_out) {
        json j;
        j["gate"] = r.gate;
        j["exact_cmp"] = r.exact_cmp;
        j["equiv_block_count_form"] = r.equiv_b;
        j["equiv_weight_form"] = r.equiv_c;
        j["margin_block_count_form"] = r.margin_b;
        j["margin_weight_form"] = r.margin_c;
        j["threshold"] = r.threshold;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gate " << (r.gate ? "holds" : "fails") << " (threshold a > "
                  << r.threshold << "); block-count form " << (r.equiv_b ? "holds" : "fails")
                  << ", weight form " << (r.equiv_c ? "holds" : "fails") << "\n";
    }
    return 0;
}

int cmd_admissible(const Globals& g, const std::string& pattern_path, int s, std::int64_t q) {
    const mgx::Pattern p = mgx::load_pattern(pattern_path);
    const bool ok = mgx::is_admissible(p, s, q, g.resolved_budget());
    if (g.json_out)
        std::cout << json{{"admissible", ok}}.dump(2) << "\n";
    else
        std::cout << (ok ? "admissible" : "not admissible") << "\n";
    return ok ? 0 : 1;
}

int cmd_oracle(const Globals& g, int n, int s, std::int64_t q, const std::string& objective,
               std::uint32_t max_mult, const std::string& witness_path) {
    const mgx::OracleResult r = mgx::brute_force_extremal(
        n, s, q, parse_objective(objective), max_mult, g.resolved_threads(),
        g.resolved_budget());
    if (!witness_path.empty()) {
        std::ofstream out(witness_path);
        if (!out) throw mgx::input_error("cannot write witness file: " + witness_path);
        out << mgx::format_multigraph(r.witness);
    }
    if (g.json_out) {
        json j;
        j["sum_value"] = r.sum_value;
        j["profile"] = profile_to_json(r.profile);
        j["product"] = r.profile.product().str();
        j["exact"] = r.exact;
        j["nodes"] = r.nodes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (r.exact ? "extremal value" : "lower bound (budget exhausted)")
                  << ": sum " << r.sum_value << ", product " << r.profile.product() << "\n";
    }
    return r.exact ? 0 : 3;
}

int cmd_survey(const Globals& g, const mgx::SurveyOptions& base, std::int64_t q_from,
               std::int64_t q_to, const std::string& csv_path) {
    mgx::SurveyOptions so = base;
    so.budget = g.resolved_budget();
    const std::vector<mgx::SurveyRow> rows = mgx::survey(so, q_from, q_to);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw mgx::input_error("cannot write csv file: " + csv_path);
        out << "q,best_density,witness,tie_count\n";
        for (const mgx::SurveyRow& r : rows)
            out << r.q << "," << flt(r.best_density) << "," << r.witness << "," << r.tie_count
                << "\n";
    }
    if (g.json_out) {
        json j = json::array();
        for (const mgx::SurveyRow& r : rows)
            j.push_back({{"q", r.q},
                         {"best_density", r.best_density},
                         {"witness", r.witness},
                         {"tie_count", r.tie_count}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const mgx::SurveyRow& r : rows)
            std::cout << "q=" << r.q << "  density=" << flt(r.best_density)
                      << "  ties=" << r.tie_count << "  winner=" << r.witness << "\n";
    }
    return 0;
}

int cmd_verify(const Globals& g, const std::string& suite, const std::string& only) {
    if (suite != "paper") throw mgx::input_error("unknown suite: " + suite);
    mgx::CheckOptions opt;
    opt.budget = g.resolved_budget();
    opt.threads = g.resolved_threads();
    const std::vector<mgx::CheckReport> reports = mgx::run_checks(only, opt);
    int failed = 0, skipped = 0;
    if (g.json_out) {
        json j = json::array();
        for (const mgx::CheckReport& r : reports) {
            json e;
            e["check"] = r.name;
            e["status"] = r.status;
            e["got"] = r.status == "pass" ? "ok (" + r.detail + ")" : r.detail;
            e["want"] = "every comparison within tolerance";
            e["tol"] = "pinned per comparison; reported in the failure message";
            e["criterion"] = r.criterion;
            e["seconds"] = r.seconds;
            j.push_back(e);
            failed += r.status == "fail";
            skipped += r.status == "skipped";
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const mgx::CheckReport& r : reports) {
            std::cout << (r.status == "pass" ? "PASS" : r.status == "fail" ? "FAIL" : "SKIP")
                      << "  " << r.name << " [criterion " << r.criterion << ", "
                      << flt(r.seconds) << "s]: " << r.detail << "\n";
            failed += r.status == "fail";
            skipped += r.status == "skipped";
        }
        std::cout << reports.size() - failed - skipped << "/" << reports.size() << " passed";
        if (skipped > 0) std::cout << " (" << skipped << " skipped on budget)";
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multigraph extremal-density toolkit"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json_out, "machine-readable JSON output");
    app.add_option("--threads", g.threads, "worker thread count (default: MGX_THREADS env)");
    app.add_option("--budget", g.budget, "search node budget")->default_val(1e9);

    std::string pattern_path, objective = "sum", mode = "exact", witness_path, csv_path;
    std::string suite = "paper", only;
    int n = 0, s = 0, r = 1, r0 = 1, rd = 1, d = 1;
    long a = 1;
    std::int64_t q = 0, q_from = 0, q_to = 0;
    double tol = 1e-10;
    std::uint32_t max_mult = 0;
    std::vector<int> r_blocks;
    mgx::SurveyOptions so;

    auto* sigma = app.add_subcommand("sigma", "exact additive density of a pattern");
    sigma->add_option("--pattern", pattern_path, "pattern JSON file")->required();

    auto* pi = app.add_subcommand("pi", "multiplicative density of a pattern");
    pi->add_option("--pattern", pattern_path, "pattern JSON file")->required();
    pi->add_option("--tol", tol, "KKT residual tolerance")->default_val(1e-10);

    auto* blowup = app.add_subcommand("blowup-max", "extremal blow-up on n vertices");
    blowup->add_option("--pattern", pattern_path, "pattern JSON file")->required();
    blowup->add_option("--n", n, "number of vertices")->required();
    blowup->add_option("--objective", objective, "sum|product")->default_val("sum");
    blowup->add_option("--mode", mode, "exact|local")->default_val("exact");

    auto* turan = app.add_subcommand("turan", "layered-pattern closed forms");
    turan->add_option("--r", r_blocks, "block sizes r_0,...,r_d")->required()->delimiter(',');
    turan->add_option("--a", a, "ambient multiplicity")->required();
    turan->add_option("--n", n, "number of vertices")->required();

    auto* bounds = app.add_subcommand("bounds", "threshold and interval bounds");
    bounds->require_subcommand(1);
    auto* fkm = bounds->add_subcommand("fk-m", "least density slope exceeding the budget");
    fkm->add_option("--s", s, "set size")->required();
    fkm->add_option("--q", q, "budget")->required();
    auto* flat = bounds->add_subcommand("flat", "constant interval of the multiplicative law");
    flat->add_option("--r", r, "clique block size")->required();
    flat->add_option("--a", a, "ambient multiplicity")->required();
    flat->add_option("--s", s, "set size")->required();
    auto* gate = bounds->add_subcommand("gate", "large-a polynomial gate");
    gate->add_option("--r0", r0, "first block size")->required();
    gate->add_option("--rd", rd, "last block size")->required();
    gate->add_option("--d", d, "depth")->required();
    gate->add_option("--a", a, "ambient multiplicity")->required();

    auto* adm = app.add_subcommand("admissible", "pattern admissibility at (s, q)");
    adm->add_option("--pattern", pattern_path, "pattern JSON file")->required();
    adm->add_option("--s", s, "set size")->required();
    adm->add_option("--q", q, "budget")->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive extremal multigraph search");
    oracle->add_option("--n", n, "number of vertices")->required();
    oracle->add_option("--s", s, "set size")->required();
    oracle->add_option("--q", q, "budget")->required();
    oracle->add_option("--objective", objective, "sum|product")->default_val("sum");
    oracle->add_option("--max-mult", max_mult, "edge multiplicity cap (default q)");
    oracle->add_option("--witness", witness_path, "write extremal multigraph to file");

    auto* survey = app.add_subcommand("survey", "rank candidate graph patterns per budget");
    survey->add_option("--s", so.s, "set size")->required();
    survey->add_option("--a", so.a, "ambient multiplicity")->required();
    survey->add_option("--objective", objective, "sum|product")->default_val("product");
    survey->add_option("--max-vertices", so.max_vertices)->default_val(10);
    survey->add_option("--max-degree", so.max_degree)->default_val(3);
    survey->add_option("--min-girth", so.min_girth)->default_val(5);
    survey->add_option("--q-from", q_from, "first budget")->required();
    survey->add_option("--q-to", q_to, "last budget")->required();
    survey->add_option("--csv", csv_path, "write table to CSV file");

    auto* verify = app.add_subcommand("verify", "run the self-verification suite");
    verify->add_option("--suite", suite, "check suite name")->default_val("paper");
    verify->add_option("--only", only, "run a single named check");

    // let --json/--threads/--budget appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sigma) return cmd_sigma(g, pattern_path);
        if (*pi) return cmd_pi(g, pattern_path, tol);
        if (*blowup) return cmd_blowup_max(g, pattern_path, n, objective, mode);
        if (*turan) return cmd_turan(g, r_blocks, a, n);
        if (*fkm) return cmd_bounds_fkm(g, s, q);
        if (*flat) return cmd_bounds_flat(g, r, a, s);
        if (*gate) return cmd_bounds_gate(g, r0, rd, d, a);
        if (*adm) return cmd_admissible(g, pattern_path, s, q);
        if (*oracle) return cmd_oracle(g, n, s, q, objective, max_mult, witness_path);
        if (*survey) {
            so.objective = parse_objective(objective);
            return cmd_survey(g, so, q_from, q_to, csv_path);
        }
        if (*verify) return cmd_verify(g, suite, only);
    } catch (const mgx::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const mgx::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
