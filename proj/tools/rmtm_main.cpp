// rmtm: finite-n random-matrix moment calculator.
//
// Subcommands compute single moments or physical quantities (transmission
// moments, delay-time moments, charge cumulants, limit values) and run the
// verification suites. Output is JSON (default) or CSV on stdout;
// diagnostics go to stderr. Exit codes: 0 success, 2 divergent moment,
// 3 invalid parameters, 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

#include "rmt/densities.hpp"
#include "rmt/physics.hpp"
#include "rmt/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace rmt;

std::string float17(double v) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json value_fields(const MomentResult& r) {
    json j;
    if (!r.convergent) {
        j["value_rational"] = nullptr;
        j["pi_half_power"] = nullptr;
        j["value_float"] = nullptr;
        j["diverges"] = true;
        return j;
    }
    if (std::holds_alternative<ExactReal>(*r.value)) {
        const ExactReal& v = std::get<ExactReal>(*r.value);
        j["value_rational"] = rational_str(v.rat());
        j["pi_half_power"] = v.pi_half_exp();
        j["value_float"] = float17(v.to_double());
    } else {
        const auto& v = std::get<HighPrecisionFloat>(*r.value);
        j["value_rational"] = nullptr;
        j["pi_half_power"] = 0;
        j["value_float"] = f128::str(v.value, 17);
        j["error_bound"] = f128::str(v.error, 3);
    }
    j["diverges"] = false;
    return j;
}

// Fixed CSV schema shared by every subcommand (header always emitted).
const char* kCsvHeader =
    "command,ensemble,beta,a,b,delta,m,n,k,order,value_rational,pi_half_power,value_float,"
    "diverges";

void emit_csv_row(const std::string& command, const json& rec) {
    auto cell = [&](const char* key) -> std::string {
        if (!rec.contains(key) || rec[key].is_null()) return "";
        if (rec[key].is_string()) return rec[key].get<std::string>();
        return rec[key].dump();
    };
    std::cout << command << ',' << cell("ensemble") << ',' << cell("beta") << ',' << cell("a")
              << ',' << cell("b") << ',' << cell("delta") << ',' << cell("m") << ',' << cell("n")
              << ',' << cell("k") << ',' << cell("order") << ',' << cell("value_rational") << ','
              << cell("pi_half_power") << ',' << cell("value_float") << ',' << cell("diverges")
              << '\n';
}

int emit(const std::string& command, const std::string& format, const std::vector<json>& records,
         bool any_divergent) {
    if (format == "csv") {
        std::cout << kCsvHeader << '\n';
        for (const json& r : records) emit_csv_row(command, r);
    } else {
        if (records.size() == 1)
            std::cout << records[0].dump(2) << '\n';
        else
            std::cout << json(records).dump(2) << '\n';
    }
    return any_divergent ? 2 : 0;
}

HalfInt half_opt(const std::optional<std::string>& s, const char* what) {
    if (!s) return HalfInt(0);
    try {
        return HalfInt::from_rational(parse_rational(*s));
    } catch (const std::exception& e) {
        throw InvalidParameter(std::string(what) + ": " + e.what());
    }
}

std::variant<long, double> parse_order(const std::string& s) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos == s.size()) return v;
    } catch (...) {
    }
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos == s.size()) return v;
    } catch (...) {
    }
    throw InvalidParameter("cannot parse order k: " + s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-n moments of Gaussian/Laguerre/Jacobi ensembles (beta = 1, 2, 4)"};
    app.require_subcommand(1);
    std::string format = "json";

    // --- moment ---
    auto* cmd_m = app.add_subcommand("moment", "moment of an eigenvalue density");
    std::string m_ens, m_n = "1", m_k = "1";
    int m_beta = 2;
    std::optional<std::string> m_a, m_b;
    cmd_m->add_option("--ensemble", m_ens, "gaussian | laguerre | jacobi")
        ->required()
        ->check(CLI::IsMember({"gaussian", "laguerre", "jacobi"}));
    cmd_m->add_option("--beta", m_beta, "symmetry class")->required()->check(CLI::IsMember({1, 2, 4}));
    cmd_m->add_option("--a", m_a, "Jacobi parameter a (integer or half-integer)");
    cmd_m->add_option("--b", m_b, "Laguerre/Jacobi parameter b");
    cmd_m->add_option("--n", m_n, "matrix dimension (half-integer allowed at beta=4)")->required();
    cmd_m->add_option("--k", m_k, "moment order (negative or real allowed for Laguerre)")
        ->required();
    cmd_m->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    // --- transmission ---
    auto* cmd_t = app.add_subcommand("transmission", "transmission-eigenvalue moment");
    int t_beta = 2;
    long t_m = 1, t_n = 1, t_k = 1;
    std::optional<std::string> t_delta;
    cmd_t->add_option("--beta", t_beta)->required()->check(CLI::IsMember({1, 2, 4}));
    cmd_t->add_option("--delta", t_delta, "Andreev deformation (0 = Dyson)");
    cmd_t->add_option("--m", t_m, "channels in the wider lead")->required();
    cmd_t->add_option("--n", t_n, "channels in the narrower lead")->required();
    cmd_t->add_option("--k", t_k, "moment order")->required();
    cmd_t->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // --- delay ---
    auto* cmd_d = app.add_subcommand("delay", "proper-delay-time moment");
    int d_beta = 2;
    long d_n = 1, d_k = 1;
    cmd_d->add_option("--beta", d_beta)->required()->check(CLI::IsMember({1, 2, 4}));
    cmd_d->add_option("--n", d_n, "channel count")->required();
    cmd_d->add_option("--k", d_k, "moment order of Q^k")->required();
    cmd_d->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // --- cumulants ---
    auto* cmd_c = app.add_subcommand("cumulants", "charge cumulants kappa_1..kappa_order");
    int c_beta = 2;
    long c_m = 1, c_n = 1;
    int c_order = 2;
    std::optional<std::string> c_delta;
    cmd_c->add_option("--beta", c_beta)->required()->check(CLI::IsMember({1, 2, 4}));
    cmd_c->add_option("--delta", c_delta);
    cmd_c->add_option("--m", c_m)->required();
    cmd_c->add_option("--n", c_n)->required();
    cmd_c->add_option("--order", c_order, "highest cumulant")->required();
    cmd_c->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // --- limit ---
    auto* cmd_l = app.add_subcommand("limit", "large-n limit values");
    std::string l_kind;
    long l_k = 1;
    std::string l_ratio = "1";
    cmd_l->add_option("--kind", l_kind, "catalan | schroeder")
        ->required()
        ->check(CLI::IsMember({"catalan", "schroeder"}));
    cmd_l->add_option("--k", l_k)->required();
    cmd_l->add_option("--ratio", l_ratio, "channel ratio m/n for the catalan limit");
    cmd_l->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // --- verify ---
    auto* cmd_v = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite = "all";
    std::uint64_t v_seed = 1;
    long v_samples = 100000;
    double v_inject = 0.0;
    bool v_quick = false;
    cmd_v->add_option("--suite", v_suite, "quad | mc | brute | duality | all")
        ->check(CLI::IsMember({"quad", "mc", "brute", "duality", "all"}));
    cmd_v->add_option("--seed", v_seed, "Monte Carlo seed");
    cmd_v->add_option("--samples", v_samples, "Monte Carlo samples per case");
    cmd_v->add_flag("--quick", v_quick, "trim the slower grids");
    cmd_v->add_option("--inject-error", v_inject)->group("");  // internal: mutation smoke hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << '\n';
        return 3;
    }

    try {
        if (*cmd_m) {
            Family fam = m_ens == "gaussian"  ? Family::Gaussian
                         : m_ens == "laguerre" ? Family::Laguerre
                                                : Family::Jacobi;
            EnsembleSpec e;
            e.family = fam;
            e.beta = m_beta;
            e.n = HalfInt::from_rational(parse_rational(m_n));
            e.a = half_opt(m_a, "--a");
            e.b = half_opt(m_b, "--b");
            MomentQuery q{e, parse_order(m_k)};
            MomentResult r = compute_moment(q);
            json rec;
            rec["ensemble"] = m_ens;
            rec["beta"] = m_beta;
            if (fam == Family::Jacobi) rec["a"] = e.a.str();
            if (fam != Family::Gaussian) rec["b"] = e.b.str();
            rec["n"] = e.n.str();
            rec["k"] = m_k;
            rec.update(value_fields(r));
            return emit("moment", format, {rec}, !r.convergent);
        }
        if (*cmd_t) {
            TransportQuery q{t_beta, half_opt(t_delta, "--delta"), t_m, t_n, t_k};
            MomentResult r = transmission_moment(q);
            json rec;
            rec["beta"] = t_beta;
            rec["delta"] = q.delta.str();
            rec["m"] = t_m;
            rec["n"] = t_n;
            rec["k"] = t_k;
            rec.update(value_fields(r));
            return emit("transmission", format, {rec}, !r.convergent);
        }
        if (*cmd_d) {
            DelayQuery q{d_beta, d_n, d_k};
            MomentResult r = delay_moment(q);
            json rec;
            rec["beta"] = d_beta;
            rec["n"] = d_n;
            rec["k"] = d_k;
            rec.update(value_fields(r));
            return emit("delay", format, {rec}, !r.convergent);
        }
        if (*cmd_c) {
            TransportQuery q{c_beta, half_opt(c_delta, "--delta"), c_m, c_n, 1};
            auto kappa = charge_cumulants(q, c_order);
            std::vector<json> recs;
            for (int j = 0; j < c_order; ++j) {
                json rec;
                rec["beta"] = c_beta;
                rec["delta"] = q.delta.str();
                rec["m"] = c_m;
                rec["n"] = c_n;
                rec["order"] = j + 1;
                rec["value_rational"] = rational_str(kappa[j].as_rational());
                rec["pi_half_power"] = 0;
                rec["value_float"] = float17(kappa[j].to_double());
                rec["diverges"] = false;
                recs.push_back(rec);
            }
            return emit("cumulants", format, recs, false);
        }
        if (*cmd_l) {
            ExactReal v = l_kind == "catalan" ? limit_catalan(l_k, parse_rational(l_ratio))
                                              : schroeder_series(l_k);
            json rec;
            rec["k"] = l_k;
            if (l_kind == "catalan") rec["ratio"] = l_ratio;
            rec["value_rational"] = rational_str(v.as_rational());
            rec["pi_half_power"] = 0;
            rec["value_float"] = float17(v.to_double());
            rec["diverges"] = false;
            return emit("limit-" + l_kind, format, {rec}, false);
        }
        if (*cmd_v) {
            VerifyOptions opt;
            opt.seed = v_seed;
            opt.samples = v_samples;
            opt.inject_error = v_inject;
            opt.quick = v_quick;
            auto results = run_verify_suite(v_suite, opt);
            bool ok = all_passed(results);
            for (const auto& r : results)
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
            std::cout << (ok ? "VERIFY PASS" : "VERIFY FAIL") << " (" << results.size()
                      << " checks)\n";
            return ok ? 0 : 4;
        }
    } catch (const DivergentMoment& e) {
        std::cerr << "divergent: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 3;
}
