// wpvol: exact Weil-Petersson volume polynomials, their super analogs, and
// the identity/verification suites around them.

#include "CLI11.hpp"

#include "wpvol/intersect.hpp"
#include "wpvol/jsonform.hpp"
#include "wpvol/laplace.hpp"
#include "wpvol/numeric.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>

using namespace wpvol;

namespace {

struct CheckLine {
    std::string suite;
    std::string label;  // descriptive anchor for the identity being checked
    std::string key;
    std::string status;  // pass | FAIL | skip
    std::string detail;
};

struct Orchestrator {
    VolumeTable table;
    std::string cache_path;
    std::string cache_hash_before = "none";
    std::vector<CheckLine> lines;
    int failures = 0;

    void record(const std::string& suite, const std::string& label, const std::string& key,
                bool pass, const std::string& detail = "") {
        lines.push_back({suite, label, key, pass ? "pass" : "FAIL", detail});
        if (!pass) ++failures;
    }
    void record_skip(const std::string& suite, const std::string& label,
                     const std::string& key, const std::string& why) {
        lines.push_back({suite, label, key, "skip", why});
    }
};

std::string fnv1a(const std::string& s) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

std::string resolve_cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("WPVOL_CACHE")) return env;
    return "wpvol_cache.json";
}

void load_cache(Orchestrator& orch) {
    if (std::filesystem::exists(orch.cache_path)) {
        try {
            orch.table = load_table(orch.cache_path);
            orch.cache_hash_before = fnv1a(canonical_table_json(orch.table));
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring unreadable cache: " << e.what() << "\n";
        }
    }
}

void save_cache(Orchestrator& orch) {
    if (!orch.cache_path.empty()) save_table(orch.table, orch.cache_path);
}

Json manifest(const std::string& command, const Json& params, const Orchestrator& orch,
              const Json& results) {
    Json m;
    m["command"] = command;
    m["parameters"] = params;
    m["engine_version"] = kEngineVersion;
    m["cache_state"] = orch.cache_hash_before;
    m["results"] = results;
    return m;
}

std::vector<VolumeKey> keys_in_range(int max_dim, bool include_super) {
    std::vector<VolumeKey> out;
    for (int g = 0; 3 * g - 3 + 1 <= max_dim; ++g)
        for (int n = 1; 3 * g - 3 + n <= max_dim; ++n) {
            if (!is_stable(g, n)) continue;
            out.push_back({g, n, false});
            if (include_super && g >= 1) out.push_back({g, n, true});
        }
    return out;
}

bool is_base_key(int g, int n) { return (g == 0 && n == 3) || (g == 1 && n == 1); }

std::vector<std::vector<double>> sample_lengths(int n) {
    std::vector<std::vector<double>> out;
    std::vector<double> a(n), b(n), c(n);
    for (int i = 0; i < n; ++i) {
        a[i] = 1.0 + i;           // asymmetric, integer spread
        b[i] = 0.7 + 0.6 * i;     // asymmetric, off-integer
        c[i] = 1.5;               // symmetric
    }
    out.push_back(a);
    out.push_back(b);
    out.push_back(c);
    return out;
}

void compositions(int total, int slots, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (slots == 1) {
        cur.push_back(total);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, slots - 1, cur, fn);
        cur.pop_back();
    }
}

void run_identities_suite(Orchestrator& orch, int max_dim) {
    IntersectionTable itab;
    itab.populate(max_dim, orch.table);
    for (const auto& key : keys_in_range(max_dim, false)) {
        int g = key.g, n = key.n;
        std::string ks = key.str();
        if (!is_base_key(g, n))
            orch.record("identities", "leading-order-recursion", ks,
                        check_leading_recursion(g, n, orch.table));
        if (n >= 2 && is_stable(g, n - 1)) {
            orch.record("identities", "insertion-at-2pi-i", ks,
                        check_do_norbury(g, n, orch.table));
            orch.record("identities", "first-derivative-at-2pi-i", ks,
                        check_derivative_relation(g, n, orch.table));
            orch.record("identities", "second-derivative-at-2pi-i", ks,
                        check_second_derivative(g, n, orch.table));
        } else if (n >= 2) {
            orch.record_skip("identities", "insertion-at-2pi-i", ks,
                             "reduced key unstable");
        }
        // Virasoro constraint over every index of the key
        int fails = 0, count = 0;
        bool skipped_key = false;
        std::vector<int> cur;
        compositions(3 * g - 3 + n, n, cur, [&](const std::vector<int>& alphas) {
            auto res = check_dvv(g, alphas, itab);
            if (!res.has_value()) {
                skipped_key = true;
                return;
            }
            ++count;
            if (!*res) ++fails;
        });
        if (skipped_key)
            orch.record_skip("identities", "virasoro-constraint", ks, "base case");
        else
            orch.record("identities", "virasoro-constraint", ks, fails == 0,
                        std::to_string(count) + " indices");
    }
}

void run_laplace_suite(Orchestrator& orch, int max_dim) {
    LaplaceTable lt(orch.table);
    auto note = [&](const char* label, const VolumeKey& key, const CheckOutcome& res) {
        if (res.skipped())
            orch.record_skip("laplace", label, key.str(), "base case");
        else
            orch.record("laplace", label, key.str(), res.passed(),
                        "K=" + std::to_string(res.trunc_order));
    };
    for (const auto& key : keys_in_range(max_dim, true)) {
        if (!key.super_) {
            note("csc-kernel-form", key, check_laplace_original(key.g, key.n, lt));
            note("sin-shift-form", key, check_laplace_new(key.g, key.n, lt));
            note("topological-recursion", key, check_toprec(key.g, key.n, lt));
        } else {
            note("super-sec-kernel-form", key,
                 check_super_laplace(key.g, key.n, false, lt));
            note("super-cos-shift-form", key,
                 check_super_laplace(key.g, key.n, true, lt));
        }
    }
}

void run_numeric_suite(Orchestrator& orch, int max_dim, double tol) {
    for (const auto& key : keys_in_range(max_dim, true)) {
        int g = key.g, n = key.n;
        std::string label = key.super_ ? "super-kernel-quadrature" : "kernel-quadrature";
        if (is_base_key(g, n)) {
            orch.record_skip("numeric", label, key.str(), "base case");
            continue;
        }
        double worst = 0.0;
        bool pass = true;
        Json rep;
        rep["key"] = key.str();
        rep["samples"] = Json::array();
        rep["lhs"] = Json::array();
        rep["rhs"] = Json::array();
        for (const auto& lens : sample_lengths(n)) {
            NumericCheck r =
                key.super_ ? check_super_recursion_numeric(g, n, lens, tol, orch.table)
                           : check_original_recursion_numeric(g, n, lens, tol, orch.table);
            worst = std::max(worst, r.max_rel_err);
            pass = pass && r.pass;
            rep["samples"].push_back(lens);
            rep["lhs"].push_back(r.lhs);
            rep["rhs"].push_back(r.rhs);
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.2e", worst);
        rep["rel_err"] = worst;
        rep["pass"] = pass;
        orch.record("numeric", label, key.str(), pass, rep.dump());
    }
}

void run_appendix_suite(Orchestrator& orch, double tol) {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> expd(0, 10), coefd(-9, 9), nterms(1, 4);
    auto rand1 = [&](bool odd) {
        MultiPoly p(1);
        for (int t = nterms(rng); t-- > 0;) {
            int e = expd(rng);
            if (odd) e |= 1;
            int c = coefd(rng);
            if (c == 0) c = 5;
            p += MultiPoly::monomial(1, {e}, RingElem(Rational(c)));
        }
        return p;
    };
    bool sine_ok = true, cos_ok = true;
    for (int it = 0; it < 40; ++it) {
        sine_ok = sine_ok && check_lemma_laplace_shift(rand1(false), false);
        cos_ok = cos_ok && check_lemma_laplace_shift(rand1(true), true);
    }
    orch.record("appendix", "shift-transform-sine-rule", "-", sine_ok, "40 random polys");
    orch.record("appendix", "shift-transform-cosine-rule", "-", cos_ok, "40 random polys");

    const std::vector<std::pair<double, double>> pts = {
        {1.0, 0.3}, {2.0, 0.7}, {0.5, 1.3}, {1.5, 0.2}, {3.0, 0.4}};
    bool a1a = true, a1b = true;
    for (auto [x, t] : pts) {
        a1a = a1a && verify_appendix_series(AppendixSeries::A1a, x, t, 0, 0, 400, tol).pass;
        a1b = a1b && verify_appendix_series(AppendixSeries::A1b, x, t, 0, 0, 400, tol).pass;
    }
    orch.record("appendix", "logistic-laplace-series-plus", "-", a1a, "5 points");
    orch.record("appendix", "logistic-laplace-series-minus", "-", a1b, "5 points");

    const std::vector<std::tuple<double, double, double>> pts2 = {
        {1.0, 0.3, 0.8}, {2.0, 0.7, 0.4}, {0.5, 1.3, 0.6}, {1.5, 0.2, 1.1}, {1.0, 0.4, 0.3}};
    bool a2 = true;
    for (auto [x, t1, t2] : pts2)
        a2 = a2 && verify_appendix_series(AppendixSeries::A2, x, t1, t2, 0, 400, tol).pass;
    orch.record("appendix", "logistic-double-laplace-series", "-", a2, "5 points");

    const std::vector<std::pair<int, double>> pts3 = {
        {2, 0.1}, {1, 0.2}, {3, 0.15}, {2, 0.35}, {4, 0.1}};
    bool a3 = true;
    for (auto [p, t] : pts3)
        a3 = a3 && verify_appendix_series(AppendixSeries::A3, 0, t, 0, p, 10000, tol).pass;
    orch.record("appendix", "csc-partial-fraction-sum", "-", a3, "5 points");
}

int cmd_compute(Orchestrator& orch, int g, int n, bool super_flag,
                const std::string& format) {
    if (n < 1 || !is_stable(g, n)) {
        std::cerr << "usage error: unstable (g,n): 2g-2+n must be positive (got g=" << g
                  << ", n=" << n << ")\n";
        return 2;
    }
    const MultiPoly& v = super_flag ? compute_super_volume(g, n, orch.table)
                                    : compute_volume(g, n, orch.table);
    Json params{{"g", g}, {"n", n}, {"super", super_flag}, {"format", format}};
    if (format == "json") {
        Json out = manifest("compute", params, orch, poly_to_json(v));
        std::cout << out.dump(1) << "\n";
    } else {
        std::cout << (format == "latex" ? poly_to_latex(v) : poly_to_text(v)) << "\n";
        std::cout << "MANIFEST "
                  << manifest("compute", params, orch, Json{{"terms", v.terms.size()}}).dump()
                  << "\n";
    }
    save_cache(orch);
    return 0;
}

int cmd_check(Orchestrator& orch, const std::string& suite, int max_dim, double tol) {
    auto t0 = std::chrono::steady_clock::now();
    if (suite == "all" || suite == "identities") run_identities_suite(orch, max_dim);
    if (suite == "all" || suite == "laplace") run_laplace_suite(orch, max_dim);
    if (suite == "all" || suite == "numeric") run_numeric_suite(orch, max_dim, tol);
    if (suite == "all" || suite == "appendix") run_appendix_suite(orch, 1e-6);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    int passes = 0, skips = 0;
    for (const auto& l : orch.lines) {
        std::cout << "[" << l.status << "] " << l.suite << "/" << l.label;
        if (l.key != "-") std::cout << " key=(" << l.key << ")";
        if (!l.detail.empty()) std::cout << " " << l.detail;
        std::cout << "\n";
        if (l.status == "pass") ++passes;
        if (l.status == "skip") ++skips;
    }
    std::cout << "summary: " << passes << " passed, " << orch.failures << " failed, "
              << skips << " skipped\n";
    Json params{{"suite", suite}, {"max_dim", max_dim}, {"tol", tol}};
    Json results{{"passed", passes},
                 {"failed", orch.failures},
                 {"skipped", skips},
                 {"elapsed_seconds", dt}};
    std::cout << "MANIFEST " << manifest("check", params, orch, results).dump() << "\n";
    save_cache(orch);
    return orch.failures == 0 ? 0 : 1;
}

int cmd_table(Orchestrator& orch, const std::string& kind, int max_dim,
              const std::string& format) {
    Json params{{"kind", kind}, {"max_dim", max_dim}, {"format", format}};
    Json rows = Json::array();
    if (kind == "volumes") {
        for (const auto& key : keys_in_range(max_dim, true)) {
            const MultiPoly& v = key.super_
                                     ? compute_super_volume(key.g, key.n, orch.table)
                                     : compute_volume(key.g, key.n, orch.table);
            if (format == "json") {
                rows.push_back(Json{{"key", key.str()}, {"poly", poly_to_json(v)}});
            } else {
                std::cout << (key.super_ ? "Vsu" : "V") << "(" << key.g << "," << key.n
                          << ") = "
                          << (format == "latex" ? poly_to_latex(v) : poly_to_text(v))
                          << "\n";
            }
        }
    } else if (kind == "intersections") {
        IntersectionTable itab;
        itab.populate(max_dim, orch.table);
        for (const auto& [gk, value] : itab.entries()) {
            if (format == "json") {
                rows.push_back(Json{{"g", gk.first},
                                    {"alphas", gk.second},
                                    {"value", value.str()}});
            } else {
                std::cout << "<";
                for (size_t i = 0; i < gk.second.size(); ++i)
                    std::cout << (i ? "," : "") << "tau_" << gk.second[i];
                std::cout << ">_" << gk.first << " = " << value.str() << "\n";
            }
        }
    } else if (kind == "laplace") {
        LaplaceTable lt(orch.table);
        for (const auto& key : keys_in_range(max_dim, true)) {
            const LaurentPoly& f = lt.get(key.g, key.n, key.super_);
            if (format == "json")
                rows.push_back(Json{{"key", key.str()}, {"laurent", laurent_to_json(f)}});
            else
                std::cout << (key.super_ ? "Fsu" : "F") << "(" << key.g << "," << key.n
                          << ") = " << f.str() << "\n";
        }
    } else {
        std::cerr << "usage error: unknown table kind " << kind << "\n";
        return 2;
    }
    if (format == "json") {
        std::cout << manifest("table", params, orch, rows).dump(1) << "\n";
    } else {
        std::cout << "MANIFEST "
                  << manifest("table", params, orch, Json{{"rows", rows.size()}}).dump()
                  << "\n";
    }
    save_cache(orch);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Weil-Petersson volume engine"};
    app.require_subcommand(1);

    std::string cache_flag;
    app.add_option("--cache-path", cache_flag, "cache file (default: WPVOL_CACHE or ./wpvol_cache.json)");

    int g = 0, n = 0, max_dim = 5;
    bool super_flag = false;
    std::string format = "text", suite = "all", kind = "volumes";
    double tol = 1e-8;

    CLI::App* compute = app.add_subcommand("compute", "compute one volume polynomial");
    compute->add_option("--g", g, "genus")->required();
    compute->add_option("--n", n, "boundary count")->required();
    compute->add_flag("--super", super_flag, "super volume");
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

    CLI::App* check = app.add_subcommand("check", "run verification suites");
    check->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "identities", "laplace", "numeric", "appendix"}));
    check->add_option("--max-dim", max_dim, "largest 3g-3+n")->check(CLI::Range(1, 8));
    check->add_option("--tol", tol, "numeric suite tolerance");

    CLI::App* table = app.add_subcommand("table", "emit reproducible tables");
    table->add_option("--kind", kind)
        ->check(CLI::IsMember({"volumes", "intersections", "laplace"}));
    table->add_option("--max-dim", max_dim)->check(CLI::Range(-1, 8));
    table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Orchestrator orch;
    orch.cache_path = resolve_cache_path(cache_flag);
    load_cache(orch);

    try {
        if (compute->parsed()) return cmd_compute(orch, g, n, super_flag, format);
        if (check->parsed()) return cmd_check(orch, suite, max_dim, tol);
        if (table->parsed()) return cmd_table(orch, kind, max_dim, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
