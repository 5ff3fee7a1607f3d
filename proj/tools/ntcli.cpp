#include <cstdlib>
#include <numeric>
#include <random>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ntverify/acceptance.hpp"
#include "ntverify/equidist.hpp"
#include "ntverify/exponents.hpp"
#include "ntverify/expsum.hpp"
#include "ntverify/harman.hpp"
#include "ntverify/modmath.hpp"
#include "ntverify/tuples.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << report.dump(2) << "\n";
    }
}

json result_row(const std::string& name, bool pass, json extra = json::object()) {
    extra["name"] = name;
    extra["status"] = pass ? "PASS" : "FAIL";
    return extra;
}

int finish(const std::string& command, json results, const std::string& out,
           std::optional<std::uint64_t> seed = std::nullopt) {
    bool pass = true;
    for (const auto& r : results)
        if (r["status"] == "FAIL") pass = false;
    json report{{"command", command}, {"pass", pass}, {"results", results}};
    if (seed) report["seed"] = *seed;
    emit(report, out);
    return pass ? kExitPass : kExitFail;
}

std::string data_dir_default() {
    if (const char* env = std::getenv("NTVERIFY_DATA_DIR")) return env;
    return "data";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for prime-gap equidistribution arguments"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "json";
    std::uint64_t seed = ntv::kDefaultSeed;
    app.add_option("--out", out_path, "write the report to this file");
    app.add_option("--format", format, "json or csv (csv for equidist table)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "RNG seed for randomized checks");

    // tuples
    auto* tuples = app.add_subcommand("tuples", "admissible tuple checks");
    std::string tuple_file;
    ntv::i64 sub_k = 1;
    unsigned workers = 0;
    auto* tv = tuples->add_subcommand("verify", "parse and test admissibility");
    tv->add_option("file", tuple_file)->required();
    tv->add_option("--workers", workers);
    auto* tn = tuples->add_subcommand("narrowest", "narrowest k-point window");
    tn->add_option("file", tuple_file)->required();
    tn->add_option("--k", sub_k)->required();
    auto* tb = tuples->add_subcommand("baseline", "first k primes beyond k");
    tb->add_option("--k", sub_k)->required();

    // exponents
    auto* expo = app.add_subcommand("exponents", "exponent inequality systems");
    double omega = 0, delta = 0, theta = 0, c1 = 0;
    std::optional<double> sigma;
    auto* ec = expo->add_subcommand("check", "Type I/II/III feasibility");
    ec->add_option("--omega", omega)->required();
    ec->add_option("--delta", delta)->required();
    ec->add_option("--sigma", sigma);
    auto* ew = expo->add_subcommand("window", "admissible sigma window");
    ew->add_option("--omega", omega)->required();
    ew->add_option("--delta", delta)->required();
    auto* eh = expo->add_subcommand("hm", "gap growth exponent 2/(theta(1-c1))");
    eh->add_option("--theta", theta)->required();
    eh->add_option("--c1", c1)->required();
    expo->add_subcommand("harman-thresholds", "five decomposition thresholds");

    // harman
    auto* harman = app.add_subcommand("harman", "sieve deficiency integrals");
    std::string which = "total";
    double tol = 1e-3;
    std::uint64_t mc_samples = 0;
    auto* hd = harman->add_subcommand("deficiency", "deficiency integral vs bound");
    hd->add_option("--which", which)->check(CLI::IsMember({"5prime", "4prime", "total"}));
    hd->add_option("--tol", tol);
    hd->add_option("--mc-samples", mc_samples, "also run the Monte Carlo oracle");

    // equidist
    auto* equi = app.add_subcommand("equidist", "discrepancy tables");
    ntv::i64 x = 1000000, res_a = 1;
    double eq_theta = 0.525, eq_delta = 0.15;
    auto* et = equi->add_subcommand("table", "per-modulus discrepancies");
    et->add_option("--x", x)->required();
    et->add_option("--theta", eq_theta)->required();
    et->add_option("--delta", eq_delta)->required();
    et->add_option("--a", res_a)->required();
    et->add_option("--workers", workers);

    // expsum
    auto* es = app.add_subcommand("expsum", "exponential sum identities");
    int count = 1000;
    ntv::i64 gA = 1, gB = 0, gm = 1;
    double gK = 1, gT = 1;
    auto* ei = es->add_subcommand("identities", "random identity instances");
    ei->add_option("--count", count);
    auto* ed = es->add_subcommand("deligne", "cancellation ratio sweep");
    ed->add_option("--count", count);
    auto* eg = es->add_subcommand("gcdsum", "exact gcd sum and its bound");
    eg->add_option("--A", gA)->required();
    eg->add_option("--B", gB)->required();
    eg->add_option("--m", gm)->required();
    eg->add_option("--K", gK)->required();
    eg->add_option("--T", gT)->required();

    // reproduce-all
    auto* rall = app.add_subcommand("reproduce-all", "full acceptance suite");
    std::string data_dir = data_dir_default();
    rall->add_option("--data-dir", data_dir, "directory with optional tuple files");

    // let global options (--seed, --out, --format) appear after subcommands
    auto enable_fallthrough = [](CLI::App* node, auto&& self) -> void {
        node->fallthrough();
        for (auto* sub : node->get_subcommands([](const CLI::App*) { return true; }))
            self(sub, self);
    };
    enable_fallthrough(&app, enable_fallthrough);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (tv->parsed() || tn->parsed()) {
            if (!std::filesystem::exists(tuple_file)) {
                std::cerr << "no such file: " << tuple_file << "\n";
                return kExitUsage;
            }
            ntv::ParseStats stats;
            ntv::PrimeTuple t = ntv::parse_tuple_file(tuple_file, &stats);
            if (tv->parsed()) {
                auto rep = ntv::is_admissible(t, workers);
                json extra{{"k", t.k()},
                           {"diameter", t.diameter()},
                           {"primes_checked", rep.primes_checked}};
                if (rep.witness_prime) extra["witness_prime"] = *rep.witness_prime;
                return finish("tuples verify",
                              json::array({result_row("admissible", rep.admissible, extra)}),
                              out_path);
            }
            auto w = ntv::narrowest_window(t, sub_k);
            json extra{{"k", sub_k},
                       {"start_index", w.start_index},
                       {"diameter", w.diameter}};
            return finish("tuples narrowest",
                          json::array({result_row("narrowest_window", true, extra)}), out_path);
        }
        if (tb->parsed()) {
            auto t = ntv::baseline_tuple(sub_k);
            json extra{{"k", t.k()}, {"diameter", t.diameter()}};
            return finish("tuples baseline",
                          json::array({result_row("baseline", true, extra)}), out_path);
        }

        if (ec->parsed()) {
            json results = json::array();
            ntv::ExponentParams p{omega, delta, sigma};
            results.push_back(result_row("mpz_simple", ntv::mpz_simple(omega, delta),
                                         {{"margin", ntv::mpz_simple_margin(omega, delta)}}));
            // informational comparison with the older sufficient condition;
            // never gates the exit status
            results.push_back(result_row(
                "polymath_mpz_comparison", true,
                {{"holds", ntv::polymath_mpz(omega, delta)},
                 {"margin", 1.0 - (600 * omega / 7 + 180 * delta / 7)}}));
            if (sigma) {
                results.push_back(result_row("type_i_ii", ntv::type_i_ii_ok(p),
                                             {{"sigma", *sigma}}));
                results.push_back(result_row("type_iii", ntv::type_iii_ok(p),
                                             {{"sigma", *sigma}}));
            }
            return finish("exponents check", results, out_path);
        }
        if (ew->parsed()) {
            auto w = ntv::mpz_sigma_window(omega, delta);
            json extra{{"lower", w.lower}, {"upper", w.upper}, {"margin", w.upper - w.lower}};
            return finish("exponents window",
                          json::array({result_row("sigma_window", w.nonempty, extra)}),
                          out_path);
        }
        if (eh->parsed()) {
            double v = ntv::hm_exponent(theta, c1);
            std::cout.precision(10);
            std::cout << v << "\n";
            if (!out_path.empty())
                emit(json{{"command", "exponents hm"},
                          {"pass", true},
                          {"results", json::array({result_row("hm_exponent", true,
                                                              {{"value", v}})})}},
                     out_path);
            return kExitPass;
        }
        if (expo->got_subcommand("harman-thresholds")) {
            json results = json::array();
            for (const auto& c : ntv::harman_threshold_checks())
                results.push_back(result_row(c.name, c.pass,
                                             {{"lhs", c.lhs}, {"rhs", c.rhs},
                                              {"margin", c.margin()}}));
            return finish("exponents harman-thresholds", results, out_path);
        }

        if (hd->parsed()) {
            json results = json::array();
            auto add = [&](const std::string& name, ntv::QuadResult q, double bound,
                           const ntv::IteratedRegion* region) {
                bool pass = q.value + q.err_est <= bound;
                json extra{{"value", q.value}, {"err_est", q.err_est},
                           {"bound", bound}, {"margin", bound - q.value - q.err_est}};
                if (mc_samples > 0 && region) {
                    auto mc = ntv::mc_estimate(*region, mc_samples, seed);
                    extra["mc_value"] = mc.value;
                    extra["mc_std_err"] = mc.std_err;
                }
                results.push_back(result_row(name, pass, extra));
            };
            auto five_region = ntv::five_prime_region();
            auto four_region = ntv::four_prime_region();
            if (which == "5prime") {
                add("five_prime_deficiency", ntv::five_prime_deficiency(tol), 3e-7,
                    &five_region);
            } else if (which == "4prime") {
                add("four_prime_deficiency", ntv::four_prime_deficiency(tol), 1e-5,
                    &four_region);
            } else {
                add("five_prime_deficiency", ntv::five_prime_deficiency(tol), 3e-7,
                    &five_region);
                add("four_prime_deficiency", ntv::four_prime_deficiency(tol), 1e-5,
                    &four_region);
                add("c1_total", ntv::c1_total(tol), 1.03e-5, nullptr);
            }
            return finish("harman deficiency", results, out_path, seed);
        }

        if (et->parsed()) {
            auto rep = ntv::discrepancy_table(x, eq_theta, eq_delta, res_a, workers);
            if (format == "csv") {
                std::string csv = ntv::to_csv(rep);
                if (out_path.empty()) {
                    std::cout << csv;
                } else {
                    std::ofstream f(out_path);
                    f << csv;
                }
                return rep.total < rep.trivial_bound ? kExitPass : kExitFail;
            }
            json extra{{"x", rep.x}, {"a", rep.a}, {"moduli", rep.rows.size()},
                       {"total", rep.total}, {"trivial_bound", rep.trivial_bound},
                       {"margin", rep.trivial_bound - rep.total}};
            return finish("equidist table",
                          json::array({result_row("below_trivial_bound",
                                                  rep.total < rep.trivial_bound, extra)}),
                          out_path);
        }

        if (ei->parsed()) {
            std::mt19937_64 rng(seed);
            int fails = 0;
            for (int i = 0; i < count; ++i) {
                auto p = ntv::random_psi_params(rng);
                if (std::abs(ntv::psi_direct(p) - ntv::psi_factored(p).value) > 1e-9)
                    ++fails;
            }
            json extra{{"instances", count}, {"failures", fails}, {"margin", 1e-9}};
            return finish("expsum identities",
                          json::array({result_row("psi_factorization", fails == 0, extra)}),
                          out_path, seed);
        }
        if (ed->parsed()) {
            std::mt19937_64 rng(seed);
            std::vector<ntv::i64> primes;
            for (ntv::i64 p = 101; p <= 2000; ++p) {
                bool is_p = true;
                for (ntv::i64 q = 2; q * q <= p; ++q)
                    if (p % q == 0) { is_p = false; break; }
                if (is_p) primes.push_back(p);
            }
            double max_ratio = 0;
            for (int i = 0; i < count; ++i) {
                ntv::DeligneInstance inst;
                inst.m = primes[std::uniform_int_distribution<std::size_t>(
                    0, primes.size() - 1)(rng)];
                std::uniform_int_distribution<ntv::i64> res(1, inst.m - 1);
                inst.A = res(rng);
                inst.B = res(rng);
                inst.L = res(rng);
                std::uniform_int_distribution<ntv::i64> len(50, 1500);
                inst.psi_delta = {static_cast<double>(len(rng)), 0.0};
                inst.psi_n = {static_cast<double>(len(rng)), 0.0};
                max_ratio = std::max(max_ratio, ntv::deligne_ratio(inst));
            }
            json extra{{"instances", count}, {"max_ratio", max_ratio},
                       {"margin", 10.0 - max_ratio}};
            return finish("expsum deligne",
                          json::array({result_row("max_ratio_below_10", max_ratio < 10,
                                                  extra)}),
                          out_path, seed);
        }
        if (eg->parsed()) {
            ntv::i64 v = ntv::gcd_sum(gA, gB, gm, gK, gT);
            double bound = 3.0 * ntv::divisor_count(gm) * std::gcd(std::abs(gA), gm) * gT;
            json extra{{"value", v}, {"bound", bound}, {"margin", bound - v}};
            return finish("expsum gcdsum",
                          json::array({result_row("gcd_sum", v <= bound, extra)}), out_path);
        }

        if (rall->parsed()) {
            auto checks = ntv::run_acceptance(data_dir, seed);
            json results = json::array();
            bool any_fail = false;
            for (const auto& c : checks) {
                json row{{"name", c.name}, {"status", ntv::to_string(c.status)},
                         {"id", c.id}, {"detail", c.detail}};
                results.push_back(row);
                any_fail = any_fail || c.status == ntv::CheckStatus::fail;
            }
            json report{{"command", "reproduce-all"}, {"pass", !any_fail},
                        {"seed", seed}, {"results", results}};
            emit(report, out_path);
            return any_fail ? kExitFail : kExitPass;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
