// Command-line driver: compute strong Groebner bases over ZZ or QQ, generate
// benchmark instances, run benchmark suites, and verify bases.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgb/bench.hpp"
#include "sgb/instances.hpp"
#include "sgb/oracle.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CriteriaFlags {
    bool no_coprime = false, no_chain = false, no_f5 = false;
    bool no_singular = false, no_syzygy = false, no_1singular = false;

    void add_to(CLI::App* app) {
        app->add_flag("--no-coprime", no_coprime, "disable the coprime criterion");
        app->add_flag("--no-chain", no_chain, "disable the chain criterion");
        app->add_flag("--no-f5", no_f5, "disable the F5 criterion");
        app->add_flag("--no-singular", no_singular, "disable the singular criterion");
        app->add_flag("--no-syzygy", no_syzygy, "disable the syzygy criterion");
        app->add_flag("--no-1singular", no_1singular, "disable the 1-singular criterion");
    }
    void apply(sgb::RunOptions& opts) const {
        opts.coprime = !no_coprime;
        opts.chain = !no_chain;
        opts.f5 = !no_f5;
        opts.singular = !no_singular;
        opts.syzygy = !no_syzygy;
        opts.one_singular = !no_1singular;
    }
};

std::string stats_json(const sgb::Statistics& s, std::uint64_t ms, std::size_t basis) {
    std::ostringstream os;
    os << "{\"pairs\":" << s.pairs << ",\"spols\":" << s.spols
       << ",\"coprime\":" << s.elim_coprime << ",\"chain\":" << s.elim_chain
       << ",\"f5\":" << s.elim_f5 << ",\"singular\":" << s.elim_singular
       << ",\"one_singular\":" << s.elim_1singular << ",\"red_to_zero\":" << s.red_to_zero
       << ",\"time_ms\":" << ms << ",\"basis_size\":" << basis << "}";
    return os.str();
}

template <class R>
int run_compute(const sgb::SystemFile& sys, sgb::RunOptions opts,
                const std::string& trace_path, const std::string& stats_mode) {
    opts.order = sys.monomial_order();
    opts.trace = !trace_path.empty();
    auto polys = sgb::system_polys<R>(sys);
    auto t0 = std::chrono::steady_clock::now();
    sgb::RunResult<R> res = sgb::run<R>(polys, opts);
    auto t1 = std::chrono::steady_clock::now();
    auto ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());

    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";

    std::cout << "vars: ";
    for (std::size_t i = 0; i < sys.vars.size(); ++i)
        std::cout << (i ? "," : "") << sys.vars[i];
    std::cout << "\norder: " << sgb::order_name(sys.order) << "\nring: " << R::name()
              << "\n";
    for (const auto& lp : res.basis)
        std::cout << sgb::poly_to_string<R>(lp.poly, sys.vars) << "\n";

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw std::runtime_error("cannot write trace file: " + trace_path);
        sgb::write_trace<R>(out, res.trace, sys.vars);
    }
    if (stats_mode == "tsv") {
        sgb::BenchRow row;
        row.system = "input";
        row.stats = res.stats;
        row.time_ms = ms;
        row.basis_size = res.basis.size();
        std::cerr << sgb::bench_tsv_header() << "\n" << sgb::bench_tsv_row(row) << "\n";
    } else if (stats_mode == "json") {
        std::cerr << stats_json(res.stats, ms, res.basis.size()) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong Groebner bases over principal ideal domains"};
    app.require_subcommand(0, 1);

    // Main compute mode.
    std::string input_path, order_override, ring_override, trace_path, stats_mode;
    bool interreduce = false, checked = false;
    CriteriaFlags crit;
    app.add_option("--input", input_path, "system file to process");
    app.add_option("--order", order_override, "override the monomial order (lex|degrevlex)");
    app.add_option("--ring", ring_override, "override the coefficient ring (ZZ|QQ)");
    bool gpol_prune = false;
    crit.add_to(&app);
    app.add_flag("--interreduce", interreduce, "interreduce at outer-loop boundaries");
    app.add_flag("--gpol-prune", gpol_prune,
                 "aggressively prune dominated G-polynomial completions");
    app.add_flag("--check", checked, "carry and verify cofactor certificates");
    app.add_option("--trace", trace_path, "write the event trace to FILE");
    app.add_option("--stats", stats_mode, "emit run statistics (tsv|json) on stderr")
        ->check(CLI::IsMember({"tsv", "json"}));

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a benchmark instance");
    int gen_katsura = 0;
    std::string gen_generic;
    std::uint64_t gen_seed = 1;
    gen_cmd->add_option("--katsura", gen_katsura, "Katsura-N instance");
    gen_cmd->add_option("--generic", gen_generic, "generic instance spec n,d,s");
    gen_cmd->add_option("--seed", gen_seed, "seed for the generic instance");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run a benchmark suite");
    std::string suite_name, bench_spec, seeds_path, bench_json;
    int bench_max = 4;
    std::uint64_t bench_timeout = 0;
    CriteriaFlags bench_crit;
    bool bench_interreduce = false;
    bench_cmd->add_option("--suite", suite_name, "suite name (katsura|generic)")
        ->required();
    bench_cmd->add_option("--max", bench_max, "katsura suite: run n = 1..N");
    bench_cmd->add_option("--spec", bench_spec, "generic suite: n,d,s");
    bench_cmd->add_option("--seeds", seeds_path, "generic suite: file with one seed per line");
    bench_cmd->add_option("--timeout", bench_timeout, "per-system timeout in milliseconds");
    bench_cmd->add_option("--json", bench_json, "also write rows as JSON lines to FILE");
    bench_crit.add_to(bench_cmd);
    bench_cmd->add_flag("--interreduce", bench_interreduce,
                        "interreduce at outer-loop boundaries");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a basis against inputs");
    std::string verify_input, verify_basis;
    verify_cmd->add_option("--input", verify_input, "system file with the generators")
        ->required();
    verify_cmd->add_option("--basis", verify_basis, "system file with the basis")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) {
            sgb::SystemFile sys;
            if (gen_katsura > 0) {
                sys = sgb::katsura(gen_katsura);
            } else if (!gen_generic.empty()) {
                int n, d, s;
                if (std::sscanf(gen_generic.c_str(), "%d,%d,%d", &n, &d, &s) != 3)
                    throw std::runtime_error("--generic expects n,d,s");
                sys = sgb::generic(n, d, s, gen_seed);
            } else {
                throw std::runtime_error("gen: one of --katsura or --generic is required");
            }
            std::cout << sgb::print_system(sys);
            return 0;
        }

        if (bench_cmd->parsed()) {
            std::vector<sgb::BenchCase> suite;
            if (suite_name == "katsura") {
                for (int n = 1; n <= bench_max; ++n)
                    suite.push_back({"katsura-" + std::to_string(n), sgb::katsura(n)});
            } else if (suite_name == "generic") {
                int n, d, s;
                if (std::sscanf(bench_spec.c_str(), "%d,%d,%d", &n, &d, &s) != 3)
                    throw std::runtime_error("--spec expects n,d,s");
                if (seeds_path.empty())
                    throw std::runtime_error("generic suite requires --seeds FILE");
                std::istringstream in(slurp(seeds_path));
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty()) continue;
                    std::uint64_t seed = std::stoull(line);
                    std::ostringstream name;
                    name << "generic-" << n << "-" << d << "-" << s << "-seed" << seed;
                    suite.push_back({name.str(), sgb::generic(n, d, s, seed)});
                }
            } else {
                throw std::runtime_error("unknown suite: " + suite_name);
            }
            sgb::RunOptions opts;
            bench_crit.apply(opts);
            opts.interreduce = bench_interreduce;
            auto rows = sgb::bench(suite, opts, bench_timeout);
            std::cout << sgb::bench_tsv_header() << "\n";
            std::ofstream json_out;
            if (!bench_json.empty()) json_out.open(bench_json);
            for (const auto& row : rows) {
                std::cout << sgb::bench_tsv_row(row) << "\n";
                if (json_out)
                    json_out << stats_json(row.stats, row.time_ms, row.basis_size) << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            sgb::SystemFile in_sys = sgb::parse_system(slurp(verify_input));
            sgb::SystemFile basis_sys = sgb::parse_system(slurp(verify_basis));
            if (in_sys.vars != basis_sys.vars)
                throw std::runtime_error("verify: variable lists differ");
            sgb::MonomialOrder ord = in_sys.monomial_order();
            sgb::VerificationReport report;
            if (basis_sys.ring == "QQ") {
                report = sgb::verify_strong_gb<sgb::RationalField>(
                    ord, sgb::system_polys<sgb::RationalField>(basis_sys),
                    sgb::system_polys<sgb::RationalField>(in_sys), nullptr, &in_sys.vars);
            } else {
                report = sgb::verify_strong_gb<sgb::IntegerRing>(
                    ord, sgb::system_polys<sgb::IntegerRing>(basis_sys),
                    sgb::system_polys<sgb::IntegerRing>(in_sys), nullptr, &in_sys.vars);
            }
            std::cout << report.to_string();
            return report.passed ? 0 : 1;
        }

        // Main compute mode.
        if (input_path.empty()) {
            std::cerr << app.help();
            return 2;
        }
        sgb::SystemFile sys = sgb::parse_system(slurp(input_path));
        if (!order_override.empty()) sys.order = sgb::order_from_name(order_override);
        if (!ring_override.empty()) {
            if (ring_override != "ZZ" && ring_override != "QQ")
                throw std::runtime_error("unsupported ring: " + ring_override);
            sys.ring = ring_override;
        }
        sgb::RunOptions opts;
        crit.apply(opts);
        opts.interreduce = interreduce;
        opts.gpol_prune = gpol_prune;
        opts.checked = checked;
        if (sys.ring == "QQ")
            return run_compute<sgb::RationalField>(sys, opts, trace_path, stats_mode);
        return run_compute<sgb::IntegerRing>(sys, opts, trace_path, stats_mode);
    } catch (const sgb::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
