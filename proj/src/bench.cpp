#include "sgb/bench.hpp"

#include <chrono>
#include <sstream>

namespace sgb {

namespace {

template <class R>
BenchRow run_case(const BenchCase& c, RunOptions opts, std::uint64_t timeout_ms) {
    BenchRow row;
    row.system = c.name;
    opts.order = c.sys.monomial_order();
    if (timeout_ms > 0)
        opts.deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(timeout_ms);
    auto polys = system_polys<R>(c.sys);
    auto t0 = std::chrono::steady_clock::now();
    try {
        RunResult<R> res = run<R>(polys, opts);
        row.stats = res.stats;
        row.basis_size = res.basis.size();
    } catch (const TimeoutError&) {
        row.timed_out = true;
    }
    auto t1 = std::chrono::steady_clock::now();
    row.time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    return row;
}

}  // namespace

std::vector<BenchRow> bench(const std::vector<BenchCase>& suite, RunOptions opts,
                            std::uint64_t timeout_ms) {
    std::vector<BenchRow> rows;
    for (const auto& c : suite) {
        if (c.sys.ring == "QQ")
            rows.push_back(run_case<RationalField>(c, opts, timeout_ms));
        else
            rows.push_back(run_case<IntegerRing>(c, opts, timeout_ms));
    }
    return rows;
}

std::string bench_tsv_header() {
    return "system\tpairs\ts-pols\tcoprime\tchain\tf5\tsingular\t1-singular\t"
           "red-to-0\ttime-ms\tbasis-size\tstatus";
}

std::string bench_tsv_row(const BenchRow& row) {
    std::ostringstream os;
    const Statistics& s = row.stats;
    os << row.system << "\t" << s.pairs << "\t" << s.spols << "\t" << s.elim_coprime
       << "\t" << s.elim_chain << "\t" << s.elim_f5 << "\t" << s.elim_singular << "\t"
       << s.elim_1singular << "\t" << s.red_to_zero << "\t" << row.time_ms << "\t"
       << row.basis_size << "\t" << (row.timed_out ? "timeout" : "ok");
    return os.str();
}

}  // namespace sgb
