/**
 * @file bench.hpp
 * @brief Benchmark harness: run systems, collect counters, emit TSV rows.
 */
#ifndef SGB_BENCH_HPP
#define SGB_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sgb/engine.hpp"
#include "sgb/io.hpp"

namespace sgb {

struct BenchRow {
    std::string system;
    Statistics stats;
    std::uint64_t time_ms = 0;
    std::size_t basis_size = 0;
    bool timed_out = false;
};

struct BenchCase {
    std::string name;
    SystemFile sys;
};

/// Run each case with the given options; a per-case timeout (0 = none)
/// records a failed row and the suite continues.
std::vector<BenchRow> bench(const std::vector<BenchCase>& suite, RunOptions opts,
                            std::uint64_t timeout_ms = 0);

std::string bench_tsv_header();
std::string bench_tsv_row(const BenchRow& row);

}  // namespace sgb

#endif
