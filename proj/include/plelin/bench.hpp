#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "plelin/generate.hpp"

namespace plelin {

enum class BenchFamily { random, random_ple };
enum class BenchAlgorithm { classical, fraction_free };

std::string to_string(BenchFamily family);
std::string to_string(BenchAlgorithm algorithm);

struct BenchRecord {
    BenchFamily family = BenchFamily::random;
    BenchAlgorithm algorithm = BenchAlgorithm::classical;
    GenParams params;
    std::size_t repetitions = 0;
    std::vector<double> cpu_ms;
    std::vector<double> wall_ms;

    double mean_cpu_ms() const;
    double median_cpu_ms() const;
};

struct BenchOptions {
    std::size_t repetitions = 5;
    std::uint64_t seed = 20160816;
    // Verify that the classical and fraction-free reduced forms agree on
    // every generated matrix before any timing happens.
    bool cross_check = true;
};

// Parameter grids of the standard benchmark tables: the 8-row square/wide
// grid for random matrices and its 10-row extension for random PLE matrices.
std::vector<GenParams> bench_grid_random();
std::vector<GenParams> bench_grid_random_ple();

// Runs every algorithm on the same seeded matrices, one record per
// (family, algorithm, params) combination. Strictly single-threaded.
std::vector<BenchRecord> bench_run(BenchFamily family,
                                   const std::vector<BenchAlgorithm>& algorithms,
                                   const std::vector<GenParams>& grid,
                                   const BenchOptions& options);

void write_bench_csv_header(std::ostream& out);
void write_bench_csv_rows(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace plelin
