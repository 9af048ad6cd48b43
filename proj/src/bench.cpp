#include "plelin/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <ostream>
#include <sstream>

#include "plelin/errors.hpp"
#include "plelin/ffge.hpp"
#include "plelin/reduce.hpp"

namespace plelin {

namespace {

double cpu_now_ms() {
    timespec ts{};
    clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) * 1e3 + static_cast<double>(ts.tv_nsec) * 1e-6;
}

double wall_now_ms() {
    const auto now = std::chrono::steady_clock::now().time_since_epoch();
    return std::chrono::duration<double, std::milli>(now).count();
}

// Keeps results observable so the timed call cannot be elided.
volatile std::size_t bench_sink = 0;

void run_algorithm(BenchAlgorithm algorithm, const Matrix<Rational>& m) {
    switch (algorithm) {
        case BenchAlgorithm::classical:
            bench_sink = bench_sink + ple(m).rank();
            break;
        case BenchAlgorithm::fraction_free:
            bench_sink = bench_sink + ffge_rational(m).result.rank;
            break;
    }
}

std::string json_array(const std::vector<double>& values) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) os << ',';
        os << values[i];
    }
    os << ']';
    return os.str();
}

}  // namespace

std::string to_string(BenchFamily family) {
    return family == BenchFamily::random ? "random" : "random-ple";
}

std::string to_string(BenchAlgorithm algorithm) {
    return algorithm == BenchAlgorithm::classical ? "classical" : "fraction-free";
}

double BenchRecord::mean_cpu_ms() const {
    if (cpu_ms.empty()) return 0.0;
    double sum = 0.0;
    for (double v : cpu_ms) sum += v;
    return sum / static_cast<double>(cpu_ms.size());
}

double BenchRecord::median_cpu_ms() const {
    if (cpu_ms.empty()) return 0.0;
    std::vector<double> sorted = cpu_ms;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    if (sorted.size() % 2 == 1) return sorted[mid];
    return (sorted[mid - 1] + sorted[mid]) / 2.0;
}

std::vector<GenParams> bench_grid_random() {
    std::vector<GenParams> grid;
    const std::size_t rows[8][5] = {
        {10, 10, 10, 5, 2}, {10, 20, 10, 5, 2}, {10, 30, 10, 5, 3}, {10, 40, 10, 5, 4},
        {10, 10, 50, 5, 5}, {10, 20, 50, 5, 5}, {10, 30, 50, 5, 5}, {20, 20, 50, 5, 5},
    };
    for (const auto& row : rows)
        grid.push_back(GenParams{row[0], row[1], row[2], row[3], row[4], 0});
    return grid;
}

std::vector<GenParams> bench_grid_random_ple() {
    std::vector<GenParams> grid = bench_grid_random();
    grid.push_back(GenParams{60, 60, 1, 1, 1, 0});
    grid.push_back(GenParams{100, 100, 1, 1, 1, 0});
    return grid;
}

std::vector<BenchRecord> bench_run(BenchFamily family,
                                   const std::vector<BenchAlgorithm>& algorithms,
                                   const std::vector<GenParams>& grid,
                                   const BenchOptions& options) {
    if (options.repetitions < 1)
        throw std::invalid_argument("bench_run: need at least one repetition");

    std::vector<BenchRecord> records;
    records.reserve(grid.size() * algorithms.size());

    Rng seeder(options.seed);
    for (std::size_t row = 0; row < grid.size(); ++row) {
        std::vector<BenchRecord> row_records;
        for (BenchAlgorithm algorithm : algorithms) {
            BenchRecord record;
            record.family = family;
            record.algorithm = algorithm;
            record.params = grid[row];
            record.repetitions = options.repetitions;
            row_records.push_back(std::move(record));
        }

        for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
            GenParams params = grid[row];
            params.seed = seeder.split(row * 1000003 + rep).next_u64();
            const Matrix<Rational> m = family == BenchFamily::random
                                           ? gen_random_matrix(params)
                                           : gen_random_ple_matrix(params);
            if (rep == 0)
                for (auto& record : row_records) record.params.seed = params.seed;

            if (options.cross_check) {
                const Matrix<Rational> classical = rref(m).to_matrices().e;
                const Matrix<Rational> fraction_free = ffge_rref(m);
                if (classical != fraction_free)
                    throw internal_error("bench_run: classical and fraction-free reduced "
                                         "forms disagree");
            }

            for (std::size_t a = 0; a < algorithms.size(); ++a) {
                const double wall0 = wall_now_ms();
                const double cpu0 = cpu_now_ms();
                run_algorithm(algorithms[a], m);
                row_records[a].cpu_ms.push_back(cpu_now_ms() - cpu0);
                row_records[a].wall_ms.push_back(wall_now_ms() - wall0);
            }
        }

        for (auto& record : row_records) records.push_back(std::move(record));
    }
    return records;
}

void write_bench_csv_header(std::ostream& out) {
    out << "family,algorithm,nrs,ncs,snum,nden,sden,reps,mean_ms,median_ms,raw_times\n";
}

void write_bench_csv_rows(std::ostream& out, const std::vector<BenchRecord>& records) {
    for (const auto& r : records) {
        // raw_times is a JSON object; CSV-quote it with doubled quotes.
        std::string json = "{\"cpu_ms\":" + json_array(r.cpu_ms) +
                           ",\"wall_ms\":" + json_array(r.wall_ms) + "}";
        std::string quoted = "\"";
        for (char c : json) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        quoted += '"';
        out << to_string(r.family) << ',' << to_string(r.algorithm) << ',' << r.params.nrs << ','
            << r.params.ncs << ',' << r.params.snum << ',' << r.params.nden << ','
            << r.params.sden << ',' << r.repetitions << ',' << r.mean_cpu_ms() << ','
            << r.median_cpu_ms() << ',' << quoted << '\n';
    }
}

}  // namespace plelin
