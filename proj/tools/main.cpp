#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "plelin/axioms.hpp"
#include "plelin/bench.hpp"
#include "plelin/errors.hpp"
#include "plelin/ffge.hpp"
#include "plelin/generate.hpp"
#include "plelin/matrix_io.hpp"
#include "plelin/ple.hpp"
#include "plelin/reduce.hpp"
#include "plelin/rng.hpp"

namespace {

using namespace plelin;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    return file;
}

void cmd_gen(const GenParams& params, const std::string& family, std::uint64_t mod,
             const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    const bool ple_family = family == "random-ple";
    if (mod != 0) {
        const PrimeField field(mod);
        const auto m =
            ple_family ? gen_random_ple_matrix(params, field) : gen_random_matrix(params, field);
        write_matrix(out, m, field.modulus());
    } else {
        const auto m = ple_family ? gen_random_ple_matrix(params) : gen_random_matrix(params);
        write_matrix(out, m);
    }
}

// Prints the factor blocks back to back, each in the matrix file format,
// followed by a final "rank r" line.
template <typename T, typename Writer>
void print_ple(std::ostream& out, const Matrix<T>& m, Writer&& write_factor) {
    const auto hook = ple(m);
    const auto factors = hook.to_matrices();
    write_factor(factors.p);
    out << '\n';
    write_factor(factors.l);
    out << '\n';
    write_factor(factors.e);
    out << "\nrank " << hook.rank() << '\n';
}

template <typename T, typename Writer>
void print_rref(std::ostream& out, const Matrix<T>& m, Writer&& write_factor) {
    const auto hook = rref(m);
    const auto factors = hook.to_matrices();
    write_factor(factors.p);
    out << '\n';
    write_factor(factors.l);
    out << '\n';
    write_factor(factors.u);
    out << '\n';
    write_factor(factors.e);
    out << "\nrank " << hook.rank() << '\n';
}

void print_decomposition(std::ostream& out, const AnyMatrix& input, bool reduced) {
    if (const auto* rational = std::get_if<Matrix<Rational>>(&input)) {
        const auto writer = [&](const Matrix<Rational>& f) { write_matrix(out, f); };
        if (reduced)
            print_rref(out, *rational, writer);
        else
            print_ple(out, *rational, writer);
        return;
    }
    const auto& fm = std::get<PrimeFieldMatrix>(input);
    const auto writer = [&](const Matrix<PrimeFieldElement>& f) {
        write_matrix(out, f, fm.modulus);
    };
    if (reduced)
        print_rref(out, fm.entries, writer);
    else
        print_ple(out, fm.entries, writer);
}

void cmd_ffge(std::ostream& out, const AnyMatrix& input) {
    const auto* m = std::get_if<Matrix<Rational>>(&input);
    if (!m) throw std::runtime_error("ffge expects a rational matrix");
    const auto [result, scalings] = ffge_rational(*m);
    write_matrix(out, to_rational_matrix(result.echelon));
    out << "rank " << result.rank << '\n';
    out << "det_factor " << result.det_factor.get_str() << '\n';
}

int cmd_selftest() {
    std::size_t failures = 0;
    const auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
        if (!ok) ++failures;
    };

    {
        const auto m = Matrix<Rational>::from_rows({
            {84, 168, 588, -252, 336, 49},
            {672, 1344, 4704, -1992, 4722, 2552},
            {-504, -1008, -3528, 2100, -1575, -4998},
            {168, 336, 1176, -168, 1428, -2002},
        });
        const auto hook = ple(m);
        const auto f = hook.to_matrices();
        const bool ok = hook.rank() == 3 &&
                        permute_rows(hook.perm(), matrix_mul(f.l, f.e)) == m;
        report("4x6 rational example reconstructs with rank 3", ok);
    }
    {
        Rng rng(99);
        auto sample = [&] { return Rational{rng.symmetric(48), rng.bits(24) + 1}; };
        report("rational axiom suite (200 samples)",
               run_axiom_suite<Rational>(sample, 200).all_passed());
    }
    {
        const PrimeField f7(7);
        std::vector<PrimeFieldElement> elements;
        for (std::uint64_t r = 0; r < 7; ++r) elements.push_back(f7.element_from_residue(r));
        report("F_7 axiom suite (exhaustive)", run_axiom_suite_exhaustive(elements).all_passed());
    }
    {
        bool ok = true;
        const PrimeField field(101);
        for (std::uint64_t seed = 0; seed < 20 && ok; ++seed) {
            const GenParams params{6, 8, 1, 1, 1, seed};
            const auto m = gen_random_matrix(params, field);
            const auto f = ple(m).to_matrices();
            ok = matrix_mul(f.p, matrix_mul(f.l, f.e)) == m;
        }
        report("20 PLE reconstructions over F_101", ok);
    }
    {
        bool ok = true;
        for (std::uint64_t seed = 100; seed < 120 && ok; ++seed) {
            const GenParams params{5, 6, 1, 2, 1, seed};
            const auto m = gen_random_matrix(params);
            ok = rref(m).to_matrices().e == ffge_rref(m);
        }
        report("20 classical/fraction-free rref agreements", ok);
    }

    if (failures != 0) {
        std::cout << failures << " selftest check(s) failed\n";
        return 1;
    }
    std::cout << "all selftest checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dense linear algebra: PLE/PLUE decompositions over division rings"};
    app.require_subcommand(1);

    GenParams params;
    std::string family = "random";
    std::uint64_t mod = 0;
    std::string out_path;
    std::string in_path;

    auto* gen = app.add_subcommand("gen", "generate a random matrix");
    gen->add_option("--nrs", params.nrs, "number of rows");
    gen->add_option("--ncs", params.ncs, "number of columns");
    gen->add_option("--snum", params.snum, "numerator size bound in 64-bit words");
    gen->add_option("--nden", params.nden, "max number of denominator factors");
    gen->add_option("--sden", params.sden, "denominator factor size bound in words");
    gen->add_option("--seed", params.seed, "PRNG seed");
    gen->add_option("--family", family)->check(CLI::IsMember({"random", "random-ple"}));
    gen->add_option("--mod", mod, "generate over F_p instead of Q");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* ple_cmd = app.add_subcommand("ple", "PLE decomposition of a matrix file");
    ple_cmd->add_option("file", in_path)->required();
    auto* rref_cmd = app.add_subcommand("rref", "PLUE decomposition (reduced echelon form)");
    rref_cmd->add_option("file", in_path)->required();
    auto* ffge_cmd = app.add_subcommand("ffge", "fraction-free elimination of a rational matrix");
    ffge_cmd->add_option("file", in_path)->required();

    BenchOptions bench_options;
    std::string bench_family = "both";
    std::string bench_algorithm = "both";
    std::string grid_name = "default";
    auto* bench_cmd = app.add_subcommand("bench", "benchmark harness emitting CSV");
    bench_cmd->add_option("--family", bench_family)
        ->check(CLI::IsMember({"random", "random-ple", "both"}));
    bench_cmd->add_option("--algorithm", bench_algorithm)
        ->check(CLI::IsMember({"classical", "fraction-free", "both"}));
    bench_cmd->add_option("--reps", bench_options.repetitions, "matrices per parameter set");
    bench_cmd->add_option("--seed", bench_options.seed, "corpus seed");
    bench_cmd->add_option("--out", out_path, "CSV file (default stdout)");
    bool single_point = false;
    bench_cmd->add_flag("--single", single_point, "bench one parameter set given by --nrs etc.");
    bench_cmd->add_option("--nrs", params.nrs);
    bench_cmd->add_option("--ncs", params.ncs);
    bench_cmd->add_option("--snum", params.snum);
    bench_cmd->add_option("--nden", params.nden);
    bench_cmd->add_option("--sden", params.sden);

    auto* selftest_cmd = app.add_subcommand("selftest", "quick built-in checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            cmd_gen(params, family, mod, out_path);
        } else if (ple_cmd->parsed() || rref_cmd->parsed()) {
            print_decomposition(std::cout, read_matrix_file(in_path), rref_cmd->parsed());
        } else if (ffge_cmd->parsed()) {
            cmd_ffge(std::cout, read_matrix_file(in_path));
        } else if (bench_cmd->parsed()) {
            std::vector<BenchAlgorithm> algorithms;
            if (bench_algorithm == "classical" || bench_algorithm == "both")
                algorithms.push_back(BenchAlgorithm::classical);
            if (bench_algorithm == "fraction-free" || bench_algorithm == "both")
                algorithms.push_back(BenchAlgorithm::fraction_free);

            std::ofstream file;
            std::ostream& out = open_output(file, out_path);
            write_bench_csv_header(out);
            const auto run_family = [&](BenchFamily f) {
                std::vector<GenParams> grid;
                if (single_point)
                    grid.push_back(params);
                else
                    grid = f == BenchFamily::random ? bench_grid_random()
                                                    : bench_grid_random_ple();
                write_bench_csv_rows(out, bench_run(f, algorithms, grid, bench_options));
            };
            if (bench_family == "random" || bench_family == "both")
                run_family(BenchFamily::random);
            if (bench_family == "random-ple" || bench_family == "both")
                run_family(BenchFamily::random_ple);
        } else if (selftest_cmd->parsed()) {
            return cmd_selftest();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
