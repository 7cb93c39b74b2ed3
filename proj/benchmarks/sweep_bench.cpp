// Benchmark comparing the serial reference sweep against the OpenMP kernel
// on the same parameter-space enumeration.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cohomog7/cli.hpp"
#include "cohomog7/sweep.hpp"

using namespace cohomog7;

namespace {

double run_timed(const std::vector<FamilyParams>& tuples, SweepMode mode,
                 std::vector<ClassificationReport>& out) {
    const auto start = std::chrono::steady_clock::now();
    out = classify_tuples(tuples, mode);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    long long bound = 20;
    std::string families_text = "L,M,N,O";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--bound" && i + 1 < argc) {
            bound = std::atoll(argv[++i]);
        } else if (arg == "--families" && i + 1 < argc) {
            families_text = argv[++i];
        } else {
            std::cerr << "usage: sweep_bench [--bound N] [--families L,M,N,O]\n";
            return 1;
        }
    }

    std::vector<FamilyParams> tuples;
    for (Family f : cli::parse_family_list(families_text)) {
        auto part = enumerate_family(f, bound);
        tuples.insert(tuples.end(), part.begin(), part.end());
    }
    std::cout << "bound " << bound << ", " << tuples.size() << " valid tuples\n";
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; parallel mode falls back to serial\n";
#endif

    std::vector<ClassificationReport> serial_rows, parallel_rows;
    const double serial_ms = run_timed(tuples, SweepMode::Serial, serial_rows);
    const double parallel_ms = run_timed(tuples, SweepMode::Parallel, parallel_rows);

    if (serial_rows.size() != parallel_rows.size()) {
        std::cerr << "FAIL: row counts differ\n";
        return 1;
    }
    for (std::size_t i = 0; i < serial_rows.size(); ++i) {
        if (serial_rows[i].to_json() != parallel_rows[i].to_json()) {
            std::cerr << "FAIL: row " << i << " differs between serial and parallel\n";
            return 1;
        }
    }

    std::cout << "serial:   " << serial_ms << " ms\n";
    std::cout << "parallel: " << parallel_ms << " ms\n";
    if (parallel_ms > 0.0) {
        std::cout << "speedup:  " << serial_ms / parallel_ms << "x\n";
    }
    std::cout << "results identical\n";
    return 0;
}
