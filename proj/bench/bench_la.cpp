// Benchmark for the row-reduction kernel: the OpenMP elimination (rref)
// against the serial reference (rref_serial) on random dense matrices, over
// the rationals and over a word-sized prime field.  The two must agree
// entry-for-entry; any divergence aborts with a nonzero exit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rrlab/field.hpp"
#include "rrlab/la.hpp"

using namespace rrlab;

namespace {

Mat random_matrix(const Field& k, int rows, int cols, std::mt19937_64& rng) {
    Mat m(k, rows, cols);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Coeff::from_long(k, entry(rng));
    return m;
}

bool same(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!(a.at(i, j) - b.at(i, j)).is_zero()) return false;
    return true;
}

double run_case(const char* label, const Field& k, int rows, int cols, int reps,
                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double serial_total = 0, parallel_total = 0;
    for (int rep = 0; rep < reps; ++rep) {
        Mat base = random_matrix(k, rows, cols, rng);
        Mat a = base;
        Mat b = base;
        auto t0 = std::chrono::steady_clock::now();
        int rank_serial = rref_serial(a);
        auto t1 = std::chrono::steady_clock::now();
        int rank_parallel = rref(b);
        auto t2 = std::chrono::steady_clock::now();
        serial_total += std::chrono::duration<double>(t1 - t0).count();
        parallel_total += std::chrono::duration<double>(t2 - t1).count();
        if (rank_serial != rank_parallel || !same(a, b)) {
            std::fprintf(stderr, "MISMATCH: %s %dx%d rep %d (ranks %d vs %d)\n", label, rows,
                         cols, rep, rank_serial, rank_parallel);
            std::exit(1);
        }
    }
    std::printf("%-10s %4dx%-4d  serial %8.3fs  parallel %8.3fs  speedup %.2fx\n", label, rows,
                cols, serial_total, parallel_total,
                parallel_total > 0 ? serial_total / parallel_total : 0.0);
    std::fflush(stdout);
    return serial_total;
}

}  // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    if (scale < 1) scale = 1;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both paths run serially\n");
#endif
    Field q = Field::rationals();
    Field p = Field::prime(2147483629u);
    run_case("QQ", q, 60 * scale, 90 * scale, 3, 1);
    run_case("QQ wide", q, 40 * scale, 200 * scale, 3, 2);
    run_case("Fp", p, 150 * scale, 220 * scale, 3, 3);
    run_case("Fp tall", p, 300 * scale, 160 * scale, 3, 4);
    std::printf("all parallel/serial results identical\n");
    return 0;
}
