#include "rrlab/la.hpp"

#include <stdexcept>

namespace rrlab {

namespace {

// Shared pivot sweep.  The row elimination step is delegated so the parallel
// and serial variants differ only in how that loop runs.
template <typename Eliminate>
int rref_impl(Mat& m, Eliminate eliminate) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Coeff inv = m.at(rank, col).inv();
        for (int j = col; j < m.cols(); ++j) m.at(rank, j) = m.at(rank, j) * inv;
        eliminate(m, rank, col);
        ++rank;
    }
    return rank;
}

void eliminate_row(Mat& m, int pivot_row, int col, int i) {
    const Coeff f = m.at(i, col);
    if (f.is_zero()) return;
    for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(pivot_row, j);
}

}  // namespace

int rref_serial(Mat& m) {
    return rref_impl(m, [](Mat& a, int rank, int col) {
        for (int i = 0; i < a.rows(); ++i)
            if (i != rank) eliminate_row(a, rank, col, i);
    });
}

int rref(Mat& m) {
    return rref_impl(m, [](Mat& a, int rank, int col) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < a.rows(); ++i)
            if (i != rank) eliminate_row(a, rank, col, i);
    });
}

int rank_of(Mat m) { return rref(m); }

bool in_col_span(const Mat& A, const std::vector<Coeff>& b) {
    if (static_cast<int>(b.size()) != A.rows())
        throw std::invalid_argument("in_col_span: size mismatch");
    Mat aug(A.field(), A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    Mat base = A;
    return rref(base) == rref(aug);
}

std::vector<std::vector<Coeff>> kernel_basis(Mat m) {
    const Field k = m.field();
    int n = m.cols();
    rref(m);

    std::vector<int> pivot_of_col(n, -1);
    int r = 0;
    for (int col = 0; col < n && r < m.rows(); ++col) {
        if (!m.at(r, col).is_zero()) {
            pivot_of_col[col] = r;
            ++r;
        }
    }

    std::vector<std::vector<Coeff>> out;
    for (int col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<Coeff> v(n, Coeff::zero(k));
        v[col] = Coeff::one(k);
        for (int c2 = 0; c2 < col; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = -m.at(pivot_of_col[c2], col);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace rrlab
