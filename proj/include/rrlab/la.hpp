#pragma once

#include <vector>

#include "rrlab/field.hpp"

namespace rrlab {

// Dense matrix over the session field.  Used for graded-strand ranks, for
// the brute-force membership oracle in the tests, and for minimal-generator
// selection; exactness matters, speed mostly does not.
class Mat {
public:
    Mat(const Field& k, int rows, int cols)
        : field_(k), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols,
                                           Coeff::zero(k)) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    const Field& field() const { return field_; }

    Coeff& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Coeff& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

private:
    Field field_;
    int r_, c_;
    std::vector<Coeff> a_;
};

// Reduced row echelon form in place; returns the rank.  rref_serial is the
// reference implementation; rref eliminates rows in parallel (OpenMP) and
// must produce bit-identical results.
int rref_serial(Mat& m);
int rref(Mat& m);

int rank_of(Mat m);

// Does b lie in the column span of A?
bool in_col_span(const Mat& A, const std::vector<Coeff>& b);

// Basis of the right kernel (vectors x with A x = 0).
std::vector<std::vector<Coeff>> kernel_basis(Mat m);

}  // namespace rrlab
