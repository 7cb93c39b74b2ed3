#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

#include "cohomog7/abelian.hpp"
#include "cohomog7/errors.hpp"

namespace cohomog7 {

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Carries the maps between finitely generated free abelian groups
/// (a rows x cols matrix is a map Z^cols -> Z^rows in the standard bases).
class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(check_dims(rows, cols)) {}

    static IntMatrix identity(int n);

    /// Row-by-row construction, convenient for literals in tests.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpz_class& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const mpz_class& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    IntMatrix operator*(const IntMatrix& rhs) const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    /// row_i += c * row_j
    void add_row_multiple(int i, int j, const mpz_class& c);
    /// col_i += c * col_j
    void add_col_multiple(int i, int j, const mpz_class& c);
    void negate_row(int i);
    void negate_col(int i);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    static std::size_t check_dims(int rows, int cols) {
        if (rows <= 0 || cols <= 0) throw invalid_input("matrix dimensions must be positive");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    int rows_;
    int cols_;
    std::vector<mpz_class> entries_;
};

/// Smith normal form u * a * v = d: u, v unimodular, d diagonal with
/// non-negative entries satisfying d_i | d_{i+1}.
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

SnfDecomposition smith_normal_form(const IntMatrix& a);

/// Exact determinant (Bareiss fraction-free elimination).
/// Throws invalid_input when a is not square.
mpz_class determinant(const IntMatrix& a);

/// Number of non-zero diagonal entries of the Smith normal form.
int rank(const IntMatrix& a);

/// Rank of the kernel lattice of the map Z^cols -> Z^rows, i.e. cols - rank(a).
int kernel_rank(const IntMatrix& a);

/// Z^rows / image(a) in invariant-factor normal form.
AbelianGroup cokernel(const IntMatrix& a);

}  // namespace cohomog7
