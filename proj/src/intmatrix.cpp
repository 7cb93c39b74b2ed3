#include "cohomog7/intmatrix.hpp"

#include <algorithm>
#include <utility>

namespace cohomog7 {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    const int r = static_cast<int>(rows.size());
    if (r == 0) throw invalid_input("matrix needs at least one row");
    const int c = static_cast<int>(rows.begin()->size());
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw invalid_input("ragged rows");
        int j = 0;
        for (long long v : row) m(i, j++) = mpz_class(static_cast<long>(v));
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw invalid_input("dimension mismatch in matrix product");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a_ik = (*this)(i, k);
            if (a_ik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                out(i, j) += a_ik * rhs(k, j);
            }
        }
    }
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(int i, int j, const mpz_class& c) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col_multiple(int i, int j, const mpz_class& c) {
    for (int k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void IntMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(int i) {
    for (int k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
}

namespace {

// Locate the entry of smallest non-zero absolute value in the trailing
// submatrix d[s.., s..]. Returns false when that submatrix is zero.
bool find_pivot(const IntMatrix& d, int s, int& pi, int& pj) {
    bool found = false;
    mpz_class best;
    for (int i = s; i < d.rows(); ++i) {
        for (int j = s; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            mpz_class v = abs(d(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    SnfDecomposition snf{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& u = snf.u;
    IntMatrix& d = snf.d;
    IntMatrix& v = snf.v;

    const int steps = std::min(m, n);
    for (int s = 0; s < steps; ++s) {
        int pi = s, pj = s;
        if (!find_pivot(d, s, pi, pj)) break;  // remaining block is zero

        for (;;) {
            d.swap_rows(s, pi);
            u.swap_rows(s, pi);
            d.swap_cols(s, pj);
            v.swap_cols(s, pj);

            // Clear column s below the pivot and row s to its right.
            bool dirty = false;
            for (int i = s + 1; i < m; ++i) {
                if (d(i, s) == 0) continue;
                mpz_class q = d(i, s) / d(s, s);
                d.add_row_multiple(i, s, -q);
                u.add_row_multiple(i, s, -q);
                if (d(i, s) != 0) dirty = true;  // remainder survives, pivot shrinks next round
            }
            for (int j = s + 1; j < n; ++j) {
                if (d(s, j) == 0) continue;
                mpz_class q = d(s, j) / d(s, s);
                d.add_col_multiple(j, s, -q);
                v.add_col_multiple(j, s, -q);
                if (d(s, j) != 0) dirty = true;
            }
            if (dirty) {
                find_pivot(d, s, pi, pj);
                continue;
            }

            // Pivot is lone; force it to divide the whole trailing block.
            bool divides_all = true;
            for (int i = s + 1; i < m && divides_all; ++i) {
                for (int j = s + 1; j < n; ++j) {
                    if (d(i, j) % d(s, s) != 0) {
                        d.add_row_multiple(s, i, 1);
                        u.add_row_multiple(s, i, 1);
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) break;
            find_pivot(d, s, pi, pj);
        }

        if (d(s, s) < 0) {
            d.negate_row(s);
            u.negate_row(s);
        }
    }
    return snf;
}

mpz_class determinant(const IntMatrix& a) {
    if (!a.is_square()) throw invalid_input("determinant requires a square matrix");
    const int n = a.rows();
    IntMatrix w = a;
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i) {
                if (w(i, k) != 0) {
                    r = i;
                    break;
                }
            }
            if (r < 0) return 0;
            w.swap_rows(k, r);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Bareiss: division by the previous pivot is exact.
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

int rank(const IntMatrix& a) {
    const SnfDecomposition snf = smith_normal_form(a);
    int r = 0;
    const int k = std::min(a.rows(), a.cols());
    for (int i = 0; i < k; ++i) {
        if (snf.d(i, i) != 0) ++r;
    }
    return r;
}

int kernel_rank(const IntMatrix& a) {
    return a.cols() - rank(a);
}

AbelianGroup cokernel(const IntMatrix& a) {
    const SnfDecomposition snf = smith_normal_form(a);
    std::vector<mpz_class> factors;
    int rk = 0;
    const int k = std::min(a.rows(), a.cols());
    for (int i = 0; i < k; ++i) {
        if (snf.d(i, i) != 0) {
            factors.push_back(snf.d(i, i));
            ++rk;
        }
    }
    return AbelianGroup::from_parts(a.rows() - rk, std::move(factors));
}

}  // namespace cohomog7
