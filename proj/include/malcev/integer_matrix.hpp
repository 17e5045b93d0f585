// Dense matrices over arbitrary-precision integers: Smith normal form with
// unimodular transforms, kernel bases, cokernels and exact linear solving.
// Everything in this header is exact; no floating point anywhere.
#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace malcev {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// malformed user input: files, CLI arguments, invalid parameters
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a broken internal invariant; signals a bug, not bad input
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix&) const = default;

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(),
                           [](const Integer& x) { return x == 0; });
    }

    IntegerMatrix operator*(const IntegerMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw internal_error("matrix product: dimension mismatch");
        IntegerMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Integer& a = (*this)(i, k);
                if (a == 0)
                    continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k)
            std::swap((*this)(k, i), (*this)(k, j));
    }

    // row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(dst, k) += q * (*this)(src, k);
    }

    // col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t k = 0; k < rows_; ++k)
            (*this)(k, dst) += q * (*this)(k, src);
    }

    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(i, k) = -(*this)(i, k);
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? " " : "[") << (*this)(i, j).str();
            os << "]" << (i + 1 == rows_ ? "]" : "\n");
        }
        if (rows_ == 0)
            os << "[]";
        return os.str();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithDecomposition {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
};

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> invariant_factors;  // each > 1, d_i | d_{i+1}

    bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }

    bool operator==(const AbelianGroup&) const = default;

    std::string str() const {
        if (trivial())
            return "0";
        std::string s;
        if (free_rank == 1)
            s = "Z";
        else if (free_rank > 1)
            s = "Z^" + std::to_string(free_rank);
        for (const Integer& d : invariant_factors)
            s += (s.empty() ? "" : " x ") + ("Z/" + d.str());
        return s;
    }
};

// Smith normal form by pivoting on the smallest nonzero entry; the small
// pivot keeps intermediate entries from blowing up on the matrices we meet.
inline SmithDecomposition smith_normal_form(IntegerMatrix a) {
    const std::size_t r = a.rows(), c = a.cols();
    IntegerMatrix u = IntegerMatrix::identity(r);
    IntegerMatrix v = IntegerMatrix::identity(c);

    std::size_t t = 0;
    while (t < r && t < c) {
        // smallest nonzero |entry| of the trailing submatrix becomes the pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                const Integer& x = a(i, j);
                if (x == 0)
                    continue;
                if (!found || abs(x) < abs(a(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found)
            break;
        if (pi != t) {
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }

        for (;;) {
            bool swapped = false;
            // clear the column below the pivot
            for (std::size_t i = t + 1; i < r && !swapped; ++i) {
                if (a(i, t) == 0)
                    continue;
                Integer q = a(i, t) / a(t, t);
                if (q != 0) {
                    a.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                if (a(i, t) != 0) {
                    // remainder is strictly smaller: promote it to pivot
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    swapped = true;
                }
            }
            if (swapped)
                continue;
            // clear the row right of the pivot
            for (std::size_t j = t + 1; j < c && !swapped; ++j) {
                if (a(t, j) == 0)
                    continue;
                Integer q = a(t, j) / a(t, t);
                if (q != 0) {
                    a.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    swapped = true;
                }
            }
            if (swapped)
                continue;
            // pivot must divide the rest of the submatrix for the chain
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c && !fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed = true;
                    }
            if (!fixed)
                break;
        }

        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    return {std::move(u), std::move(a), std::move(v)};
}

inline std::size_t rank(const SmithDecomposition& s) {
    std::size_t n = std::min(s.d.rows(), s.d.cols());
    std::size_t k = 0;
    while (k < n && s.d(k, k) != 0)
        ++k;
    return k;
}

// Z^rows / (column span of a), as invariant factors plus a free part.
inline AbelianGroup cokernel(const IntegerMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    AbelianGroup g;
    std::size_t rk = rank(s);
    for (std::size_t k = 0; k < rk; ++k)
        if (s.d(k, k) > 1)
            g.invariant_factors.push_back(s.d(k, k));
    g.free_rank = a.rows() - rk;
    return g;
}

// Columns form a basis of { x : a x = 0 }; they extend to a basis of Z^cols.
inline IntegerMatrix kernel_basis(const IntegerMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    std::size_t rk = rank(s);
    IntegerMatrix k(a.cols(), a.cols() - rk);
    for (std::size_t j = rk; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i)
            k(i, j - rk) = s.v(i, j);
    return k;
}

// Exact solve of a x = b over Z (column by column); throws internal_error
// when no integral solution exists.
inline IntegerMatrix solve_exact(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows())
        throw internal_error("solve_exact: dimension mismatch");
    SmithDecomposition s = smith_normal_form(a);
    std::size_t rk = rank(s);
    IntegerMatrix c = s.u * b;
    IntegerMatrix y(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < rk) {
                if (c(i, j) % s.d(i, i) != 0)
                    throw internal_error("solve_exact: no integral solution");
                y(i, j) = c(i, j) / s.d(i, i);
            } else if (c(i, j) != 0) {
                throw internal_error("solve_exact: inconsistent system");
            }
        }
    }
    return s.v * y;
}

}  // namespace malcev
