/*
   Copyright 2026 looptop contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOOPTOP_EXACT_MATRIX_HPP
#define LOOPTOP_EXACT_MATRIX_HPP

#include "looptop/scalars.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace looptop {

/// Dense matrix over an exact coefficient ring.
template <class R>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, ring_traits<R>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring_traits<R>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != ring_traits<R>::zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a.at(i, k);
                if (aik == ring_traits<R>::zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference: shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(const R& s, Matrix a) {
        for (auto& x : a.a_) x *= s;
        return a;
    }

    std::vector<R> apply(const std::vector<R>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply: length mismatch");
        std::vector<R> out(rows_, ring_traits<R>::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> a_;
};

/// Rank over a field by Gaussian elimination.
template <class K>
std::size_t field_rank(Matrix<K> m) {
    static_assert(ring_traits<K>::is_field, "field_rank requires a field");
    std::size_t rank = 0;
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, col) == ring_traits<K>::zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        K inv = ring_traits<K>::unit_inverse(m.at(rank, col));
        for (std::size_t j = col; j < cols; ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            K factor = m.at(i, col);
            if (factor == ring_traits<K>::zero()) continue;
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= factor * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Smith normal form U*A*V = D of an integer matrix, with the invariant
/// factor chain d_1 | d_2 | ... normalized positive. V and its inverse are
/// tracked so kernels and cokernels can be read off.
struct SmithForm {
    Matrix<Integer> d;
    Matrix<Integer> u;     // row transform, unimodular
    Matrix<Integer> v;     // column transform, unimodular
    Matrix<Integer> vinv;  // exact inverse of v
    std::vector<Integer> invariant_factors;
    std::size_t rank = 0;
};

namespace detail {

inline void row_add(Matrix<Integer>& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += q * m.at(src, j);
}
inline void col_add(Matrix<Integer>& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += q * m.at(i, src);
}
inline void row_swap(Matrix<Integer>& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
inline void col_swap(Matrix<Integer>& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
inline void row_negate(Matrix<Integer>& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace detail

inline SmithForm smith_normal_form(const Matrix<Integer>& input) {
    using detail::col_add;
    using detail::col_swap;
    using detail::row_add;
    using detail::row_negate;
    using detail::row_swap;

    SmithForm s;
    s.d = input;
    const std::size_t m = input.rows(), n = input.cols();
    s.u = Matrix<Integer>::identity(m);
    s.v = Matrix<Integer>::identity(n);
    s.vinv = Matrix<Integer>::identity(n);
    Matrix<Integer>& d = s.d;

    auto do_row_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
        row_add(d, dst, src, q);
        row_add(s.u, dst, src, q);
    };
    auto do_col_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
        col_add(d, dst, src, q);
        col_add(s.v, dst, src, q);
        row_add(s.vinv, src, dst, -q);  // inverse of the elementary column op
    };
    auto do_row_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        row_swap(d, a, b);
        row_swap(s.u, a, b);
    };
    auto do_col_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        col_swap(d, a, b);
        col_swap(s.v, a, b);
        row_swap(s.vinv, a, b);
    };
    auto do_row_negate = [&](std::size_t r) {
        row_negate(d, r);
        row_negate(s.u, r);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // Locate a minimal nonzero entry in the trailing submatrix.
        bool found = false;
        std::size_t pi = t, pj = t;
        Integer best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (d.at(i, j) == 0) continue;
                Integer a = abs(d.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        do_row_swap(t, pi);
        do_col_swap(t, pj);

        bool reduced = true;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (d.at(i, t) == 0) continue;
            Integer q = d.at(i, t) / d.at(t, t);
            do_row_add(i, t, -q);
            if (d.at(i, t) != 0) reduced = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (d.at(t, j) == 0) continue;
            Integer q = d.at(t, j) / d.at(t, t);
            do_col_add(j, t, -q);
            if (d.at(t, j) != 0) reduced = false;
        }
        if (!reduced) continue;  // a smaller pivot appeared

        // Enforce the divisibility chain before advancing.
        bool divides_all = true;
        for (std::size_t i = t + 1; i < m && divides_all; ++i)
            for (std::size_t j = t + 1; j < n && divides_all; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    do_row_add(t, i, 1);
                    divides_all = false;
                }
        if (!divides_all) continue;

        if (d.at(t, t) < 0) do_row_negate(t);
        ++t;
    }

    for (std::size_t i = 0; i < t; ++i) s.invariant_factors.push_back(d.at(i, i));
    s.rank = t;
    return s;
}

/// Basis of the integer kernel (columns).
inline Matrix<Integer> integer_kernel(const Matrix<Integer>& a) {
    SmithForm s = smith_normal_form(a);
    std::size_t n = a.cols(), z = n - s.rank;
    Matrix<Integer> k(n, z);
    for (std::size_t j = 0; j < z; ++j)
        for (std::size_t i = 0; i < n; ++i) k.at(i, j) = s.v.at(i, s.rank + j);
    return k;
}

/// Structure of a finitely generated abelian group: free rank plus
/// invariant-factor torsion.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, in chain order

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    std::string to_string() const {
        if (free_rank == 0 && torsion.empty()) return "0";
        std::string out;
        if (free_rank == 1) out = "Z";
        if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
        for (const auto& t : torsion) {
            if (!out.empty()) out += " + ";
            out += "Z/" + t.str();
        }
        return out;
    }
};

/// Cokernel of an integer matrix, i.e. Z^rows / column span.
inline AbelianGroup cokernel(const Matrix<Integer>& relations) {
    SmithForm s = smith_normal_form(relations);
    AbelianGroup g;
    g.free_rank = relations.rows() - s.rank;
    for (const auto& f : s.invariant_factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

/// Whether the class of v is torsion (possibly zero) in coker(relations).
inline bool is_torsion_in_cokernel(const Matrix<Integer>& relations,
                                   const std::vector<Integer>& v) {
    SmithForm s = smith_normal_form(relations);
    std::vector<Integer> u = s.u.apply(v);
    for (std::size_t i = s.rank; i < u.size(); ++i)
        if (u[i] != 0) return false;
    return true;
}

}  // namespace looptop

#endif
