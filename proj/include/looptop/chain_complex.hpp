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

#ifndef LOOPTOP_CHAIN_COMPLEX_HPP
#define LOOPTOP_CHAIN_COMPLEX_HPP

#include "looptop/exact_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace looptop {

struct invalid_complex : std::invalid_argument {
    explicit invalid_complex(const std::string& what) : std::invalid_argument(what) {}
};

/// Finite free chain complex with named generators per degree and exact
/// boundary matrices d_k : C_k -> C_{k-1} (rows indexed by target
/// generators). d o d = 0 is enforced at construction.
template <class R>
class ChainComplex {
  public:
    ChainComplex() = default;

    ChainComplex(std::map<int, std::vector<std::string>> generators,
                 std::map<int, Matrix<R>> boundaries)
        : gens_(std::move(generators)), d_(std::move(boundaries)) {
        for (const auto& [k, names] : gens_) {
            std::set<std::string> seen(names.begin(), names.end());
            if (seen.size() != names.size())
                throw invalid_complex("duplicate generator name in degree " + std::to_string(k));
        }
        for (const auto& [k, m] : d_) {
            if (m.rows() != dim(k - 1) || m.cols() != dim(k))
                throw invalid_complex("boundary in degree " + std::to_string(k) +
                                      " has wrong shape");
        }
        for (const auto& [k, m] : d_) {
            if (dim(k - 2) == 0) continue;
            if (!(boundary(k - 1) * m).is_zero())
                throw invalid_complex("d o d != 0 between degrees " + std::to_string(k) +
                                      " and " + std::to_string(k - 2));
        }
    }

    std::size_t dim(int k) const {
        auto it = gens_.find(k);
        return it == gens_.end() ? 0 : it->second.size();
    }

    const std::vector<std::string>& generators(int k) const {
        static const std::vector<std::string> empty;
        auto it = gens_.find(k);
        return it == gens_.end() ? empty : it->second;
    }

    /// Boundary d_k, a zero matrix of the right shape when absent.
    Matrix<R> boundary(int k) const {
        auto it = d_.find(k);
        if (it != d_.end()) return it->second;
        return Matrix<R>(dim(k - 1), dim(k));
    }

    /// Degrees carrying generators, ascending.
    std::vector<int> degrees() const {
        std::vector<int> out;
        for (const auto& [k, names] : gens_)
            if (!names.empty()) out.push_back(k);
        return out;
    }
    int min_degree() const { return gens_.empty() ? 0 : gens_.begin()->first; }
    int max_degree() const { return gens_.empty() ? 0 : gens_.rbegin()->first; }

    /// Index of a named generator in degree k, or -1.
    int generator_index(int k, const std::string& name) const {
        const auto& names = generators(k);
        auto it = std::find(names.begin(), names.end(), name);
        return it == names.end() ? -1 : static_cast<int>(it - names.begin());
    }

  private:
    std::map<int, std::vector<std::string>> gens_;
    std::map<int, Matrix<R>> d_;
};

/// Per-degree homology. Torsion is only populated over Z.
using HomologySummary = std::map<int, AbelianGroup>;

/// Drop zero groups so summaries computed along different routes compare
/// cleanly.
inline HomologySummary nonzero_part(const HomologySummary& h) {
    HomologySummary out;
    for (const auto& [k, g] : h)
        if (g.free_rank > 0 || !g.torsion.empty()) out.emplace(k, g);
    return out;
}

template <class R>
HomologySummary homology(const ChainComplex<R>& c) {
    HomologySummary out;
    for (int k : c.degrees()) {
        std::size_t rank_k, rank_k1;
        AbelianGroup g;
        if constexpr (ring_traits<R>::is_field) {
            rank_k = field_rank(c.boundary(k));
            rank_k1 = field_rank(c.boundary(k + 1));
        } else {
            SmithForm sk = smith_normal_form(c.boundary(k));
            SmithForm sk1 = smith_normal_form(c.boundary(k + 1));
            rank_k = sk.rank;
            rank_k1 = sk1.rank;
            for (const auto& f : sk1.invariant_factors)
                if (f > 1) g.torsion.push_back(f);
        }
        g.free_rank = c.dim(k) - rank_k - rank_k1;
        out.emplace(k, g);
    }
    return out;
}

/// The basepoint data of the reduced theory: a cycle generator q0 together
/// with the Euler characteristic weighting its subcomplex.
struct DistinguishedPoint {
    std::string generator;
    int degree = 0;
    Integer chi = 0;
};

namespace detail {
template <class R>
void require_distinguished_cycle(const ChainComplex<R>& c, const DistinguishedPoint& dp) {
    int idx = c.generator_index(dp.degree, dp.generator);
    if (idx < 0)
        throw std::invalid_argument("distinguished generator " + dp.generator +
                                    " not found in degree " + std::to_string(dp.degree));
    Matrix<R> d = c.boundary(dp.degree);
    for (std::size_t i = 0; i < d.rows(); ++i)
        if (d.at(i, static_cast<std::size_t>(idx)) != ring_traits<R>::zero())
            throw std::invalid_argument("distinguished generator " + dp.generator +
                                        " is not a cycle");
}
}  // namespace detail

/// Quotient complex C / R*chi*q0, presented by generators and relations:
/// when chi is nonzero in R, one relation generator in degree(q0)+1 with
/// boundary chi*q0 is appended. With chi = 0 in R the quotient is C
/// itself.
template <class R>
ChainComplex<R> reduced_complex(const ChainComplex<R>& c, const DistinguishedPoint& dp) {
    detail::require_distinguished_cycle(c, dp);
    R chi = ring_traits<R>::from_integer(dp.chi);
    if (chi == ring_traits<R>::zero()) return c;

    std::map<int, std::vector<std::string>> gens;
    std::map<int, Matrix<R>> bounds;
    for (int k : c.degrees()) gens[k] = c.generators(k);
    int top = dp.degree + 1;
    std::string rel = dp.generator + ".rel";
    while (c.generator_index(top, rel) >= 0) rel += "'";
    gens[top].push_back(rel);

    int lo = std::min(c.min_degree(), top - 1), hi = std::max(c.max_degree(), top);
    for (int k = lo; k <= hi + 1; ++k) {
        Matrix<R> d = c.boundary(k);
        std::size_t rows = d.rows() + (k - 1 == top ? 1 : 0);
        std::size_t cols = d.cols() + (k == top ? 1 : 0);
        if (rows == 0 || cols == 0) continue;
        Matrix<R> out(rows, cols);
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) out.at(i, j) = d.at(i, j);
        if (k == top)
            out.at(static_cast<std::size_t>(c.generator_index(dp.degree, dp.generator)),
                   cols - 1) = chi;
        bounds[k] = out;
    }
    return ChainComplex<R>(std::move(gens), std::move(bounds));
}

/// Outcome of comparing reduced homology against the naive quotient
/// description H(C) / chi * im(H(pt) -> H(C)).
struct ReducedComparison {
    bool hypothesis_holds = false;  // chi*H_0(pt) -> H_0(C) injective
    bool equal = false;             // degreewise equality of the two descriptions
    HomologySummary reduced;
    HomologySummary quotient;
    std::string note;

    std::string to_text() const {
        std::string out = "injectivity hypothesis: ";
        out += hypothesis_holds ? "holds" : "fails";
        out += "\nreduced == quotient description: ";
        out += equal ? "yes" : "no";
        if (!note.empty()) out += "\n" + note;
        out += "\n";
        return out;
    }
};

template <class R>
ReducedComparison compare_reduced(const ChainComplex<R>& c, const DistinguishedPoint& dp) {
    detail::require_distinguished_cycle(c, dp);
    ReducedComparison cmp;
    cmp.reduced = nonzero_part(homology(reduced_complex(c, dp)));

    R chi = ring_traits<R>::from_integer(dp.chi);
    HomologySummary base = homology(c);
    int d0 = dp.degree;
    std::size_t q_idx = static_cast<std::size_t>(c.generator_index(d0, dp.generator));

    if constexpr (ring_traits<R>::is_field) {
        // [q0] != 0 iff q0 is not a boundary.
        Matrix<R> b = c.boundary(d0 + 1);
        Matrix<R> ext(b.rows(), b.cols() + 1);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) ext.at(i, j) = b.at(i, j);
        ext.at(q_idx, b.cols()) = ring_traits<R>::one();
        bool q0_nonzero = field_rank(ext) > field_rank(b);
        bool chi_zero = chi == ring_traits<R>::zero();
        cmp.hypothesis_holds = chi_zero || q0_nonzero;
        if (!chi_zero && q0_nonzero) base[d0].free_rank -= 1;
        cmp.note = chi_zero ? "chi = 0 in the coefficient field"
                            : (q0_nonzero ? "chi*[q0] spans a line in H" : "chi*[q0] = 0 in H");
    } else {
        SmithForm s = smith_normal_form(c.boundary(d0));
        std::size_t n = c.dim(d0), z = n - s.rank;
        // Kernel coordinates of a cycle: the tail of vinv * cycle.
        auto kernel_coords = [&](const std::vector<Integer>& cycle) {
            std::vector<Integer> y = s.vinv.apply(cycle);
            for (std::size_t i = 0; i < s.rank; ++i)
                if (y[i] != 0) throw std::logic_error("kernel coordinates of a non-cycle");
            return std::vector<Integer>(y.begin() + s.rank, y.end());
        };
        Matrix<Integer> b = c.boundary(d0 + 1);
        Matrix<Integer> relations(z, b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::vector<Integer> col(b.rows());
            for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b.at(i, j);
            std::vector<Integer> y = kernel_coords(col);
            for (std::size_t i = 0; i < z; ++i) relations.at(i, j) = y[i];
        }
        std::vector<Integer> q0(n, 0);
        q0[q_idx] = 1;
        std::vector<Integer> y0 = kernel_coords(q0);

        bool chi_zero = dp.chi == 0;
        std::vector<Integer> chi_y0 = y0;
        for (auto& x : chi_y0) x *= dp.chi;
        cmp.hypothesis_holds = chi_zero || !is_torsion_in_cokernel(relations, chi_y0);
        cmp.note = chi_zero ? "chi = 0"
                            : (cmp.hypothesis_holds ? "chi*[q0] has infinite order in H"
                                                    : "chi*[q0] is torsion in H");
        if (!chi_zero) {
            Matrix<Integer> extended(z, relations.cols() + 1);
            for (std::size_t i = 0; i < z; ++i) {
                for (std::size_t j = 0; j < relations.cols(); ++j)
                    extended.at(i, j) = relations.at(i, j);
                extended.at(i, relations.cols()) = chi_y0[i];
            }
            base[d0] = cokernel(extended);
        }
    }
    cmp.quotient = nonzero_part(base);
    cmp.equal = cmp.reduced == cmp.quotient;
    return cmp;
}

}  // namespace looptop

#endif
