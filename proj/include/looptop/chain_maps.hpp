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

#ifndef LOOPTOP_CHAIN_MAPS_HPP
#define LOOPTOP_CHAIN_MAPS_HPP

#include "looptop/chain_complex.hpp"
#include "looptop/identities.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace looptop {

/// Graded linear map between complexes: blocks[k] : C_k -> D_{k+degree}.
/// Absent blocks are zero.
template <class R>
struct ChainMap {
    int degree = 0;
    std::map<int, Matrix<R>> blocks;

    Matrix<R> block(int k, const ChainComplex<R>& src, const ChainComplex<R>& tgt) const {
        auto it = blocks.find(k);
        if (it != blocks.end()) return it->second;
        return Matrix<R>(tgt.dim(k + degree), src.dim(k));
    }

    static ChainMap zero(int degree) { return ChainMap{degree, {}}; }

    static ChainMap identity(const ChainComplex<R>& c) {
        ChainMap f{0, {}};
        for (int k : c.degrees()) f.blocks[k] = Matrix<R>::identity(c.dim(k));
        return f;
    }
};

template <class R>
void validate_shapes(const ChainMap<R>& f, const ChainComplex<R>& src,
                     const ChainComplex<R>& tgt) {
    for (const auto& [k, m] : f.blocks)
        if (m.rows() != tgt.dim(k + f.degree) || m.cols() != src.dim(k))
            throw std::invalid_argument("chain map block in degree " + std::to_string(k) +
                                        " has wrong shape");
}

template <class R>
ChainMap<R> add(const ChainMap<R>& f, const ChainMap<R>& g, const ChainComplex<R>& src,
                const ChainComplex<R>& tgt) {
    if (f.degree != g.degree) throw std::invalid_argument("chain map sum: degree mismatch");
    ChainMap<R> out{f.degree, {}};
    for (int k : src.degrees()) out.blocks[k] = f.block(k, src, tgt) + g.block(k, src, tgt);
    return out;
}

template <class R>
ChainMap<R> subtract(const ChainMap<R>& f, const ChainMap<R>& g, const ChainComplex<R>& src,
                     const ChainComplex<R>& tgt) {
    if (f.degree != g.degree)
        throw std::invalid_argument("chain map difference: degree mismatch");
    ChainMap<R> out{f.degree, {}};
    for (int k : src.degrees()) out.blocks[k] = f.block(k, src, tgt) - g.block(k, src, tgt);
    return out;
}

/// f after g, through the middle complex.
template <class R>
ChainMap<R> compose(const ChainMap<R>& f, const ChainMap<R>& g, const ChainComplex<R>& src,
                    const ChainComplex<R>& mid, const ChainComplex<R>& tgt) {
    ChainMap<R> out{f.degree + g.degree, {}};
    for (int k : src.degrees())
        out.blocks[k] = f.block(k + g.degree, mid, tgt) * g.block(k, src, mid);
    return out;
}

/// The graded commutator [d, Gamma] = d Gamma - (-1)^{deg Gamma} Gamma d
/// as a map of degree deg Gamma - 1.
template <class R>
ChainMap<R> boundary_commutator(const ChainMap<R>& gamma, const ChainComplex<R>& src,
                                const ChainComplex<R>& tgt) {
    ChainMap<R> out{gamma.degree - 1, {}};
    R sign = (gamma.degree % 2 != 0) ? -ring_traits<R>::one() : ring_traits<R>::one();
    for (int k : src.degrees()) {
        Matrix<R> lhs = tgt.boundary(k + gamma.degree) * gamma.block(k, src, tgt);
        Matrix<R> rhs = gamma.block(k - 1, src, tgt) * src.boundary(k);
        out.blocks[k] = lhs - sign * rhs;
    }
    return out;
}

namespace detail {
template <class R>
void record_matrix_mismatch(IdentityReport& report, int k, const Matrix<R>& lhs,
                            const Matrix<R>& rhs) {
    ++report.checked_pairs;
    if (lhs == rhs) return;
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (lhs.at(i, j) != rhs.at(i, j)) {
                report.violations.push_back(
                    {"degree " + std::to_string(k) + ", entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ")",
                     ring_traits<R>::to_string(lhs.at(i, j)),
                     ring_traits<R>::to_string(rhs.at(i, j))});
                return;  // one witness per degree
            }
}
}  // namespace detail

/// d_target F = (-1)^{deg F} F d_source, entrywise, in every degree.
template <class R>
IdentityReport verify_chain_map(const ChainMap<R>& f, const ChainComplex<R>& src,
                                const ChainComplex<R>& tgt) {
    validate_shapes(f, src, tgt);
    IdentityReport report;
    report.identity = "chain map";
    report.window = "degrees " + std::to_string(src.min_degree()) + ".." +
                    std::to_string(src.max_degree() + 1);
    R sign = (f.degree % 2 != 0) ? -ring_traits<R>::one() : ring_traits<R>::one();
    for (int k = src.min_degree(); k <= src.max_degree() + 1; ++k) {
        Matrix<R> lhs = tgt.boundary(k + f.degree) * f.block(k, src, tgt);
        Matrix<R> rhs = sign * (f.block(k - 1, src, tgt) * src.boundary(k));
        detail::record_matrix_mismatch(report, k, lhs, rhs);
    }
    return report;
}

/// d H + H d = F - G for maps F, G of equal degree and a homotopy H one
/// degree higher.
template <class R>
IdentityReport verify_homotopy(const ChainMap<R>& f, const ChainMap<R>& g, const ChainMap<R>& h,
                               const ChainComplex<R>& src, const ChainComplex<R>& tgt) {
    if (f.degree != g.degree || h.degree != f.degree + 1)
        throw std::invalid_argument("verify_homotopy: degree mismatch");
    validate_shapes(f, src, tgt);
    validate_shapes(g, src, tgt);
    validate_shapes(h, src, tgt);
    IdentityReport report;
    report.identity = "chain homotopy";
    report.window = "degrees " + std::to_string(src.min_degree()) + ".." +
                    std::to_string(src.max_degree() + 1);
    for (int k = src.min_degree(); k <= src.max_degree() + 1; ++k) {
        Matrix<R> lhs = tgt.boundary(k + h.degree) * h.block(k, src, tgt) +
                        h.block(k - 1, src, tgt) * src.boundary(k);
        Matrix<R> rhs = f.block(k, src, tgt) - g.block(k, src, tgt);
        detail::record_matrix_mismatch(report, k, lhs, rhs);
    }
    return report;
}

/// [d, Gamma] = rhs on the given complex, with the graded commutator
/// convention d Gamma - (-1)^{deg Gamma} Gamma d.
template <class R>
IdentityReport verify_commutator_relation(const ChainMap<R>& gamma, const ChainMap<R>& rhs,
                                          const ChainComplex<R>& cx) {
    if (rhs.degree != gamma.degree - 1)
        throw std::invalid_argument("verify_commutator_relation: rhs degree mismatch");
    validate_shapes(gamma, cx, cx);
    validate_shapes(rhs, cx, cx);
    IdentityReport report;
    report.identity = "boundary commutator";
    report.window = "degrees " + std::to_string(cx.min_degree()) + ".." +
                    std::to_string(cx.max_degree() + 1);
    ChainMap<R> lhs = boundary_commutator(gamma, cx, cx);
    for (int k = cx.min_degree(); k <= cx.max_degree() + 1; ++k)
        detail::record_matrix_mismatch(report, k, lhs.block(k, cx, cx), rhs.block(k, cx, cx));
    return report;
}

/// C (x) D with the Koszul differential d(x(x)y) = dx(x)y + (-1)^{|x|} x(x)dy.
/// Generator names are "x(x)y"; pair bookkeeping is kept for indexing maps.
template <class R>
struct TensorComplex {
    ChainComplex<R> complex;
    // per degree: (left degree, left index, right degree, right index)
    std::map<int, std::vector<std::array<int, 4>>> pairs;

    int index_of(int deg_left, int idx_left, int deg_right, int idx_right) const {
        auto it = pairs.find(deg_left + deg_right);
        if (it == pairs.end()) return -1;
        const auto& v = it->second;
        std::array<int, 4> key{deg_left, idx_left, deg_right, idx_right};
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] == key) return static_cast<int>(i);
        return -1;
    }
};

template <class R>
TensorComplex<R> tensor_complex(const ChainComplex<R>& c, const ChainComplex<R>& d) {
    TensorComplex<R> t;
    std::map<int, std::vector<std::string>> gens;
    for (int i : c.degrees())
        for (int j : d.degrees()) {
            for (std::size_t a = 0; a < c.dim(i); ++a)
                for (std::size_t b = 0; b < d.dim(j); ++b) {
                    t.pairs[i + j].push_back({i, static_cast<int>(a), j, static_cast<int>(b)});
                    gens[i + j].push_back(c.generators(i)[a] + "⊗" + d.generators(j)[b]);
                }
        }
    std::map<int, Matrix<R>> bounds;
    for (const auto& [k, words] : t.pairs) {
        if (t.pairs.find(k - 1) == t.pairs.end()) continue;
        Matrix<R> m(t.pairs.at(k - 1).size(), words.size());
        for (std::size_t col = 0; col < words.size(); ++col) {
            auto [di, a, dj, b] = words[col];
            Matrix<R> dc = c.boundary(di);
            for (std::size_t i = 0; i < dc.rows(); ++i) {
                if (dc.at(i, a) == ring_traits<R>::zero()) continue;
                int row = t.index_of(di - 1, static_cast<int>(i), dj, b);
                if (row < 0) throw std::logic_error("tensor complex: missing pair index");
                m.at(static_cast<std::size_t>(row), col) += dc.at(i, a);
            }
            Matrix<R> dd = d.boundary(dj);
            R sign = (di % 2 != 0) ? -ring_traits<R>::one() : ring_traits<R>::one();
            for (std::size_t i = 0; i < dd.rows(); ++i) {
                if (dd.at(i, b) == ring_traits<R>::zero()) continue;
                int row = t.index_of(di, a, dj - 1, static_cast<int>(i));
                if (row < 0) throw std::logic_error("tensor complex: missing pair index");
                m.at(static_cast<std::size_t>(row), col) += sign * dd.at(i, b);
            }
        }
        bounds[k] = m;
    }
    t.complex = ChainComplex<R>(std::move(gens), std::move(bounds));
    return t;
}

/// Indexed basis of tensor words, bridging symbolic operators and matrix
/// verifiers.
struct WordBasis {
    int arity = 1;
    std::map<int, std::vector<Word>> by_degree;
    std::map<Word, std::pair<int, int>> index;  // word -> (degree, position)

    static WordBasis from_words(std::vector<Word> words) {
        WordBasis b;
        if (words.empty()) return b;
        b.arity = static_cast<int>(words.front().size());
        for (auto& w : words) {
            if (static_cast<int>(w.size()) != b.arity)
                throw std::invalid_argument("WordBasis: mixed arities");
            int d = word_degree(w);
            if (b.index.count(w)) continue;
            b.index[w] = {d, static_cast<int>(b.by_degree[d].size())};
            b.by_degree[d].push_back(w);
        }
        return b;
    }
};

/// The zero-differential complex spanned by a word basis (a homology-level
/// model usable with the matrix verifiers).
template <class K>
ChainComplex<K> zero_complex(const WordBasis& basis) {
    std::map<int, std::vector<std::string>> gens;
    for (const auto& [d, words] : basis.by_degree) {
        for (const auto& w : words) gens[d].push_back(word_name(w));
    }
    return ChainComplex<K>(std::move(gens), {});
}

/// Matrices of a symbolic operator between word bases. The evaluator maps
/// a source word to a GradedVector supported on target words.
template <class K, class Eval>
ChainMap<K> matrix_of(Eval&& eval, const WordBasis& src, const WordBasis& tgt, int op_degree) {
    ChainMap<K> out{op_degree, {}};
    for (const auto& [d, words] : src.by_degree) {
        auto tgt_it = tgt.by_degree.find(d + op_degree);
        std::size_t rows = tgt_it == tgt.by_degree.end() ? 0 : tgt_it->second.size();
        Matrix<K> m(rows, words.size());
        for (std::size_t col = 0; col < words.size(); ++col) {
            GradedVector<K> v = eval(words[col]);
            for (const auto& [w, coeff] : v.terms()) {
                auto it = tgt.index.find(w);
                if (it == tgt.index.end() || it->second.first != d + op_degree)
                    throw undefined_action("matrix_of: output word " + word_name(w) +
                                           " outside the target basis");
                m.at(static_cast<std::size_t>(it->second.second), col) += coeff;
            }
        }
        out.blocks[d] = m;
    }
    return out;
}

}  // namespace looptop

#endif
