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

#ifndef LOOPTOP_FILTERED_HPP
#define LOOPTOP_FILTERED_HPP

#include "looptop/chain_maps.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace looptop {

struct filtration_error : std::domain_error {
    explicit filtration_error(const std::string& what) : std::domain_error(what) {}
};
struct non_unit_diagonal : std::domain_error {
    explicit non_unit_diagonal(const std::string& what) : std::domain_error(what) {}
};

/// Chain complex whose generators carry real filtration values. By default
/// the differential must strictly decrease the value (Morse convention);
/// strict = false relaxes this to non-increase.
template <class R>
class FilteredChainComplex {
  public:
    FilteredChainComplex(ChainComplex<R> cx, std::map<int, std::vector<double>> filtration,
                         bool strict = true)
        : cx_(std::move(cx)), filt_(std::move(filtration)), strict_(strict) {
        for (int k : cx_.degrees()) {
            auto it = filt_.find(k);
            if (it == filt_.end() || it->second.size() != cx_.dim(k))
                throw filtration_error("filtration values missing in degree " +
                                       std::to_string(k));
        }
        for (int k : cx_.degrees()) {
            Matrix<R> d = cx_.boundary(k);
            for (std::size_t i = 0; i < d.rows(); ++i)
                for (std::size_t j = 0; j < d.cols(); ++j) {
                    if (d.at(i, j) == ring_traits<R>::zero()) continue;
                    double from = value(k, j), to = value(k - 1, i);
                    if (strict_ ? (to >= from) : (to > from))
                        throw filtration_error(
                            "boundary entry does not decrease the filtration in degree " +
                            std::to_string(k));
                }
        }
    }

    const ChainComplex<R>& complex() const { return cx_; }
    bool strict() const { return strict_; }
    double value(int k, std::size_t i) const { return filt_.at(k)[i]; }
    const std::vector<double>& values(int k) const {
        static const std::vector<double> empty;
        auto it = filt_.find(k);
        return it == filt_.end() ? empty : it->second;
    }

  private:
    ChainComplex<R> cx_;
    std::map<int, std::vector<double>> filt_;
    bool strict_;
};

/// True iff every nonzero entry of F maps into filtration value <= the
/// source generator's value.
template <class R>
bool check_filtration_preserving(const ChainMap<R>& f, const FilteredChainComplex<R>& src,
                                 const FilteredChainComplex<R>& tgt) {
    validate_shapes(f, src.complex(), tgt.complex());
    for (int k : src.complex().degrees()) {
        Matrix<R> m = f.block(k, src.complex(), tgt.complex());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (m.at(i, j) == ring_traits<R>::zero()) continue;
                if (tgt.value(k + f.degree, i) > src.value(k, j)) return false;
            }
    }
    return true;
}

/// Exact inverse of a filtration-preserving degree-0 map whose matrix, in
/// the filtration-sorted bases, is upper triangular with unit diagonal.
/// Generators must pair off degreewise with equal filtration values.
template <class R>
ChainMap<R> invert_upper_triangular(const ChainMap<R>& f, const FilteredChainComplex<R>& src,
                                    const FilteredChainComplex<R>& tgt) {
    if (f.degree != 0)
        throw std::invalid_argument("invert_upper_triangular: degree-0 map expected");
    validate_shapes(f, src.complex(), tgt.complex());
    if (!check_filtration_preserving(f, src, tgt))
        throw filtration_error("map does not preserve the filtrations");

    ChainMap<R> inverse{0, {}};
    for (int k : src.complex().degrees()) {
        std::size_t n = src.complex().dim(k);
        if (tgt.complex().dim(k) != n)
            throw filtration_error("generator counts differ in degree " + std::to_string(k));

        auto sorted = [](const std::vector<double>& vals) {
            std::vector<std::size_t> p(vals.size());
            std::iota(p.begin(), p.end(), 0);
            std::stable_sort(p.begin(), p.end(),
                             [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
            return p;
        };
        std::vector<std::size_t> ps = sorted(src.values(k)), pt = sorted(tgt.values(k));
        for (std::size_t i = 0; i < n; ++i)
            if (src.value(k, ps[i]) != tgt.value(k, pt[i]))
                throw filtration_error("filtration values do not pair off in degree " +
                                       std::to_string(k));

        Matrix<R> orig = f.block(k, src.complex(), tgt.complex());
        Matrix<R> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = orig.at(pt[i], ps[j]);

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (m.at(i, j) != ring_traits<R>::zero())
                    throw filtration_error("matrix is not upper triangular in degree " +
                                           std::to_string(k));
            if (!ring_traits<R>::is_unit(m.at(i, i)))
                throw non_unit_diagonal("diagonal entry " +
                                        ring_traits<R>::to_string(m.at(i, i)) +
                                        " is not a unit in degree " + std::to_string(k));
        }

        // Back-substitution, one column of the inverse at a time.
        Matrix<R> x(n, n);
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t ii = n; ii-- > 0;) {
                R acc = (ii == c) ? ring_traits<R>::one() : ring_traits<R>::zero();
                for (std::size_t j = ii + 1; j < n; ++j) acc -= m.at(ii, j) * x.at(j, c);
                x.at(ii, c) = acc * ring_traits<R>::unit_inverse(m.at(ii, ii));
            }
        }

        Matrix<R> g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g.at(ps[i], pt[j]) = x.at(i, j);
        inverse.blocks[k] = g;

        Matrix<R> id = Matrix<R>::identity(n);
        if (!(g * orig == id) || !(orig * g == id))
            throw std::logic_error("invert_upper_triangular: verification failed");
    }
    return inverse;
}

/// Homology of the subquotient spanned by generators with filtration value
/// in the open window (a, b). The endpoints must avoid all generator
/// values, so this equals the (a, b] filtration quotient.
template <class R>
HomologySummary filtration_window_homology(const FilteredChainComplex<R>& fc, double a,
                                           double b) {
    if (!(a < b)) throw std::invalid_argument("filtration window: a < b required");
    const ChainComplex<R>& cx = fc.complex();
    for (int k : cx.degrees())
        for (double v : fc.values(k))
            if (v == a || v == b)
                throw filtration_error("window endpoint collides with a filtration value");

    std::map<int, std::vector<std::size_t>> keep;
    std::map<int, std::vector<std::string>> gens;
    for (int k : cx.degrees())
        for (std::size_t i = 0; i < cx.dim(k); ++i)
            if (a < fc.value(k, i) && fc.value(k, i) < b) {
                keep[k].push_back(i);
                gens[k].push_back(cx.generators(k)[i]);
            }

    std::map<int, Matrix<R>> bounds;
    for (const auto& [k, cols] : keep) {
        auto rows_it = keep.find(k - 1);
        if (rows_it == keep.end()) continue;
        Matrix<R> d = cx.boundary(k);
        Matrix<R> m(rows_it->second.size(), cols.size());
        for (std::size_t i = 0; i < rows_it->second.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                m.at(i, j) = d.at(rows_it->second[i], cols[j]);
        bounds[k] = m;
    }
    return homology(ChainComplex<R>(std::move(gens), std::move(bounds)));
}

}  // namespace looptop

#endif
