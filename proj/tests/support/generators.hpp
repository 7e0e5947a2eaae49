// Deterministic random objects shared by the unit and acceptance suites.
// Everything is seeded explicitly; reruns produce identical data.

#ifndef LOOPTOP_TESTS_GENERATORS_HPP
#define LOOPTOP_TESTS_GENERATORS_HPP

#include "looptop/chain_complex.hpp"
#include "looptop/chain_maps.hpp"
#include "looptop/filtered.hpp"

#include <random>
#include <string>
#include <vector>

namespace testgen {

using looptop::ChainComplex;
using looptop::ChainMap;
using looptop::Integer;
using looptop::Matrix;

inline Matrix<Integer> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                     int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> entry(lo, hi);
    Matrix<Integer> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

/// Random valid integer complex in degrees 0..depth: each boundary is a
/// random integer combination of a kernel basis of the one below, so
/// d o d = 0 holds by construction (and is re-checked by the constructor).
inline ChainComplex<Integer> random_complex(std::mt19937_64& rng, int max_gens_per_degree = 4,
                                            int depth = 3) {
    std::uniform_int_distribution<int> dim_dist(1, max_gens_per_degree);
    std::vector<std::size_t> dims(depth + 1);
    for (auto& d : dims) d = static_cast<std::size_t>(dim_dist(rng));

    std::map<int, std::vector<std::string>> gens;
    for (int k = 0; k <= depth; ++k)
        for (std::size_t i = 0; i < dims[k]; ++i)
            gens[k].push_back("g" + std::to_string(k) + "_" + std::to_string(i));

    std::map<int, Matrix<Integer>> bounds;
    Matrix<Integer> prev;  // boundary leaving the previous degree
    for (int k = 1; k <= depth; ++k) {
        Matrix<Integer> d;
        if (k == 1) {
            d = random_matrix(rng, dims[0], dims[1]);
        } else {
            Matrix<Integer> kernel = looptop::integer_kernel(prev);
            Matrix<Integer> combo = random_matrix(rng, kernel.cols(), dims[k]);
            d = kernel * combo;
        }
        bounds[k] = d;
        prev = d;
    }
    return ChainComplex<Integer>(std::move(gens), std::move(bounds));
}

template <class R>
ChainMap<R> random_map(std::mt19937_64& rng, const ChainComplex<R>& src,
                       const ChainComplex<R>& tgt, int degree, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> entry(lo, hi);
    ChainMap<R> f{degree, {}};
    for (int k : src.degrees()) {
        Matrix<R> m(tgt.dim(k + degree), src.dim(k));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = looptop::ring_traits<R>::from_integer(Integer(entry(rng)));
        f.blocks[k] = m;
    }
    return f;
}

/// d H + H d as explicit matrices (degree = H.degree - 1).
template <class R>
ChainMap<R> boundary_homotopy_part(const ChainMap<R>& h, const ChainComplex<R>& src,
                                   const ChainComplex<R>& tgt) {
    ChainMap<R> out{h.degree - 1, {}};
    for (int k : src.degrees())
        out.blocks[k] = tgt.boundary(k + h.degree) * h.block(k, src, tgt) +
                        h.block(k - 1, src, tgt) * src.boundary(k);
    return out;
}

/// Random filtered complex with zero differential, distinct filtration
/// values, together with an upper-triangular +-1-diagonal automorphism in
/// the stored (shuffled) generator order.
struct FilteredMapCase {
    looptop::FilteredChainComplex<Integer> space;
    ChainMap<Integer> map;
};

inline FilteredMapCase random_filtered_case(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> val(0.0, 100.0);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> sign(0, 1);

    std::vector<double> filt(n);
    for (auto& v : filt) v = val(rng);
    std::sort(filt.begin(), filt.end());
    filt.erase(std::unique(filt.begin(), filt.end()), filt.end());
    while (filt.size() < n) filt.push_back(filt.back() + 1.0);

    // Upper triangular in filtration-ascending order, then shuffled.
    Matrix<Integer> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = sign(rng) ? 1 : -1;
        for (std::size_t j = i + 1; j < n; ++j) m.at(i, j) = entry(rng);
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::string> names(n);
    std::vector<double> shuffled(n);
    Matrix<Integer> shuffled_m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        names[i] = "e" + std::to_string(i);
        shuffled[i] = filt[perm[i]];
        for (std::size_t j = 0; j < n; ++j) shuffled_m.at(i, j) = m.at(perm[i], perm[j]);
    }
    ChainComplex<Integer> cx({{0, names}}, {});
    looptop::FilteredChainComplex<Integer> space(cx, {{0, shuffled}}, true);
    ChainMap<Integer> f{0, {{0, shuffled_m}}};
    return {std::move(space), std::move(f)};
}

}  // namespace testgen

#endif
