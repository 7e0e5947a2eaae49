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

#ifndef LOOPTOP_SPHERE_HPP
#define LOOPTOP_SPHERE_HPP

#include "looptop/tensor_operator.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace looptop {

struct truncation_error : std::domain_error {
    explicit truncation_error(const std::string& what) : std::domain_error(what) {}
};

/// Free-loop-space homology model of an odd-dimensional sphere: the
/// exterior algebra on one odd generator A (a point, shifted degree -n)
/// and one even generator U (shifted degree n-1), truncated at U^K.
///
/// The loop product is the exterior product. The loop coproduct is
/// available in two independent forms:
///   - coproduct_closed: the closed-form table
///       lambda(U^k)  = sum_{i+j=k-1} (AU^i (x) U^j + U^i (x) AU^j)
///       lambda(AU^k) = sum_{i+j=k-1}  AU^i (x) AU^j
///       lambda(1) = lambda(A) = 0
///   - coproduct_recursive: the values forced by the compatibility
///       lambda(a*b) = (1(x)mu)(lambda(a)(x)b) + (mu(x)1)(a(x)lambda(b))
///     from the seeds lambda(1) = lambda(A) = 0,
///     lambda(U) = A(x)1 + 1(x)A, evaluated under a chosen SignRule.
///
/// Only n = 3 is backed by the model's seed values; other odd n are
/// accepted behind the experimental flag.
template <class K>
class SphereLoopHomology {
  public:
    explicit SphereLoopHomology(int n = 3, int truncation = 64, bool experimental = false)
        : n_(n), trunc_(truncation) {
        if (n < 3 || n % 2 == 0) throw std::invalid_argument("sphere model: n must be odd and >= 3");
        if (truncation < 1) throw std::invalid_argument("sphere model: truncation must be >= 1");
        if (n != 3 && !experimental)
            throw std::invalid_argument("sphere model: n != 3 requires the experimental flag");
    }

    int dimension() const { return n_; }
    int truncation() const { return trunc_; }
    int euler_characteristic() const { return 0; }
    /// Shifted degree of the coproduct, 1 - 2n.
    int coproduct_degree() const { return 1 - 2 * n_; }

    /// U^k; k = 0 gives the unit 1.
    BasisSymbol u_power(int k) const {
        check_exponent(k);
        return BasisSymbol{k == 0 ? "1" : (k == 1 ? "U" : "U^" + std::to_string(k)),
                           k * (n_ - 1)};
    }
    /// A*U^k; k = 0 gives A.
    BasisSymbol au_power(int k) const {
        check_exponent(k);
        return BasisSymbol{k == 0 ? "A" : (k == 1 ? "AU" : "AU^" + std::to_string(k)),
                           k * (n_ - 1) - n_};
    }
    BasisSymbol unit() const { return u_power(0); }

    /// All monomials with U-exponent <= kmax, ordered 1, A, U, AU, U^2, ...
    std::vector<BasisSymbol> basis(int kmax) const {
        check_exponent(kmax);
        std::vector<BasisSymbol> out;
        for (int k = 0; k <= kmax; ++k) {
            out.push_back(u_power(k));
            out.push_back(au_power(k));
        }
        return out;
    }

    /// Monomial decomposition: (has_A, exponent of U).
    std::pair<bool, int> decompose(const BasisSymbol& s) const {
        bool has_a = false;
        int k = -1;
        try {
            if (s.name == "1") {
                k = 0;
            } else if (s.name == "A") {
                has_a = true;
                k = 0;
            } else if (s.name == "U") {
                k = 1;
            } else if (s.name == "AU") {
                has_a = true;
                k = 1;
            } else if (s.name.rfind("U^", 0) == 0) {
                k = std::stoi(s.name.substr(2));
            } else if (s.name.rfind("AU^", 0) == 0) {
                has_a = true;
                k = std::stoi(s.name.substr(3));
            }
        } catch (const std::exception&) {
            k = -1;
        }
        if (k < 0 || k > trunc_ || s != (has_a ? au_power(k) : u_power(k)))
            throw std::invalid_argument("sphere model: unknown basis symbol " + s.name);
        return {has_a, k};
    }

    /// Exterior-algebra loop product on basis monomials.
    GradedVector<K> product(const BasisSymbol& b1, const BasisSymbol& b2) const {
        auto [a1, k1] = decompose(b1);
        auto [a2, k2] = decompose(b2);
        if (a1 && a2) return GradedVector<K>::zero(1);
        int k = k1 + k2;
        if (k > trunc_)
            throw truncation_error("product exceeds truncation U^" + std::to_string(trunc_));
        return GradedVector<K>::monomial((a1 || a2) ? au_power(k) : u_power(k));
    }

    /// The product as a finite-table operator on pairs with total
    /// U-exponent <= kmax.
    TensorOperator<K> mu_operator(int kmax) const {
        check_exponent(kmax);
        TensorOperator<K> mu(2, 1, 0);
        auto syms = basis(kmax);
        for (const auto& s : syms)
            for (const auto& t : syms) {
                if (decompose(s).second + decompose(t).second > kmax) continue;
                mu.define(Word{s, t}, product(s, t));
            }
        return mu;
    }

    /// Closed-form coproduct value on a basis monomial.
    GradedVector<K> coproduct_closed(const BasisSymbol& b) const {
        auto [has_a, k] = decompose(b);
        GradedVector<K> out(2);
        for (int i = 0; i + 1 <= k; ++i) {
            int j = k - 1 - i;
            if (has_a) {
                out.add(Word{au_power(i), au_power(j)}, ring_traits<K>::one());
            } else {
                out.add(Word{au_power(i), u_power(j)}, ring_traits<K>::one());
                out.add(Word{u_power(i), au_power(j)}, ring_traits<K>::one());
            }
        }
        return out;
    }

    /// The closed-form coproduct as an operator on the basis window.
    TensorOperator<K> lambda_closed_operator(int kmax) const {
        TensorOperator<K> lam(1, 2, coproduct_degree());
        for (const auto& s : basis(kmax)) lam.define(s, coproduct_closed(s));
        return lam;
    }

    /// Coproduct value recomputed from the product-compatibility recursion
    /// under the given sign rule; memoized per rule. The memo table is
    /// confined to this instance: distinct instances are independent, a
    /// single instance must not be used from several threads at once.
    GradedVector<K> coproduct_recursive(const BasisSymbol& b, SignRule rule = SignRule::sweedler) const {
        auto [has_a, k] = decompose(b);
        auto& memo = memo_[rule];
        auto key = std::make_pair(has_a, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        GradedVector<K> value(2);
        if (!has_a && k == 0) {
            // lambda(1) = 0
        } else if (has_a && k == 0) {
            // lambda(A) = 0
        } else if (!has_a && k == 1) {
            value.add(Word{au_power(0), u_power(0)}, ring_traits<K>::one());
            value.add(Word{u_power(0), au_power(0)}, ring_traits<K>::one());
        } else if (!has_a) {
            value = sullivan_step(u_power(1), u_power(k - 1), rule);
        } else {
            value = sullivan_step(au_power(0), u_power(k), rule);
        }
        memo.emplace(key, value);
        return value;
    }

    /// One application of the rearranged compatibility relation,
    /// lambda(a*b) = (1(x)mu)(lambda(a)(x)b) + (mu(x)1)(a(x)lambda(b)).
    GradedVector<K> sullivan_step(const BasisSymbol& a, const BasisSymbol& b, SignRule rule) const {
        TensorOperator<K> id = TensorOperator<K>::identity();
        TensorOperator<K> lam(1, 2, coproduct_degree());
        lam.define(a, coproduct_recursive(a, rule));
        lam.define(b, coproduct_recursive(b, rule));
        const TensorOperator<K>& mu = mu_for_pair(a, b);
        GradedVector<K> ab = GradedVector<K>::monomial(Word{a, b});
        GradedVector<K> t1 = apply_tensor(id, mu, apply_tensor(lam, id, ab, rule), rule);
        GradedVector<K> t2 = apply_tensor(mu, id, apply_tensor(id, lam, ab, rule), rule);
        return t1 + t2;
    }

    /// Per-monomial mismatch list between the recursion and the closed
    /// form over [0, kmax]; empty iff they agree exactly.
    std::vector<BasisSymbol> recursion_mismatches(int kmax, SignRule rule,
                                                  bool epsilon_correction = false) const {
        std::vector<BasisSymbol> bad;
        for (const auto& s : basis(kmax)) {
            GradedVector<K> rec = coproduct_recursive(s, rule);
            if (epsilon_correction) rec = epsilon_correct(rec, n_);
            if (!(rec == coproduct_closed(s))) bad.push_back(s);
        }
        return bad;
    }

  private:
    void check_exponent(int k) const {
        if (k < 0 || k > trunc_)
            throw truncation_error("U-exponent " + std::to_string(k) + " outside [0, " +
                                   std::to_string(trunc_) + "]");
    }

    /// Cached product table covering every pair the recursion visits.
    const TensorOperator<K>& mu_for_pair(const BasisSymbol& a, const BasisSymbol& b) const {
        int k = decompose(a).second + decompose(b).second;
        check_exponent(k);
        if (!mu_cache_ || mu_cache_kmax_ < k) {
            mu_cache_ = mu_operator(k);
            mu_cache_kmax_ = k;
        }
        return *mu_cache_;
    }

    int n_, trunc_;
    mutable std::map<SignRule, std::map<std::pair<bool, int>, GradedVector<K>>> memo_;
    mutable std::optional<TensorOperator<K>> mu_cache_;
    mutable int mu_cache_kmax_ = -1;
};

/// One configuration of the empirical sign-convention sweep.
struct ConventionOutcome {
    SignRule rule;
    bool epsilon_correction;
    bool matches_closed_form;
};

/// Run the recursion-vs-closed-form comparison over every candidate
/// convention. Over F2 all candidates pass; over Q exactly the
/// conventions that put no sign on the recursion's factorizations do.
template <class K>
std::vector<ConventionOutcome> sweep_conventions(const SphereLoopHomology<K>& model, int kmax) {
    std::vector<ConventionOutcome> out;
    for (SignRule rule : {SignRule::koszul_right, SignRule::koszul_left, SignRule::sweedler})
        for (bool eps : {false, true})
            out.push_back({rule, eps, model.recursion_mismatches(kmax, rule, eps).empty()});
    return out;
}

}  // namespace looptop

#endif
