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

#ifndef LOOPTOP_IDENTITIES_HPP
#define LOOPTOP_IDENTITIES_HPP

#include "looptop/tensor_operator.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace looptop {

struct IdentityViolation {
    std::string input;
    std::string lhs;
    std::string rhs;
};

/// Result of checking an algebraic identity extensionally on a finite
/// window of basis inputs. Empty violations means the identity held on
/// every checked input.
struct IdentityReport {
    std::string identity;
    std::string window;
    std::size_t checked_pairs = 0;
    std::vector<IdentityViolation> violations;

    bool holds() const { return violations.empty(); }

    std::string to_text() const {
        std::ostringstream os;
        os << "identity: " << identity << "\n"
           << "window:   " << window << "\n"
           << "checked:  " << checked_pairs << "\n"
           << "status:   " << (holds() ? "PASS" : "FAIL") << "\n";
        for (const auto& v : violations)
            os << "  violation at " << v.input << ": lhs = " << v.lhs << ", rhs = " << v.rhs
               << "\n";
        return os.str();
    }
};

namespace detail {
template <class K>
void record_if_mismatch(IdentityReport& report, const std::string& input,
                        const GradedVector<K>& lhs, const GradedVector<K>& rhs) {
    ++report.checked_pairs;
    if (!(lhs == rhs)) report.violations.push_back({input, lhs.to_string(), rhs.to_string()});
}
}  // namespace detail

/// A degree-0 product with its unit. Construction checks the unit laws on
/// the product's declared table.
template <class K>
struct AlgebraStructure {
    TensorOperator<K> product;
    BasisSymbol unit;

    AlgebraStructure(TensorOperator<K> mu, BasisSymbol one)
        : product(std::move(mu)), unit(std::move(one)) {
        if (product.arity_in() != 2 || product.arity_out() != 1 || product.degree() != 0)
            throw std::invalid_argument("algebra: product must be a degree-0 map C(x)C -> C");
        for (const auto& [w, v] : product.table()) {
            if (w[0] == unit && !(v == GradedVector<K>::monomial(w[1])))
                throw std::invalid_argument("algebra: left unit law fails at " + w[1].name);
            if (w[1] == unit && !(v == GradedVector<K>::monomial(w[0])))
                throw std::invalid_argument("algebra: right unit law fails at " + w[0].name);
        }
    }
};

/// A coproduct together with the ambient manifold dimension n; the total
/// output degree must drop by 2n - 1.
template <class K>
struct CoalgebraStructure {
    TensorOperator<K> coproduct;
    int n;

    CoalgebraStructure(TensorOperator<K> lambda, int dimension)
        : coproduct(std::move(lambda)), n(dimension) {
        if (coproduct.arity_in() != 1 || coproduct.arity_out() != 2)
            throw std::invalid_argument("coalgebra: coproduct must be a map C -> C(x)C");
        if (coproduct.degree() != 1 - 2 * n)
            throw std::invalid_argument("coalgebra: coproduct degree must be 1 - 2n");
    }
};

/// Product/coproduct compatibility
///   lambda(mu(a(x)b)) = (1(x)mu)(lambda(x)1)(a(x)b) + (mu(x)1)(1(x)lambda)(a(x)b)
/// checked on every pair in the window, assembling the right-hand side
/// under the given sign rule.
template <class K>
IdentityReport check_sullivan(const TensorOperator<K>& mu, const TensorOperator<K>& lambda,
                              const std::vector<std::pair<BasisSymbol, BasisSymbol>>& window,
                              SignRule rule = SignRule::sweedler) {
    IdentityReport report;
    report.identity = "sullivan";
    report.window = std::to_string(window.size()) + " pairs, sign rule " + to_string(rule);
    TensorOperator<K> id = TensorOperator<K>::identity();
    for (const auto& [a, b] : window) {
        GradedVector<K> ab = GradedVector<K>::monomial(Word{a, b});
        GradedVector<K> lhs = lambda.apply(mu.apply(ab));
        GradedVector<K> rhs = apply_tensor(id, mu, apply_tensor(lambda, id, ab, rule), rule) +
                              apply_tensor(mu, id, apply_tensor(id, lambda, ab, rule), rule);
        detail::record_if_mismatch(report, word_name(Word{a, b}), lhs, rhs);
    }
    return report;
}

/// (lambda(x)1)lambda = (1(x)lambda)lambda on the window, optionally with
/// the per-bidegree epsilon correction applied to the coproduct first.
template <class K>
IdentityReport check_coassociativity(const TensorOperator<K>& lambda, int n,
                                     const std::vector<BasisSymbol>& window,
                                     SignRule rule = SignRule::sweedler,
                                     bool epsilon_correction = false) {
    IdentityReport report;
    report.identity = "coassociativity";
    report.window = std::to_string(window.size()) + " basis symbols, sign rule " +
                    to_string(rule) + (epsilon_correction ? ", epsilon on" : ", epsilon off");
    TensorOperator<K> id = TensorOperator<K>::identity();
    TensorOperator<K> lam = epsilon_correction ? epsilon_corrected(lambda, n) : lambda;
    for (const auto& a : window) {
        GradedVector<K> la = lam.apply(GradedVector<K>::monomial(a));
        GradedVector<K> lhs = apply_tensor(lam, id, la, rule);
        GradedVector<K> rhs = apply_tensor(id, lam, la, rule);
        detail::record_if_mismatch(report, a.name, lhs, rhs);
    }
    return report;
}

/// twist . lambda = lambda on the window. With graded_twist the flip
/// carries the Koszul sign (-1)^{|x||y|}; without it this is plain
/// symmetry of the coefficient table. The two notions agree over F2.
template <class K>
IdentityReport check_cocommutativity(const TensorOperator<K>& lambda,
                                     const std::vector<BasisSymbol>& window,
                                     bool graded_twist = true) {
    IdentityReport report;
    report.identity = "cocommutativity";
    report.window = std::to_string(window.size()) + " basis symbols, " +
                    (graded_twist ? "graded twist" : "plain flip");
    for (const auto& a : window) {
        GradedVector<K> la = lambda.apply(GradedVector<K>::monomial(a));
        detail::record_if_mismatch(report, a.name, twist(la, graded_twist), la);
    }
    return report;
}

template <class K>
IdentityReport check_sullivan(const AlgebraStructure<K>& alg, const CoalgebraStructure<K>& coalg,
                              const std::vector<std::pair<BasisSymbol, BasisSymbol>>& window,
                              SignRule rule = SignRule::sweedler) {
    return check_sullivan(alg.product, coalg.coproduct, window, rule);
}

template <class K>
IdentityReport check_coassociativity(const CoalgebraStructure<K>& coalg,
                                     const std::vector<BasisSymbol>& window,
                                     SignRule rule = SignRule::sweedler,
                                     bool epsilon_correction = false) {
    return check_coassociativity(coalg.coproduct, coalg.n, window, rule, epsilon_correction);
}

/// Associativity, graded commutativity and unit laws for a degree-0
/// product, checked on pairs and triples drawn from the window. Pairs or
/// triples on which the product is undefined (outside the declared table)
/// are the caller's responsibility; this routine assumes a closed window.
template <class K>
IdentityReport check_assoc_comm_unit(const TensorOperator<K>& mu, const BasisSymbol& unit,
                                     const std::vector<BasisSymbol>& window) {
    IdentityReport report;
    report.identity = "associativity/commutativity/unit";
    report.window = std::to_string(window.size()) + " basis symbols";
    TensorOperator<K> id = TensorOperator<K>::identity();
    for (const auto& a : window) {
        GradedVector<K> va = GradedVector<K>::monomial(a);
        detail::record_if_mismatch(report, "1*" + a.name,
                                   mu.apply(GradedVector<K>::monomial(Word{unit, a})), va);
        detail::record_if_mismatch(report, a.name + "*1",
                                   mu.apply(GradedVector<K>::monomial(Word{a, unit})), va);
    }
    for (const auto& a : window)
        for (const auto& b : window) {
            GradedVector<K> ab = GradedVector<K>::monomial(Word{a, b});
            detail::record_if_mismatch(report, word_name(Word{a, b}) + " (comm)",
                                       mu.apply(ab), mu.apply(twist(ab)));
        }
    for (const auto& a : window)
        for (const auto& b : window)
            for (const auto& c : window) {
                GradedVector<K> abc = GradedVector<K>::monomial(Word{a, b, c});
                GradedVector<K> lhs = mu.apply(apply_tensor(mu, id, abc));
                GradedVector<K> rhs = mu.apply(apply_tensor(id, mu, abc));
                detail::record_if_mismatch(report, word_name(Word{a, b, c}) + " (assoc)", lhs,
                                           rhs);
            }
    return report;
}

}  // namespace looptop

#endif
