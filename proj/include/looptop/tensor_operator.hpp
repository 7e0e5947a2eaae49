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

#ifndef LOOPTOP_TENSOR_OPERATOR_HPP
#define LOOPTOP_TENSOR_OPERATOR_HPP

#include "looptop/graded.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace looptop {

/// Thrown when an operator is evaluated outside its declared basis range.
struct undefined_action : std::domain_error {
    explicit undefined_action(const std::string& what) : std::domain_error(what) {}
};

/// Sign discipline used when a tensor product of operators is pushed past
/// a tensor of elements:
///   koszul_right : (f(x)g)(x(x)y) = (-1)^{deg g * |x|} f(x) (x) g(y)
///   koszul_left  : (f(x)g)(x(x)y) = (-1)^{deg f * |y|} f(x) (x) g(y)
///   sweedler     : no sign (the convention in which identities stated in
///                  Sweedler notation hold literally)
enum class SignRule { koszul_right, koszul_left, sweedler };

inline std::string to_string(SignRule r) {
    switch (r) {
        case SignRule::koszul_right: return "right";
        case SignRule::koszul_left: return "left";
        case SignRule::sweedler: return "sweedler";
    }
    return "?";
}

inline SignRule sign_rule_from_string(const std::string& s) {
    if (s == "right") return SignRule::koszul_right;
    if (s == "left") return SignRule::koszul_left;
    if (s == "sweedler") return SignRule::sweedler;
    throw std::invalid_argument("unknown sign rule: " + s);
}

/// Degree-carrying linear map between tensor powers of a graded module,
/// given by a finite table on basis words. Every defined output must have
/// total degree = input degree + operator degree.
template <class K>
class TensorOperator {
  public:
    TensorOperator(int arity_in, int arity_out, int degree)
        : arity_in_(arity_in), arity_out_(arity_out), degree_(degree) {
        if (arity_in < 1 || arity_out < 1)
            throw std::invalid_argument("TensorOperator: arities must be >= 1");
    }

    /// Identity on single basis symbols; total on any basis.
    static TensorOperator identity() {
        TensorOperator op(1, 1, 0);
        op.identity_ = true;
        return op;
    }

    int arity_in() const { return arity_in_; }
    int arity_out() const { return arity_out_; }
    int degree() const { return degree_; }
    bool is_identity() const { return identity_; }
    const std::map<Word, GradedVector<K>>& table() const { return table_; }

    void define(Word input, GradedVector<K> output) {
        if (identity_) throw std::logic_error("TensorOperator: identity is not definable");
        if (static_cast<int>(input.size()) != arity_in_)
            throw std::invalid_argument("TensorOperator: input arity mismatch");
        if (output.arity() != arity_out_)
            throw std::invalid_argument("TensorOperator: output arity mismatch");
        int in_deg = word_degree(input);
        for (const auto& [w, c] : output.terms()) {
            if (word_degree(w) != in_deg + degree_)
                throw std::invalid_argument("TensorOperator: output term of wrong degree for " +
                                            word_name(input));
        }
        table_[std::move(input)] = std::move(output);
    }

    void define(const BasisSymbol& s, GradedVector<K> output) { define(Word{s}, std::move(output)); }

    bool defined_on(const Word& w) const { return identity_ || table_.count(w) > 0; }

    GradedVector<K> evaluate(const Word& w) const {
        if (identity_) {
            if (w.size() != 1) throw std::invalid_argument("identity: arity-1 word expected");
            return GradedVector<K>::monomial(w);
        }
        auto it = table_.find(w);
        if (it == table_.end())
            throw undefined_action("operator undefined on " + word_name(w));
        return it->second;
    }

    /// Linear extension to arbitrary vectors.
    GradedVector<K> apply(const GradedVector<K>& v) const {
        if (v.arity() != arity_in_)
            throw std::invalid_argument("TensorOperator: operand arity mismatch");
        GradedVector<K> out(arity_out_);
        for (const auto& [w, c] : v.terms()) {
            GradedVector<K> piece = evaluate(w);
            piece *= c;
            out += piece;
        }
        return out;
    }

  private:
    int arity_in_, arity_out_, degree_;
    bool identity_ = false;
    std::map<Word, GradedVector<K>> table_;
};

/// Bilinear extension of (f(x)g) under the chosen sign rule. The input
/// splits as the first arity_in(f) factors followed by the g block.
template <class K>
GradedVector<K> apply_tensor(const TensorOperator<K>& f, const TensorOperator<K>& g,
                             const GradedVector<K>& x,
                             SignRule rule = SignRule::koszul_right) {
    const int split = f.arity_in();
    if (x.arity() != split + g.arity_in())
        throw std::invalid_argument("apply_tensor: operand arity mismatch");
    GradedVector<K> out(f.arity_out() + g.arity_out());
    for (const auto& [w, c] : x.terms()) {
        Word left(w.begin(), w.begin() + split);
        Word right(w.begin() + split, w.end());
        int sign = 1;
        switch (rule) {
            case SignRule::koszul_right: sign = koszul_sign(g.degree(), word_degree(left)); break;
            case SignRule::koszul_left: sign = koszul_sign(f.degree(), word_degree(right)); break;
            case SignRule::sweedler: break;
        }
        GradedVector<K> fl = f.evaluate(left);
        GradedVector<K> gr = g.evaluate(right);
        for (const auto& [wf, cf] : fl.terms())
            for (const auto& [wg, cg] : gr.terms()) {
                Word joined = wf;
                joined.insert(joined.end(), wg.begin(), wg.end());
                K coeff = c * cf * cg;
                if (sign < 0) coeff = -coeff;
                out.add(std::move(joined), std::move(coeff));
            }
    }
    return out;
}

/// f after g, materialized over g's declared domain.
template <class K>
TensorOperator<K> compose(const TensorOperator<K>& f, const TensorOperator<K>& g) {
    if (f.arity_in() != g.arity_out())
        throw std::invalid_argument("compose: arity mismatch");
    if (g.is_identity()) return f;
    if (f.is_identity()) return g;
    TensorOperator<K> out(g.arity_in(), f.arity_out(), f.degree() + g.degree());
    for (const auto& [w, v] : g.table()) out.define(w, f.apply(v));
    return out;
}

/// The coassociativity sign correction: each output term x(x)y of a
/// coproduct on an n-manifold model is rescaled by (-1)^{(n-1)(j-n)} with
/// j the geometric degree of the right factor; in shifted degrees this is
/// (-1)^{(n-1)|y|}, identically +1 for odd n.
template <class K>
GradedVector<K> epsilon_correct(const GradedVector<K>& v, int n) {
    if (v.arity() != 2) throw std::invalid_argument("epsilon_correct: arity-2 input required");
    GradedVector<K> out(2);
    for (const auto& [w, c] : v.terms()) {
        K coeff = c;
        if (koszul_sign(n - 1, w[1].degree) < 0) coeff = -coeff;
        out.add(w, coeff);
    }
    return out;
}

template <class K>
TensorOperator<K> epsilon_corrected(const TensorOperator<K>& coproduct, int n) {
    if (coproduct.arity_out() != 2)
        throw std::invalid_argument("epsilon_corrected: coproduct expected");
    TensorOperator<K> out(coproduct.arity_in(), 2, coproduct.degree());
    for (const auto& [w, v] : coproduct.table()) out.define(w, epsilon_correct(v, n));
    return out;
}

}  // namespace looptop

#endif
