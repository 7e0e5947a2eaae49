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

#ifndef LOOPTOP_GRADED_HPP
#define LOOPTOP_GRADED_HPP

#include "looptop/scalars.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace looptop {

/// A named generator of a graded module. The degree is the shifted degree
/// |.| used throughout; geometric degrees, where meaningful, are derived
/// views (|.| + n) and never stored.
struct BasisSymbol {
    std::string name;
    int degree = 0;

    friend auto operator<=>(const BasisSymbol& a, const BasisSymbol& b) {
        if (auto c = a.degree <=> b.degree; c != 0) return c;
        return a.name <=> b.name;
    }
    friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

/// A basis element of a tensor power: word of length 1 for the module
/// itself, length 2 for C(x)C, length 3 for C(x)C(x)C.
using Word = std::vector<BasisSymbol>;

inline int word_degree(const Word& w) {
    int d = 0;
    for (const auto& s : w) d += s.degree;
    return d;
}

inline std::string word_name(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "⊗";  // tensor sign
        out += w[i].name;
    }
    return out;
}

/// (-1)^{p*q} for (shifted) degrees p, q.
inline int koszul_sign(int p, int q) { return ((p & 1) && (q & 1)) ? -1 : 1; }

/// Finite K-linear combination of words of a fixed arity. Zero coefficients
/// are never stored.
template <class K>
class GradedVector {
  public:
    explicit GradedVector(int arity = 1) : arity_(arity) {
        if (arity < 1) throw std::invalid_argument("GradedVector: arity must be >= 1");
    }

    static GradedVector zero(int arity) { return GradedVector(arity); }

    static GradedVector monomial(Word w, K coeff = ring_traits<K>::one()) {
        GradedVector v(static_cast<int>(w.size()));
        v.add(std::move(w), std::move(coeff));
        return v;
    }
    static GradedVector monomial(const BasisSymbol& s, K coeff = ring_traits<K>::one()) {
        return monomial(Word{s}, std::move(coeff));
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, K>& terms() const { return terms_; }

    void add(Word w, K coeff) {
        if (static_cast<int>(w.size()) != arity_)
            throw std::invalid_argument("GradedVector: word arity mismatch");
        if (coeff == ring_traits<K>::zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == ring_traits<K>::zero()) terms_.erase(it);
        }
    }

    GradedVector& operator+=(const GradedVector& o) {
        require_same_arity(o);
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    GradedVector& operator-=(const GradedVector& o) {
        require_same_arity(o);
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    GradedVector& operator*=(const K& s) {
        if (s == ring_traits<K>::zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
    friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
    friend GradedVector operator*(const K& s, GradedVector v) { return v *= s; }
    friend GradedVector operator-(GradedVector v) { return v *= -ring_traits<K>::one(); }
    friend bool operator==(const GradedVector& a, const GradedVector& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    /// Common degree of all stored words, when the vector is homogeneous.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [w, c] : terms_) {
            int wd = word_degree(w);
            if (!d)
                d = wd;
            else if (*d != wd)
                return std::nullopt;
        }
        return d;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            std::string cs = ring_traits<K>::to_string(c);
            bool negative = !cs.empty() && cs[0] == '-';
            std::string mag = negative ? cs.substr(1) : cs;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            if (mag != "1") out += mag + "*";
            out += word_name(w);
            first = false;
        }
        return out;
    }

  private:
    void require_same_arity(const GradedVector& o) const {
        if (arity_ != o.arity_) throw std::invalid_argument("GradedVector: arity mismatch");
    }
    int arity_;
    std::map<Word, K> terms_;
};

/// Graded flip x(x)y -> (-1)^{|x||y|} y(x)x (or the plain coefficient
/// flip with graded = false), extended linearly.
template <class K>
GradedVector<K> twist(const GradedVector<K>& v, bool graded = true) {
    if (v.arity() != 2) throw std::invalid_argument("twist: arity-2 input required");
    GradedVector<K> out(2);
    for (const auto& [w, c] : v.terms()) {
        int sign = graded ? koszul_sign(w[0].degree, w[1].degree) : 1;
        K coeff = c;
        if (sign < 0) coeff = -coeff;
        out.add(Word{w[1], w[0]}, coeff);
    }
    return out;
}

}  // namespace looptop

#endif
