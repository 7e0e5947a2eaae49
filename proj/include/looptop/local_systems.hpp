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

#ifndef LOOPTOP_LOCAL_SYSTEMS_HPP
#define LOOPTOP_LOCAL_SYSTEMS_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace looptop {

/// Z/2 monodromy data of a manifold: counts of H_1 and H_2 generators
/// (mod 2) together with the first and second Stiefel-Whitney pairings
/// against them.
struct ManifoldDescriptor {
    int n = 3;
    int g1 = 0;
    int g2 = 0;
    std::vector<int> w1;  // length g1, entries mod 2
    std::vector<int> w2;  // length g2, entries mod 2

    void validate() const {
        if (n < 1) throw std::invalid_argument("descriptor: n must be positive");
        if (static_cast<int>(w1.size()) != g1 || static_cast<int>(w2.size()) != g2)
            throw std::invalid_argument("descriptor: w1/w2 lengths must match g1/g2");
        for (int x : w1)
            if (x != 0 && x != 1) throw std::invalid_argument("descriptor: w1 entries mod 2");
        for (int x : w2)
            if (x != 0 && x != 1) throw std::invalid_argument("descriptor: w2 entries mod 2");
    }
    friend bool operator==(const ManifoldDescriptor&, const ManifoldDescriptor&) = default;
};

/// Finite abelian monoid of loop-space components carrying an additive
/// orientation bit w. The default model is (Z/2, +) with w the identity.
class ComponentModel {
  public:
    ComponentModel(std::size_t identity, std::vector<std::vector<std::size_t>> op,
                   std::vector<int> w)
        : identity_(identity), op_(std::move(op)), w_(std::move(w)) {
        std::size_t m = op_.size();
        if (m == 0 || identity_ >= m || w_.size() != m)
            throw std::invalid_argument("component model: inconsistent sizes");
        for (const auto& row : op_) {
            if (row.size() != m) throw std::invalid_argument("component model: ragged table");
            for (std::size_t x : row)
                if (x >= m) throw std::invalid_argument("component model: entry out of range");
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (op_[identity_][i] != i)
                throw std::invalid_argument("component model: identity law fails");
            for (std::size_t j = 0; j < m; ++j) {
                if (op_[i][j] != op_[j][i])
                    throw std::invalid_argument("component model: not commutative");
                if ((w_[op_[i][j]] & 1) != ((w_[i] + w_[j]) & 1))
                    throw std::invalid_argument("component model: w is not additive");
                for (std::size_t k = 0; k < m; ++k)
                    if (op_[op_[i][j]][k] != op_[i][op_[j][k]])
                        throw std::invalid_argument("component model: not associative");
            }
        }
    }

    static ComponentModel z2() { return ComponentModel(0, {{0, 1}, {1, 0}}, {0, 1}); }
    static ComponentModel trivial() { return ComponentModel(0, {{0}}, {0}); }

    std::size_t size() const { return op_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t concat(std::size_t a, std::size_t b) const { return op_.at(a).at(b); }
    int shift(std::size_t c) const { return w_.at(c) & 1; }

    friend bool operator==(const ComponentModel& a, const ComponentModel& b) {
        return a.identity_ == b.identity_ && a.op_ == b.op_ && a.w_ == b.w_;
    }

  private:
    std::size_t identity_;
    std::vector<std::vector<std::size_t>> op_;
    std::vector<int> w_;
};

/// Homology data of a loop of loops against which monodromy is evaluated.
struct MonodromyInput {
    std::size_t component = 0;
    std::vector<int> base_loop;    // class of ev0 o u in H_1, length g1
    std::vector<int> torus_class;  // class of [u x S^1], length g2
};

/// A local system presented by its per-component monodromy functionals:
/// linear in base-loop H_1 data (coefficients a) and in torus H_2 data
/// (coefficients b), plus an integer degree.
class LocalSystemSpec {
  public:
    LocalSystemSpec(ManifoldDescriptor desc, ComponentModel cm, int degree,
                    std::vector<std::vector<int>> a, std::vector<std::vector<int>> b)
        : desc_(std::move(desc)), cm_(std::move(cm)), degree_(degree), a_(std::move(a)),
          b_(std::move(b)) {
        desc_.validate();
        if (a_.size() != cm_.size() || b_.size() != cm_.size())
            throw std::invalid_argument("local system: coefficient tables must cover all components");
        for (const auto& v : a_)
            if (static_cast<int>(v.size()) != desc_.g1)
                throw std::invalid_argument("local system: a-vector length mismatch");
        for (const auto& v : b_)
            if (static_cast<int>(v.size()) != desc_.g2)
                throw std::invalid_argument("local system: b-vector length mismatch");
    }

    static LocalSystemSpec trivial(const ManifoldDescriptor& d, const ComponentModel& cm) {
        return LocalSystemSpec(d, cm, 0,
                               std::vector<std::vector<int>>(cm.size(), std::vector<int>(d.g1, 0)),
                               std::vector<std::vector<int>>(cm.size(), std::vector<int>(d.g2, 0)));
    }

    const ManifoldDescriptor& descriptor() const { return desc_; }
    const ComponentModel& components() const { return cm_; }
    int degree() const { return degree_; }
    const std::vector<int>& a(std::size_t c) const { return a_.at(c); }
    const std::vector<int>& b(std::size_t c) const { return b_.at(c); }

    friend bool operator==(const LocalSystemSpec& x, const LocalSystemSpec& y) {
        return x.desc_ == y.desc_ && x.cm_ == y.cm_ && x.degree_ == y.degree_ && x.a_ == y.a_ &&
               x.b_ == y.b_;
    }

    /// Canonical serialization: degree plus the full monodromy table.
    /// Injective on specs over a fixed descriptor and component model.
    std::string classify() const {
        std::ostringstream os;
        os << "degree=" << degree_;
        for (std::size_t c = 0; c < cm_.size(); ++c) {
            os << "; c" << c << ": a=[";
            for (int i = 0; i < desc_.g1; ++i) os << (i ? "," : "") << a_[c][i];
            os << "] b=[";
            for (int i = 0; i < desc_.g2; ++i) os << (i ? "," : "") << b_[c][i];
            os << "]";
        }
        return os.str();
    }

  private:
    ManifoldDescriptor desc_;
    ComponentModel cm_;
    int degree_;
    std::vector<std::vector<int>> a_, b_;  // per component, mod 2
};

/// Tensor product: degrees add, monodromy coefficients add mod 2.
inline LocalSystemSpec tensor(const LocalSystemSpec& x, const LocalSystemSpec& y) {
    if (!(x.descriptor() == y.descriptor()) || !(x.components() == y.components()))
        throw std::invalid_argument("tensor: descriptor or component model mismatch");
    std::size_t m = x.components().size();
    std::vector<std::vector<int>> a(m), b(m);
    for (std::size_t c = 0; c < m; ++c) {
        a[c].resize(x.descriptor().g1);
        b[c].resize(x.descriptor().g2);
        for (int i = 0; i < x.descriptor().g1; ++i) a[c][i] = (x.a(c)[i] + y.a(c)[i]) & 1;
        for (int i = 0; i < x.descriptor().g2; ++i) b[c][i] = (x.b(c)[i] + y.b(c)[i]) & 1;
    }
    return LocalSystemSpec(x.descriptor(), x.components(), x.degree() + y.degree(),
                           std::move(a), std::move(b));
}

/// Dual system: same monodromy, opposite degree.
inline LocalSystemSpec dual(const LocalSystemSpec& x) {
    std::vector<std::vector<int>> a, b;
    for (std::size_t c = 0; c < x.components().size(); ++c) {
        a.push_back(x.a(c));
        b.push_back(x.b(c));
    }
    return LocalSystemSpec(x.descriptor(), x.components(), -x.degree(), std::move(a),
                           std::move(b));
}

/// Same system with the degree set to 0.
inline LocalSystemSpec underline(const LocalSystemSpec& x) {
    std::vector<std::vector<int>> a, b;
    for (std::size_t c = 0; c < x.components().size(); ++c) {
        a.push_back(x.a(c));
        b.push_back(x.b(c));
    }
    return LocalSystemSpec(x.descriptor(), x.components(), 0, std::move(a), std::move(b));
}

/// Transgression of a degree-2 class c: degree 0, pairing every component's
/// torus class against c.
inline LocalSystemSpec make_transgression(const ManifoldDescriptor& d, const ComponentModel& cm,
                                          const std::vector<int>& c) {
    if (static_cast<int>(c.size()) != d.g2)
        throw std::invalid_argument("transgression: class length must be g2");
    return LocalSystemSpec(d, cm, 0,
                           std::vector<std::vector<int>>(cm.size(), std::vector<int>(d.g1, 0)),
                           std::vector<std::vector<int>>(cm.size(), c));
}

/// sigma = transgression of w2.
inline LocalSystemSpec make_sigma(const ManifoldDescriptor& d, const ComponentModel& cm) {
    return make_transgression(d, cm, d.w2);
}

/// mu = pullback of the inverse orientation system under evaluation at 0:
/// degree -n, base-loop pairing w1.
inline LocalSystemSpec make_mu(const ManifoldDescriptor& d, const ComponentModel& cm) {
    return LocalSystemSpec(d, cm, -d.n,
                           std::vector<std::vector<int>>(cm.size(), d.w1),
                           std::vector<std::vector<int>>(cm.size(), std::vector<int>(d.g2, 0)));
}

/// o = mu^{-1}: degree +n, same monodromy.
inline LocalSystemSpec make_o(const ManifoldDescriptor& d, const ComponentModel& cm) {
    return dual(make_mu(d, cm));
}

/// The shift system: trivial on orientation-preserving components, the
/// degree-0 orientation system on reversing ones.
inline LocalSystemSpec make_otilde(const ManifoldDescriptor& d, const ComponentModel& cm) {
    std::vector<std::vector<int>> a(cm.size()), b(cm.size(), std::vector<int>(d.g2, 0));
    for (std::size_t c = 0; c < cm.size(); ++c) {
        a[c].resize(d.g1);
        for (int i = 0; i < d.g1; ++i) a[c][i] = (cm.shift(c) * d.w1[i]) & 1;
    }
    return LocalSystemSpec(d, cm, 0, std::move(a), std::move(b));
}

/// The fundamental system eta = sigma (x) mu (x) otilde, of degree -n.
inline LocalSystemSpec make_eta(const ManifoldDescriptor& d, const ComponentModel& cm) {
    return tensor(make_sigma(d, cm), tensor(make_mu(d, cm), make_otilde(d, cm)));
}

/// Monodromy of the system along the given loop-of-loops data, in Z/2.
inline int monodromy(const LocalSystemSpec& nu, const MonodromyInput& in) {
    const auto& d = nu.descriptor();
    if (static_cast<int>(in.base_loop.size()) != d.g1 ||
        static_cast<int>(in.torus_class.size()) != d.g2)
        throw std::invalid_argument("monodromy: input length mismatch");
    if (in.component >= nu.components().size())
        throw std::invalid_argument("monodromy: unknown component");
    int acc = 0;
    for (int i = 0; i < d.g1; ++i) acc += nu.a(in.component)[i] * in.base_loop[i];
    for (int i = 0; i < d.g2; ++i) acc += nu.b(in.component)[i] * in.torus_class[i];
    return acc & 1;
}

struct CompatibilityVerdict {
    bool compatible = false;
    std::string reason;  // first failing condition when not compatible
};

/// Compatibility with products: degree 0, torus pairing constant across
/// components, base-loop pairing additive under concatenation, and trivial
/// restriction to constant loops.
inline CompatibilityVerdict is_compatible(const LocalSystemSpec& nu) {
    const ComponentModel& cm = nu.components();
    if (nu.degree() != 0) return {false, "degree != 0"};
    for (std::size_t c = 1; c < cm.size(); ++c)
        if (nu.b(c) != nu.b(0)) return {false, "torus pairing differs across components"};
    for (std::size_t c1 = 0; c1 < cm.size(); ++c1)
        for (std::size_t c2 = 0; c2 < cm.size(); ++c2) {
            std::size_t c12 = cm.concat(c1, c2);
            for (int i = 0; i < nu.descriptor().g1; ++i)
                if (((nu.a(c1)[i] + nu.a(c2)[i]) & 1) != nu.a(c12)[i])
                    return {false, "base-loop pairing not additive under concatenation"};
        }
    for (int i = 0; i < nu.descriptor().g1; ++i)
        if (nu.a(cm.identity())[i] != 0)
            return {false, "restriction to constant loops nontrivial"};
    return {true, ""};
}

}  // namespace looptop

#endif
