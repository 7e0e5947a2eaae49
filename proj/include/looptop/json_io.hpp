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

#ifndef LOOPTOP_JSON_IO_HPP
#define LOOPTOP_JSON_IO_HPP

#include "looptop/chain_maps.hpp"
#include "looptop/filtered.hpp"
#include "looptop/identities.hpp"
#include "looptop/local_systems.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace looptop {

using Json = nlohmann::ordered_json;

namespace detail {
inline Integer integer_from_json(const Json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<long long>());
    throw std::invalid_argument("expected an integer matrix entry");
}
inline Json integer_to_json(const Integer& x) {
    static const Integer lo = -(Integer(1) << 53), hi = Integer(1) << 53;
    if (x > lo && x < hi) return Json(static_cast<long long>(x));
    return Json(x.str());
}
}  // namespace detail

/// Complex plus optional per-generator filtration values, as stored in the
/// interchange format:
/// { "degrees":[{"degree":k,"generators":[{"name":..,"filtration":..}]}],
///   "boundaries":[{"degree":k,"matrix":[[..]]}] }
/// Matrix rows are indexed by target generators (degree k-1).
template <class R>
struct ParsedComplex {
    ChainComplex<R> complex;
    std::map<int, std::vector<double>> filtration;
    bool has_filtration = false;
};

template <class R>
ParsedComplex<R> complex_from_json(const Json& j) {
    std::map<int, std::vector<std::string>> gens;
    std::map<int, std::vector<double>> filt;
    bool any_filtration = false, all_filtration = true;
    for (const auto& block : j.at("degrees")) {
        int k = block.at("degree").get<int>();
        for (const auto& g : block.at("generators")) {
            if (g.is_string()) {
                gens[k].push_back(g.get<std::string>());
                filt[k].push_back(0.0);
                all_filtration = false;
            } else {
                gens[k].push_back(g.at("name").get<std::string>());
                if (g.contains("filtration")) {
                    filt[k].push_back(g.at("filtration").get<double>());
                    any_filtration = true;
                } else {
                    filt[k].push_back(0.0);
                    all_filtration = false;
                }
            }
        }
    }
    std::map<int, Matrix<R>> bounds;
    if (j.contains("boundaries"))
        for (const auto& block : j.at("boundaries")) {
            int k = block.at("degree").get<int>();
            const auto& rows = block.at("matrix");
            std::size_t nr = rows.size(), nc = nr ? rows.front().size() : 0;
            Matrix<R> m(nr, nc);
            for (std::size_t i = 0; i < nr; ++i) {
                if (rows[i].size() != nc)
                    throw std::invalid_argument("ragged boundary matrix in degree " +
                                                std::to_string(k));
                for (std::size_t jj = 0; jj < nc; ++jj)
                    m.at(i, jj) = ring_traits<R>::from_integer(
                        detail::integer_from_json(rows[i][jj]));
            }
            bounds[k] = m;
        }
    ParsedComplex<R> out{ChainComplex<R>(std::move(gens), std::move(bounds)), {}, false};
    if (any_filtration) {
        if (!all_filtration)
            throw std::invalid_argument("either all or no generators must carry filtrations");
        out.filtration = std::move(filt);
        out.has_filtration = true;
    }
    return out;
}

template <class R>
Json complex_to_json(const ChainComplex<R>& c,
                     const std::map<int, std::vector<double>>* filtration = nullptr) {
    Json degrees = Json::array();
    for (int k : c.degrees()) {
        Json gens = Json::array();
        for (std::size_t i = 0; i < c.dim(k); ++i) {
            Json g;
            g["name"] = c.generators(k)[i];
            if (filtration) g["filtration"] = filtration->at(k)[i];
            gens.push_back(g);
        }
        degrees.push_back({{"degree", k}, {"generators", gens}});
    }
    Json boundaries = Json::array();
    for (int k : c.degrees()) {
        Matrix<R> m = c.boundary(k);
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t jj = 0; jj < m.cols(); ++jj) {
                std::string s = ring_traits<R>::to_string(m.at(i, jj));
                if (s.find('/') != std::string::npos)
                    row.push_back(s);
                else
                    row.push_back(detail::integer_to_json(Integer(s)));
            }
            rows.push_back(row);
        }
        boundaries.push_back({{"degree", k}, {"matrix", rows}});
    }
    return Json{{"degrees", degrees}, {"boundaries", boundaries}};
}

/// Per-degree matrices of a graded map:
/// { "degree": d, "blocks":[{"degree":k,"matrix":[[..]]}] }
template <class R>
ChainMap<R> chain_map_from_json(const Json& j) {
    ChainMap<R> f{j.at("degree").get<int>(), {}};
    for (const auto& block : j.at("blocks")) {
        int k = block.at("degree").get<int>();
        const auto& rows = block.at("matrix");
        std::size_t nr = rows.size(), nc = nr ? rows.front().size() : 0;
        Matrix<R> m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t jj = 0; jj < nc; ++jj)
                m.at(i, jj) =
                    ring_traits<R>::from_integer(detail::integer_from_json(rows[i][jj]));
        f.blocks[k] = m;
    }
    return f;
}

inline Json report_to_json(const IdentityReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"input", v.input}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    return Json{{"identity", r.identity},
                {"window", r.window},
                {"checked_pairs", r.checked_pairs},
                {"violations", violations}};
}

inline Json homology_to_json(const HomologySummary& h) {
    Json out = Json::array();
    for (const auto& [k, g] : h) {
        Json torsion = Json::array();
        for (const auto& t : g.torsion) torsion.push_back(detail::integer_to_json(t));
        out.push_back({{"degree", k},
                       {"rank", g.free_rank},
                       {"torsion", torsion},
                       {"group", g.to_string()}});
    }
    return out;
}

inline Json descriptor_to_json(const ManifoldDescriptor& d) {
    return Json{{"n", d.n}, {"g1", d.g1}, {"g2", d.g2}, {"w1", d.w1}, {"w2", d.w2}};
}

inline ManifoldDescriptor descriptor_from_json(const Json& j) {
    ManifoldDescriptor d;
    d.n = j.at("n").get<int>();
    d.g1 = j.at("g1").get<int>();
    d.g2 = j.at("g2").get<int>();
    d.w1 = j.at("w1").get<std::vector<int>>();
    d.w2 = j.at("w2").get<std::vector<int>>();
    d.validate();
    return d;
}

/// Component models serialize either as the shorthand "Z2" / "trivial" or
/// as an explicit table {identity, op, w}.
inline ComponentModel component_model_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Z2") return ComponentModel::z2();
        if (s == "trivial") return ComponentModel::trivial();
        throw std::invalid_argument("unknown component model shorthand: " + s);
    }
    return ComponentModel(j.at("identity").get<std::size_t>(),
                          j.at("op").get<std::vector<std::vector<std::size_t>>>(),
                          j.at("w").get<std::vector<int>>());
}

inline Json component_model_to_json(const ComponentModel& cm) {
    if (cm == ComponentModel::z2()) return Json("Z2");
    if (cm == ComponentModel::trivial()) return Json("trivial");
    std::vector<std::vector<std::size_t>> op(cm.size(), std::vector<std::size_t>(cm.size()));
    std::vector<int> w(cm.size());
    for (std::size_t i = 0; i < cm.size(); ++i) {
        w[i] = cm.shift(i);
        for (std::size_t j2 = 0; j2 < cm.size(); ++j2) op[i][j2] = cm.concat(i, j2);
    }
    return Json{{"identity", cm.identity()}, {"op", op}, {"w", w}};
}

inline LocalSystemSpec local_system_from_json(const Json& j) {
    ManifoldDescriptor d = descriptor_from_json(j.at("descriptor"));
    ComponentModel cm = component_model_from_json(j.at("components"));
    std::vector<std::vector<int>> a(cm.size(), std::vector<int>(d.g1, 0));
    std::vector<std::vector<int>> b(cm.size(), std::vector<int>(d.g2, 0));
    for (const auto& row : j.at("coefficients")) {
        std::size_t c = row.at("component").get<std::size_t>();
        if (c >= cm.size()) throw std::invalid_argument("coefficient row for unknown component");
        a[c] = row.at("a").get<std::vector<int>>();
        b[c] = row.at("b").get<std::vector<int>>();
    }
    return LocalSystemSpec(d, cm, j.at("degree").get<int>(), std::move(a), std::move(b));
}

inline Json local_system_to_json(const LocalSystemSpec& s) {
    Json coeffs = Json::array();
    for (std::size_t c = 0; c < s.components().size(); ++c)
        coeffs.push_back({{"component", c}, {"a", s.a(c)}, {"b", s.b(c)}});
    return Json{{"descriptor", descriptor_to_json(s.descriptor())},
                {"components", component_model_to_json(s.components())},
                {"degree", s.degree()},
                {"coefficients", coeffs}};
}

}  // namespace looptop

#endif
