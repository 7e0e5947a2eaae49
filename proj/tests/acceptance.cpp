// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion carries its own runtime budget and exact tolerances.

#include "looptop/looptop.hpp"

#include "support/generators.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace looptop;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

template <class K>
GradedVector<K> pair_sum(std::initializer_list<std::pair<BasisSymbol, BasisSymbol>> terms) {
    GradedVector<K> v(2);
    for (const auto& [l, r] : terms) v.add(Word{l, r}, ring_traits<K>::one());
    return v;
}

template <class K>
bool known_coproduct_values() {
    SphereLoopHomology<K> m(3, 8);
    auto A = m.au_power(0);
    auto one = m.u_power(0);
    for (bool recursive : {false, true}) {
        auto lam = [&](const BasisSymbol& s) {
            return recursive ? m.coproduct_recursive(s) : m.coproduct_closed(s);
        };
        if (!lam(one).is_zero() || !lam(A).is_zero()) return false;
        if (!(lam(m.u_power(1)) == pair_sum<K>({{A, one}, {one, A}}))) return false;
        if (!(lam(m.au_power(1)) == pair_sum<K>({{A, A}}))) return false;
        if (!(lam(m.au_power(2)) == pair_sum<K>({{A, m.au_power(1)}, {m.au_power(1), A}})))
            return false;
    }
    return true;
}

Outcome criterion1() {
    bool ok = known_coproduct_values<F2>() && known_coproduct_values<Rational>();
    return {ok, "closed and recursive coproducts reproduce the known table over F2 and Q"};
}

Outcome criterion2() {
    SphereLoopHomology<F2> m2(3, 50);
    if (!m2.recursion_mismatches(50, SignRule::sweedler).empty())
        return {false, "recursion deviates from the closed form over F2"};
    SphereLoopHomology<Rational> mq(3, 50);
    if (!mq.recursion_mismatches(50, SignRule::sweedler).empty())
        return {false, "recursion deviates from the closed form over Q (pinned convention)"};
    // the pinned convention is the unique passing one modulo the inert
    // bidegree correction: the right-factor rule must keep failing
    if (mq.recursion_mismatches(10, SignRule::koszul_right).empty())
        return {false, "sign-convention sweep lost its discriminating case"};
    return {true, "recursion == closed form for k <= 50, exactly, over F2 and Q"};
}

Outcome criterion3() {
    const int kmax = 20;
    SphereLoopHomology<F2> m(3, kmax);
    auto mu = m.mu_operator(kmax);
    auto lam = m.lambda_closed_operator(kmax);
    std::vector<std::pair<BasisSymbol, BasisSymbol>> pairs;
    for (const auto& a : m.basis(kmax))
        for (const auto& b : m.basis(kmax))
            if (m.decompose(a).second + m.decompose(b).second <= kmax) pairs.push_back({a, b});
    auto report = check_sullivan(mu, lam, pairs, SignRule::sweedler);
    if (!report.holds()) return {false, "sullivan relation failed on the clean model"};

    TensorOperator<F2> corrupted(1, 2, m.coproduct_degree());
    for (const auto& s : m.basis(kmax)) {
        if (s == m.u_power(1)) {
            GradedVector<F2> v(2);
            v.add(Word{m.au_power(0), m.u_power(0)}, F2(1));
            corrupted.define(s, v);
        } else {
            corrupted.define(s, m.coproduct_closed(s));
        }
    }
    auto bad = check_sullivan(mu, corrupted, pairs, SignRule::sweedler);
    if (bad.holds()) return {false, "injected corruption of lambda(U) went undetected"};
    bool at_uu = false;
    for (const auto& v : bad.violations)
        if (v.input == "U⊗U") at_uu = true;
    if (!at_uu) return {false, "corruption not flagged at the pair (U, U)"};
    return {true, std::to_string(report.checked_pairs) +
                      " pairs pass; corrupted lambda(U) flagged at (U, U) and " +
                      std::to_string(bad.violations.size() - 1) + " other pairs"};
}

Outcome criterion4() {
    const int kmax = 20;
    SphereLoopHomology<F2> m2(3, kmax);
    auto lam2 = m2.lambda_closed_operator(kmax);
    if (!check_coassociativity(lam2, 3, m2.basis(kmax), SignRule::sweedler, false).holds())
        return {false, "coassociativity failed over F2"};
    if (!check_cocommutativity(lam2, m2.basis(kmax), true).holds())
        return {false, "graded cocommutativity failed over F2"};

    // Pinned outcome of the epsilon-corrected Q configuration: the
    // correction is identically +1 at n = 3; the sweedler assembly is
    // coassociative over Q with or without it, the Koszul-signed assembly
    // fails either way, and graded cocommutativity over Q holds only for
    // the plain coefficient flip.
    SphereLoopHomology<Rational> mq(3, 12);
    auto lamq = mq.lambda_closed_operator(12);
    bool recorded =
        check_coassociativity(lamq, 3, mq.basis(12), SignRule::sweedler, true).holds() &&
        check_coassociativity(lamq, 3, mq.basis(12), SignRule::sweedler, false).holds() &&
        !check_coassociativity(lamq, 3, mq.basis(12), SignRule::koszul_right, true).holds() &&
        !check_coassociativity(lamq, 3, mq.basis(12), SignRule::koszul_right, false).holds() &&
        check_cocommutativity(lamq, mq.basis(12), false).holds() &&
        !check_cocommutativity(lamq, mq.basis(12), true).holds();
    if (!recorded) return {false, "the recorded Q-configuration outcome changed"};
    return {true, "coassociativity and cocommutativity pass over F2; Q outcomes pinned"};
}

Outcome criterion5() {
    ChainComplex<Integer> pt({{0, {"q0"}}}, {});
    auto red = homology(reduced_complex(pt, {"q0", 0, 2}));
    if (!(red.at(0) == AbelianGroup{0, {Integer(2)}})) return {false, "H~_0 != Z/2 at chi = 2"};

    std::mt19937_64 rng(20260810);
    auto any = testgen::random_complex(rng, 2, 3);
    auto red0 = reduced_complex(any, {"g0_0", 0, 0});
    if (!(homology(red0) == homology(any))) return {false, "chi = 0 changed the homology"};

    ChainComplex<F2> pt2({{0, {"q0"}}}, {});
    if (!(homology(reduced_complex(pt2, {"q0", 0, 2})) == homology(pt2)))
        return {false, "F2 coefficients with even chi changed the homology"};

    int accepted = 0, tried = 0;
    std::uniform_int_distribution<long long> chi_dist(-2, 3);
    std::uniform_int_distribution<int> shape(0, 1);
    while (accepted < 100 && tried < 4000) {
        ++tried;
        auto cx = shape(rng) ? testgen::random_complex(rng, 2, 3)
                             : testgen::random_complex(rng, 3, 2);
        DistinguishedPoint dp{"g0_0", 0, Integer(chi_dist(rng))};
        auto cmp = compare_reduced(cx, dp);
        if (!cmp.hypothesis_holds) continue;
        if (!cmp.equal) return {false, "reduced and quotient descriptions diverged"};
        ++accepted;
    }
    if (accepted < 100) return {false, "could not draw 100 hypothesis-satisfying complexes"};
    return {true, "point/chi cases exact; 100 random complexes agree with the quotient"};
}

Outcome criterion6() {
    std::mt19937_64 rng(907);
    for (int trial = 0; trial < 100; ++trial) {
        auto cx = testgen::random_complex(rng, 3, 3);
        auto g = testgen::random_map(rng, cx, cx, 0);
        auto h = testgen::random_map(rng, cx, cx, 1);
        auto f = add(g, testgen::boundary_homotopy_part(h, cx, cx), cx, cx);
        if (!verify_homotopy(f, g, h, cx, cx).holds())
            return {false, "constructed homotopy triple rejected"};
        ChainMap<Integer> fbad = f;
        for (auto& [k, m] : fbad.blocks)
            if (m.rows() && m.cols()) {
                m.at(0, 0) += 1;
                break;
            }
        if (verify_homotopy(fbad, g, h, cx, cx).holds())
            return {false, "single-entry perturbation went undetected"};
    }
    std::uniform_int_distribution<int> deg(-3, 2);
    for (int trial = 0; trial < 40; ++trial) {
        auto cx = testgen::random_complex(rng, 3, 2);
        auto tc = tensor_complex(cx, cx);
        auto gamma = testgen::random_map(rng, tc.complex, tc.complex, 2 * deg(rng));
        auto rhs = boundary_commutator(gamma, tc.complex, tc.complex);
        if (!verify_commutator_relation(gamma, rhs, tc.complex).holds())
            return {false, "commutator relation failed on [d, Gamma]"};
    }
    return {true, "100 homotopy triples verified, perturbations caught, commutators exact"};
}

Outcome criterion7() {
    std::mt19937_64 rng(611);
    std::uniform_int_distribution<std::size_t> size(1, 50);
    for (int trial = 0; trial < 100; ++trial) {
        auto cs = testgen::random_filtered_case(rng, size(rng));
        if (!check_filtration_preserving(cs.map, cs.space, cs.space))
            return {false, "generated case is not filtration preserving"};
        ChainMap<Integer> inv;
        try {
            inv = invert_upper_triangular(cs.map, cs.space, cs.space);
        } catch (const std::exception& e) {
            return {false, std::string("inversion failed: ") + e.what()};
        }
        std::size_t n = cs.space.complex().dim(0);
        Matrix<Integer> id = Matrix<Integer>::identity(n);
        if (!(inv.blocks.at(0) * cs.map.blocks.at(0) == id) ||
            !(cs.map.blocks.at(0) * inv.blocks.at(0) == id))
            return {false, "inverse is not two-sided"};
    }
    ChainComplex<Integer> cx({{0, {"a"}}}, {});
    FilteredChainComplex<Integer> fc(cx, {{0, {1.0}}});
    ChainMap<Integer> two{0, {}};
    Matrix<Integer> m(1, 1);
    m.at(0, 0) = 2;
    two.blocks[0] = m;
    try {
        invert_upper_triangular(two, fc, fc);
        return {false, "non-unit diagonal accepted"};
    } catch (const non_unit_diagonal&) {
    }
    return {true, "100 random maps (size <= 50) inverted exactly; non-units rejected"};
}

Outcome criterion8() {
    auto cm = ComponentModel::z2();
    auto bit_vectors = [](int len) {
        std::vector<std::vector<int>> out;
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<int> v(len);
            for (int i = 0; i < len; ++i) v[i] = (mask >> i) & 1;
            out.push_back(v);
        }
        return out;
    };

    // tensor = componentwise sum, exhaustive over g1, g2 <= 3
    for (int g1 = 0; g1 <= 3; ++g1)
        for (int g2 = 0; g2 <= 3; ++g2)
            for (const auto& w1 : bit_vectors(g1))
                for (const auto& w2 : bit_vectors(g2)) {
                    ManifoldDescriptor d{3, g1, g2, w1, w2};
                    for (const auto& a1 : bit_vectors(g1))
                        for (const auto& b1 : bit_vectors(g2))
                            for (const auto& a2 : bit_vectors(g1))
                                for (const auto& b2 : bit_vectors(g2)) {
                                    LocalSystemSpec x(d, cm, -1, {a1, a1}, {b1, b1});
                                    LocalSystemSpec y(d, cm, 2, {a2, a2}, {b2, b2});
                                    LocalSystemSpec t = tensor(x, y);
                                    if (t.degree() != 1) return {false, "degree not additive"};
                                    for (std::size_t c = 0; c < 2; ++c) {
                                        for (int i = 0; i < g1; ++i)
                                            if (t.a(c)[i] != ((a1[i] + a2[i]) & 1))
                                                return {false, "a-coefficients not summed"};
                                        for (int i = 0; i < g2; ++i)
                                            if (t.b(c)[i] != ((b1[i] + b2[i]) & 1))
                                                return {false, "b-coefficients not summed"};
                                    }
                                }
                }

    // named systems
    for (int n : {2, 3, 7}) {
        ManifoldDescriptor d{n, 2, 2, {1, 0}, {0, 1}};
        if (make_eta(d, cm).degree() != -n) return {false, "eta degree wrong"};
        if (!is_compatible(make_sigma(d, cm)).compatible) return {false, "sigma incompatible"};
        if (!is_compatible(make_otilde(d, cm)).compatible) return {false, "otilde incompatible"};
    }
    // nonzero degree is never compatible
    ManifoldDescriptor d{3, 1, 1, {1}, {1}};
    for (int deg : {-3, -1, 1, 4}) {
        LocalSystemSpec s(d, cm, deg, {{0}, {0}}, {{0}, {0}});
        auto v = is_compatible(s);
        if (v.compatible || v.reason != "degree != 0")
            return {false, "nonzero-degree system not rejected"};
    }

    // monodromy linearity, exhaustive over g1, g2 <= 2 with both components free
    for (int g1 = 0; g1 <= 2; ++g1)
        for (int g2 = 0; g2 <= 2; ++g2) {
            ManifoldDescriptor dd{3, g1, g2, std::vector<int>(g1, 0), std::vector<int>(g2, 0)};
            auto avs = bit_vectors(g1);
            auto bvs = bit_vectors(g2);
            for (const auto& xa0 : avs)
                for (const auto& xa1 : avs)
                    for (const auto& xb : bvs)
                        for (const auto& ya0 : avs)
                            for (const auto& ya1 : avs)
                                for (const auto& yb : bvs) {
                                    LocalSystemSpec x(dd, cm, 0, {xa0, xa1}, {xb, xb});
                                    LocalSystemSpec y(dd, cm, 0, {ya0, ya1}, {yb, yb});
                                    auto t = tensor(x, y);
                                    for (std::size_t c = 0; c < 2; ++c)
                                        for (const auto& bl : avs)
                                            for (const auto& tc : bvs) {
                                                MonodromyInput in{c, bl, tc};
                                                if (monodromy(t, in) !=
                                                    ((monodromy(x, in) + monodromy(y, in)) & 1))
                                                    return {false, "monodromy not linear"};
                                            }
                                }
        }
    return {true, "tensor/degree/compatibility/monodromy all exact on exhaustive windows"};
}

Outcome criterion9() {
    const double triples[][3] = {{2.0, 0.1, 0.05},  {1.0, 0.5, 0.5},   {0.5, 0.2, 0.1},
                                 {3.0, 0.3, 0.09},  {10.0, 0.1, 0.01}, {0.1, 0.05, 0.25},
                                 {5.0, 1.0, 0.19},  {1.0, 0.01, 0.01}, {7.5, 0.75, 0.09},
                                 {0.25, 0.1, 0.4}};
    double worst_margin = 0;
    for (const auto& t : triples) {
        Profile pr = build_profile({t[0], t[1], t[2], 5});
        auto rep = verify_bounds(pr, 1.0 + t[2] + 2.0, 10000);
        if (!rep.ok) return {false, "bounds failed at mu=" + std::to_string(t[0])};
        if (rep.min_gap < 0 || rep.max_gap > t[0] * t[2] + 1e-12)
            return {false, "gap left [0, mu*delta + 1e-12]"};
        if (!(rep.min_ramp_convexity > 0)) return {false, "h'' not positive inside the ramp"};
        worst_margin = std::max(worst_margin, rep.max_gap / (t[0] * t[2]));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "10 parameter triples, 10^4 samples, max gap/bound = %.3f",
                  worst_margin);
    return {true, buf};
}

Outcome criterion10() {
    const double two_pi = 2 * std::numbers::pi;
    for (double r : {0.1, 1.0, 2.0}) {
        Annulus a{Circle{{0, 0}, std::exp(two_pi * r)}, Circle{{0, 0}, 1.0}};
        if (std::abs(modulus(a) - r) > 1e-9)
            return {false, "standard annulus modulus off at R = " + std::to_string(r)};
    }

    Annulus base{Circle{{0.3, -0.2}, 3.0}, Circle{{1.0, 0.4}, 0.6}};
    double m0 = modulus(base);
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    int done = 0;
    double worst = 0;
    while (done < 1000) {
        Cx a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng)), d(u(rng), u(rng));
        try {
            MoebiusMap f(a, b, c, d);
            Circle io = apply_moebius(f, base.outer), ii = apply_moebius(f, base.inner);
            Annulus img = io.radius > ii.radius ? Annulus{io, ii} : Annulus{ii, io};
            img.validate();
            if (img.outer.radius > 1e4 || img.inner.radius < 1e-4) continue;
            worst = std::max(worst, std::abs(modulus(img) - m0));
            ++done;
        } catch (const std::exception&) {
            continue;
        }
    }
    if (worst > 1e-9) return {false, "Moebius invariance drift " + std::to_string(worst)};

    Normalization n = normalize(base);
    MoebiusMap inv = n.map.inverse();
    Circle back_in = apply_moebius(inv, Circle{{0, 0}, 1.0});
    Circle back_out = apply_moebius(inv, Circle{{0, 0}, std::exp(two_pi * n.modulus)});
    if (std::abs(back_in.center - base.inner.center) > 1e-8 ||
        std::abs(back_in.radius - base.inner.radius) > 1e-8 ||
        std::abs(back_out.center - base.outer.center) > 1e-8 ||
        std::abs(back_out.radius - base.outer.radius) > 1e-8)
        return {false, "normalization round trip drift exceeds 1e-8"};

    double worst_angle = 0;
    int crossings = 0;
    for (int i = 0; i < 40 && crossings < 1000; ++i)
        for (int j = 1; j < 26 && crossings < 1000; ++j) {
            Cx w = std::polar(std::exp(two_pi * n.modulus * j / 26.0), two_pi * i / 40.0);
            Cx dw = inv.derivative(w);
            Cx t_rad = dw * (w / std::abs(w));
            Cx t_circ = dw * (Cx(0, 1) * w);
            double cosangle =
                std::abs(t_rad.real() * t_circ.real() + t_rad.imag() * t_circ.imag()) /
                (std::abs(t_rad) * std::abs(t_circ));
            worst_angle = std::max(worst_angle, cosangle);
            ++crossings;
        }
    if (worst_angle >= 1e-6) return {false, "foliation orthogonality residual too large"};

    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "invariance drift %.2e over 1000 maps, orthogonality residual %.2e", worst,
                  worst_angle);
    return {true, buf};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "known coproduct values (exact, F2 and Q)", 1.0, criterion1},
        {2, "recursion equals closed form for k <= 50", 5.0, criterion2},
        {3, "product/coproduct compatibility, window <= 20, corruption detected", 10.0,
         criterion3},
        {4, "coassociativity and cocommutativity; Q outcomes pinned", 10.0, criterion4},
        {5, "reduced homology vs quotient description", 5.0, criterion5},
        {6, "homotopy and commutator verifiers", 5.0, criterion6},
        {7, "filtered upper-triangular inversion", 5.0, criterion7},
        {8, "local-system calculus on exhaustive windows", 2.0, criterion8},
        {9, "profile action bounds", 1.0, criterion9},
        {10, "conformal annuli", 10.0, criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < c.budget_seconds;
        bool pass = o.pass && in_budget;
        if (!pass) ++failures;
        std::printf("[%s] criterion %2d (%5.2fs < %4.1fs): %s — %s\n", pass ? "PASS" : "FAIL",
                    c.id, secs, c.budget_seconds, c.label, o.detail.c_str());
        if (!in_budget) std::printf("       runtime budget exceeded\n");
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures ? 1 : 0;
}
