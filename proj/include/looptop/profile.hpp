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

#ifndef LOOPTOP_PROFILE_HPP
#define LOOPTOP_PROFILE_HPP

#include "looptop/scalars.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace looptop {

/// Data of the radial Hamiltonian profile: slope mu, action error eps,
/// smoothing width delta <= eps/mu, and the odd smoothstep degree of the
/// monotone bump beta on [1, 1+delta].
struct ProfileParams {
    double mu = 2.0;
    double eps = 0.1;
    double delta = 0.05;
    int smoothstep_degree = 5;  // 5 or 7

    void validate() const {
        if (!(mu > 0)) throw std::invalid_argument("profile: mu must be positive");
        if (!(eps > 0)) throw std::invalid_argument("profile: eps must be positive");
        if (!(delta > 0)) throw std::invalid_argument("profile: delta must be positive");
        if (Rational(delta) > Rational(eps) / Rational(mu))
            throw std::invalid_argument("profile: delta must satisfy delta <= eps/mu");
        if (smoothstep_degree != 5 && smoothstep_degree != 7)
            throw std::invalid_argument("profile: smoothstep degree must be 5 or 7");
    }
};

/// Piecewise-polynomial profile h with h = 0 on [0,1], h' = mu beyond
/// 1+delta, and a smoothstep ramp in between. Coefficients are exact
/// rationals; evaluation is offered both exactly and in double precision.
class Profile {
  public:
    explicit Profile(const ProfileParams& p) : params_(p) {
        p.validate();
        mu_ = Rational(p.mu);
        delta_ = Rational(p.delta);
        if (p.smoothstep_degree == 5) {
            // beta0(u) = 6u^5 - 15u^4 + 10u^3
            beta_ = {{5, Rational(6)}, {4, Rational(-15)}, {3, Rational(10)}};
        } else {
            // beta0(u) = -20u^7 + 70u^6 - 84u^5 + 35u^4
            beta_ = {{7, Rational(-20)}, {6, Rational(70)}, {5, Rational(-84)}, {4, Rational(35)}};
        }
        for (const auto& [k, c] : beta_) beta_integral_.push_back({k + 1, c / (k + 1)});
        for (const auto& [k, c] : beta_)
            if (k > 0) beta_prime_.push_back({k - 1, c * k});
        ramp_height_ = mu_ * delta_ * eval_poly(beta_integral_, Rational(1));
        for (const auto& [k, c] : beta_) beta_d_.push_back({k, static_cast<double>(c)});
        for (const auto& [k, c] : beta_integral_)
            beta_integral_d_.push_back({k, static_cast<double>(c)});
        for (const auto& [k, c] : beta_prime_)
            beta_prime_d_.push_back({k, static_cast<double>(c)});
    }

    const ProfileParams& params() const { return params_; }

    /// h(1+delta) = mu * delta * integral of the unit smoothstep.
    Rational ramp_height() const { return ramp_height_; }

    Rational h(const Rational& r) const {
        if (r <= 1) return Rational(0);
        if (r >= Rational(1) + delta_) return ramp_height_ + mu_ * (r - 1 - delta_);
        return mu_ * delta_ * eval_poly(beta_integral_, (r - 1) / delta_);
    }
    Rational h_prime(const Rational& r) const {
        if (r <= 1) return Rational(0);
        if (r >= Rational(1) + delta_) return mu_;
        return mu_ * eval_poly(beta_, (r - 1) / delta_);
    }
    Rational h_second(const Rational& r) const {
        if (r <= 1 || r >= Rational(1) + delta_) return Rational(0);
        return mu_ / delta_ * eval_poly(beta_prime_, (r - 1) / delta_);
    }

    double h(double r) const {
        const double mu = params_.mu, delta = params_.delta;
        if (r <= 1) return 0.0;
        if (r >= 1 + delta)
            return static_cast<double>(ramp_height_) + mu * (r - 1 - delta);
        return mu * delta * eval_poly_d(beta_integral_d_, (r - 1) / delta);
    }
    double h_prime(double r) const {
        const double mu = params_.mu, delta = params_.delta;
        if (r <= 1) return 0.0;
        if (r >= 1 + delta) return mu;
        return mu * eval_poly_d(beta_d_, (r - 1) / delta);
    }
    double h_second(double r) const {
        const double mu = params_.mu, delta = params_.delta;
        if (r <= 1 || r >= 1 + delta) return 0.0;
        return mu / delta * eval_poly_d(beta_prime_d_, (r - 1) / delta);
    }

    /// Hamiltonian action of the orbit at radius r: r h'(r) - h(r).
    Rational hamiltonian_action(const Rational& r) const { return r * h_prime(r) - h(r); }
    double hamiltonian_action(double r) const { return r * h_prime(r) - h(r); }
    /// Symplectic action (period integral of the contact form): h'(r).
    Rational symplectic_action(const Rational& r) const { return h_prime(r); }
    /// The deficit r h' - h - h', nonnegative and bounded by mu*delta.
    Rational gap(const Rational& r) const { return hamiltonian_action(r) - h_prime(r); }
    double gap(double r) const { return hamiltonian_action(r) - h_prime(r); }

  private:
    using Poly = std::vector<std::pair<int, Rational>>;
    using PolyD = std::vector<std::pair<int, double>>;
    static Rational eval_poly(const Poly& poly, const Rational& u) {
        Rational acc(0);
        for (const auto& [k, c] : poly) {
            Rational t = c;
            for (int i = 0; i < k; ++i) t *= u;
            acc += t;
        }
        return acc;
    }
    static double eval_poly_d(const PolyD& poly, double u) {
        double acc = 0;
        for (const auto& [k, c] : poly) {
            double t = c;
            for (int i = 0; i < k; ++i) t *= u;
            acc += t;
        }
        return acc;
    }

    ProfileParams params_;
    Rational mu_, delta_, ramp_height_;
    Poly beta_, beta_integral_, beta_prime_;
    PolyD beta_d_, beta_integral_d_, beta_prime_d_;
};

inline Profile build_profile(const ProfileParams& p) { return Profile(p); }

/// (hamiltonian action, symplectic action) at radius r.
inline std::pair<double, double> orbit_actions(const Profile& pr, double r) {
    if (r < 0) throw std::invalid_argument("orbit_actions: r must be nonnegative");
    return {pr.hamiltonian_action(r), pr.h_prime(r)};
}

struct ProfileBoundsReport {
    bool ok = true;
    std::size_t samples = 0;
    double max_gap = 0;
    double min_gap = 0;
    double bound = 0;  // mu * delta
    double min_ramp_convexity = 0;
    std::vector<std::string> violations;

    std::string to_text() const {
        std::string out = ok ? "PASS" : "FAIL";
        out += " samples=" + std::to_string(samples) + " max_gap=" + std::to_string(max_gap) +
               " bound=" + std::to_string(bound) + "\n";
        for (const auto& v : violations) out += "  " + v + "\n";
        return out;
    }
};

/// Samples [0, rmax] and asserts 0 <= r h' - h - h' <= mu*delta + 1e-12
/// everywhere, with h'' > 0 strictly inside the ramp.
inline ProfileBoundsReport verify_bounds(const Profile& pr, double rmax, std::size_t grid) {
    if (grid < 2) throw std::invalid_argument("verify_bounds: grid must have >= 2 samples");
    ProfileBoundsReport rep;
    rep.bound = pr.params().mu * pr.params().delta;
    rep.samples = grid;
    bool first = true;
    for (std::size_t i = 0; i < grid; ++i) {
        double r = rmax * static_cast<double>(i) / static_cast<double>(grid - 1);
        double g = pr.gap(r);
        if (first || g > rep.max_gap) rep.max_gap = g;
        if (first || g < rep.min_gap) rep.min_gap = g;
        first = false;
        if (g < -1e-12 || g > rep.bound + 1e-12) {
            rep.ok = false;
            rep.violations.push_back("gap out of range at r=" + std::to_string(r) + ": " +
                                     std::to_string(g));
        }
    }
    const double delta = pr.params().delta;
    bool first_ramp = true;
    for (std::size_t i = 1; i + 1 < grid; ++i) {
        double u = static_cast<double>(i) / static_cast<double>(grid - 1);
        double r = 1.0 + delta * u;
        double h2 = pr.h_second(r);
        if (first_ramp || h2 < rep.min_ramp_convexity) rep.min_ramp_convexity = h2;
        first_ramp = false;
        if (!(h2 > 0)) {
            rep.ok = false;
            rep.violations.push_back("h'' not positive inside the ramp at r=" +
                                     std::to_string(r));
        }
    }
    return rep;
}

}  // namespace looptop

#endif
