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

#ifndef LOOPTOP_ANNULUS_HPP
#define LOOPTOP_ANNULUS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace looptop {

using Cx = std::complex<double>;

struct degenerate_annulus : std::domain_error {
    explicit degenerate_annulus(const std::string& what) : std::domain_error(what) {}
};

struct Circle {
    Cx center;
    double radius = 1.0;
};

struct Line {
    Cx point;
    Cx direction;  // unit
};

/// Circle or line in the Riemann sphere, stored in inversive form
/// a*|z|^2 + conj(b)*z + b*conj(z) + d = 0 (a, d real). Lines are the
/// a = 0 case, so images under arbitrary fractional-linear maps never
/// degenerate.
class GeneralizedCircle {
  public:
    GeneralizedCircle(double a, Cx b, double d) : a_(a), b_(b), d_(d) { rescale(); }

    static GeneralizedCircle circle(const Circle& c) {
        if (!(c.radius > 0)) throw std::invalid_argument("circle: radius must be positive");
        return GeneralizedCircle(1.0, -c.center, std::norm(c.center) - c.radius * c.radius);
    }
    static GeneralizedCircle line(const Line& l) {
        Cx u = l.direction / std::abs(l.direction);
        Cx normal = Cx(0, 1) * u;
        return GeneralizedCircle(0.0, normal, -2.0 * (normal.real() * l.point.real() +
                                                      normal.imag() * l.point.imag()));
    }

    bool is_line(double tol = 1e-12) const { return std::abs(a_) <= tol; }

    Circle as_circle() const {
        if (is_line()) throw std::domain_error("generalized circle: image is a line");
        Cx center = -b_ / a_;
        double r2 = std::norm(center) - d_ / a_;
        if (!(r2 > 0)) throw std::domain_error("generalized circle: imaginary radius");
        return Circle{center, std::sqrt(r2)};
    }
    Line as_line() const {
        if (!is_line()) throw std::domain_error("generalized circle: not a line");
        Cx normal = b_ / std::abs(b_);
        Cx point = -0.5 * d_ / std::abs(b_) * normal;
        return Line{point, normal * Cx(0, -1)};
    }

    double a() const { return a_; }
    Cx b() const { return b_; }
    double d() const { return d_; }

  private:
    void rescale() {
        double m = std::max({std::abs(a_), std::abs(b_), std::abs(d_)});
        if (m > 0) {
            a_ /= m;
            b_ /= m;
            d_ /= m;
        }
    }
    double a_;
    Cx b_;
    double d_;
};

/// Fractional-linear transformation z -> (az + b)/(cz + d), stored with
/// determinant normalized to 1.
class MoebiusMap {
  public:
    MoebiusMap() : a_(1), b_(0), c_(0), d_(1) {}
    MoebiusMap(Cx a, Cx b, Cx c, Cx d) : a_(a), b_(b), c_(c), d_(d) {
        Cx det = a_ * d_ - b_ * c_;
        double scale = std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
        if (std::abs(det) < 1e-14 * scale * scale)
            throw std::invalid_argument("moebius map: determinant too close to zero");
        Cx s = std::sqrt(det);
        a_ /= s;
        b_ /= s;
        c_ /= s;
        d_ /= s;
    }

    Cx a() const { return a_; }
    Cx b() const { return b_; }
    Cx c() const { return c_; }
    Cx d() const { return d_; }

    Cx operator()(Cx z) const { return (a_ * z + b_) / (c_ * z + d_); }
    Cx derivative(Cx z) const {
        Cx den = c_ * z + d_;
        return 1.0 / (den * den);
    }

    MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

    friend MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) {
        return MoebiusMap(f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_,
                          f.c_ * g.a_ + f.d_ * g.c_, f.c_ * g.b_ + f.d_ * g.d_);
    }

    /// Preimage of 0 and of infinity.
    Cx zero() const { return -b_ / a_; }
    Cx pole() const { return -d_ / c_; }

  private:
    Cx a_, b_, c_, d_;
};

inline GeneralizedCircle apply_moebius(const MoebiusMap& t, const GeneralizedCircle& m) {
    // Push the hermitian form through adj(T): N = adj(T)^H M adj(T).
    Cx a = t.a(), b = t.b(), c = t.c(), d = t.d();
    double A = m.a(), D = m.d();
    Cx B = m.b();
    double n00 = A * std::norm(d) - 2.0 * (B * c * std::conj(d)).real() + D * std::norm(c);
    Cx n01 = -A * b * std::conj(d) + B * a * std::conj(d) + std::conj(B) * b * std::conj(c) -
             D * a * std::conj(c);
    double n11 = A * std::norm(b) - 2.0 * (B * a * std::conj(b)).real() + D * std::norm(a);
    return GeneralizedCircle(n00, n01, n11);
}

inline Circle apply_moebius(const MoebiusMap& t, const Circle& c) {
    return apply_moebius(t, GeneralizedCircle::circle(c)).as_circle();
}

/// Closed region between two nested circles in the plane,
/// closure(D) minus D', with D' strictly inside D.
struct Annulus {
    Circle outer;
    Circle inner;

    /// Boundary separation relative to the outer radius; annuli below the
    /// tangency threshold 1e-7 are rejected as degenerate.
    double separation() const {
        return outer.radius - (std::abs(inner.center - outer.center) + inner.radius);
    }

    void validate() const {
        if (!(outer.radius > 0) || !(inner.radius > 0))
            throw std::invalid_argument("annulus: radii must be positive");
        if (separation() < 1e-7 * outer.radius)
            throw degenerate_annulus("annulus: boundary circles tangent or not nested");
    }
};

struct Normalization {
    MoebiusMap map;     // sends the annulus onto { 1 <= |z| <= e^{2 pi R} }
    double modulus = 0; // R
};

/// Map the annulus onto the standard one by sending the two limit points
/// of the coaxial pencil of its boundary circles to 0 and infinity, then
/// scaling the inner image circle to radius 1.
inline Normalization normalize(const Annulus& an) {
    an.validate();
    const double two_pi = 2.0 * std::numbers::pi;
    Cx c_out = an.outer.center, c_in = an.inner.center;
    double r_out = an.outer.radius, r_in = an.inner.radius;
    double off = std::abs(c_in - c_out);

    if (off < 1e-14 * r_out) {
        MoebiusMap t(1.0, -c_out, 0.0, r_in);
        return {t, std::log(r_out / r_in) / two_pi};
    }

    // Align the centers with the real axis: zeta = (z - c_out)/u.
    Cx u = (c_in - c_out) / off;
    MoebiusMap t1(1.0, -c_out, 0.0, u);
    double m = off;

    // Limit points of the pencil: common inverse pair of both circles,
    // the roots of t^2 - s t + p with p = r_out^2.
    double s = (m * m + r_out * r_out - r_in * r_in) / m;
    double p = r_out * r_out;
    double disc = s * s - 4.0 * p;
    if (disc <= 0) throw degenerate_annulus("annulus: pencil limit points coincide");
    double sq = std::sqrt(disc);
    double x = 2.0 * p / (s + sq);  // inside the inner disc
    double y = 0.5 * (s + sq);      // outside the outer disc

    MoebiusMap t2(1.0, -x, 1.0, -y);
    double rho_in = std::abs(t2(Cx(m + r_in, 0.0)));
    double rho_out = std::abs(t2(Cx(r_out, 0.0)));
    MoebiusMap t3(1.0 / rho_in, 0.0, 0.0, 1.0);
    return {t3 * t2 * t1, std::log(rho_out / rho_in) / two_pi};
}

/// Conformal modulus, with the normalization cross-checked against the
/// log-ratio of the image circle radii computed independently.
inline double modulus(const Annulus& an) {
    Normalization n = normalize(an);
    Circle img_in = apply_moebius(n.map, an.inner);
    Circle img_out = apply_moebius(n.map, an.outer);
    double check = std::log(img_out.radius / img_in.radius) / (2.0 * std::numbers::pi);
    if (std::abs(check - n.modulus) > 1e-9 * std::max(1.0, n.modulus))
        throw std::logic_error("modulus: normalization cross-check failed");
    return n.modulus;
}

/// The two canonical foliations, sampled as polylines: leaves connecting
/// the boundary circles (images of radial segments) and closed leaves
/// (images of concentric circles, boundary circles included).
struct Foliations {
    std::vector<std::vector<Cx>> radial;
    std::vector<std::vector<Cx>> circular;
};

inline Foliations canonical_foliations(const Annulus& an, int n_radial, int n_circular,
                                       int samples_per_leaf = 64) {
    if (n_radial < 1 || n_circular < 2)
        throw std::invalid_argument("foliations: need n_radial >= 1 and n_circular >= 2");
    if (samples_per_leaf < 2)
        throw std::invalid_argument("foliations: need at least 2 samples per leaf");
    Normalization n = normalize(an);
    MoebiusMap inv = n.map.inverse();
    const double two_pi = 2.0 * std::numbers::pi;
    Foliations f;
    for (int k = 0; k < n_radial; ++k) {
        double theta = two_pi * k / n_radial;
        std::vector<Cx> leaf;
        for (int i = 0; i <= samples_per_leaf; ++i) {
            double rho = std::exp(two_pi * n.modulus * i / samples_per_leaf);
            leaf.push_back(inv(std::polar(rho, theta)));
        }
        f.radial.push_back(std::move(leaf));
    }
    for (int l = 0; l < n_circular; ++l) {
        double rho = std::exp(two_pi * n.modulus * l / (n_circular - 1));
        std::vector<Cx> leaf;
        for (int i = 0; i <= samples_per_leaf; ++i) {
            double theta = two_pi * i / samples_per_leaf;
            leaf.push_back(inv(std::polar(rho, theta)));
        }
        f.circular.push_back(std::move(leaf));
    }
    return f;
}

}  // namespace looptop

#endif
