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

#ifndef LOOPTOP_SCALARS_HPP
#define LOOPTOP_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace looptop {

/// Arbitrary-precision integers and rationals. All algebra in this library
/// is exact; no floating point enters any coefficient computation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {
constexpr bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
}  // namespace detail

/// Prime field F_p with reduced representatives in [0, p).
template <std::uint32_t P>
class Fp {
    static_assert(detail::is_prime_u32(P), "Fp modulus must be prime");

  public:
    constexpr Fp() = default;
    constexpr Fp(long long v) : v_(normalize(v)) {}

    static constexpr std::uint32_t modulus() { return P; }
    constexpr std::uint64_t value() const { return v_; }

    friend constexpr Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % P); }
    friend constexpr Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + P - b.v_) % P); }
    friend constexpr Fp operator*(Fp a, Fp b) { return from_raw((a.v_ * b.v_) % P); }
    friend constexpr Fp operator-(Fp a) { return from_raw(a.v_ == 0 ? 0 : P - a.v_); }
    friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    /// Multiplicative inverse (Fermat). Throws on zero.
    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        Fp r(1), base = *this;
        std::uint32_t e = P - 2;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

  private:
    static constexpr std::uint64_t normalize(long long v) {
        long long m = v % static_cast<long long>(P);
        if (m < 0) m += P;
        return static_cast<std::uint64_t>(m);
    }
    static constexpr Fp from_raw(std::uint64_t v) {
        Fp x;
        x.v_ = v;
        return x;
    }
    std::uint64_t v_ = 0;
};

using F2 = Fp<2>;

/// Uniform interface over the supported exact coefficient rings.
template <class K>
struct ring_traits;

template <>
struct ring_traits<Integer> {
    static constexpr bool is_field = false;
    static constexpr int characteristic = 0;
    static Integer zero() { return Integer(0); }
    static Integer one() { return Integer(1); }
    static bool is_unit(const Integer& x) { return x == 1 || x == -1; }
    static Integer unit_inverse(const Integer& x) {
        if (!is_unit(x)) throw std::domain_error("Z: inverse of non-unit " + x.str());
        return x;
    }
    static Integer from_integer(const Integer& n) { return n; }
    static std::string name() { return "Z"; }
    static std::string to_string(const Integer& x) { return x.str(); }
};

template <>
struct ring_traits<Rational> {
    static constexpr bool is_field = true;
    static constexpr int characteristic = 0;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_unit(const Rational& x) { return x != 0; }
    static Rational unit_inverse(const Rational& x) {
        if (x == 0) throw std::domain_error("Q: inverse of zero");
        return Rational(1) / x;
    }
    static Rational from_integer(const Integer& n) { return Rational(n); }
    static std::string name() { return "Q"; }
    static std::string to_string(const Rational& x) { return x.str(); }
};

template <std::uint32_t P>
struct ring_traits<Fp<P>> {
    static constexpr bool is_field = true;
    static constexpr int characteristic = static_cast<int>(P);
    static Fp<P> zero() { return Fp<P>(0); }
    static Fp<P> one() { return Fp<P>(1); }
    static bool is_unit(const Fp<P>& x) { return x != Fp<P>(0); }
    static Fp<P> unit_inverse(const Fp<P>& x) { return x.inverse(); }
    static Fp<P> from_integer(const Integer& n) {
        Integer m = n % P;
        if (m < 0) m += P;
        return Fp<P>(static_cast<long long>(m));
    }
    static std::string name() { return "F" + std::to_string(P); }
    static std::string to_string(const Fp<P>& x) { return std::to_string(x.value()); }
};

}  // namespace looptop

#endif
