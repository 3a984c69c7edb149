#pragma once

// Truncated Taylor arithmetic (forward-mode jets). A Jet<N> carries the
// normalized coefficients c_k = f^(k)(x0)/k! for k = 0..N-1, so evaluating a
// templated expression on Jet<3>::variable(x) yields f, f', f'' together.

#include <array>
#include <cmath>
#include <cstddef>

namespace zeromode {

template <std::size_t N, class Real = double>
struct Jet {
    static_assert(N >= 1);
    std::array<Real, N> c{};

    constexpr Jet() = default;
    constexpr Jet(Real v) { c[0] = v; }  // NOLINT: implicit promotion of constants

    static Jet variable(Real x) {
        Jet j(x);
        if constexpr (N > 1) j.c[1] = 1;
        return j;
    }

    Real value() const { return c[0]; }

    /// k-th derivative at the expansion point.
    Real derivative(std::size_t k) const {
        Real f = 1;
        for (std::size_t i = 2; i <= k; ++i) f *= static_cast<Real>(i);
        return c[k] * f;
    }

    Jet& operator+=(Jet const& o) {
        for (std::size_t k = 0; k < N; ++k) c[k] += o.c[k];
        return *this;
    }
    Jet& operator-=(Jet const& o) {
        for (std::size_t k = 0; k < N; ++k) c[k] -= o.c[k];
        return *this;
    }
    Jet& operator*=(Jet const& o) { return *this = *this * o; }
    Jet& operator/=(Jet const& o) { return *this = *this / o; }

    friend Jet operator-(Jet a) {
        for (auto& v : a.c) v = -v;
        return a;
    }
    friend Jet operator+(Jet a, Jet const& b) { return a += b; }
    friend Jet operator-(Jet a, Jet const& b) { return a -= b; }
    friend Jet operator*(Jet const& a, Jet const& b) {
        Jet r(0);
        for (std::size_t k = 0; k < N; ++k) {
            Real s = 0;
            for (std::size_t j = 0; j <= k; ++j) s += a.c[j] * b.c[k - j];
            r.c[k] = s;
        }
        return r;
    }
    friend Jet operator/(Jet const& a, Jet const& b) {
        Jet r(0);
        for (std::size_t k = 0; k < N; ++k) {
            Real s = a.c[k];
            for (std::size_t j = 0; j < k; ++j) s -= r.c[j] * b.c[k - j];
            r.c[k] = s / b.c[0];
        }
        return r;
    }
    friend Jet operator+(Jet a, Real b) { a.c[0] += b; return a; }
    friend Jet operator+(Real b, Jet a) { a.c[0] += b; return a; }
    friend Jet operator-(Jet a, Real b) { a.c[0] -= b; return a; }
    friend Jet operator-(Real b, Jet a) { return Jet(b) - a; }
    friend Jet operator*(Jet a, Real b) {
        for (auto& v : a.c) v *= b;
        return a;
    }
    friend Jet operator*(Real b, Jet a) { return a * b; }
    friend Jet operator/(Jet a, Real b) {
        for (auto& v : a.c) v /= b;
        return a;
    }
    friend Jet operator/(Real b, Jet const& a) { return Jet(b) / a; }
};

/// Series of the derivative, one order shorter.
template <std::size_t N, class Real>
Jet<N - 1, Real> differentiate(Jet<N, Real> const& a) {
    static_assert(N >= 2);
    Jet<N - 1, Real> r(0);
    for (std::size_t k = 0; k + 1 < N; ++k) r.c[k] = static_cast<Real>(k + 1) * a.c[k + 1];
    return r;
}

/// f(u) for an external f given its derivatives f^(m)(u0), m = 0..N-1.
template <std::size_t N, class Real>
Jet<N, Real> compose(std::array<Real, N> const& derivs, Jet<N, Real> const& u) {
    Jet<N, Real> shift = u;
    shift.c[0] = 0;
    Jet<N, Real> power(1);
    Jet<N, Real> r(0);
    Real factorial = 1;
    for (std::size_t m = 0; m < N; ++m) {
        if (m > 0) {
            factorial *= static_cast<Real>(m);
            power = power * shift;
        }
        r += power * (derivs[m] / factorial);
    }
    return r;
}

template <std::size_t N, class Real>
Jet<N, Real> exp(Jet<N, Real> const& a) {
    Jet<N, Real> r(0);
    r.c[0] = std::exp(a.c[0]);
    for (std::size_t k = 1; k < N; ++k) {
        Real s = 0;
        for (std::size_t j = 1; j <= k; ++j) s += static_cast<Real>(j) * a.c[j] * r.c[k - j];
        r.c[k] = s / static_cast<Real>(k);
    }
    return r;
}

template <std::size_t N, class Real>
Jet<N, Real> log(Jet<N, Real> const& a) {
    Jet<N, Real> r(0);
    r.c[0] = std::log(a.c[0]);
    for (std::size_t k = 1; k < N; ++k) {
        Real s = a.c[k];
        for (std::size_t j = 1; j < k; ++j) s -= static_cast<Real>(j) * r.c[j] * a.c[k - j] / static_cast<Real>(k);
        r.c[k] = s / a.c[0];
    }
    return r;
}

/// a^alpha for a(x0) > 0.
template <std::size_t N, class Real>
Jet<N, Real> pow(Jet<N, Real> const& a, Real alpha) {
    Jet<N, Real> r(0);
    r.c[0] = std::pow(a.c[0], alpha);
    for (std::size_t k = 1; k < N; ++k) {
        Real s = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            s += ((alpha + 1) * static_cast<Real>(j) - static_cast<Real>(k)) * a.c[j] * r.c[k - j];
        }
        r.c[k] = s / (static_cast<Real>(k) * a.c[0]);
    }
    return r;
}

template <std::size_t N, class Real>
Jet<N, Real> sqrt(Jet<N, Real> const& a) {
    return pow(a, Real(0.5));
}

namespace detail {

// Simultaneous recurrences for (sin, cos) when sign = -1 and (sinh, cosh) when sign = +1.
template <std::size_t N, class Real>
void trig_pair(Jet<N, Real> const& a, Jet<N, Real>& s, Jet<N, Real>& c, Real sign) {
    s = Jet<N, Real>(0);
    c = Jet<N, Real>(0);
    if (sign < 0) {
        s.c[0] = std::sin(a.c[0]);
        c.c[0] = std::cos(a.c[0]);
    } else {
        s.c[0] = std::sinh(a.c[0]);
        c.c[0] = std::cosh(a.c[0]);
    }
    for (std::size_t k = 1; k < N; ++k) {
        Real ss = 0, cc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            Real const w = static_cast<Real>(j) * a.c[j];
            ss += w * c.c[k - j];
            cc += w * s.c[k - j];
        }
        s.c[k] = ss / static_cast<Real>(k);
        c.c[k] = sign * cc / static_cast<Real>(k);
    }
}

} // namespace detail

template <std::size_t N, class Real>
Jet<N, Real> sin(Jet<N, Real> const& a) {
    Jet<N, Real> s, c;
    detail::trig_pair(a, s, c, Real(-1));
    return s;
}

template <std::size_t N, class Real>
Jet<N, Real> cos(Jet<N, Real> const& a) {
    Jet<N, Real> s, c;
    detail::trig_pair(a, s, c, Real(-1));
    return c;
}

template <std::size_t N, class Real>
Jet<N, Real> sinh(Jet<N, Real> const& a) {
    Jet<N, Real> s, c;
    detail::trig_pair(a, s, c, Real(1));
    return s;
}

template <std::size_t N, class Real>
Jet<N, Real> cosh(Jet<N, Real> const& a) {
    Jet<N, Real> s, c;
    detail::trig_pair(a, s, c, Real(1));
    return c;
}

template <std::size_t N, class Real>
Jet<N, Real> tanh(Jet<N, Real> const& a) {
    Jet<N, Real> s, c;
    detail::trig_pair(a, s, c, Real(1));
    return s / c;
}

/// Scalar/jet-agnostic value access for templated evaluators.
inline double value_of(double x) { return x; }
template <std::size_t N, class Real>
Real value_of(Jet<N, Real> const& j) {
    return j.value();
}

} // namespace zeromode
