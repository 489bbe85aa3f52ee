#pragma once

// Gaver-Stehfest inversion on the real axis:
//
//   f(t) ~ (ln 2 / t) sum_{k=1}^{N} V_k F(k ln 2 / t)
//
//   V_k = (-1)^{k+N/2} sum_{j=floor((k+1)/2)}^{min(k,N/2)}
//         j^{N/2} (2j)! / ((N/2-j)! j! (j-1)! (k-j)! (2j-k)!)
//
// The weights are summed in exact rational arithmetic, then rounded once
// to Real. They alternate with magnitudes up to ~1e9 at N = 18, so the
// achievable accuracy is limited to ~1e-5 relative in double.

#include <array>
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "viscobessel/error.hpp"
#include "viscobessel/laplace/laplace_function.hpp"

namespace viscobessel::laplace {

inline constexpr int stehfest_min_terms = 8;
inline constexpr int stehfest_max_terms = 32;

namespace detail {

inline boost::multiprecision::cpp_int factorial(int n) {
    boost::multiprecision::cpp_int result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

inline std::vector<boost::multiprecision::cpp_rational> stehfest_weights_exact(int n) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    const int half = n / 2;
    std::vector<cpp_rational> weights(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        cpp_rational sum = 0;
        for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
            cpp_int numerator = boost::multiprecision::pow(cpp_int(j), static_cast<unsigned>(half)) * factorial(2 * j);
            cpp_int denominator = factorial(half - j) * factorial(j) * factorial(j - 1) * factorial(k - j) *
                                  factorial(2 * j - k);
            sum += cpp_rational(numerator, denominator);
        }
        weights[static_cast<std::size_t>(k - 1)] = ((k + half) % 2 == 0) ? sum : cpp_rational(-sum);
    }
    return weights;
}

template <class Real>
Real rational_to(const boost::multiprecision::cpp_rational& value) {
    if constexpr (std::is_floating_point_v<Real>) {
        return value.template convert_to<Real>();
    } else {
        return Real(boost::multiprecision::numerator(value).str()) /
               Real(boost::multiprecision::denominator(value).str());
    }
}

}  // namespace detail

/// Stehfest weights V_1..V_N for even N in [8, 32], computed once per Real.
/// The weights reach ~10^{0.45 N}; N above ~16 needs more than double precision.
template <class Real>
const std::vector<Real>& stehfest_weights(int n) {
    if (n < stehfest_min_terms || n > stehfest_max_terms || n % 2 != 0) {
        throw domain_error("invert_stehfest: N must be even and within [8, 32]");
    }
    static const auto table = [] {
        std::array<std::vector<Real>, stehfest_max_terms + 1> all;
        for (int m = stehfest_min_terms; m <= stehfest_max_terms; m += 2) {
            for (const auto& w : detail::stehfest_weights_exact(m)) {
                all[static_cast<std::size_t>(m)].push_back(detail::rational_to<Real>(w));
            }
        }
        return all;
    }();
    return table[static_cast<std::size_t>(n)];
}

template <class Real>
Real invert_stehfest(const LaplaceFunction<Real>& transform, Real t, int n = 14) {
    using std::log;
    if (!(t > Real(0))) {
        throw domain_error("invert_stehfest: t must be positive");
    }
    const auto& weights = stehfest_weights<Real>(n);
    const Real ln2 = log(Real(2));
    Real sum = Real(0);
    for (int k = 1; k <= n; ++k) {
        const Real s = Real(k) * ln2 / t;
        sum += weights[static_cast<std::size_t>(k - 1)] * transform(std::complex<Real>(s, Real(0))).real();
    }
    return ln2 / t * sum;
}

}  // namespace viscobessel::laplace
