#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>

#include <boost/multiprecision/float128.hpp>

namespace viscobessel::laplace {

/// Working precision of the inversion oracles. The fixed-Talbot rule
/// amplifies rounding by about e^{0.4 M}; quad precision keeps M = 64
/// usable and resolves relaxation values down to ~1e-20.
using oracle_real = boost::multiprecision::float128;

/// A transform F(s), evaluable at complex s on or right of the inversion contour.
template <class Real>
struct LaplaceFunction {
    std::function<std::complex<Real>(const std::complex<Real>&)> evaluate;
    std::string label;

    std::complex<Real> operator()(const std::complex<Real>& s) const { return evaluate(s); }
};

template <class Real, class F>
LaplaceFunction<Real> make_laplace_function(F&& f, std::string label) {
    return LaplaceFunction<Real>{std::forward<F>(f), std::move(label)};
}

}  // namespace viscobessel::laplace
