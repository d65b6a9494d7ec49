// Copyright 2026 The stabent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabent/closed_forms.h"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stabent {

namespace {

Rational q(std::int64_t num, std::int64_t den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

void require_positive(std::int64_t d_a, std::int64_t d_b) {
    if (d_a < 1 || d_b < 1) {
        throw std::invalid_argument("Dimensions must be positive");
    }
}

// Normalization of the 2 x d_B entanglement density: 1 / int_0^{1/2} e^{d_B-2} sqrt(1-2e) de
// = 2^{d_B} Gamma(d_B + 1/2) / (sqrt(pi) Gamma(d_B - 1)).
double marginal_constant(std::int64_t d_b) {
    double db = static_cast<double>(d_b);
    return std::exp(db * std::numbers::ln2 + std::lgamma(db + 0.5) - std::lgamma(db - 1.0)) / std::sqrt(std::numbers::pi);
}

// Integrates g(e) P(e) over [lo, hi] with e = (1 - t^2)/2, so sqrt(1-2e) de = -t^2 dt
// and the integrand is smooth in t.
template <typename F>
double integrate_against_marginal(double lo, double hi, std::int64_t d_b, F g) {
    if (d_b < 2) {
        throw std::domain_error("The 2 x d_B marginal needs d_B >= 2");
    }
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 0.5);
    if (hi <= lo) {
        return 0.0;
    }
    double c = marginal_constant(d_b);
    double power = static_cast<double>(d_b - 2);
    auto integrand = [&](double t) {
        double e = 0.5 * (1.0 - t * t);
        return g(e) * c * std::pow(e, power) * t * t;
    };
    double t_lo = std::sqrt(std::max(0.0, 1.0 - 2.0 * hi));
    double t_hi = std::sqrt(std::max(0.0, 1.0 - 2.0 * lo));
    double err = 0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, t_lo, t_hi, 5, 1e-11, &err);
}

}  // namespace

Rational mean_e_lin(std::int64_t d_a, std::int64_t d_b) {
    require_positive(d_a, d_b);
    return 1 - q(d_a + d_b, d_a * d_b + 1);
}

Rational var_e_lin(std::int64_t d_a, std::int64_t d_b) {
    require_positive(d_a, d_b);
    BigInt d = BigInt(d_a) * d_b;
    BigInt num = 2 * (BigInt(d_a) * d_a - 1) * (BigInt(d_b) * d_b - 1);
    BigInt den = (d + 1) * (d + 1) * (d + 2) * (d + 3);
    return make_rational(num, den);
}

Rational mean_m_lin(std::int64_t d) {
    require_positive(d, 1);
    return 1 - q(4, d + 3);
}

Rational var_m_lin(std::int64_t d) {
    require_positive(d, 1);
    BigInt bd(d);
    return make_rational(96 * (bd - 1), (bd + 3) * (bd + 3) * (bd + 5) * (bd + 6) * (bd + 7));
}

Rational covariance_e_m() {
    return Rational(0);
}

OrbitCoefficients orbit_coefficients(std::int64_t d_a, std::int64_t d_b) {
    require_positive(d_a, d_b);
    if (d_a == 3 || d_b == 3) {
        throw std::domain_error("Orbit coefficients have a pole at dimension 3");
    }
    Rational a(d_a);
    Rational b(d_b);
    Rational ab = a * b;
    Rational pa = a * a - 9;
    Rational pb = b * b - 9;
    OrbitCoefficients c;
    c.alpha = 1 - Rational(4, 3) * (8 / ab + 5 / ((a + 3) * (b + 3)) - 1 / ((a - 3) * (b - 3)));
    c.beta = 8 / ((a + 3) * (b + 3)) + 16 / ab;
    c.gamma = -(4 * (ab + 9) / (pa * pb) + 8 / ab);
    c.delta = -96 * (a * a + ab + b * b - 9) / (a * pa * b * pb);
    c.mu = 24 * (a + b) / (pa * pb);
    return c;
}

double mbar(const SchmidtSpectrum &lambda, std::int64_t d_a, std::int64_t d_b) {
    if (static_cast<std::int64_t>(lambda.size()) != d_a) {
        throw std::invalid_argument("Spectrum length must equal d_A");
    }
    OrbitCoefficients c = orbit_coefficients(d_a, d_b);
    double e = lambda.e_lin();
    return to_double(c.alpha) + to_double(c.beta) * e + to_double(c.gamma) * e * e +
           to_double(c.delta) * lambda.power_sum(3) + to_double(c.mu) * lambda.power_sum(4);
}

Rational mbar_exact(const std::vector<Rational> &lambda, std::int64_t d_a, std::int64_t d_b) {
    if (static_cast<std::int64_t>(lambda.size()) != d_a) {
        throw std::invalid_argument("Spectrum length must equal d_A");
    }
    Rational p1 = 0;
    Rational p2 = 0;
    Rational p3 = 0;
    Rational p4 = 0;
    for (const Rational &l : lambda) {
        if (l < 0) {
            throw std::invalid_argument("Spectrum entries must be nonnegative");
        }
        Rational l2 = l * l;
        p1 += l;
        p2 += l2;
        p3 += l2 * l;
        p4 += l2 * l2;
    }
    if (p1 != 1) {
        throw std::invalid_argument("Spectrum must sum to exactly 1");
    }
    OrbitCoefficients c = orbit_coefficients(d_a, d_b);
    Rational e = 1 - p2;
    return c.alpha + c.beta * e + c.gamma * e * e + c.delta * p3 + c.mu * p4;
}

Rational mbar_separable(std::int64_t d_a, std::int64_t d_b) {
    require_positive(d_a, d_b);
    return 1 - q(16, (d_a + 3) * (d_b + 3));
}

Rational mbar_maxent(std::int64_t d_a, std::int64_t d_b) {
    require_positive(d_a, d_b);
    if (d_b == 3) {
        throw std::domain_error("Maximally entangled closed form has a pole at d_B = 3");
    }
    BigInt a(d_a);
    BigInt b(d_b);
    BigInt num = a * a * a * b * b * b - 9 * a * a * a * b - 4 * a * a * b * b + 24 * a * a + 12 * a * b - 24;
    BigInt den = a * a * a * (b - 3) * b * (b + 3);
    return make_rational(num, den);
}

double mbar_asymptotic(double e, double sum_cube, double sum_quartic, std::int64_t d_a, std::int64_t d_b) {
    double d = static_cast<double>(d_a) * static_cast<double>(d_b);
    double sd = std::sqrt(d);
    double d15 = d * sd;
    return 1 - (12 * e * e - 24 * e + 16) / d - 48 * (e - 1) / d15 - 36 * (3 * e * e - 6 * e + 4) / (d * d) -
           864 * (e - 1) / (d * d15) - 48 / d15 * (6 / sd * sum_cube - sum_quartic);
}

double mbar_asymptotic_unbalanced(double e, double sum_cube, double sum_quartic, std::int64_t d_a, std::int64_t d_b) {
    double a = static_cast<double>(d_a);
    double d = a * static_cast<double>(d_b);
    return 1 - (12 * e * e - 24 * e + 16) / d - 24 * (e - 1) / (d * a) - 12 * (3 * e * e - 6 * e + 4) / (d * a * a) -
           24 / (a * d) * (4 / a * sum_cube - sum_quartic);
}

double mtilde_2xdB(double e, std::int64_t d_b) {
    if (!(e >= 0 && e <= 0.5)) {
        throw std::domain_error("mtilde_2xdB requires e in [0, 1/2], got " + std::to_string(e));
    }
    if (d_b < 1) {
        throw std::invalid_argument("d_B must be positive");
    }
    double b = static_cast<double>(d_b);
    return (5 * b * b - 24 * b * e * e + 24 * b * e - b - 60 * e * e) / (5 * b * (b + 3));
}

Rational mtilde_2xdB_exact(const Rational &e, std::int64_t d_b) {
    if (e < 0 || e > Rational(1, 2)) {
        throw std::domain_error("mtilde_2xdB requires e in [0, 1/2]");
    }
    Rational b(d_b);
    return (5 * b * b - 24 * b * e * e + 24 * b * e - b - 60 * e * e) / (5 * b * (b + 3));
}

double mtilde_2xdB_asymptotic(double e, std::int64_t d_b) {
    return 1 - 8 * (3 * e * e - 3 * e + 2) / (5 * static_cast<double>(d_b));
}

double marginal_pe_2xdB(double e, std::int64_t d_b) {
    if (!(e >= 0 && e < 0.5)) {
        throw std::domain_error("marginal_pe_2xdB requires e in [0, 1/2), got " + std::to_string(e));
    }
    if (d_b < 2) {
        throw std::domain_error("The 2 x d_B marginal needs d_B >= 2");
    }
    return marginal_constant(d_b) * std::pow(e, static_cast<double>(d_b - 2)) * std::sqrt(1 - 2 * e);
}

double marginal_mass_2xdB(double lo, double hi, std::int64_t d_b) {
    return integrate_against_marginal(lo, hi, d_b, [](double) { return 1.0; });
}

double mtilde_bin_average_2xdB(double lo, double hi, std::int64_t d_b) {
    double mass = marginal_mass_2xdB(lo, hi, d_b);
    if (mass <= 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double weighted = integrate_against_marginal(lo, hi, d_b, [d_b](double e) {
        return mtilde_2xdB(std::clamp(e, 0.0, 0.5), d_b);
    });
    return weighted / mass;
}

double haar_consistency_2xdB(std::int64_t d_b) {
    return integrate_against_marginal(0.0, 0.5, d_b, [d_b](double e) {
        return mtilde_2xdB(std::clamp(e, 0.0, 0.5), d_b);
    });
}

Rational clifford_antiflat_prefactor(std::int64_t d_a, std::int64_t d) {
    if (d_a < 1 || d < 2 || d % d_a != 0) {
        throw std::invalid_argument("clifford_antiflat_prefactor requires d_A dividing d >= 2");
    }
    BigInt a(d_a);
    BigInt dd(d);
    return make_rational((dd * dd - a * a) * (a * a - 1), (dd * dd - 1) * (dd + 2) * a * a);
}

AntiflatDecomposition mbar_antiflat_decomposition(const SchmidtSpectrum &lambda, std::int64_t d_a, std::int64_t d_b) {
    if (static_cast<std::int64_t>(lambda.size()) != d_a) {
        throw std::invalid_argument("Spectrum length must equal d_A");
    }
    OrbitCoefficients c = orbit_coefficients(d_a, d_b);
    double alpha = to_double(c.alpha);
    double beta = to_double(c.beta);
    double gamma = to_double(c.gamma);
    double delta = to_double(c.delta);
    double e = lambda.e_lin();
    AntiflatDecomposition out;
    out.delta_times_f = delta * antiflatness(lambda);
    out.g_of_e = alpha + delta + (beta - 2 * delta) * e + (gamma + delta) * e * e;
    out.residual = to_double(c.mu) * lambda.power_sum(4);
    return out;
}

double bhatia_davis(double mean) {
    return mean * (1 - mean);
}

ConcentrationBounds bounds(double eps, std::int64_t d_a, std::int64_t d_b, double mbar_value) {
    if (!(eps > 0)) {
        throw std::invalid_argument("eps must be positive");
    }
    require_positive(d_a, d_b);
    double a = static_cast<double>(d_a);
    double b = static_cast<double>(d_b);
    double d = a * b;
    ConcentrationBounds out;
    out.levy_m_bound = 3 * std::exp(-eps * eps * d / (729 * std::numbers::pi));
    out.haar_chebyshev_bound = to_double(var_m_lin(d_a * d_b)) / (eps * eps);
    double pa = a * a - 9;
    double pb = b * b - 9;
    out.chebyshev_orbit_variance = 16 * a * a * a * b * b * b / (pa * pa * pb * pb);
    out.chebyshev_orbit_bound = out.chebyshev_orbit_variance / (eps * eps);
    out.bhatia_davis_bound = bhatia_davis(mbar_value);
    return out;
}

}  // namespace stabent
