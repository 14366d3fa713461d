// Copyright 2026 The mga Authors
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

#include "mga/propagators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mga {

namespace {

constexpr double kStructureTol = 1e-12;

// Tolerance for algebraic identity checks on an Element of magnitude `scale`.
double structure_tol(double scale) { return kStructureTol * std::max(1.0, scale * scale); }

// sinh(z) / z, accurate near zero.
Complex sinhc(Complex z) {
    if (std::abs(z) < 1e-4) {
        Complex z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}

// r^2 = a + b r for an Element r with no identity component.
struct QuadraticRelation {
    Complex a;
    Complex b;
};

std::optional<QuadraticRelation> find_quadratic(const Element& r) {
    const int n = r.n_particles();
    Element r2 = r * r;
    Complex a = scalar_part(r2);
    double tol = structure_tol(max_abs_coefficient(r));

    Element rest = r2 - Element::scalar(n, a);
    if (max_abs_coefficient(rest) < tol) return QuadraticRelation{a, 0.0};

    // Least-squares b from the overlap of r^2 with r.
    Complex num = 0.0;
    double den = 0.0;
    for (const auto& t : r.terms()) {
        num += std::conj(t.coeff) * r2.coefficient(t.string);
        den += std::norm(t.coeff);
    }
    Complex b = num / den;
    if (max_abs_coefficient(rest - b * r) < tol) return QuadraticRelation{a, b};
    return std::nullopt;
}

// exp(s r) given r^2 = a + b r. With eigenvalues m +- d/2 of r,
// exp(s r) = e^{s m} [cosh(s d/2) - s m sinhc(s d/2)] + s e^{s m} sinhc(s d/2) r.
Element quadratic_exp(const Element& r, Complex s, const QuadraticRelation& q) {
    Complex m = q.b / 2.0;
    Complex half_d = std::sqrt(q.b * q.b / 4.0 + q.a);
    Complex x = s * half_d;
    Complex em = std::exp(s * m);
    Complex shc = sinhc(x);
    Complex c0 = em * (std::cosh(x) - s * m * shc);
    Complex c1 = s * em * shc;
    return Element::scalar(r.n_particles(), c0) + c1 * r;
}

Element series_exp(const Element& r, Complex s) {
    const int n = r.n_particles();
    Element scaled = s * r;
    double theta = l1_norm(scaled);
    int squarings = 0;
    if (theta > 0.5) squarings = static_cast<int>(std::ceil(std::log2(theta / 0.5)));
    scaled *= std::ldexp(1.0, -squarings);
    theta = std::ldexp(theta, -squarings);

    Element sum = Element::identity(n);
    Element term = Element::identity(n);
    double bound = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term = (term * scaled) * (1.0 / k);
        sum += term;
        bound *= theta / (k + 1);
        if (2.0 * bound < 1e-17) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

}  // namespace

AxisVector AxisVector::normalized(double x, double y, double z) {
    double norm = std::sqrt(x * x + y * y + z * z);
    if (norm == 0.0) throw std::invalid_argument("zero rotation axis");
    return {x / norm, y / norm, z / norm};
}

double AxisVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

void AxisVector::check_unit() const {
    if (std::abs(norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("rotation axis is not unit norm (|a| = " +
                                    std::to_string(norm()) + ")");
    }
}

Element axis_element(const AxisVector& axis, int particle, int n) {
    return axis.x * sigma(1, particle, n) + axis.y * sigma(2, particle, n) +
           axis.z * sigma(3, particle, n);
}

Element rotor(const AxisVector& axis, double angle, int particle, int n) {
    axis.check_unit();
    return Element::scalar(n, std::cos(angle / 2)) +
           Complex(0.0, -std::sin(angle / 2)) * axis_element(axis, particle, n);
}

ExpStrategy exp_strategy(const Element& g) {
    Element r = g - Element::scalar(g.n_particles(), scalar_part(g));
    if (r.is_zero()) return ExpStrategy::Scalar;
    auto q = find_quadratic(r);
    if (!q) return ExpStrategy::Series;
    return q->b == Complex(0.0) ? ExpStrategy::ScalarSquare : ExpStrategy::Quadratic;
}

Element exp_element(const Element& g, Complex scale,
                    const std::optional<IdempotentFactorization>& hint) {
    const int n = g.n_particles();
    if (hint) {
        Element product = hint->factor * hint->idempotent;
        if (max_abs_difference(product, g) > structure_tol(max_abs_coefficient(g))) {
            throw std::invalid_argument("factorization hint does not multiply back to the generator");
        }
        return conditional_exp(scale * hint->factor, hint->idempotent);
    }

    Complex c0 = scalar_part(g);
    Element prefactor = Element::scalar(n, std::exp(scale * c0));
    Element r = g - Element::scalar(n, c0);
    if (r.is_zero()) return prefactor;

    if (auto q = find_quadratic(r)) return prefactor * quadratic_exp(r, scale, *q);
    return prefactor * series_exp(r, scale);
}

Element conditionalize(const Element& u, const Element& e) {
    check_same_particles(u, e);
    double tol = structure_tol(std::max(max_abs_coefficient(u), max_abs_coefficient(e)));
    if (max_abs_difference(e * e, e) > tol) {
        throw std::invalid_argument("condition is not idempotent");
    }
    if (max_abs_coefficient(commutator(u, e)) > tol) {
        throw std::invalid_argument("operator does not commute with the condition");
    }
    return u * e + (Element::identity(e.n_particles()) - e);
}

Element conditional_exp(const Element& a, const Element& e) {
    check_same_particles(a, e);
    double tol = structure_tol(std::max(max_abs_coefficient(a), max_abs_coefficient(e)));
    if (max_abs_difference(e * e, e) > tol) {
        throw std::invalid_argument("condition is not idempotent");
    }
    if (max_abs_coefficient(commutator(a, e)) > tol) {
        throw std::invalid_argument("generator does not commute with the condition");
    }
    return conditionalize(exp_element(a), e);
}

Element transition_propagator(double alpha, int target, int control, int n) {
    check_particle(target, n);
    check_particle(control, n);
    if (target == control) throw std::invalid_argument("target and control must differ");
    return conditional_exp(Complex(0.0, -alpha / 2) * sigma(1, target, n),
                           idempotent_e(Sign::Minus, control, n));
}

Element scalar_coupling_hamiltonian(double j_hz, int p1, int p2, int n) {
    Element pi12 = particle_interchange(p1, p2, n);
    return (std::numbers::pi * j_hz / 2) * (2.0 * pi12 - Element::identity(n));
}

Element scalar_coupling_propagator(double j_hz, double t, int p1, int p2, int n) {
    double angle = std::numbers::pi * j_hz * t;
    Element pi12 = particle_interchange(p1, p2, n);
    return std::exp(Complex(0.0, -angle / 2)) *
           (Element::scalar(n, std::cos(angle)) + Complex(0.0, std::sin(angle)) * pi12);
}

Element compound_pulse_generator(double alpha_plus, double alpha_minus, double beta_plus,
                                 double beta_minus) {
    constexpr int n = 2;
    Element s1_1 = sigma(1, 1, n);
    Element s1_2 = sigma(1, 2, n);
    return 0.5 * (alpha_plus * (s1_1 * idempotent_e(Sign::Plus, 2, n)) +
                  alpha_minus * (s1_1 * idempotent_e(Sign::Minus, 2, n)) +
                  beta_plus * (s1_2 * idempotent_e(Sign::Plus, 1, n)) +
                  beta_minus * (s1_2 * idempotent_e(Sign::Minus, 1, n)));
}

CompoundPulse compound_pulse_split(double alpha_plus, double alpha_minus, double beta_plus,
                                   double beta_minus) {
    constexpr int n = 2;
    Element s1_1 = sigma(1, 1, n);
    Element s1_2 = sigma(1, 2, n);
    Element s3_1 = sigma(3, 1, n);
    Element s3_2 = sigma(3, 2, n);

    CompoundPulse out{
        .x = ((alpha_plus + alpha_minus) / 4) * s1_1 + ((beta_plus - beta_minus) / 4) * (s3_1 * s1_2),
        .y = ((alpha_plus - alpha_minus) / 4) * (s1_1 * s3_2) + ((beta_plus + beta_minus) / 4) * s1_2,
        .x_squared = ((alpha_plus + alpha_minus) * (alpha_plus + alpha_minus) +
                      (beta_plus - beta_minus) * (beta_plus - beta_minus)) / 16,
        .y_squared = ((alpha_plus - alpha_minus) * (alpha_plus - alpha_minus) +
                      (beta_plus + beta_minus) * (beta_plus + beta_minus)) / 16,
        .exp_x = Element(n),
        .exp_y = Element(n),
        .propagator = Element(n),
    };

    double scale = std::max({std::abs(alpha_plus), std::abs(alpha_minus), std::abs(beta_plus),
                             std::abs(beta_minus), 1.0});
    double tol = structure_tol(scale);
    if (max_abs_coefficient(commutator(out.x, out.y)) > tol) {
        throw std::logic_error("compound pulse generators X and Y do not commute");
    }
    if (max_abs_difference(out.x * out.x, Element::scalar(n, out.x_squared)) > tol ||
        max_abs_difference(out.y * out.y, Element::scalar(n, out.y_squared)) > tol) {
        throw std::logic_error("compound pulse generator squares are not the expected scalars");
    }

    // exp(-iota X) = cos(|X|) - iota sin(|X|) X / |X|.
    auto closed_form = [&](const Element& g, double g2) {
        double root = std::sqrt(g2);
        if (root == 0.0) return Element::identity(n);
        return Element::scalar(n, std::cos(root)) + Complex(0.0, -std::sin(root) / root) * g;
    };
    out.exp_x = closed_form(out.x, out.x_squared);
    out.exp_y = closed_form(out.y, out.y_squared);
    out.propagator = out.exp_x * out.exp_y;
    return out;
}

Element compound_pulse(double alpha_plus, double alpha_minus, double beta_plus, double beta_minus,
                       int n) {
    if (n != 2) throw std::invalid_argument("compound pulses are defined for two particles");
    return compound_pulse_split(alpha_plus, alpha_minus, beta_plus, beta_minus).propagator;
}

}  // namespace mga
