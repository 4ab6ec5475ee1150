#ifndef BETALOOP_ROOTS_HPP
#define BETALOOP_ROOTS_HPP

#include "poly.hpp"

#include <algorithm>
#include <vector>

namespace betaloop {

struct RootWithMultiplicity {
    Complex value;
    int multiplicity;
};

struct RootFindingError : std::runtime_error {
    RootFindingError(const std::string& what, double residual)
        : std::runtime_error(what + " (worst residual " + std::to_string(residual) + ")"),
          worst_residual(residual)
    {
    }
    double worst_residual;
};

namespace detail {

inline Complex horner(const std::vector<Complex>& c, const Complex& x, Complex* dp = nullptr)
{
    Complex p(0), d(0);
    for (std::size_t i = c.size(); i-- > 0;) {
        d = d * x + p;
        p = p * x + c[i];
    }
    if (dp) *dp = d;
    return p;
}

} // namespace detail

/// All complex roots of a polynomial by simultaneous (Aberth-style) iteration
/// with a Newton polish, clustered into multiplicities and sorted
/// lexicographically by (real part, imaginary part) for reproducible output.
inline std::vector<RootWithMultiplicity> poly_roots(const Poly<Complex>& p, double tolerance = 1e-30)
{
    const int deg = p.degree();
    if (deg < 0) throw std::invalid_argument("poly_roots: zero polynomial");
    if (deg == 0) return {};
    std::vector<Complex> c = p.coeffs();
    for (auto& x : c) x /= p.leading();

    // Cauchy bound for the initial ring.
    Real bound(0);
    for (int i = 0; i < deg; ++i) bound = std::max(bound, abs(c[std::size_t(i)]));
    bound += 1;

    std::vector<Complex> z(static_cast<std::size_t>(deg));
    const Real two_pi = 2 * pi_real();
    for (int i = 0; i < deg; ++i) {
        Real th = two_pi * Real(i) / Real(deg) + Real("0.37");
        z[std::size_t(i)] = Complex(Real("0.7") * bound * cos(th), Real("0.7") * bound * sin(th));
    }

    const int max_iter = 600;
    bool converged = false;
    for (int it = 0; it < max_iter && !converged; ++it) {
        converged = true;
        for (int i = 0; i < deg; ++i) {
            Complex d;
            Complex v = detail::horner(c, z[std::size_t(i)], &d);
            Complex newt = d.real().is_zero() && d.imag().is_zero() ? Complex(0) : v / d;
            Complex s(0);
            for (int j = 0; j < deg; ++j)
                if (j != i) s += Complex(1) / (z[std::size_t(i)] - z[std::size_t(j)]);
            Complex denom = Complex(1) - newt * s;
            Complex step = denom.real().is_zero() && denom.imag().is_zero() ? newt : newt / denom;
            z[std::size_t(i)] -= step;
            if (abs(step) > Real(1e-40) * (1 + abs(z[std::size_t(i)]))) converged = false;
        }
    }

    // Newton polish.
    for (auto& zi : z) {
        for (int it = 0; it < 8; ++it) {
            Complex d;
            Complex v = detail::horner(c, zi, &d);
            if (abs(d).is_zero()) break;
            Complex step = v / d;
            zi -= step;
            if (abs(step) < Real(1e-45) * (1 + abs(zi))) break;
        }
    }

    double worst = 0;
    Real scale = bound;
    for (auto& zi : z) {
        Complex v = detail::horner(c, zi, nullptr);
        worst = std::max(worst, abs(v).convert_to<double>());
    }

    // Cluster near-coincident roots into multiplicities.
    std::vector<bool> used(z.size(), false);
    std::vector<RootWithMultiplicity> out;
    Real cluster_radius = Real(std::pow(std::max(tolerance, 1e-45), 1.0 / (deg + 1))) * (1 + scale);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (used[i]) continue;
        Complex sum = z[i];
        int m = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            if (!used[j] && abs(z[j] - z[i]) < cluster_radius) {
                used[j] = true;
                sum += z[j];
                ++m;
            }
        }
        out.push_back({sum / Real(m), m});
    }

    // Residual certificate on the clustered representatives.
    double worst_cluster = 0;
    for (auto& r : out) {
        Complex v = detail::horner(c, r.value, nullptr);
        worst_cluster = std::max(worst_cluster, abs(v).convert_to<double>());
    }
    if (!converged && worst_cluster > tolerance)
        throw RootFindingError("poly_roots: iteration budget exhausted", worst_cluster);
    (void)worst;

    std::sort(out.begin(), out.end(), [](const RootWithMultiplicity& a, const RootWithMultiplicity& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

} // namespace betaloop

#endif
