#ifndef BETALOOP_CONTOUR_HPP
#define BETALOOP_CONTOUR_HPP

#include "scalar.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace betaloop {

/// Gauss-Legendre nodes and weights on [-1, 1] at working precision,
/// computed by Newton iteration on the Legendre recurrence and cached per order.
inline const std::pair<std::vector<Real>, std::vector<Real>>& gauss_legendre(std::size_t n)
{
    static std::map<std::size_t, std::pair<std::vector<Real>, std::vector<Real>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Real> x(n), w(n);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        Real z = cos(pi_real() * (Real(double(i)) + Real("0.75")) / (Real(double(n)) + Real("0.5")));
        Real z1, pp;
        for (int iter = 0; iter < 200; ++iter) {
            Real p1(1), p2(0);
            for (std::size_t j = 0; j < n; ++j) {
                Real p3 = p2;
                p2 = p1;
                p1 = ((2 * Real(double(j)) + 1) * z * p2 - Real(double(j)) * p3) / Real(double(j + 1));
            }
            pp = Real(double(n)) * (z * p1 - p2) / (z * z - 1);
            z1 = z;
            z = z1 - p1 / pp;
            if (abs(z - z1) < Real(1e-58)) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2 / ((1 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

/// A quadrature node of a path integral: position and weight already
/// multiplied by dz/dt, so that  \int f dz  =  sum f(z_i) w_i.
struct PathNode {
    Complex z;
    Complex w;
};

/// Piecewise-smooth oriented path in the complex plane. Positive orientation
/// is counterclockwise; the path integral convention used throughout is
///   (1/2\pi i) \oint f(z) dz = sum of residues inside (counterclockwise).
class Contour {
public:
    struct Segment {
        // t in [0,1] -> (z(t), z'(t))
        std::function<std::pair<Complex, Complex>(const Real&)> map;
    };

    static Contour circle(const Complex& center, const Real& radius, bool ccw = true)
    {
        Contour c;
        Real sgn = ccw ? Real(1) : Real(-1);
        c.segments_.push_back({[=](const Real& t) {
            Real th = sgn * 2 * pi_real() * t;
            Complex e(cos(th), sin(th));
            return std::make_pair(center + radius * e,
                                  sgn * 2 * pi_real() * radius * Complex(-sin(th), cos(th)));
        }});
        return c;
    }

    static Contour line(const Complex& a, const Complex& b)
    {
        Contour c;
        c.segments_.push_back({[=](const Real& t) {
            return std::make_pair(a + t * (b - a), b - a);
        }});
        return c;
    }

    /// Counterclockwise stadium around the real segment [a, b]:
    /// two straight edges at distance `clearance` plus two semicircular caps.
    static Contour stadium(const Real& a, const Real& b, const Real& clearance)
    {
        Contour c;
        const Complex i01(0, 1);
        Complex lo(a, 0), hi(b, 0);
        Real d = clearance;
        // bottom edge, left to right
        c.append(line(lo - i01 * d, hi - i01 * d));
        // right cap: angle -pi/2 .. +pi/2 around b
        c.segments_.push_back({[=](const Real& t) {
            Real th = -pi_real() / 2 + pi_real() * t;
            Complex e(cos(th), sin(th));
            return std::make_pair(hi + d * e, pi_real() * d * Complex(-sin(th), cos(th)));
        }});
        // top edge, right to left
        c.append(line(hi + i01 * d, lo + i01 * d));
        // left cap: angle +pi/2 .. +3pi/2 around a
        c.segments_.push_back({[=](const Real& t) {
            Real th = pi_real() / 2 + pi_real() * t;
            Complex e(cos(th), sin(th));
            return std::make_pair(lo + d * e, pi_real() * d * Complex(-sin(th), cos(th)));
        }});
        return c;
    }

    void append(const Contour& other)
    {
        for (auto& s : other.segments_) segments_.push_back(s);
    }

    Contour reversed() const
    {
        Contour c;
        for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
            auto seg = *it;
            c.segments_.push_back({[seg](const Real& t) {
                auto [z, dz] = seg.map(1 - t);
                return std::make_pair(z, Complex(0) - dz);
            }});
        }
        return c;
    }

    std::size_t segment_count() const { return segments_.size(); }

    /// Nodes for composite Gauss-Legendre with `panels` panels per segment
    /// and `order` points per panel.
    std::vector<PathNode> nodes(std::size_t order, std::size_t panels) const
    {
        const auto& [gx, gw] = gauss_legendre(order);
        std::vector<PathNode> out;
        out.reserve(segments_.size() * panels * order);
        for (const auto& seg : segments_) {
            for (std::size_t p = 0; p < panels; ++p) {
                Real t0 = Real(double(p)) / Real(double(panels));
                Real half = Real(1) / Real(double(2 * panels));
                for (std::size_t k = 0; k < order; ++k) {
                    Real t = t0 + half * (gx[k] + 1);
                    auto [z, dz] = seg.map(t);
                    out.push_back({z, dz * half * gw[k]});
                }
            }
        }
        return out;
    }

private:
    std::vector<Segment> segments_;
};

struct QuadratureResult {
    Complex value;
    Real error_estimate;
    std::size_t nodes_used = 0;
    bool converged = true;
};

/// Path integral \int f dz with panel doubling until the successive-refinement
/// error estimate drops below `tol` or the node budget (2^14) is reached.
inline QuadratureResult contour_integral(const std::function<Complex(const Complex&)>& f,
                                         const Contour& contour, std::size_t order = 64,
                                         const Real& tol = Real(1e-40))
{
    const std::size_t max_nodes = std::size_t(1) << 14;
    std::size_t panels = 1;
    Complex prev(0);
    bool have_prev = false;
    QuadratureResult res;
    while (true) {
        auto nds = contour.nodes(order, panels);
        Complex acc(0);
        for (auto& n : nds) acc += f(n.z) * n.w;
        res.nodes_used = nds.size();
        if (have_prev) {
            res.error_estimate = abs(acc - prev);
            res.value = acc;
            if (res.error_estimate < tol * (1 + abs(acc))) {
                res.converged = true;
                return res;
            }
        }
        prev = acc;
        have_prev = true;
        if (contour.segment_count() * panels * 2 * order > max_nodes) {
            res.value = prev;
            res.converged = false;
            return res;
        }
        panels *= 2;
    }
}

} // namespace betaloop

#endif
