#ifndef BETALOOP_CURVE_HPP
#define BETALOOP_CURVE_HPP

#include "contour.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "ratfun.hpp"
#include "roots.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace betaloop {

/// Polynomial potential V(x) = sum_j couplings[j] x^j.
struct Potential {
    std::vector<BigRat> couplings; // exact inputs; floating views derived

    explicit Potential(std::vector<BigRat> c) : couplings(std::move(c))
    {
        while (!couplings.empty() && couplings.back().is_zero()) couplings.pop_back();
        if (degree() < 2) throw std::invalid_argument("Potential: degree must be at least 2");
    }
    int degree() const { return int(couplings.size()) - 1; } // m+1
    template <class F>
    Poly<F> poly() const
    {
        std::vector<F> c;
        for (const auto& q : couplings) c.push_back(FieldOps<F>::from_rat(q));
        return Poly<F>(std::move(c));
    }
    template <class F>
    Poly<F> dpoly() const
    {
        return poly<F>().derivative();
    }
};

/// Expansion bookkeeping: beta enters the engine only through
/// gamma = sqrt(beta) - 1/sqrt(beta); hbar = t0/(N sqrt(beta)) when a
/// matrix size N is given.
struct ExpansionParams {
    Real beta;
    Real gamma;
    Real t0;
    std::optional<Real> hbar;

    ExpansionParams(const Real& beta_, const Real& t0_, std::optional<long> N = std::nullopt)
        : beta(beta_), t0(t0_)
    {
        if (!(beta > 0)) throw std::invalid_argument("ExpansionParams: beta must be positive");
        if (!(t0 > 0)) throw std::invalid_argument("ExpansionParams: t0 must be positive");
        Real sb = sqrt(beta);
        gamma = sb - 1 / sb;
        if (N) hbar = t0 / (Real(*N) * sb);
    }
};

/// Filling data held fixed by the endpoint solver: total eigenvalue mass t0
/// plus the per-cut fractions S_1..S_{n-1}.
struct FillingData {
    Real t0;
    std::vector<Real> fractions;
};

struct SolveReport {
    std::vector<Real> endpoint_residuals; // asymptotic conditions, k = 0..n
    std::vector<Real> filling_residuals;  // S_i round trip, i = 1..n-1
    int newton_iterations = 0;
    Real max_residual() const
    {
        Real m(0);
        for (auto& r : endpoint_residuals) m = std::max(m, abs(r));
        for (auto& r : filling_residuals) m = std::max(m, abs(r));
        return m;
    }
};

struct SolverError : std::runtime_error {
    SolverError(const std::string& msg, std::vector<Real> last_iterate, std::vector<Real> residuals)
        : std::runtime_error(msg), iterate(std::move(last_iterate)), residual_vector(std::move(residuals))
    {
    }
    std::vector<Real> iterate;
    std::vector<Real> residual_vector;
};

namespace detail {

/// Taylor coefficients of 1/sqrt(s(u)) around u = 0, s(0) = 1.
template <class F>
std::vector<F> inv_sqrt_series(const std::vector<F>& s, std::size_t count)
{
    using Ops = FieldOps<F>;
    if (s.empty() || !Ops::is_zero(s[0] - Ops::one()))
        throw std::invalid_argument("inv_sqrt_series: series must start at 1");
    // g = 1/sqrt(s):  2 s g' + s' g = 0, g(0) = 1.
    std::vector<F> g(count, Ops::zero());
    g[0] = Ops::one();
    for (std::size_t k = 1; k < count; ++k) {
        // coefficient recursion from sum_{j} s_j [2 (k-j) + j] g_{k-j} ... derived below
        // from s * 2g' + s' g = 0 at order k-1:
        //   sum_{j=0..k} s_j * (2(k-j) + j) * g_{k-j} = 0  (term j=k uses g_0)
        F acc = Ops::zero();
        for (std::size_t j = 1; j <= k && j < s.size(); ++j) {
            acc = acc + Ops::from_int(long(2 * (k - j) + j)) * s[j] * g[k - j];
        }
        g[k] = (Ops::zero() - acc) / Ops::from_int(long(2 * k));
    }
    return g;
}

/// Expansion of V'(w)/ytilde(w) at infinity: returns coefficients h_r of
/// w^{m-n-r}, r = 0,1,2,...  (m = deg V', n = number of cuts).
/// sigma is the monic branch polynomial prod (w - mu_a), deg 2n.
template <class F>
std::vector<F> vprime_over_ytilde_series(const Poly<F>& vp, const Poly<F>& sigma, std::size_t count)
{
    using Ops = FieldOps<F>;
    const int n2 = sigma.degree(); // 2n
    // sigma(1/u) u^{2n} reversed, normalized to start at 1 (sigma monic).
    std::vector<F> srev(sigma.coeffs().rbegin(), sigma.coeffs().rend());
    auto g = inv_sqrt_series(srev, count + std::size_t(vp.degree()) + 1);
    // V'(1/u) u^m reversed:
    std::vector<F> vrev(std::size_t(vp.degree()) + 1, Ops::zero());
    for (int i = 0; i <= vp.degree(); ++i) vrev[std::size_t(vp.degree() - i)] = vp.coeff(std::size_t(i));
    // product: (sum vrev_a u^a)(sum g_b u^b); coefficient of u^r multiplies w^{m-n-r}
    std::vector<F> h(count, Ops::zero());
    for (std::size_t a = 0; a < vrev.size(); ++a)
        for (std::size_t b = 0; a + b < count && b < g.size(); ++b)
            h[a + b] = h[a + b] + vrev[a] * g[b];
    (void)n2;
    return h;
}

} // namespace detail

/// Moment polynomial M(p) of degree m-n from the residue formula: the part of
/// V'(w)/ytilde(w) that survives the projection, halved.
template <class F>
Poly<F> moment_polynomial_from(const Poly<F>& vprime, const Poly<F>& sigma)
{
    using Ops = FieldOps<F>;
    const int m = vprime.degree();
    const int n = sigma.degree() / 2;
    if (m < n) throw std::invalid_argument("moment_polynomial: deg V' < number of cuts");
    auto h = detail::vprime_over_ytilde_series(vprime, sigma, std::size_t(m - n) + 1);
    // h_r multiplies w^{m-n-r}; the w^k coefficient (k = m-n-r) becomes the
    // p^k coefficient of 2M.
    std::vector<F> mc(std::size_t(m - n) + 1, Ops::zero());
    for (int r = 0; r <= m - n; ++r) mc[std::size_t(m - n - r)] = h[std::size_t(r)] / Ops::from_int(2);
    return Poly<F>(std::move(mc));
}

/// Endpoint residuals: the n+1 asymptotic conditions
///   t0 delta_{k,n} - (1/2) [coefficient of 1/w in w^k V'(w)/ytilde(w)] = 0,
/// for k = 0..n.
template <class F>
std::vector<F> endpoint_condition_residuals(const Poly<F>& vprime, const Poly<F>& sigma, const F& t0)
{
    using Ops = FieldOps<F>;
    const int m = vprime.degree();
    const int n = sigma.degree() / 2;
    // w^k V'/ytilde = sum_r h_r w^{m-n-r+k}; 1/w coefficient: r = m-n+k+1.
    auto h = detail::vprime_over_ytilde_series(vprime, sigma, std::size_t(m - n + n + 1) + 1);
    std::vector<F> out;
    for (int k = 0; k <= n; ++k) {
        F c1 = h[std::size_t(m - n + k + 1)];
        F target = k == n ? t0 : Ops::zero();
        out.push_back(target - c1 / Ops::from_int(2));
    }
    return out;
}

/// Hyperelliptic branch evaluation: ytilde(p) as the product of principal
/// square roots of (p - mu_a); on the physical sheet ytilde ~ p^n at large
/// positive real p.
inline Complex ytilde_eval(const std::vector<Real>& mu, const Complex& p)
{
    Complex acc(1);
    for (const auto& m : mu) acc *= sqrt(p - Complex(m));
    return acc;
}

/// Sign of the physical branch of ytilde on the real axis in the gap right of
/// cut k (k = 0 means left of all cuts), n cuts total.
inline int gap_sign(int k, int n) { return (n - k) % 2 == 0 ? 1 : -1; }

enum class Sheet { physical, unphysical };

struct PointOnCurve {
    Complex p;
    Sheet sheet = Sheet::physical;
};

/// A solved spectral curve: endpoints, moment polynomial, and the data the
/// kernels and correlators consume.
class SpectralCurve {
public:
    SpectralCurve(Potential pot, FillingData fill, std::vector<Real> endpoints, Poly<Real> mpoly,
                  SolveReport rep)
        : potential_(std::move(pot)),
          filling_(std::move(fill)),
          mu_(std::move(endpoints)),
          m_(std::move(mpoly)),
          report_(std::move(rep))
    {
        if (mu_.size() % 2 != 0 || mu_.empty())
            throw std::invalid_argument("SpectralCurve: endpoint count must be even");
        for (std::size_t i = 0; i + 1 < mu_.size(); ++i)
            if (!(mu_[i] < mu_[i + 1]))
                throw std::invalid_argument("SpectralCurve: endpoints must be sorted and distinct");
    }

    const Potential& potential() const { return potential_; }
    const FillingData& filling() const { return filling_; }
    const std::vector<Real>& endpoints() const { return mu_; }
    const Poly<Real>& moment_poly() const { return m_; }
    const SolveReport& report() const { return report_; }
    int n_cuts() const { return int(mu_.size()) / 2; }
    int genus() const { return n_cuts() - 1; }
    Real t0() const { return filling_.t0; }

    Poly<Real> sigma() const
    {
        Poly<Real> s = Poly<Real>::from_int(1);
        for (auto& m : mu_) s = s * Poly<Real>({-m, Real(1)});
        return s;
    }

    Complex ytilde(const Complex& p, Sheet sheet = Sheet::physical) const
    {
        Complex v = ytilde_eval(mu_, p);
        return sheet == Sheet::physical ? v : -v;
    }

    /// y(p) = M(p) ytilde(p) with the sheet sign.
    Complex y_eval(const PointOnCurve& pt) const
    {
        return m_.eval(pt.p) * ytilde(pt.p, pt.sheet);
    }

    /// Planar one-point resolvent V'(p)/2 - y(p) on the physical sheet.
    Complex planar_resolvent(const Complex& p) const
    {
        auto vp = potential_.dpoly<Real>();
        return Complex(vp.eval(p)) / 2 - y_eval({p, Sheet::physical});
    }

    /// Roots of the moment polynomial with multiplicities.
    std::vector<RootWithMultiplicity> double_points(double tolerance = 1e-30) const
    {
        if (m_.degree() <= 0) return {};
        auto mc = m_.map<Complex>([](const Real& x) { return Complex(x); });
        return poly_roots(mc, tolerance);
    }

    // One-cut uniformization p = a + c (z + 1/z), physical sheet |z| > 1.
    Real zhukovsky_center() const { return (mu_.front() + mu_.back()) / 2; }
    Real zhukovsky_scale() const { return (mu_.back() - mu_.front()) / 4; }

    Complex zhukovsky_to_p(const Complex& z) const
    {
        require_one_cut();
        return Complex(zhukovsky_center()) + Complex(zhukovsky_scale()) * (z + Complex(1) / z);
    }
    Complex zhukovsky_from_p(const Complex& p) const
    {
        require_one_cut();
        Complex w = (p - Complex(zhukovsky_center())) / Complex(zhukovsky_scale());
        Complex r = sqrt(w * w - Complex(4));
        Complex z1 = (w + r) / 2, z2 = (w - r) / 2;
        Complex z = abs(z1) >= abs(z2) ? z1 : z2;
        if (abs(abs(z) - Real(1)) < Real(1e-30))
            throw std::invalid_argument("zhukovsky_from_p: point lies on the cut (two preimages)");
        return z;
    }

private:
    void require_one_cut() const
    {
        if (n_cuts() != 1) throw std::logic_error("zhukovsky map requires a one-cut curve");
    }
    Potential potential_;
    FillingData filling_;
    std::vector<Real> mu_;
    Poly<Real> m_;
    SolveReport report_;
};

namespace detail {

/// Weighted integral over cut i: \int f(x) sqrt((x-a)(b-x)) dx by the
/// trigonometric substitution (spectrally accurate for smooth f).
inline Real cut_weighted_integral(const Real& a, const Real& b, const std::function<Real(const Real&)>& f,
                                  std::size_t order = 96)
{
    const auto& [gx, gw] = gauss_legendre(order);
    Real mid = (a + b) / 2, half = (b - a) / 2;
    Real acc(0);
    for (std::size_t k = 0; k < order; ++k) {
        Real th = pi_real() * (gx[k] + 1) / 2;
        Real x = mid + half * cos(th);
        acc += gw[k] * f(x) * sin(th) * sin(th);
    }
    return acc * half * half * pi_real() / 2;
}

/// Per-cut mass of the measure y dx/(2 pi i) around cut i (the filling
/// fraction the curve actually carries).
inline std::vector<Real> filling_fraction_values(const std::vector<Real>& mu, const Poly<Real>& mpoly,
                                                 bool include_last = false)
{
    const int n = int(mu.size()) / 2;
    std::vector<Real> out;
    const int last = include_last ? n : n - 1;
    for (int i = 1; i <= last; ++i) {
        Real a = mu[std::size_t(2 * i - 2)], b = mu[std::size_t(2 * i - 1)];
        auto rest = [&](const Real& x) {
            Real r(1);
            for (int j = 0; j < 2 * n; ++j) {
                if (j == 2 * i - 2 || j == 2 * i - 1) continue;
                r *= abs(x - mu[std::size_t(j)]);
            }
            return mpoly.eval(x) * sqrt(r);
        };
        Real val = cut_weighted_integral(a, b, rest);
        out.push_back(Real(gap_sign(i, n)) * val / pi_real());
    }
    return out;
}

} // namespace detail

struct EndpointSolveOptions {
    std::optional<std::vector<Real>> initial_guess;
    bool symmetric_ansatz = false; // mirror the guess for even potentials
    int max_iterations = 120;
    Real tolerance = Real(1e-40);
    Real separation_floor_factor = Real(1e-8);
    bool allow_degenerate = false; // lifts the separation guard (trend studies)
};

namespace detail {

/// Full residual vector at a candidate endpoint set: n+1 asymptotic
/// conditions followed by the n-1 filling-fraction conditions.
inline std::vector<Real> curve_residuals(const Potential& pot, const FillingData& fill,
                                         const std::vector<Real>& mu)
{
    const int n = int(mu.size()) / 2;
    Poly<Real> sig = Poly<Real>::from_int(1);
    for (auto& m : mu) sig = sig * Poly<Real>({-m, Real(1)});
    auto vp = pot.dpoly<Real>();
    auto res = endpoint_condition_residuals<Real>(vp, sig, fill.t0);
    if (n > 1) {
        auto mpoly = moment_polynomial_from<Real>(vp, sig);
        auto s = filling_fraction_values(mu, mpoly);
        for (int i = 0; i < n - 1; ++i) res.push_back(fill.fractions[std::size_t(i)] - s[std::size_t(i)]);
    }
    return res;
}

inline Real norm_inf(const std::vector<Real>& v)
{
    Real m(0);
    for (auto& x : v) m = std::max(m, abs(x));
    return m;
}

inline std::vector<Real> default_one_cut_guess(const Potential& pot, const Real& t0)
{
    // crude width from the quadratic part; Newton does the rest
    auto vp = pot.dpoly<Real>();
    auto vpp = vp.derivative();
    Real x0(0);
    // a few Newton steps toward a critical point of V
    for (int it = 0; it < 40; ++it) {
        Real d = vpp.eval(x0);
        if (abs(d) < Real(1e-30)) break;
        Real step = vp.eval(x0) / d;
        x0 -= step;
        if (abs(step) < Real(1e-30)) break;
    }
    Real curv = vpp.eval(x0);
    if (!(curv > 0)) curv = 1;
    Real w = 2 * sqrt(2 * t0 / curv);
    return {x0 - w, x0 + w};
}

} // namespace detail

/// Solve the 2n endpoint conditions (n+1 asymptotic conditions plus n-1
/// filling fractions) by damped Newton with a finite-difference Jacobian.
/// Multi-cut runs require an initial guess or the symmetric ansatz.
inline SpectralCurve solve_endpoints(const Potential& pot, const FillingData& fill, int n_cuts,
                                     EndpointSolveOptions opt = {})
{
    if (n_cuts < 1) throw std::invalid_argument("solve_endpoints: n_cuts must be >= 1");
    const int m = pot.degree() - 1;
    if (m < n_cuts) throw std::invalid_argument("solve_endpoints: potential degree too low for n_cuts");
    if (int(fill.fractions.size()) != n_cuts - 1)
        throw std::invalid_argument("solve_endpoints: need n_cuts-1 filling fractions");

    std::vector<Real> mu;
    if (opt.initial_guess) {
        mu = *opt.initial_guess;
        if (int(mu.size()) != 2 * n_cuts)
            throw std::invalid_argument("solve_endpoints: guess must list 2 n_cuts endpoints");
    } else if (n_cuts == 1) {
        mu = detail::default_one_cut_guess(pot, fill.t0);
    } else {
        throw std::invalid_argument(
            "solve_endpoints: multi-cut runs need an initial guess (or a symmetric-ansatz guess)");
    }

    auto residual = [&](const std::vector<Real>& x) { return detail::curve_residuals(pot, fill, x); };

    std::vector<Real> r = residual(mu);
    Real rn = detail::norm_inf(r);
    int iters = 0;
    const std::size_t dim = mu.size();
    for (; iters < opt.max_iterations && rn > opt.tolerance; ++iters) {
        // finite-difference Jacobian (central)
        Matrix<Real> J(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            Real scale = std::max(Real(1), abs(mu[j]));
            Real h = Real(1e-24) * scale;
            auto xp = mu, xm = mu;
            xp[j] += h;
            xm[j] -= h;
            auto rp = residual(xp), rmv = residual(xm);
            for (std::size_t i = 0; i < dim; ++i) J(i, j) = (rp[i] - rmv[i]) / (2 * h);
        }
        std::vector<Real> rhs(dim);
        for (std::size_t i = 0; i < dim; ++i) rhs[i] = -r[i];
        std::vector<Real> step;
        try {
            step = lu_solve(J, rhs);
        } catch (const std::exception&) {
            throw SolverError("solve_endpoints: singular Jacobian", mu, r);
        }
        // damped update with step halving
        Real lambda(1);
        bool accepted = false;
        for (int h = 0; h < 30; ++h) {
            auto trial = mu;
            for (std::size_t i = 0; i < dim; ++i) trial[i] += lambda * step[i];
            std::sort(trial.begin(), trial.end());
            auto rt = residual(trial);
            Real rtn = detail::norm_inf(rt);
            if (rtn < rn) {
                mu = trial;
                r = rt;
                rn = rtn;
                accepted = true;
                break;
            }
            lambda /= 2;
        }
        if (!accepted) {
            if (rn < Real(1e-30)) break; // at the finite-difference floor
            throw SolverError("solve_endpoints: Newton stalled (no descent)", mu, r);
        }
        if (opt.symmetric_ansatz) {
            // re-symmetrize to suppress drift for even potentials
            for (std::size_t i = 0; i < dim / 2; ++i) {
                Real s = (mu[dim - 1 - i] - mu[i]) / 2;
                mu[dim - 1 - i] = s;
                mu[i] = -s;
            }
            r = residual(mu);
            rn = detail::norm_inf(r);
        }
    }
    if (rn > opt.tolerance * Real(1e10) && rn > Real(1e-25))
        throw SolverError("solve_endpoints: Newton did not converge", mu, r);

    // degenerate-cut guard
    Real span = mu.back() - mu.front();
    for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
        if (!opt.allow_degenerate && mu[i + 1] - mu[i] < opt.separation_floor_factor * span)
            throw SolverError("solve_endpoints: degenerate cut (endpoints collided); reduce n_cuts", mu, r);
    }

    Poly<Real> sig = Poly<Real>::from_int(1);
    for (auto& mm : mu) sig = sig * Poly<Real>({-mm, Real(1)});
    auto vp = pot.dpoly<Real>();
    auto mpoly = moment_polynomial_from<Real>(vp, sig);

    SolveReport rep;
    rep.newton_iterations = iters;
    rep.endpoint_residuals = endpoint_condition_residuals<Real>(vp, sig, fill.t0);
    if (n_cuts > 1) {
        auto s = detail::filling_fraction_values(mu, mpoly);
        for (int i = 0; i < n_cuts - 1; ++i)
            rep.filling_residuals.push_back(fill.fractions[std::size_t(i)] - s[std::size_t(i)]);
    }
    return SpectralCurve(pot, fill, std::move(mu), std::move(mpoly), std::move(rep));
}

} // namespace betaloop

#endif

