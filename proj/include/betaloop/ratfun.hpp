#ifndef BETALOOP_RATFUN_HPP
#define BETALOOP_RATFUN_HPP

#include "poly.hpp"

#include <map>
#include <optional>
#include <type_traits>
#include <vector>

namespace betaloop {

template <class T>
struct is_ratfun;

/// Rational function num/den over a field F. With scalar coefficients the
/// representation is kept monic and (in exact mode) fully reduced; in a tower
/// (F itself a rational-function field) the raw fraction is kept and
/// cancellation is deferred to the principal-part rebuilds, which avoids the
/// classic coefficient blowup of Euclidean gcds over fraction fields.
template <class F>
class RatFun {
public:
    using P = Poly<F>;
    using Ops = FieldOps<F>;

    RatFun() : num_(), den_(P::from_int(1)) {}
    RatFun(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    /* implicit */ RatFun(P num) : num_(std::move(num)), den_(P::from_int(1)) { normalize(); }
    static RatFun constant(const F& v) { return RatFun(P::constant(v)); }
    static RatFun from_int(long n) { return RatFun(P::from_int(n)); }
    static RatFun variable() { return RatFun(P::identity()); }

    const P& num() const { return num_; }
    const P& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFun operator+(const RatFun& a, const RatFun& b)
    {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b)
    {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun operator-() const { return RatFun(-num_, den_); }
    friend RatFun operator*(const RatFun& a, const RatFun& b)
    {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b)
    {
        if (b.is_zero()) throw std::invalid_argument("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFun operator*(const F& s, const RatFun& a) { return RatFun(s * a.num_, a.den_); }
    friend RatFun operator*(const RatFun& a, const F& s) { return RatFun(s * a.num_, a.den_); }

    RatFun derivative() const
    {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    template <class X>
    X eval(const X& x) const
    {
        return num_.template eval<X>(x) / den_.template eval<X>(x);
    }
    F eval_f(const F& x) const { return num_.eval_f(x) / den_.eval_f(x); }

    /// Substitute another rational function for the variable.
    RatFun compose(const RatFun& g) const
    {
        const int dn = num_.degree(), dd = den_.degree();
        P gn = g.num_, gd = g.den_;
        // Horner in g with running powers of g.den to stay polynomial.
        P np, dp;
        for (int i = dn; i >= 0; --i) np = np * gn + P::constant(num_.coeff(std::size_t(i))) * power(gd, dn - i);
        for (int i = dd; i >= 0; --i) dp = dp * gn + P::constant(den_.coeff(std::size_t(i))) * power(gd, dd - i);
        if (dn < dd) np = np * power(gd, dd - dn);
        if (dd < dn) dp = dp * power(gd, dn - dd);
        return RatFun(std::move(np), std::move(dp));
    }

    /// f(1/x) as a rational function (the hyperelliptic sheet swap in the
    /// Zhukovsky coordinate).
    RatFun swap_sheet() const
    {
        const int dn = num_.degree(), dd = den_.degree(), d = std::max(dn, dd);
        if (is_zero()) return RatFun();
        std::vector<F> np(std::size_t(d) + 1, Ops::zero()), dp(std::size_t(d) + 1, Ops::zero());
        for (int i = 0; i <= dn; ++i) np[std::size_t(d - i)] = num_.coeff(std::size_t(i));
        for (int i = 0; i <= dd; ++i) dp[std::size_t(d - i)] = den_.coeff(std::size_t(i));
        return RatFun(P(std::move(np)), P(std::move(dp)));
    }

    double max_mag() const { return std::max(num_.max_mag(), den_.max_mag()); }

    /// Laurent expansion around x = a: returns valuation v and coefficients
    /// c[k] of (x-a)^{v+k}, k = 0..count-1. For inexact fields small leading
    /// series terms are treated as zero relative to `tol`. Uses truncated
    /// Taylor prefixes, growing the window until the denominator valuation
    /// is resolved.
    std::pair<int, std::vector<F>> laurent_at(const F& a, std::size_t count, double tol = 1e-32) const
    {
        if (is_zero()) return {0, std::vector<F>(count, Ops::zero())};
        auto leading_zeros = [&](const std::vector<F>& c, double scale) {
            std::size_t v = 0;
            if constexpr (Ops::exact) {
                while (v < c.size() && Ops::is_zero(c[v])) ++v;
            } else {
                while (v < c.size() && Ops::mag(c[v]) <= tol * scale) ++v;
            }
            return v;
        };
        const double dscale = Ops::exact ? 0.0 : den_.max_mag();
        std::size_t window = std::min<std::size_t>(6, std::size_t(den_.degree()) + 1);
        std::size_t vd;
        std::vector<F> cd;
        for (;;) {
            cd = den_.taylor_prefix(a, window);
            vd = leading_zeros(cd, dscale);
            if (vd < window || window > std::size_t(den_.degree())) break;
            window *= 2;
        }
        if (vd >= cd.size()) throw std::logic_error("RatFun::laurent_at: zero denominator at point");
        if (cd.size() < vd + count) cd = den_.taylor_prefix(a, vd + count);
        cd.erase(cd.begin(), cd.begin() + long(vd));
        const double nscale = Ops::exact ? 0.0 : num_.max_mag();
        std::size_t nwin = vd + count;
        std::vector<F> cn = num_.taylor_prefix(a, nwin);
        std::size_t vn = leading_zeros(cn, nscale);
        if (vn >= nwin) {
            // numerator vanishes through the whole window
            return {int(count), std::vector<F>(count, Ops::zero())};
        }
        if (vn + count > cn.size()) cn = num_.taylor_prefix(a, vn + count);
        cn.erase(cn.begin(), cn.begin() + long(vn));
        std::vector<F> q = series_divide(cn, cd, count);
        return {int(vn) - int(vd), std::move(q)};
    }

    /// Coefficient of (x-a)^{-1}.
    F residue_at(const F& a) const
    {
        auto [v0, c0] = laurent_at(a, 1);
        (void)c0;
        if (v0 >= 0) return Ops::zero();
        auto [v, c] = laurent_at(a, std::size_t(-v0));
        int idx = -1 - v;
        if (idx < 0 || idx >= int(c.size()))
            throw std::logic_error("RatFun::residue_at: expansion too short");
        return c[std::size_t(idx)];
    }

    /// Expansion at infinity: coefficients of x^{-v}, x^{-v-1}, ... where
    /// v = -(degree of growth); f ~ c0 x^{-v} + ...
    std::pair<int, std::vector<F>> expand_at_infinity(std::size_t count, double tol = 1e-32) const
    {
        if (is_zero()) return {0, std::vector<F>(count, Ops::zero())};
        RatFun g(num_.reversed(), den_.reversed());
        auto [v, c] = g.laurent_at(Ops::zero(), count, tol);
        return {den_.degree() - num_.degree() + v, std::move(c)};
    }

    /// Residue at infinity with the convention res_inf dx/x = -1:
    /// the negative of the 1/x coefficient.
    F residue_at_infinity(double tol = 1e-32) const
    {
        auto [v0, c0] = expand_at_infinity(1, tol);
        (void)c0;
        if (v0 > 1) return Ops::zero();
        auto [v, c] = expand_at_infinity(std::size_t(2 - v0), tol);
        int idx = 1 - v;
        if (idx < 0 || idx >= int(c.size()))
            throw std::logic_error("RatFun::residue_at_infinity: expansion window too short");
        return Ops::zero() - c[std::size_t(idx)];
    }

    static P power(P b, int e)
    {
        P r = P::from_int(1);
        for (int i = 0; i < e; ++i) r = r * b;
        return r;
    }

    friend bool operator==(const RatFun& a, const RatFun& b)
    {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }

private:
    void normalize()
    {
        if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = P::from_int(1);
            return;
        }
        if constexpr (!is_ratfun<F>::value) {
            if constexpr (Ops::exact) {
                P g = poly_gcd(num_, den_);
                if (g.degree() > 0) {
                    num_ = divrem(num_, g).first;
                    den_ = divrem(den_, g).first;
                }
            }
            F lead = den_.leading();
            if (!Ops::is_zero(lead - Ops::one())) {
                num_ = num_.divided_by(lead);
                den_ = den_.divided_by(lead);
            }
        }
    }

    P num_, den_;
};

/// The field of rational functions is itself a field: this makes towers such
/// as RatFun<RatFun<S>> available for carrying spectator variables exactly.
template <class F>
struct FieldOps<RatFun<F>> {
    static constexpr bool exact = FieldOps<F>::exact;
    static RatFun<F> zero() { return RatFun<F>(); }
    static RatFun<F> one() { return RatFun<F>::from_int(1); }
    static RatFun<F> from_int(long n) { return RatFun<F>::from_int(n); }
    static RatFun<F> from_rat(const BigRat& q)
    {
        return RatFun<F>::constant(FieldOps<F>::from_rat(q));
    }
    static bool is_zero(const RatFun<F>& f) { return f.is_zero(); }
    static double mag(const RatFun<F>& f)
    {
        if (f.is_zero()) return 0.0;
        double dn = f.den().max_mag();
        return dn > 0 ? f.num().max_mag() / dn : f.num().max_mag();
    }
};

template <class T>
struct is_ratfun : std::false_type {};
template <class F>
struct is_ratfun<RatFun<F>> : std::true_type {};

/// Lift a scalar/field element into a deeper tower as a constant.
template <class Target, class Source>
Target lift_const(const Source& s)
{
    if constexpr (std::is_same_v<Target, Source>) {
        return s;
    } else {
        static_assert(is_ratfun<Target>::value, "lift_const: target must be a RatFun tower");
        using Coeff = std::decay_t<decltype(Target().num().coeff(0))>;
        return Target::constant(lift_const<Coeff>(s));
    }
}

/// Lift a rational function to one whose coefficients live in a deeper field:
/// RatFun<A> -> RatFun<B> where each A-coefficient embeds into B.
template <class B, class A>
RatFun<B> lift_coeffs(const RatFun<A>& f)
{
    auto up = [](const A& a) { return lift_const<B>(a); };
    return RatFun<B>(f.num().template map<B>(up), f.den().template map<B>(up));
}

/// Derivative with respect to the variable at nesting depth D
/// (D = 0: the outer variable; D >= 1: a coefficient-field variable).
/// Scalars at the bottom of the tower differentiate to zero.
template <int D>
BigRat deriv_depth(const BigRat&)
{
    return BigRat(0);
}
template <int D>
Complex deriv_depth(const Complex&)
{
    return Complex(0);
}
template <int D, class F>
RatFun<F> deriv_depth(const RatFun<F>& f)
{
    if constexpr (D == 0) {
        return f.derivative();
    } else {
        auto dn = f.num().template map<F>([](const F& c) { return deriv_depth<D - 1>(c); });
        auto dd = f.den().template map<F>([](const F& c) { return deriv_depth<D - 1>(c); });
        return RatFun<F>(dn * f.den() - f.num() * dd, f.den() * f.den());
    }
}

/// Evaluate the outer variable at a point of the coefficient field.
template <class F>
F eval_outer(const RatFun<F>& f, const F& a)
{
    return f.num().eval_f(a) / f.den().eval_f(a);
}

/// Principal-part decomposition over a known pole list. Returns the function
/// rebuilt as polynomial part plus principal parts; spurious (numerically
/// tiny, or exactly cancelled) factors disappear. Throws if the denominator
/// carries a root outside the given list.
template <class F>
RatFun<F> pf_normalize(const RatFun<F>& f, const std::vector<F>& poles, double tol = 1e-30)
{
    using P = Poly<F>;
    using Ops = FieldOps<F>;
    if (f.is_zero()) return f;
    auto [q, r] = divrem(f.num(), f.den());
    RatFun<F> rest(r, f.den());
    RatFun<F> out(q);
    int orders_total = 0;
    for (const auto& a : poles) {
        // order of the pole = valuation of den at a minus valuation of num.
        auto [v, c] = rest.laurent_at(a, 1, tol);
        if (v >= 0) continue;
        std::size_t m = std::size_t(-v);
        auto [v2, cc] = rest.laurent_at(a, m, tol);
        // principal part sum_{k=1..m} cc[m-k] / (x-a)^k
        P xa({Ops::zero() - a, Ops::one()});
        P denp = P::from_int(1);
        for (std::size_t k = 0; k < m; ++k) denp = denp * xa;
        // numerator: sum cc[j] (x-a)^j, j = 0..m-1  (cc[j] multiplies (x-a)^{v+j})
        P nump;
        P pw = P::from_int(1);
        for (std::size_t j = 0; j < m; ++j) {
            nump = nump + P::constant(cc[j]) * pw;
            pw = pw * xa;
        }
        out = out + RatFun<F>(std::move(nump), std::move(denp));
        orders_total += int(m);
        (void)v2;
    }
    // Cross-check the rebuild: agreement at a few generic sample points.
    for (long s : {7L, -11L, 23L}) {
        F x = Ops::from_rat(BigRat(s, 5));
        if (Ops::is_zero(f.den().eval_f(x)) || Ops::is_zero(out.den().eval_f(x))) continue;
        F diff = f.eval_f(x) - out.eval_f(x);
        double scale = std::max(1.0, std::max(Ops::mag(f.eval_f(x)), Ops::mag(out.eval_f(x))));
        if (Ops::mag(diff) > 1e-20 * scale)
            throw std::logic_error("pf_normalize: pole list does not reproduce the function");
    }
    (void)orders_total;
    return out;
}

/// Numeric evaluation of a RatFun tower: points[0] feeds the outermost
/// variable, deeper levels follow.
inline Complex tower_value(const BigRat& s, const std::vector<Complex>&, std::size_t)
{
    return to_complex(s);
}
inline Complex tower_value(const Complex& s, const std::vector<Complex>&, std::size_t)
{
    return s;
}
template <class F>
Complex tower_value(const RatFun<F>& f, const std::vector<Complex>& pts, std::size_t level = 0)
{
    if (level >= pts.size()) throw std::invalid_argument("tower_value: not enough points");
    const Complex x = pts[level];
    Complex n(0), d(0);
    for (int i = f.num().degree(); i >= 0; --i)
        n = n * x + tower_value(f.num().coeff(std::size_t(i)), pts, level + 1);
    for (int i = f.den().degree(); i >= 0; --i)
        d = d * x + tower_value(f.den().coeff(std::size_t(i)), pts, level + 1);
    return n / d;
}

} // namespace betaloop

#endif
