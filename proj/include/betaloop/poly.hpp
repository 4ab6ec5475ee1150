#ifndef BETALOOP_POLY_HPP
#define BETALOOP_POLY_HPP

#include "scalar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace betaloop {

/// Dense univariate polynomial over a field F, coefficients in ascending order.
/// The zero polynomial is the empty coefficient vector (degree -1 by convention).
template <class F>
class Poly {
public:
    using Ops = FieldOps<F>;

    Poly() = default;
    explicit Poly(std::vector<F> c) : c_(std::move(c)) { trim(); }
    Poly(std::initializer_list<F> c) : c_(c) { trim(); }
    static Poly constant(F v)
    {
        Poly p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }
    static Poly identity() // the variable x itself
    {
        Poly p;
        p.c_ = {Ops::zero(), Ops::one()};
        return p;
    }
    static Poly from_int(long n) { return constant(Ops::from_int(n)); }

    const std::vector<F>& coeffs() const { return c_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const F& operator[](std::size_t i) const { return c_[i]; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Ops::zero(); }
    const F& leading() const
    {
        if (c_.empty()) throw std::logic_error("Poly::leading on zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), Ops::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b)
    {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), Ops::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const
    {
        std::vector<F> r = c_;
        for (auto& x : r) x = Ops::zero() - x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, Ops::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& a)
    {
        std::vector<F> r = a.c_;
        for (auto& x : r) x = s * x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const F& s) { return s * a; }
    Poly divided_by(const F& s) const
    {
        std::vector<F> r = c_;
        for (auto& x : r) x = x / s;
        return Poly(std::move(r));
    }

    /// Euclidean division: returns (quotient, remainder) with deg rem < deg d.
    friend std::pair<Poly, Poly> divrem(const Poly& n, const Poly& d)
    {
        if (d.is_zero()) throw std::invalid_argument("Poly divrem: division by zero polynomial");
        Poly q;
        std::vector<F> r = n.c_;
        const int dd = d.degree();
        std::vector<F> qc(n.degree() >= dd ? n.degree() - dd + 1 : 0, Ops::zero());
        for (int i = int(r.size()) - 1; i >= dd; --i) {
            if (Ops::is_zero(r[i])) continue;
            F f = r[i] / d.c_.back();
            qc[i - dd] = f;
            for (int j = 0; j <= dd; ++j) r[i - dd + j] = r[i - dd + j] - f * d.c_[j];
            r[i] = Ops::zero();
        }
        return {Poly(std::move(qc)), Poly(std::move(r))};
    }

    Poly derivative() const
    {
        if (c_.size() <= 1) return Poly();
        std::vector<F> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Ops::from_int(long(i)) * c_[i];
        return Poly(std::move(r));
    }

    template <class X>
    X eval(const X& x) const
    {
        X acc = X(0);
        for (int i = int(c_.size()) - 1; i >= 0; --i) acc = acc * x + convert_scalar<X>(c_[std::size_t(i)]);
        return acc;
    }
    F eval_f(const F& x) const
    {
        F acc = Ops::zero();
        for (int i = int(c_.size()) - 1; i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    /// Coefficients of p(x+a) (Taylor shift by synthetic division), O(d^2).
    Poly shifted(const F& a) const
    {
        std::vector<F> r = c_;
        const int n = int(r.size());
        for (int i = 0; i < n; ++i)
            for (int j = n - 2; j >= i; --j) r[j] = r[j] + a * r[j + 1];
        return Poly(std::move(r));
    }

    /// First `count` Taylor coefficients of p(x+a) only: repeated synthetic
    /// division, O(count * d) — much cheaper than a full shift when only the
    /// low-order part is needed (residue extraction in the towers).
    std::vector<F> taylor_prefix(const F& a, std::size_t count) const
    {
        std::vector<F> r = c_;
        std::vector<F> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            if (r.empty()) {
                out.push_back(Ops::zero());
                continue;
            }
            // divide r by (x - a): remainder -> coefficient, quotient -> r
            F rem = r.back();
            std::vector<F> q(r.size() > 1 ? r.size() - 1 : 0, Ops::zero());
            for (std::size_t j = r.size() - 1; j-- > 0;) {
                q[j] = rem;
                rem = r[j] + a * rem;
            }
            out.push_back(rem);
            r = std::move(q);
        }
        return out;
    }

    /// x -> reversed coefficients: x^deg * p(1/x).
    Poly reversed() const
    {
        std::vector<F> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    template <class G, class Fn>
    Poly<G> map(Fn&& fn) const
    {
        std::vector<G> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(fn(x));
        return Poly<G>(std::move(r));
    }

    /// Composition p(q(x)) by Horner.
    Poly compose(const Poly& q) const
    {
        Poly acc;
        for (int i = int(c_.size()) - 1; i >= 0; --i) acc = acc * q + constant(c_[i]);
        return acc;
    }

    double max_mag() const
    {
        double m = 0;
        for (const auto& x : c_) m = std::max(m, Ops::mag(x));
        return m;
    }

    /// Drop trailing coefficients of relative magnitude below tol (float modes).
    void trim_tol(double tol)
    {
        double m = max_mag();
        while (!c_.empty() && Ops::mag(c_.back()) <= tol * m) c_.pop_back();
    }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!Ops::is_zero(a.c_[i] - b.c_[i])) return false;
        return true;
    }

private:
    void trim()
    {
        while (!c_.empty() && Ops::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

/// Monic gcd by the Euclidean algorithm; valid over exact fields.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b)
{
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.divided_by(a.leading());
    return a;
}

namespace detail {

/// Integer-primitive representation of a rational-coefficient polynomial.
inline std::vector<BigInt> primitive_int_coeffs(const Poly<BigRat>& p)
{
    BigInt l(1);
    for (const auto& c : p.coeffs()) l = lcm(l, BigInt(denominator(c)));
    std::vector<BigInt> z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(BigInt(numerator(c)) * (l / BigInt(denominator(c))));
    BigInt g(0);
    for (const auto& c : z) g = gcd(g, c);
    if (g != 0)
        for (auto& c : z) c /= g;
    return z;
}

inline void make_primitive(std::vector<BigInt>& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
    BigInt g(0);
    for (const auto& c : a) g = gcd(g, c);
    if (g > 1)
        for (auto& c : a) c /= g;
}

/// Pseudo-remainder of integer polynomials: lc(b)^(da-db+1) a mod b.
inline std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b)
{
    const int db = int(b.size()) - 1;
    while (int(a.size()) - 1 >= db) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        const int da = int(a.size()) - 1;
        BigInt lb = b.back(), la = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[std::size_t(da - db + j)] -= la * b[std::size_t(j)];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

} // namespace detail

/// Primitive-PRS gcd over the rationals: avoids the coefficient explosion of
/// fraction-field Euclid, which matters inside the spectator towers.
inline Poly<BigRat> poly_gcd(const Poly<BigRat>& pa, const Poly<BigRat>& pb)
{
    if (pa.is_zero() || pb.is_zero()) {
        Poly<BigRat> r = pa.is_zero() ? pb : pa;
        if (!r.is_zero()) r = r.divided_by(r.leading());
        return r;
    }
    auto a = detail::primitive_int_coeffs(pa);
    auto b = detail::primitive_int_coeffs(pb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = detail::pseudo_rem(a, b);
        detail::make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<BigRat> rc;
    rc.reserve(a.size());
    for (auto& c : a) rc.emplace_back(c);
    Poly<BigRat> g(std::move(rc));
    return g.divided_by(g.leading());
}

/// Truncated Taylor coefficients of n/d around 0, requiring d(0) != 0.
template <class F>
std::vector<F> series_divide(const std::vector<F>& n, const std::vector<F>& d, std::size_t count)
{
    if (d.empty() || FieldOps<F>::is_zero(d[0]))
        throw std::invalid_argument("series_divide: denominator vanishes at the expansion point");
    std::vector<F> out(count, FieldOps<F>::zero());
    for (std::size_t k = 0; k < count; ++k) {
        F acc = k < n.size() ? n[k] : FieldOps<F>::zero();
        for (std::size_t j = 1; j <= k && j < d.size(); ++j) acc = acc - d[j] * out[k - j];
        out[k] = acc / d[0];
    }
    return out;
}

} // namespace betaloop

#endif
