#ifndef BETALOOP_LAURENT_HPP
#define BETALOOP_LAURENT_HPP

#include "ratfun.hpp"

#include <map>
#include <variant>

namespace betaloop {

/// Truncated Laurent expansion of a function around a finite point or around
/// infinity. Around infinity the stored exponents are powers of 1/x, capped
/// by truncation_order; around a finite center they are powers of (x-a)
/// starting at the valuation.
template <class F>
class LaurentSeries {
public:
    struct AtInfinity {};
    using Center = std::variant<F, AtInfinity>;
    using Ops = FieldOps<F>;

    LaurentSeries(Center center, int truncation_order)
        : center_(std::move(center)), trunc_(truncation_order)
    {
    }

    static LaurentSeries at_infinity(int truncation_order)
    {
        return LaurentSeries(Center(AtInfinity{}), truncation_order);
    }
    static LaurentSeries at_point(F a, int truncation_order)
    {
        return LaurentSeries(Center(std::move(a)), truncation_order);
    }

    bool centered_at_infinity() const { return std::holds_alternative<AtInfinity>(center_); }
    const F& center_point() const { return std::get<F>(center_); }
    int truncation_order() const { return trunc_; }
    const std::map<int, F>& terms() const { return t_; }

    /// For expansions at infinity, exponent k stores the coefficient of x^{-k};
    /// at a finite center, the coefficient of (x-a)^{k}.
    void set(int k, F v)
    {
        if (in_window(k) && !Ops::is_zero(v)) t_[k] = std::move(v);
    }
    F coeff(int k) const
    {
        auto it = t_.find(k);
        return it == t_.end() ? Ops::zero() : it->second;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b)
    {
        LaurentSeries r(a.center_, std::min(a.trunc_, b.trunc_));
        for (auto& [k, v] : a.t_) r.set(k, v);
        for (auto& [k, v] : b.t_) r.set(k, r.coeff(k) + v);
        return r;
    }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
    {
        // Truncation respects order shifts: with lowest orders va, vb the
        // product window ends at min(a.trunc + vb, b.trunc + va).
        int va = a.lowest(), vb = b.lowest();
        LaurentSeries r(a.center_, std::min(a.trunc_ + vb, b.trunc_ + va));
        for (auto& [i, x] : a.t_)
            for (auto& [j, y] : b.t_) {
                if (!r.in_window(i + j)) continue;
                r.set(i + j, r.coeff(i + j) + x * y);
            }
        return r;
    }
    friend LaurentSeries operator*(const F& s, const LaurentSeries& a)
    {
        LaurentSeries r(a.center_, a.trunc_);
        for (auto& [k, v] : a.t_) r.set(k, s * v);
        return r;
    }

    int lowest() const { return t_.empty() ? trunc_ : t_.begin()->first; }

    /// Sum the truncated series at a sample point.
    template <class X>
    X eval(const X& x) const
    {
        X acc(0);
        for (auto& [k, v] : t_) {
            X base = centered_at_infinity() ? X(1) / pow_i(x, k)
                                            : pow_i(x - convert_scalar<X>(center_point()), k);
            acc += convert_scalar<X>(v) * base;
        }
        return acc;
    }

private:
    template <class X>
    static X pow_i(const X& x, int k)
    {
        X r(1);
        X b = k >= 0 ? x : X(1) / x;
        for (int i = 0; i < std::abs(k); ++i) r *= b;
        return r;
    }
    bool in_window(int k) const { return k <= trunc_; }

    Center center_;
    int trunc_;
    std::map<int, F> t_;
};

/// Expansion of a rational function: at infinity in powers of 1/x, or at a
/// finite point in powers of (x - a). `order` bounds the highest stored
/// exponent; a hard internal cap guards runaway requests.
template <class F>
LaurentSeries<F> series_at_infinity(const RatFun<F>& f, int order)
{
    constexpr int kCap = 4096;
    if (order > kCap) throw std::invalid_argument("series_at_infinity: order beyond internal cap");
    auto ls = LaurentSeries<F>::at_infinity(order);
    if (f.is_zero()) return ls;
    auto [v, c] = f.expand_at_infinity(std::size_t(std::max(0, order - 0)) + 32);
    for (std::size_t k = 0; k < c.size(); ++k) {
        int e = v + int(k);
        if (e > order) break;
        ls.set(e, c[k]);
    }
    return ls;
}

template <class F>
LaurentSeries<F> series_at_point(const RatFun<F>& f, const F& a, int order)
{
    constexpr int kCap = 4096;
    if (order > kCap) throw std::invalid_argument("series_at_point: order beyond internal cap");
    auto ls = LaurentSeries<F>::at_point(a, order);
    if (f.is_zero()) return ls;
    auto [v0, c0] = f.laurent_at(a, 1);
    (void)c0;
    int count = order - v0 + 1;
    if (count <= 0) return ls;
    auto [v, c] = f.laurent_at(a, std::size_t(count));
    for (std::size_t k = 0; k < c.size(); ++k) {
        int e = v + int(k);
        if (e > order) break;
        ls.set(e, c[k]);
    }
    return ls;
}

} // namespace betaloop

#endif
