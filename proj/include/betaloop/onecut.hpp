#ifndef BETALOOP_ONECUT_HPP
#define BETALOOP_ONECUT_HPP

#include "curve.hpp"
#include "ratfun.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace betaloop {

/// One-cut curve data in the canonical frame: the cut is [-2, 2], the
/// uniformizing variable obeys p = z + 1/z with |z| > 1 the physical sheet,
/// and ytilde(z) = z - 1/z. Produced from a solved curve by the affine change
/// x -> a + c x (a the cut midpoint, c the quarter-width); correlators
/// transform back with a factor 1/c per variable.
template <class S>
struct CanonicalOneCut {
    Poly<S> mhat;       // moment polynomial in the canonical frame
    Poly<S> vprime_hat; // derivative of the canonical-frame potential
    S t0;
    Real frame_center = Real(0); // a
    Real frame_scale = Real(1);  // c
    std::vector<S> dp_inside;    // double-point preimages with |zeta| < 1
    std::vector<S> dp_outside;   // their physical-sheet partners 1/zeta
};

/// Canonical data from a solved one-cut curve (floating path).
inline CanonicalOneCut<Complex> canonical_from_curve(const SpectralCurve& curve)
{
    if (curve.n_cuts() != 1) throw std::invalid_argument("canonical_from_curve: one-cut curves only");
    CanonicalOneCut<Complex> out;
    out.frame_center = curve.zhukovsky_center();
    out.frame_scale = curve.zhukovsky_scale();
    const Complex a(out.frame_center), c(out.frame_scale);
    auto vp = curve.potential().dpoly<Complex>();
    Poly<Complex> affine({a, c});
    out.vprime_hat = c * vp.compose(affine);
    auto mp = curve.moment_poly().map<Complex>([](const Real& x) { return Complex(x); });
    out.mhat = (c * c) * mp.compose(affine);
    out.t0 = Complex(curve.t0());
    if (out.mhat.degree() > 0) {
        // roots of Mhat(zeta + 1/zeta): numerator of the composition
        Poly<Complex> num;
        const int d = out.mhat.degree();
        Poly<Complex> z2p1({Complex(1), Complex(0), Complex(1)});
        Poly<Complex> zp({Complex(0), Complex(1)});
        for (int i = d; i >= 0; --i) {
            Poly<Complex> zpow = Poly<Complex>::from_int(1);
            for (int j = 0; j < d - i; ++j) zpow = zpow * zp;
            num = num * z2p1 + Poly<Complex>::constant(out.mhat.coeff(std::size_t(i))) * zpow;
        }
        for (auto& r : poly_roots(num, 1e-28)) {
            for (int rep = 0; rep < r.multiplicity; ++rep) {
                if (abs(r.value) < Real(1)) {
                    out.dp_inside.push_back(r.value);
                    out.dp_outside.push_back(Complex(1) / r.value);
                }
            }
        }
        if (out.dp_inside.size() != std::size_t(out.mhat.degree()))
            throw std::logic_error("canonical_from_curve: double-point preimage count mismatch");
    }
    return out;
}

/// Exact canonical data for the Gaussian family V = t2 x^2 (rational t2 > 0,
/// t0 > 0): the canonical frame removes the coupling entirely, leaving
/// Vhat' = t0 p and Mhat = t0/2.
inline CanonicalOneCut<BigRat> canonical_gaussian_exact(const BigRat& t0)
{
    CanonicalOneCut<BigRat> out;
    out.t0 = t0;
    out.vprime_hat = Poly<BigRat>({BigRat(0), t0});
    out.mhat = Poly<BigRat>::constant(t0 / 2);
    return out;
}

namespace detail {

template <class S>
std::vector<S> series_mul(const std::vector<S>& a, const std::vector<S>& b, std::size_t count)
{
    std::vector<S> r(count, FieldOps<S>::zero());
    for (std::size_t i = 0; i < a.size() && i < count; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < count; ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

template <class S>
std::vector<S> series_eval_poly(const Poly<S>& p, const std::vector<S>& x, std::size_t count)
{
    std::vector<S> acc(count, FieldOps<S>::zero());
    for (int i = p.degree(); i >= 0; --i) {
        acc = series_mul(acc, x, count);
        acc[0] = acc[0] + p.coeff(std::size_t(i));
    }
    return acc;
}

} // namespace detail

/// Expansion of a canonical-frame one-point object on the physical sheet:
/// coefficients of 1/p^j, j = 0..count-1. Uses the inverse Zhukovsky series
/// w = 1/z = u (1 + w^2), u = 1/p.
template <class S>
std::vector<S> base_series_physical(const RatFun<S>& f, std::size_t count)
{
    using Ops = FieldOps<S>;
    std::vector<S> w(count, Ops::zero());
    if (count > 1) w[1] = Ops::one();
    for (std::size_t it = 0; it + 1 < count / 2 + 2; ++it) {
        auto w2 = detail::series_mul(w, w, count);
        std::vector<S> next(count, Ops::zero());
        for (std::size_t j = 0; j + 1 < count; ++j) {
            S v = (j == 0 ? Ops::one() : Ops::zero()) + w2[j];
            next[j + 1] = v;
        }
        w = std::move(next);
    }
    RatFun<S> g = f.swap_sheet(); // f(z) = g(1/z) = g(w)
    auto ns = detail::series_eval_poly(g.num(), w, count);
    auto ds = detail::series_eval_poly(g.den(), w, count);
    return series_divide(ns, ds, count);
}

/// Correlator indices (k, l): W_{k,l} multiplies hbar^{2k+l} gamma^l.
struct KL {
    int k = 0, l = 0;
    friend bool operator<(const KL& a, const KL& b) { return a.k != b.k ? a.k < b.k : a.l < b.l; }
    friend bool operator==(const KL& a, const KL& b) { return a.k == b.k && a.l == b.l; }
    int level() const { return 2 * k + l; }
};

struct RecursionBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One-cut recursion engine. Multi-point resolvents are rational functions of
/// the Zhukovsky variables; spectators live in a tower of rational-function
/// fields, so the exact-rational mode stays exact through every operation.
template <class S>
class OneCutEngine {
public:
    using F1 = RatFun<S>;  // functions of one point
    using F2 = RatFun<F1>; // active point over one spectator
    using F3 = RatFun<F2>; // active point over two spectators

    explicit OneCutEngine(CanonicalOneCut<S> data, int max_level = 9)
        : d_(std::move(data)), max_level_(max_level)
    {
        F1 zeta = F1::variable();
        F1 inv_zeta(Poly<S>::from_int(1), Poly<S>::identity());
        F1 pz = zeta + inv_zeta;
        mhat_z_ = compose_poly(d_.mhat, pz);
        vph_z_ = compose_poly(d_.vprime_hat, pz);
        y_z_ = mhat_z_ * (zeta - inv_zeta);
        measure_ = F1(Poly<S>::from_int(1)) /
                   (FieldOps<S>::from_int(2) * F1(Poly<S>::identity()) * mhat_z_);
        pprime_ = F1(Poly<S>({FieldOps<S>::from_int(-1), FieldOps<S>::zero(), FieldOps<S>::one()}),
                     Poly<S>({FieldOps<S>::zero(), FieldOps<S>::zero(), FieldOps<S>::one()}));
    }

    const CanonicalOneCut<S>& data() const { return d_; }
    const F1& y_of_z() const { return y_z_; }
    const F1& vprime_of_z() const { return vph_z_; }
    const F1& mhat_of_z() const { return mhat_z_; }

    /// W_{0,0}(p) = Vhat'(p)/2 - y(p) in the canonical frame.
    const F1& w00_one()
    {
        if (!w00_1_) w00_1_ = vph_z_ * FieldOps<S>::from_rat(BigRat(1, 2)) - y_z_;
        return *w00_1_;
    }

    /// W_{0,0}(p, q) = -B(p, qbar)/(dp dq): the genus-0 closed form
    /// z^2 u^2 / ((z u - 1)^2 (z^2 - 1)(u^2 - 1)).
    const F2& w00_two()
    {
        if (!w00_2_) {
            F1 u = F1::variable();
            F1 one = F1::from_int(1);
            Poly<F1> num({F1(), F1(), u * u});
            Poly<F1> zu1({F1() - u, one}); // u z - 1 over z? built below
            // (z u - 1) as polynomial in the active z: constant -1, linear u
            Poly<F1> zu({FieldOps<F1>::from_int(-1), u});
            Poly<F1> z21({FieldOps<F1>::from_int(-1), F1(), one});
            (void)zu1;
            w00_2_ = F2(num, zu * zu * z21 * Poly<F1>::constant(u * u - one));
        }
        return *w00_2_;
    }

    /// Cached resolvents; `points` = total argument count s.
    const F1& one_point(KL kl) { return get1(kl); }
    const F2& two_point(KL kl) { return get2(kl); }
    const F3& three_point(KL kl) { return get3(kl); }

    const std::vector<std::pair<std::string, std::string>>& dependency_ledger() const { return deps_; }

    /// Base-plane derivative d/dp = (z^2/(z^2-1)) d/dz.
    template <class F>
    RatFun<F> ddp(const RatFun<F>& f) const
    {
        using Ops = FieldOps<F>;
        RatFun<F> conv(Poly<F>({Ops::zero(), Ops::zero(), Ops::one()}),
                       Poly<F>({Ops::from_int(-1), Ops::zero(), Ops::one()}));
        return conv * f.derivative();
    }

    /// Loop operator K: contour projection of Vhat' f onto the part decaying
    /// at infinity. The integration kernel's dependence on the external point
    /// is closed-form, so every residue reduces to a Laurent expansion of the
    /// z-independent factor paired with explicit kernel coefficients:
    ///   z xi /((z - xi)(z xi - 1)) = [z^2/(z^2-1)]/(z - xi) + [1/(z^2-1)]/(xi - 1/z).
    template <class F>
    RatFun<F> apply_loop_operator(const RatFun<F>& f, const std::vector<F>& extra_poles = {}) const
    {
        using Ops = FieldOps<F>;
        using PF = Poly<F>;
        RatFun<F> phi = lift_ratfun_f<F>(vph_z_) * lift_ratfun_f<F>(pprime_) * f;
        std::vector<F> poles;
        poles.push_back(Ops::zero());
        poles.push_back(Ops::one());
        poles.push_back(Ops::from_int(-1));
        for (auto& b : d_.dp_inside) poles.push_back(lift_const<F>(b));
        for (auto& p : extra_poles) poles.push_back(p);
        RatFun<F> zfac(PF({Ops::zero(), Ops::zero(), Ops::one()}),
                       PF({Ops::from_int(-1), Ops::zero(), Ops::one()})); // z^2/(z^2-1)
        RatFun<F> ofac(PF::from_int(1), PF({Ops::from_int(-1), Ops::zero(), Ops::one()})); // 1/(z^2-1)
        RatFun<F> acc;
        for (auto& a : dedupe(poles)) {
            auto [v0, c0] = phi.laurent_at(a, 1);
            (void)c0;
            if (v0 >= 0) continue;
            std::size_t ord = std::size_t(-v0);
            auto [v, c] = phi.laurent_at(a, ord);
            for (std::size_t m = 0; m + 1 <= ord; ++m) {
                const F& coeff = c[ord - 1 - m]; // multiplies (zeta-a)^{-1-m}
                // k1 part: 1/(z-a)^{m+1}
                PF za({Ops::zero() - a, Ops::one()});
                RatFun<F> k1m(PF::from_int(1), RatFun<F>::power(za, int(m) + 1));
                // k2 part: (-1)^m / (a - 1/z)^{m+1} -> z^{m+1} (-1)^m/(a z - 1)^{m+1}
                PF az1({Ops::from_int(-1), a});
                PF zpow = RatFun<F>::power(PF::identity(), int(m) + 1);
                F sgn = (m % 2 == 0) ? Ops::one() : Ops::from_int(-1);
                RatFun<F> k2m(sgn * zpow, RatFun<F>::power(az1, int(m) + 1));
                acc = acc + coeff * (zfac * k1m + ofac * k2m);
            }
            (void)v;
        }
        // kernel pole at xi = 1/z: residue [1/(z^2-1)] phi(1/z)
        acc = acc + ofac * phi.swap_sheet();
        return acc;
    }

    /// Inverse of (K - 2 W_{0,0}) on admissible right-hand sides: residues of
    /// the odd third-kind kernel against rhs/(2y), assembled in the same
    /// closed-kernel fashion. `min_decay` is the required decay order of rhs
    /// at infinity (2 for externally supplied functions, 1 for right-hand
    /// sides generated by the spectator-extended recursion).
    template <class F>
    RatFun<F> invert_loop_operator(const RatFun<F>& rhs, const std::vector<F>& rhs_extra_poles,
                                   const std::vector<F>& spectator_vars, int min_decay = 1) const
    {
        using Ops = FieldOps<F>;
        using PF = Poly<F>;
        if (!rhs.is_zero()) {
            auto [v, c] = rhs.expand_at_infinity(1);
            (void)c;
            if (v < min_decay)
                throw std::invalid_argument(
                    "invert_loop_operator: right-hand side decays too slowly at infinity");
        }
        RatFun<F> r = lift_ratfun_f<F>(measure_) * rhs;
        std::vector<F> poles;
        poles.push_back(Ops::zero());
        poles.push_back(Ops::one());
        poles.push_back(Ops::from_int(-1));
        for (auto& b : d_.dp_inside) poles.push_back(lift_const<F>(b));
        for (auto& p : rhs_extra_poles) poles.push_back(p);
        RatFun<F> acc;
        for (auto& a : dedupe(poles)) {
            auto [v0, c0] = r.laurent_at(a, 1);
            (void)c0;
            if (v0 >= 0) continue;
            std::size_t ord = std::size_t(-v0);
            auto [v, c] = r.laurent_at(a, ord);
            for (std::size_t m = 0; m + 1 <= ord; ++m) {
                const F& coeff = c[ord - 1 - m];
                // kernel 1/(z-xi) - xi/(z xi - 1), Taylor at xi = a:
                //   m-th coefficient: 1/(z-a)^{m+1}
                //                     - [a(-z)^m/(az-1)^{m+1} + (m>=1)(-z)^{m-1}/(az-1)^m]
                PF za({Ops::zero() - a, Ops::one()});
                RatFun<F> k(PF::from_int(1), RatFun<F>::power(za, int(m) + 1));
                PF az1({Ops::from_int(-1), a});
                PF negz({Ops::zero(), Ops::from_int(-1)});
                RatFun<F> term2(a * RatFun<F>::power(negz, int(m)),
                                RatFun<F>::power(az1, int(m) + 1));
                k = k - term2;
                if (m >= 1)
                    k = k - RatFun<F>(RatFun<F>::power(negz, int(m) - 1), RatFun<F>::power(az1, int(m)));
                acc = acc + coeff * k;
            }
            (void)v;
        }
        // kernel pole at xi = 1/z from -xi/(z xi - 1): residue -(1/z^2) r(1/z)
        RatFun<F> invz2(PF::from_int(-1), PF({Ops::zero(), Ops::zero(), Ops::one()}));
        acc = acc + invz2 * r.swap_sheet();
        // form-to-function conversion: divide by p'(z) = (z^2-1)/z^2
        RatFun<F> conv(PF({Ops::zero(), Ops::zero(), Ops::one()}),
                       PF({Ops::from_int(-1), Ops::zero(), Ops::one()}));
        return pf_normalize(acc * conv, output_pole_list<F>(spectator_vars));
    }

    /// Pole list in the active variable for cached objects.
    template <class F>
    std::vector<F> output_pole_list(const std::vector<F>& spectator_vars) const
    {
        std::vector<F> out;
        out.push_back(FieldOps<F>::zero());
        out.push_back(FieldOps<F>::one());
        out.push_back(FieldOps<F>::from_int(-1));
        for (auto& b : d_.dp_inside) out.push_back(lift_const<F>(b));
        for (auto& b : d_.dp_outside) out.push_back(lift_const<F>(b));
        for (auto& u : spectator_vars) {
            out.push_back(FieldOps<F>::one() / u);
            out.push_back(u);
        }
        return dedupe(out);
    }

private:
    template <class F>
    static std::vector<F> dedupe(const std::vector<F>& v)
    {
        std::vector<F> out;
        for (auto& x : v) {
            bool seen = false;
            for (auto& y : out)
                if (FieldOps<F>::is_zero(x - y)) {
                    seen = true;
                    break;
                }
            if (!seen) out.push_back(x);
        }
        return out;
    }

    static F1 compose_poly(const Poly<S>& p, const F1& g)
    {
        F1 acc;
        for (int i = p.degree(); i >= 0; --i)
            acc = acc * g + F1(Poly<S>::constant(p.coeff(std::size_t(i))));
        return acc;
    }

    /// Engine data (stored over the scalar S) lifted into a spectator field.
    template <class F>
    RatFun<F> lift_ratfun_f(const F1& f) const
    {
        if constexpr (std::is_same_v<F, S>) {
            return f;
        } else {
            auto up = [](const S& c) { return lift_const<F>(c); };
            return RatFun<F>(f.num().template map<F>(up), f.den().template map<F>(up));
        }
    }

    void note(const std::string& to)
    {
        if (!target_.empty()) deps_.emplace_back(target_, to);
    }
    static std::string tag(KL kl, int s)
    {
        return "W[" + std::to_string(kl.k) + "," + std::to_string(kl.l) + ";s=" + std::to_string(s) + "]";
    }

    void check_budget(KL kl, int spectators) const
    {
        if (kl.level() + spectators + 1 > max_level_)
            throw RecursionBudgetExceeded("correlator recursion budget 2k+l+s exceeded");
    }

    const F1& get1(KL kl)
    {
        if (kl.k < 0 || kl.l < 0) throw std::invalid_argument("one_point: negative index");
        if (kl == KL{0, 0}) return w00_one();
        auto it = one_.find(kl);
        if (it != one_.end()) return it->second;
        check_budget(kl, 0);
        std::string saved = std::exchange(target_, tag(kl, 1));
        F1 rhs = assemble_rhs<0>(kl);
        target_ = saved;
        F1 w = invert_loop_operator<S>(rhs, {}, {});
        return one_.emplace(kl, std::move(w)).first->second;
    }

    const F2& get2(KL kl)
    {
        if (kl == KL{0, 0}) return w00_two();
        auto it = two_.find(kl);
        if (it != two_.end()) return it->second;
        check_budget(kl, 1);
        std::string saved = std::exchange(target_, tag(kl, 2));
        F2 rhs = assemble_rhs<1>(kl);
        target_ = saved;
        F1 u = F1::variable();
        F2 w = invert_loop_operator<F1>(rhs, {FieldOps<F1>::one() / u}, {u});
        return two_.emplace(kl, std::move(w)).first->second;
    }

    const F3& get3(KL kl)
    {
        auto it = three_.find(kl);
        if (it != three_.end()) return it->second;
        check_budget(kl, 2);
        std::string saved = std::exchange(target_, tag(kl, 3));
        F3 rhs = assemble_rhs<2>(kl);
        target_ = saved;
        std::vector<F2> us = {F2::variable(), F2::constant(F1::variable())};
        std::vector<F2> imgs;
        for (auto& u : us) imgs.push_back(FieldOps<F2>::one() / u);
        F3 w = invert_loop_operator<F2>(rhs, imgs, us);
        return three_.emplace(kl, std::move(w)).first->second;
    }

    template <int NS>
    auto sub_object(KL kl, unsigned mask)
        -> std::conditional_t<NS == 0, F1, std::conditional_t<NS == 1, F2, F3>>
    {
        if constexpr (NS == 0) {
            note(tag(kl, 1));
            return get1(kl);
        } else if constexpr (NS == 1) {
            if (mask == 0) {
                note(tag(kl, 1));
                return lift_coeffs<F1>(get1(kl));
            }
            note(tag(kl, 2));
            return get2(kl);
        } else {
            switch (mask) {
            case 0u: {
                note(tag(kl, 1));
                return lift_coeffs<F2>(get1(kl));
            }
            case 1u: { // carries the shallow spectator u1
                note(tag(kl, 2));
                const F2& f = get2(kl);
                auto up = [](const F1& c) { return lift_coeffs<F1>(c); };
                return F3(f.num().template map<F2>(up), f.den().template map<F2>(up));
            }
            case 2u: { // carries the deep spectator u2
                note(tag(kl, 2));
                const F2& f = get2(kl);
                auto up = [](const F1& c) { return F2::constant(c); };
                return F3(f.num().template map<F2>(up), f.den().template map<F2>(up));
            }
            default:
                note(tag(kl, 3));
                return get3(kl);
            }
        }
    }

    /// Coinciding-point object W_{k,l}(q, q, spectators): exact diagonal of
    /// the next-higher-point function.
    template <int NS>
    auto diagonal(KL kl) -> std::conditional_t<NS == 0, F1, F2>
    {
        if constexpr (NS == 0) {
            note(tag(kl, 2));
            return eval_outer(get2(kl), F1::variable());
        } else {
            static_assert(NS == 1, "diagonal: four-point objects exceed the recursion budget");
            note(tag(kl, 3));
            return eval_outer(get3(kl), F2::variable());
        }
    }

    /// Spectator term from the potential dependence of the loop operator:
    /// d/du [ (W(u, rest) - W(q, rest)) / (p(q) - p(u)) ]; enters the
    /// right-hand side with a minus sign.
    template <class F>
    RatFun<F> spectator_term(const RatFun<F>& w_active, const F& w_at_u, const F& u, int depth) const
    {
        using PF = Poly<F>;
        using Ops = FieldOps<F>;
        RatFun<F> inv_dp(PF({Ops::zero(), u}),
                         PF({Ops::zero() - u, Ops::one()}) * PF({Ops::from_int(-1), u}));
        RatFun<F> expr = (RatFun<F>::constant(w_at_u) - w_active) * inv_dp;
        RatFun<F> dbase;
        switch (depth) {
        case 1:
            dbase = deriv_depth<1>(expr);
            break;
        case 2:
            dbase = deriv_depth<2>(expr);
            break;
        default:
            throw std::logic_error("spectator_term: unsupported depth");
        }
        F conv = u * u / (u * u - Ops::one());
        return RatFun<F>::constant(conv) * dbase;
    }

    template <int NS>
    auto assemble_rhs(KL kl) -> std::conditional_t<NS == 0, F1, std::conditional_t<NS == 1, F2, F3>>
    {
        using T = std::conditional_t<NS == 0, F1, std::conditional_t<NS == 1, F2, F3>>;
        using F = std::conditional_t<NS == 0, S, std::conditional_t<NS == 1, F1, F2>>;
        const unsigned full = (1u << NS) - 1u;
        T rhs;
        for (int k1 = 0; k1 <= kl.k; ++k1)
            for (int l1 = 0; l1 <= kl.l; ++l1)
                for (unsigned m = 0; m <= full; ++m) {
                    KL a{k1, l1}, b{kl.k - k1, kl.l - l1};
                    unsigned mb = full & ~m;
                    if (a == KL{0, 0} && m == 0) continue;
                    if (b == KL{0, 0} && mb == 0) continue;
                    rhs = rhs + sub_object<NS>(a, m) * sub_object<NS>(b, mb);
                }
        if (kl.k >= 1) {
            if constexpr (NS <= 1) {
                rhs = rhs + diagonal<NS>(KL{kl.k - 1, kl.l});
            } else {
                throw RecursionBudgetExceeded("coinciding-point term at three spectators not supported");
            }
        }
        if (kl.l >= 1) {
            rhs = rhs + ddp(sub_object<NS>(KL{kl.k, kl.l - 1}, full));
        }
        if constexpr (NS >= 1) {
            {
                T w_active = sub_object<NS>(kl, full & ~1u);
                F w_at_u = [&]() -> F {
                    if constexpr (NS == 1)
                        return get1(kl);
                    else
                        return get2(kl); // W(u1, u2) with active renamed to u1
                }();
                F u = [&]() -> F {
                    if constexpr (NS == 1)
                        return F1::variable();
                    else
                        return F2::variable();
                }();
                rhs = rhs - spectator_term<F>(w_active, w_at_u, u, 1);
            }
            if constexpr (NS == 2) {
                T w_active = sub_object<NS>(kl, full & ~2u);
                F w_at_u = get2(kl); // W(u2, u1) = W(u1, u2) by symmetry
                F u = F2::constant(F1::variable());
                rhs = rhs - spectator_term<F>(w_active, w_at_u, u, 2);
            }
        }
        return rhs;
    }

    CanonicalOneCut<S> d_;
    int max_level_;
    F1 mhat_z_, vph_z_, y_z_, measure_, pprime_;
    std::optional<F1> w00_1_;
    std::optional<F2> w00_2_;
    std::map<KL, F1> one_;
    std::map<KL, F2> two_;
    std::map<KL, F3> three_;
    std::vector<std::pair<std::string, std::string>> deps_;
    std::string target_;
};

} // namespace betaloop

#endif
