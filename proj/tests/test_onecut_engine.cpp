#include "doctest.h"

#include <betaloop/onecut.hpp>

#include <random>

using namespace betaloop;

namespace {

using Q = BigRat;
using EQ = OneCutEngine<Q>;
using EC = OneCutEngine<Complex>;

double cabs(const Complex& z) { return abs(z).convert_to<double>(); }

Complex rnd_outside(std::mt19937_64& rng)
{
    // a point with |z| in (1.15, 3), away from the real axis pole images
    std::uniform_real_distribution<double> mag(1.15, 3.0), arg(0.2, 3.0);
    double r = mag(rng), th = arg(rng);
    return Complex(Real(r * std::cos(th)), Real(r * std::sin(th)));
}

} // namespace

TEST_CASE("gaussian canonical data and planar objects")
{
    EQ eng(canonical_gaussian_exact(Q(1)));
    // W00(z) = 1/z
    RatFun<Q> expect(Poly<Q>::from_int(1), Poly<Q>::identity());
    CHECK(eng.w00_one() == expect);
    // planar loop equation K W00 = W00^2 as an exact rational identity
    auto lhs = eng.apply_loop_operator<Q>(eng.w00_one(), {});
    CHECK(lhs == eng.w00_one() * eng.w00_one());
}

TEST_CASE("gaussian resolvent moments are the catalan numbers (exact)")
{
    EQ eng(canonical_gaussian_exact(Q(1)));
    auto s = base_series_physical(eng.w00_one(), 20);
    long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int k = 0; k <= 8; ++k) {
        CHECK(s[std::size_t(2 * k + 1)] == Q(catalan[k]));
        if (2 * k + 2 < 20) CHECK(s[std::size_t(2 * k + 2)] == Q(0));
    }
}

TEST_CASE("first gamma correction W_{0,1} in closed form")
{
    EQ eng(canonical_gaussian_exact(Q(1)));
    auto w01 = eng.one_point({0, 1});
    // -z/(z^2-1)^2
    Poly<Q> z21({Q(-1), Q(0), Q(1)});
    RatFun<Q> expect(Poly<Q>({Q(0), Q(-1)}), z21 * z21);
    CHECK(w01 == expect);
}

TEST_CASE("loop equation holds as an exact rational identity at levels 1..3")
{
    EQ eng(canonical_gaussian_exact(Q(1)));
    auto check_kl = [&](KL kl) {
        // (K - 2 W00) W_kl == quadratic + coinciding + derivative terms
        auto w = eng.one_point(kl);
        auto lhs = eng.apply_loop_operator<Q>(w, {}) - Q(2) * (eng.w00_one() * w);
        RatFun<Q> rhs;
        for (int k1 = 0; k1 <= kl.k; ++k1)
            for (int l1 = 0; l1 <= kl.l; ++l1) {
                KL a{k1, l1}, b{kl.k - k1, kl.l - l1};
                if (a == KL{0, 0} || b == KL{0, 0}) continue;
                rhs = rhs + eng.one_point(a) * eng.one_point(b);
            }
        if (kl.k >= 1) rhs = rhs + eval_outer(eng.two_point({kl.k - 1, kl.l}), RatFun<Q>::variable());
        if (kl.l >= 1) rhs = rhs + eng.ddp(eng.one_point({kl.k, kl.l - 1}));
        CHECK(lhs == rhs);
    };
    check_kl({0, 1});
    check_kl({1, 0});
    check_kl({0, 2});
    check_kl({1, 1});
    check_kl({0, 3});
}

TEST_CASE("operator round trip: invert((K - 2W00) f) = f exactly")
{
    EQ eng(canonical_gaussian_exact(Q(1)));
    auto f = eng.one_point({0, 2});
    auto g = eng.apply_loop_operator<Q>(f, {}) - Q(2) * (eng.w00_one() * f);
    auto f2 = eng.invert_loop_operator<Q>(g, {}, {});
    CHECK(f2 == f);
    // rhs = 0 -> 0
    CHECK(eng.invert_loop_operator<Q>(RatFun<Q>(), {}, {}).is_zero());
}

TEST_CASE("correlator symmetry: two-point functions under argument swap")
{
    EQ eng(canonical_gaussian_exact(Q(1)));
    std::mt19937_64 rng(42);
    for (KL kl : {KL{0, 0}, KL{0, 1}, KL{1, 0}, KL{0, 2}}) {
        const auto& w2 = eng.two_point(kl);
        for (int t = 0; t < 6; ++t) {
            Complex z = rnd_outside(rng), u = rnd_outside(rng);
            Complex a = tower_value(w2, {z, u});
            Complex b = tower_value(w2, {u, z});
            double scale = std::max(1.0, std::max(cabs(a), cabs(b)));
            CHECK(cabs(a - b) / scale < 1e-35);
        }
    }
}

TEST_CASE("three-point function is fully symmetric")
{
    EQ eng(canonical_gaussian_exact(Q(1)));
    const auto& w3 = eng.three_point({0, 0});
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 4; ++t) {
        Complex a = rnd_outside(rng), b = rnd_outside(rng), c = rnd_outside(rng);
        Complex v0 = tower_value(w3, {a, b, c});
        for (auto& perm : std::vector<std::vector<Complex>>{{a, c, b}, {b, a, c}, {c, b, a}, {b, c, a}}) {
            Complex v = tower_value(w3, perm);
            CHECK(cabs(v - v0) / std::max(1.0, cabs(v0)) < 1e-33);
        }
    }
}

TEST_CASE("one-point decay: series at infinity starts at 1/p^2 for k+l>0")
{
    EQ eng(canonical_gaussian_exact(Q(1)));
    for (KL kl : {KL{0, 1}, KL{1, 0}, KL{0, 2}, KL{1, 1}, KL{0, 3}, KL{2, 0}}) {
        auto s = base_series_physical(eng.one_point(kl), 4);
        CHECK(s[0] == Q(0));
        CHECK(s[1] == Q(0));
    }
}

TEST_CASE("floating one-cut engine matches the exact engine on the gaussian")
{
    EQ exact(canonical_gaussian_exact(Q(1)));
    CanonicalOneCut<Complex> cd;
    cd.t0 = Complex(1);
    cd.vprime_hat = Poly<Complex>({Complex(0), Complex(1)});
    cd.mhat = Poly<Complex>::constant(Complex(Real(1) / 2));
    EC fl(cd);
    std::mt19937_64 rng(7);
    for (KL kl : {KL{0, 1}, KL{1, 0}, KL{0, 2}, KL{1, 1}, KL{2, 0}}) {
        const auto& we = exact.one_point(kl);
        const auto& wf = fl.one_point(kl);
        for (int t = 0; t < 4; ++t) {
            Complex z = rnd_outside(rng);
            Complex a = tower_value(we, {z});
            Complex b = tower_value(wf, {z});
            CHECK(cabs(a - b) / std::max(1.0, cabs(a)) < 1e-38);
        }
    }
}

TEST_CASE("recursion budget is enforced")
{
    EQ eng(canonical_gaussian_exact(Q(1)), 4);
    CHECK_THROWS_AS(eng.one_point({2, 0}), RecursionBudgetExceeded);
}

TEST_CASE("quartic one-cut float engine: loop identity with double points")
{
    // V = x^2/2 + x^4/10 has a one-cut solution with two double points
    Potential pot({BigRat(0), BigRat(0), BigRat(1, 2), BigRat(0), BigRat(1, 10)});
    auto curve = solve_endpoints(pot, {Real(1), {}}, 1);
    auto cd = canonical_from_curve(curve);
    REQUIRE(cd.dp_inside.size() == 2);
    EC eng(cd);
    // exact rational identity in the float field, checked pointwise
    auto w = eng.one_point({0, 1});
    auto lhs = eng.apply_loop_operator<Complex>(w, {}) - Complex(2) * (eng.w00_one() * w);
    auto rhs = eng.ddp(eng.w00_one());
    std::mt19937_64 rng(99);
    for (int t = 0; t < 8; ++t) {
        Complex z = rnd_outside(rng);
        Complex a = tower_value(lhs, {z}), b = tower_value(rhs, {z});
        CHECK(cabs(a - b) / std::max(1.0, cabs(b)) < 1e-30);
    }
    // double-point regularity: W_{0,1} has no pole at the physical double point
    for (auto& bpt : cd.dp_outside) {
        Complex v = tower_value(w, {bpt + Complex(Real(1e-20))});
        CHECK(cabs(v) < 1e25); // finite (a pole would blow up at ~1e20 scale)
    }
}
