#include "doctest.h"

#include <betaloop/contour.hpp>
#include <betaloop/laurent.hpp>
#include <betaloop/poly.hpp>
#include <betaloop/ratfun.hpp>
#include <betaloop/roots.hpp>

#include <random>

using namespace betaloop;

namespace {

double cabs(const Complex& z) { return abs(z).convert_to<double>(); }

Poly<Complex> cpoly(std::initializer_list<double> cs)
{
    std::vector<Complex> v;
    for (double c : cs) v.emplace_back(c);
    return Poly<Complex>(std::move(v));
}

} // namespace

TEST_CASE("rational ring identities hold exactly in rational mode")
{
    using Q = BigRat;
    std::mt19937_64 rng(20240811);
    auto rnd = [&]() {
        return RatFun<Q>(Poly<Q>({Q(long(rng() % 19) - 9), Q(long(rng() % 19) - 9), Q(long(rng() % 7))}),
                         Poly<Q>({Q(long(rng() % 17) + 1), Q(long(rng() % 13) - 6), Q(1)}));
    };
    for (int trial = 0; trial < 20; ++trial) {
        auto a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a + (b + c) == (a + b) + c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("poly_roots recovers simple factorable roots")
{
    // x^2 - 4 -> {-2, 2}
    auto r = poly_roots(cpoly({-4, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(cabs(r[0].value + Complex(2)) < 1e-30);
    CHECK(cabs(r[1].value - Complex(2)) < 1e-30);
    CHECK(r[0].multiplicity == 1);

    // (x-1)^2 -> {1} with multiplicity 2
    auto r2 = poly_roots(cpoly({1, -2, 1}));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].multiplicity == 2);
    CHECK(cabs(r2[0].value - Complex(1)) < 1e-12);
}

TEST_CASE("poly_roots polishes a cubic to small residual")
{
    auto p = cpoly({1, -2, 0, 1}); // x^3 - 2x + 1
    auto r = poly_roots(p, 1e-12);
    REQUIRE(r.size() == 3);
    int msum = 0;
    for (auto& root : r) {
        msum += root.multiplicity;
        CHECK(cabs(p.eval(root.value)) < 1e-10);
    }
    CHECK(msum == 3);
}

TEST_CASE("series at infinity: geometric expansion of 1/(p-a)")
{
    using Q = BigRat;
    Q a(3);
    RatFun<Q> f(Poly<Q>::from_int(1), Poly<Q>({-a, Q(1)}));
    auto s = series_at_infinity(f, 3);
    CHECK(s.coeff(1) == Q(1));
    CHECK(s.coeff(2) == Q(3));
    CHECK(s.coeff(3) == Q(9));
    CHECK(s.coeff(0) == Q(0));
}

TEST_CASE("series at infinity keeps polynomial part")
{
    using Q = BigRat;
    RatFun<Q> f(Poly<Q>::identity()); // f = p
    auto s = series_at_infinity(f, 4);
    CHECK(s.coeff(-1) == Q(1));
    for (int k = 0; k <= 4; ++k) CHECK(s.coeff(k) == Q(0));
}

TEST_CASE("series at infinity by long division: (p^2+1)/(p^2-4)")
{
    using Q = BigRat;
    RatFun<Q> f(Poly<Q>({Q(1), Q(0), Q(1)}), Poly<Q>({Q(-4), Q(0), Q(1)}));
    auto s = series_at_infinity(f, 4);
    CHECK(s.coeff(0) == Q(1));
    CHECK(s.coeff(1) == Q(0));
    CHECK(s.coeff(2) == Q(5));
    CHECK(s.coeff(3) == Q(0));
    CHECK(s.coeff(4) == Q(20));
    // resummation against direct evaluation within the truncation tail
    Complex p(10, 0);
    Complex direct = (p * p + Complex(1)) / (p * p - Complex(4));
    Complex summed = s.eval(p);
    CHECK(cabs(direct - summed) < 2e-4); // next term is 80/p^6
}

TEST_CASE("residues: sign convention at infinity and finite poles")
{
    using Q = BigRat;
    // res_inf dx/x = -1
    RatFun<Q> invx(Poly<Q>::from_int(1), Poly<Q>::identity());
    CHECK(invx.residue_at_infinity() == Q(-1));
    // res_{x=2} 1/(x-2) = 1
    RatFun<Q> f(Poly<Q>::from_int(1), Poly<Q>({Q(-2), Q(1)}));
    CHECK(f.residue_at(Q(2)) == Q(1));
}

TEST_CASE("residue at a double pole cross-checked by contour quadrature")
{
    // f = x^2 / ((x-1)(x-3)^2), residue at 3.
    auto num = cpoly({0, 0, 1});
    auto den = cpoly({-1, 1}) * cpoly({9, -6, 1});
    RatFun<Complex> f(num, den);
    Complex res = f.residue_at(Complex(3));
    auto quad = contour_integral([&](const Complex& z) { return f.eval(z); },
                                 Contour::circle(Complex(3), Real("0.5")), 32);
    Complex via_contour = quad.value / (2 * pi_real() * imag_unit());
    CHECK(cabs(res - via_contour) < 1e-35);
    // analytic value: d/dx [x^2/(x-1)] at 3 = (2x(x-1)-x^2)/(x-1)^2 = 3/4
    CHECK(cabs(res - Complex(Real(3) / 4)) < 1e-40);
}

TEST_CASE("global residue theorem on random rational functions")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        // distinct simple poles
        std::vector<Complex> poles;
        for (int k = 0; k < 3; ++k)
            poles.emplace_back(double(1 + rng() % 5) + 0.25 * double(k), double(rng() % 3) - 1.0);
        auto den = cpoly({1});
        for (auto& a : poles) den = den * Poly<Complex>({Complex(0) - a, Complex(1)});
        auto num = cpoly({double(1 + rng() % 4), double(rng() % 3), 1});
        RatFun<Complex> f(num, den);
        Complex total = f.residue_at_infinity();
        for (auto& a : poles) total += f.residue_at(a);
        CHECK(cabs(total) < 1e-38);
    }
}

TEST_CASE("contour integral: unit-circle 1/z and orientation reversal")
{
    auto f = [](const Complex& z) { return Complex(1) / z; };
    auto c = Contour::circle(Complex(0), Real(1));
    auto q = contour_integral(f, c, 48);
    Complex norm = q.value / (2 * pi_real() * imag_unit());
    CHECK(cabs(norm - Complex(1)) < 1e-40);
    auto qr = contour_integral(f, c.reversed(), 48);
    CHECK(cabs(qr.value + q.value) < 1e-40);
}

TEST_CASE("contour integral error estimate is honest under order doubling")
{
    auto f = [](const Complex& z) { return exp(z) / (z - Complex(Real("0.3"))); };
    auto c = Contour::stadium(Real(-1), Real(1), Real("0.5"));
    auto q1 = contour_integral(f, c, 24, Real(1e-35));
    auto q2 = contour_integral(f, c, 48, Real(1e-35));
    CHECK(abs(q1.value - q2.value) <= q1.error_estimate + q2.error_estimate + Real(1e-45));
}

TEST_CASE("laurent series ring ops respect truncation order shifts")
{
    using Q = BigRat;
    // f = 1/x around infinity (exponent 1), g = x = exponent -1
    auto f = LaurentSeries<Q>::at_infinity(6);
    f.set(1, Q(1));
    f.set(3, Q(2));
    auto g = LaurentSeries<Q>::at_infinity(6);
    g.set(-1, Q(1));
    auto h = f * g;
    CHECK(h.coeff(0) == Q(1));
    CHECK(h.coeff(2) == Q(2));
    CHECK(h.truncation_order() == 5); // 6 + (-1)
}

TEST_CASE("pf_normalize reproduces a function over its known pole list")
{
    using Q = BigRat;
    Poly<Q> x = Poly<Q>::identity();
    // f with poles at 0 (order 2) and 1 (order 1) plus a polynomial part
    RatFun<Q> f = RatFun<Q>(Poly<Q>({Q(1), Q(2)})) +
                  RatFun<Q>(Poly<Q>::from_int(3), Poly<Q>({Q(0), Q(0), Q(1)})) +
                  RatFun<Q>(Poly<Q>::from_int(-5), Poly<Q>({Q(-1), Q(1)}));
    auto g = pf_normalize(f, {Q(0), Q(1)});
    CHECK(g == f);
    CHECK_THROWS(pf_normalize(f, {Q(0)}));
}
