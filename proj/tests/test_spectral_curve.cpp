#include "doctest.h"

#include <betaloop/curve.hpp>

using namespace betaloop;

namespace {

double d(const Real& x) { return x.convert_to<double>(); }
double cd(const Complex& z) { return abs(z).convert_to<double>(); }

Potential gaussian(const BigRat& t2) { return Potential({BigRat(0), BigRat(0), t2}); }

} // namespace

TEST_CASE("gaussian endpoints in closed form: mu = +-2 sqrt(t0)")
{
    auto curve = solve_endpoints(gaussian(BigRat(1, 2)), {Real(1), {}}, 1);
    REQUIRE(curve.endpoints().size() == 2);
    CHECK(d(abs(curve.endpoints()[0] + Real(2))) < 1e-35);
    CHECK(d(abs(curve.endpoints()[1] - Real(2))) < 1e-35);

    auto curve2 = solve_endpoints(gaussian(BigRat(1, 2)), {Real(1) / 4, {}}, 1);
    CHECK(d(abs(curve2.endpoints()[1] - Real(1))) < 1e-35);
    CHECK(curve2.moment_poly().degree() == 0);
    CHECK(d(abs(curve2.moment_poly().coeff(0) - Real(1) / 2)) < 1e-35);
}

TEST_CASE("moment polynomial degree bookkeeping: deg M = m - n")
{
    // V' of degree 5, two cuts -> deg M = 3
    Potential pot({BigRat(0), BigRat(1), BigRat(0), BigRat(-1, 2), BigRat(0), BigRat(0), BigRat(1, 60)});
    std::vector<Real> mu{Real(-4), Real(-1), Real(1), Real(4)};
    Poly<Real> sig = Poly<Real>::from_int(1);
    for (auto& m : mu) sig = sig * Poly<Real>({-m, Real(1)});
    auto mp = moment_polynomial_from<Real>(pot.dpoly<Real>(), sig);
    CHECK(mp.degree() == 3);
}

TEST_CASE("symmetric two-cut quartic solves with tiny residuals")
{
    // V = x^4/4 - x^2, t0 = 0.1, S_1 = 0.05
    Potential pot({BigRat(0), BigRat(0), BigRat(-1), BigRat(0), BigRat(1, 4)});
    FillingData fill{Real(1) / 10, {Real(1) / 20}};
    EndpointSolveOptions opt;
    opt.initial_guess = std::vector<Real>{Real(-1.6), Real(-1.2), Real(1.2), Real(1.6)};
    opt.symmetric_ansatz = true;
    auto curve = solve_endpoints(pot, fill, 2, opt);
    CHECK(d(curve.report().max_residual()) < 1e-12);
    CHECK(curve.n_cuts() == 2);
    CHECK(curve.genus() == 1);
    CHECK(curve.moment_poly().degree() == 1); // nonconstant M, one double point
    auto dps = curve.double_points();
    REQUIRE(dps.size() == 1);
    CHECK(cd(dps[0].value) < 1e-12); // symmetric curve: b = 0
    // symmetry of the endpoint set
    CHECK(d(abs(curve.endpoints()[0] + curve.endpoints()[3])) < 1e-25);
    CHECK(d(abs(curve.endpoints()[1] + curve.endpoints()[2])) < 1e-25);
}

TEST_CASE("y evaluation on both sheets and at branch points")
{
    auto curve = solve_endpoints(gaussian(BigRat(1, 2)), {Real(1), {}}, 1);
    // y(3) = (1/2) sqrt(5) on the physical sheet
    Complex y3 = curve.y_eval({Complex(3), Sheet::physical});
    CHECK(cd(y3 - Complex(sqrt(Real(5)) / 2)) < 1e-35);
    CHECK(cd(curve.y_eval({Complex(3), Sheet::unphysical}) + y3) < 1e-40);
    CHECK(cd(curve.y_eval({Complex(curve.endpoints()[1]), Sheet::physical})) < 1e-40);
}

TEST_CASE("planar resolvent: value, asymptotics, and sheet sum")
{
    auto curve = solve_endpoints(gaussian(BigRat(1, 2)), {Real(1), {}}, 1);
    // W0(3) = (3 - sqrt 5)/2
    CHECK(cd(curve.planar_resolvent(Complex(3)) - Complex((3 - sqrt(Real(5))) / 2)) < 1e-35);
    // W0 ~ t0/p at infinity
    Complex big(1e8);
    CHECK(cd(curve.planar_resolvent(big) * big - Complex(1)) < 1e-7);
    // W0(p) + W0(pbar) = V'(p)
    Complex p(Real("1.3"), Real("0.7"));
    Complex w_plus = curve.planar_resolvent(p);
    Complex w_minus = Complex(curve.potential().dpoly<Real>().eval(p)) - w_plus;
    Complex expect = Complex(curve.potential().dpoly<Real>().eval(p)) / 2 - curve.y_eval({p, Sheet::unphysical});
    CHECK(cd(w_minus - expect) < 1e-40);
}

TEST_CASE("zhukovsky map on the gaussian curve")
{
    auto curve = solve_endpoints(gaussian(BigRat(1, 2)), {Real(1), {}}, 1);
    CHECK(cd(curve.zhukovsky_to_p(Complex(2)) - Complex(Real(5) / 2)) < 1e-40);
    CHECK(cd(curve.zhukovsky_to_p(Complex(1)) - Complex(2)) < 1e-40); // branch point
    Complex z3 = curve.zhukovsky_from_p(Complex(3));
    CHECK(cd(z3 - Complex((3 + sqrt(Real(5))) / 2)) < 1e-35);
    CHECK(abs(z3) > Real(1));
    // round trip
    Complex z(Real("1.7"), Real("0.4"));
    CHECK(cd(curve.zhukovsky_from_p(curve.zhukovsky_to_p(z)) - z) < 1e-35);
    CHECK_THROWS(curve.zhukovsky_from_p(Complex(Real("0.5")))); // on the cut
}

TEST_CASE("rescaling covariance: V_s(x) = V(sx) shrinks endpoints by s")
{
    Potential pot({BigRat(0), BigRat(1, 10), BigRat(1, 2), BigRat(0), BigRat(1, 20)});
    auto c1 = solve_endpoints(pot, {Real(1), {}}, 1);
    // V(2x): couplings scale by 2^j
    Potential pot2({BigRat(0), BigRat(2, 10), BigRat(4, 2), BigRat(0), BigRat(16, 20)});
    auto c2 = solve_endpoints(pot2, {Real(1), {}}, 1);
    CHECK(d(abs(c2.endpoints()[0] - c1.endpoints()[0] / 2)) < 1e-30);
    CHECK(d(abs(c2.endpoints()[1] - c1.endpoints()[1] / 2)) < 1e-30);
}

TEST_CASE("total eigenvalue mass: res_inf y = t0 via cut quadrature")
{
    auto curve = solve_endpoints(gaussian(BigRat(1, 2)), {Real(1), {}}, 1);
    auto s = detail::filling_fraction_values(curve.endpoints(), curve.moment_poly(), true);
    REQUIRE(s.size() == 1);
    CHECK(d(abs(s[0] - Real(1))) < 1e-30);

    // two-cut: fractions sum to t0
    Potential pot({BigRat(0), BigRat(0), BigRat(-1), BigRat(0), BigRat(1, 4)});
    FillingData fill{Real(1) / 10, {Real(1) / 20}};
    EndpointSolveOptions opt;
    opt.initial_guess = std::vector<Real>{Real(-1.6), Real(-1.2), Real(1.2), Real(1.6)};
    opt.symmetric_ansatz = true;
    auto two = solve_endpoints(pot, fill, 2, opt);
    auto frac = detail::filling_fraction_values(two.endpoints(), two.moment_poly(), true);
    REQUIRE(frac.size() == 2);
    CHECK(d(abs(frac[0] + frac[1] - two.t0())) < 1e-25);
    CHECK(d(abs(frac[0] - Real(1) / 20)) < 1e-25);
}

TEST_CASE("degenerate cuts are rejected with a directing error")
{
    Potential pot({BigRat(0), BigRat(0), BigRat(-1), BigRat(0), BigRat(1, 4)});
    // nearly-empty second cut forces a collision
    FillingData fill{Real(1) / 10, {Real(1) / 10 - Real(1e-21)}};
    EndpointSolveOptions opt;
    opt.initial_guess = std::vector<Real>{Real(-1.7), Real(-1.0), Real(1.0), Real(1.7)};
    CHECK_THROWS_AS(solve_endpoints(pot, fill, 2, opt), SolverError);
}
