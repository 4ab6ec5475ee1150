#ifndef BETALOOP_SCALAR_HPP
#define BETALOOP_SCALAR_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace betaloop {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;
using Complex100 = boost::multiprecision::cpp_complex_100;

inline const Real& pi_real()
{
    static const Real v = boost::multiprecision::default_ops::get_constant_pi<Real::backend_type>();
    return v;
}

inline Complex imag_unit() { return Complex(0, 1); }

/// Scalar-mode operations shared by the exact-rational and floating paths.
/// Everything downstream (polynomials, rational functions, the recursion
/// engine) is templated on a field satisfying this small interface.
template <class F>
struct FieldOps;

template <>
struct FieldOps<BigRat> {
    static constexpr bool exact = true;
    static BigRat zero() { return BigRat(0); }
    static BigRat one() { return BigRat(1); }
    static BigRat from_int(long n) { return BigRat(n); }
    static BigRat from_rat(const BigRat& q) { return q; }
    static bool is_zero(const BigRat& q) { return q.is_zero(); }
    static double mag(const BigRat& q)
    {
        if (q.is_zero()) return 0.0;
        double d = std::abs(q.convert_to<double>());
        if (d == 0.0 || !std::isfinite(d)) return 1.0; // out of double range; only the nonzero fact matters
        return d;
    }
};

template <>
struct FieldOps<Complex> {
    static constexpr bool exact = false;
    static Complex zero() { return Complex(0); }
    static Complex one() { return Complex(1); }
    static Complex from_int(long n) { return Complex(n); }
    static Complex from_rat(const BigRat& q)
    {
        return Complex(Real(numerator(q)) / Real(denominator(q)));
    }
    static bool is_zero(const Complex& z) { return z.real().is_zero() && z.imag().is_zero(); }
    static double mag(const Complex& z) { return abs(z).convert_to<double>(); }
};

template <>
struct FieldOps<Real> {
    static constexpr bool exact = false;
    static Real zero() { return Real(0); }
    static Real one() { return Real(1); }
    static Real from_int(long n) { return Real(n); }
    static Real from_rat(const BigRat& q) { return Real(numerator(q)) / Real(denominator(q)); }
    static bool is_zero(const Real& x) { return x.is_zero(); }
    static double mag(const Real& x) { return std::abs(x.convert_to<double>()); }
};

inline Real to_real(const BigRat& q) { return Real(numerator(q)) / Real(denominator(q)); }
inline Complex to_complex(const BigRat& q) { return Complex(to_real(q)); }
inline Complex to_complex(const Real& x) { return Complex(x); }
inline const Complex& to_complex(const Complex& z) { return z; }

/// Value conversion between scalar modes (rationals convert through their
/// numerator/denominator, everything else through the natural constructor).
template <class X, class F>
X convert_scalar(const F& v)
{
    if constexpr (std::is_same_v<X, F>) {
        return v;
    } else if constexpr (std::is_same_v<F, BigRat>) {
        if constexpr (std::is_same_v<X, Complex>) {
            return to_complex(v);
        } else if constexpr (std::is_same_v<X, Real>) {
            return to_real(v);
        } else {
            return X(to_real(v));
        }
    } else {
        return X(v);
    }
}

/// Decimal string with 30 significant digits (the output-document format).
template <class X>
std::string to_string_30(const X& x)
{
    std::ostringstream os;
    os.precision(30);
    os << x;
    return os.str();
}

inline std::string to_string_30(const Complex& z)
{
    std::ostringstream os;
    os.precision(30);
    os << z.real();
    if (!z.imag().is_zero()) {
        os << (z.imag() < 0 ? "-" : "+") << abs(z.imag()) << "i";
    }
    return os.str();
}

/// Parse "p/q" (exact rational) or a decimal literal into a rational.
/// Decimal literals are converted exactly (they are finite decimals).
inline BigRat parse_rational(const std::string& s)
{
    if (s.find('/') != std::string::npos) {
        return BigRat(s);
    }
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    std::string mantissa = t;
    long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        mantissa = t.substr(0, epos);
        exp10 = std::stol(t.substr(epos + 1));
    }
    auto dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exp10 -= long(mantissa.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("parse_rational: bad number '" + s + "'");
    }
    BigRat v{BigInt(digits)};
    BigInt p10 = pow(BigInt(10), unsigned(std::abs(exp10)));
    if (exp10 >= 0) {
        v *= BigRat(p10);
    } else {
        v /= BigRat(p10);
    }
    return neg ? BigRat(-v) : v;
}

} // namespace betaloop

#endif
