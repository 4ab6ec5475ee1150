#ifndef BETALOOP_LINALG_HPP
#define BETALOOP_LINALG_HPP

#include "scalar.hpp"

#include <stdexcept>
#include <vector>

namespace betaloop {

/// Minimal dense matrix for the small solves in this project (period
/// normalization, endpoint Newton steps, rational-ansatz least squares).
template <class T>
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, T(0)) {}
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

private:
    std::size_t r_, c_;
    std::vector<T> a_;
};

namespace detail {
inline Real abs_of(const Real& x) { return abs(x); }
inline Real abs_of(const Complex& z) { return abs(z); }
inline Complex conj_of(const Complex& z) { return conj(z); }
inline Real conj_of(const Real& x) { return x; }
} // namespace detail

/// LU solve with partial pivoting; returns the solution of A x = b.
template <class T>
std::vector<T> lu_solve(Matrix<T> A, std::vector<T> b)
{
    const std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n) throw std::invalid_argument("lu_solve: shape mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        auto best = detail::abs_of(A(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            auto v = detail::abs_of(A(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best.is_zero()) throw std::runtime_error("lu_solve: singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(piv, j), A(k, j));
            std::swap(b[piv], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            T f = A(i, k) / A(k, k);
            A(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j) A(i, j) -= f * A(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<T> x(n);
    for (std::size_t i = n; i-- > 0;) {
        T acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= A(i, j) * x[j];
        x[i] = acc / A(i, i);
    }
    return x;
}

/// Least squares by modified Gram-Schmidt QR (A tall, full column rank).
/// Also reports the residual 2-norm of A x - b.
template <class T>
std::vector<T> lstsq(const Matrix<T>& A, const std::vector<T>& b, Real* residual_norm = nullptr)
{
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m || m < n) throw std::invalid_argument("lstsq: shape mismatch");
    std::vector<std::vector<T>> q(n, std::vector<T>(m));
    Matrix<T> R(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) q[j][i] = A(i, j);
        for (std::size_t k = 0; k < j; ++k) {
            T dot(0);
            for (std::size_t i = 0; i < m; ++i) dot += detail::conj_of(q[k][i]) * q[j][i];
            R(k, j) = dot;
            for (std::size_t i = 0; i < m; ++i) q[j][i] -= dot * q[k][i];
            // one re-orthogonalization pass
            T dot2(0);
            for (std::size_t i = 0; i < m; ++i) dot2 += detail::conj_of(q[k][i]) * q[j][i];
            R(k, j) += dot2;
            for (std::size_t i = 0; i < m; ++i) q[j][i] -= dot2 * q[k][i];
        }
        Real nrm(0);
        for (std::size_t i = 0; i < m; ++i) {
            auto a = detail::abs_of(q[j][i]);
            nrm += a * a;
        }
        nrm = sqrt(nrm);
        if (nrm.is_zero()) throw std::runtime_error("lstsq: rank deficient basis");
        R(j, j) = T(nrm);
        for (std::size_t i = 0; i < m; ++i) q[j][i] /= T(nrm);
    }
    std::vector<T> qtb(n);
    for (std::size_t k = 0; k < n; ++k) {
        T dot(0);
        for (std::size_t i = 0; i < m; ++i) dot += detail::conj_of(q[k][i]) * b[i];
        qtb[k] = dot;
    }
    std::vector<T> x(n);
    for (std::size_t i = n; i-- > 0;) {
        T acc = qtb[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= R(i, j) * x[j];
        x[i] = acc / R(i, i);
    }
    if (residual_norm) {
        Real rn(0);
        for (std::size_t i = 0; i < m; ++i) {
            T ri = b[i];
            for (std::size_t j = 0; j < n; ++j) ri -= A(i, j) * x[j];
            auto a = detail::abs_of(ri);
            rn += a * a;
        }
        *residual_norm = sqrt(rn);
    }
    return x;
}

/// Rough 1-norm condition estimate through a handful of LU solves.
template <class T>
double condition_estimate(const Matrix<T>& A)
{
    const std::size_t n = A.rows();
    Real a1(0);
    for (std::size_t j = 0; j < n; ++j) {
        Real s(0);
        for (std::size_t i = 0; i < n; ++i) s += detail::abs_of(A(i, j));
        if (s > a1) a1 = s;
    }
    Real inv1(0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<T> e(n, T(0));
        e[j] = T(1);
        std::vector<T> x;
        try {
            x = lu_solve(A, e);
        } catch (const std::exception&) {
            return std::numeric_limits<double>::infinity();
        }
        Real s(0);
        for (auto& v : x) s += detail::abs_of(v);
        if (s > inv1) inv1 = s;
    }
    return (a1 * inv1).convert_to<double>();
}

} // namespace betaloop

#endif
