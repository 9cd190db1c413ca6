#pragma once

// Small dense linear algebra used throughout: the matrices here are 3x3 or
// 4x4 form/vertex matrices, isometries, and the occasional layout system.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spaceform {

using Vec = std::vector<double>;

struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool square() const { return rows == cols; }
};

inline Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product: shape mismatch");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            double v = x(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
        }
    return z;
}

inline Mat operator+(const Mat& x, const Mat& y) {
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

inline Mat operator-(const Mat& x, const Mat& y) {
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
}

inline Mat operator*(double s, const Mat& x) {
    Mat z = x;
    for (double& v : z.a) v *= s;
    return z;
}

inline Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

// column action y = M x
inline Vec mul(const Mat& m, const Vec& x) {
    if (m.cols != static_cast<int>(x.size())) throw std::invalid_argument("mul: shape mismatch");
    Vec y(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) y[i] += m(i, j) * x[j];
    return y;
}

// row action y = u M
inline Vec mul_row(const Vec& u, const Mat& m) {
    if (m.rows != static_cast<int>(u.size())) throw std::invalid_argument("mul_row: shape mismatch");
    Vec y(m.cols, 0.0);
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i) y[j] += u[i] * m(i, j);
    return y;
}

inline double dot(const Vec& x, const Vec& y) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline Vec vadd(const Vec& x, const Vec& y) {
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

inline Vec vsub(const Vec& x, const Vec& y) {
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

inline Vec vscale(double s, const Vec& x) {
    Vec z = x;
    for (double& v : z) v *= s;
    return z;
}

inline double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }

inline double norm_inf(const Mat& m) {
    double r = 0.0;
    for (double v : m.a) r = std::max(r, std::fabs(v));
    return r;
}

inline double norm_inf(const Vec& x) {
    double r = 0.0;
    for (double v : x) r = std::max(r, std::fabs(v));
    return r;
}

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// LU decomposition with partial pivoting, in place. Returns permutation sign,
// or 0 if a pivot fell below `tol`.
inline int lu_factor(Mat& m, std::vector<int>& perm, double tol) {
    const int n = m.rows;
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(m(i, k)) > std::fabs(m(p, k))) p = i;
        if (std::fabs(m(p, k)) <= tol) return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            std::swap(perm[p], perm[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            m(i, k) /= m(k, k);
            for (int j = k + 1; j < n; ++j) m(i, j) -= m(i, k) * m(k, j);
        }
    }
    return sign;
}

} // namespace detail

inline double determinant(const Mat& m) {
    if (!m.square()) throw std::invalid_argument("determinant: not square");
    Mat lu = m;
    std::vector<int> perm;
    int sign = detail::lu_factor(lu, perm, 0.0);
    if (sign == 0) return 0.0;
    double d = sign;
    for (int i = 0; i < m.rows; ++i) d *= lu(i, i);
    return d;
}

inline Vec solve(const Mat& m, const Vec& b, double tol = 1e-13) {
    Mat lu = m;
    std::vector<int> perm;
    if (detail::lu_factor(lu, perm, tol) == 0)
        throw SingularMatrixError("solve: singular system");
    const int n = m.rows;
    Vec y(n);
    for (int i = 0; i < n; ++i) {
        double s = b[perm[i]];
        for (int j = 0; j < i; ++j) s -= lu(i, j) * y[j];
        y[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int j = i + 1; j < n; ++j) s -= lu(i, j) * y[j];
        y[i] = s / lu(i, i);
    }
    return y;
}

inline Mat inverse(const Mat& m, double tol = 1e-13) {
    Mat lu = m;
    std::vector<int> perm;
    if (detail::lu_factor(lu, perm, tol) == 0)
        throw SingularMatrixError("inverse: matrix is singular to tolerance");
    const int n = m.rows;
    Mat inv(n, n);
    for (int c = 0; c < n; ++c) {
        Vec y(n);
        for (int i = 0; i < n; ++i) {
            double s = (perm[i] == c) ? 1.0 : 0.0;
            for (int j = 0; j < i; ++j) s -= lu(i, j) * y[j];
            y[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            for (int j = i + 1; j < n; ++j) s -= lu(i, j) * y[j];
            y[i] = s / lu(i, i);
        }
        for (int i = 0; i < n; ++i) inv(i, c) = y[i];
    }
    return inv;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> symmetric_eigenvalues(const Mat& m0) {
    Mat m = m0;
    const int n = m.rows;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(m(p, q)) < 1e-300) continue;
                double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    double mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Characteristic polynomial coefficients by the Faddeev-LeVerrier recurrence:
// p(x) = x^n + c[1] x^{n-1} + ... + c[n].
inline std::vector<double> char_poly(const Mat& m) {
    const int n = m.rows;
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    Mat acc = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        acc = m * acc;
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += acc(i, i);
        c[k] = -tr / k;
        for (int i = 0; i < n; ++i) acc(i, i) += c[k];
    }
    return c;
}

// All complex roots of the characteristic polynomial (Durand-Kerner).
inline std::vector<std::complex<double>> eigenvalues(const Mat& m) {
    using C = std::complex<double>;
    const int n = m.rows;
    std::vector<double> c = char_poly(m);
    auto eval = [&](C x) {
        C r(1.0, 0.0);
        for (int k = 1; k <= n; ++k) r = r * x + c[k];
        return r;
    };
    std::vector<C> z(n);
    for (int i = 0; i < n; ++i) z[i] = std::pow(C(0.4, 0.9), i + 1);
    for (int it = 0; it < 500; ++it) {
        double delta = 0.0;
        for (int i = 0; i < n; ++i) {
            C denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            C step = eval(z[i]) / denom;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14) break;
    }
    std::sort(z.begin(), z.end(), [](const C& x, const C& y) {
        if (std::abs(x.real() - y.real()) > 1e-12) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return z;
}

} // namespace spaceform
