#include "nadosc/linalg.hpp"

#include <algorithm>
#include <cblas.h>
#include <cmath>
#include <limits>
#include <numeric>

namespace nadosc {

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = std::conj((*this)(i, j));
    return r;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix subtract: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& z : a_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix multiply: inner dimension mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    const Complex one(1.0, 0.0), zero(0.0, 0.0);
    cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans,
                static_cast<int>(a.rows()), static_cast<int>(b.cols()),
                static_cast<int>(a.cols()), &one, a.data(),
                static_cast<int>(a.cols()), b.data(), static_cast<int>(b.cols()),
                &zero, c.data(), static_cast<int>(c.cols()));
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("kron: empty operand");
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

ComplexMatrix bracket(const ComplexMatrix& a, const ComplexMatrix& b,
                      BracketKind kind) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument(
            "bracket: operands must be square with equal dimension");
    ComplexMatrix ab = a * b;
    ComplexMatrix ba = b * a;
    return kind == BracketKind::Commutator ? ab - ba : ab + ba;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    const Complex* p = a.data();
    const std::size_t n = a.rows() * a.cols();
    for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(p[k]));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    const Complex* pa = a.data();
    const Complex* pb = b.data();
    const std::size_t n = a.rows() * a.cols();
    for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(pa[k] - pb[k]));
    return m;
}

double hermiticity_residual(const ComplexMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("hermiticity_residual: matrix not square");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

ComplexMatrix pauli(int k) {
    const Complex i(0.0, 1.0);
    switch (k) {
        case 1: return ComplexMatrix(2, 2, {0, 1, 1, 0});
        case 2: return ComplexMatrix(2, 2, {0, -i, i, 0});
        case 3: return ComplexMatrix(2, 2, {1, 0, 0, -1});
        default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
}

namespace {

// Householder reflectors produced while reducing to tridiagonal form.
// Each entry holds the normalized vector u acting on trailing rows k+1..n-1.
struct Reflector {
    std::size_t offset = 0;        // first row index the reflector touches
    std::vector<Complex> u;        // empty when the column needed no work
};

// Implicit-shift QL on a real symmetric tridiagonal (d, e), rotations
// accumulated into the rows of zt (zt row i holds component i of every
// eigenvector). Deterministic sweep order; throws on iteration cap.
void tql_implicit(std::vector<double>& d, std::vector<double>& e,
                  std::vector<Complex>& zt, std::size_t n) {
    constexpr int kMaxIter = 100;
    if (n == 0) return;
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            std::size_t m = l;
            while (m + 1 < n) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
                    break;
                ++m;
            }
            if (m == l) break;
            if (++iter > kMaxIter)
                throw ConvergenceError(
                    "herm_eigen: tridiagonal QL exceeded iteration cap");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                Complex* zi = &zt[i * n];
                Complex* zj = &zt[(i + 1) * n];
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex f2 = zj[k];
                    zj[k] = s * zi[k] + c * f2;
                    zi[k] = c * zi[k] - s * f2;
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

}  // namespace

EigenResult herm_eigen(const ComplexMatrix& h, double tol) {
    if (!h.is_square())
        throw std::invalid_argument("herm_eigen: matrix not square");
    const double hres = hermiticity_residual(h);
    if (!(hres <= tol))
        throw HermiticityError("herm_eigen: input fails Hermiticity gate", hres);

    const std::size_t n = h.rows();

    // Exact symmetrization; a no-op for exactly Hermitian input.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    EigenResult out;
    if (n == 1) {
        out.eigenvalues = {a(0, 0).real()};
        out.eigenvectors = ComplexMatrix::identity(1);
        out.residual = std::abs(h(0, 0) - Complex(a(0, 0).real(), 0.0));
        return out;
    }

    // Householder reduction to complex tridiagonal form.
    std::vector<Reflector> refl;
    refl.reserve(n > 2 ? n - 2 : 0);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t len = n - k - 1;
        double sigma2 = 0.0;
        for (std::size_t r = 0; r < len; ++r)
            sigma2 += std::norm(a(k + 1 + r, k));
        const double sigma = std::sqrt(sigma2);
        Reflector rf;
        rf.offset = k + 1;
        if (sigma == 0.0) {
            refl.push_back(std::move(rf));
            continue;
        }
        const Complex x0 = a(k + 1, k);
        const Complex phase =
            (std::abs(x0) == 0.0) ? Complex(1.0, 0.0) : x0 / std::abs(x0);
        const Complex alpha = -phase * sigma;

        std::vector<Complex> u(len);
        for (std::size_t r = 0; r < len; ++r) u[r] = a(k + 1 + r, k);
        u[0] -= alpha;
        double unorm2 = 0.0;
        for (const Complex& z : u) unorm2 += std::norm(z);
        if (unorm2 == 0.0) {
            refl.push_back(std::move(rf));
            continue;
        }
        const double inv = 1.0 / std::sqrt(unorm2);
        for (Complex& z : u) z *= inv;

        // Rank-2 update of the trailing block: B <- B - 2 u q^H - 2 q u^H
        // with w = B u, c = u^H w, q = w - c u.
        std::vector<Complex> w(len, Complex(0.0, 0.0));
        for (std::size_t r = 0; r < len; ++r) {
            const Complex* row = &a(k + 1 + r, k + 1);
            Complex acc = 0.0;
            for (std::size_t s = 0; s < len; ++s) acc += row[s] * u[s];
            w[r] = acc;
        }
        Complex c = 0.0;
        for (std::size_t r = 0; r < len; ++r) c += std::conj(u[r]) * w[r];
        std::vector<Complex> q(len);
        for (std::size_t r = 0; r < len; ++r) q[r] = w[r] - c * u[r];
        for (std::size_t r = 0; r < len; ++r) {
            Complex* row = &a(k + 1 + r, k + 1);
            const Complex ur = u[r], qr = q[r];
            for (std::size_t s = 0; s < len; ++s)
                row[s] -= 2.0 * (ur * std::conj(q[s]) + qr * std::conj(u[s]));
        }

        a(k + 1, k) = alpha;
        a(k, k + 1) = std::conj(alpha);
        for (std::size_t r = 1; r < len; ++r) {
            a(k + 1 + r, k) = 0.0;
            a(k, k + 1 + r) = 0.0;
        }
        refl.push_back(std::move(rf));
        refl.back().u = std::move(u);
    }

    // Diagonal phase transform making the subdiagonal real non-negative.
    std::vector<double> d(n), e(n, 0.0);
    std::vector<Complex> dphase(n, Complex(1.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
    for (std::size_t i = 1; i < n; ++i) {
        const Complex t = a(i, i - 1);
        const double mag = std::abs(t);
        const Complex ph = (mag == 0.0) ? Complex(1.0, 0.0) : t / mag;
        dphase[i] = ph * dphase[i - 1];
        e[i - 1] = mag;
    }

    // QL sweep on the real tridiagonal, eigenvectors in transposed storage.
    std::vector<Complex> zt(n * n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) zt[i * n + i] = 1.0;
    tql_implicit(d, e, zt, n);

    // Assemble eigenvectors: V = H_0 ... H_{n-3} (Dphase Z).
    ComplexMatrix v(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) v(r, c) = dphase[r] * zt[c * n + r];
    for (std::size_t idx = refl.size(); idx-- > 0;) {
        const Reflector& rf = refl[idx];
        if (rf.u.empty()) continue;
        const std::size_t len = rf.u.size();
        std::vector<Complex> wrow(n, Complex(0.0, 0.0));
        for (std::size_t r = 0; r < len; ++r) {
            const Complex uc = std::conj(rf.u[r]);
            const Complex* row = &v(rf.offset + r, 0);
            for (std::size_t c = 0; c < n; ++c) wrow[c] += uc * row[c];
        }
        for (std::size_t r = 0; r < len; ++r) {
            const Complex ur = 2.0 * rf.u[r];
            Complex* row = &v(rf.offset + r, 0);
            for (std::size_t c = 0; c < n; ++c) row[c] -= ur * wrow[c];
        }
    }

    // Ascending sort, stable in the original column order.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.eigenvalues[c] = d[perm[c]];
        for (std::size_t r = 0; r < n; ++r)
            out.eigenvectors(r, c) = v(r, perm[c]);
    }

    // Residual max |H v - lambda v| against the original input.
    ComplexMatrix hv = h * out.eigenvectors;
    double res = 0.0;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            res = std::max(res, std::abs(hv(r, c) -
                                         out.eigenvalues[c] *
                                             out.eigenvectors(r, c)));
    out.residual = res;
    return out;
}

ComplexMatrix kron_left_times(const ComplexMatrix& m, std::size_t k,
                              const ComplexMatrix& h) {
    if (!m.is_square() || k == 0 || h.rows() != m.rows() * k)
        throw std::invalid_argument("kron_left_times: shape mismatch");
    const std::size_t r = m.rows();
    const std::size_t flat = k * h.cols();
    ComplexMatrix out(h.rows(), h.cols());
    const Complex one(1.0, 0.0), zero(0.0, 0.0);
    // (m kron I_k) h: contract the leading block index; h viewed r x (k*cols).
    cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(r),
                static_cast<int>(flat), static_cast<int>(r), &one, m.data(),
                static_cast<int>(r), h.data(), static_cast<int>(flat), &zero,
                out.data(), static_cast<int>(flat));
    return out;
}

ComplexMatrix times_kron_left(const ComplexMatrix& h, const ComplexMatrix& m,
                              std::size_t k) {
    if (!m.is_square() || k == 0 || h.cols() != m.rows() * k)
        throw std::invalid_argument("times_kron_left: shape mismatch");
    ComplexMatrix ht(h.cols(), h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) ht(j, i) = h(i, j);
    ComplexMatrix mt(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mt(j, i) = m(i, j);
    ComplexMatrix prod = kron_left_times(mt, k, ht);
    ComplexMatrix out(h.rows(), h.cols());
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) out(j, i) = prod(i, j);
    return out;
}

ComplexMatrix commutator_kron_left(const ComplexMatrix& m, std::size_t k,
                                   const ComplexMatrix& h) {
    return kron_left_times(m, k, h) - times_kron_left(h, m, k);
}

ComplexMatrix commutator_kron_right(std::size_t k, const ComplexMatrix& m,
                                    const ComplexMatrix& h) {
    if (!m.is_square() || k == 0 || h.rows() != m.rows() * k ||
        h.rows() != h.cols())
        throw std::invalid_argument("commutator_kron_right: shape mismatch");
    const std::size_t s = m.rows();
    const std::size_t n = h.rows();
    ComplexMatrix out(n, n);
    const Complex one(1.0, 0.0), zero(0.0, 0.0), minus(-1.0, 0.0);
    // (I_k kron m) h: per block row; h (I_k kron m): per block column.
    for (std::size_t b = 0; b < k; ++b)
        cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans,
                    static_cast<int>(s), static_cast<int>(n),
                    static_cast<int>(s), &one, m.data(), static_cast<int>(s),
                    h.data() + b * s * n, static_cast<int>(n), &zero,
                    out.data() + b * s * n, static_cast<int>(n));
    for (std::size_t b = 0; b < k; ++b)
        cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans,
                    static_cast<int>(n), static_cast<int>(s),
                    static_cast<int>(s), &minus, h.data() + b * s,
                    static_cast<int>(n), m.data(), static_cast<int>(s), &one,
                    out.data() + b * s, static_cast<int>(n));
    return out;
}

}  // namespace nadosc
