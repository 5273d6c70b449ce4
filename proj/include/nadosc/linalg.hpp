// Dense complex matrix algebra and a deterministic Hermitian eigensolver.
// Everything in this project is built on top of ComplexMatrix.

#ifndef NADOSC_LINALG_HPP
#define NADOSC_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace nadosc {

using Complex = std::complex<double>;

/// Thrown when an operand fails the Hermiticity gate of herm_eigen.
class HermiticityError : public std::runtime_error {
public:
    HermiticityError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Thrown when the eigensolver exceeds its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense complex matrix, row-major storage. Immutable by convention once
/// built (all operations return new values).
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("ComplexMatrix: dimensions must be >= 1");
    }

    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::initializer_list<Complex> entries)
        : ComplexMatrix(rows, cols) {
        if (entries.size() != a_.size())
            throw std::invalid_argument("ComplexMatrix: entry count mismatch");
        std::size_t k = 0;
        for (const Complex& z : entries) a_[k++] = z;
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols);
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return a_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_ && rows_ > 0; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    const Complex* data() const noexcept { return a_.data(); }
    Complex* data() noexcept { return a_.data(); }

    ComplexMatrix dagger() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        a -= b;
        return a;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        a *= s;
        return a;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        a *= s;
        return a;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) {
        a *= Complex(s, 0.0);
        return a;
    }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) {
        a *= Complex(s, 0.0);
        return a;
    }
    ComplexMatrix operator-() const { return *this * Complex(-1.0, 0.0); }

    /// Matrix product (BLAS zgemm underneath).
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    bool operator==(const ComplexMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> a_;
};

/// Kronecker product; block (i,j) of the result equals a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class BracketKind { Commutator, Anticommutator };

/// ab - ba or ab + ba for square operands of equal dimension.
ComplexMatrix bracket(const ComplexMatrix& a, const ComplexMatrix& b,
                      BracketKind kind);

/// Max modulus over all entries.
double max_abs(const ComplexMatrix& a);

/// max_abs(a - b) without forming the difference.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_abs(a - a†).
double hermiticity_residual(const ComplexMatrix& a);

/// Pauli matrix sigma_k for k in {1,2,3}.
ComplexMatrix pauli(int k);

struct EigenResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, paired with eigenvalues
    double residual = 0.0;            // max |H v - lambda v| over pairs
};

/// Full eigendecomposition of a Hermitian matrix.
///
/// Deterministic: Householder reduction to real tridiagonal form followed by
/// implicit-shift QL with fixed sweep order, no pivot randomization. Input
/// whose Hermiticity residual exceeds `tol` is rejected with HermiticityError.
EigenResult herm_eigen(const ComplexMatrix& h, double tol = 1e-10);

/// (m kron I_k) * h  computed without materializing the Kronecker factor.
ComplexMatrix kron_left_times(const ComplexMatrix& m, std::size_t k,
                              const ComplexMatrix& h);

/// h * (m kron I_k) computed without materializing the Kronecker factor.
ComplexMatrix times_kron_left(const ComplexMatrix& h, const ComplexMatrix& m,
                              std::size_t k);

/// [m kron I_k, h]; equals bracket(kron(m, I_k), h, Commutator) up to rounding
/// but skips the structurally zero work.
ComplexMatrix commutator_kron_left(const ComplexMatrix& m, std::size_t k,
                                   const ComplexMatrix& h);

/// [I_k kron m, h], exploiting the block structure the same way.
ComplexMatrix commutator_kron_right(std::size_t k, const ComplexMatrix& m,
                                    const ComplexMatrix& h);

}  // namespace nadosc

#endif  // NADOSC_LINALG_HPP
