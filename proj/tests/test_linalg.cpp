#include <random>
#include <thread>

#include "doctest.h"
#include "nadosc/linalg.hpp"

using namespace nadosc;

namespace {

ComplexMatrix random_int_matrix(std::mt19937& rng, std::size_t rows,
                                std::size_t cols) {
    std::uniform_int_distribution<int> dist(-3, 3);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Complex(dist(rng), dist(rng));
    return m;
}

ComplexMatrix random_matrix(std::mt19937& rng, std::size_t rows,
                            std::size_t cols) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Complex(dist(rng), dist(rng));
    return m;
}

ComplexMatrix random_hermitian(std::mt19937& rng, std::size_t n) {
    ComplexMatrix g = random_matrix(rng, n, n);
    return g + g.dagger();
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("kron with identity factors") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix a = kron(i2, pauli(3));
    const ComplexMatrix expect_a(4, 4, {1, 0, 0, 0,   //
                                        0, -1, 0, 0,  //
                                        0, 0, 1, 0,   //
                                        0, 0, 0, -1});
    CHECK(a == expect_a);

    const ComplexMatrix b = kron(pauli(3), i2);
    const ComplexMatrix expect_b(4, 4, {1, 0, 0, 0,  //
                                        0, 1, 0, 0,  //
                                        0, 0, -1, 0, //
                                        0, 0, 0, -1});
    CHECK(b == expect_b);
}

TEST_CASE("kron of sigma_x with itself is the antidiagonal") {
    const ComplexMatrix m = kron(pauli(1), pauli(1));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(m(i, j) == (i + j == 3 ? Complex(1.0) : Complex(0.0)));
}

TEST_CASE("kron associativity is exact on integer entries") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = random_int_matrix(rng, 2, 3);
        const ComplexMatrix b = random_int_matrix(rng, 3, 2);
        const ComplexMatrix c = random_int_matrix(rng, 2, 2);
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    }
}

TEST_CASE("kron mixed product rule") {
    std::mt19937 rng(12);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = random_matrix(rng, 3, 2);
        const ComplexMatrix c = random_matrix(rng, 2, 3);
        const ComplexMatrix b = random_matrix(rng, 2, 4);
        const ComplexMatrix d = random_matrix(rng, 4, 2);
        const ComplexMatrix lhs = kron(a, b) * kron(c, d);
        const ComplexMatrix rhs = kron(a * c, b * d);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("bracket reproduces the Pauli algebra") {
    const Complex i(0.0, 1.0);
    CHECK(max_abs(bracket(pauli(1), pauli(2), BracketKind::Commutator) -
                  (2.0 * i) * pauli(3)) == 0.0);
    CHECK(max_abs(bracket(pauli(1), pauli(1), BracketKind::Commutator)) == 0.0);
    CHECK(max_abs(bracket(pauli(1), pauli(2), BracketKind::Anticommutator)) ==
          0.0);
}

TEST_CASE("bracket rejects mismatched dimensions") {
    CHECK_THROWS_AS(bracket(pauli(1), ComplexMatrix::identity(3),
                            BracketKind::Commutator),
                    std::invalid_argument);
    CHECK_THROWS_AS(bracket(ComplexMatrix(2, 3), ComplexMatrix(2, 3),
                            BracketKind::Commutator),
                    std::invalid_argument);
}

TEST_CASE("max_abs basics") {
    CHECK(max_abs(ComplexMatrix::zero(3, 2)) == 0.0);
    CHECK(max_abs(pauli(2)) == 1.0);
    CHECK(max_abs(Complex(0.0, 3.0) * ComplexMatrix::identity(2)) == 3.0);
}

TEST_CASE("herm_eigen on small exact cases") {
    const EigenResult rz = herm_eigen(pauli(3));
    CHECK(rz.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(rz.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    const EigenResult rx = herm_eigen(pauli(1));
    CHECK(rx.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(rx.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    const Complex i(0.0, 1.0);
    const ComplexMatrix m(2, 2, {2.0, i, -i, 2.0});
    const EigenResult rm = herm_eigen(m);
    CHECK(rm.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rm.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("herm_eigen rejects non-Hermitian input and reports the residual") {
    ComplexMatrix m(2, 2, {1.0, Complex(0.0, 0.5), 0.0, 1.0});
    try {
        herm_eigen(m, 1e-10);
        FAIL("expected HermiticityError");
    } catch (const HermiticityError& e) {
        CHECK(e.residual() == doctest::Approx(0.5));
    }
}

TEST_CASE("herm_eigen reconstruction, orthonormality and residual") {
    std::mt19937 rng(13);
    for (std::size_t n : {2ul, 3ul, 8ul, 24ul}) {
        const ComplexMatrix h = random_hermitian(rng, n);
        const EigenResult r = herm_eigen(h, 1e-10);
        const double scale = std::max(1.0, max_abs(h));

        for (std::size_t k = 0; k + 1 < n; ++k)
            CHECK(r.eigenvalues[k] <= r.eigenvalues[k + 1]);

        const ComplexMatrix vtv =
            r.eigenvectors.dagger() * r.eigenvectors -
            ComplexMatrix::identity(n);
        CHECK(max_abs(vtv) <= 1e-10);

        ComplexMatrix lam = ComplexMatrix::zero(n, n);
        for (std::size_t k = 0; k < n; ++k) lam(k, k) = r.eigenvalues[k];
        const ComplexMatrix rec =
            r.eigenvectors * lam * r.eigenvectors.dagger();
        CHECK(max_abs_diff(rec, h) <= 1e-9 * scale);

        CHECK(r.residual <= 1e-10 * scale);
    }
}

TEST_CASE("herm_eigen shift property") {
    std::mt19937 rng(14);
    const std::size_t n = 12;
    const ComplexMatrix h = random_hermitian(rng, n);
    const double c = 0.8125;
    ComplexMatrix shifted = h;
    shifted += c * ComplexMatrix::identity(n);
    const EigenResult a = herm_eigen(h);
    const EigenResult b = herm_eigen(shifted);
    for (std::size_t k = 0; k < n; ++k)
        CHECK(std::abs(a.eigenvalues[k] + c - b.eigenvalues[k]) <= 1e-10);
}

TEST_CASE("herm_eigen is deterministic") {
    std::mt19937 rng(15);
    const ComplexMatrix h = random_hermitian(rng, 16);
    const EigenResult a = herm_eigen(h);
    const EigenResult b = herm_eigen(h);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.eigenvectors == b.eigenvectors);
    CHECK(a.residual == b.residual);
}

TEST_CASE("concurrent eigensolves agree with the serial result") {
    std::mt19937 rng(17);
    const ComplexMatrix h1 = random_hermitian(rng, 20);
    const ComplexMatrix h2 = random_hermitian(rng, 24);
    const EigenResult serial1 = herm_eigen(h1);
    const EigenResult serial2 = herm_eigen(h2);

    EigenResult par1, par2;
    std::thread t1([&] { par1 = herm_eigen(h1); });
    std::thread t2([&] { par2 = herm_eigen(h2); });
    t1.join();
    t2.join();
    CHECK(par1.eigenvalues == serial1.eigenvalues);
    CHECK(par1.eigenvectors == serial1.eigenvectors);
    CHECK(par2.eigenvalues == serial2.eigenvalues);
    CHECK(par2.eigenvectors == serial2.eigenvectors);
}

TEST_CASE("structured kronecker products match the dense route") {
    std::mt19937 rng(16);
    const std::size_t r = 5, k = 3;
    const ComplexMatrix m = random_matrix(rng, r, r);
    const ComplexMatrix h = random_matrix(rng, r * k, r * k);
    const ComplexMatrix ik = ComplexMatrix::identity(k);

    CHECK(max_abs_diff(kron_left_times(m, k, h), kron(m, ik) * h) <= 1e-12);
    CHECK(max_abs_diff(times_kron_left(h, m, k), h * kron(m, ik)) <= 1e-12);
    CHECK(max_abs_diff(commutator_kron_left(m, k, h),
                       bracket(kron(m, ik), h, BracketKind::Commutator)) <=
          1e-12);

    const ComplexMatrix s = random_matrix(rng, k, k);
    CHECK(max_abs_diff(
              commutator_kron_right(r, s, h),
              bracket(kron(ComplexMatrix::identity(r), s), h,
                      BracketKind::Commutator)) <= 1e-12);
}

}  // TEST_SUITE
