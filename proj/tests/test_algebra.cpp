#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "biq/algebra.hpp"

using namespace biq;

namespace {

Matrix idiag3(double a, double b, double c) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = Complex(0, a);
    m(1, 1) = Complex(0, b);
    m(2, 2) = Complex(0, c);
    return m;
}

LieVector random_su3(Rng& rng) {
    Matrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = complex_gaussian(rng);
    Matrix x = 0.5 * (m - m.adjoint());
    Complex tr = x.trace() / 3.0;
    for (int i = 0; i < 3; ++i) x(i, i) -= tr;
    return LieVector::su(x);
}

} // namespace

TEST_CASE("bracket examples") {
    LieVector x = LieVector::su(idiag3(1, -1, 0));
    CHECK(norm0(bracket(x, x)) == doctest::Approx(0.0));

    LieVector y = LieVector::su(idiag3(0, 1, -1));
    CHECK(norm0(bracket(x, y)) == doctest::Approx(0.0)); // commuting diagonals

    // [i diag(-2,1,1), E12 - E21] has entries -3i at (1,2) and (2,1)
    Matrix e = Matrix::Zero(3, 3);
    e(0, 1) = 1;
    e(1, 0) = -1;
    LieVector a = LieVector::su(idiag3(-2, 1, 1));
    LieVector b = LieVector::su(e);
    Matrix c = bracket(a, b).matrix();
    CHECK(std::abs(c(0, 1) - Complex(0, -3)) < 1e-12);
    CHECK(std::abs(c(1, 0) - Complex(0, -3)) < 1e-12);
    c(0, 1) = c(1, 0) = 0;
    CHECK(c.norm() < 1e-12);
}

TEST_CASE("bracket rejects mismatched representations") {
    LieVector x = LieVector::su(idiag3(1, -1, 0));
    LieVector p = LieVector::s3s3(Quaternion::i(), Quaternion::j());
    CHECK_THROWS_AS((void)bracket(x, p), std::invalid_argument);
}

TEST_CASE("bracket bilinearity and Jacobi identity on random triples") {
    Rng rng = rng_stream(7, 0);
    for (int it = 0; it < 50; ++it) {
        LieVector x = random_su3(rng), y = random_su3(rng), z = random_su3(rng);
        double s = norm0(x) * norm0(y) * norm0(z);
        LieVector jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                        bracket(z, bracket(x, y));
        CHECK(norm0(jac) <= 1e-9 * std::max(1.0, s));
        LieVector lin = bracket(x + y * 2.0, z) - (bracket(x, z) + bracket(y, z) * 2.0);
        CHECK(norm0(lin) <= 1e-9 * std::max(1.0, s));
    }
}

TEST_CASE("inner0 examples and symmetry") {
    LieVector x = LieVector::su(idiag3(1, -1, 0));
    CHECK(inner0(x, x) == doctest::Approx(2.0)); // -Re tr(X^2) = 1 + 1

    Rng rng = rng_stream(8, 0);
    for (int it = 0; it < 20; ++it) {
        LieVector a = random_su3(rng), b = random_su3(rng);
        CHECK(inner0(a, b) == doctest::Approx(inner0(b, a)));
    }
}

TEST_CASE("inner0 is Ad-invariant and bi-invariant") {
    Rng rng = rng_stream(9, 0);
    for (int it = 0; it < 20; ++it) {
        Matrix u = haar_su(3, rng);
        LieVector x = random_su3(rng), y = random_su3(rng);
        LieVector ax = LieVector::su(Matrix(u * x.matrix() * u.adjoint()));
        LieVector ay = LieVector::su(Matrix(u * y.matrix() * u.adjoint()));
        CHECK(std::abs(inner0(ax, ay) - inner0(x, y)) < 1e-10 * std::max(1.0, norm0(x) * norm0(y)));

        LieVector z = random_su3(rng);
        double lhs = inner0(x, bracket(y, z)) + inner0(bracket(y, x), z);
        CHECK(std::abs(lhs) < 1e-9 * std::max(1.0, norm0(x) * norm0(y) * norm0(z)));
    }
}

TEST_CASE("haar_su produces special unitaries") {
    Rng rng = rng_stream(10, 0);
    for (int n : {3, 4, 5}) {
        for (int it = 0; it < 25; ++it) {
            Matrix a = haar_su(n, rng);
            CHECK((a.adjoint() * a - Matrix::Identity(n, n)).norm() <= 1e-10);
            CHECK(std::abs(a.determinant() - Complex(1, 0)) <= 1e-10);
        }
    }
}

TEST_CASE("haar_su entry moments match the Haar measure") {
    // |a_ij|^2 has mean 1/n and variance (n-1)/(n^2 (n+1)).
    const int n = 3, samples = 10000;
    Rng rng = rng_stream(11, 0);
    Eigen::Matrix3d mean = Eigen::Matrix3d::Zero();
    for (int s = 0; s < samples; ++s) {
        Matrix a = haar_su(n, rng);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mean(i, j) += std::norm(a(i, j));
    }
    mean /= samples;
    double sigma = std::sqrt((n - 1.0) / (n * n * (n + 1.0)) / samples);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(std::abs(mean(i, j) - 1.0 / n) < 3 * sigma + 1e-12);
}

TEST_CASE("haar_su distribution is invariant under fixed left factors") {
    const int n = 3, samples = 10000;
    Rng rng = rng_stream(12, 0);
    Rng urng = rng_stream(13, 0);
    Matrix u = haar_su(n, urng);
    double m00 = 0, lm00 = 0;
    for (int s = 0; s < samples; ++s) {
        Matrix a = haar_su(n, rng);
        m00 += std::norm(a(0, 0));
        lm00 += std::norm((u * a)(0, 0));
    }
    m00 /= samples;
    lm00 /= samples;
    double sigma = std::sqrt((n - 1.0) / (n * n * (n + 1.0)) / samples);
    CHECK(std::abs(m00 - lm00) < 5 * sigma);
}

TEST_CASE("pair_gcd convention") {
    CHECK(pair_gcd(1, -1) == 1);
    CHECK(pair_gcd(0, 0) == 0);
    CHECK(pair_gcd(4, 6) == 2);
    CHECK(pair_gcd(-4, 6) == 2);
    CHECK(pair_gcd(0, 5) == 5);
}

TEST_CASE("elementary_symmetric frozen values") {
    std::vector<long long> v = {1, 1, 1, 1, -1, -3};
    CHECK(elementary_symmetric(v, 0) == 1);
    CHECK(elementary_symmetric(v, 1) == 0);
    CHECK(elementary_symmetric(v, 2) == -7);
    CHECK(elementary_symmetric(v, 3) == -8);
    CHECK_THROWS_AS((void)elementary_symmetric(v, 7), std::invalid_argument);
}

TEST_CASE("elementary_symmetric agrees with the polynomial expansion oracle") {
    // prod (x + a_i) = sum sigma_k x^{n-k}
    Rng rng = rng_stream(14, 0);
    for (int it = 0; it < 200; ++it) {
        std::vector<long long> v(6);
        for (auto& x : v) x = (long long)(uniform01(rng) * 2000001) - 1000000;
        std::vector<Int128> coeff = {1};
        for (long long a : v) {
            std::vector<Int128> next(coeff.size() + 1, 0);
            for (size_t i = 0; i < coeff.size(); ++i) {
                next[i] += coeff[i];
                next[i + 1] += coeff[i] * a;
            }
            coeff = next;
        }
        for (int k = 0; k <= 6; ++k)
            CHECK(elementary_symmetric(v, k) == coeff[size_t(k)]);
    }
}

TEST_CASE("quat_ad examples") {
    Quaternion i = Quaternion::i(), j = Quaternion::j();
    Quaternion r = quat_ad(Quaternion::one(), i);
    CHECK((r - i).norm() < 1e-15);
    r = quat_ad(j, i);
    CHECK((r + i).norm() < 1e-15); // j i j^{-1} = -i

    Rng rng = rng_stream(15, 0);
    for (int it = 0; it < 50; ++it) {
        Quaternion q = haar_unit_quaternion(rng);
        Quaternion v = Quaternion::imag(gaussian(rng), gaussian(rng), gaussian(rng));
        Quaternion w = quat_ad(q, v);
        CHECK(std::abs(w.w) < 1e-12 * std::max(1.0, v.norm()));
        CHECK(w.norm() == doctest::Approx(v.norm()));
    }
    CHECK_THROWS_AS((void)quat_ad(Quaternion(2, 0, 0, 0), i), std::invalid_argument);
}

TEST_CASE("quat_ad matches the rotation-matrix formula") {
    Rng rng = rng_stream(16, 0);
    for (int it = 0; it < 100; ++it) {
        Quaternion q = haar_unit_quaternion(rng);
        Quaternion v = Quaternion::imag(gaussian(rng), gaussian(rng), gaussian(rng));
        auto rot = quat_rotation_matrix(q);
        double rx = rot[0][0] * v.x + rot[0][1] * v.y + rot[0][2] * v.z;
        double ry = rot[1][0] * v.x + rot[1][1] * v.y + rot[1][2] * v.z;
        double rz = rot[2][0] * v.x + rot[2][1] * v.y + rot[2][2] * v.z;
        Quaternion w = quat_ad(q, v);
        CHECK(std::abs(w.x - rx) < 1e-12 * std::max(1.0, v.norm()));
        CHECK(std::abs(w.y - ry) < 1e-12 * std::max(1.0, v.norm()));
        CHECK(std::abs(w.z - rz) < 1e-12 * std::max(1.0, v.norm()));
    }
}

TEST_CASE("LieVector validates construction invariants") {
    Matrix bad = Matrix::Identity(3, 3);
    CHECK_THROWS_AS((void)LieVector::su(bad), std::invalid_argument);
    CHECK_THROWS_AS((void)LieVector::s3s3(Quaternion::one(), Quaternion::i()),
                    std::invalid_argument);
    Matrix six = Matrix::Zero(6, 6);
    CHECK_THROWS_AS((void)LieVector::su(six), std::invalid_argument);
}

TEST_CASE("int128 to_string") {
    CHECK(to_string(Int128(0)) == "0");
    CHECK(to_string(Int128(-8)) == "-8");
    Int128 big = Int128(1000000000000000000LL) * 20;
    CHECK(to_string(big) == "20000000000000000000");
}
