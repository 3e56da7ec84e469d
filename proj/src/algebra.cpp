#include "biq/algebra.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace biq {

std::string to_string(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng rng_stream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed ^ splitmix64(stream)));
}

double uniform01(Rng& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

double gaussian(Rng& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex complex_gaussian(Rng& rng) {
    double re = gaussian(rng);
    double im = gaussian(rng);
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Quaternion haar_unit_quaternion(Rng& rng) {
    Quaternion q{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
    while (q.norm2() < 1e-12)
        q = Quaternion{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
    return q.normalized();
}

Quaternion quat_ad(const Quaternion& q, const Quaternion& v) {
    if (std::abs(q.norm2() - 1.0) > 1e-9)
        throw std::invalid_argument("quat_ad: q must be a unit quaternion");
    return q * v * q.conj();
}

std::array<std::array<double, 3>, 3> quat_rotation_matrix(const Quaternion& q) {
    double w = q.w, x = q.x, y = q.y, z = q.z;
    return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

// --- LieVector --------------------------------------------------------------

bool is_anti_hermitian_traceless(const Matrix& x, double tol) {
    double scale = std::max(1.0, x.norm());
    return (x + x.adjoint()).norm() <= tol * scale &&
           std::abs(x.trace()) <= tol * scale;
}

LieVector LieVector::su(Matrix m) {
    int n = int(m.rows());
    if (m.cols() != n || (n != 3 && n != 4 && n != 5))
        throw std::invalid_argument("LieVector::su: dimension must be 3, 4 or 5");
    if (!is_anti_hermitian_traceless(m))
        throw std::invalid_argument("LieVector::su: matrix is not anti-Hermitian traceless");
    return LieVector(std::move(m));
}

LieVector LieVector::s3s3(const Quaternion& v, const Quaternion& w) {
    if (v.w != 0.0 || w.w != 0.0)
        throw std::invalid_argument("LieVector::s3s3: components must be imaginary");
    return LieVector(QuatPair{v, w});
}

int LieVector::dim() const {
    return is_matrix() ? int(matrix().rows()) : 0;
}

static void require_same_kind(const LieVector& x, const LieVector& y) {
    if (x.is_matrix() != y.is_matrix() || x.dim() != y.dim())
        throw std::invalid_argument("LieVector: representation/dimension mismatch");
}

LieVector LieVector::operator+(const LieVector& o) const {
    require_same_kind(*this, o);
    if (is_matrix()) return unchecked_su(matrix() + o.matrix());
    return unchecked_pair(pair().a + o.pair().a, pair().b + o.pair().b);
}

LieVector LieVector::operator-(const LieVector& o) const {
    require_same_kind(*this, o);
    if (is_matrix()) return unchecked_su(matrix() - o.matrix());
    return unchecked_pair(pair().a - o.pair().a, pair().b - o.pair().b);
}

LieVector LieVector::operator*(double c) const {
    if (is_matrix()) return unchecked_su(matrix() * c);
    return unchecked_pair(pair().a * c, pair().b * c);
}

LieVector bracket(const LieVector& x, const LieVector& y) {
    require_same_kind(x, y);
    if (x.is_matrix())
        return LieVector(Matrix(x.matrix() * y.matrix() - y.matrix() * x.matrix()));
    return LieVector(QuatPair{qbracket(x.pair().a, y.pair().a),
                              qbracket(x.pair().b, y.pair().b)});
}

double inner0(const Matrix& x, const Matrix& y) {
    return -(x * y).trace().real();
}

double norm0(const Matrix& x) {
    return std::sqrt(std::max(0.0, inner0(x, x)));
}

double inner0(const LieVector& x, const LieVector& y) {
    require_same_kind(x, y);
    if (x.is_matrix()) return inner0(x.matrix(), y.matrix());
    return dot(x.pair().a, y.pair().a) + dot(x.pair().b, y.pair().b);
}

double norm0(const LieVector& x) {
    return std::sqrt(std::max(0.0, inner0(x, x)));
}

bool is_special_unitary(const Matrix& a, double tol) {
    int n = int(a.rows());
    if (a.cols() != n) return false;
    if ((a.adjoint() * a - Matrix::Identity(n, n)).norm() > tol) return false;
    return std::abs(a.determinant() - Complex(1, 0)) <= tol;
}

Matrix haar_su(int n, Rng& rng) {
    if (n != 3 && n != 4 && n != 5)
        throw std::invalid_argument("haar_su: n must be 3, 4 or 5");
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = complex_gaussian(rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        Complex d = r(j, j);
        Complex phase = (std::abs(d) > 0) ? d / std::abs(d) : Complex(1, 0);
        q.col(j) *= phase;
    }
    Complex det = q.determinant();
    q.col(n - 1) /= det;
    return q;
}

long long pair_gcd(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

Int128 elementary_symmetric(const std::vector<long long>& values, int degree) {
    int n = int(values.size());
    if (degree < 0 || degree > n)
        throw std::invalid_argument("elementary_symmetric: degree out of range");
    std::vector<Int128> e(size_t(degree) + 1, 0);
    e[0] = 1;
    for (long long v : values)
        for (int k = degree; k >= 1; --k) e[size_t(k)] += Int128(v) * e[size_t(k) - 1];
    return e[size_t(degree)];
}

} // namespace biq
