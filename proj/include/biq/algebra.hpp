#ifndef BIQ_ALGEBRA_HPP
#define BIQ_ALGEBRA_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "biq/quaternion.hpp"

namespace biq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Int128 = __int128;

std::string to_string(Int128 v);

// ---------------------------------------------------------------------------
// Deterministic RNG plumbing.  All sampling takes an explicit generator; a
// campaign derives one generator per work item from (seed, index) so results
// do not depend on the worker count.
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
Rng rng_stream(std::uint64_t seed, std::uint64_t stream);

/// Uniform in [0,1), built from the top 53 bits of the generator output so the
/// stream is identical on every platform.
double uniform01(Rng& rng);
/// Standard normal via Box-Muller on uniform01 (no hidden state).
double gaussian(Rng& rng);
Complex complex_gaussian(Rng& rng);

Quaternion haar_unit_quaternion(Rng& rng);

// ---------------------------------------------------------------------------
// Lie vectors: either an anti-Hermitian traceless n x n matrix (su(n),
// n in {3,4,5}) or a pair of imaginary quaternions (the Lie algebra of
// S^3 x S^3).
// ---------------------------------------------------------------------------

struct QuatPair {
    Quaternion a, b;
};

class LieVector {
public:
    /// Wraps an su(n) matrix; throws if X is not anti-Hermitian traceless
    /// (relative tolerance 1e-12) or n is not 3, 4 or 5.
    static LieVector su(Matrix m);
    /// Wraps a pair of imaginary quaternions; throws if either has Re != 0.
    static LieVector s3s3(const Quaternion& v, const Quaternion& w);

    bool is_matrix() const { return std::holds_alternative<Matrix>(rep_); }
    int dim() const;
    const Matrix& matrix() const { return std::get<Matrix>(rep_); }
    const QuatPair& pair() const { return std::get<QuatPair>(rep_); }

    LieVector operator+(const LieVector& o) const;
    LieVector operator-(const LieVector& o) const;
    LieVector operator*(double c) const;

private:
    explicit LieVector(Matrix m) : rep_(std::move(m)) {}
    explicit LieVector(QuatPair p) : rep_(p) {}
    friend LieVector bracket(const LieVector&, const LieVector&);
    friend class unchecked;

    std::variant<Matrix, QuatPair> rep_;

public:
    /// Trusted constructor for internal results (brackets, projections).
    static LieVector unchecked_su(Matrix m) { return LieVector(std::move(m)); }
    static LieVector unchecked_pair(const Quaternion& v, const Quaternion& w) {
        return LieVector(QuatPair{v, w});
    }
};

/// [X,Y]; matrix commutator, or componentwise quaternion bracket.
LieVector bracket(const LieVector& x, const LieVector& y);

/// Bi-invariant form: -Re tr(XY) on su(n), sum of Im H dot products on pairs.
double inner0(const LieVector& x, const LieVector& y);
double norm0(const LieVector& x);

double inner0(const Matrix& x, const Matrix& y);
double norm0(const Matrix& x);

bool is_special_unitary(const Matrix& a, double tol = 1e-10);
bool is_anti_hermitian_traceless(const Matrix& x, double tol = 1e-12);

/// Haar-distributed element of SU(n): QR of a complex Gaussian matrix, phases
/// of the R diagonal absorbed into Q, then the determinant phase pushed into
/// the last column.
Matrix haar_su(int n, Rng& rng);

/// gcd(|a|,|b|) with gcd(0,0) = 0, so degenerate pairs never pass the
/// freeness tests "= 1" and "= 2".
long long pair_gcd(long long a, long long b);

/// Elementary symmetric polynomial sigma_degree(values), exact integers.
Int128 elementary_symmetric(const std::vector<long long>& values, int degree);

} // namespace biq

#endif
