#ifndef BIQ_BAZAIKIN_HPP
#define BIQ_BAZAIKIN_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biq/cheeger.hpp"
#include "biq/witness.hpp"

namespace biq::baz {

using Tuple5 = std::array<long long, 5>;

/// Weights of the Sp(2).S^1 action
/// [A,z] * B = diag(z^{q1},...,z^{q5}) B diag(A^, conj(z)^q) on SU(5).
struct BazParams {
    Tuple5 q{};
    bool relaxed_parity = false; // exploratory scans may carry even entries

    BazParams() = default;
    explicit BazParams(Tuple5 q_, bool relaxed = false);

    long long q_sum() const { return q[0] + q[1] + q[2] + q[3] + q[4]; }
};

/// A = S + T j in Sp(2), stored by its complex blocks.
struct Sp2Element {
    Eigen::Matrix2cd S = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd T = Eigen::Matrix2cd::Zero();

    Eigen::Matrix4cd embed4() const; // (S T; -conj T conj S)
    Matrix embed5() const;           // diag(embed4, 1)
};

/// diag(A^, 1) in SU(5); throws unless S + Tj is quaternionic-unitary.
Matrix sp2_embed(const Eigen::Matrix2cd& s, const Eigen::Matrix2cd& t);

/// Haar element of Sp(2): quaternionic Gram-Schmidt of a Gaussian 2x2
/// quaternion matrix.
Sp2Element haar_sp2(Rng& rng);

/// Free iff all q_i odd and every two disjoint index pairs have
/// gcd(q_i + q_j, q_k + q_l) = 2.  Throws on an even entry.
bool is_free(const BazParams& params);

enum class BazCurv {
    POSITIVE,
    QUASI_POSITIVE,
    ALMOST_POSITIVE_11111m1,
    UNKNOWN_NONNEGATIVE,
};

std::string to_string(BazCurv c);

struct BazClassification {
    BazCurv curv = BazCurv::UNKNOWN_NONNEGATIVE;
    /// n when the tuple is (sign/permutation) equivalent to (1,1,1,n,-n),
    /// including the (1,1,-3,n,-n) presentations of the same spaces.
    std::optional<long long> boundary_n;
};

/// Requires is_free; POSITIVE iff all pairwise sums are positive after sign
/// normalization, ALMOST_POSITIVE_11111m1 iff equivalent to (1,1,1,1,-1),
/// QUASI_POSITIVE iff some signed reordering has four positive entries.
BazClassification classify_curvature(const BazParams& params);

std::optional<long long> boundary_family_normalize(const BazParams& params);

/// Vertical direction at A modulo sp(2): Ad_{A*} Q - diag(0,0,0,0, i q).
Matrix vertical_vector(const BazParams& params, const Matrix& a);

/// Residual of the W1 equation: sum_l |a_{l5}|^2 q_l - q.
double w1_residual(const BazParams& params, const Matrix& a);

struct W2Range {
    double min = 0.0, max = 0.0;
    Sp2Element argmin;
};

/// Range of g(k) = sum_l (|(Ak)_{l2}|^2 + |(Ak)_{l4}|^2) q_l over k in Sp(2).
/// g(k) = tr(P_L M4) with M4 the top 4x4 block of A* diag(q) A and L the
/// quaternionic line k(span{e2,e4}); the range is exactly twice the extreme
/// eigenvalues of the quaternion-Hermitian part of M4.
W2Range w2_range(const BazParams& params, const Matrix& a);

/// Direct evaluation of g at one k (validation path).
double w2_value(const BazParams& params, const Matrix& a, const Sp2Element& k);

/// True iff W1 is horizontal at A or Ad_k W2^ is horizontal for some k in
/// Sp(2); carries a witness plane validated against the full horizontality
/// condition (orthogonal to the vertical direction and to sp(2)) and the
/// zero-curvature test.
std::pair<bool, HorizontalityReport> has_horizontal_zero_plane(
    const BazParams& params, const Matrix& a, const Tolerances& tol = {});

struct InvariantRecord {
    Int128 s = 0;  // order of H^6 = H^8
    Int128 p1 = 0; // first Pontrjagin class
};

/// s = |sigma_3(q, -sum q)| / 8 and p1 = -sigma_2(q, -sum q), exact integers;
/// throws if sigma_3 is not divisible by 8.
InvariantRecord invariants(const BazParams& params);

struct FamilyRow {
    long long n = 1;
    bool free = false;
    BazClassification cls;
    Int128 s = 0, p1 = 0;
};

/// Rows for the spaces with weights (1,1,1,n,-n), n = 1, 3, ..., n_max.
std::vector<FamilyRow> family_table(long long n_max);

Matrix w1_vector();     // diag(i,i,i,i,-4i)
Matrix w2_hat_vector(); // diag(2i,-3i,2i,-3i,2i)

/// Embedded sp(2) basis inside su(5) (for orthogonality checks).
std::array<Matrix, 10> sp2_basis5();
/// Basis of m = sp(2)-perp inside su(4), embedded in su(5).
std::array<Matrix, 5> m_basis5();

/// Haar SU(5) point rotated so a_{55} = 0 (the locus of the n = 1 space).
Matrix a55_zero_point(Rng& rng);

/// Free tuples with all |q_i| <= bound, up to permutation and global sign
/// (canonical: sorted ascending, lexicographically maximal of the two signs).
std::vector<BazParams> enumerate_free_canonical(long long bound);

} // namespace biq::baz

#endif
