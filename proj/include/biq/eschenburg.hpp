#ifndef BIQ_ESCHENBURG_HPP
#define BIQ_ESCHENBURG_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "biq/cheeger.hpp"
#include "biq/witness.hpp"

namespace biq::esch {

using biq::HorizontalityReport;
using biq::PlaneWitness;
using biq::Tolerances;

using Triple = std::array<long long, 3>;

/// Weights of the circle action z * A = diag(z^p) A diag(conj(z)^q) on SU(3).
struct EschParams {
    Triple p{}, q{};

    EschParams() = default;
    /// Throws unless sum(p) == sum(q).
    EschParams(Triple p_, Triple q_);
};

/// Generators P = i diag(p), Q = i diag(q).
Matrix weight_matrix(const Triple& t);

/// Free iff gcd(p1 - q_{s(1)}, p2 - q_{s(2)}) = 1 for every permutation s.
bool is_free(const EschParams& params);

/// Almost free but not free: the weighted circle acts with finite isotropy
/// everywhere (no nonzero pattern matches p to a permutation of q).
bool is_almost_free(const EschParams& params);

/// Orbit direction at A, left-translated to the identity: Ad_{A*} P - Q.
Matrix vertical_vector(const EschParams& params, const Matrix& a);

enum class EschClass {
    POSITIVE,
    QUASI_POSITIVE,
    ALMOST_POSITIVE_E0,
    BOUNDARY_W11,
    ORBIFOLD_DAGGER,
    UNKNOWN_NONNEGATIVE,
};

std::string to_string(EschClass c);

struct EschClassification {
    EschClass cls = EschClass::UNKNOWN_NONNEGATIVE;
    /// Parameter pair, in the symmetry orbit of the input, that witnesses the
    /// classification (for POSITIVE: p sorted and q1, q2 on the same side of
    /// [min p, max p], so the metric itself is positively curved).
    EschParams representative;
    std::string note;
};

/// The parameter symmetries: permutations of p and of q, the swap p <-> q,
/// global negation (with reversal), and the diagonal shift
/// (p,q) -> (p + c, q + c), which leaves the action itself unchanged.
bool params_equivalent(const EschParams& a, const EschParams& b);

/// Requires a free action or an almost-free one satisfying the dagger chain
/// q1 < q2 = p1 < p2 <= p3 < q3 (or its mirror) in sorted order; throws
/// otherwise.
EschClassification classify_curvature(const EschParams& params);

/// Residual of the Y3-horizontality equation: sum_j |a_{j3}|^2 p_j - q3.
double y3_residual(const EschParams& params, const Matrix& a);

struct Y1Range {
    double min = 0.0, max = 0.0;
    Eigen::Vector2cd argmin;
};

/// Range of f(u) = sum_j |(A u^)_j|^2 p_j - (|u1|^2 q1 + |u2|^2 q2) over unit
/// u in C^2 (u^ = (u1,u2,0)).  f is the Hermitian form of
/// M = B* diag(p) B - diag(q1,q2) with B = first two columns of A, so the
/// range is exactly [lambda_min(M), lambda_max(M)].  Ad_k Y1 is horizontal at
/// A for some k in U(2) iff the range brackets 0.
Y1Range y1_range(const EschParams& params, const Matrix& a);

/// Grid + local refinement evaluation of the same range (test oracle for
/// y1_range); samples CP^1 on an n x n (theta, phi) grid.
std::pair<double, double> y1_range_grid(const EschParams& params, const Matrix& a,
                                        int n = 256);

/// True iff Y3 is horizontal at A or Ad_k Y1 is horizontal for some k; when
/// true the report carries a witness plane validated against
/// plane_zero_curvature and horizontality with respect to the vertical space.
std::pair<bool, HorizontalityReport> has_horizontal_zero_plane(
    const EschParams& params, const Matrix& a, const Tolerances& tol = {});

enum class EschLocus {
    E0_DET,      // det of the upper-left 2x2 block vanishes
    DAGGER_LENS, // a22 = a32 = 0 (lens-space locus of the dagger orbifolds)
};

/// Random SU(3) point on the requested locus; throws if the classification of
/// params does not match the locus kind.
Matrix zero_locus_point(const EschParams& params, EschLocus kind, Rng& rng);

/// Dimension of the family of horizontal zero-curvature planes through a
/// DAGGER_LENS point (expected 1): the commutant slice
/// X = [[is,0,x],[0,0,0],[-conj(x),0,-is]] cut by horizontality and |X| = 1.
int lens_plane_family_dim(const EschParams& params, const Matrix& a,
                          double lambda = 0.5);

/// Base of the 3-dimensional slice above (used by the family-dim count and
/// its tests).
std::array<Matrix, 3> lens_slice_basis();

/// Unit spanning set of the slice after the horizontality cut; each member X
/// together with Phi^{-1}(Y2) spans a horizontal zero-curvature plane.
std::vector<Matrix> lens_family_basis(const EschParams& params, const Matrix& a,
                                      double lambda = 0.5);

/// Constructs a point with a horizontal zero-curvature plane for parameters
/// whose given ordering is not positively curved (some q_i in [min p, max p]):
/// a closed-form zero of the Y3 equation on a Givens geodesic between
/// permutation matrices, or a permutation matrix whose Y1 spectrum brackets 0.
/// Returns nullopt if the given ordering is positively curved (no such point
/// exists) or the search fails; failures must be reported, never swallowed.
std::optional<Matrix> find_zero_plane_point(const EschParams& params);

Matrix y1_vector(); // i diag(-2, 1, 1)
Matrix y2_vector(); // i diag( 1,-2, 1)
Matrix y3_vector(); // i diag( 1, 1,-2)

/// Ad_k Y1 for the U(2) element with first column u: i(I - 3 u^ u^*).
Matrix ad_k_y1(const Eigen::Vector2cd& u);

/// All free pairs with entries in [-bound, bound], sum-matched (enumeration
/// order deterministic).
std::vector<EschParams> enumerate_free(long long bound);

} // namespace biq::esch

#endif
