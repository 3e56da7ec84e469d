#ifndef BIQ_CHEEGER_HPP
#define BIQ_CHEEGER_HPP

#include "biq/algebra.hpp"

namespace biq::cheeger {

/// The three symmetric pairs (G,K) in use: (SU(3),U(2)), (SU(5),U(4)) and
/// (S^3 x S^3, diagonal S^3).  The U(m) factors sit block-diagonally with the
/// last diagonal entry fixed by det = 1.
enum class PairId { SU3_U2, SU5_U4, S3S3_DIAG };

struct SymmetricPairContext {
    PairId id = PairId::SU3_U2;
    double lambda = 0.5; // metric shrink factor on k, strictly in (0,1)

    SymmetricPairContext() = default;
    SymmetricPairContext(PairId id_, double lambda_);
};

int matrix_dim(PairId id); // 3, 5, or 0 for the quaternion-pair context

struct Split {
    LieVector k, p;
};

/// Orthogonal splitting X = X_k + X_p with respect to inner0.
Split split(const SymmetricPairContext& ctx, const LieVector& x);

/// Metric tensor of <,>_1: Phi(X) = X_p + lambda X_k, so
/// <X,Y>_1 = inner0(X, Phi(Y)).
LieVector phi(const SymmetricPairContext& ctx, const LieVector& x);
LieVector phi_inv(const SymmetricPairContext& ctx, const LieVector& x);

double inner1(const SymmetricPairContext& ctx, const LieVector& x, const LieVector& y);

/// True iff the plane Span{Phi^{-1}(X), Phi^{-1}(Y)} has sec = 0 in <,>_1,
/// i.e. [X,Y], [X_k,Y_k] and [X_p,Y_p] all vanish (each within
/// tol * |X| * |Y| in the inner0 norm).  Throws on a degenerate span.
bool plane_zero_curvature(const SymmetricPairContext& ctx, const LieVector& x,
                          const LieVector& y, double tol = 1e-9);

/// Independent check through the submersion G x K -> G, (g,k) -> g k^{-1}
/// with metric <,>_0 + t<,>_0|_k, t = lambda/(1-lambda): the horizontal lift
/// of Phi^{-1}(X) is (X, -(1/t) X_k), and the plane downstairs is flat iff
/// the two lifts commute componentwise in g + k.
bool lifted_bracket_oracle(const SymmetricPairContext& ctx, const LieVector& x,
                           const LieVector& y, double tol = 1e-9);

/// Random Lie algebra element of the context (Gaussian coefficients).
LieVector random_lie_vector(const SymmetricPairContext& ctx, Rng& rng);

} // namespace biq::cheeger

#endif
