#include "biq/cheeger.hpp"

#include <stdexcept>

namespace biq::cheeger {

SymmetricPairContext::SymmetricPairContext(PairId id_, double lambda_)
    : id(id_), lambda(lambda_) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("SymmetricPairContext: lambda must lie in (0,1)");
}

int matrix_dim(PairId id) {
    switch (id) {
        case PairId::SU3_U2: return 3;
        case PairId::SU5_U4: return 5;
        case PairId::S3S3_DIAG: return 0;
    }
    return 0;
}

static void require_in_context(const SymmetricPairContext& ctx, const LieVector& x) {
    int d = matrix_dim(ctx.id);
    if (d == 0) {
        if (x.is_matrix())
            throw std::invalid_argument("cheeger: expected a quaternion-pair vector");
    } else if (!x.is_matrix() || x.dim() != d) {
        throw std::invalid_argument("cheeger: vector dimension does not match context");
    }
}

Split split(const SymmetricPairContext& ctx, const LieVector& x) {
    require_in_context(ctx, x);
    if (ctx.id == PairId::S3S3_DIAG) {
        Quaternion v = x.pair().a, w = x.pair().b;
        Quaternion m = (v + w) * 0.5;
        return {LieVector::unchecked_pair(m, m),
                LieVector::unchecked_pair(v - m, w - m)};
    }
    // k = block-diagonal su(n) for the (n-1)+1 split, p = last row/column.
    const Matrix& m = x.matrix();
    int n = int(m.rows());
    Matrix k = m, p = Matrix::Zero(n, n);
    for (int i = 0; i < n - 1; ++i) {
        p(i, n - 1) = m(i, n - 1);
        p(n - 1, i) = m(n - 1, i);
        k(i, n - 1) = Complex(0, 0);
        k(n - 1, i) = Complex(0, 0);
    }
    return {LieVector::unchecked_su(std::move(k)), LieVector::unchecked_su(std::move(p))};
}

LieVector phi(const SymmetricPairContext& ctx, const LieVector& x) {
    Split s = split(ctx, x);
    return s.p + s.k * ctx.lambda;
}

LieVector phi_inv(const SymmetricPairContext& ctx, const LieVector& x) {
    Split s = split(ctx, x);
    return s.p + s.k * (1.0 / ctx.lambda);
}

double inner1(const SymmetricPairContext& ctx, const LieVector& x, const LieVector& y) {
    return inner0(x, phi(ctx, y));
}

static void require_plane(const LieVector& x, const LieVector& y) {
    double xx = inner0(x, x), yy = inner0(y, y), xy = inner0(x, y);
    double gram = xx * yy - xy * xy;
    if (!(gram > 1e-12 * xx * yy))
        throw std::invalid_argument("plane test: spanning pair is (nearly) linearly dependent");
}

bool plane_zero_curvature(const SymmetricPairContext& ctx, const LieVector& x,
                          const LieVector& y, double tol) {
    require_in_context(ctx, x);
    require_in_context(ctx, y);
    require_plane(x, y);
    double scale = norm0(x) * norm0(y);
    Split sx = split(ctx, x), sy = split(ctx, y);
    return norm0(bracket(x, y)) <= tol * scale &&
           norm0(bracket(sx.k, sy.k)) <= tol * scale &&
           norm0(bracket(sx.p, sy.p)) <= tol * scale;
}

bool lifted_bracket_oracle(const SymmetricPairContext& ctx, const LieVector& x,
                           const LieVector& y, double tol) {
    require_in_context(ctx, x);
    require_in_context(ctx, y);
    require_plane(x, y);
    double t = ctx.lambda / (1.0 - ctx.lambda);
    LieVector xk = split(ctx, x).k * (-1.0 / t);
    LieVector yk = split(ctx, y).k * (-1.0 / t);
    // Both components of [(X, -X_k/t), (Y, -Y_k/t)] must vanish.
    bool g_flat = norm0(bracket(x, y)) <= tol * norm0(x) * norm0(y);
    double kscale = norm0(xk) * norm0(yk);
    bool k_flat = norm0(bracket(xk, yk)) <= tol * kscale || kscale == 0.0;
    return g_flat && k_flat;
}

LieVector random_lie_vector(const SymmetricPairContext& ctx, Rng& rng) {
    if (ctx.id == PairId::S3S3_DIAG) {
        return LieVector::unchecked_pair(
            Quaternion::imag(gaussian(rng), gaussian(rng), gaussian(rng)),
            Quaternion::imag(gaussian(rng), gaussian(rng), gaussian(rng)));
    }
    int n = matrix_dim(ctx.id);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = complex_gaussian(rng);
    Matrix x = 0.5 * (m - m.adjoint());
    Complex tr = x.trace() / double(n);
    for (int i = 0; i < n; ++i) x(i, i) -= tr;
    return LieVector::unchecked_su(std::move(x));
}

} // namespace biq::cheeger
