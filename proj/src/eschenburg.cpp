#include "biq/eschenburg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace biq::esch {

namespace {

const std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

Triple apply_perm(const Triple& t, const std::array<int, 3>& s) {
    return {t[size_t(s[0])], t[size_t(s[1])], t[size_t(s[2])]};
}

Triple sorted(Triple t) {
    std::sort(t.begin(), t.end());
    return t;
}

long long sum(const Triple& t) { return t[0] + t[1] + t[2]; }

cheeger::SymmetricPairContext su3_ctx(double lambda = 0.5) {
    return {cheeger::PairId::SU3_U2, lambda};
}

} // namespace

EschParams::EschParams(Triple p_, Triple q_) : p(p_), q(q_) {
    if (sum(p) != sum(q))
        throw std::invalid_argument("EschParams: sum(p) must equal sum(q)");
}

Matrix weight_matrix(const Triple& t) {
    Matrix m = Matrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i) m(i, i) = Complex(0, double(t[size_t(i)]));
    return m;
}

bool is_free(const EschParams& params) {
    for (const auto& s : kPerms) {
        Triple qs = apply_perm(params.q, s);
        if (pair_gcd(params.p[0] - qs[0], params.p[1] - qs[1]) != 1) return false;
    }
    return true;
}

bool is_almost_free(const EschParams& params) {
    for (const auto& s : kPerms) {
        Triple qs = apply_perm(params.q, s);
        if (qs[0] == params.p[0] && qs[1] == params.p[1] && qs[2] == params.p[2])
            return false; // a full weight matching gives circle isotropy
    }
    return true;
}

Matrix vertical_vector(const EschParams& params, const Matrix& a) {
    if (!is_special_unitary(a))
        throw std::invalid_argument("vertical_vector: A must lie in SU(3)");
    return a.adjoint() * weight_matrix(params.p) * a - weight_matrix(params.q);
}

std::string to_string(EschClass c) {
    switch (c) {
        case EschClass::POSITIVE: return "POSITIVE";
        case EschClass::QUASI_POSITIVE: return "QUASI_POSITIVE";
        case EschClass::ALMOST_POSITIVE_E0: return "ALMOST_POSITIVE_E0";
        case EschClass::BOUNDARY_W11: return "BOUNDARY_W11";
        case EschClass::ORBIFOLD_DAGGER: return "ORBIFOLD_DAGGER";
        case EschClass::UNKNOWN_NONNEGATIVE: return "UNKNOWN_NONNEGATIVE";
    }
    return "?";
}

// --- parameter symmetries ----------------------------------------------------

namespace {

using Canon = std::array<long long, 6>;

// Canonical forms modulo permutations and the diagonal shift, for each of the
// four swap/negation variants.  Two parameter pairs are equivalent iff their
// canon sets intersect.
std::set<Canon> canon_set(const EschParams& params) {
    std::set<Canon> out;
    for (int swap = 0; swap < 2; ++swap) {
        for (int neg = 0; neg < 2; ++neg) {
            Triple p = swap ? params.q : params.p;
            Triple q = swap ? params.p : params.q;
            if (neg) {
                for (auto& v : p) v = -v;
                for (auto& v : q) v = -v;
            }
            p = sorted(p);
            q = sorted(q);
            long long c = p[0];
            out.insert({0, p[1] - c, p[2] - c, q[0] - c, q[1] - c, q[2] - c});
        }
    }
    return out;
}

bool direct_positive(const Triple& p, const Triple& q) {
    long long lo = *std::min_element(p.begin(), p.end());
    long long hi = *std::max_element(p.begin(), p.end());
    for (long long v : q)
        if (v >= lo && v <= hi) return false;
    return true;
}

// q reordered so the two entries on the same side of [min p, max p] come
// first; at such a representative neither horizontality equation has a
// solution, so the metric itself is positively curved.
EschParams positive_representative(const Triple& p, const Triple& q) {
    Triple ps = sorted(p), qs = sorted(q);
    Triple qrep;
    if (qs[0] < ps[0] && qs[1] < ps[0])
        qrep = {qs[0], qs[1], qs[2]}; // two below, lone above
    else
        qrep = {qs[1], qs[2], qs[0]}; // two above, lone below
    return EschParams(ps, qrep);
}

bool dagger_chain(const Triple& ps, const Triple& qs) {
    return (qs[0] < qs[1] && qs[1] == ps[0] && ps[0] < ps[1] && ps[1] <= ps[2] &&
            ps[2] < qs[2]) ||
           (qs[0] < ps[0] && ps[0] <= ps[1] && ps[1] < ps[2] && ps[2] == qs[1] &&
            qs[1] <= qs[2]);
}

const EschParams& e0_action() {
    static const EschParams a({0, 1, 1}, {0, 0, 2});
    return a;
}

const EschParams& w11_action() {
    static const EschParams a({0, 0, 0}, {-1, 0, 1});
    return a;
}

} // namespace

bool params_equivalent(const EschParams& a, const EschParams& b) {
    auto ca = canon_set(a), cb = canon_set(b);
    for (const auto& c : ca)
        if (cb.count(c)) return true;
    return false;
}

EschClassification classify_curvature(const EschParams& params) {
    bool free = is_free(params);
    if (!free) {
        Triple ps = sorted(params.p), qs = sorted(params.q);
        if (dagger_chain(ps, qs) || dagger_chain(qs, ps)) {
            if (!is_almost_free(params))
                throw std::domain_error("classify_curvature: action is not almost free");
            EschClassification r;
            r.cls = EschClass::ORBIFOLD_DAGGER;
            r.representative = dagger_chain(ps, qs) ? EschParams(ps, qs) : EschParams(qs, ps);
            r.note = "almost-free orbifold on the positive-curvature boundary";
            return r;
        }
        throw std::domain_error(
            "classify_curvature: action is neither free nor a dagger orbifold");
    }

    if (direct_positive(params.p, params.q)) {
        return {EschClass::POSITIVE, positive_representative(params.p, params.q),
                "q_i outside [min p, max p]"};
    }
    if (direct_positive(params.q, params.p)) {
        return {EschClass::POSITIVE, positive_representative(params.q, params.p),
                "q_i outside [min p, max p] after swapping p and q"};
    }
    if (params_equivalent(params, e0_action())) {
        return {EschClass::ALMOST_POSITIVE_E0, e0_action(),
                "equivalent to p=(0,1,1), q=(0,0,2)"};
    }
    if (params_equivalent(params, w11_action())) {
        return {EschClass::BOUNDARY_W11, w11_action(),
                "equivalent to p=(0,0,0), q=(-1,0,1)"};
    }
    // A reordering with (p1' - q1')(p2' - q2') > 0 makes the diagonal point a
    // positively curved point.
    for (int i1 = 0; i1 < 3; ++i1)
        for (int i2 = 0; i2 < 3; ++i2) {
            if (i2 == i1) continue;
            for (int j1 = 0; j1 < 3; ++j1)
                for (int j2 = 0; j2 < 3; ++j2) {
                    if (j2 == j1) continue;
                    long long d1 = params.p[size_t(i1)] - params.q[size_t(j1)];
                    long long d2 = params.p[size_t(i2)] - params.q[size_t(j2)];
                    if (d1 * d2 > 0) {
                        int i3 = 3 - i1 - i2, j3 = 3 - j1 - j2;
                        EschParams rep({params.p[size_t(i1)], params.p[size_t(i2)],
                                        params.p[size_t(i3)]},
                                       {params.q[size_t(j1)], params.q[size_t(j2)],
                                        params.q[size_t(j3)]});
                        return {EschClass::QUASI_POSITIVE, rep,
                                "(p1-q1)(p2-q2) > 0 at this reordering"};
                    }
                }
        }
    return {EschClass::UNKNOWN_NONNEGATIVE, params, ""};
}

// --- horizontality -----------------------------------------------------------

double y3_residual(const EschParams& params, const Matrix& a) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j) s += std::norm(a(j, 2)) * double(params.p[size_t(j)]);
    return s - double(params.q[2]);
}

namespace {

Eigen::Matrix2cd y1_form(const EschParams& params, const Matrix& a) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    for (int j = 0; j < 3; ++j) {
        Eigen::Vector2cd row(std::conj(a(j, 0)), std::conj(a(j, 1)));
        m += double(params.p[size_t(j)]) * row * row.adjoint();
    }
    m(0, 0) -= double(params.q[0]);
    m(1, 1) -= double(params.q[1]);
    return m;
}

} // namespace

Y1Range y1_range(const EschParams& params, const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(y1_form(params, a));
    Y1Range r;
    r.min = es.eigenvalues()(0);
    r.max = es.eigenvalues()(1);
    r.argmin = es.eigenvectors().col(0);
    return r;
}

std::pair<double, double> y1_range_grid(const EschParams& params, const Matrix& a,
                                        int n) {
    Eigen::Matrix2cd m = y1_form(params, a);
    auto f = [&](double theta, double phi) {
        Eigen::Vector2cd u(std::cos(theta / 2),
                           std::polar(std::sin(theta / 2), phi));
        return (u.adjoint() * m * u)(0).real();
    };
    const double pi = std::numbers::pi;
    double lo = f(0, 0), hi = lo;
    double arg_lo[2] = {0, 0}, arg_hi[2] = {0, 0};
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j) {
            double th = pi * i / n, ph = 2 * pi * j / n;
            double v = f(th, ph);
            if (v < lo) { lo = v; arg_lo[0] = th; arg_lo[1] = ph; }
            if (v > hi) { hi = v; arg_hi[0] = th; arg_hi[1] = ph; }
        }
    // local refinement with a shrinking pattern search
    auto refine = [&](double* arg, double val, int sign) {
        double step = pi / n;
        for (int it = 0; it < 60; ++it) {
            bool moved = false;
            for (int d = 0; d < 2; ++d)
                for (int dir : {-1, 1}) {
                    double cand[2] = {arg[0], arg[1]};
                    cand[d] += dir * step;
                    double v = f(cand[0], cand[1]);
                    if (sign * (v - val) < 0) {
                        val = v;
                        arg[0] = cand[0];
                        arg[1] = cand[1];
                        moved = true;
                    }
                }
            if (!moved) step /= 2;
            if (step < 1e-12) break;
        }
        return val;
    };
    lo = refine(arg_lo, lo, +1);
    hi = refine(arg_hi, hi, -1);
    return {lo, hi};
}

Matrix y1_vector() {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = Complex(0, -2); m(1, 1) = Complex(0, 1); m(2, 2) = Complex(0, 1);
    return m;
}

Matrix y2_vector() {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = Complex(0, 1); m(1, 1) = Complex(0, -2); m(2, 2) = Complex(0, 1);
    return m;
}

Matrix y3_vector() {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = Complex(0, 1); m(1, 1) = Complex(0, 1); m(2, 2) = Complex(0, -2);
    return m;
}

Matrix ad_k_y1(const Eigen::Vector2cd& u) {
    Eigen::Vector3cd uh(u(0), u(1), Complex(0, 0));
    Matrix m = Complex(0, 1) * (Matrix::Identity(3, 3) - 3.0 * (uh * uh.adjoint()));
    return m;
}

namespace {

// Centralizer slice used for witness completion: Ad_k of the su(3) elements
// commuting with Y1 (block-diagonal for the 1+2 split), minus the Y1 direction
// itself so the completion stays independent of the first spanning vector.
std::array<Matrix, 3> y1_centralizer_slice() {
    Matrix l1 = Matrix::Zero(3, 3);
    l1(1, 1) = Complex(0, 1); l1(2, 2) = Complex(0, -1);
    Matrix l2 = Matrix::Zero(3, 3);
    l2(1, 2) = 1; l2(2, 1) = -1;
    Matrix l3 = Matrix::Zero(3, 3);
    l3(1, 2) = Complex(0, 1); l3(2, 1) = Complex(0, 1);
    return {l1, l2, l3};
}

std::array<Matrix, 3> y3_centralizer_slice() {
    Matrix k1 = Matrix::Zero(3, 3);
    k1(0, 0) = Complex(0, 1); k1(1, 1) = Complex(0, -1);
    Matrix k2 = Matrix::Zero(3, 3);
    k2(0, 1) = 1; k2(1, 0) = -1;
    Matrix k3 = Matrix::Zero(3, 3);
    k3(0, 1) = Complex(0, 1); k3(1, 0) = Complex(0, 1);
    return {k1, k2, k3};
}

// Unit vector in the slice orthogonal to v_A under <,>_0.
Matrix complete_in_slice(const std::array<Matrix, 3>& basis, const Matrix& v_a) {
    Eigen::Vector3d r;
    for (int i = 0; i < 3; ++i) r(i) = inner0(basis[size_t(i)], v_a);
    Eigen::Vector3d c;
    if (r.norm() < 1e-14) {
        c = Eigen::Vector3d::UnitX();
    } else {
        Eigen::Vector3d n = r.normalized();
        Eigen::Vector3d seed =
            std::abs(n(0)) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
        c = (seed - n * n.dot(seed)).normalized();
    }
    Matrix x = Matrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i) x += c(i) * basis[size_t(i)];
    return x / norm0(x);
}

void validate_witness_or_throw(const EschParams& params, const Matrix& a,
                               const Matrix& w, const Matrix& x,
                               const Tolerances& tol) {
    Matrix v_a = vertical_vector(params, a);
    double vs = std::max(1.0, norm0(v_a));
    if (std::abs(inner0(w, v_a)) > 4 * tol.horiz * vs * std::max(1.0, norm0(w)) ||
        std::abs(inner0(x, v_a)) > 4 * tol.horiz * vs * std::max(1.0, norm0(x)))
        throw std::runtime_error("eschenburg witness failed horizontality validation");
    if (!cheeger::plane_zero_curvature(su3_ctx(), LieVector::su(w), LieVector::su(x),
                                       tol.bracket))
        throw std::runtime_error("eschenburg witness failed the zero-curvature test");
}

} // namespace

std::pair<bool, HorizontalityReport> has_horizontal_zero_plane(
    const EschParams& params, const Matrix& a, const Tolerances& tol) {
    HorizontalityReport rep;
    rep.residual = y3_residual(params, a);
    Y1Range r = y1_range(params, a);
    rep.range_min = r.min;
    rep.range_max = r.max;
    Matrix v_a = vertical_vector(params, a);

    if (std::abs(rep.residual) <= tol.margin) {
        PlaneWitness w;
        w.base_point = a;
        w.kind = "Y3";
        w.span_a = LieVector::su(y3_vector());
        w.span_b = LieVector::su(complete_in_slice(y3_centralizer_slice(), v_a));
        w.direction = Eigen::VectorXcd::Zero(2);
        validate_witness_or_throw(params, a, w.span_a.matrix(), w.span_b.matrix(), tol);
        rep.witness = std::move(w);
        return {true, rep};
    }

    if (r.min <= tol.margin && r.max >= -tol.margin) {
        // Mix the extremal eigenvectors of the Hermitian form to a zero of f.
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(y1_form(params, a));
        Eigen::Vector2cd u;
        double lmin = es.eigenvalues()(0), lmax = es.eigenvalues()(1);
        if (lmax <= 0.0) {
            u = es.eigenvectors().col(1);
        } else if (lmin >= 0.0) {
            u = es.eigenvectors().col(0);
        } else {
            double c2 = lmax / (lmax - lmin); // cos^2 of the mixing angle
            u = std::sqrt(c2) * es.eigenvectors().col(0) +
                std::sqrt(1 - c2) * es.eigenvectors().col(1);
        }
        Eigen::Matrix3cd k = Eigen::Matrix3cd::Identity();
        k(0, 0) = u(0); k(1, 0) = u(1);
        k(0, 1) = -std::conj(u(1)); k(1, 1) = std::conj(u(0));
        auto slice = y1_centralizer_slice();
        std::array<Matrix, 3> conj_slice;
        for (int i = 0; i < 3; ++i)
            conj_slice[size_t(i)] = k * slice[size_t(i)] * k.adjoint();
        PlaneWitness w;
        w.base_point = a;
        w.kind = "Y1";
        w.span_a = LieVector::su(ad_k_y1(u));
        w.span_b = LieVector::su(complete_in_slice(conj_slice, v_a));
        w.direction = u;
        validate_witness_or_throw(params, a, w.span_a.matrix(), w.span_b.matrix(), tol);
        rep.witness = std::move(w);
        return {true, rep};
    }
    return {false, rep};
}

// --- loci ---------------------------------------------------------------------

namespace {

Eigen::Matrix2cd haar_u2(Rng& rng) {
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g(i, j) = complex_gaussian(rng);
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 2; ++j) {
        Complex d = r(j, j);
        q.col(j) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1, 0);
    }
    return q;
}

// Right Givens rotation in columns (c0,c1) zeroing out entry (row,c1).
Matrix zero_entry_by_column_mix(const Matrix& a, int row, int c0, int c1) {
    Complex s = a(row, c0), t = a(row, c1);
    double ns = std::abs(s), nt = std::abs(t);
    double theta = std::atan2(nt, ns);
    Complex phase = (ns > 0 && nt > 0) ? (t / nt) * std::conj(s / ns) : Complex(1, 0);
    Matrix g = Matrix::Identity(3, 3);
    g(c0, c0) = std::cos(theta);
    g(c1, c1) = std::cos(theta);
    g(c0, c1) = -std::sin(theta) * phase;
    g(c1, c0) = std::sin(theta) * std::conj(phase);
    return a * g;
}

bool dagger_as_given(const EschParams& params) {
    return dagger_chain(params.p, params.q);
}

} // namespace

Matrix zero_locus_point(const EschParams& params, EschLocus kind, Rng& rng) {
    EschClassification c = classify_curvature(params);
    if (kind == EschLocus::E0_DET) {
        if (c.cls != EschClass::ALMOST_POSITIVE_E0)
            throw std::invalid_argument("zero_locus_point: E0_DET requires the E0 action");
        Matrix a = haar_su(3, rng);
        // det of the upper-left 2x2 block equals conj(a33) for A in SU(3), so
        // the locus is exactly {a33 = 0}.
        if (std::abs(a(2, 0)) < 1e-3 && std::abs(a(2, 1)) < 1e-3) {
            Matrix g = Matrix::Identity(3, 3);
            g(0, 0) = g(2, 2) = std::numbers::sqrt2 / 2;
            g(0, 2) = -std::numbers::sqrt2 / 2;
            g(2, 0) = std::numbers::sqrt2 / 2;
            a = a * g;
        }
        int c0 = std::abs(a(2, 0)) >= std::abs(a(2, 1)) ? 0 : 1;
        a = zero_entry_by_column_mix(a, 2, c0, 2);
        return a;
    }
    if (c.cls != EschClass::ORBIFOLD_DAGGER)
        throw std::invalid_argument("zero_locus_point: DAGGER_LENS requires a dagger orbifold");
    if (!dagger_as_given(params))
        throw std::invalid_argument(
            "zero_locus_point: use the sorted dagger representative of the parameters");
    // Shape (0 a12 0 / a21 0 a23 / a31 0 a33): unit second column supported on
    // the first row, and a U(2) block in rows {2,3} x columns {1,3} with the
    // determinant phased so det(A) = 1.
    double alpha = 2 * std::numbers::pi * uniform01(rng);
    Complex a12 = std::polar(1.0, alpha);
    Eigen::Matrix2cd u = haar_u2(rng);
    Complex want = -std::conj(a12); // det A = -a12 * det(block) = 1
    u.col(1) *= want / u.determinant();
    Matrix a = Matrix::Zero(3, 3);
    a(0, 1) = a12;
    a(1, 0) = u(0, 0); a(1, 2) = u(0, 1);
    a(2, 0) = u(1, 0); a(2, 2) = u(1, 1);
    return a;
}

std::array<Matrix, 3> lens_slice_basis() {
    Matrix b1 = Matrix::Zero(3, 3);
    b1(0, 0) = Complex(0, 1); b1(2, 2) = Complex(0, -1);
    Matrix b2 = Matrix::Zero(3, 3);
    b2(0, 2) = 1; b2(2, 0) = -1;
    Matrix b3 = Matrix::Zero(3, 3);
    b3(0, 2) = Complex(0, 1); b3(2, 0) = Complex(0, 1);
    return {b1, b2, b3};
}

std::vector<Matrix> lens_family_basis(const EschParams& params, const Matrix& a,
                                      double lambda) {
    if (!dagger_as_given(params))
        throw std::invalid_argument("lens_family_basis: parameters must satisfy the dagger chain");
    if (std::abs(a(1, 1)) + std::abs(a(2, 1)) > 1e-8)
        throw std::invalid_argument("lens_family_basis: point is not on the lens locus");
    auto basis = lens_slice_basis();
    cheeger::SymmetricPairContext ctx = su3_ctx(lambda);
    Matrix phi_va = cheeger::phi(ctx, LieVector::su(vertical_vector(params, a))).matrix();
    Eigen::Vector3d r;
    for (int i = 0; i < 3; ++i) r(i) = inner0(basis[size_t(i)], phi_va);
    std::vector<Matrix> out;
    if (r.norm() <= 1e-9 * std::max(1.0, norm0(phi_va))) {
        for (auto& b : basis) out.push_back(b);
        return out;
    }
    Eigen::Vector3d n = r.normalized();
    Eigen::Vector3d s1 = std::abs(n(0)) < 0.9 ? Eigen::Vector3d::UnitX()
                                              : Eigen::Vector3d::UnitY();
    Eigen::Vector3d c1 = (s1 - n * n.dot(s1)).normalized();
    Eigen::Vector3d c2 = n.cross(c1);
    for (const Eigen::Vector3d& c : {c1, c2}) {
        Matrix x = Matrix::Zero(3, 3);
        for (int i = 0; i < 3; ++i) x += c(i) * basis[size_t(i)];
        out.push_back(x / norm0(x));
    }
    return out;
}

int lens_plane_family_dim(const EschParams& params, const Matrix& a, double lambda) {
    std::vector<Matrix> null_basis = lens_family_basis(params, a, lambda);
    // dimension after the unit-norm cut
    return int(null_basis.size()) - 1;
}

std::optional<Matrix> find_zero_plane_point(const EschParams& params) {
    long long lo = *std::min_element(params.p.begin(), params.p.end());
    long long hi = *std::max_element(params.p.begin(), params.p.end());
    if (params.q[2] >= lo && params.q[2] <= hi) {
        // Exact zero of the Y3 equation with third column cos t e_a + sin t e_b.
        int ia = 0, ib = 0;
        for (int i = 0; i < 3; ++i) {
            if (params.p[size_t(i)] == lo) ia = i;
            if (params.p[size_t(i)] == hi) ib = i;
        }
        Matrix a = Matrix::Zero(3, 3);
        if (ia == ib) { // all p equal, q3 = p: any permutation matrix works
            a(ia, 2) = 1;
            a((ia + 1) % 3, 0) = 1;
            a((ia + 2) % 3, 1) = 1;
        } else {
            double s2 = double(params.q[2] - lo) / double(hi - lo);
            double st = std::sqrt(s2), ct = std::sqrt(1 - s2);
            a(ia, 2) = ct; a(ib, 2) = st;
            a(ia, 0) = -st; a(ib, 0) = ct;
            a(3 - ia - ib, 1) = 1;
        }
        Complex det = a.determinant();
        a.col(1) /= det;
        return a;
    }
    // Permutation matrix at which the Y1 spectrum is {p_a - q1, p_b - q2}.
    for (int ia = 0; ia < 3; ++ia)
        for (int ib = 0; ib < 3; ++ib) {
            if (ib == ia) continue;
            long long d1 = params.p[size_t(ia)] - params.q[0];
            long long d2 = params.p[size_t(ib)] - params.q[1];
            if (d1 * d2 <= 0) {
                Matrix a = Matrix::Zero(3, 3);
                a(ia, 0) = 1;
                a(ib, 1) = 1;
                a(3 - ia - ib, 2) = 1;
                Complex det = a.determinant();
                a.col(2) /= det;
                return a;
            }
        }
    return std::nullopt;
}

std::vector<EschParams> enumerate_free(long long bound) {
    std::map<long long, std::vector<Triple>> by_sum;
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
            for (long long c = -bound; c <= bound; ++c)
                by_sum[a + b + c].push_back({a, b, c});
    std::vector<EschParams> out;
    for (const auto& [s, triples] : by_sum)
        for (const Triple& p : triples)
            for (const Triple& q : triples) {
                EschParams params(p, q);
                if (is_free(params)) out.push_back(params);
            }
    return out;
}

} // namespace biq::esch
