#include "biq/bazaikin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biq::baz {

namespace {

cheeger::SymmetricPairContext su5_ctx(double lambda = 0.5) {
    return {cheeger::PairId::SU5_U4, lambda};
}

Quaternion from_complex_pair(Complex s, Complex t) {
    return {s.real(), s.imag(), t.real(), t.imag()};
}

Complex complex_part(const Quaternion& q) { return {q.w, q.x}; }
Complex j_part(const Quaternion& q) { return {q.y, q.z}; }

using QuatVec2 = std::array<Quaternion, 2>;

// Hermitian product on H^2 as a right module: <x,y> = conj(x1) y1 + conj(x2) y2.
Quaternion qdot(const QuatVec2& x, const QuatVec2& y) {
    return x[0].conj() * y[0] + x[1].conj() * y[1];
}

QuatVec2 qnormalize(const QuatVec2& x) {
    double n = std::sqrt(x[0].norm2() + x[1].norm2());
    if (n < 1e-14) throw std::runtime_error("cannot normalize zero quaternion vector");
    return {x[0] * (1.0 / n), x[1] * (1.0 / n)};
}

Sp2Element from_quaternion_columns(const QuatVec2& u1, const QuatVec2& u2) {
    Sp2Element k;
    for (int i = 0; i < 2; ++i) {
        k.S(i, 0) = complex_part(u1[size_t(i)]);
        k.T(i, 0) = j_part(u1[size_t(i)]);
        k.S(i, 1) = complex_part(u2[size_t(i)]);
        k.T(i, 1) = j_part(u2[size_t(i)]);
    }
    return k;
}

// Completes a unit quaternionic column to an Sp(2) element with that second
// column.
Sp2Element complete_sp2_column(const QuatVec2& u2) {
    QuatVec2 seed = u2[0].norm2() <= u2[1].norm2()
                        ? QuatVec2{Quaternion::one(), Quaternion{}}
                        : QuatVec2{Quaternion{}, Quaternion::one()};
    Quaternion h = qdot(u2, seed);
    QuatVec2 u1{seed[0] - u2[0] * h, seed[1] - u2[1] * h};
    return from_quaternion_columns(qnormalize(u1), u2);
}

Eigen::Matrix4cd quaternionic_structure() {
    Eigen::Matrix4cd j = Eigen::Matrix4cd::Zero();
    j(0, 2) = 1; j(1, 3) = 1; j(2, 0) = -1; j(3, 1) = -1;
    return j;
}

Matrix diag_q(const BazParams& params) {
    Matrix d = Matrix::Zero(5, 5);
    for (int i = 0; i < 5; ++i) d(i, i) = double(params.q[size_t(i)]);
    return d;
}

} // namespace

BazParams::BazParams(Tuple5 q_, bool relaxed) : q(q_), relaxed_parity(relaxed) {
    if (!relaxed_parity) {
        for (long long v : q)
            if (((v % 2) + 2) % 2 == 0)
                throw std::invalid_argument("BazParams: entries must be odd");
    }
}

Eigen::Matrix4cd Sp2Element::embed4() const {
    Eigen::Matrix4cd m;
    m.topLeftCorner<2, 2>() = S;
    m.topRightCorner<2, 2>() = T;
    m.bottomLeftCorner<2, 2>() = -T.conjugate();
    m.bottomRightCorner<2, 2>() = S.conjugate();
    return m;
}

Matrix Sp2Element::embed5() const {
    Matrix m = Matrix::Identity(5, 5);
    m.topLeftCorner<4, 4>() = embed4();
    return m;
}

Matrix sp2_embed(const Eigen::Matrix2cd& s, const Eigen::Matrix2cd& t) {
    Sp2Element k{s, t};
    Eigen::Matrix4cd e = k.embed4();
    if ((e.adjoint() * e - Eigen::Matrix4cd::Identity()).norm() > 1e-10)
        throw std::invalid_argument("sp2_embed: S + Tj is not quaternionic-unitary");
    return k.embed5();
}

Sp2Element haar_sp2(Rng& rng) {
    auto gq = [&rng] {
        return Quaternion{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
    };
    QuatVec2 v1{gq(), gq()}, v2{gq(), gq()};
    QuatVec2 u1 = qnormalize(v1);
    Quaternion h = qdot(u1, v2);
    QuatVec2 w{v2[0] - u1[0] * h, v2[1] - u1[1] * h};
    return from_quaternion_columns(u1, qnormalize(w));
}

bool is_free(const BazParams& params) {
    for (long long v : params.q)
        if (((v % 2) + 2) % 2 == 0)
            throw std::invalid_argument("is_free: all Bazaikin weights must be odd");
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = 0; k < 5; ++k)
                for (int l = k + 1; l < 5; ++l) {
                    if (k == i || k == j || l == i || l == j) continue;
                    if (pair_gcd(params.q[size_t(i)] + params.q[size_t(j)],
                                 params.q[size_t(k)] + params.q[size_t(l)]) != 2)
                        return false;
                }
    return true;
}

std::string to_string(BazCurv c) {
    switch (c) {
        case BazCurv::POSITIVE: return "POSITIVE";
        case BazCurv::QUASI_POSITIVE: return "QUASI_POSITIVE";
        case BazCurv::ALMOST_POSITIVE_11111m1: return "ALMOST_POSITIVE_11111m1";
        case BazCurv::UNKNOWN_NONNEGATIVE: return "UNKNOWN_NONNEGATIVE";
    }
    return "?";
}

std::optional<long long> boundary_family_normalize(const BazParams& params) {
    for (int sign : {1, -1}) {
        std::vector<long long> v(params.q.begin(), params.q.end());
        for (auto& x : v) x *= sign;
        std::sort(v.begin(), v.end());
        // (1,1,1,n,-n): remove three 1's, the remaining pair must cancel.
        {
            std::vector<long long> rest;
            int ones = 0;
            for (long long x : v) {
                if (x == 1 && ones < 3) { ++ones; continue; }
                rest.push_back(x);
            }
            if (ones == 3 && rest.size() == 2 && rest[0] == -rest[1] && rest[1] != 0)
                return std::llabs(rest[0]);
        }
        // (1,1,-3,n,-n) describes the same spaces.
        {
            std::vector<long long> rest;
            int ones = 0, m3 = 0;
            for (long long x : v) {
                if (x == 1 && ones < 2) { ++ones; continue; }
                if (x == -3 && m3 < 1) { ++m3; continue; }
                rest.push_back(x);
            }
            if (ones == 2 && m3 == 1 && rest.size() == 2 && rest[0] == -rest[1] &&
                rest[1] != 0)
                return std::llabs(rest[0]);
        }
    }
    return std::nullopt;
}

BazClassification classify_curvature(const BazParams& params) {
    if (!is_free(params))
        throw std::domain_error("classify_curvature: action is not free");
    BazClassification r;
    r.boundary_n = boundary_family_normalize(params);
    for (int sign : {1, -1}) {
        bool pos = true;
        for (int i = 0; i < 5 && pos; ++i)
            for (int j = i + 1; j < 5 && pos; ++j)
                if (sign * (params.q[size_t(i)] + params.q[size_t(j)]) <= 0) pos = false;
        if (pos) {
            r.curv = BazCurv::POSITIVE;
            return r;
        }
    }
    if (r.boundary_n && *r.boundary_n == 1) {
        r.curv = BazCurv::ALMOST_POSITIVE_11111m1;
        return r;
    }
    for (int sign : {1, -1}) {
        int positives = 0;
        for (long long v : params.q)
            if (sign * v > 0) ++positives;
        if (positives >= 4) {
            r.curv = BazCurv::QUASI_POSITIVE;
            return r;
        }
    }
    r.curv = BazCurv::UNKNOWN_NONNEGATIVE;
    return r;
}

Matrix vertical_vector(const BazParams& params, const Matrix& a) {
    if (!is_special_unitary(a))
        throw std::invalid_argument("vertical_vector: A must lie in SU(5)");
    Matrix q = Matrix::Zero(5, 5);
    for (int i = 0; i < 5; ++i) q(i, i) = Complex(0, double(params.q[size_t(i)]));
    Matrix v = a.adjoint() * q * a;
    v(4, 4) -= Complex(0, double(params.q_sum()));
    return v;
}

double w1_residual(const BazParams& params, const Matrix& a) {
    double s = 0.0;
    for (int l = 0; l < 5; ++l) s += std::norm(a(l, 4)) * double(params.q[size_t(l)]);
    return s - double(params.q_sum());
}

namespace {

Eigen::Matrix4cd quaternion_hermitian_form(const BazParams& params, const Matrix& a) {
    Matrix m5 = a.adjoint() * diag_q(params) * a;
    Eigen::Matrix4cd m4 = m5.topLeftCorner<4, 4>();
    Eigen::Matrix4cd j = quaternionic_structure();
    return 0.5 * (m4 + j * m4.conjugate() * j.transpose());
}

QuatVec2 quaternion_column(const Eigen::Vector4cd& v) {
    // Second embedded column (S12,S22,-conj T12,-conj T22) = v.
    return {from_complex_pair(v(0), -std::conj(v(2))),
            from_complex_pair(v(1), -std::conj(v(3)))};
}

} // namespace

W2Range w2_range(const BazParams& params, const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(quaternion_hermitian_form(params, a));
    W2Range r;
    r.min = 2.0 * es.eigenvalues()(0);
    r.max = 2.0 * es.eigenvalues()(3);
    r.argmin = complete_sp2_column(quaternion_column(es.eigenvectors().col(0)));
    return r;
}

double w2_value(const BazParams& params, const Matrix& a, const Sp2Element& k) {
    Matrix b = a * k.embed5();
    double s = 0.0;
    for (int l = 0; l < 5; ++l)
        s += (std::norm(b(l, 1)) + std::norm(b(l, 3))) * double(params.q[size_t(l)]);
    return s;
}

Matrix w1_vector() {
    Matrix m = Matrix::Zero(5, 5);
    for (int i = 0; i < 4; ++i) m(i, i) = Complex(0, 1);
    m(4, 4) = Complex(0, -4);
    return m;
}

Matrix w2_hat_vector() {
    Matrix m = Matrix::Zero(5, 5);
    const double d[5] = {2, -3, 2, -3, 2};
    for (int i = 0; i < 5; ++i) m(i, i) = Complex(0, d[i]);
    return m;
}

std::array<Matrix, 10> sp2_basis5() {
    auto emb = [](const Eigen::Matrix2cd& s, const Eigen::Matrix2cd& t) {
        Sp2Element k{s, t};
        Matrix m = Matrix::Zero(5, 5);
        m.topLeftCorner<4, 4>() = k.embed4();
        return m;
    };
    const Complex i(0, 1);
    Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero();
    std::array<Matrix, 10> out;
    int n = 0;
    Eigen::Matrix2cd s;
    s << i, 0, 0, 0; out[n++] = emb(s, z);
    s << 0, 0, 0, i; out[n++] = emb(s, z);
    s << 0, 1, -1, 0; out[n++] = emb(s, z);
    s << 0, i, i, 0; out[n++] = emb(s, z);
    Eigen::Matrix2cd t;
    t << 1, 0, 0, 0; out[n++] = emb(z, t);
    t << i, 0, 0, 0; out[n++] = emb(z, t);
    t << 0, 0, 0, 1; out[n++] = emb(z, t);
    t << 0, 0, 0, i; out[n++] = emb(z, t);
    t << 0, 1, 1, 0; out[n++] = emb(z, t);
    t << 0, i, i, 0; out[n++] = emb(z, t);
    return out;
}

std::array<Matrix, 5> m_basis5() {
    // m-elements have block form (S T; conj T, S^t) with S anti-Hermitian
    // traceless and T antisymmetric.
    auto emb = [](const Eigen::Matrix2cd& s, const Eigen::Matrix2cd& t) {
        Matrix m = Matrix::Zero(5, 5);
        m.block<2, 2>(0, 0) = s;
        m.block<2, 2>(0, 2) = t;
        m.block<2, 2>(2, 0) = t.conjugate();
        m.block<2, 2>(2, 2) = s.transpose();
        return m;
    };
    const Complex i(0, 1);
    Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero();
    std::array<Matrix, 5> out;
    int n = 0;
    Eigen::Matrix2cd s;
    s << i, 0, 0, -i; out[n++] = emb(s, z);
    s << 0, 1, -1, 0; out[n++] = emb(s, z);
    s << 0, i, i, 0; out[n++] = emb(s, z);
    Eigen::Matrix2cd t;
    t << 0, 1, -1, 0; out[n++] = emb(z, t);
    t << 0, i, -i, 0; out[n++] = emb(z, t);
    return out;
}

namespace {

// Unit combination of the basis orthogonal to v_a under <,>_0.
template <size_t N>
Matrix null_combination(const std::array<Matrix, N>& basis, const Matrix& v_a) {
    Eigen::Matrix<double, Eigen::Dynamic, 1> r(N);
    for (size_t idx = 0; idx < N; ++idx) r(long(idx)) = inner0(basis[idx], v_a);
    Eigen::VectorXd c(N);
    if (r.norm() < 1e-14) {
        c.setZero();
        c(0) = 1.0;
    } else {
        Eigen::VectorXd n = r.normalized();
        int seed = 0;
        for (int k = 1; k < int(N); ++k)
            if (std::abs(n(k)) < std::abs(n(seed))) seed = k;
        c.setZero();
        c(seed) = 1.0;
        c -= n * n.dot(c);
        c.normalize();
    }
    Matrix x = Matrix::Zero(5, 5);
    for (size_t idx = 0; idx < N; ++idx) x += c(long(idx)) * basis[idx];
    return x / norm0(x);
}

void validate_witness_or_throw(const BazParams& params, const Matrix& a,
                               const Matrix& w, const Matrix& x,
                               const Tolerances& tol) {
    Matrix v_a = vertical_vector(params, a);
    double vs = std::max(1.0, norm0(v_a));
    if (std::abs(inner0(w, v_a)) > 6 * tol.horiz * vs * std::max(1.0, norm0(w)) ||
        std::abs(inner0(x, v_a)) > 6 * tol.horiz * vs * std::max(1.0, norm0(x)))
        throw std::runtime_error("bazaikin witness failed horizontality validation");
    for (const Matrix& b : sp2_basis5()) {
        if (std::abs(inner0(w, b)) > tol.horiz * norm0(w) * norm0(b) ||
            std::abs(inner0(x, b)) > tol.horiz * norm0(x) * norm0(b))
            throw std::runtime_error("bazaikin witness failed sp(2)-orthogonality");
    }
    if (!cheeger::plane_zero_curvature(su5_ctx(), LieVector::su(w), LieVector::su(x),
                                       tol.bracket))
        throw std::runtime_error("bazaikin witness failed the zero-curvature test");
}

} // namespace

std::pair<bool, HorizontalityReport> has_horizontal_zero_plane(
    const BazParams& params, const Matrix& a, const Tolerances& tol) {
    HorizontalityReport rep;
    rep.residual = w1_residual(params, a);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(quaternion_hermitian_form(params, a));
    rep.range_min = 2.0 * es.eigenvalues()(0);
    rep.range_max = 2.0 * es.eigenvalues()(3);
    Matrix v_a = vertical_vector(params, a);

    if (std::abs(rep.residual) <= tol.margin) {
        PlaneWitness w;
        w.base_point = a;
        w.kind = "W1";
        w.span_a = LieVector::su(w1_vector());
        w.span_b = LieVector::su(null_combination(m_basis5(), v_a));
        w.direction = Eigen::VectorXcd::Zero(4);
        validate_witness_or_throw(params, a, w.span_a.matrix(), w.span_b.matrix(), tol);
        rep.witness = std::move(w);
        return {true, rep};
    }

    if (rep.range_min <= tol.margin && rep.range_max >= -tol.margin) {
        double lmin = es.eigenvalues()(0), lmax = es.eigenvalues()(3);
        Eigen::Vector4cd v;
        if (lmax <= 0.0) {
            v = es.eigenvectors().col(3);
        } else if (lmin >= 0.0) {
            v = es.eigenvectors().col(0);
        } else {
            double c2 = lmax / (lmax - lmin);
            v = std::sqrt(c2) * es.eigenvectors().col(0) +
                std::sqrt(1 - c2) * es.eigenvectors().col(3);
        }
        Sp2Element k = complete_sp2_column(quaternion_column(v));
        Matrix k5 = k.embed5();
        Matrix w2 = k5 * w2_hat_vector() * k5.adjoint();
        // X = (0 x; -x* 0) with x an eigenvector of the su(4) block for the
        // eigenvalue matching the corner entry; the eigenspace is spanned by
        // the images of e1 and e3.
        Eigen::Vector4cd b1 = k5.topLeftCorner<4, 4>().col(0);
        Eigen::Vector4cd b2 = k5.topLeftCorner<4, 4>().col(2);
        auto make_x = [](const Eigen::Vector4cd& x) {
            Matrix m = Matrix::Zero(5, 5);
            for (int r = 0; r < 4; ++r) {
                m(r, 4) = x(r);
                m(4, r) = -std::conj(x(r));
            }
            return m;
        };
        const Complex iu(0, 1);
        std::array<Matrix, 4> xb = {make_x(b1), make_x(iu * b1), make_x(b2),
                                    make_x(iu * b2)};
        PlaneWitness w;
        w.base_point = a;
        w.kind = "W2";
        w.span_a = LieVector::su(w2);
        w.span_b = LieVector::su(null_combination(xb, v_a));
        w.direction = v;
        validate_witness_or_throw(params, a, w.span_a.matrix(), w.span_b.matrix(), tol);
        rep.witness = std::move(w);
        return {true, rep};
    }
    return {false, rep};
}

InvariantRecord invariants(const BazParams& params) {
    std::vector<long long> ext(params.q.begin(), params.q.end());
    ext.push_back(-params.q_sum());
    Int128 s2 = elementary_symmetric(ext, 2);
    Int128 s3 = elementary_symmetric(ext, 3);
    if (s3 % 8 != 0)
        throw std::domain_error("invariants: sigma_3 not divisible by 8 for " +
                                std::string("this tuple; formula hypotheses violated"));
    InvariantRecord r;
    r.s = s3 < 0 ? (-s3) / 8 : s3 / 8;
    r.p1 = -s2;
    return r;
}

std::vector<FamilyRow> family_table(long long n_max) {
    if (n_max < 1 || n_max % 2 == 0)
        throw std::invalid_argument("family_table: n_max must be odd and >= 1");
    std::vector<FamilyRow> rows;
    for (long long n = 1; n <= n_max; n += 2) {
        BazParams p({1, 1, 1, n, -n});
        FamilyRow row;
        row.n = n;
        row.free = is_free(p);
        row.cls = classify_curvature(p);
        InvariantRecord inv = invariants(p);
        row.s = inv.s;
        row.p1 = inv.p1;
        rows.push_back(row);
    }
    return rows;
}

Matrix a55_zero_point(Rng& rng) {
    Matrix a = haar_su(5, rng);
    double best = 0.0;
    int c0 = 0;
    for (int j = 0; j < 4; ++j)
        if (std::abs(a(4, j)) > best) { best = std::abs(a(4, j)); c0 = j; }
    if (best < 1e-3) {
        Matrix g = Matrix::Identity(5, 5);
        g(0, 0) = g(4, 4) = std::numbers::sqrt2 / 2;
        g(0, 4) = -std::numbers::sqrt2 / 2;
        g(4, 0) = std::numbers::sqrt2 / 2;
        a = a * g;
        best = 0.0;
        for (int j = 0; j < 4; ++j)
            if (std::abs(a(4, j)) > best) { best = std::abs(a(4, j)); c0 = j; }
    }
    Complex s = a(4, c0), t = a(4, 4);
    double ns = std::abs(s), nt = std::abs(t);
    double theta = std::atan2(nt, ns);
    Complex phase = (ns > 0 && nt > 0) ? (t / nt) * std::conj(s / ns) : Complex(1, 0);
    Matrix g = Matrix::Identity(5, 5);
    g(c0, c0) = std::cos(theta);
    g(4, 4) = std::cos(theta);
    g(c0, 4) = -std::sin(theta) * phase;
    g(4, c0) = std::sin(theta) * std::conj(phase);
    return a * g;
}

std::vector<BazParams> enumerate_free_canonical(long long bound) {
    std::vector<long long> odds;
    for (long long v = -bound; v <= bound; ++v)
        if (((v % 2) + 2) % 2 != 0) odds.push_back(v);
    std::vector<BazParams> out;
    Tuple5 t{};
    auto canonical = [](const Tuple5& q) {
        Tuple5 neg;
        for (int i = 0; i < 5; ++i) neg[size_t(4 - i)] = -q[size_t(i)];
        return !(std::lexicographical_compare(q.begin(), q.end(), neg.begin(), neg.end()));
    };
    size_t n = odds.size();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b)
            for (size_t c = b; c < n; ++c)
                for (size_t d = c; d < n; ++d)
                    for (size_t e = d; e < n; ++e) {
                        t = {odds[a], odds[b], odds[c], odds[d], odds[e]};
                        if (!canonical(t)) continue;
                        BazParams p(t);
                        if (is_free(p)) out.push_back(p);
                    }
    return out;
}

} // namespace biq::baz
