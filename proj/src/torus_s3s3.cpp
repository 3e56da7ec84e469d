#include "biq/torus_s3s3.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biq::torus {

namespace {

const Quaternion kI = Quaternion::i();

Quaternion ad_conj_i(const Quaternion& q) { return quat_ad(q.conj(), kI); }

long long half_abs(long long m) {
    long long a = m < 0 ? -m : m;
    return a / 2;
}

} // namespace

std::string to_string(const TorusAction& action) {
    switch (action.kind) {
        case TorusAction::Kind::L: return "U_L";
        case TorusAction::Kind::AB:
            return "U_{" + std::to_string(action.a) + "," + std::to_string(action.b) + "}";
        case TorusAction::Kind::C: return "U_" + std::to_string(action.c);
    }
    return "?";
}

Kernel ineffective_kernel(const TorusAction& action) {
    switch (action.kind) {
        case TorusAction::Kind::L: return Kernel::Trivial;
        case TorusAction::Kind::AB:
            return (action.a + action.b) % 2 != 0 ? Kernel::DeltaZ2 : Kernel::Trivial;
        case TorusAction::Kind::C:
            return action.c % 2 != 0 ? Kernel::DeltaZ2 : Kernel::Trivial;
    }
    return Kernel::Trivial;
}

std::pair<Quaternion, Quaternion> special_point_coords(SpecialPoint p) {
    const Quaternion one = Quaternion::one(), j = Quaternion::j();
    switch (p) {
        case SpecialPoint::OneOne: return {one, one};
        case SpecialPoint::OneJ: return {one, j};
        case SpecialPoint::JOne: return {j, one};
        case SpecialPoint::JJ: return {j, j};
    }
    return {one, one};
}

std::string to_string(SpecialPoint p) {
    switch (p) {
        case SpecialPoint::OneOne: return "(1,1)";
        case SpecialPoint::OneJ: return "(1,j)";
        case SpecialPoint::JOne: return "(j,1)";
        case SpecialPoint::JJ: return "(j,j)";
    }
    return "?";
}

FixedExponent fixed_exponents(const TorusAction& action, SpecialPoint point) {
    if (action.kind == TorusAction::Kind::L)
        throw std::invalid_argument("fixed_exponents: U_L has no nontrivial isotropy");
    if (action.kind == TorusAction::Kind::AB) {
        long long a = action.a, b = action.b;
        switch (point) {
            case SpecialPoint::OneOne: return {CircleRelation::ZEqualsW, 1 - a - b};
            case SpecialPoint::OneJ: return {CircleRelation::ZEqualsWBar, 1 - a + b};
            case SpecialPoint::JOne: return {CircleRelation::ZEqualsWBar, 1 + a - b};
            case SpecialPoint::JJ: return {CircleRelation::ZEqualsW, 1 + a + b};
        }
    }
    long long c = action.c;
    switch (point) {
        case SpecialPoint::OneOne: return {CircleRelation::ZEqualsW, c - 1};
        case SpecialPoint::OneJ: return {CircleRelation::ZEqualsW, c + 1};
        case SpecialPoint::JOne: return {CircleRelation::ZEqualsWBar, c + 1};
        case SpecialPoint::JJ: return {CircleRelation::ZEqualsWBar, c - 1};
    }
    return {};
}

std::vector<IsotropyRecord> isotropy_table(const TorusAction& action) {
    if (action.kind == TorusAction::Kind::L)
        throw std::invalid_argument("isotropy_table: U_L acts freely");
    bool halved = ineffective_kernel(action) == Kernel::DeltaZ2;
    std::vector<IsotropyRecord> out;
    for (SpecialPoint p : kSpecialPoints) {
        long long m = fixed_exponents(action, p).exponent;
        long long order = halved ? half_abs(m) : (m < 0 ? -m : m);
        out.push_back({p, order});
    }
    return out;
}

bool is_free(const TorusAction& action) {
    switch (action.kind) {
        case TorusAction::Kind::L: return true;
        case TorusAction::Kind::AB: return action.a == 0 && action.b == 0;
        case TorusAction::Kind::C: return action.c == 0;
    }
    return false;
}

double dependence_det(const Quaternion& q1, const Quaternion& q2) {
    if (std::abs(q1.norm2() - 1.0) > 1e-9 || std::abs(q2.norm2() - 1.0) > 1e-9)
        throw std::invalid_argument("dependence_det: arguments must be unit quaternions");
    Quaternion u = ad_conj_i(q1), v = ad_conj_i(q2);
    return u.y * v.z - u.z * v.y;
}

std::vector<Quaternion> horizontality_rows(const TorusAction& action,
                                           const Quaternion& q1, const Quaternion& q2) {
    Quaternion u = ad_conj_i(q1), v = ad_conj_i(q2);
    if (action.kind == TorusAction::Kind::C) {
        return {u, v * double(action.c), kI};
    }
    double a = double(action.a), b = double(action.b); // L is AB(0,0)
    return {u - kI * a, kI * a, v - kI * b, kI * b};
}

std::array<QuatPair, 2> vertical_basis(const TorusAction& action, const Quaternion& q1,
                                       const Quaternion& q2) {
    Quaternion u = ad_conj_i(q1), v = ad_conj_i(q2);
    if (action.kind == TorusAction::Kind::C) {
        return {QuatPair{u * 0.5, v * (0.5 * double(action.c))},
                QuatPair{kI * -0.5, kI * -0.5}};
    }
    double a = double(action.a), b = double(action.b);
    return {QuatPair{(u - kI * a) * 0.5, kI * (-0.5 * a)},
            QuatPair{kI * (-0.5 * b), (v - kI * b) * 0.5}};
}

std::vector<Quaternion> vertical_space_constraints(const TorusAction& action,
                                                   const Quaternion& q1,
                                                   const Quaternion& q2) {
    auto basis = vertical_basis(action, q1, q2);
    // pairing the plane vectors (v,0) and (0,v) against both vertical fields
    return {basis[0].a, basis[1].a, basis[0].b, basis[1].b};
}

namespace {

ZeroPlaneSolution classify_rows(const std::vector<Quaternion>& rows) {
    Eigen::MatrixXd m(long(rows.size()), 3);
    for (size_t r = 0; r < rows.size(); ++r) {
        m(long(r), 0) = rows[r].x;
        m(long(r), 1) = rows[r].y;
        m(long(r), 2) = rows[r].z;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    double smax = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    double tol = 1e-9 * std::max(1.0, smax);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++rank;
    ZeroPlaneSolution sol;
    int nullity = 3 - rank;
    sol.status = nullity <= 0 ? ZeroPlaneStatus::NONE
                              : (nullity == 1 ? ZeroPlaneStatus::UNIQUE
                                              : ZeroPlaneStatus::CIRCLE);
    for (int c = rank; c < 3; ++c) {
        Eigen::Vector3d col = svd.matrixV().col(c);
        sol.basis.push_back(Quaternion::imag(col(0), col(1), col(2)));
    }
    return sol;
}

} // namespace

ZeroPlaneSolution zero_plane_status(const TorusAction& action, const Quaternion& q1,
                                    const Quaternion& q2) {
    return classify_rows(horizontality_rows(action, q1, q2));
}

std::string to_string(ZeroPlaneStatus s) {
    switch (s) {
        case ZeroPlaneStatus::NONE: return "NONE";
        case ZeroPlaneStatus::UNIQUE: return "UNIQUE";
        case ZeroPlaneStatus::CIRCLE: return "CIRCLE";
    }
    return "?";
}

std::string to_string(TorusVerdict v) {
    return v == TorusVerdict::ALMOST_POSITIVE ? "ALMOST_POSITIVE"
                                              : "NOT_ALMOST_POSITIVE_FREE";
}

TorusVerdict curvature_verdict(const TorusAction& action) {
    return is_free(action) ? TorusVerdict::NOT_ALMOST_POSITIVE_FREE
                           : TorusVerdict::ALMOST_POSITIVE;
}

std::pair<Quaternion, Quaternion> dependence_locus_point(Rng& rng) {
    Quaternion q1 = haar_unit_quaternion(rng);
    Quaternion w = ad_conj_i(q1);
    double alpha = gaussian(rng), beta = gaussian(rng);
    Quaternion u = kI * alpha + w * beta;
    if (u.norm() < 1e-6) u = kI;
    u = u.normalized();
    // rotation r with Ad_r i = u
    double c = dot(kI, u);
    Quaternion r;
    if (c > 1.0 - 1e-12) {
        r = Quaternion::one();
    } else if (c < -1.0 + 1e-12) {
        r = Quaternion::j();
    } else {
        Quaternion axis = Quaternion::imag(kI.y * u.z - kI.z * u.y,
                                           kI.z * u.x - kI.x * u.z,
                                           kI.x * u.y - kI.y * u.x)
                              .normalized();
        double half = 0.5 * std::acos(std::clamp(c, -1.0, 1.0));
        r = Quaternion(std::cos(half), 0, 0, 0) + axis * std::sin(half);
    }
    double psi = 2 * std::numbers::pi * uniform01(rng);
    Quaternion s(std::cos(psi), std::sin(psi), 0, 0);
    Quaternion q2 = (r * s).conj();
    return {q1, q2};
}

} // namespace biq::torus
