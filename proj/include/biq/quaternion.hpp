#ifndef BIQ_QUATERNION_HPP
#define BIQ_QUATERNION_HPP

#include <array>
#include <cmath>
#include <stdexcept>

namespace biq {

/// Quaternion w + x i + y j + z k.  Unit quaternions model points of S^3,
/// imaginary quaternions (w == 0) model tangent vectors.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }
    static constexpr Quaternion imag(double x_, double y_, double z_) {
        return {0, x_, y_, z_};
    }

    Quaternion conj() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    Quaternion operator*(double c) const { return {c * w, c * x, c * y, c * z}; }

    Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Quaternion normalized() const {
        double n = norm();
        if (n == 0.0) throw std::invalid_argument("cannot normalize zero quaternion");
        return {w / n, x / n, y / n, z / n};
    }
};

inline Quaternion operator*(double c, const Quaternion& q) { return q * c; }

/// Euclidean inner product on R^4 (restricts to the standard dot on Im H).
inline double dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Lie bracket on Im H = T_1 S^3: [v,w] = vw - wv.
inline Quaternion qbracket(const Quaternion& v, const Quaternion& w) {
    return v * w - w * v;
}

/// Conjugation q v q^{-1} for unit q; an isometry of Im H.
Quaternion quat_ad(const Quaternion& q, const Quaternion& v);

/// The 3x3 rotation matrix of v -> q v q^{-1} in the (i,j,k) basis.
std::array<std::array<double, 3>, 3> quat_rotation_matrix(const Quaternion& q);

} // namespace biq

#endif
