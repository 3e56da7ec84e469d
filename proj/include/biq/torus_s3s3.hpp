#ifndef BIQ_TORUS_S3S3_HPP
#define BIQ_TORUS_S3S3_HPP

#include <array>
#include <string>
#include <vector>

#include "biq/cheeger.hpp"
#include "biq/witness.hpp"

namespace biq::torus {

/// The T^2 actions on S^3 x S^3 that are diagonal on the right:
///   L:  (z,w) * (q1,q2) = (z q1, w q2)
///   AB: (z,w) * (q1,q2) = (z q1 c, w q2 c), c = conj(z^a w^b)
///   C:  (z,w) * (q1,q2) = (z q1 c, z^c0 q2 c), c = conj(w)
struct TorusAction {
    enum class Kind { L, AB, C };
    Kind kind = Kind::L;
    long long a = 0, b = 0; // AB parameters
    long long c = 0;        // C parameter

    static TorusAction L() { return {}; }
    static TorusAction AB(long long a, long long b) {
        return {Kind::AB, a, b, 0};
    }
    static TorusAction C(long long c) { return {Kind::C, 0, 0, c}; }
};

std::string to_string(const TorusAction& action);

enum class Kernel { Trivial, DeltaZ2 };

/// DeltaZ2 = {+-(1,1)} exactly when a+b (AB) or c (C) is odd.
Kernel ineffective_kernel(const TorusAction& action);

/// The four points whose orbits can carry isotropy.
enum class SpecialPoint { OneOne, OneJ, JOne, JJ };

constexpr std::array<SpecialPoint, 4> kSpecialPoints = {
    SpecialPoint::OneOne, SpecialPoint::OneJ, SpecialPoint::JOne, SpecialPoint::JJ};

std::pair<Quaternion, Quaternion> special_point_coords(SpecialPoint p);
std::string to_string(SpecialPoint p);

enum class CircleRelation { ZEqualsW, ZEqualsWBar };

struct FixedExponent {
    CircleRelation relation = CircleRelation::ZEqualsW;
    long long exponent = 0; // isotropy circle = {z : z^exponent = 1}
};

/// Circle relation and vanishing exponent of the isotropy at a special point;
/// throws for kind L.
FixedExponent fixed_exponents(const TorusAction& action, SpecialPoint point);

struct IsotropyRecord {
    SpecialPoint point = SpecialPoint::OneOne;
    long long order = 1; // 0 encodes S^1, 1 encodes the trivial group
};

/// Isotropy orders at the four special points (modulo the ineffective
/// kernel); throws for kind L.
std::vector<IsotropyRecord> isotropy_table(const TorusAction& action);

/// Free iff L, AB(0,0) or C(0).
bool is_free(const TorusAction& action);

/// det of ( <Ad_{conj q1} i, j>  <Ad_{conj q1} i, k>
///          <Ad_{conj q2} i, j>  <Ad_{conj q2} i, k> );
/// zero iff i, Ad_{conj q1} i, Ad_{conj q2} i are linearly dependent.
double dependence_det(const Quaternion& q1, const Quaternion& q2);

enum class ZeroPlaneStatus { NONE, UNIQUE, CIRCLE };

std::string to_string(ZeroPlaneStatus s);

struct ZeroPlaneSolution {
    ZeroPlaneStatus status = ZeroPlaneStatus::NONE;
    /// Basis of the space of directions v with Span{Phi^{-1}(v,0),
    /// Phi^{-1}(0,v)} horizontal (orthonormal, empty when NONE).
    std::vector<Quaternion> basis;
};

/// Solves the linear horizontality system on v in Im H at (q1,q2) and
/// classifies the solution space by rank (singular values below 1e-9 are
/// treated as zero).
ZeroPlaneSolution zero_plane_status(const TorusAction& action, const Quaternion& q1,
                                    const Quaternion& q2);

/// Rows of the constraint system (the direct route; a second route derives
/// the same rows from the vertical-space basis, see
/// vertical_space_constraints).
std::vector<Quaternion> horizontality_rows(const TorusAction& action,
                                           const Quaternion& q1, const Quaternion& q2);

/// Vertical space at (q1,q2), left-translated to the identity: a basis of
/// pairs (theta- and phi-directions).
std::array<QuatPair, 2> vertical_basis(const TorusAction& action, const Quaternion& q1,
                                       const Quaternion& q2);

/// Constraint rows re-derived by pairing the two plane vectors (v,0), (0,v)
/// against the vertical basis (consistency oracle for horizontality_rows).
std::vector<Quaternion> vertical_space_constraints(const TorusAction& action,
                                                   const Quaternion& q1,
                                                   const Quaternion& q2);

enum class TorusVerdict { ALMOST_POSITIVE, NOT_ALMOST_POSITIVE_FREE };

std::string to_string(TorusVerdict v);

/// Almost positive curvature iff the action is not free.
TorusVerdict curvature_verdict(const TorusAction& action);

/// A pair (q1,q2) on the dependence hypersurface: q2 rotates i into the span
/// of {i, Ad_{conj q1} i}.
std::pair<Quaternion, Quaternion> dependence_locus_point(Rng& rng);

} // namespace biq::torus

#endif
