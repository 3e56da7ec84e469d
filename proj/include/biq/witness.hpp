#ifndef BIQ_WITNESS_HPP
#define BIQ_WITNESS_HPP

#include <optional>
#include <string>

#include "biq/algebra.hpp"

namespace biq {

struct Tolerances {
    double bracket = 1e-9; // relative bracket-vanishing threshold
    double horiz = 1e-8;   // witness horizontality validation
    double margin = 1e-8;  // zero-bracketing decision margin
};

/// A certified horizontal zero-curvature plane at base_point: the plane is
/// Span{Phi^{-1}(span_a), Phi^{-1}(span_b)} after left translation to the
/// identity.
struct PlaneWitness {
    Matrix base_point;
    LieVector span_a = LieVector::unchecked_pair({}, {});
    LieVector span_b = LieVector::unchecked_pair({}, {});
    Eigen::VectorXcd direction; // the direction data (u, or x) behind span_a
    std::string kind;           // "Y3", "Y1", "W1", "W2", "TORUS"
};

struct HorizontalityReport {
    double residual = 0.0; // Y3 (or W1) residual
    double range_min = 0.0, range_max = 0.0;
    std::optional<PlaneWitness> witness;
};

} // namespace biq

#endif
