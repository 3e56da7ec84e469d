#ifndef BIQ_REPORT_HPP
#define BIQ_REPORT_HPP

#include <functional>
#include <string>

#include <json.hpp>

#include "biq/algebra.hpp"
#include "biq/witness.hpp"

namespace biq::rep {

using nlohmann::json;

struct RunConfig {
    std::uint64_t seed = 12345;
    int samples = 100;
    int workers = 1;
    int grid = 256;
    Tolerances tol;
    std::string format = "text"; // text | json | csv

    json to_json() const;
};

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, int rows, int cols);
json cvector_to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd cvector_from_json(const json& j);

/// Exact integer: emitted as a JSON number when it fits in 2^53, as a decimal
/// string beyond that.
json int128_to_json(Int128 v);

/// Witness serialization.  Every witness carries enough data to re-validate
/// from scratch: the family, its integer parameters, the base point and the
/// spanning pair (matrices as row-major [re, im] pairs).
json esch_witness_to_json(const std::array<long long, 3>& p,
                          const std::array<long long, 3>& q, double lambda,
                          const PlaneWitness& w);
json baz_witness_to_json(const std::array<long long, 5>& q, double lambda,
                         const PlaneWitness& w);
json torus_witness_to_json(const std::string& action_kind, long long a, long long b,
                           long long c, const Quaternion& q1, const Quaternion& q2,
                           const Quaternion& v);

/// Recomputes horizontality and the zero-curvature test for a serialized
/// witness; returns false (with a reason) on any failure.
bool validate_witness(const json& w, const Tolerances& tol, std::string* why = nullptr);

/// Deterministic renderings; both skip the timing field.
std::string render_text(const json& report);
std::string render_csv(const json& report);

/// Runs fn(0..n-1) on `workers` threads; item results must be written to
/// index-addressed storage so output does not depend on the thread count.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

} // namespace biq::rep

#endif
