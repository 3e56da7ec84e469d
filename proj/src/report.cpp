#include "biq/report.hpp"

#include <atomic>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "biq/bazaikin.hpp"
#include "biq/cheeger.hpp"
#include "biq/eschenburg.hpp"
#include "biq/torus_s3s3.hpp"

namespace biq::rep {

json RunConfig::to_json() const {
    return json{{"seed", seed},
                {"samples", samples},
                {"workers", workers},
                {"grid", grid},
                {"tol_bracket", tol.bracket},
                {"tol_horiz", tol.horiz},
                {"margin", tol.margin},
                {"format", format}};
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            rows.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    return rows;
}

Matrix matrix_from_json(const json& j, int rows, int cols) {
    if (!j.is_array() || int(j.size()) != rows * cols)
        throw std::invalid_argument("matrix_from_json: wrong entry count");
    Matrix m(rows, cols);
    int idx = 0;
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) {
            const json& e = j[size_t(idx++)];
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("matrix_from_json: entry is not [re, im]");
            m(i, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    return m;
}

json cvector_to_json(const Eigen::VectorXcd& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i)
        out.push_back(json::array({v(i).real(), v(i).imag()}));
    return out;
}

Eigen::VectorXcd cvector_from_json(const json& j) {
    Eigen::VectorXcd v(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        v(long(i)) = Complex(j[i][0].get<double>(), j[i][1].get<double>());
    return v;
}

json int128_to_json(Int128 v) {
    const Int128 lim = Int128(1) << 53;
    if (v < lim && v > -lim) return json((long long)v);
    return json(biq::to_string(v));
}

json esch_witness_to_json(const std::array<long long, 3>& p,
                          const std::array<long long, 3>& q, double lambda,
                          const PlaneWitness& w) {
    return json{{"family", "eschenburg"},
                {"kind", w.kind},
                {"lambda", lambda},
                {"p", p},
                {"q", q},
                {"base_point", matrix_to_json(w.base_point)},
                {"span_a", matrix_to_json(w.span_a.matrix())},
                {"span_b", matrix_to_json(w.span_b.matrix())},
                {"direction", cvector_to_json(w.direction)}};
}

json baz_witness_to_json(const std::array<long long, 5>& q, double lambda,
                         const PlaneWitness& w) {
    return json{{"family", "bazaikin"},
                {"kind", w.kind},
                {"lambda", lambda},
                {"q", q},
                {"base_point", matrix_to_json(w.base_point)},
                {"span_a", matrix_to_json(w.span_a.matrix())},
                {"span_b", matrix_to_json(w.span_b.matrix())},
                {"direction", cvector_to_json(w.direction)}};
}

json torus_witness_to_json(const std::string& action_kind, long long a, long long b,
                           long long c, const Quaternion& q1, const Quaternion& q2,
                           const Quaternion& v) {
    auto quat = [](const Quaternion& x) {
        return json::array({x.w, x.x, x.y, x.z});
    };
    return json{{"family", "torus"},
                {"kind", "TORUS"},
                {"action_kind", action_kind},
                {"a", a},
                {"b", b},
                {"c", c},
                {"q1", quat(q1)},
                {"q2", quat(q2)},
                {"v", json::array({v.x, v.y, v.z})}};
}

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

bool validate_su_witness(const json& w, const Tolerances& tol, std::string* why) {
    bool esch = w.at("family") == "eschenburg";
    int n = esch ? 3 : 5;
    double lambda = w.at("lambda").get<double>();
    Matrix a = matrix_from_json(w.at("base_point"), n, n);
    Matrix sa = matrix_from_json(w.at("span_a"), n, n);
    Matrix sb = matrix_from_json(w.at("span_b"), n, n);
    if (!is_special_unitary(a, 1e-8)) return fail(why, "base point not special unitary");
    if (!is_anti_hermitian_traceless(sa, 1e-8) || !is_anti_hermitian_traceless(sb, 1e-8))
        return fail(why, "spanning pair not in the Lie algebra");

    Matrix v_a;
    if (esch) {
        std::array<long long, 3> p = w.at("p"), q = w.at("q");
        v_a = esch::vertical_vector(esch::EschParams(p, q), a);
    } else {
        std::array<long long, 5> q = w.at("q");
        v_a = baz::vertical_vector(baz::BazParams(q), a);
        for (const Matrix& basis : baz::sp2_basis5()) {
            if (std::abs(inner0(sa, basis)) > tol.horiz * norm0(sa) * norm0(basis) ||
                std::abs(inner0(sb, basis)) > tol.horiz * norm0(sb) * norm0(basis))
                return fail(why, "spanning pair not orthogonal to sp(2)");
        }
    }
    double vs = std::max(1.0, norm0(v_a));
    if (std::abs(inner0(sa, v_a)) > 6 * tol.horiz * vs * std::max(1.0, norm0(sa)) ||
        std::abs(inner0(sb, v_a)) > 6 * tol.horiz * vs * std::max(1.0, norm0(sb)))
        return fail(why, "spanning pair not horizontal");
    cheeger::SymmetricPairContext ctx{
        esch ? cheeger::PairId::SU3_U2 : cheeger::PairId::SU5_U4, lambda};
    try {
        if (!cheeger::plane_zero_curvature(ctx, LieVector::su(sa), LieVector::su(sb),
                                           tol.bracket))
            return fail(why, "plane is not flat");
    } catch (const std::exception& e) {
        return fail(why, std::string("plane test rejected input: ") + e.what());
    }
    return true;
}

bool validate_torus_witness(const json& w, const Tolerances& tol, std::string* why) {
    std::string kind = w.at("action_kind");
    torus::TorusAction action;
    if (kind == "L") action = torus::TorusAction::L();
    else if (kind == "AB")
        action = torus::TorusAction::AB(w.at("a").get<long long>(), w.at("b").get<long long>());
    else if (kind == "C") action = torus::TorusAction::C(w.at("c").get<long long>());
    else return fail(why, "unknown torus action kind");
    auto quat = [&](const char* key) {
        const json& q = w.at(key);
        return Quaternion(q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
                          q[3].get<double>());
    };
    Quaternion q1 = quat("q1"), q2 = quat("q2");
    if (std::abs(q1.norm2() - 1) > 1e-8 || std::abs(q2.norm2() - 1) > 1e-8)
        return fail(why, "base point not on S^3 x S^3");
    const json& vv = w.at("v");
    Quaternion v = Quaternion::imag(vv[0].get<double>(), vv[1].get<double>(),
                                    vv[2].get<double>());
    if (v.norm() < 1e-12) return fail(why, "zero direction");
    for (const Quaternion& row : torus::horizontality_rows(action, q1, q2))
        if (std::abs(dot(row, v)) > 1e-9 * std::max(1.0, row.norm()) * v.norm())
            return fail(why, "direction not horizontal");
    cheeger::SymmetricPairContext ctx{cheeger::PairId::S3S3_DIAG, 0.5};
    LieVector x = LieVector::s3s3(v, {});
    LieVector y = LieVector::s3s3({}, v);
    if (!cheeger::plane_zero_curvature(ctx, x, y, tol.bracket))
        return fail(why, "plane is not flat");
    return true;
}

} // namespace

bool validate_witness(const json& w, const Tolerances& tol, std::string* why) {
    try {
        std::string family = w.at("family");
        if (family == "eschenburg" || family == "bazaikin")
            return validate_su_witness(w, tol, why);
        if (family == "torus") return validate_torus_witness(w, tol, why);
        return fail(why, "unknown family");
    } catch (const std::exception& e) {
        return fail(why, std::string("malformed witness: ") + e.what());
    }
}

namespace {

std::string value_to_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace

std::string render_text(const json& report) {
    std::ostringstream out;
    out << "command: " << report.value("command", std::string("?")) << "\n";
    if (report.contains("config")) {
        out << "config:";
        const json& cfg = report.at("config");
        for (auto it = cfg.begin(); it != cfg.end(); ++it)
            out << " " << it.key() << "=" << value_to_string(it.value());
        out << "\n";
    }
    const json empty = json::array();
    const json& results = report.contains("results") ? report.at("results") : empty;
    out << "results: " << results.size() << "\n";
    for (const json& row : results) {
        out << " ";
        for (auto it = row.begin(); it != row.end(); ++it)
            out << " " << it.key() << "=" << value_to_string(it.value());
        out << "\n";
    }
    const json& witnesses = report.contains("witnesses") ? report.at("witnesses") : empty;
    out << "witnesses: " << witnesses.size() << "\n";
    return out.str();
}

std::string render_csv(const json& report) {
    const json empty = json::array();
    const json& results = report.contains("results") ? report.at("results") : empty;
    std::set<std::string> keys;
    for (const json& row : results)
        for (auto it = row.begin(); it != row.end(); ++it) keys.insert(it.key());
    std::ostringstream out;
    bool first = true;
    for (const auto& k : keys) {
        if (!first) out << ",";
        out << k;
        first = false;
    }
    out << "\n";
    for (const json& row : results) {
        first = true;
        for (const auto& k : keys) {
            if (!first) out << ",";
            if (row.contains(k)) {
                std::string v = value_to_string(row.at(k));
                for (char& ch : v)
                    if (ch == ',') ch = ';';
                out << v;
            }
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
    if (workers <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int count = std::min(workers, n);
    pool.reserve(size_t(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace biq::rep
