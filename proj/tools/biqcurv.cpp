#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "biq/bazaikin.hpp"
#include "biq/cheeger.hpp"
#include "biq/eschenburg.hpp"
#include "biq/report.hpp"
#include "biq/torus_s3s3.hpp"

using namespace biq;
using rep::json;
using rep::RunConfig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitVerification = 3;

std::chrono::steady_clock::time_point g_start;

struct Options {
    RunConfig cfg;
    std::string out;

    // classify/verify parameters
    std::vector<long long> p, q;
    std::vector<long long> ab;
    std::optional<long long> c;
    bool l_action = false;

    // scan bounds and filters
    long long max = 0;
    long long family_n = 0;
    long long ab_max = 0;
    long long c_max = 0;
    bool boundary = false;
    std::string class_filter;
    std::optional<long long> s_filter;

    std::string campaign = "random";
};

void emit(json report, const Options& opt) {
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - g_start)
                              .count();
    std::string text;
    if (opt.cfg.format == "json")
        text = report.dump(2) + "\n";
    else if (opt.cfg.format == "csv")
        text = rep::render_csv(report);
    else
        text = rep::render_text(report);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + opt.out);
        f << text;
    }
}

json report_skeleton(const std::string& command, const Options& opt) {
    return json{{"command", command},
                {"config", opt.cfg.to_json()},
                {"results", json::array()},
                {"witnesses", json::array()}};
}

esch::EschParams esch_params(const Options& opt) {
    if (opt.p.size() != 3 || opt.q.size() != 3)
        throw std::invalid_argument("eschenburg requires --p a,b,c and --q d,e,f");
    return esch::EschParams({opt.p[0], opt.p[1], opt.p[2]},
                            {opt.q[0], opt.q[1], opt.q[2]});
}

baz::BazParams baz_params(const Options& opt) {
    if (opt.q.size() != 5)
        throw std::invalid_argument("bazaikin requires --q q1,...,q5");
    return baz::BazParams({opt.q[0], opt.q[1], opt.q[2], opt.q[3], opt.q[4]});
}

torus::TorusAction torus_action(const Options& opt) {
    int given = int(!opt.ab.empty()) + int(opt.c.has_value()) + int(opt.l_action);
    if (given != 1)
        throw std::invalid_argument("torus requires exactly one of --ab a,b | --c n | --l");
    if (opt.l_action) return torus::TorusAction::L();
    if (opt.c) return torus::TorusAction::C(*opt.c);
    if (opt.ab.size() != 2) throw std::invalid_argument("--ab needs two integers");
    return torus::TorusAction::AB(opt.ab[0], opt.ab[1]);
}

json esch_classify_row(const esch::EschParams& params) {
    esch::EschClassification c = esch::classify_curvature(params);
    return json{{"family", "eschenburg"},
                {"p", params.p},
                {"q", params.q},
                {"free", esch::is_free(params)},
                {"almost_free", esch::is_almost_free(params)},
                {"class", esch::to_string(c.cls)},
                {"note", c.note},
                {"rep_p", c.representative.p},
                {"rep_q", c.representative.q}};
}

json baz_classify_row(const baz::BazParams& params) {
    baz::BazClassification c = baz::classify_curvature(params);
    baz::InvariantRecord inv = baz::invariants(params);
    json row{{"family", "bazaikin"},
             {"q", params.q},
             {"free", true},
             {"class", baz::to_string(c.curv)},
             {"s", rep::int128_to_json(inv.s)},
             {"p1", rep::int128_to_json(inv.p1)}};
    row["boundary_n"] = c.boundary_n ? json(*c.boundary_n) : json(nullptr);
    return row;
}

json torus_classify_row(const torus::TorusAction& action) {
    json row{{"family", "torus"},
             {"action", torus::to_string(action)},
             {"kernel", torus::ineffective_kernel(action) == torus::Kernel::DeltaZ2
                            ? "DeltaZ2"
                            : "trivial"},
             {"free", torus::is_free(action)},
             {"verdict", torus::to_string(torus::curvature_verdict(action))}};
    if (action.kind != torus::TorusAction::Kind::L) {
        json orders = json::array();
        for (const auto& rec : torus::isotropy_table(action)) orders.push_back(rec.order);
        row["isotropy"] = orders;
    }
    return row;
}

int cmd_classify(const std::string& family, Options& opt) {
    json report = report_skeleton("classify " + family, opt);
    if (family == "eschenburg")
        report["results"].push_back(esch_classify_row(esch_params(opt)));
    else if (family == "bazaikin")
        report["results"].push_back(baz_classify_row(baz_params(opt)));
    else
        report["results"].push_back(torus_classify_row(torus_action(opt)));
    emit(report, opt);
    return kExitOk;
}

// --- scan ---------------------------------------------------------------------

int cmd_scan(const std::string& family, Options& opt) {
    json report = report_skeleton("scan " + family, opt);
    json& rows = report["results"];
    if (family == "eschenburg") {
        if (opt.max <= 0) throw std::invalid_argument("scan eschenburg requires --max N");
        const esch::EschParams action1({0, 0, 0}, {-1, 0, 1});
        const esch::EschParams action2({0, 1, 1}, {0, 0, 2});
        for (const esch::EschParams& params : esch::enumerate_free(opt.max)) {
            if (opt.boundary) {
                auto ps = params.p, qs = params.q;
                std::sort(ps.begin(), ps.end());
                std::sort(qs.begin(), qs.end());
                if (qs[1] != ps[0] && qs[1] != ps[2]) continue;
            }
            esch::EschClassification c = esch::classify_curvature(params);
            if (!opt.class_filter.empty() && esch::to_string(c.cls) != opt.class_filter)
                continue;
            json row{{"p", params.p}, {"q", params.q}, {"class", esch::to_string(c.cls)}};
            if (opt.boundary)
                row["equivalent_to"] =
                    esch::params_equivalent(params, action1) ? "W11" : "E0";
            rows.push_back(row);
        }
    } else if (family == "bazaikin") {
        if (opt.family_n > 0) {
            for (const baz::FamilyRow& fr : baz::family_table(opt.family_n)) {
                json row{{"n", fr.n},
                         {"free", fr.free},
                         {"class", baz::to_string(fr.cls.curv)},
                         {"s", rep::int128_to_json(fr.s)},
                         {"p1", rep::int128_to_json(fr.p1)}};
                row["boundary_n"] = fr.cls.boundary_n ? json(*fr.cls.boundary_n) : json(nullptr);
                rows.push_back(row);
            }
        } else if (opt.max > 0) {
            for (const baz::BazParams& params : baz::enumerate_free_canonical(opt.max)) {
                baz::BazClassification c = baz::classify_curvature(params);
                if (!opt.class_filter.empty() &&
                    baz::to_string(c.curv) != opt.class_filter)
                    continue;
                baz::InvariantRecord inv = baz::invariants(params);
                if (opt.s_filter && inv.s != Int128(*opt.s_filter)) continue;
                json row{{"q", params.q},
                         {"class", baz::to_string(c.curv)},
                         {"s", rep::int128_to_json(inv.s)},
                         {"p1", rep::int128_to_json(inv.p1)}};
                rows.push_back(row);
            }
        } else {
            throw std::invalid_argument("scan bazaikin requires --max N or --family-n N");
        }
    } else {
        if (opt.ab_max <= 0 && opt.c_max <= 0)
            throw std::invalid_argument("scan torus requires --ab-max N or --c-max N");
        for (long long a = -opt.ab_max; a <= opt.ab_max && opt.ab_max > 0; ++a)
            for (long long b = -opt.ab_max; b <= opt.ab_max; ++b)
                rows.push_back(torus_classify_row(torus::TorusAction::AB(a, b)));
        for (long long c = -opt.c_max; c <= opt.c_max && opt.c_max > 0; ++c)
            rows.push_back(torus_classify_row(torus::TorusAction::C(c)));
    }
    emit(report, opt);
    return kExitOk;
}

// --- verify -------------------------------------------------------------------

struct CampaignOutcome {
    json results = json::array();
    json witnesses = json::array();
    bool sound = true;
    std::string note;
};

CampaignOutcome esch_random_campaign(const esch::EschParams& params, const Options& opt) {
    CampaignOutcome out;
    int n = opt.cfg.samples;
    std::vector<int> zero(size_t(n), 0);
    std::vector<json> wit(static_cast<size_t>(n));
    std::vector<std::string> errors(static_cast<size_t>(n));
    double min_abs_res = 1e30, min_gap = 1e30;
    std::mutex mtx;
    rep::parallel_for(n, opt.cfg.workers, [&](int i) {
        Rng rng = rng_stream(opt.cfg.seed, uint64_t(i));
        Matrix a = haar_su(3, rng);
        try {
            auto [found, r] = esch::has_horizontal_zero_plane(params, a, opt.cfg.tol);
            if ((i % 64) == 0) { // spot-check the eigen range against the grid
                auto [glo, ghi] = esch::y1_range_grid(params, a, opt.cfg.grid);
                if (std::abs(glo - r.range_min) > 1e-5 || std::abs(ghi - r.range_max) > 1e-5)
                    throw std::runtime_error("grid cross-check failed for the Y1 range");
            }
            zero[size_t(i)] = found ? 1 : 0;
            if (found && r.witness)
                wit[size_t(i)] =
                    rep::esch_witness_to_json(params.p, params.q, 0.5, *r.witness);
            double gap = (r.range_min > 0)   ? r.range_min
                         : (r.range_max < 0) ? -r.range_max
                                             : 0.0;
            std::lock_guard<std::mutex> lock(mtx);
            min_abs_res = std::min(min_abs_res, std::abs(r.residual));
            min_gap = std::min(min_gap, gap);
        } catch (const std::exception& e) {
            errors[size_t(i)] = e.what();
        }
    });
    int zeros = 0;
    for (int i = 0; i < n; ++i) {
        zeros += zero[size_t(i)];
        if (!wit[size_t(i)].is_null()) out.witnesses.push_back(wit[size_t(i)]);
        if (!errors[size_t(i)].empty()) {
            out.sound = false;
            out.note = errors[size_t(i)];
        }
    }
    out.results.push_back(json{{"campaign", "random"},
                               {"points", n},
                               {"zero_plane_points", zeros},
                               {"min_abs_y3_residual", min_abs_res},
                               {"min_y1_gap", min_gap}});
    return out;
}

CampaignOutcome esch_locus_campaign(const esch::EschParams& params, const Options& opt) {
    CampaignOutcome out;
    esch::EschClassification c = esch::classify_curvature(params);
    esch::EschLocus kind;
    if (c.cls == esch::EschClass::ALMOST_POSITIVE_E0)
        kind = esch::EschLocus::E0_DET;
    else if (c.cls == esch::EschClass::ORBIFOLD_DAGGER)
        kind = esch::EschLocus::DAGGER_LENS;
    else
        throw std::invalid_argument(
            "locus campaign needs E0 or dagger parameters; got class " +
            esch::to_string(c.cls));
    int n = opt.cfg.samples;
    int found_count = 0, family_dim_ok = 0;
    for (int i = 0; i < n; ++i) {
        Rng rng = rng_stream(opt.cfg.seed, uint64_t(i));
        Matrix a = esch::zero_locus_point(params, kind, rng);
        auto [found, r] = esch::has_horizontal_zero_plane(params, a, opt.cfg.tol);
        if (found && r.witness) {
            ++found_count;
            out.witnesses.push_back(
                rep::esch_witness_to_json(params.p, params.q, 0.5, *r.witness));
        }
        if (kind == esch::EschLocus::DAGGER_LENS &&
            esch::lens_plane_family_dim(params, a) == 1)
            ++family_dim_ok;
    }
    out.sound = found_count == n &&
                (kind != esch::EschLocus::DAGGER_LENS || family_dim_ok == n);
    if (!out.sound) out.note = "some locus points failed witness construction";
    json row{{"campaign", "locus"},
             {"kind", kind == esch::EschLocus::E0_DET ? "E0_DET" : "DAGGER_LENS"},
             {"points", n},
             {"witnesses_validated", found_count}};
    if (kind == esch::EschLocus::DAGGER_LENS) row["family_dim_one"] = family_dim_ok;
    out.results.push_back(row);
    return out;
}

CampaignOutcome oracle_campaign(cheeger::PairId id, const Options& opt) {
    CampaignOutcome out;
    int n = opt.cfg.samples;
    std::vector<int> agree(size_t(n), 0);
    rep::parallel_for(n, opt.cfg.workers, [&](int i) {
        Rng rng = rng_stream(opt.cfg.seed, uint64_t(i));
        cheeger::SymmetricPairContext base(id, 0.5);
        LieVector x = cheeger::random_lie_vector(base, rng);
        LieVector y = cheeger::random_lie_vector(base, rng);
        double gram = inner0(x, x) * inner0(y, y) - inner0(x, y) * inner0(x, y);
        if (gram <= 1e-10 * inner0(x, x) * inner0(y, y)) {
            agree[size_t(i)] = 1;
            return;
        }
        bool ok = true;
        for (double lambda : {0.3, 0.5, 0.7}) {
            cheeger::SymmetricPairContext ctx(id, lambda);
            if (cheeger::plane_zero_curvature(ctx, x, y, opt.cfg.tol.bracket) !=
                cheeger::lifted_bracket_oracle(ctx, x, y, opt.cfg.tol.bracket))
                ok = false;
        }
        agree[size_t(i)] = ok ? 1 : 0;
    });
    int agreements = 0;
    for (int v : agree) agreements += v;
    out.sound = agreements == n;
    if (!out.sound) out.note = "oracle disagreement";
    out.results.push_back(json{{"campaign", "oracle"},
                               {"planes", n},
                               {"agreements", agreements}});
    return out;
}

CampaignOutcome baz_random_campaign(const baz::BazParams& params, const Options& opt) {
    CampaignOutcome out;
    int n = opt.cfg.samples;
    std::vector<int> zero(size_t(n), 0);
    std::vector<json> wit(static_cast<size_t>(n));
    std::vector<std::string> errors(static_cast<size_t>(n));
    rep::parallel_for(n, opt.cfg.workers, [&](int i) {
        Rng rng = rng_stream(opt.cfg.seed, uint64_t(i));
        Matrix a = haar_su(5, rng);
        try {
            auto [found, r] = baz::has_horizontal_zero_plane(params, a, opt.cfg.tol);
            zero[size_t(i)] = found ? 1 : 0;
            if (found && r.witness)
                wit[size_t(i)] = rep::baz_witness_to_json(params.q, 0.5, *r.witness);
        } catch (const std::exception& e) {
            errors[size_t(i)] = e.what();
        }
    });
    int zeros = 0;
    for (int i = 0; i < n; ++i) {
        zeros += zero[size_t(i)];
        if (!wit[size_t(i)].is_null()) out.witnesses.push_back(wit[size_t(i)]);
        if (!errors[size_t(i)].empty()) {
            out.sound = false;
            out.note = errors[size_t(i)];
        }
    }
    out.results.push_back(
        json{{"campaign", "random"}, {"points", n}, {"zero_plane_points", zeros}});
    return out;
}

CampaignOutcome baz_locus_campaign(const baz::BazParams& params, const Options& opt) {
    CampaignOutcome out;
    baz::BazClassification c = baz::classify_curvature(params);
    if (c.curv != baz::BazCurv::ALMOST_POSITIVE_11111m1)
        throw std::invalid_argument(
            "locus campaign needs the (1,1,1,1,-1) space; got class " +
            baz::to_string(c.curv));
    int n = opt.cfg.samples;
    int found_count = 0;
    for (int i = 0; i < n; ++i) {
        Rng rng = rng_stream(opt.cfg.seed, uint64_t(i));
        Matrix a = baz::a55_zero_point(rng);
        auto [found, r] = baz::has_horizontal_zero_plane(params, a, opt.cfg.tol);
        if (found && r.witness) {
            ++found_count;
            out.witnesses.push_back(rep::baz_witness_to_json(params.q, 0.5, *r.witness));
        }
    }
    out.sound = found_count == n;
    if (!out.sound) out.note = "some a55 = 0 points failed witness construction";
    out.results.push_back(json{{"campaign", "locus"},
                               {"kind", "A55_ZERO"},
                               {"points", n},
                               {"witnesses_validated", found_count}});
    return out;
}

CampaignOutcome torus_random_campaign(const torus::TorusAction& action,
                                      const Options& opt) {
    CampaignOutcome out;
    int n = opt.cfg.samples;
    std::vector<int> status(size_t(n), 0);
    std::vector<json> wit(static_cast<size_t>(n));
    std::vector<std::string> errors(static_cast<size_t>(n));
    rep::parallel_for(n, opt.cfg.workers, [&](int i) {
        Rng rng = rng_stream(opt.cfg.seed, uint64_t(i));
        Quaternion q1 = haar_unit_quaternion(rng), q2 = haar_unit_quaternion(rng);
        auto sol = torus::zero_plane_status(action, q1, q2);
        status[size_t(i)] = int(sol.status);
        if (!sol.basis.empty()) {
            // every claimed direction must give a flat horizontal plane
            const Quaternion& v = sol.basis.front();
            cheeger::SymmetricPairContext ctx(cheeger::PairId::S3S3_DIAG, 0.5);
            if (!cheeger::plane_zero_curvature(ctx, LieVector::s3s3(v, {}),
                                               LieVector::s3s3({}, v),
                                               opt.cfg.tol.bracket)) {
                errors[size_t(i)] = "solution direction is not a flat plane";
                return;
            }
            std::string kind = action.kind == torus::TorusAction::Kind::L  ? "L"
                               : action.kind == torus::TorusAction::Kind::AB ? "AB"
                                                                             : "C";
            wit[size_t(i)] =
                rep::torus_witness_to_json(kind, action.a, action.b, action.c, q1, q2, v);
        }
    });
    int none = 0, unique = 0, circle = 0;
    for (int i = 0; i < n; ++i) {
        if (status[size_t(i)] == int(torus::ZeroPlaneStatus::NONE)) ++none;
        if (status[size_t(i)] == int(torus::ZeroPlaneStatus::UNIQUE)) ++unique;
        if (status[size_t(i)] == int(torus::ZeroPlaneStatus::CIRCLE)) ++circle;
        if (!wit[size_t(i)].is_null() && out.witnesses.size() < 32)
            out.witnesses.push_back(wit[size_t(i)]);
        if (!errors[size_t(i)].empty()) {
            out.sound = false;
            out.note = errors[size_t(i)];
        }
    }
    out.results.push_back(json{{"campaign", "random"},
                               {"points", n},
                               {"none", none},
                               {"unique", unique},
                               {"circle", circle}});
    return out;
}

CampaignOutcome torus_locus_campaign(const torus::TorusAction& action,
                                     const Options& opt) {
    CampaignOutcome out;
    int n = opt.cfg.samples;
    int nonzero = 0;
    for (int i = 0; i < n; ++i) {
        Rng rng = rng_stream(opt.cfg.seed, uint64_t(i));
        auto [q1, q2] = torus::dependence_locus_point(rng);
        auto sol = torus::zero_plane_status(action, q1, q2);
        if (sol.status != torus::ZeroPlaneStatus::NONE) ++nonzero;
    }
    out.sound = nonzero == n;
    if (!out.sound) out.note = "a dependence-locus point reported no zero plane";
    out.results.push_back(json{{"campaign", "locus"},
                               {"kind", "DEPENDENCE_DET_ZERO"},
                               {"points", n},
                               {"nonzero_status", nonzero}});
    return out;
}

int cmd_verify(const std::string& family, Options& opt) {
    json report = report_skeleton("verify " + family, opt);
    CampaignOutcome out;
    if (family == "eschenburg") {
        esch::EschParams params = esch_params(opt);
        if (opt.campaign == "random") out = esch_random_campaign(params, opt);
        else if (opt.campaign == "locus") out = esch_locus_campaign(params, opt);
        else if (opt.campaign == "oracle")
            out = oracle_campaign(cheeger::PairId::SU3_U2, opt);
        else throw std::invalid_argument("unknown campaign " + opt.campaign);
    } else if (family == "bazaikin") {
        baz::BazParams params = baz_params(opt);
        if (opt.campaign == "random") out = baz_random_campaign(params, opt);
        else if (opt.campaign == "locus") out = baz_locus_campaign(params, opt);
        else if (opt.campaign == "oracle")
            out = oracle_campaign(cheeger::PairId::SU5_U4, opt);
        else throw std::invalid_argument("unknown campaign " + opt.campaign);
    } else {
        torus::TorusAction action = torus_action(opt);
        if (opt.campaign == "random") out = torus_random_campaign(action, opt);
        else if (opt.campaign == "locus") out = torus_locus_campaign(action, opt);
        else if (opt.campaign == "oracle")
            out = oracle_campaign(cheeger::PairId::S3S3_DIAG, opt);
        else throw std::invalid_argument("unknown campaign " + opt.campaign);
    }
    report["results"] = out.results;
    report["witnesses"] = out.witnesses;
    if (!out.sound) report["error"] = out.note;
    emit(report, opt);
    if (!out.sound) {
        std::cerr << "verification failed: " << out.note << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_report(const std::string& input, Options& opt) {
    std::ifstream f(input, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot read report file " + input);
    json report;
    try {
        f >> report;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    }
    const json empty = json::array();
    const json& witnesses = report.contains("witnesses") ? report.at("witnesses") : empty;
    for (const json& w : witnesses) {
        std::string why;
        if (!rep::validate_witness(w, opt.cfg.tol, &why)) {
            std::cerr << "witness re-validation failed: " << why << "\n";
            return kExitVerification;
        }
    }
    emit(report, opt);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"biqcurv: curvature diagnostics for Eschenburg spaces, Bazaikin "
                 "spaces and torus quotients of S^3 x S^3"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;

    app.add_option("--seed", opt.cfg.seed, "RNG seed")->envname("BIQCURV_SEED");
    app.add_option("--workers", opt.cfg.workers, "worker threads")
        ->envname("BIQCURV_WORKERS");
    app.add_option("--format", opt.cfg.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("BIQCURV_FORMAT");
    app.add_option("--out", opt.out, "write the report to a file instead of stdout");
    app.add_option("--tol-bracket", opt.cfg.tol.bracket, "bracket-vanishing tolerance")
        ->envname("BIQCURV_TOL_BRACKET");
    app.add_option("--tol-horiz", opt.cfg.tol.horiz, "horizontality tolerance")
        ->envname("BIQCURV_TOL_HORIZ");
    app.add_option("--margin", opt.cfg.tol.margin, "zero-bracketing margin")
        ->envname("BIQCURV_MARGIN");
    app.add_option("--grid", opt.cfg.grid, "grid resolution for cross-checks")
        ->envname("BIQCURV_GRID");

    std::string family, input;
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("family", family, "eschenburg | bazaikin | torus")
            ->required()
            ->check(CLI::IsMember({"eschenburg", "bazaikin", "torus"}));
        sub->add_option("--p", opt.p, "Eschenburg p weights")->delimiter(',');
        sub->add_option("--q", opt.q, "q weights")->delimiter(',');
        sub->add_option("--ab", opt.ab, "torus U_{a,b} parameters")->delimiter(',');
        sub->add_option("--c", opt.c, "torus U_c parameter");
        sub->add_flag("--l", opt.l_action, "torus U_L action");
    };

    CLI::App* classify = app.add_subcommand("classify", "classify one parameter set");
    add_family(classify);

    CLI::App* scan = app.add_subcommand("scan", "lattice sweeps");
    add_family(scan);
    scan->add_option("--max", opt.max, "entry bound for eschenburg/bazaikin scans");
    scan->add_option("--family-n", opt.family_n, "bazaikin (1,1,1,n,-n) table up to n");
    scan->add_option("--ab-max", opt.ab_max, "torus |a|,|b| bound");
    scan->add_option("--c-max", opt.c_max, "torus |c| bound");
    scan->add_flag("--boundary", opt.boundary, "restrict to boundary actions");
    scan->add_option("--class", opt.class_filter, "keep rows of this class only");
    scan->add_option("--s", opt.s_filter, "keep bazaikin rows with this s only");

    CLI::App* verify = app.add_subcommand("verify", "numerical verification campaigns");
    add_family(verify);
    verify->add_option("--campaign", opt.campaign, "random | locus | oracle")
        ->check(CLI::IsMember({"random", "locus", "oracle"}));
    verify->add_option("-n,--samples", opt.cfg.samples, "sample count");

    CLI::App* report = app.add_subcommand("report", "re-validate and render a report");
    report->add_option("--input", input, "report JSON path")->required();

    CLI11_PARSE(app, argc, argv);

    g_start = std::chrono::steady_clock::now();
    try {
        if (classify->parsed()) return cmd_classify(family, opt);
        if (scan->parsed()) return cmd_scan(family, opt);
        if (verify->parsed()) return cmd_verify(family, opt);
        if (report->parsed()) return cmd_report(input, opt);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kExitVerification;
    }
}
