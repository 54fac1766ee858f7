#include "zetadiv/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetadiv/mu.hpp"
#include "zetadiv/verify.hpp"
#include "zetadiv/zeta.hpp"

namespace zetadiv::cli {

using nlohmann::json;

namespace {

std::string side_of(bool complement) { return complement ? "complement" : "variety"; }

void print_bound_rows(std::ostream& out, const std::vector<verify::BoundRow>& rows) {
    if (rows.empty()) {
        out << "  (no factors: vacuous)\n";
        return;
    }
    for (const auto& r : rows) {
        out << "  " << (r.pass ? "ok  " : "FAIL") << "  " << std::setw(24) << std::left
            << r.factor.to_string() << "  side=" << r.side << "  w=" << r.weight
            << "  min_vq=" << r.min_vq.get_str() << "  required=" << r.required;
        if (r.mu_j) out << "  [mu_" << *r.mu_j << "(" << *r.mu_n << ")]";
        if (r.tight) out << "  (tight)";
        out << "  " << r.rule << "\n";
    }
}

void print_divisibility(std::ostream& out, const verify::DivisibilityReport& rep) {
    out << rep.check << ": " << rep.overall << "\n";
    out << "  target: " << rep.target << "\n";
    out << "  zeta:   " << rep.zeta << "\n";
    out << "  dim = " << rep.dim_used << " (" << rep.dim_provenance << ")\n";
    if (!rep.error.empty()) out << "  error: " << rep.error << "\n";
    print_bound_rows(out, rep.rows);
}

int verdict_exit(const std::string& overall) {
    if (overall == "pass" || overall == "probe-complete") return 0;
    if (overall == "fail") return 1;
    return 3;
}

} // namespace

VarietyFile parse_variety_json(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidParamsError(origin + ": " + e.what());
    }
    auto require = [&](const char* field) -> const json& {
        if (!j.contains(field))
            throw InvalidParamsError(origin + ": missing field \"" + field + "\"");
        return j.at(field);
    };
    VarietyFile vf;
    std::uint32_t p, e, n;
    try {
        p = require("p").get<std::uint32_t>();
        e = require("e").get<std::uint32_t>();
        n = require("n").get<std::uint32_t>();
    } catch (const json::exception& ex) {
        throw InvalidParamsError(origin + ": p, e, n must be integers (" + ex.what() + ")");
    }
    std::string ambient_str = require("ambient").get<std::string>();
    algebra::Ambient ambient;
    if (ambient_str == "affine") ambient = algebra::Ambient::affine;
    else if (ambient_str == "projective") ambient = algebra::Ambient::projective;
    else
        throw InvalidParamsError(origin +
                                 ": field \"ambient\" must be \"affine\" or \"projective\"");
    const json& polys_json = require("polys");
    if (!polys_json.is_array() || polys_json.empty())
        throw InvalidParamsError(origin + ": field \"polys\" must be a nonempty array");
    algebra::FieldSpec field = algebra::build_field(p, e);
    std::vector<algebra::IntMultiPoly> polys;
    algebra::VarStyle style =
        ambient == algebra::Ambient::affine ? algebra::VarStyle::affine
                                            : algebra::VarStyle::projective;
    for (std::size_t i = 0; i < polys_json.size(); ++i) {
        if (!polys_json[i].is_string())
            throw InvalidParamsError(origin + ": polys[" + std::to_string(i) +
                                     "] must be a string");
        try {
            polys.push_back(
                algebra::parse_poly(polys_json[i].get<std::string>(), n, style));
        } catch (const Error& e2) {
            throw InvalidParamsError(origin + ": polys[" + std::to_string(i) + "]: " +
                                     e2.what());
        }
    }
    vf.spec = algebra::VarietySpec::make(field, ambient, n, polys);
    if (j.contains("dim")) vf.dim_override = j.at("dim").get<int>();
    if (j.contains("budget")) vf.budget = j.at("budget").get<std::uint64_t>();
    return vf;
}

VarietyFile load_variety_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParamsError("cannot open variety file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_variety_json(buf.str(), path);
}

namespace {

struct CommonArgs {
    std::string file;
    std::uint64_t budget_flag = 0;    // 0 = use file/default
    bool has_budget_flag = false;
};

counting::CountOptions make_count_options(const VarietyFile& vf, const CommonArgs& common) {
    counting::CountOptions opts;
    if (vf.budget) opts.budget = *vf.budget;
    if (common.has_budget_flag) opts.budget = common.budget_flag;
    return opts;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"zeta functions of varieties over small finite fields and exact "
                 "q-divisibility checks on their zeros and poles"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // mu
    auto* mu_cmd = app.add_subcommand("mu", "print a table of mu_j(n; d_1..d_r)");
    std::uint32_t mu_n = 1;
    std::vector<std::uint32_t> mu_degrees;
    std::int64_t mu_jmax = -1;
    mu_cmd->add_option("--n", mu_n, "ambient argument n")->required();
    mu_cmd->add_option("--degrees", mu_degrees, "degrees d_1,d_2,...")
        ->required()
        ->delimiter(',');
    mu_cmd->add_option("--jmax", mu_jmax, "largest j (default n)");

    // count
    auto* count_cmd = app.add_subcommand("count", "exact point count over F_{q^k}");
    CommonArgs count_common;
    std::uint32_t count_k = 1;
    bool count_complement = false;
    count_cmd->add_option("file", count_common.file, "variety file (JSON)")->required();
    count_cmd->add_option("--k", count_k, "field extension degree k (default 1)");
    count_cmd->add_flag("--complement", count_complement, "count the ambient complement");
    auto* count_budget =
        count_cmd->add_option("--budget", count_common.budget_flag,
                              "override the enumeration budget in ambient points (default 10^8)");

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "reconstruct the zeta function from counts");
    CommonArgs zeta_common;
    bool zeta_complement = false;
    std::uint32_t zeta_bound = 32, zeta_holdout = 2;
    zeta_cmd->add_option("file", zeta_common.file, "variety file (JSON)")->required();
    zeta_cmd->add_flag("--complement", zeta_complement, "zeta of the ambient complement");
    zeta_cmd->add_option("--bound", zeta_bound, "cap on numerator/denominator degree");
    zeta_cmd->add_option("--holdout", zeta_holdout,
                         "held-out counts certifying the reconstruction "
                         "(default 2; 0 accepts the first consistent fit)");
    auto* zeta_budget = zeta_cmd->add_option("--budget", zeta_common.budget_flag,
                                             "override the enumeration budget in ambient points (default 10^8)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "theorem-level divisibility checks");
    verify_cmd->require_subcommand(1);

    auto* ax_cmd = verify_cmd->add_subcommand("ax-katz", "point-count divisibility");
    CommonArgs ax_common;
    std::uint32_t ax_kmax = 3;
    ax_cmd->add_option("file", ax_common.file, "variety file (JSON)")->required();
    ax_cmd->add_option("--kmax", ax_kmax, "check k = 1..kmax (default 3)");
    auto* ax_budget = ax_cmd->add_option("--budget", ax_common.budget_flag,
                                         "override the enumeration budget in ambient points (default 10^8)");

    auto* proj_cmd =
        verify_cmd->add_subcommand("projective", "zero/pole divisibility for Y and P^n - Y");
    CommonArgs proj_common;
    std::uint32_t proj_bound = 32, proj_holdout = 2;
    proj_cmd->add_option("file", proj_common.file, "variety file (JSON)")->required();
    proj_cmd->add_option("--bound", proj_bound, "zeta degree cap");
    proj_cmd->add_option("--holdout", proj_holdout, "held-out certificate counts");
    auto* proj_budget = proj_cmd->add_option("--budget", proj_common.budget_flag,
                                             "override the enumeration budget in ambient points (default 10^8)");

    auto* polar_cmd = verify_cmd->add_subcommand("polar", "polar divisibility bound");
    CommonArgs polar_common;
    bool polar_assert_ci = false;
    polar_cmd->add_option("file", polar_common.file, "variety file (JSON)")->required();
    polar_cmd->add_flag("--assert-ci", polar_assert_ci,
                        "assert the variety is a complete intersection");
    auto* polar_budget = polar_cmd->add_option("--budget", polar_common.budget_flag,
                                               "override the enumeration budget in ambient points (default 10^8)");

    auto* exc_cmd = verify_cmd->add_subcommand("excision", "point-count excision identity");
    CommonArgs exc_common;
    std::uint32_t exc_kmax = 3;
    exc_cmd->add_option("file", exc_common.file, "variety file (JSON)")->required();
    exc_cmd->add_option("--kmax", exc_kmax, "check k = 1..kmax (default 3)");
    auto* exc_budget = exc_cmd->add_option("--budget", exc_common.budget_flag,
                                           "override the enumeration budget in ambient points (default 10^8)");

    // probe
    auto* probe_cmd = app.add_subcommand("probe", "open-question probes (never asserted)");
    probe_cmd->require_subcommand(1);
    auto* probe_affine_cmd =
        probe_cmd->add_subcommand("affine", "affine beyond-middle divisibility probe");
    CommonArgs probe_common;
    probe_affine_cmd->add_option("file", probe_common.file, "variety file (JSON)")
        ->required();
    auto* probe_budget = probe_affine_cmd->add_option(
        "--budget", probe_common.budget_flag, "override the enumeration budget in ambient points (default 10^8)");

    std::vector<std::string> argv_ordered = args;
    std::reverse(argv_ordered.begin(), argv_ordered.end());
    try {
        app.parse(argv_ordered);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    count_common.has_budget_flag = count_budget->count() > 0;
    zeta_common.has_budget_flag = zeta_budget->count() > 0;
    ax_common.has_budget_flag = ax_budget->count() > 0;
    proj_common.has_budget_flag = proj_budget->count() > 0;
    polar_common.has_budget_flag = polar_budget->count() > 0;
    exc_common.has_budget_flag = exc_budget->count() > 0;
    probe_common.has_budget_flag = probe_budget->count() > 0;
    const bool as_json = format == "json";

    try {
        if (mu_cmd->parsed()) {
            std::uint32_t jmax = mu_jmax < 0 ? mu_n : static_cast<std::uint32_t>(mu_jmax);
            json rows = json::array();
            for (std::uint32_t j = 0; j <= jmax; ++j) {
                std::uint32_t value = mu::compute_mu(j, mu_n, mu_degrees);
                if (as_json) rows.push_back(json{{"j", j}, {"mu", value}});
                else out << "mu_" << j << " = " << value << "\n";
            }
            if (as_json)
                out << json{{"check", "mu"}, {"n", mu_n}, {"degrees", mu_degrees},
                            {"rows", rows}}
                           .dump(2)
                    << "\n";
            return 0;
        }

        if (count_cmd->parsed()) {
            VarietyFile vf = load_variety_file(count_common.file);
            auto opts = make_count_options(vf, count_common);
            counting::CountProvider prov(vf.spec, opts);
            mpz_class n = prov.count(count_k, count_complement);
            if (as_json)
                out << json{{"check", "count"},
                            {"spec", vf.spec.describe()},
                            {"k", count_k},
                            {"target", side_of(count_complement)},
                            {"count", n.get_str()}}
                           .dump(2)
                    << "\n";
            else
                out << "#" << side_of(count_complement) << "(F_q^" << count_k
                    << ") = " << n.get_str() << "\n";
            return 0;
        }

        if (zeta_cmd->parsed()) {
            VarietyFile vf = load_variety_file(zeta_common.file);
            zeta::ZetaOptions zopts;
            zopts.bound = zeta_bound;
            zopts.holdout = zeta_holdout;
            zopts.counting = make_count_options(vf, zeta_common);
            auto z = zeta::zeta_of(vf.spec, zeta_complement, zopts);
            if (as_json) out << z.to_json().dump(2) << "\n";
            else
                out << "Z(" << side_of(zeta_complement) << ", T) = " << z.to_string()
                    << "\n";
            return 0;
        }

        if (ax_cmd->parsed()) {
            VarietyFile vf = load_variety_file(ax_common.file);
            auto report =
                verify::verify_ax_katz(vf.spec, ax_kmax, make_count_options(vf, ax_common));
            if (as_json) out << report.to_json().dump(2) << "\n";
            else {
                out << "ax-katz: " << report.overall << "   (mu_0 = " << report.mu0
                    << " from n-arg " << report.mu_n << ")\n";
                for (const auto& r : report.rows)
                    out << "  " << (r.pass ? "ok  " : "FAIL") << "  k=" << r.k << "  "
                        << std::setw(10) << std::left << r.target << "  count=" << r.count.get_str()
                        << "  divisor=q^" << r.exponent << "\n";
            }
            return verdict_exit(report.overall);
        }

        if (proj_cmd->parsed()) {
            VarietyFile vf = load_variety_file(proj_common.file);
            verify::VerifyOptions vopts;
            vopts.dim_override = vf.dim_override;
            vopts.zeta.bound = proj_bound;
            vopts.zeta.holdout = proj_holdout;
            vopts.zeta.counting = make_count_options(vf, proj_common);
            auto report = verify::verify_projective_bounds(vf.spec, vopts);
            if (as_json) out << report.to_json().dump(2) << "\n";
            else {
                out << "projective bounds: " << report.overall << "\n";
                print_divisibility(out, report.complement);
                print_divisibility(out, report.variety);
            }
            return verdict_exit(report.overall);
        }

        if (polar_cmd->parsed()) {
            VarietyFile vf = load_variety_file(polar_common.file);
            verify::VerifyOptions vopts;
            vopts.dim_override = vf.dim_override;
            vopts.assert_ci = polar_assert_ci;
            vopts.zeta.counting = make_count_options(vf, polar_common);
            auto report = verify::verify_polar(vf.spec, vopts);
            if (as_json) out << report.to_json().dump(2) << "\n";
            else {
                out << "wan-polar: " << report.overall << "   Z = " << report.zeta
                    << "   dim = " << report.dim_used << " (" << report.dim_provenance
                    << "), orientation " << (report.orientation > 0 ? "+1" : "-1")
                    << ", oriented poles from the " << report.pole_side
                    << " side of Z, mu_1 = " << report.mu1 << "\n";
                print_bound_rows(out, report.rows);
            }
            return verdict_exit(report.overall);
        }

        if (exc_cmd->parsed()) {
            VarietyFile vf = load_variety_file(exc_common.file);
            auto report = verify::verify_excision(vf.spec, exc_kmax,
                                                  make_count_options(vf, exc_common));
            if (as_json) out << report.to_json().dump(2) << "\n";
            else {
                out << "excision: " << report.overall << "\n";
                out << "  Y     = " << report.homogenized << "\n";
                out << "  Y_inf = " << report.at_infinity << "\n";
                for (const auto& r : report.rows)
                    out << "  " << (r.pass ? "ok  " : "FAIL") << "  k=" << r.k << "  "
                        << r.complement_pn.get_str() << " = " << r.complement_an.get_str()
                        << " + " << r.complement_infinity.get_str() << "\n";
            }
            return verdict_exit(report.overall);
        }

        if (probe_affine_cmd->parsed()) {
            VarietyFile vf = load_variety_file(probe_common.file);
            verify::VerifyOptions vopts;
            vopts.dim_override = vf.dim_override;
            vopts.zeta.counting = make_count_options(vf, probe_common);
            auto report = verify::probe_affine(vf.spec, vopts);
            if (as_json) out << report.to_json().dump(2) << "\n";
            else {
                out << "open-question probe: " << report.overall << "\n";
                if (report.any_violation)
                    out << "  *** PROBE VIOLATION: at least one factor misses the "
                           "conjectural exponent; see rows below ***\n";
                out << "  " << report.disclaimer << "\n";
                out << "  Z(X) = " << report.zeta_x << "   dim = " << report.dim_used
                    << " (" << report.dim_provenance << ")\n";
                print_bound_rows(out, report.x_rows);
                out << "  Z(complement) = " << report.zeta_complement << "\n";
                print_bound_rows(out, report.complement_rows);
            }
            // violations are interesting, not failures: the question is open
            return report.overall == "probe-complete" ? 0 : 3;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::input ? 2 : 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace zetadiv::cli
