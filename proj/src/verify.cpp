#include "zetadiv/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "zetadiv/mu.hpp"

namespace zetadiv::verify {

using algebra::Ambient;
using algebra::MultiPoly;
using counting::CountProvider;
using zeta::ZetaFunction;

namespace {

std::int64_t clamp64(std::int64_t v, std::int64_t lo, std::int64_t hi) {
    return std::max(lo, std::min(v, hi));
}

struct RuleResult {
    std::uint32_t required = 0;
    std::string rule;
    std::string justification;
    std::optional<std::uint32_t> mu_j, mu_n;
    std::vector<std::uint32_t> mu_degrees;
};

using RuleFn = std::function<RuleResult(unsigned weight)>;

// One row per irreducible factor of both sides of the reduced zeta.
std::vector<BoundRow> analyze_zeta(const ZetaFunction& z, const RuleFn& rule) {
    std::vector<BoundRow> rows;
    auto run_side = [&](const IntPoly& poly, const std::string& side) {
        if (poly.degree() < 1) return;
        for (const auto& [factor, mult] : zeta::factor_integer_poly(poly)) {
            BoundRow row;
            padic::WeightedFactor wf = padic::weigh_factor(factor, side, z.p, z.e);
            row.factor = factor;
            row.multiplicity = mult;
            row.side = side;
            row.weight = wf.weight;
            row.min_vq = wf.min_vq;
            RuleResult rr = rule(row.weight);
            row.required = rr.required;
            row.rule = rr.rule;
            row.justification = rr.justification;
            row.mu_j = rr.mu_j;
            row.mu_n = rr.mu_n;
            row.mu_degrees = rr.mu_degrees;
            row.pass = padic::check_divisibility(factor, z.p, z.e, row.required);
            row.tight = (row.min_vq == mpq_class(static_cast<long>(row.required)));
            rows.push_back(std::move(row));
        }
    };
    // reciprocal zeros live in the numerator, reciprocal poles in the denominator
    run_side(z.numerator, "zero");
    run_side(z.denominator, "pole");
    return rows;
}

bool rows_pass(const std::vector<BoundRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.pass; });
}

mpz_class pow_mpz(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

std::string mu_args_str(std::uint32_t j, std::uint32_t n,
                        const std::vector<std::uint32_t>& degs) {
    std::ostringstream os;
    os << "mu_" << j << "(" << n << "; ";
    for (std::size_t i = 0; i < degs.size(); ++i) {
        if (i) os << ",";
        os << degs[i];
    }
    os << ")";
    return os.str();
}

} // namespace

// ---------------------------------------------------------------------------
// estimate_dimension
// ---------------------------------------------------------------------------

int estimate_dimension(const ZetaFunction& z) {
    if (z.numerator.degree() == 0 && z.denominator.degree() == 0) return -1;
    if (z.denominator.degree() < 1)
        throw OddTopWeightError(
            "zeta of a nonempty variety has no poles; cannot estimate dimension");
    unsigned top = 0;
    for (const auto& [factor, mult] : zeta::factor_integer_poly(z.denominator))
        top = std::max(top, padic::weight_of_factor(factor, z.q()));
    if (top % 2 != 0)
        throw OddTopWeightError("top pole weight " + std::to_string(top) +
                                " is odd; the top class of a variety has even weight");
    return static_cast<int>(top / 2);
}

// ---------------------------------------------------------------------------
// verify_ax_katz
// ---------------------------------------------------------------------------

AxKatzReport verify_ax_katz(const VarietySpec& spec, std::uint32_t kmax,
                            const counting::CountOptions& opts) {
    AxKatzReport report;
    report.spec = spec.describe();
    report.degrees = spec.degrees;
    report.mu_n = spec.ambient == Ambient::affine ? spec.n : spec.n + 1;
    report.mu0 = mu::compute_mu(0, report.mu_n, spec.degrees);
    const std::uint64_t q = spec.field.order_u64();
    CountProvider prov(spec, opts);
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        mpz_class modulus = pow_mpz(q, std::uint64_t(k) * report.mu0);
        if (spec.ambient == Ambient::affine) {
            mpz_class n = prov.count(k, false);
            report.rows.push_back(
                {k, "variety", n, k * report.mu0, mpz_divisible_p(n.get_mpz_t(), modulus.get_mpz_t()) != 0});
            mpz_class c = prov.count(k, true);
            report.rows.push_back(
                {k, "complement", c, k * report.mu0, mpz_divisible_p(c.get_mpz_t(), modulus.get_mpz_t()) != 0});
        } else {
            // projective statement: q^{k mu_0(n+1; d)} divides #(P^n \ Y)
            mpz_class c = prov.count(k, true);
            report.rows.push_back(
                {k, "complement", c, k * report.mu0, mpz_divisible_p(c.get_mpz_t(), modulus.get_mpz_t()) != 0});
        }
    }
    report.overall = std::all_of(report.rows.begin(), report.rows.end(),
                                 [](const AxKatzRow& r) { return r.pass; })
                         ? "pass"
                         : "fail";
    return report;
}

// ---------------------------------------------------------------------------
// verify_projective_bounds
// ---------------------------------------------------------------------------

ProjectiveBoundsReport verify_projective_bounds(const VarietySpec& spec,
                                                const VerifyOptions& opts) {
    if (spec.ambient != Ambient::projective)
        throw InvalidParamsError("verify_projective_bounds requires a projective spec");
    ProjectiveBoundsReport report;
    report.complement.check = "projective-bounds:complement";
    report.variety.check = "projective-bounds:variety";
    const std::uint32_t narg = spec.n + 1;
    const std::uint32_t maxd = *std::max_element(spec.degrees.begin(), spec.degrees.end());

    try {
        CountProvider prov(spec, opts.zeta.counting);
        ZetaFunction zY = zeta::zeta_of(prov, false, opts.zeta);
        ZetaFunction zC = zeta::zeta_of(prov, true, opts.zeta);
        int dim;
        std::string provenance;
        if (opts.dim_override) {
            dim = *opts.dim_override;
            provenance = "user";
        } else {
            dim = estimate_dimension(zY);
            provenance = "estimated";
        }
        report.complement.target = "Z of the complement P^" + std::to_string(spec.n) +
                                   " minus " + spec.describe();
        report.complement.zeta = zC.to_string();
        report.complement.dim_used = dim;
        report.complement.dim_provenance = provenance;
        report.variety.target = "Z of " + spec.describe();
        report.variety.zeta = zY.to_string();
        report.variety.dim_used = dim;
        report.variety.dim_provenance = provenance;

        // (a) complement: weight w lives in H_c^i with i >= w (purity gives
        // weights <= i on H_c^i). Degrees dim+1 <= i <= 2 dim + 2 carry the
        // beyond-middle exponent mu_{i-dim-1}; smaller i carry the
        // cohomological point-count exponent mu_0; larger i only hold ambient
        // Tate classes whose valuation w/2 already exceeds mu_{dim+1}. Since
        // mu is increasing in j, the exponent at J = clamp(w-dim-1, 0, dim+1)
        // is sound for every possible location of the eigenvalue.
        RuleFn complement_rule = [&](unsigned w) {
            RuleResult rr;
            std::int64_t J = clamp64(static_cast<std::int64_t>(w) - dim - 1, 0,
                                     static_cast<std::int64_t>(dim) + 1);
            rr.mu_j = static_cast<std::uint32_t>(J);
            rr.mu_n = narg;
            rr.mu_degrees = spec.degrees;
            rr.required = mu::compute_mu(*rr.mu_j, narg, spec.degrees);
            if (J > 0) {
                rr.rule = "beyond-middle-divisibility-complement";
                rr.justification =
                    "weight " + std::to_string(w) + " forces cohomological degree >= " +
                    std::to_string(w) + "; compactly supported degrees dim+1+j carry " +
                    mu_args_str(*rr.mu_j, narg, spec.degrees) +
                    ", increasing in j, so J = clamp(w-dim-1, 0, dim+1) is sound";
            } else {
                rr.rule = "cohomological-point-count-divisibility";
                rr.justification =
                    "every compactly supported degree of the complement carries the "
                    "point-count exponent " +
                    mu_args_str(0, narg, spec.degrees);
            }
            return rr;
        };

        // (b) variety side: coverage starts at cohomological degree dim(Y).
        // A weight-w class with w < dim may sit in uncovered low degrees, so
        // only the trivial exponent is certified there (algebraic
        // integrality). For w >= dim the Corollary applies when max d_i > 1,
        // the plain integrality exponent otherwise.
        RuleFn variety_rule = [&](unsigned w) {
            RuleResult rr;
            if (static_cast<int>(w) < dim) {
                rr.required = 0;
                rr.rule = "below-middle-uncovered";
                rr.justification =
                    "weight " + std::to_string(w) + " < dim(Y) = " + std::to_string(dim) +
                    " may live below the middle cohomological degree, where no "
                    "divisibility beyond algebraic integrality is certified";
                return rr;
            }
            std::uint32_t j = static_cast<std::uint32_t>(static_cast<int>(w) - dim);
            if (maxd > 1) {
                rr.mu_j = j;
                rr.mu_n = narg;
                rr.mu_degrees = spec.degrees;
                rr.required = mu::compute_mu(j, narg, spec.degrees);
                rr.rule = "beyond-middle-divisibility-variety";
                rr.justification =
                    "weight " + std::to_string(w) +
                    " lives in degree >= max(w, dim); ordinary cohomology in degree "
                    "dim+j carries " +
                    mu_args_str(j, narg, spec.degrees) + " when max d_i > 1";
            } else {
                rr.required = j;
                rr.rule = "deligne-integrality";
                rr.justification =
                    "max d_i = 1: the baseline integrality exponent j = w - dim applies";
            }
            return rr;
        };

        report.complement.rows = analyze_zeta(zC, complement_rule);
        report.complement.overall = rows_pass(report.complement.rows) ? "pass" : "fail";
        report.variety.rows = analyze_zeta(zY, variety_rule);
        report.variety.overall = rows_pass(report.variety.rows) ? "pass" : "fail";
        report.overall = (report.complement.overall == "pass" &&
                          report.variety.overall == "pass")
                             ? "pass"
                             : "fail";
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::input) throw;
        report.overall = "error";
        report.complement.overall = "error";
        report.variety.overall = "error";
        report.complement.error = e.what();
        report.variety.error = e.what();
    }
    return report;
}

// ---------------------------------------------------------------------------
// verify_polar
// ---------------------------------------------------------------------------

PolarReport verify_polar(const VarietySpec& spec, const VerifyOptions& opts) {
    if (spec.ambient != Ambient::affine)
        throw InvalidParamsError("verify_polar requires an affine spec");
    PolarReport report;
    report.spec = spec.describe();
    CountProvider prov(spec, opts.zeta.counting);
    ZetaFunction zX = zeta::zeta_of(prov, false, opts.zeta);
    report.zeta = zX.to_string();
    if (opts.dim_override) {
        report.dim_used = *opts.dim_override;
        report.dim_provenance = "user";
    } else {
        report.dim_used = estimate_dimension(zX);
        report.dim_provenance = "estimated";
    }
    report.ci_asserted = opts.assert_ci;
    bool ci_detected =
        report.dim_used == static_cast<int>(spec.n) - static_cast<int>(spec.r());
    if (!ci_detected && !opts.assert_ci)
        throw NotCompleteIntersectionError(
            "dimension " + std::to_string(report.dim_used) + " differs from n - r = " +
            std::to_string(static_cast<int>(spec.n) - static_cast<int>(spec.r())) +
            "; pass --assert-ci to override");

    // Z(X,T)^{(-1)^(dim-1)}: for odd dim the poles of the oriented function
    // are the poles of Z, for even dim its zeros.
    const bool dim_odd = ((report.dim_used % 2) + 2) % 2 == 1;
    report.orientation = dim_odd ? 1 : -1;
    const IntPoly& side_poly = dim_odd ? zX.denominator : zX.numerator;
    report.pole_side = dim_odd ? "pole" : "zero";
    report.mu1 = mu::compute_mu(1, spec.n, spec.degrees);

    if (side_poly.degree() >= 1) {
        for (const auto& [factor, mult] : zeta::factor_integer_poly(side_poly)) {
            BoundRow row;
            padic::WeightedFactor wf =
                padic::weigh_factor(factor, report.pole_side, zX.p, zX.e);
            row.factor = factor;
            row.multiplicity = mult;
            row.side = report.pole_side;
            row.weight = wf.weight;
            row.min_vq = wf.min_vq;
            row.required = report.mu1;
            row.mu_j = 1;
            row.mu_n = spec.n;
            row.mu_degrees = spec.degrees;
            row.rule = "wan-polar";
            row.justification =
                "reciprocal poles of the oriented zeta of an affine complete "
                "intersection are divisible by q^" +
                mu_args_str(1, spec.n, spec.degrees);
            row.pass = padic::check_divisibility(factor, zX.p, zX.e, row.required);
            row.tight = (row.min_vq == mpq_class(static_cast<long>(row.required)));
            report.rows.push_back(std::move(row));
        }
    }
    report.overall = rows_pass(report.rows) ? "pass" : "fail";
    return report;
}

// ---------------------------------------------------------------------------
// verify_excision
// ---------------------------------------------------------------------------

ExcisionReport verify_excision(const VarietySpec& spec, std::uint32_t kmax,
                               const counting::CountOptions& opts) {
    if (spec.ambient != Ambient::affine)
        throw InvalidParamsError("verify_excision requires an affine spec");
    ExcisionReport report;
    report.spec = spec.describe();

    // Y: homogenize each defining polynomial into P^n
    std::vector<MultiPoly> gpolys;
    gpolys.reserve(spec.polys.size());
    for (const auto& f : spec.polys) gpolys.push_back(algebra::homogenize(f));
    VarietySpec Y = VarietySpec::from_polys(spec.field, Ambient::projective, spec.n, gpolys);
    report.homogenized = Y.describe();

    // Y_inf: the x0 = 0 section, a projective variety in P^{n-1}; its
    // equations are the top-degree parts of the f_i, never zero.
    std::optional<VarietySpec> Yinf;
    if (spec.n >= 2) {
        std::vector<MultiPoly> sections;
        for (const auto& g : gpolys) {
            MultiPoly s(spec.field, spec.n);
            for (const auto& [e, c] : g.terms()) {
                if (e[0] != 0) continue;
                algebra::ExponentVec se(e.begin() + 1, e.end());
                s.add_term(se, c);
            }
            sections.push_back(std::move(s));
        }
        Yinf = VarietySpec::from_polys(spec.field, Ambient::projective, spec.n - 1,
                                       std::move(sections));
        report.at_infinity = Yinf->describe();
    } else {
        // P^0 has one point and the top coefficient never vanishes, so the
        // section at infinity is empty and contributes exactly one point.
        report.at_infinity = "empty section in P^0";
    }

    CountProvider prov_x(spec, opts);
    CountProvider prov_y(Y, opts);
    std::optional<CountProvider> prov_inf;
    if (Yinf) prov_inf.emplace(*Yinf, opts);

    for (std::uint32_t k = 1; k <= kmax; ++k) {
        ExcisionRow row;
        row.k = k;
        row.complement_pn = prov_y.count(k, true);
        row.complement_an = prov_x.count(k, true);
        row.complement_infinity = prov_inf ? prov_inf->count(k, true) : mpz_class(1);
        row.pass = (row.complement_pn == row.complement_an + row.complement_infinity);
        report.rows.push_back(std::move(row));
    }
    report.overall = std::all_of(report.rows.begin(), report.rows.end(),
                                 [](const ExcisionRow& r) { return r.pass; })
                         ? "pass"
                         : "fail";
    return report;
}

// ---------------------------------------------------------------------------
// probe_affine
// ---------------------------------------------------------------------------

ProbeReport probe_affine(const VarietySpec& spec, const VerifyOptions& opts) {
    if (spec.ambient != Ambient::affine)
        throw InvalidParamsError("probe_affine requires an affine spec");
    ProbeReport report;
    report.spec = spec.describe();
    report.disclaimer =
        "open-question probe: these exponents are conjectural for affine "
        "varieties beyond the middle dimension; a violated row would mean either "
        "a genuine counterexample or an artifact of cancellation in the zeta "
        "function, and this tool cannot distinguish the two";

    CountProvider prov(spec, opts.zeta.counting);
    ZetaFunction zX = zeta::zeta_of(prov, false, opts.zeta);
    ZetaFunction zC = zeta::zeta_of(prov, true, opts.zeta);
    report.zeta_x = zX.to_string();
    report.zeta_complement = zC.to_string();
    int dim;
    if (opts.dim_override) {
        dim = *opts.dim_override;
        report.dim_provenance = "user";
    } else {
        dim = estimate_dimension(zX);
        report.dim_provenance = "estimated";
    }
    report.dim_used = dim;

    RuleFn x_rule = [&](unsigned w) {
        RuleResult rr;
        std::int64_t J = clamp64(static_cast<std::int64_t>(w) - dim, 0,
                                 std::max<std::int64_t>(dim, 0));
        rr.mu_j = static_cast<std::uint32_t>(J);
        rr.mu_n = spec.n;
        rr.mu_degrees = spec.degrees;
        rr.required = mu::compute_mu(*rr.mu_j, spec.n, spec.degrees);
        rr.rule = "open-question-affine-variety";
        rr.justification = "probe exponent " + mu_args_str(*rr.mu_j, spec.n, spec.degrees) +
                           " for compactly supported degree dim+j";
        return rr;
    };
    RuleFn c_rule = [&](unsigned w) {
        RuleResult rr;
        std::int64_t J = clamp64(static_cast<std::int64_t>(w) - dim - 1, 0,
                                 static_cast<std::int64_t>(dim) + 1);
        rr.mu_j = static_cast<std::uint32_t>(J);
        rr.mu_n = spec.n;
        rr.mu_degrees = spec.degrees;
        rr.required = mu::compute_mu(*rr.mu_j, spec.n, spec.degrees);
        rr.rule = "open-question-affine-complement";
        rr.justification = "probe exponent " + mu_args_str(*rr.mu_j, spec.n, spec.degrees) +
                           " for compactly supported degree dim+1+j";
        return rr;
    };

    report.x_rows = analyze_zeta(zX, x_rule);
    report.complement_rows = analyze_zeta(zC, c_rule);
    report.any_violation = !rows_pass(report.x_rows) || !rows_pass(report.complement_rows);
    report.overall = "probe-complete";
    return report;
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

nlohmann::json BoundRow::to_json() const {
    nlohmann::json j{
        {"factor", factor.to_string()},
        {"multiplicity", multiplicity},
        {"side", side},
        {"weight", weight},
        {"min_vq", min_vq.get_str()},
        {"required_exponent", required},
        {"rule", rule},
        {"justification", justification},
        {"pass", pass},
        {"tight", tight},
    };
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& x : factor.c) coeffs.push_back(x.get_str());
    j["coeffs"] = coeffs;
    if (mu_j) j["mu_j"] = *mu_j;
    if (mu_n) j["mu_n"] = *mu_n;
    if (!mu_degrees.empty()) j["mu_degrees"] = mu_degrees;
    return j;
}

nlohmann::json DivisibilityReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) rows_json.push_back(r.to_json());
    nlohmann::json j{
        {"check", check},         {"target", target},
        {"zeta", zeta},           {"dim_used", dim_used},
        {"dim_provenance", dim_provenance},
        {"rows", rows_json},      {"overall", overall},
    };
    if (!error.empty()) j["error"] = error;
    return j;
}

nlohmann::json ProjectiveBoundsReport::to_json() const {
    return nlohmann::json{{"check", "projective-bounds"},
                          {"complement", complement.to_json()},
                          {"variety", variety.to_json()},
                          {"overall", overall}};
}

nlohmann::json AxKatzReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows)
        rows_json.push_back(nlohmann::json{{"k", r.k},
                                           {"target", r.target},
                                           {"count", r.count.get_str()},
                                           {"exponent", r.exponent},
                                           {"pass", r.pass}});
    return nlohmann::json{{"check", "ax-katz"}, {"spec", spec},
                          {"mu0", mu0},         {"mu_n", mu_n},
                          {"degrees", degrees}, {"rows", rows_json},
                          {"overall", overall}};
}

nlohmann::json ExcisionReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows)
        rows_json.push_back(nlohmann::json{{"k", r.k},
                                           {"complement_pn", r.complement_pn.get_str()},
                                           {"complement_an", r.complement_an.get_str()},
                                           {"complement_infinity", r.complement_infinity.get_str()},
                                           {"pass", r.pass}});
    return nlohmann::json{{"check", "excision"},
                          {"spec", spec},
                          {"homogenized", homogenized},
                          {"at_infinity", at_infinity},
                          {"rows", rows_json},
                          {"overall", overall}};
}

nlohmann::json PolarReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) rows_json.push_back(r.to_json());
    return nlohmann::json{{"check", "wan-polar"},
                          {"spec", spec},
                          {"zeta", zeta},
                          {"dim_used", dim_used},
                          {"dim_provenance", dim_provenance},
                          {"ci_asserted", ci_asserted},
                          {"orientation", orientation},
                          {"pole_side", pole_side},
                          {"mu1", mu1},
                          {"rows", rows_json},
                          {"overall", overall}};
}

nlohmann::json ProbeReport::to_json() const {
    nlohmann::json xr = nlohmann::json::array();
    for (const auto& r : x_rows) xr.push_back(r.to_json());
    nlohmann::json cr = nlohmann::json::array();
    for (const auto& r : complement_rows) cr.push_back(r.to_json());
    return nlohmann::json{{"check", "open-question-probe"},
                          {"spec", spec},
                          {"dim_used", dim_used},
                          {"dim_provenance", dim_provenance},
                          {"zeta_x", zeta_x},
                          {"zeta_complement", zeta_complement},
                          {"x_rows", xr},
                          {"complement_rows", cr},
                          {"any_violation", any_violation},
                          {"disclaimer", disclaimer},
                          {"overall", overall}};
}

} // namespace zetadiv::verify
