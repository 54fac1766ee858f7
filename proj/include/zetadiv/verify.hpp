#ifndef ZETADIV_VERIFY_HPP
#define ZETADIV_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetadiv/padic.hpp"
#include "zetadiv/zeta.hpp"

namespace zetadiv::verify {

using algebra::VarietySpec;

struct VerifyOptions {
    std::optional<int> dim_override;     // user-supplied dimension wins and is recorded
    zeta::ZetaOptions zeta;
    std::uint32_t kmax = 3;              // count-based checks
    bool assert_ci = false;              // verify_polar
};

// One row per irreducible factor of the reduced zeta under analysis.
struct BoundRow {
    IntPoly factor;
    unsigned multiplicity = 1;
    std::string side;                    // "zero" | "pole"
    unsigned weight = 0;
    mpq_class min_vq;                    // min Newton slope / e
    std::uint32_t required = 0;          // exponent the theorem demands
    std::string rule;                    // machine-readable justification id
    std::string justification;
    std::optional<std::uint32_t> mu_j;   // mu arguments when rule uses mu
    std::optional<std::uint32_t> mu_n;
    std::vector<std::uint32_t> mu_degrees;
    bool pass = false;
    bool tight = false;                  // min_vq == required exactly

    nlohmann::json to_json() const;
};

struct DivisibilityReport {
    std::string check;
    std::string target;                  // which zeta the rows describe
    std::string zeta;                    // printed reduced zeta
    int dim_used = 0;
    std::string dim_provenance;          // "estimated" | "user"
    std::vector<BoundRow> rows;
    std::string overall;                 // "pass" | "fail" | "error"
    std::string error;

    nlohmann::json to_json() const;
};

struct ProjectiveBoundsReport {
    DivisibilityReport complement;       // factors of Z(P^n \ Y)
    DivisibilityReport variety;          // factors of Z(Y)
    std::string overall;                 // "pass" | "fail" | "error"

    nlohmann::json to_json() const;
};

struct AxKatzRow {
    std::uint32_t k = 1;
    std::string target;                  // "variety" | "complement"
    mpz_class count;
    std::uint32_t exponent = 0;          // q^exponent must divide count
    bool pass = false;
};

struct AxKatzReport {
    std::string spec;
    std::uint32_t mu0 = 0;
    std::uint32_t mu_n = 0;              // the n argument fed to mu_0
    std::vector<std::uint32_t> degrees;
    std::vector<AxKatzRow> rows;
    std::string overall;

    nlohmann::json to_json() const;
};

struct ExcisionRow {
    std::uint32_t k = 1;
    mpz_class complement_pn;             // #(P^n \ Y)
    mpz_class complement_an;             // #(A^n \ X)
    mpz_class complement_infinity;       // #(P^{n-1} \ Y_inf)
    bool pass = false;
};

struct ExcisionReport {
    std::string spec;
    std::string homogenized;             // description of Y
    std::string at_infinity;             // description of Y_inf
    std::vector<ExcisionRow> rows;
    std::string overall;

    nlohmann::json to_json() const;
};

struct PolarReport {
    std::string spec;
    std::string zeta;
    int dim_used = 0;
    std::string dim_provenance;
    bool ci_asserted = false;
    int orientation = 1;                 // (-1)^(dim-1)
    std::string pole_side;               // which side of Z carries the poles
    std::uint32_t mu1 = 0;
    std::vector<BoundRow> rows;
    std::string overall;

    nlohmann::json to_json() const;
};

struct ProbeReport {
    std::string spec;
    int dim_used = 0;
    std::string dim_provenance;
    std::string zeta_x;
    std::string zeta_complement;
    std::vector<BoundRow> x_rows;
    std::vector<BoundRow> complement_rows;
    bool any_violation = false;
    std::string disclaimer;
    std::string overall;                 // "probe-complete" | "error"

    nlohmann::json to_json() const;
};

// Dimension from the reduced zeta of the variety itself: half the top pole
// weight (the top compactly-supported class survives cancellation), or -1
// for Z = 1.
int estimate_dimension(const zeta::ZetaFunction& z);

AxKatzReport verify_ax_katz(const VarietySpec& spec, std::uint32_t kmax,
                            const counting::CountOptions& opts = {});

ProjectiveBoundsReport verify_projective_bounds(const VarietySpec& spec,
                                                const VerifyOptions& opts = {});

PolarReport verify_polar(const VarietySpec& spec, const VerifyOptions& opts = {});

ExcisionReport verify_excision(const VarietySpec& spec, std::uint32_t kmax,
                               const counting::CountOptions& opts = {});

ProbeReport probe_affine(const VarietySpec& spec, const VerifyOptions& opts = {});

} // namespace zetadiv::verify

#endif
