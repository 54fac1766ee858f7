#ifndef ZETADIV_COUNTING_HPP
#define ZETADIV_COUNTING_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "zetadiv/algebra.hpp"

namespace zetadiv::counting {

using algebra::VarietySpec;

struct CountOptions {
    // Cost declaration in ambient points: counting N_k requires
    // q^{kn} <= budget (affine) or q^{k(n+1)} <= budget (projective).
    std::uint64_t budget = 100000000ull;
    unsigned threads = 0;   // 0 = hardware concurrency
    // Domains smaller than this run serially regardless of threads.
    std::uint64_t parallel_threshold = std::uint64_t(1) << 22;
};

// Ambient-space size: q^{kn} for A^n, (q^{k(n+1)} - 1)/(q^k - 1) for P^n.
mpz_class ambient_count(const VarietySpec& spec, std::uint32_t k);

// Exhaustive point counts over F_{q^k}.
mpz_class count_affine(const VarietySpec& spec, std::uint32_t k,
                       const CountOptions& opts = {});
mpz_class count_projective(const VarietySpec& spec, std::uint32_t k,
                           const CountOptions& opts = {});
mpz_class count_variety(const VarietySpec& spec, std::uint32_t k,
                        const CountOptions& opts = {});

// Cross-check route through the affine cone in A^{n+1}:
// (#cone - 1) must be exactly divisible by q^k - 1 and the quotient equal
// count_projective.
mpz_class count_projective_via_cone(const VarietySpec& spec, std::uint32_t k,
                                    const CountOptions& opts = {});

struct PointCounts {
    VarietySpec spec;
    bool complement = false;
    std::vector<mpz_class> counts;   // counts[k-1] = N_k
};

PointCounts count_sequence(const VarietySpec& spec, std::uint32_t kmax, bool complement,
                           const CountOptions& opts = {});

// Lazily extends and caches variety counts so that the variety and its
// complement share one enumeration pass per k.
class CountProvider {
public:
    CountProvider(VarietySpec spec, CountOptions opts = {});

    const VarietySpec& spec() const { return spec_; }
    const CountOptions& options() const { return opts_; }

    bool within_budget(std::uint32_t k) const;
    const mpz_class& variety_count(std::uint32_t k);   // BudgetExceeded when gated
    mpz_class count(std::uint32_t k, bool complement);
    std::uint32_t largest_computed() const;

private:
    VarietySpec spec_;
    CountOptions opts_;
    std::vector<std::optional<mpz_class>> cache_;
};

} // namespace zetadiv::counting

#endif
