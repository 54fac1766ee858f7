#ifndef ZETADIV_MU_HPP
#define ZETADIV_MU_HPP

#include <cstdint>
#include <vector>

#include "zetadiv/errors.hpp"

namespace zetadiv::mu {

struct MuParams {
    std::uint32_t j = 0;
    std::uint32_t n = 1;
    std::vector<std::uint32_t> degrees;   // d_1..d_r, all >= 1
};

// mu_j(n; d_1..d_r) = j + max(0, ceil((n - j - sum d_i) / max d_i)).
// The ceiling is only evaluated on a positive numerator, so no language-
// dependent negative-division behavior can leak in.
std::uint32_t compute_mu(const MuParams& params);
std::uint32_t compute_mu(std::uint32_t j, std::uint32_t n,
                         const std::vector<std::uint32_t>& degrees);

} // namespace zetadiv::mu

#endif
