#include "zetadiv/mu.hpp"

#include <algorithm>
#include <numeric>

namespace zetadiv::mu {

std::uint32_t compute_mu(const MuParams& params) {
    if (params.n < 1) throw InvalidParamsError("mu: n must be >= 1");
    if (params.degrees.empty()) throw InvalidParamsError("mu: at least one degree required");
    for (auto d : params.degrees)
        if (d < 1) throw InvalidParamsError("mu: degrees must be positive");
    std::int64_t sum = std::accumulate(params.degrees.begin(), params.degrees.end(),
                                       std::int64_t(0));
    std::int64_t dmax = *std::max_element(params.degrees.begin(), params.degrees.end());
    std::int64_t num = std::int64_t(params.n) - std::int64_t(params.j) - sum;
    std::int64_t clamp = num <= 0 ? 0 : (num + dmax - 1) / dmax;
    return params.j + static_cast<std::uint32_t>(clamp);
}

std::uint32_t compute_mu(std::uint32_t j, std::uint32_t n,
                         const std::vector<std::uint32_t>& degrees) {
    return compute_mu(MuParams{j, n, degrees});
}

} // namespace zetadiv::mu
