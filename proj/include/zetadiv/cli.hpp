#ifndef ZETADIV_CLI_HPP
#define ZETADIV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "zetadiv/algebra.hpp"
#include "zetadiv/counting.hpp"

namespace zetadiv::cli {

// Variety-file ingestion: {"p", "e", "ambient", "n", "polys", "dim"?, "budget"?}.
struct VarietyFile {
    algebra::VarietySpec spec;
    std::optional<int> dim_override;
    std::optional<std::uint64_t> budget;
};

VarietyFile load_variety_file(const std::string& path);
VarietyFile parse_variety_json(const std::string& text, const std::string& origin);

// Exit codes: 0 = checks pass / computation done, 1 = a verification failed,
// 2 = usage or input error, 3 = computational failure. Probe violations exit
// 0 with a prominent flag.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zetadiv::cli

#endif
