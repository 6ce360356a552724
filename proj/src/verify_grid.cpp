#include "ritt/verify_grid.hpp"

namespace ritt {

std::vector<CriterionResult> run_verification_grid(const SearchOptions&) { return {}; }

} // namespace ritt
