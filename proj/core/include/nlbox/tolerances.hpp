#pragma once

namespace nlbox {

// Normalization, non-negativity and exact-structure checks.
inline constexpr double kStructuralTol = 1e-12;
// LP feasibility, reproduction error and inequality slack.
inline constexpr double kLpTol = 1e-9;

}  // namespace nlbox
