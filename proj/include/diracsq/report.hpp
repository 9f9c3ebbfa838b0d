#ifndef DIRACSQ_REPORT_HPP
#define DIRACSQ_REPORT_HPP

#include "diracsq/json_io.hpp"
#include "diracsq/majorana.hpp"

#include <array>

namespace dsq {

// Literal transcription of the printed explicit Majorana gamma display
// (gamma^0_M .. gamma^3_M); golden comparison target for the constructed set.
std::array<CMatrix4, 4> majorana_gamma_display();

// Per-mode map report: the six Section-4 matrices, ranks, determinants, and
// deviation norms against the printed displays.
Json map_report(const ModeParams& m);

// Majorana R/I families, determinant checks, and the two-point S comparison.
Json majorana_report(const ModeParams& m, SpacetimePoint p1, SpacetimePoint p2);

// Full golden-display comparison suite: every printed formula of the source
// article that the implementation checks, with measured deviations. Entries
// that disagree with the first-principles construction name the row/column.
Json deviation_report();

}  // namespace dsq

#endif
