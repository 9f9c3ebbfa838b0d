#ifndef DIRACSQ_MAJORANA_HPP
#define DIRACSQ_MAJORANA_HPP

#include "diracsq/solutions.hpp"
#include "diracsq/types.hpp"

#include <array>
#include <utility>

namespace dsq {

struct MajoranaFamily {
    enum class Kind { Real, Imaginary };
    Kind kind;
    std::array<StructuredSolution, 4> columns;  // RealPhase form
    ModeParams mode;
};

// A * Psi for a spinor-rep solution; result tagged Majorana.
StructuredSolution to_majorana(const StructuredSolution& sol);

// Complex conjugate of a solution, expressed in RealPhase form (the
// conjugate of a fixed-frequency plane wave flips the time phase, which the
// cos/sin structure absorbs).
StructuredSolution conjugate_solution(const StructuredSolution& sol);

// Rewrite a single e^{+-ikz} plane wave (or RealPhase) solution as RealPhase.
StructuredSolution to_real_phase(const StructuredSolution& sol);

// R = (Psi + Psi*)/2, I = (Psi - Psi*)/2 in RealPhase form.
std::pair<StructuredSolution, StructuredSolution> real_imag_split(
    const StructuredSolution& sol, const StructuredSolution& conj_sol);

// R family from seed cos kx, I family from seed -i sin kx, built structurally
// in the Majorana representation (k3 = +k).
std::pair<MajoranaFamily, MajoranaFamily> squared_majorana_sets(
    const ModeParams& m);

// Evaluated 4x4 family matrix at a spacetime point.
CMatrix4 evaluate_family(const MajoranaFamily& fam, double t, double x,
                         double y, double z);

struct SpacetimePoint {
    double t, x, y, z;
};

struct LinearMapReport {
    CMatrix4 S1, S2;
    double deviation;  // max-entry norm of S1 - S2
};

// S(x) = [I evaluated] [R evaluated]^{-1} at two points.
LinearMapReport linear_map_nonexistence(const MajoranaFamily& R,
                                        const MajoranaFamily& Ifam,
                                        SpacetimePoint p1, SpacetimePoint p2);

// Literal transcription of the printed x-dependent S display (deviation
// reports only).
CMatrix4 majorana_s_display(const ModeParams& m, double kx);

}  // namespace dsq

#endif
