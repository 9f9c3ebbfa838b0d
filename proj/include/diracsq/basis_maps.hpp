#ifndef DIRACSQ_BASIS_MAPS_HPP
#define DIRACSQ_BASIS_MAPS_HPP

#include "diracsq/solutions.hpp"
#include "diracsq/types.hpp"

#include <array>
#include <string>
#include <utility>

namespace dsq {

// Coefficients of U_1 = a Phi_1 + b Phi_3, U_2 = c Phi_1 + d Phi_3 and the
// primed analogues (U' in {Phi_2, Phi_4}). Only the half matching the input
// set is populated; the other stays zero.
struct ExpansionCoeffs {
    Complex a, b, c, d;
    Complex ap, bp, cp, dp;
};

enum class MapTag { A, APrime, S, SPrime, Composite };

std::string map_tag_name(MapTag tag);

struct BasisMatrix {
    CMatrix4 entries;
    MapTag tag;
};

// Solve the overdetermined expansion from the first two component rows and
// verify all four rows agree to 1e-10; throws on inconsistency.
ExpansionCoeffs expand_u_in_phi(const SolutionSet& u, const SolutionSet& phi);

// {a_ij, a'_ij, S_ij, S'_ij}, derived from first principles: each U_j / U'_j
// column expanded in the Phi pair, composed through
// Psi_j = (U_j - U'_j)/2i, Psi'_j = -(U_j + U'_j)/2.
std::array<BasisMatrix, 4> build_basis_matrices(const ModeParams& m);

// Numeric inverse for the rank-4 tags; throws for S/S' or singular input.
CMatrix4 invert_basis_matrix(const BasisMatrix& b);

// (a' a^{-1}, a a'^{-1})
std::pair<CMatrix4, CMatrix4> composite_maps(const ModeParams& m);

// Literal transcriptions of the printed displays, for deviation reports only
// (several are typeset inconsistently and are never asserted).
CMatrix4 display_a_matrix(const ModeParams& m);        // from "i a_ij = ..."
CMatrix4 display_a_prime_matrix(const ModeParams& m);  // from "-a'_ij = ..."
CMatrix4 display_S_matrix(const ModeParams& m);
CMatrix4 display_S_prime_matrix(const ModeParams& m);
std::pair<Complex, Complex> display_dets(const ModeParams& m);
CMatrix4 display_a_inverse(const ModeParams& m);        // printed [a^-1]
CMatrix4 display_a_prime_inverse(const ModeParams& m);  // printed [(a')^-1]
CMatrix4 display_composite_prime(const ModeParams& m);  // a' a^{-1} display
CMatrix4 display_composite(const ModeParams& m);        // a a'^{-1} display

}  // namespace dsq

#endif
