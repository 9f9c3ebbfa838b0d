#ifndef DIRACSQ_CLIFFORD_HPP
#define DIRACSQ_CLIFFORD_HPP

#include "diracsq/types.hpp"

#include <array>
#include <string>

namespace dsq {

struct SolutionSet;  // defined in solutions.hpp

enum class Rep { Spinor, Standard, Majorana, Custom };

std::string rep_name(Rep rep);

// Metric signature (+,-,-,-): eta = diag(+1,-1,-1,-1).
inline constexpr std::array<double, 4> kMetric = {1.0, -1.0, -1.0, -1.0};

struct GammaSet {
    std::array<CMatrix4, 4> gamma;  // gamma^0..gamma^3
    CMatrix4 gamma5;
    Rep rep = Rep::Custom;
};

struct RepTransform {
    CMatrix4 S;
    CMatrix4 S_inv;
};

// Explicit matrices of the named representation. The Majorana set is built
// by conjugating the spinor set with A = (1 - gamma^2)/sqrt(2).
GammaSet build_gammas(Rep rep);

// A = (1 - gamma^2)/sqrt(2), A^{-1} = (1 + gamma^2)/sqrt(2) (spinor gamma^2).
RepTransform majorana_transform();

// Spinor -> standard representation change; S is Hermitian and involutive.
RepTransform standard_transform();

// Conjugated set S gamma^a S^{-1}; throws if the Clifford invariants fail
// afterwards.
GammaSet transform_gammas(const RepTransform& t, const GammaSet& g);

// Max deviation over {gamma^a,gamma^b} - 2 eta^{ab} I (all 10 pairs),
// {gamma5, gamma^a}, and (gamma5)^2 - I.
double clifford_deviation(const GammaSet& g);

// Max entry deviation between S * [src columns] * S^{-1} and the destination
// columns matrix, for sets generated from the same scalar seed in the two
// representations. Throws on mismatched mode parameters.
double covariance_check(const RepTransform& t, const SolutionSet& set_src,
                        const SolutionSet& set_dst);

}  // namespace dsq

#endif
