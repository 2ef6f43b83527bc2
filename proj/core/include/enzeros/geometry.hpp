#pragma once

/*
 * Upper-half-plane geometry for the level-N group: coset representatives
 * of its fundamental domain inside the modular one, the tri-state
 * membership test for the modular fundamental domain, the finite list of
 * candidate zeros, and the two transformation identities (translation
 * relocation and the Fricke flip) that move evaluations into the region
 * where the q-series converges fast.
 */

#include "enzeros/algebraic_point.hpp"
#include "enzeros/enclosure.hpp"
#include "enzeros/evaluate.hpp"
#include "enzeros/mat2.hpp"
#include "enzeros/qseries.hpp"

#include <vector>

namespace enz {

struct CosetRep {
    Mat2 matrix;
};

// Id plus S*T^k for k = 0..level-1.
std::vector<CosetRep> coset_reps(int level);

enum class RegionStatus { Inside, Outside, BoundaryUndecided };

// Membership in the modular fundamental domain
// {-1/2 <= x < 1/2, x^2 + y^2 >= 1}, decided only when the rectangle
// settles both conditions; throws NotUpperHalfPlane unless Im > 0.
RegionStatus in_F_Gamma(const ComplexEnclosure& tau);

struct CandidateSet {
    int level = 0;
    SeriesId control;  // the weight-4 or weight-6 generator that vanishes
    std::vector<AlgebraicPoint> points;
};

// The level-N candidate zeros: zeta plus -1/(zeta+k) for k = 1..N-1,
// with zeta = i (control E6, N in {2,5}) or rho (control E4, N in {3,7}).
CandidateSet candidate_zeros(int level);

struct PointRelocation {
    AlgebraicPoint source;
    AlgebraicPoint target;       // shift k-N; whether its q lies in-region is
                                 // for the caller to check
    QuadComplex multiplier;      // (zeta+k-N)^2 / (zeta+k)^2

    PointRelocation(AlgebraicPoint s, AlgebraicPoint t, QuadComplex m)
        : source(s), target(t), multiplier(std::move(m)) {}
};

// The translation identity: value at target = multiplier * value at
// source, with both sides exact algebraic data.
PointRelocation relocate(const AlgebraicPoint& p, int level);

// Etilde_N(-1/(N tau)) + N tau^2 Etilde_N(tau); contains 0 by the
// Fricke antisymmetry.
ComplexEnclosure fricke_residual(int level, const ComplexEnclosure& tau,
                                 const EvalParams& params = {});

}  // namespace enz
