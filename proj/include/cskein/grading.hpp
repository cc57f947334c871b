#ifndef CSKEIN_GRADING_HPP
#define CSKEIN_GRADING_HPP

#include "cskein/curve.hpp"

#include <functional>
#include <optional>

namespace cskein {

// Z^n multidegree indexed by punctures.
using MultiDegree = std::vector<long>;

std::string degree_to_string(const MultiDegree& d);

// Per-term degree: arc between v_i and v_j contributes e_i + e_j, loops 0,
// vertex class v_i^k contributes -2k e_i. Returns nullopt when the terms of x
// carry distinct degrees (Inhomogeneous is a value, not an error).
std::optional<MultiDegree> degree(const CurveExpr& x, const TaggedTriangulation& ambient);

// degree of a single term against an endpoint resolver; n = puncture count
std::optional<MultiDegree> degree_with(
    const CurveExpr& x, int num_punctures,
    const std::function<std::array<int, 2>(int)>& edge_ends);

long project_degree(const MultiDegree& d, int i);

// degree(rho(left)) == degree(rho(t)) for every term t of the exchange
// relation at k, all homogeneous.
bool check_homogeneous_exchange(const TaggedTriangulation& T, int k);

// Declared isotopy data for the mod-2 reduction: resolutions rewrite a matched
// atom multiset into a declared sum of named curves (the puncture-skein
// resolution of a crossing at the forgotten puncture); identify declares
// named curves isotopic after forgetting that puncture.
struct PsiResolution {
    std::vector<CurveAtom> pattern;
    CurveExpr replacement;
};
struct IsotopyFixture {
    int forgotten = -1;  // the puncture being forgotten
    std::vector<PsiResolution> resolutions;
    std::vector<std::pair<std::string, std::string>> identify;
};

// Reduces coefficients mod 2 and applies the declared resolutions and
// identifications.
CurveExpr mod2_reduce(const CurveExpr& x, const IsotopyFixture& fixture);

} // namespace cskein

#endif
