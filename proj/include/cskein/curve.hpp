#ifndef CSKEIN_CURVE_HPP
#define CSKEIN_CURVE_HPP

#include "cskein/ring.hpp"
#include "cskein/surface.hpp"

#include <compare>
#include <string>
#include <vector>

namespace cskein {

// One generator of the curve algebra. EdgeArc refers to an edge id of an
// ambient triangulation; ArcClass/LoopClass are named curves used by fixtures
// (they carry no lambda-value).
struct CurveAtom {
    enum class Kind {
        EdgeArc,          // edge: id
        VertexClass,      // puncture, exponent (may be negative)
        EnvelopeArc,      // base w, enclosed v, inner edge id
        LoopContractible, // evaluates to -2
        LoopAround,       // puncture; evaluates to +2
        ArcClass,         // name, endpoints p,q
        LoopClass         // name
    };
    Kind kind;
    int a = 0, b = 0, c = 0;  // kind-dependent fields
    std::string name;

    static CurveAtom edge_arc(int e);
    static CurveAtom vertex_class(int p, int exp);
    static CurveAtom envelope(int base_w, int enclosed_v, int inner_e);
    static CurveAtom loop_contractible();
    static CurveAtom loop_around(int p);
    static CurveAtom arc_class(std::string name, int p, int q);
    static CurveAtom loop_class(std::string name);

    auto operator<=>(const CurveAtom&) const = default;
    std::string to_string() const;
};

struct CurveTerm {
    Int coeff;
    std::vector<CurveAtom> atoms;  // kept sorted; vertex classes combined
    bool operator==(const CurveTerm& o) const {
        return coeff == o.coeff && atoms == o.atoms;
    }
};

// Finite formal sum of atom products with integer (or Z/2) coefficients.
class CurveExpr {
public:
    CurveExpr() = default;
    static CurveExpr zero();
    static CurveExpr constant(Int c);
    static CurveExpr atom(CurveAtom a);
    static CurveExpr term(Int coeff, std::vector<CurveAtom> atoms);

    const std::vector<CurveTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CurveExpr operator+(const CurveExpr& o) const;
    CurveExpr operator*(const CurveExpr& o) const;
    CurveExpr scaled(const Int& c) const;
    bool operator==(const CurveExpr& o) const { return terms_ == o.terms_; }

    // reduces coefficients into the given ring (Z or Z/2)
    CurveExpr reduced(CoeffRing ring) const;

    std::string to_string() const;

    static CurveExpr from_terms(std::vector<CurveTerm> ts, CoeffRing ring = CoeffRing::Integers);

private:
    std::vector<CurveTerm> terms_;
};

// rho of a tagged arc: one vertex-class factor per notched end times the
// underlying arc.
CurveExpr rho(const TaggedTriangulation& T, int edge);

} // namespace cskein

#endif
