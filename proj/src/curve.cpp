#include "cskein/curve.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cskein {

CurveAtom CurveAtom::edge_arc(int e) { return {Kind::EdgeArc, e, 0, 0, ""}; }
CurveAtom CurveAtom::vertex_class(int p, int exp) { return {Kind::VertexClass, p, exp, 0, ""}; }
CurveAtom CurveAtom::envelope(int w, int v, int e) { return {Kind::EnvelopeArc, w, v, e, ""}; }
CurveAtom CurveAtom::loop_contractible() { return {Kind::LoopContractible, 0, 0, 0, ""}; }
CurveAtom CurveAtom::loop_around(int p) { return {Kind::LoopAround, p, 0, 0, ""}; }
CurveAtom CurveAtom::arc_class(std::string name, int p, int q) {
    return {Kind::ArcClass, p, q, 0, std::move(name)};
}
CurveAtom CurveAtom::loop_class(std::string name) {
    return {Kind::LoopClass, 0, 0, 0, std::move(name)};
}

std::string CurveAtom::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::EdgeArc: os << "e" << a; break;
        case Kind::VertexClass: os << "v" << a << "^" << b; break;
        case Kind::EnvelopeArc: os << "env(" << a << "," << b << ";e" << c << ")"; break;
        case Kind::LoopContractible: os << "O"; break;
        case Kind::LoopAround: os << "O(v" << a << ")"; break;
        case Kind::ArcClass: os << "arc:" << name << "(" << a << "," << b << ")"; break;
        case Kind::LoopClass: os << "loop:" << name; break;
    }
    return os.str();
}

namespace {

// sorts atoms, combines vertex classes of the same puncture
std::vector<CurveAtom> normalize_atoms(std::vector<CurveAtom> atoms) {
    std::map<int, long> vexp;
    std::vector<CurveAtom> rest;
    for (auto& at : atoms) {
        if (at.kind == CurveAtom::Kind::VertexClass) vexp[at.a] += at.b;
        else rest.push_back(at);
    }
    for (auto& [p, e] : vexp)
        if (e != 0) rest.push_back(CurveAtom::vertex_class(p, (int)e));
    std::sort(rest.begin(), rest.end());
    return rest;
}

} // namespace

CurveExpr CurveExpr::zero() { return {}; }

CurveExpr CurveExpr::constant(Int c) { return term(std::move(c), {}); }

CurveExpr CurveExpr::atom(CurveAtom a) { return term(1, {std::move(a)}); }

CurveExpr CurveExpr::term(Int coeff, std::vector<CurveAtom> atoms) {
    return from_terms({CurveTerm{std::move(coeff), std::move(atoms)}});
}

CurveExpr CurveExpr::from_terms(std::vector<CurveTerm> ts, CoeffRing ring) {
    std::map<std::vector<CurveAtom>, Int> acc;
    for (auto& t : ts) acc[normalize_atoms(std::move(t.atoms))] += t.coeff;
    CurveExpr e;
    for (auto& [atoms, c] : acc) {
        Int r = ring_reduce(c, ring);
        if (r != 0) e.terms_.push_back({std::move(r), atoms});
    }
    return e;
}

CurveExpr CurveExpr::operator+(const CurveExpr& o) const {
    std::vector<CurveTerm> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(std::move(ts));
}

CurveExpr CurveExpr::operator*(const CurveExpr& o) const {
    std::vector<CurveTerm> ts;
    for (auto& x : terms_)
        for (auto& y : o.terms_) {
            CurveTerm t;
            t.coeff = x.coeff * y.coeff;
            t.atoms = x.atoms;
            t.atoms.insert(t.atoms.end(), y.atoms.begin(), y.atoms.end());
            ts.push_back(std::move(t));
        }
    return from_terms(std::move(ts));
}

CurveExpr CurveExpr::scaled(const Int& c) const {
    std::vector<CurveTerm> ts = terms_;
    for (auto& t : ts) t.coeff *= c;
    return from_terms(std::move(ts));
}

CurveExpr CurveExpr::reduced(CoeffRing ring) const {
    return from_terms(terms_, ring);
}

std::string CurveExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff.get_str();
        for (auto& a : t.atoms) os << "*" << a.to_string();
    }
    return os.str();
}

CurveExpr rho(const TaggedTriangulation& T, int edge) {
    if (edge < 0 || edge >= T.num_edges) throw std::out_of_range("edge out of range");
    std::vector<CurveAtom> atoms;
    for (int side = 0; side < 2; ++side)
        if (T.tags[edge][side] == Tag::Notched)
            atoms.push_back(CurveAtom::vertex_class(T.ends[edge][side], 1));
    atoms.push_back(CurveAtom::edge_arc(edge));
    return CurveExpr::term(1, std::move(atoms));
}

} // namespace cskein
