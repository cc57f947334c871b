#include "cskein/grading.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace cskein {

std::string degree_to_string(const MultiDegree& d) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) os << ", ";
        os << d[i];
    }
    os << "]";
    return os.str();
}

std::optional<MultiDegree> degree_with(
    const CurveExpr& x, int num_punctures,
    const std::function<std::array<int, 2>(int)>& edge_ends) {
    std::optional<MultiDegree> common;
    for (auto& t : x.terms()) {
        MultiDegree d(num_punctures, 0);
        for (auto& at : t.atoms) {
            switch (at.kind) {
                case CurveAtom::Kind::EdgeArc: {
                    auto e = edge_ends(at.a);
                    d.at(e[0]) += 1;
                    d.at(e[1]) += 1;
                    break;
                }
                case CurveAtom::Kind::VertexClass:
                    d.at(at.a) += -2L * at.b;
                    break;
                case CurveAtom::Kind::EnvelopeArc:
                    d.at(at.a) += 2;  // both ends at the base puncture
                    break;
                case CurveAtom::Kind::ArcClass:
                    d.at(at.a) += 1;
                    d.at(at.b) += 1;
                    break;
                case CurveAtom::Kind::LoopContractible:
                case CurveAtom::Kind::LoopAround:
                case CurveAtom::Kind::LoopClass:
                    break;  // loops are degree zero
            }
        }
        if (!common) common = d;
        else if (*common != d) return std::nullopt;
    }
    if (!common) common = MultiDegree(num_punctures, 0);  // zero expression
    return common;
}

std::optional<MultiDegree> degree(const CurveExpr& x, const TaggedTriangulation& T) {
    return degree_with(x, T.num_punctures,
                       [&](int e) { return T.ends.at(e); });
}

long project_degree(const MultiDegree& d, int i) {
    if (i < 0 || i >= (int)d.size()) throw std::out_of_range("puncture index out of range");
    return d[i];
}

bool check_homogeneous_exchange(const TaggedTriangulation& T, int k) {
    TaggedTriangulation T2 = tagged_flip(T, k);
    // edge id k names different arcs before and after the flip, so the two
    // rho factors are graded against their own triangulations
    auto d_old = degree(rho(T, k), T);
    auto d_new = degree(rho(T2, k), T2);
    if (!d_old || !d_new) return false;
    MultiDegree dl = *d_old;
    for (size_t i = 0; i < dl.size(); ++i) dl[i] += (*d_new)[i];
    ExchangeMatrix B = exchange_matrix(T);
    CurveExpr pos = CurveExpr::constant(1), neg = CurveExpr::constant(1);
    for (int j = 0; j < B.size(); ++j) {
        int b = B.at(j, k);
        CurveExpr r = rho(T, j);
        for (int t = 0; t < std::abs(b); ++t)
            (b > 0 ? pos : neg) = (b > 0 ? pos : neg) * r;
    }
    auto dp = degree(pos, T);
    auto dn = degree(neg, T);
    return dp && dn && dl == *dp && dl == *dn;
}

namespace {

// multiset containment: does `term` contain all atoms of `pattern`?
bool contains_pattern(const std::vector<CurveAtom>& term,
                      const std::vector<CurveAtom>& pattern,
                      std::vector<CurveAtom>* remainder) {
    std::vector<CurveAtom> rest = term;
    for (auto& p : pattern) {
        bool found = false;
        for (size_t i = 0; i < rest.size(); ++i) {
            // vertex classes match when the pattern exponent divides in
            if (p.kind == CurveAtom::Kind::VertexClass &&
                rest[i].kind == CurveAtom::Kind::VertexClass &&
                rest[i].a == p.a && rest[i].b >= p.b) {
                if (rest[i].b == p.b) rest.erase(rest.begin() + (long)i);
                else rest[i].b -= p.b;
                found = true;
                break;
            }
            if (rest[i] == p) {
                rest.erase(rest.begin() + (long)i);
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    if (remainder) *remainder = std::move(rest);
    return true;
}

} // namespace

CurveExpr mod2_reduce(const CurveExpr& x, const IsotopyFixture& fixture) {
    // apply resolutions
    CurveExpr acc = CurveExpr::zero();
    for (auto& t : x.terms()) {
        bool rewritten = false;
        for (auto& res : fixture.resolutions) {
            std::vector<CurveAtom> rest;
            if (contains_pattern(t.atoms, res.pattern, &rest)) {
                CurveExpr factor = CurveExpr::term(t.coeff, std::move(rest));
                acc = acc + factor * res.replacement;
                rewritten = true;
                break;
            }
        }
        if (!rewritten) acc = acc + CurveExpr::from_terms({t});
    }
    // identify declared-isotopic named curves (rename to the class minimum)
    std::map<std::string, std::string> repr;
    std::function<std::string(const std::string&)> find = [&](const std::string& s) {
        auto it = repr.find(s);
        if (it == repr.end() || it->second == s) return s;
        return it->second = find(it->second);
    };
    for (auto& [a, b] : fixture.identify) {
        std::string ra = find(a), rb = find(b);
        if (ra != rb) repr[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<CurveTerm> ts;
    for (auto& t : acc.terms()) {
        CurveTerm t2 = t;
        for (auto& at : t2.atoms)
            if (at.kind == CurveAtom::Kind::ArcClass || at.kind == CurveAtom::Kind::LoopClass)
                at.name = find(at.name);
        ts.push_back(std::move(t2));
    }
    return CurveExpr::from_terms(std::move(ts), CoeffRing::IntegersMod2);
}

} // namespace cskein
