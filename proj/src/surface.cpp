#include "cskein/surface.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace cskein {

char piece_letter(PieceKind k) {
    switch (k) {
        case PieceKind::A: return 'A';
        case PieceKind::B: return 'B';
        case PieceKind::C: return 'C';
        case PieceKind::D: return 'D';
    }
    return '?';
}

PieceKind piece_kind_from_letter(char c) {
    switch (c) {
        case 'A': return PieceKind::A;
        case 'B': return PieceKind::B;
        case 'C': return PieceKind::C;
        case 'D': return PieceKind::D;
    }
    throw surface_error("unknown piece kind");
}

int piece_edge_count(PieceKind k) { return std::array{3, 4, 5, 6}[(int)k]; }
int piece_boundary_count(PieceKind k) { return std::array{3, 2, 1, 0}[(int)k]; }
int piece_pair_count(PieceKind k) { return std::array{0, 1, 2, 3}[(int)k]; }
int piece_triangle_count(PieceKind k) { return std::array{1, 2, 3, 4}[(int)k]; }
int piece_corner_count(PieceKind k) { return std::array{3, 2, 1, 1}[(int)k]; }

const std::vector<std::vector<int>>& piece_minor(PieceKind k) {
    static const std::vector<std::vector<int>> A = {
        {0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    static const std::vector<std::vector<int>> B = {
        {0, 1, -1, -1}, {-1, 0, 1, 1}, {1, -1, 0, 0}, {1, -1, 0, 0}};
    static const std::vector<std::vector<int>> C = {
        {0, 1, 1, -1, -1}, {-1, 0, 0, 1, 1}, {-1, 0, 0, 1, 1},
        {1, -1, -1, 0, 0}, {1, -1, -1, 0, 0}};
    static const std::vector<std::vector<int>> D = {
        {0, 0, -1, -1, 1, 1}, {0, 0, -1, -1, 1, 1}, {1, 1, 0, 0, -1, -1},
        {1, 1, 0, 0, -1, -1}, {-1, -1, 1, 1, 0, 0}, {-1, -1, 1, 1, 0, 0}};
    switch (k) {
        case PieceKind::A: return A;
        case PieceKind::B: return B;
        case PieceKind::C: return C;
        case PieceKind::D: return D;
    }
    return A;
}

SurfaceStats TaggedTriangulation::stats() const {
    SurfaceStats s;
    s.n = num_punctures;
    s.m = num_edges;
    for (auto& P : pieces) s.t += piece_triangle_count(P.kind);
    int g2 = 2 - s.n + s.m - s.t;
    if (g2 % 2 != 0) throw surface_error("inconsistent Euler characteristic");
    s.g = g2 / 2;
    return s;
}

bool TaggedTriangulation::is_jewel(int puncture) const {
    for (auto& P : pieces)
        for (int j : P.jewels)
            if (j == puncture) return true;
    return false;
}

Tag TaggedTriangulation::ambient_tag(int puncture, int except_edge) const {
    for (int e = 0; e < num_edges; ++e) {
        if (e == except_edge) continue;
        for (int side = 0; side < 2; ++side)
            if (ends[e][side] == puncture) return tags[e][side];
    }
    throw surface_error("puncture with no incident arc");
}

ExchangeMatrix exchange_matrix(const TaggedTriangulation& T) {
    ExchangeMatrix B(T.num_edges);
    for (auto& P : T.pieces) {
        const auto& Mn = piece_minor(P.kind);
        for (size_t i = 0; i < P.edges.size(); ++i)
            for (size_t j = 0; j < P.edges.size(); ++j)
                B.at(P.edges[i], P.edges[j]) += Mn[i][j];
    }
    return B;
}

void validate(const TaggedTriangulation& T) {
    const int m = T.num_edges;
    if ((int)T.ends.size() != m || (int)T.tags.size() != m)
        throw surface_error("edge table size mismatch");
    ExchangeMatrix B = exchange_matrix(T);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (B.at(i, j) != -B.at(j, i)) throw surface_error("matrix not skew-symmetric");
            if (B.at(i, j) < -2 || B.at(i, j) > 2) throw surface_error("matrix entry out of [-2,2]");
        }
    std::vector<int> slot_uses(m, 0), pair_uses(m, 0);
    for (auto& P : T.pieces) {
        std::set<int> distinct(P.edges.begin(), P.edges.end());
        if (distinct.size() != P.edges.size())
            throw surface_error("piece with a repeated edge");
        int nb = piece_boundary_count(P.kind);
        for (int s = 0; s < nb; ++s) ++slot_uses[P.edges[s]];
        for (int p = 0; p < piece_pair_count(P.kind); ++p) {
            int e1 = P.edges[nb + 2 * p], e2 = P.edges[nb + 2 * p + 1];
            int j = P.jewels[p];
            if (T.ends[e1] != T.ends[e2]) throw surface_error("dangle pair ends differ");
            if (T.ends[e1][1] != j) throw surface_error("dangle pair jewel end mismatch");
            if (T.tags[e1][1] == T.tags[e2][1]) throw surface_error("dangle tags equal at jewel");
            if (T.tags[e1][0] != T.tags[e2][0]) throw surface_error("dangle tags differ at base");
            ++pair_uses[e1];
            ++pair_uses[e2];
        }
    }
    // an edge is either a glued boundary edge (two slots, or one on a
    // fragment's formal boundary) or one dangle arc
    for (int e = 0; e < m; ++e) {
        bool boundary_ok = pair_uses[e] == 0 &&
                           (slot_uses[e] == 2 || (T.open && slot_uses[e] == 1));
        bool dangle_ok = slot_uses[e] == 0 && pair_uses[e] == 1;
        if (!boundary_ok && !dangle_ok)
            throw surface_error("edge incidence inconsistent");
    }
    // jewel degree and uniform tags elsewhere
    std::set<int> jewels;
    for (auto& P : T.pieces)
        for (int j : P.jewels) jewels.insert(j);
    std::vector<std::vector<std::pair<int, int>>> incid(T.num_punctures);
    for (int e = 0; e < m; ++e)
        for (int side = 0; side < 2; ++side) incid[T.ends[e][side]].push_back({e, side});
    for (int p = 0; p < T.num_punctures; ++p) {
        if (jewels.count(p)) {
            if (incid[p].size() != 2) throw surface_error("jewel degree is not two");
        } else {
            for (auto& [e, side] : incid[p])
                if (T.tags[e][side] != T.tags[incid[p][0].first][incid[p][0].second])
                    throw surface_error("mixed tags at a puncture");
        }
    }
    if (T.open) return;  // fragments carry no closed-surface statistics
    SurfaceStats st = T.stats();
    if (st.g < 0) throw surface_error("negative genus");
    if (st.n < 1) throw surface_error("no punctures");
    if (2 - 2 * st.g - st.n >= 0) throw surface_error("chi >= 0 surface not supported");
    if (st.g == 0 && st.n == 3) throw surface_error("three-punctured sphere is excluded");
}

// ---------------------------------------------------------------- glue

TaggedTriangulation glue(const GlueSpec& spec) {
    // union-find over (piece, corner)
    std::map<std::pair<int, int>, std::pair<int, int>> parent;
    std::function<std::pair<int, int>(std::pair<int, int>)> find =
        [&](std::pair<int, int> x) {
            while (parent.at(x) != x) x = parent.at(x) = parent.at(parent.at(x));
            return x;
        };
    auto unite = [&](std::pair<int, int> a, std::pair<int, int> b) {
        a = find(a); b = find(b);
        if (a != b) parent[a] = b;
    };
    for (size_t pi = 0; pi < spec.pieces.size(); ++pi)
        for (int c = 0; c < piece_corner_count(spec.pieces[pi].kind); ++c)
            parent[{(int)pi, c}] = {(int)pi, c};

    auto slot_corners = [&](int pi, int s) -> std::pair<int, int> {
        switch (spec.pieces[pi].kind) {
            case PieceKind::A: return {s, (s + 1) % 3};
            case PieceKind::B: return s == 0 ? std::pair{0, 1} : std::pair{1, 0};
            case PieceKind::C: return {0, 0};
            case PieceKind::D: throw surface_error("piece D cannot be glued to anything");
        }
        return {0, 0};
    };

    std::set<std::pair<int, int>> used;
    for (auto& [sa, sb] : spec.matching) {
        if (sa.piece < 0 || sa.piece >= (int)spec.pieces.size() ||
            sb.piece < 0 || sb.piece >= (int)spec.pieces.size())
            throw surface_error("matching names a missing piece");
        if (spec.pieces[sa.piece].kind == PieceKind::D ||
            spec.pieces[sb.piece].kind == PieceKind::D)
            throw surface_error("piece D cannot be glued to anything");
        if (sa.slot >= piece_boundary_count(spec.pieces[sa.piece].kind) ||
            sb.slot >= piece_boundary_count(spec.pieces[sb.piece].kind))
            throw surface_error("matching names a missing slot");
        if (spec.pieces[sa.piece].edges.at(sa.slot) != spec.pieces[sb.piece].edges.at(sb.slot))
            throw surface_error("glued slots must carry the same edge id");
        if (!used.insert({sa.piece, sa.slot}).second || !used.insert({sb.piece, sb.slot}).second)
            throw surface_error("slot glued twice");
        auto [a0, a1] = slot_corners(sa.piece, sa.slot);
        auto [b0, b1] = slot_corners(sb.piece, sb.slot);
        unite({sa.piece, a0}, {sb.piece, b1});
        unite({sa.piece, a1}, {sb.piece, b0});
    }
    if (!spec.allow_open)
        for (size_t pi = 0; pi < spec.pieces.size(); ++pi)
            for (int s = 0; s < piece_boundary_count(spec.pieces[pi].kind); ++s)
                if (!used.count({(int)pi, s}))
                    throw surface_error("unmatched boundary slot");

    // connectivity over pieces
    if (spec.pieces.size() > 1) {
        std::vector<int> comp(spec.pieces.size());
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> findc = [&](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (auto& [sa, sb] : spec.matching) comp[findc(sa.piece)] = findc(sb.piece);
        for (size_t pi = 0; pi < spec.pieces.size(); ++pi)
            if (findc((int)pi) != findc(0)) throw surface_error("glued surface is disconnected");
    }

    // puncture numbering: corner classes first, then jewels
    std::map<std::pair<int, int>, int> cls;
    int nid = 0;
    for (size_t pi = 0; pi < spec.pieces.size(); ++pi)
        for (int c = 0; c < piece_corner_count(spec.pieces[pi].kind); ++c) {
            auto r = find({(int)pi, c});
            if (!cls.count(r)) cls[r] = nid++;
        }

    TaggedTriangulation T;
    T.open = spec.allow_open;
    int max_edge = -1;
    for (auto& ps : spec.pieces)
        for (int e : ps.edges) max_edge = std::max(max_edge, e);
    T.num_edges = max_edge + 1;
    T.ends.assign(T.num_edges, {-1, -1});
    T.tags.assign(T.num_edges, {Tag::Plain, Tag::Plain});

    for (size_t pi = 0; pi < spec.pieces.size(); ++pi) {
        const auto& ps = spec.pieces[pi];
        if ((int)ps.edges.size() != piece_edge_count(ps.kind))
            throw surface_error("piece edge list has the wrong length");
        Piece P;
        P.kind = ps.kind;
        P.edges = ps.edges;
        for (int c = 0; c < piece_corner_count(ps.kind); ++c)
            P.corners.push_back(cls.at(find({(int)pi, c})));
        int nb = piece_boundary_count(ps.kind);
        for (int s = 0; s < nb; ++s) {
            auto [c0, c1] = slot_corners((int)pi, s);
            T.ends[ps.edges[s]] = {P.corners[c0], P.corners[c1]};
        }
        int base = P.corners[0];
        for (int p = 0; p < piece_pair_count(ps.kind); ++p) {
            int jewel = nid++;
            P.jewels.push_back(jewel);
            T.ends[ps.edges[nb + 2 * p]] = {base, jewel};
            T.ends[ps.edges[nb + 2 * p + 1]] = {base, jewel};
            T.tags[ps.edges[nb + 2 * p + 1]][1] = Tag::Notched;
        }
        T.pieces.push_back(std::move(P));
    }
    T.num_punctures = nid;
    for (auto& [e, side, tg] : spec.tags) T.tags.at(e)[side] = tg;
    for (auto& e : T.ends)
        if (e[0] < 0) throw surface_error("edge id gap in piece lists");
    validate(T);
    return T;
}

// ------------------------------------------------------------- shadow/flip

namespace {

struct STri {
    std::array<int, 3> edges;
    std::array<int, 3> corners;
};

bool is_self_folded(const STri& t) {
    return t.edges[1] == t.edges[2] && t.edges[0] != t.edges[1];
}

// pair arcs as (radius, loop); when flipk belongs to the pair it plays the loop
std::pair<int, int> pair_roles(const Piece& P, int pr, int flipk) {
    int nb = piece_boundary_count(P.kind);
    int e1 = P.edges[nb + 2 * pr], e2 = P.edges[nb + 2 * pr + 1];
    if (flipk == e1) return {e2, e1};
    return {e1, e2};
}

std::vector<STri> shadow(const Piece& P, int flipk) {
    std::vector<STri> out;
    switch (P.kind) {
        case PieceKind::A:
            out.push_back({{P.edges[0], P.edges[1], P.edges[2]},
                           {P.corners[0], P.corners[1], P.corners[2]}});
            break;
        case PieceKind::B: {
            auto [r, l] = pair_roles(P, 0, flipk);
            int c0 = P.corners[0], c1 = P.corners[1], j = P.jewels[0];
            out.push_back({{P.edges[0], P.edges[1], l}, {c0, c1, c0}});
            out.push_back({{l, r, r}, {c0, c0, j}});
            break;
        }
        case PieceKind::C: {
            auto [r0, l0] = pair_roles(P, 0, flipk);
            auto [r1, l1] = pair_roles(P, 1, flipk);
            int c0 = P.corners[0];
            out.push_back({{P.edges[0], l0, l1}, {c0, c0, c0}});
            out.push_back({{l0, r0, r0}, {c0, c0, P.jewels[0]}});
            out.push_back({{l1, r1, r1}, {c0, c0, P.jewels[1]}});
            break;
        }
        case PieceKind::D: {
            auto [r0, l0] = pair_roles(P, 0, flipk);
            auto [r1, l1] = pair_roles(P, 1, flipk);
            auto [r2, l2] = pair_roles(P, 2, flipk);
            int w = P.corners[0];
            out.push_back({{l0, l2, l1}, {w, w, w}});  // central cycle (l0,l2,l1)
            out.push_back({{l0, r0, r0}, {w, w, P.jewels[0]}});
            out.push_back({{l1, r1, r1}, {w, w, P.jewels[1]}});
            out.push_back({{l2, r2, r2}, {w, w, P.jewels[2]}});
            break;
        }
    }
    return out;
}

// triangles (+ attached self-folded) -> puzzle pieces
std::vector<Piece> regroup(const std::vector<STri>& tris) {
    std::map<int, STri> sf_by_loop;
    for (auto& t : tris)
        if (is_self_folded(t)) sf_by_loop[t.edges[0]] = t;
    std::vector<Piece> pieces;
    std::set<int> used;
    for (auto& t : tris) {
        if (is_self_folded(t)) continue;
        std::vector<int> att;
        for (int i = 0; i < 3; ++i)
            if (sf_by_loop.count(t.edges[i])) att.push_back(i);
        Piece P;
        if (att.empty()) {
            P.kind = PieceKind::A;
            P.edges = {t.edges[0], t.edges[1], t.edges[2]};
            P.corners = {t.corners[0], t.corners[1], t.corners[2]};
        } else if (att.size() == 1) {
            int i = att[0];
            std::array<int, 3> rot = {(i + 1) % 3, (i + 2) % 3, i};  // loop to slot 2
            const STri& sf = sf_by_loop.at(t.edges[i]);
            P.kind = PieceKind::B;
            P.edges = {t.edges[rot[0]], t.edges[rot[1]], sf.edges[1], t.edges[i]};
            P.corners = {t.corners[rot[0]], t.corners[rot[1]]};
            P.jewels = {sf.corners[2]};
            used.insert(t.edges[i]);
        } else if (att.size() == 2) {
            int i = 0;
            while (sf_by_loop.count(t.edges[i])) ++i;  // boundary position
            int l0 = t.edges[(i + 1) % 3], l1 = t.edges[(i + 2) % 3];
            const STri& sf0 = sf_by_loop.at(l0);
            const STri& sf1 = sf_by_loop.at(l1);
            P.kind = PieceKind::C;
            P.edges = {t.edges[i], sf0.edges[1], l0, sf1.edges[1], l1};
            P.corners = {t.corners[i]};
            P.jewels = {sf0.corners[2], sf1.corners[2]};
            used.insert(l0);
            used.insert(l1);
        } else {
            // central cycle (x,y,z) carries pairs in order (x, z, y)
            int lx = t.edges[0], ly = t.edges[1], lz = t.edges[2];
            const STri& sfx = sf_by_loop.at(lx);
            const STri& sfz = sf_by_loop.at(lz);
            const STri& sfy = sf_by_loop.at(ly);
            P.kind = PieceKind::D;
            P.edges = {sfx.edges[1], lx, sfz.edges[1], lz, sfy.edges[1], ly};
            P.corners = {t.corners[0]};
            P.jewels = {sfx.corners[2], sfz.corners[2], sfy.corners[2]};
            used.insert(lx);
            used.insert(ly);
            used.insert(lz);
        }
        pieces.push_back(std::move(P));
    }
    if (used.size() != sf_by_loop.size())
        throw surface_error("self-folded triangle left unattached");
    return pieces;
}

FlipSide make_side(int edge, const std::map<int, STri>& sf_by_loop) {
    auto it = sf_by_loop.find(edge);
    if (it == sf_by_loop.end()) return {false, edge, -1, -1};
    return {true, edge, it->second.edges[1], it->second.corners[2]};
}

} // namespace

std::string classify_flip(const TaggedTriangulation& T, int k) {
    std::vector<const Piece*> own;
    for (auto& P : T.pieces)
        if (std::find(P.edges.begin(), P.edges.end(), k) != P.edges.end())
            own.push_back(&P);
    if (own.empty()) throw surface_error("edge not found");
    if (own.size() == 1) {
        const Piece& P = *own[0];
        int pos = (int)(std::find(P.edges.begin(), P.edges.end(), k) - P.edges.begin());
        if (pos >= piece_boundary_count(P.kind))
            return std::string("dangle-") + piece_letter(P.kind);
        return std::string("self-") + piece_letter(P.kind);
    }
    std::string kinds;
    kinds += piece_letter(own[0]->kind);
    kinds += piece_letter(own[1]->kind);
    if (kinds[0] > kinds[1]) std::swap(kinds[0], kinds[1]);
    std::set<int> e0(own[0]->edges.begin(), own[0]->edges.end());
    int shared = 0;
    for (int e : own[1]->edges) shared += e0.count(e);
    std::string label = kinds + "-" + std::to_string(shared);
    if (label == "BB-2") {
        ExchangeMatrix B = exchange_matrix(T);
        for (int j = 0; j < B.size(); ++j)
            if (std::abs(B.at(j, k)) == 2) return "BB-2-II";
        return "BB-2-I";
    }
    if (label == "BB-1") {
        return own[0]->corners[0] == own[1]->corners[0] ? "BB-1-same" : "BB-1-diff";
    }
    return label;
}

TaggedTriangulation tagged_flip(const TaggedTriangulation& T, int k, FlipInfo* info) {
    if (T.open) throw surface_error("flips are defined on closed surfaces only");
    if (k < 0 || k >= T.num_edges) throw std::out_of_range("edge out of range");
    ExchangeMatrix before = exchange_matrix(T);
    TaggedTriangulation R = T;
    std::vector<int> own;
    for (size_t pi = 0; pi < R.pieces.size(); ++pi)
        if (std::find(R.pieces[pi].edges.begin(), R.pieces[pi].edges.end(), k) !=
            R.pieces[pi].edges.end())
            own.push_back((int)pi);
    if (own.empty()) throw surface_error("edge not found");

    std::vector<STri> tris;
    for (int pi : own) {
        auto sh = shadow(R.pieces[pi], k);
        tris.insert(tris.end(), sh.begin(), sh.end());
    }
    std::vector<std::pair<int, int>> adj;  // (triangle, slot)
    for (size_t ti = 0; ti < tris.size(); ++ti)
        for (int s = 0; s < 3; ++s)
            if (tris[ti].edges[s] == k) adj.push_back({(int)ti, s});
    if (adj.size() != 2 || adj[0].first == adj[1].first)
        throw surface_error("edge is not flippable");
    auto [ti1, p] = adj[0];
    auto [ti2, q] = adj[1];
    const STri& P = tris[ti1];
    const STri& Q = tris[ti2];
    int a = P.edges[(p + 1) % 3], b = P.edges[(p + 2) % 3];
    int c = Q.edges[(q + 1) % 3], d = Q.edges[(q + 2) % 3];
    int Pc0 = P.corners[p], Pc2 = P.corners[(p + 2) % 3];
    int Qc0 = Q.corners[q], Qc2 = Q.corners[(q + 2) % 3];
    if (a == d && b == c)
        throw surface_error("flip would produce a three-punctured sphere");

    std::map<int, STri> sf_by_loop;
    for (auto& t : tris)
        if (is_self_folded(t)) sf_by_loop[t.edges[0]] = t;

    STri newP{{k, b, c}, {Qc2, Pc2, Pc0}};
    STri newQ{{k, d, a}, {Pc2, Qc2, Qc0}};
    std::vector<STri> newtris = {newP, newQ};
    for (size_t ti = 0; ti < tris.size(); ++ti)
        if ((int)ti != ti1 && (int)ti != ti2) newtris.push_back(tris[ti]);

    if (info) {
        info->label = classify_flip(T, k);
        info->sides = {make_side(a, sf_by_loop), make_side(b, sf_by_loop),
                       make_side(c, sf_by_loop), make_side(d, sf_by_loop)};
        info->removed = make_side(k, sf_by_loop);
    }

    const STri* created_sf = nullptr;
    if (is_self_folded(newP)) created_sf = &newtris[0];
    if (is_self_folded(newQ)) created_sf = &newtris[1];
    if (created_sf) {
        int rad = created_sf->edges[1];
        int base = created_sf->corners[0];
        int jewel = created_sf->corners[2];
        auto re = R.ends[rad];
        Tag rb, rj;
        if (re == std::array{base, jewel}) { rb = R.tags[rad][0]; rj = R.tags[rad][1]; }
        else if (re == std::array{jewel, base}) { rb = R.tags[rad][1]; rj = R.tags[rad][0]; }
        else throw surface_error("radius endpoints inconsistent");
        R.ends[rad] = {base, jewel};
        R.tags[rad] = {rb, rj};
        R.ends[k] = {base, jewel};
        R.tags[k] = {rb, toggled(rj)};
        if (info) info->created = {true, k, rad, jewel};
    } else {
        R.ends[k] = {Pc2, Qc2};
        R.tags[k] = {T.ambient_tag(Pc2, k), T.ambient_tag(Qc2, k)};
        if (info) info->created = {false, k, -1, -1};
    }

    std::vector<Piece> kept;
    for (size_t pi = 0; pi < R.pieces.size(); ++pi)
        if (std::find(own.begin(), own.end(), (int)pi) == own.end())
            kept.push_back(R.pieces[pi]);
    auto grouped = regroup(newtris);
    kept.insert(kept.end(), grouped.begin(), grouped.end());
    R.pieces = std::move(kept);

    // store pairs as (plain-at-jewel, notched-at-jewel)
    for (auto& P2 : R.pieces) {
        int nb = piece_boundary_count(P2.kind);
        for (int pr = 0; pr < piece_pair_count(P2.kind); ++pr) {
            int& x = P2.edges[nb + 2 * pr];
            int& y = P2.edges[nb + 2 * pr + 1];
            if (R.tags[x][1] == Tag::Notched) std::swap(x, y);
        }
    }
    validate(R);
    ExchangeMatrix after = exchange_matrix(R);
    if (after != mutate_matrix(before, k))
        throw std::logic_error("tagged flip does not commute with matrix mutation");
    return R;
}

// --------------------------------------------------------------- ordinary

bool OrdinaryTriangulation::has_self_folded() const {
    for (auto& t : triangles) {
        std::set<int> s(t.edges.begin(), t.edges.end());
        if (s.size() != 3) return true;
    }
    return false;
}

OrdinaryTriangulation to_ordinary(const TaggedTriangulation& T) {
    OrdinaryTriangulation O;
    O.num_edges = T.num_edges;
    O.num_punctures = T.num_punctures;
    for (auto& P : T.pieces) {
        if (P.kind != PieceKind::A)
            throw surface_error("triangulation still contains dangles");
        O.triangles.push_back({{P.edges[0], P.edges[1], P.edges[2]},
                               {P.corners[0], P.corners[1], P.corners[2]}});
    }
    return O;
}

TaggedTriangulation tau(const OrdinaryTriangulation& O) {
    std::vector<STri> tris;
    for (auto& t : O.triangles) {
        STri s{{t.edges[0], t.edges[1], t.edges[2]},
               {t.corners[0], t.corners[1], t.corners[2]}};
        // rotate self-folded triangles to the (loop, r, r) form
        for (int rot = 0; rot < 3; ++rot) {
            if (s.edges[1] == s.edges[2]) break;
            s = STri{{s.edges[1], s.edges[2], s.edges[0]},
                     {s.corners[1], s.corners[2], s.corners[0]}};
        }
        if (s.edges[0] == s.edges[1] || s.edges[0] == s.edges[2])
            if (!(s.edges[1] == s.edges[2]))
                throw surface_error("degenerate triangle");
        tris.push_back(s);
    }
    TaggedTriangulation T;
    T.num_edges = O.num_edges;
    T.num_punctures = O.num_punctures;
    T.ends.assign(T.num_edges, {-1, -1});
    T.tags.assign(T.num_edges, {Tag::Plain, Tag::Plain});
    for (auto& t : tris)
        for (int s = 0; s < 3; ++s)
            T.ends[t.edges[s]] = {t.corners[s], t.corners[(s + 1) % 3]};
    T.pieces = regroup(tris);
    for (auto& P : T.pieces) {
        int nb = piece_boundary_count(P.kind);
        for (int pr = 0; pr < piece_pair_count(P.kind); ++pr) {
            int rad = P.edges[nb + 2 * pr], loop = P.edges[nb + 2 * pr + 1];
            int base = P.corners[0];
            int jewel = P.jewels[pr];
            T.ends[rad] = {base, jewel};
            T.ends[loop] = {base, jewel};
            T.tags[loop] = {Tag::Plain, Tag::Notched};
        }
    }
    validate(T);
    return T;
}

ExchangeMatrix ordinary_exchange_matrix(const OrdinaryTriangulation& O) {
    return exchange_matrix(tau(O));
}

// --------------------------------------------------------------- builtins

namespace {
TaggedTriangulation glue_pieces(
    std::vector<std::pair<PieceKind, std::vector<int>>> pieces,
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> match) {
    GlueSpec spec;
    for (auto& [k, e] : pieces) spec.pieces.push_back({k, e});
    for (auto& [a, b] : match)
        spec.matching.push_back({{a.first, a.second}, {b.first, b.second}});
    return glue(spec);
}
} // namespace

TaggedTriangulation builtin_surface(const std::string& name) {
    using PK = PieceKind;
    if (name == "sigma_1_1")
        return glue_pieces({{PK::A, {0, 1, 2}}, {PK::A, {0, 1, 2}}},
                           {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}});
    if (name == "sigma_0_4_twoB")
        return glue_pieces({{PK::B, {4, 5, 0, 1}}, {PK::B, {5, 4, 2, 3}}},
                           {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});
    if (name == "sigma_0_4_D")
        return glue_pieces({{PK::D, {0, 1, 2, 3, 4, 5}}}, {});
    if (name == "sigma_0_5_CC")
        return glue_pieces({{PK::C, {8, 0, 1, 2, 3}}, {PK::C, {8, 4, 5, 6, 7}}},
                           {{{0, 0}, {1, 0}}});
    if (name == "sigma_1_2")
        return glue_pieces({{PK::A, {0, 1, 2}}, {PK::A, {0, 4, 3}},
                            {PK::A, {1, 5, 4}}, {PK::A, {2, 3, 5}}},
                           {{{0, 0}, {1, 0}}, {{0, 1}, {2, 0}}, {{0, 2}, {3, 0}},
                            {{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}, {{3, 1}, {1, 2}}});
    if (name == "base_0_4")
        return glue_pieces({{PK::A, {0, 1, 4}}, {PK::A, {4, 2, 3}},
                            {PK::A, {2, 1, 5}}, {PK::A, {3, 5, 0}}},
                           {{{0, 0}, {3, 2}}, {{0, 1}, {2, 1}}, {{0, 2}, {1, 0}},
                            {{1, 1}, {2, 0}}, {{1, 2}, {3, 0}}, {{2, 2}, {3, 1}}});
    if (name == "base_0_5")
        return glue_pieces({{PK::A, {4, 1, 0}}, {PK::A, {5, 2, 1}}, {PK::A, {6, 3, 2}},
                            {PK::A, {7, 0, 3}}, {PK::A, {8, 5, 4}}, {PK::A, {8, 7, 6}}},
                           {{{0, 2}, {3, 1}}, {{1, 2}, {0, 1}}, {{2, 2}, {1, 1}},
                            {{3, 2}, {2, 1}},
                            {{0, 0}, {4, 2}}, {{1, 0}, {4, 1}}, {{2, 0}, {5, 2}},
                            {{3, 0}, {5, 1}}, {{4, 0}, {5, 0}}});
    throw surface_error("unknown builtin surface '" + name + "'");
}

std::vector<std::string> builtin_surface_names() {
    return {"sigma_0_4_twoB", "sigma_0_4_D", "sigma_0_5_CC", "sigma_1_1", "sigma_1_2"};
}

Seed seed_of(const TaggedTriangulation& T, const std::string& var_prefix) {
    if (T.open) throw surface_error("seed requires a closed surface, not a fragment");
    validate(T);
    std::vector<std::string> names;
    for (int e = 0; e < T.num_edges; ++e)
        names.push_back(var_prefix + std::to_string(e + 1));
    Ctx ctx = make_ctx(std::move(names));
    return Seed::initial(ctx, exchange_matrix(T));
}

MutationWord undangle(TaggedTriangulation& T) {
    MutationWord w;
    for (;;) {
        int pick = -1;
        for (auto& P : T.pieces) {
            int nb = piece_boundary_count(P.kind);
            for (int pr = 0; pr < piece_pair_count(P.kind); ++pr) {
                int loop = P.edges[nb + 2 * pr + 1];
                if (T.tags[loop][1] == Tag::Notched && (pick < 0 || loop < pick)) pick = loop;
            }
        }
        if (pick < 0) break;
        T = tagged_flip(T, pick);
        w.push_back(pick);
    }
    for (auto& tg : T.tags)
        if (tg[0] != Tag::Plain || tg[1] != Tag::Plain)
            throw surface_error("undangle left a notched end");
    return w;
}

// ------------------------------------------------------------ canonical io

std::string TaggedTriangulation::canonical_form() const {
    std::vector<std::string> ps;
    for (auto& P : pieces) {
        std::ostringstream os;
        os << piece_letter(P.kind);
        if (P.kind == PieceKind::A) {
            // minimal cyclic rotation
            std::array<std::pair<int, int>, 3> z;
            for (int i = 0; i < 3; ++i) z[i] = {P.edges[i], P.corners[i]};
            int best = 0;
            for (int r = 1; r < 3; ++r) {
                for (int i = 0; i < 3; ++i) {
                    auto zr = z[(r + i) % 3], zb = z[(best + i) % 3];
                    if (zr != zb) { if (zr < zb) best = r; break; }
                }
            }
            for (int i = 0; i < 3; ++i)
                os << ' ' << z[(best + i) % 3].first << ':' << z[(best + i) % 3].second;
        } else if (P.kind == PieceKind::D) {
            std::array<std::tuple<int, int, int>, 3> prs;
            for (int i = 0; i < 3; ++i)
                prs[i] = {std::min(P.edges[2 * i], P.edges[2 * i + 1]),
                          std::max(P.edges[2 * i], P.edges[2 * i + 1]), P.jewels[i]};
            int best = 0;
            for (int r = 1; r < 3; ++r)
                for (int i = 0; i < 3; ++i) {
                    auto zr = prs[(r + i) % 3], zb = prs[(best + i) % 3];
                    if (zr != zb) { if (zr < zb) best = r; break; }
                }
            os << " w" << P.corners[0];
            for (int i = 0; i < 3; ++i) {
                auto [lo, hi, j] = prs[(best + i) % 3];
                os << " (" << lo << ',' << hi << ")j" << j;
            }
        } else {
            for (int e : P.edges) os << ' ' << e;
            os << " c";
            for (int cc : P.corners) os << cc << ',';
            os << " j";
            for (int j : P.jewels) os << j << ',';
        }
        ps.push_back(os.str());
    }
    std::sort(ps.begin(), ps.end());
    std::ostringstream os;
    for (auto& s : ps) os << s << " | ";
    for (int e = 0; e < num_edges; ++e) {
        std::pair<int, int> a{ends[e][0], (int)tags[e][0]}, b{ends[e][1], (int)tags[e][1]};
        if (b < a) std::swap(a, b);
        os << e << "(" << a.first << "t" << a.second << "," << b.first << "t" << b.second << ") ";
    }
    return os.str();
}

TaggedTriangulation read_surface(std::istream& in) {
    GlueSpec spec;
    std::string tok;
    while (in >> tok) {
        if (tok == "piece") {
            std::string kind;
            in >> kind;
            GlueSpec::PieceSpec ps;
            ps.kind = piece_kind_from_letter(kind.at(0));
            for (int i = 0; i < piece_edge_count(ps.kind); ++i) {
                int e; in >> e; ps.edges.push_back(e);
            }
            spec.pieces.push_back(std::move(ps));
        } else if (tok == "glue") {
            auto slot = [&]() {
                std::string s; in >> s;
                auto dot = s.find('.');
                if (dot == std::string::npos) throw surface_error("bad slot '" + s + "'");
                return GlueSpec::Slot{std::stoi(s.substr(0, dot)), std::stoi(s.substr(dot + 1))};
            };
            GlueSpec::Slot a = slot(), b = slot();
            spec.matching.push_back({a, b});
        } else if (tok == "tag") {
            int e, side;
            std::string t;
            in >> e >> side >> t;
            spec.tags.push_back({e, side, t == "notched" ? Tag::Notched : Tag::Plain});
        } else if (tok == "surface") {
            // header, ignore
        } else if (tok == "stats") {
            std::string rest;
            std::getline(in, rest);  // derived block, ignored on input
        } else {
            throw surface_error("unknown surface file token '" + tok + "'");
        }
    }
    return glue(spec);
}

void write_surface(std::ostream& out, const TaggedTriangulation& T) {
    out << "surface\n";
    for (auto& P : T.pieces) {
        out << "piece " << piece_letter(P.kind);
        for (int e : P.edges) out << ' ' << e;
        out << "\n";
    }
    // reconstruct boundary matching
    std::map<int, std::vector<std::pair<int, int>>> slots;
    for (size_t pi = 0; pi < T.pieces.size(); ++pi)
        for (int s = 0; s < piece_boundary_count(T.pieces[pi].kind); ++s)
            slots[T.pieces[pi].edges[s]].push_back({(int)pi, s});
    for (auto& [e, v] : slots) {
        if (v.size() == 2)
            out << "glue " << v[0].first << '.' << v[0].second << ' '
                << v[1].first << '.' << v[1].second << "\n";
    }
    for (int e = 0; e < T.num_edges; ++e)
        for (int side = 0; side < 2; ++side)
            if (T.tags[e][side] == Tag::Notched)
                out << "tag " << e << ' ' << side << " notched\n";
    SurfaceStats st = T.stats();
    out << "stats g " << st.g << " n " << st.n << " m " << st.m << " t " << st.t << "\n";
}

} // namespace cskein
