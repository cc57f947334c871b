#include "cskein/lambda.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <sstream>

namespace cskein {

std::vector<std::array<int, 4>> corner_table(const OrdinaryTriangulation& base) {
    std::vector<std::array<int, 4>> out;
    for (auto& t : base.triangles)
        for (int i = 0; i < 3; ++i)
            out.push_back({t.corners[i], t.edges[(i + 1) % 3], t.edges[i], t.edges[(i + 2) % 3]});
    return out;
}

LambdaCtx make_lambda_ctx(const OrdinaryTriangulation& base) {
    if (base.has_self_folded())
        throw surface_error("lambda base triangulation must have no self-folded triangle");
    LambdaCtx ctx;
    ctx.base = base;
    ctx.base_tagged = tau(base);
    ctx.base_seed = seed_of(ctx.base_tagged);
    ctx.ctx = ctx.base_seed.ctx;
    ctx.horo.assign(base.num_punctures, RationalFn::zero(ctx.ctx));
    for (auto& [p, opp, a1, a2] : corner_table(base)) {
        RationalFn o = RationalFn::variable(ctx.ctx, opp);
        RationalFn x = RationalFn::variable(ctx.ctx, a1);
        RationalFn y = RationalFn::variable(ctx.ctx, a2);
        ctx.horo[p] = ctx.horo[p] + o / (x * y);
    }
    return ctx;
}

RationalFn horocycle(int p, const LambdaCtx& ctx) {
    if (p < 0 || p >= (int)ctx.horo.size()) throw std::out_of_range("puncture out of range");
    return ctx.horo[p];
}

RationalFn arc_value(const MutationWord& w, const LambdaCtx& ctx) {
    if (w.empty()) throw std::invalid_argument("empty mutation word names no arc");
    Seed s = apply_word(ctx.base_seed, w);
    return s.vars[w.back()];
}

RationalFn arc_value(const std::string& name, const LambdaCtx& ctx) {
    auto it = ctx.arc_paths.find(name);
    if (it == ctx.arc_paths.end())
        throw std::invalid_argument("arc '" + name + "' is not registered in the path table");
    if (it->second.empty())  // base edge named by its own id
        throw std::invalid_argument("arc path for '" + name + "' is empty");
    return arc_value(it->second, ctx);
}

RationalFn evaluate(const CurveExpr& x, const LambdaCtx& ctx,
                    const std::map<int, RationalFn>& arc_values) {
    RationalFn acc = RationalFn::zero(ctx.ctx);
    auto edge_val = [&](int e) {
        auto it = arc_values.find(e);
        if (it == arc_values.end())
            throw std::invalid_argument("edge arc " + std::to_string(e) + " is unregistered");
        return it->second;
    };
    for (auto& t : x.terms()) {
        RationalFn v = RationalFn::constant(ctx.ctx, t.coeff);
        for (auto& at : t.atoms) {
            switch (at.kind) {
                case CurveAtom::Kind::EdgeArc:
                    v = v * edge_val(at.a);
                    break;
                case CurveAtom::Kind::VertexClass:
                    v = v * horocycle(at.a, ctx).pow(at.b);
                    break;
                case CurveAtom::Kind::EnvelopeArc:
                    v = v * horocycle(at.b, ctx) * edge_val(at.c).pow(2);
                    break;
                case CurveAtom::Kind::LoopContractible:
                    v = v * RationalFn::constant(ctx.ctx, -2);
                    break;
                case CurveAtom::Kind::LoopAround:
                    v = v * RationalFn::constant(ctx.ctx, 2);
                    break;
                case CurveAtom::Kind::ArcClass:
                case CurveAtom::Kind::LoopClass:
                    throw std::invalid_argument("named curve classes carry no lambda-value");
            }
        }
        acc = acc + v;
    }
    return acc;
}

TraceState make_trace(const LambdaCtx& ctx) {
    TraceState st;
    st.T = ctx.base_tagged;
    st.S = ctx.base_seed;
    for (int e = 0; e < st.T.num_edges; ++e)
        st.V.push_back(RationalFn::variable(ctx.ctx, e));
    return st;
}

namespace {

// lambda-value of a shadow side: envelope loops expand via the monogon law
RationalFn side_value(const FlipSide& s, const LambdaCtx& ctx, const TraceState& st) {
    if (!s.envelope) return st.V[s.edge];
    return ctx.horo[s.jewel] * st.V[s.radius].pow(2);
}

// product of horocycles over the notched ends of edge k in T
RationalFn notch_factor(const TaggedTriangulation& T, int k, const LambdaCtx& ctx) {
    RationalFn f = RationalFn::constant(ctx.ctx, 1);
    for (int side = 0; side < 2; ++side)
        if (T.tags[k][side] == Tag::Notched) f = f * ctx.horo[T.ends[k][side]];
    return f;
}

// the Ptolemy value of the flipped arc's underlying curve, envelopes expanded
RationalFn flipped_underlying_value(const LambdaCtx& ctx, const TraceState& st,
                                    const FlipInfo& info) {
    if (info.created.envelope)
        return st.V[info.created.radius];  // underlying arc of the notched copy
    RationalFn num = side_value(info.sides[0], ctx, st) * side_value(info.sides[2], ctx, st) +
                     side_value(info.sides[1], ctx, st) * side_value(info.sides[3], ctx, st);
    return num / side_value(info.removed, ctx, st);
}

} // namespace

bool trace_step(const LambdaCtx& ctx, TraceState& st, int k, std::string* why) {
    FlipInfo info;
    TaggedTriangulation T2 = tagged_flip(st.T, k, &info);
    Seed S2 = mutate_seed(st.S, k);
    RationalFn vnew = flipped_underlying_value(ctx, st, info);
    RationalFn rho_image = notch_factor(T2, k, ctx) * vnew;
    if (S2.vars[k] != rho_image) {
        if (why) {
            std::ostringstream os;
            os << "phi(rho) != iota at step " << k << " (" << info.label << "): cluster "
               << S2.vars[k].to_string() << " vs lambda " << rho_image.to_string();
            *why = os.str();
        }
        return false;
    }
    st.T = std::move(T2);
    st.S = std::move(S2);
    st.V[k] = std::move(vnew);
    st.word.push_back(k);
    return true;
}

TraceState walk(const LambdaCtx& ctx, const MutationWord& w) {
    TraceState st = make_trace(ctx);
    for (int k : w) {
        std::string why;
        if (!trace_step(ctx, st, k, &why))
            throw std::logic_error("walk failed: " + why);
    }
    return st;
}

bool verify_exchange_identity(const LambdaCtx& ctx, const TraceState& st, int k,
                              std::string* detail) {
    FlipInfo info;
    TaggedTriangulation T2 = tagged_flip(st.T, k, &info);
    // lambda-side value of rho(edge j) in the current triangulation
    auto rho_val = [&](const TaggedTriangulation& T, int j, const RationalFn& underlying) {
        return notch_factor(T, j, ctx) * underlying;
    };
    RationalFn lhs = rho_val(st.T, k, st.V[k]) *
                     rho_val(T2, k, flipped_underlying_value(ctx, st, info));
    ExchangeMatrix B = exchange_matrix(st.T);
    std::vector<RationalFn> images;
    images.reserve(st.T.num_edges);
    for (int j = 0; j < st.T.num_edges; ++j) images.push_back(rho_val(st.T, j, st.V[j]));
    RationalFn rhs = exchange_binomial(B, k, images, ctx.ctx);
    bool ok = lhs == rhs;
    if (!ok && detail) {
        std::ostringstream os;
        os << "exchange identity fails at k=" << k << " (" << info.label << "):\n  lhs = "
           << lhs.to_string() << "\n  rhs = " << rhs.to_string();
        *detail = os.str();
    }
    return ok;
}

bool verify_lemma_monogon(const LambdaCtx& ctx, const TraceState& st, int k,
                          std::string* detail) {
    FlipInfo info;
    tagged_flip(st.T, k, &info);
    if (!info.created.envelope) {
        if (detail) *detail = "flip does not create an envelope";
        return false;
    }
    // ordinary Ptolemy value of the new envelope loop
    RationalFn envelope = (side_value(info.sides[0], ctx, st) * side_value(info.sides[2], ctx, st) +
                           side_value(info.sides[1], ctx, st) * side_value(info.sides[3], ctx, st)) /
                          side_value(info.removed, ctx, st);
    RationalFn monogon = ctx.horo[info.created.jewel] * st.V[info.created.radius].pow(2);
    bool ok = envelope == monogon;
    if (!ok && detail)
        *detail = "monogon law fails: " + envelope.to_string() + " vs " + monogon.to_string();
    return ok;
}

bool verify_puncture_skein(const SkeinFixture& f, const LambdaCtx& ctx, std::string* detail) {
    RationalFn lhs = ctx.horo[f.p] * f.a * f.b;
    RationalFn rhs = f.g1 + f.g2;
    bool ok = lhs == rhs;
    if (!ok && detail)
        *detail = f.name + ": " + lhs.to_string() + " vs " + rhs.to_string();
    return ok;
}

// ------------------------------------------------------------------ fixtures

namespace {

LambdaCtx corrupted(LambdaCtx ctx) {
    // knock the whole horocycle table off; every tag-sensitive identity must
    // now fail
    for (auto& h : ctx.horo) h = h + RationalFn::constant(ctx.ctx, 1);
    return ctx;
}

OrdinaryTriangulation undangled_base(const std::string& builtin, MutationWord* approach) {
    TaggedTriangulation T = builtin_surface(builtin);
    MutationWord w = undangle(T);
    std::reverse(w.begin(), w.end());
    if (approach) *approach = w;
    return to_ordinary(T);
}

OrdinaryTriangulation case9_base(MutationWord* approach) {
    GlueSpec spec;
    spec.pieces = {{PieceKind::B, {0, 1, 2, 3}},
                   {PieceKind::C, {0, 4, 5, 6, 7}},
                   {PieceKind::C, {1, 8, 9, 10, 11}}};
    spec.matching = {{{0, 0}, {1, 0}}, {{0, 1}, {2, 0}}};
    TaggedTriangulation T = glue(spec);
    MutationWord w = undangle(T);
    std::reverse(w.begin(), w.end());
    if (approach) *approach = w;
    return to_ordinary(T);
}

OrdinaryTriangulation case7b_base(MutationWord* approach) {
    GlueSpec spec;
    spec.pieces = {{PieceKind::B, {0, 1, 2, 3}},
                   {PieceKind::B, {0, 4, 5, 6}},
                   {PieceKind::B, {1, 4, 7, 8}}};
    spec.matching = {{{0, 0}, {1, 0}}, {{0, 1}, {2, 0}}, {{1, 1}, {2, 1}}};
    TaggedTriangulation T = glue(spec);
    MutationWord w = undangle(T);
    std::reverse(w.begin(), w.end());
    if (approach) *approach = w;
    return to_ordinary(T);
}

} // namespace

std::pair<OrdinaryTriangulation, MutationWord> builtin_base(const std::string& surface) {
    if (surface == "sigma_1_1" || surface == "sigma_1_2" || surface == "base_0_4" ||
        surface == "base_0_5")
        return {to_ordinary(builtin_surface(surface)), {}};
    MutationWord w;
    OrdinaryTriangulation base = undangled_base(surface, &w);
    return {base, w};
}

std::vector<IdentityFixture> identity_fixtures() {
    std::vector<IdentityFixture> out;
    OrdinaryTriangulation b04 = to_ordinary(builtin_surface("base_0_4"));
    OrdinaryTriangulation s11 = to_ordinary(builtin_surface("sigma_1_1"));
    MutationWord wcc, wd, w9, w7b;
    OrdinaryTriangulation bcc = undangled_base("sigma_0_5_CC", &wcc);
    OrdinaryTriangulation bd = undangled_base("sigma_0_4_D", &wd);
    OrdinaryTriangulation b9 = case9_base(&w9);
    OrdinaryTriangulation b7b = case7b_base(&w7b);
    auto extend = [](MutationWord w, std::initializer_list<int> extra) {
        for (int k : extra) w.push_back(k);
        return w;
    };
    out.push_back({"case1 quadrilateral", "AA-1", b04, {}, 0});
    out.push_back({"case2 punctured bigon", "AA-2", b04, {0}, 1});
    out.push_back({"case3 torus wrap", "AA-3", s11, {}, 0});
    out.push_back({"case4 triangle+digon", "AB-1", b04, {0, 1}, 0});
    out.push_back({"case5 digon in monogon", "AB-2", bcc, extend(wcc, {0}), 0});
    out.push_back({"case6 triangle+bimonogon", "AC-1", bcc, extend(wcc, {0}), 8});
    out.push_back({"case7-i two digons", "BB-1-same", bcc, extend(wcc, {0, 8}), 0});
    out.push_back({"case7-ii two digons", "BB-1-diff", b7b, w7b, 0});
    out.push_back({"case8-i sphere four", "BB-2-I", b04, {0, 1, 4}, 0});
    out.push_back({"case8-ii sphere four", "BB-2-II", b04, {0, 1, 3}, 0});
    out.push_back({"case9 digon+bimonogon", "BC-1", b9, w9, 0});
    out.push_back({"case10 five-punctured sphere", "CC-1", bcc, wcc, 8});
    out.push_back({"dangle flip in B", "dangle-B", b04, {0, 1}, 1});
    out.push_back({"dangle flip in C", "dangle-C", bcc, wcc, 0});
    out.push_back({"dangle flip in D", "dangle-D", bd, wd, 0});
    return out;
}

bool verify_identity_fixture(const IdentityFixture& f, bool corrupt, std::string* detail) {
    LambdaCtx ctx = make_lambda_ctx(f.base);
    if (corrupt) ctx = corrupted(ctx);
    TraceState st = make_trace(ctx);
    for (int k : f.word) {
        // walk without the phi-rho assertion so a corrupted table still
        // reaches the fixture configuration
        FlipInfo info;
        TaggedTriangulation T2 = tagged_flip(st.T, k, &info);
        Seed S2 = mutate_seed(st.S, k);
        RationalFn vnew = flipped_underlying_value(ctx, st, info);
        st.T = std::move(T2);
        st.S = std::move(S2);
        st.V[k] = std::move(vnew);
        st.word.push_back(k);
    }
    std::string label = classify_flip(st.T, f.k);
    if (label != f.label) {
        if (detail) *detail = f.name + ": expected configuration " + f.label + ", found " + label;
        return false;
    }
    // when the flip closes an envelope, the monogon law must hold as well
    FlipInfo info;
    tagged_flip(st.T, f.k, &info);
    if (info.created.envelope && !verify_lemma_monogon(ctx, st, f.k, detail)) return false;
    return verify_exchange_identity(ctx, st, f.k, detail);
}

std::vector<std::pair<std::string, bool>> run_skein_fixtures(bool corrupt) {
    std::vector<std::pair<std::string, bool>> out;

    // (a) once-punctured bigon: horo(w) * lam(alpha) * lam(e2) = lam(e1) + lam(e3)
    {
        LambdaCtx ctx0 = make_lambda_ctx(to_ordinary(builtin_surface("base_0_4")));
        LambdaCtx ctx = corrupt ? corrupted(ctx0) : ctx0;
        TraceState st = walk(ctx0, {0});
        FlipInfo info;
        tagged_flip(st.T, 1, &info);
        // sides (a,b,c,d) with a == d the repeated interior arc
        int sigma = info.sides[0].edge == info.sides[3].edge ? info.sides[0].edge
                                                             : info.sides[1].edge;
        int f1 = -1, f3 = -1;
        for (auto& s : info.sides)
            if (s.edge != sigma) (f1 < 0 ? f1 : f3) = s.edge;
        TaggedTriangulation after = tagged_flip(st.T, 1);
        int w = after.ends[1][1];  // jewel of the created dangle
        SkeinFixture fx{"bigon", w, st.V[1], st.V[sigma], st.V[f1], st.V[f3]};
        out.push_back({fx.name, verify_puncture_skein(fx, ctx)});
    }

    // (b) once-punctured square fan: horo(y) * lam(r1) * lam(r3) = d + d'
    {
        LambdaCtx ctx0 = make_lambda_ctx(to_ordinary(builtin_surface("base_0_5")));
        LambdaCtx ctx = corrupt ? corrupted(ctx0) : ctx0;
        // centre = the puncture incident to every radius 0..3
        int centre = ctx0.base_tagged.ends[0][0];
        if (ctx0.base_tagged.ends[1][0] != centre && ctx0.base_tagged.ends[1][1] != centre)
            centre = ctx0.base_tagged.ends[0][1];
        SkeinFixture fx{"fan",
                        centre,
                        RationalFn::variable(ctx0.ctx, 0),
                        RationalFn::variable(ctx0.ctx, 2),
                        arc_value(MutationWord{1}, ctx0),
                        arc_value(MutationWord{3}, ctx0)};
        out.push_back({fx.name, verify_puncture_skein(fx, ctx)});
    }

    // (c) monogon law as a skein instance: horo(w) * lam(e)^2 = lam(envelope) + 0
    {
        LambdaCtx ctx0 = make_lambda_ctx(to_ordinary(builtin_surface("base_0_4")));
        LambdaCtx ctx = corrupt ? corrupted(ctx0) : ctx0;
        TraceState st = walk(ctx0, {0});
        out.push_back({"monogon", verify_lemma_monogon(ctx, st, 1)});
    }
    return out;
}

void write_fixture_audit(std::ostream& out) {
    for (auto& f : identity_fixtures()) {
        out << "fixture " << f.name << "\n";
        out << "label " << f.label << "\n";
        write_surface(out, tau(f.base));
        out << "corners";
        for (auto& [p, opp, a1, a2] : corner_table(f.base))
            out << "  (" << p << "; " << opp << " | " << a1 << " " << a2 << ")";
        out << "\nword";
        for (int k : f.word) out << ' ' << k + 1;
        out << "\nflip " << f.k + 1 << "\n\n";
    }
}

bool phi_rho_equals_iota(const std::string& surface, int depth, bool corrupt_horocycles,
                         std::string* detail, int* seeds_checked) {
    auto [base, approach] = builtin_base(surface);
    LambdaCtx ctx = make_lambda_ctx(base);
    if (corrupt_horocycles) ctx = corrupted(ctx);
    TraceState st0 = make_trace(ctx);
    for (int k : approach)
        if (!trace_step(ctx, st0, k, detail)) return false;

    std::set<std::string> seen{seed_key(st0.S)};
    std::deque<std::pair<TraceState, int>> queue;
    queue.push_back({st0, 0});
    int count = 0;
    while (!queue.empty()) {
        auto [st, d] = queue.front();
        queue.pop_front();
        ++count;
        if (d >= depth) continue;
        for (int k = 0; k < st.T.num_edges; ++k) {
            TraceState next = st;
            if (!trace_step(ctx, next, k, detail)) return false;
            std::string key = seed_key(next.S);
            if (seen.insert(key).second) queue.push_back({std::move(next), d + 1});
        }
    }
    if (seeds_checked) *seeds_checked = count;
    return true;
}

} // namespace cskein
