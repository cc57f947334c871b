#ifndef CSKEIN_LAMBDA_HPP
#define CSKEIN_LAMBDA_HPP

#include "cskein/curve.hpp"
#include "cskein/explore.hpp"
#include "cskein/surface.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cskein {

// Evaluation context: a self-folded-free ordinary base triangulation, one
// formal variable per base edge, horocycle classes per puncture (corner sums),
// and a table of named arc paths (mutation words from the base seed).
struct LambdaCtx {
    OrdinaryTriangulation base;
    TaggedTriangulation base_tagged;  // tau(base), all plain
    Ctx ctx;
    Seed base_seed;
    std::vector<RationalFn> horo;  // per puncture
    std::map<std::string, MutationWord> arc_paths;
};

LambdaCtx make_lambda_ctx(const OrdinaryTriangulation& base);

// corner list at each puncture: (puncture, opposite edge, adjacent, adjacent)
std::vector<std::array<int, 4>> corner_table(const OrdinaryTriangulation& base);

// sum over corners at p of opposite/(adjacent*adjacent)
RationalFn horocycle(int p, const LambdaCtx& ctx);

// cluster variable reached by the mutation word (value at the last direction;
// the empty word names no edge, so w must be nonempty unless `edge` is given)
RationalFn arc_value(const MutationWord& w, const LambdaCtx& ctx);
RationalFn arc_value(const std::string& name, const LambdaCtx& ctx);

// lambda-evaluation of a curve expression; EdgeArc atoms take their values
// from `arc_values` (unregistered atoms are an error), vertex classes from the
// horocycle table, envelopes from the monogon expansion, loop constants are
// -2 / +2. Named ArcClass/LoopClass atoms have no lambda-value.
RationalFn evaluate(const CurveExpr& x, const LambdaCtx& ctx,
                    const std::map<int, RationalFn>& arc_values);

// Walker state along tagged flips: the triangulation, the parallel seed, and
// per edge the lambda-value of its underlying ordinary arc.
struct TraceState {
    TaggedTriangulation T;
    Seed S;
    std::vector<RationalFn> V;
    MutationWord word;
};

TraceState make_trace(const LambdaCtx& ctx);
TraceState walk(const LambdaCtx& ctx, const MutationWord& w);

// One tagged flip: propagates V by the skein relations (quad Ptolemy with
// envelopes expanded through horocycles), mutates the seed, and checks that
// the new cluster variable equals the horocycle-decorated lambda-value of the
// new tagged arc. Returns false (with a reason) instead of committing when the
// check fails.
bool trace_step(const LambdaCtx& ctx, TraceState& st, int k, std::string* why = nullptr);

// The exchange identity at k evaluated purely on the lambda side: both sides
// of the exchange relation are mapped through rho and evaluated with horocycle
// notch factors; exact rational-function equality.
bool verify_exchange_identity(const LambdaCtx& ctx, const TraceState& st, int k,
                              std::string* detail = nullptr);

// At a dangle-creating flip the ordinary Ptolemy value of the new envelope
// must match horocycle(jewel) * lambda(radius)^2.
bool verify_lemma_monogon(const LambdaCtx& ctx, const TraceState& st, int k,
                          std::string* detail = nullptr);

// puncture-skein fixture: horo(p) * lam(a) * lam(b) == lam(g1) + lam(g2)
struct SkeinFixture {
    std::string name;
    int p;
    RationalFn a, b, g1, g2;
};
bool verify_puncture_skein(const SkeinFixture& f, const LambdaCtx& ctx,
                           std::string* detail = nullptr);

// the three puncture-skein fixtures of the test plan (bigon, fan, monogon)
std::vector<std::pair<std::string, bool>> run_skein_fixtures(bool corrupt = false);

// Exchange-identity fixtures covering tagged-flip cases 1,2,4..10 (with both
// sub-cases of 7 and 8), the three dangle flips, and the once-punctured-torus
// wrap-around.
struct IdentityFixture {
    std::string name;
    std::string label;            // expected flip classification
    OrdinaryTriangulation base;   // self-folded-free
    MutationWord word;            // path from the all-plain base
    int k;                        // the verified flip
};
std::vector<IdentityFixture> identity_fixtures();
// runs one fixture: walks the word, confirms the flip label, verifies the
// exchange identity (and the monogon law where an envelope is created)
bool verify_identity_fixture(const IdentityFixture& f, bool corrupt = false,
                             std::string* detail = nullptr);

// Checks iota = Phi-hat . rho over every seed within `depth` tagged flips of
// the named builtin surface: lambda-evaluation of rho (horocycle notch
// factors, skein-propagated underlying values) equals the mutation-defined
// cluster variable, exactly, for every arc of every visited seed.
bool phi_rho_equals_iota(const std::string& surface, int depth,
                         bool corrupt_horocycles = false, std::string* detail = nullptr,
                         int* seeds_checked = nullptr);

// base triangulation and approach word used for a builtin surface
std::pair<OrdinaryTriangulation, MutationWord> builtin_base(const std::string& surface);

// fixture audit: per fixture the base triangulation, its corner table, the
// mutation word and the verified flip
void write_fixture_audit(std::ostream& out);

} // namespace cskein

#endif
