#ifndef CSKEIN_SURFACE_HPP
#define CSKEIN_SURFACE_HPP

#include "cskein/seed.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace cskein {

enum class PieceKind { A, B, C, D };
char piece_letter(PieceKind k);
PieceKind piece_kind_from_letter(char c);

int piece_edge_count(PieceKind k);      // A:3 B:4 C:5 D:6
int piece_boundary_count(PieceKind k);  // A:3 B:2 C:1 D:0
int piece_pair_count(PieceKind k);      // A:0 B:1 C:2 D:3
int piece_triangle_count(PieceKind k);  // A:1 B:2 C:3 D:4
int piece_corner_count(PieceKind k);    // A:3 B:2 C:1 D:1

// The fixed matrix minor of a puzzle piece.
const std::vector<std::vector<int>>& piece_minor(PieceKind k);

enum class Tag : uint8_t { Plain, Notched };
inline Tag toggled(Tag t) { return t == Tag::Plain ? Tag::Notched : Tag::Plain; }

// Local edge layout.
//  A: edges 0..2 boundary slots; slot i runs corner[i] -> corner[(i+1)%3]
//  B: edges {s0, s1, pair}; s0: c0->c1, s1: c1->c0; dangle based at c0
//  C: edges {f, pair0, pair1}; boundary loop f at c0; dangles based at c0
//  D: edges {pair0, pair1, pair2}; all based at the centre corner
// Dangle pairs are stored (plain-at-jewel, notched-at-jewel).
struct Piece {
    PieceKind kind;
    std::vector<int> edges;    // local index -> global edge id
    std::vector<int> corners;  // boundary corner punctures
    std::vector<int> jewels;   // one puncture per dangle pair
};

struct SurfaceStats {
    int g = 0, n = 0, m = 0, t = 0;
};

struct TaggedTriangulation {
    std::vector<Piece> pieces;
    int num_edges = 0;
    int num_punctures = 0;
    std::vector<std::array<int, 2>> ends;  // dangle arcs: (base, jewel)
    std::vector<std::array<Tag, 2>> tags;
    bool open = false;  // fragment with unglued boundary slots

    SurfaceStats stats() const;
    bool is_jewel(int puncture) const;
    // uniform tag at a non-jewel puncture, skipping edge `except`
    Tag ambient_tag(int puncture, int except_edge) const;
    std::string canonical_form() const;
};

struct surface_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Full structural validation (skew matrix, entry range, pair structure,
// jewel degrees, tag compatibility, Euler count). Throws surface_error.
void validate(const TaggedTriangulation& T);

ExchangeMatrix exchange_matrix(const TaggedTriangulation& T);

// glue() input: pieces with chosen global edge ids; a perfect matching on
// boundary slots (two slots glued must carry the same edge id); optional tag
// assignments (edge, end, tag) on top of the defaults (dangle structure
// notched at the jewel-end of the second pair arc, plain elsewhere).
struct GlueSpec {
    struct PieceSpec {
        PieceKind kind;
        std::vector<int> edges;
    };
    struct Slot { int piece; int slot; };
    std::vector<PieceSpec> pieces;
    std::vector<std::pair<Slot, Slot>> matching;
    std::vector<std::tuple<int, int, Tag>> tags;  // (edge, end, tag)
    bool allow_open = false;  // permit unmatched slots (triangulation fragment)
};
TaggedTriangulation glue(const GlueSpec& spec);

// Local description of one quad side as seen by the ordinary shadow.
struct FlipSide {
    bool envelope = false;
    int edge = -1;    // the shadow edge (loop edge when envelope)
    int radius = -1;  // envelope only
    int jewel = -1;   // envelope only
};

struct FlipInfo {
    std::string label;           // AA-1, AB-2, BB-2-I, dangle-C, ...
    std::array<FlipSide, 4> sides;  // quad sides a,b,c,d
    FlipSide removed;            // the flipped edge as a shadow side
    FlipSide created;            // the new arc (envelope => dangle-forming flip)
};

// classification label of the flip at k without performing it
std::string classify_flip(const TaggedTriangulation& T, int k);

// Tagged flip at edge k. The new arc reuses id k. Postcondition (asserted):
// exchange_matrix(result) == mutate_matrix(exchange_matrix(T), k).
TaggedTriangulation tagged_flip(const TaggedTriangulation& T, int k,
                                FlipInfo* info = nullptr);

// Ordinary ideal triangulation: ccw triangles (slot i: corner[i]->corner[i+1]);
// self-folded triangles have edges (loop, r, r).
struct OrdinaryTriangulation {
    struct Triangle {
        std::array<int, 3> edges;
        std::array<int, 3> corners;
    };
    std::vector<Triangle> triangles;
    int num_edges = 0;
    int num_punctures = 0;

    bool has_self_folded() const;
};

// tagged triangulation with every piece of type A <-> ordinary triangulation
OrdinaryTriangulation to_ordinary(const TaggedTriangulation& T);

// tau: ordinary triangulation -> tagged triangulation; envelope loops become
// arcs notched at the enclosed puncture (dangles), everything else plain.
TaggedTriangulation tau(const OrdinaryTriangulation& T);

ExchangeMatrix ordinary_exchange_matrix(const OrdinaryTriangulation& T);

// named fixtures
//  sigma_0_4_twoB, sigma_0_4_D, sigma_0_5_CC, sigma_1_1, sigma_1_2,
// plus internal ordinary bases base_0_4, base_0_5 (fan + cap).
TaggedTriangulation builtin_surface(const std::string& name);
std::vector<std::string> builtin_surface_names();

Seed seed_of(const TaggedTriangulation& T, const std::string& var_prefix = "e");

// Repeatedly flips notched dangle arcs (lowest edge id first) until the
// triangulation is an ordinary all-plain one; returns the word used.
MutationWord undangle(TaggedTriangulation& T);

// triangulation file io
TaggedTriangulation read_surface(std::istream& in);
void write_surface(std::ostream& out, const TaggedTriangulation& T);

} // namespace cskein

#endif
