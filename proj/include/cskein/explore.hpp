#ifndef CSKEIN_EXPLORE_HPP
#define CSKEIN_EXPLORE_HPP

#include "cskein/seed.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cskein {

// Breadth-first patch of the exchange graph, deduplicated by seed key
// (unordered cluster up to simultaneous relabeling).
struct ExchangeGraph {
    struct Node {
        Seed seed;
        std::string key;
        int depth = 0;
        bool frontier = false;  // not expanded (at the depth horizon or cap)
    };
    struct Edge {
        int a = 0, b = 0;  // node ids
        int dir = 0;       // mutation direction at a
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::map<std::string, int> index;  // key -> node id
    bool capped = false;               // node cap hit; graph is partial

    std::vector<std::vector<int>> neighbors() const;  // distinct neighbor ids per node
};

inline constexpr int kDefaultNodeCap = 100000;

ExchangeGraph explore(const Seed& s0, int depth, int node_cap = kDefaultNodeCap);

void write_graph(std::ostream& out, const ExchangeGraph& g);
void write_graph_dot(std::ostream& out, const ExchangeGraph& g);

// Thrown when a cluster variable fails the Laurent check: the Laurent
// phenomenon is a theorem, so this indicates an arithmetic fault.
struct LaurentViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Applies w to the initial seed and returns the Laurent expansions of the
// resulting cluster, checking rf_is_laurent for every variable.
std::vector<LaurentPoly> laurent_expand(const Seed& s0, const MutationWord& w);

// Walks every mutation word of length <= maxlen (immediate repeats pruned),
// checking the Laurent property after each step. Returns the number of
// mutations performed.
long laurent_scan(const Seed& s0, int maxlen);

// Finite-depth necessary test for membership in the upper cluster algebra:
// f must be a Laurent polynomial in the cluster of every seed within `depth`
// mutations of s0. A false result is conclusive; true is evidence only.
bool upper_member(const RationalFn& f, const Seed& s0, int depth,
                  std::vector<std::pair<std::string, bool>>* verdicts = nullptr);

} // namespace cskein

#endif
