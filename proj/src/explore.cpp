#include "cskein/explore.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>

namespace cskein {

std::vector<std::vector<int>> ExchangeGraph::neighbors() const {
    std::vector<std::set<int>> nb(nodes.size());
    for (auto& e : edges) {
        nb[e.a].insert(e.b);
        nb[e.b].insert(e.a);
    }
    std::vector<std::vector<int>> out(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) out[i].assign(nb[i].begin(), nb[i].end());
    return out;
}

ExchangeGraph explore(const Seed& s0, int depth, int node_cap) {
    if (depth < 0) throw std::invalid_argument("negative depth");
    ExchangeGraph g;
    g.nodes.push_back({s0, seed_key(s0), 0, true});
    g.index[g.nodes[0].key] = 0;
    std::deque<std::pair<int, int>> queue;  // (node, arrival direction or -1)
    queue.emplace_back(0, -1);
    std::set<std::pair<int, int>> edge_seen;  // (min,max) node pair
    while (!queue.empty()) {
        auto [id, arrival] = queue.front();
        queue.pop_front();
        if (g.nodes[id].depth >= depth) continue;  // stays frontier
        g.nodes[id].frontier = false;
        const int m = g.nodes[id].seed.rank();
        for (int k = 0; k < m; ++k) {
            if (k == arrival) continue;  // involutive back-mutation: edge already present
            Seed t = mutate_seed(g.nodes[id].seed, k);
            std::string key = seed_key(t);
            auto it = g.index.find(key);
            int tid;
            if (it == g.index.end()) {
                if ((int)g.nodes.size() >= node_cap) {
                    g.capped = true;
                    continue;
                }
                tid = (int)g.nodes.size();
                g.nodes.push_back({t, key, g.nodes[id].depth + 1, true});
                g.index[key] = tid;
                queue.emplace_back(tid, k);
            } else {
                tid = it->second;
                check_seed_consistency(t, g.nodes[tid].seed);
            }
            auto pr = std::minmax(id, tid);
            if (edge_seen.insert({pr.first, pr.second}).second)
                g.edges.push_back({id, tid, k});
        }
    }
    return g;
}

void write_graph(std::ostream& out, const ExchangeGraph& g) {
    out << "nodes " << g.nodes.size() << (g.capped ? " partial" : "") << "\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        out << "node " << i << " depth " << g.nodes[i].depth
            << (g.nodes[i].frontier ? " frontier" : "") << "\n";
        out << "  key " << g.nodes[i].key << "\n";
        out << "  matrix";
        const auto& B = g.nodes[i].seed.matrix;
        for (int r = 0; r < B.size(); ++r)
            for (int c = 0; c < B.size(); ++c) out << ' ' << B.at(r, c);
        out << "\n";
    }
    out << "edges " << g.edges.size() << "\n";
    for (auto& e : g.edges) out << "edge " << e.a << " " << e.b << " k " << e.dir << "\n";
}

void write_graph_dot(std::ostream& out, const ExchangeGraph& g) {
    out << "graph exchange {\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << i << "\"";
        if (g.nodes[i].frontier) out << " style=dashed";
        out << "];\n";
    }
    for (auto& e : g.edges)
        out << "  n" << e.a << " -- n" << e.b << " [label=\"" << e.dir << "\"];\n";
    out << "}\n";
}

std::vector<LaurentPoly> laurent_expand(const Seed& s0, const MutationWord& w) {
    Seed cur = s0;
    for (int k : w) cur = mutate_seed(cur, k);
    std::vector<LaurentPoly> out;
    out.reserve(cur.vars.size());
    for (size_t i = 0; i < cur.vars.size(); ++i) {
        if (!rf_is_laurent(cur.vars[i]))
            throw LaurentViolation("cluster variable " + std::to_string(i) +
                                   " is not Laurent: " + cur.vars[i].to_string());
        out.push_back(rf_as_laurent(cur.vars[i]));
    }
    return out;
}

namespace {
// the scan only inspects cluster variables, so it skips the back-map updates
// that mutate_seed maintains
Seed mutate_cluster_only(const Seed& s, int k) {
    Seed r = s;
    r.vars[k] = exchange_binomial(s.matrix, k, s.vars, s.ctx) / s.vars[k];
    r.matrix = mutate_matrix(s.matrix, k);
    return r;
}

long scan_rec(const Seed& s, int last, int remaining) {
    if (remaining == 0) return 0;
    long count = 0;
    for (int k = 0; k < s.rank(); ++k) {
        if (k == last) continue;
        Seed t = mutate_cluster_only(s, k);
        if (!rf_is_laurent(t.vars[k]))
            throw LaurentViolation("cluster variable is not Laurent after mutation " +
                                   std::to_string(k));
        count += 1 + scan_rec(t, k, remaining - 1);
    }
    return count;
}
} // namespace

long laurent_scan(const Seed& s0, int maxlen) {
    return scan_rec(s0, -1, maxlen);
}

bool upper_member(const RationalFn& f, const Seed& s0, int depth,
                  std::vector<std::pair<std::string, bool>>* verdicts) {
    ExchangeGraph g = explore(s0, depth);
    bool all = true;
    for (auto& node : g.nodes) {
        RationalFn in_cluster = rf_substitute(f, node.seed.back);
        bool ok = rf_is_laurent(in_cluster);
        if (verdicts) verdicts->emplace_back(node.key, ok);
        all = all && ok;
    }
    return all;
}

} // namespace cskein
