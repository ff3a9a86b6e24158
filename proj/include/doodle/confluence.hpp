#pragma once

// Finite graphs with levels and the reduction-graph conditions: finite
// descending paths, unique roots, and the (local) diamond condition.  The
// doodle adapter materializes descent closures of the diagram graph so the
// unique-root behaviour can be checked empirically.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doodle/canonical.hpp"
#include "doodle/map.hpp"
#include "doodle/moves.hpp"

namespace doodle {

class LeveledGraph {
public:
    struct Node {
        std::string name;
        long level = 0;
    };

    std::size_t add_node(const std::string& name, long level) {
        index_[name] = nodes_.size();
        nodes_.push_back({name, level});
        adj_.emplace_back();
        return nodes_.size() - 1;
    }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Edges join distinct levels; the higher end collapses to the lower.
    void add_edge(std::size_t a, std::size_t b) {
        if (a >= nodes_.size() || b >= nodes_.size()) throw Error("leveled graph: bad node");
        if (nodes_[a].level == nodes_[b].level)
            throw Error("leveled graph: edge joins equal levels");
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }

    std::size_t size() const { return nodes_.size(); }
    const Node& node(std::size_t i) const { return nodes_[i]; }
    const std::vector<std::size_t>& neighbours(std::size_t i) const { return adj_[i]; }

    bool descends(std::size_t a, std::size_t b) const {
        return nodes_[a].level > nodes_[b].level;
    }

    std::vector<std::size_t> descent_targets(std::size_t a) const {
        std::vector<std::size_t> out;
        for (std::size_t b : adj_[a])
            if (descends(a, b)) out.push_back(b);
        return out;
    }

    // Edge-list text: "node <name> <level>" then "edge <a> <b>" lines.
    std::string serialize() const {
        std::ostringstream out;
        for (const auto& n : nodes_) out << "node " << n.name << ' ' << n.level << '\n';
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t a = 0; a < nodes_.size(); ++a) {
            for (std::size_t b : adj_[a]) {
                auto key = std::minmax(a, b);
                if (seen.count({key.first, key.second})) continue;
                seen.insert({key.first, key.second});
                out << "edge " << nodes_[key.first].name << ' ' << nodes_[key.second].name
                    << '\n';
            }
        }
        return out.str();
    }

    static LeveledGraph deserialize(const std::string& text) {
        LeveledGraph g;
        std::istringstream in(text);
        std::string kind;
        while (in >> kind) {
            if (kind == "node") {
                std::string name;
                long level;
                in >> name >> level;
                g.add_node(name, level);
            } else if (kind == "edge") {
                std::string a, b;
                in >> a >> b;
                auto ia = g.find(a), ib = g.find(b);
                if (!ia || !ib) throw ParseError("leveled graph: unknown node in edge");
                g.add_edge(*ia, *ib);
            } else {
                throw ParseError("leveled graph: unknown directive '" + kind + "'");
            }
        }
        return g;
    }

private:
    std::vector<Node> nodes_;
    std::vector<std::vector<std::size_t>> adj_;
    std::map<std::string, std::size_t> index_;
};

// No infinite descending paths: with a total order on levels and strictly
// descending edges this amounts to acyclicity of the descent relation.
inline bool check_fdpp(const LeveledGraph& g) {
    std::vector<int> state(g.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (state[s]) continue;
        stack.push_back(s);
        std::vector<std::pair<std::size_t, std::size_t>> frames{{s, 0}};
        state[s] = 1;
        while (!frames.empty()) {
            auto& [v, i] = frames.back();
            auto targets = g.descent_targets(v);
            if (i >= targets.size()) {
                state[v] = 2;
                frames.pop_back();
                continue;
            }
            std::size_t w = targets[i++];
            if (state[w] == 1) return false;
            if (state[w] == 0) {
                state[w] = 1;
                frames.push_back({w, 0});
            }
        }
    }
    return true;
}

// Roots are sinks of the descent relation.
inline std::vector<std::size_t> roots(const LeveledGraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.descent_targets(v).empty()) out.push_back(v);
    return out;
}

enum class DescendStrategy : std::uint8_t { first, random };

inline std::size_t descend(const LeveledGraph& g, std::size_t from,
                           DescendStrategy strategy = DescendStrategy::first,
                           std::uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    std::size_t v = from;
    for (;;) {
        auto targets = g.descent_targets(v);
        if (targets.empty()) return v;
        v = strategy == DescendStrategy::first ? targets.front()
                                               : targets[rng() % targets.size()];
    }
}

namespace detail {

// Roots descent-reachable from every node.
inline std::vector<std::set<std::size_t>> reachable_roots(const LeveledGraph& g) {
    // Process nodes by increasing level so all descent targets are done.
    std::vector<std::size_t> order(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.node(a).level < g.node(b).level;
    });
    std::vector<std::set<std::size_t>> rr(g.size());
    for (std::size_t v : order) {
        auto targets = g.descent_targets(v);
        if (targets.empty()) {
            rr[v].insert(v);
            continue;
        }
        for (std::size_t w : targets) rr[v].insert(rr[w].begin(), rr[w].end());
    }
    return rr;
}

inline std::vector<std::size_t> path_component_ids(const LeveledGraph& g) {
    std::vector<std::size_t> comp(g.size(), static_cast<std::size_t>(-1));
    std::size_t next = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (comp[s] != static_cast<std::size_t>(-1)) continue;
        std::deque<std::size_t> q{s};
        comp[s] = next;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop_front();
            for (std::size_t w : g.neighbours(v))
                if (comp[w] == static_cast<std::size_t>(-1)) {
                    comp[w] = next;
                    q.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

}  // namespace detail

// Every pair of vertices in a path component descend to a unique root.
inline bool check_urp(const LeveledGraph& g) {
    if (!check_fdpp(g)) return false;
    auto rr = detail::reachable_roots(g);
    auto comp = detail::path_component_ids(g);
    std::map<std::size_t, std::set<std::size_t>> per_comp;
    for (std::size_t v = 0; v < g.size(); ++v)
        per_comp[comp[v]].insert(rr[v].begin(), rr[v].end());
    for (const auto& [c, roots_of] : per_comp)
        if (roots_of.size() > 1) return false;
    return true;
}

// Local diamond condition: for every simple peak X <- U -> Y there is a
// path from X to Y whose simple peaks K all satisfy U -> K.  Searched over
// walk states (vertex, arrival direction); `budget` bounds visited states.
inline bool check_ldc(const LeveledGraph& g, std::uint64_t budget = 1u << 22) {
    std::uint64_t used = 0;
    for (std::size_t u = 0; u < g.size(); ++u) {
        auto down = g.descent_targets(u);
        std::set<std::size_t> under(down.begin(), down.end());
        for (std::size_t i = 0; i < down.size(); ++i) {
            for (std::size_t j = i + 1; j < down.size(); ++j) {
                std::size_t X = down[i], Y = down[j];
                if (X == Y) continue;
                // States: (vertex, 0=start, 1=arrived ascending, 2=descending).
                std::vector<std::array<bool, 3>> seen(g.size(), {false, false, false});
                std::deque<std::pair<std::size_t, int>> q{{X, 0}};
                seen[X][0] = true;
                bool found = X == Y;
                while (!q.empty() && !found) {
                    auto [v, dir] = q.front();
                    q.pop_front();
                    if (++used > budget) throw Error("check_ldc: search budget exceeded");
                    for (std::size_t w : g.neighbours(v)) {
                        bool descending = g.descends(v, w);
                        // Peak at v: arrived ascending, leaving descending.
                        if (descending && dir == 1 && !under.count(v)) continue;
                        int ndir = descending ? 2 : 1;
                        if (seen[w][ndir]) continue;
                        seen[w][ndir] = true;
                        if (w == Y) {
                            found = true;
                            break;
                        }
                        q.push_back({w, ndir});
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

// The standard two-root counterexample: a peak whose feet are distinct
// sinks.  Fails LDC and URP.
inline LeveledGraph non_ldc_counterexample() {
    LeveledGraph g;
    auto u = g.add_node("U", 2);
    auto x = g.add_node("X", 1);
    auto y = g.add_node("Y", 0);
    g.add_edge(u, x);
    g.add_edge(u, y);
    return g;
}

// Random leveled graph for property experiments.
inline LeveledGraph random_leveled_graph(std::mt19937_64& rng, std::size_t max_nodes = 12,
                                         double edge_prob = 0.3) {
    LeveledGraph g;
    std::size_t n = 2 + rng() % max_nodes;
    for (std::size_t i = 0; i < n; ++i)
        g.add_node("n" + std::to_string(i), static_cast<long>(rng() % (n + 2)));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (g.node(a).level == g.node(b).level) continue;
            if (coin(rng) < edge_prob) g.add_edge(a, b);
        }
    return g;
}

// ---------------------------------------------------------------------------
// Doodle adapter: the descent closure of a seed diagram.

struct DoodleSubgraph {
    LeveledGraph graph;
    std::vector<DoodleMap> maps;  // node index -> representative map
};

// Nodes are canonical codes reachable from the seed by collapse moves
// (H1-, H2-, with trivial-circle absorption built in); edges are single
// moves; levels are crossings minus Euler characteristic.
inline DoodleSubgraph doodle_subgraph(const DoodleMap& seed, std::size_t max_nodes = 4096) {
    require_valid(seed, "doodle_subgraph");
    DoodleSubgraph out;
    std::map<CanonicalCode, std::size_t> index;
    std::deque<std::size_t> agenda;

    auto intern = [&](const DoodleMap& m) {
        auto code = canonical_code(m, kUnorientedUnordered);
        auto it = index.find(code);
        if (it != index.end()) return it->second;
        if (out.maps.size() >= max_nodes) throw Error("doodle_subgraph: node budget exceeded");
        std::size_t id =
            out.graph.add_node("m" + std::to_string(out.maps.size()), level(m));
        index.emplace(code, id);
        out.maps.push_back(m);
        agenda.push_back(id);
        return id;
    };

    intern(seed);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    while (!agenda.empty()) {
        std::size_t v = agenda.front();
        agenda.pop_front();
        DoodleMap m = out.maps[v];
        for (const auto& site : find_sites(m)) {
            DoodleMap child = site.kind == ReductionSite::Kind::monogon
                                  ? apply_h1_minus(m, site)
                                  : apply_h2_minus(m, site);
            std::size_t w = intern(child);
            auto key = std::minmax(v, w);
            if (!edges.count({key.first, key.second})) {
                edges.insert({key.first, key.second});
                out.graph.add_edge(v, w);
            }
        }
    }
    return out;
}

}  // namespace doodle
