#pragma once

// PD-style virtual diagram files.
//
// Lines are X(a,b,c,d) for a real crossing, V(a,b,c,d) for a virtual one,
// both listing edge labels in counterclockwise planar order with slot 0
// first, and O(a) for a crossing-free closed loop with self-paired label a.
// Strands continue through every node on slots (0,2) and (1,3).  Every
// edge label occurs exactly twice; O labels are their own pair.  "#" starts
// a comment, blank lines are ignored.
//
// The parser checks combinatorial well-formedness only; emitters are
// responsible for planarity of the drawing.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doodle/map.hpp"

namespace doodle {

struct PdNode {
    enum class Kind : std::uint8_t { real, virtual_, loop };
    Kind kind;
    std::vector<std::string> labels;  // 4 for real/virtual, 1 for loop
};

struct PdDocument {
    std::vector<PdNode> nodes;

    std::uint32_t real_count() const {
        std::uint32_t k = 0;
        for (const auto& n : nodes) k += n.kind == PdNode::Kind::real;
        return k;
    }
    std::uint32_t virtual_count() const {
        std::uint32_t k = 0;
        for (const auto& n : nodes) k += n.kind == PdNode::Kind::virtual_;
        return k;
    }

    static PdDocument parse(const std::string& text) {
        PdDocument doc;
        std::istringstream in(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            std::istringstream ls(raw);
            std::string tok;
            while (ls >> tok) {
                auto open = tok.find('(');
                if (open == std::string::npos || tok.back() != ')')
                    throw ParseError("pd: bad node '" + tok + "' on line " +
                                     std::to_string(lineno));
                std::string head = tok.substr(0, open);
                PdNode node;
                if (head == "X") node.kind = PdNode::Kind::real;
                else if (head == "V") node.kind = PdNode::Kind::virtual_;
                else if (head == "O") node.kind = PdNode::Kind::loop;
                else
                    throw ParseError("pd: unknown node type '" + head + "' on line " +
                                     std::to_string(lineno));
                std::string body = tok.substr(open + 1, tok.size() - open - 2);
                std::string lab;
                std::istringstream bs(body);
                while (std::getline(bs, lab, ',')) {
                    if (lab.empty())
                        throw ParseError("pd: empty label on line " + std::to_string(lineno));
                    node.labels.push_back(lab);
                }
                std::size_t want = node.kind == PdNode::Kind::loop ? 1 : 4;
                if (node.labels.size() != want)
                    throw ParseError("pd: node with " + std::to_string(node.labels.size()) +
                                     " labels on line " + std::to_string(lineno));
                doc.nodes.push_back(std::move(node));
            }
        }
        return doc;
    }

    std::string text() const {
        std::string out;
        for (const auto& n : nodes) {
            out += n.kind == PdNode::Kind::real      ? "X("
                   : n.kind == PdNode::Kind::virtual_ ? "V("
                                                      : "O(";
            for (std::size_t i = 0; i < n.labels.size(); ++i) {
                if (i) out += ',';
                out += n.labels[i];
            }
            out += ")\n";
        }
        return out;
    }
};

// Builds the doodle map: rotations at X nodes are taken literally, strands
// are traced through V nodes as if they were not there, and closed curves
// meeting no X node become trivial circles.
inline DoodleMap parse_pd(const PdDocument& doc, Mode mode = {}) {
    struct Port {
        std::uint32_t node;
        std::uint32_t s;
    };
    std::map<std::string, std::vector<Port>> ends;
    std::uint32_t n_real = 0;
    std::vector<std::uint32_t> real_id(doc.nodes.size(), 0);
    for (std::uint32_t i = 0; i < doc.nodes.size(); ++i) {
        const PdNode& node = doc.nodes[i];
        if (node.kind == PdNode::Kind::real) real_id[i] = n_real++;
        for (std::uint32_t s = 0; s < node.labels.size(); ++s)
            ends[node.labels[s]].push_back({i, s});
    }
    std::uint32_t circles = 0;
    for (const auto& [label, ports] : ends) {
        bool at_loop_node = doc.nodes[ports.front().node].kind == PdNode::Kind::loop;
        if (at_loop_node) {
            if (ports.size() != 1)
                throw ParseError("pd: loop label '" + label + "' reused elsewhere");
            ++circles;
            continue;
        }
        if (ports.size() != 2)
            throw ParseError("pd: edge label '" + label + "' occurs " +
                             std::to_string(ports.size()) + " time(s)");
    }

    // Walks from a port along its edge, through any V nodes, to the next
    // X port (or back around a purely virtual circuit).
    auto other_end = [&](Port p) -> Port {
        const auto& ps = ends.at(doc.nodes[p.node].labels[p.s]);
        // A label can repeat at one node; pick the other occurrence.
        if (ps[0].node == p.node && ps[0].s == p.s) return ps[1];
        return ps[0];
    };

    std::vector<DartId> pairing(static_cast<std::size_t>(n_real) * 4, kNoDart);
    for (std::uint32_t i = 0; i < doc.nodes.size(); ++i) {
        if (doc.nodes[i].kind != PdNode::Kind::real) continue;
        for (std::uint32_t s = 0; s < 4; ++s) {
            DartId d = make_dart(real_id[i], s);
            if (pairing[d] != kNoDart) continue;
            Port p = other_end({i, s});
            while (doc.nodes[p.node].kind == PdNode::Kind::virtual_)
                p = other_end({p.node, (p.s + 2) & 3u});
            DartId q = make_dart(real_id[p.node], p.s);
            pairing[d] = q;
            pairing[q] = d;
        }
    }

    // Purely virtual circuits are crossing-free circles.
    std::vector<std::vector<bool>> used(doc.nodes.size());
    for (std::uint32_t i = 0; i < doc.nodes.size(); ++i)
        used[i].assign(doc.nodes[i].labels.size(), false);
    for (std::uint32_t i = 0; i < doc.nodes.size(); ++i) {
        if (doc.nodes[i].kind != PdNode::Kind::virtual_) continue;
        for (std::uint32_t s = 0; s < 4; ++s) {
            if (used[i][s]) continue;
            // Trace the closed curve through this V slot pair.
            Port p{i, s};
            bool pure_virtual = true;
            do {
                used[p.node][p.s] = true;
                used[p.node][(p.s + 2) & 3u] = true;
                Port q = other_end({p.node, (p.s + 2) & 3u});
                if (doc.nodes[q.node].kind != PdNode::Kind::virtual_) {
                    pure_virtual = false;
                    break;
                }
                p = q;
            } while (!(p.node == i && (p.s == s || p.s == ((s + 2) & 3u))));
            if (pure_virtual) ++circles;
        }
    }

    auto m = DoodleMap::from_pairing(n_real, std::move(pairing), circles, mode);
    if (auto bad = validate(m); !bad.empty()) throw ParseError("pd: " + bad.front());
    return m;
}

inline DoodleMap parse_pd(const std::string& text, Mode mode = {}) {
    return parse_pd(PdDocument::parse(text), mode);
}

}  // namespace doodle
