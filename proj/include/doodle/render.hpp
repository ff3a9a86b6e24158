#pragma once

// Best-effort figure emission: SVG 1.1 for PD documents and DOT for maps.
// Real crossings are drawn as plain transversal intersections, virtual
// ones carry a small circle marker.  Nothing downstream depends on the
// drawing beyond well-formedness.

#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "doodle/map.hpp"
#include "doodle/pd_code.hpp"

namespace doodle {

inline std::string render_svg(const PdDocument& doc) {
    // Nodes on a circle, edges as quadratic curves through the center side.
    struct Pt {
        double x, y;
    };
    const double R = 180.0, cx = 220.0, cy = 220.0;
    std::size_t n = doc.nodes.size();
    std::vector<Pt> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = 2.0 * 3.14159265358979 * static_cast<double>(i) / std::max<std::size_t>(n, 1);
        pos[i] = {cx + R * std::cos(a), cy + R * std::sin(a)};
    }
    // Port positions: slightly offset around each node per slot.
    auto port = [&](std::size_t i, std::size_t s, std::size_t deg) {
        double a = 2.0 * 3.14159265358979 * (static_cast<double>(s) + 0.5) /
                   static_cast<double>(deg);
        return Pt{pos[i].x + 16.0 * std::cos(a), pos[i].y + 16.0 * std::sin(a)};
    };

    std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> ends;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < doc.nodes[i].labels.size(); ++s)
            ends[doc.nodes[i].labels[s]].push_back({i, s});

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"440\" height=\"440\" viewBox=\"0 0 440 440\">\n"
        << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (const auto& [label, ps] : ends) {
        if (ps.size() == 1) {
            // Self-paired loop of an O node: draw a small circle.
            auto p = pos[ps[0].first];
            svg << "    <circle cx=\"" << p.x << "\" cy=\"" << p.y
                << "\" r=\"14\" class=\"loop\"/>\n";
            continue;
        }
        auto a = port(ps[0].first, ps[0].second, doc.nodes[ps[0].first].labels.size());
        auto b = port(ps[1].first, ps[1].second, doc.nodes[ps[1].first].labels.size());
        double mx = (a.x + b.x) / 2.0 + (a.y - b.y) * 0.15;
        double my = (a.y + b.y) / 2.0 + (b.x - a.x) * 0.15;
        svg << "    <path d=\"M " << a.x << ' ' << a.y << " Q " << mx << ' ' << my << ' '
            << b.x << ' ' << b.y << "\"/>\n";
        // Node-to-port stubs keep strands visually attached.
        for (auto [i, s] : {ps[0], ps[1]}) {
            auto q = port(i, s, doc.nodes[i].labels.size());
            svg << "    <path d=\"M " << pos[i].x << ' ' << pos[i].y << " L " << q.x << ' '
                << q.y << "\"/>\n";
        }
    }
    svg << "  </g>\n  <g>\n";
    for (std::size_t i = 0; i < n; ++i) {
        if (doc.nodes[i].kind == PdNode::Kind::virtual_) {
            svg << "    <circle cx=\"" << pos[i].x << "\" cy=\"" << pos[i].y
                << "\" r=\"7\" fill=\"white\" stroke=\"black\" class=\"virtual-marker\"/>\n";
        }
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

inline std::string render_dot(const DoodleMap& m) {
    std::ostringstream dot;
    dot << "graph doodle {\n  node [shape=point];\n";
    for (std::uint32_t c = 0; c < m.crossing_count(); ++c) dot << "  x" << c << ";\n";
    for (DartId d = 0; d < m.dart_count(); ++d) {
        DartId e = m.pair(d);
        if (d < e) dot << "  x" << owner(d) << " -- x" << owner(e) << ";\n";
    }
    std::uint32_t k = 0;
    for (const auto& c : m.components())
        if (c.is_circle()) dot << "  o" << k++ << " [shape=circle, label=\"O\"];\n";
    dot << "}\n";
    return dot.str();
}

}  // namespace doodle
