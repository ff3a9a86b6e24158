#pragma once

// Rotation Gauss codes.
//
// One line per component, each a cyclic word of tokens <label><sign>; a
// label names a crossing and appears exactly twice in the document.  At a
// visit, sign "+" means the counterclockwise rotation at that crossing
// reads (current-in, other-in, current-out, other-out) and "-" reads
// (current-in, other-out, current-out, other-in); the two visits of any
// crossing therefore carry opposite signs.  A standalone line "O" is a
// crossing-free circle.  "#" starts a comment, blank lines are ignored.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doodle/map.hpp"

namespace doodle {

struct GaussVisit {
    std::string label;
    bool positive = true;
};

struct GaussCodeDocument {
    struct Line {
        bool circle = false;
        std::vector<GaussVisit> visits;
    };
    std::vector<Line> lines;

    static GaussCodeDocument parse(const std::string& text) {
        GaussCodeDocument doc;
        std::istringstream in(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            std::istringstream ls(raw);
            std::vector<std::string> tokens;
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty()) continue;
            Line line;
            if (tokens.size() == 1 && tokens[0] == "O") {
                line.circle = true;
            } else {
                for (const auto& t : tokens) {
                    char sign = t.back();
                    if (t.size() < 2 || (sign != '+' && sign != '-'))
                        throw ParseError("gauss: bad token '" + t + "' on line " +
                                         std::to_string(lineno));
                    line.visits.push_back({t.substr(0, t.size() - 1), sign == '+'});
                }
            }
            doc.lines.push_back(std::move(line));
        }
        return doc;
    }

    std::string text() const {
        std::string out;
        for (const auto& line : lines) {
            if (line.circle) {
                out += "O\n";
                continue;
            }
            for (std::size_t i = 0; i < line.visits.size(); ++i) {
                if (i) out += ' ';
                out += line.visits[i].label;
                out += line.visits[i].positive ? '+' : '-';
            }
            out += '\n';
        }
        return out;
    }
};

inline DoodleMap parse_gauss(const GaussCodeDocument& doc, Mode mode = {}) {
    struct CrossingState {
        std::uint32_t id = 0;
        bool first_positive = true;
        int visits = 0;
    };
    std::map<std::string, CrossingState> xs;
    std::uint32_t n = 0;
    for (const auto& line : doc.lines)
        for (const auto& v : line.visits)
            if (!xs.count(v.label)) xs[v.label] = {n++, v.positive, 0};

    std::vector<DartId> pairing(static_cast<std::size_t>(n) * 4, kNoDart);
    std::vector<Component> table;
    auto link = [&](DartId a, DartId b) {
        pairing[a] = b;
        pairing[b] = a;
    };

    for (const auto& line : doc.lines) {
        if (line.circle) {
            table.push_back(Component::circle());
            continue;
        }
        // in/out darts per visit, then stitch consecutive visits.
        std::vector<std::pair<DartId, DartId>> io;
        for (const auto& v : line.visits) {
            CrossingState& st = xs[v.label];
            if (st.visits == 0) {
                st.first_positive = v.positive;
                io.emplace_back(make_dart(st.id, 0), make_dart(st.id, 2));
            } else if (st.visits == 1) {
                if (v.positive == st.first_positive)
                    throw ParseError("gauss: orientation inconsistency at crossing '" +
                                     v.label + "'");
                // First visit fixed (in,out)=(0,2); "+" there puts the other
                // strand's in at slot 1, "-" puts it at slot 3.
                if (st.first_positive)
                    io.emplace_back(make_dart(st.id, 1), make_dart(st.id, 3));
                else
                    io.emplace_back(make_dart(st.id, 3), make_dart(st.id, 1));
            } else {
                throw ParseError("gauss: crossing '" + v.label + "' seen more than twice");
            }
            ++st.visits;
        }
        for (std::size_t i = 0; i < io.size(); ++i)
            link(io[i].second, io[(i + 1) % io.size()].first);
        table.push_back(Component::strand(io.front().second));
    }
    for (const auto& [label, st] : xs)
        if (st.visits != 2)
            throw ParseError("gauss: crossing '" + label + "' seen " +
                             std::to_string(st.visits) + " time(s)");
    auto m = DoodleMap::with_components(n, std::move(pairing), std::move(table), mode);
    if (auto bad = validate(m); !bad.empty()) throw ParseError("gauss: " + bad.front());
    return m;
}

inline DoodleMap parse_gauss(const std::string& text, Mode mode = {}) {
    return parse_gauss(GaussCodeDocument::parse(text), mode);
}

inline GaussCodeDocument emit_gauss(const DoodleMap& m) {
    require_valid(m, "emit_gauss");
    // Out-darts under the chosen directions.
    std::vector<bool> out_dart(m.dart_count(), false);
    for (const auto& c : m.components())
        if (!c.is_circle())
            for (DartId d : m.strand_orbit(c.rep)) out_dart[d] = true;

    GaussCodeDocument doc;
    std::map<std::uint32_t, std::string> label;
    int next_label = 1;
    for (const auto& c : m.components()) {
        GaussCodeDocument::Line line;
        if (c.is_circle()) {
            line.circle = true;
        } else {
            for (DartId out : m.strand_orbit(c.rep)) {
                DartId in = opposite(out);
                std::uint32_t x = owner(out);
                if (!label.count(x)) label[x] = std::to_string(next_label++);
                // ccw neighbour of the in-dart: other strand's in => "+".
                line.visits.push_back({label[x], !out_dart[rot(in)]});
            }
        }
        doc.lines.push_back(std::move(line));
    }
    return doc;
}

}  // namespace doodle
