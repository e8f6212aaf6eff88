#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "gentle/core.hpp"
#include "gentle/presentation.hpp"
#include "gentle/strings.hpp"
#include "gentle/surface.hpp"

namespace gentle {

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

}  // namespace detail

// Line-oriented presentation file:
//   vertex <id>
//   arrow <id> <src> <tgt>
//   rel <arrowid> <arrowid>
//   forbid <arrowid> <arrowid> [<arrowid> ...]   (string-algebra mode)
// '#' starts a comment.
inline Presentation parse_presentation(std::istream& in) {
    Quiver q;
    struct PendingWord {
        int line;
        std::vector<std::string> arrows;
    };
    std::vector<PendingWord> forbidden_names;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "vertex") {
            if (toks.size() != 2) throw ParseError(lineno, "vertex takes one id");
            q.vertices.push_back(toks[1]);
        } else if (toks[0] == "arrow") {
            if (toks.size() != 4) throw ParseError(lineno, "arrow takes id, source, target");
            q.arrows.push_back({toks[1], -1, -1});
            // resolve endpoints now for early errors
            auto find_vertex = [&](const std::string& name) {
                for (size_t i = 0; i < q.vertices.size(); ++i)
                    if (q.vertices[i] == name) return static_cast<int>(i);
                throw ParseError(lineno, "unknown vertex " + name);
            };
            q.arrows.back().src = find_vertex(toks[2]);
            q.arrows.back().tgt = find_vertex(toks[3]);
        } else if (toks[0] == "rel" || toks[0] == "forbid") {
            if (toks[0] == "rel" && toks.size() != 3)
                throw ParseError(lineno, "rel takes two arrow ids");
            if (toks.size() < 3) throw ParseError(lineno, "forbid takes at least two arrow ids");
            forbidden_names.push_back({lineno, {toks.begin() + 1, toks.end()}});
        } else {
            throw ParseError(lineno, "unknown directive " + toks[0]);
        }
    }
    std::vector<std::vector<int>> forbidden;
    for (const auto& pw : forbidden_names) {
        std::vector<int> word;
        for (const std::string& name : pw.arrows) {
            int idx = -1;
            for (size_t i = 0; i < q.arrows.size(); ++i)
                if (q.arrows[i].name == name) idx = static_cast<int>(i);
            if (idx < 0) throw ParseError(pw.line, "unknown arrow " + name);
            word.push_back(idx);
        }
        for (size_t i = 0; i + 1 < word.size(); ++i)
            if (q.arrows[static_cast<size_t>(word[i])].tgt !=
                q.arrows[static_cast<size_t>(word[i + 1])].src)
                throw ParseError(pw.line, "relation is not a composable path");
        forbidden.push_back(std::move(word));
    }
    return Presentation::make(std::move(q), std::move(forbidden));
}

inline Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("IoError: cannot open " + path);
    return parse_presentation(in);
}

inline void print_presentation(const Presentation& p, std::ostream& out) {
    for (int v = 0; v < p.n_vertices(); ++v) out << "vertex " << p.vertex_name(v) << "\n";
    for (int a = 0; a < p.n_arrows(); ++a)
        out << "arrow " << p.arrow(a).name << " " << p.vertex_name(p.arrow(a).src) << " "
            << p.vertex_name(p.arrow(a).tgt) << "\n";
    for (const auto& f : p.forbidden_words()) {
        out << (f.size() == 2 ? "rel" : "forbid");
        for (int a : f) out << " " << p.arrow(a).name;
        out << "\n";
    }
}

// String literal syntax: space-separated arrow ids, suffix '-' inverts;
// trivial strings are 1_<vertex> or 1_<vertex>- for the negative sign.
inline StringWord parse_string_literal(const Presentation& p, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    if (toks.empty()) throw PreconditionError("empty string literal");
    if (toks.size() == 1 && toks[0].rfind("1_", 0) == 0) {
        std::string body = toks[0].substr(2);
        int sign = +1;
        if (!body.empty() && body.back() == '-') {
            sign = -1;
            body.pop_back();
        }
        auto v = p.vertex_index(body);
        if (!v) throw PreconditionError("UnknownVertex in literal: " + body);
        return StringWord::trivial(*v, sign);
    }
    std::vector<Letter> ls;
    for (std::string tok : toks) {
        bool inv = false;
        if (!tok.empty() && tok.back() == '-') {
            inv = true;
            tok.pop_back();
        }
        auto a = p.arrow_index(tok);
        if (!a) throw PreconditionError("UnknownArrow in literal: " + tok);
        ls.push_back({*a, inv});
    }
    return StringWord::word(std::move(ls));
}

inline std::string format_string(const Presentation& p, const StringWord& w) {
    if (w.is_trivial())
        return "1_" + p.vertex_name(w.trivial_vertex()) + (w.trivial_sign() < 0 ? "-" : "");
    std::string out;
    for (Letter l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += p.arrow(l.arrow).name;
        if (l.inverted) out += '-';
    }
    return out;
}

// Triangulation file:
//   arc <id>
//   bseg <id>
//   tri <side> <side> <side>    (clockwise)
inline Triangulation parse_triangulation(std::istream& in) {
    Triangulation t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "arc") {
            if (toks.size() != 2) throw ParseError(lineno, "arc takes one id");
            t.arcs.push_back(toks[1]);
        } else if (toks[0] == "bseg") {
            if (toks.size() != 2) throw ParseError(lineno, "bseg takes one id");
            t.bsegs.push_back(toks[1]);
        } else if (toks[0] == "tri") {
            if (toks.size() != 4) throw ParseError(lineno, "tri takes three sides");
            std::array<Side, 3> tri;
            for (int k = 0; k < 3; ++k) {
                const std::string& name = toks[static_cast<size_t>(k) + 1];
                Side s;
                s.idx = -1;
                for (size_t i = 0; i < t.arcs.size(); ++i)
                    if (t.arcs[i] == name) {
                        s.is_arc = true;
                        s.idx = static_cast<int>(i);
                    }
                if (s.idx < 0)
                    for (size_t i = 0; i < t.bsegs.size(); ++i)
                        if (t.bsegs[i] == name) {
                            s.is_arc = false;
                            s.idx = static_cast<int>(i);
                        }
                if (s.idx < 0) throw ParseError(lineno, "unknown side " + name);
                tri[static_cast<size_t>(k)] = s;
            }
            t.triangles.push_back(tri);
        } else {
            throw ParseError(lineno, "unknown directive " + toks[0]);
        }
    }
    check_triangulation(t);
    return t;
}

inline Triangulation load_triangulation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("IoError: cannot open " + path);
    return parse_triangulation(in);
}

// Curve dataset: one record per line,
//   arc|rigid start=<tri#> end=<tri#> selfint=<start|end|both|none>
//             crossings=<arc>:<tri#>,...,<arc>
// The last crossing carries no connecting triangle.
inline CurveRecord parse_curve_record(const Triangulation& t, const std::string& text, int lineno) {
    auto toks = detail::tokens_of(text);
    if (toks.empty()) throw ParseError(lineno, "empty curve record");
    CurveRecord c;
    if (toks[0] == "arc")
        c.kind = CurveKind::Arc;
    else if (toks[0] == "rigid")
        c.kind = CurveKind::RigidCurve;
    else
        throw ParseError(lineno, "record kind must be arc or rigid");
    bool have_start = false, have_end = false, have_selfint = false, have_cross = false;
    for (size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected key=value: " + toks[i]);
        std::string key = toks[i].substr(0, eq), val = toks[i].substr(eq + 1);
        if (key == "start" || key == "end") {
            int tri = -1;
            try {
                tri = std::stoi(val);
            } catch (...) {
                throw ParseError(lineno, "bad triangle index " + val);
            }
            (key == "start" ? c.start_triangle : c.end_triangle) = tri;
            (key == "start" ? have_start : have_end) = true;
        } else if (key == "selfint") {
            have_selfint = true;
            if (val == "none")
                c.selfint = SelfIntersectionEnd::None;
            else if (val == "start")
                c.selfint = SelfIntersectionEnd::Start;
            else if (val == "end")
                c.selfint = SelfIntersectionEnd::End;
            else if (val == "both")
                c.selfint = SelfIntersectionEnd::Both;
            else
                throw ParseError(lineno, "selfint must be start|end|both|none");
        } else if (key == "crossings") {
            have_cross = true;
            std::istringstream cs(val);
            std::string item;
            while (std::getline(cs, item, ',')) {
                auto colon = item.find(':');
                Crossing x;
                std::string arc_name = colon == std::string::npos ? item : item.substr(0, colon);
                auto arc = t.arc_index(arc_name);
                if (!arc) throw ParseError(lineno, "unknown arc " + arc_name);
                x.arc = *arc;
                if (colon != std::string::npos) {
                    try {
                        x.via = std::stoi(item.substr(colon + 1));
                    } catch (...) {
                        throw ParseError(lineno, "bad triangle index in " + item);
                    }
                }
                c.crossings.push_back(x);
            }
        } else {
            throw ParseError(lineno, "unknown key " + key);
        }
    }
    if (!have_start || !have_end || !have_selfint || !have_cross)
        throw ParseError(lineno, "record needs start=, end=, selfint=, crossings=");
    return c;
}

inline std::vector<CurveRecord> parse_dataset(const Triangulation& t, std::istream& in) {
    std::vector<CurveRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::tokens_of(line).empty()) continue;
        out.push_back(parse_curve_record(t, line, lineno));
    }
    return out;
}

inline std::vector<CurveRecord> load_dataset(const Triangulation& t, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("IoError: cannot open " + path);
    return parse_dataset(t, in);
}

}  // namespace gentle
