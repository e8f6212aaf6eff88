#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gentle/core.hpp"

namespace gentle {

struct Arrow {
    std::string name;
    int src = -1;
    int tgt = -1;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
};

enum class AlgebraStatus { Unvalidated, Gentle, StringOnly, Invalid };

struct Violation {
    std::string rule;     // G1, G2, G3, G4, FinDim
    std::string witness;  // human-readable description
};

struct ValidationReport {
    bool gentle = false;
    bool string_algebra = false;
    bool finite_dimensional = false;
    std::vector<Violation> violations;
};

// A presentation kQ/I where I is generated by the listed forbidden paths.
// Forbidden paths of length 2 are the usual monomial relations; longer ones
// put the presentation into string-algebra mode (the quotient is then no
// longer gentle but most of the word machinery still applies).
//
// Values are immutable after construction; validation runs eagerly.
class Presentation {
public:
    static Presentation make(Quiver q, std::vector<std::vector<int>> forbidden);

    int n_vertices() const { return static_cast<int>(q_.vertices.size()); }
    int n_arrows() const { return static_cast<int>(q_.arrows.size()); }
    const Quiver& quiver() const { return q_; }
    const Arrow& arrow(int a) const { return q_.arrows[static_cast<size_t>(a)]; }
    const std::string& vertex_name(int v) const { return q_.vertices[static_cast<size_t>(v)]; }

    std::optional<int> vertex_index(const std::string& name) const {
        auto it = vertex_by_name_.find(name);
        if (it == vertex_by_name_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<int> arrow_index(const std::string& name) const {
        auto it = arrow_by_name_.find(name);
        if (it == arrow_by_name_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<int>& out_arrows(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in_arrows(int v) const { return in_[static_cast<size_t>(v)]; }

    // True iff the two-arrow path a-then-b lies in I. Left letter acts first,
    // so composability means tgt(a) == src(b).
    bool is_relation_pair(int a, int b) const {
        return relation_pairs_.count(std::make_pair(a, b)) > 0;
    }

    const std::vector<std::pair<int, int>>& relations() const { return relations_; }
    const std::vector<std::vector<int>>& forbidden_words() const { return forbidden_; }
    bool has_long_forbidden() const { return has_long_forbidden_; }

    AlgebraStatus status() const { return status_; }
    const ValidationReport& report() const { return report_; }
    bool gentle() const { return report_.gentle; }
    bool string_algebra() const { return report_.string_algebra; }
    bool finite_dimensional() const { return report_.finite_dimensional; }

    int letter_source(Letter l) const {
        const Arrow& a = arrow(l.arrow);
        return l.inverted ? a.tgt : a.src;
    }
    int letter_target(Letter l) const {
        const Arrow& a = arrow(l.arrow);
        return l.inverted ? a.src : a.tgt;
    }

private:
    Quiver q_;
    std::vector<std::vector<int>> forbidden_;        // all forbidden paths, as arrow indices
    std::vector<std::pair<int, int>> relations_;     // the length-2 ones
    std::set<std::pair<int, int>> relation_pairs_;
    bool has_long_forbidden_ = false;
    std::vector<std::vector<int>> out_, in_;
    std::map<std::string, int> vertex_by_name_, arrow_by_name_;
    AlgebraStatus status_ = AlgebraStatus::Unvalidated;
    ValidationReport report_;

    friend ValidationReport validate(const Presentation& p);
};

inline ValidationReport validate(const Presentation& p) {
    ValidationReport r;
    const int nv = p.n_vertices();
    const int na = p.n_arrows();

    bool g1 = true, g2 = true, g3 = true, g4 = true;

    for (int v = 0; v < nv; ++v) {
        if (p.out_arrows(v).size() > 2) {
            g1 = false;
            r.violations.push_back({"G1", "vertex " + p.vertex_name(v) + " has " +
                                              std::to_string(p.out_arrows(v).size()) +
                                              " outgoing arrows"});
        }
        if (p.in_arrows(v).size() > 2) {
            g1 = false;
            r.violations.push_back({"G1", "vertex " + p.vertex_name(v) + " has " +
                                              std::to_string(p.in_arrows(v).size()) +
                                              " incoming arrows"});
        }
    }

    for (int a = 0; a < na; ++a) {
        int allowed_succ = 0, forbidden_succ = 0;
        for (int b : p.out_arrows(p.arrow(a).tgt))
            (p.is_relation_pair(a, b) ? forbidden_succ : allowed_succ)++;
        int allowed_pred = 0, forbidden_pred = 0;
        for (int x : p.in_arrows(p.arrow(a).src))
            (p.is_relation_pair(x, a) ? forbidden_pred : allowed_pred)++;
        if (allowed_succ > 1) {
            g2 = false;
            r.violations.push_back({"G2", "arrow " + p.arrow(a).name + " has " +
                                              std::to_string(allowed_succ) +
                                              " non-relation successors"});
        }
        if (allowed_pred > 1) {
            g2 = false;
            r.violations.push_back({"G2", "arrow " + p.arrow(a).name + " has " +
                                              std::to_string(allowed_pred) +
                                              " non-relation predecessors"});
        }
        if (forbidden_succ > 1) {
            g4 = false;
            r.violations.push_back({"G4", "arrow " + p.arrow(a).name + " has " +
                                              std::to_string(forbidden_succ) +
                                              " relation successors"});
        }
        if (forbidden_pred > 1) {
            g4 = false;
            r.violations.push_back({"G4", "arrow " + p.arrow(a).name + " has " +
                                              std::to_string(forbidden_pred) +
                                              " relation predecessors"});
        }
    }

    for (const auto& w : p.forbidden_words()) {
        if (w.size() != 2) {
            g3 = false;
            std::string path;
            for (int a : w) path += (path.empty() ? "" : " ") + p.arrow(a).name;
            r.violations.push_back({"G3", "ideal generator of length " +
                                              std::to_string(w.size()) + ": " + path});
        }
    }

    // Finite-dimensionality: the graph of allowed two-arrow compositions must
    // be acyclic. Nodes are arrows; a -> b when tgt(a) == src(b) and ab is not
    // a relation.
    {
        std::vector<int> color(static_cast<size_t>(na), 0);  // 0 new, 1 active, 2 done
        std::vector<int> stack, path;
        bool cyclic = false;
        std::string cycle_witness;
        for (int start = 0; start < na && !cyclic; ++start) {
            if (color[static_cast<size_t>(start)] != 0) continue;
            // iterative DFS keeping the active path for the witness
            std::vector<std::pair<int, size_t>> frames;
            frames.push_back({start, 0});
            color[static_cast<size_t>(start)] = 1;
            path = {start};
            while (!frames.empty() && !cyclic) {
                auto& [a, next] = frames.back();
                const auto& succ = p.out_arrows(p.arrow(a).tgt);
                bool advanced = false;
                while (next < succ.size()) {
                    int b = succ[next++];
                    if (p.is_relation_pair(a, b)) continue;
                    if (color[static_cast<size_t>(b)] == 1) {
                        cyclic = true;
                        cycle_witness = "relation-free cycle through arrow " + p.arrow(b).name;
                        break;
                    }
                    if (color[static_cast<size_t>(b)] == 0) {
                        color[static_cast<size_t>(b)] = 1;
                        frames.push_back({b, 0});
                        path.push_back(b);
                        advanced = true;
                        break;
                    }
                }
                if (cyclic || advanced) continue;
                if (next >= succ.size()) {
                    color[static_cast<size_t>(a)] = 2;
                    frames.pop_back();
                    path.pop_back();
                }
            }
        }
        r.finite_dimensional = !cyclic;
        if (cyclic) r.violations.push_back({"FinDim", cycle_witness});
    }

    r.gentle = g1 && g2 && g3 && g4;
    r.string_algebra = g1 && g2;
    return r;
}

inline Presentation Presentation::make(Quiver q, std::vector<std::vector<int>> forbidden) {
    Presentation p;
    p.q_ = std::move(q);
    p.forbidden_ = std::move(forbidden);

    for (size_t i = 0; i < p.q_.vertices.size(); ++i) {
        if (!p.vertex_by_name_.emplace(p.q_.vertices[i], static_cast<int>(i)).second)
            throw PreconditionError("duplicate vertex id " + p.q_.vertices[i]);
    }
    p.out_.resize(p.q_.vertices.size());
    p.in_.resize(p.q_.vertices.size());
    for (size_t i = 0; i < p.q_.arrows.size(); ++i) {
        const Arrow& a = p.q_.arrows[i];
        if (!p.arrow_by_name_.emplace(a.name, static_cast<int>(i)).second)
            throw PreconditionError("duplicate arrow id " + a.name);
        if (a.src < 0 || a.src >= p.n_vertices() || a.tgt < 0 || a.tgt >= p.n_vertices())
            throw PreconditionError("arrow " + a.name + " has undeclared endpoint");
        p.out_[static_cast<size_t>(a.src)].push_back(static_cast<int>(i));
        p.in_[static_cast<size_t>(a.tgt)].push_back(static_cast<int>(i));
    }
    for (const auto& w : p.forbidden_) {
        if (w.size() < 2) throw PreconditionError("forbidden word shorter than 2");
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i] < 0 || w[i] >= p.n_arrows())
                throw PreconditionError("forbidden word references unknown arrow");
            if (i + 1 < w.size() && p.arrow(w[i]).tgt != p.arrow(w[i + 1]).src)
                throw PreconditionError("forbidden word is not a composable path");
        }
        if (w.size() == 2) {
            p.relations_.emplace_back(w[0], w[1]);
            p.relation_pairs_.insert({w[0], w[1]});
        } else {
            p.has_long_forbidden_ = true;
        }
    }

    p.report_ = validate(p);
    if (p.report_.gentle)
        p.status_ = AlgebraStatus::Gentle;
    else if (p.report_.string_algebra)
        p.status_ = AlgebraStatus::StringOnly;
    else
        p.status_ = AlgebraStatus::Invalid;
    return p;
}

// A composable path in Q, possibly trivial, avoiding every ideal generator.
struct Path {
    int source = -1;
    std::vector<int> arrows;
    int target = -1;
};

namespace detail {

inline bool path_hits_forbidden(const Presentation& p, const std::vector<int>& arrows) {
    // Only windows ending at the last arrow need checking when extending.
    for (const auto& f : p.forbidden_words()) {
        if (f.size() > arrows.size()) continue;
        if (std::equal(f.begin(), f.end(), arrows.end() - static_cast<long>(f.size())))
            return true;
    }
    return false;
}

}  // namespace detail

// All paths avoiding I, including the trivial path at each vertex. This is a
// k-basis of the algebra; callers needing projectives group it by source.
inline std::vector<Path> path_basis(const Presentation& p) {
    if (!p.finite_dimensional())
        throw PreconditionError("InfiniteDimensional: relation-free cycle exists");
    std::vector<Path> basis;
    for (int v = 0; v < p.n_vertices(); ++v) basis.push_back({v, {}, v});
    // grow depth-first in declaration order
    std::vector<int> cur;
    for (int v = 0; v < p.n_vertices(); ++v) {
        // stack of (arrow chosen, remaining successor iteration index) is
        // overkill; recursion depth is bounded by the basis path length
        struct Walker {
            const Presentation& p;
            std::vector<Path>& out;
            std::vector<int> arrows;
            void grow(int v0, int at) {
                for (int a : p.out_arrows(at)) {
                    arrows.push_back(a);
                    if (!detail::path_hits_forbidden(p, arrows)) {
                        out.push_back({v0, arrows, p.arrow(a).tgt});
                        grow(v0, p.arrow(a).tgt);
                    }
                    arrows.pop_back();
                }
            }
        } w{p, basis, {}};
        w.grow(v, v);
    }
    std::stable_sort(basis.begin(), basis.end(), [](const Path& a, const Path& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        return a.arrows < b.arrows;
    });
    return basis;
}

namespace detail {

// Maximal direct path from v along the chain started by each outgoing arrow.
// Gentleness makes each continuation unique.
inline std::vector<std::vector<int>> maximal_out_chains(const Presentation& p, int v) {
    std::vector<std::vector<int>> chains;
    for (int a0 : p.out_arrows(v)) {
        std::vector<int> chain{a0};
        for (;;) {
            int last = chain.back();
            int next = -1;
            for (int b : p.out_arrows(p.arrow(last).tgt))
                if (!p.is_relation_pair(last, b)) {
                    next = b;
                    break;
                }
            if (next < 0) break;
            chain.push_back(next);
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

inline std::vector<std::vector<int>> maximal_in_chains(const Presentation& p, int v) {
    std::vector<std::vector<int>> chains;
    for (int a0 : p.in_arrows(v)) {
        std::vector<int> chain{a0};
        for (;;) {
            int first = chain.front();
            int prev = -1;
            for (int x : p.in_arrows(p.arrow(first).src))
                if (!p.is_relation_pair(x, first)) {
                    prev = x;
                    break;
                }
            if (prev < 0) break;
            chain.insert(chain.begin(), prev);
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

}  // namespace detail

// String w with M(w) isomorphic to the indecomposable projective P_v:
// w = p^{-1} q for the at most two maximal direct paths p, q out of v.
inline StringWord projective_string(const Presentation& p, int v) {
    if (v < 0 || v >= p.n_vertices()) throw PreconditionError("UnknownVertex");
    if (!p.gentle() || !p.finite_dimensional())
        throw PreconditionError("projective_string requires a finite-dimensional gentle algebra");
    auto chains = detail::maximal_out_chains(p, v);
    if (chains.empty()) return StringWord::trivial(v);
    if (chains.size() == 1) {
        std::vector<Letter> ls;
        for (int a : chains[0]) ls.push_back({a, false});
        return StringWord::word(std::move(ls));
    }
    std::vector<Letter> ls;
    for (auto it = chains[0].rbegin(); it != chains[0].rend(); ++it) ls.push_back({*it, true});
    for (int a : chains[1]) ls.push_back({a, false});
    return StringWord::word(std::move(ls));
}

// Dual: w with M(w) isomorphic to the injective I_v, built from the maximal
// direct paths ending at v as q r^{-1}.
inline StringWord injective_string(const Presentation& p, int v) {
    if (v < 0 || v >= p.n_vertices()) throw PreconditionError("UnknownVertex");
    if (!p.gentle() || !p.finite_dimensional())
        throw PreconditionError("injective_string requires a finite-dimensional gentle algebra");
    auto chains = detail::maximal_in_chains(p, v);
    if (chains.empty()) return StringWord::trivial(v);
    if (chains.size() == 1) {
        std::vector<Letter> ls;
        for (int a : chains[0]) ls.push_back({a, false});
        return StringWord::word(std::move(ls));
    }
    std::vector<Letter> ls;
    for (int a : chains[0]) ls.push_back({a, false});
    for (auto it = chains[1].rbegin(); it != chains[1].rend(); ++it) ls.push_back({*it, true});
    return StringWord::word(std::move(ls));
}

}  // namespace gentle
