#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gentle/core.hpp"
#include "gentle/presentation.hpp"

namespace gentle {

inline int word_source(const Presentation& p, const StringWord& w) {
    return w.is_trivial() ? w.trivial_vertex() : p.letter_source(w.letters().front());
}

inline int word_target(const Presentation& p, const StringWord& w) {
    return w.is_trivial() ? w.trivial_vertex() : p.letter_target(w.letters().back());
}

// Vertices visited by the walk, length l(w)+1.
inline std::vector<int> walk_vertices(const Presentation& p, const StringWord& w) {
    std::vector<int> vs;
    if (w.is_trivial()) {
        vs.push_back(w.trivial_vertex());
        return vs;
    }
    vs.push_back(p.letter_source(w.letters().front()));
    for (Letter l : w.letters()) vs.push_back(p.letter_target(l));
    return vs;
}

namespace detail {

// A consecutive pair of letters is legal when the walk composes, does not
// backtrack, and neither the pair nor its inverse is a length-2 ideal
// generator. Longer generators are checked per run by valid_letters below.
inline bool pair_ok(const Presentation& p, Letter a, Letter b) {
    if (p.letter_target(a) != p.letter_source(b)) return false;
    if (b == a.flipped()) return false;
    if (!a.inverted && !b.inverted && p.is_relation_pair(a.arrow, b.arrow)) return false;
    if (a.inverted && b.inverted && p.is_relation_pair(b.arrow, a.arrow)) return false;
    return true;
}

// Check every maximal direct (resp. inverted) run against the forbidden
// words of length > 2; length-2 generators were handled pairwise.
inline bool runs_ok(const Presentation& p, const std::vector<Letter>& ls) {
    if (!p.has_long_forbidden()) return true;
    auto run_hits = [&](std::vector<int> arrows) {
        for (const auto& f : p.forbidden_words()) {
            if (f.size() <= 2 || f.size() > arrows.size()) continue;
            for (size_t s = 0; s + f.size() <= arrows.size(); ++s)
                if (std::equal(f.begin(), f.end(), arrows.begin() + static_cast<long>(s)))
                    return true;
        }
        return false;
    };
    size_t i = 0;
    while (i < ls.size()) {
        size_t j = i;
        while (j < ls.size() && ls[j].inverted == ls[i].inverted) ++j;
        std::vector<int> arrows;
        for (size_t k = i; k < j; ++k) arrows.push_back(ls[k].arrow);
        if (ls[i].inverted) std::reverse(arrows.begin(), arrows.end());
        if (run_hits(std::move(arrows))) return false;
        i = j;
    }
    return true;
}

inline bool valid_letters(const Presentation& p, const std::vector<Letter>& ls) {
    for (Letter l : ls)
        if (l.arrow < 0 || l.arrow >= p.n_arrows())
            throw PreconditionError("UnknownArrow in string word");
    for (size_t i = 0; i + 1 < ls.size(); ++i)
        if (!pair_ok(p, ls[i], ls[i + 1])) return false;
    return runs_ok(p, ls);
}

}  // namespace detail

inline bool is_valid_string(const Presentation& p, const StringWord& w) {
    if (w.is_trivial()) {
        if (w.trivial_vertex() < 0 || w.trivial_vertex() >= p.n_vertices())
            throw PreconditionError("UnknownVertex in trivial string");
        return true;
    }
    return detail::valid_letters(p, w.letters());
}

inline StringWord inverse(const StringWord& w) {
    if (w.is_trivial()) return StringWord::trivial(w.trivial_vertex(), -w.trivial_sign());
    std::vector<Letter> ls(w.letters().rbegin(), w.letters().rend());
    for (Letter& l : ls) l = l.flipped();
    return StringWord::word(std::move(ls));
}

// Representative of {w, w^{-1}} under the fixed total order; trivial words
// normalize to the +1 sign.
inline StringWord canonical(const StringWord& w) {
    if (w.is_trivial()) return StringWord::trivial(w.trivial_vertex(), +1);
    StringWord inv = inverse(w);
    return inv < w ? inv : w;
}

// Concatenation w . mid . v where mid is a single letter and either end may
// be trivial (in which case it only pins the junction vertex; signs are
// ignored here). Returns the combined word when it is a valid string.
inline std::optional<StringWord> concat_through(const Presentation& p, const StringWord& w,
                                                Letter mid, const StringWord& v) {
    if (word_target(p, w) != p.letter_source(mid)) return std::nullopt;
    if (p.letter_target(mid) != word_source(p, v)) return std::nullopt;
    std::vector<Letter> ls;
    ls.insert(ls.end(), w.letters().begin(), w.letters().end());
    ls.push_back(mid);
    ls.insert(ls.end(), v.letters().begin(), v.letters().end());
    if (!detail::valid_letters(p, ls)) return std::nullopt;
    return StringWord::word(std::move(ls));
}

// All canonical strings of length <= max_len, trivial words once per vertex.
// Breadth-first right extension with validity pruning, then canonical dedup;
// the result is sorted in the canonical order.
inline std::vector<StringWord> enumerate_strings(const Presentation& p, int max_len) {
    if (!p.finite_dimensional())
        throw PreconditionError("enumerate_strings requires a finite-dimensional algebra");
    std::set<StringWord> out;
    for (int v = 0; v < p.n_vertices(); ++v) out.insert(StringWord::trivial(v));
    std::vector<std::vector<Letter>> frontier;
    for (int a = 0; a < p.n_arrows(); ++a)
        for (bool inv : {false, true}) frontier.push_back({Letter{a, inv}});
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::vector<Letter>> next;
        for (auto& ls : frontier) {
            if (detail::runs_ok(p, ls)) out.insert(canonical(StringWord::word(ls)));
            if (len == max_len) continue;
            for (int a = 0; a < p.n_arrows(); ++a)
                for (bool inv : {false, true}) {
                    Letter cand{a, inv};
                    if (!detail::pair_ok(p, ls.back(), cand)) continue;
                    auto ext = ls;
                    ext.push_back(cand);
                    next.push_back(std::move(ext));
                }
        }
        frontier = std::move(next);
    }
    return {out.begin(), out.end()};
}

// Projectivity and injectivity of M(w), decided by comparing canonical forms
// against the canonical projective/injective string of every vertex.
inline bool is_projective(const Presentation& p, const StringWord& w) {
    StringWord c = canonical(w);
    for (int v = 0; v < p.n_vertices(); ++v)
        if (canonical(projective_string(p, v)) == c) return true;
    return false;
}

inline bool is_injective(const Presentation& p, const StringWord& w) {
    StringWord c = canonical(w);
    for (int v = 0; v < p.n_vertices(); ++v)
        if (canonical(injective_string(p, v)) == c) return true;
    return false;
}

// A band: a cyclic string whose wrap-around junction is again legal (hence
// every power is a string) and which is not a proper power.
inline bool is_band(const Presentation& p, const StringWord& w) {
    if (w.is_trivial() || !is_valid_string(p, w)) return false;
    if (word_source(p, w) != word_target(p, w)) return false;
    const auto& ls = w.letters();
    if (!detail::pair_ok(p, ls.back(), ls.front())) return false;
    if (p.has_long_forbidden()) {
        // wrap runs: validate the doubled word's runs as well
        std::vector<Letter> doubled(ls);
        doubled.insert(doubled.end(), ls.begin(), ls.end());
        if (!detail::runs_ok(p, doubled)) return false;
    }
    const size_t n = ls.size();
    for (size_t period = 1; period < n; ++period) {
        if (n % period != 0) continue;
        bool is_power = true;
        for (size_t i = period; i < n && is_power; ++i) is_power = ls[i] == ls[i - period];
        if (is_power) return false;
    }
    return true;
}

namespace detail {

inline StringWord band_canonical(const StringWord& w) {
    const auto& ls = w.letters();
    const size_t n = ls.size();
    StringWord best = w;
    for (const StringWord& base : {w, inverse(w)}) {
        std::vector<Letter> rot(base.letters());
        for (size_t r = 0; r < n; ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            StringWord cand = StringWord::word(rot);
            if (cand < best) best = cand;
        }
    }
    return best;
}

}  // namespace detail

// Bands of length <= max_len, one representative per rotation/inversion class.
inline std::vector<StringWord> enumerate_bands(const Presentation& p, int max_len) {
    std::set<StringWord> out;
    for (const StringWord& w : enumerate_strings(p, max_len))
        if (!w.is_trivial() && is_band(p, w)) out.insert(detail::band_canonical(w));
    return {out.begin(), out.end()};
}

// Butler-Ringel style sign functions: sigma tells apart the (at most two)
// arrows leaving a vertex, epsilon the arrows entering it, and allowed
// compositions must alternate. Trivial strings use sigma(1_{v,t}) = -t,
// epsilon(1_{v,t}) = t; a letter x may follow a word u iff sigma(x) = -eps(u).
struct SignAssignment {
    std::vector<int> sigma, epsilon;  // per arrow, values in {+1,-1}

    int sigma_of(Letter l) const {
        return l.inverted ? epsilon[static_cast<size_t>(l.arrow)]
                          : sigma[static_cast<size_t>(l.arrow)];
    }
    int epsilon_of(Letter l) const {
        return l.inverted ? sigma[static_cast<size_t>(l.arrow)]
                          : epsilon[static_cast<size_t>(l.arrow)];
    }
};

// Solve the sign constraints by 2-coloring. Variables are sigma(a), eps(a)
// per arrow; each constraint ties two variables with a fixed relative sign.
// Deterministic: scanning sigma(a0), eps(a0), sigma(a1), ... the first
// unassigned variable of each component gets +1.
inline SignAssignment assign_signs(const Presentation& p) {
    if (!p.gentle()) throw PreconditionError("NotGentle: sign assignment needs a gentle algebra");
    const int na = p.n_arrows();
    // variable ids: 2*a for sigma(a), 2*a+1 for eps(a)
    struct Edge {
        int to;
        int rel;  // +1 equal, -1 opposite
        std::string why;
    };
    std::vector<std::vector<Edge>> adj(static_cast<size_t>(2 * na));
    auto link = [&](int u, int v, int rel, std::string why) {
        adj[static_cast<size_t>(u)].push_back({v, rel, why});
        adj[static_cast<size_t>(v)].push_back({u, rel, std::move(why)});
    };
    for (int v = 0; v < p.n_vertices(); ++v) {
        const auto& outs = p.out_arrows(v);
        for (size_t i = 0; i + 1 < outs.size(); ++i)
            link(2 * outs[i], 2 * outs[i + 1], -1,
                 "coinitial arrows " + p.arrow(outs[i]).name + "," + p.arrow(outs[i + 1]).name);
        const auto& ins = p.in_arrows(v);
        for (size_t i = 0; i + 1 < ins.size(); ++i)
            link(2 * ins[i] + 1, 2 * ins[i + 1] + 1, -1,
                 "coterminal arrows " + p.arrow(ins[i]).name + "," + p.arrow(ins[i + 1]).name);
    }
    for (int a = 0; a < na; ++a)
        for (int b : p.out_arrows(p.arrow(a).tgt))
            if (!p.is_relation_pair(a, b))
                link(2 * a + 1, 2 * b, -1,
                     "composition " + p.arrow(a).name + " " + p.arrow(b).name);

    std::vector<int> value(static_cast<size_t>(2 * na), 0);
    for (int seed = 0; seed < 2 * na; ++seed) {
        if (value[static_cast<size_t>(seed)] != 0) continue;
        value[static_cast<size_t>(seed)] = +1;
        std::vector<int> queue{seed};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (const Edge& e : adj[static_cast<size_t>(u)]) {
                int expect = value[static_cast<size_t>(u)] * e.rel;
                if (value[static_cast<size_t>(e.to)] == 0) {
                    value[static_cast<size_t>(e.to)] = expect;
                    queue.push_back(e.to);
                } else if (value[static_cast<size_t>(e.to)] != expect) {
                    throw PreconditionError("Unsatisfiable sign constraints: " + e.why);
                }
            }
        }
    }
    SignAssignment s;
    s.sigma.resize(static_cast<size_t>(na));
    s.epsilon.resize(static_cast<size_t>(na));
    for (int a = 0; a < na; ++a) {
        s.sigma[static_cast<size_t>(a)] = value[static_cast<size_t>(2 * a)];
        s.epsilon[static_cast<size_t>(a)] = value[static_cast<size_t>(2 * a + 1)];
    }
    return s;
}

}  // namespace gentle
