#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/core.hpp"
#include "gentle/presentation.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// A triple (D,E,F) with w = DEF, encoded by its cut positions: D = letters
// [1..i], E = letters (i..j], F = letters (j..n]. Factor triples present
// M(E) as a quotient of M(w); substring triples embed M(E) as a submodule.
enum class TripleKind { Factor, Sub };

struct Factorization {
    StringWord word;
    int i = 0;
    int j = 0;
    TripleKind kind = TripleKind::Factor;

    bool middle_trivial() const { return i == j; }
};

namespace detail {

// Factor cuts: the letter before the middle (if any) is inverted and the
// letter after the middle (if any) is direct. Substring cuts are dual.
inline bool cut_ok(const StringWord& w, int i, int j, TripleKind kind) {
    const auto& ls = w.letters();
    const int n = w.length();
    bool left_ok, right_ok;
    if (kind == TripleKind::Factor) {
        left_ok = (i == 0) || ls[static_cast<size_t>(i - 1)].inverted;
        right_ok = (j == n) || !ls[static_cast<size_t>(j)].inverted;
    } else {
        left_ok = (i == 0) || !ls[static_cast<size_t>(i - 1)].inverted;
        right_ok = (j == n) || ls[static_cast<size_t>(j)].inverted;
    }
    return left_ok && right_ok;
}

}  // namespace detail

inline std::vector<Factorization> triples(const Presentation& p, const StringWord& w,
                                          TripleKind kind) {
    if (!is_valid_string(p, w)) throw PreconditionError("triples need a valid string");
    std::vector<Factorization> out;
    const int n = w.length();
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (detail::cut_ok(w, i, j, kind)) out.push_back({w, i, j, kind});
    return out;
}

inline std::vector<Factorization> factor_triples(const Presentation& p, const StringWord& w) {
    return triples(p, w, TripleKind::Factor);
}
inline std::vector<Factorization> sub_triples(const Presentation& p, const StringWord& w) {
    return triples(p, w, TripleKind::Sub);
}

enum class Orientation { Same, Reversed };

// A factor triple of x matched with a substring triple of y: equal middles
// (Same) or mutually inverse middles (Reversed). Trivial middles match by
// vertex and then both orientations degenerate.
struct AdPair {
    StringWord x, y;
    int i = 0, j = 0;  // factor cuts on x
    int k = 0, l = 0;  // substring cuts on y
    Orientation orient = Orientation::Same;
    bool trivial_middle = false;
};

namespace detail {

inline int middle_vertex(const Presentation& p, const StringWord& w, int cut) {
    return walk_vertices(p, w)[static_cast<size_t>(cut)];
}

inline std::optional<AdPair> match(const Presentation& p, const Factorization& f,
                                   const Factorization& s) {
    AdPair pr{f.word, s.word, f.i, f.j, s.i, s.j, Orientation::Same, false};
    if (f.middle_trivial() != s.middle_trivial()) return std::nullopt;
    if (f.middle_trivial()) {
        if (middle_vertex(p, f.word, f.i) != middle_vertex(p, s.word, s.i)) return std::nullopt;
        pr.trivial_middle = true;
        return pr;
    }
    const auto& xl = f.word.letters();
    const auto& yl = s.word.letters();
    const int len = f.j - f.i;
    if (len != s.j - s.i) return std::nullopt;
    bool same = true, reversed = true;
    for (int t = 0; t < len && (same || reversed); ++t) {
        if (xl[static_cast<size_t>(f.i + t)] != yl[static_cast<size_t>(s.i + t)]) same = false;
        if (xl[static_cast<size_t>(f.i + t)].flipped() !=
            yl[static_cast<size_t>(s.j - 1 - t)])
            reversed = false;
    }
    if (same) {
        pr.orient = Orientation::Same;
        return pr;
    }
    if (reversed) {
        pr.orient = Orientation::Reversed;
        return pr;
    }
    return std::nullopt;
}

}  // namespace detail

// One-sided: the overlap reaches a shared end of both words, so the glued
// exact sequence degenerates. For a nontrivial middle this is decided by the
// end clauses of the matching orientation alone: the two glued words
// y[..k) x[i..) and x[..i) y[k..) splice at junctions already present inside
// x or y. A trivial middle is different: both orientations degenerate and
// the splice junctions are new letter pairs not covered by either word, so
// an orientation only counts when its glued words are actually strings.
inline bool is_one_sided(const Presentation& p, const AdPair& pr) {
    const int nx = pr.x.length(), ny = pr.y.length();
    bool same_clause = (pr.i == 0 && pr.k == 0) || (pr.j == nx && pr.l == ny);
    bool rev_clause = (pr.i == 0 && pr.l == ny) || (pr.j == nx && pr.k == 0);
    if (!pr.trivial_middle)
        return pr.orient == Orientation::Same ? same_clause : rev_clause;
    const auto& xl = pr.x.letters();
    const auto& yl = pr.y.letters();
    bool same_ok = !same_clause;
    if (same_ok && pr.k > 0 && pr.i < nx)
        same_ok = detail::pair_ok(p, yl[static_cast<size_t>(pr.k - 1)],
                                  xl[static_cast<size_t>(pr.i)]);
    if (same_ok && pr.i > 0 && pr.k < ny)
        same_ok = detail::pair_ok(p, xl[static_cast<size_t>(pr.i - 1)],
                                  yl[static_cast<size_t>(pr.k)]);
    bool rev_ok = !rev_clause;
    if (rev_ok && pr.k < ny && pr.i < nx)
        rev_ok = detail::pair_ok(p, yl[static_cast<size_t>(pr.k)].flipped(),
                                 xl[static_cast<size_t>(pr.i)]);
    if (rev_ok && pr.i > 0 && pr.k > 0)
        rev_ok = detail::pair_ok(p, xl[static_cast<size_t>(pr.i - 1)],
                                 yl[static_cast<size_t>(pr.k - 1)].flipped());
    return !(same_ok || rev_ok);
}

inline bool is_two_sided(const Presentation& p, const AdPair& pr) {
    return !is_one_sided(p, pr);
}

enum class PairMode { Hom, Ext };

// Hom mode: matches in F(x) x S(y), indexing a basis of Hom(M(x),M(y)).
// Ext mode: matches in F(y) x S(x), the pairs relevant to extensions x -> y.
inline std::vector<AdPair> ad_pairs(const Presentation& p, const StringWord& x,
                                    const StringWord& y, PairMode mode = PairMode::Hom) {
    const StringWord& fw = (mode == PairMode::Hom) ? x : y;
    const StringWord& sw = (mode == PairMode::Hom) ? y : x;
    std::vector<AdPair> out;
    for (const Factorization& f : factor_triples(p, fw))
        for (const Factorization& s : sub_triples(p, sw))
            if (auto pr = detail::match(p, f, s)) out.push_back(*pr);
    return out;
}

inline int hom_dim_combinatorial(const Presentation& p, const StringWord& w,
                                 const StringWord& v) {
    return static_cast<int>(ad_pairs(p, w, v, PairMode::Hom).size());
}

// Witness for an extension from w to v: an arrow gluing the words into a
// longer string (E1 with w, E2 with w^{-1}; the second word may be taken
// inverted), or a two-sided ad-pair in F(v) x S(w) (E3).
struct ExtensionWitness {
    enum class Kind { E1, E2, E3 };
    Kind kind = Kind::E1;
    int arrow = -1;             // E1/E2
    bool second_inverted = false;  // E1/E2: true when the witness uses v^{-1}
    std::optional<AdPair> pair;    // E3
    StringWord glued;              // E1/E2: the connecting string
};

namespace detail {

inline std::optional<ExtensionWitness> extension_witness(const Presentation& p,
                                                         const StringWord& w,
                                                         const StringWord& v) {
    // E1: w a v or w a v^{-1}
    for (int a = 0; a < p.n_arrows(); ++a) {
        if (auto u = concat_through(p, w, Letter{a, false}, v))
            return ExtensionWitness{ExtensionWitness::Kind::E1, a, false, std::nullopt, *u};
        if (auto u = concat_through(p, w, Letter{a, false}, inverse(v)))
            return ExtensionWitness{ExtensionWitness::Kind::E1, a, true, std::nullopt, *u};
    }
    // E2: w^{-1} b v or w^{-1} b v^{-1}
    StringWord wi = inverse(w);
    for (int b = 0; b < p.n_arrows(); ++b) {
        if (auto u = concat_through(p, wi, Letter{b, false}, v))
            return ExtensionWitness{ExtensionWitness::Kind::E2, b, false, std::nullopt, *u};
        if (auto u = concat_through(p, wi, Letter{b, false}, inverse(v)))
            return ExtensionWitness{ExtensionWitness::Kind::E2, b, true, std::nullopt, *u};
    }
    // E3: two-sided ad-pair in F(v) x S(w)
    for (const AdPair& pr : ad_pairs(p, w, v, PairMode::Ext))
        if (is_two_sided(p, pr))
            return ExtensionWitness{ExtensionWitness::Kind::E3, -1, false, pr, StringWord{}};
    return std::nullopt;
}

}  // namespace detail

// Extension test without the gentle guard. The criterion is only a theorem
// for gentle algebras; this entry point exists so the scope boundary itself
// can be exercised.
inline std::optional<ExtensionWitness> has_extension_unchecked(const Presentation& p,
                                                               const StringWord& w,
                                                               const StringWord& v) {
    if (!is_valid_string(p, w) || !is_valid_string(p, v))
        throw PreconditionError("has_extension needs valid strings");
    return detail::extension_witness(p, w, v);
}

inline std::optional<ExtensionWitness> has_extension(const Presentation& p, const StringWord& w,
                                                     const StringWord& v) {
    if (!p.gentle()) throw PreconditionError("NotGentle: extension criterion needs a gentle algebra");
    return has_extension_unchecked(p, w, v);
}

// Ext^1_A(M(w), M(v)) != 0, decided combinatorially.
inline bool ext_nonzero(const Presentation& p, const StringWord& w, const StringWord& v) {
    return has_extension(p, w, v).has_value();
}

inline bool is_exceptional(const Presentation& p, const StringWord& w) {
    return !ext_nonzero(p, w, w);
}

struct ExtTable {
    std::vector<StringWord> words;
    std::vector<std::vector<bool>> ext;  // ext[i][j]: extension from words[i] to words[j]
    std::vector<std::vector<std::optional<ExtensionWitness>>> witness;
};

inline ExtTable ext_table(const Presentation& p, const std::vector<StringWord>& words) {
    ExtTable t;
    t.words = words;
    const size_t n = words.size();
    t.ext.assign(n, std::vector<bool>(n, false));
    t.witness.assign(n, std::vector<std::optional<ExtensionWitness>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            t.witness[i][j] = has_extension(p, words[i], words[j]);
            t.ext[i][j] = t.witness[i][j].has_value();
        }
    return t;
}

}  // namespace gentle
