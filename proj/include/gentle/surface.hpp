#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gentle/core.hpp"
#include "gentle/homext.hpp"
#include "gentle/presentation.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// Combinatorial triangulation data of an unpunctured marked surface: sides
// are internal arcs or boundary segments; each triangle lists its sides in
// clockwise order. Every internal arc bounds exactly two triangles, every
// boundary segment exactly one.
struct Side {
    bool is_arc = true;
    int idx = -1;

    friend bool operator==(const Side&, const Side&) = default;
};

struct Triangulation {
    std::vector<std::string> arcs;
    std::vector<std::string> bsegs;
    std::vector<std::array<Side, 3>> triangles;

    std::optional<int> arc_index(const std::string& name) const {
        for (size_t i = 0; i < arcs.size(); ++i)
            if (arcs[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }
};

inline void check_triangulation(const Triangulation& t) {
    std::vector<int> arc_count(t.arcs.size(), 0), bseg_count(t.bsegs.size(), 0);
    for (const auto& tri : t.triangles)
        for (const Side& s : tri) {
            auto& counts = s.is_arc ? arc_count : bseg_count;
            if (s.idx < 0 || static_cast<size_t>(s.idx) >= counts.size())
                throw PreconditionError("NotTriangulation: side references unknown id");
            counts[static_cast<size_t>(s.idx)]++;
        }
    for (size_t i = 0; i < arc_count.size(); ++i)
        if (arc_count[i] != 2)
            throw PreconditionError("NotTriangulation: arc " + t.arcs[i] + " occurs in " +
                                    std::to_string(arc_count[i]) + " triangle slots, expected 2");
    for (size_t i = 0; i < bseg_count.size(); ++i)
        if (bseg_count[i] != 1)
            throw PreconditionError("NotTriangulation: boundary segment " + t.bsegs[i] +
                                    " occurs in " + std::to_string(bseg_count[i]) +
                                    " triangle slots, expected 1");
}

// The gentle algebra of a triangulation plus the provenance needed to turn
// crossing sequences into strings: which triangle each arrow came from.
struct ArrowOrigin {
    int triangle = -1;
    int from_arc = -1;
    int to_arc = -1;
};

struct SurfaceAlgebra {
    Triangulation tri;
    Presentation pres;            // one vertex per internal arc
    std::vector<ArrowOrigin> origins;  // by arrow index

    // The unique arrow of the given triangle joining the two arcs, oriented
    // as stored; the letter returned walks from `from` to `to`.
    std::optional<Letter> letter_between(int triangle, int from, int to) const {
        for (size_t a = 0; a < origins.size(); ++a) {
            if (origins[a].triangle != triangle) continue;
            if (origins[a].from_arc == from && origins[a].to_arc == to)
                return Letter{static_cast<int>(a), false};
            if (origins[a].from_arc == to && origins[a].to_arc == from)
                return Letter{static_cast<int>(a), true};
        }
        return std::nullopt;
    }
};

// Vertices are the internal arcs; each clockwise-adjacent pair of internal
// sides in a triangle contributes one arrow, and every internal triangle
// (three internal sides) contributes the three length-2 relations obtained
// by differentiating its 3-cycle.
inline SurfaceAlgebra algebra_from_triangulation(const Triangulation& t) {
    check_triangulation(t);
    SurfaceAlgebra sa;
    sa.tri = t;
    Quiver q;
    q.vertices = t.arcs;
    std::vector<std::vector<int>> forbidden;
    std::map<std::pair<int, int>, int> seen;  // (src,tgt) -> multiplicity, for naming
    for (size_t ti = 0; ti < t.triangles.size(); ++ti) {
        const auto& tri = t.triangles[ti];
        std::array<int, 3> arrow_of_pair{-1, -1, -1};
        for (int k = 0; k < 3; ++k) {
            const Side& a = tri[static_cast<size_t>(k)];
            const Side& b = tri[static_cast<size_t>((k + 1) % 3)];
            if (!a.is_arc || !b.is_arc) continue;
            int mult = ++seen[{a.idx, b.idx}];
            std::string name = t.arcs[static_cast<size_t>(a.idx)] + "." +
                               t.arcs[static_cast<size_t>(b.idx)] + "." + std::to_string(mult);
            arrow_of_pair[static_cast<size_t>(k)] = static_cast<int>(q.arrows.size());
            q.arrows.push_back({name, a.idx, b.idx});
            sa.origins.push_back({static_cast<int>(ti), a.idx, b.idx});
        }
        bool internal = tri[0].is_arc && tri[1].is_arc && tri[2].is_arc;
        if (internal)
            for (int k = 0; k < 3; ++k)
                forbidden.push_back({arrow_of_pair[static_cast<size_t>(k)],
                                     arrow_of_pair[static_cast<size_t>((k + 1) % 3)]});
    }
    sa.pres = Presentation::make(std::move(q), std::move(forbidden));
    if (!sa.pres.gentle() || !sa.pres.finite_dimensional())
        throw CheckError("triangulation produced a non-gentle or infinite-dimensional algebra");
    return sa;
}

// A curve given by its crossing sequence. `via` names the triangle carrying
// the curve from one crossing to the next (needed because two arcs can be
// adjacent in two different triangles). Terminal triangles and the location
// of a self-intersection are declared data, sanity-checked by
// curve_conditions rather than derived from topology.
enum class CurveKind { Arc, RigidCurve };
enum class SelfIntersectionEnd { None, Start, End, Both };

struct Crossing {
    int arc = -1;
    std::optional<int> via;  // absent on the last crossing
};

struct CurveRecord {
    CurveKind kind = CurveKind::Arc;
    std::vector<Crossing> crossings;
    int start_triangle = -1;
    int end_triangle = -1;
    SelfIntersectionEnd selfint = SelfIntersectionEnd::None;
};

namespace detail {

inline bool triangle_has_arc(const Triangulation& t, int tri, int arc) {
    for (const Side& s : t.triangles[static_cast<size_t>(tri)])
        if (s.is_arc && s.idx == arc) return true;
    return false;
}

}  // namespace detail

inline void check_record_shape(const SurfaceAlgebra& sa, const CurveRecord& c) {
    if (c.crossings.empty()) throw PreconditionError("curve record with no crossings");
    const int nt = static_cast<int>(sa.tri.triangles.size());
    if (c.start_triangle < 0 || c.start_triangle >= nt || c.end_triangle < 0 ||
        c.end_triangle >= nt)
        throw PreconditionError("curve record references unknown triangle");
    if (!detail::triangle_has_arc(sa.tri, c.start_triangle, c.crossings.front().arc))
        throw PreconditionError("start triangle does not contain the first crossed arc");
    if (!detail::triangle_has_arc(sa.tri, c.end_triangle, c.crossings.back().arc))
        throw PreconditionError("end triangle does not contain the last crossed arc");
    if (c.kind == CurveKind::Arc && c.selfint != SelfIntersectionEnd::None)
        throw PreconditionError("arc records must declare selfint=none");
    if (c.kind == CurveKind::RigidCurve && c.selfint == SelfIntersectionEnd::None)
        throw PreconditionError("rigid records must declare a self-intersection end");
    for (size_t i = 0; i + 1 < c.crossings.size(); ++i)
        if (!c.crossings[i].via)
            throw PreconditionError("crossing " + std::to_string(i) + " is missing its triangle");
}

// Crossing sequence -> string: letter k is the arrow of via-triangle k
// joining crossings k and k+1, inverted when the stored arrow points
// against the traversal.
inline StringWord string_from_crossings(const SurfaceAlgebra& sa, const CurveRecord& c) {
    check_record_shape(sa, c);
    if (c.crossings.size() == 1) {
        auto v = c.crossings[0].arc;
        if (v < 0 || static_cast<size_t>(v) >= sa.tri.arcs.size())
            throw PreconditionError("InvalidCrossing: unknown arc");
        return StringWord::trivial(v);
    }
    std::vector<Letter> ls;
    for (size_t k = 0; k + 1 < c.crossings.size(); ++k) {
        int tri = *c.crossings[k].via;
        auto l = sa.letter_between(tri, c.crossings[k].arc, c.crossings[k + 1].arc);
        if (!l)
            throw PreconditionError("InvalidCrossing: arcs " +
                                    sa.tri.arcs[static_cast<size_t>(c.crossings[k].arc)] + "," +
                                    sa.tri.arcs[static_cast<size_t>(c.crossings[k + 1].arc)] +
                                    " are not joined in triangle " + std::to_string(tri));
        ls.push_back(*l);
    }
    StringWord w = StringWord::word(std::move(ls));
    if (!is_valid_string(sa.pres, w))
        throw PreconditionError("NotAString: crossing data induces an invalid word");
    return w;
}

// Per-arc position multiplicities of the walk; identical to the oracle's
// dimension vector of M(w).
inline std::vector<int> dimension_vector(const Presentation& p, const StringWord& w) {
    std::vector<int> d(static_cast<size_t>(p.n_vertices()), 0);
    for (int v : walk_vertices(p, w)) d[static_cast<size_t>(v)]++;
    return d;
}

// Which of the triangle patterns hold for a given triple of side values.
// Boundary segments count zero. Patterns follow the intersection-count
// conditions satisfied by arcs ((*) interior, (**)/(***) at terminals) and
// by self-intersecting rigid curves ((****)/(*****) at the declared end).
struct TrianglePatterns {
    bool star = false;        // all pairwise sums dominate, even total
    bool terminal1 = false;   // some side = sum of others + 1 (odd total), side is first/last arc
    bool terminal2 = false;   // some side = sum of others + 2 (even total), side is first = last arc
    bool rigid_odd = false;   // some strict domination with both summands nonzero, odd total
    bool rigid_even = false;  // domination with both summands nonzero, even total
};

struct TriangleReport {
    int triangle = -1;
    std::array<long long, 3> values{0, 0, 0};
    TrianglePatterns patterns;
};

struct ConditionReport {
    StringWord word;
    std::vector<int> dims;
    std::vector<TriangleReport> triangles;
    bool consistent = true;
    std::string first_violation;
};

inline ConditionReport curve_conditions(const SurfaceAlgebra& sa, const CurveRecord& c) {
    ConditionReport rep;
    rep.word = string_from_crossings(sa, c);
    rep.dims = dimension_vector(sa.pres, rep.word);
    const int first_arc = c.crossings.front().arc;
    const int last_arc = c.crossings.back().arc;

    for (size_t ti = 0; ti < sa.tri.triangles.size(); ++ti) {
        const auto& tri = sa.tri.triangles[ti];
        TriangleReport tr;
        tr.triangle = static_cast<int>(ti);
        std::array<int, 3> arc_of{-1, -1, -1};
        for (int k = 0; k < 3; ++k) {
            const Side& s = tri[static_cast<size_t>(k)];
            arc_of[static_cast<size_t>(k)] = s.is_arc ? s.idx : -1;
            tr.values[static_cast<size_t>(k)] =
                s.is_arc ? rep.dims[static_cast<size_t>(s.idx)] : 0;
        }
        long long total = tr.values[0] + tr.values[1] + tr.values[2];
        bool even = total % 2 == 0;
        TrianglePatterns& pat = tr.patterns;
        pat.star = even;
        for (int l = 0; l < 3; ++l) {
            long long vl = tr.values[static_cast<size_t>(l)];
            long long vj = tr.values[static_cast<size_t>((l + 1) % 3)];
            long long vk = tr.values[static_cast<size_t>((l + 2) % 3)];
            int arc_l = arc_of[static_cast<size_t>(l)];
            if (vj + vk < vl) pat.star = false;
            bool l_terminal_arc = arc_l >= 0 && (arc_l == first_arc || arc_l == last_arc);
            if (!even && vj + vk + 1 == vl && l_terminal_arc) pat.terminal1 = true;
            if (even && vj + vk + 2 == vl && arc_l >= 0 && arc_l == first_arc &&
                arc_l == last_arc)
                pat.terminal2 = true;
            if (vj >= 1 && vk >= 1) {
                if (!even && vj + vk >= vl + 1) pat.rigid_odd = true;
                if (even && vj + vk >= vl) pat.rigid_even = true;
            }
        }
        rep.triangles.push_back(tr);
    }

    auto fail = [&](const std::string& why) {
        if (rep.consistent) {
            rep.consistent = false;
            rep.first_violation = why;
        }
    };
    const bool equal_terminals = c.start_triangle == c.end_triangle;
    for (const TriangleReport& tr : rep.triangles) {
        bool is_start = tr.triangle == c.start_triangle;
        bool is_end = tr.triangle == c.end_triangle;
        std::string at = "triangle " + std::to_string(tr.triangle);
        if (!is_start && !is_end) {
            if (!tr.patterns.star) fail("(*) fails at interior " + at);
            continue;
        }
        if (c.kind == CurveKind::Arc) {
            if (equal_terminals) {
                if (!tr.patterns.terminal2) fail("(***) fails at terminal " + at);
            } else {
                if (!tr.patterns.terminal1) fail("(**) fails at terminal " + at);
            }
            continue;
        }
        // rigid curve: the declared self-intersection end follows the rigid
        // pattern; the other terminal behaves like an arc end
        bool declared =
            c.selfint == SelfIntersectionEnd::Both ||
            (is_start && c.selfint == SelfIntersectionEnd::Start) ||
            (is_end && c.selfint == SelfIntersectionEnd::End);
        if (declared) {
            if (equal_terminals) {
                if (!tr.patterns.rigid_even) fail("(*****) fails at terminal " + at);
            } else {
                if (!tr.patterns.rigid_odd) fail("(****) fails at terminal " + at);
            }
        } else {
            if (!tr.patterns.terminal1) fail("(**) fails at terminal " + at);
        }
    }
    return rep;
}

inline ConditionReport require_consistent(const SurfaceAlgebra& sa, const CurveRecord& c) {
    ConditionReport rep = curve_conditions(sa, c);
    if (!rep.consistent) throw PreconditionError("InconsistentRecord: " + rep.first_violation);
    return rep;
}

// Audit of dimension-vector determinacy over all canonical strings up to a
// length bound:
//   (a) an exceptional string sharing an arc's dimension vector must be that
//       arc's string (violations are failures);
//   (b) distinct arc records have distinct vectors (failures);
//   (c) arc vectors colliding with non-exceptional strings (informational);
//   (d) equal vectors among exceptional non-arc strings (informational).
struct AuditReport {
    int strings_checked = 0;
    std::vector<std::pair<int, StringWord>> violations_a;  // (arc record index, string)
    std::vector<std::pair<int, int>> violations_b;         // arc record indices
    std::vector<std::pair<int, StringWord>> collisions_c;  // (arc record index, string)
    std::vector<std::pair<StringWord, StringWord>> collisions_d;

    bool ok() const { return violations_a.empty() && violations_b.empty(); }
};

inline AuditReport theorem2_audit(const SurfaceAlgebra& sa,
                                  const std::vector<CurveRecord>& dataset, int max_len) {
    for (const CurveRecord& c : dataset) {
        ConditionReport rep = curve_conditions(sa, c);
        if (!rep.consistent)
            throw PreconditionError("DatasetInvalid: " + rep.first_violation);
    }
    AuditReport audit;
    if (dataset.empty()) return audit;
    struct ArcEntry {
        int record = -1;
        StringWord word;
        std::vector<int> dims;
    };
    std::vector<ArcEntry> arcs;
    for (size_t i = 0; i < dataset.size(); ++i) {
        if (dataset[i].kind != CurveKind::Arc) continue;
        StringWord w = canonical(string_from_crossings(sa, dataset[i]));
        arcs.push_back({static_cast<int>(i), w, dimension_vector(sa.pres, w)});
    }
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j)
            if (arcs[i].dims == arcs[j].dims)
                audit.violations_b.emplace_back(arcs[i].record, arcs[j].record);

    std::set<StringWord> arc_words;
    for (const ArcEntry& e : arcs) arc_words.insert(e.word);

    std::vector<StringWord> all = enumerate_strings(sa.pres, max_len);
    audit.strings_checked = static_cast<int>(all.size());
    std::map<std::vector<int>, std::vector<size_t>> exceptional_nonarc_by_dims;
    for (const StringWord& u : all) {
        std::vector<int> du = dimension_vector(sa.pres, u);
        bool exc = is_exceptional(sa.pres, u);
        for (const ArcEntry& e : arcs) {
            if (du != e.dims) continue;
            if (exc) {
                if (!(canonical(u) == e.word)) audit.violations_a.emplace_back(e.record, u);
            } else {
                audit.collisions_c.emplace_back(e.record, u);
            }
        }
        if (exc && arc_words.find(canonical(u)) == arc_words.end()) {
            auto& bucket = exceptional_nonarc_by_dims[du];
            for (size_t other : bucket)
                audit.collisions_d.emplace_back(all[other], u);
            bucket.push_back(static_cast<size_t>(&u - all.data()));
        }
    }
    return audit;
}

}  // namespace gentle
