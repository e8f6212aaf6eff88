#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "gentle/oracle.hpp"
#include "gentle/surface.hpp"
#include "helpers.hpp"

using namespace gentle;

namespace {

// Random triangulation of a disk with n marked boundary points: vertices
// 0..n-1 in circular order, a random apex for every sub-polygon. Boundary
// edges are segments, chords are arcs; triangles list their sides in the
// circular order, so each chord shows up in exactly two triangle slots.
Triangulation random_disk(int n, unsigned seed) {
    std::mt19937 rng(seed);
    Triangulation t;
    for (int i = 0; i < n; ++i) t.bsegs.push_back("b" + std::to_string(i));
    std::map<std::pair<int, int>, Side> chords;
    auto side = [&](int a, int b) -> Side {
        if (b == a + 1) return Side{false, a};
        auto it = chords.find({a, b});
        if (it != chords.end()) return it->second;
        Side s{true, static_cast<int>(t.arcs.size())};
        t.arcs.push_back("d" + std::to_string(a) + "_" + std::to_string(b));
        chords[{a, b}] = s;
        return s;
    };
    std::function<void(int, int, Side)> rec = [&](int lo, int hi, Side base) {
        std::uniform_int_distribution<int> pick(lo + 1, hi - 1);
        int k = pick(rng);
        Side left = side(lo, k), right = side(k, hi);
        t.triangles.push_back({left, right, base});
        if (k - lo >= 2) rec(lo, k, left);
        if (hi - k >= 2) rec(k, hi, right);
    };
    rec(0, n - 1, Side{false, n - 1});  // base: the wrap edge n-1 -> 0
    return t;
}

}  // namespace

namespace {

SurfaceAlgebra load_ann() {
    return algebra_from_triangulation(load_triangulation(fixture_path("ANN.tri")));
}

std::vector<CurveRecord> load_ann_dataset(const SurfaceAlgebra& sa) {
    return load_dataset(sa.tri, fixture_path("ANN.curves"));
}

// Arrow-renaming isomorphism over identical vertex sets: match arrows by
// endpoints and require the relation sets to correspond.
bool same_presentation_up_to_arrow_names(const Presentation& a, const Presentation& b) {
    if (a.n_vertices() != b.n_vertices() || a.n_arrows() != b.n_arrows()) return false;
    for (int v = 0; v < a.n_vertices(); ++v)
        if (a.vertex_name(v) != b.vertex_name(v)) return false;
    std::vector<int> perm(static_cast<size_t>(a.n_arrows()));
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (int x = 0; x < a.n_arrows() && ok; ++x) {
            int y = perm[static_cast<size_t>(x)];
            ok = a.arrow(x).src == b.arrow(y).src && a.arrow(x).tgt == b.arrow(y).tgt;
        }
        if (!ok) continue;
        for (int x = 0; x < a.n_arrows() && ok; ++x)
            for (int y = 0; y < a.n_arrows() && ok; ++y)
                if (a.is_relation_pair(x, y) !=
                    b.is_relation_pair(perm[static_cast<size_t>(x)], perm[static_cast<size_t>(y)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("algebra from triangulation") {
    SECTION("the annulus fixture reproduces the ANN presentation") {
        SurfaceAlgebra sa = load_ann();
        REQUIRE(sa.pres.gentle());
        REQUIRE(sa.pres.finite_dimensional());
        REQUIRE(sa.pres.n_vertices() == 3);
        REQUIRE(sa.pres.n_arrows() == 4);
        REQUIRE(sa.pres.relations().size() == 3);
        Presentation ann = load_fixture("ANN.alg");
        REQUIRE(same_presentation_up_to_arrow_names(sa.pres, ann));
    }
    SECTION("disk quadrilateral with one diagonal: one vertex, no arrows") {
        Triangulation t;
        t.arcs = {"d"};
        t.bsegs = {"b1", "b2", "b3", "b4"};
        t.triangles = {{Side{true, 0}, Side{false, 0}, Side{false, 1}},
                       {Side{true, 0}, Side{false, 2}, Side{false, 3}}};
        SurfaceAlgebra sa = algebra_from_triangulation(t);
        REQUIRE(sa.pres.n_vertices() == 1);
        REQUIRE(sa.pres.n_arrows() == 0);
    }
    SECTION("side-count invariants are enforced") {
        Triangulation t;
        t.arcs = {"d"};
        t.bsegs = {"b1", "b2"};
        t.triangles = {{Side{true, 0}, Side{false, 0}, Side{false, 1}}};
        REQUIRE_THROWS_AS(algebra_from_triangulation(t), PreconditionError);
    }
    SECTION("random disk triangulations always yield gentle algebras") {
        for (int n = 4; n <= 10; ++n)
            for (unsigned seed : {1u, 7u, 23u}) {
                Triangulation t = random_disk(n, seed);
                SurfaceAlgebra sa = algebra_from_triangulation(t);
                REQUIRE(sa.pres.gentle());
                REQUIRE(sa.pres.finite_dimensional());
                REQUIRE(sa.pres.n_vertices() == n - 3);  // chords of an n-gon
            }
    }
}

TEST_CASE("strings from crossing sequences") {
    SurfaceAlgebra sa = load_ann();
    Presentation ann = load_fixture("ANN.alg");
    SECTION("the rigid curve word") {
        auto dataset = load_ann_dataset(sa);
        const CurveRecord& rigid = dataset.back();
        REQUIRE(rigid.kind == CurveKind::RigidCurve);
        StringWord w = string_from_crossings(sa, rigid);
        // translate into the ANN fixture's arrow names: be- th
        REQUIRE(w.length() == 2);
        REQUIRE(w.letters()[0].inverted);
        REQUIRE_FALSE(w.letters()[1].inverted);
        REQUIRE(dimension_vector(sa.pres, w) == std::vector<int>{1, 2, 0});
        REQUIRE(is_exceptional(sa.pres, w));
    }
    SECTION("single crossing gives a trivial string") {
        CurveRecord c;
        c.kind = CurveKind::Arc;
        c.crossings = {{*sa.tri.arc_index("t3"), std::nullopt}};
        c.start_triangle = 2;
        c.end_triangle = 0;
        StringWord w = string_from_crossings(sa, c);
        REQUIRE(w.is_trivial());
        REQUIRE(sa.tri.arcs[static_cast<size_t>(w.trivial_vertex())] == "t3");
    }
    SECTION("orientation against the stored arrow inverts the letter") {
        CurveRecord c;
        c.kind = CurveKind::Arc;
        c.crossings = {{*sa.tri.arc_index("t1"), 0}, {*sa.tri.arc_index("t3"), std::nullopt}};
        c.start_triangle = 1;
        c.end_triangle = 2;
        StringWord w = string_from_crossings(sa, c);
        REQUIRE(w.length() == 1);
        REQUIRE(w.letters()[0].inverted);  // the arrow runs t3 -> t1
    }
    SECTION("arcs not adjacent in the named triangle are rejected") {
        CurveRecord c;
        c.kind = CurveKind::Arc;
        c.crossings = {{*sa.tri.arc_index("t1"), 2}, {*sa.tri.arc_index("t3"), std::nullopt}};
        c.start_triangle = 0;
        c.end_triangle = 2;
        REQUIRE_THROWS_AS(string_from_crossings(sa, c), PreconditionError);
    }
    SECTION("dimension vectors agree with the oracle") {
        for (const StringWord& w : enumerate_strings(sa.pres, 6))
            REQUIRE(dimension_vector(sa.pres, w) == string_to_rep(sa.pres, w).dims);
    }
}

TEST_CASE("curve conditions") {
    SurfaceAlgebra sa = load_ann();
    auto dataset = load_ann_dataset(sa);
    SECTION("every curated record is consistent") {
        for (const CurveRecord& c : dataset) {
            ConditionReport rep = curve_conditions(sa, c);
            INFO(rep.first_violation);
            REQUIRE(rep.consistent);
        }
    }
    SECTION("single crossing of t3 satisfies the odd terminal pattern") {
        ConditionReport rep = curve_conditions(sa, dataset[0]);
        REQUIRE(rep.consistent);
        REQUIRE(rep.triangles[0].patterns.terminal1);  // internal triangle
        REQUIRE(rep.triangles[2].patterns.terminal1);  // outer triangle
    }
    SECTION("the rigid record satisfies the odd rigid pattern at its declared end") {
        ConditionReport rep = curve_conditions(sa, dataset.back());
        REQUIRE(rep.consistent);
        REQUIRE(rep.triangles[0].patterns.rigid_odd);  // end triangle 0
    }
    SECTION("parity is conserved per pattern") {
        for (const CurveRecord& c : dataset) {
            ConditionReport rep = curve_conditions(sa, c);
            for (const TriangleReport& tr : rep.triangles) {
                long long total = tr.values[0] + tr.values[1] + tr.values[2];
                if (tr.patterns.star || tr.patterns.terminal2 || tr.patterns.rigid_even)
                    REQUIRE(total % 2 == 0);
                if (tr.patterns.terminal1 || tr.patterns.rigid_odd) REQUIRE(total % 2 == 1);
            }
        }
    }
    SECTION("a mismatched terminal declaration is inconsistent") {
        CurveRecord bad;
        bad.kind = CurveKind::Arc;
        bad.crossings = {{*sa.tri.arc_index("t2"), 0}, {*sa.tri.arc_index("t1"), std::nullopt}};
        bad.start_triangle = 0;
        bad.end_triangle = 0;  // equal terminals need first arc == last arc
        ConditionReport rep = curve_conditions(sa, bad);
        REQUIRE_FALSE(rep.consistent);
        REQUIRE_THROWS_AS(require_consistent(sa, bad), PreconditionError);
    }
}

TEST_CASE("dimension-vector audit") {
    SurfaceAlgebra sa = load_ann();
    auto dataset = load_ann_dataset(sa);
    SECTION("arc strings are exceptional") {
        for (const CurveRecord& c : dataset)
            REQUIRE(is_exceptional(sa.pres, string_from_crossings(sa, c)));
    }
    SECTION("curated dataset passes at length 8") {
        AuditReport audit = theorem2_audit(sa, dataset, 8);
        REQUIRE(audit.ok());
        REQUIRE(audit.violations_a.empty());
        REQUIRE(audit.violations_b.empty());
        // two non-isomorphic exceptional non-arc modules share a vector
        REQUIRE_FALSE(audit.collisions_d.empty());
    }
    SECTION("two arcs with equal vectors are flagged") {
        std::vector<CurveRecord> twice = {dataset[1], dataset[1]};
        AuditReport audit = theorem2_audit(sa, twice, 4);
        REQUIRE_FALSE(audit.violations_b.empty());
    }
    SECTION("empty dataset audits trivially") {
        AuditReport audit = theorem2_audit(sa, {}, 4);
        REQUIRE(audit.ok());
        REQUIRE(audit.collisions_c.empty());
        REQUIRE(audit.collisions_d.empty());
    }
}
