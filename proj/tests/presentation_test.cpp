#include <catch2/catch_amalgamated.hpp>

#include "gentle/presentation.hpp"
#include "helpers.hpp"

using namespace gentle;

TEST_CASE("fixture validation") {
    SECTION("A2 is gentle with no violations") {
        Presentation p = load_fixture("A2.alg");
        REQUIRE(p.gentle());
        REQUIRE(p.finite_dimensional());
        REQUIRE(p.report().violations.empty());
        REQUIRE(p.status() == AlgebraStatus::Gentle);
    }
    SECTION("GA1 is gentle and finite dimensional") {
        Presentation p = load_fixture("GA1.alg");
        REQUIRE(p.gentle());
        REQUIRE(p.finite_dimensional());
        REQUIRE(p.report().violations.empty());
    }
    SECTION("SA1 is a string algebra but fails G3") {
        Presentation p = load_fixture("SA1.alg");
        REQUIRE_FALSE(p.gentle());
        REQUIRE(p.string_algebra());
        REQUIRE(p.finite_dimensional());
        REQUIRE(p.status() == AlgebraStatus::StringOnly);
        bool g3 = false;
        for (const auto& v : p.report().violations) g3 |= v.rule == "G3";
        REQUIRE(g3);
    }
    SECTION("ANN is gentle") {
        Presentation p = load_fixture("ANN.alg");
        REQUIRE(p.gentle());
        REQUIRE(p.finite_dimensional());
    }
}

TEST_CASE("validation catches degree and relation bounds") {
    SECTION("three arrows out of one vertex break G1") {
        Quiver q;
        q.vertices = {"0", "1", "2", "3"};
        q.arrows = {{"x", 0, 1}, {"y", 0, 2}, {"z", 0, 3}};
        Presentation p = Presentation::make(q, {});
        REQUIRE_FALSE(p.gentle());
        bool g1 = false;
        for (const auto& v : p.report().violations) g1 |= v.rule == "G1";
        REQUIRE(g1);
    }
    SECTION("two allowed successors break G2") {
        Quiver q;
        q.vertices = {"0", "1", "2", "3"};
        q.arrows = {{"x", 0, 1}, {"y", 1, 2}, {"z", 1, 3}};
        Presentation p = Presentation::make(q, {});
        REQUIRE_FALSE(p.gentle());
        REQUIRE_FALSE(p.string_algebra());
    }
    SECTION("loop without relation is infinite dimensional") {
        Quiver q;
        q.vertices = {"0"};
        q.arrows = {{"l", 0, 0}};
        Presentation p = Presentation::make(q, {});
        REQUIRE_FALSE(p.finite_dimensional());
        bool fd = false;
        for (const auto& v : p.report().violations) fd |= v.rule == "FinDim";
        REQUIRE(fd);
        REQUIRE_THROWS_AS(path_basis(p), PreconditionError);
    }
    SECTION("validate is idempotent") {
        Presentation p = load_fixture("GA1.alg");
        ValidationReport r1 = validate(p);
        ValidationReport r2 = validate(p);
        REQUIRE(r1.gentle == r2.gentle);
        REQUIRE(r1.violations.size() == r2.violations.size());
    }
}

TEST_CASE("path basis") {
    SECTION("A2") {
        Presentation p = load_fixture("A2.alg");
        auto basis = path_basis(p);
        REQUIRE(basis.size() == 3);  // e_1, e_2, a
    }
    SECTION("GA1: trivials, arrows, be.al, al.ep, be.al.ep") {
        Presentation p = load_fixture("GA1.alg");
        auto basis = path_basis(p);
        REQUIRE(basis.size() == 11);
        int longest = 0;
        for (const auto& path : basis) longest = std::max(longest, (int)path.arrows.size());
        REQUIRE(longest == 3);
    }
    SECTION("ANN: exhaustive walk respecting the cycle relations") {
        Presentation p = load_fixture("ANN.alg");
        auto basis = path_basis(p);
        // 3 trivial + 4 arrows + {al.th, th.ze} + {al.th.ze}
        REQUIRE(basis.size() == 10);
    }
    SECTION("SA1 basis respects the length-3 generator") {
        Presentation p = load_fixture("SA1.alg");
        auto basis = path_basis(p);
        // trivials + a,b,t + ab, bt; abt is forbidden
        REQUIRE(basis.size() == 9);
    }
}

TEST_CASE("projective and injective strings") {
    SECTION("A2") {
        Presentation p = load_fixture("A2.alg");
        REQUIRE(format_string(p, projective_string(p, 0)) == "a");
        REQUIRE(projective_string(p, 1).is_trivial());
        REQUIRE(format_string(p, injective_string(p, 1)) == "a");
        REQUIRE(injective_string(p, 0).is_trivial());
    }
    SECTION("GA1: P_1 is the full direct path") {
        Presentation p = load_fixture("GA1.alg");
        REQUIRE(format_string(p, projective_string(p, 0)) == "be al ep");
        // P_2 = M(ep- al- ep) up to inversion
        StringWord p2 = projective_string(p, 1);
        REQUIRE(canonical(p2) == canonical(lit(p, "ep- al- ep")));
        // I_2 is the loop string from the worked example
        REQUIRE(canonical(injective_string(p, 1)) == canonical(lit(p, "be al- be-")));
        REQUIRE(canonical(injective_string(p, 2)) == canonical(lit(p, "be al ep")));
        REQUIRE(format_string(p, injective_string(p, 3)) == "th");
    }
    SECTION("A3 projectivity and injectivity predicates") {
        Presentation p = load_fixture("A3.alg");
        REQUIRE(is_projective(p, lit(p, "a b")));
        REQUIRE(is_injective(p, lit(p, "a b")));
        REQUIRE(is_projective(p, lit(p, "b")));
        REQUIRE_FALSE(is_injective(p, lit(p, "b")));
        REQUIRE(is_injective(p, lit(p, "1_1")));
        REQUIRE_FALSE(is_projective(p, lit(p, "1_1")));
    }
    SECTION("unknown vertex is rejected") {
        Presentation p = load_fixture("A2.alg");
        REQUIRE_THROWS_AS(projective_string(p, 7), PreconditionError);
    }
}
