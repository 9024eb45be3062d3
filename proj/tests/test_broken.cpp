#include <doctest.h>

#include "mutkit/broken.hpp"
#include "mutkit/errors.hpp"
#include "mutkit/json_io.hpp"

using namespace mutkit;

namespace {

BrokenComponent inner_disc(int n, std::vector<int> mults, bool touches = false) {
    BrokenComponent c;
    c.shape = ComponentShape::disc;
    c.boundary_punctures = std::move(mults);
    c.nontrivial = true;
    c.touches_critical_locus = touches;
    int total = 0;
    for (int m : c.boundary_punctures) total += m;
    IndexData d;
    d.n = n;
    d.maslov = 2 * total;
    d.weighted_infinity = total;
    if (touches) d.critical_touches = {{1, 1}};
    c.index_data = d;
    return c;
}

BrokenComponent outer_strip(int index, std::vector<int> mults) {
    BrokenComponent c;
    c.shape = ComponentShape::strip;
    c.boundary_punctures = std::move(mults);
    c.nontrivial = true;
    c.explicit_index = index;
    c.aut = 1;
    return c;
}

// minimal legal strip type: one inner single-puncture disc glued to the
// outer strip, outer index chosen so vir = target
CombType minimal_type(int n, int vir_target) {
    CombType t;
    t.kind = CombKind::strip;
    t.levels.push_back({inner_disc(n, {1})});
    // vir = (n+1) + outer - (n-1) - 1 => outer = vir_target - 1 + (n-1) - n
    t.levels.push_back({outer_strip(vir_target + (n - 1) + 1 - (n + 1), {1})});
    t.matchings.push_back({0, 0, 0, 1, 0, 0});
    return t;
}

}  // namespace

TEST_CASE("type validation") {
    const int n = 2;
    CHECK(validate_type(minimal_type(n, 0)).ok);

    SUBCASE("asymptote mismatch") {
        CombType t = minimal_type(n, 0);
        t.levels[0][0].boundary_punctures = {2};
        const auto rep = validate_type(t);
        CHECK(!rep.ok);
        bool found = false;
        for (const auto& v : rep.violations) found |= (v == "asymptote mismatch");
        CHECK(found);
    }
    SUBCASE("unstable neck") {
        CombType t = minimal_type(n, 0);
        BrokenComponent trivial;
        trivial.shape = ComponentShape::strip;
        trivial.boundary_punctures = {1, 1};
        trivial.nontrivial = false;
        trivial.explicit_index = n - 1;
        t.levels.insert(t.levels.begin() + 1, {trivial});
        t.matchings = {{0, 0, 0, 1, 0, 0}, {1, 0, 1, 2, 0, 0}};
        const auto rep = validate_type(t);
        CHECK(!rep.ok);
        bool found = false;
        for (const auto& v : rep.violations) found |= (v == "unstable neck level");
        CHECK(found);
    }
    SUBCASE("outer strip count") {
        CombType t = minimal_type(n, 0);
        t.levels[1][0].shape = ComponentShape::disc;
        CHECK(!validate_type(t).ok);
    }
    SUBCASE("non-adjacent matching") {
        CombType t = minimal_type(n, 0);
        t.matchings[0].level_high = 0;
        CHECK(!validate_type(t).ok);
    }
}

TEST_CASE("virtual dimension arithmetic") {
    const int n = 2;
    // hand computation: inner index n+1 = 3, outer 0, one node, aut 1
    CombType t = minimal_type(n, 0);
    t.levels[1][0].explicit_index = 0;
    CHECK(type_virtual_dimension(t, n) == 3 + 0 - 1 * (n - 1) - 1);

    // single level, no matchings
    CombType single;
    single.kind = CombKind::disc_with_point_constraint;
    single.levels.push_back({inner_disc(n, {1})});
    CHECK(type_virtual_dimension(single, n) == (n + 1) - n);  // index - point constraint

    // adding a puncture node with fixed indices lowers vir by n-1
    for (int nn = 2; nn <= 4; ++nn) {
        CombType a = minimal_type(nn, 1);
        const int before = type_virtual_dimension(a, nn);
        a.matchings.push_back({0, 0, 0, 1, 0, 0});
        CHECK(type_virtual_dimension(a, nn) == before - (nn - 1));
    }

    CombType missing = minimal_type(n, 0);
    missing.levels[0][0].index_data.reset();
    CHECK_THROWS_AS(type_virtual_dimension(missing, n), StructuralError);
}

TEST_CASE("classification rules") {
    const int n = 2;

    SUBCASE("rigid minimal type") {
        const auto v = classify(minimal_type(n, 0), n);
        CHECK(v.status == VerdictStatus::Rigid);
    }
    SUBCASE("high index") {
        CHECK(classify(minimal_type(n, 1), n).status == VerdictStatus::HighIndex);
    }
    SUBCASE("negative dimension") {
        const auto v = classify(minimal_type(n, -1), n);
        CHECK(v.status == VerdictStatus::Excluded);
        CHECK(v.reason == "negative virtual dimension");
    }
    SUBCASE("three levels at rigid dimension") {
        CombType t = minimal_type(n, 0);
        BrokenComponent neck;
        neck.shape = ComponentShape::strip;
        neck.boundary_punctures = {1, 1};
        neck.nontrivial = true;
        neck.explicit_index = n - 1;
        t.levels.insert(t.levels.begin() + 1, {neck});
        t.matchings = {{0, 0, 0, 1, 0, 0}, {1, 0, 1, 2, 0, 0}};
        // vir unchanged: the connector contributes n-1 and costs one node
        CHECK(type_virtual_dimension(t, n) == 0);
        const auto v = classify(t, n);
        CHECK(v.status == VerdictStatus::Excluded);
        CHECK(v.reason == "translation deformation");
    }
    SUBCASE("critical contact") {
        CombType t = minimal_type(n, 0);
        t.levels[0][0] = inner_disc(n, {1}, true);
        const auto v = classify(t, n);
        CHECK(v.status == VerdictStatus::Excluded);
        CHECK(v.reason == "critical locus");
    }
    SUBCASE("two inner punctures") {
        CombType t;
        t.kind = CombKind::strip;
        t.levels.push_back({inner_disc(n, {1, 1})});
        // inner index n+2; vir = (n+2) + outer - 2(n-1) - 1 = 0
        t.levels.push_back({outer_strip(2 * (n - 1) + 1 - (n + 2), {1, 1})});
        t.matchings = {{0, 0, 0, 1, 0, 0}, {0, 0, 1, 1, 0, 1}};
        CHECK(validate_type(t).ok);
        CHECK(type_virtual_dimension(t, n) == 0);
        const auto v = classify(t, n);
        CHECK(v.status == VerdictStatus::Excluded);
        CHECK(v.reason == "non-elementary inner");
    }
    SUBCASE("multiplicity-2 chord") {
        CombType t;
        t.kind = CombKind::strip;
        t.levels.push_back({inner_disc(n, {2})});
        t.levels.push_back({outer_strip((n - 1) + 1 - (n + 2), {2})});
        t.matchings = {{0, 0, 0, 1, 0, 0}};
        CHECK(type_virtual_dimension(t, n) == 0);
        const auto v = classify(t, n);
        CHECK(v.status == VerdictStatus::Excluded);
        CHECK(v.reason == "non-elementary inner");
    }
}

TEST_CASE("classification is stable under component relabeling") {
    const int n = 2;
    CombType t;
    t.kind = CombKind::strip;
    t.levels.push_back({inner_disc(n, {1}), inner_disc(n, {2})});
    t.levels.push_back({outer_strip(-6, {1, 2})});
    t.matchings = {{0, 0, 0, 1, 0, 0}, {0, 1, 0, 1, 0, 1}};
    CHECK(validate_type(t).ok);

    CombType swapped = t;
    std::swap(swapped.levels[0][0], swapped.levels[0][1]);
    swapped.matchings = {{0, 1, 0, 1, 0, 0}, {0, 0, 0, 1, 0, 1}};
    CHECK(validate_type(swapped).ok);
    CHECK(classify(t, n).status == classify(swapped, n).status);
    CHECK(classify(t, n).reason == classify(swapped, n).reason);
}

TEST_CASE("enumeration") {
    SUBCASE("minimal bounds") {
        const auto table = enumerate_types({2, 1, 1, 1}, 2, 1);
        CHECK(!table.empty());
        int rigid = 0;
        for (const auto& [t, v] : table) {
            CHECK(t.levels.size() == 2);
            if (v.status == VerdictStatus::Rigid) {
                ++rigid;
                CHECK(type_virtual_dimension(t, 2) == 0);
            }
        }
        CHECK(rigid == 1);
    }
    SUBCASE("rigid types have two levels and elementary inners") {
        for (int n : {2, 3}) {
            const auto table = enumerate_types({3, 2, 2, 2}, n, 2);
            for (const auto& [t, v] : table) {
                if (v.status != VerdictStatus::Rigid) continue;
                CHECK(t.levels.size() == 2);
                for (const auto& c : t.levels.front()) {
                    CHECK(c.boundary_punctures.size() == 1);
                    CHECK(c.boundary_punctures.front() == 1);
                }
            }
        }
    }
    SUBCASE("determinism") {
        const auto a = enumerate_types({3, 2, 2, 2}, 2, 1);
        const auto b = enumerate_types({3, 2, 2, 2}, 2, 1);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(to_json(a[i].first).dump() == to_json(b[i].first).dump());
            CHECK(to_json(a[i].second).dump() == to_json(b[i].second).dump());
        }
    }
}
