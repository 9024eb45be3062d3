#include "mutkit/broken.hpp"

#include <algorithm>
#include <numeric>

#include "mutkit/errors.hpp"

namespace mutkit {

namespace {

int component_index(const BrokenComponent& c) {
    if (c.explicit_index) return *c.explicit_index;
    if (c.index_data) return disc_index(*c.index_data);
    throw StructuralError("component carries no index data");
}

int puncture_multiplicity(const CombType& t, int level, int comp, int punct) {
    const auto& lv = t.levels.at(std::size_t(level));
    const auto& bp = lv.at(std::size_t(comp)).boundary_punctures;
    return bp.at(std::size_t(punct));
}

bool in_range(const CombType& t, int level, int comp, int punct) {
    if (level < 0 || std::size_t(level) >= t.levels.size()) return false;
    const auto& lv = t.levels[std::size_t(level)];
    if (comp < 0 || std::size_t(comp) >= lv.size()) return false;
    const auto& bp = lv[std::size_t(comp)].boundary_punctures;
    return punct >= 0 && std::size_t(punct) < bp.size();
}

/// All partitions of indices {0..k-1} into nonempty unordered groups, at
/// most max_groups of them; deterministic order.
std::vector<std::vector<std::vector<int>>> set_partitions(int k, int max_groups) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> current;
    auto rec = [&](auto&& self, int next) -> void {
        if (next == k) {
            out.push_back(current);
            return;
        }
        for (auto& group : current) {
            group.push_back(next);
            self(self, next + 1);
            group.pop_back();
        }
        if (int(current.size()) < max_groups) {
            current.push_back({next});
            self(self, next + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Sorted multiplicity lists of the given size with entries in [1, max_mult].
std::vector<std::vector<int>> multiplicity_lists(int size, int max_mult) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(std::size_t(size), 1);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == size) {
            out.push_back(cur);
            return;
        }
        for (int m = lo; m <= max_mult; ++m) {
            cur[std::size_t(pos)] = m;
            self(self, pos + 1, m);
        }
    };
    rec(rec, 0, 1);
    return out;
}

IndexData inner_disc_data(int n, const std::vector<int>& multiplicities, bool touches) {
    int total = 0;
    for (int m : multiplicities) total += m;
    IndexData d;
    d.n = n;
    d.maslov = 2 * total;
    d.weighted_infinity = total;
    if (touches) d.critical_touches = {{1, 1}};
    return d;  // disc_index = n + total
}

}  // namespace

TypeReport validate_type(const CombType& t) {
    TypeReport rep;
    if (t.levels.empty()) {
        rep.violations.push_back("no levels");
        return rep;
    }
    for (const auto& lv : t.levels)
        if (lv.empty()) rep.violations.push_back("empty level");

    for (const auto& m : t.matchings) {
        if (m.level_high != m.level_low + 1) {
            rep.violations.push_back("matching spans non-adjacent levels");
            continue;
        }
        if (!in_range(t, m.level_low, m.comp_low, m.punct_low) ||
            !in_range(t, m.level_high, m.comp_high, m.punct_high)) {
            rep.violations.push_back("matching references missing puncture");
            continue;
        }
        if (puncture_multiplicity(t, m.level_low, m.comp_low, m.punct_low) !=
            puncture_multiplicity(t, m.level_high, m.comp_high, m.punct_high))
            rep.violations.push_back("asymptote mismatch");
    }

    if (t.kind == CombKind::strip && !t.levels.empty()) {
        int outer_strips = 0;
        for (const auto& c : t.levels.back())
            if (c.shape == ComponentShape::strip) ++outer_strips;
        if (outer_strips != 1)
            rep.violations.push_back("strip type needs exactly one outer strip component");
    }

    // neck levels must be stable: some nontrivial component (or markings,
    // folded into the same flag)
    for (std::size_t l = 1; l + 1 < t.levels.size(); ++l) {
        const bool stable = std::any_of(t.levels[l].begin(), t.levels[l].end(),
                                        [](const BrokenComponent& c) { return c.nontrivial; });
        if (!stable) rep.violations.push_back("unstable neck level");
    }

    rep.ok = rep.violations.empty();
    return rep;
}

int type_virtual_dimension(const CombType& t, int n) {
    int total = 0, aut = 0;
    for (const auto& lv : t.levels)
        for (const auto& c : lv) {
            total += component_index(c);
            aut += c.aut;
        }
    int vir = total - int(t.matchings.size()) * (n - 1) - aut;
    if (t.kind == CombKind::disc_with_point_constraint) vir -= n;
    return vir;
}

Verdict classify(const CombType& t, int n) {
    const auto rep = validate_type(t);
    if (!rep.ok) throw StructuralError("classify requires a valid type: " + rep.violations.front());

    const int vir = type_virtual_dimension(t, n);
    if (vir > 0) return {VerdictStatus::HighIndex, "positive virtual dimension"};
    if (vir < 0) return {VerdictStatus::Excluded, "negative virtual dimension"};

    if (t.levels.size() > 2) {
        for (std::size_t l = 1; l + 1 < t.levels.size(); ++l)
            for (const auto& c : t.levels[l])
                if (c.nontrivial)
                    return {VerdictStatus::Excluded, "translation deformation"};
    }
    for (const auto& c : t.levels.front()) {
        if (c.touches_critical_locus) return {VerdictStatus::Excluded, "critical locus"};
        if (c.shape == ComponentShape::disc) {
            if (c.boundary_punctures.size() != 1)
                return {VerdictStatus::Excluded, "non-elementary inner"};
            if (c.boundary_punctures.front() != 1)
                return {VerdictStatus::Excluded, "non-elementary inner"};
        }
    }
    return {VerdictStatus::Rigid, ""};
}

std::vector<std::pair<CombType, Verdict>> enumerate_types(const EnumerationBounds& bounds, int n,
                                                          int index_budget) {
    if (bounds.max_levels < 2 || bounds.max_components_per_level < 1 ||
        bounds.max_chord_multiplicity < 1 || bounds.max_punctures_per_component < 1)
        throw DomainError("enumeration bounds out of range");

    std::vector<std::pair<CombType, Verdict>> out;
    constexpr std::size_t kGuard = 1'000'000;

    for (int levels = 2; levels <= bounds.max_levels; ++levels) {
        // one interface of matched chords between each pair of adjacent
        // levels; neck levels connect equal interfaces one-to-one
        for (int isize = 1; isize <= bounds.max_punctures_per_component; ++isize) {
            for (const auto& mults : multiplicity_lists(isize, bounds.max_chord_multiplicity)) {
                for (const auto& partition :
                     set_partitions(isize, bounds.max_components_per_level)) {
                    for (int touch = 0; touch < 2; ++touch) {
                        for (int vir_target = -2; vir_target <= index_budget; ++vir_target) {
                            CombType t;
                            t.kind = CombKind::strip;
                            t.levels.resize(std::size_t(levels));

                            int inner_total = 0;
                            for (const auto& group : partition) {
                                BrokenComponent c;
                                c.shape = ComponentShape::disc;
                                for (int pos : group)
                                    c.boundary_punctures.push_back(mults[std::size_t(pos)]);
                                c.nontrivial = true;
                                c.touches_critical_locus =
                                    (touch == 1 && &group == &partition.front());
                                c.index_data =
                                    inner_disc_data(n, c.boundary_punctures,
                                                    c.touches_critical_locus);
                                t.levels[0].push_back(std::move(c));
                                inner_total += disc_index(*t.levels[0].back().index_data);
                            }

                            // neck levels: one connector strip per chord,
                            // index n-1 each, which exactly offsets the
                            // extra matching cost
                            for (int l = 1; l + 1 < levels; ++l)
                                for (int p = 0; p < isize; ++p) {
                                    BrokenComponent c;
                                    c.shape = ComponentShape::strip;
                                    c.boundary_punctures = {mults[std::size_t(p)],
                                                            mults[std::size_t(p)]};
                                    c.nontrivial = (p == 0);
                                    c.explicit_index = n - 1;
                                    t.levels[std::size_t(l)].push_back(std::move(c));
                                }

                            const int punctures = isize * (levels - 1);
                            BrokenComponent outer;
                            outer.shape = ComponentShape::strip;
                            outer.boundary_punctures = mults;
                            outer.nontrivial = true;
                            outer.aut = 1;
                            outer.explicit_index = vir_target + punctures * (n - 1) + 1 -
                                                   inner_total -
                                                   (levels - 2) * isize * (n - 1);
                            t.levels[std::size_t(levels - 1)].push_back(std::move(outer));

                            // matchings: inner punctures up through the
                            // connectors to the outer strip
                            for (int ci = 0; ci < int(partition.size()); ++ci)
                                for (int p = 0; p < int(partition[std::size_t(ci)].size()); ++p) {
                                    const int chord = partition[std::size_t(ci)][std::size_t(p)];
                                    Matching m;
                                    m.level_low = 0;
                                    m.comp_low = ci;
                                    m.punct_low = p;
                                    m.level_high = 1;
                                    m.comp_high = (levels == 2) ? 0 : chord;
                                    m.punct_high = (levels == 2) ? chord : 0;
                                    t.matchings.push_back(m);
                                }
                            for (int l = 1; l + 1 < levels; ++l)
                                for (int p = 0; p < isize; ++p) {
                                    Matching m;
                                    m.level_low = l;
                                    m.comp_low = p;
                                    m.punct_low = 1;
                                    m.level_high = l + 1;
                                    m.comp_high = (l + 1 == levels - 1) ? 0 : p;
                                    m.punct_high = (l + 1 == levels - 1) ? p : 0;
                                    t.matchings.push_back(m);
                                }

                            if (!validate_type(t).ok)
                                throw InconsistencyError("enumerated an invalid type");
                            Verdict v = classify(t, n);
                            out.emplace_back(std::move(t), std::move(v));
                            if (out.size() > kGuard)
                                throw ResourceError("type enumeration exceeded guard");
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace mutkit
