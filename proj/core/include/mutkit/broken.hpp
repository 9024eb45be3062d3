#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mutkit/index.hpp"

namespace mutkit {

enum class CombKind { strip, disc_with_point_constraint };
enum class ComponentShape { disc, sphere, strip };

/// One component of one level of a broken map's combinatorial type. The
/// index is either declared abstractly (IndexData) or given outright.
struct BrokenComponent {
    ComponentShape shape = ComponentShape::disc;
    std::vector<int> boundary_punctures;  // chord multiplicities
    std::vector<int> interior_punctures;  // orbit multiplicities
    bool nontrivial = false;  // geometric nontriviality or enough markings
    bool touches_critical_locus = false;
    std::optional<IndexData> index_data;
    std::optional<int> explicit_index;
    int aut = 0;
};

/// A puncture-node pairing across adjacent levels. Punctures are addressed
/// by (level, component, boundary-puncture slot).
struct Matching {
    int level_low = 0;
    int comp_low = 0;
    int punct_low = 0;
    int level_high = 0;
    int comp_high = 0;
    int punct_high = 0;
};

/// Levels are ordered inside-to-outside: levels[0] is the inner level,
/// levels.back() the outer one, anything between is a neck level.
struct CombType {
    CombKind kind = CombKind::strip;
    std::vector<std::vector<BrokenComponent>> levels;
    std::vector<Matching> matchings;
};

struct TypeReport {
    bool ok = false;
    std::vector<std::string> violations;
};

TypeReport validate_type(const CombType& t);

/// Sum of component indices minus (n-1) per puncture node minus total aut;
/// a point constraint subtracts a further n.
int type_virtual_dimension(const CombType& t, int n);

enum class VerdictStatus { Rigid, HighIndex, Excluded };

struct Verdict {
    VerdictStatus status = VerdictStatus::Excluded;
    std::string reason;
};

Verdict classify(const CombType& t, int n);

struct EnumerationBounds {
    int max_levels = 3;
    int max_components_per_level = 3;
    int max_chord_multiplicity = 3;
    int max_punctures_per_component = 3;
};

/// Exhaustive, deterministic generation of valid broken-strip types within
/// the bounds, each classified. Outer indices are swept so the virtual
/// dimension covers [-2, index_budget].
std::vector<std::pair<CombType, Verdict>> enumerate_types(const EnumerationBounds& bounds, int n,
                                                          int index_budget);

}  // namespace mutkit
