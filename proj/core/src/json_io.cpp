#include "mutkit/json_io.hpp"

#include "mutkit/errors.hpp"

namespace mutkit {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_pair(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw StructuralError("complex value must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::size_t index_from_json(const Json& j, const std::vector<std::string>& variables) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        for (std::size_t i = 0; i < variables.size(); ++i)
            if (variables[i] == name) return i;
        throw StructuralError("rule references unknown variable '" + name + "'");
    }
    return j.get<std::size_t>();
}

std::vector<std::size_t> indices_from_json(const Json& j,
                                           const std::vector<std::string>& variables) {
    std::vector<std::size_t> out;
    for (const auto& v : j) out.push_back(index_from_json(v, variables));
    return out;
}

}  // namespace

Json to_json(const GaussianRational& v) {
    return Json{{"re", rational_to_string(v.re)}, {"im", rational_to_string(v.im)}};
}

GaussianRational gaussian_from_json(const Json& j) {
    GaussianRational v;
    if (j.is_string()) return GaussianRational(rational_from_string(j.get<std::string>()));
    if (j.contains("re")) v.re = rational_from_string(j.at("re").get<std::string>());
    if (j.contains("im")) v.im = rational_from_string(j.at("im").get<std::string>());
    return v;
}

Json to_json(const LaurentPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [exps, coeff] : p.terms())
        terms.push_back(Json{{"exponents", exps}, {"coeff", to_json(coeff)}});
    return Json{{"variables", p.variables()}, {"terms", terms}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
    LaurentPolynomial p(j.at("variables").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        const auto exps = t.at("exponents").get<ExponentVector>();
        if (exps.size() != p.variables().size())
            throw StructuralError("term exponent count does not match variable count");
        p.add_term(exps, gaussian_from_json(t.at("coeff")));
    }
    return p;
}

Json to_json(const RationalFunction& f) {
    return Json{{"numerator", to_json(f.numerator())},
                {"denominator", to_json(f.denominator())},
                {"is_laurent", f.is_laurent()}};
}

Json to_json(const MutationRule& r) {
    return Json{{"n", r.n},
                {"mutated", r.mutated_index},
                {"fiber", r.fiber_indices},
                {"passive", r.passive_indices}};
}

MutationRule rule_from_json(const Json& j, const std::vector<std::string>& variables) {
    MutationRule r;
    r.n = j.at("n").get<int>();
    r.mutated_index = index_from_json(j.at("mutated"), variables);
    r.fiber_indices = indices_from_json(j.at("fiber"), variables);
    if (j.contains("passive")) r.passive_indices = indices_from_json(j.at("passive"), variables);
    return r;
}

Json to_json(const PlanarPath& p) {
    Json segs = Json::array();
    for (const auto& s : p.segments()) {
        std::visit(
            [&](const auto& seg) {
                using T = std::decay_t<decltype(seg)>;
                if constexpr (std::is_same_v<T, LineSegment>) {
                    segs.push_back(Json{{"type", "line"},
                                        {"from", complex_to_json(seg.from)},
                                        {"to", complex_to_json(seg.to)}});
                } else if constexpr (std::is_same_v<T, ArcSegment>) {
                    segs.push_back(Json{{"type", "arc"},
                                        {"center", complex_to_json(seg.center)},
                                        {"radius", seg.radius},
                                        {"theta0", seg.theta0},
                                        {"theta1", seg.theta1}});
                } else {
                    Json pts = Json::array();
                    for (Complex z : seg.points) pts.push_back(complex_to_json(z));
                    segs.push_back(Json{{"type", "polyline"}, {"points", pts}});
                }
            },
            s);
    }
    return Json{{"closed", p.closed()}, {"segments", segs}};
}

PlanarPath path_from_json(const Json& j) {
    std::vector<PathSegment> segs;
    for (const auto& s : j.at("segments")) {
        const std::string type = s.at("type").get<std::string>();
        if (type == "line") {
            segs.push_back(LineSegment{complex_from_pair(s.at("from")),
                                       complex_from_pair(s.at("to"))});
        } else if (type == "arc") {
            segs.push_back(ArcSegment{complex_from_pair(s.at("center")),
                                      s.at("radius").get<double>(),
                                      s.at("theta0").get<double>(),
                                      s.at("theta1").get<double>()});
        } else if (type == "polyline") {
            PolylineSegment p;
            for (const auto& pt : s.at("points")) p.points.push_back(complex_from_pair(pt));
            segs.push_back(std::move(p));
        } else {
            throw StructuralError("unknown segment type '" + type + "'");
        }
    }
    return PlanarPath(std::move(segs), j.value("closed", false));
}

Json to_json(const IndexData& d) {
    return Json{{"n", d.n},
                {"maslov", d.maslov},
                {"weighted_infinity", d.weighted_infinity},
                {"critical_touches", d.critical_touches}};
}

IndexData index_data_from_json(const Json& j) {
    IndexData d;
    d.n = j.at("n").get<int>();
    d.maslov = j.at("maslov").get<int>();
    d.weighted_infinity = j.at("weighted_infinity").get<int>();
    if (j.contains("critical_touches"))
        d.critical_touches = j.at("critical_touches").get<std::vector<std::vector<int>>>();
    d.validate();
    return d;
}

Json to_json(const FloerComplex& c) {
    Json strips = Json::array();
    for (const auto& s : c.strips)
        strips.push_back(Json{{"from", s.from_point},
                              {"to", s.to_point},
                              {"count", s.count},
                              {"class_L", s.class_L},
                              {"class_K", s.class_K}});
    return Json{{"generators", c.generators}, {"rank_L", c.rank_L},
                {"rank_K", c.rank_K},         {"strips", strips},
                {"W_L", to_json(c.potential_L)}, {"W_K", to_json(c.potential_K)}};
}

FloerComplex complex_from_json(const Json& j) {
    FloerComplex c;
    c.generators = j.at("generators").get<std::vector<std::string>>();
    c.rank_L = j.at("rank_L").get<int>();
    c.rank_K = j.at("rank_K").get<int>();
    for (const auto& s : j.at("strips")) {
        StripDatum d;
        d.from_point = s.at("from").get<std::string>();
        d.to_point = s.at("to").get<std::string>();
        d.count = s.at("count").get<long>();
        d.class_L = s.at("class_L").get<std::vector<int>>();
        d.class_K = s.at("class_K").get<std::vector<int>>();
        c.strips.push_back(std::move(d));
    }
    const auto vars = c.variable_names();
    c.potential_L = j.contains("W_L") ? laurent_from_json(j.at("W_L"))
                                      : LaurentPolynomial::zero(vars);
    c.potential_K = j.contains("W_K") ? laurent_from_json(j.at("W_K"))
                                      : LaurentPolynomial::zero(vars);
    c.validate();
    return c;
}

HolonomyAssignment assignment_from_json(const Json& j) {
    HolonomyAssignment a;
    for (const auto& [key, value] : j.items()) a[key] = gaussian_from_json(value);
    return a;
}

Json to_json(const CombType& t) {
    Json levels = Json::array();
    for (const auto& lv : t.levels) {
        Json comps = Json::array();
        for (const auto& c : lv) {
            Json comp{{"shape", c.shape == ComponentShape::disc     ? "disc"
                                : c.shape == ComponentShape::sphere ? "sphere"
                                                                    : "strip"},
                      {"boundary_punctures", c.boundary_punctures},
                      {"interior_punctures", c.interior_punctures},
                      {"nontrivial", c.nontrivial},
                      {"touches_critical_locus", c.touches_critical_locus},
                      {"aut", c.aut}};
            if (c.explicit_index) comp["index"] = *c.explicit_index;
            if (c.index_data) comp["index_data"] = to_json(*c.index_data);
            comps.push_back(std::move(comp));
        }
        levels.push_back(std::move(comps));
    }
    Json matchings = Json::array();
    for (const auto& m : t.matchings)
        matchings.push_back(Json::array({m.level_low, m.comp_low, m.punct_low, m.level_high,
                                         m.comp_high, m.punct_high}));
    return Json{{"kind", t.kind == CombKind::strip ? "strip" : "disc_with_point_constraint"},
                {"levels", levels},
                {"matchings", matchings}};
}

Json to_json(const Verdict& v) {
    const char* status = v.status == VerdictStatus::Rigid       ? "Rigid"
                         : v.status == VerdictStatus::HighIndex ? "HighIndex"
                                                                : "Excluded";
    return Json{{"status", status}, {"reason", v.reason}};
}

}  // namespace mutkit
