// Command-line front end: every library operation behind one subcommand,
// JSON in / JSON out, deterministic output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>

#include "mutkit/elementary.hpp"
#include "mutkit/errors.hpp"
#include "mutkit/json_io.hpp"

namespace {

using namespace mutkit;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open '" + path + "'");
    return Json::parse(in);  // parse_error propagates as exit 1
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
    std::string potential, rule, path, path2, complex_file, assign_file, index_file;
    std::string direction = "forward";
    double t = 1.0, eps = 0.1, tol = 1e-9;
    int n = 2;
    double section_eps = 0.5;
    std::string side = "upper";
    int k = 1;
    unsigned seed = 0;
    int generators = 4;
    int punctures = 0, aut = 0;
    int max_levels = 3, max_components = 3, max_mult = 3, max_punctures = 3, budget = 2;
    bool full = false;
    bool mutated = false;
};

int dispatch(CLI::App& app, const Options& o) {
    GeometryContext ctx(o.n, o.tol);

    if (app.got_subcommand("mutate")) {
        const auto w = laurent_from_json(load_json(o.potential));
        const auto rule = rule_from_json(load_json(o.rule), w.variables());
        const auto m = mutate_potential(w, rule);
        Json out{{"value", to_json(m.value)}, {"is_laurent", m.is_laurent}};
        if (m.is_laurent) out["laurent_form"] = to_json(m.laurent_form);
        emit(out);
    } else if (app.got_subcommand("verify-invariance")) {
        const auto w = laurent_from_json(load_json(o.potential));
        const auto rule = rule_from_json(load_json(o.rule), w.variables());
        emit(Json{{"ok", verify_invariance(w, rule)}});
    } else if (app.got_subcommand("integrate")) {
        const auto p = path_from_json(load_json(o.path));
        emit(Json{{"value", integrate_lambda_n(p, ctx)}});
    } else if (app.got_subcommand("admissible")) {
        const auto p = path_from_json(load_json(o.path));
        const auto rep = is_admissible(p, o.t, o.eps, ctx);
        emit(Json{{"ok", rep.ok}, {"violations", rep.violations}});
    } else if (app.got_subcommand("mutation-pair")) {
        const auto c = path_from_json(load_json(o.path));
        const auto cp = path_from_json(load_json(o.path2));
        const auto rep = is_valid_mutation_pair(c, cp, ctx);
        emit(Json{{"ok", rep.ok},
                  {"winding", rep.winding},
                  {"area_defect", rep.area_defect},
                  {"violations", rep.violations}});
    } else if (app.got_subcommand("isotopy")) {
        const auto g0 = path_from_json(load_json(o.path));
        const auto g1 = path_from_json(load_json(o.path2));
        emit(Json{{"ok", hamiltonian_isotopy_test(g0, g1, ctx)}});
    } else if (app.got_subcommand("index")) {
        const auto d = index_data_from_json(load_json(o.index_file));
        const auto [vertical, horizontal] = split_indices(d);
        const auto window = sobolev_weight_window(d.n);
        emit(Json{{"disc_index", disc_index(d)},
                  {"critical_multiplicity", critical_multiplicity(d)},
                  {"split", Json::array({vertical, horizontal})},
                  {"virtual_dimension",
                   virtual_dimension(disc_index(d), o.punctures, d.n, o.aut)},
                  {"sobolev_window", Json::array({window.lo, window.hi})}});
    } else if (app.got_subcommand("elementary")) {
        ElementarySection s;
        s.n = o.n;
        s.eps = o.section_eps;
        s.side = (o.side == "lower") ? SectionSide::lower : SectionSide::upper;
        s.k = o.k;
        s.theta.assign(std::size_t(o.n - 1), 0.0);
        GridSpec grid;
        grid.corner = Complex(-1.0, (s.side == SectionSide::upper ? s.eps : -s.eps) + 0.05);
        const auto rep = verify_section_properties(s);
        const auto witness = elementary_index_witness(o.n);
        emit(Json{{"cr_residual", cr_residual(s, grid)},
                  {"projection_residual", rep.projection_residual},
                  {"modulus_spread", rep.modulus_spread},
                  {"ok", rep.ok},
                  {"count", elementary_count(s.side, o.mutated, o.n)},
                  {"index_witness", Json{{"maslov", witness.maslov},
                                         {"weighted_infinity", witness.weighted_infinity},
                                         {"index", witness.index}}}});
    } else if (app.got_subcommand("floer")) {
        FloerComplex c;
        if (!o.complex_file.empty()) {
            c = complex_from_json(load_json(o.complex_file));
        } else {
            FixtureSizes sizes;
            sizes.generators = o.generators;
            c = build_consistent_fixture(o.seed, sizes);
        }
        Json out{{"complex", to_json(c)}};
        const auto d2 = verify_d_squared(c);
        out["d_squared_ok"] = d2.ok;
        if (!o.assign_file.empty()) {
            const auto assign = assignment_from_json(load_json(o.assign_file));
            if (!o.rule.empty()) {
                const auto rule = rule_from_json(load_json(o.rule), c.variable_names());
                const auto mut = mutate_complex(c, rule);
                const auto r = hf_rank(mut, assign);
                out["mutated"] = Json{{"rank_d", r.rank_d}, {"hf_dim", r.hf_dim}};
            }
            const auto r = hf_rank(c, assign);
            out["rank_d"] = r.rank_d;
            out["hf_dim"] = r.hf_dim;
        }
        emit(out);
    } else if (app.got_subcommand("broken")) {
        EnumerationBounds bounds{o.max_levels, o.max_components, o.max_mult, o.max_punctures};
        const auto table = enumerate_types(bounds, o.n, o.budget);
        int rigid = 0, high = 0, excluded = 0;
        Json entries = Json::array();
        for (const auto& [type, verdict] : table) {
            if (verdict.status == VerdictStatus::Rigid) ++rigid;
            else if (verdict.status == VerdictStatus::HighIndex) ++high;
            else ++excluded;
            if (o.full)
                entries.push_back(Json{{"type", to_json(type)}, {"verdict", to_json(verdict)}});
        }
        Json out{{"total", table.size()},
                 {"rigid", rigid},
                 {"high_index", high},
                 {"excluded", excluded}};
        if (o.full) out["entries"] = entries;
        emit(out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mutation / path-integral / index / Floer toolkit"};
    app.require_subcommand(1);
    Options o;

    auto* mutate = app.add_subcommand("mutate", "apply the mutation substitution to a potential");
    mutate->add_option("--potential", o.potential)->required();
    mutate->add_option("--rule", o.rule)->required();

    auto* verify = app.add_subcommand("verify-invariance", "round-trip check of the substitution");
    verify->add_option("--potential", o.potential)->required();
    verify->add_option("--rule", o.rule)->required();

    auto* integrate = app.add_subcommand("integrate", "path integral of the primitive one-form");
    integrate->add_option("--path", o.path)->required();
    integrate->add_option("--n", o.n);
    integrate->add_option("--tol", o.tol);

    auto* admissible = app.add_subcommand("admissible", "admissible-path check");
    admissible->add_option("--path", o.path)->required();
    admissible->add_option("--t", o.t)->required();
    admissible->add_option("--eps", o.eps)->required();
    admissible->add_option("--n", o.n);
    admissible->add_option("--tol", o.tol);

    auto* pair = app.add_subcommand("mutation-pair", "arc-pair validity check");
    pair->add_option("--c", o.path)->required();
    pair->add_option("--c-prime", o.path2)->required();
    pair->add_option("--n", o.n);
    pair->add_option("--tol", o.tol);

    auto* isotopy = app.add_subcommand("isotopy", "equal-integral isotopy criterion");
    isotopy->add_option("--g0", o.path)->required();
    isotopy->add_option("--g1", o.path2)->required();
    isotopy->add_option("--n", o.n);
    isotopy->add_option("--tol", o.tol);

    auto* index = app.add_subcommand("index", "index bookkeeping for declared disc data");
    index->add_option("--data", o.index_file)->required();
    index->add_option("--punctures", o.punctures);
    index->add_option("--aut", o.aut);

    auto* elementary = app.add_subcommand("elementary", "verify a classified section");
    elementary->add_option("--n", o.n);
    elementary->add_option("--eps", o.section_eps);
    elementary->add_option("--side", o.side)->check(CLI::IsMember({"upper", "lower"}));
    elementary->add_option("--k", o.k);
    elementary->add_flag("--mutated", o.mutated);

    auto* floer = app.add_subcommand("floer", "coboundary identities and rank at a point");
    floer->add_option("--complex", o.complex_file);
    floer->add_option("--assign", o.assign_file);
    floer->add_option("--rule", o.rule);
    floer->add_option("--seed", o.seed);
    floer->add_option("--generators", o.generators);

    auto* broken = app.add_subcommand("broken", "enumerate and classify broken types");
    broken->add_option("--n", o.n);
    broken->add_option("--max-levels", o.max_levels);
    broken->add_option("--max-components", o.max_components);
    broken->add_option("--max-mult", o.max_mult);
    broken->add_option("--max-punctures", o.max_punctures);
    broken->add_option("--budget", o.budget);
    broken->add_flag("--full", o.full);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        return dispatch(app, o);
    } catch (const mutkit::Json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const mutkit::SingularityError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const mutkit::WallError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const mutkit::BranchError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const mutkit::InconsistencyError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
}
