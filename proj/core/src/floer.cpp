#include "mutkit/floer.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "mutkit/errors.hpp"

namespace mutkit {

namespace {

std::size_t generator_index(const FloerComplex& c, const std::string& label) {
    const auto it = std::find(c.generators.begin(), c.generators.end(), label);
    if (it == c.generators.end())
        throw StructuralError("strip references unknown generator '" + label + "'");
    return std::size_t(it - c.generators.begin());
}

bool uses_only_block(const LaurentPolynomial& p, std::size_t lo, std::size_t hi) {
    for (const auto& [exps, coeff] : p.terms())
        for (std::size_t j = 0; j < exps.size(); ++j)
            if (exps[j] != 0 && (j < lo || j >= hi)) return false;
    return true;
}

RfMatrix zero_matrix(std::size_t g, const std::vector<std::string>& vars) {
    return RfMatrix(g, std::vector<RationalFunction>(
                           g, RationalFunction(LaurentPolynomial::zero(vars))));
}

std::vector<std::vector<GaussianRational>> evaluate_matrix(
    const RfMatrix& m, const std::vector<GaussianRational>& point) {
    std::vector<std::vector<GaussianRational>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m.size());
        for (const auto& entry : m[i]) out[i].push_back(entry.evaluate(point));
    }
    return out;
}

void require_square_zero(const std::vector<std::vector<GaussianRational>>& m) {
    const std::size_t g = m.size();
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            GaussianRational acc;
            for (std::size_t k = 0; k < g; ++k) acc = acc + m[i][k] * m[k][j];
            if (!acc.is_zero())
                throw InconsistencyError("coboundary does not square to zero at the point");
        }
}

HfResult rank_result(std::vector<std::vector<GaussianRational>> numeric) {
    require_square_zero(numeric);
    HfResult r;
    const int g = int(numeric.size());
    r.rank_d = exact_rank(std::move(numeric));
    r.hf_dim = g - 2 * r.rank_d;
    return r;
}

}  // namespace

std::vector<std::string> FloerComplex::variable_names() const {
    std::vector<std::string> vars;
    vars.reserve(std::size_t(rank_L + rank_K));
    for (int i = 1; i <= rank_L; ++i) vars.push_back("L" + std::to_string(i));
    for (int i = 1; i <= rank_K; ++i) vars.push_back("K" + std::to_string(i));
    return vars;
}

void FloerComplex::validate() const {
    if (rank_L < 0 || rank_K < 0) throw DomainError("negative holonomy rank");
    std::set<std::string> seen(generators.begin(), generators.end());
    if (seen.size() != generators.size())
        throw StructuralError("generator labels must be unique");
    for (const auto& s : strips) {
        generator_index(*this, s.from_point);
        generator_index(*this, s.to_point);
        if (int(s.class_L.size()) != rank_L || int(s.class_K.size()) != rank_K)
            throw StructuralError("strip class length does not match holonomy rank");
    }
    const auto vars = variable_names();
    if (potential_L.variables() != vars || potential_K.variables() != vars)
        throw StructuralError("potentials must live in the combined holonomy ring");
    if (!uses_only_block(potential_L, 0, std::size_t(rank_L)) ||
        !uses_only_block(potential_K, std::size_t(rank_L), vars.size()))
        throw StructuralError("potentials must use disjoint variable blocks");
}

RfMatrix coboundary_matrix(const FloerComplex& c) {
    c.validate();
    const auto vars = c.variable_names();
    const std::size_t g = c.generators.size();
    std::vector<LaurentPolynomial> flat(g * g, LaurentPolynomial::zero(vars));
    for (const auto& s : c.strips) {
        const std::size_t p = generator_index(c, s.from_point);
        const std::size_t q = generator_index(c, s.to_point);
        ExponentVector exps(vars.size(), 0);
        for (int j = 0; j < c.rank_L; ++j) exps[std::size_t(j)] = -s.class_L[std::size_t(j)];
        for (int j = 0; j < c.rank_K; ++j)
            exps[std::size_t(c.rank_L + j)] = s.class_K[std::size_t(j)];
        flat[q * g + p].add_term(exps, GaussianRational(Rational(s.count)));
    }
    RfMatrix m(g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            m[i].push_back(RationalFunction(std::move(flat[i * g + j])));
    return m;
}

DSquaredReport verify_d_squared(const FloerComplex& c) {
    const RfMatrix m = coboundary_matrix(c);
    const std::size_t g = m.size();
    const RationalFunction scalar(c.potential_L - c.potential_K);
    DSquaredReport rep;
    rep.defect = zero_matrix(g, c.variable_names());
    rep.ok = true;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            RationalFunction acc = rep.defect[i][j];
            for (std::size_t k = 0; k < g; ++k) acc = acc + m[i][k] * m[k][j];
            if (i == j) acc = acc - scalar;
            if (!acc.is_zero()) rep.ok = false;
            rep.defect[i][j] = acc;
        }
    return rep;
}

FloerComplex build_consistent_fixture(unsigned seed, const FixtureSizes& sizes) {
    if (sizes.generators < 2 || sizes.rank_L < 1 || sizes.rank_K < 1 || sizes.max_class < 0)
        throw DomainError("fixture sizes out of range");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> cls(-sizes.max_class, sizes.max_class);
    std::uniform_int_distribution<int> cnt(1, 3);
    std::uniform_int_distribution<int> flip(0, 1);
    std::uniform_int_distribution<int> constant(1, 5);

    for (int attempt = 0; attempt < 32; ++attempt) {
        FloerComplex c;
        c.rank_L = sizes.rank_L;
        c.rank_K = sizes.rank_K;
        for (int i = 0; i < sizes.generators; ++i) c.generators.push_back("p" + std::to_string(i));
        const auto vars = c.variable_names();

        // one-way strips: first half -> second half, so the matrix squares to 0
        const int half = sizes.generators / 2;
        for (int a = 0; a < half; ++a)
            for (int b = half; b < sizes.generators; ++b) {
                if (flip(rng) == 0 && !(a == 0 && b == half)) continue;
                StripDatum s;
                s.from_point = c.generators[std::size_t(a)];
                s.to_point = c.generators[std::size_t(b)];
                s.count = cnt(rng) * (flip(rng) ? 1 : -1);
                for (int j = 0; j < sizes.rank_L; ++j) s.class_L.push_back(cls(rng));
                for (int j = 0; j < sizes.rank_K; ++j) s.class_K.push_back(cls(rng));
                c.strips.push_back(std::move(s));
            }

        const GaussianRational w(Rational(seed == 0 ? 0 : constant(rng)));
        c.potential_L = LaurentPolynomial::constant(vars, w);
        c.potential_K = LaurentPolynomial::constant(vars, w);

        if (verify_d_squared(c).ok) return c;
    }
    throw GenerationError("could not draw a consistent fixture");
}

std::vector<GaussianRational> assignment_vector(const std::vector<std::string>& variables,
                                                const HolonomyAssignment& assign) {
    std::vector<GaussianRational> point;
    point.reserve(variables.size());
    for (const auto& v : variables) {
        const auto it = assign.find(v);
        if (it == assign.end()) throw StructuralError("assignment misses variable '" + v + "'");
        if (it->second.is_zero()) throw DomainError("holonomy values must be nonzero");
        point.push_back(it->second);
    }
    return point;
}

int exact_rank(std::vector<std::vector<GaussianRational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[lead], m[pivot]);
        const GaussianRational inv = m[lead][col].inverse();
        for (std::size_t r = lead + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const GaussianRational f = m[r][col] * inv;
            for (std::size_t cc = col; cc < cols; ++cc)
                m[r][cc] = m[r][cc] - f * m[lead][cc];
        }
        ++lead;
        ++rank;
    }
    return rank;
}

HfResult hf_rank(const FloerComplex& c, const HolonomyAssignment& assign) {
    const RfMatrix m = coboundary_matrix(c);
    const auto point = assignment_vector(c.variable_names(), assign);
    return rank_result(evaluate_matrix(m, point));
}

MutatedComplex mutate_complex(const FloerComplex& c, const MutationRule& rule) {
    const auto vars = c.variable_names();
    rule.validate(vars.size());
    if (rule.mutated_index >= std::size_t(c.rank_L))
        throw StructuralError("mutation must act on the L variable block");
    for (std::size_t i : rule.fiber_indices)
        if (i >= std::size_t(c.rank_L))
            throw StructuralError("mutation must act on the L variable block");

    const RfMatrix m = coboundary_matrix(c);
    MutatedComplex out;
    out.generators = c.generators;
    out.variables = vars;
    out.matrix.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& entry : m[i])
            out.matrix[i].push_back(apply_mutation(entry, rule, MutationDirection::forward));
    out.potential_L =
        apply_mutation(RationalFunction(c.potential_L), rule, MutationDirection::forward);
    out.potential_K = c.potential_K;
    return out;
}

HfResult hf_rank(const MutatedComplex& c, const HolonomyAssignment& assign) {
    const auto point = assignment_vector(c.variables, assign);
    return rank_result(evaluate_matrix(c.matrix, point));
}

}  // namespace mutkit
