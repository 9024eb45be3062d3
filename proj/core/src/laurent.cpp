#include "mutkit/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mutkit/errors.hpp"

namespace mutkit {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw StructuralError("cannot parse rational '" + s + "'");
    }
}

std::string GaussianRational::str() const {
    if (im == 0) return rational_to_string(re);
    std::ostringstream os;
    os << rational_to_string(re) << (im < 0 ? "-" : "+") << rational_to_string(abs(im)) << "i";
    return os.str();
}

LaurentPolynomial LaurentPolynomial::constant(std::vector<std::string> variables,
                                              const GaussianRational& c) {
    LaurentPolynomial p(std::move(variables));
    p.add_term(ExponentVector(p.vars_.size(), 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<std::string> variables,
                                              ExponentVector exps,
                                              const GaussianRational& c) {
    LaurentPolynomial p(std::move(variables));
    p.add_term(exps, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::vector<std::string> variables,
                                              std::size_t index) {
    if (index >= variables.size()) throw StructuralError("variable index out of range");
    ExponentVector e(variables.size(), 0);
    e[index] = 1;
    return monomial(std::move(variables), std::move(e), GaussianRational::one());
}

bool LaurentPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void LaurentPolynomial::add_term(const ExponentVector& exps, const GaussianRational& c) {
    if (exps.size() != vars_.size())
        throw StructuralError("exponent vector length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPolynomial::add_scaled(const LaurentPolynomial& p, const ExponentVector& shift,
                                   const GaussianRational& c) {
    require_same_variables(*this, p);
    if (shift.size() != vars_.size())
        throw StructuralError("exponent vector length does not match variable count");
    if (c.is_zero()) return;
    ExponentVector e(vars_.size());
    for (const auto& [ep, cp] : p.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + shift[i];
        add_term(e, c * cp);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    require_same_variables(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    require_same_variables(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_variables(a, b);
    LaurentPolynomial r(a.vars_);
    ExponentVector e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const GaussianRational& c) const {
    LaurentPolynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& shift) const {
    if (shift.size() != vars_.size()) throw StructuralError("shift length mismatch");
    LaurentPolynomial r(vars_);
    ExponentVector e(vars_.size());
    for (const auto& [ex, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + shift[i];
        r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
    LaurentPolynomial acc = constant(vars_, GaussianRational::one());
    LaurentPolynomial base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

ExponentVector LaurentPolynomial::min_exponents() const {
    ExponentVector m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

std::pair<int, int> LaurentPolynomial::exponent_range(std::size_t var) const {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            lo = hi = e[var];
            first = false;
        } else {
            lo = std::min(lo, e[var]);
            hi = std::max(hi, e[var]);
        }
    }
    return {lo, hi};
}

bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

LaurentPolynomial::TermMap::const_iterator LaurentPolynomial::leading_term_grlex() const {
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (grlex_less(best->first, it->first)) best = it;
    return best;
}

GaussianRational LaurentPolynomial::evaluate(const std::vector<GaussianRational>& point) const {
    if (point.size() != vars_.size()) throw StructuralError("evaluation point length mismatch");
    for (const auto& v : point)
        if (v.is_zero()) throw DomainError("evaluation point has a zero coordinate");
    GaussianRational acc;
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_[i];
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

void require_same_variables(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.variables() != b.variables())
        throw StructuralError("variable lists do not match");
}

LaurentPolynomial laurent_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    throw StructuralError("unknown arithmetic op");
}

void MutationRule::validate(std::size_t var_count) const {
    if (n < 1) throw StructuralError("mutation rule: n must be positive");
    if (fiber_indices.size() != static_cast<std::size_t>(n - 1))
        throw StructuralError("mutation rule: |fiber| must equal n-1");
    std::vector<bool> seen(var_count, false);
    auto mark = [&](std::size_t i) {
        if (i >= var_count) throw StructuralError("mutation rule: index out of range");
        if (seen[i]) throw StructuralError("mutation rule: index sets overlap");
        seen[i] = true;
    };
    mark(mutated_index);
    for (auto i : fiber_indices) mark(i);
    for (auto i : passive_indices) mark(i);
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw StructuralError("mutation rule: index sets do not cover the variable list");
}

LaurentPolynomial MutationRule::wall_factor(const std::vector<std::string>& variables) const {
    LaurentPolynomial f = LaurentPolynomial::constant(variables, GaussianRational::one());
    for (auto i : fiber_indices) f += LaurentPolynomial::variable(variables, i);
    return f;
}

}  // namespace mutkit
