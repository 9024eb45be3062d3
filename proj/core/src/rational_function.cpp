#include "mutkit/rational_function.hpp"

#include <algorithm>
#include <random>

#include "mutkit/errors.hpp"

namespace mutkit {

namespace {

int degree_in(const LaurentPolynomial& p, std::size_t v) {
    int d = -1;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
    return d;
}

/// Coefficient of v^k as a polynomial in the remaining variables
/// (v-slot zeroed).
LaurentPolynomial coefficient_of(const LaurentPolynomial& p, std::size_t v, int k) {
    LaurentPolynomial r(p.variables());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        ExponentVector e2 = e;
        e2[v] = 0;
        r.add_term(e2, c);
    }
    return r;
}

LaurentPolynomial times_var_power(const LaurentPolynomial& p, std::size_t v, int k) {
    ExponentVector shift(p.variables().size(), 0);
    shift[v] = k;
    return p.shifted(shift);
}

LaurentPolynomial monic_grlex(const LaurentPolynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_term_grlex()->second.inverse());
}

/// Pseudo-remainder of a by b with respect to variable v; deg_v(b) >= 1.
LaurentPolynomial pseudo_remainder(LaurentPolynomial r, const LaurentPolynomial& b, std::size_t v) {
    const int db = degree_in(b, v);
    const LaurentPolynomial lb = coefficient_of(b, v, db);
    while (!r.is_zero()) {
        const int dr = degree_in(r, v);
        if (dr < db) break;
        const LaurentPolynomial lr = coefficient_of(r, v, dr);
        r = lb * r - times_var_power(lr * b, v, dr - db);
    }
    return r;
}

LaurentPolynomial content_in(const LaurentPolynomial& p, std::size_t v);

LaurentPolynomial gcd_impl(LaurentPolynomial a, LaurentPolynomial b) {
    if (a.is_zero()) return monic_grlex(b);
    if (b.is_zero()) return monic_grlex(a);
    if (a.is_constant() || b.is_constant())
        return LaurentPolynomial::constant(a.variables(), GaussianRational::one());

    // Main variable: last position where either input has positive degree.
    std::size_t v = 0;
    bool found = false;
    for (std::size_t i = a.variables().size(); i-- > 0;) {
        if (degree_in(a, i) > 0 || degree_in(b, i) > 0) {
            v = i;
            found = true;
            break;
        }
    }
    if (!found) return LaurentPolynomial::constant(a.variables(), GaussianRational::one());

    if (degree_in(a, v) == 0) return gcd_impl(a, content_in(b, v));
    if (degree_in(b, v) == 0) return gcd_impl(content_in(a, v), b);

    const LaurentPolynomial cont_a = content_in(a, v);
    const LaurentPolynomial cont_b = content_in(b, v);
    const LaurentPolynomial c = gcd_impl(cont_a, cont_b);

    LaurentPolynomial prim_a, prim_b;
    if (!try_divide(a, cont_a, prim_a) || !try_divide(b, cont_b, prim_b))
        throw StructuralError("content does not divide its polynomial");

    if (degree_in(prim_a, v) < degree_in(prim_b, v)) std::swap(prim_a, prim_b);
    // Primitive PRS.
    while (true) {
        LaurentPolynomial r = pseudo_remainder(prim_a, prim_b, v);
        if (r.is_zero()) break;
        LaurentPolynomial cr = content_in(r, v);
        LaurentPolynomial pr;
        if (!try_divide(r, cr, pr))
            throw StructuralError("content does not divide pseudo-remainder");
        prim_a = std::move(prim_b);
        prim_b = std::move(pr);
        if (degree_in(prim_b, v) == 0) {
            // Coprime in v: primitive parts share no factor.
            return monic_grlex(c);
        }
    }
    return monic_grlex(c * prim_b);
}

LaurentPolynomial content_in(const LaurentPolynomial& p, std::size_t v) {
    LaurentPolynomial g(p.variables());
    const int d = degree_in(p, v);
    for (int k = 0; k <= d; ++k) {
        LaurentPolynomial ck = coefficient_of(p, v, k);
        if (ck.is_zero()) continue;
        g = gcd_impl(std::move(g), std::move(ck));
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

ExponentVector negated(ExponentVector e) {
    for (auto& x : e) x = -x;
    return e;
}

// ---- one-sided Monte Carlo coprimality certificate over F_p[i] ----
// p = 2^31 - 1 is 3 mod 4, so a + bi with a, b in F_p forms a field.

constexpr std::uint64_t kP = 2147483647ull;

std::uint64_t mod_inv(std::uint64_t x) {  // Fermat
    std::uint64_t r = 1, b = x % kP;
    for (std::uint64_t e = kP - 2; e; e >>= 1) {
        if (e & 1) r = r * b % kP;
        b = b * b % kP;
    }
    return r;
}

struct Fpi {
    std::uint64_t re = 0, im = 0;
    bool is_zero() const { return re == 0 && im == 0; }
};
Fpi operator+(Fpi a, Fpi b) { return {(a.re + b.re) % kP, (a.im + b.im) % kP}; }
Fpi operator-(Fpi a, Fpi b) { return {(a.re + kP - b.re) % kP, (a.im + kP - b.im) % kP}; }
Fpi operator*(Fpi a, Fpi b) {
    return {(a.re * b.re % kP + kP - a.im * b.im % kP) % kP,
            (a.re * b.im % kP + a.im * b.re % kP) % kP};
}
Fpi inv(Fpi a) {
    const std::uint64_t n = mod_inv((a.re * a.re % kP + a.im * a.im % kP) % kP);
    return {a.re * n % kP, (kP - a.im) * n % kP};
}

/// Reduce an exact coefficient mod p; false when a denominator hits p.
bool reduce_mod_p(const GaussianRational& c, Fpi& out) {
    using Int = boost::multiprecision::mpz_int;
    auto part = [](const Rational& r, std::uint64_t& v) {
        const Int dn = denominator(r) % Int(kP);
        if (dn == 0) return false;
        Int nm = numerator(r) % Int(kP);
        if (nm < 0) nm += Int(kP);
        v = nm.convert_to<std::uint64_t>() * mod_inv(dn.convert_to<std::uint64_t>() % kP) % kP;
        return true;
    };
    return part(c.re, out.re) && part(c.im, out.im);
}

/// Dense univariate image of p in the variable v, all other variables
/// specialized at deterministic pseudo-random residues. Empty result flags a
/// degenerate specialization (denominator, dropped leading coefficient).
std::vector<Fpi> specialize_to_univariate(const LaurentPolynomial& p, std::size_t v,
                                          unsigned salt) {
    const std::size_t m = p.variables().size();
    std::minstd_rand rng(2654435761u + 97u * salt + 13u * static_cast<unsigned>(v));
    std::uniform_int_distribution<std::uint64_t> val(2, kP - 2);
    std::vector<int> maxdeg(m, 0);
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < m; ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);
    std::vector<std::vector<std::uint64_t>> powers(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t x = val(rng);
        powers[i].push_back(1);
        for (int k = 1; k <= maxdeg[i]; ++k) powers[i].push_back(powers[i].back() * x % kP);
    }
    std::vector<Fpi> coeffs(std::size_t(degree_in(p, v)) + 1);
    for (const auto& [e, c] : p.terms()) {
        Fpi t;
        if (!reduce_mod_p(c, t)) return {};
        for (std::size_t i = 0; i < m; ++i)
            if (i != v && e[i] != 0) {
                const std::uint64_t x = powers[i][std::size_t(e[i])];
                t = t * Fpi{x, 0};
            }
        coeffs[std::size_t(e[v])] = coeffs[std::size_t(e[v])] + t;
    }
    if (coeffs.back().is_zero()) return {};  // leading coefficient vanished
    return coeffs;
}

int univariate_gcd_degree(std::vector<Fpi> a, std::vector<Fpi> b) {
    auto trim = [](std::vector<Fpi>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            const Fpi q = a.back() * inv(b.back());
            for (std::size_t i = 0; i < b.size(); ++i)
                a[a.size() - b.size() + i] = a[a.size() - b.size() + i] - q * b[i];
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
}

/// A nonconstant common factor has positive degree in some variable shared
/// by both inputs and survives specialization unless the random point (or
/// the prime) hits a root of its leading coefficient. "true" may rarely be
/// wrong — the fraction is then left unreduced, which every consumer
/// (equals, evaluate, printing) tolerates; "false" just routes to the exact
/// gcd.
bool probably_coprime(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    for (std::size_t v = 0; v < a.variables().size(); ++v) {
        if (degree_in(a, v) <= 0 || degree_in(b, v) <= 0) continue;
        bool certified = false;
        for (unsigned salt = 0; salt < 3; ++salt) {
            const auto ua = specialize_to_univariate(a, v, salt);
            const auto ub = specialize_to_univariate(b, v, salt);
            if (ua.empty() || ub.empty()) continue;  // degenerate point, retry
            certified = univariate_gcd_degree(ua, ub) == 0;
            break;  // non-degenerate verdict is final for this variable
        }
        if (!certified) return false;
    }
    return true;
}

}  // namespace

LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_variables(a, b);
    return gcd_impl(a, b);
}

bool try_divide(const LaurentPolynomial& a, const LaurentPolynomial& b, LaurentPolynomial& quotient) {
    require_same_variables(a, b);
    if (b.is_zero()) throw StructuralError("division by zero polynomial");
    LaurentPolynomial q(a.variables());
    LaurentPolynomial r = a;
    const auto lt_b = b.leading_term_grlex();
    const ExponentVector& eb = lt_b->first;
    const GaussianRational cb_inv = lt_b->second.inverse();
    while (!r.is_zero()) {
        const auto lt_r = r.leading_term_grlex();
        ExponentVector eq(eb.size());
        for (std::size_t i = 0; i < eb.size(); ++i) {
            eq[i] = lt_r->first[i] - eb[i];
            if (eq[i] < 0) return false;  // leading term not divisible
        }
        const GaussianRational cq = lt_r->second * cb_inv;
        q.add_term(eq, cq);
        r.add_scaled(b, eq, -cq);
    }
    quotient = std::move(q);
    return true;
}

RationalFunction::RationalFunction(LaurentPolynomial laurent)
    : num_(std::move(laurent)),
      den_(LaurentPolynomial::constant(num_.variables(), GaussianRational::one())) {
    normalize();
}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_variables(num_, den_);
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw StructuralError("rational function with zero denominator");
    const auto one = GaussianRational::one();
    if (num_.is_zero()) {
        den_ = LaurentPolynomial::constant(num_.variables(), one);
        return;
    }
    // Pull the monomial content out of both sides; the net monomial unit
    // ends up in the (possibly Laurent) numerator.
    const ExponentVector mn = num_.min_exponents();
    const ExponentVector md = den_.min_exponents();
    LaurentPolynomial np = num_.shifted(negated(mn));
    LaurentPolynomial dp = den_.shifted(negated(md));

    // Cheap exits before the exact gcd: constant denominator, exact division
    // either way (the common cases after a mutation round trip), or a
    // certified-coprime pair.
    if (!dp.is_constant() && !probably_coprime(np, dp)) {
        LaurentPolynomial q(np.variables());
        if (try_divide(np, dp, q)) {
            np = std::move(q);
            dp = LaurentPolynomial::constant(np.variables(), one);
        } else if (try_divide(dp, np, q)) {
            dp = std::move(q);
            np = LaurentPolynomial::constant(np.variables(), one);
        } else {
            const LaurentPolynomial g = polynomial_gcd(np, dp);
            if (!g.is_constant()) {
                LaurentPolynomial qn, qd;
                if (!try_divide(np, g, qn) || !try_divide(dp, g, qd))
                    throw StructuralError("gcd does not divide its arguments");
                np = std::move(qn);
                dp = std::move(qd);
            }
        }
    }

    const GaussianRational lead = dp.leading_term_grlex()->second;
    if (!(lead == one)) {
        const GaussianRational inv = lead.inverse();
        np = np.scaled(inv);
        dp = dp.scaled(inv);
    }

    ExponentVector net(mn.size());
    for (std::size_t i = 0; i < net.size(); ++i) net[i] = mn[i] - md[i];
    num_ = np.shifted(net);
    den_ = std::move(dp);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

GaussianRational RationalFunction::evaluate(const std::vector<GaussianRational>& point) const {
    const GaussianRational d = den_.evaluate(point);
    if (d.is_zero()) throw WallError("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

std::string RationalFunction::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace mutkit
