#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "mutkit/errors.hpp"

namespace mutkit {

using Rational = boost::multiprecision::mpq_rational;

/// Exact element of Q(i). Holonomies live in C*, but every example in this
/// problem domain evaluates at algebraic points, so no floating coefficients
/// appear anywhere in the algebra layer.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    GaussianRational conj() const { return {re, -im}; }

    Rational norm() const { return re * re + im * im; }

    GaussianRational inverse() const {
        if (is_zero()) throw DomainError("division by zero in Q(i)");
        Rational n = norm();
        return {re / n, -im / n};
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational pow(long e) const {
        GaussianRational base = *this;
        if (e < 0) {
            base = base.inverse();
            e = -e;
        }
        GaussianRational acc = one();
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const;
};

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace mutkit
