#pragma once

#include <compare>
#include <string>

#include "quasihom/rational.hpp"

namespace qh {

// Exact complex number with rational real and imaginary parts.
// Every coefficient and every eigenvalue in this library lives here;
// this restriction is what makes resonance detection decidable.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
    static GaussianRational parse(const std::string& text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    // |z|^2 = re^2 + im^2, exactly.
    Rational modulus_squared() const { return re_ * re_ + im_ * im_; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational reciprocal() const;
    GaussianRational pow(long k) const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    // (re, im) lexicographic order; used for deterministic tie-breaking only.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        auto c = a.re_ <=> b.re_;
        if (c != std::strong_ordering::equal) return c;
        return a.im_ <=> b.im_;
    }

    // Textual form: "a/b", "a/b*i", "a/b+c/d*i" with integer shorthand
    // ("2" for "2/1") and "i"/"-i" for unit imaginary parts.
    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

GaussianRational power(const GaussianRational& z, long k);

}  // namespace qh
