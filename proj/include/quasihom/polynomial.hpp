#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quasihom/exponent.hpp"
#include "quasihom/gaussian.hpp"
#include "quasihom/matrix.hpp"
#include "quasihom/spectrum.hpp"

namespace qh {

// Sparse multivariate polynomial with Gaussian-rational coefficients.
// Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponent, GaussianRational, GrlexLess>;

    explicit Polynomial(int dim = 0) : dim_(dim) {}
    static Polynomial constant(int dim, GaussianRational c);
    static Polynomial monomial(int dim, Exponent e, GaussianRational c);
    static Polynomial variable(int dim, int i);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    GaussianRational coeff(const Exponent& e) const;
    GaussianRational constant_term() const { return coeff(Exponent(dim_)); }
    // coefficients of the degree-1 monomials, one per variable
    std::vector<GaussianRational> linear_coefficients() const;

    void add_term(const Exponent& e, const GaussianRational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const { return mul(o, std::nullopt); }
    Polynomial mul(const Polynomial& o, std::optional<int> truncation) const;
    Polynomial scaled(const GaussianRational& c) const;
    Polynomial truncated(int max_total_degree) const;
    Polynomial graded_component(int total_degree) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    // canonical text form, graded-lex leading term first
    std::string str(const std::vector<std::string>& vars) const;
    // canonical text form ordered by the lambda-order, initial part first
    std::string str_lambda(const std::vector<std::string>& vars, const OrderedSpectrum& s) const;
    static Polynomial parse(const std::string& text, const std::vector<std::string>& vars);

private:
    int dim_;
    TermMap terms_;
};

// Tuple of polynomials vanishing at the origin (a germ of a map).
class PolyMap {
public:
    PolyMap() = default;
    explicit PolyMap(std::vector<Polynomial> components);
    static PolyMap identity(int dim);
    static PolyMap from_linear(const GMatrix& m);

    int size() const { return static_cast<int>(comps_.size()); }
    int dim() const { return comps_.empty() ? 0 : comps_[0].dim(); }
    const Polynomial& operator[](int i) const { return comps_[i]; }
    const std::vector<Polynomial>& components() const { return comps_; }

    GMatrix linear_part() const;  // size x dim
    int max_degree() const;
    PolyMap truncated(int max_total_degree) const;
    bool is_linear() const { return max_degree() <= 1; }

    friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.comps_ == b.comps_; }

private:
    std::vector<Polynomial> comps_;
};

// g(F_1, ..., F_m), exact; with a truncation bound every monomial of total
// degree above the bound is dropped (pruned eagerly, result identical to
// composing fully and truncating afterwards).
Polynomial compose(const Polynomial& g, const PolyMap& f, std::optional<int> truncation = {});
PolyMap map_compose(const PolyMap& f, const PolyMap& g, std::optional<int> truncation = {});
// Inverse of a map with invertible linear part, modulo degree truncation+1.
PolyMap map_inverse(const PolyMap& f, int truncation);

// lambda-graded decomposition: pieces in increasing class order, supported
// exactly on their class, summing back to the input.
struct GradedDecomposition {
    std::vector<std::pair<WeightClass, Polynomial>> pieces;
};
GradedDecomposition lambda_decompose(const Polynomial& p, const OrderedSpectrum& s);

// The unique class when p is lambda-homogeneous; nullopt when mixed.
// Throws on the zero polynomial.
std::optional<WeightClass> lambda_degree(const Polynomial& p, const OrderedSpectrum& s);

// Common value of n.alpha over the support, or nullopt when not weighted
// homogeneous for the (positive) weights n.
std::optional<long> weighted_degree(const Polynomial& p, const std::vector<long>& weights);

// Monomial basis of H_gamma, ascending in the lambda-order.
std::vector<Polynomial> h_space_basis(const OrderedSpectrum& s, const WeightClass& gamma);

// All exponents in N^dim of exact total degree k, lex-sorted.
std::vector<Exponent> exponents_of_degree(int dim, int k);

}  // namespace qh
