#pragma once

#include <optional>
#include <vector>

#include "quasihom/exponent.hpp"
#include "quasihom/gaussian.hpp"
#include "quasihom/intlattice.hpp"

namespace qh {

// The ordered spectrum of a contracting linear part: nonzero entries with
// modulus < 1, arranged by non-increasing modulus. jordan_flags[i] marks a
// sub-diagonal 1 coupling coordinates i and i+1 (requires equal eigenvalues).
class OrderedSpectrum {
public:
    OrderedSpectrum() = default;  // empty placeholder; use from_ordered
    static OrderedSpectrum from_ordered(std::vector<GaussianRational> entries,
                                        std::vector<bool> jordan_flags = {});

    int dim() const { return static_cast<int>(entries_.size()); }
    const GaussianRational& entry(int i) const { return entries_[i]; }
    const std::vector<GaussianRational>& entries() const { return entries_; }
    const Rational& ms(int i) const { return ms_[i]; }
    bool jordan_flag(int i) const { return flags_[i]; }  // i in [0, dim-1)
    const std::vector<bool>& jordan_flags() const { return flags_; }

    // lambda^alpha and its modulus squared, exactly.
    GaussianRational value(const Exponent& a) const;
    Rational value_ms(const Exponent& a) const;
    // lambda^v for integer vectors with possibly negative components.
    GaussianRational value_int(const IntVector& v) const;

    friend bool operator==(const OrderedSpectrum& a, const OrderedSpectrum& b) {
        return a.entries_ == b.entries_ && a.flags_ == b.flags_;
    }

private:
    std::vector<GaussianRational> entries_;
    std::vector<bool> flags_;
    std::vector<Rational> ms_;
};

struct NicelyOrdered {
    OrderedSpectrum spectrum;
    std::vector<int> permutation;  // spectrum.entry(k) == raw[permutation[k]]
};

// Sort by non-increasing modulus; exact ties broken by (re, im) lexicographic
// order so output is reproducible. Rejects zero or non-contracting entries.
NicelyOrdered nicely_order(std::vector<GaussianRational> raw);

enum class Ordering { Less, Equal, Greater };

// The lambda-order: a > b iff |lambda^a| < |lambda^b|, ties broken by
// lexicographic comparison of the exponent vectors.
Ordering lambda_compare(const OrderedSpectrum& s, const Exponent& a, const Exponent& b);
bool lambda_less(const OrderedSpectrum& s, const Exponent& a, const Exponent& b);

// Least M such that |alpha| > M implies |lambda^alpha|^2 < |lambda_d|^2.
// Bounds the degree of every resonance.
int resonance_bound(const OrderedSpectrum& s);

// R_i = {alpha : lambda^alpha = lambda_i}, complete, lex-sorted (0-based i).
std::vector<Exponent> resonance_set(const OrderedSpectrum& s, int i);

// R_i restricted to |alpha| >= 2, plus the sub-diagonal exponent 1_{i-1}
// when lambda_{i-1} = lambda_i. These are the admissible normal-form terms.
std::vector<Exponent> normal_form_support(const OrderedSpectrum& s, int i);

// Equivalence class of exponents with the same lambda-weight.
// members is the complete class, sorted ascending in the lambda-order;
// representative is its minimum.
struct WeightClass {
    Exponent representative;
    std::vector<Exponent> members;
    GaussianRational value;
};

WeightClass weight_class(const OrderedSpectrum& s, const Exponent& a);
// Inverse of gamma -> lambda^gamma on its image; nullopt when z is not a value.
std::optional<WeightClass> log_lambda(const OrderedSpectrum& s, const GaussianRational& z);

Ordering class_compare(const OrderedSpectrum& s, const WeightClass& a, const WeightClass& b);
bool class_less_equal(const OrderedSpectrum& s, const WeightClass& a, const WeightClass& b);
WeightClass class_sum(const OrderedSpectrum& s, const WeightClass& a, const WeightClass& b);
std::optional<WeightClass> class_diff(const OrderedSpectrum& s, const WeightClass& a,
                                      const WeightClass& b);
// Least class strictly greater than gamma (Gamma is order isomorphic to N).
WeightClass class_successor(const OrderedSpectrum& s, const WeightClass& gamma);

// All classes c with c <= bound, in increasing class order.
std::vector<WeightClass> classes_up_to(const OrderedSpectrum& s, const WeightClass& bound);

// Enumeration helpers (complete by the pruned search: raising any component
// strictly lowers |lambda^alpha|).
std::vector<Exponent> exponents_with_value(const OrderedSpectrum& s, const GaussianRational& v);
std::vector<Exponent> exponents_with_ms_at_least(const OrderedSpectrum& s, const Rational& t);

// Basis of {v in Z^d : lambda^v = 1}, canonical HNF rows.
struct WeightLattice {
    IntMatrix basis;
};
WeightLattice relation_lattice(const OrderedSpectrum& s);

// Positive integer weights n with n.v = 0 for every lattice vector v,
// normalized to gcd 1; (1,...,1) when the lattice is trivial.
std::vector<long> weight_vector(const OrderedSpectrum& s);

}  // namespace qh
