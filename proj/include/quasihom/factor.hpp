#pragma once

#include <vector>

#include "quasihom/gaussian.hpp"

namespace qh {

// One prime power in a Gaussian factorization. The prime is stored in its
// canonical associate form: re > 0 and re >= |im|, with the tie re == |im|
// broken toward im >= 0. Exponents may be negative for rational inputs.
struct GaussianPrimePower {
    GaussianRational prime;
    long exponent = 0;
};

// z = i^unit_power * prod(prime^exponent), exactly.
struct GaussianFactorization {
    int unit_power = 0;  // in {0,1,2,3}
    std::vector<GaussianPrimePower> factors;  // pairwise non-associate, sorted by (norm, re, im)

    GaussianRational unit() const { return GaussianRational::i().pow(unit_power); }
    GaussianRational value() const;
};

// Canonical factorization over the Gaussian integers, extended to Gaussian
// rationals with negative exponents. Throws on zero.
GaussianFactorization factor(const GaussianRational& z);

// Prime factorization of a positive integer (trial division + Pollard rho;
// inputs are desk-scale). Returned as sorted (prime, exponent) pairs.
std::vector<std::pair<mpz_class, long>> factor_integer(const mpz_class& n);

}  // namespace qh
