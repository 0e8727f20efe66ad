#pragma once

#include "quasihom/invariant.hpp"

namespace qh {

// I is contained in m^2 iff every generator has zero linear part; a germ
// realizes the embedding dimension exactly in that case.
struct EmbeddingReport {
    bool in_m2 = false;
    std::optional<int> offending_generator;
    GMatrix linear_part;  // r x d matrix of generator linear parts
};
EmbeddingReport check_m2(const IdealPresentation& ideal);

// One implicit-function elimination step: a generator with invertible linear
// coefficient is solved for one variable as a truncated jet and substituted
// into the remaining generators.
struct EliminationResult {
    IdealPresentation reduced;  // d-1 variables
    int generator = -1;         // generator consumed by the step
    int variable = -1;          // original variable solved away
    GMatrix change;             // coordinate change: new gens are old ∘ change
    Polynomial section;         // last coordinate = section(remaining coordinates)
    int truncation = 0;
};
EliminationResult eliminate_variable(const IdealPresentation& ideal, int truncation);

// Eliminate until check_m2 holds; every step is truncated and the report
// records the cumulative truncation degree.
struct ReductionResult {
    IdealPresentation reduced;
    std::vector<EliminationResult> steps;
    int truncation = 0;
};
ReductionResult reduce_to_minimal_embedding(const IdealPresentation& ideal, int truncation);

enum class ContractionVerdict { Contracting, NotContracting, Boundary };

struct ExtensionReport {
    bool linear_invertible = false;
    ContractionVerdict contraction = ContractionVerdict::Boundary;
    bool spectrum_rational = false;
    bool checked_invariance = false;
    bool invariant = false;
    int degree_bound = 0;
};

// Decidable consequences of being a good contracting extension: invertible
// linear part, eigenvalue moduli below 1 (exact for Gaussian-rational
// spectra, Schur-Cohn sign tests otherwise), and preservation of the ideal
// up to the stated degree bound.
ExtensionReport check_extension(const PolyMap& f, const IdealPresentation& ideal,
                                std::optional<int> degree_bound = {});

// All roots of p strictly inside the unit disk, decided by exact sign tests
// on modulus-squared values; Boundary marks the degenerate case.
ContractionVerdict schur_cohn_unit_disk(std::vector<GaussianRational> poly);

}  // namespace qh
