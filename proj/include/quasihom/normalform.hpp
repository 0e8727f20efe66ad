#pragma once

#include "quasihom/polynomial.hpp"

namespace qh {

// Conjugacy certificate: conjugacy o original = normalized o conjugacy,
// exactly modulo total degree truncation_degree + 1.
struct NormalFormCertificate {
    PolyMap original;
    PolyMap normalized;
    PolyMap conjugacy;
    int truncation_degree = 0;
    OrderedSpectrum spectrum;  // ordered spectrum of the normalized map
};

struct LinearAnalysis {
    JordanForm jordan;
    OrderedSpectrum spectrum;
};

// Jordanize an invertible contracting linear part and read off its spectrum.
// Throws SingularLinearPart / IrrationalSpectrum / NotContracting.
LinearAnalysis analyze_linear_part(const GMatrix& m);

// Linear part lower Jordan with diagonal equal to the given nicely ordered
// spectrum, and every nonlinear term resonant. Such a map is triangular.
bool is_normal_form(const PolyMap& f, const OrderedSpectrum& s);

// Degree-by-degree elimination of non-resonant terms; the homological system
// at each degree is verified invertible before solving. For truncation
// degrees at or above resonance_bound the normalized map is the complete
// polynomial normal form. The resonant coefficients that remain are not
// unique across conjugacies; this returns the ones the scheme produces.
NormalFormCertificate poincare_dulac(const PolyMap& f, int truncation_degree);

// Recompute both sides of the conjugacy identity and compare exactly.
bool verify_conjugacy(const NormalFormCertificate& cert);

}  // namespace qh
