#pragma once

#include <gmpxx.h>

#include <vector>

namespace qh {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;  // row-major

// Canonical row Hermite normal form: echelon rows, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hnf_rows(IntMatrix rows);

// Basis (as rows) of the integer kernel {v : M v = 0}, i.e. the full lattice
// ker_Q(M) intersected with Z^n, returned in canonical HNF form.
IntMatrix kernel_lattice(const IntMatrix& m, int cols);

// Does v lie in the lattice generated by the rows of `basis` (given in HNF)?
bool lattice_contains(const IntMatrix& hnf_basis, const IntVector& v);

}  // namespace qh
