#pragma once

#include <optional>
#include <variant>

#include "quasihom/normalform.hpp"

namespace qh {

struct IdealPresentation {
    int dim = 0;
    std::vector<Polynomial> generators;

    int size() const { return static_cast<int>(generators.size()); }
    int max_degree() const;
    void validate() const;  // generators vanish at the origin, none zero
};

struct MembershipWitness {
    bool member = false;
    std::vector<Polynomial> cofactors;  // one per generator
    std::optional<WeightClass> failing_class;
    Polynomial residual;
};

// Exact membership of f in the ideal generated by lambda-homogeneous
// polynomials, decided class by class with explicit cofactors.
MembershipWitness graded_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                    const OrderedSpectrum& s);

// Membership modulo m^{degree_bound+1} with polynomial cofactors, by
// total-degree-graded linear algebra.
std::optional<std::vector<Polynomial>> membership_mod_degree(
    const Polynomial& f, const std::vector<Polynomial>& gens, int degree_bound);

// Nakayama-style minimalization at the stated bound: discards generators
// expressible in the others modulo m^{degree_bound+1}; survivors have
// linearly independent images in I/mI up to that degree.
struct MinimalResult {
    IdealPresentation minimal;
    std::vector<int> kept;  // indices into the input list
    struct Discard {
        int index;
        std::vector<Polynomial> cofactors;  // over the kept generators
    };
    std::vector<Discard> discarded;
    int degree_bound = 0;
};
MinimalResult minimal_generators(const IdealPresentation& ideal, const OrderedSpectrum& s,
                                 int degree_bound);

// phi^(i) o F = sum_j A^i_j phi^(j), certified for every class <= bound.
struct CofactorMatrix {
    std::vector<std::vector<Polynomial>> entries;
    GMatrix constant_part;  // A0
    WeightClass bound;
};

struct NotInvariantInfo {
    int generator_index = -1;
    WeightClass failing_class;
    Polynomial residual;  // the target piece at the failing class
};

std::variant<CofactorMatrix, NotInvariantInfo> cofactor_matrix(
    const IdealPresentation& ideal, const PolyMap& f, const OrderedSpectrum& s,
    const WeightClass& bound, PivotOrder pivot = PivotOrder::FirstRow);

// Covers every class of the generators and of their compositions with f.
WeightClass default_class_bound(const IdealPresentation& ideal, const PolyMap& f,
                                const OrderedSpectrum& s);

// Linear change of generators putting A0 in lower Jordan form, with the
// cofactor matrix recomputed for the new generators.
struct JordanizedPresentation {
    IdealPresentation ideal;
    CofactorMatrix cofactors;
    GMatrix transition;  // new generators = transition * old generators
};
JordanizedPresentation jordanize_A0(const IdealPresentation& ideal, const PolyMap& f,
                                    const OrderedSpectrum& s, const CofactorMatrix& a);

struct EqualityCertificate {
    bool ok = false;
    int failing_index = -1;
    Polynomial residual;
    std::vector<std::vector<Polynomial>> b;  // phi^(i) = sum_j B^i_j P^(j), exact
    GMatrix b0;                              // unit lower triangular
    std::vector<std::vector<Polynomial>> beta;  // truncated inverse, P = beta * phi
    int witness_degree = 0;
};

struct FiltrationReport {
    bool ok = false;
    int failing_index = -1;
    std::vector<std::vector<Polynomial>> cofactors;  // P^(i) o F over P^(1..i)
};

struct QHResult {
    int dim = 0;
    std::vector<Polynomial> generators_P;
    std::vector<WeightClass> classes;  // non-decreasing
    std::vector<long> weights;
    std::vector<long> degrees;
    GMatrix basis_change;        // presented = basis_change * minimal
    IdealPresentation minimal;   // minimal presentation (after any transport)
    IdealPresentation presented; // jordanized, class-ordered generators
    CofactorMatrix cofactors;    // for the presented generators
    EqualityCertificate equality;
    FiltrationReport filtration;
    std::optional<NormalFormCertificate> normalization;
    std::vector<int> kept;       // minimalization bookkeeping
    std::vector<MinimalResult::Discard> discarded;
    OrderedSpectrum spectrum;
    int truncation_degree = 0;
};

// Extraction of the weighted homogeneous generators P^(i) from a Jordanized
// presentation, reordered so the classes are non-decreasing.
QHResult extract_generators(const JordanizedPresentation& jp, const OrderedSpectrum& s);

// I <= J via exact graded membership (matrix B), J <= I via the unit
// triangular constant part B0 plus a truncated inverse witness.
EqualityCertificate verify_equality(const IdealPresentation& presented, const QHResult& result,
                                    const OrderedSpectrum& s, int witness_degree);

// <P^(1), ..., P^(i)> is invariant under f for every i.
FiltrationReport verify_filtration(const QHResult& result, const PolyMap& f,
                                   const OrderedSpectrum& s);

struct PipelineOptions {
    std::optional<int> degree;            // total-degree truncation override
    std::optional<Exponent> class_bound;  // class bound override (any member)
};

// Full pipeline: normalize f if needed (transporting the ideal through the
// conjugacy), minimalize, solve cofactors, Jordanize A0, extract, verify.
QHResult quasi_homogenize(const IdealPresentation& ideal, const PolyMap& f,
                          const PipelineOptions& opts = {});

}  // namespace qh
