#ifndef SYMSIG_INVARIANTS_HPP
#define SYMSIG_INVARIANTS_HPP

#include <optional>

#include "symsig/field.hpp"
#include "symsig/monomial.hpp"

namespace symsig {

using Matrix = std::vector<std::vector<FieldElement>>;

Matrix mat_identity(std::size_t n, FieldRef f);
Matrix mat_mul(const Matrix& a, const Matrix& b);
bool mat_equal(const Matrix& a, const Matrix& b);
int mat_compare(const Matrix& a, const Matrix& b);  // canonical total order
FieldElement mat_trace(const Matrix& a);
std::size_t mat_rank(Matrix a);
FieldElement mat_det(Matrix a);
/// Coefficients c_0..c_n of det(xI - A), c_n = 1. Characteristic 0 only.
std::vector<FieldElement> mat_charpoly(const Matrix& a);
std::string mat_str(const Matrix& a);

/// Finite subgroup of GL(n) over Q or a cyclotomic field, with the full
/// element list. Element 0 is the identity; the rest follow in breadth-first
/// product order, so the listing is deterministic.
struct MatrixGroup {
    std::size_t dim = 0;
    FieldRef field = nullptr;
    std::vector<Matrix> generators;
    std::vector<Matrix> elements;

    std::size_t order() const { return elements.size(); }
};

/// Closes the generator set under products. Throws ClosureCapExceeded past
/// `cap` elements and SingularGenerator for non-invertible input.
MatrixGroup group_closure(const std::vector<Matrix>& generators, std::size_t cap = 100000);

struct SmallnessResult {
    bool small = true;
    /// Index into elements of a pseudo-reflection when not small.
    std::optional<std::size_t> witness;
};

/// A pseudo-reflection is a non-identity element with rank(sigma - I) = 1.
SmallnessResult is_small(const MatrixGroup& G);

bool coprimality_check(const MatrixGroup& G, std::uint64_t characteristic);

/// Invariant-ring Hilbert series data: the group average of 1/det(I - t sigma)
/// as a reduced rational function with verified rational coefficients, plus
/// the expanded coefficients a_0..a_N and the ambient series b_q = C(n-1+q, n-1).
struct MolienData {
    std::size_t dim = 0;
    std::size_t group_order = 0;
    std::vector<mpq_class> numerator;
    std::vector<mpq_class> denominator;  // constant term 1
    std::vector<mpz_class> a;
    std::vector<mpz_class> b;
};

/// Expands every det(I - t sigma) inverse as a power series, averages
/// exactly, and asserts that each coefficient cancels to a nonnegative
/// integer (NonIntegerCoefficient otherwise). Cross-checked against trace
/// averaging for q <= min(N, 10).
MolienData molien_series(const MatrixGroup& G, std::size_t N);

/// Independent route: a_q = (1/|G|) sum_sigma trace(Sym^q sigma) via the
/// Newton recurrence on power sums of eigenvalues.
std::vector<mpq_class> molien_by_traces(const MatrixGroup& G, std::size_t N);

/// (sum_{q<=N} a_q) / (sum_{q<=N} b_q), exact.
mpq_class cumulative_ratio(const MolienData& M, std::size_t N);

struct ConvergenceRow {
    std::size_t N = 0;
    mpq_class ratio;
    mpq_class abs_error;
};

struct QuotientSignatureReport {
    std::size_t dim = 0;
    std::size_t group_order = 0;
    std::uint64_t characteristic = 0;
    bool small = false;
    bool coprime = false;
    mpq_class signature;  // exactly 1/|G|
    MolienData molien;
    std::vector<ConvergenceRow> table;
};

/// Verifies smallness and coprimality, then reports the exact signature
/// 1/|G| together with the cumulative-ratio convergence table. Throws
/// NotSmall (with witness) or CharacteristicDividesOrder on refusal.
QuotientSignatureReport quotient_signature(const MatrixGroup& G, std::uint64_t characteristic,
                                           std::size_t max_degree);

}  // namespace symsig

#endif
