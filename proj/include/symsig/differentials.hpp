#ifndef SYMSIG_DIFFERENTIALS_HPP
#define SYMSIG_DIFFERENTIALS_HPP

#include <optional>

#include "symsig/hilbert.hpp"

namespace symsig {

/// Jacobian of the generators of an ideal: entry (i,j) = d f_i / d x_j.
struct JacobianMatrix {
    Ideal source;
    std::vector<std::vector<Polynomial>> rows;  // s x n
};
JacobianMatrix jacobian(const Ideal& I);

/// Graded presentation by generators and relations over R = P/I. Rows of
/// `relations` are the relations, columns are indexed by the generators.
struct PresentationMatrix {
    Ideal ambient;
    std::vector<std::string> generator_labels;
    std::vector<std::uint64_t> generator_degrees;
    std::vector<std::vector<Polynomial>> relations;
    std::uint64_t sym_power = 1;
};

/// Presentation of the differential module: generators dx_1..dx_n in degree 1,
/// one relation per ideal generator (the transposed Jacobian).
PresentationMatrix omega_presentation(const Ideal& I);

/// Presentation of the q-th symmetric power: generators (dX)^nu for |nu| = q,
/// relations (dX)^mu * (sum_j df_i/dx_j dx_j) for |mu| = q-1. q = 1 matches
/// omega_presentation.
PresentationMatrix sym_power_presentation(const Ideal& I, std::uint64_t q);

enum class FreeRankMethod { column_test, syzygy_test };

struct ColumnTestRecord {
    std::size_t column;
    MembershipResult membership;
};

struct FreeRankResult {
    bool positive = false;
    FreeRankMethod method = FreeRankMethod::syzygy_test;

    // column test
    std::vector<ColumnTestRecord> columns;
    std::optional<std::size_t> positive_column;

    // syzygy test
    SyzygyBasis syzygies;
    std::optional<std::size_t> witness_generator;  // index into syzygies.reduced
    std::optional<std::size_t> witness_entry;
    /// Entry degrees of every reduced syzygy generator (-1 for zero entries);
    /// the zero-verdict evidence.
    std::vector<std::vector<long long>> degree_profile;
    /// Presentation with no relations: trivially positive, no syzygy data.
    bool free_presentation = false;
};

/// Free-rank positivity via a homogeneous syzygy of the transposed relation
/// matrix with a nonzero scalar entry.
FreeRankResult freerank_positive_syzygy(const PresentationMatrix& pres,
                                        const GroebnerOptions& opts = {});

/// Free-rank positivity of the differential module via per-column membership:
/// positive iff some Jacobian column is an R-combination of the others.
FreeRankResult freerank_omega_column_test(const JacobianMatrix& J,
                                          const GroebnerOptions& opts = {});

/// Ideal cutting out the singular locus: I plus the h x h minors of the
/// Jacobian, h = n - dim(P/I). For a hypersurface this is (f, all partials).
Ideal singular_locus_ideal(const Ideal& I, const GroebnerOptions& opts = {});

/// Singular locus at most the origin (Krull dimension <= 0).
bool isolated_singularity_check(const Ideal& I, const GroebnerOptions& opts = {});

/// dim P/I == n - s for the s given generators.
bool complete_intersection_check(const Ideal& I, const GroebnerOptions& opts = {});

struct CheckRecord {
    std::string name;
    bool passed = false;
    bool asserted = false;  // user-asserted rather than computed
    std::string detail;
};

struct SymCheck {
    std::uint64_t q = 0;
    std::size_t generators = 0;
    std::size_t relations = 0;
    bool positive = false;
};

/// Joint report shape of the hypersurface and complete-intersection pipelines.
struct DifferentialSignatureReport {
    enum class Status { exact_zero, regular_one, conditional_zero, undecided };

    Ideal ideal;
    std::size_t nvars = 0;
    std::size_t num_equations = 0;
    JacobianMatrix jac;
    std::vector<CheckRecord> checks;
    std::optional<FreeRankResult> column_test;
    std::optional<FreeRankResult> syzygy_test;
    bool freerank_omega_positive = false;
    std::vector<SymCheck> sym_checks;
    Status status = Status::undecided;
    std::string reason;
    std::vector<std::string> warnings;

    bool check_passed(const std::string& name) const;
};

struct HypersurfaceOptions {
    std::uint64_t max_q = 3;
    bool assume_domain = false;
    GroebnerOptions groebner;
};

/// Signature pipeline for R = P/(f): verifies the hypotheses, computes the
/// free rank of the differential module by both methods (which must agree),
/// cross-checks the symmetric powers up to max_q, and emits the exact zero
/// verdict only when every hypothesis is verified or asserted.
DifferentialSignatureReport hypersurface_signature(const Polynomial& f,
                                                   const HypersurfaceOptions& opts = {});

struct CiOptions {
    std::uint64_t max_q = 1;
    bool assume_domain = false;
    bool assume_reflexive = false;
    GroebnerOptions groebner;
};

/// Free-rank / signature workflow for complete intersections and other
/// quotients given by several equations. Outside the reflexivity gate
/// (complete intersection, isolated singularity, degrees >= 2, n >= 2s+2)
/// the zero verdict is labelled conditional-on-reflexivity.
DifferentialSignatureReport ci_freerank(const Ideal& I, const CiOptions& opts = {});

}  // namespace symsig

#endif
