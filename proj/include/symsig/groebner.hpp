#ifndef SYMSIG_GROEBNER_HPP
#define SYMSIG_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "symsig/polynomial.hpp"

namespace symsig {

/// Order on free-module terms (component, monomial). Components below
/// `elim_split` form an upper block that dominates every term of the lower
/// block; inside a block the order is term-over-position on the base order,
/// ties going to the smaller component index. elim_split = 0 gives the plain
/// term-over-position order used for all non-elimination computations.
struct ModuleOrder {
    BaseOrder base = BaseOrder::grevlex;
    std::uint32_t rank = 1;
    std::uint32_t elim_split = 0;

    int compare(std::uint32_t ca, const Monomial& ma, std::uint32_t cb, const Monomial& mb) const;
};

struct ModTerm {
    std::uint32_t comp;
    Monomial mono;
    FieldElement coeff;
};

/// Free-module element: terms sorted strictly descending in a ModuleOrder.
using ModVec = std::vector<ModTerm>;

ModVec mv_from_terms(std::vector<ModTerm> terms, const ModuleOrder& order);
ModVec mv_from_vector(const std::vector<Polynomial>& v, const ModuleOrder& order);
/// Components of a ModVec as polynomials (length = rank).
std::vector<Polynomial> mv_to_vector(const ModVec& v, std::uint32_t rank, const RingRef& ring);
ModVec mv_from_poly(const Polynomial& p);
Polynomial mv_to_poly(const ModVec& v, const RingRef& ring);
ModVec mv_sub_mul(const ModVec& f, const ModVec& g, const Monomial& m, const FieldElement& c,
                  const ModuleOrder& order);  // f - g*(m,c)
ModVec mv_scale(ModVec f, const FieldElement& c);
bool mv_equal(const ModVec& a, const ModVec& b);
std::string mv_str(const ModVec& v, std::uint32_t rank, const RingRef& ring);

struct GroebnerOptions {
    std::uint64_t pair_limit = 1'000'000;
    bool track_cofactors = false;
};

/// Reduced Groebner basis of a submodule of a free module (rank 1 = ideal).
/// Elements are monic, pairwise tail-reduced, sorted ascending by leading
/// term; this representation is unique, so repeated runs are bit-identical.
struct GroebnerBasis {
    RingRef ring;
    ModuleOrder order;
    std::vector<ModVec> elements;
    /// When cofactors were tracked: elements[i] = sum_j cofactors[i][j] * input[j].
    std::vector<std::vector<Polynomial>> cofactors;
    std::vector<ModVec> input;
    std::uint64_t input_hash = 0;

    bool is_module() const { return order.rank > 1; }
};

GroebnerBasis buchberger(std::vector<ModVec> generators, RingRef ring, ModuleOrder order,
                         const GroebnerOptions& opts = {});

struct NormalFormResult {
    ModVec remainder;
    std::vector<Polynomial> cofactors;  // over gb.elements
};

/// Division with remainder: f = sum cofactors[k]*gb.elements[k] + remainder,
/// no remainder term divisible by a basis leading term.
NormalFormResult normal_form(const ModVec& f, const GroebnerBasis& gb);

/// Post-hoc Buchberger criterion: every S-pair of the basis reduces to zero.
bool verify_buchberger_criterion(const GroebnerBasis& gb);

// ---------------------------------------------------------------------------
// Ideal-level interface

struct Ideal {
    RingRef ring;
    std::vector<Polynomial> gens;

    bool is_homogeneous() const;
    void validate() const;  // nonzero generators in the common ring
};

GroebnerBasis groebner_ideal(const Ideal& I, const GroebnerOptions& opts = {});

struct PolyNormalForm {
    Polynomial remainder;
    std::vector<Polynomial> cofactors;
};
PolyNormalForm normal_form_poly(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& f, const Ideal& I, const GroebnerOptions& opts = {});

// ---------------------------------------------------------------------------
// Computations over R = P/I, realized by lifting to P and adjoining I.

/// Generators of I * (free module of the given rank): f*e_c for each
/// generator f and component c.
std::vector<std::vector<Polynomial>> ideal_lift_rows(const Ideal& I, std::size_t rank);

struct MembershipResult {
    bool member = false;
    std::vector<Polynomial> remainder;      // in P^rank
    std::vector<Polynomial> nf_cofactors;   // over gb.elements
    std::vector<Polynomial> gen_cofactors;  // over generators ++ lift rows
    GroebnerBasis gb;                       // cofactors tracked
};

/// Does `target` lie in the R-submodule of R^rank spanned by `generators`?
/// Lift rows for I are appended internally (their cofactors appear after the
/// user generators' in gen_cofactors).
MembershipResult module_membership(const std::vector<Polynomial>& target,
                                   const std::vector<std::vector<Polynomial>>& generators,
                                   std::size_t rank, const Ideal& I,
                                   const GroebnerOptions& opts = {});

struct SyzygyBasis {
    std::size_t num_rows = 0;
    /// Syzygies of the rows over R = P/I, entries in normal form mod I.
    std::vector<std::vector<Polynomial>> reduced;
    /// The same syzygies before reduction: exact relations in P, i.e.
    /// sum_i lifted[g][i]*rows[i] + sum_j lift_cofactors[g][j]*(lift row j) = 0.
    std::vector<std::vector<Polynomial>> lifted;
    std::vector<std::vector<Polynomial>> lift_cofactors;
};

/// Generating set of {u in R^k : sum_i u_i * rows[i] = 0 in R^rank},
/// homogeneous whenever rows and I are graded. Computed by module
/// elimination: a basis of the module spanned by (row_i | e_i) and the lift
/// rows (f*e_c | 0) under a block order; the pure tracking-block elements are
/// the syzygies.
SyzygyBasis syzygy_basis(const std::vector<std::vector<Polynomial>>& rows, std::size_t rank,
                         const Ideal& I, const GroebnerOptions& opts = {});

std::uint64_t fnv1a64(const std::string& data);

}  // namespace symsig

#endif
