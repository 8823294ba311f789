#ifndef SYMSIG_POLYNOMIAL_HPP
#define SYMSIG_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symsig/field.hpp"
#include "symsig/monomial.hpp"

namespace symsig {

class PolyRing;
using RingRef = std::shared_ptr<const PolyRing>;

/// Descriptor of a standard-graded polynomial ring: named variables over a
/// coefficient field with an active global monomial order.
class PolyRing {
public:
    static RingRef make(std::vector<std::string> variables, FieldRef field,
                        BaseOrder order = BaseOrder::grevlex);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    std::optional<std::size_t> variable_index(const std::string& name) const;
    FieldRef field() const { return field_; }
    BaseOrder order() const { return order_; }
    bool same_as(const PolyRing& o) const;
    std::string describe() const;

private:
    PolyRing() = default;
    std::vector<std::string> vars_;
    FieldRef field_ = nullptr;
    BaseOrder order_ = BaseOrder::grevlex;
};

struct Term {
    Monomial mono;
    FieldElement coeff;
};

/// Sparse multivariate polynomial: terms strictly decreasing in the ring's
/// order, no zero coefficients, no duplicate monomials.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero(RingRef ring);
    static Polynomial constant(RingRef ring, FieldElement c);
    static Polynomial constant(RingRef ring, long c);
    static Polynomial from_term(RingRef ring, Monomial m, FieldElement c);
    static Polynomial variable(RingRef ring, std::size_t i);
    /// From an unsorted term list; sorts, combines duplicates, drops zeros.
    static Polynomial from_terms(RingRef ring, std::vector<Term> terms);

    const RingRef& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Nonzero scalar (degree-0) polynomial.
    bool is_unit_scalar() const { return !is_zero() && terms_[0].mono.is_constant(); }
    const Term& leading_term() const;
    /// Total degree; -1 for the zero polynomial.
    long long degree() const;
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial times_monomial(const Monomial& m, const FieldElement& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Formal partial derivative; in characteristic p, exponents divisible by
    /// p vanish.
    Polynomial derivative(std::size_t var) const;

    /// Canonical text form; parse(str()) reproduces the polynomial exactly.
    std::string str() const;

private:
    void check_same_ring(const Polynomial& o) const;
    RingRef ring_;
    std::vector<Term> terms_;
};

/// Parses the polynomial input language (see README for the grammar).
/// Throws SyntaxError, UnknownVariable, BadCoefficient.
Polynomial parse_polynomial(const std::string& text, const RingRef& ring);

/// Parses a pure coefficient expression (integers, rationals, z-powers).
FieldElement parse_field_element(const std::string& text, FieldRef field);

/// Verifies the Euler identity sum_i x_i df/dx_i = deg(f) * f for a
/// homogeneous f. Throws DegreeNotInvertible when char | deg f.
bool euler_check(const Polynomial& f);

}  // namespace symsig

#endif
