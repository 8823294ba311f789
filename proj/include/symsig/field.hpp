#ifndef SYMSIG_FIELD_HPP
#define SYMSIG_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "symsig/errors.hpp"

namespace symsig {

enum class FieldKind { rational, prime, cyclotomic };

/// Euler totient via trial division.
unsigned euler_phi(unsigned m);

/// Deterministic trial-division primality test for small moduli.
bool is_small_prime(std::uint64_t p);

/// Coefficients of the m-th cyclotomic polynomial, index = power of x.
/// Monic of degree phi(m); computed by dividing x^m - 1 by the proper-divisor
/// cyclotomics.
std::vector<mpq_class> cyclotomic_polynomial(unsigned m);

/// Immutable description of a coefficient field. Instances are interned and
/// live for the whole process, so raw pointers are stable and equality is
/// pointer equality.
class FieldDescriptor {
public:
    static const FieldDescriptor* rationals();
    static const FieldDescriptor* prime_field(std::uint64_t p);
    static const FieldDescriptor* cyclotomic(unsigned conductor);

    /// Largest accepted cyclotomic conductor (default 120).
    static unsigned conductor_limit();
    static void set_conductor_limit(unsigned limit);

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }
    std::uint64_t prime() const { return p_; }
    unsigned conductor() const { return conductor_; }
    /// Dimension over the prime subfield: 1, 1, or phi(m).
    unsigned degree() const { return degree_; }
    /// Coefficients of the modulus Phi_m (cyclotomic fields only).
    const std::vector<mpq_class>& modulus() const { return modulus_; }
    std::string name() const;

private:
    FieldDescriptor() = default;
    FieldKind kind_ = FieldKind::rational;
    std::uint64_t p_ = 0;
    unsigned conductor_ = 0;
    unsigned degree_ = 1;
    std::vector<mpq_class> modulus_;
};

using FieldRef = const FieldDescriptor*;

/// A value in one of the supported exact fields. Immutable in spirit: all
/// arithmetic returns fresh values in canonical form (rationals in lowest
/// terms, residues in [0,p), cyclotomic vectors reduced mod Phi_m).
class FieldElement {
public:
    FieldElement() : field_(FieldDescriptor::rationals()), value_(mpq_class(0)) {}

    static FieldElement zero(FieldRef f);
    static FieldElement one(FieldRef f);
    /// Canonical image of an integer.
    static FieldElement from_integer(long v, FieldRef f);
    static FieldElement from_integer(const mpz_class& v, FieldRef f);
    /// Canonical image of a rational; throws NonInvertibleDenominator when the
    /// denominator vanishes mod p.
    static FieldElement from_rational(const mpq_class& q, FieldRef f);
    /// zeta_m^k in a cyclotomic field.
    static FieldElement zeta_power(unsigned k, FieldRef f);

    FieldRef field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in the image of Q (always for rational and
    /// prime fields; for cyclotomics, when only the constant coordinate is set).
    bool is_rational() const;
    /// Value as a rational; pre: is_rational() and characteristic 0.
    mpq_class rational_value() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Canonical (non-algebraic) total order; used for deterministic
    /// deduplication and sorting of group elements.
    static int compare(const FieldElement& a, const FieldElement& b);

    /// Scalar rendering: "5/6", "3"; cyclotomic values render as a polynomial
    /// in z, e.g. "z^2+1" (used in matrices and reports, not in polynomial
    /// term printing, which distributes z-powers).
    std::string str() const;

    const mpq_class& rational_raw() const { return std::get<mpq_class>(value_); }
    std::uint64_t prime_residue() const { return std::get<std::uint64_t>(value_); }
    const std::vector<mpq_class>& cyclo_coords() const {
        return std::get<std::vector<mpq_class>>(value_);
    }

private:
    FieldElement(FieldRef f, std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>> v)
        : field_(f), value_(std::move(v)) {}
    void check_same_field(const FieldElement& o) const;

    FieldRef field_;
    std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>> value_;
};

}  // namespace symsig

#endif
