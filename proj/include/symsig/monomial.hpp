#ifndef SYMSIG_MONOMIAL_HPP
#define SYMSIG_MONOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "symsig/errors.hpp"

namespace symsig {

/// Exponent vector with cached total degree.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    Monomial(std::initializer_list<std::uint32_t> exps);
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t power = 1);

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint64_t degree() const { return deg_; }
    bool is_constant() const { return deg_ == 0; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// this / o; pre: o.divides(*this).
    Monomial operator/(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<std::uint32_t> e_;
    std::uint64_t deg_;
};

enum class BaseOrder { grevlex, lex };

/// Strict three-way comparison: +1 when a > b in the given global order.
int compare_monomials(const Monomial& a, const Monomial& b, BaseOrder order);

/// All exponent vectors of total degree q in n variables, sorted descending in
/// the given order. Size C(n+q-1, q).
std::vector<Monomial> monomials_of_degree(std::uint64_t q, std::size_t n,
                                          BaseOrder order = BaseOrder::grevlex);

mpz_class binomial(std::uint64_t n, std::uint64_t k);

}  // namespace symsig

#endif
