#ifndef SYMSIG_HILBERT_HPP
#define SYMSIG_HILBERT_HPP

#include "symsig/groebner.hpp"

namespace symsig {

/// Krull dimension of P/I via the largest variable subset independent modulo
/// the leading-term ideal. The unit ideal has dimension -1 by convention.
int krull_dimension(const Ideal& I, const GroebnerOptions& opts = {});
int krull_dimension_from_basis(const GroebnerBasis& gb);

/// Brute-force dimension of P/(monomial ideal): maximum subset of variables
/// meeting the support of no generator. Test oracle and engine back end.
int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars);

/// Hilbert series of a graded quotient P/I written as numerator/(1-t)^n.
struct HilbertSeries {
    std::vector<mpz_class> numerator;  // index = power of t
    unsigned denominator_power = 0;    // n

    /// dim_k (P/I)_q.
    mpz_class coefficient(std::uint64_t q) const;
    std::string str() const;
};

HilbertSeries hilbert_series(const Ideal& I, const GroebnerOptions& opts = {});
HilbertSeries hilbert_series_from_basis(const GroebnerBasis& gb, std::size_t nvars);

/// Numerator of the Hilbert series of P/(monomial ideal), by pivot recursion.
std::vector<mpz_class> monomial_hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

}  // namespace symsig

#endif
