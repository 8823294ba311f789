#include "symsig/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace symsig {

namespace {

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> out;
    for (const auto& g : gb.elements) out.push_back(g.front().mono);
    return out;
}

/// Keep only minimal generators of the monomial ideal.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return compare_monomials(a, b, BaseOrder::grevlex) < 0;
    });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool divisible = false;
        for (const auto& k : out)
            if (k.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    return out;
}

}  // namespace

int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
    for (const auto& m : gens)
        if (m.is_constant()) return -1;
    if (nvars > 20) throw Error("dimension search limited to 20 variables");
    int best = -1;
    for (std::uint32_t subset = 0; subset < (1u << nvars); ++subset) {
        // Independent iff no generator's support is contained in the subset.
        bool independent = true;
        for (const auto& m : gens) {
            bool contained = true;
            for (std::size_t i = 0; i < nvars; ++i)
                if (m[i] > 0 && !(subset & (1u << i))) {
                    contained = false;
                    break;
                }
            if (contained) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, static_cast<int>(__builtin_popcount(subset)));
    }
    return best;
}

int krull_dimension_from_basis(const GroebnerBasis& gb) {
    return monomial_ideal_dimension(minimalize(leading_monomials(gb)), gb.ring->nvars());
}

int krull_dimension(const Ideal& I, const GroebnerOptions& opts) {
    if (I.gens.empty()) return static_cast<int>(I.ring->nvars());
    return krull_dimension_from_basis(groebner_ideal(I, opts));
}

namespace {

void poly_add_scaled(std::vector<mpz_class>& a, const std::vector<mpz_class>& b, long sign,
                     std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
}

std::vector<mpz_class> hilbert_numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {mpz_class(1)};
    if (gens[0].is_constant()) return {};
    // Pivot variable: the one meeting the most generators.
    std::size_t pivot = 0, pivot_count = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
        std::size_t count = 0;
        for (const auto& m : gens)
            if (m[v] > 0) ++count;
        if (count > pivot_count) {
            pivot_count = count;
            pivot = v;
        }
    }
    if (pivot_count <= 1) {
        // Pairwise disjoint supports: a regular sequence of monomials.
        std::vector<mpz_class> num{mpz_class(1)};
        for (const auto& m : gens) {
            std::vector<mpz_class> factor(m.degree() + 1, mpz_class(0));
            factor[0] = 1;
            factor[m.degree()] = -1;
            std::vector<mpz_class> prod(num.size() + factor.size() - 1, mpz_class(0));
            for (std::size_t i = 0; i < num.size(); ++i)
                for (std::size_t j = 0; j < factor.size(); ++j) prod[i + j] += num[i] * factor[j];
            num = std::move(prod);
        }
        return num;
    }
    // N(I) = N(I + (x)) + t * N(I : x)
    std::vector<Monomial> plus;
    plus.push_back(Monomial::unit(nvars, pivot));
    for (const auto& m : gens)
        if (m[pivot] == 0) plus.push_back(m);
    std::vector<Monomial> colon;
    for (const auto& m : gens) {
        if (m[pivot] > 0) {
            colon.push_back(m / Monomial::unit(nvars, pivot));
        } else {
            colon.push_back(m);
        }
    }
    std::vector<mpz_class> out = hilbert_numerator_rec(std::move(plus), nvars);
    std::vector<mpz_class> c = hilbert_numerator_rec(std::move(colon), nvars);
    poly_add_scaled(out, c, 1, 1);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

std::vector<mpz_class> monomial_hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    return hilbert_numerator_rec(std::move(gens), nvars);
}

mpz_class HilbertSeries::coefficient(std::uint64_t q) const {
    // [t^q] numerator/(1-t)^n with [t^j] 1/(1-t)^n = C(n-1+j, n-1).
    mpz_class total = 0;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
        if (k > q) break;
        if (denominator_power == 0) {
            if (k == q) total += numerator[k];
        } else {
            total += numerator[k] * binomial(denominator_power - 1 + (q - k),
                                             denominator_power - 1);
        }
    }
    return total;
}

std::string HilbertSeries::str() const {
    std::ostringstream os;
    os << "(";
    if (numerator.empty()) os << "0";
    bool first = true;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        if (numerator[i] == 0) continue;
        mpz_class c = numerator[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        mpz_class a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    os << ") / (1-t)^" << denominator_power;
    return os.str();
}

HilbertSeries hilbert_series_from_basis(const GroebnerBasis& gb, std::size_t nvars) {
    HilbertSeries h;
    h.denominator_power = static_cast<unsigned>(nvars);
    h.numerator = monomial_hilbert_numerator(minimalize(leading_monomials(gb)), nvars);
    return h;
}

HilbertSeries hilbert_series(const Ideal& I, const GroebnerOptions& opts) {
    if (!I.is_homogeneous()) throw InputError("hilbert_series needs a homogeneous ideal");
    if (I.gens.empty()) {
        HilbertSeries h;
        h.denominator_power = static_cast<unsigned>(I.ring->nvars());
        h.numerator = {mpz_class(1)};
        return h;
    }
    return hilbert_series_from_basis(groebner_ideal(I, opts), I.ring->nvars());
}

}  // namespace symsig
