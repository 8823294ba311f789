#include "symsig/monomial.hpp"

#include <algorithm>
#include <limits>

namespace symsig {

namespace {

std::uint64_t sum_checked(const std::vector<std::uint32_t>& e) {
    std::uint64_t s = 0;
    for (auto x : e) s += x;
    return s;
}

}  // namespace

Monomial::Monomial(std::initializer_list<std::uint32_t> exps) : e_(exps), deg_(sum_checked(e_)) {}

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)), deg_(sum_checked(e_)) {}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, std::uint32_t power) {
    Monomial m(nvars);
    m.e_[var] = power;
    m.deg_ = power;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint64_t s = std::uint64_t(r.e_[i]) + o.e_[i];
        if (s > std::numeric_limits<std::uint32_t>::max())
            throw Error("monomial exponent overflow");
        r.e_[i] = static_cast<std::uint32_t>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    r.deg_ = deg_ - o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        deg += r.e_[i];
    }
    r.deg_ = deg;
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
}

int compare_monomials(const Monomial& a, const Monomial& b, BaseOrder order) {
    switch (order) {
        case BaseOrder::grevlex: {
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            // a > b iff the last index where they differ has a smaller exponent in a.
            for (std::size_t i = a.nvars(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
        case BaseOrder::lex: {
            for (std::size_t i = 0; i < a.nvars(); ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        }
    }
    return 0;
}

namespace {

void enumerate_degree(std::uint64_t q, std::size_t pos, std::vector<std::uint32_t>& cur,
                      std::vector<Monomial>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = static_cast<std::uint32_t>(q);
        out.push_back(Monomial(cur));
        return;
    }
    for (std::uint64_t e = q + 1; e-- > 0;) {
        cur[pos] = static_cast<std::uint32_t>(e);
        enumerate_degree(q - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::uint64_t q, std::size_t n, BaseOrder order) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(n, 0);
    enumerate_degree(q, 0, cur, out);
    std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) {
        return compare_monomials(a, b, order) > 0;
    });
    return out;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class r;
    if (k > n) return mpz_class(0);
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace symsig
