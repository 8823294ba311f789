#include "symsig/field.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace symsig {

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

bool is_small_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Dense univariate helpers over Q, index = power. Trailing zeros trimmed.
void uq_trim(std::vector<mpq_class>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<mpq_class> uq_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpq_class> c(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    uq_trim(c);
    return c;
}

// Exact division, remainder must vanish.
std::vector<mpq_class> uq_divexact(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    std::vector<mpq_class> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uq_trim(a);
    }
    if (!a.empty()) throw InternalConsistencyError("cyclotomic division left a remainder");
    uq_trim(q);
    return q;
}

}  // namespace

std::vector<mpq_class> cyclotomic_polynomial(unsigned m) {
    if (m < 1) throw InputError("cyclotomic conductor must be positive");
    // x^m - 1
    std::vector<mpq_class> num(m + 1, mpq_class(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) num = uq_divexact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

namespace {

std::mutex g_intern_mutex;

const FieldDescriptor* intern(std::unique_ptr<FieldDescriptor> d, std::uint64_t key,
                              std::map<std::uint64_t, std::unique_ptr<FieldDescriptor>>& table) {
    std::lock_guard<std::mutex> lock(g_intern_mutex);
    auto it = table.find(key);
    if (it == table.end()) it = table.emplace(key, std::move(d)).first;
    return it->second.get();
}

std::atomic<unsigned> g_conductor_limit{120};

}  // namespace

unsigned FieldDescriptor::conductor_limit() { return g_conductor_limit.load(); }
void FieldDescriptor::set_conductor_limit(unsigned limit) { g_conductor_limit.store(limit); }

const FieldDescriptor* FieldDescriptor::rationals() {
    static const FieldDescriptor* instance = [] {
        auto d = new FieldDescriptor();
        d->kind_ = FieldKind::rational;
        return d;
    }();
    return instance;
}

const FieldDescriptor* FieldDescriptor::prime_field(std::uint64_t p) {
    if (!is_small_prime(p)) throw InputError("prime field modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t(1) << 62)) throw InputError("prime field modulus too large");
    static std::map<std::uint64_t, std::unique_ptr<FieldDescriptor>> table;
    auto d = std::unique_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = FieldKind::prime;
    d->p_ = p;
    return intern(std::move(d), p, table);
}

const FieldDescriptor* FieldDescriptor::cyclotomic(unsigned conductor) {
    if (conductor < 1) throw InputError("cyclotomic conductor must be positive");
    if (conductor > conductor_limit())
        throw InputError("cyclotomic conductor " + std::to_string(conductor) +
                         " exceeds the configured bound " + std::to_string(conductor_limit()));
    static std::map<std::uint64_t, std::unique_ptr<FieldDescriptor>> table;
    auto d = std::unique_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = FieldKind::cyclotomic;
    d->conductor_ = conductor;
    d->degree_ = euler_phi(conductor);
    d->modulus_ = cyclotomic_polynomial(conductor);
    return intern(std::move(d), conductor, table);
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
        case FieldKind::rational: return "QQ";
        case FieldKind::prime: return "GF(" + std::to_string(p_) + ")";
        case FieldKind::cyclotomic: return "QQ(zeta_" + std::to_string(conductor_) + ")";
    }
    return "?";
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZero();
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw NonInvertibleDenominator("value not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t residue_of_mpz(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += mpz_class(static_cast<unsigned long>(p));
    return r.get_ui();
}

// Reduce a dense Q[x] vector modulo Phi_m (monic) and resize to phi(m).
std::vector<mpq_class> cyclo_reduce(std::vector<mpq_class> v, const FieldDescriptor* f) {
    const std::vector<mpq_class>& phi = f->modulus();
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = v.size(); i-- > deg;) {
        if (v[i] == 0) continue;
        mpq_class c = v[i];
        v[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) v[i - deg + j] -= c * phi[j];
    }
    v.resize(deg, mpq_class(0));
    return v;
}

}  // namespace

FieldElement FieldElement::zero(FieldRef f) { return from_integer(0L, f); }
FieldElement FieldElement::one(FieldRef f) { return from_integer(1L, f); }

FieldElement FieldElement::from_integer(long v, FieldRef f) { return from_integer(mpz_class(v), f); }

FieldElement FieldElement::from_integer(const mpz_class& v, FieldRef f) {
    switch (f->kind()) {
        case FieldKind::rational: return FieldElement(f, mpq_class(v));
        case FieldKind::prime: return FieldElement(f, residue_of_mpz(v, f->prime()));
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> coords(f->degree(), mpq_class(0));
            coords[0] = v;
            return FieldElement(f, std::move(coords));
        }
    }
    throw InternalConsistencyError("bad field kind");
}

FieldElement FieldElement::from_rational(const mpq_class& q, FieldRef f) {
    switch (f->kind()) {
        case FieldKind::rational: {
            mpq_class v = q;
            v.canonicalize();
            return FieldElement(f, std::move(v));
        }
        case FieldKind::prime: {
            mpq_class v = q;
            v.canonicalize();
            std::uint64_t den = residue_of_mpz(v.get_den(), f->prime());
            if (den == 0)
                throw NonInvertibleDenominator("denominator of " + v.get_str() +
                                               " vanishes mod " + std::to_string(f->prime()));
            std::uint64_t num = residue_of_mpz(v.get_num(), f->prime());
            return FieldElement(f, mulmod_u64(num, invmod_u64(den, f->prime()), f->prime()));
        }
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> coords(f->degree(), mpq_class(0));
            coords[0] = q;
            coords[0].canonicalize();
            return FieldElement(f, std::move(coords));
        }
    }
    throw InternalConsistencyError("bad field kind");
}

FieldElement FieldElement::zeta_power(unsigned k, FieldRef f) {
    if (f->kind() != FieldKind::cyclotomic)
        throw FieldMismatch("zeta literal in a non-cyclotomic field");
    k %= f->conductor();
    std::vector<mpq_class> v(k + 1, mpq_class(0));
    v[k] = 1;
    return FieldElement(f, cyclo_reduce(std::move(v), f));
}

bool FieldElement::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::rational: return rational_raw() == 0;
        case FieldKind::prime: return prime_residue() == 0;
        case FieldKind::cyclotomic: {
            for (const auto& c : cyclo_coords())
                if (c != 0) return false;
            return true;
        }
    }
    return false;
}

bool FieldElement::is_one() const { return *this == one(field_); }

bool FieldElement::is_rational() const {
    if (field_->kind() != FieldKind::cyclotomic) return true;
    const auto& v = cyclo_coords();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

mpq_class FieldElement::rational_value() const {
    switch (field_->kind()) {
        case FieldKind::rational: return rational_raw();
        case FieldKind::cyclotomic:
            if (!is_rational()) throw InternalConsistencyError("cyclotomic value is not rational");
            return cyclo_coords()[0];
        case FieldKind::prime:
            throw FieldMismatch("no canonical rational value in positive characteristic");
    }
    throw InternalConsistencyError("bad field kind");
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("operands live in different fields: " + field_->name() + " vs " +
                            o.field_->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    switch (field_->kind()) {
        case FieldKind::rational: return FieldElement(field_, mpq_class(rational_raw() + o.rational_raw()));
        case FieldKind::prime: {
            std::uint64_t p = field_->prime();
            std::uint64_t s = prime_residue() + o.prime_residue();
            if (s >= p) s -= p;
            return FieldElement(field_, s);
        }
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> v = cyclo_coords();
            const auto& w = o.cyclo_coords();
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
            return FieldElement(field_, std::move(v));
        }
    }
    throw InternalConsistencyError("bad field kind");
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    switch (field_->kind()) {
        case FieldKind::rational: return FieldElement(field_, mpq_class(-rational_raw()));
        case FieldKind::prime: {
            std::uint64_t r = prime_residue();
            return FieldElement(field_, r == 0 ? 0 : field_->prime() - r);
        }
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> v = cyclo_coords();
            for (auto& c : v) c = -c;
            return FieldElement(field_, std::move(v));
        }
    }
    throw InternalConsistencyError("bad field kind");
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    switch (field_->kind()) {
        case FieldKind::rational: return FieldElement(field_, mpq_class(rational_raw() * o.rational_raw()));
        case FieldKind::prime:
            return FieldElement(field_, mulmod_u64(prime_residue(), o.prime_residue(), field_->prime()));
        case FieldKind::cyclotomic: {
            const auto& a = cyclo_coords();
            const auto& b = o.cyclo_coords();
            std::vector<mpq_class> conv(a.size() + b.size() - 1, mpq_class(0));
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; j < b.size(); ++j)
                    if (b[j] != 0) conv[i + j] += a[i] * b[j];
            }
            return FieldElement(field_, cyclo_reduce(std::move(conv), field_));
        }
    }
    throw InternalConsistencyError("bad field kind");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    switch (field_->kind()) {
        case FieldKind::rational: return FieldElement(field_, mpq_class(1 / rational_raw()));
        case FieldKind::prime:
            return FieldElement(field_, invmod_u64(prime_residue(), field_->prime()));
        case FieldKind::cyclotomic: {
            // Extended Euclid in Q[x] against Phi_m, which is irreducible.
            std::vector<mpq_class> r0 = field_->modulus();
            std::vector<mpq_class> r1 = cyclo_coords();
            uq_trim(r1);
            std::vector<mpq_class> s0, s1{mpq_class(1)};
            while (!(r1.size() == 1)) {
                if (r1.empty()) throw InternalConsistencyError("Phi_m split during inversion");
                // divide r0 by r1
                std::vector<mpq_class> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
                                         mpq_class(0));
                std::vector<mpq_class> rem = r0;
                while (rem.size() >= r1.size() && !rem.empty()) {
                    mpq_class c = rem.back() / r1.back();
                    std::size_t shift = rem.size() - r1.size();
                    q[shift] += c;
                    for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
                    uq_trim(rem);
                }
                // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
                std::vector<mpq_class> qs = uq_mul(q, s1);
                std::vector<mpq_class> s2 = s0;
                if (s2.size() < qs.size()) s2.resize(qs.size(), mpq_class(0));
                for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
                uq_trim(s2);
                r0 = std::move(r1);
                r1 = std::move(rem);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            mpq_class lead = r1[0];
            for (auto& c : s1) c /= lead;
            return FieldElement(field_, cyclo_reduce(std::move(s1), field_));
        }
    }
    throw InternalConsistencyError("bad field kind");
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_) return false;
    switch (field_->kind()) {
        case FieldKind::rational: return rational_raw() == o.rational_raw();
        case FieldKind::prime: return prime_residue() == o.prime_residue();
        case FieldKind::cyclotomic: return cyclo_coords() == o.cyclo_coords();
    }
    return false;
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_)
        throw FieldMismatch("ordering values from different fields");
    switch (a.field_->kind()) {
        case FieldKind::rational: return cmp(a.rational_raw(), b.rational_raw());
        case FieldKind::prime:
            return a.prime_residue() < b.prime_residue() ? -1
                 : a.prime_residue() > b.prime_residue() ? 1 : 0;
        case FieldKind::cyclotomic: {
            const auto& u = a.cyclo_coords();
            const auto& v = b.cyclo_coords();
            for (std::size_t i = 0; i < u.size(); ++i) {
                int c = cmp(u[i], v[i]);
                if (c != 0) return c;
            }
            return 0;
        }
    }
    return 0;
}

std::string FieldElement::str() const {
    switch (field_->kind()) {
        case FieldKind::rational: return rational_raw().get_str();
        case FieldKind::prime: return std::to_string(prime_residue());
        case FieldKind::cyclotomic: {
            const auto& v = cyclo_coords();
            std::ostringstream os;
            bool first = true;
            for (std::size_t i = v.size(); i-- > 0;) {
                if (v[i] == 0) continue;
                mpq_class c = v[i];
                if (first) {
                    if (c < 0) { os << "-"; c = -c; }
                } else {
                    os << (c < 0 ? "-" : "+");
                    if (c < 0) c = -c;
                }
                first = false;
                if (i == 0) {
                    os << c.get_str();
                } else {
                    if (c != 1) os << c.get_str() << "*";
                    os << "z";
                    if (i > 1) os << "^" << i;
                }
            }
            if (first) os << "0";
            return os.str();
        }
    }
    return "?";
}

}  // namespace symsig
