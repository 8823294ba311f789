#include "symsig/invariants.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace symsig {

Matrix mat_identity(std::size_t n, FieldRef f) {
    Matrix m(n, std::vector<FieldElement>(n, FieldElement::zero(f)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = FieldElement::one(f);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    FieldRef f = a[0][0].field();
    Matrix c(n, std::vector<FieldElement>(n, FieldElement::zero(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] = c[i][j] + a[i][k] * b[k][j];
        }
    return c;
}

bool mat_equal(const Matrix& a, const Matrix& b) { return mat_compare(a, b) == 0; }

int mat_compare(const Matrix& a, const Matrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            int c = FieldElement::compare(a[i][j], b[i][j]);
            if (c != 0) return c;
        }
    return 0;
}

FieldElement mat_trace(const Matrix& a) {
    FieldElement t = FieldElement::zero(a[0][0].field());
    for (std::size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
    return t;
}

std::size_t mat_rank(Matrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 0;
    const std::size_t m = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) continue;
        std::swap(a[pivot], a[rank]);
        FieldElement inv = a[rank][col].inverse();
        for (std::size_t j = col; j < m; ++j) a[rank][j] = a[rank][j] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            FieldElement factor = a[i][col];
            for (std::size_t j = col; j < m; ++j)
                a[i][j] = a[i][j] - factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

FieldElement mat_det(Matrix a) {
    const std::size_t n = a.size();
    FieldRef f = a[0][0].field();
    FieldElement det = FieldElement::one(f);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return FieldElement::zero(f);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        FieldElement inv = a[col][col].inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            FieldElement factor = a[i][col] * inv;
            for (std::size_t j = col; j < n; ++j)
                a[i][j] = a[i][j] - factor * a[col][j];
        }
    }
    return det;
}

std::vector<FieldElement> mat_charpoly(const Matrix& a) {
    const std::size_t n = a.size();
    FieldRef f = a[0][0].field();
    if (f->characteristic() != 0)
        throw InputError("characteristic polynomial computed over characteristic 0 only");
    // Faddeev-LeVerrier: M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<FieldElement> c(n + 1, FieldElement::zero(f));
    c[n] = FieldElement::one(f);
    Matrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted[i][i] = shifted[i][i] + c[n - k + 1];
            m = mat_mul(a, shifted);
        }
        FieldElement tr = mat_trace(m);
        c[n - k] = -(tr / FieldElement::from_integer(static_cast<long>(k), f));
    }
    return c;
}

std::string mat_str(const Matrix& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? ", " : "") << a[i][j].str();
        os << "]";
    }
    os << "]";
    return os.str();
}

MatrixGroup group_closure(const std::vector<Matrix>& generators, std::size_t cap) {
    if (generators.empty()) throw InputError("a matrix group needs at least one generator");
    const std::size_t n = generators[0].size();
    if (n == 0) throw InputError("matrices must be nonempty");
    FieldRef field = generators[0][0][0].field();
    if (field->kind() == FieldKind::prime)
        throw InputError("matrix groups are supported over Q and cyclotomic fields");
    for (const auto& g : generators) {
        if (g.size() != n) throw InputError("generators must share a common dimension");
        for (const auto& row : g) {
            if (row.size() != n) throw InputError("generator matrix is not square");
            for (const auto& e : row)
                if (e.field() != field) throw FieldMismatch("generator entries in different fields");
        }
        if (mat_det(g).is_zero()) throw SingularGenerator("generator matrix is singular");
    }

    MatrixGroup G;
    G.dim = n;
    G.field = field;
    G.generators = generators;

    auto less = [](const Matrix& a, const Matrix& b) { return mat_compare(a, b) < 0; };
    std::set<Matrix, decltype(less)> seen(less);
    std::deque<Matrix> queue;
    Matrix id = mat_identity(n, field);
    seen.insert(id);
    G.elements.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Matrix e = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Matrix prod = mat_mul(e, g);
            if (seen.insert(prod).second) {
                if (G.elements.size() + 1 > cap)
                    throw ClosureCapExceeded("group closure exceeded the cap of " +
                                             std::to_string(cap) + " elements");
                G.elements.push_back(prod);
                queue.push_back(std::move(prod));
            }
        }
    }
    return G;
}

SmallnessResult is_small(const MatrixGroup& G) {
    Matrix id = mat_identity(G.dim, G.field);
    for (std::size_t e = 0; e < G.elements.size(); ++e) {
        if (mat_equal(G.elements[e], id)) continue;
        Matrix diff = G.elements[e];
        for (std::size_t i = 0; i < G.dim; ++i)
            diff[i][i] = diff[i][i] - FieldElement::one(G.field);
        if (mat_rank(diff) == 1) return {false, e};
    }
    return {true, std::nullopt};
}

bool coprimality_check(const MatrixGroup& G, std::uint64_t characteristic) {
    if (characteristic == 0) return true;
    return G.order() % characteristic != 0;
}

// ---------------------------------------------------------------------------
// Univariate polynomials over a FieldElement field, dense, index = power.

namespace {

using UPoly = std::vector<FieldElement>;

void up_trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly up_mul(const UPoly& a, const UPoly& b, FieldRef f) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, FieldElement::zero(f));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) c[i + j] = c[i + j] + a[i] * b[j];
    }
    up_trim(c);
    return c;
}

UPoly up_add(const UPoly& a, const UPoly& b, FieldRef f) {
    UPoly c(std::max(a.size(), b.size()), FieldElement::zero(f));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = c[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = c[i] + b[i];
    up_trim(c);
    return c;
}

UPoly up_rem(UPoly a, const UPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        FieldElement c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
        up_trim(a);
    }
    return a;
}

UPoly up_divexact(UPoly a, const UPoly& b, FieldRef f) {
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, FieldElement::zero(f));
    while (a.size() >= b.size() && !a.empty()) {
        FieldElement c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
        up_trim(a);
    }
    if (!a.empty()) throw InternalConsistencyError("inexact division of Molien polynomials");
    up_trim(q);
    return q;
}

UPoly up_gcd(UPoly a, UPoly b) {
    up_trim(a);
    up_trim(b);
    while (!b.empty()) {
        UPoly r = up_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        FieldElement inv = a.back().inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

/// Power-series inverse of d (with d(0) = 1) truncated at degree N.
std::vector<FieldElement> series_inverse(const UPoly& d, std::size_t N, FieldRef f) {
    std::vector<FieldElement> s(N + 1, FieldElement::zero(f));
    s[0] = FieldElement::one(f);
    for (std::size_t q = 1; q <= N; ++q) {
        FieldElement acc = FieldElement::zero(f);
        for (std::size_t k = 1; k < d.size() && k <= q; ++k)
            if (!d[k].is_zero()) acc = acc + d[k] * s[q - k];
        s[q] = -acc;
    }
    return s;
}

/// det(I - t sigma) from the characteristic polynomial's coefficients.
UPoly char_reversed(const Matrix& sigma) {
    std::vector<FieldElement> c = mat_charpoly(sigma);
    const std::size_t n = sigma.size();
    UPoly d(n + 1, FieldElement::zero(sigma[0][0].field()));
    for (std::size_t k = 0; k <= n; ++k) d[k] = c[n - k];
    up_trim(d);
    return d;
}

mpq_class as_rational(const FieldElement& v, const char* what) {
    if (!v.is_rational())
        throw NonIntegerCoefficient(std::string(what) + " failed to cancel to a rational number");
    return v.rational_value();
}

}  // namespace

std::vector<mpq_class> molien_by_traces(const MatrixGroup& G, std::size_t N) {
    FieldRef f = G.field;
    std::vector<FieldElement> total(N + 1, FieldElement::zero(f));
    for (const auto& sigma : G.elements) {
        // Power sums p_k = tr(sigma^k), then the Newton recurrence
        // q*h_q = sum_{k=1..q} p_k h_{q-k} for complete homogeneous traces.
        std::vector<FieldElement> p(N + 1, FieldElement::zero(f));
        Matrix power = sigma;
        for (std::size_t k = 1; k <= N; ++k) {
            p[k] = mat_trace(power);
            if (k < N) power = mat_mul(power, sigma);
        }
        std::vector<FieldElement> h(N + 1, FieldElement::zero(f));
        h[0] = FieldElement::one(f);
        for (std::size_t q = 1; q <= N; ++q) {
            FieldElement acc = FieldElement::zero(f);
            for (std::size_t k = 1; k <= q; ++k) acc = acc + p[k] * h[q - k];
            h[q] = acc / FieldElement::from_integer(static_cast<long>(q), f);
        }
        for (std::size_t q = 0; q <= N; ++q) total[q] = total[q] + h[q];
    }
    FieldElement order = FieldElement::from_integer(static_cast<long>(G.order()), f);
    std::vector<mpq_class> out;
    for (std::size_t q = 0; q <= N; ++q)
        out.push_back(as_rational(total[q] / order, "trace-averaged Molien coefficient"));
    return out;
}

MolienData molien_series(const MatrixGroup& G, std::size_t N) {
    FieldRef f = G.field;
    MolienData M;
    M.dim = G.dim;
    M.group_order = G.order();

    std::vector<FieldElement> total(N + 1, FieldElement::zero(f));
    UPoly num{FieldElement::zero(f)};
    UPoly den{FieldElement::one(f)};
    for (const auto& sigma : G.elements) {
        UPoly d = char_reversed(sigma);
        std::vector<FieldElement> s = series_inverse(d, N, f);
        for (std::size_t q = 0; q <= N; ++q) total[q] = total[q] + s[q];
        // num/den += 1/d, reduced at every step to keep degrees low.
        num = up_add(up_mul(num, d, f), den, f);
        den = up_mul(den, d, f);
        UPoly g = up_gcd(num, den);
        if (g.size() > 1) {
            num = up_divexact(std::move(num), g, f);
            den = up_divexact(std::move(den), g, f);
        }
    }
    FieldElement order = FieldElement::from_integer(static_cast<long>(G.order()), f);
    for (std::size_t q = 0; q <= N; ++q) {
        mpq_class v = as_rational(total[q] / order, "Molien coefficient");
        if (v.get_den() != 1 || v < 0)
            throw NonIntegerCoefficient("Molien coefficient a_" + std::to_string(q) + " = " +
                                        v.get_str() + " is not a nonnegative integer");
        M.a.push_back(mpz_class(v.get_num()));
        M.b.push_back(binomial(G.dim - 1 + q, G.dim - 1));
    }
    // Normalize the rational function: divide by |G|, set den(0) = 1, and
    // verify every coefficient is rational.
    for (auto& c : num) c = c / order;
    if (den.empty() || den[0].is_zero())
        throw InternalConsistencyError("Molien denominator vanishes at t = 0");
    FieldElement scale = den[0].inverse();
    for (auto& c : num) c = c * scale;
    for (auto& c : den) c = c * scale;
    for (const auto& c : num) M.numerator.push_back(as_rational(c, "Molien numerator"));
    for (const auto& c : den) M.denominator.push_back(as_rational(c, "Molien denominator"));

    // The rational function must expand to the same coefficients.
    {
        std::vector<mpq_class> conv(N + 1, mpq_class(0));
        for (std::size_t q = 0; q <= N; ++q) {
            mpq_class acc = q < M.numerator.size() ? M.numerator[q] : mpq_class(0);
            for (std::size_t k = 1; k < M.denominator.size() && k <= q; ++k)
                acc -= M.denominator[k] * conv[q - k];
            conv[q] = acc;  // denominator constant term is 1
            if (conv[q] != M.a[q])
                throw InternalConsistencyError("Molien rational function disagrees with its series");
        }
    }
    // Independent cross-check by trace averaging.
    std::vector<mpq_class> traced = molien_by_traces(G, std::min<std::size_t>(N, 10));
    for (std::size_t q = 0; q < traced.size(); ++q)
        if (traced[q] != M.a[q])
            throw InternalConsistencyError("Molien series and trace averaging disagree at degree " +
                                           std::to_string(q));
    return M;
}

mpq_class cumulative_ratio(const MolienData& M, std::size_t N) {
    if (N >= M.a.size()) throw InputError("cumulative ratio beyond the truncation degree");
    mpz_class num = 0, den = 0;
    for (std::size_t q = 0; q <= N; ++q) {
        num += M.a[q];
        den += M.b[q];
    }
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

QuotientSignatureReport quotient_signature(const MatrixGroup& G, std::uint64_t characteristic,
                                           std::size_t max_degree) {
    if (G.dim < 2) throw InputError("the quotient pipeline needs dimension n >= 2");
    QuotientSignatureReport rep;
    rep.dim = G.dim;
    rep.group_order = G.order();
    rep.characteristic = characteristic;

    SmallnessResult sm = is_small(G);
    rep.small = sm.small;
    if (!sm.small)
        throw NotSmall("group contains a pseudo-reflection: element " +
                           std::to_string(*sm.witness) + " = " + mat_str(G.elements[*sm.witness]),
                       *sm.witness);
    rep.coprime = coprimality_check(G, characteristic);
    if (!rep.coprime)
        throw CharacteristicDividesOrder("characteristic " + std::to_string(characteristic) +
                                         " divides the group order " + std::to_string(G.order()));

    rep.signature = mpq_class(1, static_cast<unsigned long>(G.order()));
    rep.signature.canonicalize();
    rep.molien = molien_series(G, max_degree);

    std::vector<std::size_t> samples{10, 25, 50, 100, 200, 300, 500};
    for (std::size_t s : samples) {
        if (s >= max_degree) break;
        ConvergenceRow row{s, cumulative_ratio(rep.molien, s), 0};
        row.abs_error = abs(row.ratio - rep.signature);
        rep.table.push_back(std::move(row));
    }
    ConvergenceRow last{max_degree, cumulative_ratio(rep.molien, max_degree), 0};
    last.abs_error = abs(last.ratio - rep.signature);
    rep.table.push_back(std::move(last));
    return rep;
}

}  // namespace symsig
