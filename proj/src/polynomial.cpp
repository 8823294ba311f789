#include "symsig/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symsig {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

RingRef PolyRing::make(std::vector<std::string> variables, FieldRef field, BaseOrder order) {
    if (variables.empty()) throw InputError("a polynomial ring needs at least one variable");
    for (const auto& v : variables) {
        if (!valid_identifier(v)) throw InputError("invalid variable name '" + v + "'");
        if (v == "z" && field->kind() == FieldKind::cyclotomic)
            throw InputError("variable name 'z' is reserved for the root of unity");
    }
    auto sorted = variables;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("duplicate variable name");
    auto r = std::shared_ptr<PolyRing>(new PolyRing());
    r->vars_ = std::move(variables);
    r->field_ = field;
    r->order_ = order;
    return r;
}

std::optional<std::size_t> PolyRing::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

bool PolyRing::same_as(const PolyRing& o) const {
    return vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_;
}

std::string PolyRing::describe() const {
    std::ostringstream os;
    os << field_->name() << "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
    os << "]";
    return os.str();
}

Polynomial Polynomial::zero(RingRef ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
}

Polynomial Polynomial::constant(RingRef ring, FieldElement c) {
    Monomial one(ring->nvars());
    return from_term(std::move(ring), std::move(one), std::move(c));
}

Polynomial Polynomial::constant(RingRef ring, long c) {
    FieldElement v = FieldElement::from_integer(c, ring->field());
    Polynomial p;
    p.ring_ = ring;
    if (!v.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), std::move(v)});
    return p;
}

Polynomial Polynomial::from_term(RingRef ring, Monomial m, FieldElement c) {
    if (m.nvars() != ring->nvars()) throw RingMismatch("monomial has wrong variable count");
    Polynomial p;
    p.ring_ = std::move(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(RingRef ring, std::size_t i) {
    auto n = ring->nvars();
    FieldElement one = FieldElement::one(ring->field());
    return from_term(std::move(ring), Monomial::unit(n, i), std::move(one));
}

Polynomial Polynomial::from_terms(RingRef ring, std::vector<Term> terms) {
    BaseOrder ord = ring->order();
    std::sort(terms.begin(), terms.end(), [ord](const Term& a, const Term& b) {
        return compare_monomials(a.mono, b.mono, ord) > 0;
    });
    Polynomial p;
    p.ring_ = std::move(ring);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_[0];
}

long long Polynomial::degree() const {
    long long d = -1;
    for (const auto& t : terms_) d = std::max<long long>(d, static_cast<long long>(t.mono.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_[0].mono.degree()) return false;
    return true;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (ring_.get() == o.ring_.get()) return;
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
        throw RingMismatch("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    BaseOrder ord = ring_->order();
    Polynomial r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare_monomials(terms_[i].mono, o.terms_[j].mono, ord);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const FieldElement& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff = t.coeff * c;
    }
    return r;  // multiplying by a monomial preserves the term order
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono[var];
        if (e == 0) continue;
        FieldElement c = t.coeff * FieldElement::from_integer(static_cast<long>(e), ring_->field());
        if (c.is_zero()) continue;  // char p kills multiples of p
        std::vector<std::uint32_t> exps = t.mono.exponents();
        exps[var] -= 1;
        out.push_back({Monomial(std::move(exps)), std::move(c)});
    }
    return from_terms(ring_, std::move(out));
}

namespace {

void print_monomial_part(std::ostringstream& os, const Monomial& m, const PolyRing& ring,
                         bool& need_star) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (need_star) os << "*";
        os << ring.variables()[i];
        if (m[i] > 1) os << "^" << m[i];
        need_star = true;
    }
}

// One printed fragment: sign, rational magnitude, optional z-power.
struct Fragment {
    bool negative;
    mpq_class magnitude;  // positive
    unsigned zpow;        // 0 = none
};

void emit_fragment(std::ostringstream& os, const Fragment& f, const Monomial& m,
                   const PolyRing& ring, bool first) {
    if (first) {
        if (f.negative) os << "-";
    } else {
        os << (f.negative ? " - " : " + ");
    }
    bool need_star = false;
    bool coeff_needed = f.magnitude != 1 || (f.zpow == 0 && m.is_constant());
    if (coeff_needed) {
        os << f.magnitude.get_str();
        need_star = true;
    }
    if (f.zpow > 0) {
        if (need_star) os << "*";
        os << "z";
        if (f.zpow > 1) os << "^" << f.zpow;
        need_star = true;
    }
    print_monomial_part(os, m, ring, need_star);
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        switch (ring_->field()->kind()) {
            case FieldKind::rational: {
                const mpq_class& q = t.coeff.rational_raw();
                Fragment f{q < 0, abs(q), 0};
                emit_fragment(os, f, t.mono, *ring_, first);
                first = false;
                break;
            }
            case FieldKind::prime: {
                Fragment f{false, mpq_class(static_cast<unsigned long>(t.coeff.prime_residue())), 0};
                emit_fragment(os, f, t.mono, *ring_, first);
                first = false;
                break;
            }
            case FieldKind::cyclotomic: {
                // Distribute the coefficient across z-powers, highest first.
                const auto& coords = t.coeff.cyclo_coords();
                for (std::size_t k = coords.size(); k-- > 0;) {
                    if (coords[k] == 0) continue;
                    Fragment f{coords[k] < 0, abs(coords[k]), static_cast<unsigned>(k)};
                    emit_fragment(os, f, t.mono, *ring_, first);
                    first = false;
                }
                break;
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    enum Kind { integer, ident, plus, minus, star, slash, caret, end } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::end, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            tok_ = {Token::integer, s_.substr(start, i_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            tok_ = {Token::ident, s_.substr(start, i_ - start), start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::plus, "+", start}; return;
            case '-': tok_ = {Token::minus, "-", start}; return;
            case '*': tok_ = {Token::star, "*", start}; return;
            case '/': tok_ = {Token::slash, "/", start}; return;
            case '^': tok_ = {Token::caret, "^", start}; return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

std::uint32_t parse_exponent(Lexer& lex) {
    Token t = lex.take();
    if (t.kind != Token::integer) throw SyntaxError("expected an exponent", t.pos);
    mpz_class e(t.text);
    if (e > 1000000) throw SyntaxError("exponent too large", t.pos);
    return static_cast<std::uint32_t>(e.get_ui());
}

struct TermParser {
    const PolyRing* ring;  // null when parsing a bare coefficient
    FieldRef field;

    // Parses one term (product of atoms) and returns its coefficient and
    // exponent vector. `sign` multiplies the coefficient.
    Term parse_term(Lexer& lex, bool negative) const {
        std::size_t n = ring ? ring->nvars() : 0;
        FieldElement coeff = FieldElement::one(field);
        if (negative) coeff = -coeff;
        std::vector<std::uint32_t> exps(n, 0);
        bool expect_atom = true;
        while (expect_atom) {
            Token t = lex.take();
            switch (t.kind) {
                case Token::integer: {
                    mpz_class num(t.text);
                    mpq_class q(num);
                    if (lex.peek().kind == Token::slash) {
                        lex.take();
                        Token d = lex.take();
                        if (d.kind != Token::integer)
                            throw SyntaxError("expected a denominator", d.pos);
                        mpz_class den(d.text);
                        if (den == 0) throw BadCoefficient("zero denominator");
                        q = mpq_class(num, den);
                        q.canonicalize();
                    }
                    try {
                        coeff = coeff * FieldElement::from_rational(q, field);
                    } catch (const NonInvertibleDenominator& e) {
                        throw BadCoefficient(e.what());
                    }
                    break;
                }
                case Token::ident: {
                    std::uint32_t e = 1;
                    if (lex.peek().kind == Token::caret) {
                        lex.take();
                        e = parse_exponent(lex);
                    }
                    if (t.text == "z" && field->kind() == FieldKind::cyclotomic) {
                        coeff = coeff * FieldElement::zeta_power(e, field);
                        break;
                    }
                    if (!ring) throw UnknownVariable(t.text);
                    auto idx = ring->variable_index(t.text);
                    if (!idx) throw UnknownVariable(t.text);
                    std::uint64_t s = std::uint64_t(exps[*idx]) + e;
                    if (s > 0xffffffffull) throw SyntaxError("exponent overflow", t.pos);
                    exps[*idx] = static_cast<std::uint32_t>(s);
                    break;
                }
                default:
                    throw SyntaxError("expected a coefficient or a variable", t.pos);
            }
            if (lex.peek().kind == Token::star) {
                lex.take();
            } else {
                expect_atom = false;
            }
        }
        return {Monomial(std::move(exps)), std::move(coeff)};
    }
};

std::vector<Term> parse_expression(Lexer& lex, const TermParser& tp) {
    std::vector<Term> terms;
    bool negative = false;
    if (lex.peek().kind == Token::plus || lex.peek().kind == Token::minus) {
        negative = lex.take().kind == Token::minus;
    }
    terms.push_back(tp.parse_term(lex, negative));
    while (lex.peek().kind != Token::end) {
        Token t = lex.take();
        if (t.kind == Token::plus || t.kind == Token::minus) {
            terms.push_back(tp.parse_term(lex, t.kind == Token::minus));
        } else {
            throw SyntaxError("expected '+' or '-'", t.pos);
        }
    }
    return terms;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingRef& ring) {
    Lexer lex(text);
    TermParser tp{ring.get(), ring->field()};
    return Polynomial::from_terms(ring, parse_expression(lex, tp));
}

FieldElement parse_field_element(const std::string& text, FieldRef field) {
    Lexer lex(text);
    TermParser tp{nullptr, field};
    FieldElement total = FieldElement::zero(field);
    for (auto& t : parse_expression(lex, tp)) total = total + t.coeff;
    return total;
}

bool euler_check(const Polynomial& f) {
    if (f.is_zero() || !f.is_homogeneous())
        throw InputError("euler_check needs a nonzero homogeneous polynomial");
    long long d = f.degree();
    FieldRef field = f.ring()->field();
    FieldElement deg = FieldElement::from_integer(static_cast<long>(d), field);
    if (deg.is_zero())
        throw DegreeNotInvertible("degree " + std::to_string(d) + " is not invertible in " +
                                  field->name());
    Polynomial sum = Polynomial::zero(f.ring());
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
        sum = sum + Polynomial::variable(f.ring(), i) * f.derivative(i);
    return sum == f.scaled(deg);
}

}  // namespace symsig
