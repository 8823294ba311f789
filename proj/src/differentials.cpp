#include "symsig/differentials.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symsig {

JacobianMatrix jacobian(const Ideal& I) {
    I.validate();
    JacobianMatrix J;
    J.source = I;
    for (const auto& f : I.gens) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < I.ring->nvars(); ++j) row.push_back(f.derivative(j));
        J.rows.push_back(std::move(row));
    }
    return J;
}

namespace {

std::string sym_label(const Monomial& nu, const PolyRing& ring) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < nu.nvars(); ++i) {
        if (nu[i] == 0) continue;
        if (!first) os << "*";
        os << "d" << ring.variables()[i];
        if (nu[i] > 1) os << "^" << nu[i];
        first = false;
    }
    return os.str();
}

}  // namespace

PresentationMatrix omega_presentation(const Ideal& I) { return sym_power_presentation(I, 1); }

PresentationMatrix sym_power_presentation(const Ideal& I, std::uint64_t q) {
    if (q < 1) throw InputError("symmetric power must be >= 1");
    I.validate();
    const std::size_t n = I.ring->nvars();
    PresentationMatrix pres;
    pres.ambient = I;
    pres.sym_power = q;

    std::vector<Monomial> gens_nu = monomials_of_degree(q, n, I.ring->order());
    std::map<std::vector<std::uint32_t>, std::size_t> index_of;
    for (std::size_t g = 0; g < gens_nu.size(); ++g) {
        pres.generator_labels.push_back(sym_label(gens_nu[g], *I.ring));
        pres.generator_degrees.push_back(q);
        index_of[gens_nu[g].exponents()] = g;
    }

    JacobianMatrix J = jacobian(I);
    std::vector<Monomial> mus = monomials_of_degree(q - 1, n, I.ring->order());
    for (std::size_t i = 0; i < I.gens.size(); ++i) {
        for (const auto& mu : mus) {
            std::vector<Polynomial> row(gens_nu.size(), Polynomial::zero(I.ring));
            for (std::size_t j = 0; j < n; ++j) {
                if (J.rows[i][j].is_zero()) continue;
                Monomial nu = mu * Monomial::unit(n, j);
                row[index_of.at(nu.exponents())] = J.rows[i][j];
            }
            pres.relations.push_back(std::move(row));
        }
    }
    return pres;
}

FreeRankResult freerank_positive_syzygy(const PresentationMatrix& pres,
                                        const GroebnerOptions& opts) {
    FreeRankResult out;
    out.method = FreeRankMethod::syzygy_test;
    const std::size_t r = pres.relations.size();
    const std::size_t g = pres.generator_labels.size();
    if (r == 0) {
        out.positive = g > 0;
        out.free_presentation = true;
        return out;
    }
    // Rows of the transposed relation matrix, one per generator.
    std::vector<std::vector<Polynomial>> rows(g);
    for (std::size_t nu = 0; nu < g; ++nu) {
        rows[nu].reserve(r);
        for (std::size_t mu = 0; mu < r; ++mu) rows[nu].push_back(pres.relations[mu][nu]);
    }
    out.syzygies = syzygy_basis(rows, r, pres.ambient, opts);
    for (std::size_t s = 0; s < out.syzygies.reduced.size(); ++s) {
        const auto& vec = out.syzygies.reduced[s];
        std::vector<long long> degs;
        for (std::size_t e = 0; e < vec.size(); ++e) {
            degs.push_back(vec[e].degree());
            if (!out.witness_generator && vec[e].is_unit_scalar()) {
                out.witness_generator = s;
                out.witness_entry = e;
                out.positive = true;
            }
        }
        out.degree_profile.push_back(std::move(degs));
    }
    return out;
}

FreeRankResult freerank_omega_column_test(const JacobianMatrix& J, const GroebnerOptions& opts) {
    FreeRankResult out;
    out.method = FreeRankMethod::column_test;
    const std::size_t s = J.rows.size();
    if (s == 0) {
        out.positive = true;
        out.free_presentation = true;
        return out;
    }
    const std::size_t n = J.source.ring->nvars();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Polynomial> target;
        for (std::size_t i = 0; i < s; ++i) target.push_back(J.rows[i][j]);
        std::vector<std::vector<Polynomial>> others;
        for (std::size_t l = 0; l < n; ++l) {
            if (l == j) continue;
            std::vector<Polynomial> col;
            for (std::size_t i = 0; i < s; ++i) col.push_back(J.rows[i][l]);
            others.push_back(std::move(col));
        }
        ColumnTestRecord rec{j, module_membership(target, others, s, J.source, opts)};
        if (rec.membership.member && !out.positive_column) {
            out.positive = true;
            out.positive_column = j;
        }
        out.columns.push_back(std::move(rec));
    }
    return out;
}

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const RingRef& ring) {
    const std::size_t k = m.size();
    if (k == 0) return Polynomial::constant(ring, 1L);
    if (k == 1) return m[0][0];
    Polynomial det = Polynomial::zero(ring);
    for (std::size_t c = 0; c < k; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        Polynomial cof = m[0][c] * poly_det(minor, ring);
        det = (c % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

void subsets_rec(std::size_t from, std::size_t total, std::size_t need,
                 std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == need) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i + (need - cur.size()) <= total; ++i) {
        cur.push_back(i);
        subsets_rec(i + 1, total, need, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t total, std::size_t need) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets_rec(0, total, need, cur, out);
    return out;
}

}  // namespace

Ideal singular_locus_ideal(const Ideal& I, const GroebnerOptions& opts) {
    const std::size_t n = I.ring->nvars();
    const std::size_t s = I.gens.size();
    if (s == 0) return Ideal{I.ring, {Polynomial::constant(I.ring, 1L)}};
    int dim = krull_dimension(I, opts);
    if (dim < 0) return Ideal{I.ring, {Polynomial::constant(I.ring, 1L)}};
    const std::size_t h = n - static_cast<std::size_t>(dim);
    if (h == 0) return Ideal{I.ring, {Polynomial::constant(I.ring, 1L)}};
    Ideal sing{I.ring, I.gens};
    if (h > std::min(s, n)) return sing;  // rank can never reach h
    JacobianMatrix J = jacobian(I);
    for (const auto& rset : subsets(s, h)) {
        for (const auto& cset : subsets(n, h)) {
            std::vector<std::vector<Polynomial>> sub;
            for (std::size_t r : rset) {
                std::vector<Polynomial> row;
                for (std::size_t c : cset) row.push_back(J.rows[r][c]);
                sub.push_back(std::move(row));
            }
            Polynomial d = poly_det(sub, I.ring);
            if (!d.is_zero()) sing.gens.push_back(std::move(d));
        }
    }
    return sing;
}

bool isolated_singularity_check(const Ideal& I, const GroebnerOptions& opts) {
    if (!I.is_homogeneous()) throw InputError("isolated-singularity check needs homogeneous input");
    return krull_dimension(singular_locus_ideal(I, opts), opts) <= 0;
}

bool complete_intersection_check(const Ideal& I, const GroebnerOptions& opts) {
    if (!I.is_homogeneous()) throw InputError("complete-intersection check needs homogeneous input");
    return krull_dimension(I, opts) ==
           static_cast<int>(I.ring->nvars()) - static_cast<int>(I.gens.size());
}

bool DifferentialSignatureReport::check_passed(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c.passed;
    return false;
}

namespace {

void require_method_agreement(const DifferentialSignatureReport& rep) {
    if (rep.column_test && rep.syzygy_test &&
        rep.column_test->positive != rep.syzygy_test->positive)
        throw InternalConsistencyError(
            "free-rank methods disagree: column test says " +
            std::string(rep.column_test->positive ? "positive" : "zero") +
            ", syzygy test says " +
            std::string(rep.syzygy_test->positive ? "positive" : "zero"));
}

void run_freerank_both(DifferentialSignatureReport& rep, const Ideal& I,
                       const GroebnerOptions& gopts) {
    rep.jac = jacobian(I);
    rep.column_test = freerank_omega_column_test(rep.jac, gopts);
    rep.syzygy_test = freerank_positive_syzygy(omega_presentation(I), gopts);
    require_method_agreement(rep);
    rep.freerank_omega_positive = rep.column_test->positive;
}

SymCheck run_sym_check(const Ideal& I, std::uint64_t q, const GroebnerOptions& gopts) {
    PresentationMatrix pres = sym_power_presentation(I, q);
    FreeRankResult fr = freerank_positive_syzygy(pres, gopts);
    return SymCheck{q, pres.generator_labels.size(), pres.relations.size(), fr.positive};
}

}  // namespace

DifferentialSignatureReport hypersurface_signature(const Polynomial& f,
                                                   const HypersurfaceOptions& opts) {
    if (f.is_zero()) throw InputError("the hypersurface equation must be nonzero");
    if (!f.is_homogeneous()) throw InputError("the hypersurface equation must be homogeneous");
    const long long deg = f.degree();
    if (deg == 0) throw InputError("the hypersurface equation must not be a constant");

    DifferentialSignatureReport rep;
    rep.ideal = Ideal{f.ring(), {f}};
    rep.nvars = f.ring()->nvars();
    rep.num_equations = 1;

    if (deg == 1) {
        rep.checks.push_back({"degree >= 2", false, false, "deg f = 1, R is a polynomial ring"});
        rep.status = DifferentialSignatureReport::Status::regular_one;
        rep.reason = "regular";
        rep.jac = jacobian(rep.ideal);
        return rep;
    }
    rep.checks.push_back({"degree >= 2", true, false, "deg f = " + std::to_string(deg)});

    const std::size_t n = rep.nvars;
    rep.checks.push_back({"n >= 4", n >= 4, false, "n = " + std::to_string(n)});
    rep.checks.push_back(
        {"reflexivity gate n >= 2s+2", n >= 4, false, "s = 1, 2s+2 = 4, n = " + std::to_string(n)});

    std::uint64_t ch = f.ring()->field()->characteristic();
    bool char_ok = ch == 0 || (static_cast<std::uint64_t>(deg) % ch) != 0;
    rep.checks.push_back({"characteristic does not divide deg f", char_ok, false,
                          ch == 0 ? "characteristic 0" : "characteristic " + std::to_string(ch)});

    Ideal sing = singular_locus_ideal(rep.ideal, opts.groebner);
    int sing_dim = krull_dimension(sing, opts.groebner);
    rep.checks.push_back({"isolated singularity", sing_dim <= 0, false,
                          "dim of singular locus = " + std::to_string(sing_dim)});

    rep.checks.push_back({"domain", opts.assume_domain, true,
                          opts.assume_domain ? "asserted via --assume-domain"
                                             : "not asserted; pass --assume-domain"});
    if (opts.assume_domain) rep.warnings.push_back("domain assumed");

    run_freerank_both(rep, rep.ideal, opts.groebner);

    bool gates = rep.check_passed("n >= 4") && char_ok && sing_dim <= 0 && opts.assume_domain;
    if (gates) {
        if (rep.freerank_omega_positive)
            throw InternalConsistencyError(
                "free rank positive although every zero-signature hypothesis holds");
        rep.sym_checks.push_back(SymCheck{1, rep.nvars, 1, rep.syzygy_test->positive});
        for (std::uint64_t q = 2; q <= opts.max_q; ++q) {
            SymCheck sc = run_sym_check(rep.ideal, q, opts.groebner);
            if (sc.positive)
                throw InternalConsistencyError(
                    "Sym^" + std::to_string(q) +
                    " free rank positive although the differential module has free rank zero");
            rep.sym_checks.push_back(sc);
        }
        rep.status = DifferentialSignatureReport::Status::exact_zero;
    } else {
        rep.status = DifferentialSignatureReport::Status::undecided;
        for (const auto& c : rep.checks)
            if (!c.passed) {
                rep.reason = c.name + " failed (" + c.detail + ")";
                break;
            }
        if (n < 4)
            rep.warnings.push_back(
                "for n <= 3 the symmetric powers need not be reflexive; for quotient "
                "singularities use the quotient pipeline");
    }
    return rep;
}

DifferentialSignatureReport ci_freerank(const Ideal& I, const CiOptions& opts) {
    I.validate();
    if (!I.is_homogeneous()) throw InputError("generators must be homogeneous");

    DifferentialSignatureReport rep;
    rep.ideal = I;
    rep.nvars = I.ring->nvars();
    rep.num_equations = I.gens.size();

    if (I.gens.empty()) {
        rep.status = DifferentialSignatureReport::Status::regular_one;
        rep.reason = "regular";
        return rep;
    }

    const std::size_t n = rep.nvars;
    const std::size_t s = rep.num_equations;

    bool degrees_ok = true;
    for (const auto& g : I.gens)
        if (g.degree() < 2) degrees_ok = false;
    rep.checks.push_back({"all degrees >= 2", degrees_ok, false, ""});

    int dim = krull_dimension(I, opts.groebner);
    bool ci_ok = dim == static_cast<int>(n) - static_cast<int>(s);
    rep.checks.push_back({"complete intersection", ci_ok, false,
                          "dim = " + std::to_string(dim) + ", n - s = " +
                              std::to_string(static_cast<int>(n) - static_cast<int>(s))});

    Ideal sing = singular_locus_ideal(I, opts.groebner);
    int sing_dim = krull_dimension(sing, opts.groebner);
    rep.checks.push_back({"isolated singularity", sing_dim <= 0, false,
                          "dim of singular locus = " + std::to_string(sing_dim)});

    bool gate_n = n >= 2 * s + 2;
    rep.checks.push_back({"reflexivity gate n >= 2s+2", gate_n, false,
                          "n = " + std::to_string(n) + ", 2s+2 = " + std::to_string(2 * s + 2)});

    rep.checks.push_back({"domain", opts.assume_domain, true,
                          opts.assume_domain ? "asserted via --assume-domain"
                                             : "not asserted; pass --assume-domain"});
    if (opts.assume_domain) rep.warnings.push_back("domain assumed");
    if (opts.assume_reflexive) {
        rep.checks.push_back({"reflexivity", true, true, "asserted via --assume-reflexive"});
        rep.warnings.push_back("reflexivity assumed");
    }

    run_freerank_both(rep, I, opts.groebner);

    if (rep.freerank_omega_positive) {
        rep.status = DifferentialSignatureReport::Status::undecided;
        rep.reason =
            "the differential module has positive free rank; this pipeline only certifies "
            "the zero signature";
        return rep;
    }
    rep.sym_checks.push_back(SymCheck{1, 0, 0, false});
    rep.sym_checks.back().generators = monomials_of_degree(1, n).size();
    rep.sym_checks.back().relations = s;
    for (std::uint64_t q = 2; q <= opts.max_q; ++q) {
        SymCheck sc = run_sym_check(I, q, opts.groebner);
        if (sc.positive)
            throw InternalConsistencyError(
                "Sym^" + std::to_string(q) +
                " free rank positive although the differential module has free rank zero");
        rep.sym_checks.push_back(sc);
    }

    bool reflexivity_gate = degrees_ok && ci_ok && sing_dim <= 0 && gate_n;
    if (!opts.assume_domain) {
        rep.status = DifferentialSignatureReport::Status::undecided;
        rep.reason = "domain hypothesis not asserted (pass --assume-domain)";
    } else if (reflexivity_gate) {
        rep.status = DifferentialSignatureReport::Status::exact_zero;
    } else {
        rep.status = DifferentialSignatureReport::Status::conditional_zero;
        rep.reason = "reflexivity of the symmetric powers is not established by the hypothesis gate";
        rep.warnings.push_back("reflexivity conditional");
    }
    return rep;
}

}  // namespace symsig
