#include "symsig/groebner.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace symsig {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

int ModuleOrder::compare(std::uint32_t ca, const Monomial& ma, std::uint32_t cb,
                         const Monomial& mb) const {
    bool upper_a = ca < elim_split;
    bool upper_b = cb < elim_split;
    if (upper_a != upper_b) return upper_a ? 1 : -1;
    int c = compare_monomials(ma, mb, base);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
}

ModVec mv_from_terms(std::vector<ModTerm> terms, const ModuleOrder& order) {
    std::sort(terms.begin(), terms.end(), [&order](const ModTerm& a, const ModTerm& b) {
        return order.compare(a.comp, a.mono, b.comp, b.mono) > 0;
    });
    ModVec out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
            out.back().coeff = out.back().coeff + t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

ModVec mv_from_vector(const std::vector<Polynomial>& v, const ModuleOrder& order) {
    std::vector<ModTerm> terms;
    for (std::size_t c = 0; c < v.size(); ++c)
        for (const auto& t : v[c].terms())
            terms.push_back({static_cast<std::uint32_t>(c), t.mono, t.coeff});
    return mv_from_terms(std::move(terms), order);
}

std::vector<Polynomial> mv_to_vector(const ModVec& v, std::uint32_t rank, const RingRef& ring) {
    std::vector<std::vector<Term>> per_comp(rank);
    for (const auto& t : v) per_comp.at(t.comp).push_back({t.mono, t.coeff});
    std::vector<Polynomial> out;
    out.reserve(rank);
    for (auto& terms : per_comp) out.push_back(Polynomial::from_terms(ring, std::move(terms)));
    return out;
}

ModVec mv_from_poly(const Polynomial& p) {
    ModVec out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) out.push_back({0, t.mono, t.coeff});
    return out;
}

Polynomial mv_to_poly(const ModVec& v, const RingRef& ring) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const auto& t : v) terms.push_back({t.mono, t.coeff});
    return Polynomial::from_terms(ring, std::move(terms));
}

ModVec mv_sub_mul(const ModVec& f, const ModVec& g, const Monomial& m, const FieldElement& c,
                  const ModuleOrder& order) {
    ModVec out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        Monomial gm = g[j].mono * m;
        int cmp = order.compare(f[i].comp, f[i].mono, g[j].comp, gm);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back({g[j].comp, std::move(gm), -(g[j].coeff * c)});
            ++j;
        } else {
            FieldElement s = f[i].coeff - g[j].coeff * c;
            if (!s.is_zero()) out.push_back({f[i].comp, f[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].comp, g[j].mono * m, -(g[j].coeff * c)});
    return out;
}

ModVec mv_scale(ModVec f, const FieldElement& c) {
    for (auto& t : f) t.coeff = t.coeff * c;
    return f;
}

bool mv_equal(const ModVec& a, const ModVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].comp != b[i].comp || a[i].mono != b[i].mono || !(a[i].coeff == b[i].coeff))
            return false;
    return true;
}

std::string mv_str(const ModVec& v, std::uint32_t rank, const RingRef& ring) {
    std::ostringstream os;
    os << "[";
    auto comps = mv_to_vector(v, rank, ring);
    for (std::size_t i = 0; i < comps.size(); ++i) os << (i ? ", " : "") << comps[i].str();
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

struct Engine {
    RingRef ring;
    ModuleOrder order;
    GroebnerOptions opts;
    std::uint64_t pairs_used = 0;

    std::vector<ModVec> basis;
    std::vector<std::vector<Polynomial>> rows;  // cofactors over original input
    std::size_t ninput = 0;

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        std::uint32_t comp;
        std::uint64_t sugar;
    };
    std::vector<Pair> pairs;
    std::vector<std::uint64_t> sugars;

    const ModTerm& lt(std::size_t i) const { return basis[i].front(); }

    void charge_pair() {
        if (++pairs_used > opts.pair_limit)
            throw ResourceLimitExceeded("pair budget of " + std::to_string(opts.pair_limit) +
                                        " exhausted");
    }

    // Full reduction against the current basis, tracking cofactors over the
    // basis when requested.
    ModVec reduce(ModVec f, std::vector<Polynomial>* cof) const {
        ModVec done;
        while (!f.empty()) {
            const ModTerm& head = f.front();
            bool reduced = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (basis[k].empty()) continue;
                const ModTerm& g = lt(k);
                if (g.comp != head.comp || !g.mono.divides(head.mono)) continue;
                Monomial m = head.mono / g.mono;
                FieldElement c = head.coeff / g.coeff;
                if (cof) {
                    (*cof)[k] = (*cof)[k] + Polynomial::from_term(ring, m, c);
                }
                f = mv_sub_mul(f, basis[k], m, c, order);
                reduced = true;
                break;
            }
            if (!reduced) {
                done.push_back(f.front());
                f.erase(f.begin());
            }
        }
        return done;
    }

    void make_monic(ModVec& v, std::vector<Polynomial>* row) const {
        if (v.empty()) return;
        FieldElement inv = v.front().coeff.inverse();
        if (inv.is_one()) return;
        v = mv_scale(std::move(v), inv);
        if (row)
            for (auto& p : *row) p = p.scaled(inv);
    }

    // Gebauer-Moller update when basis[t] was just added.
    void update_pairs(std::size_t t) {
        const ModTerm& lt_t = lt(t);
        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool keep = true;
        };
        std::vector<Cand> cand;
        for (std::size_t i = 0; i < t; ++i) {
            if (basis[i].empty() || lt(i).comp != lt_t.comp) continue;
            cand.push_back({i, Monomial::lcm(lt(i).mono, lt_t.mono)});
        }
        // Criterion B on old pairs.
        std::erase_if(pairs, [&](const Pair& p) {
            if (p.comp != lt_t.comp || !lt_t.mono.divides(p.lcm)) return false;
            Monomial l_it = Monomial::lcm(lt(p.i).mono, lt_t.mono);
            Monomial l_jt = Monomial::lcm(lt(p.j).mono, lt_t.mono);
            return l_it != p.lcm && l_jt != p.lcm;
        });
        // Criterion M: drop candidates whose lcm is a proper multiple of
        // another candidate's lcm.
        for (auto& a : cand)
            for (const auto& b : cand) {
                if (&a == &b || !a.keep) continue;
                if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
                    a.keep = false;
                    break;
                }
            }
        // Criterion F: one representative per lcm value.
        for (std::size_t x = 0; x < cand.size(); ++x) {
            if (!cand[x].keep) continue;
            for (std::size_t y = x + 1; y < cand.size(); ++y)
                if (cand[y].keep && cand[y].lcm == cand[x].lcm) cand[y].keep = false;
        }
        for (const auto& c : cand) {
            if (!c.keep) continue;
            // Product criterion; only sound for ideals (rank 1).
            if (order.rank == 1 && Monomial::coprime(lt(c.i).mono, lt_t.mono)) continue;
            std::uint64_t sugar = std::max(
                sugars[c.i] + (c.lcm / lt(c.i).mono).degree(),
                sugars[t] + (c.lcm / lt_t.mono).degree());
            pairs.push_back({c.i, t, c.lcm, lt_t.comp, sugar});
        }
    }

    void add_element(ModVec v, std::vector<Polynomial> row, std::uint64_t sugar) {
        make_monic(v, opts.track_cofactors ? &row : nullptr);
        basis.push_back(std::move(v));
        rows.push_back(std::move(row));
        sugars.push_back(sugar);
        update_pairs(basis.size() - 1);
    }

    std::uint64_t mv_sugar(const ModVec& v) const {
        std::uint64_t d = 0;
        for (const auto& t : v) d = std::max(d, t.mono.degree());
        return d;
    }

    void run(std::vector<ModVec> gens) {
        ninput = gens.size();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].empty()) continue;
            std::vector<Polynomial> row;
            if (opts.track_cofactors) {
                row.assign(ninput, Polynomial::zero(ring));
                row[i] = Polynomial::constant(ring, 1L);
            }
            add_element(gens[i], std::move(row), mv_sugar(gens[i]));
        }
        while (!pairs.empty()) {
            // Sugar selection: smallest sugar, then smallest lcm, then indices.
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs.size(); ++k) {
                const Pair &a = pairs[k], &b = pairs[best];
                int c;
                if (a.sugar != b.sugar) {
                    c = a.sugar < b.sugar ? -1 : 1;
                } else {
                    c = order.compare(a.comp, a.lcm, b.comp, b.lcm);
                    if (c == 0)
                        c = a.i != b.i ? (a.i < b.i ? -1 : 1)
                            : a.j != b.j ? (a.j < b.j ? -1 : 1) : 0;
                }
                if (c < 0) best = k;
            }
            Pair p = pairs[best];
            pairs.erase(pairs.begin() + best);
            charge_pair();

            Monomial mi = p.lcm / lt(p.i).mono;
            Monomial mj = p.lcm / lt(p.j).mono;
            // Both elements are monic.
            ModVec sp = mv_sub_mul(ModVec{}, basis[p.i], mi, -FieldElement::one(ring->field()),
                                   order);
            sp = mv_sub_mul(sp, basis[p.j], mj, FieldElement::one(ring->field()), order);
            std::vector<Polynomial> row;
            std::vector<Polynomial> red_cof;
            if (opts.track_cofactors) {
                red_cof.assign(basis.size(), Polynomial::zero(ring));
            }
            ModVec r = reduce(std::move(sp), opts.track_cofactors ? &red_cof : nullptr);
            if (r.empty()) continue;
            if (opts.track_cofactors) {
                row.assign(ninput, Polynomial::zero(ring));
                FieldElement one = FieldElement::one(ring->field());
                for (std::size_t j = 0; j < ninput; ++j) {
                    Polynomial acc = rows[p.i][j].times_monomial(mi, one) -
                                     rows[p.j][j].times_monomial(mj, one);
                    for (std::size_t k = 0; k < red_cof.size(); ++k)
                        if (!red_cof[k].is_zero()) acc = acc - red_cof[k] * rows[k][j];
                    row[j] = std::move(acc);
                }
            }
            add_element(std::move(r), std::move(row), p.sugar);
        }
        finalize();
    }

    void finalize() {
        // Minimalize: sort indices ascending by leading term, drop elements
        // whose leading term is divisible by a kept one.
        std::vector<std::size_t> idx(basis.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
            int c = order.compare(lt(a).comp, lt(a).mono, lt(b).comp, lt(b).mono);
            if (c != 0) return c < 0;
            return a < b;
        });
        std::vector<std::size_t> kept;
        for (std::size_t i : idx) {
            bool divisible = false;
            for (std::size_t k : kept)
                if (lt(k).comp == lt(i).comp && lt(k).mono.divides(lt(i).mono)) {
                    divisible = true;
                    break;
                }
            if (!divisible) kept.push_back(i);
        }
        std::vector<ModVec> final_basis;
        std::vector<std::vector<Polynomial>> final_rows;
        for (std::size_t k : kept) {
            final_basis.push_back(std::move(basis[k]));
            if (opts.track_cofactors) final_rows.push_back(std::move(rows[k]));
        }
        basis = std::move(final_basis);
        rows = std::move(final_rows);
        // Tail reduction: full normal form of each element against the others.
        for (std::size_t i = 0; i < basis.size(); ++i) {
            ModVec self = std::move(basis[i]);
            basis[i].clear();  // exclude from its own reduction
            std::vector<Polynomial> red_cof;
            if (opts.track_cofactors) red_cof.assign(basis.size(), Polynomial::zero(ring));
            ModVec r = reduce(std::move(self), opts.track_cofactors ? &red_cof : nullptr);
            if (opts.track_cofactors) {
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    if (k == i || red_cof[k].is_zero()) continue;
                    for (std::size_t j = 0; j < ninput; ++j)
                        rows[i][j] = rows[i][j] - red_cof[k] * rows[k][j];
                }
            }
            basis[i] = std::move(r);
            make_monic(basis[i], opts.track_cofactors ? &rows[i] : nullptr);
        }
    }
};

std::string canonical_input_text(const std::vector<ModVec>& gens, const RingRef& ring,
                                 const ModuleOrder& order) {
    std::ostringstream os;
    os << ring->describe() << "|rank=" << order.rank << "|split=" << order.elim_split
       << "|base=" << (order.base == BaseOrder::grevlex ? "grevlex" : "lex");
    for (const auto& g : gens) os << "|" << mv_str(g, order.rank, ring);
    return os.str();
}

}  // namespace

GroebnerBasis buchberger(std::vector<ModVec> generators, RingRef ring, ModuleOrder order,
                         const GroebnerOptions& opts) {
    Engine eng;
    eng.ring = ring;
    eng.order = order;
    eng.opts = opts;
    GroebnerBasis gb;
    gb.ring = ring;
    gb.order = order;
    gb.input = generators;
    gb.input_hash = fnv1a64(canonical_input_text(generators, ring, order));
    eng.run(std::move(generators));
    gb.elements = std::move(eng.basis);
    gb.cofactors = std::move(eng.rows);
    return gb;
}

NormalFormResult normal_form(const ModVec& f, const GroebnerBasis& gb) {
    Engine eng;
    eng.ring = gb.ring;
    eng.order = gb.order;
    eng.opts.track_cofactors = true;
    eng.basis = gb.elements;
    NormalFormResult out;
    std::vector<Polynomial> cof(gb.elements.size(), Polynomial::zero(gb.ring));
    out.remainder = eng.reduce(f, &cof);
    out.cofactors = std::move(cof);
    return out;
}

bool verify_buchberger_criterion(const GroebnerBasis& gb) {
    Engine eng;
    eng.ring = gb.ring;
    eng.order = gb.order;
    eng.opts.pair_limit = ~0ull;
    eng.basis = gb.elements;
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
            const ModTerm& a = gb.elements[i].front();
            const ModTerm& b = gb.elements[j].front();
            if (a.comp != b.comp) continue;
            Monomial l = Monomial::lcm(a.mono, b.mono);
            FieldElement one = FieldElement::one(gb.ring->field());
            ModVec sp = mv_sub_mul(ModVec{}, gb.elements[i], l / a.mono, -(one / a.coeff),
                                   gb.order);
            sp = mv_sub_mul(sp, gb.elements[j], l / b.mono, one / b.coeff, gb.order);
            if (!eng.reduce(std::move(sp), nullptr).empty()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens)
        if (!g.is_homogeneous()) return false;
    return true;
}

void Ideal::validate() const {
    for (const auto& g : gens) {
        if (g.is_zero()) throw InputError("ideal generators must be nonzero");
        if (!g.ring()->same_as(*ring)) throw RingMismatch("ideal generator in a different ring");
    }
}

GroebnerBasis groebner_ideal(const Ideal& I, const GroebnerOptions& opts) {
    I.validate();
    std::vector<ModVec> gens;
    gens.reserve(I.gens.size());
    for (const auto& g : I.gens) gens.push_back(mv_from_poly(g));
    ModuleOrder order{I.ring->order(), 1, 0};
    return buchberger(std::move(gens), I.ring, order, opts);
}

PolyNormalForm normal_form_poly(const Polynomial& f, const GroebnerBasis& gb) {
    NormalFormResult r = normal_form(mv_from_poly(f), gb);
    return {mv_to_poly(r.remainder, gb.ring), std::move(r.cofactors)};
}

bool ideal_membership(const Polynomial& f, const Ideal& I, const GroebnerOptions& opts) {
    if (f.is_zero()) return true;
    GroebnerBasis gb = groebner_ideal(I, opts);
    return normal_form(mv_from_poly(f), gb).remainder.empty();
}

std::vector<std::vector<Polynomial>> ideal_lift_rows(const Ideal& I, std::size_t rank) {
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& f : I.gens) {
        for (std::size_t c = 0; c < rank; ++c) {
            std::vector<Polynomial> row(rank, Polynomial::zero(I.ring));
            row[c] = f;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

MembershipResult module_membership(const std::vector<Polynomial>& target,
                                   const std::vector<std::vector<Polynomial>>& generators,
                                   std::size_t rank, const Ideal& I,
                                   const GroebnerOptions& opts) {
    ModuleOrder order{I.ring->order(), static_cast<std::uint32_t>(rank), 0};
    std::vector<ModVec> gens;
    for (const auto& g : generators) gens.push_back(mv_from_vector(g, order));
    for (const auto& g : ideal_lift_rows(I, rank)) gens.push_back(mv_from_vector(g, order));
    GroebnerOptions gopts = opts;
    gopts.track_cofactors = true;
    MembershipResult out;
    out.gb = buchberger(std::move(gens), I.ring, order, gopts);
    NormalFormResult nf = normal_form(mv_from_vector(target, order), out.gb);
    out.member = nf.remainder.empty();
    out.remainder = mv_to_vector(nf.remainder, order.rank, I.ring);
    out.nf_cofactors = nf.cofactors;
    std::size_t ngens = out.gb.input.size();
    out.gen_cofactors.assign(ngens, Polynomial::zero(I.ring));
    for (std::size_t k = 0; k < out.gb.elements.size(); ++k) {
        if (nf.cofactors[k].is_zero()) continue;
        for (std::size_t j = 0; j < ngens; ++j)
            out.gen_cofactors[j] = out.gen_cofactors[j] + nf.cofactors[k] * out.gb.cofactors[k][j];
    }
    return out;
}

SyzygyBasis syzygy_basis(const std::vector<std::vector<Polynomial>>& rows, std::size_t rank,
                         const Ideal& I, const GroebnerOptions& opts) {
    const std::size_t k = rows.size();
    const std::uint32_t total = static_cast<std::uint32_t>(rank + k);
    ModuleOrder order{I.ring->order(), total, static_cast<std::uint32_t>(rank)};
    FieldElement one = FieldElement::one(I.ring->field());
    std::vector<ModVec> gens;
    for (std::size_t i = 0; i < k; ++i) {
        if (rows[i].size() != rank)
            throw InputError("syzygy row has wrong length");
        std::vector<ModTerm> terms;
        for (std::size_t c = 0; c < rank; ++c)
            for (const auto& t : rows[i].at(c).terms())
                terms.push_back({static_cast<std::uint32_t>(c), t.mono, t.coeff});
        terms.push_back({static_cast<std::uint32_t>(rank + i), Monomial(I.ring->nvars()), one});
        gens.push_back(mv_from_terms(std::move(terms), order));
    }
    auto lifts = ideal_lift_rows(I, rank);
    for (const auto& l : lifts) {
        std::vector<ModTerm> terms;
        for (std::size_t c = 0; c < rank; ++c)
            for (const auto& t : l[c].terms())
                terms.push_back({static_cast<std::uint32_t>(c), t.mono, t.coeff});
        gens.push_back(mv_from_terms(std::move(terms), order));
    }
    GroebnerOptions gopts = opts;
    gopts.track_cofactors = true;
    GroebnerBasis gb = buchberger(std::move(gens), I.ring, order, gopts);

    GroebnerBasis ideal_gb = groebner_ideal(I, opts);

    SyzygyBasis out;
    out.num_rows = k;
    for (std::size_t g = 0; g < gb.elements.size(); ++g) {
        const ModVec& v = gb.elements[g];
        bool pure_tracking = true;
        for (const auto& t : v)
            if (t.comp < rank) {
                pure_tracking = false;
                break;
            }
        if (!pure_tracking) continue;
        std::vector<Polynomial> full = mv_to_vector(v, total, I.ring);
        std::vector<Polynomial> lifted(full.begin() + rank, full.end());
        std::vector<Polynomial> reduced;
        bool all_zero = true;
        for (const auto& p : lifted) {
            Polynomial r = normal_form_poly(p, ideal_gb).remainder;
            if (!r.is_zero()) all_zero = false;
            reduced.push_back(std::move(r));
        }
        if (all_zero) continue;
        std::vector<Polynomial> lift_cof(gb.cofactors[g].begin() + k, gb.cofactors[g].end());
        out.lifted.push_back(std::move(lifted));
        out.reduced.push_back(std::move(reduced));
        out.lift_cofactors.push_back(std::move(lift_cof));
    }
    return out;
}

}  // namespace symsig
