#include "symsig/report.hpp"

#include <algorithm>
#include <sstream>

namespace symsig {

using nlohmann::json;

json ring_to_json(const RingRef& ring) {
    json j;
    j["vars"] = ring->variables();
    switch (ring->field()->kind()) {
        case FieldKind::rational: j["field"] = {{"kind", "rational"}}; break;
        case FieldKind::prime:
            j["field"] = {{"kind", "prime"}, {"p", ring->field()->prime()}};
            break;
        case FieldKind::cyclotomic:
            j["field"] = {{"kind", "cyclotomic"}, {"conductor", ring->field()->conductor()}};
            break;
    }
    j["order"] = ring->order() == BaseOrder::grevlex ? "grevlex" : "lex";
    return j;
}

namespace {

FieldRef field_from_json(const json& f) {
    std::string kind = f.at("kind");
    if (kind == "rational") return FieldDescriptor::rationals();
    if (kind == "prime") return FieldDescriptor::prime_field(f.at("p").get<std::uint64_t>());
    if (kind == "cyclotomic")
        return FieldDescriptor::cyclotomic(f.at("conductor").get<unsigned>());
    throw InputError("unknown field kind '" + kind + "' in report");
}

}  // namespace

RingRef ring_from_json(const json& j) {
    FieldRef field = field_from_json(j.at("field"));
    BaseOrder order = j.at("order") == "lex" ? BaseOrder::lex : BaseOrder::grevlex;
    return PolyRing::make(j.at("vars").get<std::vector<std::string>>(), field, order);
}

json group_to_json(const GroupFileData& g) {
    json j;
    j["n"] = g.dim;
    if (g.field->kind() == FieldKind::cyclotomic) j["cyclotomic_order"] = g.field->conductor();
    j["cap"] = g.cap;
    std::vector<std::string> gens;
    for (const auto& m : g.generators) gens.push_back(mat_str(m));
    j["generators"] = gens;
    return j;
}

GroupFileData group_from_json(const json& j) {
    std::ostringstream os;
    os << "n " << j.at("n").get<std::size_t>() << "\n";
    if (j.contains("cyclotomic_order"))
        os << "cyclotomic_order " << j.at("cyclotomic_order").get<unsigned>() << "\n";
    if (j.contains("cap")) os << "cap " << j.at("cap").get<std::size_t>() << "\n";
    for (const auto& g : j.at("generators")) os << "generator " << g.get<std::string>() << "\n";
    return read_group_text(os.str());
}

namespace {

json polyvec_to_json(const std::vector<Polynomial>& v) {
    json out = json::array();
    for (const auto& p : v) out.push_back(p.str());
    return out;
}

std::vector<Polynomial> polyvec_from_json(const json& j, const RingRef& ring) {
    std::vector<Polynomial> out;
    for (const auto& t : j) out.push_back(parse_polynomial(t.get<std::string>(), ring));
    return out;
}

json matrix_of_polys_to_json(const std::vector<std::vector<Polynomial>>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(polyvec_to_json(r));
    return out;
}

std::vector<std::vector<Polynomial>> matrix_of_polys_from_json(const json& j,
                                                               const RingRef& ring) {
    std::vector<std::vector<Polynomial>> out;
    for (const auto& r : j) out.push_back(polyvec_from_json(r, ring));
    return out;
}

json membership_certificate(const ColumnTestRecord& rec, const RingRef& ring,
                            std::uint32_t rank) {
    const MembershipResult& m = rec.membership;
    json cert;
    cert["kind"] = "column-membership";
    cert["column"] = rec.column;
    cert["member"] = m.member;
    cert["rank"] = rank;
    json gens = json::array();
    for (const auto& g : m.gb.input) gens.push_back(polyvec_to_json(mv_to_vector(g, rank, ring)));
    cert["generators"] = gens;
    json basis = json::array();
    for (const auto& b : m.gb.elements)
        basis.push_back(polyvec_to_json(mv_to_vector(b, rank, ring)));
    cert["basis"] = basis;
    cert["basis_cofactors"] = matrix_of_polys_to_json(m.gb.cofactors);
    cert["nf_cofactors"] = polyvec_to_json(m.nf_cofactors);
    cert["remainder"] = polyvec_to_json(m.remainder);
    return cert;
}

json syzygy_certificate(const FreeRankResult& fr, std::uint64_t q, std::size_t relation_count) {
    json cert;
    cert["kind"] = "syzygy-freerank";
    cert["q"] = q;
    cert["rank"] = relation_count;
    cert["positive"] = fr.positive;
    cert["free_presentation"] = fr.free_presentation;
    if (fr.free_presentation) return cert;
    // Rows of the transposed relation matrix are reproducible from the
    // problem ideal; store the syzygies themselves plus lift cofactors.
    json syz = json::array();
    for (std::size_t s = 0; s < fr.syzygies.reduced.size(); ++s) {
        json one;
        one["lifted"] = polyvec_to_json(fr.syzygies.lifted[s]);
        one["reduced"] = polyvec_to_json(fr.syzygies.reduced[s]);
        one["lift_cofactors"] = polyvec_to_json(fr.syzygies.lift_cofactors[s]);
        syz.push_back(std::move(one));
    }
    cert["syzygies"] = std::move(syz);
    if (fr.witness_generator) {
        cert["witness"] = {{"generator", *fr.witness_generator}, {"entry", *fr.witness_entry}};
    } else {
        cert["witness"] = nullptr;
    }
    cert["degree_profile"] = fr.degree_profile;
    return cert;
}

const char* status_string(DifferentialSignatureReport::Status s) {
    switch (s) {
        case DifferentialSignatureReport::Status::exact_zero: return "exact";
        case DifferentialSignatureReport::Status::regular_one: return "regular";
        case DifferentialSignatureReport::Status::conditional_zero:
            return "conditional-on-reflexivity";
        case DifferentialSignatureReport::Status::undecided: return "undecided";
    }
    return "?";
}

}  // namespace

json differential_report(const DifferentialSignatureReport& rep, const std::string& kind) {
    json j;
    j["problem"] = {{"kind", kind},
                    {"ring", ring_to_json(rep.ideal.ring)},
                    {"ideal", polyvec_to_json(rep.ideal.gens)}};

    json verdict;
    verdict["kind"] = "differential-signature";
    verdict["status"] = status_string(rep.status);
    switch (rep.status) {
        case DifferentialSignatureReport::Status::exact_zero:
        case DifferentialSignatureReport::Status::conditional_zero: verdict["signature"] = "0"; break;
        case DifferentialSignatureReport::Status::regular_one: verdict["signature"] = "1"; break;
        case DifferentialSignatureReport::Status::undecided: verdict["signature"] = nullptr; break;
    }
    verdict["reason"] = rep.reason;
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"asserted", c.asserted},
                          {"detail", c.detail}});
    verdict["checks"] = std::move(checks);
    if (rep.column_test && rep.syzygy_test) {
        verdict["freerank_omega"] = {
            {"column_test", rep.column_test->positive ? "positive" : "zero"},
            {"syzygy_test", rep.syzygy_test->positive ? "positive" : "zero"},
            {"agree", rep.column_test->positive == rep.syzygy_test->positive}};
        json cols = json::array();
        for (const auto& c : rep.column_test->columns)
            cols.push_back({{"column", c.column}, {"member", c.membership.member}});
        verdict["column_results"] = std::move(cols);
    }
    json syms = json::array();
    for (const auto& s : rep.sym_checks)
        syms.push_back({{"q", s.q},
                        {"generators", s.generators},
                        {"relations", s.relations},
                        {"freerank", s.positive ? "positive" : "zero"}});
    verdict["sym_checks"] = std::move(syms);
    json jac = json::array();
    for (const auto& row : rep.jac.rows) jac.push_back(polyvec_to_json(row));
    verdict["jacobian"] = std::move(jac);
    j["verdict"] = std::move(verdict);

    json hyp = {{"verified", json::array()}, {"asserted", json::array()}, {"failed", json::array()}};
    for (const auto& c : rep.checks) {
        if (!c.passed) {
            hyp["failed"].push_back(c.name);
        } else if (c.asserted) {
            hyp["asserted"].push_back(c.name);
        } else {
            hyp["verified"].push_back(c.name);
        }
    }
    j["hypotheses"] = std::move(hyp);
    j["warnings"] = rep.warnings;

    json certs = json::array();
    if (rep.column_test && !rep.column_test->free_presentation) {
        std::uint32_t rank = static_cast<std::uint32_t>(rep.num_equations);
        for (const auto& rec : rep.column_test->columns)
            certs.push_back(membership_certificate(rec, rep.ideal.ring, rank));
    }
    if (rep.syzygy_test)
        certs.push_back(
            syzygy_certificate(*rep.syzygy_test, 1, rep.num_equations));
    j["certificates"] = std::move(certs);
    return j;
}

json quotient_report(const QuotientSignatureReport& rep, const GroupFileData& input) {
    json j;
    j["problem"] = {{"kind", "quotient"}, {"group", group_to_json(input)}};
    json verdict;
    verdict["kind"] = "quotient-signature";
    verdict["status"] = "exact";
    verdict["signature"] = rep.signature.get_str();
    verdict["group_order"] = rep.group_order;
    verdict["dim"] = rep.dim;
    verdict["characteristic"] = rep.characteristic;
    verdict["small"] = rep.small;
    verdict["coprime"] = rep.coprime;
    std::vector<std::string> num, den, a, b;
    for (const auto& c : rep.molien.numerator) num.push_back(c.get_str());
    for (const auto& c : rep.molien.denominator) den.push_back(c.get_str());
    for (const auto& c : rep.molien.a) a.push_back(c.get_str());
    for (const auto& c : rep.molien.b) b.push_back(c.get_str());
    verdict["molien"] = {{"numerator", num}, {"denominator", den}, {"a", a}, {"b", b}};
    json table = json::array();
    for (const auto& row : rep.table)
        table.push_back({{"N", row.N},
                         {"ratio", row.ratio.get_str()},
                         {"abs_error", row.abs_error.get_str()}});
    verdict["convergence"] = std::move(table);
    verdict["note"] =
        "the exact value rests on the verified smallness and coprimality hypotheses; "
        "the convergence table is finite-truncation evidence, not the verdict";
    j["verdict"] = std::move(verdict);
    j["hypotheses"] = {{"verified", {"small", "coprime"}},
                       {"asserted", json::array()},
                       {"failed", json::array()}};
    j["warnings"] = json::array();
    if (rep.characteristic > 0)
        j["warnings"].push_back(
            "invariant dimensions computed in characteristic 0; valid for every "
            "characteristic coprime to the group order");

    // Three sampled degrees for the verify replay.
    std::size_t N = rep.molien.a.size() - 1;
    std::vector<std::size_t> samples{std::min<std::size_t>(3, N), std::min(N / 2, N), N};
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    json cert;
    cert["kind"] = "molien";
    cert["sampled_degrees"] = samples;
    std::vector<std::string> sampled_values;
    for (std::size_t q : samples) sampled_values.push_back(rep.molien.a[q].get_str());
    cert["coefficients"] = sampled_values;
    j["certificates"] = json::array({cert});
    return j;
}

json quotient_refusal(const GroupFileData& input, std::size_t group_order,
                      std::uint64_t characteristic, const std::string& reason,
                      const std::string& witness) {
    json j;
    j["problem"] = {{"kind", "quotient"}, {"group", group_to_json(input)}};
    json verdict;
    verdict["kind"] = "quotient-signature";
    verdict["status"] = "refused";
    verdict["signature"] = nullptr;
    verdict["group_order"] = group_order;
    verdict["characteristic"] = characteristic;
    verdict["refusal"] = {{"reason", reason}, {"witness", witness}};
    j["verdict"] = std::move(verdict);
    j["hypotheses"] = {{"verified", json::array()},
                       {"asserted", json::array()},
                       {"failed", {reason}}};
    j["warnings"] = json::array();
    j["certificates"] = json::array();
    return j;
}

json report_envelope(const std::vector<std::string>& command,
                     const std::vector<std::pair<std::string, std::string>>& inputs) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    json in = json::array();
    for (const auto& [name, content] : inputs) {
        std::ostringstream hex;
        hex << "0x" << std::hex << fnv1a64(content);
        in.push_back({{"name", name}, {"fnv1a64", hex.str()}});
    }
    j["inputs"] = std::move(in);
    return j;
}

// ---------------------------------------------------------------------------
// Human rendering

namespace {

void render_checks(std::ostringstream& os, const json& verdict) {
    if (!verdict.contains("checks")) return;
    for (const auto& c : verdict["checks"]) {
        os << "  [" << (c["passed"].get<bool>() ? "ok" : "FAILED") << "] "
           << c["name"].get<std::string>();
        if (c["asserted"].get<bool>()) os << " (asserted)";
        std::string detail = c["detail"].get<std::string>();
        if (!detail.empty()) os << " — " << detail;
        os << "\n";
    }
}

}  // namespace

std::string render_report(const json& report) {
    std::ostringstream os;
    const json& verdict = report.at("verdict");
    std::string kind = verdict.at("kind");
    if (kind == "differential-signature") {
        std::string status = verdict.at("status");
        os << "status: " << status << "\n";
        if (!verdict.at("signature").is_null())
            os << "differential symmetric signature: " << verdict["signature"].get<std::string>()
               << (status == "conditional-on-reflexivity" ? " (conditional on reflexivity)" : "")
               << "\n";
        if (!verdict.at("reason").get<std::string>().empty())
            os << "reason: " << verdict["reason"].get<std::string>() << "\n";
        if (verdict.contains("freerank_omega"))
            os << "freerank of the differential module: "
               << verdict["freerank_omega"]["column_test"].get<std::string>()
               << " (column test), "
               << verdict["freerank_omega"]["syzygy_test"].get<std::string>()
               << " (syzygy test)\n";
        if (verdict.contains("column_results")) {
            os << "column memberships:";
            for (const auto& c : verdict["column_results"])
                os << " " << c["column"].get<std::size_t>() << ":"
                   << (c["member"].get<bool>() ? "yes" : "no");
            os << "\n";
        }
        for (const auto& s : verdict["sym_checks"])
            os << "freerank Sym^" << s["q"].get<std::uint64_t>() << ": "
               << s["freerank"].get<std::string>() << " (" << s["generators"].get<std::size_t>()
               << " generators, " << s["relations"].get<std::size_t>() << " relations)\n";
        os << "hypotheses:\n";
        render_checks(os, verdict);
    } else if (kind == "quotient-signature") {
        std::string status = verdict.at("status");
        os << "status: " << status << "\n";
        if (status == "refused") {
            os << "reason: " << verdict["refusal"]["reason"].get<std::string>() << "\n";
            os << "witness: " << verdict["refusal"]["witness"].get<std::string>() << "\n";
        } else {
            os << "group order: " << verdict["group_order"].get<std::size_t>() << "\n";
            os << "differential symmetric signature: " << verdict["signature"].get<std::string>()
               << " (= 1/|G|)\n";
            const auto& m = verdict["molien"];
            os << "invariant Hilbert series: (";
            const auto& num = m["numerator"];
            for (std::size_t i = 0; i < num.size(); ++i)
                os << (i ? " + " : "") << num[i].get<std::string>() << (i ? "*t^" + std::to_string(i) : "");
            os << ") / (";
            const auto& den = m["denominator"];
            for (std::size_t i = 0; i < den.size(); ++i)
                os << (i ? " + " : "") << den[i].get<std::string>() << (i ? "*t^" + std::to_string(i) : "");
            os << ")\n";
            os << "convergence (N, ratio, |ratio - 1/|G||):\n";
            for (const auto& row : verdict["convergence"])
                os << "  " << row["N"].get<std::size_t>() << "  "
                   << row["ratio"].get<std::string>() << "  "
                   << row["abs_error"].get<std::string>() << "\n";
            os << "note: " << verdict["note"].get<std::string>() << "\n";
        }
    } else if (kind == "groebner") {
        os << "reduced Groebner basis (" << verdict["basis"].size() << " elements):\n";
        for (const auto& b : verdict["basis"]) os << "  " << b.get<std::string>() << "\n";
    } else if (kind == "normal-form") {
        os << "remainder: " << verdict["remainder"].get<std::string>() << "\n";
        os << "cofactors:\n";
        for (const auto& c : verdict["cofactors"]) os << "  " << c.get<std::string>() << "\n";
    } else if (kind == "dimension") {
        os << "Krull dimension: " << verdict["dim"].get<int>() << "\n";
    } else if (kind == "hilbert") {
        os << "Hilbert series: " << verdict["series"].get<std::string>() << "\n";
        os << "coefficients:";
        for (const auto& c : verdict["coefficients"]) os << " " << c.get<std::string>();
        os << "\n";
    } else {
        os << report.dump(2) << "\n";
    }
    if (report.contains("warnings"))
        for (const auto& w : report["warnings"])
            os << "warning: " << w.get<std::string>() << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Certificate replay

namespace {

struct Replayer {
    RingRef ring;
    Ideal ideal;
    VerifyOutcome out;

    void fail(const std::string& line) {
        out.ok = false;
        out.lines.push_back("[FAIL] " + line);
    }
    void pass(const std::string& line) { out.lines.push_back("[ok] " + line); }

    void check_membership(const json& cert) {
        std::uint32_t rank = cert.at("rank").get<std::uint32_t>();
        std::string label = "column " + std::to_string(cert.at("column").get<std::size_t>()) +
                            " membership certificate";
        auto gens = matrix_of_polys_from_json(cert.at("generators"), ring);
        auto basis_vecs = matrix_of_polys_from_json(cert.at("basis"), ring);
        auto basis_cof = matrix_of_polys_from_json(cert.at("basis_cofactors"), ring);
        auto nf_cof = polyvec_from_json(cert.at("nf_cofactors"), ring);
        auto remainder = polyvec_from_json(cert.at("remainder"), ring);
        bool member = cert.at("member").get<bool>();

        // Reconstruct the target from the problem ideal's Jacobian.
        JacobianMatrix J = jacobian(ideal);
        std::size_t col = cert.at("column").get<std::size_t>();
        std::vector<Polynomial> target;
        for (std::size_t i = 0; i < J.rows.size(); ++i) target.push_back(J.rows[i][col]);

        // (a) every basis element is a combination of the generators
        for (std::size_t i = 0; i < basis_vecs.size(); ++i) {
            for (std::uint32_t c = 0; c < rank; ++c) {
                Polynomial acc = Polynomial::zero(ring);
                for (std::size_t jg = 0; jg < gens.size(); ++jg)
                    acc = acc + basis_cof[i][jg] * gens[jg][c];
                if (!(acc == basis_vecs[i][c])) {
                    fail(label + ": basis element " + std::to_string(i) +
                         " is not the claimed generator combination");
                    return;
                }
            }
        }
        // (b) target = sum nf_cof * basis + remainder
        for (std::uint32_t c = 0; c < rank; ++c) {
            Polynomial acc = remainder[c];
            for (std::size_t k = 0; k < basis_vecs.size(); ++k)
                acc = acc + nf_cof[k] * basis_vecs[k][c];
            if (!(acc == target[c])) {
                fail(label + ": cofactor identity does not reproduce the column");
                return;
            }
        }
        // (c) remainder is in normal form w.r.t. the basis leading terms
        ModuleOrder order{ring->order(), rank, 0};
        std::vector<ModVec> basis_mv;
        for (const auto& b : basis_vecs) basis_mv.push_back(mv_from_vector(b, order));
        ModVec rem_mv = mv_from_vector(remainder, order);
        for (const auto& t : rem_mv)
            for (const auto& b : basis_mv)
                if (!b.empty() && b.front().comp == t.comp && b.front().mono.divides(t.mono)) {
                    fail(label + ": remainder is not fully reduced");
                    return;
                }
        // (d) verdict matches
        if (member != rem_mv.empty()) {
            fail(label + ": member flag contradicts the remainder");
            return;
        }
        // (e) the stored basis passes the Buchberger criterion
        GroebnerBasis gb;
        gb.ring = ring;
        gb.order = order;
        gb.elements = basis_mv;
        if (!verify_buchberger_criterion(gb)) {
            fail(label + ": stored basis fails the S-pair criterion");
            return;
        }
        pass(label + (member ? " (member)" : " (non-member)"));
    }

    void check_syzygy(const json& cert) {
        std::string label = "Sym^" + std::to_string(cert.at("q").get<std::uint64_t>()) +
                            " syzygy certificate";
        if (cert.at("free_presentation").get<bool>()) {
            pass(label + " (free presentation)");
            return;
        }
        std::uint64_t q = cert.at("q").get<std::uint64_t>();
        PresentationMatrix pres = sym_power_presentation(ideal, q);
        const std::size_t r = pres.relations.size();
        const std::size_t g = pres.generator_labels.size();
        if (cert.at("rank").get<std::size_t>() != r) {
            fail(label + ": stored rank disagrees with the presentation");
            return;
        }
        std::vector<std::vector<Polynomial>> rows(g);
        for (std::size_t nu = 0; nu < g; ++nu)
            for (std::size_t mu = 0; mu < r; ++mu) rows[nu].push_back(pres.relations[mu][nu]);
        auto lift_rows = ideal_lift_rows(ideal, r);
        GroebnerBasis igb = groebner_ideal(ideal);

        bool witness_found = false;
        for (const auto& syz : cert.at("syzygies")) {
            auto lifted = polyvec_from_json(syz.at("lifted"), ring);
            auto reduced = polyvec_from_json(syz.at("reduced"), ring);
            auto lift_cof = polyvec_from_json(syz.at("lift_cofactors"), ring);
            if (lifted.size() != g || lift_cof.size() != lift_rows.size()) {
                fail(label + ": syzygy has the wrong shape");
                return;
            }
            for (std::size_t c = 0; c < r; ++c) {
                Polynomial acc = Polynomial::zero(ring);
                for (std::size_t i = 0; i < g; ++i) acc = acc + lifted[i] * rows[i][c];
                for (std::size_t l = 0; l < lift_rows.size(); ++l)
                    acc = acc + lift_cof[l] * lift_rows[l][c];
                if (!acc.is_zero()) {
                    fail(label + ": stored vector is not a syzygy of the relation matrix");
                    return;
                }
            }
            for (std::size_t i = 0; i < g; ++i) {
                Polynomial nf = normal_form_poly(lifted[i], igb).remainder;
                if (!(nf == reduced[i])) {
                    fail(label + ": reduced entries are not the normal forms of the lift");
                    return;
                }
                if (reduced[i].is_unit_scalar()) witness_found = true;
            }
        }
        bool positive = cert.at("positive").get<bool>();
        if (positive && !witness_found) {
            fail(label + ": claimed positive but no stored syzygy has a scalar entry");
            return;
        }
        if (!positive && witness_found) {
            fail(label + ": claimed zero but a stored syzygy has a scalar entry");
            return;
        }
        pass(label + (positive ? " (positive)" : " (zero)"));
    }

    void check_molien(const json& cert, const json& problem) {
        GroupFileData gf = group_from_json(problem.at("group"));
        MatrixGroup G = group_closure(gf.generators, gf.cap);
        auto degrees = cert.at("sampled_degrees").get<std::vector<std::size_t>>();
        auto values = cert.at("coefficients").get<std::vector<std::string>>();
        std::size_t max_q = 0;
        for (auto d : degrees) max_q = std::max(max_q, d);
        std::vector<mpq_class> traced = molien_by_traces(G, max_q);
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            mpq_class expected(values[i]);
            expected.canonicalize();
            if (traced[degrees[i]] != expected) {
                fail("Molien coefficient a_" + std::to_string(degrees[i]) +
                     " does not replay by trace averaging");
                return;
            }
        }
        pass("Molien coefficients re-averaged at " + std::to_string(degrees.size()) +
             " sampled degrees");
    }
};

}  // namespace

VerifyOutcome verify_report(const json& report) {
    Replayer rep;
    const json& problem = report.at("problem");
    if (problem.contains("ring")) {
        rep.ring = ring_from_json(problem.at("ring"));
        rep.ideal.ring = rep.ring;
        if (problem.contains("ideal"))
            rep.ideal.gens = polyvec_from_json(problem.at("ideal"), rep.ring);
    }
    const json& certs = report.at("certificates");
    if (certs.empty()) {
        rep.out.lines.push_back("[ok] no certificates to replay");
        return rep.out;
    }
    for (const auto& cert : certs) {
        std::string kind = cert.at("kind");
        if (kind == "column-membership") {
            rep.check_membership(cert);
        } else if (kind == "syzygy-freerank") {
            rep.check_syzygy(cert);
        } else if (kind == "molien") {
            rep.check_molien(cert, problem);
        } else {
            rep.fail("unknown certificate kind '" + kind + "'");
        }
    }
    return rep.out;
}

}  // namespace symsig
