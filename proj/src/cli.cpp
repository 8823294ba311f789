#include "symsig/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

#include "symsig/report.hpp"

namespace symsig::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Common {
    std::string json_path;
    std::uint64_t limit_pairs = 1'000'000;
    std::optional<std::uint64_t> characteristic;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_char) {
    cmd->add_option("--json", c.json_path,
                    "write the JSON report to this path ('-' prints the JSON instead of text)");
    cmd->add_option("--limit-pairs", c.limit_pairs, "Groebner pair budget")
        ->envname("SYMSIG_LIMIT_PAIRS");
    if (with_char)
        cmd->add_option("--char", c.characteristic, "coefficient characteristic (0 or a prime)");
    cmd->add_option("--seed", c.seed,
                    "echoed into the report; only randomized test corpora consume it");
}

void emit(json report, const Common& c, const Clock::time_point& start, std::ostream& out,
          json* captured) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    report["meta"] = {{"wall_ms", ms.count()}};
    if (captured) *captured = report;
    if (c.json_path == "-") {
        out << report.dump(2) << "\n";
        return;
    }
    if (!c.json_path.empty()) {
        std::ofstream f(c.json_path);
        if (!f) throw InputError("cannot write JSON report to '" + c.json_path + "'");
        f << report.dump(2) << "\n";
    }
    out << render_report(report);
}

json merge_envelope(json envelope, json payload) {
    for (auto& [key, value] : payload.items()) envelope[key] = std::move(value);
    return envelope;
}

std::string poly_input(const std::string& poly_flag, const std::string& poly_file,
                       const RingFileData& ring_file) {
    if (!poly_flag.empty()) return poly_flag;
    if (!poly_file.empty()) {
        std::string text = read_file(poly_file);
        auto end = text.find_last_not_of(" \t\r\n");
        return end == std::string::npos ? text : text.substr(0, end + 1);
    }
    if (ring_file.polys.size() == 1) return ring_file.polys[0].str();
    throw InputError("no polynomial given: pass --poly, --poly-file, or a single poly line "
                     "in the ring file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        json* captured_report) {
    CLI::App app{"exact free-rank and symmetric-signature certificates for graded rings"};
    app.require_subcommand(1);

    // hypersurface
    auto* hyp = app.add_subcommand(
        "hypersurface", "signature pipeline for R = k[x_1..x_n]/(f), isolated singularity");
    Common hyp_c;
    std::string hyp_ring, hyp_poly, hyp_poly_file;
    std::uint64_t hyp_max_q = 3;
    bool hyp_domain = false;
    hyp->add_option("--ring", hyp_ring, "ring file")->required();
    hyp->add_option("--poly", hyp_poly, "hypersurface equation");
    hyp->add_option("--poly-file", hyp_poly_file, "read the equation from a file");
    hyp->add_option("--max-q", hyp_max_q, "cross-check Sym^q free ranks up to this power");
    hyp->add_flag("--assume-domain", hyp_domain, "assert that R is a domain");
    add_common(hyp, hyp_c, true);

    // ci-freerank
    auto* ci = app.add_subcommand(
        "ci-freerank", "free-rank workflow for complete intersections and determinantal rings");
    Common ci_c;
    std::string ci_ideal;
    std::uint64_t ci_max_q = 1;
    bool ci_domain = false, ci_reflexive = false;
    ci->add_option("--ideal", ci_ideal, "ideal file (ring header plus poly lines)")->required();
    ci->add_option("--max-q", ci_max_q, "cross-check Sym^q free ranks up to this power");
    ci->add_flag("--assume-domain", ci_domain, "assert that R is a domain");
    ci->add_flag("--assume-reflexive", ci_reflexive,
                 "assert reflexivity of the symmetric powers (e.g. verified externally)");
    add_common(ci, ci_c, true);

    // quotient
    auto* quo = app.add_subcommand("quotient",
                                   "signature 1/|G| for invariant rings of finite small groups");
    Common quo_c;
    std::string quo_group;
    std::uint64_t quo_max_degree = 200;
    quo->add_option("--group", quo_group, "group file")->required();
    quo->add_option("--max-degree", quo_max_degree, "Molien truncation degree");
    add_common(quo, quo_c, true);

    // groebner / nf / dim / hilbert
    auto* grb = app.add_subcommand("groebner", "reduced Groebner basis of an ideal file");
    Common grb_c;
    std::string grb_ideal;
    grb->add_option("--ideal", grb_ideal, "ideal file")->required();
    add_common(grb, grb_c, true);

    auto* nfc = app.add_subcommand("nf", "normal form with cofactors");
    Common nf_c;
    std::string nf_ideal, nf_poly;
    nfc->add_option("--ideal", nf_ideal, "ideal file")->required();
    nfc->add_option("--poly", nf_poly, "polynomial to reduce")->required();
    add_common(nfc, nf_c, true);

    auto* dim = app.add_subcommand("dim", "Krull dimension of P/I");
    Common dim_c;
    std::string dim_ideal;
    dim->add_option("--ideal", dim_ideal, "ideal file")->required();
    add_common(dim, dim_c, true);

    auto* hil = app.add_subcommand("hilbert", "Hilbert series of a homogeneous quotient");
    Common hil_c;
    std::string hil_ideal;
    std::uint64_t hil_max_q = 10;
    hil->add_option("--ideal", hil_ideal, "ideal file")->required();
    hil->add_option("--max-q", hil_max_q, "print coefficients up to this degree");
    add_common(hil, hil_c, true);

    auto* ver = app.add_subcommand("verify", "replay the certificate trail of a report");
    Common ver_c;
    std::string ver_path;
    ver->add_option("report", ver_path, "report JSON file")->required();
    add_common(ver, ver_c, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "symsig: " << e.what() << "\n";
        return 2;
    }

    auto start = Clock::now();
    auto envelope_for = [&](const std::vector<std::pair<std::string, std::string>>& inputs) {
        return report_envelope(args, inputs);
    };

    try {
        if (hyp->parsed()) {
            std::string text = read_file(hyp_ring);
            RingFileData rf = read_ring_text(text, hyp_c.characteristic);
            std::string poly_text = poly_input(hyp_poly, hyp_poly_file, rf);
            Polynomial f = parse_polynomial(poly_text, rf.ring);
            HypersurfaceOptions opts;
            opts.max_q = hyp_max_q;
            opts.assume_domain = hyp_domain;
            opts.groebner.pair_limit = hyp_c.limit_pairs;
            DifferentialSignatureReport rep = hypersurface_signature(f, opts);
            json report = merge_envelope(
                envelope_for({{hyp_ring, text}, {"poly", poly_text}}),
                differential_report(rep, "hypersurface"));
            emit(std::move(report), hyp_c, start, out, captured_report);
            return 0;
        }
        if (ci->parsed()) {
            std::string text = read_file(ci_ideal);
            RingFileData rf = read_ring_text(text, ci_c.characteristic);
            if (rf.polys.empty()) throw InputError("ideal file has no poly lines");
            CiOptions opts;
            opts.max_q = ci_max_q;
            opts.assume_domain = ci_domain;
            opts.assume_reflexive = ci_reflexive;
            opts.groebner.pair_limit = ci_c.limit_pairs;
            Ideal I{rf.ring, rf.polys};
            DifferentialSignatureReport rep = ci_freerank(I, opts);
            json report = merge_envelope(envelope_for({{ci_ideal, text}}),
                                         differential_report(rep, "ci-freerank"));
            emit(std::move(report), ci_c, start, out, captured_report);
            return 0;
        }
        if (quo->parsed()) {
            std::string text = read_file(quo_group);
            GroupFileData gf = read_group_text(text);
            MatrixGroup G = group_closure(gf.generators, gf.cap);
            std::uint64_t characteristic = quo_c.characteristic.value_or(0);
            if (characteristic != 0 && !is_small_prime(characteristic))
                throw InputError("--char must be 0 or a prime");
            json report;
            try {
                QuotientSignatureReport rep =
                    quotient_signature(G, characteristic, quo_max_degree);
                report = merge_envelope(envelope_for({{quo_group, text}}),
                                        quotient_report(rep, gf));
            } catch (const NotSmall& e) {
                report = merge_envelope(
                    envelope_for({{quo_group, text}}),
                    quotient_refusal(gf, G.order(), characteristic, "group is not small",
                                     mat_str(G.elements[e.witness_index()])));
            } catch (const CharacteristicDividesOrder& e) {
                report = merge_envelope(
                    envelope_for({{quo_group, text}}),
                    quotient_refusal(gf, G.order(), characteristic, e.what(), ""));
            }
            emit(std::move(report), quo_c, start, out, captured_report);
            return 0;
        }
        if (grb->parsed() || nfc->parsed() || dim->parsed() || hil->parsed()) {
            const Common& c = grb->parsed() ? grb_c : nfc->parsed() ? nf_c
                              : dim->parsed() ? dim_c : hil_c;
            const std::string& path = grb->parsed() ? grb_ideal : nfc->parsed() ? nf_ideal
                                       : dim->parsed() ? dim_ideal : hil_ideal;
            std::string text = read_file(path);
            RingFileData rf = read_ring_text(text, c.characteristic);
            if (rf.polys.empty()) throw InputError("ideal file has no poly lines");
            Ideal I{rf.ring, rf.polys};
            GroebnerOptions gopts;
            gopts.pair_limit = c.limit_pairs;
            json verdict;
            std::vector<std::pair<std::string, std::string>> inputs{{path, text}};
            if (grb->parsed()) {
                GroebnerBasis gb = groebner_ideal(I, gopts);
                std::vector<std::string> basis;
                for (const auto& e : gb.elements) basis.push_back(mv_to_poly(e, I.ring).str());
                verdict = {{"kind", "groebner"}, {"basis", basis}};
            } else if (nfc->parsed()) {
                GroebnerBasis gb = groebner_ideal(I, gopts);
                Polynomial f = parse_polynomial(nf_poly, rf.ring);
                PolyNormalForm nf = normal_form_poly(f, gb);
                std::vector<std::string> cof, basis;
                for (const auto& p : nf.cofactors) cof.push_back(p.str());
                for (const auto& e : gb.elements) basis.push_back(mv_to_poly(e, I.ring).str());
                verdict = {{"kind", "normal-form"},
                           {"poly", f.str()},
                           {"remainder", nf.remainder.str()},
                           {"cofactors", cof},
                           {"basis", basis}};
                inputs.push_back({"poly", nf_poly});
            } else if (dim->parsed()) {
                verdict = {{"kind", "dimension"}, {"dim", krull_dimension(I, gopts)}};
            } else {
                HilbertSeries h = hilbert_series(I, gopts);
                std::vector<std::string> numer, coeffs;
                for (const auto& n : h.numerator) numer.push_back(n.get_str());
                for (std::uint64_t q = 0; q <= hil_max_q; ++q)
                    coeffs.push_back(h.coefficient(q).get_str());
                verdict = {{"kind", "hilbert"},
                           {"series", h.str()},
                           {"numerator", numer},
                           {"denominator_power", h.denominator_power},
                           {"coefficients", coeffs}};
            }
            json report = merge_envelope(envelope_for(inputs), json{{"verdict", verdict}});
            report["problem"] = {{"kind", verdict["kind"]},
                                 {"ring", ring_to_json(rf.ring)},
                                 {"ideal", json::array()}};
            for (const auto& g : I.gens) report["problem"]["ideal"].push_back(g.str());
            report["certificates"] = json::array();
            report["warnings"] = json::array();
            emit(std::move(report), c, start, out, captured_report);
            return 0;
        }
        if (ver->parsed()) {
            json report = json::parse(read_file(ver_path));
            VerifyOutcome outcome = verify_report(report);
            for (const auto& line : outcome.lines) out << line << "\n";
            out << (outcome.ok ? "verification passed" : "VERIFICATION FAILED") << "\n";
            return outcome.ok ? 0 : 4;
        }
    } catch (const ResourceLimitExceeded& e) {
        err << "symsig: resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ClosureCapExceeded& e) {
        err << "symsig: resource limit: " << e.what() << "\n";
        return 3;
    } catch (const InternalConsistencyError& e) {
        err << "symsig: internal consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const NonIntegerCoefficient& e) {
        err << "symsig: internal consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        err << "symsig: input error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "symsig: input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "symsig: input error: " << e.what() << "\n";
        return 2;
    }
    err << "symsig: no subcommand\n";
    return 2;
}

}  // namespace symsig::cli
