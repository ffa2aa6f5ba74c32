// twozero - exact weight distributions of two-zero cyclic codes in the
// index-2 Gauss sum family, with brute-force verification tooling.
//
// Every subcommand is deterministic given its flags and seed; big integers
// are emitted as decimal strings.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "twozero/characters.hpp"
#include "twozero/code_model.hpp"
#include "twozero/predictor.hpp"
#include "twozero/verify.hpp"

using namespace twozero;
using json = nlohmann::ordered_json;

namespace {

json field_json(const FieldCtx& F) {
    json j;
    j["p"] = F.characteristic();
    j["d"] = F.degree();
    j["modulus"] = F.modulus();
    j["generator"] = F.generator();
    return j;
}

json params_json(const CodeParams& prm) {
    json j;
    j["p"] = prm.p;
    j["f"] = prm.f;
    j["k"] = prm.k;
    j["h"] = prm.h;
    j["e"] = prm.e;
    j["q"] = prm.q.get_str();
    j["q_k"] = prm.qk.get_str();
    j["n"] = prm.n.get_str();
    j["m"] = prm.m.get_str();
    j["dimension"] = 2 * prm.k;
    j["index2_valid"] = prm.index2_valid;
    if (prm.index2_valid) {
        j["p1"] = prm.p1;
        j["s"] = prm.s;
        j["class_number"] = prm.class_no;
    }
    return j;
}

json quad_json(const QuadInt& z) {
    json j;
    j["p1"] = z.p1();
    j["a"] = z.a().get_str();
    j["b"] = z.b().get_str();
    return j;
}

json cyclotomic_json(const CyclotomicInt& v) {
    json j;
    j["conductor"] = v.conductor();
    json coeffs = json::array();
    for (const BigInt& c : v.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
    auto z = v.embed();
    j["complex_approx"] = {z.real(), z.imag()};
    return j;
}

json lifted_json(const LiftedGauss& l) {
    json j;
    j["p"] = l.p;
    j["p1"] = l.p1;
    j["s"] = l.s;
    j["prefactor_exp"] = l.prefactor_exp;
    j["sign"] = l.sign;
    j["a_s"] = l.reduced.a().get_str();
    j["b_s"] = l.reduced.b().get_str();
    auto z = to_cyclotomic(l, static_cast<unsigned>(l.p1)).embed();
    j["complex_approx"] = {z.real(), z.imag()};
    return j;
}

json distribution_json(const WeightDistribution& d) {
    json j;
    j["n"] = d.n.get_str();
    j["dimension"] = d.dimension;
    j["min_distance"] = d.min_distance().get_str();
    json entries = json::array();
    for (const auto& [w, c] : d.entries) {
        json e;
        e["weight"] = w.get_str();
        e["count"] = c.get_str();
        entries.push_back(e);
    }
    j["distribution"] = entries;
    return j;
}

std::string distribution_latex(const WeightDistribution& d) {
    std::string out = "1";
    for (const auto& [w, c] : d.entries) {
        if (w == 0) continue;
        out += " + " + c.get_str() + " x^{" + w.get_str() + "}";
    }
    return out;
}

std::string distribution_text(const WeightDistribution& d) {
    std::string out = "n = " + d.n.get_str() + ", dimension " + std::to_string(d.dimension) +
                      ", d = " + d.min_distance().get_str() + "\n";
    for (const auto& [w, c] : d.entries)
        out += "  weight " + w.get_str() + "  count " + c.get_str() + "\n";
    return out;
}

// Element flag syntax: "0" is the zero element, otherwise an integer t
// meaning generator^t.
FieldElem parse_element(const FieldCtx& F, const std::string& spec) {
    if (spec == "0") return F.zero();
    BigInt t(spec);
    if (t < 0) throw CLI::ValidationError("element exponent must be >= 0 (or the literal 0)");
    return F.pow(F.generator(), t);
}

int emit_results(const std::vector<CheckResult>& results) {
    unsigned failures = 0;
    for (const CheckResult& r : results) {
        std::printf("[%s] %s — %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        if (!r.pass) ++failures;
    }
    std::printf("%u failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight distributions of two-zero cyclic codes (index-2 family)"};
    app.require_subcommand(1);
    // --h is a code parameter, so help lives on --help only
    app.set_help_flag("--help", "print help and exit");
    auto subcommand = [&](const std::string& name, const std::string& desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->set_help_flag("--help", "print help and exit");
        return cmd;
    };

    std::uint64_t p = 3, h = 2, e = 2, p1 = 11, N = 2, jidx = 1, max_enum = 10000000ULL;
    unsigned f = 5, k = 11, d = 1, s = 1, ell = 1, s_idx = 0, samples = 20;
    std::uint64_t max_p = 3, max_fk = 55, max_p1 = 11;
    unsigned long seed = 1;
    int b_sign = +1;
    bool include_all = false;
    std::string format = "json", a_spec = "0", b_spec = "0", level = "quick";

    auto add_code_flags = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "characteristic (prime)");
        cmd->add_option("--f", f, "extension degree of q = p^f");
        cmd->add_option("--k", k, "code extension degree");
        cmd->add_option("--h", h, "subgroup parameter h | q-1");
        cmd->add_option("--e", e, "two-zero parameter e | h");
    };

    auto* c_validate = subcommand("validate", "derive q, n, m and the index-2 flags");
    add_code_flags(c_validate);
    c_validate->add_option("--format", format, "json | text");

    auto* c_search = subcommand("search-params", "list index-2-valid parameter tuples");
    c_search->add_option("--max-p", max_p, "largest characteristic");
    c_search->add_option("--max-fk", max_fk, "largest f*k");
    c_search->add_option("--max-p1", max_p1, "largest p1");
    c_search->add_option("--max-enum", max_enum, "full-enumeration pair bound");
    c_search->add_flag("--all", include_all, "also list base-valid tuples that fail index-2");

    auto* c_predict = subcommand("predict", "closed-form weight distribution");
    add_code_flags(c_predict);
    c_predict->add_option("--b-sign", b_sign, "+1 or -1 seed sign (distribution-invariant)");
    c_predict->add_option("--format", format, "json | latex | text");

    auto* c_brute = subcommand("brute", "brute-force weight distribution");
    add_code_flags(c_brute);
    c_brute->add_option("--max-enum", max_enum, "pair-enumeration bound");

    auto* c_classify = subcommand("classify", "tuple class and Y value of one pair");
    add_code_flags(c_classify);
    c_classify->add_option("--a", a_spec, "codeword label a: 0 or exponent t for generator^t");
    c_classify->add_option("--b", b_spec, "codeword label b: 0 or exponent t");

    auto* c_gbrute = subcommand("gauss-brute", "brute-force Gauss sum over F_{p^d}");
    c_gbrute->add_option("--p", p, "characteristic");
    c_gbrute->add_option("--d", d, "extension degree");
    c_gbrute->add_option("--N", N, "character order, N | p^d - 1");
    c_gbrute->add_option("--j", jidx, "character index");
    c_gbrute->add_option("--max-enum", max_enum, "enumeration bound");

    auto* c_gclosed = subcommand("gauss-closed", "closed-form index-2 Gauss sum");
    c_gclosed->add_option("--p", p, "characteristic");
    c_gclosed->add_option("--p1", p1, "prime = 3 (mod 4)");
    c_gclosed->add_option("--ell", ell, "order is p1^ell");
    c_gclosed->add_option("--s-idx", s_idx, "character power p1^s_idx");

    auto* c_gcompare = subcommand("gauss-compare", "closed form vs brute force");
    c_gcompare->add_option("--p", p, "characteristic");
    c_gcompare->add_option("--p1", p1, "prime = 3 (mod 4)");
    c_gcompare->add_option("--max-enum", max_enum, "enumeration bound");

    auto* c_lift = subcommand("lift", "Davenport-Hasse lifted coefficients (a_s, b_s)");
    c_lift->add_option("--p", p, "characteristic");
    c_lift->add_option("--p1", p1, "prime = 3 (mod 4)");
    c_lift->add_option("--s", s, "lifting degree");
    c_lift->add_option("--b-sign", b_sign, "seed sign");

    auto* c_class = subcommand("class-number", "class number of Q(sqrt(-p1))");
    c_class->add_option("--p1", p1, "prime = 3 (mod 4), p1 > 3");

    auto* c_eq2 = subcommand("verify-eq2", "Z formula vs direct count");
    add_code_flags(c_eq2);
    c_eq2->add_option("--samples", samples, "random pairs");
    c_eq2->add_option("--seed", seed, "rng seed");

    auto* c_table1 = subcommand("verify-table1", "stratified closed-form verification");
    add_code_flags(c_table1);
    c_table1->add_option("--samples", samples, "random pairs");
    c_table1->add_option("--seed", seed, "rng seed");

    auto* c_example = subcommand("example", "reproduce the bundled reference code exactly");

    auto* c_all = subcommand("verify-all", "run the module verification suites");
    c_all->add_option("--level", level, "quick | full");
    c_all->add_option("--seed", seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_validate) {
            CodeParams prm = validate(p, f, k, h, e);
            if (format == "text") {
                std::cout << "q = " << prm.q.get_str() << ", n = " << prm.n.get_str()
                          << ", m = " << prm.m.get_str()
                          << ", index2_valid = " << (prm.index2_valid ? "yes" : "no") << "\n";
            } else {
                std::cout << params_json(prm).dump(2) << "\n";
            }
        } else if (*c_search) {
            json out = json::array();
            for (const CodeParams& prm : search_params(max_p, static_cast<unsigned>(max_fk), max_p1,
                                                       include_all)) {
                json j = params_json(prm);
                j["feasibility"] = (prm.qk * prm.qk <= BigInt(static_cast<unsigned long>(max_enum)))
                                       ? "fully-brute-forceable"
                                       : "stratified-only";
                out.push_back(j);
            }
            std::cout << out.dump(2) << "\n";
        } else if (*c_predict) {
            CodeParams prm = validate(p, f, k, h, e);
            WeightDistribution dist = predict_distribution(prm, b_sign);
            if (format == "latex")
                std::cout << distribution_latex(dist) << "\n";
            else if (format == "text")
                std::cout << distribution_text(dist);
            else {
                json j = params_json(prm);
                j.update(distribution_json(dist));
                std::cout << j.dump(2) << "\n";
            }
        } else if (*c_brute) {
            CodeParams prm = validate(p, f, k, h, e);
            CodeContext ctx(prm);
            WeightDistribution dist = ctx.brute_weight_distribution(max_enum);
            json j = params_json(prm);
            j.update(distribution_json(dist));
            j["field"] = field_json(ctx.big());
            std::cout << j.dump(2) << "\n";
        } else if (*c_classify) {
            CodeParams prm = validate(p, f, k, h, e);
            ClosedContext cc(prm);
            FieldElem a = parse_element(cc.big(), a_spec), b = parse_element(cc.big(), b_spec);
            TupleClass cls = cc.classify(a, b);
            BigInt y = cc.y_value_closed(a, b);
            json j;
            j["class"] = cls.label();
            j["y"] = y.get_str();
            j["z"] = z_from_y(prm, y).get_str();
            j["weight"] = weight_from_y(prm, y).get_str();
            j["b_sign"] = cc.b_sign();
            j["field"] = field_json(cc.big());
            std::cout << j.dump(2) << "\n";
        } else if (*c_gbrute) {
            FieldCtx F(p, d);
            json j;
            j["field"] = field_json(F);
            j["N"] = N;
            j["j"] = jidx;
            j["value"] = cyclotomic_json(gauss_brute(F, N, jidx, max_enum));
            std::cout << j.dump(2) << "\n";
        } else if (*c_gclosed) {
            Index2Gauss g = index2_gauss(p, p1, ell, s_idx);
            json j;
            j["p"] = g.p;
            j["p1"] = g.p1;
            j["ell"] = g.ell;
            j["s_idx"] = g.s_idx;
            j["prefactor_exp"] = g.prefactor_exp;
            j["reduced"] = quad_json(g.reduced);
            auto z = to_cyclotomic(g, static_cast<unsigned>(p1)).embed();
            j["complex_approx"] = {z.real(), z.imag()};
            std::cout << j.dump(2) << "\n";
        } else if (*c_gcompare) {
            CheckResult r = check_index2_closed_vs_brute(p, p1, max_enum);
            return emit_results({r});
        } else if (*c_lift) {
            std::cout << lifted_json(lifted_index2(p, p1, s, b_sign)).dump(2) << "\n";
        } else if (*c_class) {
            json j;
            j["p1"] = p1;
            j["reduced_forms"] = class_number(p1);
            j["legendre_sum"] = class_number_legendre(p1);
            std::cout << j.dump(2) << "\n";
        } else if (*c_eq2) {
            return emit_results({check_eq2_consistency(validate(p, f, k, h, e), samples, seed)});
        } else if (*c_table1) {
            return emit_results({check_table1_stratified(validate(p, f, k, h, e), samples, seed)});
        } else if (*c_example) {
            return emit_results({check_reference_example()});
        } else if (*c_all) {
            if (level != "quick" && level != "full")
                throw CLI::ValidationError("--level must be quick or full");
            return emit_results(level == "full" ? verify_full(seed) : verify_quick(seed));
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
