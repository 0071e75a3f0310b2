/*
   Copyright 2026 The permpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file cli.hpp
 *
 * Command-line front end.  Subcommands: verify, reduce, construct, family,
 * reproduce-tables, verify-known, verify-families, search.  Exit codes:
 * 0 success, 1 verification mismatch (witnesses printed), 2 usage or
 * configuration error.
 */

#ifndef PERMPOLY_CLI_HPP
#define PERMPOLY_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permpoly/criterion.hpp"
#include "permpoly/search.hpp"

namespace permpoly::cli {

namespace detail {

inline std::vector<uint32_t> parse_modulus_line(const std::string& line) {
    std::istringstream is(line);
    std::vector<uint32_t> out;
    uint64_t v;
    while (is >> v) out.push_back(uint32_t(v));
    return out;
}

inline FieldCtxOptions load_modulus_file(const std::string& path) {
    FieldCtxOptions opt;
    std::ifstream in(path);
    if (!in) raise(Errc::invalid_params, "cannot open modulus file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string tag = line.substr(0, colon);
        auto coeffs = parse_modulus_line(line.substr(colon + 1));
        if (tag == "mid")
            opt.mid_modulus = coeffs;
        else if (tag == "top")
            opt.top_modulus = coeffs;
        else
            raise(Errc::invalid_params, "unknown modulus line tag '" + tag + "'");
    }
    return opt;
}

inline nlohmann::json field_meta(const FieldCtx& F) {
    return {{"p", F.p()},
            {"k", F.k()},
            {"mid_modulus", F.mid_modulus_encoding()},
            {"top_modulus", F.top_modulus_encoding()},
            {"version", version}};
}

inline nlohmann::json report_json(const FieldCtx& F, const VerifyReport& rep) {
    nlohmann::json j = field_meta(F);
    j["gcd_ok"] = rep.gcd_ok;
    j["g_fixed_ok"] = rep.g_fixed_ok;
    j["h_nonzero_ok"] = rep.h_nonzero_ok;
    j["r_permutes_ok"] = rep.r_permutes_ok;
    j["doubled"] = rep.doubled;
    if (rep.oracle_verdict)
        j["oracle"] = *rep.oracle_verdict;
    else
        j["oracle"] = nullptr;
    auto& ws = j["witnesses"] = nlohmann::json::array();
    for (auto& w : rep.witnesses) ws.push_back({{"condition", w.condition}, {"elements", w.elems}});
    return j;
}

inline nlohmann::json pp_json(const FieldCtx& F, const AssembledPP& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : f.terms) terms.push_back({{"exp", e}, {"coeff", c}});
    return {{"r", f.r}, {"doubled", f.doubled}, {"terms", terms}, {"text", pp_to_string(F, f)}};
}

}  // namespace detail

/// Parse and run.  Returns the process exit code; output goes to `out`,
/// usage errors to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"permutation polynomial toolkit for x^r h(x^(q-1)) over F_{q^2}"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // keep -h free for --h

    auto make_sub = [&](const char* name, const char* desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");
        return sub;
    };

    uint32_t p = 2, k = 3;
    std::string modulus_path, format;
    unsigned jobs = 1;
    uint64_t seed = 20260808;
    bool pretty = false;
    app.add_option("--jobs", jobs, "worker count (output is identical for any value)");
    app.add_option("--seed", seed, "seed for sampled sweeps");
    app.add_flag("--pretty", pretty, "print field elements in polynomial-basis form");

    auto add_field_opts = [&](CLI::App* sub, bool required = true) {
        auto* po = sub->add_option("--p", p, "field characteristic");
        auto* ko = sub->add_option("--k", k, "extension degree, q = p^k");
        if (required) {
            po->required();
            ko->required();
        }
        sub->add_option("--modulus", modulus_path, "modulus override file (lines: 'mid: c0 c1 ...', 'top: c0 c1 1')");
        sub->add_option("--format", format, "output format: json, csv or text");
    };

    // verify
    auto* verify = make_sub("verify", "run the four descent conditions on h, r");
    std::string h_text, r_text = "1";
    bool oracle = false;
    add_field_opts(verify);
    verify->add_option("--h", h_text, "h(x) in term form, e.g. \"1*x^2 + 1*x + 1*x^-1\"")->required();
    uint64_t r_value = 1;
    verify->add_option("--r", r_value, "the exponent r of f = x^r h(x^(q-1))");
    verify->add_flag("--oracle", oracle, "also run the brute-force permutation scan over F_{q^2}");

    // reduce
    auto* reduce = make_sub("reduce", "reduce h(x) on the circle to h1(a) x + h2(a)");
    add_field_opts(reduce);
    reduce->add_option("--h", h_text, "h(x) in term form")->required();

    // construct
    auto* construct = make_sub("construct", "rebuild h(x) from h1(a), h2(a) and assemble f");
    std::string h1_text, h2_text;
    bool half_exponents = false;
    add_field_opts(construct);
    construct->add_option("--h1", h1_text, "h1(a) in term form over the symbol a")->required();
    construct->add_option("--h2", h2_text, "h2(a) in term form over the symbol a")->required();
    construct->add_option("--r", r_value, "assembly exponent (construction path fixes r = 1)");
    construct->add_flag("--half-exponents", half_exponents,
                        "display h with half exponents when present instead of the doubled form");

    // family
    auto* family = make_sub("family", "generate an explicit family member");
    std::string family_id, alphas_text;
    FamilyParams fp;
    add_field_opts(family);
    family->add_option("--family", family_id, "family id, e.g. even-inv-b2 or odd-frob1-pos")->required();
    family->add_option("--m", fp.m, "p^m parameter for the odd families");
    family->add_option("--alphas", alphas_text, "comma-separated linearized coefficients");
    family->add_option("--case", fp.lin_case, "structural case for monomial/binomial patterns");
    family->add_option("--j", fp.j, "anchor index");
    family->add_option("--j1", fp.j1, "first anchor index");
    family->add_option("--j2", fp.j2, "second anchor index");
    family->add_option("--t", fp.t, "degree bound parameter");
    family->add_option("--alpha0", fp.alpha0, "alpha_0 value (integer encoding)");
    family->add_option("--alphaj", fp.alphaj, "alpha_j value (integer encoding)");
    family->add_flag("--oracle", oracle, "also run the brute-force scan and compare");

    // reproduce-tables
    auto* tables = make_sub("reproduce-tables", "emit the monomial search tables as CSV");
    uint32_t kmin = 3, kmax = 12;
    bool include_frobenius = false;
    std::string golden_path;
    tables->add_option("--p", p, "field characteristic")->required();
    tables->add_option("--kmin", kmin, "smallest extension degree")->required();
    tables->add_option("--kmax", kmax, "largest extension degree")->required();
    tables->add_flag("--include-frobenius", include_frobenius, "also test s equal to a power of 2");
    tables->add_option("--golden", golden_path, "compare byte-for-byte against this CSV file");
    tables->add_option("--format", format, "output format: csv or json");

    // verify-known
    auto* known = make_sub("verify-known", "check the catalogued fractional polynomials");
    uint32_t known_kmax = 10;
    known->add_option("--kmax", known_kmax, "largest extension degree");
    known->add_option("--format", format, "output format");

    // verify-families
    auto* fams = make_sub("verify-families", "sweep every family against the oracle");
    uint64_t qq_max = uint64_t(1) << 20;
    uint32_t trinomial_l_kmax = 14;
    std::string only_family;
    fams->add_option("--qq-max", qq_max, "largest oracle domain q^2");
    fams->add_option("--trinomial-l-kmax", trinomial_l_kmax, "L-level-only extension for the trinomial families");
    fams->add_option("--family", only_family, "restrict to one family id");
    fams->add_option("--format", format, "output format");

    // search
    auto* search = make_sub("search", "monomial exponent search for one field");
    add_field_opts(search);
    search->add_flag("--include-frobenius", include_frobenius, "also test s equal to a power of 2");

    std::vector<const char*> argv;
    argv.push_back("permpoly");
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        FieldCtxOptions opt;
        if (!modulus_path.empty()) opt = detail::load_modulus_file(modulus_path);

        if (*verify) {
            auto F = FieldCtx::make(p, k, opt);
            auto h = lp_parse(F, h_text);
            auto rep = check_conditions(F, h, r_value, oracle);
            if (format == "text") {
                out << "gcd_ok=" << rep.gcd_ok << " g_fixed_ok=" << rep.g_fixed_ok
                    << " h_nonzero_ok=" << rep.h_nonzero_ok << " r_permutes_ok=" << rep.r_permutes_ok;
                if (rep.oracle_verdict) out << " oracle=" << *rep.oracle_verdict;
                out << "\n";
                for (auto& w : rep.witnesses) {
                    out << "witness " << w.condition << ":";
                    for (auto e : w.elems)
                        out << " " << (pretty ? F.to_string(F.top(e), true) : std::to_string(e));
                    out << "\n";
                }
            } else {
                out << detail::report_json(F, rep).dump() << "\n";
            }
            return rep.conditions_all() && (!rep.oracle_verdict || *rep.oracle_verdict) ? 0 : 1;
        }

        if (*reduce) {
            auto F = FieldCtx::make(p, k, opt);
            auto h = lp_parse(F, h_text);
            auto [hd, doubled] = to_integer_exponents(h);
            auto pair = reduce_h(F, hd);
            if (format == "json") {
                nlohmann::json j = detail::field_meta(F);
                j["h1"] = up_to_string(F, pair.h1);
                j["h2"] = up_to_string(F, pair.h2);
                j["doubled"] = doubled;
                out << j.dump() << "\n";
            } else {
                if (doubled) out << "note: half exponents doubled first (pair describes h(x^2))\n";
                out << "h1 = " << up_to_string(F, pair.h1) << "\n";
                out << "h2 = " << up_to_string(F, pair.h2) << "\n";
            }
            return 0;
        }

        if (*construct) {
            auto F = FieldCtx::make(p, k, opt);
            auto h1 = lp_parse(F, h1_text, 'a');
            auto h2 = lp_parse(F, h2_text, 'a');
            int divisions = 0;
            auto h = construct_h(F, h1, h2, &divisions);
            auto f = assemble_f(F, h, r_value);
            LaurentPoly shown = h;
            bool doubled_shown = false;
            if (!half_exponents && lp_has_half_exponents(h)) {
                shown = to_integer_exponents(h).first;
                doubled_shown = true;
            }
            if (format == "json") {
                nlohmann::json j = detail::field_meta(F);
                j["h"] = lp_to_string(F, shown);
                j["h_doubled"] = doubled_shown;
                j["divisions"] = divisions;
                j["f"] = detail::pp_json(F, f);
                out << j.dump() << "\n";
            } else {
                out << "h = " << lp_to_string(F, shown)
                    << (doubled_shown ? "   (doubled; pass --half-exponents for the fractional form)" : "")
                    << "\n";
                out << "divisions = " << divisions << "\n";
                out << "f = " << pp_to_string(F, f) << (f.doubled ? "   (assembled as f(x^2))" : "")
                    << "\n";
            }
            return 0;
        }

        if (*family) {
            auto F = FieldCtx::make(p, k, opt);
            auto id = family_from_name(family_id);
            if (!id) raise(Errc::invalid_params, "unknown family id '" + family_id + "'");
            if (!alphas_text.empty()) {
                std::istringstream is(alphas_text);
                std::string tok;
                while (std::getline(is, tok, ',')) fp.alphas.push_back(uint32_t(std::stoul(tok)));
            }
            auto res = family_generate(F, *id, fp);
            std::optional<bool> ov;
            if (oracle) ov = check_permutation_pp(F, res.f).is_permutation;
            nlohmann::json j = detail::field_meta(F);
            j["family"] = family_name(*id);
            j["predicted"] = res.predicted;
            j["f"] = detail::pp_json(F, res.f);
            if (!res.alphas.empty()) j["alphas"] = res.alphas;
            if (!res.note.empty()) j["note"] = res.note;
            if (ov) j["oracle"] = *ov;
            if (format == "text") {
                out << "f = " << pp_to_string(F, res.f) << "\n";
                out << "predicted = " << res.predicted;
                if (ov) out << ", oracle = " << *ov;
                out << "\n";
            } else {
                out << j.dump() << "\n";
            }
            return ov && *ov != res.predicted ? 1 : 0;
        }

        if (*tables) {
            if (p != 2 && p != 3 && p != 5 && p != 7)
                raise(Errc::invalid_params, "tables exist for p in {2, 3, 5, 7}");
            std::string csv = tables_csv(p, kmin, kmax, include_frobenius, jobs);
            if (format == "json") {
                for (uint32_t kk = kmin; kk <= kmax; ++kk) {
                    auto F = FieldCtx::make(p, kk);
                    auto r = p == 2 ? monomial_search_even(F, include_frobenius, jobs)
                                    : monomial_search_odd(F, jobs);
                    nlohmann::json j = detail::field_meta(F);
                    j["s"] = r.hits;
                    j["excluded"] = r.excluded;
                    out << j.dump() << "\n";
                }
            } else {
                out << csv;
            }
            if (!golden_path.empty()) {
                std::ifstream in(golden_path, std::ios::binary);
                if (!in) raise(Errc::invalid_params, "cannot open golden file " + golden_path);
                std::stringstream want;
                want << in.rdbuf();
                if (want.str() != csv) {
                    err << "golden mismatch against " << golden_path << "\n";
                    return 1;
                }
            }
            return 0;
        }

        if (*known) {
            int bad = 0;
            for (uint32_t kk = 1; kk <= known_kmax; ++kk) {
                auto F = FieldCtx::make(2, kk);
                for (auto& e : known_entries()) {
                    if (!known_condition_holds(e, kk)) continue;
                    nlohmann::json j = detail::field_meta(F);
                    j["row"] = e.name;
                    try {
                        auto v = verify_known(F, e);
                        j["g_permutes_mu"] = v.g_permutes_mu;
                        if (v.l_permutes_t) j["l_permutes_t"] = *v.l_permutes_t;
                        j["verdict"] = v.verdict;
                        if (!v.verdict) ++bad;
                    } catch (const Error& ex) {
                        if (ex.code() != Errc::verdict_mismatch) throw;
                        j["verdict"] = "mismatch";
                        ++bad;
                    }
                    out << j.dump() << "\n";
                }
            }
            return bad == 0 ? 0 : 1;
        }

        if (*fams) {
            SweepOptions sopt;
            sopt.qq_max = qq_max;
            sopt.trinomial_l_kmax = trinomial_l_kmax;
            sopt.seed = seed;
            std::vector<SweepReport> reports;
            if (!only_family.empty()) {
                auto id = family_from_name(only_family);
                if (!id) raise(Errc::invalid_params, "unknown family id '" + only_family + "'");
                reports.push_back(sweep_family(*id, sopt));
            } else {
                reports = sweep_all_families(sopt);
            }
            uint64_t bad = 0;
            for (auto& rep : reports) {
                nlohmann::json j = {{"family", rep.family},
                                    {"tuples", rep.tuples},
                                    {"agreements", rep.agreements},
                                    {"seed", seed},
                                    {"version", version}};
                auto& ms = j["mismatches"] = nlohmann::json::array();
                for (auto& m : rep.mismatches)
                    ms.push_back({{"params", m.params}, {"predicted", m.predicted}, {"oracle", m.oracle}});
                bad += rep.mismatches.size();
                out << j.dump() << "\n";
            }
            return bad == 0 ? 0 : 1;
        }

        if (*search) {
            auto F = FieldCtx::make(p, k, opt);
            auto r = F.char2() ? monomial_search_even(F, include_frobenius, jobs)
                               : monomial_search_odd(F, jobs);
            if (format == "json") {
                nlohmann::json j = detail::field_meta(F);
                j["s"] = r.hits;
                j["excluded"] = r.excluded;
                out << j.dump() << "\n";
            } else {
                out << "p,k,s\n";
                for (uint64_t s : r.hits) out << p << "," << k << "," << s << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::verdict_mismatch ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace permpoly::cli

#endif
