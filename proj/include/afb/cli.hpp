/**
 * @file cli.hpp
 * @brief Command drivers behind the afb tool: classify, cohom, double,
 *        sweep, verify-paper.
 *
 * Exit codes: 0 success, 1 verification failure, 2 input error.
 */
#pragma once

#include "normal_crossing.hpp"
#include "serialization.hpp"
#include "verify_suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace afb::cli {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_input_error = 2;

namespace detail {

inline json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("file '" + path + "': " + e.what());
    }
    return j;
}

inline std::pair<int, int> parse_range(const std::string& text)
{
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw ParseError("range '" + text + "': expected LO..HI");
    try {
        const int lo = std::stoi(text.substr(0, pos));
        const int hi = std::stoi(text.substr(pos + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw ParseError("range '" + text + "': bounds must be integers");
    }
}

inline std::string t_vector_str(const std::vector<Rational>& t)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i)
            os << ", ";
        os << to_string(t[i]);
    }
    os << ")";
    return os.str();
}

inline std::string classification_str(const NormalizeResult& r)
{
    if (r.is_line_bundle_point())
        return "line bundle O(" + std::to_string(r.line_bundle->degree) +
               "); no affine moduli";
    std::ostringstream os;
    os << "canonical form: n = " << r.canonical->n << ", t = " << t_vector_str(r.canonical->t);
    if (r.canonical->is_line_bundle())
        os << "  [t = 0: the line bundle O(-" << r.canonical->n << ")]";
    return os.str();
}

inline int cmd_classify(const std::string& input, const std::string& against, std::ostream& out)
{
    const AffineBundleCocycle c = cocycle_from_json(load_json_file(input));
    out << "degree: " << degree(c) << "\n";
    const NormalizeResult r = normalize(c);
    out << classification_str(r) << "\n";
    if (against.empty())
        return exit_ok;
    const AffineBundleCocycle c2 = cocycle_from_json(load_json_file(against));
    const NormalizeResult r2 = normalize(c2);
    out << "against: degree " << degree(c2) << ", " << classification_str(r2) << "\n";
    bool isomorphic = false;
    if (r.is_line_bundle_point() && r2.is_line_bundle_point())
        isomorphic = r.line_bundle->degree == r2.line_bundle->degree;
    else if (!r.is_line_bundle_point() && !r2.is_line_bundle_point())
        isomorphic = is_isomorphic(*r.canonical, *r2.canonical);
    out << "verdict: " << (isomorphic ? "isomorphic" : "not isomorphic")
        << " (as affine bundles over the identity of CP^1)\n";
    return exit_ok;
}

inline std::string profile_str(const std::vector<int>& profile)
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < profile.size(); ++i) {
        if (i)
            os << ", ";
        os << profile[i];
    }
    os << "]";
    return os.str();
}

inline int cmd_cohom(int n, const SectionCurve& L, std::ostream& out)
{
    const PairLedger ledger = tangent_pair_ledger(n, L);
    out << "pair (F_" << n << ", L), L: " << L.str() << " in |Gamma_0 + " << (n + L.l())
        << "f|\n";
    out << "h^i(Theta_{F_n,L}) = " << triple_str(ledger.h) << "\n";
    if (L.l() >= 1)
        out << "tangency profile along Gamma_0: " << profile_str(ledger.profile) << "\n";
    out << "case: " << pair_case_name(ledger.kind) << "\n";
    out << "Aut_0(F_n, L) = " << ledger.aut0 << "\n";
    out << "normal restriction: rank " << ledger.normal_rank << ", cokernel "
        << ledger.normal_coker << "\n";
    for (const auto& seq : ledger.ledger.sequences())
        out << "exact sequence: " << seq.label << "  [chi: " << seq.chi_sub << " - "
            << seq.chi_mid << " + " << seq.chi_quot << " = 0]\n";
    return exit_ok;
}

inline int cmd_double(int n, int l, const Rational& a, std::ostream& out)
{
    const GluedDouble d(n, l, a);
    const GluedLedger g = glued_ledger(d);
    out << "glued double F_" << n << " u_" << l << " F_" << n << "-bar, gluing u -> -"
        << to_string(a) << "/u\n";
    out << "h^i(Theta) = " << triple_str(g.h) << "\n";
    out << "restriction-difference image in H^0(Theta_L): dimension " << g.image_dim << "\n";
    for (const auto& seq : g.ledger.sequences())
        out << "exact sequence: " << seq.label << "  [chi: " << seq.chi_sub << " - "
            << seq.chi_mid << " + " << seq.chi_quot << " = 0]\n";
    return exit_ok;
}

inline int cmd_sweep(std::pair<int, int> n_range, std::pair<int, int> l_range,
                     const std::string& format, int n_limit, std::ostream& out)
{
    if (n_range.first < 1 || l_range.first < 0)
        throw ParseError("sweep: need n >= 1 and l >= 0");
    if (n_range.second > n_limit)
        throw ParseError("sweep: n exceeds the configured limit " + std::to_string(n_limit));
    struct Row {
        int n, l;
        int system_h0;
        HTriple pair;
        HTriple glued;
        int moduli; // -1 when not applicable
    };
    std::vector<Row> rows;
    for (int n = n_range.first; n <= n_range.second; ++n)
        for (int l = l_range.first; l <= l_range.second; ++l) {
            Row r;
            r.n = n;
            r.l = l;
            r.system_h0 = h_line_bundle(n, section_class(n, l)).h0;
            r.pair = tangent_pair_ledger(n, SectionCurve::canonical(n, l)).h;
            r.glued = glued_ledger(GluedDouble(n, l)).h;
            r.moduli = (l == 0 && n >= 2) ? r.glued.h1 : -1;
            rows.push_back(r);
        }
    if (format == "json") {
        json j = json::array();
        for (const auto& r : rows) {
            json row;
            row["n"] = r.n;
            row["l"] = r.l;
            row["h0_section_system"] = r.system_h0;
            row["pair"] = {r.pair.h0, r.pair.h1, r.pair.h2};
            row["glued"] = {r.glued.h0, r.glued.h1, r.glued.h2};
            if (r.moduli >= 0)
                row["moduli_real_dim"] = r.moduli;
            j.push_back(std::move(row));
        }
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << "  n  l  |Gamma_0+(n+l)f|  pair (h0,h1,h2)  glued (h0,h1,h2)  moduli\n";
    for (const auto& r : rows) {
        out << std::setw(3) << r.n << std::setw(3) << r.l << std::setw(12) << r.system_h0
            << "       " << std::setw(12) << triple_str(r.pair) << "    " << std::setw(12)
            << triple_str(r.glued) << "    ";
        if (r.moduli >= 0)
            out << std::setw(4) << r.moduli;
        else
            out << "   -";
        out << "\n";
    }
    return exit_ok;
}

inline int cmd_verify(int n_max, bool as_json, std::ostream& out)
{
    const VerificationReport rep = run_paper_suite(n_max);
    if (as_json) {
        out << report_to_json(rep).dump(2) << "\n";
    } else {
        for (const auto& r : rep.records) {
            out << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  [" << r.inputs << "]  "
                << "computed " << r.computed << ", expected " << r.expected << "\n"
                << "      " << r.citation << "\n";
        }
        out << "checks: " << rep.records.size() << ", failures: " << rep.failures() << "\n";
    }
    return rep.pass() ? exit_ok : exit_verification_failure;
}

} // namespace detail

// Entry point shared by the binary and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact Cech-cohomology calculator for affine C-bundles over CP^1 and "
                 "Hirzebruch pairs"};
    app.require_subcommand(1);

    std::string input_file, against_file;
    auto* classify = app.add_subcommand("classify", "normalize a transition cocycle");
    classify->add_option("--input", input_file, "cocycle or canonical-form JSON file")
        ->required();
    classify->add_option("--against", against_file, "second input for an isomorphism verdict");

    int cohom_n = 0;
    int cohom_l = -1;
    std::string section_file;
    auto* cohom = app.add_subcommand("cohom", "dimension table for a pair (F_n, L)");
    cohom->add_option("--n", cohom_n, "Hirzebruch index")->required();
    auto* lopt = cohom->add_option("--l", cohom_l, "use the canonical l-tangent section");
    auto* sopt = cohom->add_option("--section", section_file, "section JSON file");
    lopt->excludes(sopt);
    sopt->excludes(lopt);

    int dbl_n = 0, dbl_l = 0;
    std::string dbl_a = "1";
    auto* dbl = app.add_subcommand("double", "dimension table for the glued double");
    dbl->add_option("--n", dbl_n, "Hirzebruch index")->required();
    dbl->add_option("--l", dbl_l, "tangency class of the glued section")->required();
    dbl->add_option("--a", dbl_a, "gluing parameter (positive rational)");

    std::string n_range_text, l_range_text, format = "text";
    int n_limit = 10;
    auto* sweep = app.add_subcommand("sweep", "dimension tables over a parameter grid");
    sweep->add_option("--n", n_range_text, "range LO..HI")->required();
    sweep->add_option("--l", l_range_text, "range LO..HI")->required();
    sweep->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sweep->add_option("--n-limit", n_limit, "largest supported n (default 10)");

    int verify_n_max = 8;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    verify->add_option("--n-max", verify_n_max, "largest n to sweep (default 8)");
    verify->add_flag("--json", verify_json, "machine-readable report");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string prog = "afb";
    argv.push_back(prog.data());
    for (auto& s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (classify->parsed())
            return detail::cmd_classify(input_file, against_file, out);
        if (cohom->parsed()) {
            if (section_file.empty() && cohom_l < 0)
                throw ParseError("cohom: provide --l or --section");
            const SectionCurve L =
                section_file.empty()
                    ? SectionCurve::canonical(cohom_n, cohom_l)
                    : section_from_json(detail::load_json_file(section_file));
            if (L.ambient_n() != cohom_n)
                throw ParseError("cohom: section file ambient n differs from --n");
            return detail::cmd_cohom(cohom_n, L, out);
        }
        if (dbl->parsed()) {
            Rational a;
            try {
                a = parse_rational(dbl_a);
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("double: ") + e.what());
            }
            return detail::cmd_double(dbl_n, dbl_l, a, out);
        }
        if (sweep->parsed())
            return detail::cmd_sweep(detail::parse_range(n_range_text),
                                     detail::parse_range(l_range_text), format, n_limit, out);
        if (verify->parsed())
            return detail::cmd_verify(verify_n_max, verify_json, out);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::logic_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return exit_verification_failure;
    }
    err << "input error: no subcommand\n";
    return exit_input_error;
}

} // namespace afb::cli
