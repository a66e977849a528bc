// sedf: command-line driver for field construction, cyclotomic tables,
// SEDF verification, PDS checks, cyclotomic scans and exhaustive search.
//
// Exit codes: 0 verified/found, 1 verified-invalid/none found,
// 2 usage, parse or capacity error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sedf/sedf.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sedf;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Output {
    std::string format = "tsv";
    std::string path;
};

void add_output_options(CLI::App* cmd, Output& out, const std::string& default_format) {
    out.format = default_format;
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "Write output to PATH instead of stdout");
}

void emit(const Output& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw Error(ErrorKind::Parse, "cannot open output file '" + out.path + "'");
    file << text;
}

std::vector<std::uint32_t> parse_uint_list(std::string_view text, std::string_view what) {
    std::vector<std::uint32_t> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        std::uint32_t value = 0;
        const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || end != piece.data() + piece.size()) {
            throw Error(ErrorKind::Parse, std::string(what) + ": bad integer '" + std::string(piece) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "1,4;2,3" -> {{1,4},{2,3}}
std::vector<GroupSet> parse_sets(const Group& g, std::string_view text) {
    std::vector<GroupSet> sets;
    std::size_t pos = 0;
    while (true) {
        const auto semi = text.find(';', pos);
        const auto piece = text.substr(pos, semi == std::string_view::npos ? text.npos : semi - pos);
        const auto ranks = parse_uint_list(piece, "set literal");
        const std::size_t before = ranks.size();
        GroupSet s(g, std::vector<Rank>(ranks.begin(), ranks.end()));
        if (s.size() != before) {
            throw Error(ErrorKind::Parse, "set literal '" + std::string(piece) + "' repeats an element");
        }
        sets.push_back(std::move(s));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return sets;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct FieldArgs {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::string modulus;

    std::shared_ptr<const FieldTable> build() const {
        if (modulus.empty()) {
            return std::make_shared<const FieldTable>(FieldTable::with_default_modulus(p, m));
        }
        return std::make_shared<const FieldTable>(FieldSpec{p, m, parse_coefficients(modulus)});
    }
};

void add_field_options(CLI::App* cmd, FieldArgs& f, bool required) {
    auto* p = cmd->add_option("-p", f.p, "Field characteristic");
    auto* m = cmd->add_option("-m", f.m, "Extension degree");
    if (required) {
        p->required();
        m->required();
    }
    cmd->add_option("--modulus", f.modulus, "Monic modulus as c0,...,cm (default: smallest irreducible)");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

// ---- field ---------------------------------------------------------------

int cmd_field(const FieldArgs& args, bool table, const Output& out) {
    const auto field = args.build();
    const auto& F = *field;
    const auto theta = F.element(F.theta());
    const auto order = F.element_order(theta);
    const auto witnesses = F.primitivity_witnesses();

    std::string text;
    if (out.format == "json") {
        json doc;
        doc["q"] = F.q();
        doc["p"] = F.p();
        doc["m"] = F.m();
        doc["modulus"] = F.spec().modulus;
        doc["theta"] = format_element(theta, F.p());
        doc["theta_is_x"] = F.theta_is_x();
        doc["order"] = order;
        json ws = json::array();
        for (const auto& w : witnesses) {
            ws.push_back({{"prime", w.prime}, {"exponent", w.exponent}, {"value", format_element(w.value, F.p())}});
        }
        doc["witnesses"] = ws;
        if (table) {
            json powers = json::array();
            for (std::uint64_t t = 0; t + 1 < F.q(); ++t) powers.push_back(format_element(F.power_vector(t), F.p()));
            doc["powers"] = powers;
        }
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "q\t" << F.q() << "\n"
           << "p\t" << F.p() << "\n"
           << "m\t" << F.m() << "\n"
           << "modulus\t" << format_coefficients(F.spec().modulus) << "\n"
           << "theta\t" << format_element(theta, F.p()) << "\n"
           << "theta_is_x\t" << yes_no(F.theta_is_x()) << "\n"
           << "order\t" << order << "\n";
        for (const auto& w : witnesses) {
            os << "witness\t" << w.prime << "\ttheta^" << w.exponent << "\t" << format_element(w.value, F.p())
               << "\n";
        }
        if (table) {
            os << "t\ttheta^t\n";
            for (std::uint64_t t = 0; t + 1 < F.q(); ++t) {
                os << t << "\t" << format_element(F.power_vector(t), F.p()) << "\n";
            }
        }
        text = os.str();
    }
    emit(out, text);
    return kOk;
}

// ---- cyclo ---------------------------------------------------------------

int cmd_cyclo(const FieldArgs& args, std::uint32_t e, const Output& out) {
    const CyclotomicSystem sys(args.build(), e);
    const auto table = cyclotomic_numbers(sys);
    const auto report = verify_identities(sys, table);

    std::string text;
    if (out.format == "json") {
        const auto& F = sys.field();
        json doc;
        doc["p"] = F.p();
        doc["m"] = F.m();
        doc["modulus"] = F.spec().modulus;
        doc["theta"] = format_element(F.element(F.theta()), F.p());
        doc["e"] = sys.e();
        doc["f"] = sys.f();
        json rows = json::array();
        for (std::uint32_t i = 0; i < e; ++i) {
            json row = json::array();
            for (std::uint32_t j = 0; j < e; ++j) row.push_back(table(i, j));
            rows.push_back(row);
        }
        doc["table"] = rows;
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"identity", c.identity},
                              {"applicable", c.applicable},
                              {"cases", c.cases},
                              {"failures", c.failures}});
        }
        doc["identities"] = checks;
        json violations = json::array();
        for (const auto& v : report.violations) {
            violations.push_back({{"identity", v.identity}, {"i", v.i}, {"j", v.j}, {"detail", v.detail}});
        }
        doc["violations"] = violations;
        doc["ok"] = report.ok();
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << cyclotomic_table_tsv(sys, table);
        for (const auto& c : report.checks) {
            os << "# identity\t" << c.identity << "\tapplicable=" << yes_no(c.applicable) << "\tcases=" << c.cases
               << "\tfailures=" << c.failures << "\n";
        }
        for (const auto& v : report.violations) {
            os << "# violation\t" << v.identity << "\t" << v.i << "\t" << v.j << "\t" << v.detail << "\n";
        }
        os << "# identities\t" << (report.ok() ? "ok" : "FAILED") << "\n";
        text = os.str();
    }
    emit(out, text);
    return report.ok() ? kOk : kNegative;
}

// ---- verify --------------------------------------------------------------

std::string certificate_tsv(const SedfCertificate& cert) {
    std::ostringstream os;
    os << "group\t" << format_coefficients(cert.group) << "\n";
    os << "n\t" << cert.n << "\nm\t" << cert.m << "\nk\t" << cert.k << "\n";
    os << "lambda\t" << opt_str(cert.lambda) << "\n";
    os << "valid\t" << yes_no(cert.valid) << "\n";
    os << "disjoint\t" << yes_no(cert.disjoint) << "\n";
    os << "per_index_lambda";
    for (const auto& l : cert.per_index_lambda) os << "\t" << opt_str(l);
    os << "\n";
    os << "violations\t" << cert.violations.size() << "\n";
    for (const auto& v : cert.violations) {
        os << "violation\t" << v.index << "\t" << v.element << "\t" << v.multiplicity << "\t" << v.expected
           << "\n";
    }
    return os.str();
}

std::string render_certificate(const SedfCertificate& cert, const Output& out) {
    return out.format == "json" ? certificate_to_json(cert, 2) + "\n" : certificate_tsv(cert);
}

struct VerifyArgs {
    bool cyclotomic = false;
    FieldArgs field;
    std::uint32_t e = 0;
    std::string group;
    std::string sets;
    std::string certificate;
};

int cmd_verify(const VerifyArgs& args, const Output& out) {
    if (!args.certificate.empty()) {
        const auto recorded = certificate_from_json(read_file(args.certificate));
        const auto check = recheck_certificate(recorded);
        emit(out, render_certificate(check.fresh, out));
        if (!check.identical) {
            std::cerr << "certificate mismatch: " << check.mismatch << "\n";
            return kNegative;
        }
        return check.fresh.valid ? kOk : kNegative;
    }

    SedfCertificate cert;
    if (args.cyclotomic) {
        if (args.field.p == 0 || args.field.m == 0 || args.e == 0) {
            throw CLI::ValidationError("--cyclotomic needs -p, -m and -e");
        }
        const CyclotomicSystem sys(args.field.build(), args.e);
        const auto result = sedf_from_cyclotomy(sys);
        if (!result.agree) {
            std::cerr << "warning: cyclotomic-number criterion disagrees with direct verification\n";
        }
        cert = result.certificate;
    } else {
        if (args.group.empty() || args.sets.empty()) {
            throw CLI::ValidationError("give --cyclotomic, --certificate, or both --group and --sets");
        }
        const Group g(parse_uint_list(args.group, "group"));
        cert = verify_sedf(DesignFamily{g, parse_sets(g, args.sets), Provenance{std::nullopt, "explicit sets"}});
    }
    emit(out, render_certificate(cert, out));
    return cert.valid ? kOk : kNegative;
}

// ---- pds -----------------------------------------------------------------

int cmd_pds(const VerifyArgs& args, const Output& out) {
    std::optional<Group> group;
    std::vector<GroupSet> sets;
    if (args.cyclotomic) {
        if (args.field.p == 0 || args.field.m == 0 || args.e == 0) {
            throw CLI::ValidationError("--cyclotomic needs -p, -m and -e");
        }
        const CyclotomicSystem sys(args.field.build(), args.e);
        group = sys.group();
        sets = sys.classes();
    } else {
        if (args.group.empty() || args.sets.empty()) {
            throw CLI::ValidationError("give --cyclotomic or both --group and --sets");
        }
        group = Group(parse_uint_list(args.group, "group"));
        sets = parse_sets(*group, args.sets);
    }

    std::vector<std::optional<PdsParams>> params;
    bool all_pds = true;
    for (const auto& s : sets) {
        params.push_back(verify_pds(*group, s));
        all_pds = all_pds && params.back().has_value();
    }

    std::optional<PdsCompositionReport> composition;
    std::string composition_error;
    if (sets.size() >= 2) {
        try {
            composition = pds_partition_sedf(*group, sets);
        } catch (const Error& ex) {
            composition_error = std::string(to_string(ex.kind())) + ": " + ex.what();
        }
    }

    std::string text;
    if (out.format == "json") {
        json doc;
        json rows = json::array();
        for (const auto& p : params) {
            if (!p) {
                rows.push_back(nullptr);
                continue;
            }
            rows.push_back({{"n", p->n},
                            {"k", p->k},
                            {"lambda", p->lambda},
                            {"mu", p->mu},
                            {"contains_identity", p->contains_identity}});
        }
        doc["sets"] = rows;
        if (composition) {
            const auto& c = *composition;
            doc["composition"] = {{"empirical_lambda", c.empirical_lambda ? json(*c.empirical_lambda) : json(nullptr)},
                                  {"k_minus_lambda", c.k_minus_lambda},
                                  {"k_minus_lambda_matches", c.k_minus_lambda_matches},
                                  {"k_minus_mu", c.k_minus_mu},
                                  {"k_minus_mu_matches", c.k_minus_mu_matches}};
        } else if (!composition_error.empty()) {
            doc["composition"] = {{"error", composition_error}};
        }
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "set\tn\tk\tlambda\tmu\tcontains_identity\n";
        for (std::size_t i = 0; i < params.size(); ++i) {
            const auto& p = params[i];
            if (p) {
                os << i << "\t" << p->n << "\t" << p->k << "\t" << p->lambda << "\t" << p->mu << "\t"
                   << yes_no(p->contains_identity) << "\n";
            } else {
                os << i << "\t-\t-\t-\t-\t-\n";
            }
        }
        if (composition) {
            const auto& c = *composition;
            os << "# composition\tempirical_lambda=" << opt_str(c.empirical_lambda)
               << "\tk-lambda=" << c.k_minus_lambda << (c.k_minus_lambda_matches ? " (matches)" : " (differs)")
               << "\tk-mu=" << c.k_minus_mu << (c.k_minus_mu_matches ? " (matches)" : " (differs)") << "\n";
        } else if (!composition_error.empty()) {
            os << "# composition\tunavailable\t" << composition_error << "\n";
        }
        text = os.str();
    }
    emit(out, text);
    return all_pds ? kOk : kNegative;
}

// ---- scan ----------------------------------------------------------------

int cmd_scan(std::uint64_t q_max, std::uint32_t m_min, unsigned threads, const Output& out) {
    const auto rows = scan_cyclotomic(q_max, m_min, threads);
    bool found = false;
    for (const auto& r : rows) found = found || r.is_sedf;

    std::string text;
    if (out.format == "json") {
        json doc = json::array();
        for (const auto& r : rows) {
            doc.push_back({{"q", r.q},
                           {"p", r.p},
                           {"m", r.m},
                           {"modulus", r.modulus},
                           {"theta", format_element(r.theta, r.p)},
                           {"e", r.e},
                           {"f", r.f},
                           {"is_sedf", r.is_sedf},
                           {"lambda", r.lambda ? json(*r.lambda) : json(nullptr)},
                           {"agree", r.agree}});
        }
        text = doc.dump(2) + "\n";
    } else {
        text = scan_tsv(rows);
    }
    emit(out, text);
    return found ? kOk : kNegative;
}

// ---- search --------------------------------------------------------------

int cmd_search(const std::string& group_text, std::int64_t m, std::int64_t k, std::optional<std::size_t> limit,
               bool automorphisms, const Output& out) {
    const Group g(parse_uint_list(group_text, "group"));
    SearchOptions opts;
    opts.limit = limit;
    opts.reduce_automorphisms = automorphisms;
    const auto result = exhaustive_search(g, m, k, opts);

    if (result.status == SearchStatus::Infeasible) {
        std::cerr << "infeasible: " << result.reason << "\n";
        emit(out, "");
        return kNegative;
    }

    std::string text;
    for (const auto& fam : result.families) {
        const auto cert = verify_sedf(fam);
        if (out.format == "json") {
            text += certificate_to_json(cert) + "\n";
        } else {
            std::string line;
            for (std::size_t i = 0; i < fam.sets.size(); ++i) {
                if (i) line += ";";
                line += format_coefficients(std::vector<std::uint32_t>(fam.sets[i].begin(), fam.sets[i].end()));
            }
            text += line + "\t" + opt_str(cert.lambda) + "\n";
        }
    }
    emit(out, text);
    std::cerr << "families: " << result.families.size()
              << (result.status == SearchStatus::Partial ? " (limit reached)" : "") << "\n";
    return result.families.empty() ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong external difference families: fields, cyclotomy, verification and search"};
    app.require_subcommand(1, 1);

    FieldArgs field_args;
    Output field_out;
    bool field_table = false;
    auto* field = app.add_subcommand("field", "Build GF(p^m) and certify its primitive element");
    add_field_options(field, field_args, true);
    field->add_flag("--table", field_table, "Print the full power table");
    add_output_options(field, field_out, "tsv");

    FieldArgs cyclo_args;
    Output cyclo_out;
    std::uint32_t cyclo_e = 0;
    auto* cyclo = app.add_subcommand("cyclo", "Cyclotomic numbers of order e with identity checks");
    add_field_options(cyclo, cyclo_args, true);
    cyclo->add_option("-e", cyclo_e, "Cyclotomic order (divides q-1)")->required();
    add_output_options(cyclo, cyclo_out, "tsv");

    VerifyArgs verify_args;
    Output verify_out;
    auto* verify = app.add_subcommand("verify", "Verify an SEDF and emit its certificate");
    auto* v_cyc = verify->add_flag("--cyclotomic", verify_args.cyclotomic, "Use the cyclotomic classes of GF(p^m)");
    add_field_options(verify, verify_args.field, false);
    verify->add_option("-e", verify_args.e, "Cyclotomic order");
    auto* v_group = verify->add_option("--group", verify_args.group, "Cyclic factor orders, e.g. 5 or 3,3");
    auto* v_sets = verify->add_option("--sets", verify_args.sets, "Sets as ranks, e.g. \"1,4;2,3\"");
    auto* v_cert = verify->add_option("--certificate", verify_args.certificate, "Re-verify a JSON certificate");
    v_cyc->excludes(v_group)->excludes(v_sets)->excludes(v_cert);
    v_cert->excludes(v_group)->excludes(v_sets);
    add_output_options(verify, verify_out, "json");

    VerifyArgs pds_args;
    Output pds_out;
    auto* pds = app.add_subcommand("pds", "Check partial difference sets and their SEDF composition");
    auto* p_cyc = pds->add_flag("--cyclotomic", pds_args.cyclotomic, "Use the cyclotomic classes of GF(p^m)");
    add_field_options(pds, pds_args.field, false);
    pds->add_option("-e", pds_args.e, "Cyclotomic order");
    auto* p_group = pds->add_option("--group", pds_args.group, "Cyclic factor orders");
    auto* p_sets = pds->add_option("--sets", pds_args.sets, "Sets as ranks");
    p_cyc->excludes(p_group)->excludes(p_sets);
    add_output_options(pds, pds_out, "tsv");

    std::uint64_t scan_q_max = 0;
    std::uint32_t scan_m_min = 2;
    unsigned scan_threads = 0;
    Output scan_out;
    auto* scan = app.add_subcommand("scan", "Scan cyclotomic families over all GF(q), q <= q-max");
    scan->add_option("--q-max", scan_q_max, "Largest field order")->required();
    scan->add_option("--m-min", scan_m_min, "Smallest number of sets e")->capture_default_str();
    scan->add_option("--threads", scan_threads, "Worker threads (0: hardware concurrency)");
    add_output_options(scan, scan_out, "tsv");

    std::string search_group;
    std::int64_t search_m = 0;
    std::int64_t search_k = 0;
    std::optional<std::size_t> search_limit;
    bool search_auto = false;
    Output search_out;
    auto* search = app.add_subcommand("search", "Exhaustive search for SEDFs in a small group");
    search->add_option("--group", search_group, "Cyclic factor orders")->required();
    search->add_option("-m", search_m, "Number of sets")->required();
    search->add_option("-k", search_k, "Set size")->required();
    search->add_option("--limit", search_limit, "Stop after this many families");
    search->add_flag("--automorphisms", search_auto, "Keep one family per orbit under x -> ux + g");
    add_output_options(search, search_out, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*field) return cmd_field(field_args, field_table, field_out);
        if (*cyclo) return cmd_cyclo(cyclo_args, cyclo_e, cyclo_out);
        if (*verify) return cmd_verify(verify_args, verify_out);
        if (*pds) return cmd_pds(pds_args, pds_out);
        if (*scan) return cmd_scan(scan_q_max, scan_m_min, scan_threads, scan_out);
        if (*search) return cmd_search(search_group, search_m, search_k, search_limit, search_auto, search_out);
    } catch (const CLI::ValidationError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return kUsage;
    } catch (const Error& ex) {
        std::cerr << "error (" << to_string(ex.kind()) << "): " << ex.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
