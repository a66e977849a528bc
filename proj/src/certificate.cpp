#include "sedf/certificate.hpp"

#include <memory>

#include "json.hpp"
#include "sedf/cyclotomy.hpp"
#include "sedf/error.hpp"

namespace sedf {

using json = nlohmann::ordered_json;

namespace {

json optional_value(const std::optional<std::int64_t>& v) {
    return v ? json(*v) : json(nullptr);
}

std::optional<std::int64_t> read_optional(const json& v) {
    if (v.is_null()) return std::nullopt;
    return v.get<std::int64_t>();
}

}  // namespace

std::string certificate_to_json(const SedfCertificate& cert, int indent) {
    json doc;
    doc["group"] = cert.group;

    json prov;
    if (cert.provenance.cyclotomic) {
        const auto& c = *cert.provenance.cyclotomic;
        prov["kind"] = "cyclotomic";
        prov["p"] = c.p;
        prov["m"] = c.m;
        prov["modulus"] = c.modulus;
        prov["theta"] = c.theta.coeffs;
        prov["e"] = c.e;
    } else {
        prov["kind"] = "explicit";
        prov["note"] = cert.provenance.note;
    }
    doc["provenance"] = prov;

    json sets = json::array();
    for (const auto& s : cert.sets) {
        sets.push_back(std::vector<Rank>(s.begin(), s.end()));
    }
    doc["sets"] = sets;
    doc["params"] = {{"n", cert.n}, {"m", cert.m}, {"k", cert.k}, {"lambda", optional_value(cert.lambda)}};
    doc["valid"] = cert.valid;
    doc["disjoint"] = cert.disjoint;

    json per_index = json::array();
    for (const auto& l : cert.per_index_lambda) per_index.push_back(optional_value(l));
    doc["per_index_lambda"] = per_index;

    json violations = json::array();
    for (const auto& v : cert.violations) {
        violations.push_back({{"index", v.index},
                              {"element", v.element},
                              {"multiplicity", v.multiplicity},
                              {"expected", v.expected}});
    }
    doc["violations"] = violations;
    return doc.dump(indent);
}

SedfCertificate certificate_from_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        SedfCertificate cert;
        cert.group = doc.at("group").get<std::vector<std::uint32_t>>();
        const Group g(cert.group);

        const auto& prov = doc.at("provenance");
        const auto kind = prov.at("kind").get<std::string>();
        if (kind == "cyclotomic") {
            Provenance::Cyclotomic c;
            c.p = prov.at("p").get<std::uint32_t>();
            c.m = prov.at("m").get<std::uint32_t>();
            c.modulus = prov.at("modulus").get<Coefficients>();
            c.theta.coeffs = prov.at("theta").get<std::vector<std::uint32_t>>();
            c.e = prov.at("e").get<std::uint32_t>();
            cert.provenance.cyclotomic = std::move(c);
        } else if (kind == "explicit") {
            cert.provenance.note = prov.value("note", std::string{});
        } else {
            throw Error(ErrorKind::Parse, "unknown provenance kind '" + kind + "'");
        }

        for (const auto& s : doc.at("sets")) {
            cert.sets.emplace_back(g, s.get<std::vector<Rank>>());
        }
        const auto& params = doc.at("params");
        cert.n = params.at("n").get<std::int64_t>();
        cert.m = params.at("m").get<std::int64_t>();
        cert.k = params.at("k").get<std::int64_t>();
        cert.lambda = read_optional(params.at("lambda"));
        cert.valid = doc.at("valid").get<bool>();
        cert.disjoint = doc.at("disjoint").get<bool>();
        for (const auto& l : doc.at("per_index_lambda")) {
            cert.per_index_lambda.push_back(read_optional(l));
        }
        for (const auto& v : doc.at("violations")) {
            cert.violations.push_back(SedfViolation{v.at("index").get<std::size_t>(),
                                                    v.at("element").get<Rank>(),
                                                    v.at("multiplicity").get<Count>(),
                                                    v.at("expected").get<Count>()});
        }
        return cert;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("malformed certificate: ") + ex.what());
    }
}

Recheck recheck_certificate(const SedfCertificate& cert) {
    Recheck out;
    const Group g(cert.group);
    if (cert.provenance.cyclotomic) {
        const auto& c = *cert.provenance.cyclotomic;
        auto field = std::make_shared<const FieldTable>(FieldSpec{c.p, c.m, c.modulus});
        if (field->element(field->theta()) != c.theta) {
            out.mismatch = "recorded theta is not the field's primitive element";
        }
        const CyclotomicSystem sys(field, c.e);
        if (out.mismatch.empty() && sys.classes() != cert.sets) {
            out.mismatch = "sets differ from the cyclotomic classes";
        }
    }

    out.fresh = verify_sedf(DesignFamily{g, cert.sets, cert.provenance});
    if (!out.mismatch.empty()) return out;

    const auto& f = out.fresh;
    if (f.n != cert.n || f.m != cert.m || f.k != cert.k || f.lambda != cert.lambda) {
        out.mismatch = "params differ";
    } else if (f.valid != cert.valid) {
        out.mismatch = "validity differs";
    } else if (f.disjoint != cert.disjoint) {
        out.mismatch = "disjointness differs";
    } else if (f.per_index_lambda != cert.per_index_lambda) {
        out.mismatch = "per-index lambda differs";
    } else if (f.violations != cert.violations) {
        out.mismatch = "violations differ";
    }
    out.identical = out.mismatch.empty();
    return out;
}

}  // namespace sedf
