#pragma once

#include <string>
#include <string_view>

#include "sedf/edf.hpp"

namespace sedf {

/**
 * JSON certificate layout (key order is fixed):
 *
 *   group            cyclic factor orders, e.g. [3,3,3,3,3]
 *   provenance       {"kind":"cyclotomic","p","m","modulus":[c0..cm],"theta":[c0..],"e"}
 *                    or {"kind":"explicit","note"}
 *   sets             element ranks per set
 *   params           {"n","m","k","lambda"}; lambda is null when invalid
 *   valid, disjoint  booleans
 *   per_index_lambda constant found for each i, or null
 *   violations       [{"index","element","multiplicity","expected"}]
 *
 * indent < 0 produces a single line, used for certificate streams.
 */
std::string certificate_to_json(const SedfCertificate& cert, int indent = -1);

/// Throws Error(Parse) on malformed or inconsistent input.
SedfCertificate certificate_from_json(std::string_view text);

struct Recheck {
    SedfCertificate fresh;
    bool identical = false;
    std::string mismatch;  // first difference, empty when identical
};

/// Rebuilds the family from the certificate (re-deriving the classes when the
/// provenance is cyclotomic), re-runs verify_sedf and compares every field.
Recheck recheck_certificate(const SedfCertificate& cert);

}  // namespace sedf
