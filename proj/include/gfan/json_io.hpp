#pragma once

#include <json.hpp>
#include <string>

#include "gfan/classify.hpp"
#include "gfan/fan.hpp"
#include "gfan/matrix.hpp"
#include "gfan/seed.hpp"
#include "gfan/witness.hpp"

namespace gfan {

// Insertion-ordered JSON keeps emitted key order stable across runs.
using Json = nlohmann::ordered_json;

// Matrices: {"n": 2, "b": [[0,1],[-1,0]]}; extended: {"n": 2, "c": [[...]]}
// with 2n rows. Entries are signed decimal integers; values outside the
// 64-bit range are refused rather than rounded.
Json matrix_to_json(const ExchangeMatrix& m);
Json extended_to_json(const ExtendedMatrix& m);
ExchangeMatrix matrix_from_json(const Json& j);
ExtendedMatrix extended_from_json(const Json& j);

// {"b": {...}, "seeds": [{"c": [[...]], "g": [[...]]}], "edges": [[from,k,to]]}
// Seed indices are 0-based array positions; mutation indices are 1-based.
Json enumeration_to_json(const SeedEnumeration& e);
SeedEnumeration enumeration_from_json(const Json& j);

// {"dim": n, "rays": [[...]], "cones": [[ray indices]], "complete": true|false|null}
Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);

// {"kind":"finite","class_size":N} or
// {"kind":"infinite","path":[...],"pair":[i,j]} (1-based path and pair).
Json verdict_to_json(const FiniteTypeVerdict& v);

// {"b": {...}, "path": [...], "pair": [i,j], "bc": [b,c],
//  "witness": [...], "witness_at_bprime": [...]} (1-based path and pair).
Json certificate_to_json(const WitnessCertificate& c);
WitnessCertificate certificate_from_json(const Json& j);

Json verification_to_json(const WitnessVerification& v);

Json membership_to_json(const MembershipReport& r, const Fan& f);
Json completeness_to_json(const CompletenessReport& r, const Fan& f);
Json cover_to_json(const LatticeCoverReport& r, long radius);

// Checked conversions between arbitrary-precision entries and JSON numbers.
long long to_json_int(const Int& v);
Int int_from_json(const Json& j);
IntVec intvec_from_json(const Json& j);
Json intvec_to_json(const IntVec& v);

}  // namespace gfan
