#pragma once

#include <nlohmann/json.hpp>

#include "rocoh/cellular_oracle.hpp"
#include "rocoh/free_space.hpp"
#include "rocoh/gcw_complex.hpp"
#include "rocoh/obstruction.hpp"
#include "rocoh/point_ring.hpp"
#include "rocoh/rep_complex.hpp"
#include "rocoh/ro_degree.hpp"

namespace rocoh {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into ValidationError with the
/// location reported by the parser.
Json parse_json(const std::string& text);

Json to_json(RODegree a);
RODegree degree_from_json(const Json& j);

Json to_json(Prime p, const RealRep& rep);
/// Accepts the object form or the compact string form ("2x+1").
RealRep rep_from_json(Prime p, const Json& j);

Json to_json(const ConeMonomial& mono);
ConeMonomial monomial_from_json(const Json& j);
/// Element: monomial fields plus "coeff"; {"zero": {"m":..,"n":..}} for 0.
Json to_json(const RingElement& x);
RingElement element_from_json(Prime p, const Json& j);

Json to_json(const OrbitAlgebra& x);
OrbitAlgebra orbit_algebra_from_json(const Json& j);

Json to_json(const RepComplex& x);
RepComplex rep_complex_from_json(const Json& j);

Json to_json(const GCWComplex& x);
GCWComplex gcw_from_json(const Json& j);

Json to_json(const FreeBasis& b);
Json to_json(const NonFreeCertificate& c);
Json to_json(const EngineResult& r);
Json to_json(const RankProfile& profile);
Json to_json(const ModuleData& m);
Json to_json(const Fact& f);
Json to_json(const Verdict& v);

}  // namespace rocoh
