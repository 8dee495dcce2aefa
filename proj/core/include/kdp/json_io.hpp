#pragma once

// JSON renderings of results. Key order is fixed so that output bytes are
// reproducible.

#include <nlohmann/json.hpp>

#include "kdp/abelian_image.hpp"
#include "kdp/amalgam_splitting.hpp"
#include "kdp/certificates.hpp"
#include "kdp/presentation_area.hpp"
#include "kdp/subgroup_metrics.hpp"

namespace kdp {

using Json = nlohmann::ordered_json;

// [{"conj": "...", "rel": i, "sign": +-1}, ...]
Json to_json(NullExpression const& expr, Presentation const& p);
NullExpression null_expression_from_json(Json const& j, Presentation const& p);

Json to_json(AreaResult const& r, Presentation const& p);
Json to_json(DehnResult const& r, Presentation const& p);
Json to_json(DistanceResult const& r);
Json to_json(DistortionRow const& r);
Json to_json(BasisChange const& c, FactorHom const& h);
Json to_json(SyllableForm const& f, SplittingData const& d);
Json to_json(ToyReport const& r, Presentation const& p);
Json to_json(CertificateReport const& r);

}  // namespace kdp
