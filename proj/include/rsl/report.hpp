#pragma once

#include <json.hpp>

#include "rsl/admissibility.hpp"
#include "rsl/dispersion.hpp"
#include "rsl/error.hpp"
#include "rsl/estimates.hpp"
#include "rsl/nonlinear.hpp"
#include "rsl/special_functions.hpp"

namespace rsl {

using Json = nlohmann::ordered_json;

// Non-finite doubles become the strings "inf", "-inf", "nan".
Json number(double x);

void to_json(Json& j, const QuadraturePolicy& p);
void to_json(Json& j, const NormPolicy& p);
void to_json(Json& j, const ExponentFit& f);
void to_json(Json& j, const SlopeVerdict& v);
void to_json(Json& j, const OctaveRatios& o);
void to_json(Json& j, const HypothesisReport& r);
void to_json(Json& j, const BesselBoundReport& r);
void to_json(Json& j, const FrequencyScalingResult& r);
void to_json(Json& j, const AnnulusScalingResult& r);
void to_json(Json& j, const SliceL2Report& r);
void to_json(Json& j, const BoundReport& r);
void to_json(Json& j, const MaximalResult& r);
void to_json(Json& j, const GrowthReport& r);
void to_json(Json& j, const SchrodingerCounterResult& r);
void to_json(Json& j, const L6Result& r);
void to_json(Json& j, const RetardedResult& r);
void to_json(Json& j, const Exponent& e);
void to_json(Json& j, const AdmissibilityResult& r);
void to_json(Json& j, const PairChoice& c);
void to_json(Json& j, const PairCheck& c);
void to_json(Json& j, const CriticalExponents& c);
void to_json(Json& j, const Thresholds& t);
void to_json(Json& j, const SolverGrid& g);
void to_json(Json& j, const PicardTrace& t);
void to_json(Json& j, const ScatteringDiagnostic& d);
void to_json(Json& j, const ConservationSeries& c);
void to_json(Json& j, const RunRecord& r);
void to_json(Json& j, const ExperimentReport& r);

// {"error": kind, "message": ...}
Json error_json(const Error& e);

}  // namespace rsl
