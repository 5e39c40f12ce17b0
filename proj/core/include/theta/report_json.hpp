#pragma once

// JSON forms of every report. Rationals are strings ("7/2"), labels are
// {"n":3,"lambda":[2]}, polynomials use the canonical text format.

#include <json.hpp>

#include "theta/duality.hpp"
#include "theta/harmonic.hpp"
#include "theta/isotypic.hpp"
#include "theta/oscillator.hpp"

namespace theta {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Partition& p);
Json to_json(const OrthIrrepParam& p);
Json to_json(const GlIrrepParam& p);
Json to_json(const HarmonicSpace& h, bool with_basis);
Json to_json(const SeparationCertificate& c);
Json to_json(const WeightLadder& w);
Json to_json(const IsotypicComponent& c);
Json to_json(const IsotypicReport& r);
Json to_json(const Theorem11Verdict& v);
Json to_json(const Theorem12Verdict& v);
Json to_json(const OccurrenceResult& r);
Json to_json(const ConservationCertificate& c);
Json to_json(const PersistenceReport& r);
Json to_json(const StableRangeReport& r);
Json to_json(const GlDualityCertificate& c);
Json to_json(const RelationReport& r);

}  // namespace theta
