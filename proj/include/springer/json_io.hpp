/*
 * json_io.hpp
 * JSON (de)serialization for the CLI surface: rationals as "p/q" strings,
 * series, coweights in lattice coordinates, torus elements, root datum
 * files, and fiber reports.
 */
#pragma once

#include <nlohmann/json_fwd.hpp>

#include "springer/springer.hpp"

namespace springer {

using Json = nlohmann::json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j);

Json coweight_to_json(const RootDatum& d, const CoweightQ& c);
CoweightQ coweight_from_json(const RootDatum& d, const Json& j);

// "s1 s2" / "s1*s2" / "e" / "id"
WeylElement weyl_word_from_string(const RootDatum& d, const std::string& s);

Json gamma_to_json(const RootDatum& d, const TorusElement& g);
TorusElement gamma_from_json(const RootDatum& d, const Json& j);

// {"cartan": [[...]], "central_rank": k, "basis": [[...], ...] (optional)}
RootDatum datum_from_json(const Json& j);
RootDatum datum_from_json_file(const std::string& path);
// Dispatch: named spec or a path to a .json file.
RootDatum datum_from_spec_or_file(const std::string& spec);

Json report_to_json(const RootDatum& d, const FiberReport& rep);
FiberReport report_from_json(const RootDatum& d, const Json& j);

// comma-separated rationals in lattice coordinates, e.g. "1,0" or "1/2,1/2"
CoweightQ coweight_from_cli(const RootDatum& d, const std::string& s);

}  // namespace springer
