#pragma once

// JSON and CSV encodings of every public value type.

#include <string>
#include <string_view>

#include <json.hpp>

#include "gjs/charfun.hpp"
#include "gjs/gha.hpp"
#include "gjs/gsl2.hpp"
#include "gjs/jsmap.hpp"
#include "gjs/matrix.hpp"
#include "gjs/orbit.hpp"
#include "gjs/report.hpp"

namespace gjs {

using Json = nlohmann::ordered_json;

std::string_view to_string(Orientation o);
std::string_view to_string(Stability s);
std::string_view to_string(OneSidedBehavior b);
std::string_view to_string(RegionLabel r);

/// {"coefficients": [...], "orientation": "oscillator"|"weight"}. Throws
/// Error(InvalidArgument) on malformed input.
CharFn charfn_from_json(const Json& j);
Json to_json(const CharFn& fn);

Json to_json(const FixedPointInfo& fp);
Json to_json(const OperatorMatrix& m);
Json to_json(const ResidualReport& r);
Json to_json(const GhaRep& rep);
Json to_json(const Gsl2Rep& rep);
Json to_json(const CutSolutions& cut);
Json to_json(const JsMapRep& rep);
Json to_json(const OrbitReport& report);

/// Shortest representation that round-trips to the same double.
std::string format_double(double value);

/// RFC 4180, LF line endings. Header: basis label, then column indices;
/// each row starts with its row index.
std::string to_csv(const OperatorMatrix& m);

/// Curve samples: series,x,y rows for the characteristic function and the
/// diagonal.
std::string samples_csv(const OrbitReport& report);

/// Cobweb segments: index,kind,x1,y1,x2,y2.
std::string cobweb_csv(const OrbitReport& report);

}  // namespace gjs
