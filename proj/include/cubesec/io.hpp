#pragma once

// JSON and CSV formats. Frames: {"n": int, "k": int, "vectors": [[k doubles] x n]};
// unknown keys are ignored. Doubles are written with round-trip precision.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cubesec/bounds.hpp"
#include "cubesec/conditions.hpp"
#include "cubesec/frame.hpp"
#include "cubesec/optimizer.hpp"
#include "cubesec/polytope.hpp"

namespace cubesec::io {

using nlohmann::json;

json to_json(const Frame& s);
/// Throws ParseError on schema violations; NotAFrame if the vectors do not span.
Frame frame_from_json(const json& j);

json to_json(const SectionPolytope& p);
json to_json(const ConditionsReport& r);
json to_json(const BoundsReport& r);
/// Winner, volume, per-restart summary and conditions (traces go to CSV).
json to_json(const OptimizeResult& r);

/// Reads and parses a JSON file. Throws ParseError on I/O or syntax errors.
json read_json(const std::string& path);
void write_json(const std::string& path, const json& j);
Frame read_frame(const std::string& path);

/// restart,iteration,volume rows after a "# manifest: <path>" comment line.
void write_trace_csv(std::ostream& out, const OptimizeResult& r, const std::string& manifest);

}  // namespace cubesec::io
