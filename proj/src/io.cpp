#include "cubesec/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>

namespace cubesec::io {

namespace {

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json check_json(const ConditionCheck& c) {
  return {{"applicable", c.applicable},
          {"residual", c.residual},
          {"tolerance", c.tolerance},
          {"pass", c.pass()}};
}

}  // namespace

json to_json(const Frame& s) {
  json vectors = json::array();
  for (int i = 0; i < s.n(); ++i) vectors.push_back(vector_json(s.vector(i)));
  return {{"n", s.n()}, {"k", s.k()}, {"vectors", vectors}};
}

Frame frame_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("frame must be a JSON object");
  for (const char* key : {"n", "k", "vectors"})
    if (!j.contains(key)) throw ParseError(std::string("frame is missing \"") + key + "\"");
  if (!j["n"].is_number_integer() || !j["k"].is_number_integer())
    throw ParseError("\"n\" and \"k\" must be integers");
  const int n = j["n"].get<int>();
  const int k = j["k"].get<int>();
  const json& vectors = j["vectors"];
  if (n < 1 || k < 1) throw ParseError("\"n\" and \"k\" must be positive");
  if (!vectors.is_array() || static_cast<int>(vectors.size()) != n)
    throw ParseError("\"vectors\" must hold n vectors");
  Eigen::MatrixXd m(k, n);
  for (int i = 0; i < n; ++i) {
    const json& v = vectors[i];
    if (!v.is_array() || static_cast<int>(v.size()) != k)
      throw ParseError("every vector must have k entries");
    for (int r = 0; r < k; ++r) {
      if (!v[r].is_number()) throw ParseError("vector entries must be numbers");
      m(r, i) = v[r].get<double>();
    }
  }
  return Frame(std::move(m));
}

json to_json(const SectionPolytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(vector_json(v));
  json facets = json::array();
  for (const FacetRecord& f : p.facets()) {
    json labels = json::array();
    for (const SignedIndex& s : f.normal_indices) labels.push_back({s.index, s.sign});
    facets.push_back({{"normal_indices", labels},
                      {"vertices", f.vertices},
                      {"normal", vector_json(f.normal)},
                      {"measure", f.measure},
                      {"centroid", vector_json(f.centroid)}});
  }
  return {{"dim", p.dim()}, {"vertices", verts}, {"facets", facets}, {"volume", volume(p)}};
}

json to_json(const ConditionsReport& r) {
  return {{"slab_form_by_construction", r.slab_form_by_construction},
          {"facet_correspondence", check_json(r.facet_correspondence)},
          {"centroid", check_json(r.centroid)},
          {"facet_balance", check_json(r.facet_balance)},
          {"length_bounds", check_json(r.length_bounds)},
          {"cyclic", check_json(r.cyclic)},
          {"all_pass", r.all_pass()}};
}

json to_json(const BoundsReport& r) {
  json out = {{"n", r.n},
              {"k", r.k},
              {"vaaler_lower", r.vaaler},
              {"ball_ratio", r.ball_ratio},
              {"ball_upper", r.ball_upper},
              {"c_cube", r.c_cube},
              {"conjectured_max", r.conjectured_max}};
  if (r.achieved) out["achieved"] = *r.achieved;
  if (r.position) out["position"] = *r.position;
  return out;
}

json to_json(const OptimizeResult& r) {
  json restarts = json::array();
  for (std::size_t i = 0; i < r.restarts.size(); ++i) {
    const RestartOutcome& o = r.restarts[i];
    restarts.push_back({{"restart", i},
                        {"volume", o.volume},
                        {"iterations", o.iterations},
                        {"accepted", o.trace.size() - 1}});
  }
  return {{"best_volume", r.best_volume},
          {"best_restart", r.best_restart},
          {"best_frame", to_json(r.best.frame())},
          {"conditions", to_json(r.conditions)},
          {"exceeds_conjectured_max", r.exceeds_conjectured_max},
          {"restarts", restarts}};
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw ParseError("write failed: " + path);
}

Frame read_frame(const std::string& path) {
  const json j = read_json(path);
  try {
    return frame_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_trace_csv(std::ostream& out, const OptimizeResult& r, const std::string& manifest) {
  out << "# manifest: " << manifest << '\n' << "restart,iteration,volume\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const RestartOutcome& o : r.restarts)
    for (const TracePoint& p : o.trace) out << p.restart << ',' << p.iteration << ',' << p.volume << '\n';
}

}  // namespace cubesec::io
