// cubesec: volumes, bounds, optimality checks and maximization for central
// sections of the cube, driven through tight frames.
//
// Exit codes: 0 success, 1 acceptance or verification failure, 2 I/O or parse
// error, 3 domain error.

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubesec/acceptance.hpp"
#include "cubesec/bounds.hpp"
#include "cubesec/conditions.hpp"
#include "cubesec/io.hpp"
#include "cubesec/kernels.hpp"
#include "cubesec/optimizer.hpp"
#include "cubesec/polytope.hpp"

namespace {

using cubesec::io::json;

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kDomain = 3 };

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cubesec::ParseError("cannot read " + path);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 14];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, in.gcount());
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

// Records what produced a set of output files; written next to the first one.
struct RunManifest {
  std::string command;
  json config = json::object();
  std::uint64_t seed = 0;
  std::string started = utc_now();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  static std::string path_for(const std::string& output) { return output + ".manifest.json"; }

  void write() const {
    if (outputs.empty()) return;
    json digests_in = json::object(), digests_out = json::object();
    for (const auto& p : inputs) digests_in[p] = sha256_file(p);
    for (const auto& p : outputs) digests_out[p] = sha256_file(p);
    const json m = {{"command", command},
                    {"config", config},
                    {"version", CUBESEC_VERSION},
                    {"seed", seed},
                    {"started", started},
                    {"finished", utc_now()},
                    {"inputs", digests_in},
                    {"outputs", digests_out}};
    cubesec::io::write_json(path_for(outputs.front()), m);
  }
};

struct Globals {
  std::string format = "table";
  std::uint64_t seed = 0;
  bool table() const { return format == "table"; }
};

void print_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows)
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << key << value << '\n';
}

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string check_cell(const cubesec::ConditionCheck& c) {
  if (!c.applicable) return "n/a";
  return std::string(c.pass() ? "pass" : "FAIL") + "  residual " + num(c.residual) + "  tol " +
         num(c.tolerance);
}

void print_conditions(const cubesec::ConditionsReport& r) {
  print_rows({{"facet correspondence", check_cell(r.facet_correspondence)},
              {"centroid", check_cell(r.centroid)},
              {"facet balance", check_cell(r.facet_balance)},
              {"length bounds", check_cell(r.length_bounds)},
              {"cyclic", check_cell(r.cyclic)},
              {"all", r.all_pass() ? "pass" : "FAIL"}});
}

// Writes j (with a manifest back-reference) to `out`, or prints it.
void emit(const std::string& out, json j, RunManifest& manifest) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  j["manifest"] = RunManifest::path_for(out);
  cubesec::io::write_json(out, j);
  manifest.outputs.push_back(out);
}

cubesec::Partition parse_partition(const std::string& text) {
  cubesec::Partition out;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    out.emplace_back();
    std::stringstream items(part);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        out.back().push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw cubesec::ParseError("bad partition entry '" + item + "'");
      }
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw cubesec::ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("CUBESEC_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) cubesec::kernels::set_max_threads(t);
  }

  CLI::App app{"Central sections of the cube via tight frames"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();

  // volume
  auto* volume_cmd = app.add_subcommand("volume", "Volume of the section generated by a frame");
  std::string volume_in, volume_out;
  volume_cmd->add_option("frame", volume_in, "Frame JSON file")->required();
  volume_cmd->add_option("--out", volume_out, "Write the polytope dump here");

  // optimize
  auto* opt_cmd = app.add_subcommand("optimize", "Maximize the section volume over tight frames");
  cubesec::OptimizerConfig cfg;
  std::string opt_out, opt_trace;
  bool cold_only = false;
  opt_cmd->add_option("--n", cfg.n, "Number of frame vectors")->required();
  opt_cmd->add_option("--k", cfg.k, "Dimension of the section")->required();
  opt_cmd->add_option("--restarts", cfg.restarts, "Cold restarts")->capture_default_str();
  opt_cmd->add_option("--max-iterations", cfg.max_iterations)->capture_default_str();
  opt_cmd->add_flag("--cold-only", cold_only, "Skip the warm start at the extremal frame");
  opt_cmd->add_option("--out", opt_out, "Result JSON file");
  opt_cmd->add_option("--trace", opt_trace, "Trace CSV file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check first-order optimality conditions");
  std::string verify_in;
  double verify_tol = 1e-6;
  verify_cmd->add_option("frame", verify_in, "Frame JSON file")->required();
  verify_cmd->add_option("--tol", verify_tol, "Centroid/balance/cyclic tolerance")
      ->capture_default_str();

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Volume bounds for (n, k)");
  int bounds_n = 0, bounds_k = 0;
  std::string bounds_frame;
  bounds_cmd->add_option("--n", bounds_n)->required();
  bounds_cmd->add_option("--k", bounds_k)->required();
  bounds_cmd->add_option("--frame", bounds_frame, "Also place this frame within the bounds");

  // construct-extremal
  auto* ext_cmd = app.add_subcommand("construct-extremal", "Write an extremal tight frame");
  int ext_n = 0, ext_k = 0;
  std::string ext_partition, ext_signs, ext_out;
  ext_cmd->add_option("--n", ext_n)->required();
  ext_cmd->add_option("--k", ext_k)->required();
  ext_cmd->add_option("--partition", ext_partition, "Index groups, e.g. \"0,1,2;3,4\"");
  ext_cmd->add_option("--signs", ext_signs, "Comma separated +1/-1 per index");
  ext_cmd->add_option("--out", ext_out, "Frame JSON file (default: stdout)");

  // reproduce
  auto* rep_cmd = app.add_subcommand("reproduce", "Run the acceptance battery");
  cubesec::AcceptanceOptions acc;
  std::string only;
  rep_cmd->add_option("--only", only, "Comma separated criterion ids");
  rep_cmd->add_option("--n-max", acc.n_max)->capture_default_str();
  rep_cmd->add_option("--eps-tight", acc.eps_tight)->capture_default_str();
  rep_cmd->add_option("--restarts", acc.restarts)->capture_default_str();
  rep_cmd->add_flag("--list", "Print the criterion ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    RunManifest manifest;
    manifest.seed = g.seed;
    manifest.command = app.get_subcommands().front()->get_name();

    if (*volume_cmd) {
      manifest.inputs.push_back(volume_in);
      const cubesec::Frame s = cubesec::io::read_frame(volume_in);
      const cubesec::SectionPolytope p = cubesec::build_section(s);
      const double vol = cubesec::volume(p);
      if (g.table())
        print_rows({{"n", std::to_string(s.n())},
                    {"k", std::to_string(s.k())},
                    {"volume", num(vol)},
                    {"vertices", std::to_string(p.vertices().size())},
                    {"facets", std::to_string(p.facets().size())}});
      else
        std::cout << json({{"volume", vol},
                           {"vertices", p.vertices().size()},
                           {"facets", p.facets().size()}})
                         .dump(2)
                  << '\n';
      if (!volume_out.empty()) emit(volume_out, cubesec::io::to_json(p), manifest);
    } else if (*opt_cmd) {
      cfg.seed = g.seed;
      cfg.warm_start = !cold_only;
      manifest.config = {{"n", cfg.n},
                         {"k", cfg.k},
                         {"restarts", cfg.restarts},
                         {"warm_start", cfg.warm_start},
                         {"initial_step", cfg.initial_step},
                         {"decay", cfg.decay},
                         {"min_step", cfg.min_step},
                         {"patience", cfg.patience},
                         {"max_iterations", cfg.max_iterations},
                         {"improvement_tol", cfg.improvement_tol}};
      const cubesec::OptimizeResult r = cubesec::maximize(cfg);
      if (r.exceeds_conjectured_max)
        std::cerr << "WARNING: best volume exceeds 2^k c_cube(n,k) by more than 1e-4\n";
      if (g.table() || !opt_out.empty())
        print_rows({{"best volume", num(r.best_volume)},
                    {"best restart", std::to_string(r.best_restart)},
                    {"2^k c_cube", num(cubesec::vaaler_lower(cfg.k) * cubesec::c_cube(cfg.n, cfg.k))},
                    {"conditions", r.conditions.all_pass() ? "pass" : "FAIL"}});
      if (!g.table() || !opt_out.empty()) emit(opt_out, cubesec::io::to_json(r), manifest);
      if (!opt_trace.empty()) {
        const std::string mpath =
            RunManifest::path_for(opt_out.empty() ? opt_trace : opt_out);
        std::ofstream csv(opt_trace);
        if (!csv) throw cubesec::ParseError("cannot write " + opt_trace);
        cubesec::io::write_trace_csv(csv, r, mpath);
        csv.close();
        manifest.outputs.push_back(opt_trace);
      }
    } else if (*verify_cmd) {
      const cubesec::Frame s = cubesec::io::read_frame(verify_in);
      cubesec::ConditionTolerances tol;
      tol.centroid = tol.balance = tol.cyclic = verify_tol;
      const cubesec::ConditionsReport r = cubesec::verify_conditions(s, tol);
      if (g.table())
        print_conditions(r);
      else
        std::cout << cubesec::io::to_json(r).dump(2) << '\n';
      return r.all_pass() ? kOk : kFailed;
    } else if (*bounds_cmd) {
      cubesec::BoundsReport r = cubesec::bounds_report(bounds_n, bounds_k);
      if (!bounds_frame.empty()) {
        const cubesec::Frame s = cubesec::io::read_frame(bounds_frame);
        if (s.n() != bounds_n || s.k() != bounds_k)
          throw cubesec::DomainError("frame shape does not match --n/--k");
        r = cubesec::bounds_report(s);
      }
      if (g.table()) {
        std::vector<std::pair<std::string, std::string>> rows = {
            {"vaaler lower 2^k", num(r.vaaler)},
            {"ball ratio", num(r.ball_ratio)},
            {"ball upper", num(r.ball_upper)},
            {"c_cube", num(r.c_cube)},
            {"conjectured max", num(r.conjectured_max)}};
        if (r.achieved) rows.emplace_back("achieved", num(*r.achieved));
        if (r.position) rows.emplace_back("position", num(*r.position));
        print_rows(rows);
      } else {
        std::cout << cubesec::io::to_json(r).dump(2) << '\n';
      }
    } else if (*ext_cmd) {
      std::optional<cubesec::Partition> parts;
      std::optional<std::vector<int>> signs;
      if (!ext_partition.empty()) parts = parse_partition(ext_partition);
      if (!ext_signs.empty()) signs = parse_ints(ext_signs);
      manifest.config = {{"n", ext_n}, {"k", ext_k}, {"partition", ext_partition},
                         {"signs", ext_signs}};
      const cubesec::TightFrame s = cubesec::extremal_frame(ext_n, ext_k, parts, signs);
      emit(ext_out, cubesec::io::to_json(s.frame()), manifest);
    } else if (*rep_cmd) {
      if (rep_cmd->count("--list")) {
        for (const auto& id : cubesec::criterion_ids()) std::cout << id << '\n';
        return kOk;
      }
      if (!only.empty()) {
        std::stringstream items(only);
        std::string id;
        while (std::getline(items, id, ',')) acc.only.push_back(id);
      }
      acc.seed = g.seed == 0 ? acc.seed : g.seed;
      acc.log = &std::cerr;
      const auto results = cubesec::run_acceptance(acc);
      if (g.table()) {
        cubesec::print_acceptance(std::cout, results);
      } else {
        json arr = json::array();
        for (const auto& r : results)
          arr.push_back({{"id", r.id},
                         {"title", r.title},
                         {"pass", r.pass},
                         {"flagged", r.flagged},
                         {"seconds", r.seconds},
                         {"detail", r.detail}});
        std::cout << arr.dump(2) << '\n';
      }
      return cubesec::all_passed(results) ? kOk : kFailed;
    }
    manifest.write();
  } catch (const cubesec::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const cubesec::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
