// ofg: enumerate valid mountain-valley assignments of flat-foldable
// single-vertex crease patterns, build and export their flip graphs, find
// flip paths, and verify the closed-form counts against brute force.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ofg/counting.hpp"
#include "ofg/crease_pattern.hpp"
#include "ofg/errors.hpp"
#include "ofg/flip_graph.hpp"
#include "ofg/general_vertex.hpp"
#include "ofg/graph_export.hpp"
#include "ofg/mv_assignment.hpp"
#include "ofg/pathfinding.hpp"

namespace {

int enum_limit() {
  const char* env = std::getenv("OFG_MAX_N");
  if (!env || !*env) return ofg::kDefaultEnumLimit;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1 || v > 16)
    throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                               std::string("OFG_MAX_N must be an integer in "
                                           "1..16, got '") + env + "'");
  return static_cast<int>(v);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out)
    throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                               "cannot open output file " + out_path);
  out << text;
}

std::vector<std::string> split_csv(const std::string& list) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

ofg::CreasePattern pattern_from_options(const std::string& angles,
                                        const std::string& pattern_file) {
  if (!angles.empty() && !pattern_file.empty())
    throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                               "give either --angles or --pattern, not both");
  if (!pattern_file.empty()) return ofg::CreasePattern::load(pattern_file);
  if (angles.empty())
    throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                               "one of --angles or --pattern is required");
  return ofg::CreasePattern::from_strings(split_csv(angles));
}

ofg::Majority parse_majority(const std::string& name) {
  if (name == "mountain") return ofg::Majority::Mountain;
  if (name == "valley") return ofg::Majority::Valley;
  if (name == "both") return ofg::Majority::Both;
  throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                             "unknown majority '" + name + "'");
}

int run_enumerate(int n, const std::string& majority) {
  std::ostringstream os;
  for (const ofg::MVAssignment& mv :
       ofg::enumerate_valid(n, parse_majority(majority), enum_limit()))
    os << mv.str() << '\n';
  std::cout << os.str();
  return 0;
}

int run_graph(int n, const std::string& format, const std::string& out) {
  ofg::FlipGraph g = ofg::build_ofg_uniform(n, enum_limit());
  write_output(ofg::export_graph(g, ofg::parse_graph_format(format)), out);
  return 0;
}

int run_path(int n, const std::string& from, const std::string& to,
             const std::string& algo, bool verify, const std::string& format) {
  ofg::MVAssignment mu = ofg::MVAssignment::from_string(from);
  ofg::MVAssignment nu = ofg::MVAssignment::from_string(to);
  if (mu.degree() != 2 * n || nu.degree() != 2 * n)
    throw ofg::ValidationError(ofg::ErrorCode::LengthMismatch,
                               "MV strings must have length " +
                                   std::to_string(2 * n));
  ofg::FlipPath path;
  if (algo == "shwoop")
    path = ofg::fea_shwoop(mu, nu);
  else if (algo == "halves")
    path = ofg::fea_halves(mu, nu);
  else
    throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                               "unknown algorithm '" + algo + "'");

  if (format == "json") {
    std::cout << ofg::path_to_json(path).dump() << '\n';
  } else if (format == "text") {
    for (std::size_t i = 0; i < path.faces.size(); ++i)
      std::cout << (i ? " " : "") << path.faces[i];
    std::cout << '\n';
  } else {
    throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                               "unknown path format '" + format + "'");
  }

  if (verify) {
    std::string diag;
    if (!ofg::verify_path(path, &diag))
      throw ofg::InternalError("path verification failed: " + diag);
    std::cout << "verify OK\n";
  }
  return 0;
}

int run_count(int n, const std::string& what, const std::string& method) {
  bool brute = method == "brute" || method == "both";
  bool formula = method == "formula" || method == "both";
  if (!brute && !formula)
    throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                               "unknown method '" + method + "'");
  bool both = brute && formula;

  if (what == "vertices" || what == "edges") {
    ofg::BigInt brute_value, formula_value;
    if (brute) {
      if (what == "vertices")
        brute_value = static_cast<unsigned long>(
            ofg::enumerate_valid(n, ofg::Majority::Both, enum_limit()).size());
      else
        brute_value = ofg::BigInt(static_cast<unsigned long>(
            ofg::edge_count_brute(n, enum_limit())));
    }
    if (formula)
      formula_value = (what == "vertices") ? ofg::vertex_count_formula(n)
                                           : ofg::edge_count_formula(n);
    if (both) {
      bool ok = brute_value == formula_value;
      std::cout << brute_value.get_str() << ' ' << formula_value.get_str() << ' '
                << (ok ? "OK" : "MISMATCH") << '\n';
      if (!ok)
        throw ofg::InternalError("brute and formula " + what + " counts differ");
    } else {
      std::cout << (brute ? brute_value : formula_value).get_str() << '\n';
    }
    return 0;
  }

  if (what != "degrees")
    throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                               "unknown count target '" + what + "'");
  if (n < 2)
    throw ofg::ValidationError(ofg::ErrorCode::LimitExceeded,
                               "degree counts need n >= 2");

  std::map<int, std::uint64_t> hist;
  if (brute) hist = ofg::degree_histogram_brute(n, enum_limit());
  std::map<int, ofg::BigInt> form;
  if (formula)
    for (int k = n + 2; k <= 2 * n; ++k)
      form[k] = ofg::degree_count_formula(n, k);

  if (both) {
    bool all_ok = true;
    std::map<int, bool> keys;
    for (const auto& [k, v] : hist) keys[k] = true;
    for (const auto& [k, v] : form) keys[k] = true;
    for (const auto& [k, unused] : keys) {
      ofg::BigInt b = hist.count(k)
                          ? ofg::BigInt(static_cast<unsigned long>(hist[k]))
                          : ofg::BigInt(0);
      ofg::BigInt f = form.count(k) ? form[k] : ofg::BigInt(0);
      bool ok = b == f;
      all_ok = all_ok && ok;
      std::cout << k << ' ' << b.get_str() << ' ' << f.get_str() << ' '
                << (ok ? "OK" : "MISMATCH") << '\n';
    }
    if (!all_ok)
      throw ofg::InternalError("brute and formula degree histograms differ");
  } else if (brute) {
    for (const auto& [k, v] : hist) std::cout << k << ' ' << v << '\n';
  } else {
    for (const auto& [k, v] : form)
      std::cout << k << ' ' << v.get_str() << '\n';
  }
  return 0;
}

int run_sequence(int max_n) {
  std::vector<ofg::BigInt> seq = ofg::edge_count_sequence(max_n);
  for (int n = 1; n <= std::min({max_n, 9, enum_limit()}); ++n) {
    ofg::BigInt brute(static_cast<unsigned long>(ofg::edge_count_brute(n)));
    if (brute != seq[static_cast<std::size_t>(n - 1)])
      throw ofg::InternalError(
          "edge-count brute/formula mismatch at n = " + std::to_string(n) +
          ": " + brute.get_str() + " vs " +
          seq[static_cast<std::size_t>(n - 1)].get_str());
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    std::cout << (i ? ", " : "") << seq[i].get_str();
  std::cout << '\n';
  return 0;
}

int run_diameter(int n, const std::string& method) {
  bool bfs = method == "bfs" || method == "both";
  bool formula = method == "formula" || method == "both";
  if (!bfs && !formula)
    throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                               "unknown method '" + method + "'");
  std::optional<int> measured;
  if (bfs) {
    ofg::FlipGraph g = ofg::build_ofg_uniform(n, enum_limit());
    ofg::BfsMetrics m = ofg::bfs_metrics(g, ofg::BfsMode::UniformOrbits);
    if (!m.connected)
      throw ofg::InternalError("OFG(A_" + std::to_string(2 * n) +
                               ") reported disconnected");
    measured = m.diameter;
  }
  if (bfs && formula) {
    bool ok = *measured == n;
    std::cout << *measured << ' ' << n << ' ' << (ok ? "OK" : "MISMATCH") << '\n';
    if (!ok) throw ofg::InternalError("BFS diameter disagrees with n");
  } else {
    std::cout << (bfs ? *measured : n) << '\n';
  }
  return 0;
}

int run_vertex(const std::string& angles, const std::string& pattern_file,
               bool count_only, const std::string& graph_format,
               const std::string& out) {
  ofg::CreasePattern pattern = pattern_from_options(angles, pattern_file);
  ofg::FlipGraph g = ofg::build_ofg_general(pattern);

  if (!graph_format.empty()) {
    write_output(ofg::export_graph(g, ofg::parse_graph_format(graph_format)), out);
    return 0;
  }
  if (count_only) {
    std::cout << g.vertex_count() << '\n';
    return 0;
  }
  std::vector<int> comp = ofg::connected_components(g);
  int components = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::ostringstream os;
  os << "degree " << g.degree << '\n'
     << "valid " << g.vertex_count() << '\n'
     << "edges " << g.edge_count() << '\n'
     << "components " << components << '\n'
     << "bipartite " << (ofg::is_bipartite(g) ? "yes" : "no") << '\n';
  write_output(os.str(), out);
  return 0;
}

int run_embed(const std::string& angles, const std::string& pattern_file,
              int rotation, bool all, bool reflections, const std::string& out) {
  ofg::CreasePattern pattern = pattern_from_options(angles, pattern_file);
  if (all) {
    ofg::EmbeddingReport report = ofg::analyze_embeddings(pattern, reflections);
    std::ostringstream os;
    os << "rotations " << report.rotations << '\n'
       << "distinct_images " << report.distinct_rotational << '\n'
       << "edges_preserved " << (report.edges_preserved ? "yes" : "no") << '\n';
    if (reflections)
      os << "reflected_extra " << report.distinct_reflected_extra << '\n';
    write_output(os.str(), out);
    if (!report.edges_preserved)
      throw ofg::InternalError("a rotational embedding failed to preserve edges");
    return 0;
  }
  ofg::EmbeddingMap map = ofg::embed_into_uniform(pattern, rotation);
  write_output(ofg::embedding_to_json(map).dump() + "\n", out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"origami flip graphs of flat-foldable vertices"};
  app.require_subcommand(1);

  int n = 1, max_n = 1, rotation = 0;
  std::string majority = "both", format, out, from, to, algo, what, method;
  std::string angles, pattern_file, graph_format, path_format = "text";
  bool verify = false, count_only = false, all = false, reflections = false;

  CLI::App* c_enum = app.add_subcommand("enumerate", "list valid MV assignments of A_2n");
  c_enum->add_option("--n", n, "half-degree n")->required();
  c_enum->add_option("--majority", majority, "mountain|valley|both");

  CLI::App* c_graph = app.add_subcommand("graph", "export OFG(A_2n)");
  c_graph->add_option("--n", n)->required();
  c_graph->add_option("--format", format, "dot|json|csv")->required();
  c_graph->add_option("--out", out, "output file (default stdout)");

  CLI::App* c_path = app.add_subcommand("path", "face-flip path between assignments");
  c_path->add_option("--n", n)->required();
  c_path->add_option("--from", from)->required();
  c_path->add_option("--to", to)->required();
  c_path->add_option("--algo", algo, "shwoop|halves")->required();
  c_path->add_flag("--verify", verify, "replay and check the path");
  c_path->add_option("--format", path_format, "text|json");

  CLI::App* c_count = app.add_subcommand("count", "vertex/edge/degree counts");
  c_count->add_option("--n", n)->required();
  c_count->add_option("--what", what, "vertices|edges|degrees")->required();
  c_count->add_option("--method", method, "brute|formula|both")->required();

  CLI::App* c_seq = app.add_subcommand("sequence", "edge counts for n = 1..N");
  c_seq->add_option("--max-n", max_n)->required();

  CLI::App* c_diam = app.add_subcommand("diameter", "diameter of OFG(A_2n)");
  c_diam->add_option("--n", n)->required();
  c_diam->add_option("--method", method, "bfs|formula|both")->required();

  CLI::App* c_vertex = app.add_subcommand("vertex", "analyze a general vertex pattern");
  c_vertex->add_option("--angles", angles, "comma-separated rational degrees");
  c_vertex->add_option("--pattern", pattern_file, "pattern JSON file");
  c_vertex->add_flag("--count", count_only, "print only the valid-assignment count");
  c_vertex->add_option("--graph", graph_format, "emit the flip graph: dot|json|csv");
  c_vertex->add_option("--out", out);

  CLI::App* c_embed = app.add_subcommand("embed", "embed OFG(C) into OFG(A_2n)");
  c_embed->add_option("--angles", angles);
  c_embed->add_option("--pattern", pattern_file);
  CLI::Option* rot_opt = c_embed->add_option("--rotation", rotation, "0..2n-1");
  CLI::Option* all_opt = c_embed->add_flag("--all", all, "summarize all rotations");
  rot_opt->excludes(all_opt);
  c_embed->add_flag("--reflections", reflections, "also count reflected copies");
  c_embed->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (c_enum->parsed()) return run_enumerate(n, majority);
    if (c_graph->parsed()) return run_graph(n, format, out);
    if (c_path->parsed()) return run_path(n, from, to, algo, verify, path_format);
    if (c_count->parsed()) return run_count(n, what, method);
    if (c_seq->parsed()) return run_sequence(max_n);
    if (c_diam->parsed()) return run_diameter(n, method);
    if (c_vertex->parsed())
      return run_vertex(angles, pattern_file, count_only, graph_format, out);
    if (c_embed->parsed()) {
      if (!all && rot_opt->count() == 0)
        throw ofg::ValidationError(ofg::ErrorCode::BadFormat,
                                   "embed needs --rotation R or --all");
      return run_embed(angles, pattern_file, rotation, all, reflections, out);
    }
  } catch (const ofg::InternalError& e) {
    std::cerr << "error[" << e.code_name() << "]: " << e.what() << '\n';
    return 2;
  } catch (const ofg::Error& e) {
    std::cerr << "error[" << e.code_name() << "]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
