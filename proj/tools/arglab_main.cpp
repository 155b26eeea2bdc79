// arglab: build the graph families, verify regularity structure, classify,
// and extract designs/schemes/spectra.  All reports go to stdout as JSON
// (stable key order) unless --human is given.  Exit codes: 0 pass, 1 semantic
// failure with witness, 2 input error, 3 not applicable.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arglab/codecs.hpp"
#include "arglab/constructions.hpp"
#include "arglab/designs.hpp"
#include "arglab/schemes.hpp"
#include "arglab/spectrum.hpp"
#include "arglab/verifiers.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace arglab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitWitness = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNotApplicable = 3;

struct Options {
  bool human = false;
  long long max_q = kDefaultMaxQ;
};

int emit(const Options& opts, const std::string& command, const std::string& status,
         ordered_json payload, int exit_code) {
  if (opts.human) {
    std::cout << command << ": " << status << "\n";
    for (auto it = payload.begin(); it != payload.end(); ++it)
      std::cout << "  " << it.key() << ": " << it.value().dump() << "\n";
  } else {
    ordered_json report;
    report["command"] = command;
    report["status"] = status;
    report["payload"] = std::move(payload);
    std::cout << report.dump() << "\n";
  }
  return exit_code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedJson, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::MalformedJson, "cannot write " + path);
  out << content;
}

Graph read_graph(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  if (format == "json") return graph_json_decode(text);
  if (format == "graph6") {
    std::string trimmed = text;
    while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r'))
      trimmed.pop_back();
    return graph6_decode(trimmed);
  }
  // sniff: JSON documents start with '{'
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return read_graph(path, "json");
    break;
  }
  return read_graph(path, "graph6");
}

ordered_json params_json(const ArParams& p) {
  return ordered_json::array({p.v, p.k, p.lambda, p.mu});
}

ordered_json witness_json(const PairWitness& w) {
  ordered_json out;
  out["x"] = w.x;
  out["y"] = w.y;
  out["expected"] = w.expected;
  out["actual"] = w.actual;
  return out;
}

// Shared extraction block used by build summaries and the verify command.
ordered_json graph_survey(const Graph& g) {
  ordered_json payload;
  payload["n"] = g.order();
  const DistanceTable dt = distances(g);
  payload["connected"] = dt.connected;
  payload["diameter"] = dt.connected ? ordered_json(dt.diameter) : ordered_json(nullptr);
  payload["bipartite"] = is_bipartite(g).bipartite;

  const ArCheck ar = amply_regular_params(g);
  if (ar.ok()) {
    payload["amply_regular"] = params_json(*ar.params);
    payload["summary"] = ar.params->to_string();
    payload["feasibility"] = ordered_json::array();
    for (const auto& f : feasibility_diagnostics(*ar.params, dt.diameter).findings) {
      ordered_json finding;
      finding["bound"] = f.bound;
      finding["inequality"] = f.inequality;
      finding["violated"] = f.violated;
      payload["feasibility"].push_back(std::move(finding));
    }
  } else {
    ordered_json failure;
    failure["reason"] = to_string(ar.failure);
    if (ar.witness.x >= 0) failure["witness"] = witness_json(ar.witness);
    payload["amply_regular"] = std::move(failure);
  }

  const ArCheck srg = strongly_regular_params(g);
  payload["strongly_regular"] =
      srg.ok() ? params_json(*srg.params) : ordered_json(nullptr);

  const DrCheck dr = distance_regular_array(g);
  payload["intersection_array"] =
      dr.ok() ? ordered_json(dr.array->to_string()) : ordered_json(nullptr);
  return payload;
}

int run_build(const Options& opts, const std::string& family, std::optional<long long> q,
              const std::string& out_path, std::string format) {
  if (format.empty()) format = "json";

  const bool needs_q = family != "lambda14" && family != "k2-box-lambda";
  if (needs_q && !q)
    return emit(opts, "build", "error", {{"error", "--q is required for family " + family}},
                kExitInputError);

  if (family == "paley-digraph") {
    if (format == "graph6")
      return emit(opts, "build", "error",
                  {{"error", "graph6 cannot encode digraphs, use --format json"}},
                  kExitInputError);
    const Digraph d = paley_digraph(*q, opts.max_q);
    if (!out_path.empty()) write_file(out_path, digraph_json_encode(d) + "\n");
    ordered_json payload;
    payload["family"] = family;
    payload["q"] = *q;
    payload["n"] = d.order();
    payload["out_degree"] = d.out_degree(0);
    if (!out_path.empty()) payload["out"] = out_path;
    return emit(opts, "build", "pass", payload, kExitPass);
  }

  Graph g;
  if (family == "paley") g = paley_graph(*q, opts.max_q);
  else if (family == "peisert") g = peisert_graph(*q, opts.max_q);
  else if (family == "taylor-bd-paley") g = taylor_bd_pipeline(ConferenceKind::Paley, *q, opts.max_q);
  else if (family == "taylor-bd-peisert") g = taylor_bd_pipeline(ConferenceKind::Peisert, *q, opts.max_q);
  else if (family == "im") g = im_pipeline(*q, opts.max_q);
  else if (family == "hypercube") g = hypercube(static_cast<int>(*q));
  else if (family == "lambda14") g = lambda_14();
  else if (family == "k2-box-lambda") g = k2_box_lambda();
  else
    return emit(opts, "build", "error", {{"error", "unknown family " + family}}, kExitInputError);

  if (!out_path.empty()) {
    if (format == "graph6")
      write_file(out_path, graph6_encode(g) + "\n");
    else if (format == "json")
      write_file(out_path, graph_json_encode(g) + "\n");
    else
      return emit(opts, "build", "error", {{"error", "unknown format " + format}},
                  kExitInputError);
  }

  ordered_json payload;
  payload["family"] = family;
  if (q) payload["q"] = *q;
  ordered_json survey = graph_survey(g);
  for (auto it = survey.begin(); it != survey.end(); ++it) payload[it.key()] = it.value();
  if (!out_path.empty()) {
    payload["out"] = out_path;
    payload["format"] = format;
  }
  return emit(opts, "build", "pass", payload, kExitPass);
}

int run_verify(const Options& opts, const std::string& in_path, const std::string& format,
               const std::string& expect) {
  const Graph g = read_graph(in_path, format);
  ordered_json payload = graph_survey(g);

  const ArCheck ar = amply_regular_params(g);
  bool pass = ar.ok();
  if (!expect.empty()) {
    ArParams want;
    char comma;
    std::istringstream is(expect);
    if (!(is >> want.v >> comma >> want.k >> comma >> want.lambda >> comma >> want.mu))
      return emit(opts, "verify", "error", {{"error", "cannot parse --expect " + expect}},
                  kExitInputError);
    payload["expected"] = params_json(want);
    if (ar.ok() && *ar.params == want) {
      payload["expect_match"] = true;
    } else {
      payload["expect_match"] = false;
      pass = false;
      if (ar.ok()) {
        ordered_json mismatch;
        if (ar.params->v != want.v) mismatch["v"] = ar.params->v;
        if (ar.params->k != want.k) mismatch["k"] = ar.params->k;
        if (ar.params->lambda != want.lambda) mismatch["lambda"] = ar.params->lambda;
        if (ar.params->mu != want.mu) mismatch["mu"] = ar.params->mu;
        payload["witness"] = std::move(mismatch);
      }
    }
  }
  return emit(opts, "verify", pass ? "pass" : "witness", payload,
              pass ? kExitPass : kExitWitness);
}

int run_classify(const Options& opts, const std::string& in_path, const std::string& format) {
  const Graph g = read_graph(in_path, format);
  const Classification result = classify(g);

  ordered_json payload;
  payload["case"] = to_string(result.kind);
  payload["params"] = params_json(result.params);
  payload["diameter"] = result.diameter;

  switch (result.kind) {
    case GraphCase::FiveCube: {
      payload["folded_graph"] = params_json(*result.folded_params);
      return emit(opts, "classify", "pass", payload, kExitPass);
    }
    case GraphCase::K2BoxLambda: {
      const DistanceTable dt = distances(g);
      payload["gamma4_size"] = dt.sphere(0, 4).size();
      payload["note"] = result.note;
      return emit(opts, "classify", "pass", payload, kExitPass);
    }
    case GraphCase::GddIncidence: {
      const GddExtraction& ex = *result.design;
      payload["gdd"] = ordered_json::parse(design_json_encode(ex.gdd));
      const DualGrouping dual = dual_property_check(ex.gdd);
      payload["dual_property"] = dual.ok;
      const AssociationScheme scheme = scheme_from_q_regular_graph(g);
      payload["scheme"] = ordered_json::parse(scheme_report_json(scheme));
      const int eigenvalues = distinct_eigenvalue_count(g);
      payload["distinct_eigenvalues"] = eigenvalues;
      const bool evidence_ok = dual.ok && scheme.symmetric && scheme.classes() == 5 &&
                               eigenvalues == 6;
      return emit(opts, "classify", evidence_ok ? "pass" : "witness", payload,
                  evidence_ok ? kExitPass : kExitWitness);
    }
    case GraphCase::Contradiction: {
      payload["note"] = result.note;
      return emit(opts, "classify", "witness", payload, kExitWitness);
    }
  }
  return kExitInputError;
}

int run_gdd(const Options& opts, const std::string& in_path, const std::string& format,
            int base_vertex) {
  const Graph g = read_graph(in_path, format);
  const GddExtraction ex = gdd_from_graph(g, base_vertex);
  ordered_json payload;
  payload["base_vertex"] = ex.base_vertex;
  payload["design"] = ordered_json::parse(design_json_encode(ex.gdd));
  const DualGrouping dual = dual_property_check(ex.gdd);
  payload["dual_property"] = dual.ok;
  if (dual.ok) payload["dual_groups"] = dual.block_groups;
  return emit(opts, "gdd", dual.ok ? "pass" : "witness", payload,
              dual.ok ? kExitPass : kExitWitness);
}

int run_scheme(const Options& opts, const std::string& in_path, const std::string& format) {
  const Graph g = read_graph(in_path, format);
  const AssociationScheme scheme = scheme_from_q_regular_graph(g);
  ordered_json payload = ordered_json::parse(scheme_report_json(scheme));
  return emit(opts, "scheme", "pass", payload, kExitPass);
}

int run_spectrum(const Options& opts, const std::string& in_path, const std::string& format) {
  const Graph g = read_graph(in_path, format);
  const auto poly = minimal_polynomial(g);
  ordered_json payload;
  payload["distinct_eigenvalues"] = static_cast<int>(poly.size()) - 1;
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : poly) coeffs.push_back(c.get_str());
  payload["min_poly"] = std::move(coeffs);
  return emit(opts, "spectrum", "pass", payload, kExitPass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amply regular graph laboratory"};
  app.require_subcommand(1);

  Options opts;
  if (const char* env = std::getenv("ARGLAB_MAX_Q")) {
    char* end = nullptr;
    const long long parsed = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) opts.max_q = parsed;
  }
  app.add_flag("--human", opts.human, "human-readable output instead of JSON");

  std::string family, in_path, out_path, format, expect;
  std::optional<long long> q;
  int base_vertex = 0;

  CLI::App* build = app.add_subcommand("build", "construct a graph family instance");
  build->add_option("family", family,
                    "paley|peisert|paley-digraph|taylor-bd-paley|taylor-bd-peisert|im|"
                    "hypercube|lambda14|k2-box-lambda")
      ->required();
  build->add_option("--q", q, "field order / dimension");
  build->add_option("--out", out_path, "output path");
  build->add_option("--format", format, "graph6|json (default json)");

  CLI::App* verify = app.add_subcommand("verify", "extract and check regularity parameters");
  verify->add_option("--in", in_path, "input graph file")->required();
  verify->add_option("--format", format, "graph6|json (default: sniff)");
  verify->add_option("--expect", expect, "expected v,k,lambda,mu");

  CLI::App* classify_cmd = app.add_subcommand("classify", "run the trichotomy classifier");
  classify_cmd->add_option("--in", in_path, "input graph file")->required();
  classify_cmd->add_option("--format", format, "graph6|json (default: sniff)");

  CLI::App* gdd = app.add_subcommand("gdd", "extract the group divisible design");
  gdd->add_option("--in", in_path, "input graph file")->required();
  gdd->add_option("--format", format, "graph6|json (default: sniff)");
  gdd->add_option("--x", base_vertex, "base vertex (default 0)");

  CLI::App* scheme = app.add_subcommand("scheme", "build the 5-class association scheme");
  scheme->add_option("--in", in_path, "input graph file")->required();
  scheme->add_option("--format", format, "graph6|json (default: sniff)");

  CLI::App* spectrum = app.add_subcommand("spectrum", "exact distinct eigenvalue count");
  spectrum->add_option("--in", in_path, "input graph file")->required();
  spectrum->add_option("--format", format, "graph6|json (default: sniff)");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (build->parsed()) return run_build(opts, family, q, out_path, format);
    if (verify->parsed()) return run_verify(opts, in_path, format, expect);
    if (classify_cmd->parsed()) return run_classify(opts, in_path, format);
    if (gdd->parsed()) return run_gdd(opts, in_path, format, base_vertex);
    if (scheme->parsed()) return run_scheme(opts, in_path, format);
    if (spectrum->parsed()) return run_spectrum(opts, in_path, format);
  } catch (const Error& e) {
    const bool not_applicable = e.kind() == ErrorKind::NotApplicable;
    return emit(opts, command, "error",
                {{"error", e.what()}, {"kind", to_string(e.kind())}},
                not_applicable ? kExitNotApplicable : kExitInputError);
  } catch (const std::exception& e) {
    return emit(opts, command, "error", {{"error", e.what()}}, kExitInputError);
  }
  return kExitInputError;
}
