// Copyright 2026 The Mereo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Subcommands: model, spectrum, evolve, mereology,
// locality, geometry. Exit codes: 0 success, 1 invalid input, 2 numerical
// failure, 3 search finished below the requested quality (artifacts are
// still written).

#include <chrono>
#include <cstdint>
#include <ctime>
#include <iostream>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mereo/bekenstein.hpp"
#include "mereo/entropy.hpp"
#include "mereo/evolve.hpp"
#include "mereo/geometry.hpp"
#include "mereo/io.hpp"
#include "mereo/linalg.hpp"
#include "mereo/locality.hpp"
#include "mereo/mereology.hpp"
#include "mereo/models.hpp"
#include "mereo/types.hpp"

using json = nlohmann::json;
using namespace mereo;

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

json report_skeleton(const std::string& command, std::uint64_t seed, int threads, json config) {
  return json{{"tool", "mereo"},
              {"version", io::kToolVersion},
              {"command", command},
              {"seed", seed},
              {"threads", threads},
              {"config", std::move(config)},
              {"timestamp", utc_timestamp()}};
}

json trace_to_json(const std::vector<std::pair<std::int64_t, double>>& trace) {
  json out = json::array();
  for (const auto& [it, val] : trace) out.push_back(json::array({it, val}));
  return out;
}

json real_vector_to_json(const RealVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

std::vector<Index> parse_dims(const std::string& spec) {
  std::vector<Index> dims;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t next = spec.find(',', pos);
    if (next == std::string::npos) next = spec.size();
    const std::string tok = spec.substr(pos, next - pos);
    try {
      dims.push_back(static_cast<Index>(std::stoll(tok)));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse factor dimension '" + tok + "'");
    }
    pos = next + 1;
  }
  if (dims.empty()) throw std::invalid_argument("empty dims list");
  return dims;
}

int default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

struct ModelArgs {
  std::string kind;
  std::string spec_path;
  std::string output;
  std::string report;
  std::string frame_out;
  std::string base = "ising";
  std::uint64_t seed = 0;
  int n = 4;
  double coupling = 1.0;
  double field = 1.0;
  bool periodic = false;
  Index dim = 64;
  double mass = 1.0;
  double omega = 1.0;
};

// ModelSpec JSON: {"kind": ..., "seed": ..., "parameters": {...}}; overrides flags.
void apply_model_spec(ModelArgs& a) {
  const json spec = io::load_json(a.spec_path);
  if (!spec.contains("kind")) throw std::invalid_argument("model spec needs a kind");
  a.kind = spec.at("kind").get<std::string>();
  a.seed = spec.value("seed", a.seed);
  if (!spec.contains("parameters")) return;
  const json& p = spec.at("parameters");
  a.n = p.value("n", a.n);
  a.coupling = p.value("J", a.coupling);
  a.field = p.value("g", a.field);
  a.periodic = p.value("periodic", a.periodic);
  a.dim = p.value("dim", a.dim);
  a.mass = p.value("mass", a.mass);
  a.omega = p.value("omega", a.omega);
  a.base = p.value("base", a.base);
}

HermitianOperator build_base_model(const ModelArgs& a, const std::string& kind) {
  if (kind == "ising") return models::transverse_field_ising(a.n, a.coupling, a.field, a.periodic);
  if (kind == "sho") return models::truncated_sho(a.dim, a.mass, a.omega);
  if (kind == "gue") return models::gue_random(a.dim, a.seed);
  throw std::invalid_argument("unknown model kind '" + kind + "'");
}

int run_model(ModelArgs a) {
  if (!a.spec_path.empty()) apply_model_spec(a);
  if (a.kind.empty()) throw std::invalid_argument("either --kind or --spec is required");
  json config{{"kind", a.kind},  {"output", a.output}, {"n", a.n},
              {"J", a.coupling}, {"g", a.field},       {"periodic", a.periodic},
              {"dim", a.dim},    {"mass", a.mass},     {"omega", a.omega},
              {"base", a.base},  {"frame_out", a.frame_out}};
  HermitianOperator h = [&] {
    if (a.kind == "scrambled") {
      const HermitianOperator base = build_base_model(a, a.base);
      auto scrambled = models::scramble(base, a.seed);
      if (!a.frame_out.empty()) io::save_matrix(scrambled.frame, a.frame_out);
      return std::move(scrambled.h);
    }
    return build_base_model(a, a.kind);
  }();
  io::save_operator(h, a.output);

  json report = report_skeleton("model", a.seed, 1, std::move(config));
  report["results"] = {{"dim", h.dim()}, {"frobenius_norm", h.frobenius_norm()}};
  io::atomic_write_json(a.report.empty() ? a.output + ".report.json" : a.report, report);
  std::cout << "wrote " << a.output << " (dim " << h.dim() << ")\n";
  return 0;
}

struct SpectrumArgs {
  std::string input;
  std::string output;
  std::string state_out;
  int level = 0;
  bool allow_degenerate = false;
};

int run_spectrum(const SpectrumArgs& a) {
  const HermitianOperator h = io::load_operator(a.input);
  const EigenSystem es = diagonalize(h);

  if (!a.state_out.empty()) {
    if (a.level < 0 || a.level >= h.dim()) throw std::invalid_argument("level out of range");
    // The eigenvector is only well defined when the requested level is
    // isolated from its neighbors.
    const double gap_tol = tol::degeneracy * std::max(1.0, h.frobenius_norm());
    const auto& e = es.spectrum.energies;
    const bool clustered = (a.level > 0 && e[a.level] - e[a.level - 1] < gap_tol) ||
                           (a.level + 1 < h.dim() && e[a.level + 1] - e[a.level] < gap_tol);
    if (clustered && !a.allow_degenerate)
      throw numeric_error(
          "eigenvector request inside a degenerate cluster (pass --allow-degenerate to override)");
    io::save_state(StateVector(es.frame.col(a.level)), a.state_out);
  }

  json config{{"input", a.input},
              {"state_out", a.state_out},
              {"level", a.level},
              {"allow_degenerate", a.allow_degenerate}};
  json report = report_skeleton("spectrum", 0, 1, std::move(config));
  report["results"] = {{"dim", h.dim()},
                       {"energies", real_vector_to_json(es.spectrum.energies)},
                       {"degenerate", es.spectrum.degenerate}};
  io::atomic_write_json(a.output, report);
  std::cout << "spectrum of dim " << h.dim() << (es.spectrum.degenerate ? " (degenerate)" : "")
            << " -> " << a.output << "\n";
  return 0;
}

struct EvolveArgs {
  std::string hamiltonian;
  std::string state;
  std::string output;
  std::string report;
  std::string method = "spectral";
  double t = 0.0;
  double tolerance = 1e-13;
};

int run_evolve(const EvolveArgs& a) {
  const HermitianOperator h = io::load_operator(a.hamiltonian);
  const StateVector psi = io::load_state(a.state);
  if (h.dim() != psi.dim()) throw std::invalid_argument("state does not match the Hamiltonian");

  StateVector out = [&] {
    if (a.t == 0.0) return psi;  // identity evolution, bit-for-bit
    if (a.method == "spectral") {
      const EigenSystem es = diagonalize(h);
      return StateVector(evolve_with(es, psi.amplitudes(), a.t));
    }
    if (a.method == "ode") return schrodinger_evolve_dense(h, psi, a.t, a.tolerance);
    throw std::invalid_argument("unknown method '" + a.method + "'");
  }();
  io::save_state(out, a.output);

  json config{{"hamiltonian", a.hamiltonian},
              {"state", a.state},
              {"output", a.output},
              {"t", a.t},
              {"method", a.method},
              {"tolerance", a.tolerance}};
  json report = report_skeleton("evolve", 0, 1, std::move(config));
  report["results"] = {{"dim", out.dim()}, {"norm", out.amplitudes().norm()}};
  io::atomic_write_json(a.report.empty() ? a.output + ".report.json" : a.report, report);
  std::cout << "evolved to t = " << a.t << " -> " << a.output << "\n";
  return 0;
}

struct MereologyArgs {
  std::string input;
  std::string output;
  Index d_s = 2;
  Index d_e = 0;
  int restarts = 4;
  int steps = 2000;
  int budget = 2;
  std::uint64_t seed = 0;
  int threads = default_threads();
  double quality = -1.0;  // negative: no gate
};

int run_mereology(const MereologyArgs& a) {
  const HermitianOperator h = io::load_operator(a.input);
  const Index d_e = a.d_e > 0 ? a.d_e : h.dim() / a.d_s;
  const auto result =
      mereology::mereology_search(h, a.d_s, d_e, a.restarts, a.steps, a.seed, a.threads);
  const auto decomposition = mereology::decompose_hamiltonian(h, result.split);
  const double h_s_norm = decomposition.h_system.frobenius_norm();
  const double interaction_ratio =
      h_s_norm > 0.0 ? decomposition.h_interaction.frobenius_norm() / h_s_norm
                     : std::numeric_limits<double>::infinity();

  json config{{"input", a.input},       {"d_s", a.d_s},     {"d_e", d_e},
              {"restarts", a.restarts}, {"steps", a.steps}, {"budget", a.budget},
              {"quality", a.quality}};
  json report = report_skeleton("mereology", a.seed, a.threads, std::move(config));
  report["results"] = {
      {"objective", result.objective},
      {"entanglement_rate", result.entanglement_rate},
      {"delocalization_rate", result.delocalization_rate},
      {"generic_rate", result.generic_rate},
      {"pointer_defect", result.pointer.defect},
      {"interaction_to_system_ratio", interaction_ratio},
      {"frame", io::operator_to_json(result.split.frame())},
      {"pointer_vectors", io::operator_to_json(result.pointer.vectors)},
      {"trace", trace_to_json(result.search_trace)},
  };
  io::atomic_write_json(a.output, report);
  std::cout << "mereology objective " << result.objective << " (pointer defect "
            << result.pointer.defect << ") -> " << a.output << "\n";
  if (a.quality >= 0.0 && result.objective > a.quality) return 3;
  return 0;
}

struct LocalityArgs {
  std::string input;
  std::string output;
  std::string dims_spec;
  std::string profile_csv;
  std::string expansion_csv;
  int k = 2;
  bool search = false;
  int restarts = 4;
  int steps = 4000;
  std::uint64_t seed = 0;
  int threads = default_threads();
  double tol = 1e-6;
};

int run_locality(const LocalityArgs& a) {
  const HermitianOperator h = io::load_operator(a.input);
  const std::vector<Index> dims = parse_dims(a.dims_spec);

  json config{{"input", a.input},       {"dims", a.dims_spec}, {"k", a.k},
              {"search", a.search},     {"restarts", a.restarts}, {"steps", a.steps},
              {"tol", a.tol}};
  json report = report_skeleton("locality", a.seed, a.threads, std::move(config));

  int exit_code = 0;
  locality::Multipartition partition(dims);
  if (a.search) {
    auto result =
        locality::local_factorization_search(h, dims, a.k, a.restarts, a.steps, a.seed, a.threads);
    report["results"]["nonlocal_fraction"] = result.nonlocal_fraction;
    report["results"]["trace"] = trace_to_json(result.trace);
    report["results"]["frame"] = io::operator_to_json(result.partition.frame());
    partition = std::move(result.partition);
    if (result.nonlocal_fraction > a.tol) exit_code = 3;
  } else {
    const auto result = locality::k_locality_test(h, partition, a.k, a.tol);
    report["results"]["nonlocal_fraction"] = result.nonlocal_fraction;
    report["results"]["is_k_local"] = result.is_k_local;
  }

  const auto expansion = locality::operator_expansion(h, partition);
  const auto profile = locality::locality_profile(expansion);
  report["results"]["weight_by_order"] = real_vector_to_json(profile.weight_by_order);
  io::atomic_write_json(a.output, report);
  if (!a.profile_csv.empty()) io::write_profile_csv(profile, a.profile_csv);
  if (!a.expansion_csv.empty()) io::write_expansion_csv(expansion, a.expansion_csv);

  std::cout << "nonlocal fraction " << report["results"]["nonlocal_fraction"].get<double>()
            << " at k = " << a.k << " -> " << a.output << "\n";
  return exit_code;
}

struct GeometryArgs {
  std::string state;
  std::string output;
  std::string dims_spec;
  std::string mi_csv;
  std::string dist_csv;
  std::string embedding_csv;
  double l0 = 1.0;
  double i_floor = 1e-12;
  double d_cap = -1.0;  // default 50 * l0
  double tau = 0.05;
  int m_max = 0;        // default n - 1
};

int run_geometry(const GeometryArgs& a) {
  const StateVector psi = io::load_state(a.state);
  const std::vector<Index> dims = parse_dims(a.dims_spec);
  const Factorization partition(dims);
  if (partition.dim() != psi.dim())
    throw std::invalid_argument("dims do not match the state dimension");

  const double d_cap = a.d_cap > 0.0 ? a.d_cap : 50.0 * a.l0;
  const int m_max = a.m_max > 0 ? a.m_max : static_cast<int>(partition.n_factors()) - 1;

  const auto graph = geometry::mi_graph(psi, partition);
  const auto dist = geometry::mi_to_distance(graph, a.l0, a.i_floor, d_cap);
  const auto embedding = geometry::classical_mds(dist, m_max, a.tau);

  json config{{"state", a.state},     {"dims", a.dims_spec}, {"l0", a.l0},
              {"i_floor", a.i_floor}, {"d_cap", d_cap},      {"tau", a.tau},
              {"m_max", m_max}};
  json report = report_skeleton("geometry", 0, 1, std::move(config));
  json coords = json::array();
  for (Index i = 0; i < embedding.coordinates.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < embedding.coordinates.cols(); ++k)
      row.push_back(embedding.coordinates(i, k));
    coords.push_back(std::move(row));
  }
  report["results"] = {
      {"n_regions", graph.n_regions()},
      {"gram_eigenvalues", real_vector_to_json(embedding.gram_eigenvalues)},
      {"stress", embedding.stress},
      {"estimated_dimension", embedding.estimated_dimension},
      {"coordinates", std::move(coords)},
  };
  io::atomic_write_json(a.output, report);
  if (!a.mi_csv.empty()) io::write_real_matrix_csv(graph.values, a.mi_csv);
  if (!a.dist_csv.empty()) io::write_real_matrix_csv(dist.d, a.dist_csv);
  if (!a.embedding_csv.empty()) io::write_embedding_csv(embedding, a.embedding_csv);

  std::cout << "embedding dimension " << embedding.estimated_dimension << ", stress "
            << embedding.stress << " -> " << a.output << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian-spectrum toolkit: factorizations, pointer bases, locality, geometry"};
  app.require_subcommand(1);

  ModelArgs model;
  auto* cmd_model = app.add_subcommand("model", "generate a reference Hamiltonian");
  cmd_model->add_option("--kind", model.kind, "ising | sho | gue | scrambled");
  cmd_model->add_option("--spec", model.spec_path, "ModelSpec JSON (overrides the flags)")
      ->check(CLI::ExistingFile);
  cmd_model->add_option("-o,--output", model.output, "operator output (HOP-JSON)")->required();
  cmd_model->add_option("--report", model.report, "report path (default <output>.report.json)");
  cmd_model->add_option("--seed", model.seed, "random seed");
  cmd_model->add_option("--n", model.n, "ising: number of sites");
  cmd_model->add_option("--J", model.coupling, "ising: zz coupling");
  cmd_model->add_option("--g", model.field, "ising: transverse field");
  cmd_model->add_flag("--periodic", model.periodic, "ising: ring instead of open chain");
  cmd_model->add_option("--dim", model.dim, "sho/gue: matrix dimension");
  cmd_model->add_option("--mass", model.mass, "sho: mass");
  cmd_model->add_option("--omega", model.omega, "sho: frequency");
  cmd_model->add_option("--base", model.base, "scrambled: base model kind");
  cmd_model->add_option("--frame-out", model.frame_out, "scrambled: write the Haar frame here");

  SpectrumArgs spectrum;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "diagonalize an operator");
  cmd_spectrum->add_option("input", spectrum.input, "operator (HOP-JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_spectrum->add_option("-o,--output", spectrum.output, "report path")->required();
  cmd_spectrum->add_option("--state-out", spectrum.state_out, "write eigenvector --level here");
  cmd_spectrum->add_option("--level", spectrum.level, "eigenvector index (ascending)");
  cmd_spectrum->add_flag("--allow-degenerate", spectrum.allow_degenerate,
                         "export eigenvectors even when the spectrum is degenerate");

  EvolveArgs evolve;
  auto* cmd_evolve = app.add_subcommand("evolve", "Schrodinger evolution of a state");
  cmd_evolve->add_option("hamiltonian", evolve.hamiltonian, "operator (HOP-JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_evolve->add_option("state", evolve.state, "state (HOP-JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_evolve->add_option("-o,--output", evolve.output, "state output")->required();
  cmd_evolve->add_option("--report", evolve.report, "report path (default <output>.report.json)");
  cmd_evolve->add_option("-t,--t", evolve.t, "evolution time")->required();
  cmd_evolve->add_option("--method", evolve.method, "spectral | ode");
  cmd_evolve->add_option("--tolerance", evolve.tolerance, "ode: local error tolerance");

  MereologyArgs mereo_args;
  auto* cmd_mereo = app.add_subcommand("mereology", "search system/environment splits");
  cmd_mereo->add_option("input", mereo_args.input, "operator (HOP-JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_mereo->add_option("-o,--output", mereo_args.output, "report path")->required();
  cmd_mereo->add_option("--ds", mereo_args.d_s, "system dimension");
  cmd_mereo->add_option("--de", mereo_args.d_e, "environment dimension (default dim/ds)");
  cmd_mereo->add_option("--restarts", mereo_args.restarts, "search restarts");
  cmd_mereo->add_option("--steps", mereo_args.steps, "objective evaluations per restart");
  cmd_mereo->add_option("--budget", mereo_args.budget, "pointer-search restarts");
  cmd_mereo->add_option("--seed", mereo_args.seed, "random seed");
  cmd_mereo->add_option("--threads", mereo_args.threads, "worker threads over restarts");
  cmd_mereo->add_option("--quality", mereo_args.quality,
                        "exit 3 when the best objective stays above this");

  LocalityArgs locality_args;
  auto* cmd_locality = app.add_subcommand("locality", "k-local structure of an operator");
  cmd_locality->add_option("input", locality_args.input, "operator (HOP-JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_locality->add_option("-o,--output", locality_args.output, "report path")->required();
  cmd_locality->add_option("--dims", locality_args.dims_spec, "factor dims, e.g. 2,2,2,2")
      ->required();
  cmd_locality->add_option("--k", locality_args.k, "locality order");
  cmd_locality->add_flag("--search", locality_args.search, "optimize the frame unitary");
  cmd_locality->add_option("--restarts", locality_args.restarts, "search restarts");
  cmd_locality->add_option("--steps", locality_args.steps, "objective evaluations per restart");
  cmd_locality->add_option("--seed", locality_args.seed, "random seed");
  cmd_locality->add_option("--threads", locality_args.threads, "worker threads over restarts");
  cmd_locality->add_option("--tol", locality_args.tol, "k-locality tolerance / search target");
  cmd_locality->add_option("--profile-csv", locality_args.profile_csv, "write order,weight CSV");
  cmd_locality->add_option("--expansion-csv", locality_args.expansion_csv,
                           "write multi-index,coefficient CSV");

  GeometryArgs geometry_args;
  auto* cmd_geometry = app.add_subcommand("geometry", "entanglement geometry of a state");
  cmd_geometry->add_option("--state", geometry_args.state, "state (HOP-JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_geometry->add_option("-o,--output", geometry_args.output, "report path")->required();
  cmd_geometry->add_option("--dims", geometry_args.dims_spec, "factor dims, e.g. 2,2,2,2")
      ->required();
  cmd_geometry->add_option("--l0", geometry_args.l0, "length scale");
  cmd_geometry->add_option("--i-floor", geometry_args.i_floor, "mutual-information floor");
  cmd_geometry->add_option("--d-cap", geometry_args.d_cap, "distance cap (default 50*l0)");
  cmd_geometry->add_option("--tau", geometry_args.tau, "dimension-estimate threshold");
  cmd_geometry->add_option("--mmax", geometry_args.m_max, "max embedding dimension (default n-1)");
  cmd_geometry->add_option("--mi-csv", geometry_args.mi_csv, "write the MI matrix as CSV");
  cmd_geometry->add_option("--dist-csv", geometry_args.dist_csv, "write distances as CSV");
  cmd_geometry->add_option("--embedding-csv", geometry_args.embedding_csv,
                           "write embedding coordinates as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_model->parsed()) return run_model(model);
    if (cmd_spectrum->parsed()) return run_spectrum(spectrum);
    if (cmd_evolve->parsed()) return run_evolve(evolve);
    if (cmd_mereo->parsed()) return run_mereology(mereo_args);
    if (cmd_locality->parsed()) return run_locality(locality_args);
    if (cmd_geometry->parsed()) return run_geometry(geometry_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const numeric_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
