#include "vertexfreq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>

#include "vertexfreq/errors.hpp"
#include "vertexfreq/fiedler.hpp"
#include "vertexfreq/generators.hpp"
#include "vertexfreq/spectral.hpp"

namespace vertexfreq {

namespace {

struct FamilyInfo {
  std::size_t arity;
  bool planar;
};

const std::map<std::string, FamilyInfo>& families() {
  static const std::map<std::string, FamilyInfo> table{
      {"path", {1, true}},   {"cycle", {1, true}},      {"tree", {2, true}},  {"ladder", {2, true}},
      {"grid", {2, true}},   {"duplicated", {2, true}}, {"barren", {1, false}},
  };
  return table;
}

Graph build(const std::string& family, const std::vector<std::size_t>& p) {
  if (family == "path") return path(p[0]);
  if (family == "cycle") return cycle(p[0]);
  if (family == "tree") return random_tree(p[0], p[1]);
  if (family == "ladder") return generalized_ladder(p[0], p[1]);
  if (family == "grid") return grid(p[0], p[1]);
  if (family == "duplicated") return duplicated_middle_path(p[0], p[1]);
  return barren(p[0]).graph;
}

HarnessInstance run_instance(const std::string& family, const std::vector<std::size_t>& params,
                             std::optional<double> tol) {
  const Graph g = build(family, params);
  const FiedlerResult f = fiedler(eigendecompose(g));
  const VertexPartition p = partition(f.vector, tol);
  const CharacteristicReport scan = zero_ball_scan(g, p);

  HarnessInstance out;
  out.params = params;
  out.vertex_count = g.vertex_count();
  out.fiedler_multiplicity = f.multiplicity;
  out.basis_dependent = f.basis_dependent();
  out.contained_balls = scan.contained_balls.size();
  out.max_ball_size = scan.max_ball_size;
  out.tol = p.tol;
  out.bound_holds = scan.max_ball_size <= 3;
  return out;
}

std::size_t worker_count(std::size_t requested, std::size_t jobs) {
  std::size_t n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* env = std::getenv("VERTEXFREQ_THREADS")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<std::size_t>(n, cap);
  }
  return std::max<std::size_t>(1, std::min(n, jobs));
}

}  // namespace

bool is_harness_family(const std::string& family) { return families().contains(family); }

HarnessReport planar_family_harness(const std::string& family,
                                    const std::vector<std::vector<std::size_t>>& instances,
                                    std::optional<double> tol, std::size_t threads) {
  const auto it = families().find(family);
  if (it == families().end()) throw InvalidArgument("unknown harness family '" + family + "'");
  for (const auto& params : instances) {
    if (params.size() != it->second.arity) {
      throw InvalidArgument("family '" + family + "' takes " + std::to_string(it->second.arity) +
                            " parameter(s), got " + std::to_string(params.size()));
    }
  }

  HarnessReport report;
  report.family = family;
  report.planar = it->second.planar;
  report.instances.resize(instances.size());

  // Results land in their request slot, so aggregation is order-independent.
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        report.instances[i] = run_instance(family, instances[i], tol);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = worker_count(threads, instances.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const auto bounded = [](const HarnessInstance& x) { return x.bound_holds; };
  report.consistent = report.planar ? std::all_of(report.instances.begin(), report.instances.end(), bounded)
                                    : !std::all_of(report.instances.begin(), report.instances.end(), bounded);
  return report;
}

}  // namespace vertexfreq
