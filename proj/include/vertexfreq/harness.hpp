#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vertexfreq {

// Zero-set geometry sweep over graph families that are planar by
// construction. Planarity is never decided here; barren is accepted as a
// non-planar control.
//
// Parameters per instance:
//   path n | cycle n | tree n seed | ladder rungs width | grid rows cols |
//   duplicated k m | barren n

struct HarnessInstance {
  std::vector<std::size_t> params;
  std::size_t vertex_count = 0;
  std::size_t fiedler_multiplicity = 0;
  bool basis_dependent = false;
  std::size_t contained_balls = 0;
  std::size_t max_ball_size = 0;
  double tol = 0.0;          // partition tolerance actually used
  bool bound_holds = false;  // max_ball_size <= 3
};

struct HarnessReport {
  std::string family;
  bool planar = false;
  std::vector<HarnessInstance> instances;  // same order as the request
  // Planar family: every instance respects the bound. Control: some
  // instance exceeds it.
  bool consistent = false;
};

bool is_harness_family(const std::string& family);

/// Throws InvalidArgument for unknown families or malformed parameter
/// tuples. threads == 0 picks hardware concurrency; VERTEXFREQ_THREADS caps
/// either choice. The report does not depend on the thread count.
HarnessReport planar_family_harness(const std::string& family,
                                    const std::vector<std::vector<std::size_t>>& instances,
                                    std::optional<double> tol = std::nullopt, std::size_t threads = 0);

}  // namespace vertexfreq
