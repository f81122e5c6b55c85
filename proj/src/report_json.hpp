#pragma once

// JSON views of library results for the CLI. Object keys come out sorted
// (nlohmann::json uses std::map) and every real is rounded to 12
// significant digits so output is stable across platforms.

#include <string>

#include <json.hpp>

#include "vertexfreq/fiedler.hpp"
#include "vertexfreq/harness.hpp"
#include "vertexfreq/spectral.hpp"
#include "vertexfreq/vertex_frequency.hpp"

namespace vertexfreq::report {

using Json = nlohmann::json;

Json number(double x);
Json indices(const std::vector<std::size_t>& values);
Json vertex_set(const VertexSet& s);
Json graph(const Graph& g);

/// Real signals become a flat array; anything else becomes [[re, im], ...].
Json signal(const Eigen::VectorXcd& values);

Json spectrum(const EigenBasis& b);
Json translation(const TranslationAnalysis& a);
Json semigroup(const SemigroupResult& r);
Json fiedler(const Graph& g, const FiedlerResult& f, const VertexPartition& p);
Json zero_scan(const CharacteristicReport& r, const std::vector<FlatBall>& flat, double tol);
Json barren(const BarrenReport& r);
Json lift(const LiftResult& r);
Json harness(const HarnessReport& r);

std::string dump(const Json& j);

}  // namespace vertexfreq::report
