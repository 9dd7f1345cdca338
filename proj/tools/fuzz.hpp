#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "rrgraph/graph.hpp"

namespace rrgraph::fuzz {

enum class Profile { integer, rational };

struct Options {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  Profile profile = Profile::rational;
  /// Largest n; graphs have 2..max_n+1 vertices.
  std::size_t max_n = 4;
};

/// A named check on one instance. Returns an empty string on success, a short
/// reason otherwise. `rng` supplies any extra randomness (principal shifts).
struct Property {
  std::string name;
  std::function<std::string(const WeightedGraph&, const Divisor&, gen::Rng&)> check;
  /// Whether the property runs on an instance of this size.
  std::function<bool(const WeightedGraph&, const Divisor&)> applies;
};

std::vector<Property> properties(Profile profile);

/// Instance for case `index`: drawn from an Rng seeded with seed + index, so
/// `--seed <seed+index> --count 1` replays it as case 0.
struct Instance {
  WeightedGraph graph;
  Divisor divisor;
};
Instance make_instance(const Options& opts, std::size_t index);

/// Runs the suite and writes the report. Returns 0 when every property holds,
/// 1 otherwise.
int run(const Options& opts, std::ostream& out);

}  // namespace rrgraph::fuzz
