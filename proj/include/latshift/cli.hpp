#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latshift/graph.hpp"
#include "latshift/space.hpp"
#include "latshift/sparse_vector.hpp"

namespace latshift::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Malformed command line or descriptor.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// strip:M | bistrip:M | quadrant | halfplane | pathcycle | skippath | diamond
GraphModel parse_model(std::string_view text);

/// const:c | geomJ:b | geomSum:b | polyJ:d | onecoord:FILE | table:FILE.
/// Numeric parameters are exact when written as decimals or fractions;
/// "phi" stands for the golden ratio.
WeightFamily parse_weight(std::string_view text);

/// Sums of atoms e:i,j (lattices) or e:k (paths), each optionally scaled
/// by a rational coefficient: "3/2*e:1,2 - e:3,3 + 2*e:4,-1".
SparseVector<Rational> parse_vector(const GraphModel& model, std::string_view text);

/// l1 | l2 | lp:P | c0
SpaceSpec parse_space(std::string_view text);

/// Runs one subcommand. Reports go to `out` (or the --out file); errors
/// are printed to `err` as a single-line JSON object. Returns the exit code.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latshift::cli
