#pragma once

// Exhaustive minimum-code search over vertex subsets, used as the
// independent oracle for the closed-form cycle results.
//
// Cardinalities are tried in ascending order and, within a cardinality,
// subsets in lexicographic order, so the first valid subset found is the
// lexicographically smallest optimum. Graphs are limited to 64 vertices
// (one machine word per vertex set); practical reach is about 20 vertices
// on cycles with window pruning and about 12-16 on general graphs.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "idcode/cycle_codes.hpp"
#include "idcode/graph.hpp"
#include "idcode/semantics.hpp"

namespace idcode {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  std::optional<std::size_t> max_size;
  // Apply the cycle window constraints when the graph is labeled "cycle:n".
  bool use_cycle_pruning = true;
  bool enumerate_all = false;
  unsigned parallelism = 1;
  // Upper bound on complete subsets evaluated before giving up.
  std::uint64_t subset_budget = std::uint64_t{1} << 34;
};

enum class SolveStatus { kOptimal, kInfeasible, kAboveCap };

struct SolveStats {
  std::uint64_t examined = 0;  // complete subsets checked
  std::uint64_t pruned = 0;    // partial subsets cut by a window or domination constraint
  std::chrono::duration<double> wall{0};
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<std::size_t> optimum;
  Code witness_code;
  std::vector<Code> all_optima;
  SolveStats stats;
};

constexpr std::size_t kSolverMaxOrder = 64;

SolveResult min_code(const Graph& g, const FamilySpec& spec, const SolveOptions& opts = {});

// Cycle family the spec is equivalent to on a cycle (for window pruning and
// the counting bound), if any.
std::optional<cycle::Family> cycle_family_of(const FamilySpec& spec);

struct TheoremRow {
  std::size_t n = 0;
  Radius r = 0;
  std::optional<std::size_t> formula;  // nullopt outside the closed-form regime
  std::optional<std::size_t> lower_bound;
  std::optional<std::size_t> constructed;  // verified construction size
  std::optional<std::size_t> oracle;
  bool agree = true;
};

std::vector<TheoremRow> verify_theorem_table(cycle::Family family, Radius r_lo, Radius r_hi,
                                             std::size_t n_lo, std::size_t n_hi, bool run_oracle,
                                             const SolveOptions& opts = {});

}  // namespace idcode
