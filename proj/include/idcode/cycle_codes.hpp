#pragma once

// Closed-form optimum sizes, counting lower bounds and explicit optimal
// constructions of weak, light and two-radii codes on cycles.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "idcode/graph.hpp"
#include "idcode/semantics.hpp"

namespace idcode::cycle {

// TWO_RADII is the (2, [0, r])-identifying code: at most two stored radii
// per vertex.
enum class Family { kWeak, kLight, kTwoRadii };

std::string to_string(Family f);
FamilySpec family_spec(Family f, Radius r);

class UnsupportedRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConstructionFailed : public std::runtime_error {
 public:
  // witness is empty when the code is valid but has the wrong size.
  ConstructionFailed(const std::string& what, std::optional<Witness> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::optional<Witness>& witness() const noexcept { return witness_; }

 private:
  std::optional<Witness> witness_;
};

struct Decomposition {
  std::size_t n = 0;
  Radius r = 0;
  Family family = Family::kWeak;
  std::size_t block = 0;
  std::size_t quotient = 0;   // n / block
  std::size_t remainder = 0;  // n % block
};

// Windows of `block_length` consecutive vertices must each hold two code
// vertices: 2r+2 (weak), 3r+2 (light), 3r - floor((r+1)/3) + 2 (two radii).
std::size_t block_length(Family f, Radius r);
Decomposition decompose(Family f, std::size_t n, Radius r);

// Small-cycle regime with its own closed form (weak: 3 <= n <= 2r+1, light:
// 3 <= n <= 3r+1). Two-radii has none.
bool is_small_case(Family f, std::size_t n, Radius r);
// True when formula_size and construct_code are defined for (n, r).
bool in_regime(Family f, std::size_t n, Radius r);

// Throws UnsupportedRegime outside in_regime.
std::size_t formula_size(Family f, std::size_t n, Radius r);

// Counting bound from the two-per-window property: ceil(2n / block). Requires n >= block.
std::size_t lower_bound(Family f, std::size_t n, Radius r);

// Canonical optimal code, validated with check_code before it is returned.
// `offset` rotates the result by +offset (mod n).
Code construct_code(Family f, std::size_t n, Radius r, std::size_t offset = 0);

// Minimum number of code vertices over all windows of `length` consecutive
// cycle vertices.
std::size_t min_window_count(std::size_t n, const Code& code, std::size_t length);

// Code rotated by +offset (mod n), sorted.
Code rotate(const Code& code, std::size_t n, std::size_t offset);

}  // namespace idcode::cycle
