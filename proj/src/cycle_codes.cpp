#include "idcode/cycle_codes.hpp"

#include <algorithm>
#include <set>

namespace idcode::cycle {

namespace {

std::size_t two_radii_slack(Radius r) { return (r + 1) / 3; }

void require_cycle(std::size_t n) {
  if (n < 3) throw UnsupportedRegime("cycles need n >= 3, got " + std::to_string(n));
}

std::string regime_text(Family f, std::size_t n, Radius r) {
  return to_string(f) + " code on C_" + std::to_string(n) + " with r=" + std::to_string(r);
}

// Vertices i < limit with i mod period in {first, second}.
void add_pattern(std::set<std::size_t>& out, std::size_t limit, std::size_t period,
                 std::size_t first, std::size_t second) {
  for (std::size_t i = 0; i < limit; ++i) {
    const std::size_t phase = i % period;
    if (phase == first || phase == second) out.insert(i);
  }
}

std::set<std::size_t> weak_code(std::size_t n, Radius r) {
  if (is_small_case(Family::kWeak, n, r)) return {0, 1};
  const auto d = decompose(Family::kWeak, n, r);
  const std::size_t b = d.block;
  const std::size_t rem = d.remainder;
  std::set<std::size_t> code;
  if (rem == 2 && (r == 1 || r == 2)) {
    // Every other vertex (r = 1) or residues {0, 2} mod 6 (r = 2).
    const std::size_t period = r == 1 ? 2 : 6;
    add_pattern(code, n, period, 0, 2 % period);
    return code;
  }
  add_pattern(code, n, b, r, r + 1);
  if (rem == 1) {
    code.insert(n - 1);
  } else if (rem >= 2 && rem <= r + 1) {
    code.insert(n - 2);
    code.insert(n - 1);
  }
  return code;
}

std::set<std::size_t> light_code(std::size_t n, Radius r) {
  if (is_small_case(Family::kLight, n, r)) {
    if (n <= 2 * r + 2) return {0, 1};
    return {0, r + 1};
  }
  const auto d = decompose(Family::kLight, n, r);
  const std::size_t full = d.block * d.quotient;
  const std::size_t rem = d.remainder;
  std::set<std::size_t> code;
  add_pattern(code, full, d.block, r, 2 * r + 1);
  if (rem == 0) return code;
  if (rem <= r + 1) {
    code.insert(full);
  } else if (rem <= 2 * r + 1) {
    code.insert(full);
    code.insert(full + r);
  } else {
    // From rem = 2r + 2 on, {full, full + r} leaves the last vertex uncovered.
    code.insert(full + r);
    code.insert(full + 2 * r);
  }
  return code;
}

std::set<std::size_t> two_radii_code(std::size_t n, Radius r) {
  const auto d = decompose(Family::kTwoRadii, n, r);
  const std::size_t s = d.block;
  const std::size_t gap = r - two_radii_slack(r) + 1;
  const std::size_t rem = d.remainder;
  std::set<std::size_t> code;
  if (r == 2 && rem == 3) {
    // Pairs at residues {3, 6} mod 7 plus vertex 0 absorb the three spare vertices.
    code.insert(0);
    add_pattern(code, s * d.quotient, s, 3, 6);
    return code;
  }
  // Full blocks carry {0, gap}; a nonzero remainder is folded into the last block.
  const std::size_t full_blocks = rem == 0 ? d.quotient : d.quotient - 1;
  const std::size_t tail = s * full_blocks;
  add_pattern(code, tail, s, 0, gap);
  if (rem == 0) return code;
  code.insert(tail);
  code.insert(tail + rem);
  code.insert(tail + rem + gap);
  if (rem > std::min<std::size_t>(std::size_t{r} + 1, gap)) {
    code.insert(tail + (rem > 2 * std::size_t{r} + 1 ? rem - 2 * r - 1 : 1));
  }
  return code;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::kWeak:
      return "weak";
    case Family::kLight:
      return "light";
    case Family::kTwoRadii:
      return "two-radii";
  }
  return "?";
}

FamilySpec family_spec(Family f, Radius r) {
  switch (f) {
    case Family::kWeak:
      return FamilySpec::weak(r);
    case Family::kLight:
      return FamilySpec::light(r);
    case Family::kTwoRadii: {
      RadiusSet radii;
      for (Radius i = 0; i <= r; ++i) radii.push_back(i);
      return FamilySpec::general(2, std::move(radii));
    }
  }
  return FamilySpec::weak(r);
}

std::size_t block_length(Family f, Radius r) {
  switch (f) {
    case Family::kWeak:
      return 2 * std::size_t{r} + 2;
    case Family::kLight:
      return 3 * std::size_t{r} + 2;
    case Family::kTwoRadii:
      return 3 * std::size_t{r} - two_radii_slack(r) + 2;
  }
  return 0;
}

Decomposition decompose(Family f, std::size_t n, Radius r) {
  Decomposition d;
  d.n = n;
  d.r = r;
  d.family = f;
  d.block = block_length(f, r);
  d.quotient = n / d.block;
  d.remainder = n % d.block;
  return d;
}

bool is_small_case(Family f, std::size_t n, Radius r) {
  if (n < 3) return false;
  switch (f) {
    case Family::kWeak:
      return n <= 2 * std::size_t{r} + 1;
    case Family::kLight:
      return n <= 3 * std::size_t{r} + 1;
    case Family::kTwoRadii:
      return false;
  }
  return false;
}

bool in_regime(Family f, std::size_t n, Radius r) {
  if (n < 3) return false;
  return is_small_case(f, n, r) || n >= block_length(f, r);
}

std::size_t formula_size(Family f, std::size_t n, Radius r) {
  require_cycle(n);
  if (!in_regime(f, n, r)) {
    throw UnsupportedRegime("no closed form for " + regime_text(f, n, r) + " (needs n >= " +
                            std::to_string(block_length(f, r)) + ")");
  }
  if (is_small_case(f, n, r)) return 2;
  const auto d = decompose(f, n, r);
  const std::size_t p = d.quotient;
  const std::size_t rem = d.remainder;
  if (rem == 0) return 2 * p;
  if (f == Family::kWeak) {
    if (rem == 1 || (rem == 2 && r <= 2)) return 2 * p + 1;
    return 2 * p + 2;
  }
  return rem <= std::size_t{r} + 1 ? 2 * p + 1 : 2 * p + 2;
}

std::size_t lower_bound(Family f, std::size_t n, Radius r) {
  const std::size_t b = block_length(f, r);
  if (n < b) {
    throw UnsupportedRegime("counting bound for " + regime_text(f, n, r) + " needs n >= " +
                            std::to_string(b));
  }
  return (2 * n + b - 1) / b;
}

Code construct_code(Family f, std::size_t n, Radius r, std::size_t offset) {
  const std::size_t expected = formula_size(f, n, r);
  std::set<std::size_t> members;
  switch (f) {
    case Family::kWeak:
      members = weak_code(n, r);
      break;
    case Family::kLight:
      members = light_code(n, r);
      break;
    case Family::kTwoRadii:
      members = two_radii_code(n, r);
      break;
  }
  Code code;
  for (std::size_t v : members) code.push_back(static_cast<Vertex>(v % n));
  std::sort(code.begin(), code.end());
  code.erase(std::unique(code.begin(), code.end()), code.end());
  code = rotate(code, n, offset);

  const auto report = check_code(build_cycle(n), code, family_spec(f, r));
  if (!report.valid) {
    throw ConstructionFailed("constructed " + regime_text(f, n, r) + " fails verification",
                             *report.witness);
  }
  if (code.size() != expected) {
    throw ConstructionFailed("constructed " + regime_text(f, n, r) + " has size " +
                                 std::to_string(code.size()) + ", expected " +
                                 std::to_string(expected),
                             std::nullopt);
  }
  return code;
}

std::size_t min_window_count(std::size_t n, const Code& code, std::size_t length) {
  std::vector<int> member(n, 0);
  for (Vertex v : code) member[v % n] = 1;
  length = std::min(length, n);
  std::size_t current = 0;
  for (std::size_t i = 0; i < length; ++i) current += static_cast<std::size_t>(member[i]);
  std::size_t best = current;
  for (std::size_t start = 1; start < n; ++start) {
    current -= static_cast<std::size_t>(member[start - 1]);
    current += static_cast<std::size_t>(member[(start + length - 1) % n]);
    best = std::min(best, current);
  }
  return best;
}

Code rotate(const Code& code, std::size_t n, std::size_t offset) {
  Code out;
  out.reserve(code.size());
  for (Vertex v : code) out.push_back(static_cast<Vertex>((v + offset) % n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace idcode::cycle
