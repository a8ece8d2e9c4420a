#pragma once

// Executable definitions of identifying, weak, light and (p, R)-identifying
// codes. A code is checked against a FamilySpec and the result carries either
// a re-checkable radius certificate or a witness for the first failure.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idcode/graph.hpp"

namespace idcode {

using Radius = unsigned;
using RadiusSet = std::vector<Radius>;  // sorted, no duplicates

enum class FamilyKind { kIdentifying, kWeak, kLight, kGeneral };

struct FamilySpec {
  FamilyKind kind = FamilyKind::kWeak;
  Radius r = 0;
  unsigned p = 1;
  RadiusSet radii;

  static FamilySpec identifying(Radius r);
  static FamilySpec weak(Radius r);
  static FamilySpec light(Radius r);
  // Throws std::invalid_argument on p == 0 or an empty radius set.
  static FamilySpec general(unsigned p, RadiusSet radii);

  // Radii a vertex may draw its separating set from.
  RadiusSet identification_radii() const;
  // Maximum number of radii per vertex.
  unsigned budget() const;
  // Domination holds when every vertex meets the code at some radius in this
  // set; since balls are nested only its maximum matters.
  RadiusSet domination_radii() const;

  std::string describe() const;
  bool operator==(const FamilySpec&) const = default;
};

std::string to_string(FamilyKind kind);

enum class WitnessKind { kNotDominated, kPairNotSeparated, kVertexNotIdentifiable };

std::string to_string(WitnessKind kind);

struct Witness {
  WitnessKind kind = WitnessKind::kNotDominated;
  // NOT_DOMINATED: {x}. PAIR_NOT_SEPARATED: {x, y}. VERTEX_NOT_IDENTIFIABLE: {x}.
  std::vector<Vertex> vertices;
  RadiusSet radii_tried;
  // VERTEX_NOT_IDENTIFIABLE only: one representative opponent per minimal
  // feasible-radius set, with the radii that separate it from x.
  std::vector<std::pair<Vertex, RadiusSet>> blocking;
};

// Symmetric table of one radius per unordered vertex pair.
class PairRadii {
 public:
  PairRadii() = default;
  explicit PairRadii(std::size_t n) : n_(n), radius_(n * (n - 1) / 2, 0) {}

  std::size_t order() const noexcept { return n_; }
  Radius at(Vertex x, Vertex y) const { return radius_[index(x, y)]; }
  void set(Vertex x, Vertex y, Radius r) { radius_[index(x, y)] = static_cast<std::uint16_t>(r); }

 private:
  std::size_t index(Vertex x, Vertex y) const {
    if (x > y) std::swap(x, y);
    return static_cast<std::size_t>(y) * (y - 1) / 2 + x;
  }
  std::size_t n_ = 0;
  std::vector<std::uint16_t> radius_;
};

struct RadiusCertificate {
  std::vector<RadiusSet> per_vertex;
  // LIGHT only: smallest separating radius of every pair.
  std::optional<PairRadii> per_pair;
};

struct VerificationReport {
  bool valid = false;
  FamilySpec family;
  std::optional<RadiusCertificate> certificate;
  std::optional<Witness> witness;
};

// True iff B_radius(x) ∩ C != B_radius(y) ∩ C.
bool separates(const DistanceMatrix& dm, std::span<const Vertex> code, Vertex x, Vertex y,
               Radius radius);

// Valid iff every vertex meets the code within some radius of the set. The
// returned report has no certificate; the witness names the smallest
// undominated vertex.
VerificationReport is_dominating(const DistanceMatrix& dm, std::span<const Vertex> code,
                                 const RadiusSet& radii);

VerificationReport check_code(const Graph& g, std::span<const Vertex> code, const FamilySpec& spec);
VerificationReport check_code(const DistanceMatrix& dm, std::span<const Vertex> code,
                              const FamilySpec& spec);

// Smallest R_x ⊆ [0, r] such that every y != x is separated from x at some
// radius of R_x; ties go to the lexicographically smallest set. nullopt when
// some y cannot be separated from x at any radius <= r.
std::optional<RadiusSet> min_radius_set(const DistanceMatrix& dm, std::span<const Vertex> code,
                                        Radius r, Vertex x);
std::optional<RadiusSet> min_radius_set(const Graph& g, std::span<const Vertex> code, Radius r,
                                        Vertex x);

// Replays every radius recorded in a certificate through `separates`.
bool certificate_replays(const DistanceMatrix& dm, std::span<const Vertex> code,
                         const RadiusCertificate& cert);

}  // namespace idcode
