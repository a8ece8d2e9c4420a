#include "idcode/semantics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "idcode/kernels.hpp"

namespace idcode {

namespace {

RadiusSet interval(Radius lo, Radius hi) {
  RadiusSet out;
  for (Radius r = lo; r <= hi; ++r) out.push_back(r);
  return out;
}

constexpr std::size_t kMaxRadii = 64;

// Per-radius equivalence classes of vertices under x -> B_radius(x) ∩ C.
// Two vertices are separated at radius radii[t] iff their ids differ in
// ids[t].
struct SignatureClasses {
  std::size_t n = 0;
  RadiusSet radii;
  std::vector<std::vector<std::uint32_t>> ids;
  std::vector<std::vector<std::uint32_t>> class_size;
  // Class 0 at radii[t] is the empty signature when some ball misses C.
  std::vector<bool> has_empty_class;

  bool empty_at(std::size_t t, Vertex x) const { return has_empty_class[t] && ids[t][x] == 0; }
};

SignatureClasses classify(const DistanceMatrix& dm, const VertexSet& code, const RadiusSet& radii) {
  const auto& k = kernels::active();
  const std::size_t n = dm.order();
  const std::size_t words = code.words().size();
  SignatureClasses out;
  out.n = n;
  out.radii = radii;
  std::vector<std::uint64_t> ball(words);
  std::vector<std::uint64_t> sig(n * words);
  std::vector<std::uint32_t> order(n);
  for (Radius radius : radii) {
    for (Vertex x = 0; x < n; ++x) {
      dm.ball_into(x, radius, ball);
      k.and_words(ball.data(), code.words().data(), sig.data() + x * words, words);
    }
    auto row = [&](std::uint32_t v) { return sig.data() + v * words; };
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::lexicographical_compare(row(a), row(a) + words, row(b), row(b) + words);
    });
    std::vector<std::uint32_t> ids(n);
    std::vector<std::uint32_t> sizes;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || !std::equal(row(order[i]), row(order[i]) + words, row(order[i - 1]))) {
        sizes.push_back(0);
      }
      ids[order[i]] = static_cast<std::uint32_t>(sizes.size() - 1);
      ++sizes.back();
    }
    out.ids.push_back(std::move(ids));
    out.class_size.push_back(std::move(sizes));
    out.has_empty_class.push_back(
        std::all_of(row(order[0]), row(order[0]) + words, [](std::uint64_t w) { return w == 0; }));
  }
  return out;
}

// masks[y] bit t set iff x and y are separated at radii[t]. masks[x] is 0.
void separation_masks(const SignatureClasses& sc, Vertex x, std::vector<std::uint64_t>& masks) {
  const auto& k = kernels::active();
  masks.assign(sc.n, 0);
  for (std::size_t t = 0; t < sc.radii.size(); ++t) {
    k.mark_differences(sc.ids[t].data(), sc.n, sc.ids[t][x], std::uint64_t{1} << t, masks.data());
  }
}

// Keeps one representative per inclusion-minimal mask, ordered by first
// occurrence. Any set of radius indices hitting these hits every mask.
std::vector<std::pair<Vertex, std::uint64_t>> minimal_masks(std::span<const std::uint64_t> masks,
                                                            Vertex skip) {
  std::vector<std::pair<Vertex, std::uint64_t>> distinct;
  for (Vertex y = 0; y < masks.size(); ++y) {
    if (y == skip) continue;
    const std::uint64_t m = masks[y];
    if (std::none_of(distinct.begin(), distinct.end(), [&](const auto& d) { return d.second == m; })) {
      distinct.emplace_back(y, m);
    }
  }
  std::vector<std::pair<Vertex, std::uint64_t>> minimal;
  for (const auto& [y, m] : distinct) {
    const bool dominated = std::any_of(distinct.begin(), distinct.end(), [&](const auto& d) {
      return d.second != m && (d.second & m) == d.second;
    });
    if (!dominated) minimal.emplace_back(y, m);
  }
  return minimal;
}

// Lexicographically smallest minimum-cardinality set of indices in
// [0, universe) meeting every mask, with at most `budget` elements.
std::optional<std::uint64_t> min_hitting_set(std::span<const std::pair<Vertex, std::uint64_t>> masks,
                                             std::size_t universe, std::size_t budget) {
  if (masks.empty()) return std::uint64_t{0};
  const std::size_t limit = std::min(budget, universe);
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= limit; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      std::uint64_t chosen = 0;
      for (std::size_t i : pick) chosen |= std::uint64_t{1} << i;
      if (std::all_of(masks.begin(), masks.end(), [&](const auto& m) { return (m.second & chosen) != 0; })) {
        return chosen;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == universe - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

RadiusSet radii_of(std::uint64_t chosen, const RadiusSet& radii) {
  RadiusSet out;
  for (std::size_t t = 0; t < radii.size(); ++t) {
    if ((chosen >> t) & 1U) out.push_back(radii[t]);
  }
  return out;
}

RadiusSet normalized(RadiusSet radii) {
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

std::optional<Witness> first_undominated(const DistanceMatrix& dm, const VertexSet& code,
                                         const RadiusSet& radii) {
  const std::size_t n = dm.order();
  if (radii.empty()) return Witness{WitnessKind::kNotDominated, {0}, {}, {}};
  const Radius widest = radii.back();
  const auto& k = kernels::active();
  std::vector<std::uint64_t> ball(code.words().size());
  for (Vertex x = 0; x < n; ++x) {
    dm.ball_into(x, widest, ball);
    if (!k.intersects(ball.data(), code.words().data(), ball.size())) {
      return Witness{WitnessKind::kNotDominated, {x}, radii, {}};
    }
  }
  return std::nullopt;
}

}  // namespace

FamilySpec FamilySpec::identifying(Radius r) { return {FamilyKind::kIdentifying, r, 1, {}}; }
FamilySpec FamilySpec::weak(Radius r) { return {FamilyKind::kWeak, r, 1, {}}; }
FamilySpec FamilySpec::light(Radius r) { return {FamilyKind::kLight, r, r + 1, {}}; }

FamilySpec FamilySpec::general(unsigned p, RadiusSet radii) {
  if (p == 0) throw std::invalid_argument("radius budget p must be at least 1");
  radii = normalized(std::move(radii));
  if (radii.empty()) throw std::invalid_argument("radius set must be nonempty");
  if (radii.size() > kMaxRadii) throw std::invalid_argument("at most 64 distinct radii supported");
  const Radius top = radii.back();
  return {FamilyKind::kGeneral, top, p, std::move(radii)};
}

RadiusSet FamilySpec::identification_radii() const {
  switch (kind) {
    case FamilyKind::kIdentifying:
      return {r};
    case FamilyKind::kWeak:
    case FamilyKind::kLight:
      return interval(0, r);
    case FamilyKind::kGeneral:
      return radii;
  }
  return {};
}

unsigned FamilySpec::budget() const {
  switch (kind) {
    case FamilyKind::kIdentifying:
    case FamilyKind::kWeak:
      return 1;
    case FamilyKind::kLight:
      return r + 1;
    case FamilyKind::kGeneral:
      return p;
  }
  return 1;
}

RadiusSet FamilySpec::domination_radii() const {
  return kind == FamilyKind::kGeneral ? radii : interval(0, r);
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kIdentifying:
      return "identifying";
    case FamilyKind::kWeak:
      return "weak";
    case FamilyKind::kLight:
      return "light";
    case FamilyKind::kGeneral:
      return "general";
  }
  return "?";
}

std::string FamilySpec::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  if (kind == FamilyKind::kGeneral) {
    out << "(p=" << p << ", radii={";
    for (std::size_t i = 0; i < radii.size(); ++i) out << (i ? "," : "") << radii[i];
    out << "})";
  } else {
    out << "(r=" << r << ")";
  }
  return out.str();
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kNotDominated:
      return "NOT_DOMINATED";
    case WitnessKind::kPairNotSeparated:
      return "PAIR_NOT_SEPARATED";
    case WitnessKind::kVertexNotIdentifiable:
      return "VERTEX_NOT_IDENTIFIABLE";
  }
  return "?";
}

bool separates(const DistanceMatrix& dm, std::span<const Vertex> code, Vertex x, Vertex y,
               Radius radius) {
  for (Vertex c : code) {
    const bool in_x = dm.at(x, c) <= radius;
    const bool in_y = dm.at(y, c) <= radius;
    if (in_x != in_y) return true;
  }
  return false;
}

VerificationReport is_dominating(const DistanceMatrix& dm, std::span<const Vertex> code,
                                 const RadiusSet& radii) {
  const VertexSet members = VertexSet::from_code(dm.order(), code);
  VerificationReport report;
  report.family = FamilySpec{FamilyKind::kGeneral, radii.empty() ? 0 : radii.back(), 1, radii};
  report.witness = first_undominated(dm, members, normalized(radii));
  report.valid = !report.witness.has_value();
  return report;
}

VerificationReport check_code(const Graph& g, std::span<const Vertex> code, const FamilySpec& spec) {
  return check_code(DistanceMatrix(g), code, spec);
}

VerificationReport check_code(const DistanceMatrix& dm, std::span<const Vertex> code,
                              const FamilySpec& spec) {
  const std::size_t n = dm.order();
  const VertexSet members = VertexSet::from_code(n, code);

  VerificationReport report;
  report.family = spec;
  if (auto w = first_undominated(dm, members, spec.domination_radii())) {
    report.witness = std::move(w);
    return report;
  }

  const RadiusSet radii = spec.identification_radii();
  if (radii.size() > kMaxRadii) throw std::invalid_argument("at most 64 distinct radii supported");
  const SignatureClasses sc = classify(dm, members, radii);
  const bool light = spec.kind == FamilyKind::kLight;

  RadiusCertificate cert;
  cert.per_vertex.resize(n);
  std::vector<std::uint64_t> masks;
  for (Vertex x = 0; x < n; ++x) {
    // Single-radius fast path: the smallest radius at which x's class is a
    // singleton is also the lexicographically smallest size-1 cover. Weak
    // certificates prefer a radius where x actually sees the code and fall
    // back to the empty signature only when nothing else works.
    if (!light && (n > 1 || spec.kind != FamilyKind::kGeneral)) {
      std::optional<Radius> unique_at;
      std::optional<Radius> unique_empty_at;
      for (std::size_t t = 0; t < radii.size() && !unique_at; ++t) {
        if (sc.class_size[t][sc.ids[t][x]] != 1) continue;
        if (spec.kind == FamilyKind::kWeak && sc.empty_at(t, x)) {
          if (!unique_empty_at) unique_empty_at = radii[t];
        } else {
          unique_at = radii[t];
        }
      }
      if (!unique_at) unique_at = unique_empty_at;
      if (unique_at) {
        cert.per_vertex[x] = {*unique_at};
        continue;
      }
    }

    separation_masks(sc, x, masks);
    for (Vertex y = 0; y < n; ++y) {
      if (y != x && masks[y] == 0) {
        report.witness = Witness{WitnessKind::kPairNotSeparated, {x, y}, radii, {}};
        return report;
      }
    }
    const auto minimal = minimal_masks(masks, x);
    const auto chosen = min_hitting_set(minimal, radii.size(), spec.budget());
    if (!chosen) {
      Witness w{WitnessKind::kVertexNotIdentifiable, {x}, radii, {}};
      for (const auto& [y, m] : minimal) w.blocking.emplace_back(y, radii_of(m, radii));
      report.witness = std::move(w);
      return report;
    }
    cert.per_vertex[x] = radii_of(*chosen, radii);
  }

  if (light) {
    PairRadii pairs(n);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        std::size_t t = 0;
        while (sc.ids[t][x] == sc.ids[t][y]) ++t;
        pairs.set(x, y, radii[t]);
      }
    }
    cert.per_pair = std::move(pairs);
  }

  report.valid = true;
  report.certificate = std::move(cert);
  return report;
}

std::optional<RadiusSet> min_radius_set(const DistanceMatrix& dm, std::span<const Vertex> code,
                                        Radius r, Vertex x) {
  if (x >= dm.order()) throw std::out_of_range("vertex out of range");
  const RadiusSet radii = interval(0, r);
  if (radii.size() > kMaxRadii) throw std::invalid_argument("at most 64 distinct radii supported");
  const SignatureClasses sc = classify(dm, VertexSet::from_code(dm.order(), code), radii);
  std::vector<std::uint64_t> masks;
  separation_masks(sc, x, masks);
  for (Vertex y = 0; y < dm.order(); ++y) {
    if (y != x && masks[y] == 0) return std::nullopt;
  }
  const auto chosen = min_hitting_set(minimal_masks(masks, x), radii.size(), radii.size());
  return radii_of(*chosen, radii);
}

std::optional<RadiusSet> min_radius_set(const Graph& g, std::span<const Vertex> code, Radius r,
                                        Vertex x) {
  return min_radius_set(DistanceMatrix(g), code, r, x);
}

bool certificate_replays(const DistanceMatrix& dm, std::span<const Vertex> code,
                         const RadiusCertificate& cert) {
  const std::size_t n = dm.order();
  if (cert.per_vertex.size() != n) return false;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (y == x) continue;
      const auto& rx = cert.per_vertex[x];
      if (std::none_of(rx.begin(), rx.end(), [&](Radius r) { return separates(dm, code, x, y, r); })) {
        return false;
      }
      if (cert.per_pair && y > x && !separates(dm, code, x, y, cert.per_pair->at(x, y))) return false;
    }
  }
  return true;
}

}  // namespace idcode
