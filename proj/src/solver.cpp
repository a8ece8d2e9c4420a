#include "idcode/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace idcode {

namespace {

using Mask = std::uint64_t;

// A set that must contain at least `need` code vertices.
struct Constraint {
  Mask members;
  int need;
};

// Word-sized re-implementation of the family check. It deliberately shares
// nothing with check_code beyond the distance matrix, so the two can be
// cross-checked.
class SubsetChecker {
 public:
  SubsetChecker(const DistanceMatrix& dm, const FamilySpec& spec)
      : n_(dm.order()), budget_(spec.budget()) {
    const RadiusSet radii = spec.identification_radii();
    balls_.resize(radii.size(), std::vector<Mask>(n_, 0));
    for (std::size_t t = 0; t < radii.size(); ++t) {
      for (Vertex x = 0; x < n_; ++x) balls_[t][x] = ball_mask(dm, x, radii[t]);
    }
    const RadiusSet dom = spec.domination_radii();
    dominated_by_.assign(n_, 0);
    if (!dom.empty()) {
      for (Vertex x = 0; x < n_; ++x) dominated_by_[x] = ball_mask(dm, x, dom.back());
    }
  }

  const std::vector<Mask>& domination_sets() const { return dominated_by_; }

  bool valid(Mask code) const {
    for (Vertex x = 0; x < n_; ++x) {
      if ((dominated_by_[x] & code) == 0) return false;
    }
    std::vector<Mask> distinct;
    for (Vertex x = 0; x < n_; ++x) {
      distinct.clear();
      for (Vertex y = 0; y < n_; ++y) {
        if (y == x) continue;
        Mask m = 0;
        for (std::size_t t = 0; t < balls_.size(); ++t) {
          if (((balls_[t][x] ^ balls_[t][y]) & code) != 0) m |= Mask{1} << t;
        }
        if (m == 0) return false;
        if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
      }
      if (!hittable(distinct, 0, budget_)) return false;
    }
    return true;
  }

 private:
  static Mask ball_mask(const DistanceMatrix& dm, Vertex x, Radius radius) {
    Mask m = 0;
    for (Vertex y = 0; y < dm.order(); ++y) {
      if (dm.at(x, y) != DistanceMatrix::kInfinite && dm.at(x, y) <= radius) m |= Mask{1} << y;
    }
    return m;
  }

  // Can at most `left` radius indices, together with `chosen`, meet every set?
  static bool hittable(const std::vector<Mask>& sets, Mask chosen, unsigned left) {
    for (Mask s : sets) {
      if ((s & chosen) != 0) continue;
      if (left == 0) return false;
      for (Mask bits = s; bits != 0; bits &= bits - 1) {
        if (hittable(sets, chosen | (bits & -bits), left - 1)) return true;
      }
      return false;
    }
    return true;
  }

  std::size_t n_;
  unsigned budget_;
  std::vector<std::vector<Mask>> balls_;
  std::vector<Mask> dominated_by_;
};

struct SearchShared {
  std::size_t n = 0;
  const SubsetChecker* checker = nullptr;
  std::vector<Constraint> constraints;
  std::uint64_t budget = 0;
  bool enumerate_all = false;
  std::atomic<std::uint64_t> examined{0};
  std::atomic<std::uint64_t> pruned{0};
  std::atomic<bool> over_budget{false};
  // Smallest task index that produced a solution so far.
  std::atomic<std::size_t> best_task{~std::size_t{0}};
};

class Search {
 public:
  explicit Search(SearchShared& shared) : s_(shared) {}

  // Subsets of size k extending `prefix` (whose largest element is `last`),
  // in lexicographic order.
  void run(std::size_t task, Mask prefix, std::size_t last, std::size_t k) {
    const auto picked = static_cast<std::size_t>(std::popcount(prefix));
    if (!feasible(prefix, last + 1, k - picked)) {
      s_.pruned.fetch_add(1, std::memory_order_relaxed);
      return;
    }
    descend(task, prefix, last + 1, k - picked);
  }

  std::vector<Mask> found;

 private:
  bool stop(std::size_t task) const {
    if (s_.over_budget.load(std::memory_order_relaxed)) return true;
    if (s_.enumerate_all) return false;
    return !found.empty() || s_.best_task.load(std::memory_order_relaxed) < task;
  }

  // Every constraint can still be met given `chosen`, indices >= next still
  // open, and `left` picks remaining.
  bool feasible(Mask chosen, std::size_t next, std::size_t left) const {
    const Mask open = next >= 64 ? 0 : (~Mask{0} << next) & full_mask();
    for (const Constraint& c : s_.constraints) {
      const int have = std::popcount(c.members & chosen);
      if (have >= c.need) continue;
      const auto deficit = static_cast<std::size_t>(c.need - have);
      const auto available = static_cast<std::size_t>(std::popcount(c.members & open));
      if (deficit > std::min(available, left)) return false;
    }
    return true;
  }

  Mask full_mask() const { return s_.n == 64 ? ~Mask{0} : (Mask{1} << s_.n) - 1; }

  void descend(std::size_t task, Mask chosen, std::size_t next, std::size_t left) {
    if (stop(task)) return;
    if (left == 0) {
      if (s_.examined.fetch_add(1, std::memory_order_relaxed) >= s_.budget) {
        s_.over_budget.store(true);
        return;
      }
      if (s_.checker->valid(chosen)) {
        found.push_back(chosen);
        if (!s_.enumerate_all) {
          std::size_t cur = s_.best_task.load();
          while (task < cur && !s_.best_task.compare_exchange_weak(cur, task)) {
          }
        }
      }
      return;
    }
    for (std::size_t j = next; j + left <= s_.n; ++j) {
      const Mask with = chosen | (Mask{1} << j);
      if (!feasible(with, j + 1, left - 1)) {
        s_.pruned.fetch_add(1, std::memory_order_relaxed);
        continue;
      }
      descend(task, with, j + 1, left - 1);
      if (stop(task)) return;
    }
  }

  SearchShared& s_;
};

Code to_code(Mask m) {
  Code c;
  for (; m != 0; m &= m - 1) c.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return c;
}

// All subsets of size k satisfying the checker. Work is split by the two
// smallest members so that the heavy low-index prefixes spread across workers.
// Returns them in lexicographic order (only the first one unless
// enumerate_all).
std::vector<Mask> search_cardinality(SearchShared& shared, std::size_t k, unsigned workers) {
  struct Task {
    Mask prefix;
    std::size_t last;
  };
  std::vector<Task> tasks;
  for (std::size_t a = 0; a + k <= shared.n; ++a) {
    if (k == 1) {
      tasks.push_back({Mask{1} << a, a});
      continue;
    }
    for (std::size_t b = a + 1; b + k - 1 <= shared.n; ++b) {
      tasks.push_back({(Mask{1} << a) | (Mask{1} << b), b});
    }
  }
  std::vector<std::vector<Mask>> per_task(tasks.size());
  std::atomic<std::size_t> next_task{0};
  auto work = [&] {
    for (std::size_t t; (t = next_task.fetch_add(1)) < tasks.size();) {
      Search search(shared);
      search.run(t, tasks[t].prefix, tasks[t].last, k);
      per_task[t] = std::move(search.found);
    }
  };
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  std::vector<Mask> out;
  for (auto& f : per_task) {
    out.insert(out.end(), f.begin(), f.end());
    if (!shared.enumerate_all && !out.empty()) break;
  }
  return out;
}

bool is_interval_from_zero(const RadiusSet& radii) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] != i) return false;
  }
  return !radii.empty();
}

}  // namespace

std::optional<cycle::Family> cycle_family_of(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kWeak:
      return cycle::Family::kWeak;
    case FamilyKind::kLight:
      return cycle::Family::kLight;
    case FamilyKind::kIdentifying:
      return std::nullopt;
    case FamilyKind::kGeneral:
      break;
  }
  if (!is_interval_from_zero(spec.radii)) return std::nullopt;
  const Radius r = spec.radii.back();
  if (spec.p == 1) return cycle::Family::kWeak;
  if (spec.p >= r + 1 || spec.p >= 3) return cycle::Family::kLight;
  return cycle::Family::kTwoRadii;
}

SolveResult min_code(const Graph& g, const FamilySpec& spec, const SolveOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = g.order();
  if (n > kSolverMaxOrder) {
    throw ResourceError("exhaustive search supports at most " + std::to_string(kSolverMaxOrder) +
                        " vertices, graph has " + std::to_string(n));
  }
  if (opts.max_size && *opts.max_size > n) {
    throw std::invalid_argument("max_size exceeds the number of vertices");
  }
  const DistanceMatrix dm(g);
  const SubsetChecker checker(dm, spec);

  SearchShared shared;
  shared.n = n;
  shared.checker = &checker;
  shared.budget = opts.subset_budget;
  shared.enumerate_all = opts.enumerate_all;
  for (Mask m : checker.domination_sets()) shared.constraints.push_back({m, 1});

  std::size_t start = 1;
  const auto family = cycle_family_of(spec);
  const std::size_t cycle_n = cycle_order(g);
  if (opts.use_cycle_pruning && family && cycle_n == n) {
    const Radius r = spec.identification_radii().back();
    const std::size_t block = cycle::block_length(*family, r);
    if (n >= block) {
      start = cycle::lower_bound(*family, n, r);
      for (std::size_t i = 0; i < n; ++i) {
        Mask window = 0;
        for (std::size_t j = 0; j < block; ++j) window |= Mask{1} << ((i + j) % n);
        shared.constraints.push_back({window, 2});
      }
    }
  }

  SolveResult result;
  // Supersets of a valid code are valid, so the whole vertex set decides
  // feasibility.
  const Mask everything = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  shared.examined.fetch_add(1);
  if (!checker.valid(everything)) {
    result.status = SolveStatus::kInfeasible;
  } else {
    const std::size_t cap = opts.max_size.value_or(n);
    result.status = SolveStatus::kAboveCap;
    for (std::size_t k = start; k <= cap; ++k) {
      shared.best_task.store(~std::size_t{0});
      auto found = search_cardinality(shared, k, opts.parallelism);
      if (shared.over_budget.load()) {
        throw ResourceError("subset budget of " + std::to_string(opts.subset_budget) +
                            " exhausted at cardinality " + std::to_string(k));
      }
      if (!found.empty()) {
        result.status = SolveStatus::kOptimal;
        result.optimum = k;
        result.witness_code = to_code(found.front());
        if (opts.enumerate_all) {
          for (Mask m : found) result.all_optima.push_back(to_code(m));
        }
        break;
      }
    }
  }
  result.stats.examined = shared.examined.load();
  result.stats.pruned = shared.pruned.load();
  result.stats.wall = std::chrono::steady_clock::now() - started;
  return result;
}

std::vector<TheoremRow> verify_theorem_table(cycle::Family family, Radius r_lo, Radius r_hi,
                                             std::size_t n_lo, std::size_t n_hi, bool run_oracle,
                                             const SolveOptions& opts) {
  std::vector<TheoremRow> rows;
  for (Radius r = r_lo; r <= r_hi; ++r) {
    for (std::size_t n = std::max<std::size_t>(n_lo, 3); n <= n_hi; ++n) {
      TheoremRow row;
      row.n = n;
      row.r = r;
      if (cycle::in_regime(family, n, r)) {
        row.formula = cycle::formula_size(family, n, r);
        try {
          row.constructed = cycle::construct_code(family, n, r).size();
        } catch (const cycle::ConstructionFailed&) {
          row.constructed.reset();
        }
      }
      if (n >= cycle::block_length(family, r)) row.lower_bound = cycle::lower_bound(family, n, r);
      if (run_oracle) {
        const auto solved = min_code(build_cycle(n), cycle::family_spec(family, r), opts);
        row.oracle = solved.optimum;
      }
      if (row.formula) {
        row.agree = row.constructed == row.formula && (!run_oracle || row.oracle == row.formula);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace idcode
