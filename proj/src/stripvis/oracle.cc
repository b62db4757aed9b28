// Copyright 2026 The stripvis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stripvis/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "stripvis/error.h"
#include "stripvis/visibility.h"

namespace stripvis {

double LpReference(std::span<const double> dys, double budget) {
  if (dys.empty()) throw InputError("water filling needs at least two squares");
  if (!std::isfinite(budget) || budget < 0.0) {
    throw InputError("horizontal budget must be a nonnegative number");
  }
  for (double dy : dys) {
    if (!std::isfinite(dy) || dy < 0.0) {
      throw InputError("vertical gaps must be nonnegative");
    }
  }
  const double min_dy = *std::min_element(dys.begin(), dys.end());
  const double max_dy = *std::max_element(dys.begin(), dys.end());
  auto feasible = [&](double g) {
    double need = 0.0;
    for (double dy : dys) need += std::max(0.0, g - dy);
    return need <= budget;
  };
  double lo = min_dy;
  double hi = min_dy + budget + max_dy;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Family ParseFamily(std::string_view name) {
  if (name == "any") return Family::kAny;
  if (name == "stack-by-y") return Family::kStackByY;
  if (name == "stack-by-inverse-y") return Family::kStackByInverseY;
  if (name == "staircase") return Family::kStaircase;
  throw InputError("unknown layout family '" + std::string(name) +
                   "' (expected any, stack-by-y, stack-by-inverse-y or staircase)");
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kAny: return "any";
    case Family::kStackByY: return "stack-by-y";
    case Family::kStackByInverseY: return "stack-by-inverse-y";
    case Family::kStaircase: return "staircase";
  }
  return "any";
}

namespace {

constexpr double kDisjointSlack = 1e-9;

struct Candidate {
  int slot;
  double gap;
};

// Order in which squares are placed front to back.
enum class Sequence {
  kFree,
  kDescendingY,  // top square is the highest one
  kAscendingY,   // top square is the lowest one
};

// Front-to-back branch and bound. For a staircase run, each newly placed
// square must not be to the right of the previous one (descending sequence)
// or not to the left of it (ascending sequence): x non-decreasing in y.
class GridSearcher {
 public:
  GridSearcher(const Instance& instance, int grid_steps)
      : instance_(instance), n_(instance.size()), steps_(grid_steps) {
    grid_.resize(steps_);
    for (int j = 0; j < steps_; ++j) {
      grid_[j] = instance.min_x() + instance.budget() * j / (steps_ - 1);
    }
    grid_.back() = instance.max_x();
    domains_.assign(n_ + 1, std::vector<std::vector<Candidate>>(n_));
    placed_.reserve(n_);
    front_.reserve(n_);
    used_.assign(n_, false);
  }

  void Run(Sequence sequence, bool monotone) {
    sequence_ = sequence;
    monotone_ = monotone;
    for (int sq = 0; sq < n_; ++sq) {
      auto& dom = domains_[0][sq];
      dom.clear();
      for (int j = 0; j < steps_; ++j) dom.push_back({j, 2.0});
    }
    Search(0, std::numeric_limits<double>::infinity());
  }

  double best() const { return best_; }
  const Layout& best_layout() const { return best_layout_; }
  std::int64_t leaves() const { return leaves_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  struct Placement {
    int square;
    int slot;
  };

  // `current` is the smallest gap among the placed squares; the incumbent
  // may have risen above it since they were placed.
  void Search(int depth, double current) {
    ++nodes_;
    if (!(current > best_)) return;
    if (depth == n_) {
      ++leaves_;
      if (current > best_) Record(current);
      return;
    }
    for (int sq : NextSquares(depth)) {
      for (const Candidate& c : domains_[depth][sq]) {
        if (!(c.gap > best_)) continue;
        if (!(current > best_)) return;
        if (!SlotAllowed(depth, c.slot)) continue;
        if (Redundant(depth, sq, c.slot)) continue;
        Place(sq, c.slot);
        if (NarrowDomains(depth + 1)) Search(depth + 1, std::min(current, c.gap));
        Unplace();
      }
    }
  }

  std::vector<int> NextSquares(int depth) const {
    switch (sequence_) {
      case Sequence::kDescendingY: return {n_ - 1 - depth};
      case Sequence::kAscendingY: return {depth};
      case Sequence::kFree: break;
    }
    std::vector<int> out;
    for (int sq = 0; sq < n_; ++sq) {
      if (!used_[sq]) out.push_back(sq);
    }
    return out;
  }

  bool SlotAllowed(int depth, int slot) const {
    if (depth == 0) {
      // Mirror images are equivalent; staircase runs already fix the facing.
      return monotone_ || 2 * slot <= steps_ - 1;
    }
    if (!monotone_) return true;
    const int prev = placed_.back().slot;
    return sequence_ == Sequence::kDescendingY ? slot <= prev : slot >= prev;
  }

  // Swapping two consecutive disjoint squares changes nothing; only the order
  // with the smaller index in front is explored.
  bool Redundant(int depth, int sq, int slot) const {
    if (depth == 0 || sequence_ != Sequence::kFree) return false;
    const Placement& prev = placed_.back();
    if (sq > prev.square) return false;
    const double dx = std::abs(grid_[slot] - grid_[prev.slot]);
    const double dy = std::abs(instance_.y(sq) - instance_.y(prev.square));
    return dx > 1.0 + kDisjointSlack || dy > 1.0 + kDisjointSlack;
  }

  // Updates the candidate gaps of every unplaced square for the square just
  // placed in front, dropping those not above the incumbent. False if some
  // square is left without candidates.
  bool NarrowDomains(int depth) {
    const Point added = front_.back();
    for (int sq = 0; sq < n_; ++sq) {
      if (used_[sq]) continue;
      auto& next = domains_[depth][sq];
      next.clear();
      const double y = instance_.y(sq);
      const bool far_y = std::abs(y - added.y) > 1.0 + kDisjointSlack;
      bool changed = false;
      for (const Candidate& c : domains_[depth - 1][sq]) {
        if (!(c.gap > best_)) continue;
        const double x = grid_[c.slot];
        if (far_y || std::abs(x - added.x) > 1.0 + kDisjointSlack) {
          next.push_back(c);
          continue;
        }
        const double g = VisibilityAgainst({x, y}, front_, scratch_).gap();
        if (g > best_) next.push_back({c.slot, g});
        changed |= g != c.gap;
      }
      if (next.empty()) return false;
      if (changed) {
        std::sort(next.begin(), next.end(), [](const Candidate& a, const Candidate& b) {
          return a.gap > b.gap || (a.gap == b.gap && a.slot < b.slot);
        });
      }
    }
    return true;
  }

  void Place(int sq, int slot) {
    placed_.push_back({sq, slot});
    front_.push_back({grid_[slot], instance_.y(sq)});
    used_[sq] = true;
  }

  void Unplace() {
    used_[placed_.back().square] = false;
    placed_.pop_back();
    front_.pop_back();
  }

  void Record(double value) {
    best_ = value;
    best_layout_.xs.assign(n_, 0.0);
    best_layout_.zorder.clear();
    for (auto it = placed_.rbegin(); it != placed_.rend(); ++it) {
      best_layout_.xs[it->square] = grid_[it->slot];
      best_layout_.zorder.push_back(it->square);
    }
  }

  const Instance& instance_;
  const int n_;
  const int steps_;
  std::vector<double> grid_;
  // domains_[depth][square]: candidates with gaps against the first `depth`
  // placed squares, best first.
  std::vector<std::vector<std::vector<Candidate>>> domains_;
  std::vector<Placement> placed_;
  std::vector<Point> front_;
  std::vector<bool> used_;
  VisibilityScratch scratch_;
  Sequence sequence_ = Sequence::kFree;
  bool monotone_ = false;

  double best_ = -std::numeric_limits<double>::infinity();
  Layout best_layout_;
  std::int64_t leaves_ = 0;
  std::int64_t nodes_ = 0;
};

double UniformUnit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

GridSearchResult GridSearch(const Instance& instance, int grid_steps,
                            Family family, int max_n) {
  if (grid_steps < 2) throw ParameterError("grid search needs at least 2 grid steps");
  if (instance.size() > max_n) {
    std::ostringstream os;
    os << "grid search refuses " << instance.size() << " squares (limit "
       << max_n << "); the search is exponential in n, raise max_n explicitly "
       << "for instances up to about 9 squares";
    throw DomainError(os.str());
  }

  GridSearcher searcher(instance, grid_steps);
  switch (family) {
    case Family::kAny:
      searcher.Run(Sequence::kFree, false);
      break;
    case Family::kStackByY:
      searcher.Run(Sequence::kDescendingY, false);
      break;
    case Family::kStackByInverseY:
      searcher.Run(Sequence::kAscendingY, false);
      break;
    case Family::kStaircase:
      searcher.Run(Sequence::kDescendingY, true);
      searcher.Run(Sequence::kAscendingY, true);
      break;
  }

  GridSearchResult result;
  result.best_layout = searcher.best_layout();
  result.best_min_gap = searcher.best();
  result.grid_steps = grid_steps;
  result.orders_examined = searcher.leaves();
  result.nodes_visited = searcher.nodes();
  result.resolution = instance.budget() / (grid_steps - 1);
  return result;
}

std::vector<SampleEstimate> SampleVisiblePerimeter(const Instance& instance,
                                                   const Layout& layout,
                                                   int samples_per_side,
                                                   std::uint64_t seed) {
  ValidateLayout(instance, layout);
  if (samples_per_side < 1) throw ParameterError("need at least one sample per side");
  const int n = instance.size();
  const std::vector<int> rank = layout.Ranks();
  std::mt19937_64 gen(seed);

  auto covered = [&](int self, double px, double py) {
    for (int t = 0; t < n; ++t) {
      if (rank[t] <= rank[self]) continue;
      const double cx = layout.xs[t], cy = instance.y(t);
      if (cx - kHalf <= px && px <= cx + kHalf && cy - kHalf <= py &&
          py <= cy + kHalf) {
        return true;
      }
    }
    return false;
  };

  std::vector<SampleEstimate> out(n);
  const double count = static_cast<double>(samples_per_side);
  for (int i = 0; i < n; ++i) {
    const double xl = layout.xs[i] - kHalf, xr = layout.xs[i] + kHalf;
    const double yb = instance.y(i) - kHalf, yt = instance.y(i) + kHalf;
    double variance = 0.0;
    for (int side = 0; side < 4; ++side) {
      int visible = 0;
      for (int s = 0; s < samples_per_side; ++s) {
        const double u = UniformUnit(gen);
        double px, py;
        switch (side) {
          case 0: px = xl; py = yb + u; break;
          case 1: px = xr; py = yb + u; break;
          case 2: px = xl + u; py = yt; break;
          default: px = xl + u; py = yb; break;
        }
        if (!covered(i, px, py)) ++visible;
      }
      const double p = visible / count;
      out[i].sides[side] = p;
      variance += p * (1.0 - p) / count;
    }
    out[i].perimeter = out[i].sides[0] + out[i].sides[1] + out[i].sides[2] +
                       out[i].sides[3];
    out[i].stderr_estimate = std::sqrt(variance);
  }
  return out;
}

}  // namespace stripvis
