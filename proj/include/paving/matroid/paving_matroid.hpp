#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "paving/matroid/point_set.hpp"

namespace paving {

class PavingMatroid;

/// Restriction of a paving matroid to a point subset. Rank is that of S in
/// the parent; hyperplanes are the parent's hyperplanes cut down to S, kept
/// when they still hold at least n points.
struct Submatroid {
  int parent_rank = 0;
  int rank = 0;
  PointSet points;
  std::vector<PointSet> hyperplanes;
  std::string parent_name;

  bool full_rank() const { return rank == parent_rank; }

  std::vector<PointSet> circuits_n() const {
    std::set<PointSet, decltype(&lex_less)> out(&lex_less);
    for (auto l : hyperplanes) for_each_subset(l, parent_rank, [&](PointSet c) { out.insert(c); });
    return {out.begin(), out.end()};
  }

  PavingMatroid matroid() const;
};

class PavingMatroid {
 public:
  /// Validates the hyperplane description (pairwise intersections at most
  /// n-2, hyperplanes of size at least n, points inside the ground set).
  static PavingMatroid validate(int rank, PointSet ground, std::vector<PointSet> hyperplanes, std::string name = {}) {
    if (rank < 2) throw ValidationError("rank must be at least 2");
    if (ground.size() < rank + 1)
      throw GroundSetTooSmall("ground set has " + std::to_string(ground.size()) + " points, rank " +
                              std::to_string(rank) + " needs at least " + std::to_string(rank + 1));
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
      const auto& l = hyperplanes[i];
      if (!l.is_subset_of(ground))
        throw UnknownPoint("hyperplane " + l.to_string() + " has points outside the ground set");
      if (l.size() < rank)
        throw HyperplaneTooSmall("hyperplane " + l.to_string() + " has fewer than " + std::to_string(rank) + " points");
    }
    for (std::size_t i = 0; i < hyperplanes.size(); ++i)
      for (std::size_t j = i + 1; j < hyperplanes.size(); ++j)
        if ((hyperplanes[i] & hyperplanes[j]).size() > rank - 2)
          throw IntersectionTooLarge(i, j,
                                     "hyperplanes " + hyperplanes[i].to_string() + " and " + hyperplanes[j].to_string() +
                                         " share more than " + std::to_string(rank - 2) + " points");
    PavingMatroid m;
    m.rank_ = rank;
    m.ground_ = ground;
    m.hyperplanes_ = std::move(hyperplanes);
    m.name_ = std::move(name);
    std::set<PointSet, decltype(&lex_less)> cs(&lex_less);
    for (auto l : m.hyperplanes_) for_each_subset(l, rank, [&](PointSet c) { cs.insert(c); });
    m.circuits_n_.assign(cs.begin(), cs.end());
    return m;
  }

  static PavingMatroid validate(int rank, int ground_size, std::vector<PointSet> hyperplanes, std::string name = {}) {
    if (ground_size < 0 || ground_size > PointSet::kMaxPoint) throw ValidationError("ground set size outside 0..64");
    return validate(rank, PointSet::range(1, ground_size), std::move(hyperplanes), std::move(name));
  }

  int rank() const { return rank_; }
  PointSet ground() const { return ground_; }
  int size() const { return ground_.size(); }
  const std::vector<PointSet>& hyperplanes() const { return hyperplanes_; }
  const std::string& name() const { return name_; }

  /// n-subsets of hyperplanes, sorted lexicographically.
  const std::vector<PointSet>& circuits_n() const { return circuits_n_; }

  /// (n+1)-subsets containing no n-circuit (brute force).
  std::vector<PointSet> circuits_n1() const {
    std::vector<PointSet> out;
    for_each_subset(ground_, rank_ + 1, [&](PointSet s) {
      for (auto l : hyperplanes_)
        if ((s & l).size() >= rank_) return;
      out.push_back(s);
    });
    return out;
  }

  bool in_hyperplane(PointSet s) const {
    for (auto l : hyperplanes_)
      if (s.is_subset_of(l)) return true;
    return false;
  }

  int rank_of(PointSet s) const {
    check(s);
    int k = s.size();
    if (k < rank_) return k;
    return in_hyperplane(s) ? rank_ - 1 : rank_;
  }

  PointSet closure(PointSet s) const {
    check(s);
    int r = rank_of(s);
    if (r <= rank_ - 2) return s;
    if (r == rank_) return ground_;
    for (auto l : hyperplanes_)
      if (s.is_subset_of(l)) return l;
    return s;
  }

  bool is_closed(PointSet s) const { return closure(s) == s; }

  int point_degree(int p) const {
    if (!ground_.contains(p)) throw UnknownPoint("point " + std::to_string(p) + " not in ground set");
    int d = 0;
    for (auto l : hyperplanes_) d += l.contains(p);
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int p : ground_) d = std::max(d, point_degree(p));
    return d;
  }

  Submatroid restrict_to(PointSet s) const {
    check(s);
    Submatroid sub;
    sub.parent_rank = rank_;
    sub.rank = rank_of(s);
    sub.points = s;
    sub.parent_name = name_;
    for (auto l : hyperplanes_)
      if ((l & s).size() >= rank_) sub.hyperplanes.push_back(l & s);
    return sub;
  }

  /// Union of the chosen hyperplanes, with exactly those hyperplanes.
  Submatroid submatroid_of_hyperplanes(const std::vector<std::size_t>& indices) const {
    std::set<std::size_t> uniq(indices.begin(), indices.end());
    if (uniq.size() < 2) throw TooFewHyperplanes("a submatroid of hyperplanes needs at least two hyperplanes");
    Submatroid sub;
    sub.parent_rank = rank_;
    sub.parent_name = name_;
    for (auto i : uniq) {
      if (i >= hyperplanes_.size()) throw TooFewHyperplanes("hyperplane index out of range");
      sub.points = sub.points | hyperplanes_[i];
      sub.hyperplanes.push_back(hyperplanes_[i]);
    }
    sub.rank = rank_of(sub.points);
    return sub;
  }

  Submatroid as_submatroid() const { return restrict_to(ground_); }

 private:
  void check(PointSet s) const {
    if (!s.is_subset_of(ground_)) throw UnknownPoint("set " + s.to_string() + " is not inside the ground set");
  }

  int rank_ = 0;
  PointSet ground_;
  std::vector<PointSet> hyperplanes_;
  std::string name_;
  std::vector<PointSet> circuits_n_;
};

inline PavingMatroid Submatroid::matroid() const {
  if (!full_rank()) throw NotFullRank("submatroid on " + points.to_string() + " has rank " + std::to_string(rank));
  return PavingMatroid::validate(parent_rank, points, hyperplanes, parent_name.empty() ? "" : parent_name + "|" + points.to_string());
}

enum class SubmatroidMode { hyperplane_unions, all_subsets };

/// Full-rank submatroids with more than n points. The default mode takes
/// unions of at least two hyperplanes plus the whole ground set; the
/// exhaustive mode is limited to d <= 12.
inline std::vector<Submatroid> full_rank_submatroids(const PavingMatroid& m,
                                                     SubmatroidMode mode = SubmatroidMode::hyperplane_unions) {
  std::set<PointSet, decltype(&lex_less)> sets(&lex_less);
  const int n = m.rank();
  if (mode == SubmatroidMode::all_subsets) {
    if (m.size() > 12) throw TooLarge("exhaustive submatroid enumeration is limited to 12 points");
    for (int k = n + 1; k <= m.size(); ++k)
      for_each_subset(m.ground(), k, [&](PointSet s) {
        if (m.rank_of(s) == n) sets.insert(s);
      });
  } else {
    const auto& hs = m.hyperplanes();
    if (hs.size() > 20) throw TooLarge("too many hyperplanes for union enumeration");
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << hs.size()); ++mask) {
      if (std::popcount(mask) < 2) continue;
      PointSet u;
      for (std::size_t i = 0; i < hs.size(); ++i)
        if ((mask >> i) & 1u) u = u | hs[i];
      if (u.size() > n && m.rank_of(u) == n) sets.insert(u);
    }
    sets.insert(m.ground());
  }
  std::vector<PointSet> ordered(sets.begin(), sets.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](PointSet a, PointSet b) { return a.size() < b.size(); });
  std::vector<Submatroid> out;
  for (auto s : ordered) out.push_back(m.restrict_to(s));
  return out;
}

struct LiftabilityVerdict {
  bool certified = false;
  int points = 0;
  int circuits = 0;
  int rank = 0;
};

/// |M| >= k + n certifies liftability; otherwise inconclusive.
inline LiftabilityVerdict liftable_sufficient(const PavingMatroid& m) {
  LiftabilityVerdict v;
  v.points = m.size();
  v.circuits = static_cast<int>(m.circuits_n().size());
  v.rank = m.rank();
  v.certified = v.points >= v.circuits + v.rank;
  return v;
}

inline PavingMatroid uniform(int n, int d) {
  return PavingMatroid::validate(n, d, {}, "uniform(" + std::to_string(n) + "," + std::to_string(d) + ")");
}

}  // namespace paving
