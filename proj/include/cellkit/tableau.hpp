#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cellkit/perm.hpp"

namespace cellkit {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int rows() const { return static_cast<int>(parts.size()); }
  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

// lambda is dominated by mu: every prefix sum of lambda is <= that of mu.
bool dominance_leq(const Partition& lambda, const Partition& mu);

struct StandardTableau {
  std::vector<std::vector<int>> rows;

  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {}

  int size() const;
  Partition shape() const;
  bool valid() const;  // entries 1..n once, increasing along rows and columns

  bool operator==(const StandardTableau& o) const { return rows == o.rows; }
  bool operator!=(const StandardTableau& o) const { return rows != o.rows; }
  bool operator<(const StandardTableau& o) const { return rows < o.rows; }
};

// Robinson-Schensted row insertion: returns (P, Q).
std::pair<StandardTableau, StandardTableau> rs(const Permutation& w);
Permutation rs_inverse(const StandardTableau& P, const StandardTableau& Q);

// The unique involution in the left cell of w, namely rs_inverse(Q_w, Q_w).
Permutation duflo_of_left_cell(const Permutation& w);

enum class Side { Left, Right, TwoSided };
bool same_cell(const Permutation& x, const Permutation& y, Side side);

enum class PartialCmp { Less, Greater, Equal, Incomparable };
// T1 <= T2 iff for every k the shape of T1 restricted to {1..k} is dominated
// by that of T2.
PartialCmp tableau_dominance_compare(const StandardTableau& a, const StandardTableau& b);

std::vector<Partition> partitions_of(int n);
uint64_t count_syt(const Partition& shape);        // hook length formula
std::vector<StandardTableau> all_syt(const Partition& shape);
std::vector<StandardTableau> syt_at_most_two_rows(int n);

}  // namespace cellkit
