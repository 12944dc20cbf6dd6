#include "cellkit/tableau.hpp"

#include <algorithm>
#include <numeric>

namespace cellkit {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    check(parts[i] > 0, Err::ParamOutOfRange, "partition parts must be positive");
    check(i == 0 || parts[i - 1] >= parts[i], Err::ParamOutOfRange, "partition must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts.empty()) return Partition{};
  c.resize(parts[0], 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  check(lambda.size() == mu.size(), Err::SizeMismatch, "dominance_leq");
  int rows = std::max(lambda.rows(), mu.rows());
  int sl = 0, sm = 0;
  for (int i = 0; i < rows; ++i) {
    sl += i < lambda.rows() ? lambda.parts[i] : 0;
    sm += i < mu.rows() ? mu.parts[i] : 0;
    if (sl > sm) return false;
  }
  return true;
}

int StandardTableau::size() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

Partition StandardTableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return Partition(std::move(s));
}

bool StandardTableau::valid() const {
  int n = size();
  std::vector<char> seen(n + 1, 0);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = 1;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

std::pair<StandardTableau, StandardTableau> rs(const Permutation& w) {
  StandardTableau P, Q;
  for (int k = 1; k <= w.rank(); ++k) {
    int v = w(k);
    size_t r = 0;
    while (true) {
      if (r == P.rows.size()) {
        P.rows.push_back({v});
        Q.rows.push_back({k});
        break;
      }
      auto& row = P.rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), v);
      if (it == row.end()) {
        row.push_back(v);
        Q.rows[r].push_back(k);
        break;
      }
      std::swap(v, *it);
      ++r;
    }
  }
  return {P, Q};
}

Permutation rs_inverse(const StandardTableau& P, const StandardTableau& Q) {
  check(P.valid() && Q.valid(), Err::ShapeMismatch, "rs_inverse needs standard tableaux");
  check(P.shape() == Q.shape(), Err::ShapeMismatch, "rs_inverse needs equal shapes");
  int n = P.size();
  auto rows = P.rows;
  // position of each recording entry
  std::vector<std::pair<int, int>> pos(n + 1);
  for (size_t r = 0; r < Q.rows.size(); ++r)
    for (size_t c = 0; c < Q.rows[r].size(); ++c) pos[Q.rows[r][c]] = {static_cast<int>(r), static_cast<int>(c)};
  std::vector<int> img(n);
  for (int k = n; k >= 1; --k) {
    auto [r, c] = pos[k];
    int v = rows[r][c];
    rows[r].pop_back();
    for (int i = r - 1; i >= 0; --i) {
      // rightmost entry smaller than v bumps back up
      auto it = std::lower_bound(rows[i].begin(), rows[i].end(), v);
      --it;
      std::swap(v, *it);
    }
    img[k - 1] = v;
  }
  return Permutation::from_one_line(img);
}

Permutation duflo_of_left_cell(const Permutation& w) {
  auto [P, Q] = rs(w);
  (void)P;
  return rs_inverse(Q, Q);
}

bool same_cell(const Permutation& x, const Permutation& y, Side side) {
  check(x.rank() == y.rank(), Err::RankMismatch, "same_cell");
  auto [Px, Qx] = rs(x);
  auto [Py, Qy] = rs(y);
  switch (side) {
    case Side::Left: return Qx == Qy;
    case Side::Right: return Px == Py;
    case Side::TwoSided: return Px.shape() == Py.shape();
  }
  return false;
}

PartialCmp tableau_dominance_compare(const StandardTableau& a, const StandardTableau& b) {
  check(a.size() == b.size(), Err::SizeMismatch, "tableau_dominance_compare");
  int n = a.size();
  std::vector<int> row_a(n + 1), row_b(n + 1);
  for (size_t r = 0; r < a.rows.size(); ++r)
    for (int v : a.rows[r]) row_a[v] = static_cast<int>(r);
  for (size_t r = 0; r < b.rows.size(); ++r)
    for (int v : b.rows[r]) row_b[v] = static_cast<int>(r);
  // grow both restriction shapes one entry at a time
  std::vector<int> sa, sb;
  bool le = true, ge = true;
  for (int k = 1; k <= n; ++k) {
    if (row_a[k] >= static_cast<int>(sa.size())) sa.push_back(0);
    ++sa[row_a[k]];
    if (row_b[k] >= static_cast<int>(sb.size())) sb.push_back(0);
    ++sb[row_b[k]];
    int rows = static_cast<int>(std::max(sa.size(), sb.size()));
    int pa = 0, pb = 0;
    for (int i = 0; i < rows && (le || ge); ++i) {
      pa += i < static_cast<int>(sa.size()) ? sa[i] : 0;
      pb += i < static_cast<int>(sb.size()) ? sb[i] : 0;
      if (pa > pb) le = false;
      if (pb > pa) ge = false;
    }
    if (!le && !ge) return PartialCmp::Incomparable;
  }
  if (le && ge) return a == b ? PartialCmp::Equal : PartialCmp::Incomparable;
  return le ? PartialCmp::Less : PartialCmp::Greater;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

uint64_t count_syt(const Partition& shape) {
  int n = shape.size();
  if (n == 0) return 1;
  Partition conj = shape.conjugate();
  // n! / prod(hooks), computed without overflow by cancelling factors
  std::vector<uint64_t> hooks;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.parts[r]; ++c)
      hooks.push_back(static_cast<uint64_t>(shape.parts[r] - c + conj.parts[c] - r - 1));
  // multiply k = 1..n progressively while dividing by hooks greedily
  __int128 acc = 1;
  size_t hi = 0;
  for (int k = 1; k <= n; ++k) {
    acc *= k;
    while (hi < hooks.size() && acc % hooks[hi] == 0) acc /= hooks[hi++];
  }
  for (; hi < hooks.size(); ++hi) acc /= hooks[hi];
  return static_cast<uint64_t>(acc);
}

std::vector<StandardTableau> all_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  int n = shape.size();
  std::vector<std::vector<int>> rows(shape.rows());
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      int c = static_cast<int>(rows[r].size());
      if (c >= shape.parts[r]) continue;
      if (r > 0 && static_cast<int>(rows[r - 1].size()) <= c) continue;
      rows[r].push_back(k);
      self(self, k + 1);
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<StandardTableau> syt_at_most_two_rows(int n) {
  std::vector<StandardTableau> out;
  for (int second = 0; second <= n / 2; ++second) {
    std::vector<int> parts{n - second};
    if (second > 0) parts.push_back(second);
    for (auto& t : all_syt(Partition(parts))) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace cellkit
