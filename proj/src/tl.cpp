#include "cellkit/tl.hpp"

#include <algorithm>

namespace cellkit {

TLDiagram TLDiagram::identity(int n) {
  TLDiagram d;
  d.n = n;
  d.top.resize(n);
  d.bottom.resize(n);
  for (int i = 1; i <= n; ++i) {
    d.top[i - 1] = -i;
    d.bottom[i - 1] = i;
  }
  return d;
}

std::vector<std::pair<int, int>> TLDiagram::cups() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    if (top[i - 1] > i) out.emplace_back(i, top[i - 1]);
  return out;
}

std::vector<std::pair<int, int>> TLDiagram::caps() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    if (bottom[i - 1] < 0 && -bottom[i - 1] > i) out.emplace_back(i, -bottom[i - 1]);
  return out;
}

int TLDiagram::through() const {
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (top[i] < 0) ++k;
  return k;
}

bool TLDiagram::valid() const {
  if (static_cast<int>(top.size()) != n || static_cast<int>(bottom.size()) != n) return false;
  auto partner_of = [&](int code) { return code > 0 ? top[code - 1] : bottom[-code - 1]; };
  std::vector<int> prop_top, prop_bot;
  for (int i = 1; i <= n; ++i) {
    if (top[i - 1] == i || bottom[i - 1] == -i) return false;
    if (partner_of(top[i - 1]) != i) return false;
    if (partner_of(bottom[i - 1]) != -i) return false;
    if (top[i - 1] < 0) prop_top.push_back(i);
    if (bottom[i - 1] > 0) prop_bot.push_back(i);
  }
  // propagating lines must preserve order
  if (prop_top.size() != prop_bot.size()) return false;
  for (size_t k = 0; k < prop_top.size(); ++k)
    if (top[prop_top[k] - 1] != -prop_bot[k]) return false;
  // non-crossing within each row
  auto noncrossing = [&](const std::vector<std::pair<int, int>>& arcs) {
    for (auto& [a, b] : arcs)
      for (auto& [c, d] : arcs)
        if (a < c && c < b && b < d) return false;
    return true;
  };
  if (!noncrossing(cups()) || !noncrossing(caps())) return false;
  // cups may not straddle a propagating line
  for (auto& [a, b] : cups())
    for (int p : prop_top)
      if (a < p && p < b) return false;
  for (auto& [a, b] : caps())
    for (int p : prop_bot)
      if (a < p && p < b) return false;
  return true;
}

namespace {

// Arcs from the second row of a standard tableau: every row-2 entry closes
// with the nearest earlier unmatched point.
std::vector<int> match_row2(const StandardTableau& T, int n) {
  std::vector<int> partner(n + 1, 0);
  std::vector<char> closer(n + 1, 0);
  if (T.rows.size() > 1)
    for (int v : T.rows[1]) closer[v] = 1;
  check(T.rows.size() <= 2, Err::NotFullyCommutative, "tableau has more than two rows");
  std::vector<int> open;
  for (int i = 1; i <= n; ++i) {
    if (!closer[i]) {
      open.push_back(i);
    } else {
      check(!open.empty(), Err::Internal, "unmatched closer");
      partner[i] = open.back();
      partner[open.back()] = i;
      open.pop_back();
    }
  }
  return partner;
}

}  // namespace

TLDiagram tl_from_pq(const StandardTableau& P, const StandardTableau& Q) {
  check(P.shape() == Q.shape(), Err::ShapeMismatch, "tl_from_pq");
  int n = P.size();
  std::vector<int> cup = match_row2(Q, n), cap = match_row2(P, n);
  TLDiagram d;
  d.n = n;
  d.top.assign(n, 0);
  d.bottom.assign(n, 0);
  std::vector<int> free_top, free_bot;
  for (int i = 1; i <= n; ++i) {
    if (cup[i]) d.top[i - 1] = cup[i];
    else free_top.push_back(i);
    if (cap[i]) d.bottom[i - 1] = -cap[i];
    else free_bot.push_back(i);
  }
  check(free_top.size() == free_bot.size(), Err::Internal, "propagating mismatch");
  for (size_t k = 0; k < free_top.size(); ++k) {
    d.top[free_top[k] - 1] = -free_bot[k];
    d.bottom[free_bot[k] - 1] = free_top[k];
  }
  return d;
}

TLDiagram tl_from_fc(const Permutation& w) {
  check(is_fully_commutative(w), Err::NotFullyCommutative, w.str());
  auto [P, Q] = rs(w);
  return tl_from_pq(P, Q);
}

Permutation fc_from_tl(const TLDiagram& d) {
  // rebuild the two-row tableaux from the arcs and reverse RS
  auto tableau_from = [&](const std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> row1, row2;
    std::vector<char> closer(d.n + 1, 0);
    for (auto& [a, b] : arcs) closer[b] = 1;
    for (int i = 1; i <= d.n; ++i) (closer[i] ? row2 : row1).push_back(i);
    std::vector<std::vector<int>> rows;
    if (!row1.empty()) rows.push_back(row1);
    if (!row2.empty()) rows.push_back(row2);
    return StandardTableau(rows);
  };
  return rs_inverse(tableau_from(d.caps()), tableau_from(d.cups()));
}

std::pair<TLDiagram, int> tl_multiply(const TLDiagram& a, const TLDiagram& b) {
  check(a.n == b.n, Err::RankMismatch, "tl_multiply");
  int n = a.n;
  // nodes: 0..n-1 result bottom (a.bottom), n..2n-1 middle (a.top = b.bottom),
  // 2n..3n-1 result top (b.top).  Each node carries up to two arc ends.
  auto a_code = [&](int code) { return code > 0 ? n + code - 1 : -code - 1; };
  auto b_code = [&](int code) { return code > 0 ? 2 * n + code - 1 : n - code - 1; };
  std::vector<std::vector<int>> adj(3 * n);
  for (int i = 1; i <= n; ++i) {
    adj[a_code(-i)].push_back(a_code(a.bottom[i - 1]));
    adj[a_code(i)].push_back(a_code(a.top[i - 1]));
    adj[b_code(-i)].push_back(b_code(b.bottom[i - 1]));
    adj[b_code(i)].push_back(b_code(b.top[i - 1]));
  }
  std::vector<char> used(3 * n, 0);
  TLDiagram r;
  r.n = n;
  r.top.assign(n, 0);
  r.bottom.assign(n, 0);
  auto node_code = [&](int node) { return node < n ? -(node + 1) : node - 2 * n + 1; };
  auto connect = [&](int from, int to) {
    int cf = node_code(from), ct = node_code(to);
    if (cf > 0) r.top[cf - 1] = ct;
    else r.bottom[-cf - 1] = ct;
  };
  // trace paths from each boundary node
  for (int start = 0; start < 3 * n; ++start) {
    if (start >= n && start < 2 * n) continue;
    if (used[start]) continue;
    int prev = -1, cur = start;
    while (true) {
      used[cur] = 1;
      int next = adj[cur][0] == prev && adj[cur].size() > 1 ? adj[cur][1] : adj[cur][0];
      if (adj[cur][0] == prev && adj[cur].size() == 1) break;  // should not happen
      if (next < n || next >= 2 * n) {
        used[next] = 1;
        connect(start, next);
        connect(next, start);
        break;
      }
      prev = cur;
      cur = next;
    }
  }
  // leftover middle cycles are the closed loops
  int loops = 0;
  for (int m = n; m < 2 * n; ++m) {
    if (used[m]) continue;
    ++loops;
    int prev = -1, cur = m;
    while (!used[cur]) {
      used[cur] = 1;
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
  }
  return {r, loops};
}

bool has_non_nested_adjacent_cups(const TLDiagram& d) {
  for (int i = 1; i < d.n; ++i) {
    bool closes = d.top[i - 1] > 0 && d.top[i - 1] < i;
    bool opens = d.top[i] > i + 1;
    if (closes && opens) return true;
  }
  return false;
}

std::optional<std::vector<SpecialInvolution>> special_factorization(const TLDiagram& d) {
  std::vector<std::pair<int, int>> cup_list = d.cups();
  std::vector<int> partner(d.n + 1, 0);
  for (auto& [a, b] : cup_list) {
    partner[a] = b;
    partner[b] = a;
  }
  std::vector<char> consumed(d.n + 1, 0);
  std::vector<SpecialInvolution> factors;
  for (auto& [a, b] : cup_list) {
    if (b != a + 1) continue;  // cluster center
    int width = 0;
    while (a - width - 1 >= 1 && partner[a - width - 1] == b + width + 1) ++width;
    for (int t = 0; t <= width; ++t) consumed[a - t] = consumed[b + t] = 1;
    factors.emplace_back(a, width, d.n);
  }
  for (auto& [a, b] : cup_list)
    if (!consumed[a] || !consumed[b]) return std::nullopt;
  std::sort(factors.begin(), factors.end(),
            [](const SpecialInvolution& x, const SpecialInvolution& y) { return x.i < y.i; });
  return factors;
}

bool fc_kostant_positive(const Permutation& w) {
  check(is_fully_commutative(w), Err::NotFullyCommutative, w.str());
  Permutation duflo = duflo_of_left_cell(w);
  TLDiagram d = tl_from_fc(duflo);
  bool positive = !has_non_nested_adjacent_cups(d);

  // second route: product of pairwise-distant special involutions
  auto factors = special_factorization(d);
  bool factor_positive = false;
  if (factors) {
    Permutation prod = Permutation::identity(duflo.rank());
    for (auto& f : *factors) prod = prod * f.perm();
    if (prod == duflo) {
      factor_positive = true;
      for (size_t i = 0; i < factors->size() && factor_positive; ++i)
        for (size_t j = i + 1; j < factors->size(); ++j)
          if (!distant((*factors)[i], (*factors)[j])) {
            factor_positive = false;
            break;
          }
    }
  }
  check(positive == factor_positive, Err::Disagreement,
        "cup criterion and factorization disagree on " + duflo.str());
  return positive;
}

TLElement tl_multiply(const TLElement& a, const TLElement& b) {
  TLElement out;
  out.n = a.n;
  Laurent delta = Laurent::gauss();
  for (auto& [da, ca] : a.terms)
    for (auto& [db, cb] : b.terms) {
      auto [d, loops] = tl_multiply(da, db);
      Laurent c = ca * cb;
      for (int t = 0; t < loops; ++t) c = c * delta;
      out.add_term(d, c);
    }
  return out;
}

TLElement hecke_to_tl(KLCache& C, const HeckeElt& a) {
  TLElement out;
  out.n = a.n;
  for (auto& [w, c] : express_in_kl(C, a)) {
    Permutation p = C.sn().perm(w);
    if (is_fully_commutative(p)) out.add_term(tl_from_fc(p), c);
  }
  return out;
}

std::string tl_ascii(const TLDiagram& d) {
  int n = d.n;
  int width = n > 0 ? 2 * n - 1 : 0;
  auto dot_row = [&]() {
    std::string s(width, ' ');
    for (int i = 0; i < n; ++i) s[2 * i] = 'o';
    return s;
  };
  auto arc_height = [&](const std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> h(arcs.size(), 1);
    for (size_t i = 0; i < arcs.size(); ++i)
      for (size_t j = 0; j < arcs.size(); ++j)
        if (arcs[j].first > arcs[i].first && arcs[j].second < arcs[i].second)
          h[i] = std::max(h[i], h[j] + 1);
    return h;
  };
  std::vector<int> prop_top, prop_bot;
  for (int i = 1; i <= n; ++i) {
    if (d.top[i - 1] < 0) prop_top.push_back(i);
    if (d.bottom[i - 1] > 0) prop_bot.push_back(i);
  }

  auto cup_rows = [&](const std::vector<std::pair<int, int>>& arcs, bool top_side) {
    auto h = arc_height(arcs);
    int depth = 0;
    for (int x : h) depth = std::max(depth, x);
    std::vector<std::string> lines(depth, std::string(width, ' '));
    for (size_t i = 0; i < arcs.size(); ++i) {
      auto [a, b] = arcs[i];
      std::string& line = lines[h[i] - 1];
      line[2 * (a - 1)] = top_side ? '\\' : '/';
      line[2 * (b - 1)] = top_side ? '/' : '\\';
      for (int c = 2 * (a - 1) + 1; c < 2 * (b - 1); ++c) line[c] = '_';
    }
    for (auto& line : lines)
      for (int p : top_side ? prop_top : prop_bot) line[2 * (p - 1)] = '|';
    return lines;
  };

  std::vector<std::string> out;
  out.push_back(dot_row());
  auto topl = cup_rows(d.cups(), true);
  auto botl = cup_rows(d.caps(), false);
  for (auto& l : topl) out.push_back(l);
  if (topl.empty() && botl.empty() && !prop_top.empty()) {
    std::string line(width, ' ');
    for (int p : prop_top) line[2 * (p - 1)] = '|';
    out.push_back(line);
  }
  std::reverse(botl.begin(), botl.end());
  for (auto& l : botl) out.push_back(l);
  out.push_back(dot_row());
  std::string s;
  for (auto& l : out) {
    while (!l.empty() && l.back() == ' ') l.pop_back();
    s += l;
    s += '\n';
  }
  return s;
}

}  // namespace cellkit
