#include "cellkit/hecke.hpp"

#include <algorithm>
#include <cassert>

namespace cellkit {

/*
  Canonical basis rows are computed by the usual recursion on a left descent
  s of w, writing u = sw:

      uH_w = uH_s uH_u - sum_{z < u, sz < z} mu(z,u) uH_z,

  where uH_s uH_u is obtained from the standard-basis expansion of uH_u by
  one application of (H_s + v).  Rows are stored fully expanded (sorted by
  element id, including the unitriangular head) because every downstream
  consumer -- mu extraction, dual expansion, the quotient map, the suite
  checks -- wants random access into them.  The mu lists are extracted the
  moment a row is completed, so the cell graph never needs the rows again
  and the polynomial tables can be dropped before a scan.
*/

KLCache::KLCache(int n) : sn_(n) {
  rows_.resize(sn_.size());
  filled_.assign(sn_.size(), 0);
  mu_down_.resize(sn_.size());
  scratch_.resize(sn_.size());
}

const KLCache::Row& KLCache::row(PermId w) {
  if (!filled_[w]) compute_row(w);
  return rows_[w];
}

const KLCache::MuList& KLCache::mu_down(PermId w) {
  row(w);
  return mu_down_[w];
}

void KLCache::compute_row(PermId w) {
  if (sn_.length(w) == 0) {
    rows_[w] = {{w, Laurent::one()}};
    filled_[w] = 1;
    ++filled_count_;
    ++stored_pairs_;
    return;
  }
  uint32_t ld = sn_.ldesc(w);
  int s = 1;
  while (!(ld & (1u << (s - 1)))) ++s;
  PermId u = sn_.lmult(w, s);

  // make all dependencies present before using the shared scratch space
  row(u);
  for (auto& [z, m] : mu_down_[u])
    if (sn_.ldesc(z) & (1u << (s - 1))) row(z);

  touched_.clear();
  auto bump = [&](PermId x, const Laurent& p, long long scale, int shift) {
    Laurent& slot = scratch_[x];
    if (slot.is_zero() && !p.is_zero()) touched_.push_back(x);
    slot.add_scaled(p, scale, shift);
  };
  for (auto& [x, p] : rows_[u]) {
    PermId sx = sn_.lmult(x, s);
    bump(sx, p, 1, 0);
    bump(x, p, 1, sn_.length(sx) > sn_.length(x) ? 1 : -1);
  }
  for (auto& [z, m] : mu_down_[u]) {
    if (!(sn_.ldesc(z) & (1u << (s - 1)))) continue;
    for (auto& [x, p] : rows_[z]) bump(x, p, -m, 0);
  }

  std::sort(touched_.begin(), touched_.end());
  Row out;
  out.reserve(touched_.size());
  MuList mu;
  for (PermId x : touched_) {
    Laurent& p = scratch_[x];
    if (!p.is_zero()) {
      if (x != w) {
        assert(p.strictly_positive_exponents());
        long long m = p.coeff(1);
        if (m != 0) mu.emplace_back(x, static_cast<int32_t>(m));
      } else {
        assert(p == Laurent::one());
      }
      out.emplace_back(x, std::move(p));
    }
    scratch_[x] = Laurent{};
  }
  stored_pairs_ += out.size();
  rows_[w] = std::move(out);
  mu_down_[w] = std::move(mu);
  filled_[w] = 1;
  ++filled_count_;
}

void KLCache::fill_all(const std::function<void(uint32_t, uint32_t)>& progress) {
  const auto& order = sn_.ids_by_length();
  for (uint32_t k = 0; k < order.size(); ++k) {
    if (!filled_[order[k]]) compute_row(order[k]);
    if (progress && (k % 256 == 0 || k + 1 == order.size())) progress(k + 1, sn_.size());
  }
}

void KLCache::insert_row(PermId w, Row r) {
  check(!filled_[w], Err::Internal, "row inserted twice");
  MuList mu;
  for (auto& [x, p] : r)
    if (x != w) {
      long long m = p.coeff(1);
      if (m != 0) mu.emplace_back(x, static_cast<int32_t>(m));
    }
  stored_pairs_ += r.size();
  rows_[w] = std::move(r);
  mu_down_[w] = std::move(mu);
  filled_[w] = 1;
  ++filled_count_;
}

Laurent KLCache::kl_poly(PermId x, PermId w) {
  if (x == w) return Laurent::one();
  if (!sn_.bruhat_leq_ids(x, w)) return Laurent{};
  const Row& r = row(w);
  auto it = std::lower_bound(r.begin(), r.end(), x,
                             [](const auto& a, PermId b) { return a.first < b; });
  if (it == r.end() || it->first != x) return Laurent{};
  return it->second;
}

Laurent KLCache::kl_poly_classical(PermId x, PermId w) {
  Laurent p = kl_poly(x, w);
  Laurent q;
  int L = sn_.length(w) - sn_.length(x);
  for (int d = 0; 2 * d <= L - p.lo() + 1 && !p.is_zero(); ++d) {
    long long c = p.coeff(L - 2 * d);
    if (c != 0) q.add_scaled(Laurent::monomial(d, c));
  }
  return q;
}

long long KLCache::mu(PermId a, PermId b) {
  check(a < sn_.size() && b < sn_.size(), Err::OutOfRange, "mu");
  if (sn_.length(a) == sn_.length(b)) return 0;
  if (sn_.length(a) > sn_.length(b)) std::swap(a, b);
  const MuList& list = mu_down(b);
  for (auto& [x, m] : list)
    if (x == a) return m;
  return 0;
}

const std::vector<KLCache::MuList>& KLCache::mu_up() {
  check(fully_filled(), Err::CacheNotFilled, "mu_up needs a fully filled cache");
  if (!mu_up_built_) {
    mu_up_.assign(sn_.size(), {});
    for (PermId w = 0; w < sn_.size(); ++w)
      for (auto& [x, m] : mu_down_[w]) mu_up_[x].emplace_back(w, m);
    mu_up_built_ = true;
  }
  return mu_up_;
}

KLCache::CellStructure KLCache::scc_cells(bool left_edges, bool right_edges) {
  check(fully_filled(), Err::CacheNotFilled, "cells need a fully filled cache");
  uint32_t nn = sn_.size();
  int g = sn_.gens();

  std::vector<std::vector<PermId>> adj(nn);
  for (PermId y = 0; y < nn; ++y) {
    auto& out = adj[y];
    if (left_edges) {
      uint32_t ld = sn_.ldesc(y);
      for (int s = 1; s <= g; ++s)
        if (!(ld & (1u << (s - 1)))) out.push_back(sn_.lmult(y, s));
      uint32_t free_mask = ~ld;
      for (auto& [x, m] : mu_down_[y])
        if (sn_.ldesc(x) & free_mask) out.push_back(x);
    }
    if (right_edges) {
      uint32_t rd = sn_.rdesc(y);
      for (int s = 1; s <= g; ++s)
        if (!(rd & (1u << (s - 1)))) out.push_back(sn_.rmult(y, s));
      uint32_t free_mask = ~rd;
      for (auto& [x, m] : mu_down_[y])
        if (sn_.rdesc(x) & free_mask) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  // iterative Tarjan; components pop in reverse topological order
  CellStructure cs;
  cs.cell_of.assign(nn, UINT32_MAX);
  std::vector<uint32_t> index(nn, UINT32_MAX), low(nn, 0);
  std::vector<char> on_stack(nn, 0);
  std::vector<PermId> stack;
  std::vector<std::pair<PermId, uint32_t>> call;  // node, child position
  uint32_t next_index = 0;
  std::vector<std::vector<PermId>> comp_members;

  for (PermId root = 0; root < nn; ++root) {
    if (index[root] != UINT32_MAX) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, ci] = call.back();
      if (ci == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (ci < adj[v].size()) {
        PermId c = adj[v][ci++];
        if (index[c] == UINT32_MAX) {
          call.emplace_back(c, 0);
        } else if (on_stack[c]) {
          low[v] = std::min(low[v], index[c]);
        }
      } else {
        if (low[v] == index[v]) {
          std::vector<PermId> comp;
          while (true) {
            PermId u = stack.back();
            stack.pop_back();
            on_stack[u] = 0;
            cs.cell_of[u] = static_cast<uint32_t>(comp_members.size());
            comp.push_back(u);
            if (u == v) break;
          }
          std::sort(comp.begin(), comp.end());
          comp_members.push_back(std::move(comp));
        }
        PermId vv = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[vv]);
      }
    }
  }

  uint32_t nc = static_cast<uint32_t>(comp_members.size());
  cs.count = nc;
  size_t words = (nc + 63) / 64;
  cs.reach.assign(nc, std::vector<uint64_t>(words, 0));
  // emission order: all successors of a component are emitted before it
  for (uint32_t c = 0; c < nc; ++c) {
    cs.reach[c][c >> 6] |= 1ull << (c & 63);
    for (PermId v : comp_members[c])
      for (PermId t : adj[v]) {
        uint32_t d = cs.cell_of[t];
        if (d == c) continue;
        for (size_t k = 0; k < words; ++k) cs.reach[c][k] |= cs.reach[d][k];
      }
  }

  // renumber cells by smallest member for a deterministic presentation
  std::vector<uint32_t> order(nc);
  for (uint32_t c = 0; c < nc; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](uint32_t a, uint32_t b) { return comp_members[a][0] < comp_members[b][0]; });
  std::vector<uint32_t> newid(nc);
  for (uint32_t k = 0; k < nc; ++k) newid[order[k]] = k;
  CellStructure out;
  out.count = nc;
  out.cell_of.resize(nn);
  out.members.resize(nc);
  out.reach.assign(nc, std::vector<uint64_t>(words, 0));
  for (PermId v = 0; v < nn; ++v) out.cell_of[v] = newid[cs.cell_of[v]];
  for (uint32_t c = 0; c < nc; ++c) out.members[newid[c]] = std::move(comp_members[c]);
  for (uint32_t c = 0; c < nc; ++c)
    for (uint32_t d = 0; d < nc; ++d)
      if (cs.reaches(c, d)) out.reach[newid[c]][newid[d] >> 6] |= 1ull << (newid[d] & 63);
  return out;
}

const KLCache::CellStructure& KLCache::left_cells() {
  if (!left_cells_) left_cells_ = scc_cells(true, false);
  return *left_cells_;
}

const KLCache::CellStructure& KLCache::two_sided_cells() {
  if (!two_sided_cells_) two_sided_cells_ = scc_cells(true, true);
  return *two_sided_cells_;
}

bool KLCache::leqL(PermId x, PermId y) {
  const CellStructure& cs = left_cells();
  return cs.reaches(cs.cell_of[x], cs.cell_of[y]);
}

bool KLCache::leqR(PermId x, PermId y) { return leqL(sn_.inverse(x), sn_.inverse(y)); }

bool KLCache::leqJ(PermId x, PermId y) {
  const CellStructure& cs = two_sided_cells();
  return cs.reaches(cs.cell_of[x], cs.cell_of[y]);
}

HeckeElt hecke_unit(int n) { return hecke_basis(n, 0); }

HeckeElt hecke_basis(int n, PermId w) {
  HeckeElt a;
  a.n = n;
  a.terms[w] = Laurent::one();
  return a;
}

HeckeElt multiply_right_gen(KLCache& C, const HeckeElt& a, int s) {
  const SnTable& sn = C.sn();
  HeckeElt out;
  out.n = a.n;
  Laurent vm = Laurent::monomial(-1) - Laurent::monomial(1);  // v^-1 - v
  for (auto& [x, c] : a.terms) {
    PermId xs = sn.rmult(x, s);
    out.add_term(xs, c);
    if (sn.length(xs) < sn.length(x)) out.add_term(x, c * vm);
  }
  return out;
}

HeckeElt multiply_standard(KLCache& C, const HeckeElt& a, const HeckeElt& b) {
  check(a.n == b.n && a.n == C.rank(), Err::RankMismatch, "multiply_standard");
  const SnTable& sn = C.sn();
  HeckeElt out;
  out.n = a.n;
  for (auto& [z, c] : b.terms) {
    // strip a reduced word of z from the right
    std::vector<int> word;
    PermId cur = z;
    while (sn.length(cur) > 0) {
      uint32_t rd = sn.rdesc(cur);
      int s = 1;
      while (!(rd & (1u << (s - 1)))) ++s;
      word.push_back(s);
      cur = sn.rmult(cur, s);
    }
    std::reverse(word.begin(), word.end());
    HeckeElt part = a;
    for (int s : word) part = multiply_right_gen(C, part, s);
    out.add_scaled(part, c);
  }
  return out;
}

HeckeElt kl_element(KLCache& C, PermId w) {
  HeckeElt a;
  a.n = C.rank();
  for (auto& [x, p] : C.row(w)) a.terms[x] = p;
  return a;
}

HeckeElt dual_kl_element(KLCache& C, PermId w) {
  const SnTable& sn = C.sn();
  // upward unitriangular inversion over the Bruhat up-set of w:
  // the pairing <hat H_w, uH_y> = delta forces, for every y > w,
  //   d_{w,y} = - sum_{w <= a < y} d_{w,a} p_{y,a}.
  std::vector<PermId> ups;
  for (PermId y = 0; y < sn.size(); ++y)
    if (sn.bruhat_leq_ids(w, y)) ups.push_back(y);
  std::sort(ups.begin(), ups.end(),
            [&](PermId a, PermId b) {
              return sn.length(a) != sn.length(b) ? sn.length(a) < sn.length(b) : a < b;
            });
  std::unordered_map<PermId, Laurent> d;
  d.reserve(ups.size());
  for (PermId y : ups) {
    if (y == w) {
      d[w] = Laurent::one();
      continue;
    }
    Laurent acc;
    for (auto& [a, p] : C.row(y)) {
      if (a == y) continue;
      auto it = d.find(a);
      if (it != d.end()) acc += it->second * p;
    }
    if (!acc.is_zero()) d[y] = -acc;
  }
  HeckeElt out;
  out.n = C.rank();
  for (auto& [y, c] : d)
    if (!c.is_zero()) out.terms[y] = c;
  return out;
}

std::map<PermId, Laurent> express_in_kl(KLCache& C, const HeckeElt& a) {
  const SnTable& sn = C.sn();
  std::map<PermId, Laurent> coeffs;
  HeckeElt rest = a;
  while (!rest.terms.empty()) {
    // strip the longest remaining head; rows only add Bruhat-smaller terms
    auto head = rest.terms.begin();
    for (auto it = rest.terms.begin(); it != rest.terms.end(); ++it)
      if (sn.length(it->first) > sn.length(head->first)) head = it;
    PermId w = head->first;
    Laurent c = head->second;
    coeffs[w] = c;
    for (auto& [x, p] : C.row(w)) rest.add_term(x, -(p * c));
  }
  return coeffs;
}

std::map<PermId, Laurent> express_in_dual_kl(KLCache& C, const HeckeElt& a) {
  // coefficient of hat H_u is the pairing <a, uH_u> = sum_x a_x p_{u,x}
  const SnTable& sn = C.sn();
  std::map<PermId, Laurent> out;
  if (a.terms.empty()) return out;
  int min_len = sn.max_length();
  for (auto& [x, c] : a.terms) min_len = std::min(min_len, sn.length(x));
  for (PermId u = 0; u < sn.size(); ++u) {
    if (sn.length(u) < min_len) continue;
    Laurent acc;
    for (auto& [x, c] : a.terms) {
      if (sn.length(x) > sn.length(u)) continue;
      Laurent p = C.kl_poly(x, u);
      if (!p.is_zero()) acc += c * p;
    }
    if (!acc.is_zero()) out[u] = acc;
  }
  return out;
}

HeckeElt bar_of_standard(KLCache& C, PermId x) {
  const SnTable& sn = C.sn();
  // bar(H_x) = (H_{x^-1})^-1 and H_s^-1 = H_s + (v - v^-1)
  PermId y = sn.inverse(x);
  std::vector<int> word;
  PermId cur = y;
  while (sn.length(cur) > 0) {
    uint32_t rd = sn.rdesc(cur);
    int s = 1;
    while (!(rd & (1u << (s - 1)))) ++s;
    word.push_back(s);
    cur = sn.rmult(cur, s);
  }
  // word (reversed strip order) spells y = s_a1 ... s_ak reading word back to front;
  // the inverse multiplies the H_s^-1 front to back
  Laurent vdiff = Laurent::monomial(1) - Laurent::monomial(-1);
  HeckeElt out = hecke_unit(C.rank());
  for (int s : word) {
    HeckeElt next = multiply_right_gen(C, out, s);
    next.add_scaled(out, vdiff);
    out = next;
  }
  return out;
}

HeckeElt bar(KLCache& C, const HeckeElt& a) {
  HeckeElt out;
  out.n = a.n;
  for (auto& [x, c] : a.terms) out.add_scaled(bar_of_standard(C, x), c.bar());
  return out;
}

int a_function(const Permutation& w) {
  Partition shape = rs(w).first.shape();
  Partition conj = shape.conjugate();
  int a = 0;
  for (int p : conj.parts) a += p * (p - 1) / 2;
  return a;
}

uint32_t KhSweep::intern(Laurent&& p) {
  uint64_t h = p.hash();
  auto& bucket = pool_buckets_[h];
  for (uint32_t idx : bucket)
    if (pool_[idx] == p) return idx;
  pool_.push_back(std::move(p));
  bucket.push_back(static_cast<uint32_t>(pool_.size() - 1));
  return static_cast<uint32_t>(pool_.size() - 1);
}

KhSweep::KhSweep(KLCache& C, PermId w) : C_(C), w_(w) {
  const SnTable& sn = C.sn();
  check(C.fully_filled(), Err::CacheNotFilled, "Kh products need a fully filled cache");
  const auto& up = C.mu_up();

  // coordinate domain: the right-preorder down-set of w
  local_of_.assign(sn.size(), -1);
  for (PermId u = 0; u < sn.size(); ++u)
    if (C.leqR(u, w)) {
      local_of_[u] = static_cast<int32_t>(locals_.size());
      locals_.push_back(u);
    }
  vec_.assign(sn.size(), {});

  std::vector<Laurent> scratch(locals_.size());
  std::vector<uint32_t> touched;
  auto bump = [&](uint32_t lu, const Laurent& p, long long scale, int shift) {
    Laurent& slot = scratch[lu];
    if (slot.is_zero() && !p.is_zero()) touched.push_back(lu);
    slot.add_scaled(p, scale, shift);
  };

  vec_[0] = {{static_cast<uint32_t>(local_of_[w]), intern(Laurent::one())}};
  nonzero_count_ = 1;

  for (PermId x : sn.ids_by_length()) {
    if (sn.length(x) == 0) continue;
    uint32_t rd = sn.rdesc(x);
    int s = 1;
    while (!(rd & (1u << (s - 1)))) ++s;
    PermId xp = sn.rmult(x, s);

    touched.clear();
    for (auto& [lu, pi] : vec_[xp]) {
      PermId u = locals_[lu];
      PermId us = sn.rmult(u, s);
      if (sn.length(us) > sn.length(u)) continue;
      const Laurent& p = pool_[pi];
      bump(lu, p, 1, 1);
      bump(lu, p, 1, -1);
      bump(static_cast<uint32_t>(local_of_[us]), p, 1, 0);
      for (auto& [u2, m] : up[u]) {
        int32_t lu2 = local_of_[u2];
        if (lu2 < 0) continue;
        PermId u2s = sn.rmult(u2, s);
        if (sn.length(u2s) > sn.length(u2)) bump(static_cast<uint32_t>(lu2), p, m, 0);
      }
    }
    for (auto& [z, m] : C.mu_down(xp)) {
      if (!(sn.rdesc(z) & (1u << (s - 1)))) continue;
      for (auto& [lu, pi] : vec_[z]) bump(lu, pool_[pi], -m, 0);
    }

    std::sort(touched.begin(), touched.end());
    auto& out = vec_[x];
    out.reserve(touched.size());
    for (uint32_t lu : touched) {
      if (!scratch[lu].is_zero()) out.emplace_back(lu, intern(std::move(scratch[lu])));
      scratch[lu] = Laurent{};
    }
    if (!out.empty()) ++nonzero_count_;
  }
}

std::map<PermId, Laurent> KhSweep::product(PermId x) const {
  std::map<PermId, Laurent> out;
  for (auto& [lu, pi] : vec_[x]) out[locals_[lu]] = pool_[pi];
  return out;
}

KhSweep::Witness KhSweep::witness(KhMode mode) const {
  Witness res;
  res.nonvanishing = nonzero_count_;

  // signature of each nonzero product under the requested comparison
  auto signature = [&](PermId x) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    for (auto& [lu, pi] : vec_[x]) {
      if (mode == KhMode::AtV) {
        mix(lu);
        mix(pool_[pi].hash());
      } else {
        long long e = pool_[pi].eval_one();
        if (e != 0) {
          mix(lu);
          mix(static_cast<uint64_t>(e));
        }
      }
    }
    return h;
  };
  auto equal = [&](PermId x, PermId y) {
    if (mode == KhMode::AtV) return vec_[x] == vec_[y];
    auto eval = [&](PermId z) {
      std::vector<std::pair<uint32_t, long long>> v;
      for (auto& [lu, pi] : vec_[z]) {
        long long e = pool_[pi].eval_one();
        if (e != 0) v.emplace_back(lu, e);
      }
      return v;
    };
    return eval(x) == eval(y);
  };
  auto empty_at_mode = [&](PermId x) {
    if (vec_[x].empty()) return true;
    if (mode == KhMode::AtV) return false;
    for (auto& [lu, pi] : vec_[x])
      if (pool_[pi].eval_one() != 0) return false;
    return true;
  };

  std::unordered_map<uint64_t, std::vector<PermId>> buckets;
  for (PermId x = 0; x < vec_.size(); ++x)
    if (!empty_at_mode(x)) buckets[signature(x)].push_back(x);

  std::optional<std::pair<PermId, PermId>> best;
  for (auto& [h, xs] : buckets) {
    if (xs.size() < 2) continue;
    // split the bucket into exact equality classes (ids ascend already)
    std::vector<std::vector<PermId>> classes;
    for (PermId x : xs) {
      bool placed = false;
      for (auto& cls : classes)
        if (equal(cls[0], x)) {
          cls.push_back(x);
          placed = true;
          break;
        }
      if (!placed) classes.push_back({x});
    }
    for (auto& cls : classes)
      if (cls.size() >= 2) {
        std::pair<PermId, PermId> cand{cls[0], cls[1]};
        if (!best || cand < *best) best = cand;
      }
  }
  if (best) {
    res.negative = true;
    res.pair = best;
  }
  return res;
}

KhVerdict kh_witness(KLCache& C, PermId w, KhMode mode) {
  check(C.sn().inverse(w) == w, Err::NotInvolution, "kh_witness needs an involution");
  KhSweep sweep(C, w);
  auto wit = sweep.witness(mode);
  KhVerdict v;
  v.negative = wit.negative;
  v.witness = wit.pair;
  v.nonvanishing = wit.nonvanishing;
  return v;
}

}  // namespace cellkit
