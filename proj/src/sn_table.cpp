#include "cellkit/sn_table.hpp"

#include <algorithm>
#include <numeric>

namespace cellkit {

SnTable::SnTable(int n) : n_(n) {
  check(n >= 0 && n <= kMaxEnumerableRank, Err::RankUnsupported,
        "group table enumeration capped at rank " + std::to_string(kMaxEnumerableRank));
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  size_ = static_cast<uint32_t>(f);

  oneline_.resize(static_cast<size_t>(size_) * std::max(n_, 1));
  len_.resize(size_);
  rdesc_.resize(size_);
  ldesc_.resize(size_);
  inv_.resize(size_);
  int g = gens();
  rmult_.resize(static_cast<size_t>(size_) * g);
  lmult_.resize(static_cast<size_t>(size_) * g);

  // enumerate in lex order
  std::vector<uint8_t> cur(n_);
  std::iota(cur.begin(), cur.end(), 1);
  std::vector<int> tmp(n_);
  for (PermId id = 0; id < size_; ++id) {
    std::copy(cur.begin(), cur.end(), oneline_.begin() + static_cast<size_t>(id) * n_);
    std::next_permutation(cur.begin(), cur.end());
  }

  std::vector<uint8_t> pos(n_ + 1);
  std::vector<int> seq(n_);
  for (PermId id = 0; id < size_; ++id) {
    const uint8_t* w = &oneline_[static_cast<size_t>(id) * n_];
    int len = 0;
    uint16_t rd = 0;
    for (int i = 0; i < n_; ++i) {
      pos[w[i]] = static_cast<uint8_t>(i);
      for (int j = i + 1; j < n_; ++j)
        if (w[i] > w[j]) ++len;
      if (i + 1 < n_ && w[i] > w[i + 1]) rd |= static_cast<uint16_t>(1u << i);
    }
    len_[id] = static_cast<uint8_t>(len);
    rdesc_[id] = rd;

    uint16_t ld = 0;
    for (int v = 1; v < n_; ++v)
      if (pos[v] > pos[v + 1]) ld |= static_cast<uint16_t>(1u << (v - 1));
    ldesc_[id] = ld;

    for (int v = 1; v <= n_; ++v) seq[pos[v]] = v;  // copy for ranking variants
    auto rank_of = [&](const std::vector<int>& s) -> PermId {
      uint64_t r = 0, fact = 1;
      for (int i = n_ - 2; i >= 0; --i) {
        int smaller = 0;
        for (int j = i + 1; j < n_; ++j)
          if (s[j] < s[i]) ++smaller;
        r += smaller * fact;
        fact *= static_cast<uint64_t>(n_ - i);
      }
      return static_cast<PermId>(r);
    };

    for (int s = 1; s <= g; ++s) {
      for (int i = 0; i < n_; ++i) seq[i] = w[i];
      std::swap(seq[s - 1], seq[s]);
      rmult_[static_cast<size_t>(id) * g + s - 1] = rank_of(seq);
      for (int i = 0; i < n_; ++i) seq[i] = w[i];
      std::swap(seq[pos[s]], seq[pos[s + 1]]);
      lmult_[static_cast<size_t>(id) * g + s - 1] = rank_of(seq);
    }

    for (int v = 1; v <= n_; ++v) seq[v - 1] = pos[v] + 1;
    inv_[id] = rank_of(seq);
  }

  by_len_.resize(size_);
  std::iota(by_len_.begin(), by_len_.end(), 0u);
  std::stable_sort(by_len_.begin(), by_len_.end(),
                   [&](PermId a, PermId b) { return len_[a] < len_[b]; });
  len_off_.assign(max_length() + 2, 0);
  for (PermId id = 0; id < size_; ++id) ++len_off_[len_[id] + 1];
  for (size_t l = 1; l < len_off_.size(); ++l) len_off_[l] += len_off_[l - 1];
}

PermId SnTable::id_of(const Permutation& p) const {
  check(p.rank() == n_, Err::RankMismatch, "id_of");
  return static_cast<PermId>(p.lex_rank());
}

Permutation SnTable::perm(PermId id) const {
  std::vector<int> img(n_);
  for (int i = 0; i < n_; ++i) img[i] = oneline_[static_cast<size_t>(id) * n_ + i];
  return Permutation::from_one_line(img);
}

bool SnTable::bruhat_leq_ids(PermId x, PermId y) const {
  if (x == y) return true;
  if (len_[x] >= len_[y]) return false;
  const uint8_t* wx = &oneline_[static_cast<size_t>(x) * n_];
  const uint8_t* wy = &oneline_[static_cast<size_t>(y) * n_];
  int cx[16] = {0}, cy[16] = {0};
  for (int i = 0; i < n_; ++i) {
    for (int j = wx[i]; j >= 1; --j) ++cx[j];
    for (int j = wy[i]; j >= 1; --j) ++cy[j];
    for (int j = 1; j <= n_; ++j)
      if (cx[j] > cy[j]) return false;
  }
  return true;
}

}  // namespace cellkit
