#pragma once

#include <cstdint>
#include <vector>

#include "cellkit/perm.hpp"

namespace cellkit {

using PermId = uint32_t;

// Fully enumerated symmetric group with generator multiplication tables.
// Element ids are lexicographic ranks of the one-line notation, so id 0 is
// the identity and id n!-1 is the longest element.
class SnTable {
 public:
  static constexpr int kMaxEnumerableRank = 9;

  explicit SnTable(int n);

  int rank() const { return n_; }
  uint32_t size() const { return size_; }
  int gens() const { return n_ > 0 ? n_ - 1 : 0; }

  PermId id_of(const Permutation& p) const;
  Permutation perm(PermId id) const;

  int length(PermId id) const { return len_[id]; }
  uint32_t rdesc(PermId id) const { return rdesc_[id]; }
  uint32_t ldesc(PermId id) const { return ldesc_[id]; }
  PermId rmult(PermId id, int s) const { return rmult_[static_cast<size_t>(id) * gens() + s - 1]; }
  PermId lmult(PermId id, int s) const { return lmult_[static_cast<size_t>(id) * gens() + s - 1]; }
  PermId inverse(PermId id) const { return inv_[id]; }

  PermId id_w0() const { return size_ - 1; }
  int max_length() const { return n_ * (n_ - 1) / 2; }

  // ids sorted by (length, id); offsets[l]..offsets[l+1] spans length l
  const std::vector<PermId>& ids_by_length() const { return by_len_; }
  const std::vector<uint32_t>& length_offsets() const { return len_off_; }

  bool bruhat_leq_ids(PermId x, PermId y) const;

 private:
  int n_;
  uint32_t size_;
  std::vector<uint8_t> oneline_;  // size_ * n_
  std::vector<uint8_t> len_;
  std::vector<uint16_t> rdesc_, ldesc_;
  std::vector<PermId> rmult_, lmult_, inv_;
  std::vector<PermId> by_len_;
  std::vector<uint32_t> len_off_;
};

}  // namespace cellkit
