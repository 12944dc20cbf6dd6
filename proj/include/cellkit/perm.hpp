#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cellkit/error.hpp"

namespace cellkit {

// Permutations of {1,...,n} in one-line notation, composed so that
// (p*q)(i) = p(q(i)); a word s_{a1}...s_{ak} evaluates left to right.
class Permutation {
 public:
  static constexpr int kMaxRank = 20;

  Permutation() = default;  // identity of S_0

  static Permutation identity(int n);
  static Permutation from_one_line(const std::vector<int>& seq);
  static Permutation from_word(const std::vector<int>& letters, int n);
  static Permutation simple(int i, int n);            // s_i = (i,i+1)
  static Permutation transposition(int a, int b, int n);

  int rank() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }

  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  bool is_identity() const;
  bool is_involution() const;

  int length() const;  // inversion count
  uint32_t right_descents() const;  // bit i-1 set iff w(i) > w(i+1)
  uint32_t left_descents() const;

  // rank of the one-line word among all permutations of n in lex order
  uint64_t lex_rank() const;
  static Permutation from_lex_rank(uint64_t r, int n);

  std::vector<int> one_line() const { return std::vector<int>(img_.begin(), img_.end()); }
  std::string str() const;  // compact for n <= 9, comma separated otherwise

 private:
  explicit Permutation(std::vector<uint8_t> img) : img_(std::move(img)) {}
  std::vector<uint8_t> img_;
};

struct PermHash {
  size_t operator()(const Permutation& p) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 1; i <= p.rank(); ++i) {
      h ^= static_cast<uint64_t>(p(i));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Permutation& x, const Permutation& y);
// Independent recursive oracle (lifting property); used by tests.
bool bruhat_leq_oracle(const Permutation& x, const Permutation& y);

// Flattening of the window w(start..start+k-1) to a permutation of 1..k.
Permutation consecutive_pattern(const Permutation& w, int start, int k);
// Smallest start index with consecutive_pattern(x,start,p.rank()) == p.
std::optional<int> contains_consecutive(const Permutation& x, const Permutation& p);
// phi_{k,n,i}: acts as w shifted by offset on {offset+1,...,offset+n}.
Permutation embed(const Permutation& w, int k, int offset);

bool is_fully_commutative(const Permutation& w);  // 321-avoiding

// Simple reflections occurring in any reduced expression.
std::vector<int> support(const Permutation& w);
std::vector<int> reduced_word(const Permutation& w);  // greedy descent stripping

// sigma_{i,j} = (i-j,i+1)(i-j+1,i+2)...(i,i+j+1)
struct SpecialInvolution {
  int i = 1, j = 0, n = 2;
  SpecialInvolution() = default;
  SpecialInvolution(int i_, int j_, int n_);
  Permutation perm() const;
  std::vector<int> support_points() const;   // {i-j, ..., i+j+1}
  std::vector<int> extended_support() const; // {i-j-1, ..., i+j+2} clipped to 1..n
};

// Extended supports share at most one point.
bool distant(const SpecialInvolution& a, const SpecialInvolution& b);

// Named elements.
Permutation inv_element(int i, int j, int n);    // reverse the block i..j
Permutation w0(int n);                           // longest element
Permutation tau_element(int k, int a);           // in S_{2k}
Permutation u_element(int n);                    // s1 s2 s1 s_{n-2} s_{n-1} s_{n-2}
Permutation v_element(int n);                    // s1 s2 s1 s_{n-1}
Permutation sigma_ni(int n, int i);              // (1,i+1)(i,n)
Permutation x_ni(int n, int i);                  // s_i s_1 s_2 ... s_{i+1}
Permutation y_ni(int n, int i);                  // s_i s_{n-1} s_{n-2} ... s_{i-1}
Permutation d_element(int n);                    // (n-2)(n-1)(n-3)...4312n

// Dispatcher used by the CLI; name in {inv,tau,u,v,sigma,x,y,d,w0,special}.
Permutation named_element(const std::string& name, int n, const std::vector<int>& params);

}  // namespace cellkit
