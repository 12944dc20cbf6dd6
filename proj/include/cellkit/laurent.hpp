#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cellkit/error.hpp"

namespace cellkit {

// Integer Laurent polynomial in one variable v.  Coefficients are kept in a
// dense window [lo, lo+coeffs.size()) with nonzero endpoints; the empty
// window is the zero polynomial.  All arithmetic is exact.
class Laurent {
 public:
  Laurent() = default;

  static Laurent monomial(int exp, long long c = 1) {
    Laurent p;
    if (c != 0) {
      p.lo_ = exp;
      p.c_.assign(1, c);
    }
    return p;
  }
  static Laurent one() { return monomial(0); }
  // v + v^-1, the loop value of the Temperley-Lieb relation.
  static Laurent gauss() {
    Laurent p;
    p.lo_ = -1;
    p.c_ = {1, 0, 1};
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }

  long long coeff(int exp) const {
    int k = exp - lo_;
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
  }

  // dst += scale * v^shift * p
  void add_scaled(const Laurent& p, long long scale = 1, int shift = 0) {
    if (p.is_zero() || scale == 0) return;
    int plo = p.lo_ + shift, phi = p.hi() + shift;
    if (c_.empty()) {
      lo_ = plo;
      c_.assign(p.c_.size(), 0);
    } else {
      if (plo < lo_) {
        c_.insert(c_.begin(), lo_ - plo, 0);
        lo_ = plo;
      }
      if (phi > hi()) c_.resize(phi - lo_ + 1, 0);
    }
    for (size_t k = 0; k < p.c_.size(); ++k) c_[plo - lo_ + k] += scale * p.c_[k];
    trim();
  }

  Laurent& operator+=(const Laurent& p) {
    add_scaled(p);
    return *this;
  }
  Laurent& operator-=(const Laurent& p) {
    add_scaled(p, -1);
    return *this;
  }
  Laurent operator+(const Laurent& p) const {
    Laurent r = *this;
    r += p;
    return r;
  }
  Laurent operator-(const Laurent& p) const {
    Laurent r = *this;
    r -= p;
    return r;
  }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Laurent operator*(const Laurent& p) const {
    Laurent r;
    if (is_zero() || p.is_zero()) return r;
    r.lo_ = lo_ + p.lo_;
    r.c_.assign(c_.size() + p.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < p.c_.size(); ++j) r.c_[i + j] += c_[i] * p.c_[j];
    }
    r.trim();
    return r;
  }

  Laurent operator*(long long s) const {
    Laurent r;
    r.add_scaled(*this, s);
    return r;
  }

  // v -> v^-1
  Laurent bar() const {
    Laurent r = *this;
    if (r.c_.empty()) return r;
    std::reverse(r.c_.begin(), r.c_.end());
    r.lo_ = -hi();
    return r;
  }

  long long eval_one() const {
    long long s = 0;
    for (long long c : c_) s += c;
    return s;
  }

  bool operator==(const Laurent& p) const { return lo_ == p.lo_ && c_ == p.c_; }
  bool operator!=(const Laurent& p) const { return !(*this == p); }

  // true iff every exponent is >= 1 (the normalization constraint on
  // off-diagonal canonical-basis coefficients)
  bool strictly_positive_exponents() const { return is_zero() || lo_ >= 1; }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(static_cast<int64_t>(lo_)));
    for (long long c : c_) mix(static_cast<uint64_t>(c));
    return h;
  }

  const std::vector<long long>& raw_coeffs() const { return c_; }

 private:
  void trim() {
    size_t b = 0, e = c_.size();
    while (b < e && c_[b] == 0) ++b;
    while (e > b && c_[e - 1] == 0) --e;
    if (b == e) {
      c_.clear();
      lo_ = 0;
      return;
    }
    if (b > 0 || e < c_.size()) {
      c_ = std::vector<long long>(c_.begin() + b, c_.begin() + e);
      lo_ += static_cast<int>(b);
    }
  }

  int lo_ = 0;
  std::vector<long long> c_;
};

inline Laurent operator*(long long s, const Laurent& p) { return p * s; }

struct LaurentHash {
  size_t operator()(const Laurent& p) const { return static_cast<size_t>(p.hash()); }
};

}  // namespace cellkit
