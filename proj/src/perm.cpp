#include "cellkit/perm.hpp"

#include <algorithm>
#include <sstream>

namespace cellkit {

const char* err_name(Err e) {
  switch (e) {
    case Err::DuplicateValue: return "DuplicateValue";
    case Err::OutOfRange: return "OutOfRange";
    case Err::RankMismatch: return "RankMismatch";
    case Err::RankUnsupported: return "RankUnsupported";
    case Err::WindowOutOfRange: return "WindowOutOfRange";
    case Err::ParamOutOfRange: return "ParamOutOfRange";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::SizeMismatch: return "SizeMismatch";
    case Err::NotInvolution: return "NotInvolution";
    case Err::NotFullyCommutative: return "NotFullyCommutative";
    case Err::CacheNotFilled: return "CacheNotFilled";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::IoError: return "IoError";
    case Err::VersionMismatch: return "VersionMismatch";
    case Err::Disagreement: return "Disagreement";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

Permutation Permutation::identity(int n) {
  check(n >= 0 && n <= kMaxRank, Err::RankUnsupported, "rank " + std::to_string(n));
  std::vector<uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<uint8_t>(i + 1);
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size());
  check(n <= kMaxRank, Err::RankUnsupported, "rank " + std::to_string(n));
  std::vector<uint8_t> img(n);
  std::vector<char> seen(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    int v = seq[i];
    check(v >= 1 && v <= n, Err::OutOfRange, "value " + std::to_string(v) + " at position " + std::to_string(i + 1));
    check(!seen[v], Err::DuplicateValue, "value " + std::to_string(v) + " repeated");
    seen[v] = 1;
    img[i] = static_cast<uint8_t>(v);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::simple(int i, int n) {
  check(i >= 1 && i < n, Err::ParamOutOfRange, "s_" + std::to_string(i) + " in S_" + std::to_string(n));
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::transposition(int a, int b, int n) {
  check(a >= 1 && b >= 1 && a <= n && b <= n && a != b, Err::ParamOutOfRange, "transposition");
  Permutation p = identity(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::from_word(const std::vector<int>& letters, int n) {
  Permutation w = identity(n);
  for (int a : letters) w = w * simple(a, n);
  return w;
}

Permutation Permutation::operator*(const Permutation& q) const {
  check(rank() == q.rank(), Err::RankMismatch,
        "compose S_" + std::to_string(rank()) + " with S_" + std::to_string(q.rank()));
  std::vector<uint8_t> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[q.img_[i] - 1];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<uint8_t> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[img_[i] - 1] = static_cast<uint8_t>(i + 1);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[img_[i] - 1] != i + 1) return false;
  return true;
}

int Permutation::length() const {
  int n = rank(), len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (img_[i] > img_[j]) ++len;
  return len;
}

uint32_t Permutation::right_descents() const {
  uint32_t m = 0;
  for (int i = 1; i < rank(); ++i)
    if (img_[i - 1] > img_[i]) m |= 1u << (i - 1);
  return m;
}

uint32_t Permutation::left_descents() const { return inverse().right_descents(); }

uint64_t Permutation::lex_rank() const {
  int n = rank();
  uint64_t r = 0, fact = 1;
  for (int i = n - 2; i >= 0; --i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (img_[j] < img_[i]) ++smaller;
    r += smaller * fact;
    fact *= static_cast<uint64_t>(n - i);
  }
  return r;
}

Permutation Permutation::from_lex_rank(uint64_t r, int n) {
  check(n >= 0 && n <= kMaxRank, Err::RankUnsupported, "rank " + std::to_string(n));
  std::vector<uint8_t> avail(n);
  for (int i = 0; i < n; ++i) avail[i] = static_cast<uint8_t>(i + 1);
  std::vector<uint64_t> fact(n + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  check(n == 0 || r < fact[n], Err::OutOfRange, "lex rank");
  std::vector<uint8_t> img;
  img.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    uint64_t q = r / fact[i];
    r %= fact[i];
    img.push_back(avail[q]);
    avail.erase(avail.begin() + static_cast<long>(q));
  }
  return Permutation(std::move(img));
}

std::string Permutation::str() const {
  std::ostringstream os;
  if (rank() <= 9) {
    for (uint8_t v : img_) os << static_cast<int>(v);
  } else {
    for (size_t i = 0; i < img_.size(); ++i) {
      if (i) os << ',';
      os << static_cast<int>(img_[i]);
    }
  }
  return os.str();
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  int n = x.rank();
  check(n == y.rank(), Err::RankMismatch, "bruhat_leq");
  // #{a<=i : x(a)>=j} <= #{a<=i : y(a)>=j} for all i,j
  std::vector<int> cx(n + 2, 0), cy(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = x(i); j >= 1; --j) ++cx[j];
    for (int j = y(i); j >= 1; --j) ++cy[j];
    for (int j = 1; j <= n; ++j)
      if (cx[j] > cy[j]) return false;
  }
  return true;
}

bool bruhat_leq_oracle(const Permutation& x, const Permutation& y) {
  if (x.rank() != y.rank()) fail(Err::RankMismatch, "bruhat_leq_oracle");
  int lx = x.length(), ly = y.length();
  if (lx > ly) return false;
  if (lx == ly) return x == y;
  // lifting property: pick s with ys < y, then
  // x <= y  iff  (xs < x ? xs <= ys : x <= ys)
  uint32_t d = y.right_descents();
  int s = 1;
  while (!(d & (1u << (s - 1)))) ++s;
  Permutation si = Permutation::simple(s, y.rank());
  Permutation ys = y * si;
  if (x.right_descents() & (1u << (s - 1))) return bruhat_leq_oracle(x * si, ys);
  return bruhat_leq_oracle(x, ys);
}

Permutation consecutive_pattern(const Permutation& w, int start, int k) {
  check(start >= 1 && k >= 0 && start + k - 1 <= w.rank(), Err::WindowOutOfRange,
        "window [" + std::to_string(start) + "," + std::to_string(start + k - 1) + "] in S_" +
            std::to_string(w.rank()));
  std::vector<int> win(k);
  for (int t = 0; t < k; ++t) win[t] = w(start + t);
  std::vector<int> sorted = win;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> flat(k);
  for (int t = 0; t < k; ++t)
    flat[t] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), win[t]) - sorted.begin()) + 1;
  return Permutation::from_one_line(flat);
}

std::optional<int> contains_consecutive(const Permutation& x, const Permutation& p) {
  int k = p.rank();
  if (k == 0) return 1;
  if (k > x.rank()) return std::nullopt;
  for (int start = 1; start + k - 1 <= x.rank(); ++start)
    if (consecutive_pattern(x, start, k) == p) return start;
  return std::nullopt;
}

Permutation embed(const Permutation& w, int k, int offset) {
  check(offset >= 0 && k >= w.rank() + offset, Err::RankMismatch, "embed");
  std::vector<int> img(k);
  for (int i = 1; i <= k; ++i) img[i - 1] = i;
  for (int i = 1; i <= w.rank(); ++i) img[offset + i - 1] = offset + w(i);
  return Permutation::from_one_line(img);
}

bool is_fully_commutative(const Permutation& w) {
  int n = w.rank();
  std::vector<int> dec(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (w(j + 1) > w(i + 1)) {
        dec[i] = std::max(dec[i], dec[j] + 1);
        if (dec[i] >= 3) return false;
      }
  return true;
}

std::vector<int> support(const Permutation& w) {
  std::vector<int> out;
  int m = 0;
  for (int i = 1; i < w.rank(); ++i) {
    m = std::max(m, w(i));
    if (m > i) out.push_back(i);
  }
  return out;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation cur = w;
  uint32_t d;
  while ((d = cur.right_descents()) != 0) {
    int s = 1;
    while (!(d & (1u << (s - 1)))) ++s;
    word.push_back(s);
    cur = cur * Permutation::simple(s, w.rank());
  }
  std::reverse(word.begin(), word.end());
  return word;
}

SpecialInvolution::SpecialInvolution(int i_, int j_, int n_) : i(i_), j(j_), n(n_) {
  check(n >= 2 && i >= 1 && i <= n - 1, Err::ParamOutOfRange, "special involution center");
  check(j >= 0 && j <= std::min(i - 1, n - i - 1), Err::ParamOutOfRange, "special involution width");
}

Permutation SpecialInvolution::perm() const {
  Permutation p = Permutation::identity(n);
  for (int t = 0; t <= j; ++t) p = p * Permutation::transposition(i - j + t, i + 1 + t, n);
  return p;
}

std::vector<int> SpecialInvolution::support_points() const {
  std::vector<int> out;
  for (int t = i - j; t <= i + j + 1; ++t) out.push_back(t);
  return out;
}

std::vector<int> SpecialInvolution::extended_support() const {
  std::vector<int> out;
  for (int t = std::max(1, i - j - 1); t <= std::min(n, i + j + 2); ++t) out.push_back(t);
  return out;
}

bool distant(const SpecialInvolution& a, const SpecialInvolution& b) {
  check(a.n == b.n, Err::RankMismatch, "distant");
  auto ea = a.extended_support(), eb = b.extended_support();
  int common = 0;
  for (int p : ea)
    if (std::binary_search(eb.begin(), eb.end(), p)) ++common;
  return common <= 1;
}

Permutation inv_element(int i, int j, int n) {
  check(1 <= i && i <= j && j <= n, Err::ParamOutOfRange, "inv(i,j)");
  std::vector<int> img(n);
  for (int t = 1; t <= n; ++t) img[t - 1] = t;
  for (int t = 0; t <= j - i; ++t) img[i - 1 + t] = j - t;
  return Permutation::from_one_line(img);
}

Permutation w0(int n) { return n <= 1 ? Permutation::identity(n) : inv_element(1, n, n); }

Permutation tau_element(int k, int a) {
  check(k >= 2 && a >= 1 && a <= k - 1, Err::ParamOutOfRange, "tau(k,a)");
  int n = 2 * k;
  // sigma_{a,a-1} * sigma_{k+a,k-a-1}; the two factors have disjoint supports
  // {1..2a} and {2a+1..2k}.
  return SpecialInvolution(a, a - 1, n).perm() * SpecialInvolution(k + a, k - a - 1, n).perm();
}

Permutation u_element(int n) {
  // the two factor blocks {1,2} and {n-2,n-1} must not interleave
  check(n >= 6, Err::ParamOutOfRange, "u_n needs n >= 6");
  return Permutation::from_word({1, 2, 1, n - 2, n - 1, n - 2}, n);
}

Permutation v_element(int n) {
  check(n >= 4, Err::ParamOutOfRange, "v_n needs n >= 4");
  return Permutation::from_word({1, 2, 1, n - 1}, n);
}

Permutation sigma_ni(int n, int i) {
  check(n >= 6 && i >= 3 && i <= n - 3, Err::ParamOutOfRange, "sigma_{n,i}");
  return Permutation::transposition(1, i + 1, n) * Permutation::transposition(i, n, n);
}

Permutation x_ni(int n, int i) {
  check(n >= 6 && i >= 3 && i <= n - 3, Err::ParamOutOfRange, "x_{n,i}");
  std::vector<int> word{i};
  for (int t = 1; t <= i + 1; ++t) word.push_back(t);
  return Permutation::from_word(word, n);
}

Permutation y_ni(int n, int i) {
  check(n >= 6 && i >= 3 && i <= n - 3, Err::ParamOutOfRange, "y_{n,i}");
  std::vector<int> word{i};
  for (int t = n - 1; t >= i - 1; --t) word.push_back(t);
  return Permutation::from_word(word, n);
}

Permutation d_element(int n) {
  check(n >= 5, Err::ParamOutOfRange, "d needs n >= 5");
  std::vector<int> img;
  img.push_back(n - 2);
  img.push_back(n - 1);
  for (int t = n - 3; t >= 3; --t) img.push_back(t);
  img.push_back(1);
  img.push_back(2);
  img.push_back(n);
  return Permutation::from_one_line(img);
}

Permutation named_element(const std::string& name, int n, const std::vector<int>& params) {
  auto want = [&](size_t k) {
    check(params.size() == k, Err::ParamOutOfRange,
          name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "inv") {
    want(2);
    return inv_element(params[0], params[1], n);
  }
  if (name == "tau") {
    want(2);
    check(n == 2 * params[0], Err::ParamOutOfRange, "tau(k,a) lives in S_{2k}");
    return tau_element(params[0], params[1]);
  }
  if (name == "u") {
    want(0);
    return u_element(n);
  }
  if (name == "v") {
    want(0);
    return v_element(n);
  }
  if (name == "sigma") {
    want(1);
    return sigma_ni(n, params[0]);
  }
  if (name == "x") {
    want(1);
    return x_ni(n, params[0]);
  }
  if (name == "y") {
    want(1);
    return y_ni(n, params[0]);
  }
  if (name == "d") {
    want(0);
    return d_element(n);
  }
  if (name == "w0") {
    want(0);
    return w0(n);
  }
  if (name == "special") {
    want(2);
    return SpecialInvolution(params[0], params[1], n).perm();
  }
  fail(Err::ParamOutOfRange, "unknown element name '" + name + "'");
}

}  // namespace cellkit
