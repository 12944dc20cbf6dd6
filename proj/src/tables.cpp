#include "cellkit/tables.hpp"

#include <array>
#include <cstring>
#include <sstream>

namespace cellkit {

// Transcribed small-rank classification data; see README for provenance.
const std::vector<BuiltinTable>& builtin_tables() {
  static const std::vector<BuiltinTable> tables = {
      {4, {"2143"}, {"2143"}, 1},
      {5, {"21435", "13254", "21543", "32154", "14325"}, {"14325"}, 5},
      {6,
       {"124365", "132546", "214356", "125436", "143256", "214365", "132654",
        "143265", "215436", "321546", "341265", "215634", "154326", "216453",
        "321654", "423165", "351624", "216543", "432165", "164352", "426153",
        "524316", "463152", "526413", "632541"},
       {"341265", "215634", "154326", "426153"},
       25},
      {7,
       {},
       {"1462537", "1536247", "3214765", "4531276", "3614725", "2167534",
        "1654327", "4271563", "5237164"},
       107},
  };
  return tables;
}

const BuiltinTable* builtin_table(int n) {
  for (const auto& t : builtin_tables())
    if (t.n == n) return &t;
  return nullptr;
}

std::string builtin_tables_canonical() {
  std::ostringstream os;
  for (const auto& t : builtin_tables()) {
    os << "n=" << t.n << ";neg=";
    for (const auto& s : t.negatives) os << s << ",";
    os << ";cusp=";
    for (const auto& s : t.cuspidals) os << s << ",";
    os << ";count=" << t.negative_involution_count << "\n";
  }
  return os.str();
}

namespace {

// compact sha256, enough to checksum the table blob
struct Sha256 {
  uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                   0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
  static uint32_t rotr(uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }
  void block(const uint8_t* p) {
    static const uint32_t k[64] = {
        0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
        0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
        0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
        0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
        0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
        0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
        0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
        0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
        0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
        0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
        0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
    uint32_t w[64];
    for (int i = 0; i < 16; ++i)
      w[i] = (uint32_t(p[4 * i]) << 24) | (uint32_t(p[4 * i + 1]) << 16) |
             (uint32_t(p[4 * i + 2]) << 8) | uint32_t(p[4 * i + 3]);
    for (int i = 16; i < 64; ++i) {
      uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
      uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
      w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6], hh = h[7];
    for (int i = 0; i < 64; ++i) {
      uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
      uint32_t ch = (e & f) ^ (~e & g);
      uint32_t t1 = hh + s1 + ch + k[i] + w[i];
      uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
      uint32_t mj = (a & b) ^ (a & c) ^ (b & c);
      uint32_t t2 = s0 + mj;
      hh = g; g = f; f = e; e = d + t1; d = c; c = b; b = a; a = t1 + t2;
    }
    h[0] += a; h[1] += b; h[2] += c; h[3] += d;
    h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
  }
  std::string digest(const std::string& msg) {
    std::string data = msg;
    uint64_t bits = uint64_t(data.size()) * 8;
    data.push_back('\x80');
    while (data.size() % 64 != 56) data.push_back('\0');
    for (int i = 7; i >= 0; --i) data.push_back(char((bits >> (8 * i)) & 0xff));
    for (size_t off = 0; off < data.size(); off += 64)
      block(reinterpret_cast<const uint8_t*>(data.data() + off));
    std::ostringstream os;
    for (uint32_t x : h)
      for (int i = 7; i >= 0; --i) os << "0123456789abcdef"[(x >> (4 * i)) & 0xf];
    return os.str();
  }
};

}  // namespace

std::string builtin_tables_checksum() { return Sha256{}.digest(builtin_tables_canonical()); }

bool is_family_cuspidal(const Permutation& w) {
  int n = w.rank();
  if (n % 2 == 0 && n >= 4) {
    int k = n / 2;
    for (int a = 1; a <= k - 1; ++a)
      if (w == tau_element(k, a)) return true;
  }
  if (n >= 5 && w == inv_element(2, n - 1, n)) return true;
  if (n >= 7 && w == u_element(n)) return true;
  if (n >= 6)
    for (int i = 3; i <= n - 3; ++i)
      if (w == sigma_ni(n, i)) return true;
  return false;
}

}  // namespace cellkit
