#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cellkit/laurent.hpp"
#include "cellkit/sn_table.hpp"
#include "cellkit/tableau.hpp"

namespace cellkit {

// A vector in the standard basis {H_w} of the Hecke algebra of S_n over
// Z[v,v^-1], Soergel normalization: H_x H_s = H_{xs} for xs > x and
// H_x H_s = H_{xs} + (v^-1 - v) H_x for xs < x.
struct HeckeElt {
  int n = 0;
  std::map<PermId, Laurent> terms;

  bool is_zero() const { return terms.empty(); }
  Laurent coeff(PermId w) const {
    auto it = terms.find(w);
    return it == terms.end() ? Laurent{} : it->second;
  }
  void add_term(PermId w, const Laurent& c) {
    if (c.is_zero()) return;
    auto& t = terms[w];
    t += c;
    if (t.is_zero()) terms.erase(w);
  }
  void add_scaled(const HeckeElt& o, const Laurent& c) {
    for (auto& [w, p] : o.terms) add_term(w, p * c);
  }
  bool operator==(const HeckeElt& o) const { return n == o.n && terms == o.terms; }
};

// Canonical-basis context for one symmetric group: the table of polynomials
// p_{w,x} (coefficients of the canonical basis in the standard basis), the
// derived mu function, and the cell preorders read off the mu graph.
class KLCache {
 public:
  using Row = std::vector<std::pair<PermId, Laurent>>;  // sorted by id, includes (w,1)
  using MuList = std::vector<std::pair<PermId, int32_t>>;

  explicit KLCache(int n);

  int rank() const { return sn_.rank(); }
  const SnTable& sn() const { return sn_; }

  const Row& row(PermId w);  // demand-filled
  bool row_filled(PermId w) const { return filled_[w] != 0; }
  void fill_all(const std::function<void(uint32_t, uint32_t)>& progress = {});
  bool fully_filled() const { return filled_count_ == sn_.size(); }
  uint32_t filled_count() const { return filled_count_; }
  uint64_t stored_pairs() const { return stored_pairs_; }

  // p_{w,x}; zero unless x <= w in Bruhat order, p_{w,w} = 1.
  Laurent kl_poly(PermId x, PermId w);
  // Classical normalization P_{x,w}(q) = v^{l(x)-l(w)} p_{w,x} under q = v^-2.
  Laurent kl_poly_classical(PermId x, PermId w);
  long long mu(PermId a, PermId b);  // symmetrized
  const MuList& mu_down(PermId w);
  const std::vector<MuList>& mu_up();  // requires full fill

  // used by the cache loader; the row must be complete for w
  void insert_row(PermId w, Row r);

  struct CellStructure {
    uint32_t count = 0;
    std::vector<uint32_t> cell_of;
    std::vector<std::vector<PermId>> members;  // each sorted; cells sorted by min id
    std::vector<std::vector<uint64_t>> reach;  // reach[c] = bitset of cells d with d >= c
    bool reaches(uint32_t from, uint32_t to) const {
      return (reach[from][to >> 6] >> (to & 63)) & 1;
    }
  };

  // Left cells and the left preorder from the mu graph; needs a full fill.
  const CellStructure& left_cells();
  const CellStructure& two_sided_cells();

  bool leqL(PermId x, PermId y);  // x <=_L y
  bool leqR(PermId x, PermId y);
  bool leqJ(PermId x, PermId y);

 private:
  void compute_row(PermId w);
  CellStructure scc_cells(bool left_edges, bool right_edges);

  SnTable sn_;
  std::vector<Row> rows_;
  std::vector<char> filled_;
  uint32_t filled_count_ = 0;
  uint64_t stored_pairs_ = 0;
  std::vector<MuList> mu_down_;
  std::vector<MuList> mu_up_;
  bool mu_up_built_ = false;
  std::optional<CellStructure> left_cells_, two_sided_cells_;
  std::vector<Laurent> scratch_;
  std::vector<PermId> touched_;
};

HeckeElt hecke_unit(int n);
HeckeElt hecke_basis(int n, PermId w);

HeckeElt multiply_standard(KLCache& C, const HeckeElt& a, const HeckeElt& b);
HeckeElt multiply_right_gen(KLCache& C, const HeckeElt& a, int s);  // a * H_s

HeckeElt kl_element(KLCache& C, PermId w);        // underline H_w
HeckeElt dual_kl_element(KLCache& C, PermId w);   // hat H_w, upward triangular
std::map<PermId, Laurent> express_in_kl(KLCache& C, const HeckeElt& a);
std::map<PermId, Laurent> express_in_dual_kl(KLCache& C, const HeckeElt& a);

// bar involution: v -> v^-1, H_x -> (H_{x^-1})^-1
HeckeElt bar_of_standard(KLCache& C, PermId x);
HeckeElt bar(KLCache& C, const HeckeElt& a);

// Lusztig a-function, type A closed form from the RS shape.
int a_function(const Permutation& w);

enum class KhMode { AtV, AtOne };

// All products hat H_w * underline H_x for fixed w, in dual canonical
// coordinates.  Since hat H_w is the w-th coordinate vector, the whole family
// is generated by the sparse right-multiplication operators of the dual
// basis, which only involve descents and the mu function:
//
//   hat H_u * uH_s = 0                                       if us > u,
//   (v+v^-1) hat H_u + hat H_{us} + sum_{z>u, zs>z} mu(u,z) hat H_z   else,
//
// together with uH_x = uH_{x'} uH_s - sum_{z<x', zs<z} mu(z,x') uH_z for a
// right descent s of x.  The support of every product lies in the right
// preorder down-set of w.
class KhSweep {
 public:
  KhSweep(KLCache& C, PermId w);

  PermId w() const { return w_; }
  uint64_t nonvanishing() const { return nonzero_count_; }
  bool nonzero(PermId x) const { return !vec_[x].empty(); }
  // the product as a map u -> coefficient of hat H_u (global ids)
  std::map<PermId, Laurent> product(PermId x) const;

  struct Witness {
    bool negative = false;
    std::optional<std::pair<PermId, PermId>> pair;
    uint64_t nonvanishing = 0;
  };
  Witness witness(KhMode mode) const;

 private:
  KLCache& C_;
  PermId w_;
  uint64_t nonzero_count_ = 0;
  std::vector<PermId> locals_;                           // local -> global
  std::vector<int32_t> local_of_;                        // global -> local or -1
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> vec_;  // per x: (local u, pool idx)
  std::vector<Laurent> pool_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> pool_buckets_;
  uint32_t intern(Laurent&& p);
};

struct KhVerdict {
  bool negative = false;
  std::optional<std::pair<PermId, PermId>> witness;
  uint64_t nonvanishing = 0;
};

// Kh condition (V) (mode AtV) or (IV) (mode AtOne) for an involution w:
// negative iff two different x, y have equal nonzero products.
KhVerdict kh_witness(KLCache& C, PermId w, KhMode mode);

}  // namespace cellkit
