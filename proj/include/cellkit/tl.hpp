#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellkit/hecke.hpp"
#include "cellkit/perm.hpp"
#include "cellkit/tableau.hpp"

namespace cellkit {

// Planar non-crossing perfect matching on two rows of n points.  Partners are
// encoded per point: positive k means top point k, negative -k bottom point k
// (both 1-based).
struct TLDiagram {
  int n = 0;
  std::vector<int> top;     // partner of top i at index i-1
  std::vector<int> bottom;  // partner of bottom i at index i-1

  static TLDiagram identity(int n);

  std::vector<std::pair<int, int>> cups() const;  // top-top arcs, a < b
  std::vector<std::pair<int, int>> caps() const;  // bottom-bottom arcs
  int through() const;                            // number of propagating lines
  bool valid() const;

  bool operator==(const TLDiagram& o) const {
    return n == o.n && top == o.top && bottom == o.bottom;
  }
  bool operator<(const TLDiagram& o) const {
    if (n != o.n) return n < o.n;
    if (top != o.top) return top < o.top;
    return bottom < o.bottom;
  }
};

// Image of a fully commutative w: cups read from the recording tableau,
// caps from the insertion tableau, by parenthesis matching of the second row.
TLDiagram tl_from_fc(const Permutation& w);
TLDiagram tl_from_pq(const StandardTableau& P, const StandardTableau& Q);
// Inverse direction of the bijection.
Permutation fc_from_tl(const TLDiagram& d);

// Concatenation with a below b; returns the traced diagram and the number of
// removed closed loops (each loop is worth a factor v + v^-1).
std::pair<TLDiagram, int> tl_multiply(const TLDiagram& a, const TLDiagram& b);

// Point i closes a cup to its left while i+1 opens one to its right.
bool has_non_nested_adjacent_cups(const TLDiagram& d);

// Diagrammatic answer for a fully commutative w, decided on the Duflo
// involution of its left cell.  For involutions the rainbow factorization
// into special involutions is computed as well and both routes must agree.
bool fc_kostant_positive(const Permutation& w);

// Decomposition of the cup pattern into concentric rainbow clusters, one
// special involution per cluster; nullopt when the cups do not decompose.
std::optional<std::vector<SpecialInvolution>> special_factorization(const TLDiagram& d);

struct TLElement {
  int n = 0;
  std::map<TLDiagram, Laurent> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const TLDiagram& d, const Laurent& c) {
    if (c.is_zero()) return;
    auto& t = terms[d];
    t += c;
    if (t.is_zero()) terms.erase(d);
  }
  bool operator==(const TLElement& o) const { return n == o.n && terms == o.terms; }
};

TLElement tl_multiply(const TLElement& a, const TLElement& b);
// Quotient map: express in the canonical basis, send fully commutative
// indices to their diagrams and the rest to zero.
TLElement hecke_to_tl(KLCache& C, const HeckeElt& a);

std::string tl_ascii(const TLDiagram& d);

}  // namespace cellkit
