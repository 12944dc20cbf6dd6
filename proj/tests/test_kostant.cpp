#include "doctest.h"

#include <set>

#include "cellkit/kostant.hpp"
#include "cellkit/textio.hpp"

using namespace cellkit;

namespace {

Permutation P(const std::vector<int>& v) { return Permutation::from_one_line(v); }

std::set<std::string> strs(const std::set<Permutation>& s) {
  std::set<std::string> out;
  for (const auto& p : s) out.insert(p.str());
  return out;
}

}  // namespace

TEST_CASE("builtin tables are internally consistent") {
  for (const auto& t : builtin_tables()) {
    std::set<std::string> neg(t.negatives.begin(), t.negatives.end());
    for (const auto& c : t.cuspidals)
      if (!t.negatives.empty()) CHECK(neg.count(c) == 1);
    for (const auto& s : t.negatives) {
      Permutation w = parse_perm(s);
      CHECK(w.rank() == t.n);
      CHECK(w.is_involution());
    }
    for (const auto& s : t.cuspidals) CHECK(parse_perm(s).is_involution());
    if (!t.negatives.empty())
      CHECK(static_cast<int>(t.negatives.size()) == t.negative_involution_count);
  }
  CHECK(builtin_tables_checksum() ==
        "7df58c08ad91d540cbc781666a008e188d428846004db5a67cd2ba99133d2e61");
}

TEST_CASE("classify small examples through the table route") {
  Classifier cls;
  CHECK(cls.classify(Permutation::identity(4)).status == KStatus::Positive);
  CHECK(cls.classify(P({2, 1, 4, 3})).status == KStatus::Negative);
  CHECK(cls.classify(P({3, 1, 4, 2})).status == KStatus::Negative);  // same left cell
  CHECK(cls.classify(P({3, 1, 4, 2})).duflo == P({2, 1, 4, 3}));
  CHECK(cls.classify(P({2, 1, 4, 3})).method == KMethod::Table);
  CHECK_FALSE(cls.classify(P({2, 1, 4, 3})).conjectural);
  CHECK(cls.classify(inv_element(1, 5, 6)).status == KStatus::Positive);
  for (int m = 2; m <= 7; ++m)
    CHECK(cls.classify(inv_element(1, m - 1, m)).status == KStatus::Positive);
}

TEST_CASE("classify with the kh strategy") {
  Classifier cls;
  Verdict v = cls.classify(P({1, 4, 3, 2, 5}), Strategy::Kh5);
  CHECK(v.status == KStatus::Negative);
  CHECK(v.method == KMethod::KhV);
  CHECK(v.conjectural);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->first != v.witness->second);

  Verdict sigma = cls.classify(sigma_ni(6, 3), Strategy::Kh5);
  CHECK(sigma.status == KStatus::Negative);

  // its length-4 windows are positive
  for (int start = 1; start + 3 <= 5; ++start) {
    Verdict pv = cls.classify(consecutive_pattern(P({1, 4, 3, 2, 5}), start, 4), Strategy::Kh5);
    CHECK(pv.status == KStatus::Positive);
  }
}

TEST_CASE("kh strategy is budget guarded") {
  Classifier cls;
  CHECK_THROWS_AS(cls.classify(inv_element(2, 6, 7), Strategy::Kh5), Error);
  cls.options().kh_max_rank = 5;
  CHECK_THROWS_AS(cls.classify(P({2, 1, 4, 3, 6, 5}), Strategy::Kh5), Error);
}

TEST_CASE("fc strategy") {
  Classifier cls;
  Verdict v = cls.classify(P({2, 1, 4, 3}), Strategy::Fc);
  CHECK(v.status == KStatus::Negative);
  CHECK(v.method == KMethod::FcCriterion);
  CHECK(cls.classify(w0(4), Strategy::Fc).status == KStatus::Unknown);  // not two-row
}

TEST_CASE("pattern propagation") {
  Classifier cls;
  Verdict v = cls.classify(embed(P({2, 1, 4, 3}), 6, 1));
  CHECK(v.status == KStatus::Negative);

  // pairwise distant transpositions s_1 s_4 s_7 contain no negative window
  auto hit = cls.table_propagation(P({2, 1, 3, 5, 4, 6, 8, 7}));
  CHECK_FALSE(hit.has_value());

  auto found = cls.table_propagation(embed(P({2, 1, 4, 3}), 8, 2));
  REQUIRE(found.has_value());
  CHECK(found->first == P({2, 1, 4, 3}));
  CHECK(found->second == 3);

  // explicit-set variant, shorter patterns first
  std::vector<Permutation> base{P({2, 1, 4, 3}), P({3, 1, 4, 2})};
  auto got = propagation_check(P({2, 1, 4, 3, 5}), base);
  REQUIRE(got.has_value());
  CHECK(got->first == P({2, 1, 4, 3}));
  CHECK(got->second == 1);
  CHECK_FALSE(propagation_check(P({1, 4, 3, 2, 5}), base).has_value());
  auto emb = propagation_check(embed(P({2, 1, 4, 3}), 6, 1), base);
  REQUIRE(emb.has_value());
  CHECK(emb->first == P({2, 1, 4, 3}));
  CHECK(emb->second == 2);
}

TEST_CASE("family members recognized for propagation") {
  CHECK(is_family_cuspidal(tau_element(4, 2)));
  CHECK(is_family_cuspidal(inv_element(2, 7, 8)));
  CHECK(is_family_cuspidal(u_element(8)));
  CHECK(is_family_cuspidal(sigma_ni(8, 4)));
  CHECK_FALSE(is_family_cuspidal(Permutation::identity(8)));
  CHECK_FALSE(is_family_cuspidal(w0(8)));
}

TEST_CASE("rank 8 classification via propagation and fc") {
  Classifier cls;
  // an embedded tau_{4,2} is still fully commutative, so the FC route answers
  Verdict v = cls.classify(embed(tau_element(4, 2), 9, 1));
  CHECK(v.status == KStatus::Negative);
  CHECK(v.method == KMethod::FcCriterion);
  // a non-FC element with a tau_{4,2} window falls through to propagation
  Verdict vp = cls.classify(Permutation::from_one_line({9, 3, 4, 1, 2, 7, 8, 5, 6}));
  CHECK(vp.status == KStatus::Negative);
  CHECK(vp.method == KMethod::PatternPropagation);
  // fully commutative rank-8 involutions have a theorem-backed answer
  CHECK(cls.classify(tau_element(4, 1)).status == KStatus::Negative);
  CHECK(cls.classify(P({2, 1, 3, 4, 6, 5, 7, 8})).status == KStatus::Positive);
  // but a rank-8 non-FC involution with no pattern hit is unknown
  CHECK(cls.classify(inv_element(1, 7, 8)).status == KStatus::Unknown);
}

TEST_CASE("cuspidality") {
  Classifier cls;
  auto c1 = cls.is_cuspidal(P({2, 1, 4, 3, 5}));
  CHECK(c1.status == CuspStatus::NotCuspidal);
  REQUIRE(c1.blocking_window.has_value());
  CHECK(c1.blocking_window->first == P({2, 1, 4, 3}));

  CHECK(cls.is_cuspidal(P({4, 2, 6, 1, 5, 3})).status == CuspStatus::Cuspidal);
  CHECK(cls.is_cuspidal(Permutation::identity(5)).status == CuspStatus::NotCuspidal);
  CHECK(cls.is_cuspidal(P({2, 1, 4, 3})).status == CuspStatus::Cuspidal);
}

TEST_CASE("paranoid mode agrees across routes at small rank") {
  ClassifierOptions opt;
  opt.paranoid = true;
  Classifier cls(opt);
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : involutions_of(n)) {
      Verdict v = cls.classify(w);  // throws on any route disagreement
      CHECK(v.status != KStatus::Unknown);
      auto cv = cls.is_cuspidal(w);  // paranoid checks every window
      CHECK(cv.status != CuspStatus::Unknown);
    }
}

TEST_CASE("scan over S_4 and S_5 with the auto strategy") {
  Classifier cls;
  RankTable t4 = cls.cuspidal_scan(4);
  CHECK(strs(t4.negatives) == std::set<std::string>{"2143"});
  CHECK(strs(t4.cuspidals) == std::set<std::string>{"2143"});

  RankTable t5 = cls.cuspidal_scan(5);
  CHECK(strs(t5.negatives) ==
        std::set<std::string>{"21435", "13254", "21543", "32154", "14325"});
  CHECK(strs(t5.cuspidals) == std::set<std::string>{"14325"});

  // full scan over all permutations: verdicts constant on left cells
  RankTable t4all = cls.cuspidal_scan(4, false);
  CHECK(strs(t4all.negatives) == std::set<std::string>{"2143", "3142"});
}

TEST_CASE("scan with kh strategy matches the table scan, including jobs") {
  ClassifierOptions opt;
  opt.jobs = 2;
  Classifier cls(opt);
  RankTable t5 = cls.cuspidal_scan(5, true, Strategy::Kh5);
  CHECK(strs(t5.negatives) ==
        std::set<std::string>{"21435", "13254", "21543", "32154", "14325"});
  CHECK(strs(t5.cuspidals) == std::set<std::string>{"14325"});

  RankTable t5kh4 = cls.cuspidal_scan(5, true, Strategy::Kh4);
  CHECK(t5kh4.negatives == t5.negatives);
}

TEST_CASE("fc criterion agrees with the kh oracle on two-row involutions") {
  Classifier cls;
  for (int n = 2; n <= 6; ++n)
    for (const auto& T : syt_at_most_two_rows(n)) {
      Permutation w = rs_inverse(T, T);
      CHECK(cls.classify(w, Strategy::Fc).status == cls.classify(w, Strategy::Kh5).status);
      CHECK(cls.classify(w, Strategy::Kh5).status == cls.classify(w, Strategy::Kh4).status);
    }
}

TEST_CASE("verdicts are constant on left cells") {
  Classifier cls;
  for (int n = 4; n <= 6; ++n) {
    KLCache& C = cls.cache(n);
    C.fill_all();
    const SnTable& sn = C.sn();
    for (const auto& members : C.left_cells().members) {
      KStatus st = cls.classify(sn.perm(members[0])).status;
      for (PermId m : members) CHECK(cls.classify(sn.perm(m)).status == st);
    }
  }
}

TEST_CASE("negativity is closed under taking windows, S_6") {
  Classifier cls;
  uint64_t f = 720;
  for (uint64_t r = 0; r < f; ++r) {
    Permutation x = Permutation::from_lex_rank(r, 6);
    bool some_window_negative = false;
    for (int k = 4; k < 6 && !some_window_negative; ++k)
      for (int s = 1; s + k - 1 <= 6; ++s)
        if (cls.classify(consecutive_pattern(x, s, k)).status == KStatus::Negative) {
          some_window_negative = true;
          break;
        }
    if (some_window_negative) CHECK(cls.classify(x).status == KStatus::Negative);
  }
}

TEST_CASE("family verification at desk scale") {
  Classifier cls;
  FamilyReport tau = cls.verify_family(Family::Tau, 10);
  CHECK(tau.all_ok);
  FamilyReport inv2 = cls.verify_family(Family::Inv2, 7);
  CHECK(inv2.all_ok);
  CHECK(inv2.checks.size() == 3);
  FamilyReport u = cls.verify_family(Family::U, 7);
  CHECK(u.all_ok);
  FamilyReport sig = cls.verify_family(Family::SigmaNI, 7);
  CHECK(sig.all_ok);
  CHECK(sig.checks.size() == 3);  // i=3 at n=6; i=3,4 at n=7
  CHECK_THROWS_AS(cls.verify_family(Family::U, 9), Error);
}

TEST_CASE("degenerate ranks") {
  Classifier cls;
  CHECK(cls.classify(Permutation()).status == KStatus::Positive);
  CHECK(cls.classify(Permutation::identity(1)).status == KStatus::Positive);
  CHECK(cls.is_cuspidal(Permutation::identity(1)).status == CuspStatus::NotCuspidal);
  RankTable t1 = cls.cuspidal_scan(1);
  CHECK(t1.negatives.empty());
  RankTable t0 = cls.cuspidal_scan(0);
  CHECK(t0.negatives.empty());
}

TEST_CASE("kh witness does not depend on the cell representative") {
  Classifier cls;
  Verdict a = cls.classify(Permutation::from_one_line({2, 1, 4, 3}), Strategy::Kh5);
  Verdict b = cls.classify(Permutation::from_one_line({3, 1, 4, 2}), Strategy::Kh5);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.witness->first == b.witness->first);
  CHECK(a.witness->second == b.witness->second);
  CHECK(a.witness->first.lex_rank() < a.witness->second.lex_rank());
}

TEST_CASE("fc cuspidal involutions per rank") {
  Classifier cls;
  CHECK(cls.fc_cuspidal_involutions(7).empty());
  auto got = cls.fc_cuspidal_involutions(6);
  std::vector<Permutation> expect{tau_element(3, 1), tau_element(3, 2)};
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
}
