#include "cellkit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "cellkit/cache_io.hpp"
#include "cellkit/textio.hpp"

namespace cellkit {

namespace {

struct Recorder {
  SuiteReport& rep;
  void eq(const std::string& desc, const std::string& expected, const std::string& actual) {
    rep.checks.push_back({desc, expected, actual, expected == actual});
  }
  void yes(const std::string& desc, bool ok, const std::string& detail = "") {
    rep.checks.push_back({desc, "true", ok ? "true" : (detail.empty() ? "false" : detail), ok});
  }
};

std::string perm_set_str(const std::set<Permutation>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& p : s) {
    if (!first) os << ',';
    os << p.str();
    first = false;
  }
  os << '}';
  return os.str();
}

std::set<Permutation> set_from_strings(const std::vector<std::string>& v) {
  std::set<Permutation> out;
  for (const auto& s : v) out.insert(parse_perm(s));
  return out;
}

// Kh^(V) scan at rank n, compared against the published table.
void table_suite(Recorder& rec, int n, const SuiteOptions& opt) {
  ClassifierOptions copt;
  copt.jobs = opt.jobs;
  copt.paranoid = opt.paranoid;
  Classifier cls(copt);
  if (n == 7) {
    std::string path = opt.cache_path.empty() ? default_cache_path(7) : opt.cache_path;
    check(!path.empty(), Err::CacheNotFilled,
          "the s7 suite needs a prebuilt rank-7 cache (--cache or CELLKIT_CACHE_DIR)");
    cls.adopt_cache(cache_load(path));
  } else if (!opt.cache_path.empty()) {
    auto cache = cache_load(opt.cache_path);
    check(cache->rank() == n, Err::VersionMismatch, "cache rank does not match the suite");
    cls.adopt_cache(std::move(cache));
  }
  RankTable table = cls.cuspidal_scan(n, true, Strategy::Kh5);
  const BuiltinTable* bt = builtin_table(n);
  if (n <= 6) {
    rec.eq("Kh(V)-negative involutions of S_" + std::to_string(n),
           perm_set_str(set_from_strings(bt->negatives)), perm_set_str(table.negatives));
  } else {
    rec.eq("number of Kh(V)-negative involutions of S_7",
           std::to_string(bt->negative_involution_count), std::to_string(table.negatives.size()));
  }
  rec.eq("Kh(V)-cuspidal involutions of S_" + std::to_string(n),
         perm_set_str(set_from_strings(bt->cuspidals)), perm_set_str(table.cuspidals));
  if (n == 4) {
    // extending by left cells: the negative permutations of S_4
    std::set<Permutation> all_neg;
    KLCache& C = cls.cache(4);
    for (PermId id = 0; id < C.sn().size(); ++id) {
      Permutation w = C.sn().perm(id);
      if (table.negatives.count(duflo_of_left_cell(w))) all_neg.insert(w);
    }
    rec.eq("negative permutations of S_4 (cell extension)", "{2143,3142}", perm_set_str(all_neg));
  }
}

Laurent poly_from_pairs(std::initializer_list<std::pair<int, long long>> terms) {
  Laurent p;
  for (auto& [e, c] : terms) p.add_scaled(Laurent::monomial(e, c));
  return p;
}

void dualkl_suite(Recorder& rec, const SuiteOptions&) {
  KLCache C(6);
  const SnTable& sn = C.sn();
  PermId sigma = sn.id_of(sigma_ni(6, 3));
  PermId x = sn.id_of(x_ni(6, 3));
  PermId y = sn.id_of(y_ni(6, 3));

  HeckeElt hat_sigma = dual_kl_element(C, sigma);
  HeckeElt prod_x = multiply_standard(C, hat_sigma, kl_element(C, x));
  HeckeElt prod_y = multiply_standard(C, hat_sigma, kl_element(C, y));
  rec.yes("hat H_sigma63 * uH_x63 equals hat H_sigma63 * uH_y63", prod_x == prod_y);

  auto expansion = express_in_dual_kl(C, prod_x);

  // the published expansion, indices as reduced words
  const Laurent one = Laurent::one();
  const Laurent g1 = poly_from_pairs({{1, 1}, {-1, 1}});
  const Laurent g2 = poly_from_pairs({{1, 2}, {-1, 2}});
  const Laurent q2 = poly_from_pairs({{2, 1}, {0, 2}, {-2, 1}});
  const Laurent q3 = poly_from_pairs({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}});
  const std::vector<std::pair<std::vector<int>, Laurent>> printed = {
      {{3, 2, 1, 4, 5}, one},
      {{1, 2, 3, 2, 1, 4, 5}, one},
      {{1, 3, 2, 1, 4, 3, 5}, one},
      {{3, 2, 1, 4, 5, 4, 3}, one},
      {{3, 4, 5, 4, 3, 2, 1}, one},
      {{1, 2, 3, 2, 1, 4, 5, 4, 3}, one},
      {{1, 2, 3, 4, 5, 4, 3, 2, 1}, one},
      {{1, 3, 2, 4, 5, 4, 3, 2, 1}, one},
      {{1, 3, 2, 1, 4, 5}, g1},
      {{3, 2, 1, 4, 5, 4}, g1},
      {{1, 2, 3, 2, 1, 4, 5, 4}, g1},
      {{1, 3, 2, 1, 4, 3, 5, 4}, g1},
      {{1, 3, 2, 1, 4, 5, 4, 3}, g2},
      {{1, 3, 4, 5, 4, 3, 2, 1}, g1},
      {{3, 2, 1, 4, 5, 4, 3, 2}, g1},
      {{1, 2, 3, 2, 1, 4, 5, 4, 3, 2}, g1},
      {{1, 3, 2, 4, 3, 5, 4, 3, 2, 1}, g1},
      {{1, 3, 2, 1, 4, 5, 4}, q2},
      {{1, 3, 2, 1, 4, 3, 5, 4, 3}, q2},
      {{1, 3, 2, 1, 4, 5, 4, 3, 2}, q2},
      {{1, 3, 2, 1, 4, 3, 5, 4, 3, 2}, q3},
  };

  std::map<PermId, Laurent> expected;
  for (auto& [word, c] : printed) expected[sn.id_of(Permutation::from_word(word, 6))] = c;
  rec.eq("expansion term count", std::to_string(expected.size()),
         std::to_string(expansion.size()));
  bool all_match = true;
  std::string first_bad;
  for (auto& [u, c] : expected) {
    auto it = expansion.find(u);
    if (it == expansion.end() || !(it->second == c)) {
      all_match = false;
      if (first_bad.empty()) first_bad = sn.perm(u).str();
    }
  }
  rec.yes("every printed coefficient matches", all_match,
          first_bad.empty() ? "" : "mismatch at " + first_bad);
  PermId heavy = sn.id_of(Permutation::from_word({1, 3, 2, 1, 4, 3, 5, 4, 3, 2}, 6));
  rec.eq("coefficient on hat H_{1321435432}", laurent_str(q3),
         laurent_str(expansion.count(heavy) ? expansion[heavy] : Laurent{}));

  // cross-route: the sweep in dual coordinates must reproduce the expansion
  C.fill_all();
  C.mu_up();
  C.left_cells();
  KhSweep sweep(C, sigma);
  rec.yes("triangular route agrees with mu-recursion route", sweep.product(x) == expansion);
}

void products_suite(Recorder& rec, const SuiteOptions&) {
  KLCache C(6);
  const SnTable& sn = C.sn();
  const Laurent q2 = poly_from_pairs({{2, 1}, {0, 2}, {-2, 1}});
  const Laurent q3 = poly_from_pairs({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}});

  PermId x = sn.id_of(x_ni(6, 3));
  PermId xinv = sn.inverse(x);
  PermId yinv = sn.inverse(sn.id_of(y_ni(6, 3)));
  PermId t1232435 = sn.id_of(Permutation::from_word({1, 2, 3, 2, 4, 3, 5}, 6));
  PermId t12321 = sn.id_of(Permutation::from_word({1, 2, 3, 2, 1}, 6));
  PermId t12324321 = sn.id_of(Permutation::from_word({1, 2, 3, 2, 4, 3, 2, 1}, 6));

  HeckeElt lhs_a = multiply_standard(C, kl_element(C, x), kl_element(C, yinv));
  HeckeElt rhs_a;
  rhs_a.n = 6;
  rhs_a.add_scaled(kl_element(C, t1232435), q3);
  rec.yes("uH_x63 uH_{y63^-1} = (v^3+3v+3v^-1+v^-3) uH_{1232435}", lhs_a == rhs_a);

  HeckeElt lhs_c = multiply_standard(C, kl_element(C, x), kl_element(C, xinv));
  HeckeElt rhs_c;
  rhs_c.n = 6;
  rhs_c.add_scaled(kl_element(C, t12321), q3);
  rhs_c.add_scaled(kl_element(C, t12324321), q2);
  rec.yes("uH_x63 uH_{x63^-1} = (v^3+3v+3v^-1+v^-3) uH_{12321} + (v^2+2+v^-2) uH_{12324321}",
          lhs_c == rhs_c);

  PermId sigma = sn.id_of(sigma_ni(6, 3));
  HeckeElt lhs_d = multiply_standard(C, dual_kl_element(C, sigma), kl_element(C, t12324321));
  rec.yes("hat H_sigma63 uH_{12324321} = 0", lhs_d.is_zero());
}

void mu_suite(Recorder& rec, const SuiteOptions&) {
  for (int n : {4, 5, 6}) {
    KLCache C(n);
    const SnTable& sn = C.sn();
    PermId t1n = sn.id_of(Permutation::transposition(1, n, n));
    PermId t2n = sn.id_of(Permutation::transposition(2, n, n));
    bool all_zero = true;
    std::string bad;
    for (PermId a = 0; a < sn.size(); ++a) {
      if (!sn.bruhat_leq_ids(a, t2n)) continue;
      if (C.mu(a, t1n) != 0) {
        all_zero = false;
        bad = sn.perm(a).str();
        break;
      }
    }
    rec.yes("mu(a,(1," + std::to_string(n) + ")) = 0 for all a <= (2," + std::to_string(n) + ")",
            all_zero, bad);

    Laurent expect = Laurent::one();
    for (int t = 0; t < n - 3; ++t) expect = expect * poly_from_pairs({{0, 1}, {1, 1}});
    PermId s1sn = sn.id_of(Permutation::from_word({1, n - 1}, n));
    rec.eq("classical P_{s1 s_{n-1},(1," + std::to_string(n) + ")} = (1+q)^" +
               std::to_string(n - 3),
           laurent_str(expect, "q"), laurent_str(C.kl_poly_classical(s1sn, t1n), "q"));
  }
  {
    // single demand-filled pair in S_7; no full cache needed
    KLCache C(7);
    const SnTable& sn = C.sn();
    PermId u7 = sn.id_of(u_element(7));
    std::vector<int> x_line{3, 7, 2, 4, 6, 1, 5};
    PermId x = sn.id_of(Permutation::from_one_line(x_line));
    rec.eq("mu(x, u_7)", "1", std::to_string(C.mu(x, u7)));
  }
}

void fc_suite(Recorder& rec, const SuiteOptions& opt) {
  ClassifierOptions copt;
  copt.jobs = opt.jobs;
  Classifier cls(copt);

  // both diagram routes agree on every fully commutative involution
  for (int n = 1; n <= 10; ++n) {
    uint64_t count = 0;
    bool agree = true;
    std::string bad;
    for (const auto& T : syt_at_most_two_rows(n)) {
      Permutation w = rs_inverse(T, T);
      ++count;
      try {
        fc_kostant_positive(w);
      } catch (const Error& e) {
        agree = false;
        bad = w.str();
        break;
      }
    }
    // #involutions with at most two rows = C(n, floor(n/2))
    uint64_t expect = 1;
    for (int k = 1; k <= n / 2; ++k) expect = expect * (n - k + 1) / k;
    rec.yes("cup criterion and factorization agree on " + std::to_string(count) +
                " fc involutions of S_" + std::to_string(n),
            agree && count == expect, bad);
  }

  for (int n = 4; n <= 14; ++n) {
    std::vector<Permutation> expected;
    if (n % 2 == 0)
      for (int a = 1; a <= n / 2 - 1; ++a) expected.push_back(tau_element(n / 2, a));
    std::sort(expected.begin(), expected.end());
    std::vector<Permutation> got = cls.fc_cuspidal_involutions(n);
    std::set<Permutation> eset(expected.begin(), expected.end()),
        gset(got.begin(), got.end());
    rec.eq("fc cuspidal involutions of S_" + std::to_string(n), perm_set_str(eset),
           perm_set_str(gset));
  }

  const uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) {
    uint64_t f = 1, cnt = 0;
    for (int i = 2; i <= n; ++i) f *= i;
    for (uint64_t r = 0; r < f; ++r)
      if (is_fully_commutative(Permutation::from_lex_rank(r, n))) ++cnt;
    rec.eq("#fc elements of S_" + std::to_string(n), std::to_string(catalan[n]),
           std::to_string(cnt));
  }
}

void families_suite(Recorder& rec, const SuiteOptions& opt) {
  ClassifierOptions copt;
  copt.jobs = opt.jobs;
  copt.paranoid = opt.paranoid;
  Classifier cls(copt);

  for (Family f : {Family::Inv2, Family::U, Family::SigmaNI}) {
    FamilyReport r = cls.verify_family(f, 7);
    for (const auto& c : r.checks)
      rec.yes(std::string(family_name(f)) + ": " + c.label + " cuspidal", c.ok, c.detail);
  }
  for (int m = 2; m <= 7; ++m) {
    Verdict v = cls.classify(inv_element(1, m - 1, m));
    rec.eq("inv(1," + std::to_string(m - 1) + ") in S_" + std::to_string(m),
           "positive", kstatus_name(v.status));
  }
  bool a1 = true;
  for (int n = 3; n <= 8; ++n)
    for (int i = 1; i + 1 <= n - 1; ++i)
      a1 = a1 && a_function(Permutation::from_word({i, i + 1}, n)) == 1;
  rec.yes("a(s_i s_{i+1}) = 1", a1);
  rec.eq("a(x_{6,3})", "3", std::to_string(a_function(x_ni(6, 3))));
  rec.eq("a(y_{6,3})", "3", std::to_string(a_function(y_ni(6, 3))));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "s4", "s5", "s6", "s7", "lemma-dualkl", "lemma-products", "mu-lemmas",
      "fc-theorem", "families"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = name;
  Recorder rec{rep};
  auto t0 = std::chrono::steady_clock::now();
  if (name == "s4") table_suite(rec, 4, opt);
  else if (name == "s5") table_suite(rec, 5, opt);
  else if (name == "s6") table_suite(rec, 6, opt);
  else if (name == "s7") table_suite(rec, 7, opt);
  else if (name == "lemma-dualkl") dualkl_suite(rec, opt);
  else if (name == "lemma-products") products_suite(rec, opt);
  else if (name == "mu-lemmas") mu_suite(rec, opt);
  else if (name == "fc-theorem") fc_suite(rec, opt);
  else if (name == "families") families_suite(rec, opt);
  else fail(Err::ParamOutOfRange, "unknown suite '" + name + "'");
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

}  // namespace cellkit
