#include "cellkit/kostant.hpp"

#include <algorithm>
#include <thread>

namespace cellkit {

const char* kstatus_name(KStatus s) {
  switch (s) {
    case KStatus::Positive: return "positive";
    case KStatus::Negative: return "negative";
    case KStatus::Unknown: return "unknown";
  }
  return "?";
}

const char* kmethod_name(KMethod m) {
  switch (m) {
    case KMethod::Table: return "table";
    case KMethod::FcCriterion: return "fc";
    case KMethod::PatternPropagation: return "pattern";
    case KMethod::KhV: return "kh5";
    case KMethod::KhAtOne: return "kh4";
    case KMethod::None: return "none";
  }
  return "?";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "auto") return Strategy::Auto;
  if (name == "fc") return Strategy::Fc;
  if (name == "kh5") return Strategy::Kh5;
  if (name == "kh4") return Strategy::Kh4;
  fail(Err::ParamOutOfRange, "unknown method '" + name + "'");
}

Family family_from_name(const std::string& name) {
  if (name == "tau") return Family::Tau;
  if (name == "inv2") return Family::Inv2;
  if (name == "u") return Family::U;
  if (name == "sigma") return Family::SigmaNI;
  fail(Err::ParamOutOfRange, "unknown family '" + name + "'");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Tau: return "tau";
    case Family::Inv2: return "inv2";
    case Family::U: return "u";
    case Family::SigmaNI: return "sigma";
  }
  return "?";
}

Classifier::Classifier(ClassifierOptions opt) : opt_(opt) {}

KLCache& Classifier::cache(int n) {
  auto it = caches_.find(n);
  if (it != caches_.end()) return *it->second;
  check(n <= opt_.fill_max_rank, Err::BudgetExceeded,
        "rank " + std::to_string(n) + " needs a prebuilt cache (see 'cellkit cache build')");
  auto c = std::make_unique<KLCache>(n);
  c->fill_all();
  auto& ref = *c;
  caches_[n] = std::move(c);
  return ref;
}

void Classifier::adopt_cache(std::unique_ptr<KLCache> c) {
  int n = c->rank();
  caches_[n] = std::move(c);
}

bool Classifier::has_cache(int n) const { return caches_.count(n) != 0; }

namespace {

bool in_builtin_negatives(const Permutation& d) {
  const BuiltinTable* t = builtin_table(d.rank());
  if (!t) return false;
  std::string s = d.str();
  return std::find(t->negatives.begin(), t->negatives.end(), s) != t->negatives.end();
}

bool in_builtin_cuspidals(const Permutation& d) {
  const BuiltinTable* t = builtin_table(d.rank());
  if (!t) return false;
  std::string s = d.str();
  return std::find(t->cuspidals.begin(), t->cuspidals.end(), s) != t->cuspidals.end();
}

// known-negative test for window patterns, theorem backed at every rank:
// complete tables for ranks <= 6, the published cuspidal cells at rank 7,
// and verified family members at any rank.
bool known_negative_involution(const Permutation& d) {
  int k = d.rank();
  if (k <= 3) return false;
  if (k <= 6) return in_builtin_negatives(d);
  if (k == 7 && in_builtin_cuspidals(d)) return true;
  return is_family_cuspidal(d);
}

}  // namespace

std::optional<std::pair<Permutation, int>> Classifier::table_propagation(const Permutation& x) {
  int n = x.rank();
  for (int k = 4; k < n; ++k)
    for (int start = 1; start + k - 1 <= n; ++start) {
      Permutation p = consecutive_pattern(x, start, k);
      if (known_negative_involution(duflo_of_left_cell(p))) return std::make_pair(p, start);
    }
  return std::nullopt;
}

std::optional<Verdict> Classifier::route_table(const Permutation& d) {
  int n = d.rank();
  Verdict v;
  v.method = KMethod::Table;
  v.duflo = d;
  if (n <= 3) {
    v.status = KStatus::Positive;
    return v;
  }
  const BuiltinTable* t = builtin_table(n);
  if (!t) return std::nullopt;
  if (n <= 6) {
    v.status = in_builtin_negatives(d) ? KStatus::Negative : KStatus::Positive;
    return v;
  }
  // rank 7: the table lists cuspidal cells only; a negative membership
  // answer is immediate, positivity is settled after the pattern route
  if (in_builtin_cuspidals(d)) {
    v.status = KStatus::Negative;
    return v;
  }
  return std::nullopt;
}

std::optional<Verdict> Classifier::route_fc(const Permutation& d) {
  if (!is_fully_commutative(d)) return std::nullopt;
  Verdict v;
  v.method = KMethod::FcCriterion;
  v.duflo = d;
  v.status = fc_kostant_positive(d) ? KStatus::Positive : KStatus::Negative;
  return v;
}

std::optional<Verdict> Classifier::route_pattern(const Permutation& d) {
  auto hit = table_propagation(d);
  if (!hit) return std::nullopt;
  Verdict v;
  v.method = KMethod::PatternPropagation;
  v.duflo = d;
  v.status = KStatus::Negative;
  v.pattern = hit;
  return v;
}

std::optional<Verdict> Classifier::route_table_complete7(const Permutation& d) {
  // an involution of S_7 that is not in a published cuspidal cell and
  // contains no smaller negative pattern is positive, because the rank-7
  // cuspidal list is complete
  if (d.rank() != 7) return std::nullopt;
  if (in_builtin_cuspidals(d) || table_propagation(d)) return std::nullopt;
  Verdict v;
  v.method = KMethod::Table;
  v.duflo = d;
  v.status = KStatus::Positive;
  return v;
}

std::optional<Verdict> Classifier::route_kh(const Permutation& d, KhMode mode,
                                            bool throw_on_budget) {
  int n = d.rank();
  if (n > opt_.kh_max_rank || (n > opt_.fill_max_rank && !has_cache(n))) {
    if (throw_on_budget)
      fail(Err::BudgetExceeded, "Kh oracle unavailable at rank " + std::to_string(n));
    return std::nullopt;
  }
  KLCache& C = cache(n);
  check(C.fully_filled(), Err::CacheNotFilled, "Kh oracle needs a fully filled cache");
  KhVerdict kv = kh_witness(C, C.sn().id_of(d), mode);
  Verdict v;
  v.method = mode == KhMode::AtV ? KMethod::KhV : KMethod::KhAtOne;
  v.conjectural = true;
  v.duflo = d;
  v.status = kv.negative ? KStatus::Negative : KStatus::Positive;
  if (kv.witness)
    v.witness = std::make_pair(C.sn().perm(kv.witness->first), C.sn().perm(kv.witness->second));
  return v;
}

Verdict Classifier::classify_uncached(const Permutation& d, Strategy strategy) {
  if (strategy == Strategy::Fc) {
    auto v = route_fc(d);
    if (v) return *v;
    Verdict u;
    u.duflo = d;
    return u;  // Unknown: criterion does not apply
  }
  if (strategy == Strategy::Kh5 || strategy == Strategy::Kh4) {
    auto v = route_kh(d, strategy == Strategy::Kh5 ? KhMode::AtV : KhMode::AtOne, true);
    return *v;
  }

  std::vector<Verdict> conclusive;
  auto consider = [&](std::optional<Verdict> v) {
    if (v && v->status != KStatus::Unknown) conclusive.push_back(*v);
  };
  consider(route_table(d));
  if (conclusive.empty() || opt_.paranoid) consider(route_fc(d));
  if (conclusive.empty() || opt_.paranoid) consider(route_pattern(d));
  if (conclusive.empty() || opt_.paranoid) consider(route_table_complete7(d));
  if (conclusive.empty()) consider(route_kh(d, KhMode::AtV, false));

  if (conclusive.empty()) {
    Verdict u;
    u.duflo = d;
    return u;
  }
  if (opt_.paranoid) {
    for (size_t i = 1; i < conclusive.size(); ++i)
      if (conclusive[i].status != conclusive[0].status) {
        std::string diag = "routes disagree on " + d.str() + ":";
        for (auto& v : conclusive)
          diag += std::string(" ") + kmethod_name(v.method) + "=" + kstatus_name(v.status);
        fail(Err::Disagreement, diag);
      }
  }
  return conclusive.front();
}

Verdict Classifier::classify(const Permutation& w, Strategy strategy) {
  Permutation d = w.is_involution() ? w : duflo_of_left_cell(w);
  auto key = std::make_tuple(d.rank(), d.lex_rank(), static_cast<int>(strategy));
  {
    std::lock_guard<std::mutex> lk(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Verdict v = classify_uncached(d, strategy);
  {
    std::lock_guard<std::mutex> lk(mutex_);
    memo_[key] = v;
  }
  return v;
}

CuspidalVerdict Classifier::is_cuspidal(const Permutation& w, Strategy strategy) {
  CuspidalVerdict out;
  out.self = classify(w, strategy);
  if (out.self.status == KStatus::Unknown) return out;
  if (out.self.status == KStatus::Positive) {
    out.status = CuspStatus::NotCuspidal;
    return out;
  }
  const Permutation& d = out.self.duflo;
  int n = d.rank();
  // negativity of any shorter window propagates to a maximal one, so the two
  // maximal windows suffice; paranoid mode checks the reduction empirically
  std::vector<std::pair<int, int>> windows;
  if (opt_.paranoid) {
    for (int k = 1; k < n; ++k)
      for (int start = 1; start + k - 1 <= n; ++start) windows.emplace_back(start, k);
  } else {
    windows = {{2, n - 1}, {1, n - 1}};
  }
  for (auto& [start, k] : windows) {
    Permutation p = consecutive_pattern(d, start, k);
    Verdict pv = classify(p, strategy);
    if (pv.status == KStatus::Negative) {
      out.status = CuspStatus::NotCuspidal;
      out.blocking_window = std::make_pair(p, start);
      return out;
    }
    if (pv.status == KStatus::Unknown) return out;
  }
  out.status = CuspStatus::Cuspidal;
  return out;
}

std::vector<Permutation> involutions_of(int n) {
  check(n <= SnTable::kMaxEnumerableRank, Err::RankUnsupported, "involution enumeration");
  std::vector<Permutation> out;
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  for (uint64_t r = 0; r < f; ++r) {
    Permutation p = Permutation::from_lex_rank(r, n);
    if (p.is_involution()) out.push_back(p);
  }
  return out;
}

void Classifier::prepare_for_scan(int n, Strategy strategy) {
  if (strategy == Strategy::Kh5 || strategy == Strategy::Kh4) {
    for (int k = n; k >= 4 && k >= n - 1; --k) {
      KLCache& C = cache(k);
      C.fill_all();
      C.mu_up();
      C.left_cells();
    }
  }
}

RankTable Classifier::cuspidal_scan(int n, bool involutions_only, Strategy strategy) {
  RankTable table;
  table.n = n;
  table.source = RankTable::Source::Computed;
  std::vector<Permutation> elements =
      involutions_only ? involutions_of(n) : [&] {
        std::vector<Permutation> all;
        uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        for (uint64_t r = 0; r < f; ++r) all.push_back(Permutation::from_lex_rank(r, n));
        return all;
      }();

  prepare_for_scan(n, strategy);

  std::vector<CuspidalVerdict> verdicts(elements.size());
  int jobs = std::max(1, opt_.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < elements.size(); ++i) verdicts[i] = is_cuspidal(elements[i], strategy);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex emu;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= elements.size()) return;
          try {
            verdicts[i] = is_cuspidal(elements[i], strategy);
          } catch (...) {
            std::lock_guard<std::mutex> lk(emu);
            if (!error) error = std::current_exception();
            return;
          }
        }
      });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  for (size_t i = 0; i < elements.size(); ++i) {
    if (verdicts[i].self.status == KStatus::Unknown)
      fail(Err::BudgetExceeded, "scan incomplete: " + elements[i].str() + " is undecided");
    if (verdicts[i].self.status == KStatus::Negative) {
      table.negatives.insert(elements[i]);
      if (verdicts[i].status == CuspStatus::Cuspidal) table.cuspidals.insert(elements[i]);
      check(verdicts[i].status != CuspStatus::Unknown, Err::BudgetExceeded,
            "cuspidality of " + elements[i].str() + " is undecided");
    }
  }
  return table;
}

std::vector<Permutation> Classifier::fc_cuspidal_involutions(int n) {
  std::vector<Permutation> out;
  for (const auto& T : syt_at_most_two_rows(n)) {
    Permutation w = rs_inverse(T, T);
    if (fc_kostant_positive(w)) continue;
    bool cuspidal = true;
    for (int start : {2, 1}) {
      Permutation p = consecutive_pattern(w, start, n - 1);
      if (!fc_kostant_positive(p)) {  // patterns of FC elements stay FC
        cuspidal = false;
        break;
      }
    }
    if (cuspidal) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FamilyReport Classifier::verify_family(Family f, int max_n) {
  FamilyReport rep;
  rep.family = f;
  auto add = [&](int n, const std::string& label, bool ok, const std::string& detail) {
    rep.checks.push_back({n, label, ok, detail});
    rep.all_ok = rep.all_ok && ok;
  };
  auto expect_cuspidal = [&](const Permutation& w, const std::string& label) {
    CuspidalVerdict cv = is_cuspidal(w);
    add(w.rank(), label, cv.status == CuspStatus::Cuspidal,
        cv.status == CuspStatus::Cuspidal ? "cuspidal" : "not cuspidal");
  };

  switch (f) {
    case Family::Tau: {
      for (int n = 4; n <= max_n; ++n) {
        std::vector<Permutation> expected;
        if (n % 2 == 0)
          for (int a = 1; a <= n / 2 - 1; ++a) expected.push_back(tau_element(n / 2, a));
        std::sort(expected.begin(), expected.end());
        std::vector<Permutation> got = fc_cuspidal_involutions(n);
        std::string detail = std::to_string(got.size()) + " fc cuspidal involutions";
        add(n, "fc cuspidal involutions of S_" + std::to_string(n), got == expected, detail);
      }
      break;
    }
    case Family::Inv2: {
      check(max_n <= 7, Err::BudgetExceeded, "inv2 verification beyond rank 7");
      for (int n = 5; n <= max_n; ++n)
        expect_cuspidal(inv_element(2, n - 1, n), "inv(2," + std::to_string(n - 1) + ")");
      break;
    }
    case Family::U: {
      check(max_n <= 7, Err::BudgetExceeded, "u_n verification beyond rank 7");
      for (int n = 7; n <= max_n; ++n) expect_cuspidal(u_element(n), "u_" + std::to_string(n));
      break;
    }
    case Family::SigmaNI: {
      check(max_n <= 7, Err::BudgetExceeded, "sigma verification beyond rank 7");
      for (int n = 6; n <= max_n; ++n)
        for (int i = 3; i <= n - 3; ++i)
          expect_cuspidal(sigma_ni(n, i),
                          "sigma_{" + std::to_string(n) + "," + std::to_string(i) + "}");
      break;
    }
  }
  return rep;
}

std::optional<std::pair<Permutation, int>> propagation_check(
    const Permutation& x, const std::vector<Permutation>& known_negatives) {
  int maxk = 0;
  for (const auto& p : known_negatives) maxk = std::max(maxk, p.rank());
  for (int k = 1; k <= std::min(maxk, x.rank()); ++k)
    for (int start = 1; start + k - 1 <= x.rank(); ++start) {
      Permutation w = consecutive_pattern(x, start, k);
      for (const auto& p : known_negatives)
        if (p == w) return std::make_pair(w, start);
    }
  return std::nullopt;
}

}  // namespace cellkit
