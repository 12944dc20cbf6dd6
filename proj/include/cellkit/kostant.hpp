#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cellkit/hecke.hpp"
#include "cellkit/tables.hpp"
#include "cellkit/tl.hpp"

namespace cellkit {

enum class KStatus { Positive, Negative, Unknown };
enum class KMethod { Table, FcCriterion, PatternPropagation, KhV, KhAtOne, None };

const char* kstatus_name(KStatus s);
const char* kmethod_name(KMethod m);

struct Verdict {
  KStatus status = KStatus::Unknown;
  KMethod method = KMethod::None;
  bool conjectural = false;  // set on Kh-backed verdicts
  Permutation duflo;
  // for PatternPropagation negatives: the contained pattern and its start
  std::optional<std::pair<Permutation, int>> pattern;
  // for Kh negatives: the witness pair
  std::optional<std::pair<Permutation, Permutation>> witness;
};

enum class Strategy { Auto, Fc, Kh5, Kh4 };
Strategy strategy_from_name(const std::string& name);

enum class CuspStatus { Cuspidal, NotCuspidal, Unknown };

struct CuspidalVerdict {
  CuspStatus status = CuspStatus::Unknown;
  Verdict self;
  // for NotCuspidal negatives: a proper window that classifies negative
  std::optional<std::pair<Permutation, int>> blocking_window;
};

struct RankTable {
  int n = 0;
  std::set<Permutation> negatives;
  std::set<Permutation> cuspidals;
  enum class Source { BuiltIn, Computed } source = Source::Computed;
};

enum class Family { Tau, Inv2, U, SigmaNI };
Family family_from_name(const std::string& name);
const char* family_name(Family f);

struct FamilyCheck {
  int n = 0;
  std::string label;
  bool ok = false;
  std::string detail;
};

struct FamilyReport {
  Family family = Family::Tau;
  std::vector<FamilyCheck> checks;
  bool all_ok = true;
};

struct ClassifierOptions {
  int kh_max_rank = 7;   // Kh oracle refuses larger ranks
  int fill_max_rank = 6; // ranks the classifier may fill in memory by itself
  bool paranoid = false; // run all applicable routes / check every window
  int jobs = 1;
};

// Verdict oracle with precedence Table -> FC criterion -> pattern
// propagation -> Kh^(V); the first three are theorem backed, the Kh verdicts
// are conjectural and flagged as such.
class Classifier {
 public:
  explicit Classifier(ClassifierOptions opt = {});

  ClassifierOptions& options() { return opt_; }

  KLCache& cache(int n);          // builds and fills if the budget allows
  void adopt_cache(std::unique_ptr<KLCache> c);
  bool has_cache(int n) const;

  Verdict classify(const Permutation& w, Strategy strategy = Strategy::Auto);
  CuspidalVerdict is_cuspidal(const Permutation& w, Strategy strategy = Strategy::Auto);
  RankTable cuspidal_scan(int n, bool involutions_only = true,
                          Strategy strategy = Strategy::Auto);
  FamilyReport verify_family(Family f, int max_n);

  // window scan against built-in tables and verified family members
  std::optional<std::pair<Permutation, int>> table_propagation(const Permutation& x);

  // fully commutative cuspidal involutions of S_n via the diagram criterion only
  std::vector<Permutation> fc_cuspidal_involutions(int n);

 private:
  Verdict classify_uncached(const Permutation& duflo, Strategy strategy);
  std::optional<Verdict> route_table(const Permutation& duflo);
  std::optional<Verdict> route_fc(const Permutation& duflo);
  std::optional<Verdict> route_pattern(const Permutation& duflo);
  std::optional<Verdict> route_table_complete7(const Permutation& duflo);
  std::optional<Verdict> route_kh(const Permutation& duflo, KhMode mode, bool throw_on_budget);
  void prepare_for_scan(int n, Strategy strategy);

  ClassifierOptions opt_;
  std::map<int, std::unique_ptr<KLCache>> caches_;
  std::map<std::tuple<int, uint64_t, int>, Verdict> memo_;
  std::mutex mutex_;
};

// First pattern from the given set consecutively contained in x, scanning
// shorter patterns first, then smaller start indices.
std::optional<std::pair<Permutation, int>> propagation_check(
    const Permutation& x, const std::vector<Permutation>& known_negatives);

std::vector<Permutation> involutions_of(int n);

}  // namespace cellkit
