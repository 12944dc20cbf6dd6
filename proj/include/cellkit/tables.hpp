#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cellkit/perm.hpp"

namespace cellkit {

// Published small-rank ground truth.  Ranks 4..6 list every Kostant negative
// involution; rank 7 lists the cuspidal involutions together with the total
// count of negative involutions (the full rank-7 negative set is recovered
// from these via pattern propagation, which is exactly how the classifier
// uses it).
struct BuiltinTable {
  int n;
  std::vector<std::string> negatives;  // empty for n == 7
  std::vector<std::string> cuspidals;
  int negative_involution_count;       // -1 when not recorded
};

const std::vector<BuiltinTable>& builtin_tables();
const BuiltinTable* builtin_table(int n);

// sha256 of the canonical serialization, pinned by a test
std::string builtin_tables_canonical();
std::string builtin_tables_checksum();

// Family membership for pattern propagation: is this involution one of the
// verified cuspidal family members at its rank?
bool is_family_cuspidal(const Permutation& involution);

}  // namespace cellkit
