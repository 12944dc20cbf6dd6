#pragma once

#include <functional>
#include <memory>
#include <string>

#include "cellkit/hecke.hpp"

namespace cellkit {

struct CacheInfo {
  int n = 0;
  int version = 0;
  std::string normalization;
  uint64_t entries = 0;
  bool complete = false;
};

// One JSON value per line: a header object, one [x_id, w_id, [[exp,coeff],..]]
// entry per stored polynomial (rows contiguous, diagonal entries implied), and
// a {"complete":true,...} footer that marks a finished build.
void cache_save(KLCache& C, const std::string& path,
                const std::function<void(uint32_t, uint32_t)>& progress = {});
std::unique_ptr<KLCache> cache_load(const std::string& path);
CacheInfo cache_info(const std::string& path);

// Build (or finish) the rank-n cache at path.  With resume, a complete file
// is simply loaded and a truncated one is salvaged row by row.
std::unique_ptr<KLCache> cache_build(int n, const std::string& path, bool resume,
                                     const std::function<void(uint32_t, uint32_t)>& progress = {});

// Default cache location: $CELLKIT_CACHE_DIR/s<n>.klc when the variable is set.
std::string default_cache_path(int n);

}  // namespace cellkit
