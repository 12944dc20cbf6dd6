#include "cellkit/cache_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace cellkit {

namespace {

using nlohmann::json;

void write_stream(KLCache& C, std::ostream& os) {
  const SnTable& sn = C.sn();
  uint64_t entries = 0;
  os << json{{"format", "klcache"},
             {"version", 1},
             {"n", C.rank()},
             {"normalization", "soergel"}}
            .dump()
     << '\n';
  for (PermId w : sn.ids_by_length()) {
    for (const auto& [x, p] : C.row(w)) {
      if (x == w) continue;  // unitriangular diagonal is implied
      os << '[' << x << ',' << w << ',';
      os << '[';
      bool first = true;
      for (int e = p.lo(); e <= p.hi(); ++e) {
        long long c = p.coeff(e);
        if (c == 0) continue;
        if (!first) os << ',';
        os << '[' << e << ',' << c << ']';
        first = false;
      }
      os << "]]\n";
      ++entries;
    }
  }
  os << json{{"complete", true}, {"entries", entries}}.dump() << '\n';
}

struct ParsedFile {
  CacheInfo info;
  // rows grouped by w in file order; only rows known to be complete
  std::vector<std::pair<PermId, KLCache::Row>> rows;
};

ParsedFile parse_file(const std::string& path, bool allow_partial) {
  std::ifstream is(path);
  check(is.good(), Err::IoError, "cannot open " + path);
  std::string line;
  check(static_cast<bool>(std::getline(is, line)), Err::IoError, "empty cache file " + path);
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    fail(Err::IoError, "bad cache header: " + std::string(e.what()));
  }
  check(header.is_object() && header.value("format", "") == "klcache", Err::IoError,
        "not a klcache file: " + path);
  check(header.value("version", -1) == 1, Err::VersionMismatch,
        "unsupported cache version in " + path);
  check(header.value("normalization", "") == "soergel", Err::VersionMismatch,
        "unsupported normalization in " + path);

  ParsedFile out;
  out.info.n = header.value("n", -1);
  out.info.version = 1;
  out.info.normalization = "soergel";
  check(out.info.n >= 0 && out.info.n <= SnTable::kMaxEnumerableRank, Err::IoError,
        "bad rank in cache header");
  uint64_t size = 1;
  for (int i = 2; i <= out.info.n; ++i) size *= i;

  KLCache::Row cur;
  PermId cur_w = UINT32_MAX;
  bool footer = false;
  uint64_t entries = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception&) {
      if (allow_partial) break;  // truncated trailing line
      fail(Err::IoError, "corrupt cache line in " + path);
    }
    if (j.is_object()) {
      footer = j.value("complete", false);
      check(!footer || j.value("entries", entries) == entries, Err::IoError,
            "cache entry count mismatch in " + path);
      break;
    }
    check(j.is_array() && j.size() == 3, Err::IoError, "bad cache entry");
    PermId x = j[0].get<PermId>(), w = j[1].get<PermId>();
    check(x < size && w < size, Err::IoError, "cache entry out of range for rank");
    Laurent p;
    for (const auto& t : j[2]) p.add_scaled(Laurent::monomial(t[0].get<int>(), t[1].get<long long>()));
    if (w != cur_w) {
      if (cur_w != UINT32_MAX) out.rows.emplace_back(cur_w, std::move(cur));
      cur = KLCache::Row{};
      cur_w = w;
    }
    cur.emplace_back(x, std::move(p));
    ++entries;
  }
  if (cur_w != UINT32_MAX && footer) out.rows.emplace_back(cur_w, std::move(cur));
  // without the footer the final group may be truncated mid-row; drop it
  if (cur_w != UINT32_MAX && !footer && allow_partial && !cur.empty()) {
    // previous groups are complete rows; the dangling one is discarded
  }
  check(footer || allow_partial, Err::IoError, "cache file " + path + " is incomplete");
  out.info.entries = entries;
  out.info.complete = footer;
  return out;
}

std::unique_ptr<KLCache> cache_from_parsed(ParsedFile&& pf) {
  auto C = std::make_unique<KLCache>(pf.info.n);
  for (auto& [w, row] : pf.rows) {
    // stored entries omit the diagonal; restore and sort
    row.emplace_back(w, Laurent::one());
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    C->insert_row(w, std::move(row));
  }
  // the identity row is never written (it has no off-diagonal entries)
  if (!C->row_filled(0)) C->row(0);
  return C;
}

}  // namespace

void cache_save(KLCache& C, const std::string& path,
                const std::function<void(uint32_t, uint32_t)>& progress) {
  C.fill_all(progress);
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp);
    check(os.good(), Err::IoError, "cannot write " + tmp);
    write_stream(C, os);
    check(os.good(), Err::IoError, "write failed for " + tmp);
  }
  check(std::rename(tmp.c_str(), path.c_str()) == 0, Err::IoError,
        "cannot rename " + tmp + " to " + path);
}

std::unique_ptr<KLCache> cache_load(const std::string& path) {
  ParsedFile pf = parse_file(path, false);
  auto C = cache_from_parsed(std::move(pf));
  // a complete file has one row per group element of positive length
  C->fill_all();  // no-op on a complete file; repairs a sparse one
  return C;
}

CacheInfo cache_info(const std::string& path) { return parse_file(path, true).info; }

std::unique_ptr<KLCache> cache_build(int n, const std::string& path, bool resume,
                                     const std::function<void(uint32_t, uint32_t)>& progress) {
  if (resume) {
    std::ifstream probe(path);
    if (probe.good()) {
      probe.close();
      ParsedFile pf = parse_file(path, true);
      check(pf.info.n == n, Err::VersionMismatch,
            "existing cache at " + path + " has rank " + std::to_string(pf.info.n));
      if (pf.info.complete) return cache_from_parsed(std::move(pf));
      auto C = cache_from_parsed(std::move(pf));
      cache_save(*C, path, progress);
      return C;
    }
  }
  auto C = std::make_unique<KLCache>(n);
  cache_save(*C, path, progress);
  return C;
}

std::string default_cache_path(int n) {
  const char* dir = std::getenv("CELLKIT_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::string(dir) + "/s" + std::to_string(n) + ".klc";
}

}  // namespace cellkit
