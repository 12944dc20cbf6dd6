#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cellkit/cache_io.hpp"
#include "cellkit/kostant.hpp"
#include "cellkit/suites.hpp"
#include "cellkit/textio.hpp"

using namespace cellkit;
using nlohmann::json;

namespace {

struct Global {
  int n = -1;
  bool as_json = false;
  std::string cache_path;
  int jobs = 1;
  bool paranoid = false;
};

ClassifierOptions classifier_options(const Global& g) {
  ClassifierOptions opt;
  opt.jobs = g.jobs;
  opt.paranoid = g.paranoid;
  return opt;
}

// load an explicitly requested cache, or the default one for this rank if present
void maybe_adopt_cache(Classifier& cls, const Global& g, int rank) {
  std::string path = g.cache_path;
  if (path.empty()) {
    path = default_cache_path(rank);
    if (path.empty()) return;
    std::ifstream probe(path);
    if (!probe.good()) return;
  }
  auto cache = cache_load(path);
  check(cache->rank() == rank || g.cache_path.empty(), Err::VersionMismatch,
        "cache at " + path + " has rank " + std::to_string(cache->rank()) +
            ", expected " + std::to_string(rank));
  if (cache->rank() == rank) cls.adopt_cache(std::move(cache));
}

json verdict_json(const std::string& input, const Verdict& v) {
  json j{{"input", input},
         {"duflo", v.duflo.str()},
         {"status", kstatus_name(v.status)},
         {"method", kmethod_name(v.method)},
         {"conjectural", v.conjectural}};
  if (v.witness) j["witness"] = json{{"x", v.witness->first.str()}, {"y", v.witness->second.str()}};
  if (v.pattern)
    j["pattern"] = json{{"pattern", v.pattern->first.str()}, {"start", v.pattern->second}};
  return j;
}

void print_verdict_text(const std::string& input, const Verdict& v) {
  std::cout << input << ": " << kstatus_name(v.status) << " (method " << kmethod_name(v.method);
  if (v.conjectural) std::cout << ", conjectural";
  std::cout << ")";
  if (v.witness)
    std::cout << " witness x=" << v.witness->first.str() << " y=" << v.witness->second.str();
  if (v.pattern)
    std::cout << " pattern " << v.pattern->first.str() << " at " << v.pattern->second;
  if (!(v.duflo == parse_perm(input))) std::cout << " [duflo " << v.duflo.str() << "]";
  std::cout << "\n";
}

json report_json(const SuiteReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"description", c.description},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  return json{{"suite", rep.suite},
              {"normalization", rep.normalization},
              {"pass", rep.all_pass()},
              {"wall_ms", rep.wall_ms},
              {"checks", checks}};
}

int print_report(const SuiteReport& rep, bool as_json) {
  if (as_json) {
    std::cout << report_json(rep).dump(2) << "\n";
  } else {
    std::cout << "suite " << rep.suite << " (normalization " << rep.normalization << ")\n";
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.description;
      if (!c.pass) std::cout << "  expected=" << c.expected << " actual=" << c.actual;
      std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks, "
              << static_cast<long long>(rep.wall_ms) << " ms)\n";
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hecke-algebra combinatorics and a Kostant-problem classifier"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--n", g.n, "ambient rank for parsing inputs");
  app.add_flag("--json", g.as_json, "emit JSON");
  app.add_option("--cache", g.cache_path, "path to a prebuilt cache file");
  app.add_option("--jobs", g.jobs, "worker threads for scans");
  app.add_flag("--paranoid", g.paranoid, "cross-check all routes / all windows");

  std::string perm_arg, method = "auto", side = "left", suite_arg, family_arg, out_path;
  std::string p_json, q_json, x_arg, w_arg;
  int scan_n = 0, cells_n = 0, build_n = 0, max_n = -1;
  bool classical = false, scan_all = false, resume = false;

  auto* c_classify = app.add_subcommand("classify", "Kostant verdict for a permutation");
  c_classify->add_option("perm", perm_arg)->required();
  c_classify->add_option("--method", method)->check(CLI::IsMember({"auto", "fc", "kh5", "kh4"}));

  auto* c_scan = app.add_subcommand("cuspidal-scan", "scan a rank for negative and cuspidal involutions");
  c_scan->add_option("--n", scan_n)->required();
  c_scan->add_option("--method", method)->check(CLI::IsMember({"auto", "fc", "kh5", "kh4"}));
  c_scan->add_flag("--all", scan_all, "scan all permutations, not only involutions");

  auto* c_family = app.add_subcommand("verify-family", "check a cuspidal family");
  c_family->add_option("family", family_arg)->required()
      ->check(CLI::IsMember({"tau", "inv2", "u", "sigma"}));
  c_family->add_option("--max-n", max_n);

  auto* c_paper = app.add_subcommand("verify-paper", "run a published-data verification suite");
  c_paper->add_option("suite", suite_arg)->required();

  auto* c_klpoly = app.add_subcommand("klpoly", "canonical-basis polynomial p_{w,x}");
  c_klpoly->add_option("x", x_arg)->required();
  c_klpoly->add_option("w", w_arg)->required();
  c_klpoly->add_flag("--classical", classical, "classical normalization P_{x,w}(q)");

  auto* c_mu = app.add_subcommand("mu", "mu(x,w)");
  c_mu->add_option("x", x_arg)->required();
  c_mu->add_option("w", w_arg)->required();

  auto* c_cells = app.add_subcommand("cells", "cell partition of a rank");
  c_cells->add_option("--n", cells_n)->required();
  c_cells->add_option("--side", side)->check(CLI::IsMember({"left", "right", "twosided"}));

  auto* c_rs = app.add_subcommand("rs", "insertion and recording tableaux");
  c_rs->add_option("perm", perm_arg)->required();

  auto* c_rsi = app.add_subcommand("rs-inverse", "permutation from a tableau pair");
  c_rsi->add_option("P", p_json)->required();
  c_rsi->add_option("Q", q_json)->required();

  auto* c_tl = app.add_subcommand("tl", "Temperley-Lieb diagram of a fully commutative permutation");
  c_tl->add_option("perm", perm_arg)->required();

  auto* c_cache = app.add_subcommand("cache", "persistent cache management");
  c_cache->require_subcommand(1);
  auto* c_build = c_cache->add_subcommand("build", "fill and save a rank");
  c_build->add_option("--n", build_n)->required();
  c_build->add_option("--out", out_path)->required();
  c_build->add_flag("--resume", resume);
  auto* c_info = c_cache->add_subcommand("info", "describe a cache file");
  c_info->add_option("path", out_path)->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_classify) {
      Permutation w = parse_perm(perm_arg, g.n);
      Classifier cls(classifier_options(g));
      maybe_adopt_cache(cls, g, w.rank());
      Verdict v = cls.classify(w, strategy_from_name(method));
      if (g.as_json) std::cout << verdict_json(w.str(), v).dump() << "\n";
      else print_verdict_text(w.str(), v);
      return 0;
    }

    if (*c_scan) {
      Classifier cls(classifier_options(g));
      maybe_adopt_cache(cls, g, scan_n);
      RankTable t = cls.cuspidal_scan(scan_n, !scan_all, strategy_from_name(method));
      if (g.as_json) {
        json neg = json::array(), cusp = json::array();
        for (const auto& p : t.negatives) neg.push_back(p.str());
        for (const auto& p : t.cuspidals) cusp.push_back(p.str());
        std::cout << json{{"n", t.n},
                          {"source", "computed"},
                          {"method", method},
                          {"negatives", neg},
                          {"cuspidals", cusp}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "S_" << t.n << ": " << t.negatives.size() << " negative, "
                  << t.cuspidals.size() << " cuspidal\n";
        std::cout << "negatives:";
        for (const auto& p : t.negatives) std::cout << " " << p.str();
        std::cout << "\ncuspidals:";
        for (const auto& p : t.cuspidals) std::cout << " " << p.str();
        std::cout << "\n";
      }
      return 0;
    }

    if (*c_family) {
      Family f = family_from_name(family_arg);
      if (max_n < 0) max_n = f == Family::Tau ? 14 : 7;
      Classifier cls(classifier_options(g));
      FamilyReport r = cls.verify_family(f, max_n);
      SuiteReport rep;
      rep.suite = std::string("family-") + family_name(f);
      for (const auto& c : r.checks) rep.checks.push_back({c.label, "cuspidal-as-stated", c.detail, c.ok});
      return print_report(rep, g.as_json);
    }

    if (*c_paper) {
      SuiteOptions sopt;
      sopt.jobs = g.jobs;
      sopt.paranoid = g.paranoid;
      sopt.cache_path = g.cache_path;
      SuiteReport rep = run_suite(suite_arg, sopt);
      return print_report(rep, g.as_json);
    }

    if (*c_klpoly || *c_mu) {
      Permutation x = parse_perm(x_arg, g.n);
      Permutation w = parse_perm(w_arg, x.rank());
      std::unique_ptr<KLCache> C;
      if (!g.cache_path.empty()) C = cache_load(g.cache_path);
      else C = std::make_unique<KLCache>(x.rank());
      check(C->rank() == x.rank(), Err::RankMismatch, "cache rank differs from input rank");
      PermId xi = C->sn().id_of(x), wi = C->sn().id_of(w);
      if (*c_mu) {
        long long m = C->mu(xi, wi);
        if (g.as_json)
          std::cout << json{{"x", x.str()}, {"w", w.str()}, {"mu", m}}.dump() << "\n";
        else std::cout << m << "\n";
        return 0;
      }
      Laurent p = classical ? C->kl_poly_classical(xi, wi) : C->kl_poly(xi, wi);
      std::string var = classical ? "q" : "v";
      if (g.as_json)
        std::cout << json{{"x", x.str()},
                          {"w", w.str()},
                          {"normalization", classical ? "classical" : "soergel"},
                          {"poly", laurent_json(p)},
                          {"pretty", laurent_str(p, var)}}
                         .dump()
                  << "\n";
      else std::cout << laurent_str(p, var) << "\n";
      return 0;
    }

    if (*c_cells) {
      std::unique_ptr<KLCache> owned;
      if (!g.cache_path.empty()) {
        owned = cache_load(g.cache_path);
        check(owned->rank() == cells_n, Err::RankMismatch, "cache rank differs from --n");
      } else {
        check(cells_n <= 8, Err::BudgetExceeded, "cells supported up to rank 8");
        owned = std::make_unique<KLCache>(cells_n);
      }
      KLCache& C = *owned;
      C.fill_all();
      const SnTable& sn = C.sn();
      std::vector<std::vector<PermId>> cells;
      if (side == "left") cells = C.left_cells().members;
      else if (side == "twosided") cells = C.two_sided_cells().members;
      else {
        // right cells are inverse images of left cells
        for (auto members : C.left_cells().members) {
          for (auto& m : members) m = sn.inverse(m);
          std::sort(members.begin(), members.end());
          cells.push_back(std::move(members));
        }
        std::sort(cells.begin(), cells.end());
      }
      if (g.as_json) {
        json out = json::array();
        for (const auto& cell : cells) {
          json c = json::array();
          for (PermId id : cell) c.push_back(sn.perm(id).str());
          out.push_back(c);
        }
        std::cout << json{{"n", cells_n}, {"side", side}, {"cells", out}}.dump() << "\n";
      } else {
        std::cout << cells.size() << " " << side << " cells of S_" << cells_n << "\n";
        for (const auto& cell : cells) {
          for (PermId id : cell) std::cout << sn.perm(id).str() << " ";
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*c_rs) {
      Permutation w = parse_perm(perm_arg, g.n);
      auto [P, Q] = rs(w);
      if (g.as_json)
        std::cout << json{{"input", w.str()}, {"P", tableau_json(P)}, {"Q", tableau_json(Q)}}.dump()
                  << "\n";
      else
        std::cout << "P:\n" << tableau_ascii(P) << "Q:\n" << tableau_ascii(Q);
      return 0;
    }

    if (*c_rsi) {
      StandardTableau P = tableau_from_json(json::parse(p_json));
      StandardTableau Q = tableau_from_json(json::parse(q_json));
      Permutation w = rs_inverse(P, Q);
      if (g.as_json) std::cout << json{{"perm", w.str()}}.dump() << "\n";
      else std::cout << w.str() << "\n";
      return 0;
    }

    if (*c_tl) {
      Permutation w = parse_perm(perm_arg, g.n);
      TLDiagram d = tl_from_fc(w);
      if (g.as_json) std::cout << tl_json(d).dump() << "\n";
      else {
        std::cout << tl_ascii(d);
        std::cout << tl_json(d).dump() << "\n";
      }
      return 0;
    }

    if (*c_build) {
      check(build_n <= 8, Err::BudgetExceeded, "cache build supported up to rank 8");
      auto progress = [](uint32_t done, uint32_t total) {
        if (done == total || done % 1024 == 0)
          std::cerr << "\rfilled " << done << "/" << total << std::flush;
      };
      auto C = cache_build(build_n, out_path, resume, progress);
      std::cerr << "\n";
      std::cout << "wrote " << out_path << " (" << C->stored_pairs() << " stored pairs)\n";
      return 0;
    }

    if (*c_info) {
      CacheInfo info = cache_info(out_path);
      if (g.as_json)
        std::cout << json{{"n", info.n},
                          {"version", info.version},
                          {"normalization", info.normalization},
                          {"entries", info.entries},
                          {"complete", info.complete}}
                         .dump()
                  << "\n";
      else
        std::cout << "rank " << info.n << ", version " << info.version << ", "
                  << info.entries << " entries, "
                  << (info.complete ? "complete" : "incomplete") << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case Err::BudgetExceeded:
      case Err::CacheNotFilled:
      case Err::IoError:
      case Err::VersionMismatch:
        return 3;
      case Err::Disagreement:
        return 1;
      default:
        return 2;
    }
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
