// jdiag: command-line front end over the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jacobi/jacobi.h"

namespace {

// Exit codes: 0 success, 1 a check failed, 2 usage or parse error, 3 other errors.
int exit_code(jd_status st) {
  switch (st) {
    case JD_OK: return 0;
    case JD_VERIFY_FAILED: return 1;
    case JD_INVALID_ARGUMENT:
    case JD_PARSE: return 2;
    default: return 3;
  }
}

struct Owned {
  char* p = nullptr;
  ~Owned() { jd_string_free(p); }
};

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi diagram spaces, series identities and denominator bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(JD_VERSION));

  int degree = -1;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string cache_dir;
  int max = 50;
  if (const char* env = std::getenv("JDIAG_CACHE_DIR")) cache_dir = env;
  app.add_option("-n,--degree,--N", degree, "Truncation degree N (default: per command)");
  app.add_option("--cache-dir", cache_dir, "Basis cache directory (default: $JDIAG_CACHE_DIR)");
  app.add_option("--seed", seed, "Seed for random sampling");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--max", max, "Upper end of obligation ranges")->check(CLI::PositiveNumber);

  std::string support, method = "auto", file, suite, kind, obligation, cache_action;
  int n = 0, parameter = 0;
  bool symbolic = false, mutate = false;
  std::vector<int> zero;

  auto* dim = app.add_subcommand("dim", "Dimension of the degree-n quotient space");
  dim->add_option("support", support, "Support such as S1, I, I,I or I,c:x")->required();
  dim->add_option("n", n, "Degree")->required();
  dim->add_option("--method", method)->check(CLI::IsMember({"auto", "full", "chord"}));

  auto* reduce = app.add_subcommand("reduce", "Coordinates of a combination in the quotient basis");
  reduce->add_option("file", file, "Diagram file, - for stdin")->required();
  auto* chordify = app.add_subcommand("chordify", "Rewrite a combination with chord diagrams only");
  chordify->add_option("file", file, "Diagram file, - for stdin")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites{"all"};
  for (int i = 0; i < jd_suite_count(); ++i) suites.emplace_back(jd_suite_name(i));
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_flag("--symbolic", symbolic, "bseries: generator-level checks only");

  auto* denom = app.add_subcommand("denom", "Denominator bounds and divisibility certificates");
  denom->require_subcommand(1);
  auto* dbound = denom->add_subcommand("bound", "Value and factorization of d(n), D(k) or D(2;n)");
  dbound->add_option("kind", kind)->required()->check(CLI::IsMember({"d", "D", "D2"}));
  dbound->add_option("parameter", parameter)->required();
  auto* dcheck = denom->add_subcommand("check", "Check a divisibility obligation");
  dcheck->add_option("obligation", obligation, "Obligation id or all")->required();
  dcheck->add_flag("--mutate", mutate, "Use the perturbed d(n)");

  auto* anomaly = app.add_subcommand("anomaly", "Invert an anomaly series");
  anomaly->require_subcommand(1);
  auto* invert = anomaly->add_subcommand("invert", "B with sum_k A^(2k+1) B_2k = 1");
  int symbolic_n = -1;
  invert->add_option("--symbolic", symbolic_n, "Formal generators up to shifted degree N");
  invert->add_option("--zero", zero, "Shifted degrees 2k with A_2k = 0");
  invert->add_option("file", file, "Two-leg combination holding A");

  auto* cache = app.add_subcommand("cache", "Basis cache maintenance");
  cache->add_option("action", cache_action)->required()->check(CLI::IsMember({"purge", "stats"}));

  CLI11_PARSE(app, argc, argv);

  jd_session* s = nullptr;
  if (jd_session_new(&s) != JD_OK) return 3;
  struct Free {
    jd_session* s;
    ~Free() { jd_session_free(s); }
  } guard{s};

  auto report = [&](jd_status st) {
    if (st != JD_OK && st != JD_VERIFY_FAILED) std::cerr << "jdiag: " << jd_status_name(st) << ": " << jd_last_error(s) << "\n";
    return exit_code(st);
  };

  jd_status st;
  if ((st = jd_set_degree(s, degree)) != JD_OK) return report(st);
  jd_set_seed(s, seed);
  jd_set_format(s, format == "structured" ? JD_FORMAT_STRUCTURED : JD_FORMAT_TEXT);
  if ((st = jd_set_max(s, max)) != JD_OK) return report(st);
  if ((st = jd_set_cache_dir(s, cache_dir.c_str())) != JD_OK) return report(st);

  {
    Owned h;
    if ((st = jd_header(s, &h.p)) != JD_OK) return report(st);
    std::cout << h.p;
  }

  Owned out;
  std::string input;
  auto load = [&]() {
    if (read_input(file, input)) return true;
    std::cerr << "jdiag: cannot read " << file << "\n";
    return false;
  };

  if (*dim) {
    int d = 0;
    st = jd_dim(s, support.c_str(), n, method.c_str(), &d);
    if (st == JD_OK) std::cout << d << "\n";
    return report(st);
  }
  if (*reduce || *chordify) {
    if (!load()) return 3;
    st = *reduce ? jd_reduce(s, input.c_str(), &out.p) : jd_chordify(s, input.c_str(), &out.p);
  } else if (*verify) {
    st = jd_verify(s, suite.c_str(), symbolic ? JD_VERIFY_SYMBOLIC : 0u, &out.p);
  } else if (*dbound) {
    st = jd_denom_bound(s, kind.c_str(), parameter, &out.p);
  } else if (*dcheck) {
    st = jd_denom_check(s, obligation.c_str(), mutate ? 1 : 0, &out.p);
  } else if (*invert) {
    if (symbolic_n >= 0) {
      std::uint32_t mask = 0;
      for (int z : zero) {
        if (z <= 0 || z % 2 || z >= 64) {
          std::cerr << "jdiag: --zero takes even shifted degrees 2..62\n";
          return 2;
        }
        mask |= 1u << (z / 2);
      }
      st = jd_anomaly_invert_symbolic(s, symbolic_n, mask, &out.p);
    } else {
      if (file.empty()) {
        std::cerr << "jdiag: anomaly invert needs --symbolic N or an input file\n";
        return 2;
      }
      if (!load()) return 3;
      st = jd_anomaly_invert(s, input.c_str(), degree < 0 ? 4 : degree, &out.p);
    }
  } else if (*cache) {
    if (cache_action == "stats") {
      st = jd_cache_stats(s, &out.p);
    } else {
      int removed = 0;
      st = jd_cache_purge(s, &removed);
      if (st == JD_OK) std::cout << "removed " << removed << " files\n";
    }
  } else {
    return 2;
  }
  if (out.p) std::cout << out.p;
  return report(st);
}
