// Acceptance run: one pass/fail line per criterion, nonzero exit if any fails.
// Usage: acceptance <path to jdiag>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "jacobi/verify.hpp"

using namespace jacobi;

namespace {

struct Timed {
  SuiteResult result;
  double seconds = 0;
};

std::map<std::string, Timed> g_runs;

const Timed& suite(const std::string& name) {
  auto it = g_runs.find(name);
  if (it != g_runs.end()) return it->second;
  auto t0 = std::chrono::steady_clock::now();
  Timed t;
  t.result = run_suite(name, {});
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return g_runs.emplace(name, std::move(t)).first->second;
}

// Checks of `name` whose check name is in `only` (all when empty): count and failures.
std::pair<int, int> tally(const std::string& name, const std::set<std::string>& only = {}) {
  int total = 0, failed = 0;
  for (const auto& c : suite(name).result.checks) {
    if (!only.empty() && !only.count(c.name)) continue;
    ++total;
    failed += !c.pass;
  }
  return {total, failed};
}

struct Line {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

std::vector<Line> g_lines;

void criterion(int id, const std::string& title, const std::vector<std::pair<std::string, std::set<std::string>>>& parts,
               std::string extra = {}, bool extra_ok = true) {
  int total = 0, failed = 0;
  for (const auto& [name, only] : parts) {
    auto [t, f] = tally(name, only);
    total += t;
    failed += f;
  }
  bool pass = total > 0 && failed == 0 && extra_ok;
  std::string detail = std::to_string(total - failed) + "/" + std::to_string(total) + " checks";
  if (!extra.empty()) detail += ", " + extra;
  g_lines.push_back({id, title, pass, detail});
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

std::string secs(double s) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2fs", s);
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <jdiag>\n";
    return 2;
  }
  const std::string jdiag = argv[1];

  {
    double t = suite("stu4t").seconds;
    criterion(1, "quotient oracle equivalence on S1, degrees 0-4", {{"stu4t", {"dim-S1"}}}, "stu4t in " + secs(t), t < 600);
  }
  criterion(2, "sliding and 4T relations vanish", {{"slide", {}}, {"stu4t", {"four-t"}}});
  criterion(3, "PBW bijective and integral at degree <= 3", {{"pbw", {}}});
  criterion(4, "Adams eigenvalue-4 space equals the two-leg image", {{"eigen", {}}});
  criterion(5, "leg swap fixes two-leg classes at degree <= 4", {{"vogel", {}}});
  criterion(6, "Psi locus independence, unit, scaling, multiplicativity", {{"psi", {}}});
  criterion(7, "B-series inversion, symbolic and diagram-valued", {{"bseries", {}}});
  criterion(8, "crossing from the anomaly", {{"eqtwist", {"degree-one", "strand-exchange"}}});
  criterion(9, "coboundary, pentagon and hexagon",
            {{"coboundary", {}}, {"pentagon-hexagon", {"pentagon-1+a12", "hexagon-degree-1", "hexagon-degree-2"}}});
  {
    double t = suite("denominators").seconds;
    criterion(10, "denominator values, obligations and mutation", {{"denominators", {}}}, "suite in " + secs(t), t < 60);
  }
  {
    const std::string cmd = "'" + jdiag + "' verify all --seed 1 --format structured 2>&1";
    int s1 = 0, s2 = 0;
    std::string a = run_command(cmd, s1);
    std::string b = run_command(cmd, s2);
    bool pass = s1 == 0 && s2 == 0 && !a.empty() && a == b;
    g_lines.push_back({11, "verify all is byte-identical across runs", pass,
                       std::to_string(a.size()) + " bytes, exit " + std::to_string(s1) + "/" + std::to_string(s2) +
                           (a == b ? ", identical" : ", outputs differ")});
  }

  bool all = true;
  for (const auto& l : g_lines) {
    all = all && l.pass;
    std::cout << "criterion " << l.id << " " << (l.pass ? "PASS" : "FAIL") << ": " << l.title << " (" << l.detail
              << ")\n";
  }
  for (const auto& [name, t] : g_runs)
    if (!t.result.pass()) std::cout << format_text(t.result);
  std::cout << (all ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
  return all ? 0 : 1;
}
