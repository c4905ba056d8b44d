// Acceptance driver: one line per criterion, exit 0 iff every criterion passes.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "braidcong/suite.hpp"

namespace {

// Wall-clock ceilings in seconds, per criterion.
const std::map<int, double> kTimeLimit = {
    {1, 1.0},   {2, 1.0},    {3, 5.0},   {4, 1.0},   {5, 120.0}, {6, 60.0}, {7, 120.0},
    {8, 30.0},  {9, 600.0},  {10, 30.0}, {11, 600.0}, {12, 180.0}, {13, 60.0},
};

struct Mutant {
  const char* site;
  const char* path;
};

const std::array<Mutant, 4> kMutants = {{
    {"burau_block", BRAIDCONG_MUTANT_BURAU_BLOCK},
    {"form_sign", BRAIDCONG_MUTANT_FORM_SIGN},
    {"y_formula", BRAIDCONG_MUTANT_Y_FORMULA},
    {"certificate_exponent", BRAIDCONG_MUTANT_CERTIFICATE_EXPONENT},
}};

int exit_status(const std::string& command) {
  const int raw = std::system(command.c_str());
  if (raw == -1 || !WIFEXITED(raw)) return -1;
  return WEXITSTATUS(raw);
}

void print_line(int id, bool pass, double seconds, const std::string& detail) {
  std::printf("criterion %2d: %s (%.2fs) %s\n", id, pass ? "PASS" : "FAIL", seconds, detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  braidcong::SuiteOptions opts;
  opts.heavy = true;
  bool all = true;

  braidcong::run_full_suite(opts, [&](const braidcong::CheckResult& r) {
    const double limit = kTimeLimit.at(r.id);
    const bool in_time = r.seconds < limit;
    const bool pass = r.pass && in_time;
    print_line(r.id, pass, r.seconds, r.name + ": " + r.detail + (in_time ? "" : " [over time limit]"));
    all = all && pass;
  });

  const auto start = std::chrono::steady_clock::now();
  bool caught = true;
  std::string detail = "mutants failing the quick suite:";
  for (const Mutant& m : kMutants) {
    const int status = exit_status(std::string("\"") + m.path + "\" suite --quick > /dev/null 2>&1");
    const bool killed = status == 1;
    caught = caught && killed;
    detail += std::string(" ") + m.site + "=" + (killed ? "yes" : "no(exit " + std::to_string(status) + ")");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = caught && seconds < kTimeLimit.at(13);
  print_line(13, pass, seconds, detail);
  all = all && pass;

  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
