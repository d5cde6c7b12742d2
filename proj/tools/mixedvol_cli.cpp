// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mixedvol: compute and verify mixed-volume polynomials of matroids.
//
// Exit codes: 0 success, 1 invalid input or IO failure, 2 method
// disagreement or failed invariant, 3 genericity retry budget exhausted.
// Reports go to stdout; timings and diagnostics go to stderr.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "mixedvol/mixedvol.h"

namespace {

constexpr const char* kRetryBudgetEnv = "MIXEDVOL_RETRY_BUDGET";

int ExitCode(mv_status s) {
  switch (s) {
    case MV_OK:
      return 0;
    case MV_INVALID_INPUT:
      return 1;
    case MV_CHECK_FAILED:
    case MV_INTERNAL:
      return 2;
    case MV_GENERICITY:
      return 3;
  }
  return 2;
}

int Fail(mv_status s) {
  std::cerr << "error: " << mv_last_error() << "\n";
  return ExitCode(s);
}

struct MatroidDeleter {
  void operator()(mv_matroid* m) const { mv_matroid_free(m); }
};
struct PolyDeleter {
  void operator()(mv_poly* p) const { mv_poly_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { mv_string_free(s); }
};
using MatroidPtr = std::unique_ptr<mv_matroid, MatroidDeleter>;
using PolyPtr = std::unique_ptr<mv_poly, PolyDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

class Timer {
 public:
  explicit Timer(std::string label) : label_(std::move(label)), start_(Clock::now()) {}
  ~Timer() {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    std::fprintf(stderr, "%s: %.1f ms\n", label_.c_str(), ms);
  }

 private:
  using Clock = std::chrono::steady_clock;
  std::string label_;
  Clock::time_point start_;
};

bool ReadFile(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out->assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

bool WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  return static_cast<bool>(out);
}

struct Common {
  uint64_t seed = 0;
  unsigned threads = 1;
};

void AddCommon(CLI::App* cmd, Common* c, bool with_seed) {
  if (with_seed) cmd->add_option("--seed", c->seed, "Generic-vector seed");
  cmd->add_option("--threads", c->threads, "Worker threads")->check(CLI::Range(1u, 1024u));
}

int LoadMatroid(const std::string& path, MatroidPtr* out) {
  mv_matroid* m = nullptr;
  const mv_status s = mv_matroid_from_file(path.c_str(), &m);
  if (s != MV_OK) return Fail(s);
  out->reset(m);
  return 0;
}

int PrintReport(mv_status s, char* report) {
  StringPtr owned(report);
  if (report != nullptr) std::cout << report;
  if (s != MV_OK) return Fail(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-volume polynomials of matroid Chow rings"};
  app.require_subcommand(1);

  mv_options options = mv_default_options();
  if (const char* env = std::getenv(kRetryBudgetEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 60) {
      std::cerr << "error: " << kRetryBudgetEnv << " must be an integer in 0..60\n";
      return 1;
    }
    options.retry_budget = static_cast<int>(v);
  }

  Common common;
  std::string input;
  std::string output;
  std::string method = "both";
  bool pretty = false;
  auto* compute = app.add_subcommand("compute", "Compute Vol_M");
  compute->add_option("--input", input, "Matroid JSON file")->required();
  compute->add_option("--method", method, "brion, deletion or both")
      ->check(CLI::IsMember({"brion", "deletion", "both"}));
  compute->add_option("--output", output, "Write polynomial JSON here");
  compute->add_flag("--pretty", pretty, "Print the polynomial in readable form");
  AddCommon(compute, &common, true);

  std::string vol_path;
  bool rank_checks = false;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--input", input, "Matroid JSON file")->required();
  verify->add_option("--vol", vol_path, "Polynomial JSON to verify (default: computed)");
  verify->add_flag("--rank-checks", rank_checks, "Also check Chow ring ranks");
  AddCommon(verify, &common, false);

  unsigned seeds = 2;
  auto* compare = app.add_subcommand("compare", "Cross-validate both methods");
  compare->add_option("--input", input, "Matroid JSON file")->required();
  compare->add_option("--seeds", seeds, "Number of Brion seeds")->check(CLI::Range(1u, 1000u));
  AddCommon(compare, &common, true);

  int max_elements = 6;
  int count = 0;
  auto* corpus = app.add_subcommand("corpus", "Cross-validate a generated corpus");
  corpus->add_option("--max-elements", max_elements, "Largest ground set")->check(CLI::Range(1, 8));
  corpus->add_option("--count", count, "Random matroids to add")->check(CLI::Range(0, 100000));
  AddCommon(corpus, &common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  options.seed = common.seed;
  options.threads = common.threads;

  if (compute->parsed()) {
    MatroidPtr m;
    if (int rc = LoadMatroid(input, &m)) return rc;
    const mv_method mm = method == "brion"      ? MV_METHOD_BRION
                         : method == "deletion" ? MV_METHOD_DELETION
                                                : MV_METHOD_BOTH;
    mv_poly* raw = nullptr;
    mv_status s;
    {
      Timer t("compute");
      s = mv_compute(m.get(), mm, &options, &raw);
    }
    if (s != MV_OK) return Fail(s);
    PolyPtr p(raw);
    char* json = nullptr;
    if ((s = mv_poly_to_json(p.get(), &json)) != MV_OK) return Fail(s);
    StringPtr json_owned(json);
    if (!output.empty() && !WriteFile(output, json)) {
      std::cerr << "error: cannot write " << output << "\n";
      return 1;
    }
    if (pretty) {
      char* text = nullptr;
      if ((s = mv_poly_to_pretty(p.get(), &text)) != MV_OK) return Fail(s);
      StringPtr text_owned(text);
      std::cout << text << "\n";
    } else if (output.empty()) {
      std::cout << json;
    }
    return 0;
  }

  if (verify->parsed()) {
    MatroidPtr m;
    if (int rc = LoadMatroid(input, &m)) return rc;
    PolyPtr vol;
    if (!vol_path.empty()) {
      std::string text;
      if (!ReadFile(vol_path, &text)) {
        std::cerr << "error: cannot read " << vol_path << "\n";
        return 1;
      }
      mv_poly* raw = nullptr;
      if (mv_status s = mv_poly_from_json(text.c_str(), &raw); s != MV_OK) return Fail(s);
      vol.reset(raw);
    }
    char* report = nullptr;
    mv_status s;
    {
      Timer t("verify");
      s = mv_verify(m.get(), vol.get(), rank_checks ? 1 : 0, &options, &report);
    }
    return PrintReport(s, report);
  }

  if (compare->parsed()) {
    MatroidPtr m;
    if (int rc = LoadMatroid(input, &m)) return rc;
    char* report = nullptr;
    mv_status s;
    {
      Timer t("compare");
      s = mv_compare(m.get(), seeds, &options, &report);
    }
    return PrintReport(s, report);
  }

  char* report = nullptr;
  mv_status s;
  {
    Timer t("corpus");
    s = mv_corpus(max_elements, count, &options, &report);
  }
  return PrintReport(s, report);
}
