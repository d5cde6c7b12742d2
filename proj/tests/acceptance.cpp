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


// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
// A criterion with a runtime limit fails when the limit is exceeded.
// Usage: acceptance <path to mixedvol-cli>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include "corpus.hpp"
#include "fan.hpp"
#include "io.hpp"
#include "verify.hpp"
#include "volume.hpp"
#include "test_util.hpp"

namespace mixedvol {
namespace {

using testing::P;
using testing::X;

struct Outcome {
  bool passed = false;
  std::string detail;
};

unsigned Threads() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome Golden() {
  const Matroid m = testing::RunningExample();
  const RationalPoly expected = testing::RunningExampleVolume();
  const VolPolynomial deletion = DeletionVolume(m);
  const VolPolynomial brion = BrionVolume(m, SampleGenericVectors(m, 0));
  const bool ok = deletion.poly == expected && brion.poly == expected;
  return {ok, "deletion " + std::string(deletion.poly == expected ? "match" : "MISMATCH") +
                  ", brion " + (brion.poly == expected ? "match" : "MISMATCH")};
}

Outcome Boolean() {
  const Matroid b = Matroid::FromBases(std::vector<int>{1, 2, 3}, {{1, 2, 3}});
  const RationalPoly relabeled = Rename(
      DeletionVolume(b).poly, {{X("3"), X("4")}, {X("13"), X("14")}, {X("23"), X("24")}});
  const bool ok = relabeled == testing::BooleanVolume124();
  return {ok, "relabeling 3 -> 4"};
}

Outcome Intermediates() {
  const Matroid m = testing::RunningExample();
  DeletionTrace trace;
  const VolPolynomial vol = DeletionVolume(m, &trace, 4);
  const RationalPoly delta3 = P("x4(x1 + x2 + x3 + x4/2) + x123(x1 + x2 + x3 - x123/2)");
  const RationalPoly corrections =
      P("((x14 - x1 - x4)^2 + (x24 - x2 - x4)^2 + (x34 - x3 - x4)^2)/2");
  const bool lifted = trace.tower.size() == 4 && trace.tower[3].poly == delta3;
  const bool final = vol.poly == delta3 - corrections;
  const Rational c44 = vol.poly.coefficient(Monomial::Var(X("4"), 2));
  return {lifted && final && c44 == -1,
          std::string("Vol_D3 ") + (lifted ? "ok" : "WRONG") + ", final " +
              (final ? "ok" : "WRONG") + ", coeff x4^2 = " + ToString(c44)};
}

Outcome DifferentialCorpus() {
  auto corpus = UniformCorpus(6);
  const size_t uniform = corpus.size();
  for (auto& e : RandomCorpus(50, 6, 2026)) corpus.push_back(std::move(e));
  size_t failed = 0;
  std::string first;
  for (const auto& [name, m] : corpus) {
    const CrossValidation cv = CrossValidate(m, {0, 1}, {Threads(), kDefaultRetryBudget});
    if (!cv.passed()) {
      ++failed;
      if (first.empty()) first = " first failure " + name;
    }
  }
  std::ostringstream s;
  s << uniform << " uniform + " << corpus.size() - uniform << " random, " << failed
    << " failed" << first;
  return {failed == 0, s.str()};
}

Outcome OperatorConsistency() {
  std::mt19937_64 rng(5);
  auto corpus = RandomCorpus(80, 6, 77);
  for (auto& e : UniformCorpus(5)) corpus.push_back(std::move(e));
  size_t pairs = 0;
  size_t failed = 0;
  for (const auto& [name, m] : corpus) {
    if (m.degree() < 2 || pairs >= 24) continue;
    const SimplicialFan fan = BergmanFan(m);
    const auto& two = fan.cones(2);
    const Cone tau = two[rng() % two.size()];
    const LabeledCone labels = fan.labels_of(tau);
    const VarId r = SyntheticLabel(labels[0] | labels[1]);
    const SimplicialFan fine = StarSubdivide(fan, tau, r);
    const MinkowskiWeight w = PullBackWeight(fan, ConstantWeight(fan), fine, labels, r);
    const VolPolynomial evaluated = EvaluationVolumeProjected(fine, w, pairs);
    const VolPolynomial operated = SubdivisionOperator(DeletionVolume(m), labels[0], labels[1], r);
    if (evaluated.poly != operated.poly) ++failed;
    ++pairs;
  }
  std::ostringstream s;
  s << pairs << " pairs, " << failed << " mismatches";
  return {pairs >= 20 && failed == 0, s.str()};
}

Outcome PoincareRanks() {
  const auto corpus = ExhaustiveCorpus(5);
  size_t failed = 0;
  size_t checks = 0;
  for (const auto& [name, m] : corpus) {
    const auto ranks = ChowRanks(BergmanFan(m), DeletionVolume(m), Threads());
    bool ok = !ranks.empty() && ranks.back().dimension == 1;
    for (const ChowRank& r : ranks) {
      ok = ok && r.pairing_rank == r.dimension;
      ++checks;
    }
    if (!ok) ++failed;
  }
  std::ostringstream s;
  s << corpus.size() << " matroids, " << checks << " degrees, " << failed << " failed";
  return {failed == 0, s.str()};
}

Outcome Decomposition() {
  auto corpus = UniformCorpus(5);
  for (auto& e : RandomCorpus(12, 5, 99)) corpus.push_back(std::move(e));
  size_t fans = 0;
  size_t failed = 0;
  for (const auto& [name, m] : corpus) {
    if (m.degree() < 1) continue;
    const SimplicialFan fan = BergmanFan(m);
    const GenericProjection gp = SampleProjection(fan, fans);
    const SimplicialFan projected = Project(fan, gp.map);
    const WeightDecomposition dec = DecomposeWeight(projected, ConstantWeight(projected), gp.v0);
    if (!dec.sums_to_weight) ++failed;
    ++fans;
  }
  std::ostringstream s;
  s << fans << " projected fans, " << failed << " failed";
  return {fans >= 10 && failed == 0, s.str()};
}

Outcome Determinism(const std::string& cli) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("mixedvol-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path input = dir / "u46.json";
  WriteTextFile(input, MatroidToJson(Matroid::Uniform(4, 6)));
  std::vector<std::string> outputs;
  bool ran = true;
  for (int threads : {1, 2, 8, 1}) {
    const std::string t = std::to_string(threads);
    const std::string tag = t + "-" + std::to_string(outputs.size());
    const fs::path vol = dir / ("vol-" + tag + ".json");
    const fs::path corpus = dir / ("corpus-" + tag + ".json");
    const std::string a = "\"" + cli + "\" compute --input \"" + input.string() +
                          "\" --method both --seed 3 --threads " + t + " --output \"" +
                          vol.string() + "\" 2>/dev/null";
    const std::string b = "\"" + cli + "\" corpus --max-elements 5 --count 20 --seed 3 --threads " +
                          t + " > \"" + corpus.string() + "\" 2>/dev/null";
    ran = ran && std::system(a.c_str()) == 0 && std::system(b.c_str()) == 0;
    if (!ran) break;
    outputs.push_back(ReadTextFile(vol) + ReadTextFile(corpus));
  }
  fs::remove_all(dir);
  bool same = ran && !outputs.empty();
  for (const std::string& o : outputs) same = same && o == outputs.front();
  return {same, ran ? "threads 1, 2, 8 and a repeat of 1" : "CLI run failed"};
}

}  // namespace
}  // namespace mixedvol

int main(int argc, char** argv) {
  using namespace mixedvol;
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <mixedvol-cli>\n", argv[0]);
    return 1;
  }
  const std::string cli = argv[1];
  struct Criterion {
    const char* name;
    double limit_ms;  // 0: no limit
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"golden polynomial, both methods", 1000, Golden},
      {"Boolean matroid golden", 1000, Boolean},
      {"deletion intermediates at i=4", 1000, Intermediates},
      {"differential corpus", 60000, DifferentialCorpus},
      {"subdivision operator consistency", 30000, OperatorConsistency},
      {"Poincare pairing ranks", 60000, PoincareRanks},
      {"weight decomposition", 10000, Decomposition},
      {"thread-count determinism", 0, [&] { return Determinism(cli); }},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    const bool passed = o.passed && in_time;
    if (!passed) ++failures;
    std::printf("%s criterion %d: %s (%s; %.1f ms%s)\n", passed ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str(), ms, in_time ? "" : ", over the time limit");
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
