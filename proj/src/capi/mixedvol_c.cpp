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

#include "mixedvol/mixedvol.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "json.hpp"
#include "verify.hpp"
#include "volume.hpp"

struct mv_matroid {
  mixedvol::Matroid value;
};

struct mv_poly {
  mixedvol::VolPolynomial value;
};

namespace {

using Json = nlohmann::ordered_json;
using namespace mixedvol;

thread_local std::string g_last_error;

template <typename Fn>
mv_status Guard(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const InvalidInput& e) {
    g_last_error = e.what();
    return MV_INVALID_INPUT;
  } catch (const GenericityError& e) {
    g_last_error = e.what();
    return MV_GENERICITY;
  } catch (const InternalError& e) {
    g_last_error = std::string("internal check failed: ") + e.what();
    return MV_INTERNAL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MV_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MV_INTERNAL;
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void RequireArg(const void* p, const char* name) {
  Require(p != nullptr, std::string(name) + " must not be null");
}

ComputeOptions ToOptions(const mv_options* o) {
  ComputeOptions c;
  if (o == nullptr) return c;
  c.threads = o->threads == 0 ? 1 : o->threads;
  if (o->retry_budget >= 0) c.retry_budget = o->retry_budget;
  return c;
}

uint64_t SeedOf(const mv_options* o) { return o == nullptr ? 0 : o->seed; }

Json ChecksJson(const VerifyReport& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"passed", c.passed},
                          {"checked", c.checked},
                          {"failures", c.failures}});
  }
  return checks;
}

Json CrossValidationJson(const CrossValidation& cv, const std::vector<uint64_t>& seeds) {
  Json doc;
  doc["passed"] = cv.passed();
  doc["seeds"] = seeds;
  doc["methods_agree"] = cv.agree;
  doc["divergence"] = cv.divergence;
  doc["terms"] = cv.deletion.poly.term_count();
  doc["checks"] = ChecksJson(cv.invariants);
  return doc;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

mv_options mv_default_options(void) {
  mv_options o;
  o.seed = 0;
  o.threads = 1;
  o.retry_budget = kDefaultRetryBudget;
  return o;
}

const char* mv_version(void) { return "1.0.0"; }

const char* mv_last_error(void) { return g_last_error.c_str(); }

void mv_string_free(char* s) { std::free(s); }

mv_status mv_matroid_from_json(const char* json, mv_matroid** out) {
  return Guard([&] {
    RequireArg(json, "json");
    RequireArg(out, "out");
    *out = new mv_matroid{ParseMatroidJson(json)};
    return MV_OK;
  });
}

mv_status mv_matroid_from_file(const char* path, mv_matroid** out) {
  return Guard([&] {
    RequireArg(path, "path");
    RequireArg(out, "out");
    *out = new mv_matroid{ParseMatroidJson(ReadTextFile(path))};
    return MV_OK;
  });
}

mv_status mv_matroid_to_json(const mv_matroid* m, char** out) {
  return Guard([&] {
    RequireArg(m, "matroid");
    RequireArg(out, "out");
    *out = Dup(MatroidToJson(m->value));
    return MV_OK;
  });
}

int mv_matroid_size(const mv_matroid* m) { return m == nullptr ? -1 : m->value.size(); }

int mv_matroid_rank(const mv_matroid* m) { return m == nullptr ? -1 : m->value.rank(); }

void mv_matroid_free(mv_matroid* m) { delete m; }

mv_status mv_compute(const mv_matroid* m, mv_method method, const mv_options* options,
                     mv_poly** out) {
  return Guard([&] {
    RequireArg(m, "matroid");
    RequireArg(out, "out");
    *out = nullptr;
    const ComputeOptions opts = ToOptions(options);
    const uint64_t seed = SeedOf(options);
    auto brion = [&] {
      return BrionVolume(m->value, SampleGenericVectors(m->value, seed, opts.retry_budget),
                         opts.threads);
    };
    switch (method) {
      case MV_METHOD_BRION:
        *out = new mv_poly{brion()};
        return MV_OK;
      case MV_METHOD_DELETION:
        *out = new mv_poly{DeletionVolume(m->value)};
        return MV_OK;
      case MV_METHOD_BOTH: {
        VolPolynomial b = brion();
        VolPolynomial d = DeletionVolume(m->value);
        if (!b.same_value(d)) {
          const auto [only_b, only_d] = SymmetricDifference(b.poly, d.poly);
          g_last_error = "methods disagree; only in brion: " + ToPretty(only_b) +
                         "; only in deletion: " + ToPretty(only_d);
          return MV_CHECK_FAILED;
        }
        d.method = "both";
        d.seed = seed;
        *out = new mv_poly{std::move(d)};
        return MV_OK;
      }
    }
    throw InvalidInput("unknown method");
  });
}

mv_status mv_poly_from_json(const char* json, mv_poly** out) {
  return Guard([&] {
    RequireArg(json, "json");
    RequireArg(out, "out");
    *out = new mv_poly{ParsePolyJson(json)};
    return MV_OK;
  });
}

mv_status mv_poly_to_json(const mv_poly* p, char** out) {
  return Guard([&] {
    RequireArg(p, "poly");
    RequireArg(out, "out");
    *out = Dup(PolyToJson(p->value));
    return MV_OK;
  });
}

mv_status mv_poly_to_pretty(const mv_poly* p, char** out) {
  return Guard([&] {
    RequireArg(p, "poly");
    RequireArg(out, "out");
    *out = Dup(ToPretty(p->value.poly));
    return MV_OK;
  });
}

int mv_poly_degree(const mv_poly* p) { return p == nullptr ? -1 : p->value.degree; }

size_t mv_poly_term_count(const mv_poly* p) { return p == nullptr ? 0 : p->value.poly.term_count(); }

int mv_poly_equal(const mv_poly* a, const mv_poly* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->value.same_value(b->value) ? 1 : 0;
}

void mv_poly_free(mv_poly* p) { delete p; }

mv_status mv_verify(const mv_matroid* m, const mv_poly* vol, int rank_checks,
                    const mv_options* options, char** report) {
  return Guard([&] {
    RequireArg(m, "matroid");
    RequireArg(report, "report");
    *report = nullptr;
    const ComputeOptions opts = ToOptions(options);
    const VolPolynomial v = vol != nullptr ? vol->value : DeletionVolume(m->value);
    const VerifyReport r = VerifyVolume(m->value, v, VerifyOptions{opts.threads, rank_checks != 0});
    Json doc;
    doc["passed"] = r.passed();
    doc["checks"] = ChecksJson(r);
    *report = Dup(Dump(doc));
    if (!r.passed()) g_last_error = "verification failed";
    return r.passed() ? MV_OK : MV_CHECK_FAILED;
  });
}

mv_status mv_compare(const mv_matroid* m, unsigned seed_count, const mv_options* options,
                     char** report) {
  return Guard([&] {
    RequireArg(m, "matroid");
    RequireArg(report, "report");
    *report = nullptr;
    Require(seed_count >= 1, "need at least one seed");
    std::vector<uint64_t> seeds;
    for (unsigned k = 0; k < seed_count; ++k) seeds.push_back(SeedOf(options) + k);
    const CrossValidation cv = CrossValidate(m->value, seeds, ToOptions(options));
    *report = Dup(Dump(CrossValidationJson(cv, seeds)));
    if (!cv.passed()) {
      g_last_error = cv.agree ? "invariant check failed" : cv.divergence;
    }
    return cv.passed() ? MV_OK : MV_CHECK_FAILED;
  });
}

mv_status mv_corpus(int max_elements, int count, const mv_options* options, char** report) {
  return Guard([&] {
    RequireArg(report, "report");
    *report = nullptr;
    const uint64_t seed = SeedOf(options);
    std::vector<CorpusEntry> corpus = UniformCorpus(max_elements);
    if (count > 0) {
      for (auto& e : RandomCorpus(count, max_elements, seed)) {
        corpus.push_back(std::move(e));
      }
    }
    const std::vector<uint64_t> seeds{seed, seed + 1};
    Json entries = Json::array();
    size_t failed = 0;
    for (const CorpusEntry& e : corpus) {
      const CrossValidation cv = CrossValidate(e.matroid, seeds, ToOptions(options));
      if (!cv.passed()) ++failed;
      Json row;
      row["name"] = e.name;
      row["elements"] = e.matroid.size();
      row["rank"] = e.matroid.rank();
      row["terms"] = cv.deletion.poly.term_count();
      row["passed"] = cv.passed();
      if (!cv.passed()) row["details"] = CrossValidationJson(cv, seeds);
      entries.push_back(std::move(row));
    }
    Json doc;
    doc["passed"] = failed == 0;
    doc["matroids"] = corpus.size();
    doc["failed"] = failed;
    doc["entries"] = std::move(entries);
    *report = Dup(Dump(doc));
    if (failed != 0) g_last_error = std::to_string(failed) + " corpus matroid(s) failed";
    return failed == 0 ? MV_OK : MV_CHECK_FAILED;
  });
}

}  // extern "C"
