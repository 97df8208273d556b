// Copyright 2026 The runstat Authors
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

// Compares the OpenMP kernels against their serial reference implementations
// and checks that both produce identical results.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "runstat/algebra.hpp"
#include "runstat/genfun.hpp"
#include "runstat/oracle.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
#endif
}

void bench_enumeration(const runstat::Specification& spec, int repeat) {
  std::printf("enumerate_stats, spec [%s], %s sequences\n", spec.to_string().c_str(),
              spec.multinomial().str().c_str());
  const int bound = spec.total();

  double serial_best = 1e100;
  runstat::DistributionTable serial_table{spec, {}};
  for (int i = 0; i < repeat; ++i) {
    const double start = now_seconds();
    serial_table = runstat::enumerate_stats_serial(spec, bound);
    serial_best = std::min(serial_best, now_seconds() - start);
  }

  double parallel_best = 1e100;
  runstat::DistributionTable parallel_table{spec, {}};
  for (int i = 0; i < repeat; ++i) {
    const double start = now_seconds();
    parallel_table = runstat::enumerate_stats(spec, bound);
    parallel_best = std::min(parallel_best, now_seconds() - start);
  }

  const bool equal =
      serial_table.entries == parallel_table.entries && serial_table.total() == parallel_table.total();
  std::printf("  serial   %8.3f s\n", serial_best);
  std::printf("  parallel %8.3f s   speedup %.2fx   results %s\n", parallel_best,
              serial_best / parallel_best, equal ? "identical" : "DIFFER");
  if (!equal) std::exit(1);
}

void bench_poly_mul(const runstat::Specification& spec, int repeat) {
  using namespace runstat;
  // Squaring the per-symbol-runs generating function is the heaviest product
  // the construction paths ever ask for.
  const Polynomial g = gf_recursive(spec, TrackerMode::kRSLPerRuns);
  std::printf("poly_mul, G x G for spec [%s], %zu terms each\n", spec.to_string().c_str(),
              g.terms().size());

  double serial_best = 1e100;
  Polynomial serial_out(g.ctx_ptr());
  for (int i = 0; i < repeat; ++i) {
    const double start = now_seconds();
    serial_out = poly_mul_serial(g, g);
    serial_best = std::min(serial_best, now_seconds() - start);
  }

  double parallel_best = 1e100;
  Polynomial parallel_out(g.ctx_ptr());
  for (int i = 0; i < repeat; ++i) {
    const double start = now_seconds();
    parallel_out = poly_mul_parallel(g, g);
    parallel_best = std::min(parallel_best, now_seconds() - start);
  }

  const bool equal = serial_out == parallel_out;
  std::printf("  serial   %8.3f s   (%zu product terms)\n", serial_best, serial_out.terms().size());
  std::printf("  parallel %8.3f s   speedup %.2fx   results %s\n", parallel_best,
              serial_best / parallel_best, equal ? "identical" : "DIFFER");
  if (!equal) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  std::string enum_spec = "2,2,2,2,2";
  std::string poly_spec = "3,3,3,3";
  int repeat = 3;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&](const char* name) -> std::string {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "%s expects a value\n", name);
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--enum-spec") enum_spec = next("--enum-spec");
    else if (arg == "--poly-spec") poly_spec = next("--poly-spec");
    else if (arg == "--repeat") repeat = std::atoi(next("--repeat").c_str());
    else {
      std::fprintf(stderr, "usage: %s [--enum-spec 2,2,2,2,2] [--poly-spec 3,3,3,3] [--repeat 3]\n",
                   argv[0]);
      return 2;
    }
  }

#ifdef _OPENMP
  std::printf("OpenMP with %d threads\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel kernels fall back to serial\n");
#endif

  auto parse = [](const std::string& text) {
    auto spec = runstat::Specification::parse(text);
    if (!spec) {
      std::fprintf(stderr, "bad specification '%s'\n", text.c_str());
      std::exit(2);
    }
    return *spec;
  };

  bench_enumeration(parse(enum_spec), repeat);
  bench_poly_mul(parse(poly_spec), repeat);
  return 0;
}
