/*
 * Copyright (c) 2026, The surfkernel Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <benchmark/benchmark.h>

#include "surfkernel/harvey.hpp"
#include "surfkernel/homology.hpp"
#include "surfkernel/schreier.hpp"

namespace sk = surfkernel;

namespace {

struct S3Data {
  sk::FiniteGroup grp = sk::make_symmetric(3);
  sk::OrbifoldSignature sig;
  sk::GeneratingVector phi;

  explicit S3Data(std::uint32_t g0) : sig(g0, {2, 2, 2, 2, 2, 2, 3, 3}) {
    phi.a.assign(g0, sk::GroupElement::identity());
    phi.b.assign(g0, sk::GroupElement::identity());
    for (std::uint32_t i : {1, 1, 2, 2, 3, 3, 4, 5}) phi.xi.push_back({i});
  }
};

void BM_Transversal(benchmark::State& state) {
  S3Data const d(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk::minimal_transversal(d.grp, d.phi, d.sig));
  }
}
BENCHMARK(BM_Transversal)->Arg(0)->Arg(2);

void BM_RawPresentation(benchmark::State& state) {
  S3Data const d(static_cast<std::uint32_t>(state.range(0)));
  auto const t = sk::minimal_transversal(d.grp, d.phi, d.sig);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk::raw_presentation(d.sig, d.grp, d.phi, t));
  }
}
BENCHMARK(BM_RawPresentation)->Arg(0)->Arg(2);

void BM_Simplify(benchmark::State& state) {
  S3Data const d(static_cast<std::uint32_t>(state.range(0)));
  auto const t = sk::minimal_transversal(d.grp, d.phi, d.sig);
  auto const raw = sk::raw_presentation(d.sig, d.grp, d.phi, t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk::simplify(raw));
  }
}
BENCHMARK(BM_Simplify)->Arg(0)->Arg(1)->Arg(2)->Arg(4);

void BM_HomologyMatrices(benchmark::State& state) {
  S3Data const d(static_cast<std::uint32_t>(state.range(0)));
  auto const t = sk::minimal_transversal(d.grp, d.phi, d.sig);
  auto const p = sk::simplify(sk::raw_presentation(d.sig, d.grp, d.phi, t));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk::homology_matrices(p, t, d.grp, d.phi));
  }
}
BENCHMARK(BM_HomologyMatrices)->Arg(0)->Arg(1)->Arg(2);

void BM_OrbitZn(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  auto const grp = sk::make_cyclic(n);
  sk::OrbifoldSignature const sig(2, {});
  sk::GeneratingVector const phi{{{1}, {0}}, {{0}, {0}}, {}};
  auto const ops = sk::parse_program("V1,V2,V3,Bhat:1");
  for (auto _ : state) {
    auto const r = sk::enumerate_orbit(phi, ops, grp, sig, 1u << 20);
    state.counters["orbit"] = static_cast<double>(r.vectors.size());
  }
}
BENCHMARK(BM_OrbitZn)->Arg(3)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
