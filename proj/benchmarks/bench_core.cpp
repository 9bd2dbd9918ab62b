#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "weylrack/classes.hpp"
#include "weylrack/constructions.hpp"
#include "weylrack/grammar.hpp"
#include "weylrack/rack.hpp"

using namespace weylrack;

namespace {

std::vector<SignedElem> sample(const GroupKind& k, std::size_t count) {
  const auto group = enumerate_group(k);
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  std::vector<SignedElem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(group[pick(rng)]);
  return out;
}

void BM_Multiply(benchmark::State& state) {
  const auto elems = sample(kind_b(static_cast<int>(state.range(0))), 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(elems[i & 1023], elems[(i + 7) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_Multiply)->Arg(5)->Arg(7);

void BM_Conjugate(benchmark::State& state) {
  const auto elems = sample(kind_b(static_cast<int>(state.range(0))), 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugate(elems[i & 1023], elems[(i + 13) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_Conjugate)->Arg(5)->Arg(7);

void BM_SqClosedForm(benchmark::State& state) {
  const auto elems = sample(kind_b(5), 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sq_closed_form(elems[i & 1023], elems[(i + 3) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_SqClosedForm);

void BM_PackedIndex(benchmark::State& state) {
  const auto elems = sample(kind_b(7), 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(packed_index(elems[i++ & 1023]));
  }
}
BENCHMARK(BM_PackedIndex);

void BM_ParsePrint(benchmark::State& state) {
  const auto elems = sample(kind_b(7), 256);
  std::vector<std::string> texts;
  for (const auto& e : elems) texts.push_back(print_element(e));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_element(texts[i++ & 255]));
  }
}
BENCHMARK(BM_ParsePrint);

void BM_ClassBfs(benchmark::State& state) {
  const SignedElem seed = parse_element("00000;(1 2 3 4 5)");
  const GroupKind k = kind_b(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_of(seed, k).size());
  }
}
BENCHMARK(BM_ClassBfs);

void BM_EnumerateB6(benchmark::State& state) {
  const GroupKind k = kind_b(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_group(k).size());
  }
}
BENCHMARK(BM_EnumerateB6);

void BM_SearchTypeD(benchmark::State& state) {
  const ConjClass c = class_of(parse_element("00000;(1 2 3)(4 5)"), kind_b(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_type_d(c).witness.has_value());
  }
}
BENCHMARK(BM_SearchTypeD);

void BM_SearchRefutation(benchmark::State& state) {
  // Exhaustive pair scan on a class that is not of type D.
  const ConjClass c = class_of(parse_element("00000;(1 2 3)"), kind_b(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_type_d(c).exhaustive);
  }
}
BENCHMARK(BM_SearchRefutation);

void BM_ClassifySweepB4(benchmark::State& state) {
  const ClassList list = all_classes(kind_b(4));
  for (auto _ : state) {
    int certified = 0;
    for (const auto& c : list.classes) {
      if (perm_is_identity(c.rep.perm)) continue;
      certified += classify_class(c).verdict == ClassVerdict::TypeDCertified ? 1 : 0;
    }
    benchmark::DoNotOptimize(certified);
  }
}
BENCHMARK(BM_ClassifySweepB4);

}  // namespace

BENCHMARK_MAIN();
