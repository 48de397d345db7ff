#include <benchmark/benchmark.h>

#include "mp4/multiplicity.hpp"
#include "mp4/reducibility.hpp"
#include "mp4io/scenario_json.hpp"

namespace {

const char* const kFixtures[] = {"principal.json", "saito_kurokawa.json", "howe_ps.json",
                                 "soudry.json", "tempered.json"};

mp4::Scenario fixture(int i) {
  return mp4io::load_scenario(std::string(MP4_SCENARIO_DIR) + "/" + kFixtures[i]);
}

// Principal parameter over n places ≡ 1 mod 4, with a = p at the first two.
mp4::Scenario principal(int n) {
  mp4::Scenario sc;
  sc.name = "principal-" + std::to_string(n);
  mp4::GlobalElement a{"a", {}};
  for (int i = 0; i < n; ++i) {
    const std::string id = "v" + std::to_string(i);
    sc.places.push_back({id, mp4::PlaceKind::odd_1mod4});
    a.classes[id] = mp4::make_class(mp4::PlaceKind::odd_1mod4, i < 2 ? 0b10 : 0);
  }
  sc.elements.push_back(a);
  sc.parameter = mp4::AParameter{{{"a", 4}}};
  return sc;
}

void BM_Enumerate(benchmark::State& state) {
  const auto sc = fixture(static_cast<int>(state.range(0)));
  const auto gp = mp4::make_global_packet(sc);
  for (auto _ : state) benchmark::DoNotOptimize(mp4::enumerate_constituents(gp));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 4);

void BM_BruteForce(benchmark::State& state) {
  const auto sc = fixture(static_cast<int>(state.range(0)));
  const auto gp = mp4::make_global_packet(sc);
  for (auto _ : state) benchmark::DoNotOptimize(mp4::brute_force_count(gp));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_BruteForce)->DenseRange(0, 4);

void BM_GlobalPacket(benchmark::State& state) {
  const auto sc = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mp4::make_global_packet(sc));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_GlobalPacket)->DenseRange(0, 4);

void BM_PrincipalEnumerate(benchmark::State& state) {
  const auto sc = principal(static_cast<int>(state.range(0)));
  const auto gp = mp4::make_global_packet(sc);
  for (auto _ : state) benchmark::DoNotOptimize(mp4::enumerate_constituents(gp));
}
BENCHMARK(BM_PrincipalEnumerate)->DenseRange(2, 6);

void BM_PrincipalBruteForce(benchmark::State& state) {
  const auto sc = principal(static_cast<int>(state.range(0)));
  const auto gp = mp4::make_global_packet(sc);
  for (auto _ : state) benchmark::DoNotOptimize(mp4::brute_force_count(gp));
}
BENCHMARK(BM_PrincipalBruteForce)->DenseRange(2, 6);

void BM_ReduceMpP1(benchmark::State& state) {
  const mp4::GLCharacter chi{"u", true, mp4::Rational(3, 2)};
  const mp4::Mp2Inducing pi{mp4::Mp2Inducing::Kind::odd_weil, "u"};
  for (auto _ : state) benchmark::DoNotOptimize(mp4::reduce_mp_p1(chi, pi));
}
BENCHMARK(BM_ReduceMpP1);

}  // namespace

BENCHMARK_MAIN();
