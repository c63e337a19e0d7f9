#include "banded/steiner.hpp"

#include "support.hpp"

#include <doctest.h>

#include <chrono>

using namespace banded;
using namespace testing;

namespace {

struct Tally {
  int cases = 0;
  int layered = 0;
  std::size_t max_steiner = 0;
};

void check_build(const SliceInstance& inst, const VerifyOptions& opts, Tally& tally) {
  auto b = build_layered(inst, opts);
  ++tally.cases;
  CHECK(verify_banded_surface(b.surface, opts).passed());
  std::size_t n = inst.n();
  std::size_t steiner = b.surface.steiner_count();
  CHECK(steiner <= steiner_bound(n));
  if (b.direct) {
    CHECK(steiner == 0);
    return;
  }
  ++tally.layered;
  tally.max_steiner = std::max(tally.max_steiner, steiner);
  // One Steiner point per band on every intermediate layer.
  CHECK(steiner == n * b.stack.layers.size());
  CHECK(b.surface.vertices.size() == n * (b.stack.layers.size() + 2));
  for (const auto& l : b.stack.layers) CHECK(simple_oracle(l.polygon.vertices));
}

}  // namespace

TEST_CASE("layered surfaces for small random pairs") {
  gen::Rng rng(1009);
  VerifyOptions opts;
  opts.fail_fast = true;
  Tally tally;
  auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < 1000; ++k) {
    std::size_t n = static_cast<std::size_t>(gen::uniform_int(rng, 3, 15));
    auto inst = steiner_instance(rng, n);
    CAPTURE(k);
    CAPTURE(n);
    check_build(inst, opts, tally);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE(tally.cases, " cases, ", tally.layered, " needed layers, max ", tally.max_steiner, " Steiner points, ", secs, " s");
  CHECK(tally.layered > 100);
}

TEST_CASE("layered surfaces for 30-gons") {
  gen::Rng rng(3001);
  VerifyOptions opts;
  opts.fail_fast = true;
  Tally tally;
  auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < 20; ++k) {
    auto inst = steiner_instance(rng, 30);
    CAPTURE(k);
    check_build(inst, opts, tally);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE(tally.cases, " cases, ", tally.layered, " needed layers, max ", tally.max_steiner, " Steiner points, ", secs, " s");
  CHECK(tally.layered > 0);
}
