#include "banded/steiner.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace banded;
using namespace testing;

namespace {

SliceInstance square_prism() {
  auto sq = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  return SliceInstance::make(sq, sq);
}

bool parallel_same_way(const Vector2& u, const Vector2& v) { return sgn(cross2(u, v)) == 0 && sgn(dot2(u, v)) > 0; }

}  // namespace

TEST_CASE("instances are validated") {
  auto sq = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto cw = std::vector<Point2>(sq.rbegin(), sq.rend());
  CHECK_THROWS_AS(SliceInstance::make(sq, cw), InvalidInstance);
  CHECK_THROWS_AS(SliceInstance::make(sq, pts({{0, 0}, {1, 0}, {0, 1}})), InvalidInstance);
  CHECK_THROWS_AS(SliceInstance::make(pts({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), sq), InvalidInstance);
  CHECK_THROWS_AS(SliceInstance::make(pts({{0, 0}, {1, 0}}), pts({{0, 0}, {1, 0}})), InvalidInstance);
  CHECK_THROWS_AS(SliceInstance::make(pts({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), sq), InvalidInstance);
  auto inst = SliceInstance::make(sq, sq);
  CHECK(inst.source.z_level == 0);
  CHECK(inst.target.z_level == 1);
}

TEST_CASE("assignment strings") {
  auto a = ChordAssignment::parse("RLLR");
  CHECK(a.choices == std::vector<Chord>{Chord::Right, Chord::Left, Chord::Left, Chord::Right});
  CHECK(a.to_string() == "RLLR");
  CHECK_THROWS_AS(ChordAssignment::parse("RX"), std::invalid_argument);
}

TEST_CASE("band faces follow the chord") {
  // Right: (p_i, p_i+1, p'_i+1), (p_i, p'_i+1, p'_i); Left: (p_i, p_i+1, p'_i), (p_i+1, p'_i+1, p'_i).
  auto r = band_faces(3, 2, Chord::Right);
  CHECK(r[0] == Face{2, 0, 3});
  CHECK(r[1] == Face{2, 3, 5});
  auto l = band_faces(3, 2, Chord::Left);
  CHECK(l[0] == Face{2, 0, 5});
  CHECK(l[1] == Face{0, 3, 5});
}

TEST_CASE("Schonhardt and antiprism surfaces") {
  auto twisted = figure("fig1_twisted_prism");
  auto right = assignment_to_surface(twisted, ChordAssignment::parse("RRR"));
  CHECK(right.vertices.size() == 6);
  CHECK(right.faces.size() == 6);
  CHECK(right.steiner_count() == 0);
  CHECK(verify_banded_surface(right).passed());
  CHECK(verify_banded_surface(assignment_to_surface(twisted, ChordAssignment::parse("LLL"))).passed());

  auto anti = figure("fig1c_antiprism");
  CHECK(verify_banded_surface(assignment_to_surface(anti, ChordAssignment::parse("LLL"))).passed());

  CHECK_THROWS_AS(assignment_to_surface(twisted, ChordAssignment::parse("RR")), std::invalid_argument);
}

TEST_CASE("identity prism passes for every assignment") {
  auto inst = square_prism();
  for (int mask = 0; mask < 16; ++mask) {
    ChordAssignment a;
    for (int i = 0; i < 4; ++i) a.choices.push_back((mask >> i) & 1 ? Chord::Right : Chord::Left);
    auto s = assignment_to_surface(inst, a);
    CHECK(s.faces.size() == 8);
    CHECK(verify_banded_surface(s).passed());
  }
  auto section = cross_section(assignment_to_surface(inst, ChordAssignment::parse("RLRL")), Rational(1, 2));
  REQUIRE(section.ok());
  CHECK(section.section->polygon.vertices == pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(section.section->degenerate_bands == 4);
}

TEST_CASE("a prism without vertical edges is not banded") {
  // Each source vertex connects to the two target vertices it does not
  // match, so there is no edge from A to A'.
  auto inst = figure("fig1_twisted_prism");
  BandedSurface s;
  for (int slice = 0; slice < 2; ++slice) {
    const auto& poly = slice == 0 ? inst.source : inst.target;
    for (std::size_t i = 0; i < 3; ++i) s.vertices.push_back({lift(poly[i], slice), {VertexLabel::Kind::Original, slice, i}});
  }
  s.faces = {{0, 1, 5}, {1, 2, 3}, {2, 0, 4}, {3, 4, 2}, {4, 5, 0}, {5, 3, 1}};
  s.bands = {{0, 3}, {1, 4}, {2, 5}};
  s.paths = {{0, 3}, {1, 4}, {2, 5}};
  auto report = verify_banded_surface(s);
  CHECK_FALSE(report.paths.passed);
  CHECK(report.paths.witness.find("not a mesh edge") != std::string::npos);
  CHECK_FALSE(report.passed());
}

TEST_CASE("verifier catches broken meshes") {
  auto inst = figure("fig1_twisted_prism");
  auto s = assignment_to_surface(inst, ChordAssignment::parse("RRR"));

  auto holed = s;
  holed.faces.pop_back();
  holed.bands.back().pop_back();
  CHECK_FALSE(verify_banded_surface(holed).topology.passed);

  auto crossing = s;
  std::swap(crossing.paths[0], crossing.paths[1]);
  CHECK_FALSE(verify_banded_surface(crossing).paths.passed);

  auto bad_index = s;
  bad_index.faces[0][0] = 99;
  CHECK_THROWS_AS(verify_banded_surface(bad_index), std::invalid_argument);

  // The Fig 3(a) pair has no valid assignment; LLL fails on intersections.
  auto blocked = figure("fig3a_no_surface");
  auto report = verify_banded_surface(assignment_to_surface(blocked, ChordAssignment::parse("LLL")));
  CHECK(report.topology.passed);
  CHECK(report.paths.passed);
  CHECK_FALSE(report.intersections.passed);
  CHECK_FALSE(report.intersections.witness.empty());
}

TEST_CASE("Schonhardt section at t = 1/3 is the six-edge hexagon") {
  auto inst = figure("fig1_twisted_prism");
  auto r = cross_section(assignment_to_surface(inst, ChordAssignment::parse("RRR")), Rational(1, 3));
  REQUIRE(r.ok());
  const auto& poly = r.section->polygon;
  REQUIRE(poly.size() == 6);
  CHECK(r.section->degenerate_bands == 0);
  CHECK(polygon_is_simple(poly.span()));
  // Band i contributes one edge parallel to P'_i P'_i+1, then one parallel to
  // P_i P_i+1.
  for (std::size_t i = 0; i < 3; ++i) {
    Vector2 e1 = poly.at(2 * i + 1) - poly.at(2 * i);
    Vector2 e2 = poly.at(2 * i + 2) - poly.at(2 * i + 1);
    CHECK(parallel_same_way(e1, inst.target.at(i + 1) - inst.target.at(i)));
    CHECK(parallel_same_way(e2, inst.source.at(i + 1) - inst.source.at(i)));
  }
}

TEST_CASE("section of the inverted triangle pair at t = 1/2") {
  auto inst = figure("fig3b_sat_nonplanar");
  auto s = assignment_to_surface(inst, ChordAssignment::parse("LLL"));
  REQUIRE(verify_banded_surface(s).passed());
  auto r = cross_section(s, Rational(1, 2));
  REQUIRE(r.ok());
  CHECK(r.section->polygon.size() == 6);
  CHECK(polygon_is_ccw(r.section->polygon.span()));
}

TEST_CASE("section errors") {
  auto inst = figure("fig1_twisted_prism");
  auto s = assignment_to_surface(inst, ChordAssignment::parse("RRR"));
  CHECK(cross_section(s, 0).error == SectionError::VertexOnLevel);
  CHECK(cross_section(s, 1).error == SectionError::VertexOnLevel);
  CHECK(cross_section(s, 2).error == SectionError::OpenChain);

  auto blocked = figure("fig3a_no_surface");
  auto bad = assignment_to_surface(blocked, ChordAssignment::parse("RRR"));
  bool some_failure = false;
  for (const auto& t : VerifyOptions::default_section_levels()) some_failure |= !cross_section(bad, t).ok();
  CHECK(some_failure == !verify_banded_surface(bad).sections.passed);
}

TEST_CASE("combinatorial checks always pass for generated surfaces") {
  gen::Rng rng(61);
  int verified = 0;
  for (int k = 0; k < 150; ++k) {
    std::size_t n = static_cast<std::size_t>(gen::uniform_int(rng, 3, 9));
    auto inst = gen::mixed_instance(rng, n);
    ChordAssignment a;
    for (std::size_t i = 0; i < n; ++i) a.choices.push_back(gen::uniform_int(rng, 0, 1) ? Chord::Right : Chord::Left);
    auto s = assignment_to_surface(inst, a);
    auto report = verify_banded_surface(s);
    CHECK(report.topology.passed);
    CHECK(report.paths.passed);
    if (!report.passed()) continue;
    ++verified;
    // Each band gives two section edges unless it is flat at that level.
    for (const auto& t : VerifyOptions::default_section_levels()) {
      auto r = cross_section(s, t);
      REQUIRE(r.ok());
      CHECK(r.section->polygon.size() == 2 * n - r.section->degenerate_bands);
    }
  }
  CHECK(verified > 10);
}

TEST_CASE("section levels avoid vertex heights") {
  auto inst = figure("fig3a_no_surface");
  auto s = stack_to_surface(inst, build_layer_stack(inst));
  for (const auto& level : VerifyOptions::default_section_levels()) {
    Rational t = section_level_near(s, level);
    CHECK(abs(t - level) <= Rational(1, 1 << 20));
    for (const auto& v : s.vertices) CHECK(v.position.z != t);
    if (cross_section(s, level).error != SectionError::VertexOnLevel) CHECK(t == level);
    CHECK(cross_section(s, t).ok());
  }
  // The single Steiner layer sits at z = 1/2.
  CHECK(cross_section(s, Rational(1, 2)).error == SectionError::VertexOnLevel);
  CHECK(section_level_near(s, Rational(1, 2)) != Rational(1, 2));
}
