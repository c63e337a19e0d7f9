// Regenerates the bundled figure instances. The searches are seeded, so the
// output is reproducible; the checked-in files are what the tests read.

#include "banded/chord_solver.hpp"
#include "banded/io.hpp"
#include "banded/morph.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <random>

using namespace banded;

namespace {

using Rng = std::mt19937_64;

Rational snap(double v, long den) { return ratio(std::lround(v * static_cast<double>(den)), den); }

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::vector<Point2> rotate(const std::vector<Point2>& p, const Rational& c, const Rational& s) {
  std::vector<Point2> out;
  for (const auto& v : p) out.push_back({c * v.x - s * v.y, s * v.x + c * v.y});
  return out;
}

bool valid(const SliceInstance& inst, const std::string& rl) {
  VerifyOptions opts;
  opts.fail_fast = true;
  return verify_banded_surface(assignment_to_surface(inst, ChordAssignment::parse(rl)), opts).passed();
}

Rational orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return dot(cross(b - a, c - a), d - a);
}

// Closed segment pq against the closed triangle abc, ignoring coplanar contact.
bool segment_hits_triangle(const Point3& p, const Point3& q, const Point3& a, const Point3& b, const Point3& c) {
  int sp = sgn(orient3d(a, b, c, p)), sq = sgn(orient3d(a, b, c, q));
  if (sp * sq > 0 || (sp == 0 && sq == 0)) return false;
  int s1 = sgn(orient3d(p, q, a, b)), s2 = sgn(orient3d(p, q, b, c)), s3 = sgn(orient3d(p, q, c, a));
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

std::optional<SliceInstance> try_make(std::vector<Point2> p, std::vector<Point2> q) {
  try {
    return SliceInstance::make(std::move(p), std::move(q));
  } catch (const InvalidInstance&) {
    return std::nullopt;
  }
}

std::vector<Point2> random_triangle(Rng& rng) {
  std::vector<Point2> t;
  for (int k = 0; k < 3; ++k) t.push_back({snap(uniform(rng, -2, 2), 4), snap(uniform(rng, -2, 2), 4)});
  if (sgn(Rational(cross2(Point2(t[1] - t[0]), Point2(t[2] - t[0])))) < 0) std::swap(t[1], t[2]);
  return t;
}

SliceInstance fig3a(Rng& rng) {
  for (;;) {
    auto p = random_triangle(rng);
    auto q = random_triangle(rng);
    auto inst = try_make(p, q);
    if (!inst || find_assignment(*inst)) continue;
    if (!brute_force_assignments(*inst).empty()) continue;
    Point3 A = lift(p[0], 0), B = lift(p[1], 0), C = lift(p[2], 0);
    Point3 A1 = lift(q[0], 1), B1 = lift(q[1], 1), C1 = lift(q[2], 1);
    if (segment_hits_triangle(C, C1, A, B1, A1) && segment_hits_triangle(C, C1, B, B1, A1)) return *inst;
  }
}

SliceInstance fig3b(Rng& rng) {
  for (;;) {
    auto inst = try_make(random_triangle(rng), random_triangle(rng));
    if (!inst || !valid(*inst, "LLL")) continue;
    auto half = morph_position(*inst, Rational(1, 2)).polygon;
    if (sgn(signed_area2(half.span())) >= 0) continue;
    auto verdict = planarity_preserving(*inst);
    if (!verdict.preserved && verdict.lo < Rational(1, 2) && Rational(1, 2) < verdict.hi) return *inst;
  }
}

SliceInstance fig7(Rng& rng) {
  for (;;) {
    std::vector<Point2> star;
    double spin = uniform(rng, -0.3, 0.3);
    for (int k = 0; k < 8; ++k) {
      double angle = spin + k * std::numbers::pi / 4 + uniform(rng, -0.25, 0.25);
      double r = k % 2 == 0 ? uniform(rng, 2.0, 3.0) : uniform(rng, 0.4, 1.0);
      star.push_back({snap(r * std::cos(angle), 8), snap(r * std::sin(angle), 8)});
    }
    auto inst = try_make(star, rotate(star, 0, 1));
    if (!inst) continue;
    if (!planarity_preserving(*inst).preserved) continue;
    if (!find_assignment(*inst) && brute_force_assignments(*inst).empty()) return *inst;
  }
}

void write(const std::filesystem::path& dir, const std::string& name, const std::string& note, const SliceInstance& inst) {
  save_instance(dir / (name + ".json"), InstanceDocument{inst, name, note});
  std::cout << "wrote " << (dir / (name + ".json")).string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate the bundled figure instances"};
  std::string out_dir = "figures";
  std::uint64_t seed = 2024;
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "search seed");
  CLI11_PARSE(app, argc, argv);
  std::filesystem::create_directories(out_dir);

  // Near-equilateral triangle with unit side BC, turned by the rational
  // rotation (4/5, 3/5) and by (33/65, 56/65).
  std::vector<Point2> tri{{parse_rational("0.577"), 0}, {parse_rational("-0.2885"), parse_rational("0.5")},
                          {parse_rational("-0.2885"), parse_rational("-0.5")}};
  auto twisted = SliceInstance::make(tri, rotate(tri, Rational(4, 5), Rational(3, 5)));
  if (!valid(twisted, "RRR") || !valid(twisted, "LLL")) {
    std::cerr << "twisted prism lost a chord pattern\n";
    return 1;
  }
  write(out_dir, "fig1_twisted_prism", "Schonhardt twisted prism, rotation (cos, sin) = (4/5, 3/5)", twisted);
  write(out_dir, "fig1c_antiprism", "triangle turned by (cos, sin) = (33/65, 56/65), about 59.5 degrees",
        SliceInstance::make(tri, rotate(tri, Rational(33, 65), Rational(56, 65))));

  Rng rng(seed);
  write(out_dir, "fig3a_no_surface", "triangle pair without a Steiner-free banded surface", fig3a(rng));
  write(out_dir, "fig3b_sat_nonplanar", "all-left chords valid, morph inverted at t = 1/2", fig3b(rng));
  write(out_dir, "fig7_star", "8-vertex star about the origin turned by 90 degrees", fig7(rng));
  return 0;
}
