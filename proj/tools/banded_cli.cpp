#include "banded/chord_solver.hpp"
#include "banded/generators.hpp"
#include "banded/io.hpp"
#include "banded/morph.hpp"
#include "banded/steiner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace banded;

namespace {

enum Exit { Ok = 0, InvalidInput = 1, Negative = 2, Usage = 3 };

// Thrown for precondition failures that map to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string literal_text(const Literal& l) {
  return std::string(l.positive ? "R" : "L") + std::to_string(l.var);
}

void print_chain(std::ostream& out, const ClauseSet& clauses, const std::vector<std::size_t>& chain) {
  for (std::size_t c : chain) {
    const Clause2& cl = clauses.clauses.at(c);
    out << " (" << literal_text(cl.a) << " or " << literal_text(cl.b) << ")";
  }
  out << '\n';
}

MeshFormat format_for(const std::string& path) {
  auto ext = std::filesystem::path(path).extension().string();
  return ext == ".obj" || ext == ".OBJ" ? MeshFormat::Obj : MeshFormat::Off;
}

void write_mesh(const BandedSurface& s, const std::string& mesh, const std::string& bands) {
  if (!mesh.empty()) {
    export_mesh(s, format_for(mesh), mesh);
    std::cout << "mesh: " << mesh << '\n';
  }
  if (!bands.empty()) {
    save_bands(bands, s);
    std::cout << "bands: " << bands << '\n';
  }
}

int cmd_check(const std::string& path) {
  auto doc = load_instance_document(path);
  std::cout << "ok: n = " << doc.instance.n() << ", both polygons simple and counterclockwise";
  if (!doc.name.empty()) std::cout << " (" << doc.name << ")";
  std::cout << '\n';
  return Ok;
}

int cmd_solve(const std::string& path, const std::string& mesh, const std::string& bands, bool brute) {
  auto inst = load_instance(path);
  auto r = solve_no_steiner(inst);
  if (r.sat()) {
    std::cout << r.assignment->to_string() << '\n';
    write_mesh(*r.surface, mesh, bands);
  } else {
    const auto& w = r.witness;
    std::cout << "UNSAT: band " << w.var << " can take neither chord\n";
    std::cout << "  R" << w.var << " forces L" << w.var << ":";
    print_chain(std::cout, r.clauses, w.chain_to_negative);
    std::cout << "  L" << w.var << " forces R" << w.var << ":";
    print_chain(std::cout, r.clauses, w.chain_to_positive);
  }
  if (brute) {
    if (inst.n() > 16) throw UsageError("--brute-force is limited to n <= 16");
    auto all = brute_force_assignments(inst);
    std::cout << "brute force: " << all.size() << " valid assignment(s)";
    for (const auto& a : all) std::cout << ' ' << a.to_string();
    std::cout << '\n';
    if (all.empty() == r.sat()) {
      std::cerr << "error: brute force disagrees with the 2-SAT verdict\n";
      return InvalidInput;
    }
  }
  return r.sat() ? Ok : Negative;
}

int cmd_steiner(const std::string& path, const std::string& mesh, const std::string& bands) {
  auto inst = load_instance(path);
  auto b = build_layered(inst);
  std::cout << "steiner points: " << b.surface.steiner_count() << " (bound " << steiner_bound(inst.n()) << ")\n";
  if (b.direct) {
    std::cout << "no Steiner points needed\n";
  } else {
    std::cout << "layers: " << b.stack.layers.size() << '\n';
  }
  write_mesh(b.surface, mesh, bands);
  return Ok;
}

int cmd_morph(const std::string& path) {
  auto v = planarity_preserving(load_instance(path));
  std::cout << v.describe() << '\n';
  return v.preserved ? Ok : Negative;
}

int cmd_convex(const std::string& path) {
  auto inst = load_instance(path);
  try {
    std::cout << convex_chord_rule(inst).to_string() << '\n';
  } catch (const PreconditionError& e) {
    std::cout << "precondition failed: " << e.what() << '\n';
    return Usage;
  }
  return Ok;
}

BandedSurface load_mesh(const std::string& mesh, const std::string& bands) {
  auto s = import_off(mesh);
  if (!bands.empty()) load_bands(bands, s);
  return s;
}

int cmd_section(const std::string& mesh, const std::string& bands, const std::string& t_text, const std::string& out) {
  Rational t;
  try {
    t = parse_rational(t_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--t: ") + e.what());
  }
  auto s = load_mesh(mesh, bands);
  auto r = cross_section(s, t);
  if (!r.ok()) {
    std::cout << "section failed: " << to_string(r.error) << ": " << r.detail << '\n';
    return Negative;
  }
  if (out.empty()) {
    std::cout << format_section(*r.section);
  } else {
    export_section(*r.section, out);
    std::cout << "section with " << r.section->polygon.size() << " vertices written to " << out << '\n';
  }
  return Ok;
}

int cmd_verify(const std::string& mesh, const std::string& bands) {
  auto s = load_mesh(mesh, bands);
  auto report = verify_banded_surface(s);
  std::cout << report.summary() << '\n';
  return report.passed() ? Ok : Negative;
}

int cmd_generate(std::uint64_t seed, std::size_t n, const std::string& shape, const std::string& out) {
  if (n < 3) throw UsageError("--n must be at least 3");
  gen::Rng rng(seed);
  SliceInstance inst = [&] {
    if (shape == "mixed") return gen::mixed_instance(rng, n);
    gen::Shape s = shape == "convex" ? gen::Shape::Convex
                   : shape == "star" ? gen::Shape::Star
                   : shape == "spiral" ? gen::Shape::Spiral
                                       : gen::Shape::TwoOpt;
    auto p = gen::polygon(rng, s, n);
    auto q = gen::polygon(rng, s, n);
    return SliceInstance::make(p, q);
  }();
  InstanceDocument doc{inst, "random-" + shape + "-" + std::to_string(n), "seed " + std::to_string(seed)};
  if (out.empty()) {
    std::cout << format_instance(doc);
  } else {
    save_instance(out, doc);
  }
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Banded surfaces between two polygons in parallel planes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag, "seed for randomized commands (default: BANDED_SEED or 1)");

  std::string inst, mesh, bands, t_text, out, shape = "mixed";
  bool brute = false;
  std::size_t n = 8;

  auto* check = app.add_subcommand("check", "validate an instance file");
  check->add_option("instance", inst)->required();

  auto* solve = app.add_subcommand("solve", "find a chord assignment without Steiner points");
  solve->add_option("instance", inst)->required();
  solve->add_option("--export", mesh, "write the surface (.off or .obj)");
  solve->add_option("--bands", bands, "write the band file");
  solve->add_flag("--brute-force", brute, "also enumerate every assignment");

  auto* steiner = app.add_subcommand("steiner", "build a surface with Steiner points");
  steiner->add_option("instance", inst)->required();
  steiner->add_option("--export", mesh, "write the surface (.off or .obj)");
  steiner->add_option("--bands", bands, "write the band file");

  auto* morph = app.add_subcommand("morph-check", "decide whether the linear morph stays simple");
  morph->add_option("instance", inst)->required();

  auto* convex = app.add_subcommand("convex-rule", "chord assignment for convex polygons");
  convex->add_option("instance", inst)->required();

  auto* section = app.add_subcommand("section", "cross-section of a mesh at height t");
  section->add_option("mesh", mesh)->required();
  section->add_option("--t", t_text, "height, e.g. 1/3")->required();
  section->add_option("--bands", bands, "band file of the mesh");
  section->add_option("--out", out, "write the polyline here instead of stdout");

  auto* verify = app.add_subcommand("verify", "run every check on a mesh");
  verify->add_option("mesh", mesh)->required();
  verify->add_option("--bands", bands, "band file of the mesh")->required();

  auto* generate = app.add_subcommand("generate", "write a random instance");
  generate->add_option("--n", n, "vertex count");
  generate->add_option("--shape", shape, "convex, star, spiral, two-opt or mixed")
      ->check(CLI::IsMember({"convex", "star", "spiral", "two-opt", "mixed"}));
  generate->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }

  std::uint64_t seed = 1;
  if (seed_flag) {
    seed = *seed_flag;
  } else if (const char* env = std::getenv("BANDED_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: BANDED_SEED is not an unsigned integer\n";
      return Usage;
    }
  }

  try {
    if (*check) return cmd_check(inst);
    if (*solve) return cmd_solve(inst, mesh, bands, brute);
    if (*steiner) return cmd_steiner(inst, mesh, bands);
    if (*morph) return cmd_morph(inst);
    if (*convex) return cmd_convex(inst);
    if (*section) return cmd_section(mesh, bands, t_text, out);
    if (*verify) return cmd_verify(mesh, bands);
    if (*generate) return cmd_generate(seed, n, shape, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Usage;
  } catch (const FormatError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return InvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return InvalidInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return InvalidInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return InvalidInput;
  }
  return Usage;
}
