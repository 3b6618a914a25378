// oftool: generate fields, run transforms, verify theorems, solve PDEs and apply LTI systems.
//
// Exit codes: 0 ok, 1 verification failure, 2 format/parse/usage error,
// 3 domain-flag mismatch, 4 unsolvable forcing.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "oft/oft.hpp"

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kFormat = 2, kDomain = 3, kUnsolvable = 4 };

oft::Vec3 expand(const std::vector<double>& v, double fallback) {
  if (v.empty()) return {fallback, fallback, fallback};
  if (v.size() == 1) return {v[0], v[0], v[0]};
  return {v[0], v[1], v[2]};
}

struct GenArgs {
  std::string kind;
  std::vector<std::size_t> dims;
  std::string out;
  std::vector<double> spacing, origin;
  std::optional<std::uint64_t> seed;
  std::string values = "octonion";
};

int cmd_gen(const GenArgs& a) {
  const oft::Shape shape{a.dims[0], a.dims[1], a.dims[2]};
  const oft::Vec3 spacing = expand(a.spacing, 1.0);
  oft::Vec3 origin{};
  if (!a.origin.empty()) {
    origin = expand(a.origin, 0.0);
  } else if (a.kind == "gaussian") {
    // centred grid: the index floor(N/2) sits at coordinate 0
    for (int ax = 0; ax < 3; ++ax) origin[ax] = -static_cast<double>(shape[ax] / 2) * spacing[ax];
  }
  const oft::SamplingGrid grid(shape, spacing, origin);
  oft::OctField3 u(grid, oft::Domain::space);
  if (a.kind == "delta") {
    u(0, 0, 0) = oft::Octonion(1.0);
  } else if (a.kind == "gaussian") {
    u.for_each_index([&](std::size_t i, std::size_t j, std::size_t k, oft::Octonion& v) {
      const double x = grid.coordinate(0, i), y = grid.coordinate(1, j), z = grid.coordinate(2, k);
      v = oft::Octonion(std::exp(-std::numbers::pi * (x * x + y * y + z * z)));
    });
  } else {
    if (!a.seed) {
      std::cerr << "gen random: --seed is required\n";
      return kFormat;
    }
    const oft::FieldKind fk = a.values == "real"      ? oft::FieldKind::real
                              : a.values == "complex" ? oft::FieldKind::complex
                                                      : oft::FieldKind::octonion;
    oft::SplitMix64 rng(*a.seed);
    u = oft::random_field(grid, rng, fk);
  }
  oft::of3b::write_file(a.out, u);
  return kOk;
}

int cmd_oft(const std::string& in, const std::string& out, bool inverse, bool naive) {
  const oft::OctField3 u = oft::of3b::read_file(in);
  const oft::OctField3 r = inverse ? (naive ? oft::idsoft_naive(u) : oft::idsoft(u))
                                   : (naive ? oft::dsoft_naive(u) : oft::dsoft_fast(u));
  oft::of3b::write_file(out, r);
  return kOk;
}

int cmd_verify(std::uint64_t seed, const std::vector<std::size_t>& sizes, const std::string& suite) {
  if (!suite.empty()) {
    const auto& names = oft::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      std::cerr << "verify: unknown suite '" << suite << "'\n";
      return kFormat;
    }
  }
  bool all = true;
  for (const auto& r : oft::run_all(seed, sizes, suite)) {
    std::cout << oft::format_report(r) << '\n';
    all = all && r.passed;
  }
  return all ? kOk : kVerifyFailed;
}

void write_indices(const std::string& path, const std::vector<oft::Index3>& idx) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& k : idx) f << k[0] << ' ' << k[1] << ' ' << k[2] << '\n';
}

int cmd_pde(const std::string& kind, const std::string& forcing, const std::string& out,
            const std::string& singular_out) {
  const oft::OctField3 f = oft::of3b::read_file(forcing);
  const oft::PdeSolution s = oft::solve_pde(f, kind == "heat" ? oft::PdeKind::heat : oft::PdeKind::wave);
  oft::of3b::write_file(out, s.field);
  if (!singular_out.empty()) write_indices(singular_out, s.singular_set);
  std::cout << "singular " << s.singular_set.size() << '\n' << "obstructions " << s.obstructions.size() << '\n';
  if (!s.solvable()) {
    std::cerr << kind << ": forcing is nonzero at " << s.obstructions.size()
              << " singular frequencies; those modes were dropped\n";
    return kUnsolvable;
  }
  return kOk;
}

int cmd_lti(const std::string& spec, const std::string& in, const std::string& out) {
  const auto expr = oft::parse_compose_spec(spec);
  const oft::OctField3 u = oft::of3b::read_file(in);
  const oft::LtiSystem sys = oft::build_system(*expr, [](const std::string& p) { return oft::of3b::read_file(p); });
  oft::of3b::write_file(out, oft::apply(sys, u));
  std::cout << "singular " << sys.singular_set.size() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octonion Fourier transform toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a generated field as OF3B");
  g->add_option("kind", gen.kind, "gaussian | delta | random")->required()->check(CLI::IsMember({"gaussian", "delta", "random"}));
  g->add_option("dims", gen.dims, "N1 N2 N3")->required()->expected(3)->check(CLI::PositiveNumber);
  g->add_option("--out,-o", gen.out, "output file")->required();
  g->add_option("--spacing", gen.spacing, "grid spacing (1 or 3 values)")->expected(1, 3)->check(CLI::PositiveNumber);
  g->add_option("--origin", gen.origin, "grid origin (1 or 3 values)")->expected(1, 3);
  g->add_option("--seed", gen.seed, "PRNG seed (random only)");
  g->add_option("--values", gen.values, "octonion | real | complex (random only)")
      ->check(CLI::IsMember({"octonion", "real", "complex"}));

  std::string oft_in, oft_out;
  bool inverse = false, naive = false;
  auto* o = app.add_subcommand("oft", "forward or inverse transform of an OF3B file");
  o->add_option("in", oft_in)->required();
  o->add_option("out", oft_out)->required();
  o->add_flag("--inverse", inverse, "inverse transform (input must be frequency-domain)");
  o->add_flag("--naive", naive, "use the direct O(N^6) sum");

  std::uint64_t seed = 42;
  std::vector<std::size_t> sizes{8};
  std::string suite;
  auto* v = app.add_subcommand("verify", "run the theorem suite");
  v->add_option("--seed", seed);
  v->add_option("--sizes", sizes, "cubic grid sizes, comma separated")->delimiter(',')->check(CLI::PositiveNumber);
  v->add_option("--suite", suite, "run a single family");

  std::string pde_kind, forcing, pde_out, singular_out;
  auto* p = app.add_subcommand("pde", "solve a periodic heat or wave equation (axis 0 = time)");
  p->add_option("kind", pde_kind)->required()->check(CLI::IsMember({"heat", "wave"}));
  p->add_option("forcing", forcing)->required();
  p->add_option("out", pde_out)->required();
  p->add_option("--singular-out", singular_out, "write singular indices, one triple per line");

  std::string spec, lti_in, lti_out;
  auto* l = app.add_subcommand("lti", "apply a composed system to a field");
  l->add_option("spec", spec, "imp(FILE) | cascade(S,S) | parallel(S,S) | feedback(S,S)")->required();
  l->add_option("in", lti_in)->required();
  l->add_option("out", lti_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kFormat;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*o) return cmd_oft(oft_in, oft_out, inverse, naive);
    if (*v) return cmd_verify(seed, sizes, suite);
    if (*p) return cmd_pde(pde_kind, forcing, pde_out, singular_out);
    if (*l) return cmd_lti(spec, lti_in, lti_out);
  } catch (const oft::DomainMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const oft::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFormat;
  } catch (const oft::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFormat;
  } catch (const oft::ShapeMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFormat;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFormat;
  }
  return kOk;
}
