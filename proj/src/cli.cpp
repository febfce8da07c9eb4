#include "zerocert/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "zerocert/certificate_io.hpp"
#include "zerocert/criteria.hpp"
#include "zerocert/degree.hpp"
#include "zerocert/errors.hpp"
#include "zerocert/homotopy.hpp"
#include "zerocert/locator.hpp"
#include "zerocert/mapspec.hpp"

namespace zerocert {

namespace {

using json = nlohmann::ordered_json;

// "@path" reads a file, a builtin name expands to its text, anything else is
// the map itself.
std::string resolve_map(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InvalidInput("cannot read map file '" + arg.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (const BuiltinMap* b = find_builtin(arg)) return b->text;
  return arg;
}

Vec parse_csv(const std::string& text, const char* what) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (item.empty() || used != item.size()) {
      throw InvalidInput(std::string("bad number '") + item + "' in --" + what);
    }
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput(std::string("--") + what + " is empty");
  return out;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("ZERO_CERT_SEED");
  if (!s || !*s) return kDefaultLocatorSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw InvalidInput("ZERO_CERT_SEED must be a decimal integer");
  return v;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::ZeroGuaranteed: return kExitSuccess;
    case Verdict::NoConclusion: return kExitNoConclusion;
    case Verdict::ZeroOnBoundary: return kExitZeroOnBoundary;
  }
  return kExitInternal;
}

json locate_json(const LocateResult& r) {
  json j;
  j["point"] = r.point;
  j["residual"] = r.residual;
  j["cell_diameter"] = r.cell_diameter;
  j["iterations"] = r.iterations;
  json trail = json::array();
  for (const TrailStep& s : r.trail) {
    trail.push_back({{"quadrant", s.quadrant}, {"jiggles", s.jiggles}, {"winding", s.winding}});
  }
  j["trail"] = trail;
  return j;
}

struct CertifyArgs {
  std::string map;
  int n = 0;
  std::string center;
  double radius = 1.0;
  int level = 3;
  std::string lipschitz;
  std::string out;
};

struct LocateArgs {
  std::string map;
  std::string box;
  double eps_x = 1e-6;
  double eps_f = 1e-9;
  int max_iter = 200;
};

struct WindingArgs {
  std::string map;
  int level = 3;
  int budget = kDefaultRefineBudget;
  std::string center = "0,0";
  double radius = 1.0;
};

struct FixedPointArgs {
  std::string map;
  double eps = 1e-6;
};

struct HomotopyArgs {
  std::string from;
  std::string to;
  int t_steps = 64;
  int level = 3;
  int n = 2;
  std::optional<double> lipschitz;
};

Region disk_from(const std::string& center_csv, double radius, int n) {
  Vec center = center_csv.empty() ? Vec(static_cast<std::size_t>(n), 0.0) : parse_csv(center_csv, "center");
  if (static_cast<int>(center.size()) != n) {
    throw InvalidInput("--center has " + std::to_string(center.size()) + " coordinates, expected " +
                       std::to_string(n));
  }
  return Region::disk(std::move(center), radius);
}

int run_certify(const CertifyArgs& a, std::ostream& out) {
  const MapSpec spec = parse_map(resolve_map(a.map), a.n);
  const Region disk = disk_from(a.center, a.radius, a.n);
  CertifyOptions opts;
  opts.level = a.level;
  if (a.lipschitz == "auto") {
    opts.lipschitz = lipschitz_estimate(spec, disk, 400);
    opts.force_heuristic = true;
  } else if (!a.lipschitz.empty()) {
    const Vec l = parse_csv(a.lipschitz, "lipschitz");
    if (l.size() != 1 || !(l[0] > 0.0)) throw InvalidInput("--lipschitz must be a positive number or 'auto'");
    opts.lipschitz = l[0];
  }
  const Certificate cert = certify_existence(spec, disk, opts);
  const std::string text = certificate_to_json(cert);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw InvalidInput("cannot write '" + a.out + "'");
    f << text << '\n';
  }
  out << text << '\n';
  return exit_for(cert.verdict);
}

int run_locate(const LocateArgs& a, std::ostream& out) {
  const Vec bounds = parse_csv(a.box, "box");
  if (bounds.size() % 2 != 0) throw InvalidInput("--box needs lower,upper pairs per coordinate");
  const int n = static_cast<int>(bounds.size() / 2);
  Vec lo;
  Vec hi;
  for (int i = 0; i < n; ++i) {
    lo.push_back(bounds[2 * i]);
    hi.push_back(bounds[2 * i + 1]);
  }
  const MapSpec spec = parse_map(resolve_map(a.map), n);
  if (spec.m != n) throw InvalidInput("locate needs as many components as coordinates");
  LocateOptions opts;
  opts.eps_x = a.eps_x;
  opts.eps_f = a.eps_f;
  opts.max_iter = a.max_iter;
  opts.seed = seed_from_env();
  out << locate_json(locate_zero(spec.field(), Region::box(lo, hi), opts)).dump(2) << '\n';
  return kExitSuccess;
}

int run_winding(const WindingArgs& a, std::ostream& out) {
  const MapSpec spec = parse_map(resolve_map(a.map), 2);
  if (spec.m != 2) throw InvalidInput("winding needs a map into R^2");
  const Region disk = disk_from(a.center, a.radius, 2);
  const WindingResult w = winding_on_boundary(spec.field(), sample_sphere(2, disk, a.level), a.budget);
  out << w.value << '\n';
  return kExitSuccess;
}

int run_fixed_point(const FixedPointArgs& a, std::ostream& out) {
  const MapSpec spec = parse_self_map(resolve_map(a.map));
  out << locate_json(brouwer_fixed_point(spec.field(), a.eps, seed_from_env())).dump(2) << '\n';
  return kExitSuccess;
}

int run_homotopy(const HomotopyArgs& a, std::ostream& out) {
  const MapSpec f = parse_map(resolve_map(a.from), a.n);
  const MapSpec g = parse_map(resolve_map(a.to), a.n);
  if (f.m != g.m) throw InvalidInput("--from and --to have different codomain dimensions");
  const BoundarySampling s = sample_sphere(a.n, Region::unit_disk(a.n), a.level);
  const auto [trace, report] = straight_line(sample_map(f.field(), s), sample_map(g.field(), s),
                                             a.t_steps, a.lipschitz);
  json j;
  j["valid"] = report.valid;
  j["min_norm"] = report.min_norm;
  j["threshold"] = report.threshold;
  j["rigor"] = to_string(report.rigor);
  if (report.witness) {
    j["witness"] = {{"t", report.witness->t}, {"point", report.witness->point}};
  } else {
    j["witness"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return report.valid ? kExitSuccess : kExitNoConclusion;
}

int run_examples(std::ostream& out) {
  for (const BuiltinMap& b : builtin_maps()) {
    out << b.name << "\tn=" << b.n << "\t" << b.text << "\t" << b.description << '\n';
  }
  return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero certification and localization for maps on disks"};
  app.require_subcommand(1);

  CertifyArgs ca;
  auto* certify = app.add_subcommand("certify", "Existence certificate for F(x) = 0 on a disk");
  certify->add_option("--map", ca.map, "map text, @file or builtin name")->required();
  certify->add_option("--n", ca.n, "domain dimension")->required()->check(CLI::PositiveNumber);
  certify->add_option("--center", ca.center, "disk center as csv (default origin)");
  certify->add_option("--radius", ca.radius, "disk radius")->check(CLI::PositiveNumber);
  certify->add_option("--level", ca.level, "sampling level")->check(CLI::Range(0, 16));
  certify->add_option("--lipschitz", ca.lipschitz, "Lipschitz bound or 'auto'");
  certify->add_option("--out", ca.out, "also write the certificate here");

  LocateArgs la;
  auto* locate = app.add_subcommand("locate", "Approximate zero inside a box");
  locate->add_option("--map", la.map, "map text, @file or builtin name")->required();
  locate->add_option("--box", la.box, "lo1,hi1[,lo2,hi2]")->required();
  locate->add_option("--eps-x", la.eps_x, "cell diameter tolerance")->check(CLI::PositiveNumber);
  locate->add_option("--eps-f", la.eps_f, "residual tolerance")->check(CLI::NonNegativeNumber);
  locate->add_option("--max-iter", la.max_iter, "iteration limit")->check(CLI::PositiveNumber);

  WindingArgs wa;
  auto* winding = app.add_subcommand("winding", "Winding number of a planar map on a circle");
  winding->add_option("--map", wa.map, "map text, @file or builtin name")->required();
  winding->add_option("--level", wa.level, "sampling level")->check(CLI::Range(0, 16));
  winding->add_option("--budget", wa.budget, "refinement budget")->check(CLI::NonNegativeNumber);
  winding->add_option("--center", wa.center, "circle center as csv");
  winding->add_option("--radius", wa.radius, "circle radius")->check(CLI::PositiveNumber);

  FixedPointArgs fa;
  auto* fixed = app.add_subcommand("fixed-point", "Fixed point of a self-map of the unit disk");
  fixed->add_option("--map", fa.map, "map text, @file or builtin name")->required();
  fixed->add_option("--eps", fa.eps, "tolerance")->check(CLI::PositiveNumber);

  HomotopyArgs ha;
  auto* homotopy = app.add_subcommand("homotopy", "Straight-line homotopy check on the unit sphere");
  homotopy->add_option("--from", ha.from, "first map")->required();
  homotopy->add_option("--to", ha.to, "second map")->required();
  homotopy->add_option("--t-steps", ha.t_steps, "time samples")->check(CLI::Range(2, 1 << 20));
  homotopy->add_option("--level", ha.level, "sampling level")->check(CLI::Range(0, 16));
  homotopy->add_option("--n", ha.n, "domain dimension")->check(CLI::PositiveNumber);
  homotopy->add_option("--lipschitz", ha.lipschitz, "Lipschitz bound for rigor")->check(CLI::PositiveNumber);

  auto* examples = app.add_subcommand("examples", "List builtin maps");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (certify->parsed()) return run_certify(ca, out);
    if (locate->parsed()) return run_locate(la, out);
    if (winding->parsed()) return run_winding(wa, out);
    if (fixed->parsed()) return run_fixed_point(fa, out);
    if (homotopy->parsed()) return run_homotopy(ha, out);
    if (examples->parsed()) return run_examples(out);
  } catch (const VanishingOnBoundary& e) {
    err << "error: " << e.what() << '\n';
    return kExitZeroOnBoundary;
  } catch (const DegreeLost& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoConclusion;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::InvalidInput:
      case ErrorKind::Unsupported:
      case ErrorKind::SyntaxError:
      case ErrorKind::UndefinedVariable:
      case ErrorKind::NonIntegerExponent:
      case ErrorKind::DomainError:
        return kExitInputError;
      default:
        return kExitInternal;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace zerocert
