#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cli.hpp"
#include "k3walls/brill_noether.hpp"
#include "k3walls/errors.hpp"
#include "k3walls/nef_cone.hpp"
#include "k3walls/serialize.hpp"
#include "k3walls/stability.hpp"
#include "k3walls/walls.hpp"
#include "plot.hpp"

namespace k3walls::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

Rational parse_rat(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError(std::string(flag) + ": expected p/q, got '" + text + "'");
  }
}

std::int64_t parse_int(const std::string& text, const char* flag) {
  const Rational q = parse_rat(text, flag);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
    throw UsageError(std::string(flag) + ": expected an integer, got '" + text + "'");
  }
  return q.get_num().get_si();
}

MukaiVector parse_vector(const std::string& text, const char* flag) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw UsageError(std::string(flag) + ": expected r,c,s, got '" + text + "'");
  }
  return {parse_int(parts[0], flag), parse_int(parts[1], flag), parse_int(parts[2], flag)};
}

std::pair<Rational, Rational> parse_range(const std::string& text, const char* flag) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) {
    throw UsageError(std::string(flag) + ": expected lo:hi, got '" + text + "'");
  }
  return {parse_rat(parts[0], flag), parse_rat(parts[1], flag)};
}

// The two ways to name a class: --g/--d for v = (0, 1, d + 1 - g) with
// H^2 = 2g - 2, or raw --h2/--v.
struct ClassArgs {
  std::optional<std::int64_t> g;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> h2;
  std::string v;

  void attach(CLI::App* cmd, bool needs_vector = true) {
    cmd->add_option("--g", g, "genus (H^2 = 2g - 2)");
    cmd->add_option("--d", d, "degree; with --g selects v = (0, 1, d + 1 - g)");
    cmd->add_option("--h2", h2, "H^2 (even, >= 2)");
    if (needs_vector) cmd->add_option("--v", v, "Mukai vector r,c,s");
  }

  LatticeContext context() const {
    if (g && h2 && *h2 != 2 * *g - 2) throw UsageError("--g and --h2 disagree");
    if (g) return LatticeContext::from_genus(*g);
    if (h2) return LatticeContext(*h2);
    throw UsageError("need --g or --h2");
  }

  MukaiVector vector() const {
    if (!v.empty()) return parse_vector(v, "--v");
    if (g && d) return {0, 1, *d + 1 - *g};
    throw UsageError("need --g with --d, or --v");
  }
};

struct RegionArgs {
  std::string beta = "-2:2";
  std::string t = "1/100:4";

  void attach(CLI::App* cmd) {
    cmd->add_option("--beta", beta, "beta range lo:hi")->capture_default_str();
    cmd->add_option("--t", t, "t = alpha^2 range lo:hi")->capture_default_str();
  }

  Region region() const {
    const auto [bl, bh] = parse_range(beta, "--beta");
    const auto [tl, th] = parse_range(t, "--t");
    Region r{bl, bh, tl, th};
    r.validate();
    return r;
  }
};

struct PointArgs {
  std::string beta;
  std::string t;

  void attach(CLI::App* cmd) {
    cmd->add_option("--beta", beta, "beta coordinate")->required();
    cmd->add_option("--t", t, "t = alpha^2")->required();
  }

  StabilityPoint point() const {
    return StabilityPoint(parse_rat(beta, "--beta"), parse_rat(t, "--t"));
  }
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact wall-and-chamber, Brill-Noether and nef-cone computations "
               "on the Mukai lattice of a Picard-rank-one K3 surface",
               "k3walls"};
  app.require_subcommand(1);
  // Commands register their action here; run after a successful parse.
  std::function<void()> action;

  // lattice ---------------------------------------------------------------
  auto* lattice = app.add_subcommand("lattice", "Mukai lattice arithmetic");
  lattice->require_subcommand(1);
  std::int64_t h2 = 2;
  std::string a_text;
  std::string b_text;
  std::string beta_text;
  auto lattice_cmd = [&](const char* name, const char* help, bool with_b, bool with_beta,
                         bool with_h2) {
    auto* cmd = lattice->add_subcommand(name, help);
    if (with_h2) cmd->add_option("--h2", h2, "H^2 (even, >= 2)")->required();
    cmd->add_option("--a", a_text, "Mukai vector r,c,s")->required();
    if (with_b) cmd->add_option("--b", b_text, "Mukai vector r,c,s")->required();
    if (with_beta) cmd->add_option("--beta", beta_text, "B-field beta")->required();
    return cmd;
  };
  lattice_cmd("pair", "Mukai pairing (a, b)", true, false, true)->callback([&] {
    action = [&] {
      const LatticeContext ctx(h2);
      emit(out, {{"value", std::to_string(pair(parse_vector(a_text, "--a"),
                                               parse_vector(b_text, "--b"), ctx))}});
    };
  });
  lattice_cmd("square", "Mukai square a^2", false, false, true)->callback([&] {
    action = [&] {
      const LatticeContext ctx(h2);
      emit(out, {{"value", std::to_string(square(parse_vector(a_text, "--a"), ctx))}});
    };
  });
  lattice_cmd("root", "whether a^2 = -2", false, false, true)->callback([&] {
    action = [&] {
      const LatticeContext ctx(h2);
      const MukaiVector a = parse_vector(a_text, "--a");
      emit(out, {{"root", is_root(a, ctx)}, {"square", std::to_string(square(a, ctx))}});
    };
  });
  lattice_cmd("primitive", "whether gcd(r, c, s) = 1", false, false, false)->callback([&] {
    action = [&] { emit(out, {{"primitive", is_primitive(parse_vector(a_text, "--a"))}}); };
  });
  lattice_cmd("twist", "B-field twist e^{-beta H} a", false, true, true)->callback([&] {
    action = [&] {
      const LatticeContext ctx(h2);
      emit(out, {{"value", to_json(twist(parse_vector(a_text, "--a"),
                                         parse_rat(beta_text, "--beta"), ctx))}});
    };
  });
  lattice_cmd("mu", "twisted slope mu_beta", false, true, false)->callback([&] {
    action = [&] {
      emit(out, {{"value", to_json(mu_beta(parse_vector(a_text, "--a"),
                                           parse_rat(beta_text, "--beta")))}});
    };
  });

  // stability -------------------------------------------------------------
  auto* stability = app.add_subcommand("stability", "central charge queries");
  stability->require_subcommand(1);
  ClassArgs cls;
  PointArgs pt;
  {
    auto* cmd = stability->add_subcommand("charge", "Z at (beta, t)");
    cls.attach(cmd);
    pt.attach(cmd);
    cmd->callback([&] {
      action = [&] { emit(out, to_json(eval_charge(cls.vector(), pt.point(), cls.context()))); };
    });
  }
  {
    auto* cmd = stability->add_subcommand("slope", "alpha * nu_{alpha,beta}");
    cls.attach(cmd);
    pt.attach(cmd);
    cmd->callback([&] {
      action = [&] {
        emit(out, {{"value", to_json(slope_nu(cls.vector(), pt.point(), cls.context()))}});
      };
    });
  }
  {
    auto* cmd = stability->add_subcommand("geometric", "whether sigma_{alpha,beta} is geometric");
    cls.attach(cmd, false);
    pt.attach(cmd);
    cmd->callback([&] {
      action = [&] {
        const LatticeContext ctx = cls.context();
        const StabilityPoint p = pt.point();
        json j = {{"geometric", geometric_check(p, ctx)},
                  {"sufficient_tH2_gt_2", sufficient_geometric(p, ctx)}};
        if (auto root = critical_root(p.beta(), ctx)) j["critical_root"] = to_json(*root);
        emit(out, j);
      };
    });
  }

  // walls -----------------------------------------------------------------
  auto* walls = app.add_subcommand("walls", "numerical walls");
  walls->require_subcommand(1);
  RegionArgs region_args;
  std::int64_t rank_bound = 6;
  std::size_t jobs = 1;
  {
    auto* cmd = walls->add_subcommand("bn", "the Brill-Noether wall for (g, d)");
    cmd->add_option("--g", cls.g, "genus")->required();
    cmd->add_option("--d", cls.d, "degree")->required();
    cmd->callback([&] { action = [&] { emit(out, to_json(bn_wall(*cls.g, *cls.d))); }; });
  }
  {
    auto* cmd = walls->add_subcommand("pair", "wall where Z(a) and Z(v) align");
    cls.attach(cmd);
    cmd->add_option("--a", a_text, "destabilizer r,c,s")->required();
    cmd->callback([&] {
      action = [&] {
        const auto wall = wall_of_pair(parse_vector(a_text, "--a"), cls.vector(), cls.context());
        emit(out, wall ? to_json(*wall) : json(nullptr));
      };
    });
  }
  {
    auto* cmd = walls->add_subcommand("enumerate", "candidate walls in a region");
    cls.attach(cmd);
    region_args.attach(cmd);
    cmd->add_option("--rank-bound", rank_bound, "bound on |rank| of destabilizers")
        ->capture_default_str();
    cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    cmd->callback([&] {
      action = [&] {
        const LatticeContext ctx = cls.context();
        const MukaiVector v = cls.vector();
        const Region region = region_args.region();
        const auto found = enumerate_candidate_walls(v, region, {rank_bound, jobs}, ctx);
        json list = json::array();
        for (const auto& w : found) list.push_back(to_json(w));
        emit(out, {{"v", to_json(v)},
                   {"h2", ctx.h_squared()},
                   {"rank_bound", rank_bound},
                   {"region",
                    {{"beta_min", to_string(region.beta_min)},
                     {"beta_max", to_string(region.beta_max)},
                     {"t_min", to_string(region.t_min)},
                     {"t_max", to_string(region.t_max)}}},
                   {"walls", list}});
      };
    });
  }
  {
    auto* cmd = walls->add_subcommand("clear-path", "Gieseker path {beta = 0, t > 2/H^2}");
    cls.attach(cmd);
    cmd->callback([&] {
      action = [&] {
        const auto c = gieseker_path_clear(cls.vector(), cls.context());
        emit(out, {{"clear", c.clear},
                   {"certificate", c.certificate ? json(*c.certificate) : json(nullptr)}});
      };
    });
  }
  {
    auto* cmd = walls->add_subcommand("side", "position of (beta, t) relative to the BN wall");
    cmd->add_option("--g", cls.g, "genus")->required();
    cmd->add_option("--d", cls.d, "degree")->required();
    pt.attach(cmd);
    cmd->callback([&] {
      action = [&] {
        emit(out, {{"side", side_name(side_of(bn_wall(*cls.g, *cls.d), pt.point()))}});
      };
    });
  }

  // bn --------------------------------------------------------------------
  auto* bn = app.add_subcommand("bn", "Brill-Noether ledger");
  bn->require_subcommand(1);
  std::int64_t r_value = 0;
  bool raw = false;
  std::string g_range;
  std::string format = "json";
  std::int64_t k_max = kDefaultJHMultiplicity;
  auto bn_args = [&](CLI::App* cmd) {
    cmd->add_option("--g", cls.g, "genus")->required();
    cmd->add_option("--d", cls.d, "degree")->required();
    cmd->add_option("--r", r_value, "sections minus one")->required();
  };
  {
    auto* cmd = bn->add_subcommand("report", "full report for (g, d, r)");
    bn_args(cmd);
    cmd->add_flag("--raw", raw, "formula evaluation outside 0 < d <= g - 1");
    cmd->callback([&] {
      action = [&] {
        emit(out, to_json(bn_report({*cls.g, *cls.d, r_value},
                                    raw ? ReportMode::kRaw : ReportMode::kVerdict)));
      };
    });
  }
  {
    auto* cmd = bn->add_subcommand("grid", "reports for g in a range, rho >= -1");
    cmd->add_option("--g", g_range, "genus range lo:hi")->required();
    cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->callback([&] {
      action = [&] {
        const auto parts = split(g_range, ':');
        if (parts.size() != 2) throw UsageError("--g: expected lo:hi");
        const std::int64_t lo = parse_int(parts[0], "--g");
        const std::int64_t hi = parse_int(parts[1], "--g");
        std::vector<BNReport> reports;
        for (std::int64_t g = lo; g <= hi; ++g) {
          for (std::int64_t d = 1; d <= g - 1; ++d) {
            for (std::int64_t r = 0; rho(r, d, g) >= -1; ++r) {
              reports.push_back(bn_report({g, d, r}));
            }
          }
        }
        if (format == "csv") {
          out << bn_csv_header() << '\n';
          for (const auto& rep : reports) out << bn_csv_row(rep) << '\n';
        } else {
          json list = json::array();
          for (const auto& rep : reports) list.push_back(to_json(rep));
          emit(out, list);
        }
      };
    });
  }
  {
    auto* cmd = bn->add_subcommand("reduction", "rho(r, d', g) + d - d' < rho(r, d, g)");
    bn_args(cmd);
    cmd->callback([&] {
      action = [&] {
        json list = json::array();
        for (const auto& s : reduction_ledger(*cls.g, *cls.d, r_value)) {
          list.push_back({{"d_prime", s.d_prime}, {"lhs", s.lhs}, {"rhs", s.rhs},
                          {"strict", s.strict}});
        }
        emit(out, list);
      };
    });
  }
  {
    auto* cmd = bn->add_subcommand("serre", "Serre-dual (r', d')");
    bn_args(cmd);
    cmd->callback([&] {
      action = [&] {
        const auto dual = serre_dual(*cls.g, *cls.d, r_value);
        emit(out, {{"r", dual.r}, {"d", dual.d},
                   {"rho", rho(r_value, *cls.d, *cls.g)},
                   {"rho_dual", rho(dual.r, dual.d, *cls.g)}});
      };
    });
  }
  {
    auto* cmd = bn->add_subcommand("jh", "Jordan-Holder decompositions w_r - k O_X");
    bn_args(cmd);
    cmd->add_option("--k-max", k_max, "largest multiplicity of O_X")->capture_default_str();
    cmd->callback([&] {
      action = [&] {
        json list = json::array();
        for (const auto& jh : enumerate_jh_decompositions(*cls.g, *cls.d, r_value, k_max)) {
          list.push_back({{"k", jh.k},
                          {"w_prime", to_json(jh.w_prime)},
                          {"w_prime_sq", jh.w_prime_sq},
                          {"pairing_with_O_X", jh.pairing_with_structure_sheaf},
                          {"admissible", jh.admissible},
                          {"locus_dim", jh.locus_dim}});
        }
        emit(out, list);
      };
    });
  }

  // nef -------------------------------------------------------------------
  auto* nef = app.add_subcommand("nef", "v-perp, positivity divisors and nef hyperplanes");
  nef->require_subcommand(1);
  std::int64_t bound = 5;
  {
    auto* cmd = nef->add_subcommand("perp", "saturated basis and Gram matrix of v-perp");
    cls.attach(cmd);
    cmd->callback([&] {
      action = [&] {
        const auto pc = perp_context(cls.vector(), cls.context());
        json gram = json::array();
        for (const auto& row : pc.gram) gram.push_back({to_string(row[0]), to_string(row[1])});
        emit(out, {{"v", to_json(pc.v)},
                   {"basis", {to_json(pc.basis[0]), to_json(pc.basis[1])}},
                   {"gram", gram}});
      };
    });
  }
  {
    auto* cmd = nef->add_subcommand("divisor", "Positivity-Lemma divisor at (beta, t)");
    cls.attach(cmd);
    pt.attach(cmd);
    cmd->callback([&] {
      action = [&] {
        const LatticeContext ctx = cls.context();
        const MukaiVector v = cls.vector();
        const auto pc = perp_context(v, ctx);
        const DivisorClass dc = positivity_divisor(v, pt.point(), pc, ctx);
        json j = to_json(dc);
        j["class"] = to_json(to_lattice(dc, pc));
        j["square"] = to_string(divisor_square(dc, pc));
        if (cls.g && cls.d && *cls.d >= 1 && *cls.d <= *cls.g - 1) {
          const Ray bn_ray = hyperplane_of(kStructureSheaf, pc, ctx);
          const DivisorClass ray{{Rational(bn_ray.coords[0]), Rational(bn_ray.coords[1])}};
          j["collinear_with_bn_ray"] = sgn(cross(dc, ray)) == 0;
        }
        emit(out, j);
      };
    });
  }
  {
    auto* cmd = nef->add_subcommand("hyperplanes", "hyperplanes v-perp cap a-perp");
    cls.attach(cmd);
    cmd->add_option("--bound", bound, "coordinate search bound")->capture_default_str();
    cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    cmd->callback([&] {
      action = [&] { emit(out, to_json(nef_hyperplanes(cls.vector(), bound, cls.context(), jobs))); };
    });
  }

  // plot ------------------------------------------------------------------
  auto* plot = app.add_subcommand("plot", "SVG wall diagram in the (beta, alpha) plane");
  std::string wall_source = "bn";
  std::string out_path;
  std::vector<std::string> mark_texts;
  bool mark_alpha0 = false;
  int width = 640;
  int height = 400;
  cls.attach(plot);
  region_args.attach(plot);
  plot->add_option("--walls", wall_source, "bn, enumerate or none")
      ->check(CLI::IsMember({"bn", "enumerate", "none"}))
      ->capture_default_str();
  plot->add_option("--rank-bound", rank_bound, "destabilizer rank bound for --walls enumerate")
      ->capture_default_str();
  plot->add_option("--mark", mark_texts, "point beta,t[,label]; repeatable");
  plot->add_flag("--mark-alpha0", mark_alpha0, "mark (0, alpha_0) with t = 2/H^2");
  plot->add_option("--width", width, "pixels")->capture_default_str();
  plot->add_option("--height", height, "pixels")->capture_default_str();
  plot->add_option("--out", out_path, "output SVG path")->required();
  plot->callback([&] {
    action = [&] {
      const LatticeContext ctx = cls.context();
      PlotSpec spec;
      spec.region = region_args.region();
      spec.width = width;
      spec.height = height;
      if (wall_source == "bn") {
        if (!cls.g || !cls.d) throw UsageError("--walls bn needs --g and --d");
        spec.walls.push_back(bn_wall(*cls.g, *cls.d));
      } else if (wall_source == "enumerate") {
        spec.walls = enumerate_candidate_walls(cls.vector(), spec.region,
                                               {rank_bound, jobs}, ctx);
      }
      for (const auto& text : mark_texts) {
        const auto parts = split(text, ',');
        if (parts.size() < 2) throw UsageError("--mark: expected beta,t[,label]");
        std::string label;
        if (parts.size() > 2) label = text.substr(parts[0].size() + parts[1].size() + 2);
        spec.marks.push_back({parse_rat(parts[0], "--mark"), parse_rat(parts[1], "--mark"), label});
      }
      if (mark_alpha0) {
        spec.marks.push_back({0, make_rational(2, ctx.h_squared()), "(0, α₀)"});
      }
      const std::string svg = render_svg(spec);
      std::ofstream file(out_path, std::ios::binary);
      if (!file || !(file << svg) || !file.flush()) {
        throw IoError("cannot write '" + out_path + "'");
      }
      emit(out, {{"written", out_path}, {"walls", spec.walls.size()},
                 {"marks", spec.marks.size()}});
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (action) action();
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return kDomain;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace k3walls::cli
