#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rtcalc/verify.hpp"

using namespace rtcalc;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, verify_failed = 1, usage = 2, numerical = 3 };

struct Config {
  int r = 0;
  std::string catalog;
  std::string file;
  std::vector<std::string> colors;  // --alpha, --beta, --gamma
  std::string eta = "0.37";
  std::optional<int> cut;
  uint64_t seed = 7;
  double tol = Tolerances{}.scalar;
  std::string out = "json";
  std::string alpha_grid;
  std::string eta_grid;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

ojson cjson(cplx z) { return ojson::array({z.real(), z.imag()}); }

void diag(const std::string& kind, const std::string& message) {
  ojson j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Catalog colors from --alpha/--beta/--gamma; missing ones repeat the last.
// A sweep point replaces --alpha.
std::vector<ModuleLabel> catalog_colors(const std::vector<std::string>& given, std::optional<cplx> alpha_override) {
  std::vector<ModuleLabel> out;
  if (alpha_override)
    out.push_back(ModuleLabel::verma(*alpha_override));
  else if (!given[0].empty())
    out.push_back(ModuleLabel::verma(parse_complex(given[0])));
  else
    throw UsageError("--alpha is required with --catalog");
  for (size_t i = 1; i < given.size() && !given[i].empty(); ++i) out.push_back(ModuleLabel::verma(parse_complex(given[i])));
  return out;
}

struct Input {
  TangleDiagram diagram;
  std::optional<int> cut;
};

Input load(const Config& cfg, std::optional<cplx> alpha_override = std::nullopt) {
  if (cfg.catalog.empty() == cfg.file.empty()) throw UsageError("give exactly one of --catalog or --file");
  if (!cfg.catalog.empty()) {
    GlobalParams p(cfg.r == 0 ? 2 : cfg.r);
    return {catalog_braid(cfg.catalog, p, catalog_colors(cfg.colors, alpha_override)), cfg.cut};
  }
  auto in = parse_input(read_file(cfg.file));
  if (cfg.r != 0 && cfg.r != in.diagram.params.r())
    throw UsageError("--r " + std::to_string(cfg.r) + " conflicts with r = " +
                     std::to_string(in.diagram.params.r()) + " in " + cfg.file);
  return {in.diagram, cfg.cut ? cfg.cut : in.cut};
}

ojson result_json(const InvariantResult& res) {
  ojson j;
  j["value"] = cjson(res.value);
  j["eta"] = cjson(res.eta);
  j["cut"] = res.cut_id;
  j["residual"] = res.scalar_residual;
  j["r"] = res.r;
  j["component"] = res.cut_component;
  j["hash"] = res.diagram_hash;
  return j;
}

int cmd_eval(const Config& cfg) {
  auto in = load(cfg);
  Tolerances tol;
  tol.scalar = cfg.tol;
  auto res = renormalized(in.diagram, parse_complex(cfg.eta), in.cut, tol);
  if (cfg.out == "text") {
    std::cout << "value     " << format_complex(res.value) << "\n"
              << "eta       " << format_complex(res.eta) << "\n"
              << "cut       " << res.cut_id << " (component " << res.cut_component << ", " << res.cut_color.str()
              << ")\n"
              << "residual  " << res.scalar_residual << "\n"
              << "r         " << res.r << "\n";
  } else if (cfg.out == "csv") {
    std::cout << "value_re,value_im,eta_re,eta_im,cut,residual,r\n";
    std::cout << ojson(res.value.real()).dump() << "," << ojson(res.value.imag()).dump() << ","
              << ojson(res.eta.real()).dump() << "," << ojson(res.eta.imag()).dump() << "," << res.cut_id << ","
              << ojson(res.scalar_residual).dump() << "," << res.r << "\n";
  } else {
    std::cout << result_json(res).dump() << "\n";
  }
  return ok;
}

int cmd_verify(const Config& cfg) {
  GlobalParams p(cfg.r == 0 ? 2 : cfg.r);
  VerifyOptions o;
  o.seed = cfg.seed;
  auto results = run_all(p, o);
  bool all = true;
  for (const auto& s : results) all = all && s.passed;
  if (cfg.out == "json") {
    ojson j;
    j["r"] = p.r();
    j["seed"] = cfg.seed;
    j["passed"] = all;
    j["suites"] = ojson::array();
    for (const auto& s : results) {
      ojson js;
      js["name"] = s.name;
      js["passed"] = s.passed;
      js["max_residual"] = s.max_residual;
      js["tol"] = s.tol;
      js["detail"] = s.detail;
      j["suites"].push_back(js);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& s : results) {
      std::ostringstream line;
      line << (s.passed ? "PASS  " : "FAIL  ") << s.name << "  max residual " << s.max_residual << " (tol " << s.tol
           << ")";
      if (!s.detail.empty()) line << "  " << s.detail;
      std::cout << line.str() << "\n";
    }
    std::cout << (all ? "all suites passed" : "some suites failed") << " at r=" << p.r() << ", seed " << cfg.seed
              << "\n";
  }
  return all ? ok : verify_failed;
}

// "a:b:step" or a comma separated list of complex values.
std::vector<cplx> parse_grid(const std::string& text) {
  std::vector<cplx> out;
  if (text.find(':') != std::string::npos) {
    double a, b, step;
    char c1, c2;
    std::istringstream is(text);
    if (!(is >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
      throw UsageError("grid ranges are start:stop:step with step > 0, got '" + text + "'");
    const long n = std::lround(std::floor((b - a) / step + 1e-9)) + 1;
    for (long i = 0; i < n; ++i) out.push_back(std::round((a + double(i) * step) * 1e12) / 1e12);
    return out;
  }
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(parse_complex(item));
  return out;
}

int cmd_sweep(const Config& cfg) {
  std::vector<cplx> alphas, etas = parse_grid(cfg.eta_grid.empty() ? cfg.eta : cfg.eta_grid);
  if (!cfg.alpha_grid.empty()) {
    if (!cfg.file.empty()) throw UsageError("--alpha-grid applies to --catalog inputs");
    alphas = parse_grid(cfg.alpha_grid);
  }
  if (etas.empty()) throw UsageError("empty eta grid");
  struct Row {
    std::optional<cplx> alpha;
    cplx eta;
    std::optional<InvariantResult> res;
    std::string status;
  };
  std::vector<Row> rows;
  Tolerances tol;
  tol.scalar = cfg.tol;
  int evaluated = 0;
  std::vector<std::optional<cplx>> alpha_points;
  if (alphas.empty()) alpha_points.push_back(std::nullopt);
  for (cplx a : alphas) alpha_points.push_back(a);
  for (const auto& a : alpha_points) {
    const GlobalParams p(cfg.r == 0 ? 2 : cfg.r);
    for (cplx eta : etas) {
      Row row{a, eta, std::nullopt, "ok"};
      if ((a && is_excluded_color(p, *a, tol.guard)) || is_excluded_color(p, eta, tol.guard)) {
        row.status = "guarded";
      } else {
        auto in = load(cfg, a);
        row.res = renormalized(in.diagram, eta, in.cut, tol);
        ++evaluated;
      }
      rows.push_back(row);
    }
  }
  if (evaluated == 0) throw UsageError("every grid point is guarded; nothing to evaluate");

  auto num = [](double x) { return ojson(x).dump(); };
  if (cfg.out == "json") {
    ojson j = ojson::array();
    for (const auto& row : rows) {
      ojson jr;
      jr["alpha"] = row.alpha ? cjson(*row.alpha) : ojson(nullptr);
      jr["eta"] = cjson(row.eta);
      jr["status"] = row.status;
      if (row.res) {
        jr["value"] = cjson(row.res->value);
        jr["cut"] = row.res->cut_id;
        jr["residual"] = row.res->scalar_residual;
      }
      j.push_back(jr);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    const char sep = cfg.out == "csv" ? ',' : '\t';
    std::cout << "alpha_re" << sep << "alpha_im" << sep << "eta_re" << sep << "eta_im" << sep << "value_re" << sep
              << "value_im" << sep << "residual" << sep << "status\n";
    for (const auto& row : rows) {
      std::cout << (row.alpha ? num(row.alpha->real()) : "") << sep << (row.alpha ? num(row.alpha->imag()) : "")
                << sep << num(row.eta.real()) << sep << num(row.eta.imag()) << sep
                << (row.res ? num(row.res->value.real()) : "") << sep << (row.res ? num(row.res->value.imag()) : "")
                << sep << (row.res ? num(row.res->scalar_residual) : "") << sep << row.status << "\n";
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renormalized invariants of colored framed links over the unrolled quantum group of sl2 at q = "
               "exp(i pi / r).\nComplex values are written a+bi or [a,b]."};
  app.require_subcommand(1);
  Config cfg;
  cfg.colors.assign(3, "");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "root order r >= 2 (default 2; read from the file for --file)");
    sub->add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"json", "text", "csv"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--catalog", cfg.catalog, "unknot, hopf, trefoil, figure8, chain3 or connectsum(a,b)");
    sub->add_option("--file", cfg.file, "diagram or braid JSON file");
    sub->add_option("--alpha", cfg.colors[0], "Verma color of component 0");
    sub->add_option("--beta", cfg.colors[1], "Verma color of component 1");
    sub->add_option("--gamma", cfg.colors[2], "Verma color of component 2");
    sub->add_option("--eta", cfg.eta, "normalizing color eta (default 0.37)");
    sub->add_option("--cut", cfg.cut, "component to cut along (default: first generic Verma component)");
    sub->add_option("--tol", cfg.tol, "tolerance for extracting the scalar of the cut tangle")
        ->check(CLI::PositiveNumber);
  };

  auto* eval = app.add_subcommand("eval", "evaluate the renormalized invariant F'_eta");
  add_common(eval);
  add_input(eval);

  auto* verify = app.add_subcommand("verify", "run the numerical verification suites");
  add_common(verify);
  verify->add_option("--seed", cfg.seed, "random seed");
  cfg.out = "json";

  auto* sweep = app.add_subcommand("sweep", "evaluate over a grid of alpha and/or eta");
  add_common(sweep);
  add_input(sweep);
  sweep->add_option("--alpha-grid", cfg.alpha_grid, "start:stop:step or a comma list (catalog inputs)");
  sweep->add_option("--eta-grid", cfg.eta_grid, "start:stop:step or a comma list");
  sweep->add_option("--seed", cfg.seed, "unused; accepted for uniformity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diag("usage", e.what());
    return usage;
  }

  if (verify->parsed() && !verify->count("--out")) cfg.out = "text";
  try {
    if (eval->parsed()) return cmd_eval(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_sweep(cfg);
  } catch (const UsageError& e) {
    diag("usage", e.what());
    return usage;
  } catch (const domain_error& e) {
    diag("domain", e.what());
    return usage;
  } catch (const numerical_error& e) {
    diag("numerical", e.what());
    return numerical;
  } catch (const std::exception& e) {
    diag("internal", e.what());
    return numerical;
  }
}
