#include <haarint.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

struct ContextDeleter {
  void operator()(haarint_context* ctx) const { haarint_context_free(ctx); }
};
using ContextPtr = std::unique_ptr<haarint_context, ContextDeleter>;

struct ResultDeleter {
  void operator()(char* s) const { haarint_string_free(s); }
};
using ResultPtr = std::unique_ptr<char, ResultDeleter>;

// Runs a C API call, exits with a usage error when it fails.
json call(haarint_context* ctx, haarint_status status, ResultPtr result) {
  if (status != HAARINT_OK) {
    std::cerr << "error (" << haarint_status_name(status) << "): "
              << haarint_last_error(ctx) << "\n";
    std::exit(kExitUsage);
  }
  return json::parse(result.get());
}

std::vector<int> parse_tuple(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      std::cerr << "error: malformed tuple entry '" << part << "'\n";
      std::exit(kExitUsage);
    }
  }
  if (out.empty()) {
    std::cerr << "error: empty tuple\n";
    std::exit(kExitUsage);
  }
  return out;
}

std::string polynomial_text(const std::vector<std::string>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const std::string& c = coeffs[k];
    if (c == "0") continue;
    bool negative = !c.empty() && c[0] == '-';
    std::string mag = negative ? c.substr(1) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string power = k == 0 ? "" : (k == 1 ? "n" : "n^" + std::to_string(k));
    if (power.empty())
      out += mag;
    else if (mag == "1")
      out += power;
    else
      out += mag + "*" + power;
  }
  return out.empty() ? "0" : out;
}

std::string permutation_cycles(const std::vector<int>& word) {
  std::vector<bool> seen(word.size(), false);
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (seen[i] || word[i] == static_cast<int>(i) + 1) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<size_t>(word[j] - 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

std::string element_text(const json& element) {
  if (element["terms"].empty()) return "0";
  std::string out;
  for (const auto& term : element["terms"]) {
    std::string c = term["coeff"].get<std::string>();
    bool negative = !c.empty() && c[0] == '-';
    std::string mag = negative ? c.substr(1) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string perm = permutation_cycles(term["perm"].get<std::vector<int>>());
    if (mag == "1")
      out += perm;
    else
      out += mag + "*" + perm;
  }
  return out;
}

std::string branch_text(const json& branch) {
  std::string num = polynomial_text(branch["num"].get<std::vector<std::string>>());
  std::string den = polynomial_text(branch["den"].get<std::vector<std::string>>());
  if (den == "1") return num;
  return "(" + num + ")/(" + den + ")";
}

struct MomentOptions {
  std::string i, j, k, l;
  long n = 0;
  bool symbolic = false;
  std::string method = "units";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 12345;
};

int run_moment(haarint_context* ctx, const MomentOptions& opt, bool json_output,
               bool n_given) {
  auto i = parse_tuple(opt.i);
  auto j = parse_tuple(opt.j);
  auto k = parse_tuple(opt.k);
  auto l = parse_tuple(opt.l);
  size_t d = i.size();
  if (j.size() != d || k.size() != d || l.size() != d) {
    std::cerr << "error: tuples must have equal length\n";
    return kExitUsage;
  }
  int di = static_cast<int>(d);

  if (opt.symbolic) {
    if (opt.method != "units") {
      std::cerr << "error: --symbolic supports only --method units\n";
      return kExitUsage;
    }
    char* raw = nullptr;
    auto status = haarint_moment_symbolic(ctx, i.data(), j.data(), k.data(), l.data(),
                                          di, &raw);
    json out = call(ctx, status, ResultPtr(raw));
    if (json_output) {
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& branch : out["branches"])
        std::cout << "min(n,d)=" << branch["min_n"].get<int>() << ": "
                  << branch_text(branch) << "\n";
    }
    return kExitOk;
  }

  if (!n_given) {
    std::cerr << "error: --n is required unless --symbolic is given\n";
    return kExitUsage;
  }

  bool want_units = opt.method == "units" || opt.method == "all";
  bool want_wg = opt.method == "weingarten" || opt.method == "all";
  bool want_mc = opt.method == "mc" || opt.method == "all";

  json report = json::object();
  std::string units_value, wg_value, wg_reason;
  bool wg_abstained = false;

  if (want_units) {
    char* raw = nullptr;
    auto status = haarint_moment(ctx, i.data(), j.data(), k.data(), l.data(), di,
                                 opt.n, &raw);
    units_value = call(ctx, status, ResultPtr(raw))["moment"].get<std::string>();
    report["units"] = units_value;
  }
  if (want_wg) {
    char* raw = nullptr;
    auto status = haarint_weingarten_moment(ctx, i.data(), j.data(), k.data(), l.data(),
                                            di, opt.n, &raw);
    if (status == HAARINT_OK) {
      wg_value = json::parse(raw)["moment"].get<std::string>();
      haarint_string_free(raw);
      report["weingarten"] = wg_value;
    } else if (opt.method == "all" &&
               (status == HAARINT_ERR_DOMAIN || status == HAARINT_ERR_CAPACITY)) {
      haarint_string_free(raw);
      wg_abstained = true;
      wg_reason = haarint_last_error(ctx);
      report["weingarten"] = nullptr;
    } else {
      std::cerr << "error (" << haarint_status_name(status) << "): "
                << haarint_last_error(ctx) << "\n";
      haarint_string_free(raw);
      return kExitUsage;
    }
  }
  json mc;
  if (want_mc) {
    char* raw = nullptr;
    auto status = haarint_mc_moment(ctx, i.data(), j.data(), k.data(), l.data(), di,
                                    opt.n, opt.samples, opt.seed, &raw);
    mc = call(ctx, status, ResultPtr(raw));
    report["mc"] = mc;
  }

  bool disagree = false;
  if (opt.method == "all") {
    if (!wg_abstained && units_value != wg_value) disagree = true;
    report["agreement"] = !disagree;
  }

  if (json_output) {
    if (opt.method == "units") {
      std::cout << json{{"moment", units_value}}.dump() << "\n";
    } else if (opt.method == "weingarten") {
      std::cout << json{{"moment", wg_value}}.dump() << "\n";
    } else if (opt.method == "mc") {
      std::cout << mc.dump() << "\n";
    } else {
      std::cout << report.dump() << "\n";
    }
  } else {
    if (want_units) std::cout << "units: " << units_value << "\n";
    if (want_wg) {
      if (wg_abstained)
        std::cout << "weingarten: abstained (" << wg_reason << ")\n";
      else
        std::cout << "weingarten: " << wg_value << "\n";
    }
    if (want_mc)
      std::cout << "mc: " << mc["mean_re"].get<double>() << " + "
                << mc["mean_im"].get<double>() << "i (stderr "
                << mc["stderr"].get<double>() << ", samples " << opt.samples << ", seed "
                << opt.seed << ")\n";
    if (opt.method == "all")
      std::cout << "agreement: " << (disagree ? "MISMATCH" : "ok") << "\n";
  }
  return disagree ? kExitDisagreement : kExitOk;
}

int run_tableaux(haarint_context* ctx, int d, const std::string& lambda, bool json_output) {
  if (d > 0) {
    char* raw = nullptr;
    auto status = haarint_partitions(ctx, d, &raw);
    json out = call(ctx, status, ResultPtr(raw));
    if (json_output) {
      std::cout << out.dump() << "\n";
      return kExitOk;
    }
    for (const auto& entry : out["partitions"]) {
      std::string shape;
      for (const auto& part : entry["shape"]) {
        if (!shape.empty()) shape += ",";
        shape += std::to_string(part.get<int>());
      }
      std::cout << "(" << shape << ") f=" << entry["dimension"].get<std::string>() << "\n";
    }
    return kExitOk;
  }
  auto rows = parse_tuple(lambda);
  char* raw = nullptr;
  auto status = haarint_tableaux(ctx, rows.data(), static_cast<int>(rows.size()), &raw);
  json out = call(ctx, status, ResultPtr(raw));
  if (json_output) {
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  std::cout << "dimension " << out["dimension"].get<std::string>() << "\n";
  const auto& tabs = out["tableaux"];
  const auto& contents = out["contents"];
  for (size_t t = 0; t < tabs.size(); ++t) {
    std::cout << "tableau " << t + 1 << ":";
    for (const auto& row : tabs[t]["rows"]) {
      std::cout << " [";
      bool first = true;
      for (const auto& v : row) {
        if (!first) std::cout << " ";
        std::cout << v.get<int>();
        first = false;
      }
      std::cout << "]";
    }
    std::cout << " content (";
    bool first = true;
    for (const auto& v : contents[t]) {
      if (!first) std::cout << ",";
      std::cout << v.get<int>();
      first = false;
    }
    std::cout << ")\n";
  }
  return kExitOk;
}

int run_unit(haarint_context* ctx, const std::string& lambda, int row, int col,
             bool json_output) {
  auto rows = parse_tuple(lambda);
  char* raw = nullptr;
  auto status = haarint_matrix_unit(ctx, rows.data(), static_cast<int>(rows.size()),
                                    row, col, &raw);
  json out = call(ctx, status, ResultPtr(raw));
  if (json_output) {
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  std::cout << "element: " << element_text(out["element"]) << "\n";
  std::cout << "c^2: " << out["c_squared"].get<std::string>() << "\n";
  std::cout << "norm: "
            << polynomial_text(out["norm"]["coeffs"].get<std::vector<std::string>>())
            << "\n";
  return kExitOk;
}

int run_verify(haarint_context* ctx, int d, const std::string& level, bool json_output) {
  char* raw = nullptr;
  auto status = haarint_verify(ctx, d, level == "full" ? 1 : 0, &raw);
  json out = call(ctx, status, ResultPtr(raw));
  bool all_passed = true;
  for (const auto& chk : out["checks"])
    if (!chk["passed"].get<bool>()) all_passed = false;
  if (json_output) {
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& chk : out["checks"]) {
      std::cout << (chk["passed"].get<bool>() ? "pass" : "FAIL") << "  "
                << chk["name"].get<std::string>();
      std::string detail = chk["detail"].get<std::string>();
      if (!detail.empty()) std::cout << " (" << detail << ")";
      std::cout << "\n";
    }
  }
  return all_passed ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact moments of Haar-distributed unitary matrices"};
  app.require_subcommand(1);

  int degree_cap = 6;
  int oracle_cap = 5;
  std::string output = "text";
  if (const char* env = std::getenv("HAAR_DEGREE_CAP")) {
    try {
      degree_cap = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: bad HAAR_DEGREE_CAP value '" << env << "'\n";
      return kExitUsage;
    }
  }
  app.add_option("--degree-cap", degree_cap, "largest allowed monomial degree");
  app.add_option("--oracle-cap", oracle_cap, "largest degree for the gram-inverse oracle");
  app.add_option("--output", output, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  MomentOptions mopt;
  auto* moment = app.add_subcommand("moment", "compute a monomial moment");
  moment->add_option("--i", mopt.i, "row indices of the plain factors")->required();
  moment->add_option("--j", mopt.j, "column indices of the plain factors")->required();
  moment->add_option("--k", mopt.k, "row indices of the conjugated factors")->required();
  moment->add_option("--l", mopt.l, "column indices of the conjugated factors")->required();
  auto* n_opt = moment->add_option("--n", mopt.n, "matrix size");
  moment->add_flag("--symbolic", mopt.symbolic, "report the moment as a function of n");
  moment->add_option("--method", mopt.method, "computation method")
      ->check(CLI::IsMember({"units", "weingarten", "mc", "all"}));
  moment->add_option("--samples", mopt.samples, "monte carlo sample count");
  moment->add_option("--seed", mopt.seed, "monte carlo seed");

  int tab_d = 0;
  std::string tab_lambda;
  auto* tableaux_cmd = app.add_subcommand("tableaux", "list shapes or standard tableaux");
  auto* tab_d_opt = tableaux_cmd->add_option("--d", tab_d, "list partitions of d");
  auto* tab_l_opt = tableaux_cmd->add_option("--lambda", tab_lambda,
                                             "list standard tableaux of this shape");
  tab_d_opt->excludes(tab_l_opt);

  std::string unit_lambda;
  int unit_row = 1, unit_col = 1;
  auto* unit = app.add_subcommand("unit", "print one matrix unit");
  unit->add_option("--lambda", unit_lambda, "shape as comma-separated rows")->required();
  unit->add_option("--row", unit_row, "row tableau index (1-based)")->required();
  unit->add_option("--col", unit_col, "column tableau index (1-based)")->required();

  int verify_d = 3;
  std::string verify_level = "fast";
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--d", verify_d, "degree to verify")->required();
  verify->add_option("--level", verify_level, "suite size")
      ->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ContextPtr ctx(haarint_context_new());
  if (!ctx) {
    std::cerr << "error: out of memory\n";
    return kExitUsage;
  }
  if (haarint_set_degree_cap(ctx.get(), degree_cap) != HAARINT_OK ||
      haarint_set_oracle_cap(ctx.get(), oracle_cap) != HAARINT_OK) {
    std::cerr << "error: " << haarint_last_error(ctx.get()) << "\n";
    return kExitUsage;
  }
  bool json_output = output == "json";

  if (moment->parsed()) return run_moment(ctx.get(), mopt, json_output, n_opt->count() > 0);
  if (tableaux_cmd->parsed()) {
    if (tab_d_opt->count() == 0 && tab_l_opt->count() == 0) {
      std::cerr << "error: tableaux needs --d or --lambda\n";
      return kExitUsage;
    }
    return run_tableaux(ctx.get(), tab_d_opt->count() > 0 ? tab_d : 0, tab_lambda,
                        json_output);
  }
  if (unit->parsed()) return run_unit(ctx.get(), unit_lambda, unit_row, unit_col, json_output);
  if (verify->parsed()) return run_verify(ctx.get(), verify_d, verify_level, json_output);
  return kExitUsage;
}
