#include "lspath/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "lspath/acceptance.hpp"
#include "lspath/char_oracle.hpp"
#include "lspath/errors.hpp"
#include "lspath/invariants.hpp"
#include "lspath/path_model.hpp"
#include "lspath/renorm.hpp"

namespace lspath {

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

// Column-aligned plain text output.
class Table {
 public:
  explicit Table(std::vector<std::string> headers) : rows_{std::move(headers)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  bool empty() const { return rows_.size() == 1; }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

struct Output {
  json doc;
  std::string text;
  int status = 0;
};

json to_json(const Weight& w) { return w.coords; }

json to_json(const Rational& r) { return to_string(r); }

json to_json(const RationalWeight& w) {
  json out = json::array();
  for (const auto& c : w.coords) out.push_back(to_json(c));
  return out;
}

json to_json(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

std::string paren(const Weight& w) { return "(" + to_string(w) + ")"; }

std::string tuple_string(const std::vector<Weight>& ws) {
  std::string out;
  for (const auto& w : ws) out += (out.empty() ? "" : " ") + paren(w);
  return out;
}

std::vector<Weight> parse_weights(const RootSystem& R, const std::vector<std::string>& texts) {
  std::vector<Weight> out;
  for (const auto& t : texts) out.push_back(parse_weight(R, t));
  return out;
}

Method method_from(const std::string& name) {
  if (name == "path") return Method::path_model;
  if (name == "oracle") return Method::oracle;
  throw InputError("unknown method '" + name + "' (use path or oracle)");
}

json decomposition_json(const RootSystem& R, const TensorDecomposition& d) {
  json comps = json::array();
  for (const auto& [lambda, mult] : d.components)
    comps.push_back({{"weight", to_json(lambda)}, {"multiplicity", mult},
                     {"dimension", weyl_dim(R, lambda)}});
  return comps;
}

// Subcommand handlers.

Output cmd_roots(const std::string& type) {
  const RootSystem R = build_root_system(type);
  Output o;
  json roots = json::array();
  Table t({"#", "omega", "simple", "height", "length"});
  for (std::size_t a = 0; a < R.num_positive_roots(); ++a) {
    const Weight coeffs(R.root_coefficients(a));
    const std::string length = !R.has_two_root_lengths() ? "-" : R.is_short(a) ? "short" : "long";
    roots.push_back({{"index", a}, {"weight", to_json(R.root(a))}, {"coefficients", coeffs.coords},
                     {"height", R.height(a)}, {"length", length}});
    t.add({std::to_string(a), to_string(R.root(a)), to_string(coeffs), std::to_string(R.height(a)),
           length});
  }
  o.doc = {{"type", R.label()},
           {"rank", R.rank()},
           {"cartan", R.cartan()},
           {"weyl_group_order", R.weyl_group_order()},
           {"positive_roots", roots}};
  std::ostringstream os;
  os << "type " << R.label() << "  rank " << R.rank() << "  positive roots "
     << R.num_positive_roots() << "  |W| " << R.weyl_group_order() << '\n';
  os << "cartan " << to_string(RationalMatrix(R.cartan())) << '\n';
  t.print(os);
  o.text = os.str();
  return o;
}

Output cmd_chains(const std::string& type, const std::string& shape, std::size_t limit) {
  const RootSystem R = build_root_system(type);
  const Weight mu = parse_weight(R, shape);
  const PathModel model(R);
  const auto table = model.chains(mu);
  const auto dim = weyl_dim(R, mu);
  if (static_cast<std::int64_t>(table->chains.size()) != dim)
    throw InvariantViolation("found " + std::to_string(table->chains.size()) +
                             " LS chains but dim V(" + to_string(mu) + ") = " + std::to_string(dim));
  Output o;
  json chains = json::array();
  Table t({"#", "steps", "cuts", "omega", "delta"});
  const std::size_t shown = limit ? std::min(limit, table->chains.size()) : table->chains.size();
  for (std::size_t k = 0; k < shown; ++k) {
    const auto& C = table->chains[k];
    json cuts = json::array();
    std::string steps, cut_text;
    for (const auto& s : C.steps) steps += (steps.empty() ? "" : " > ") + paren(s);
    for (const auto& c : C.cuts) {
      cuts.push_back(to_json(c));
      cut_text += (cut_text.empty() ? "" : " ") + to_string(c);
    }
    chains.push_back({{"shape", to_json(C.shape)}, {"steps", to_json(C.steps)}, {"cuts", cuts},
                      {"omega", to_json(table->endpoints[k])}, {"delta", to_json(table->depths[k])}});
    t.add({std::to_string(k), steps, cut_text.empty() ? "-" : cut_text, paren(table->endpoints[k]),
           paren(table->depths[k])});
  }
  o.doc = {{"type", R.label()}, {"shape", to_json(mu)}, {"count", table->chains.size()},
           {"weyl_dimension", dim}, {"chains", chains}};
  std::ostringstream os;
  os << "LS(" << R.label() << ", " << paren(mu) << "): " << table->chains.size()
     << " chains, dim " << dim << '\n';
  t.print(os);
  if (shown < table->chains.size()) os << "... " << table->chains.size() - shown << " more\n";
  o.text = os.str();
  return o;
}

TensorDecomposition checked_decompose(const RootSystem& R, const Weight& mu, const Weight& nu,
                                      bool cross_check) {
  auto d = tensor_decompose(R, mu, nu);
  if (cross_check && d != tensor_decompose_oracle(R, mu, nu))
    throw InvariantViolation("path model and character oracle disagree on " + paren(mu) + " x " +
                             paren(nu));
  return d;
}

Output cmd_mult(const std::string& type, const std::string& target,
                const std::vector<std::string>& factors, bool oracle) {
  const RootSystem R = build_root_system(type);
  if (factors.size() != 2) throw InputError("mult needs exactly two factor weights after --");
  const Weight lambda = parse_weight(R, target);
  const auto fs = parse_weights(R, factors);
  const auto m = checked_decompose(R, fs[0], fs[1], oracle).multiplicity(lambda);
  Output o;
  o.doc = {{"type", R.label()}, {"lambda", to_json(lambda)}, {"factors", to_json(fs)},
           {"multiplicity", m}, {"oracle_checked", oracle}};
  o.text = std::to_string(m) + "\n";
  return o;
}

Output cmd_tensor(const std::string& type, const std::vector<std::string>& factors, bool oracle) {
  const RootSystem R = build_root_system(type);
  if (factors.size() != 2) throw InputError("tensor needs exactly two weights");
  const auto fs = parse_weights(R, factors);
  const auto d = checked_decompose(R, fs[0], fs[1], oracle);
  Output o;
  Table t({"lambda", "mult", "dim"});
  for (const auto& [lambda, mult] : d.components)
    t.add({paren(lambda), std::to_string(mult), std::to_string(weyl_dim(R, lambda))});
  const auto dim = weyl_dim(R, fs[0]) * weyl_dim(R, fs[1]);
  o.doc = {{"type", R.label()}, {"left", to_json(fs[0])}, {"right", to_json(fs[1])},
           {"dimension", dim}, {"components", decomposition_json(R, d)}, {"oracle_checked", oracle}};
  std::ostringstream os;
  os << "V" << paren(fs[0]) << " x V" << paren(fs[1]) << " in " << R.label() << ", dim " << dim
     << '\n';
  t.print(os);
  o.text = os.str();
  return o;
}

Output cmd_invdim(const std::string& type, const std::vector<std::string>& texts, bool oracle) {
  const RootSystem R = build_root_system(type);
  const auto ws = parse_weights(R, texts);
  InvariantEngine engine(R);
  const auto value = engine.invariant_dim(ws);
  if (oracle && engine.invariant_dim(ws, Method::oracle) != value)
    throw InvariantViolation("path model and character oracle disagree on " + tuple_string(ws));
  Output o;
  o.doc = {{"type", R.label()}, {"weights", to_json(ws)}, {"invariant_dimension", value},
           {"oracle_checked", oracle}};
  o.text = std::to_string(value) + "\n";
  return o;
}

Output cmd_renorm_list() {
  Output o;
  json items = json::array();
  Table t({"syntax", "summary"});
  for (const auto& b : builtin_catalog()) {
    items.push_back({{"syntax", b.syntax}, {"summary", b.summary}});
    t.add({b.syntax, b.summary});
  }
  o.doc = {{"builtins", items}};
  std::ostringstream os;
  t.print(os);
  o.text = os.str();
  return o;
}

json renorm_header(const Renormalization& rn) {
  json h = {{"name", rn.name},   {"description", rn.description}, {"source", rn.source.label()},
            {"target", rn.target.label()}, {"phi", to_json(rn.phi)}, {"c", rn.c}};
  h["prime"] = rn.prime ? json(*rn.prime) : json(nullptr);
  return h;
}

Output cmd_renorm_check(const std::string& name) {
  const auto rn = builtin(name);
  const auto report = validate(rn);
  Output o;
  json checks = json::array();
  Table t({"check", "result", "detail"});
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    t.add({c.name, c.passed ? "PASS" : "FAIL", c.detail});
  }
  o.doc = renorm_header(rn);
  o.doc["checks"] = checks;
  o.doc["ok"] = report.ok();
  std::ostringstream os;
  os << rn.name << ": " << rn.source.label() << " -> " << rn.target.label() << ", phi "
     << to_string(rn.phi) << '\n';
  t.print(os);
  o.text = os.str();
  o.status = report.ok() ? 0 : 2;
  return o;
}

Output cmd_renorm_map(const std::string& name, const std::vector<std::string>& texts) {
  const auto rn = builtin(name);
  const auto ws = parse_weights(rn.source, texts);
  Output o;
  json rows = json::array();
  Table t({"weight", "image"});
  for (const auto& w : ws) {
    const Weight image = map_weight(rn, w);
    rows.push_back({{"weight", to_json(w)}, {"image", to_json(image)}});
    t.add({paren(w), paren(image)});
  }
  o.doc = renorm_header(rn);
  o.doc["map"] = rows;
  std::ostringstream os;
  t.print(os);
  o.text = os.str();
  return o;
}

Output verification_output(const VerificationReport& r, bool all_rows) {
  Output o;
  json rows = json::array();
  Table t({"tuple", "image", "lhs", "rhs"});
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    rows.push_back({{"tuple", to_json(row.tuple)}, {"image", to_json(row.image)},
                    {"lhs", row.lhs}, {"rhs", row.rhs}});
    if (all_rows || row.lhs > row.rhs)
      t.add({tuple_string(row.tuple), tuple_string(row.image), std::to_string(row.lhs),
             std::to_string(row.rhs)});
  }
  o.doc = {{"renormalization", r.renormalization}, {"source", r.source_type},
           {"target", r.target_type}, {"tuples", r.rows.size()}, {"violations", r.violations},
           {"strict_count", r.strict_count}, {"ok", r.ok()}, {"rows", rows}};
  std::ostringstream os;
  os << r.renormalization << " (" << r.source_type << " -> " << r.target_type << "): "
     << r.rows.size() << " tuples, " << r.violations.size() << " violations, " << r.strict_count
     << " strict\n";
  if (!t.empty()) t.print(os);
  o.text = os.str();
  o.status = r.ok() ? 0 : 2;
  return o;
}

std::vector<std::vector<Weight>> sweep_tuples(const Renormalization& rn,
                                              const std::vector<std::string>& pool,
                                              std::int64_t bound, std::size_t arity) {
  const auto weights =
      pool.empty() ? default_sweep_weights(rn, bound) : parse_weights(rn.source, pool);
  return all_tuples(weights, arity);
}

Output cmd_saturation(Workspace& ws, int rank, int arity, int bound, const SweepOptions& opts) {
  const auto r = saturation_scan(ws, rank, arity, bound, opts);
  Output o;
  json rows = json::array();
  Table t({"epsilon tuple", "spin", "sp", "sp(2x)", "N"});
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  for (const auto& row : r.rows) {
    json eps = json::array();
    std::string text;
    for (const auto& e : row.epsilon) {
      eps.push_back(to_json(e));
      text += (text.empty() ? "" : " ") + ("(" + to_string(e) + ")");
    }
    rows.push_back({{"epsilon", eps}, {"integral", row.integral}, {"spin", row.spin},
                    {"sp", opt(row.sp)}, {"sp_doubled", row.sp_doubled},
                    {"witness_n", opt(row.witness_n)}});
    t.add({text, std::to_string(row.spin), row.sp ? std::to_string(*row.sp) : "-",
           std::to_string(row.sp_doubled), row.witness_n ? std::to_string(*row.witness_n) : "-"});
  }
  o.doc = {{"rank", r.rank}, {"arity", r.arity}, {"bound", r.bound},
           {"counterexamples_sp_to_so", r.counterexamples_sp_to_so},
           {"counterexamples_spin_to_sp", r.counterexamples_spin_to_sp},
           {"saturation_witnesses", r.saturation_witnesses}, {"ok", r.ok()}, {"rows", rows}};
  std::ostringstream os;
  os << "B" << rank << "/C" << rank << " n=" << arity << " bound " << bound << ": " << r.rows.size()
     << " tuples, counterexamples " << r.counterexamples_sp_to_so << " (Sp => SO) and "
     << r.counterexamples_spin_to_sp << " (Spin => Sp), " << r.saturation_witnesses
     << " tuples need N = 2\n";
  t.print(os);
  o.text = os.str();
  o.status = r.ok() ? 0 : 2;
  return o;
}

Output cmd_accept(std::optional<std::int64_t> bound, const std::vector<std::string>& criteria,
                  unsigned workers, std::ostream* progress) {
  AcceptanceConfig cfg = bound ? AcceptanceConfig::with_bound(*bound) : AcceptanceConfig{};
  for (const auto& c : criteria) cfg.criteria.push_back(parse_criterion(c));
  cfg.workers = workers;
  const auto report = run_acceptance_suite(cfg, progress);
  Output o;
  json results = json::array();
  std::ostringstream os;
  for (const auto& r : report.results) {
    results.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                       {"detail", r.detail}, {"seconds", r.seconds}});
    if (!progress) os << format_result(r) << '\n';
  }
  const auto passed = std::count_if(report.results.begin(), report.results.end(),
                                    [](const auto& r) { return r.passed; });
  os << passed << "/" << report.results.size() << " criteria passed\n";
  o.doc = {{"criteria", results}, {"ok", report.ok()}};
  o.text = os.str();
  o.status = report.ok() ? 0 : 2;
  return o;
}

}  // namespace

Weight parse_weight(const RootSystem& R, std::string_view text) {
  const std::string original(text);
  bool eps = false;
  if (text.starts_with("eps:")) {
    const char t = R.label().empty() ? '?' : R.label()[0];
    if (t != 'B' && t != 'C')
      throw InputError("epsilon coordinates are only available for types B and C, not " +
                       R.label());
    eps = true;
    text.remove_prefix(4);
  }
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    parts.emplace_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != R.rank())
    throw InputError("weight '" + original + "' has " + std::to_string(parts.size()) +
                     " coordinates but " + R.label() + " has rank " + std::to_string(R.rank()) +
                     " (e.g. " + to_string(Weight(R.rank())) + ")");
  if (eps) {
    RationalWeight v(R.rank());
    for (std::size_t i = 0; i < parts.size(); ++i) v[i] = parse_rational(parts[i]);
    return from_epsilon(R, v);
  }
  Weight w(R.rank());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), w[i]);
    if (p.empty() || ec != std::errc() || ptr != p.data() + p.size())
      throw InputError("weight '" + original + "': coordinate '" + p +
                       "' is not an integer (use comma-separated integers like 1,0,2)");
  }
  return w;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor multiplicities, LS chains and integer renormalizations for root systems",
               "lspath"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string out_path;
  unsigned workers = 0;
  app.add_flag("--json", as_json, "Emit a JSON document instead of tables");
  app.add_option("--out", out_path, "Write the output document to this file");
  app.add_option("--workers", workers, "Worker threads for sweeps (default LSPATH_WORKERS or all cores)");

  std::string type, target, name, method = "path";
  std::vector<std::string> weights;
  bool oracle = false, all_rows = false;
  std::size_t limit = 0;
  std::int64_t bound = 2, p = 2;
  std::size_t arity = 3;
  int rank = 2, sat_bound = 1;
  std::optional<std::int64_t> accept_bound;
  std::vector<std::string> criteria;

  auto* roots = app.add_subcommand("roots", "Positive roots, Cartan matrix and |W| of a type");
  roots->add_option("type", type, "Type label such as A2, B3, G2")->required();

  auto* chains = app.add_subcommand("chains", "Enumerate the LS chains of a dominant shape");
  chains->add_option("type", type)->required();
  chains->add_option("shape", target, "Dominant weight")->required();
  chains->add_option("--limit", limit, "Print at most this many chains");

  auto* mult = app.add_subcommand("mult", "m(lambda; mu, nu), usage: mult TYPE LAMBDA -- MU NU");
  mult->add_option("type", type)->required();
  mult->add_option("lambda", target)->required();
  mult->add_option("factors", weights)->required();
  mult->add_flag("--oracle", oracle, "Cross-check against the character oracle");

  auto* tensor = app.add_subcommand("tensor", "Decompose V(mu) x V(nu)");
  tensor->add_option("type", type)->required();
  tensor->add_option("weights", weights)->required();
  tensor->add_flag("--oracle", oracle, "Cross-check against the character oracle");

  auto* invdim = app.add_subcommand("invdim", "Dimension of the invariants in V(l_1) x ... x V(l_n)");
  invdim->add_option("type", type)->required();
  invdim->add_option("weights", weights)->required();
  invdim->add_flag("--oracle", oracle, "Cross-check against the character oracle");

  auto* renorm = app.add_subcommand("renorm", "Built-in integer renormalizations");
  renorm->require_subcommand(1);
  auto* rn_list = renorm->add_subcommand("list", "List the built-ins");
  auto* rn_check = renorm->add_subcommand("check", "Run every validation check");
  rn_check->add_option("name", name, "Built-in such as g2 or so_to_sp:2")->required();
  auto* rn_map = renorm->add_subcommand("map", "Apply phi to source weights");
  rn_map->add_option("name", name)->required();
  rn_map->add_option("weights", weights)->required();

  auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("--bound", bound, "Coordinate bound of the sweep")->capture_default_str();
    sub->add_option("--arity", arity, "Tuple length n")->capture_default_str();
    sub->add_option("--weights", weights, "Explicit weight pool instead of the bounded box");
    sub->add_option("--method", method, "path or oracle")->capture_default_str();
    sub->add_flag("--rows", all_rows, "Print every row, not only violations");
  };
  auto* verify = app.add_subcommand("verify", "Check the invariant inequality for a built-in");
  verify->add_option("name", name)->required();
  add_sweep(verify);
  auto* frob = app.add_subcommand("frobenius", "Check [l_1..l_n] <= [p l_1..p l_n]");
  frob->add_option("type", type)->required();
  frob->add_option("p", p)->required();
  add_sweep(frob);

  auto* sat = app.add_subcommand("saturation", "Compare Sp(2l) and Spin(2l+1) invariant semigroups");
  sat->add_option("--rank", rank, "l")->capture_default_str();
  sat->add_option("--arity", arity, "Tuple length n")->capture_default_str();
  sat->add_option("--bound", sat_bound, "Largest epsilon coordinate")->capture_default_str();
  sat->add_option("--method", method, "path or oracle")->capture_default_str();

  auto* accept = app.add_subcommand("accept", "Run the acceptance suite");
  accept->add_option("--bound", accept_bound, "Use this bound for every sweep");
  accept->add_option("--criteria", criteria, "Subset of criteria by number or name");

  // CLI11 reports a stray word only as a missing subcommand; name it instead.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--out" || a == "--workers") {
      ++i;
      continue;
    }
    if (a.starts_with("-")) continue;
    if (!app.get_subcommand_no_throw(a)) {
      std::string known;
      for (const auto* sub : app.get_subcommands({}))
        known += (known.empty() ? "" : ", ") + sub->get_name();
      err << "error: unknown subcommand '" << a << "' (expected one of " << known << ")\n";
      return 1;
    }
    break;
  }

  std::vector<const char*> argv{"lspath"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << " (see lspath --help)\n";
    return 1;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return 1;
    }
    sink = &file;
  }

  try {
    const SweepOptions opts{method_from(method), workers};
    Workspace ws;
    Output o;
    std::string command;
    if (*roots) {
      command = "roots";
      o = cmd_roots(type);
    } else if (*chains) {
      command = "chains";
      o = cmd_chains(type, target, limit);
    } else if (*mult) {
      command = "mult";
      o = cmd_mult(type, target, weights, oracle);
    } else if (*tensor) {
      command = "tensor";
      o = cmd_tensor(type, weights, oracle);
    } else if (*invdim) {
      command = "invdim";
      o = cmd_invdim(type, weights, oracle);
    } else if (*rn_list) {
      command = "renorm list";
      o = cmd_renorm_list();
    } else if (*rn_check) {
      command = "renorm check";
      o = cmd_renorm_check(name);
    } else if (*rn_map) {
      command = "renorm map";
      o = cmd_renorm_map(name, weights);
    } else if (*verify) {
      command = "verify";
      const auto rn = builtin(name);
      o = verification_output(verify_inequality(ws, rn, sweep_tuples(rn, weights, bound, arity), opts),
                              all_rows);
    } else if (*frob) {
      command = "frobenius";
      const auto rn = frobenius(type, p);
      o = verification_output(verify_inequality(ws, rn, sweep_tuples(rn, weights, bound, arity), opts),
                              all_rows);
    } else if (*sat) {
      command = "saturation";
      o = cmd_saturation(ws, rank, static_cast<int>(arity), sat_bound, opts);
    } else if (*accept) {
      command = "accept";
      o = cmd_accept(accept_bound, criteria, workers, as_json ? nullptr : sink);
    }
    if (as_json) {
      json doc = {{"schema", kSchema}, {"command", command}};
      doc.update(o.doc);
      *sink << doc.dump(2) << '\n';
    } else {
      *sink << o.text;
    }
    return o.status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace lspath
