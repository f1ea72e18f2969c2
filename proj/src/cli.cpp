#include "dolbeault/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dolbeault/bott.hpp"
#include "dolbeault/harness.hpp"
#include "dolbeault/partitions.hpp"
#include "dolbeault/schur.hpp"
#include "dolbeault/spectral.hpp"
#include "dolbeault/vanishing.hpp"

namespace dolbeault::cli {

using json = nlohmann::ordered_json;

int CommandResult::exit_code() const {
  switch (status) {
    case Status::Ok: return 0;
    case Status::ConfigError: return 1;
    case Status::DomainError: return 2;
  }
  return 1;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::string_view s = text;
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  while (true) {
    const auto comma = s.find(',');
    std::string_view item = s.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
      throw ConfigError("malformed integer list '" + text + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

std::string render_text(const json& record) {
  std::string out;
  for (const auto& [key, value] : record.items()) {
    out += key;
    out += ": ";
    out += value.is_string() ? value.get<std::string>() : value.dump();
    out += '\n';
  }
  return out;
}

namespace {

json to_json(const IntPartition& u) {
  return json(std::vector<Int>(u.parts().begin(), u.parts().end()));
}

json to_json(const WeightVector& w) {
  return json(std::vector<Int>(w.entries().begin(), w.entries().end()));
}

std::string to_decimal(const BigInt& x) { return x.str(); }

json to_json(const SchurDecomposition& dec) {
  json terms = json::array();
  for (const auto& [lambda, mult] : dec.terms())
    terms.push_back(json{{"partition", to_json(lambda)}, {"multiplicity", mult}});
  return terms;
}

json to_json(const VanishingVerdict& v) {
  return json{{"vanishes", v.vanishes},
              {"threshold", v.threshold},
              {"excess", v.excess},
              {"r0", v.r0 ? json(*v.r0) : json(nullptr)},
              {"hypothesis", v.hypothesis}};
}

json to_json(const std::map<Int, BigInt>& coh) {
  json out = json::array();
  for (const auto& [q, dim] : coh) out.push_back(json{{"q", q}, {"dim", to_decimal(dim)}});
  return out;
}

json to_json(const SweepCase& c) {
  return json{{"m", c.spec.m},         {"degrees", c.spec.degrees},
              {"c", c.spec.c},         {"alpha", c.alpha},
              {"beta", c.beta},        {"p", c.p},
              {"q", c.q}};
}

json optional_int(const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); }

IntPartition partition_arg(const std::string& text) {
  return IntPartition(parse_int_list(text));
}

WeightVector weight_arg(const std::string& text) {
  return WeightVector(parse_int_list(text));
}

std::vector<WedgeFactor> factors_arg(const std::string& text) {
  // "r:e,r:e"
  std::vector<WedgeFactor> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError("factor '" + item + "' must be written r:e");
    const auto r = parse_int_list(item.substr(0, colon));
    const auto e = parse_int_list(item.substr(colon + 1));
    if (r.size() != 1 || e.size() != 1)
      throw ConfigError("factor '" + item + "' must be written r:e");
    out.push_back({r[0], e[0]});
  }
  if (out.empty()) throw ConfigError("--factors needs at least one r:e pair");
  return out;
}

// Every option value lives here; each subcommand reads the fields it
// registered.
struct Options {
  Int x = 0, n = 1, p = 0, q = 0, e = 1, alpha = 0, beta = 0, k = 0;
  Int r = 1, d = 2, f = 1, m = 1, s = 1, t = 0, l = 1, big_p = 0, mu = 1;
  std::optional<Int> cell_p;
  std::string u, v, a, b, lambda, factors, mode, config;
  bool dual = false;
  bool list_witnesses = false;
  unsigned threads = 0;
};

json run_decompose(const Options& o) {
  if (o.mode == "sym-wedge")
    return json{{"alpha", o.alpha}, {"beta", o.beta},
                {"terms", to_json(sym_wedge_decompose(o.alpha, o.beta))}};
  if (o.mode == "tensor-power")
    return json{{"alpha", o.alpha}, {"terms", to_json(tensor_power_decompose(o.alpha))}};
  if (o.mode == "relative-forms") {
    json terms = json::array();
    for (const auto& term : relative_forms_decompose(o.m, o.r, o.s))
      terms.push_back(json{{"u", to_json(term.u)},
                           {"u_transpose", to_json(term.u_transpose)},
                           {"quotient_factor", term.quotient_factor()},
                           {"sub_factor", term.sub_factor()}});
    return json{{"m", o.m}, {"r", o.r}, {"s", o.s}, {"terms", terms}};
  }
  if (o.mode == "weyl-dim") {
    const WeightVector w = weight_arg(o.lambda);
    return json{{"lambda", to_json(w)}, {"d", o.d}, {"dim", to_decimal(weyl_dim(w, o.d))}};
  }
  throw ConfigError("unknown decompose mode '" + o.mode + "'");
}

json run_bott(const Options& o) {
  BottInput input{o.r, o.d, weight_arg(o.a), weight_arg(o.b)};
  if (o.dual) input = serre_dual_input(input);
  const BottResult res = bott_cohomology(input);
  json out{{"r", input.r}, {"d", input.d}, {"a", to_json(input.a)}, {"b", to_json(input.b)},
           {"zero", res.is_zero()}};
  if (res.nonzero) {
    out["q"] = res.nonzero->degree;
    out["psi"] = to_json(res.nonzero->psi);
    out["dim"] = to_decimal(res.nonzero->dim);
  }
  return out;
}

json run_vanish(const Options& o) {
  VanishingQuery query{o.n, o.p, o.q, o.e, o.alpha, o.beta, std::nullopt};
  VanishingVerdict v;
  if (o.mode == "main") v = vanish_main(query);
  else if (o.mode == "hook") {
    query.k = o.k;
    v = vanish_hook(query);
  } else if (o.mode == "wedge") v = vanish_wedge(query);
  else if (o.mode == "sym") v = vanish_sym(query);
  else if (o.mode == "corollary") v = vanish_sym_wedge_corollary(query);
  else if (o.mode == "nagoya") v = vanish_nagoya(query, factors_arg(o.factors));
  else throw ConfigError("unknown vanish mode '" + o.mode + "'");
  json out{{"mode", o.mode}};
  out.update(to_json(v));
  return out;
}

json run_e1(const Options& o) {
  const SpectralParams params{o.n, o.e, o.r, o.l, o.l * o.r, o.big_p};
  params.validate();
  json cells = json::array();
  Int lo = 0, hi = o.n;
  if (o.cell_p) lo = hi = *o.cell_p;
  for (Int p = lo; p <= hi; ++p) {
    const SpectralCell cell = e1_term(params, p);
    json entry{{"p", p}, {"zero", cell.is_zero()}};
    if (cell.cohomology) {
      entry["alpha_p"] = cell.cohomology->alpha_p;
      entry["j_p"] = cell.cohomology->j_p;
    }
    cells.push_back(entry);
  }
  return json{{"n", params.n}, {"e", params.e}, {"r", params.r}, {"l", params.l},
              {"k", params.k}, {"P", params.P}, {"dim_Y", params.total_space_dim()},
              {"cells", cells}};
}

json run_sweep(const Options& o) {
  SweepBox box;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw ConfigError("cannot open config file '" + o.config + "'");
    box = parse_sweep_box(in);
  }
  if (o.threads) box.threads = o.threads;
  const SweepReport report = sweep_validate(box);
  json violations = json::array();
  for (const auto& v : report.violations) {
    json entry{{"case", to_json(v.where)}, {"predicate", to_string(v.predicate)},
               {"verdict", to_json(v.verdict)}, {"cohomology", to_decimal(v.cohomology)}};
    violations.push_back(entry);
  }
  json out{{"cases_checked", report.cases_checked},
           {"violation_count", report.violations.size()},
           {"violations", violations},
           {"boundary_witness_count", report.boundary_witnesses.size()}};
  if (o.list_witnesses) {
    json witnesses = json::array();
    for (const auto& w : report.boundary_witnesses)
      witnesses.push_back(json{{"case", to_json(w.where)},
                               {"predicate", to_string(w.predicate)},
                               {"cohomology", to_decimal(w.cohomology)}});
    out["boundary_witnesses"] = witnesses;
  }
  return out;
}

}  // namespace

CommandResult run(std::span<const std::string> args, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"Partition, Schur-functor, Bott-formula and vanishing-bound calculator",
               "dolbeault"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one machine-readable JSON record");

  Options o;
  auto* delta_cmd = app.add_subcommand("delta", "delta(x): the m with C(m,2) <= x < C(m+1,2)");
  delta_cmd->add_option("--x", o.x)->required();

  auto* dominance_cmd = app.add_subcommand("dominance", "Compare partitions in the dominance pre-order");
  dominance_cmd->add_option("--u", o.u)->required();
  dominance_cmd->add_option("--v", o.v)->required();

  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson decomposition of S_u ⊗ S_v");
  lr_cmd->add_option("--u", o.u)->required();
  lr_cmd->add_option("--v", o.v)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Schur decompositions and Weyl dimensions");
  decompose_cmd->add_option("mode", o.mode, "sym-wedge | tensor-power | relative-forms | weyl-dim")
      ->required();
  decompose_cmd->add_option("--alpha", o.alpha);
  decompose_cmd->add_option("--beta", o.beta);
  decompose_cmd->add_option("--m", o.m);
  decompose_cmd->add_option("--r", o.r);
  decompose_cmd->add_option("--s", o.s);
  decompose_cmd->add_option("--lambda", o.lambda);
  decompose_cmd->add_option("--d", o.d);

  auto* bott_cmd = app.add_subcommand("bott", "Cohomology of S_a Q ⊗ S_b S on Gr(r, d)");
  bott_cmd->add_option("--r", o.r)->required();
  bott_cmd->add_option("--d", o.d)->required();
  bott_cmd->add_option("--a", o.a)->required();
  bott_cmd->add_option("--b", o.b)->required();
  bott_cmd->add_flag("--dual", o.dual, "Use the Serre-dual input F^* ⊗ K");

  auto* pm_cmd = app.add_subcommand("pm-forms", "h^q(P^m, Ω^p(t))");
  pm_cmd->add_option("--m", o.m)->required();
  pm_cmd->add_option("--p", o.p)->required();
  pm_cmd->add_option("--t", o.t)->required();

  auto* vanish_cmd = app.add_subcommand("vanish", "Evaluate a vanishing bound");
  vanish_cmd->add_option("mode", o.mode, "main | hook | wedge | sym | nagoya | corollary")
      ->required();
  vanish_cmd->add_option("--n", o.n)->required();
  vanish_cmd->add_option("--p", o.p)->required();
  vanish_cmd->add_option("--q", o.q)->required();
  vanish_cmd->add_option("--e", o.e);
  vanish_cmd->add_option("--alpha", o.alpha);
  vanish_cmd->add_option("--beta", o.beta);
  vanish_cmd->add_option("--k", o.k);
  vanish_cmd->add_option("--factors", o.factors, "nagoya factors as r:e,r:e,...");

  auto* e1_cmd = app.add_subcommand("e1", "E1 placement of the Borel-Le Potier spectral sequence");
  e1_cmd->add_option("--n", o.n)->required();
  e1_cmd->add_option("--e", o.e)->required();
  e1_cmd->add_option("--r", o.r)->required();
  e1_cmd->add_option("--l", o.l)->required();
  e1_cmd->add_option("--P", o.big_p)->required();
  e1_cmd->add_option("--p", o.cell_p, "Single column instead of p = 0..n");

  auto* dm_cmd = app.add_subcommand("dm", "Targets of d_m for m = mu*r");
  dm_cmd->add_option("--p", o.p)->required();
  dm_cmd->add_option("--q", o.q)->required();
  dm_cmd->add_option("--r", o.r)->required();
  dm_cmd->add_option("--mu", o.mu)->required();

  auto* qbound_cmd = app.add_subcommand("qbound", "Q(x, alpha) = x + (delta(x)+alpha)(e-k+2alpha) - alpha(alpha+1)");
  qbound_cmd->add_option("--x", o.x)->required();
  qbound_cmd->add_option("--alpha", o.alpha)->required();
  qbound_cmd->add_option("--e", o.e)->required();
  qbound_cmd->add_option("--k", o.k)->required();

  auto* identities_cmd = app.add_subcommand("identities", "Residuals of the d_m propagation identities");
  identities_cmd->add_option("--x", o.x)->required();
  identities_cmd->add_option("--alpha", o.alpha)->required();
  identities_cmd->add_option("--mu", o.mu)->required();
  identities_cmd->add_option("--e", o.e)->required();
  identities_cmd->add_option("--k", o.k)->required();

  auto* optimality_cmd = app.add_subcommand("optimality", "Sharpness example on Gr(r, r+f)");
  optimality_cmd->add_option("--r", o.r)->required();
  optimality_cmd->add_option("--f", o.f)->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Check the bounds against split bundles on P^m");
  sweep_cmd->add_option("--config", o.config, "Sweep box file (key = lo..hi lines)");
  sweep_cmd->add_option("--threads", o.threads);
  sweep_cmd->add_flag("--list-witnesses", o.list_witnesses);

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return result;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    result.status = Status::ConfigError;
    result.payload = json{{"error", e.what()}};
    return result;
  }

  try {
    json& rec = result.payload;
    if (delta_cmd->parsed()) {
      rec = json{{"x", o.x}, {"delta", delta(o.x)}};
    } else if (dominance_cmd->parsed()) {
      const auto u = partition_arg(o.u);
      const auto v = partition_arg(o.v);
      rec = json{{"u", to_json(u)}, {"v", to_json(v)},
                 {"relation", to_string(dominance_compare(u, v))}};
    } else if (lr_cmd->parsed()) {
      const auto u = partition_arg(o.u);
      const auto v = partition_arg(o.v);
      rec = json{{"u", to_json(u)}, {"v", to_json(v)}, {"terms", to_json(lr_decompose(u, v))}};
    } else if (decompose_cmd->parsed()) {
      rec = run_decompose(o);
    } else if (bott_cmd->parsed()) {
      rec = run_bott(o);
    } else if (pm_cmd->parsed()) {
      rec = json{{"m", o.m}, {"p", o.p}, {"t", o.t},
                 {"cohomology", to_json(pm_forms_cohomology(o.m, o.p, o.t))}};
    } else if (vanish_cmd->parsed()) {
      rec = run_vanish(o);
    } else if (e1_cmd->parsed()) {
      rec = run_e1(o);
    } else if (dm_cmd->parsed()) {
      const DmTargets t = dm_targets(o.p, o.q, o.r, o.mu);
      rec = json{{"p", o.p}, {"q", o.q}, {"r", o.r}, {"mu", o.mu},
                 {"right", {t.right.p, t.right.q}}, {"left", {t.left.p, t.left.q}}};
    } else if (qbound_cmd->parsed()) {
      rec = json{{"x", o.x}, {"alpha", o.alpha}, {"e", o.e}, {"k", o.k},
                 {"Q", capital_q(o.x, o.alpha, o.e, o.k)}};
    } else if (identities_cmd->parsed()) {
      const IdentityResiduals res = identity_residuals(o.x, o.alpha, o.mu, o.e, o.k);
      rec = json{{"x", o.x}, {"alpha", o.alpha}, {"mu", o.mu}, {"e", o.e}, {"k", o.k},
                 {"res6", optional_int(res.res6)}, {"rhs6", optional_int(res.rhs6)},
                 {"res7", optional_int(res.res7)}, {"rhs7", optional_int(res.rhs7)}};
    } else if (optimality_cmd->parsed()) {
      const OptimalityReport rep = optimality_reproduce(o.r, o.f);
      rec = json{{"r", o.r}, {"f", o.f}, {"bott_nonzero", rep.bott_nonzero},
                 {"bott_degree", rep.bott_degree}, {"bott_dim", to_decimal(rep.bott_dim)},
                 {"verdict_excess", rep.verdict_excess}};
    } else if (sweep_cmd->parsed()) {
      rec = run_sweep(o);
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    result.status = Status::DomainError;
    result.payload = json{{"error", e.what()}};
    return result;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    result.status = Status::ConfigError;
    result.payload = json{{"error", e.what()}};
    return result;
  }

  if (as_json) out << result.payload.dump() << "\n";
  else out << render_text(result.payload);
  return result;
}

}  // namespace dolbeault::cli
