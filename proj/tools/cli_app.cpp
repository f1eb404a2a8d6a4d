#include "cli_app.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srcomb/graph.hpp"
#include "srcomb/polyseq.hpp"
#include "srcomb/posets.hpp"
#include "srcomb/riordan.hpp"
#include "srcomb/verify.hpp"

namespace srcomb::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string set_text = "all";
  long r = 0;
  std::size_t order = 0;  // 0 = choose automatically
  std::string format = "plain";
  long guard = 0;  // 0 = library defaults
};

/// One command's output: the JSON record plus a tabular view shared by the
/// csv and plain formats, so every format carries the same values.
struct OutputRecord {
  std::string command;
  json params = json::object();
  json result;
  std::string method;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void scalar(const std::string& v) {
    result = v;
    columns = {"value"};
    rows = {{v}};
  }
  void sequence(const std::string& key, const std::vector<std::string>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v);
    result = json::object({{key, arr}});
    columns = {key.substr(0, key.size() - 1), "value"};  // "values" -> "value"
    rows.clear();
    for (std::size_t i = 0; i < values.size(); ++i)
      rows.push_back({std::to_string(i), values[i]});
  }
};

void emit(const OutputRecord& rec, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    json j;
    j["command"] = rec.command;
    j["params"] = rec.params;
    j["result"] = rec.result;
    j["method"] = rec.method;
    out << j.dump() << "\n";
    return;
  }
  if (opt.format == "csv") {
    for (std::size_t i = 0; i < rec.columns.size(); ++i)
      out << (i ? "," : "") << rec.columns[i];
    out << "\n";
    for (const auto& row : rec.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << "\n";
    }
    return;
  }
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << "\n";
  }
}

std::size_t pick_order(const Options& opt, long needed) {
  if (opt.order != 0) return opt.order;
  return std::max<std::size_t>(EgfSeries::default_order, static_cast<std::size_t>(needed));
}

EnumerationGuards guards_from(const Options& opt) {
  EnumerationGuards g;
  if (opt.guard > 0) {
    g.partitions = opt.guard;
    g.permutations = opt.guard;
  }
  return g;
}

json polynomial_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (long k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coefficient(k).get_str());
  return json::object({{"coefficients", coeffs}, {"text", p.to_string()}});
}

json report_json(const VerifyReport& rep) {
  json j;
  j["ok"] = rep.ok;
  j["checks"] = rep.checks;
  if (!rep.ok) j["first_failure"] = rep.first_failure;
  return j;
}

void fill_report(OutputRecord& rec, const VerifyReport& rep) {
  rec.method = "verify";
  rec.result = report_json(rep);
  rec.columns = {"ok", "checks", "first_failure"};
  rec.rows = {{rep.ok ? "true" : "false", std::to_string(rep.checks),
               rep.ok ? "" : rep.first_failure}};
}

Graph parse_graph(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  std::vector<long> args;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ','))
      args.push_back(std::stol(item));
  }
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument("graph '" + text + "': expected " + std::to_string(n) +
                                  " size argument(s)");
  };
  if (kind == "complete") {
    want(1);
    return Graph::complete(static_cast<int>(args[0]));
  }
  if (kind == "path") {
    want(1);
    return Graph::path(static_cast<int>(args[0]));
  }
  if (kind == "join") {
    want(2);
    return Graph::join_complete_empty(static_cast<int>(args[0]), static_cast<int>(args[1]));
  }
  if (kind == "bipartite") {
    want(2);
    return Graph::complete_bipartite(static_cast<int>(args[0]), static_cast<int>(args[1]));
  }
  throw std::invalid_argument("graph '" + text +
                              "': known forms are complete:n, path:n, join:n,r, bipartite:n1,n2");
}

struct CommandState {
  Options opt;
  long n = 0;
  long k = -1;  // -1 means "not given": emit the whole row
  long mu = 0;
  std::size_t size = 9;
  bool inverse = false;
  std::string kind = "second";
  std::string poly_kind = "first";
  std::string mobius_kind = "both";
  long n1 = 1, n2 = 1;
  bool constrained = false;
  std::string graph_text = "complete:3";
  std::string what = "partitions";
  long mu_min = -2, mu_max = 2;
};

json base_params(const CommandState& st, const IndexSet& S) {
  json p;
  p["set"] = S.to_string();
  p["r"] = st.opt.r;
  return p;
}

int run_value_command(const std::string& name, const CommandState& st, std::ostream& out) {
  const IndexSet S = IndexSet::parse(st.opt.set_text);
  OutputRecord rec;
  rec.command = name;
  rec.method = "egf";
  const SRContext ctx(S, st.opt.r, pick_order(st.opt, st.n + 1), guards_from(st.opt));
  rec.params = base_params(st, S);
  rec.params["n"] = st.n;
  rec.params["order"] = ctx.order();

  if (name == "stirling2" || name == "stirling1") {
    auto value = [&](long n, long k) {
      return name == "stirling2" ? ctx.stirling2(n, k) : ctx.stirling1(n, k);
    };
    if (st.k >= 0) {
      rec.params["k"] = st.k;
      rec.scalar(value(st.n, st.k).get_str());
    } else {
      std::vector<std::string> row;
      for (long k = 0; k <= st.n; ++k) row.push_back(value(st.n, k).get_str());
      rec.sequence("values", row);
      rec.columns = {"k", "value"};
    }
  } else if (name == "bell") {
    std::vector<std::string> seq;
    for (long n = 0; n <= st.n; ++n) seq.push_back(ctx.bell(n).get_str());
    rec.sequence("values", seq);
    rec.columns = {"n", "value"};
  } else if (name == "bellpoly" || name == "factpoly") {
    const IntPolynomial p =
        name == "bellpoly" ? ctx.bell_polynomial(st.n) : ctx.factorial_polynomial(st.n);
    rec.result = polynomial_json(p);
    rec.columns = {"k", "coefficient"};
    for (long k = 0; k <= p.degree(); ++k)
      rec.rows.push_back({std::to_string(k), p.coefficient(k).get_str()});
    if (p.is_zero()) rec.rows.push_back({"0", "0"});
  }
  emit(rec, st.opt, out);
  return 0;
}

int run_matrix(const CommandState& st, std::ostream& out) {
  const IndexSet S = IndexSet::parse(st.opt.set_text);
  OutputRecord rec;
  rec.command = "matrix";
  rec.method = "egf";
  const SRContext ctx(S, st.opt.r, pick_order(st.opt, static_cast<long>(st.size)),
                      guards_from(st.opt));
  TriMatrix m = st.kind == "second" ? matrix_second_kind(ctx, st.size)
                                    : matrix_first_kind(ctx, st.size);
  if (st.inverse) m = m.inverse();
  rec.params = base_params(st, S);
  rec.params["kind"] = st.kind;
  rec.params["size"] = st.size;
  rec.params["inverse"] = st.inverse;
  rec.params["riordan"] = is_riordan(ctx);
  rec.result = json::parse(m.to_json());
  for (std::size_t k = 0; k < st.size; ++k) rec.columns.push_back("k" + std::to_string(k));
  for (std::size_t n = 0; n < st.size; ++n) {
    std::vector<std::string> row;
    for (std::size_t k = 0; k < st.size; ++k) row.push_back(m.at(n, k).to_string());
    rec.rows.push_back(std::move(row));
  }
  emit(rec, st.opt, out);
  return 0;
}

int run_poly_numbers(const std::string& name, const CommandState& st, std::ostream& out) {
  const IndexSet S = IndexSet::parse(st.opt.set_text);
  OutputRecord rec;
  rec.command = name;
  rec.method = "sum";
  const SRContext ctx(S, st.opt.r, pick_order(st.opt, st.n), guards_from(st.opt));
  rec.params = base_params(st, S);
  rec.params["n"] = st.n;
  rec.params["mu"] = st.mu;
  std::vector<std::string> seq;
  for (long n = 0; n <= st.n; ++n) {
    Rational v;
    if (name == "polyb")
      v = poly_bernoulli(ctx, st.mu, n);
    else
      v = st.poly_kind == "second" ? poly_cauchy_second(ctx, st.mu, n)
                                   : poly_cauchy_first(ctx, st.mu, n);
    seq.push_back(v.to_string());
  }
  if (name == "polyc") rec.params["kind"] = st.poly_kind;
  rec.sequence("values", seq);
  rec.columns = {"n", "value"};
  emit(rec, st.opt, out);
  return 0;
}

int run_orientations(const CommandState& st, std::ostream& out) {
  OutputRecord rec;
  rec.command = "orientations";
  rec.method = "oracle";
  rec.params["n1"] = st.n1;
  rec.params["n2"] = st.n2;
  const int edge_guard = st.opt.guard > 0 ? static_cast<int>(st.opt.guard) : 20;
  if (st.constrained) {
    const IndexSet S = IndexSet::parse(st.opt.set_text);
    rec.params["set"] = S.to_string();
    rec.params["r"] = st.opt.r;
    rec.params["constrained"] = true;
    rec.scalar(count_constrained_orientations(static_cast<int>(st.n1), static_cast<int>(st.n2),
                                              static_cast<int>(st.opt.r), S, edge_guard)
                   .get_str());
  } else {
    rec.params["constrained"] = false;
    const Graph g = Graph::complete_bipartite(static_cast<int>(st.n1), static_cast<int>(st.n2));
    rec.scalar(count_acyclic_orientations(g, edge_guard).get_str());
  }
  emit(rec, st.opt, out);
  return 0;
}

int run_cliqueparts(const CommandState& st, std::ostream& out) {
  const IndexSet S = IndexSet::parse(st.opt.set_text);
  const Graph g = parse_graph(st.graph_text);
  const int vertex_guard = st.opt.guard > 0 ? static_cast<int>(st.opt.guard) : 10;
  OutputRecord rec;
  rec.command = "cliqueparts";
  rec.method = "oracle";
  rec.params["set"] = S.to_string();
  rec.params["graph"] = json::parse(g.to_json());
  if (st.k >= 0) {
    rec.params["k"] = st.k;
    rec.scalar(clique_partition_count(g, st.k, S, vertex_guard).get_str());
  } else {
    std::vector<std::string> seq;
    for (long k = 0; k <= g.vertex_count(); ++k)
      seq.push_back(clique_partition_count(g, k, S, vertex_guard).get_str());
    rec.sequence("values", seq);
    rec.columns = {"k", "count"};
    const BigInt total = clique_partition_total(g, S, vertex_guard);
    rec.result["total"] = total.get_str();
    rec.rows.push_back({"total", total.get_str()});
  }
  emit(rec, st.opt, out);
  return 0;
}

int run_oracle(const CommandState& st, std::ostream& out) {
  const IndexSet S = IndexSet::parse(st.opt.set_text);
  OutputRecord rec;
  rec.command = "oracle";
  rec.method = "oracle";
  const SRContext ctx(S, st.opt.r, pick_order(st.opt, std::max(st.n, 1L)), guards_from(st.opt));
  rec.params = base_params(st, S);
  rec.params["n"] = st.n;
  rec.params["what"] = st.what;
  const auto counts = st.what == "permutations" ? oracle_permutation_counts(ctx, st.n)
                                               : oracle_partition_counts(ctx, st.n);
  if (st.k >= 0) {
    rec.params["k"] = st.k;
    const BigInt v = st.k <= st.n ? counts[st.k] : BigInt(0);
    rec.scalar(v.get_str());
  } else {
    std::vector<std::string> seq;
    for (const auto& c : counts) seq.push_back(c.get_str());
    rec.sequence("values", seq);
    rec.columns = {"k", "count"};
  }
  emit(rec, st.opt, out);
  return 0;
}

int run_verify(const std::string& target, const CommandState& st, std::ostream& out) {
  const IndexSet S = IndexSet::parse(st.opt.set_text);
  OutputRecord rec;
  rec.command = "verify " + target;
  rec.params = base_params(st, S);
  VerifyReport rep;
  if (target == "recurrences") {
    rec.params["n"] = st.n;
    const std::size_t order = pick_order(st.opt, st.n + 1);
    rep.merge(verify_recurrences_second(S, st.opt.r, st.n, order));
    rep.merge(verify_recurrences_first(S, st.opt.r, st.n, order));
  } else if (target == "orthogonality") {
    rec.params["size"] = st.size;
    const SRContext ctx(S, st.opt.r, pick_order(st.opt, static_cast<long>(st.size)));
    rep = verify_orthogonality(ctx, st.size);
  } else if (target == "mobius") {
    rec.params["n"] = st.n;
    PairEnumerationOptions opts;
    if (st.opt.guard > 0) {
      opts.max_n_partitions = st.opt.guard;
      opts.max_n_permutations = st.opt.guard;
    }
    if (st.mobius_kind == "second" || st.mobius_kind == "both")
      rep.merge(verify_mobius(S, st.opt.r, st.n, StirlingKind::second, opts));
    if (st.mobius_kind == "first" || st.mobius_kind == "both")
      rep.merge(verify_mobius(S, st.opt.r, st.n, StirlingKind::first, opts));
  } else if (target == "orientations") {
    rec.params["n1"] = st.n1;
    rec.params["n2"] = st.n2;
    rep = verify_orientation_formula(st.n1, st.n2, st.opt.r, S);
  } else if (target == "polyegf") {
    rec.params["n"] = st.n;
    rec.params["mu_min"] = st.mu_min;
    rec.params["mu_max"] = st.mu_max;
    for (long mu = st.mu_min; mu <= st.mu_max; ++mu)
      rep.merge(verify_poly_egf(S, st.opt.r, mu, st.n));
  }
  fill_report(rec, rep);
  emit(rec, st.opt, out);
  return rep.ok ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandState st;
  CLI::App app{"Exact (S,r)-restricted Stirling / Bell / poly-Bernoulli calculator"};
  app.require_subcommand(1);

  app.add_option("--set", st.opt.set_text,
                 "index set: all | odd | even | 1..m | m.. | mod q | {a,b,c}");
  app.add_option("--r", st.opt.r, "number of special elements")->check(CLI::NonNegativeNumber);
  app.add_option("--order", st.opt.order, "series truncation order (default 32, auto-raised)");
  app.add_option("--format", st.opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--guard", st.opt.guard, "override enumeration guards (use with care)");

  auto add_common = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  for (const char* name : {"stirling2", "stirling1"}) {
    auto* sub = add_common(app.add_subcommand(name, "triangle values"));
    sub->add_option("--n", st.n)->required();
    sub->add_option("--k", st.k, "column (omit for the whole row)");
  }
  {
    auto* sub = add_common(app.add_subcommand("bell", "Bell numbers 0..n"));
    sub->add_option("--n", st.n)->required();
  }
  for (const char* name : {"bellpoly", "factpoly"}) {
    auto* sub = add_common(app.add_subcommand(name, "polynomial coefficients"));
    sub->add_option("--n", st.n)->required();
  }
  {
    auto* sub = add_common(app.add_subcommand("matrix", "Stirling matrix or its inverse"));
    sub->add_option("--kind", st.kind)->check(CLI::IsMember({"second", "first"}));
    sub->add_option("--size", st.size);
    sub->add_flag("--inverse", st.inverse);
  }
  {
    auto* sub = add_common(app.add_subcommand("polyb", "poly-Bernoulli numbers 0..n"));
    sub->add_option("--n", st.n)->required();
    sub->add_option("--mu", st.mu)->required();
  }
  {
    auto* sub = add_common(app.add_subcommand("polyc", "poly-Cauchy numbers 0..n"));
    sub->add_option("--n", st.n)->required();
    sub->add_option("--mu", st.mu)->required();
    sub->add_option("--kind", st.poly_kind)->check(CLI::IsMember({"first", "second"}));
  }
  {
    auto* sub = add_common(app.add_subcommand("orientations", "acyclic orientation counts"));
    sub->add_option("--n1", st.n1)->required();
    sub->add_option("--n2", st.n2)->required();
    sub->add_flag("--constrained", st.constrained, "count with the source/sink, outdegree and S conditions");
  }
  {
    auto* sub = add_common(app.add_subcommand("cliqueparts", "clique partition counts"));
    sub->add_option("--graph", st.graph_text, "complete:n | path:n | join:n,r | bipartite:n1,n2");
    sub->add_option("--k", st.k, "number of blocks (omit for the whole table)");
  }
  {
    auto* sub = add_common(app.add_subcommand("oracle", "direct enumeration counts"));
    sub->add_option("--what", st.what)->check(CLI::IsMember({"partitions", "permutations"}));
    sub->add_option("--n", st.n)->required();
    sub->add_option("--k", st.k, "column (omit for the whole row)");
  }
  {
    auto* verify = app.add_subcommand("verify", "cross-validation suites");
    verify->require_subcommand(1);
    verify->fallthrough();
    for (const char* name : {"recurrences", "orthogonality", "mobius", "orientations", "polyegf"}) {
      auto* sub = verify->add_subcommand(name);
      sub->fallthrough();
      if (std::string(name) == "recurrences" || std::string(name) == "mobius" ||
          std::string(name) == "polyegf")
        sub->add_option("--n", st.n);
      if (std::string(name) == "orthogonality") sub->add_option("--size", st.size);
      if (std::string(name) == "mobius")
        sub->add_option("--kind", st.mobius_kind)
            ->check(CLI::IsMember({"second", "first", "both"}));
      if (std::string(name) == "orientations") {
        sub->add_option("--n1", st.n1)->required();
        sub->add_option("--n2", st.n2)->required();
      }
      if (std::string(name) == "polyegf") {
        sub->add_option("--mu-min", st.mu_min);
        sub->add_option("--mu-max", st.mu_max);
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (st.opt.guard > 0)
    err << "warning: enumeration guards overridden to " << st.opt.guard << "\n";

  // defaults for verify subtargets
  if (app.got_subcommand("verify")) {
    auto* verify = app.get_subcommand("verify");
    const std::string target = verify->get_subcommands().front()->get_name();
    if (target == "recurrences" && st.n == 0) st.n = 6;
    if (target == "mobius" && st.n == 0) st.n = 4;
    if (target == "polyegf" && st.n == 0) st.n = 8;
    try {
      return run_verify(target, st, out);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "stirling2" || name == "stirling1" || name == "bell" || name == "bellpoly" ||
        name == "factpoly")
      return run_value_command(name, st, out);
    if (name == "matrix") return run_matrix(st, out);
    if (name == "polyb" || name == "polyc") return run_poly_numbers(name, st, out);
    if (name == "orientations") return run_orientations(st, out);
    if (name == "cliqueparts") return run_cliqueparts(st, out);
    if (name == "oracle") return run_oracle(st, out);
    err << "error: unknown subcommand\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace srcomb::cli
