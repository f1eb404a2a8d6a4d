// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Budgets are wall-clock seconds; a criterion that exceeds its budget fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cli_app.hpp"
#include "srcomb/graph.hpp"
#include "srcomb/polyseq.hpp"
#include "srcomb/posets.hpp"
#include "srcomb/riordan.hpp"
#include "srcomb/verify.hpp"
#include "support/oracles.hpp"
#include "support/paper_fixtures.hpp"

using namespace srcomb;
using nlohmann::json;

namespace {

struct Checker {
  bool ok = true;
  long checks = 0;
  std::string detail;

  void require(bool pass, const std::string& what) {
    ++checks;
    if (!pass && ok) {
      ok = false;
      detail = what;
    }
  }
  void absorb(const VerifyReport& rep) {
    checks += rep.checks;
    if (!rep.ok && ok) {
      ok = false;
      detail = rep.first_failure;
    }
  }
};

const std::vector<std::string> kGridSets = {"all", "odd",  "even", "{1,2}",
                                            "{1,3,8}", "2..", "1..3", "mod 3"};

json run_cli_json(const std::vector<std::string>& args, Checker& c) {
  std::vector<const char*> argv{"srcomb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  c.require(code == 0, "CLI exited with code " + std::to_string(code) + ": " + err.str());
  if (code != 0) return json::object();
  return json::parse(out.str());
}

void check_rows(Checker& c, const json& rows, const testing::Rows& want, const char* name) {
  c.require(rows.size() == want.size(), std::string(name) + ": row count");
  for (std::size_t n = 0; n < want.size() && n < rows.size(); ++n)
    for (std::size_t k = 0; k < want[n].size(); ++k) {
      const std::string got = rows.at(n).at(k).get<std::string>();
      c.require(got == std::to_string(want[n][k]),
                std::string(name) + " entry (" + std::to_string(n) + "," + std::to_string(k) +
                    "): got " + got + ", want " + std::to_string(want[n][k]));
    }
}

void check_matrix(Checker& c, const TriMatrix& m, const testing::Rows& want, const char* name) {
  c.require(m.size() == want.size(), std::string(name) + ": size");
  for (std::size_t n = 0; n < want.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      c.require(m.at(n, k) == Rational(want[n][k]),
                std::string(name) + " entry (" + std::to_string(n) + "," + std::to_string(k) +
                    "): got " + m.at(n, k).to_string());
}

// --- criterion bodies -------------------------------------------------

void criterion1(Checker& c) {
  const auto direct = run_cli_json({"matrix", "--kind", "second", "--set", "{1,3,8}", "--r",
                                    "2", "--size", "9", "--format", "json"},
                                   c);
  if (c.ok) check_rows(c, direct.at("result").at("rows"), testing::kMatrixM138r2, "M_{138,2}");
  const auto inverse = run_cli_json({"matrix", "--kind", "second", "--set", "{1,3,8}", "--r",
                                     "2", "--size", "9", "--inverse", "--format", "json"},
                                    c);
  if (c.ok) check_rows(c, inverse.at("result").at("rows"), testing::kMatrixT138r2, "T_{138,2}");
}

void criterion2(Checker& c) {
  const SRContext odd2(IndexSet::odd(), 2, 9);
  check_matrix(c, matrix_second_kind(odd2, 9), testing::kMatrixMOddR2, "M_{O,2}");
  check_matrix(c, matrix_second_kind(odd2, 9).inverse(), testing::kMatrixTOddR2, "T_{O,2}");
  const SRContext odd1(IndexSet::odd(), 1, 9);
  const TriMatrix u = matrix_first_kind(odd1, 9).inverse();
  check_matrix(c, u, testing::kMatrixUOddR1, "U_{O,1}");
  for (std::size_t i = 0; i < testing::kTangent.size(); ++i) {
    const Rational v = u.at(2 * i + 2, 0);
    c.require((v < Rational(0) ? -v : v) == Rational(testing::kTangent[i]),
              "tangent column at row " + std::to_string(2 * i + 2));
  }
  for (std::size_t i = 0; i < testing::kCyclicAlternating.size(); ++i) {
    const Rational v = u.at(2 * i + 3, 1);
    c.require((v < Rational(0) ? -v : v) == Rational(testing::kCyclicAlternating[i]),
              "alternating column at row " + std::to_string(2 * i + 3));
  }
}

void criterion3(Checker& c) {
  const SRContext ctx(IndexSet::explicit_set({1, 3, 8}), 2, 9);
  for (long n = 0; n <= 8; ++n) {
    const IntPolynomial by_sum = ctx.bell_polynomial(n);
    const IntPolynomial by_det = bell_polynomial_determinant(ctx, n);
    const auto& want = testing::kBellPoly138r2[n];
    for (long k = 0; k <= n; ++k) {
      const BigInt expected = k < static_cast<long>(want.size()) ? want[k] : 0L;
      c.require(by_sum.coefficient(k) == expected,
                "sum-path B_" + std::to_string(n) + " coefficient " + std::to_string(k));
      c.require(by_det.coefficient(k) == expected,
                "determinant-path B_" + std::to_string(n) + " coefficient " + std::to_string(k));
    }
  }
}

void criterion4(Checker& c) {
  for (const auto& text : kGridSets) {
    const IndexSet S = IndexSet::parse(text);
    for (long r = 0; r <= 3; ++r) {
      c.absorb(verify_oracle_second(S, r, 8));
      c.absorb(verify_oracle_first(S, r, 6));
    }
  }
}

void criterion5(Checker& c) {
  for (const auto& text : kGridSets) {
    const IndexSet S = IndexSet::parse(text);
    for (long r = 0; r <= 3; ++r) {
      c.absorb(verify_recurrences_second(S, r, 8, 10));
      c.absorb(verify_recurrences_first(S, r, 6, 8));
    }
  }
}

void criterion6(Checker& c) {
  for (const char* text : {"odd", "mod 3"}) {
    const IndexSet S = IndexSet::parse(text);
    for (long r = 1; r <= 2; ++r) {
      for (long n = 0; n <= 5; ++n) c.absorb(verify_mobius(S, r, n, StirlingKind::second));
      for (long n = 0; n <= 4; ++n) c.absorb(verify_mobius(S, r, n, StirlingKind::first));
    }
  }
  // the worked values from the odd-set example
  const auto pp = PartitionPairPoset::build(IndexSet::odd(), 2, 4);
  c.require(pp.poset.mobius_column_sum(0) == 24, "T_{O,2}(4,0) = 24");
  c.require(pp.poset.mobius_column_sum(2) == -16, "T_{O,2}(4,2) = -16");
  CompositionPartitionPair top{{{1, 2, 3, 4}, {}}, {}};
  top.canonicalize();
  c.require(pp.poset.mobius(pp.poset.zero_hat(), pp.index_of(top)) == 9,
            "mu(0, ({1,2,3,4},{})||-) = 9");
  c.require(mobius_column_sum(IndexSet::odd(), 1, 3, 1, StirlingKind::first) == -8,
            "U_{O,1}(3,1) = -8");
}

void criterion7(Checker& c) {
  for (const char* text : {"all", "{1,2}", "odd"}) {
    const IndexSet S = IndexSet::parse(text);
    for (const auto& [n1, n2, r] : std::vector<std::tuple<long, long, long>>{
             {1, 1, 0}, {2, 1, 0}, {2, 2, 0}, {1, 1, 1}, {2, 2, 1}})
      c.absorb(verify_orientation_formula(n1, n2, r, S));
  }
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 3; ++n2) {
      const BigInt brute = count_acyclic_orientations(Graph::complete_bipartite(n1, n2));
      const Rational pb = poly_bernoulli(SRContext(IndexSet::all(), 0, n1), -n2, n1);
      c.require(Rational(brute) == pb, "A(K_{" + std::to_string(n1) + "," + std::to_string(n2) +
                                           "}) vs poly-Bernoulli");
    }
  c.require(count_acyclic_orientations(Graph::complete_bipartite(2, 2)) == 14, "A(K_{2,2}) = 14");
  for (const char* text : {"all", "{1,2}", "odd"}) {
    const IndexSet S = IndexSet::parse(text);
    for (long r = 0; r <= 2; ++r) {
      const SRContext ctx(S, r, 5);
      for (long n = 1; n <= 5; ++n) {
        const Graph g = Graph::join_complete_empty(static_cast<int>(n), static_cast<int>(r));
        for (long k = 0; k <= n; ++k)
          c.require(clique_partition_count(g, k + r, S) == ctx.stirling2(n, k),
                    "clique partitions of K_n+E_r at n=" + std::to_string(n) +
                        " k=" + std::to_string(k) + " S=" + text);
      }
    }
  }
}

void criterion8(Checker& c) {
  for (const auto& text : kGridSets) {
    const IndexSet S = IndexSet::parse(text);
    for (long r = 0; r <= 3; ++r)
      for (long mu = -2; mu <= 2; ++mu) c.absorb(verify_poly_egf(S, r, mu, 10));
  }
  // classical reductions against independent oracles
  const SRContext all0(IndexSet::all(), 0, 10);
  const auto bern = testing::bernoulli_numbers(10);
  for (long n = 0; n <= 10; ++n)
    c.require(poly_bernoulli(all0, 1, n) == (n % 2 == 0 ? bern[n] : -bern[n]),
              "poly-Bernoulli vs Bernoulli recurrence at n = " + std::to_string(n));
  c.require(poly_cauchy_first(all0, 1, 1) == Rational(1, 2), "c_1 = 1/2");
  c.require(poly_cauchy_first(all0, 1, 2) == Rational(-1, 6), "c_2 = -1/6");
  c.require(poly_cauchy_first(all0, 1, 2) == testing::poly_cauchy_first_integral(1, 2),
            "c_2 vs integral");
  c.require(poly_cauchy_second(all0, 1, 2) == Rational(5, 6), "c-hat_2 = 5/6");
  c.require(poly_cauchy_second(all0, 1, 2) == testing::cauchy_second_integral(2),
            "c-hat_2 vs integral");
}

void criterion9(Checker& c) {
  const std::size_t N = 32;
  testing::SeriesGen gen(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const EgfSeries f = gen.series_zero_constant_unit(N);
    const EgfSeries finv = f.reversion();
    c.require(f.compose(finv) == EgfSeries::identity(N), "reversion round trip (forward)");
    c.require(finv.compose(f) == EgfSeries::identity(N), "reversion round trip (backward)");

    const RiordanPair p(gen.series_unit_constant(N), gen.series_zero_constant_unit(N));
    const RiordanPair q(gen.series_unit_constant(N), gen.series_zero_constant_unit(N));
    c.require(build_riordan(p, 12) * build_riordan(q, 12) == build_riordan(p.product(q), 12),
              "Riordan group law");

    auto coeffs = gen.series(N).taylor_coefficients();
    coeffs[0] = Rational(1);
    const EgfSeries s = EgfSeries::from_taylor(std::move(coeffs));
    c.require(s.log().exp() == s, "exp(log(s)) = s");
    const EgfSeries z = gen.series_zero_constant_unit(N);
    c.require(z.exp().log() == z, "log(exp(z)) = z");
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 = no stated budget
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "paper-table reproduction via the CLI ({1,3,8}, r=2)", 1.0, criterion1},
      {2, "odd-set matrices M, T, U with tangent/alternating columns", 1.0, criterion2},
      {3, "Bell polynomials n=0..8 by sum and determinant paths", 1.0, criterion3},
      {4, "oracle equivalence over the full grid", 300.0, criterion4},
      {5, "recurrence suite over the full grid", 0.0, criterion5},
      {6, "Mobius column sums equal inverse-matrix entries", 120.0, criterion6},
      {7, "graph bridge: orientations and clique partitions", 120.0, criterion7},
      {8, "poly-number EGF agreement and classical reductions", 60.0, criterion8},
      {9, "series engine property tests at order 32", 0.0, criterion9},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.ok && criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds) {
      c.ok = false;
      c.detail = "exceeded runtime budget of " + std::to_string(criterion.budget_seconds) + " s";
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
              << criterion.title << "  [" << c.checks << " checks, " << std::fixed
              << std::setprecision(2) << elapsed << " s]";
    if (!c.ok) std::cout << "\n      " << c.detail;
    std::cout << "\n";
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}
