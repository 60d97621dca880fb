#include "frook/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "frook/cosets.hpp"
#include "frook/framed.hpp"
#include "frook/hecke.hpp"
#include "frook/partitions.hpp"
#include "frook/report.hpp"
#include "frook/rook.hpp"
#include "frook/tensor.hpp"

namespace frook {

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    os << text;
  }
}

std::string render(const Report& rep, const std::string& format) {
  if (format == "json") return report_to_json(rep);
  if (format == "csv") return report_to_csv(rep);
  return report_to_text(rep);
}

Report run_enumerate(unsigned n, unsigned q, bool unsafe) {
  PrimeField F(q);
  Report rep;
  rep.suite = "enumerate";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(q)}};
  auto elems = enumerate_framed(n, &F, {}, unsafe);
  std::vector<size_t> by_rank(n + 1, 0);
  for (const auto& x : elems) by_rank[size_t(x.rank())]++;
  Int total(0), plain_total(0);
  for (unsigned r = 0; r <= n; ++r) {
    Int formula = framed_rank_count(n, q, r);
    Int plain = rook_rank_count(n, r);
    Int cn = cn_rank_count(n, q - 1, r);
    total += formula;
    plain_total += plain;
    std::ostringstream detail;
    detail << "|I_n^r| = " << plain.get_str() << "  |F_q(I_n^r)| formula = " << formula.get_str()
           << "  enumerated = " << by_rank[r] << "  |C_{n,r}| (d=q-1) = " << cn.get_str();
    rep.add("rank " + std::to_string(r),
            "(q-1)^r C(n,r)^2 r! and d^r C(n,r)^2 r! at d = q-1",
            Int(static_cast<unsigned long>(by_rank[r])) == formula && formula == cn,
            detail.str());
  }
  rep.add("total", "sum over ranks",
          Int(static_cast<unsigned long>(elems.size())) == total,
          "enumerated " + std::to_string(elems.size()) + "  formula " + total.get_str() +
              "  plain " + plain_total.get_str());
  return rep;
}

Report run_coset_report(unsigned n, unsigned q, bool unsafe) {
  PrimeField F(q);
  Report rep;
  rep.suite = "coset-report";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(q)}};
  auto records = coset_report(n, &F, unsafe);
  Int total(0);
  bool all_ok = true;
  for (const auto& rec : records) {
    total += rec.size;
    all_ok &= rec.verified;
    rep.add(rec.rep_text, "|U sigma U| = q^{r(r-1)/2 + l}", rec.verified,
            "rank " + std::to_string(rec.rank) + " length " + std::to_string(rec.length) +
                " size " + rec.size.get_str());
  }
  Int expect(1);
  for (unsigned k = 0; k < n * n; ++k) expect *= q;
  rep.add("global sum", "sum_sigma |U sigma U| = q^{n^2}", all_ok && total == expect,
          total.get_str());
  return rep;
}

Report run_iso(unsigned n, unsigned q, bool unsafe) {
  PrimeField F(q);
  Report rep;
  rep.suite = "iso";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(q)},
                {"d", std::to_string(q - 1)}};
  Report relations = verify_presentation_relations_hecke(n, &F, unsafe);
  rep.merge(relations, "relations");
  Int dimQ = framed_total_count(n, q);
  Int dimC = cn_total_count(n, q - 1);
  auto Q = enumerate_Q(n, &F, {}, unsafe);
  rep.add("dimension match",
          "|Q| = |C_n| at d = q-1; the spanning bound collapses to equality",
          dimQ == dimC && Int(static_cast<unsigned long>(Q.size())) == dimQ,
          "|Q| = " + dimQ.get_str() + ", |C_n| = " + dimC.get_str());
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact engine for framed rook monoids, their double-coset algebra, "
               "and the Rook Yokonuma-Hecke algebra"};
  app.require_subcommand(1);

  unsigned n = 2, q = 3, d = 0;
  uint64_t seed = 20240901;
  std::string format = "text", out_path, suite;
  bool unsafe = false;
  size_t samples = 0;
  app.add_option("--format", format, "output format: text, json, csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "write the report to a file");

  auto add_common = [&](CLI::App* cmd, bool with_d) {
    cmd->add_option("--n", n, "size of the ground set");
    cmd->add_option("--q", q, "odd prime order of the field");
    if (with_d) cmd->add_option("--d", d, "framing order (defaults to q-1)");
    cmd->add_option("--seed", seed, "seed for sampled checks");
    cmd->add_option("--samples", samples, "sample count for large suites (0 = exhaustive)");
    cmd->add_flag("--unsafe-scale", unsafe, "override the desk-scale guards");
  };

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "per-rank cardinalities vs formulas");
  add_common(enumerate_cmd, false);
  CLI::App* coset_cmd = app.add_subcommand("coset-report", "double-coset decomposition report");
  add_common(coset_cmd, false);
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite,
                         "one of: partitions, framed, rook, cosets, hecke, tensor, "
                         "alt-presentations, basis, iso")
      ->required();
  add_common(verify_cmd, true);
  CLI::App* table_cmd = app.add_subcommand("structure-constants",
                                           "exact structure constants of the coset algebra");
  add_common(table_cmd, false);

  std::vector<std::string> argv = args;
  std::vector<char*> raw;
  raw.push_back(const_cast<char*>("frook"));
  for (auto& a : argv) raw.push_back(a.data());
  try {
    app.parse(int(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (app.got_subcommand(enumerate_cmd)) {
      Report rep = run_enumerate(n, q, unsafe);
      emit(render(rep, format), out_path);
      return rep.all_pass() ? 0 : 1;
    }
    if (app.got_subcommand(coset_cmd)) {
      Report rep = run_coset_report(n, q, unsafe);
      emit(render(rep, format), out_path);
      return rep.all_pass() ? 0 : 1;
    }
    if (app.got_subcommand(table_cmd)) {
      PrimeField F(q);
      HeckeContext ctx(n, &F, unsafe);
      auto table = structure_constant_table(ctx);
      std::ostringstream os;
      if (format == "json") {
        os << "[\n";
        for (size_t k = 0; k < table.size(); ++k) {
          const auto& rec = table[k];
          os << "  {\"sigma\": \"" << rec.sigma << "\", \"tau\": \"" << rec.tau
             << "\", \"rho\": \"" << rec.rho << "\", \"coeff\": \"" << rec.coeff.get_str()
             << "\"}" << (k + 1 < table.size() ? "," : "") << "\n";
        }
        os << "]\n";
      } else {
        os << "sigma,tau,rho,coeff\n";
        for (const auto& rec : table)
          os << rec.sigma << "," << rec.tau << "," << rec.rho << "," << rec.coeff.get_str()
             << "\n";
      }
      emit(os.str(), out_path);
      return 0;
    }
    // verify
    if (d == 0) d = q - 1;
    Report rep;
    if (suite == "partitions") {
      rep = verify_partition_monoid(n);
      PrimeField F(q);
      rep.merge(verify_diagram_monoid(n, &F, seed), "diagrams");
    } else if (suite == "framed") {
      PrimeField F(q);
      rep = verify_framed_presentation(n, &F, unsafe);
    } else if (suite == "rook") {
      PrimeField F(q);
      rep = verify_rook_matrices(n, &F, seed, unsafe);
    } else if (suite == "cosets") {
      PrimeField F(q);
      rep = verify_coset_decomposition(n, &F, unsafe);
      rep.merge(verify_coset_products(n, &F, seed, samples, unsafe), "products");
    } else if (suite == "hecke") {
      PrimeField F(q);
      rep = verify_hecke_rules(n, &F, seed, samples, unsafe);
      rep.merge(verify_presentation_relations_hecke(n, &F, unsafe), "presentation");
    } else if (suite == "tensor") {
      rep = verify_tensor_relations(n, d);
    } else if (suite == "alt-presentations") {
      rep = verify_alternative_presentations(n, d);
    } else if (suite == "basis") {
      rep = verify_cn_basis(n, d, seed, samples);
    } else if (suite == "iso") {
      rep = run_iso(n, q, unsafe);
    } else {
      std::cerr << "unknown suite: " << suite << "\n";
      return 1;
    }
    emit(render(rep, format), out_path);
    return rep.all_pass() ? 0 : 1;
  } catch (const std::domain_error& e) {
    std::cerr << "scale guard: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace frook
