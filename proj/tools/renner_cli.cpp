// renner: character tables of rook and symplectic Renner monoids and their
// generic Hecke algebras.
//
// Subcommands:
//   table   compute one table (M, A, B, Y, Mq, Yq, Aq) and print it
//   reduce  expand T_r over the standard elements, optionally cross-checking
//           every character value at q=1 against direct evaluation
//   verify  run a named consistency suite and report machine-readable results
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "renner/decomposition.hpp"
#include "renner/errors.hpp"
#include "renner/hecke_algebra.hpp"
#include "renner/hecke_table.hpp"
#include "renner/monoid.hpp"
#include "renner/table_io.hpp"

namespace {

using namespace renner;

int reduce_size_limit(MonoidKind kind) {
  return kind == MonoidKind::Rook ? 4 : 3;
}

void check_reduce_size(MonoidKind kind, int n) {
  if (n > reduce_size_limit(kind))
    throw UnsupportedSize("reduce supports " + kind_to_string(kind) +
                          " up to n=" + std::to_string(reduce_size_limit(kind)) +
                          ", got n=" + std::to_string(n));
}

struct TableOptions {
  std::string monoid = "symplectic";
  int n = 1;
  std::string kind = "M";
  std::string format = "pretty";
  std::string cache_dir;
  bool no_cache = false;
};

int cmd_table(const TableOptions& opt) {
  const MonoidKind kind = kind_from_string(opt.monoid);
  CacheSettings cache;
  cache.enabled = !opt.no_cache;
  cache.dir = opt.cache_dir;
  std::string warning;
  const TableArtifact artifact =
      load_or_compute(kind, opt.n, opt.kind, cache, false, &warning);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";

  if (opt.format == "pretty")
    std::cout << render_pretty(artifact);
  else if (opt.format == "json")
    std::cout << to_json(artifact);
  else if (opt.format == "csv")
    std::cout << render_csv(artifact);
  else if (opt.format == "latex")
    std::cout << render_latex(artifact);
  else
    throw ParseError("unknown format '" + opt.format +
                     "' (expected pretty, json, csv or latex)");
  return 0;
}

struct ReduceOptions {
  std::string monoid = "symplectic";
  int n = 1;
  std::string element;
  bool check = false;
};

int cmd_reduce(const ReduceOptions& opt) {
  const MonoidKind kind = kind_from_string(opt.monoid);
  check_reduce_size(kind, opt.n);
  const MonoidContext& ctx = MonoidContext::get(kind, opt.n);
  const PartialPerm r = PartialPerm::parse(opt.element, ctx.degree());
  if (!ctx.contains(r))
    throw NotInMonoid(r.to_string() + " is not an element of this monoid");

  const ReductionResult coeffs = reduce_to_standard(r, ctx);
  nlohmann::ordered_json coeff_json;
  for (const MunnIndex& label : ctx.qn_order().labels) {
    auto it = coeffs.find(label);
    if (it != coeffs.end() && !it->second.is_zero())
      coeff_json[label.to_string()] = it->second.to_string();
  }
  if (!opt.check) {
    std::cout << coeff_json.dump(2) << "\n";
    return 0;
  }

  // Character-consistency report: every chi*_lambda(T_r), specialized at
  // q=1, must equal the character of the monoid element itself.
  nlohmann::ordered_json report;
  report["element"] = r.to_string();
  report["coefficients"] = coeff_json;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  bool all_ok = true;
  for (const MunnIndex& lam : ctx.qn_order().labels) {
    const QRat value = character_value_at(r, lam, ctx);
    const Rat at_one = value.specialize(Rat(1));
    const Int direct = llc_character_oracle(lam, r, ctx);
    const bool ok = at_one == Rat(direct);
    all_ok = all_ok && ok;
    nlohmann::ordered_json row;
    row["lambda"] = lam.to_string();
    row["heckeValue"] = value.to_string();
    row["atQ1"] = rat_to_string(at_one);
    row["monoidValue"] = direct.str();
    row["ok"] = ok;
    rows.push_back(std::move(row));
  }
  report["characters"] = std::move(rows);
  report["allConsistent"] = all_ok;
  std::cout << report.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

struct VerifyOptions {
  int n = 2;
  std::string suite = "solomon";
  std::string monoid;  // empty: both kinds
};

std::vector<MonoidKind> kinds_for(const VerifyOptions& opt) {
  if (opt.monoid.empty())
    return {MonoidKind::Rook, MonoidKind::Symplectic};
  return {kind_from_string(opt.monoid)};
}

void check_verify_size(const std::string& suite, MonoidKind kind, int n) {
  int limit;
  if (suite == "solomon")
    limit = kind == MonoidKind::Rook ? 6 : 4;
  else
    limit = kind == MonoidKind::Rook ? 4 : 3;
  if (n > limit)
    throw UnsupportedSize("suite " + suite + " supports " +
                          kind_to_string(kind) + " up to n=" +
                          std::to_string(limit) + ", got n=" + std::to_string(n));
}

void run_solomon(MonoidKind kind, int m, std::vector<CheckResult>& out) {
  const std::string tag = " [" + kind_to_string(kind) + " n=" + std::to_string(m) + "]";
  SolomonDecomposition dec;
  try {
    dec = monoid_table(kind, m);
  } catch (const std::runtime_error& e) {
    out.push_back({"decomposition M = AY = YB" + tag, false, e.what()});
    return;
  }
  out.push_back({"decomposition M = AY = YB" + tag,
                 dec.A * dec.Y == dec.M && dec.Y * dec.B == dec.M, ""});

  CheckResult c = verify_group_identity(kind, m);
  c.name += tag;
  out.push_back(c);
  c = verify_orthogonality(kind, m);
  c.name += tag;
  out.push_back(c);
  c = verify_restriction_multiplicities(kind, m);
  c.name += tag;
  out.push_back(c);
  if (kind == MonoidKind::Symplectic) {
    c = verify_unit_restriction(m);
    c.name += tag;
    out.push_back(c);
  }

  const MonoidContext& ctx = MonoidContext::get(kind, m);
  bool oracle_ok = true;
  std::string detail;
  for (const MunnIndex& mu : ctx.qn_order().labels) {
    const PartialPerm rep = ctx.class_representative(mu);
    for (const MunnIndex& lam : ctx.qn_order().labels) {
      const Int direct = llc_character_oracle(lam, rep, ctx);
      if (dec.M.at(mu, lam) != QRat(Rat(direct))) {
        oracle_ok = false;
        if (detail.empty())
          detail = "first mismatch at (" + mu.to_string() + ", " +
                   lam.to_string() + ")";
      }
    }
  }
  out.push_back({"M matches direct character evaluation" + tag, oracle_ok, detail});
}

void run_hecke(MonoidKind kind, int m, std::vector<CheckResult>& out) {
  const std::string tag = " [" + kind_to_string(kind) + " n=" + std::to_string(m) + "]";
  const SolomonDecomposition dec = monoid_table(kind, m);
  const HeckeTable mq = hecke_monoid_table(kind, m);
  const HeckeTable yq = assemble_Yq(kind, m);

  out.push_back({"Mq = Yq * B" + tag, mq.table == yq.table * dec.B, ""});
  out.push_back({"Yq^{-1} * Mq = B" + tag,
                 yq.table.inverse() * mq.table == dec.B, ""});
  out.push_back({"Mq at q=1 equals M" + tag,
                 mq.table.specialize(Rat(1)) == dec.M, ""});

  const MonoidContext& ctx = MonoidContext::get(kind, m);
  const MunnIndex zero_col = MunnIndex::Part(Partition());
  bool index_ok = true, degree_ok = true, tri_ok = true;
  const auto& labels = ctx.qn_order().labels;
  auto label_rank = [m](const MunnIndex& x) { return x.is_bip() ? m : x.t; };
  for (const MunnIndex& mu : labels) {
    const PartialPerm rep = ctx.class_representative(mu);
    const bool unit_row = ctx.is_unit_element(rep);
    if (unit_row &&
        mq.table.at(mu, zero_col) != QRat(QPoly::q_power(ctx.length(rep))))
      index_ok = false;
    const int bound = ctx.monoid_length(rep);
    for (const MunnIndex& lam : labels) {
      const QRat& entry = mq.table.at(mu, lam);
      if (!entry.is_zero() &&
          entry.to_polynomial("Mq entry").degree() > bound)
        degree_ok = false;
      if (label_rank(lam) > label_rank(mu) && !entry.is_zero()) tri_ok = false;
    }
  }
  out.push_back({"index column (Mq)_{mu,(0)} = q^{l(w_mu)} on unit rows" + tag,
                 index_ok, ""});
  out.push_back({"entry degrees bounded by l(r_mu)" + tag, degree_ok, ""});
  out.push_back({"rows vanish on columns of higher rank" + tag, tri_ok, ""});

  bool transition_ok = true;
  std::string transition_detail;
  try {
    transition_coefficients(kind, m);
  } catch (const std::runtime_error& e) {
    transition_ok = false;
    transition_detail = e.what();
  }
  out.push_back({"transition coefficients supported inside class blocks" + tag,
                 transition_ok, transition_detail});
}

void run_reduce(MonoidKind kind, int m, std::vector<CheckResult>& out) {
  const std::string tag = " [" + kind_to_string(kind) + " n=" + std::to_string(m) + "]";
  const MonoidContext& ctx = MonoidContext::get(kind, m);
  long failures = 0;
  long checked = 0;
  std::string detail;
  for (const PartialPerm& r : ctx.elements()) {
    for (const MunnIndex& lam : ctx.qn_order().labels) {
      ++checked;
      const Rat at_one = character_value_at(r, lam, ctx).specialize(Rat(1));
      if (at_one != Rat(llc_character_oracle(lam, r, ctx))) {
        ++failures;
        if (detail.empty())
          detail = "first mismatch at element " + r.to_string() +
                   ", character " + lam.to_string();
      }
    }
  }
  if (detail.empty())
    detail = std::to_string(checked) + " values checked";
  out.push_back({"q=1 character consistency over all elements" + tag,
                 failures == 0, detail});
}

int cmd_verify(const VerifyOptions& opt) {
  if (opt.suite != "solomon" && opt.suite != "hecke" && opt.suite != "reduce")
    throw ParseError("unknown suite '" + opt.suite +
                     "' (expected solomon, hecke or reduce)");
  std::vector<CheckResult> checks;
  for (MonoidKind kind : kinds_for(opt)) {
    check_verify_size(opt.suite, kind, opt.n);
    for (int m = 1; m <= opt.n; ++m) {
      if (opt.suite == "solomon")
        run_solomon(kind, m, checks);
      else if (opt.suite == "hecke")
        run_hecke(kind, m, checks);
      else
        run_reduce(kind, m, checks);
    }
  }
  nlohmann::ordered_json report;
  report["suite"] = opt.suite;
  report["n"] = opt.n;
  bool all_ok = true;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json row;
    row["name"] = c.name;
    row["ok"] = c.ok;
    if (!c.detail.empty()) row["detail"] = c.detail;
    rows.push_back(std::move(row));
    all_ok = all_ok && c.ok;
  }
  report["checks"] = std::move(rows);
  report["ok"] = all_ok;
  std::cout << report.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Character tables of rook and symplectic Renner monoids and their "
      "generic Hecke algebras"};
  app.require_subcommand(1);

  TableOptions topt;
  CLI::App* table = app.add_subcommand("table", "Compute and print one table");
  table->add_option("--monoid", topt.monoid, "rook or symplectic")
      ->check(CLI::IsMember({"rook", "symplectic"}));
  table->add_option("--n", topt.n, "monoid size parameter")->required();
  table->add_option("--kind", topt.kind, "M, A, B, Y, Mq, Yq or Aq")
      ->required();
  table->add_option("--format", topt.format, "pretty, json, csv or latex")
      ->check(CLI::IsMember({"pretty", "json", "csv", "latex"}));
  table->add_option("--cache-dir", topt.cache_dir, "table cache directory");
  table->add_flag("--no-cache", topt.no_cache, "bypass the table cache");

  ReduceOptions ropt;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "Expand T_r over the standard elements");
  reduce->add_option("--monoid", ropt.monoid, "rook or symplectic")
      ->check(CLI::IsMember({"rook", "symplectic"}));
  reduce->add_option("--n", ropt.n, "monoid size parameter")->required();
  reduce
      ->add_option("element", ropt.element,
                   "image array, e.g. \"0,0,2,0\" (entry i is the image of i, "
                   "0 = undefined)")
      ->required();
  reduce->add_flag("--check", ropt.check,
                   "also compare every character value at q=1 against direct "
                   "evaluation");

  VerifyOptions vopt;
  CLI::App* verify =
      app.add_subcommand("verify", "Run a consistency suite");
  verify->add_option("--n", vopt.n, "run sizes 1..n")->required();
  verify->add_option("--suite", vopt.suite, "solomon, hecke or reduce")
      ->required();
  verify->add_option("--monoid", vopt.monoid,
                     "restrict to one monoid kind (default: both)")
      ->check(CLI::IsMember({"rook", "symplectic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  }

  try {
    if (table->parsed()) return cmd_table(topt);
    if (reduce->parsed()) return cmd_reduce(ropt);
    return cmd_verify(vopt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
