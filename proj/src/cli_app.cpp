#include "maxcontract/cli_app.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxcontract/builders.hpp"
#include "maxcontract/classify.hpp"
#include "maxcontract/json_io.hpp"
#include "maxcontract/schemes.hpp"

#include <json.hpp>

namespace maxcontract {

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kUsage = 2;

Rational parse_rational_arg(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string(flag) + ": " + e.what());
  }
}

/// Writes the algebra JSON to `outPath` or stdout when the path is empty.
void emit_algebra(const SuperAlgebra& alg, const std::string& outPath) {
  if (outPath.empty())
    std::cout << to_json(alg);
  else
    save_json(alg, outPath);
}

std::string group_label(const SuperchargeGroup& g) {
  std::string s = family_name(g.family);
  s += "(";
  for (int v : g.prefix) s += std::to_string(v) + ",";
  s += "*)";
  return s;
}

const char* group_kind_name(SuperchargeGroup::Kind k) {
  switch (k) {
    case SuperchargeGroup::Kind::Standard: return "standard";
    case SuperchargeGroup::Kind::Exotic: return "exotic";
    case SuperchargeGroup::Kind::Inert: return "inert";
    case SuperchargeGroup::Kind::Silent: return "silent";
  }
  return "?";
}

void print_report_summary(std::ostream& os, const ContractionReport& rep) {
  os << "scheme: " << scheme_kind_name(rep.kind) << " (N=" << rep.params.N
     << ", k=" << rep.params.k << ")\n";
  os << "dimension: " << rep.limit.dim() << "\n";
  os << "supercharge tally: standard=" << rep.tally.standard
     << " exotic=" << rep.tally.exotic << " inert=" << rep.tally.inert
     << "\n";
  os << "towers:\n";
  for (const auto& g : rep.tally.groups)
    os << "  " << group_label(g) << ": " << group_kind_name(g.kind) << " x"
       << g.units << "\n";
  os << "internal symmetry: ";
  if (rep.internal.nonAbelian.empty()) {
    os << "non-Abelian blocks: none";
  } else {
    os << "non-Abelian blocks:";
    for (const auto& b : rep.internal.nonAbelian)
      os << " " << family_name(b.family) << "(dim " << b.dimension << ")";
  }
  os << "; abelian=" << rep.internal.abelianCount
     << "; central=" << rep.internal.centralCount << "\n";
  for (const auto& p : rep.internal.problems)
    os << "  internal problem: " << p << "\n";
}

int cmd_build(const std::string& family, int k, int r, bool fiveD,
              bool withChiralBC, bool withCentralB, const std::string& out) {
  SuperAlgebra alg;
  if (family == "maxwell") {
    alg = maxwell_algebra();
  } else if (family == "maxwell-n1") {
    alg = maxwell_superalgebra_n1({withChiralBC, withCentralB});
  } else if (family == "osp-k4") {
    alg = osp_k_4(k, !fiveD);
  } else if (family == "osp-r2C") {
    alg = osp_r_2C(r);
  } else if (family == "osp-r2C-real") {
    alg = osp_r_2C_real(r);
  } else if (family == "osp-r2C-doubled") {
    alg = osp_r_2C_real_via_doubling(r);
  } else if (family == "lorentz") {
    alg = lorentz_o31();
  } else {
    std::cerr << "unknown --family \"" << family
              << "\" (expected one of: maxwell, maxwell-n1, osp-k4, "
                 "osp-r2C, osp-r2C-real, osp-r2C-doubled, lorentz)\n";
    return kUsage;
  }
  emit_algebra(alg, out);
  return kOk;
}

int cmd_contract(const ContractionParams& p, bool finiteR,
                 const std::string& out) {
  ContractionReport rep = run_contraction(p);
  print_report_summary(std::cerr, rep);
  emit_algebra(finiteR ? rep.finiteR : rep.limit, out);
  return kOk;
}

int cmd_jacobi(const std::string& path) {
  SuperAlgebra alg = load_json(path);
  std::vector<JacobiViolation> bad = super_jacobi_residual(alg);
  if (bad.empty()) {
    std::cout << "jacobi: clean (" << alg.name << ", dim " << alg.dim()
              << ")\n";
    return kOk;
  }
  for (const auto& v : bad)
    std::cout << "jacobi violation (" << alg.gen(v.a).str() << ", "
              << alg.gen(v.b).str() << ", " << alg.gen(v.c).str()
              << "): residual " << alg.lc_str(v.residual) << "\n";
  std::cout << "jacobi: " << bad.size() << " violating triple(s)\n";
  return kFindings;
}

int cmd_verify(const std::string& path, const std::string& reportPath) {
  SuperAlgebra alg = load_json(path);
  nlohmann::json report;
  report["schema"] = 1;
  report["name"] = alg.name;
  report["dimension"] = alg.dim();

  std::vector<JacobiViolation> jac = super_jacobi_residual(alg);
  nlohmann::json jj = nlohmann::json::array();
  for (const auto& v : jac)
    jj.push_back(nlohmann::json{{"a", alg.gen(v.a).str()},
                                {"b", alg.gen(v.b).str()},
                                {"c", alg.gen(v.c).str()},
                                {"residual", alg.lc_str(v.residual)}});
  report["jacobi"] = std::move(jj);

  std::vector<std::string> dims = dimension_check(alg);
  report["dimension_check"] = dims;

  bool classified = false;
  std::vector<std::string> internalProblems;
  try {
    SuperchargeTally tally = classify_supercharges(alg);
    InternalSummary internal = internal_symmetry_report(alg);
    classified = true;
    internalProblems = internal.problems;
    nlohmann::json cls;
    cls["standard"] = tally.standard;
    cls["exotic"] = tally.exotic;
    cls["inert"] = tally.inert;
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : tally.groups)
      groups.push_back(nlohmann::json{{"tower", group_label(g)},
                                      {"kind", group_kind_name(g.kind)},
                                      {"units", g.units}});
    cls["towers"] = std::move(groups);
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : internal.nonAbelian)
      blocks.push_back(nlohmann::json{{"family", family_name(b.family)},
                                      {"dimension", b.dimension}});
    cls["non_abelian_blocks"] = std::move(blocks);
    cls["abelian"] = internal.abelianCount;
    cls["central"] = internal.centralCount;
    cls["problems"] = internal.problems;
    report["classification"] = std::move(cls);
  } catch (const MissingMaxwellSector&) {
    report["classification"] = nullptr;
  }

  const bool ok = jac.empty() && dims.empty() && internalProblems.empty();
  report["ok"] = ok;

  std::cout << "verify " << alg.name << " (dim " << alg.dim() << ")\n";
  std::cout << "  jacobi violations: " << jac.size() << "\n";
  for (const auto& v : jac)
    std::cout << "    (" << alg.gen(v.a).str() << ", " << alg.gen(v.b).str()
              << ", " << alg.gen(v.c).str() << "): "
              << alg.lc_str(v.residual) << "\n";
  std::cout << "  mass-dimension findings: " << dims.size() << "\n";
  for (const auto& d : dims) std::cout << "    " << d << "\n";
  if (classified) {
    std::cout << "  classification problems: " << internalProblems.size()
              << "\n";
    for (const auto& p : internalProblems) std::cout << "    " << p << "\n";
  } else {
    std::cout << "  classification: skipped (no Maxwell bosonic sector)\n";
  }
  std::cout << (ok ? "verify: OK\n" : "verify: FAILED\n");

  if (!reportPath.empty()) {
    std::ofstream f(reportPath, std::ios::binary);
    if (!f)
      throw std::runtime_error("cannot open " + reportPath + " for writing");
    f << report.dump(2) << "\n";
  }
  return ok ? kOk : kFindings;
}

int cmd_diff(const std::string& pathA, const std::string& pathB,
             bool strict) {
  SuperAlgebra a = load_json(pathA);
  SuperAlgebra b = load_json(pathB);

  using NameKey = std::pair<Family, std::vector<int>>;
  auto name_map = [](const SuperAlgebra& alg) {
    std::map<NameKey, int> m;
    for (int t = 0; t < alg.dim(); ++t)
      m[{alg.gen(t).family, alg.gen(t).indices}] = t;
    return m;
  };
  std::map<NameKey, int> namesA = name_map(a), namesB = name_map(b);

  std::vector<int> keepA, keepB, onlyA, onlyB;
  for (int t = 0; t < a.dim(); ++t)
    (namesB.count({a.gen(t).family, a.gen(t).indices}) ? keepA : onlyA)
        .push_back(t);
  for (int t = 0; t < b.dim(); ++t)
    (namesA.count({b.gen(t).family, b.gen(t).indices}) ? keepB : onlyB)
        .push_back(t);

  int findings = 0;
  auto report_unmatched = [&](const SuperAlgebra& alg,
                              const std::vector<int>& only,
                              const std::string& path) {
    if (only.empty()) return;
    const bool decoupled = decoupled_central(alg, only);
    std::string names;
    for (int t : only) names += (names.empty() ? "" : ", ") + alg.gen(t).str();
    if (decoupled && !strict) {
      std::cout << "note: only in " << path << ": " << names
                << " (decoupled central; tolerated)\n";
    } else {
      std::cout << "difference: only in " << path << ": " << names
                << (decoupled ? " (decoupled central; strict mode)"
                              : " (structurally coupled)")
                << "\n";
      ++findings;
    }
  };
  report_unmatched(a, onlyA, pathA);
  report_unmatched(b, onlyB, pathB);

  try {
    SuperAlgebra ra = restrict_to(a, keepA);
    SuperAlgebra rb = restrict_to(b, keepB);
    CompareReport rep = compare(ra, rb, match_by_name(ra, rb));
    for (const auto& d : rep.diffs) {
      std::cout << "difference: " << d.text << "\n";
      ++findings;
    }
  } catch (const NotClosed& e) {
    std::cout << "difference: common generators do not close: " << e.what()
              << "\n";
    ++findings;
  }

  if (findings == 0) {
    std::cout << "diff: algebras agree\n";
    return kOk;
  }
  std::cout << "diff: " << findings << " difference(s)\n";
  return kFindings;
}

int cmd_dump_gamma() {
  const CliffordData& cd = clifford();
  auto dump = [](const std::string& label, const SpinorMatrix& m) {
    std::cout << label << ":\n" << m.str();
  };
  for (int mu = 0; mu < 4; ++mu)
    dump("gamma(" + std::to_string(mu) + ")", cd.gamma[mu]);
  dump("gamma5", cd.gamma5);
  dump("C", cd.C);
  for (int mu = 0; mu < 5; ++mu)
    dump("gammaAdS(" + std::to_string(mu) + ")", cd.gammaAdS[mu]);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      dump("pair(" + std::to_string(mu) + "," + std::to_string(nu) + ")",
           cd.pair[mu][nu]);
  for (int mu = 0; mu < 5; ++mu)
    for (int nu = mu + 1; nu < 5; ++nu)
      dump("adsPair(" + std::to_string(mu) + "," + std::to_string(nu) + ")",
           cd.adsPair[mu][nu]);
  dump("Pplus", cd.Pplus);
  dump("Pminus", cd.Pminus);
  for (int m = 0; m < 3; ++m)
    dump("gammaProj(" + std::to_string(m) + ")", cd.gammaProj[m]);
  for (int s = 0; s < 2; ++s) {
    std::cout << "pPlus(" << s << "): [";
    for (int c = 0; c < 4; ++c)
      std::cout << (c ? ", " : "") << cd.pPlus[s][c].str();
    std::cout << "]\n";
  }
  return kOk;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Exact contraction engine for orthosymplectic superalgebras:\n"
      "builds the inputs, applies the R-dependent basis schemes, takes the\n"
      "large-R limit, and verifies/classifies the results."};
  app.require_subcommand(1);

  // --- build ---
  auto* build = app.add_subcommand("build", "construct a named algebra");
  std::string buildFamily;
  int buildK = 1, buildR = 1;
  bool fiveD = false, withChiralBC = false, withCentralB = false;
  std::string buildOut;
  build->add_option("--family", buildFamily, "which algebra to construct")
      ->required();
  build->add_option("--k", buildK, "internal label count (osp-k4)");
  build->add_option("--r", buildR, "internal label count (osp-r2C family)");
  build->add_flag("--five-d", fiveD,
                  "keep osp-k4 in its five-dimensional form");
  build->add_flag("--with-chiral-bc", withChiralBC,
                  "maxwell-n1: include the chiral internal charge");
  build->add_flag("--with-central-b", withCentralB,
                  "maxwell-n1: include the central charge");
  build->add_option("--out", buildOut, "output JSON path (default stdout)");

  // --- contract ---
  auto* contract = app.add_subcommand(
      "contract", "rescale a direct-sum input and take the large-R limit");
  int cN = 1, cK = 2;
  std::string cAlpha = "1", cGamma = "1", cC0 = "2", cC5 = "2",
              cAlphaPrime = "0", cScheme = "auto", contractOut;
  bool finiteR = false;
  contract->add_option("--N", cN, "number of supercharge labels")->required();
  contract->add_option("--k", cK, "compact split parameter in [0, 2N]")
      ->required();
  contract->add_option("--alpha", cAlpha,
                       "tensor-charge admixture (rational)");
  contract->add_option("--gamma", cGamma,
                       "chiral charge suppression exponent in [0,2]");
  contract->add_option("--c0", cC0,
                       "scalar charge suppression exponent in [0,2]");
  contract->add_option("--c5", cC5,
                       "pseudoscalar charge suppression exponent in [0,2]");
  contract->add_option("--alpha-prime", cAlphaPrime,
                       "diagonal internal admixture (rational)");
  contract->add_option("--scheme", cScheme,
                       "auto|n1k2|n1k1|k0|case-a|case-b");
  contract->add_flag("--finite-R,--finite-r", finiteR,
                     "emit the R-dependent algebra instead of the limit");
  contract->add_option("--out", contractOut,
                       "output JSON path (default stdout)");

  // --- verify ---
  auto* verify = app.add_subcommand(
      "verify", "run Jacobi, mass-dimension, and classification checks");
  std::string verifyPath, verifyReport;
  verify->add_option("file", verifyPath, "algebra JSON")->required();
  verify->add_option("--report", verifyReport, "write a JSON report here");

  // --- jacobi ---
  auto* jacobi =
      app.add_subcommand("jacobi", "list graded Jacobi violations");
  std::string jacobiPath;
  jacobi->add_option("file", jacobiPath, "algebra JSON")->required();

  // --- diff ---
  auto* diff = app.add_subcommand(
      "diff", "compare two algebra files generator-by-generator");
  std::string diffA, diffB;
  bool strict = false;
  diff->add_option("a", diffA, "left algebra JSON")->required();
  diff->add_option("b", diffB, "right algebra JSON")->required();
  diff->add_flag("--strict", strict,
                 "fail on generators present on one side only, even when "
                 "decoupled and central");

  // --- dump-gamma ---
  app.add_subcommand("dump-gamma",
                     "print the frozen spinor-space matrix tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  try {
    if (build->parsed())
      return cmd_build(buildFamily, buildK, buildR, fiveD, withChiralBC,
                       withCentralB, buildOut);
    if (contract->parsed()) {
      ContractionParams p;
      p.N = cN;
      p.k = cK;
      p.alpha = parse_rational_arg(cAlpha, "--alpha");
      p.gammaExp = parse_rational_arg(cGamma, "--gamma");
      p.c0 = parse_rational_arg(cC0, "--c0");
      p.c5 = parse_rational_arg(cC5, "--c5");
      p.alphaPrime = parse_rational_arg(cAlphaPrime, "--alpha-prime");
      if (cScheme == "auto")
        p.kind = SchemeKind::Auto;
      else if (cScheme == "n1k2")
        p.kind = SchemeKind::N1K2;
      else if (cScheme == "n1k1")
        p.kind = SchemeKind::N1K1;
      else if (cScheme == "k0")
        p.kind = SchemeKind::K0;
      else if (cScheme == "case-a")
        p.kind = SchemeKind::CaseA;
      else if (cScheme == "case-b")
        p.kind = SchemeKind::CaseB;
      else {
        std::cerr << "unknown --scheme \"" << cScheme << "\"\n";
        return kUsage;
      }
      return cmd_contract(p, finiteR, contractOut);
    }
    if (verify->parsed()) return cmd_verify(verifyPath, verifyReport);
    if (jacobi->parsed()) return cmd_jacobi(jacobiPath);
    if (diff->parsed()) return cmd_diff(diffA, diffB, strict);
    return cmd_dump_gamma();
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const BadParams& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kUsage;
  } catch (const DivergentBracket& e) {
    std::cerr << "contraction failed: " << e.what() << "\n";
    return kFindings;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}

} // namespace maxcontract
