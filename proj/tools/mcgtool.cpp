// mcgtool: verify mapping-class relations, generate the positive
// factorization families, evaluate the length oracles and fibration
// invariants, and benchmark the exact tier.
//
// Exit codes: 0 success/verified, 1 verification returned false, 2 invalid
// input, 3 resource budget exceeded.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "mcg/io.hpp"

using namespace mcg;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

struct Session {
  std::unique_ptr<Registry> reg;
  std::unique_ptr<Engine> eng;

  void open(SurfaceSpec s, int zoneA = -1, size_t budget = 0) {
    reg = std::make_unique<Registry>(s, zoneA);
    eng = std::make_unique<Engine>(*reg);
    if (budget) eng->setLetterBudget(budget);
  }
};

int cmdVerify(const std::string& file, const std::string& level, size_t budget) {
  json j = readJsonFile(file);
  Session ses;
  ses.open(surfaceFromJson(j.at("surface")),
           j.contains("zoneA") ? j.at("zoneA").get<int>() : -1, budget);
  TwistWord lhs, rhs;
  if (j.contains("lhs")) {
    Relation r = relationFromJson(*ses.reg, j);
    lhs = r.lhs;
    rhs = r.rhs;
  } else {
    GeneratedFactorization f = factorizationFromJson(*ses.reg, *ses.eng, j);
    lhs = f.fact.word;
    rhs = f.target;
  }
  VerifyLevel lv = level == "homology" ? VerifyLevel::Homology : VerifyLevel::Exact;
  VerifyReport rep = verifyEqual(*ses.eng, lhs, rhs, lv);
  std::printf("homology-equal: %s\n", rep.homologyEqual ? "yes" : "no");
  if (rep.exactEqual)
    std::printf("exactly-equal:  %s\n", *rep.exactEqual ? "yes" : "no");
  else if (lv == VerifyLevel::Homology)
    std::printf("exactly-equal:  (skipped; homology tier only)\n");
  std::printf("lhs letters: %zu, rhs letters: %zu, time: %.2f ms\n", rep.lhsLetters,
              rep.rhsLetters, rep.millis);
  if (!rep.error.empty()) {
    std::fprintf(stderr, "resource: %s\n", rep.error.c_str());
    return kExitResource;
  }
  bool ok = lv == VerifyLevel::Exact ? rep.verified() : rep.homologyEqual;
  return ok ? kExitVerified : kExitFalse;
}

int cmdGenerate(const std::string& construction, int g, int n, int m, int k,
                const std::string& outFile, bool withTrace) {
  Session ses;
  GeneratedFactorization f;
  if (construction == "thm1") {
    ses.open({g, 2 * g - 4}, g - 2);
    f = genTheorem1(*ses.eng, m);
  } else if (construction == "thm2") {
    ses.open({g, n});
    f = genTheorem2(*ses.eng, m);
  } else if (construction == "thm3") {
    ses.open({g, n});
    f = genTheorem3(*ses.eng, k, m);
  } else if (construction == "chain") {
    ses.open({g, 2});
    f = genChainPencil(*ses.eng);
  } else if (construction == "elliptic") {
    ses.open({1, 1});
    f = genElliptic(*ses.eng, k);
  } else {
    std::fprintf(stderr, "unknown construction '%s'\n", construction.c_str());
    return kExitInvalid;
  }
  json out = factorizationJson(*ses.reg, f, withTrace);
  if (outFile.empty())
    std::cout << out.dump(1) << "\n";
  else
    writeJsonFile(outFile, out);
  std::printf("generated %zu letters; verified against %s\n", f.length(),
              printWord(*ses.reg, f.target).c_str());
  return kExitVerified;
}

int cmdInvariants(const std::string& file) {
  json j = readJsonFile(file);
  Session ses;
  ses.open(surfaceFromJson(j.at("surface")),
           j.contains("zoneA") ? j.at("zoneA").get<int>() : -1);
  GeneratedFactorization f = factorizationFromJson(*ses.reg, *ses.eng, j);
  if (!isBoundaryMultitwist(*ses.eng, f.target)) {
    std::fprintf(stderr, "target is not a boundary multitwist\n");
    return kExitInvalid;
  }
  if (!ses.eng->equalExact(f.fact.word, f.target)) {
    std::fprintf(stderr, "factorization does not verify against its target\n");
    return kExitFalse;
  }
  FibrationInvariants inv = fibrationInvariants(*ses.eng, f.fact, &f.target);
  std::printf("length: %zu\n", inv.length);
  std::printf("euler: %lld\n", inv.euler);
  std::printf("h1_rank: %d\n", inv.h1Rank);
  std::string tor;
  for (int64_t d : inv.h1Torsion) tor += (tor.empty() ? "" : ", ") + std::to_string(d);
  std::printf("h1_torsion: [%s]\n", tor.c_str());
  return kExitVerified;
}

int cmdOracle(int g, int n, bool hasPower, int k) {
  if (hasPower) {
    PowerOracleResult r = powerOracle(g, n, k);
    if (r.value)
      std::printf("%s\n", r.value->str().c_str());
    else
      std::printf("%s\n", r.note.c_str());
  } else {
    std::printf("%s\n", lengthOracle(g, n).str().c_str());
  }
  return kExitVerified;
}

int cmdCatalog() {
  struct Row {
    const char* name;
    const char* surface;
    const char* params;
    const char* statement;
  };
  const Row rows[] = {
      {"braid1", "Sigma_g^n", "l, i, m", "t_{c_{i-1}} (t_{c_m}..t_{c_l}) = (t_{c_m}..t_{c_l}) t_{c_i}"},
      {"braid2", "Sigma_g^n", "l, i, m", "(t_{c_l}..t_{c_m}) t_{c_{i-1}} = t_{c_i} (t_{c_l}..t_{c_m})"},
      {"chain", "Sigma_g^n", "h (+oneBoundary)", "t_{b1} t_{b2} = (t_{c1}..t_{c_{2h+1}})^{2h+2}"},
      {"daisy", "Sigma_0^{p+2}", "p", "t_{d0}^{p-1} t_{d1}..t_{d_{p+1}} = t_{x1}..t_{x_{p+1}}"},
      {"bkm", "Sigma_2^2", "m", "C_m = T_{10m}"},
      {"dkp", "Sigma_2^2", "m", "t_d1 t_d2 t_{c4} = D_9 phi_{12,m} T_{10m}"},
      {"eq_a", "Sigma_g^2", "k", "prod t_{c_{i+3}}..t_{c_i} = (..)^{2g-1-k} t_{d_{k+3}}..t_{d_{2g+1}}"},
      {"eq_b", "Sigma_g^2", "k", "descending product with e_j letters"},
      {"eq_c", "Sigma_g^2 (g>=4)", "", "prod = t_{f9} t_{f8} t_{f7} t_{f6} (t_{c1}..t_{c5})^4"},
      {"lem1", "Sigma_g^2 (g>=4)", "", "(c1..c_{2g+1})^4 = H3^4 Hbar3^{2g-8} K4 H5^4 I"},
      {"lem2", "Sigma_g^2 (g>=4)", "", "(c1..c_{2g+1})^{2g-2} = J L16 H3^{2g-6} t_d' t_e'"},
      {"prop1", "Sigma_g^2 (g>=4)", "", "t_d1 t_d2 = K4 H5^4 I J L16 H^2 t_d^{g-3} t_d' t_e^{g-3} t_e'"},
      {"long1", "Sigma_g^2 (g>=4)", "m", "L16 H5^4 = phi_{12,m} T_{10m} M_9 t_{c5} t_{c3} t_{c4} t_{c2} t_{c3}"},
      {"eq_H", "Sigma_2^2", "m, n", "T_{10m} = O t_{c1}^2 t_d^{n-2} t_e^{n-2}"},
      {"eq_g2", "Sigma_2^n", "m, n", "t_{d1}..t_{dn} t_{c4} = D_8 phi' O' t_{c1}^2 t_e^{n-2} t_{x1}..t_{x_{n-1}}"},
      {"eq_r3", "Sigma_g^2 (g>=3)", "m, n", "t_d1 t_d2 = D_9 phi O t_{c1}^2 t_e^{n-2} P' t_d^{n-2}"},
      {"eq_r4", "Sigma_g^n (g>=3)", "m, n", "t_{d1}..t_{dn} t_d' = D_9 phi O t_{c1}^2 t_e^{n-2} P' t_{x1}..t_{x_{n-1}}"},
  };
  for (const Row& r : rows)
    std::printf("%-8s %-22s %-18s %s\n", r.name, r.surface, r.params, r.statement);
  return kExitVerified;
}

int cmdBench(const std::string& family, int maxM, const std::string& level) {
  bool exact = level != "homology";
  std::printf("family,param,tier,letters,milliseconds\n");
  for (int m = 1; m <= maxM; ++m) {
    Session ses;
    TwistWord lhs, rhs;
    if (family == "T10m") {
      ses.open({2, 2});
      Relation r = RelationCatalog::instantiate(*ses.eng, "bkm", {{"m", m}});
      lhs = r.lhs;
      rhs = r.rhs;
    } else if (family == "thm1") {
      int g = 4;
      ses.open({g, 2 * g - 4}, g - 2);
      GeneratedFactorization f = genTheorem1(*ses.eng, m);
      lhs = f.fact.word;
      rhs = f.target;
    } else if (family == "thm2") {
      ses.open({2, 2});
      if (m <= 2) continue;
      GeneratedFactorization f = genTheorem2(*ses.eng, m);
      lhs = f.fact.word;
      rhs = f.target;
    } else {
      std::fprintf(stderr, "unknown family '%s'\n", family.c_str());
      return kExitInvalid;
    }
    VerifyReport rep =
        verifyEqual(*ses.eng, lhs, rhs, exact ? VerifyLevel::Exact : VerifyLevel::Homology);
    if (!rep.error.empty()) return kExitResource;
    bool ok = exact ? rep.verified() : rep.homologyEqual;
    if (!ok) return kExitFalse;
    std::printf("%s,%d,%s,%zu,%.3f\n", family.c_str(), m, exact ? "exact" : "homology",
                rep.lhsLetters + rep.rhsLetters, rep.millis);
  }
  return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mapping-class relations, factorizations and length oracles"};
  app.require_subcommand(1);
  size_t budget = 0;

  auto* verify = app.add_subcommand("verify", "verify a relation or factorization file");
  std::string vFile, vLevel = "exact";
  verify->add_option("--file", vFile)->required();
  verify->add_option("--level", vLevel)->check(CLI::IsMember({"exact", "homology"}));
  verify->add_option("--letter-budget", budget);

  auto* gen = app.add_subcommand("generate", "generate a positive factorization family");
  std::string gCons, gOut;
  int gG = 2, gN = 2, gM = 1, gK = 2;
  bool gTrace = false;
  gen->add_option("--construction", gCons)
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "chain", "elliptic"}));
  gen->add_option("--g", gG);
  gen->add_option("--n", gN);
  gen->add_option("--m", gM);
  gen->add_option("--k", gK);
  gen->add_option("--out", gOut);
  gen->add_flag("--trace", gTrace);

  auto* invs = app.add_subcommand("invariants", "fibration invariants of a factorization file");
  std::string iFile;
  invs->add_option("--file", iFile)->required();

  auto* oracle = app.add_subcommand("oracle", "length oracle L(Delta) / L(Delta^k)");
  int oG = 1, oN = 1, oK = 0;
  bool oHasK = false;
  oracle->add_option("--g", oG)->required();
  oracle->add_option("--n", oN)->required();
  auto* kOpt = oracle->add_option("--power", oK);
  (void)kOpt;

  auto* cat = app.add_subcommand("catalog", "list the relation catalog");

  auto* bench = app.add_subcommand("bench", "benchmark exact verification, CSV to stdout");
  std::string bFamily = "T10m", bLevel = "exact";
  int bMaxM = 5;
  bench->add_option("--family", bFamily)->check(CLI::IsMember({"T10m", "thm1", "thm2"}));
  bench->add_option("--max-m", bMaxM);
  bench->add_option("--level", bLevel)->check(CLI::IsMember({"exact", "homology"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmdVerify(vFile, vLevel, budget);
    if (gen->parsed()) return cmdGenerate(gCons, gG, gN, gM, gK, gOut, gTrace);
    if (invs->parsed()) return cmdInvariants(iFile);
    if (oracle->parsed()) return cmdOracle(oG, oN, oracle->count("--power") > 0, oK);
    if (cat->parsed()) return cmdCatalog();
    if (bench->parsed()) return cmdBench(bFamily, bMaxM, bLevel);
  } catch (const ResourceExhausted& e) {
    std::fprintf(stderr, "resource: %s\n", e.what());
    return kExitResource;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}
