// Acceptance harness: one pass/fail line per criterion, exit 0 iff all pass.
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>

#include "spinten/verify.hpp"

using namespace spinten;

namespace {

int failures = 0;

void criterion(int number, const std::string& text,
               const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("[%s] criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number,
                text.c_str(), note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

VerifyOptions opts() {
    VerifyOptions o;
    o.seed = 1;
    o.threads = 4;
    return o;
}

}  // namespace

int main() {
    criterion(1,
              "tensor endpoint: unique irreducible basic-spin product over "
              "n = 5..9 is the n = 5 pair with product (4,1)",
              [] {
                  Report rep = verify_mt(9, opts());
                  if (!rep.all_pass()) return false;
                  // The exceptional case must be present and irreducible.
                  int exceptional = 0;
                  for (auto& c : rep.cases) {
                      std::string in = c.input.dump();
                      bool pair = in.find("(3,2)+") != std::string::npos &&
                                  in.find("(3,2)-") != std::string::npos;
                      if (pair &&
                          c.got.dump().find("(4,1)") != std::string::npos)
                          ++exceptional;
                  }
                  return exceptional == 1;
              });

    criterion(2,
              "full-pair scan at n = 5..7 matches the crystal-predicate "
              "prediction (one pair at n = 5, none at 6, 7)",
              [] { return verify_scan(7, opts()).all_pass(); });

    criterion(3,
              "meataxe splitting on restriction to Alt(n) agrees with the "
              "arithmetic splitting criterion for all labels, n = 2..9",
              [] { return verify_benson(9, opts()).all_pass(); });

    criterion(4,
              "restriction to Sym(n-1): endomorphism dimension equals the "
              "normal-node count and factor multiplicities match, n <= 8",
              [] { return verify_branching(8, opts()).all_pass(); });

    criterion(5,
              "basic spin: dim = 2^floor((n-1)/2) and the restriction is "
              "(1 + [n odd]) copies of the next basic spin, n <= 9",
              [] {
                  for (int n = 2; n <= 9; ++n) {
                      long long expect = 1;
                      for (int k = 0; k < (n - 1) / 2; ++k) expect *= 2;
                      Rep d = irreducible_head(beta_n(n));
                      if (d.degree != expect) return false;
                      if (n == 2) continue;  // Sym(1) below has no structure
                      BranchingData b = branching_data(beta_n(n), 1);
                      size_t mult = (n % 2 == 1) ? 2 : 1;
                      if (b.all.size() != mult) return false;
                      for (auto& label : b.all)
                          if (label.lambda != beta_n(n - 1)) return false;
                  }
                  return true;
              });

    criterion(6,
              "spin character suites (parity predicates, degree, magnitude, "
              "signed/parity agreement) pass for n <= 12",
              [] { return verify_spinchar(12, opts()).all_pass(); });

    criterion(7,
              "permutation modules at n = 5, 7, 9 reproduce the expected "
              "factor multisets and the certified direct sum",
              [] { return verify_perm({5, 7, 9}, opts()).all_pass(); });

    criterion(8,
              "re-running a suite with the same seed yields byte-identical "
              "JSON",
              [] {
                  VerifyOptions o = opts();
                  if (verify_benson(6, o).json_text() !=
                      verify_benson(6, o).json_text())
                      return false;
                  if (verify_mt(5, o).json_text() !=
                      verify_mt(5, o).json_text())
                      return false;
                  if (verify_spinchar(9, o).json_text() !=
                      verify_spinchar(9, o).json_text())
                      return false;
                  VerifyOptions single = o;
                  single.threads = 1;
                  return verify_perm({5}, o).json_text() ==
                         verify_perm({5}, single).json_text();
              });

    return failures == 0 ? 0 : 1;
}
