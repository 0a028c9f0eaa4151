#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinten/altmod.hpp"
#include "spinten/crystal.hpp"
#include "spinten/spin_chars.hpp"

namespace spinten {

inline constexpr const char* kVersion = "1.0.0";

struct VerifyOptions {
    uint64_t seed = 1;
    int threads = 1;
    std::string cache_dir;  // empty: no caching
    bool force = false;     // lift resource guards
};

struct CaseResult {
    nlohmann::json input, expected, got;
    bool pass = false;
    std::string certificate;
};

struct Report {
    std::string suite;
    std::string version = kVersion;
    uint64_t seed = 1;
    std::vector<CaseResult> cases;
    long long elapsed_ms = 0;  // real timing; reported only in the TSV

    bool all_pass() const;
    /// Deterministic document: elapsed_ms is emitted as null so reruns with
    /// the same seed are byte-identical.
    nlohmann::json to_json() const;
    std::string json_text() const;  // 2-space indent, trailing newline
    std::string tsv() const;        // summary table, includes real timing
};

/// Labelled irreducibles of Sym(n), loaded from / saved to the cache
/// directory when one is configured.
std::vector<Rep> irreducibles_cached(int n, const VerifyOptions& opt);

/// Tensor products of a basic spin constituent with every dim>1
/// Alt(n)-irreducible, n = 5..max_n; the unique irreducible product must be
/// the n = 5 exception.
Report verify_mt(int max_n, const VerifyOptions& opt);

/// All unordered dim>1 pairs, n = 5..max_n, against the classification
/// prediction computed from the crystal/splitting predicates.
Report verify_scan(int max_n, const VerifyOptions& opt);

/// Meataxe splitting of D^lambda restricted to Alt(n) vs the arithmetic
/// splitting criterion, n = 2..max_n.
Report verify_benson(int max_n, const VerifyOptions& opt);

/// Restriction to Sym(n-1): endomorphism dimension = sum of normal-node
/// counts, and per-residue factor multiplicities, n = 2..max_n.
Report verify_branching(int max_n, const VerifyOptions& opt);

/// Composition factors and direct-sum certificates of the permutation
/// modules M_1, M_2, M_{1,1} for the given odd n.
Report verify_perm(const std::vector<int>& ns, const VerifyOptions& opt);

/// Character suites: parity predicates, degree/magnitude oracles, parity
/// and divisibility agreement of the signed values, n up to max_n.
Report verify_spinchar(int max_n, const VerifyOptions& opt);

/// Candidate shapes surviving the character-level filters at n.
Report filter_report(int n, const VerifyOptions& opt);

}  // namespace spinten
