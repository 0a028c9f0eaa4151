#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinten/partition.hpp"

namespace spinten {

struct weight_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct bad_family : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct case_shape_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One step of a bar path.
struct BarStep {
    enum Kind { NewPart, TwoParts, GrowPart } kind;
    int x = 0, y = 0;  // TwoParts: the two new parts (x > y); GrowPart: x = grown part index (1-based in the previous partition), y = new value
};

/// A path (): lambda^0, ..., lambda^k built from the parts of an odd class
/// alpha, every stage 2-regular; a = number of non-NewPart steps.
struct BarPath {
    std::vector<Partition> chain;  // chain[0] = (), chain[k] = lambda
    std::vector<BarStep> steps;
    int a = 0;
};

/// Complete enumeration of the bar paths from () to lambda along alpha.
std::vector<BarPath> enumerate_paths(const Partition& lambda, const Partition& alpha);

/// Parity of the path-sum character value: (# paths with a(P) <= 1) mod 2.
/// Sign-independent since terms with a >= 2 are even.
int zeta_parity(const Partition& lambda, const Partition& alpha);

/// min over paths of floor(a(P)/2); empty optional when no path exists.
/// Lower bound on the 2-adic valuation of the character value.
std::optional<int> zeta_valuation_lb(const Partition& lambda, const Partition& alpha);

/// Signed character value of the reduced spin module on the odd class alpha
/// (strict tier; computed from the Q-function expansion in the power-sum
/// basis and validated against degree/magnitude/parity oracles in tests).
long long spin_char(const Partition& lambda, const Partition& alpha);

/// Spin degree product formula: independent oracle for spin_char(lambda,(1^n)).
long long spin_degree_formula(const Partition& lambda);

/// Divisibility predicates for odd-class character values.
/// (i)  lambda with odd distinct parts: value odd iff alpha == lambda.
bool pred_odd_value_i(const Partition& lambda, const Partition& alpha);
/// (ii) label p(lambda, 2c), lambda odd-distinct, c odd (only all-odd class
///      shapes are implemented): value odd iff alpha = p(lambda-hat_j,
///      lambda_j + 2c) for some j, or alpha = p(lambda, 2c-e, e) with
///      e <= c odd where for e < c neither e nor 2c-e is a part of lambda
///      (such collisions make the surviving bar paths cancel in pairs).
bool pred_odd_value_ii(const Partition& lambda, int c, const Partition& alpha);
/// (iii) label (2c,2d), c > d >= 1 odd: value always even; this predicate
///      gives the "not divisible by 4" characterization.
bool pred_not_div4_iii(int c, int d, const Partition& alpha);

struct BasicSpinTables {
    int n = 0;
    // |psi^{beta_n}_alpha| = 2^{floor((h(alpha)-1)/2)} for alpha in odd classes.
    std::map<Partition, long long> magnitudes;
    // For n != 2 mod 4: odd-distinct classes where the two A_n constituents
    // of the basic spin character differ.
    std::vector<Partition> difference_classes;
};

BasicSpinTables basic_spin_tables(int n);

/// 2^{floor(h2(lambda)/2)}: multiplicity of the principal factor D^{dblb^R}
/// in the reduced spin module.
long long spin_principal_multiplicity(const Partition& lambda);

/// Character-level candidate shapes for an irreducible product of an
/// A_n-irreducible with a basic spin constituent.
struct CandidateFilters {
    int n = 0;
    bool empty = false;         // n = 2 mod 4: no candidates at all
    int max_h_lambda = 0;       // bound on h(lambda) for the split factor
    std::vector<Partition> nu_candidates;  // admissible product labels
    std::string rationale;
};

CandidateFilters candidate_filters(int n);

}  // namespace spinten
