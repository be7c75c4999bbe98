#pragma once

#include <string>
#include <vector>

namespace outstanding {

struct VerifyFailure {
    std::string case_name;
    std::string detail;

    bool operator==(const VerifyFailure&) const = default;
};

struct VerifySuiteResult {
    std::string suite;
    long long cases = 0;
    std::vector<VerifyFailure> failures;

    bool passed() const { return failures.empty(); }
};

// Sweep sizes for the verification suites. The oracle bounds are validated
// against the enumeration caps.
struct VerifyBounds {
    long long multiset_max_total = 8;        // N for multiset sweeps
    long long multiset_max_letters = 4;      // k for multiset sweeps
    long long words_oracle_max_length = 6;   // exhaustive word comparisons
    long long words_oracle_max_alphabet = 4;
    long long words_identity_max_length = 8;  // closed form vs recurrence
    long long words_identity_max_alphabet = 5;
    long long gauss_max_alphabet = 6;
    long long bivariate_max_alphabet = 3;
    long long bivariate_max_order = 6;
    long long perm_template_max_length = 4;
    long long perm_template_max_size = 6;    // permutations of up to this many letters
    long long word_template_max_length = 3;
    long long word_template_max_alphabet = 4;
};

// Structural identities: the cleared binomial-product identity and the
// bivariate strong-record series against the closed counts.
VerifySuiteResult verify_gauss(const VerifyBounds& bounds);

// Alternate-route equalities: the product, peeled-recurrence, and prefactored
// forms for multisets, and the three weak-record routes for words.
VerifySuiteResult verify_recurrence(const VerifyBounds& bounds);

// Closed forms against exhaustive enumeration: distributions, means, and
// template counts.
VerifySuiteResult verify_oracle(const VerifyBounds& bounds);

// Runs one of "gauss", "recurrence", "oracle", or "all"; throws
// std::invalid_argument for anything else or for bounds beyond the caps.
std::vector<VerifySuiteResult> run_verify(const std::string& suite, const VerifyBounds& bounds);

}  // namespace outstanding
