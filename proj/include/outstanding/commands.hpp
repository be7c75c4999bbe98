#pragma once

#include <optional>
#include <string>

#include "outstanding/output.hpp"
#include "outstanding/verify.hpp"

namespace outstanding {

// Command layer backing the CLI subcommands. Every function validates its
// inputs, computes exactly, and returns a serializable record; bad requests
// raise std::invalid_argument with a usable message.

// stat: "strong" | "weak" (ignored for want gap/darroch); want: "gf" |
// "mean" | "gap" | "darroch"; multiplicities: comma-separated positives.
OutputRecord cmd_multiset(const std::string& stat, const std::string& multiplicities,
                          const std::string& want);

// want: "gf" | "mean".
OutputRecord cmd_words(const std::string& stat, long long length, long long alphabet_size,
                       const std::string& want);

// kind: "perm" (want "prob", or "count" with size = permutation length) or
// "word" (want "count" with size = alphabet size, or "gf").
OutputRecord cmd_template(const std::string& kind, const std::string& tau,
                          std::optional<long long> size, const std::string& want);

// Brute-force counterparts, for diffing against the closed forms.
OutputRecord cmd_oracle_multiset(const std::string& stat, const std::string& multiplicities,
                                 std::optional<long long> cap);
OutputRecord cmd_oracle_words(const std::string& stat, long long length, long long alphabet_size,
                              std::optional<long long> cap);
OutputRecord cmd_oracle_perm_template(const std::string& tau, long long n,
                                      std::optional<long long> cap);
OutputRecord cmd_oracle_word_template(const std::string& tau, long long alphabet_size,
                                      std::optional<long long> cap);

// suite: "gauss" | "recurrence" | "oracle" | "all". A cap, when given,
// lowers or raises the enumerated object sizes (within the hard caps).
OutputRecord cmd_verify(const std::string& suite, std::optional<long long> cap);

}  // namespace outstanding
