#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "outstanding/exact.hpp"
#include "outstanding/geom_form.hpp"

namespace outstanding {

// Raised when a template string contains a letter outside its grammar.
class TemplateParseError : public std::invalid_argument {
public:
    TemplateParseError(const std::string& message, std::size_t position);

    // 1-based position of the offending character.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Per-position constraints for permutations: a record is required, forbidden,
// or unconstrained. Surface letters: Y, N, *.
enum class PermConstraint { record, non_record, unconstrained };

// Per-position constraints for words. Surface letters: S (strict record),
// W (weak record), * (unconstrained), s (not a strict record), o (dominated:
// some earlier letter is strictly larger).
enum class WordConstraint { strict_record, weak_record, unconstrained, not_strict_record, dominated };

class PermTemplate {
public:
    explicit PermTemplate(std::vector<PermConstraint> letters);

    // Grammar: [YN*]+
    static PermTemplate parse(std::string_view text);

    const std::vector<PermConstraint>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    std::string str() const;

private:
    std::vector<PermConstraint> letters_;
};

class WordTemplate {
public:
    explicit WordTemplate(std::vector<WordConstraint> letters);

    // Grammar: [SW*so]+
    static WordTemplate parse(std::string_view text);

    const std::vector<WordConstraint>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    std::string str() const;

private:
    std::vector<WordConstraint> letters_;
};

// Probability that a uniform permutation of n >= length(tau) letters fits the
// template: position j contributes 1/j when a record is required there and
// (1 - 1/j) when one is forbidden. The value does not depend on n.
Rational perm_template_probability(const PermTemplate& tau);

// n! times the probability, always an exact integer. Requires n >= length.
Integer perm_template_count(const PermTemplate& tau, long long n);

// Generating function whose x^k coefficient counts the words over {1..k} of
// exactly the template's length that fit the template, built by folding one
// extension operator per letter over the geometric seed series.
GeomForm word_template_gf(const WordTemplate& tau);

// Coefficient extraction from word_template_gf; a nonnegative integer.
Integer word_template_count(const WordTemplate& tau, long long alphabet_size);

// Direct predicate forms used by the exhaustive counting paths. The
// permutation template constrains a prefix; the word template applies to
// words of exactly its length.
bool matches_perm(std::span<const int> perm, const PermTemplate& tau);
bool matches_word(std::span<const int> word, const WordTemplate& tau);

}  // namespace outstanding
