#include "outstanding/templates.hpp"

#include <algorithm>

namespace outstanding {

namespace {

std::string parse_error_message(char letter, std::size_t position, const char* grammar) {
    std::string message = "invalid template letter '";
    message += letter;
    message += "' at position ";
    message += std::to_string(position);
    message += " (expected one of ";
    message += grammar;
    message += ")";
    return message;
}

}  // namespace

TemplateParseError::TemplateParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message), position_(position) {}

PermTemplate::PermTemplate(std::vector<PermConstraint> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("PermTemplate: template must be nonempty");
    }
}

PermTemplate PermTemplate::parse(std::string_view text) {
    std::vector<PermConstraint> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'Y': letters.push_back(PermConstraint::record); break;
            case 'N': letters.push_back(PermConstraint::non_record); break;
            case '*': letters.push_back(PermConstraint::unconstrained); break;
            default:
                throw TemplateParseError(parse_error_message(text[i], i + 1, "Y N *"), i + 1);
        }
    }
    return PermTemplate(std::move(letters));
}

std::string PermTemplate::str() const {
    std::string text;
    for (PermConstraint c : letters_) {
        switch (c) {
            case PermConstraint::record: text += 'Y'; break;
            case PermConstraint::non_record: text += 'N'; break;
            case PermConstraint::unconstrained: text += '*'; break;
        }
    }
    return text;
}

WordTemplate::WordTemplate(std::vector<WordConstraint> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("WordTemplate: template must be nonempty");
    }
}

WordTemplate WordTemplate::parse(std::string_view text) {
    std::vector<WordConstraint> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'S': letters.push_back(WordConstraint::strict_record); break;
            case 'W': letters.push_back(WordConstraint::weak_record); break;
            case '*': letters.push_back(WordConstraint::unconstrained); break;
            case 's': letters.push_back(WordConstraint::not_strict_record); break;
            case 'o': letters.push_back(WordConstraint::dominated); break;
            default:
                throw TemplateParseError(parse_error_message(text[i], i + 1, "S W * s o"), i + 1);
        }
    }
    return WordTemplate(std::move(letters));
}

std::string WordTemplate::str() const {
    std::string text;
    for (WordConstraint c : letters_) {
        switch (c) {
            case WordConstraint::strict_record: text += 'S'; break;
            case WordConstraint::weak_record: text += 'W'; break;
            case WordConstraint::unconstrained: text += '*'; break;
            case WordConstraint::not_strict_record: text += 's'; break;
            case WordConstraint::dominated: text += 'o'; break;
        }
    }
    return text;
}

Rational perm_template_probability(const PermTemplate& tau) {
    Rational probability = 1;
    long long position = 0;
    for (PermConstraint c : tau.letters()) {
        ++position;
        if (c == PermConstraint::record) {
            probability *= Rational(1, position);
        } else if (c == PermConstraint::non_record) {
            probability *= Rational(position - 1, position);
        }
    }
    return probability;
}

Integer perm_template_count(const PermTemplate& tau, long long n) {
    if (n < static_cast<long long>(tau.length())) {
        throw std::invalid_argument("perm_template_count: permutation shorter than template");
    }
    return to_integer(Rational(factorial(static_cast<unsigned>(n))) *
                      perm_template_probability(tau));
}

GeomForm word_template_gf(const WordTemplate& tau) {
    GeomForm gf = GeomForm::geometric();
    for (WordConstraint c : tau.letters()) {
        switch (c) {
            case WordConstraint::strict_record:
                gf = omega_S(gf);
                break;
            case WordConstraint::unconstrained:
                gf = omega_star(gf);
                break;
            case WordConstraint::not_strict_record:
                gf = omega_Sbar(gf);
                break;
            case WordConstraint::weak_record:
            case WordConstraint::dominated: {
                // These two operators fold every shorter prefix through
                // 1/(1-x) as if it had a largest letter. The empty prefix has
                // none, so its constant term must not take part. Only the
                // first template letter can see a nonzero constant term;
                // afterwards the series starts at x^1.
                const GeomForm trimmed = gf - GeomForm::constant(gf.coeff(0));
                gf = (c == WordConstraint::weak_record) ? omega_W(trimmed) : omega_Obar(trimmed);
                break;
            }
        }
    }
    return gf;
}

Integer word_template_count(const WordTemplate& tau, long long alphabet_size) {
    if (alphabet_size < 1) {
        throw std::invalid_argument("word_template_count: alphabet size must be positive");
    }
    return to_integer(word_template_gf(tau).coeff(alphabet_size));
}

bool matches_perm(std::span<const int> perm, const PermTemplate& tau) {
    if (perm.size() < tau.length()) {
        throw std::invalid_argument("matches_perm: permutation shorter than template");
    }
    int best = 0;
    for (std::size_t i = 0; i < tau.length(); ++i) {
        const bool record = perm[i] > best;
        if (tau.letters()[i] == PermConstraint::record && !record) {
            return false;
        }
        if (tau.letters()[i] == PermConstraint::non_record && record) {
            return false;
        }
        best = std::max(best, perm[i]);
    }
    return true;
}

bool matches_word(std::span<const int> word, const WordTemplate& tau) {
    if (word.size() != tau.length()) {
        throw std::invalid_argument("matches_word: word length must equal template length");
    }
    int best = 0;  // letters are positive, so position 1 is always a record
    for (std::size_t i = 0; i < tau.length(); ++i) {
        const bool strict = word[i] > best;
        const bool weak = word[i] >= best;
        switch (tau.letters()[i]) {
            case WordConstraint::strict_record:
                if (!strict) return false;
                break;
            case WordConstraint::weak_record:
                if (!weak) return false;
                break;
            case WordConstraint::not_strict_record:
                if (strict) return false;
                break;
            case WordConstraint::dominated:
                if (weak) return false;
                break;
            case WordConstraint::unconstrained:
                break;
        }
        best = std::max(best, word[i]);
    }
    return true;
}

}  // namespace outstanding
