#include "outstanding/verify.hpp"

#include <functional>
#include <span>
#include <sstream>
#include <stdexcept>

#include "outstanding/multiset_stats.hpp"
#include "outstanding/oracle.hpp"
#include "outstanding/templates.hpp"
#include "outstanding/word_stats.hpp"

namespace outstanding {

namespace {

std::string join_multiplicities(const std::vector<long long>& multiplicities) {
    std::string text;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        if (i > 0) {
            text += ',';
        }
        text += std::to_string(multiplicities[i]);
    }
    return text;
}

std::string poly_text(const Polynomial& p) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i > 0) {
            out << " ";
        }
        out << p.coefficients()[i];
    }
    out << "]";
    return out.str();
}

// All multiplicity vectors with at most max_letters entries summing to at
// most max_total, each entry positive.
void for_each_composition(long long max_total, long long max_letters,
                          const std::function<void(const std::vector<long long>&)>& visit) {
    std::vector<long long> current;
    std::function<void(long long)> extend = [&](long long remaining) {
        if (!current.empty()) {
            visit(current);
        }
        if (static_cast<long long>(current.size()) == max_letters) {
            return;
        }
        for (long long next = 1; next <= remaining; ++next) {
            current.push_back(next);
            extend(remaining - next);
            current.pop_back();
        }
    };
    extend(max_total);
}

// Peels one letter at a time off the front of the multiset.
Polynomial strong_gf_by_peeling(std::span<const long long> multiplicities, long long total) {
    if (multiplicities.empty()) {
        return Polynomial::constant(1);
    }
    const long long a = multiplicities.front();
    const Polynomial factor({Rational(binomial(total - 1, a)), Rational(binomial(total - 1, a - 1))});
    return factor * strong_gf_by_peeling(multiplicities.subspan(1), total - a);
}

// The prefactored display: (N-1)! a_k x / prod a_i! * prod (1 + a_i x / suffix).
Polynomial strong_gf_prefactored(const MultisetSpec& m) {
    const auto& mult = m.multiplicities();
    Rational scale(factorial(static_cast<unsigned>(m.total() - 1)) * mult.back());
    for (long long a : mult) {
        scale /= Rational(factorial(static_cast<unsigned>(a)));
    }
    Polynomial product = Polynomial::monomial(1, scale);
    long long prefix = 0;
    for (std::size_t i = 0; i + 1 < mult.size(); ++i) {
        prefix += mult[i];
        product = product * Polynomial({Rational(1), Rational(mult[i], m.total() - prefix)});
    }
    return product;
}

void enumerate_perm_templates(long long max_length,
                              const std::function<void(const PermTemplate&)>& visit) {
    const PermConstraint letters[] = {PermConstraint::record, PermConstraint::non_record,
                                      PermConstraint::unconstrained};
    std::vector<PermConstraint> current;
    std::function<void()> extend = [&]() {
        if (!current.empty()) {
            visit(PermTemplate(current));
        }
        if (static_cast<long long>(current.size()) == max_length) {
            return;
        }
        for (PermConstraint letter : letters) {
            current.push_back(letter);
            extend();
            current.pop_back();
        }
    };
    extend();
}

void enumerate_word_templates(long long max_length,
                              const std::function<void(const WordTemplate&)>& visit) {
    const WordConstraint letters[] = {WordConstraint::strict_record, WordConstraint::weak_record,
                                      WordConstraint::unconstrained,
                                      WordConstraint::not_strict_record, WordConstraint::dominated};
    std::vector<WordConstraint> current;
    std::function<void()> extend = [&]() {
        if (!current.empty()) {
            visit(WordTemplate(current));
        }
        if (static_cast<long long>(current.size()) == max_length) {
            return;
        }
        for (WordConstraint letter : letters) {
            current.push_back(letter);
            extend();
            current.pop_back();
        }
    };
    extend();
}

class SuiteRun {
public:
    explicit SuiteRun(std::string name) { result_.suite = std::move(name); }

    void check(bool ok, const std::string& case_name,
               const std::function<std::string()>& detail) {
        ++result_.cases;
        if (!ok) {
            result_.failures.push_back({case_name, detail()});
        }
    }

    VerifySuiteResult take() { return std::move(result_); }

private:
    VerifySuiteResult result_;
};

}  // namespace

VerifySuiteResult verify_gauss(const VerifyBounds& bounds) {
    SuiteRun run("gauss");
    for (long long k = 1; k <= bounds.gauss_max_alphabet; ++k) {
        run.check(gauss_identity_check(k), "gauss k=" + std::to_string(k),
                  [] { return std::string("cleared bivariate sides differ"); });
    }
    for (long long k = 1; k <= bounds.bivariate_max_alphabet; ++k) {
        run.check(bivariate_strong_gf_check(k, bounds.bivariate_max_order),
                  "bivariate-series k=" + std::to_string(k),
                  [] { return std::string("series coefficient mismatch"); });
    }
    return run.take();
}

VerifySuiteResult verify_recurrence(const VerifyBounds& bounds) {
    SuiteRun run("recurrence");
    for_each_composition(bounds.multiset_max_total, bounds.multiset_max_letters,
                         [&](const std::vector<long long>& multiplicities) {
                             const MultisetSpec m(multiplicities);
                             const Polynomial product = strong_gf(m);
                             const Polynomial peeled =
                                 strong_gf_by_peeling(m.multiplicities(), m.total());
                             const Polynomial prefactored = strong_gf_prefactored(m);
                             const std::string name =
                                 "multiset mult=" + join_multiplicities(multiplicities);
                             run.check(product == peeled, name + " product-vs-peeled", [&] {
                                 return poly_text(product) + " vs " + poly_text(peeled);
                             });
                             run.check(product == prefactored, name + " product-vs-prefactored",
                                       [&] {
                                           return poly_text(product) + " vs " +
                                                  poly_text(prefactored);
                                       });
                         });
    for (long long k = 1; k <= bounds.words_identity_max_alphabet; ++k) {
        for (long long n = 1; n <= bounds.words_identity_max_length; ++n) {
            const WordParams p{n, k};
            const Polynomial difference_form = weak_gf_words(p);
            const Polynomial alternating = weak_gf_words_alternating(p);
            const Polynomial recurrence = weak_gf_words_recurrence(p);
            const std::string name = "words n=" + std::to_string(n) + " k=" + std::to_string(k);
            run.check(difference_form == alternating, name + " difference-vs-alternating", [&] {
                return poly_text(difference_form) + " vs " + poly_text(alternating);
            });
            run.check(difference_form == recurrence, name + " difference-vs-recurrence", [&] {
                return poly_text(difference_form) + " vs " + poly_text(recurrence);
            });
        }
    }
    return run.take();
}

VerifySuiteResult verify_oracle(const VerifyBounds& bounds) {
    SuiteRun run("oracle");
    for_each_composition(
        bounds.multiset_max_total, bounds.multiset_max_letters,
        [&](const std::vector<long long>& multiplicities) {
            const MultisetSpec m(multiplicities);
            const std::string name = "multiset mult=" + join_multiplicities(multiplicities);
            const Polynomial strong_expected =
                oracle::to_polynomial(oracle::multiset_distribution(m, oracle::Statistic::strong));
            const Polynomial weak_expected =
                oracle::to_polynomial(oracle::multiset_distribution(m, oracle::Statistic::weak));
            run.check(strong_gf(m) == strong_expected, name + " strong-gf", [&] {
                return poly_text(strong_gf(m)) + " vs oracle " + poly_text(strong_expected);
            });
            run.check(weak_gf(m) == weak_expected, name + " weak-gf", [&] {
                return poly_text(weak_gf(m)) + " vs oracle " + poly_text(weak_expected);
            });
        });
    for (long long k = 1; k <= bounds.words_oracle_max_alphabet; ++k) {
        for (long long n = 1; n <= bounds.words_oracle_max_length; ++n) {
            const WordParams p{n, k};
            const std::string name = "words n=" + std::to_string(n) + " k=" + std::to_string(k);
            const Polynomial strong_expected =
                oracle::to_polynomial(oracle::word_distribution(n, k, oracle::Statistic::strong));
            const Polynomial weak_expected =
                oracle::to_polynomial(oracle::word_distribution(n, k, oracle::Statistic::weak));
            run.check(strong_gf_words(p) == strong_expected, name + " strong-gf", [&] {
                return poly_text(strong_gf_words(p)) + " vs oracle " + poly_text(strong_expected);
            });
            run.check(weak_gf_words(p) == weak_expected, name + " weak-gf", [&] {
                return poly_text(weak_gf_words(p)) + " vs oracle " + poly_text(weak_expected);
            });
        }
    }
    enumerate_perm_templates(
        bounds.perm_template_max_length, [&](const PermTemplate& tau) {
            for (long long n = static_cast<long long>(tau.length());
                 n <= bounds.perm_template_max_size; ++n) {
                const Integer expected = oracle::count_perm_template_matches(tau, n);
                const Integer got = perm_template_count(tau, n);
                run.check(got == expected,
                          "perm-template tau=" + tau.str() + " n=" + std::to_string(n), [&] {
                              return got.str() + " vs oracle " + expected.str();
                          });
            }
        });
    enumerate_word_templates(
        bounds.word_template_max_length, [&](const WordTemplate& tau) {
            for (long long k = 1; k <= bounds.word_template_max_alphabet; ++k) {
                const Integer expected = oracle::count_word_template_matches(tau, k);
                const Integer got = word_template_count(tau, k);
                run.check(got == expected,
                          "word-template tau=" + tau.str() + " k=" + std::to_string(k), [&] {
                              return got.str() + " vs oracle " + expected.str();
                          });
            }
        });
    return run.take();
}

std::vector<VerifySuiteResult> run_verify(const std::string& suite, const VerifyBounds& bounds) {
    if (bounds.multiset_max_total > oracle::kDefaultMultisetCap ||
        bounds.perm_template_max_size > oracle::kDefaultMultisetCap) {
        throw std::invalid_argument("run_verify: bounds exceed the enumeration caps");
    }
    std::vector<VerifySuiteResult> results;
    if (suite == "gauss" || suite == "all") {
        results.push_back(verify_gauss(bounds));
    }
    if (suite == "recurrence" || suite == "all") {
        results.push_back(verify_recurrence(bounds));
    }
    if (suite == "oracle" || suite == "all") {
        results.push_back(verify_oracle(bounds));
    }
    if (results.empty()) {
        throw std::invalid_argument("run_verify: unknown suite '" + suite + "'");
    }
    return results;
}

}  // namespace outstanding
