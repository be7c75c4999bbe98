#include "outstanding/commands.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "outstanding/multiset_stats.hpp"
#include "outstanding/oracle.hpp"
#include "outstanding/templates.hpp"
#include "outstanding/word_stats.hpp"

namespace outstanding {

namespace {

using nlohmann::json;

std::string fraction_string(const Rational& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

json coeffs_json(const Polynomial& p) {
    json coeffs = json::array();
    if (p.is_zero()) {
        coeffs.push_back("0");
        return coeffs;
    }
    for (const Rational& c : p.coefficients()) {
        coeffs.push_back(fraction_string(c));
    }
    return coeffs;
}

std::vector<long long> parse_multiplicities(const std::string& text) {
    std::vector<long long> multiplicities;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("multiplicities: '" + item + "' is not an integer");
        }
        if (used != item.size()) {
            throw std::invalid_argument("multiplicities: '" + item + "' is not an integer");
        }
        if (value < 1) {
            throw std::invalid_argument("multiplicities: values must be positive");
        }
        multiplicities.push_back(value);
    }
    if (multiplicities.empty()) {
        throw std::invalid_argument("multiplicities: at least one value is required");
    }
    return multiplicities;
}

oracle::Statistic parse_stat(const std::string& stat) {
    if (stat == "strong") {
        return oracle::Statistic::strong;
    }
    if (stat == "weak") {
        return oracle::Statistic::weak;
    }
    throw std::invalid_argument("stat: expected 'strong' or 'weak', got '" + stat + "'");
}

}  // namespace

OutputRecord cmd_multiset(const std::string& stat, const std::string& multiplicities,
                          const std::string& want) {
    const MultisetSpec m(parse_multiplicities(multiplicities));
    if (want == "gap") {
        const GapBound result = mean_gap_and_bound(m);
        return {"multiset.gap",
                {{"mult", multiplicities}},
                {{"gap", fraction_string(result.gap)}, {"bound", fraction_string(result.bound)}}};
    }
    if (want == "darroch") {
        const DarrochCheck result = darroch_check(m);
        return {"multiset.darroch",
                {{"mult", multiplicities}},
                {{"mode", result.mode},
                 {"mean", fraction_string(result.mean)},
                 {"ok", result.within_one}}};
    }
    const bool strong = parse_stat(stat) == oracle::Statistic::strong;
    if (want == "gf") {
        return {"multiset.gf",
                {{"stat", stat}, {"mult", multiplicities}},
                {{"coeffs", coeffs_json(strong ? strong_gf(m) : weak_gf(m))}}};
    }
    if (want == "mean") {
        return {"multiset.mean",
                {{"stat", stat}, {"mult", multiplicities}},
                {{"value", fraction_string(strong ? strong_mean(m) : weak_mean(m))}}};
    }
    throw std::invalid_argument("want: expected gf, mean, gap, or darroch, got '" + want + "'");
}

OutputRecord cmd_words(const std::string& stat, long long length, long long alphabet_size,
                       const std::string& want) {
    const WordParams p{length, alphabet_size};
    const bool strong = parse_stat(stat) == oracle::Statistic::strong;
    const json inputs = {{"stat", stat},
                         {"n", std::to_string(length)},
                         {"k", std::to_string(alphabet_size)}};
    if (want == "gf") {
        const json coeffs = coeffs_json(strong ? strong_gf_words(p) : weak_gf_words(p));
        return {"words.gf", inputs, {{"coeffs", coeffs}}};
    }
    if (want == "mean") {
        const std::string value =
            fraction_string(strong ? strong_mean_words(p) : weak_mean_words(p));
        return {"words.mean", inputs, {{"value", value}}};
    }
    throw std::invalid_argument("want: expected gf or mean, got '" + want + "'");
}

OutputRecord cmd_template(const std::string& kind, const std::string& tau,
                          std::optional<long long> size, const std::string& want) {
    if (kind == "perm") {
        const PermTemplate parsed = PermTemplate::parse(tau);
        if (want == "prob") {
            return {"template.prob",
                    {{"kind", kind}, {"tau", tau}},
                    {{"value", fraction_string(perm_template_probability(parsed))}}};
        }
        if (want == "count") {
            if (!size) {
                throw std::invalid_argument("template count for permutations needs --n");
            }
            const std::string count = perm_template_count(parsed, *size).str();
            return {"template.count",
                    {{"kind", kind}, {"tau", tau}, {"n", std::to_string(*size)}},
                    {{"value", count}}};
        }
        throw std::invalid_argument("want: permutation templates support prob or count");
    }
    if (kind == "word") {
        const WordTemplate parsed = WordTemplate::parse(tau);
        if (want == "count") {
            if (!size) {
                throw std::invalid_argument("template count for words needs --k");
            }
            const std::string count = word_template_count(parsed, *size).str();
            return {"template.count",
                    {{"kind", kind}, {"tau", tau}, {"k", std::to_string(*size)}},
                    {{"value", count}}};
        }
        if (want == "gf") {
            const GeomForm gf = word_template_gf(parsed);
            return {"template.gf",
                    {{"kind", kind}, {"tau", tau}},
                    {{"coeffs", coeffs_json(gf.numerator())},
                     {"pole_order", gf.pole_order()}}};
        }
        throw std::invalid_argument("want: word templates support count or gf");
    }
    throw std::invalid_argument("kind: expected 'perm' or 'word', got '" + kind + "'");
}

OutputRecord cmd_oracle_multiset(const std::string& stat, const std::string& multiplicities,
                                 std::optional<long long> cap) {
    const MultisetSpec m(parse_multiplicities(multiplicities));
    const auto d = oracle::multiset_distribution(m, parse_stat(stat),
                                                 cap.value_or(oracle::kDefaultMultisetCap));
    return {"oracle.gf",
            {{"source", "multiset"}, {"stat", stat}, {"mult", multiplicities}},
            {{"coeffs", coeffs_json(oracle::to_polynomial(d))}}};
}

OutputRecord cmd_oracle_words(const std::string& stat, long long length, long long alphabet_size,
                              std::optional<long long> cap) {
    const auto d = oracle::word_distribution(length, alphabet_size, parse_stat(stat),
                                             cap.value_or(oracle::kDefaultWordCap));
    return {"oracle.gf",
            {{"source", "words"},
             {"stat", stat},
             {"n", std::to_string(length)},
             {"k", std::to_string(alphabet_size)}},
            {{"coeffs", coeffs_json(oracle::to_polynomial(d))}}};
}

OutputRecord cmd_oracle_perm_template(const std::string& tau, long long n,
                                      std::optional<long long> cap) {
    const Integer count = oracle::count_perm_template_matches(
        PermTemplate::parse(tau), n, cap.value_or(oracle::kDefaultMultisetCap));
    return {"oracle.count",
            {{"source", "perm-template"}, {"tau", tau}, {"n", std::to_string(n)}},
            {{"value", count.str()}}};
}

OutputRecord cmd_oracle_word_template(const std::string& tau, long long alphabet_size,
                                      std::optional<long long> cap) {
    const Integer count = oracle::count_word_template_matches(
        WordTemplate::parse(tau), alphabet_size, cap.value_or(oracle::kDefaultWordCap));
    return {"oracle.count",
            {{"source", "word-template"}, {"tau", tau}, {"k", std::to_string(alphabet_size)}},
            {{"value", count.str()}}};
}

OutputRecord cmd_verify(const std::string& suite, std::optional<long long> cap) {
    VerifyBounds bounds;
    json inputs = {{"suite", suite}};
    if (cap) {
        if (*cap < 1) {
            throw std::invalid_argument("cap: must be positive");
        }
        bounds.multiset_max_total = *cap;
        bounds.words_oracle_max_length = *cap;
        bounds.perm_template_max_size = *cap;
        inputs["cap"] = std::to_string(*cap);
    }
    const auto results = run_verify(suite, bounds);
    json suites = json::array();
    bool passed = true;
    for (const auto& result : results) {
        json failures = json::array();
        for (const auto& failure : result.failures) {
            failures.push_back({{"case", failure.case_name}, {"detail", failure.detail}});
        }
        suites.push_back(
            {{"name", result.suite}, {"cases", result.cases}, {"failures", std::move(failures)}});
        passed = passed && result.passed();
    }
    return {"verify", inputs, {{"passed", passed}, {"suites", std::move(suites)}}};
}

}  // namespace outstanding
