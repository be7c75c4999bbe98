// Python bindings for the exact record-statistics library. Exact integers
// cross the boundary as python ints, exact rationals as fractions.Fraction;
// both are built from decimal strings, so nothing is ever rounded.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "outstanding/exact.hpp"
#include "outstanding/multiset_stats.hpp"
#include "outstanding/oracle.hpp"
#include "outstanding/templates.hpp"
#include "outstanding/word_stats.hpp"

namespace py = pybind11;
using namespace outstanding;

namespace {

py::object to_py_int(const Integer& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::object to_py_fraction(const Rational& value) {
    std::ostringstream text;
    text << value;
    return py::module_::import("fractions").attr("Fraction")(text.str());
}

py::list to_py_coeffs(const Polynomial& p) {
    py::list coeffs;
    if (p.is_zero()) {
        coeffs.append(to_py_fraction(Rational(0)));
        return coeffs;
    }
    for (const Rational& c : p.coefficients()) {
        coeffs.append(to_py_fraction(c));
    }
    return coeffs;
}

py::dict to_py_distribution(const oracle::Distribution& d) {
    py::dict counts;
    for (const auto& [value, count] : d.counts) {
        counts[py::int_(value)] = to_py_int(count);
    }
    return counts;
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

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact distributions of strong and weak records (left-to-right maxima) "
              "in multiset permutations and words, plus a template calculus.";

    // special sequences
    m.def("binomial", [](long long n, long long k) { return to_py_int(binomial(n, k)); },
          py::arg("n"), py::arg("k"), "C(n, k); 0 outside 0 <= k <= n.");
    m.def("factorial", [](unsigned n) { return to_py_int(factorial(n)); }, py::arg("n"));
    m.def("stirling_first_unsigned",
          [](unsigned n, unsigned r) { return to_py_int(stirling_first_unsigned(n, r)); },
          py::arg("n"), py::arg("r"),
          "Permutations of [n] with exactly r cycles (unsigned, first kind).");
    m.def("stirling_second",
          [](unsigned n, unsigned m_) { return to_py_int(stirling_second(n, m_)); },
          py::arg("n"), py::arg("m"), "Partitions of [n] into m nonempty blocks.");
    m.def("harmonic", [](unsigned n) { return to_py_fraction(harmonic(n)); }, py::arg("n"),
          "H_n as an exact Fraction.");

    // multiset permutations
    m.def("multiset_strong_gf",
          [](const std::vector<long long>& mult) {
              return to_py_coeffs(strong_gf(MultisetSpec(mult)));
          },
          py::arg("multiplicities"),
          "Coefficient r counts permutations of the multiset with r strict records.");
    m.def("multiset_strong_prob_gf",
          [](const std::vector<long long>& mult) {
              return to_py_coeffs(strong_prob_gf(MultisetSpec(mult)));
          },
          py::arg("multiplicities"));
    m.def("multiset_strong_mean",
          [](const std::vector<long long>& mult) {
              return to_py_fraction(strong_mean(MultisetSpec(mult)));
          },
          py::arg("multiplicities"));
    m.def("multiset_weak_gf",
          [](const std::vector<long long>& mult) {
              return to_py_coeffs(weak_gf(MultisetSpec(mult)));
          },
          py::arg("multiplicities"));
    m.def("multiset_weak_mean",
          [](const std::vector<long long>& mult) {
              return to_py_fraction(weak_mean(MultisetSpec(mult)));
          },
          py::arg("multiplicities"));
    m.def("multiset_gap_and_bound",
          [](const std::vector<long long>& mult) {
              const GapBound result = mean_gap_and_bound(MultisetSpec(mult));
              return py::make_tuple(to_py_fraction(result.gap), to_py_fraction(result.bound));
          },
          py::arg("multiplicities"),
          "(weak mean - strong mean, closed-form bound) as exact Fractions.");
    m.def("multiset_darroch",
          [](const std::vector<long long>& mult) {
              const DarrochCheck result = darroch_check(MultisetSpec(mult));
              return py::make_tuple(result.mode, to_py_fraction(result.mean), result.within_one);
          },
          py::arg("multiplicities"), "(mode, mean, |mode - mean| <= 1).");

    // words
    m.def("words_strong_count",
          [](long long n, long long k, long long r) {
              return to_py_int(strong_count({n, k}, r));
          },
          py::arg("n"), py::arg("k"), py::arg("r"),
          "Words of length n over [k] with exactly r strict records.");
    m.def("words_strong_gf",
          [](long long n, long long k) { return to_py_coeffs(strong_gf_words({n, k})); },
          py::arg("n"), py::arg("k"));
    m.def("words_strong_mean",
          [](long long n, long long k) { return to_py_fraction(strong_mean_words({n, k})); },
          py::arg("n"), py::arg("k"));
    m.def("words_weak_gf",
          [](long long n, long long k) { return to_py_coeffs(weak_gf_words({n, k})); },
          py::arg("n"), py::arg("k"));
    m.def("words_weak_mean",
          [](long long n, long long k) { return to_py_fraction(weak_mean_words({n, k})); },
          py::arg("n"), py::arg("k"));
    m.def("gauss_identity_check", &gauss_identity_check, py::arg("k"),
          "Structural check of the cleared binomial-product identity.");
    m.def("bivariate_strong_gf_check", &bivariate_strong_gf_check, py::arg("k"),
          py::arg("order"));

    // templates
    m.def("perm_template_probability",
          [](const std::string& tau) {
              return to_py_fraction(perm_template_probability(PermTemplate::parse(tau)));
          },
          py::arg("tau"), "Probability that a permutation prefix fits the template [YN*]+.");
    m.def("perm_template_count",
          [](const std::string& tau, long long n) {
              return to_py_int(perm_template_count(PermTemplate::parse(tau), n));
          },
          py::arg("tau"), py::arg("n"));
    m.def("word_template_count",
          [](const std::string& tau, long long k) {
              return to_py_int(word_template_count(WordTemplate::parse(tau), k));
          },
          py::arg("tau"), py::arg("k"),
          "Words over [k] of the template's length fitting the template [SW*so]+.");
    m.def("word_template_gf",
          [](const std::string& tau) {
              const GeomForm gf = word_template_gf(WordTemplate::parse(tau));
              return py::make_tuple(to_py_coeffs(gf.numerator()), gf.pole_order());
          },
          py::arg("tau"),
          "(numerator coefficients, pole order) of P(x)/(1-x)^r for the template.");
    m.def("matches_perm",
          [](const std::vector<int>& w, const std::string& tau) {
              return matches_perm(w, PermTemplate::parse(tau));
          },
          py::arg("perm"), py::arg("tau"));
    m.def("matches_word",
          [](const std::vector<int>& w, const std::string& tau) {
              return matches_word(w, WordTemplate::parse(tau));
          },
          py::arg("word"), py::arg("tau"));

    // brute-force counterparts
    m.def("strong_positions",
          [](const std::vector<int>& w) { return oracle::strong_positions(w); }, py::arg("word"),
          "1-based positions of the strict records.");
    m.def("weak_positions",
          [](const std::vector<int>& w) { return oracle::weak_positions(w); }, py::arg("word"));
    m.def("oracle_multiset_distribution",
          [](const std::vector<long long>& mult, const std::string& stat) {
              return to_py_distribution(
                  oracle::multiset_distribution(MultisetSpec(mult), parse_stat(stat)));
          },
          py::arg("multiplicities"), py::arg("stat"));
    m.def("oracle_word_distribution",
          [](long long n, long long k, const std::string& stat) {
              return to_py_distribution(oracle::word_distribution(n, k, parse_stat(stat)));
          },
          py::arg("n"), py::arg("k"), py::arg("stat"));
    m.def("oracle_perm_template_count",
          [](const std::string& tau, long long n) {
              return to_py_int(oracle::count_perm_template_matches(PermTemplate::parse(tau), n));
          },
          py::arg("tau"), py::arg("n"));
    m.def("oracle_word_template_count",
          [](const std::string& tau, long long k) {
              return to_py_int(oracle::count_word_template_matches(WordTemplate::parse(tau), k));
          },
          py::arg("tau"), py::arg("k"));

    py::register_exception<TemplateParseError>(m, "TemplateParseError", PyExc_ValueError);
}
