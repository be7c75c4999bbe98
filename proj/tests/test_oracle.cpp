#include <doctest.h>

#include <random>
#include <vector>

#include "outstanding/oracle.hpp"
#include "test_util.hpp"

using namespace outstanding;
using oracle::Sequence;

TEST_CASE("record positions") {
    CHECK(oracle::strong_positions(Sequence{2, 1, 1}) == std::vector<int>{1});
    CHECK(oracle::strong_positions(Sequence{1, 2}) == std::vector<int>{1, 2});
    CHECK(oracle::strong_positions(Sequence{2, 1, 4, 5, 7, 6, 3}) ==
          std::vector<int>{1, 3, 4, 5});
    CHECK(oracle::weak_positions(Sequence{1, 1, 2}) == std::vector<int>{1, 2, 3});
    CHECK(oracle::weak_positions(Sequence{1, 1}) == std::vector<int>{1, 2});
    CHECK(oracle::weak_positions(Sequence{2, 1, 1}) == std::vector<int>{1});
}

TEST_CASE("record positions on monotone and random sequences") {
    CHECK(oracle::strong_positions(Sequence{1, 2, 3, 4}) == std::vector<int>{1, 2, 3, 4});
    CHECK(oracle::weak_positions(Sequence{4, 3, 2, 1}) == std::vector<int>{1});
    std::mt19937 rng(161803);
    std::uniform_int_distribution<int> letters(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        Sequence w(8);
        for (int& letter : w) {
            letter = letters(rng);
        }
        const auto strong = oracle::strong_positions(w);
        const auto weak = oracle::weak_positions(w);
        // strict records are a subset of weak records
        for (int p : strong) {
            CHECK(std::find(weak.begin(), weak.end(), p) != weak.end());
        }
        CHECK(!strong.empty());
        CHECK(strong.front() == 1);
    }
}

TEST_CASE("multiset enumeration is lexicographic and complete") {
    std::vector<Sequence> seen;
    oracle::for_each_multiset_permutation(MultisetSpec({2, 1}),
                                          [&](const Sequence& w) { seen.push_back(w); });
    CHECK(seen == std::vector<Sequence>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});

    seen.clear();
    oracle::for_each_multiset_permutation(MultisetSpec({1, 1}),
                                          [&](const Sequence& w) { seen.push_back(w); });
    CHECK(seen == std::vector<Sequence>{{1, 2}, {2, 1}});

    seen.clear();
    oracle::for_each_multiset_permutation(MultisetSpec({3}),
                                          [&](const Sequence& w) { seen.push_back(w); });
    CHECK(seen == std::vector<Sequence>{{1, 1, 1}});

    for (const auto& mult : test::compositions(7, 3)) {
        const MultisetSpec m(mult);
        Integer count = 0;
        oracle::for_each_multiset_permutation(m, [&](const Sequence&) { count += 1; });
        CHECK(count == m.permutation_count());
    }
}

TEST_CASE("word enumeration is lexicographic and complete") {
    std::vector<Sequence> seen;
    oracle::for_each_word(2, 2, [&](const Sequence& w) { seen.push_back(w); });
    CHECK(seen == std::vector<Sequence>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});

    seen.clear();
    oracle::for_each_word(1, 4, [&](const Sequence& w) { seen.push_back(w); });
    CHECK(seen.size() == 4);

    Integer count = 0;
    oracle::for_each_word(3, 2, [&](const Sequence&) { count += 1; });
    CHECK(count == 8);
}

TEST_CASE("enumeration caps") {
    CHECK_THROWS_AS(oracle::for_each_multiset_permutation(
                        MultisetSpec({6, 6}), [](const Sequence&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle::for_each_word(30, 10, [](const Sequence&) {}),
                    std::invalid_argument);
    // a raised cap admits the same multiset
    Integer count = 0;
    oracle::for_each_multiset_permutation(MultisetSpec({6, 6}),
                                          [&](const Sequence&) { count += 1; }, 12);
    CHECK(count == binomial(12, 6));
}

TEST_CASE("distributions") {
    const auto strong = oracle::multiset_distribution(MultisetSpec({2, 1}),
                                                      oracle::Statistic::strong);
    CHECK(strong.total == 3);
    CHECK(strong.counts.at(1) == 1);
    CHECK(strong.counts.at(2) == 2);

    const auto weak = oracle::word_distribution(2, 2, oracle::Statistic::weak);
    CHECK(weak.total == 4);
    CHECK(weak.counts.at(1) == 1);
    CHECK(weak.counts.at(2) == 3);

    const auto single = oracle::multiset_distribution(MultisetSpec({5}),
                                                      oracle::Statistic::strong);
    CHECK(single.counts.size() == 1);
    CHECK(single.counts.at(1) == 1);

    CHECK(oracle::to_polynomial(weak) ==
          Polynomial({Rational(0), Rational(1), Rational(3)}));
}

TEST_CASE("template match counting") {
    CHECK(oracle::count_perm_template_matches(PermTemplate::parse("YN*YY"), 5) == 3);
    CHECK(oracle::count_word_template_matches(WordTemplate::parse("S*s"), 2) == 7);
    for (long long n = 1; n <= 6; ++n) {
        CHECK(oracle::count_perm_template_matches(
                  PermTemplate::parse(std::string(n, '*')), n) ==
              factorial(static_cast<unsigned>(n)));
    }
}
