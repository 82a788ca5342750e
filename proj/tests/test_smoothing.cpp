#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "twobridge/smoothing.hpp"

using namespace twobridge;

namespace {

Smoothing bits(std::initializer_list<int> values) {
    std::vector<std::uint8_t> out;
    for (int v : values) out.push_back(static_cast<std::uint8_t>(v));
    return Smoothing(out);
}

// Exhaustive filter over all 2^k tuples, the slow reference for the
// backtracking enumerator.
std::vector<Smoothing> brute_force_allowable(const Expansion& n) {
    const std::size_t k = n.length();
    std::vector<Smoothing> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
        std::vector<std::uint8_t> eps(k);
        for (std::size_t i = 0; i < k; ++i)
            eps[i] = static_cast<std::uint8_t>((code >> (k - 1 - i)) & 1u);
        Smoothing s(eps);
        if (is_allowable(n, s)) out.push_back(s);
    }
    return out;
}

std::uint64_t fibonacci(std::size_t i) {
    std::uint64_t a = 1, b = 1;  // F(1), F(2)
    for (std::size_t step = 2; step < i; ++step) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return i <= 1 ? 1 : b;
}

}  // namespace

TEST_CASE("smoothing parse and print") {
    CHECK(Smoothing::parse("0100") == bits({0, 1, 0, 0}));
    CHECK(Smoothing::parse("").size() == 0);
    CHECK(bits({1, 0, 1}).str() == "101");
    CHECK_THROWS_AS(Smoothing::parse("012"), DomainError);
}

TEST_CASE("is_allowable on pinned cases") {
    Expansion n({5, 4, 3, 6});
    CHECK(is_allowable(n, bits({0, 1, 0, 0})));
    CHECK_FALSE(is_allowable(n, bits({1, 1, 0, 0})));
    CHECK_FALSE(is_allowable(Expansion({2, 1, 2}), bits({0, 0, 0})));
    CHECK(is_allowable(Expansion({2, 1, 2}), bits({0, 1, 0})));

    CHECK_THROWS_AS(is_allowable(n, bits({0, 1})), LengthMismatch);
    CHECK_THROWS_AS(is_allowable(Expansion({3, 1}), bits({0, 0})), DomainError);
    CHECK_THROWS_AS(is_allowable(Expansion({-2, 2}), bits({0, 0})), DomainError);
}

TEST_CASE("enumerate_allowable on pinned cases") {
    CHECK(enumerate_allowable(Expansion({3})) ==
          std::vector<Smoothing>{bits({0}), bits({1})});
    CHECK(enumerate_allowable(Expansion({2, 2})) ==
          std::vector<Smoothing>{bits({0, 0}), bits({0, 1}), bits({1, 0})});
    CHECK(enumerate_allowable(Expansion({5, 4, 3, 6})).size() == 8);
}

TEST_CASE("enumerate_allowable matches the exhaustive filter") {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> len_dist(1, 9);
    std::uniform_int_distribution<int> term_dist(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        int k = len_dist(rng);
        std::vector<Int> terms;
        for (int i = 0; i < k; ++i) terms.emplace_back(term_dist(rng));
        if (terms.back() < 2) terms.back() = 2;
        Expansion n(terms);
        CHECK(enumerate_allowable(n) == brute_force_allowable(n));
    }
}

TEST_CASE("allowable count is Fibonacci when every twist has >= 2 crossings") {
    std::mt19937 rng(13571357);
    std::uniform_int_distribution<int> len_dist(1, 12);
    std::uniform_int_distribution<int> term_dist(2, 7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t k = static_cast<std::size_t>(len_dist(rng));
        std::vector<Int> terms;
        for (std::size_t i = 0; i < k; ++i) terms.emplace_back(term_dist(rng));
        Expansion n(terms);
        CHECK(enumerate_allowable(n).size() == fibonacci(k + 2));
    }
}

TEST_CASE("generate_expansion on pinned cases") {
    CHECK(generate_expansion(Expansion({3}), bits({0})) == Expansion({3}));
    CHECK(generate_expansion(Expansion({3}), bits({1})) == Expansion({-2, 2}));
    CHECK(generate_expansion(Expansion({5, 4, 3, 6}), bits({0, 1, 0, 0})) ==
          Expansion({6, -2, 2, -2, 4, 6}));
    CHECK(generate_expansion(Expansion({2, 2}), bits({1, 0})) == Expansion({-2, 3}));
    CHECK(generate_expansion(Expansion({2, 2}), bits({0, 1})) == Expansion({3, -2}));

    // Single-crossing twists: deletion and sign bookkeeping.
    CHECK(generate_expansion(Expansion({2, 1, 2}), bits({0, 1, 0})) == Expansion({3, -3}));
    CHECK(generate_expansion(Expansion({2, 1, 2}), bits({1, 0, 1})) == Expansion({-2, 3, -2}));
    CHECK(generate_expansion(Expansion({2, 1, 2}), bits({1, 0, 0})) == Expansion({-2, 2, 2}));
    CHECK(generate_expansion(Expansion({2, 1, 2}), bits({0, 0, 1})) == Expansion({2, 2, -2}));

    CHECK_THROWS_AS(generate_expansion(Expansion({5, 4, 3, 6}), bits({1, 1, 0, 0})),
                    NotAllowable);
}

TEST_CASE("generated expansions have |m_i| >= 2 and keep the knot class") {
    for (int alpha = 3; alpha <= 151; alpha += 2) {
        for (int beta = 1; beta < alpha; ++beta) {
            if (std::gcd(alpha, beta) != 1) continue;
            Fraction f(beta, alpha);
            Expansion n = positive_expansion(f);
            for (const Smoothing& s : enumerate_allowable(n)) {
                Expansion m = generate_expansion(n, s);
                REQUIRE(!m.terms.empty());
                for (const Int& b : m.terms) REQUIRE(abs(b) >= 2);
                REQUIRE(same_knot_class(cf_value(m), f));
            }
        }
    }
}

TEST_CASE("smoothing-generated expansions equal the brute-force enumeration") {
    for (int alpha = 3; alpha <= 99; alpha += 2) {
        for (int beta = 1; beta < alpha; ++beta) {
            if (std::gcd(alpha, beta) != 1) continue;
            Fraction f(beta, alpha);
            Expansion n = positive_expansion(f);
            std::set<Expansion> generated;
            for (const Smoothing& s : enumerate_allowable(n))
                generated.insert(generate_expansion(n, s));
            REQUIRE(generated.size() == enumerate_allowable(n).size());
            REQUIRE(generated == enumerate_ht_expansions(f, default_search_depth(n)));
        }
    }
}
