#include <doctest.h>

#include "kalai/corpus.hpp"
#include "kalai/vec.hpp"

using namespace kalai;

TEST_CASE("rationals are canonical and serialize as a or a/b") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(to_string(rat(-1, 2)) == "-1/2");
    CHECK(to_string(rat(7)) == "7");
    CHECK(to_string(rat(0, 5)) == "0");
    CHECK(rat_from_string("-14/21") == rat(-2, 3));
    CHECK(rat_from_string("42") == rat(42));
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
}

TEST_CASE("rational arithmetic is exact on random inputs") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        long a = static_cast<long>(rng.below(2001)) - 1000;
        long b = static_cast<long>(rng.below(999)) + 1;
        long c = static_cast<long>(rng.below(2001)) - 1000;
        long d = static_cast<long>(rng.below(999)) + 1;
        Rat sum = rat(a, b) + rat(c, d);
        CHECK(sum * rat(b) * rat(d) == rat(a) * rat(d) + rat(c) * rat(b));
    }
}

TEST_CASE("sign_of") {
    CHECK(sign_of(Vec{rat(2), rat(-1, 2), rat(0)}).s == std::vector<int8_t>{1, -1, 0});
    CHECK(sign_of(Vec{rat(0), rat(0)}).s == std::vector<int8_t>{0, 0});
    CHECK(sign_of(Vec{rat(-3), rat(-3), rat(-3)}).s == std::vector<int8_t>{-1, -1, -1});
}

TEST_CASE("pseudo_inverse examples") {
    CHECK(pseudo_inverse(Vec{rat(2), rat(-1, 2), rat(0)}) == Vec{rat(1, 2), rat(-2), rat(0)});
    CHECK(pseudo_inverse(Vec{rat(0), rat(0), rat(0)}) == Vec{rat(0), rat(0), rat(0)});
    CHECK(pseudo_inverse(Vec{rat(1), rat(1), rat(1), rat(1)}) ==
          Vec{rat(1), rat(1), rat(1), rat(1)});
}

TEST_CASE("pseudo_inverse is an involution preserving signs, randomized") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Vec x;
        int d = 1 + static_cast<int>(rng.below(6));
        for (int i = 0; i < d; ++i)
            x.push_back(rat(static_cast<long>(rng.below(19)) - 9,
                            static_cast<long>(rng.below(9)) + 1));
        Vec y = pseudo_inverse(x);
        CHECK(sign_of(y) == sign_of(x));
        CHECK(pseudo_inverse(y) == x);
    }
}

TEST_CASE("project_to examples") {
    Vec x{rat(3), rat(-2), rat(5)};
    CHECK(project_to(x, IndexSet::of({0, 2})) == Vec{rat(3), rat(0), rat(5)});
    CHECK(project_to(x, IndexSet::all(3)) == x);
    CHECK(project_to(x, IndexSet{}) == Vec{rat(0), rat(0), rat(0)});
}

TEST_CASE("projection composition pi_J pi_K = pi_{J n K}, randomized") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 1 + static_cast<int>(rng.below(8));
        Vec x;
        for (int i = 0; i < d; ++i) x.push_back(rat(static_cast<long>(rng.below(21)) - 10));
        IndexSet j{rng.below(1ull << d)}, k{rng.below(1ull << d)};
        CHECK(project_to(project_to(x, j), k) == project_to(x, j & k));
        CHECK(project_to(project_to(x, j), j) == project_to(x, j));
    }
}

TEST_CASE("sign vector ternary enumeration order") {
    // digit order -1 < 0 < +1, first coordinate most significant
    SignVector first = SignVector::from_rank(2, 0);
    CHECK(first.s == std::vector<int8_t>{-1, -1});
    SignVector mid = SignVector::from_rank(2, 4);
    CHECK(mid.s == std::vector<int8_t>{0, 0});
    SignVector last = SignVector::from_rank(2, 8);
    CHECK(last.s == std::vector<int8_t>{1, 1});
    for (long r = 0; r < 27; ++r) CHECK(SignVector::from_rank(3, r).rank() == r);
}
