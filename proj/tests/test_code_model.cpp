#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "twozero/code_model.hpp"
#include "twozero/predictor.hpp"

using namespace twozero;

TEST_CASE("parameter validation") {
    SUBCASE("the index-2 family member (3,5,11,2,2)") {
        CodeParams prm = validate(3, 5, 11, 2, 2);
        CHECK(prm.index2_valid);
        CHECK(prm.p1 == 11);
        CHECK(prm.s == 11);
        CHECK(prm.class_no == 1);
        CHECK(prm.m == 11);
        CHECK(prm.n == 2 * (pow_big(BigInt(3), 55) - 1) / 242);
    }
    SUBCASE("(5,1,2,4,2): base-valid, m = 2, not index-2") {
        CodeParams prm = validate(5, 1, 2, 4, 2);
        CHECK(!prm.index2_valid);
        CHECK(prm.m == 2);
        CHECK(prm.n == 24);
    }
    SUBCASE("(2,3,2,7,7): base-valid, fails condition e = 2") {
        CodeParams prm = validate(2, 3, 2, 7, 7);
        CHECK(!prm.index2_valid);
        CHECK(prm.n == 63);  // 7 * (64^2 - 1)/63
    }
    SUBCASE("bad base parameters throw") {
        CHECK_THROWS_AS(validate(5, 1, 2, 4, 3), std::invalid_argument);  // 3 does not divide 4
        CHECK_THROWS_AS(validate(5, 1, 2, 3, 1), std::invalid_argument);  // 3 does not divide 4
        CHECK_THROWS_AS(validate(6, 1, 2, 1, 1), std::invalid_argument);  // 6 not prime
        CHECK_THROWS_AS(validate(5, 0, 2, 1, 1), std::invalid_argument);
    }
    SUBCASE("m = 3 stays outside the validated family") {
        CodeParams prm = validate(7, 1, 3, 2, 2);  // m = gcd(57, 6) = 3
        CHECK(prm.m == 3);
        CHECK(!prm.index2_valid);
    }
}

TEST_CASE("search-params") {
    std::vector<CodeParams> hits = search_params(3, 55, 11);
    bool has_example = false, has_h22 = false;
    for (const CodeParams& prm : hits) {
        CHECK(prm.index2_valid);
        if (prm.p == 3 && prm.f == 5 && prm.k == 11 && prm.h == 2) has_example = true;
        if (prm.p == 3 && prm.f == 5 && prm.k == 11 && prm.h == 22) has_h22 = true;
    }
    CHECK(has_example);
    CHECK(has_h22);
    CHECK(search_params(2, 2, 3).empty());
    std::vector<CodeParams> small = search_params(11, 21, 7);
    bool has_11372 = false;
    for (const CodeParams& prm : small)
        if (prm.p == 11 && prm.f == 3 && prm.k == 7 && prm.h == 2) has_11372 = true;
    CHECK(has_11372);
}

TEST_CASE("codewords at (5,1,2,4,2)") {
    CodeParams prm = validate(5, 1, 2, 4, 2);
    CodeContext ctx(prm);
    const FieldCtx& B = ctx.big();
    SUBCASE("zero pair maps to the zero word") {
        auto w = ctx.codeword(B.zero(), B.zero());
        for (const FieldElem& c : w) CHECK(ctx.tower().subfield().is_zero(c));
    }
    SUBCASE("weight of c(a,0) counts nonzero traces of a g^i") {
        FieldElem a = B.generator();
        auto word = ctx.codeword(a, B.zero());
        std::uint64_t direct = 0;
        FieldElem gi = B.one();
        for (std::uint64_t i = 0; i < 24; ++i) {
            if (!ctx.tower().trace_is_zero(B.mul(a, gi))) ++direct;
            gi = B.mul(gi, ctx.g());
        }
        std::uint64_t from_word = 0;
        for (const FieldElem& c : word)
            if (!ctx.tower().subfield().is_zero(c)) ++from_word;
        CHECK(from_word == direct);
    }
    SUBCASE("all 625 codewords are distinct (dimension 2k)") {
        std::set<std::vector<FieldElem>> words;
        FieldElem a, b;
        a.clear();
        while (B.next_element(a)) {
            b.clear();
            while (B.next_element(b)) words.insert(ctx.codeword(a, b));
        }
        CHECK(words.size() == 625);
    }
    SUBCASE("weight(c(a,b)) = n - z_direct(a,b)") {
        gmp_randclass rng(gmp_randinit_mt);
        rng.seed(50ul);
        for (int i = 0; i < 50; ++i) {
            FieldElem a = ctx.random_element(rng), b = ctx.random_element(rng);
            CHECK(BigInt(ctx.codeword_weight(a, b)) == prm.n - ctx.z_direct(a, b));
        }
    }
}

TEST_CASE("Z by formula equals Z by direct count") {
    for (auto [p, f, k, h] :
         {std::array<unsigned, 4>{5, 1, 2, 4}, {11, 1, 5, 2}, {7, 1, 3, 2}}) {
        CodeParams prm = validate(p, f, k, h, 2);
        CodeContext ctx(prm);
        CHECK(ctx.z_direct(ctx.big().zero(), ctx.big().zero()) == prm.n);
        gmp_randclass rng(gmp_randinit_mt);
        rng.seed(123ul);
        for (int i = 0; i < 10; ++i) {
            FieldElem a = ctx.random_element(rng), b = ctx.random_element(rng);
            CHECK(ctx.z_direct(a, b) == ctx.z_charsum_brute(a, b));
        }
    }
}

TEST_CASE("brute-force weight distribution") {
    SUBCASE("identities at (5,1,2,4,2)") {
        CodeParams prm = validate(5, 1, 2, 4, 2);
        CodeContext ctx(prm);
        WeightDistribution d = ctx.brute_weight_distribution();
        CHECK(d.total_count() == 625);
        CHECK(d.entries.front().first == 0);
        CHECK(d.entries.front().second == 1);
        CHECK(d.first_moment() == prm.n * (prm.q - 1) * prm.qk * prm.qk / prm.q);
        // against literal codeword weights
        std::map<BigInt, BigInt> hist;
        FieldElem a, b;
        a.clear();
        while (ctx.big().next_element(a)) {
            b.clear();
            while (ctx.big().next_element(b))
                hist[BigInt(ctx.codeword_weight(a, b))] += 1;
        }
        REQUIRE(hist.size() == d.entries.size());
        std::size_t i = 0;
        for (const auto& [w, c] : hist) {
            CHECK(d.entries[i].first == w);
            CHECK(d.entries[i].second == c);
            ++i;
        }
    }
    SUBCASE("generic path with e = 7 at (2,3,2,7,7)") {
        CodeParams prm = validate(2, 3, 2, 7, 7);
        CodeContext ctx(prm);
        WeightDistribution d = ctx.brute_weight_distribution();
        CHECK(d.total_count() == 4096);
        CHECK(d.entries.front().first == 0);
        CHECK(d.entries.front().second == 1);
        CHECK(d.first_moment() == prm.n * (prm.q - 1) * prm.qk * prm.qk / prm.q);
        gmp_randclass rng(gmp_randinit_mt);
        rng.seed(31ul);
        for (int i = 0; i < 15; ++i) {
            FieldElem a = ctx.random_element(rng), b = ctx.random_element(rng);
            CHECK(BigInt(ctx.codeword_weight(a, b)) == prm.n - ctx.z_direct(a, b));
        }
    }
    SUBCASE("enumeration guard") {
        CodeParams prm = validate(3, 5, 11, 2, 2);
        CodeContext ctx(prm);
        CHECK_THROWS_AS(ctx.brute_weight_distribution(), std::runtime_error);
        CHECK_THROWS_AS(ctx.z_direct(ctx.big().zero(), ctx.big().one()), std::runtime_error);
    }
}

TEST_CASE("classification and representatives at (11,3,7,2,2)") {
    CodeParams prm = validate(11, 3, 7, 2, 2);
    ClosedContext cc(prm);
    const FieldCtx& B = cc.big();
    CHECK(cc.classify(B.zero(), B.zero()) == TupleClass{2, 0, 0, 0});
    // a = b != 0 has exactly one vanishing difference
    FieldElem a = B.generator();
    TupleClass t = cc.classify(a, a);
    CHECK(t.e0 == 1);
    CHECK(t.e0 + t.n0 + t.n1 + t.n2 == 2);
    // construct_representative round-trips through classify for all classes
    for (const TupleClass& target : all_tuple_classes()) {
        auto [ra, rb] = cc.construct_representative(target);
        CHECK(cc.classify(ra, rb) == target);
    }
    CHECK(cc.y_value_closed(B.zero(), B.zero()) == 2 * prm.qk);
    CHECK(cc.z_closed(B.zero(), B.zero()) == prm.n);
}

TEST_CASE("Y and Z conversions") {
    CodeParams prm = validate(11, 3, 7, 2, 2);
    CHECK(y_from_z(prm, prm.n) == 2 * prm.qk);
    CHECK(z_from_y(prm, 2 * prm.qk) == prm.n);
    CHECK(weight_from_y(prm, 2 * prm.qk) == 0);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(8ul);
    ClosedContext cc(prm);
    for (int i = 0; i < 25; ++i) {
        FieldElem a = cc.random_element(rng), b = cc.random_element(rng);
        BigInt y = cc.y_value_closed(a, b);
        CHECK(y_from_z(prm, z_from_y(prm, y)) == y);
    }
}

TEST_CASE("closed context refuses non-index-2 parameters") {
    CodeParams prm = validate(5, 1, 2, 4, 2);
    CHECK_THROWS_AS(ClosedContext{prm}, std::invalid_argument);
}
