#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "wbr/algebra.hpp"
#include "wbr/diagram.hpp"

using namespace wbr;
using Catch::Matchers::ContainsSubstring;
using wbrtest::diagram_basis;
using wbrtest::rand_diagram;
using wbrtest::rand_element;

namespace {
// The two running examples of shape (4,2) used throughout.
const char* kX = "r=4,s=2;t1-b2,t2-b1,t3-t6,t4-t5,b3-b5,b4-b6";
const char* kY = "r=4,s=2;t1-b1,t2-b2,t3-t5,t4-t6,b3-b5,b4-b6";
}  // namespace

TEST_CASE("diagram construction and validation") {
    WalledDiagram x = WalledDiagram::parse(kX);
    CHECK(x.shape() == WalledShape(4, 2));
    CHECK(x.partner(0) == 6 + 1);  // T1-B2

    CHECK(identity(WalledShape(1, 1)) ==
          WalledDiagram(WalledShape(1, 1), {{0, 2}, {1, 3}}));

    // Arc T1-T2 in shape (2,1) stays left of the wall.
    CHECK_THROWS_WITH(WalledDiagram::parse("r=2,s=1;t1-t2,b1-b2,t3-b3"),
                      ContainsSubstring("wall violation"));
    // Propagating line T1-B3 in shape (2,1) crosses the wall.
    CHECK_THROWS_WITH(WalledDiagram::parse("r=2,s=1;t1-b3,t2-t3,b1-b2"),
                      ContainsSubstring("wall violation"));
    // Duplicate and missing vertices.
    CHECK_THROWS_WITH(WalledDiagram(WalledShape(1, 1), {{0, 1}, {0, 3}}),
                      ContainsSubstring("not a matching"));
    CHECK_THROWS_WITH(WalledDiagram(WalledShape(1, 1), {{0, 1}}),
                      ContainsSubstring("not a matching"));
    CHECK_THROWS(WalledShape(0, 0));
}

TEST_CASE("identity diagram") {
    CHECK(identity(WalledShape(2, 1)).str() == "r=2,s=1;t1-b1,t2-b2,t3-b3");
    for (auto shape : {WalledShape(2, 1), WalledShape(2, 2)}) {
        WalledDiagram id = identity(shape);
        CHECK(flip(id) == id);
        for (int trial = 0; trial < 25; ++trial) {
            WalledDiagram d = rand_diagram(shape);
            CHECK(multiply(id, d) == std::pair(d, 0));
            CHECK(multiply(d, id) == std::pair(d, 0));
        }
    }
}

TEST_CASE("generator s_i") {
    CHECK(gen_s(WalledShape(2, 1), 1).str() == "r=2,s=1;t1-b2,t2-b1,t3-b3");
    CHECK(gen_s(WalledShape(2, 2), 3).str() == "r=2,s=2;t1-b1,t2-b2,t3-b4,t4-b3");
    CHECK_THROWS_WITH(gen_s(WalledShape(2, 1), 2),
                      ContainsSubstring("generator index crosses wall"));
    CHECK_THROWS(gen_s(WalledShape(2, 1), 0));
    CHECK_THROWS(gen_s(WalledShape(2, 1), 3));
    // s_i is an involution.
    for (int i : {1, 3, 4}) {
        WalledDiagram s = gen_s(WalledShape(2, 3), i);
        CHECK(multiply(s, s) == std::pair(identity(WalledShape(2, 3)), 0));
    }
}

TEST_CASE("generator e") {
    WalledDiagram e = gen_e(WalledShape(2, 1));
    CHECK(e.str() == "r=2,s=1;t1-b1,t2-t3,b2-b3");
    CHECK(multiply(e, e) == std::pair(e, 1));  // e^2 = delta * e
    CHECK_THROWS_WITH(gen_e(WalledShape(0, 3)), ContainsSubstring("no wall-adjacent pair"));
    CHECK_THROWS(gen_e(WalledShape(3, 0)));
}

TEST_CASE("transpositions") {
    CHECK(transposition(WalledShape(3, 1), 1, 3).str() == "r=3,s=1;t1-b3,t2-b2,t3-b1,t4-b4");
    CHECK(transposition(WalledShape(1, 3), 2, 4).str() == "r=1,s=3;t1-b1,t2-b4,t3-b3,t4-b2");
    CHECK_THROWS_WITH(transposition(WalledShape(2, 2), 2, 3), ContainsSubstring("wall violation"));
    CHECK_THROWS(transposition(WalledShape(2, 2), 2, 2));
    CHECK_THROWS(transposition(WalledShape(2, 2), 3, 2));
}

TEST_CASE("contractions") {
    CHECK(contraction(WalledShape(2, 1), 2, 3) == gen_e(WalledShape(2, 1)));
    CHECK(contraction(WalledShape(2, 1), 1, 3).str() == "r=2,s=1;t1-t3,t2-b2,b1-b3");
    CHECK_THROWS_WITH(contraction(WalledShape(2, 1), 2, 2), ContainsSubstring("invalid contraction"));
    CHECK_THROWS(contraction(WalledShape(2, 1), 3, 3));
    CHECK_THROWS(contraction(WalledShape(0, 2), 1, 2));
}

TEST_CASE("diagram multiplication reproduces the worked products") {
    WalledDiagram x = WalledDiagram::parse(kX);
    WalledDiagram y = WalledDiagram::parse(kY);
    CHECK(multiply(x, y) == std::pair(x, 2));  // xy = delta^2 x
    auto yx = multiply(y, x);
    CHECK(yx.first.str() == "r=4,s=2;t1-b2,t2-b1,t3-t5,t4-t6,b3-b5,b4-b6");
    CHECK(yx.second == 1);  // yx = delta * (that diagram)
    CHECK_THROWS(multiply(x, identity(WalledShape(2, 1))));
}

TEST_CASE("flip") {
    WalledDiagram x = WalledDiagram::parse(kX);
    CHECK(flip(x).str() == "r=4,s=2;t1-b2,t2-b1,t3-t5,t4-t6,b3-b6,b4-b5");
    CHECK(flip(gen_e(WalledShape(2, 1))) == gen_e(WalledShape(2, 1)));
    for (auto shape : {WalledShape(2, 2), WalledShape(3, 1)})
        for (int trial = 0; trial < 50; ++trial) {
            WalledDiagram d = rand_diagram(shape);
            CHECK(flip(flip(d)) == d);
        }
}

TEST_CASE("loop symmetry under flip") {
    WalledShape shape(2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        WalledDiagram d1 = rand_diagram(shape), d2 = rand_diagram(shape);
        auto [d, loops] = multiply(d1, d2);
        auto [df, loopsf] = multiply(flip(d2), flip(d1));
        CHECK(loops == loopsf);
        CHECK(df == flip(d));
    }
}

TEST_CASE("diagram enumeration") {
    CHECK(enumerate_diagrams(WalledShape(2, 1)).size() == 6);
    CHECK(enumerate_diagrams(WalledShape(2, 2)).size() == 24);
    CHECK(enumerate_diagrams(WalledShape(1, 0)).size() == 1);
    for (int r = 0; r <= 5; ++r)
        for (int s = std::max(0, 1 - r); r + s <= 5; ++s) {
            auto all = enumerate_diagrams(WalledShape(r, s));
            std::size_t fact = 1;
            for (int i = 2; i <= r + s; ++i) fact *= i;
            CHECK(all.size() == fact);
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        }
    CHECK_THROWS_WITH(enumerate_diagrams(WalledShape(5, 3)),
                      ContainsSubstring("enumeration too large"));
}

TEST_CASE("wall permutations") {
    CHECK(enumerate_wall_permutations(WalledShape(2, 2)).size() == 4);
    CHECK(enumerate_wall_permutations(WalledShape(3, 1)).size() == 6);
    for (const auto& p : enumerate_wall_permutations(WalledShape(2, 2)))
        CHECK(p.is_permutation());
}

TEST_CASE("conjugation by permutations") {
    WalledShape shape(2, 1);
    WalledDiagram e = gen_e(shape);
    CHECK(conjugate(identity(shape), e) == e);
    CHECK(conjugate(gen_s(shape, 1), e) == contraction(shape, 1, 3));
    CHECK_THROWS_WITH(conjugate(e, e), ContainsSubstring("not a permutation"));
    // Conjugation is a group action: (sigma tau) d (sigma tau)^-1 agrees.
    auto perms = enumerate_wall_permutations(WalledShape(2, 2));
    for (int trial = 0; trial < 30; ++trial) {
        WalledDiagram d = rand_diagram(WalledShape(2, 2));
        const auto& sg = perms[wbrtest::rand_int(0, perms.size() - 1)];
        const auto& tu = perms[wbrtest::rand_int(0, perms.size() - 1)];
        CHECK(conjugate(multiply(sg, tu).first, d) == conjugate(sg, conjugate(tu, d)));
    }
}

TEST_CASE("diagram text round-trip") {
    CHECK(WalledDiagram::parse(kX).str() == kX);
    for (auto shape : {WalledShape(2, 1), WalledShape(2, 2), WalledShape(0, 3)})
        for (const auto& d : diagram_basis(shape))
            CHECK(WalledDiagram::parse(d.str()) == d);
    CHECK_THROWS(WalledDiagram::parse("nonsense"));
    CHECK_THROWS(WalledDiagram::parse("r=1,s=1"));
    CHECK_THROWS(WalledDiagram::parse("r=1,s=1;t1-b9,t2-b2"));
    CHECK_THROWS(WalledDiagram::parse("r=1,s=1;t1b1"));
}

TEST_CASE("algebra element operations") {
    WalledShape shape(2, 1);
    Ring qz = Ring::generic();
    Ring q2 = Ring::rationals(Rational(2));

    // Singleton products reproduce diagram multiplication with delta^loops.
    WalledDiagram e = gen_e(shape);
    AlgebraElement ee = AlgebraElement::from_diagram(e, qz) * AlgebraElement::from_diagram(e, qz);
    CHECK(ee == qz.delta() * AlgebraElement::from_diagram(e, qz));
    AlgebraElement ee2 = AlgebraElement::from_diagram(e, q2) * AlgebraElement::from_diagram(e, q2);
    CHECK(ee2.coeff(e) == q2.from_int(2));

    AlgebraElement a = rand_element(shape, qz), b = rand_element(shape, qz);
    CHECK(commutator(a, a).is_zero());
    CHECK(AlgebraElement::unit(shape, qz) * a == a);
    CHECK(a * AlgebraElement::unit(shape, qz) == a);
    CHECK(a - a == AlgebraElement(shape, qz));

    CHECK_THROWS_WITH(a + rand_element(shape, q2), ContainsSubstring("ring mismatch"));
    CHECK_THROWS_WITH(a + rand_element(WalledShape(1, 1), qz), ContainsSubstring("shape mismatch"));
}

TEST_CASE("algebra multiplication is associative") {
    for (auto shape : {WalledShape(2, 1), WalledShape(2, 2), WalledShape(3, 1)}) {
        Ring ring = Ring::generic();
        for (int trial = 0; trial < 34; ++trial) {
            AlgebraElement a = rand_element(shape, ring), b = rand_element(shape, ring),
                           c = rand_element(shape, ring);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("flip extends to an anti-automorphism") {
    WalledShape shape(2, 2);
    Ring ring = Ring::generic();
    for (int trial = 0; trial < 40; ++trial) {
        AlgebraElement a = rand_element(shape, ring), b = rand_element(shape, ring);
        CHECK(flip(a * b) == flip(b) * flip(a));
        CHECK(flip(flip(a)) == a);
        CHECK(flip(a + b) == flip(a) + flip(b));
    }
}

TEST_CASE("element text round-trip") {
    WalledShape shape(2, 1);
    Ring qz = Ring::generic();
    AlgebraElement zero(shape, qz);
    CHECK(zero.str() == "0");
    CHECK(AlgebraElement::parse("0", qz, shape) == zero);

    AlgebraElement a(shape, qz);
    a.add_term(identity(shape), qz.delta() - qz.one());
    a.add_term(gen_e(shape), qz.from_rational(Rational(-3, 2)));
    CHECK(AlgebraElement::parse(a.str(), qz, shape) == a);

    Ring q = Ring::rationals(Rational(1, 2));
    for (int trial = 0; trial < 25; ++trial) {
        AlgebraElement x = rand_element(shape, q);
        if (x.is_zero()) continue;
        CHECK(AlgebraElement::parse(x.str(), q) == x);
    }
    CHECK_THROWS(AlgebraElement::parse("garbage", qz));
}
