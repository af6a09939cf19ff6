#include <catch2/catch_amalgamated.hpp>

#include "whkit/linalg.hpp"
#include "whkit/rng.hpp"
#include "whkit/scalar.hpp"

using namespace whkit;

TEST_CASE("scalar arithmetic is exact and canonical") {
    Scalar a(1, 3), b(2, 6);
    REQUIRE(a == b);  // 2/6 canonicalizes to 1/3
    REQUIRE((a + b).str() == "2/3");
    REQUIRE((a - b).is_zero());
    Scalar i = Scalar::i();
    REQUIRE((i * i) == Scalar(-1));
    Scalar z(mpq_class(3, 4), mpq_class(-1, 2));
    REQUIRE((z * z.conj()).str() == "13/16");
    REQUIRE((z / z).is_one());
    REQUIRE_THROWS_AS(Scalar(1) / Scalar(0), error);
}

TEST_CASE("scalar text round trip") {
    const char* cases[] = {"0",          "5",        "-7/3", "1/2+1/3 i", "0+1 i",
                           "-2/5-4/7 i", "1-1/2 i"};
    for (const char* c : cases) {
        Scalar s = Scalar::parse(c);
        REQUIRE(Scalar::parse(s.str()) == s);
    }
    REQUIRE(Scalar::parse("i") == Scalar::i());
    REQUIRE(Scalar::parse("-i") == -Scalar::i());
    REQUIRE(Scalar::parse("3/6") == Scalar(1, 2));
    REQUIRE_THROWS_AS(Scalar::parse("bogus"), error);
    REQUIRE_THROWS_AS(Scalar::parse("1/0"), error);

    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        Scalar s(mpq_class(rng.range(-40, 40), rng.range(1, 9)),
                 mpq_class(rng.range(-40, 40), rng.range(1, 9)));
        REQUIRE(Scalar::parse(s.str()) == s);
    }
}

TEST_CASE("kernel basis on the worked examples") {
    REQUIRE(kernel_basis(Matrix::identity(3)).empty());

    Matrix zero2(2, 2);
    REQUIRE(kernel_basis(zero2).size() == 2);

    // [[1,1],[2,2]]: hand row reduction gives the single relation x0 = -x1
    Matrix m(2, 2);
    m(0, 0) = Scalar(1);
    m(0, 1) = Scalar(1);
    m(1, 0) = Scalar(2);
    m(1, 1) = Scalar(2);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    REQUIRE(!k[0][0].is_zero());
    REQUIRE(k[0][0] == -k[0][1]);
    REQUIRE(is_zero(m.apply(k[0])));
}

TEST_CASE("solve, rank and image") {
    Vector b{Scalar(3), Scalar(-1), Scalar(1, 2)};
    auto x = solve(Matrix::identity(3), b);
    REQUIRE(x.has_value());
    REQUIRE(*x == b);

    // second row is i times the first
    Matrix m(2, 2);
    m(0, 0) = Scalar(1);
    m(0, 1) = Scalar::i();
    m(1, 0) = Scalar::i();
    m(1, 1) = Scalar(-1);
    REQUIRE(rank(m) == 1);

    REQUIRE(image_basis(Matrix(3, 3)).empty());

    // inconsistent system: absence, and rank([M|b]) > rank(M)
    Matrix mm(2, 1);
    mm(0, 0) = Scalar(1);
    mm(1, 0) = Scalar(1);
    Vector bb{Scalar(1), Scalar(2)};
    REQUIRE(!solve(mm, bb).has_value());
    REQUIRE(rank(mm.hstack(Matrix::from_columns({bb}))) > rank(mm));
}

TEST_CASE("rank-nullity and exactness on random matrices") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng.next() % 6, cols = 1 + rng.next() % 6;
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = Scalar(mpq_class(rng.range(-4, 4), rng.range(1, 3)),
                                 mpq_class(rng.range(-2, 2)));
        auto k = kernel_basis(m);
        REQUIRE(rank(m) + k.size() == cols);
        for (const auto& v : k) REQUIRE(is_zero(m.apply(v)));
        // every solved system is satisfied exactly
        Vector rhs = m.apply(rng.element(cols));
        auto x = solve(m, rhs);
        REQUIRE(x.has_value());
        REQUIRE(m.apply(*x) == rhs);
    }
}

TEST_CASE("span utilities") {
    Vector e0 = unit_vector(3, 0), e1 = unit_vector(3, 1);
    REQUIRE(span_contains({e0, e1}, e0 + e1));
    REQUIRE(!span_contains({e0}, e1));
    REQUIRE(spans_equal({e0, e1}, {e0 + e1, e0 - e1}));
    REQUIRE(!spans_equal({e0}, {e1}));
    SpanBuilder sb;
    REQUIRE(sb.insert(e0));
    REQUIRE(!sb.insert(e0 + e0));
    REQUIRE(sb.insert(e1));
    REQUIRE(sb.dim() == 2);
}
