#include <doctest.h>

#include <centro/centro.hpp>

#include "fixtures.hpp"

using namespace centro;

TEST_CASE("rational matrix files") {
    ParsedMatrix pm = parse_matrix("2 2 Q\n1/2 -3\n0 7\n");
    auto& m = std::get<Matrix<Rational>>(pm);
    CHECK(m.at(0, 0) == Rational(1, 2));
    CHECK(m.at(0, 1) == Rational(-3));
    CHECK(m.at(1, 1) == Rational(7));

    // Q is the default field
    ParsedMatrix def = parse_matrix("1 1\n42\n");
    CHECK(std::get<Matrix<Rational>>(def).at(0, 0) == Rational(42));
}

TEST_CASE("prime field matrix files") {
    ParsedMatrix pm = parse_matrix("2 2 Fp:7\n3 -1\n10 0\n");
    auto& m = std::get<Matrix<FpElement>>(pm);
    CHECK(m.at(0, 0) == FpElement(3, 7));
    CHECK(m.at(0, 1) == FpElement(6, 7)); // -1 reduced
    CHECK(m.at(1, 0) == FpElement(3, 7)); // 10 reduced
    // any odd prime is fine for plain arithmetic
    CHECK_NOTHROW(parse_matrix("1 1 Fp:5\n2\n"));
    CHECK_THROWS_AS(parse_matrix("1 1 Fp:6\n2\n"), parse_error);
    CHECK_THROWS_AS(parse_matrix("1 1 Fp:2\n1\n"), parse_error);
}

TEST_CASE("gaussian entries lift the field") {
    ParsedMatrix pm = parse_matrix("2 2 Q\n1+2i 3\n-i 1/2-1/3i\n");
    auto& m = std::get<Matrix<GaussianRational>>(pm);
    CHECK(m.at(0, 0) == GaussianRational(Rational(1), Rational(2)));
    CHECK(m.at(0, 1) == GaussianRational(Rational(3), Rational(0)));
    CHECK(m.at(1, 0) == GaussianRational(Rational(0), Rational(-1)));
    CHECK(m.at(1, 1) == GaussianRational(Rational(1, 2), Rational(-1, 3)));

    ParsedMatrix fp = parse_matrix("1 2 Fp:7\n2+3i 5\n");
    auto& g = std::get<Matrix<GaussianFp>>(fp);
    CHECK(g.at(0, 0) == GaussianFp(FpElement(2, 7), FpElement(3, 7)));

    // F_5[i] is not a field
    CHECK_THROWS_AS(parse_matrix("1 1 Fp:5\n1+1i\n"), parse_error);
}

TEST_CASE("gaussian scalar forms") {
    CHECK(parse_gaussian_rational("i") == GaussianRational(Rational(0), Rational(1)));
    CHECK(parse_gaussian_rational("-i") == GaussianRational(Rational(0), Rational(-1)));
    CHECK(parse_gaussian_rational("3+i") == GaussianRational(Rational(3), Rational(1)));
    CHECK(parse_gaussian_rational("3-i") == GaussianRational(Rational(3), Rational(-1)));
    CHECK(parse_gaussian_rational("2i") == GaussianRational(Rational(0), Rational(2)));
    CHECK(parse_gaussian_rational("-1/2i") == GaussianRational(Rational(0), Rational(-1, 2)));
    CHECK_THROWS_AS(parse_gaussian_rational("2+2j"), parse_error);
}

TEST_CASE("header and token count diagnostics") {
    CHECK_THROWS_AS(parse_matrix(""), parse_error);
    CHECK_THROWS_AS(parse_matrix("2\n1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_matrix("2 2 R\n1 2 3 4\n"), parse_error);
    CHECK_THROWS_AS(parse_matrix("2 2 Q extra\n1 2 3 4\n"), parse_error);
    CHECK_THROWS_AS(parse_matrix("2 2 Q\n1 2 3\n"), parse_error); // wrong count
    CHECK_THROWS_AS(parse_matrix("0 2 Q\n"), parse_error);
    try {
        parse_matrix("2 2 Q\n1 2\nx 4\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("comments are allowed") {
    ParsedMatrix pm = parse_matrix("# header comment\n2 2 Q # trailing\n1 2 # row\n3 4\n");
    CHECK(std::get<Matrix<Rational>>(pm).at(1, 1) == Rational(4));
}

TEST_CASE("print and reparse is the identity") {
    const char* files[] = {
        "2 2 Q\n1/2 -3\n0 7\n",
        "2 2 Fp:11\n3 10\n0 1\n",
        "1 2 Q\n1+2i -1/3i\n",
        "1 1 Fp:7\n2+3i\n",
    };
    for (const char* f : files) {
        ParsedMatrix once = parse_matrix(f);
        std::string printed = print_matrix(once);
        ParsedMatrix twice = parse_matrix(printed);
        CHECK(print_matrix(twice) == printed);
    }
    // the worked 6x6 example survives a file round-trip
    ParsedMatrix fig3 = parse_matrix(testfix::read_file(testfix::fixture_path("figure3_matrix.txt")));
    CHECK(std::get<Matrix<Rational>>(fig3) == testfix::figure3_matrix());
}
