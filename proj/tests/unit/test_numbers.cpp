#include "fixtures.hpp"

#include "monoinv/json.hpp"

using namespace fx;

TEST_CASE("parse_rational is exact") {
    CHECK(parse_rational("1/3") == q(1, 3));
    CHECK(parse_rational("-0.125") == q(-1, 8));
    CHECK(parse_rational("0.1") == q(1, 10));
    CHECK(parse_rational("3.") == q(3));
    CHECK(parse_rational(".5") == q(1, 2));
    CHECK(parse_rational("1e-3") == q(1, 1000));
    CHECK(parse_rational("2.5E2") == q(250));
    CHECK(parse_rational("4/6") == q(2, 3));
    for (const char* bad : {"", "abc", "1/0", "1..2", "1/", "e3", "--1"})
        CHECK(error_kind([&] { parse_rational(bad); }) == ErrorKind::ParseError);
}

TEST_CASE("rational text is canonical") {
    CHECK(to_string(q(6, 4)) == "3/2");
    CHECK(to_string(q(-2, 1)) == "-2");
    CHECK(to_string(q(0)) == "0");
}

TEST_CASE("extended reals order and negate") {
    CHECK(ninf() < e(-1000000));
    CHECK(e(1000000) < pinf());
    CHECK(-pinf() == ninf());
    CHECK(parse_extended("inf") == pinf());
    CHECK(parse_extended("-inf") == ninf());
    CHECK(to_string(parse_extended("+inf")) == "+inf");
    CHECK(affine_image(q(2), q(1), pinf()) == pinf());
    CHECK(affine_image(q(2), q(1), e(3)) == e(7));
}

TEST_CASE("intervals") {
    auto open = Interval::open(e(0), e(1));
    CHECK(!open.empty());
    CHECK(Interval::open(e(1), e(1)).empty());
    CHECK(!Interval::closed(e(1), e(1)).empty());
    CHECK(open.contains(q(1, 2)));
    CHECK(!open.contains(q(0)));
    CHECK(Interval::closed(e(0), e(1)).contains(q(0)));
    CHECK(Interval::real_line().contains(open));
    CHECK(open.overlaps(Interval::open(e(1, 2), e(2))));
    CHECK(!open.overlaps(Interval::open(e(1), e(2))));
    CHECK(error_kind([] { Interval::open(e(2), e(1)); }) == ErrorKind::InvalidInterval);
}

TEST_CASE("json rejects floats") {
    CHECK(rational_from_json(Json("3/4")) == q(3, 4));
    CHECK(rational_from_json(Json(7)) == q(7));
    CHECK(error_kind([] { rational_from_json(Json(0.5)); }) == ErrorKind::ParseError);
    CHECK(to_json(q(1)) == Json("1"));
}

TEST_CASE("json round trip of a class") {
    for (const auto& g : {fix_a(), fix_b(), fix_c(), fix_d()}) CHECK(monotone_from_json(to_json(g)) == g);
}
