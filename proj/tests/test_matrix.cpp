#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laddermat/matrix.hpp"

using namespace laddermat;

namespace {

RationalMatrix sample2x3() {
    RationalMatrix m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(0, 2) = 3;
    m(1, 0) = 4;
    m(1, 1) = 5;
    m(1, 2) = 6;
    return m;
}

} // namespace

TEST_CASE("constructors fill as documented") {
    const RationalMatrix z(2, 2);
    CHECK(z(0, 0) == 0);
    CHECK(z(1, 1) == 0);

    const RationalMatrix id = RationalMatrix::identity(3);
    CHECK(id(0, 0) == 1);
    CHECK(id(1, 2) == 0);
    CHECK(id.trace() == 3);

    const RationalMatrix c =
        RationalMatrix::constant(2, 3, make_rational(1, 2));
    CHECK(c(1, 2) == make_rational(1, 2));
    CHECK(c.grand_sum() == 3);

    CHECK(RationalMatrix::all_ones(2, 2).grand_sum() == 4);
    const RationalMatrix ones = RationalMatrix::ones_column(3);
    CHECK(ones.rows() == 3);
    CHECK(ones.cols() == 1);
    CHECK(ones(2, 0) == 1);
}

TEST_CASE("at is bounds-checked, operator() is not labeled") {
    RationalMatrix m = sample2x3();
    CHECK(m.at(1, 2) == 6);
    CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m.at(0, 3), std::out_of_range);
    m.at(0, 0) = 9;
    CHECK(m(0, 0) == 9);
}

TEST_CASE("labels address entries and reject bad input") {
    RationalMatrix m = sample2x3();
    CHECK_FALSE(m.has_labels());
    m.set_row_labels({"r1", "r2"});
    m.set_col_labels({"c1", "c2", "c3"});
    CHECK(m.has_labels());
    CHECK(m.at("r2", "c3") == 6);
    CHECK(m.row_index("r1") == 0);
    CHECK(m.col_index("c2") == 1);
    CHECK_THROWS_AS(m.at("r9", "c1"), LabelError);
    CHECK_THROWS_AS(m.col_index("zz"), LabelError);
    CHECK_THROWS_AS(m.set_row_labels({"only_one"}), ShapeError);
    CHECK_THROWS_AS(m.set_col_labels({"a", "a", "b"}), LabelError);
}

TEST_CASE("transpose swaps shape, entries, and labels") {
    RationalMatrix m = sample2x3();
    m.set_row_labels({"r1", "r2"});
    m.set_col_labels({"c1", "c2", "c3"});
    const RationalMatrix t = m.transpose();
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    CHECK(t(2, 0) == 3);
    CHECK(t.row_labels() == std::vector<std::string>{"c1", "c2", "c3"});
    CHECK(t.col_labels() == std::vector<std::string>{"r1", "r2"});
    CHECK(t.transpose() == m);
}

TEST_CASE("minor_removed drops one row and column with labels") {
    RationalMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            m(r, c) = BigRational(static_cast<int>(3 * r + c));
    m.set_row_labels({"r1", "r2", "r3"});
    m.set_col_labels({"c1", "c2", "c3"});
    const RationalMatrix minor = m.minor_removed(1, 2);
    CHECK(minor.rows() == 2);
    CHECK(minor.cols() == 2);
    CHECK(minor(0, 0) == 0);
    CHECK(minor(1, 1) == 7);
    CHECK(minor.row_labels() == std::vector<std::string>{"r1", "r3"});
    CHECK(minor.col_labels() == std::vector<std::string>{"c1", "c2"});
}

TEST_CASE("symmetry, trace, sums") {
    RationalMatrix s(2, 2);
    s(0, 0) = 1;
    s(0, 1) = make_rational(1, 3);
    s(1, 0) = make_rational(1, 3);
    s(1, 1) = 2;
    CHECK(s.is_symmetric());
    CHECK(s.trace() == 3);
    CHECK(s.grand_sum() == 3 + make_rational(2, 3));
    const auto sums = s.row_sums();
    CHECK(sums[0] == make_rational(4, 3));
    CHECK(sums[1] == make_rational(7, 3));

    s(1, 0) = 0;
    CHECK_FALSE(s.is_symmetric());
    CHECK_FALSE(sample2x3().is_symmetric());
}

TEST_CASE("equality compares shape and entries, not labels") {
    RationalMatrix a = sample2x3();
    RationalMatrix b = sample2x3();
    CHECK(a == b);
    b.set_row_labels({"r1", "r2"});
    CHECK(a == b);
    b(0, 0) = 7;
    CHECK_FALSE(a == b);
    CHECK_FALSE(a == RationalMatrix(3, 2));
}

TEST_CASE("arithmetic matches hand results and propagates labels") {
    RationalMatrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 3;
    a(1, 1) = 4;
    a.set_row_labels({"x", "y"});
    a.set_col_labels({"p", "q"});

    RationalMatrix b = RationalMatrix::identity(2);
    b.set_row_labels({"p", "q"});
    b.set_col_labels({"s", "t"});

    const RationalMatrix sum = a + a;
    CHECK(sum(1, 0) == 6);
    CHECK(sum.row_labels() == std::vector<std::string>{"x", "y"});

    const RationalMatrix diff = a - a;
    CHECK(diff.grand_sum() == 0);

    const RationalMatrix prod = a * b;
    CHECK(prod == a);
    CHECK(prod.row_labels() == std::vector<std::string>{"x", "y"});
    CHECK(prod.col_labels() == std::vector<std::string>{"s", "t"});

    RationalMatrix c(2, 2);
    c(0, 0) = make_rational(1, 2);
    c(1, 0) = 1;
    const RationalMatrix ac = a * c;
    CHECK(ac(0, 0) == make_rational(5, 2));
    CHECK(ac(1, 1) == 0);
    CHECK(ac(1, 0) == make_rational(11, 2));

    const RationalMatrix scaled = make_rational(1, 2) * a;
    CHECK(scaled(1, 1) == 2);

    CHECK_THROWS_AS(a + sample2x3(), ShapeError);
    CHECK_THROWS_AS(sample2x3() * sample2x3(), ShapeError);
}

TEST_CASE("shape_string names the dimensions") {
    CHECK(sample2x3().shape_string() == "2x3");
}
