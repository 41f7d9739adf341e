#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laddermat/closed_form.hpp"
#include "laddermat/graph.hpp"
#include "laddermat/linalg.hpp"
#include "laddermat/sequences.hpp"
#include "laddermat/serialize.hpp"

#include <json.hpp>

using namespace laddermat;

TEST_CASE("matrix kind tokens round-trip") {
    CHECK(matrix_kind_token(MatrixKind::QPlus) == "qplus");
    CHECK(matrix_kind_token(MatrixKind::LPlus) == "lplus");
    CHECK(matrix_kind_token(MatrixKind::Resistance) == "resistance");
    CHECK(parse_matrix_kind("qplus") == MatrixKind::QPlus);
    CHECK(parse_matrix_kind("lplus") == MatrixKind::LPlus);
    CHECK(parse_matrix_kind("resistance") == MatrixKind::Resistance);
    CHECK_THROWS_AS(parse_matrix_kind("inverse"), std::invalid_argument);
}

TEST_CASE("dispatchers validate the spec") {
    CHECK_THROWS_AS(qplus({Family::CircularLadder, 2}), std::domain_error);
    CHECK_THROWS_AS(lplus({Family::Mobius, 1}), std::domain_error);
    CHECK_THROWS_AS(resistance({Family::Ladder, 0}), std::domain_error);
    CHECK_THROWS_AS(tree_count({Family::Mobius, 2}), std::domain_error);
    CHECK_THROWS_AS(kirchhoff_index({Family::CircularLadder, 0}),
                    std::domain_error);
}

TEST_CASE("ladder blocks for n = 2") {
    const LadderBlocks blocks = LadderBlocks::make(2);
    CHECK(blocks.b(0, 0) == make_rational(3, 8));
    CHECK(blocks.b(0, 1) == make_rational(1, 8));
    CHECK(blocks.b(1, 0) == make_rational(1, 8));
    CHECK(blocks.b(1, 1) == make_rational(3, 8));
    CHECK(blocks.c(0, 0) == make_rational(3, 8));
    CHECK(blocks.c(0, 1) == make_rational(-3, 8));
    CHECK(blocks.d(0, 0) == make_rational(1, 8));
    CHECK(blocks.d(0, 1) == make_rational(-1, 8));
}

TEST_CASE("ladder pseudoinverse small instances") {
    const ClosedFormResult one = ladder_qplus(1);
    CHECK(one.matrix.rows() == 1);
    CHECK(one.matrix.cols() == 2);
    CHECK(one.matrix.at("f1", "u1+") == make_rational(1, 2));
    CHECK(one.matrix.at("f1", "u1-") == make_rational(-1, 2));

    const RationalMatrix h = ladder_qplus(2).matrix;
    CHECK(h.rows() == 4);
    CHECK(h.cols() == 4);
    CHECK(h.at("f1", "u1+") == make_rational(3, 8));
    CHECK(h.at("f1", "u2+") == make_rational(1, 8));
    CHECK(h.at("f1", "u1-") == make_rational(-3, 8));
    CHECK(h.at("e1+", "u1+") == make_rational(3, 8));
    CHECK(h.at("e1+", "u2+") == make_rational(-3, 8));
    CHECK(h.at("e1+", "u1-") == make_rational(1, 8));
    CHECK(h.at("e1-", "u1+") == make_rational(1, 8));
    CHECK(h.at("e1-", "u1-") == make_rational(3, 8));
}

TEST_CASE("ladder pseudoinverse rows sum to zero") {
    const RationalMatrix h = ladder_qplus(5).matrix;
    const RationalMatrix zero =
        h * RationalMatrix::ones_column(h.cols());
    for (std::size_t r = 0; r < zero.rows(); ++r)
        CHECK(zero(r, 0) == 0);
}

TEST_CASE("circular ladder pseudoinverse frozen entries") {
    const RationalMatrix m = cl_qplus(3).matrix;
    CHECK(m.rows() == 9);
    CHECK(m.cols() == 6);
    CHECK(m.at("f1", "u1+") == make_rational(3, 10));
    CHECK(m.at("f1", "u1-") == make_rational(-3, 10));
    CHECK(m.at("f1", "u2+") == make_rational(1, 10));
    CHECK(m.at("e1+", "u1+") == make_rational(4, 15));
    CHECK(m.at("e1+", "u2+") == make_rational(-4, 15));
    CHECK(m.at("e1+", "u1-") == make_rational(1, 15));
    CHECK(m.at("e1+", "u2-") == make_rational(-1, 15));
    CHECK(m.at("e1+", "u3+") == 0);
}

TEST_CASE("circular ladder entries depend only on offset and side") {
    const RationalMatrix m = cl_qplus(5).matrix;
    for (int t = 0; t < 5; ++t) {
        const std::string a_col = "u" + std::to_string(1 + t) + "+";
        const std::string b_col = "u" + std::to_string(1 + (2 + t) % 5) + "+";
        CHECK(m.at("e1+", a_col) == m.at("e3+", b_col));
        CHECK(m.at("f1", a_col) == m.at("f3", b_col));
    }
}

TEST_CASE("mobius pseudoinverse frozen entries") {
    const RationalMatrix m = mobius_qplus(3).matrix;
    CHECK(m.rows() == 9);
    CHECK(m.cols() == 6);
    CHECK(m.at("f1", "u1") == make_rational(5, 18));
    CHECK(m.at("f1", "v1") == make_rational(-5, 18));
    CHECK(m.at("f1", "v2") == make_rational(-1, 18));
    CHECK(m.at("e4", "u1") == make_rational(1, 18));
    CHECK(mobius_qplus(5).matrix.at("e1", "u1") == make_rational(101, 330));
}

TEST_CASE("pseudoinverse matches the oracle on mid-size instances") {
    for (const FamilySpec spec :
         {FamilySpec{Family::Ladder, 6}, FamilySpec{Family::CircularLadder, 6},
          FamilySpec{Family::Mobius, 6}}) {
        const OrientedGraph g = build_graph(spec);
        const RationalMatrix q = incidence_matrix(g);
        const RationalMatrix lp = pinv_laplacian(q * q.transpose());
        CHECK(qplus(spec).matrix == pinv_incidence(q, lp));
        CHECK(lplus(spec).matrix == lp);
    }
}

TEST_CASE("laplacian pseudoinverse frozen entries") {
    const RationalMatrix tiny = lplus({Family::Ladder, 1}).matrix;
    CHECK(tiny.at("u1+", "u1+") == make_rational(1, 4));
    CHECK(tiny.at("u1+", "u1-") == make_rational(-1, 4));

    const RationalMatrix cl3 = lplus({Family::CircularLadder, 3}).matrix;
    CHECK(cl3.at("u1+", "u1+") == make_rational(47, 180));
    CHECK(cl3.is_symmetric());

    const RationalMatrix m3 = lplus({Family::Mobius, 3}).matrix;
    CHECK(m3.at("u1", "u1") == make_rational(1, 4));
    CHECK(m3.at("u1", "v1") == make_rational(-1, 36));
    for (const BigRational& sum : m3.row_sums())
        CHECK(sum == 0);
}

TEST_CASE("ladder laplacian pseudoinverse is H^T H") {
    for (int n : {1, 2, 3, 5, 8}) {
        const RationalMatrix h = ladder_qplus(n).matrix;
        CHECK(lplus({Family::Ladder, n}).matrix == h.transpose() * h);
    }
}

TEST_CASE("resistance matrices frozen entries") {
    const RationalMatrix l1 = resistance({Family::Ladder, 1}).matrix;
    CHECK(l1.at("u1+", "u1-") == 1);
    CHECK(l1.at("u1+", "u1+") == 0);

    const RationalMatrix l2 = resistance({Family::Ladder, 2}).matrix;
    CHECK(l2.at("u1+", "u1-") == make_rational(3, 4));
    CHECK(l2.at("u1+", "u2+") == make_rational(3, 4));
    CHECK(l2.at("u1+", "u2-") == 1);

    const RationalMatrix cl3 = resistance({Family::CircularLadder, 3}).matrix;
    CHECK(cl3.at("u1+", "u1-") == make_rational(3, 5));
    const RationalMatrix cl4 = resistance({Family::CircularLadder, 4}).matrix;
    CHECK(cl4.at("u1+", "u3+") == make_rational(3, 4));

    const RationalMatrix m3 = resistance({Family::Mobius, 3}).matrix;
    CHECK(m3.at("u1", "u2") == make_rational(5, 9));
    CHECK(m3.at("u1", "v1") == make_rational(5, 9));
    CHECK(m3.at("u1", "u3") == make_rational(2, 3));
    const RationalMatrix m4 = resistance({Family::Mobius, 4}).matrix;
    CHECK(m4.at("u1", "u2") == make_rational(33, 56));
}

TEST_CASE("resistance matrices are symmetric with zero diagonal") {
    for (const FamilySpec spec :
         {FamilySpec{Family::Ladder, 7}, FamilySpec{Family::CircularLadder, 7},
          FamilySpec{Family::Mobius, 8}}) {
        const RationalMatrix r = resistance(spec).matrix;
        CHECK(r.is_symmetric());
        for (std::size_t i = 0; i < r.rows(); ++i)
            CHECK(r(i, i) == 0);
    }
}

TEST_CASE("resistance assembles from the laplacian pseudoinverse") {
    for (const FamilySpec spec :
         {FamilySpec{Family::Ladder, 5}, FamilySpec{Family::CircularLadder, 5},
          FamilySpec{Family::Mobius, 5}}) {
        const RationalMatrix lp = lplus(spec).matrix;
        const RationalMatrix r = resistance(spec).matrix;
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j)
                CHECK(r(i, j) == lp(i, i) + lp(j, j) - lp(i, j) - lp(j, i));
    }
}

TEST_CASE("kirchhoff index anchors and grand-sum identity") {
    CHECK(kirchhoff_index({Family::Ladder, 1}) == 1);
    CHECK(kirchhoff_index({Family::Ladder, 2}) == 5);
    CHECK(kirchhoff_index({Family::Ladder, 3}) == make_rational(71, 5));
    CHECK(kirchhoff_index({Family::CircularLadder, 3}) == make_rational(47, 5));
    CHECK(kirchhoff_index({Family::Mobius, 3}) == 9);
    for (const FamilySpec spec :
         {FamilySpec{Family::Ladder, 4}, FamilySpec{Family::CircularLadder, 6},
          FamilySpec{Family::Mobius, 6}}) {
        const BigRational half_sum =
            make_rational(1, 2) * resistance(spec).matrix.grand_sum();
        CHECK(kirchhoff_index(spec) == half_sum);
        CHECK(kirchhoff_index(spec) ==
              BigRational(2 * spec.n) * lplus(spec).matrix.trace());
    }
}

TEST_CASE("tree counts match the recurrence and the oracle") {
    CHECK(tree_count({Family::Ladder, 1}) == 1);
    CHECK(tree_count({Family::Ladder, 2}) == 4);
    CHECK(tree_count({Family::Ladder, 3}) == 15);
    CHECK(tree_count({Family::CircularLadder, 3}) == 75);
    CHECK(tree_count({Family::CircularLadder, 4}) == 384);
    CHECK(tree_count({Family::Mobius, 3}) == 81);
    CHECK(tree_count({Family::Mobius, 4}) == 392);
    for (int n = 1; n <= 10; ++n)
        CHECK(tree_count({Family::Ladder, n}) ==
              seq_value(SeqKind::S, static_cast<unsigned>(n)));
    for (int n = 3; n <= 8; ++n)
        for (const Family family :
             {Family::Ladder, Family::CircularLadder, Family::Mobius}) {
            const FamilySpec spec{family, n};
            CHECK(tree_count(spec) == matrix_tree_count(build_graph(spec)));
        }
}

TEST_CASE("contracted tree counts per spoke") {
    CHECK(contracted_tree_count({Family::Ladder, 3}, 1) == 11);
    CHECK(contracted_tree_count({Family::Ladder, 3}, 2) == 9);
    CHECK(contracted_tree_count({Family::Ladder, 3}, 3) == 11);
    CHECK(contracted_tree_count({Family::CircularLadder, 3}, 2) == 45);
    CHECK(contracted_tree_count({Family::Mobius, 3}, 1) == 45);
    CHECK_THROWS_AS(contracted_tree_count({Family::Ladder, 3}, 0),
                    std::domain_error);
    CHECK_THROWS_AS(contracted_tree_count({Family::Ladder, 3}, 4),
                    std::domain_error);

    for (const Family family :
         {Family::Ladder, Family::CircularLadder, Family::Mobius}) {
        const FamilySpec spec{family, family == Family::Ladder ? 4 : 4};
        const OrientedGraph g = build_graph(spec);
        for (int i = 1; i <= spec.n; ++i) {
            const OrientedGraph merged =
                contract_edge(g, "f" + std::to_string(i));
            CHECK(contracted_tree_count(spec, i) == matrix_tree_count(merged));
        }
    }
}

TEST_CASE("csv export golden bytes") {
    CHECK(matrix_to_csv(ladder_qplus(1)) ==
          "label,u1+,u1-\n"
          "f1,1/2,-1/2\n");
    const std::string csv = matrix_to_csv(resistance({Family::Ladder, 1}));
    CHECK(csv ==
          "label,u1+,u1-\n"
          "u1+,0,1\n"
          "u1-,1,0\n");
}

TEST_CASE("json export golden bytes") {
    const std::string text = matrix_json_string(ladder_qplus(1));
    CHECK(text ==
          R"({"spec":{"family":"ladder","n":1},"kind":"qplus",)"
          R"("rows":["f1"],"cols":["u1+","u1-"],)"
          R"("entries":[["1/2","-1/2"]]})"
          "\n");
}

TEST_CASE("json round-trip preserves the result") {
    for (const MatrixKind kind :
         {MatrixKind::QPlus, MatrixKind::LPlus, MatrixKind::Resistance}) {
        const FamilySpec spec{Family::Mobius, 4};
        ClosedFormResult original;
        switch (kind) {
        case MatrixKind::QPlus:
            original = qplus(spec);
            break;
        case MatrixKind::LPlus:
            original = lplus(spec);
            break;
        case MatrixKind::Resistance:
            original = resistance(spec);
            break;
        }
        const ClosedFormResult back = matrix_from_json(matrix_to_json(original));
        CHECK(back.spec.family == original.spec.family);
        CHECK(back.spec.n == original.spec.n);
        CHECK(back.kind == original.kind);
        CHECK(back.matrix == original.matrix);
        CHECK(back.matrix.row_labels() == original.matrix.row_labels());
        CHECK(back.matrix.col_labels() == original.matrix.col_labels());
    }
}

TEST_CASE("matrix_from_json rejects malformed documents") {
    nlohmann::ordered_json doc = matrix_to_json(ladder_qplus(1));
    doc["kind"] = "bogus";
    CHECK_THROWS_AS(matrix_from_json(doc), std::invalid_argument);
    nlohmann::ordered_json truncated = matrix_to_json(ladder_qplus(1));
    truncated.erase("entries");
    CHECK_THROWS_AS(matrix_from_json(truncated), std::invalid_argument);
    nlohmann::ordered_json ragged = matrix_to_json(ladder_qplus(1));
    ragged["entries"][0] = nlohmann::ordered_json::array({"1/2"});
    CHECK_THROWS_AS(matrix_from_json(ragged), std::invalid_argument);
}
