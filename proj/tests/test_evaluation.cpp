#include <doctest.h>

#include <sstream>

#include "cmgen/evaluation.hpp"
#include "cmgen/random.hpp"

using namespace cmgen;

namespace {

Vector<double> random_vector(Rng& rng, Eigen::Index dim = 16) {
    return Vector<double>::NullaryExpr(dim, [&] { return rng.uniform(-1, 1); });
}

EvalTriple triple(const std::string& id, Vector<double> l, Vector<double> m, Vector<double> g,
                  const std::string& gold = "", const std::string& gen = "") {
    return {id, {id + "/L", "", std::move(l)}, {id + "/M", gold, std::move(m)}, {id + "/G", gen, std::move(g)}};
}

}  // namespace

TEST_CASE("dis") {
    Rng rng(1);
    const auto m = random_vector(rng);
    CHECK(dis_metric(m, m) == 0.0);
    CHECK(dis_metric(Vector<double>{{1.0, 0.0}}, Vector<double>{{0.0, 3.0}}) == 1.0);
    CHECK(dis_metric(Vector<double>{{1.0, 0.0}}, Vector<double>{{-2.0, 0.0}}) == 2.0);
    CHECK_THROWS_AS(dis_metric(m, Vector<double>::Zero(16)), UndefinedError);
}

TEST_CASE("rel") {
    const Vector<double> l{{1.0, 0.0}}, m{{0.0, 1.0}}, g{{1.0, 0.0}};
    CHECK(rel_metric(l, m, g) == 1.0);
    CHECK(rel_metric(l, m, g, true) == -1.0);
    CHECK(rel_metric(l, m, m) == 0.0);
    CHECK_THROWS_AS(rel_metric(Vector<double>::Zero(2), m, g), UndefinedError);
}

TEST_CASE("property: symmetry and scale invariance") {
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        const auto l = random_vector(rng), m = random_vector(rng), g = random_vector(rng);
        const double a = rng.uniform(0.01, 50), b = rng.uniform(0.01, 50);
        CHECK(rel_metric(l, m, g) == doctest::Approx(rel_metric(l, g, m)).epsilon(1e-12));
        CHECK(dis_metric(m, g) == doctest::Approx(dis_metric(g, m)).epsilon(1e-12));
        CHECK(dis_metric((a * m).eval(), (b * g).eval()) == doctest::Approx(dis_metric(m, g)).epsilon(1e-10));
        CHECK(rel_metric((a * l).eval(), (b * m).eval(), g) == doctest::Approx(rel_metric(l, m, g)).epsilon(1e-10));
        CHECK(dis_metric(m, g) >= 0.0);
        CHECK(dis_metric(m, g) <= 2.0);
    }
}

TEST_CASE("exact_match") {
    CHECK(exact_match("The party died.", "The party died."));
    CHECK(exact_match("The party died.", "the PARTY   died"));
    CHECK(exact_match("  The party died !", "the party died"));
    CHECK_FALSE(exact_match("The party died.", "The party ended."));
    CHECK(normalize_for_match("A  b\tC?!") == "a b c");
}

TEST_CASE("aggregate_report") {
    SUBCASE("G = M") {
        Rng rng(3);
        const auto m = random_vector(rng);
        const std::vector<EvalTriple> t{triple("x", random_vector(rng), m, m, "Same.", "same")};
        const auto r = aggregate_report(t);
        CHECK(r.mean_dis == 0.0);
        CHECK(r.mean_rel == 0.0);
        CHECK(r.mean == 0.0);
        CHECK(r.exact_match == 1.0);
    }
    SUBCASE("hand-computed 2-d fixture") {
        // item a: L=(1,0) M=(0,1) G=(1,0): dis 1, rel |0-1| = 1
        // item b: L=(1,0) M=(1,0) G=(1,1): dis 1-1/sqrt2, rel |1-1/sqrt2|
        const std::vector<EvalTriple> t{
            triple("a", Vector<double>{{1.0, 0.0}}, Vector<double>{{0.0, 1.0}}, Vector<double>{{1.0, 0.0}}, "x", "y"),
            triple("b", Vector<double>{{1.0, 0.0}}, Vector<double>{{1.0, 0.0}}, Vector<double>{{1.0, 1.0}}, "z", "Z.")};
        const double s = 1.0 - 1.0 / std::sqrt(2.0);
        const auto r = aggregate_report(t);
        CHECK(r.mean_dis == doctest::Approx((1.0 + s) / 2));
        CHECK(r.mean_rel == doctest::Approx((1.0 + s) / 2));
        CHECK(r.mean == doctest::Approx((1.0 + s) / 2));
        CHECK(r.exact_match == 0.5);
        std::ostringstream out;
        write_report(r, out);
        CHECK(out.str() == "n\tdis\trel\tmean\texact\n2\t0.646447\t0.646447\t0.646447\t0.500000\n");
    }
    SUBCASE("means equal a naive recomputation") {
        Rng rng(4);
        std::vector<EvalTriple> t;
        for (int i = 0; i < 50; ++i)
            t.push_back(triple(std::to_string(i), random_vector(rng), random_vector(rng), random_vector(rng)));
        double dis = 0, rel = 0;
        for (const auto& x : t) {
            dis += dis_metric(x.gold.vector, x.generated.vector);
            rel += rel_metric(x.literal.vector, x.gold.vector, x.generated.vector);
        }
        const auto r = aggregate_report(t);
        CHECK(r.mean_dis == dis / 50);
        CHECK(r.mean_rel == rel / 50);
        CHECK(r.mean == (r.mean_dis + r.mean_rel) / 2);
    }
    SUBCASE("the mean column convention") { CHECK(combined_mean(0.085, 0.047) == doctest::Approx(0.066).epsilon(1e-12)); }
    SUBCASE("empty input") { CHECK_THROWS_AS(aggregate_report({}), EmptyInputError); }
}

TEST_CASE("SEB1") {
    const std::string text =
        "6 2\n"
        "a/L\tlit a\t1 0\n"
        "a/M\tgold a\t0 1\n"
        "a/G\tgen a\t0 1\n"
        "b/G\tgen b\t1 1\n"
        "b/L\tlit b\t1 0\n"
        "b/M\tgold b\t1 0\n";
    std::istringstream in(text);
    const auto rows = load_seb(in);
    REQUIRE(rows.size() == 6);
    const auto triples = assemble_triples(rows);
    REQUIRE(triples.size() == 2);
    CHECK(triples[0].id == "a");
    CHECK(triples[1].generated.surface == "gen b");

    std::stringstream round;
    save_seb(rows, round);
    const auto back = load_seb(round);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(back[i].vector == rows[i].vector);

    SUBCASE("errors") {
        std::istringstream zero("1 2\na/L\tx\t0 0\n");
        CHECK_THROWS_AS(load_seb(zero), ParseError);
        std::istringstream count("2 2\na/L\tx\t0 1\n");
        CHECK_THROWS_AS(load_seb(count), ParseError);
        std::istringstream dim("1 3\na/L\tx\t0 1\n");
        CHECK_THROWS_AS(load_seb(dim), ParseError);
        CHECK_THROWS_AS(assemble_triples(std::span(rows).subspan(0, 2)), ParseError);
        std::vector<SentenceEmbedding> dup{rows[0], rows[0]};
        CHECK_THROWS_AS(assemble_triples(dup), ParseError);
    }
    SUBCASE("empty file") {
        std::istringstream empty("0 384\n");
        CHECK(load_seb(empty).empty());
    }
}
