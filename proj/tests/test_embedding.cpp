#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "cmgen/embedding.hpp"
#include "cmgen/error.hpp"
#include "cmgen/random.hpp"
#include "cmgen/sgns.hpp"

using namespace cmgen;

namespace {

EmbeddingSpace<double> hand_space(const std::vector<std::pair<std::string, std::vector<double>>>& rows) {
    Vocabulary v;
    for (const auto& [t, _] : rows) v.add(t, 1);
    EmbeddingSpace<double> s(v, static_cast<Eigen::Index>(rows.front().second.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].second.size(); ++j)
            s.input(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i].second[j];
    return s;
}

EmbeddingSpace<double> random_space(std::size_t n, Eigen::Index dim, std::uint64_t seed, std::size_t frames = 0) {
    Vocabulary v;
    for (std::size_t i = 0; i < n; ++i) v.add(i < frames ? frame_token("f" + std::to_string(i)) : "w" + std::to_string(i), 1);
    EmbeddingSpace<double> s(v, dim);
    Rng rng(seed);
    for (Eigen::Index i = 0; i < s.input.rows(); ++i)
        for (Eigen::Index j = 0; j < dim; ++j) s.input(i, j) = rng.uniform(-1, 1);
    return s;
}

}  // namespace

TEST_CASE("build_vocab") {
    std::vector<TrainingWindow> w{{"__frame__:f", {"x", "x", "x", "y"}, 2}};
    for (int i = 0; i < 5; ++i) w.push_back({"y", {"z"}, 0});

    SUBCASE("rare words dropped, frame tokens kept") {
        const auto v = build_vocab(w, 5);
        CHECK_FALSE(v.contains("x"));
        CHECK(v.contains("__frame__:f"));
        CHECK(v.contains("y"));
        CHECK(v.contains("z"));
    }
    SUBCASE("frequencies match an independent count") {
        std::map<std::string, std::uint64_t> counts;
        for (const auto& win : w)
            for (const auto& t : win.sequence()) ++counts[t];
        const auto v = build_vocab(w, 1);
        CHECK(v.size() == counts.size());
        for (const auto& [t, c] : counts) CHECK(v.frequency(v.id(t)) == c);
        // descending frequency order
        for (std::size_t i = 1; i < v.size(); ++i) CHECK(v.frequency(i - 1) >= v.frequency(i));
    }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(build_vocab(std::vector<TrainingWindow>{}, 1), EmptyInputError);
        CHECK_THROWS_AS(build_vocab(std::vector<TrainingWindow>{{"a", {}, 0}}, 2), EmptyInputError);
    }
    SUBCASE("partition into word and frame tokens") {
        const auto v = build_vocab(w, 1);
        std::size_t frames = 0;
        for (std::size_t i = 0; i < v.size(); ++i) frames += v.is_frame(i) ? 1 : 0;
        CHECK(frames == 1);
    }
}

TEST_CASE("cosine") {
    const auto s = hand_space({{"a", {1, 2}}, {"b", {2, 4}}, {"c", {-2, 1}}, {"z", {0, 0}}});
    CHECK(cosine(s, "a", "a") == 1.0);
    CHECK(cosine(s, "a", "b") == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cosine(s, "a", "c") == 0.0);
    CHECK_THROWS_AS(cosine(s, "a", "nope"), LookupError);
    CHECK_THROWS_AS(cosine(s, "a", "z"), UndefinedError);

    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        Vector<double> x = Vector<double>::NullaryExpr(7, [&] { return rng.uniform(-3, 3); });
        CHECK(cosine(x, x) == 1.0);
        CHECK(cosine(x, -x) == -1.0);
    }
}

TEST_CASE("nearest") {
    const auto s = random_space(50, 8, 99, 5);

    SUBCASE("a token's own vector ranks it first") {
        for (std::size_t id = 5; id < 50; ++id) {
            const auto& t = s.vocab.token(id);
            CHECK(nearest(s, s.vector(t), 1).front().token == t);
            const auto top = nearest(s, s.vector(t), 1, {t});
            CHECK(top.front().token != t);
        }
    }
    SUBCASE("frame tokens excluded unless asked for") {
        for (const auto& n : nearest(s, s.vector("__frame__:f0"), 100)) CHECK_FALSE(is_frame_token(n.token));
        CHECK(nearest(s, s.vector("__frame__:f0"), 1, {}, true).front().token == "__frame__:f0");
    }
    SUBCASE("k larger than the pool returns everything") {
        CHECK(nearest(s, s.vector("w7"), 1000).size() == 45);
        std::set<std::string, std::less<>> all(s.vocab.tokens().begin(), s.vocab.tokens().end());
        CHECK(nearest(s, s.vector("w7"), 3, all).empty());
    }
    SUBCASE("agrees with an exhaustive scan on 100 random queries") {
        Rng rng(1234);
        for (int q = 0; q < 100; ++q) {
            Vector<double> query = Vector<double>::NullaryExpr(8, [&] { return rng.uniform(-1, 1); });
            std::vector<std::pair<double, std::size_t>> scan;
            for (std::size_t id = 0; id < s.size(); ++id) {
                if (s.vocab.is_frame(id)) continue;
                const auto row = s.input.row(static_cast<Eigen::Index>(id));
                double dot = 0, nr = 0, nq = 0;
                for (Eigen::Index j = 0; j < 8; ++j) {
                    dot += row(j) * query(j);
                    nr += row(j) * row(j);
                    nq += query(j) * query(j);
                }
                scan.emplace_back(-dot / std::sqrt(nr * nq), id);
            }
            std::sort(scan.begin(), scan.end());
            const auto got = nearest(s, query, 10);
            REQUIRE(got.size() == 10);
            for (std::size_t i = 0; i < 10; ++i) {
                CHECK(got[i].id == scan[i].second);
                CHECK(got[i].cosine == doctest::Approx(-scan[i].first).epsilon(1e-12));
                if (i) CHECK(got[i - 1].cosine >= got[i].cosine);
            }
        }
    }
    SUBCASE("ties go to the lower id") {
        const auto t = hand_space({{"a", {1, 0}}, {"b", {2, 0}}, {"c", {0, 1}}});
        const auto got = nearest(t, Vector<double>{{1.0, 0.0}}, 2);
        CHECK(got[0].token == "a");
        CHECK(got[1].token == "b");
    }
    SUBCASE("argument errors") {
        CHECK_THROWS_AS(nearest(s, s.vector("w7"), 0), ArgumentError);
        CHECK_THROWS_AS(nearest(s, Vector<double>::Zero(8), 3), UndefinedError);
        CHECK_THROWS_AS(nearest(s, Vector<double>::Ones(3), 3), ArgumentError);
    }
}

TEST_CASE("EMB1 round trip and errors") {
    const auto s = random_space(30, 6, 42, 3);
    std::stringstream buf;
    save_embeddings(s, buf);
    const auto back = load_embeddings<double>(buf);
    CHECK(back.vocab.tokens() == s.vocab.tokens());
    CHECK((back.input - s.input).cwiseAbs().maxCoeff() <= 1e-6);

    const auto as_float = [&] {
        std::stringstream b2;
        save_embeddings(s, b2);
        return load_embeddings<float>(b2);
    }();
    CHECK((as_float.input.cast<double>() - s.input).cwiseAbs().maxCoeff() <= 1e-6);

    const auto text = buf.str();
    std::istringstream truncated(text.substr(0, text.size() / 2));
    CHECK_THROWS_AS(load_embeddings<double>(truncated), ParseError);
    std::istringstream bad_header("3\na 1\n");
    CHECK_THROWS_AS(load_embeddings<double>(bad_header), ParseError);
    std::istringstream short_row("2 2\na 1 2\nb 1\n");
    CHECK_THROWS_AS(load_embeddings<double>(short_row), ParseError);
    std::istringstream extra_row("1 2\na 1 2\nb 1 2\n");
    CHECK_THROWS_AS(load_embeddings<double>(extra_row), ParseError);

    SUBCASE("fixture with header '100 50'") {
        std::ifstream f(CMGEN_TEST_DATA_DIR "/emb_100x50.emb1");
        REQUIRE(f);
        const auto e = load_embeddings<double>(f);
        CHECK(e.size() == 100);
        CHECK(e.dim() == 50);
        CHECK(e.input.allFinite());
    }
}
