#include <doctest.h>

#include "test_util.hpp"

using namespace rknot;
using namespace rknot::testutil;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

// (8t+7)(5t-4)(15t^2-14)(2t^2-1)(3t^2-1)(15t^2-1): the published degree-10
// height polynomial over the 8-strand diagram.
Polynomial published_61_height() {
    return poly({7, 8}) * poly({-4, 5}) * poly({-14, 0, 15}) * poly({-1, 0, 2}) *
           poly({-1, 0, 3}) * poly({-1, 0, 15});
}

} // namespace

TEST_CASE("conway form recovered from explicit curves") {
    Parametrization t27{3, 10, -chebyshev_poly(11)};
    CHECK(conway_from_curve(t27).entries ==
          std::vector<int>{-1, -1, -1, 1, 1, 1, -1, -1, -1});
    CHECK(identify(t27) == canonicalize(frac(7, 1)));

    Parametrization trefoil{3, 4, chebyshev_poly(5)};
    CHECK(conway_from_curve(trefoil).entries == std::vector<int>{1, 1, 1});

    // figure-eight on the 4-strand curve: t(11t^2-10)(5t^2-4)(5t^2-1)
    Polynomial f8 = poly({0, 1}) * poly({-10, 0, 11}) * poly({-4, 0, 5}) * poly({-1, 0, 5});
    Parametrization fig{4, 5, f8};
    CHECK(identify(fig) == canonicalize(frac(5, 2)));
}

TEST_CASE("identify published parametrizations") {
    // The degree-10 witness realizes the Gauss labels in the reversed
    // parameter order, so it lands on the mirror side of the 6_1 pair; the
    // class pair is still the right one.
    Parametrization p61{3, 8, published_61_height()};
    CHECK(equivalent(identify(p61), canonicalize(frac(9, 2))) != Equivalence::different);

    Parametrization h357{3, 5, chebyshev_poly(7)};
    CHECK(identify(h357) == canonicalize(frac(5, 2)));

    // 3-twist knot: t(4t+3)(3t+1)(6t-5)(12t^2-11)(2t^2-1) of degree (3,7,9)
    Polynomial c52 = poly({0, 1}) * poly({3, 4}) * poly({1, 3}) * poly({-5, 6}) *
                     poly({-11, 0, 12}) * poly({-1, 0, 2});
    CHECK(identify(Parametrization{3, 7, c52}) == canonicalize(frac(7, 2)));

    // stevedore: t(34t^2-33)(2t^2-1)(3t^2-1)(4t^2-1)(6t^2-1) of degree (4,9,11)
    Polynomial c61 = poly({0, 1}) * poly({-33, 0, 34}) * poly({-1, 0, 2}) * poly({-1, 0, 3}) *
                     poly({-1, 0, 4}) * poly({-1, 0, 6});
    CHECK(identify(Parametrization{4, 9, c61}) == canonicalize(frac(9, 2)));

    // T-bar(2,5) as (4,5,7): t(2t^2-1)(3t^2-1)(5t^2-4)
    Polynomial c25 = poly({0, 1}) * poly({-1, 0, 2}) * poly({-1, 0, 3}) * poly({-4, 0, 5});
    CHECK(identify(Parametrization{4, 5, c25}) == canonicalize(frac(5, 4)));

    // T(2,5) over the 7-strand curve: t(21t^2-20)(4t^2-1) of degree (4,7,5)
    Polynomial ct5 = poly({0, 1}) * poly({-20, 0, 21}) * poly({-1, 0, 4});
    CHECK(identify(Parametrization{4, 7, ct5}) == canonicalize(frac(5, 6)));
}

TEST_CASE("verify_harmonic agrees with the closed forms") {
    for (int n = 1; n <= 4; ++n) {
        TwoBridgeKnot torus = canonicalize(Fraction(2L * n + 1, 1));
        CHECK(verify_harmonic(make_harmonic(3, 3 * n + 2, 3 * n + 1)) == torus);
    }
    CHECK(verify_harmonic(make_harmonic(4, 5, 7)) == canonicalize(frac(7, 2)));
    CHECK(verify_harmonic(make_harmonic(3, 5, 7)) == canonicalize(frac(5, 2)));
    CHECK(verify_harmonic(make_harmonic(3, 4, 5)) == h3_class(4, 5));
}

TEST_CASE("round trip through parametrize and identify") {
    for (const TwoBridgeKnot& k : knots_up_to(6)) {
        CHECK(identify(parametrize(k, 3)) == k);
        CHECK(identify(parametrize(k, 4)) == k);
    }
}

TEST_CASE("verifier refuses uncertifiable curves") {
    // 16t^4 - 16t^2 + 1 vanishes at cos(pi/12), a crossing parameter of C(3,4)
    Parametrization degenerate{3, 4, poly({1, 0, -16, 0, 16})};
    CHECK_THROWS_AS(conway_from_curve(degenerate), DomainError);

    // a = 4 demands an odd height polynomial
    Parametrization even_z{4, 5, poly({-1, 0, 2})};
    CHECK_THROWS_AS(conway_from_curve(even_z), DomainError);

    Parametrization zero_z{3, 4, Polynomial()};
    CHECK_THROWS_AS(conway_from_curve(zero_z), DomainError);
}

TEST_CASE("parametrization json round trip") {
    TwoBridgeKnot k = canonicalize(frac(9, 2));
    Parametrization p = parametrize(k, 4);
    nlohmann::json j = parametrization_to_json(p);
    CHECK(j.at("a") == 4);
    CHECK(j.at("b") == 9);
    CHECK(j.at("degree_triple") == nlohmann::json({4, 9, 11}));
    Parametrization q = parametrization_from_json(j);
    CHECK(q.z == p.z);
    CHECK(identify(q) == k);

    nlohmann::json rep = identification_report(p);
    CHECK(rep.at("alpha") == "9");
    CHECK(rep.at("beta") == "2");
    CHECK(rep.at("crossing_number") == "6");
    CHECK(rep.contains("conway_form"));
}

TEST_CASE("svg rendering emits a well-formed drawing") {
    Parametrization p = parametrize(canonicalize(frac(3, 1)), 3);
    std::string svg = render_svg(p);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);
    // under-strand gaps: more than one path segment
    size_t first = svg.find("<path");
    CHECK(svg.find("<path", first + 1) != std::string::npos);
}
