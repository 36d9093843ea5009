#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hstar/errors.hpp"
#include "hstar/fiber.hpp"
#include "hstar/hadamard.hpp"
#include "hstar/parser.hpp"

using namespace hstar;

namespace {

Polynomial pp(const std::string& text, const Ring& r) { return parse_polynomial(text, r); }

Ideal ideal_of(const Ring& r, const std::vector<std::string>& texts) {
    std::vector<Polynomial> gens;
    for (const auto& t : texts) gens.push_back(pp(t, r));
    return Ideal(r, gens);
}

std::vector<std::string> gen_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.generators()) out.push_back(to_string(g));
    return out;
}

ProjectivePoint pt(const Ring& r, std::vector<long> cs) {
    std::vector<FieldElement> coords;
    for (long c : cs) coords.emplace_back(Rational(c));
    return ProjectivePoint(r, coords);
}

Ring p3ring() { return Ring({"x", "y", "z", "w"}); }

Ideal quadratic() { return ideal_of(p3ring(), {"x^2 - x*y - y*z"}); }

} // namespace

TEST_CASE("coordinate saturation check") {
    Ring r = p3ring();
    CHECK(check_coordinate_saturated(quadratic()));
    CHECK(check_coordinate_saturated(Ideal::zero(r)));

    Ring r2({"x", "y"});
    CHECK(!check_coordinate_saturated(ideal_of(r2, {"x"})));
    CHECK(!check_coordinate_saturated(ideal_of(r2, {"x*y"})));
    CHECK(!check_coordinate_saturated(ideal_of(r2, {"x^2 - x*y"})));
    CHECK(check_coordinate_saturated(ideal_of(r2, {"x - y"})));
    CHECK_THROWS_AS(check_coordinate_saturated(ideal_of(r2, {"x^2 - y"})), validation_error);
}

TEST_CASE("fiber of the quadratic at an integer point") {
    Ring r = p3ring();
    Ideal I = quadratic();
    ProjectivePoint p = pt(r, {1, 2, 3, 4});

    for (const MonomialOrder& ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
        FiberReport rep = fiber_ideal(I, p, ord);
        CHECK(rep.I_saturated);
        CHECK(rep.monomial_free);
        CHECK(rep.min_gb_degree_ok);
        CHECK(rep.J_saturated);
        CHECK(rep.status == FiberStatus::certified);
        CHECK(rep.details.find("certified") != std::string::npos);
        REQUIRE(rep.fiber.has_value());
        CHECK(gen_strings(*rep.fiber) ==
              std::vector<std::string>{"x^2 - 1/2*x*y", "x^2 - 1/6*y*z"});
        REQUIRE(rep.gb.elements.size() == 1);
        CHECK(to_string(rep.gb.elements[0]) == "x^2 - x*y - y*z");
    }
}

TEST_CASE("every point of the computed fiber maps to the same product") {
    Ring r = p3ring();
    Ideal I = quadratic();
    ProjectivePoint p = pt(r, {1, 2, 3, 4});
    FiberReport rep = fiber_ideal(I, p, MonomialOrder::grevlex());
    REQUIRE(rep.fiber.has_value());
    // p itself lies on the fiber variety
    CHECK(verify_point_on_variety(p, *rep.fiber));
    // a handful of other points of V(J) give the same transformed ideal
    for (std::vector<long> cs : {std::vector<long>{1, 2, 3, 5}, {1, 2, 3, 1},
                                 {2, 4, 6, 1}, {3, 6, 9, 7}}) {
        ProjectivePoint q = pt(r, cs);
        CHECK(verify_point_on_variety(q, *rep.fiber));
        CHECK(verify_fiber(I, p, q));
    }
    CHECK(!verify_fiber(I, p, ProjectivePoint::all_ones(r)));
    CHECK(!verify_fiber(I, p, pt(r, {1, 2, 4, 4})));
}

TEST_CASE("fiber at the all-ones point of a pure difference ideal") {
    Ring r({"e1", "e2", "e3", "e4"});
    Ideal I = ideal_of(r, {"e1*e3 - e2*e4"});
    FiberReport rep = fiber_ideal(I, ProjectivePoint::all_ones(r), MonomialOrder::grevlex());
    CHECK(rep.status == FiberStatus::certified);
    REQUIRE(rep.fiber.has_value());
    CHECK(gen_strings(*rep.fiber) == std::vector<std::string>{"e1*e3 - e2*e4"});
}

TEST_CASE("hypothesis failures are reported, not computed around") {
    Ring r2({"x", "y"});
    FiberReport principal = fiber_ideal(ideal_of(r2, {"x"}), ProjectivePoint::all_ones(r2),
                                        MonomialOrder::grevlex());
    CHECK(principal.status == FiberStatus::hypothesis_failed);
    CHECK(!principal.I_saturated);
    CHECK(!principal.monomial_free);
    CHECK(!principal.min_gb_degree_ok);
    CHECK(!principal.fiber.has_value());
    CHECK(principal.details.find("hypothesis failed") != std::string::npos);

    Ring r3({"x", "y", "z"});
    FiberReport linear = fiber_ideal(ideal_of(r3, {"x - y"}), pt(r3, {1, 1, 2}),
                                     MonomialOrder::grevlex());
    CHECK(linear.status == FiberStatus::hypothesis_failed);
    CHECK(linear.I_saturated);
    CHECK(linear.monomial_free);
    CHECK(!linear.min_gb_degree_ok);
    CHECK(linear.details.find("x - y") != std::string::npos);

    FiberReport unsat = fiber_ideal(ideal_of(r2, {"x^2 - x*y"}), ProjectivePoint::all_ones(r2),
                                    MonomialOrder::grevlex());
    CHECK(unsat.status == FiberStatus::hypothesis_failed);
    CHECK(!unsat.I_saturated);
    CHECK(unsat.monomial_free);
    CHECK(unsat.min_gb_degree_ok);
}

TEST_CASE("fiber construction validation") {
    Ring r = p3ring();
    CHECK_THROWS_AS(fiber_ideal(quadratic(), pt(r, {0, 1, 1, 1}), MonomialOrder::grevlex()),
                    validation_error);
    CHECK_THROWS_AS(fiber_ideal(Ideal::zero(r), ProjectivePoint::all_ones(r),
                                MonomialOrder::grevlex()),
                    validation_error);
    CHECK_THROWS_AS(fiber_ideal(ideal_of(r, {"2"}), ProjectivePoint::all_ones(r),
                                MonomialOrder::grevlex()),
                    validation_error);
}

TEST_CASE("verify_fiber input handling") {
    Ring r = p3ring();
    Ideal I = quadratic();
    ProjectivePoint p = pt(r, {1, 2, 3, 4});
    CHECK(verify_fiber(I, p, p));
    CHECK(!verify_fiber(I, p, pt(r, {0, 1, 1, 1})));  // zero coordinate: not in the fiber
    CHECK_THROWS_AS(verify_fiber(I, pt(r, {0, 1, 1, 1}), p), validation_error);
}
