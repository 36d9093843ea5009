#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hstar/cyclotomic.hpp"
#include "hstar/errors.hpp"
#include "hstar/parser.hpp"
#include "hstar/polynomial.hpp"
#include "hstar/ring.hpp"
#include "hstar/unipoly.hpp"
#include "hstar/verify.hpp"

using namespace hstar;

TEST_CASE("rational construction and canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::from_string("-4/7").str() == "-4/7");
    CHECK(Rational::from_string("12") == Rational(12));
    CHECK_THROWS_AS(Rational(1, 0), validation_error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("a"), parse_error);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(0).inverse(), validation_error);
}

TEST_CASE("unipoly division, xgcd, interpolation") {
    // (t^2 - 1) = (t + 1)(t - 1) + 0
    UniPoly num{{Rational(-1), Rational(0), Rational(1)}};
    UniPoly den{{Rational(1), Rational(1)}};
    auto [q, r] = divmod(num, den);
    CHECK(q.coeffs == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(r.coeffs.empty());

    // gcd(t^2 - 1, t^2 - 2t + 1) = t - 1, monic
    UniPoly b{{Rational(1), Rational(-2), Rational(1)}};
    XgcdResult x = xgcd(num, b);
    CHECK(x.g.coeffs == std::vector<Rational>{Rational(-1), Rational(1)});

    // points on 3t^2 + 1
    UniPoly p = interpolate({{Rational(0), Rational(1)},
                             {Rational(1), Rational(4)},
                             {Rational(2), Rational(13)}});
    CHECK(p.coeffs == std::vector<Rational>{Rational(1), Rational(0), Rational(3)});
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1).coeffs == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(cyclotomic_polynomial(2).coeffs == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(cyclotomic_polynomial(4).coeffs ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(cyclotomic_polynomial(6).coeffs ==
          std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
    CHECK(cyclotomic_polynomial(12).coeffs ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)});
}

TEST_CASE("roots of unity have exact multiplicative order") {
    for (int m = 1; m <= 12; ++m) {
        FieldElement z = FieldElement(CycloElement::zeta(m));
        FieldElement acc = FieldElement::one();
        for (int j = 1; j < m; ++j) {
            acc = acc * z;
            CHECK(!acc.is_one());
        }
        CHECK((acc * z).is_one());
    }
}

TEST_CASE("cyclotomic relations and demotion to rationals") {
    FieldElement z4 = FieldElement(CycloElement::zeta(4));
    CHECK(z4 * z4 == FieldElement(Rational(-1)));
    CHECK((z4 * z4).is_rational());

    FieldElement z3 = FieldElement(CycloElement::zeta(3));
    CHECK(z3 * z3 + z3 + FieldElement::one() == FieldElement::zero());

    FieldElement z6 = FieldElement(CycloElement::zeta(6));
    CHECK(z6 * z6 - z6 + FieldElement::one() == FieldElement::zero());
}

TEST_CASE("field axioms on random elements") {
    Rng rng(1);
    auto random_rat = [&rng] {
        return Rational(rng.int_in(-9, 9), rng.int_in(1, 9));
    };
    for (int k = 0; k < 200; ++k) {
        Rational a = random_rat(), b = random_rat(), c = random_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
    for (int k = 0; k < 60; ++k) {
        int m = static_cast<int>(rng.below(12)) + 1;
        auto random_cyclo = [&] {
            CycloElement e = CycloElement::zero(m);
            FieldElement acc = FieldElement(e);
            FieldElement z = FieldElement(CycloElement::zeta(m));
            FieldElement zp = FieldElement::one();
            int phi = euler_totient(m);
            for (int j = 0; j < phi; ++j) {
                acc = acc + FieldElement(random_rat()) * zp;
                zp = zp * z;
            }
            return acc;
        };
        FieldElement a = random_cyclo(), b = random_cyclo(), c = random_cyclo();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK((a * a.inverse()).is_one());
            CHECK(a.pow(-2) == (a * a).inverse());
        }
    }
}

TEST_CASE("ring validation") {
    CHECK_THROWS_AS(Ring({"x", "x"}), validation_error);
    CHECK_THROWS_AS(Ring({"zeta"}), validation_error);
    CHECK_THROWS_AS(Ring({"1x"}), validation_error);
    CHECK_THROWS_AS(Ring({""}), validation_error);
    Ring r({"x", "y_2", "Az"});
    CHECK(r.index_of("y_2") == 1);
    CHECK(!r.index_of("w").has_value());

    auto names = fresh_names("y", 3, {"y1", "q"});
    CHECK(names.size() == 3);
    for (const auto& n : names) CHECK(n != "y1");
}

TEST_CASE("monomial order comparisons") {
    MonomialOrder lex = MonomialOrder::lex();
    MonomialOrder grlex = MonomialOrder::grlex();
    MonomialOrder grevlex = MonomialOrder::grevlex();

    CHECK(lex.compare({1, 0}, {0, 5}) > 0);
    CHECK(grlex.compare({1, 0}, {0, 5}) < 0);
    CHECK(grlex.compare({1, 1}, {0, 2}) > 0);

    // x^2 > x*y > y*z under graded-reverse-lex in (x, y, z, w)
    CHECK(grevlex.compare({2, 0, 0, 0}, {1, 1, 0, 0}) > 0);
    CHECK(grevlex.compare({1, 1, 0, 0}, {0, 1, 1, 0}) > 0);
    // grlex and grevlex differ: x*z^2 vs y^2*z in (x, y, z)
    CHECK(grlex.compare({1, 0, 2}, {0, 2, 1}) > 0);
    CHECK(grevlex.compare({1, 0, 2}, {0, 2, 1}) < 0);

    MonomialOrder blk = MonomialOrder::block(2, MonomialOrder::grevlex());
    CHECK(blk.compare({0, 1, 5, 5}, {1, 0, 0, 0}) < 0);
    CHECK(blk.compare({0, 0, 2, 0}, {0, 0, 1, 1}) != 0);

    CHECK(MonomialOrder::parse("grevlex") == grevlex);
    CHECK_THROWS_AS(MonomialOrder::parse("bogus"), validation_error);
    CHECK_THROWS_AS(lex.compare({1, 0}, {1, 0, 0}), validation_error);
}

TEST_CASE("monomial order axioms on random exponents") {
    Rng rng(7);
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::grlex(),
                                         MonomialOrder::grevlex(),
                                         MonomialOrder::block(2, MonomialOrder::grevlex())};
    for (const auto& ord : orders) {
        for (int k = 0; k < 300; ++k) {
            auto draw = [&rng] {
                Exponents e(4);
                for (auto& x : e) x = static_cast<int>(rng.below(5));
                return e;
            };
            Exponents a = draw(), b = draw(), c = draw();
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            CHECK(ord.compare(exps_add(a, c), exps_add(b, c)) == ab);  // multiplicativity
            Exponents zero(4, 0);
            if (a != zero) CHECK(ord.compare(a, zero) > 0);  // 0 is minimal
        }
    }
}

TEST_CASE("polynomial arithmetic") {
    Ring r({"x", "y", "z"});
    Polynomial x = Polynomial::variable(r, 0);
    Polynomial y = Polynomial::variable(r, 1);
    Polynomial z = Polynomial::variable(r, 2);

    Polynomial sq = (x + y).pow(2);
    CHECK(sq == x * x + Polynomial::constant(r, FieldElement(Rational(2))) * x * y + y * y);
    CHECK(sq.degree() == 2);
    CHECK(sq.is_homogeneous());
    CHECK(!(sq + x).is_homogeneous());
    CHECK((x * (x + y) - x * x) == x * y);
    CHECK((x - x).is_zero());
    CHECK((x - x).degree() == -1);

    Polynomial f = x * x * y - z * z * z;
    CHECK(f.leading_term(MonomialOrder::lex()).exps == Exponents{2, 1, 0});
    CHECK(f.evaluate({FieldElement(Rational(1)), FieldElement(Rational(2)),
                      FieldElement(Rational(1))}) == FieldElement(Rational(1)));
    CHECK_THROWS_AS(f.pow(-1), validation_error);
    CHECK_THROWS_AS((x - x).leading_term(MonomialOrder::lex()), validation_error);

    // duplicate exponent rows merge; cancellation drops terms
    Polynomial g = Polynomial::from_terms(
        r, {Term{FieldElement(Rational(2)), {1, 0, 0}}, Term{FieldElement(Rational(-2)), {1, 0, 0}}});
    CHECK(g.is_zero());
}

TEST_CASE("polynomial mapping between rings") {
    Ring r({"x", "y"});
    Ring s({"u", "y", "x"});
    Polynomial f = parse_polynomial("x^2 - 3*y", r);
    Polynomial g = f.map_to(s, {2, 1});
    CHECK(g == parse_polynomial("x^2 - 3*y", s));

    // repeated targets accumulate exponents
    Ring t({"u"});
    Polynomial h = parse_polynomial("x*y", r).map_to(t, {0, 0});
    CHECK(h == parse_polynomial("u^2", t));

    Ring rw({"x", "y"}, FieldSpec::cyclotomic(4));
    Polynomial fw = f.map_to(rw, {0, 1});  // Q embeds into Q(zeta_4)
    CHECK(to_string(fw) == "x^2 - 3*y");
}

TEST_CASE("parser accepts the documented grammar") {
    Ring r({"x", "y", "z"});
    CHECK(to_string(parse_polynomial("x^3 - 2*y^2*z", r)) == "x^3 - 2*y^2*z");
    CHECK(to_string(parse_polynomial("-x + 1/2", r)) == "-x + 1/2");
    CHECK(to_string(parse_polynomial("3/4*x*y - z", r)) == "3/4*x*y - z");
    CHECK(parse_polynomial("0", r).is_zero());
    CHECK(parse_polynomial("x + 0*y", r) == parse_polynomial("x", r));
    CHECK(parse_polynomial("2*x - x - x", r).is_zero());
    CHECK(parse_polynomial("+x", r) == parse_polynomial("x", r));

    Ring rc({"x", "y"}, FieldSpec::cyclotomic(4));
    CHECK(to_string(parse_polynomial("zeta*x + y", rc)) == "zeta*x + y");
    CHECK(to_string(parse_polynomial("zeta^2*x", rc)) == "-x");
    CHECK(to_string(parse_polynomial("x - 2*zeta^3*y", rc)) == "x + 2*zeta*y");
}

TEST_CASE("parser rejects malformed input with positions") {
    Ring r({"x", "y"});
    CHECK_THROWS_AS(parse_polynomial("", r), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x +", r), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x^0", r), parse_error);
    CHECK_THROWS_AS(parse_polynomial("1/0*x", r), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x*", r), parse_error);
    CHECK_THROWS_AS(parse_polynomial("zeta*x", r), parse_error);

    try {
        parse_polynomial("x + q", r);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() == 5);
    }
    try {
        parse_polynomial("x^1000001", r);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("print-parse round trip on random polynomials") {
    Rng rng(11);
    Ring rq({"x", "y", "z"});
    Ring rc({"x", "y"}, FieldSpec::cyclotomic(6));
    for (int k = 0; k < 150; ++k) {
        std::vector<Term> terms;
        size_t nt = 1 + rng.below(5);
        for (size_t i = 0; i < nt; ++i) {
            Exponents e(3);
            for (auto& x : e) x = static_cast<int>(rng.below(4));
            terms.push_back(Term{FieldElement(Rational(rng.int_in(-5, 5), rng.int_in(1, 4))), e});
        }
        Polynomial f = Polynomial::from_terms(rq, terms);
        if (f.is_zero()) continue;
        CHECK(parse_polynomial(to_string(f), rq) == f);
    }
    FieldElement z = FieldElement(CycloElement::zeta(6));
    for (int k = 0; k < 80; ++k) {
        std::vector<Term> terms;
        size_t nt = 1 + rng.below(4);
        for (size_t i = 0; i < nt; ++i) {
            Exponents e(2);
            for (auto& x : e) x = static_cast<int>(rng.below(3));
            FieldElement c = FieldElement(Rational(rng.int_in(-3, 3)));
            c = c + FieldElement(Rational(rng.int_in(-3, 3))) * z.pow(rng.int_in(0, 5));
            terms.push_back(Term{c, e});
        }
        Polynomial f = Polynomial::from_terms(rc, terms);
        if (f.is_zero()) continue;
        CHECK(parse_polynomial(to_string(f), rc) == f);
    }
}

TEST_CASE("field element parsing") {
    CHECK(parse_field_element("-4/7", FieldSpec::rationals()) == FieldElement(Rational(-4, 7)));
    FieldSpec c4 = FieldSpec::cyclotomic(4);
    CHECK(parse_field_element("zeta", c4) == FieldElement(CycloElement::zeta(4)));
    CHECK(parse_field_element("1 + zeta", c4) ==
          FieldElement::one() + FieldElement(CycloElement::zeta(4)));
    CHECK_THROWS_AS(parse_field_element("zeta", FieldSpec::rationals()), parse_error);
    CHECK_THROWS_AS(parse_field_element("x", FieldSpec::rationals()), parse_error);
}
