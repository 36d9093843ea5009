#include "hstar/parser.hpp"

#include <cctype>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Ring& ring) : text_(text), ring_(ring) {}

    Polynomial run() {
        skip_ws();
        if (eof()) fail("empty polynomial text", 1);
        std::vector<Term> terms;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (get() == '-') sign = -1;
            skip_ws();
        }
        parse_term(sign, terms);
        skip_ws();
        while (!eof()) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'", pos_ + 1);
            ++pos_;
            skip_ws();
            parse_term(op == '-' ? -1 : 1, terms);
            skip_ws();
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

private:
    const std::string& text_;
    const Ring& ring_;
    size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg, size_t position1) const {
        throw parse_error(msg, position1);
    }

    Rational parse_unsigned_integer() {
        size_t start = pos_;
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer", pos_ + 1);
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        (void)start;
        return Rational::from_string(digits);
    }

    long parse_positive_exponent() {
        size_t at = pos_ + 1;
        Rational n = parse_unsigned_integer();
        if (n.is_zero()) fail("exponent must be positive", at);
        mpz_class z = n.numerator();
        if (!z.fits_slong_p() || z.get_si() > 1000000)
            fail("exponent too large", at);
        return z.get_si();
    }

    std::string parse_identifier() {
        if (eof() || !std::isalpha(static_cast<unsigned char>(peek())))
            fail("expected identifier", pos_ + 1);
        std::string id;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) id += get();
        return id;
    }

    void parse_term(int sign, std::vector<Term>& out) {
        Rational coeff(sign);
        long zeta_pow = 0;
        Exponents exps(ring_.nvars(), 0);
        bool saw_factor = false;

        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            size_t at = pos_ + 1;
            Rational num = parse_unsigned_integer();
            skip_ws();
            if (!eof() && peek() == '/') {
                ++pos_;
                skip_ws();
                size_t dat = pos_ + 1;
                Rational den = parse_unsigned_integer();
                if (den.is_zero()) fail("denominator must be positive", dat);
                num = num / den;
            }
            (void)at;
            coeff = coeff * num;
            saw_factor = true;
            skip_ws();
            if (eof() || peek() != '*') {
                emit(coeff, zeta_pow, exps, out);
                return;
            }
            ++pos_;
            skip_ws();
        }

        for (;;) {
            size_t at = pos_ + 1;
            std::string id = parse_identifier();
            long e = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                skip_ws();
                e = parse_positive_exponent();
                skip_ws();
            }
            if (id == "zeta") {
                if (!ring_.field().is_cyclotomic)
                    fail("'zeta' is only valid over a cyclotomic field", at);
                zeta_pow += e;
            } else {
                auto idx = ring_.index_of(id);
                if (!idx) fail("unknown variable '" + id + "'", at);
                exps[*idx] += static_cast<int>(e);
            }
            saw_factor = true;
            if (eof() || peek() != '*') break;
            ++pos_;
            skip_ws();
        }
        if (!saw_factor) fail("expected term", pos_ + 1);
        emit(coeff, zeta_pow, exps, out);
    }

    void emit(const Rational& coeff, long zeta_pow, Exponents exps, std::vector<Term>& out) {
        FieldElement c(coeff);
        if (zeta_pow > 0) {
            CycloElement z = CycloElement::zeta(ring_.field().cyclotomic_order);
            c = c * FieldElement(z.pow(zeta_pow));
        }
        out.push_back(Term{std::move(c), std::move(exps)});
    }
};

// One printable component: q * zeta^zpow * X^exps with rational q.
struct PrintPiece {
    Rational q;
    long zpow;
    const Exponents* exps;
};

void append_piece(std::string& out, bool first, const PrintPiece& piece,
                  const std::vector<std::string>& vars) {
    Rational q = piece.q;
    if (first) {
        if (q.sign() < 0) {
            out += "-";
            q = -q;
        }
    } else {
        out += q.sign() < 0 ? " - " : " + ";
        if (q.sign() < 0) q = -q;
    }
    std::vector<std::string> factors;
    bool has_tail = piece.zpow > 0;
    for (size_t i = 0; i < vars.size(); ++i)
        if ((*piece.exps)[i] > 0) has_tail = true;
    if (!q.is_one() || !has_tail) factors.push_back(q.str());
    if (piece.zpow == 1)
        factors.push_back("zeta");
    else if (piece.zpow > 1)
        factors.push_back("zeta^" + std::to_string(piece.zpow));
    for (size_t i = 0; i < vars.size(); ++i) {
        int e = (*piece.exps)[i];
        if (e == 1)
            factors.push_back(vars[i]);
        else if (e > 1)
            factors.push_back(vars[i] + "^" + std::to_string(e));
    }
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i];
    }
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    return Parser(text, ring).run();
}

FieldElement parse_field_element(const std::string& text, const FieldSpec& field) {
    Ring scalar_ring({}, field);
    Polynomial p = parse_polynomial(text, scalar_ring);
    if (p.is_zero()) return FieldElement::zero();
    return p.terms()[0].coeff;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const auto& vars = p.ring().vars();
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::vector<PrintPiece> pieces;
        if (t.coeff.is_rational()) {
            pieces.push_back(PrintPiece{t.coeff.rational(), 0, &t.exps});
        } else {
            const auto& cs = t.coeff.cyclo().coeffs();
            for (size_t j = 0; j < cs.size(); ++j)
                if (!cs[j].is_zero())
                    pieces.push_back(PrintPiece{cs[j], static_cast<long>(j), &t.exps});
        }
        for (const auto& piece : pieces) {
            append_piece(out, first, piece, vars);
            first = false;
        }
    }
    return out;
}

std::string to_string(const FieldElement& c) {
    Ring scalar_ring({}, c.is_rational() ? FieldSpec::rationals()
                                         : FieldSpec::cyclotomic(c.cyclo().order()));
    return to_string(Polynomial::constant(scalar_ring, c));
}

} // namespace hstar
