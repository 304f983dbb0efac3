#include "rflamp/poly_text.hpp"

#include <cctype>
#include <map>

namespace rflamp {

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, i); }

    std::int64_t digits() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected digits");
        std::int64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > (std::int64_t(1) << 40)) fail("number too large");
            ++i;
        }
        return v;
    }
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, Prime p) {
    Cursor c{text};
    std::map<std::int64_t, std::int64_t> terms;  // exponent -> accumulated coefficient
    if (c.done()) c.fail("empty polynomial");

    int sign = 1;
    if (c.peek() == '-') {
        sign = -1;
        ++c.i;
    } else if (c.peek() == '+') {
        ++c.i;
    }
    while (true) {
        if (c.done()) c.fail("expected a term");
        std::int64_t coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = c.digits();
            have_coeff = true;
        }
        std::int64_t expo = 0;
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == 't') {
            ++c.i;
            expo = 1;
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                c.skip_ws();
                std::int64_t esign = 1;
                if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) {
                    if (c.s[c.i] == '-') esign = -1;
                    ++c.i;
                }
                expo = esign * c.digits();
            }
        } else if (!have_coeff) {
            c.fail("expected a coefficient or 't'");
        }
        terms[expo] += sign * coeff;

        if (c.done()) break;
        char op = c.peek();
        if (op == '+')
            sign = 1;
        else if (op == '-')
            sign = -1;
        else
            c.fail(std::string("unexpected character '") + op + "'");
        ++c.i;
    }

    LaurentPoly out = LaurentPoly::zero(p);
    std::int64_t vmin = 0;
    if (!terms.empty()) vmin = terms.begin()->first;
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(terms.rbegin()->first - vmin) + 1, 0);
    for (const auto& [e, v] : terms) coeffs[static_cast<std::size_t>(e - vmin)] = v;
    return LaurentPoly(Poly(p, std::move(coeffs)), vmin);
}

Poly parse_poly(std::string_view text, Prime p) {
    LaurentPoly l = parse_laurent(text, p);
    if (l.valuation() < 0) throw parse_error("negative exponent where a polynomial is required", 0);
    return shift_up(l.unit_part(), static_cast<std::size_t>(l.valuation()));
}

static void append_term(std::string& out, coeff_t c, std::int64_t e) {
    if (!out.empty()) out += '+';
    if (e == 0) {
        out += std::to_string(c);
        return;
    }
    if (c != 1) out += std::to_string(c);
    out += 't';
    if (e != 1) {
        out += '^';
        out += std::to_string(e);
    }
}

std::string format_laurent(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::int64_t e = f.valuation(); e <= f.top_exponent(); ++e)
        if (coeff_t c = f.coeff_at(e)) append_term(out, c, e);
    return out;
}

std::string format_poly(const Poly& f) { return format_laurent(LaurentPoly(f)); }

LampElement parse_element(std::string_view text, Prime p) {
    Cursor c{text};
    if (c.done() || c.peek() != '(') c.fail("expected '('");
    ++c.i;
    std::size_t depth_start = c.i;
    std::size_t comma = std::string_view::npos;
    for (std::size_t j = c.i; j < text.size(); ++j) {
        if (text[j] == ',') {
            comma = j;
            break;
        }
    }
    if (comma == std::string_view::npos) throw parse_error("expected ','", text.size());
    LaurentPoly lamp = parse_laurent(text.substr(depth_start, comma - depth_start), p);
    Cursor tail{text, comma + 1};
    tail.skip_ws();
    std::int64_t sign = 1;
    if (tail.i < text.size() && (text[tail.i] == '-' || text[tail.i] == '+')) {
        if (text[tail.i] == '-') sign = -1;
        ++tail.i;
    }
    std::int64_t k = sign * tail.digits();
    tail.skip_ws();
    if (tail.i >= text.size() || text[tail.i] != ')') tail.fail("expected ')'");
    ++tail.i;
    if (!tail.done()) tail.fail("trailing characters after element");
    return {lamp, k};
}

std::string format_element(const LampElement& x) {
    return "(" + format_laurent(x.lamp) + ", " + std::to_string(x.shift) + ")";
}

std::string FactoredPoly::to_string() const {
    std::string out;
    if (unit != 1 || factors.empty()) out = std::to_string(unit);
    for (const auto& [g, e] : factors) {
        if (!out.empty()) out += " * ";
        std::string s = format_poly(g);
        bool atom = (g.length() <= 2 && g.leading() == 1 && g.coeff(0) == 0);  // bare t
        out += atom ? s : "(" + s + ")";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace rflamp
