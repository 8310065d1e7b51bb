#include "qeuler/text_format.hpp"

#include "qeuler/errors.hpp"

#include <cctype>
#include <map>

namespace qeuler {

namespace {

constexpr unsigned long kMaxExponent = 1UL << 20;

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

class TermParser {
public:
    TermParser(std::string_view text, char var) : var_(var) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
        }
    }

    QPoly parse() {
        if (s_.empty()) fail("empty polynomial");
        std::map<std::size_t, Rat> acc;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [c, deg] = term();
            acc[deg] += sign * c;
        }
        QPoly r;
        if (acc.empty()) return r;
        r.coeffs.assign(acc.rbegin()->first + 1, Rat(0));
        for (auto& [d, c] : acc) r.coeffs[d] = c;
        while (!r.coeffs.empty() && sgn(r.coeffs.back()) == 0) r.coeffs.pop_back();
        return r;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse polynomial '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
    }

    Int integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Int(s_.substr(start, pos_ - start));
    }

    std::pair<Rat, std::size_t> term() {
        Rat c = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int n = integer();
            Int d = 1;
            if (peek() == '/') {
                ++pos_;
                d = integer();
                if (sgn(d) == 0) fail("zero denominator");
            }
            c = Rat(n, d);
            c.canonicalize();
            have_coeff = true;
            if (peek() != '*') return {c, 0};
            ++pos_;
        }
        if (peek() != var_) fail(have_coeff ? "expected variable after '*'" : "expected a term");
        ++pos_;
        std::size_t deg = 1;
        if (peek() == '^') {
            ++pos_;
            const Int e = integer();
            if (e > kMaxExponent) fail("exponent too large");
            deg = e.get_ui();
        }
        return {c, deg};
    }

    std::string s_;
    std::size_t pos_ = 0;
    char var_;
};

}  // namespace

std::string to_string(const QPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        const Rat& c = p.coeffs[i];
        if (sgn(c) == 0) continue;
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        const Rat mag = abs(c);
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string to_string(const RatFunc& r) {
    return to_string(r.numerator()) + " / " + to_string(r.denominator());
}

std::string to_string(const CycloRF& a) {
    std::string out;
    for (std::size_t j = 0; j < a.nums().size(); ++j) {
        if (j) out += "; ";
        out += to_string(a.coeff(j));
    }
    return out;
}

QPoly parse_qpoly(std::string_view text, char var) { return TermParser(text, var).parse(); }

RatFunc parse_ratfunc(std::string_view text) {
    const auto split = text.find(" / ");
    if (split == std::string_view::npos) {
        auto [z, d] = clear_denominators(parse_qpoly(text));
        return RatFunc(std::move(z), ZPoly::constant(d));
    }
    const auto [nz, nd] = clear_denominators(parse_qpoly(text.substr(0, split)));
    const auto [dz, dd] = clear_denominators(parse_qpoly(text.substr(split + 3)));
    if (dz.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return RatFunc(nz * dd, dz * nd);
}

CycloRF parse_cyclo(std::string_view text, CycloRing ring) {
    std::vector<RatFunc> coeffs;
    while (true) {
        const auto semi = text.find(';');
        coeffs.push_back(parse_ratfunc(strip(text.substr(0, semi))));
        if (semi == std::string_view::npos) break;
        text.remove_prefix(semi + 1);
    }
    if (coeffs.size() != ring.phi()) {
        throw ParseError("expected " + std::to_string(ring.phi()) + " coefficients, got " +
                         std::to_string(coeffs.size()));
    }
    return CycloRF::from_coeffs(ring, coeffs);
}

Rat parse_rat(std::string_view text) {
    const QPoly p = parse_qpoly(text);
    if (p.degree() > 0) throw ParseError("expected a rational number, got '" + std::string(text) + "'");
    return p.is_zero() ? Rat(0) : p.coeffs[0];
}

}  // namespace qeuler
