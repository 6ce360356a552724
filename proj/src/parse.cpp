#include "ritt/parse.hpp"

#include <cctype>
#include <sstream>

namespace ritt {

std::string to_string(const Monomial& m, const Ring& ring) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : m.entries()) {
        if (!first) os << "*";
        os << ring.family_name(v.family) << "_" << v.jet;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string to_string(const DiffPoly& p, const Ring& ring) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending order: leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.is_one()) os << rat_to_string(a);
        else if (a == 1) os << to_string(m, ring);
        else os << rat_to_string(a) << "*" << to_string(m, ring);
        first = false;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + why);
    }

    std::string integer_digits() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return s.substr(start, i - start);
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '\''))
            ++i;
        if (i == start) fail("expected identifier");
        return s.substr(start, i - start);
    }
};

// factor := digits ('/' digits)? | name '_' jet ('^' exp)?
// term   := factor ('*' factor)*
void parse_term(Cursor& cur, const Ring& ring, bool negative, DiffPoly& out) {
    Rat coeff = negative ? -1 : 1;
    std::vector<Monomial::Entry> entries;
    while (true) {
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            std::string num = cur.integer_digits();
            std::string den = "1";
            if (cur.eat('/')) den = cur.integer_digits();
            Int n(num), d(den);
            Rat q(n, d);
            q.canonicalize();
            coeff *= q;
        } else {
            std::string name = cur.identifier();
            if (!cur.eat('_')) cur.fail("expected '_' after family name " + name);
            std::uint32_t jet = static_cast<std::uint32_t>(std::stoul(cur.integer_digits()));
            std::uint32_t exp = 1;
            if (cur.eat('^')) exp = static_cast<std::uint32_t>(std::stoul(cur.integer_digits()));
            entries.emplace_back(ring.var(name, jet), exp);
        }
        if (!cur.eat('*')) break;
    }
    out.add_term(Monomial::from_entries(std::move(entries)), coeff);
}

} // namespace

DiffPoly parse_poly(const std::string& text, const Ring& ring) {
    Cursor cur{text};
    DiffPoly out;
    if (cur.done()) cur.fail("empty input");
    bool neg = cur.eat('-');
    if (!neg && cur.peek() == '+') cur.eat('+');
    parse_term(cur, ring, neg, out);
    while (!cur.done()) {
        if (cur.eat('+')) parse_term(cur, ring, false, out);
        else if (cur.eat('-')) parse_term(cur, ring, true, out);
        else cur.fail("expected '+' or '-' between terms");
    }
    // "0" parses to the monomial-free term with coefficient 0, i.e. zero
    return out;
}

} // namespace ritt
