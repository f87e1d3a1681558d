#include "bfc/poly.hpp"

#include <cctype>
#include <sstream>

namespace bfc {

Alphabet make_alphabet(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            if (names[i] == names[j]) throw std::invalid_argument("make_alphabet: duplicate name '" + names[i] + "'");
        }
    }
    if (names.size() > static_cast<std::size_t>(Monomial::kMaxVars)) {
        throw std::length_error("make_alphabet: too many variables");
    }
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Alphabet empty_alphabet() {
    static const Alphabet empty = std::make_shared<const std::vector<std::string>>();
    return empty;
}

bool same_alphabet(const Alphabet& a, const Alphabet& b) { return a == b || *a == *b; }

int alphabet_index(const Alphabet& a, const std::string& name) {
    for (std::size_t i = 0; i < a->size(); ++i) {
        if ((*a)[i] == name) return static_cast<int>(i);
    }
    return -1;
}

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b) {
    if (same_alphabet(a, b)) return a;
    std::vector<std::string> names = *a;
    bool grew = false;
    for (const auto& n : *b) {
        if (alphabet_index(a, n) < 0) {
            names.push_back(n);
            grew = true;
        }
    }
    if (!grew) return a;
    return make_alphabet(std::move(names));
}

Bounds make_bounds(const Alphabet& vars, const std::map<std::string, int>& named) {
    Bounds b(vars->size(), INT_MAX);
    for (const auto& [name, v] : named) {
        int i = alphabet_index(vars, name);
        if (i >= 0) b[i] = v;
    }
    return b;
}

Monomial make_monomial(const Alphabet& vars, const std::map<std::string, int>& named) {
    Monomial m;
    for (const auto& [name, v] : named) {
        if (v < 0) throw std::invalid_argument("make_monomial: negative exponent for '" + name + "'");
        if (v == 0) continue;
        int i = alphabet_index(vars, name);
        if (i < 0) throw std::invalid_argument("make_monomial: '" + name + "' not in alphabet");
        m.e[i] = static_cast<std::int16_t>(v);
    }
    return m;
}

std::string monomial_string(const Monomial& m, const Alphabet& vars) {
    std::string out;
    for (std::size_t i = 0; i < vars->size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += (*vars)[i];
        if (m.e[i] != 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        std::string mono = monomial_string(m, p.vars());
        std::string body;
        if (mono.empty()) {
            body = a.to_string();
        } else if (a.is_one()) {
            body = mono;
        } else {
            body = a.to_string() + "*" + mono;
        }
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

MPoly parse_mpoly(const std::string& text, Alphabet vars) {
    // Split into signed terms at top-level + and - (a leading sign belongs to the first term).
    std::vector<std::pair<bool, std::string>> terms;
    std::string cur;
    bool neg = false;
    bool seen = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        bool after_caret = !cur.empty() && strip(cur).back() == '^';
        if ((ch == '+' || ch == '-') && !after_caret) {
            if (!strip(cur).empty()) {
                terms.emplace_back(neg, strip(cur));
                cur.clear();
                neg = (ch == '-');
            } else {
                if (ch == '-') neg = !neg;
            }
            seen = true;
            continue;
        }
        cur += ch;
    }
    if (!strip(cur).empty()) terms.emplace_back(neg, strip(cur));
    if (terms.empty() && !seen) throw std::invalid_argument("parse_mpoly: empty input");

    std::vector<std::string> names = vars ? *vars : std::vector<std::string>{};
    struct Parsed {
        Rational c;
        std::map<std::string, int> exps;
    };
    std::vector<Parsed> parsed;
    for (const auto& [sgn, t] : terms) {
        Parsed p{Rational(sgn ? -1 : 1), {}};
        std::stringstream ss(t);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            factor = strip(factor);
            if (factor.empty()) throw std::invalid_argument("parse_mpoly: empty factor in '" + t + "'");
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                p.c *= Rational::parse(factor);
                continue;
            }
            std::string name = factor;
            int e = 1;
            auto caret = factor.find('^');
            if (caret != std::string::npos) {
                name = strip(factor.substr(0, caret));
                e = std::stoi(factor.substr(caret + 1));
            }
            for (char ch : name) {
                if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
                    throw std::invalid_argument("parse_mpoly: bad variable name '" + name + "'");
                }
            }
            if (std::find(names.begin(), names.end(), name) == names.end()) {
                if (vars) throw std::invalid_argument("parse_mpoly: '" + name + "' not in alphabet");
                names.push_back(name);
            }
            p.exps[name] += e;
        }
        parsed.push_back(std::move(p));
    }
    Alphabet a = vars ? vars : make_alphabet(names);
    MPoly out(a);
    for (const auto& p : parsed) out.add_term(make_monomial(a, p.exps), p.c);
    return out;
}

}  // namespace bfc
