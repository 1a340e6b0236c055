#include "lg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lg/errors.hpp"

namespace lg {

int Monomial::x_degree() const { return std::accumulate(x.begin(), x.end(), 0); }
int Monomial::p_degree() const { return std::accumulate(p.begin(), p.end(), 0); }

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < x.size(); ++i) out.x[i] += o.x[i];
    for (std::size_t i = 0; i < p.size(); ++i) out.p[i] += o.p[i];
    return out;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.x.size(); ++i)
        if (a.x[i] != b.x[i]) return a.x[i] > b.x[i];
    for (std::size_t i = 0; i < a.p.size(); ++i)
        if (a.p[i] != b.p[i]) return a.p[i] > b.p[i];
    return false;
}

Poly Poly::monomial(Rat c, Monomial m) {
    Poly out;
    out.terms.push_back({std::move(c), std::move(m)});
    out.normalize();
    return out;
}

void Poly::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return monomial_less(a.m, b.m); });
    std::vector<Term> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().m == t.m)
            merged.back().c += t.c;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.c == 0; });
    terms = std::move(merged);
}

Poly Poly::operator+(const Poly& o) const {
    Poly out;
    out.terms = terms;
    out.terms.insert(out.terms.end(), o.terms.begin(), o.terms.end());
    out.normalize();
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(Rat(-1)); }

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return {};
    Poly out = *this;
    for (auto& t : out.terms) t.c *= c;
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& a : terms)
        for (const auto& b : o.terms) out.terms.push_back({a.c * b.c, a.m * b.m});
    out.normalize();
    return out;
}

int VarTable::index_of(const std::string& name) const {
    for (int i = 0; i < nx(); ++i)
        if (x_names[i] == name) return i;
    for (int i = 0; i < np(); ++i)
        if (p_names[i] == name) return nx() + i;
    return -1;
}

namespace {

struct Parser {
    const std::string& s;
    const VarTable& vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    Int parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        return Int(s.substr(start, pos - start));
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            fail("expected variable name");
        ++pos;
        while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }

    // factor := name ('^' uint)?
    Monomial parse_factor() {
        std::size_t name_pos = pos;
        std::string name = parse_name();
        int idx = vars.index_of(name);
        if (idx < 0) {
            pos = name_pos;
            throw UnknownVariable("unknown variable '" + name + "'");
        }
        int exp = 1;
        if (peek() == '^') {
            ++pos;
            if (peek() == '-') throw NegativeExponent("negative exponent on '" + name + "'");
            Int e = parse_uint();
            if (!e.fits_sint_p()) fail("exponent too large");
            exp = static_cast<int>(e.get_si());
        }
        Monomial m{std::vector<int>(vars.x_names.size(), 0),
                   std::vector<int>(vars.p_names.size(), 0)};
        if (idx < vars.nx())
            m.x[idx] = exp;
        else
            m.p[idx - vars.nx()] = exp;
        return m;
    }

    Poly parse_term() {
        Rat coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = parse_uint();
            Int den = 1;
            if (peek() == '/') {
                ++pos;
                den = parse_uint();
                if (den == 0) fail("zero denominator");
            }
            coeff = Rat(num, den);
            coeff.canonicalize();
            have_coeff = true;
        }
        Monomial m{std::vector<int>(vars.x_names.size(), 0),
                   std::vector<int>(vars.p_names.size(), 0)};
        bool have_factor = false;
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                c = peek();
                if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected factor after '*'");
            }
            if (!std::isalpha(static_cast<unsigned char>(c))) break;
            m = m * parse_factor();
            have_factor = true;
        }
        if (!have_coeff && !have_factor) fail("expected term");
        return Poly::monomial(coeff, m);
    }

    Poly parse_expr() {
        Poly out;
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = -1;
            ++pos;
        }
        out = parse_term().scaled(Rat(sign));
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                out = out + parse_term().scaled(Rat(c == '-' ? -1 : 1));
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input");
        return out;
    }
};

}  // namespace

Poly parse_polynomial(const std::string& text, const VarTable& vars) {
    Parser p{text, vars};
    return p.parse_expr();
}

std::string print_monomial(const Monomial& m, const VarTable& vars) {
    std::string out;
    auto emit = [&out](const std::string& name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    for (int i = 0; i < vars.np(); ++i) emit(vars.p_names[i], m.p[i]);
    for (int i = 0; i < vars.nx(); ++i) emit(vars.x_names[i], m.x[i]);
    return out.empty() ? "1" : out;
}

std::string print_polynomial(const Poly& p, const VarTable& vars) {
    if (p.terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        const Term& t = p.terms[i];
        Rat c = t.c;
        if (i == 0) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string mono = print_monomial(t.m, vars);
        if (mono == "1")
            out += c.get_str();
        else if (c == 1)
            out += mono;
        else
            out += c.get_str() + "*" + mono;
    }
    return out;
}

Poly partial(const Poly& p, int var_index) {
    Poly out;
    const int nx = p.terms.empty() ? 0 : static_cast<int>(p.terms[0].m.x.size());
    for (const auto& t : p.terms) {
        int e = var_index < nx ? t.m.x[var_index] : t.m.p[var_index - nx];
        if (e == 0) continue;
        Term d = t;
        d.c *= e;
        if (var_index < nx)
            --d.m.x[var_index];
        else
            --d.m.p[var_index - nx];
        out.terms.push_back(std::move(d));
    }
    out.normalize();
    return out;
}

Rat evaluate(const Poly& p, const std::vector<Rat>& point) {
    Rat total = 0;
    for (const auto& t : p.terms) {
        Rat v = t.c;
        std::size_t k = 0;
        for (int e : t.m.x) {
            for (int i = 0; i < e; ++i) v *= point[k];
            ++k;
        }
        for (int e : t.m.p) {
            for (int i = 0; i < e; ++i) v *= point[k];
            ++k;
        }
        total += v;
    }
    return total;
}

int quasi_degree(const Poly& p, const std::vector<int>& weights) {
    if (p.is_zero()) throw NotQuasiHomogeneous("zero polynomial has no quasi-degree");
    int deg = -1;
    std::string offending;
    for (const auto& t : p.terms) {
        if (t.m.p_degree() != 0)
            throw NotQuasiHomogeneous("p-variables not allowed in defining polynomials");
        int d = 0;
        for (std::size_t i = 0; i < t.m.x.size(); ++i) d += t.m.x[i] * weights[i];
        if (deg < 0) deg = d;
        if (d != deg) offending += (offending.empty() ? "" : ", ") + std::to_string(d);
    }
    if (!offending.empty())
        throw NotQuasiHomogeneous("terms of weighted degrees " + std::to_string(deg) + ", " +
                                  offending);
    return deg;
}

}  // namespace lg
