#include <adehilb/poly.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace adehilb {

namespace {
constexpr int kMaxExponent = 1 << 20;

void check_exp(long v) {
    if (v < 0 || v > kMaxExponent) throw std::overflow_error("exponent out of range");
}
} // namespace

long total_degree(const Exponents& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

Exponents exp_mul(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        long v = static_cast<long>(a[i]) + b[i];
        check_exp(v);
        r[i] = static_cast<int>(v);
    }
    return r;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_div(const Exponents& b, const Exponents& a) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) throw std::invalid_argument("exp_div: not divisible");
        r[i] = b[i] - a[i];
    }
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents exp_gcd(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    auto lex_cmp = [](const Exponents& x, const Exponents& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] != y[i]) return x[i] > y[i] ? 1 : -1;
        }
        return 0;
    };
    auto degrevlex_cmp = [&](const Exponents& x, const Exponents& y) {
        long dx = total_degree(x), dy = total_degree(y);
        if (dx != dy) return dx > dy ? 1 : -1;
        for (std::size_t i = x.size(); i-- > 0;) {
            if (x[i] != y[i]) return x[i] < y[i] ? 1 : -1;
        }
        return 0;
    };
    switch (kind) {
    case Kind::Lex:
        return lex_cmp(a, b);
    case Kind::Degrevlex:
        return degrevlex_cmp(a, b);
    case Kind::Weight: {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            wa += weights.at(i) * a[i];
            wb += weights.at(i) * b[i];
        }
        if (wa != wb) return wa > wb ? 1 : -1;
        return tie_break == Kind::Lex ? lex_cmp(a, b) : degrevlex_cmp(a, b);
    }
    }
    return 0;
}

Polynomial::Polynomial(std::vector<std::string> vars, const Rational& c)
    : vars_(std::move(vars)) {
    if (!c.is_zero()) terms_[Exponents(vars_.size(), 0)] = c;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, Exponents e, const Rational& c) {
    Polynomial p(std::move(vars));
    if (!c.is_zero()) p.terms_[std::move(e)] = c;
    return p;
}

Polynomial Polynomial::variable(const std::vector<std::string>& vars, std::size_t idx) {
    Exponents e(vars.size(), 0);
    e.at(idx) = 1;
    return monomial(vars, e);
}

Polynomial Polynomial::constant(const std::vector<std::string>& vars, const Rational& c) {
    return Polynomial(vars, c);
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool Polynomial::is_homogeneous() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = total_degree(e);
        if (d == -1) d = t;
        else if (t != d) return false;
    }
    return true;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (vars_.empty() && !o.vars_.empty() && terms_.empty()) vars_ = o.vars_;
    if (vars_ != o.vars_ && !o.terms_.empty() && !terms_.empty())
        throw std::invalid_argument("polynomial variable mismatch");
    if (terms_.empty() && !o.terms_.empty() && vars_ != o.vars_) vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (vars_.empty() && !o.vars_.empty() && terms_.empty()) vars_ = o.vars_;
    if (vars_ != o.vars_ && !o.terms_.empty() && !terms_.empty())
        throw std::invalid_argument("polynomial variable mismatch");
    if (terms_.empty() && !o.terms_.empty() && vars_ != o.vars_) vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.vars() != b.vars() && !a.is_zero() && !b.is_zero())
        throw std::invalid_argument("polynomial variable mismatch");
    Polynomial r(a.vars().empty() ? b.vars() : a.vars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(exp_mul(ea, eb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Polynomial Polynomial::times_monomial(const Exponents& e, const Rational& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [te, tc] : terms_) r.terms_[exp_mul(te, e)] = tc * c;
    return r;
}

std::pair<Exponents, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::top_weight_part(const std::vector<long>& w) const {
    long best = std::numeric_limits<long>::min();
    for (const auto& [e, c] : terms_) {
        long s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += w.at(i) * e[i];
        best = std::max(best, s);
    }
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        long s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += w.at(i) * e[i];
        if (s == best) r.terms_[e] = c;
    }
    return r;
}

Polynomial Polynomial::lowest_degree_part() const {
    long best = std::numeric_limits<long>::max();
    for (const auto& [e, c] : terms_) best = std::min(best, total_degree(e));
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == best) r.terms_[e] = c;
    return r;
}

Polynomial Polynomial::degree_part(long d) const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) r.terms_[e] = c;
    return r;
}

Polynomial Polynomial::substitute(std::size_t idx, const Rational& c) const {
    Polynomial r(vars_);
    for (const auto& [e, k] : terms_) {
        Rational v = k;
        for (int t = 0; t < e[idx]; ++t) v *= c;
        Exponents e2 = e;
        e2[idx] = 0;
        r.add_term(e2, v);
    }
    return r;
}

Rational Polynomial::constant_term() const {
    return coeff(Exponents(vars_.size(), 0));
}

Polynomial Polynomial::with_vars(const std::vector<std::string>& new_vars) const {
    std::vector<int> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it != new_vars.end()) where[i] = static_cast<int>(it - new_vars.begin());
    }
    Polynomial r(new_vars);
    for (const auto& [e, c] : terms_) {
        Exponents e2(new_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0) throw std::invalid_argument("with_vars: used variable missing");
            e2[where[i]] = e[i];
        }
        r.add_term(e2, c);
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // canonical printing: degrevlex-descending term order
    MonomialOrder ord = MonomialOrder::degrevlex();
    std::vector<const std::pair<const Exponents, Rational>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [&](auto* a, auto* b) { return ord.compare(a->first, b->first) > 0; });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [e, c] = *t;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = total_degree(e) > 0;
        bool coeff_shown = !(a == Rational(1) && has_vars);
        if (coeff_shown) os << a.str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    explicit Parser(const std::string& text, const std::vector<std::string>& v)
        : s(text), vars(v) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + msg);
    }

    Polynomial parse() {
        Polynomial p = expression();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return p;
    }

    Polynomial expression() {
        skip_ws();
        int sign = 1;
        if (eat('-')) sign = -1;
        else (void)eat('+');
        Polynomial acc = term();
        if (sign < 0) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) acc *= factor();
            else break;
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        skip_ws();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            Polynomial r = Polynomial::constant(vars, Rational(1));
            for (long i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial p = expression();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Polynomial::constant(vars, rational());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            ++pos;
            while (pos < s.size() &&
                   std::isalnum(static_cast<unsigned char>(s[pos])))
                ++pos;
            std::string name = s.substr(start, pos - start);
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) fail("unknown variable '" + name + "'");
            return Polynomial::variable(vars, static_cast<std::size_t>(it - vars.begin()));
        }
        fail("unexpected character");
    }

    long integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > kMaxExponent) fail("integer too large");
            ++pos;
        }
        return v;
    }

    Rational rational() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string num = s.substr(start, pos - start);
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            skip_ws();
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (dstart == pos) fail("expected denominator");
            std::string den = s.substr(dstart, pos - dstart);
            return Rational(num + "/" + den);
        }
        return Rational(num);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    Parser p(text, vars);
    return p.parse();
}

} // namespace adehilb
