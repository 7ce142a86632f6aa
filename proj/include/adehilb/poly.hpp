#ifndef ADEHILB_POLY_HPP
#define ADEHILB_POLY_HPP

#include <adehilb/rational.hpp>
#include <map>
#include <string>
#include <vector>

namespace adehilb {

/// Exponent vector; one small non-negative entry per variable.
using Exponents = std::vector<int>;

long total_degree(const Exponents& e);
Exponents exp_mul(const Exponents& a, const Exponents& b);       // a + b, overflow-checked
bool exp_divides(const Exponents& a, const Exponents& b);        // a | b componentwise
Exponents exp_div(const Exponents& b, const Exponents& a);       // b - a, requires a | b
Exponents exp_lcm(const Exponents& a, const Exponents& b);
Exponents exp_gcd(const Exponents& a, const Exponents& b);

/// Global monomial order: degrevlex, lex, or a weight order refined by one of them.
struct MonomialOrder {
    enum class Kind { Degrevlex, Lex, Weight };
    Kind kind = Kind::Degrevlex;
    std::vector<long> weights;            // used when kind == Weight
    Kind tie_break = Kind::Degrevlex;     // refinement for Weight

    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::Lex, {}, Kind::Lex}; }
    static MonomialOrder weighted(std::vector<long> w,
                                  Kind tie = Kind::Degrevlex) {
        return {Kind::Weight, std::move(w), tie};
    }

    /// -1, 0, +1 with +1 meaning a > b in the order.
    int compare(const Exponents& a, const Exponents& b) const;
    bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }
};

/// Multivariate polynomial over Q. Terms are kept in a canonical map keyed by
/// exponent vector; zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    Polynomial(std::vector<std::string> vars, const Rational& c);

    static Polynomial monomial(std::vector<std::string> vars, Exponents e,
                               const Rational& c = Rational(1));
    static Polynomial variable(const std::vector<std::string>& vars, std::size_t idx);
    static Polynomial constant(const std::vector<std::string>& vars, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    long degree() const;                           // -1 for the zero polynomial
    bool is_homogeneous() const;

    void add_term(const Exponents& e, const Rational& c);
    Rational coeff(const Exponents& e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Exponents& e, const Rational& c) const;
    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    /// Leading term with respect to `order`.
    std::pair<Exponents, Rational> leading_term(const MonomialOrder& order) const;

    /// Sum of the terms of maximal weight under `w` (the torus-action top part).
    Polynomial top_weight_part(const std::vector<long>& w) const;
    /// Sum of the terms of minimal total degree (the lowest form at the origin).
    Polynomial lowest_degree_part() const;
    /// Terms of exact total degree d.
    Polynomial degree_part(long d) const;

    /// Substitute variable `idx` by value `c` (exact evaluation in one variable).
    Polynomial substitute(std::size_t idx, const Rational& c) const;
    Rational constant_term() const;

    /// Rewrites this polynomial over a variable superset. Throws if a used
    /// variable is missing from `new_vars`.
    Polynomial with_vars(const std::vector<std::string>& new_vars) const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

/// Parser for the polynomial text grammar: variables [a-zA-Z][a-zA-Z0-9]*,
/// integer or a/b coefficients, operators + - * ^ (no juxtaposition).
/// Throws std::invalid_argument with a message on malformed input.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace adehilb

#endif
