#include "units.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace semwave::units {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw_error(ErrorCode::invalid_parameter, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    num = (g != 0) ? n / g : 0;
    den = (g != 0) ? d / g : 1;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string Dimension::str() const {
    if (dimensionless()) return "1";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const char* base, const Rational& r) {
        if (r.is_zero()) return;
        if (!first) out << " ";
        out << base << "^" << r.str();
        first = false;
    };
    emit("m", pow_m);
    emit("x", pow_x);
    emit("t", pow_t);
    return out.str();
}

Dimension dim_mul(const Dimension& a, const Dimension& b) {
    return Dimension{a.pow_m + b.pow_m, a.pow_x + b.pow_x, a.pow_t + b.pow_t};
}
Dimension dim_div(const Dimension& a, const Dimension& b) {
    return Dimension{a.pow_m - b.pow_m, a.pow_x - b.pow_x, a.pow_t - b.pow_t};
}
Dimension dim_pow(const Dimension& a, const Rational& r) {
    return Dimension{a.pow_m * r, a.pow_x * r, a.pow_t * r};
}

Dimension dimensionless() { return Dimension{}; }
Dimension base_m() { return Dimension{Rational(1), Rational(0), Rational(0)}; }
Dimension base_x() { return Dimension{Rational(0), Rational(1), Rational(0)}; }
Dimension base_t() { return Dimension{Rational(0), Rational(0), Rational(1)}; }

Dimension derive_charge(int n_spatial) {
    // Kinetic energy fixes [E] = m x^2 / t^2; the energy-density argument
    // in n spatial dimensions gives q^2 = E x^(2-n).
    const Dimension energy =
        dim_mul(base_m(), dim_div(dim_pow(base_x(), Rational(2)), dim_pow(base_t(), Rational(2))));
    const Dimension q2 = dim_mul(energy, dim_pow(base_x(), Rational(2 - n_spatial)));
    return dim_pow(q2, Rational(1, 2));
}

Dimension derive_gauge_field(int n_spatial) {
    return dim_div(dimensionless(), dim_mul(derive_charge(n_spatial), base_x()));
}

namespace {

struct CatalogEntry {
    const char* name;
    const char* alias;
    Dimension dim;
};

std::vector<CatalogEntry> build_catalog() {
    const Dimension m = base_m();
    const Dimension x = base_x();
    const Dimension t = base_t();
    const Dimension velocity = dim_div(x, t);
    const Dimension energy = dim_mul(m, dim_mul(velocity, velocity));
    const Dimension hbar = dim_mul(energy, t);
    const Dimension momentum = dim_mul(m, velocity);
    const Dimension frequency = dim_div(dimensionless(), t);
    const Dimension charge = derive_charge(3);
    const Dimension gauge_field = derive_gauge_field(3);
    return {
        {"mass", "m", m},
        {"length", "x", x},
        {"time", "t", t},
        {"velocity", "v", velocity},
        {"energy", "E", energy},
        {"hbar", "", hbar},
        {"charge", "q", charge},
        {"gauge_field", "A", gauge_field},
        {"momentum", "p", momentum},
        {"action", "S", hbar},
        {"frequency", "f", frequency},
    };
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

// Recursive-descent parser over: expr := term (('*'|'/') term)*;
// term := factor ('^' exponent)?; factor := name | '1' | '(' expr ')'.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Dimension parse() {
        Dimension d = expression();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return d;
    }

private:
    Dimension expression() {
        Dimension acc = term();
        for (;;) {
            skip_ws();
            if (consume('*')) acc = dim_mul(acc, term());
            else if (consume('/')) acc = dim_div(acc, term());
            else return acc;
        }
    }

    Dimension term() {
        Dimension base = factor();
        skip_ws();
        if (consume('^')) return dim_pow(base, exponent());
        return base;
    }

    Dimension factor() {
        skip_ws();
        if (consume('(')) {
            Dimension d = expression();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return d;
        }
        if (pos_ < text_.size() && text_[pos_] == '1') {
            ++pos_;
            return dimensionless();
        }
        const std::string name = identifier();
        if (name == "sqrt") {
            skip_ws();
            if (!consume('(')) fail("sqrt needs a parenthesized argument");
            Dimension d = expression();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return dim_pow(d, Rational(1, 2));
        }
        return dimension_of(name);
    }

    Rational exponent() {
        skip_ws();
        bool parenthesized = consume('(');
        skip_ws();
        long long num = integer();
        long long den = 1;
        // A '/' continues the exponent only when a digit follows; otherwise
        // it is the expression-level division and stays untouched.
        const size_t mark = pos_;
        skip_ws();
        if (consume('/')) {
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                den = integer();
            else
                pos_ = mark;
        } else {
            pos_ = mark;
        }
        if (parenthesized) {
            skip_ws();
            if (!consume(')')) fail("expected ')' after exponent");
        }
        return Rational(num, den);
    }

    long long integer() {
        skip_ws();
        bool neg = consume('-');
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return neg ? -v : v;
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a quantity name");
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw_error(ErrorCode::parse_error,
                    "dimension expression '" + text_ + "': " + why + " at position " +
                        std::to_string(pos_));
    }

    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

Dimension dimension_of(const std::string& name) {
    for (const CatalogEntry& e : catalog_entries())
        if (name == e.name || (e.alias[0] != '\0' && name == e.alias)) return e.dim;
    throw_error(ErrorCode::unknown_quantity, "unknown quantity '" + name + "'");
}

std::vector<std::pair<std::string, Dimension>> catalog() {
    std::vector<std::pair<std::string, Dimension>> out;
    for (const CatalogEntry& e : catalog_entries()) out.emplace_back(e.name, e.dim);
    return out;
}

Dimension parse_expression(const std::string& text) { return Parser(text).parse(); }

IdentityResult check_identity(const std::string& lhs, const std::string& rhs) {
    IdentityResult r;
    r.lhs = parse_expression(lhs);
    r.rhs = parse_expression(rhs);
    r.difference = dim_div(r.lhs, r.rhs);
    r.holds = r.difference.dimensionless();
    return r;
}

IdentityResult check_identity(const std::string& equation) {
    const size_t eq = equation.find('=');
    if (eq == std::string::npos)
        throw_error(ErrorCode::parse_error, "identity needs the form 'lhs = rhs'");
    return check_identity(equation.substr(0, eq), equation.substr(eq + 1));
}

bool check_equation_terms(const std::vector<Dimension>& terms) {
    if (terms.size() < 2)
        throw_error(ErrorCode::invalid_parameter, "homogeneity check needs at least 2 terms");
    for (size_t i = 1; i < terms.size(); ++i)
        if (terms[i] != terms[0]) return false;
    return true;
}

bool check_equation_terms(const std::vector<std::string>& terms) {
    std::vector<Dimension> dims;
    dims.reserve(terms.size());
    for (const std::string& t : terms) dims.push_back(parse_expression(t));
    return check_equation_terms(dims);
}

} // namespace semwave::units
