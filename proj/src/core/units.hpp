#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace semwave::units {

// Exact rational, always stored in lowest terms with a positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    bool is_zero() const { return num == 0; }
    std::string str() const;
};

// Dimension over the three base semantic units: inertia m, distance x,
// time t. Exponents are exact rationals; equality is exact.
struct Dimension {
    Rational pow_m, pow_x, pow_t;

    bool operator==(const Dimension& o) const {
        return pow_m == o.pow_m && pow_x == o.pow_x && pow_t == o.pow_t;
    }
    bool operator!=(const Dimension& o) const { return !(*this == o); }
    bool dimensionless() const {
        return pow_m.is_zero() && pow_x.is_zero() && pow_t.is_zero();
    }
    // e.g. "m^1 x^2 t^-2", "1" when dimensionless.
    std::string str() const;
};

Dimension dim_mul(const Dimension& a, const Dimension& b);
Dimension dim_div(const Dimension& a, const Dimension& b);
Dimension dim_pow(const Dimension& a, const Rational& r);

Dimension dimensionless();
Dimension base_m();
Dimension base_x();
Dimension base_t();

// Catalog of named quantities; accepts both long names ("energy") and the
// short symbols used in identity strings ("E", "q", "hbar", ...).
Dimension dimension_of(const std::string& name);
std::vector<std::pair<std::string, Dimension>> catalog();

// Dimensions of charge and gauge field with the spatial dimension count of
// the energy-density argument left as a parameter; the catalog entries are
// the n_spatial = 3 values.
Dimension derive_charge(int n_spatial);
Dimension derive_gauge_field(int n_spatial);

// Parse an expression over catalog names with operators * / ^, parentheses,
// rational exponents ("p/r"), and the literal "1".
Dimension parse_expression(const std::string& text);

struct IdentityResult {
    bool holds = false;
    Dimension lhs, rhs;
    Dimension difference; // lhs / rhs
};

// Evaluate "lhs = rhs" (or the two sides separately) with exact arithmetic.
IdentityResult check_identity(const std::string& lhs, const std::string& rhs);
IdentityResult check_identity(const std::string& equation);

// True iff all terms reduce to one dimension. Needs at least two terms.
bool check_equation_terms(const std::vector<Dimension>& terms);
bool check_equation_terms(const std::vector<std::string>& terms);

} // namespace semwave::units
