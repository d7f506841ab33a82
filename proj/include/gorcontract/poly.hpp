#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gorcontract {

// Multivariate polynomials with integer coefficients over a fixed, ordered
// variable list. This is all the symbolic machinery the local-ring catalogue
// needs: sums, products, substitution, and a canonical rendering. No field
// arithmetic, no division.
struct Poly {
    struct Term {
        std::int64_t coeff = 0;
        std::vector<int> exps;  // parallel to vars
        bool operator==(const Term&) const = default;
    };

    std::vector<std::string> vars;
    std::vector<Term> terms;  // canonically sorted, no zero coefficients

    static Poly zero(std::vector<std::string> vars);
    static Poly constant(std::vector<std::string> vars, std::int64_t c);
    // Monomial c * var^e.
    static Poly monomial(std::vector<std::string> vars, const std::string& var, int e,
                         std::int64_t c = 1);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly negated() const;
    bool is_zero() const { return terms.empty(); }

    bool operator==(const Poly& o) const;
    // Equal up to an overall sign; relation lists are compared this way.
    bool same_relation(const Poly& o) const;

    // Substitute each variable by a polynomial over the target variable list.
    // `images` is parallel to `vars`.
    Poly substituted(const std::vector<Poly>& images) const;

    // Renders e.g. "u^2 - s1^2 - s2^3" or "s1*s2". Terms appear in the
    // canonical order (lexicographic descending exponent vectors).
    std::string str() const;

    // Inverse of str() over the given variable list; accepts arbitrary term
    // order and whitespace.
    static Poly parse(std::vector<std::string> vars, const std::string& text);

    void canonicalize();
};

}  // namespace gorcontract
