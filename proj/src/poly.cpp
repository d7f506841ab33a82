#include "gorcontract/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gorcontract {

namespace {

bool exp_less_desc(const std::vector<int>& a, const std::vector<int>& b) {
    // lexicographic, larger exponent vector first
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

}  // namespace

Poly Poly::zero(std::vector<std::string> vars) {
    Poly p;
    p.vars = std::move(vars);
    return p;
}

Poly Poly::constant(std::vector<std::string> vars, std::int64_t c) {
    Poly p = zero(std::move(vars));
    if (c != 0) p.terms.push_back({c, std::vector<int>(p.vars.size(), 0)});
    return p;
}

Poly Poly::monomial(std::vector<std::string> vars, const std::string& var, int e, std::int64_t c) {
    Poly p = zero(std::move(vars));
    auto it = std::find(p.vars.begin(), p.vars.end(), var);
    if (it == p.vars.end()) throw std::invalid_argument("unknown variable '" + var + "'");
    Term t{c, std::vector<int>(p.vars.size(), 0)};
    t.exps[static_cast<size_t>(it - p.vars.begin())] = e;
    if (c != 0) p.terms.push_back(std::move(t));
    return p;
}

void Poly::canonicalize() {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return exp_less_desc(a.exps, b.exps); });
    std::vector<Term> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().exps == t.exps)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms = std::move(merged);
}

Poly Poly::operator+(const Poly& o) const {
    if (vars != o.vars) throw std::invalid_argument("polynomial variable lists differ");
    Poly r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    r.canonicalize();
    return r;
}

Poly Poly::negated() const {
    Poly r = *this;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negated(); }

Poly Poly::operator*(const Poly& o) const {
    if (vars != o.vars) throw std::invalid_argument("polynomial variable lists differ");
    Poly r = zero(vars);
    for (const auto& a : terms)
        for (const auto& b : o.terms) {
            Term t;
            t.coeff = a.coeff * b.coeff;
            t.exps.resize(vars.size());
            for (size_t i = 0; i < vars.size(); ++i) t.exps[i] = a.exps[i] + b.exps[i];
            r.terms.push_back(std::move(t));
        }
    r.canonicalize();
    return r;
}

bool Poly::operator==(const Poly& o) const { return vars == o.vars && terms == o.terms; }

bool Poly::same_relation(const Poly& o) const {
    if (*this == o) return true;
    return negated() == o;
}

Poly Poly::substituted(const std::vector<Poly>& images) const {
    if (images.size() != vars.size())
        throw std::invalid_argument("substitution image count mismatch");
    std::vector<std::string> target = images.empty() ? vars : images.front().vars;
    Poly r = zero(target);
    for (const auto& t : terms) {
        Poly m = constant(target, t.coeff);
        for (size_t i = 0; i < vars.size(); ++i)
            for (int e = 0; e < t.exps[i]; ++e) m = m * images[i];
        r = r + m;
    }
    return r;
}

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < terms.size(); ++k) {
        const Term& t = terms[k];
        std::int64_t c = t.coeff;
        if (k == 0) {
            if (c < 0) { out += "-"; c = -c; }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string mono;
        for (size_t i = 0; i < vars.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
        }
        if (mono.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += std::to_string(c) + "*" + mono;
    }
    return out;
}

Poly Poly::parse(std::vector<std::string> vars, const std::string& text) {
    Poly r = zero(vars);
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    auto parse_int = [&]() -> std::int64_t {
        skip();
        size_t start = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (start == i) throw std::invalid_argument("expected integer in '" + text + "'");
        return std::stoll(text.substr(start, i - start));
    };
    auto parse_ident = [&]() -> std::string {
        skip();
        size_t start = i;
        while (i < text.size() &&
               (std::isalnum((unsigned char)text[i]) || text[i] == '_'))
            ++i;
        return text.substr(start, i - start);
    };

    skip();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip();
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= text.size()) break;
            if (text[i] == '+') { ++i; }
            else if (text[i] == '-') { sign = -1; ++i; }
            else if (!first) throw std::invalid_argument("expected +/- in '" + text + "'");
        }
        first = false;
        skip();
        Term t{sign, std::vector<int>(vars.size(), 0)};
        bool saw_factor = false;
        while (true) {
            skip();
            if (i < text.size() && std::isdigit((unsigned char)text[i])) {
                t.coeff *= parse_int();
                saw_factor = true;
            } else if (i < text.size() && std::isalpha((unsigned char)text[i])) {
                std::string name = parse_ident();
                auto it = std::find(vars.begin(), vars.end(), name);
                if (it == vars.end())
                    throw std::invalid_argument("unknown variable '" + name + "' in '" + text + "'");
                int e = 1;
                skip();
                if (i < text.size() && text[i] == '^') { ++i; e = (int)parse_int(); }
                t.exps[static_cast<size_t>(it - vars.begin())] += e;
                saw_factor = true;
            } else {
                break;
            }
            skip();
            if (i < text.size() && text[i] == '*') { ++i; continue; }
            break;
        }
        if (!saw_factor) throw std::invalid_argument("dangling sign in '" + text + "'");
        r.terms.push_back(std::move(t));
        skip();
    }
    r.canonicalize();
    return r;
}

}  // namespace gorcontract
