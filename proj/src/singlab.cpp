#include "gorcontract/singlab.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorcontract {

namespace {

int exponent_of(const SingularityChart& chart, const ChartBranch& b) {
    // The twist at the unique node over a contracted one-branch point adds 2.
    return chart.kind == ChartKind::contracted_component ? b.m + 2 : b.m;
}

void require_positive_m(const SingularityChart& chart) {
    for (const auto& b : chart.branches)
        if (b.delta == 1 && b.m <= 0)
            throw std::invalid_argument("chart has a reduced branch with m = " +
                                        std::to_string(b.m) + "; expected m >= 1");
}

void refuse_orbifold(const SingularityChart& chart, const char* what) {
    if (chart.orbifold())
        throw std::invalid_argument(std::string(what) +
                                    " refused: a branch slope disagrees in parity with its "
                                    "ramification, so the point carries orbifold structure "
                                    "outside the local catalogue");
}

// two points upstairs on an unramified branch, one on a ramified branch
bool two_points_upstairs(const ChartBranch& b) { return !b.ramified; }

std::vector<std::string> u_names(int ell) {
    if (ell <= 1) return {"u"};
    if (ell == 2) return {"u"};
    std::vector<std::string> names;
    for (int i = 2; i <= ell; ++i) names.push_back("u1" + std::to_string(i));
    return names;
}

}  // namespace

std::string Presentation::render() const {
    std::string out;
    for (const auto& r : relations) {
        if (!out.empty()) out += "\n";
        out += r.str();
    }
    return out;
}

Presentation present(const SingularityChart& chart) {
    Presentation p;
    int ell = chart.ell;
    if (ell < 1) throw std::invalid_argument("chart must have at least one branch");
    if ((int)chart.branches.size() != ell)
        throw std::invalid_argument("chart branch list does not match ell");
    refuse_orbifold(chart, "presentation");

    p.extra_vars = u_names(ell);
    for (int i = 1; i <= ell; ++i) p.base_vars.push_back("s" + std::to_string(i));
    // u variables first so quadric terms render before the s terms
    std::vector<std::string> vars = p.extra_vars;
    vars.insert(vars.end(), p.base_vars.begin(), p.base_vars.end());
    p.vars = vars;

    auto S = [&](int i, int e) { return Poly::monomial(vars, "s" + std::to_string(i), e); };
    auto U = [&](size_t j, int e) { return Poly::monomial(vars, p.extra_vars[j], e); };

    if (ell == 1) {
        const ChartBranch& b = chart.branches[0];
        Poly rel = U(0, 2);
        switch (chart.kind) {
            case ChartKind::contracted_component:
                if (b.delta == 1 && b.m <= 0)
                    throw std::invalid_argument("contracted chart needs m >= 1, got m = " +
                                                std::to_string(b.m));
                if (b.delta == 1) rel = rel - S(1, b.m + 2);
                break;
            case ChartKind::branch_point:
                if (b.delta == 1) rel = rel - S(1, 1);
                break;
            case ChartKind::generic:
                if (b.delta == 1) rel = rel - Poly::constant(vars, 1);
                break;
            case ChartKind::node:
                throw std::invalid_argument("a node chart needs two branches");
        }
        p.relations.push_back(rel);
        return p;
    }

    require_positive_m(chart);
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j) p.relations.push_back(S(i, 1) * S(j, 1));

    const ChartBranch& b1 = chart.branches[0];
    int e1 = exponent_of(chart, b1);
    for (int i = 2; i <= ell; ++i) {
        const ChartBranch& bi = chart.branches[(size_t)i - 1];
        Poly rel = U((size_t)i - 2, 2);
        if (b1.delta == 1) rel = rel - S(1, e1);
        if (bi.delta == 1) rel = rel - S(i, exponent_of(chart, bi));
        p.relations.push_back(rel);
    }

    if (ell >= 3) {
        for (int i = 2; i <= ell; ++i)
            for (int j = i + 1; j <= ell; ++j)
                p.cross_relations.push_back(S(1, 1) * (U((size_t)i - 2, 1) - U((size_t)j - 2, 1)));
        for (int i = 2; i <= ell; ++i)
            for (int j = 2; j <= ell; ++j)
                if (i != j) p.cross_relations.push_back(S(i, 1) * U((size_t)j - 2, 1));
        for (int i = 2; i <= ell; ++i)
            for (int j = i + 1; j <= ell; ++j) {
                Poly rel = U((size_t)i - 2, 1) * U((size_t)j - 2, 1);
                if (b1.delta == 1) rel = rel - S(1, e1);
                p.cross_relations.push_back(rel);
            }
    }
    return p;
}

GlueDecomposition glue_decomposition(const SingularityChart& chart) {
    if (chart.ell < 2) throw std::invalid_argument("gluing needs at least two branches");
    Presentation full = present(chart);
    GlueDecomposition g;
    g.cokernel = "k[e]/(e^2)";

    const ChartBranch& b1 = chart.branches[0];
    int e1 = exponent_of(chart, b1);

    // branch-one piece in k[[s1]][u1]
    {
        Presentation& p = g.branch_one;
        p.base_vars = {"s1"};
        p.extra_vars = {"u1"};
        p.vars = {"u1", "s1"};
        Poly rel = Poly::monomial(p.vars, "u1", 2);
        if (b1.delta == 1) rel = rel - Poly::monomial(p.vars, "s1", e1);
        p.relations.push_back(rel);
    }

    // transverse union of the remaining branches
    {
        Presentation& p = g.complement;
        std::vector<std::string> us = u_names(chart.ell);
        p.extra_vars = us;
        for (int i = 2; i <= chart.ell; ++i) p.base_vars.push_back("s" + std::to_string(i));
        p.vars = us;
        p.vars.insert(p.vars.end(), p.base_vars.begin(), p.base_vars.end());
        auto S = [&](int i, int e) { return Poly::monomial(p.vars, "s" + std::to_string(i), e); };
        auto U = [&](int i, int e) { return Poly::monomial(p.vars, us[(size_t)i - 2], e); };
        for (int i = 2; i <= chart.ell; ++i)
            for (int j = i + 1; j <= chart.ell; ++j) p.relations.push_back(S(i, 1) * S(j, 1));
        for (int i = 2; i <= chart.ell; ++i)
            for (int j = 2; j <= chart.ell; ++j)
                if (i != j) p.relations.push_back(S(i, 1) * U(j, 1));
        for (int i = 2; i <= chart.ell; ++i) {
            const ChartBranch& bi = chart.branches[(size_t)i - 1];
            Poly rel = U(i, 2);
            if (bi.delta == 1) rel = rel - S(i, exponent_of(chart, bi));
            p.relations.push_back(rel);
        }
        // mixed u products vanish on the transverse union
        for (int i = 2; i <= chart.ell; ++i)
            for (int j = i + 1; j <= chart.ell; ++j)
                p.cross_relations.push_back(U(i, 1) * U(j, 1));
    }

    // substitution checks against the full ideal
    auto member = [](const Poly& q, const Presentation& p) {
        if (q.is_zero()) return true;
        for (const auto& r : p.relations)
            if (q.same_relation(r)) return true;
        for (const auto& r : p.cross_relations)
            if (q.same_relation(r)) return true;
        return false;
    };

    bool ok = true;
    {
        // s_i -> 0 (i >= 2), every u variable -> u1
        std::vector<Poly> images;
        for (const auto& v : full.vars) {
            if (v == "s1")
                images.push_back(Poly::monomial(g.branch_one.vars, "s1", 1));
            else if (v.substr(0, 1) == "s")
                images.push_back(Poly::zero(g.branch_one.vars));
            else
                images.push_back(Poly::monomial(g.branch_one.vars, "u1", 1));
        }
        auto check = [&](const Poly& rel) { ok = ok && member(rel.substituted(images), g.branch_one); };
        for (const auto& r : full.relations) check(r);
        for (const auto& r : full.cross_relations) check(r);
    }
    {
        // s1 -> 0
        std::vector<Poly> images;
        for (const auto& v : full.vars) {
            if (v == "s1")
                images.push_back(Poly::zero(g.complement.vars));
            else
                images.push_back(Poly::monomial(g.complement.vars, v == "u" ? "u" : v, 1));
        }
        auto check = [&](const Poly& rel) { ok = ok && member(rel.substituted(images), g.complement); };
        for (const auto& r : full.relations) check(r);
        for (const auto& r : full.cross_relations) check(r);
    }
    g.substitution_checks_ok = ok;
    return g;
}

NormalizationData normalize(const SingularityChart& chart) {
    NormalizationData n;
    std::vector<std::string> us = u_names(chart.ell);

    auto own_part = [&](int pos1) -> std::string {
        const ChartBranch& b = chart.branches[(size_t)pos1 - 1];
        int e = exponent_of(chart, b);
        std::string idx = std::to_string(pos1);
        auto pow = [&](const std::string& base, int exp) {
            return exp == 1 ? base : base + "^" + std::to_string(exp);
        };
        if (b.delta == 0) return "0";
        if (two_points_upstairs(b))
            return pow("a" + idx, e / 2) + ", -" + pow("b" + idx, e / 2);
        return pow("c" + idx, e);
    };

    for (int i = 1; i <= chart.ell; ++i) {
        const ChartBranch& b = chart.branches[(size_t)i - 1];
        BranchParam row;
        row.branch = i - 1;
        std::string idx = std::to_string(i);
        if (b.delta == 0) {
            row.kind = BranchParam::Kind::ribbon;
            row.s_image = "d" + idx;
            ++n.d;
        } else if (two_points_upstairs(b)) {
            if (b.m % 2 != 0)
                throw std::invalid_argument("unramified branch with odd m is malformed");
            row.kind = BranchParam::Kind::even_pair;
            row.s_image = "(a" + idx + ", b" + idx + ")";
            ++n.h;
        } else {
            row.kind = BranchParam::Kind::odd;
            row.s_image = "c" + idx + "^2";
            ++n.k;
        }
        if (chart.ell == 1) {
            row.u_image = b.delta == 0 ? "0" : "(" + own_part(1) + ")";
        } else if (i >= 2) {
            row.u_image = "(" + own_part(1) + ", " + own_part(i) + ")";
        }
        n.table.push_back(row);
    }
    return n;
}

GorensteinCertificate certify_gorenstein(const SingularityChart& chart) {
    if (!chart.reduced())
        throw std::invalid_argument("non-reduced chart: certificate refused");
    require_positive_m(chart);

    GorensteinCertificate cert;
    int h = 0, k = 0;
    for (size_t i = 0; i < chart.branches.size(); ++i) {
        const ChartBranch& b = chart.branches[i];
        std::string idx = std::to_string(i + 1);
        if (two_points_upstairs(b)) {
            if (b.m % 2 != 0)
                throw std::invalid_argument("unramified branch with odd m is malformed");
            ++h;
            cert.conductor.push_back({"a" + idx, b.m / 2 + 1});
            cert.conductor.push_back({"b" + idx, b.m / 2 + 1});
        } else {
            ++k;
            cert.conductor.push_back({"c" + idx, b.m + 1});
        }
    }
    for (const auto& c : cert.conductor) cert.dim_O_over_c += c.exponent;
    cert.delta = chart.g_q + 2 * h + k - 1;
    cert.ok = cert.dim_O_over_c == 2 * cert.delta;
    return cert;
}

std::vector<PullbackMultiplicity> dualizing_pullback(const SingularityChart& chart) {
    if (!chart.reduced())
        throw std::invalid_argument("non-reduced chart: dualising pullback refused");
    for (const auto& b : chart.branches)
        if (b.m < 1)
            throw std::invalid_argument("dualising pullback needs every m >= 1; a plain node is "
                                        "outside the formula's domain");
    std::vector<PullbackMultiplicity> out;
    for (size_t i = 0; i < chart.branches.size(); ++i) {
        const ChartBranch& b = chart.branches[i];
        std::string idx = std::to_string(i + 1);
        if (two_points_upstairs(b)) {
            out.push_back({"q" + idx, b.m / 2 + 1});
            out.push_back({"q" + idx + "~", b.m / 2 + 1});
        } else {
            out.push_back({"q" + idx, b.m + 1});
        }
    }
    return out;
}

std::string eta_generator(const SingularityChart& chart) {
    if (chart.ell < 2)
        throw std::invalid_argument("eta generator needs at least two branches");
    if (!chart.reduced())
        throw std::invalid_argument("non-reduced chart: eta generator refused");
    refuse_orbifold(chart, "eta generator");
    std::vector<std::string> us = u_names(chart.ell);
    std::string first_u = chart.ell == 2 ? "u" : "u1";
    std::string out = "ds1/(" + first_u + "*s1)";
    for (int i = 2; i <= chart.ell; ++i) {
        std::string ui = chart.ell == 2 ? "u" : us[(size_t)i - 2];
        out += " - ds" + std::to_string(i) + "/(" + ui + "*s" + std::to_string(i) + ")";
    }
    return out;
}

long long reduced_germ_delta(const SingularityChart& chart) {
    if (chart.orbifold()) {
        // no catalogue germ to assemble; fall back to the normalization count
        int r = 0, h = 0, k = 0;
        for (const auto& b : chart.branches)
            if (b.delta == 1) {
                r += two_points_upstairs(b) ? 2 : 1;
                (two_points_upstairs(b) ? h : k)++;
            }
        if (r == 0) return 0;
        return chart.g_q + r - 1;
    }
    std::vector<int> exps;
    for (const auto& b : chart.branches)
        if (b.delta == 1) exps.push_back(exponent_of(chart, b));
    if (exps.empty()) return 0;
    long long sum = 0;
    for (int e : exps) sum += e / 2;
    if (exps.size() == 1) return sum;
    return sum + (long long)exps.size();
}

}  // namespace gorcontract
