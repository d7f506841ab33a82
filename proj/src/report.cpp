#include "gorcontract/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorcontract {

namespace {

json validity_to_json(const DatumValidity& v) {
    json j;
    j["ok"] = v.ok;
    j["problems"] = v.problems;
    j["contracted_support"] = v.contracted_support;
    j["ribbon_support"] = v.ribbon_support;
    return j;
}

json chart_to_json(const TropCover& t, const ChartDetail& d) {
    json j;
    const SingularityChart& c = d.chart;
    switch (c.kind) {
        case ChartKind::contracted_component: j["kind"] = "contracted-component"; break;
        case ChartKind::node: j["kind"] = "node"; break;
        case ChartKind::branch_point: j["kind"] = "branch-point"; break;
        case ChartKind::generic: j["kind"] = "generic"; break;
    }
    j["ell"] = c.ell;
    j["g_q"] = c.g_q;
    json comp = json::array();
    for (int v : c.component) comp.push_back(t.vertices[v].id);
    j["component"] = comp;
    json branches = json::array();
    for (const auto& b : c.branches) {
        json bj;
        bj["edge"] = b.edge >= 0 ? json(t.edges[b.edge].id) : json(nullptr);
        bj["m"] = b.m;
        bj["delta"] = b.delta;
        bj["ramified"] = b.ramified;
        branches.push_back(bj);
    }
    j["branches"] = branches;

    json pres;
    pres["vars"] = d.presentation.vars;
    json rels = json::array();
    for (const auto& r : d.presentation.relations) rels.push_back(r.str());
    pres["relations"] = rels;
    json cross = json::array();
    for (const auto& r : d.presentation.cross_relations) cross.push_back(r.str());
    pres["cross_relations"] = cross;
    j["presentation"] = pres;

    json norm;
    norm["h"] = d.normalization.h;
    norm["k"] = d.normalization.k;
    norm["d"] = d.normalization.d;
    json rows = json::array();
    for (const auto& row : d.normalization.table) {
        json rj;
        rj["branch"] = row.branch + 1;
        rj["s"] = row.s_image;
        if (!row.u_image.empty()) rj["u"] = row.u_image;
        rows.push_back(rj);
    }
    norm["map"] = rows;
    j["normalization"] = norm;

    if (d.eta) j["eta"] = *d.eta;
    if (d.glue) {
        json gj;
        gj["branch_one"] = d.glue->branch_one.relations.at(0).str();
        json crels = json::array();
        for (const auto& r : d.glue->complement.relations) crels.push_back(r.str());
        gj["complement"] = crels;
        gj["cokernel"] = d.glue->cokernel;
        gj["substitution_checks_ok"] = d.glue->substitution_checks_ok;
        j["glue"] = gj;
    }
    return j;
}

json audit_to_json(const AuditRecord& a) {
    json j;
    j["reduced"] = a.reduced;
    j["genus"] = a.genus;
    j["route_cover"] = a.route_cover;
    if (a.route_contracted) {
        j["route_contracted"] = *a.route_contracted;
        j["surviving_genus_sum"] = a.surviving_genus_sum;
        j["chart_delta_sum"] = a.chart_delta_sum;
        j["surviving_nodes"] = a.surviving_node_count;
        j["components"] = a.component_count;
    }
    if (a.assembled_pa) j["assembled_pa"] = *a.assembled_pa;
    if (a.assembled_partial) j["assembled_partial"] = true;
    j["match"] = a.match;
    return j;
}

}  // namespace

PipelineResult run_contract_pipeline(const InputDoc& doc, Strictness strictness) {
    PipelineResult r;
    const TropCover& t = doc.cover;

    r.cover_validation = validate_cover(t);
    r.cover_ok = r.cover_validation.passed;

    json validation;
    {
        json cj;
        cj["passed"] = r.cover_ok;
        json viols = json::array();
        for (const auto& v : r.cover_validation.violations) {
            json vj;
            vj["code"] = v.code;
            vj["message"] = v.message;
            viols.push_back(vj);
        }
        cj["violations"] = viols;
        validation["cover"] = cj;
    }

    if (r.cover_ok) r.cover_graph = build_cover_graph(t);

    if (doc.datum && r.cover_ok) {
        r.strict_validity = is_contraction_datum(t, *doc.datum, Strictness::strict);
        r.lax_validity = is_contraction_datum(t, *doc.datum, Strictness::lax);
        r.datum_ok = strictness == Strictness::strict ? r.strict_validity->ok
                                                      : r.lax_validity->ok;
        json dj;
        dj["strict"] = validity_to_json(*r.strict_validity);
        dj["lax"] = validity_to_json(*r.lax_validity);
        dj["datum"] = clfunc_to_json(t, *doc.datum);
        validation["datum"] = dj;
    } else if (!doc.datum) {
        r.datum_ok = r.cover_ok;  // nothing further to check
    }
    r.report["validation"] = validation;

    if (!r.cover_ok || !doc.datum || !r.lax_validity || !r.lax_validity->ok) return r;

    const CLFunction& f = *doc.datum;
    DegreeProfile profile = multidegree(t, f);
    json pj;
    json degs;
    for (size_t v = 0; v < t.vertices.size(); ++v)
        degs[std::to_string(t.vertices[v].id)] = profile.deg[v].str();
    pj["deg"] = degs;
    pj["total"] = profile.total.str();
    json supp = json::array();
    for (int v : f.support(t)) supp.push_back(t.vertices[v].id);
    pj["support"] = supp;
    r.report["profile"] = pj;

    r.outcome = contract(t, *r.cover_graph, f);
    const ContractionOutcome& out = *r.outcome;

    json cj;
    json comps = json::array();
    for (const auto& comp : out.contracted) {
        json c = json::array();
        for (int v : comp) c.push_back(t.vertices[v].id);
        comps.push_back(c);
    }
    cj["contracted_components"] = comps;
    json ribbons = json::array();
    for (const auto& rb : out.ribbons) {
        json rj;
        json c = json::array();
        for (int v : rb.component) c.push_back(t.vertices[v].id);
        rj["component"] = c;
        rj["double_structure_degree"] = rb.double_structure_degree.str();
        rj["genus"] = rb.genus.str();
        ribbons.push_back(rj);
    }
    cj["ribbons"] = ribbons;
    json twist = json::array();
    for (int e : out.twisting_locus) twist.push_back(t.edges[e].id);
    cj["twisting_locus"] = twist;
    json parity = json::array();
    for (const auto& p : out.parity) {
        json pjj;
        pjj["edge"] = t.edges[p.edge].id;
        pjj["side_b_sum"] = p.side_b_sum;
        pjj["odd_for_b"] = p.odd_for_b;
        pjj["odd_for_L2"] = p.odd_for_L2;
        pjj["twisting"] = p.in_twisting_locus;
        parity.push_back(pjj);
    }
    cj["parity"] = parity;
    json pbar;
    json pvs = json::array();
    for (const auto& pv : out.pbar.vertices) {
        json v;
        json tv = json::array();
        for (int x : pv.t_vertices) tv.push_back(t.vertices[x].id);
        v["t_vertices"] = tv;
        v["ell"] = pv.ell;
        v["orbifold"] = pv.orbifold;
        pvs.push_back(v);
    }
    pbar["vertices"] = pvs;
    json pes = json::array();
    for (const auto& pe : out.pbar.edges) {
        json e;
        e["edge"] = t.edges[pe.t_edge].id;
        e["u"] = pe.u;
        e["v"] = pe.v;
        pes.push_back(e);
    }
    pbar["edges"] = pes;
    cj["pbar"] = pbar;
    r.report["contraction"] = cj;

    json charts = json::array();
    for (const auto& chart : out.charts) {
        ChartDetail d;
        d.chart = chart;
        d.presentation = present(chart);
        d.normalization = normalize(chart);
        if (chart.reduced()) {
            d.certificate = certify_gorenstein(chart);
            bool all_m = std::all_of(chart.branches.begin(), chart.branches.end(),
                                     [](const ChartBranch& b) { return b.m >= 1; });
            if (all_m) d.pullback = dualizing_pullback(chart);
            if (chart.ell >= 2) d.eta = eta_generator(chart);
        }
        if (chart.ell >= 2) d.glue = glue_decomposition(chart);
        charts.push_back(chart_to_json(t, d));
        r.charts.push_back(std::move(d));
    }
    r.report["charts"] = charts;

    json certs = json::array();
    for (size_t i = 0; i < r.charts.size(); ++i) {
        const auto& d = r.charts[i];
        if (!d.certificate) continue;
        json c;
        c["chart"] = (int)i;
        json cond = json::array();
        for (const auto& ce : d.certificate->conductor) {
            json cc;
            cc["param"] = ce.parameter;
            cc["exponent"] = ce.exponent;
            cond.push_back(cc);
        }
        c["conductor"] = cond;
        c["dim_O_over_c"] = d.certificate->dim_O_over_c;
        c["delta"] = d.certificate->delta;
        c["ok"] = d.certificate->ok;
        if (d.pullback) {
            json pb = json::array();
            for (const auto& p : *d.pullback) {
                json pp;
                pp["point"] = p.point;
                pp["multiplicity"] = p.multiplicity;
                pb.push_back(pp);
            }
            c["dualizing_pullback"] = pb;
        }
        certs.push_back(c);
    }
    r.report["certificates"] = certs;
    r.report["audit"] = audit_to_json(out.audit);
    return r;
}

LevelsResult run_levels_pipeline(const InputDoc& doc) {
    if (!doc.lambda_bar)
        throw std::invalid_argument("levels command needs a lambda_bar block in the input");
    LevelsResult out;
    out.levels = level_structure(doc.cover, *doc.lambda_bar);

    json levels;
    json lv;
    for (size_t v = 0; v < doc.cover.vertices.size(); ++v)
        lv[std::to_string(doc.cover.vertices[v].id)] = out.levels.level[v];
    levels["level"] = lv;
    levels["depth"] = out.levels.depth;
    out.report["levels"] = levels;

    json per_level = json::array();
    for (int i = 0; i >= -out.levels.depth; --i) {
        LevelReport lr;
        lr.level = i;
        Truncation trunc = truncate(doc.cover, *doc.lambda_bar, i);
        DatumValidity lax = is_contraction_datum(trunc.cover, trunc.fn, Strictness::lax);
        lr.lax_ok = lax.ok;
        json lj;
        lj["level"] = i;
        lj["truncation_lax_valid"] = lr.lax_ok;
        if (lr.lax_ok) {
            SproutResult sp = sprout(trunc.cover, trunc.fn);
            lr.sprouted = sp.sprouted;
            InputDoc level_doc;
            level_doc.cover = sp.cover;
            level_doc.datum = sp.fn;
            lr.pipeline = run_contract_pipeline(level_doc, Strictness::lax);
            if (lr.pipeline.outcome) {
                lr.reduced = lr.pipeline.outcome->ribbons.empty();
                lr.certificates_ok = true;
                for (const auto& d : lr.pipeline.charts)
                    if (d.certificate && !d.certificate->ok) lr.certificates_ok = false;
                lr.descends = lr.reduced && lr.certificates_ok;
            }
            lj["sprouted"] = lr.sprouted;
            lj["reduced_contraction"] = lr.reduced;
            lj["certificates_ok"] = lr.certificates_ok;
            lj["descends"] = lr.descends;
            lj["report"] = lr.pipeline.report;
        }
        per_level.push_back(lj);
        out.per_level.push_back(std::move(lr));
    }
    out.report["per_level"] = per_level;
    return out;
}

namespace {

void render_section(std::string& out, const json& report, const char* key);

void render_value(std::string& out, const json& v, int indent) {
    std::string pad(indent * 2, ' ');
    if (v.is_object()) {
        for (const auto& item : v.items()) {
            if (item.value().is_object() || item.value().is_array()) {
                out += pad + item.key() + ":\n";
                render_value(out, item.value(), indent + 1);
            } else {
                out += pad + item.key() + " = " + item.value().dump() + "\n";
            }
        }
    } else if (v.is_array()) {
        int idx = 0;
        for (const auto& item : v) {
            if (item.is_object() || item.is_array()) {
                out += pad + "- [" + std::to_string(idx) + "]\n";
                render_value(out, item, indent + 1);
            } else {
                out += pad + "- " + item.dump() + "\n";
            }
            ++idx;
        }
        if (idx == 0) out += pad + "(none)\n";
    } else {
        out += pad + v.dump() + "\n";
    }
}

void render_section(std::string& out, const json& report, const char* key) {
    if (!report.contains(key)) return;
    out += std::string("== ") + key + " ==\n";
    render_value(out, report.at(key), 1);
}

}  // namespace

std::string render_text_report(const json& report) {
    std::string out;
    for (const char* key : {"validation", "profile", "contraction", "charts", "certificates",
                            "audit", "levels", "per_level"})
        render_section(out, report, key);
    return out;
}

}  // namespace gorcontract
