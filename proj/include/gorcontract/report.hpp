#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorcontract/io.hpp"
#include "gorcontract/oracle.hpp"
#include "gorcontract/singlab.hpp"

namespace gorcontract {

// Everything computed for one chart of the outcome.
struct ChartDetail {
    SingularityChart chart;
    Presentation presentation;
    NormalizationData normalization;
    std::optional<GorensteinCertificate> certificate;          // reduced charts
    std::optional<std::vector<PullbackMultiplicity>> pullback; // reduced, all m >= 1
    std::optional<std::string> eta;                            // reduced, ell >= 2
    std::optional<GlueDecomposition> glue;                     // ell >= 2
};

struct PipelineResult {
    bool cover_ok = false;
    bool datum_ok = false;  // under the selected strictness
    ValidationReport cover_validation;
    std::optional<DatumValidity> strict_validity;
    std::optional<DatumValidity> lax_validity;
    std::optional<CoverGraph> cover_graph;
    std::optional<ContractionOutcome> outcome;
    std::vector<ChartDetail> charts;
    json report;  // sections: validation, profile, contraction, charts, certificates, audit
};

// Validation, multidegree, contraction, chart presentations, certificates,
// and the genus audit for one input document. The outcome is computed only
// when the datum is lax-valid; validation failures still produce a report.
PipelineResult run_contract_pipeline(const InputDoc& doc, Strictness strictness);

struct LevelReport {
    int level = 0;
    bool lax_ok = false;       // the truncation is a lax contraction datum
    int sprouted = 0;          // bubbles inserted before contracting
    bool reduced = false;      // no ribbons in the outcome
    bool certificates_ok = false;
    bool descends = false;     // reduced with every certificate passing
    PipelineResult pipeline;
};

struct LevelsResult {
    LevelStructure levels;
    std::vector<LevelReport> per_level;
    json report;
};

// Truncate + sprout + contract at every level of the supplied lambda_bar.
LevelsResult run_levels_pipeline(const InputDoc& doc);

std::string render_text_report(const json& report);

}  // namespace gorcontract
