// Command-line front end: validate covers and data, solve for contraction
// data, run the contraction, walk the level truncations, and emit reports as
// text, JSON, or DOT.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gorcontract/io.hpp"
#include "gorcontract/report.hpp"

using namespace gorcontract;

namespace {

enum : int { exit_ok = 0, exit_invalid = 1, exit_malformed = 2 };

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_dir, const std::string& name,
                  const std::string& payload) {
    if (out_dir.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / name);
    out << payload;
}

struct Options {
    std::string input;
    std::string format = "text";
    std::string out_dir;
    bool strict = false;
    bool lax = false;
    int level = 0;
    std::string support;
    Strictness strictness() const { return strict ? Strictness::strict : Strictness::lax; }
};

std::string report_payload(const Options& opt, const json& report) {
    if (opt.format == "json") return report.dump(2) + "\n";
    return render_text_report(report);
}

int emit_pipeline(const Options& opt, const InputDoc& doc, const PipelineResult& r,
                  const std::string& stem) {
    if (opt.format == "dot") {
        if (r.cover_graph) write_output(opt.out_dir, stem + "_cover.dot", cover_dot(doc.cover, *r.cover_graph));
        if (r.outcome) write_output(opt.out_dir, stem + "_pbar.dot", pbar_dot(doc.cover, *r.outcome));
        return r.cover_ok && r.datum_ok ? exit_ok : exit_invalid;
    }
    write_output(opt.out_dir, stem + "_report." + (opt.format == "json" ? "json" : "txt"),
                 report_payload(opt, r.report));
    return r.cover_ok && r.datum_ok ? exit_ok : exit_invalid;
}

std::vector<int> parse_support(const TropCover& t, const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item.front() == 'v') item.erase(item.begin());
        out.push_back(t.vertex_index_of_id(std::stoi(item)));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gorcontract: contraction data on tropical hyperelliptic admissible covers"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input) cmd->add_option("input", opt.input, "input JSON document")->required();
        cmd->add_option("--format", opt.format, "text | json | dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        cmd->add_option("--out", opt.out_dir, "write outputs into this directory");
        cmd->add_flag("--strict", opt.strict, "gate on strict balancing");
        cmd->add_flag("--lax", opt.lax, "gate on lax validity (default)");
    };

    auto* validate = app.add_subcommand("validate", "check the cover and any datum");
    add_common(validate);
    auto* solve = app.add_subcommand("solve", "solve for the datum supported on given vertices");
    add_common(solve);
    solve->add_option("--support", opt.support, "comma-separated vertex ids")->required();
    auto* contract_cmd = app.add_subcommand("contract", "run the contraction");
    add_common(contract_cmd);
    auto* levels = app.add_subcommand("levels", "truncate + sprout + contract at every level");
    add_common(levels);
    levels->add_option("--level", opt.level, "report only this level (<= 0)")
        ->check(CLI::Range(-1000000, 0));
    auto* singularities = app.add_subcommand("singularities", "per-chart local data only");
    add_common(singularities);
    auto* report_cmd = app.add_subcommand("report", "full report");
    add_common(report_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        InputDoc doc = parse_input(read_file(opt.input));
        std::string stem = std::filesystem::path(opt.input).stem().string();

        if (validate->parsed()) {
            PipelineResult r = run_contract_pipeline(doc, opt.strictness());
            json out;
            out["validation"] = r.report.at("validation");
            write_output(opt.out_dir, stem + "_validate." + (opt.format == "json" ? "json" : "txt"),
                         opt.format == "json" ? out.dump(2) + "\n" : render_text_report(out));
            return r.cover_ok && r.datum_ok ? exit_ok : exit_invalid;
        }
        if (solve->parsed()) {
            SolveResult s = solve_slopes(doc.cover, parse_support(doc.cover, opt.support));
            if (!s.ok) {
                std::cerr << "no contraction datum: " << s.error << "\n";
                return exit_invalid;
            }
            InputDoc solved = doc;
            solved.datum = s.fn;
            write_output(opt.out_dir, stem + "_solved.json", input_to_json(solved).dump(2) + "\n");
            return exit_ok;
        }
        if (contract_cmd->parsed() || report_cmd->parsed()) {
            PipelineResult r = run_contract_pipeline(doc, opt.strictness());
            return emit_pipeline(opt, doc, r, stem);
        }
        if (singularities->parsed()) {
            PipelineResult r = run_contract_pipeline(doc, opt.strictness());
            json out;
            if (r.report.contains("charts")) out["charts"] = r.report.at("charts");
            if (r.report.contains("certificates")) out["certificates"] = r.report.at("certificates");
            write_output(opt.out_dir, stem + "_singularities." + (opt.format == "json" ? "json" : "txt"),
                         opt.format == "json" ? out.dump(2) + "\n" : render_text_report(out));
            return r.cover_ok && r.datum_ok ? exit_ok : exit_invalid;
        }
        if (levels->parsed()) {
            LevelsResult lr = run_levels_pipeline(doc);
            json out = lr.report;
            if (levels->count("--level")) {
                json filtered = json::array();
                for (const auto& item : out.at("per_level"))
                    if (item.at("level").get<int>() == opt.level) filtered.push_back(item);
                out["per_level"] = filtered;
            }
            write_output(opt.out_dir, stem + "_levels." + (opt.format == "json" ? "json" : "txt"),
                         opt.format == "json" ? out.dump(2) + "\n" : render_text_report(out));
            bool all_ok = true;
            for (const auto& l : lr.per_level)
                if (!l.lax_ok || !l.descends) all_ok = false;
            return all_ok ? exit_ok : exit_invalid;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_malformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_malformed;
    }
    return exit_ok;
}
