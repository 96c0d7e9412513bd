#include "readorder/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "readorder/engine.hpp"
#include "readorder/errors.hpp"
#include "readorder/io.hpp"
#include "readorder/metrics.hpp"
#include "readorder/svg.hpp"
#include "readorder/synth.hpp"

namespace readorder::cli {

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
    std::string engine_name = "xycut++";
    std::string orientation = "auto";
    std::string taxonomy_path;
    Params params;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--engine", opts.engine_name,
                    "Ordering engine: baseline|premask|mgs|xycut++")
        ->default_val("xycut++");
    cmd->add_option("--beta", opts.params.beta,
                    "Cross-layout length scale factor");
    cmd->add_option("--theta-v", opts.params.theta_v,
                    "Density threshold for cut-axis selection");
    cmd->add_option("--tau-overlap", opts.params.tau_overlap,
                    "Projection-IoU gate used in matching");
    cmd->add_option("--min-gap", opts.params.min_gap,
                    "Minimum projection gap width, page units");
    cmd->add_option("--isolation-multiplier", opts.params.isolation_multiplier,
                    "Isolation radius as a multiple of median text height");
    cmd->add_flag_callback(
        "--no-early-term",
        [&opts] { opts.params.early_termination = false; },
        "Disable early termination in distance accumulation");
    cmd->add_option("--orientation", opts.orientation,
                    "auto|horizontal|vertical")
        ->default_val("auto");
    cmd->add_option("--taxonomy", opts.taxonomy_path,
                    "JSON file mapping raw labels to title|vision|other");
}

// Resolves flags into engine/params/taxonomy; throws CLI::ValidationError on
// bad enum values so usage problems exit with code 2.
struct ResolvedOptions {
    Engine engine = Engine::XyCutPP;
    Params params;
    Taxonomy taxonomy = Taxonomy::defaults();
};

ResolvedOptions resolve(const CommonOptions& opts) {
    ResolvedOptions r;
    const auto engine = engine_from_string(opts.engine_name);
    if (!engine) {
        throw CLI::ValidationError("--engine",
                                   "unknown engine '" + opts.engine_name + "'");
    }
    r.engine = *engine;
    r.params = opts.params;
    if (opts.orientation == "horizontal") {
        r.params.orientation_override = Orientation::HorizontalDoc;
    } else if (opts.orientation == "vertical") {
        r.params.orientation_override = Orientation::VerticalDoc;
    } else if (opts.orientation != "auto") {
        throw CLI::ValidationError("--orientation",
                                   "must be auto, horizontal, or vertical");
    }
    if (!opts.taxonomy_path.empty()) {
        r.taxonomy = io::load_taxonomy(opts.taxonomy_path);
    }
    return r;
}

void print_warnings(const std::vector<std::string>& warnings,
                    const std::string& source) {
    for (const std::string& w : warnings) {
        std::cerr << "warning: " << source << ": " << w << "\n";
    }
}

int cmd_order(const std::string& input, const std::string& output,
              const CommonOptions& opts) {
    const ResolvedOptions r = resolve(opts);

    std::vector<std::pair<fs::path, fs::path>> jobs;
    if (fs::is_directory(input)) {
        fs::create_directories(output);
        for (const fs::path& file : io::list_json_files(input)) {
            jobs.emplace_back(file, fs::path(output) / file.filename());
        }
        if (jobs.empty()) {
            std::cerr << "error: no .json files in " << input << "\n";
            return 1;
        }
    } else {
        jobs.emplace_back(input, output);
    }

    int failures = 0;
    for (const auto& [in_path, out_path] : jobs) {
        try {
            std::vector<std::string> warnings;
            const Page page = io::load_page(in_path, &warnings);
            print_warnings(warnings, in_path.string());
            const OrderResult result =
                order_page(page, r.engine, r.params, r.taxonomy);
            io::save_page(out_path, page, &result.order);
        } catch (const std::exception& e) {
            // load/save errors already carry the file path.
            std::cerr << "error: " << e.what() << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}

std::map<std::string, std::vector<int>> load_order_dir(const fs::path& dir) {
    std::map<std::string, std::vector<int>> orders;
    if (fs::is_directory(dir)) {
        for (const fs::path& file : io::list_json_files(dir)) {
            const Page page = io::load_page(file);
            orders[page.page_id] = io::indexed_order(page);
        }
    } else {
        const Page page = io::load_page(dir);
        orders[page.page_id] = io::indexed_order(page);
    }
    return orders;
}

int cmd_eval(const std::string& pred_dir, const std::string& gt_dir,
             const std::string& manifest_path, const std::string& report_path) {
    const auto pred = load_order_dir(pred_dir);
    const auto ref = load_order_dir(gt_dir);
    std::map<std::string, std::string> split_of;
    if (!manifest_path.empty()) split_of = io::load_manifest(manifest_path);

    const metrics::MetricReport report = metrics::evaluate(pred, ref, split_of);
    std::cout << metrics::format_table(report);

    if (!report_path.empty()) {
        nlohmann::ordered_json doc;
        for (const auto& [split, agg] : report.splits) {
            doc["splits"][split] = {{"pages", agg.pages},
                                    {"bleu4", agg.bleu4},
                                    {"ard", agg.ard},
                                    {"tau", agg.tau}};
        }
        for (const auto& [page_id, pm] : report.per_page) {
            doc["pages"][page_id] = {
                {"bleu4", pm.bleu4}, {"ard", pm.ard}, {"tau", pm.tau}};
        }
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw SchemaError("cannot write " + report_path);
        out << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_render(const std::string& page_path, const std::string& order_path,
               const std::string& output) {
    std::vector<std::string> warnings;
    const Page page = io::load_page(page_path, &warnings);
    print_warnings(warnings, page_path);

    std::vector<int> order;
    if (!order_path.empty()) {
        const Page ordered = io::load_page(order_path);
        if (ordered.blocks.size() != page.blocks.size()) {
            throw SchemaError("order document block count differs from page");
        }
        order = io::indexed_order(ordered);
    } else {
        order = io::indexed_order(page);
    }

    const std::string svg_text = svg::render(page, order);
    std::ofstream out(output, std::ios::binary);
    if (!out) throw SchemaError("cannot write " + output);
    out << svg_text;
    return 0;
}

int cmd_bench(const std::string& corpus_dir, int repeats,
              const CommonOptions& opts) {
    const ResolvedOptions r = resolve(opts);
    std::vector<Page> pages;
    if (fs::is_directory(corpus_dir)) {
        for (const fs::path& file : io::list_json_files(corpus_dir)) {
            pages.push_back(io::load_page(file));
        }
    } else {
        pages.push_back(io::load_page(corpus_dir));
    }
    if (pages.empty()) throw EmptyCorpusError("no pages in " + corpus_dir);

    const auto engine_fn = [&r](const Page& page) {
        return order_page(page, r.engine, r.params, r.taxonomy);
    };
    const metrics::FpsReport report = metrics::fps_bench(pages, engine_fn, repeats);
    std::cout << "engine: " << to_string(r.engine) << "\n"
              << "pages: " << report.pages << "\n"
              << "repeats: " << report.repeats << "\n";
    char line[96];
    std::snprintf(line, sizeof(line), "fps mean: %.1f\nfps min: %.1f\nfps max: %.1f\n",
                  report.mean_fps, report.min_fps, report.max_fps);
    std::cout << line;
    return 0;
}

int cmd_synth(const std::string& out_dir, uint64_t seed,
              const std::string& spec_text) {
    synth::CorpusSpec spec;
    if (spec_text.empty()) {
        spec = synth::default_corpus_spec();
    } else {
        std::stringstream ss(spec_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw CLI::ValidationError("--spec",
                                           "expected class=count[,class=count...]");
            }
            synth::LayoutClass cls;
            if (!synth::class_from_string(item.substr(0, eq), cls)) {
                throw CLI::ValidationError("--spec", "unknown layout class '" +
                                                         item.substr(0, eq) + "'");
            }
            spec.emplace_back(cls, std::stoi(item.substr(eq + 1)));
        }
    }

    const synth::Corpus corpus = synth::generate_corpus(spec, seed);
    const fs::path root(out_dir);
    fs::create_directories(root / "input");
    fs::create_directories(root / "gt");
    for (const synth::GeneratedPage& gp : corpus.pages) {
        Page input_page = gp.page;
        for (Block& b : input_page.blocks) b.gt_index.reset();
        io::save_page(root / "input" / (gp.page.page_id + ".json"), input_page);
        io::save_page(root / "gt" / (gp.page.page_id + ".json"), gp.page);
    }
    io::save_manifest(root / "manifest.json", corpus.split_of);
    std::cout << "wrote " << corpus.pages.size() << " pages to " << out_dir << "\n";
    return 0;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Reading-order engine for detected document layout blocks"};
    app.require_subcommand(1);

    // order
    auto* order = app.add_subcommand("order", "Sort blocks into reading order");
    std::string order_input;
    std::string order_output;
    CommonOptions order_opts;
    order->add_option("input", order_input, "Input page JSON file or directory")
        ->required();
    order->add_option("-o,--output", order_output, "Output file or directory")
        ->required();
    add_common_options(order, order_opts);

    // eval
    auto* eval = app.add_subcommand("eval", "Score predictions against GT");
    std::string eval_pred;
    std::string eval_gt;
    std::string eval_manifest;
    std::string eval_report;
    eval->add_option("pred", eval_pred, "Predicted order JSON file or directory")
        ->required();
    eval->add_option("gt", eval_gt, "Ground-truth JSON file or directory")
        ->required();
    eval->add_option("--manifest", eval_manifest,
                     "Split manifest: {page_id: complex|regular}");
    eval->add_option("-o,--report", eval_report, "Write the report as JSON");

    // render
    auto* render = app.add_subcommand("render", "Render an SVG overlay");
    std::string render_page;
    std::string render_order;
    std::string render_out;
    render->add_option("page", render_page, "Page JSON file")->required();
    render->add_option("order", render_order,
                       "Ordered JSON file (defaults to the page's own indices)");
    render->add_option("-o,--output", render_out, "Output SVG path")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Time the ordering module only");
    std::string bench_corpus;
    int bench_repeats = 10;
    CommonOptions bench_opts;
    bench->add_option("corpus", bench_corpus, "Corpus directory")->required();
    bench->add_option("--repeats", bench_repeats, "Timing runs")->default_val(10);
    add_common_options(bench, bench_opts);

    // synth
    auto* synth_cmd =
        app.add_subcommand("synth", "Generate a synthetic labeled corpus");
    std::string synth_out;
    uint64_t synth_seed = 0;
    std::string synth_spec;
    synth_cmd->add_option("--out", synth_out, "Output directory")->required();
    synth_cmd->add_option("--seed", synth_seed, "Corpus seed")->default_val(0);
    synth_cmd->add_option(
        "--spec", synth_spec,
        "class=count[,class=count...]; default: 100-page 30/70 corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (order->parsed()) return cmd_order(order_input, order_output, order_opts);
        if (eval->parsed()) {
            return cmd_eval(eval_pred, eval_gt, eval_manifest, eval_report);
        }
        if (render->parsed()) return cmd_render(render_page, render_order, render_out);
        if (bench->parsed()) return cmd_bench(bench_corpus, bench_repeats, bench_opts);
        if (synth_cmd->parsed()) return cmd_synth(synth_out, synth_seed, synth_spec);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace readorder::cli
