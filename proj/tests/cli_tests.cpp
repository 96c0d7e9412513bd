// End-to-end checks of the installed binary: exit codes, file outputs, and
// determinism of the synth -> order -> eval -> render loop.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const fs::path out_file =
        fs::temp_directory_path() / "readorder_cli_out.txt";
    const std::string cmd =
        std::string(READORDER_BIN) + " " + args + " > " + out_file.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.stdout_text = buffer.str();
    return result;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name)
        : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("unknown engine is a usage error") {
    TempDir tmp("readorder_cli_usage");
    const fs::path page = tmp.path / "page.json";
    std::ofstream(page) << R"({"page_id":"x","page_size":[100,100],
        "blocks":[{"bbox":[1,1,9,9],"label":"text"}]})";
    const RunResult r = run("order " + page.string() + " -o " +
                            (tmp.path / "out.json").string() + " --engine nope");
    CHECK(r.exit_code == 2);
}

TEST_CASE("missing subcommand is a usage error") {
    CHECK(run("").exit_code == 2);
}

TEST_CASE("malformed page is a data error, batch keeps going") {
    TempDir tmp("readorder_cli_bad");
    fs::create_directories(tmp.path / "in");
    std::ofstream(tmp.path / "in" / "good.json")
        << R"({"page_id":"good","page_size":[100,100],
               "blocks":[{"bbox":[1,1,9,9],"label":"text"}]})";
    std::ofstream(tmp.path / "in" / "bad.json")
        << R"({"page_id":"bad","page_size":[100,100],
               "blocks":[{"bbox":[10,10,5,20],"label":"text"}]})";
    const RunResult r = run("order " + (tmp.path / "in").string() + " -o " +
                            (tmp.path / "out").string());
    CHECK(r.exit_code == 1);
    CHECK(fs::exists(tmp.path / "out" / "good.json"));
    CHECK_FALSE(fs::exists(tmp.path / "out" / "bad.json"));
}

TEST_CASE("synth, order, eval, render round trip") {
    TempDir tmp("readorder_cli_round");
    const std::string corpus = (tmp.path / "corpus").string();

    // Small deterministic corpus.
    RunResult r = run("synth --out " + corpus +
                      " --seed 5 --spec single_column=3,spanning_header=2");
    CHECK(r.exit_code == 0);

    // Byte-identical regeneration.
    const std::string corpus2 = (tmp.path / "corpus2").string();
    run("synth --out " + corpus2 +
        " --seed 5 --spec single_column=3,spanning_header=2");
    for (const auto& entry : fs::directory_iterator(fs::path(corpus) / "gt")) {
        CHECK(read_file(entry.path()) ==
              read_file(fs::path(corpus2) / "gt" / entry.path().filename()));
    }

    // Order the inputs with the full engine.
    const std::string pred = (tmp.path / "pred").string();
    r = run("order " + corpus + "/input -o " + pred + " --engine xycut++");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(fs::path(pred) / "single_column_000.json"));

    // Evaluate against ground truth; the synthetic corpus is solved exactly.
    r = run("eval " + pred + " " + corpus + "/gt --manifest " + corpus +
            "/manifest.json -o " + (tmp.path / "report.json").string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("complex") != std::string::npos);
    CHECK(r.stdout_text.find("regular") != std::string::npos);
    CHECK(r.stdout_text.find("1.000") != std::string::npos);
    CHECK(fs::exists(tmp.path / "report.json"));

    // Render an overlay for one ordered page.
    const std::string svg = (tmp.path / "page.svg").string();
    r = run("render " + corpus + "/input/single_column_000.json " + pred +
            "/single_column_000.json -o " + svg);
    CHECK(r.exit_code == 0);
    const std::string svg_text = read_file(svg);
    CHECK(svg_text.find("<svg") != std::string::npos);
    CHECK(svg_text.find("marker-end") != std::string::npos);

    // Deterministic rendering.
    const std::string svg2 = (tmp.path / "page2.svg").string();
    run("render " + corpus + "/input/single_column_000.json " + pred +
        "/single_column_000.json -o " + svg2);
    CHECK(read_file(svg) == read_file(svg2));

    // Bench the ordering module on the generated corpus.
    r = run("bench " + corpus + "/input --engine xycut++ --repeats 2");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("fps mean:") != std::string::npos);

    // Mismatched page sets are a data error.
    fs::remove(fs::path(pred) / "single_column_000.json");
    r = run("eval " + pred + " " + corpus + "/gt");
    CHECK(r.exit_code == 1);
}

TEST_CASE("bench on an empty directory is a data error") {
    TempDir tmp("readorder_cli_empty");
    fs::create_directories(tmp.path / "empty");
    const RunResult r = run("bench " + (tmp.path / "empty").string());
    CHECK(r.exit_code == 1);
}
