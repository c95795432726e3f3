// quadric: decide the isolated-singularity verdict for S/Sw and report the MCM data.

#include "quadric/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv)
{
    using namespace quadric::cli;

    CLI::App app{"Exact analysis of noncommutative quadric hypersurfaces"};
    std::string path;
    PipelineOptions opt;
    bool json = false;
    std::string stage;
    app.add_option("file", path, "presentation file")->required()->check(CLI::ExistingFile);
    app.add_option("--degree", opt.degree, "truncation degree N for Hilbert-level certificates")
        ->capture_default_str()
        ->check(CLI::Range(2, 40));
    app.add_option("--seed", opt.seed, "seed for generic-element searches")->capture_default_str();
    app.add_flag("--json", json, "print the report as JSON");
    app.add_option("--stage", stage, "stop after this stage")->check(CLI::IsMember(stage_names()));
    app.add_flag("--skip-qp-check", opt.skip_qp_check, "continue when the quantum polynomial certificate fails");
    CLI11_PARSE(app, argc, argv);
    if (!stage.empty())
        opt.stop_after = stage;

    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();

    Report report = run_pipeline_text(text.str(), opt);
    std::cout << (json ? render_json(report) : render_text(report));
    if (opt.skip_qp_check)
        std::cerr << "warning: --skip-qp-check given; the quantum polynomial hypothesis is not enforced\n";
    return report.hard_failure ? 1 : 0;
}
