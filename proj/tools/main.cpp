#include "pnhom/analysis.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

// "4" or "4,N" or "4,Nprime"
pnhom::PipelineSpec parse_pipeline_arg(const std::string& arg) {
    pnhom::PipelineSpec spec;
    std::string head = arg;
    std::string variant = "P";
    if (auto comma = arg.find(','); comma != std::string::npos) {
        head = arg.substr(0, comma);
        variant = arg.substr(comma + 1);
    }
    try {
        spec.n = std::stoul(head);
    } catch (const std::exception&) {
        throw pnhom::Error("bad pipeline size '" + head + "'");
    }
    spec.variant = pnhom::pipeline_variant_from_string(variant);
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology analysis of elementary Petri nets"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Analyze one net");
    std::string file;
    std::string pipeline;
    bool all_states = false;
    long long max_dim = -1;
    std::vector<std::string> run_names;
    bool as_json = false;
    bool dump = false;
    std::uint64_t max_states = pnhom::kDefaultStateCap;
    analyze->add_option("file", file, "net definition file");
    analyze->add_option("--pipeline", pipeline, "generated pipeline net: N[,variant]");
    analyze->add_flag("--all-states", all_states, "use the full power set of places");
    analyze->add_option("--max-dim", max_dim, "largest reported homology degree");
    analyze->add_option("--run", run_names, "comma list of analyses")->delimiter(',');
    analyze->add_flag("--json", as_json, "structured output");
    analyze->add_flag("--dump-complex", dump, "append the cube complex listing");
    analyze->add_option("--max-states", max_states, "state count cap");

    auto* verify = app.add_subcommand("verify", "Re-check the pipeline theorems");
    std::size_t n_max = 0;
    bool verify_json = false;
    verify->add_option("--n-max", n_max, "largest pipeline length")->required();
    verify->add_flag("--json", verify_json, "structured output");
    verify->add_option("--max-states", max_states, "state count cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return pnhom::kExitUsage;
    }

    try {
        pnhom::RunResult result;
        if (analyze->parsed()) {
            pnhom::AnalysisRequest request;
            if (!pipeline.empty() && !file.empty()) {
                std::cerr << "error: give either a file or --pipeline, not both\n";
                return pnhom::kExitUsage;
            }
            if (!pipeline.empty())
                request.input = parse_pipeline_arg(pipeline);
            else if (!file.empty())
                request.input = file;
            else {
                std::cerr << "error: a net file or --pipeline is required\n";
                return pnhom::kExitUsage;
            }
            request.mode =
                all_states ? pnhom::ExploreMode::all_states : pnhom::ExploreMode::reachable;
            if (run_names.empty()) run_names = {"homology"};
            for (const auto& name : run_names)
                request.analyses.push_back(pnhom::analysis_from_string(name));
            if (max_dim >= 0) request.max_dim = static_cast<std::size_t>(max_dim);
            request.json = as_json;
            request.dump = dump;
            request.max_states = max_states;
            result = pnhom::run_analysis(request);
        } else {
            result = pnhom::run_verify(n_max, verify_json, max_states);
        }
        if (result.exit_code == pnhom::kExitOk ||
            result.exit_code == pnhom::kExitCheckFailed)
            std::cout << result.output;
        else
            std::cerr << result.output;
        return result.exit_code;
    } catch (const pnhom::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return pnhom::kExitParse;
    } catch (const pnhom::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return pnhom::kExitCapacity;
    } catch (const pnhom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return pnhom::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
