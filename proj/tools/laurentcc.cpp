#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "laurent/report.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Laurent cancellation toolkit"};
    app.require_subcommand(1, 1);
    std::string file;
    std::vector<std::string> targets;
    bool json = false, trace = false;
    std::optional<std::uint64_t> seed;

    for (const auto& verb : laurent::subcommands()) {
        CLI::App* sub = app.add_subcommand(verb);
        sub->add_option("file", file, "session file")->required();
        sub->add_option("targets", targets, "objects to operate on");
        sub->add_flag("--json", json, "emit the JSON report");
        sub->add_flag("--trace", trace, "print every normalization step");
        sub->add_option("--seed", seed, "run the randomized self-check with this seed");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    std::string verb = app.get_subcommands().front()->get_name();

    std::ifstream in(file, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << file << "'\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    laurent::RunOptions opts;
    opts.trace = trace;
    opts.seed = seed;
    opts.targets = targets;
    laurent::RunResult r = laurent::run_text(buf.str(), verb, opts);
    r.report["file"] = file;
    if (json)
        std::cout << r.report.dump(2) << "\n";
    else
        (r.exit_code == 0 ? std::cout : std::cerr) << r.text;
    return r.exit_code;
}
