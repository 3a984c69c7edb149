#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <zeromode/cli.hpp>

namespace {

struct SubcommandFlags {
    std::map<std::string, std::string> values;
    std::string output = "csv";
    std::string out_path;
};

} // namespace

int main(int argc, char** argv) {
    namespace zc = zeromode::cli;
    CLI::App app{"Theta functions, c-functions, zero-mode densities and radial spectra"};
    app.require_subcommand(1);

    std::map<std::string, SubcommandFlags> flags;
    for (auto const& name : zc::subcommands()) {
        auto* sub = app.add_subcommand(name);
        auto& f = flags[name];
        for (auto const& key : zc::allowed_parameters(name)) {
            sub->add_option("--" + key, f.values[key]);
        }
        sub->add_option("--output", f.output)->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", f.out_path);
    }

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? 0 : zc::invalid_arguments;
    }

    auto* sub = app.get_subcommands().front();
    auto const& f = flags[sub->get_name()];
    zc::RunConfig cfg;
    cfg.subcommand = sub->get_name();
    for (auto const& [key, value] : f.values) {
        if (sub->get_option("--" + key)->count() > 0) cfg.parameters[key] = value;
    }
    cfg.output_format = f.output == "json" ? zc::OutputFormat::json : zc::OutputFormat::csv;
    if (!f.out_path.empty()) cfg.output_path = f.out_path;
    return zc::run(cfg, std::cout, std::cerr);
}
