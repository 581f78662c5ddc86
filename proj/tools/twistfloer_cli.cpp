// Command-line front end: validate / act / certify / floer / conjugate / cut,
// each reading one JSON instance file. --json switches stdout to a single
// machine-readable document (normalized instance plus a "report" object).
// Exit codes: 0 success, 1 failed validity verdict, 2 malformed input or an
// exceeded bound.

#include "twistfloer/errors.hpp"
#include "twistfloer/instance.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"Dehn-twist homology actions, pseudo-Anosov certification, "
                 "and graded fixed-point cohomology ranks"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json,
                 "emit one JSON document (normalized instance + report) instead of text");

    std::string path;
    std::vector<int> perm;
    const struct {
        const char* name;
        const char* help;
    } commands[] = {
        {"validate", "check the acceptability (or strong acceptability) predicate"},
        {"act", "compute the homology action of the instance's twist word"},
        {"certify", "run the sufficiency-only pseudo-Anosov certificate"},
        {"floer", "compute the Z/2-graded fixed-point cohomology rank vector"},
        {"conjugate", "reorder the twist word by an explicit conjugation"},
        {"cut", "cut the instance's map along its darted curves"},
    };
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("instance", path, "instance JSON file")->required();
        if (std::string(c.name) == "conjugate")
            sub->add_option("--perm", perm,
                            "target arrangement as 1-based source positions, "
                            "e.g. --perm 2,3,1")
                ->delimiter(',');
    }

    CLI11_PARSE(app, argc, argv);

    try {
        const CLI::App* sub = app.get_subcommands().front();
        twistfloer::Instance inst = twistfloer::load_instance(path);
        twistfloer::CommandOptions opts;
        opts.json = json;
        opts.perm = perm;
        const twistfloer::CommandResult res =
            twistfloer::run_command(sub->get_name(), inst, opts);
        std::cout << (json ? res.json : res.human);
        return res.exit_code;
    } catch (const twistfloer::geometry_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const twistfloer::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const twistfloer::bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const twistfloer::internal_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
