#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mhforge/jobs.hpp"
#include "mhforge/parallel.hpp"

namespace {

struct Options {
    std::string target;
    std::string in;
    std::map<std::string, std::string> named;
    std::string variant;
    std::string kind;
    std::string output;
    bool trust = false;
    int window = 0;
    bool json = false;
    bool canonical = false;
    std::vector<int> criteria;
};

void add_inputs(CLI::App* cmd, Options& o) {
    for (const char* key : {"A", "B", "C", "R", "T", "f", "group"})
        cmd->add_option(std::string("--") + key,
                        o.named[key],
                        std::string("input ") + key + ": file path, inline JSON or catalog name")
            ->default_str("");
    cmd->add_option("--in", o.in, "main input: file path, inline JSON or catalog name");
    cmd->add_option("--variant", o.variant, "construction variant");
    cmd->add_flag("--trust-input", o.trust, "skip eager validation of action packs");
    cmd->add_option("--window", o.window, "K(Z) window radius for the names KZ and reflection")->check(CLI::PositiveNumber);
}

void add_output(CLI::App* cmd, Options& o) {
    cmd->add_flag("--json", o.json, "print the report as JSON");
    cmd->add_flag("--canonical", o.canonical, "with --json: omit the timing section");
    cmd->add_option("-o,--output", o.output, "write the artifact (or the report) as JSON");
}

mhf::JobSpec to_job(const std::string& command, const Options& o) {
    mhf::JobSpec job;
    job.command = command;
    job.target = command == "verify-iso" ? o.kind : o.target;
    for (const auto& [k, v] : o.named)
        if (!v.empty()) job.inputs[k] = v;
    if (!o.in.empty()) job.inputs["in"] = o.in;
    job.variant = o.variant;
    job.trust_input = o.trust;
    if (o.window > 0) job.window = o.window;
    job.criteria = o.criteria;
    return job;
}

mhf::Json reports_json(const mhf::JobResult& res, bool canonical) {
    auto one = [&](const mhf::Report& r) { return canonical ? r.canonical_json() : r.full_json(); };
    if (res.reports.size() == 1) return one(res.reports[0]);
    mhf::Json all = mhf::Json::array();
    for (const auto& r : res.reports) all.push_back(one(r));
    return mhf::Json{{"reports", all}};
}

int emit(const mhf::JobResult& res, const Options& o) {
    if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
    if (o.json) {
        if (!res.reports.empty()) std::cout << reports_json(res, o.canonical).dump(2) << "\n";
    } else {
        for (const auto& r : res.reports) std::cout << mhf::render_report(r);
    }
    if (!o.output.empty() && res.error.empty()) {
        std::ofstream out(o.output);
        if (!out) {
            std::cerr << "error: cannot write " << o.output << "\n";
            return 2;
        }
        out << (res.artifact ? *res.artifact : reports_json(res, true)).dump(2) << "\n";
        if (!o.json) std::cout << "wrote " << o.output << "\n";
    }
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mhforge: twisted tensor products of multiplier Hopf algebras with exact verification"};
    app.require_subcommand(1);
    std::size_t threads = 0;
    app.add_option("--threads", threads, "worker threads (default: MHFORGE_THREADS, else all cores)");

    Options o;
    auto* check = app.add_subcommand("check", "certify an input object");
    check->add_option("target", o.target, "hopf | algebra | pack | twist | long")->required();
    check->add_option("input", o.in, "input reference");
    add_inputs(check, o);
    add_output(check, o);

    auto* build = app.add_subcommand("build", "construct a product and certify it");
    build->add_option("target", o.target,
                      "twisted | smash | lr-smash | twisted-smash | two-sided | double | long-product")
        ->required();
    build->add_option("input", o.in, "input reference");
    add_inputs(build, o);
    add_output(build, o);

    auto* verify = app.add_subcommand("verify", "certify an isomorphism");
    verify->require_subcommand(1);
    auto* iso = verify->add_subcommand("iso", "isomorphism certificate");
    iso->add_option("--kind", o.kind, "isomorphism kind")->required()->check(CLI::IsMember(mhf::iso_kinds()));
    add_inputs(iso, o);
    add_output(iso, o);

    auto* report = app.add_subcommand("report", "run the acceptance criteria 1-9");
    report->add_option("--criterion", o.criteria, "criterion numbers (default: all)");
    add_output(report, o);

    auto* catalog = app.add_subcommand("catalog", "list catalog names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (threads > 0) mhf::set_thread_count(threads);

    if (catalog->parsed()) {
        for (const auto& [kind, name] : mhf::catalog_examples()) std::cout << kind << "\t" << name << "\n";
        return 0;
    }
    std::string command = check->parsed() ? "check" : build->parsed() ? "build" : report->parsed() ? "report" : "verify-iso";
    return emit(mhf::run_job(to_job(command, o)), o);
}
