#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhforge/serialize.hpp"

namespace mhf {

// One unit of work for the command line.
//   command: check | build | verify-iso | report
//   target:  check   -> hopf | algebra | pack | twist | long
//            build   -> twisted | smash | lr-smash | twisted-smash | two-sided | double | long-product
//            verify-iso -> the isomorphism kind (lemma-2.2.2, prop-2.4.3, ...)
//   inputs:  named references (in, A, B, C, R, T, f, group), each a file
//            path, inline JSON or catalog name
struct JobSpec {
    std::string command;
    std::string target;
    std::map<std::string, std::string> inputs;
    std::string variant;
    bool trust_input = false;
    std::optional<int> window;
    std::vector<int> criteria;  // report: empty means all
};

struct JobResult {
    std::vector<Report> reports;
    int exit_code = 0;  // 0 pass, 1 counterexample, 2 input error
    std::optional<Json> artifact;
    std::string error;
};

JobResult run_job(const JobSpec& job);
// Accepted --kind values for verify-iso.
const std::vector<std::string>& iso_kinds();

struct Criterion {
    int number;
    std::string title;
    double budget_s;
    double part_budget_s;  // per timed part of the report, 0 when untimed
};
const std::vector<Criterion>& criteria();
// Criteria 1..9; the determinism criterion is a rerun of these.
Report run_criterion(int number);

// Human-readable rendering of a report.
std::string render_report(const Report& r);

}  // namespace mhf
