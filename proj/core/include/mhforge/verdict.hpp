#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mhforge/error.hpp"
#include "mhforge/linear_map.hpp"

namespace mhf {

// A reproducible counterexample: which identity failed, on which basis
// tuple, and the two sides.
struct Witness {
    std::string equation;
    std::vector<std::string> tuple;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct Condition {
    std::string id;           // condition id, see ids.hpp
    std::string description;
    bool pass = true;
    std::uint64_t checked = 0;  // number of basis tuples examined
    std::optional<Witness> witness;
};

class Verdict {
public:
    Verdict() = default;
    explicit Verdict(std::string subject) : subject_(std::move(subject)) {}

    Verdict& add(Condition c);
    Verdict& merge(const Verdict& other);
    bool pass() const;
    const std::vector<Condition>& conditions() const { return conditions_; }
    const Condition* find(const std::string& id) const;
    const Condition* first_failure() const;
    const std::string& subject() const { return subject_; }
    std::string summary() const;

private:
    std::string subject_;
    std::vector<Condition> conditions_;
};

// Compares two maps column by column; failure carries the first differing
// source basis tuple.
Condition check_equal(const std::string& id, const std::string& description, const LinearMap& lhs,
                      const LinearMap& rhs, const std::vector<Index>* domain = nullptr);
Condition pass_condition(const std::string& id, const std::string& description, std::uint64_t checked = 0);
Condition fail_condition(const std::string& id, const std::string& description, Witness w);

// Runs a check, turning WindowOverflow / MathError into a failed condition.
template <class Fn>
Condition guarded(const std::string& id, const std::string& description, Fn&& fn) {
    try {
        return fn();
    } catch (const MathError& e) {
        return fail_condition(id, description, Witness{id, {}, "", "", e.what()});
    }
}

struct Report {
    std::string construction;
    Verdict verdict;
    std::map<std::string, std::uint64_t> dims;
    std::map<std::string, double> timing_ms;  // non-canonical
    nlohmann::ordered_json extra;             // canonical construction data

    nlohmann::ordered_json canonical_json() const;
    nlohmann::ordered_json full_json() const;
};

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace mhf
