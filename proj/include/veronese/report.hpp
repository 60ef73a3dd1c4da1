#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace veronese {

using json = nlohmann::json;

/// One verified statement: what was fed in, what was expected, what came out.
struct Check {
    std::string name;
    json inputs;
    json expected;
    json got;
    bool pass = false;
    // experiments record an outcome but never count as failures
    bool experiment = false;
};

class Report {
  public:
    Report() = default;
    explicit Report(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    const std::vector<Check>& checks() const { return checks_; }

    Check& add(std::string name, json inputs, json expected, json got, bool pass)
    {
        checks_.push_back({std::move(name), std::move(inputs), std::move(expected), std::move(got), pass, false});
        return checks_.back();
    }

    Check& add_experiment(std::string name, json inputs, json got)
    {
        checks_.push_back({std::move(name), std::move(inputs), nullptr, std::move(got), true, true});
        return checks_.back();
    }

    /// Appends the checks of another report, prefixing their names.
    void merge(const Report& other)
    {
        for (auto c : other.checks_) {
            if (!other.name_.empty()) c.name = other.name_ + "/" + c.name;
            checks_.push_back(std::move(c));
        }
    }

    int failures() const
    {
        int f = 0;
        for (const auto& c : checks_)
            if (!c.pass && !c.experiment) ++f;
        return f;
    }

    bool ok() const { return failures() == 0; }

    json checks_json() const
    {
        json arr = json::array();
        for (const auto& c : checks_) {
            json j = {{"name", c.name}, {"inputs", c.inputs}, {"expected", c.expected},
                      {"got", c.got}, {"pass", c.pass}};
            if (c.experiment) j["experiment"] = true;
            arr.push_back(std::move(j));
        }
        return arr;
    }

  private:
    std::string name_;
    std::vector<Check> checks_;
};

} // namespace veronese
