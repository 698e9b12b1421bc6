#include <gcell/report.hh>

#include <json.hpp>

#include <algorithm>
#include <sstream>

using std::string;

namespace gcell
{
    auto Report::passed() const -> bool
    {
        return std::all_of(checks.begin(), checks.end(), [] (const CheckResult & c) { return c.passed; });
    }

    auto report_from(const AxiomReport & axioms) -> Report
    {
        return Report{axioms.system, axioms.truncation.to_string(), axioms.checks, {}};
    }

    auto render_text(const Report & r) -> string
    {
        std::ostringstream out;
        out << "system: " << r.system << "\n";
        out << "truncation: " << r.truncation << "\n";
        for (auto & item : r.items)
            out << "  " << item << "\n";
        for (auto & c : r.checks)
            out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        out << "STATUS: " << r.status() << "\n";
        return out.str();
    }

    auto render_json(const Report & r) -> string
    {
        nlohmann::ordered_json j;
        j["system"] = r.system;
        j["truncation"] = r.truncation;
        j["checks"] = nlohmann::ordered_json::array();
        for (auto & c : r.checks)
            j["checks"].push_back({{"name", c.name}, {"status", c.passed ? "PASS" : "FAIL"}, {"detail", c.detail}});
        j["status"] = r.status();
        if (! r.items.empty())
            j["items"] = r.items;
        return j.dump(2) + "\n";
    }
}
