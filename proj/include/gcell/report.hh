#ifndef GCELL_REPORT_HH
#define GCELL_REPORT_HH 1

#include <gcell/system.hh>

#include <string>
#include <vector>

namespace gcell
{
    struct Report
    {
        std::string system;
        std::string truncation;
        std::vector<CheckResult> checks;
        /// Free-form listing printed ahead of the checks (threads, blocks, ...).
        std::vector<std::string> items;

        auto passed() const -> bool;
        auto status() const -> std::string { return passed() ? "PASS" : "FAIL"; }
    };

    auto report_from(const AxiomReport & axioms) -> Report;

    auto render_text(const Report & r) -> std::string;

    /// {system, truncation, checks: [{name, status, detail}], status} plus items when present.
    auto render_json(const Report & r) -> std::string;
}

#endif
