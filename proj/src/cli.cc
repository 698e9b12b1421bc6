#include <gcell/cli.hh>
#include <gcell/constructions.hh>
#include <gcell/dot.hh>
#include <gcell/dsl.hh>
#include <gcell/errors.hh>
#include <gcell/quotient.hh>
#include <gcell/report.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

using std::optional;
using std::string;
using std::vector;

namespace gcell
{
    auto resolve_system(const string & choice, Index grid, Index depth, Index breadth) -> SystemPtr
    {
        if (choice == "circle")
            return circle_system(grid);
        if (choice == "circle-identity")
            return circle_identity_system(grid);
        if (choice == "vanishing-tail")
            return vanishing_tail_system(VanishingReading::Shrinking);
        if (choice == "vanishing-tail-verbatim")
            return vanishing_tail_system(VanishingReading::Verbatim, grid);
        if (choice == "nat-full")
            return nat_full_system();
        if (choice == "nonregular")
            return nonregular_system();
        if (choice.starts_with("wedge:")) {
            auto rest = choice.substr(6);
            auto comma = rest.find(',');
            if (comma == string::npos)
                throw UsageError("wedge needs two components, as in wedge:<a>,<b>");
            Index budget = depth + 4;
            vector<WedgeComponent> parts;
            for (auto & name : {rest.substr(0, comma), rest.substr(comma + 1)}) {
                auto sys = resolve_system(name, grid, budget, std::max(breadth, budget));
                parts.push_back(WedgeComponent{sys, default_base(sys, budget, std::max(breadth, budget))});
            }
            return wedge_combine(parts, depth, budget, choice);
        }
        return finite_system(load_dsl_file(choice));
    }

    namespace
    {
        struct Options
        {
            string system;
            Index depth = 6;
            Index breadth = 20;
            Index grid = 16;
            Index level = 1;
            bool json = false;
            optional<std::uint64_t> seed;
            bool surjective = false;
            Index j = 2, i = 5, k = 1;
            optional<Index> witness_depth;
        };

        auto pass(string name, string detail) -> CheckResult
        {
            return CheckResult{std::move(name), true, std::move(detail), {}};
        }

        auto fail(string name, string detail) -> CheckResult
        {
            return CheckResult{std::move(name), false, std::move(detail), {}};
        }

        auto truncated(const Options & o) -> TruncatedSystem
        {
            if (o.system.empty())
                throw UsageError("--system is required");
            return TruncatedSystem(resolve_system(o.system, o.grid, o.depth, o.breadth), o.depth, o.breadth);
        }

        auto header(const TruncatedSystem & t) -> Report
        {
            return Report{t.system().name(), t.truncation().to_string(), {}, {}};
        }

        auto cmd_check(const Options & o) -> Report
        {
            auto t = truncated(o);
            AxiomOptions options;
            options.surjectivity = o.surjective;
            options.seed = o.seed;
            return report_from(check_axioms(t, options));
        }

        auto cmd_gcell(const Options & o) -> Report
        {
            auto t = truncated(o);
            auto r = header(t);
            auto all = enumerate_threads(t, t.depth());
            for (Index i = 1 ; i <= std::min(o.level, t.depth()) ; ++i) {
                optional<ThreadPrefix> missing;
                Index worst = i;
                for (auto & p : all) {
                    auto j = gcell_certificate(t.system(), p, i, t.depth());
                    if (! j) {
                        missing = p;
                        break;
                    }
                    worst = std::max(worst, *j);
                }
                auto name = "certificate at level " + to_string(i);
                if (missing)
                    r.checks.push_back(fail(name, "no j <= " + to_string(t.depth()) + " for " + missing->to_string()));
                else
                    r.checks.push_back(pass(name, to_string(all.size()) + " prefixes, largest j = " + to_string(worst)));
            }
            return r;
        }

        auto cmd_counterexample(const Options & o) -> Report
        {
            auto t = truncated(o);
            auto r = header(t);
            auto triple = transitivity_counterexample(t, o.depth);
            auto name = "transitive at depth " + to_string(o.depth);
            if (triple) {
                r.items = {"x = " + (*triple)[0].to_string(), "y = " + (*triple)[1].to_string(), "z = " + (*triple)[2].to_string()};
                r.checks.push_back(fail(name, "x ~ y, y ~ z, x !~ z"));
            }
            else
                r.checks.push_back(pass(name, "no counterexample among " + to_string(enumerate_threads(t, o.depth).size()) + " prefixes"));
            return r;
        }

        auto cmd_threads(const Options & o) -> Report
        {
            auto t = truncated(o);
            auto r = header(t);
            vector<ThreadPrefix> dead;
            auto all = enumerate_threads(t, o.depth, EnumerationOptions{1'000'000, &dead});
            for (auto & p : all)
                r.items.push_back(p.to_string());
            r.checks.push_back(pass("enumeration", to_string(all.size()) + " live prefixes, " + to_string(dead.size()) + " dead"));
            return r;
        }

        auto cmd_quotient(const Options & o) -> Report
        {
            auto t = truncated(o);
            auto r = header(t);
            auto partition = quotient_at_depth(t, o.depth);
            std::size_t merged = 0;
            for (auto & block : partition.blocks) {
                string line = "{";
                for (std::size_t b = 0 ; b < block.size() ; ++b)
                    line += (b == 0 ? "" : ", ") + block[b].to_string();
                r.items.push_back(line + "}");
                if (block.size() > 1)
                    ++merged;
            }
            r.checks.push_back(pass("closure classes", to_string(partition.blocks.size()) + " blocks, " + to_string(merged)
                        + " non-singleton, " + to_string(partition.prefix_count()) + " prefixes"));
            return r;
        }

        auto cmd_compare(const Options & o) -> Report
        {
            auto t = truncated(o);
            auto r = header(t);
            auto c = compare_quotients(t, o.depth);
            r.checks.push_back(pass("gstar_classes", to_string(c.gstar_classes)));
            r.checks.push_back(pass("levelq_threads", to_string(c.levelq_threads)));
            r.checks.push_back(CheckResult{"counts agree", c.equal(), c.witness, {}});
            return r;
        }

        auto cmd_witness(const Options & o) -> Report
        {
            Index depth = o.witness_depth.value_or(o.i + 5);
            auto w = nonregularity_witness(o.j, o.i, depth);
            Report r{"nonregular", "j=" + to_string(o.j) + " i=" + to_string(o.i) + " depth=" + to_string(depth), w.facts, {}};
            r.items = {"a = " + w.a.to_string(), "b = " + w.b.to_string(), "c = " + w.c.to_string(), "d = " + w.d.to_string()};
            return r;
        }

        auto cmd_trajectory(const Options & o) -> Report
        {
            auto chain = d_trajectory(o.i, o.k);
            Report r{"nonregular", "i=" + to_string(o.i) + " k=" + to_string(o.k), {}, {}};
            string line;
            for (std::size_t s = 0 ; s < chain.size() ; ++s)
                line += (s == 0 ? "" : " -> ") + chain[s].to_string();
            r.items.push_back(line);

            auto sys = nonregular_system();
            optional<string> clash;
            for (std::size_t s = 0 ; s + 1 < chain.size() && ! clash ; ++s) {
                Index level = o.i + static_cast<Index>(s);
                Index m = chain[s].params[1];
                auto pre = brute_force_preimages(*sys, level, chain[s], 2 * m + L_index(level + 1) + level + 2);
                std::erase_if(pre, [] (const Vertex & v) { return v.tag != Tag::C && v.tag != Tag::D; });
                if (pre != vector<Vertex>{chain[s + 1]})
                    clash = chain[s].to_string();
            }
            r.checks.push_back(pass("reaches c vertex", to_string(chain.size() - 1) + " steps"));
            r.checks.push_back(clash ? fail("unique preimage", "step from " + *clash + " is not the unique c/d preimage")
                    : pass("unique preimage", "every step checked against exhaustive preimages"));
            return r;
        }
    }

    auto run_command(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Build, truncate and certify inverse sequences of cellular graphs", "gcell"};
        app.require_subcommand(1);
        app.fallthrough();

        Options o;
        app.add_option("--system", o.system, "builtin name or system file");
        app.add_option("--depth", o.depth, "number of levels")->check(CLI::PositiveNumber);
        app.add_option("--breadth", o.breadth, "parameter bound at the top level")->check(CLI::NonNegativeNumber);
        app.add_option("--grid", o.grid, "grid denominator for interval systems")->check(CLI::PositiveNumber);
        app.add_option("--level", o.level, "level for dot, highest level for gcell")->check(CLI::PositiveNumber);
        app.add_flag("--json", o.json, "machine-readable report");
        app.add_option("--seed", o.seed, "seed for sampled checks");

        auto check = app.add_subcommand("check", "check the inverse sequence axioms");
        check->add_flag("--surjective", o.surjective, "also require every vertex to have a preimage");
        auto gcell = app.add_subcommand("gcell", "search certificates over enumerated prefixes");
        auto counter = app.add_subcommand("counterexample", "look for a transitivity failure");
        auto threads = app.add_subcommand("threads", "list live prefixes");
        auto quotient = app.add_subcommand("quotient", "closure classes of prefixes");
        auto compare = app.add_subcommand("compare-quotients", "compare prefix classes with level quotient threads");
        auto witness = app.add_subcommand("witness", "non-regularity witness threads");
        witness->add_option("--j", o.j, "level where a and b part");
        witness->add_option("--i", o.i, "level where the c thread leaves the b thread");
        witness->add_option("--depth", o.witness_depth, "levels to verify (default i + 5)");
        auto trajectory = app.add_subcommand("trajectory", "upward chain from a d vertex");
        trajectory->add_option("--i", o.i, "starting level")->required();
        trajectory->add_option("--k", o.k, "starting index")->required();
        auto dot = app.add_subcommand("dot", "emit a truncated level as DOT");

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return 0;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << "\n" << app.help();
            return 2;
        }

        try {
            if (dot->parsed()) {
                auto t = truncated(o);
                out << emit_dot(t, o.level);
                return 0;
            }

            Report r;
            if (check->parsed())
                r = cmd_check(o);
            else if (gcell->parsed())
                r = cmd_gcell(o);
            else if (counter->parsed())
                r = cmd_counterexample(o);
            else if (threads->parsed())
                r = cmd_threads(o);
            else if (quotient->parsed())
                r = cmd_quotient(o);
            else if (compare->parsed())
                r = cmd_compare(o);
            else if (witness->parsed())
                r = cmd_witness(o);
            else if (trajectory->parsed())
                r = cmd_trajectory(o);

            out << (o.json ? render_json(r) : render_text(r));
            return r.passed() ? 0 : 1;
        }
        catch (const ParseError & e) {
            err << "error: " << o.system << ": " << e.what() << "\n";
            return 2;
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << "\n" << app.help();
            return 2;
        }
        catch (const ParameterError & e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        catch (const RangeError & e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        catch (const DomainError & e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        catch (const std::exception & e) {
            Report r{o.system, "", {fail("error", e.what())}, {}};
            out << (o.json ? render_json(r) : render_text(r));
            return 1;
        }
    }
}
