#include <gcell/threads.hh>
#include <gcell/errors.hh>

#include <algorithm>
#include <map>

using std::optional;
using std::string;
using std::vector;

namespace gcell
{
    auto ThreadPrefix::at(Index i) const -> const Vertex &
    {
        if (i < 1 || i > depth())
            throw RangeError("coordinate " + std::to_string(i) + " of a depth " + std::to_string(depth()) + " prefix");
        return coords[i - 1];
    }

    auto ThreadPrefix::restricted(Index n) const -> ThreadPrefix
    {
        if (n < 0 || n > depth())
            throw RangeError("cannot restrict a depth " + std::to_string(depth()) + " prefix to " + std::to_string(n));
        return ThreadPrefix{vector<Vertex>(coords.begin(), coords.begin() + n)};
    }

    auto ThreadPrefix::to_string() const -> string
    {
        string result = "(";
        for (std::size_t i = 0 ; i < coords.size() ; ++i)
            result += (i == 0 ? "" : ", ") + coords[i].to_string();
        return result + ")";
    }

    auto operator<=> (const ThreadPrefix & x, const ThreadPrefix & y) -> std::strong_ordering
    {
        return x.coords <=> y.coords;
    }

    auto operator<< (std::ostream & s, const ThreadPrefix & p) -> std::ostream &
    {
        return s << p.to_string();
    }

    auto prefix_through(const InverseSystem & system, Index n, const Vertex & top) -> ThreadPrefix
    {
        ThreadPrefix p;
        p.coords.resize(n);
        p.coords[n - 1] = top;
        for (Index i = n - 1 ; i >= 1 ; --i)
            p.coords[i - 1] = system.bond(i, p.coords[i]);
        return p;
    }

    auto is_consistent(const InverseSystem & system, const ThreadPrefix & p) -> bool
    {
        if (p.coords.empty() || ! system.in_universe(1, p.coords[0]))
            return false;
        for (Index i = 1 ; i < p.depth() ; ++i)
            if (! system.in_universe(i + 1, p.at(i + 1)) || system.bond(i, p.at(i + 1)) != p.at(i))
                return false;
        return true;
    }

    auto extend(const InverseSystem & system, const ThreadPrefix & p, Index bound) -> vector<ThreadPrefix>
    {
        vector<ThreadPrefix> result;
        for (auto & w : system.preimages(p.depth(), p.coords.back(), bound)) {
            auto q = p;
            q.coords.push_back(w);
            result.push_back(std::move(q));
        }
        return result;
    }

    namespace
    {
        // live[i - 1] holds the live truncated vertices of level i
        auto live_levels(const TruncatedSystem & trunc) -> vector<std::set<Vertex>>
        {
            auto & sys = trunc.system();
            Index top = trunc.depth();
            vector<std::set<Vertex>> live(top);

            auto count = sys.level_count();
            for (auto & v : trunc.vertices(top))
                if ((count && top == *count) || ! sys.preimages(top, v, 2 * trunc.breadth(top) + 2).empty())
                    live[top - 1].insert(v);

            for (Index i = top - 1 ; i >= 1 ; --i)
                for (auto & w : live[i])
                    live[i - 1].insert(sys.bond(i, w));
            return live;
        }
    }

    auto enumerate_threads(const TruncatedSystem & trunc, Index depth, const EnumerationOptions & options) -> vector<ThreadPrefix>
    {
        if (depth < 1 || depth > trunc.depth())
            throw RangeError("enumeration depth " + std::to_string(depth) + " outside truncation depth " + std::to_string(trunc.depth()));

        auto & sys = trunc.system();
        auto live = live_levels(trunc);

        vector<ThreadPrefix> result;
        for (auto & v : live[depth - 1]) {
            if (result.size() >= options.budget)
                throw ResourceError("thread enumeration exceeded its budget of " + std::to_string(options.budget), result.size());
            result.push_back(prefix_through(sys, depth, v));
        }
        std::sort(result.begin(), result.end());

        if (options.dead) {
            options.dead->clear();
            for (auto & v : trunc.vertices(depth)) {
                if (live[depth - 1].contains(v))
                    continue;
                if (depth > 1 && ! live[depth - 2].contains(sys.bond(depth - 1, v)))
                    continue;
                options.dead->push_back(prefix_through(sys, depth, v));
            }
            std::sort(options.dead->begin(), options.dead->end());
        }
        return result;
    }

    namespace
    {
        auto require_same_depth(const ThreadPrefix & x, const ThreadPrefix & y) -> void
        {
            if (x.depth() != y.depth())
                throw UsageError("prefixes of depth " + std::to_string(x.depth()) + " and " + std::to_string(y.depth()) + " cannot be compared");
        }
    }

    auto related_at_depth(const TruncatedSystem & trunc, const ThreadPrefix & x, const ThreadPrefix & y) -> bool
    {
        require_same_depth(x, y);
        if (x.depth() > trunc.depth())
            return related_at_depth(trunc.system(), x, y);
        for (Index i = 1 ; i <= x.depth() ; ++i) {
            bool r = trunc.contains(i, x.at(i))
                ? trunc.related(i, x.at(i), y.at(i))
                : trunc.system().relation(i).related(x.at(i), y.at(i));
            if (! r)
                return false;
        }
        return true;
    }

    auto related_at_depth(const InverseSystem & system, const ThreadPrefix & x, const ThreadPrefix & y) -> bool
    {
        require_same_depth(x, y);
        for (Index i = 1 ; i <= x.depth() ; ++i)
            if (! system.relation(i).related(x.at(i), y.at(i)))
                return false;
        return true;
    }

    RelatednessMatrix::RelatednessMatrix(const TruncatedSystem & trunc, const vector<ThreadPrefix> & prefixes) :
        _n(prefixes.size()),
        _bits(_n * _n, true)
    {
        if (_n == 0)
            return;
        Index depth = prefixes.front().depth();
        for (auto & p : prefixes)
            if (p.depth() != depth)
                throw UsageError("prefixes of mixed depth");

        for (Index i = 1 ; i <= depth ; ++i) {
            // distinct level-i coordinates, compared once each
            std::map<Vertex, std::size_t> ids;
            vector<std::size_t> id_of(_n);
            for (std::size_t x = 0 ; x < _n ; ++x)
                id_of[x] = ids.emplace(prefixes[x].at(i), ids.size()).first->second;

            vector<Vertex> distinct(ids.size());
            for (auto & [v, id] : ids)
                distinct[id] = v;

            auto relation = trunc.system().relation(i);
            std::size_t m = distinct.size();
            vector<bool> adjacent(m * m);
            for (std::size_t a = 0 ; a < m ; ++a) {
                auto b = trunc.contains(i, distinct[a]) ? trunc.ball(i, distinct[a]) : relation.ball(distinct[a]);
                for (std::size_t c = 0 ; c < m ; ++c)
                    adjacent[a * m + c] = b.contains(distinct[c]);
            }

            for (std::size_t x = 0 ; x < _n ; ++x)
                for (std::size_t y = 0 ; y < _n ; ++y)
                    if (_bits[x * _n + y] && ! adjacent[id_of[x] * m + id_of[y]])
                        _bits[x * _n + y] = false;
        }
    }

    auto transitivity_counterexample(const TruncatedSystem & trunc, Index depth, const EnumerationOptions & options) -> optional<PrefixTriple>
    {
        auto all = enumerate_threads(trunc, depth, options);
        RelatednessMatrix r(trunc, all);
        for (std::size_t x = 0 ; x < all.size() ; ++x)
            for (std::size_t y = 0 ; y < all.size() ; ++y) {
                if (! r(x, y))
                    continue;
                for (std::size_t z = 0 ; z < all.size() ; ++z)
                    if (r(y, z) && ! r(x, z))
                        return PrefixTriple{all[x], all[y], all[z]};
            }
        return std::nullopt;
    }

    auto gcell_certificate(const InverseSystem & system, const ThreadPrefix & p, Index i, Index budget_j) -> optional<Index>
    {
        if (i < 1 || i > p.depth())
            throw UsageError("level " + std::to_string(i) + " is outside a depth " + std::to_string(p.depth()) + " prefix");
        auto target = system.relation(i).ball(p.at(i));
        Index last = std::min(p.depth(), budget_j);
        for (Index j = i ; j <= last ; ++j) {
            auto image = composite_image(system, i, j, two_ball(p.at(j), system.relation(j)));
            if (image.subset_of(target))
                return j;
        }
        return std::nullopt;
    }

    auto BasicOpen::to_string() const -> string
    {
        return "level " + std::to_string(level) + " " + set.to_string();
    }

    auto in_basic_open(const ThreadPrefix & p, const BasicOpen & u) -> bool
    {
        if (p.depth() < u.level)
            throw UsageError("prefix of depth " + std::to_string(p.depth()) + " says nothing about level " + std::to_string(u.level));
        return u.set.contains(p.at(u.level));
    }

    auto saturate(const TruncatedSystem & trunc, const vector<ThreadPrefix> & s, const vector<ThreadPrefix> & all) -> vector<ThreadPrefix>
    {
        vector<ThreadPrefix> result;
        for (auto & y : all)
            for (auto & x : s)
                if (related_at_depth(trunc, x, y)) {
                    result.push_back(y);
                    break;
                }
        return result;
    }

    namespace
    {
        auto in_union(const ThreadPrefix & p, const vector<BasicOpen> & a) -> bool
        {
            return std::any_of(a.begin(), a.end(), [&] (const BasicOpen & u) { return in_basic_open(p, u); });
        }
    }

    auto closedness_probe(const TruncatedSystem & trunc, const ThreadPrefix & x, const vector<BasicOpen> & a) -> optional<BasicOpen>
    {
        auto all = enumerate_threads(trunc, x.depth());
        for (auto & y : saturate(trunc, {x}, all))
            if (! in_union(y, a))
                throw UsageError("related prefix " + y.to_string() + " is not covered by the given open sets");

        for (Index j = 1 ; j <= x.depth() ; ++j) {
            BasicOpen u{j, SymbolicVertexSet{x.at(j)}};
            vector<ThreadPrefix> members;
            for (auto & y : all)
                if (in_basic_open(y, u))
                    members.push_back(y);
            auto sat = saturate(trunc, members, all);
            if (std::all_of(sat.begin(), sat.end(), [&] (const ThreadPrefix & y) { return in_union(y, a); }))
                return u;
        }
        return std::nullopt;
    }

    namespace
    {
        auto describe(const TruncatedSystem & trunc, const vector<ThreadPrefix> & all, const ThreadPrefix & x, Index i) -> SeparationSetDescriptor
        {
            SeparationSetDescriptor d;
            d.level = i;
            d.center = SymbolicVertexSet{x.at(i)};
            auto relation = trunc.system().relation(i);
            d.boundary = relation.ball(x.at(i)).minus(d.center);

            vector<const ThreadPrefix *> fringe;
            for (auto & z : all) {
                if (z.at(i) == x.at(i))
                    d.members.push_back(z);
                else if (d.boundary.contains(z.at(i)))
                    fringe.push_back(&z);
            }

            for (Index j = i + 1 ; j <= x.depth() && ! d.witness_depth ; ++j) {
                auto rj = trunc.system().relation(j);
                auto bx = rj.ball(x.at(j));
                if (std::none_of(fringe.begin(), fringe.end(), [&] (const ThreadPrefix * w) { return bx.contains(w->at(j)); }))
                    d.witness_depth = j;
            }
            return d;
        }
    }

    auto separation_sets(const TruncatedSystem & trunc, const ThreadPrefix & x, const ThreadPrefix & y) -> SeparationResult
    {
        require_same_depth(x, y);
        optional<Index> level;
        for (Index i = 1 ; i <= x.depth() && ! level ; ++i)
            if (! trunc.system().relation(i).related(x.at(i), y.at(i)))
                level = i;
        if (! level)
            throw UsageError("prefixes " + x.to_string() + " and " + y.to_string() + " are related, nothing separates them");

        vector<ThreadPrefix> all;
        if (x.depth() <= trunc.depth())
            all = enumerate_threads(trunc, x.depth());

        SeparationResult result{describe(trunc, all, x, *level), describe(trunc, all, y, *level), true};
        for (auto & p : result.around_x.members)
            if (std::binary_search(result.around_y.members.begin(), result.around_y.members.end(), p))
                result.disjoint = false;
        return result;
    }
}
