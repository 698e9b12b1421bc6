#include <gcell/symbolic_set.hh>
#include <gcell/errors.hh>

#include <algorithm>
#include <numeric>
#include <sstream>

using std::optional;
using std::set;
using std::string;
using std::vector;

namespace gcell
{
    namespace
    {
        auto floor_mod(Index a, Index m) -> Index
        {
            Index r = a % m;
            return r < 0 ? r + m : r;
        }
    }

    auto PeriodicSet::single(Index value) -> PeriodicSet
    {
        PeriodicSet result;
        result._head.insert(value);
        result._threshold = value + 1;
        return result;
    }

    auto PeriodicSet::progression(Index offset, Index stride) -> PeriodicSet
    {
        if (stride < 1)
            throw ParameterError("progression stride must be positive");
        PeriodicSet result;
        result._threshold = offset;
        result._tail.assign(stride, false);
        result._tail[0] = true;
        result.normalise();
        return result;
    }

    auto PeriodicSet::contains(Index value) const -> bool
    {
        if (value < _threshold)
            return _head.contains(value);
        return _tail[floor_mod(value - _threshold, period())];
    }

    auto PeriodicSet::finite() const -> bool
    {
        return std::none_of(_tail.begin(), _tail.end(), [] (bool b) { return b; });
    }

    auto PeriodicSet::empty() const -> bool
    {
        return _head.empty() && finite();
    }

    auto PeriodicSet::min() const -> optional<Index>
    {
        if (! _head.empty())
            return *_head.begin();
        for (Index r = 0 ; r < period() ; ++r)
            if (_tail[r])
                return _threshold + r;
        return std::nullopt;
    }

    auto PeriodicSet::progressions() const -> vector<Index>
    {
        vector<Index> result;
        for (Index r = 0 ; r < period() ; ++r)
            if (_tail[r])
                result.push_back(_threshold + r);
        return result;
    }

    auto PeriodicSet::enumerate(Index bound) const -> vector<Index>
    {
        vector<Index> result;
        for (auto v : _head)
            if (v <= bound)
                result.push_back(v);
        for (auto offset : progressions())
            for (Index v = offset ; v <= bound ; v += period())
                result.push_back(v);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto PeriodicSet::raised(Index threshold, Index new_period) const -> PeriodicSet
    {
        PeriodicSet result;
        result._head = _head;
        for (Index v = _threshold ; v < threshold ; ++v)
            if (contains(v))
                result._head.insert(v);
        result._threshold = threshold;
        result._tail.assign(new_period, false);
        for (Index r = 0 ; r < new_period ; ++r)
            result._tail[r] = contains(threshold + r);
        return result;
    }

    auto PeriodicSet::normalise() -> void
    {
        if (empty()) {
            *this = PeriodicSet{};
            return;
        }

        // least period dividing the current one under which the tail is invariant
        Index p = period();
        for (Index q = 1 ; q < p ; ++q) {
            if (p % q != 0)
                continue;
            bool ok = true;
            for (Index r = q ; r < p && ok ; ++r)
                ok = _tail[r] == _tail[r % q];
            if (ok) {
                _tail.resize(q);
                p = q;
                break;
            }
        }

        // least threshold: pull the periodic part down while the head agrees with it
        while (true) {
            Index v = _threshold - 1;
            bool expected = _tail[p - 1];
            bool actual = _head.contains(v);
            // terminates: a finite set meets its largest head element, an
            // infinite one eventually meets a tail residue below the head
            if (expected != actual)
                break;
            if (actual)
                _head.erase(v);
            std::rotate(_tail.rbegin(), _tail.rbegin() + 1, _tail.rend());
            _threshold = v;
        }
    }

    template <typename Op_>
    auto PeriodicSet::combine(const PeriodicSet & a, const PeriodicSet & b, Op_ op) -> PeriodicSet
    {
        Index threshold = std::max(a._threshold, b._threshold);
        Index p = std::lcm(a.period(), b.period());
        auto x = a.raised(threshold, p), y = b.raised(threshold, p);

        PeriodicSet result;
        result._threshold = threshold;
        result._tail.assign(p, false);
        for (Index r = 0 ; r < p ; ++r)
            result._tail[r] = op(x._tail[r], y._tail[r]);

        set<Index> candidates = x._head;
        candidates.insert(y._head.begin(), y._head.end());
        for (auto v : candidates)
            if (op(x._head.contains(v), y._head.contains(v)))
                result._head.insert(v);

        result.normalise();
        return result;
    }

    auto PeriodicSet::unite(const PeriodicSet & other) const -> PeriodicSet
    {
        return combine(*this, other, [] (bool p, bool q) { return p || q; });
    }

    auto PeriodicSet::intersect(const PeriodicSet & other) const -> PeriodicSet
    {
        return combine(*this, other, [] (bool p, bool q) { return p && q; });
    }

    auto PeriodicSet::minus(const PeriodicSet & other) const -> PeriodicSet
    {
        return combine(*this, other, [] (bool p, bool q) { return p && ! q; });
    }

    auto LinearFamily::of(Tag tag, vector<Index> fixed, Index offset, Index stride) -> LinearFamily
    {
        if (! tag_is_indexed(tag) || fixed.size() + 1 != tag_arity(tag))
            throw ParameterError("families need an indexed tag and all but the last parameter fixed");
        if (stride < 1)
            throw ParameterError("family stride must be positive");
        LinearFamily f;
        f.tag = tag;
        f.fixed = std::move(fixed);
        f.offset = offset;
        f.stride = stride;
        return f;
    }

    auto LinearFamily::contains(const Vertex & v) const -> bool
    {
        if (v.tag != tag || v.origin != origin || v.params.size() != fixed.size() + 1)
            return false;
        if (! std::equal(fixed.begin(), fixed.end(), v.params.begin()))
            return false;
        Index p = v.params.back();
        return p >= offset && (p - offset) % stride == 0;
    }

    auto LinearFamily::member(Index j) const -> Vertex
    {
        auto params = fixed;
        params.push_back(offset + stride * j);
        return Vertex::make(tag, std::move(params), origin);
    }

    auto LinearFamily::enumerate(Index bound) const -> vector<Vertex>
    {
        vector<Vertex> result;
        if (std::any_of(fixed.begin(), fixed.end(), [&] (Index p) { return p > bound; }))
            return result;
        for (Index p = offset ; p <= bound ; p += stride) {
            auto params = fixed;
            params.push_back(p);
            result.push_back(Vertex::make(tag, std::move(params), origin));
        }
        return result;
    }

    auto LinearFamily::to_string() const -> string
    {
        string index = "{" + std::to_string(offset) + "+" + (stride == 1 ? string{} : std::to_string(stride)) + "j}";
        return indexed_name(origin, tag, fixed, index);
    }

    SymbolicVertexSet::SymbolicVertexSet(std::initializer_list<Vertex> vertices)
    {
        for (auto & v : vertices)
            insert(v);
    }

    auto SymbolicVertexSet::of(const vector<Vertex> & vertices) -> SymbolicVertexSet
    {
        SymbolicVertexSet result;
        for (auto & v : vertices)
            result.insert(v);
        return result;
    }

    auto SymbolicVertexSet::of(const LinearFamily & family) -> SymbolicVertexSet
    {
        SymbolicVertexSet result;
        result.insert(family);
        return result;
    }

    auto SymbolicVertexSet::key_of(const Vertex & v) -> GroupKey
    {
        return GroupKey{v.origin, v.tag, vector<Index>(v.params.begin(), v.params.end() - 1)};
    }

    auto SymbolicVertexSet::vertex_of(const GroupKey & key, Index value) -> Vertex
    {
        auto params = key.fixed;
        params.push_back(value);
        return Vertex::make(key.tag, std::move(params), key.origin);
    }

    auto SymbolicVertexSet::insert(const Vertex & v) -> void
    {
        if (tag_is_indexed(v.tag)) {
            auto & group = _groups[key_of(v)];
            group = group.unite(PeriodicSet::single(v.params.back()));
        }
        else
            _loose.insert(v);
    }

    auto SymbolicVertexSet::insert(const LinearFamily & family) -> void
    {
        auto checked = LinearFamily::of(family.tag, family.fixed, family.offset, family.stride);
        auto & group = _groups[GroupKey{family.origin, checked.tag, checked.fixed}];
        group = group.unite(PeriodicSet::progression(checked.offset, checked.stride));
    }

    auto SymbolicVertexSet::prune() -> void
    {
        std::erase_if(_groups, [] (const auto & kv) { return kv.second.empty(); });
    }

    auto SymbolicVertexSet::contains(const Vertex & v) const -> bool
    {
        if (! tag_is_indexed(v.tag))
            return _loose.contains(v);
        if (v.params.empty())
            return false;
        auto g = _groups.find(key_of(v));
        return g != _groups.end() && g->second.contains(v.params.back());
    }

    auto SymbolicVertexSet::empty() const -> bool
    {
        return _loose.empty() && _groups.empty();
    }

    auto SymbolicVertexSet::finite() const -> bool
    {
        return std::all_of(_groups.begin(), _groups.end(), [] (const auto & kv) { return kv.second.finite(); });
    }

    auto SymbolicVertexSet::first() const -> optional<Vertex>
    {
        optional<Vertex> best;
        if (! _loose.empty())
            best = *_loose.begin();
        for (auto & [key, values] : _groups) {
            auto v = vertex_of(key, *values.min());
            if (! best || v < *best)
                best = v;
        }
        return best;
    }

    auto SymbolicVertexSet::enumerate(Index bound) const -> vector<Vertex>
    {
        vector<Vertex> result(_loose.begin(), _loose.end());
        for (auto & [key, values] : _groups) {
            if (std::any_of(key.fixed.begin(), key.fixed.end(), [&] (Index p) { return p > bound; }))
                continue;
            for (auto v : values.enumerate(bound))
                result.push_back(vertex_of(key, v));
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    auto SymbolicVertexSet::finite_members() const -> vector<Vertex>
    {
        vector<Vertex> result(_loose.begin(), _loose.end());
        for (auto & [key, values] : _groups)
            for (auto v : values.head())
                result.push_back(vertex_of(key, v));
        std::sort(result.begin(), result.end());
        return result;
    }

    auto SymbolicVertexSet::families() const -> vector<LinearFamily>
    {
        vector<LinearFamily> result;
        for (auto & [key, values] : _groups)
            for (auto offset : values.progressions()) {
                LinearFamily f;
                f.origin = key.origin;
                f.tag = key.tag;
                f.fixed = key.fixed;
                f.offset = offset;
                f.stride = values.period();
                result.push_back(std::move(f));
            }
        return result;
    }

    auto SymbolicVertexSet::unite(const SymbolicVertexSet & other) const -> SymbolicVertexSet
    {
        SymbolicVertexSet result = *this;
        result._loose.insert(other._loose.begin(), other._loose.end());
        for (auto & [key, values] : other._groups) {
            auto & group = result._groups[key];
            group = group.unite(values);
        }
        return result;
    }

    auto SymbolicVertexSet::intersect(const SymbolicVertexSet & other) const -> SymbolicVertexSet
    {
        SymbolicVertexSet result;
        for (auto & v : _loose)
            if (other._loose.contains(v))
                result._loose.insert(v);
        for (auto & [key, values] : _groups) {
            auto g = other._groups.find(key);
            if (g != other._groups.end())
                result._groups[key] = values.intersect(g->second);
        }
        result.prune();
        return result;
    }

    auto SymbolicVertexSet::minus(const SymbolicVertexSet & other) const -> SymbolicVertexSet
    {
        SymbolicVertexSet result;
        for (auto & v : _loose)
            if (! other._loose.contains(v))
                result._loose.insert(v);
        for (auto & [key, values] : _groups) {
            auto g = other._groups.find(key);
            result._groups[key] = g == other._groups.end() ? values : values.minus(g->second);
        }
        result.prune();
        return result;
    }

    auto SymbolicVertexSet::subset_of(const SymbolicVertexSet & other) const -> bool
    {
        return minus(other).empty();
    }

    auto SymbolicVertexSet::with_origin(int component) const -> SymbolicVertexSet
    {
        SymbolicVertexSet result;
        for (auto & v : _loose)
            result._loose.insert(v.with_origin(component));
        for (auto & [key, values] : _groups) {
            auto k = key;
            k.origin.insert(k.origin.begin(), component);
            result._groups.emplace(std::move(k), values);
        }
        return result;
    }

    auto SymbolicVertexSet::from_origin(int component) const -> SymbolicVertexSet
    {
        SymbolicVertexSet result;
        for (auto & v : _loose)
            if (! v.origin.empty() && v.origin.front() == component)
                result._loose.insert(v.without_origin());
        for (auto & [key, values] : _groups)
            if (! key.origin.empty() && key.origin.front() == component) {
                auto k = key;
                k.origin.erase(k.origin.begin());
                result._groups.emplace(std::move(k), values);
            }
        return result;
    }

    auto SymbolicVertexSet::to_string() const -> string
    {
        string result = "{";
        bool first_item = true;
        auto add = [&] (const string & s) {
            if (! first_item)
                result += ", ";
            result += s;
            first_item = false;
        };
        for (auto & v : finite_members())
            add(v.to_string());
        for (auto & f : families())
            add(f.to_string());
        return result + "}";
    }

    auto operator<< (std::ostream & s, const SymbolicVertexSet & set) -> std::ostream &
    {
        return s << set.to_string();
    }

    auto compare_sets(const SymbolicVertexSet & a, const SymbolicVertexSet & b) -> SetComparisonResult
    {
        auto a_only = a.minus(b), b_only = b.minus(a);
        if (a_only.empty() && b_only.empty())
            return {SetComparison::Equal, std::nullopt};
        if (a_only.empty())
            return {SetComparison::ASubset, b_only.first()};
        if (b_only.empty())
            return {SetComparison::BSubset, a_only.first()};
        return {SetComparison::Incomparable, a_only.first()};
    }

    auto to_string(SetComparison c) -> string
    {
        switch (c) {
            case SetComparison::Equal: return "equal";
            case SetComparison::ASubset: return "A_subset";
            case SetComparison::BSubset: return "B_subset";
            case SetComparison::Incomparable: return "incomparable";
        }
        return "?";
    }
}
