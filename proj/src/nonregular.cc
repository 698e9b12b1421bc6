#include <gcell/constructions.hh>
#include <gcell/errors.hh>

#include <algorithm>
#include <numeric>

using std::string;
using std::vector;

namespace gcell
{
    auto L_index(Index i) -> Index
    {
        if (i < 2)
            throw RangeError("L is defined from index 2, got " + to_string(i));
        Index l = 1;
        for (Index t = 3 ; t <= i ; ++t)
            l += t - 1;
        return l;
    }

    namespace
    {
        // L extended by L(1) = 0, so level 1 has no c block
        auto L(Index i) -> Index
        {
            return i < 2 ? 0 : L_index(i);
        }

        auto a_clique(Index i) -> SymbolicVertexSet
        {
            SymbolicVertexSet s{Vertex::a(i)};
            s.insert(LinearFamily::of(Tag::B, {i}, i, 1));
            return s;
        }

        // the b neighbour of d_i^m
        auto b_of_d(Index i, Index m) -> Vertex
        {
            return Vertex::b(i, (m - 1) % (i - 1) + 1);
        }

        class NonRegularBalls : public BallOracle
        {
            public:
                explicit NonRegularBalls(Index level) :
                    _i(level)
                {
                }

                auto ball(const Vertex & v) const -> SymbolicVertexSet override
                {
                    switch (v.tag) {
                        case Tag::A:
                            return a_clique(_i);
                        case Tag::B: {
                            Index k = v.params[1];
                            if (k >= _i)
                                return a_clique(_i);
                            SymbolicVertexSet s{v};
                            s.insert(LinearFamily::of(Tag::D, {_i}, k, _i - 1));
                            return s;
                        }
                        case Tag::C:
                            return SymbolicVertexSet{Vertex::c(1, _i, v.params[2]), Vertex::c(2, _i, v.params[2])};
                        case Tag::D:
                            return SymbolicVertexSet{v, b_of_d(_i, v.params[1])};
                        default:
                            throw DomainError("vertex " + v.to_string() + " is not in the non-regular system");
                    }
                }

                auto ball_of_family(const LinearFamily & f) const -> SymbolicVertexSet override
                {
                    SymbolicVertexSet result = SymbolicVertexSet::of(f);
                    if (f.tag == Tag::B) {
                        for (Index k = f.offset ; k < _i ; k += f.stride)
                            result = result.unite(ball(Vertex::b(_i, k)));
                        return result.unite(a_clique(_i));
                    }
                    if (f.tag == Tag::D) {
                        // the b neighbours repeat with period i - 1
                        for (Index t = 0 ; t < _i - 1 ; ++t)
                            result.insert(b_of_d(_i, f.offset + t * f.stride));
                        return result;
                    }
                    return BallOracle::ball_of_family(f);
                }

            private:
                Index _i;
        };

        class NonRegularSystem : public InverseSystem
        {
            public:
                auto name() const -> string override
                {
                    return "nonregular";
                }

                auto universe(Index i) const -> SymbolicVertexSet override
                {
                    check_level(i);
                    SymbolicVertexSet s{Vertex::a(i)};
                    s.insert(LinearFamily::of(Tag::B, {i}, 1, 1));
                    for (Index k = 1 ; k <= L(i) ; ++k) {
                        s.insert(Vertex::c(1, i, k));
                        s.insert(Vertex::c(2, i, k));
                    }
                    if (i >= 2)
                        s.insert(LinearFamily::of(Tag::D, {i}, 1, 1));
                    return s;
                }

                auto relation(Index i) const -> Relation override
                {
                    return Relation::from_oracle(std::make_shared<NonRegularBalls>(i), universe(i));
                }

                auto bond_family(Index i, const LinearFamily & f) const -> SymbolicVertexSet override
                {
                    if (f.tag == Tag::B && f.fixed == vector<Index>{i + 1})
                        return SymbolicVertexSet::of(LinearFamily::of(Tag::B, {i}, f.offset, f.stride));
                    if (f.tag == Tag::D && f.fixed == vector<Index>{i + 1}) {
                        if (i == 1)
                            return SymbolicVertexSet{Vertex::a(1)};
                        SymbolicVertexSet result;
                        Index period = std::lcm(f.stride, i);
                        for (Index k = f.offset ; k < f.offset + period ; k += f.stride) {
                            if (k % i == 0)
                                result.insert(Vertex::a(i));
                            else
                                result.insert(LinearFamily::of(Tag::D, {i}, (i - 1) * (k / i + 1) + k % i, period / i * (i - 1)));
                        }
                        return result;
                    }
                    return InverseSystem::bond_family(i, f);
                }

                auto preimages(Index i, const Vertex & v, Index bound) const -> vector<Vertex> override
                {
                    vector<Vertex> found;
                    switch (v.tag) {
                        case Tag::A:
                            found.push_back(Vertex::a(i + 1));
                            found.push_back(Vertex::c(1, i + 1, 1));
                            for (Index k = i ; k <= bound ; k += i)
                                found.push_back(Vertex::d(i + 1, k));
                            break;
                        case Tag::B: {
                            Index k = v.params[1];
                            found.push_back(Vertex::b(i + 1, k));
                            if (k == i)
                                found.push_back(Vertex::c(2, i + 1, 1));
                            if (k <= i - 1)
                                found.push_back(Vertex::c(2, i + 1, k + L(i) + 1));
                            break;
                        }
                        case Tag::C:
                            found.push_back(Vertex::c(v.params[1], i + 1, v.params[2] + 1));
                            break;
                        case Tag::D: {
                            Index m = v.params[1];
                            if (m <= i - 1)
                                found.push_back(Vertex::c(1, i + 1, m + L(i) + 1));
                            else {
                                Index t = m - (i - 1), j = (t - 1) / (i - 1), n = t - (i - 1) * j;
                                found.push_back(Vertex::d(i + 1, i * j + n));
                            }
                            break;
                        }
                        default:
                            break;
                    }
                    std::erase_if(found, [&] (const Vertex & w) {
                        return std::any_of(w.params.begin(), w.params.end(), [&] (Index p) { return p > bound; });
                    });
                    std::sort(found.begin(), found.end());
                    return found;
                }

                auto schedule(Index depth, Index breadth) const -> vector<Index> override
                {
                    if (breadth < depth)
                        throw ParameterError("breadth " + to_string(breadth) + " must be at least the depth " + to_string(depth));
                    vector<Index> k(depth);
                    for (Index i = 1 ; i <= depth ; ++i) {
                        k[i - 1] = breadth;
                        for (Index t = i + 1 ; t <= depth ; ++t)
                            k[i - 1] += t;
                    }
                    return k;
                }

            protected:
                auto map_down(Index i, const Vertex & v) const -> Vertex override
                {
                    switch (v.tag) {
                        case Tag::A:
                            return Vertex::a(i);
                        case Tag::B:
                            return Vertex::b(i, v.params[1]);
                        case Tag::C: {
                            Index r = v.params[1], k = v.params[2];
                            if (k == 1)
                                return r == 1 ? Vertex::a(i) : Vertex::b(i, i);
                            if (k <= L(i) + 1)
                                return Vertex::c(r, i, k - 1);
                            return r == 1 ? Vertex::d(i, k - L(i) - 1) : Vertex::b(i, k - L(i) - 1);
                        }
                        case Tag::D: {
                            Index k = v.params[1];
                            if (k % i == 0)
                                return Vertex::a(i);
                            return Vertex::d(i, (i - 1) * (k / i + 1) + k % i);
                        }
                        default:
                            throw DomainError("vertex " + v.to_string() + " is not in the non-regular system");
                    }
                }
        };
    }

    auto nonregular_system() -> SystemPtr
    {
        return std::make_shared<NonRegularSystem>();
    }

    auto d_trajectory(Index i, Index k, Index max_steps) -> vector<Vertex>
    {
        if (i < 2 || k < 1)
            throw ParameterError("trajectories start at some d_i^k with i >= 2 and k >= 1");
        vector<Vertex> chain{Vertex::d(i, k)};
        for (Index level = i ; chain.size() <= static_cast<std::size_t>(max_steps) ; ++level) {
            Index m = chain.back().params[1];
            if (m <= level - 1) {
                chain.push_back(Vertex::c(1, level + 1, m + L(level) + 1));
                return chain;
            }
            Index t = m - (level - 1), j = (t - 1) / (level - 1), n = t - (level - 1) * j;
            chain.push_back(Vertex::d(level + 1, level * j + n));
        }
        throw CertificateFailure("trajectory of d_" + to_string(i) + "^" + to_string(k) + " has no c vertex within " + to_string(max_steps) + " steps");
    }

    auto WitnessReport::passed() const -> bool
    {
        return std::all_of(facts.begin(), facts.end(), [] (const CheckResult & f) { return f.passed; });
    }

    auto nonregularity_witness(Index j, Index i, Index depth) -> WitnessReport
    {
        if (j < 1 || i <= j)
            throw ParameterError("the witness needs i > j >= 1");
        if (depth < i + 3)
            throw ParameterError("the witness needs depth >= i + 3");

        auto sys = nonregular_system();
        WitnessReport report;
        report.j = j;
        report.i = i;
        report.depth = depth;

        auto fact = [&] (string name, bool ok, string detail, vector<Vertex> witness = {}) {
            report.facts.push_back(CheckResult{std::move(name), ok, std::move(detail), std::move(witness)});
        };

        auto build = [&] (const string & label, auto make) -> ThreadPrefix {
            ThreadPrefix p;
            for (Index n = 1 ; n <= depth ; ++n)
                p.coords.push_back(make(n));
            fact("consistent " + label, is_consistent(*sys, p), p.to_string());
            return p;
        };

        auto c_index = [&] (Index n) { return j + L(i) + (n - i); };

        report.a = build("a", [] (Index n) { return Vertex::a(n); });
        report.b = build("b", [&] (Index n) { return Vertex::b(n, j); });
        report.c = build("c", [&] (Index n) { return n <= i ? Vertex::b(n, j) : Vertex::c(2, n, c_index(n)); });
        report.d = build("d", [&] (Index n) {
            if (n > i)
                return Vertex::c(1, n, c_index(n));
            return bonding_composite(*sys, n, i + 1, Vertex::c(1, i + 1, c_index(i + 1)));
        });

        {
            bool ok = true;
            string detail = "levels 1.." + to_string(depth);
            vector<Vertex> witness;
            for (Index n = 1 ; n <= depth && ok ; ++n)
                if (! sys->relation(n).related(report.c.at(n), report.d.at(n))) {
                    ok = false;
                    witness = {report.c.at(n), report.d.at(n)};
                    detail = "level " + to_string(n) + ": " + witness[0].to_string() + " !~ " + witness[1].to_string();
                }
            fact("c ~ d at every level", ok, detail, witness);
        }

        auto ci = report.c.at(i);
        fact("c in cylinder over b_" + to_string(i) + "^" + to_string(j), ci == Vertex::b(i, j), "c_" + to_string(i) + " = " + ci.to_string());

        auto top = Vertex::c(1, i + 1, c_index(i + 1));
        auto descended = bonding_composite(*sys, j, i + 1, top);
        auto dj = report.d.at(j);
        fact("d in cylinder over a_" + to_string(j), dj == Vertex::a(j) && descended == Vertex::a(j),
                "g_" + to_string(j) + "^" + to_string(i + 1) + "(" + top.to_string() + ") = " + descended.to_string());

        auto aj = Vertex::a(j + 1), bj = Vertex::b(j + 1, j);
        fact("a_" + to_string(j + 1) + " !~ b_" + to_string(j + 1) + "^" + to_string(j), ! sys->relation(j + 1).related(aj, bj),
                "a thread and b thread part at level " + to_string(j + 1), {aj, bj});

        for (Index n = 1 ; n <= depth ; ++n)
            if (! sys->relation(n).related(report.a.at(n), report.b.at(n))) {
                report.separation_level = n;
                break;
            }
        fact("separation level is j + 1", report.separation_level == j + 1, "level " + to_string(report.separation_level));

        return report;
    }
}
