#include <gcell/vertex.hh>
#include <gcell/errors.hh>

#include <numeric>
#include <sstream>

using std::string;
using std::vector;

namespace gcell
{
    auto tag_arity(Tag tag) -> std::size_t
    {
        switch (tag) {
            case Tag::A: return 1;
            case Tag::B: return 2;
            case Tag::C: return 3;
            case Tag::D: return 2;
            case Tag::Nat: return 1;
            case Tag::Dyadic: return 1;
            case Tag::Rational: return 2;
            case Tag::User: return 0;
        }
        return 0;
    }

    auto tag_is_indexed(Tag tag) -> bool
    {
        return tag != Tag::Rational && tag != Tag::User;
    }

    auto Vertex::make(Tag tag, vector<Index> params, vector<int> origin) -> Vertex
    {
        if (params.size() != tag_arity(tag))
            throw ParameterError("wrong parameter count for vertex tag");
        if (tag == Tag::Rational)
            return rational(params[0], params[1]).with_origin_path(origin);
        Vertex v;
        v.origin = std::move(origin);
        v.tag = tag;
        v.params = std::move(params);
        return v;
    }

    auto Vertex::a(Index i) -> Vertex { return make(Tag::A, {i}); }
    auto Vertex::b(Index i, Index k) -> Vertex { return make(Tag::B, {i, k}); }
    auto Vertex::c(Index r, Index i, Index k) -> Vertex { return make(Tag::C, {i, r, k}); }
    auto Vertex::d(Index i, Index k) -> Vertex { return make(Tag::D, {i, k}); }
    auto Vertex::nat(Index k) -> Vertex { return make(Tag::Nat, {k}); }
    auto Vertex::dyadic(Index t) -> Vertex { return make(Tag::Dyadic, {t}); }

    auto Vertex::rational(Index numerator, Index denominator) -> Vertex
    {
        if (denominator == 0)
            throw ParameterError("rational with zero denominator");
        if (denominator < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        Index g = std::gcd(numerator, denominator);
        if (g == 0)
            g = 1;
        Vertex v;
        v.tag = Tag::Rational;
        v.params = {numerator / g, denominator / g};
        return v;
    }

    auto Vertex::user(string name) -> Vertex
    {
        Vertex v;
        v.tag = Tag::User;
        v.name = std::move(name);
        return v;
    }

    auto Vertex::with_origin(int component) const -> Vertex
    {
        Vertex v = *this;
        v.origin.insert(v.origin.begin(), component);
        return v;
    }

    auto Vertex::with_origin_path(const vector<int> & path) const -> Vertex
    {
        Vertex v = *this;
        v.origin.insert(v.origin.begin(), path.begin(), path.end());
        return v;
    }

    auto Vertex::without_origin() const -> Vertex
    {
        Vertex v = *this;
        if (! v.origin.empty())
            v.origin.erase(v.origin.begin());
        return v;
    }

    namespace
    {
        auto origin_prefix(const vector<int> & origin) -> string
        {
            if (origin.empty())
                return "";
            string result;
            for (std::size_t i = 0 ; i < origin.size() ; ++i) {
                if (i != 0)
                    result += '.';
                result += to_string(origin[i]);
            }
            return result + ":";
        }
    }

    auto indexed_name(const vector<int> & origin, Tag tag, const vector<Index> & fixed, const string & last) -> string
    {
        string body;
        switch (tag) {
            case Tag::A: body = "a_" + last; break;
            case Tag::B: body = "b_" + to_string(fixed.at(0)) + "^" + last; break;
            case Tag::C: body = "c" + to_string(fixed.at(1)) + "_" + to_string(fixed.at(0)) + "_" + last; break;
            case Tag::D: body = "d_" + to_string(fixed.at(0)) + "^" + last; break;
            case Tag::Nat: body = "n_" + last; break;
            case Tag::Dyadic: body = "2^-" + last; break;
            case Tag::Rational:
            case Tag::User: body = last; break;
        }
        return origin_prefix(origin) + body;
    }

    auto Vertex::to_string() const -> string
    {
        switch (tag) {
            case Tag::Rational:
                if (params[1] == 1)
                    return origin_prefix(origin) + std::to_string(params[0]);
                return origin_prefix(origin) + std::to_string(params[0]) + "/" + std::to_string(params[1]);
            case Tag::User:
                return origin_prefix(origin) + name;
            default: {
                vector<Index> fixed(params.begin(), params.end() - 1);
                return indexed_name(origin, tag, fixed, std::to_string(params.back()));
            }
        }
    }

    auto operator<=> (const Vertex & x, const Vertex & y) -> std::strong_ordering
    {
        if (auto c = x.origin <=> y.origin ; c != 0)
            return c;
        if (auto c = x.tag <=> y.tag ; c != 0)
            return c;
        if (x.tag == Tag::Rational) {
            // denominators are positive, so cross multiplication preserves order
            __int128 lhs = static_cast<__int128>(x.params[0]) * y.params[1];
            __int128 rhs = static_cast<__int128>(y.params[0]) * x.params[1];
            return lhs <=> rhs;
        }
        if (auto c = x.params <=> y.params ; c != 0)
            return c;
        return x.name <=> y.name;
    }

    auto operator<< (std::ostream & s, const Vertex & v) -> std::ostream &
    {
        return s << v.to_string();
    }
}
