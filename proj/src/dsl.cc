#include <gcell/dsl.hh>
#include <gcell/errors.hh>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

using std::map;
using std::pair;
using std::set;
using std::string;
using std::vector;

namespace gcell
{
    namespace
    {
        struct Token
        {
            string text;
            int column;
        };

        auto is_identifier(const string & s) -> bool
        {
            if (s.empty() || ! (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
                return false;
            return std::all_of(s.begin(), s.end(), [] (char c) {
                return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
            });
        }

        auto is_number(const string & s) -> bool
        {
            return ! s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [] (char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        }

        auto tokenise(const string & line) -> vector<Token>
        {
            vector<Token> result;
            std::size_t pos = 0;
            while (pos < line.size()) {
                if (line[pos] == '#')
                    break;
                if (std::isspace(static_cast<unsigned char>(line[pos]))) {
                    ++pos;
                    continue;
                }
                std::size_t start = pos;
                if (line.compare(pos, 2, "->") == 0)
                    pos += 2;
                else
                    while (pos < line.size() && ! std::isspace(static_cast<unsigned char>(line[pos])) && line[pos] != '#' && line.compare(pos, 2, "->") != 0)
                        ++pos;
                result.push_back(Token{line.substr(start, pos - start), static_cast<int>(start) + 1});
            }
            return result;
        }

        class Parser
        {
            public:
                auto run(const string & text) -> SystemDescription
                {
                    std::istringstream in(text);
                    string line;
                    while (std::getline(in, line)) {
                        ++_line;
                        if (! line.empty() && line.back() == '\r')
                            line.pop_back();
                        auto tokens = tokenise(line);
                        if (! tokens.empty())
                            statement(tokens, static_cast<int>(line.size()));
                    }
                    finish();
                    return _d;
                }

            private:
                SystemDescription _d;
                int _line = 0;
                bool _named = false;
                enum class Block { None, Level, Map } _block = Block::None;
                std::size_t _map = 0;
                vector<set<string>> _declared;
                vector<pair<int, int>> _level_position;

                [[noreturn]] auto error(const string & message, int column) const -> void
                {
                    throw ParseError(message, _line, column);
                }

                auto expect_count(const vector<Token> & t, std::size_t n, int end) const -> void
                {
                    if (t.size() > n)
                        error("unexpected '" + t[n].text + "'", t[n].column);
                    if (t.size() < n)
                        error("'" + t[0].text + "' needs " + std::to_string(n - 1) + " argument" + (n == 2 ? "" : "s"), end + 1);
                }

                auto identifier(const Token & t) const -> const string &
                {
                    if (! is_identifier(t.text))
                        error("expected an identifier, found '" + t.text + "'", t.column);
                    return t.text;
                }

                auto number(const Token & t) const -> Index
                {
                    if (! is_number(t.text))
                        error("expected a level number, found '" + t.text + "'", t.column);
                    return std::stol(t.text);
                }

                auto require_declared(std::size_t level, const Token & t) const -> void
                {
                    if (! _declared[level - 1].contains(t.text))
                        error("undeclared identifier '" + t.text + "' at level " + std::to_string(level), t.column);
                }

                auto statement(const vector<Token> & t, int end) -> void
                {
                    auto & keyword = t[0].text;
                    if (! _named && keyword != "system")
                        error("missing 'system NAME' line", t[0].column);
                    if (keyword == "system") {
                        expect_count(t, 2, end);
                        if (_named)
                            error("system name given twice", t[0].column);
                        _d.name = identifier(t[1]);
                        _named = true;
                    }
                    else if (keyword == "level") {
                        expect_count(t, 2, end);
                        Index i = number(t[1]);
                        if (i != static_cast<Index>(_d.levels.size()) + 1)
                            error("expected level " + std::to_string(_d.levels.size() + 1) + ", levels must be declared in order", t[1].column);
                        _d.levels.emplace_back();
                        _declared.emplace_back();
                        _level_position.emplace_back(_line, t[0].column);
                        _block = Block::Level;
                    }
                    else if (keyword == "vertex") {
                        if (_block != Block::Level)
                            error("vertex declaration outside a level block", t[0].column);
                        if (t.size() < 2)
                            error("'vertex' needs at least one identifier", end + 1);
                        for (std::size_t k = 1 ; k < t.size() ; ++k) {
                            auto & id = identifier(t[k]);
                            if (! _declared.back().insert(id).second)
                                error("vertex '" + id + "' declared twice", t[k].column);
                            _d.levels.back().vertices.push_back(id);
                        }
                    }
                    else if (keyword == "edge") {
                        if (_block != Block::Level)
                            error("edge declaration outside a level block", t[0].column);
                        expect_count(t, 3, end);
                        identifier(t[1]);
                        identifier(t[2]);
                        require_declared(_d.levels.size(), t[1]);
                        require_declared(_d.levels.size(), t[2]);
                        if (t[1].text != t[2].text) {
                            auto e = std::minmax(t[1].text, t[2].text);
                            auto & edges = _d.levels.back().edges;
                            pair<string, string> p{e.first, e.second};
                            if (std::find(edges.begin(), edges.end(), p) == edges.end())
                                edges.push_back(p);
                        }
                    }
                    else if (keyword == "map") {
                        expect_count(t, 3, end);
                        Index upper = number(t[1]), lower = number(t[2]);
                        if (upper != lower + 1 || lower < 1)
                            error("maps must connect adjacent levels", t[1].column);
                        if (upper > static_cast<Index>(_d.levels.size()))
                            error("map refers to undeclared level " + std::to_string(upper), t[1].column);
                        if (_d.maps.size() < static_cast<std::size_t>(lower))
                            _d.maps.resize(lower);
                        _map = lower;
                        _block = Block::Map;
                    }
                    else if (t.size() >= 2 && t[1].text == "->") {
                        if (_block != Block::Map)
                            error("map entry outside a map block", t[0].column);
                        expect_count(t, 3, end);
                        identifier(t[0]);
                        identifier(t[2]);
                        require_declared(_map + 1, t[0]);
                        require_declared(_map, t[2]);
                        auto & m = _d.maps[_map - 1];
                        if (m.contains(t[0].text))
                            error("'" + t[0].text + "' mapped twice", t[0].column);
                        m.emplace(t[0].text, t[2].text);
                    }
                    else
                        error("unexpected '" + keyword + "'", t[0].column);
                }

                auto finish() -> void
                {
                    if (! _named)
                        throw ParseError("missing 'system NAME' line", _line + 1, 1);
                    if (_d.levels.empty())
                        throw ParseError("no levels declared", _line + 1, 1);
                    _d.maps.resize(_d.levels.size() - 1);
                    for (std::size_t i = 0 ; i < _d.levels.size() ; ++i) {
                        auto [line, column] = _level_position[i];
                        if (_d.levels[i].vertices.empty())
                            throw ParseError("level " + std::to_string(i + 1) + " has no vertices", line, column);
                        if (i == 0)
                            continue;
                        for (auto & v : _d.levels[i].vertices)
                            if (! _d.maps[i - 1].contains(v))
                                throw ParseError("map not total at level " + std::to_string(i + 1) + ": " + v, line, column);
                    }
                }
        };

        class FiniteSystem : public InverseSystem
        {
            public:
                explicit FiniteSystem(const SystemDescription & d) :
                    _d(d)
                {
                    for (auto & level : _d.levels) {
                        SymbolicVertexSet points;
                        for (auto & v : level.vertices)
                            points.insert(Vertex::user(v));
                        vector<Edge> pairs;
                        for (auto & [x, y] : level.edges)
                            pairs.emplace_back(Vertex::user(x), Vertex::user(y));
                        _universes.push_back(points);
                        _relations.push_back(make_relation(pairs, points));
                    }
                }

                auto name() const -> string override
                {
                    return _d.name;
                }

                auto universe(Index i) const -> SymbolicVertexSet override
                {
                    check_level(i);
                    return _universes[clamp(i)];
                }

                auto relation(Index i) const -> Relation override
                {
                    check_level(i);
                    return _relations[clamp(i)];
                }

            protected:
                auto map_down(Index i, const Vertex & v) const -> Vertex override
                {
                    if (i >= static_cast<Index>(_d.levels.size()))
                        return v;
                    return Vertex::user(_d.maps[i - 1].at(v.name));
                }

            private:
                SystemDescription _d;
                vector<SymbolicVertexSet> _universes;
                vector<Relation> _relations;

                auto clamp(Index i) const -> std::size_t
                {
                    return static_cast<std::size_t>(std::min<Index>(i, _d.levels.size())) - 1;
                }
        };
    }

    auto parse_dsl(const string & text) -> SystemDescription
    {
        return Parser{}.run(text);
    }

    auto render_dsl(const SystemDescription & d) -> string
    {
        std::ostringstream out;
        out << "system " << d.name << "\n";
        for (std::size_t i = 0 ; i < d.levels.size() ; ++i) {
            out << "\nlevel " << i + 1 << "\nvertex";
            for (auto & v : d.levels[i].vertices)
                out << " " << v;
            out << "\n";
            for (auto & [x, y] : d.levels[i].edges)
                out << "edge " << x << " " << y << "\n";
            if (i > 0) {
                out << "map " << i + 1 << " " << i << "\n";
                for (auto & [src, dst] : d.maps[i - 1])
                    out << src << " -> " << dst << "\n";
            }
        }
        return out.str();
    }

    auto load_dsl_file(const string & path) -> SystemDescription
    {
        std::ifstream in(path);
        if (! in)
            throw UsageError("cannot read system file " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_dsl(buffer.str());
    }

    auto finite_system(const SystemDescription & d) -> SystemPtr
    {
        return std::make_shared<FiniteSystem>(d);
    }
}
