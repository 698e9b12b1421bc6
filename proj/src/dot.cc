#include <gcell/dot.hh>

#include <sstream>

using std::string;

namespace gcell
{
    namespace
    {
        auto quoted(const string & s) -> string
        {
            string result = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    result += '\\';
                result += c;
            }
            return result + "\"";
        }
    }

    auto emit_dot(const TruncatedSystem & trunc, Index level) -> string
    {
        auto & graph = trunc.graph(level);
        std::ostringstream out;
        out << "graph " << quoted(trunc.system().name() + " level " + to_string(level)) << " {\n";
        for (auto & v : trunc.vertices(level))
            out << "    " << quoted(v.to_string()) << ";\n";
        for (auto & [x, y] : graph.relation.edges())
            out << "    " << quoted(x.to_string()) << " -- " << quoted(y.to_string()) << ";\n";
        out << "}\n";
        return out.str();
    }
}
