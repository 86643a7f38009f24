/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/io.hh>

#include <sstream>

using std::string;
using std::vector;

namespace minrank
{
    auto to_json(const Field & f) -> Json
    {
        return Json{ { "p", f.characteristic() }, { "e", f.degree() }, { "modulus", f.modulus() } };
    }

    auto to_json(const Matrix & m) -> Json
    {
        vector<unsigned> entries;
        for (auto & e : m.entries())
            entries.push_back(e.rep);
        return Json{ { "field", to_json(m.field()) }, { "rows", m.rows() }, { "cols", m.cols() }, { "entries", entries } };
    }

    namespace
    {
        auto field_from_json(const Json & j) -> FieldPtr
        {
            if (j.is_number_unsigned())
                return std::make_shared<const Field>(Field::from_order(j.get<unsigned>()));
            if (j.is_string())
                return std::make_shared<const Field>(Field::from_string(j.get<string>()));
            if (j.is_object() && j.contains("p")) {
                auto f = make_field(j.at("p").get<unsigned>(), j.value("e", 1u));
                // reps only mean the same elements under the same modulus
                if (j.contains("modulus") && j.at("modulus").get<vector<unsigned>>() != f->modulus())
                    throw MatrixError{ "modulus " + j.at("modulus").dump() + " differs from this library's modulus for GF("
                        + std::to_string(f->order()) + ")" };
                return f;
            }
            if (j.is_object() && j.contains("q"))
                return field_from_json(j.at("q"));
            throw MatrixError{ "cannot read a field from " + j.dump() };
        }
    }

    auto matrix_from_json(const Json & j, const FieldPtr & fallback) -> Matrix
    {
        if (! j.is_object() || ! j.contains("entries"))
            throw MatrixError{ "matrix JSON needs an \"entries\" array" };

        FieldPtr field = fallback;
        if (! field) {
            if (j.contains("field"))
                field = field_from_json(j.at("field"));
            else if (j.contains("q"))
                field = field_from_json(j.at("q"));
            else
                throw MatrixError{ "matrix JSON has no field and none was given" };
        }

        auto & entries = j.at("entries");
        if (! entries.is_array())
            throw MatrixError{ "matrix entries must be an array" };

        // nested rows, or flat row-major with rows and cols
        if (! entries.empty() && entries.front().is_array())
            return Matrix(field, entries.get<vector<vector<unsigned>>>());

        auto flat = entries.get<vector<unsigned>>();
        if (! j.contains("rows") || ! j.contains("cols"))
            throw MatrixError{ "flat matrix entries need \"rows\" and \"cols\"" };
        auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
        if (flat.size() != rows * cols)
            throw MatrixError{ "matrix has " + std::to_string(flat.size()) + " entries, expected " + std::to_string(rows * cols) };
        Matrix m(field, rows, cols);
        for (std::size_t i = 0 ; i < flat.size() ; ++i) {
            if (flat[i] >= field->order())
                throw MatrixError{ "entry " + std::to_string(flat[i]) + " is not an element of GF(" + std::to_string(field->order()) + ")" };
            m(i / cols, i % cols) = Element{ flat[i] };
        }
        return m;
    }

    auto to_json(const LoopedGraph & g) -> Json
    {
        vector<int> loops;
        for (std::size_t v = 0 ; v < g.size() ; ++v)
            if (g.looped(v))
                loops.push_back(v);
        Json edges = Json::array();
        for (auto & [u, v] : g.edges())
            edges.push_back({ u, v });
        return Json{ { "n", g.size() }, { "loops", loops }, { "edges", edges } };
    }

    auto to_json(const PointList & points) -> Json
    {
        Json result = Json::array();
        for (auto & p : points) {
            Json coords = Json::array();
            for (auto & c : p.coords)
                coords.push_back(c.rep);
            result.push_back(std::move(coords));
        }
        return result;
    }

    auto to_dot(const LoopedGraph & g, const string & name) -> string
    {
        std::ostringstream out;
        out << "graph " << name << " {\n";
        for (std::size_t v = 0 ; v < g.size() ; ++v)
            out << "  " << v << (g.looped(v) ? " [style=filled, fillcolor=black, fontcolor=white];\n" : " [style=solid];\n");
        for (auto & [u, v] : g.edges())
            out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }

    auto read_graph6_lines(std::istream & in) -> vector<string>
    {
        vector<string> result;
        string line;
        while (std::getline(in, line)) {
            while (! line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.pop_back();
            auto start = line.find_first_not_of(" \t");
            if (start == string::npos)
                continue;
            result.push_back(line.substr(start));
        }
        return result;
    }
}
