#include "spheresep/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "spheresep/error.hpp"

namespace spheresep {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is the 1-based offset of the offending character.
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        const auto colon = what.rfind(": ");
        if (colon != std::string::npos) what = what.substr(colon + 2);
        fail(ErrorCode::kParse, "JSON syntax error at line " + std::to_string(line) +
                                    ", column " + std::to_string(column) + ": " + what);
    }
}

const json& field(const json& obj, const char* key, const std::string& where) {
    require(obj.is_object(), ErrorCode::kParse, where + " must be a JSON object");
    const auto it = obj.find(key);
    require(it != obj.end(), ErrorCode::kParse, where + " is missing \"" + key + "\"");
    return *it;
}

double number(const json& v, const std::string& where) {
    require(v.is_number(), ErrorCode::kParse, where + " must be a number");
    return v.get<double>();
}

std::size_t index(const json& v, const std::string& where) {
    require(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0),
            ErrorCode::kParse, where + " must be a non-negative integer");
    return v.get<std::size_t>();
}

Point point(const json& v, const std::string& where) {
    require(v.is_array(), ErrorCode::kParse, where + " must be an array");
    Point p;
    for (std::size_t i = 0; i < v.size(); ++i)
        p.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
    return p;
}

std::vector<Vertex> id_list(const json& v, const std::string& where) {
    require(v.is_array(), ErrorCode::kParse, where + " must be an array");
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(index(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

Arrangement arrangement_from_json(const std::string& text) {
    const json doc = parse_json(text);
    const std::size_t dim = index(field(doc, "dim", "arrangement"), "dim");
    const json& objects = field(doc, "objects", "arrangement");
    require(objects.is_array(), ErrorCode::kParse, "\"objects\" must be an array");

    std::vector<std::string> labels;
    if (const auto it = doc.find("labels"); it != doc.end()) {
        require(it->is_array(), ErrorCode::kParse, "\"labels\" must be an array");
        for (const auto& l : *it) {
            require(l.is_string(), ErrorCode::kParse, "labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }

    std::vector<Sphere> spheres;
    std::vector<HyperplaneChord> chords;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const std::string where = "objects[" + std::to_string(i) + "]";
        const json& kind = field(objects[i], "kind", where);
        require(kind.is_string(), ErrorCode::kParse, where + ".kind must be a string");
        const auto k = kind.get<std::string>();
        if (k == "sphere") {
            spheres.push_back({point(field(objects[i], "center", where), where + ".center"),
                               number(field(objects[i], "radius", where), where + ".radius")});
        } else if (k == "chord") {
            chords.push_back({point(field(objects[i], "normal", where), where + ".normal"),
                              number(field(objects[i], "offset", where), where + ".offset")});
        } else {
            fail(ErrorCode::kParse, where + ".kind must be \"sphere\" or \"chord\"");
        }
    }
    require(spheres.empty() || chords.empty(), ErrorCode::kInvalidArgument,
            "arrangement mixes spheres and chords");
    if (!chords.empty()) return Arrangement::of_chords(dim, std::move(chords), std::move(labels));
    return Arrangement::of_spheres(dim, std::move(spheres), std::move(labels));
}

std::string arrangement_to_json(const Arrangement& arr) {
    json objects = json::array();
    if (arr.kind() == ObjectKind::kChord) {
        for (const auto& c : arr.chords())
            objects.push_back({{"kind", "chord"}, {"normal", c.normal}, {"offset", c.offset}});
    } else {
        for (const auto& s : arr.spheres())
            objects.push_back({{"kind", "sphere"}, {"center", s.center}, {"radius", s.radius}});
    }
    json doc{{"dim", arr.dim()}, {"objects", objects}, {"labels", arr.labels()}};
    return doc.dump(1) + "\n";
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream os;
    const auto edges = g.edges();
    os << g.size() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
    return os.str();
}

std::string graph_to_edge_list(const WeightedGraph& g) {
    std::ostringstream os;
    const auto edges = g.base().edges();
    os << g.size() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) {
        os << u << ' ' << v;
        if (const int w = g.weight(u, v); w != 1) os << ' ' << w;
        os << '\n';
    }
    return os.str();
}

WeightedGraph weighted_graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto where = [&] { return "edge list line " + std::to_string(line_no) + ": "; };
    auto read_numbers = [&](std::vector<long long>& out) {
        out.clear();
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            require(used == tok.size() && v >= 0, ErrorCode::kParse,
                    where() + "expected a non-negative integer, got '" + tok + "'");
            out.push_back(v);
        }
    };
    require(next_line(), ErrorCode::kParse, "edge list is empty");
    std::vector<long long> nums;
    read_numbers(nums);
    require(nums.size() == 2, ErrorCode::kParse, where() + "header must be \"n m\"");
    const auto n = static_cast<std::size_t>(nums[0]);
    const auto m = static_cast<std::size_t>(nums[1]);
    WeightedGraph g{Graph(n)};
    for (std::size_t e = 0; e < m; ++e) {
        require(next_line(), ErrorCode::kParse,
                "edge list ends after " + std::to_string(e) + " of " + std::to_string(m) + " edges");
        read_numbers(nums);
        require(nums.size() == 2 || nums.size() == 3, ErrorCode::kParse,
                where() + "expected \"i j [w]\"");
        const auto u = static_cast<Vertex>(nums[0]);
        const auto v = static_cast<Vertex>(nums[1]);
        const int w = nums.size() == 3 ? static_cast<int>(nums[2]) : 1;
        require(u < n && v < n, ErrorCode::kParse, where() + "vertex id out of range");
        require(u != v, ErrorCode::kParse, where() + "self-loop");
        require(w == 1 || w == 2, ErrorCode::kParse, where() + "weight must be 1 or 2");
        require(!g.base().has_edge(u, v), ErrorCode::kParse, where() + "repeated edge");
        g.set_edge(u, v, w);
    }
    require(!next_line(), ErrorCode::kParse, where() + "more edges than the header announces");
    return g;
}

Graph graph_from_edge_list(const std::string& text) {
    const WeightedGraph wg = weighted_graph_from_edge_list(text);
    for (const auto& [u, v] : wg.base().edges())
        require(wg.weight(u, v) == 1, ErrorCode::kParse,
                "weighted edge list given where an unweighted graph is expected");
    return wg.base();
}

std::string cover_to_json(const Cover& cover) {
    json doc{{"r", cover.r}, {"D", cover.D}, {"families", cover.families}};
    return doc.dump() + "\n";
}

Cover cover_from_json(const std::string& text) {
    const json doc = parse_json(text);
    Cover cover;
    cover.r = number(field(doc, "r", "cover"), "r");
    const json& D = field(doc, "D", "cover");
    require(D.is_number_integer() || D.is_number_unsigned(), ErrorCode::kParse,
            "D must be an integer");
    cover.D = D.get<Distance>();
    const json& families = field(doc, "families", "cover");
    require(families.is_array(), ErrorCode::kParse, "\"families\" must be an array");
    for (std::size_t f = 0; f < families.size(); ++f) {
        const std::string where = "families[" + std::to_string(f) + "]";
        require(families[f].is_array(), ErrorCode::kParse, where + " must be an array");
        auto& fam = cover.families.emplace_back();
        for (std::size_t s = 0; s < families[f].size(); ++s)
            fam.push_back(id_list(families[f][s], where + "[" + std::to_string(s) + "]"));
    }
    return cover;
}

std::string model_to_json(const MinorModel& m) {
    json doc{{"h", m.h}, {"depth", m.depth}, {"bags", m.bags}, {"roots", m.roots}};
    return doc.dump() + "\n";
}

MinorModel model_from_json(const std::string& text) {
    const json doc = parse_json(text);
    MinorModel m;
    m.h = index(field(doc, "h", "model"), "h");
    m.depth = index(field(doc, "depth", "model"), "depth");
    const json& bags = field(doc, "bags", "model");
    require(bags.is_array(), ErrorCode::kParse, "\"bags\" must be an array");
    for (std::size_t i = 0; i < bags.size(); ++i)
        m.bags.push_back(id_list(bags[i], "bags[" + std::to_string(i) + "]"));
    m.roots = id_list(field(doc, "roots", "model"), "roots");
    return m;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == tok.size() && tok[0] != '-', ErrorCode::kParse,
                "expected a vertex id, got '" + tok + "'");
        out.push_back(static_cast<Vertex>(v));
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            tok += c;
    }
    flush();
    return out;
}

}  // namespace spheresep
