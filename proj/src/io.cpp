#include "hellycover/io.hpp"

#include <fstream>
#include <sstream>

#include "hellycover/errors.hpp"

namespace hellycover {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string to_text(const HypergraphFile& f) {
    std::string out = "n=" + std::to_string(f.h.n) + " r=" +
                      (f.h.uniformity ? std::to_string(*f.h.uniformity) : std::string("_")) +
                      " multi=" + (f.h.multi ? "1" : "0") + "\n";
    if (f.parts) {
        out += "parts=";
        for (std::size_t i = 0; i < f.parts->parts.size(); ++i) {
            if (i) out += ';';
            out += join_ints(f.parts->parts[i]);
        }
        out += "\n";
    }
    for (const auto& e : f.h.edges) out += join_ints(e) + "\n";
    return out;
}

nlohmann::json to_json(const HypergraphFile& f) {
    nlohmann::json j;
    j["n"] = f.h.n;
    if (f.h.uniformity)
        j["r"] = *f.h.uniformity;
    else
        j["r"] = nullptr;
    j["multi"] = f.h.multi;
    if (f.parts)
        j["parts"] = f.parts->parts;
    else
        j["parts"] = nullptr;
    j["edges"] = f.h.edges;
    return j;
}

std::string to_json_string(const HypergraphFile& f) { return to_json(f).dump(2) + "\n"; }

HypergraphFile hypergraph_from_json(const nlohmann::json& j) {
    HypergraphFile f;
    try {
        f.h.n = j.at("n").get<int>();
        if (j.contains("r") && !j.at("r").is_null())
            f.h.uniformity = j.at("r").get<int>();
        if (j.contains("multi") && !j.at("multi").is_null())
            f.h.multi = j.at("multi").get<bool>();
        for (const auto& e : j.at("edges"))
            f.h.edges.push_back(canonical_set(e.get<VertexSet>()));
        if (j.contains("parts") && !j.at("parts").is_null()) {
            PartiteStructure p;
            for (const auto& part : j.at("parts"))
                p.parts.push_back(canonical_set(part.get<VertexSet>()));
            f.parts = std::move(p);
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad hypergraph JSON: ") + e.what());
    }
    return f;
}

HypergraphFile hypergraph_from_text(const std::string& text) {
    HypergraphFile f;
    std::stringstream ss(text);
    std::string line;
    bool have_header = false;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            std::stringstream hs(line);
            std::string field;
            while (hs >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos)
                    throw input_error("bad hypergraph header field: " + field);
                std::string key = field.substr(0, eq), val = field.substr(eq + 1);
                if (key == "n")
                    f.h.n = std::stoi(val);
                else if (key == "r")
                    f.h.uniformity = (val == "_") ? std::nullopt : std::optional<int>(std::stoi(val));
                else if (key == "multi")
                    f.h.multi = val == "1";
                else
                    throw input_error("unknown hypergraph header field: " + key);
            }
            have_header = true;
            continue;
        }
        if (line.rfind("parts=", 0) == 0) {
            PartiteStructure p;
            std::stringstream ps(line.substr(6));
            std::string part;
            while (std::getline(ps, part, ';'))
                p.parts.push_back(canonical_set(parse_int_list(part)));
            f.parts = std::move(p);
            continue;
        }
        f.h.edges.push_back(canonical_set(parse_int_list(line)));
    }
    if (!have_header) throw input_error("hypergraph text file is missing its header line");
    return f;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path);
    out << content;
}

HypergraphFile read_hypergraph_file(const std::string& path) {
    std::string text = read_file(path);
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{')
        return hypergraph_from_json(nlohmann::json::parse(text));
    return hypergraph_from_text(text);
}

void write_hypergraph_file(const std::string& path, const HypergraphFile& f, bool json) {
    write_file(path, json ? to_json_string(f) : to_text(f));
}

nlohmann::json to_json(const ColouredGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["r"] = g.r;
    j["multi"] = g.multi;
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges) edges.push_back({e.u, e.v, e.colour});
    j["edges"] = std::move(edges);
    return j;
}

ColouredGraph coloured_graph_from_json(const nlohmann::json& j) {
    ColouredGraph g;
    try {
        g.n = j.at("n").get<int>();
        g.r = j.at("r").get<int>();
        if (j.contains("multi") && !j.at("multi").is_null())
            g.multi = j.at("multi").get<bool>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw input_error("coloured edge must be [u, v, colour]");
            g.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad coloured graph JSON: ") + e.what());
    }
    return g;
}

ColouredGraph read_coloured_graph_file(const std::string& path) {
    return coloured_graph_from_json(nlohmann::json::parse(read_file(path)));
}

void write_coloured_graph_file(const std::string& path, const ColouredGraph& g) {
    write_file(path, to_json(g).dump(2) + "\n");
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

}  // namespace hellycover
