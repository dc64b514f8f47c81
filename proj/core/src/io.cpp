#include "pdesign/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pdesign/errors.hpp"

namespace pdesign {

namespace {

std::vector<std::string> nonempty_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<long long> parse_ints(const std::string& line, const char* context) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long v;
    while (ss >> v) out.push_back(v);
    std::string rest;
    if (!ss.eof() && ss.fail()) {
        ss.clear();
        ss >> rest;
        if (!rest.empty())
            throw ParseError(std::string("unexpected token '") + rest + "' in " + context);
    }
    return out;
}

struct Header {
    Params params;
    int n = 0;
};

Header parse_header(const std::string& line) {
    std::vector<long long> vals = parse_ints(line, "header line");
    if (vals.size() != 4) throw ParseError("header must be `k t lambda n`");
    Header h;
    try {
        h.params = make_params(static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                               static_cast<int>(vals[2]));
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
    if (vals[3] < 0 || vals[3] > kMaxVertices) throw ParseError("universe size out of range");
    h.n = static_cast<int>(vals[3]);
    return h;
}

VertexSet parse_block(const std::string& line, const Header& h) {
    std::vector<long long> vals = parse_ints(line, "block line");
    if (static_cast<int>(vals.size()) != h.params.k)
        throw ParseError("block line must list exactly k vertices");
    VertexSet b = 0;
    long long prev = -1;
    for (long long v : vals) {
        if (v < 0 || v >= h.n) throw ParseError("block vertex out of range");
        if (v <= prev) throw ParseError("block vertices must be strictly ascending");
        prev = v;
        b = with_vertex(b, static_cast<int>(v));
    }
    return b;
}

std::vector<int> parse_order(const std::string& line, int n) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    std::vector<int> order;
    long long v;
    while (ss >> v) {
        if (v < 0 || v >= n) throw ParseError("order vertex out of range");
        order.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(order.size()) != n) throw ParseError("order must list all n vertices");
    return order;
}

std::string block_line(VertexSet b) {
    std::string out;
    bool first = true;
    for (int v : to_vertices(b)) {
        if (!first) out += ' ';
        first = false;
        out += std::to_string(v);
    }
    return out;
}

} // namespace

OrderedDesign read_design(std::istream& in) {
    std::vector<std::string> lines = nonempty_lines(in);
    if (lines.empty()) throw ParseError("empty design file");
    Header h = parse_header(lines[0]);
    std::size_t i = 1;
    std::vector<int> order;
    bool explicit_order = false;
    if (i < lines.size() && lines[i].rfind("order", 0) == 0) {
        order = parse_order(lines[i], h.n);
        explicit_order = true;
        ++i;
    }
    std::vector<VertexSet> blocks;
    for (; i < lines.size(); ++i) blocks.push_back(parse_block(lines[i], h));
    PartialDesign d = make_design(h.params, h.n, std::move(blocks));
    try {
        return explicit_order ? make_ordered(std::move(d), std::move(order))
                              : make_ordered(std::move(d));
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

OrderedDesign read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_design(in);
}

std::string write_design(const OrderedDesign& design) {
    const PartialDesign& d = design.design;
    std::string out = std::to_string(d.params.k) + ' ' + std::to_string(d.params.t) + ' ' +
                      std::to_string(d.params.lambda) + ' ' + std::to_string(d.n) + '\n';
    if (design.has_explicit_order) {
        out += "order";
        for (int v : design.order) out += ' ' + std::to_string(v);
        out += '\n';
    }
    for (VertexSet b : d.blocks) out += block_line(b) + '\n';
    return out;
}

void write_design_file(const std::string& path, const OrderedDesign& design) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << write_design(design);
}

std::string write_structure(const OrderedStructure& structure) {
    const PartialDesign& d = structure.core.design;
    std::string out = std::to_string(d.params.k) + ' ' + std::to_string(d.params.t) + ' ' +
                      std::to_string(d.params.lambda) + ' ' + std::to_string(d.n) + '\n';
    if (structure.has_explicit_order) {
        out += "order";
        for (int v : structure.order) out += ' ' + std::to_string(v);
        out += '\n';
    }
    out += "blocks " + std::to_string(d.blocks.size()) + '\n';
    for (VertexSet b : d.blocks) out += block_line(b) + '\n';
    out += "functions " + std::to_string(structure.core.table.size()) + '\n';
    for (const FunctionEntry& e : structure.core.table) {
        out += "F " + std::to_string(set_size(e.value)) + ' ' + block_line(e.tset) + " -> " +
               block_line(e.value) + '\n';
    }
    return out;
}

OrderedStructure read_structure(std::istream& in) {
    std::vector<std::string> lines = nonempty_lines(in);
    if (lines.empty()) throw ParseError("empty structure file");
    Header h = parse_header(lines[0]);
    std::size_t i = 1;
    std::vector<int> order;
    bool explicit_order = false;
    if (i < lines.size() && lines[i].rfind("order", 0) == 0) {
        order = parse_order(lines[i], h.n);
        explicit_order = true;
        ++i;
    }
    auto expect_count = [&](const char* tag) {
        if (i >= lines.size()) throw ParseError(std::string("missing `") + tag + "` line");
        std::istringstream ss(lines[i]);
        std::string word;
        long long count = -1;
        ss >> word >> count;
        if (word != tag || count < 0) throw ParseError(std::string("malformed `") + tag + "` line");
        ++i;
        return static_cast<std::size_t>(count);
    };

    std::size_t block_count = expect_count("blocks");
    std::vector<VertexSet> blocks;
    for (std::size_t j = 0; j < block_count; ++j, ++i) {
        if (i >= lines.size()) throw ParseError("missing block line");
        blocks.push_back(parse_block(lines[i], h));
    }

    std::size_t fn_count = expect_count("functions");
    std::vector<FunctionEntry> table;
    for (std::size_t j = 0; j < fn_count; ++j, ++i) {
        if (i >= lines.size()) throw ParseError("missing function line");
        std::istringstream ss(lines[i]);
        std::string tag, arrow;
        long long range_size = 0;
        ss >> tag >> range_size;
        if (tag != "F") throw ParseError("function line must start with F");
        FunctionEntry e;
        for (int j2 = 0; j2 < h.params.t; ++j2) {
            long long v = -1;
            if (!(ss >> v) || v < 0 || v >= h.n) throw ParseError("malformed function domain");
            e.tset = with_vertex(e.tset, static_cast<int>(v));
        }
        ss >> arrow;
        if (arrow != "->") throw ParseError("function line missing `->`");
        for (long long j2 = 0; j2 < range_size; ++j2) {
            long long v = -1;
            if (!(ss >> v) || v < 0 || v >= h.n) throw ParseError("malformed function value");
            e.value = with_vertex(e.value, static_cast<int>(v));
        }
        if (set_size(e.tset) != h.params.t || set_size(e.value) != static_cast<int>(range_size))
            throw ParseError("function line has repeated vertices");
        table.push_back(e);
    }
    if (i != lines.size()) throw ParseError("trailing content in structure file");

    OrderedStructure s;
    s.core.design = make_design(h.params, h.n, std::move(blocks));
    std::sort(table.begin(), table.end(),
              [](const FunctionEntry& a, const FunctionEntry& b) { return lex_less(a.tset, b.tset); });
    s.core.table = std::move(table);
    try {
        s.order = explicit_order ? order : natural_order(h.n);
        if (explicit_order) make_ordered(s.core.design, order); // permutation check
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
    s.has_explicit_order = explicit_order;
    return s;
}

OrderedStructure read_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_structure(in);
}

VertexMap read_map(std::istream& in, int source_size) {
    std::vector<std::string> lines = nonempty_lines(in);
    VertexMap map(static_cast<std::size_t>(source_size), -1);
    for (const std::string& line : lines) {
        std::istringstream ss(line);
        long long a = -1, b = -1;
        std::string arrow;
        if (!(ss >> a >> arrow >> b) || arrow != "->")
            throw ParseError("map line must be `a -> b`");
        if (a < 0 || a >= source_size) throw ParseError("map source vertex out of range");
        if (map[static_cast<std::size_t>(a)] != -1) throw ParseError("duplicate map source vertex");
        map[static_cast<std::size_t>(a)] = static_cast<int>(b);
    }
    for (int v : map)
        if (v < 0) throw ParseError("map does not cover every source vertex");
    return map;
}

VertexMap read_map_file(const std::string& path, int source_size) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_map(in, source_size);
}

std::string write_map(const VertexMap& map) {
    std::string out;
    for (std::size_t a = 0; a < map.size(); ++a)
        out += std::to_string(a) + " -> " + std::to_string(map[a]) + '\n';
    return out;
}

} // namespace pdesign
