#include "slt/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace slt {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next line split into whitespace-separated tokens.
    std::vector<std::string> next(const char* expecting) {
        std::string text;
        if (!std::getline(in_, text)) {
            throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + expecting);
        }
        ++line_;
        std::istringstream ss(text);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) {
            tokens.push_back(t);
        }
        return tokens;
    }

    std::size_t line() const { return line_; }

    /// Like next(), but a missing line reports how many of `total` records were found.
    std::vector<std::string> record(const char* what, std::size_t index, std::size_t total) {
        if (in_.peek() == std::char_traits<char>::eof()) {
            throw ParseError(line_ + 1, "truncated input: expected " + std::to_string(total) + " " + what +
                                            " records, found " + std::to_string(index));
        }
        return next(what);
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

    double real(const std::string& token) const {
        double v = 0.0;
        const char* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), end, v);
        if (ec != std::errc() || ptr != end) {
            fail("malformed number '" + token + "'");
        }
        return v;
    }

    std::size_t count(const std::string& token) const {
        std::size_t v = 0;
        const char* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), end, v);
        if (ec != std::errc() || ptr != end) {
            fail("malformed integer '" + token + "'");
        }
        return v;
    }

    std::size_t keyed(const char* key) {
        const auto t = next(key);
        if (t.size() != 2 || t[0] != key) {
            fail(std::string("expected '") + key + " <integer>'");
        }
        return count(t[1]);
    }

    void finish() {
        std::string text;
        while (std::getline(in_, text)) {
            ++line_;
            if (text.find_first_not_of(" \t\r") != std::string::npos) {
                fail("trailing content");
            }
        }
    }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

const char* kind_token(VertexKind k) {
    switch (k) {
        case VertexKind::input:
            return "input";
        case VertexKind::steiner:
            return "steiner";
        case VertexKind::source:
            return "source";
    }
    return "?";
}

}  // namespace

void write_instance(std::ostream& out, const Instance& instance) {
    out << "slt-instance v1\n";
    out << "epsilon " << format_double(instance.epsilon) << "\n";
    out << "source " << instance.source << "\n";
    out << "points " << instance.points.size() << "\n";
    for (Point2 p : instance.points) {
        out << format_double(p.x) << ' ' << format_double(p.y) << "\n";
    }
}

Instance read_instance(std::istream& in) {
    LineReader r(in);
    const auto header = r.next("header");
    if (header != std::vector<std::string>{"slt-instance", "v1"}) {
        r.fail("expected header 'slt-instance v1'");
    }
    Instance inst;
    const auto eps = r.next("epsilon");
    if (eps.size() != 2 || eps[0] != "epsilon") {
        r.fail("expected 'epsilon <real>'");
    }
    inst.epsilon = r.real(eps[1]);
    if (!(inst.epsilon > 0.0 && inst.epsilon < 1.0)) {
        r.fail("epsilon must lie in (0,1)");
    }
    inst.source = r.keyed("source");
    const std::size_t n = r.keyed("points");
    if (inst.source >= n) {
        r.fail("source index out of range");
    }
    inst.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto t = r.record("point", i, n);
        if (t.size() != 2) {
            r.fail("expected 'x y'");
        }
        inst.points.push_back({r.real(t[0]), r.real(t[1])});
    }
    r.finish();
    try {
        validate(inst);
    } catch (const std::invalid_argument& e) {
        throw ParseError(r.line(), e.what());
    }
    return inst;
}

void write_tree(std::ostream& out, const RootedTree& tree) {
    out << "slt-tree v1\n";
    out << "vertices " << tree.vertices.size() << "\n";
    for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
        const Vertex& v = tree.vertices[i];
        out << i << ' ' << format_double(v.pos.x) << ' ' << format_double(v.pos.y) << ' ' << kind_token(v.kind)
            << "\n";
    }
    const auto edges = tree.edges();
    out << "edges " << edges.size() << "\n";
    for (auto [u, v] : edges) {
        out << u << ' ' << v << "\n";
    }
    out << "root " << tree.root << "\n";
}

RootedTree read_tree(std::istream& in) {
    LineReader r(in);
    const auto header = r.next("header");
    if (header != std::vector<std::string>{"slt-tree", "v1"}) {
        r.fail("expected header 'slt-tree v1'");
    }
    const std::size_t m = r.keyed("vertices");
    if (m == 0) {
        r.fail("a tree needs at least one vertex");
    }
    std::vector<Vertex> vertices;
    vertices.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto t = r.record("vertex", i, m);
        if (t.size() != 4) {
            r.fail("expected 'id x y kind'");
        }
        if (r.count(t[0]) != i) {
            r.fail("vertex ids must be 0..m-1 in order");
        }
        Vertex v;
        v.pos = {r.real(t[1]), r.real(t[2])};
        if (t[3] == "input") {
            v.kind = VertexKind::input;
        } else if (t[3] == "steiner") {
            v.kind = VertexKind::steiner;
        } else if (t[3] == "source") {
            v.kind = VertexKind::source;
        } else {
            r.fail("unknown vertex kind '" + t[3] + "'");
        }
        v.label = v.kind == VertexKind::steiner ? npos : i;
        vertices.push_back(v);
    }
    const std::size_t e = r.keyed("edges");
    if (e != m - 1) {
        r.fail("edge count must equal vertices - 1");
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < e; ++i) {
        const auto t = r.record("edge", i, e);
        if (t.size() != 2) {
            r.fail("expected 'u v'");
        }
        const std::size_t u = r.count(t[0]);
        const std::size_t v = r.count(t[1]);
        if (u >= m || v >= m) {
            r.fail("edge endpoint out of range");
        }
        edges.emplace_back(u, v);
    }
    const std::size_t root = r.keyed("root");
    if (root >= m) {
        r.fail("root out of range");
    }
    r.finish();
    try {
        return make_rooted_tree(std::move(vertices), edges, root);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(r.line(), ex.what());
    }
}

void save_instance(const std::string& path, const Instance& instance) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    write_instance(out, instance);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    return read_instance(in);
}

void save_tree(const std::string& path, const RootedTree& tree) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    write_tree(out, tree);
}

RootedTree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    return read_tree(in);
}

}  // namespace slt
