#include "quandlekit/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "quandlekit/errors.hpp"

namespace quandlekit {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#')
            continue;
        lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& message) {
    throw MalformedInput(origin + ":" + std::to_string(line) + ": " + message);
}

long long parse_int(const std::string& token, const std::string& origin, int line,
                    const std::string& what) {
    long long value = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || p != token.data() + token.size())
        fail(origin, line, "expected integer for " + what + ", got '" + token + "'");
    return value;
}

// "key=value" with a required key; returns the value part.
std::string keyed(const std::string& token, const std::string& key, const std::string& origin,
                  int line) {
    auto eq = token.find('=');
    if (eq == std::string::npos || token.substr(0, eq) != key)
        fail(origin, line, "expected '" + key + "=...', got '" + token + "'");
    return token.substr(eq + 1);
}

struct ParsedTable {
    std::string name;
    Eigen::MatrixXi table;
};

ParsedTable parse_table(const std::string& text, const std::string& keyword,
                        const std::string& origin) {
    auto lines = significant_lines(text);
    if (lines.empty())
        throw MalformedInput(origin + ": empty input");
    const Line& head = lines[0];
    if (head.tokens.size() != 3 || head.tokens[0] != keyword)
        fail(origin, head.number, "expected header '" + keyword + " <name> <n>'");
    std::string name = head.tokens[1];
    long long n = parse_int(head.tokens[2], origin, head.number, "size");
    if (n < 1 || n > 4096)
        fail(origin, head.number, "size " + std::to_string(n) + " out of range 1..4096");

    Eigen::MatrixXi table(n, n);
    for (long long r = 0; r < n; ++r) {
        if (static_cast<size_t>(1 + r) >= lines.size())
            throw MalformedInput(origin + ": expected " + std::to_string(n) +
                                 " table rows, got " + std::to_string(r));
        const Line& row = lines[1 + r];
        if (static_cast<long long>(row.tokens.size()) != n)
            fail(origin, row.number,
                 "expected " + std::to_string(n) + " entries, got " +
                     std::to_string(row.tokens.size()));
        for (long long c = 0; c < n; ++c) {
            long long v = parse_int(row.tokens[c], origin, row.number, "table entry");
            if (v < 0 || v >= n)
                fail(origin, row.number,
                     "entry " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
            table(r, c) = static_cast<int>(v);
        }
    }
    if (lines.size() > static_cast<size_t>(1 + n))
        fail(origin, lines[1 + n].number, "unexpected extra line after the table");
    return {std::move(name), std::move(table)};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MalformedInput("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw MalformedInput("cannot write file: " + path);
    out << text;
    if (!out)
        throw MalformedInput("write failed: " + path);
}

} // namespace

FiniteQuandle quandle_from_text(const std::string& text, const std::string& origin) {
    ParsedTable parsed = parse_table(text, "quandle", origin);
    try {
        return FiniteQuandle(std::move(parsed.table), std::move(parsed.name));
    } catch (const ValidationFailure& e) {
        throw ValidationFailure(origin + ": " + e.what());
    }
}

std::string quandle_to_text(const FiniteQuandle& q) {
    std::ostringstream out;
    out << "quandle " << (q.label().empty() ? "Q" : q.label()) << ' ' << q.size() << '\n';
    for (int a = 0; a < q.size(); ++a) {
        for (int b = 0; b < q.size(); ++b) {
            if (b > 0)
                out << ' ';
            out << q.op(a, b);
        }
        out << '\n';
    }
    return out.str();
}

FiniteQuandle read_quandle_file(const std::string& path) {
    return quandle_from_text(slurp(path), path);
}

std::pair<std::string, Eigen::MatrixXi> quandle_table_from_text(const std::string& text,
                                                                const std::string& origin) {
    ParsedTable parsed = parse_table(text, "quandle", origin);
    return {std::move(parsed.name), std::move(parsed.table)};
}

std::pair<std::string, Eigen::MatrixXi> read_quandle_table_file(const std::string& path) {
    return quandle_table_from_text(slurp(path), path);
}

void write_quandle_file(const std::string& path, const FiniteQuandle& q) {
    spill(path, quandle_to_text(q));
}

std::pair<std::string, Eigen::MatrixXi> group_table_from_text(const std::string& text,
                                                              const std::string& origin) {
    ParsedTable parsed = parse_table(text, "group", origin);
    return {std::move(parsed.name), std::move(parsed.table)};
}

std::pair<std::string, Eigen::MatrixXi> read_group_file(const std::string& path) {
    return group_table_from_text(slurp(path), path);
}

Cochain2 cochain_from_text(const std::string& text, const FiniteQuandle& base, bool check_name,
                           const std::string& origin) {
    auto lines = significant_lines(text);
    if (lines.empty())
        throw MalformedInput(origin + ": empty input");
    const Line& head = lines[0];
    if (head.tokens.size() != 3 || head.tokens[0] != "cocycle")
        fail(origin, head.number, "expected header 'cocycle <quandle-name> <group>'");
    if (check_name && head.tokens[1] != base.label())
        throw ValidationFailure(origin + ": cocycle is bound to quandle '" + head.tokens[1] +
                                "', not '" + base.label() + "'");
    AbelianGroup group({2});
    try {
        group = AbelianGroup::parse(head.tokens[2]);
    } catch (const MalformedInput& e) {
        fail(origin, head.number, e.what());
    }

    const int n = base.size();
    Eigen::MatrixXi values = Eigen::MatrixXi::Zero(n, n);
    Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(n, n);
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 3)
            fail(origin, line.number, "expected 'x y a'");
        long long x = parse_int(line.tokens[0], origin, line.number, "x");
        long long y = parse_int(line.tokens[1], origin, line.number, "y");
        long long a = parse_int(line.tokens[2], origin, line.number, "value");
        if (x < 0 || x >= n || y < 0 || y >= n)
            fail(origin, line.number,
                 "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                     ") outside quandle of size " + std::to_string(n));
        if (a < 0 || a >= group.order())
            fail(origin, line.number, "value " + std::to_string(a) + " outside " +
                                          group.spec_string());
        if (seen(x, y))
            fail(origin, line.number, "duplicate entry for pair (" + std::to_string(x) + ", " +
                                          std::to_string(y) + ")");
        seen(x, y) = 1;
        if (x == y && a != 0)
            throw ValidationFailure(origin + ":" + std::to_string(line.number) +
                                    ": nonzero value on degenerate pair (" + std::to_string(x) +
                                    ", " + std::to_string(x) + ")");
        values(x, y) = static_cast<int>(a);
    }
    return Cochain2(std::move(group), std::move(values));
}

std::string cochain_to_text(const Cochain2& phi, const std::string& quandle_name) {
    std::ostringstream out;
    out << "cocycle " << quandle_name << ' ' << phi.group().spec_string() << '\n';
    for (int x = 0; x < phi.size(); ++x)
        for (int y = 0; y < phi.size(); ++y)
            if (phi(x, y) != 0)
                out << x << ' ' << y << ' ' << phi(x, y) << '\n';
    return out.str();
}

Cochain2 read_cochain_file(const std::string& path, const FiniteQuandle& base, bool check_name) {
    return cochain_from_text(slurp(path), base, check_name, path);
}

void write_cochain_file(const std::string& path, const Cochain2& phi,
                        const std::string& quandle_name) {
    spill(path, cochain_to_text(phi, quandle_name));
}

LinkDiagram diagram_from_text(const std::string& text, const std::string& origin) {
    auto lines = significant_lines(text);
    if (lines.empty())
        throw MalformedInput(origin + ": empty input");
    if (lines[0].tokens.size() != 2 || lines[0].tokens[0] != "link")
        fail(origin, lines[0].number, "expected header 'link <name>'");
    std::string name = lines[0].tokens[1];
    if (lines.size() < 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "arcs")
        fail(origin, lines.size() < 2 ? lines[0].number : lines[1].number,
             "expected 'arcs <n>' after the header");
    long long arc_count = parse_int(lines[1].tokens[1], origin, lines[1].number, "arc count");
    if (arc_count < 1 || arc_count > 100000)
        fail(origin, lines[1].number, "arc count out of range");

    std::vector<Crossing> crossings;
    std::vector<int> crossing_lines;
    std::vector<ComponentTrace> components;
    std::vector<int> component_lines;
    for (size_t i = 2; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] == "x") {
            if (line.tokens.size() != 5)
                fail(origin, line.number, "expected 'x <+|-> over=<a> in=<b> out=<c>'");
            int sign = 0;
            if (line.tokens[1] == "+")
                sign = 1;
            else if (line.tokens[1] == "-")
                sign = -1;
            else
                fail(origin, line.number, "expected sign '+' or '-', got '" + line.tokens[1] +
                                              "'");
            Crossing cr;
            cr.sign = sign;
            cr.over = static_cast<int>(
                parse_int(keyed(line.tokens[2], "over", origin, line.number), origin, line.number,
                          "over arc"));
            cr.under_in = static_cast<int>(
                parse_int(keyed(line.tokens[3], "in", origin, line.number), origin, line.number,
                          "incoming under arc"));
            cr.under_out = static_cast<int>(
                parse_int(keyed(line.tokens[4], "out", origin, line.number), origin, line.number,
                          "outgoing under arc"));
            crossings.push_back(cr);
            crossing_lines.push_back(line.number);
        } else if (line.tokens[0] == "component") {
            if (line.tokens.size() != 3)
                fail(origin, line.number, "expected 'component base=<a> trace=<a,b,...>'");
            ComponentTrace comp;
            comp.base = static_cast<int>(
                parse_int(keyed(line.tokens[1], "base", origin, line.number), origin, line.number,
                          "base arc"));
            std::string trace = keyed(line.tokens[2], "trace", origin, line.number);
            size_t pos = 0;
            while (pos <= trace.size()) {
                size_t comma = trace.find(',', pos);
                std::string item =
                    trace.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                comp.arcs.push_back(static_cast<int>(
                    parse_int(item, origin, line.number, "trace arc")));
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }
            components.push_back(std::move(comp));
            component_lines.push_back(line.number);
        } else {
            fail(origin, line.number, "expected an 'x' or 'component' line, got '" +
                                          line.tokens[0] + "'");
        }
    }

    auto issue = validate_diagram(static_cast<int>(arc_count), crossings, components);
    if (issue) {
        int at = lines[0].number;
        if (issue->crossing >= 0)
            at = crossing_lines[issue->crossing];
        else if (issue->component >= 0)
            at = component_lines[issue->component];
        std::string message = origin + ":" + std::to_string(at) + ": " + issue->message;
        if (issue->malformed)
            throw MalformedInput(message);
        throw ValidationFailure(message);
    }
    return LinkDiagram(std::move(name), static_cast<int>(arc_count), std::move(crossings),
                       std::move(components));
}

std::string diagram_to_text(const LinkDiagram& d) {
    std::ostringstream out;
    out << "link " << d.name() << '\n';
    out << "arcs " << d.arc_count() << '\n';
    for (const Crossing& cr : d.crossings())
        out << "x " << (cr.sign > 0 ? '+' : '-') << " over=" << cr.over << " in=" << cr.under_in
            << " out=" << cr.under_out << '\n';
    for (const ComponentTrace& comp : d.components()) {
        out << "component base=" << comp.base << " trace=";
        for (size_t i = 0; i < comp.arcs.size(); ++i) {
            if (i > 0)
                out << ',';
            out << comp.arcs[i];
        }
        out << '\n';
    }
    return out.str();
}

LinkDiagram read_diagram_file(const std::string& path) {
    return diagram_from_text(slurp(path), path);
}

void write_diagram_file(const std::string& path, const LinkDiagram& d) {
    spill(path, diagram_to_text(d));
}

std::string data_dir() {
    if (const char* env = std::getenv("QUANDLEKIT_DATA"))
        return env;
#ifdef QUANDLEKIT_DATA_DIR
    return QUANDLEKIT_DATA_DIR;
#else
    return ".";
#endif
}

std::string data_file(const std::string& name) {
    return data_dir() + "/" + name;
}

} // namespace quandlekit
