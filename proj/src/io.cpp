#include "locdim/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "locdim/errors.hpp"
#include "locdim/generators.hpp"

namespace locdim {

namespace {

/* Yields trimmed significant lines with their 1-based numbers; blank and
 * '#' lines are skipped here so the parsers never see them. */
struct LineScanner {
    std::istream& in;
    int line_no = 0;

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            size_t b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos || raw[b] == '#') continue;
            size_t e = raw.find_last_not_of(" \t\r");
            out = raw.substr(b, e - b + 1);
            return true;
        }
        return false;
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("expected an integer, got '" + tok + "'", line);
    return v;
}

int parse_id(const std::string& tok, int line) {
    int v = parse_int(tok, line);
    if (v < 1) throw ParseError("ids are positive, got '" + tok + "'", line);
    return v;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// Comma-separated positive integers. Repeats are allowed only for degree
// sequences; vertex lists must not mention a vertex twice.
std::vector<int> parse_list(const std::string& field, int line, bool allow_repeat) {
    std::vector<int> out;
    std::string tok;
    std::istringstream ss(field);
    while (std::getline(ss, tok, ',')) {
        std::string t = trim(tok);
        if (t.empty()) throw ParseError("empty entry in list", line);
        out.push_back(parse_id(t, line));
    }
    if (out.empty()) throw ParseError("empty list", line);
    if (!allow_repeat) {
        auto sorted = out;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError("list repeats an id", line);
    }
    return out;
}

} // namespace

Poset read_poset(std::istream& in) {
    LineScanner sc{in};
    std::string line;
    if (!sc.next(line)) throw ParseError("missing 'poset <n>' header");
    auto head = split_ws(line);
    if (head.size() != 2 || head[0] != "poset")
        throw ParseError("expected 'poset <n>' header", sc.line_no);
    int n = parse_int(head[1], sc.line_no);
    if (n < 1 || n > kElementCap)
        throw ParseError("element count " + head[1] + " out of range", sc.line_no);

    std::vector<std::pair<int, int>> rel;
    while (sc.next(line)) {
        auto t = split_ws(line);
        if (t.size() != 3 || t[1] != "<") throw ParseError("expected '<i> < <j>'", sc.line_no);
        int i = parse_id(t[0], sc.line_no);
        int j = parse_id(t[2], sc.line_no);
        if (i > n || j > n)
            throw ParseError("element id exceeds " + std::to_string(n), sc.line_no);
        if (i == j) throw ParseError("an element cannot precede itself", sc.line_no);
        rel.emplace_back(i, j);
    }
    try {
        return Poset::from_relations(n, rel);
    } catch (const CycleError&) {
        throw ParseError("relations contain a cycle");
    }
}

void write_poset(std::ostream& out, const Poset& p) {
    out << "poset " << p.size() << "\n";
    auto covers = p.covering_pairs();
    std::sort(covers.begin(), covers.end());
    for (auto [i, j] : covers) out << i << " < " << j << "\n";
}

LocalRealizer read_realizer(std::istream& in) {
    LineScanner sc{in};
    LocalRealizer r;
    std::string line;
    while (sc.next(line)) {
        auto t = split_ws(line);
        if (t.empty() || t[0] != "ple:")
            throw ParseError("expected 'ple: <i1> <i2> ...'", sc.line_no);
        if (t.size() == 1) throw ParseError("empty ple", sc.line_no);
        Ple l;
        for (size_t k = 1; k < t.size(); ++k) l.order.push_back(parse_id(t[k], sc.line_no));
        auto sorted = l.order;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError("ple repeats an element", sc.line_no);
        r.ples.push_back(std::move(l));
    }
    return r;
}

void write_realizer(std::ostream& out, const LocalRealizer& r) {
    for (const Ple& l : r.ples) {
        out << "ple:";
        for (int e : l.order) out << ' ' << e;
        out << "\n";
    }
}

BipartiteGraph read_bigraph(std::istream& in) {
    LineScanner sc{in};
    std::string line;
    if (!sc.next(line)) throw ParseError("missing 'bigraph <a> <b>' header");
    auto head = split_ws(line);
    if (head.size() != 3 || head[0] != "bigraph")
        throw ParseError("expected 'bigraph <a> <b>' header", sc.line_no);
    int a = parse_int(head[1], sc.line_no);
    int b = parse_int(head[2], sc.line_no);
    if (a < 0 || b < 0 || a > kElementCap || b > kElementCap)
        throw ParseError("class size out of range", sc.line_no);

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (sc.next(line)) {
        auto t = split_ws(line);
        if (t.size() != 2) throw ParseError("expected '<u> <w>' edge", sc.line_no);
        int u = parse_id(t[0], sc.line_no);
        int w = parse_id(t[1], sc.line_no);
        if (u > a || w > b)
            throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(w) +
                                 ") out of range",
                             sc.line_no);
        if (!seen.insert({u, w}).second) throw ParseError("duplicate edge", sc.line_no);
        edges.emplace_back(u, w);
    }
    return BipartiteGraph::make(a, b, std::move(edges));
}

void write_bigraph(std::ostream& out, const BipartiteGraph& g) {
    out << "bigraph " << g.rows << " " << g.cols << "\n";
    for (auto [u, w] : g.edges) out << u << " " << w << "\n";
}

CoverFamily read_cover(std::istream& in) {
    LineScanner sc{in};
    CoverFamily fam;
    std::string line;
    while (sc.next(line)) {
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected a 'rect:' or 'diff:' member", sc.line_no);
        std::string kw = trim(line.substr(0, colon));
        std::string rest = line.substr(colon + 1);

        std::vector<std::string> fields;
        size_t pos = 0;
        while (true) {
            size_t bar = rest.find('|', pos);
            fields.push_back(rest.substr(pos, bar == std::string::npos ? std::string::npos
                                                                       : bar - pos));
            if (bar == std::string::npos) break;
            pos = bar + 1;
        }

        if (kw == "rect") {
            if (fields.size() != 2)
                throw ParseError("rect member needs 'rows | cols'", sc.line_no);
            fam.members.push_back(CoverMember::rect(parse_list(fields[0], sc.line_no, false),
                                                    parse_list(fields[1], sc.line_no, false)));
        } else if (kw == "diff") {
            if (fields.size() != 3)
                throw ParseError("diff member needs 'rows | cols | degrees'", sc.line_no);
            CoverMember m;
            m.shape = MemberShape::Diff;
            m.rows = parse_list(fields[0], sc.line_no, false);
            m.cols = parse_list(fields[1], sc.line_no, false);
            m.f = parse_list(fields[2], sc.line_no, true);
            if (m.f.size() != m.rows.size())
                throw ParseError("degree sequence length differs from row count", sc.line_no);
            for (int d : m.f)
                if (d > static_cast<int>(m.cols.size()))
                    throw ParseError("degree exceeds column count", sc.line_no);
            fam.members.push_back(std::move(m));
        } else {
            throw ParseError("unknown member kind '" + kw + "'", sc.line_no);
        }
    }
    return fam;
}

void write_cover(std::ostream& out, const CoverFamily& c) {
    auto list = [&out](const std::vector<int>& v) {
        for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    };
    for (const CoverMember& m : c.members) {
        out << (m.shape == MemberShape::Rect ? "rect: " : "diff: ");
        list(m.rows);
        out << " | ";
        list(m.cols);
        if (m.shape == MemberShape::Diff) {
            out << " | ";
            list(m.f);
        }
        out << "\n";
    }
}

namespace {

template <class T, class Reader>
T read_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return reader(in);
}

template <class T, class Writer>
void write_file(const std::string& path, const T& value, Writer writer) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    writer(out, value);
    out.flush();
    if (!out) throw Error("write to " + path + " failed");
}

} // namespace

Poset read_poset_file(const std::string& path) {
    return read_file<Poset>(path, [](std::istream& in) { return read_poset(in); });
}

LocalRealizer read_realizer_file(const std::string& path) {
    return read_file<LocalRealizer>(path, [](std::istream& in) { return read_realizer(in); });
}

BipartiteGraph read_bigraph_file(const std::string& path) {
    return read_file<BipartiteGraph>(path, [](std::istream& in) { return read_bigraph(in); });
}

CoverFamily read_cover_file(const std::string& path) {
    return read_file<CoverFamily>(path, [](std::istream& in) { return read_cover(in); });
}

void write_poset_file(const std::string& path, const Poset& p) {
    write_file(path, p, [](std::ostream& out, const Poset& v) { write_poset(out, v); });
}

void write_realizer_file(const std::string& path, const LocalRealizer& r) {
    write_file(path, r, [](std::ostream& out, const LocalRealizer& v) { write_realizer(out, v); });
}

void write_bigraph_file(const std::string& path, const BipartiteGraph& g) {
    write_file(path, g, [](std::ostream& out, const BipartiteGraph& v) { write_bigraph(out, v); });
}

void write_cover_file(const std::string& path, const CoverFamily& c) {
    write_file(path, c, [](std::ostream& out, const CoverFamily& v) { write_cover(out, v); });
}

} // namespace locdim
