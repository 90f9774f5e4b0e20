#include "kites/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kites/error.hpp"

namespace kites {

namespace {

constexpr int kMaxAlgebraSize = 256;
constexpr int kMaxFrameSize = 4096;

struct Tok {
    int col = 1;  // 1-based
    std::string text;
};

std::vector<Tok> split_tokens(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({static_cast<int>(i) + 1, line.substr(i, j - i)});
        i = j;
    }
    return out;
}

// Significant lines of the input (blank and '#' lines skipped), with
// 1-based line numbers preserved.
struct Cursor {
    std::vector<std::pair<int, std::string>> lines;
    size_t next = 0;
    int last_line = 0;

    explicit Cursor(std::istream& in) {
        std::string raw;
        int no = 0;
        while (std::getline(in, raw)) {
            ++no;
            last_line = no;
            const auto toks = split_tokens(raw);
            if (toks.empty() || toks.front().text[0] == '#') continue;
            lines.emplace_back(no, raw);
        }
    }

    bool done() const { return next >= lines.size(); }

    std::pair<int, std::vector<Tok>> take(const char* what) {
        if (done())
            throw ParseError(last_line + 1, 1, std::string("unexpected end of input: expected ") + what);
        const auto& [no, text] = lines[next++];
        return {no, split_tokens(text)};
    }

    void expect_done(const char* what) {
        if (!done()) {
            const auto& [no, text] = lines[next];
            throw ParseError(no, split_tokens(text).front().col,
                             std::string("trailing content after ") + what);
        }
    }
};

long long parse_int(int line, const Tok& t, long long lo, long long hi,
                    const char* what) {
    long long v = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e)
        throw ParseError(line, t.col,
                         std::string("expected an integer for ") + what + ", got '" + t.text + "'");
    if (v < lo || v > hi)
        throw ParseError(line, t.col, std::string(what) + " " + t.text + " out of range [" +
                                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

// "a->b" with both ends integers.
std::pair<long long, long long> parse_arrow(int line, const Tok& t, long long lo, long long hi,
                                            const char* what) {
    const auto pos = t.text.find("->");
    if (pos == std::string::npos)
        throw ParseError(line, t.col,
                         std::string("expected '<i>-><j>' for ") + what + ", got '" + t.text + "'");
    Tok a{t.col, t.text.substr(0, pos)};
    Tok b{t.col + static_cast<int>(pos) + 2, t.text.substr(pos + 2)};
    return {parse_int(line, a, lo, hi, what), parse_int(line, b, lo, hi, what)};
}

// Takes the next line, which must start with `key`; returns the line number
// and the tokens after the key.
std::pair<int, std::vector<Tok>> expect_key(Cursor& cur, const char* key) {
    auto [no, toks] = cur.take(key);
    if (toks.front().text != key)
        throw ParseError(no, toks.front().col,
                         std::string("expected '") + key + "', got '" + toks.front().text + "'");
    toks.erase(toks.begin());
    return {no, std::move(toks)};
}

long long expect_key_int(Cursor& cur, const char* key, long long lo, long long hi) {
    auto [no, toks] = expect_key(cur, key);
    if (toks.size() != 1)
        throw ParseError(no, 1, std::string("'") + key + "' takes exactly one integer");
    return parse_int(no, toks.front(), lo, hi, key);
}

Table parse_table(Cursor& cur, int n, const char* name) {
    {
        auto [no, toks] = cur.take(name);
        if (toks.size() != 1 || toks.front().text != name)
            throw ParseError(no, toks.front().col,
                             std::string("expected table header '") + name + "'");
    }
    Table t(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        auto [no, toks] = cur.take("a table row");
        if (static_cast<int>(toks.size()) != n)
            throw ParseError(no, 1, std::string("table '") + name + "' row " + std::to_string(r) +
                                        " needs " + std::to_string(n) + " entries, got " +
                                        std::to_string(toks.size()));
        for (int c = 0; c < n; ++c)
            t[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)] =
                static_cast<int>(parse_int(no, toks[static_cast<size_t>(c)], 0, n - 1, "table entry"));
    }
    return t;
}

void serialize_table(std::ostringstream& os, const char* name, const Table& t, int n) {
    os << name << '\n';
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            os << (c ? " " : "") << t[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)];
        os << '\n';
    }
}

}  // namespace

FiniteResLat parse_lattice(std::istream& in) {
    Cursor cur(in);
    const int n = static_cast<int>(expect_key_int(cur, "size", 1, kMaxAlgebraSize));
    const int e = static_cast<int>(expect_key_int(cur, "unit", 0, n - 1));
    Table meet = parse_table(cur, n, "meet");
    Table join = parse_table(cur, n, "join");
    Table mul = parse_table(cur, n, "mul");
    Table ldiv = parse_table(cur, n, "ldiv");
    Table rdiv = parse_table(cur, n, "rdiv");
    cur.expect_done("the rdiv table");
    return FiniteResLat(n, e, std::move(meet), std::move(join), std::move(mul), std::move(ldiv),
                        std::move(rdiv));
}

FiniteResLat parse_lattice_string(const std::string& text) {
    std::istringstream in(text);
    return parse_lattice(in);
}

std::string serialize(const FiniteResLat& g) {
    std::ostringstream os;
    os << "size " << g.size() << '\n';
    os << "unit " << g.unit() << '\n';
    serialize_table(os, "meet", g.meet_table(), g.size());
    serialize_table(os, "join", g.join_table(), g.size());
    serialize_table(os, "mul", g.mul_table(), g.size());
    serialize_table(os, "ldiv", g.ldiv_table(), g.size());
    serialize_table(os, "rdiv", g.rdiv_table(), g.size());
    return os.str();
}

Frame parse_frame(std::istream& in) {
    Cursor cur(in);
    auto [kind_no, kind_toks] = expect_key(cur, "kind");
    if (kind_toks.size() != 1)
        throw ParseError(kind_no, 1, "'kind' takes exactly one word");
    const std::string kind = kind_toks.front().text;
    if (kind == "z-shift" || kind == "n-forward" || kind == "n-backward") {
        cur.expect_done("the frame kind");
        if (kind == "z-shift") return Frame::z_shift();
        if (kind == "n-forward") return Frame::n_forward();
        return Frame::n_backward();
    }
    if (kind != "finite")
        throw ParseError(kind_no, kind_toks.front().col,
                         "unknown frame kind '" + kind +
                             "' (expected finite, z-shift, n-forward or n-backward)");

    const int m = static_cast<int>(expect_key_int(cur, "size", 0, kMaxFrameSize));
    auto [i1_no, i1_toks] = expect_key(cur, "i1");
    std::vector<int> i1;
    for (const Tok& t : i1_toks)
        i1.push_back(static_cast<int>(parse_int(i1_no, t, 0, m - 1, "i1 vertex")));
    auto sorted = i1;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(i1_no, 1, "i1 lists a vertex twice");

    auto [lam_no, lam_toks] = expect_key(cur, "lambda");
    std::vector<std::pair<int, int>> lambda;
    for (const Tok& t : lam_toks) {
        const auto [a, b] = parse_arrow(lam_no, t, 0, m - 1, "lambda pair");
        lambda.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    cur.expect_done("the lambda list");
    return Frame::finite(m, std::move(i1), lambda);
}

Frame parse_frame_string(const std::string& text) {
    std::istringstream in(text);
    return parse_frame(in);
}

std::string serialize(const Frame& f) {
    switch (f.kind()) {
        case FrameKind::ZShift:
            return "kind z-shift\n";
        case FrameKind::NForward:
            return "kind n-forward\n";
        case FrameKind::NBackward:
            return "kind n-backward\n";
        case FrameKind::Finite:
            break;
    }
    std::ostringstream os;
    os << "kind finite\n";
    os << "size " << f.size() << '\n';
    os << "i1";
    for (int i : f.i1()) os << ' ' << i;
    os << '\n';
    os << "lambda";
    for (int i : f.i1()) os << ' ' << i << "->" << f.lambda(i);
    os << '\n';
    return os.str();
}

MapSpec parse_map(std::istream& in) {
    Cursor cur(in);
    auto [kind_no, kind_toks] = expect_key(cur, "kind");
    if (kind_toks.size() != 1)
        throw ParseError(kind_no, 1, "'kind' takes exactly one word");
    const std::string kind = kind_toks.front().text;

    MapSpec m;
    if (kind == "explicit") {
        m.kind = FrameTransformation::MapKind::Explicit;
        auto [t_no, t_toks] = expect_key(cur, "t");
        std::vector<std::pair<int, int>> pairs;
        for (const Tok& t : t_toks) {
            const auto [a, b] = parse_arrow(t_no, t, 0, kMaxFrameSize, "map pair");
            pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
        m.table.assign(pairs.size(), -1);
        for (const auto& [a, b] : pairs) {
            if (a >= static_cast<int>(pairs.size()) || m.table[static_cast<size_t>(a)] != -1)
                throw ParseError(t_no, 1,
                                 "map must list each source vertex exactly once, starting at 0");
            m.table[static_cast<size_t>(a)] = b;
        }
        cur.expect_done("the map pairs");
    } else if (kind == "shift") {
        m.kind = FrameTransformation::MapKind::Shift;
        m.shift = expect_key_int(cur, "by", -1000000000LL, 1000000000LL);
        cur.expect_done("the shift amount");
    } else if (kind == "mod") {
        m.kind = FrameTransformation::MapKind::ModCollapse;
        cur.expect_done("the map kind");
    } else {
        throw ParseError(kind_no, kind_toks.front().col,
                         "unknown map kind '" + kind + "' (expected explicit, shift or mod)");
    }
    return m;
}

MapSpec parse_map_string(const std::string& text) {
    std::istringstream in(text);
    return parse_map(in);
}

std::string serialize(const MapSpec& m) {
    std::ostringstream os;
    switch (m.kind) {
        case FrameTransformation::MapKind::Explicit:
            os << "kind explicit\n";
            os << "t";
            for (size_t i = 0; i < m.table.size(); ++i) os << ' ' << i << "->" << m.table[i];
            os << '\n';
            break;
        case FrameTransformation::MapKind::Shift:
            os << "kind shift\n";
            os << "by " << m.shift << '\n';
            break;
        case FrameTransformation::MapKind::ModCollapse:
            os << "kind mod\n";
            break;
    }
    return os.str();
}

FrameTransformation bind_map(const MapSpec& m, Frame source, Frame target) {
    switch (m.kind) {
        case FrameTransformation::MapKind::Explicit:
            return FrameTransformation::explicit_map(std::move(source), std::move(target), m.table);
        case FrameTransformation::MapKind::Shift:
            return FrameTransformation::shift_map(std::move(source), std::move(target), m.shift);
        case FrameTransformation::MapKind::ModCollapse:
            return FrameTransformation::mod_collapse(std::move(source), std::move(target));
    }
    throw DomainError("unknown map kind");
}

KiteElement parse_element(const std::string& text, const Kite& k) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(1, static_cast<int>(i) + 1, msg);
    };
    auto read_int = [&](const char* what) -> long long {
        skip_ws();
        long long v = 0;
        const char* b = text.data() + i;
        const char* e = text.data() + text.size();
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || p == b)
            throw fail(std::string("expected an integer for ") + what);
        i += static_cast<size_t>(p - b);
        return v;
    };

    skip_ws();
    if (i >= text.size() || text[i] != '@') throw fail("element literal must start with '@'");
    ++i;
    const long long level = read_int("the level");
    if (level < 0 || level > k.max_level())
        throw fail("level " + std::to_string(level) + " outside the kite's range [0, " +
                   std::to_string(k.max_level()) + "]");
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw fail("expected '[' after the level");
    ++i;

    std::vector<int> values;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            const long long v = read_int("an entry");
            if (v < 0 || v >= k.algebra().size())
                throw fail("entry " + std::to_string(v) + " outside the algebra's range [0, " +
                           std::to_string(k.algebra().size() - 1) + "]");
            values.push_back(static_cast<int>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw fail("expected ',' or ']' in the entry list");
        }
    }
    skip_ws();
    if (i != text.size()) throw fail("trailing content after the element literal");

    const size_t want = k.labels(static_cast<int>(level)).size();
    if (values.size() != want)
        throw ParseError(1, 1,
                         "level " + std::to_string(level) + " needs " + std::to_string(want) +
                             " entries, got " + std::to_string(values.size()));
    return KiteElement{static_cast<int>(level), std::move(values)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructuralError("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw StructuralError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw StructuralError("failed writing '" + path + "'");
}

FiniteResLat load_lattice(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_lattice_string(text);
    } catch (const StructuralError& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

Frame load_frame(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_frame_string(text);
    } catch (const StructuralError& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

MapSpec load_map(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_map_string(text);
    } catch (const StructuralError& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

}  // namespace kites
