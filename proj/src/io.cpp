#include "graphrecover/io.hpp"

#include "graphrecover/errors.hpp"
#include "graphrecover/graph_algorithms.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

namespace graphrecover {

namespace {

class LineReader {
public:
    LineReader(std::istream &in, std::string source) : in_(in), source_(std::move(source)) {}

    /// Next line that is neither blank nor a comment, without the newline.
    bool next(std::string_view &line)
    {
        while (raw_line(line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos || line[first] == '#')
                continue;
            const auto last = line.find_last_not_of(" \t\r");
            line = line.substr(first, last - first + 1);
            return true;
        }
        return false;
    }

    std::size_t line_number() const { return line_; }
    const std::string &source() const { return source_; }

    [[noreturn]] void fail(const std::string &message) const { throw ParseError(source_, line_, message); }

private:
    bool raw_line(std::string_view &line)
    {
        for (;;) {
            const auto nl = buffer_.find('\n', pos_);
            if (nl != std::string::npos) {
                line = std::string_view(buffer_).substr(pos_, nl - pos_);
                pos_ = nl + 1;
                ++line_;
                return true;
            }
            if (eof_) {
                if (pos_ >= buffer_.size())
                    return false;
                line = std::string_view(buffer_).substr(pos_);
                pos_ = buffer_.size();
                ++line_;
                return true;
            }
            buffer_.erase(0, pos_);
            pos_ = 0;
            const std::size_t old = buffer_.size();
            buffer_.resize(old + chunk);
            in_.read(buffer_.data() + old, static_cast<std::streamsize>(chunk));
            buffer_.resize(old + static_cast<std::size_t>(in_.gcount()));
            if (in_.bad())
                throw IoError(source_ + ": read error");
            if (!in_)
                eof_ = true;
        }
    }

    static constexpr std::size_t chunk = std::size_t{1} << 20;
    std::istream &in_;
    std::string source_;
    std::string buffer_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
    bool eof_ = false;
};

template <std::size_t N>
std::array<std::string_view, N> split(const LineReader &r, std::string_view line, const char *what)
{
    std::array<std::string_view, N> out;
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if (i == line.size())
            break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (count == N)
            r.fail(std::string("expected ") + what + ", found extra tokens");
        out[count++] = line.substr(i, j - i);
        i = j;
    }
    if (count != N)
        r.fail(std::string("expected ") + what);
    return out;
}

std::uint64_t number(const LineReader &r, std::string_view token)
{
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size())
        r.fail("'" + std::string(token) + "' is not a non-negative integer");
    return value;
}

class Writer {
public:
    explicit Writer(std::ostream &out) : out_(out) { buffer_.reserve(capacity + 64); }
    ~Writer() { flush(); }

    Writer &num(std::uint64_t v)
    {
        char tmp[24];
        const auto res = std::to_chars(tmp, tmp + sizeof tmp, v);
        buffer_.append(tmp, res.ptr);
        return spill();
    }
    Writer &text(std::string_view s)
    {
        buffer_.append(s);
        return spill();
    }
    Writer &ch(char c)
    {
        buffer_.push_back(c);
        return spill();
    }
    void flush()
    {
        out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
        buffer_.clear();
    }

private:
    Writer &spill()
    {
        if (buffer_.size() >= capacity)
            flush();
        return *this;
    }

    static constexpr std::size_t capacity = std::size_t{1} << 20;
    std::ostream &out_;
    std::string buffer_;
};

std::ifstream open_in(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string() + " for reading");
    return in;
}

template <typename F>
void write_file(const std::filesystem::path &path, F &&body)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    body(out);
    out.flush();
    if (!out)
        throw IoError("write to " + path.string() + " failed");
}

} // namespace

Graph read_edge_list(std::istream &in, const std::string &source)
{
    LineReader r(in, source);
    std::string_view line;
    if (!r.next(line))
        r.fail("missing header \"n m\"");
    const auto header = split<2>(r, line, "header \"n m\"");
    const std::uint64_t n = number(r, header[0]);
    const std::uint64_t m = number(r, header[1]);
    if (n > std::numeric_limits<Vertex>::max())
        r.fail("vertex count " + std::to_string(n) + " too large");
    if (n > 1 && m > n * (n - 1) / 2)
        r.fail("edge count " + std::to_string(m) + " exceeds n(n-1)/2");
    GraphBuilder b(n);
    std::uint64_t seen = 0;
    while (r.next(line)) {
        const auto t = split<2>(r, line, "edge \"u v\"");
        const std::uint64_t u = number(r, t[0]);
        const std::uint64_t v = number(r, t[1]);
        if (v >= n || u >= n)
            r.fail("vertex out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (u >= v)
            r.fail("edge endpoints must satisfy u < v");
        if (b.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            r.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        if (++seen > m)
            r.fail("more than the " + std::to_string(m) + " edges announced in the header");
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (seen != m)
        r.fail("header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return std::move(b).build();
}

void write_edge_list(std::ostream &out, const Graph &g)
{
    Writer w(out);
    w.num(g.order()).ch(' ').num(g.edge_count()).ch('\n');
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto row = g.row(u);
        for (std::size_t i = u / bits_per_word; i < row.size(); ++i) {
            Word word = row[i];
            if (i == u / bits_per_word)
                word &= ~Word{0} << (u % bits_per_word) << 1;
            while (word != 0) {
                const auto v = i * bits_per_word + static_cast<std::size_t>(std::countr_zero(word));
                w.num(u).ch(' ').num(v).ch('\n');
                word &= word - 1;
            }
        }
    }
}

Pattern read_pattern(std::istream &in, const std::string &source)
{
    LineReader r(in, source);
    std::string_view line;
    if (!r.next(line))
        r.fail("missing header \"K\"");
    const std::uint64_t k = number(r, split<1>(r, line, "header \"K\"")[0]);
    if (k > 4096)
        r.fail("pattern size " + std::to_string(k) + " too large");
    Pattern p(k);
    auto node = [&](std::string_view token) {
        const std::uint64_t u = number(r, token);
        if (u >= k)
            r.fail("node " + std::to_string(u) + " out of range 0.." + std::to_string(k == 0 ? 0 : k - 1));
        return static_cast<Node>(u);
    };
    while (r.next(line)) {
        if (line.starts_with("loop")) {
            const auto t = split<2>(r, line, "\"loop u\"");
            if (t[0] != "loop")
                r.fail("unknown directive '" + std::string(t[0]) + "'");
            const Node u = node(t[1]);
            if (p.has_loop(u))
                r.fail("duplicate loop " + std::to_string(u));
            p.set_loop(u);
        } else if (line.starts_with("edge")) {
            const auto t = split<3>(r, line, "\"edge u v\"");
            if (t[0] != "edge")
                r.fail("unknown directive '" + std::string(t[0]) + "'");
            const Node u = node(t[1]);
            const Node v = node(t[2]);
            if (u == v)
                r.fail("edge " + std::to_string(u) + " " + std::to_string(v) + " is a loop; use \"loop u\"");
            if (p.adjacent(u, v))
                r.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            p.set_edge(u, v);
        } else {
            r.fail("expected \"loop u\" or \"edge u v\"");
        }
    }
    return p;
}

void write_pattern(std::ostream &out, const Pattern &p)
{
    Writer w(out);
    w.num(p.size()).ch('\n');
    for (Node u = 0; u < p.size(); ++u)
        if (p.has_loop(u))
            w.text("loop ").num(u).ch('\n');
    for (Node u = 0; u < p.size(); ++u)
        for (Node v = u + 1; v < p.size(); ++v)
            if (p.adjacent(u, v))
                w.text("edge ").num(u).ch(' ').num(v).ch('\n');
}

std::vector<Node> read_partition(std::istream &in, const std::string &source, std::size_t n,
                                 std::size_t node_count)
{
    LineReader r(in, source);
    constexpr Node unset = ~Node{0};
    std::vector<Node> assignment(n, unset);
    std::size_t seen = 0;
    std::string_view line;
    while (r.next(line)) {
        const auto t = split<2>(r, line, "\"vertex node\"");
        const std::uint64_t v = number(r, t[0]);
        const std::uint64_t u = number(r, t[1]);
        if (v >= n)
            r.fail("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
        if (u >= node_count)
            r.fail("node " + std::to_string(u) + " out of range for a " + std::to_string(node_count) +
                   "-node pattern");
        if (assignment[v] != unset)
            r.fail("vertex " + std::to_string(v) + " assigned twice");
        assignment[v] = static_cast<Node>(u);
        ++seen;
    }
    if (seen != n) {
        std::size_t missing = 0;
        while (assignment[missing] != unset)
            ++missing;
        throw ParseError(source, 0, "vertex " + std::to_string(missing) + " has no node");
    }
    return assignment;
}

void write_partition(std::ostream &out, std::span<const Node> assignment)
{
    Writer w(out);
    for (std::size_t v = 0; v < assignment.size(); ++v)
        w.num(v).ch(' ').num(assignment[v]).ch('\n');
}

Graph load_edge_list(const std::filesystem::path &path)
{
    auto in = open_in(path);
    return read_edge_list(in, path.string());
}

void save_edge_list(const std::filesystem::path &path, const Graph &g)
{
    write_file(path, [&](std::ostream &out) { write_edge_list(out, g); });
}

Pattern load_pattern(const std::filesystem::path &path)
{
    auto in = open_in(path);
    return read_pattern(in, path.string());
}

void save_pattern(const std::filesystem::path &path, const Pattern &p)
{
    write_file(path, [&](std::ostream &out) { write_pattern(out, p); });
}

std::vector<Node> load_partition(const std::filesystem::path &path, std::size_t n, std::size_t node_count)
{
    auto in = open_in(path);
    return read_partition(in, path.string(), n, node_count);
}

void save_partition(const std::filesystem::path &path, std::span<const Node> assignment)
{
    write_file(path, [&](std::ostream &out) { write_partition(out, assignment); });
}

InstancePaths InstancePaths::from_prefix(const std::string &prefix)
{
    return {prefix + ".graph", prefix + ".pattern", prefix + ".partition", prefix + ".applied"};
}

void save_instance(const std::string &prefix, const PatternedInstance &inst)
{
    const auto paths = InstancePaths::from_prefix(prefix);
    save_edge_list(paths.graph, inst.G());
    save_pattern(paths.pattern, inst.pg.pattern);
    save_partition(paths.partition, inst.pg.assignment);
    save_edge_list(paths.applied, inst.H);
}

PatternedInstance load_instance(const std::string &prefix)
{
    const auto paths = InstancePaths::from_prefix(prefix);
    PatternedInstance inst;
    inst.pg.graph = load_edge_list(paths.graph);
    inst.pg.pattern = load_pattern(paths.pattern);
    inst.pg.assignment = load_partition(paths.partition, inst.pg.graph.order(), inst.pg.pattern.size());
    inst.H = apply_pattern(inst.pg);
    inst.d = degeneracy(inst.pg.graph).value;
    inst.K = inst.pg.pattern.size();
    if (std::filesystem::exists(paths.applied)) {
        const Graph applied = load_edge_list(paths.applied);
        if (applied != inst.H)
            throw ParseError(paths.applied.string(), 0, "applied graph does not match the instance's pattern");
    }
    return inst;
}

} // namespace graphrecover
