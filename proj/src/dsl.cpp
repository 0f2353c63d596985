#include "kra/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace kra {

namespace {

struct Token {
    std::string text;
    int column = 1;
    bool ident = false;
};

struct Failure {
    ParseError error;
};

[[noreturn]] void fail(int line, int column, int length, std::string message,
                       std::vector<std::string> expected = {}) {
    throw Failure{ParseError{{line, column, std::max(length, 0)}, std::move(message), std::move(expected)}};
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::vector<Token> tokenize(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        const char c = line[k];
        const int col = static_cast<int>(k) + 1;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++k;
        } else if (c == '#') {
            break;
        } else if (ident_char(c)) {
            std::size_t e = k;
            while (e < line.size() && ident_char(line[e])) {
                ++e;
            }
            out.push_back({std::string(line.substr(k, e - k)), col, true});
            k = e;
        } else if (line.substr(k, 3) == "<->") {
            out.push_back({"<->", col, false});
            k += 3;
        } else if (line.substr(k, 2) == "->") {
            out.push_back({"->", col, false});
            k += 2;
        } else if (std::string_view("~+-[],*/").find(c) != std::string_view::npos) {
            out.push_back({std::string(1, c), col, false});
            ++k;
        } else {
            fail(line_no, col, 1, std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

bool is_integer(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, int line_no, int line_length)
        : tokens_(std::move(tokens)), line_(line_no), end_col_(line_length + 1) {}

    [[nodiscard]] bool done() const { return pos_ >= tokens_.size(); }

    const Token& peek() const { return tokens_[pos_]; }

    const Token& ident(const std::string& what) {
        if (done() || !peek().ident) {
            error_here("expected " + what, {what});
        }
        return tokens_[pos_++];
    }

    void expect(const std::string& symbol) {
        if (done() || peek().text != symbol) {
            error_here("expected '" + symbol + "'", {"'" + symbol + "'"});
        }
        ++pos_;
    }

    bool accept(const std::string& symbol) {
        if (!done() && peek().text == symbol) {
            ++pos_;
            return true;
        }
        return false;
    }

    long integer(const std::string& what, long lo, long hi) {
        const Token& t = ident(what);
        if (!is_integer(t.text) || t.text.size() > 9) {
            fail(line_, t.column, static_cast<int>(t.text.size()), "expected " + what + ", got '" + t.text + "'", {what});
        }
        const long v = std::stol(t.text);
        if (v < lo || v > hi) {
            fail(line_, t.column, static_cast<int>(t.text.size()),
                 what + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
        }
        return v;
    }

    void finish() {
        if (!done()) {
            fail(line_, peek().column, static_cast<int>(peek().text.size()), "unexpected '" + peek().text + "'",
                 {"end of line"});
        }
    }

    [[noreturn]] void error_here(const std::string& message, std::vector<std::string> expected) {
        if (done()) {
            fail(line_, end_col_, 0, message + " at end of line", std::move(expected));
        }
        fail(line_, peek().column, static_cast<int>(peek().text.size()), message + ", got '" + peek().text + "'",
             std::move(expected));
    }

    [[nodiscard]] int line() const { return line_; }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
    int end_col_;
};

// unsigned-term := integer ['/' integer] ['*' 'i'] | 'i'
ComplexRational parse_term(LineParser& p) {
    if (!p.done() && p.peek().ident && p.peek().text != "i" && !is_integer(p.peek().text)) {
        p.error_here("malformed matrix entry", {"number", "i"});
    }
    const Token& t = p.ident("number");
    if (t.text == "i") {
        return {Rational{0}, Rational{1}};
    }
    Rational value(boost::multiprecision::cpp_int(t.text));
    if (p.accept("/")) {
        const Token& den = p.ident("denominator");
        if (!is_integer(den.text) || den.text.find_first_not_of('0') == std::string::npos) {
            fail(p.line(), den.column, static_cast<int>(den.text.size()), "malformed denominator '" + den.text + "'",
                 {"positive integer"});
        }
        value /= Rational(boost::multiprecision::cpp_int(den.text));
    }
    if (p.accept("*")) {
        const Token& unit = p.ident("'i'");
        if (unit.text != "i") {
            fail(p.line(), unit.column, static_cast<int>(unit.text.size()), "expected 'i' after '*'", {"'i'"});
        }
        return {Rational{0}, value};
    }
    return {value, Rational{0}};
}

ComplexRational parse_entry(LineParser& p) {
    ComplexRational z;
    bool first = true;
    for (;;) {
        bool negative = false;
        if (p.accept("-")) {
            negative = true;
        } else if (!p.accept("+") && !first) {
            return z;
        }
        const ComplexRational term = parse_term(p);
        z = z + (negative ? -term : term);
        first = false;
        if (p.done() || (p.peek().text != "+" && p.peek().text != "-")) {
            return z;
        }
    }
}

CMatrix parse_matrix(LineParser& p) {
    p.expect("[");
    std::vector<std::vector<ComplexRational>> rows;
    do {
        p.expect("[");
        std::vector<ComplexRational> row;
        do {
            row.push_back(parse_entry(p));
        } while (p.accept(","));
        p.expect("]");
        rows.push_back(std::move(row));
    } while (p.accept(","));
    p.expect("]");
    const std::size_t cols = rows.front().size();
    std::vector<ComplexRational> data;
    for (auto& r : rows) {
        if (r.size() != cols) {
            p.error_here("matrix rows have different lengths", {});
        }
        data.insert(data.end(), r.begin(), r.end());
    }
    return CMatrix(rows.size(), cols, std::move(data));
}

struct Context {
    KrajewskiDiagram d;
    std::map<std::string, std::size_t> factor_by_name;
    std::map<std::string, std::size_t> vertex_by_id;
    std::map<std::string, int> edge_ids;
    bool have_kodim = false;
    bool have_families = false;
};

RepLabel parse_rep(LineParser& p, Context& ctx) {
    const Token& t = p.ident("representation");
    const auto it = ctx.factor_by_name.find(t.text);
    if (it == ctx.factor_by_name.end()) {
        fail(p.line(), t.column, static_cast<int>(t.text.size()), "unknown factor '" + t.text + "'", {"factor name"});
    }
    RepLabel label{it->second, false};
    if (!p.done() && p.peek().text == "~") {
        if (ctx.d.algebra.factors[it->second].kind != FieldKind::Complex) {
            fail(p.line(), t.column, static_cast<int>(t.text.size()) + 1,
                 "conjugate of non-complex factor '" + t.text + "'");
        }
        p.expect("~");
        label.conjugate = true;
    }
    return label;
}

std::size_t vertex_ref(const Token& t, const Context& ctx, int line) {
    const auto it = ctx.vertex_by_id.find(t.text);
    if (it == ctx.vertex_by_id.end()) {
        fail(line, t.column, static_cast<int>(t.text.size()), "undeclared vertex '" + t.text + "'", {"vertex id"});
    }
    return it->second;
}

void parse_line(LineParser& p, Context& ctx) {
    const Token& head = p.ident("directive");
    const int hcol = head.column;
    const int hlen = static_cast<int>(head.text.size());
    const std::string directive = head.text;
    if (directive == "factor") {
        const Token& name = p.ident("factor name");
        if (ctx.factor_by_name.count(name.text) != 0) {
            fail(p.line(), name.column, static_cast<int>(name.text.size()), "duplicate factor '" + name.text + "'");
        }
        const Token& field = p.ident("field (R, C or H)");
        FieldKind kind{};
        if (field.text == "R") {
            kind = FieldKind::Real;
        } else if (field.text == "C") {
            kind = FieldKind::Complex;
        } else if (field.text == "H") {
            kind = FieldKind::Quaternion;
        } else {
            fail(p.line(), field.column, static_cast<int>(field.text.size()), "unknown field '" + field.text + "'",
                 {"R", "C", "H"});
        }
        const std::string factor_name = name.text;
        const long size = p.integer("matrix size", 1, 1000);
        ctx.factor_by_name[factor_name] = ctx.d.algebra.factors.size();
        ctx.d.algebra.factors.push_back({factor_name, static_cast<int>(size), kind});
    } else if (directive == "kodim") {
        if (ctx.have_kodim) {
            fail(p.line(), hcol, hlen, "duplicate kodim declaration");
        }
        ctx.d.kodim = static_cast<int>(p.integer("KO-dimension", 0, 7));
        ctx.have_kodim = true;
    } else if (directive == "families") {
        if (ctx.have_families) {
            fail(p.line(), hcol, hlen, "duplicate families declaration");
        }
        ctx.d.families = static_cast<int>(p.integer("family count", 1, 1000));
        ctx.have_families = true;
    } else if (directive == "vertex") {
        const Token& id = p.ident("vertex id");
        if (ctx.vertex_by_id.count(id.text) != 0) {
            fail(p.line(), id.column, static_cast<int>(id.text.size()), "duplicate vertex id '" + id.text + "'");
        }
        const std::string vid = id.text;
        if (ctx.d.algebra.factors.empty()) {
            fail(p.line(), hcol, hlen, "vertex declared before any factor", {"factor"});
        }
        const RepLabel col = parse_rep(p, ctx);
        const RepLabel row = parse_rep(p, ctx);
        std::optional<int> sign;
        if (p.accept("+")) {
            sign = +1;
        } else if (p.accept("-")) {
            sign = -1;
        }
        ctx.vertex_by_id[vid] = ctx.d.vertices.size();
        ctx.d.vertices.push_back({vid, col, row, sign});
    } else if (directive == "edge") {
        const Token& id = p.ident("edge id");
        if (ctx.edge_ids.count(id.text) != 0) {
            fail(p.line(), id.column, static_cast<int>(id.text.size()), "duplicate edge id '" + id.text + "'");
        }
        const std::string eid = id.text;
        const std::size_t a = vertex_ref(p.ident("source vertex"), ctx, p.line());
        p.expect("->");
        const std::size_t b = vertex_ref(p.ident("target vertex"), ctx, p.line());
        OperatorSpec op = SymbolicOperator{eid};
        if (!p.done()) {
            const Token& kw = p.ident("'label' or 'matrix'");
            if (kw.text == "label") {
                op = SymbolicOperator{p.ident("label").text};
            } else if (kw.text == "matrix") {
                op = NumericOperator{parse_matrix(p)};
            } else {
                fail(p.line(), kw.column, static_cast<int>(kw.text.size()), "unexpected '" + kw.text + "'",
                     {"label", "matrix", "end of line"});
            }
        }
        ctx.edge_ids[eid] = 1;
        ctx.d.edges.push_back({eid, a, b, std::move(op)});
    } else if (directive == "jmap") {
        const Token& ta = p.ident("vertex id");
        const std::size_t a = vertex_ref(ta, ctx, p.line());
        p.expect("<->");
        const Token& tb = p.ident("vertex id");
        const std::size_t b = vertex_ref(tb, ctx, p.line());
        ctx.d.jmap.resize(ctx.d.vertices.size());
        for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            if (ctx.d.jmap[x] && *ctx.d.jmap[x] != y) {
                fail(p.line(), ta.column, tb.column + static_cast<int>(tb.text.size()) - ta.column,
                     "conflicting jmap for '" + ctx.d.vertices[x].id + "'");
            }
            ctx.d.jmap[x] = y;
        }
    } else {
        fail(p.line(), hcol, hlen, "unknown directive '" + directive + "'",
             {"factor", "kodim", "families", "vertex", "edge", "jmap"});
    }
    p.finish();
}

} // namespace

ParseResult parse(std::string_view text) {
    Context ctx;
    int line_no = 0;
    int last_line = 1;
    try {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            const std::string_view line = text.substr(start, end - start);
            ++line_no;
            auto tokens = tokenize(line, line_no);
            if (!tokens.empty()) {
                last_line = line_no;
                LineParser p(std::move(tokens), line_no, static_cast<int>(line.size()));
                parse_line(p, ctx);
            }
            start = end + 1;
        }
        if (ctx.d.algebra.factors.empty()) {
            fail(1, 1, 0, "missing algebra declaration", {"factor"});
        }
        if (!ctx.have_kodim) {
            fail(last_line, 1, 0, "missing kodim declaration", {"kodim"});
        }
    } catch (const Failure& f) {
        return f.error;
    }
    ctx.d.jmap.resize(ctx.d.vertices.size());
    resolve_jmap(ctx.d);
    return std::move(ctx.d);
}

namespace {

std::string rep_text(const FiniteAlgebra& a, RepLabel r) {
    return rep_name(a, r);
}

std::string matrix_text(const CMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out += (c == 0 ? "" : ", ") + to_string(m.at(r, c));
        }
        out += "]";
    }
    return out + "]";
}

} // namespace

std::string serialize(const KrajewskiDiagram& d) {
    std::ostringstream out;
    for (const auto& f : d.algebra.factors) {
        out << "factor " << f.name << ' ' << field_letter(f.kind) << ' ' << f.size << '\n';
    }
    out << "kodim " << d.kodim << '\n';
    out << "families " << d.families << '\n';

    std::vector<std::size_t> vorder(d.vertices.size());
    for (std::size_t k = 0; k < vorder.size(); ++k) {
        vorder[k] = k;
    }
    std::sort(vorder.begin(), vorder.end(), [&](auto a, auto b) { return d.vertices[a].id < d.vertices[b].id; });
    for (const std::size_t k : vorder) {
        const auto& v = d.vertices[k];
        out << "vertex " << v.id << ' ' << rep_text(d.algebra, v.col) << ' ' << rep_text(d.algebra, v.row);
        if (v.sign) {
            out << (*v.sign > 0 ? " +" : " -");
        }
        out << '\n';
    }

    std::vector<const EdgePair*> edges;
    for (const auto& e : d.edges) {
        edges.push_back(&e);
    }
    std::sort(edges.begin(), edges.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (const auto* e : edges) {
        out << "edge " << e->id << ' ' << d.vertices[e->source].id << " -> " << d.vertices[e->target].id;
        if (const auto* s = std::get_if<SymbolicOperator>(&e->op)) {
            out << " label " << s->label;
        } else {
            out << " matrix " << matrix_text(std::get<NumericOperator>(e->op).matrix);
        }
        out << '\n';
    }

    for (const std::size_t k : vorder) {
        if (k >= d.jmap.size() || !d.jmap[k]) {
            continue;
        }
        const auto& a = d.vertices[k].id;
        const auto& b = d.vertices[*d.jmap[k]].id;
        if (a <= b) {
            out << "jmap " << a << " <-> " << b << '\n';
        }
    }
    return out.str();
}

std::string format_parse_error(const ParseError& err, std::string_view text, const std::string& name) {
    std::ostringstream out;
    out << name << ':' << err.span.line << ':' << err.span.column << ": error: " << err.message;
    if (!err.expected.empty()) {
        out << " (expected ";
        for (std::size_t k = 0; k < err.expected.size(); ++k) {
            out << (k == 0 ? "" : ", ") << err.expected[k];
        }
        out << ')';
    }
    out << '\n';
    std::size_t start = 0;
    for (int l = 1; l < err.span.line && start <= text.size(); ++l) {
        const auto nl = text.find('\n', start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    }
    if (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        out << "  " << text.substr(start, end - start) << '\n';
        out << "  " << std::string(static_cast<std::size_t>(err.span.column - 1), ' ')
            << std::string(static_cast<std::size_t>(std::max(err.span.length, 1)), '^') << '\n';
    }
    return out.str();
}

} // namespace kra
