#include "kgwb/query.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "kgwb/error.hpp"
#include "kgwb/utf8.hpp"

namespace kgwb::query {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
    Ident,
    Quoted,  // `label`
    String,
    Integer,
    Decimal,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Comma,
    Dot,
    Minus,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of query";
        case Tok::String: return "string literal";
        default: return "'" + t.text + "'";
    }
}

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    auto single = [&](Tok kind) {
        tokens.push_back({kind, std::string(1, text[i]), i});
        ++i;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t start = i;
            while (i < text.size() && is_ident_char(text[i])) ++i;
            tokens.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (is_digit(c)) {
            std::size_t start = i;
            bool decimal = false;
            while (i < text.size() && is_digit(text[i])) ++i;
            if (i + 1 < text.size() && text[i] == '.' && is_digit(text[i + 1])) {
                decimal = true;
                ++i;
                while (i < text.size() && is_digit(text[i])) ++i;
            }
            if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
                if (j < text.size() && is_digit(text[j])) {
                    decimal = true;
                    i = j;
                    while (i < text.size() && is_digit(text[i])) ++i;
                }
            }
            tokens.push_back({decimal ? Tok::Decimal : Tok::Integer,
                              std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (c == '"' || c == '\'') {
            const char quote = c;
            std::size_t start = i++;
            std::string value;
            bool closed = false;
            while (i < text.size()) {
                char d = text[i++];
                if (d == quote) {
                    closed = true;
                    break;
                }
                if (d == '\\') {
                    if (i >= text.size()) break;
                    char e = text[i++];
                    switch (e) {
                        case 'n': value += '\n'; break;
                        case 't': value += '\t'; break;
                        case 'r': value += '\r'; break;
                        case '\\':
                        case '"':
                        case '\'': value += e; break;
                        default:
                            throw SyntaxError(i - 2, "escape sequence",
                                              "unknown escape '\\" + std::string(1, e) + "'");
                    }
                    continue;
                }
                value += d;
            }
            if (!closed) throw SyntaxError(start, std::string(1, quote), "unterminated string literal");
            tokens.push_back({Tok::String, std::move(value), start});
            continue;
        }
        if (c == '`') {
            std::size_t start = i++;
            std::string value;
            bool closed = false;
            while (i < text.size()) {
                if (text[i] == '`') {
                    if (i + 1 < text.size() && text[i + 1] == '`') {
                        value += '`';
                        i += 2;
                        continue;
                    }
                    ++i;
                    closed = true;
                    break;
                }
                value += text[i++];
            }
            if (!closed) throw SyntaxError(start, "`", "unterminated quoted name");
            if (value.empty()) throw SyntaxError(start, "name", "empty quoted name");
            tokens.push_back({Tok::Quoted, std::move(value), start});
            continue;
        }
        auto next_is = [&](char n) { return i + 1 < text.size() && text[i + 1] == n; };
        switch (c) {
            case '(': single(Tok::LParen); continue;
            case ')': single(Tok::RParen); continue;
            case '[': single(Tok::LBracket); continue;
            case ']': single(Tok::RBracket); continue;
            case ':': single(Tok::Colon); continue;
            case ',': single(Tok::Comma); continue;
            case '.': single(Tok::Dot); continue;
            case '-': single(Tok::Minus); continue;
            case '=': single(Tok::Eq); continue;
            case '<':
                if (next_is('=')) {
                    tokens.push_back({Tok::Le, "<=", i});
                    i += 2;
                } else {
                    single(Tok::Lt);
                }
                continue;
            case '>':
                if (next_is('=')) {
                    tokens.push_back({Tok::Ge, ">=", i});
                    i += 2;
                } else {
                    single(Tok::Gt);
                }
                continue;
            case '!':
                if (next_is('=')) {
                    tokens.push_back({Tok::Ne, "!=", i});
                    i += 2;
                    continue;
                }
                break;
            default: break;
        }
        throw SyntaxError(i, "token", "unexpected character '" + std::string(1, c) + "'");
    }
    tokens.push_back({Tok::End, "", text.size()});
    return tokens;
}

// ---------------------------------------------------------------------------
// Parser

const std::set<std::string> kKeywords = {"match", "where", "and", "return", "limit",
                                         "contains", "true", "false"};

bool is_keyword(std::string_view word) { return kKeywords.contains(utf8::fold_case(word)); }

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    QueryAst parse_query() {
        expect_keyword("MATCH");
        QueryAst ast;
        ast.pattern = parse_pattern();
        if (accept_keyword("WHERE")) {
            ast.filters.push_back(parse_cond());
            while (accept_keyword("AND")) ast.filters.push_back(parse_cond());
        }
        expect_keyword("RETURN");
        ast.return_vars.push_back(parse_var());
        while (peek().kind == Tok::Comma) {
            advance();
            ast.return_vars.push_back(parse_var());
        }
        if (accept_keyword("LIMIT")) {
            const Token& t = peek();
            if (t.kind != Tok::Integer) fail(t, "positive integer");
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
            if (ec != std::errc{} || value <= 0) {
                throw SyntaxError(t.pos, "positive integer", "LIMIT must be a positive integer");
            }
            advance();
            ast.limit = value;
        }
        if (peek().kind != Tok::End) fail(peek(), "end of query");
        return ast;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const Token& t, const std::string& expected) const {
        throw SyntaxError(t.pos, expected, "expected " + expected + " but found " + describe(t));
    }

    bool peek_keyword(std::string_view word) const {
        return peek().kind == Tok::Ident && utf8::fold_case(peek().text) == utf8::fold_case(word);
    }

    bool accept_keyword(std::string_view word) {
        if (!peek_keyword(word)) return false;
        advance();
        return true;
    }

    void expect_keyword(std::string_view word) {
        if (!accept_keyword(word)) fail(peek(), std::string(word));
    }

    void expect(Tok kind, const std::string& expected) {
        if (peek().kind != kind) fail(peek(), expected);
        advance();
    }

    std::string parse_var() {
        const Token& t = peek();
        if (t.kind != Tok::Ident || is_keyword(t.text)) fail(t, "variable");
        advance();
        return t.text;
    }

    std::string parse_name(const std::string& what) {
        const Token& t = peek();
        if (t.kind != Tok::Ident && t.kind != Tok::Quoted) fail(t, what);
        advance();
        return t.text;
    }

    NodePattern parse_nodepat() {
        const Token& open = peek();
        expect(Tok::LParen, "'('");
        NodePattern node;
        node.var = parse_var();
        if (peek().kind == Tok::Colon) {
            advance();
            node.type_label = parse_name("type label");
        }
        if (peek().kind != Tok::RParen) {
            throw SyntaxError(open.pos, "')'",
                              "unclosed '(' : expected ')' but found " + describe(peek()));
        }
        advance();
        return node;
    }

    // Parses "[" [":" rel] "]" after the leading dash(es).
    std::optional<std::string> parse_rel_body() {
        const Token& open = peek();
        expect(Tok::LBracket, "'['");
        std::optional<std::string> rel;
        if (peek().kind == Tok::Colon) {
            advance();
            rel = parse_name("relation label");
        }
        if (peek().kind != Tok::RBracket) {
            throw SyntaxError(open.pos, "']'",
                              "unclosed '[' : expected ']' but found " + describe(peek()));
        }
        advance();
        return rel;
    }

    std::variant<NodePattern, PathPattern> parse_pattern() {
        NodePattern src = parse_nodepat();
        PathPattern path;
        if (peek().kind == Tok::Lt) {
            advance();
            expect(Tok::Minus, "'-'");
            path.rel_label = parse_rel_body();
            expect(Tok::Minus, "'-'");
            path.direction = Direction::In;
        } else if (peek().kind == Tok::Minus) {
            advance();
            path.rel_label = parse_rel_body();
            expect(Tok::Minus, "'-'");
            if (peek().kind == Tok::Gt) {
                advance();
                path.direction = Direction::Out;
            } else {
                path.direction = Direction::Any;
            }
        } else {
            return src;
        }
        path.src = std::move(src);
        path.dst = parse_nodepat();
        return path;
    }

    Scalar parse_literal() {
        const Token& t = peek();
        bool negative = false;
        if (t.kind == Tok::Minus) {
            negative = true;
            advance();
        }
        const Token& v = peek();
        switch (v.kind) {
            case Tok::String:
                if (negative) fail(v, "number");
                advance();
                return v.text;
            case Tok::Integer: {
                std::string digits = (negative ? "-" : "") + v.text;
                std::int64_t value = 0;
                auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
                if (ec != std::errc{}) throw SyntaxError(v.pos, "integer", "integer literal out of range");
                advance();
                return value;
            }
            case Tok::Decimal: {
                std::string digits = (negative ? "-" : "") + v.text;
                double value = 0;
                auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
                if (ec != std::errc{} || !std::isfinite(value)) {
                    throw SyntaxError(v.pos, "number", "decimal literal out of range");
                }
                advance();
                return value;
            }
            case Tok::Ident:
                if (!negative) {
                    auto word = utf8::fold_case(v.text);
                    if (word == "true" || word == "false") {
                        advance();
                        return word == "true";
                    }
                }
                [[fallthrough]];
            default: fail(v, "literal");
        }
    }

    Filter parse_cond() {
        Filter filter;
        filter.var = parse_var();
        expect(Tok::Dot, "'.'");
        filter.attr = parse_name("attribute name");
        const Token& op = peek();
        switch (op.kind) {
            case Tok::Eq: filter.op = CompareOp::Eq; break;
            case Tok::Ne: filter.op = CompareOp::Ne; break;
            case Tok::Lt: filter.op = CompareOp::Lt; break;
            case Tok::Le: filter.op = CompareOp::Le; break;
            case Tok::Gt: filter.op = CompareOp::Gt; break;
            case Tok::Ge: filter.op = CompareOp::Ge; break;
            case Tok::Ident:
                if (utf8::fold_case(op.text) == "contains") {
                    filter.op = CompareOp::Contains;
                    break;
                }
                [[fallthrough]];
            default: fail(op, "comparison operator");
        }
        advance();
        filter.literal = parse_literal();
        return filter;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer helpers

bool is_plain_name(std::string_view name) {
    if (name.empty() || !is_ident_start(name.front())) return false;
    return std::all_of(name.begin(), name.end(), is_ident_char) && !is_keyword(name);
}

std::string quote_name(std::string_view name) {
    if (is_plain_name(name)) return std::string(name);
    std::string out = "`";
    for (char c : name) {
        if (c == '`') out += "``";
        else out += c;
    }
    return out + "`";
}

std::string print_literal(const Scalar& value) {
    struct Visitor {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const {
            char buf[64];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
            std::string s(buf, ptr);
            if (s.find_first_of(".e") == std::string::npos) s += ".0";
            return s;
        }
        std::string operator()(const std::string& s) const {
            std::string out = "\"";
            for (char c : s) {
                switch (c) {
                    case '"': out += "\\\""; break;
                    case '\\': out += "\\\\"; break;
                    case '\n': out += "\\n"; break;
                    case '\t': out += "\\t"; break;
                    case '\r': out += "\\r"; break;
                    default: out += c;
                }
            }
            return out + "\"";
        }
    };
    return std::visit(Visitor{}, value);
}

std::string print_nodepat(const NodePattern& node) {
    std::string out = "(" + node.var;
    if (node.type_label) out += ":" + quote_name(*node.type_label);
    return out + ")";
}

std::vector<std::string> pattern_vars(const QueryAst& ast) {
    if (const auto* node = std::get_if<NodePattern>(&ast.pattern)) return {node->var};
    const auto& path = std::get<PathPattern>(ast.pattern);
    if (path.src.var == path.dst.var) return {path.src.var};
    return {path.src.var, path.dst.var};
}

// ---------------------------------------------------------------------------
// Execution

struct Binding {
    std::size_t src;
    std::size_t dst;  // == src for node patterns
    std::size_t edge;  // SIZE_MAX for node patterns
};

bool passes(const Node& node, const std::vector<const Filter*>& filters) {
    for (const auto* f : filters) {
        auto value = node_attribute(node, f->attr);
        if (!value || !compare(*value, f->op, f->literal)) return false;
    }
    return true;
}

bool matches_type(const Node& node, const std::optional<std::string>& type_label) {
    return !type_label || node.type_label == *type_label;
}

bool contains_folded(std::string_view haystack, std::string_view needle) {
    return utf8::fold_case(haystack).find(utf8::fold_case(needle)) != std::string::npos;
}

template <typename T>
bool ordered(const T& a, CompareOp op, const T& b) {
    switch (op) {
        case CompareOp::Eq: return a == b;
        case CompareOp::Ne: return a != b;
        case CompareOp::Lt: return a < b;
        case CompareOp::Le: return a <= b;
        case CompareOp::Gt: return a > b;
        case CompareOp::Ge: return a >= b;
        case CompareOp::Contains: return false;
    }
    return false;
}

}  // namespace

std::string_view to_string(CompareOp op) noexcept {
    switch (op) {
        case CompareOp::Eq: return "=";
        case CompareOp::Ne: return "!=";
        case CompareOp::Lt: return "<";
        case CompareOp::Le: return "<=";
        case CompareOp::Gt: return ">";
        case CompareOp::Ge: return ">=";
        case CompareOp::Contains: return "CONTAINS";
    }
    return "?";
}

std::string_view to_string(Direction direction) noexcept {
    switch (direction) {
        case Direction::Out: return "out";
        case Direction::In: return "in";
        case Direction::Any: return "any";
    }
    return "?";
}

void validate(const QueryAst& ast) {
    const auto vars = pattern_vars(ast);
    auto bound = [&](const std::string& v) { return std::find(vars.begin(), vars.end(), v) != vars.end(); };
    for (const auto& f : ast.filters) {
        if (!bound(f.var)) throw Error(ErrorCode::UnboundVariable, "variable '" + f.var + "' is not bound by the pattern");
    }
    if (ast.return_vars.empty()) throw Error(ErrorCode::InvalidArgument, "RETURN needs at least one variable");
    for (const auto& v : ast.return_vars) {
        if (!bound(v)) throw Error(ErrorCode::UnboundVariable, "variable '" + v + "' is not bound by the pattern");
    }
    if (ast.limit && *ast.limit <= 0) throw Error(ErrorCode::InvalidArgument, "LIMIT must be positive");
}

QueryAst parse(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        throw SyntaxError(0, "MATCH", "query text is empty");
    }
    QueryAst ast = Parser(text).parse_query();
    validate(ast);
    return ast;
}

std::string print(const QueryAst& ast) {
    std::string out = "MATCH ";
    if (const auto* node = std::get_if<NodePattern>(&ast.pattern)) {
        out += print_nodepat(*node);
    } else {
        const auto& path = std::get<PathPattern>(ast.pattern);
        std::string rel = "[";
        if (path.rel_label) rel += ":" + quote_name(*path.rel_label);
        rel += "]";
        out += print_nodepat(path.src);
        switch (path.direction) {
            case Direction::Out: out += "-" + rel + "->"; break;
            case Direction::In: out += "<-" + rel + "-"; break;
            case Direction::Any: out += "-" + rel + "-"; break;
        }
        out += print_nodepat(path.dst);
    }
    for (std::size_t i = 0; i < ast.filters.size(); ++i) {
        const auto& f = ast.filters[i];
        out += i == 0 ? " WHERE " : " AND ";
        out += f.var + "." + quote_name(f.attr) + " " + std::string(to_string(f.op)) + " " +
               print_literal(f.literal);
    }
    out += " RETURN ";
    for (std::size_t i = 0; i < ast.return_vars.size(); ++i) {
        if (i) out += ", ";
        out += ast.return_vars[i];
    }
    if (ast.limit) out += " LIMIT " + std::to_string(*ast.limit);
    return out;
}

std::optional<Scalar> node_attribute(const Node& node, std::string_view attr) {
    if (attr == "id") return node.id;
    if (attr == "name") return node.name;
    if (attr == "type") return node.type_label;
    auto it = node.attrs.find(std::string(attr));
    if (it == node.attrs.end()) return std::nullopt;
    return it->second;
}

bool compare(const Scalar& value, CompareOp op, const Scalar& literal) {
    if (const auto* s = std::get_if<std::string>(&value)) {
        const auto* l = std::get_if<std::string>(&literal);
        if (!l) return false;
        if (op == CompareOp::Contains) return contains_folded(*s, *l);
        return ordered(*s, op, *l);
    }
    if (op == CompareOp::Contains) return false;
    if (const auto* b = std::get_if<bool>(&value)) {
        const auto* l = std::get_if<bool>(&literal);
        if (!l || (op != CompareOp::Eq && op != CompareOp::Ne)) return false;
        return ordered(*b, op, *l);
    }
    if (std::holds_alternative<bool>(literal) || std::holds_alternative<std::string>(literal)) return false;
    const auto* vi = std::get_if<std::int64_t>(&value);
    const auto* li = std::get_if<std::int64_t>(&literal);
    if (vi && li) return ordered(*vi, op, *li);
    auto as_double = [](const Scalar& s) {
        if (const auto* i = std::get_if<std::int64_t>(&s)) return static_cast<double>(*i);
        return std::get<double>(s);
    };
    return ordered(as_double(value), op, as_double(literal));
}

ResultTable execute(const QueryAst& ast, const PropertyGraph& graph) {
    validate(ast);
    const auto nodes = graph.nodes();
    const auto edges = graph.edges();
    constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

    auto filters_for = [&](const std::string& var) {
        std::vector<const Filter*> out;
        for (const auto& f : ast.filters) {
            if (f.var == var) out.push_back(&f);
        }
        return out;
    };
    auto candidates = [&](const NodePattern& pat) {
        std::vector<std::size_t> out;
        const auto filters = filters_for(pat.var);
        auto consider = [&](std::size_t pos) {
            if (matches_type(nodes[pos], pat.type_label) && passes(nodes[pos], filters)) out.push_back(pos);
        };
        if (pat.type_label) {
            for (auto pos : graph.nodes_of_type(*pat.type_label)) consider(pos);
        } else {
            for (std::size_t pos = 0; pos < nodes.size(); ++pos) consider(pos);
        }
        return out;
    };

    std::vector<Binding> bindings;
    std::vector<std::string> vars;
    if (const auto* node = std::get_if<NodePattern>(&ast.pattern)) {
        vars = {node->var};
        for (auto pos : candidates(*node)) bindings.push_back({pos, pos, kNoEdge});
    } else {
        const auto& path = std::get<PathPattern>(ast.pattern);
        const bool same_var = path.src.var == path.dst.var;
        vars = {path.src.var, path.dst.var};
        const auto dst_filters = filters_for(path.dst.var);
        auto accept_other = [&](std::size_t self, std::size_t other) {
            if (same_var && self != other) return false;
            return matches_type(nodes[other], path.dst.type_label) && passes(nodes[other], dst_filters);
        };
        auto rel_ok = [&](std::size_t e) { return !path.rel_label || edges[e].rel_label == *path.rel_label; };

        for (auto s : candidates(path.src)) {
            if (path.direction != Direction::In) {
                for (auto e : graph.out_edges(s)) {
                    auto other = graph.dst_index(e);
                    if (rel_ok(e) && accept_other(s, other)) bindings.push_back({s, other, e});
                }
            }
            if (path.direction != Direction::Out) {
                for (auto e : graph.in_edges(s)) {
                    auto other = graph.src_index(e);
                    // An undirected self-loop was already matched via out_edges.
                    if (path.direction == Direction::Any && other == s) continue;
                    if (rel_ok(e) && accept_other(s, other)) bindings.push_back({s, other, e});
                }
            }
        }
    }

    auto value_of = [&](const Binding& b, const std::string& var) -> const NodeId& {
        return var == vars.front() ? nodes[b.src].id : nodes[b.dst].id;
    };

    struct Row {
        std::vector<NodeId> projected;
        std::vector<NodeId> full;
        std::string edge;
    };
    std::vector<Row> rows;
    rows.reserve(bindings.size());
    for (const auto& b : bindings) {
        Row row;
        for (const auto& v : ast.return_vars) row.projected.push_back(value_of(b, v));
        row.full = {nodes[b.src].id, nodes[b.dst].id};
        if (b.edge != kNoEdge) row.edge = edges[b.edge].id;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.projected, a.full, a.edge) < std::tie(b.projected, b.full, b.edge);
    });

    ResultTable table;
    table.columns = ast.return_vars;
    std::size_t keep = rows.size();
    if (ast.limit && rows.size() > static_cast<std::size_t>(*ast.limit)) {
        keep = static_cast<std::size_t>(*ast.limit);
        table.truncated = true;
    }
    table.rows.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) table.rows.push_back(std::move(rows[i].projected));
    return table;
}

Json to_json(const ResultTable& table) {
    return Json{{"columns", table.columns}, {"rows", table.rows}, {"truncated", table.truncated}};
}

ResultTable result_table_from_json(const Json& json) {
    ResultTable table;
    table.columns = json.at("columns").get<std::vector<std::string>>();
    table.rows = json.at("rows").get<std::vector<std::vector<NodeId>>>();
    table.truncated = json.at("truncated").get<bool>();
    return table;
}

std::string to_text(const ResultTable& table) {
    std::vector<std::size_t> widths;
    for (const auto& c : table.columns) widths.push_back(utf8::code_point_count(c));
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
            widths[i] = std::max(widths[i], utf8::code_point_count(row[i]));
        }
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << "  ";
            out << cells[i];
            if (i + 1 < cells.size()) {
                out << std::string(widths[i] - utf8::code_point_count(cells[i]), ' ');
            }
        }
        out << '\n';
    };
    emit(table.columns);
    std::vector<std::string> rule;
    for (auto w : widths) rule.emplace_back(w, '-');
    emit(rule);
    for (const auto& row : table.rows) emit(row);
    out << "(" << table.rows.size() << (table.rows.size() == 1 ? " row" : " rows")
        << (table.truncated ? ", truncated" : "") << ")\n";
    return out.str();
}

}  // namespace kgwb::query
