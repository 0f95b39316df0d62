#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kgwb/graph.hpp"
#include "kgwb/value.hpp"

namespace kgwb::query {

enum class Direction { Out, In, Any };

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge, Contains };

struct NodePattern {
    std::string var;
    std::optional<std::string> type_label;

    bool operator==(const NodePattern&) const = default;
};

// One hop. For Direction::In the edge runs dst -> src as written:
// (src)<-[:rel]-(dst).
struct PathPattern {
    NodePattern src;
    std::optional<std::string> rel_label;
    Direction direction = Direction::Out;
    NodePattern dst;

    bool operator==(const PathPattern&) const = default;
};

struct Filter {
    std::string var;
    std::string attr;
    CompareOp op = CompareOp::Eq;
    Scalar literal;

    bool operator==(const Filter&) const = default;
};

struct QueryAst {
    std::variant<NodePattern, PathPattern> pattern;
    std::vector<Filter> filters;
    std::vector<std::string> return_vars;
    std::optional<std::int64_t> limit;

    bool operator==(const QueryAst&) const = default;
};

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<NodeId>> rows;
    // More matching rows existed than LIMIT allowed.
    bool truncated = false;

    bool operator==(const ResultTable&) const = default;
};

// Grammar (keywords are case-insensitive):
//   query   := MATCH pattern [WHERE cond {AND cond}] RETURN var {, var} [LIMIT int]
//   pattern := nodepat [ -[ [:rel] ]-> nodepat | <-[ [:rel] ]- nodepat | -[ [:rel] ]- nodepat ]
//   nodepat := ( var [:type] )
//   cond    := var . attr op literal      op: = != < <= > >= CONTAINS
//   literal := "string" | 'string' | integer | decimal | true | false
// Labels and attribute names may be `backtick quoted`.
//
// Throws SyntaxError (with byte position) or Error(UnboundVariable).
QueryAst parse(std::string_view text);

// Canonical text form; parse(print(ast)) == ast.
std::string print(const QueryAst& ast);

// Throws Error(UnboundVariable) or SyntaxError-equivalent invariant
// violations (limit <= 0) as Error(InvalidArgument).
void validate(const QueryAst& ast);

// Rows are ordered lexicographically by the returned node ids; ties (same
// projection) fall back to the full binding and then the matched edge id.
ResultTable execute(const QueryAst& ast, const PropertyGraph& graph);

// Attribute lookup used by filters: "id", "name" and "type" resolve to the
// node fields, anything else to attrs.
std::optional<Scalar> node_attribute(const Node& node, std::string_view attr);

// Mixed kinds never match; CONTAINS is an ASCII case-insensitive substring
// test on strings; numbers compare numerically across int/double.
bool compare(const Scalar& value, CompareOp op, const Scalar& literal);

std::string_view to_string(CompareOp op) noexcept;
std::string_view to_string(Direction direction) noexcept;

Json to_json(const ResultTable& table);
ResultTable result_table_from_json(const Json& json);

// Column-aligned plain text rendering for terminals.
std::string to_text(const ResultTable& table);

}  // namespace kgwb::query
