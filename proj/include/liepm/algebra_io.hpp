#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liepm/certificate.hpp"
#include "liepm/lie_algebra.hpp"
#include "liepm/span.hpp"
#include "liepm/uea.hpp"

namespace liepm {

struct ParsedAlgebra {
    LieAlgebra algebra;
    std::optional<Grading> grading;
    /// check_axioms on the parsed table; failing witnesses name the lines of
    /// the brackets involved.
    Certificate axioms;
};

/// Text format:
///   algebra <name>
///   basis <sym> <sym> ...
///   bracket [<sym>,<sym>] = <linear combination>      (zero or more)
///   grade <sym> = (c1,...,cn)                          (optional, all or none)
/// Blank lines and lines starting with '#' are ignored. Throws ParseError
/// with line and column on malformed input, unknown symbols, non-rational
/// coefficients and contradictory brackets.
ParsedAlgebra parse_algebra(std::string_view text);
ParsedAlgebra load_algebra(const std::string& path);

/// Inverse of parse_algebra.
std::string format_algebra(const LieAlgebra& L, const std::optional<Grading>& grading = std::nullopt);

/// Element of the free algebra on the basis symbols. Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := atom ['^' integer]
///   atom   := rational | symbol | '(' expr ')' | '[' expr ',' expr ']'
/// A coefficient may be written directly before a symbol, as in 2e or 1/3h.
/// Errors report the column (line 1).
NCPoly parse_expression(const LieAlgebra& L, std::string_view text);
/// A degree-one expression as a coordinate vector.
Vector parse_vector(const LieAlgebra& L, std::string_view text);

/// Splits on commas outside parentheses and brackets.
std::vector<std::string> split_top_level(std::string_view text);

/// One subspace of L: "gplus", "gminus", "g0" (need a grading), "0", "L",
/// "span(v1, v2, ...)" or a single vector expression (its line).
Subspace parse_subspace(const LieAlgebra& L, const std::optional<Grading>& grading, std::string_view text);
FactorizationScheme parse_scheme(const LieAlgebra& L, const std::optional<Grading>& grading, std::string_view text);

/// sigma given by the images of the basis vectors, comma separated, in basis
/// order; the result has those images as columns.
Matrix parse_linear_map(const LieAlgebra& L, std::string_view text);

}  // namespace liepm
