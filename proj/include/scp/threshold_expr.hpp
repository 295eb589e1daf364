#ifndef SCP_THRESHOLD_EXPR_HPP
#define SCP_THRESHOLD_EXPR_HPP

#include <functional>
#include <string>

namespace scp {

/// Compiles a small arithmetic expression over the variable n into a
/// size threshold function, for the --threshold flag. Supports integer
/// and decimal literals, n, + - * /, parentheses, and the functions
/// log2, sqrt, floor, ceil, min, max. The result is floored and clamped
/// to [0, n]. Example: "n/max(1,floor(log2(n)))".
///
/// Throws std::invalid_argument on a syntax error.
std::function<std::size_t(std::size_t)>
compile_threshold_expr(const std::string& text);

} // namespace scp

#endif // SCP_THRESHOLD_EXPR_HPP
