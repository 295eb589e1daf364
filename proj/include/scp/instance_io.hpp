#ifndef SCP_INSTANCE_IO_HPP
#define SCP_INSTANCE_IO_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "scp/perm.hpp"
#include "scp/solver.hpp"

namespace scp {

/// A parsed instance file: tuple a, and tuple b when the file carries both
/// sides (solve instances). Label-only files carry just a.
struct Instance {
  PermTuple a;
  std::optional<PermTuple> b;
};

/// Parse failure with the 1-based line number it was detected on.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

/// Text format: a header line "n d", then d rows of n integers for a
/// (row j lists the 1-based images of 1..n under a_j), then either EOF or
/// d more rows for b. Blank lines are ignored; anything else throws
/// ParseError.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

/// Canonical rendering: single spaces, one row per line, trailing newline.
/// parse(render(x)) == x, byte-exact round trip.
std::string render_instance(const Instance& inst);

/// The solve report: "YES\n<tau as 1-based images>\n" or "NO\n".
std::string render_solve_report(const ScpResult& result);

} // namespace scp

#endif // SCP_INSTANCE_IO_HPP
