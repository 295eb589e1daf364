#include "scp/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace scp {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next non-blank line, or nullopt at EOF.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        return line;
    }
    return std::nullopt;
  }
};

std::vector<long long> parse_integers(const std::string& line, int line_no) {
  std::istringstream ss(line);
  std::vector<long long> values;
  long long x;
  while (ss >> x)
    values.push_back(x);
  if (!ss.eof()) {
    std::string token;
    ss.clear();
    ss >> token;
    throw ParseError(line_no, "expected an integer, got '" + token + "'");
  }
  return values;
}

Permutation parse_row(const std::string& line, int line_no, std::size_t n) {
  const auto values = parse_integers(line, line_no);
  if (values.size() != n)
    throw ParseError(line_no, "expected " + std::to_string(n) +
                                  " images, got " +
                                  std::to_string(values.size()));
  std::vector<Vertex> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] < 1 || values[i] > static_cast<long long>(n))
      throw ParseError(line_no, "image " + std::to_string(values[i]) +
                                    " outside 1.." + std::to_string(n));
    images[i] = static_cast<Vertex>(values[i] - 1);
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument&) {
    throw ParseError(line_no, "row is not a permutation of 1.." +
                                  std::to_string(n));
  }
}

PermTuple parse_tuple(LineReader& reader, std::size_t n, std::size_t d,
                      const char* side) {
  std::vector<Permutation> perms;
  perms.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    auto line = reader.next();
    if (!line)
      throw ParseError(reader.line_no + 1,
                       std::string("missing row ") + std::to_string(j + 1) +
                           " of tuple " + side);
    perms.push_back(parse_row(*line, reader.line_no, n));
  }
  return PermTuple(std::move(perms));
}

} // namespace

Instance parse_instance(std::istream& in) {
  LineReader reader{in};

  auto header = reader.next();
  if (!header)
    throw ParseError(1, "empty file, expected header 'n d'");
  const auto values = parse_integers(*header, reader.line_no);
  if (values.size() != 2)
    throw ParseError(reader.line_no, "header must be exactly 'n d'");
  if (values[0] < 1 || values[1] < 1)
    throw ParseError(reader.line_no, "n and d must be at least 1");
  const auto n = static_cast<std::size_t>(values[0]);
  const auto d = static_cast<std::size_t>(values[1]);

  PermTuple a = parse_tuple(reader, n, d, "a");

  std::optional<PermTuple> b;
  // Peek for a second tuple; EOF means a label-only file.
  if (auto line = reader.next()) {
    std::vector<Permutation> perms;
    perms.reserve(d);
    perms.push_back(parse_row(*line, reader.line_no, n));
    for (std::size_t j = 1; j < d; ++j) {
      auto row = reader.next();
      if (!row)
        throw ParseError(reader.line_no + 1,
                         "tuple b has " + std::to_string(j) + " of " +
                             std::to_string(d) + " rows");
      perms.push_back(parse_row(*row, reader.line_no, n));
    }
    b = PermTuple(std::move(perms));
    if (auto extra = reader.next())
      throw ParseError(reader.line_no,
                       "unexpected content after 2d tuple rows");
  }
  return Instance{std::move(a), std::move(b)};
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  return parse_instance(in);
}

namespace {

void render_tuple(std::string& out, const PermTuple& t) {
  for (const auto& g : t.perms()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(g[static_cast<Vertex>(i)] + 1);
    }
    out += '\n';
  }
}

} // namespace

std::string render_instance(const Instance& inst) {
  std::string out = std::to_string(inst.a.size()) + ' ' +
                    std::to_string(inst.a.degree()) + '\n';
  render_tuple(out, inst.a);
  if (inst.b)
    render_tuple(out, *inst.b);
  return out;
}

std::string render_solve_report(const ScpResult& result) {
  if (!result.conjugate)
    return "NO\n";
  std::string out = "YES\n";
  const Permutation& tau = *result.witness;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(tau[static_cast<Vertex>(i)] + 1);
  }
  out += '\n';
  return out;
}

} // namespace scp
