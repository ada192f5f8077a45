#include "conelab/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace conelab {

namespace {

const std::regex& rational_pattern() {
  static const std::regex re(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  return re;
}

bool skip_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Rational parse_rational(const std::string& token) {
  if (!std::regex_match(token, rational_pattern())) {
    throw InputError("not a rational number: '" + token + "'");
  }
  std::string t = token;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  auto slash = t.find('/');
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(t));
  } else {
    Integer num(t.substr(0, slash));
    Integer den(t.substr(slash + 1));
    if (sgn(den) == 0) throw InputError("zero denominator in '" + token + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string format_rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RatMatrix parse_matrix(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError(source + ":" + std::to_string(line_no) + ": " + msg);
  };

  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    header = split(line);
    break;
  }
  if (header.empty()) fail("missing 'rows cols' header");
  if (header.size() != 2) fail("header must be 'rows cols'");
  static const std::regex count_re(R"(^[0-9]+$)");
  if (!std::regex_match(header[0], count_re) || !std::regex_match(header[1], count_re)) {
    fail("header must hold two non-negative integers");
  }
  const std::size_t rows = std::stoul(header[0]);
  const std::size_t cols = std::stoul(header[1]);

  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  std::size_t seen_rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto toks = split(line);
    if (seen_rows == rows) fail("more rows than declared");
    if (toks.size() != cols) {
      fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(toks.size()));
    }
    for (const auto& t : toks) {
      try {
        entries.push_back(parse_rational(t));
      } catch (const InputError& e) {
        fail(e.what());
      }
    }
    ++seen_rows;
  }
  if (seen_rows != rows) {
    fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(seen_rows));
  }
  return RatMatrix(rows, cols, std::move(entries));
}

RatMatrix parse_matrix(const std::string& text) {
  std::istringstream ss(text);
  return parse_matrix(ss);
}

RatMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_matrix(in, path);
}

IntMatrix require_integer(const RatMatrix& m, const std::string& what) {
  auto z = to_integer(m);
  if (!z) throw InputError(what + ": expected an integer matrix");
  return *z;
}

IntMatrix read_int_matrix(const std::string& path) {
  return require_integer(read_matrix(path), path);
}

void write_matrix(std::ostream& out, const RatMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_rational(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const IntMatrix& m) { write_matrix(out, to_rational(m)); }

std::string matrix_to_string(const RatMatrix& m) {
  std::ostringstream ss;
  write_matrix(ss, m);
  return ss.str();
}

std::string matrix_to_string(const IntMatrix& m) { return matrix_to_string(to_rational(m)); }

Json to_json(const Rational& q) { return format_rational(q); }
Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const RatVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const RatMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string format_vector(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_rational(v[i]);
  }
  return s + ")";
}

}  // namespace conelab
