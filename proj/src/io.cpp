#include "codealg/io.hpp"

#include <fstream>
#include <sstream>

namespace codealg {

namespace {

[[noreturn]] void fail(const std::string& name, int line, int col, const std::string& msg) {
  throw Error(errc::parse_error,
              name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::string strip(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

LinearCode parse_code_file(std::istream& in, const std::string& name) {
  std::string raw;
  int lineno = 0;
  long n = -1, k = -1;
  std::vector<std::string> rows;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = strip(raw);
    if (s.empty()) continue;
    if (n < 0) {
      std::istringstream hs(s);
      if (!(hs >> n >> k) || n < 1 || n > 64 || k < 0 || k > n)
        fail(name, lineno, 1, "expected header 'n k' with 1 <= n <= 64, 0 <= k <= n");
      std::string tail;
      if (hs >> tail) fail(name, lineno, 1, "trailing content after 'n k' header");
      continue;
    }
    for (size_t c = 0; c < s.size(); ++c)
      if (s[c] != '0' && s[c] != '1')
        fail(name, lineno, int(c) + 1, std::string("invalid character '") + s[c] + "' in row");
    if (long(s.size()) != n)
      fail(name, lineno, 1,
           "row length " + std::to_string(s.size()) + " does not match n = " + std::to_string(n));
    rows.push_back(s);
  }
  if (n < 0) fail(name, lineno ? lineno : 1, 1, "missing 'n k' header");
  if (long(rows.size()) != k)
    fail(name, lineno, 1,
         "expected " + std::to_string(k) + " generator rows, found " + std::to_string(rows.size()));
  if (rows.empty()) return LinearCode::zero_code(int(n));
  try {
    return LinearCode::from_generators(rows);
  } catch (const Error& e) {
    if (e.code() == errc::dependent_rows) throw;
    fail(name, lineno, 1, e.what());
  }
}

LinearCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, path + ": cannot open file");
  return parse_code_file(in, path);
}

namespace {

mpq_class parse_rational(const std::string& t, size_t& pos) {
  size_t start = pos;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
  while (pos < t.size() && (isdigit(t[pos]) || t[pos] == '/')) ++pos;
  if (pos == start)
    throw Error(errc::parse_error, "expected a rational in '" + t + "'");
  std::string lit = t.substr(start, pos - start);
  try {
    mpq_class q(lit);
    q.canonicalize();
    return q;
  } catch (...) {
    throw Error(errc::parse_error, "bad rational literal '" + lit + "'");
  }
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw Error(errc::parse_error, "empty scalar literal");
  size_t pos = 0;
  mpq_class rat = 0, surd = 0;
  long disc = 1;
  auto parse_sqrt_tail = [&](mpq_class coeff) {
    if (t.compare(pos, 5, "sqrt(") != 0)
      throw Error(errc::parse_error, "expected sqrt(d) in '" + text + "'");
    pos += 5;
    size_t close = t.find(')', pos);
    if (close == std::string::npos)
      throw Error(errc::parse_error, "unterminated sqrt( in '" + text + "'");
    std::string ds = t.substr(pos, close - pos);
    try {
      disc = std::stol(ds);
    } catch (...) {
      throw Error(errc::parse_error, "bad discriminant '" + ds + "'");
    }
    if (disc == 0 || !is_squarefree(disc))
      throw Error(errc::parse_error, "discriminant must be squarefree and nonzero: " + ds);
    pos = close + 1;
    surd += coeff;
  };

  // leading term: rational, or r/s*sqrt(d), or bare sqrt(d)
  if (t.compare(pos, 5, "sqrt(") == 0) {
    parse_sqrt_tail(1);
  } else {
    mpq_class first = parse_rational(t, pos);
    if (pos < t.size() && t[pos] == '*') {
      ++pos;
      parse_sqrt_tail(first);
    } else {
      rat = first;
    }
  }
  // optional second term
  if (pos < t.size()) {
    if (t[pos] != '+' && t[pos] != '-')
      throw Error(errc::parse_error, "unexpected '" + t.substr(pos) + "' in scalar literal");
    bool neg = t[pos] == '-';
    size_t save = pos;
    ++pos;
    if (t.compare(pos, 5, "sqrt(") == 0) {
      parse_sqrt_tail(neg ? -1 : 1);
    } else {
      pos = save;
      mpq_class second = parse_rational(t, pos);
      if (pos >= t.size() || t[pos] != '*')
        throw Error(errc::parse_error, "expected '*sqrt(d)' after second term in '" + text + "'");
      ++pos;
      parse_sqrt_tail(second);
    }
  }
  if (pos != t.size())
    throw Error(errc::parse_error, "trailing content '" + t.substr(pos) + "' in scalar literal");
  return Scalar(rat, surd, disc);
}

namespace {

word parse_bits_or_fail(const std::string& name, int lineno, const std::string& bits) {
  for (char c : bits)
    if (c != '0' && c != '1') fail(name, lineno, 1, "bad bit string '" + bits + "'");
  return word_from_str(bits);
}

}  // namespace

ParsedParams parse_params_file(std::istream& in, const std::string& name) {
  ParsedParams P;
  bool got_a = false, got_b = false, got_c = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = strip(raw);
    if (s.empty()) continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos) fail(name, lineno, 1, "expected 'key = value'");
    std::string key = strip(s.substr(0, eq));
    std::string val = strip(s.substr(eq + 1));
    if (key.empty() || val.empty()) fail(name, lineno, 1, "expected 'key = value'");
    try {
      if (key == "a" || key == "b" || key == "c") {
        Scalar v = parse_scalar(val);
        (key == "a" ? P.a : key == "b" ? P.b : P.c) = v;
        (key == "a" ? got_a : key == "b" ? got_b : got_c) = true;
      } else if (key == "d") {
        long d = 0;
        try {
          d = std::stol(val);
        } catch (...) {
          fail(name, lineno, int(eq) + 2, "bad discriminant '" + val + "'");
        }
        if (d == 0 || !is_squarefree(d))
          fail(name, lineno, int(eq) + 2, "discriminant must be squarefree and nonzero");
        P.disc = d;
      } else if ((key[0] == 'a' || key[0] == 'b' || key[0] == 'c') && key[1] == '[' &&
                 key.back() == ']') {
        ParamOverride ov;
        ov.kind = key[0];
        std::string inner = key.substr(2, key.size() - 3);
        size_t comma = inner.find(',');
        if (comma == std::string::npos) fail(name, lineno, 1, "override needs two arguments");
        std::string first = strip(inner.substr(0, comma));
        std::string second = strip(inner.substr(comma + 1));
        if (ov.kind == 'b') {
          ov.alpha = parse_bits_or_fail(name, lineno, first);
          ov.beta = parse_bits_or_fail(name, lineno, second);
        } else {
          try {
            ov.i = std::stoi(first) - 1;  // file indices are 1-based
          } catch (...) {
            fail(name, lineno, 1, "bad toral index '" + first + "'");
          }
          ov.alpha = parse_bits_or_fail(name, lineno, second);
        }
        ov.value = parse_scalar(val);
        P.overrides.push_back(std::move(ov));
      } else {
        fail(name, lineno, 1, "unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      if (e.code() == errc::parse_error && std::string(e.what()).find(name) == std::string::npos)
        fail(name, lineno, int(eq) + 2, e.what());
      throw;
    }
  }
  if (!got_a || !got_b || !got_c)
    fail(name, lineno ? lineno : 1, 1, "params file must set a, b and c");
  return P;
}

ParsedParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, path + ": cannot open file");
  return parse_params_file(in, path);
}

StructureParams realize_params(const LinearCode& C, const ParsedParams& p) {
  StructureParams P = StructureParams::constants(C, p.a, p.b, p.c);
  for (const auto& ov : p.overrides) {
    switch (ov.kind) {
      case 'a': P.set_a(ov.i, ov.alpha, ov.value); break;
      case 'b': P.set_b(ov.alpha, ov.beta, ov.value); break;
      case 'c': P.set_c(ov.i, ov.alpha, ov.value); break;
      default: throw Error(errc::parse_error, "bad override kind");
    }
  }
  return P;
}

}  // namespace codealg
