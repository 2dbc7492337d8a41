#include "cutrank/rational.hpp"

#include <cctype>
#include <sstream>

#include "cutrank/errors.hpp"

namespace cutrank {

namespace {

bool is_decimal_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-') {
    throw ParseError("bad rational literal: \"" + text + "\"");
  }
  Rat value;
  if (mpq_set_str(value.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
    throw ParseError("bad rational literal: \"" + text + "\"");
  }
  if (value.get_den() == 0) {
    throw ParseError("zero denominator in rational literal: \"" + text + "\"");
  }
  value.canonicalize();
  return value;
}

std::string format_rational(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

Rat rat_floor(const Rat& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
             value.get_den().get_mpz_t());
  return Rat(q);
}

Rat rat_ceil(const Rat& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
             value.get_den().get_mpz_t());
  return Rat(q);
}

long floor_long(const Rat& value) {
  const Rat f = rat_floor(value);
  if (!f.get_num().fits_slong_p()) {
    throw ContractError("floor of " + format_rational(value) +
                        " does not fit a machine integer");
  }
  return f.get_num().get_si();
}

long ceil_long(const Rat& value) {
  const Rat c = rat_ceil(value);
  if (!c.get_num().fits_slong_p()) {
    throw ContractError("ceil of " + format_rational(value) +
                        " does not fit a machine integer");
  }
  return c.get_num().get_si();
}

int lex_compare(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    throw ContractError("lex_compare: dimension mismatch");
  }
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const int c = cmp(a(i), b(i));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return lex_compare(a, b) < 0;
}

std::string format_vector(const RatVector& v) {
  std::ostringstream out;
  out << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << format_rational(v(i));
  }
  out << ")";
  return out.str();
}

}  // namespace cutrank
