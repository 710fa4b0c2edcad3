#include "afflog/exactfield/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace afflog {

namespace {

bool valid_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not an exact rational: \"" + raw + "\"");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + raw + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational best_rational(const Rational& x, const mpz_class& max_den) {
  // Convergents h/k of the continued fraction of x.
  mpz_class h_prev = 0, k_prev = 1, h = 1, k = 0;
  mpz_class num = x.get_num(), den = x.get_den();
  Rational best;
  bool have = false;
  while (den != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class h_next = a * h + h_prev, k_next = a * k + k_prev;
    if (k_next > max_den) {
      // Largest semiconvergent still within the bound.
      mpz_class t = (max_den - k_prev) / k;
      mpz_class hs = t * h + h_prev, ks = t * k + k_prev;
      Rational semi(hs, ks), conv(h, k);
      semi.canonicalize();
      if (!have) return ks > 0 ? semi : conv;
      Rational d1 = abs(semi - x), d2 = abs(conv - x);
      return (ks > 0 && d1 < d2) ? semi : conv;
    }
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    best = Rational(h, k);
    have = true;
    mpz_class r = num - a * den;
    num = den;
    den = r;
  }
  best.canonicalize();
  return best;
}

mpz_class lcm_of_denominators(const Rational* begin, const Rational* end) {
  mpz_class l = 1;
  for (auto p = begin; p != end; ++p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p->get_den().get_mpz_t());
  return l;
}

}  // namespace afflog
