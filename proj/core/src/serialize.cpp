#include "qcongr/serialize.hpp"

#include <stdexcept>
#include <vector>

namespace qcongr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    parts.push_back(trim(s.substr(start, comma == std::string_view::npos ? s.size() - start : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

Rational parse_rational(std::string_view tok) {
  if (tok.empty()) throw std::invalid_argument("empty coefficient");
  for (char ch : tok) {
    if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9'))) {
      throw std::invalid_argument("invalid coefficient '" + std::string(tok) + "'");
    }
  }
  Rational r;
  if (r.set_str(std::string(tok), 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("invalid coefficient '" + std::string(tok) + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_coeff_list(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p.coeffs()[i].get_str(10);
  }
  return out;
}

std::string to_coeff_list(const RatPoly& p) {
  if (p.is_zero()) return "0";
  if (auto ip = p.to_int_poly()) return to_coeff_list(*ip);
  std::string out;
  for (std::size_t i = 0; i < p.prim().size(); ++i) {
    if (i) out += ',';
    out += to_string(p.coeff(i));
  }
  return out;
}

std::string to_coeff_list(const RatFunc& f) {
  if (f.den().is_one()) return to_coeff_list(f.num());
  return to_coeff_list(f.num()) + " / " + to_coeff_list(f.den());
}

IntPoly parse_int_poly(std::string_view text) {
  RatPoly p = parse_rat_poly(text);
  auto ip = p.to_int_poly();
  if (!ip) throw std::invalid_argument("coefficient list has non-integer entries");
  return *ip;
}

RatPoly parse_rat_poly(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty coefficient list");
  const auto parts = split_commas(text);
  std::vector<Rational> coeffs;
  coeffs.reserve(parts.size());
  Integer lcm = 1;
  for (auto part : parts) {
    coeffs.push_back(parse_rational(part));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), coeffs.back().get_den_mpz_t());
  }
  std::vector<Integer> ints;
  ints.reserve(coeffs.size());
  for (const auto& c : coeffs) ints.push_back(c.get_num() * (lcm / c.get_den()));
  return RatPoly(Rational(Integer(1), lcm), IntPoly(std::move(ints)));
}

RatFunc parse_rat_func(std::string_view text) {
  const auto slash = text.find(" / ");
  if (slash == std::string_view::npos) return RatFunc(parse_rat_poly(text));
  return RatFunc(parse_rat_poly(text.substr(0, slash)), parse_rat_poly(text.substr(slash + 3)));
}

}  // namespace qcongr
