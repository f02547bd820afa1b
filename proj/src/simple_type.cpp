#include "rtk/simple_type.hpp"

#include "rtk/errors.hpp"

namespace rtk {

void validate(SimpleType t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;  // D3 normalized to A3 on construction
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok)
    throw invalid_rank("invalid rank " + std::to_string(n) + " for family " +
                       std::string(1, static_cast<char>(t.family)));
}

std::string to_string(SimpleType t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

SimpleType parse_simple_type(const std::string& s) {
  if (s.size() < 2) throw parse_error("bad simple type '" + s + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') throw parse_error("bad family in '" + s + "'");
  std::string digits = s.substr(1);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("bad simple type '" + s + "'");
  SimpleType t{static_cast<Family>(f), std::stoi(digits)};
  validate(t);
  return t;
}

int positive_root_count(SimpleType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

Int weyl_order(SimpleType t) {
  const int n = t.rank;
  auto fact = [](int k) {
    Int r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return fact(n) * int_pow(2, n);
    case Family::D: return fact(n) * int_pow(2, n - 1);
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 1;
}

int coxeter_number(SimpleType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

int duality_permutation(SimpleType t, int i) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n - 1 - i;
    case Family::D:
      if (n % 2 == 1 && i >= n - 2) return (i == n - 2) ? n - 1 : n - 2;
      return i;
    case Family::E:
      if (n == 6) {
        if (i == 0) return 5;
        if (i == 5) return 0;
        if (i == 2) return 4;
        if (i == 4) return 2;
      }
      return i;
    default: return i;
  }
}

}  // namespace rtk
