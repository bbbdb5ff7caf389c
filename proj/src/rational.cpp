// Copyright 2026 The symzero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symzero/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "symzero/errors.hpp"

namespace symzero {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Decimal literal: [sign] digits [. digits] [ (e|E) [sign] digits ].
BigRat parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits += text[pos++];
    seen_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos++];
      ++frac_digits;
      seen_digit = true;
    }
  }
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_neg = text[pos] == '-';
      ++pos;
    }
    std::string exp_digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      exp_digits += text[pos++];
    }
    if (exp_digits.empty()) throw ParseError("bad exponent in rational literal: " + text);
    exponent = std::strtol(exp_digits.c_str(), nullptr, 10);
    if (exp_neg) exponent = -exponent;
  }
  if (!seen_digit || pos != text.size()) {
    throw ParseError("bad rational literal: " + text);
  }
  if (digits.empty()) digits = "0";

  BigInt mantissa;
  mpz_set_str(mantissa.get_mpz_t(), digits.c_str(), 10);  // leading zeros are not octal
  if (negative) mantissa = -mantissa;
  BigInt num = mantissa;
  BigInt den = 1;
  long pow10 = exponent - frac_digits;
  BigInt ten = 10;
  if (pow10 > 0) {
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(pow10));
    num *= scale;
  } else if (pow10 < 0) {
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-pow10));
  }
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

BigRat rat_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    std::string num_digits = num;
    if (!num_digits.empty() && (num_digits[0] == '+' || num_digits[0] == '-')) {
      num_digits = num_digits.substr(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
      throw ParseError("bad rational literal: " + text);
    }
    BigRat q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
    if (sgn(BigRat(q.get_den())) == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos) {
    return parse_decimal(text);
  }
  std::string digits = text;
  if (digits[0] == '+' || digits[0] == '-') digits = digits.substr(1);
  if (!all_digits(digits)) throw ParseError("bad rational literal: " + text);
  return BigRat(BigInt(text));
}

std::string rat_to_string(const BigRat& q) {
  BigRat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

BigRat rat_from_double(double x) {
  if (!std::isfinite(x)) throw ParseError("non-finite double cannot become a rational");
  BigRat q;
  mpq_set_d(q.get_mpq_t(), x);  // exact: binary expansion of the double
  return q;
}

double rat_to_double(const BigRat& q) { return q.get_d(); }

std::string vec_to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_to_string(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace symzero
