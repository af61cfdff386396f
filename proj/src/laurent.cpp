#include "qcol/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "qcol/numtheory.hpp"

namespace qcol {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(BigInt(c)) {}

LaurentPoly::LaurentPoly(BigInt c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly::LaurentPoly(std::vector<BigInt> coeffs, int min_exp)
    : coeffs_(std::move(coeffs)), min_exp_(min_exp) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exp) {
  return LaurentPoly(std::vector<BigInt>{c}, exp);
}

LaurentPoly LaurentPoly::from_ints(std::initializer_list<long> coeffs, int min_exp) {
  std::vector<BigInt> big;
  big.reserve(coeffs.size());
  for (long c : coeffs) big.emplace_back(c);
  return LaurentPoly(std::move(big), min_exp);
}

void LaurentPoly::trim() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigInt& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_exp_ = 0;
}

int LaurentPoly::max_exp() const {
  return is_zero() ? min_exp_ : min_exp_ + static_cast<int>(coeffs_.size()) - 1;
}

int LaurentPoly::span() const { return max_exp() - min_exp_; }

BigInt LaurentPoly::coeff(int exp) const {
  if (exp < min_exp_ || exp > max_exp() || is_zero()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

const BigInt& LaurentPoly::lowest_coeff() const {
  if (is_zero()) throw PreconditionError("lowest_coeff of zero polynomial");
  return coeffs_.front();
}

const BigInt& LaurentPoly::highest_coeff() const {
  if (is_zero()) throw PreconditionError("highest_coeff of zero polynomial");
  return coeffs_.back();
}

LaurentPoly LaurentPoly::shifted(int n) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_exp_ += n;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  int lo = std::min(min_exp_, rhs.min_exp_);
  int hi = std::max(max_exp(), rhs.max_exp());
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + (min_exp_ - lo)] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i + (rhs.min_exp_ - lo)] += rhs.coeffs_[i];
  coeffs_ = std::move(out);
  min_exp_ = lo;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return LaurentPoly(std::move(out), lhs.min_exp_ + rhs.min_exp_);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    int e = min_exp_ + static_cast<int>(i);
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  LaurentPoly run() {
    if (s_.empty()) fail("empty polynomial");
    LaurentPoly acc;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      acc += term(sign);
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("polynomial parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(get());
    return d;
  }

  LaurentPoly term(int sign) {
    BigInt c = 1;
    std::string d = digits();
    bool has_coeff = !d.empty();
    if (has_coeff) c = BigInt(d);
    if (peek() == '*') {
      if (!has_coeff) fail("'*' without coefficient");
      get();
      if (peek() != 't') fail("expected 't' after '*'");
    }
    int exp = 0;
    if (peek() == 't') {
      get();
      exp = 1;
      if (peek() == '^') {
        get();
        int esign = 1;
        if (peek() == '-') {
          get();
          esign = -1;
        }
        std::string e = digits();
        if (e.empty()) fail("expected exponent");
        exp = esign * std::stoi(e);
      }
    } else if (!has_coeff) {
      fail("expected coefficient or 't'");
    }
    return LaurentPoly::monomial(sign * c, exp);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).run(); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw PreconditionError("exact_div: division by zero polynomial");
  if (p.is_zero()) return {};
  // Both operands have non-zero lowest coefficients, so divisibility in
  // Z[t, 1/t] reduces to divisibility of the shifted polynomial parts.
  std::vector<BigInt> rem = p.coeffs();
  const auto& den = q.coeffs();
  const BigInt& lead = den.back();
  if (rem.size() < den.size()) {
    throw InexactDivision("inexact division: divisor has larger span", p);
  }
  std::vector<BigInt> quot(rem.size() - den.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + den.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw InexactDivision("inexact division: leading coefficient does not divide",
                            LaurentPoly(rem, p.min_exp()));
    }
    BigInt f = top / lead;
    quot[k] = f;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= f * den[j];
  }
  LaurentPoly r(std::move(rem), p.min_exp());
  if (!r.is_zero()) throw InexactDivision("inexact division: non-zero remainder " + r.to_string(), r);
  return LaurentPoly(std::move(quot), p.min_exp() - q.min_exp());
}

BigInt evaluate(const LaurentPoly& p, const BigInt& x) {
  if (p.is_zero()) return 0;
  if (p.min_exp() < 0) throw PreconditionError("evaluate: negative exponent in " + p.to_string());
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  for (int i = 0; i < p.min_exp(); ++i) acc *= x;
  return acc;
}

std::uint64_t evaluate_mod(const LaurentPoly& p, std::int64_t x, std::uint64_t n) {
  if (n < 2) throw PreconditionError("evaluate_mod: modulus must be >= 2");
  if (p.is_zero()) return 0;
  std::uint64_t xr = mod_reduce(x, n);
  std::uint64_t acc = 0;
  const auto& c = p.coeffs();
  BigInt big_n(std::to_string(n));
  for (std::size_t i = c.size(); i-- > 0;) {
    BigInt ci = c[i] % big_n;
    if (ci < 0) ci += big_n;
    std::uint64_t term = std::stoull(ci.get_str());
    std::uint64_t prod = mul_mod(acc, xr, n);
    acc = prod >= n - term ? prod - (n - term) : prod + term;
  }
  int e = p.min_exp();
  std::uint64_t base = e >= 0 ? xr : inverse_mod(xr, n);
  return mul_mod(acc, pow_mod(base, static_cast<std::uint64_t>(e >= 0 ? e : -e), n), n);
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  LaurentPoly x = a.shifted(-a.min_exp());
  LaurentPoly y = b.shifted(-b.min_exp());
  return x == y || x == -y;
}

}  // namespace qcol
