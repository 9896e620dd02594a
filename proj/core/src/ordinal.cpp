#include "ordlen/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ordlen/error.hpp"

namespace ordlen {

namespace {

const Natural& zero_natural() {
  static const Natural z = 0;
  return z;
}

std::size_t checked_size(std::uint64_t e) {
  // Exponents index a dense vector; anything near this bound is a bug upstream.
  if (e > (std::uint64_t{1} << 20)) {
    throw GuardError("ordinal exponent " + std::to_string(e) + " exceeds supported range");
  }
  return static_cast<std::size_t>(e);
}

} // namespace

Ordinal::Ordinal(std::vector<Natural> coeffs)
    : coeffs_(std::make_move_iterator(coeffs.begin()), std::make_move_iterator(coeffs.end())) {
  for (const auto& c : coeffs_) {
    if (c.sign() < 0) throw InvalidArgument("ordinal coefficients must be non-negative");
  }
  normalize();
}

Ordinal::Ordinal(std::initializer_list<unsigned long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Ordinal Ordinal::finite(const Natural& n) { return Ordinal(std::vector<Natural>{n}); }

Ordinal Ordinal::monomial(std::uint64_t exponent, const Natural& coeff) {
  std::vector<Natural> c(checked_size(exponent) + 1);
  c.back() = coeff;
  return Ordinal(std::move(c));
}

void Ordinal::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Natural& Ordinal::coefficient(std::uint64_t e) const {
  return e < coeffs_.size() ? coeffs_[e] : zero_natural();
}

std::uint64_t Ordinal::degree() const {
  if (is_zero()) throw InvalidArgument("zero ordinal has no support");
  return coeffs_.size() - 1;
}

std::uint64_t Ordinal::order() const {
  if (is_zero()) throw InvalidArgument("zero ordinal has no support");
  std::uint64_t i = 0;
  while (coeffs_[i] == 0) ++i;
  return i;
}

Natural Ordinal::valence() const {
  Natural v = 0;
  for (const auto& c : coeffs_) v += c;
  return v;
}

std::vector<std::uint64_t> Ordinal::support() const {
  std::vector<std::uint64_t> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) s.push_back(i);
  }
  return s;
}

bool Ordinal::is_binary() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Natural& c) { return c == 0 || c == 1; });
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) {
      return a.coeffs_[i] < b.coeffs_[i] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Ordinal ord_sum(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  const std::size_t e = cb.size() - 1;
  Ordinal out;
  if (ca.size() <= e) {
    out.coeffs_ = cb;
    return out;
  }
  out.coeffs_ = ca;
  for (std::size_t i = 0; i < e; ++i) out.coeffs_[i] = cb[i];
  out.coeffs_[e] += cb[e];
  return out;
}

Ordinal shuffle_sum(const Ordinal& a, const Ordinal& b) {
  const bool a_longer = a.coefficients().size() >= b.coefficients().size();
  const auto& longer = a_longer ? a.coefficients() : b.coefficients();
  const auto& shorter = a_longer ? b.coefficients() : a.coefficients();
  Ordinal out;
  out.coeffs_ = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out.coeffs_[i] += shorter[i];
  return out;
}

bool leq_total(const Ordinal& a, const Ordinal& b) { return a <= b; }

bool weaker(const Ordinal& a, const Ordinal& b) {
  if (a.coefficients().size() > b.coefficients().size()) return false;
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    if (a.coefficients()[i] > b.coefficients()[i]) return false;
  }
  return true;
}

Ordinal meet(const Ordinal& a, const Ordinal& b) {
  std::vector<Natural> c(std::min(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(a.coefficient(i), b.coefficient(i));
  return Ordinal(std::move(c));
}

Ordinal join(const Ordinal& a, const Ordinal& b) {
  std::vector<Natural> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(a.coefficient(i), b.coefficient(i));
  return Ordinal(std::move(c));
}

Ordinal shuffle_difference(const Ordinal& b, const Ordinal& a) {
  if (!weaker(a, b)) throw InvalidArgument("shuffle_difference requires weaker(a, b)");
  std::vector<Natural> c(b.coefficients().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = b.coefficient(i) - a.coefficient(i);
  return Ordinal(std::move(c));
}

OrdinalSplit split(const Ordinal& a, std::uint64_t e) {
  const auto& c = a.coefficients();
  if (e + 1 >= c.size()) return {Ordinal{}, a};
  std::vector<Natural> high(c.size()), low(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(e + 1));
  for (std::size_t i = e + 1; i < c.size(); ++i) high[i] = c[i];
  return {Ordinal(std::move(high)), Ordinal(std::move(low))};
}

Ordinal nat_multiple(const Natural& n, const Ordinal& a) {
  if (n < 0) throw InvalidArgument("nat_multiple requires a natural multiplier");
  std::vector<Natural> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x *= n;
  return Ordinal(std::move(c));
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto& c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c[i].str();
      continue;
    }
    if (c[i] != 1) out += c[i].str();
    out += 'w';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

namespace {

class OrdinalParser {
public:
  explicit OrdinalParser(std::string_view s) : s_(s) {}

  Ordinal parse() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty ordinal", pos_);
    std::vector<Natural> coeffs;
    std::uint64_t last_exp = 0;
    bool first = true;
    while (true) {
      skip_ws();
      const std::size_t term_start = pos_;
      Natural coeff = 1;
      bool has_coeff = false;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coeff = read_natural();
        has_coeff = true;
      }
      skip_ws();
      std::uint64_t exp = 0;
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      }
      if (pos_ < s_.size() && s_[pos_] == 'w') {
        ++pos_;
        exp = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip_ws();
          if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            throw ParseError("expected exponent after '^'", pos_);
          }
          exp = static_cast<std::uint64_t>(read_natural());
        }
      } else if (!has_coeff) {
        throw ParseError("expected a term", term_start);
      }
      if (!first && exp >= last_exp) {
        throw ParseError("ordinal terms must have strictly descending exponents", term_start);
      }
      if (first && !(exp == 0 && coeff == 0)) {
        coeffs.resize(checked_size(exp) + 1);
      }
      if (!coeffs.empty()) coeffs[exp] = coeff;
      first = false;
      last_exp = exp;
      skip_ws();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
    }
    return Ordinal(std::move(coeffs));
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Natural read_natural() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Natural(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

} // namespace ordlen
