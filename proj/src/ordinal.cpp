#include "ordeq/ordinal.hpp"

#include <cctype>

namespace ordeq {

Ordinal::Ordinal(unsigned long n) {
  if (n != 0) parts_.push_back(Part{Ordinal(), Nat(n)});
}

Ordinal::Ordinal(const Nat& n) {
  if (n < 0) throw InternalError("negative natural in ordinal");
  if (n != 0) parts_.push_back(Part{Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_power(Ordinal(1ul)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, const Nat& coefficient) {
  if (coefficient < 0) throw InternalError("negative coefficient in ordinal");
  Ordinal r;
  if (coefficient != 0) r.parts_.push_back(Part{exponent, coefficient});
  return r;
}

Ordinal Ordinal::from_parts(const std::vector<Part>& parts) {
  Ordinal acc;
  for (const Part& p : parts) acc = add(acc, omega_power(p.exponent, p.coefficient));
  return acc;
}

Ordinal Ordinal::from_canonical(std::vector<Part>&& parts) {
  Ordinal r;
  r.parts_ = std::move(parts);
  return r;
}

bool Ordinal::is_zero() const noexcept { return parts_.empty(); }

bool Ordinal::is_natural() const noexcept {
  return parts_.empty() || (parts_.size() == 1 && parts_[0].exponent.is_zero());
}

std::optional<Nat> Ordinal::natural_value() const {
  if (parts_.empty()) return Nat(0);
  if (parts_.size() == 1 && parts_[0].exponent.is_zero()) return parts_[0].coefficient;
  return std::nullopt;
}

const std::vector<Ordinal::Part>& Ordinal::parts() const noexcept { return parts_; }

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  const std::size_t n = std::min(pa.size(), pb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(pa[i].exponent, pb[i].exponent);
    if (c != std::strong_ordering::equal) return c;
    int s = cmp(pa[i].coefficient, pb[i].coefficient);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (pa.size() == pb.size()) return std::strong_ordering::equal;
  return pa.size() < pb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;

  const Ordinal& lead = b.parts_.front().exponent;
  // Keep the parts of a whose exponent exceeds b's leading exponent; merge
  // coefficients at an equal exponent; everything smaller is absorbed.
  std::vector<Ordinal::Part> out;
  out.reserve(a.parts_.size() + b.parts_.size());
  std::size_t i = 0;
  while (i < a.parts_.size() && compare(a.parts_[i].exponent, lead) == std::strong_ordering::greater) {
    out.push_back(a.parts_[i]);
    ++i;
  }
  if (i < a.parts_.size() && compare(a.parts_[i].exponent, lead) == std::strong_ordering::equal) {
    out.push_back(Ordinal::Part{lead, a.parts_[i].coefficient + b.parts_.front().coefficient});
    out.insert(out.end(), b.parts_.begin() + 1, b.parts_.end());
  } else {
    out.insert(out.end(), b.parts_.begin(), b.parts_.end());
  }
  return Ordinal::from_canonical(std::move(out));
}

Ordinal omega_mul(const Ordinal& a) {
  // w * (w^e_1*c_1 + ... + w^e_k*c_k) = w^(1+e_1)*c_1 + ... + w^(1+e_k)*c_k.
  // 1 + e is strictly monotone in e, so the part order is preserved.
  std::vector<Ordinal::Part> out;
  out.reserve(a.parts_.size());
  const Ordinal one(1ul);
  for (const auto& p : a.parts_) out.push_back(Ordinal::Part{add(one, p.exponent), p.coefficient});
  return Ordinal::from_canonical(std::move(out));
}

std::optional<Ordinal> degree(const Ordinal& a) {
  if (a.is_zero()) return std::nullopt;
  return a.parts().front().exponent;
}

std::optional<Ordinal> valuation(const Ordinal& a) {
  if (a.is_zero()) return std::nullopt;
  return a.parts().back().exponent;
}

Nat length(const Ordinal& a) {
  Nat total(0);
  for (const auto& p : a.parts()) total += p.coefficient;
  return total;
}

Nat coefficient_of(const Ordinal& a, const Ordinal& exponent) {
  for (const auto& p : a.parts()) {
    auto c = compare(p.exponent, exponent);
    if (c == std::strong_ordering::equal) return p.coefficient;
    if (c == std::strong_ordering::less) break;
  }
  return Nat(0);
}

std::pair<Ordinal, Ordinal> split_at(const Ordinal& a, const Ordinal& threshold) {
  std::size_t cut = 0;
  while (cut < a.parts_.size() &&
         compare(a.parts_[cut].exponent, threshold) != std::strong_ordering::less) {
    ++cut;
  }
  std::vector<Ordinal::Part> high(a.parts_.begin(), a.parts_.begin() + cut);
  std::vector<Ordinal::Part> low(a.parts_.begin() + cut, a.parts_.end());
  return {Ordinal::from_canonical(std::move(high)), Ordinal::from_canonical(std::move(low))};
}

bool is_canonical(const Ordinal& a) {
  const auto& parts = a.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].coefficient < 1) return false;
    if (!is_canonical(parts[i].exponent)) return false;
    if (i + 1 < parts.size() &&
        compare(parts[i].exponent, parts[i + 1].exponent) != std::strong_ordering::greater) {
      return false;
    }
  }
  return true;
}

namespace {

class OrdinalParser {
public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal value = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return value;
  }

private:
  Ordinal parse_sum() {
    Ordinal acc = parse_oterm();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        acc = add(acc, parse_oterm());
      } else {
        return acc;
      }
    }
  }

  Ordinal parse_oterm() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected ordinal term");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal(parse_nat());
    if (c != 'w') fail("expected 'w' or a number");
    ++pos_;
    Ordinal exponent(1ul);
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      exponent = parse_oexp();
    }
    Nat coefficient(1);
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      coefficient = parse_nat();
    }
    return Ordinal::omega_power(exponent, coefficient);
  }

  Ordinal parse_oexp() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected exponent");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal(parse_nat());
    if (c == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    if (c == '(') {
      ++pos_;
      Ordinal inner = parse_sum();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("expected exponent");
  }

  Nat parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Nat(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Exponent rendering: bare number, bare w, otherwise parenthesized.
std::string exponent_string(const Ordinal& e) {
  if (auto n = e.natural_value()) return n->get_str();
  if (e == Ordinal::omega()) return "w";
  return "(" + to_string(e) + ")";
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& p : a.parts()) {
    if (!out.empty()) out += " + ";
    if (p.exponent.is_zero()) {
      out += p.coefficient.get_str();
      continue;
    }
    out += 'w';
    if (!(p.exponent == Ordinal(1ul))) {
      out += '^';
      out += exponent_string(p.exponent);
    }
    if (p.coefficient != 1) {
      out += '*';
      out += p.coefficient.get_str();
    }
  }
  return out;
}

}  // namespace ordeq
