#include "abca/gaussian_rational.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace abca {

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";

[[noreturn]] void bad(std::string_view text, std::string_view why) {
  throw std::invalid_argument("malformed Gaussian rational '" + std::string(text) +
                              "': " + std::string(why));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

mpq_class GaussianRational::parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text, "expected p/q");
    mpz_class d(std::string(den), 10);
    if (d == 0) bad(text, "zero denominator");
    value = mpq_class(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      auto exp_text = s.substr(e + 1);
      bool exp_neg = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_neg = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad(text, "bad exponent");
      exponent = std::stol(std::string(exp_text));
      if (exp_neg) exponent = -exponent;
    }
    std::string digits;
    long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      auto ip = mantissa.substr(0, dot);
      auto fp = mantissa.substr(dot + 1);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
          (ip.empty() && fp.empty()))
        bad(text, "bad decimal");
      digits = std::string(ip) + std::string(fp);
      frac_digits = static_cast<long>(fp.size());
    } else {
      if (!all_digits(mantissa)) bad(text, "expected a number");
      digits = std::string(mantissa);
    }
    value = mpq_class(mpz_class(digits, 10));
    long shift = exponent - frac_digits;
    if (shift > 0) value *= pow10(static_cast<unsigned long>(shift));
    if (shift < 0) value /= pow10(static_cast<unsigned long>(-shift));
    value.canonicalize();
  }
  return negative ? mpq_class(-value) : value;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) bad(text, "empty");

  // Split into signed terms. A sign directly after an exponent marker
  // belongs to the number.
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E' &&
        s[k - 1] != '+' && s[k - 1] != '-') {
      terms.push_back(s.substr(start, k - start));
      start = k;
    }
  }
  terms.push_back(s.substr(start));

  mpq_class re = 0, im = 0;
  for (std::string term : terms) {
    bool imaginary = false;
    if (!term.empty() && term.back() == 'i') {
      imaginary = true;
      term.pop_back();
      if (term.size() >= kMiddleDot.size() &&
          std::string_view(term).substr(term.size() - kMiddleDot.size()) == kMiddleDot) {
        term.resize(term.size() - kMiddleDot.size());
      } else if (!term.empty() && term.back() == '*') {
        term.pop_back();
      }
    }
    mpq_class v;
    if (imaginary && (term.empty() || term == "+" || term == "-")) {
      v = term == "-" ? -1 : 1;
    } else {
      v = parse_rational(term);
    }
    (imaginary ? im : re) += v;
  }
  return {re, im};
}

std::string GaussianRational::to_string() const {
  auto frac = [](const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  };
  std::string out = frac(re_);
  if (sgn(im_) < 0) {
    out += "-" + frac(mpq_class(-im_));
  } else {
    out += "+" + frac(im_);
  }
  out += kMiddleDot;
  out += "i";
  return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  mpq_class n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

}  // namespace abca
