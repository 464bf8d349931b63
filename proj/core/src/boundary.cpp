#include "disclap/boundary.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include "disclap/errors.hpp"
#include "disclap/geometry.hpp"

namespace disclap {

namespace {

void validate_terms(const std::vector<HarmonicTerm>& terms) {
  for (const auto& t : terms) {
    if (t.k < 0) {
      throw InvalidArgument("harmonic index k must be >= 0, got " +
                            std::to_string(t.k));
    }
    if (!std::isfinite(t.coeff)) {
      throw InvalidArgument("term coefficient must be finite");
    }
  }
}

void validate_samples(const std::vector<double>& values) {
  const auto m = values.size();
  if (m < 4 || m % 2 != 0) {
    throw InvalidArgument("sampled boundary data needs an even number of "
                          "samples, at least 4; got " +
                          std::to_string(m));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidArgument("boundary sample must be finite");
  }
}

// --- expression grammar -----------------------------------------------------

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  std::vector<HarmonicTerm> run() {
    std::vector<HarmonicTerm> terms;
    skip_ws();
    double sign = consume_sign();
    parse_term(sign, terms);
    skip_ws();
    while (!done()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      parse_term(op == '-' ? -1.0 : 1.0, terms);
      skip_ws();
    }
    if (terms.empty()) fail("empty expression");
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("boundary expression: " + what + " at offset " +
                     std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  double consume_sign() {
    if (peek() == '-') {
      ++pos_;
      skip_ws();
      return -1.0;
    }
    return 1.0;
  }

  bool starts_number() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  double parse_number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  // term := NUM | NUM '*' trig | trig
  void parse_term(double sign, std::vector<HarmonicTerm>& out) {
    if (starts_number()) {
      double value = sign * parse_number();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        out.push_back(parse_trig(value));
      } else {
        out.push_back({Harmonic::Cosine, 0, value});  // bare constant
      }
    } else {
      out.push_back(parse_trig(sign));
    }
  }

  // trig := ('sin' | 'cos') '(' [INT '*'] 't' ')'
  HarmonicTerm parse_trig(double coeff) {
    Harmonic kind;
    if (text_.substr(pos_, 3) == "sin") {
      kind = Harmonic::Sine;
    } else if (text_.substr(pos_, 3) == "cos") {
      kind = Harmonic::Cosine;
    } else {
      fail("expected 'sin' or 'cos'");
    }
    pos_ += 3;
    skip_ws();
    if (peek() != '(') fail("expected '('");
    ++pos_;
    skip_ws();
    int k = 1;
    if (starts_number()) {
      const char* begin = text_.data() + pos_;
      const char* end = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(begin, end, k);
      if (ec != std::errc{} || ptr == begin) fail("expected an integer harmonic");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      skip_ws();
      if (peek() != '*') fail("expected '*' after harmonic index");
      ++pos_;
      skip_ws();
    }
    if (peek() != 't') fail("expected 't'");
    ++pos_;
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    if (k < 0) fail("harmonic index must be >= 0");
    return {kind, k, coeff};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BoundarySpec BoundarySpec::closed_form(std::vector<HarmonicTerm> terms) {
  validate_terms(terms);
  return BoundarySpec(ClosedForm{std::move(terms)});
}

BoundarySpec BoundarySpec::constant(double c) {
  return closed_form({{Harmonic::Cosine, 0, c}});
}

BoundarySpec BoundarySpec::sampled(std::vector<double> values) {
  validate_samples(values);
  return BoundarySpec(Sampled{std::move(values)});
}

BoundarySpec BoundarySpec::parse(std::string_view text) {
  return closed_form(ExprParser(text).run());
}

BoundarySpec BoundarySpec::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string_view body(line.data() + first, last - first + 1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc{} || ptr != body.data() + body.size()) {
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected one numeric value per line, got \"" +
                       std::string(body) + "\"");
    }
    values.push_back(v);
  }
  return sampled(std::move(values));
}

bool BoundarySpec::is_closed_form() const {
  return std::holds_alternative<ClosedForm>(data_);
}

const std::vector<HarmonicTerm>& BoundarySpec::terms() const {
  return std::get<ClosedForm>(data_).terms;
}

const std::vector<double>& BoundarySpec::samples() const {
  return std::get<Sampled>(data_).values;
}

double FourierCoefficients::evaluate(double theta) const {
  double sum = a0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    sum += a[i] * std::cos(n * theta) + b[i] * std::sin(n * theta);
  }
  return sum;
}

double eval_boundary(const BoundarySpec& spec, double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("theta must be finite");
  if (spec.is_closed_form()) {
    double sum = 0.0;
    for (const auto& t : spec.terms()) {
      const double arg = static_cast<double>(t.k) * theta;
      sum += t.coeff * (t.kind == Harmonic::Cosine ? std::cos(arg) : std::sin(arg));
    }
    return sum;
  }
  const auto& v = spec.samples();
  const auto m = v.size();
  const double pos = wrap_angle(theta) * static_cast<double>(m) / kTwoPi;
  auto j = static_cast<std::size_t>(pos);
  if (j >= m) j = m - 1;  // wrap_angle rounding guard
  const double frac = pos - static_cast<double>(j);
  return v[j] * (1.0 - frac) + v[(j + 1) % m] * frac;
}

FourierCoefficients fourier_coefficients(const BoundarySpec& spec, int n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
  FourierCoefficients c;
  c.a.assign(static_cast<std::size_t>(n_max), 0.0);
  c.b.assign(static_cast<std::size_t>(n_max), 0.0);

  if (spec.is_closed_form()) {
    for (const auto& t : spec.terms()) {
      if (t.k == 0) {
        if (t.kind == Harmonic::Cosine) c.a0 += t.coeff;
        // sin(0*t) contributes nothing
      } else if (t.k <= n_max) {
        auto& dst = (t.kind == Harmonic::Cosine) ? c.a : c.b;
        dst[static_cast<std::size_t>(t.k - 1)] += t.coeff;
      }
      // harmonics above n_max are truncated away
    }
    return c;
  }

  const auto& v = spec.samples();
  const int m = static_cast<int>(v.size());
  const int nyquist = m / 2 - 1;
  if (n_max > nyquist) {
    throw InvalidArgument("n_max = " + std::to_string(n_max) +
                          " exceeds the Nyquist limit M/2 - 1 = " +
                          std::to_string(nyquist) + " for M = " +
                          std::to_string(m) + " samples");
  }

  // Periodic trapezoid rule; endpoints coincide, so it reduces to plain
  // averages over the grid.
  double mean = 0.0;
  for (double x : v) mean += x;
  c.a0 = mean / m;

  for (int n = 1; n <= n_max; ++n) {
    double ca = 0.0;
    double cb = 0.0;
    for (int j = 0; j < m; ++j) {
      const double arg = kTwoPi * static_cast<double>(n) * static_cast<double>(j) /
                         static_cast<double>(m);
      ca += v[static_cast<std::size_t>(j)] * std::cos(arg);
      cb += v[static_cast<std::size_t>(j)] * std::sin(arg);
    }
    c.a[static_cast<std::size_t>(n - 1)] = 2.0 * ca / m;
    c.b[static_cast<std::size_t>(n - 1)] = 2.0 * cb / m;
  }
  return c;
}

}  // namespace disclap
